//! Brute-force ground truth over small finite fields.
//!
//! Submodules are enumerated by extending along socle layers: every
//! submodule `U ≠ M` has a cover `U + Kx` with `x + U` in `soc(M/U)`, so a
//! breadth-first search from `0` over such one-step extensions reaches every
//! submodule. Spans are deduplicated by their canonical echelon forms.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, PathAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::ideal::{annihilator_of_element, LeftIdeal};
use crate::matrix::{subspace, Matrix};
use crate::module::{
    hom_space, injective, projective, quotient, regular, simple, socle_spans, submodule, ModuleMorphism,
    Representation,
};
use crate::quotient::{closed_against, is_closed};
use crate::topology::{projective_points, AxiomViolation, GabrielTopology};
use crate::torsion::TorsionPair;

/// Largest total dimension enumerated over `F_p`.
pub fn default_bound(field: Field) -> usize {
    match field.order() {
        Some(2) => 8,
        Some(3) => 6,
        _ => 4,
    }
}

fn check_size(m: &Representation, bound: usize) -> Result<()> {
    if !m.field().is_finite() {
        return Err(Error::NotFiniteField);
    }
    if m.dim() > bound {
        return Err(Error::TooLarge { dim: m.dim(), bound });
    }
    Ok(())
}

type Key = Vec<Matrix>;

fn key_of(spans: &[Matrix]) -> Key {
    spans.iter().map(subspace::canonical).collect()
}

fn sort_key(spans: &[Matrix]) -> (usize, String) {
    (spans.iter().map(Matrix::cols).sum(), format!("{:?}", key_of(spans)))
}

/// One-step extensions `U + Kx` with `x + U ∈ soc(M/U)`.
fn covers(m: &Representation, spans: &[Matrix]) -> Vec<Vec<Matrix>> {
    let field = m.field();
    let q = quotient(m, spans).0;
    let soc = socle_spans(&q);
    let mut out = Vec::new();
    for v in 0..m.dims().len() {
        let s = &soc[v];
        if s.cols() == 0 {
            continue;
        }
        let (section, _) = subspace::quotient(field, m.dims()[v], &spans[v]);
        for y in projective_points(field, s.cols()).into_iter().skip(1) {
            let x = section.mul(&s.mul(&Matrix::column_vector(field, &y)));
            let mut next = spans.to_vec();
            next[v] = Matrix::hstack(field, m.dims()[v], &[&spans[v], &x]).column_basis();
            out.push(next);
        }
    }
    out
}

/// Every submodule of `M` as per-vertex column bases, ordered by dimension
/// and then canonical form.
pub fn enumerate_submodules(m: &Representation) -> Result<Vec<Vec<Matrix>>> {
    enumerate_submodules_bounded(m, default_bound(m.field()))
}

pub fn enumerate_submodules_bounded(m: &Representation, bound: usize) -> Result<Vec<Vec<Matrix>>> {
    check_size(m, bound)?;
    let field = m.field();
    let zero: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(field, d, 0)).collect();
    let mut seen: HashSet<Key> = HashSet::new();
    seen.insert(key_of(&zero));
    let mut all = vec![zero.clone()];
    let mut level = vec![zero];
    while !level.is_empty() {
        let candidates: Vec<Vec<Matrix>> = level.par_iter().flat_map_iter(|u| covers(m, u)).collect();
        let mut next = Vec::new();
        for c in candidates {
            if seen.insert(key_of(&c)) {
                next.push(c);
            }
        }
        next.sort_by_cached_key(|s| sort_key(s));
        all.extend(next.iter().cloned());
        level = next;
    }
    Ok(all)
}

/// All left ideals of `Γ` with the inclusion order.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    pub algebra: Arc<PathAlgebra>,
    pub ideals: Vec<LeftIdeal>,
}

impl IdealLattice {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// `ideals[a] ⊆ ideals[b]`.
    pub fn includes(&self, a: usize, b: usize) -> bool {
        self.ideals[b].contains(&self.ideals[a])
    }

    pub fn position(&self, j: &LeftIdeal) -> Option<usize> {
        self.ideals.iter().position(|i| i == j)
    }

    /// Contains `0` and `Γ`, is closed under sums and intersections, and
    /// every member is a left ideal.
    pub fn is_consistent(&self) -> bool {
        let set: HashSet<&LeftIdeal> = self.ideals.iter().collect();
        set.contains(&LeftIdeal::zero(&self.algebra))
            && set.contains(&LeftIdeal::whole(&self.algebra))
            && self.ideals.iter().all(LeftIdeal::is_left_ideal)
            && self.ideals.iter().all(|a| {
                self.ideals
                    .iter()
                    .all(|b| set.contains(&a.sum(b)) && set.contains(&a.intersection(b)))
            })
    }
}

pub fn enumerate_left_ideals(algebra: &Arc<PathAlgebra>) -> Result<IdealLattice> {
    let reg = regular(algebra);
    let ideals = enumerate_submodules(&reg)?
        .iter()
        .map(|spans| LeftIdeal::from_regular_spans(algebra, spans))
        .collect();
    Ok(IdealLattice {
        algebra: algebra.clone(),
        ideals,
    })
}

fn hom_vanishes(a: &Representation, b: &Representation) -> Result<bool> {
    Ok(hom_space(a, b)?.is_empty())
}

/// The sum of all submodules `U` with `Hom(U, E) = 0`.
pub fn brute_torsion_submodule(pair: &TorsionPair, m: &Representation) -> Result<(Representation, ModuleMorphism)> {
    let field = m.field();
    let mut acc: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(field, d, 0)).collect();
    for spans in enumerate_submodules(m)? {
        let (u, _) = submodule(m, &spans);
        if hom_vanishes(&u, pair.cogenerator())? {
            for v in 0..acc.len() {
                acc[v] = subspace::sum(field, m.dims()[v], &acc[v], &spans[v]);
            }
        }
    }
    Ok(submodule(m, &acc))
}

/// Every vector of the span of `basis` over a finite field.
fn span_elements(field: Field, len: usize, basis: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut out = vec![vec![field.zero(); len]];
    for b in basis {
        out = out
            .iter()
            .flat_map(|x| {
                field.elements().into_iter().map(move |c| {
                    x.iter().zip(b).map(|(xi, bi)| xi + &(&c * bi)).collect::<Vec<Scalar>>()
                })
            })
            .collect();
    }
    out
}

fn algebra_elements(algebra: &PathAlgebra) -> Vec<AlgebraElement> {
    let field = algebra.field();
    let basis: Vec<Vec<Scalar>> = (0..algebra.dim()).map(|u| algebra.basis_element(u).0).collect();
    span_elements(field, algebra.dim(), &basis).into_iter().map(AlgebraElement).collect()
}

fn ideal_elements(j: &LeftIdeal) -> Vec<AlgebraElement> {
    let alg = j.algebra();
    let basis: Vec<Vec<Scalar>> = j.basis().into_iter().map(|x| x.0).collect();
    span_elements(alg.field(), alg.dim(), &basis).into_iter().map(AlgebraElement).collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BruteAxiomReport {
    pub ideals: usize,
    pub members: usize,
    pub violations: Vec<AxiomViolation>,
    /// T4 over all elements and over a basis flag the same ideals.
    pub t4_spanning_agrees: bool,
}

impl BruteAxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.t4_spanning_agrees
    }
}

/// T1–T4 for an explicit set of left ideals, quantifying over every element
/// of `Γ` (T3) and of the witnessing ideal (T4).
pub fn brute_axioms(lattice: &IdealLattice, members: &[LeftIdeal]) -> BruteAxiomReport {
    let alg = &lattice.algebra;
    let set: HashSet<&LeftIdeal> = members.iter().collect();
    let is_member = |j: &LeftIdeal| set.contains(j);
    let mut violations = Vec::new();
    let mut flag = |axiom: &str, witness: String| {
        violations.push(AxiomViolation {
            axiom: axiom.to_string(),
            witness,
        })
    };
    let elements = algebra_elements(alg);
    for i in members {
        // report the largest missing overideal
        let missing = lattice
            .ideals
            .iter()
            .filter(|j| j.contains(i) && !is_member(j))
            .max_by_key(|j| j.dim());
        if let Some(j) = missing {
            flag("T1", format!("I = {i}, J = {j}"));
        }
        for j in members {
            if !is_member(&i.intersection(j)) {
                flag("T2", format!("I = {i}, J = {j}"));
            }
        }
        if let Some(g) = elements.iter().find(|g| !is_member(&i.ideal_quotient(g))) {
            flag("T3", format!("I = {i}, gamma = {:?}", g.0.iter().map(ToString::to_string).collect::<Vec<_>>()));
        }
    }
    let member_elements: Vec<Vec<AlgebraElement>> = members.iter().map(ideal_elements).collect();
    let mut literal = Vec::new();
    let mut spanning = Vec::new();
    for i in lattice.ideals.iter().filter(|i| !is_member(i)) {
        for (j, elems) in members.iter().zip(&member_elements) {
            if elems.iter().all(|x| is_member(&i.ideal_quotient(x))) {
                literal.push(format!("I = {i}, J = {j}"));
            }
            if j.basis().iter().all(|x| is_member(&i.ideal_quotient(x))) {
                spanning.push(format!("I = {i}, J = {j}"));
            }
        }
    }
    let t4_spanning_agrees = literal == spanning;
    for w in literal {
        flag("T4", w);
    }
    BruteAxiomReport {
        ideals: lattice.len(),
        members: members.len(),
        violations,
        t4_spanning_agrees,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MarandaReport {
    pub ideals: usize,
    /// `|{J : Γ/J torsion}|`.
    pub topology_size: usize,
    /// `|{J : J ⊇ J0}|`.
    pub overideals_of_j0: usize,
    /// The two sets coincide.
    pub topology_is_filter_of_j0: bool,
    /// The least member equals `J0`.
    pub minimum_is_j0: bool,
    pub universe: usize,
    pub torsion_agrees: bool,
    pub torsionfree_agrees: bool,
    pub witness: Option<String>,
}

impl MarandaReport {
    pub fn identity(&self) -> bool {
        self.topology_is_filter_of_j0 && self.minimum_is_j0 && self.torsion_agrees && self.torsionfree_agrees
    }
}

/// The torsion class cogenerated by `E`, pushed through `𝔊 = {J : Γ/J
/// torsion}` and back via annihilators of elements, on the quotients of the
/// indecomposable projectives and injectives, the simples and all `Γ/J`.
pub fn maranda_roundtrip(topology: &GabrielTopology, lattice: &IdealLattice) -> Result<MarandaReport> {
    let alg = topology.algebra();
    let e = topology.pair().cogenerator();
    let mut g: Vec<LeftIdeal> = Vec::new();
    for j in &lattice.ideals {
        if hom_vanishes(&j.quotient_module().0, e)? {
            g.push(j.clone());
        }
    }
    let overideals: Vec<&LeftIdeal> = lattice.ideals.iter().filter(|j| j.contains(topology.j0())).collect();
    let topology_is_filter_of_j0 = g.len() == overideals.len() && overideals.iter().all(|j| g.contains(j));
    let minimum = g
        .iter()
        .fold(LeftIdeal::whole(alg), |acc, j| acc.intersection(j));
    let minimum_is_j0 = &minimum == topology.j0() && g.contains(&minimum);

    let members: HashSet<&LeftIdeal> = g.iter().collect();
    let mut universe: Vec<(String, Representation)> = Vec::new();
    for v in 0..alg.vertex_count() {
        for (label, m) in [("P", projective(alg, v)), ("I", injective(alg, v))] {
            for spans in enumerate_submodules(&m)? {
                universe.push((format!("{label}({})/U", v + 1), quotient(&m, &spans).0));
            }
        }
        universe.push((format!("S({})", v + 1), simple(alg, v)));
    }
    for j in &lattice.ideals {
        universe.push((format!("Γ/{j}"), j.quotient_module().0));
    }
    let mut torsion_agrees = true;
    let mut torsionfree_agrees = true;
    let mut witness = None;
    for (name, x) in &universe {
        let elems = x.all_elements()?;
        let mut all_discrete = true;
        let mut some_discrete = false;
        for el in &elems {
            let discrete = members.contains(&annihilator_of_element(x, el)?);
            all_discrete &= discrete;
            if discrete && el.iter().any(|c| !c.is_zero()) {
                some_discrete = true;
            }
        }
        let torsion = hom_vanishes(x, e)?;
        let torsionfree = topology.pair().torsion_submodule(x)?.torsion.is_zero();
        if torsion != all_discrete {
            torsion_agrees = false;
            witness.get_or_insert_with(|| format!("{name}: torsion {torsion}, discrete {all_discrete}"));
        }
        if torsionfree == some_discrete {
            torsionfree_agrees = false;
            witness.get_or_insert_with(|| format!("{name}: torsion-free {torsionfree}"));
        }
    }
    Ok(MarandaReport {
        ideals: lattice.len(),
        topology_size: g.len(),
        overideals_of_j0: overideals.len(),
        topology_is_filter_of_j0,
        minimum_is_j0,
        universe: universe.len(),
        torsion_agrees,
        torsionfree_agrees,
        witness,
    })
}

/// Closedness at `J0` against closedness for every dense ideal of the lattice.
pub fn closedness_against_all_dense(
    topology: &GabrielTopology,
    lattice: &IdealLattice,
    m: &Representation,
) -> Result<bool> {
    let at_j0 = is_closed(topology, m)?.closed;
    let mut all = true;
    for j in lattice.ideals.iter().filter(|j| topology.is_dense(j)) {
        all &= closed_against(&j.quotient_module().0, m)?;
    }
    Ok(at_j0 == all)
}
