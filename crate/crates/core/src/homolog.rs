//! Projective covers, injective envelopes, minimal resolutions, `Ext`, and the
//! homological dimensions built from them.
//!
//! Dimensions that may be infinite are computed up to a resolution cap: if
//! the minimal resolution has not stopped after `cap` terms the value is
//! reported as `AtLeast(cap)`. Dominant dimension is the one value that can be
//! certified infinite, because the injective resolution of `Γ` stops with
//! only projective terms exactly when `Γ` is injective.

use std::fmt;
use std::sync::Arc;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{subspace, Matrix};
use crate::module::{
    cokernel, direct_sum, hom_space, injective, is_injective, is_projective, kernel, projective,
    projective_layout, radical_spans, regular, socle_multiplicities, socle_spans, ModuleMorphism,
    Representation,
};

/// Default number of resolution terms computed before giving up.
pub const DEFAULT_CAP: usize = 64;

/// A homological dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dimension {
    Finite(usize),
    /// Not decided: the resolution was still running after this many terms.
    AtLeast(usize),
    Infinite,
}

impl Dimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::Finite(d) => Some(d),
            _ => None,
        }
    }

    /// `self <= k`, if decidable.
    pub fn at_most(self, k: usize) -> Option<bool> {
        match self {
            Dimension::Finite(d) => Some(d <= k),
            Dimension::AtLeast(c) if c > k => Some(false),
            Dimension::AtLeast(_) => None,
            Dimension::Infinite => Some(false),
        }
    }

    /// `self >= k`, if decidable.
    pub fn at_least(self, k: usize) -> Option<bool> {
        match self {
            Dimension::Finite(d) => Some(d >= k),
            Dimension::AtLeast(c) if c >= k => Some(true),
            Dimension::AtLeast(_) => None,
            Dimension::Infinite => Some(true),
        }
    }

    /// Maximum, where undecided values dominate finite ones.
    pub fn max(self, other: Dimension) -> Dimension {
        use Dimension::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (AtLeast(a), AtLeast(b)) => AtLeast(a.max(b)),
            (AtLeast(a), Finite(b)) | (Finite(b), AtLeast(a)) => AtLeast(a.max(b)),
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::AtLeast(c) => write!(f, ">={c}"),
            Dimension::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Dimension::Finite(d) => s.serialize_u64(*d as u64),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Dimension, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Dimension;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "an integer, \"inf\" or \">=N\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Dimension, E> {
                Ok(Dimension::Finite(v as usize))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Dimension, E> {
                if v == "inf" {
                    return Ok(Dimension::Infinite);
                }
                v.strip_prefix(">=")
                    .and_then(|n| n.parse().ok())
                    .map(Dimension::AtLeast)
                    .ok_or_else(|| E::custom(format!("bad dimension `{v}`")))
            }
        }
        d.deserialize_any(V)
    }
}

/// A projective cover `⊕ P(v_g) ↠ M` together with the vertex of each summand.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub map: ModuleMorphism,
    pub generators: Vec<usize>,
}

/// An injective envelope `M ↪ ⊕ I(v_g)` together with the socle label of each summand.
#[derive(Debug, Clone)]
pub struct InjectiveEnvelope {
    pub map: ModuleMorphism,
    pub labels: Vec<usize>,
}

fn sum_of(algebra: &Arc<PathAlgebra>, parts: Vec<Representation>) -> Representation {
    if parts.is_empty() {
        Representation::zero(algebra)
    } else {
        let refs: Vec<&Representation> = parts.iter().collect();
        direct_sum(&refs)
    }
}

/// Offsets of each summand `P(v_g)` at vertex `w` inside `⊕ P(v_g)`.
fn summand_offsets(algebra: &PathAlgebra, generators: &[usize], w: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(generators.len());
    let mut acc = 0;
    for &g in generators {
        out.push(acc);
        acc += projective_layout(algebra, g)[w].len();
    }
    out
}

/// Lifts a basis of `top(M)` (standard-vector complements of the radical) and
/// sends each path `p ∈ P(v)` to `p·x`.
pub fn projective_cover(m: &Representation) -> ProjectiveCover {
    let alg = m.algebra();
    let field = m.field();
    let k = alg.vertex_count();
    let rad = radical_spans(m);
    let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for v in 0..k {
        let c = subspace::complement(field, m.dims()[v], &rad[v]);
        for col in 0..c.cols() {
            gens.push((v, c.column(col)));
        }
    }
    let generators: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let cover = sum_of(alg, generators.iter().map(|&v| projective(alg, v)).collect());
    let maps = (0..k)
        .map(|w| {
            let mut cols: Vec<Vec<Scalar>> = Vec::new();
            for (v, x) in &gens {
                for &u in &projective_layout(alg, *v)[w] {
                    let image = m.act_basis(u, &m.embed(*v, x));
                    cols.push(m.component(&image, w));
                }
            }
            Matrix::from_columns(field, m.dims()[w], &cols)
        })
        .collect();
    ProjectiveCover {
        map: ModuleMorphism::from_parts(cover, m.clone(), maps),
        generators,
    }
}

/// `E(M) = ⊕ I(i)^{s_i}`; the embedding is the element of `Hom(M, E)` whose
/// restriction to `soc M` is a fixed isomorphism `soc M → soc E`.
pub fn injective_envelope(m: &Representation) -> InjectiveEnvelope {
    let alg = m.algebra();
    let field = m.field();
    let k = alg.vertex_count();
    let socle_mult = socle_multiplicities(m);
    let labels: Vec<usize> = (0..k).flat_map(|v| std::iter::repeat_n(v, socle_mult[v])).collect();
    let env = sum_of(alg, labels.iter().map(|&v| injective(alg, v)).collect());
    if m.is_zero() {
        return InjectiveEnvelope {
            map: ModuleMorphism::zero(m, &env),
            labels,
        };
    }
    let soc_m = socle_spans(m);
    let soc_e = socle_spans(&env);
    let basis = hom_space(m, &env).expect("same algebra");
    // unknown coefficients c_b with Σ c_b f_b|soc = chosen iso, vertex by vertex
    let mut lhs_rows: Vec<Vec<Scalar>> = Vec::new();
    let mut rhs: Vec<Scalar> = Vec::new();
    for v in 0..k {
        let target = &soc_e[v];
        let restricted: Vec<Matrix> = basis.iter().map(|f| f.map(v).mul(&soc_m[v])).collect();
        for r in 0..env.dims()[v] {
            for c in 0..soc_m[v].cols() {
                lhs_rows.push(restricted.iter().map(|x| x.get(r, c).clone()).collect());
                rhs.push(target.get(r, c).clone());
            }
        }
    }
    let lhs = Matrix::from_rows(field, basis.len(), &lhs_rows);
    let coeffs = lhs
        .solve(&Matrix::column_vector(field, &rhs))
        .expect("a socle isomorphism extends to an injective envelope");
    let mut map = ModuleMorphism::zero(m, &env);
    for (b, f) in basis.iter().enumerate() {
        let c = coeffs.get(b, 0);
        if !c.is_zero() {
            map = map.add(&f.scale(c));
        }
    }
    InjectiveEnvelope { map, labels }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Projective,
    Injective,
}

/// A minimal projective or injective resolution, possibly truncated at `cap`.
///
/// Projective: `maps[0]: P_0 → M`, `maps[i]: P_i → P_{i-1}`.
/// Injective: `maps[0]: M → I^0`, `maps[i]: I^{i-1} → I^i`.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub direction: Direction,
    pub module: Representation,
    pub terms: Vec<Representation>,
    /// Generator vertices (projective) or socle labels (injective) per term.
    pub labels: Vec<Vec<usize>>,
    pub maps: Vec<ModuleMorphism>,
    pub minimal: bool,
    pub terminated: bool,
    pub cap: usize,
}

impl Resolution {
    /// pd or id as read off this resolution.
    pub fn length(&self) -> Dimension {
        if self.terminated {
            Dimension::Finite(self.terms.len().saturating_sub(1))
        } else {
            Dimension::AtLeast(self.cap)
        }
    }
}

pub fn minimal_resolution(m: &Representation, direction: Direction, cap: usize) -> Resolution {
    let mut terms = Vec::new();
    let mut labels = Vec::new();
    let mut maps: Vec<ModuleMorphism> = Vec::new();
    let mut current = m.clone();
    // map from the current (co)syzygy back into the previous term
    let mut link: Option<ModuleMorphism> = None;
    for _ in 0..cap {
        if current.is_zero() {
            break;
        }
        match direction {
            Direction::Projective => {
                let cover = projective_cover(&current);
                let d = match &link {
                    Some(incl) => incl.compose(&cover.map),
                    None => cover.map.clone(),
                };
                let (syz, incl) = kernel(&cover.map);
                terms.push(cover.map.source().clone());
                labels.push(cover.generators);
                maps.push(d);
                current = syz;
                link = Some(incl);
            }
            Direction::Injective => {
                let env = injective_envelope(&current);
                let d = match &link {
                    Some(proj) => env.map.compose(proj),
                    None => env.map.clone(),
                };
                let (cosyz, proj) = cokernel(&env.map);
                terms.push(env.map.target().clone());
                labels.push(env.labels);
                maps.push(d);
                current = cosyz;
                link = Some(proj);
            }
        }
    }
    Resolution {
        direction,
        module: m.clone(),
        terms,
        labels,
        maps,
        minimal: true,
        terminated: current.is_zero(),
        cap,
    }
}

/// Matrix of `δ: Hom(P_{i-1}, N) → Hom(P_i, N)`, `f ↦ f ∘ d_i`, in the
/// coordinates `Hom(⊕P(v_g), N) ≅ ⊕ N_{v_g}` given by evaluation at the
/// generators.
fn hom_differential(
    algebra: &PathAlgebra,
    prev: &[usize],
    next: &[usize],
    d: &ModuleMorphism,
    n: &Representation,
) -> Matrix {
    let field = n.field();
    let col_off: Vec<usize> = prev
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += n.dims()[v];
            Some(o)
        })
        .collect();
    let row_off: Vec<usize> = next
        .iter()
        .scan(0, |acc, &v| {
            let o = *acc;
            *acc += n.dims()[v];
            Some(o)
        })
        .collect();
    let cols: usize = prev.iter().map(|&v| n.dims()[v]).sum();
    let rows: usize = next.iter().map(|&v| n.dims()[v]).sum();
    let mut out = Matrix::zeros(field, rows, cols);
    for (gp, &w) in next.iter().enumerate() {
        // the generator e_w of summand gp of P_i, as a vector of (P_i)_w
        let src_off = summand_offsets(algebra, next, w)[gp];
        let trivial_pos = projective_layout(algebra, w)[w]
            .iter()
            .position(|&u| algebra.basis()[u].arrows.is_empty())
            .expect("trivial path lies in P(w)");
        let mut unit = vec![field.zero(); d.source().dims()[w]];
        unit[src_off + trivial_pos] = field.one();
        let image = d.map(w).mul_vec(&unit);
        let dst_offsets = summand_offsets(algebra, prev, w);
        for (g, &v) in prev.iter().enumerate() {
            let layout = &projective_layout(algebra, v)[w];
            let mut block = Matrix::zeros(field, n.dims()[w], n.dims()[v]);
            for (idx, &u) in layout.iter().enumerate() {
                let c = &image[dst_offsets[g] + idx];
                if !c.is_zero() {
                    block = block.add(&n.path_action(&algebra.basis()[u]).scale(c));
                }
            }
            for r in 0..block.rows() {
                for c in 0..block.cols() {
                    out.set(row_off[gp] + r, col_off[g] + c, block.get(r, c).clone());
                }
            }
        }
    }
    out
}

/// `dim Ext^i(M, N)` for `i = 0..=max_degree`, from one projective resolution of `M`.
pub fn ext_dims(m: &Representation, n: &Representation, max_degree: usize) -> Result<Vec<usize>> {
    if !crate::module::same_algebra(m.algebra(), n.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let alg = m.algebra();
    let res = minimal_resolution(m, Direction::Projective, max_degree + 2);
    let gens = |i: usize| -> &[usize] { res.labels.get(i).map_or(&[], |g| g.as_slice()) };
    let hom_dim = |i: usize| -> usize { gens(i).iter().map(|&v| n.dims()[v]).sum() };
    // rank of δ into degree i (from degree i-1)
    let rank_into = |i: usize| -> usize {
        if i == 0 || i >= res.terms.len() {
            return 0;
        }
        hom_differential(alg, gens(i - 1), gens(i), &res.maps[i], n).rank()
    };
    Ok((0..=max_degree)
        .map(|i| hom_dim(i) - rank_into(i) - rank_into(i + 1))
        .collect())
}

pub fn ext_dim(m: &Representation, n: &Representation, degree: usize) -> Result<usize> {
    Ok(ext_dims(m, n, degree)?[degree])
}

pub fn pd(m: &Representation, cap: usize) -> Dimension {
    minimal_resolution(m, Direction::Projective, cap + 1).length_capped(cap)
}

pub fn id(m: &Representation, cap: usize) -> Dimension {
    minimal_resolution(m, Direction::Injective, cap + 1).length_capped(cap)
}

impl Resolution {
    /// With `cap + 1` terms computed, a resolution that did not stop has length
    /// at least `cap`.
    fn length_capped(&self, cap: usize) -> Dimension {
        if self.terminated {
            Dimension::Finite(self.terms.len().saturating_sub(1))
        } else {
            Dimension::AtLeast(cap)
        }
    }
}

pub fn gldim(algebra: &Arc<PathAlgebra>, cap: usize) -> Dimension {
    (0..algebra.vertex_count())
        .map(|v| pd(&crate::module::simple(algebra, v), cap))
        .fold(Dimension::Finite(0), Dimension::max)
}

/// Injective dimension of `Γ` as a left module.
pub fn id_left(algebra: &Arc<PathAlgebra>, cap: usize) -> Dimension {
    id(&regular(algebra), cap)
}

/// Injective dimension of `Γ` as a right module, i.e. over the opposite algebra.
pub fn id_right(algebra: &Arc<PathAlgebra>, cap: usize) -> Dimension {
    id(&regular(&algebra.opposite()), cap)
}

/// Number of leading projective terms in the minimal injective resolution of `Γ`.
pub fn domdim(algebra: &Arc<PathAlgebra>, cap: usize) -> Dimension {
    let res = minimal_resolution(&regular(algebra), Direction::Injective, cap);
    match res.terms.iter().position(|t| !is_projective(t)) {
        Some(k) => Dimension::Finite(k),
        None if res.terminated => Dimension::Infinite,
        None => Dimension::AtLeast(res.terms.len()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub id_left: Dimension,
    pub id_right: Dimension,
    /// `Some(g)` when both sides are finite (and then equal to `g`).
    pub bound: Option<usize>,
}

pub fn iwanaga_gorenstein(algebra: &Arc<PathAlgebra>, cap: usize) -> GorensteinReport {
    let l = id_left(algebra, cap);
    let r = id_right(algebra, cap);
    let bound = match (l, r) {
        (Dimension::Finite(a), Dimension::Finite(b)) => Some(a.max(b)),
        _ => None,
    };
    GorensteinReport {
        id_left: l,
        id_right: r,
        bound,
    }
}

/// A verified Iwanaga-Gorenstein algebra with self-injective dimension `g`.
#[derive(Debug, Clone)]
pub struct Gorenstein {
    algebra: Arc<PathAlgebra>,
    g: usize,
    regular: Representation,
}

impl Gorenstein {
    pub fn certify(algebra: &Arc<PathAlgebra>, cap: usize) -> Result<Gorenstein> {
        let report = iwanaga_gorenstein(algebra, cap);
        let g = report.bound.ok_or(Error::NotGorenstein { cap })?;
        Ok(Gorenstein {
            algebra: algebra.clone(),
            g,
            regular: regular(algebra),
        })
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    /// The self-injective dimension, equal to `Ggldim Γ`.
    pub fn bound(&self) -> usize {
        self.g
    }

    pub fn ggldim(&self) -> usize {
        self.g
    }

    /// Gorenstein projective dimension via the grade formula
    /// `sup{i ∈ [1, g] : Ext^i(M, Γ) ≠ 0}`, or 0.
    pub fn gpd(&self, m: &Representation) -> Result<usize> {
        if self.g == 0 {
            return Ok(0);
        }
        let ext = ext_dims(m, &self.regular, self.g)?;
        Ok((1..=self.g).rev().find(|&i| ext[i] != 0).unwrap_or(0))
    }
}

/// Which half of the characterisation of `n`-minimal Auslander-Gorenstein
/// algebras holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MinAgBranch {
    SelfInjective,
    /// `id Γ = n+1 = domdim Γ`.
    Tight,
}

fn undecided(cap: usize, what: &str) -> Error {
    Error::UndecidedAtCap {
        cap,
        what: what.to_string(),
    }
}

/// `gldim Γ ≤ n+1 ≤ domdim Γ`.
pub fn is_n_auslander(algebra: &Arc<PathAlgebra>, n: usize, cap: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::BadParameters("n must be at least 1".into()));
    }
    let gl = gldim(algebra, cap).at_most(n + 1);
    let dd = domdim(algebra, cap).at_least(n + 1);
    match (gl, dd) {
        (Some(false), _) | (_, Some(false)) => Ok(false),
        (Some(true), Some(true)) => Ok(true),
        _ => Err(undecided(cap, "gldim or domdim")),
    }
}

/// `id Γ ≤ n+1 ≤ domdim Γ`; `Ok(None)` when it fails.
pub fn min_ag_branch(algebra: &Arc<PathAlgebra>, n: usize, cap: usize) -> Result<Option<MinAgBranch>> {
    if n == 0 {
        return Err(Error::BadParameters("n must be at least 1".into()));
    }
    let injdim = id_left(algebra, cap);
    let dd = domdim(algebra, cap);
    match (injdim.at_most(n + 1), dd.at_least(n + 1)) {
        (Some(false), _) | (_, Some(false)) => Ok(None),
        (Some(true), Some(true)) => {
            if injdim == Dimension::Finite(0) {
                Ok(Some(MinAgBranch::SelfInjective))
            } else {
                Ok(Some(MinAgBranch::Tight))
            }
        }
        _ => Err(undecided(cap, "id or domdim")),
    }
}

pub fn is_n_min_ag(algebra: &Arc<PathAlgebra>, n: usize, cap: usize) -> Result<bool> {
    Ok(min_ag_branch(algebra, n, cap)?.is_some())
}

/// `Q`: the sum of the indecomposable injectives that are projective, with
/// their socle labels.
pub fn max_injective_summand_q(algebra: &Arc<PathAlgebra>) -> (Representation, Vec<usize>) {
    let labels: Vec<usize> = (0..algebra.vertex_count())
        .filter(|&v| is_projective(&injective(algebra, v)))
        .collect();
    let q = sum_of(algebra, labels.iter().map(|&v| injective(algebra, v)).collect());
    (q, labels)
}

/// Membership in `Add(Q)`: projective and injective.
pub fn add_q_member(m: &Representation) -> bool {
    is_projective(m) && is_injective(m)
}

/// A verified `n`-minimal Auslander-Gorenstein algebra.
#[derive(Debug, Clone)]
pub struct HigherAg {
    gorenstein: Gorenstein,
    n: usize,
    branch: MinAgBranch,
}

impl HigherAg {
    pub fn certify(algebra: &Arc<PathAlgebra>, n: usize, cap: usize) -> Result<HigherAg> {
        let branch = min_ag_branch(algebra, n, cap)?.ok_or(Error::NotHigherAG { n })?;
        let gorenstein = Gorenstein::certify(algebra, cap)?;
        Ok(HigherAg { gorenstein, n, branch })
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        self.gorenstein.algebra()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn branch(&self) -> MinAgBranch {
        self.branch
    }

    pub fn gorenstein(&self) -> &Gorenstein {
        &self.gorenstein
    }

    pub fn gpd(&self, m: &Representation) -> Result<usize> {
        self.gorenstein.gpd(m)
    }

    /// Membership in `Sub²(Q)`: `E(M)` and `E(E(M)/M)` are both projective.
    pub fn sub2_q_member(&self, m: &Representation) -> bool {
        sub2_q_test(m)
    }
}

/// The copresentation test behind `Sub²(Q)`, without the algebra precondition.
pub fn sub2_q_test(m: &Representation) -> bool {
    let env = injective_envelope(m);
    if !is_projective(env.map.target()) {
        return false;
    }
    let (c, _) = cokernel(&env.map);
    let env2 = injective_envelope(&c);
    is_projective(env2.map.target())
}

/// An interval `min..=max` of parameters (`max = None`: unbounded).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub min: usize,
    pub max: Option<usize>,
}

impl NRange {
    pub fn contains(&self, n: usize) -> bool {
        n >= self.min && self.max.is_none_or(|m| n <= m)
    }
}

impl Serialize for NRange {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wide {
            min: usize,
            max: Option<usize>,
        }
        if self.max == Some(self.min) {
            s.serialize_u64(self.min as u64)
        } else {
            Wide { min: self.min, max: self.max }.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for NRange {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<NRange, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Exact(usize),
            Wide { min: usize, max: Option<usize> },
        }
        Ok(match Repr::deserialize(d)? {
            Repr::Exact(n) => NRange { min: n, max: Some(n) },
            Repr::Wide { min, max } => NRange { min, max },
        })
    }
}

/// `{n >= 1 : upper <= n+1 <= lower}` for a pair of dimensions, when decided.
fn n_window(upper: Dimension, lower: Dimension) -> Option<Option<NRange>> {
    let up = upper.finite()?;
    let max = match lower {
        Dimension::Finite(d) => Some(d.checked_sub(1)?),
        Dimension::Infinite => None,
        Dimension::AtLeast(_) => return None,
    };
    let min = up.saturating_sub(1).max(1);
    if max.is_some_and(|m| m < min) {
        return Some(None);
    }
    Some(Some(NRange { min, max }))
}

/// The homological summary of an algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalProfile {
    pub dim: usize,
    pub vertices: usize,
    pub gldim: Dimension,
    pub id_left: Dimension,
    pub id_right: Dimension,
    pub domdim: Dimension,
    pub ggldim: Dimension,
    pub iwanaga_gorenstein: bool,
    pub self_injective: bool,
    /// Parameters `n` for which the algebra is `n`-Auslander.
    pub n_auslander: Option<NRange>,
    /// Parameters `n` for which the algebra is `n`-minimal Auslander-Gorenstein.
    pub n_min_ag: Option<NRange>,
    /// 1-based socle labels of the projective-injective indecomposables.
    pub q_summand: Vec<usize>,
    /// Quantities that hit the resolution cap.
    pub undecided: Vec<String>,
}

pub fn homological_profile(algebra: &Arc<PathAlgebra>, cap: usize) -> HomologicalProfile {
    let gl = gldim(algebra, cap);
    let ig = iwanaga_gorenstein(algebra, cap);
    let dd = domdim(algebra, cap);
    let mut undecided = Vec::new();
    for (name, d) in [("gldim", gl), ("id_left", ig.id_left), ("id_right", ig.id_right), ("domdim", dd)] {
        if matches!(d, Dimension::AtLeast(_)) {
            undecided.push(name.to_string());
        }
    }
    let n_auslander = n_window(gl, dd).unwrap_or_else(|| {
        undecided.push("n_auslander".into());
        None
    });
    let n_min_ag = n_window(ig.id_left, dd).unwrap_or_else(|| {
        undecided.push("n_min_ag".into());
        None
    });
    let ggldim = match ig.bound {
        Some(g) => Dimension::Finite(g),
        None => ig.id_left.max(ig.id_right),
    };
    HomologicalProfile {
        dim: algebra.dim(),
        vertices: algebra.vertex_count(),
        gldim: gl,
        id_left: ig.id_left,
        id_right: ig.id_right,
        domdim: dd,
        ggldim,
        iwanaga_gorenstein: ig.bound.is_some(),
        self_injective: ig.id_left == Dimension::Finite(0),
        n_auslander,
        n_min_ag,
        q_summand: max_injective_summand_q(algebra).1.iter().map(|v| v + 1).collect(),
        undecided,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{example211, loop_truncated, semisimple};
    use crate::field::Field;
    use crate::module::simple;

    fn alg(n: usize) -> Arc<PathAlgebra> {
        Arc::new(example211(n, Field::Rational).unwrap())
    }

    #[test]
    fn cover_of_a_simple() {
        let a = alg(1);
        let c = projective_cover(&simple(&a, 0));
        assert_eq!(c.generators, vec![0]);
        assert!(c.map.is_surjective());
        assert_eq!(kernel(&c.map).0.dims(), &[0, 1, 0]);
        let p = projective(&a, 1);
        assert!(projective_cover(&p).map.is_isomorphism());
        assert!(projective_cover(&Representation::zero(&a)).generators.is_empty());
    }

    #[test]
    fn envelope_of_regular() {
        let a = alg(1);
        let e = injective_envelope(&regular(&a));
        assert!(e.map.is_injective());
        assert_eq!(e.labels, vec![1, 2, 2]);
        let e2 = injective_envelope(&simple(&a, 1));
        assert_eq!(e2.map.target().dims(), projective(&a, 0).dims());
        let i1 = injective(&a, 2);
        assert!(injective_envelope(&i1).map.is_isomorphism());
    }

    #[test]
    fn resolution_of_s1() {
        let a = alg(1);
        let r = minimal_resolution(&simple(&a, 0), Direction::Projective, 10);
        assert!(r.terminated);
        assert_eq!(r.labels, vec![vec![0], vec![1], vec![2]]);
        for w in r.maps.windows(2) {
            assert!(w[0].compose(&w[1]).is_zero());
        }
    }

    #[test]
    fn ext_examples() {
        let a = alg(1);
        assert_eq!(ext_dim(&simple(&a, 0), &simple(&a, 1), 1).unwrap(), 1);
        assert_eq!(ext_dim(&simple(&a, 0), &regular(&a), 2).unwrap(), 1);
        assert_eq!(ext_dims(&projective(&a, 0), &regular(&a), 3).unwrap()[1..], [0, 0, 0]);
        assert_eq!(ext_dim(&simple(&a, 1), &simple(&a, 1), 0).unwrap(), 1);
    }

    #[test]
    fn dimensions_of_example_family() {
        for n in 1..=3 {
            let a = alg(n);
            assert_eq!(gldim(&a, 20), Dimension::Finite(n + 1));
            assert_eq!(domdim(&a, 20), Dimension::Finite(n + 1));
            assert!(is_n_auslander(&a, n, 20).unwrap());
            assert_eq!(min_ag_branch(&a, n, 20).unwrap(), Some(MinAgBranch::Tight));
        }
    }

    #[test]
    fn trivial_families() {
        let s = Arc::new(semisimple(2, Field::Rational).unwrap());
        assert_eq!(gldim(&s, 8), Dimension::Finite(0));
        assert_eq!(domdim(&s, 8), Dimension::Infinite);
        assert!(is_n_auslander(&s, 3, 8).unwrap());
        let l = Arc::new(loop_truncated(2, Field::Rational).unwrap());
        assert_eq!(pd(&simple(&l, 0), 6), Dimension::AtLeast(6));
        assert_eq!(domdim(&l, 6), Dimension::Infinite);
        assert_eq!(min_ag_branch(&l, 5, 6).unwrap(), Some(MinAgBranch::SelfInjective));
        let g = Gorenstein::certify(&l, 6).unwrap();
        assert_eq!(g.bound(), 0);
        assert_eq!(g.gpd(&simple(&l, 0)).unwrap(), 0);
    }

    #[test]
    fn gpd_and_q_for_n1() {
        let a = alg(1);
        let h = HigherAg::certify(&a, 1, 20).unwrap();
        assert_eq!(h.gpd(&simple(&a, 0)).unwrap(), 2);
        assert_eq!(h.gpd(&simple(&a, 1)).unwrap(), 1);
        assert_eq!(h.gpd(&projective(&a, 2)).unwrap(), 0);
        let (q, labels) = max_injective_summand_q(&a);
        assert_eq!(labels, vec![1, 2]);
        assert_eq!(q.dims(), &[1, 2, 1]);
        assert!(add_q_member(&projective(&a, 0)));
        assert!(!add_q_member(&projective(&a, 2)));
        assert!(h.sub2_q_member(&projective(&a, 2)));
        assert!(!h.sub2_q_member(&simple(&a, 1)));
        assert!(matches!(HigherAg::certify(&a, 2, 20), Err(Error::NotHigherAG { n: 2 })));
    }

    #[test]
    fn dimension_serialization() {
        for d in [Dimension::Finite(3), Dimension::AtLeast(64), Dimension::Infinite] {
            let s = serde_json::to_string(&d).unwrap();
            assert_eq!(serde_json::from_str::<Dimension>(&s).unwrap(), d);
        }
        assert_eq!(serde_json::to_string(&Dimension::AtLeast(64)).unwrap(), "\">=64\"");
        let r = NRange { min: 2, max: Some(2) };
        assert_eq!(serde_json::to_string(&r).unwrap(), "2");
        let w = NRange { min: 1, max: None };
        assert_eq!(serde_json::from_str::<NRange>(&serde_json::to_string(&w).unwrap()).unwrap(), w);
    }
}
