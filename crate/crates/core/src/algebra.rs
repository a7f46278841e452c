//! Quivers, admissible relations and the finite-dimensional quotient `KQ/I`.
//!
//! Conventions used throughout the crate:
//!
//! * vertices are `0..k` internally and printed `1..=k`;
//! * a path is listed in traversal order, so `a*b` means "`a` first, then `b`";
//! * an arrow `a: i -> j` acts on a representation by a `d_j x d_i` matrix and
//!   the path `a_1*...*a_k` acts by `M_{a_k} ... M_{a_1}`;
//! * consequently the algebra product `x·y` is "`y` first, then `x`", i.e. the
//!   path `p = a_1*...*a_k` is the product `a_k ··· a_1`, and `Γe_i` (paths
//!   starting at `i`) is the projective `P(i)` while `e_iΓ` (paths ending at `i`)
//!   is the vertex-`i` space of the regular module.
//!
//! The basis of `KQ/I` is built degreewise without Gröbner bases: because the
//! ideal is admissible there is a bound `L` with every path of length `L` in
//! `I`, and the quotient is the truncated path space modulo the span of the
//! truncated multiples `p·r·q` of the relations.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// Default bound on path length while searching for the nilpotency index.
pub const DEFAULT_LENGTH_CAP: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Quiver> {
        if vertex_count == 0 {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let mut seen = HashMap::new();
        for (i, a) in arrows.iter().enumerate() {
            if seen.insert(a.name.clone(), i).is_some() {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name `{}`", a.name)));
            }
            for v in [a.source, a.target] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v + 1,
                        count: vertex_count,
                    });
                }
            }
        }
        Ok(Quiver {
            vertex_count,
            arrows,
        })
    }

    /// Convenience constructor from `(name, source, target)` with 1-based vertices.
    pub fn from_labels(vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Quiver> {
        let mut list = Vec::with_capacity(arrows.len());
        for &(name, s, t) in arrows {
            for v in [s, t] {
                if v == 0 || v > vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            list.push(Arrow {
                name: name.to_string(),
                source: s - 1,
                target: t - 1,
            });
        }
        Quiver::new(vertex_count, list)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// The quiver with every arrow reversed (names kept).
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Every vertex has at most one incoming and one outgoing arrow.
    pub fn is_nakayama_shaped(&self) -> bool {
        (0..self.vertex_count)
            .all(|v| self.arrows_from(v).count() <= 1 && self.arrows_to(v).count() <= 1)
    }
}

/// A path in traversal order. Trivial paths have no arrows and `source == target`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `next`, if composable.
    pub fn then(&self, next: &Path) -> Option<Path> {
        if self.target != next.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Some(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }

    pub fn from_arrows(quiver: &Quiver, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        let mut p = Path {
            source: quiver.arrow(first).source,
            target: quiver.arrow(first).source,
            arrows: Vec::new(),
        };
        for &a in arrows {
            let arrow = quiver.arrow(a);
            if arrow.source != p.target {
                return None;
            }
            p.arrows.push(a);
            p.target = arrow.target;
        }
        Some(p)
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", self.source + 1)
        } else {
            self.arrows
                .iter()
                .map(|&a| quiver.arrow(a).name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    terms: Vec<(Scalar, Path)>,
}

impl Relation {
    /// Validates and normalises (merges equal paths, drops zero terms).
    pub fn new(quiver: &Quiver, field: Field, terms: Vec<(Scalar, Vec<usize>)>) -> Result<Relation> {
        let mut merged: Vec<(Scalar, Path)> = Vec::new();
        for (c, arrows) in terms {
            if c.field() != field {
                return Err(Error::MalformedRelation("coefficient in the wrong field".into()));
            }
            if arrows.len() < 2 {
                return Err(Error::MalformedRelation(
                    "every term must be a path of length at least 2".into(),
                ));
            }
            let path = Path::from_arrows(quiver, &arrows).ok_or_else(|| {
                Error::MalformedRelation("term is not a composable path".into())
            })?;
            match merged.iter_mut().find(|(_, p)| *p == path) {
                Some((acc, _)) => *acc = &*acc + &c,
                None => merged.push((c, path)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        let Some((_, first)) = merged.first() else {
            return Err(Error::MalformedRelation("relation is zero".into()));
        };
        let (s, t) = (first.source, first.target);
        if merged.iter().any(|(_, p)| p.source != s || p.target != t) {
            return Err(Error::MalformedRelation("terms are not parallel paths".into()));
        }
        Ok(Relation { terms: merged })
    }

    /// A monomial relation given by arrow names.
    pub fn monomial(quiver: &Quiver, field: Field, names: &[&str]) -> Result<Relation> {
        let arrows = names
            .iter()
            .map(|n| {
                quiver
                    .arrow_index(n)
                    .ok_or_else(|| Error::MalformedRelation(format!("unknown arrow `{n}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Relation::new(quiver, field, vec![(field.one(), arrows)])
    }

    pub fn terms(&self) -> &[(Scalar, Path)] {
        &self.terms
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| {
                    (
                        c.clone(),
                        Path {
                            source: p.target,
                            target: p.source,
                            arrows: p.arrows.iter().rev().copied().collect(),
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn display(&self, quiver: &Quiver) -> String {
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !abs.is_one() {
                out.push_str(&format!("{abs}*"));
            }
            out.push_str(&p.display(quiver));
        }
        out
    }
}

/// An element of `KQ/I` as a coefficient vector over the chosen basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraElement(pub Vec<Scalar>);

impl AlgebraElement {
    pub fn coeffs(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }
}

/// Lazily computed data attached to an algebra.
#[derive(Debug, Default, Clone)]
pub(crate) struct AlgebraCache {
    pub(crate) opposite: OnceLock<Arc<PathAlgebra>>,
    pub(crate) projectives: OnceLock<Vec<(Vec<usize>, Vec<Matrix>)>>,
    pub(crate) injectives: OnceLock<Vec<(Vec<usize>, Vec<Matrix>)>>,
}

/// A bound quiver algebra `KQ/I` with an explicit basis of paths and its
/// multiplication table.
#[derive(Debug, Clone)]
pub struct PathAlgebra {
    quiver: Quiver,
    field: Field,
    relations: Vec<Relation>,
    length_cap: usize,
    basis: Vec<Path>,
    /// `products[u][v]` is the sparse expansion of `b_u · b_v`.
    products: Vec<Vec<Vec<(usize, Scalar)>>>,
    idempotents: Vec<usize>,
    arrow_basis: Vec<usize>,
    nilpotency_bound: usize,
    pub(crate) cache: AlgebraCache,
}

impl PartialEq for PathAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.field == other.field
            && self.relations == other.relations
            && self.basis == other.basis
            && self.products == other.products
    }
}

impl Eq for PathAlgebra {}

/// Builds `KQ/I` with the default length cap.
pub fn build_algebra(quiver: Quiver, relations: Vec<Relation>, field: Field) -> Result<PathAlgebra> {
    build_algebra_with_cap(quiver, relations, field, DEFAULT_LENGTH_CAP)
}

pub fn build_algebra_with_cap(
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    length_cap: usize,
) -> Result<PathAlgebra> {
    if let Field::Prime(p) = field {
        Field::prime(p as u64)?;
    }
    for r in &relations {
        if r.terms.iter().any(|(c, _)| c.field() != field) {
            return Err(Error::MalformedRelation("coefficient in the wrong field".into()));
        }
    }
    for truncation in 2..=length_cap + 1 {
        let paths = paths_below(&quiver, truncation);
        let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let ideal = ideal_span(&relations, field, &paths, &index, truncation);
        let (reduced, pivots) = ideal.rref();
        let top_len = truncation - 1;
        let top_in_ideal = paths
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() == top_len)
            .all(|(i, _)| pivots.contains(&i));
        if !top_in_ideal {
            continue;
        }
        return Ok(assemble(
            quiver, relations, field, length_cap, top_len, &paths, &reduced, &pivots,
        ));
    }
    Err(Error::NonAdmissibleIdeal { cap: length_cap })
}

/// All paths of length `< truncation`, ordered longest first and then
/// lexicographically by arrow indices. This is the column order used for
/// pivoting, so leading terms of the ideal are the longest paths.
fn paths_below(quiver: &Quiver, truncation: usize) -> Vec<Path> {
    let mut layers: Vec<Vec<Path>> = vec![(0..quiver.vertex_count()).map(Path::trivial).collect()];
    for len in 1..truncation {
        let mut next = Vec::new();
        for p in &layers[len - 1] {
            for a in quiver.arrows_from(p.target) {
                let mut q = p.clone();
                q.arrows.push(a);
                q.target = quiver.arrow(a).target;
                next.push(q);
            }
        }
        next.sort();
        layers.push(next);
    }
    let mut all = Vec::new();
    for layer in layers.into_iter().rev() {
        let mut layer = layer;
        layer.sort_by(|a, b| a.arrows.cmp(&b.arrows).then(a.source.cmp(&b.source)));
        all.extend(layer);
    }
    all
}

fn ideal_span(
    relations: &[Relation],
    field: Field,
    paths: &[Path],
    index: &HashMap<&Path, usize>,
    truncation: usize,
) -> Matrix {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let prefixes_to = |v: usize| paths.iter().filter(move |p| p.target == v);
    let suffixes_from = |v: usize| paths.iter().filter(move |p| p.source == v);
    for r in relations {
        let base = r.min_len();
        for pre in prefixes_to(r.source()) {
            for post in suffixes_from(r.target()) {
                if pre.len() + base + post.len() >= truncation {
                    continue;
                }
                let mut row = vec![field.zero(); paths.len()];
                for (c, term) in &r.terms {
                    let full = pre.then(term).and_then(|x| x.then(post)).expect("composable");
                    if full.len() >= truncation {
                        continue;
                    }
                    let i = index[&full];
                    row[i] = &row[i] + c;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(field, paths.len(), &rows)
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    length_cap: usize,
    nilpotency_bound: usize,
    paths: &[Path],
    reduced: &Matrix,
    pivots: &[usize],
) -> PathAlgebra {
    let k = quiver.vertex_count();
    let mut basis: Vec<Path> = paths
        .iter()
        .enumerate()
        .filter(|(i, _)| !pivots.contains(i))
        .map(|(_, p)| p.clone())
        .collect();
    basis.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then(a.arrows.cmp(&b.arrows))
            .then(a.source.cmp(&b.source))
    });
    let basis_index: HashMap<Path, usize> =
        basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let path_index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let pivot_row: HashMap<usize, usize> = pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();

    // normal form of a single path of length < truncation
    let normal_form = |p: &Path| -> Vec<(usize, Scalar)> {
        if let Some(&b) = basis_index.get(p) {
            return vec![(b, field.one())];
        }
        let Some(&col) = path_index.get(p) else {
            return Vec::new();
        };
        let row = pivot_row[&col];
        let mut out = Vec::new();
        for (c, q) in paths.iter().enumerate() {
            if c == col {
                continue;
            }
            let v = reduced.get(row, c);
            if !v.is_zero() {
                out.push((basis_index[q], -v));
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out
    };

    let n = basis.len();
    let mut products = vec![vec![Vec::new(); n]; n];
    for (u, pu) in basis.iter().enumerate() {
        for (v, pv) in basis.iter().enumerate() {
            // b_u · b_v = "b_v first, then b_u"
            if let Some(w) = pv.then(pu) {
                if w.len() < nilpotency_bound + 1 {
                    products[u][v] = normal_form(&w);
                }
            }
        }
    }
    let idempotents = (0..k).map(|v| basis_index[&Path::trivial(v)]).collect();
    let arrow_basis = (0..quiver.arrows().len())
        .map(|a| basis_index[&Path::from_arrows(&quiver, &[a]).expect("single arrow")])
        .collect();
    PathAlgebra {
        quiver,
        field,
        relations,
        length_cap,
        basis,
        products,
        idempotents,
        arrow_basis,
        nilpotency_bound,
        cache: AlgebraCache::default(),
    }
}

impl PathAlgebra {
    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_labels(&self) -> Vec<String> {
        self.basis.iter().map(|p| p.display(&self.quiver)).collect()
    }

    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    pub fn arrow_basis_index(&self, a: usize) -> usize {
        self.arrow_basis[a]
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency_bound
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    /// Structure constants of `b_u · b_v` (sparse).
    pub fn product(&self, u: usize, v: usize) -> &[(usize, Scalar)] {
        &self.products[u][v]
    }

    pub fn zero_element(&self) -> AlgebraElement {
        AlgebraElement(vec![self.field.zero(); self.dim()])
    }

    pub fn basis_element(&self, u: usize) -> AlgebraElement {
        let mut e = self.zero_element();
        e.0[u] = self.field.one();
        e
    }

    pub fn one(&self) -> AlgebraElement {
        let mut e = self.zero_element();
        for &i in &self.idempotents {
            e.0[i] = self.field.one();
        }
        e
    }

    pub fn mul(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = self.zero_element();
        for (u, cu) in x.0.iter().enumerate() {
            if cu.is_zero() {
                continue;
            }
            for (v, cv) in y.0.iter().enumerate() {
                if cv.is_zero() {
                    continue;
                }
                let c = cu * cv;
                for (w, s) in &self.products[u][v] {
                    out.0[*w] = &out.0[*w] + &(&c * s);
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ x · γ` in basis coordinates.
    pub fn right_multiplication(&self, gamma: &AlgebraElement) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|u| self.mul(&self.basis_element(u), gamma).0)
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// Matrix of `x ↦ γ · x` in basis coordinates.
    pub fn left_multiplication(&self, gamma: &AlgebraElement) -> Matrix {
        let cols: Vec<Vec<Scalar>> = (0..self.dim())
            .map(|u| self.mul(gamma, &self.basis_element(u)).0)
            .collect();
        Matrix::from_columns(self.field, self.dim(), &cols)
    }

    /// The element represented by a path, computed from the structure constants.
    pub fn path_element(&self, path: &Path) -> AlgebraElement {
        let mut acc = self.basis_element(self.idempotents[path.source]);
        for &a in &path.arrows {
            acc = self.mul(&self.basis_element(self.arrow_basis[a]), &acc);
        }
        acc
    }

    /// Basis indices of paths starting at `v` (a basis of `P(v) = Γe_v`).
    pub fn basis_from(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&u| self.basis[u].source == v).collect()
    }

    /// Basis indices of paths ending at `v` (a basis of `e_vΓ`).
    pub fn basis_to(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&u| self.basis[u].target == v).collect()
    }

    /// The opposite algebra: arrows and relation paths reversed.
    pub fn opposite(&self) -> Arc<PathAlgebra> {
        self.cache
            .opposite
            .get_or_init(|| {
                let quiver = self.quiver.opposite();
                let relations = self.relations.iter().map(Relation::reversed).collect();
                Arc::new(
                    build_algebra_with_cap(quiver, relations, self.field, self.length_cap)
                        .expect("opposite of an admissible presentation is admissible"),
                )
            })
            .clone()
    }

    /// First basis triple violating associativity, if any.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for u in 0..n {
            for v in 0..n {
                let uv = self.mul(&self.basis_element(u), &self.basis_element(v));
                for w in 0..n {
                    let bw = self.basis_element(w);
                    let left = self.mul(&uv, &bw);
                    let vw = self.mul(&self.basis_element(v), &bw);
                    let right = self.mul(&self.basis_element(u), &vw);
                    if left != right {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    /// `e_i e_j = δ_ij e_i` and `Σ e_i` is a two-sided unit.
    pub fn idempotents_are_complete(&self) -> bool {
        let k = self.vertex_count();
        for i in 0..k {
            for j in 0..k {
                let p = self.mul(
                    &self.basis_element(self.idempotents[i]),
                    &self.basis_element(self.idempotents[j]),
                );
                let expected = if i == j {
                    self.basis_element(self.idempotents[i])
                } else {
                    self.zero_element()
                };
                if p != expected {
                    return false;
                }
            }
        }
        let one = self.one();
        (0..self.dim()).all(|u| {
            let b = self.basis_element(u);
            self.mul(&one, &b) == b && self.mul(&b, &one) == b
        })
    }

    /// Index of the first relation that does not vanish in the algebra.
    pub fn relation_violation(&self) -> Option<usize> {
        self.relations.iter().position(|r| {
            let mut acc = self.zero_element();
            for (c, p) in &r.terms {
                let e = self.path_element(p);
                for (a, b) in acc.0.iter_mut().zip(&e.0) {
                    *a = &*a + &(c * b);
                }
            }
            !acc.is_zero()
        })
    }

    /// A copy with one structure constant shifted by `delta`; used to check that
    /// the verification suites notice a corrupted multiplication table.
    pub fn with_perturbed_constant(&self, u: usize, v: usize, w: usize, delta: &Scalar) -> PathAlgebra {
        let mut copy = PathAlgebra {
            cache: AlgebraCache::default(),
            ..self.clone()
        };
        let entry = &mut copy.products[u][v];
        match entry.iter_mut().find(|(i, _)| *i == w) {
            Some((_, c)) => *c = &*c + delta,
            None => entry.push((w, delta.clone())),
        }
        entry.retain(|(_, c)| !c.is_zero());
        copy
    }
}

impl fmt::Display for PathAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::serialize_algebra(self))
    }
}
