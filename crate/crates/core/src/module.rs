//! Finite-dimensional left modules as quiver representations, their
//! morphisms, and the elementary constructions (hom spaces, kernels,
//! cokernels, generated submodules, socle, radical, top, direct sums, the
//! indecomposable projectives and injectives).

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Path, PathAlgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{subspace, Matrix};

/// A representation of the bound quiver: one vector space per vertex and one
/// matrix per arrow (`d_target x d_source`).
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: Arc<PathAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for Representation {}

pub(crate) fn same_algebra(a: &Arc<PathAlgebra>, b: &Arc<PathAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Representation {
    /// Checks shapes and that every relation acts as zero.
    pub fn new(algebra: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} vertex dimensions, got {}",
                q.vertex_count(),
                dims.len()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation("one matrix per arrow required".into()));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.rows() != dims[a.target] || m.cols() != dims[a.source] {
                return Err(Error::InvalidRepresentation(format!(
                    "map for arrow `{}` has shape {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidRepresentation("matrix over the wrong field".into()));
            }
        }
        let rep = Representation { algebra, dims, maps };
        if let Some(i) = rep.relation_violation() {
            return Err(Error::InvalidRepresentation(format!(
                "relation `{}` does not act as zero",
                rep.algebra.relations()[i].display(rep.algebra.quiver())
            )));
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(algebra: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        debug_assert!(Representation::new(algebra.clone(), dims.clone(), maps.clone()).is_ok());
        Representation { algebra, dims, maps }
    }

    pub fn zero(algebra: &Arc<PathAlgebra>) -> Representation {
        let field = algebra.field();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(field, 0, 0))
            .collect();
        Representation {
            algebra: algebra.clone(),
            dims: vec![0; algebra.vertex_count()],
            maps,
        }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Offset of vertex `v` inside the total space `⊕ M_v`.
    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    pub fn component(&self, x: &[Scalar], v: usize) -> Vec<Scalar> {
        let o = self.offset(v);
        x[o..o + self.dims[v]].to_vec()
    }

    pub fn zero_vector(&self) -> Vec<Scalar> {
        vec![self.field().zero(); self.dim()]
    }

    /// Embeds a vector of `M_v` into the total space.
    pub fn embed(&self, v: usize, local: &[Scalar]) -> Vec<Scalar> {
        let mut x = self.zero_vector();
        let o = self.offset(v);
        x[o..o + local.len()].clone_from_slice(local);
        x
    }

    /// Matrix of a path acting from `M_source` to `M_target`.
    pub fn path_action(&self, path: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[path.source]);
        for &a in &path.arrows {
            acc = self.maps[a].mul(&acc);
        }
        acc
    }

    /// `b_u · x` for an algebra basis element `b_u` and `x` in the total space.
    pub fn act_basis(&self, u: usize, x: &[Scalar]) -> Vec<Scalar> {
        let path = &self.algebra.basis()[u];
        let mut local = self.component(x, path.source);
        for &a in &path.arrows {
            local = self.maps[a].mul_vec(&local);
        }
        self.embed(path.target, &local)
    }

    /// `γ · x` for an arbitrary algebra element.
    pub fn act(&self, gamma: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero_vector();
        for (u, c) in gamma.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(self.act_basis(u, x)) {
                if !y.is_zero() {
                    *o = &*o + &(c * &y);
                }
            }
        }
        out
    }

    fn relation_violation(&self) -> Option<usize> {
        self.algebra.relations().iter().position(|r| {
            let mut acc: Option<Matrix> = None;
            for (c, p) in r.terms() {
                let m = self.path_action(p).scale(c);
                acc = Some(match acc {
                    None => m,
                    Some(s) => s.add(&m),
                });
            }
            acc.is_some_and(|m| !m.is_zero())
        })
    }

    /// All vectors of the total space over a finite field.
    pub fn all_elements(&self) -> Result<Vec<Vec<Scalar>>> {
        let elems = self.field().elements();
        if elems.is_empty() {
            return Err(Error::NotFiniteField);
        }
        let mut out = vec![Vec::new()];
        for _ in 0..self.dim() {
            let mut next = Vec::with_capacity(out.len() * elems.len());
            for prefix in &out {
                for e in &elems {
                    let mut v = prefix.clone();
                    v.push(e.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        Ok(out)
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", dims.join(","))
    }
}

/// A family of vertex maps intertwining the arrow actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl ModuleMorphism {
    pub fn new(source: Representation, target: Representation, maps: Vec<Matrix>) -> Result<ModuleMorphism> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::AlgebraMismatch);
        }
        let k = source.algebra().vertex_count();
        if maps.len() != k
            || (0..k).any(|v| maps[v].rows() != target.dims[v] || maps[v].cols() != source.dims[v])
        {
            return Err(Error::InvalidRepresentation("vertex map shapes do not match".into()));
        }
        let f = ModuleMorphism { source, target, maps };
        if !f.intertwines() {
            return Err(Error::InvalidRepresentation("maps do not commute with arrows".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(source: Representation, target: Representation, maps: Vec<Matrix>) -> ModuleMorphism {
        let f = ModuleMorphism { source, target, maps };
        debug_assert!(f.intertwines());
        f
    }

    pub fn identity(m: &Representation) -> ModuleMorphism {
        let maps = m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        ModuleMorphism::from_parts(m.clone(), m.clone(), maps)
    }

    pub fn zero(source: &Representation, target: &Representation) -> ModuleMorphism {
        let field = source.field();
        let maps = (0..source.dims.len())
            .map(|v| Matrix::zeros(field, target.dims[v], source.dims[v]))
            .collect();
        ModuleMorphism::from_parts(source.clone(), target.clone(), maps)
    }

    /// For each arrow `a: i -> j`: `N_a f_i = f_j M_a`.
    pub fn intertwines(&self) -> bool {
        self.source
            .algebra()
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .all(|(a, arrow)| {
                self.target.maps[a].mul(&self.maps[arrow.source])
                    == self.maps[arrow.target].mul(&self.source.maps[a])
            })
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn map(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMorphism) -> ModuleMorphism {
        assert_eq!(other.target.dims, self.source.dims, "composition shape mismatch");
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.mul(b)).collect();
        ModuleMorphism::from_parts(other.source.clone(), self.target.clone(), maps)
    }

    pub fn add(&self, other: &ModuleMorphism) -> ModuleMorphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        ModuleMorphism::from_parts(self.source.clone(), self.target.clone(), maps)
    }

    pub fn scale(&self, s: &Scalar) -> ModuleMorphism {
        let maps = self.maps.iter().map(|a| a.scale(s)).collect();
        ModuleMorphism::from_parts(self.source.clone(), self.target.clone(), maps)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.maps.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<ModuleMorphism> {
        let maps = self.maps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMorphism::from_parts(self.target.clone(), self.source.clone(), maps))
    }

    /// Applies the morphism to a total-space vector.
    pub fn apply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.target.zero_vector();
        for v in 0..self.maps.len() {
            let y = self.maps[v].mul_vec(&self.source.component(x, v));
            let o = self.target.offset(v);
            out[o..o + y.len()].clone_from_slice(&y);
        }
        out
    }

    /// All vertex matrices concatenated row-major, vertex by vertex; the
    /// coordinate system used by [`hom_space`].
    pub fn flatten(&self) -> Vec<Scalar> {
        self.maps
            .iter()
            .flat_map(|m| (0..m.rows()).flat_map(move |r| m.row(r)))
            .collect()
    }

    /// Inverse of [`ModuleMorphism::flatten`].
    pub fn unflatten(source: &Representation, target: &Representation, flat: &[Scalar]) -> ModuleMorphism {
        let field = source.field();
        let mut maps = Vec::with_capacity(source.dims.len());
        let mut off = 0;
        for v in 0..source.dims.len() {
            let (r, c) = (target.dims[v], source.dims[v]);
            maps.push(Matrix::from_fn(field, r, c, |i, j| flat[off + i * c + j].clone()));
            off += r * c;
        }
        ModuleMorphism::from_parts(source.clone(), target.clone(), maps)
    }
}

fn check_same(m: &Representation, n: &Representation) -> Result<()> {
    if same_algebra(m.algebra(), n.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

/// A basis of `Hom(M, N)`, obtained as the null space of the intertwining system.
pub fn hom_space(m: &Representation, n: &Representation) -> Result<Vec<ModuleMorphism>> {
    check_same(m, n)?;
    let field = m.field();
    let k = m.dims.len();
    let mut var_off = vec![0; k + 1];
    for v in 0..k {
        var_off[v + 1] = var_off[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = var_off[k];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let var = |v: usize, r: usize, c: usize| var_off[v] + r * m.dims[v] + c;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, arrow) in m.algebra().quiver().arrows().iter().enumerate() {
        let (i, j) = (arrow.source, arrow.target);
        let (na, ma) = (&n.maps[a], &m.maps[a]);
        // (N_a X_i - X_j M_a)[r, c] = 0 for r < n_j, c < m_i
        for r in 0..n.dims[j] {
            for c in 0..m.dims[i] {
                let mut row = vec![field.zero(); unknowns];
                for kk in 0..n.dims[i] {
                    let x = na.get(r, kk);
                    if !x.is_zero() {
                        let idx = var(i, kk, c);
                        row[idx] = &row[idx] + x;
                    }
                }
                for kk in 0..m.dims[j] {
                    let x = ma.get(kk, c);
                    if !x.is_zero() {
                        let idx = var(j, r, kk);
                        row[idx] = &row[idx] - x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(field, unknowns, &rows);
    let ker = system.kernel();
    Ok((0..ker.cols())
        .map(|c| ModuleMorphism::unflatten(m, n, &ker.column(c)))
        .collect())
}

/// The submodule with the given per-vertex spans (columns), which must be
/// stable under the arrows.
pub fn submodule(m: &Representation, spans: &[Matrix]) -> (Representation, ModuleMorphism) {
    let field = m.field();
    let bases: Vec<Matrix> = spans.iter().map(Matrix::column_basis).collect();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = m
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let image = m.maps[a].mul(&bases[arrow.source]);
            if dims[arrow.target] == 0 || dims[arrow.source] == 0 {
                Matrix::zeros(field, dims[arrow.target], dims[arrow.source])
            } else {
                bases[arrow.target]
                    .solve(&image)
                    .expect("span is stable under the arrows")
            }
        })
        .collect();
    let sub = Representation::from_parts(m.algebra().clone(), dims, maps);
    let incl = ModuleMorphism::from_parts(sub.clone(), m.clone(), bases);
    (sub, incl)
}

/// `M / U` for a submodule given by per-vertex spans.
pub fn quotient(m: &Representation, spans: &[Matrix]) -> (Representation, ModuleMorphism) {
    let field = m.field();
    let data: Vec<(Matrix, Matrix)> = spans
        .iter()
        .enumerate()
        .map(|(v, s)| subspace::quotient(field, m.dims[v], s))
        .collect();
    let dims: Vec<usize> = data.iter().map(|(sec, _)| sec.cols()).collect();
    let maps = m
        .algebra()
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            data[arrow.target]
                .1
                .mul(&m.maps[a])
                .mul(&data[arrow.source].0)
        })
        .collect();
    let q = Representation::from_parts(m.algebra().clone(), dims, maps);
    let proj = ModuleMorphism::from_parts(m.clone(), q.clone(), data.into_iter().map(|(_, p)| p).collect());
    (q, proj)
}

/// Per-vertex spans of a submodule given by its inclusion.
pub fn spans_of(incl: &ModuleMorphism) -> Vec<Matrix> {
    incl.maps.clone()
}

pub fn kernel(f: &ModuleMorphism) -> (Representation, ModuleMorphism) {
    let spans: Vec<Matrix> = f.maps.iter().map(Matrix::kernel).collect();
    submodule(&f.source, &spans)
}

pub fn image(f: &ModuleMorphism) -> (Representation, ModuleMorphism) {
    let spans: Vec<Matrix> = f.maps.iter().map(Matrix::column_basis).collect();
    submodule(&f.target, &spans)
}

/// `f = mono ∘ epi` through the image.
pub fn image_factorization(f: &ModuleMorphism) -> (Representation, ModuleMorphism, ModuleMorphism) {
    let (im, mono) = image(f);
    let epi_maps = (0..f.maps.len())
        .map(|v| {
            if im.dims[v] == 0 {
                Matrix::zeros(f.source.field(), 0, f.source.dims[v])
            } else {
                mono.maps[v].solve(&f.maps[v]).expect("f factors through its image")
            }
        })
        .collect();
    let epi = ModuleMorphism::from_parts(f.source.clone(), im.clone(), epi_maps);
    (im, epi, mono)
}

pub fn cokernel(f: &ModuleMorphism) -> (Representation, ModuleMorphism) {
    let spans: Vec<Matrix> = f.maps.iter().map(Matrix::column_basis).collect();
    quotient(&f.target, &spans)
}

/// Smallest arrow-stable spans containing the given per-vertex spans.
pub fn close_under_arrows(m: &Representation, mut spans: Vec<Matrix>) -> Vec<Matrix> {
    let field = m.field();
    let arrows = m.algebra().quiver().arrows().to_vec();
    loop {
        let mut changed = false;
        for (a, arrow) in arrows.iter().enumerate() {
            let image = m.maps[a].mul(&spans[arrow.source]);
            let (i, j) = (arrow.source, arrow.target);
            let _ = i;
            let current = spans[j].rank();
            let merged = subspace::sum(field, m.dims[j], &spans[j], &image);
            if merged.cols() > current {
                spans[j] = merged;
                changed = true;
            }
        }
        if !changed {
            return spans.into_iter().map(|s| s.column_basis()).collect();
        }
    }
}

/// The submodule generated by a list of total-space vectors.
pub fn submodule_generated(m: &Representation, elements: &[Vec<Scalar>]) -> Result<(Representation, ModuleMorphism)> {
    if elements.iter().any(|x| x.len() != m.dim()) {
        return Err(Error::ElementMismatch);
    }
    let field = m.field();
    let spans: Vec<Matrix> = (0..m.dims.len())
        .map(|v| {
            let cols: Vec<Vec<Scalar>> = elements.iter().map(|x| m.component(x, v)).collect();
            Matrix::from_columns(field, m.dims[v], &cols).column_basis()
        })
        .collect();
    let spans = close_under_arrows(m, spans);
    Ok(submodule(m, &spans))
}

/// Per-vertex spans of the socle: joint kernels of the outgoing arrows.
pub fn socle_spans(m: &Representation) -> Vec<Matrix> {
    let field = m.field();
    let q = m.algebra().quiver();
    (0..m.dims.len())
        .map(|v| {
            let outgoing: Vec<&Matrix> = q.arrows_from(v).map(|a| &m.maps[a]).collect();
            if outgoing.is_empty() {
                Matrix::identity(field, m.dims[v])
            } else {
                Matrix::vstack(field, m.dims[v], &outgoing).kernel()
            }
        })
        .collect()
}

/// Per-vertex spans of the radical: sums of images of incoming arrows.
pub fn radical_spans(m: &Representation) -> Vec<Matrix> {
    let field = m.field();
    let q = m.algebra().quiver();
    (0..m.dims.len())
        .map(|v| {
            let incoming: Vec<&Matrix> = q.arrows_to(v).map(|a| &m.maps[a]).collect();
            Matrix::hstack(field, m.dims[v], &incoming).column_basis()
        })
        .collect()
}

pub fn socle(m: &Representation) -> (Representation, ModuleMorphism) {
    submodule(m, &socle_spans(m))
}

pub fn radical(m: &Representation) -> (Representation, ModuleMorphism) {
    submodule(m, &radical_spans(m))
}

pub fn top(m: &Representation) -> (Representation, ModuleMorphism) {
    quotient(m, &radical_spans(m))
}

/// `rad^j M` as per-vertex spans.
pub fn radical_power_spans(m: &Representation, j: usize) -> Vec<Matrix> {
    let field = m.field();
    let q = m.algebra().quiver();
    let mut spans: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::identity(field, d)).collect();
    for _ in 0..j {
        spans = (0..m.dims.len())
            .map(|v| {
                let parts: Vec<Matrix> = q.arrows_to(v).map(|a| m.maps[a].mul(&spans[q.arrow(a).source])).collect();
                let refs: Vec<&Matrix> = parts.iter().collect();
                Matrix::hstack(field, m.dims[v], &refs).column_basis()
            })
            .collect();
    }
    spans
}

/// Loewy length: least `j` with `rad^j M = 0`.
pub fn loewy_length(m: &Representation) -> usize {
    let mut j = 0;
    while radical_power_spans(m, j).iter().any(|s| s.cols() > 0) {
        j += 1;
    }
    j
}

/// Multiplicity of each simple as a composition factor. Valid because the
/// algebra is split basic, so it is just the dimension vector.
pub fn composition_multiplicities(m: &Representation) -> Vec<usize> {
    m.dims.clone()
}

/// Direct sum with its canonical injections and projections.
pub fn direct_sum_with_maps(
    parts: &[&Representation],
) -> (Representation, Vec<ModuleMorphism>, Vec<ModuleMorphism>) {
    let algebra = parts[0].algebra().clone();
    let field = algebra.field();
    let k = algebra.vertex_count();
    let dims: Vec<usize> = (0..k).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..algebra.quiver().arrows().len())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[a]).collect();
            Matrix::block_diagonal(field, &blocks)
        })
        .collect();
    let sum = Representation::from_parts(algebra, dims.clone(), maps);
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    let mut offsets = vec![0; k];
    for p in parts {
        let inj = (0..k)
            .map(|v| {
                let mut m = Matrix::zeros(field, dims[v], p.dims[v]);
                for i in 0..p.dims[v] {
                    m.set(offsets[v] + i, i, field.one());
                }
                m
            })
            .collect::<Vec<_>>();
        let proj = inj.iter().map(Matrix::transpose).collect();
        injections.push(ModuleMorphism::from_parts((*p).clone(), sum.clone(), inj));
        projections.push(ModuleMorphism::from_parts(sum.clone(), (*p).clone(), proj));
        for v in 0..k {
            offsets[v] += p.dims[v];
        }
    }
    (sum, injections, projections)
}

pub fn direct_sum(parts: &[&Representation]) -> Representation {
    if parts.is_empty() {
        panic!("direct sum of an empty family needs an algebra; use Representation::zero");
    }
    direct_sum_with_maps(parts).0
}

/// `Γ` as a left module over itself. The vertex-`v` space is `e_vΓ`, with
/// basis the algebra basis paths ending at `v` in basis order.
pub fn regular(algebra: &Arc<PathAlgebra>) -> Representation {
    let field = algebra.field();
    let k = algebra.vertex_count();
    let layout: Vec<Vec<usize>> = (0..k).map(|v| algebra.basis_to(v)).collect();
    let dims = layout.iter().map(Vec::len).collect();
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let elem = algebra.basis_element(algebra.arrow_basis_index(a));
            let (src, dst) = (&layout[arrow.source], &layout[arrow.target]);
            let mut m = Matrix::zeros(field, dst.len(), src.len());
            for (c, &u) in src.iter().enumerate() {
                let prod = algebra.mul(&elem, &algebra.basis_element(u));
                for (r, &w) in dst.iter().enumerate() {
                    m.set(r, c, prod.0[w].clone());
                }
            }
            m
        })
        .collect();
    Representation {
        algebra: algebra.clone(),
        dims,
        maps,
    }
}

/// Position of each algebra basis element inside the total space of [`regular`].
pub fn regular_positions(algebra: &PathAlgebra) -> Vec<usize> {
    let mut pos = vec![0; algebra.dim()];
    let mut next = 0;
    for v in 0..algebra.vertex_count() {
        for u in algebra.basis_to(v) {
            pos[u] = next;
            next += 1;
        }
    }
    pos
}

/// Algebra coordinates → total-space coordinates of the regular module.
pub fn to_regular_coords(algebra: &PathAlgebra, x: &[Scalar]) -> Vec<Scalar> {
    let pos = regular_positions(algebra);
    let mut out = vec![algebra.field().zero(); x.len()];
    for (u, c) in x.iter().enumerate() {
        out[pos[u]] = c.clone();
    }
    out
}

pub fn from_regular_coords(algebra: &PathAlgebra, y: &[Scalar]) -> Vec<Scalar> {
    let pos = regular_positions(algebra);
    (0..algebra.dim()).map(|u| y[pos[u]].clone()).collect()
}

fn projective_data(algebra: &PathAlgebra) -> Vec<(Vec<usize>, Vec<Matrix>)> {
    let field = algebra.field();
    let k = algebra.vertex_count();
    (0..k)
        .map(|start| {
            let layout: Vec<Vec<usize>> = (0..k)
                .map(|v| {
                    algebra
                        .basis_from(start)
                        .into_iter()
                        .filter(|&u| algebra.basis()[u].target == v)
                        .collect()
                })
                .collect();
            let dims = layout.iter().map(Vec::len).collect();
            let maps = algebra
                .quiver()
                .arrows()
                .iter()
                .enumerate()
                .map(|(a, arrow)| {
                    let elem = algebra.basis_element(algebra.arrow_basis_index(a));
                    let (src, dst) = (&layout[arrow.source], &layout[arrow.target]);
                    let mut m = Matrix::zeros(field, dst.len(), src.len());
                    for (c, &u) in src.iter().enumerate() {
                        let prod = algebra.mul(&elem, &algebra.basis_element(u));
                        for (r, &w) in dst.iter().enumerate() {
                            m.set(r, c, prod.0[w].clone());
                        }
                    }
                    m
                })
                .collect();
            (dims, maps)
        })
        .collect()
}

/// Basis indices (algebra paths) spanning `P(v)` at each vertex, matching the
/// coordinates used by [`projective`].
pub fn projective_layout(algebra: &PathAlgebra, start: usize) -> Vec<Vec<usize>> {
    (0..algebra.vertex_count())
        .map(|v| {
            algebra
                .basis_from(start)
                .into_iter()
                .filter(|&u| algebra.basis()[u].target == v)
                .collect()
        })
        .collect()
}

/// The indecomposable projective `P(v) = Γe_v`.
pub fn projective(algebra: &Arc<PathAlgebra>, v: usize) -> Representation {
    let data = algebra.cache.projectives.get_or_init(|| projective_data(algebra));
    let (dims, maps) = data[v].clone();
    Representation {
        algebra: algebra.clone(),
        dims,
        maps,
    }
}

/// The `K`-dual of a module over the opposite algebra, as a module over `target`.
pub fn dual_over(m: &Representation, target: &Arc<PathAlgebra>) -> Result<Representation> {
    if *m.algebra().quiver() != target.quiver().opposite() {
        return Err(Error::AlgebraMismatch);
    }
    let maps = m.maps.iter().map(Matrix::transpose).collect();
    Representation::new(target.clone(), m.dims.clone(), maps)
}

/// The indecomposable injective `I(v) = D(e_vΓ)`, computed as the dual of the
/// opposite algebra's projective at `v`.
pub fn injective(algebra: &Arc<PathAlgebra>, v: usize) -> Representation {
    let data = algebra.cache.injectives.get_or_init(|| {
        let op = algebra.opposite();
        (0..algebra.vertex_count())
            .map(|w| {
                let d = dual_over(&projective(&op, w), algebra).expect("dual of an opposite projective");
                (d.dims, d.maps)
            })
            .collect()
    });
    let (dims, maps) = data[v].clone();
    Representation {
        algebra: algebra.clone(),
        dims,
        maps,
    }
}

pub fn simple(algebra: &Arc<PathAlgebra>, v: usize) -> Representation {
    let field = algebra.field();
    let mut dims = vec![0; algebra.vertex_count()];
    dims[v] = 1;
    let maps = algebra
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(field, dims[a.target], dims[a.source]))
        .collect();
    Representation {
        algebra: algebra.clone(),
        dims,
        maps,
    }
}

/// Builtin module names accepted wherever a module file is.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Projective(usize),
    Injective(usize),
    Simple(usize),
    Regular,
}

impl Builtin {
    /// Parses `P(i)`, `I(i)`, `S(i)` (1-based) or `regular`.
    pub fn parse(text: &str) -> Option<Builtin> {
        let t = text.trim();
        if t == "regular" {
            return Some(Builtin::Regular);
        }
        let (head, rest) = t.split_at(1.min(t.len()));
        let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
        let i: usize = inner.trim().parse().ok()?;
        if i == 0 {
            return None;
        }
        match head {
            "P" => Some(Builtin::Projective(i - 1)),
            "I" => Some(Builtin::Injective(i - 1)),
            "S" => Some(Builtin::Simple(i - 1)),
            _ => None,
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Projective(i) => write!(f, "P({})", i + 1),
            Builtin::Injective(i) => write!(f, "I({})", i + 1),
            Builtin::Simple(i) => write!(f, "S({})", i + 1),
            Builtin::Regular => write!(f, "regular"),
        }
    }
}

pub fn builtin_module(algebra: &Arc<PathAlgebra>, which: Builtin) -> Result<Representation> {
    let k = algebra.vertex_count();
    let check = |v: usize| {
        if v < k {
            Ok(v)
        } else {
            Err(Error::VertexOutOfRange { vertex: v + 1, count: k })
        }
    };
    Ok(match which {
        Builtin::Projective(v) => projective(algebra, check(v)?),
        Builtin::Injective(v) => injective(algebra, check(v)?),
        Builtin::Simple(v) => simple(algebra, check(v)?),
        Builtin::Regular => regular(algebra),
    })
}

/// Dimension of the top at each vertex.
pub fn top_multiplicities(m: &Representation) -> Vec<usize> {
    radical_spans(m)
        .iter()
        .zip(&m.dims)
        .map(|(r, &d)| d - r.cols())
        .collect()
}

/// Dimension of the socle at each vertex.
pub fn socle_multiplicities(m: &Representation) -> Vec<usize> {
    socle_spans(m).iter().map(Matrix::cols).collect()
}

/// `M` is projective iff its projective cover has the same dimension.
pub fn is_projective(m: &Representation) -> bool {
    let alg = m.algebra();
    let cover_dim: usize = top_multiplicities(m)
        .iter()
        .enumerate()
        .map(|(v, &t)| t * projective(alg, v).dim())
        .sum();
    cover_dim == m.dim()
}

/// `M` is injective iff its injective envelope has the same dimension.
pub fn is_injective(m: &Representation) -> bool {
    let alg = m.algebra();
    let env_dim: usize = socle_multiplicities(m)
        .iter()
        .enumerate()
        .map(|(v, &s)| s * injective(alg, v).dim())
        .sum();
    env_dim == m.dim()
}
