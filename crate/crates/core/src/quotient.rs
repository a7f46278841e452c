//! Modules of quotients, closed modules and the quotient-category calculus.
//!
//! The module of quotients is a colimit of `Hom(J, M/tM)` over the dense
//! ideals `J`. Since the topology is the principal filter of `J0`, the colimit
//! is attained at `J0`, so `M_𝔊 = Hom(J0, M/tM)` with `(γ·f)(x) = f(xγ)`; the
//! action is well defined because `J0` is a two-sided ideal.
//!
//! Closedness against every dense `J` reduces to `J0`: for `J ⊇ J0` the
//! quotient `J/J0` is torsion, so `Hom(J/J0, M) = 0` for torsion-free `M` and
//! `Hom(J, M) = Hom(J0, M)` follows from the long exact sequence.

use serde::{Deserialize, Serialize};

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::homolog::injective_envelope;
use crate::matrix::{subspace, Matrix};
use crate::module::{
    cokernel, from_regular_coords, hom_space, image, kernel, quotient, spans_of, to_regular_coords,
    ModuleMorphism, Representation,
};
use crate::topology::GabrielTopology;

/// `M_𝔊` with `ψ_M: M → M_𝔊` and the kernel and cokernel of `ψ_M`.
#[derive(Debug, Clone)]
pub struct LocalizedModule {
    pub module: Representation,
    pub psi: ModuleMorphism,
    pub psi_kernel: Representation,
    pub psi_cokernel: Representation,
    data: HomData,
}

/// Coordinates of `Hom(J0, M/tM)`.
#[derive(Debug, Clone)]
struct HomData {
    /// `M → M/tM`.
    to_torsionfree: ModuleMorphism,
    /// Flattened basis morphisms as columns.
    flat_basis: Matrix,
    hom_basis: Vec<ModuleMorphism>,
    /// Columns: basis of `e_v·Hom` in hom-basis coordinates.
    vertex_bases: Vec<Matrix>,
}

impl HomData {
    fn coordinates(&self, f: &ModuleMorphism) -> Vec<Scalar> {
        let field = f.source().field();
        if self.hom_basis.is_empty() {
            return Vec::new();
        }
        self.flat_basis
            .solve(&Matrix::column_vector(field, &f.flatten()))
            .expect("morphism lies in the hom space")
            .column(0)
    }

    fn morphism(&self, coords: &[Scalar]) -> ModuleMorphism {
        let mut acc = ModuleMorphism::zero(self.hom_basis[0].source(), self.hom_basis[0].target());
        for (c, b) in coords.iter().zip(&self.hom_basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    /// Coordinates in `vertex_bases[v]` of an element of `e_v·Hom`.
    fn local(&self, v: usize, coords: &[Scalar]) -> Vec<Scalar> {
        let field = self.vertex_bases[v].field();
        if self.vertex_bases[v].cols() == 0 {
            return Vec::new();
        }
        self.vertex_bases[v]
            .solve(&Matrix::column_vector(field, coords))
            .expect("element lies in the vertex component")
            .column(0)
    }
}

/// Right multiplication by a basis element, as an endomorphism of `J0`.
fn right_multiplication_on(
    algebra: &PathAlgebra,
    j0: &Representation,
    incl: &ModuleMorphism,
    gamma: usize,
) -> ModuleMorphism {
    let field = algebra.field();
    let reg = incl.target();
    let g = algebra.basis_element(gamma);
    let maps = (0..algebra.vertex_count())
        .map(|w| {
            let basis = incl.map(w);
            let cols: Vec<Vec<Scalar>> = (0..basis.cols())
                .map(|c| {
                    let x = from_regular_coords(algebra, &reg.embed(w, &basis.column(c)));
                    let xg = algebra.mul(&crate::algebra::AlgebraElement(x), &g);
                    reg.component(&to_regular_coords(algebra, &xg.0), w)
                })
                .collect();
            let image = Matrix::from_columns(field, reg.dims()[w], &cols);
            if basis.cols() == 0 {
                Matrix::zeros(field, 0, 0)
            } else {
                basis.solve(&image).expect("J0 is a right ideal")
            }
        })
        .collect();
    ModuleMorphism::from_parts(j0.clone(), j0.clone(), maps)
}

pub fn localize(topology: &GabrielTopology, m: &Representation) -> Result<LocalizedModule> {
    let alg = topology.algebra().clone();
    if !crate::module::same_algebra(&alg, m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let field = alg.field();
    let k = alg.vertex_count();
    let seq = topology.pair().torsion_submodule(m)?;
    let n = seq.torsionfree.clone();
    let (j0, incl) = topology.j0().to_module();
    let hom_basis = hom_space(&j0, &n)?;
    let h = hom_basis.len();
    let flat: Vec<Vec<Scalar>> = hom_basis.iter().map(ModuleMorphism::flatten).collect();
    let flat_len = flat.first().map_or(0, Vec::len);
    let mut data = HomData {
        to_torsionfree: seq.projection.clone(),
        flat_basis: Matrix::from_columns(field, flat_len, &flat),
        hom_basis,
        vertex_bases: Vec::new(),
    };
    // action matrix of γ on Hom(J0, N) in hom-basis coordinates
    let action = |gamma: usize| -> Matrix {
        let r = right_multiplication_on(&alg, &j0, &incl, gamma);
        let cols: Vec<Vec<Scalar>> = data.hom_basis.iter().map(|f| data.coordinates(&f.compose(&r))).collect();
        Matrix::from_columns(field, h, &cols)
    };
    let idempotent_actions: Vec<Matrix> = (0..k).map(|v| action(alg.idempotent(v))).collect();
    let arrow_actions: Vec<Matrix> = (0..alg.quiver().arrows().len())
        .map(|a| action(alg.arrow_basis_index(a)))
        .collect();
    let vertex_bases: Vec<Matrix> = idempotent_actions.iter().map(Matrix::column_basis).collect();
    let dims: Vec<usize> = vertex_bases.iter().map(Matrix::cols).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            let moved = arrow_actions[a].mul(&vertex_bases[arrow.source]);
            if dims[arrow.target] == 0 || dims[arrow.source] == 0 {
                Matrix::zeros(field, dims[arrow.target], dims[arrow.source])
            } else {
                vertex_bases[arrow.target].solve(&moved).expect("arrows respect vertex components")
            }
        })
        .collect();
    data.vertex_bases = vertex_bases;
    let module = Representation::new(alg.clone(), dims, maps)?;

    // ψ(m) = (x ↦ x·m̄)
    let psi_maps = (0..k)
        .map(|v| {
            let cols: Vec<Vec<Scalar>> = (0..m.dims()[v])
                .map(|i| {
                    let mut local = vec![field.zero(); m.dims()[v]];
                    local[i] = field.one();
                    let mbar = seq.projection.apply(&m.embed(v, &local));
                    let phi = evaluation_morphism(&j0, &incl, &n, &mbar);
                    data.local(v, &data.coordinates(&phi))
                })
                .collect();
            Matrix::from_columns(field, module.dims()[v], &cols)
        })
        .collect();
    let psi = ModuleMorphism::new(m.clone(), module.clone(), psi_maps)?;
    let psi_kernel = kernel(&psi).0;
    let psi_cokernel = cokernel(&psi).0;
    Ok(LocalizedModule {
        module,
        psi,
        psi_kernel,
        psi_cokernel,
        data,
    })
}

/// `x ↦ x·y` as a morphism `J0 → N`.
fn evaluation_morphism(
    j0: &Representation,
    incl: &ModuleMorphism,
    n: &Representation,
    y: &[Scalar],
) -> ModuleMorphism {
    let alg = j0.algebra();
    let field = alg.field();
    let reg = incl.target();
    let maps = (0..alg.vertex_count())
        .map(|w| {
            let basis = incl.map(w);
            let cols: Vec<Vec<Scalar>> = (0..basis.cols())
                .map(|c| {
                    let x = from_regular_coords(alg, &reg.embed(w, &basis.column(c)));
                    n.component(&n.act(&x, y), w)
                })
                .collect();
            Matrix::from_columns(field, n.dims()[w], &cols)
        })
        .collect();
    ModuleMorphism::from_parts(j0.clone(), n.clone(), maps)
}

/// `f_𝔊: M_𝔊 → N_𝔊`, `g ↦ f̄ ∘ g` with `f̄: M/tM → N/tN`.
pub fn localize_morphism(
    f: &ModuleMorphism,
    source: &LocalizedModule,
    target: &LocalizedModule,
) -> ModuleMorphism {
    let field = f.source().field();
    let k = f.source().dims().len();
    let ms = &source.data;
    let ns = &target.data;
    let m_tf = ms.to_torsionfree.target();
    let n_tf = ns.to_torsionfree.target();
    // f̄ = proj_N ∘ f ∘ section_M
    let fbar_maps: Vec<Matrix> = (0..k)
        .map(|v| {
            let p = ms.to_torsionfree.map(v);
            let section = if p.rows() == 0 {
                Matrix::zeros(field, p.cols(), 0)
            } else {
                p.transpose()
                    .mul(&p.mul(&p.transpose()).inverse().expect("projection has full row rank"))
            };
            ns.to_torsionfree.map(v).mul(f.map(v)).mul(&section)
        })
        .collect();
    let fbar = ModuleMorphism::from_parts(m_tf.clone(), n_tf.clone(), fbar_maps);
    let maps = (0..k)
        .map(|v| {
            let basis = &ms.vertex_bases[v];
            let cols: Vec<Vec<Scalar>> = (0..basis.cols())
                .map(|c| {
                    let g = ms.morphism(&basis.column(c));
                    ns.local(v, &ns.coordinates(&fbar.compose(&g)))
                })
                .collect();
            Matrix::from_columns(field, target.module.dims()[v], &cols)
        })
        .collect();
    ModuleMorphism::from_parts(source.module.clone(), target.module.clone(), maps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosednessReport {
    /// `Hom(Γ/J0, M) = 0`.
    pub hom_vanishes: bool,
    /// `Ext¹(Γ/J0, M) = 0`.
    pub ext_vanishes: bool,
    pub envelope_torsionfree: bool,
    pub envelope_quotient_torsionfree: bool,
    pub closed: bool,
    /// Both characterisations give the same answer.
    pub agrees: bool,
}

pub fn is_closed(topology: &GabrielTopology, m: &Representation) -> Result<ClosednessReport> {
    let gj = topology.quotient_by_j0();
    let ext = crate::homolog::ext_dims(&gj, m, 1)?;
    let hom_vanishes = ext[0] == 0;
    let ext_vanishes = ext[1] == 0;
    let env = injective_envelope(m);
    let pair = topology.pair();
    let envelope_torsionfree = pair.is_torsionfree(env.map.target());
    let envelope_quotient_torsionfree = pair.is_torsionfree(&cokernel(&env.map).0);
    let closed = hom_vanishes && ext_vanishes;
    Ok(ClosednessReport {
        hom_vanishes,
        ext_vanishes,
        envelope_torsionfree,
        envelope_quotient_torsionfree,
        closed,
        agrees: closed == (envelope_torsionfree && envelope_quotient_torsionfree),
    })
}

fn require_closed(topology: &GabrielTopology, m: &Representation, what: &str) -> Result<()> {
    if is_closed(topology, m)?.closed {
        Ok(())
    } else {
        Err(Error::NotClosed(what.to_string()))
    }
}

fn require_endpoints(topology: &GabrielTopology, f: &ModuleMorphism) -> Result<()> {
    require_closed(topology, f.source(), "source")?;
    require_closed(topology, f.target(), "target")
}

/// Kernels of closed modules are computed in the ambient category.
pub fn q_kernel(topology: &GabrielTopology, f: &ModuleMorphism) -> Result<Representation> {
    require_endpoints(topology, f)?;
    Ok(kernel(f).0)
}

pub fn q_cokernel(topology: &GabrielTopology, f: &ModuleMorphism) -> Result<Representation> {
    require_endpoints(topology, f)?;
    Ok(localize(topology, &cokernel(f).0)?.module)
}

pub fn q_image(topology: &GabrielTopology, f: &ModuleMorphism) -> Result<Representation> {
    require_endpoints(topology, f)?;
    Ok(localize(topology, &image(f).0)?.module)
}

pub fn q_coimage(topology: &GabrielTopology, f: &ModuleMorphism) -> Result<Representation> {
    require_endpoints(topology, f)?;
    let spans = spans_of(&kernel(f).1);
    Ok(localize(topology, &quotient(f.source(), &spans).0)?.module)
}

/// The induced map `(M/ker f)_𝔊 → ker(N → (N/f(M))_𝔊)` is an isomorphism.
pub fn q_iso_check(topology: &GabrielTopology, f: &ModuleMorphism) -> Result<bool> {
    require_endpoints(topology, f)?;
    let n = f.target();
    let (coim, coim_proj) = quotient(f.source(), &spans_of(&kernel(f).1));
    // ī: M/ker f → N
    let induced_maps: Vec<Matrix> = (0..n.dims().len())
        .map(|v| {
            let p = coim_proj.map(v);
            if p.rows() == 0 {
                return Matrix::zeros(n.field(), n.dims()[v], 0);
            }
            let section = p.transpose().mul(&p.mul(&p.transpose()).inverse().expect("full row rank"));
            f.map(v).mul(&section)
        })
        .collect();
    let induced = ModuleMorphism::new(coim.clone(), n.clone(), induced_maps)?;
    let coim_loc = localize(topology, &coim)?;
    let n_loc = localize(topology, n)?;
    let psi_inv = n_loc.psi.inverse().ok_or_else(|| Error::NotClosed("target".into()))?;
    let g = psi_inv.compose(&localize_morphism(&induced, &coim_loc, &n_loc));
    // categorical image: kernel of N → coker f → (coker f)_𝔊
    let (c, c_proj) = cokernel(f);
    let c_loc = localize(topology, &c)?;
    let (img, img_incl) = kernel(&c_loc.psi.compose(&c_proj));
    let image_of_g = image(&g).1;
    let contained = (0..n.dims().len()).all(|v| subspace::is_subspace(image_of_g.map(v), img_incl.map(v)));
    Ok(g.is_injective() && contained && image_of_g.source().dim() == img.dim())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuotientExactnessReport {
    pub monomorphism: bool,
    pub middle_exact: bool,
    /// Dimension vector of `X = coker(M → M'')`.
    pub cokernel_dims: Vec<usize>,
    /// `Hom(X, Γ) = 0`.
    pub cokernel_in_perp: bool,
    pub holds: bool,
}

/// `0 → M' → M → M'' → X → 0` with `X ∈ ⊥0Γ`, for closed `M', M, M''`.
pub fn quotient_exactness(
    topology: &GabrielTopology,
    f: &ModuleMorphism,
    g: &ModuleMorphism,
) -> Result<(QuotientExactnessReport, Representation)> {
    require_closed(topology, f.source(), "M'")?;
    require_closed(topology, f.target(), "M")?;
    require_closed(topology, g.target(), "M''")?;
    if f.target().dims() != g.source().dims() {
        return Err(Error::BadParameters("maps are not composable".into()));
    }
    let monomorphism = f.is_injective();
    let composite_zero = g.compose(f).is_zero();
    let middle_exact = composite_zero && kernel(g).0.dim() == f.rank();
    let (x, _) = cokernel(g);
    let regular = crate::module::regular(topology.algebra());
    let cokernel_in_perp = hom_space(&x, &regular)?.is_empty();
    let report = QuotientExactnessReport {
        monomorphism,
        middle_exact,
        cokernel_dims: x.dims().to_vec(),
        cokernel_in_perp,
        holds: monomorphism && middle_exact && cokernel_in_perp,
    };
    Ok((report, x))
}

/// `Ext¹(Γ/J, M)` and `Hom(Γ/J, M)` for an arbitrary dense `J`.
pub fn closed_against(j_quotient: &Representation, m: &Representation) -> Result<bool> {
    let ext = crate::homolog::ext_dims(j_quotient, m, 1)?;
    Ok(ext[0] == 0 && ext[1] == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::example211;
    use crate::field::Field;
    use crate::module::{projective, regular, simple};
    use crate::topology::gabriel_topology;
    use std::sync::Arc;
    use crate::torsion::torsion_pair_from_injective;

    fn setup(n: usize) -> (Arc<PathAlgebra>, GabrielTopology) {
        let a = Arc::new(example211(n, Field::Rational).unwrap());
        let e = injective_envelope(&regular(&a)).map.target().clone();
        let t = gabriel_topology(&torsion_pair_from_injective(&e).unwrap());
        (a, t)
    }

    #[test]
    fn localize_s2() {
        let (a, t) = setup(1);
        let l = localize(&t, &simple(&a, 1)).unwrap();
        assert_eq!(l.module.dims(), &[1, 1, 0]);
        assert!(l.psi.is_injective());
        assert_eq!(l.psi_cokernel.dims(), &[1, 0, 0]);
        assert!(localize(&t, &simple(&a, 0)).unwrap().module.is_zero());
        let p2 = localize(&t, &projective(&a, 1)).unwrap();
        assert!(p2.psi.is_isomorphism());
        let again = localize(&t, &l.module).unwrap();
        assert!(again.psi.is_isomorphism());
    }

    #[test]
    fn closedness_examples() {
        let (a, t) = setup(1);
        let r = is_closed(&t, &projective(&a, 0)).unwrap();
        assert!(r.closed && r.agrees);
        let r = is_closed(&t, &simple(&a, 1)).unwrap();
        assert!(!r.closed && !r.ext_vanishes && r.agrees);
        let r = is_closed(&t, &simple(&a, 0)).unwrap();
        assert!(!r.closed && !r.hom_vanishes && r.agrees);
    }

    #[test]
    fn quotient_calculus_for_p2_to_p1() {
        let (a, t) = setup(1);
        let (p2, p1) = (projective(&a, 1), projective(&a, 0));
        let f = hom_space(&p2, &p1).unwrap().into_iter().find(|f| !f.is_zero()).unwrap();
        assert!(q_cokernel(&t, &f).unwrap().is_zero());
        assert_eq!(q_image(&t, &f).unwrap().dims(), &[1, 1, 0]);
        assert_eq!(q_coimage(&t, &f).unwrap().dims(), &[1, 1, 0]);
        assert_eq!(q_kernel(&t, &f).unwrap().dims(), &[0, 0, 1]);
        assert!(q_iso_check(&t, &f).unwrap());
        let id = ModuleMorphism::identity(&p1);
        assert!(q_kernel(&t, &id).unwrap().is_zero() && q_cokernel(&t, &id).unwrap().is_zero());
        let zero = ModuleMorphism::zero(&p2, &p1);
        assert!(q_image(&t, &zero).unwrap().is_zero());
        assert_eq!(q_cokernel(&t, &zero).unwrap().dims(), p1.dims());
        assert!(q_iso_check(&t, &zero).unwrap());
        let s2 = simple(&a, 1);
        assert!(matches!(q_kernel(&t, &ModuleMorphism::identity(&s2)), Err(Error::NotClosed(_))));
    }

    #[test]
    fn quotient_exact_sequence() {
        let (a, t) = setup(1);
        let (p3, p2, p1) = (projective(&a, 2), projective(&a, 1), projective(&a, 0));
        let f = hom_space(&p3, &p2).unwrap().remove(0);
        let g = hom_space(&p2, &p1).unwrap().into_iter().find(|f| !f.is_zero()).unwrap();
        let (r, x) = quotient_exactness(&t, &f, &g).unwrap();
        assert!(r.holds);
        assert_eq!(x.dims(), &[1, 0, 0]);
        let (r, _) = quotient_exactness(&t, &f, &ModuleMorphism::identity(&p2)).unwrap();
        assert!(!r.holds);
        let (r, _) = quotient_exactness(&t, &f, &ModuleMorphism::zero(&p2, &p1)).unwrap();
        assert!(!r.holds);
    }
}
