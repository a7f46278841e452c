//! Gabriel topologies of hereditary torsion pairs.
//!
//! Over a finite-dimensional algebra every Gabriel topology is a principal
//! filter. Members are closed under finite intersections (T2) and left ideals
//! satisfy the descending chain condition, so the filter has a least element
//! `J0`, and by T1 it is exactly `{J : J ⊇ J0}`. With `e = Σ_{i ∈ V_E} e_i`,
//! `Γ/J` is torsion iff `e(Γ/J) = 0` iff `eΓ ⊆ J`, so `J0 = ΓeΓ`: the left
//! ideal generated by the vertex components `e_iΓ` of the regular module at
//! `V_E`. It is two-sided and idempotent.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, PathAlgebra};
use crate::error::Result;
use crate::field::{Field, Scalar};
use crate::homolog::HigherAg;
use crate::ideal::{annihilator_of_element, annihilator_of_module, LeftIdeal};
use crate::module::{simple, Representation};
use crate::torsion::TorsionPair;

#[derive(Debug, Clone)]
pub struct GabrielTopology {
    pair: TorsionPair,
    j0: LeftIdeal,
}

pub fn gabriel_topology(pair: &TorsionPair) -> GabrielTopology {
    let alg = pair.cogenerator().algebra().clone();
    let generators: Vec<AlgebraElement> = pair
        .support()
        .iter()
        .flat_map(|&v| alg.basis_to(v))
        .map(|u| alg.basis_element(u))
        .collect();
    let j0 = LeftIdeal::generated_by(&alg, &generators);
    GabrielTopology { pair: pair.clone(), j0 }
}

impl GabrielTopology {
    pub fn pair(&self) -> &TorsionPair {
        &self.pair
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        self.j0.algebra()
    }

    /// The minimal dense ideal.
    pub fn j0(&self) -> &LeftIdeal {
        &self.j0
    }

    pub fn is_dense(&self, j: &LeftIdeal) -> bool {
        j.contains(&self.j0)
    }

    /// Membership through the torsion class, `Γ/J` torsion.
    pub fn is_dense_by_quotient(&self, j: &LeftIdeal) -> bool {
        self.pair.is_torsion(&j.quotient_module().0)
    }

    /// `Γ/J0`.
    pub fn quotient_by_j0(&self) -> Representation {
        self.j0.quotient_module().0
    }
}

/// The prime `𝔭_i = Ann_Γ(S(i))`.
pub fn prime_ideal(algebra: &Arc<PathAlgebra>, vertex: usize) -> LeftIdeal {
    annihilator_of_module(&simple(algebra, vertex))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensePrime {
    /// 1-based vertex.
    pub vertex: usize,
    pub dense: bool,
    /// `Γ/𝔭_i` is not torsion-free.
    pub not_torsionfree: bool,
    pub gpd: usize,
    /// `dense ⇔ not torsion-free ⇔ gpd(Γ/𝔭_i) = n+1`.
    pub agrees: bool,
}

pub fn dense_primes(topology: &GabrielTopology, cert: &HigherAg) -> Result<Vec<DensePrime>> {
    let alg = topology.algebra();
    let n = cert.n();
    (0..alg.vertex_count())
        .map(|v| {
            let p = prime_ideal(alg, v);
            let quotient = p.quotient_module().0;
            let dense = topology.is_dense(&p);
            let not_torsionfree = !topology.pair().is_torsionfree(&quotient);
            let gpd = cert.gpd(&quotient)?;
            Ok(DensePrime {
                vertex: v + 1,
                dense,
                not_torsionfree,
                gpd,
                agrees: dense == not_torsionfree && dense == (gpd == n + 1),
            })
        })
        .collect()
}

/// One-way certificate: `𝔞 ⊇ 𝔭_{i_1}⋯𝔭_{i_k}` with every factor dense implies
/// `𝔞` dense, since products of members stay in the filter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCertificate {
    pub contains_product: bool,
    pub factors_dense: bool,
    pub valid: bool,
    pub ideal_dense: bool,
}

pub fn prime_product_certificate(
    topology: &GabrielTopology,
    ideal: &LeftIdeal,
    vertices: &[usize],
) -> ProductCertificate {
    let alg = topology.algebra();
    let mut product = LeftIdeal::whole(alg);
    let mut factors_dense = true;
    for &v in vertices {
        let p = prime_ideal(alg, v);
        factors_dense &= topology.is_dense(&p);
        product = product.product(&p);
    }
    let contains_product = ideal.contains(&product);
    ProductCertificate {
        contains_product,
        factors_dense,
        valid: contains_product && factors_dense,
        ideal_dense: topology.is_dense(ideal),
    }
}

/// Every `x` up to nonzero scalars (first nonzero coordinate 1), over a finite field.
pub fn projective_points(field: Field, dim: usize) -> Vec<Vec<Scalar>> {
    let elems = field.elements();
    let mut out = vec![vec![field.zero(); dim]];
    for lead in 0..dim {
        let mut partial: Vec<Vec<Scalar>> = vec![Vec::new()];
        for _ in lead + 1..dim {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    elems.iter().map(move |e| {
                        let mut q = p.clone();
                        q.push(e.clone());
                        q
                    })
                })
                .collect();
        }
        for tail in partial {
            let mut x = vec![field.zero(); lead];
            x.push(field.one());
            x.extend(tail);
            out.push(x);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnihilatorReport {
    pub gpd_module: usize,
    pub n: usize,
    /// `gpd(M) < n+1`.
    pub module_side: bool,
    pub max_annihilator_gpd: usize,
    /// `gpd(Ann x) < n` for every tested `x`.
    pub element_side: bool,
    pub tested: usize,
    /// `false` over `ℚ`, where elements are sampled.
    pub exhaustive: bool,
    pub holds: bool,
    /// An element with the largest annihilator gpd.
    pub witness: Option<Vec<String>>,
}

/// Compares `gpd(M) < n+1` with `gpd(Ann_Γ(x)) < n` for all `x ∈ M` (up to
/// scalars) over a finite field, or for sampled `x` over `ℚ`.
pub fn annihilator_criterion(m: &Representation, cert: &HigherAg, seed: u64) -> Result<AnnihilatorReport> {
    let n = cert.n();
    let field = m.field();
    let (elements, exhaustive) = if field.is_finite() {
        (projective_points(field, m.dim()), true)
    } else {
        (sampled_elements(m, seed, 24), false)
    };
    let mut cache: HashMap<LeftIdeal, usize> = HashMap::new();
    let mut max_gpd = 0;
    let mut witness = None;
    for x in &elements {
        let ann = annihilator_of_element(m, x)?;
        let g = match cache.get(&ann) {
            Some(&g) => g,
            None => {
                let g = cert.gpd(&ann.to_module().0)?;
                cache.insert(ann, g);
                g
            }
        };
        if g > max_gpd || witness.is_none() {
            max_gpd = max_gpd.max(g);
            witness = Some(x.iter().map(ToString::to_string).collect());
        }
    }
    let gpd_module = cert.gpd(m)?;
    let module_side = gpd_module < n + 1;
    let element_side = max_gpd < n;
    Ok(AnnihilatorReport {
        gpd_module,
        n,
        module_side,
        max_annihilator_gpd: max_gpd,
        element_side,
        tested: elements.len(),
        exhaustive,
        holds: module_side == element_side,
        witness,
    })
}

/// Basis vectors plus random combinations with small integer coefficients.
fn sampled_elements(m: &Representation, seed: u64, extra: usize) -> Vec<Vec<Scalar>> {
    let field = m.field();
    let mut out = vec![m.zero_vector()];
    for i in 0..m.dim() {
        let mut x = m.zero_vector();
        x[i] = field.one();
        out.push(x);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if m.dim() > 0 {
        for _ in 0..extra {
            out.push((0..m.dim()).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect());
        }
    }
    out
}

/// A violated axiom with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: String,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub ideals: usize,
    pub members: usize,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks T1–T4 for `{J ⊇ J0}` on a sample of left ideals, quantifying over
/// basis elements of `Γ` (T3) and of the witnessing ideal (T4).
pub fn axiom_check(topology: &GabrielTopology, sample: &[LeftIdeal]) -> AxiomReport {
    let alg = topology.algebra();
    let member: Vec<bool> = sample.iter().map(|j| topology.is_dense(j)).collect();
    let mut violations = Vec::new();
    let mut flag = |axiom: &str, witness: String| {
        violations.push(AxiomViolation {
            axiom: axiom.to_string(),
            witness,
        })
    };
    for (a, i) in sample.iter().enumerate() {
        for (b, j) in sample.iter().enumerate() {
            if member[a] && j.contains(i) && !member[b] {
                flag("T1", format!("I = {i}, J = {j}"));
            }
            if member[a] && member[b] && !topology.is_dense(&i.intersection(j)) {
                flag("T2", format!("I = {i}, J = {j}"));
            }
        }
        if member[a] {
            for u in 0..alg.dim() {
                if !topology.is_dense(&i.ideal_quotient(&alg.basis_element(u))) {
                    flag("T3", format!("I = {i}, gamma = {}", alg.basis_labels()[u]));
                }
            }
        } else {
            for (b, j) in sample.iter().enumerate() {
                if member[b] && j.basis().iter().all(|x| topology.is_dense(&i.ideal_quotient(x))) {
                    flag("T4", format!("I = {i}, J = {j}"));
                }
            }
        }
    }
    AxiomReport {
        ideals: sample.len(),
        members: member.iter().filter(|&&m| m).count(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{example211, semisimple};
    use crate::homolog::injective_envelope;
    use crate::module::{regular, simple};
    use crate::torsion::torsion_pair_from_injective;

    fn dense(a: &Arc<PathAlgebra>) -> GabrielTopology {
        let e = injective_envelope(&regular(a)).map.target().clone();
        gabriel_topology(&torsion_pair_from_injective(&e).unwrap())
    }

    #[test]
    fn minimal_dense_ideal_of_example() {
        let a = Arc::new(example211(1, Field::Rational).unwrap());
        let t = dense(&a);
        assert_eq!(t.j0().dim(), 4);
        assert!(t.j0().is_two_sided());
        assert_eq!(t.j0().product(t.j0()), *t.j0());
        assert_eq!(t.quotient_by_j0().dims(), &[1, 0, 0]);
        let q = t.j0().ideal_quotient(&a.basis_element(a.idempotent(0)));
        assert!(t.is_dense(&q) && t.is_dense_by_quotient(&q));
    }

    #[test]
    fn non_dense_ideal() {
        let a = Arc::new(example211(1, Field::Rational).unwrap());
        let t = dense(&a);
        // kernel of Γ ↠ S(2)
        let j = annihilator_of_element(&simple(&a, 1), &[a.field().one()]).unwrap();
        assert_eq!(j.quotient_module().0.dims(), &[0, 1, 0]);
        assert!(!t.is_dense(&j));
        assert!(!t.is_dense_by_quotient(&j));
    }

    #[test]
    fn dense_primes_for_n1() {
        let a = Arc::new(example211(1, Field::Rational).unwrap());
        let t = dense(&a);
        let cert = HigherAg::certify(&a, 1, 16).unwrap();
        let primes = dense_primes(&t, &cert).unwrap();
        let flags: Vec<(bool, usize)> = primes.iter().map(|p| (p.dense, p.gpd)).collect();
        assert_eq!(flags, vec![(true, 2), (false, 1), (false, 0)]);
        assert!(primes.iter().all(|p| p.agrees));
        let cert1 = prime_product_certificate(&t, t.j0(), &[0]);
        assert!(cert1.valid && cert1.ideal_dense);
    }

    #[test]
    fn semisimple_topology_is_trivial() {
        let a = Arc::new(semisimple(2, Field::Rational).unwrap());
        assert!(dense(&a).j0().is_whole());
    }

    #[test]
    fn prop22_examples_over_f2() {
        let a = Arc::new(example211(1, Field::prime(2).unwrap()).unwrap());
        let cert = HigherAg::certify(&a, 1, 16).unwrap();
        let r = annihilator_criterion(&simple(&a, 0), &cert, 0).unwrap();
        assert_eq!((r.gpd_module, r.max_annihilator_gpd), (2, 1));
        assert!(r.holds && r.exhaustive);
        let r = annihilator_criterion(&simple(&a, 1), &cert, 0).unwrap();
        assert_eq!((r.gpd_module, r.max_annihilator_gpd), (1, 0));
        assert!(r.holds);
        assert!(annihilator_criterion(&Representation::zero(&a), &cert, 0).unwrap().holds);
    }

    #[test]
    fn projective_point_count() {
        let f = Field::prime(3).unwrap();
        // 1 + (3^3 - 1)/2
        assert_eq!(projective_points(f, 3).len(), 14);
    }
}
