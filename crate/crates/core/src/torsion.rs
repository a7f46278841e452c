//! Hereditary torsion pairs cogenerated by an injective module `E`.
//!
//! `E ≅ ⊕ I(i)^{s_i}` and `dim Hom(M, I(i)) = dim M_i`, so `Hom(M, E) = 0`
//! exactly when `M` has no composition factor `S(i)` with `i` in the socle
//! support `V_E = {i : s_i > 0}`. Torsion membership is therefore a
//! dimension-vector test.

use crate::error::{Error, Result};
use crate::matrix::{subspace, Matrix};
use crate::module::{
    hom_space, is_injective, quotient, socle_multiplicities, submodule, ModuleMorphism, Representation,
};

#[derive(Debug, Clone)]
pub struct TorsionPair {
    cogenerator: Representation,
    support: Vec<usize>,
}

/// `0 → t(M) → M → M/t(M) → 0`.
#[derive(Debug, Clone)]
pub struct CanonicalSequence {
    pub torsion: Representation,
    pub inclusion: ModuleMorphism,
    pub torsionfree: Representation,
    pub projection: ModuleMorphism,
}

pub fn torsion_pair_from_injective(e: &Representation) -> Result<TorsionPair> {
    if !is_injective(e) {
        return Err(Error::NotInjective);
    }
    let support = socle_multiplicities(e)
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > 0)
        .map(|(v, _)| v)
        .collect();
    Ok(TorsionPair {
        cogenerator: e.clone(),
        support,
    })
}

impl TorsionPair {
    pub fn cogenerator(&self) -> &Representation {
        &self.cogenerator
    }

    /// `V_E`, 0-based and sorted.
    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn is_torsion(&self, m: &Representation) -> bool {
        self.support.iter().all(|&v| m.dims()[v] == 0)
    }

    /// Torsion-free iff the socle lives on `V_E`.
    pub fn is_torsionfree(&self, m: &Representation) -> bool {
        socle_multiplicities(m)
            .iter()
            .enumerate()
            .all(|(v, &s)| s == 0 || self.support.contains(&v))
    }

    /// `t(M)` as the joint kernel of a basis of `Hom(M, E)`.
    pub fn torsion_submodule(&self, m: &Representation) -> Result<CanonicalSequence> {
        let basis = hom_space(m, &self.cogenerator)?;
        let field = m.field();
        let spans: Vec<Matrix> = (0..m.dims().len())
            .map(|v| {
                let parts: Vec<&Matrix> = basis.iter().map(|f| f.map(v)).collect();
                if parts.is_empty() {
                    Matrix::identity(field, m.dims()[v])
                } else {
                    Matrix::vstack(field, m.dims()[v], &parts).kernel()
                }
            })
            .collect();
        let (torsion, inclusion) = submodule(m, &spans);
        let (torsionfree, projection) = quotient(m, &spans);
        Ok(CanonicalSequence {
            torsion,
            inclusion,
            torsionfree,
            projection,
        })
    }

    /// `t(M)` as the largest submodule vanishing on `V_E`: start from the
    /// spaces off `V_E` and shrink until stable under the arrows.
    pub fn torsion_submodule_by_support(&self, m: &Representation) -> (Representation, ModuleMorphism) {
        let field = m.field();
        let arrows = m.algebra().quiver().arrows().to_vec();
        let mut spans: Vec<Matrix> = (0..m.dims().len())
            .map(|v| {
                if self.support.contains(&v) {
                    Matrix::zeros(field, m.dims()[v], 0)
                } else {
                    Matrix::identity(field, m.dims()[v])
                }
            })
            .collect();
        loop {
            let mut changed = false;
            for (a, arrow) in arrows.iter().enumerate() {
                let (i, j) = (arrow.source, arrow.target);
                // keep x ∈ U_i with M_a x ∈ U_j
                let (_, proj) = subspace::quotient(field, m.dims()[j], &spans[j]);
                let cond = proj.mul(m.map(a)).mul(&spans[i]);
                let keep = spans[i].mul(&cond.kernel());
                let keep = keep.column_basis();
                if keep.cols() < spans[i].cols() {
                    spans[i] = keep;
                    changed = true;
                }
            }
            if !changed {
                return submodule(m, &spans);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{example211, loop_truncated, semisimple};
    use crate::field::Field;
    use crate::homolog::injective_envelope;
    use crate::module::{direct_sum, projective, regular, simple};
    use std::sync::Arc;

    #[test]
    fn dense_pair_of_example() {
        let a = Arc::new(example211(1, Field::Rational).unwrap());
        let e = injective_envelope(&regular(&a)).map.target().clone();
        let pair = torsion_pair_from_injective(&e).unwrap();
        assert_eq!(pair.support(), &[1, 2]);
        assert!(pair.is_torsion(&simple(&a, 0)));
        assert!(!pair.is_torsion(&simple(&a, 1)));
        let m = direct_sum(&[&simple(&a, 0), &simple(&a, 1)]);
        let seq = pair.torsion_submodule(&m).unwrap();
        assert_eq!(seq.torsion.dims(), &[1, 0, 0]);
        assert_eq!(seq.torsionfree.dims(), &[0, 1, 0]);
        assert_eq!(pair.torsion_submodule_by_support(&m).0.dims(), &[1, 0, 0]);
        for v in 0..3 {
            let p = projective(&a, v);
            assert!(pair.torsion_submodule(&p).unwrap().torsion.is_zero());
            assert!(pair.is_torsionfree(&p));
        }
        assert!(matches!(torsion_pair_from_injective(&simple(&a, 1)), Err(Error::NotInjective)));
    }

    #[test]
    fn trivial_pairs() {
        let s = Arc::new(semisimple(2, Field::Rational).unwrap());
        let pair = torsion_pair_from_injective(&regular(&s)).unwrap();
        assert_eq!(pair.support(), &[0, 1]);
        let l = Arc::new(loop_truncated(2, Field::Rational).unwrap());
        let pair = torsion_pair_from_injective(&regular(&l)).unwrap();
        assert!(!pair.is_torsion(&simple(&l, 0)));
    }
}
