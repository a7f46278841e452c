//! Left ideals of `Γ`, stored as the reduced row echelon form of a spanning
//! set in algebra-basis coordinates, so equal ideals compare equal.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::algebra::{AlgebraElement, PathAlgebra};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{subspace, Matrix};
use crate::module::{
    from_regular_coords, quotient, regular, same_algebra, submodule, to_regular_coords, ModuleMorphism,
    Representation,
};

#[derive(Clone, Debug)]
pub struct LeftIdeal {
    algebra: Arc<PathAlgebra>,
    /// Nonzero rows of an rref matrix; row `r` is a basis vector.
    rows: Matrix,
}

impl PartialEq for LeftIdeal {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.rows == other.rows
    }
}

impl Eq for LeftIdeal {}

impl Hash for LeftIdeal {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
    }
}

impl LeftIdeal {
    fn from_columns_unchecked(algebra: &Arc<PathAlgebra>, span: &Matrix) -> LeftIdeal {
        LeftIdeal {
            algebra: algebra.clone(),
            rows: subspace::canonical(span),
        }
    }

    /// The span of `vectors`, which must already be closed under left multiplication.
    pub fn from_span(algebra: &Arc<PathAlgebra>, vectors: &[Vec<Scalar>]) -> Result<LeftIdeal> {
        if vectors.iter().any(|v| v.len() != algebra.dim()) {
            return Err(Error::ElementMismatch);
        }
        let span = Matrix::from_columns(algebra.field(), algebra.dim(), vectors);
        let ideal = LeftIdeal::from_columns_unchecked(algebra, &span);
        if !ideal.is_left_ideal() {
            return Err(Error::BadParameters("span is not closed under left multiplication".into()));
        }
        Ok(ideal)
    }

    /// The left ideal `Γx_1 + … + Γx_r`.
    pub fn generated_by(algebra: &Arc<PathAlgebra>, elements: &[AlgebraElement]) -> LeftIdeal {
        let mut cols = Vec::new();
        for x in elements {
            for u in 0..algebra.dim() {
                cols.push(algebra.mul(&algebra.basis_element(u), x).0);
            }
        }
        let span = Matrix::from_columns(algebra.field(), algebra.dim(), &cols);
        LeftIdeal::from_columns_unchecked(algebra, &span)
    }

    pub fn zero(algebra: &Arc<PathAlgebra>) -> LeftIdeal {
        LeftIdeal::from_columns_unchecked(algebra, &Matrix::zeros(algebra.field(), algebra.dim(), 0))
    }

    pub fn whole(algebra: &Arc<PathAlgebra>) -> LeftIdeal {
        LeftIdeal::from_columns_unchecked(algebra, &Matrix::identity(algebra.field(), algebra.dim()))
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.rows.rows()
    }

    /// The canonical echelon basis, one row per basis vector.
    pub fn echelon(&self) -> &Matrix {
        &self.rows
    }

    /// Basis vectors as columns.
    pub fn span(&self) -> Matrix {
        self.rows.transpose()
    }

    pub fn basis(&self) -> Vec<AlgebraElement> {
        (0..self.rows.rows()).map(|r| AlgebraElement(self.rows.row(r))).collect()
    }

    pub fn is_whole(&self) -> bool {
        self.dim() == self.algebra.dim()
    }

    pub fn contains_element(&self, x: &AlgebraElement) -> bool {
        x.is_zero() || subspace::contains_vector(&self.span(), &x.0)
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &LeftIdeal) -> bool {
        subspace::is_subspace(&other.span(), &self.span())
    }

    pub fn intersection(&self, other: &LeftIdeal) -> LeftIdeal {
        let n = self.algebra.dim();
        let span = subspace::intersection(self.algebra.field(), n, &self.span(), &other.span());
        LeftIdeal::from_columns_unchecked(&self.algebra, &span)
    }

    pub fn sum(&self, other: &LeftIdeal) -> LeftIdeal {
        let n = self.algebra.dim();
        let span = subspace::sum(self.algebra.field(), n, &self.span(), &other.span());
        LeftIdeal::from_columns_unchecked(&self.algebra, &span)
    }

    /// `I·J`, the span of all products `ij`.
    pub fn product(&self, other: &LeftIdeal) -> LeftIdeal {
        let alg = &self.algebra;
        let mut cols = Vec::new();
        for i in self.basis() {
            for j in other.basis() {
                cols.push(alg.mul(&i, &j).0);
            }
        }
        LeftIdeal::from_columns_unchecked(alg, &Matrix::from_columns(alg.field(), alg.dim(), &cols))
    }

    fn stable_under(&self, side_left: bool) -> bool {
        let alg = &self.algebra;
        let span = self.span();
        self.basis().iter().all(|x| {
            (0..alg.dim()).all(|u| {
                let b = alg.basis_element(u);
                let y = if side_left { alg.mul(&b, x) } else { alg.mul(x, &b) };
                y.is_zero() || subspace::contains_vector(&span, &y.0)
            })
        })
    }

    pub fn is_left_ideal(&self) -> bool {
        self.stable_under(true)
    }

    pub fn is_two_sided(&self) -> bool {
        self.stable_under(false)
    }

    /// `(I : γ) = {λ : λγ ∈ I}`.
    pub fn ideal_quotient(&self, gamma: &AlgebraElement) -> LeftIdeal {
        let alg = &self.algebra;
        let n = alg.dim();
        let (_, proj) = subspace::quotient(alg.field(), n, &self.span());
        let map = proj.mul(&alg.right_multiplication(gamma));
        LeftIdeal::from_columns_unchecked(alg, &map.kernel())
    }

    /// Per-vertex spans inside the regular module (`e_v I ⊆ e_vΓ`).
    pub fn regular_spans(&self) -> Vec<Matrix> {
        let alg = &self.algebra;
        let reg = regular(alg);
        let vecs: Vec<Vec<Scalar>> = self.basis().iter().map(|x| to_regular_coords(alg, &x.0)).collect();
        (0..alg.vertex_count())
            .map(|v| {
                let cols: Vec<Vec<Scalar>> = vecs.iter().map(|x| reg.component(x, v)).collect();
                Matrix::from_columns(alg.field(), reg.dims()[v], &cols).column_basis()
            })
            .collect()
    }

    /// `I` as a left module with its inclusion into `Γ`.
    pub fn to_module(&self) -> (Representation, ModuleMorphism) {
        submodule(&regular(&self.algebra), &self.regular_spans())
    }

    /// `Γ/I` with the projection from `Γ`.
    pub fn quotient_module(&self) -> (Representation, ModuleMorphism) {
        quotient(&regular(&self.algebra), &self.regular_spans())
    }

    /// The left ideal with the given per-vertex spans in the regular module.
    pub fn from_regular_spans(algebra: &Arc<PathAlgebra>, spans: &[Matrix]) -> LeftIdeal {
        let reg = regular(algebra);
        let mut cols = Vec::new();
        for (v, s) in spans.iter().enumerate() {
            for c in 0..s.cols() {
                cols.push(from_regular_coords(algebra, &reg.embed(v, &s.column(c))));
            }
        }
        LeftIdeal::from_columns_unchecked(algebra, &Matrix::from_columns(algebra.field(), algebra.dim(), &cols))
    }
}

impl fmt::Display for LeftIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.algebra.basis_labels();
        let gens: Vec<String> = self
            .basis()
            .iter()
            .map(|x| {
                let terms: Vec<String> = x
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(u, c)| if c.is_one() { labels[u].clone() } else { format!("{c}*{}", labels[u]) })
                    .collect();
                terms.join("+")
            })
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// `Ann_Γ(x) = {γ : γx = 0}`.
pub fn annihilator_of_element(m: &Representation, x: &[Scalar]) -> Result<LeftIdeal> {
    if x.len() != m.dim() {
        return Err(Error::ElementMismatch);
    }
    let alg = m.algebra();
    let cols: Vec<Vec<Scalar>> = (0..alg.dim()).map(|u| m.act_basis(u, x)).collect();
    let action = Matrix::from_columns(alg.field(), m.dim(), &cols);
    Ok(LeftIdeal::from_columns_unchecked(alg, &action.kernel()))
}

/// `Ann_Γ(M)`, a two-sided ideal.
pub fn annihilator_of_module(m: &Representation) -> LeftIdeal {
    let alg = m.algebra();
    let field = alg.field();
    let mut rows: Vec<Matrix> = Vec::new();
    for i in 0..m.dim() {
        let mut x = m.zero_vector();
        x[i] = field.one();
        let cols: Vec<Vec<Scalar>> = (0..alg.dim()).map(|u| m.act_basis(u, &x)).collect();
        rows.push(Matrix::from_columns(field, m.dim(), &cols));
    }
    let refs: Vec<&Matrix> = rows.iter().collect();
    let stacked = Matrix::vstack(field, alg.dim(), &refs);
    LeftIdeal::from_columns_unchecked(alg, &stacked.kernel())
}

/// The two-sided ideal generated by the given elements.
pub fn two_sided_ideal(algebra: &Arc<PathAlgebra>, elements: &[AlgebraElement]) -> LeftIdeal {
    let mut cols = Vec::new();
    for x in elements {
        for u in 0..algebra.dim() {
            let left = algebra.mul(&algebra.basis_element(u), x);
            for w in 0..algebra.dim() {
                cols.push(algebra.mul(&left, &algebra.basis_element(w)).0);
            }
        }
    }
    LeftIdeal::from_columns_unchecked(algebra, &Matrix::from_columns(algebra.field(), algebra.dim(), &cols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::example211;
    use crate::field::Field;
    use crate::module::simple;

    fn alg() -> Arc<PathAlgebra> {
        Arc::new(example211(1, Field::Rational).unwrap())
    }

    #[test]
    fn annihilator_of_a_simple_generator() {
        let a = alg();
        let s1 = simple(&a, 0);
        let ann = annihilator_of_element(&s1, &[a.field().one()]).unwrap();
        assert_eq!(ann.dim(), 4);
        assert!(ann.is_left_ideal());
        assert_eq!(ann.quotient_module().0.dims(), &[1, 0, 0]);
    }

    #[test]
    fn trivial_annihilators() {
        let a = alg();
        let reg = regular(&a);
        assert!(annihilator_of_element(&reg, &reg.zero_vector()).unwrap().is_whole());
        let one = to_regular_coords(&a, &a.one().0);
        assert_eq!(annihilator_of_element(&reg, &one).unwrap().dim(), 0);
    }

    #[test]
    fn lattice_operations() {
        let a = alg();
        let e1 = LeftIdeal::generated_by(&a, &[a.basis_element(a.idempotent(0))]);
        let e2 = LeftIdeal::generated_by(&a, &[a.basis_element(a.idempotent(1))]);
        assert_eq!(e1.dim(), 2);
        assert_eq!(e1.intersection(&e2).dim(), 0);
        assert_eq!(e1.sum(&e2).dim(), 4);
        assert!(e1.sum(&e2).contains(&e1));
        assert!(LeftIdeal::whole(&a).is_two_sided());
        assert_eq!(LeftIdeal::whole(&a).ideal_quotient(&a.one()), LeftIdeal::whole(&a));
        let (m, incl) = e1.to_module();
        assert_eq!(m.dims(), &[1, 1, 0]);
        assert!(incl.is_injective());
        assert_eq!(LeftIdeal::from_regular_spans(&a, &e1.regular_spans()), e1);
    }

    #[test]
    fn module_annihilator_is_two_sided() {
        let a = alg();
        let ann = annihilator_of_module(&simple(&a, 1));
        assert!(ann.is_two_sided());
        assert_eq!(ann.dim(), 4);
    }
}
