//! Independent recomputations used to cross-check library results.
#![allow(dead_code)]

use std::sync::Arc;

use quiverlab::homolog::{minimal_resolution, Direction};
use quiverlab::module::hom_space;
use quiverlab::topology::GabrielTopology;
use quiverlab::{Field, Matrix, PathAlgebra, Representation, Scalar};

fn rank_of(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    Matrix::from_rows(field, cols, &rows).rank()
}

/// `dim Ext^i(M, N)` for `i = 0..=max_degree` from `Hom(M, I^•)` where `I^•`
/// is the minimal injective resolution of `N`.
pub fn ext_by_injective_resolution(m: &Representation, n: &Representation, max_degree: usize) -> Vec<usize> {
    let res = minimal_resolution(n, Direction::Injective, max_degree + 2);
    let field = m.field();
    let homs: Vec<_> = (0..=max_degree + 1)
        .map(|i| res.terms.get(i).map(|t| hom_space(m, t).unwrap()).unwrap_or_default())
        .collect();
    // rank of Hom(M, I^i) -> Hom(M, I^{i+1})
    let rank_out = |i: usize| -> usize {
        if i + 1 >= res.terms.len() {
            return 0;
        }
        let d = &res.maps[i + 1];
        let images: Vec<Vec<Scalar>> = homs[i].iter().map(|f| d.compose(f).flatten()).collect();
        let cols = images.first().map_or(0, Vec::len);
        rank_of(field, cols, images)
    };
    (0..=max_degree)
        .map(|i| {
            let before = if i == 0 { 0 } else { rank_out(i - 1) };
            homs[i].len() - rank_out(i) - before
        })
        .collect()
}

/// Coordinates of `y` in the columns of `basis`.
fn coords(basis: &Matrix, y: &[Scalar]) -> Vec<Scalar> {
    let field = basis.field();
    basis
        .solve(&Matrix::column_vector(field, y))
        .expect("element lies in the span")
        .column(0)
}

fn action_matrix(m: &Representation, u: usize) -> Matrix {
    let field = m.field();
    let cols: Vec<Vec<Scalar>> = (0..m.dim())
        .map(|j| {
            let mut e = m.zero_vector();
            e[j] = field.one();
            m.act_basis(u, &e)
        })
        .collect();
    Matrix::from_columns(field, m.dim(), &cols)
}

/// Dimension vector of `Hom_Γ(J0, M/tM)` by solving for all linear maps
/// `f: J0 → M/tM` with `f(u·b) = u·f(b)`; the part at vertex `v` is the set
/// of `f` killing `J0·e_w` for `w ≠ v`.
pub fn localization_dims_by_solve(topology: &GabrielTopology, m: &Representation) -> Vec<usize> {
    let alg: &Arc<PathAlgebra> = topology.algebra();
    let field = alg.field();
    let target = topology.pair().torsion_submodule(m).unwrap().torsionfree;
    let basis: Vec<Vec<Scalar>> = topology.j0().basis().into_iter().map(|x| x.0).collect();
    let k = basis.len();
    let dn = target.dim();
    let vars = k * dn;
    if vars == 0 {
        return vec![0; alg.vertex_count()];
    }
    let basis_matrix = Matrix::from_columns(field, alg.dim(), &basis);
    let var = |l: usize, r: usize| l * dn + r;

    let mut equations: Vec<Vec<Scalar>> = Vec::new();
    for u in 0..alg.dim() {
        let act = action_matrix(&target, u);
        let gamma = alg.basis_element(u);
        for (bk, b) in basis.iter().enumerate() {
            let c = coords(&basis_matrix, &alg.mul(&gamma, &quiverlab::AlgebraElement(b.clone())).0);
            for r in 0..dn {
                let mut row = vec![field.zero(); vars];
                for (l, cl) in c.iter().enumerate() {
                    row[var(l, r)] = &row[var(l, r)] + cl;
                }
                for s in 0..dn {
                    row[var(bk, s)] = &row[var(bk, s)] - act.get(r, s);
                }
                equations.push(row);
            }
        }
    }
    let hom_dim = |extra: &[Vec<Scalar>]| -> usize {
        let mut all = equations.clone();
        all.extend_from_slice(extra);
        vars - rank_of(field, vars, all)
    };
    (0..alg.vertex_count())
        .map(|v| {
            let mut extra = Vec::new();
            for w in (0..alg.vertex_count()).filter(|&w| w != v) {
                let e_w = alg.basis_element(alg.idempotent(w));
                for b in &basis {
                    let c = coords(&basis_matrix, &alg.mul(&quiverlab::AlgebraElement(b.clone()), &e_w).0);
                    for r in 0..dn {
                        let mut row = vec![field.zero(); vars];
                        for (l, cl) in c.iter().enumerate() {
                            row[var(l, r)] = cl.clone();
                        }
                        extra.push(row);
                    }
                }
            }
            hom_dim(&extra)
        })
        .collect()
}

/// Dimension vector of `⋂ ker f` over all `f: M → E`, which is `t(M)` for the
/// torsion class cogenerated by the injective `E`.
pub fn torsion_by_kernels(m: &Representation, e: &Representation) -> Vec<usize> {
    let homs = hom_space(m, e).unwrap();
    (0..m.dims().len())
        .map(|v| {
            let d = m.dims()[v];
            let rows: Vec<Vec<Scalar>> = homs
                .iter()
                .flat_map(|f| {
                    let mat = f.map(v);
                    (0..mat.rows()).map(|r| mat.row(r)).collect::<Vec<_>>()
                })
                .collect();
            d - rank_of(m.field(), d, rows)
        })
        .collect()
}
