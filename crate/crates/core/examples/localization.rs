//! Modules of quotients, closed modules and the quotient-category calculus.
use std::sync::Arc;

use quiverlab::claims::quotient_exact_sequence;
use quiverlab::family::{example211, nakayama_indecomposables};
use quiverlab::quotient::{quotient_exactness, is_closed, localize};
use quiverlab::theorems::q_topology;
use quiverlab::Field;

fn main() -> quiverlab::Result<()> {
    let alg = Arc::new(example211(1, Field::Rational)?);
    let topology = q_topology(&alg)?;
    for ind in nakayama_indecomposables(&alg)? {
        let l = localize(&topology, &ind.module)?;
        let c = is_closed(&topology, &ind.module)?;
        println!(
            "{:5} M_G {:?}  coker psi {:?}  closed {}",
            ind.name,
            l.module.dims(),
            l.psi_cokernel.dims(),
            c.closed
        );
    }

    let (f, g) = quotient_exact_sequence(&alg)?;
    let (report, x) = quotient_exactness(&topology, &f, &g)?;
    println!("S(3) -> P(2) -> P(1): exact in the quotient category {}  X = {:?}", report.holds, x.dims());
    Ok(())
}
