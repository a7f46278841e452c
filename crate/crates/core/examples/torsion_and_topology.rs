//! The hereditary torsion pair cogenerated by E(Γ), its Gabriel topology,
//! the minimal dense ideal and the dense primes.
use std::sync::Arc;

use quiverlab::family::{example211, nakayama_indecomposables};
use quiverlab::homolog::{HigherAg, DEFAULT_CAP};
use quiverlab::theorems::dense_topology;
use quiverlab::topology::{dense_primes, annihilator_criterion};
use quiverlab::Field;

fn main() -> quiverlab::Result<()> {
    let n = 2;
    let alg = Arc::new(example211(n, Field::prime(2)?)?);
    let topology = dense_topology(&alg)?;
    let pair = topology.pair();
    println!("socle support of E(Γ): {:?}", pair.support().iter().map(|v| v + 1).collect::<Vec<_>>());
    println!("J0 = {} (dim {} of {})", topology.j0(), topology.j0().dim(), alg.dim());

    for ind in nakayama_indecomposables(&alg)? {
        let seq = pair.torsion_submodule(&ind.module)?;
        println!("{:5} t(M) {:?}  M/t(M) {:?}", ind.name, seq.torsion.dims(), seq.torsionfree.dims());
    }

    let cert = HigherAg::certify(&alg, n, DEFAULT_CAP)?;
    for p in dense_primes(&topology, &cert)? {
        println!("p_{} dense {} gpd(Γ/p) {}", p.vertex, p.dense, p.gpd);
    }
    let s1 = quiverlab::module::simple(&alg, 0);
    let r = annihilator_criterion(&s1, &cert, 0)?;
    println!("annihilator criterion on S(1): {} over {} elements", r.holds, r.tested);
    Ok(())
}
