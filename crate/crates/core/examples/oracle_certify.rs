//! Brute-force certification over F_2: every left ideal, the topology
//! axioms, the ideal/torsion round trip and t(M) by enumeration.
use std::sync::Arc;
use std::time::Instant;

use quiverlab::family::example211;
use quiverlab::module::projective;
use quiverlab::oracle::{brute_axioms, brute_torsion_submodule, enumerate_left_ideals, maranda_roundtrip};
use quiverlab::theorems::dense_topology;
use quiverlab::Field;

fn main() -> quiverlab::Result<()> {
    let start = Instant::now();
    let alg = Arc::new(example211(1, Field::prime(2)?)?);
    let topology = dense_topology(&alg)?;
    let lattice = enumerate_left_ideals(&alg)?;
    let members: Vec<_> = lattice.ideals.iter().filter(|j| topology.is_dense(j)).cloned().collect();
    println!("{} left ideals, {} dense", lattice.len(), members.len());

    let axioms = brute_axioms(&lattice, &members);
    println!("axioms pass: {}", axioms.passed());
    let rt = maranda_roundtrip(&topology, &lattice)?;
    println!("round trip identity: {} on {} modules", rt.identity(), rt.universe);

    let p1 = projective(&alg, 0);
    let brute = brute_torsion_submodule(topology.pair(), &p1)?.0;
    println!("t(P(1)) by enumeration {:?}", brute.dims());
    println!("elapsed {:?}", start.elapsed());
    Ok(())
}
