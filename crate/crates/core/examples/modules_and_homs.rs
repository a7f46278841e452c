//! Representations, Hom spaces, kernels and cokernels.
use std::sync::Arc;

use quiverlab::family::example211;
use quiverlab::module::{cokernel, hom_space, kernel, projective, radical, simple, socle, top};
use quiverlab::parse::{parse_module_file, serialize_module};
use quiverlab::Field;

fn main() -> quiverlab::Result<()> {
    let alg = Arc::new(example211(2, Field::Rational)?);
    let p1 = projective(&alg, 0);
    let p2 = projective(&alg, 1);
    println!("P(1) {:?}  P(2) {:?}", p1.dims(), p2.dims());
    println!("rad P(1) {:?}  soc {:?}  top {:?}", radical(&p1).0.dims(), socle(&p1).0.dims(), top(&p1).0.dims());

    let homs = hom_space(&p2, &p1)?;
    println!("dim Hom(P(2), P(1)) = {}", homs.len());
    let f = &homs[0];
    println!("ker {:?}  coker {:?}", kernel(f).0.dims(), cokernel(f).0.dims());
    println!("dim Hom(S(1), P(1)) = {}", hom_space(&simple(&alg, 0), &p1)?.len());

    let (name, m) = parse_module_file(&alg, "module M\ndim 0 1 1 0\nmap a2 1\n")?;
    print!("{}", serialize_module(&name, &m));
    Ok(())
}
