//! Minimal projective and injective resolutions and Ext.
use std::sync::Arc;

use quiverlab::family::example211;
use quiverlab::homolog::{ext_dims, minimal_resolution, pd, id, Direction, DEFAULT_CAP};
use quiverlab::module::{projective, simple};
use quiverlab::Field;

fn main() -> quiverlab::Result<()> {
    let alg = Arc::new(example211(2, Field::Rational)?);
    for v in 0..alg.vertex_count() {
        let s = simple(&alg, v);
        let res = minimal_resolution(&s, Direction::Projective, DEFAULT_CAP);
        let terms: Vec<String> = res.labels.iter().map(|l| format!("{:?}", l.iter().map(|i| i + 1).collect::<Vec<_>>())).collect();
        println!("S({}): pd {} id {}  projective terms {}", v + 1, pd(&s, DEFAULT_CAP), id(&s, DEFAULT_CAP), terms.join(" "));
    }
    let s1 = simple(&alg, 0);
    let p4 = projective(&alg, 3);
    println!("Ext^i(S(1), P(4)) for i = 0..=3: {:?}", ext_dims(&s1, &p4, 3)?);
    Ok(())
}
