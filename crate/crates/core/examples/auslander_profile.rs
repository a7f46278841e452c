//! Global, dominant and self-injective dimensions, and the
//! higher Auslander / minimal Auslander-Gorenstein windows.
use std::sync::Arc;

use quiverlab::family::{cyclic_nakayama, example211, loop_truncated};
use quiverlab::homolog::{homological_profile, is_n_auslander, is_n_min_ag, DEFAULT_CAP};
use quiverlab::Field;

fn main() -> quiverlab::Result<()> {
    for n in 1..=4 {
        let alg = Arc::new(example211(n, Field::Rational)?);
        let p = homological_profile(&alg, DEFAULT_CAP);
        println!(
            "example211({n}): gldim {} domdim {} id {}/{}  {n}-Auslander {}  {n}-min AG {}",
            p.gldim,
            p.domdim,
            p.id_left,
            p.id_right,
            is_n_auslander(&alg, n, DEFAULT_CAP)?,
            is_n_min_ag(&alg, n, DEFAULT_CAP)?
        );
    }
    for (label, alg) in [
        ("cyclic 3, length 2", cyclic_nakayama(3, 2, Field::Rational)?),
        ("k[x]/x^2", loop_truncated(2, Field::Rational)?),
    ] {
        let p = homological_profile(&Arc::new(alg), DEFAULT_CAP);
        println!("{label}: self-injective {} gldim {} n-min AG {:?}", p.self_injective, p.gldim, p.n_min_ag);
    }
    Ok(())
}
