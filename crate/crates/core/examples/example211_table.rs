//! The profile table for the linear A_{n+2} family, as text and JSON.
use std::sync::Arc;

use quiverlab::family::{example211, nakayama_indecomposables};
use quiverlab::homolog::DEFAULT_CAP;
use quiverlab::report::{emit_table, render_text};
use quiverlab::Field;

fn main() -> quiverlab::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let alg = Arc::new(example211(n, Field::Rational)?);
    let sample = nakayama_indecomposables(&alg)?;
    let report = emit_table(&alg, &format!("example211:{n}"), &sample, DEFAULT_CAP)?;
    print!("{}", render_text(&report));
    println!("{}", serde_json::to_string(&report.profile).expect("serializable"));
    Ok(())
}
