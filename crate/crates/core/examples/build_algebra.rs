//! Build a bound quiver algebra by hand and from the text format, then
//! inspect its basis and multiplication.
use std::sync::Arc;

use quiverlab::parse::{parse_algebra_file, serialize_algebra};
use quiverlab::{build_algebra, Field, Quiver, Relation};

fn main() -> quiverlab::Result<()> {
    // 1 -a-> 2 -b-> 3 with ab = 0
    let quiver = Quiver::from_labels(3, &[("a", 1, 2), ("b", 2, 3)])?;
    let rel = Relation::monomial(&quiver, Field::Rational, &["a", "b"])?;
    let alg = Arc::new(build_algebra(quiver, vec![rel], Field::Rational)?);
    println!("dim {} basis {:?}", alg.dim(), alg.basis_labels());

    let text = "field prime 3\nvertices 2\narrow x 1 1\narrow y 1 2\nrelation x*x\n";
    let other = parse_algebra_file(text)?;
    println!("{}dim {} over {}", serialize_algebra(&other), other.dim(), other.field());

    let x = alg.basis_element(alg.arrow_basis_index(0));
    let y = alg.basis_element(alg.arrow_basis_index(1));
    println!("a*b is zero: {}", alg.mul(&x, &y).is_zero());
    println!("associative: {}", alg.associativity_violation().is_none());
    Ok(())
}
