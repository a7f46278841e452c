//! Run every claim suite on the shipped families, then on a corrupted
//! algebra to watch the structural check catch it.
use std::sync::Arc;

use quiverlab::claims::{mutated, run_claims, shipped_families, Status, Subject, CLAIMS};
use quiverlab::homolog::DEFAULT_CAP;

fn main() -> quiverlab::Result<()> {
    let mut failed = 0;
    for (spec, field) in shipped_families() {
        let subject = Subject::from_family(spec, field, DEFAULT_CAP, 0)?;
        let outcomes = run_claims(&subject, CLAIMS);
        let passed = outcomes.iter().filter(|o| o.status == Status::Pass).count();
        failed += outcomes.iter().filter(|o| o.status == Status::Fail).count();
        println!("{:18} {passed}/{} passed", subject.label, outcomes.len());
    }
    println!("{failed} failures");

    let mut subject = Subject::from_family("example211:1".parse()?, quiverlab::Field::Rational, DEFAULT_CAP, 0)?;
    subject.algebra = Arc::new(mutated(&subject.algebra).expect("a constant to corrupt"));
    for o in run_claims(&subject, CLAIMS) {
        println!("{o}");
    }
    Ok(())
}
