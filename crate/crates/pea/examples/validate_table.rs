//! Certify a hand-written table, then watch a broken one get rejected with
//! a witness.

use pea::algebra::PartialAlgebra;

fn main() {
    // the 3-chain 0 < a < 1, written out by hand
    let mut table = PartialAlgebra::new(3, 0, 2);
    table.set(1, 1, 2);
    let report = table.validate_axioms();
    for check in &report.checks {
        println!("{}: {}", check.axiom, if check.passed { "pass" } else { "fail" });
    }
    let alg = table.certify().expect("the chain certifies");
    println!("certified, order 1 <= top: {}", alg.leq(1, 2));

    // now break associativity by redefining 1 + 1
    let mut broken = PartialAlgebra::new(3, 0, 2);
    broken.set(1, 1, 1);
    match broken.certify() {
        Ok(_) => unreachable!("1 + 1 = 1 cannot certify"),
        Err(err) => println!("rejected: {err}"),
    }
}
