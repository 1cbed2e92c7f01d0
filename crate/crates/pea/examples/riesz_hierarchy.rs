//! Where each corpus algebra sits in the decomposition-property hierarchy.

use pea::construct::standard_corpus;
use pea::riesz::{check, RieszProperty, ALL_PROPERTIES};

fn main() {
    println!("{:<18} RIP RDP0 RDP RDP1 RDP2", "algebra");
    for (name, alg) in standard_corpus() {
        let flags: Vec<&str> = ALL_PROPERTIES
            .iter()
            .map(|&p| if check(&alg, p).holds { "yes" } else { "no" })
            .collect();
        println!(
            "{name:<18} {:<3} {:<4} {:<3} {:<4} {:<4}",
            flags[0], flags[1], flags[2], flags[3], flags[4]
        );
    }

    // a closer look at the first RDP0 failure on the strict square
    let (name, square) = standard_corpus()
        .into_iter()
        .find(|(n, _)| n == "strict-square-3")
        .unwrap();
    let report = check(&square, RieszProperty::Rdp0);
    println!(
        "\n{name} refutes RDP0 at {:?} (elements a; b1, b2)",
        report.counterexample.unwrap()
    );
}
