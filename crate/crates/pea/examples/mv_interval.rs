//! MV structure on the interval [0, m] below a positive measure: truncated
//! sum, truncated product, complement, and the axioms on a random sample.

use pea::construct::chain;
use pea::mv::mv_interval;
use pea::rat::{rat, rat_string};
use pea::sampling::sample_interval_pairs;
use pea::state::compute_state_space;

fn main() {
    let alg = chain(4).unwrap();
    let p = compute_state_space(&alg);
    let unit = p.vertices[0].scale(&rat(3, 1));
    let iv = mv_interval(&alg, &unit).unwrap();

    let show = |label: &str, m: &pea::SignedMeasure| {
        let vals: Vec<String> = m.values().iter().map(rat_string).collect();
        println!("{label}: {}", vals.join(" "));
    };
    let s = unit.scale(&rat(2, 3));
    let t = unit.scale(&rat(1, 2));
    show("unit", &unit);
    show("s", &s);
    show("t", &t);
    show("s (+) t", &iv.oplus(&s, &t).unwrap());
    show("s (.) t", &iv.odot(&s, &t).unwrap());
    show("s*", &iv.star(&s).unwrap());

    let pairs = sample_interval_pairs(&alg, &p, &unit, 200, 5).unwrap();
    let report = iv.verify_axioms(&pairs).unwrap();
    println!(
        "axioms on {} sampled pairs: {}",
        report.pairs_checked,
        if report.holds { "hold" } else { "FAIL" }
    );
}
