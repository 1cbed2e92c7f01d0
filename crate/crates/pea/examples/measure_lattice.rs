//! Join and meet of signed measures on the Boolean square, cross-checked
//! against the linear-programming oracle, plus the modular identity.

use pea::measure::{glb_oracle, join, lub_oracle, meet};
use pea::rat::rat_string;
use pea::state::compute_state_space;

fn main() {
    let alg = pea::construct::boolean(2).unwrap();
    let vertices = compute_state_space(&alg).vertices;
    let s1 = &vertices[0];
    let s2 = &vertices[1];

    let show = |label: &str, m: &pea::SignedMeasure| {
        let vals: Vec<String> = m.values().iter().map(rat_string).collect();
        println!("{label}: {}", vals.join(" "));
    };
    show("s1", s1);
    show("s2", s2);

    let top = join(&alg, s1, s2).unwrap();
    let bottom = meet(&alg, s1, s2).unwrap();
    show("s1 v s2", &top);
    show("s1 ^ s2", &bottom);

    assert_eq!(top, lub_oracle(&alg, s1, s2).unwrap());
    assert_eq!(bottom, glb_oracle(&alg, s1, s2).unwrap());
    println!("decomposition formulas agree with the LP oracle");

    // (m1 v m2) + (m1 ^ m2) = m1 + m2
    assert_eq!(top.plus(&bottom), s1.plus(s2));
    println!("modular identity verified");
}
