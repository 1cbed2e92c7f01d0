//! Jordan decomposition and total variation of a difference of two states.

use pea::measure::{is_jordan, jordan_decompose, total_variation};
use pea::rat::rat_string;
use pea::state::compute_state_space;

fn main() {
    let alg = pea::construct::boolean(3).unwrap();
    let vertices = compute_state_space(&alg).vertices;
    let m = vertices[0].minus(&vertices[1]);

    let show = |label: &str, m: &pea::SignedMeasure| {
        let vals: Vec<String> = m.values().iter().map(rat_string).collect();
        println!("{label}: {}", vals.join(" "));
    };
    show("m = s1 - s2", &m);

    let pair = jordan_decompose(&alg, &m).unwrap();
    show("m+", &pair.positive_part);
    show("m-", &pair.negative_part);
    println!(
        "alpha1 = {}, alpha2 = {}",
        rat_string(&pair.alpha1),
        rat_string(&pair.alpha2)
    );

    let v = total_variation(&alg, &m).unwrap();
    show("|m|", &v);
    assert_eq!(v, pair.positive_part.plus(&pair.negative_part));

    let cert = is_jordan(&alg, &m).unwrap();
    println!("jordan with uniform bound {}", rat_string(&cert.bound));
}
