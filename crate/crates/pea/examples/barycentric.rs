//! Barycentric representation over the extreme states: unique on a simplex,
//! with an explicit second representation when vertices are dependent.

use pea::construct::{mo, strict_square};
use pea::rat::{rat, rat_string};
use pea::state::{barycentric_represent, compute_state_space};

fn main() {
    // midpoint of the strict square's segment of states
    let seg = strict_square(3).unwrap();
    let p = compute_state_space(&seg);
    let mid = p.vertices[0]
        .scale(&rat(1, 2))
        .plus(&p.vertices[1].scale(&rat(1, 2)));
    let b = barycentric_represent(&p, &mid).unwrap();
    let weights: Vec<String> = b.representation.weights.iter().map(rat_string).collect();
    println!("segment midpoint weights: {} (unique: {})", weights.join(" "), b.unique);

    // the square MO2 admits genuinely different mixtures for its center
    let square = mo(2).unwrap();
    let sp = compute_state_space(&square);
    let mut center = sp.vertices[0].scale(&rat(1, 4));
    for v in &sp.vertices[1..] {
        center = center.plus(&v.scale(&rat(1, 4)));
    }
    let c = barycentric_represent(&sp, &center).unwrap();
    println!("square center unique: {}", c.unique);
    if let Some(alt) = c.alternative {
        let w: Vec<String> = alt.weights.iter().map(rat_string).collect();
        println!("alternative weights: {}", w.join(" "));
    }
}
