//! Exact vertex enumeration of state polytopes and the simplex verdict.

use pea::construct::{boolean, mo, strict_square};
use pea::rat::rat_string;
use pea::state::{compute_state_space, simplex_report};

fn main() {
    for (name, alg) in [
        ("boolean-2^2", boolean(2).unwrap()),
        ("mo-2", mo(2).unwrap()),
        ("strict-square-3", strict_square(3).unwrap()),
    ] {
        let p = compute_state_space(&alg);
        println!("{name}: dim {}, {} extreme states", p.dim(), p.vertices.len());
        for v in &p.vertices {
            let vals: Vec<String> = v.values().iter().map(rat_string).collect();
            println!("  vertex {}", vals.join(" "));
        }
        let report = simplex_report(&p).unwrap();
        match report.dependency_witness {
            None => println!("  choquet simplex (affinely independent vertices)"),
            Some(w) => {
                let coeffs: Vec<String> = w.iter().map(rat_string).collect();
                println!("  not a simplex, dependency {}", coeffs.join(" "));
            }
        }
    }
}
