//! The four orthogonality conditions, evaluated for a disjoint pair and for
//! a state against itself.

use pea::construct::boolean;
use pea::orthogonality::{default_schedule, extreme_states, orthogonality_report};
use pea::rat::rat_string;

fn main() {
    let alg = boolean(3).unwrap();
    let states = extreme_states(&alg);
    let schedule = default_schedule();

    for (label, a, b) in [
        ("distinct extreme states", &states[0], &states[1]),
        ("a state against itself", &states[0], &states[0]),
    ] {
        let rep = orthogonality_report(&alg, a, b, &schedule).unwrap();
        println!("{label}:");
        println!("  faces disjoint: {}", rep.faces_disjoint);
        println!("  meet zero:      {}", rep.meet_is_zero);
        println!("  join is sum:    {}", rep.join_is_sum);
        for (eps, ok) in rep.epsilon_schedule.iter().zip(&rep.epsilon_outcomes) {
            println!("  splits below {}: {}", rat_string(eps), ok);
        }
        if let Some(eps) = rep.failing_epsilon {
            println!("  splitting defeated at epsilon {}", rat_string(&eps));
        }
        println!("  orthogonal: {}", rep.orthogonal);
    }
}
