//! Rating against the entry-wise maximum `A ⊕ B` gives one compromise; the
//! bi-criteria frontier shows every trade-off.
//!
//!     cargo run --example scalarized_vs_pareto

use tropico::decision::{rate_bicriteria, rate_scalarized, ComparisonMatrix, RatingMethod};
use tropico::{samples, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let rows = |m: [[f64; 4]; 4]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let a = ComparisonMatrix::validate(rows(samples::FOUR_ALTERNATIVES_A), None, &tol).unwrap();
    let b = ComparisonMatrix::validate(rows(samples::FOUR_ALTERNATIVES_B), None, &tol).unwrap();

    let sc = rate_scalarized(&a, &b, &tol).unwrap();
    if let RatingMethod::Scalarized { error } = sc.method {
        println!("{}: error of A ⊕ B is {error}", sc.method.describe());
    }
    for s in &sc.basis {
        println!(
            "  scores {:?} -> (x⁻Ax, x⁻Bx) = ({}, {})",
            s.scores, s.objectives.0, s.objectives.1
        );
    }

    let rating = rate_bicriteria(&a, &b, &tol).unwrap();
    println!("bi-criteria frontier at 5 points:");
    for sol in rating.sample(5).unwrap() {
        let s = &sol.basis[0];
        let scores: Vec<String> = s.scores.iter().map(|v| format!("{v:.3}")).collect();
        println!(
            "  (α, β) = ({:.4}, {:.4}) scores [{}]",
            sol.alpha.value(),
            sol.beta.value(),
            scores.join(", ")
        );
    }
}
