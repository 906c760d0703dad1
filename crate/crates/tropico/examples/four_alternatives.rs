//! Complete Pareto frontier of the four-alternative, two-criterion problem,
//! with the solutions at both ends and at the breakpoint.
//!
//!     cargo run --example four_alternatives

use tropico::bicriteria::BiObjective;
use tropico::{samples, Scalar};

fn main() {
    let (a, b) = samples::four_alternatives();
    let problem = BiObjective::new(a, b).unwrap();
    let f = problem.frontier();
    println!("μ = {}, ν = {}, G(ν) = {}", f.mu, f.nu, f.g_of_nu);
    println!("G(s) = {}", problem.g());
    println!("H(t) = {}", problem.h());
    for seg in &f.segments {
        println!(
            "α ∈ [{:.4}, {:.4}]: β = {:.4}·α^-{}",
            seg.alpha_lo.value(),
            seg.alpha_hi.value(),
            seg.term.coef.value(),
            seg.term.exponent
        );
    }

    let theta = Scalar::new(24.0).pow(0.25).unwrap();
    for alpha in [f.alpha_min(), theta, f.alpha_max()] {
        let sol = problem.solve_at(alpha).unwrap();
        for x in sol.basis_columns() {
            let (fa, fb) = problem.objective_values(&x).unwrap();
            let shown: Vec<String> = x.values().iter().map(|v| format!("{v:.4}")).collect();
            println!(
                "α = {:.4}, β = {:.4}: x = ({}), check ({:.4}, {:.4})",
                sol.alpha.value(),
                sol.beta.value(),
                shown.join(", "),
                fa.value(),
                fb.value()
            );
        }
    }
}
