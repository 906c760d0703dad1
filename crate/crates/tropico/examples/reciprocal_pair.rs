//! Two 2x2 reciprocal matrices: the frontier is `[1, c]` with `β = c/α`,
//! `c = max(a/b, b/a)`, and the solutions slide from `(a, 1)` to `(b, 1)`.
//!
//!     cargo run --example reciprocal_pair -- 4 2

use tropico::bicriteria::BiObjective;
use tropico::samples::reciprocal_2x2;

fn main() {
    let args: Vec<f64> = std::env::args()
        .skip(1)
        .map(|s| s.parse().expect("number"))
        .collect();
    let (a, b) = match args.as_slice() {
        [a, b] => (*a, *b),
        _ => (4.0, 2.0),
    };
    let problem = BiObjective::new(reciprocal_2x2(a), reciprocal_2x2(b)).unwrap();
    let f = problem.frontier();
    println!("a = {a}, b = {b}, c = {}", (a / b).max(b / a));
    println!("frontier α ∈ [{}, {}]", f.alpha_min(), f.alpha_max());
    for alpha in f.sample_alphas(5) {
        let sol = problem.solve_at(alpha).unwrap();
        let x = &sol.basis_columns()[0];
        println!(
            "α = {:.4}  β = {:.4}  α·β = {:.4}  x₁/x₂ = {:.4}",
            sol.alpha.value(),
            sol.beta.value(),
            sol.alpha.mul(sol.beta).value(),
            x[0].div(x[1]).unwrap().value()
        );
    }
}
