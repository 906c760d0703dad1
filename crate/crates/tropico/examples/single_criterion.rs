//! Minimum log-Chebyshev rating from one comparison matrix.
//!
//!     cargo run --example single_criterion

use tropico::decision::{chebyshev_error, rate_single, ComparisonMatrix};
use tropico::{samples, Tolerance};

fn main() {
    let tol = Tolerance::default();
    let labels = ["price", "comfort", "safety", "looks"]
        .map(String::from)
        .to_vec();
    let values: Vec<Vec<f64>> = samples::FOUR_ALTERNATIVES_A
        .iter()
        .map(|r| r.to_vec())
        .collect();
    let m = ComparisonMatrix::validate(values, Some(labels), &tol).unwrap();
    println!(
        "consistent: {}, spectral radius: {}",
        m.is_consistent(&tol),
        m.spectral_radius()
    );

    let sol = rate_single(&m, &tol).unwrap();
    println!(
        "minimum error {} with {} generating vector(s)",
        sol.alpha,
        sol.basis.len()
    );
    for (i, s) in sol.basis.iter().enumerate() {
        println!("vector {}: {:?}", i + 1, s.scores);
        let ranking: Vec<String> = sol
            .labels_ranked(m.labels(), i)
            .into_iter()
            .map(|g| g.join(" = "))
            .collect();
        println!("  ranking: {}", ranking.join(" > "));
        let e = chebyshev_error(m.values(), &s.scores).unwrap();
        println!(
            "  max ratio {:.4}, relative error {:.4}",
            e.value, e.relative
        );
    }

    // a uniform rating does worse
    let e = m.chebyshev_error(&[1.0; 4]).unwrap();
    println!("uniform rating: max ratio {:.4}", e.value);

    let err =
        ComparisonMatrix::validate(vec![vec![1.0, 3.0], vec![0.5, 1.0]], None, &tol).unwrap_err();
    println!("rejected: {err}");
}
