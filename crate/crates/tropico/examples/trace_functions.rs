//! The trace table behind the frontier, the functions `G` and `H` built
//! from it, and their duality `G(s) ≤ t ⟺ H(t) ≤ s`.
//!
//!     cargo run --example trace_functions

use tropico::bicriteria::{build_g, RkmTable, TraceFunction};
use tropico::{samples, Scalar};

fn main() {
    let (a, b) = samples::four_alternatives();
    let table = RkmTable::build(&a, &b).unwrap();
    for (k, m, tr) in table.mixed_traces() {
        println!("tr R[{k},{m}] = {tr}");
    }
    println!(
        "Tr(A ⊕ B) = {} (direct {})",
        table.binomial_tr_big(),
        a.add(&b).unwrap().tr_big().unwrap()
    );

    let g = TraceFunction::g_from_table(&table);
    let h = TraceFunction::h_from_table(&table);
    println!("G = {g}");
    println!("H = {h}");
    let hull: Vec<String> = h
        .envelope()
        .iter()
        .map(|t| format!("{:.4}·t^-{}", t.coef.value(), t.exponent))
        .collect();
    println!("upper envelope of H: {}", hull.join(" ⊕ "));

    for (s, t) in [(2.0, 3.0), (2.0, 2.9), (2.5, 2.5), (1.5, 4.0)] {
        let gs = g.eval(Scalar::new(s)).unwrap();
        let ht = h.eval(Scalar::new(t)).unwrap();
        println!(
            "s = {s}, t = {t}: G(s) = {:.4} ≤ t is {}, H(t) = {:.4} ≤ s is {}",
            gs.value(),
            gs.le_tol(Scalar::new(t), 1e-12),
            ht.value(),
            ht.le_tol(Scalar::new(s), 1e-12)
        );
    }

    for n in [4, 8, 16] {
        let m = tropico::linalg::Matrix::from_fn(n, n, |i, j| {
            Scalar::new(1.0 + ((i * 7 + j * 3) % 5) as f64)
        });
        let (_, ops) = build_g(&m, &m).unwrap();
        println!("n = {n}: {ops} scalar operations");
    }
}
