//! Max-times scalars and matrices: products, traces, spectral radius,
//! Kleene star and the two inequality solvers.
//!
//!     cargo run --example tropical_algebra

use tropico::linalg::{solve_subfixpoint, solve_upper, Subfixpoint, Vector};
use tropico::{samples, Scalar};

fn main() {
    let (two, three) = (Scalar::new(2.0), Scalar::new(3.0));
    println!(
        "2 ⊕ 3 = {}, 2 ⊗ 3 = {}, 2⁻¹ = {}",
        two.add(three),
        two.mul(three),
        two.inv().unwrap()
    );
    println!(
        "𝟘 ⊕ 3 = {}, 𝟘 ⊗ 3 = {}",
        Scalar::ZERO.add(three),
        Scalar::ZERO.mul(three)
    );

    let (a, _) = samples::four_alternatives();
    println!("A = {a:?}");
    println!("A² = {:?}", a.pow(2).unwrap());
    let traces: Vec<String> = a
        .power_traces()
        .unwrap()
        .iter()
        .map(|t| t.to_string())
        .collect();
    println!("tr A, tr A², tr A³, tr A⁴ = {}", traces.join(", "));
    println!("Tr(A) = {}", a.tr_big().unwrap());
    let mu = a.spectral_radius().unwrap();
    println!("spectral radius μ = {mu}");

    // μ⁻¹A has Tr = 𝟙, so its star exists
    let scaled = a.scale(mu.inv().unwrap());
    let star = scaled.kleene_star(1e-9).unwrap();
    println!("(μ⁻¹A)* = {star:?}");
    if let Err(e) = a.kleene_star(1e-9) {
        println!("A* itself: {e}");
    }

    // greatest x with A x ≤ d
    let d = Vector::from_values(&[4.0, 2.0, 4.0, 3.0]).unwrap();
    let x = solve_upper(&a, &d).unwrap();
    println!("greatest solution of A x ≤ d: {:?}", x.values());
    println!("A x = {:?}", a.mul_vec(&x).unwrap().values());

    // all solutions of A x ≤ x are the combinations of the star's columns
    match solve_subfixpoint(&scaled, 1e-9).unwrap() {
        Subfixpoint::Generator(g) => {
            println!("A x ≤ x (after scaling) generated by {} columns", g.cols())
        }
        Subfixpoint::TrivialOnly { tr } => println!("only x = 𝟘, Tr = {tr}"),
    }
    match solve_subfixpoint(&a, 1e-9).unwrap() {
        Subfixpoint::Generator(_) => unreachable!(),
        Subfixpoint::TrivialOnly { tr } => {
            println!("A x ≤ x unscaled: only trivial solutions (Tr = {tr})")
        }
    }

    let y = Vector::from_values(&[1.0, 0.25, 0.5, 0.25]).unwrap();
    println!(
        "x⁻Ax at {:?} = {}",
        y.values(),
        y.quadratic_form(&a).unwrap()
    );
}
