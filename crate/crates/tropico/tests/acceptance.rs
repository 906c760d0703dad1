//! Acceptance suite: one PASS/FAIL line per criterion. Runs without the test
//! harness so the lines appear in `cargo test` output; exits non-zero when
//! any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tropico::bicriteria::{build_g, BiObjective, RkmTable};
use tropico::linalg::{Matrix, Vector};
use tropico::{samples, Scalar};

/// Log-domain tolerance of the golden and parametric checks.
const TOL_EXACT: f64 = 1e-9;
/// Boundary margin excluded from the duality check.
const DUALITY_MARGIN: f64 = 1e-7;
/// Log-domain margin by which a random vector may not dominate the frontier.
const DOMINATION_MARGIN: f64 = 1e-6;
/// Log-domain tolerance of the structural identities.
const TOL_STRUCT: f64 = 1e-12;
const MAX_FIT_EXPONENT: f64 = 5.3;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: &[String], summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome {
            ok: true,
            detail: summary,
        }
    } else {
        let shown: Vec<&str> = failures.iter().take(3).map(String::as_str).collect();
        Outcome {
            ok: false,
            detail: format!(
                "{summary}; {} failure(s): {}",
                failures.len(),
                shown.join(" | ")
            ),
        }
    }
}

fn s(v: f64) -> Scalar {
    Scalar::new(v)
}

fn collinear(x: &Vector, y: &Vector) -> f64 {
    x.normalized_max().max_log_distance(&y.normalized_max())
}

fn random_matrix(rng: &mut impl Rng, n: usize, lo: f64, hi: f64) -> Matrix {
    Matrix::from_fn(n, n, |_, _| {
        Scalar::from_log(rng.gen_range(lo.ln()..hi.ln())).unwrap()
    })
}

#[allow(clippy::needless_range_loop)]
fn random_reciprocal(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    for i in 0..n {
        for j in (i + 1)..n {
            let l = rng.gen_range(-9f64.ln()..9f64.ln());
            m.set(i, j, Scalar::from_log(l).unwrap());
            m.set(j, i, Scalar::from_log(-l).unwrap());
        }
    }
    m
}

fn golden() -> Outcome {
    let start = Instant::now();
    let mut fails = Vec::new();
    let mut worst: f64 = 0.0;
    let mut check = |what: &str, got: Scalar, want: f64| {
        let d = got.log_distance(s(want));
        worst = worst.max(d);
        if d > TOL_EXACT {
            fails.push(format!("{what} = {got}, expected {want}"));
        }
    };
    let (a, b) = samples::four_alternatives();
    let table = RkmTable::build(&a, &b).unwrap();
    let problem = BiObjective::new(a.clone(), b.clone()).unwrap();
    let f = problem.frontier();
    let theta = 24f64.powf(0.25);
    check("mu", f.mu, 2.0);
    check("nu", f.nu, 2.0);
    check("tr(BA)", table.trace(1, 1), 1.5);
    check("tr(BA^2)", table.trace(1, 2), 8.0);
    check("tr(BA^3)", table.trace(1, 3), 24.0);
    check(
        "tr(B^2A)",
        b.mul(&b).unwrap().mul(&a).unwrap().trace().unwrap(),
        8.0,
    );
    check(
        "tr(B^2A^2)",
        b.pow(2)
            .unwrap()
            .mul(&a.pow(2).unwrap())
            .unwrap()
            .trace()
            .unwrap(),
        24.0,
    );
    check(
        "tr((BA)^2)",
        b.mul(&a).unwrap().pow(2).unwrap().trace().unwrap(),
        24.0,
    );
    check(
        "tr(B^3A)",
        b.pow(3).unwrap().mul(&a).unwrap().trace().unwrap(),
        24.0,
    );
    check("G(2)", problem.g().eval(s(2.0)).unwrap(), 3.0);
    check("H(3)", problem.h().eval(s(3.0)).unwrap(), 2.0);
    check("H(theta)", problem.h().eval(s(theta)).unwrap(), theta);
    check("alpha_min", f.alpha_min(), 2.0);
    check("alpha_max", f.alpha_max(), 3.0);
    for k in 0..=200 {
        let alpha = 2.0 + k as f64 / 200.0;
        let want = (24.0 * alpha.powi(-3)).max(24f64.powf(1.0 / 3.0) * alpha.powf(-1.0 / 3.0));
        check(
            &format!("beta({alpha})"),
            f.beta_at(s(alpha), TOL_EXACT).unwrap().1,
            want,
        );
    }
    let points = [
        (2.0, [1.0, 1.0 / 6.0, 0.5, 0.25]),
        (
            theta,
            [1.0, 1.0 / (2.0 * theta), theta / 4.0, theta * theta / 16.0],
        ),
        (3.0, [1.0, 0.25, 0.5, 0.25]),
    ];
    for (alpha, want) in points {
        let sol = problem.solve_at(s(alpha)).unwrap();
        let want = Vector::from_values(&want).unwrap();
        let cols = sol.basis_columns();
        if cols.len() != 1 {
            fails.push(format!("{} basis columns at alpha = {alpha}", cols.len()));
        }
        for c in &cols {
            let d = collinear(c, &want);
            worst = worst.max(d);
            if d > TOL_EXACT {
                fails.push(format!("solution at alpha = {alpha}: {c:?}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        fails.push(format!("took {elapsed:?}"));
    }
    outcome(&fails, format!("max log error {worst:.1e}, {elapsed:.0?}"))
}

fn reciprocal_pairs() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut fails = Vec::new();
    let mut worst: f64 = 0.0;
    let range = 9f64.ln();
    let mut done = 0;
    while done < 100 {
        let (la, lb) = (rng.gen_range(-range..range), rng.gen_range(-range..range));
        if (la - lb).abs() < 1e-6 {
            continue;
        }
        done += 1;
        let (av, bv) = (la.exp(), lb.exp());
        let c = (bv / av).max(av / bv);
        let p = BiObjective::new(samples::reciprocal_2x2(av), samples::reciprocal_2x2(bv)).unwrap();
        let f = p.frontier();
        let mut note = |what: String, d: f64| {
            worst = worst.max(d);
            if d > TOL_EXACT {
                fails.push(format!("a={av:.4} b={bv:.4}: {what}"));
            }
        };
        note("alpha_min".into(), f.alpha_min().log_distance(Scalar::ONE));
        note("alpha_max".into(), f.alpha_max().log_distance(s(c)));
        let a_vec = Vector::from_values(&[av, 1.0]).unwrap();
        let b_vec = Vector::from_values(&[bv, 1.0]).unwrap();
        let (lo, hi) = (la.min(lb), la.max(lb));
        for alpha in f.sample_alphas(9) {
            let beta = f.beta_at(alpha, TOL_EXACT).unwrap().1;
            note(
                format!("beta at {alpha}"),
                beta.log_distance(s(c / alpha.value())),
            );
            for col in p.solve_at(alpha).unwrap().basis_columns() {
                // inside span{(a,1), (b,1)} iff x₁/x₂ lies between a and b
                let r = col[0].log() - col[1].log();
                let outside = (lo - r).max(r - hi).max(0.0);
                note(format!("generator {col:?} at {alpha}"), outside);
            }
        }
        let at_lo = p.solve_at(f.alpha_min()).unwrap().basis_columns();
        let at_hi = p.solve_at(f.alpha_max()).unwrap().basis_columns();
        note(
            "(a,1) at alpha = 1".into(),
            at_lo
                .iter()
                .map(|c| collinear(c, &a_vec))
                .fold(f64::INFINITY, f64::min),
        );
        note(
            "(b,1) at alpha = c".into(),
            at_hi
                .iter()
                .map(|c| collinear(c, &b_vec))
                .fold(f64::INFINITY, f64::min),
        );
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1) {
        fails.push(format!("took {elapsed:?}"));
    }
    outcome(
        &fails,
        format!("100 pairs, max log error {worst:.1e}, {elapsed:.0?}"),
    )
}

fn duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut fails = Vec::new();
    let (mut checked, mut skipped, mut below) = (0usize, 0usize, 0usize);
    for inst in 0..1000 {
        let n = 2 + inst % 5;
        let a = random_matrix(&mut rng, n, 0.1, 10.0);
        let b = random_matrix(&mut rng, n, 0.1, 10.0);
        let p = BiObjective::new(a, b).unwrap();
        for k in 0..30 {
            let ls = rng.gen_range(-8.0..8.0);
            let g = p.g().eval(Scalar::from_log(ls).unwrap()).unwrap().log();
            // a third of the pairs sit just off the curve t = G(s)
            let lt = if k % 3 == 0 {
                g + rng.gen_range(-1e-5..1e-5)
            } else {
                rng.gen_range(-8.0..8.0)
            };
            let h = p.h().eval(Scalar::from_log(lt).unwrap()).unwrap().log();
            if (g - lt).abs() < DUALITY_MARGIN || (h - ls).abs() < DUALITY_MARGIN {
                skipped += 1;
                continue;
            }
            checked += 1;
            below += (g <= lt) as usize;
            if (g <= lt) != (h <= ls) {
                fails.push(format!("n={n} s=e^{ls:.3} t=e^{lt:.3}: G={g:.6} H={h:.6}"));
            }
        }
    }
    if below == 0 || below == checked {
        fails.push("only one side of the equivalence was exercised".into());
    }
    outcome(
        &fails,
        format!("{checked} pairs over 1000 instances ({below} with G(s) ≤ t), {skipped} boundary pairs skipped"),
    )
}

fn log_objectives(la: &[Vec<f64>], lb: &[Vec<f64>], lx: &[f64]) -> (f64, f64) {
    let n = lx.len();
    let (mut fa, mut fb) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        for j in 0..n {
            let d = lx[j] - lx[i];
            fa = fa.max(la[i][j] + d);
            fb = fb.max(lb[i][j] + d);
        }
    }
    (fa, fb)
}

fn pareto_brute_force() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut fails = Vec::new();
    let (mut worst_margin, mut worst_obj) = (f64::NEG_INFINITY, 0.0f64);
    for inst in 0..50 {
        let n = 2 + inst % 2;
        let a = random_reciprocal(&mut rng, n);
        let b = random_reciprocal(&mut rng, n);
        let p = BiObjective::new(a.clone(), b.clone()).unwrap();
        let f = p.frontier();
        let logs = |m: &Matrix| -> Vec<Vec<f64>> {
            (0..n)
                .map(|i| (0..n).map(|j| m.get(i, j).log()).collect())
                .collect()
        };
        let (la, lb) = (logs(&a), logs(&b));
        let mut points = Vec::new();
        let mut seeds = Vec::new();
        for alpha in f.sample_alphas(20) {
            let sol = p.solve_at(alpha).unwrap();
            for col in sol.basis_columns() {
                let (fa, fb) = p.objective_values(&col).unwrap();
                let d = fa.log_distance(sol.alpha).max(fb.log_distance(sol.beta));
                worst_obj = worst_obj.max(d);
                if d > TOL_EXACT {
                    fails.push(format!(
                        "instance {inst}: solution at {alpha} gives ({fa}, {fb})"
                    ));
                }
                seeds.push(col.logs());
            }
            points.push((sol.alpha.log(), sol.beta.log()));
        }
        let spread = 2.0 * 9f64.ln();
        for k in 0..100_000 {
            let lx: Vec<f64> = if k % 2 == 0 {
                (0..n).map(|_| rng.gen_range(-spread..spread)).collect()
            } else {
                let seed = &seeds[rng.gen_range(0..seeds.len())];
                let scale = [1e-1, 1e-3, 1e-6][k % 3];
                seed.iter()
                    .map(|v| v + rng.gen_range(-scale..scale))
                    .collect()
            };
            let (fa, fb) = log_objectives(&la, &lb, &lx);
            for &(pa, pb) in &points {
                if fa <= pa + TOL_EXACT && fb <= pb + TOL_EXACT {
                    let margin = (pa - fa).max(pb - fb);
                    worst_margin = worst_margin.max(margin);
                    if margin > DOMINATION_MARGIN {
                        fails.push(format!(
                            "instance {inst}: ({fa:.6}, {fb:.6}) dominates ({pa:.6}, {pb:.6})"
                        ));
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(60) {
        fails.push(format!("took {elapsed:?}"));
    }
    let margin = if worst_margin.is_finite() {
        format!("{worst_margin:.1e}")
    } else {
        "none".into()
    };
    outcome(
        &fails,
        format!("50 instances x 1e5 vectors, largest domination margin {margin}, max objective error {worst_obj:.1e}, {elapsed:.1?}"),
    )
}

/// Maximum geometric mean over all simple cycles, in logs.
fn cycle_oracle(m: &Matrix) -> f64 {
    fn extend(
        m: &Matrix,
        start: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        sum: f64,
        best: &mut f64,
    ) {
        let last = *path.last().unwrap();
        let back = m.get(last, start);
        if !back.is_zero() {
            *best = best.max((sum + back.log()) / path.len() as f64);
        }
        for next in (start + 1)..m.rows() {
            let w = m.get(last, next);
            if !used[next] && !w.is_zero() {
                used[next] = true;
                path.push(next);
                extend(m, start, path, used, sum + w.log(), best);
                path.pop();
                used[next] = false;
            }
        }
    }
    let mut best = f64::NEG_INFINITY;
    for start in 0..m.rows() {
        let mut used = vec![false; m.rows()];
        used[start] = true;
        extend(m, start, &mut vec![start], &mut used, 0.0, &mut best);
    }
    best
}

fn sparse_matrix(rng: &mut impl Rng, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| {
        if rng.gen_bool(0.3) {
            Scalar::ZERO
        } else {
            Scalar::from_log(rng.gen_range(-3.0..3.0)).unwrap()
        }
    })
}

fn structural() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut fails = Vec::new();
    let (mut worst_tr, mut worst_rho, mut worst_gen) = (0.0f64, 0.0f64, 0.0f64);
    let mut stars = 0;
    for inst in 0..200 {
        let n = 1 + inst % 6;
        let a = sparse_matrix(&mut rng, n);
        let b = sparse_matrix(&mut rng, n);
        let direct = a.add(&b).unwrap().tr_big().unwrap();
        let assembled = RkmTable::build(&a, &b).unwrap().binomial_tr_big();
        let d = if direct.is_zero() && assembled.is_zero() {
            0.0
        } else {
            direct.log_distance(assembled)
        };
        worst_tr = worst_tr.max(d);
        if d > TOL_STRUCT {
            fails.push(format!(
                "trace identity, instance {inst}: {direct} vs {assembled}"
            ));
        }

        let rho = a.spectral_radius().unwrap();
        let oracle = cycle_oracle(&a);
        let d = if rho.is_zero() && oracle == f64::NEG_INFINITY {
            0.0
        } else {
            (rho.log() - oracle).abs()
        };
        worst_rho = worst_rho.max(d);
        if d.is_nan() || d > TOL_STRUCT {
            fails.push(format!(
                "spectral radius, instance {inst}: {rho} vs e^{oracle}"
            ));
        }

        // scale so that Tr(A) ≤ 𝟙, then check A(A*u) ≤ A*u
        let scaled = if rho.is_zero() {
            a.clone()
        } else {
            a.scale(rho.inv().unwrap())
        };
        if let Ok(star) = scaled.kleene_star(TOL_STRUCT) {
            stars += 1;
            for _ in 0..5 {
                let u = Vector::from_logs(
                    &(0..n).map(|_| rng.gen_range(-3.0..3.0)).collect::<Vec<_>>(),
                )
                .unwrap();
                let x = star.mul_vec(&u).unwrap();
                let ax = scaled.mul_vec(&x).unwrap();
                let excess = ax
                    .entries()
                    .iter()
                    .zip(x.entries())
                    .map(|(l, r)| if l.is_zero() { 0.0 } else { l.log() - r.log() })
                    .fold(0.0f64, f64::max);
                worst_gen = worst_gen.max(excess);
                if excess > TOL_STRUCT {
                    fails.push(format!("generator, instance {inst}: excess {excess:.2e}"));
                }
            }
        } else {
            fails.push(format!("star undefined after scaling, instance {inst}"));
        }
    }
    outcome(
        &fails,
        format!(
            "200 instances, trace identity {worst_tr:.1e}, radius vs cycles {worst_rho:.1e}, generator excess {worst_gen:.1e} ({stars} stars)"
        ),
    )
}

fn complexity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let sizes = [4usize, 8, 16, 32];
    let mut pts = Vec::new();
    let mut counts = Vec::new();
    for &n in &sizes {
        let a = random_matrix(&mut rng, n, 0.1, 10.0);
        let b = random_matrix(&mut rng, n, 0.1, 10.0);
        let (_, ops) = build_g(&a, &b).unwrap();
        pts.push(((n as f64).ln(), (ops as f64).ln()));
        counts.push(format!("n={n}: {ops}"));
    }
    let m = pts.len() as f64;
    let (sx, sy) = pts.iter().fold((0.0, 0.0), |(x, y), p| (x + p.0, y + p.1));
    let (mx, my) = (sx / m, sy / m);
    let num: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let den: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let slope = num / den;
    let fails = if slope <= MAX_FIT_EXPONENT {
        vec![]
    } else {
        vec![format!("fit exponent {slope:.3} > {MAX_FIT_EXPONENT}")]
    };
    outcome(
        &fails,
        format!("fit exponent {slope:.3} ({})", counts.join(", ")),
    )
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 6] = [
        ("four-alternative golden reproduction", golden),
        ("2x2 reciprocal parametric frontier", reciprocal_pairs),
        ("G/H duality", duality),
        ("Pareto optimality vs brute force", pareto_brute_force),
        ("structural oracles", structural),
        ("complexity of building G", complexity),
    ];
    let mut all_ok = true;
    for (name, run) in criteria {
        let o = run();
        all_ok &= o.ok;
        println!(
            "{} {name}: {}",
            if o.ok { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    if !all_ok {
        std::process::exit(1);
    }
}
