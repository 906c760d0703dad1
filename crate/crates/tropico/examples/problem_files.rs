//! Loading problems from JSON and CSV, repair of non-reciprocal input, and
//! the JSON documents produced for them.
//!
//!     cargo run --example problem_files

use tropico::api::Session;
use tropico::problem::Problem;

fn main() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data");
    let p = Problem::load(
        format!("{dir}/four_alternatives.json").as_ref(),
        false,
        None,
    )
    .unwrap();
    println!("{} alternatives: {:?}", p.n(), p.labels());

    let c = Problem::load(format!("{dir}/consistent.csv").as_ref(), true, None).unwrap();
    println!(
        "csv labels {:?}, consistent: {}",
        c.labels(),
        c.a().is_consistent(c.tolerance())
    );

    match Problem::from_json("{\"A\": [[1, 2],\n [0.5 1]]}", None) {
        Err(e) => println!("parse error: {e}"),
        Ok(_) => unreachable!(),
    }
    let raw = r#"{"A": [[1, 3], [0.5, 1]]}"#;
    println!(
        "without repair: {}",
        Problem::from_json(raw, None).unwrap_err()
    );
    let fixed = Problem::from_json(
        r#"{"A": [[1, 3], [0.5, 1]], "options": {"repair": true}}"#,
        None,
    )
    .unwrap();
    println!("with repair: {:?}", fixed.a().values());

    let session = Session::new(p).unwrap();
    println!(
        "{}",
        serde_json::to_string_pretty(&session.describe("1")).unwrap()
    );
    println!(
        "{}",
        serde_json::to_string(&session.solve(2.5).unwrap()).unwrap()
    );
    println!(
        "{}",
        serde_json::to_string(&session.error(&[1.0, 0.25, 0.5, 0.25]).unwrap()).unwrap()
    );
}
