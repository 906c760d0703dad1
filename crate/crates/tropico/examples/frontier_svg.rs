//! Writes the log-log frontier plot of the four-alternative problem.
//!
//!     cargo run --example frontier_svg -- frontier.svg

use tropico::bicriteria::BiObjective;
use tropico::samples;
use tropico::svg::frontier_svg;

fn main() {
    let (a, b) = samples::four_alternatives();
    let problem = BiObjective::new(a, b).unwrap();
    let svg = frontier_svg(problem.frontier());
    match std::env::args().nth(1) {
        Some(path) => {
            std::fs::write(&path, &svg).unwrap();
            println!("wrote {path} ({} bytes)", svg.len());
        }
        None => print!("{svg}"),
    }
}
