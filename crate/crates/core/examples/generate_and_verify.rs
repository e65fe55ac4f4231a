//! Build and check words for n = 3..=9.
//!
//!     cargo run --release --example generate_and_verify [max_n]

use std::time::Instant;

use ucycle::{generate, verify};

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .map_or(9, |a| a.parse().expect("max_n"));
    for n in 3..=max_n {
        let start = Instant::now();
        let word = generate(n).unwrap();
        let built = start.elapsed();
        let report = verify(n, word.symbols());
        let head: Vec<String> = word
            .symbols()
            .iter()
            .take(16)
            .map(|s| s.to_string())
            .collect();
        println!(
            "n = {n:>2}  length {:>8}  valid {}  build {:>9.2?}  check {:>9.2?}  {} ...",
            word.len(),
            report.valid,
            built,
            start.elapsed() - built,
            head.join(" ")
        );
    }
}
