//! Stream a word symbol by symbol into the verifier without storing it.
//! n = 11 is about 40 million symbols.
//!
//!     cargo run --release --example stream_large [n]

use std::time::Instant;

use ucycle::{Generator, StreamVerifier};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(10, |a| a.parse().expect("n"));
    let start = Instant::now();
    let generator = Generator::new(n).unwrap();
    println!(
        "tree for n = {n}: {} splices, {:?}",
        generator.splices().len(),
        start.elapsed()
    );

    let mut verifier = StreamVerifier::new(n);
    let mut histogram = vec![0u64; n + 1];
    let len = generator
        .stream(|s| {
            histogram[s as usize] += 1;
            verifier.push(s);
        })
        .unwrap();
    let report = verifier.finish();
    println!(
        "length {len}, valid {}, {:?}",
        report.valid,
        start.elapsed()
    );
    println!("symbol counts: {histogram:?}");
}
