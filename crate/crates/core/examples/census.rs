//! Count every normalized universal cycle for n = 3 and n = 4.
//!
//!     cargo run --release --example census

use ucycle::count::{bounds, enumerate_ucycles};
use ucycle::verify;

fn main() {
    for n in [3, 4] {
        let census = enumerate_ucycles(n).unwrap();
        let upper = bounds(n).unwrap().upper;
        let ok = census.words.iter().all(|w| verify(n, w).valid);
        println!(
            "U({n}) = {} (upper bound {upper}), all verified: {ok}",
            census.count
        );
        for w in census.words.iter().take(8) {
            let s: String = w.iter().map(|d| char::from(b'0' + d)).collect();
            println!("  {s}");
        }
        if census.words.len() > 8 {
            println!("  ... {} more", census.words.len() - 8);
        }
    }
}
