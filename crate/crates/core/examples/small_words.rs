//! The two smallest universal cycles, and what their windows look like.
//!
//!     cargo run --example small_words

use ucycle::{generate, pattern};

fn main() {
    for n in [3, 4] {
        let word = generate(n).unwrap();
        println!("n = {n}: {word}");
        let s = word.symbols();
        for i in 0..s.len() {
            let window: Vec<u8> = (0..n).map(|j| s[(i + j) % s.len()]).collect();
            let p = pattern(&window).unwrap();
            println!("  {:>2}  {:?} -> {p}", i, window);
        }
        println!("  valid: {}", ucycle::verify(n, s).valid);
    }
}
