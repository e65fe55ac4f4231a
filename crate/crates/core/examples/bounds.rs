//! Lower and upper bounds on the number of normalized universal cycles.
//!
//!     cargo run --example bounds

use ucycle::count::bounds;

fn main() {
    for n in 3..=9 {
        let b = bounds(n).unwrap();
        let lower = b.lower.map_or("-".to_string(), |l| {
            let s = l.to_string();
            if s.len() > 30 {
                format!("~10^{}", s.len() - 1)
            } else {
                s
            }
        });
        let upper = b.upper.to_string();
        let upper = if upper.len() > 30 {
            format!("~10^{}", upper.len() - 1)
        } else {
            upper
        };
        println!("n = {n}: {lower} <= U(n) <= {upper}");
    }
}
