use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ucycle::generate::{Generator, WORD_3, WORD_4};
use ucycle::verify::FailureReason;
use ucycle::{generate, stream, verify, verify_stream};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn generated_words_verify() {
    for n in 3..=10 {
        let w = generate(n).unwrap();
        assert_eq!(w.len(), factorial(n));
        assert!(w.symbols().iter().all(|&s| s as usize <= n));
        assert!(w.symbols()[..n].windows(2).all(|p| p[0] < p[1]), "n = {n}");
        let r = verify(n, w.symbols());
        assert!(r.valid, "n = {n}: {r:?}");
    }
}

#[test]
fn small_words_are_the_hand_examples() {
    assert_eq!(generate(3).unwrap().to_string(), WORD_3);
    assert_eq!(generate(4).unwrap().to_string(), WORD_4);
}

#[test]
fn stream_matches_generate() {
    for n in 3..=7 {
        let mut got = Vec::new();
        let count = stream(n, |s| got.push(s)).unwrap();
        assert_eq!(count as usize, factorial(n));
        assert_eq!(got, generate(n).unwrap().into_symbols());
    }
    assert_eq!(stream(5, |_| {}).unwrap(), 120);
}

#[test]
fn streamed_word_into_streaming_verifier() {
    let g = Generator::new(7).unwrap();
    let mut symbols = Vec::new();
    g.stream(|s| symbols.push(s)).unwrap();
    let r = verify_stream(7, symbols);
    assert!(r.valid);
    assert_eq!(r.patterns_seen, 5040);
}

#[test]
fn truncated_stream_fails_on_length() {
    let w = generate(5).unwrap();
    let r = verify_stream(5, w.symbols()[..119].iter().copied());
    assert!(!r.valid);
    assert!(!r.length_ok);
}

#[test]
fn every_single_symbol_change_is_rejected() {
    let w = generate(5).unwrap().into_symbols();
    for i in 0..w.len() {
        for s in 0..=5u8 {
            if s == w[i] {
                continue;
            }
            let mut m = w.clone();
            m[i] = s;
            assert!(!verify(5, &m).valid, "position {i} -> {s}");
        }
    }
}

#[test]
fn every_transposition_is_rejected() {
    let w = generate(5).unwrap().into_symbols();
    let mut tried = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] == w[j] {
                continue;
            }
            let mut m = w.clone();
            m.swap(i, j);
            assert!(!verify(5, &m).valid, "swap {i} {j}");
            tried += 1;
        }
    }
    assert!(tried > 1000);
}

#[test]
fn in_memory_and_streaming_verifiers_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..300 {
        let n = rng.gen_range(3..=8);
        let mut w = generate(n).unwrap().into_symbols();
        match round % 4 {
            0 => {}
            1 => {
                let i = rng.gen_range(0..w.len());
                w[i] = rng.gen_range(0..=n as u8 + 1);
            }
            2 => {
                let (i, j) = (rng.gen_range(0..w.len()), rng.gen_range(0..w.len()));
                w.swap(i, j);
            }
            _ => {
                let len = rng.gen_range(0..w.len() + 5);
                w.resize(len, rng.gen_range(0..=n as u8));
            }
        }
        assert_eq!(
            verify(n, &w),
            verify_stream(n, w.iter().copied()),
            "n = {n}, round {round}"
        );
    }
}

#[test]
fn failures_point_at_the_first_bad_window() {
    let w = generate(5).unwrap().into_symbols();
    let mut m = w.clone();
    m[50] = m[51];
    let r = verify(5, &m);
    let f = r.first_failure.unwrap();
    assert_eq!(f.reason, FailureReason::RepeatedSymbol);
    assert_eq!(f.index, 47);
}
