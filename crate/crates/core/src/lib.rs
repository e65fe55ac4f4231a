//! Universal cycles for permutations over the alphabet `{0, 1, ..., n}`.
//!
//! A word `u_1 ... u_{n!}` is a universal cycle for `S_n` when each
//! permutation of `1..=n` is order-isomorphic to exactly one of its `n!`
//! cyclic windows of length `n`. `n + 1` symbols is the fewest possible,
//! and this crate builds such words for every `n >= 3`:
//!
//! 1. every `a` in `S_{n-1}` with a label `x` gives a short cycle of
//!    `n` tuples ([`cycles`]);
//! 2. two short cycles whose labels and permutations fit together can be
//!    spliced into one ([`linkage`]);
//! 3. a tree of linkable cycles, one per permutation, is built by
//!    induction from a searched base case ([`treebuild`]);
//! 4. splicing along the tree yields one cycle of length `n!`, streamed
//!    symbol by symbol ([`generate`]).
//!
//! [`verify`] checks words independently of the construction and
//! [`count`] evaluates the known bounds on the number of such words.
//!
//! ```
//! let word = ucycle::generate(5).unwrap();
//! assert_eq!(word.len(), 120);
//! assert!(ucycle::verify(5, word.symbols()).valid);
//! ```
//!
//! The `examples/` directory has one runnable program per capability, and
//! the `ucycle` binary exposes the same operations on the command line.

pub mod count;
pub mod cycles;
pub mod error;
pub mod generate;
pub mod linkage;
pub mod pattern;
pub mod treebuild;
pub mod verify;

pub use cycles::{cycle_vertex, short_cycle, LabeledVertex, ShortCycle};
pub use error::{Error, Result};
pub use generate::{compile_splices, generate, stream, Generator, SpliceTable, UWord, WordFormat};
pub use linkage::{linkable, partner, splice_edges, LinkSpec, Splice};
pub use pattern::{order_isomorphic, pattern, perm_rank, rotate, shift, Perm, Tuple};
pub use treebuild::{
    build_tree, check_properties, embed, extend, find_base_tree, LinkTree, TreeProperties,
};
pub use verify::{verify, verify_stream, StreamVerifier, VerifyReport};
