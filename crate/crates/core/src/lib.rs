//! Pseudo-powers of finite words under antimorphic involutions.
//!
//! A pseudo k-th power is a word `u1 u2 ... uk` in which every block equals
//! either `u1` or `phi(u1)`, where `phi` is an antimorphic involution: a
//! self-inverse letter permutation followed by reversal. Watson-Crick
//! complementarity over `ACGT` is the motivating example.
//!
//! The crate is organised as:
//!
//! * [`alphabet`] and [`involution`]: letters, words and the involution algebra,
//!   including the text format `(a,b),(c,d).mir`.
//! * [`morphic`]: letter-to-word morphisms and their fixed-point prefixes,
//!   with the built-in Leech, Dekking and separated Thue-Morse constructions.
//! * [`periodicity`]: shortest squares starting/ending at each position
//!   (`rmp`/`lmp`), maximal centred pseudo-palindromes (`cmp`), and
//!   square/cube detection.
//! * [`detect`]: a naive detector, the doubling match-matrix detector for any
//!   exponent, and the specialised square and cube deciders.
//! * [`search`]: exhaustive trie enumeration of pseudo-power-free words.
//!
//! ```
//! use std::sync::Arc;
//! use pseudopower::{detect, search, Algorithm, Alphabet, Budget, Involution, Word};
//!
//! let wc = Involution::watson_crick();
//! let w = Word::parse(wc.alphabet(), "ACGCGT")?;
//! let hit = detect::first_hit(&w, &wc, 2, Algorithm::Auto)?.unwrap();
//! assert_eq!((hit.start, hit.block_len), (1, 3));
//!
//! let sigma = Arc::new(Alphabet::digits(3)?);
//! let phi = Involution::parse(Arc::clone(&sigma), "(0,1).mir")?;
//! let report = search::dfs_search(&sigma, &phi, 2, Budget::unlimited())?;
//! assert_eq!((report.total_nodes, report.leaf_nodes, report.depth), (91, 61, 8));
//! # Ok::<(), pseudopower::Error>(())
//! ```

pub mod alphabet;
pub mod detect;
pub mod error;
pub mod involution;
pub mod morphic;
pub mod periodicity;
pub mod search;

mod repetition;

pub use alphabet::{Alphabet, Letter, Word};
pub use detect::{Algorithm, PseudoPowerHit, Tag};
pub use error::{Error, Result};
pub use involution::{Classification, Decomposition, Involution};
pub use morphic::{Builtin, Morphism};
pub use periodicity::{PeriodicityProfile, INFINITY};
pub use search::{Budget, SearchReport};
