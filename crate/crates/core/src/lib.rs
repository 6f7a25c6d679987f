//! Character-centric storytelling toolkit.
//!
//! The pipeline has three stages that build on each other:
//!
//! 1. **Extraction** — [`wordnet`] parses the raw WordNet noun database and
//!    [`postag`]/[`charex`] turn tagged story sentences into per-story sets of
//!    human/animal characters plus an inventory of words the lexicon cannot
//!    resolve.
//! 2. **Statistics** — [`charex`] aggregates character frequencies, pairwise
//!    story co-occurrence counts and the per-story semantic probability
//!    vectors (active characters from the story text, passive characters by
//!    co-occurrence).
//! 3. **Model** — [`nnet`] is a framework-free numeric core (semantically
//!    compositional GRU/LSTM cells with hand-derived gradients, Adam,
//!    finite-difference checking) and [`storymodel`] assembles the
//!    encoder/decoder, training loop, generation and the tiered
//!    distribution evaluation.
//!
//! [`corpus`] handles the five-image/five-sentence annotation format, the
//! model vocabulary and the binary per-photo feature store. [`synth`]
//! fabricates the deterministic desk-scale fixtures (a miniature noun
//! database and a templated toy corpus) used by tests and the CLI.

pub mod charex;
pub mod corpus;
pub mod nnet;
pub mod postag;
pub mod storymodel;
pub mod synth;
pub mod wordnet;
