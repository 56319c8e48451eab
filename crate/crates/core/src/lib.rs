//! Core library behind the `patic` tool.
//!
//! The pipeline treats a code summarization model as a black box that maps a
//! method body to a predicted name (a sequence of subtokens). Starting from a
//! corpus of methods and such an oracle, it:
//!
//! 1. reduces each method to its *seeds* — minimal statement subsets that
//!    alone keep the oracle's prediction ([`seeds`]);
//! 2. mutates seed statements into *mutants* that still keep the prediction
//!    when embedded in the original context ([`mutants`]);
//! 3. *concretizes* seeds and mutants into full methods, mapping out how far
//!    the surrounding context can drift before the prediction flips
//!    ([`concretize`]);
//! 4. infers a context-free grammar describing all verified concretizations
//!    ([`grammar`]);
//! 5. uses the seeds to drive targeted robustness attacks ([`robustness`])
//!    and training-set augmentation ([`augment`]).
//!
//! [`ast`] provides the Java-subset parser/printer and the statement-set view
//! of method bodies; [`edit`] provides tree edits and tree-edit distance;
//! [`oracle`] provides the model interface, including a mock family used
//! throughout the test suites.

pub mod ast;
pub mod augment;
pub mod concretize;
pub mod corpus;
pub mod edit;
pub mod grammar;
pub mod mutants;
pub mod oracle;
pub mod pipeline;
pub mod report;
pub mod robustness;
pub mod seeds;
pub mod testkit;
