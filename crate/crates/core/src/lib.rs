//! Thompson's group F through two independent representations: normal forms
//! in the infinite generating set `x0, x1, x2, ...` and canonical semigroup
//! diagrams over `<x | x^2 = x>`. On top of these sit the partition of F into
//! seven classes by diagram right divisors and exact density statistics of
//! finite subgraphs of the Cayley graph.

pub mod classify;
pub mod diagrams;
pub mod folner;
pub mod sample;
pub mod words;

pub use classify::{class_of, right_divisible, right_divisors, ClassLabel, ClassifyError, DivisorSet};
pub use diagrams::{
    atomic, canonicalize, concat_product, diagram_to_nf, epsilon, mirror, nf_to_diagram, reduce_dipoles, sum,
    CanonicalDiagram, Diagram, DiagramError, Forest, Tree,
};
pub use folner::{
    ball, class_histogram, deletion_bound_check, drop_classes, mu_hat, subgraph_density, translate_set,
    ClassHistogram, ElementSet, FolnerError, Rational, SubgraphStats,
};
pub use words::{
    from_standard_word, nf_invert, nf_multiply, parse_word, reduce_to_normal_form, to_standard_word, Letter,
    NormalForm, Sign, Word, WordError,
};
