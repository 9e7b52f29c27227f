//! τ-tilting theory: the AR translate, support τ-tilting pairs, mutation
//! and exchange graphs.

mod exchange;
mod mutation;
mod nakayama;
mod pair;

pub use exchange::{enumerate_stt, Edge, ExchangeGraph, Node, DEFAULT_MAX_NODES};
pub use mutation::{in_fac, minimal_left_approximation, Direction, Mutation, Mutator, SummandRef};
pub use nakayama::{is_tau_rigid, nakayama, nakayama_projective, opposite_element, tau, transpose};
pub use pair::{
    classify_pair, node_name, support_label, validate_stt_pair, Labeler, PairClass, PairStatus, Quotients, SttPair,
    Validation,
};
