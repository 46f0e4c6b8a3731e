//! Exact symbolic computation in the two-parameter quantum group
//! `U_{r,s}(G2)`: normal forms, Hopf structure, the skew pairing, the
//! Drinfeld double and the Lusztig symmetries.

pub mod double;
pub mod expr;
pub mod free;
pub mod hopf;
pub mod lusztig;
pub mod pairing;
pub mod relations;
pub mod rewrite;
pub mod scalar;
pub mod suite;
pub mod tabular;
