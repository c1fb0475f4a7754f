//! Algebraic Costas array constructions over finite fields, Fibonacci
//! primitive roots, and prime censuses for the densities of primes where the
//! `T4` and `G4` constructions apply.
//!
//! Module map:
//!
//! - [`ff`]: arithmetic in GF(p^k), orders, generators, log tables, modular square roots.
//! - [`costas`]: the Costas verifier, difference tables, exhaustive enumeration for small N.
//! - [`constructions`]: Welch, Lempel, Golomb and their corner-removal variants.
//! - [`fpr`]: Fibonacci primitive roots and the `T4`/`G4` applicability predicates.
//! - [`density`]: sieve, Artin's constant, censuses and primitive-trinomial experiments.
//! - [`exec`]: sequential/parallel execution switch shared by the heavy loops.

pub mod constructions;
pub mod costas;
pub mod density;
pub mod exec;
pub mod ff;
pub mod fpr;

pub use constructions::{
    build, find_spec, sweep, ConstructionError, ConstructionSpec, Method, SweepReport,
};
pub use costas::{enumerate_costas, CostasCandidate, CostasError};
pub use exec::Execution;
pub use ff::{field_of_size, make_field, FfError, Field, FieldElement};
