//! Construction and exhaustive verification kernel for finite pointed
//! G-crossed braided categories.
//!
//! Everything here is exact: groups are multiplication tables over dense
//! integer indices, coefficient groups are tuples of residues written
//! additively, and every coherence datum of a category is a scalar in a
//! finite abelian group. All axioms (pentagon, triangle, hexagons, the
//! G-action diagrams, the crossed heptagons, the Gray-monoid interchanger
//! conditions) become finitely decidable equations that the verifiers
//! evaluate over every tuple.
//!
//! The main pipeline:
//!
//! * [`fingroup`] — finite groups and finite abelian coefficient groups;
//! * [`cochain`] — group cochains, coboundaries, the degree-4 pushforward
//!   of a 2-cocycle along an abelian 3-cocycle, and obstruction solving;
//! * [`pointed`] — skeletal braided categories with invertible simple
//!   objects, a parenthesized-word evaluator, and duality data;
//! * [`gcrossed`] — pointed G-crossed braided categories, their verifiers,
//!   and the zesting constructor;
//! * [`gray`] — pointed Gray-monoids and the two-way constructions with
//!   an on-the-nose round trip;
//! * [`crossed_monoid`] — the decategorified G-crossed monoids.

pub mod cochain;
pub mod corpus;
pub mod crossed_monoid;
pub mod fingroup;
pub mod gcrossed;
pub mod gray;
pub mod pointed;
pub mod report;
pub mod snf;

pub use fingroup::{FiniteAbelianGroup, FiniteGroup, GroupHom};
pub use report::{AxiomLabel, Failure, Report, ReportOptions};
