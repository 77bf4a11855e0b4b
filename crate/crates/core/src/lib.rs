//! Exact computation of torsion-free derived series invariants of finitely
//! presented groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`presentations`]: words, presentations, homomorphisms, Fox calculus.
//! * [`laurent`]: integer matrices and Smith normal form, multivariable
//!   Laurent polynomials, fraction-free rank, Alexander data.
//! * [`skewfield`]: skew Laurent extensions, Ore fractions and rank over the
//!   iterated fraction field of a metabelian group ring.
//! * [`series`]: the ranks `r_n`, quotient descriptors, stabilization and
//!   completion-tower descriptors for levels `n <= 2`.
//! * [`homcheck`]: rational 2-connectivity verdicts and their consequences.
//! * [`cli`]: the bundled corpus, JSON reports and the command front end.
//! * [`citations`]: tags attached to reports and the statements they name.

pub mod citations;
pub mod cli;
pub mod homcheck;
pub mod laurent;
pub mod presentations;
pub mod series;
pub mod skewfield;
