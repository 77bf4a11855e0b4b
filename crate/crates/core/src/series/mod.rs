//! The torsion-free derived series through level 2.
//!
//! For a presentation with `g` generators the rank of the `n`-th successive
//! quotient is `r_n = g - rank d1 - rank d2`, both boundary maps taken with
//! coefficients in the fraction field of the level-`n` quotient group ring.
//! Level 1 works over `Q(t_1, ..., t_b)`. Level 2 works over the iterated
//! Ore field of a split metabelian group that contains `G / G^(2)_H`; see
//! [`MagnusEmbedding`].

mod completion;
mod descriptor;
mod magnus;
mod rank;
mod strebel;

pub use completion::{completion_descriptor, TowerDescriptor, TowerLevel};
pub use descriptor::{quotient_descriptor, Certification, GeneratorImage, ModuleExtension, QuotientDescriptor};
pub use magnus::MagnusEmbedding;
pub use rank::{
    level_rank, level_rank_with, rank_report, stabilization, LevelOutcome, LevelRank, LevelWitness, Method, RankReport,
    Stabilization,
};
pub use strebel::{strebel_check, strebel_check_skew, strebel_lower_bound, strebel_lower_bound_skew, StrebelCheck};

use serde::Serialize;
use thiserror::Error;

/// Highest level at which ranks and descriptors are computed.
pub const MAX_LEVEL: usize = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnsupportedReason {
    ModuleNotCertifiedFree,
    LevelCap,
}

impl UnsupportedReason {
    pub fn code(self) -> &'static str {
        match self {
            UnsupportedReason::ModuleNotCertifiedFree => "module-not-certified-free",
            UnsupportedReason::LevelCap => "level-cap",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error, Serialize)]
#[error("unsupported at level {level}: {}", reason.code())]
pub struct Unsupported {
    pub level: usize,
    pub reason: UnsupportedReason,
}

fn check_level(n: usize) -> Result<(), Unsupported> {
    if n > MAX_LEVEL {
        Err(Unsupported { level: n, reason: UnsupportedReason::LevelCap })
    } else {
        Ok(())
    }
}
