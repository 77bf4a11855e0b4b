use serde::Serialize;

use super::descriptor::quotient_descriptor;
use super::rank::level_rank;
use super::{check_level, Unsupported};
use crate::laurent::abelianization;
use crate::presentations::Presentation;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerLevel {
    pub n: usize,
    /// Dimension of the new layer over `over`.
    pub dimension: usize,
    pub over: &'static str,
    pub extension: &'static str,
    /// `t_k`-action matrices on the layer, when a certified basis exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actions: Option<Vec<Vec<Vec<String>>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerDescriptor {
    pub levels: Vec<TowerLevel>,
    pub stabilized: Option<usize>,
    /// The limit group when the tower is known to stabilize.
    pub limit: Option<String>,
}

/// Levels `0..=n` of the torsion-free-solvable completion tower.
pub fn completion_descriptor(p: &Presentation, n: usize) -> Result<TowerDescriptor, Unsupported> {
    check_level(n)?;
    let b = abelianization(p).b;
    let mut levels = vec![TowerLevel { n: 0, dimension: 0, over: "trivial", extension: "trivial", actions: None }];
    if n >= 1 {
        levels.push(TowerLevel { n: 1, dimension: b, over: "Q", extension: "H_1(G;Q)", actions: None });
    }
    let r1 = if b == 0 { 0 } else { level_rank(p, 1)?.rank };
    if n >= 2 {
        let actions =
            if b > 0 { quotient_descriptor(p, 2).ok().and_then(|d| d.extension).map(|e| e.actions) } else { None };
        levels.push(TowerLevel { n: 2, dimension: r1, over: "K(G~1)", extension: "H_1(G;K(G~1)) x| G~1", actions });
    }
    let stabilized = if b == 0 {
        Some(0)
    } else if r1 == 0 {
        Some(1)
    } else {
        None
    };
    let limit = match stabilized {
        Some(0) => Some("trivial".to_string()),
        Some(_) if b == 1 => Some("Q".to_string()),
        Some(_) => Some(format!("Q^{b}")),
        None => None,
    };
    Ok(TowerDescriptor { levels, stabilized, limit })
}
