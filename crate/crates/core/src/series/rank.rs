use serde::Serialize;

use super::magnus::MagnusEmbedding;
use super::strebel::{strebel_check_skew, StrebelCheck};
use super::{check_level, Unsupported, MAX_LEVEL};
use crate::laurent::{
    abelianization, boundary_column, laurent_rank_witness, specialize_jacobian, AbelianizationData, LaurentPoly,
    Matrix, RankWitness,
};
use crate::presentations::{fox_jacobian, Presentation};
use crate::skewfield::{skew_rank_witness, PivotOrder, SkewRankWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// `r_0 = b_1` read off the Smith form of the relator exponent matrix.
    Abelianization,
    /// `b_1 = 0`: every quotient is trivial and all ranks vanish.
    B1ZeroShortcut,
    /// Fraction-free elimination over `Q(t_1, ..., t_b)`.
    LaurentElimination,
    /// `r_1 = 0`, so the level-2 quotient equals the level-1 quotient.
    StabilizedBelow,
    /// Elimination over the Ore field of the metabelian ambient group.
    MagnusSkewElimination,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LevelWitness {
    None,
    Laurent { d1: RankWitness, d2: RankWitness },
    Skew { ambient_module_rank: usize, d1: SkewRankWitness, d2: SkewRankWitness, strebel: Vec<StrebelCheck> },
}

/// `r_n = g - rank d1 - rank d2` at one level, with the data to recheck it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRank {
    pub level: usize,
    pub rank: usize,
    pub method: Method,
    pub generators: usize,
    pub boundary_ranks: [usize; 2],
    pub witness: LevelWitness,
}

pub fn level_rank(p: &Presentation, n: usize) -> Result<LevelRank, Unsupported> {
    level_rank_with(p, n, PivotOrder::Forward)
}

/// As [`level_rank`], with the pivot search order made explicit. Both
/// orders must give the same rank.
pub fn level_rank_with(p: &Presentation, n: usize, order: PivotOrder) -> Result<LevelRank, Unsupported> {
    check_level(n)?;
    let ab = abelianization(p);
    Ok(match n {
        0 => level_zero(p, &ab),
        1 => level_one(p, &ab, order),
        _ => level_two(p, &ab, order),
    })
}

fn level_zero(p: &Presentation, ab: &AbelianizationData) -> LevelRank {
    let g = p.num_generators();
    LevelRank {
        level: 0,
        rank: ab.b,
        method: Method::Abelianization,
        generators: g,
        boundary_ranks: [0, g - ab.b],
        witness: LevelWitness::None,
    }
}

fn trivial(p: &Presentation, level: usize, method: Method, ab: &AbelianizationData) -> LevelRank {
    let g = p.num_generators();
    LevelRank {
        level,
        rank: 0,
        method,
        generators: g,
        boundary_ranks: [usize::from(ab.b > 0), g - usize::from(ab.b > 0)],
        witness: LevelWitness::None,
    }
}

fn ordered_witness(m: &Matrix<LaurentPoly>, order: PivotOrder) -> RankWitness {
    if order == PivotOrder::Forward {
        return laurent_rank_witness(m);
    }
    let rows: Vec<usize> = (0..m.rows()).rev().collect();
    let cols: Vec<usize> = (0..m.cols()).rev().collect();
    let mut w = laurent_rank_witness(&m.select_rows(&rows).select_cols(&cols));
    for p in &mut w.pivots {
        *p = (rows[p.0], cols[p.1]);
    }
    w
}

fn level_one(p: &Presentation, ab: &AbelianizationData, order: PivotOrder) -> LevelRank {
    if ab.b == 0 {
        return trivial(p, 1, Method::B1ZeroShortcut, ab);
    }
    let g = p.num_generators();
    let d1 = ordered_witness(&boundary_column(p, ab).transpose(), order);
    let d2 = ordered_witness(&specialize_jacobian(&fox_jacobian(p), ab, g), order);
    let boundary_ranks = [d1.rank, d2.rank];
    LevelRank {
        level: 1,
        rank: g - d1.rank - d2.rank,
        method: Method::LaurentElimination,
        generators: g,
        boundary_ranks,
        witness: LevelWitness::Laurent { d1, d2 },
    }
}

fn level_two(p: &Presentation, ab: &AbelianizationData, order: PivotOrder) -> LevelRank {
    if ab.b == 0 {
        return trivial(p, 2, Method::B1ZeroShortcut, ab);
    }
    let one = level_one(p, ab, order);
    if one.rank == 0 {
        return LevelRank { level: 2, method: Method::StabilizedBelow, witness: LevelWitness::None, ..one };
    }
    let g = p.num_generators();
    let j = specialize_jacobian(&fox_jacobian(p), ab, g);
    let magnus = MagnusEmbedding::new(ab, &j);
    let tower = magnus.tower();
    let m1 = magnus.boundary_column().transpose();
    let m2 = magnus.jacobian(p);
    let d1 = skew_rank_witness(tower, &m1, order);
    let d2 = skew_rank_witness(tower, &m2, order);
    let strebel: Vec<StrebelCheck> = [&m1, &m2].iter().filter_map(|m| strebel_check_skew(tower, m)).collect();
    assert!(strebel.iter().all(|s| s.holds), "augmentation bound exceeded the exact rank");
    LevelRank {
        level: 2,
        rank: g - d1.rank - d2.rank,
        method: Method::MagnusSkewElimination,
        generators: g,
        boundary_ranks: [d1.rank, d2.rank],
        witness: LevelWitness::Skew { ambient_module_rank: magnus.ambient_rank(), d1, d2, strebel },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum LevelOutcome {
    Computed(LevelRank),
    Unsupported(Unsupported),
}

impl LevelOutcome {
    pub fn rank(&self) -> Option<usize> {
        match self {
            LevelOutcome::Computed(r) => Some(r.rank),
            LevelOutcome::Unsupported(_) => None,
        }
    }
}

/// The least level `n <= 2` with `r_n = 0`, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stabilization {
    pub beta1: usize,
    pub stabilized_at: Option<usize>,
    pub status: &'static str,
}

impl Stabilization {
    fn from_ranks(beta1: usize, ranks: &[Option<usize>]) -> Self {
        let at = ranks.iter().position(|r| *r == Some(0));
        let status = match at {
            Some(_) => "stabilized",
            None if ranks.len() > MAX_LEVEL && ranks[MAX_LEVEL].is_some() => "not-detected-through-level-2",
            None => "undecided",
        };
        Stabilization { beta1, stabilized_at: at, status }
    }
}

pub fn stabilization(p: &Presentation) -> Stabilization {
    let ab = abelianization(p);
    let mut ranks = Vec::new();
    for n in 0..=MAX_LEVEL {
        let r = level_rank(p, n).ok().map(|r| r.rank);
        ranks.push(r);
        if r == Some(0) {
            break;
        }
    }
    Stabilization::from_ranks(ab.b, &ranks)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub generators: usize,
    pub relators: usize,
    pub beta1: usize,
    pub torsion: Vec<String>,
    pub levels: Vec<LevelOutcome>,
    pub stabilization: Stabilization,
    pub beyond: &'static str,
}

/// Ranks at levels `0..=max_level`; levels above the cap are reported as
/// unsupported.
pub fn rank_report(p: &Presentation, max_level: usize) -> RankReport {
    let ab = abelianization(p);
    let levels: Vec<LevelOutcome> = (0..=max_level)
        .map(|n| match level_rank(p, n) {
            Ok(r) => LevelOutcome::Computed(r),
            Err(u) => LevelOutcome::Unsupported(u),
        })
        .collect();
    let ranks: Vec<Option<usize>> = levels.iter().map(LevelOutcome::rank).collect();
    let stabilization = Stabilization::from_ranks(ab.b, &ranks);
    RankReport {
        generators: p.num_generators(),
        relators: p.num_relators(),
        beta1: ab.b,
        torsion: ab.torsion.iter().map(ToString::to_string).collect(),
        levels,
        stabilization,
        beyond: "unknown beyond level 2",
    }
}
