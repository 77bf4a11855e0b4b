use serde::Serialize;

use super::rank::level_rank;
use super::{check_level, Unsupported, UnsupportedReason};
use crate::laurent::{abelianization, AbelianizationData, LaurentPoly};
use crate::presentations::Presentation;

/// How the level-1 module modulo torsion was shown to be free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// The module is all torsion: level 2 equals level 1.
    RankZero,
    /// Free group of rank 2: the Koszul syzygy generates the relation module.
    Koszul,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorImage {
    /// Coordinates in the module basis.
    pub module: Vec<String>,
    /// Image in `Z^b`.
    pub base: Vec<i64>,
}

/// `G / G^(2)_H` as an extension of `Z^b` by a free `Z[Z^b]`-module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleExtension {
    pub b: usize,
    pub module_rank: usize,
    pub certification: Certification,
    /// Basis vectors as 1-chains (one Laurent polynomial per generator).
    pub basis: Vec<Vec<String>>,
    /// Action of `t_k`, one `module_rank x module_rank` matrix per `k`.
    pub actions: Vec<Vec<Vec<String>>>,
    /// `None` when the extension does not split compatibly with generators.
    pub generator_images: Option<Vec<GeneratorImage>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientDescriptor {
    pub level: usize,
    pub beta1: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelianization: Option<AbelianizationData>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension: Option<ModuleExtension>,
}

/// Finite description of `G / G^(n)_H` for `n <= 2`.
pub fn quotient_descriptor(p: &Presentation, n: usize) -> Result<QuotientDescriptor, Unsupported> {
    check_level(n)?;
    let ab = abelianization(p);
    let beta1 = ab.b;
    if n == 0 {
        return Ok(QuotientDescriptor { level: 0, beta1, abelianization: None, extension: None });
    }
    if n == 1 {
        return Ok(QuotientDescriptor { level: 1, beta1, abelianization: Some(ab), extension: None });
    }
    let r1 = level_rank(p, 1)?.rank;
    let extension = if r1 == 0 {
        rank_zero_extension(&ab)
    } else if is_free_of_rank_two(p, &ab) {
        koszul_extension()
    } else {
        return Err(Unsupported { level: 2, reason: UnsupportedReason::ModuleNotCertifiedFree });
    };
    Ok(QuotientDescriptor { level: 2, beta1, abelianization: Some(ab), extension: Some(extension) })
}

fn rank_zero_extension(ab: &AbelianizationData) -> ModuleExtension {
    ModuleExtension {
        b: ab.b,
        module_rank: 0,
        certification: Certification::RankZero,
        basis: Vec::new(),
        actions: vec![Vec::new(); ab.b],
        generator_images: Some(
            ab.projection.iter().map(|v| GeneratorImage { module: Vec::new(), base: v.clone() }).collect(),
        ),
    }
}

fn is_free_of_rank_two(p: &Presentation, ab: &AbelianizationData) -> bool {
    p.num_relators() == 0 && p.num_generators() == 2 && ab.b == 2
}

fn koszul_extension() -> ModuleExtension {
    let t1 = LaurentPoly::var(2, 0);
    let t2 = LaurentPoly::var(2, 1);
    let one = LaurentPoly::one(2);
    ModuleExtension {
        b: 2,
        module_rank: 1,
        certification: Certification::Koszul,
        basis: vec![vec![(&one - &t2).to_string(), (&t1 - &one).to_string()]],
        actions: vec![vec![vec![t1.to_string()]], vec![vec![t2.to_string()]]],
        generator_images: None,
    }
}
