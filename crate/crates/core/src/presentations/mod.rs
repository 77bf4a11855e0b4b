//! Free-group words, finite presentations, homomorphisms and Fox calculus.
//!
//! Text formats handled here:
//!
//! ```text
//! # trefoil
//! group trefoil
//! gens x y
//! rel x y x y^-1 x^-1 y^-1
//! ```
//!
//! A letter is a generator id, optionally prefixed by `~` (inverse) and/or
//! followed by `^<int>`. Homomorphism files use `map`, `from`, `to` and
//! `img <gen> = <word>` lines.

mod fox;
mod parse;
mod word;

pub use fox::{fox_derivative, fox_jacobian, fundamental_identity_defect, FreeRingElt};
pub use parse::{parse_hom_file, parse_presentation, parse_word, HomFile, ParseError};
pub use word::{free_reduce, word_product, Word};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("homomorphism needs {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
}

/// A finite presentation. Relators are stored cyclically reduced; the text
/// they were parsed from (if any) is kept for reporting.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: Option<String>,
    generators: Vec<String>,
    relators: Vec<Word>,
    relator_source: Vec<Option<String>>,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.generators == other.generators && self.relators == other.relators
    }
}

impl Eq for Presentation {}

impl Presentation {
    pub fn new<S: Into<String>>(
        generators: impl IntoIterator<Item = S>,
        relators: impl IntoIterator<Item = Word>,
    ) -> Result<Self, PresentationError> {
        let generators: Vec<String> = generators.into_iter().map(Into::into).collect();
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let mut rels = Vec::new();
        for r in relators {
            if let Some(m) = r.max_generator() {
                if m >= generators.len() {
                    return Err(PresentationError::GeneratorOutOfRange { index: m, count: generators.len() });
                }
            }
            rels.push(r.cyclically_reduced());
        }
        let n = rels.len();
        Ok(Presentation { name: None, generators, relators: rels, relator_source: vec![None; n] })
    }

    /// Free group on the given generator names.
    pub fn free<S: Into<String>>(generators: impl IntoIterator<Item = S>) -> Self {
        Presentation::new(generators, std::iter::empty()).expect("free presentation")
    }

    /// Free group on `x1..xm`.
    pub fn free_of_rank(m: usize) -> Self {
        Presentation::free((1..=m).map(|i| format!("x{i}")))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub(crate) fn with_sources(mut self, sources: Vec<Option<String>>) -> Self {
        debug_assert_eq!(sources.len(), self.relators.len());
        self.relator_source = sources;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_relators(&self) -> usize {
        self.relators.len()
    }

    /// The text a relator was parsed from, when it came from a file.
    pub fn relator_source(&self, j: usize) -> Option<&str> {
        self.relator_source.get(j).and_then(|s| s.as_deref())
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Relator exponent-sum matrix (relators x generators).
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| r.exponent_sums(self.num_generators())).collect()
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.display_with(&self.generators)
    }

    /// Canonical text serialization; `parse_presentation` inverts it.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str(&format!("group {n}\n"));
        }
        out.push_str("gens");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g);
        }
        out.push('\n');
        for r in &self.relators {
            if r.is_identity() {
                out.push_str("rel\n");
            } else {
                out.push_str("rel ");
                out.push_str(&r.display_with(&self.generators));
                out.push('\n');
            }
        }
        out
    }
}

/// A homomorphism given by generator images. Relator images are not checked
/// here; see [`crate::homcheck`] for the abelianized necessary condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: Presentation,
    target: Presentation,
    images: Vec<Word>,
}

impl GroupHom {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Word>) -> Result<Self, PresentationError> {
        if images.len() != source.num_generators() {
            return Err(PresentationError::ImageCount { expected: source.num_generators(), got: images.len() });
        }
        for w in &images {
            if let Some(m) = w.max_generator() {
                if m >= target.num_generators() {
                    return Err(PresentationError::GeneratorOutOfRange { index: m, count: target.num_generators() });
                }
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(p: &Presentation) -> Self {
        let images = (0..p.num_generators()).map(Word::generator).collect();
        GroupHom { source: p.clone(), target: p.clone(), images }
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Substitutes generator images into `w`.
    pub fn apply(&self, w: &Word) -> Word {
        let parts: Vec<Word> = w.letters().iter().map(|&(g, e)| self.images[g].pow(e)).collect();
        word_product(&parts)
    }

    /// True when every target generator is itself the image of some source
    /// generator, which certifies surjectivity.
    pub fn images_visibly_generate(&self) -> bool {
        (0..self.target.num_generators()).all(|j| {
            let g = Word::generator(j);
            let gi = g.inverse();
            self.images.iter().any(|w| *w == g || *w == gi)
        })
    }
}

pub fn apply_hom(h: &GroupHom, w: &Word) -> Word {
    h.apply(w)
}
