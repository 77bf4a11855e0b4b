use std::fmt;

/// A freely reduced word in a free group. Letters are `(generator, exponent)`
/// syllables; adjacent syllables never share a generator and no exponent is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

/// Reduces an arbitrary syllable sequence to its freely reduced form.
pub fn free_reduce<I>(letters: I) -> Word
where
    I: IntoIterator<Item = (usize, i64)>,
{
    let mut out: Vec<(usize, i64)> = Vec::new();
    for (g, e) in letters {
        if e == 0 {
            continue;
        }
        match out.last_mut() {
            Some((lg, le)) if *lg == g => {
                *le += e;
                if *le == 0 {
                    out.pop();
                }
            }
            _ => out.push((g, e)),
        }
    }
    Word { letters: out }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(i: usize) -> Self {
        Word { letters: vec![(i, 1)] }
    }

    pub fn power_of(i: usize, e: i64) -> Self {
        free_reduce([(i, e)])
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn syllables(&self) -> usize {
        self.letters.len()
    }

    /// Length as a word in the generators and their inverses.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn mul(&self, other: &Word) -> Word {
        free_reduce(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn commutator(a: &Word, b: &Word) -> Word {
        word_product(&[a.clone(), b.clone(), a.inverse(), b.inverse()])
    }

    /// Cyclically reduced form: strips conjugating syllables from both ends
    /// and merges the first and last syllable when they share a generator.
    pub fn cyclically_reduced(&self) -> Word {
        let mut letters = self.letters.clone();
        loop {
            if letters.len() < 2 {
                break;
            }
            let (fg, fe) = letters[0];
            let (lg, le) = letters[letters.len() - 1];
            if fg != lg {
                break;
            }
            letters.pop();
            let merged = fe + le;
            if merged == 0 {
                letters.remove(0);
            } else {
                letters[0] = (fg, merged);
                break;
            }
        }
        Word { letters }
    }

    pub fn exponent_sums(&self, ngens: usize) -> Vec<i64> {
        let mut v = vec![0; ngens];
        for &(g, e) in &self.letters {
            v[g] += e;
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Renders the word using generator names, `1` for the identity.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                let name = names.get(g).map(String::as_str).unwrap_or("?");
                if e == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Freely reduced product of a list of words.
pub fn word_product(ws: &[Word]) -> Word {
    free_reduce(ws.iter().flat_map(|w| w.letters.iter().copied()))
}
