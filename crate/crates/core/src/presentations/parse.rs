use thiserror::Error;

use super::word::{free_reduce, Word};
use super::{GroupHom, Presentation, PresentationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("line {line}, column {col}: unknown generator `{name}`")]
    UnknownGenerator { line: usize, col: usize, name: String },
    #[error("line {line}: relators given but the generator list is empty")]
    EmptyGenerators { line: usize },
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, col, message: message.into() }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn swap_case(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_uppercase() { c.to_ascii_lowercase() } else { c.to_ascii_uppercase() }).collect()
}

/// Splits a line into whitespace-separated tokens with 1-based columns,
/// dropping everything after `#`.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let line = match line.find('#') {
        Some(k) => &line[..k],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_letter(tok: &str, names: &[String], line: usize, col: usize) -> Result<(usize, i64), ParseError> {
    let (inv, body) = match tok.strip_prefix('~') {
        Some(rest) => (true, rest),
        None => (false, tok),
    };
    let (id, exp) = match body.split_once('^') {
        Some((id, e)) => {
            let e: i64 = e.parse().map_err(|_| syntax(line, col, format!("bad exponent in `{tok}`")))?;
            (id, e)
        }
        None => (body, 1),
    };
    if !is_ident(id) {
        return Err(syntax(line, col, format!("malformed letter `{tok}`")));
    }
    let exp = if inv { -exp } else { exp };
    if let Some(i) = names.iter().position(|n| n == id) {
        return Ok((i, exp));
    }
    // Case-inverted shorthand (X for x^-1) when unambiguous.
    let swapped = swap_case(id);
    if let Some(i) = names.iter().position(|n| *n == swapped) {
        return Ok((i, -exp));
    }
    Err(ParseError::UnknownGenerator { line, col, name: id.to_string() })
}

fn parse_letters(toks: &[(usize, &str)], names: &[String], line: usize) -> Result<Word, ParseError> {
    let mut letters = Vec::new();
    for &(col, tok) in toks {
        if tok == "1" && toks.len() == 1 {
            return Ok(Word::identity());
        }
        letters.push(parse_letter(tok, names, line, col)?);
    }
    Ok(free_reduce(letters))
}

/// Parses a word over the given generator names (`1` is the identity).
pub fn parse_word(text: &str, names: &[String]) -> Result<Word, ParseError> {
    parse_letters(&tokens(text), names, 1)
}

/// Parses the presentation file format.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut name: Option<String> = None;
    let mut gens: Option<Vec<String>> = None;
    let mut rels: Vec<Word> = Vec::new();
    let mut sources: Vec<Option<String>> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let toks = tokens(raw);
        let Some(&(col, directive)) = toks.first() else {
            continue;
        };
        match directive {
            "group" => {
                if toks.len() != 2 {
                    return Err(syntax(line, col, "expected `group <name>`"));
                }
                if name.is_some() {
                    return Err(syntax(line, col, "duplicate `group` directive"));
                }
                name = Some(toks[1].1.to_string());
            }
            "gens" => {
                if gens.is_some() {
                    return Err(syntax(line, col, "duplicate `gens` directive"));
                }
                let mut list = Vec::new();
                for &(c, t) in &toks[1..] {
                    if !is_ident(t) {
                        return Err(syntax(line, c, format!("invalid generator id `{t}`")));
                    }
                    if list.iter().any(|g: &String| g == t) {
                        return Err(syntax(line, c, format!("duplicate generator `{t}`")));
                    }
                    list.push(t.to_string());
                }
                gens = Some(list);
            }
            "rel" => {
                let names = match &gens {
                    Some(g) if !g.is_empty() => g,
                    Some(_) => return Err(ParseError::EmptyGenerators { line }),
                    None => return Err(syntax(line, col, "`rel` before `gens`")),
                };
                let w = parse_letters(&toks[1..], names, line)?;
                rels.push(w);
                let src: Vec<&str> = toks[1..].iter().map(|t| t.1).collect();
                sources.push(Some(src.join(" ")));
            }
            other => {
                return Err(syntax(line, col, format!("unknown directive `{other}`")));
            }
        }
    }
    let gens = gens.ok_or_else(|| syntax(1, 1, "missing `gens` directive"))?;
    let mut p = Presentation::new(gens, rels)?.with_sources(sources);
    if let Some(n) = name {
        p = p.with_name(n);
    }
    Ok(p)
}

/// A parsed homomorphism file, before the endpoint presentations are loaded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFile {
    pub name: Option<String>,
    pub from: String,
    pub to: String,
    /// `(source generator, word text, line)` in file order.
    pub images: Vec<(String, String, usize)>,
    /// Set by an `assert onto` line.
    pub assert_onto: bool,
}

pub fn parse_hom_file(text: &str) -> Result<HomFile, ParseError> {
    let mut name = None;
    let mut from = None;
    let mut to = None;
    let mut images = Vec::new();
    let mut assert_onto = false;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let toks = tokens(raw);
        let Some(&(col, directive)) = toks.first() else {
            continue;
        };
        match directive {
            "map" if toks.len() == 2 => name = Some(toks[1].1.to_string()),
            "from" if toks.len() == 2 => from = Some(toks[1].1.to_string()),
            "to" if toks.len() == 2 => to = Some(toks[1].1.to_string()),
            "assert" if toks.len() == 2 && toks[1].1 == "onto" => assert_onto = true,
            "img" => {
                if toks.len() < 3 || toks[2].1 != "=" {
                    return Err(syntax(line, col, "expected `img <gen> = <word>`"));
                }
                let rest: Vec<&str> = toks[3..].iter().map(|t| t.1).collect();
                images.push((toks[1].1.to_string(), rest.join(" "), line));
            }
            other => {
                return Err(syntax(line, col, format!("unexpected `{other}` directive")));
            }
        }
    }
    Ok(HomFile {
        name,
        from: from.ok_or_else(|| syntax(1, 1, "missing `from`"))?,
        to: to.ok_or_else(|| syntax(1, 1, "missing `to`"))?,
        images,
        assert_onto,
    })
}

impl HomFile {
    /// Builds the homomorphism once both endpoint presentations are known.
    pub fn resolve(&self, source: &Presentation, target: &Presentation) -> Result<GroupHom, ParseError> {
        let mut imgs: Vec<Option<Word>> = vec![None; source.num_generators()];
        for (g, text, line) in &self.images {
            let i = source.generator_index(g).ok_or_else(|| ParseError::UnknownGenerator {
                line: *line,
                col: 5,
                name: g.clone(),
            })?;
            if imgs[i].is_some() {
                return Err(syntax(*line, 1, format!("duplicate image for `{g}`")));
            }
            let toks: Vec<(usize, &str)> = tokens(text);
            imgs[i] = Some(parse_letters(&toks, target.generators(), *line)?);
        }
        let mut images = Vec::new();
        for (i, w) in imgs.into_iter().enumerate() {
            match w {
                Some(w) => images.push(w),
                None => return Err(syntax(1, 1, format!("no image given for `{}`", source.generators()[i]))),
            }
        }
        Ok(GroupHom::new(source.clone(), target.clone(), images)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commutator_with_case_inversion() {
        let p = parse_presentation("gens x y\nrel x y X Y\n").unwrap();
        assert_eq!(p.num_relators(), 1);
        assert_eq!(p.relators()[0].letters(), &[(0, 1), (1, 1), (0, -1), (1, -1)]);
    }

    #[test]
    fn cube() {
        let p = parse_presentation("gens a\nrel a a a").unwrap();
        assert_eq!(p.relators()[0], Word::power_of(0, 3));
    }

    #[test]
    fn malformed_exponent() {
        let err = parse_presentation("gens x\nrel x^").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, col: 5, .. }), "{err:?}");
    }

    #[test]
    fn error_paths() {
        assert!(matches!(
            parse_presentation("gens x\nrel z").unwrap_err(),
            ParseError::UnknownGenerator { line: 2, col: 5, .. }
        ));
        assert!(matches!(parse_presentation("gens\nrel x").unwrap_err(), ParseError::EmptyGenerators { line: 2 }));
        assert!(parse_presentation("rel x\ngens x").is_err());
        assert!(parse_presentation("gens x x").is_err());
        assert!(parse_presentation("relator x").is_err());
    }

    #[test]
    fn tilde_and_comments() {
        let p = parse_presentation("# c\ngroup g\ngens x y  # two\nrel ~x^2 y x^2\n").unwrap();
        assert_eq!(p.name(), Some("g"));
        assert_eq!(p.relators()[0], Word::generator(1));
        assert_eq!(p.relator_source(0), Some("~x^2 y x^2"));
    }

    #[test]
    fn serialization_is_canonical() {
        let text = "group trefoil\ngens x y\nrel x y x y^-1 x^-1 y^-1\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.to_text(), text);
    }

    #[test]
    fn hom_file() {
        let f = parse_hom_file("map m\nfrom a.pres\nto b.pres\nimg x = t t\nassert onto\n").unwrap();
        assert_eq!(f.from, "a.pres");
        assert!(f.assert_onto);
        let a = Presentation::free(["x"]);
        let b = Presentation::free(["t"]);
        let h = f.resolve(&a, &b).unwrap();
        assert_eq!(h.images()[0], Word::power_of(0, 2));
        let bad = parse_hom_file("from a\nto b\nimg y = t").unwrap();
        assert!(bad.resolve(&a, &b).is_err());
    }
}
