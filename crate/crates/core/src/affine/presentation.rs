use std::fmt;

use super::AffineError;

/// One letter of a group word: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Self { generator, inverse }
    }

    pub fn inverted(self) -> Self {
        Self {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A word in the generators; not reduced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn generator(g: usize) -> Self {
        Self(vec![Letter::new(g, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `Some(g)` when the word is the single positive letter `g`.
    pub fn as_generator(&self) -> Option<usize> {
        match self.0.as_slice() {
            [l] if !l.inverse => Some(l.generator),
            _ => None,
        }
    }
}

/// Finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupPresentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, AffineError> {
        for (i, g) in generators.iter().enumerate() {
            if !is_valid_name(g) {
                return Err(AffineError::Malformed(format!("invalid generator name {g:?}")));
            }
            if generators[..i].contains(g) {
                return Err(AffineError::Malformed(format!("duplicate generator {g:?}")));
            }
        }
        for r in &relators {
            if let Some(l) = r.0.iter().find(|l| l.generator >= generators.len()) {
                return Err(AffineError::UnknownGenerator(format!("#{}", l.generator)));
            }
        }
        Ok(Self {
            generators,
            relators,
        })
    }

    /// Builds a presentation whose relators are written in word syntax.
    pub fn parse(generators: &[&str], relators: &[&str]) -> Result<Self, AffineError> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let shell = Self::new(gens.clone(), Vec::new())?;
        let rels = relators
            .iter()
            .map(|r| shell.parse_word(r))
            .collect::<Result<_, _>>()?;
        Self::new(gens, rels)
    }

    /// Free group on the given generators.
    pub fn free(generators: &[&str]) -> Result<Self, AffineError> {
        Self::parse(generators, &[])
    }

    /// `⟨name | name^order⟩`
    pub fn cyclic(name: &str, order: usize) -> Self {
        let word = Word(vec![Letter::new(0, false); order]);
        Self::new(vec![name.to_string()], vec![word]).expect("valid cyclic presentation")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses whitespace-separated tokens `x` or `x^k` (any nonzero integer
    /// `k`). The empty string and `1` denote the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word, AffineError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| AffineError::Malformed(format!("bad exponent in {token:?}")))?;
                    (n, exp)
                }
                None => (token, 1),
            };
            let g = self
                .generator_index(name)
                .ok_or_else(|| AffineError::UnknownGenerator(name.to_string()))?;
            let letter = Letter::new(g, exp < 0);
            letters.extend(std::iter::repeat_n(letter, exp.unsigned_abs() as usize));
        }
        Ok(Word(letters))
    }

    pub fn display_word<'a>(&'a self, word: &'a Word) -> WordDisplay<'a> {
        WordDisplay {
            presentation: self,
            word,
        }
    }
}

fn is_valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Renders a word with runs collapsed, e.g. `a^2 b^-1`; the identity is `1`.
pub struct WordDisplay<'a> {
    presentation: &'a GroupPresentation,
    word: &'a Word,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.word.letters();
        if letters.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        let mut first = true;
        while i < letters.len() {
            let l = letters[i];
            let run = letters[i..].iter().take_while(|&&m| m == l).count();
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = &self.presentation.generators[l.generator];
            let exp = if l.inverse { -(run as i64) } else { run as i64 };
            if exp == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{exp}")?;
            }
            i += run;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let p = GroupPresentation::free(&["a", "b"]).unwrap();
        for text in ["1", "a", "a^2 b^-1", "b a^-3 b"] {
            let w = p.parse_word(text).unwrap();
            assert_eq!(p.display_word(&w).to_string(), text);
        }
        assert_eq!(p.parse_word("").unwrap(), Word::empty());
        assert_eq!(p.parse_word("a a").unwrap(), p.parse_word("a^2").unwrap());
    }

    #[test]
    fn unknown_generators_rejected() {
        let p = GroupPresentation::cyclic("a", 2);
        assert!(matches!(p.parse_word("b"), Err(AffineError::UnknownGenerator(_))));
        assert!(p.parse_word("a^x").is_err());
        assert!(GroupPresentation::parse(&["a"], &["a c"]).is_err());
        assert!(GroupPresentation::free(&["a", "a"]).is_err());
        assert!(GroupPresentation::free(&["2x"]).is_err());
    }

    #[test]
    fn word_inverse() {
        let p = GroupPresentation::free(&["a", "b"]).unwrap();
        let w = p.parse_word("a b^-1 b^-1").unwrap();
        assert_eq!(p.display_word(&w.inverse()).to_string(), "b^2 a^-1");
    }
}
