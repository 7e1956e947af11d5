//! Alphabets, letters and words.
//!
//! A [`Word`] only stores letter indices; the alphabet lives on the
//! containing polynomial. Index conventions: `X` uses 0/1 for x0/x1, `Y` uses
//! `n >= 1` for y_n and `B` uses `i >= 0` for b_i.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Alphabet {
    X,
    Y,
    B,
}

impl Alphabet {
    pub fn prefix(self) -> char {
        match self {
            Alphabet::X => 'x',
            Alphabet::Y => 'y',
            Alphabet::B => 'b',
        }
    }

    pub fn from_prefix(c: char) -> Option<Alphabet> {
        match c {
            'x' => Some(Alphabet::X),
            'y' => Some(Alphabet::Y),
            'b' => Some(Alphabet::B),
            _ => None,
        }
    }

    pub fn is_valid_index(self, index: u8) -> bool {
        match self {
            Alphabet::X => index <= 1,
            Alphabet::Y => index >= 1,
            Alphabet::B => true,
        }
    }

    pub fn letter_weight(self, index: u8) -> u32 {
        match self {
            Alphabet::X => 1,
            Alphabet::Y => index as u32,
            Alphabet::B => (index as u32).max(1),
        }
    }

    pub fn letter_depth(self, index: u8) -> u32 {
        match self {
            Alphabet::X => index as u32,
            Alphabet::Y => 1,
            Alphabet::B => (index > 0) as u32,
        }
    }

    /// Letters that can occur in a word of weight `max_weight`, in the fixed
    /// letter order (x0 < x1, y1 < y2 < ..., b0 < b1 < ...).
    pub fn letters_up_to_weight(self, max_weight: u32) -> Vec<u8> {
        match self {
            Alphabet::X => vec![0, 1],
            Alphabet::Y => (1..=max_weight.min(255) as u8).collect(),
            Alphabet::B => {
                let mut v = vec![0];
                v.extend(1..=max_weight.min(255) as u8);
                v
            }
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Alphabet::X => "X",
            Alphabet::Y => "Y",
            Alphabet::B => "B",
        };
        f.write_str(s)
    }
}

/// A single letter with its alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub alphabet: Alphabet,
    pub index: u8,
}

impl Letter {
    pub fn new(alphabet: Alphabet, index: u8) -> Result<Letter> {
        if alphabet.is_valid_index(index) {
            Ok(Letter { alphabet, index })
        } else {
            Err(Error::Parse(format!(
                "invalid letter {}{index}",
                alphabet.prefix()
            )))
        }
    }

    pub fn weight(&self) -> u32 {
        self.alphabet.letter_weight(self.index)
    }

    pub fn depth(&self) -> u32 {
        self.alphabet.letter_depth(self.index)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.alphabet.prefix(), self.index)
    }
}

/// Weight and depth of a homogeneous component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub weight: u32,
    pub depth: u32,
}

impl Bidegree {
    pub fn new(weight: u32, depth: u32) -> Bidegree {
        Bidegree { weight, depth }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.weight, self.depth)
    }
}

/// A word as a sequence of letter indices.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub SmallVec<[u8; 20]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn from_slice(letters: &[u8]) -> Word {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letter(index: u8) -> Word {
        let mut v = SmallVec::new();
        v.push(index);
        Word(v)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<u8> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u8> {
        self.0.last().copied()
    }

    pub fn weight(&self, alphabet: Alphabet) -> u32 {
        self.0.iter().map(|&i| alphabet.letter_weight(i)).sum()
    }

    pub fn depth(&self, alphabet: Alphabet) -> u32 {
        self.0.iter().map(|&i| alphabet.letter_depth(i)).sum()
    }

    pub fn bidegree(&self, alphabet: Alphabet) -> Bidegree {
        Bidegree::new(self.weight(alphabet), self.depth(alphabet))
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = SmallVec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `prefix · middle · suffix` without intermediate allocation.
    pub fn splice(prefix: &[u8], middle: &[u8], suffix: &[u8]) -> Word {
        let mut v = SmallVec::with_capacity(prefix.len() + middle.len() + suffix.len());
        v.extend_from_slice(prefix);
        v.extend_from_slice(middle);
        v.extend_from_slice(suffix);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn push(&mut self, index: u8) {
        self.0.push(index);
    }

    /// Length-lexicographic order used for canonical serialization.
    pub fn canonical_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }

    pub fn display(&self, alphabet: Alphabet) -> WordDisplay<'_> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }

    /// Parses `x0 x1`, `y3`, `b0 b2`; `1` is the empty word. The alphabet is
    /// checked against `alphabet` when given, otherwise inferred (the empty
    /// word then needs a hint).
    pub fn parse(s: &str, alphabet: Option<Alphabet>) -> Result<(Alphabet, Word)> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            let a = alphabet
                .ok_or_else(|| Error::Parse("cannot infer alphabet of the empty word".into()))?;
            return Ok((a, Word::empty()));
        }
        let mut found = alphabet;
        let mut word = Word::empty();
        for tok in s.split_whitespace() {
            let mut chars = tok.chars();
            let a = chars
                .next()
                .and_then(Alphabet::from_prefix)
                .ok_or_else(|| Error::Parse(format!("invalid letter `{tok}`")))?;
            let idx: u8 = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid letter `{tok}`")))?;
            match found {
                Some(f) if f != a => {
                    return Err(Error::AlphabetMismatch {
                        expected: f,
                        found: a,
                    })
                }
                _ => found = Some(a),
            }
            Letter::new(a, idx)?;
            word.push(idx);
        }
        Ok((found.expect("non-empty word"), word))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        let p = self.alphabet.prefix();
        for (k, i) in self.word.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}{i}")?;
        }
        Ok(())
    }
}

/// All words of the given bidegree, in lexicographic order.
pub fn words_of_bidegree(alphabet: Alphabet, weight: u32, depth: u32) -> Vec<Word> {
    let letters = alphabet.letters_up_to_weight(weight);
    let mut out = Vec::new();
    let mut cur = Word::empty();
    fn rec(
        alphabet: Alphabet,
        letters: &[u8],
        w: u32,
        d: u32,
        cur: &mut Word,
        out: &mut Vec<Word>,
    ) {
        if w == 0 {
            if d == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for &l in letters {
            let lw = alphabet.letter_weight(l);
            let ld = alphabet.letter_depth(l);
            if lw <= w && ld <= d {
                cur.push(l);
                rec(alphabet, letters, w - lw, d - ld, cur, out);
                cur.0.pop();
            }
        }
    }
    rec(alphabet, &letters, weight, depth, &mut cur, &mut out);
    out
}

/// All words of the given weight (any depth), in lexicographic order.
pub fn words_of_weight(alphabet: Alphabet, weight: u32) -> Vec<Word> {
    let mut out: Vec<Word> = (0..=weight)
        .flat_map(|d| words_of_bidegree(alphabet, weight, d))
        .collect();
    out.sort();
    out
}

/// All words of weight at most `max_weight`, including the empty word.
pub fn words_up_to_weight(alphabet: Alphabet, max_weight: u32) -> Vec<Word> {
    (0..=max_weight)
        .flat_map(|w| words_of_weight(alphabet, w))
        .collect()
}
