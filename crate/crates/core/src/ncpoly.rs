//! Sparse noncommutative polynomials over the rationals.
//!
//! An [`NCPoly`] is a finite map from words to nonzero coefficients, tagged
//! with its alphabet. The arithmetic operators (`+`, `-`, `*` for
//! concatenation) panic on alphabet mismatch; the named methods
//! ([`NCPoly::concat_mul`], [`NCPoly::shuffle`], ...) return an error instead.

use std::collections::hash_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::rational::Rat;
use crate::word::{Alphabet, Bidegree, Word};

pub type TermMap = FxHashMap<Word, Rat>;

#[derive(Clone)]
pub struct NCPoly {
    alphabet: Alphabet,
    terms: TermMap,
}

/// Adds `c` to the coefficient of `w`, dropping the entry if it cancels.
#[inline]
pub(crate) fn accumulate(terms: &mut TermMap, w: Word, c: Rat) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

pub(crate) fn check_same(a: Alphabet, b: Alphabet) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            expected: a,
            found: b,
        })
    }
}

impl NCPoly {
    pub fn zero(alphabet: Alphabet) -> NCPoly {
        NCPoly {
            alphabet,
            terms: TermMap::default(),
        }
    }

    pub fn one(alphabet: Alphabet) -> NCPoly {
        NCPoly::monomial(alphabet, Word::empty(), Rat::ONE)
    }

    pub fn constant(alphabet: Alphabet, c: Rat) -> NCPoly {
        NCPoly::monomial(alphabet, Word::empty(), c)
    }

    pub fn word(alphabet: Alphabet, w: Word) -> NCPoly {
        NCPoly::monomial(alphabet, w, Rat::ONE)
    }

    pub fn from_letters(alphabet: Alphabet, letters: &[u8]) -> NCPoly {
        NCPoly::word(alphabet, Word::from_slice(letters))
    }

    pub fn letter(alphabet: Alphabet, index: u8) -> NCPoly {
        NCPoly::word(alphabet, Word::letter(index))
    }

    pub fn monomial(alphabet: Alphabet, w: Word, c: Rat) -> NCPoly {
        let mut p = NCPoly::zero(alphabet);
        p.add_term(w, c);
        p
    }

    pub fn from_terms(alphabet: Alphabet, terms: impl IntoIterator<Item = (Word, Rat)>) -> NCPoly {
        let mut p = NCPoly::zero(alphabet);
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub(crate) fn from_map(alphabet: Alphabet, terms: TermMap) -> NCPoly {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        NCPoly { alphabet, terms }
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    /// Terms in canonical (length-lexicographic) order.
    pub fn sorted_terms(&self) -> Vec<(&Word, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.canonical_cmp(b.0));
        v
    }

    pub fn add_term(&mut self, w: Word, c: Rat) {
        accumulate(&mut self.terms, w, c);
    }

    /// The coefficient `(p | w)`.
    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or(Rat::ZERO)
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Word::empty())
    }

    pub fn scale(&self, c: &Rat) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero(self.alphabet);
        }
        NCPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    pub fn weight_range(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys().map(|w| w.weight(self.alphabet));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    /// The common weight of all terms, if the polynomial is nonzero and
    /// weight-homogeneous.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        match self.weight_range() {
            Some((lo, hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }

    /// The common bidegree, if nonzero and bihomogeneous.
    pub fn bidegree(&self) -> Option<Bidegree> {
        let mut it = self.terms.keys().map(|w| w.bidegree(self.alphabet));
        let first = it.next()?;
        it.all(|b| b == first).then_some(first)
    }

    /// Splits into bihomogeneous components; no zero parts.
    pub fn bidegree_split(&self) -> BTreeMap<Bidegree, NCPoly> {
        let mut out: BTreeMap<Bidegree, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.bidegree(self.alphabet))
                .or_insert_with(|| NCPoly::zero(self.alphabet))
                .terms
                .insert(w.clone(), c.clone());
        }
        out
    }

    /// Keeps only the terms whose word satisfies `keep`.
    pub fn filter_words(&self, mut keep: impl FnMut(&Word) -> bool) -> NCPoly {
        NCPoly {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Linear extension of a word-to-polynomial map into `target`.
    pub fn map_linear(&self, target: Alphabet, mut f: impl FnMut(&Word) -> NCPoly) -> NCPoly {
        let mut out = TermMap::default();
        for (w, c) in &self.terms {
            let img = f(w);
            debug_assert!(img.is_zero() || img.alphabet == target);
            for (v, d) in img.terms {
                accumulate(&mut out, v, c * &d);
            }
        }
        NCPoly::from_map(target, out)
    }

    /// Linear extension of a word-to-(word, coefficient) map.
    pub fn map_words(
        &self,
        target: Alphabet,
        mut f: impl FnMut(&Word) -> Option<(Word, Rat)>,
    ) -> NCPoly {
        let mut out = TermMap::default();
        for (w, c) in &self.terms {
            if let Some((v, d)) = f(w) {
                accumulate(&mut out, v, c * &d);
            }
        }
        NCPoly::from_map(target, out)
    }

    /// Applies the derivation determined by its values on letters.
    ///
    /// `on_letter` is called at most once per distinct letter.
    pub fn apply_derivation(&self, mut on_letter: impl FnMut(u8) -> NCPoly) -> NCPoly {
        let mut cache: FxHashMap<u8, NCPoly> = FxHashMap::default();
        let mut out = TermMap::default();
        for (w, c) in &self.terms {
            let letters = w.letters();
            for (pos, &l) in letters.iter().enumerate() {
                let img = cache.entry(l).or_insert_with(|| on_letter(l));
                if img.is_zero() {
                    continue;
                }
                let (pre, rest) = letters.split_at(pos);
                let suf = &rest[1..];
                for (v, d) in &img.terms {
                    accumulate(&mut out, Word::splice(pre, v.letters(), suf), c * d);
                }
            }
        }
        NCPoly::from_map(self.alphabet, out)
    }

    /// Ordinary (concatenation) product.
    pub fn concat_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        check_same(self.alphabet, other.alphabet)?;
        Ok(self.concat_unchecked(other))
    }

    fn concat_unchecked(&self, other: &NCPoly) -> NCPoly {
        let mut out = TermMap::default();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                accumulate(&mut out, u.concat(v), a * b);
            }
        }
        NCPoly::from_map(self.alphabet, out)
    }

    /// `p * w` for a single word `w`.
    pub fn mul_word_right(&self, w: &Word) -> NCPoly {
        NCPoly {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (u.concat(w), c.clone()))
                .collect(),
        }
    }

    /// `w * p` for a single word `w`.
    pub fn mul_word_left(&self, w: &Word) -> NCPoly {
        NCPoly {
            alphabet: self.alphabet,
            terms: self
                .terms
                .iter()
                .map(|(u, c)| (w.concat(u), c.clone()))
                .collect(),
        }
    }

    /// Commutator `[p, q] = pq - qp`.
    pub fn commutator(&self, other: &NCPoly) -> Result<NCPoly> {
        check_same(self.alphabet, other.alphabet)?;
        Ok(&self.concat_unchecked(other) - &other.concat_unchecked(self))
    }

    /// Shuffle product; the same recursion serves X, Y and B.
    pub fn shuffle(&self, other: &NCPoly) -> Result<NCPoly> {
        check_same(self.alphabet, other.alphabet)?;
        Ok(self.bilinear(other, |u, v| quasi_shuffle_words(u, v, |_, _| None)))
    }

    /// Stuffle (quasi-shuffle) product on Y: colliding y_i, y_j add y_{i+j}.
    pub fn stuffle(&self, other: &NCPoly) -> Result<NCPoly> {
        require(self, Alphabet::Y, "stuffle")?;
        require(other, Alphabet::Y, "stuffle")?;
        Ok(self.bilinear(other, |u, v| {
            quasi_shuffle_words(u, v, |i, j| {
                Some(i.checked_add(j).expect("letter overflow"))
            })
        }))
    }

    /// Balanced quasi-shuffle on B: the merge term b_{i+j} needs i, j > 0.
    pub fn balanced_stuffle(&self, other: &NCPoly) -> Result<NCPoly> {
        require(self, Alphabet::B, "balanced_stuffle")?;
        require(other, Alphabet::B, "balanced_stuffle")?;
        Ok(self.bilinear(other, |u, v| {
            quasi_shuffle_words(u, v, |i, j| {
                (i > 0 && j > 0).then(|| i.checked_add(j).expect("letter overflow"))
            })
        }))
    }

    fn bilinear(&self, other: &NCPoly, f: impl Fn(&Word, &Word) -> TermMap) -> NCPoly {
        let mut out = TermMap::default();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                for (w, c) in f(u, v) {
                    accumulate(&mut out, w, &ab * &c);
                }
            }
        }
        NCPoly::from_map(self.alphabet, out)
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

pub(crate) fn require(p: &NCPoly, a: Alphabet, op: &'static str) -> Result<()> {
    if p.alphabet == a {
        Ok(())
    } else {
        Err(Error::WrongAlphabet {
            op,
            expected: match a {
                Alphabet::X => "X",
                Alphabet::Y => "Y",
                Alphabet::B => "B",
            },
            found: p.alphabet,
        })
    }
}

/// The quasi-shuffle of two words by the first-letter recursion
/// `au * bv = a(u * bv) + b(au * v) + merge(a,b)(u * v)`.
///
/// `merge(a, b) = None` means no merge term (plain shuffle). Intermediate
/// results for every pair of suffixes are tabulated, so each suffix pair is
/// expanded once.
pub fn quasi_shuffle_words(u: &Word, v: &Word, merge: impl Fn(u8, u8) -> Option<u8>) -> TermMap {
    let (a, b) = (u.len(), v.len());
    let cols = b + 1;
    let mut table: Vec<TermMap> = vec![TermMap::default(); (a + 1) * cols];
    let idx = |i: usize, j: usize| i * cols + j;
    for i in (0..=a).rev() {
        for j in (0..=b).rev() {
            let cell = if i == a {
                let mut m = TermMap::default();
                m.insert(Word::from_slice(&v.letters()[j..]), Rat::ONE);
                m
            } else if j == b {
                let mut m = TermMap::default();
                m.insert(Word::from_slice(&u.letters()[i..]), Rat::ONE);
                m
            } else {
                let mut m = TermMap::default();
                let x = u.letters()[i];
                let y = v.letters()[j];
                prepend_into(&mut m, x, &table[idx(i + 1, j)]);
                prepend_into(&mut m, y, &table[idx(i, j + 1)]);
                if let Some(z) = merge(x, y) {
                    prepend_into(&mut m, z, &table[idx(i + 1, j + 1)]);
                }
                m
            };
            table[idx(i, j)] = cell;
        }
    }
    std::mem::take(&mut table[0])
}

fn prepend_into(out: &mut TermMap, letter: u8, src: &TermMap) {
    for (w, c) in src {
        let mut nw = Word::empty();
        nw.0.reserve(w.len() + 1);
        nw.push(letter);
        nw.0.extend_from_slice(w.letters());
        accumulate(out, nw, c.clone());
    }
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.terms == other.terms
    }
}

impl Eq for NCPoly {}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]({})", self.alphabet, self)
    }
}

impl fmt::Display for NCPoly {
    /// Canonical syntax: `c1*w1 + c2*w2`, unit coefficients omitted, empty
    /// word written as its coefficient, zero as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if w.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", w.display(self.alphabet))?;
            } else {
                write!(f, "{a}*{}", w.display(self.alphabet))?;
            }
        }
        Ok(())
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(mut self, rhs: NCPoly) -> NCPoly {
        self += &rhs;
        self
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(mut self, rhs: NCPoly) -> NCPoly {
        self -= &rhs;
        self
    }
}

impl AddAssign<&NCPoly> for NCPoly {
    fn add_assign(&mut self, rhs: &NCPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            self.alphabet = rhs.alphabet;
        }
        assert_eq!(self.alphabet, rhs.alphabet, "alphabet mismatch in +");
        for (w, c) in &rhs.terms {
            accumulate(&mut self.terms, w.clone(), c.clone());
        }
    }
}

impl SubAssign<&NCPoly> for NCPoly {
    fn sub_assign(&mut self, rhs: &NCPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            self.alphabet = rhs.alphabet;
        }
        assert_eq!(self.alphabet, rhs.alphabet, "alphabet mismatch in -");
        for (w, c) in &rhs.terms {
            accumulate(&mut self.terms, w.clone(), -c);
        }
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&Rat::from_int(-1))
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        (&self).neg()
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        assert_eq!(self.alphabet, rhs.alphabet, "alphabet mismatch in *");
        self.concat_unchecked(rhs)
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: NCPoly) -> NCPoly {
        &self * &rhs
    }
}

/// Iterated adjoint `ad_a^k(b)`.
pub fn ad_power(a: &NCPoly, k: usize, b: &NCPoly) -> NCPoly {
    let mut out = b.clone();
    for _ in 0..k {
        out = &(a * &out) - &(&out * a);
    }
    out
}
