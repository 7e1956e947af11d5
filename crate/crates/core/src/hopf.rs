//! Deconcatenation-dual coproducts, antipodes and the reversal `R_Y`.
//!
//! All three alphabets carry the same coproduct: each letter is primitive,
//! so a word maps to the sum over all ways of splitting its letters into a
//! left and a right subsequence (the unshuffle).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rustc_hash::FxHashMap;

use crate::error::Result;
use crate::ncpoly::{check_same, require, NCPoly};
use crate::rational::Rat;
use crate::word::{Alphabet, Word};

/// A finite rational combination of ordered word pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor2 {
    alphabet: Alphabet,
    terms: FxHashMap<(Word, Word), Rat>,
}

fn acc2(terms: &mut FxHashMap<(Word, Word), Rat>, key: (Word, Word), c: Rat) {
    use std::collections::hash_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(key) {
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

impl Tensor2 {
    pub fn zero(alphabet: Alphabet) -> Tensor2 {
        Tensor2 {
            alphabet,
            terms: FxHashMap::default(),
        }
    }

    /// `p ⊗ q`.
    pub fn tensor(p: &NCPoly, q: &NCPoly) -> Tensor2 {
        let mut t = Tensor2::zero(p.alphabet());
        for (u, a) in p.terms() {
            for (v, b) in q.terms() {
                t.add_term(u.clone(), v.clone(), a * b);
            }
        }
        t
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: Rat) {
        acc2(&mut self.terms, (u, v), c);
    }

    pub fn coeff(&self, u: &Word, v: &Word) -> Rat {
        self.terms
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or(Rat::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Rat)> {
        self.terms.iter().map(|((u, v), c)| (u, v, c))
    }

    /// Terms ordered by left word, then right word (both canonical).
    pub fn sorted_terms(&self) -> Vec<(&Word, &Word, &Rat)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| a.0.canonical_cmp(b.0).then_with(|| a.1.canonical_cmp(b.1)));
        v
    }

    pub fn scale(&self, c: &Rat) -> Tensor2 {
        let mut out = Tensor2::zero(self.alphabet);
        for (u, v, x) in self.terms() {
            out.add_term(u.clone(), v.clone(), x * c);
        }
        out
    }

    /// `(f ⊗ g)` applied termwise; `f`, `g` are linear maps given on words.
    pub fn map(
        &self,
        target: Alphabet,
        mut f: impl FnMut(&Word) -> NCPoly,
        mut g: impl FnMut(&Word) -> NCPoly,
    ) -> Tensor2 {
        let mut out = Tensor2::zero(target);
        for (u, v, c) in self.terms() {
            let (fu, gv) = (f(u), g(v));
            for (a, x) in fu.terms() {
                for (b, y) in gv.terms() {
                    out.add_term(a.clone(), b.clone(), &(c * x) * y);
                }
            }
        }
        out
    }

    /// Multiplication in the tensor square of the concatenation algebra.
    pub fn concat_mul(&self, other: &Tensor2) -> Result<Tensor2> {
        check_same(self.alphabet, other.alphabet)?;
        let mut out = Tensor2::zero(self.alphabet);
        for (u1, v1, a) in self.terms() {
            for (u2, v2, b) in other.terms() {
                out.add_term(u1.concat(u2), v1.concat(v2), a * b);
            }
        }
        Ok(out)
    }

    /// One `(w1 | w2) : c` string per term, in canonical order.
    pub fn to_lines(&self) -> Vec<String> {
        self.sorted_terms()
            .into_iter()
            .map(|(u, v, c)| {
                format!(
                    "({} | {}) : {}",
                    u.display(self.alphabet),
                    v.display(self.alphabet),
                    c
                )
            })
            .collect()
    }
}

impl fmt::Display for Tensor2 {
    /// One `(w1 | w2) : c` line per term; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        f.write_str(&self.to_lines().join("\n"))
    }
}

impl fmt::Debug for Tensor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Tensor2[{}]{{{}}}",
            self.alphabet,
            self.to_lines().join("; ")
        )
    }
}

impl Add<&Tensor2> for &Tensor2 {
    type Output = Tensor2;
    fn add(self, rhs: &Tensor2) -> Tensor2 {
        let mut out = self.clone();
        if out.is_zero() {
            out.alphabet = rhs.alphabet;
        }
        for (u, v, c) in rhs.terms() {
            out.add_term(u.clone(), v.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Tensor2> for &Tensor2 {
    type Output = Tensor2;
    fn sub(self, rhs: &Tensor2) -> Tensor2 {
        self + &(-rhs)
    }
}

impl Neg for &Tensor2 {
    type Output = Tensor2;
    fn neg(self) -> Tensor2 {
        self.scale(&Rat::from_int(-1))
    }
}

impl Mul<&Tensor2> for &Tensor2 {
    type Output = Tensor2;
    fn mul(self, rhs: &Tensor2) -> Tensor2 {
        self.concat_mul(rhs)
            .expect("alphabet mismatch in tensor product")
    }
}

/// Unshuffle coproduct of a single word, optionally without the two
/// trivial splits.
fn unshuffle_into(w: &Word, c: &Rat, reduced: bool, out: &mut Tensor2) {
    let r = w.len();
    assert!(r < 32, "word too long for coproduct");
    let full: u32 = if r == 0 { 0 } else { (1u32 << r) - 1 };
    let letters = w.letters();
    for mask in 0..=full {
        if reduced && (mask == 0 || mask == full) {
            continue;
        }
        let mut left = Word::empty();
        let mut right = Word::empty();
        for (k, &l) in letters.iter().enumerate() {
            if mask & (1 << k) != 0 {
                left.push(l);
            } else {
                right.push(l);
            }
        }
        out.add_term(left, right, c.clone());
    }
}

/// The coproduct Δ for the alphabet of `p` (Δ_X, Δ_Y or Δ_B).
pub fn coproduct(p: &NCPoly) -> Tensor2 {
    let mut out = Tensor2::zero(p.alphabet());
    for (w, c) in p.terms() {
        unshuffle_into(w, c, false, &mut out);
    }
    out
}

/// `Δ(p) − p⊗1 − 1⊗p`, computed directly. The constant term contributes
/// `−c·1⊗1`, so it only vanishes on primitives.
pub fn reduced_coproduct(p: &NCPoly) -> Tensor2 {
    let mut out = Tensor2::zero(p.alphabet());
    for (w, c) in p.terms() {
        if w.is_empty() {
            out.add_term(Word::empty(), Word::empty(), -c);
        } else {
            unshuffle_into(w, c, true, &mut out);
        }
    }
    out
}

pub fn is_primitive(p: &NCPoly) -> bool {
    reduced_coproduct(p).is_zero()
}

fn signed_reversal(p: &NCPoly) -> NCPoly {
    p.map_words(p.alphabet(), |w| {
        Some((w.reversed(), Rat::sign(w.len() as i64)))
    })
}

/// The antipode `S_X`: `s1⋯sr ↦ (−1)^r sr⋯s1`.
pub fn antipode_x(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::X, "antipode_X")?;
    Ok(signed_reversal(p))
}

/// The antipode `S` of the B-word algebra.
pub fn antipode_b(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::B, "antipode_B")?;
    Ok(signed_reversal(p))
}

/// The antipode for whichever alphabet `p` is over.
pub fn antipode(p: &NCPoly) -> NCPoly {
    signed_reversal(p)
}

/// `R_Y`: reversal of Y-words, no sign.
pub fn reverse_y(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::Y, "reverse_Y")?;
    Ok(p.map_words(Alphabet::Y, |w| Some((w.reversed(), Rat::ONE))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::word::words_up_to_weight;
    use proptest::prelude::*;

    fn p(s: &str) -> NCPoly {
        parse_poly(s, None).unwrap()
    }

    fn w(a: Alphabet, s: &str) -> Word {
        Word::parse(s, Some(a)).unwrap().1
    }

    #[test]
    fn coproduct_examples() {
        let x = Alphabet::X;
        let d = coproduct(&p("x0"));
        assert_eq!(d.len(), 2);
        assert_eq!(d.coeff(&w(x, "x0"), &Word::empty()), Rat::ONE);
        assert_eq!(d.coeff(&Word::empty(), &w(x, "x0")), Rat::ONE);

        let d = coproduct(&p("x0 x1"));
        assert_eq!(d.len(), 4);
        for (l, r) in [("x0 x1", "1"), ("x0", "x1"), ("x1", "x0"), ("1", "x0 x1")] {
            assert_eq!(d.coeff(&w(x, l), &w(x, r)), Rat::ONE, "{l} | {r}");
        }

        let d = coproduct(&NCPoly::one(Alphabet::Y));
        assert_eq!(d.to_string(), "(1 | 1) : 1");
    }

    #[test]
    fn primitivity_examples() {
        assert!(is_primitive(&p("[x0, x1]")));
        assert!(!is_primitive(&p("x0 x1")));
        assert!(is_primitive(&p("y7")));
        assert!(!is_primitive(&NCPoly::one(Alphabet::B)));
        assert!(is_primitive(&NCPoly::zero(Alphabet::B)));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode_x(&p("x0 x1")).unwrap(), p("x1 x0"));
        assert_eq!(antipode_x(&p("x1")).unwrap(), p("-x1"));
        assert_eq!(antipode_x(&p("[x0, x1]")).unwrap(), p("-[x0, x1]"));
        assert_eq!(antipode_b(&p("b0 b2")).unwrap(), p("b2 b0"));
        assert_eq!(antipode_b(&p("b3")).unwrap(), p("-b3"));
        let one = NCPoly::one(Alphabet::B);
        assert_eq!(antipode_b(&one).unwrap(), one);
        assert!(antipode_x(&p("b1")).is_err());
        assert!(antipode_b(&p("x1")).is_err());
    }

    #[test]
    fn reverse_y_examples() {
        assert_eq!(reverse_y(&p("y1 y3")).unwrap(), p("y3 y1"));
        assert_eq!(reverse_y(&p("y2")).unwrap(), p("y2"));
        let q = p("y1 y2 y4");
        assert_eq!(reverse_y(&reverse_y(&q).unwrap()).unwrap(), q);
        assert!(reverse_y(&p("x1")).is_err());
    }

    /// Coproduct applied to one tensor factor, producing word triples.
    fn triple(t: &Tensor2, left: bool) -> FxHashMap<(Word, Word, Word), Rat> {
        let mut out: FxHashMap<(Word, Word, Word), Rat> = FxHashMap::default();
        for (u, v, c) in t.terms() {
            let src = if left { u } else { v };
            let d = coproduct(&NCPoly::word(t.alphabet(), src.clone()));
            for (a, b, e) in d.terms() {
                let key = if left {
                    (a.clone(), b.clone(), v.clone())
                } else {
                    (u.clone(), a.clone(), b.clone())
                };
                let slot = out.entry(key).or_insert(Rat::ZERO);
                *slot += &(c * e);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    #[test]
    fn coassociative_up_to_weight_6() {
        for a in [Alphabet::X, Alphabet::Y, Alphabet::B] {
            for word in words_up_to_weight(a, 6) {
                let d = coproduct(&NCPoly::word(a, word));
                assert_eq!(triple(&d, true), triple(&d, false));
            }
        }
    }

    #[test]
    fn counit_laws() {
        for word in words_up_to_weight(Alphabet::B, 5) {
            let d = coproduct(&NCPoly::word(Alphabet::B, word.clone()));
            assert_eq!(d.coeff(&word, &Word::empty()), Rat::ONE);
            assert_eq!(d.coeff(&Word::empty(), &word), Rat::ONE);
        }
    }

    #[test]
    fn coproduct_is_dual_to_shuffle() {
        let a = Alphabet::X;
        for word in words_up_to_weight(a, 6) {
            let d = coproduct(&NCPoly::word(a, word.clone()));
            for lu in 0..=word.len() as u32 {
                for u in crate::word::words_of_weight(a, lu) {
                    for v in crate::word::words_of_weight(a, word.len() as u32 - lu) {
                        let sh = NCPoly::word(a, u.clone())
                            .shuffle(&NCPoly::word(a, v.clone()))
                            .unwrap();
                        assert_eq!(sh.coeff(&word), d.coeff(&u, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn reversal_commutes_with_coproduct() {
        let a = Alphabet::Y;
        let rev = |x: &Word| NCPoly::word(a, x.reversed());
        for word in words_up_to_weight(a, 6) {
            let q = NCPoly::word(a, word);
            let lhs = coproduct(&reverse_y(&q).unwrap());
            let rhs = coproduct(&q).map(a, rev, rev);
            assert_eq!(lhs, rhs);
        }
    }

    fn arb_word(a: Alphabet) -> impl Strategy<Value = Word> {
        let letter = match a {
            Alphabet::X => (0u8..=1).boxed(),
            Alphabet::Y => (1u8..=3).boxed(),
            Alphabet::B => (0u8..=3).boxed(),
        };
        proptest::collection::vec(letter, 0..=4).prop_map(|v| Word::from_slice(&v))
    }

    fn arb_pair() -> impl Strategy<Value = (Alphabet, Word, Word)> {
        prop_oneof![Just(Alphabet::X), Just(Alphabet::Y), Just(Alphabet::B)]
            .prop_flat_map(|a| (Just(a), arb_word(a), arb_word(a)))
    }

    proptest! {
        #[test]
        fn coproduct_is_multiplicative((a, u, v) in arb_pair()) {
            prop_assume!(u.weight(a) + v.weight(a) <= 8);
            let (pu, pv) = (NCPoly::word(a, u), NCPoly::word(a, v));
            let lhs = coproduct(&(&pu * &pv));
            let rhs = &coproduct(&pu) * &coproduct(&pv);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
