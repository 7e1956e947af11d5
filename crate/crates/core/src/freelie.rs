//! Lyndon bases of the bigraded components of the free Lie algebras.

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::hopf::is_primitive;
use crate::ncpoly::NCPoly;
use crate::qlinalg::{self, Echelon, SparseVec, WordIndex};
use crate::word::{words_of_bidegree, Alphabet, Bidegree, Word};

/// Linearly independent bihomogeneous elements spanning one component of a
/// named space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub space: String,
    pub alphabet: Alphabet,
    pub bidegree: Bidegree,
    pub elements: Vec<NCPoly>,
}

/// Serialized form used in golden files and CLI output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub space: String,
    pub m: u32,
    pub n: u32,
    pub dim: usize,
    pub basis: Vec<String>,
}

impl SubspaceBasis {
    pub fn new(
        space: impl Into<String>,
        alphabet: Alphabet,
        bidegree: Bidegree,
        elements: Vec<NCPoly>,
    ) -> SubspaceBasis {
        SubspaceBasis {
            space: space.into(),
            alphabet,
            bidegree,
            elements,
        }
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    /// Replaces the elements by the reduced echelon basis of their span.
    pub fn canonicalize(mut self) -> SubspaceBasis {
        self.elements = qlinalg::canonical_basis(self.alphabet, &self.elements);
        self
    }

    fn index_with(&self, extra: &[&NCPoly]) -> WordIndex {
        WordIndex::spanning(
            self.alphabet,
            self.elements.iter().chain(extra.iter().copied()),
        )
    }

    fn echelon_in(&self, idx: &WordIndex) -> Echelon {
        let mut e = Echelon::new(idx.len());
        for p in &self.elements {
            e.insert(&idx.coords(p).expect("index spans basis"));
        }
        e
    }

    /// Rank of the elements over word coordinates.
    pub fn rank(&self) -> usize {
        let idx = self.index_with(&[]);
        self.echelon_in(&idx).rank()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.dim()
    }

    pub fn contains(&self, p: &NCPoly) -> bool {
        if p.is_zero() {
            return true;
        }
        if p.alphabet() != self.alphabet {
            return false;
        }
        let idx = self.index_with(&[p]);
        self.echelon_in(&idx)
            .contains(&idx.coords(p).expect("index spans p"))
    }

    pub fn contains_span(&self, other: &SubspaceBasis) -> bool {
        other.elements.iter().all(|p| self.contains(p))
    }

    pub fn span_equal(&self, other: &SubspaceBasis) -> bool {
        if self.alphabet != other.alphabet && !(self.is_zero() && other.is_zero()) {
            return false;
        }
        let polys: Vec<&NCPoly> = other.elements.iter().collect();
        let idx = self.index_with(&polys);
        let a: Vec<SparseVec> = self
            .elements
            .iter()
            .map(|p| idx.coords(p).unwrap())
            .collect();
        let b: Vec<SparseVec> = other
            .elements
            .iter()
            .map(|p| idx.coords(p).unwrap())
            .collect();
        qlinalg::span_equal(&a, &b, idx.len())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.elements.iter().map(|p| p.to_string()).collect()
    }

    pub fn record(&self) -> BasisRecord {
        BasisRecord {
            space: self.space.clone(),
            m: self.bidegree.weight,
            n: self.bidegree.depth,
            dim: self.dim(),
            basis: self.to_strings(),
        }
    }
}

/// Lyndon test: strictly smaller than each proper suffix.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// All Lyndon words of the given bidegree in lexicographic order.
pub fn lyndon_words(alphabet: Alphabet, m: u32, n: u32) -> Vec<Word> {
    words_of_bidegree(alphabet, m, n)
        .into_iter()
        .filter(|w| is_lyndon(w.letters()))
        .collect()
}

/// Standard factorization `w = uv` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    (1..w.len())
        .find(|&i| is_lyndon(&w[i..]))
        .map(|i| w.split_at(i))
}

/// Standard bracketing `P(w)` of a Lyndon word.
pub fn lyndon_bracket(alphabet: Alphabet, w: &Word) -> NCPoly {
    let mut memo = FxHashMap::default();
    bracket_memo(alphabet, w.letters(), &mut memo)
}

fn bracket_memo(alphabet: Alphabet, w: &[u8], memo: &mut FxHashMap<Word, NCPoly>) -> NCPoly {
    if w.len() == 1 {
        return NCPoly::letter(alphabet, w[0]);
    }
    let key = Word::from_slice(w);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let (u, v) = standard_factorization(w).expect("length >= 2");
    let pu = bracket_memo(alphabet, u, memo);
    let pv = bracket_memo(alphabet, v, memo);
    let out = &(&pu * &pv) - &(&pv * &pu);
    memo.insert(key, out.clone());
    out
}

pub fn lie_space_name(alphabet: Alphabet) -> &'static str {
    match alphabet {
        Alphabet::X => "liex",
        Alphabet::Y => "liey",
        Alphabet::B => "lieb",
    }
}

/// Lyndon basis of the component of bidegree `(m, n)` of the free Lie
/// algebra on `alphabet`.
pub fn lie_basis(alphabet: Alphabet, m: u32, n: u32) -> SubspaceBasis {
    let mut memo = FxHashMap::default();
    let elements = lyndon_words(alphabet, m, n)
        .iter()
        .map(|w| bracket_memo(alphabet, w.letters(), &mut memo))
        .collect();
    SubspaceBasis::new(
        lie_space_name(alphabet),
        alphabet,
        Bidegree::new(m, n),
        elements,
    )
}

/// Membership in the free Lie algebra, decided by primitivity.
pub fn is_lie(p: &NCPoly) -> bool {
    is_primitive(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::reduced_coproduct;
    use crate::ncpoly::ad_power;
    use crate::parse::parse_poly;
    use crate::rational::Rat;

    fn p(s: &str) -> NCPoly {
        parse_poly(s, None).unwrap()
    }

    fn ws(a: Alphabet, v: &[&str]) -> Vec<Word> {
        v.iter()
            .map(|s| Word::parse(s, Some(a)).unwrap().1)
            .collect()
    }

    #[test]
    fn lyndon_examples() {
        assert_eq!(lyndon_words(Alphabet::X, 2, 1), ws(Alphabet::X, &["x0 x1"]));
        assert_eq!(lyndon_words(Alphabet::X, 1, 0), ws(Alphabet::X, &["x0"]));
        assert_eq!(
            lyndon_words(Alphabet::B, 3, 1),
            ws(Alphabet::B, &["b0 b0 b1", "b0 b2", "b3"])
        );
        assert!(!is_lyndon(&[0, 1, 0, 1]));
        assert!(is_lyndon(&[0, 0, 1, 0, 1]));
    }

    #[test]
    fn lie_basis_examples() {
        let x0 = p("x0");
        let x1 = p("x1");
        for m in 1..=8 {
            let b = lie_basis(Alphabet::X, m, 1);
            let expected = SubspaceBasis::new(
                "ad",
                Alphabet::X,
                Bidegree::new(m, 1),
                vec![ad_power(&x0, m as usize - 1, &x1)],
            );
            assert!(b.span_equal(&expected), "m={m}");
        }
        assert_eq!(lie_basis(Alphabet::X, 1, 0).elements, vec![x0]);
        assert!(is_lie(&ad_power(&p("x0"), 2, &p("x1"))));
        assert!(!is_lie(&p("x1 x0")));
        assert!(is_lie(&p("b1 b2 - b2 b1")));
    }

    /// Kernel of the reduced coproduct restricted to the word component.
    fn primitive_oracle(a: Alphabet, m: u32, n: u32) -> SubspaceBasis {
        let words = words_of_bidegree(a, m, n);
        let images: Vec<_> = words
            .iter()
            .map(|w| reduced_coproduct(&NCPoly::word(a, w.clone())))
            .collect();
        let ker = qlinalg::kernel_of_entries(
            words.len(),
            images.iter().enumerate().flat_map(|(j, t)| {
                t.terms()
                    .map(move |(u, v, c)| ((u.clone(), v.clone()), j, c.clone()))
            }),
        );
        let elements = ker
            .iter()
            .map(|v| NCPoly::from_terms(a, v.iter().map(|(k, c)| (words[*k].clone(), c.clone()))))
            .collect();
        SubspaceBasis::new("oracle", a, Bidegree::new(m, n), elements)
    }

    #[test]
    fn lie_basis_matches_primitive_kernel() {
        for a in [Alphabet::X, Alphabet::Y, Alphabet::B] {
            for m in 1..=7 {
                for n in 0..=m {
                    let b = lie_basis(a, m, n);
                    let o = primitive_oracle(a, m, n);
                    assert_eq!(b.dim(), o.dim(), "{a} ({m},{n})");
                    assert!(b.span_equal(&o), "{a} ({m},{n})");
                    assert!(b.is_independent());
                    for e in &b.elements {
                        assert!(is_lie(e));
                        assert_eq!(e.bidegree(), Some(Bidegree::new(m, n)));
                    }
                }
            }
        }
        // dimension at (6,3) over X from the oracle
        assert_eq!(primitive_oracle(Alphabet::X, 6, 3).dim(), 3);
        assert_eq!(lie_basis(Alphabet::X, 6, 3).dim(), 3);
    }

    #[test]
    fn lyndon_expansion_is_unitriangular() {
        for a in [Alphabet::X, Alphabet::B] {
            for m in 1..=7 {
                for n in 0..=m {
                    for w in lyndon_words(a, m, n) {
                        let e = lyndon_bracket(a, &w);
                        assert_eq!(e.coeff(&w), Rat::ONE);
                        // every other word is lexicographically larger
                        for u in e.words() {
                            assert!(u.letters() >= w.letters());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn word_counts_of_lie_x_by_weight() {
        // Necklace-polynomial counts for two letters.
        let expected = [2, 1, 2, 3, 6, 9, 18, 30];
        for (m, e) in (1..=8).zip(expected) {
            let total: usize = (0..=m).map(|n| lie_basis(Alphabet::X, m, n).dim()).sum();
            assert_eq!(total, e, "m={m}");
        }
    }
}
