//! Fixtures shared by the benchmarks.

use dsl_core::freelie::lie_basis;
use dsl_core::stabilizers::ls_basis;
use dsl_core::{Alphabet, NCPoly, Word};

/// Sum of all words of weight `m` over `alphabet`, every coefficient 1.
pub fn all_words(alphabet: Alphabet, m: u32) -> NCPoly {
    let mut p = NCPoly::zero(alphabet);
    for w in dsl_core::word::words_of_weight(alphabet, m) {
        p.add_term(w, dsl_core::Rat::ONE);
    }
    p
}

/// A Lie element of weight `m` and depth `n` (the sum of the Lyndon basis).
pub fn lie_element(alphabet: Alphabet, m: u32, n: u32) -> NCPoly {
    let mut p = NCPoly::zero(alphabet);
    for e in lie_basis(alphabet, m, n).elements {
        p += &e;
    }
    p
}

/// The depth-one `ls` generator of odd weight `m`.
pub fn ls_generator(m: u32) -> NCPoly {
    ls_basis(m, 1)
        .elements
        .into_iter()
        .next()
        .expect("odd weight >= 3")
}

pub fn word(alphabet: Alphabet, letters: &[u8]) -> NCPoly {
    NCPoly::word(alphabet, Word::from_slice(letters))
}
