//! The spaces `ls` and `lq`, cut out of the free Lie algebras by their
//! defining linear conditions, and direct membership tests.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::freelie::{lie_basis, SubspaceBasis};
use crate::hopf::{is_primitive, reduced_coproduct};
use crate::ncpoly::NCPoly;
use crate::qlinalg::{combine, kernel_of_entries};
use crate::rational::Rat;
use crate::word::{Alphabet, Bidegree, Word};
use crate::wordmaps::{proj_pi0, proj_piy, tau};

/// The named bigraded spaces the workbench can tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    LieX,
    LieB,
    Ls,
    Lq,
    StabX,
    StabB,
}

impl Space {
    pub const ALL: [Space; 6] = [
        Space::LieX,
        Space::LieB,
        Space::Ls,
        Space::Lq,
        Space::StabX,
        Space::StabB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Space::LieX => "liex",
            Space::LieB => "lieb",
            Space::Ls => "ls",
            Space::Lq => "lq",
            Space::StabX => "stabx",
            Space::StabB => "stabb",
        }
    }

    pub fn alphabet(self) -> Alphabet {
        match self {
            Space::LieX | Space::Ls | Space::StabX => Alphabet::X,
            Space::LieB | Space::Lq | Space::StabB => Alphabet::B,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Space> {
        Space::ALL
            .into_iter()
            .find(|sp| sp.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown space `{s}`")))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key {
    Coeff(Word),
    Pair(Word, Word),
}

/// `x0^{m-1} x1`.
fn depth_one_x(m: u32) -> Word {
    let mut w = Word::empty();
    for _ in 1..m {
        w.push(0);
    }
    w.push(1);
    w
}

/// Linear functionals cutting `ls` out of `Lie(X)[m,n]`.
fn ls_constraints(psi: &NCPoly, m: u32, n: u32) -> Vec<(Key, Rat)> {
    let mut out = Vec::new();
    if m == 1 {
        for i in 0..=1u8 {
            out.push((Key::Coeff(Word::letter(i)), psi.coeff(&Word::letter(i))));
        }
    }
    let py = proj_piy(psi).expect("X input");
    for (u, v, c) in reduced_coproduct(&py).terms() {
        out.push((Key::Pair(u.clone(), v.clone()), c.clone()));
    }
    if n == 1 && m >= 2 && m.is_multiple_of(2) {
        let w = depth_one_x(m);
        out.push((Key::Coeff(w.clone()), psi.coeff(&w)));
    }
    out
}

/// `b0^a b_k` words of weight `m` (`a + k = m`, `k ≥ 1`).
fn depth_one_b(m: u32) -> impl Iterator<Item = Word> {
    (0..m).map(move |a| {
        let mut w = Word::empty();
        for _ in 0..a {
            w.push(0);
        }
        w.push((m - a) as u8);
        w
    })
}

/// Linear functionals cutting `lq` out of `Lie(B)[m,n]`.
fn lq_constraints(psi: &NCPoly, m: u32, n: u32) -> Vec<(Key, Rat)> {
    let mut out = Vec::new();
    if m == 1 {
        out.push((Key::Coeff(Word::letter(0)), psi.coeff(&Word::letter(0))));
    }
    let p0 = proj_pi0(psi).expect("B input");
    let diff = &tau(&p0).expect("pi0 output has no trailing b0") - &p0;
    for (w, c) in diff.terms() {
        out.push((Key::Coeff(w.clone()), c.clone()));
    }
    if n == 1 && m.is_multiple_of(2) {
        for w in depth_one_b(m) {
            let c = psi.coeff(&w);
            out.push((Key::Coeff(w), c));
        }
    }
    out
}

fn cut(
    space: &str,
    lie: SubspaceBasis,
    constraints: impl Fn(&NCPoly) -> Vec<(Key, Rat)>,
) -> SubspaceBasis {
    let entries = lie
        .elements
        .iter()
        .enumerate()
        .flat_map(|(j, e)| constraints(e).into_iter().map(move |(k, c)| (k, j, c)))
        .collect::<Vec<_>>();
    let ker = kernel_of_entries(lie.dim(), entries);
    let elements = ker
        .iter()
        .map(|v| combine(lie.alphabet, &lie.elements, v))
        .collect();
    SubspaceBasis::new(space, lie.alphabet, lie.bidegree, elements).canonicalize()
}

/// Basis of `ls[m,n]`, solved inside Lyndon coordinates of `Lie(X)[m,n]`.
pub fn ls_basis(m: u32, n: u32) -> SubspaceBasis {
    cut("ls", lie_basis(Alphabet::X, m, n), |e| {
        ls_constraints(e, m, n)
    })
}

/// Basis of `lq[m,n]`, solved inside Lyndon coordinates of `Lie(B)[m,n]`.
pub fn lq_basis(m: u32, n: u32) -> SubspaceBasis {
    cut("lq", lie_basis(Alphabet::B, m, n), |e| {
        lq_constraints(e, m, n)
    })
}

/// The conditions defining `ls` that `psi` violates, evaluated directly on
/// `psi` (which need not be homogeneous). Empty means `psi ∈ ls`.
pub fn ls_violations(psi: &NCPoly) -> Vec<&'static str> {
    let mut out = Vec::new();
    if psi.alphabet() != Alphabet::X {
        return if psi.is_zero() { out } else { vec!["alphabet"] };
    }
    if !psi.coeff(&Word::letter(0)).is_zero() || !psi.coeff(&Word::letter(1)).is_zero() {
        out.push("(i) weight-one coefficients");
    }
    if !is_primitive(psi) {
        out.push("(ii) primitive for the X coproduct");
    }
    if !is_primitive(&proj_piy(psi).expect("X input")) {
        out.push("(iii) pi_Y part primitive for the Y coproduct");
    }
    let bad_iv = psi.words().any(|w| {
        let m = w.len() as u32;
        m >= 2 && m.is_multiple_of(2) && *w == depth_one_x(m)
    });
    if bad_iv {
        out.push("(iv) even depth-one coefficient");
    }
    out
}

pub fn in_ls(psi: &NCPoly) -> bool {
    ls_violations(psi).is_empty()
}

/// The conditions defining `lq` that `psi` violates. Empty means `psi ∈ lq`.
pub fn lq_violations(psi: &NCPoly) -> Vec<&'static str> {
    let mut out = Vec::new();
    if psi.alphabet() != Alphabet::B {
        return if psi.is_zero() { out } else { vec!["alphabet"] };
    }
    if !psi.coeff(&Word::letter(0)).is_zero() {
        out.push("(i) coefficient of b0");
    }
    if !is_primitive(psi) {
        out.push("(ii) primitive for the B coproduct");
    }
    let p0 = proj_pi0(psi).expect("B input");
    if tau(&p0).expect("no trailing b0") != p0 {
        out.push("(iii) pi_0 part fixed by tau");
    }
    let bad_iv = psi.words().any(|w| {
        let l = w.letters();
        match l.split_last() {
            Some((&k, head)) => {
                k != 0 && head.iter().all(|&x| x == 0) && w.weight(Alphabet::B) % 2 == 0
            }
            None => false,
        }
    });
    if bad_iv {
        out.push("(iv) even depth-one coefficient");
    }
    out
}

pub fn in_lq(psi: &NCPoly) -> bool {
    lq_violations(psi).is_empty()
}

/// `ls[m,n]` plus the weight-one lines `Q x0`, `Q x1`.
pub fn ls_plus_weight_one(m: u32, n: u32) -> SubspaceBasis {
    let mut b = ls_basis(m, n);
    if m == 1 {
        b.elements.push(NCPoly::letter(Alphabet::X, n as u8));
    }
    b.space = "ls+".into();
    b.canonicalize()
}

/// `lq[m,n]` plus the line `Q b0` at `(1,0)`.
pub fn lq_plus_b0(m: u32, n: u32) -> SubspaceBasis {
    let mut b = lq_basis(m, n);
    if (m, n) == (1, 0) {
        b.elements.push(NCPoly::letter(Alphabet::B, 0));
    }
    b.space = "lq+".into();
    b.canonicalize()
}

pub(crate) fn bidegrees(max_weight: u32) -> Vec<Bidegree> {
    (1..=max_weight)
        .flat_map(|m| (0..=m).map(move |n| Bidegree::new(m, n)))
        .collect()
}
