//! Linear maps between the word algebras: `i_Y`, `π_Y`, `π₀`, `γ₀`, `γ_n`,
//! the two sections `sec`, the involution `τ`, `S₀` and `ρ`, plus the index
//! substitutions `w(l)` and `w(n̄)` on B-words.

use crate::error::{Error, Result};
use crate::hopf::antipode;
use crate::ncpoly::{require, NCPoly};
use crate::rational::Rat;
use crate::word::{Alphabet, Word};

/// Block structure of a B-word `b0^{m1} b_{k1} ⋯ b0^{md} b_{kd} b0^{m_{d+1}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BShape {
    /// `m1..md`: lengths of the b0-runs before each positive letter.
    pub runs: Vec<u32>,
    /// `k1..kd`: the positive letters.
    pub letters: Vec<u8>,
    /// `m_{d+1}`: trailing b0 count.
    pub tail: u32,
}

impl BShape {
    pub fn of(w: &Word) -> BShape {
        let mut runs = Vec::new();
        let mut letters = Vec::new();
        let mut run = 0;
        for &l in w.letters() {
            if l == 0 {
                run += 1;
            } else {
                runs.push(run);
                letters.push(l);
                run = 0;
            }
        }
        BShape {
            runs,
            letters,
            tail: run,
        }
    }

    pub fn depth(&self) -> usize {
        self.letters.len()
    }

    pub fn word(&self) -> Word {
        let mut w = Word::empty();
        for (m, k) in self.runs.iter().zip(&self.letters) {
            for _ in 0..*m {
                w.push(0);
            }
            w.push(*k);
        }
        for _ in 0..self.tail {
            w.push(0);
        }
        w
    }
}

pub(crate) fn to_letter(i: u32) -> u8 {
    u8::try_from(i).expect("letter index exceeds 255")
}

/// All integer vectors `v` with `lo[s] <= v[s] <= hi[s]`, lexicographically.
pub fn multi_range(lo: &[u32], hi: &[u32]) -> Vec<Vec<u32>> {
    assert_eq!(lo.len(), hi.len());
    if lo.iter().zip(hi).any(|(a, b)| a > b) {
        return Vec::new();
    }
    let mut out = vec![lo.to_vec()];
    for s in 0..lo.len() {
        let mut next = Vec::new();
        for v in out {
            for x in lo[s]..=hi[s] {
                let mut v = v.clone();
                v[s] = x;
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// `w(l)`: replaces the positive letters of `w` by `l`.
pub fn word_subst(w: &Word, l: &[u32]) -> Result<Word> {
    let mut shape = BShape::of(w);
    if shape.depth() != l.len() {
        return Err(Error::IndexLength {
            expected: shape.depth(),
            found: l.len(),
        });
    }
    if l.contains(&0) {
        return Err(Error::Domain(
            "letter indices in w(l) must be positive".into(),
        ));
    }
    shape.letters = l.iter().map(|&x| to_letter(x)).collect();
    Ok(shape.word())
}

/// `w(n̄)`: replaces the b0-run lengths of a word without trailing b0.
pub fn word_subst_runs(w: &Word, n: &[u32]) -> Result<Word> {
    let mut shape = BShape::of(w);
    if shape.tail > 0 {
        return Err(trailing(w, "word_subst_runs"));
    }
    if shape.depth() != n.len() {
        return Err(Error::IndexLength {
            expected: shape.depth(),
            found: n.len(),
        });
    }
    shape.runs = n.to_vec();
    Ok(shape.word())
}

fn trailing(w: &Word, op: &'static str) -> Error {
    Error::TrailingB0 {
        op,
        word: w.display(Alphabet::B).to_string(),
    }
}

/// Errors unless `p` is over B with no word ending in b0.
pub fn require_b0_free(p: &NCPoly, op: &'static str) -> Result<()> {
    require(p, Alphabet::B, op)?;
    match p.words().find(|w| w.last() == Some(0)) {
        Some(w) => Err(trailing(w, op)),
        None => Ok(()),
    }
}

/// `i_Y`: `y_n ↦ x0^{n-1} x1`.
pub fn embed_iy(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::Y, "embed_iY")?;
    Ok(p.map_words(Alphabet::X, |w| Some((iy_word(w), Rat::ONE))))
}

pub(crate) fn iy_word(w: &Word) -> Word {
    let mut out = Word::empty();
    for &n in w.letters() {
        for _ in 1..n {
            out.push(0);
        }
        out.push(1);
    }
    out
}

/// Y-spelling of an X-word ending in x1 (or empty); `None` otherwise.
pub(crate) fn piy_word(w: &Word) -> Option<Word> {
    if w.last() == Some(0) {
        return None;
    }
    let mut out = Word::empty();
    let mut n = 1u32;
    for &l in w.letters() {
        if l == 0 {
            n += 1;
        } else {
            out.push(to_letter(n));
            n = 1;
        }
    }
    Some(out)
}

/// `π_Y`: kills words ending in x0, spells the rest in the y letters.
pub fn proj_piy(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::X, "proj_piY")?;
    Ok(p.map_words(Alphabet::Y, |w| piy_word(w).map(|v| (v, Rat::ONE))))
}

/// `π₀`: kills words ending in b0.
pub fn proj_pi0(p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::B, "proj_pi0")?;
    Ok(p.filter_words(|w| w.last() != Some(0)))
}

/// The derivation `γ₀` of the alphabet of `p`.
pub fn gamma0(p: &NCPoly) -> NCPoly {
    let a = p.alphabet();
    p.apply_derivation(|l| match a {
        Alphabet::X | Alphabet::B if l == 0 => NCPoly::one(a),
        Alphabet::X | Alphabet::B => NCPoly::zero(a),
        Alphabet::Y if l == 1 => NCPoly::zero(a),
        Alphabet::Y => NCPoly::monomial(a, Word::letter(l - 1), Rat::from_int(l as i64 - 1)),
    })
}

/// The derivation `γ_n` of the Y-words: `y_k ↦ δ_{kn}`.
pub fn gamma_n(n: u32, p: &NCPoly) -> Result<NCPoly> {
    require(p, Alphabet::Y, "gamma_n")?;
    if n == 0 {
        return Err(Error::Domain("gamma_n needs n >= 1".into()));
    }
    Ok(p.apply_derivation(|l| {
        if l as u32 == n {
            NCPoly::one(Alphabet::Y)
        } else {
            NCPoly::zero(Alphabet::Y)
        }
    }))
}

/// `sec_Y(p) = Σ_i (−1)^i/i! γ₀^i(i_Y p) x0^i`.
pub fn sec_y(p: &NCPoly) -> Result<NCPoly> {
    let mut g = embed_iy(p)?;
    let mut out = NCPoly::zero(Alphabet::X);
    let mut tail = Word::empty();
    let mut i = 0u32;
    while !g.is_zero() {
        let c = Rat::sign(i) / Rat::factorial(i);
        out += &g.mul_word_right(&tail).scale(&c);
        g = gamma0(&g);
        tail.push(0);
        i += 1;
    }
    Ok(out)
}

/// `sec` on B: `Σ_{n ≤ m} (−1)^{|m|+|n|} C(m, n) w(n̄) b0^{|m|−|n|}`.
pub fn sec_b(p: &NCPoly) -> Result<NCPoly> {
    require_b0_free(p, "sec_B")?;
    Ok(p.map_linear(Alphabet::B, sec_b_word))
}

pub(crate) fn sec_b_word(w: &Word) -> NCPoly {
    let shape = BShape::of(w);
    let total: u32 = shape.runs.iter().sum();
    let mut out = NCPoly::zero(Alphabet::B);
    let zeros = vec![0; shape.depth()];
    for n in multi_range(&zeros, &shape.runs) {
        let sum_n: u32 = n.iter().sum();
        let mut c = Rat::sign(total + sum_n);
        for (ms, ns) in shape.runs.iter().zip(&n) {
            c *= Rat::binomial(*ms as i64, *ns as i64);
        }
        let v = BShape {
            runs: n,
            letters: shape.letters.clone(),
            tail: total - sum_n,
        }
        .word();
        out.add_term(v, c);
    }
    out
}

/// `τ(b0^m b_k) = b0^{k−1} b_{m+1}`, extended as an antiautomorphism.
pub fn tau(p: &NCPoly) -> Result<NCPoly> {
    require_b0_free(p, "tau")?;
    Ok(p.map_words(Alphabet::B, |w| Some((tau_word(w), Rat::ONE))))
}

pub(crate) fn tau_word(w: &Word) -> Word {
    let shape = BShape::of(w);
    debug_assert_eq!(shape.tail, 0);
    let d = shape.depth();
    let mut runs = Vec::with_capacity(d);
    let mut letters = Vec::with_capacity(d);
    for s in (0..d).rev() {
        runs.push(shape.letters[s] as u32 - 1);
        letters.push(to_letter(shape.runs[s] + 1));
    }
    BShape {
        runs,
        letters,
        tail: 0,
    }
    .word()
}

/// `S₀ = π₀ ∘ S ∘ sec`.
pub fn s0(p: &NCPoly) -> Result<NCPoly> {
    proj_pi0(&antipode(&sec_b(p)?))
}

/// `ρ` by its defining summation; `ρ(1) = 1`.
pub fn rho(p: &NCPoly) -> Result<NCPoly> {
    require_b0_free(p, "rho")?;
    Ok(p.map_linear(Alphabet::B, rho_word))
}

fn rho_word(w: &Word) -> NCPoly {
    let shape = BShape::of(w);
    let d = shape.depth();
    if d == 0 {
        return NCPoly::one(Alphabet::B);
    }
    let ksum: u32 = shape.letters.iter().map(|&k| k as u32).sum();
    let msum: u32 = shape.runs.iter().sum();
    let mut out = NCPoly::zero(Alphabet::B);
    // l_s in 1..=k_s and n_s in 0..=m_s for s < d; the last entries are
    // forced by the two sum constraints.
    let mut lo = vec![1; d - 1];
    lo.extend(vec![0; d - 1]);
    let mut hi: Vec<u32> = shape.letters[..d - 1].iter().map(|&k| k as u32).collect();
    hi.extend_from_slice(&shape.runs[..d - 1]);
    for v in multi_range(&lo, &hi) {
        let (l, n) = v.split_at(d - 1);
        let (lsum, nsum): (u32, u32) = (l.iter().sum(), n.iter().sum());
        if lsum >= ksum || nsum > msum {
            continue;
        }
        let (ld, nd) = (ksum - lsum, msum - nsum);
        let mut c = Rat::sign(ld + nd + 1);
        for s in 0..d - 1 {
            c *= Rat::binomial(shape.letters[s] as i64 - 1, l[s] as i64 - 1);
            c *= Rat::binomial(shape.runs[s] as i64, n[s] as i64);
        }
        let mut runs = vec![nd];
        runs.extend_from_slice(n);
        let mut letters = vec![to_letter(ld)];
        letters.extend(l.iter().map(|&x| to_letter(x)));
        out.add_term(
            BShape {
                runs,
                letters,
                tail: 0,
            }
            .word(),
            c,
        );
    }
    out
}

/// `ρ` through `(−1)^{wt+dep} (S₀ ∘ τ ∘ S₀ ∘ τ)`, word by word.
pub fn rho_via_s0(p: &NCPoly) -> Result<NCPoly> {
    require_b0_free(p, "rho")?;
    let mut out = NCPoly::zero(Alphabet::B);
    for (w, c) in p.terms() {
        let q = NCPoly::word(Alphabet::B, w.clone());
        let r = s0(&tau(&s0(&tau(&q)?)?)?)?;
        let sign = Rat::sign(w.weight(Alphabet::B) + w.depth(Alphabet::B));
        out += &r.scale(&(c * &sign));
    }
    Ok(out)
}
