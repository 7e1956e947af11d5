//! Derivations and the endomorphisms built from them.
//!
//! X side: `d_ψ`, `s_ψ = ℓ_ψ + d_ψ`, the induced maps `s^Y_ψ` and `D^Y_f` on
//! Y-words, and the decomposition `f = Σ f_i x0^i`.
//!
//! B side: `∂_w`, its right/left halves, `σ_ψ = ℓ_ψ + ∂_ψ`, and the
//! variants `σ⁰`, `∂⁰` that live on the b0-free words.

use crate::error::{Error, Result};
use crate::hopf::reverse_y;
use crate::ncpoly::{check_same, require, NCPoly};
use crate::rational::Rat;
use crate::word::{Alphabet, Word};
use crate::wordmaps::{
    embed_iy, multi_range, piy_word, proj_pi0, proj_piy, require_b0_free, sec_b, to_letter, BShape,
};

/// `d_ψ`: the derivation with `x0 ↦ 0`, `x1 ↦ [x1, ψ]`.
pub fn d(psi: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
    require(psi, Alphabet::X, "d")?;
    require(p, Alphabet::X, "d")?;
    let x1 = NCPoly::letter(Alphabet::X, 1);
    let img = x1.commutator(psi)?;
    Ok(p.apply_derivation(|l| {
        if l == 1 {
            img.clone()
        } else {
            NCPoly::zero(Alphabet::X)
        }
    }))
}

/// `s_ψ(p) = ψ p + d_ψ(p)`.
pub fn s(psi: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
    Ok(&(psi * p) + &d(psi, p)?)
}

/// `s^Y_ψ(u) = π_Y(s_ψ(i_Y(u)))`.
pub fn s_y(psi: &NCPoly, u: &NCPoly) -> Result<NCPoly> {
    proj_piy(&s(psi, &embed_iy(u)?)?)
}

/// `D^Y_f(u) = s^Y_f(u) − u π_Y(f)`.
pub fn dfy(f: &NCPoly, u: &NCPoly) -> Result<NCPoly> {
    let pf = proj_piy(f)?;
    Ok(&s_y(f, u)? - &(u * &pf))
}

/// `f = Σ_{i=0}^p i_Y(f_i) x0^i` for `f` of weight `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDecomposition {
    pub p: u32,
    pub parts: Vec<NCPoly>,
    pub bars: Vec<NCPoly>,
}

impl FDecomposition {
    /// `f_{i,0} = f_i + f̄_i` and `f_{i,j} = f_i y_j + y_j f̄_i` for `j ≥ 1`.
    /// Zero when `i > p`.
    pub fn block(&self, i: usize, j: u32) -> NCPoly {
        if i >= self.parts.len() {
            return NCPoly::zero(Alphabet::Y);
        }
        if j == 0 {
            return &self.parts[i] + &self.bars[i];
        }
        let y = NCPoly::letter(Alphabet::Y, to_letter(j));
        &(&self.parts[i] * &y) + &(&y * &self.bars[i])
    }

    /// `Σ_i i_Y(f_i) x0^i`.
    pub fn reassemble(&self) -> NCPoly {
        let mut out = NCPoly::zero(Alphabet::X);
        let mut tail = Word::empty();
        for f in &self.parts {
            out += &embed_iy(f).expect("Y parts").mul_word_right(&tail);
            tail.push(0);
        }
        out
    }
}

pub fn f_decomp(f: &NCPoly) -> Result<FDecomposition> {
    require(f, Alphabet::X, "f_decomp")?;
    let p = match f.weight_range() {
        None => 0,
        Some((lo, hi)) if lo == hi => lo,
        _ => return Err(Error::NotHomogeneous { op: "f_decomp" }),
    };
    let mut parts = vec![NCPoly::zero(Alphabet::Y); p as usize + 1];
    for (w, c) in f.terms() {
        let letters = w.letters();
        let i = letters.iter().rev().take_while(|&&l| l == 0).count();
        let head = Word::from_slice(&letters[..letters.len() - i]);
        let y = piy_word(&head).expect("head ends in x1");
        parts[i].add_term(y, c.clone());
    }
    let sign = Rat::sign(p);
    let bars = parts
        .iter()
        .map(|q| reverse_y(q).map(|r| r.scale(&sign)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FDecomposition { p, parts, bars })
}

/// Which half of `∂_w` to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `∂ = ∂^R − ∂^L`.
    Both,
    /// `∂^R`: the shifted letter goes to the left of `w(l)`.
    Right,
    /// `∂^L`: the shifted letter goes to the right of `w(l)`.
    Left,
}

/// `∂_ψ` (or a half of it) prepared for repeated application.
///
/// For each word `w` of `ψ`, the terms `(−1)^{|k|+|l|} C(k−1, l−1) w(l)`
/// with shift `|k| − |l|` do not depend on the letter `b_a` being
/// differentiated, so they are computed once.
#[derive(Clone, Debug)]
pub struct Partial {
    side: Side,
    items: Vec<(u32, Word, Rat)>,
}

impl Partial {
    pub fn new(psi: &NCPoly, side: Side) -> Result<Partial> {
        require(psi, Alphabet::B, "partial")?;
        let mut items = Vec::new();
        for (w, c) in psi.terms() {
            let shape = BShape::of(w);
            let k: Vec<u32> = shape.letters.iter().map(|&x| x as u32).collect();
            let ksum: u32 = k.iter().sum();
            for l in multi_range(&vec![1; k.len()], &k) {
                let lsum: u32 = l.iter().sum();
                let mut coeff = c * &Rat::sign(ksum + lsum);
                for (ks, ls) in k.iter().zip(&l) {
                    coeff *= Rat::binomial(*ks as i64 - 1, *ls as i64 - 1);
                }
                let mut sh = shape.clone();
                sh.letters = l.iter().map(|&x| to_letter(x)).collect();
                items.push((ksum - lsum, sh.word(), coeff));
            }
        }
        Ok(Partial { side, items })
    }

    /// Image of the letter `b_a`.
    pub fn letter_image(&self, a: u8) -> NCPoly {
        let mut out = NCPoly::zero(Alphabet::B);
        if a == 0 {
            return out;
        }
        for (shift, w, c) in &self.items {
            let b = Word::letter(to_letter(a as u32 + shift));
            if matches!(self.side, Side::Both | Side::Right) {
                out.add_term(b.concat(w), c.clone());
            }
            if matches!(self.side, Side::Both | Side::Left) {
                out.add_term(w.concat(&b), -c);
            }
        }
        if self.side == Side::Left {
            out = -out;
        }
        out
    }

    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        require(p, Alphabet::B, "partial")?;
        Ok(p.apply_derivation(|l| self.letter_image(l)))
    }
}

/// `∂_w(p)`.
pub fn partial(w: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
    Partial::new(w, Side::Both)?.apply(p)
}

/// `∂^R_w(p)`.
pub fn partial_r(w: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
    Partial::new(w, Side::Right)?.apply(p)
}

/// `∂^L_w(p)`.
pub fn partial_l(w: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
    Partial::new(w, Side::Left)?.apply(p)
}

/// `σ_ψ(p) = ψ p + ∂_ψ(p)`.
pub fn sigma(psi: &NCPoly, p: &NCPoly) -> Result<NCPoly> {
    check_same(psi.alphabet(), p.alphabet())?;
    Ok(&(psi * p) + &partial(psi, p)?)
}

/// `σ_ψ` prepared once for many arguments.
#[derive(Clone, Debug)]
pub struct Sigma {
    psi: NCPoly,
    partial: Partial,
}

impl Sigma {
    pub fn new(psi: &NCPoly) -> Result<Sigma> {
        Ok(Sigma {
            psi: psi.clone(),
            partial: Partial::new(psi, Side::Both)?,
        })
    }

    pub fn apply(&self, p: &NCPoly) -> Result<NCPoly> {
        Ok(&(&self.psi * p) + &self.partial.apply(p)?)
    }

    /// `σ⁰_ψ(u) = π₀(σ_ψ(u))` for b0-free `u`.
    pub fn apply0(&self, u: &NCPoly) -> Result<NCPoly> {
        require_b0_free(u, "sigma0")?;
        proj_pi0(&self.apply(u)?)
    }
}

/// `σ⁰_ψ(u) = π₀(σ_ψ(u))`; `u` must be b0-free.
pub fn sigma0(psi: &NCPoly, u: &NCPoly) -> Result<NCPoly> {
    Sigma::new(psi)?.apply0(u)
}

fn partial0_side(w: &NCPoly, u: &NCPoly, side: Side) -> Result<NCPoly> {
    require_b0_free(w, "partial0")?;
    require_b0_free(u, "partial0")?;
    proj_pi0(&Partial::new(&sec_b(w)?, side)?.apply(u)?)
}

/// `∂⁰_w(u) = π₀(∂_{sec(w)}(u))`.
pub fn partial0(w: &NCPoly, u: &NCPoly) -> Result<NCPoly> {
    partial0_side(w, u, Side::Both)
}

/// `∂^{R,0}_w(u) = π₀(∂^R_{sec(w)}(u))`.
pub fn partial_r0(w: &NCPoly, u: &NCPoly) -> Result<NCPoly> {
    partial0_side(w, u, Side::Right)
}

/// `∂^{L,0}_w(u) = π₀(∂^L_{sec(w)}(u))`.
pub fn partial_l0(w: &NCPoly, u: &NCPoly) -> Result<NCPoly> {
    partial0_side(w, u, Side::Left)
}
