//! The Ihara bracket on Lie(X), the bracket `{−,−}_A` on Lie(B), and checks
//! of the post-Lie axioms and the induced actions.

use std::fmt;

use serde::Serialize;

use crate::derivations::{d, partial, s, sigma};
use crate::error::{Error, Result};
use crate::freelie::{is_lie, lie_basis};
use crate::ncpoly::{require, NCPoly};
use crate::word::Alphabet;

fn check_lie(p: &NCPoly, op: &'static str, which: &'static str) -> Result<()> {
    if is_lie(p) {
        Ok(())
    } else {
        Err(Error::NotLie {
            op,
            which: which.to_string(),
        })
    }
}

/// `{ψ1, ψ2} = d_{ψ1}(ψ2) − d_{ψ2}(ψ1) + [ψ1, ψ2]` without the Lie check.
pub fn ihara_unchecked(a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    require(a, Alphabet::X, "ihara")?;
    require(b, Alphabet::X, "ihara")?;
    Ok(&(&d(a, b)? - &d(b, a)?) + &a.commutator(b)?)
}

/// The Ihara bracket; both arguments must be Lie elements.
pub fn ihara(a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    require(a, Alphabet::X, "ihara")?;
    require(b, Alphabet::X, "ihara")?;
    check_lie(a, "ihara", "first")?;
    check_lie(b, "ihara", "second")?;
    ihara_unchecked(a, b)
}

/// `{ψ1, ψ2}_A = ∂_{ψ1}(ψ2) − ∂_{ψ2}(ψ1) + [ψ1, ψ2]` without the Lie check.
pub fn ari_unchecked(a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    require(a, Alphabet::B, "ari")?;
    require(b, Alphabet::B, "ari")?;
    Ok(&(&partial(a, b)? - &partial(b, a)?) + &a.commutator(b)?)
}

/// The bracket `{−,−}_A`; both arguments must be Lie elements.
pub fn ari(a: &NCPoly, b: &NCPoly) -> Result<NCPoly> {
    require(a, Alphabet::B, "ari")?;
    require(b, Alphabet::B, "ari")?;
    check_lie(a, "ari", "first")?;
    check_lie(b, "ari", "second")?;
    ari_unchecked(a, b)
}

/// The two post-Lie structures: `ψ ▷ φ = d_ψ(φ)` on Lie(X) and
/// `ψ ▷ φ = ∂_ψ(φ)` on Lie(B).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Structure {
    XIhara,
    BAri,
}

impl Structure {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Structure::XIhara => Alphabet::X,
            Structure::BAri => Alphabet::B,
        }
    }

    pub fn triangle(self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        match self {
            Structure::XIhara => d(a, b),
            Structure::BAri => partial(a, b),
        }
        .expect("alphabet checked by caller")
    }

    /// The induced bracket `⟨a, b⟩_▷`.
    pub fn bracket(self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        match self {
            Structure::XIhara => ihara_unchecked(a, b),
            Structure::BAri => ari_unchecked(a, b),
        }
        .expect("alphabet checked by caller")
    }

    /// `ℓ_a + a ▷ −`: `s_a` or `σ_a`.
    pub fn end(self, a: &NCPoly, w: &NCPoly) -> NCPoly {
        match self {
            Structure::XIhara => s(a, w),
            Structure::BAri => sigma(a, w),
        }
        .expect("alphabet checked by caller")
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Structure::XIhara => "X-Ihara",
            Structure::BAri => "B-Ari",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub structure: Structure,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    fn new(structure: Structure) -> AxiomReport {
        AxiomReport {
            structure,
            checked: 0,
            violations: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn record(&mut self, axiom: &str, ok: bool, witness: &[&NCPoly]) {
        self.checked += 1;
        if !ok {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                witness: witness.iter().map(|p| p.to_string()).collect(),
            });
        }
    }
}

/// Lyndon basis elements of all bidegrees with weight `<= max_weight`.
pub fn lie_samples(alphabet: Alphabet, max_weight: u32) -> Vec<NCPoly> {
    let mut out = Vec::new();
    for m in 1..=max_weight {
        for n in 0..=m {
            out.extend(lie_basis(alphabet, m, n).elements);
        }
    }
    out
}

fn weight(p: &NCPoly) -> u32 {
    p.weight_range().map_or(0, |(_, hi)| hi)
}

/// Ordered triples from `samples` with total weight `<= cap`.
fn triples(samples: &[NCPoly], cap: u32) -> Vec<(&NCPoly, &NCPoly, &NCPoly)> {
    let mut out = Vec::new();
    for a in samples {
        for b in samples {
            for c in samples {
                if weight(a) + weight(b) + weight(c) <= cap {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

/// Checks the post-Lie axioms on all sample triples of total weight `<= cap`:
///
/// * (i) `ψ ▷ [φ, λ] = [ψ ▷ φ, λ] + [φ, ψ ▷ λ]`;
/// * (ii) `⟨ψ, φ⟩_▷ ▷ λ = ψ ▷ (φ ▷ λ) − φ ▷ (ψ ▷ λ)`.
pub fn post_lie_check(st: Structure, samples: &[NCPoly], cap: u32) -> AxiomReport {
    let mut rep = AxiomReport::new(st);
    let t = |a: &NCPoly, b: &NCPoly| st.triangle(a, b);
    let br = |a: &NCPoly, b: &NCPoly| a.commutator(b).expect("same alphabet");
    for (a, b, c) in triples(samples, cap) {
        let lhs = t(a, &br(b, c));
        let rhs = &br(&t(a, b), c) + &br(b, &t(a, c));
        rep.record("(i) derivation", lhs == rhs, &[a, b, c]);

        let lhs = t(&st.bracket(a, b), c);
        let rhs = &t(a, &t(b, c)) - &t(b, &t(a, c));
        rep.record("(ii) compatibility", lhs == rhs, &[a, b, c]);
    }
    rep
}

/// The second axiom taken literally as `⟨ψ, φ⟩_▷ ▷ λ = (ψ ▷ φ − φ ▷ ψ) ▷ λ`.
/// Kept to document that this form does not hold.
pub fn literal_axiom_ii_check(st: Structure, samples: &[NCPoly], cap: u32) -> AxiomReport {
    let mut rep = AxiomReport::new(st);
    for (a, b, c) in triples(samples, cap) {
        let lhs = st.triangle(&st.bracket(a, b), c);
        let rhs = st.triangle(&(&st.triangle(a, b) - &st.triangle(b, a)), c);
        rep.record("(ii) literal", lhs == rhs, &[a, b, c]);
    }
    rep
}

/// Jacobi identity, antisymmetry and closure in the free Lie algebra for the
/// induced bracket.
pub fn jacobi_check(st: Structure, samples: &[NCPoly], cap: u32) -> AxiomReport {
    let mut rep = AxiomReport::new(st);
    let br = |a: &NCPoly, b: &NCPoly| st.bracket(a, b);
    for (a, b, c) in triples(samples, cap) {
        let j = &(&br(a, &br(b, c)) + &br(b, &br(c, a))) + &br(c, &br(a, b));
        rep.record("jacobi", j.is_zero(), &[a, b, c]);
    }
    for a in samples {
        for b in samples {
            if weight(a) + weight(b) > cap {
                continue;
            }
            let ab = br(a, b);
            rep.record("antisymmetry", ab == -br(b, a), &[a, b]);
            rep.record("closure", is_lie(&ab), &[a, b]);
        }
    }
    rep
}

/// `[end_a, end_b](w) = end_{⟨a,b⟩}(w)` for sample pairs of total weight
/// `<= cap`, and `[a▷, b▷] = ⟨a,b⟩▷` on the given test words.
pub fn action_check(st: Structure, samples: &[NCPoly], cap: u32, words: &[NCPoly]) -> AxiomReport {
    let mut rep = AxiomReport::new(st);
    for a in samples {
        for b in samples {
            if weight(a) + weight(b) > cap {
                continue;
            }
            let ab = st.bracket(a, b);
            for w in words {
                let lhs = &st.end(a, &st.end(b, w)) - &st.end(b, &st.end(a, w));
                rep.record("end action", lhs == st.end(&ab, w), &[a, b, w]);
                let lhs = &st.triangle(a, &st.triangle(b, w)) - &st.triangle(b, &st.triangle(a, w));
                rep.record("der action", lhs == st.triangle(&ab, w), &[a, b, w]);
            }
        }
    }
    rep
}
