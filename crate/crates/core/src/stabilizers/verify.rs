//! Bounded-weight verification of the stabilizer decompositions, bracket
//! closure and the comparison map θ.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::brackets::{ari, ihara};
use crate::comparison::{theta, theta_10_of};
use crate::error::{Error, Result};
use crate::freelie::{lie_basis, BasisRecord, SubspaceBasis};
use crate::ncpoly::NCPoly;
use crate::qlinalg::{rank_of, WordIndex};
use crate::word::{Alphabet, Bidegree, Word};

use super::lemmas::{lemma_checks, LemmaRanges};
use super::report::{CheckItem, VerificationReport};
use super::solver::{default_delta_cap, default_tau_cap, stab_delta_y_basis, stab_tau_basis};
use super::spaces::{
    bidegrees, lq_basis, lq_plus_b0, lq_violations, ls_basis, ls_plus_weight_one, ls_violations,
    Space,
};

/// The verifiable claims.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    StabLs,
    StabLq,
    ClosureLs,
    ClosureLq,
    Theta,
    Lemmas,
    All,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::StabLs,
        Claim::StabLq,
        Claim::ClosureLs,
        Claim::ClosureLq,
        Claim::Theta,
        Claim::Lemmas,
        Claim::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::StabLs => "stab-ls",
            Claim::StabLq => "stab-lq",
            Claim::ClosureLs => "closure-ls",
            Claim::ClosureLq => "closure-lq",
            Claim::Theta => "theta",
            Claim::Lemmas => "lemmas",
            Claim::All => "all",
        }
    }

    /// Weight caps used when none is given.
    pub fn default_max_weight(self) -> u32 {
        match self {
            Claim::StabLs => 9,
            Claim::StabLq => 6,
            Claim::ClosureLs => 10,
            Claim::ClosureLq => 7,
            Claim::Theta => 7,
            Claim::Lemmas => 6,
            Claim::All => 9,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim `{s}`")))
    }
}

type BracketFn = fn(&NCPoly, &NCPoly) -> Result<NCPoly>;

type Cache = Mutex<BTreeMap<(Space, Bidegree), SubspaceBasis>>;

/// Computes and caches component bases. The solver check caps are the
/// defaults raised by `extra`.
#[derive(Debug, Default)]
pub struct Workbench {
    extra: u32,
    cache: Cache,
}

impl Workbench {
    pub fn new() -> Workbench {
        Workbench::default()
    }

    pub fn with_extra_caps(extra: u32) -> Workbench {
        Workbench {
            extra,
            cache: Cache::default(),
        }
    }

    pub fn extra(&self) -> u32 {
        self.extra
    }

    pub fn delta_cap(&self, m: u32) -> u32 {
        default_delta_cap(m) + self.extra
    }

    pub fn tau_cap(&self, m: u32) -> u32 {
        default_tau_cap(m) + self.extra
    }

    /// Canonical basis of `space[m,n]`.
    pub fn basis(&self, space: Space, m: u32, n: u32) -> SubspaceBasis {
        let key = (space, Bidegree::new(m, n));
        if let Some(b) = self.cache.lock().expect("cache lock").get(&key) {
            return b.clone();
        }
        let b = match space {
            Space::LieX => lie_basis(Alphabet::X, m, n).canonicalize(),
            Space::LieB => lie_basis(Alphabet::B, m, n).canonicalize(),
            Space::Ls => ls_basis(m, n),
            Space::Lq => lq_basis(m, n),
            Space::StabX => stab_delta_y_basis(m, n, self.delta_cap(m)),
            Space::StabB => stab_tau_basis(m, n, self.tau_cap(m)),
        };
        self.cache
            .lock()
            .expect("cache lock")
            .insert(key, b.clone());
        b
    }

    /// All components of weight `1..=max_weight`, in `(m, n)` order.
    /// Heavier components are scheduled first.
    pub fn components(&self, space: Space, max_weight: u32) -> Vec<SubspaceBasis> {
        let mut bd = bidegrees(max_weight);
        bd.reverse();
        let mut out: Vec<SubspaceBasis> = bd
            .par_iter()
            .map(|b| self.basis(space, b.weight, b.depth))
            .collect();
        out.reverse();
        out
    }

    /// Both sides of a stabilizer decomposition, component by component:
    /// the condition side must lie in the solver side and span it.
    fn sandwich(
        &self,
        claim: &str,
        max_weight: u32,
        solver: Space,
        conditions: fn(u32, u32) -> SubspaceBasis,
        violations: fn(&NCPoly) -> Vec<&'static str>,
        cap: impl Fn(u32) -> u32 + Sync,
    ) -> VerificationReport {
        let mut rep = VerificationReport::new(claim)
            .param("max_weight", max_weight)
            .param("extra_cap", self.extra);
        let stab = self.components(solver, max_weight);
        let bd = bidegrees(max_weight);
        let results: Vec<(CheckItem, BasisRecord, BasisRecord)> = bd
            .par_iter()
            .zip(stab.par_iter())
            .map(|(b, s)| {
                let (m, n) = (b.weight, b.depth);
                let c = conditions(m, n);
                let inside = s.contains_span(&c);
                let equal = inside && s.span_equal(&c);
                let mut item = CheckItem::new(format!("({m},{n})"), equal).with_detail(format!(
                    "conditions dim {}, solver dim {}, check cap {}",
                    c.dim(),
                    s.dim(),
                    cap(m)
                ));
                if !inside {
                    let w = c
                        .elements
                        .iter()
                        .find(|e| !s.contains(e))
                        .expect("some element");
                    item = item
                        .with_witness(format!("satisfies the conditions but not the solver: {w}"));
                } else if !equal {
                    let w = s
                        .elements
                        .iter()
                        .find(|e| !c.contains(e))
                        .expect("some element");
                    let why = violations(w);
                    item = item.with_witness(format!(
                        "solver element outside the conditions ({}): {w}",
                        why.join("; ")
                    ));
                }
                let proper = if solver == Space::StabX {
                    Space::Ls
                } else {
                    Space::Lq
                };
                (item, self.basis(proper, m, n).record(), s.record())
            })
            .collect();
        let mut cond_records = Vec::new();
        let mut stab_records = Vec::new();
        for (item, cr, sr) in results {
            rep.push(item);
            cond_records.push(cr);
            stab_records.push(sr);
        }
        rep.bases.extend(cond_records);
        rep.bases.extend(stab_records);
        rep
    }

    /// The stabilizer of `Δ_Y` equals `ls ⊕ Q x0 ⊕ Q x1` up to `max_weight`.
    pub fn verify_stab_ls(&self, max_weight: u32) -> VerificationReport {
        let mut rep = self.sandwich(
            Claim::StabLs.name(),
            max_weight,
            Space::StabX,
            ls_plus_weight_one,
            ls_violations,
            |m| self.delta_cap(m),
        );
        rep.note(format!(
            "solver tests u in {{1, y1, ..., y_(m+{})}}",
            2 + self.extra
        ));
        rep
    }

    /// The stabilizer of `τ` equals `lq ⊕ Q b0` up to `max_weight`.
    pub fn verify_stab_lq(&self, max_weight: u32) -> VerificationReport {
        let mut rep = self.sandwich(
            Claim::StabLq.name(),
            max_weight,
            Space::StabB,
            lq_plus_b0,
            lq_violations,
            |m| self.tau_cap(m),
        );
        rep.note(format!(
            "solver tests the empty word and every word of weight <= m+{} not ending in b0; \
             no finite test set is known a priori, exactness rests on the sandwich",
            3 + self.extra
        ));
        rep
    }

    /// Brackets of basis pairs of total weight `<= max_total` land in the
    /// target, tested by re-evaluating the target's defining conditions.
    /// For the stabilizers the bracket must also lie in the solver space of
    /// its bidegree.
    pub fn verify_closure(&self, space: Space, max_total: u32) -> Result<VerificationReport> {
        let (target, bracket): (&str, BracketFn) = match space {
            Space::Ls | Space::StabX => ("ls", ihara),
            Space::Lq | Space::StabB => ("lq", ari),
            _ => return Err(Error::Domain(format!("no closure claim for {space}"))),
        };
        let violations = if target == "ls" {
            ls_violations
        } else {
            lq_violations
        };
        let comps = self.components(space, max_total.saturating_sub(1));
        let elems: Vec<(Bidegree, &NCPoly)> = comps
            .iter()
            .flat_map(|c| c.elements.iter().map(move |e| (c.bidegree, e)))
            .collect();
        let mut groups: BTreeMap<(Bidegree, Bidegree), Vec<(usize, usize)>> = BTreeMap::new();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if elems[i].0.weight + elems[j].0.weight <= max_total {
                    groups
                        .entry((elems[i].0, elems[j].0))
                        .or_default()
                        .push((i, j));
                }
            }
        }
        let groups: Vec<_> = groups.into_iter().collect();
        let is_stab = matches!(space, Space::StabX | Space::StabB);
        let items: Vec<CheckItem> = groups
            .par_iter()
            .map(|((b1, b2), pairs)| {
                let label = format!("({},{})x({},{})", b1.weight, b1.depth, b2.weight, b2.depth);
                let target_bd = Bidegree::new(b1.weight + b2.weight, b1.depth + b2.depth);
                let stab = is_stab.then(|| self.basis(space, target_bd.weight, target_bd.depth));
                for &(i, j) in pairs {
                    let (a, b) = (elems[i].1, elems[j].1);
                    let br = bracket(a, b).expect("Lie inputs");
                    let why = violations(&br);
                    if !why.is_empty() {
                        return CheckItem::new(label, false).with_witness(format!(
                            "{{{a}, {b}}} = {br} violates {}",
                            why.join("; ")
                        ));
                    }
                    if let Some(s) = &stab {
                        if !s.contains(&br) {
                            return CheckItem::new(label, false).with_witness(format!(
                                "{{{a}, {b}}} = {br} is not in the solver space"
                            ));
                        }
                    }
                }
                CheckItem::new(label, true).with_detail(format!("{} pairs", pairs.len()))
            })
            .collect();
        let mut rep = VerificationReport::new(format!("closure-{space}"))
            .param("max_total_weight", max_total)
            .param("extra_cap", self.extra);
        rep.items = items;
        rep.note(format!(
            "brackets tested against the defining conditions of {target}"
        ));
        Ok(rep)
    }

    /// `θ^(10)` on the stabilizer of `Δ_Y`: bracket morphism, injectivity,
    /// image in `lq ⊕ Q b0`, agreement with `θ` on `ls`, and
    /// `{θ(ψ), b1}_A = 0` for `ψ ∈ ls`.
    pub fn verify_theta(&self, max_weight: u32) -> VerificationReport {
        let mut rep = VerificationReport::new(Claim::Theta.name())
            .param("max_weight", max_weight)
            .param("extra_cap", self.extra);
        let comps = self.components(Space::StabX, max_weight);
        let b1 = NCPoly::letter(Alphabet::B, 1);
        let per_component: Vec<Vec<CheckItem>> = comps
            .par_iter()
            .map(|c| {
                let (m, n) = (c.bidegree.weight, c.bidegree.depth);
                let tag = format!("({m},{n})");
                let images: Vec<NCPoly> = c
                    .elements
                    .iter()
                    .map(|e| theta_10_of(e).expect("X input without constant"))
                    .collect();
                let idx = WordIndex::spanning(Alphabet::B, &images);
                let coords: Vec<_> = images
                    .iter()
                    .map(|p| idx.coords(p).expect("spans"))
                    .collect();
                let rank = rank_of(&coords, idx.len());
                let mut items = vec![CheckItem::new(format!("injective {tag}"), rank == c.dim())
                    .with_detail(format!("rank {rank} of {}", c.dim()))];

                let mut image_item = CheckItem::new(format!("image in lq+Qb0 {tag}"), true);
                for (e, t) in c.elements.iter().zip(&images) {
                    let mut proper = t.clone();
                    proper.add_term(Word::letter(0), -t.coeff(&Word::letter(0)));
                    let why = lq_violations(&proper);
                    if !why.is_empty() {
                        image_item = CheckItem::new(image_item.label, false).with_witness(format!(
                            "theta10({e}) = {t} violates {}",
                            why.join("; ")
                        ));
                        break;
                    }
                }
                items.push(image_item);

                if m >= 2 {
                    let mut square = CheckItem::new(format!("theta = theta10 on ls {tag}"), true);
                    let mut with_b1 = CheckItem::new(format!("{{theta(psi), b1}} = 0 {tag}"), true);
                    for (e, t) in c.elements.iter().zip(&images) {
                        let th = theta(e).expect("X input");
                        if &th != t {
                            square = CheckItem::new(square.label, false)
                                .with_witness(format!("{e}: theta {th}, theta10 {t}"));
                        }
                        let br = ari(&th, &b1).expect("B inputs");
                        if !br.is_zero() {
                            with_b1 = CheckItem::new(with_b1.label, false)
                                .with_witness(format!("{{theta({e}), b1}} = {br}"));
                        }
                    }
                    items.push(square);
                    items.push(with_b1);
                }
                items
            })
            .collect();
        for items in per_component {
            rep.items.extend(items);
        }

        let elems: Vec<(Bidegree, &NCPoly)> = comps
            .iter()
            .flat_map(|c| c.elements.iter().map(move |e| (c.bidegree, e)))
            .collect();
        let mut groups: BTreeMap<(Bidegree, Bidegree), Vec<(usize, usize)>> = BTreeMap::new();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if elems[i].0.weight + elems[j].0.weight <= max_weight {
                    groups
                        .entry((elems[i].0, elems[j].0))
                        .or_default()
                        .push((i, j));
                }
            }
        }
        let groups: Vec<_> = groups.into_iter().collect();
        let morph: Vec<CheckItem> = groups
            .par_iter()
            .map(|((b1, b2), pairs)| {
                let label = format!(
                    "morphism ({},{})x({},{})",
                    b1.weight, b1.depth, b2.weight, b2.depth
                );
                for &(i, j) in pairs {
                    let (a, b) = (elems[i].1, elems[j].1);
                    let lhs = theta_10_of(&ihara(a, b).expect("Lie inputs")).expect("X input");
                    let rhs = ari(
                        &theta_10_of(a).expect("X input"),
                        &theta_10_of(b).expect("X input"),
                    )
                    .expect("B inputs");
                    if lhs != rhs {
                        return CheckItem::new(label, false)
                            .with_witness(format!("a = {a}, b = {b}: {lhs} vs {rhs}"));
                    }
                }
                CheckItem::new(label, true).with_detail(format!("{} pairs", pairs.len()))
            })
            .collect();
        rep.items.extend(morph);
        rep
    }

    /// Solver bases are unchanged when every check cap is raised by 2.
    pub fn verify_saturation(&self, space: Space, max_weight: u32) -> Result<VerificationReport> {
        if !matches!(space, Space::StabX | Space::StabB) {
            return Err(Error::Domain(format!("{space} has no solver caps")));
        }
        let raised = Workbench::with_extra_caps(self.extra + 2);
        let base = self.components(space, max_weight);
        let more = raised.components(space, max_weight);
        let mut rep = VerificationReport::new(format!("saturation-{space}"))
            .param("max_weight", max_weight)
            .param("extra_cap", self.extra);
        for (a, b) in base.iter().zip(&more) {
            let (m, n) = (a.bidegree.weight, a.bidegree.depth);
            let same = a.elements == b.elements;
            let mut item = CheckItem::new(format!("({m},{n})"), same).with_detail(format!(
                "dim {} at caps +0, {} at caps +2",
                a.dim(),
                b.dim()
            ));
            if !same {
                let w = a.elements.iter().find(|e| !b.contains(e));
                if let Some(w) = w {
                    item = item.with_witness(format!("dropped at higher cap: {w}"));
                }
            }
            rep.push(item);
        }
        Ok(rep)
    }

    /// Runs `claim`. `max_weight` overrides the claim's default cap; for
    /// `lemmas` it bounds the exhaustive word sets.
    pub fn verify_claim(&self, claim: Claim, max_weight: Option<u32>) -> Vec<VerificationReport> {
        let cap = |c: Claim| max_weight.unwrap_or_else(|| c.default_max_weight());
        match claim {
            Claim::StabLs => vec![VerificationReport::timed(|| {
                self.verify_stab_ls(cap(claim))
            })],
            Claim::StabLq => vec![VerificationReport::timed(|| {
                self.verify_stab_lq(cap(claim))
            })],
            Claim::ClosureLs => [Space::Ls, Space::StabX]
                .into_iter()
                .map(|s| {
                    VerificationReport::timed(|| {
                        self.verify_closure(s, cap(claim)).expect("closure space")
                    })
                })
                .collect(),
            Claim::ClosureLq => [Space::Lq, Space::StabB]
                .into_iter()
                .map(|s| {
                    VerificationReport::timed(|| {
                        self.verify_closure(s, cap(claim)).expect("closure space")
                    })
                })
                .collect(),
            Claim::Theta => vec![VerificationReport::timed(|| self.verify_theta(cap(claim)))],
            Claim::Lemmas => {
                let ranges = match max_weight {
                    Some(w) => LemmaRanges::bounded(w),
                    None => LemmaRanges::default(),
                };
                vec![VerificationReport::timed(|| lemma_checks(&ranges))]
            }
            Claim::All => [
                Claim::StabLs,
                Claim::StabLq,
                Claim::ClosureLs,
                Claim::ClosureLq,
                Claim::Theta,
                Claim::Lemmas,
            ]
            .into_iter()
            .flat_map(|c| self.verify_claim(c, max_weight))
            .collect(),
        }
    }
}

/// `verify_stab_ls` with default caps.
pub fn verify_stab_ls(max_weight: u32) -> VerificationReport {
    Workbench::new().verify_stab_ls(max_weight)
}

/// `verify_stab_lq` with default caps.
pub fn verify_stab_lq(max_weight: u32) -> VerificationReport {
    Workbench::new().verify_stab_lq(max_weight)
}

pub fn verify_closure(space: Space, max_total: u32) -> Result<VerificationReport> {
    Workbench::new().verify_closure(space, max_total)
}

pub fn verify_theta(max_weight: u32) -> VerificationReport {
    Workbench::new().verify_theta(max_weight)
}
