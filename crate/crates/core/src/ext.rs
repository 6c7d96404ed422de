//! Decision procedures and closed-form answers for Ext groups between
//! parabolically induced representations, plus the supporting simple-root
//! sets and torus-cohomology Poincaré series.
//!
//! Each prediction carries the name of the decision rule that produced it;
//! when no rule applies the verdict is `Undetermined` rather than a guess.

use crate::character::{chars_equal, delta_w, star, Mode, SmoothCharacter, SymbolAction};
use crate::error::Result;
use crate::root_datum::RootDatum;
use crate::subset::Subset;
use crate::weyl::WeylGroup;
use serde::{Deserialize, Serialize};

/// The special simple-root sets attached to a Levi subset `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialSets {
    /// Simple roots whose root group has `F`-dimension 1.
    pub delta_g1: Subset,
    /// Simple roots orthogonal to every root in `I`.
    pub perp: Subset,
    /// The intersection of the two.
    pub perp1: Subset,
}

pub fn special_sets(rd: &RootDatum, i: Subset) -> Result<SpecialSets> {
    rd.check_subset(i)?;
    let rank = rd.rank();
    let delta_g1 = Subset::from_indices((0..rank).filter(|&a| rd.d_simple(a) == 1));
    let perp = Subset::from_indices((0..rank).filter(|&a| {
        i.iter().all(|b| rd.pairing_int(rd.simple(a).coeffs(), b) == 0)
    }));
    Ok(SpecialSets { delta_g1, perp, perp1: perp.intersect(delta_g1) })
}

/// Caller-asserted hypotheses under which the continuous cohomology of the
/// minimal Levi is evaluated.
#[derive(Clone, Copy, Debug, Default, Serialize, Deserialize)]
pub struct TorusAssumptions {
    /// The minimal Levi is a split torus of rank `z_dim`.
    pub z_split: bool,
    /// `p` is odd and `F` contains no `p`-th roots of unity.
    pub p_odd_no_p_roots: bool,
}

impl TorusAssumptions {
    pub fn granted() -> TorusAssumptions {
        TorusAssumptions { z_split: true, p_odd_no_p_roots: true }
    }

    fn all(&self) -> bool {
        self.z_split && self.p_odd_no_p_roots
    }
}

/// Poincaré series of the continuous cohomology of the split torus of rank
/// `z_dim`: `(1+t)^{z_dim·(f+1)}`, returned as its coefficient list.
/// `None` when the assumptions are not granted.
pub fn torus_poincare(rd: &RootDatum, assumptions: &TorusAssumptions) -> Option<Vec<u64>> {
    if !assumptions.all() {
        return None;
    }
    let n = (rd.z_dim() * (rd.f() + 1)) as usize;
    Some(binomial_row(n))
}

/// Row `n` of Pascal's triangle.
pub fn binomial_row(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![1u64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = row[k - 1] + row[k];
        }
        row = next;
    }
    row
}

/// A qualifying Weyl element in the principal-series necessary condition.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CandidateW {
    /// Reduced word, 1-based indices.
    pub word: Vec<usize>,
    /// `f·d_w`.
    pub degree: u64,
    pub character: SmoothCharacter,
}

/// One Hom summand of a direct-sum answer, indexed by a simple root.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HomSummand {
    /// 1-based simple-root index.
    pub alpha: usize,
    /// The twist `δ_α`.
    pub twist: SmoothCharacter,
    /// The Levi over which the Hom is taken.
    pub levi: Subset,
    pub domain: String,
    pub codomain: String,
}

/// Which argument of the transferred Ext is further induced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Source,
    Target,
}

/// An Ext group transferred to a Levi.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Transfer {
    pub levi: Subset,
    pub degree: u64,
    /// Present when one argument is induced from a smaller parabolic
    /// inside the Levi: `(side, parabolic subset)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced: Option<(Side, Subset)>,
    /// At the critical degree the transfer is a four-term exact sequence
    /// whose third term is this direct sum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<HomSummand>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Vanishes,
    Dimension { dim: u64 },
    TransferredToLevi { transfer: Transfer },
    HomSum { summands: Vec<HomSummand> },
    NecessaryCondition { candidates: Vec<CandidateW> },
    Undetermined,
}

/// A prediction together with the decision rule that produced it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtPrediction {
    pub verdict: Verdict,
    pub rule: String,
}

impl ExtPrediction {
    fn new(verdict: Verdict, rule: &str) -> ExtPrediction {
        ExtPrediction { verdict, rule: rule.to_string() }
    }
}

/// Query for Ext between two parabolic inductions of abstract
/// representations `V` of `M_I` and `W` of `M_K`.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ParabolicExtQuery {
    pub i: Subset,
    pub k: Subset,
    pub degree: u64,
    pub left_cuspidal: bool,
    pub right_cuspidal: bool,
    pub distinct_central_characters: bool,
}

/// Whether the characters `{χ⋆w : w ∈ D_{I,∅}}` are pairwise distinct, the
/// hypothesis under which the spectral comparison collapses to a single
/// degree.
pub fn is_generic(
    w: &WeylGroup,
    i: Subset,
    chi: &SmoothCharacter,
    action: &SymbolAction,
) -> Result<bool> {
    let reps = w.dml(i, Subset::EMPTY)?;
    let moved: Vec<SmoothCharacter> =
        reps.iter().map(|&e| star(w, chi, e, action)).collect::<Result<_>>()?;
    for a in 0..moved.len() {
        for b in a + 1..moved.len() {
            if chars_equal(&moved[a], &moved[b])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Predict `Ext^r(pInd_{P_I}^G χ, pInd_B^G χ')`.
///
/// The necessary condition produces the list of `w ∈ D_{I,∅}` with
/// `f·d_w ≤ r` and `χ' ≅ χ⋆w`; an empty list means the group vanishes.
/// Under genericity of `χ` and the torus assumptions the dimension is the
/// binomial coefficient read off the torus Poincaré series.
pub fn predict_ps_ext(
    w: &WeylGroup,
    i: Subset,
    chi: &SmoothCharacter,
    chi_prime: &SmoothCharacter,
    r: u64,
    assumptions: &TorusAssumptions,
    action: &SymbolAction,
) -> Result<ExtPrediction> {
    let f = w.datum().f();
    let mut candidates = Vec::new();
    for e in w.dml(i, Subset::EMPTY)? {
        let j = f * w.d_w(e);
        if j > r {
            continue;
        }
        let moved = star(w, chi, e, action)?;
        if chars_equal(chi_prime, &moved)? {
            candidates.push((e, j, moved));
        }
    }
    if candidates.is_empty() {
        return Ok(ExtPrediction::new(Verdict::Vanishes, "ps-no-matching-twist"));
    }
    if is_generic(w, i, chi, action)? && assumptions.all() {
        // Genericity makes the qualifying w unique.
        debug_assert_eq!(candidates.len(), 1);
        let (_, j, _) = candidates[0];
        let poincare = torus_poincare(w.datum(), assumptions).expect("assumptions granted");
        let exp = (r - j) as usize;
        let dim = poincare.get(exp).copied().unwrap_or(0);
        return Ok(ExtPrediction::new(Verdict::Dimension { dim }, "ps-generic-collapse"));
    }
    let candidates = candidates
        .into_iter()
        .map(|(e, j, character)| CandidateW {
            word: w.word_external(e),
            degree: j,
            character,
        })
        .collect();
    Ok(ExtPrediction::new(
        Verdict::NecessaryCondition { candidates },
        "ps-necessary-condition",
    ))
}

fn hom_summand(w: &WeylGroup, alpha: usize, i: Subset, domain: String, codomain: String) -> HomSummand {
    let rd = w.datum();
    // s_α fixes exactly the part of I orthogonal to α.
    let levi = Subset::from_indices(
        i.iter().filter(|&b| rd.pairing_int(rd.simple(b).coeffs(), alpha) == 0),
    );
    HomSummand {
        alpha: alpha + 1,
        twist: delta_w(w, w.gen(alpha), Mode::Formal),
        levi,
        domain,
        codomain,
    }
}

/// Clause selection for Ext between parabolic inductions of abstract
/// representations, as a total function of
/// (containment relation, cuspidality/central-character flags, degree).
pub fn predict_parabolic_ext(w: &WeylGroup, q: &ParabolicExtQuery) -> Result<ExtPrediction> {
    let rd = w.datum();
    rd.check_subset(q.i)?;
    rd.check_subset(q.k)?;
    let f = rd.f();
    let r = q.degree;
    let (i, k) = (q.i, q.k);

    if i == k {
        let sets = special_sets(rd, i)?;
        if r == f && (q.left_cuspidal || q.right_cuspidal) && q.distinct_central_characters {
            let summands = sets
                .perp1
                .iter()
                .map(|a| hom_summand(w, a, i, "twist(V)".into(), "W".into()))
                .collect();
            return Ok(ExtPrediction::new(
                Verdict::HomSum { summands },
                "equal-cuspidal-distinct-center",
            ));
        }
        if r < f {
            return Ok(ExtPrediction::new(
                Verdict::TransferredToLevi {
                    transfer: Transfer { levi: i, degree: r, induced: None, boundary: None },
                },
                "equal-below-critical-degree",
            ));
        }
        if r == f {
            let boundary = sets
                .delta_g1
                .difference(i)
                .iter()
                .map(|a| {
                    hom_summand(
                        w,
                        a,
                        i,
                        "twist(coinv(V))".into(),
                        "inv(W)".into(),
                    )
                })
                .collect();
            return Ok(ExtPrediction::new(
                Verdict::TransferredToLevi {
                    transfer: Transfer {
                        levi: i,
                        degree: r,
                        induced: None,
                        boundary: Some(boundary),
                    },
                },
                "equal-critical-degree-sequence",
            ));
        }
        return Ok(ExtPrediction::new(Verdict::Undetermined, "no-rule"));
    }

    if k.is_subset_of(i) {
        // P ⊋ Q: transfer to M with the target induced inside the Levi.
        if q.left_cuspidal && r <= f {
            return Ok(ExtPrediction::new(
                Verdict::TransferredToLevi {
                    transfer: Transfer {
                        levi: i,
                        degree: r,
                        induced: Some((Side::Target, k)),
                        boundary: None,
                    },
                },
                "descending-left-cuspidal",
            ));
        }
        return Ok(ExtPrediction::new(Verdict::Undetermined, "no-rule"));
    }

    if i.is_subset_of(k) {
        // P ⊊ Q: transfer to L with the source induced inside the Levi.
        if q.right_cuspidal && r <= f {
            return Ok(ExtPrediction::new(
                Verdict::TransferredToLevi {
                    transfer: Transfer {
                        levi: k,
                        degree: r,
                        induced: Some((Side::Source, i)),
                        boundary: None,
                    },
                },
                "ascending-right-cuspidal",
            ));
        }
        return Ok(ExtPrediction::new(Verdict::Undetermined, "no-rule"));
    }

    // Incomparable parabolics.
    if q.left_cuspidal && q.right_cuspidal && r == 1 {
        return Ok(ExtPrediction::new(Verdict::Vanishes, "incomparable-degree-one"));
    }
    Ok(ExtPrediction::new(Verdict::Undetermined, "no-rule"))
}

/// Counterexample record for [`claim_check`].
#[derive(Clone, Debug)]
pub struct ClaimCounterexample {
    pub alpha: usize,
    pub i: Subset,
    pub k: Subset,
}

/// The root-combinatorics claim underlying the incomparable-parabolics
/// vanishing: if `Σ_I ∩ s_α(Σ⁺∖Σ_K⁺) = ∅` and
/// `(Σ⁺∖Σ_I⁺) ∩ s_α(Σ_K) = ∅` then `I = K`.  Exhaustive over all
/// `(α, I, K)`; returns the first counterexample, if any.
pub fn claim_check(w: &WeylGroup) -> Option<ClaimCounterexample> {
    let rd = w.datum();
    let rank = rd.rank();
    for alpha in 0..rank {
        for i in Subset::all(rank) {
            for k in Subset::all(rank) {
                if claim_hypotheses(w, alpha, i, k) && i != k {
                    return Some(ClaimCounterexample { alpha, i, k });
                }
            }
        }
    }
    None
}

fn claim_hypotheses(w: &WeylGroup, alpha: usize, i: Subset, k: Subset) -> bool {
    let rd = w.datum();
    let levi_k = rd.positive_of_levi(k);
    // M ∩ s_α(N) trivial: no root of Σ_I is s_α of a root of N.
    let cond1 = rd.positive_roots().iter().enumerate().all(|(idx, beta)| {
        if levi_k.contains(&idx) {
            return true;
        }
        let image = rd.reflect_root(alpha, beta);
        let abs = if image.is_positive() { image } else { image.negated() };
        !abs.support().is_subset_of(i)
    });
    if !cond1 {
        return false;
    }
    // s_α⁻¹(U) ∩ L trivial: s_α of no root of Σ_K lands in Σ_U.
    levi_k.iter().all(|&idx| {
        let beta = &rd.positive_roots()[idx];
        [beta.clone(), beta.negated()].iter().all(|b| {
            let image = rd.reflect_root(alpha, b);
            !(image.is_positive() && !image.support().is_subset_of(i))
        })
    })
}

/// One-step evaluator for the `M∩s_α(N) = {1}` style conditions, exposed
/// for the verification suite.
pub fn claim_hypotheses_hold(w: &WeylGroup, alpha: usize, i: Subset, k: Subset) -> bool {
    claim_hypotheses(w, alpha, i, k)
}
