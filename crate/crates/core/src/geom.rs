//! Orbit combinatorics for `P\G/Q`: closure order, orbit dimensions,
//! heights, and the symbolic graded pieces of the filtration on derived
//! coinvariants of parabolic induction.
//!
//! The closure order on minimal double-coset representatives is implemented
//! as the reverse Bruhat order; minimal elements have open orbits.  Orbit
//! dimensions are `F`-dimensions computed from weighted root counts, with
//! the minimal Levi contributing `z_dim`; cohomological degrees are
//! normalized over `Q_p`, i.e. multiplied by `f`.

use crate::character::{delta_w, Mode, SmoothCharacter};
use crate::error::{Error, Result};
use crate::root_datum::Root;
use crate::subset::Subset;
use crate::weyl::{Elt, WeylGroup};
use std::collections::{BTreeMap, BTreeSet};

/// One term of the filtration: the data of the composite functor
/// (induction ∘ twist ∘ transport ∘ coinvariants) attached to an orbit.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub w: Elt,
    /// Cohomological shift `-f·d_w`.
    pub shift: i64,
    /// The twisting character `δ_w`.
    pub delta: SmoothCharacter,
    /// `I ∩ w(K)`: the Levi of `M ∩ w(N)` inside `M`.
    pub coinv_levi: Subset,
    /// `w⁻¹(I) ∩ K`: the inducing parabolic subset inside `K`.
    pub ind_levi: Subset,
    pub height: u32,
}

/// The filtration, grouped by height: `groups[i]` holds the pieces of
/// height `i + 1`.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub groups: Vec<Vec<GradedPiece>>,
}

impl Filtration {
    pub fn height(&self) -> usize {
        self.groups.len()
    }

    pub fn pieces(&self) -> impl Iterator<Item = &GradedPiece> {
        self.groups.iter().flatten()
    }
}

fn check_membership(w: &WeylGroup, i: Subset, k: Subset, e: Elt) -> Result<()> {
    w.datum().check_subset(i)?;
    w.datum().check_subset(k)?;
    if !w.is_min_rep(e, i, k) {
        return Err(Error::NotDistinguished);
    }
    Ok(())
}

/// Closure order on `D_{I,K}`: `w ≤ w'` iff the orbit of `w'` lies in the
/// closure of the orbit of `w`.  Reverse Bruhat order.
pub fn closure_leq(w: &WeylGroup, i: Subset, k: Subset, a: Elt, b: Elt) -> Result<bool> {
    check_membership(w, i, k, a)?;
    check_membership(w, i, k, b)?;
    Ok(w.bruhat_leq(b, a))
}

/// `F`-dimension of the orbit `P n_w Q`, as
/// `dim P + dim Q − dim(P ∩ w(Q))`.
pub fn orbit_dim(w: &WeylGroup, i: Subset, k: Subset, e: Elt) -> Result<u64> {
    check_membership(w, i, k, e)?;
    let rd = w.datum();
    // Roots of a standard parabolic: Σ_s ∪ (Σ⁺ ∖ Σ_s⁺).
    let parabolic_roots = |s: Subset| -> BTreeSet<Root> {
        let levi = rd.positive_of_levi(s);
        rd.positive_roots()
            .iter()
            .enumerate()
            .flat_map(|(idx, r)| {
                if levi.contains(&idx) {
                    vec![r.clone(), r.negated()]
                } else {
                    vec![r.clone()]
                }
            })
            .collect()
    };
    let p_roots = parabolic_roots(i);
    let wq_roots: BTreeSet<Root> =
        parabolic_roots(k).iter().map(|r| w.apply_root(e, r)).collect();
    let intersection_d: u64 =
        p_roots.intersection(&wq_roots).map(|r| rd.d_root(r)).sum();
    let dim_intersection = rd.z_dim() + intersection_d;
    Ok(rd.dim_parabolic(i) + rd.dim_parabolic(k) - dim_intersection)
}

/// Heights of all orbits: iterative peeling.  At each step the
/// closure-minimal (= Bruhat-maximal) remaining representatives of maximal
/// orbit dimension are peeled off together.
pub fn heights(w: &WeylGroup, i: Subset, k: Subset) -> Result<BTreeMap<Elt, u32>> {
    let reps = w.dml(i, k)?;
    let dims: BTreeMap<Elt, u64> =
        reps.iter().map(|&e| Ok((e, orbit_dim(w, i, k, e)?))).collect::<Result<_>>()?;
    let mut remaining: BTreeSet<Elt> = reps.into_iter().collect();
    let mut out = BTreeMap::new();
    let mut h = 0u32;
    while !remaining.is_empty() {
        h += 1;
        let open: Vec<Elt> = remaining
            .iter()
            .copied()
            .filter(|&e| !remaining.iter().any(|&v| v != e && w.bruhat_leq(e, v)))
            .collect();
        let max_dim = open.iter().map(|e| dims[e]).max().expect("open set nonempty");
        let peel: Vec<Elt> = open.into_iter().filter(|e| dims[e] == max_dim).collect();
        for e in peel {
            out.insert(e, h);
            remaining.remove(&e);
        }
    }
    Ok(out)
}

/// The symbolic graded pieces of the filtration on `L(N,−) ∘ pInd_P^G`,
/// grouped by height.
pub fn graded_pieces(w: &WeylGroup, i: Subset, k: Subset, mode: Mode) -> Result<Filtration> {
    let reps = w.dml(i, k)?;
    let hmap = heights(w, i, k)?;
    let total = hmap.values().copied().max().unwrap_or(0);
    let f = w.datum().f();
    let mut groups: Vec<Vec<GradedPiece>> = vec![Vec::new(); total as usize];
    for e in reps {
        let coinv_levi = w.kilmoyer(i, e, k)?;
        let ind_levi = w.preimage_subset(e, i, k);
        let height = hmap[&e];
        groups[height as usize - 1].push(GradedPiece {
            w: e,
            shift: -((f * w.d_w(e)) as i64),
            delta: delta_w(w, e, mode),
            coinv_levi,
            ind_levi,
            height,
        });
    }
    Ok(Filtration { groups })
}

/// Certificate for the degree formula `f·d_w = dim(n_w⁻¹(Ū) ∩ N)`: the
/// right-hand side is computed independently as `f·Σ d_β` over
/// `Σ_N ∩ w⁻¹(Σ_Ū)`, and the underlying root-set identity
/// `Σ_N ∩ w⁻¹(Σ_Ū) = Σ⁺ ∩ w⁻¹(−Σ⁺)` is asserted as well.
pub fn check_dw_dim(w: &WeylGroup, i: Subset, k: Subset, e: Elt) -> Result<bool> {
    check_membership(w, i, k, e)?;
    let rd = w.datum();
    let levi_k = rd.positive_of_levi(k);
    // Σ_N ∩ w⁻¹(Σ_Ū): positive roots outside Σ_K⁺ sent by w into
    // −(Σ⁺ ∖ Σ_I⁺).
    let mut rhs_set = BTreeSet::new();
    let mut rhs_sum = 0u64;
    for (idx, beta) in rd.positive_roots().iter().enumerate() {
        if levi_k.contains(&idx) {
            continue;
        }
        let image = w.apply_root(e, beta);
        if image.is_positive() {
            continue;
        }
        if image.negated().support().is_subset_of(i) {
            continue;
        }
        rhs_set.insert(beta.clone());
        rhs_sum += rd.d_positive(idx);
    }
    let inv_set: BTreeSet<Root> = w.inversion_roots(e).into_iter().collect();
    let f = rd.f();
    Ok(rhs_set == inv_set && f * w.d_w(e) == f * rhs_sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::{DatumSpec, RootDatum};

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootDatum::named(name).unwrap()).unwrap()
    }

    fn a1_zdim1() -> WeylGroup {
        let spec = DatumSpec {
            named: Some("A1".into()),
            z_dim: Some(1),
            ..Default::default()
        };
        WeylGroup::new(RootDatum::build(&spec).unwrap()).unwrap()
    }

    #[test]
    fn closure_order_examples() {
        let w = a1_zdim1();
        let (e, s) = (w.identity(), w.gen(0));
        let empty = Subset::EMPTY;
        // BsB is open, B closed: s ≤ e, not conversely.
        assert!(closure_leq(&w, empty, empty, s, e).unwrap());
        assert!(!closure_leq(&w, empty, empty, e, s).unwrap());
        assert!(closure_leq(&w, empty, empty, s, s).unwrap());

        let a2 = group("A2");
        for v in a2.elements() {
            assert!(closure_leq(&a2, empty, empty, a2.longest(), v).unwrap());
        }
        // Non-representatives are rejected.
        let i = Subset::singleton(0);
        assert!(matches!(
            closure_leq(&a2, i, empty, a2.gen(0), a2.identity()),
            Err(Error::NotDistinguished)
        ));
    }

    #[test]
    fn orbit_dims() {
        let w = a1_zdim1();
        let empty = Subset::EMPTY;
        assert_eq!(orbit_dim(&w, empty, empty, w.gen(0)).unwrap(), 3);
        assert_eq!(orbit_dim(&w, empty, empty, w.identity()).unwrap(), 2);
        // Full parabolics: a single orbit of dimension dim G.
        let full = Subset::full(1);
        assert_eq!(orbit_dim(&w, full, full, w.identity()).unwrap(), w.datum().dim_g());

        // A2 with z_dim 2: dim B n_w B = dim B + ℓ(w) = 5 + ℓ(w).
        let a2 = group("A2");
        for e in a2.elements() {
            assert_eq!(
                orbit_dim(&a2, empty, empty, e).unwrap(),
                5 + a2.length(e) as u64
            );
        }
    }

    #[test]
    fn orbit_dim_monotone_along_closure() {
        for name in ["A2", "B2"] {
            let w = group(name);
            let rank = w.datum().rank();
            for i in Subset::all(rank) {
                for k in Subset::all(rank) {
                    let reps = w.dml(i, k).unwrap();
                    for &a in &reps {
                        for &b in &reps {
                            if closure_leq(&w, i, k, a, b).unwrap() {
                                assert!(
                                    orbit_dim(&w, i, k, a).unwrap()
                                        >= orbit_dim(&w, i, k, b).unwrap(),
                                    "{name}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn height_examples() {
        let w = a1_zdim1();
        let empty = Subset::EMPTY;
        let h = heights(&w, empty, empty).unwrap();
        assert_eq!(h[&w.gen(0)], 1);
        assert_eq!(h[&w.identity()], 2);

        let full = Subset::full(1);
        let h = heights(&w, full, full).unwrap();
        assert_eq!(h.len(), 1);
        assert_eq!(h[&w.identity()], 1);

        // A2: heights follow dim B + ℓ(w) peeling.
        let a2 = group("A2");
        let h = heights(&a2, empty, empty).unwrap();
        for e in a2.elements() {
            assert_eq!(h[&e], (3 - a2.length(e) + 1) as u32);
        }
    }

    #[test]
    fn height_formula_for_borel_unweighted() {
        // I = K = ∅, d ≡ 1: height(w) = ℓ(w₀) − ℓ(w) + 1.
        for name in ["A1", "A1xA1", "A2", "B2"] {
            let w = group(name);
            let h = heights(&w, Subset::EMPTY, Subset::EMPTY).unwrap();
            let top = w.length(w.longest()) as u32;
            for e in w.elements() {
                assert_eq!(h[&e], top - w.length(e) as u32 + 1, "{name}");
            }
        }
    }

    #[test]
    fn graded_pieces_examples() {
        // I = K = Δ: a single piece at w = e with shift 0 and trivial δ.
        let a2 = group("A2");
        let full = Subset::full(2);
        let filt = graded_pieces(&a2, full, full, Mode::Formal).unwrap();
        assert_eq!(filt.height(), 1);
        let pieces: Vec<_> = filt.pieces().collect();
        assert_eq!(pieces.len(), 1);
        assert_eq!(pieces[0].w, a2.identity());
        assert_eq!(pieces[0].shift, 0);
        assert!(pieces[0].delta.is_trivial());
        assert_eq!(pieces[0].coinv_levi, full);
        assert_eq!(pieces[0].ind_levi, full);

        // A1, I = K = ∅, f = 1: (e, shift 0) at height 2, (s, −1, δ_s) at 1.
        let w = a1_zdim1();
        let filt = graded_pieces(&w, Subset::EMPTY, Subset::EMPTY, Mode::Formal).unwrap();
        assert_eq!(filt.height(), 2);
        assert_eq!(filt.groups[0].len(), 1);
        assert_eq!(filt.groups[0][0].w, w.gen(0));
        assert_eq!(filt.groups[0][0].shift, -1);
        assert_eq!(filt.groups[0][0].delta.cyclo(), &[1]);
        assert_eq!(filt.groups[1][0].w, w.identity());
        assert_eq!(filt.groups[1][0].shift, 0);

        // A2, I = {α1}, K = ∅: three pieces with shifts 0, −1, −2.
        let filt =
            graded_pieces(&a2, Subset::singleton(0), Subset::EMPTY, Mode::Formal).unwrap();
        let mut shifts: Vec<i64> = filt.pieces().map(|p| p.shift).collect();
        shifts.sort();
        assert_eq!(shifts, vec![-2, -1, 0]);
        assert_eq!(filt.pieces().count(), 3);
    }

    #[test]
    fn graded_piece_levi_consistency() {
        // ind_levi = w⁻¹(coinv_levi) ∩ K, via the root action.
        for name in ["A2", "B2"] {
            let w = group(name);
            let rank = w.datum().rank();
            for i in Subset::all(rank) {
                for k in Subset::all(rank) {
                    let filt = graded_pieces(&w, i, k, Mode::Formal).unwrap();
                    let reps = w.dml(i, k).unwrap();
                    assert_eq!(filt.pieces().count(), reps.len());
                    for p in filt.pieces() {
                        assert!(p.coinv_levi.is_subset_of(i));
                        assert!(p.ind_levi.is_subset_of(k));
                        let image = Subset::from_indices(
                            p.ind_levi
                                .iter()
                                .filter_map(|j| w.image_as_simple(p.w, j)),
                        );
                        assert_eq!(image, p.coinv_levi, "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn dw_dim_examples() {
        let w = a1_zdim1();
        let empty = Subset::EMPTY;
        assert!(check_dw_dim(&w, empty, empty, w.identity()).unwrap());
        assert!(check_dw_dim(&w, empty, empty, w.gen(0)).unwrap());
        // Exhaustive over a rank-2 type with mixed weights.
        let spec = DatumSpec {
            named: Some("B2".into()),
            d: Some(vec![1, 2]),
            f: Some(2),
            ..Default::default()
        };
        let b2 = WeylGroup::new(RootDatum::build(&spec).unwrap()).unwrap();
        for i in Subset::all(2) {
            for k in Subset::all(2) {
                for e in b2.dml(i, k).unwrap() {
                    assert!(check_dw_dim(&b2, i, k, e).unwrap());
                }
            }
        }
    }
}
