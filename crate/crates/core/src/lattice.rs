//! Multiplicity-free Jordan–Hölder lattices and signed coefficient
//! complexes, with exactness decided by exact rational linear algebra.
//!
//! A principal series `pInd_{P_S}^{M_K}` is modeled by the upward-closed
//! family `{J : S ⊆ J ⊆ K}` of constituent labels (each `J` labeling the
//! generalized Steinberg representation attached to `J`).  Sums of
//! submodules are unions of constituent sets, intersections are
//! intersections.  The complexes are realized on the constituent basis as
//! integer matrices with entries `0, ±1`; inclusions act as the identity on
//! shared constituents.  Exactness is a rank computation over the
//! rationals — never floating point.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::root_datum::RootDatum;
use crate::subset::Subset;
use crate::Rational;
use std::collections::{BTreeMap, BTreeSet};

/// An upward-closed family of constituent labels inside the interval
/// `[∅, K]`, modeling a multiplicity-free module over the ambient `M_K`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultFreeModule {
    ambient: Subset,
    constituents: BTreeSet<Subset>,
}

impl MultFreeModule {
    /// The Jordan–Hölder family of `pInd_{P_S}^{M_K}`: all `J` with
    /// `S ⊆ J ⊆ K`, hence `2^{|K∖S|}` constituents.
    pub fn jh_of_pind(k: Subset, s: Subset) -> Result<MultFreeModule> {
        if !s.is_subset_of(k) {
            return Err(Error::SubsetNotContained(s.display(), k.display()));
        }
        let constituents = k
            .difference(s)
            .power_set()
            .map(|extra| s.union(extra))
            .collect();
        Ok(MultFreeModule { ambient: k, constituents })
    }

    pub fn new(ambient: Subset, constituents: BTreeSet<Subset>) -> Result<MultFreeModule> {
        let m = MultFreeModule { ambient, constituents };
        if !m.constituents.iter().all(|c| c.is_subset_of(ambient)) {
            return Err(Error::SubsetNotContained(
                "constituent".into(),
                ambient.display(),
            ));
        }
        if !m.is_upward_closed() {
            return Err(Error::InvalidParameters(
                "constituent family is not upward-closed".into(),
            ));
        }
        Ok(m)
    }

    pub fn ambient(&self) -> Subset {
        self.ambient
    }

    pub fn constituents(&self) -> &BTreeSet<Subset> {
        &self.constituents
    }

    pub fn len(&self) -> usize {
        self.constituents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constituents.is_empty()
    }

    pub fn is_upward_closed(&self) -> bool {
        self.constituents.iter().all(|&c| {
            self.ambient
                .difference(c)
                .iter()
                .all(|j| self.constituents.contains(&c.with(j)))
        })
    }

    /// Sum of submodules: union of constituent sets.
    pub fn sum(&self, other: &MultFreeModule) -> Result<MultFreeModule> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(MultFreeModule {
            ambient: self.ambient,
            constituents: self.constituents.union(&other.constituents).cloned().collect(),
        })
    }

    /// Intersection of submodules: intersection of constituent sets.
    pub fn intersect(&self, other: &MultFreeModule) -> Result<MultFreeModule> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(MultFreeModule {
            ambient: self.ambient,
            constituents: self
                .constituents
                .intersection(&other.constituents)
                .cloned()
                .collect(),
        })
    }
}

/// Parameters of a coefficient complex `C•_{I1,K}(I, I0)` with a total
/// order on the simple roots.
#[derive(Clone, Debug)]
pub struct ComplexParams {
    pub i0: Subset,
    pub i1: Subset,
    pub i: Subset,
    pub k: Subset,
    /// Simple-root indices listed in `≺`-increasing order.
    pub order: Vec<usize>,
}

/// One direct summand of a term: the index subset `J ⊆ I1∖I0` together
/// with the module `pInd_{P_{(I∪J)∩K}}^{M_K}`.
#[derive(Clone, Debug)]
pub struct TermSummand {
    pub j: Subset,
    pub module: MultFreeModule,
}

/// A poset-indexed complex realized as exact matrices on the constituent
/// basis, concentrated in degrees `−|I1∖I0| .. 0`.
#[derive(Clone, Debug)]
pub struct CoefficientComplex {
    pub params: ComplexParams,
    /// Terms by degree, ascending.
    pub terms: BTreeMap<i64, Vec<TermSummand>>,
    /// Flattened basis per degree: `(J, constituent)` pairs.
    pub basis: BTreeMap<i64, Vec<(Subset, Subset)>>,
    /// `d^n : C^n → C^{n+1}` for `n < 0`.
    pub diffs: BTreeMap<i64, Mat<Rational>>,
}

/// Build `C•_{I1,K}(I, I0)` for a total order `≺` given as the simple-root
/// indices in increasing order.
pub fn build_complex(
    rd: &RootDatum,
    i0: Subset,
    i1: Subset,
    i: Subset,
    k: Subset,
    order: &[usize],
) -> Result<CoefficientComplex> {
    let rank = rd.rank();
    for s in [i0, i1, i, k] {
        rd.check_subset(s)?;
    }
    if !i.is_subset_of(i1) || !k.is_subset_of(i1) {
        return Err(Error::InvalidParameters(
            "I and K must be contained in I1".into(),
        ));
    }
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..rank).collect::<Vec<_>>() {
        return Err(Error::InvalidParameters(
            "order must be a permutation of the simple roots".into(),
        ));
    }
    let mut prec = vec![0usize; rank];
    for (pos, &idx) in order.iter().enumerate() {
        prec[idx] = pos;
    }

    let index_set = i1.difference(i0);
    let m = index_set.len() as i64;

    let mut terms: BTreeMap<i64, Vec<TermSummand>> = BTreeMap::new();
    let mut basis: BTreeMap<i64, Vec<(Subset, Subset)>> = BTreeMap::new();
    for n in -m..=0 {
        let mut summands = Vec::new();
        let mut degree_basis = Vec::new();
        for j in index_set.power_set() {
            if j.len() as i64 != -n {
                continue;
            }
            let module = MultFreeModule::jh_of_pind(k, i.union(j).intersect(k))?;
            for &c in module.constituents() {
                degree_basis.push((j, c));
            }
            summands.push(TermSummand { j, module });
        }
        terms.insert(n, summands);
        basis.insert(n, degree_basis);
    }

    let sign = |carrier: Subset, j0: usize| -> i64 {
        let below = carrier.iter().filter(|&j| prec[j] < prec[j0]).count();
        if below % 2 == 0 {
            1
        } else {
            -1
        }
    };

    let mut diffs = BTreeMap::new();
    for n in -m..0 {
        let src = &basis[&n];
        let dst = &basis[&(n + 1)];
        let dst_index: BTreeMap<(Subset, Subset), usize> =
            dst.iter().enumerate().map(|(r, &key)| (key, r)).collect();
        let mut mat = Mat::<Rational>::zeros(dst.len(), src.len());
        for (col, &(j, c)) in src.iter().enumerate() {
            for j0 in j.iter() {
                let target = (j.without(j0), c);
                let row = dst_index[&target];
                let eps = sign(i0.union(j.without(j0)), j0);
                mat.set(row, col, Rational::from_integer(eps));
            }
        }
        diffs.insert(n, mat);
    }

    let cx = CoefficientComplex {
        params: ComplexParams { i0, i1, i, k, order: order.to_vec() },
        terms,
        basis,
        diffs,
    };
    debug_assert!(cx.dd_is_zero(), "sign telescoping failed");
    Ok(cx)
}

impl CoefficientComplex {
    pub fn min_degree(&self) -> i64 {
        *self.terms.keys().next().unwrap_or(&0)
    }

    pub fn dim(&self, n: i64) -> usize {
        self.basis.get(&n).map_or(0, Vec::len)
    }

    /// Whether `d ∘ d = 0` holds for all composable pairs.
    pub fn dd_is_zero(&self) -> bool {
        self.diffs
            .iter()
            .all(|(&n, d)| match self.diffs.get(&(n + 1)) {
                Some(next) => next.mul(d).is_zero(),
                None => true,
            })
    }
}

/// Cohomology of a coefficient complex: total dimensions per degree, plus
/// the per-constituent support (the differential preserves the constituent
/// tag, so the complex splits over constituents).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cohomology {
    pub dims: BTreeMap<i64, usize>,
    pub support: BTreeMap<i64, BTreeMap<Subset, usize>>,
}

impl Cohomology {
    pub fn h0_constituents(&self) -> BTreeSet<Subset> {
        self.support
            .get(&0)
            .map(|m| m.keys().copied().collect())
            .unwrap_or_default()
    }

    pub fn vanishes_below_zero(&self) -> bool {
        self.dims.iter().all(|(&n, &d)| n >= 0 || d == 0)
    }
}

/// Exact cohomology by rational rank computations on the constituent basis.
pub fn cohomology(cx: &CoefficientComplex) -> Cohomology {
    let rank_of = |m: Option<&Mat<Rational>>| m.map_or(0, Mat::rank);

    let mut dims = BTreeMap::new();
    for (&n, b) in &cx.basis {
        let out_rank = rank_of(cx.diffs.get(&n));
        let in_rank = rank_of(cx.diffs.get(&(n - 1)));
        dims.insert(n, b.len() - out_rank - in_rank);
    }

    // Per-constituent splitting: restrict each differential to the columns
    // and rows tagged by one constituent.
    let mut tags: BTreeSet<Subset> = BTreeSet::new();
    for b in cx.basis.values() {
        tags.extend(b.iter().map(|&(_, c)| c));
    }
    let mut support: BTreeMap<i64, BTreeMap<Subset, usize>> = BTreeMap::new();
    for &c in &tags {
        let sub_basis: BTreeMap<i64, Vec<usize>> = cx
            .basis
            .iter()
            .map(|(&n, b)| {
                (n, b.iter().enumerate().filter(|(_, &(_, t))| t == c).map(|(i, _)| i).collect())
            })
            .collect();
        let sub_rank = |n: i64| -> usize {
            let Some(d) = cx.diffs.get(&n) else { return 0 };
            let rows = &sub_basis[&(n + 1)];
            let cols = &sub_basis[&n];
            let mut sub = Mat::<Rational>::zeros(rows.len(), cols.len());
            for (ri, &r) in rows.iter().enumerate() {
                for (ci, &cidx) in cols.iter().enumerate() {
                    sub.set(ri, ci, *d.get(r, cidx));
                }
            }
            sub.rank()
        };
        for (&n, rows) in &sub_basis {
            let h = rows.len() - sub_rank(n) - if cx.diffs.contains_key(&(n - 1)) { sub_rank(n - 1) } else { 0 };
            if h > 0 {
                support.entry(n).or_default().insert(c, h);
            }
        }
    }

    // Consistency of the two routes.
    for (&n, &d) in &dims {
        let split_total: usize =
            support.get(&n).map_or(0, |m| m.values().sum());
        debug_assert_eq!(d, split_total, "split cohomology mismatch in degree {n}");
    }

    Cohomology { dims, support }
}

/// Constituent description of `H^0`.
pub fn h0_label(cx: &CoefficientComplex) -> BTreeSet<Subset> {
    cohomology(cx).h0_constituents()
}

/// Euler characteristic of constituent counts, `Σ (−1)^n dim C^n`.
pub fn euler_characteristic(cx: &CoefficientComplex) -> i64 {
    cx.basis
        .iter()
        .map(|(&n, b)| if n % 2 == 0 { b.len() as i64 } else { -(b.len() as i64) })
        .sum()
}

/// Default total order: the datum's simple-root index order.
pub fn default_order(rd: &RootDatum) -> Vec<usize> {
    (0..rd.rank()).collect()
}

#[allow(dead_code)]
fn _scalar_generic_rank_is_available<T: crate::scalar::FieldScalar>(m: &Mat<T>) -> usize {
    m.rank()
}
