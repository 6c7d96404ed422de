//! Finite (relative, weighted) root systems.
//!
//! A [`RootDatum`] is built from a Cartan matrix of finite type together
//! with per-simple-root dimension weights `d_α` (the `F`-dimensions of the
//! root groups, constant on Weyl orbits), the `F`-dimension of the minimal
//! Levi, and the degree `f = [F:Q_p]`.  Roots are integer vectors on the
//! simple-root basis; there is no Euclidean embedding — every formula in the
//! calculus is a pairing or lattice computation.
//!
//! Only reduced systems are supported.  Non-reduced relative systems must be
//! entered as their reduced quotient, with the weights `d_α` absorbing the
//! dimension of the full root group.

use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::Scalar;
use crate::subset::Subset;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Hard cap on the number of positive roots (inversion sets are stored as
/// 64-bit masks).
pub const MAX_POSITIVE_ROOTS: usize = 64;

const CLOSURE_COEFF_BOUND: i64 = 64;
const CLOSURE_ROOT_BOUND: usize = 4096;

/// A root, as an integer vector over the simple-root basis.
///
/// Coefficients are all `≥ 0` (positive root) or all `≤ 0` (negative root);
/// the zero vector is not a root.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Root {
        debug_assert!(
            coeffs.iter().all(|&c| c >= 0) || coeffs.iter().all(|&c| c <= 0),
            "mixed-sign root vector"
        );
        debug_assert!(coeffs.iter().any(|&c| c != 0), "zero vector is not a root");
        Root { coeffs }
    }

    pub fn simple(rank: usize, i: usize) -> Root {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0) && self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root { coeffs: self.coeffs.iter().map(|&c| -c).collect() }
    }

    /// Indices of the simple roots appearing in the expansion.
    pub fn support(&self) -> Subset {
        Subset::from_indices(
            self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i),
        )
    }

    fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }
}

impl std::fmt::Debug for Root {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Input spec for a root datum, as read from a JSON or TOML file.
///
/// Either `type` (a named type such as `"A2"`, `"B2"`, `"G2"`, or a product
/// `"A1xA1"`) or an explicit `cartan` matrix must be given.  Missing fields
/// default to `d ≡ 1`, `z_dim = rank`, `f = 1`, no prime.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct DatumSpec {
    #[serde(rename = "type", default, skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub z_dim: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

/// A validated weighted root datum with its positive roots enumerated.
#[derive(Clone)]
pub struct RootDatum {
    rank: usize,
    cartan: Mat<i64>,
    d: Vec<u64>,
    z_dim: u64,
    f: u64,
    p: Option<u64>,
    positive: Vec<Root>,
    pos_d: Vec<u64>,
    pos_index: BTreeMap<Vec<i64>, usize>,
}

impl RootDatum {
    /// Build a datum from a parsed spec.
    pub fn build(spec: &DatumSpec) -> Result<RootDatum> {
        let cartan = match (&spec.named, &spec.cartan) {
            (Some(name), None) => named_cartan(name)?,
            (None, Some(rows)) => {
                let rank = rows.len();
                if rank == 0 || rows.iter().any(|r| r.len() != rank) {
                    return Err(Error::InvalidCartan("matrix must be square and nonempty".into()));
                }
                Mat::from_rows(rows.clone())
            }
            _ => {
                return Err(Error::InvalidSpec(
                    "exactly one of `type` and `cartan` must be given".into(),
                ))
            }
        };
        let rank = cartan.rows();
        if rank >= 32 {
            return Err(Error::InvalidCartan("rank must be below 32".into()));
        }
        validate_cartan(&cartan)?;

        let d = spec.d.clone().unwrap_or_else(|| vec![1; rank]);
        if d.len() != rank {
            return Err(Error::InvalidSpec(format!(
                "weight vector has length {}, expected {rank}",
                d.len()
            )));
        }
        if d.contains(&0) {
            return Err(Error::InvalidSpec("dimension weights must be positive".into()));
        }
        let z_dim = spec.z_dim.unwrap_or(rank as u64);
        let f = spec.f.unwrap_or(1);
        if f == 0 {
            return Err(Error::InvalidSpec("f must be positive".into()));
        }
        let p = spec.p;
        if let Some(p) = p {
            if p < 3 || !is_prime(p) {
                return Err(Error::InvalidSpec(format!("p = {p} is not an odd prime")));
            }
        }

        let positive = enumerate_positive_roots(&cartan)?;
        let pos_index: BTreeMap<Vec<i64>, usize> =
            positive.iter().enumerate().map(|(i, r)| (r.coeffs.clone(), i)).collect();
        let pos_d = extend_weights(&cartan, &positive, &d)?;

        Ok(RootDatum { rank, cartan, d, z_dim, f, p, positive, pos_d, pos_index })
    }

    /// Parse a spec from JSON or TOML text and build the datum.
    pub fn from_spec_str(text: &str) -> Result<RootDatum> {
        let spec: DatumSpec = match serde_json::from_str(text) {
            Ok(s) => s,
            Err(json_err) => toml::from_str(text).map_err(|toml_err| {
                Error::InvalidSpec(format!(
                    "not valid JSON ({json_err}) nor TOML ({toml_err})"
                ))
            })?,
        };
        RootDatum::build(&spec)
    }

    /// Convenience constructor for a named type with default weights.
    pub fn named(name: &str) -> Result<RootDatum> {
        RootDatum::build(&DatumSpec { named: Some(name.to_string()), ..Default::default() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cartan[(i, j)] = ⟨α_j, α_i∨⟩`.
    pub fn cartan(&self) -> &Mat<i64> {
        &self.cartan
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn p(&self) -> Option<u64> {
        self.p
    }

    pub fn z_dim(&self) -> u64 {
        self.z_dim
    }

    pub fn d_simple(&self, i: usize) -> u64 {
        self.d[i]
    }

    /// Positive roots, sorted by (height, coefficients); the first `rank`
    /// entries are the simple roots.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn simple(&self, i: usize) -> Root {
        Root::simple(self.rank, i)
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn positive_index(&self, root: &Root) -> Option<usize> {
        self.pos_index.get(root.coeffs()).copied()
    }

    /// `d_β`, for `β` a root of either sign.
    pub fn d_root(&self, root: &Root) -> u64 {
        let pos = if root.is_positive() { root.clone() } else { root.negated() };
        let idx = self.positive_index(&pos).expect("not a root of this datum");
        self.pos_d[idx]
    }

    pub fn d_positive(&self, idx: usize) -> u64 {
        self.pos_d[idx]
    }

    /// `⟨λ, α_i∨⟩` for integer coefficient vectors.
    pub fn pairing_int(&self, coeffs: &[i64], i: usize) -> i64 {
        (0..self.rank).map(|j| self.cartan.get(i, j) * coeffs[j]).sum()
    }

    /// `⟨λ, α_i∨⟩` for scalar coefficient vectors.
    pub fn pairing_coeffs<T: Scalar>(&self, coeffs: &[T], i: usize) -> T {
        (0..self.rank).fold(T::zero(), |acc, j| {
            acc + T::from_int(*self.cartan.get(i, j)) * coeffs[j].clone()
        })
    }

    /// Simple reflection `s_i` applied to a root.
    pub fn reflect_root(&self, i: usize, root: &Root) -> Root {
        let mut coeffs = root.coeffs.clone();
        coeffs[i] -= self.pairing_int(&root.coeffs, i);
        Root::new(coeffs)
    }

    /// Simple reflection `s_i` applied to a scalar coefficient vector.
    pub fn reflect_coeffs<T: Scalar>(&self, i: usize, coeffs: &[T]) -> Vec<T> {
        let pairing = self.pairing_coeffs(coeffs, i);
        let mut out = coeffs.to_vec();
        out[i] = out[i].clone() - pairing;
        out
    }

    /// The matrix of `s_i` on the root lattice, acting on coefficient
    /// columns.
    pub fn reflection_matrix(&self, i: usize) -> Mat<i64> {
        let mut m = Mat::identity(self.rank);
        for j in 0..self.rank {
            m.set(i, j, m.get(i, j) - self.cartan.get(i, j));
        }
        m
    }

    /// Indices of the positive roots supported on `s` (the positive system
    /// `Σ_s⁺` of the standard Levi `M_s`).
    pub fn positive_of_levi(&self, s: Subset) -> Vec<usize> {
        self.positive
            .iter()
            .enumerate()
            .filter(|(_, r)| r.support().is_subset_of(s))
            .map(|(i, _)| i)
            .collect()
    }

    /// `Σ_{β ∈ Σ_s⁺} d_β`.
    pub fn dim_sigma_plus(&self, s: Subset) -> u64 {
        self.positive_of_levi(s).iter().map(|&i| self.pos_d[i]).sum()
    }

    /// `F`-dimension of the full group.
    pub fn dim_g(&self) -> u64 {
        self.z_dim + 2 * self.dim_sigma_plus(Subset::full(self.rank))
    }

    /// `F`-dimension of the standard parabolic `P_s`.
    pub fn dim_parabolic(&self, s: Subset) -> u64 {
        self.z_dim + self.dim_sigma_plus(s) + self.dim_sigma_plus(Subset::full(self.rank))
    }

    /// Validate that a subset only uses indices below the rank.
    pub fn check_subset(&self, s: Subset) -> Result<()> {
        match s.iter().find(|&i| i >= self.rank) {
            Some(i) => Err(Error::IndexOutOfRange { index: i, rank: self.rank }),
            None => Ok(()),
        }
    }
}

impl std::fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RootDatum")
            .field("rank", &self.rank)
            .field("d", &self.d)
            .field("z_dim", &self.z_dim)
            .field("f", &self.f)
            .field("p", &self.p)
            .field("positive", &self.positive.len())
            .finish()
    }
}

fn validate_cartan(cartan: &Mat<i64>) -> Result<()> {
    let n = cartan.rows();
    for i in 0..n {
        if *cartan.get(i, i) != 2 {
            return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) must be 2")));
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let a = *cartan.get(i, j);
            if a > 0 {
                return Err(Error::InvalidCartan(format!(
                    "off-diagonal entry ({i},{j}) must be nonpositive"
                )));
            }
            let b = *cartan.get(j, i);
            if (a == 0) != (b == 0) {
                return Err(Error::InvalidCartan(format!(
                    "entries ({i},{j}) and ({j},{i}) must vanish together"
                )));
            }
            if a * b > 3 {
                return Err(Error::NonFiniteCartan(format!(
                    "product of entries ({i},{j})·({j},{i}) = {} exceeds 3",
                    a * b
                )));
            }
        }
    }
    Ok(())
}

fn enumerate_positive_roots(cartan: &Mat<i64>) -> Result<Vec<Root>> {
    let rank = cartan.rows();
    let pairing = |coeffs: &[i64], i: usize| -> i64 {
        (0..rank).map(|j| cartan.get(i, j) * coeffs[j]).sum()
    };

    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..rank {
        let mut v = vec![0i64; rank];
        v[i] = 1;
        seen.insert(v.clone());
        queue.push_back(v);
    }
    while let Some(v) = queue.pop_front() {
        for i in 0..rank {
            let mut w = v.clone();
            w[i] -= pairing(&v, i);
            if seen.contains(&w) {
                continue;
            }
            if w.iter().any(|&c| c.abs() > CLOSURE_COEFF_BOUND) {
                return Err(Error::NonFiniteCartan(
                    "reflection closure does not terminate".into(),
                ));
            }
            let pos = w.iter().all(|&c| c >= 0);
            let neg = w.iter().all(|&c| c <= 0);
            if !pos && !neg {
                return Err(Error::InvalidCartan(
                    "reflection closure produced a mixed-sign vector".into(),
                ));
            }
            seen.insert(w.clone());
            queue.push_back(w);
            if seen.len() > 2 * CLOSURE_ROOT_BOUND {
                return Err(Error::NonFiniteCartan(
                    "reflection closure does not terminate".into(),
                ));
            }
        }
    }

    let mut positive: Vec<Root> = seen
        .into_iter()
        .filter(|v| v.iter().all(|&c| c >= 0))
        .map(Root::new)
        .collect();
    positive.sort_by_key(|r| (r.height(), r.coeffs.clone()));
    if positive.len() > MAX_POSITIVE_ROOTS {
        return Err(Error::TooLarge(MAX_POSITIVE_ROOTS));
    }
    Ok(positive)
}

/// Extend the simple-root weights to all positive roots along Weyl orbits,
/// rejecting Weyl-variant weight maps.
fn extend_weights(cartan: &Mat<i64>, positive: &[Root], d: &[u64]) -> Result<Vec<u64>> {
    let rank = cartan.rows();
    let reflect = |i: usize, r: &Root| -> Root {
        let mut coeffs = r.coeffs().to_vec();
        let pairing: i64 = (0..rank).map(|j| cartan.get(i, j) * coeffs[j]).sum();
        coeffs[i] -= pairing;
        Root::new(coeffs)
    };

    let index: BTreeMap<&[i64], usize> =
        positive.iter().enumerate().map(|(i, r)| (r.coeffs(), i)).collect();
    let pos_of = |r: &Root| -> usize {
        let abs = if r.is_positive() { r.clone() } else { r.negated() };
        index[abs.coeffs()]
    };

    let mut orbit_of = vec![usize::MAX; positive.len()];
    let mut orbit_weight: Vec<Option<(u64, usize)>> = Vec::new();
    for start in 0..positive.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let orbit_id = orbit_weight.len();
        orbit_weight.push(None);
        let mut stack = vec![positive[start].clone()];
        let mut members: BTreeSet<Root> = BTreeSet::new();
        members.insert(positive[start].clone());
        while let Some(r) = stack.pop() {
            orbit_of[pos_of(&r)] = orbit_id;
            for i in 0..rank {
                let s = reflect(i, &r);
                if members.insert(s.clone()) {
                    stack.push(s);
                }
            }
        }
        for r in &members {
            if let Some(i) = (0..rank).find(|&i| r == &Root::simple(rank, i)) {
                match orbit_weight[orbit_id] {
                    None => orbit_weight[orbit_id] = Some((d[i], i)),
                    Some((w, j)) if w != d[i] => {
                        return Err(Error::WeylVariantWeights { a: j, b: i, da: w, db: d[i] })
                    }
                    _ => {}
                }
            }
        }
    }

    orbit_of
        .iter()
        .map(|&orbit| {
            orbit_weight[orbit]
                .map(|(w, _)| w)
                .ok_or_else(|| Error::InvalidCartan("root orbit without a simple root".into()))
        })
        .collect()
}

fn named_cartan(name: &str) -> Result<Mat<i64>> {
    let mut blocks = Vec::new();
    for part in name.split(['x', 'X']) {
        blocks.push(simple_type_cartan(part.trim())?);
    }
    let rank: usize = blocks.iter().map(Mat::rows).sum();
    let mut cartan = Mat::zeros(rank, rank);
    let mut offset = 0;
    for block in &blocks {
        for i in 0..block.rows() {
            for j in 0..block.cols() {
                cartan.set(offset + i, offset + j, *block.get(i, j));
            }
        }
        offset += block.rows();
    }
    Ok(cartan)
}

fn simple_type_cartan(name: &str) -> Result<Mat<i64>> {
    let err = || Error::InvalidSpec(format!("unknown type `{name}`"));
    let mut chars = name.chars();
    let letter = chars.next().ok_or_else(err)?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().map_err(|_| err())?;
    if n == 0 {
        return Err(err());
    }
    // Chains with -1 off the diagonal; B/C/G adjust the last bond.
    let mut m = Mat::identity(n);
    for i in 0..n {
        m.set(i, i, 2);
        if i + 1 < n {
            m.set(i, i + 1, -1);
            m.set(i + 1, i, -1);
        }
    }
    match (letter, n) {
        ('A', _) => {}
        ('B', n) if n >= 2 => m.set(n - 1, n - 2, -2),
        ('C', n) if n >= 2 => m.set(n - 2, n - 1, -2),
        ('D', n) if n >= 4 => {
            m.set(n - 1, n - 2, 0);
            m.set(n - 2, n - 1, 0);
            m.set(n - 1, n - 3, -1);
            m.set(n - 3, n - 1, -1);
        }
        ('G', 2) => m.set(0, 1, -3),
        _ => return Err(err()),
    }
    Ok(m)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}
