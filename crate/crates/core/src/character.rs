//! The weight and character calculus: `α_w`, `ρ`, `δ_w`, twisting elements,
//! the `⋆`-action, and character equality in formal vs concrete (mod `p-1`)
//! mode.
//!
//! A [`SmoothCharacter`] is a finite symbolic description: a cyclotomic part
//! (an integer weight on the simple-root basis, composed with the norm and
//! the mod-`p` cyclotomic character, hence compared mod `p-1` in concrete
//! mode) tensored with an opaque symbolic part over a user-declared
//! alphabet.  The Weyl group acts on the weight by its lattice action and on
//! symbols by a declared permutation-plus-weight action (trivial by
//! default).

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::scalar::Scalar;
use crate::weyl::{Elt, WeylGroup};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A weight: rational coordinates on the simple-root basis.
#[derive(Clone, PartialEq, Debug)]
pub struct Weight<T: Scalar> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Weight<T> {
    pub fn zero(rank: usize) -> Weight<T> {
        Weight { coeffs: vec![T::zero(); rank] }
    }

    pub fn new(coeffs: Vec<T>) -> Weight<T> {
        Weight { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Weight<T> {
        Weight { coeffs: coeffs.iter().map(|&c| T::from_int(c)).collect() }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_integer)
    }

    pub fn add(&self, other: &Weight<T>) -> Weight<T> {
        Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight<T>) -> Weight<T> {
        Weight {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

/// `α_w = Σ_{β ∈ Σ⁺ ∩ w⁻¹(−Σ⁺)} d_β β`, the weighted inversion-set sum.
pub fn alpha_w_int(w: &WeylGroup, e: Elt) -> Vec<i64> {
    let rank = w.datum().rank();
    let mut out = vec![0i64; rank];
    for root in w.inversion_roots(e) {
        let d = w.datum().d_root(&root) as i64;
        for (i, &c) in root.coeffs().iter().enumerate() {
            out[i] += d * c;
        }
    }
    out
}

pub fn alpha_w<T: Scalar>(w: &WeylGroup, e: Elt) -> Weight<T> {
    Weight::from_ints(&alpha_w_int(w, e))
}

/// `ρ = ½ Σ_{β ∈ Σ⁺} d_β β`.
pub fn rho<T: Scalar>(rd: &RootDatum) -> Weight<T> {
    let rank = rd.rank();
    let mut coeffs = vec![T::zero(); rank];
    for (idx, root) in rd.positive_roots().iter().enumerate() {
        let d = rd.d_positive(idx) as i64;
        for (i, &c) in root.coeffs().iter().enumerate() {
            coeffs[i] = coeffs[i].clone() + T::from_ratio(d * c, 2);
        }
    }
    Weight { coeffs }
}

/// Whether `θ` is a twisting element: `⟨θ, α∨⟩ = d_α` for all simple `α`.
pub fn is_twisting<T: Scalar>(rd: &RootDatum, theta: &Weight<T>) -> bool {
    (0..rd.rank()).all(|i| {
        rd.pairing_coeffs(theta.coeffs(), i) == T::from_int(rd.d_simple(i) as i64)
    })
}

/// Comparison mode for characters.
///
/// Concrete mode compares cyclotomic exponents mod `p - 1` (the order of
/// the image of the composite of the norm and the mod-`p` cyclotomic
/// character).  This comparison is exact only for split tori over `Q_p` in
/// the standard coordinates; the subtleties of restricting to the center of
/// a general Levi are delegated to the caller via the symbol alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Exact weights.
    Formal,
    /// Cyclotomic exponents are reduced mod `p - 1`.
    Concrete { p: u64 },
}

impl Mode {
    /// Concrete mode for a datum; errors when the datum has no prime.
    pub fn concrete(rd: &RootDatum) -> Result<Mode> {
        rd.p().map(|p| Mode::Concrete { p }).ok_or(Error::MissingPrime)
    }
}

/// Declared action of the Weyl group on the symbol alphabet: per generator,
/// each symbol maps to an image symbol plus an integer weight added to the
/// cyclotomic part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeclaredAction {
    per_gen: Vec<BTreeMap<String, (String, Vec<i64>)>>,
}

impl DeclaredAction {
    /// Validate the defining relations of the group on the declared data
    /// and return the action.
    pub fn new(
        w: &WeylGroup,
        per_gen: Vec<BTreeMap<String, (String, Vec<i64>)>>,
    ) -> Result<DeclaredAction> {
        let rank = w.datum().rank();
        if per_gen.len() != rank {
            return Err(Error::InvalidSymbolAction(format!(
                "expected one table per generator ({rank}), got {}",
                per_gen.len()
            )));
        }
        let action = DeclaredAction { per_gen };
        let mut alphabet: Vec<&String> = action.per_gen.iter().flat_map(|m| m.keys()).collect();
        alphabet.sort();
        alphabet.dedup();
        // (s_i s_j)^m = e must act as the identity on every symbol, with all
        // accumulated weight shifts cancelling.  m is the order of s_i s_j.
        for i in 0..rank {
            for j in i..rank {
                let mut m = 0;
                let mut x = w.identity();
                loop {
                    x = w.right_mul(w.right_mul(x, i), j);
                    m += 1;
                    if x == w.identity() {
                        break;
                    }
                }
                for name in &alphabet {
                    let mut shift = vec![0i64; rank];
                    let mut cur = (*name).clone();
                    for _ in 0..m {
                        (shift, cur) = action.step(w.datum(), j, shift, &cur)?;
                        (shift, cur) = action.step(w.datum(), i, shift, &cur)?;
                    }
                    if cur != **name || shift.iter().any(|&c| c != 0) {
                        return Err(Error::InvalidSymbolAction(format!(
                            "(s{}s{})^{m} moves symbol `{name}`",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(action)
    }

    fn step(
        &self,
        rd: &RootDatum,
        gen: usize,
        shift: Vec<i64>,
        name: &str,
    ) -> Result<(Vec<i64>, String)> {
        let (image, mu) = self
            .per_gen[gen]
            .get(name)
            .ok_or_else(|| Error::UndeclaredSymbolAction(name.to_string()))?;
        let mut new_shift: Vec<i64> = {
            let pairing = rd.pairing_int(&shift, gen);
            let mut s = shift;
            s[gen] -= pairing;
            s
        };
        for (k, &c) in mu.iter().enumerate() {
            new_shift[k] += c;
        }
        Ok((new_shift, image.clone()))
    }
}

/// How the Weyl group moves the symbolic part of a character.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum SymbolAction {
    /// Every symbol is fixed.
    #[default]
    Trivial,
    Declared(DeclaredAction),
}

/// A smooth character, as cyclotomic weight ⊗ symbolic part.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "CharacterRepr", into = "CharacterRepr")]
pub struct SmoothCharacter {
    cyclo: Vec<i64>,
    sym: BTreeMap<String, i64>,
    mode: Mode,
}

impl SmoothCharacter {
    pub fn new(cyclo: Vec<i64>, sym: BTreeMap<String, i64>, mode: Mode) -> SmoothCharacter {
        let mut chi = SmoothCharacter { cyclo, sym, mode };
        chi.reduce();
        chi
    }

    pub fn trivial(rank: usize, mode: Mode) -> SmoothCharacter {
        SmoothCharacter { cyclo: vec![0; rank], sym: BTreeMap::new(), mode }
    }

    /// A fresh opaque symbol with zero cyclotomic part.
    pub fn symbol(rank: usize, name: &str, mode: Mode) -> SmoothCharacter {
        SmoothCharacter {
            cyclo: vec![0; rank],
            sym: BTreeMap::from([(name.to_string(), 1)]),
            mode,
        }
    }

    pub fn cyclo(&self) -> &[i64] {
        &self.cyclo
    }

    pub fn sym(&self) -> &BTreeMap<String, i64> {
        &self.sym
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_trivial(&self) -> bool {
        self.cyclo.iter().all(|&c| c == 0) && self.sym.is_empty()
    }

    /// Canonical form: drop zero symbols; in concrete mode reduce the
    /// cyclotomic exponents into `[0, p-2]`.  Idempotent.
    fn reduce(&mut self) {
        self.sym.retain(|_, &mut m| m != 0);
        if let Mode::Concrete { p } = self.mode {
            let modulus = (p - 1) as i64;
            for c in &mut self.cyclo {
                *c = c.rem_euclid(modulus);
            }
        }
    }

    /// Product of characters (addition of exponents).
    pub fn tensor(&self, other: &SmoothCharacter) -> Result<SmoothCharacter> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch);
        }
        let cyclo = self.cyclo.iter().zip(&other.cyclo).map(|(a, b)| a + b).collect();
        let mut sym = self.sym.clone();
        for (name, mult) in &other.sym {
            *sym.entry(name.clone()).or_insert(0) += mult;
        }
        Ok(SmoothCharacter::new(cyclo, sym, self.mode))
    }
}

impl std::fmt::Display for SmoothCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        for (i, &c) in self.cyclo.iter().enumerate() {
            if c != 0 {
                parts.push(format!("{c}·a{}", i + 1));
            }
        }
        for (name, &m) in &self.sym {
            parts.push(if m == 1 { name.clone() } else { format!("{m}·{name}") });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "eps[{}]", parts.join(" + "))
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr {
    cyclo: Vec<i64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    sym: BTreeMap<String, i64>,
    mode: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    p: Option<u64>,
}

impl From<SmoothCharacter> for CharacterRepr {
    fn from(chi: SmoothCharacter) -> CharacterRepr {
        let (mode, p) = match chi.mode {
            Mode::Formal => ("formal".to_string(), None),
            Mode::Concrete { p } => ("concrete".to_string(), Some(p)),
        };
        CharacterRepr { cyclo: chi.cyclo, sym: chi.sym, mode, p }
    }
}

impl TryFrom<CharacterRepr> for SmoothCharacter {
    type Error = String;

    fn try_from(repr: CharacterRepr) -> std::result::Result<SmoothCharacter, String> {
        let mode = match (repr.mode.as_str(), repr.p) {
            ("formal", None) => Mode::Formal,
            ("concrete", Some(p)) => Mode::Concrete { p },
            ("concrete", None) => return Err("concrete mode requires p".into()),
            (m, _) => return Err(format!("unknown mode `{m}`")),
        };
        Ok(SmoothCharacter::new(repr.cyclo, repr.sym, mode))
    }
}

/// `δ_w`: the character shifting the graded piece at `w`, with cyclotomic
/// part `α_w` and no symbolic part.
pub fn delta_w(w: &WeylGroup, e: Elt, mode: Mode) -> SmoothCharacter {
    SmoothCharacter::new(alpha_w_int(w, e), BTreeMap::new(), mode)
}

/// Weyl transport `n_{w*}^{-1} χ`: `w⁻¹` on the cyclotomic weight, the
/// declared action on symbols.
pub fn transport(
    w: &WeylGroup,
    e: Elt,
    chi: &SmoothCharacter,
    action: &SymbolAction,
) -> Result<SmoothCharacter> {
    let rank = w.datum().rank();
    let w_inv = w.inverse(e);
    let matrix = w.action(w_inv);
    let mut cyclo: Vec<i64> = (0..rank)
        .map(|i| (0..rank).map(|j| matrix.get(i, j) * chi.cyclo[j]).sum())
        .collect();
    let mut sym: BTreeMap<String, i64> = BTreeMap::new();
    for (name, &mult) in &chi.sym {
        match action {
            SymbolAction::Trivial => {
                *sym.entry(name.clone()).or_insert(0) += mult;
            }
            SymbolAction::Declared(da) => {
                let mut shift = vec![0i64; rank];
                let mut cur = name.clone();
                for &i in w.word(w_inv).iter().rev() {
                    (shift, cur) = da.step(w.datum(), i as usize, shift, &cur)?;
                }
                *sym.entry(cur).or_insert(0) += mult;
                for (k, &c) in shift.iter().enumerate() {
                    cyclo[k] += mult * c;
                }
            }
        }
    }
    Ok(SmoothCharacter::new(cyclo, sym, chi.mode))
}

/// The right action `χ ⋆ w = δ_w ⊗ n_{w*}^{-1} χ`.
pub fn star(
    w: &WeylGroup,
    chi: &SmoothCharacter,
    e: Elt,
    action: &SymbolAction,
) -> Result<SmoothCharacter> {
    delta_w(w, e, chi.mode()).tensor(&transport(w, e, chi, action)?)
}

/// Equality of characters; formal mode compares exact weights plus symbols,
/// concrete mode compares weights mod `p - 1` plus symbols.
pub fn chars_equal(a: &SmoothCharacter, b: &SmoothCharacter) -> Result<bool> {
    if a.mode != b.mode {
        return Err(Error::ModeMismatch);
    }
    // Both are stored reduced.
    Ok(a.cyclo == b.cyclo && a.sym == b.sym)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::DatumSpec;
    use crate::Rational;
    use proptest::prelude::*;

    fn group(name: &str) -> WeylGroup {
        WeylGroup::new(RootDatum::named(name).unwrap()).unwrap()
    }

    fn group_spec(spec: DatumSpec) -> WeylGroup {
        WeylGroup::new(RootDatum::build(&spec).unwrap()).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn alpha_w_examples() {
        let a1 = group("A1");
        assert_eq!(alpha_w_int(&a1, a1.identity()), vec![0]);
        assert_eq!(alpha_w_int(&a1, a1.gen(0)), vec![1]);
        let a2 = group("A2");
        // Sum over all three positive roots: α1 + α2 + (α1+α2).
        assert_eq!(alpha_w_int(&a2, a2.longest()), vec![2, 2]);
    }

    #[test]
    fn rho_examples() {
        let a1 = RootDatum::named("A1").unwrap();
        assert_eq!(rho::<Rational>(&a1).coeffs(), &[Rational::new(1, 2)]);
        let a2 = RootDatum::named("A2").unwrap();
        assert_eq!(rho::<Rational>(&a2).coeffs(), &[q(1), q(1)]);
        let prod = RootDatum::named("A1xA1").unwrap();
        assert_eq!(
            rho::<Rational>(&prod).coeffs(),
            &[Rational::new(1, 2), Rational::new(1, 2)]
        );
    }

    #[test]
    fn rho_pairs_to_d() {
        for (name, d) in [("A2", None), ("B2", Some(vec![1, 2])), ("G2", None)] {
            let spec = DatumSpec { named: Some(name.into()), d, ..Default::default() };
            let rd = RootDatum::build(&spec).unwrap();
            let r = rho::<Rational>(&rd);
            for i in 0..rd.rank() {
                assert_eq!(
                    rd.pairing_coeffs(r.coeffs(), i),
                    q(rd.d_simple(i) as i64),
                    "{name}"
                );
            }
        }
    }

    #[test]
    fn alpha_w_is_rho_minus_w_inv_rho() {
        for name in ["A2", "B2", "G2", "B3"] {
            let w = group(name);
            let r = rho::<Rational>(w.datum());
            for e in w.elements() {
                let lhs = alpha_w::<Rational>(&w, e);
                let transported = Weight::new(w.apply_coeffs(w.inverse(e), r.coeffs()));
                assert_eq!(lhs, r.sub(&transported), "{name}");
            }
        }
    }

    #[test]
    fn cocycle_and_injectivity() {
        for name in ["A2", "B2", "G2"] {
            let w = group(name);
            let all: Vec<Vec<i64>> =
                w.elements().map(|e| alpha_w_int(&w, e)).collect();
            // Injectivity of w ↦ α_w.
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), w.order(), "{name}: injective");
            // α_{vw} = α_w + w⁻¹(α_v).
            for v in w.elements() {
                for u in w.elements() {
                    let vw = w.mul(v, u);
                    let lhs = alpha_w_int(&w, vw);
                    let alpha_v: Vec<i64> =
                        w.apply_ints(w.inverse(u), &alpha_w_int(&w, v));
                    let rhs: Vec<i64> = alpha_w_int(&w, u)
                        .iter()
                        .zip(&alpha_v)
                        .map(|(a, b)| a + b)
                        .collect();
                    assert_eq!(lhs, rhs, "{name}: cocycle");
                }
            }
        }
    }

    #[test]
    fn twisting_examples() {
        let a2 = RootDatum::named("A2").unwrap();
        let theta = Weight::<Rational>::from_ints(&[1, 1]);
        assert!(is_twisting(&a2, &theta));
        assert!(theta.is_integral());
        let a1 = RootDatum::named("A1").unwrap();
        assert!(!is_twisting(&a1, &Weight::<Rational>::zero(1)));
        let half = Weight::new(vec![Rational::new(1, 2)]);
        assert!(is_twisting(&a1, &half));
        assert!(!half.is_integral());
    }

    #[test]
    fn twisting_factorization() {
        // α_w = θ − w⁻¹(θ) for any twisting element θ.
        for (name, d) in [("A2", None), ("B2", Some(vec![2, 1])), ("G2", None)] {
            let spec = DatumSpec { named: Some(name.into()), d, ..Default::default() };
            let w = group_spec(spec);
            let theta = rho::<Rational>(w.datum());
            assert!(is_twisting(w.datum(), &theta));
            for e in w.elements() {
                let moved = Weight::new(w.apply_coeffs(w.inverse(e), theta.coeffs()));
                assert_eq!(alpha_w::<Rational>(&w, e), theta.sub(&moved), "{name}");
            }
        }
    }

    #[test]
    fn delta_examples() {
        let a1 = group_spec(DatumSpec {
            named: Some("A1".into()),
            p: Some(5),
            ..Default::default()
        });
        let mode = Mode::concrete(a1.datum()).unwrap();
        assert!(delta_w(&a1, a1.identity(), mode).is_trivial());
        assert_eq!(delta_w(&a1, a1.gen(0), mode).cyclo(), &[1]);
        let a2 = group("A2");
        assert_eq!(delta_w(&a2, a2.longest(), Mode::Formal).cyclo(), &[2, 2]);
    }

    #[test]
    fn star_examples() {
        // GL2-style datum: rank-1 A1 with z_dim 2, p = 5.
        let w = group_spec(DatumSpec {
            named: Some("A1".into()),
            z_dim: Some(2),
            p: Some(5),
            ..Default::default()
        });
        let mode = Mode::concrete(w.datum()).unwrap();
        let chi = SmoothCharacter::new(vec![2], BTreeMap::new(), mode);
        // Hand oracle mod 4: α_s + s(2α) = 1·α − 2·α = −α ≡ 3α.
        let moved = star(&w, &chi, w.gen(0), &SymbolAction::Trivial).unwrap();
        assert_eq!(moved.cyclo(), &[3]);
        // χ ⋆ e = χ.
        let fixed = star(&w, &chi, w.identity(), &SymbolAction::Trivial).unwrap();
        assert!(chars_equal(&fixed, &chi).unwrap());
        // Formal mode, χ = 0: χ ⋆ w has cyclotomic part α_w.
        let a2 = group("A2");
        let zero = SmoothCharacter::trivial(2, Mode::Formal);
        for e in a2.elements() {
            let out = star(&a2, &zero, e, &SymbolAction::Trivial).unwrap();
            assert_eq!(out.cyclo(), alpha_w_int(&a2, e).as_slice());
        }
    }

    #[test]
    fn chars_equal_modes() {
        let concrete = Mode::Concrete { p: 5 };
        let a = SmoothCharacter::new(vec![1], BTreeMap::new(), concrete);
        let b = SmoothCharacter::new(vec![5], BTreeMap::new(), concrete);
        assert!(chars_equal(&a, &b).unwrap());
        let fa = SmoothCharacter::new(vec![1], BTreeMap::new(), Mode::Formal);
        let fb = SmoothCharacter::new(vec![5], BTreeMap::new(), Mode::Formal);
        assert!(!chars_equal(&fa, &fb).unwrap());
        assert!(matches!(chars_equal(&a, &fa), Err(Error::ModeMismatch)));
        let sym_a = SmoothCharacter::symbol(1, "x", Mode::Formal);
        let sym_b = SmoothCharacter::symbol(1, "y", Mode::Formal);
        assert!(!chars_equal(&sym_a, &sym_b).unwrap());
    }

    #[test]
    fn serde_round_trip() {
        let chi = SmoothCharacter::new(
            vec![3, 1],
            BTreeMap::from([("x".to_string(), 2)]),
            Mode::Concrete { p: 7 },
        );
        let json = serde_json::to_string(&chi).unwrap();
        let back: SmoothCharacter = serde_json::from_str(&json).unwrap();
        assert_eq!(back, chi);
    }

    #[test]
    fn declared_action_swap_with_shift() {
        let w = group("A1");
        // x ↦ (y, α), y ↦ (x, α) satisfies T² = id since s(α) = −α.
        let table = BTreeMap::from([
            ("x".to_string(), ("y".to_string(), vec![1])),
            ("y".to_string(), ("x".to_string(), vec![1])),
        ]);
        let action = SymbolAction::Declared(DeclaredAction::new(&w, vec![table]).unwrap());
        let chi = SmoothCharacter::symbol(1, "x", Mode::Formal);
        let s = w.gen(0);
        let moved = star(&w, &chi, s, &action).unwrap();
        assert_eq!(moved.sym(), &BTreeMap::from([("y".to_string(), 1)]));
        // Right-action law: (χ⋆s)⋆s = χ⋆(ss) = χ.
        let back = star(&w, &moved, s, &action).unwrap();
        assert!(chars_equal(&back, &chi).unwrap());
    }

    #[test]
    fn invalid_and_undeclared_actions() {
        let w = group("A1");
        let bad = BTreeMap::from([
            ("x".to_string(), ("y".to_string(), vec![0])),
            ("y".to_string(), ("x".to_string(), vec![1])),
        ]);
        assert!(matches!(
            DeclaredAction::new(&w, vec![bad]),
            Err(Error::InvalidSymbolAction(_))
        ));
        let partial = BTreeMap::from([("x".to_string(), ("x".to_string(), vec![0]))]);
        let action =
            SymbolAction::Declared(DeclaredAction::new(&w, vec![partial]).unwrap());
        let chi = SmoothCharacter::symbol(1, "z", Mode::Formal);
        assert!(matches!(
            star(&w, &chi, w.gen(0), &action),
            Err(Error::UndeclaredSymbolAction(_))
        ));
    }

    proptest! {
        // ⋆ is a right action: exhaustive over W(B2) with random characters.
        #[test]
        fn star_is_right_action(
            cyclo in prop::collection::vec(-6i64..=6, 2),
            xm in -3i64..=3,
            ym in -3i64..=3,
            concrete in prop::bool::ANY,
        ) {
            let w = group_spec(DatumSpec {
                named: Some("B2".into()),
                p: Some(5),
                ..Default::default()
            });
            let mode = if concrete { Mode::Concrete { p: 5 } } else { Mode::Formal };
            let sym = BTreeMap::from([("x".to_string(), xm), ("y".to_string(), ym)]);
            let chi = SmoothCharacter::new(cyclo, sym, mode);
            let act = SymbolAction::Trivial;
            prop_assert!(chars_equal(&star(&w, &chi, w.identity(), &act).unwrap(), &chi).unwrap());
            for v in w.elements() {
                for u in w.elements() {
                    let seq = star(&w, &star(&w, &chi, v, &act).unwrap(), u, &act).unwrap();
                    let direct = star(&w, &chi, w.mul(v, u), &act).unwrap();
                    prop_assert!(chars_equal(&seq, &direct).unwrap());
                }
            }
        }
    }
}
