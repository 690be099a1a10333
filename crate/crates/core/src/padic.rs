//! Truncations `Z(p^M)` of the p-adic integers, the Prüfer characters
//! `m·ζ_k`, the characters `m·η_k` of `T`, balanced-ternary digits, and the
//! index sets `J_m` together with the finite form of `Q_1 ∩ Q_2`.
//!
//! Every computation happens in a finite quotient with an explicit level.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::circle::UnitRational;
use crate::error::{invalid, Error, Result};
use crate::families::GapSequence;
use crate::polar::{residue_in_t_plus, signed_residue, to_residue, CyclicSet};

pub(crate) fn pow_checked(p: u64, e: u64) -> Result<u64> {
    u32::try_from(e)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .ok_or_else(|| Error::InvalidInput(format!("{p}^{e} does not fit in 64 bits")))
}

pub(crate) fn pow3(e: u64) -> Result<u64> {
    pow_checked(3, e)
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// The quotient `Z(p^M)` of the p-adic integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PadicTruncGroup {
    prime: u64,
    level: u32,
    order: u64,
}

impl PadicTruncGroup {
    pub fn new(prime: u64, level: u32) -> Result<Self> {
        if !is_prime(prime) {
            return invalid(format!("{prime} is not prime"));
        }
        if level == 0 {
            return invalid("level must be at least 1");
        }
        Ok(Self { prime, level, order: pow_checked(prime, level as u64)? })
    }

    pub fn ternary(level: u32) -> Result<Self> {
        Self::new(3, level)
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn element(&self, x: i64) -> u64 {
        to_residue(x, self.order)
    }

    pub fn signed(&self, x: u64) -> i64 {
        signed_residue(x, self.order)
    }

    /// `Z(p^M) → Z(p^{M'})`.
    pub fn project(&self, x: u64, to: &PadicTruncGroup) -> Result<u64> {
        if to.prime != self.prime || to.level > self.level {
            return invalid("projection must go to a lower level of the same prime");
        }
        Ok(x % to.order)
    }
}

/// The character `m·ζ_k` of the 3-adic integers, `ζ_k(1) = 3^{-(k+1)}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
pub struct PruferChar {
    pub multiplier: i64,
    pub index: u32,
}

impl PruferChar {
    pub fn new(multiplier: i64, index: u32) -> Self {
        Self { multiplier, index }
    }

    /// Factors through `Z(3^M)` iff `k + 1 <= M`.
    pub fn factors_through(&self, level: u32) -> bool {
        self.index + 1 <= level
    }

    /// Value at an integer (any lift of a truncated element).
    pub fn eval(&self, x: i64) -> UnitRational {
        let den = BigInt::from(3u32).pow(self.index + 1);
        UnitRational::new(BigInt::from(self.multiplier) * x, den).expect("positive denominator")
    }

    pub fn eval_in(&self, x: u64, level: u32) -> Result<UnitRational> {
        zeta_eval(self.multiplier, self.index, x as i64, level)
    }
}

impl fmt::Display for PruferChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*zeta_{}", self.multiplier, self.index)
    }
}

/// `m·ζ_k(x) = m x / 3^{k+1} mod 1` for `x ∈ Z(3^M)`.
pub fn zeta_eval(m: i64, k: u32, x: i64, level: u32) -> Result<UnitRational> {
    let c = PruferChar::new(m, k);
    if !c.factors_through(level) {
        return invalid(format!("zeta_{k} does not factor through Z(3^{level}); need level >= {}", k + 1));
    }
    Ok(c.eval(x))
}

/// `m·η_k(x) = m 3^k x mod 1`.
pub fn eta_eval(m: i64, k: u32, x: &UnitRational) -> UnitRational {
    x.mul_int(&(BigInt::from(m) * BigInt::from(3u32).pow(k)))
}

/// Balanced-ternary digits. On `Z(3^M)` they are `c_0, …, c_{M-1}` with
/// `x = Σ c_i 3^i`; on `T` they are `c_1, …, c_L` with `y = Σ c_i 3^{-i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BalancedDigits {
    digits: Vec<i8>,
}

fn balanced_low_digits(mut v: i128, count: usize) -> (Vec<i8>, i128) {
    let mut digits = Vec::with_capacity(count);
    for _ in 0..count {
        let r = v.rem_euclid(3);
        let d: i8 = if r == 2 { -1 } else { r as i8 };
        digits.push(d);
        v = (v - d as i128) / 3;
    }
    (digits, v)
}

impl BalancedDigits {
    /// Digits of `x ∈ Z(3^M)`, least significant first.
    pub fn of_cyclic(x: i64, level: u32) -> Result<Self> {
        let n = pow3(level as u64)? as i128;
        let (digits, _) = balanced_low_digits((x as i128).rem_euclid(n), level as usize);
        Ok(Self { digits })
    }

    /// Digits `c_1, …, c_L` of a point of `T` with denominator `3^L`.
    pub fn of_unit(y: &UnitRational) -> Result<Self> {
        let den = y.denom().to_u64().ok_or_else(|| Error::InvalidInput("denominator too large".into()))?;
        let l = three_power_exponent(den)
            .ok_or_else(|| Error::InvalidInput(format!("denominator {den} is not a power of 3")))?;
        let j = y.numer().to_i64().expect("numerator bounded by denominator") as i128;
        let (low, carry) = balanced_low_digits(j, l as usize);
        // |j| <= (3^L - 1)/2, so L digits represent it exactly
        debug_assert_eq!(carry, 0);
        Ok(Self { digits: low.into_iter().rev().collect() })
    }

    pub fn digits(&self) -> &[i8] {
        &self.digits
    }

    pub fn value_cyclic(&self, level: u32) -> Result<u64> {
        let n = pow3(level as u64)? as i128;
        let mut v = 0i128;
        for &d in self.digits.iter().rev() {
            v = (v * 3 + d as i128).rem_euclid(n);
        }
        Ok(v as u64)
    }

    pub fn value_unit(&self) -> UnitRational {
        let mut num = BigInt::zero();
        for &d in &self.digits {
            num = num * 3 + d;
        }
        UnitRational::new(num, BigInt::from(3u32).pow(self.digits.len() as u32)).expect("positive")
    }
}

impl fmt::Display for BalancedDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            f.write_str(match d {
                -1 => "-",
                0 => "0",
                _ => "+",
            })?;
        }
        Ok(())
    }
}

impl Serialize for BalancedDigits {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn three_power_exponent(mut d: u64) -> Option<u32> {
    let mut e = 0;
    while d > 1 {
        if d % 3 != 0 {
            return None;
        }
        d /= 3;
        e += 1;
    }
    (d == 1).then_some(e)
}

/// `(y ∈ T_+ ∧ 2y ∈ T_+) ⇒ c_1 = 0`, evaluated for one `y`.
pub fn leading_digit_lemma_check(y: &UnitRational) -> Result<bool> {
    let digits = BalancedDigits::of_unit(y)?;
    let hypothesis = y.in_t_plus() && y.mul_i64(2).in_t_plus();
    let c1 = digits.digits().first().copied().unwrap_or(0);
    Ok(!hypothesis || c1 == 0)
}

/// Where the truncated family lives: the grid `3^{-L}Z/Z ⊆ T` carrying
/// `K_{a,3}`, or `Z(3^M)` carrying `L_{a,3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "carrier", rename_all = "kebab-case")]
pub enum Carrier {
    Grid { exponent: u32 },
    Cyclic { level: u32 },
}

impl Carrier {
    pub fn modulus(&self) -> Result<u64> {
        match *self {
            Self::Grid { exponent } => pow3(exponent as u64),
            Self::Cyclic { level } => pow3(level as u64),
        }
    }

    /// Number of characters `η_k` / `ζ_k` that are not identically zero on the carrier.
    pub fn character_count(&self) -> u32 {
        match *self {
            Self::Grid { exponent } => exponent,
            Self::Cyclic { level } => level,
        }
    }

    /// Family point `n` as a residue: `3^{L-a_n-1}` on the grid, `3^{a_n}` in `Z(3^M)`.
    fn family_residue(&self, a_n: i64) -> Result<u64> {
        match *self {
            Self::Grid { exponent } => pow3((exponent as i64 - a_n - 1) as u64),
            Self::Cyclic { level } => Ok(pow3(a_n as u64)? % pow3(level as u64)?),
        }
    }

    fn check_fits(&self, a: &GapSequence) -> Result<()> {
        a.require_nonnegative()?;
        let need = a.last() + 1;
        if (self.character_count() as i64) < need {
            return invalid(format!(
                "carrier {self:?} too small for {a}: need exponent/level at least {need}"
            ));
        }
        Ok(())
    }

    /// `m·χ_k(x)` as a residue over the modulus returned: `(value, denominator)`.
    fn character_value(&self, m: u64, k: u32, x: u64) -> Result<(u64, u64)> {
        match *self {
            Self::Grid { exponent } => {
                let n = pow3(exponent as u64)?;
                let c = (m as u128 * pow3(k as u64)? as u128 % n as u128) as u64;
                Ok(((c as u128 * x as u128 % n as u128) as u64, n))
            }
            Self::Cyclic { .. } => {
                let d = pow3(k as u64 + 1)?;
                Ok(((m as u128 * x as u128 % d as u128) as u64, d))
            }
        }
    }

    fn in_t_plus(&self, m: u64, k: u32, x: u64) -> Result<bool> {
        let (v, d) = self.character_value(m, k, x)?;
        Ok(residue_in_t_plus(v, d))
    }
}

/// Smallest level through which the shift and exclusion characters of
/// `L_{a,3}` factor: `a_max + 2`.
pub fn default_level(a: &GapSequence) -> u32 {
    (a.last() + 2) as u32
}

/// `J_m ∩ [0, k_top)` for the truncated family on the carrier.
fn jm_on_carrier(a: &GapSequence, m: u64, carrier: &Carrier) -> Result<BTreeSet<u64>> {
    carrier.check_fits(a)?;
    let points = a.entries().iter().map(|&e| carrier.family_residue(e)).collect::<Result<Vec<_>>>()?;
    let mut out = BTreeSet::new();
    for k in 0..carrier.character_count() {
        let mut ok = true;
        for &x in &points {
            if !carrier.in_t_plus(m, k, x)? {
                ok = false;
                break;
            }
        }
        if ok {
            out.insert(k as u64);
        }
    }
    Ok(out)
}

/// `{k <= k_max : m·χ_k ∈ F^▷}` with `χ_k = η_k` on the grid and `ζ_k` on
/// `Z(3^M)`. Indices past the data are decided under the convention that
/// the sequence continues with gaps at least 2, which pins every
/// `k <= a_last + 1`; larger `k_max` is rejected.
pub fn compute_jm(a: &GapSequence, m: u64, k_max: u64, carrier: &Carrier) -> Result<BTreeSet<u64>> {
    if m == 0 {
        return invalid("multiplier must be positive");
    }
    let decidable = (a.last() + 1) as u64;
    if k_max > decidable {
        return Err(Error::TruncationTooShort {
            what: format!("J_{m} up to k={k_max} for {a}; entries beyond a_last decide k > {decidable}"),
            required: (a.len() + 1) as u64,
        });
    }
    if let Carrier::Cyclic { level } = *carrier {
        if k_max + 1 > level as u64 {
            return invalid(format!("zeta_{k_max} does not factor through Z(3^{level})"));
        }
    }
    let on_carrier = jm_on_carrier(a, m, carrier)?;
    Ok((0..=k_max)
        .filter(|&k| match carrier {
            // η_k vanishes on the grid once k >= L
            Carrier::Grid { exponent } if k >= *exponent as u64 => true,
            _ => on_carrier.contains(&k),
        })
        .collect())
}

/// All `Σ ε_n x_n` with `ε_n ∈ {-1, 0, 1}`, as carrier residues.
pub fn epsilon_forms(a: &GapSequence, carrier: &Carrier) -> Result<BTreeSet<u64>> {
    carrier.check_fits(a)?;
    let n = carrier.modulus()?;
    let mut forms = vec![0u64];
    for &e in a.entries() {
        let x = carrier.family_residue(e)?;
        let mut next = Vec::with_capacity(forms.len() * 3);
        for &f in &forms {
            next.push(f);
            next.push((f + x) % n);
            next.push((f + n - x) % n);
        }
        forms = next;
    }
    let total = forms.len();
    let set: BTreeSet<u64> = forms.into_iter().collect();
    if set.len() != total {
        return invalid(format!("epsilon forms of {a} collide on {carrier:?}"));
    }
    Ok(set)
}

/// `{x : χ_k(x), 2χ_k(x) ∈ T_+ for every k ∈ J_1 ∩ J_2}` on the carrier.
pub fn q12_set(a: &GapSequence, carrier: &Carrier) -> Result<BTreeSet<u64>> {
    let j1 = jm_on_carrier(a, 1, carrier)?;
    let j2 = jm_on_carrier(a, 2, carrier)?;
    let ks: Vec<u32> = j1.intersection(&j2).map(|&k| k as u32).collect();
    let n = carrier.modulus()?;
    let mut out = BTreeSet::new();
    'x: for x in 0..n {
        for &k in &ks {
            if !carrier.in_t_plus(1, k, x)? || !carrier.in_t_plus(2, k, x)? {
                continue 'x;
            }
        }
        out.insert(x);
    }
    Ok(out)
}

/// `{0, ±p^{a_n}} ⊆ Z(p^M)`, requiring `a_n <= M - 2`.
pub fn l_truncate(a: &GapSequence, p: u64, level: u32) -> Result<CyclicSet> {
    a.require_nonnegative()?;
    let min_level = a.last() + 2;
    if (level as i64) < min_level {
        return invalid(format!("level {level} too small for {a}; smallest admissible level is {min_level}"));
    }
    let group = PadicTruncGroup::new(p, level)?;
    let mut r = vec![0i64];
    for &e in a.entries() {
        let y = pow_checked(p, e as u64)? as i64;
        r.extend([y, -y]);
    }
    CyclicSet::new(group.order(), r)
}

/// `L_{a,3} = {0, ±3^{a_n}}` truncated into `Z(3^M)`.
pub fn l3_truncate(a: &GapSequence, level: u32) -> Result<CyclicSet> {
    l_truncate(a, 3, level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polar::ResidueSet;

    fn seq(v: &[i64]) -> GapSequence {
        GapSequence::new(v.to_vec()).unwrap()
    }

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    fn u(p: i64, q: i64) -> UnitRational {
        UnitRational::new(p, q).unwrap()
    }

    #[test]
    fn group_construction() {
        assert!(PadicTruncGroup::new(4, 2).is_err());
        assert!(PadicTruncGroup::new(3, 0).is_err());
        let g = PadicTruncGroup::ternary(4).unwrap();
        assert_eq!(g.order(), 81);
        assert_eq!(g.signed(g.element(-9)), -9);
        assert_eq!(g.project(80, &PadicTruncGroup::ternary(2).unwrap()).unwrap(), 8);
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta_eval(1, 0, 1, 1).unwrap(), u(1, 3));
        assert_eq!(zeta_eval(11, 3, 10, 4).unwrap(), u(29, 81));
        // a_n = k: 2·3^{a_n}/3^{a_n+1} = 2/3
        assert_eq!(zeta_eval(2, 2, 9, 5).unwrap(), u(2, 3));
        assert!(!u(2, 3).in_t_plus());
        assert!(zeta_eval(1, 4, 1, 4).is_err());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta_eval(1, 2, &u(1, 9)), UnitRational::zero());
        assert_eq!(eta_eval(11, 0, &u(10, 81)), u(29, 81));
        assert_eq!(eta_eval(1, 1, &u(1, 27)), u(1, 9));
    }

    #[test]
    fn zeta_is_additive() {
        for x in 0..81i64 {
            for y in 0..81i64 {
                let c = PruferChar::new(7, 3);
                assert_eq!(c.eval(x + y), &c.eval(x) + &c.eval(y));
            }
        }
    }

    #[test]
    fn digit_examples() {
        assert_eq!(BalancedDigits::of_cyclic(4, 3).unwrap().digits(), &[1, 1, 0]);
        assert_eq!(BalancedDigits::of_cyclic(2, 3).unwrap().digits(), &[-1, 1, 0]);
        let d = BalancedDigits::of_unit(&u(2, 9)).unwrap();
        assert_eq!(d.digits(), &[1, -1]);
        assert_eq!(d.to_string(), "+-");
        assert!(BalancedDigits::of_unit(&u(1, 6)).is_err());
    }

    #[test]
    fn digits_round_trip_and_are_unique() {
        let mut seen = BTreeSet::new();
        for x in 0..729u64 {
            let d = BalancedDigits::of_cyclic(x as i64, 6).unwrap();
            assert_eq!(d.value_cyclic(6).unwrap(), x);
            assert!(seen.insert(d.digits().to_vec()));
        }
        for j in -121..=121 {
            let y = u(j, 243);
            assert_eq!(BalancedDigits::of_unit(&y).unwrap().value_unit(), y);
        }
    }

    #[test]
    fn leading_digit_lemma_small() {
        assert!(leading_digit_lemma_check(&u(1, 9)).unwrap());
        assert!(leading_digit_lemma_check(&u(1, 3)).unwrap());
        for j in 0..6561 {
            assert!(leading_digit_lemma_check(&u(j, 6561)).unwrap());
        }
    }

    #[test]
    fn jm_examples() {
        let t = |e| Carrier::Grid { exponent: e };
        let c = |m| Carrier::Cyclic { level: m };
        assert_eq!(compute_jm(&seq(&[1, 3]), 1, 4, &t(4)).unwrap(), set(&[0, 2, 4]));
        assert_eq!(compute_jm(&seq(&[1, 3]), 2, 4, &t(4)).unwrap(), set(&[0, 2, 4]));
        assert_eq!(compute_jm(&seq(&[0, 2, 4]), 2, 5, &c(6)).unwrap(), set(&[1, 3, 5]));
        assert!(matches!(
            compute_jm(&seq(&[1, 3]), 1, 5, &t(4)),
            Err(Error::TruncationTooShort { .. })
        ));
        assert!(compute_jm(&seq(&[0, 2, 4]), 1, 5, &c(5)).is_err());
        assert!(compute_jm(&seq(&[1, 3]), 1, 2, &t(3)).is_err());
    }

    #[test]
    fn epsilon_form_examples() {
        let f = epsilon_forms(&seq(&[0, 2]), &Carrier::Cyclic { level: 3 }).unwrap();
        let expect: BTreeSet<u64> = [0i64, 1, -1, 9, -9, 10, -10, 8, -8].iter().map(|&x| to_residue(x, 27)).collect();
        assert_eq!(f, expect);
        let f = epsilon_forms(&seq(&[1]), &Carrier::Grid { exponent: 2 }).unwrap();
        assert_eq!(f, set(&[0, 1, 8]));
        let f = epsilon_forms(&seq(&[1, 3]), &Carrier::Grid { exponent: 4 }).unwrap();
        assert_eq!(f.len(), 9);
        assert!(f.contains(&10) && f.contains(&8) && f.contains(&71));
        assert!(epsilon_forms(&seq(&[1, 3]), &Carrier::Grid { exponent: 3 }).is_err());
    }

    #[test]
    fn q12_examples() {
        for (a, carrier) in [
            (seq(&[0, 2]), Carrier::Cyclic { level: 3 }),
            (seq(&[1, 3]), Carrier::Grid { exponent: 4 }),
        ] {
            assert_eq!(q12_set(&a, &carrier).unwrap(), epsilon_forms(&a, &carrier).unwrap());
        }
        let full = q12_set(&seq(&[0, 1, 2]), &Carrier::Cyclic { level: 3 }).unwrap();
        assert_eq!(full.len(), 27);
    }

    #[test]
    fn l3_examples() {
        let s = l3_truncate(&seq(&[0, 2]), 4).unwrap();
        assert_eq!(s.signed_elements(), vec![-9, -1, 0, 1, 9]);
        let s = l3_truncate(&seq(&[0, 2, 4]), 7).unwrap();
        assert_eq!(s.modulus(), 2187);
        assert_eq!(s.signed_elements(), vec![-81, -9, -1, 0, 1, 9, 81]);
        let e = l3_truncate(&seq(&[0, 5]), 4).unwrap_err();
        assert!(e.to_string().contains("7"));
        assert_eq!(default_level(&seq(&[0, 5])), 7);
    }
}
