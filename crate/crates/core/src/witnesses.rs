//! Explicit characters witnessing polar membership and hull exclusion for
//! the families `K_{a,3} ⊆ T` and `L_{a,3} ⊆ J_3`, certificates that can be
//! stored and re-checked, and the small-group membership demonstrations.
//!
//! On `T` a certificate covers the whole infinite family: the character is
//! checked exactly on the leading terms and the remaining terms are bounded
//! by a geometric series. Gaps are assumed to stay at least 2 beyond the
//! data, which makes `a_{s+j} >= a_s + 2j` and the series ratio `1/9`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::circle::{fmt_rational, parse_rational, quarter, rat, UnitRational};
use crate::error::{invalid, Error, Result};
use crate::families::{family_point, points_r2, FamilyKind, GapSequence};
use crate::padic::PruferChar;
use crate::polar::CyclicSet;
use crate::real_line::{member_hull_r, polar_r, HullMembership};

pub const SCHEMA: &str = "qcgroups/1";

mod rational_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(&self) -> i64 {
        match self {
            Self::Plus => 1,
            Self::Minus => -1,
        }
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Self::Plus),
            "-" | "minus" => Ok(Self::Minus),
            _ => Err(Error::Parse(format!("sign must be + or -, got {s:?}"))),
        }
    }
}

fn pow3_int(e: i64) -> BigInt {
    BigInt::from(3u32).pow(e as u32)
}

/// `a_s`, or the smallest value consistent with gaps of at least 2 after the data.
fn entry_or_floor(a: &GapSequence, s: usize) -> i64 {
    let last = a.len() - 1;
    if s <= last {
        a.entries()[s]
    } else {
        a.last() + 2 * (s - last) as i64
    }
}

fn require_gap_floor_from(a: &GapSequence, start: usize) -> Result<()> {
    let gaps = a.gaps();
    if let Some((i, g)) = gaps.iter().enumerate().skip(start).find(|(_, &g)| g < 2) {
        return invalid(format!("gap g_{i} = {g} < 2 inside the tail of {a}"));
    }
    Ok(())
}

/// Upper bound on `Σ_{n >= start} |χ(x_n)|` for a character of `T` and `K_{a,3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailBound {
    pub start: usize,
    #[serde(with = "rational_str")]
    pub bound: BigRational,
}

/// Tail bound for `χ = m·3^{a_k - 1}`: `|m| / (8·3^{a_start - a_k})`.
pub fn tail_bound_t3(a: &GapSequence, m: &BigInt, k: usize, start: usize) -> Result<TailBound> {
    if k >= a.len() {
        return invalid(format!("index k={k} outside {a}"));
    }
    if start < k {
        return invalid(format!("tail start {start} precedes k={k}"));
    }
    require_gap_floor_from(a, start)?;
    let d = entry_or_floor(a, start) - a.entries()[k];
    let bound = BigRational::new(m.abs(), BigInt::from(8) * pow3_int(d));
    Ok(TailBound { start, bound })
}

/// The same bound expressed through the integer character:
/// `|χ|·3^{-(a_start+1)}·9/8`.
pub fn tail_bound_for_character(a: &GapSequence, chi: &BigInt, start: usize) -> Result<TailBound> {
    require_gap_floor_from(a, start)?;
    let e = entry_or_floor(a, start) + 1;
    let bound = BigRational::new(chi.abs() * 9, BigInt::from(8) * pow3_int(e));
    Ok(TailBound { start, bound })
}

fn require_k3_hypotheses(a: &GapSequence) -> Result<()> {
    a.require_nonnegative()?;
    if a.first() <= 0 {
        return invalid(format!("{a} needs a_0 > 0 (eta_(a_0 - 1) is undefined otherwise)"));
    }
    if !a.gaps_exceed_one() {
        return invalid(format!("{a} needs every gap above 1"));
    }
    Ok(())
}

fn require_l3_hypotheses(a: &GapSequence) -> Result<()> {
    a.require_nonnegative()?;
    if !a.gaps_exceed_one() {
        return invalid(format!("{a} needs every gap above 1"));
    }
    Ok(())
}

fn require_pair(a: &GapSequence, k: usize, l: usize) -> Result<()> {
    if !(k < l && l < a.len()) {
        return invalid(format!("need 0 <= k < l < {}, got k={k}, l={l}", a.len()));
    }
    Ok(())
}

/// `χ(x_n) ∈ T_+` for every listed term of `K_{a,3}`.
fn integer_char_on_k3(a: &GapSequence, chi: &BigInt, terms: usize) -> bool {
    (0..terms).all(|n| {
        UnitRational::from_rational(&(family_point(FamilyKind::T3, a, n) * chi)).in_t_plus()
    })
}

fn prufer_on_l3(a: &GapSequence, c: &PruferChar) -> bool {
    a.entries().iter().all(|&e| {
        let y = BigRational::from_integer(pow3_int(e));
        let v = y * BigInt::from(c.multiplier) / BigRational::from_integer(pow3_int(c.index as i64 + 1));
        UnitRational::from_rational(&v).in_t_plus()
    })
}

/// Shift character `(3^{a_l - a_k} ± 2)·η_{a_k - 1}` of `T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftCharT3 {
    pub multiplier: i64,
    pub eta_index: u32,
    #[serde(serialize_with = "ser_display")]
    pub character: BigInt,
    /// Exact check on every listed family point.
    pub finite_in_polar: bool,
    /// Bound on the unlisted terms.
    pub tail: TailBound,
}

fn ser_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl ShiftCharT3 {
    pub fn in_polar(&self) -> bool {
        self.finite_in_polar && self.tail.bound <= quarter()
    }
}

pub fn shift_char_t3(a: &GapSequence, k: usize, l: usize, sign: Sign) -> Result<ShiftCharT3> {
    require_k3_hypotheses(a)?;
    require_pair(a, k, l)?;
    let (ak, al) = (a.entries()[k], a.entries()[l]);
    let m = pow3_int(al - ak) + 2 * sign.value();
    let character = &m * pow3_int(ak - 1);
    let multiplier = i64::try_from(&m).map_err(|_| Error::InvalidInput("multiplier too large".into()))?;
    Ok(ShiftCharT3 {
        multiplier,
        eta_index: (ak - 1) as u32,
        finite_in_polar: integer_char_on_k3(a, &character, a.len()),
        tail: tail_bound_t3(a, &m, k, a.len())?,
        character,
    })
}

/// Shift character `(3^{a_l - a_k} ± 2)·ζ_{a_l + 1}` of `J_3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShiftCharJ3 {
    pub character: PruferChar,
    /// Smallest level through which the character factors.
    pub level: u32,
    pub in_polar: bool,
}

pub fn shift_char_j3(a: &GapSequence, k: usize, l: usize, sign: Sign) -> Result<ShiftCharJ3> {
    require_l3_hypotheses(a)?;
    require_pair(a, k, l)?;
    let (ak, al) = (a.entries()[k], a.entries()[l]);
    let m = pow3_int(al - ak) + 2 * sign.value();
    let multiplier = i64::try_from(&m).map_err(|_| Error::InvalidInput("multiplier too large".into()))?;
    let character = PruferChar::new(multiplier, (al + 1) as u32);
    // terms past the data have a_n >= a_last + 2 >= index + 1 and vanish
    Ok(ShiftCharJ3 { character, level: (al + 2) as u32, in_polar: prufer_on_l3(a, &character) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Space {
    Grid,
    PadicTrunc,
    RealLine,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertCharacter {
    /// Integer character `x ↦ k x` of `T`.
    Integer { value: String },
    /// `multiplier·ζ_index` on `J_3`.
    Prufer { multiplier: i64, index: u32 },
    /// Character `x ↦ y x` of `R`.
    Real { value: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRef {
    pub kind: FamilyKind,
    pub seq: GapSequence,
}

/// A character in the polar of a family together with a point it pushes
/// out of `T_+`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionCertificate {
    pub schema: String,
    pub space: Space,
    pub character: CertCharacter,
    /// `p/q` in `T`, an integer of `Z(3^M)`, or `p/q` in `R`.
    pub target: String,
    pub family: FamilyRef,
    /// Character value at the target, canonical in `(-1/2, 1/2]`.
    pub evaluation: String,
    /// Bound on the family terms from `start` on, covering every target
    /// that agrees with this one below `start`.
    pub tail_bound: Option<TailBound>,
    /// The leading coefficient was `-1` and the construction ran on `-x`.
    pub normalized: bool,
}

impl ExclusionCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }
}

/// Pieces of the exclusion construction, for cross-checking the closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExclusionParts {
    pub k: usize,
    pub l: usize,
    pub rho: i64,
    /// `ε` after normalization.
    pub epsilon: Vec<i8>,
    pub negated: bool,
    /// `ρ/3 + 2/3^{a_l - a_k + 2}`.
    pub head: BigRational,
}

fn normalize_epsilon(a: &GapSequence, eps: &[i8]) -> Result<ExclusionParts> {
    if eps.len() > a.len() {
        return invalid(format!("{} coefficients for a sequence of length {}", eps.len(), a.len()));
    }
    if eps.iter().any(|e| !(-1..=1).contains(e)) {
        return invalid("coefficients must lie in {-1, 0, 1}");
    }
    let support: Vec<usize> = (0..eps.len()).filter(|&i| eps[i] != 0).collect();
    if support.len() < 2 {
        return invalid("need at least two nonzero coefficients; single terms belong to the family");
    }
    let negated = eps[support[0]] < 0;
    let epsilon: Vec<i8> = eps.iter().map(|&e| if negated { -e } else { e }).collect();
    let (k, l) = (support[0], support[1]);
    let rho = epsilon[l] as i64;
    let d = a.entries()[l] - a.entries()[k];
    let head = rat(rho, 3) + BigRational::new(BigInt::from(2), pow3_int(d + 2));
    Ok(ExclusionParts { k, l, rho, epsilon, negated, head })
}

pub fn exclusion_parts(a: &GapSequence, eps: &[i8]) -> Result<ExclusionParts> {
    normalize_epsilon(a, eps)
}

/// `Σ ε_n x_n` for `K_{a,3}`.
pub fn epsilon_point_t3(a: &GapSequence, eps: &[i8]) -> UnitRational {
    let mut s = BigRational::zero();
    for (n, &e) in eps.iter().enumerate() {
        s += family_point(FamilyKind::T3, a, n) * BigInt::from(e);
    }
    UnitRational::from_rational(&s)
}

/// `Σ ε_n 3^{a_n}`.
pub fn epsilon_point_j3(a: &GapSequence, eps: &[i8]) -> BigInt {
    eps.iter().enumerate().map(|(n, &e)| pow3_int(a.entries()[n]) * e).sum()
}

/// Certificate excluding `Σ ε_n x_n` from `Q_T(K_{a,3})`, with
/// `χ = (3^{a_l - a_k} + 2ρ)·3^{a_k - 1}` built from the first two nonzero
/// coefficients.
pub fn exclusion_t3(a: &GapSequence, eps: &[i8]) -> Result<ExclusionCertificate> {
    require_k3_hypotheses(a)?;
    let parts = normalize_epsilon(a, eps)?;
    let (ak, al) = (a.entries()[parts.k], a.entries()[parts.l]);
    let m = pow3_int(al - ak) + 2 * parts.rho;
    let chi = &m * pow3_int(ak - 1);
    let target = epsilon_point_t3(a, eps);
    let evaluation = target.mul_int(&chi);
    Ok(ExclusionCertificate {
        schema: SCHEMA.into(),
        space: Space::Grid,
        character: CertCharacter::Integer { value: chi.to_string() },
        target: target.to_string(),
        family: FamilyRef { kind: FamilyKind::T3, seq: a.clone() },
        evaluation: evaluation.to_string(),
        tail_bound: Some(tail_bound_t3(a, &m, parts.k, parts.l + 1)?),
        normalized: parts.negated,
    })
}

/// Certificate excluding `Σ ε_n 3^{a_n}` from `Q_{J_3}(L_{a,3})`, with
/// `χ = (ρ 3^{a_l - a_k} + 2)·ζ_{a_l + 1}`.
pub fn exclusion_j3(a: &GapSequence, eps: &[i8]) -> Result<ExclusionCertificate> {
    require_l3_hypotheses(a)?;
    let parts = normalize_epsilon(a, eps)?;
    let (ak, al) = (a.entries()[parts.k], a.entries()[parts.l]);
    let m = pow3_int(al - ak) * parts.rho + 2;
    let multiplier = i64::try_from(&m).map_err(|_| Error::InvalidInput("multiplier too large".into()))?;
    let c = PruferChar::new(multiplier, (al + 1) as u32);
    let target = epsilon_point_j3(a, eps);
    let t = i64::try_from(&target).map_err(|_| Error::InvalidInput("target too large".into()))?;
    Ok(ExclusionCertificate {
        schema: SCHEMA.into(),
        space: Space::PadicTrunc,
        character: CertCharacter::Prufer { multiplier, index: c.index },
        target: target.to_string(),
        family: FamilyRef { kind: FamilyKind::J3, seq: a.clone() },
        evaluation: c.eval(t).to_string(),
        tail_bound: None,
        normalized: parts.negated,
    })
}

/// Certificate excluding `z` from `Q_R(R_{a,2})` for the finite data given.
pub fn exclusion_r2(a: &GapSequence, z: &BigRational) -> Result<ExclusionCertificate> {
    let s = points_r2(a, a.len())?;
    let y = match member_hull_r(&s, z)? {
        HullMembership::Out { witness } => witness,
        HullMembership::In => return invalid(format!("{} lies in the hull; nothing to certify", fmt_rational(z))),
    };
    let evaluation = UnitRational::from_rational(&(&y * z));
    Ok(ExclusionCertificate {
        schema: SCHEMA.into(),
        space: Space::RealLine,
        character: CertCharacter::Real { value: fmt_rational(&y) },
        target: fmt_rational(z),
        family: FamilyRef { kind: FamilyKind::R2, seq: a.clone() },
        evaluation: evaluation.to_string(),
        tail_bound: None,
        normalized: false,
    })
}

/// Outcome of re-checking a certificate, one flag per obligation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateCheck {
    pub polar_membership: bool,
    pub evaluation_matches: bool,
    pub excluded: bool,
    /// Recorded tail bound re-derived and absorbed by the margin (true when absent).
    pub tail_ok: bool,
}

impl CertificateCheck {
    pub fn passed(&self) -> bool {
        self.polar_membership && self.evaluation_matches && self.excluded && self.tail_ok
    }
}

fn parse_unit(s: &str) -> Result<UnitRational> {
    s.parse()
}

/// Re-check a certificate. `truncation` is the number of leading family
/// terms checked exactly on `T` and `R`, and the level `M` on `J_3`.
pub fn check_certificate(cert: &ExclusionCertificate, truncation: u64) -> Result<CertificateCheck> {
    if cert.schema != SCHEMA {
        return invalid(format!("unknown certificate schema {:?}", cert.schema));
    }
    let a = &cert.family.seq;
    let recorded = parse_unit(&cert.evaluation)?;
    match (&cert.space, &cert.character, cert.family.kind) {
        (Space::Grid, CertCharacter::Integer { value }, FamilyKind::T3) => {
            let chi: BigInt = value.parse().map_err(|_| Error::Parse(format!("bad character {value:?}")))?;
            let t = truncation as usize;
            if t == 0 || t > a.len() {
                return Err(Error::TruncationTooShort {
                    what: format!("exact check of {a} over {t} terms"),
                    required: 1,
                });
            }
            let rest = tail_bound_for_character(a, &chi, t)?;
            let polar_membership = integer_char_on_k3(a, &chi, t) && rest.bound <= quarter();
            let target = parse_unit(&cert.target)?;
            let value = target.mul_int(&chi);
            let tail_ok = match &cert.tail_bound {
                None => true,
                Some(tb) => {
                    let again = tail_bound_for_character(a, &chi, tb.start)?;
                    again.bound == tb.bound && value.norm() - &tb.bound > quarter()
                }
            };
            Ok(CertificateCheck {
                polar_membership,
                evaluation_matches: value == recorded,
                excluded: value.norm() > quarter(),
                tail_ok,
            })
        }
        (Space::PadicTrunc, &CertCharacter::Prufer { multiplier, index }, FamilyKind::J3) => {
            let c = PruferChar::new(multiplier, index);
            if !c.factors_through(truncation as u32) {
                return Err(Error::TruncationTooShort {
                    what: format!("{c} on Z(3^{truncation})"),
                    required: index as u64 + 1,
                });
            }
            if a.last() + 2 < index as i64 + 1 {
                return invalid(format!("{c} does not vanish on the terms after {a}"));
            }
            let target: i64 = cert.target.parse().map_err(|_| Error::Parse(format!("bad target {:?}", cert.target)))?;
            let value = c.eval(target);
            Ok(CertificateCheck {
                polar_membership: prufer_on_l3(a, &c),
                evaluation_matches: value == recorded,
                excluded: value.norm() > quarter(),
                tail_ok: cert.tail_bound.is_none(),
            })
        }
        (Space::RealLine, CertCharacter::Real { value }, FamilyKind::R2) => {
            if (truncation as usize) < a.len() {
                return Err(Error::TruncationTooShort {
                    what: format!("real-line certificate for {a}"),
                    required: a.len() as u64,
                });
            }
            let y = parse_rational(value)?;
            let z = parse_rational(&cert.target)?;
            let s = points_r2(a, a.len())?;
            let value = UnitRational::from_rational(&(&y * &z));
            Ok(CertificateCheck {
                polar_membership: polar_r(&s)?.contains(&y),
                evaluation_matches: value == recorded,
                excluded: value.norm() > quarter(),
                tail_ok: cert.tail_bound.is_none(),
            })
        }
        _ => invalid("certificate space, character and family kind do not match"),
    }
}

pub fn verify_certificate(cert: &ExclusionCertificate, truncation: u64) -> Result<bool> {
    Ok(check_certificate(cert, truncation)?.passed())
}

/// Small-group memberships behind the necessary conditions on chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DemoCase {
    /// `h_1 ± h_2 ∈ Q({h_1, 2h_1, h_2, 2h_2})`
    H12a { h1: i64, h2: i64, minus: bool },
    /// `4h ∈ Q({h, 3h, 6h})`
    H12b { h: i64 },
    /// `5h ∈ Q({h, 4h, 8h})`
    H12c { h: i64 },
    /// `2x ∈ Q({x, 3x})`, valid when `±1/4 ∉ Tr_x`
    TwoX { x: i64 },
    /// `2x ∈ Q({x, 3x})` in a quotient `Z(p^k)` of `J_p`, `p` odd
    JTwoX { x: i64 },
}

fn odd_prime_power(n: u64) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let p = (3..=n).step_by(2).find(|d| n % d == 0).expect("n >= 3");
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

/// Generating set and target in `Z(n)`; the caller decides membership.
pub fn membership_demo(case: DemoCase, n: u64) -> Result<(CyclicSet, u64)> {
    if n == 0 {
        return invalid("carrier order must be positive");
    }
    let r = |x: i64| crate::polar::to_residue(x, n);
    let (set, target) = match case {
        DemoCase::H12a { h1, h2, minus } => {
            (vec![h1, 2 * h1, h2, 2 * h2], if minus { h1 - h2 } else { h1 + h2 })
        }
        DemoCase::H12b { h } => (vec![h, 3 * h, 6 * h], 4 * h),
        DemoCase::H12c { h } => (vec![h, 4 * h, 8 * h], 5 * h),
        DemoCase::TwoX { x } => (vec![x, 3 * x], 2 * x),
        DemoCase::JTwoX { x } => {
            if !odd_prime_power(n) {
                return invalid(format!("Z({n}) is not a quotient of J_p for an odd prime p"));
            }
            (vec![x, 3 * x], 2 * x)
        }
    };
    Ok((CyclicSet::new(n, set)?, r(target)))
}

impl FromStr for DemoCase {
    type Err = Error;
    /// `name` or `name:p1,p2[,-]`, e.g. `h12-b:1`, `h12-a:1,5,-`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, params) = s.split_once(':').unwrap_or((s, ""));
        let parts: Vec<&str> = params.split(',').map(str::trim).filter(|p| !p.is_empty()).collect();
        let num = |i: usize, default: i64| -> Result<i64> {
            parts.get(i).map_or(Ok(default), |p| p.parse().map_err(|_| Error::Parse(format!("bad parameter {p:?}"))))
        };
        match name {
            "h12-a" => Ok(Self::H12a { h1: num(0, 1)?, h2: num(1, 1)?, minus: parts.get(2) == Some(&"-") }),
            "h12-b" => Ok(Self::H12b { h: num(0, 1)? }),
            "h12-c" => Ok(Self::H12c { h: num(0, 1)? }),
            "two-x" => Ok(Self::TwoX { x: num(0, 1)? }),
            "J-two-x" | "j-two-x" => Ok(Self::JTwoX { x: num(0, 1)? }),
            _ => Err(Error::Parse(format!("unknown demo case {name:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polar::{in_hull, ResidueSet};

    fn seq(v: &[i64]) -> GapSequence {
        GapSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn shift_characters_t3() {
        let s = shift_char_t3(&seq(&[1, 3]), 0, 1, Sign::Plus).unwrap();
        assert_eq!(s.character, BigInt::from(11));
        assert!(s.in_polar());
        let s = shift_char_t3(&seq(&[1, 3]), 0, 1, Sign::Minus).unwrap();
        assert_eq!(s.character, BigInt::from(7));
        let s = shift_char_t3(&seq(&[2, 4, 6]), 1, 2, Sign::Plus).unwrap();
        assert_eq!(s.character, BigInt::from(297));
        assert!(s.in_polar());
        assert!(shift_char_t3(&seq(&[0, 2]), 0, 1, Sign::Plus).is_err());
        assert!(shift_char_t3(&seq(&[1, 2]), 0, 1, Sign::Plus).is_err());
        assert!(shift_char_t3(&seq(&[1, 3]), 1, 1, Sign::Plus).is_err());
    }

    #[test]
    fn shift_characters_j3() {
        let s = shift_char_j3(&seq(&[0, 2]), 0, 1, Sign::Plus).unwrap();
        assert_eq!(s.character, PruferChar::new(11, 3));
        assert!(s.in_polar);
        let s = shift_char_j3(&seq(&[0, 2]), 0, 1, Sign::Minus).unwrap();
        assert_eq!(s.character, PruferChar::new(7, 3));
        let s = shift_char_j3(&seq(&[1, 4]), 0, 1, Sign::Plus).unwrap();
        assert_eq!(s.character, PruferChar::new(29, 5));
        assert_eq!(s.level, 6);
    }

    #[test]
    fn tail_bounds() {
        let a = seq(&[1, 3, 5]);
        let t = tail_bound_t3(&a, &BigInt::from(11), 0, 2).unwrap();
        assert_eq!(t.bound, rat(11, 648));
        let t = tail_bound_t3(&a, &BigInt::from(1), 1, 1).unwrap();
        assert_eq!(t.bound, rat(1, 8));
        // past the data the gap floor 2 is assumed
        let t = tail_bound_t3(&seq(&[1, 3]), &BigInt::from(11), 0, 2).unwrap();
        assert_eq!(t.bound, rat(11, 648));
        assert!(tail_bound_t3(&a, &BigInt::from(1), 2, 1).is_err());
        assert!(tail_bound_t3(&seq(&[1, 2, 5]), &BigInt::from(1), 0, 0).is_err());
        let chi = BigInt::from(11);
        assert_eq!(tail_bound_for_character(&a, &chi, 2).unwrap().bound, rat(11, 648));
    }

    #[test]
    fn exclusion_t3_examples() {
        let a = seq(&[1, 3]);
        let c = exclusion_t3(&a, &[1, 1]).unwrap();
        assert_eq!(c.character, CertCharacter::Integer { value: "11".into() });
        assert_eq!((c.target.as_str(), c.evaluation.as_str()), ("10/81", "29/81"));
        assert!(verify_certificate(&c, 2).unwrap());

        let c = exclusion_t3(&a, &[1, -1]).unwrap();
        assert_eq!(c.character, CertCharacter::Integer { value: "7".into() });
        assert_eq!((c.target.as_str(), c.evaluation.as_str()), ("8/81", "-25/81"));
        assert!(verify_certificate(&c, 2).unwrap());

        let c = exclusion_t3(&seq(&[2, 4, 7]), &[1, 1, 0]).unwrap();
        assert_eq!(c.character, CertCharacter::Integer { value: "33".into() });
        assert_eq!(c.evaluation, "29/81");

        let c = exclusion_t3(&a, &[-1, 1]).unwrap();
        assert!(c.normalized);
        assert!(verify_certificate(&c, 2).unwrap());

        assert!(exclusion_t3(&a, &[1, 0]).is_err());
        assert!(exclusion_t3(&seq(&[1, 2]), &[1, 1]).is_err());
    }

    #[test]
    fn tampered_certificates_fail() {
        let mut c = exclusion_t3(&seq(&[1, 3]), &[1, 1]).unwrap();
        c.character = CertCharacter::Integer { value: "5".into() };
        let check = check_certificate(&c, 2).unwrap();
        assert!(!check.polar_membership);
        assert!(!check.passed());
    }

    #[test]
    fn exclusion_j3_examples() {
        let a = seq(&[0, 2]);
        let c = exclusion_j3(&a, &[1, 1]).unwrap();
        assert_eq!(c.character, CertCharacter::Prufer { multiplier: 11, index: 3 });
        assert_eq!((c.target.as_str(), c.evaluation.as_str()), ("10", "29/81"));
        assert!(verify_certificate(&c, 4).unwrap());
        let c = exclusion_j3(&a, &[1, -1]).unwrap();
        assert_eq!(c.target, "-8");
        assert_eq!(parse_unit(&c.evaluation).unwrap().norm(), rat(25, 81));
        assert!(verify_certificate(&c, 4).unwrap());
        let c = exclusion_j3(&seq(&[1, 4]), &[1, 1]).unwrap();
        assert_eq!(c.character, CertCharacter::Prufer { multiplier: 29, index: 5 });
        assert_eq!((c.target.as_str(), c.evaluation.as_str()), ("84", "83/243"));
        assert!(matches!(
            check_certificate(&c, 5),
            Err(Error::TruncationTooShort { required: 6, .. })
        ));
    }

    #[test]
    fn real_line_certificates() {
        let a = seq(&[0, 2]);
        let c = exclusion_r2(&a, &rat(1, 4)).unwrap();
        assert!(verify_certificate(&c, 2).unwrap());
        assert!(exclusion_r2(&a, &rat(1, 8)).is_err());
    }

    #[test]
    fn certificates_round_trip_through_json() {
        let c = exclusion_t3(&seq(&[1, 3, 5]), &[1, 0, -1]).unwrap();
        let back = ExclusionCertificate::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn demos() {
        let (s, t) = membership_demo(DemoCase::H12b { h: 1 }, 24).unwrap();
        assert_eq!((s.signed_elements(), t), (vec![1, 3, 6], 4));
        assert!(in_hull(&s, t).unwrap());
        let (s, t) = membership_demo(DemoCase::H12c { h: 1 }, 64).unwrap();
        assert_eq!((s.signed_elements(), t), (vec![1, 4, 8], 5));
        assert!(in_hull(&s, t).unwrap());
        let (s, t) = membership_demo(DemoCase::JTwoX { x: 1 }, 243).unwrap();
        assert_eq!((s.residues().len(), t), (2, 2));
        assert!(in_hull(&s, t).unwrap());
        assert!(membership_demo(DemoCase::JTwoX { x: 1 }, 24).is_err());
        assert_eq!("h12-a:1,5,-".parse::<DemoCase>().unwrap(), DemoCase::H12a { h1: 1, h2: 5, minus: true });
    }
}
