//! Exact arithmetic in the circle group `T = R/Z` and exact unions of closed
//! rational intervals.
//!
//! Points of `T` are stored by their canonical representative in the window
//! `(-1/2, 1/2]`. Interval unions that live in `T` use the closed window
//! `[-1/2, 1/2]`; since `-1/2` and `1/2` name the same point, a normalized
//! union reduced modulo one contains `-1/2` exactly when it contains `1/2`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn half() -> BigRational {
    rat(1, 2)
}

pub fn quarter() -> BigRational {
    rat(1, 4)
}

/// Canonical text form: always `p/q` with `q >= 1`, including integers.
pub fn fmt_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q`, `p`, and an optional leading sign.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return invalid(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(p, q))
}

/// `r mod 1`, mapped into `(-1/2, 1/2]`.
pub fn reduce_to_window(r: &BigRational) -> BigRational {
    let mut f = r - r.floor();
    if f > half() {
        f -= BigRational::one();
    }
    f
}

/// Distance from `r` to the nearest integer.
pub fn dist_to_integer(r: &BigRational) -> BigRational {
    reduce_to_window(r).abs()
}

/// `true` iff `r` lies in `T_+ + Z`, i.e. its image in `T` is in `T_+`.
pub fn rational_in_t_plus(r: &BigRational) -> bool {
    dist_to_integer(r) <= quarter()
}

/// Exact element of `T = R/Z`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitRational {
    value: BigRational,
}

impl UnitRational {
    /// Canonical image of `p/q` in `T`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        if q.is_zero() {
            return invalid("zero denominator");
        }
        Ok(Self::from_rational(&BigRational::new(p.into(), q)))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self { value: reduce_to_window(r) }
    }

    pub fn zero() -> Self {
        Self { value: BigRational::zero() }
    }

    /// Canonical representative in `(-1/2, 1/2]`.
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn numer(&self) -> &BigInt {
        self.value.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.value.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// `min_n |x + n|`, always in `[0, 1/2]`.
    pub fn norm(&self) -> BigRational {
        self.value.abs()
    }

    /// Membership in the closed arc `T_m = [-1/(4m), 1/(4m)]`.
    pub fn in_tm(&self, m: u64) -> bool {
        assert!(m >= 1, "T_m needs m >= 1");
        // |num| / den <= 1 / (4m)
        self.value.numer().abs() * BigInt::from(4u64) * BigInt::from(m) <= *self.value.denom()
    }

    pub fn in_t_plus(&self) -> bool {
        self.in_tm(1)
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self::from_rational(&(&self.value * BigRational::from_integer(k.clone())))
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self.mul_int(&BigInt::from(k))
    }

    /// Order of the element in `T` (its reduced denominator).
    pub fn order(&self) -> BigInt {
        self.value.denom().clone()
    }
}

impl Default for UnitRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for UnitRational {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl PartialOrd for UnitRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &UnitRational {
    type Output = UnitRational;
    fn add(self, rhs: &UnitRational) -> UnitRational {
        UnitRational::from_rational(&(&self.value + &rhs.value))
    }
}

impl Sub for &UnitRational {
    type Output = UnitRational;
    fn sub(self, rhs: &UnitRational) -> UnitRational {
        UnitRational::from_rational(&(&self.value - &rhs.value))
    }
}

impl Neg for &UnitRational {
    type Output = UnitRational;
    fn neg(self) -> UnitRational {
        UnitRational::from_rational(&-&self.value)
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(&self.value))
    }
}

impl FromStr for UnitRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Self::from_rational(&parse_rational(s)?))
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Closed interval `[lo, hi]` with exact endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Interval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", fmt_rational(&self.lo), fmt_rational(&self.hi))
    }
}

/// Finite union of closed intervals, kept sorted, disjoint and merged.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalIntervalUnion {
    intervals: Vec<Interval>,
}

impl RationalIntervalUnion {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_intervals(intervals: impl IntoIterator<Item = Interval>) -> Self {
        let mut v: Vec<Interval> = intervals.into_iter().collect();
        v.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut out: Vec<Interval> = Vec::with_capacity(v.len());
        for iv in v {
            match out.last_mut() {
                // closed intervals that touch share a point and merge
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => out.push(iv),
            }
        }
        Self { intervals: out }
    }

    pub fn interval(lo: BigRational, hi: BigRational) -> Self {
        Self::from_intervals([Interval::new(lo, hi)])
    }

    /// `T_m` as the interval `[-1/(4m), 1/(4m)]`.
    pub fn t_m(m: u64) -> Self {
        let r = BigRational::new(BigInt::one(), BigInt::from(4u64) * BigInt::from(m));
        Self::interval(-r.clone(), r)
    }

    /// The whole circle, as the closed window `[-1/2, 1/2]`.
    pub fn full_circle() -> Self {
        Self::interval(-half(), half())
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        // binary search on the last interval whose lo <= x
        let idx = self.intervals.partition_point(|iv| &iv.lo <= x);
        idx > 0 && self.intervals[idx - 1].contains(x)
    }

    /// Membership of a point of `T`, for unions living in the circle window.
    pub fn contains_t(&self, x: &UnitRational) -> bool {
        self.contains(x.value())
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_intervals(self.intervals.iter().chain(other.intervals.iter()).cloned())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        let (a, b) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            let lo = std::cmp::max(&a[i].lo, &b[j].lo);
            let hi = std::cmp::min(&a[i].hi, &b[j].hi);
            if lo <= hi {
                out.push(Interval::new(lo.clone(), hi.clone()));
            }
            if a[i].hi < b[j].hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        Self::from_intervals(out)
    }

    /// Closure of the complement inside `[lo, hi]`.
    ///
    /// Endpoints shared with `self` stay in the result, so this is the set
    /// complement up to finitely many boundary points.
    pub fn complement_within(&self, lo: &BigRational, hi: &BigRational) -> Self {
        let mut out = Vec::new();
        let mut cursor = lo.clone();
        for iv in &self.intervals {
            if &iv.hi < lo || &iv.lo > hi {
                continue;
            }
            if iv.lo > cursor {
                out.push(Interval::new(cursor.clone(), iv.lo.clone()));
            }
            if iv.hi > cursor {
                cursor = iv.hi.clone();
            }
        }
        if &cursor < hi {
            out.push(Interval::new(cursor, hi.clone()));
        }
        Self::from_intervals(out)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self::from_intervals(self.intervals.iter().map(|iv| {
            let (a, b) = (&iv.lo * factor, &iv.hi * factor);
            if a <= b {
                Interval::new(a, b)
            } else {
                Interval::new(b, a)
            }
        }))
    }

    pub fn translate(&self, shift: &BigRational) -> Self {
        Self::from_intervals(
            self.intervals
                .iter()
                .map(|iv| Interval::new(&iv.lo + shift, &iv.hi + shift)),
        )
    }

    pub fn negate(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    /// Image in `T`, laid out in the window `[-1/2, 1/2]`.
    pub fn reduce_mod_one(&self) -> Self {
        let h = half();
        let mut out = Vec::new();
        for iv in &self.intervals {
            if &iv.hi - &iv.lo >= BigRational::one() {
                return Self::full_circle();
            }
            let lo = reduce_to_window(&iv.lo);
            // lo == 1/2 means the interval starts at the seam
            let lo = if lo == h && iv.hi != iv.lo { -h.clone() } else { lo };
            let hi = &lo + (&iv.hi - &iv.lo);
            if hi <= h {
                out.push(Interval::new(lo, hi));
            } else {
                out.push(Interval::new(lo, h.clone()));
                out.push(Interval::new(-h.clone(), hi - BigRational::one()));
            }
        }
        let mut reduced = Self::from_intervals(out);
        reduced.close_seam();
        reduced
    }

    /// Make `-1/2` and `1/2` both present or both absent.
    fn close_seam(&mut self) {
        let h = half();
        let has_lo = self.contains(&-h.clone());
        let has_hi = self.contains(&h);
        if has_lo != has_hi {
            let extra = if has_lo { h } else { -h };
            *self = self.union(&Self::from_intervals([Interval::point(extra)]));
        }
    }

    /// Total length (Lebesgue measure).
    pub fn measure(&self) -> BigRational {
        self.intervals
            .iter()
            .fold(BigRational::zero(), |acc, iv| acc + (&iv.hi - &iv.lo))
    }
}

impl fmt::Display for RationalIntervalUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return f.write_str("∅");
        }
        let parts: Vec<String> = self.intervals.iter().map(|iv| iv.to_string()).collect();
        f.write_str(&parts.join("∪"))
    }
}

impl Serialize for RationalIntervalUnion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `{x in T : k x in T_+}` for an integer character `k`, in the circle window.
pub fn t_plus_preimage(k: &BigInt) -> RationalIntervalUnion {
    if k.is_zero() {
        return RationalIntervalUnion::full_circle();
    }
    let k_abs = k.abs();
    let kr = BigRational::from_integer(k_abs.clone());
    let q = quarter();
    // x in [(j - 1/4)/|k|, (j + 1/4)/|k|] for j = 0..|k|, then reduce
    let mut ivs = Vec::new();
    let mut j = BigInt::zero();
    while j <= k_abs {
        let jr = BigRational::from_integer(j.clone());
        ivs.push(Interval::new((&jr - &q) / &kr, (&jr + &q) / &kr));
        j += 1;
    }
    RationalIntervalUnion::from_intervals(ivs).reduce_mod_one()
}

/// Polar of a finite set of integer characters of `T`:
/// `{x in T : k x in T_+ for every k}`.
pub fn t_polar_of_characters(chars: &[BigInt]) -> RationalIntervalUnion {
    chars
        .iter()
        .fold(RationalIntervalUnion::full_circle(), |acc, k| acc.intersect(&t_plus_preimage(k)))
}

pub(crate) fn lcm_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, d| acc.lcm(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(p: i64, q: i64) -> UnitRational {
        UnitRational::new(p, q).unwrap()
    }

    #[test]
    fn canonical_representatives() {
        assert_eq!(u(1, 3).to_string(), "1/3");
        assert_eq!(u(5, 4), u(1, 4));
        assert_eq!(u(-3, 4), u(1, 4));
        assert_eq!(u(1, 2).to_string(), "1/2");
        assert_eq!(u(-1, 2).to_string(), "1/2");
        assert_eq!(u(3, 4).to_string(), "-1/4");
        assert_eq!(u(7, 1).to_string(), "0/1");
        assert!(UnitRational::new(1, 0).is_err());
    }

    #[test]
    fn norms() {
        assert_eq!(u(1, 3).norm(), rat(1, 3));
        assert_eq!(u(3, 4).norm(), rat(1, 4));
        assert_eq!(u(1, 2).norm(), rat(1, 2));
    }

    #[test]
    fn tm_membership_is_closed() {
        assert!(u(1, 4).in_tm(1));
        assert!(!u(29, 81).in_tm(1));
        assert!(u(1, 32).in_tm(8));
        assert!(!u(1, 31).in_tm(8));
        assert!(u(-1, 32).in_tm(8));
    }

    #[test]
    fn interval_examples() {
        let a = RationalIntervalUnion::interval(rat(-1, 4), rat(1, 4));
        let b = RationalIntervalUnion::interval(rat(1, 8), rat(3, 8));
        assert_eq!(a.intersect(&b), RationalIntervalUnion::interval(rat(1, 8), rat(1, 4)));
        let c = RationalIntervalUnion::interval(rat(-1, 16), rat(1, 16));
        assert_eq!(c.scale(&int(4)), a);
        let d = RationalIntervalUnion::interval(rat(3, 4), rat(5, 4));
        assert_eq!(d.reduce_mod_one(), a);
    }

    #[test]
    fn reduce_wraps_across_the_seam() {
        let d = RationalIntervalUnion::interval(rat(1, 4), rat(3, 4));
        let r = d.reduce_mod_one();
        assert_eq!(r.to_string(), "[-1/2,-1/4]∪[1/4,1/2]");
        assert!(r.contains_t(&u(1, 2)));
        // a lone point at the seam appears on both sides
        let p = RationalIntervalUnion::interval(rat(1, 2), rat(1, 2)).reduce_mod_one();
        assert_eq!(p.to_string(), "[-1/2,-1/2]∪[1/2,1/2]");
    }

    #[test]
    fn complement_within_window() {
        let a = RationalIntervalUnion::from_intervals([
            Interval::new(rat(-1, 4), rat(-1, 8)),
            Interval::new(rat(0, 1), rat(1, 8)),
        ]);
        let c = a.complement_within(&rat(-1, 2), &rat(1, 2));
        assert_eq!(c.to_string(), "[-1/2,-1/4]∪[-1/8,0/1]∪[1/8,1/2]");
    }

    #[test]
    fn preimage_of_t_plus_under_four() {
        let p = t_plus_preimage(&BigInt::from(4));
        assert!(p.contains(&rat(1, 16)));
        assert!(p.contains(&rat(3, 16)));
        assert!(!p.contains(&rat(1, 8)));
        assert!(p.contains(&rat(1, 4)));
        assert_eq!(p.measure(), half());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("5").unwrap(), int(5));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
