//! Polars and quasi-convex hulls of finite rational subsets of `R`.
//!
//! The dual of `R` is `R` with pairing `y·x mod 1`. For a finite rational
//! set `S` with common denominator `D`, shifting `y` by `D` moves every `y x`
//! by an integer, so `S^▷` is `D`-periodic and one period is a finite union
//! of closed intervals.
//!
//! Hull membership of `z` asks whether `z·S^▷ ⊆ T_+ + Z`. Over one period
//! translate `I + kD` the image is `z I + k D z`, and `k D z mod 1` takes only
//! `den(D z)` values, so finitely many interval checks decide it.
//!
//! Hulls are found through the circle: after scaling `S` by a power of two
//! into `(-1/2, 1/2)`, `Q_R(S)` lies in the preimage of `Q_T(π(S))` inside
//! `[-max|S|, max|S|]`, a finite candidate set that is then filtered.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::circle::{
    fmt_rational, half, lcm_all, quarter, rational_in_t_plus, Interval, RationalIntervalUnion,
    UnitRational,
};
use crate::error::{invalid, Result};
use crate::polar::{hull_grid, signed_residue, GridSet, ResidueSet};

/// Finite set of exact rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RealFiniteSet {
    points: BTreeSet<BigRational>,
}

impl RealFiniteSet {
    pub fn new(points: impl IntoIterator<Item = BigRational>) -> Self {
        Self { points: points.into_iter().collect() }
    }

    pub fn points(&self) -> &BTreeSet<BigRational> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.points.contains(x)
    }

    /// Least common denominator.
    pub fn denominator(&self) -> BigInt {
        lcm_all(self.points.iter().map(|p| p.denom()))
    }

    pub fn max_abs(&self) -> BigRational {
        self.points.iter().map(|p| p.abs()).max().unwrap_or_else(BigRational::zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.points.iter().all(|p| self.points.contains(&-p))
    }

    pub fn scaled(&self, factor: &BigRational) -> Self {
        Self::new(self.points.iter().map(|p| p * factor))
    }
}

impl Serialize for RealFiniteSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.points.iter().map(fmt_rational))
    }
}

/// `S^▷ ⊆ R`, stored as one period `[0, period]` of a periodic closed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicPolar {
    pub period: BigRational,
    pub one_period: RationalIntervalUnion,
}

impl PeriodicPolar {
    pub fn contains(&self, y: &BigRational) -> bool {
        let q = (y / &self.period).floor();
        self.one_period.contains(&(y - q * &self.period))
    }
}

impl Serialize for PeriodicPolar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PeriodicPolar", 2)?;
        st.serialize_field("period", &fmt_rational(&self.period))?;
        st.serialize_field("intervals", &self.one_period.to_string())?;
        st.end()
    }
}

/// `{y ∈ [0, D] : y |x| ∈ T_+ + Z}`.
fn preimage_on_period(x: &BigRational, period: &BigRational) -> RationalIntervalUnion {
    let x = x.abs();
    let q = quarter();
    let top = (period * &x).to_integer();
    let mut ivs = Vec::new();
    let mut j = BigInt::zero();
    while j <= top {
        let jr = BigRational::from_integer(j.clone());
        ivs.push(Interval::new((&jr - &q) / &x, (&jr + &q) / &x));
        j += 1;
    }
    RationalIntervalUnion::from_intervals(ivs)
        .intersect(&RationalIntervalUnion::interval(BigRational::zero(), period.clone()))
}

pub fn polar_r(s: &RealFiniteSet) -> Result<PeriodicPolar> {
    if s.is_empty() {
        return invalid("polar of the empty set is not defined");
    }
    let nonzero: Vec<&BigRational> = s.points.iter().filter(|p| !p.is_zero()).collect();
    let period = BigRational::from_integer(lcm_all(nonzero.iter().map(|p| p.denom())));
    let full = RationalIntervalUnion::interval(BigRational::zero(), period.clone());
    let one_period = nonzero
        .iter()
        .fold(full, |acc, x| acc.intersect(&preimage_on_period(x, &period)));
    Ok(PeriodicPolar { period, one_period })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HullMembership {
    In,
    /// `y ∈ S^▷` with `y z ∉ T_+`.
    Out { witness: BigRational },
}

impl HullMembership {
    pub fn is_in(&self) -> bool {
        matches!(self, Self::In)
    }
}

fn nearest_integer(r: &BigRational) -> BigRational {
    (r + half()).floor()
}

/// Exact decision of `z ∈ Q_R(S)` against a precomputed polar.
pub fn member_hull_with_polar(polar: &PeriodicPolar, z: &BigRational) -> HullMembership {
    if z.is_zero() {
        return HullMembership::In;
    }
    let shifts = (&polar.period * z).denom().clone();
    let mut k = BigInt::zero();
    while k < shifts {
        let offset = &polar.period * BigRational::from_integer(k.clone());
        for iv in polar.one_period.intervals() {
            let (y_lo, y_hi) = (&iv.lo + &offset, &iv.hi + &offset);
            let (a, b) = (z * &y_lo, z * &y_hi);
            let ((a, ya), (b, yb)) = if a <= b { ((a, y_lo), (b, y_hi)) } else { ((b, y_hi), (a, y_lo)) };
            if !rational_in_t_plus(&a) {
                return HullMembership::Out { witness: ya };
            }
            if !rational_in_t_plus(&b) {
                return HullMembership::Out { witness: yb };
            }
            let n = nearest_integer(&a);
            if b > &n + quarter() {
                // z y crosses n + 1/2 inside the interval
                return HullMembership::Out { witness: (n + half()) / z };
            }
        }
        k += 1;
    }
    HullMembership::In
}

pub fn member_hull_r(s: &RealFiniteSet, z: &BigRational) -> Result<HullMembership> {
    Ok(member_hull_with_polar(&polar_r(s)?, z))
}

/// `α = 2^{-t}` with `t >= 0` minimal such that `α·max|S| < 1/2`.
pub fn scale_into_half(s: &RealFiniteSet) -> BigRational {
    let m = s.max_abs();
    let mut alpha = BigRational::one();
    while &m * &alpha >= half() {
        alpha /= BigInt::from(2);
    }
    alpha
}

/// Candidate superset of `Q_R(S)` from the circle, given a grid-hull routine.
pub(crate) fn hull_r_candidates(
    s: &RealFiniteSet,
    grid_hull: &dyn Fn(&GridSet) -> Result<BTreeSet<u64>>,
) -> Result<Vec<BigRational>> {
    let alpha = scale_into_half(s);
    let bound = s.max_abs();
    let projected: Vec<UnitRational> = s.points.iter().map(|p| UnitRational::from_rational(&(p * &alpha))).collect();
    let grid = GridSet::from_points(&projected, None)?;
    let n = grid.modulus();
    let hull = grid_hull(&grid)?;
    let nr = BigInt::from(n);
    Ok(hull
        .into_iter()
        .map(|j| signed_residue(j, n))
        .filter(|&j| 2 * j != n as i64) // 1/2 is outside the open window
        .map(|j| BigRational::new(BigInt::from(j), nr.clone()) / &alpha)
        .filter(|c| c.abs() <= bound)
        .collect())
}

pub(crate) fn hull_r_using(
    s: &RealFiniteSet,
    grid_hull: &dyn Fn(&GridSet) -> Result<BTreeSet<u64>>,
) -> Result<RealFiniteSet> {
    let polar = polar_r(s)?;
    let candidates = hull_r_candidates(s, grid_hull)?;
    Ok(RealFiniteSet::new(
        candidates.into_iter().filter(|c| member_hull_with_polar(&polar, c).is_in()),
    ))
}

/// `Q_R(S)` for a finite rational set.
pub fn hull_r(s: &RealFiniteSet) -> Result<RealFiniteSet> {
    hull_r_using(s, &|g| Ok(hull_grid(g)?.hull.residues().clone()))
}

pub fn is_quasi_convex_r(s: &RealFiniteSet) -> Result<bool> {
    Ok(&hull_r(s)? == s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::rat;

    fn real(v: &[(i64, i64)]) -> RealFiniteSet {
        RealFiniteSet::new(v.iter().map(|&(p, q)| rat(p, q)))
    }

    fn sym(v: &[(i64, i64)]) -> RealFiniteSet {
        let mut pts = vec![BigRational::zero()];
        for &(p, q) in v {
            pts.push(rat(p, q));
            pts.push(rat(-p, q));
        }
        RealFiniteSet::new(pts)
    }

    #[test]
    fn polar_examples() {
        let p = polar_r(&real(&[(1, 4)])).unwrap();
        assert_eq!(p.period, rat(4, 1));
        assert_eq!(p.one_period.to_string(), "[0/1,1/1]∪[3/1,4/1]");
        assert!(p.contains(&rat(-1, 1)) && !p.contains(&rat(2, 1)) && p.contains(&rat(9, 1)));

        let p = polar_r(&real(&[(0, 1)])).unwrap();
        assert_eq!(p.period, rat(1, 1));
        assert_eq!(p.one_period.to_string(), "[0/1,1/1]");

        let p = polar_r(&real(&[(1, 6), (1, 2), (1, 1)])).unwrap();
        assert!(p.contains(&rat(1, 4)));
        // 1·(1/2) = 1/2 and 2·(1/6) = 1/3 leave T_+
        assert!(!p.contains(&rat(1, 1)));
        assert!(!p.contains(&rat(2, 1)));
        assert!(polar_r(&RealFiniteSet::default()).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = real(&[(1, 6), (1, 2), (1, 1)]);
        assert_eq!(member_hull_r(&s, &rat(2, 3)).unwrap(), HullMembership::In);
        let s = real(&[(1, 4)]);
        match member_hull_r(&s, &rat(1, 2)).unwrap() {
            HullMembership::Out { witness } => {
                assert!(polar_r(&s).unwrap().contains(&witness));
                assert!(!rational_in_t_plus(&(witness * rat(1, 2))));
            }
            HullMembership::In => panic!("1/2 is not in the hull of {{1/4}}"),
        }
        let s = sym(&[(1, 2), (1, 8)]);
        for p in s.points() {
            assert!(member_hull_r(&s, p).unwrap().is_in());
        }
    }

    #[test]
    fn scaling_examples() {
        assert_eq!(scale_into_half(&real(&[(1, 4)])), rat(1, 1));
        assert_eq!(scale_into_half(&real(&[(1, 2)])), rat(1, 2));
        assert_eq!(scale_into_half(&real(&[(-3, 1)])), rat(1, 8));
    }

    #[test]
    fn hull_examples() {
        let s = sym(&[(1, 2), (1, 8), (1, 32)]);
        assert_eq!(hull_r(&s).unwrap(), s);
        let s = sym(&[(1, 2), (1, 4), (1, 16)]);
        assert!(hull_r(&s).unwrap().contains(&rat(5, 16)));
        let s = sym(&[(1, 4)]);
        assert_eq!(hull_r(&s).unwrap(), s);
        assert_eq!(hull_r(&real(&[(0, 1)])).unwrap(), real(&[(0, 1)]));
    }

    #[test]
    fn hull_members_and_outsiders_agree_with_membership() {
        let s = sym(&[(1, 3), (1, 12)]);
        let polar = polar_r(&s).unwrap();
        let hull = hull_r(&s).unwrap();
        for j in -48..=48 {
            let z = rat(j, 72);
            assert_eq!(member_hull_with_polar(&polar, &z).is_in(), hull.contains(&z), "z = {z}");
            if let HullMembership::Out { witness } = member_hull_with_polar(&polar, &z) {
                assert!(polar.contains(&witness));
                assert!(!rational_in_t_plus(&(witness * &z)));
            }
        }
    }
}
