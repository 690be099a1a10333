//! Gap sequences, divisible chains, the four point families
//! `K_{a,2}`, `R_{a,2}`, `K_{a,3}`, `L_{a,3}`, and verdict functions for their
//! quasi-convexity.
//!
//! Sequences are finite prefixes. A verdict evaluates the characterizing
//! conditions on the data given; it speaks about every infinite sequence
//! that extends the prefix without adding new violations (for example by
//! continuing with gaps of 3).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::circle::{UnitRational, rat};
use crate::error::{invalid, Error, Result};
use crate::polar::GridSet;
use crate::real_line::RealFiniteSet;

/// Strictly increasing integer sequence `a_0 < a_1 < …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct GapSequence {
    entries: Vec<i64>,
}

impl GapSequence {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return invalid("sequence must have at least one entry");
        }
        if let Some(w) = entries.windows(2).find(|w| w[1] <= w[0]) {
            return invalid(format!("sequence not strictly increasing at {} -> {}", w[0], w[1]));
        }
        Ok(Self { entries })
    }

    /// As `new`, additionally requiring nonnegative entries (T- and J-families).
    pub fn nonnegative(entries: Vec<i64>) -> Result<Self> {
        let s = Self::new(entries)?;
        s.require_nonnegative()?;
        Ok(s)
    }

    pub fn require_nonnegative(&self) -> Result<()> {
        if self.entries[0] < 0 {
            return invalid(format!("entries must be nonnegative, got {}", self.entries[0]));
        }
        Ok(())
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> i64 {
        self.entries[0]
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().expect("nonempty")
    }

    pub fn gaps(&self) -> Vec<i64> {
        self.entries.windows(2).map(|w| w[1] - w[0]).collect()
    }

    pub fn prefix(&self, len: usize) -> Result<Self> {
        if len == 0 || len > self.len() {
            return invalid(format!("prefix length {len} out of range 1..={}", self.len()));
        }
        Ok(Self { entries: self.entries[..len].to_vec() })
    }

    /// Appends `last + gap`.
    pub fn extended(&self, gap: i64) -> Self {
        let mut entries = self.entries.clone();
        entries.push(self.last() + gap);
        Self { entries }
    }

    /// `a ↦ a - a_0 + 1`: same gaps, first entry 1.
    pub fn normalized(&self) -> Self {
        let shift = self.first() - 1;
        Self { entries: self.entries.iter().map(|a| a - shift).collect() }
    }

    pub fn contains(&self, k: i64) -> bool {
        self.entries.binary_search(&k).is_ok()
    }

    pub fn gaps_exceed_one(&self) -> bool {
        self.gaps().iter().all(|&g| g > 1)
    }
}

impl TryFrom<Vec<i64>> for GapSequence {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<GapSequence> for Vec<i64> {
    fn from(s: GapSequence) -> Self {
        s.entries
    }
}

impl FromStr for GapSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

impl fmt::Display for GapSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Comma-separated integers, optionally wrapped in `()` or `[]`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .or_else(|| s.strip_prefix('[').and_then(|t| t.strip_suffix(']')))
        .unwrap_or(s);
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("not an integer: {t:?}"))))
        .collect()
}

/// `b_0 | b_1 | …` with `b_0 > 1`, strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DivisibleChain {
    terms: Vec<u64>,
}

impl DivisibleChain {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return invalid("chain must have at least one term");
        }
        if terms[0] <= 1 {
            return invalid("chain must start above 1");
        }
        for w in terms.windows(2) {
            if w[1] <= w[0] || w[1] % w[0] != 0 {
                return invalid(format!("{} does not properly divide {}", w[0], w[1]));
            }
        }
        Ok(Self { terms })
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    /// `q_n = b_{n+1} / b_n`.
    pub fn ratios(&self) -> Vec<u64> {
        self.terms.windows(2).map(|w| w[1] / w[0]).collect()
    }

    /// `X = {0} ∪ {±1/b_n}` on the grid `1/b_last`.
    pub fn points_t(&self) -> GridSet {
        let n = *self.terms.last().unwrap();
        let mut r = vec![0i64];
        for &b in &self.terms {
            let j = (n / b) as i64;
            r.extend([j, -j]);
        }
        GridSet::new(n, r).expect("positive modulus")
    }

    /// `S = {0} ∪ {±1/b_n} ⊆ R`.
    pub fn points_r(&self) -> RealFiniteSet {
        let mut pts = vec![BigRational::zero()];
        for &b in &self.terms {
            let x = BigRational::new(BigInt::one(), BigInt::from(b));
            pts.push(-x.clone());
            pts.push(x);
        }
        RealFiniteSet::new(pts)
    }
}

impl FromStr for DivisibleChain {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = parse_int_list(s)?;
        if v.iter().any(|&b| b < 0) {
            return invalid("chain terms must be positive");
        }
        Self::new(v.into_iter().map(|b| b as u64).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    /// `K_{a,2} = {0} ∪ {±2^{-(a_n+1)}} ⊆ T`
    T2,
    /// `R_{a,2} = {0} ∪ {±2^{-(a_n+1)}} ⊆ R`
    R2,
    /// `K_{a,3} = {0} ∪ {±3^{-(a_n+1)}} ⊆ T`
    T3,
    /// `L_{a,3} = {0} ∪ {±3^{a_n}} ⊆ J_3`
    J3,
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T2" => Ok(Self::T2),
            "R2" => Ok(Self::R2),
            "T3" => Ok(Self::T3),
            "J3" => Ok(Self::J3),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

impl FamilyKind {
    pub fn prime(&self) -> u64 {
        match self {
            Self::T2 | Self::R2 => 2,
            Self::T3 | Self::J3 => 3,
        }
    }
}

fn pow_u64(p: u64, e: i64) -> Result<u64> {
    if e < 0 {
        return invalid(format!("negative exponent {e}"));
    }
    u32::try_from(e)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .ok_or_else(|| Error::InvalidInput(format!("{p}^{e} overflows")))
}

fn family_grid(a: &GapSequence, count: usize, p: u64) -> Result<GridSet> {
    a.require_nonnegative()?;
    if count > a.len() {
        return invalid(format!("truncation {count} exceeds sequence length {}", a.len()));
    }
    if count == 0 {
        return GridSet::new(1, [0]);
    }
    let n = pow_u64(p, a.entries()[count - 1] + 1)?;
    let mut r = vec![0i64];
    for &e in &a.entries()[..count] {
        let j = (n / pow_u64(p, e + 1)?) as i64;
        r.extend([j, -j]);
    }
    GridSet::new(n, r)
}

/// First `count` points of `K_{a,2}` (plus `0`) on the grid `2^{-(a_{count-1}+1)}`.
pub fn points_k2(a: &GapSequence, count: usize) -> Result<GridSet> {
    family_grid(a, count, 2)
}

/// First `count` points of `K_{a,3}` (plus `0`) on the grid `3^{-(a_{count-1}+1)}`.
pub fn points_k3(a: &GapSequence, count: usize) -> Result<GridSet> {
    family_grid(a, count, 3)
}

/// First `count` points of `R_{a,2}` (plus `0`); entries may be negative.
pub fn points_r2(a: &GapSequence, count: usize) -> Result<RealFiniteSet> {
    if count > a.len() {
        return invalid(format!("truncation {count} exceeds sequence length {}", a.len()));
    }
    let mut pts = vec![BigRational::zero()];
    for &e in &a.entries()[..count] {
        let x = pow2_rational(-(e + 1));
        pts.push(-x.clone());
        pts.push(x);
    }
    Ok(RealFiniteSet::new(pts))
}

/// `L_{a,3}` truncated into `Z(3^level)`.
pub fn points_l3(a: &GapSequence, level: u32) -> Result<crate::polar::CyclicSet> {
    crate::padic::l3_truncate(a, level)
}

pub(crate) fn pow2_rational(e: i64) -> BigRational {
    let two = BigInt::from(2);
    if e >= 0 {
        BigRational::from_integer(two.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), two.pow((-e) as u32))
    }
}

pub(crate) fn pow3_rational(e: i64) -> BigRational {
    let three = BigInt::from(3);
    if e >= 0 {
        BigRational::from_integer(three.pow(e as u32))
    } else {
        BigRational::new(BigInt::one(), three.pow((-e) as u32))
    }
}

/// `x_n` of the family: `p^{-(a_n+1)}` for T2/R2/T3.
pub fn family_point(kind: FamilyKind, a: &GapSequence, n: usize) -> BigRational {
    let e = -(a.entries()[n] + 1);
    match kind {
        FamilyKind::T2 | FamilyKind::R2 => pow2_rational(e),
        FamilyKind::T3 => pow3_rational(e),
        FamilyKind::J3 => pow3_rational(a.entries()[n]),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    QuasiConvex,
    NotQuasiConvex,
}

/// Identifiers of the characterizing conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// T2: `a_0 > 0`
    AI,
    /// T2: at most one unit gap
    AII,
    /// T2: a unit gap is followed by a gap above 2
    AIII,
    /// R2: at most one unit gap
    BI,
    /// R2: a unit gap is followed by a gap above 2
    BII,
    /// T3: `a_0 > 0`
    CI,
    /// T3: all gaps above 1
    CII,
    /// J3: all gaps above 1
    D,
}

impl Condition {
    pub fn id(&self) -> &'static str {
        match self {
            Self::AI => "A.i",
            Self::AII => "A.ii",
            Self::AIII => "A.iii",
            Self::BI => "B.i",
            Self::BII => "B.ii",
            Self::CI => "C.i",
            Self::CII => "C.ii",
            Self::D => "D",
        }
    }
}

impl Serialize for Condition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// How to build a point that enters the hull but not the set.
/// Indices refer to the sequence; `x_n` is the `n`-th family point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "recipe", rename_all = "kebab-case")]
pub enum WitnessRecipe {
    /// `x_0 + x_n`, where `x_0 = 1/b_0` generates a subgroup inside the set;
    /// `n` is the first index making the sum new.
    TranslateByFirst { n: usize },
    /// `h_1 + h_2` with `h_i = x_{n_i + 1}`, for unit gaps at `n_1 < n_2`.
    SumOfHalves { n1: usize, n2: usize },
    /// `(q+1) h` with `h = x_{n+2}` and `q = x_{n+1}/x_{n+2} ∈ {3, 4}`.
    SuccessorMultiple { n: usize, multiple: u64 },
    /// `2x` with `x = x_{n+1}` and `3x = x_n`.
    DoubleAfterTriple { n: usize },
    /// `2 y_n` with `y_{n+1} = 3 y_n`, in `J_3`.
    DoubleInJ3 { n: usize },
}

impl WitnessRecipe {
    /// Number of sequence entries the recipe reads.
    pub fn required_len(&self) -> usize {
        match *self {
            Self::TranslateByFirst { n } => n + 1,
            Self::SumOfHalves { n2, .. } => n2 + 2,
            Self::SuccessorMultiple { n, .. } => n + 3,
            Self::DoubleAfterTriple { n } => n + 2,
            Self::DoubleInJ3 { n } => n + 2,
        }
    }

    /// The witness point, as an exact rational (for J3: an integer of `J_3`).
    pub fn point(&self, kind: FamilyKind, a: &GapSequence) -> Result<BigRational> {
        if a.len() < self.required_len() {
            return Err(Error::TruncationTooShort {
                what: format!("witness recipe on {a}"),
                required: self.required_len() as u64,
            });
        }
        let x = |n: usize| family_point(kind, a, n);
        Ok(match *self {
            Self::TranslateByFirst { n } => x(0) + x(n),
            Self::SumOfHalves { n1, n2 } => x(n1 + 1) + x(n2 + 1),
            Self::SuccessorMultiple { n, multiple } => x(n + 2) * BigInt::from(multiple),
            Self::DoubleAfterTriple { n } => x(n + 1) * BigInt::from(2),
            Self::DoubleInJ3 { n } => x(n) * BigInt::from(2),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub violated: Option<Condition>,
    pub witness_recipe: Option<WitnessRecipe>,
}

impl Verdict {
    fn ok() -> Self {
        Self { outcome: Outcome::QuasiConvex, violated: None, witness_recipe: None }
    }

    fn fail(c: Condition, w: WitnessRecipe) -> Self {
        Self { outcome: Outcome::NotQuasiConvex, violated: Some(c), witness_recipe: Some(w) }
    }

    pub fn is_quasi_convex(&self) -> bool {
        self.outcome == Outcome::QuasiConvex
    }
}

fn unit_gap_indices(a: &GapSequence) -> Vec<usize> {
    a.gaps().iter().enumerate().filter(|(_, &g)| g == 1).map(|(i, _)| i).collect()
}

/// Shared clauses of T2/R2: at most one unit gap, and a unit gap at `n`
/// must be followed by `g_{n+1} > 2` whenever `g_{n+1}` is known.
fn dyadic_gap_clauses(a: &GapSequence, two_units: Condition, successor: Condition) -> Verdict {
    let units = unit_gap_indices(a);
    if units.len() > 1 {
        return Verdict::fail(two_units, WitnessRecipe::SumOfHalves { n1: units[0], n2: units[1] });
    }
    let gaps = a.gaps();
    if let Some(&n) = units.first() {
        if let Some(&next) = gaps.get(n + 1) {
            if next <= 2 {
                // next == 1 would be a second unit gap, so q_{n+1} = 4
                return Verdict::fail(successor, WitnessRecipe::SuccessorMultiple { n, multiple: 5 });
            }
        }
    }
    Verdict::ok()
}

pub fn verdict_t2(a: &GapSequence) -> Result<Verdict> {
    a.require_nonnegative()?;
    if a.first() == 0 {
        // 1/2 + 1/4 = -1/4 is already in the set, so skip x_n = 1/4
        let n = if a.entries().get(1) == Some(&1) { 2 } else { 1 };
        return Ok(Verdict::fail(Condition::AI, WitnessRecipe::TranslateByFirst { n }));
    }
    Ok(dyadic_gap_clauses(a, Condition::AII, Condition::AIII))
}

pub fn verdict_r2(a: &GapSequence) -> Verdict {
    dyadic_gap_clauses(a, Condition::BI, Condition::BII)
}

pub fn verdict_t3(a: &GapSequence) -> Result<Verdict> {
    a.require_nonnegative()?;
    if a.first() == 0 {
        return Ok(Verdict::fail(Condition::CI, WitnessRecipe::TranslateByFirst { n: 1 }));
    }
    Ok(match unit_gap_indices(a).first() {
        Some(&n) => Verdict::fail(Condition::CII, WitnessRecipe::DoubleAfterTriple { n }),
        None => Verdict::ok(),
    })
}

pub fn verdict_j3(a: &GapSequence) -> Result<Verdict> {
    a.require_nonnegative()?;
    Ok(match unit_gap_indices(a).first() {
        Some(&n) => Verdict::fail(Condition::D, WitnessRecipe::DoubleInJ3 { n }),
        None => Verdict::ok(),
    })
}

pub fn verdict(kind: FamilyKind, a: &GapSequence) -> Result<Verdict> {
    match kind {
        FamilyKind::T2 => verdict_t2(a),
        FamilyKind::R2 => Ok(verdict_r2(a)),
        FamilyKind::T3 => verdict_t3(a),
        FamilyKind::J3 => verdict_j3(a),
    }
}

/// Which earlier sufficient criterion to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SufficiencyCase {
    /// `K_{a,2}` in `T`: `a_0 > 0` and all gaps above 1.
    T2,
    /// `R_{a,2}` in `R`: all gaps above 1.
    R2,
    /// `L_{a,2}` in `J_2`: `a_0 >= 0` and all gaps above 1.
    J2,
}

pub fn sufficient_by_gaps(a: &GapSequence, which: SufficiencyCase) -> bool {
    let gaps_ok = a.gaps_exceed_one();
    match which {
        SufficiencyCase::T2 => a.first() > 0 && gaps_ok,
        SufficiencyCase::R2 => gaps_ok,
        SufficiencyCase::J2 => a.first() >= 0 && gaps_ok,
    }
}

/// `b_n = p^{a_n + 1}`.
pub fn chain_from_family(a: &GapSequence, p: u64) -> Result<DivisibleChain> {
    a.require_nonnegative()?;
    if p < 2 {
        return invalid("prime must be at least 2");
    }
    let terms = a.entries().iter().map(|&e| pow_u64(p, e + 1)).collect::<Result<Vec<_>>>()?;
    DivisibleChain::new(terms)
}

/// Necessary conditions for `X = {0} ∪ {±1/b_n}` to be quasi-convex in `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NecessaryReportT {
    pub b0_at_least_four: bool,
    pub at_most_one_ratio_two: bool,
    pub ratio_two_then_above_four: bool,
    /// `4 ∤ b_{n+1}` ⇒ `q_n ≠ 3`, for every `n`.
    pub ratio_three_needs_four: bool,
}

impl NecessaryReportT {
    pub fn all_pass(&self) -> bool {
        self.b0_at_least_four
            && self.at_most_one_ratio_two
            && self.ratio_two_then_above_four
            && self.ratio_three_needs_four
    }

    pub fn failures(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if !self.b0_at_least_four {
            v.push("b0_at_least_four");
        }
        if !self.at_most_one_ratio_two {
            v.push("at_most_one_ratio_two");
        }
        if !self.ratio_two_then_above_four {
            v.push("ratio_two_then_above_four");
        }
        if !self.ratio_three_needs_four {
            v.push("ratio_three_needs_four");
        }
        v
    }
}

/// Necessary conditions for `S = {0} ∪ {±1/b_n}` to be quasi-convex in `R`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NecessaryReportR {
    pub at_most_one_ratio_two: bool,
    pub ratio_two_then_above_four: bool,
}

impl NecessaryReportR {
    pub fn all_pass(&self) -> bool {
        self.at_most_one_ratio_two && self.ratio_two_then_above_four
    }
}

fn ratio_clauses(q: &[u64]) -> (bool, bool) {
    let twos = q.iter().filter(|&&r| r == 2).count();
    let successor_ok = q.windows(2).all(|w| w[0] != 2 || w[1] > 4);
    (twos <= 1, successor_ok)
}

pub fn necessary_report_t(b: &DivisibleChain) -> NecessaryReportT {
    let q = b.ratios();
    let (one_two, succ) = ratio_clauses(&q);
    let terms = b.terms();
    let three_ok = q.iter().enumerate().all(|(n, &qn)| terms[n + 1] % 4 == 0 || qn != 3);
    NecessaryReportT {
        b0_at_least_four: terms[0] >= 4,
        at_most_one_ratio_two: one_two,
        ratio_two_then_above_four: succ,
        ratio_three_needs_four: three_ok,
    }
}

pub fn necessary_report_r(b: &DivisibleChain) -> NecessaryReportR {
    let (one_two, succ) = ratio_clauses(&b.ratios());
    NecessaryReportR { at_most_one_ratio_two: one_two, ratio_two_then_above_four: succ }
}

/// Which necessary condition a chain breaks, with a point that the hull of
/// `{0} ∪ {±1/b_n}` must contain but the set does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainViolation {
    pub rule: &'static str,
    pub point: BigRational,
}

/// First violation with a new hull point. `circle` adds the two rules that
/// only hold in `T` (`b_0 >= 4` and the `q_n = 3` rule). `None` when no rule
/// yields a point outside the finite data.
pub fn chain_violation(b: &DivisibleChain, circle: bool) -> Option<ChainViolation> {
    let t = b.terms();
    let q = b.ratios();
    let x = |n: usize| rat(1, t[n] as i64);
    let members: std::collections::BTreeSet<UnitRational> = std::iter::once(UnitRational::zero())
        .chain(t.iter().flat_map(|&bn| [UnitRational::from_rational(&rat(1, bn as i64)), UnitRational::from_rational(&rat(-1, bn as i64))]))
        .collect();
    let fresh = |p: &BigRational| {
        if circle {
            !members.contains(&UnitRational::from_rational(p))
        } else {
            p.numer() != &BigInt::one() && p.numer() != &BigInt::from(-1) && !p.is_zero()
        }
    };
    let found = |rule, point: BigRational| Some(ChainViolation { rule, point });
    if circle && t[0] < 4 {
        // 1/b_0 spans a subgroup inside the set, so x_0 + x_n joins the hull
        if let Some(p) = (1..t.len()).map(|n| x(0) + x(n)).find(|p| fresh(p)) {
            return found("b0_at_least_four", p);
        }
    }
    let twos: Vec<usize> = q.iter().enumerate().filter(|(_, &r)| r == 2).map(|(i, _)| i).collect();
    if twos.len() > 1 {
        return found("at_most_one_ratio_two", x(twos[0] + 1) + x(twos[1] + 1));
    }
    for n in 0..q.len().saturating_sub(1) {
        if q[n] == 2 && (q[n + 1] == 3 || q[n + 1] == 4) {
            return found("ratio_two_then_above_four", x(n + 2) * BigInt::from(q[n + 1] + 1));
        }
    }
    if circle {
        for (n, &qn) in q.iter().enumerate() {
            if qn == 3 && t[n + 1] % 4 != 0 {
                return found("ratio_three_needs_four", x(n + 1) * BigInt::from(2));
            }
        }
    }
    None
}

/// Grid-side counterpart of a rational witness point.
pub fn as_unit(r: &BigRational) -> UnitRational {
    UnitRational::from_rational(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polar::ResidueSet;

    fn seq(v: &[i64]) -> GapSequence {
        GapSequence::new(v.to_vec()).unwrap()
    }

    fn chain(v: &[u64]) -> DivisibleChain {
        DivisibleChain::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sequence_validation() {
        assert!(GapSequence::new(vec![]).is_err());
        assert!(GapSequence::new(vec![1, 1]).is_err());
        assert!(GapSequence::nonnegative(vec![-1, 2]).is_err());
        assert!(GapSequence::new(vec![-3, 2]).is_ok());
        assert_eq!(seq(&[1, 2, 5, 8]).gaps(), vec![1, 3, 3]);
        assert_eq!(seq(&[-3, -1, 2]).normalized(), seq(&[1, 3, 6]));
        assert_eq!("1, 3,5".parse::<GapSequence>().unwrap(), seq(&[1, 3, 5]));
    }

    #[test]
    fn chain_validation() {
        assert!(DivisibleChain::new(vec![1, 2]).is_err());
        assert!(DivisibleChain::new(vec![4, 6]).is_err());
        assert!(DivisibleChain::new(vec![4, 4]).is_err());
        assert_eq!(chain(&[4, 8, 64]).ratios(), vec![2, 8]);
    }

    #[test]
    fn family_points() {
        let k3 = points_k3(&seq(&[1, 3]), 2).unwrap();
        assert_eq!(k3.modulus(), 81);
        assert_eq!(k3.residues(), &[0u64, 1, 9, 72, 80].into_iter().collect());
        let l3 = points_l3(&seq(&[0, 2]), 4).unwrap();
        assert_eq!(l3.signed_elements(), vec![-9, -1, 0, 1, 9]);
        let r2 = points_r2(&seq(&[0, 2, 4]), 3).unwrap();
        let expect: Vec<BigRational> =
            [-1, -1, -1, 0, 1, 1, 1].iter().zip([2, 8, 32, 1, 32, 8, 2]).map(|(&p, q)| rat(p, q)).collect();
        assert_eq!(r2.points().iter().cloned().collect::<Vec<_>>(), expect);
        assert!(points_k2(&seq(&[1, 2]), 3).is_err());
        assert_eq!(points_k2(&seq(&[1, 2]), 0).unwrap().modulus(), 1);
    }

    #[test]
    fn verdict_t2_examples() {
        assert!(verdict_t2(&seq(&[1, 2, 5, 8])).unwrap().is_quasi_convex());
        let v = verdict_t2(&seq(&[1, 2, 4])).unwrap();
        assert_eq!(v.violated, Some(Condition::AIII));
        let v = verdict_t2(&seq(&[1, 2, 5, 6])).unwrap();
        assert_eq!(v.violated, Some(Condition::AII));
        assert_eq!(v.witness_recipe, Some(WitnessRecipe::SumOfHalves { n1: 0, n2: 2 }));
        let v = verdict_t2(&seq(&[0, 2, 4])).unwrap();
        assert_eq!(v.violated, Some(Condition::AI));
    }

    #[test]
    fn verdict_r2_examples() {
        assert!(verdict_r2(&seq(&[0, 2, 4])).is_quasi_convex());
        assert!(verdict_r2(&seq(&[0, 1, 4])).is_quasi_convex());
        let v = verdict_r2(&seq(&[0, 1, 3]));
        assert_eq!(v.violated, Some(Condition::BII));
        assert!(verdict_r2(&seq(&[-5, -3, 0])).is_quasi_convex());
    }

    #[test]
    fn verdict_t3_and_j3_examples() {
        assert!(verdict_t3(&seq(&[1, 3, 5])).unwrap().is_quasi_convex());
        assert_eq!(verdict_t3(&seq(&[0, 2, 4])).unwrap().violated, Some(Condition::CI));
        assert_eq!(verdict_t3(&seq(&[1, 2, 4])).unwrap().violated, Some(Condition::CII));
        assert!(verdict_j3(&seq(&[0, 2, 4])).unwrap().is_quasi_convex());
        assert_eq!(verdict_j3(&seq(&[0, 1, 3])).unwrap().violated, Some(Condition::D));
        assert!(verdict_j3(&seq(&[2, 4, 6])).unwrap().is_quasi_convex());
    }

    #[test]
    fn sufficiency_examples() {
        assert!(sufficient_by_gaps(&seq(&[1, 3, 5]), SufficiencyCase::T2));
        assert!(sufficient_by_gaps(&seq(&[0, 2, 4]), SufficiencyCase::J2));
        let a = seq(&[1, 2, 5]);
        assert!(!sufficient_by_gaps(&a, SufficiencyCase::T2));
        assert!(verdict_t2(&a).unwrap().is_quasi_convex());
    }

    #[test]
    fn chains_from_families() {
        let c = chain_from_family(&seq(&[1, 2, 5]), 2).unwrap();
        assert_eq!(c.terms(), &[4, 8, 64]);
        assert_eq!(c.ratios(), vec![2, 8]);
        let c = chain_from_family(&seq(&[1, 3]), 3).unwrap();
        assert_eq!((c.terms(), c.ratios()), (&[9u64, 81][..], vec![9]));
        let c = chain_from_family(&seq(&[0, 1]), 2).unwrap();
        assert_eq!((c.terms(), c.ratios()), (&[2u64, 4][..], vec![2]));
        assert!(chain_from_family(&seq(&[0, 70]), 2).is_err());
    }

    #[test]
    fn necessity_reports() {
        let r = necessary_report_t(&chain(&[2, 8]));
        assert!(!r.b0_at_least_four);
        let r = necessary_report_t(&chain(&[9, 27, 81]));
        assert!(!r.ratio_three_needs_four);
        assert!(r.b0_at_least_four);
        assert!(necessary_report_t(&chain(&[4, 8, 64])).all_pass());

        let r = necessary_report_r(&chain(&[2, 4, 8]));
        assert!(!r.at_most_one_ratio_two);
        let r = necessary_report_r(&chain(&[2, 4, 16]));
        assert!(r.at_most_one_ratio_two && !r.ratio_two_then_above_four);
        assert!(necessary_report_r(&chain(&[2, 4, 128])).all_pass());
    }

    #[test]
    fn witness_points() {
        let a = seq(&[1, 2, 4]);
        let w = WitnessRecipe::SuccessorMultiple { n: 0, multiple: 5 };
        assert_eq!(w.point(FamilyKind::T2, &a).unwrap(), rat(5, 32));
        let w = WitnessRecipe::DoubleAfterTriple { n: 0 };
        assert_eq!(w.point(FamilyKind::T3, &seq(&[1, 2])).unwrap(), rat(2, 27));
        let w = WitnessRecipe::TranslateByFirst { n: 1 };
        assert!(w.point(FamilyKind::T2, &seq(&[0])).is_err());
        let v = verdict_t2(&seq(&[0, 1])).unwrap();
        assert_eq!(v.witness_recipe, Some(WitnessRecipe::TranslateByFirst { n: 2 }));
    }
}
