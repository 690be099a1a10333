//! Polars and quasi-convex hulls of finite sets in `T`-grids and in `Z(n)`.
//!
//! A grid set `E ⊆ (1/N)Z/Z` is annihilated by `N`, so every multiple of `N`
//! lies in `E^▷` and `E^▷` is a union of residue classes mod `N`. A hull
//! point `x` then satisfies `k N x ∈ T_+` for every integer `k`, i.e. the
//! whole subgroup `<N x>` sits inside `T_+`. The only such subgroup is `{0}`,
//! so `N x = 0` and the hull is again a subset of the grid. Both polar and
//! hull are therefore finite computations over residues mod `N`.
//!
//! For `Z(n)` the dual is `Z(n)` with pairing `χ_k(x) = k x / n`, so the same
//! residue engine serves both carriers.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::circle::UnitRational;
use crate::error::{invalid, Result};
use crate::families::DivisibleChain;

/// `r/n ∈ T_+` for a residue `r` (any integer value, reduced mod `n`).
#[inline]
pub fn residue_in_t_plus(r: u64, n: u64) -> bool {
    let r = r % n;
    let d = r.min(n - r) as u128;
    4 * d <= n as u128
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    if n <= u32::MAX as u64 {
        (a % n) * (b % n) % n
    } else {
        ((a as u128 * b as u128) % n as u128) as u64
    }
}

#[inline]
pub(crate) fn neg_mod(a: u64, n: u64) -> u64 {
    (n - a % n) % n
}

/// Reduce a signed integer into `[0, n)`.
#[inline]
pub fn to_residue(x: i64, n: u64) -> u64 {
    (x as i128).rem_euclid(n as i128) as u64
}

/// Shared behaviour of residue-backed finite sets.
pub trait ResidueSet: Clone {
    fn modulus(&self) -> u64;
    fn residues(&self) -> &BTreeSet<u64>;
    fn from_residues(modulus: u64, residues: BTreeSet<u64>) -> Self;

    fn contains(&self, r: u64) -> bool {
        self.residues().contains(&(r % self.modulus()))
    }

    fn len(&self) -> usize {
        self.residues().len()
    }

    fn is_empty(&self) -> bool {
        self.residues().is_empty()
    }

    fn is_symmetric(&self) -> bool {
        let n = self.modulus();
        self.residues().iter().all(|&r| self.contains(neg_mod(r, n)))
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.modulus() == other.modulus() && self.residues().is_subset(other.residues())
    }
}

fn collect_residues(modulus: u64, it: impl IntoIterator<Item = i64>) -> Result<BTreeSet<u64>> {
    if modulus == 0 {
        return invalid("modulus must be positive");
    }
    Ok(it.into_iter().map(|x| to_residue(x, modulus)).collect())
}

/// Finite subset of the grid `(1/N)Z/Z ⊆ T`; residue `j` stands for `j/N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GridSet {
    modulus: u64,
    points: BTreeSet<u64>,
}

impl GridSet {
    pub fn new(modulus: u64, residues: impl IntoIterator<Item = i64>) -> Result<Self> {
        Ok(Self { modulus, points: collect_residues(modulus, residues)? })
    }

    /// Grid set through the points of `T` given; the modulus is their least
    /// common denominator unless a multiple is requested.
    pub fn from_points(points: &[UnitRational], modulus: Option<u64>) -> Result<Self> {
        let lcd = crate::circle::lcm_all(points.iter().map(|p| p.denom()));
        let lcd: u64 = match u64::try_from(&lcd) {
            Ok(v) => v,
            Err(_) => return invalid("grid modulus too large"),
        };
        let n = modulus.unwrap_or(lcd);
        if n == 0 || n % lcd != 0 {
            return invalid(format!("grid 1/{n} does not contain all points (need a multiple of {lcd})"));
        }
        let mut set = BTreeSet::new();
        for p in points {
            let scale = BigInt::from(n) / p.denom();
            let j = p.numer() * scale;
            let j = i64::try_from(&j).expect("grid residue fits in i64");
            set.insert(to_residue(j, n));
        }
        Ok(Self { modulus: n, points: set })
    }

    pub fn point(&self, j: u64) -> UnitRational {
        UnitRational::new(j as i64, self.modulus as i64).expect("nonzero modulus")
    }

    pub fn points_t(&self) -> Vec<UnitRational> {
        self.points.iter().map(|&j| self.point(j)).collect()
    }

    /// Same points on a finer grid `multiple · N`.
    pub fn refine(&self, multiple: u64) -> Self {
        let n = self.modulus * multiple;
        Self { modulus: n, points: self.points.iter().map(|&j| j * multiple).collect() }
    }
}

impl ResidueSet for GridSet {
    fn modulus(&self) -> u64 {
        self.modulus
    }
    fn residues(&self) -> &BTreeSet<u64> {
        &self.points
    }
    fn from_residues(modulus: u64, residues: BTreeSet<u64>) -> Self {
        Self { modulus, points: residues }
    }
}

/// Finite subset of `Z(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicSet {
    order: u64,
    elements: BTreeSet<u64>,
}

impl CyclicSet {
    pub fn new(order: u64, elements: impl IntoIterator<Item = i64>) -> Result<Self> {
        Ok(Self { order, elements: collect_residues(order, elements)? })
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Signed representatives in `(-n/2, n/2]`, sorted.
    pub fn signed_elements(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.elements.iter().map(|&x| signed_residue(x, self.order)).collect();
        v.sort_unstable();
        v
    }
}

impl ResidueSet for CyclicSet {
    fn modulus(&self) -> u64 {
        self.order
    }
    fn residues(&self) -> &BTreeSet<u64> {
        &self.elements
    }
    fn from_residues(modulus: u64, residues: BTreeSet<u64>) -> Self {
        Self { order: modulus, elements: residues }
    }
}

/// Canonical signed representative of `x mod n` in `(-n/2, n/2]`.
pub fn signed_residue(x: u64, n: u64) -> i64 {
    let x = x % n;
    if 2 * x > n {
        x as i64 - n as i64
    } else {
        x as i64
    }
}

/// Polar of a residue set, as residues `k mod N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarSet {
    pub modulus: u64,
    pub residues: BTreeSet<u64>,
}

impl PolarSet {
    pub fn contains(&self, k: u64) -> bool {
        self.residues.contains(&(k % self.modulus))
    }

    /// Membership of an arbitrary integer character: the full polar in `Z`
    /// is the union of the stored classes.
    pub fn contains_integer(&self, k: &BigInt) -> bool {
        let n = BigInt::from(self.modulus);
        let r = ((k % &n) + &n) % &n;
        self.contains(u64::try_from(&r).expect("residue fits"))
    }
}

/// Hull together with one excluding character per excluded residue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullReport<S> {
    pub input: S,
    pub hull: S,
    /// Excluded residue → smallest nonnegative residue `k` of the polar with
    /// `k·x ∉ T_+`.
    pub witnesses: BTreeMap<u64, u64>,
}

impl<S: ResidueSet> HullReport<S> {
    pub fn is_quasi_convex(&self) -> bool {
        self.hull.residues() == self.input.residues()
    }

    /// Re-check every witness against a freshly computed polar.
    pub fn witnesses_verify(&self) -> bool {
        let n = self.input.modulus();
        let Ok(polar) = polar_residues(n, self.input.residues()) else {
            return false;
        };
        let polar: HashSet<u64> = polar.into_iter().collect();
        self.witnesses.iter().all(|(&x, &k)| {
            polar.contains(&k) && !residue_in_t_plus(mul_mod(k, x, n), n) && !self.hull.contains(x)
        }) && (self.witnesses.len() + self.hull.len()) as u64 == n
    }
}

/// `{k mod n : k x / n ∈ T_+ for all x ∈ E}`, ascending.
pub fn polar_residues(n: u64, elements: &BTreeSet<u64>) -> Result<Vec<u64>> {
    if elements.is_empty() {
        return invalid("polar of the empty set is not defined");
    }
    let nonzero: Vec<u64> = elements.iter().copied().filter(|&x| x % n != 0).collect();
    Ok((0..n)
        .filter(|&k| nonzero.iter().all(|&x| residue_in_t_plus(mul_mod(k, x, n), n)))
        .collect())
}

/// Hull residues and witnesses given an ascending polar.
pub fn hull_from_polar(n: u64, polar: &[u64]) -> (BTreeSet<u64>, BTreeMap<u64, u64>) {
    let mut hull = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for x in 0..n {
        match polar.iter().find(|&&k| !residue_in_t_plus(mul_mod(k, x, n), n)) {
            Some(&k) => {
                witnesses.insert(x, k);
            }
            None => {
                hull.insert(x);
            }
        }
    }
    (hull, witnesses)
}

pub fn polar<S: ResidueSet>(set: &S) -> Result<PolarSet> {
    let n = set.modulus();
    Ok(PolarSet { modulus: n, residues: polar_residues(n, set.residues())?.into_iter().collect() })
}

pub fn hull<S: ResidueSet>(set: &S) -> Result<HullReport<S>> {
    let n = set.modulus();
    let polar = polar_residues(n, set.residues())?;
    let (hull, witnesses) = hull_from_polar(n, &polar);
    Ok(HullReport { input: set.clone(), hull: S::from_residues(n, hull), witnesses })
}

/// `target ∈ Q(E)`; on exclusion returns the smallest excluding character.
pub fn hull_membership<S: ResidueSet>(set: &S, target: u64) -> Result<Option<u64>> {
    let n = set.modulus();
    let polar = polar_residues(n, set.residues())?;
    let t = target % n;
    Ok(polar.into_iter().find(|&k| !residue_in_t_plus(mul_mod(k, t, n), n)))
}

pub fn in_hull<S: ResidueSet>(set: &S, target: u64) -> Result<bool> {
    Ok(hull_membership(set, target)?.is_none())
}

pub fn polar_grid(set: &GridSet) -> Result<PolarSet> {
    polar(set)
}

pub fn hull_grid(set: &GridSet) -> Result<HullReport<GridSet>> {
    hull(set)
}

pub fn polar_cyclic(set: &CyclicSet) -> Result<CyclicSet> {
    let p = polar(set)?;
    Ok(CyclicSet::from_residues(p.modulus, p.residues))
}

pub fn hull_cyclic(set: &CyclicSet) -> Result<HullReport<CyclicSet>> {
    hull(set)
}

pub fn is_quasi_convex<S: ResidueSet>(set: &S) -> Result<bool> {
    Ok(hull(set)?.is_quasi_convex())
}

/// Precomputed pairing table for small moduli: bit `j` of row `k` is set iff
/// `k j / n ∈ T_+`. The table is symmetric, so row `x` also describes the
/// characters keeping `x` inside `T_+`; polars and hulls become word-wise ANDs.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

pub const CHARACTER_TABLE_MAX: u64 = 16384;

impl CharacterTable {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n > CHARACTER_TABLE_MAX {
            return invalid(format!("character table supports 1 <= n <= {CHARACTER_TABLE_MAX}"));
        }
        let nn = n as usize;
        let words = nn.div_ceil(64);
        let mut rows = vec![0u64; nn * words];
        for k in 0..nn {
            let row = &mut rows[k * words..(k + 1) * words];
            for j in 0..nn {
                if residue_in_t_plus((k * j) as u64, n) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        }
        Ok(Self { n: nn, words, rows })
    }

    pub fn modulus(&self) -> u64 {
        self.n as u64
    }

    pub fn words(&self) -> usize {
        self.words
    }

    fn row(&self, k: usize) -> &[u64] {
        &self.rows[k * self.words..(k + 1) * self.words]
    }

    pub fn full(&self) -> Vec<u64> {
        let mut v = vec![!0u64; self.words];
        let tail = self.n % 64;
        if tail != 0 {
            *v.last_mut().unwrap() = (1u64 << tail) - 1;
        }
        v
    }

    pub fn bits_of(&self, elements: impl IntoIterator<Item = u64>) -> Vec<u64> {
        let mut v = vec![0u64; self.words];
        for x in elements {
            let x = (x % self.n as u64) as usize;
            v[x / 64] |= 1 << (x % 64);
        }
        v
    }

    /// Polar as a bitset over `k ∈ [0, n)`.
    pub fn polar_bits(&self, set_bits: &[u64]) -> Vec<u64> {
        let mut acc = self.full();
        for_each_bit(set_bits, |x| {
            for (a, r) in acc.iter_mut().zip(self.row(x)) {
                *a &= r;
            }
        });
        acc
    }

    /// Hull as a bitset over `x ∈ [0, n)`.
    pub fn hull_bits(&self, set_bits: &[u64]) -> Vec<u64> {
        let polar = self.polar_bits(set_bits);
        let mut acc = self.full();
        for_each_bit(&polar, |k| {
            for (a, r) in acc.iter_mut().zip(self.row(k)) {
                *a &= r;
            }
        });
        acc
    }

    pub fn is_quasi_convex_bits(&self, set_bits: &[u64]) -> bool {
        self.hull_bits(set_bits) == set_bits
    }

    /// `x ∈ Q(E)` given `E^▷` as bits: every polar character keeps `x` in `T_+`.
    pub fn in_hull_of_polar(&self, polar_bits: &[u64], x: u64) -> bool {
        let row = self.row((x % self.n as u64) as usize);
        polar_bits.iter().zip(row).all(|(p, r)| p & !r == 0)
    }

    pub fn hull_set(&self, set: &BTreeSet<u64>) -> BTreeSet<u64> {
        bits_to_set(&self.hull_bits(&self.bits_of(set.iter().copied())))
    }
}

/// Character tables built on first use, one per modulus.
#[derive(Debug, Default)]
pub struct TableCache {
    tables: std::collections::HashMap<u64, CharacterTable>,
}

impl TableCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, n: u64) -> Result<&CharacterTable> {
        if !self.tables.contains_key(&n) {
            self.tables.insert(n, CharacterTable::new(n)?);
        }
        Ok(&self.tables[&n])
    }

    /// Hull of a residue set, through the table when the modulus allows it.
    pub fn hull_of<S: ResidueSet>(&mut self, set: &S) -> Result<BTreeSet<u64>> {
        if set.is_empty() {
            return invalid("polar of the empty set is not defined");
        }
        if set.modulus() <= CHARACTER_TABLE_MAX {
            Ok(self.get(set.modulus())?.hull_set(set.residues()))
        } else {
            Ok(hull(set)?.hull.residues().clone())
        }
    }

    pub fn is_quasi_convex<S: ResidueSet>(&mut self, set: &S) -> Result<bool> {
        Ok(&self.hull_of(set)? == set.residues())
    }
}

pub fn for_each_bit(bits: &[u64], mut f: impl FnMut(usize)) {
    for (w, &word) in bits.iter().enumerate() {
        let mut m = word;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            f(w * 64 + b);
            m &= m - 1;
        }
    }
}

pub fn bits_to_set(bits: &[u64]) -> BTreeSet<u64> {
    let mut s = BTreeSet::new();
    for_each_bit(bits, |x| {
        s.insert(x as u64);
    });
    s
}

/// Continuous homomorphisms between the finite carriers handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Homomorphism {
    /// `x ↦ k x` on the grid `(1/N)Z/Z` (or on `Z(N)`).
    Multiply { modulus: u64, factor: u64 },
    /// `Z(n) → Z(d)`, `x ↦ x mod d`, for `d | n`.
    Quotient { from: u64, to: u64 },
}

impl Homomorphism {
    pub fn source_modulus(&self) -> u64 {
        match *self {
            Self::Multiply { modulus, .. } => modulus,
            Self::Quotient { from, .. } => from,
        }
    }

    pub fn target_modulus(&self) -> u64 {
        match *self {
            Self::Multiply { modulus, .. } => modulus,
            Self::Quotient { to, .. } => to,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Self::Multiply { modulus, .. } if modulus == 0 => invalid("modulus must be positive"),
            Self::Quotient { from, to } if to == 0 || from == 0 || from % to != 0 => {
                invalid(format!("Z({from}) -> Z({to}) is not a quotient map"))
            }
            _ => Ok(()),
        }
    }

    pub fn apply(&self, x: u64) -> u64 {
        match *self {
            Self::Multiply { modulus, factor } => mul_mod(x, factor, modulus),
            Self::Quotient { to, .. } => x % to,
        }
    }
}

/// `f(Q(E)) ⊆ Q(f(E))`. A `false` return means the hull engine is wrong.
pub fn pushforward_check<S: ResidueSet>(f: &Homomorphism, set: &S) -> Result<bool> {
    f.validate()?;
    if set.modulus() != f.source_modulus() {
        return invalid(format!(
            "set lives in modulus {}, map expects {}",
            set.modulus(),
            f.source_modulus()
        ));
    }
    let source_hull = hull(set)?.hull;
    let image: BTreeSet<u64> = set.residues().iter().map(|&x| f.apply(x)).collect();
    let target_hull = hull(&S::from_residues(f.target_modulus(), image))?.hull;
    Ok(source_hull.residues().iter().all(|&x| target_hull.contains(f.apply(x))))
}

/// `pushforward_check` on precomputed tables of source and target modulus.
pub fn pushforward_check_tables(
    f: &Homomorphism,
    source: &CharacterTable,
    target: &CharacterTable,
    set: &BTreeSet<u64>,
) -> Result<bool> {
    f.validate()?;
    if source.modulus() != f.source_modulus() || target.modulus() != f.target_modulus() {
        return invalid("tables do not match the map");
    }
    if set.is_empty() {
        return invalid("polar of the empty set is not defined");
    }
    let source_hull = source.hull_bits(&source.bits_of(set.iter().copied()));
    let image = target.bits_of(set.iter().map(|&x| f.apply(x)));
    let target_polar = target.polar_bits(&image);
    let mut ok = true;
    for_each_bit(&source_hull, |x| {
        ok &= target.in_hull_of_polar(&target_polar, f.apply(x as u64));
    });
    Ok(ok)
}

/// `Tr_x = {χ(x) : χ ∈ Ẑ(n)} = {k x / n mod 1}`.
pub fn trace_subgroup(x: u64, n: u64) -> Result<BTreeSet<UnitRational>> {
    if n == 0 {
        return invalid("order must be positive");
    }
    Ok((0..n)
        .map(|k| UnitRational::new(mul_mod(k, x, n) as i64, n as i64).expect("n > 0"))
        .collect())
}

/// The four conditions of the `2x ∈ Q({x, 3x})` equivalence, each evaluated
/// on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TwoXReport {
    /// `2x ∈ Q({x, 3x})`, by hull computation.
    pub i: bool,
    /// `±1/4 ∉ Tr_x`.
    pub ii: bool,
    /// `1/2 ∉ Tr_{2x}`.
    pub iii: bool,
    /// `Tr_{2x}` has no nonzero element of 2-power order.
    pub iv: bool,
}

impl TwoXReport {
    pub fn all_equal(&self) -> bool {
        self.i == self.ii && self.ii == self.iii && self.iii == self.iv
    }
}

pub fn check_two_x_equivalence(x: u64, n: u64) -> Result<TwoXReport> {
    let x = x % n.max(1);
    let set = CyclicSet::new(n, [x as i64, mul_mod(3, x, n) as i64])?;
    let i = in_hull(&set, mul_mod(2, x, n))?;

    let quarter = UnitRational::new(1, 4)?;
    let tr_x = trace_subgroup(x, n)?;
    let ii = !tr_x.contains(&quarter) && !tr_x.contains(&-&quarter);

    let tr_2x = trace_subgroup(mul_mod(2, x, n), n)?;
    let iii = !tr_2x.contains(&UnitRational::new(1, 2)?);

    let iv = !tr_2x.iter().any(|t| {
        let d = t.order();
        !t.is_zero() && (&d & (&d - 1u32)) == BigInt::from(0u32)
    });
    Ok(TwoXReport { i, ii, iii, iv })
}

/// For a divisible chain: `1/b_i + 1/b_j ∈ {1/b_n}` forces `i = j`.
pub fn unit_fraction_chain_check(chain: &DivisibleChain) -> bool {
    let b = chain.terms();
    for i in 0..b.len() {
        for j in i..b.len() {
            let (bi, bj) = (b[i] as u128, b[j] as u128);
            // 1/bi + 1/bj = 1/bn  <=>  bn (bi + bj) = bi bj
            let hit = b.iter().any(|&bn| bn as u128 * (bi + bj) == bi * bj);
            if hit && i != j {
                return false;
            }
        }
    }
    true
}

/// Outcome counts of the division-lemma sweep on one grid.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DivisionLemmaStats {
    /// `(Y, m, k)` triples with `kY` quasi-convex, clause (a).
    pub triggered_a: u64,
    /// `(Y, m)` pairs with `4mY` quasi-convex, clause (b).
    pub triggered_b: u64,
    pub cases: u64,
}

fn symmetric_subsets_within(n: u64, radius: u64) -> Vec<Vec<u64>> {
    // radius: largest j with j/n in the arc; orbits {0}, {±1}, ..., {±radius}
    let orbits: Vec<Vec<u64>> = std::iter::once(vec![0])
        .chain((1..=radius).map(|j| if 2 * j == n { vec![j] } else { vec![j, n - j] }))
        .collect();
    let count = 1u64 << orbits.len();
    (0..count)
        .map(|mask| {
            orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, o)| o.iter().copied())
                .collect()
        })
        .collect()
}

/// Both clauses of the scaling lemma on the grid `(1/n)Z/Z`:
/// (a) `Y ⊆ T_m` symmetric, `0 < k <= 2m`, `kY` quasi-convex ⇒ `Y` quasi-convex;
/// (b) `Y ⊆ T_{4m}` symmetric, `4m | n`, `4mY` quasi-convex ⇒
/// `{±1/(4m)} ∪ Y` quasi-convex.
/// Returns the first counterexample as text.
pub fn check_division_lemma(n: u64) -> std::result::Result<DivisionLemmaStats, String> {
    let table = CharacterTable::new(n).map_err(|e| e.to_string())?;
    let mut stats = DivisionLemmaStats::default();
    let scaled = |ys: &[u64], k: u64| table.bits_of(ys.iter().map(|&y| mul_mod(y, k, n)));

    for m in 1..=(n / 4).max(1) {
        let radius = n / (4 * m);
        for ys in symmetric_subsets_within(n, radius) {
            let y_bits = table.bits_of(ys.iter().copied());
            let mut y_qc: Option<bool> = None;
            for k in 1..=2 * m {
                stats.cases += 1;
                if table.is_quasi_convex_bits(&scaled(&ys, k)) {
                    stats.triggered_a += 1;
                    let qc = *y_qc.get_or_insert_with(|| table.is_quasi_convex_bits(&y_bits));
                    if !qc {
                        return Err(format!("clause (a) fails: n={n} m={m} k={k} Y={ys:?}"));
                    }
                }
            }
        }
        if n % (4 * m) == 0 {
            let radius = n / (16 * m);
            let p = n / (4 * m);
            for ys in symmetric_subsets_within(n, radius) {
                stats.cases += 1;
                if table.is_quasi_convex_bits(&scaled(&ys, 4 * m)) {
                    stats.triggered_b += 1;
                    let extended =
                        table.bits_of(ys.iter().copied().chain([p, n - p]));
                    if !table.is_quasi_convex_bits(&extended) {
                        return Err(format!("clause (b) fails: n={n} m={m} Y={ys:?}"));
                    }
                }
            }
        }
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(n: u64, r: &[i64]) -> GridSet {
        GridSet::new(n, r.iter().copied()).unwrap()
    }

    fn cyc(n: u64, r: &[i64]) -> CyclicSet {
        CyclicSet::new(n, r.iter().copied()).unwrap()
    }

    fn set(v: &[u64]) -> BTreeSet<u64> {
        v.iter().copied().collect()
    }

    #[test]
    fn polar_grid_examples() {
        let p = polar_grid(&grid(8, &[0, 1, -1])).unwrap();
        assert_eq!(p.residues, set(&[0, 1, 2, 6, 7]));
        let p = polar_grid(&grid(4, &[1, -1])).unwrap();
        assert_eq!(p.residues, set(&[0, 1, 3]));
        let p = polar_grid(&grid(1, &[0])).unwrap();
        assert_eq!(p.residues, set(&[0]));
        assert!(p.contains_integer(&BigInt::from(-17)));
    }

    #[test]
    fn empty_polar_is_rejected() {
        assert!(polar_grid(&grid(8, &[])).is_err());
        assert!(hull_cyclic(&cyc(8, &[])).is_err());
    }

    #[test]
    fn hull_grid_examples() {
        let h = hull_grid(&grid(8, &[1])).unwrap();
        assert_eq!(h.hull.residues(), &set(&[0, 1, 7]));
        assert!(h.witnesses_verify());

        let e = grid(16, &[0, 1, -1, 4, -4]);
        assert!(hull_grid(&e).unwrap().is_quasi_convex());

        let h = hull_grid(&grid(27, &[0, 3, -3, 1, -1])).unwrap();
        assert!(h.hull.contains(2));
        assert!(!h.is_quasi_convex());
    }

    #[test]
    fn hull_cyclic_examples() {
        assert!(hull_cyclic(&cyc(24, &[1, 3, 6])).unwrap().hull.contains(4));
        assert!(hull_cyclic(&cyc(64, &[1, 4, 8])).unwrap().hull.contains(5));
        let h = hull_cyclic(&cyc(12, &[1, 3])).unwrap();
        assert!(!h.hull.contains(2));
        assert_eq!(h.witnesses[&2], 3);
    }

    #[test]
    fn quasi_convexity_examples() {
        assert!(is_quasi_convex(&grid(16, &[0, 1, -1, 4, -4])).unwrap());
        assert!(!is_quasi_convex(&grid(27, &[0, 3, -3, 1, -1])).unwrap());
        for n in 1..10 {
            assert!(is_quasi_convex(&grid(n, &[0])).unwrap());
        }
    }

    #[test]
    fn pushforward_examples() {
        let f = Homomorphism::Multiply { modulus: 32, factor: 8 };
        assert!(pushforward_check(&f, &grid(32, &[0, 1, -1, 4, -4])).unwrap());
        let q = Homomorphism::Quotient { from: 27, to: 9 };
        assert!(pushforward_check(&q, &cyc(27, &[1, 3])).unwrap());
        let bad = Homomorphism::Quotient { from: 27, to: 5 };
        assert!(pushforward_check(&bad, &cyc(27, &[1])).is_err());
        assert!(pushforward_check(&q, &cyc(9, &[1])).is_err());
    }

    #[test]
    fn pushforward_exhaustive_small() {
        for n in 1..=24u64 {
            let elems: Vec<u64> = (0..n).collect();
            for a in 0..n {
                for b in a..n {
                    let e = CyclicSet::from_residues(n, set(&[elems[a as usize], elems[b as usize]]));
                    for k in 0..n {
                        let f = Homomorphism::Multiply { modulus: n, factor: k };
                        assert!(pushforward_check(&f, &e).unwrap());
                    }
                    for d in (1..=n).filter(|d| n % d == 0) {
                        let f = Homomorphism::Quotient { from: n, to: d };
                        assert!(pushforward_check(&f, &e).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn trace_subgroups() {
        let u = |p, q| UnitRational::new(p, q).unwrap();
        let t = trace_subgroup(1, 4).unwrap();
        assert_eq!(t, [u(0, 1), u(1, 4), u(1, 2), u(3, 4)].into_iter().collect());
        assert_eq!(trace_subgroup(3, 12).unwrap(), t);
        let t = trace_subgroup(2, 9).unwrap();
        assert_eq!(t.len(), 9);
        assert!(t.contains(&u(1, 9)));
    }

    #[test]
    fn two_x_examples() {
        let r = check_two_x_equivalence(1, 9).unwrap();
        assert_eq!(r, TwoXReport { i: true, ii: true, iii: true, iv: true });
        let r = check_two_x_equivalence(1, 12).unwrap();
        assert_eq!(r, TwoXReport { i: false, ii: false, iii: false, iv: false });
        let r = check_two_x_equivalence(0, 5).unwrap();
        assert!(r.i && r.all_equal());
    }

    #[test]
    fn unit_fraction_chains() {
        let c = |v: &[u64]| DivisibleChain::new(v.to_vec()).unwrap();
        assert!(unit_fraction_chain_check(&c(&[4, 8, 32])));
        assert!(unit_fraction_chain_check(&c(&[2, 4])));
    }

    #[test]
    fn table_agrees_with_residue_engine() {
        for n in 1..=40u64 {
            let table = CharacterTable::new(n).unwrap();
            for a in 0..n {
                for b in [0, 1, n / 3, n / 2] {
                    let e = CyclicSet::from_residues(n, set(&[a, b % n]));
                    let h = hull_cyclic(&e).unwrap();
                    let bits = table.hull_bits(&table.bits_of(e.residues().iter().copied()));
                    assert_eq!(&bits_to_set(&bits), h.hull.residues(), "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn division_lemma_small_grids() {
        for n in 1..=32 {
            check_division_lemma(n).unwrap();
        }
    }

    #[test]
    fn signed_residues() {
        assert_eq!(signed_residue(26, 27), -1);
        assert_eq!(signed_residue(2, 4), 2);
        assert_eq!(cyc(9, &[8, 1, 0]).signed_elements(), vec![-1, 0, 1]);
    }
}
