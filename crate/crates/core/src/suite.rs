//! The twelve end-to-end checks behind the CLI acceptance run and the
//! `acceptance` test target. Each check is exhaustive over its stated range
//! and exact; a failure carries the first counterexample found.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::circle::{rat, t_polar_of_characters, Interval, RationalIntervalUnion, UnitRational};
use crate::families::{
    chain_violation, necessary_report_r, necessary_report_t, points_k2, points_k3, points_r2, verdict_j3,
    verdict_r2, verdict_t2, verdict_t3, Condition, DivisibleChain, FamilyKind, GapSequence,
};
use crate::padic::{compute_jm, epsilon_forms, l3_truncate, q12_set, Carrier};
use crate::polar::{
    check_division_lemma, check_two_x_equivalence, for_each_bit, hull_cyclic, hull_grid, in_hull,
    pushforward_check, pushforward_check_tables, CharacterTable, CyclicSet, GridSet, Homomorphism,
    ResidueSet, TableCache,
};
use crate::real_line::{hull_r_using, member_hull_r};
use crate::witnesses::{
    exclusion_j3, exclusion_parts, exclusion_t3, membership_demo, verify_certificate, DemoCase,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type Check = fn() -> std::result::Result<String, String>;

const CRITERIA: [(u32, &str, Check); 12] = [
    (1, "membership lemmas in Z(n), n <= 100", membership_lemmas),
    (2, "2x in Q({x,3x}) four-way equivalence, n <= 200", two_x_equivalence),
    (3, "polar of {1,4,8} in T", polar_of_one_four_eight),
    (4, "K(1,3,5,7) quasi-convex with exclusion certificates", t3_positive),
    (5, "K_{a,3} negative cases", t3_negative),
    (6, "L_{a,3} in Z(3^M)", j3_cases),
    (7, "Q1 ∩ Q2 equals the epsilon forms", q12_equals_epsilon_forms),
    (8, "J_1 = J_2 = complement of a", jm_complement),
    (9, "T2/R2 verdicts against brute force", verdict_oracle_agreement),
    (10, "necessity reports on divisible chains", necessity_reports),
    (11, "hulls push forward under homomorphisms", functoriality),
    (12, "division lemma on grids N <= 64", division_lemma),
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

pub fn run_criterion(id: u32) -> Option<CriterionResult> {
    let &(id, name, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = check();
    let millis = start.elapsed().as_millis();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionResult { id, name, passed, detail, millis })
}

/// Runs every criterion in order, reporting each as it finishes.
pub fn run_all(mut progress: impl FnMut(&CriterionResult)) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|c| {
            let r = run_criterion(c.0).expect("listed criterion");
            progress(&r);
            r
        })
        .collect()
}

fn fail<T>(msg: impl Into<String>) -> std::result::Result<T, String> {
    Err(msg.into())
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn seq(v: &[i64]) -> GapSequence {
    GapSequence::new(v.to_vec()).expect("valid literal sequence")
}

fn table_contains(table: &CharacterTable, set: &CyclicSet, target: u64) -> bool {
    let polar = table.polar_bits(&table.bits_of(set.residues().iter().copied()));
    table.in_hull_of_polar(&polar, target)
}

fn membership_lemmas() -> std::result::Result<String, String> {
    let mut cases = 0u64;
    for n in 1..=100u64 {
        let table = lib(CharacterTable::new(n))?;
        for h in 0..n as i64 {
            for case in [DemoCase::H12b { h }, DemoCase::H12c { h }] {
                let (set, target) = lib(membership_demo(case, n))?;
                cases += 1;
                if !table_contains(&table, &set, target) {
                    return fail(format!("{case:?} fails in Z({n})"));
                }
            }
            for h2 in 0..n as i64 {
                for minus in [false, true] {
                    let case = DemoCase::H12a { h1: h, h2, minus };
                    let (set, target) = lib(membership_demo(case, n))?;
                    cases += 1;
                    if !table_contains(&table, &set, target) {
                        return fail(format!("{case:?} fails in Z({n})"));
                    }
                }
            }
        }
    }
    Ok(format!("{cases} memberships hold"))
}

fn two_x_equivalence() -> std::result::Result<String, String> {
    let (mut cases, mut inside) = (0u64, 0u64);
    for n in 1..=200u64 {
        for x in 0..n {
            let r = lib(check_two_x_equivalence(x, n))?;
            if !r.all_equal() {
                return fail(format!("x={x} in Z({n}): {r:?}"));
            }
            cases += 1;
            inside += r.i as u64;
        }
    }
    Ok(format!("{cases} pairs agree; 2x in the hull for {inside}"))
}

fn polar_of_one_four_eight() -> std::result::Result<String, String> {
    let got = t_polar_of_characters(&[1, 4, 8].map(BigInt::from));
    let c = rat(15, 64);
    let t16 = RationalIntervalUnion::t_m(16);
    let expected = RationalIntervalUnion::t_m(8)
        .union(&t16.translate(&c))
        .union(&t16.translate(&-c));
    let closed = RationalIntervalUnion::from_intervals([
        Interval::new(rat(-1, 4), rat(-7, 32)),
        Interval::new(rat(-1, 32), rat(1, 32)),
        Interval::new(rat(7, 32), rat(1, 4)),
    ]);
    if got != expected || got != closed {
        return fail(format!("got {got}, expected {expected}"));
    }
    Ok(format!("{got}"))
}

fn all_epsilons(len: usize) -> Vec<Vec<i8>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|e| {
                [-1i8, 0, 1].map(|c| {
                    let mut v = e.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

fn nonzero(eps: &[i8]) -> usize {
    eps.iter().filter(|&&e| e != 0).count()
}

fn t3_positive() -> std::result::Result<String, String> {
    let a = seq(&[1, 3, 5, 7]);
    let grid = lib(points_k3(&a, a.len()))?.refine(3);
    if grid.modulus() != 19683 {
        return fail(format!("unexpected grid {}", grid.modulus()));
    }
    let report = lib(hull_grid(&grid))?;
    if !report.is_quasi_convex() {
        return fail(format!("hull has {} points, set has {}", report.hull.len(), grid.len()));
    }
    let hull = report.hull.residues();
    let mut certified = 0;
    for eps in all_epsilons(a.len()).into_iter().filter(|e| nonzero(e) >= 2) {
        let cert = lib(exclusion_t3(&a, &eps))?;
        if !lib(verify_certificate(&cert, a.len() as u64))? {
            return fail(format!("certificate for {eps:?} does not verify"));
        }
        let parts = lib(exclusion_parts(&a, &eps))?;
        let chi: BigInt = match &cert.character {
            crate::witnesses::CertCharacter::Integer { value } => value.parse().map_err(|_| "bad character")?,
            _ => return fail("wrong character kind"),
        };
        let mut rest = BigRational::zero();
        for n in parts.l + 1..a.len() {
            rest += crate::families::family_point(FamilyKind::T3, &a, n) * BigInt::from(parts.epsilon[n]);
        }
        let normalized = UnitRational::from_rational(&(&parts.head + rest * &chi));
        let expected = if parts.negated { -&normalized } else { normalized };
        let recorded: UnitRational = lib(cert.evaluation.parse())?;
        if recorded != expected {
            return fail(format!("{eps:?}: evaluation {recorded} but closed form gives {expected}"));
        }
        let target: UnitRational = lib(cert.target.parse())?;
        let residue = lib(GridSet::from_points(&[target.clone()], Some(grid.modulus())))?;
        if residue.residues().iter().any(|r| hull.contains(r)) {
            return fail(format!("{target} lies in the hull"));
        }
        certified += 1;
    }
    Ok(format!("quasi-convex on grid 3^9 ({} points); {certified} epsilon forms excluded", grid.len()))
}

fn grid_point(p: &BigRational, n: u64) -> std::result::Result<u64, String> {
    let g = lib(GridSet::from_points(&[UnitRational::from_rational(p)], Some(n)))?;
    Ok(*g.residues().iter().next().expect("one point"))
}

fn t3_negative() -> std::result::Result<String, String> {
    let a = seq(&[0, 2, 4]);
    let v = lib(verdict_t3(&a))?;
    if v.violated != Some(Condition::CI) {
        return fail(format!("verdict for {a}: {v:?}"));
    }
    let set = lib(points_k3(&a, a.len()))?;
    let hull = lib(hull_grid(&set))?;
    let w = lib(v.witness_recipe.expect("recipe").point(FamilyKind::T3, &a))?;
    let wr = grid_point(&w, set.modulus())?;
    if hull.is_quasi_convex() || !hull.hull.contains(wr) || set.contains(wr) {
        return fail(format!("translate {w} not a new hull point of {a}"));
    }

    let b = seq(&[1, 2]);
    let v = lib(verdict_t3(&b))?;
    let w = lib(v.witness_recipe.expect("recipe").point(FamilyKind::T3, &b))?;
    if v.violated != Some(Condition::CII) || w != rat(2, 27) {
        return fail(format!("verdict for {b}: {v:?}"));
    }
    let set = lib(GridSet::new(27, [0, 3, -3, 1, -1]))?;
    if !lib(in_hull(&set, 2))? || set.contains(2) {
        return fail("2/27 not a new hull point of {0, ±1/9, ±1/27}");
    }
    Ok(format!("{a}: hull has {} points vs {}; 2/27 in hull for {b}", hull.hull.len(), set.len()))
}

fn j3_cases() -> std::result::Result<String, String> {
    let a = seq(&[0, 2, 4]);
    let level = 7;
    let l = lib(l3_truncate(&a, level))?;
    let report = lib(hull_cyclic(&l))?;
    if !report.is_quasi_convex() {
        return fail(format!("L{a} not quasi-convex in Z(3^{level})"));
    }
    let n = l.modulus();
    let mut certified = 0;
    for eps in all_epsilons(a.len()).into_iter().filter(|e| nonzero(e) == 2) {
        let cert = lib(exclusion_j3(&a, &eps))?;
        if !lib(verify_certificate(&cert, level as u64))? {
            return fail(format!("certificate for {eps:?} does not verify"));
        }
        let t: i64 = cert.target.parse().map_err(|_| "bad target")?;
        if report.hull.contains(crate::polar::to_residue(t, n)) {
            return fail(format!("{t} lies in the hull"));
        }
        certified += 1;
    }
    if certified != 12 {
        return fail(format!("expected 12 two-term sums, found {certified}"));
    }

    let b = seq(&[0, 1]);
    let v = lib(verdict_j3(&b))?;
    let w = lib(v.witness_recipe.expect("recipe").point(FamilyKind::J3, &b))?;
    if v.violated != Some(Condition::D) || w != rat(2, 1) {
        return fail(format!("verdict for {b}: {v:?}"));
    }
    for m in 2..=6u32 {
        let set = lib(CyclicSet::new(3u64.pow(m), [0, 1, -1, 3, -3]))?;
        if !lib(in_hull(&set, 2))? {
            return fail(format!("2 not in the hull of {{0,±1,±3}} in Z(3^{m})"));
        }
    }
    Ok(format!("L(0,2,4) quasi-convex in Z(3^7); {certified} certificates; 2 in hull for m = 2..6"))
}

fn q12_sequences() -> Vec<GapSequence> {
    [&[1, 3][..], &[1, 3, 5], &[0, 2], &[0, 2, 4]].iter().map(|v| seq(v)).collect()
}

fn q12_equals_epsilon_forms() -> std::result::Result<String, String> {
    let mut checked = 0;
    for a in q12_sequences() {
        let top = (a.last() + 1) as u32;
        for carrier in [
            Carrier::Grid { exponent: top },
            Carrier::Grid { exponent: top + 1 },
            Carrier::Cyclic { level: top },
            Carrier::Cyclic { level: top + 1 },
        ] {
            let q = lib(q12_set(&a, &carrier))?;
            let e = lib(epsilon_forms(&a, &carrier))?;
            if q != e {
                return fail(format!("{a} on {carrier:?}: {} vs {} points", q.len(), e.len()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} sequence/carrier pairs agree"))
}

fn jm_complement() -> std::result::Result<String, String> {
    let mut checked = 0;
    for a in q12_sequences() {
        let k_max = (a.last() + 1) as u64;
        let expected: BTreeSet<u64> = (0..=k_max).filter(|&k| !a.contains(k as i64)).collect();
        let top = k_max as u32;
        for carrier in [Carrier::Grid { exponent: top }, Carrier::Cyclic { level: top + 1 }] {
            for m in [1, 2] {
                let j = lib(compute_jm(&a, m, k_max, &carrier))?;
                if j != expected {
                    return fail(format!("J_{m} for {a} on {carrier:?}: {j:?}, expected {expected:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} J_m sets equal the complement"))
}

/// Strictly increasing sequences with entries in `0..=max`, length `1..=len`.
fn small_sequences(max: i64, len: usize) -> Vec<GapSequence> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<i64>> = (0..=max).map(|e| vec![e]).collect();
    while let Some(v) = stack.pop() {
        if v.len() < len {
            for e in v[v.len() - 1] + 1..=max {
                let mut w = v.clone();
                w.push(e);
                stack.push(w);
            }
        }
        out.push(GapSequence::new(v).expect("increasing"));
    }
    out.sort_by(|x, y| x.entries().cmp(y.entries()));
    out
}

/// The prefix data followed by one more entry with gap 3; without it a
/// one-term prefix such as `{0, ±1/2}` is a subgroup whatever the verdict.
fn padded(a: &GapSequence) -> GapSequence {
    a.extended(3)
}

fn verdict_oracle_agreement() -> std::result::Result<String, String> {
    let cache = RefCell::new(TableCache::new());
    let (mut t_fail, mut r_fail, mut total) = (0, 0, 0);
    for a in small_sequences(9, 4) {
        total += 1;
        let p = padded(&a);

        let v = lib(verdict_t2(&a))?;
        let mut all_qc = true;
        for c in 1..=p.len() {
            let set = lib(points_k2(&p, c))?;
            all_qc &= lib(cache.borrow_mut().is_quasi_convex(&set))?;
        }
        if v.is_quasi_convex() != all_qc {
            return fail(format!("T2 {a}: verdict {:?} but brute force says quasi-convex = {all_qc}", v.outcome));
        }
        if let Some(recipe) = v.witness_recipe {
            t_fail += 1;
            let set = lib(points_k2(&p, p.len()))?;
            let w = lib(recipe.point(FamilyKind::T2, &p))?;
            let wr = grid_point(&w, set.modulus())?;
            let hull = lib(cache.borrow_mut().hull_of(&set))?;
            if !hull.contains(&wr) || set.contains(wr) {
                return fail(format!("T2 {a}: witness {w} ({recipe:?}) is not a new hull point"));
            }
        }

        let v = verdict_r2(&a);
        let grid_hull = |g: &GridSet| cache.borrow_mut().hull_of(g);
        let mut all_qc = true;
        for c in 1..=p.len() {
            let s = lib(points_r2(&p, c))?;
            all_qc &= lib(hull_r_using(&s, &grid_hull))? == s;
        }
        if v.is_quasi_convex() != all_qc {
            return fail(format!("R2 {a}: verdict {:?} but brute force says quasi-convex = {all_qc}", v.outcome));
        }
        if let Some(recipe) = v.witness_recipe {
            r_fail += 1;
            let s = lib(points_r2(&p, p.len()))?;
            let w = lib(recipe.point(FamilyKind::R2, &p))?;
            if !lib(member_hull_r(&s, &w))?.is_in() || s.contains(&w) {
                return fail(format!("R2 {a}: witness {w} ({recipe:?}) is not a new hull point"));
            }
        }
    }
    Ok(format!("{total} sequences; {t_fail} T2 and {r_fail} R2 negatives with witnesses in the hull"))
}

fn chains(b0_max: u64, ratios: &[u64], max_len: usize, bound: u64) -> Vec<DivisibleChain> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u64>> = (2..=b0_max).map(|b| vec![b]).collect();
    while let Some(v) = stack.pop() {
        if v.len() >= 2 {
            out.push(DivisibleChain::new(v.clone()).expect("divisible"));
        }
        if v.len() < max_len {
            for &q in ratios {
                let next = v[v.len() - 1] * q;
                if next <= bound {
                    let mut w = v.clone();
                    w.push(next);
                    stack.push(w);
                }
            }
        }
    }
    out.sort_by(|x, y| x.terms().cmp(y.terms()));
    out
}

fn named_ratio_pattern(q: &[u64]) -> bool {
    q.iter().filter(|&&r| r == 2).count() > 1 || q.windows(2).any(|w| w[0] == 2 && (w[1] == 3 || w[1] == 4))
}

fn necessity_reports() -> std::result::Result<String, String> {
    let b: DivisibleChain = lib("2,8".parse())?;
    let report = necessary_report_t(&b);
    if report.b0_at_least_four || !report.failures().contains(&"b0_at_least_four") {
        return fail(format!("(2,8): {report:?}"));
    }
    let x = b.points_t();
    let v = chain_violation(&b, true).ok_or("(2,8): no violation point")?;
    let vr = grid_point(&v.point, 8)?;
    if !lib(in_hull(&x, vr))? || x.contains(vr) {
        return fail(format!("(2,8): {} not a new hull point", v.point));
    }

    let b: DivisibleChain = lib("9,27,81".parse())?;
    let report = necessary_report_t(&b);
    if report.ratio_three_needs_four {
        return fail(format!("(9,27,81): {report:?}"));
    }
    let v = chain_violation(&b, true).ok_or("(9,27,81): no violation point")?;
    if v.point != rat(2, 27) || !lib(in_hull(&b.points_t(), 6))? {
        return fail(format!("(9,27,81): 2/27 not in the hull ({v:?})"));
    }

    let (mut t_checked, mut r_checked) = (0, 0);
    for b in chains(6, &[2, 3, 4, 5, 6], 4, 2048) {
        let named = named_ratio_pattern(&b.ratios());
        if !necessary_report_t(&b).all_pass() {
            match chain_violation(&b, true) {
                Some(v) => {
                    let x = b.points_t();
                    let vr = grid_point(&v.point, x.modulus())?;
                    if !lib(in_hull(&x, vr))? || x.contains(vr) {
                        return fail(format!("T {:?}: {} ({}) not a new hull point", b.terms(), v.point, v.rule));
                    }
                    t_checked += 1;
                }
                None if named => return fail(format!("T {:?}: no violation point", b.terms())),
                None => {}
            }
        }
        if !necessary_report_r(&b).all_pass() {
            let v = chain_violation(&b, false).ok_or(format!("R {:?}: no violation point", b.terms()))?;
            let s = b.points_r();
            if !lib(member_hull_r(&s, &v.point))?.is_in() || s.contains(&v.point) {
                return fail(format!("R {:?}: {} ({}) not a new hull point", b.terms(), v.point, v.rule));
            }
            r_checked += 1;
        }
    }
    Ok(format!("named chains confirmed; sweep found {t_checked} T and {r_checked} R violations by brute force"))
}

/// Sorted triples `i <= j <= l` index every nonempty subset of size at most 3.
fn triple_index(n: usize, mut t: [usize; 3]) -> usize {
    t.sort_unstable();
    (t[0] * n + t[1]) * n + t[2]
}

fn multiply_maps(n: u64) -> std::result::Result<u64, String> {
    let table = lib(CharacterTable::new(n))?;
    let nn = n as usize;
    let mut hulls = vec![0u64; nn * nn * nn];
    for i in 0..nn {
        for j in i..nn {
            for l in j..nn {
                let bits = table.bits_of([i as u64, j as u64, l as u64]);
                hulls[triple_index(nn, [i, j, l])] = table.hull_bits(&bits)[0];
            }
        }
    }
    let mut cases = 0;
    for k in 0..n {
        let f = Homomorphism::Multiply { modulus: n, factor: k };
        lib(f.validate())?;
        for i in 0..nn {
            for j in i..nn {
                for l in j..nn {
                    let image = [i, j, l].map(|x| f.apply(x as u64) as usize);
                    let target = hulls[triple_index(nn, image)];
                    let mut ok = true;
                    for_each_bit(&[hulls[triple_index(nn, [i, j, l])]], |x| ok &= target >> f.apply(x as u64) & 1 == 1);
                    if !ok {
                        return fail(format!("multiply by {k} on Z({n}), E = {{{i},{j},{l}}}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(cases)
}

/// Sets `{3^v, x, y}` with `x, y` multiples of `3^v` up to sign. Every
/// nonempty `E` of size at most 3 other than `{0}` is `u·E'` for a unit `u`
/// and such an `E'` up to signs; hulls and the quotient map commute with
/// both operations.
fn reduced_triples(level: u32) -> Vec<BTreeSet<u64>> {
    let n = 3u64.pow(level);
    let mut out = vec![BTreeSet::from([0])];
    for v in 0..level {
        let step = 3u64.pow(v);
        let half: Vec<u64> = (0..=n / 2).step_by(step as usize).collect();
        for (i, &x) in half.iter().enumerate() {
            for &y in &half[i..] {
                out.push(BTreeSet::from([step, x, y]));
            }
        }
    }
    out
}

fn quotient_sweep(from: u32, to: u32, sets: &[BTreeSet<u64>]) -> std::result::Result<(), String> {
    let f = Homomorphism::Quotient { from: 3u64.pow(from), to: 3u64.pow(to) };
    let source = lib(CharacterTable::new(3u64.pow(from)))?;
    let target = lib(CharacterTable::new(3u64.pow(to)))?;
    for e in sets {
        if !lib(pushforward_check_tables(&f, &source, &target, e))? {
            return fail(format!("quotient Z(3^{from}) -> Z(3^{to}), E = {e:?}"));
        }
    }
    Ok(())
}

fn all_small_subsets(n: u64) -> Vec<BTreeSet<u64>> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            for l in j..n {
                out.push(BTreeSet::from([i, j, l]));
            }
        }
    }
    out
}

fn functoriality() -> std::result::Result<String, String> {
    let mut cases = 0;
    for n in 1..=64 {
        cases += multiply_maps(n)?;
    }
    // the table path against the residue engine on a sample
    let f = Homomorphism::Quotient { from: 27, to: 9 };
    for e in all_small_subsets(27).iter().step_by(7) {
        let set = lib(CyclicSet::new(27, e.iter().map(|&x| x as i64)))?;
        if !lib(pushforward_check(&f, &set))? {
            return fail(format!("quotient Z(27) -> Z(9), E = {e:?}"));
        }
    }
    // the reduction against the full sweep on a smaller quotient
    quotient_sweep(4, 2, &all_small_subsets(81))?;
    quotient_sweep(4, 2, &reduced_triples(4))?;
    let reduced = reduced_triples(7);
    quotient_sweep(7, 4, &reduced)?;
    Ok(format!("{cases} multiply cases; {} reduced sets for Z(3^7) -> Z(3^4)", reduced.len()))
}

fn division_lemma() -> std::result::Result<String, String> {
    let (mut cases, mut a, mut b) = (0, 0, 0);
    for n in 1..=64 {
        let s = check_division_lemma(n)?;
        cases += s.cases;
        a += s.triggered_a;
        b += s.triggered_b;
    }
    Ok(format!("{cases} cases; clause (a) triggered {a} times, clause (b) {b} times"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations_have_expected_sizes() {
        assert_eq!(small_sequences(9, 4).len(), 10 + 45 + 120 + 210);
        assert_eq!(all_epsilons(4).iter().filter(|e| nonzero(e) >= 2).count(), 72);
        assert_eq!(all_small_subsets(3).len(), 10);
        assert!(chains(2, &[2], 3, 100).iter().all(|c| c.terms()[0] == 2));
    }

    #[test]
    fn reduced_triples_cover_small_quotient() {
        // every subset is a unit multiple of a reduced one, up to signs
        let n = 27u64;
        let reduced: BTreeSet<BTreeSet<u64>> = reduced_triples(3)
            .into_iter()
            .map(|e| e.iter().flat_map(|&x| [x, (n - x) % n]).collect())
            .collect();
        for e in all_small_subsets(n) {
            let sym: BTreeSet<u64> = e.iter().flat_map(|&x| [x, (n - x) % n]).collect();
            let hit = (1..n).filter(|u| u % 3 != 0).any(|u| {
                let m: BTreeSet<u64> = sym.iter().map(|&x| x * u % n).collect();
                reduced.contains(&m)
            });
            assert!(hit, "{e:?}");
        }
    }

    #[test]
    fn fast_criteria_pass() {
        for id in [3, 5, 7, 8] {
            let r = run_criterion(id).unwrap();
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }
}
