//! Executable checks of the duality `A_w^∨ = RP_w` and the statements it is
//! built from, with machine-readable reports.
//!
//! Per permutation the checks run in proof order (claim 1, claim 2, the
//! rank/antidiagonal law, the double dual, then the theorem itself) so a
//! regression names the first broken link.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::antidiagonals::antidiagonal_family;
use crate::boxes::{BoxSet, GridBox, MAX_GRID};
use crate::error::{Error, Result};
use crate::permutations::{all_permutations, bruhat_geq, Permutation};
use crate::pipedreams::{enumerate_rp, staircase, PipeDream};
use crate::transversals::{is_minimal_transversal, is_transversal, transversal_dual, SetFamily};

pub const CLAIM1: &str = "claim1";
pub const CLAIM2: &str = "claim2";
pub const RANK_ANTIDIAGONAL: &str = "rank_antidiagonal";
pub const DOUBLE_DUAL: &str = "double_dual";
pub const THEOREM: &str = "theorem";
pub const BRUHAT_ORACLE: &str = "bruhat_oracle";

/// Largest `n` accepted by [`verify_bruhat_oracle`].
pub const BRUHAT_ORACLE_MAX_N: usize = 5;

/// Outcome of one check. A failure always carries a counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CheckWire")]
pub struct CheckResult {
    pass: bool,
    counterexample: Option<SetFamily>,
}

#[derive(Deserialize)]
struct CheckWire {
    pass: bool,
    counterexample: Option<SetFamily>,
}

impl TryFrom<CheckWire> for CheckResult {
    type Error = String;

    fn try_from(wire: CheckWire) -> std::result::Result<Self, String> {
        if !wire.pass && wire.counterexample.is_none() {
            return Err("failing check without counterexample".into());
        }
        Ok(Self {
            pass: wire.pass,
            counterexample: wire.counterexample,
        })
    }
}

impl CheckResult {
    pub fn passed() -> Self {
        Self {
            pass: true,
            counterexample: None,
        }
    }

    pub fn failed(counterexample: SetFamily) -> Self {
        Self {
            pass: false,
            counterexample: Some(counterexample),
        }
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    pub fn counterexample(&self) -> Option<&SetFamily> {
        self.counterexample.as_ref()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    #[serde(rename = "w")]
    permutation: Permutation,
    checks: BTreeMap<String, CheckResult>,
}

impl VerificationReport {
    pub fn new(permutation: Permutation) -> Self {
        Self {
            permutation,
            checks: BTreeMap::new(),
        }
    }

    pub fn record(&mut self, name: &str, result: CheckResult) {
        self.checks.insert(name.to_string(), result);
    }

    pub fn permutation(&self) -> &Permutation {
        &self.permutation
    }

    pub fn checks(&self) -> &BTreeMap<String, CheckResult> {
        &self.checks
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.get(name)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.values().all(CheckResult::pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &str> {
        self.checks
            .iter()
            .filter(|(_, c)| !c.pass())
            .map(|(k, _)| k.as_str())
    }

    fn single(w: &Permutation, name: &str, result: CheckResult) -> Self {
        let mut report = Self::new(w.clone());
        report.record(name, result);
        report
    }
}

fn family_of(n: usize, sets: impl IntoIterator<Item = BoxSet>) -> SetFamily {
    SetFamily::new(n, sets).expect("counterexample boxes come from the grid")
}

fn claim1(a_w: &SetFamily, rp_w: &SetFamily) -> CheckResult {
    match rp_w.iter().find(|d| !is_transversal(d, a_w)) {
        Some(d) => CheckResult::failed(family_of(rp_w.n(), [*d])),
        None => CheckResult::passed(),
    }
}

fn claim2(w: &Permutation, dual_a: &SetFamily) -> CheckResult {
    let n = w.n();
    for e in dual_a {
        let ok = match PipeDream::new(n, *e) {
            Ok(d) => d.is_reduced() && bruhat_geq(&d.trace(), w).expect("same n"),
            // A box on or below the antidiagonal means E is not a pipe dream at all.
            Err(_) => false,
        };
        if !ok {
            return CheckResult::failed(family_of(n, [*e]));
        }
    }
    CheckResult::passed()
}

fn rank_antidiagonal(w: &Permutation, rp_w: &SetFamily) -> CheckResult {
    let n = w.n();
    for d in rp_w {
        let d = PipeDream::new(n, *d).expect("members of RP_w are staircase pipe dreams");
        for q in 1..=n {
            let column = elbow_chain_table(&d, q);
            for (p, &size) in column.iter().enumerate().skip(1) {
                if size != w.rank_matrix().at(p, q) {
                    // Payload: the pipe dream and the rectangle corner.
                    let corner = BoxSet::new().with(GridBox::new(p, q));
                    return CheckResult::failed(family_of(n, [*d.crosses(), corner]));
                }
            }
        }
    }
    CheckResult::passed()
}

fn double_dual(a_w: &SetFamily) -> CheckResult {
    let back = transversal_dual(&transversal_dual(a_w));
    if back == *a_w {
        CheckResult::passed()
    } else {
        CheckResult::failed(back.symmetric_difference(a_w))
    }
}

fn theorem(a_w: &SetFamily, rp_w: &SetFamily, dual_a: &SetFamily) -> CheckResult {
    if dual_a != rp_w {
        return CheckResult::failed(dual_a.symmetric_difference(rp_w));
    }
    if let Some(d) = rp_w.iter().find(|d| !is_minimal_transversal(d, a_w)) {
        return CheckResult::failed(family_of(rp_w.n(), [*d]));
    }
    let dual_rp = transversal_dual(rp_w);
    if dual_rp != *a_w {
        return CheckResult::failed(dual_rp.symmetric_difference(a_w));
    }
    CheckResult::passed()
}

/// `transversal_dual(A_w) = RP_w` and `transversal_dual(RP_w) = A_w`.
pub fn verify_theorem(w: &Permutation) -> Result<VerificationReport> {
    let a_w = antidiagonal_family(w)?;
    let rp_w = enumerate_rp(w)?;
    let dual_a = transversal_dual(&a_w);
    Ok(VerificationReport::single(
        w,
        THEOREM,
        theorem(&a_w, &rp_w, &dual_a),
    ))
}

/// Every member of `RP_w` is a transversal of `A_w`.
pub fn verify_claim1(w: &Permutation) -> Result<VerificationReport> {
    let result = claim1(&antidiagonal_family(w)?, &enumerate_rp(w)?);
    Ok(VerificationReport::single(w, CLAIM1, result))
}

/// Every minimal transversal of `A_w` is a reduced pipe dream whose
/// permutation lies weakly above `w` in Bruhat order.
pub fn verify_claim2(w: &Permutation) -> Result<VerificationReport> {
    let dual_a = transversal_dual(&antidiagonal_family(w)?);
    Ok(VerificationReport::single(w, CLAIM2, claim2(w, &dual_a)))
}

/// For every `D ∈ RP_w` and every `(p, q)`, the largest elbow-only
/// antidiagonal in `[p] × [q]` has size exactly `r_pq(w)`.
pub fn verify_rank_antidiagonal_law(w: &Permutation) -> Result<VerificationReport> {
    let result = rank_antidiagonal(w, &enumerate_rp(w)?);
    Ok(VerificationReport::single(w, RANK_ANTIDIAGONAL, result))
}

/// `transversal_dual(transversal_dual(A_w)) = A_w`.
pub fn verify_double_dual(w: &Permutation) -> Result<VerificationReport> {
    let result = double_dual(&antidiagonal_family(w)?);
    Ok(VerificationReport::single(w, DOUBLE_DUAL, result))
}

/// All five per-permutation checks, sharing the computed families.
pub fn verify_all(w: &Permutation) -> Result<VerificationReport> {
    let a_w = antidiagonal_family(w)?;
    let rp_w = enumerate_rp(w)?;
    let dual_a = transversal_dual(&a_w);
    let mut report = VerificationReport::new(w.clone());
    report.record(CLAIM1, claim1(&a_w, &rp_w));
    report.record(CLAIM2, claim2(w, &dual_a));
    report.record(RANK_ANTIDIAGONAL, rank_antidiagonal(w, &rp_w));
    report.record(DOUBLE_DUAL, double_dual(&a_w));
    report.record(THEOREM, theorem(&a_w, &rp_w, &dual_a));
    Ok(report)
}

/// `table[p]` = largest antidiagonal of elbow tiles in `[p] × [q]`, for
/// `p = 0..=n`.
fn elbow_chain_table(d: &PipeDream, q: usize) -> Vec<usize> {
    let n = d.n();
    // best[i][j]: largest elbow antidiagonal using rows ≤ i and columns j..=q.
    // Such a chain either avoids row i, avoids column j, or contains (i, j)
    // (its lowest box is also its leftmost one).
    let width = q + 2;
    let mut best = vec![0usize; (n + 1) * width];
    for i in 1..=n {
        for j in (1..=q).rev() {
            let skip_row = best[(i - 1) * width + j];
            let skip_col = best[i * width + j + 1];
            let take = if d.is_cross(GridBox::new(i, j)) {
                0
            } else {
                1 + best[(i - 1) * width + j + 1]
            };
            best[i * width + j] = skip_row.max(skip_col).max(take);
        }
    }
    (0..=n).map(|p| best[p * width + 1]).collect()
}

/// Size of the largest antidiagonal inside `[p] × [q]` containing no cross
/// of `d`.
pub fn max_elbow_antidiagonal(d: &PipeDream, p: usize, q: usize) -> Result<usize> {
    let n = d.n();
    if p == 0 || q == 0 || p > n || q > n {
        return Err(Error::IndexOutOfRange { n, p, q });
    }
    Ok(elbow_chain_table(d, q)[p])
}

fn permutation_matrix(w: &Permutation) -> BoxSet {
    (1..=w.n()).map(|i| GridBox::new(i, w.apply(i))).collect()
}

/// Compares [`bruhat_geq`] on all ordered pairs of `S_n` against the
/// reflexive-transitive closure of the covering relation `u ⋖ u·(i j)`
/// where the transposition raises the length by exactly one.
pub fn verify_bruhat_oracle(n: usize) -> Result<VerificationReport> {
    if n > BRUHAT_ORACLE_MAX_N {
        return Err(Error::OracleBound {
            n,
            max: BRUHAT_ORACLE_MAX_N,
        });
    }
    if n == 0 {
        return Err(Error::EmptyPermutation);
    }
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let index: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let lengths: Vec<usize> = perms.iter().map(Permutation::length).collect();
    let covers: Vec<Vec<usize>> = perms
        .iter()
        .enumerate()
        .map(|(k, u)| {
            let mut up = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    let v = index[&u.swap_positions(i, j)];
                    if lengths[v] == lengths[k] + 1 {
                        up.push(v);
                    }
                }
            }
            up
        })
        .collect();

    let mut report = VerificationReport::new(Permutation::identity(n));
    for (k, w) in perms.iter().enumerate() {
        let mut above = vec![false; perms.len()];
        let mut stack = vec![k];
        above[k] = true;
        while let Some(u) = stack.pop() {
            for &v in &covers[u] {
                if !std::mem::replace(&mut above[v], true) {
                    stack.push(v);
                }
            }
        }
        for (m, v) in perms.iter().enumerate() {
            if bruhat_geq(v, w)? != above[m] {
                let payload = family_of(n, [permutation_matrix(v), permutation_matrix(w)]);
                report.record(BRUHAT_ORACLE, CheckResult::failed(payload));
                return Ok(report);
            }
        }
    }
    report.record(BRUHAT_ORACLE, CheckResult::passed());
    Ok(report)
}

/// Reports for every `w ∈ S_n` that finished before the budget ran out.
#[derive(Clone, Debug)]
pub struct RangeOutcome {
    pub n: usize,
    /// `|S_n|`.
    pub total: usize,
    /// Completed reports, in lexicographic order of `w`.
    pub reports: Vec<VerificationReport>,
    pub budget_exhausted: bool,
}

impl RangeOutcome {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.all_pass()).count()
    }

    pub fn all_pass(&self) -> bool {
        !self.budget_exhausted && self.passed() == self.total
    }
}

/// Runs [`verify_all`] over `S_n` on `jobs` worker threads (0 picks the
/// rayon default). Permutations not started before `budget` elapses are
/// skipped and the outcome is flagged as exhausted.
pub fn verify_range(n: usize, budget: Duration, jobs: usize) -> Result<RangeOutcome> {
    if n > MAX_GRID {
        return Err(Error::GridTooLarge(n));
    }
    let deadline = Instant::now() + budget;
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let exhausted = AtomicBool::new(false);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool construction");
    let reports: Vec<VerificationReport> = pool
        .install(|| {
            perms
                .par_iter()
                .map(|w| {
                    if Instant::now() >= deadline {
                        exhausted.store(true, Ordering::Relaxed);
                        return Ok(None);
                    }
                    verify_all(w).map(Some)
                })
                .collect::<Result<Vec<_>>>()
        })?
        .into_iter()
        .flatten()
        .collect();
    Ok(RangeOutcome {
        n,
        total: perms.len(),
        reports,
        budget_exhausted: exhausted.into_inner(),
    })
}

/// Number of distinct sets `D ∪ {b}` (`D ∈ RP_w`, `b` a staircase box not in
/// `D`) that are still reduced pipe dreams. Each is a transversal of `A_w`
/// that is not minimal. Recorded as a statistic only.
pub fn reduced_nonminimal_extensions(w: &Permutation) -> Result<usize> {
    let n = w.n();
    let cells = staircase(n);
    let mut seen = std::collections::HashSet::new();
    for d in &enumerate_rp(w)? {
        for &b in cells.iter().filter(|&&b| !d.contains(b)) {
            let bigger = PipeDream::new(n, d.with(b))?;
            if bigger.is_reduced() {
                seen.insert(*bigger.crosses());
            }
        }
    }
    Ok(seen.len())
}
