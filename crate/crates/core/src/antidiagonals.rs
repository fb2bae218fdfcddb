//! Antidiagonals in grid rectangles and the family `A_w`.

use std::collections::HashSet;

use crate::boxes::{BoxSet, GridBox, MAX_GRID};
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::transversals::{minimal_sets, SetFamily};

/// A set of boxes with no element weakly southeast of another: sorted by
/// row, rows strictly increase while columns strictly decrease.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Antidiagonal(BoxSet);

impl Antidiagonal {
    pub fn new(boxes: BoxSet) -> Option<Self> {
        Self::is_antidiagonal(&boxes).then_some(Self(boxes))
    }

    pub fn is_antidiagonal(boxes: &BoxSet) -> bool {
        // Iteration is row-major, so rows are non-decreasing already.
        let v: Vec<GridBox> = boxes.iter().collect();
        v.windows(2)
            .all(|p| p[0].row < p[1].row && p[0].col > p[1].col)
    }

    pub fn boxes(&self) -> &BoxSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Antidiagonal> for BoxSet {
    fn from(a: Antidiagonal) -> BoxSet {
        a.0
    }
}

/// Every size-`s` antidiagonal in `[p] × [q]`, lexicographic in the
/// `(row, col)` sequence.
///
/// Panics if `p` or `q` exceeds [`MAX_GRID`].
pub fn antidiagonals_in_rectangle(
    p: usize,
    q: usize,
    s: usize,
) -> std::vec::IntoIter<Antidiagonal> {
    assert!(
        p <= MAX_GRID && q <= MAX_GRID,
        "rectangle {p}x{q} exceeds the supported grid"
    );
    let mut out = Vec::new();
    if s <= p.min(q) {
        extend_chains(1, q, s, p, BoxSet::new(), &mut out);
    }
    out.into_iter()
}

/// Appends chains using rows in `first_row..=p` and columns in `1..=max_col`.
fn extend_chains(
    first_row: usize,
    max_col: usize,
    remaining: usize,
    p: usize,
    acc: BoxSet,
    out: &mut Vec<Antidiagonal>,
) {
    if remaining == 0 {
        out.push(Antidiagonal(acc));
        return;
    }
    // Leave room for `remaining - 1` more rows below and columns to the left.
    for row in first_row..=(p + 1).saturating_sub(remaining) {
        for col in remaining..=max_col {
            extend_chains(
                row + 1,
                col - 1,
                remaining - 1,
                p,
                acc.with(GridBox::new(row, col)),
                out,
            );
        }
    }
}

/// Candidates for `A_w` before the minimality filter: the union over all
/// rectangles of the antidiagonals of size `1 + r_pq(w)`. Rectangles where
/// that size exceeds `min(p, q)` contribute nothing and are skipped.
pub fn antidiagonal_candidates(w: &Permutation) -> Result<SetFamily> {
    Ok(SetFamily::from_members(
        w.n(),
        candidate_sets(w)?.into_iter().collect(),
    ))
}

fn candidate_sets(w: &Permutation) -> Result<HashSet<BoxSet>> {
    let n = w.n();
    if n > MAX_GRID {
        return Err(Error::GridTooLarge(n));
    }
    let ranks = w.rank_matrix();
    let mut seen = HashSet::new();
    for p in 1..=n {
        for q in 1..=n {
            let size = 1 + ranks.at(p, q);
            if size > p.min(q) {
                continue;
            }
            seen.extend(antidiagonals_in_rectangle(p, q, size).map(BoxSet::from));
        }
    }
    Ok(seen)
}

/// `A_w`: the inclusion-minimal antidiagonals of size `1 + r_pq(w)` inside
/// `[p] × [q]`, over all `p, q`.
pub fn antidiagonal_family(w: &Permutation) -> Result<SetFamily> {
    let candidates = candidate_sets(w)?;
    Ok(SetFamily::from_members(
        w.n(),
        minimal_sets(candidates.into_iter().collect()),
    ))
}
