//! Pipe dreams supported in the staircase, pipe tracing, reducedness and the
//! enumeration of `RP_w`.
//!
//! Tiles: a crossing tile passes pipes straight through (west to east, south
//! to north). An elbow tile sends a pipe entering from the west out the
//! north edge, and one entering from the south out the east edge. Pipe `i`
//! enters the west edge of row `i`; its label never changes.

use std::fmt;

use itertools::Itertools;

use crate::boxes::{BoxSet, GridBox, MAX_GRID};
use crate::error::{Error, Result};
use crate::permutations::Permutation;
use crate::transversals::SetFamily;

/// Largest `n` accepted by [`enumerate_rp_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 6;

/// An `n × n` pipe dream, identified with its set of crossing tiles.
///
/// Every cross `(i, j)` satisfies `i + j ≤ n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipeDream {
    n: usize,
    crosses: BoxSet,
}

/// Two pipes (labelled by entry row, `a < b`) and how often they cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PipePair {
    pub a: usize,
    pub b: usize,
    pub crossings: usize,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Heading {
    /// Entered the current tile through its west edge.
    East,
    /// Entered the current tile through its south edge.
    North,
}

/// Result of following every pipe through the tiling.
struct Routing {
    exits: Vec<usize>,
    /// `(pipe passing west-east, pipe passing south-north)` per crossing tile.
    meetings: Vec<(usize, usize)>,
}

impl PipeDream {
    pub fn new(n: usize, crosses: BoxSet) -> Result<Self> {
        if n == 0 || n > MAX_GRID {
            return Err(Error::GridTooLarge(n));
        }
        if let Some(b) = crosses.iter().find(|b| b.row + b.col > n) {
            return Err(Error::OutsideStaircase {
                n,
                row: b.row,
                col: b.col,
            });
        }
        Ok(Self { n, crosses })
    }

    pub fn from_boxes(n: usize, boxes: &[(usize, usize)]) -> Result<Self> {
        if let Some(&(row, col)) = boxes.iter().find(|&&(r, c)| r == 0 || c == 0 || r + c > n) {
            return Err(Error::OutsideStaircase { n, row, col });
        }
        Self::new(n, boxes.iter().map(|&b| GridBox::from(b)).collect())
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, BoxSet::new())
    }

    /// Every staircase box is a cross.
    pub fn full_staircase(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GRID {
            return Err(Error::GridTooLarge(n));
        }
        Ok(Self {
            n,
            crosses: staircase(n).into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BoxSet {
        &self.crosses
    }

    pub fn len(&self) -> usize {
        self.crosses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crosses.is_empty()
    }

    pub fn is_cross(&self, b: GridBox) -> bool {
        self.crosses.contains(b)
    }

    fn route(&self) -> Routing {
        let n = self.n;
        let stride = n + 2;
        let mut across = vec![0usize; stride * stride];
        let mut upward = vec![0usize; stride * stride];
        let mut exits = vec![0; n];
        for pipe in 1..=n {
            let (mut r, mut c, mut heading) = (pipe, 1, Heading::East);
            // West-entering pipes stay weakly above the antidiagonal and
            // leave through the north edge.
            while r >= 1 {
                debug_assert!(r + c <= n + 1);
                let cross = self.crosses.contains(GridBox::new(r, c));
                match (heading, cross) {
                    (Heading::East, true) => {
                        across[r * stride + c] = pipe;
                        c += 1;
                    }
                    (Heading::North, true) => {
                        upward[r * stride + c] = pipe;
                        r -= 1;
                    }
                    (Heading::East, false) => {
                        r -= 1;
                        heading = Heading::North;
                    }
                    (Heading::North, false) => {
                        c += 1;
                        heading = Heading::East;
                    }
                }
            }
            exits[pipe - 1] = c;
        }
        let meetings = self
            .crosses
            .iter()
            .map(|b| {
                (
                    across[b.row * stride + b.col],
                    upward[b.row * stride + b.col],
                )
            })
            .collect();
        Routing { exits, meetings }
    }

    /// The permutation `w` with pipe `i` exiting the north edge at column `w(i)`.
    pub fn trace(&self) -> Permutation {
        Permutation::new(self.route().exits)
            .expect("pipes of a staircase pipe dream exit bijectively")
    }

    /// Pairs of pipes that cross at least once, with their crossing counts,
    /// sorted by `(a, b)`.
    pub fn crossing_counts(&self) -> Vec<PipePair> {
        self.route()
            .meetings
            .into_iter()
            .map(|(x, y)| (x.min(y), x.max(y)))
            .counts()
            .into_iter()
            .map(|((a, b), crossings)| PipePair { a, b, crossings })
            .sorted()
            .collect()
    }

    /// No two pipes cross more than once.
    pub fn is_reduced(&self) -> bool {
        self.route()
            .meetings
            .into_iter()
            .map(|(x, y)| (x.min(y), x.max(y)))
            .all_unique()
    }

    /// `n` lines of `n` characters: `+` for a cross, `.` for an elbow with
    /// `i + j ≤ n + 1`, a space below that. Lines are joined by `\n` with no
    /// trailing newline.
    pub fn render_ascii(&self) -> String {
        let n = self.n;
        (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        if self.crosses.contains(GridBox::new(i, j)) {
                            '+'
                        } else if i + j <= n + 1 {
                            '.'
                        } else {
                            ' '
                        }
                    })
                    .collect::<String>()
            })
            .join("\n")
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.crosses.fmt(f)
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeDream(n={}, {})", self.n, self.crosses)
    }
}

/// Boxes `(i, j)` with `i + j ≤ n`, row-major.
pub fn staircase(n: usize) -> Vec<GridBox> {
    (1..n)
        .flat_map(|i| (1..=n - i).map(move |j| GridBox::new(i, j)))
        .collect()
}

/// `RP_w`: all reduced pipe dreams tracing to `w`.
///
/// Depth-first search over the staircase, column by column from the right,
/// top to bottom within a column. In that order the crosses read off the
/// word `s_{i+j-1} ⋯` whose product is the traced permutation, and a pipe
/// dream is reduced exactly when that word is reduced. A cross is placed only
/// if the partial product `u` stays below `w` in right weak order
/// (`u·s_a` gains the inversion of values `u(a) < u(a+1)`, which `w` must
/// also invert), so every branch reaching `l(w)` crosses spells `w`.
pub fn enumerate_rp(w: &Permutation) -> Result<SetFamily> {
    let n = w.n();
    if n > MAX_GRID {
        return Err(Error::GridTooLarge(n));
    }
    let order: Vec<GridBox> = (1..n)
        .rev()
        .flat_map(|c| (1..=n - c).map(move |r| GridBox::new(r, c)))
        .collect();
    let mut position_in_w = vec![0; n + 1];
    for (i, &v) in w.images().iter().enumerate() {
        position_in_w[v] = i;
    }
    let mut search = RpSearch {
        order: &order,
        position_in_w: &position_in_w,
        target: w.length(),
        partial: (1..=n).collect(),
        crosses: BoxSet::new(),
        placed: 0,
        found: Vec::new(),
    };
    search.descend(0);
    Ok(SetFamily::from_members(n, search.found))
}

struct RpSearch<'a> {
    order: &'a [GridBox],
    position_in_w: &'a [usize],
    target: usize,
    /// One-line notation of the product of the crosses placed so far.
    partial: Vec<usize>,
    crosses: BoxSet,
    placed: usize,
    found: Vec<BoxSet>,
}

impl RpSearch<'_> {
    fn descend(&mut self, next: usize) {
        if self.placed == self.target {
            self.found.push(self.crosses);
            return;
        }
        if self.order.len() - next < self.target - self.placed {
            return;
        }
        let b = self.order[next];
        // Adjacent 0-based positions a-1 and a swapped by s_a, a = i + j - 1.
        let a = b.row + b.col - 1;
        let (lo, hi) = (self.partial[a - 1], self.partial[a]);
        if lo < hi && self.position_in_w[hi] < self.position_in_w[lo] {
            self.partial.swap(a - 1, a);
            self.crosses.insert(b);
            self.placed += 1;
            self.descend(next + 1);
            self.placed -= 1;
            self.crosses.remove(b);
            self.partial.swap(a - 1, a);
        }
        self.descend(next + 1);
    }
}

/// `RP_w` by exhaustion: every `l(w)`-subset of the staircase, kept when it
/// traces to `w` and is reduced. Limited to `n ≤ 6`.
pub fn enumerate_rp_bruteforce(w: &Permutation) -> Result<SetFamily> {
    let n = w.n();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::OracleBound {
            n,
            max: BRUTEFORCE_MAX_N,
        });
    }
    let members = staircase(n)
        .into_iter()
        .combinations(w.length())
        .map(|boxes| PipeDream {
            n,
            crosses: boxes.into_iter().collect(),
        })
        .filter(|d| d.trace() == *w && d.is_reduced())
        .map(|d| d.crosses)
        .collect();
    Ok(SetFamily::from_members(n, members))
}
