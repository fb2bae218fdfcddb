//! Grid boxes and bit-packed sets of boxes.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Largest grid side supported by [`BoxSet`].
pub const MAX_GRID: usize = 16;

const WORDS: usize = MAX_GRID * MAX_GRID / 64;

/// A 1-based `(row, col)` cell. Serializes as `[row, col]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct GridBox {
    pub row: usize,
    pub col: usize,
}

impl GridBox {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// `self ≤ other` componentwise, i.e. `other` is weakly southeast of `self`.
    pub fn weakly_northwest_of(self, other: GridBox) -> bool {
        self.row <= other.row && self.col <= other.col
    }

    fn bit(self) -> usize {
        debug_assert!((1..=MAX_GRID).contains(&self.row) && (1..=MAX_GRID).contains(&self.col));
        (self.row - 1) * MAX_GRID + (self.col - 1)
    }

    fn from_bit(bit: usize) -> Self {
        Self {
            row: bit / MAX_GRID + 1,
            col: bit % MAX_GRID + 1,
        }
    }
}

impl From<[usize; 2]> for GridBox {
    fn from([row, col]: [usize; 2]) -> Self {
        Self { row, col }
    }
}

impl From<GridBox> for [usize; 2] {
    fn from(b: GridBox) -> Self {
        [b.row, b.col]
    }
}

impl From<(usize, usize)> for GridBox {
    fn from((row, col): (usize, usize)) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for GridBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A set of boxes in the `MAX_GRID × MAX_GRID` grid, one bit per cell.
///
/// Bits are laid out row-major, so iteration yields boxes sorted by
/// `(row, col)`. The ordering on sets is lexicographic on those sorted lists.
///
/// Inserting a box with a coordinate of 0 or above [`MAX_GRID`] panics;
/// callers validate against their own grid size first.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct BoxSet {
    words: [u64; WORDS],
}

impl BoxSet {
    pub const fn new() -> Self {
        Self { words: [0; WORDS] }
    }

    pub fn insert(&mut self, b: GridBox) -> bool {
        assert!(
            (1..=MAX_GRID).contains(&b.row) && (1..=MAX_GRID).contains(&b.col),
            "box {b} outside the supported grid"
        );
        let bit = b.bit();
        let mask = 1u64 << (bit % 64);
        let fresh = self.words[bit / 64] & mask == 0;
        self.words[bit / 64] |= mask;
        fresh
    }

    pub fn remove(&mut self, b: GridBox) -> bool {
        if !(1..=MAX_GRID).contains(&b.row) || !(1..=MAX_GRID).contains(&b.col) {
            return false;
        }
        let bit = b.bit();
        let mask = 1u64 << (bit % 64);
        let present = self.words[bit / 64] & mask != 0;
        self.words[bit / 64] &= !mask;
        present
    }

    /// A copy of `self` with `b` added.
    pub fn with(mut self, b: GridBox) -> Self {
        self.insert(b);
        self
    }

    pub fn contains(&self, b: GridBox) -> bool {
        if !(1..=MAX_GRID).contains(&b.row) || !(1..=MAX_GRID).contains(&b.col) {
            return false;
        }
        let bit = b.bit();
        self.words[bit / 64] >> (bit % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersects(&self, other: &BoxSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &BoxSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &BoxSet) -> BoxSet {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &BoxSet) -> BoxSet {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &BoxSet) -> BoxSet {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words[0],
        }
    }

    /// Largest row and column used, or `None` for the empty set.
    pub fn bounding_corner(&self) -> Option<GridBox> {
        self.iter().fold(None, |acc, b| {
            Some(match acc {
                None => b,
                Some(c) => GridBox::new(c.row.max(b.row), c.col.max(b.col)),
            })
        })
    }
}

impl Ord for BoxSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for BoxSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<GridBox> for BoxSet {
    fn from_iter<I: IntoIterator<Item = GridBox>>(iter: I) -> Self {
        let mut set = BoxSet::new();
        for b in iter {
            set.insert(b);
        }
        set
    }
}

impl<'a> IntoIterator for &'a BoxSet {
    type Item = GridBox;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64; WORDS],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = GridBox;

    fn next(&mut self) -> Option<GridBox> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(GridBox::from_bit(self.index * 64 + tz));
            }
            self.index += 1;
            if self.index >= WORDS {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl fmt::Display for BoxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for BoxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
