//! Permutations of `{1..n}` in one-line notation, rank matrices and Bruhat order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Northwest rank counts of a permutation matrix.
///
/// Entry `(p, q)` is the number of one-entries `(i, w(i))` with `i ≤ p` and
/// `w(i) ≤ q`. Row and column 0 are stored as zeros so prefix lookups never
/// need bounds special-casing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankMatrix {
    n: usize,
    cells: Vec<u32>,
}

impl RankMatrix {
    fn from_images(images: &[usize]) -> Self {
        let n = images.len();
        let stride = n + 1;
        let mut cells = vec![0u32; stride * stride];
        for p in 1..=n {
            let hit = images[p - 1];
            for q in 1..=n {
                let one = u32::from(hit == q);
                cells[p * stride + q] =
                    one + cells[(p - 1) * stride + q] + cells[p * stride + q - 1]
                        - cells[(p - 1) * stride + q - 1];
            }
        }
        Self { n, cells }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r_pq`, with `p` or `q` equal to 0 reading as 0.
    ///
    /// Panics when `p` or `q` exceeds `n`.
    #[inline]
    pub fn at(&self, p: usize, q: usize) -> usize {
        assert!(
            p <= self.n && q <= self.n,
            "rank index ({p}, {q}) out of range"
        );
        self.cells[p * (self.n + 1) + q] as usize
    }

    pub fn get(&self, p: usize, q: usize) -> Result<usize> {
        if p == 0 || q == 0 || p > self.n || q > self.n {
            return Err(Error::IndexOutOfRange { n: self.n, p, q });
        }
        Ok(self.at(p, q))
    }

    /// True iff every entry of `self` is at most the matching entry of `other`.
    pub fn dominated_by(&self, other: &RankMatrix) -> bool {
        self.n == other.n && self.cells.iter().zip(&other.cells).all(|(a, b)| a <= b)
    }
}

/// A permutation `w` of `{1..n}`, stored as its one-line notation.
///
/// The derived ordering is lexicographic on one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
    ranks: RankMatrix,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::EmptyPermutation);
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotABijection { n, images });
            }
        }
        Ok(Self::from_valid(images))
    }

    fn from_valid(images: Vec<usize>) -> Self {
        let ranks = RankMatrix::from_images(&images);
        Self { images, ranks }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not represented");
        Self::from_valid((1..=n).collect())
    }

    /// The order-reversing permutation `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not represented");
        Self::from_valid((1..=n).rev().collect())
    }

    /// The simple transposition `s_k` swapping `k` and `k + 1`.
    pub fn simple_transposition(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::IndexOutOfRange { n, p: k, q: k + 1 });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Ok(Self::from_valid(images))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// One-line notation: `images()[i - 1] = w(i)`.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self::from_valid(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions `#{i < i' : w(i) > w(i')}`.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    pub fn rank_matrix(&self) -> &RankMatrix {
        &self.ranks
    }

    /// `r_pq(w)` for `1 ≤ p, q ≤ n`.
    pub fn rank(&self, p: usize, q: usize) -> Result<usize> {
        self.ranks.get(p, q)
    }

    /// Swaps the values in positions `i` and `j` (1-based), i.e. `w ∘ (i j)`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, j - 1);
        Self::from_valid(images)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(w: Permutation) -> Self {
        w.images
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string such as `2143` or a comma-separated list such
    /// as `10,2,3,4,5,6,7,8,9,1`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let images = if text.contains(',') {
            text.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<usize>()
                        .map_err(|_| Error::InvalidToken(tok.to_string()))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidToken(c.to_string()))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// `v ≥ w` in Bruhat order, decided entrywise on rank matrices:
/// `r_pq(v) ≤ r_pq(w)` for all `p, q`.
pub fn bruhat_geq(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    Ok(v.ranks.dominated_by(&w.ranks))
}

/// All of `S_n` in lexicographic order of one-line notation.
///
/// Yields nothing for `n = 0`.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: (n >= 1).then(|| (1..=n).collect()),
    }
}

#[derive(Clone, Debug)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_valid(current))
    }
}

fn next_lex(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
