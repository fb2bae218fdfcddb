//! Schubert polynomials as sums of row monomials over reduced pipe dreams.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::permutations::Permutation;
use crate::pipedreams::enumerate_rp;

/// Exponents of `x_1, x_2, …`. Trailing zeros are dropped on construction,
/// so equality ignores them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Graded lex, largest first: higher degree first, then the larger
    /// exponent of the earliest variable where they differ.
    fn term_order(&self, other: &Self) -> std::cmp::Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate().filter(|(_, &e)| e > 0) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Integer polynomial in `x_1, x_2, …`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(ExponentVector::default(), BigInt::one());
        p
    }

    pub fn add_term(&mut self, monomial: ExponentVector, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(monomial.clone())
            .or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&monomial);
        }
    }

    pub fn coefficient(&self, monomial: &ExponentVector) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded lex order, largest first.
    pub fn terms(&self) -> Vec<(&ExponentVector, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| a.0.term_order(b.0));
        terms
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }
}

/// e.g. `x1^2 + x1*x2 - 3*x3`; the zero polynomial prints as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (mono, coeff)) in self.terms().into_iter().enumerate() {
            match (i, coeff.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let magnitude = coeff.abs();
            if mono.0.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{magnitude}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Array of `{"coeff": c, "exponents": [..]}` in term order. Coefficients
/// outside the `i64` range are written as decimal strings.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Coeff {
            Small(i64),
            Big(String),
        }
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: Coeff,
            exponents: &'a [u32],
        }
        let terms = self.terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (mono, coeff) in terms {
            let coeff = coeff
                .to_i64()
                .map(Coeff::Small)
                .unwrap_or_else(|| Coeff::Big(coeff.to_string()));
            seq.serialize_element(&Term {
                coeff,
                exponents: mono.exponents(),
            })?;
        }
        seq.end()
    }
}

/// `𝔖_w = Σ_{D ∈ RP_w} Π_{(i,j) ∈ D} x_i`.
pub fn schubert_polynomial(w: &Permutation) -> Result<Polynomial> {
    let mut poly = Polynomial::zero();
    for d in &enumerate_rp(w)? {
        let mut exps = vec![0u32; w.n()];
        for b in d {
            exps[b.row - 1] += 1;
        }
        poly.add_term(ExponentVector::new(exps), BigInt::one());
    }
    Ok(poly)
}

/// Sum of coefficients, i.e. the value at `x_i = 1`.
pub fn specialize_all_ones(p: &Polynomial) -> BigInt {
    p.terms.values().sum()
}
