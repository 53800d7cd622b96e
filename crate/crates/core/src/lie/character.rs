//! Characters: exact weight multisets of finite-dimensional representations.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::LieError;
use crate::lie::{root_data, ReductiveAlgebra};

/// A weight of a reductive algebra: the concatenation of fundamental-weight
/// coordinates per simple factor followed by integer torus charges.
pub type Weight = Vec<i64>;

/// The weight multiset of a (virtual) representation, with its algebra.
///
/// Multiplicities of genuine characters are strictly positive; operations keep
/// the map free of zero entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Character {
    pub algebra: ReductiveAlgebra,
    pub weights: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn empty(algebra: ReductiveAlgebra) -> Self {
        Character {
            algebra,
            weights: BTreeMap::new(),
        }
    }

    /// The one-dimensional trivial character.
    pub fn trivial(algebra: ReductiveAlgebra) -> Self {
        let mut weights = BTreeMap::new();
        weights.insert(vec![0; algebra.rank()], 1);
        Character { algebra, weights }
    }

    pub fn from_weights<I: IntoIterator<Item = Weight>>(
        algebra: ReductiveAlgebra,
        iter: I,
    ) -> Result<Self, LieError> {
        let rank = algebra.rank();
        let mut weights: BTreeMap<Weight, i64> = BTreeMap::new();
        for w in iter {
            if w.len() != rank {
                return Err(LieError::RankMismatch {
                    got: w.len(),
                    expected: rank,
                });
            }
            *weights.entry(w).or_insert(0) += 1;
        }
        Ok(Character { algebra, weights })
    }

    /// Total dimension (sum of multiplicities).
    pub fn dim(&self) -> i64 {
        self.weights.values().sum()
    }

    pub fn insert(&mut self, w: Weight, mult: i64) {
        let e = self.weights.entry(w.clone()).or_insert(0);
        *e += mult;
        if *e == 0 {
            self.weights.remove(&w);
        }
    }

    pub fn multiplicity(&self, w: &[i64]) -> i64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    /// Dual representation: negate every weight.
    pub fn dual(&self) -> Character {
        let weights = self
            .weights
            .iter()
            .map(|(w, &m)| (w.iter().map(|x| -x).collect(), m))
            .collect();
        Character {
            algebra: self.algebra.clone(),
            weights,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        self.weights == self.dual().weights
    }

    /// Direct sum.
    pub fn add(&self, other: &Character) -> Result<Character, LieError> {
        if self.algebra != other.algebra {
            return Err(LieError::AlgebraMismatch);
        }
        let mut out = self.clone();
        for (w, &m) in &other.weights {
            out.insert(w.clone(), m);
        }
        Ok(out)
    }

    /// Pointwise doubling of weights: chi(2.) with the same multiplicities.
    pub(crate) fn weight_doubled(&self) -> Character {
        let weights = self
            .weights
            .iter()
            .map(|(w, &m)| (w.iter().map(|x| 2 * x).collect(), m))
            .collect();
        Character {
            algebra: self.algebra.clone(),
            weights,
        }
    }

    /// Apply the simple reflection `i` of factor `f` to every weight.
    pub fn reflect_factor(&self, f: usize, i: usize) -> Result<Character, LieError> {
        let offsets = self.algebra.factor_offsets();
        let ty = self.algebra.simples[f];
        let data = root_data(ty)?;
        let off = offsets[f];
        let weights = self
            .weights
            .iter()
            .map(|(w, &m)| {
                let mut w2 = w.clone();
                let slice = data.reflect(&w[off..off + ty.rank], i);
                w2[off..off + ty.rank].copy_from_slice(&slice);
                (w2, m)
            })
            .collect();
        Ok(Character {
            algebra: self.algebra.clone(),
            weights,
        })
    }

    /// Whether every simple reflection permutes the weight multiset.
    pub fn is_weyl_invariant(&self) -> Result<bool, LieError> {
        for (f, ty) in self.algebra.simples.iter().enumerate() {
            for i in 0..ty.rank {
                if self.reflect_factor(f, i)?.weights != self.weights {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True when the simple-factor block of the weight is dominant (torus
    /// charges are unconstrained).
    pub fn is_dominant_weight(&self, w: &[i64]) -> Result<bool, LieError> {
        let offsets = self.algebra.factor_offsets();
        for (f, ty) in self.algebra.simples.iter().enumerate() {
            let data = root_data(*ty)?;
            if !data.is_dominant(&w[offsets[f]..offsets[f] + ty.rank]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Height of a weight: the sum of the per-factor heights (torus charges
    /// contribute zero).
    pub fn height(&self, w: &[i64]) -> Result<Ratio<i64>, LieError> {
        let offsets = self.algebra.factor_offsets();
        let mut h = Ratio::from_integer(0);
        for (f, ty) in self.algebra.simples.iter().enumerate() {
            let data = root_data(*ty)?;
            h += data.height(&w[offsets[f]..offsets[f] + ty.rank]);
        }
        Ok(h)
    }

    /// Per-factor dominant representative of a weight (torus part untouched).
    pub fn dominantize(&self, w: &[i64]) -> Result<Weight, LieError> {
        let offsets = self.algebra.factor_offsets();
        let mut out = w.to_vec();
        for (f, ty) in self.algebra.simples.iter().enumerate() {
            let data = root_data(*ty)?;
            let dom = data.dominantize(&w[offsets[f]..offsets[f] + ty.rank]);
            out[offsets[f]..offsets[f] + ty.rank].copy_from_slice(&dom);
        }
        Ok(out)
    }
}
