//! Independent decomposition oracle.
//!
//! Decomposes a Weyl-invariant weight multiset into irreducibles by the
//! alternating sum over the shifted Weyl action: the multiplicity of the
//! irreducible with highest weight `lambda` is
//! `sum_w sign(w) m(w(lambda + rho) - rho)`, evaluated here by dominantizing
//! `mu + rho` for every weight `mu` of the input. This never touches the
//! Freudenthal recursion or the extraction loop, so it serves as an
//! independent cross-check on both.

use std::collections::BTreeMap;

use crate::error::LieError;
use crate::lie::{root_data, Character, Weight};

/// Full decomposition: map from highest weight to multiplicity.
pub fn decompose_oracle(c: &Character) -> Result<BTreeMap<Weight, i64>, LieError> {
    let offsets = c.algebra.factor_offsets();
    let torus_off = c.algebra.torus_offset();
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    'weights: for (mu, &mult) in &c.weights {
        // Shift by rho per factor, dominantize with sign, skip singular.
        let mut key = vec![0i64; mu.len()];
        key[torus_off..].copy_from_slice(&mu[torus_off..]);
        let mut sign = 1i64;
        for (f, ty) in c.algebra.simples.iter().enumerate() {
            let data = root_data(*ty)?;
            let off = offsets[f];
            let shifted: Vec<i64> = mu[off..off + ty.rank]
                .iter()
                .zip(&data.rho())
                .map(|(a, b)| a + b)
                .collect();
            match data.dominantize_signed(&shifted) {
                None => continue 'weights,
                Some((dom, s)) => {
                    if dom.iter().any(|&x| x == 0) {
                        continue 'weights;
                    }
                    for (k, (d, r)) in dom.iter().zip(&data.rho()).enumerate() {
                        key[off + k] = d - r;
                    }
                    sign *= s;
                }
            }
        }
        *acc.entry(key).or_insert(0) += sign * mult;
    }
    acc.retain(|_, m| *m != 0);
    Ok(acc)
}

/// Multiplicity of the trivial summand, via the alternating sum.
pub fn trivial_multiplicity_oracle(c: &Character) -> Result<i64, LieError> {
    let zero = vec![0i64; c.algebra.rank()];
    Ok(decompose_oracle(c)?.get(&zero).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::ops::{sym2_dual, tensor, trivial_multiplicity};
    use crate::lie::{irreducible_character, weyl_dim, ReductiveAlgebra, SimpleFamily::*, SimpleType};

    #[test]
    fn oracle_recovers_irreducibles() {
        for (ty, hw) in [
            (SimpleType::new(A, 2), vec![1, 1]),
            (SimpleType::new(B, 2), vec![0, 1]),
            (SimpleType::new(C, 3), vec![0, 1, 0]),
            (SimpleType::new(G2, 2), vec![1, 0]),
        ] {
            let alg = ReductiveAlgebra::simple(ty);
            let chi = irreducible_character(&alg, &hw).unwrap();
            let dec = decompose_oracle(&chi).unwrap();
            assert_eq!(dec.len(), 1);
            assert_eq!(dec.get(&hw).copied(), Some(1));
        }
    }

    #[test]
    fn oracle_matches_extraction_on_tensor_products() {
        let alg = ReductiveAlgebra::simple(SimpleType::new(B, 2));
        let a = irreducible_character(&alg, &[1, 0]).unwrap();
        let b = irreducible_character(&alg, &[0, 1]).unwrap();
        let t = tensor(&a, &b).unwrap();
        let dec = decompose_oracle(&t).unwrap();
        let total: i64 = dec
            .iter()
            .map(|(hw, m)| m * weyl_dim(&alg, hw).unwrap())
            .sum();
        assert_eq!(total, t.dim());
        assert_eq!(
            trivial_multiplicity(&t).unwrap(),
            trivial_multiplicity_oracle(&t).unwrap()
        );
    }

    #[test]
    fn oracle_on_invariant_bearing_space() {
        // V (x) V* for su(3) contains the trivial once.
        let alg = ReductiveAlgebra::simple(SimpleType::new(A, 2));
        let v = irreducible_character(&alg, &[1, 0]).unwrap();
        let t = tensor(&v, &v.dual()).unwrap();
        assert_eq!(trivial_multiplicity_oracle(&t).unwrap(), 1);
        assert_eq!(trivial_multiplicity(&t).unwrap(), 1);
    }

    #[test]
    fn oracle_handles_torus_charges() {
        let alg = ReductiveAlgebra::new(vec![SimpleType::new(A, 1)], 1);
        let v = irreducible_character(&alg, &[1, 3]).unwrap();
        let t = tensor(&v, &v.dual()).unwrap();
        assert_eq!(trivial_multiplicity_oracle(&t).unwrap(), 1);
        let s = sym2_dual(&v);
        assert_eq!(trivial_multiplicity_oracle(&s).unwrap(), 0);
    }
}
