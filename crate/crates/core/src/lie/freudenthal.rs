//! Irreducible characters via Freudenthal's multiplicity recursion, with the
//! Weyl dimension formula as an independent cross-check.

use num_rational::Ratio;
use std::collections::BTreeMap;

use crate::error::LieError;
use crate::lie::rootdata::RootData;
use crate::lie::{root_data, Character, ReductiveAlgebra, SimpleType, Weight};

/// Dimension of the irreducible with the given highest weight, by the Weyl
/// product formula. Exact; independent of the Freudenthal path.
pub fn weyl_dim(algebra: &ReductiveAlgebra, highest: &[i64]) -> Result<i64, LieError> {
    if highest.len() != algebra.rank() {
        return Err(LieError::RankMismatch {
            got: highest.len(),
            expected: algebra.rank(),
        });
    }
    let offsets = algebra.factor_offsets();
    let mut dim: i64 = 1;
    for (f, ty) in algebra.simples.iter().enumerate() {
        let block = &highest[offsets[f]..offsets[f] + ty.rank];
        dim = dim
            .checked_mul(weyl_dim_simple(*ty, block)?)
            .expect("dimension overflow");
    }
    Ok(dim)
}

fn weyl_dim_simple(ty: SimpleType, highest: &[i64]) -> Result<i64, LieError> {
    let data = root_data(ty)?;
    if !data.is_dominant(highest) {
        return Err(LieError::NotDominant(highest.to_vec()));
    }
    let rho = data.rho();
    let shifted: Vec<i64> = highest.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut acc: Ratio<i128> = Ratio::from_integer(1);
    for alpha in &data.positive_roots {
        let num = data.inner(&shifted, alpha) as i128;
        let den = data.inner(&rho, alpha) as i128;
        acc *= Ratio::new(num, den);
    }
    assert!(acc.is_integer(), "Weyl dimension must be an integer");
    Ok(acc.to_integer() as i64)
}

/// Weight multiset of the irreducible representation with the given highest
/// weight. For a product algebra this is the outer tensor product of the
/// per-factor irreducibles, carrying the torus charges along unchanged.
pub fn irreducible_character(
    algebra: &ReductiveAlgebra,
    highest: &[i64],
) -> Result<Character, LieError> {
    if highest.len() != algebra.rank() {
        return Err(LieError::RankMismatch {
            got: highest.len(),
            expected: algebra.rank(),
        });
    }
    let offsets = algebra.factor_offsets();
    // Outer product across factors, seeded with the torus block.
    let torus_block = highest[algebra.torus_offset()..].to_vec();
    let mut partial: Vec<(Weight, i64)> = vec![(Vec::new(), 1)];
    for (f, ty) in algebra.simples.iter().enumerate() {
        let block = &highest[offsets[f]..offsets[f] + ty.rank];
        let factor = simple_character(*ty, block)?;
        let mut next = Vec::with_capacity(partial.len() * factor.len());
        for (prefix, m) in &partial {
            for (w, mw) in &factor {
                let mut key = prefix.clone();
                key.extend_from_slice(w);
                next.push((key, m * mw));
            }
        }
        partial = next;
    }
    let mut weights: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mut w, m) in partial {
        w.extend_from_slice(&torus_block);
        *weights.entry(w).or_insert(0) += m;
    }
    let chi = Character {
        algebra: algebra.clone(),
        weights,
    };
    debug_assert_eq!(chi.dim(), weyl_dim(algebra, highest)?);
    Ok(chi)
}

/// Freudenthal recursion for one simple factor.
fn simple_character(ty: SimpleType, highest: &[i64]) -> Result<Vec<(Vec<i64>, i64)>, LieError> {
    let data = root_data(ty)?;
    if !data.is_dominant(highest) {
        return Err(LieError::NotDominant(highest.to_vec()));
    }
    let dominants = dominant_weights(data, highest);
    let rho = data.rho();
    let hw_rho: Vec<i64> = highest.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let top_norm = data.inner(&hw_rho, &hw_rho);
    let limit = data.inner(highest, highest);

    // Multiplicities per dominant weight, computed top-down by height.
    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for mu in &dominants {
        if mu == highest {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut numerator: i128 = 0;
        for alpha in &data.positive_roots {
            let mut nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a + b).collect();
            loop {
                if data.inner(&nu, &nu) > limit {
                    break;
                }
                let dom = data.dominantize(&nu);
                if let Some(&m) = mult.get(&dom) {
                    numerator += 2 * (m as i128) * (data.inner(&nu, alpha) as i128);
                }
                for (n, a) in nu.iter_mut().zip(alpha) {
                    *n += a;
                }
            }
        }
        let mu_rho: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let denominator = (top_norm - data.inner(&mu_rho, &mu_rho)) as i128;
        assert!(denominator > 0, "Freudenthal denominator must be positive");
        assert_eq!(numerator % denominator, 0, "Freudenthal division is exact");
        let m = (numerator / denominator) as i64;
        if m > 0 {
            mult.insert(mu.clone(), m);
        }
    }

    let mut out = Vec::new();
    for (mu, m) in mult {
        for w in data.orbit(&mu) {
            out.push((w, m));
        }
    }
    Ok(out)
}

/// All dominant weights of V(highest): dominant mu with highest - mu a
/// nonnegative integer combination of simple roots, ordered by decreasing
/// height (ties lexicographic).
fn dominant_weights(data: &RootData, highest: &[i64]) -> Vec<Vec<i64>> {
    let r = data.rank;
    let h_top = data.height(highest);
    // Box bound: height(mu) <= height(highest) and each omega_i has positive
    // height, so the coordinates are bounded.
    let omega_heights: Vec<Ratio<i64>> = (0..r)
        .map(|i| {
            let mut e = vec![0i64; r];
            e[i] = 1;
            data.height(&e)
        })
        .collect();
    let bounds: Vec<i64> = omega_heights
        .iter()
        .map(|h| (h_top / h).floor().to_integer().max(0))
        .collect();

    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut current = vec![0i64; r];
    enumerate_box(data, highest, &bounds, 0, &mut current, &mut out);
    out.sort_by(|a, b| {
        let (ha, hb) = (data.height(a), data.height(b));
        hb.cmp(&ha).then_with(|| b.cmp(a))
    });
    out
}

fn enumerate_box(
    data: &RootData,
    highest: &[i64],
    bounds: &[i64],
    idx: usize,
    current: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    if idx == bounds.len() {
        let diff: Vec<i64> = highest
            .iter()
            .zip(current.iter())
            .map(|(a, b)| a - b)
            .collect();
        if let Some(coords) = data.alpha_coords(&diff) {
            if coords.iter().all(|&c| c >= 0) {
                out.push(current.clone());
            }
        }
        return;
    }
    for v in 0..=bounds[idx] {
        current[idx] = v;
        enumerate_box(data, highest, bounds, idx + 1, current, out);
    }
    current[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{SimpleFamily::*, SimpleType};

    fn simple(f: crate::lie::SimpleFamily, r: usize) -> ReductiveAlgebra {
        ReductiveAlgebra::simple(SimpleType::new(f, r))
    }

    #[test]
    fn weyl_dims_classical() {
        assert_eq!(weyl_dim(&simple(A, 1), &[1]).unwrap(), 2);
        assert_eq!(weyl_dim(&simple(A, 1), &[2]).unwrap(), 3);
        assert_eq!(weyl_dim(&simple(A, 2), &[1, 0]).unwrap(), 3);
        assert_eq!(weyl_dim(&simple(A, 2), &[1, 1]).unwrap(), 8);
        assert_eq!(weyl_dim(&simple(B, 2), &[1, 0]).unwrap(), 5);
        assert_eq!(weyl_dim(&simple(B, 2), &[0, 1]).unwrap(), 4);
        assert_eq!(weyl_dim(&simple(B, 3), &[1, 0, 0]).unwrap(), 7);
        assert_eq!(weyl_dim(&simple(B, 3), &[0, 0, 1]).unwrap(), 8);
        assert_eq!(weyl_dim(&simple(B, 4), &[0, 0, 0, 1]).unwrap(), 16);
        assert_eq!(weyl_dim(&simple(C, 2), &[1, 0]).unwrap(), 4);
        assert_eq!(weyl_dim(&simple(C, 3), &[1, 0, 0]).unwrap(), 6);
        assert_eq!(weyl_dim(&simple(C, 3), &[0, 1, 0]).unwrap(), 14);
        assert_eq!(weyl_dim(&simple(D, 4), &[1, 0, 0, 0]).unwrap(), 8);
        assert_eq!(weyl_dim(&simple(D, 8), &[1, 0, 0, 0, 0, 0, 0, 0]).unwrap(), 16);
    }

    #[test]
    fn weyl_dims_exceptional() {
        assert_eq!(weyl_dim(&simple(G2, 2), &[1, 0]).unwrap(), 7);
        assert_eq!(weyl_dim(&simple(G2, 2), &[0, 1]).unwrap(), 14);
        assert_eq!(weyl_dim(&simple(F4, 4), &[0, 0, 0, 1]).unwrap(), 26);
        assert_eq!(weyl_dim(&simple(F4, 4), &[1, 0, 0, 0]).unwrap(), 52);
    }

    #[test]
    fn adjoint_dims_match_algebra_dims() {
        // Adjoint highest weights: the highest root per family.
        let cases: Vec<(ReductiveAlgebra, Vec<i64>)> = vec![
            (simple(A, 1), vec![2]),
            (simple(A, 2), vec![1, 1]),
            (simple(A, 3), vec![1, 0, 1]),
            (simple(B, 3), vec![0, 1, 0]),
            (simple(C, 3), vec![2, 0, 0]),
            (simple(D, 4), vec![0, 1, 0, 0]),
        ];
        for (alg, hw) in cases {
            assert_eq!(
                weyl_dim(&alg, &hw).unwrap() as usize,
                alg.dim(),
                "adjoint of {alg}"
            );
        }
    }

    #[test]
    fn su2_adjoint_character() {
        let chi = irreducible_character(&simple(A, 1), &[2]).unwrap();
        assert_eq!(chi.dim(), 3);
        assert_eq!(chi.multiplicity(&[2]), 1);
        assert_eq!(chi.multiplicity(&[0]), 1);
        assert_eq!(chi.multiplicity(&[-2]), 1);
    }

    #[test]
    fn su3_standard_character() {
        let chi = irreducible_character(&simple(A, 2), &[1, 0]).unwrap();
        assert_eq!(chi.dim(), 3);
        assert!(chi.weights.values().all(|&m| m == 1));
    }

    #[test]
    fn su3_adjoint_has_zero_weight_of_multiplicity_two() {
        let chi = irreducible_character(&simple(A, 2), &[1, 1]).unwrap();
        assert_eq!(chi.dim(), 8);
        assert_eq!(chi.multiplicity(&[0, 0]), 2);
    }

    #[test]
    fn f4_26_dimensional_character() {
        let chi = irreducible_character(&simple(F4, 4), &[0, 0, 0, 1]).unwrap();
        assert_eq!(chi.dim(), 26);
        // 24 short-root weights plus a two-dimensional zero weight space.
        assert_eq!(chi.multiplicity(&[0, 0, 0, 0]), 2);
    }

    #[test]
    fn spin9_character() {
        let chi = irreducible_character(&simple(B, 4), &[0, 0, 0, 1]).unwrap();
        assert_eq!(chi.dim(), 16);
        assert!(chi.weights.values().all(|&m| m == 1));
        assert!(chi.is_self_dual());
    }

    #[test]
    fn product_algebra_outer_tensor() {
        let alg = ReductiveAlgebra::new(
            vec![SimpleType::new(A, 1), SimpleType::new(C, 2)],
            0,
        );
        let chi = irreducible_character(&alg, &[1, 1, 0]).unwrap();
        assert_eq!(chi.dim(), 8);
    }

    #[test]
    fn torus_charge_carried_along() {
        let alg = ReductiveAlgebra::new(vec![SimpleType::new(A, 1)], 1);
        let chi = irreducible_character(&alg, &[1, 5]).unwrap();
        assert_eq!(chi.dim(), 2);
        assert_eq!(chi.multiplicity(&[1, 5]), 1);
        assert_eq!(chi.multiplicity(&[-1, 5]), 1);
    }

    #[test]
    fn non_dominant_rejected() {
        assert!(matches!(
            irreducible_character(&simple(A, 2), &[-1, 0]),
            Err(LieError::NotDominant(_))
        ));
        assert!(matches!(
            irreducible_character(&simple(A, 2), &[1]),
            Err(LieError::RankMismatch { .. })
        ));
    }
}
