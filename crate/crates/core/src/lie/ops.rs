//! Character arithmetic: tensor products, symmetric squares, and
//! invariant-multiplicity extraction.

use std::collections::BTreeMap;

use crate::error::LieError;
use crate::lie::{irreducible_character, Character, Weight};

/// Weight multiset of the tensor product of two characters of the same
/// algebra. Dimensions multiply.
pub fn tensor(a: &Character, b: &Character) -> Result<Character, LieError> {
    if a.algebra != b.algebra {
        return Err(LieError::AlgebraMismatch);
    }
    let mut weights: BTreeMap<Weight, i64> = BTreeMap::new();
    for (wa, &ma) in &a.weights {
        for (wb, &mb) in &b.weights {
            let sum: Weight = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            *weights.entry(sum).or_insert(0) += ma * mb;
        }
    }
    Ok(Character {
        algebra: a.algebra.clone(),
        weights,
    })
}

/// Symmetric square, computed as (chi^2 + chi(2.))/2.
pub fn sym2(c: &Character) -> Character {
    let mut sq = tensor(c, c).expect("same algebra");
    for (w, m) in c.weight_doubled().weights {
        *sq.weights.entry(w).or_insert(0) += m;
    }
    halve(sq)
}

/// Exterior square, computed as (chi^2 - chi(2.))/2.
pub fn lambda2(c: &Character) -> Character {
    let mut sq = tensor(c, c).expect("same algebra");
    for (w, m) in c.weight_doubled().weights {
        *sq.weights.entry(w).or_insert(0) -= m;
    }
    halve(sq)
}

fn halve(mut c: Character) -> Character {
    c.weights = c
        .weights
        .into_iter()
        .filter_map(|(w, m)| {
            assert!(m % 2 == 0, "symmetric/exterior square parity");
            if m == 0 {
                None
            } else {
                Some((w, m / 2))
            }
        })
        .collect();
    c
}

/// Symmetric square of the dual representation; dim d(d+1)/2.
pub fn sym2_dual(c: &Character) -> Character {
    sym2(&c.dual())
}

/// Multiplicity of the trivial summand, by iterated extraction of maximal
/// dominant weights (height order, ties lexicographic). The input must be
/// Weyl-invariant; a negative multiplicity mid-extraction means the input was
/// not a genuine character.
pub fn trivial_multiplicity(c: &Character) -> Result<i64, LieError> {
    Ok(decompose(c)?
        .iter()
        .find(|(w, _)| w.iter().all(|&x| x == 0))
        .map(|&(_, m)| m)
        .unwrap_or(0))
}

/// Full decomposition into irreducibles by iterated extraction. Returns
/// (highest weight, multiplicity) pairs in extraction order.
pub fn decompose(c: &Character) -> Result<Vec<(Weight, i64)>, LieError> {
    if !c.is_weyl_invariant()? {
        return Err(LieError::NotWeylInvariant);
    }
    let mut rest = c.clone();
    let mut out: Vec<(Weight, i64)> = Vec::new();
    loop {
        // Maximal dominant weight by height, ties broken lexicographically.
        let mut best: Option<(Weight, i64)> = None;
        for (w, &m) in &rest.weights {
            debug_assert!(m != 0);
            if !rest.is_dominant_weight(w)? {
                continue;
            }
            match &best {
                None => best = Some((w.clone(), m)),
                Some((bw, _)) => {
                    let (hw, hb) = (rest.height(w)?, rest.height(bw)?);
                    if hw > hb || (hw == hb && w > bw) {
                        best = Some((w.clone(), m));
                    }
                }
            }
        }
        let Some((top, mult)) = best else {
            if rest.weights.is_empty() {
                return Ok(out);
            }
            // A nonempty Weyl-invariant multiset always contains a dominant
            // weight, so this is unreachable for invariant inputs.
            return Err(LieError::NotACharacter);
        };
        if mult < 0 {
            return Err(LieError::NotACharacter);
        }
        let irr = irreducible_character(&c.algebra, &top)?;
        for (w, m) in &irr.weights {
            rest.insert(w.clone(), -mult * m);
        }
        if rest.weights.values().any(|&m| m < 0) {
            return Err(LieError::NotACharacter);
        }
        out.push((top, mult));
    }
}

/// Frobenius-Schur indicator of an irreducible character:
/// +1 real, -1 quaternionic, 0 complex (not self-dual).
pub fn frobenius_schur(c: &Character) -> Result<i64, LieError> {
    if !c.is_self_dual() {
        return Ok(0);
    }
    let s = trivial_multiplicity(&sym2(c))?;
    let l = trivial_multiplicity(&lambda2(c))?;
    Ok(s - l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{ReductiveAlgebra, SimpleFamily::*, SimpleType};

    fn circle() -> ReductiveAlgebra {
        ReductiveAlgebra::torus(1)
    }

    fn circle_char(ws: &[i64]) -> Character {
        Character::from_weights(circle(), ws.iter().map(|&w| vec![w])).unwrap()
    }

    #[test]
    fn tensor_identity() {
        let alg = ReductiveAlgebra::simple(SimpleType::new(A, 1));
        let c = irreducible_character(&alg, &[3]).unwrap();
        let t = Character::trivial(alg);
        assert_eq!(tensor(&t, &c).unwrap(), c);
    }

    #[test]
    fn tensor_clebsch_gordan_weights() {
        // su(2) weights {+-1} tensor {+-1} -> {-2, 0, 0, +2}
        let alg = ReductiveAlgebra::simple(SimpleType::new(A, 1));
        let std = irreducible_character(&alg, &[1]).unwrap();
        let t = tensor(&std, &std).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.multiplicity(&[2]), 1);
        assert_eq!(t.multiplicity(&[0]), 2);
        assert_eq!(t.multiplicity(&[-2]), 1);
    }

    #[test]
    fn tensor_circle_weight_addition() {
        // tau(SO(2)) {+-1} tensor nu_2 {+-2} -> {-3,-1,+1,+3}
        let tau = circle_char(&[1, -1]);
        let nu2 = circle_char(&[2, -2]);
        let t = tensor(&tau, &nu2).unwrap();
        assert_eq!(t.dim(), 4);
        for w in [-3i64, -1, 1, 3] {
            assert_eq!(t.multiplicity(&[w]), 1, "weight {w}");
        }
    }

    #[test]
    fn tensor_algebra_mismatch() {
        let a = circle_char(&[1]);
        let b = Character::trivial(ReductiveAlgebra::torus(2));
        assert!(matches!(tensor(&a, &b), Err(LieError::AlgebraMismatch)));
    }

    #[test]
    fn sym2_dual_of_weight_one_plane() {
        // SO(2) plane {+-1} -> {-2, 0, +2}
        let plane = circle_char(&[1, -1]);
        let s = sym2_dual(&plane);
        assert_eq!(s.dim(), 3);
        for w in [-2i64, 0, 2] {
            assert_eq!(s.multiplicity(&[w]), 1);
        }
    }

    #[test]
    fn sym2_dual_trivial() {
        let t = Character::trivial(circle());
        assert_eq!(sym2_dual(&t), t);
    }

    #[test]
    fn sym2_dual_su2_standard() {
        let alg = ReductiveAlgebra::simple(SimpleType::new(A, 1));
        let std = irreducible_character(&alg, &[1]).unwrap();
        let s = sym2_dual(&std);
        assert_eq!(s.dim(), 3);
        assert_eq!(s.multiplicity(&[2]), 1);
        assert_eq!(s.multiplicity(&[0]), 1);
        assert_eq!(s.multiplicity(&[-2]), 1);
    }

    #[test]
    fn dimension_laws() {
        let alg = ReductiveAlgebra::simple(SimpleType::new(B, 2));
        let a = irreducible_character(&alg, &[1, 0]).unwrap();
        let b = irreducible_character(&alg, &[0, 1]).unwrap();
        assert_eq!(tensor(&a, &b).unwrap().dim(), a.dim() * b.dim());
        let d = a.dim();
        assert_eq!(sym2_dual(&a).dim(), d * (d + 1) / 2);
    }

    #[test]
    fn trivial_multiplicity_of_trivial() {
        let t = Character::trivial(ReductiveAlgebra::simple(SimpleType::new(A, 2)));
        assert_eq!(trivial_multiplicity(&t).unwrap(), 1);
    }

    #[test]
    fn circle_twist_values() {
        // S^2 tau* squared tensor nu_k over SO(2): invariant count is 1 only
        // at k = 2 when the slice line carries weight k.
        let tau = circle_char(&[1, -1]);
        for k in 1..=6i64 {
            let nu = circle_char(&[k]);
            let h_space = tensor(&sym2_dual(&tau), &nu).unwrap();
            let want = i64::from(k == 2);
            assert_eq!(trivial_multiplicity(&h_space).unwrap(), want, "k = {k}");
        }
    }

    #[test]
    fn so3_tangent_self_slice_has_no_invariants() {
        // S^2 tau* tensor tau for SO(3) acting on R^3: 18 weights, no trivial
        // summand even though the zero weight shows up with multiplicity 4.
        let alg = ReductiveAlgebra::simple(SimpleType::new(A, 1));
        let tau = irreducible_character(&alg, &[2]).unwrap();
        let h_space = tensor(&sym2_dual(&tau), &tau).unwrap();
        assert_eq!(h_space.dim(), 18);
        assert_eq!(h_space.multiplicity(&[0]), 4);
        assert_eq!(trivial_multiplicity(&h_space).unwrap(), 0);
    }

    #[test]
    fn non_invariant_rejected() {
        let alg = ReductiveAlgebra::simple(SimpleType::new(A, 1));
        let skew = Character::from_weights(alg, vec![vec![1]]).unwrap();
        assert!(matches!(
            trivial_multiplicity(&skew),
            Err(LieError::NotWeylInvariant)
        ));
    }

    #[test]
    fn decompose_tensor_su2() {
        // 2 (x) 2 = 3 + 1
        let alg = ReductiveAlgebra::simple(SimpleType::new(A, 1));
        let std = irreducible_character(&alg, &[1]).unwrap();
        let got = decompose(&tensor(&std, &std).unwrap()).unwrap();
        assert_eq!(got, vec![(vec![2], 1), (vec![0], 1)]);
    }

    #[test]
    fn frobenius_schur_indicators() {
        let a1 = ReductiveAlgebra::simple(SimpleType::new(A, 1));
        let std = irreducible_character(&a1, &[1]).unwrap();
        assert_eq!(frobenius_schur(&std).unwrap(), -1); // quaternionic
        let adj = irreducible_character(&a1, &[2]).unwrap();
        assert_eq!(frobenius_schur(&adj).unwrap(), 1); // real
        let a2 = ReductiveAlgebra::simple(SimpleType::new(A, 2));
        let std3 = irreducible_character(&a2, &[1, 0]).unwrap();
        assert_eq!(frobenius_schur(&std3).unwrap(), 0); // complex
    }
}
