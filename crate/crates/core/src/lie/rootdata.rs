//! Root-system data for the compact simple Lie algebras.
//!
//! Everything here is exact integer arithmetic. Weights live in
//! fundamental-weight coordinates; a simple root `alpha_j` expressed in that
//! basis is the j-th column of the Cartan matrix (convention
//! `cartan[i][j] = <alpha_j, alpha_i^vee>`). The invariant bilinear form is
//! carried as an integer matrix `form[i][j]` proportional to
//! `(omega_i, omega_j)`; every formula downstream is homogeneous in the form,
//! so the overall scale never matters.

use num_rational::Ratio;
use std::collections::{BTreeSet, VecDeque};

use crate::error::LieError;
use crate::lie::{SimpleFamily, SimpleType};

/// Exact root data for one simple factor.
#[derive(Debug, Clone)]
pub struct RootData {
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`; column j is alpha_j in
    /// fundamental-weight coordinates.
    pub cartan: Vec<Vec<i64>>,
    /// Symmetrizers `d_i = (alpha_i, alpha_i)/2`, normalized so short roots
    /// get 1.
    pub d: Vec<i64>,
    /// Positive roots in fundamental-weight coordinates.
    pub positive_roots: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates (same order).
    pub positive_roots_alpha: Vec<Vec<i64>>,
    /// Integer-scaled invariant form on weight space:
    /// `form[i][j] = det(C) * (omega_i, omega_j)` in the `d`-normalization.
    pub form: Vec<Vec<i64>>,
    /// `det(C)` (the index of connection), kept for height computations.
    pub cartan_det: i64,
    /// Inverse Cartan matrix as exact rationals (row-major).
    pub cartan_inv: Vec<Vec<Ratio<i64>>>,
}

fn cartan_matrix(ty: SimpleType) -> Result<(Vec<Vec<i64>>, Vec<i64>), LieError> {
    let r = ty.rank;
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |c: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    let d = match ty.family {
        SimpleFamily::A => {
            chain(&mut c, r - 1);
            vec![1; r]
        }
        SimpleFamily::B => {
            // alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
            chain(&mut c, r - 1);
            c[r - 2][r - 1] = -1;
            c[r - 1][r - 2] = -2;
            let mut d = vec![2; r];
            d[r - 1] = 1;
            d
        }
        SimpleFamily::C => {
            // alpha_r long: <alpha_r, alpha_{r-1}^vee> = -2
            chain(&mut c, r - 1);
            c[r - 2][r - 1] = -2;
            c[r - 1][r - 2] = -1;
            let mut d = vec![1; r];
            d[r - 1] = 2;
            d
        }
        SimpleFamily::D => {
            chain(&mut c, r - 2);
            c[r - 1][r - 1] = 2;
            c[r - 3][r - 1] = -1;
            c[r - 1][r - 3] = -1;
            vec![1; r]
        }
        SimpleFamily::G2 => {
            // alpha_1 short, alpha_2 long.
            c[0][1] = -3;
            c[1][0] = -1;
            vec![1, 3]
        }
        SimpleFamily::F4 => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            chain(&mut c, 3);
            c[2][1] = -2;
            vec![2, 2, 1, 1]
        }
        SimpleFamily::E6 | SimpleFamily::E7 | SimpleFamily::E8 => {
            return Err(LieError::Unsupported(format!("{ty}")));
        }
    };
    Ok((c, d))
}

/// Invert an integer matrix over the rationals (Gauss-Jordan).
fn invert_rational(m: &[Vec<i64>]) -> (Vec<Vec<Ratio<i64>>>, Ratio<i64>) {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i64>>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ratio::from_integer(i64::from(i == j)))
                .collect()
        })
        .collect();
    let mut det = Ratio::from_integer(1);
    for col in 0..n {
        let pivot = (col..n)
            .find(|&rw| a[rw][col] != Ratio::from_integer(0))
            .expect("Cartan matrix is invertible");
        if pivot != col {
            a.swap(pivot, col);
            inv.swap(pivot, col);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for rw in 0..n {
            if rw != col && a[rw][col] != Ratio::from_integer(0) {
                let f = a[rw][col];
                for j in 0..n {
                    let ac = a[col][j];
                    let ic = inv[col][j];
                    a[rw][j] -= f * ac;
                    inv[rw][j] -= f * ic;
                }
            }
        }
    }
    (inv, det)
}

impl RootData {
    pub fn new(ty: SimpleType) -> Result<Self, LieError> {
        ty.validate()?;
        let (cartan, d) = cartan_matrix(ty)?;
        let r = ty.rank;
        let (cartan_inv, det) = invert_rational(&cartan);
        assert!(det.is_integer() && *det.numer() > 0);
        let cartan_det = det.to_integer();

        // form[i][j] = det(C) * (C^{-1})_{ij} * d_i, an integer symmetric matrix.
        let mut form = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let v = cartan_inv[i][j] * Ratio::from_integer(cartan_det * d[i]);
                assert!(v.is_integer(), "scaled form must be integral");
                form[i][j] = v.to_integer();
            }
        }
        for i in 0..r {
            for j in 0..r {
                assert_eq!(form[i][j], form[j][i], "invariant form must be symmetric");
            }
        }

        // Positive roots: close the simple roots under simple reflections and
        // keep those whose simple-root coordinates are nonnegative.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<(Vec<i64>, Vec<i64>)> = VecDeque::new();
        for j in 0..r {
            let omega: Vec<i64> = (0..r).map(|i| cartan[i][j]).collect();
            let mut alpha = vec![0i64; r];
            alpha[j] = 1;
            if seen.insert(omega.clone()) {
                queue.push_back((omega, alpha));
            }
        }
        let mut all: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
        while let Some((omega, alpha)) = queue.pop_front() {
            all.push((omega.clone(), alpha.clone()));
            for i in 0..r {
                let coef = omega[i];
                if coef == 0 {
                    continue;
                }
                let mut om2 = omega.clone();
                let mut al2 = alpha.clone();
                for k in 0..r {
                    om2[k] -= coef * cartan[k][i];
                }
                al2[i] -= coef;
                if seen.insert(om2.clone()) {
                    queue.push_back((om2, al2));
                }
            }
        }
        let mut pos: Vec<(Vec<i64>, Vec<i64>)> = all
            .into_iter()
            .filter(|(_, alpha)| alpha.iter().all(|&x| x >= 0))
            .collect();
        // Sort by height then lexicographically, for determinism.
        pos.sort_by_key(|(_, alpha)| (alpha.iter().sum::<i64>(), alpha.clone()));
        let (positive_roots, positive_roots_alpha) = pos.into_iter().unzip();

        Ok(RootData {
            rank: r,
            cartan,
            d,
            positive_roots,
            positive_roots_alpha,
            form,
            cartan_det,
            cartan_inv,
        })
    }

    /// Scaled inner product of two weights in fundamental-weight coordinates.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0i64;
        for i in 0..self.rank {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += u[i] * self.form[i][j] * v[j];
            }
        }
        s
    }

    /// Simple reflection `s_i` acting on fundamental-weight coordinates.
    pub fn reflect(&self, w: &[i64], i: usize) -> Vec<i64> {
        let coef = w[i];
        let mut out = w.to_vec();
        if coef != 0 {
            for k in 0..self.rank {
                out[k] -= coef * self.cartan[k][i];
            }
        }
        out
    }

    pub fn is_dominant(&self, w: &[i64]) -> bool {
        w.iter().all(|&x| x >= 0)
    }

    /// Dominant representative of the Weyl orbit of `w`.
    pub fn dominantize(&self, w: &[i64]) -> Vec<i64> {
        let mut v = w.to_vec();
        loop {
            match v.iter().position(|&x| x < 0) {
                None => return v,
                Some(i) => v = self.reflect(&v, i),
            }
        }
    }

    /// Dominant representative together with the sign of the Weyl element
    /// used; `None` when the orbit meets a wall (some reflection fixes it).
    pub fn dominantize_signed(&self, w: &[i64]) -> Option<(Vec<i64>, i64)> {
        let mut v = w.to_vec();
        let mut sign = 1i64;
        loop {
            if v.iter().any(|&x| x == 0) {
                // Regular vectors never hit a wall; for the alternating-sum
                // oracle a zero coordinate means a singular point.
                if let Some(i) = v.iter().position(|&x| x < 0) {
                    v = self.reflect(&v, i);
                    sign = -sign;
                    continue;
                }
                return if v.iter().all(|&x| x > 0) {
                    Some((v, sign))
                } else {
                    None
                };
            }
            match v.iter().position(|&x| x < 0) {
                None => return Some((v, sign)),
                Some(i) => {
                    v = self.reflect(&v, i);
                    sign = -sign;
                }
            }
        }
    }

    /// Full Weyl orbit of a weight.
    pub fn orbit(&self, w: &[i64]) -> Vec<Vec<i64>> {
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        seen.insert(w.to_vec());
        queue.push_back(w.to_vec());
        while let Some(v) = queue.pop_front() {
            for i in 0..self.rank {
                let v2 = self.reflect(&v, i);
                if seen.insert(v2.clone()) {
                    queue.push_back(v2);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Height of a weight: sum of its simple-root coordinates.
    pub fn height(&self, w: &[i64]) -> Ratio<i64> {
        let mut h = Ratio::from_integer(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                h += self.cartan_inv[i][j] * Ratio::from_integer(w[j]);
            }
        }
        h
    }

    /// Simple-root coordinates of a vector given in fundamental-weight
    /// coordinates, if they are integral.
    pub fn alpha_coords(&self, w: &[i64]) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut v = Ratio::from_integer(0);
            for j in 0..self.rank {
                v += self.cartan_inv[i][j] * Ratio::from_integer(w[j]);
            }
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(out)
    }

    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::SimpleFamily::*;

    fn rd(family: crate::lie::SimpleFamily, rank: usize) -> RootData {
        RootData::new(SimpleType { family, rank }).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(rd(A, 1).positive_roots.len(), 1);
        assert_eq!(rd(A, 2).positive_roots.len(), 3);
        assert_eq!(rd(A, 3).positive_roots.len(), 6);
        assert_eq!(rd(B, 2).positive_roots.len(), 4);
        assert_eq!(rd(B, 4).positive_roots.len(), 16);
        assert_eq!(rd(C, 3).positive_roots.len(), 9);
        assert_eq!(rd(D, 4).positive_roots.len(), 12);
        assert_eq!(rd(D, 8).positive_roots.len(), 56);
        assert_eq!(rd(G2, 2).positive_roots.len(), 6);
        assert_eq!(rd(F4, 4).positive_roots.len(), 24);
    }

    #[test]
    fn form_is_symmetrized_cartan() {
        // d_i * cartan[i][j] must be symmetric for every family we ship.
        for ty in [
            SimpleType { family: A, rank: 4 },
            SimpleType { family: B, rank: 3 },
            SimpleType { family: C, rank: 3 },
            SimpleType { family: D, rank: 5 },
            SimpleType { family: G2, rank: 2 },
            SimpleType { family: F4, rank: 4 },
        ] {
            let r = RootData::new(ty).unwrap();
            for i in 0..r.rank {
                for j in 0..r.rank {
                    assert_eq!(r.d[i] * r.cartan[i][j], r.d[j] * r.cartan[j][i]);
                }
            }
        }
    }

    #[test]
    fn highest_root_height() {
        // Height of the highest root is the Coxeter number minus one.
        let cases = [
            (rd(A, 3), 3),  // h = 4
            (rd(B, 3), 5),  // h = 6
            (rd(C, 3), 5),
            (rd(D, 4), 5),
            (rd(G2, 2), 5),
            (rd(F4, 4), 11),
        ];
        for (data, want) in cases {
            let max_h = data
                .positive_roots_alpha
                .iter()
                .map(|a| a.iter().sum::<i64>())
                .max()
                .unwrap();
            assert_eq!(max_h, want);
        }
    }

    #[test]
    fn dominantize_signed_matches_orbit() {
        let data = rd(B, 2);
        let rho = data.rho();
        for v in data.orbit(&rho) {
            let (dom, _sign) = data.dominantize_signed(&v).unwrap();
            assert_eq!(dom, rho);
        }
        // Orbit of rho has |W(B2)| = 8 elements.
        assert_eq!(data.orbit(&rho).len(), 8);
    }

    #[test]
    fn e_series_unsupported() {
        assert!(matches!(
            RootData::new(SimpleType { family: E8, rank: 8 }),
            Err(LieError::Unsupported(_))
        ));
    }
}
