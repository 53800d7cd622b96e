//! Exact root-system, weight, and character arithmetic for compact simple
//! Lie algebras and tori.
//!
//! All values are immutable after construction and all operations are pure;
//! everything is integer arithmetic end to end.

mod character;
mod freudenthal;
pub mod ops;
pub mod oracle;
mod rootdata;

pub use character::{Character, Weight};
pub use freudenthal::{irreducible_character, weyl_dim};
pub use ops::{decompose, frobenius_schur, lambda2, sym2, sym2_dual, tensor, trivial_multiplicity};
pub use rootdata::RootData;

use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Mutex;

use crate::error::LieError;

/// The nine families of compact simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SimpleFamily {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

/// A simple type: family plus rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SimpleType {
    pub family: SimpleFamily,
    pub rank: usize,
}

impl SimpleType {
    pub const fn new(family: SimpleFamily, rank: usize) -> Self {
        SimpleType { family, rank }
    }

    pub fn validate(&self) -> Result<(), LieError> {
        let ok = match self.family {
            SimpleFamily::A => self.rank >= 1,
            SimpleFamily::B | SimpleFamily::C => self.rank >= 2,
            SimpleFamily::D => self.rank >= 3,
            SimpleFamily::E6 => self.rank == 6,
            SimpleFamily::E7 => self.rank == 7,
            SimpleFamily::E8 => self.rank == 8,
            SimpleFamily::F4 => self.rank == 4,
            SimpleFamily::G2 => self.rank == 2,
        };
        if ok {
            Ok(())
        } else {
            Err(LieError::InvalidRank {
                family: format!("{:?}", self.family),
                rank: self.rank,
            })
        }
    }

    /// Real dimension of the compact form.
    pub fn dim(&self) -> usize {
        let n = self.rank;
        match self.family {
            SimpleFamily::A => n * (n + 2),
            SimpleFamily::B | SimpleFamily::C => n * (2 * n + 1),
            SimpleFamily::D => n * (2 * n - 1),
            SimpleFamily::E6 => 78,
            SimpleFamily::E7 => 133,
            SimpleFamily::E8 => 248,
            SimpleFamily::F4 => 52,
            SimpleFamily::G2 => 14,
        }
    }

    /// Replace the label by its canonical isomorphism class, splitting the
    /// low-rank coincidences: B1 = C1 = A1, B2 = C2, D2 = A1 + A1, D3 = A3.
    pub fn canonical_factors(&self) -> Vec<SimpleType> {
        use SimpleFamily::*;
        match (self.family, self.rank) {
            (B, 1) | (C, 1) => vec![SimpleType::new(A, 1)],
            (B, 2) => vec![SimpleType::new(C, 2)],
            (D, 2) => vec![SimpleType::new(A, 1), SimpleType::new(A, 1)],
            (D, 3) => vec![SimpleType::new(A, 3)],
            _ => vec![*self],
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            SimpleFamily::E6 => write!(f, "E6"),
            SimpleFamily::E7 => write!(f, "E7"),
            SimpleFamily::E8 => write!(f, "E8"),
            SimpleFamily::F4 => write!(f, "F4"),
            SimpleFamily::G2 => write!(f, "G2"),
            fam => write!(f, "{:?}{}", fam, self.rank),
        }
    }
}

/// A compact reductive algebra: an ordered list of simple factors plus a
/// central torus.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReductiveAlgebra {
    pub simples: Vec<SimpleType>,
    pub torus_rank: usize,
}

impl ReductiveAlgebra {
    pub fn new(simples: Vec<SimpleType>, torus_rank: usize) -> Self {
        ReductiveAlgebra {
            simples,
            torus_rank,
        }
    }

    pub fn torus(rank: usize) -> Self {
        ReductiveAlgebra::new(Vec::new(), rank)
    }

    pub fn simple(ty: SimpleType) -> Self {
        ReductiveAlgebra::new(vec![ty], 0)
    }

    pub fn rank(&self) -> usize {
        self.simples.iter().map(|s| s.rank).sum::<usize>() + self.torus_rank
    }

    pub fn dim(&self) -> usize {
        self.simples.iter().map(|s| s.dim()).sum::<usize>() + self.torus_rank
    }

    pub fn is_semisimple(&self) -> bool {
        self.torus_rank == 0
    }

    /// Offsets of each simple factor's coordinate block in a flat weight
    /// vector; the torus block sits at the end.
    pub fn factor_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.simples.len());
        let mut off = 0;
        for s in &self.simples {
            out.push(off);
            off += s.rank;
        }
        out
    }

    pub fn torus_offset(&self) -> usize {
        self.rank() - self.torus_rank
    }

    /// Canonical isomorphism class of the semisimple part (sorted canonical
    /// factors) plus the torus rank.
    pub fn canonical(&self) -> ReductiveAlgebra {
        let mut simples: Vec<SimpleType> = self
            .simples
            .iter()
            .flat_map(|s| s.canonical_factors())
            .collect();
        simples.sort();
        ReductiveAlgebra {
            simples,
            torus_rank: self.torus_rank,
        }
    }

    /// True when some simple ideal is isomorphic to su(m) (m >= 2) or sp(m)
    /// (m >= 1).
    pub fn has_unitary_or_symplectic_ideal(&self) -> bool {
        self.canonical()
            .simples
            .iter()
            .any(|s| matches!(s.family, SimpleFamily::A | SimpleFamily::C))
    }
}

impl fmt::Display for ReductiveAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.simples.iter().map(|s| s.to_string()).collect();
        if self.torus_rank > 0 {
            parts.push(format!("T{}", self.torus_rank));
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{}", parts.join("+"))
    }
}

// Root data is deterministic per simple type; cache it process-wide.
static ROOT_CACHE: Mutex<Vec<(SimpleType, &'static RootData)>> = Mutex::new(Vec::new());

/// Shared root data for a simple type (cached, immutable).
pub fn root_data(ty: SimpleType) -> Result<&'static RootData, LieError> {
    let mut cache = ROOT_CACHE.lock().unwrap();
    if let Some((_, data)) = cache.iter().find(|(t, _)| *t == ty) {
        return Ok(data);
    }
    let data: &'static RootData = Box::leak(Box::new(RootData::new(ty)?));
    cache.push((ty, data));
    Ok(data)
}
