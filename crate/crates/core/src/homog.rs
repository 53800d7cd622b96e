//! Homogeneous spaces: compact group specs, isotropy characters,
//! Euler-characteristic positivity, and the rank-one symmetric space catalog.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::catalog::{Catalog, CentralElementRecord, CrossSpaceRecord, RepRecord};
use crate::error::CatalogError;
use crate::lie::{Character, ReductiveAlgebra};

/// A compact group: its algebra plus discrete-level annotations (cover class,
/// distinguished central elements). Rank and dimension are algebra-level
/// notions and ignore the annotations.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompactGroupSpec {
    pub name: String,
    pub algebra: ReductiveAlgebra,
    pub cover_tag: String,
    pub center_data: Vec<CentralElementRecord>,
}

impl CompactGroupSpec {
    pub fn new(name: impl Into<String>, algebra: ReductiveAlgebra) -> Self {
        CompactGroupSpec {
            name: name.into(),
            algebra,
            cover_tag: String::new(),
            center_data: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

impl fmt::Display for CompactGroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// A pair (G, H) with an embedding tag and the isotropy character.
#[derive(Debug, Clone)]
pub struct HomogeneousSpace {
    pub group: CompactGroupSpec,
    pub stabilizer: CompactGroupSpec,
    pub embedding: String,
    /// Isotropy character of the stabilizer on the tangent space, stored per
    /// the catalog reality conventions.
    pub isotropy: RepRecord,
    pub dim: usize,
}

impl HomogeneousSpace {
    pub fn isotropy_character(&self) -> Result<Character, crate::error::LieError> {
        self.isotropy.character(&self.stabilizer.algebra)
    }
}

/// The five kinds of compact rank-one symmetric spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CrossKind {
    Sphere(usize),
    RealProj(usize),
    ComplexProj(usize),
    QuatProj(usize),
    CayleyPlane,
}

impl CrossKind {
    pub fn family(&self) -> &'static str {
        match self {
            CrossKind::Sphere(_) => "sphere",
            CrossKind::RealProj(_) => "real_proj",
            CrossKind::ComplexProj(_) => "complex_proj",
            CrossKind::QuatProj(_) => "quat_proj",
            CrossKind::CayleyPlane => "cayley_plane",
        }
    }

    pub fn n(&self) -> usize {
        match self {
            CrossKind::Sphere(n)
            | CrossKind::RealProj(n)
            | CrossKind::ComplexProj(n)
            | CrossKind::QuatProj(n) => *n,
            CrossKind::CayleyPlane => 2,
        }
    }
}

impl fmt::Display for CrossKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossKind::Sphere(n) => write!(f, "S^{n}"),
            CrossKind::RealProj(n) => write!(f, "RP^{n}"),
            CrossKind::ComplexProj(n) => write!(f, "CP^{n}"),
            CrossKind::QuatProj(n) => write!(f, "HP^{n}"),
            CrossKind::CayleyPlane => write!(f, "CaP^2"),
        }
    }
}

/// A rank-one symmetric space with its standard presentation.
#[derive(Debug, Clone)]
pub struct CrossSpace {
    pub kind: CrossKind,
    pub presentation: HomogeneousSpace,
    pub cohomogeneity_on_self: usize,
    pub symmetry: CentralElementRecord,
    pub notes: String,
}

/// Positive Euler characteristic, decided purely by rank equality of the
/// stabilizer in the group. Invariant under finite covers on either side.
pub fn euler_positive(x: &HomogeneousSpace) -> bool {
    x.stabilizer.rank() == x.group.rank()
}

/// Cohomogeneity of the stabilizer acting on the space itself, from catalog
/// data: every rank-one symmetric space gives 1, a point gives 0, and other
/// presentations carry a derived catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cohomogeneity {
    Known(usize),
    Unknown,
}

pub fn cohomogeneity_on_self(x: &HomogeneousSpace, catalog: &[CrossSpace]) -> Cohomogeneity {
    if x.dim == 0 {
        return Cohomogeneity::Known(0);
    }
    for c in catalog {
        if c.presentation.group.name == x.group.name
            && c.presentation.stabilizer.name == x.stabilizer.name
        {
            return Cohomogeneity::Known(c.cohomogeneity_on_self);
        }
    }
    // The full flag manifold of the special unitary group in three variables:
    // generic torus orbits are two-dimensional (bracket-rank derivation kept
    // in the tests), so the cohomogeneity is four.
    if x.group.name == "SU(3)" && x.stabilizer.name == "T^2" {
        return Cohomogeneity::Known(4);
    }
    Cohomogeneity::Unknown
}

fn build_space(rec: &CrossSpaceRecord) -> Result<HomogeneousSpace, CatalogError> {
    Ok(HomogeneousSpace {
        group: CompactGroupSpec {
            name: rec.group.name.clone(),
            algebra: rec.group.algebra.to_algebra()?,
            cover_tag: rec.group.cover.clone(),
            center_data: rec.group.center.clone(),
        },
        stabilizer: CompactGroupSpec {
            name: rec.stabilizer.name.clone(),
            algebra: rec.stabilizer.algebra.to_algebra()?,
            cover_tag: rec.stabilizer.cover.clone(),
            center_data: rec.stabilizer.center.clone(),
        },
        embedding: rec.embedding.clone(),
        isotropy: rec.isotropy.clone(),
        dim: rec.dim,
    })
}

/// The catalog of rank-one symmetric spaces with their standard
/// presentations: spheres, projective spaces over the reals, the complexes
/// and the quaternions, and the octonionic projective plane.
pub fn cross_catalog(catalog: &Catalog) -> Result<Vec<CrossSpace>, CatalogError> {
    let mut out = Vec::new();
    for rec in &catalog.cross_spaces {
        let kind = match rec.kind.as_str() {
            "sphere" => CrossKind::Sphere(rec.n),
            "real_proj" => CrossKind::RealProj(rec.n),
            "complex_proj" => CrossKind::ComplexProj(rec.n),
            "quat_proj" => CrossKind::QuatProj(rec.n),
            "cayley_plane" => CrossKind::CayleyPlane,
            other => {
                return Err(CatalogError::Invalid {
                    record: format!("cross kind {other:?}"),
                    detail: "unknown kind".into(),
                })
            }
        };
        out.push(CrossSpace {
            kind,
            presentation: build_space(rec)?,
            cohomogeneity_on_self: rec.cohomogeneity_on_self,
            symmetry: rec.symmetry.clone(),
            notes: rec.notes.clone(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{SimpleFamily::*, SimpleType};

    fn crosses() -> Vec<CrossSpace> {
        cross_catalog(&Catalog::builtin().unwrap()).unwrap()
    }

    fn find(kind: CrossKind) -> CrossSpace {
        crosses().into_iter().find(|c| c.kind == kind).unwrap()
    }

    #[test]
    fn euler_positivity_examples() {
        // SU(3)/U(2): ranks 2 = 2.
        let cp2 = find(CrossKind::ComplexProj(2));
        assert!(euler_positive(&cp2.presentation));
        // Spin(7)/G2 = S^7: rank 2 < 3.
        let s7 = HomogeneousSpace {
            group: CompactGroupSpec::new("Spin(7)", ReductiveAlgebra::simple(SimpleType::new(B, 3))),
            stabilizer: CompactGroupSpec::new("G2", ReductiveAlgebra::simple(SimpleType::new(G2, 2))),
            embedding: String::new(),
            isotropy: find(CrossKind::Sphere(7)).presentation.isotropy.clone(),
            dim: 7,
        };
        assert!(!euler_positive(&s7));
        // F4/Spin(9): ranks 4 = 4.
        let cap2 = find(CrossKind::CayleyPlane);
        assert!(euler_positive(&cap2.presentation));
    }

    #[test]
    fn euler_positive_invariant_under_covers() {
        let mut s = find(CrossKind::Sphere(4)).presentation;
        let before = euler_positive(&s);
        s.group.cover_tag = "Spin".into();
        s.stabilizer.cover_tag = "Spin".into();
        assert_eq!(euler_positive(&s), before);
    }

    #[test]
    fn cross_spaces_have_cohomogeneity_one_and_expected_euler_sign() {
        let all = crosses();
        for c in &all {
            assert_eq!(
                cohomogeneity_on_self(&c.presentation, &all),
                Cohomogeneity::Known(1),
                "{}",
                c.kind
            );
            let expect_positive = match c.kind {
                CrossKind::Sphere(n) | CrossKind::RealProj(n) => n % 2 == 0,
                _ => true,
            };
            assert_eq!(
                euler_positive(&c.presentation),
                expect_positive,
                "{}",
                c.kind
            );
        }
    }

    #[test]
    fn point_has_cohomogeneity_zero() {
        let g = CompactGroupSpec::new("SU(2)", ReductiveAlgebra::simple(SimpleType::new(A, 1)));
        let point = HomogeneousSpace {
            group: g.clone(),
            stabilizer: g,
            embedding: "identity".into(),
            isotropy: crate::catalog::RepRecord {
                constituents: vec![],
                reality: crate::catalog::Reality::Real,
                real_dim: 0,
            },
            dim: 0,
        };
        assert_eq!(
            cohomogeneity_on_self(&point, &[]),
            Cohomogeneity::Known(0)
        );
    }

    #[test]
    fn flag_manifold_cohomogeneity_from_catalog_entry() {
        let su3 = CompactGroupSpec::new("SU(3)", ReductiveAlgebra::simple(SimpleType::new(A, 2)));
        let t2 = CompactGroupSpec::new("T^2", ReductiveAlgebra::torus(2));
        let flag = HomogeneousSpace {
            group: su3,
            stabilizer: t2,
            embedding: "maximal torus".into(),
            isotropy: crate::catalog::RepRecord {
                constituents: vec![],
                reality: crate::catalog::Reality::Real,
                real_dim: 6,
            },
            dim: 6,
        };
        assert_eq!(cohomogeneity_on_self(&flag, &[]), Cohomogeneity::Known(4));
    }

    #[test]
    fn flag_manifold_cohomogeneity_bracket_rank_derivation() {
        // Generic torus-orbit dimension on the flag space: the isotropy
        // bracket sends xi = diag(i a, i b, -i(a+b)) to
        // [xi, X]_{jk} = (xi_j - xi_k) X_{jk} on the three root planes. For
        // generic X every plane coefficient is a nonzero real multiple of its
        // entry, so the orbit dimension is the rank of the coefficient matrix
        // rows (1,-1), (2,1), (1,2) in (a,b) — which is 2.
        let rows: [[i64; 2]; 3] = [[1, -1], [2, 1], [1, 2]];
        let rank = {
            let mut r = 0;
            for i in 0..3 {
                for j in (i + 1)..3 {
                    if rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0] != 0 {
                        r = 2;
                    }
                }
            }
            if r == 0 && rows.iter().any(|r| r != &[0, 0]) {
                r = 1;
            }
            r
        };
        assert_eq!(rank, 2);
        let flag_dim = 6;
        assert_eq!(flag_dim - rank, 4, "cohomogeneity of the torus on the flag space");
    }

    #[test]
    fn isotropy_dimension_matches_space_dimension() {
        for c in crosses() {
            let implied = c
                .presentation
                .isotropy
                .implied_real_dim(&c.presentation.stabilizer.algebra)
                .unwrap();
            assert_eq!(implied, c.presentation.dim, "{}", c.kind);
            assert_eq!(
                c.presentation.group.dim() - c.presentation.stabilizer.dim(),
                c.presentation.dim,
                "{}",
                c.kind
            );
        }
    }

    #[test]
    fn presentations_match_standard_pairs() {
        assert_eq!(find(CrossKind::Sphere(2)).presentation.group.name, "SO(3)");
        assert_eq!(
            find(CrossKind::ComplexProj(2)).presentation.stabilizer.name,
            "S(U(1)xU(2))"
        );
        assert_eq!(find(CrossKind::ComplexProj(2)).presentation.dim, 4);
        assert_eq!(find(CrossKind::CayleyPlane).presentation.dim, 16);
        assert_eq!(find(CrossKind::QuatProj(2)).presentation.group.name, "Sp(3)");
    }
}
