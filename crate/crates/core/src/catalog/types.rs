//! Serde record types for the catalog files, plus conversions into the
//! domain types used by the engines.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use crate::error::{CatalogError, LieError};
use crate::lie::{irreducible_character, Character, ReductiveAlgebra, SimpleFamily, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraRecord {
    #[serde(default)]
    pub simples: Vec<(String, usize)>,
    #[serde(default)]
    pub torus: usize,
}

impl AlgebraRecord {
    pub fn to_algebra(&self) -> Result<ReductiveAlgebra, CatalogError> {
        let mut simples = Vec::with_capacity(self.simples.len());
        for (fam, rank) in &self.simples {
            let family = match fam.as_str() {
                "A" => SimpleFamily::A,
                "B" => SimpleFamily::B,
                "C" => SimpleFamily::C,
                "D" => SimpleFamily::D,
                "E6" => SimpleFamily::E6,
                "E7" => SimpleFamily::E7,
                "E8" => SimpleFamily::E8,
                "F4" => SimpleFamily::F4,
                "G2" => SimpleFamily::G2,
                other => {
                    return Err(CatalogError::Invalid {
                        record: format!("{self:?}"),
                        detail: format!("unknown family {other:?}"),
                    })
                }
            };
            let ty = SimpleType::new(family, *rank);
            ty.validate().map_err(|e| CatalogError::Invalid {
                record: format!("{self:?}"),
                detail: e.to_string(),
            })?;
            simples.push(ty);
        }
        Ok(ReductiveAlgebra::new(simples, self.torus))
    }
}

/// A central element distinguished in the catalog (e.g. the symmetric-space
/// symmetry), with its scalar action on the tangent and slice characters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CentralElementRecord {
    pub name: String,
    pub tau_scalar: i64,
    pub nu_scalar: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupRecord {
    pub name: String,
    pub algebra: AlgebraRecord,
    #[serde(default)]
    pub cover: String,
    #[serde(default)]
    pub center: Vec<CentralElementRecord>,
}

/// One irreducible constituent of a stored character: a highest weight per
/// simple factor plus torus charges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstituentRecord {
    #[serde(default)]
    pub weights: Vec<Vec<i64>>,
    #[serde(default)]
    pub charges: Vec<i64>,
}

/// Reality conventions for stored characters:
/// - `real`: the stored constituents are the full complexification and the
///   character dimension equals the real dimension;
/// - `quaternionic`: likewise (the doubling is stored explicitly);
/// - `complex`: the stored constituents are the holomorphic half, so the real
///   dimension is twice the character dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reality {
    Real,
    Complex,
    Quaternionic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepRecord {
    pub constituents: Vec<ConstituentRecord>,
    pub reality: Reality,
    pub real_dim: usize,
}

impl RepRecord {
    /// Build the stored character over the given algebra.
    pub fn character(&self, algebra: &ReductiveAlgebra) -> Result<Character, LieError> {
        let mut chi = Character::empty(algebra.clone());
        for c in &self.constituents {
            let mut hw: Vec<i64> = Vec::with_capacity(algebra.rank());
            for w in &c.weights {
                hw.extend_from_slice(w);
            }
            hw.extend_from_slice(&c.charges);
            let irr = irreducible_character(algebra, &hw)?;
            chi = chi.add(&irr)?;
        }
        Ok(chi)
    }

    /// Real dimension implied by the stored character and reality tag.
    pub fn implied_real_dim(&self, algebra: &ReductiveAlgebra) -> Result<usize, LieError> {
        let d = self.character(algebra)?.dim() as usize;
        Ok(match self.reality {
            Reality::Real | Reality::Quaternionic => d,
            Reality::Complex => 2 * d,
        })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SphereActionRecord {
    pub group: GroupRecord,
    pub rep_name: String,
    pub constituents: Vec<ConstituentRecord>,
    pub reality: Reality,
    pub real_dim: usize,
    pub sphere_dim: usize,
    pub stabilizer: GroupRecord,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrossSpaceRecord {
    /// One of "sphere", "real_proj", "complex_proj", "quat_proj",
    /// "cayley_plane".
    pub kind: String,
    #[serde(default)]
    pub n: usize,
    pub group: GroupRecord,
    pub stabilizer: GroupRecord,
    pub embedding: String,
    pub isotropy: RepRecord,
    pub dim: usize,
    pub cohomogeneity_on_self: usize,
    pub symmetry: CentralElementRecord,
    #[serde(default)]
    pub notes: String,
}

/// Conjugation-invariant data attached to a stabilizer subgroup, enough to
/// run the containment obstructions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilizerData {
    pub id: String,
    pub dim: usize,
    pub semisimple: bool,
    /// Fixed-subspace dimensions (real) in named reference representations.
    #[serde(default)]
    pub fixed: BTreeMap<String, usize>,
    /// Fixed dimensions of the semisimple part, when it differs.
    #[serde(default)]
    pub ss_fixed: BTreeMap<String, usize>,
    /// Central-circle weight multiset in the reference representation, when
    /// the centralizer circle exists.
    #[serde(default)]
    pub circle_weights: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RouteRecord {
    /// The slice equals the isotropy representation.
    TangentSlice,
    /// Try the dimension-bound criterion only.
    DimensionBound,
    /// Circle twist with parameter k (central-parity analysis).
    CircleTwist { k: i64 },
    /// Containment obstruction between the regular stabilizer and the slice
    /// stabilizer.
    ContainmentObstruction {
        hv: StabilizerData,
        k: StabilizerData,
        reps: Vec<String>,
    },
    /// A witness manifold exists: the orbit is not totally geodesic.
    Witness { model: String, ambient: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SliceCandidateRecord {
    pub family: String,
    /// Applicable n, or 0 for "all n of the family".
    #[serde(default)]
    pub n: usize,
    pub name: String,
    pub descriptor: String,
    pub v_real_dim: usize,
    /// Slice character over the stabilizer algebra, when expressible there.
    #[serde(default)]
    pub nu: Option<RepRecord>,
    pub route: RouteRecord,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbeddingRecord {
    pub id: String,
    pub ambient: GroupRecord,
    pub sub: AlgebraRecord,
    pub descriptor: String,
    pub sub_dim: usize,
    pub semisimple: bool,
    /// rep name -> fixed real dimension; absent means unknown.
    #[serde(default)]
    pub fixed_space_dims: BTreeMap<String, usize>,
    /// rep name -> restricted character of the subalgebra (full
    /// complexification), for the oracle cross-check.
    #[serde(default)]
    pub restrictions: BTreeMap<String, RepRecord>,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HPrimeCandidateRecord {
    pub h_prime: AlgebraRecord,
    pub description: String,
    pub contains_k: bool,
    pub dim_v_prime: usize,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WallachRowRecord {
    pub index: usize,
    pub g1: String,
    pub h1: String,
    pub dim: String,
    /// "n" when the row is a family, empty when fixed.
    #[serde(default)]
    pub parameter: String,
    /// Candidates for the second singular stabilizer, keyed by the n-case
    /// ("*" for all applicable n, or a specific value).
    #[serde(default)]
    pub hprime_candidates: BTreeMap<String, Vec<HPrimeCandidateRecord>>,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuBaseCandidateRecord {
    pub index: usize,
    pub n_ideal: String,
    pub h_prime: String,
    /// Real slice dimension as a formula in m: "2(m-1)", "2", "4", "3".
    pub dim_v: String,
    /// 0 when valid for all m >= 3; otherwise the single m it applies to.
    #[serde(default)]
    pub requires_m: usize,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelRecord {
    pub name: String,
    pub ambient_dim: usize,
    pub constraints: Vec<ConstraintRecord>,
    pub action: String,
    pub base_points: BTreeMap<String, Vec<f64>>,
    pub checks: Vec<ModelCheckRecord>,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ConstraintRecord {
    /// |x|^2 = 1 in the ambient coordinates.
    UnitSphere,
    /// Two unit circles: (x1,x2) and (x3,x4).
    ProductCircles,
    /// The point, reassembled as a Hermitian 3x3 matrix, is an idempotent of
    /// trace one.
    HermitianProjector,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelCheckRecord {
    pub base_point: String,
    pub expect: String,
    #[serde(default)]
    pub fixture: String,
    #[serde(default)]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FixtureRecord {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    #[serde(default)]
    pub notes: String,
}
