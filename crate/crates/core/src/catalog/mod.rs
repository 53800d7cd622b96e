//! Data-file-backed catalog of named representations, transitive sphere
//! actions, subgroup embeddings, and the classification tables.
//!
//! The catalog is loaded once and immutable thereafter; every query is pure.

pub mod schema;
pub mod types;

use std::collections::BTreeMap;
use std::path::Path;

pub use types::*;

use crate::error::CatalogError;
use crate::lie::{trivial_multiplicity, ReductiveAlgebra};

#[derive(Debug, Clone)]
pub struct Catalog {
    pub sphere_actions: Vec<SphereActionRecord>,
    pub cross_spaces: Vec<CrossSpaceRecord>,
    pub slice_candidates: Vec<SliceCandidateRecord>,
    pub embeddings: Vec<EmbeddingRecord>,
    pub wallach_rows: Vec<WallachRowRecord>,
    pub su_base: Vec<SuBaseCandidateRecord>,
    pub models: Vec<ModelRecord>,
    pub fixtures: Vec<FixtureRecord>,
}

macro_rules! builtin {
    ($kind:literal) => {
        ($kind, include_str!(concat!("../../data/", $kind, ".json")))
    };
}

impl Catalog {
    /// The catalog shipped with the crate.
    pub fn builtin() -> Result<Catalog, CatalogError> {
        let files: BTreeMap<&str, String> = [
            builtin!("sphere_actions"),
            builtin!("cross_spaces"),
            builtin!("slice_candidates"),
            builtin!("embeddings"),
            builtin!("wallach"),
            builtin!("su_base"),
            builtin!("models"),
            builtin!("fixtures"),
        ]
        .into_iter()
        .map(|(k, v)| (k, v.to_string()))
        .collect();
        Self::from_contents(&files)
    }

    /// Load from a directory holding the eight catalog files.
    pub fn from_dir(dir: &Path) -> Result<Catalog, CatalogError> {
        let mut files = BTreeMap::new();
        for kind in [
            "sphere_actions",
            "cross_spaces",
            "slice_candidates",
            "embeddings",
            "wallach",
            "su_base",
            "models",
            "fixtures",
        ] {
            let path = dir.join(format!("{kind}.json"));
            let contents = std::fs::read_to_string(&path).map_err(|source| CatalogError::Io {
                file: path.display().to_string(),
                source,
            })?;
            files.insert(kind, contents);
        }
        Self::from_contents(&files)
    }

    fn from_contents(files: &BTreeMap<&str, String>) -> Result<Catalog, CatalogError> {
        Ok(Catalog {
            sphere_actions: schema::load_records(
                "sphere_actions",
                "sphere_actions.json",
                &files["sphere_actions"],
            )?,
            cross_spaces: schema::load_records(
                "cross_spaces",
                "cross_spaces.json",
                &files["cross_spaces"],
            )?,
            slice_candidates: schema::load_records(
                "slice_candidates",
                "slice_candidates.json",
                &files["slice_candidates"],
            )?,
            embeddings: schema::load_records("embeddings", "embeddings.json", &files["embeddings"])?,
            wallach_rows: schema::load_records("wallach", "wallach.json", &files["wallach"])?,
            su_base: schema::load_records("su_base", "su_base.json", &files["su_base"])?,
            models: schema::load_records("models", "models.json", &files["models"])?,
            fixtures: schema::load_records("fixtures", "fixtures.json", &files["fixtures"])?,
        })
    }

    /// All catalog sphere-action rows whose acting group matches the given
    /// algebra up to the canonical isomorphism class. Returns the rows with a
    /// note on how the group factors through; unknown groups get an empty
    /// list ("not in catalog").
    pub fn sphere_transitive_candidates(
        &self,
        h: &ReductiveAlgebra,
    ) -> Vec<(&SphereActionRecord, String)> {
        let target = h.canonical();
        let mut out = Vec::new();
        for row in &self.sphere_actions {
            let Ok(alg) = row.group.algebra.to_algebra() else {
                continue;
            };
            let canon = alg.canonical();
            if canon == target {
                out.push((row, format!("isomorphic image of {}", row.group.name)));
            } else if canon.torus_rank <= target.torus_rank
                && is_sub_multiset(&canon.simples, &target.simples)
            {
                // Proper quotient: some factors (and possibly torus) die.
                out.push((
                    row,
                    format!("factors through the quotient onto {}", row.group.name),
                ));
            }
        }
        out
    }

    pub fn embedding(&self, id: &str) -> Option<&EmbeddingRecord> {
        self.embeddings.iter().find(|e| e.id == id)
    }

    pub fn fixture(&self, name: &str) -> Option<&FixtureRecord> {
        self.fixtures.iter().find(|f| f.name == name)
    }

    pub fn model(&self, name: &str) -> Option<&ModelRecord> {
        self.models.iter().find(|m| m.name == name)
    }
}

fn is_sub_multiset<T: Ord + Clone>(small: &[T], big: &[T]) -> bool {
    let mut pool = big.to_vec();
    for s in small {
        match pool.iter().position(|b| b == s) {
            Some(i) => {
                pool.remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Result of a fixed-space query: the dimension, or an explicit unknown
/// (never a silent zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FixedSpaceDim {
    Known(usize),
    Unknown,
}

/// Dimension of the fixed subspace of an embedded subgroup in a named ambient
/// representation: catalog value if present, otherwise derived from a
/// restriction rule via the invariant-multiplicity engine.
pub fn fixed_space_dim(e: &EmbeddingRecord, rep_name: &str) -> FixedSpaceDim {
    if let Some(&d) = e.fixed_space_dims.get(rep_name) {
        return FixedSpaceDim::Known(d);
    }
    if let Some(rule) = e.restrictions.get(rep_name) {
        if let Ok(sub_alg) = e.sub.to_algebra() {
            if let Ok(chi) = rule.character(&sub_alg) {
                if let Ok(m) = trivial_multiplicity(&chi) {
                    return FixedSpaceDim::Known(m as usize);
                }
            }
        }
    }
    FixedSpaceDim::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{SimpleFamily::*, SimpleType};

    #[test]
    fn builtin_catalog_loads() {
        let cat = Catalog::builtin().unwrap();
        assert!(!cat.sphere_actions.is_empty());
        assert!(!cat.cross_spaces.is_empty());
    }

    #[test]
    fn sphere_rows_satisfy_dimension_arithmetic() {
        let cat = Catalog::builtin().unwrap();
        for row in &cat.sphere_actions {
            let g = row.group.algebra.to_algebra().unwrap();
            let s = row.stabilizer.algebra.to_algebra().unwrap();
            assert_eq!(
                g.dim() - s.dim(),
                row.sphere_dim,
                "row {} / {}",
                row.group.name,
                row.rep_name
            );
            assert_eq!(row.sphere_dim + 1, row.real_dim, "row {}", row.group.name);
        }
    }

    #[test]
    fn sphere_rows_real_dims_consistent_with_characters() {
        let cat = Catalog::builtin().unwrap();
        for row in &cat.sphere_actions {
            let g = row.group.algebra.to_algebra().unwrap();
            let rep = RepRecord {
                constituents: row.constituents.clone(),
                reality: row.reality,
                real_dim: row.real_dim,
            };
            assert_eq!(
                rep.implied_real_dim(&g).unwrap(),
                row.real_dim,
                "row {} / {}",
                row.group.name,
                row.rep_name
            );
        }
    }

    #[test]
    fn completeness_matches_classical_list() {
        // For every sphere dimension d <= 25 the catalog groups acting on S^d
        // must be exactly the classical transitive families.
        let cat = Catalog::builtin().unwrap();
        let mut by_dim: BTreeMap<usize, Vec<String>> = BTreeMap::new();
        for row in &cat.sphere_actions {
            if row.sphere_dim <= 25 {
                by_dim
                    .entry(row.sphere_dim)
                    .or_default()
                    .push(row.group.name.clone());
            }
        }
        for d in 1..=25usize {
            let mut want: Vec<String> = vec![format!("SO({})", d + 1)];
            if d % 2 == 1 {
                let n = (d + 1) / 2;
                want.push(format!("U({n})"));
                if n >= 2 {
                    want.push(format!("SU({n})"));
                }
            }
            if d % 4 == 3 {
                let n = (d + 1) / 4;
                want.push(format!("Sp({n})"));
                want.push(format!("Sp({n})xU(1)"));
                if n >= 2 {
                    want.push(format!("Sp({n})xSp(1)"));
                }
            }
            if d == 6 {
                want.push("G2".into());
            }
            if d == 7 {
                want.push("Spin(7)".into());
            }
            if d == 15 {
                want.push("Spin(9)".into());
            }
            let mut got = by_dim.remove(&d).unwrap_or_default();
            got.sort();
            want.sort();
            assert_eq!(got, want, "groups acting on S^{d}");
        }
        assert!(by_dim.is_empty(), "unexpected rows beyond d = 25");
    }

    #[test]
    fn candidates_for_spin7() {
        let cat = Catalog::builtin().unwrap();
        let spin7 = ReductiveAlgebra::simple(SimpleType::new(B, 3));
        let rows = cat.sphere_transitive_candidates(&spin7);
        assert!(
            rows.iter()
                .any(|(r, _)| r.group.name == "Spin(7)" && r.sphere_dim == 7),
            "Spin(7) acts on S^7"
        );
        assert!(
            rows.iter()
                .any(|(r, _)| r.group.name == "SO(7)" && r.sphere_dim == 6),
            "the vector quotient is offered too"
        );
    }

    #[test]
    fn candidates_for_unknown_group_empty() {
        let cat = Catalog::builtin().unwrap();
        let weird = ReductiveAlgebra::new(vec![SimpleType::new(F4, 4), SimpleType::new(F4, 4)], 0);
        assert!(cat.sphere_transitive_candidates(&weird).is_empty());
    }

    #[test]
    fn fixed_space_dims_match_restriction_oracle() {
        // Wherever both a stored value and a restriction rule exist, the
        // stored dimension must equal the invariant multiplicity of the
        // restricted character.
        let cat = Catalog::builtin().unwrap();
        let mut checked = 0;
        for e in &cat.embeddings {
            for (rep, &stored) in &e.fixed_space_dims {
                if let Some(rule) = e.restrictions.get(rep) {
                    let sub = e.sub.to_algebra().unwrap();
                    let chi = rule.character(&sub).unwrap();
                    let derived = trivial_multiplicity(&chi).unwrap() as usize;
                    assert_eq!(stored, derived, "embedding {} rep {rep}", e.id);
                    checked += 1;
                }
            }
        }
        assert!(checked >= 4, "expected at least four oracle-checked entries");
    }

    #[test]
    fn quaternionic_line_fixed_spaces() {
        let cat = Catalog::builtin().unwrap();
        let block = cat.embedding("sp1-times-sp1-block-in-sp3").unwrap();
        assert_eq!(
            fixed_space_dim(block, "quaternionic-module"),
            FixedSpaceDim::Known(4)
        );
        let diag = cat.embedding("sp1-diag-times-sp1-in-sp3").unwrap();
        assert_eq!(
            fixed_space_dim(diag, "quaternionic-module"),
            FixedSpaceDim::Known(0)
        );
        let full = cat.embedding("full-group-sp3").unwrap();
        assert_eq!(
            fixed_space_dim(full, "quaternionic-module"),
            FixedSpaceDim::Known(0)
        );
        assert_eq!(fixed_space_dim(full, "no-such-rep"), FixedSpaceDim::Unknown);
    }
}
