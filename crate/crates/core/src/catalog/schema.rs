//! Versioned catalog files with schema checksums.
//!
//! Every data file is wrapped as `{"schema": ..., "version": ...,
//! "fields_sha256": ..., "records": ...}`. The checksum is the SHA-256 of the
//! field-list documentation string kept here, so editing either side without
//! the other fails loudly instead of drifting.

use serde::de::DeserializeOwned;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::CatalogError;

pub const SCHEMA_VERSION: u32 = 1;

/// Documented field lists, one per catalog file kind.
pub fn schema_fields(kind: &str) -> Option<&'static str> {
    Some(match kind {
        "sphere_actions" => {
            "group, rep_name, constituents, reality, real_dim, sphere_dim, stabilizer, notes"
        }
        "cross_spaces" => {
            "kind, n, group, stabilizer, embedding, isotropy, dim, cohomogeneity_on_self, symmetry, notes"
        }
        "slice_candidates" => {
            "family, n, name, descriptor, v_real_dim, nu, route, notes"
        }
        "embeddings" => {
            "id, ambient, sub, descriptor, sub_dim, semisimple, fixed_space_dims, restrictions, notes"
        }
        "wallach" => {
            "index, g1, h1, dim, parameter, hprime_candidates, notes"
        }
        "su_base" => {
            "index, n_ideal, h_prime, dim_v, requires_m, notes"
        }
        "models" => {
            "name, ambient_dim, constraints, action, base_points, checks, notes"
        }
        "fixtures" => "name, value, tolerance, notes",
        _ => return None,
    })
}

pub fn fields_sha256(kind: &str) -> Option<String> {
    schema_fields(kind).map(|f| {
        let mut h = Sha256::new();
        h.update(kind.as_bytes());
        h.update(b":");
        h.update(f.as_bytes());
        format!("{:x}", h.finalize())
    })
}

#[derive(Debug, Deserialize)]
struct Envelope<T> {
    schema: String,
    version: u32,
    fields_sha256: String,
    records: T,
}

/// Parse a catalog file, enforcing the schema header.
pub fn load_records<T: DeserializeOwned>(
    kind: &str,
    file_label: &str,
    contents: &str,
) -> Result<T, CatalogError> {
    let env: Envelope<T> =
        serde_json::from_str(contents).map_err(|source| CatalogError::Parse {
            file: file_label.to_string(),
            source,
        })?;
    if env.schema != kind {
        return Err(CatalogError::Schema {
            file: file_label.to_string(),
            detail: format!("schema name {:?}, expected {:?}", env.schema, kind),
        });
    }
    if env.version != SCHEMA_VERSION {
        return Err(CatalogError::Schema {
            file: file_label.to_string(),
            detail: format!("version {}, expected {}", env.version, SCHEMA_VERSION),
        });
    }
    let want = fields_sha256(kind).ok_or_else(|| CatalogError::Schema {
        file: file_label.to_string(),
        detail: format!("unknown schema kind {kind:?}"),
    })?;
    if env.fields_sha256 != want {
        return Err(CatalogError::Schema {
            file: file_label.to_string(),
            detail: format!(
                "field-list checksum {} does not match the documented schema ({want})",
                env.fields_sha256
            ),
        });
    }
    Ok(env.records)
}
