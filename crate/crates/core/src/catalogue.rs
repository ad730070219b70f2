//! Lists of rings (and optionally ideals) to run the theorem checks over.
//!
//! A catalogue file is TOML:
//!
//! ```toml
//! description = "small cases"
//!
//! [[ring]]
//! spec = "Zn:8"
//! ideals = [[4], [2]]   # optional; omitted means every proper ideal
//!
//! [[ring]]
//! spec = "prod(Zn:2,Zn:4)"
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::ring::Element;
use crate::spec::{parse_ring_spec, RingSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub spec: RingSpec,
    /// Generator lists for the ideals to test; `None` tests every proper ideal.
    pub ideals: Option<Vec<Vec<Element>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalogue {
    pub description: String,
    pub entries: Vec<CatalogueEntry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CatalogueFile {
    description: Option<String>,
    #[serde(default)]
    ring: Vec<EntryFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EntryFile {
    spec: String,
    ideals: Option<Vec<Vec<Element>>>,
}

/// Every monic polynomial over `Z_p` of degree `1..=max_degree`, constant term first.
fn monic_polynomials(p: u64, max_degree: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for degree in 1..=max_degree {
        let count = p.pow(degree as u32);
        for code in 0..count {
            let mut c = code;
            let mut coeffs: Vec<u64> = (0..degree)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect();
            coeffs.push(1);
            out.push(coeffs);
        }
    }
    out
}

impl Catalogue {
    /// `Z_n` for `2 <= n <= 100`, `Z_m x Z_n` for `2 <= m, n <= 8`, and
    /// `Z_p[x]/(f)` for `p` in {2, 3, 5}, `f` monic of degree at most 3,
    /// all with every proper ideal.
    pub fn default_catalogue() -> Self {
        let mut entries = Vec::new();
        for n in 2..=100 {
            entries.push(RingSpec::Zn(n));
        }
        for m in 2..=8 {
            for n in 2..=8 {
                entries.push(RingSpec::Prod(
                    Box::new(RingSpec::Zn(m)),
                    Box::new(RingSpec::Zn(n)),
                ));
            }
        }
        for p in [2u64, 3, 5] {
            for coeffs in monic_polynomials(p, 3) {
                if p.pow(coeffs.len() as u32 - 1) <= 128 {
                    entries.push(RingSpec::Polyq { p, coeffs });
                }
            }
        }
        Catalogue {
            description: "default: Zn (n<=100); Zm x Zn (m,n<=8); Zp[x]/(f) (p in {2,3,5}, deg f<=3, order<=128); all ideals"
                .to_string(),
            entries: entries
                .into_iter()
                .map(|spec| CatalogueEntry { spec, ideals: None })
                .collect(),
        }
    }

    pub fn single(spec: RingSpec, ideals: Option<Vec<Vec<Element>>>) -> Self {
        Catalogue {
            description: spec.to_string(),
            entries: vec![CatalogueEntry { spec, ideals }],
        }
    }

    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: CatalogueFile =
            toml::from_str(text).map_err(|e| Error::Catalogue(e.to_string()))?;
        let entries = file
            .ring
            .into_iter()
            .map(|e| {
                let spec = parse_ring_spec(&e.spec)
                    .map_err(|err| Error::Catalogue(format!("ring `{}`: {err}", e.spec)))?;
                Ok(CatalogueEntry {
                    spec,
                    ideals: e.ideals,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalogue {
            description: file
                .description
                .unwrap_or_else(|| format!("{} ring(s)", entries.len())),
            entries,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Catalogue(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalogue_shape() {
        let cat = Catalogue::default_catalogue();
        let zn = cat
            .entries
            .iter()
            .filter(|e| matches!(e.spec, RingSpec::Zn(_)))
            .count();
        let prod = cat
            .entries
            .iter()
            .filter(|e| matches!(e.spec, RingSpec::Prod(..)))
            .count();
        let poly = cat
            .entries
            .iter()
            .filter(|e| matches!(e.spec, RingSpec::Polyq { .. }))
            .count();
        assert_eq!(zn, 99);
        assert_eq!(prod, 49);
        // 2 + 4 + 8, 3 + 9 + 27, 5 + 25 + 125
        assert_eq!(poly, 14 + 39 + 155);
    }

    #[test]
    fn parses_toml() {
        let cat = Catalogue::from_toml_str(
            r#"
            description = "two"
            [[ring]]
            spec = "Zn:8"
            ideals = [[4]]
            [[ring]]
            spec = "prod(Zn:2, Zn:4)"
            "#,
        )
        .unwrap();
        assert_eq!(cat.description, "two");
        assert_eq!(cat.entries[0].ideals, Some(vec![vec![4]]));
        assert_eq!(cat.entries[1].spec.to_string(), "prod(Zn:2,Zn:4)");
        assert!(Catalogue::from_toml_str("[[ring]]\nspec = \"Zn:1\"").is_err());
        assert!(Catalogue::from_toml_str("[[ring]]\nspek = \"Zn:4\"").is_err());
    }
}
