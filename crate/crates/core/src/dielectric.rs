//! Dielectric film properties and the built-in film catalog.

use serde::Deserialize;

use crate::error::{Error, Result};

/// Permittivity of free space, N/V².
pub const VACUUM_PERMITTIVITY: f64 = 8.854e-12;

/// Default per-cell DC leakage resistance, Ω.
///
/// Back-computed from the measured 50 µW/cell hold power at 600 V:
/// R = V²/P = 600² / 50e-6 = 7.2 GΩ.
pub const DEFAULT_LEAKAGE_RESISTANCE: f64 = 7.2e9;

/// One dielectric film option for the electroadhesive stack.
#[derive(Debug, Clone, PartialEq)]
pub struct DielectricSpec {
    pub name: String,
    /// Relative permittivity ε_r, dimensionless.
    pub epsilon_r: f64,
    /// Film thickness d, m.
    pub thickness: f64,
    /// Unit-area cost, USD/cm².
    pub cost_per_area: f64,
    /// Per-cell DC leakage resistance, Ω.
    pub leakage_resistance: f64,
}

impl DielectricSpec {
    pub fn validate(&self) -> Result<()> {
        if self.name.is_empty() {
            return Err(Error::Invariant("dielectric name must be non-empty".into()));
        }
        if !(self.epsilon_r >= 1.0) {
            return Err(Error::Invariant(format!(
                "dielectric {}: epsilon_r = {} must be >= 1",
                self.name, self.epsilon_r
            )));
        }
        if !(self.thickness > 0.0) {
            return Err(Error::Invariant(format!(
                "dielectric {}: thickness = {} m must be > 0",
                self.name, self.thickness
            )));
        }
        if !(self.cost_per_area >= 0.0) {
            return Err(Error::Invariant(format!(
                "dielectric {}: cost_per_area = {} USD/cm2 must be >= 0",
                self.name, self.cost_per_area
            )));
        }
        if !(self.leakage_resistance > 0.0) {
            return Err(Error::Invariant(format!(
                "dielectric {}: leakage_resistance = {} ohm must be > 0",
                self.name, self.leakage_resistance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Deserialize)]
struct CatalogFile {
    film: Vec<FilmEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FilmEntry {
    name: String,
    epsilon_r: f64,
    thickness_um: f64,
    cost_per_cm2_usd: f64,
    leakage_resistance_gohm: Option<f64>,
}

impl FilmEntry {
    fn into_spec(self) -> DielectricSpec {
        DielectricSpec {
            name: self.name,
            epsilon_r: self.epsilon_r,
            thickness: self.thickness_um * 1e-6,
            cost_per_area: self.cost_per_cm2_usd,
            leakage_resistance: self
                .leakage_resistance_gohm
                .map(|g| g * 1e9)
                .unwrap_or(DEFAULT_LEAKAGE_RESISTANCE),
        }
    }
}

/// A named set of dielectric films, keyed case-insensitively.
#[derive(Debug, Clone)]
pub struct Catalog {
    films: Vec<DielectricSpec>,
}

const BUILTIN_CATALOG: &str = include_str!("../data/dielectrics.toml");

impl Catalog {
    /// The three films shipped with the crate (see `data/dielectrics.toml`).
    pub fn builtin() -> Catalog {
        Catalog::parse(BUILTIN_CATALOG, "<builtin>")
            .expect("builtin dielectric catalog must parse")
    }

    pub fn from_path(path: &std::path::Path) -> Result<Catalog> {
        let text = std::fs::read_to_string(path)?;
        Catalog::parse(&text, &path.display().to_string())
    }

    pub fn parse(text: &str, source: &str) -> Result<Catalog> {
        let file: CatalogFile = toml::from_str(text).map_err(|e| Error::Parse {
            path: source.to_string(),
            line: e.span().map(|s| line_of(text, s.start)).unwrap_or(0),
            msg: e.message().to_string(),
        })?;
        let films: Vec<DielectricSpec> = file.film.into_iter().map(FilmEntry::into_spec).collect();
        if films.is_empty() {
            return Err(Error::Invariant(format!("catalog {source} has no films")));
        }
        for f in &films {
            f.validate()?;
        }
        Ok(Catalog { films })
    }

    pub fn get(&self, name: &str) -> Option<&DielectricSpec> {
        self.films
            .iter()
            .find(|f| f.name.eq_ignore_ascii_case(name))
    }

    pub fn names(&self) -> Vec<&str> {
        self.films.iter().map(|f| f.name.as_str()).collect()
    }

    pub fn films(&self) -> &[DielectricSpec] {
        &self.films
    }
}

fn line_of(text: &str, byte: usize) -> usize {
    text[..byte.min(text.len())].bytes().filter(|&b| b == b'\n').count() + 1
}
