//! Session files: one ring plus named ideals, modules, semigroups and
//! ℤ-data, resolved into engine objects.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use supclose_core::extensions::{NumericalSemigroup, SemigroupExtension, ZLocExtension};
use supclose_core::module::CyclicSumModule;
use supclose_core::zspec::ZModule;
use supclose_core::{CoeffField, Ideal, MonomialOrder, PolyRing, Polynomial};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffDecl {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDecl {
    pub coeff: CoeffDecl,
    pub vars: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDecl {
    pub cyclic: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDecl {
    pub small: String,
    pub large: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ZModuleDecl {
    #[serde(default)]
    pub torsion: Vec<u64>,
    #[serde(default)]
    pub free: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cofinite_exclude: Option<Vec<u64>>,
}

/// The file format, field for field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SessionFile {
    pub ring: RingDecl,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub modules: BTreeMap<String, ModuleDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub semigroups: BTreeMap<String, Vec<u64>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sg_extensions: BTreeMap<String, ExtensionDecl>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub zloc: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub zmodules: BTreeMap<String, ZModuleDecl>,
}

/// Name used for ℕ as the large side of an extension.
pub const NATURALS: &str = "N";

#[derive(Debug, Clone)]
pub struct Session {
    pub ring: Arc<PolyRing>,
    pub ideals: BTreeMap<String, Ideal>,
    pub modules: BTreeMap<String, CyclicSumModule>,
    pub semigroups: BTreeMap<String, NumericalSemigroup>,
    pub extensions: BTreeMap<String, SemigroupExtension>,
    pub zloc: BTreeMap<String, ZLocExtension>,
    pub zmodules: BTreeMap<String, ZModule>,
    /// The declaration with every polynomial in canonical form.
    canonical: SessionFile,
}

impl PartialEq for Session {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

fn reference(kind: &str, name: &str) -> CliError {
    CliError::parse(format!("undeclared {kind} `{name}`"))
}

fn engine(context: String, e: supclose_core::Error) -> CliError {
    CliError::from_core(e).context(context)
}

impl Session {
    pub fn load(path: &Path) -> Result<Session, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("cannot read {}: {e}", path.display())))?;
        Self::parse_str(&text)
    }

    pub fn parse_str(text: &str) -> Result<Session, CliError> {
        let file: SessionFile = serde_json::from_str(text).map_err(|e| {
            CliError::parse(format!("session syntax error at line {}, column {}: {e}", e.line(), e.column()))
        })?;
        Self::resolve(file)
    }

    pub fn resolve(file: SessionFile) -> Result<Session, CliError> {
        check_unique_names(&file)?;
        let field = match &file.ring.coeff {
            CoeffDecl::Named(q) if q == "Q" => CoeffField::Rational,
            CoeffDecl::Named(other) => {
                return Err(CliError::unsupported(format!("coefficient field `{other}`")));
            }
            CoeffDecl::Prime { fp } => CoeffField::Prime(*fp),
        };
        let ring = PolyRing::new(field, file.ring.vars.clone(), MonomialOrder::Grevlex)
            .map_err(|e| CliError::parse(format!("ring: {e}")))?;

        let mut canonical = file.clone();
        let mut ideals = BTreeMap::new();
        for (name, gens) in &file.ideals {
            let mut polys = Vec::with_capacity(gens.len());
            for (k, g) in gens.iter().enumerate() {
                let p = Polynomial::parse(g, &ring)
                    .map_err(|e| CliError::parse(format!("ideal `{name}`, generator {k}: {e}")))?;
                polys.push(p);
            }
            canonical.ideals.insert(name.clone(), polys.iter().map(|p| p.to_string()).collect());
            let ideal = Ideal::new(&ring, polys).map_err(|e| CliError::parse(format!("ideal `{name}`: {e}")))?;
            ideals.insert(name.clone(), ideal);
        }

        let mut modules = BTreeMap::new();
        for (name, decl) in &file.modules {
            let comps = decl
                .cyclic
                .iter()
                .map(|i| ideals.get(i).cloned().ok_or_else(|| reference("ideal", i)))
                .collect::<Result<Vec<_>, _>>()?;
            let m = CyclicSumModule::new(&ring, comps).map_err(|e| engine(format!("module `{name}`"), e))?;
            modules.insert(name.clone(), m);
        }

        let mut semigroups = BTreeMap::new();
        for (name, gens) in &file.semigroups {
            let s = NumericalSemigroup::new(gens).map_err(|e| engine(format!("semigroup `{name}`"), e))?;
            semigroups.insert(name.clone(), s);
        }

        let mut extensions = BTreeMap::new();
        for (name, decl) in &file.sg_extensions {
            let small = semigroups.get(&decl.small).cloned().ok_or_else(|| reference("semigroup", &decl.small))?;
            let large = if decl.large == NATURALS {
                NumericalSemigroup::naturals()
            } else {
                semigroups.get(&decl.large).cloned().ok_or_else(|| reference("semigroup", &decl.large))?
            };
            let ext = SemigroupExtension::new(small, large).map_err(|e| engine(format!("extension `{name}`"), e))?;
            extensions.insert(name.clone(), ext);
        }

        let mut zloc = BTreeMap::new();
        for (name, &n) in &file.zloc {
            let ext = ZLocExtension::new(n).map_err(|e| engine(format!("zloc `{name}`"), e))?;
            zloc.insert(name.clone(), ext);
        }

        let mut zmodules = BTreeMap::new();
        for (name, decl) in &file.zmodules {
            let m = ZModule::new(decl.torsion.clone(), decl.free, decl.cofinite_exclude.clone())
                .map_err(|e| engine(format!("zmodule `{name}`"), e))?;
            zmodules.insert(name.clone(), m);
        }

        Ok(Session { ring, ideals, modules, semigroups, extensions, zloc, zmodules, canonical })
    }

    /// Canonical JSON text of the session; parsing it yields an equal
    /// session.
    pub fn print(&self) -> String {
        serde_json::to_string_pretty(&self.canonical).expect("serializable")
    }

    pub fn declaration(&self) -> &SessionFile {
        &self.canonical
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal, CliError> {
        self.ideals.get(name).ok_or_else(|| reference("ideal", name))
    }

    /// A declared module, or `R/I` for a declared ideal `I`.
    pub fn module(&self, name: &str) -> Result<CyclicSumModule, CliError> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        if let Some(i) = self.ideals.get(name) {
            return Ok(CyclicSumModule::cyclic(i.clone()));
        }
        Err(reference("module", name))
    }

    pub fn extension(&self, name: &str) -> Result<&SemigroupExtension, CliError> {
        self.extensions.get(name).ok_or_else(|| reference("semigroup extension", name))
    }

    pub fn zloc(&self, name: &str) -> Result<&ZLocExtension, CliError> {
        self.zloc.get(name).ok_or_else(|| reference("zloc", name))
    }

    pub fn zmodule(&self, name: &str) -> Result<&ZModule, CliError> {
        self.zmodules.get(name).ok_or_else(|| reference("zmodule", name))
    }

    pub fn polynomial(&self, text: &str) -> Result<Polynomial, CliError> {
        Polynomial::parse(text, &self.ring).map_err(|e| CliError::parse(format!("`{text}`: {e}")))
    }
}

fn check_unique_names(file: &SessionFile) -> Result<(), CliError> {
    let mut seen = BTreeSet::new();
    let names = file
        .ideals
        .keys()
        .chain(file.modules.keys())
        .chain(file.semigroups.keys())
        .chain(file.sg_extensions.keys())
        .chain(file.zloc.keys())
        .chain(file.zmodules.keys());
    for name in names {
        if name == NATURALS {
            return Err(CliError::parse(format!("`{NATURALS}` is reserved for the natural numbers")));
        }
        if !seen.insert(name) {
            return Err(CliError::parse(format!("name `{name}` is declared twice")));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::ExitStatus;

    const MINIMAL: &str = r#"{"ring":{"coeff":"Q","vars":["x","y"]},"ideals":{"I1":["x^2","x*y"]}}"#;

    #[test]
    fn minimal_session() {
        let s = Session::parse_str(MINIMAL).unwrap();
        assert_eq!(s.ideals.len(), 1);
        assert_eq!(s.ideal("I1").unwrap().gens().len(), 2);
    }

    #[test]
    fn undeclared_reference() {
        let text = r#"{"ring":{"coeff":"Q","vars":["x"]},"modules":{"E":{"cyclic":["I9"]}}}"#;
        let err = Session::parse_str(text).unwrap_err();
        assert_eq!(err.status, ExitStatus::Parse);
        assert!(err.message.contains("I9"));
    }

    #[test]
    fn unsupported_semigroup() {
        let text = r#"{"ring":{"coeff":"Q","vars":["x"]},"semigroups":{"G":[4,6]}}"#;
        assert_eq!(Session::parse_str(text).unwrap_err().status, ExitStatus::Unsupported);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = Session::parse_str("{\"ring\":\n{\"coeff\":}").unwrap_err();
        assert_eq!(err.status, ExitStatus::Parse);
        assert!(err.message.contains("line 2"));
        let bad_poly = r#"{"ring":{"coeff":"Q","vars":["x"]},"ideals":{"I":["x^"]}}"#;
        assert_eq!(Session::parse_str(bad_poly).unwrap_err().status, ExitStatus::Parse);
        let dup = r#"{"ring":{"coeff":"Q","vars":["x"]},"ideals":{"A":["x"]},"zloc":{"A":6}}"#;
        assert_eq!(Session::parse_str(dup).unwrap_err().status, ExitStatus::Parse);
    }

    #[test]
    fn prime_field_sessions() {
        let text = r#"{"ring":{"coeff":{"Fp":5},"vars":["x"]},"ideals":{"I":["6*x"]}}"#;
        let s = Session::parse_str(text).unwrap();
        assert_eq!(s.declaration().ideals["I"], vec!["x".to_string()]);
        let bad = r#"{"ring":{"coeff":{"Fp":6},"vars":["x"]}}"#;
        assert_eq!(Session::parse_str(bad).unwrap_err().status, ExitStatus::Parse);
    }

    #[test]
    fn print_round_trip() {
        let text = r#"{
            "ring": {"coeff": "Q", "vars": ["x", "y"]},
            "ideals": {"A": ["y*x + x*y", "x^2"], "B": ["1/2*y"]},
            "modules": {"E": {"cyclic": ["A", "B"]}},
            "semigroups": {"G": [2, 5]},
            "sg_extensions": {"X": {"small": "G", "large": "N"}},
            "zloc": {"L": 6},
            "zmodules": {"M": {"torsion": [12, 18], "free": 0}, "F": {"cofinite_exclude": [2]}}
        }"#;
        let s = Session::parse_str(text).unwrap();
        let again = Session::parse_str(&s.print()).unwrap();
        assert_eq!(s, again);
        assert_eq!(s.print(), again.print());
    }
}
