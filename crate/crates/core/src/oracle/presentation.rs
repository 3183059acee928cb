//! Quivers with relations over F_p, and their TOML file format.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::OracleError;
use crate::linalg::Fp;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices and arrows are addressed by index; names are
/// kept for display and file round-trips.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
            .map(|(i, _)| i)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
            .map(|(i, _)| i)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Resolves a sequence of arrow labels into a path, checking composability.
    pub fn path(&self, labels: &[&str]) -> Result<Path, OracleError> {
        let arrows = labels
            .iter()
            .map(|l| {
                self.arrow_index(l)
                    .ok_or_else(|| OracleError::UnknownArrow(l.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let first = arrows.first().ok_or(OracleError::EmptyPath)?;
        let start = self.arrows[*first].source;
        Path::new(self, start, arrows)
    }
}

/// A path in a quiver, composed left to right: `a b` means `a` then `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn new(q: &Quiver, start: usize, arrows: Vec<usize>) -> Result<Self, OracleError> {
        let mut at = start;
        for &a in &arrows {
            if q.arrows[a].source != at {
                return Err(OracleError::NotComposable(
                    arrows
                        .iter()
                        .map(|&x| q.arrows[x].label.clone())
                        .collect::<Vec<_>>()
                        .join(" "),
                ));
            }
            at = q.arrows[a].target;
        }
        Ok(Path { start, arrows })
    }

    pub fn trivial(v: usize) -> Self {
        Path {
            start: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.start])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        }
    }
}

/// A linear combination of paths with integer coefficients (read mod p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Combination {
    pub terms: Vec<(i64, Path)>,
}

impl Combination {
    pub fn monomial(path: Path) -> Self {
        Combination { terms: vec![(1, path)] }
    }

    pub fn from_terms(terms: Vec<(i64, Path)>) -> Self {
        Combination { terms }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundQuiverPresentation {
    pub name: String,
    pub quiver: Arc<Quiver>,
    pub char_p: u32,
    pub relations: Vec<Combination>,
    pub loewy_bound: usize,
    /// Named modules, each a submodule (or subquotient) of a sum of projectives.
    pub modules: Vec<ModuleDefinition>,
}

/// `(<generators> + <modulo>) / <modulo>` inside `P_{s_1} ⊕ ... ⊕ P_{s_r}`.
/// Each generator lists one algebra element per summand; an empty
/// combination is zero and an empty path is the idempotent of that summand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleDefinition {
    pub name: String,
    pub summands: Vec<usize>,
    pub generators: Vec<Vec<Combination>>,
    pub modulo: Vec<Vec<Combination>>,
}

impl BoundQuiverPresentation {
    pub fn field(&self) -> Fp {
        Fp::new(self.char_p).expect("validated characteristic")
    }

    /// Checks the characteristic and that every relation is a combination of
    /// parallel paths of length at least two.
    pub fn validate(&self) -> Result<(), OracleError> {
        if Fp::new(self.char_p).is_none() {
            return Err(OracleError::InvalidCharacteristic(self.char_p));
        }
        if self.loewy_bound == 0 {
            return Err(OracleError::InvalidLoewyBound);
        }
        let q = &self.quiver;
        for (idx, rel) in self.relations.iter().enumerate() {
            let mut ends = None;
            for (_, path) in &rel.terms {
                if path.len() < 2 {
                    return Err(OracleError::NonAdmissibleRelation {
                        index: idx,
                        reason: format!("path `{}` has length < 2", path.display(q)),
                    });
                }
                let pair = (path.start, path.end(q));
                match ends {
                    None => ends = Some(pair),
                    Some(e) if e != pair => {
                        return Err(OracleError::NonAdmissibleRelation {
                            index: idx,
                            reason: "paths are not parallel".into(),
                        })
                    }
                    _ => {}
                }
            }
        }
        for def in &self.modules {
            for gen in def.generators.iter().chain(&def.modulo) {
                if gen.len() != def.summands.len() {
                    return Err(OracleError::BadModuleDefinition(def.name.clone()));
                }
                for (comb, &s) in gen.iter().zip(&def.summands) {
                    if comb.terms.iter().any(|(_, p)| p.start != s) {
                        return Err(OracleError::BadModuleDefinition(def.name.clone()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Arrows and relation paths reversed: a presentation of the opposite algebra.
    pub fn transpose(&self) -> BoundQuiverPresentation {
        let q = &self.quiver;
        let opposite = Arc::new(q.opposite());
        let reverse = |p: &Path| Path {
            start: p.end(q),
            arrows: p.arrows.iter().rev().copied().collect(),
        };
        BoundQuiverPresentation {
            name: match self.name.strip_suffix("^op") {
                Some(base) => base.to_string(),
                None => format!("{}^op", self.name),
            },
            quiver: opposite,
            char_p: self.char_p,
            relations: self
                .relations
                .iter()
                .map(|r| Combination::from_terms(r.terms.iter().map(|(c, p)| (*c, reverse(p))).collect()))
                .collect(),
            loewy_bound: self.loewy_bound,
            modules: Vec::new(),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&PresentationFile::from(self)).expect("presentation serializes")
    }

    pub fn from_toml(text: &str) -> Result<Self, OracleError> {
        let file: PresentationFile = toml::from_str(text).map_err(|e| OracleError::Parse(e.to_string()))?;
        file.try_into()
    }
}

impl fmt::Display for BoundQuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over F_{} ({} vertices, {} arrows, {} relations)",
            self.name,
            self.char_p,
            self.quiver.vertex_count(),
            self.quiver.arrows.len(),
            self.relations.len()
        )
    }
}

// ---- file schema ----

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct PresentationFile {
    pub schema_version: u32,
    pub name: String,
    #[serde(rename = "char")]
    pub char_p: u32,
    pub loewy_bound: usize,
    pub quiver: QuiverFile,
    #[serde(default, rename = "relation")]
    pub relations: Vec<RelationFile>,
    #[serde(default, rename = "module", skip_serializing_if = "Vec::is_empty")]
    pub modules: Vec<ModuleFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct QuiverFile {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ArrowFile {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct TermFile {
    pub coeff: i64,
    pub path: Vec<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct RelationFile {
    pub terms: Vec<TermFile>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct ModuleFile {
    pub name: String,
    pub summands: Vec<String>,
    pub generators: Vec<Vec<Vec<TermFile>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub modulo: Vec<Vec<Vec<TermFile>>>,
}

fn terms_to_file(q: &Quiver, c: &Combination) -> Vec<TermFile> {
    c.terms
        .iter()
        .map(|(coeff, p)| TermFile {
            coeff: *coeff,
            path: p.arrows.iter().map(|&a| q.arrows[a].label.clone()).collect(),
        })
        .collect()
}

fn terms_from_file(q: &Quiver, start: Option<usize>, terms: &[TermFile]) -> Result<Combination, OracleError> {
    let mut out = Vec::new();
    for t in terms {
        let path = if t.path.is_empty() {
            Path::trivial(start.ok_or(OracleError::EmptyPath)?)
        } else {
            let labels: Vec<&str> = t.path.iter().map(String::as_str).collect();
            q.path(&labels)?
        };
        out.push((t.coeff, path));
    }
    Ok(Combination::from_terms(out))
}

impl From<&BoundQuiverPresentation> for PresentationFile {
    fn from(p: &BoundQuiverPresentation) -> Self {
        let q = &p.quiver;
        PresentationFile {
            schema_version: SCHEMA_VERSION,
            name: p.name.clone(),
            char_p: p.char_p,
            loewy_bound: p.loewy_bound,
            quiver: QuiverFile {
                vertices: q.vertices.clone(),
                arrows: q
                    .arrows
                    .iter()
                    .map(|a| ArrowFile {
                        label: a.label.clone(),
                        source: q.vertices[a.source].clone(),
                        target: q.vertices[a.target].clone(),
                    })
                    .collect(),
            },
            relations: p
                .relations
                .iter()
                .map(|r| RelationFile {
                    terms: terms_to_file(q, r),
                })
                .collect(),
            modules: p
                .modules
                .iter()
                .map(|m| {
                    let gens = |list: &Vec<Vec<Combination>>| {
                        list.iter()
                            .map(|g| g.iter().map(|c| terms_to_file(q, c)).collect())
                            .collect()
                    };
                    ModuleFile {
                        name: m.name.clone(),
                        summands: m.summands.iter().map(|&s| q.vertices[s].clone()).collect(),
                        generators: gens(&m.generators),
                        modulo: gens(&m.modulo),
                    }
                })
                .collect(),
        }
    }
}

impl TryFrom<PresentationFile> for BoundQuiverPresentation {
    type Error = OracleError;

    fn try_from(f: PresentationFile) -> Result<Self, Self::Error> {
        if f.schema_version != SCHEMA_VERSION {
            return Err(OracleError::Parse(format!(
                "unsupported schema_version {} (expected {SCHEMA_VERSION})",
                f.schema_version
            )));
        }
        let index: HashMap<&str, usize> = f
            .quiver
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        if index.len() != f.quiver.vertices.len() {
            return Err(OracleError::Parse("duplicate vertex name".into()));
        }
        let vertex = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| OracleError::UnknownVertex(name.to_string()))
        };
        let mut arrows = Vec::new();
        for a in &f.quiver.arrows {
            if arrows.iter().any(|x: &Arrow| x.label == a.label) {
                return Err(OracleError::Parse(format!("duplicate arrow label `{}`", a.label)));
            }
            arrows.push(Arrow {
                label: a.label.clone(),
                source: vertex(&a.source)?,
                target: vertex(&a.target)?,
            });
        }
        let quiver = Quiver {
            vertices: f.quiver.vertices.clone(),
            arrows,
        };
        let relations = f
            .relations
            .iter()
            .map(|r| terms_from_file(&quiver, None, &r.terms))
            .collect::<Result<Vec<_>, _>>()?;
        let mut modules = Vec::new();
        for m in &f.modules {
            let summands = m.summands.iter().map(|s| vertex(s)).collect::<Result<Vec<_>, _>>()?;
            let convert = |list: &Vec<Vec<Vec<TermFile>>>| -> Result<Vec<Vec<Combination>>, OracleError> {
                list.iter()
                    .map(|g| {
                        if g.len() != summands.len() {
                            return Err(OracleError::BadModuleDefinition(m.name.clone()));
                        }
                        g.iter()
                            .zip(&summands)
                            .map(|(terms, &s)| terms_from_file(&quiver, Some(s), terms))
                            .collect()
                    })
                    .collect()
            };
            modules.push(ModuleDefinition {
                name: m.name.clone(),
                generators: convert(&m.generators)?,
                modulo: convert(&m.modulo)?,
                summands,
            });
        }
        let pres = BoundQuiverPresentation {
            name: f.name,
            quiver: Arc::new(quiver),
            char_p: f.char_p,
            relations,
            loewy_bound: f.loewy_bound,
            modules,
        };
        pres.validate()?;
        Ok(pres)
    }
}

/// Combination of paths given by arrow labels.
type LabelTerms = Vec<(i64, Vec<String>)>;
/// One element per summand of a module definition.
type LabelGenerators = Vec<Vec<LabelTerms>>;

/// Convenience builder used by the catalog and tests.
pub struct PresentationBuilder {
    name: String,
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    relations: Vec<LabelTerms>,
    modules: Vec<(String, Vec<String>, LabelGenerators, LabelGenerators)>,
    char_p: u32,
    loewy_bound: usize,
}

impl PresentationBuilder {
    pub fn new(name: &str, char_p: u32, loewy_bound: usize) -> Self {
        PresentationBuilder {
            name: name.to_string(),
            vertices: Vec::new(),
            arrows: Vec::new(),
            relations: Vec::new(),
            modules: Vec::new(),
            char_p,
            loewy_bound,
        }
    }

    pub fn vertices<S: ToString>(mut self, names: impl IntoIterator<Item = S>) -> Self {
        self.vertices = names.into_iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn arrow(mut self, label: &str, source: &str, target: &str) -> Self {
        let v = |n: &str| {
            self.vertices
                .iter()
                .position(|x| x == n)
                .unwrap_or_else(|| panic!("unknown vertex {n}"))
        };
        let (s, t) = (v(source), v(target));
        self.arrows.push(Arrow {
            label: label.to_string(),
            source: s,
            target: t,
        });
        self
    }

    /// Adds a relation written as `[(coeff, "a b c"), ...]`.
    pub fn relation(mut self, terms: &[(i64, &str)]) -> Self {
        self.relations.push(split_terms(terms));
        self
    }

    pub fn zero(self, path: &str) -> Self {
        self.relation(&[(1, path)])
    }

    /// Adds a named module; each generator has one `[(coeff, path)]` list per
    /// summand (`""` denotes the idempotent).
    pub fn module(
        mut self,
        name: &str,
        summands: &[&str],
        generators: &[&[&[(i64, &str)]]],
        modulo: &[&[&[(i64, &str)]]],
    ) -> Self {
        let conv = |gs: &[&[&[(i64, &str)]]]| gs.iter().map(|g| g.iter().map(|c| split_terms(c)).collect()).collect();
        self.modules.push((
            name.to_string(),
            summands.iter().map(|s| s.to_string()).collect(),
            conv(generators),
            conv(modulo),
        ));
        self
    }

    pub fn build(self) -> Result<BoundQuiverPresentation, OracleError> {
        let file = PresentationFile {
            schema_version: SCHEMA_VERSION,
            name: self.name,
            char_p: self.char_p,
            loewy_bound: self.loewy_bound,
            quiver: QuiverFile {
                vertices: self.vertices.clone(),
                arrows: self
                    .arrows
                    .iter()
                    .map(|a| ArrowFile {
                        label: a.label.clone(),
                        source: self.vertices[a.source].clone(),
                        target: self.vertices[a.target].clone(),
                    })
                    .collect(),
            },
            relations: self
                .relations
                .into_iter()
                .map(|r| RelationFile {
                    terms: to_term_files(r),
                })
                .collect(),
            modules: self
                .modules
                .into_iter()
                .map(|(name, summands, gens, modulo)| ModuleFile {
                    name,
                    summands,
                    generators: gens
                        .into_iter()
                        .map(|g| g.into_iter().map(to_term_files).collect())
                        .collect(),
                    modulo: modulo
                        .into_iter()
                        .map(|g| g.into_iter().map(to_term_files).collect())
                        .collect(),
                })
                .collect(),
        };
        file.try_into()
    }
}

fn split_terms(terms: &[(i64, &str)]) -> Vec<(i64, Vec<String>)> {
    terms
        .iter()
        .map(|(c, p)| (*c, p.split_whitespace().map(str::to_string).collect()))
        .collect()
}

fn to_term_files(terms: Vec<(i64, Vec<String>)>) -> Vec<TermFile> {
    terms
        .into_iter()
        .map(|(coeff, path)| TermFile { coeff, path })
        .collect()
}
