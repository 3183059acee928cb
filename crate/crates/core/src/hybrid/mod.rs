//! Hybrid algebras built from biserial quiver data.
//!
//! Arrows compose left to right, so a path `α f(α)` starts at `s(α)`.

pub mod catalog;
pub mod verify;

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::Fp;
use crate::oracle::{Arrow, BoundQuiverPresentation, Combination, OracleError, Path, Quiver};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HybridError {
    #[error("vertex `{0}` does not have exactly two incoming and two outgoing arrows")]
    NotTwoRegular(String),
    #[error("quiver is not connected")]
    Disconnected,
    #[error("f is not a permutation of the arrows")]
    NotAPermutation,
    #[error("s(f({0})) differs from t({0})")]
    FPermutationMismatch(String),
    #[error("triangle set is not a union of f-orbits of length 1 or 3 (at `{0}`)")]
    TriangleSetNotFInvariant(String),
    #[error("arrow `{0}` would be virtual (m·n too small)")]
    VirtualArrowPresent(String),
    #[error("parameter of the g-cycle through `{0}` vanishes in the field")]
    ZeroParameter(String),
    #[error("weight of the g-cycle through `{0}` must be positive")]
    BadWeight(String),
    #[error("conflicting parameters for the g-cycle through `{0}`")]
    ConflictingCycleParameters(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("vertex `{0}` is not a hybrid vertex")]
    VertexNotHybrid(String),
    #[error("vertex `{0}` is not a quaternion vertex")]
    VertexNotQuaternion(String),
    #[error("no loop at vertex `{0}` in the Gabriel quiver")]
    NoLoopAtVertex(String),
    #[error("`{0}` is not one of the catalog SD algebras")]
    NotACatalogSDAlgebra(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Per-g-cycle weight and parameter, addressed by any arrow on the cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleParameter {
    pub arrow: String,
    #[serde(default)]
    pub m: Option<usize>,
    #[serde(default)]
    pub c: Option<i64>,
}

/// Raw input: a 2-regular quiver, the permutation `f`, the triangle set and
/// the g-cycle parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiserialQuiverData {
    pub name: String,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    /// `f` in cycle notation, e.g. `(a0 a1 a2)(b0 b2 b1)`.
    pub f: String,
    /// Arrows of the triangle set, in cycle notation or space separated.
    #[serde(default)]
    pub triangles: String,
    #[serde(default = "one_usize")]
    pub default_m: usize,
    #[serde(default = "one_i64")]
    pub default_c: i64,
    #[serde(default, rename = "cycle")]
    pub cycles: Vec<CycleParameter>,
}

fn one_usize() -> usize {
    1
}

fn one_i64() -> i64 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Serialize, Deserialize)]
struct BiserialFile {
    schema_version: u32,
    #[serde(flatten)]
    data: BiserialQuiverData,
}

impl BiserialQuiverData {
    pub fn from_toml(text: &str) -> Result<Self, HybridError> {
        let file: BiserialFile = toml::from_str(text).map_err(|e| HybridError::Parse(e.to_string()))?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(HybridError::Parse(format!(
                "unsupported schema_version {}",
                file.schema_version
            )));
        }
        Ok(file.data)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(&BiserialFile {
            schema_version: SCHEMA_VERSION,
            data: self.clone(),
        })
        .expect("biserial data serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexClass {
    Biserial,
    Quaternion,
    Hybrid,
}

/// Validated data with the derived permutations.
#[derive(Clone, Debug)]
pub struct HybridData {
    pub name: String,
    pub quiver: Arc<Quiver>,
    pub f: Vec<usize>,
    /// The other arrow with the same source.
    pub bar: Vec<usize>,
    /// `g(α) = bar(f(α))`.
    pub g: Vec<usize>,
    pub g_cycles: Vec<Vec<usize>>,
    pub cycle_of: Vec<usize>,
    pub in_triangles: Vec<bool>,
    /// Weight and parameter per g-cycle.
    pub m: Vec<usize>,
    pub c: Vec<i64>,
    pub classes: Vec<VertexClass>,
}

/// Parses `(a b c)(d e)` or `a b c` into lists of labels.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<String>>, HybridError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if !text.contains('(') {
        return Ok(vec![text.split_whitespace().map(str::to_string).collect()]);
    }
    let mut out = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .strip_prefix('(')
            .ok_or_else(|| HybridError::Parse(format!("expected `(` in `{text}`")))?;
        let close = open
            .find(')')
            .ok_or_else(|| HybridError::Parse(format!("unbalanced cycle in `{text}`")))?;
        out.push(open[..close].split_whitespace().map(str::to_string).collect());
        rest = open[close + 1..].trim_start();
    }
    Ok(out)
}

pub fn format_cycles(q: &Quiver, cycles: &[Vec<usize>]) -> String {
    cycles
        .iter()
        .map(|c| {
            let labels: Vec<&str> = c.iter().map(|&a| q.arrows[a].label.as_str()).collect();
            format!("({})", labels.join(" "))
        })
        .collect()
}

fn orbits(perm: &[usize]) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut seen = vec![usize::MAX; perm.len()];
    let mut cycles = Vec::new();
    for start in 0..perm.len() {
        if seen[start] != usize::MAX {
            continue;
        }
        let mut cyc = Vec::new();
        let mut a = start;
        while seen[a] == usize::MAX {
            seen[a] = cycles.len();
            cyc.push(a);
            a = perm[a];
        }
        cycles.push(cyc);
    }
    (cycles, seen)
}

impl BiserialQuiverData {
    pub fn validate(&self) -> Result<HybridData, HybridError> {
        let vertex = |n: &str| {
            self.vertices
                .iter()
                .position(|v| v == n)
                .ok_or_else(|| HybridError::UnknownVertex(n.to_string()))
        };
        let mut arrows = Vec::new();
        for a in &self.arrows {
            arrows.push(Arrow {
                label: a.label.clone(),
                source: vertex(&a.source)?,
                target: vertex(&a.target)?,
            });
        }
        let quiver = Quiver {
            vertices: self.vertices.clone(),
            arrows,
        };
        let na = quiver.arrows.len();
        let nv = quiver.vertex_count();
        for v in 0..nv {
            if quiver.arrows_from(v).count() != 2 || quiver.arrows_into(v).count() != 2 {
                return Err(HybridError::NotTwoRegular(self.vertices[v].clone()));
            }
        }
        if !connected(&quiver) {
            return Err(HybridError::Disconnected);
        }
        let arrow = |l: &str| {
            quiver
                .arrow_index(l)
                .ok_or_else(|| HybridError::UnknownArrow(l.to_string()))
        };

        let mut f = vec![usize::MAX; na];
        for cyc in parse_cycles(&self.f)? {
            for (i, l) in cyc.iter().enumerate() {
                let a = arrow(l)?;
                let b = arrow(&cyc[(i + 1) % cyc.len()])?;
                if f[a] != usize::MAX {
                    return Err(HybridError::NotAPermutation);
                }
                f[a] = b;
            }
        }
        // arrows not mentioned are fixed points
        for (a, fa) in f.iter_mut().enumerate() {
            if *fa == usize::MAX {
                *fa = a;
            }
        }
        let mut image = vec![false; na];
        for &b in &f {
            if image[b] {
                return Err(HybridError::NotAPermutation);
            }
            image[b] = true;
        }
        for a in 0..na {
            if quiver.arrows[f[a]].source != quiver.arrows[a].target {
                return Err(HybridError::FPermutationMismatch(quiver.arrows[a].label.clone()));
            }
        }

        let bar: Vec<usize> = (0..na)
            .map(|a| {
                quiver
                    .arrows_from(quiver.arrows[a].source)
                    .find(|&b| b != a)
                    .expect("two arrows per vertex")
            })
            .collect();
        let g: Vec<usize> = (0..na).map(|a| bar[f[a]]).collect();
        let mut g_inv = vec![0; na];
        let mut f_inv = vec![0; na];
        for a in 0..na {
            g_inv[g[a]] = a;
            f_inv[f[a]] = a;
        }
        for a in 0..na {
            assert_eq!(
                g_inv[a], f_inv[bar[a]],
                "g^-1(α) = f^-1(ᾱ) fails at {}",
                quiver.arrows[a].label
            );
        }

        let (f_orbits, f_orbit_of) = orbits(&f);
        let mut in_triangles = vec![false; na];
        let listed: BTreeSet<usize> = parse_cycles(&self.triangles)?
            .into_iter()
            .flatten()
            .map(|l| arrow(&l))
            .collect::<Result<_, _>>()?;
        for &a in &listed {
            let orbit = &f_orbits[f_orbit_of[a]];
            if !(orbit.len() == 1 || orbit.len() == 3) || !orbit.iter().all(|b| listed.contains(b)) {
                return Err(HybridError::TriangleSetNotFInvariant(quiver.arrows[a].label.clone()));
            }
            in_triangles[a] = true;
        }

        let (g_cycles, cycle_of) = orbits(&g);
        let mut m: Vec<Option<usize>> = vec![None; g_cycles.len()];
        let mut c: Vec<Option<i64>> = vec![None; g_cycles.len()];
        for p in &self.cycles {
            let k = cycle_of[arrow(&p.arrow)?];
            if let Some(w) = p.m {
                if w == 0 {
                    return Err(HybridError::BadWeight(p.arrow.clone()));
                }
                if m[k].is_some_and(|x| x != w) {
                    return Err(HybridError::ConflictingCycleParameters(p.arrow.clone()));
                }
                m[k] = Some(w);
            }
            if let Some(x) = p.c {
                if c[k].is_some_and(|y| y != x) {
                    return Err(HybridError::ConflictingCycleParameters(p.arrow.clone()));
                }
                c[k] = Some(x);
            }
        }
        if self.default_m == 0 {
            return Err(HybridError::BadWeight("default".into()));
        }
        let m: Vec<usize> = m.into_iter().map(|x| x.unwrap_or(self.default_m)).collect();
        let c: Vec<i64> = c.into_iter().map(|x| x.unwrap_or(self.default_c)).collect();

        for a in 0..na {
            let k = cycle_of[a];
            let len = m[k] * g_cycles[k].len();
            let needed = if in_triangles[bar[a]] { 3 } else { 2 };
            if len < needed {
                return Err(HybridError::VirtualArrowPresent(quiver.arrows[a].label.clone()));
            }
        }

        let classes = (0..nv)
            .map(|v| {
                let count = quiver.arrows_from(v).filter(|&a| in_triangles[a]).count();
                match count {
                    0 => VertexClass::Biserial,
                    2 => VertexClass::Quaternion,
                    _ => VertexClass::Hybrid,
                }
            })
            .collect();

        Ok(HybridData {
            name: self.name.clone(),
            quiver: Arc::new(quiver),
            f,
            bar,
            g,
            g_cycles,
            cycle_of,
            in_triangles,
            m,
            c,
            classes,
        })
    }
}

fn connected(q: &Quiver) -> bool {
    let n = q.vertex_count();
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for a in &q.arrows {
            for (x, y) in [(a.source, a.target), (a.target, a.source)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

impl HybridData {
    pub fn arrow(&self, label: &str) -> Option<usize> {
        self.quiver.arrow_index(label)
    }

    pub fn label(&self, a: usize) -> &str {
        &self.quiver.arrows[a].label
    }

    /// Length of the g-cycle through `a`.
    pub fn n(&self, a: usize) -> usize {
        self.g_cycles[self.cycle_of[a]].len()
    }

    pub fn m_of(&self, a: usize) -> usize {
        self.m[self.cycle_of[a]]
    }

    pub fn c_of(&self, a: usize) -> i64 {
        self.c[self.cycle_of[a]]
    }

    /// `m_α n_α`, the length of `B_α`.
    pub fn mn(&self, a: usize) -> usize {
        self.m_of(a) * self.n(a)
    }

    /// Walks `len` steps along the g-cycle starting with `a`.
    pub fn g_path(&self, a: usize, len: usize) -> Path {
        let mut arrows = Vec::with_capacity(len);
        let mut x = a;
        for _ in 0..len {
            arrows.push(x);
            x = self.g[x];
        }
        Path::new(&self.quiver, self.quiver.arrows[a].source, arrows).expect("g-cycles compose")
    }

    /// The g-cycle monomial `B_α` of length `m_α n_α`.
    pub fn b(&self, a: usize) -> Path {
        self.g_path(a, self.mn(a))
    }

    /// `A_α`, with `B_α = A_α g^{-1}(α)`.
    pub fn a(&self, a: usize) -> Path {
        self.g_path(a, self.mn(a) - 1)
    }

    pub fn path(&self, arrows: &[usize]) -> Path {
        Path::new(&self.quiver, self.quiver.arrows[arrows[0]].source, arrows.to_vec()).expect("composable")
    }

    pub fn loewy_bound(&self) -> usize {
        (0..self.f.len()).map(|a| self.mn(a)).max().unwrap_or(0) + 2
    }

    pub fn f_orbits(&self) -> Vec<Vec<usize>> {
        orbits(&self.f).0
    }

    /// The relations of the hybrid algebra over `F_p`.
    pub fn build(&self, p: u32) -> Result<BoundQuiverPresentation, HybridError> {
        let field = Fp::new(p).ok_or(OracleError::InvalidCharacteristic(p))?;
        for (k, cyc) in self.g_cycles.iter().enumerate() {
            if field.from_i64(self.c[k]) == 0 {
                return Err(HybridError::ZeroParameter(self.label(cyc[0]).to_string()));
            }
        }
        let mut relations = Vec::new();
        for a in 0..self.f.len() {
            let fa = self.f[a];
            let abar = self.bar[a];
            // (1)
            let af = self.path(&[a, fa]);
            if self.in_triangles[a] {
                relations.push(Combination::from_terms(vec![(1, af), (-self.c_of(abar), self.a(abar))]));
            } else {
                relations.push(Combination::monomial(af));
            }
            // (2) and (2')
            relations.push(Combination::monomial(self.path(&[a, fa, self.g[fa]])));
            let ga = self.g[a];
            relations.push(Combination::monomial(self.path(&[a, ga, self.f[ga]])));
            // (3), once per pair of arrows at a vertex
            if a < abar {
                relations.push(Combination::from_terms(vec![
                    (self.c_of(a), self.b(a)),
                    (-self.c_of(abar), self.b(abar)),
                ]));
            }
        }
        let pres = BoundQuiverPresentation {
            name: self.name.clone(),
            quiver: self.quiver.clone(),
            char_p: p,
            relations,
            loewy_bound: self.loewy_bound(),
            modules: Vec::new(),
        };
        pres.validate()?;
        Ok(pres)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_instance_permutations() {
        let data = catalog::triangle_data(true).validate().unwrap();
        let q = &data.quiver;
        assert_eq!(format_cycles(q, &data.g_cycles), "(a0 b1)(a1 b2)(a2 b0)");
        assert!(data.classes.iter().all(|&c| c == VertexClass::Quaternion));
        assert!((0..6).all(|a| data.n(a) == 2 && data.mn(a) == 4));
        let brauer = catalog::triangle_data(false).validate().unwrap();
        assert!(brauer.classes.iter().all(|&c| c == VertexClass::Biserial));
    }

    #[test]
    fn invalid_data_is_rejected() {
        let mut d = catalog::brauer_loop_data(false);
        d.triangles = "(b g)".into();
        assert!(matches!(d.validate(), Err(HybridError::TriangleSetNotFInvariant(_))));

        let mut d = catalog::brauer_loop_data(false);
        d.f = "(a)(b g)(e)".into();
        d.arrows[1].target = "0".into();
        assert!(matches!(d.validate(), Err(HybridError::NotTwoRegular(_))));

        let mut d = catalog::brauer_loop_data(false);
        d.f = "(a b)(g)(e)".into();
        assert!(matches!(d.validate(), Err(HybridError::FPermutationMismatch(_))));

        let mut d = catalog::triangle_data(true);
        d.default_m = 1;
        assert!(matches!(d.validate(), Err(HybridError::VirtualArrowPresent(_))));

        let mut d = catalog::triangle_data(true);
        d.default_c = 2;
        assert!(matches!(
            d.validate().unwrap().build(2),
            Err(HybridError::ZeroParameter(_))
        ));
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(parse_cycles("(a b)(c)").unwrap(), vec![vec!["a", "b"], vec!["c"]]);
        assert_eq!(parse_cycles("a b").unwrap(), vec![vec!["a", "b"]]);
        assert!(parse_cycles("(a b").is_err());
        assert!(parse_cycles("").unwrap().is_empty());
    }

    #[test]
    fn toml_roundtrip() {
        let d = catalog::hybrid_loop_data();
        let text = d.to_toml();
        assert_eq!(BiserialQuiverData::from_toml(&text).unwrap(), d);
    }
}
