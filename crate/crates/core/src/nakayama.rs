//! Combinatorial homological algebra of connected Nakayama algebras.
//!
//! An algebra is given by its Kupisch series `[c_0, ..., c_{n-1}]`, where
//! `c_i` is the Loewy length of the projective `e_i A`. Arrows go
//! `i -> i + 1` and modules are right modules, so the serial module `(i, k)`
//! is `e_i A / e_i J^k`: top `S_i`, socle `S_{i+k-1}`, composition length `k`.
//! Every indecomposable is of this form, and every quantity below reduces to
//! counting paths in the cyclic or linear quiver.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Cyclic,
    Linear,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Cyclic => f.write_str("cyclic"),
            Shape::Linear => f.write_str("linear"),
        }
    }
}

impl std::str::FromStr for Shape {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "cyclic" => Ok(Shape::Cyclic),
            "linear" => Ok(Shape::Linear),
            other => Err(format!("unknown shape `{other}` (expected cyclic or linear)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KupischError {
    #[error("empty Kupisch series")]
    Empty,
    #[error("entry c_{index} = 0 is not a Loewy length")]
    NonPositiveLength { index: usize },
    #[error("monotonicity violated: c_{next} = {next_value} < c_{index} - 1 = {bound}")]
    MonotonicityViolation {
        index: usize,
        next: usize,
        next_value: usize,
        bound: usize,
    },
    #[error("quiver would be disconnected: c_{index} = {value} < 2")]
    DisconnectedQuiver { index: usize, value: usize },
    #[error("linear overflow: c_{index} = {value} exceeds n - i = {bound}")]
    LinearOverflow { index: usize, value: usize, bound: usize },
    #[error("linear series must end with c_(n-1) = 1, found {value}")]
    MissingTerminalSimple { value: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("module ({vertex}, {length}) is not a serial module of this algebra")]
    InvalidModule { vertex: usize, length: usize },
    #[error("algebra is not self-injective (needs a cyclic constant Kupisch series)")]
    NotSelfInjective,
    #[error("module is projective")]
    ProjectiveInput,
}

/// A connected Nakayama algebra, validated on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawNakayama", into = "RawNakayama")]
pub struct NakayamaAlgebra {
    shape: Shape,
    kupisch: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct RawNakayama {
    shape: Shape,
    kupisch: Vec<usize>,
}

impl TryFrom<RawNakayama> for NakayamaAlgebra {
    type Error = KupischError;

    fn try_from(raw: RawNakayama) -> Result<Self, Self::Error> {
        validate_kupisch(&raw.kupisch, raw.shape)
    }
}

impl From<NakayamaAlgebra> for RawNakayama {
    fn from(a: NakayamaAlgebra) -> Self {
        RawNakayama {
            shape: a.shape,
            kupisch: a.kupisch,
        }
    }
}

impl fmt::Display for NakayamaAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let series: Vec<String> = self.kupisch.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] {}", series.join(","), self.shape)
    }
}

/// The serial module `e_i A / e_i J^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SerialModule {
    pub vertex: usize,
    pub length: usize,
}

impl SerialModule {
    pub fn new(vertex: usize, length: usize) -> Self {
        SerialModule { vertex, length }
    }
}

impl fmt::Display for SerialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.vertex, self.length)
    }
}

/// A homological dimension, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl Dimension {
    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalReport {
    pub module: SerialModule,
    pub proj_dim: Dimension,
    pub inj_dim: Dimension,
    pub rigid: bool,
    /// `ext_dims[j]` is `dim Ext^{j+1}(M, M)`.
    pub ext_dims: Vec<usize>,
}

/// Validates a Kupisch series. Idempotent: a validated algebra revalidates
/// to itself.
pub fn validate_kupisch(series: &[usize], shape: Shape) -> Result<NakayamaAlgebra, KupischError> {
    let n = series.len();
    if n == 0 {
        return Err(KupischError::Empty);
    }
    if let Some(index) = series.iter().position(|&c| c == 0) {
        return Err(KupischError::NonPositiveLength { index });
    }
    match shape {
        Shape::Cyclic => {
            if n >= 2 {
                if let Some(index) = series.iter().position(|&c| c < 2) {
                    return Err(KupischError::DisconnectedQuiver {
                        index,
                        value: series[index],
                    });
                }
            }
            for index in 0..n {
                let next = (index + 1) % n;
                if series[next] + 1 < series[index] {
                    return Err(KupischError::MonotonicityViolation {
                        index,
                        next,
                        next_value: series[next],
                        bound: series[index] - 1,
                    });
                }
            }
        }
        Shape::Linear => {
            for index in 0..n - 1 {
                let value = series[index];
                if value < 2 {
                    return Err(KupischError::DisconnectedQuiver { index, value });
                }
                if value > n - index {
                    return Err(KupischError::LinearOverflow {
                        index,
                        value,
                        bound: n - index,
                    });
                }
            }
            if series[n - 1] != 1 {
                return Err(KupischError::MissingTerminalSimple { value: series[n - 1] });
            }
            for index in 0..n - 1 {
                if series[index + 1] + 1 < series[index] {
                    return Err(KupischError::MonotonicityViolation {
                        index,
                        next: index + 1,
                        next_value: series[index + 1],
                        bound: series[index] - 1,
                    });
                }
            }
        }
    }
    Ok(NakayamaAlgebra {
        shape,
        kupisch: series.to_vec(),
    })
}

impl NakayamaAlgebra {
    pub fn new(series: &[usize], shape: Shape) -> Result<Self, KupischError> {
        validate_kupisch(series, shape)
    }

    pub fn cyclic(series: &[usize]) -> Result<Self, KupischError> {
        validate_kupisch(series, Shape::Cyclic)
    }

    pub fn linear(series: &[usize]) -> Result<Self, KupischError> {
        validate_kupisch(series, Shape::Linear)
    }

    /// The series `[n, 2n-1, 2n-2, ..., n+1]`: finite global dimension with
    /// the largest possible Loewy length `2n - 1`.
    pub fn extremal(n: usize) -> Self {
        assert!(n >= 1);
        let mut series = vec![n];
        series.extend((n + 1..2 * n).rev());
        NakayamaAlgebra::cyclic(&series).expect("extremal series is valid")
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn kupisch(&self) -> &[usize] {
        &self.kupisch
    }

    pub fn n(&self) -> usize {
        self.kupisch.len()
    }

    /// Total dimension of the algebra, `sum c_i`.
    pub fn dimension(&self) -> usize {
        self.kupisch.iter().sum()
    }

    pub fn loewy_length(&self) -> usize {
        *self.kupisch.iter().max().expect("nonempty")
    }

    /// `c_i` with the index read modulo `n` (cyclic) or `0` outside the
    /// quiver (linear).
    pub fn c(&self, i: i64) -> usize {
        let n = self.n() as i64;
        match self.shape {
            Shape::Cyclic => self.kupisch[i.rem_euclid(n) as usize],
            Shape::Linear => {
                if (0..n).contains(&i) {
                    self.kupisch[i as usize]
                } else {
                    0
                }
            }
        }
    }

    pub fn is_self_injective(&self) -> bool {
        self.shape == Shape::Cyclic && self.kupisch.iter().all(|&c| c == self.kupisch[0])
    }

    pub fn contains(&self, m: SerialModule) -> bool {
        let n = self.n();
        if m.vertex >= n || m.length == 0 || m.length > self.kupisch[m.vertex] {
            return false;
        }
        match self.shape {
            Shape::Cyclic => true,
            Shape::Linear => m.vertex + m.length <= n,
        }
    }

    pub fn check(&self, m: SerialModule) -> Result<SerialModule, ModuleError> {
        if self.contains(m) {
            Ok(m)
        } else {
            Err(ModuleError::InvalidModule {
                vertex: m.vertex,
                length: m.length,
            })
        }
    }

    pub fn is_projective(&self, m: SerialModule) -> bool {
        m.length == self.kupisch[m.vertex]
    }

    pub fn projective(&self, vertex: usize) -> SerialModule {
        SerialModule::new(vertex, self.kupisch[vertex])
    }

    pub fn simple(&self, vertex: usize) -> SerialModule {
        SerialModule::new(vertex, 1)
    }

    /// All indecomposable modules, ordered by vertex then length.
    pub fn modules(&self) -> Vec<SerialModule> {
        (0..self.n())
            .flat_map(|i| (1..=self.kupisch[i]).map(move |k| SerialModule::new(i, k)))
            .collect()
    }

    fn wrap(&self, v: i64) -> usize {
        match self.shape {
            Shape::Cyclic => v.rem_euclid(self.n() as i64) as usize,
            Shape::Linear => {
                assert!((0..self.n() as i64).contains(&v), "vertex {v} outside linear quiver");
                v as usize
            }
        }
    }

    /// Whether the quiver has a path of length `d` from `from` to `to`.
    pub fn path_exists(&self, from: usize, to: usize, d: usize) -> bool {
        match self.shape {
            Shape::Cyclic => (from + d) % self.n() == to,
            Shape::Linear => from + d == to,
        }
    }

    /// The first syzygy, or `None` when `m` is projective.
    pub fn syzygy(&self, m: SerialModule) -> Option<SerialModule> {
        let c = self.kupisch[m.vertex];
        if m.length == c {
            return None;
        }
        let top = self.wrap(m.vertex as i64 + m.length as i64);
        let omega = SerialModule::new(top, c - m.length);
        assert!(
            omega.length <= self.kupisch[top],
            "syzygy {omega} of {m} overflows c_{top}; Kupisch series is not monotone"
        );
        Some(omega)
    }

    pub fn syzygy_power(&self, m: SerialModule, times: usize) -> Option<SerialModule> {
        let mut cur = m;
        for _ in 0..times {
            cur = self.syzygy(cur)?;
        }
        Some(cur)
    }

    /// `dim Hom(e_iA/e_iJ^k, e_jA/e_jJ^l)`: the number of path lengths `d`
    /// with `max(0, l-k) <= d <= l-1` admitting a path from `j` to `i`.
    pub fn hom_dim(&self, m: SerialModule, n: SerialModule) -> usize {
        let lo = n.length.saturating_sub(m.length);
        (lo..n.length)
            .filter(|&d| self.path_exists(n.vertex, m.vertex, d))
            .count()
    }

    /// `dim Ext^1(M, N)` from `0 -> Hom(M,N) -> Hom(P(M),N) -> Hom(ΩM,N) -> Ext^1(M,N) -> 0`.
    pub fn ext1_dim(&self, m: SerialModule, n: SerialModule) -> usize {
        let Some(omega) = self.syzygy(m) else {
            return 0;
        };
        let through_omega = self.hom_dim(omega, n);
        let dim = through_omega + self.hom_dim(m, n) - self.hom_dim(self.projective(m.vertex), n);
        if m.length >= n.length {
            assert_eq!(
                dim, through_omega,
                "Ext^1{m}{n} disagrees with Hom(ΩM, N) although dim M >= dim N"
            );
        }
        dim
    }

    /// `dim Ext^i(M, N)` via `Ext^i(M,N) = Ext^1(Ω^{i-1} M, N)`.
    pub fn ext_dim(&self, m: SerialModule, n: SerialModule, i: usize) -> usize {
        assert!(i >= 1, "Ext degree must be positive");
        match self.syzygy_power(m, i - 1) {
            Some(x) => self.ext1_dim(x, n),
            None => 0,
        }
    }

    /// Rigidity from the interval criterion: `(i, k)` over a cyclic algebra
    /// with `n` vertices is non-rigid exactly when `n <= k <= c_i - n`.
    /// Every module over a linear Nakayama algebra is rigid.
    pub fn is_rigid(&self, m: SerialModule) -> bool {
        let n = self.n();
        let rigid = match self.shape {
            Shape::Cyclic => {
                let c = self.kupisch[m.vertex];
                !(n <= m.length && m.length + n <= c)
            }
            Shape::Linear => true,
        };
        assert_eq!(
            rigid,
            self.ext1_dim(m, m) == 0,
            "rigidity criterion disagrees with Ext^1 for {m} over {self}"
        );
        rigid
    }

    /// Projective dimension by iterating Ω; a repeated module means an
    /// infinite resolution.
    pub fn proj_dim(&self, m: SerialModule) -> Dimension {
        let mut seen = HashSet::new();
        let mut cur = m;
        let mut steps = 0;
        loop {
            if !seen.insert(cur) {
                return Dimension::Infinite;
            }
            match self.syzygy(cur) {
                None => return Dimension::Finite(steps),
                Some(next) => {
                    cur = next;
                    steps += 1;
                }
            }
        }
    }

    pub fn inj_dim(&self, m: SerialModule) -> Dimension {
        let op = self.opposite();
        op.proj_dim(self.dual_module(m))
    }

    pub fn global_dim(&self) -> Dimension {
        self.modules()
            .into_iter()
            .map(|m| self.proj_dim(m))
            .max()
            .unwrap_or(Dimension::Finite(0))
    }

    /// The vertex relabelling that turns the reversed quiver back into one
    /// with arrows `v -> v + 1`.
    pub fn opposite_vertex(&self, v: usize) -> usize {
        let n = self.n();
        match self.shape {
            Shape::Cyclic => (n - v % n) % n,
            Shape::Linear => n - 1 - v,
        }
    }

    /// Kupisch series of `A^op`. The left projective `A e_j` is uniserial
    /// with length equal to the first `d` such that the path of length `d`
    /// ending at `j` vanishes, i.e. `c_{j-d} <= d`.
    pub fn opposite(&self) -> NakayamaAlgebra {
        let n = self.n();
        let mut series = vec![0; n];
        for j in 0..n {
            let len = (0..)
                .find(|&d: &usize| self.c(j as i64 - d as i64) <= d)
                .expect("a vanishing path always exists");
            series[self.opposite_vertex(j)] = len;
        }
        let op = validate_kupisch(&series, self.shape).expect("opposite of a Nakayama algebra is Nakayama");
        debug_assert_eq!(op.dimension(), self.dimension());
        op
    }

    /// `D(M)` as a serial module over `A^op`: same length, top at the image
    /// of the socle vertex of `M`.
    pub fn dual_module(&self, m: SerialModule) -> SerialModule {
        let socle = self.wrap(m.vertex as i64 + m.length as i64 - 1);
        SerialModule::new(self.opposite_vertex(socle), m.length)
    }

    /// Least `m >= 1` with `Ω^m M = M`, over a self-injective algebra.
    pub fn omega_period(&self, m: SerialModule) -> Result<usize, ModuleError> {
        if !self.is_self_injective() {
            return Err(ModuleError::NotSelfInjective);
        }
        if self.is_projective(m) {
            return Err(ModuleError::ProjectiveInput);
        }
        let mut cur = m;
        for step in 1..=self.dimension() {
            cur = self
                .syzygy(cur)
                .expect("syzygies of non-projectives stay non-projective");
            if cur == m {
                return Ok(step);
            }
        }
        unreachable!("Ω permutes the finitely many non-projective modules")
    }

    /// Stable (Tate) `dim Ext^i(N, N)` for any integer `i`, using
    /// Ω-periodicity to move non-positive degrees into positive ones.
    pub fn tate_ext_dim(&self, n: SerialModule, i: i64) -> Result<usize, ModuleError> {
        let period = self.omega_period(n)? as i64;
        if i >= 1 {
            return Ok(self.ext_dim(n, n, i as usize));
        }
        let mut l = (i - 1).rem_euclid(period);
        if l == 0 {
            l = period;
        }
        let shifted = self
            .syzygy_power(n, l as usize)
            .expect("periodic module has nonzero syzygies");
        Ok(self.ext1_dim(shifted, n))
    }

    pub fn report(&self, m: SerialModule, depth: usize) -> HomologicalReport {
        HomologicalReport {
            module: m,
            proj_dim: self.proj_dim(m),
            inj_dim: self.inj_dim(m),
            rigid: self.is_rigid(m),
            ext_dims: (1..=depth).map(|i| self.ext_dim(m, m, i)).collect(),
        }
    }

    /// The distinct modules `Ω^j M`, `j >= 0`, in order of first
    /// appearance, and whether the sequence cycles (as opposed to reaching 0).
    pub fn syzygy_orbit(&self, m: SerialModule) -> (Vec<SerialModule>, bool) {
        let mut orbit = vec![m];
        let mut cur = m;
        loop {
            match self.syzygy(cur) {
                None => return (orbit, false),
                Some(next) => {
                    if orbit.contains(&next) {
                        return (orbit, true);
                    }
                    orbit.push(next);
                    cur = next;
                }
            }
        }
    }

    /// The lexicographically least rotation of a cyclic series.
    pub fn canonical_rotation(series: &[usize]) -> Vec<usize> {
        let n = series.len();
        (0..n)
            .map(|r| (0..n).map(|i| series[(i + r) % n]).collect::<Vec<_>>())
            .min()
            .unwrap_or_default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(i: usize, k: usize) -> SerialModule {
        SerialModule::new(i, k)
    }

    #[test]
    fn validation_examples() {
        assert_eq!(NakayamaAlgebra::cyclic(&[4, 4]).unwrap().n(), 2);
        assert!(NakayamaAlgebra::cyclic(&[2, 3]).is_ok());
        assert!(matches!(
            NakayamaAlgebra::cyclic(&[4, 2]),
            Err(KupischError::MonotonicityViolation { index: 0, .. })
        ));
        assert!(matches!(
            NakayamaAlgebra::cyclic(&[1, 3]),
            Err(KupischError::DisconnectedQuiver { index: 0, .. })
        ));
        assert!(matches!(
            NakayamaAlgebra::linear(&[3, 1]),
            Err(KupischError::LinearOverflow { index: 0, .. })
        ));
        assert!(matches!(
            NakayamaAlgebra::linear(&[2, 2]),
            Err(KupischError::MissingTerminalSimple { value: 2 })
        ));
        assert!(matches!(
            NakayamaAlgebra::linear(&[1, 1]),
            Err(KupischError::DisconnectedQuiver { .. })
        ));
        assert!(NakayamaAlgebra::cyclic(&[1]).is_ok());
        assert!(NakayamaAlgebra::cyclic(&[]).is_err());
        let a = NakayamaAlgebra::cyclic(&[3, 5, 4]).unwrap();
        assert_eq!(validate_kupisch(a.kupisch(), a.shape()).unwrap(), a);
    }

    #[test]
    fn syzygy_examples() {
        let a = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        assert_eq!(a.syzygy(m(0, 2)), Some(m(0, 2)));
        assert_eq!(a.syzygy(m(0, 4)), None);
        let b = NakayamaAlgebra::cyclic(&[2, 3]).unwrap();
        assert_eq!(b.syzygy(m(1, 1)), Some(m(0, 2)));
        assert!(b.is_projective(m(0, 2)));
    }

    #[test]
    fn hom_examples() {
        let a = NakayamaAlgebra::cyclic(&[3, 3]).unwrap();
        assert_eq!(a.hom_dim(m(0, 2), m(1, 2)), 1);
        let b = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        assert_eq!(b.hom_dim(m(0, 4), m(0, 2)), 1);
        for alg in [a, b] {
            for i in 0..alg.n() {
                assert_eq!(alg.hom_dim(m(i, 1), m(i, 1)), 1);
            }
        }
    }

    #[test]
    fn ext_examples() {
        let a = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        assert_eq!(a.ext1_dim(m(0, 2), m(0, 2)), 1);
        assert_eq!(a.ext1_dim(m(0, 1), m(0, 1)), 0);
        assert_eq!(a.ext_dim(m(0, 2), m(0, 2), 7), 1);
        let b = NakayamaAlgebra::cyclic(&[2, 3]).unwrap();
        for x in b.modules() {
            assert_eq!(b.ext1_dim(x, x), 0);
        }
        assert_eq!(b.ext_dim(m(0, 1), m(0, 1), 3), 0);
        for x in a.modules().into_iter().filter(|&x| a.is_projective(x)) {
            for y in a.modules() {
                for i in 1..5 {
                    assert_eq!(a.ext_dim(x, y, i), 0);
                }
            }
        }
    }

    #[test]
    fn rigidity_examples() {
        let a = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        assert!(!a.is_rigid(m(0, 2)));
        assert!(a.is_rigid(m(0, 1)));
        let b = NakayamaAlgebra::cyclic(&[3, 3]).unwrap();
        assert!(b.modules().into_iter().all(|x| b.is_rigid(x)));
    }

    #[test]
    fn projective_dimension_examples() {
        let b = NakayamaAlgebra::cyclic(&[2, 3]).unwrap();
        assert_eq!(b.proj_dim(m(0, 1)), Dimension::Finite(2));
        assert_eq!(b.proj_dim(m(1, 1)), Dimension::Finite(1));
        assert_eq!(b.global_dim(), Dimension::Finite(2));
        let a = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        assert_eq!(a.proj_dim(m(0, 2)), Dimension::Infinite);
        assert_eq!(a.proj_dim(m(1, 4)), Dimension::Finite(0));
    }

    #[test]
    fn opposite_examples() {
        let a = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        assert_eq!(a.opposite(), a);
        let b = NakayamaAlgebra::cyclic(&[2, 3]).unwrap();
        assert_eq!(b.opposite().dimension(), 5);
        assert_eq!(b.opposite().kupisch(), &[2, 3]);
        let local = NakayamaAlgebra::cyclic(&[5]).unwrap();
        assert_eq!(local.opposite(), local);
        let c = NakayamaAlgebra::cyclic(&[3, 5, 4]).unwrap();
        assert_eq!(c.opposite().opposite(), c);
        let lin = NakayamaAlgebra::linear(&[3, 2, 2, 1]).unwrap();
        assert_eq!(lin.opposite().opposite(), lin);
        assert_eq!(lin.opposite().dimension(), lin.dimension());
    }

    #[test]
    fn dual_examples() {
        let a = NakayamaAlgebra::cyclic(&[3, 4, 4]).unwrap();
        for i in 0..3 {
            assert_eq!(a.dual_module(m(i, 1)), m(a.opposite_vertex(i), 1));
        }
        let b = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        let d = b.dual_module(m(0, 2));
        assert_eq!(d.length, 2);
        assert_eq!(b.opposite().ext1_dim(d, d), 1);
        // duals of projectives are projective over the opposite of a self-injective algebra
        assert!(b.opposite().is_projective(b.dual_module(m(1, 4))));
    }

    #[test]
    fn periods_and_tate() {
        let a = NakayamaAlgebra::cyclic(&[4, 4]).unwrap();
        assert_eq!(a.omega_period(m(0, 2)), Ok(1));
        // (0,1) -> (1,3) -> (0,1)
        assert_eq!(a.omega_period(m(0, 1)), Ok(2));
        assert_eq!(a.tate_ext_dim(m(0, 2), -3), Ok(1));
        assert_eq!(a.tate_ext_dim(m(0, 2), 0), Ok(1));
        let b = NakayamaAlgebra::cyclic(&[3, 3]).unwrap();
        assert_eq!(b.omega_period(m(0, 2)), Ok(4));
        for i in -6..6 {
            assert!(b.tate_ext_dim(m(0, 1), i).unwrap() >= b.ext1_dim(m(0, 1), m(0, 1)));
        }
        assert_eq!(a.omega_period(m(0, 4)), Err(ModuleError::ProjectiveInput));
        let c = NakayamaAlgebra::cyclic(&[2, 3]).unwrap();
        assert_eq!(c.omega_period(m(0, 1)), Err(ModuleError::NotSelfInjective));
    }

    #[test]
    fn extremal_series() {
        assert_eq!(NakayamaAlgebra::extremal(2).kupisch(), &[2, 3]);
        assert_eq!(NakayamaAlgebra::extremal(3).kupisch(), &[3, 5, 4]);
        assert_eq!(NakayamaAlgebra::extremal(4).kupisch(), &[4, 7, 6, 5]);
    }

    #[test]
    fn serde_shape() {
        let a = NakayamaAlgebra::cyclic(&[2, 3]).unwrap();
        let js = serde_json::to_string(&a).unwrap();
        assert_eq!(js, r#"{"shape":"cyclic","kupisch":[2,3]}"#);
        let back: NakayamaAlgebra = serde_json::from_str(&js).unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<NakayamaAlgebra>(r#"{"shape":"cyclic","kupisch":[4,2]}"#).is_err());
    }
}
