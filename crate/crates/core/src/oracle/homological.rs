//! Projective covers, syzygies, Ext, isomorphism and periodicity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{build_algebra, Algebra, Element};
use super::module::{hom_dim, hom_space, Hom, QuiverModule, Submodule, VertexElement};
use super::presentation::BoundQuiverPresentation;
use super::OracleError;
use crate::linalg::{Fp, Matrix};

/// Search spaces up to this size are enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;
/// Random samples tried before any exhaustive search.
pub const RANDOM_SAMPLES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IsoResult {
    Isomorphic,
    NotIsomorphic,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decomposition {
    Indecomposable,
    Decomposable,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodResult {
    Period(usize),
    /// No `m <= bound` with `Ω^m M ≅ M`.
    NoneFound,
    /// Some iso test was inconclusive, so the least period is not certified.
    NotCertified,
}

impl PeriodResult {
    pub fn period(self) -> Option<usize> {
        match self {
            PeriodResult::Period(m) => Some(m),
            _ => None,
        }
    }
}

/// A minimal projective cover `P -> M`.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: QuiverModule,
    pub map: Hom,
    /// Multiplicity of each `P_v` in the cover, i.e. `dim top(M)_v`.
    pub multiplicities: Vec<usize>,
}

/// Syzygies `Ω^0 M, Ω^1 M, ...` with the cover multiplicities at each step.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub syzygies: Vec<QuiverModule>,
    pub multiplicities: Vec<Vec<usize>>,
}

impl Resolution {
    /// `Ω^i M`, or `None` past the computed depth.
    pub fn syzygy(&self, i: usize) -> Option<&QuiverModule> {
        self.syzygies.get(i)
    }
}

/// An algebra together with its indecomposable projectives.
#[derive(Clone, Debug)]
pub struct Oracle {
    alg: Algebra,
    projectives: Vec<QuiverModule>,
}

impl Oracle {
    pub fn new(alg: Algebra) -> Self {
        let projectives = (0..alg.quiver().vertex_count())
            .map(|v| QuiverModule::projective(&alg, v))
            .collect();
        Oracle { alg, projectives }
    }

    pub fn build(pres: &BoundQuiverPresentation) -> Result<Self, OracleError> {
        Ok(Oracle::new(build_algebra(pres)?))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> Fp {
        self.alg.field()
    }

    pub fn vertex_count(&self) -> usize {
        self.projectives.len()
    }

    pub fn projective(&self, v: usize) -> &QuiverModule {
        &self.projectives[v]
    }

    pub fn simple(&self, v: usize) -> QuiverModule {
        QuiverModule::simple(self.alg.quiver().clone(), self.field(), v)
    }

    pub fn zero_module(&self) -> QuiverModule {
        QuiverModule::zero(self.alg.quiver().clone(), self.field())
    }

    /// The right ideal `xΛ` for `x ∈ e_sΛ`, as a submodule of `P_s`.
    pub fn element_submodule(&self, s: usize, x: &Element) -> Submodule {
        let gens = QuiverModule::projective_element(&self.alg, s, x);
        self.projectives[s].generate(&gens)
    }

    pub fn element_module(&self, s: usize, x: &Element) -> QuiverModule {
        self.element_submodule(s, x).realize(&self.projectives[s])
    }

    /// `αΛ ⊆ P_{s(α)}`.
    pub fn arrow_module(&self, arrow: usize) -> QuiverModule {
        let q = self.alg.quiver();
        let a = &q.arrows[arrow];
        let path = super::presentation::Path::new(q, a.source, vec![arrow]).expect("single arrow");
        let x = self.alg.element(&super::presentation::Combination::monomial(path));
        self.element_module(a.source, &x)
    }

    /// `P_{s_1} ⊕ ... ⊕ P_{s_r}`.
    pub fn free_module(&self, summands: &[usize]) -> QuiverModule {
        let mut acc = self.zero_module();
        for &s in summands {
            acc = acc.direct_sum(&self.projectives[s]);
        }
        acc
    }

    /// Splits a tuple of algebra elements (one per summand, each in
    /// `e_{s_j}Λ`) into vertex components of the free module.
    pub fn free_element(&self, summands: &[usize], parts: &[Element]) -> Vec<VertexElement> {
        assert_eq!(summands.len(), parts.len());
        let nv = self.vertex_count();
        let mut out: Vec<Vec<u32>> = vec![Vec::new(); nv];
        for (&s, x) in summands.iter().zip(parts) {
            let comps = QuiverModule::projective_element(&self.alg, s, x);
            for w in 0..nv {
                let d = self.projectives[s].dims()[w];
                match comps.iter().find(|(v, _)| *v == w) {
                    Some((_, vec)) => out[w].extend_from_slice(vec),
                    None => out[w].extend(std::iter::repeat_n(0, d)),
                }
            }
        }
        out.into_iter()
            .enumerate()
            .filter(|(_, v)| v.iter().any(|&c| c != 0))
            .collect()
    }

    /// Realizes a named module definition of the presentation.
    pub fn defined_module(&self, name: &str) -> Result<QuiverModule, OracleError> {
        let def = self
            .alg
            .presentation
            .modules
            .iter()
            .find(|d| d.name == name)
            .ok_or_else(|| OracleError::UnknownModule(name.to_string()))?;
        let f = self.field();
        let free = self.free_module(&def.summands);
        let collect = |list: &Vec<Vec<super::presentation::Combination>>| -> Vec<VertexElement> {
            list.iter()
                .flat_map(|g| {
                    let parts: Vec<Element> = g.iter().map(|c| self.alg.element(c)).collect();
                    self.free_element(&def.summands, &parts)
                })
                .collect()
        };
        let gens = free.generate(&collect(&def.generators));
        if def.modulo.is_empty() {
            return Ok(gens.realize(&free));
        }
        let modulo = free.generate(&collect(&def.modulo));
        let total = gens.sum(&modulo, f);
        let inner = modulo.within(&total, f);
        Ok(inner.quotient(&total.realize(&free)).0)
    }

    /// Left multiplication by `x ∈ e_vΛe_w`, a homomorphism `P_w -> P_v`.
    pub fn left_multiplication(&self, v: usize, w: usize, x: &Element) -> Hom {
        let alg = &self.alg;
        let src = alg.projective_basis(w);
        let dst = alg.projective_basis(v);
        let maps = src
            .iter()
            .zip(&dst)
            .map(|(sids, dids)| {
                let mut m = Matrix::zeros(sids.len(), dids.len());
                for (r, &b) in sids.iter().enumerate() {
                    let mut e = vec![0; alg.dimension()];
                    e[b] = 1;
                    let prod = alg.multiply(x, &e);
                    for (c, &d) in dids.iter().enumerate() {
                        m.set(r, c, prod[d]);
                    }
                    debug_assert!(prod.iter().enumerate().all(|(i, &c)| c == 0 || dids.contains(&i)));
                }
                m
            })
            .collect();
        Hom { maps }
    }

    pub fn projective_cover(&self, m: &QuiverModule) -> ProjectiveCover {
        let f = self.field();
        let q = self.alg.quiver().clone();
        let nv = self.vertex_count();
        let rad = m.radical();
        let mut generators: Vec<(usize, Vec<u32>)> = Vec::new();
        let mut multiplicities = vec![0; nv];
        for v in 0..nv {
            let comp = rad.space(v).complement_basis(f);
            multiplicities[v] = comp.rows();
            for r in 0..comp.rows() {
                generators.push((v, comp.row(r).to_vec()));
            }
        }
        let mut module = self.zero_module();
        let mut maps: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::zeros(0, d)).collect();
        for (v, g) in &generators {
            let p = &self.projectives[*v];
            module = module.direct_sum(p);
            let by_end = self.alg.projective_basis(*v);
            for (w, ids) in by_end.iter().enumerate() {
                for &b in ids {
                    let mut x = g.clone();
                    for &a in &self.alg.basis()[b].arrows {
                        x = m.action(a).apply(&x, f);
                    }
                    maps[w].push_row(&x);
                }
            }
        }
        debug_assert_eq!(q.vertex_count(), nv);
        ProjectiveCover {
            module,
            map: Hom { maps },
            multiplicities,
        }
    }

    pub fn syzygy(&self, m: &QuiverModule) -> QuiverModule {
        let cover = self.projective_cover(m);
        cover.map.kernel(self.field()).realize(&cover.module)
    }

    pub fn is_projective(&self, m: &QuiverModule) -> bool {
        self.syzygy(m).is_zero()
    }

    /// Syzygies up to `Ω^depth M`, stopping early once one vanishes.
    pub fn resolution(&self, m: &QuiverModule, depth: usize) -> Resolution {
        let mut syzygies = vec![m.clone()];
        let mut multiplicities = Vec::new();
        for _ in 0..depth {
            let cur = syzygies.last().expect("nonempty");
            if cur.is_zero() {
                break;
            }
            let cover = self.projective_cover(cur);
            let next = cover.map.kernel(self.field()).realize(&cover.module);
            multiplicities.push(cover.multiplicities);
            syzygies.push(next);
        }
        Resolution {
            syzygies,
            multiplicities,
        }
    }

    /// `dim Hom(P, N)` for `P = ⊕ P_v^{mult_v}`.
    fn hom_from_projective(mult: &[usize], n: &QuiverModule) -> usize {
        mult.iter().zip(n.dims()).map(|(m, d)| m * d).sum()
    }

    /// `dim Ext^i(M, N)` from an already computed resolution of `M`.
    pub fn ext_from_resolution(res: &Resolution, n: &QuiverModule, i: usize) -> usize {
        assert!(i >= 1, "Ext degree starts at 1");
        let prev = match res.syzygy(i - 1) {
            Some(p) if !p.is_zero() => p,
            Some(_) => return 0,
            None => panic!("resolution too short for Ext^{i}"),
        };
        let cur = res.syzygy(i).expect("resolution too short");
        let via_cover = Self::hom_from_projective(&res.multiplicities[i - 1], n);
        hom_dim(cur, n) + hom_dim(prev, n) - via_cover
    }

    pub fn ext_dim(&self, m: &QuiverModule, n: &QuiverModule, i: usize) -> usize {
        let res = self.resolution(m, i);
        if res.syzygies.len() <= i {
            return 0;
        }
        Self::ext_from_resolution(&res, n, i)
    }

    /// `dim Ext^i(M, S_v)` read off as the multiplicity of `S_v` in `top Ω^i M`.
    pub fn ext_to_simple(&self, m: &QuiverModule, i: usize, v: usize) -> usize {
        assert!(i >= 1, "Ext degree starts at 1");
        let res = self.resolution(m, i);
        let by_top = match res.syzygy(i) {
            Some(om) => om.top_dims()[v],
            None => 0,
        };
        debug_assert_eq!(by_top, self.ext_dim(m, &self.simple(v), i));
        by_top
    }

    /// Projective dimension if it is at most `bound`.
    pub fn proj_dim(&self, m: &QuiverModule, bound: usize) -> Option<usize> {
        if m.is_zero() {
            return Some(0);
        }
        let res = self.resolution(m, bound + 1);
        res.syzygies.iter().position(QuiverModule::is_zero).map(|k| k - 1)
    }

    /// Least `m <= bound` with `Ω^m M ≅ M`.
    pub fn omega_period(&self, m: &QuiverModule, bound: usize, seed: u64) -> Result<PeriodResult, OracleError> {
        if m.is_zero() || self.is_projective(m) {
            return Err(OracleError::ProjectiveInput);
        }
        let mut uncertain = false;
        let mut cur = m.clone();
        for k in 1..=bound {
            cur = self.syzygy(&cur);
            if cur.is_zero() {
                return Ok(if uncertain {
                    PeriodResult::NotCertified
                } else {
                    PeriodResult::NoneFound
                });
            }
            match iso_test(&cur, m, seed.wrapping_add(k as u64)) {
                IsoResult::Isomorphic => {
                    return Ok(if uncertain {
                        PeriodResult::NotCertified
                    } else {
                        PeriodResult::Period(k)
                    });
                }
                IsoResult::Undetermined => uncertain = true,
                IsoResult::NotIsomorphic => {}
            }
        }
        Ok(if uncertain {
            PeriodResult::NotCertified
        } else {
            PeriodResult::NoneFound
        })
    }

    /// Every indecomposable projective has a simple socle at its own vertex.
    pub fn is_weakly_symmetric(&self) -> bool {
        self.projectives.iter().enumerate().all(|(v, p)| {
            let soc = p.socle_dims();
            soc.iter().enumerate().all(|(w, &d)| d == usize::from(w == v))
        })
    }
}

/// Whether `0 -> U -> M -> M/U -> 0` has `top M = top U ⊕ top(M/U)`.
pub fn is_top_good(m: &QuiverModule, sub: &Submodule) -> bool {
    let top_m = m.top_dims();
    let top_sub = sub.realize(m).top_dims();
    let top_quot = sub.quotient(m).0.top_dims();
    top_m
        .iter()
        .zip(top_sub.iter().zip(&top_quot))
        .all(|(t, (a, b))| *t == a + b)
}

fn search_size(p: u32, r: usize) -> Option<u64> {
    let mut total: u64 = 1;
    for _ in 0..r {
        total = total.checked_mul(u64::from(p))?;
        if total > EXHAUSTIVE_LIMIT {
            return None;
        }
    }
    Some(total)
}

fn random_coeffs(rng: &mut ChaCha8Rng, p: u32, r: usize) -> Vec<u32> {
    (0..r).map(|_| rng.random_range(0..p)).collect()
}

/// Calls `visit` on every coefficient vector in `F_p^r` until it returns true.
fn enumerate_coeffs(p: u32, r: usize, mut visit: impl FnMut(&[u32]) -> bool) -> bool {
    let mut c = vec![0u32; r];
    loop {
        if visit(&c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == r {
                return false;
            }
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            i += 1;
        }
    }
}

/// Invertibility of a combination, vertex by vertex with early exit.
fn combination_invertible(basis: &[Hom], coeffs: &[u32], order: &[usize], f: Fp) -> bool {
    order.iter().all(|&v| {
        let d = basis[0].maps[v].rows();
        let mut acc = Matrix::zeros(d, d);
        for (h, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&h.maps[v].scale(c, f), f);
            }
        }
        acc.is_invertible(f)
    })
}

/// Searches `Hom(M, N)` for an isomorphism.
pub fn iso_test(m: &QuiverModule, n: &QuiverModule, seed: u64) -> IsoResult {
    if m.dims() != n.dims() {
        return IsoResult::NotIsomorphic;
    }
    if m.is_zero() {
        return IsoResult::Isomorphic;
    }
    if m == n {
        return IsoResult::Isomorphic;
    }
    if m.top_dims() != n.top_dims() || m.socle_dims() != n.socle_dims() {
        return IsoResult::NotIsomorphic;
    }
    let basis = hom_space(m, n);
    let r = basis.len();
    if r == 0 || hom_dim(n, m) != r || hom_dim(m, m) != r || hom_dim(n, n) != r {
        return IsoResult::NotIsomorphic;
    }
    let f = m.field();
    let p = f.p();
    // check the largest vertex spaces first: they fail most often
    let mut order: Vec<usize> = (0..m.dims().len()).filter(|&v| m.dims()[v] > 0).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(m.dims()[v]));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SAMPLES {
        let c = random_coeffs(&mut rng, p, r);
        if combination_invertible(&basis, &c, &order, f) {
            return IsoResult::Isomorphic;
        }
    }
    match search_size(p, r) {
        Some(_) => {
            if enumerate_coeffs(p, r, |c| combination_invertible(&basis, c, &order, f)) {
                IsoResult::Isomorphic
            } else {
                IsoResult::NotIsomorphic
            }
        }
        None => IsoResult::Undetermined,
    }
}

fn is_nilpotent(h: &Hom, f: Fp) -> bool {
    h.maps.iter().all(|m| {
        let mut acc = m.clone();
        for _ in 0..m.rows() {
            if acc.is_zero() {
                return true;
            }
            acc = acc.mul(m, f);
        }
        acc.is_zero()
    })
}

/// `M` is indecomposable iff `End(M)` is local, i.e. every endomorphism is
/// nilpotent or invertible. A witness of the contrary certifies a splitting
/// (by Fitting's lemma).
pub fn indecomposability(m: &QuiverModule, seed: u64) -> Decomposition {
    if m.is_zero() {
        return Decomposition::Decomposable;
    }
    let basis = hom_space(m, m);
    let r = basis.len();
    if r == 1 {
        return Decomposition::Indecomposable;
    }
    let f = m.field();
    let p = f.p();
    let splits = |c: &[u32]| {
        let h = Hom::combine(&basis, c, f);
        !is_nilpotent(&h, f) && !h.is_isomorphism(f)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SAMPLES {
        if splits(&random_coeffs(&mut rng, p, r)) {
            return Decomposition::Decomposable;
        }
    }
    match search_size(p, r) {
        Some(_) if enumerate_coeffs(p, r, splits) => Decomposition::Decomposable,
        Some(_) => Decomposition::Indecomposable,
        None => Decomposition::Undetermined,
    }
}

/// Searches for an injective homomorphism `M -> N`.
pub fn find_injective_hom(m: &QuiverModule, n: &QuiverModule, seed: u64) -> Option<Hom> {
    let basis = hom_space(m, n);
    if basis.is_empty() {
        return if m.is_zero() { Some(Hom::zero(m, n)) } else { None };
    }
    let f = m.field();
    let p = f.p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_SAMPLES {
        let h = Hom::combine(&basis, &random_coeffs(&mut rng, p, basis.len()), f);
        if h.is_injective(f) {
            return Some(h);
        }
    }
    let mut found = None;
    if search_size(p, basis.len()).is_some() {
        enumerate_coeffs(p, basis.len(), |c| {
            let h = Hom::combine(&basis, c, f);
            if h.is_injective(f) {
                found = Some(h);
                true
            } else {
                false
            }
        });
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::presentation::PresentationBuilder;

    fn klein() -> Oracle {
        let pres = PresentationBuilder::new("klein", 2, 3)
            .vertices(["0"])
            .arrow("x", "0", "0")
            .arrow("y", "0", "0")
            .zero("x x")
            .zero("y y")
            .relation(&[(1, "x y"), (1, "y x")])
            .build()
            .unwrap();
        Oracle::build(&pres).unwrap()
    }

    fn cycle_two(p: u32) -> Oracle {
        let pres = PresentationBuilder::new("cycle", p, 4)
            .vertices(["0", "1"])
            .arrow("a", "0", "1")
            .arrow("b", "1", "0")
            .zero("a b a b")
            .zero("b a b a")
            .build()
            .unwrap();
        Oracle::build(&pres).unwrap()
    }

    #[test]
    fn klein_four_syzygies_grow_linearly() {
        let o = klein();
        let s = o.simple(0);
        let res = o.resolution(&s, 6);
        for i in 1..=5 {
            assert_eq!(hom_dim(&res.syzygies[i], &s), i + 1, "degree {i}");
            assert_eq!(Oracle::ext_from_resolution(&res, &s, i), i + 1);
            assert_eq!(o.ext_to_simple(&s, i, 0), i + 1);
        }
        assert!(o.is_weakly_symmetric());
        assert_eq!(o.proj_dim(&s, 5), None);
        assert_eq!(o.proj_dim(o.projective(0), 5), Some(0));
    }

    #[test]
    fn cover_has_the_same_top() {
        let o = cycle_two(3);
        let s = o.simple(1);
        let cover = o.projective_cover(&s);
        assert_eq!(cover.multiplicities, vec![0, 1]);
        assert_eq!(cover.module.top_dims(), s.top_dims());
        assert!(cover.map.is_homomorphism(&cover.module, &s));
        assert_eq!(o.syzygy(&s).dim(), 3);
    }

    #[test]
    fn periods_on_the_symmetric_cycle() {
        let o = cycle_two(2);
        let f = o.field();
        // (0,2) = P_0 / rad^2 P_0 is its own syzygy
        let p0 = o.projective(0);
        let m = p0.radical_power(2).quotient(p0).0;
        assert_eq!(m.dim(), 2);
        assert_eq!(o.omega_period(&m, 4, 1), Ok(PeriodResult::Period(1)));
        assert_eq!(o.ext_dim(&m, &m, 7), 1);
        // (0,1): (0,1) -> (1,3) -> (0,1)
        let s = o.simple(0);
        assert_eq!(o.omega_period(&s, 6, 1), Ok(PeriodResult::Period(2)));
        assert_eq!(o.omega_period(p0, 3, 1), Err(OracleError::ProjectiveInput));
        assert_eq!(iso_test(&s, &o.simple(1), 0), IsoResult::NotIsomorphic);
        assert_eq!(iso_test(&m, &m.clone(), 0), IsoResult::Isomorphic);
        assert_eq!(indecomposability(&m, 0), Decomposition::Indecomposable);
        assert_eq!(indecomposability(&s.direct_sum(&s), 0), Decomposition::Decomposable);
        assert!(is_top_good(&m, &Submodule::zero(&m)));
        assert!(!is_top_good(&m, &m.radical()));
        let _ = f;
    }

    #[test]
    fn iso_test_sees_through_a_change_of_basis() {
        let o = cycle_two(3);
        let p = o.projective(0).clone();
        // conjugate the action by a triangular change of basis at vertex 0
        let f = o.field();
        let d0 = p.dims()[0];
        let mut t = Matrix::identity(d0);
        if d0 > 1 {
            t.set(0, 1, 2);
        }
        let mut tinv = Matrix::identity(d0);
        if d0 > 1 {
            tinv.set(0, 1, 1);
        }
        assert!(t.mul(&tinv, f) == Matrix::identity(d0));
        let q = p.quiver().clone();
        let actions = q
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let m = p.action(i).clone();
                let m = if a.source == 0 { tinv.mul(&m, f) } else { m };
                if a.target == 0 {
                    m.mul(&t, f)
                } else {
                    m
                }
            })
            .collect();
        let p2 = QuiverModule::new(q, f, p.dims().to_vec(), actions);
        assert_ne!(p, p2);
        assert_eq!(iso_test(&p, &p2, 5), IsoResult::Isomorphic);
        assert!(find_injective_hom(&o.simple(1), &p, 3).is_some());
    }

    #[test]
    fn defined_modules_and_left_multiplication() {
        let pres = PresentationBuilder::new("cycle", 2, 4)
            .vertices(["0", "1"])
            .arrow("a", "0", "1")
            .arrow("b", "1", "0")
            .zero("a b a b")
            .zero("b a b a")
            .module("aL", &["0"], &[&[&[(1, "a")]]], &[])
            .module("top", &["0"], &[&[&[(1, "")]]], &[&[&[(1, "a")]]])
            .build()
            .unwrap();
        let o = Oracle::build(&pres).unwrap();
        assert_eq!(o.defined_module("aL").unwrap(), o.arrow_module(0));
        assert_eq!(o.defined_module("top").unwrap().dims(), &[1, 0]);
        assert!(o.defined_module("nope").is_err());
        let q = o.algebra().quiver().clone();
        let a = o.algebra().element(&crate::oracle::presentation::Combination::monomial(
            q.path(&["a"]).unwrap(),
        ));
        let h = o.left_multiplication(0, 1, &a);
        assert!(h.is_homomorphism(o.projective(1), o.projective(0)));
        assert_eq!(h.image(o.field()).dim(), 3);
    }
}
