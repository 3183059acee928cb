//! Basis and multiplication table of `KQ / I` for an admissible ideal `I`.
//!
//! We work inside `KQ / J^L`, which is finite dimensional. The ideal `I` is
//! the span of all `u r v` (relations `r`, paths `u`, `v`), obtained by
//! closing the relations under left and right multiplication by arrows. The
//! closure is kept in echelon form with respect to a degree-lexicographic
//! order on paths, where a vector's leading path is its largest. Paths that
//! are not leading paths form the standard monomial basis. Since the order is
//! multiplicative, standard monomials are closed under taking subpaths.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::presentation::{BoundQuiverPresentation, Combination, Path, Quiver};
use super::OracleError;
use crate::linalg::{Fp, Matrix};

type Sparse = BTreeMap<usize, u32>;

/// Enumerates all paths of length `< bound` in degree-lexicographic order.
fn enumerate_paths(q: &Quiver, bound: usize) -> Vec<Path> {
    let mut out: Vec<Path> = (0..q.vertex_count()).map(Path::trivial).collect();
    let mut layer: Vec<Path> = out.clone();
    for _ in 1..bound {
        let mut next = Vec::new();
        for p in &layer {
            let end = p.end(q);
            for a in q.arrows_from(end) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                next.push(Path { start: p.start, arrows });
            }
        }
        next.sort_by(|a, b| a.arrows.cmp(&b.arrows));
        out.extend(next.iter().cloned());
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    out
}

struct PathSpace<'q> {
    quiver: &'q Quiver,
    bound: usize,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
}

impl<'q> PathSpace<'q> {
    fn new(quiver: &'q Quiver, bound: usize) -> Self {
        let paths = enumerate_paths(quiver, bound);
        let index = paths.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        PathSpace {
            quiver,
            bound,
            paths,
            index,
        }
    }

    fn id(&self, p: &Path) -> Option<usize> {
        if p.len() >= self.bound {
            None
        } else {
            self.index.get(p).copied()
        }
    }

    fn vector(&self, c: &Combination, f: Fp) -> Sparse {
        let mut v = Sparse::new();
        for (coeff, p) in &c.terms {
            if let Some(id) = self.id(p) {
                add_term(&mut v, id, f.from_i64(*coeff), f);
            }
        }
        v
    }

    fn multiply(&self, v: &Sparse, arrow: usize, left: bool) -> Sparse {
        let a = &self.quiver.arrows[arrow];
        let mut out = Sparse::new();
        for (&id, &c) in v {
            let p = &self.paths[id];
            let np = if left {
                if p.start != a.target {
                    continue;
                }
                let mut arrows = vec![arrow];
                arrows.extend_from_slice(&p.arrows);
                Path {
                    start: a.source,
                    arrows,
                }
            } else {
                if p.end(self.quiver) != a.source {
                    continue;
                }
                let mut arrows = p.arrows.clone();
                arrows.push(arrow);
                Path { start: p.start, arrows }
            };
            if let Some(nid) = self.id(&np) {
                out.insert(nid, c);
            }
        }
        out
    }
}

fn add_term(v: &mut Sparse, id: usize, c: u32, f: Fp) {
    if c == 0 {
        return;
    }
    let e = v.entry(id).or_insert(0);
    *e = f.add(*e, c);
    if *e == 0 {
        v.remove(&id);
    }
}

/// Echelon basis keyed by leading (largest) path id; rows are monic.
struct Echelon {
    rows: HashMap<usize, Sparse>,
}

impl Echelon {
    fn reduce(&self, mut v: Sparse, f: Fp) -> Sparse {
        loop {
            let Some((&lead, &c)) = v.iter().next_back() else {
                return v;
            };
            let Some(row) = self.rows.get(&lead) else {
                return v;
            };
            let neg = f.neg(c);
            for (&id, &x) in row {
                add_term(&mut v, id, f.mul(neg, x), f);
            }
        }
    }

    fn insert(&mut self, v: Sparse, f: Fp) {
        let (&lead, &c) = v.iter().next_back().expect("nonzero");
        let inv = f.inv(c);
        let row = v.into_iter().map(|(k, x)| (k, f.mul(x, inv))).collect();
        self.rows.insert(lead, row);
    }
}

/// An element of the algebra in the standard monomial basis.
pub type Element = Vec<u32>;

#[derive(Debug, Clone)]
pub struct Algebra {
    pub presentation: BoundQuiverPresentation,
    field: Fp,
    /// Standard monomials, in degree-lexicographic order.
    basis: Vec<Path>,
    basis_index: HashMap<Path, usize>,
    /// Normal form of every path of length `< loewy_bound` (sparse over the basis).
    normal_forms: HashMap<Path, Vec<(usize, u32)>>,
    cartan: Vec<Vec<usize>>,
}

/// Builds the algebra and checks that raising the Loewy bound by one does
/// not change its dimension.
pub fn build_algebra(pres: &BoundQuiverPresentation) -> Result<Algebra, OracleError> {
    pres.validate()?;
    let alg = build_with_bound(pres, pres.loewy_bound)?;
    let check = build_with_bound(pres, pres.loewy_bound + 1)?;
    if check.dimension() != alg.dimension() {
        return Err(OracleError::UnstableLoewyBound {
            bound: pres.loewy_bound,
            dimension: alg.dimension(),
            dimension_next: check.dimension(),
        });
    }
    Ok(alg)
}

fn build_with_bound(pres: &BoundQuiverPresentation, bound: usize) -> Result<Algebra, OracleError> {
    let f = pres.field();
    let q: &Quiver = &pres.quiver;
    let space = PathSpace::new(q, bound);
    let mut ech = Echelon { rows: HashMap::new() };
    let mut work: Vec<Sparse> = pres.relations.iter().map(|r| space.vector(r, f)).collect();
    while let Some(v) = work.pop() {
        let v = ech.reduce(v, f);
        if v.is_empty() {
            continue;
        }
        for a in 0..q.arrows.len() {
            for left in [true, false] {
                let w = space.multiply(&v, a, left);
                if !w.is_empty() {
                    work.push(w);
                }
            }
        }
        ech.insert(v, f);
    }

    let basis: Vec<Path> = (0..space.paths.len())
        .filter(|id| !ech.rows.contains_key(id))
        .map(|id| space.paths[id].clone())
        .collect();
    let basis_index: HashMap<Path, usize> = basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();

    // Leading paths in increasing order: each reduces to strictly smaller paths,
    // whose normal forms are already known.
    let mut nf_by_id: HashMap<usize, Vec<(usize, u32)>> = HashMap::new();
    for (id, p) in space.paths.iter().enumerate() {
        if let Some(&b) = basis_index.get(p) {
            nf_by_id.insert(id, vec![(b, 1)]);
            continue;
        }
        let row = &ech.rows[&id];
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for (&other, &c) in row.iter().filter(|(&k, _)| k != id) {
            for &(b, x) in &nf_by_id[&other] {
                let e = acc.entry(b).or_insert(0);
                *e = f.add(*e, f.mul(f.neg(c), x));
            }
        }
        nf_by_id.insert(id, acc.into_iter().filter(|&(_, x)| x != 0).collect());
    }
    let normal_forms = nf_by_id
        .into_iter()
        .map(|(id, nf)| (space.paths[id].clone(), nf))
        .collect();

    let n = q.vertex_count();
    let mut cartan = vec![vec![0; n]; n];
    for p in &basis {
        cartan[p.start][p.end(q)] += 1;
    }
    Ok(Algebra {
        presentation: pres.clone(),
        field: f,
        basis,
        basis_index,
        normal_forms,
        cartan,
    })
}

impl Algebra {
    pub fn field(&self) -> Fp {
        self.field
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.presentation.quiver
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.basis_index.get(p).copied()
    }

    /// Entry `(v, w)` is `dim e_v Λ e_w`, the multiplicity of `S_w` in `P_v`.
    pub fn cartan(&self) -> &[Vec<usize>] {
        &self.cartan
    }

    /// Normal form of a path as a sparse combination of basis indices.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, u32)> {
        if p.len() >= self.presentation.loewy_bound {
            return Vec::new();
        }
        self.normal_forms.get(p).cloned().unwrap_or_default()
    }

    /// Dense coordinates of a combination of paths.
    pub fn element(&self, c: &Combination) -> Element {
        let f = self.field;
        let mut v = vec![0; self.dimension()];
        for (coeff, p) in &c.terms {
            let k = f.from_i64(*coeff);
            for (b, x) in self.reduce_path(p) {
                v[b] = f.add(v[b], f.mul(k, x));
            }
        }
        v
    }

    /// Product of two basis monomials.
    pub fn multiply_basis(&self, a: usize, b: usize) -> Vec<(usize, u32)> {
        let q = self.quiver();
        let (pa, pb) = (&self.basis[a], &self.basis[b]);
        if pa.end(q) != pb.start {
            return Vec::new();
        }
        let mut arrows = pa.arrows.clone();
        arrows.extend_from_slice(&pb.arrows);
        self.reduce_path(&Path {
            start: pa.start,
            arrows,
        })
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let f = self.field;
        let mut out = vec![0; self.dimension()];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = f.mul(a, b);
                for (k, c) in self.multiply_basis(i, j) {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    /// Basis indices of `e_v Λ`, i.e. monomials starting at `v`, grouped by
    /// end vertex in basis order.
    pub fn projective_basis(&self, v: usize) -> Vec<Vec<usize>> {
        let q = self.quiver();
        let mut by_end = vec![Vec::new(); q.vertex_count()];
        for (i, p) in self.basis.iter().enumerate() {
            if p.start == v {
                by_end[p.end(q)].push(i);
            }
        }
        by_end
    }

    /// Right multiplication by an arrow on basis monomials, as a sparse map.
    pub fn right_arrow(&self, b: usize, arrow: usize) -> Vec<(usize, u32)> {
        let q = self.quiver();
        let p = &self.basis[b];
        if p.end(q) != q.arrows[arrow].source {
            return Vec::new();
        }
        let mut arrows = p.arrows.clone();
        arrows.push(arrow);
        self.reduce_path(&Path { start: p.start, arrows })
    }

    /// Multiplication table restricted to monomials: `table[a][b]` is the
    /// normal form of `basis[a] * basis[b]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<(usize, u32)>>> {
        (0..self.dimension())
            .map(|a| (0..self.dimension()).map(|b| self.multiply_basis(a, b)).collect())
            .collect()
    }

    /// Matrix of right multiplication by `x` on the whole algebra.
    pub fn right_multiplication(&self, x: &Element) -> Matrix {
        let d = self.dimension();
        let mut m = Matrix::zeros(d, d);
        for b in 0..d {
            let mut e = vec![0; d];
            e[b] = 1;
            let row = self.multiply(&e, x);
            m.row_mut(b).copy_from_slice(&row);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::presentation::PresentationBuilder;

    fn two_cycle(p: u32, c: usize) -> BoundQuiverPresentation {
        let path0: Vec<&str> = (0..c).map(|i| if i % 2 == 0 { "a0" } else { "a1" }).collect();
        let path1: Vec<&str> = (0..c).map(|i| if i % 2 == 0 { "a1" } else { "a0" }).collect();
        PresentationBuilder::new("cyc", p, c)
            .vertices(["0", "1"])
            .arrow("a0", "0", "1")
            .arrow("a1", "1", "0")
            .zero(&path0.join(" "))
            .zero(&path1.join(" "))
            .build()
            .unwrap()
    }

    #[test]
    fn cyclic_two_vertex_radical_fourth_power() {
        let a = build_algebra(&two_cycle(2, 4)).unwrap();
        assert_eq!(a.dimension(), 8);
        assert_eq!(a.cartan(), &[vec![2, 2], vec![2, 2]]);
    }

    #[test]
    fn klein_four_group_algebra() {
        let pres = PresentationBuilder::new("klein", 2, 3)
            .vertices(["0"])
            .arrow("x", "0", "0")
            .arrow("y", "0", "0")
            .zero("x x")
            .zero("y y")
            .relation(&[(1, "x y"), (1, "y x")])
            .build()
            .unwrap();
        let a = build_algebra(&pres).unwrap();
        assert_eq!(a.dimension(), 4);
        // basis closed under subpaths
        let q = a.quiver().clone();
        for p in a.basis() {
            if !p.is_empty() {
                let prefix = Path {
                    start: p.start,
                    arrows: p.arrows[..p.len() - 1].to_vec(),
                };
                assert!(a.basis_index(&prefix).is_some(), "{}", p.display(&q));
            }
        }
    }

    #[test]
    fn unstable_bound_detected() {
        // with only x^3 = 0 the algebra K[x]/(x^3) has Loewy length 3; bound 2 is too small
        let pres = PresentationBuilder::new("local", 3, 2)
            .vertices(["0"])
            .arrow("x", "0", "0")
            .zero("x x x")
            .build()
            .unwrap();
        assert!(matches!(
            build_algebra(&pres),
            Err(OracleError::UnstableLoewyBound { .. })
        ));
        let mut ok = pres.clone();
        ok.loewy_bound = 3;
        assert_eq!(build_algebra(&ok).unwrap().dimension(), 3);
    }

    #[test]
    fn non_admissible_rejected() {
        let pres = PresentationBuilder::new("bad", 2, 3)
            .vertices(["0"])
            .arrow("x", "0", "0")
            .zero("x")
            .build();
        assert!(matches!(pres, Err(OracleError::NonAdmissibleRelation { .. })));
    }

    #[test]
    fn products_are_associative() {
        let pres = PresentationBuilder::new("klein3", 3, 5)
            .vertices(["0"])
            .arrow("x", "0", "0")
            .arrow("y", "0", "0")
            .zero("x x x")
            .zero("y y y")
            .relation(&[(1, "x y"), (-1, "y x")])
            .build()
            .unwrap();
        let a = build_algebra(&pres).unwrap();
        assert_eq!(a.dimension(), 9);
        let d = a.dimension();
        let unit = |i: usize| {
            let mut e = vec![0; d];
            e[i] = 1;
            e
        };
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let l = a.multiply(&a.multiply(&unit(i), &unit(j)), &unit(k));
                    let r = a.multiply(&unit(i), &a.multiply(&unit(j), &unit(k)));
                    assert_eq!(l, r);
                }
            }
        }
    }
}
