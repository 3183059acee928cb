//! Named algebras used by the verification suites.

use serde::Serialize;

use super::{ArrowSpec, BiserialQuiverData, CycleParameter, HybridError};
use crate::nakayama::NakayamaAlgebra;
use crate::oracle::realize::kupisch_presentation;
use crate::oracle::{BoundQuiverPresentation, PresentationBuilder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum CatalogKind {
    /// The representation-finite symmetric algebra on a loop and a 3-cycle.
    LoopWithTriangle,
    Sd3c1 {
        s: usize,
    },
    Sd3c2 {
        s: usize,
        k: usize,
    },
    Sd2b3 {
        s: usize,
        c: i64,
    },
    Sd2a2 {
        k: usize,
        c: i64,
    },
    /// Built from biserial data by the hybrid construction.
    Hybrid,
    /// `F_p[C_{p^a}] = F_p[x]/(x^{p^a})`.
    CyclicGroup {
        a: u32,
    },
    /// `F_2[C_2 × C_2]`.
    KleinFour,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub char_p: u32,
    pub kind: CatalogKind,
}

pub fn entries() -> Vec<CatalogEntry> {
    use CatalogKind::*;
    let e = |name, summary, char_p, kind| CatalogEntry {
        name,
        summary,
        char_p,
        kind,
    };
    vec![
        e(
            "loop_triangle",
            "symmetric algebra with a loop where Ext^3(S,S) vanishes",
            2,
            LoopWithTriangle,
        ),
        e("sd3c1", "semidihedral type SD(3C)_1, s = 3", 2, Sd3c1 { s: 3 }),
        e(
            "sd3c2",
            "semidihedral type SD(3C)_2, s = 2, k = 2",
            2,
            Sd3c2 { s: 2, k: 2 },
        ),
        e(
            "sd2b3",
            "semidihedral type SD(2B)_3, s = 2, c = 0",
            2,
            Sd2b3 { s: 2, c: 0 },
        ),
        e(
            "sd2b3_c1",
            "semidihedral type SD(2B)_3, s = 2, c = 1",
            2,
            Sd2b3 { s: 2, c: 1 },
        ),
        e(
            "sd2b3_s3",
            "semidihedral type SD(2B)_3, s = 3, c = 0",
            2,
            Sd2b3 { s: 3, c: 0 },
        ),
        e(
            "sd2a2",
            "semidihedral type SD(2A)_2, k = 2, c = 0",
            2,
            Sd2a2 { k: 2, c: 0 },
        ),
        e(
            "triangle",
            "weighted surface algebra on three vertices, all arrows in triangles, m = 2",
            2,
            Hybrid,
        ),
        e(
            "triangle_brauer",
            "Brauer graph algebra on the triangle quiver, no triangles, m = 1",
            3,
            Hybrid,
        ),
        e(
            "brauer_loop",
            "Brauer graph algebra with loops at both vertices",
            2,
            Hybrid,
        ),
        e(
            "hybrid_loop",
            "hybrid algebra with loop triangles at both vertices",
            2,
            Hybrid,
        ),
        e("gf2_c2", "group algebra of C_2 over F_2", 2, CyclicGroup { a: 1 }),
        e("gf2_c4", "group algebra of C_4 over F_2", 2, CyclicGroup { a: 2 }),
        e("gf3_c3", "group algebra of C_3 over F_3", 3, CyclicGroup { a: 1 }),
        e("gf5_c5", "group algebra of C_5 over F_5", 5, CyclicGroup { a: 1 }),
        e("klein_four", "group algebra of C_2 x C_2 over F_2", 2, KleinFour),
    ]
}

/// Other names accepted for catalog entries.
const ALIASES: [(&str, &str); 1] = [("example_2_8", "loop_triangle")];

pub fn entry(name: &str) -> Result<CatalogEntry, HybridError> {
    let name = ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |(_, target)| target);
    entries()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| HybridError::UnknownEntry(name.to_string()))
}

fn arrow(label: &str, source: &str, target: &str) -> ArrowSpec {
    ArrowSpec {
        label: label.into(),
        source: source.into(),
        target: target.into(),
    }
}

/// Arrows `a_i: i -> i+1` and `b_i: i -> i-1` on three vertices, with
/// `f = (a0 a1 a2)(b0 b2 b1)`.
pub fn triangle_data(with_triangles: bool) -> BiserialQuiverData {
    BiserialQuiverData {
        name: if with_triangles { "triangle" } else { "triangle_brauer" }.into(),
        vertices: vec!["0".into(), "1".into(), "2".into()],
        arrows: vec![
            arrow("a0", "0", "1"),
            arrow("a1", "1", "2"),
            arrow("a2", "2", "0"),
            arrow("b0", "0", "2"),
            arrow("b1", "1", "0"),
            arrow("b2", "2", "1"),
        ],
        f: "(a0 a1 a2)(b0 b2 b1)".into(),
        triangles: if with_triangles {
            "(a0 a1 a2)(b0 b2 b1)".into()
        } else {
            String::new()
        },
        default_m: if with_triangles { 2 } else { 1 },
        default_c: 1,
        cycles: Vec::new(),
    }
}

/// Loops `a` at 0 and `e` at 1, `b: 0 -> 1`, `g: 1 -> 0`, with
/// `f = (a)(b g)(e)`, so that `g = (a b e g)`.
pub fn brauer_loop_data(loops_in_triangles: bool) -> BiserialQuiverData {
    BiserialQuiverData {
        name: if loops_in_triangles {
            "hybrid_loop"
        } else {
            "brauer_loop"
        }
        .into(),
        vertices: vec!["0".into(), "1".into()],
        arrows: vec![
            arrow("a", "0", "0"),
            arrow("b", "0", "1"),
            arrow("g", "1", "0"),
            arrow("e", "1", "1"),
        ],
        f: "(a)(b g)(e)".into(),
        triangles: if loops_in_triangles {
            "(a)(e)".into()
        } else {
            String::new()
        },
        default_m: 1,
        default_c: 1,
        cycles: vec![CycleParameter {
            arrow: "a".into(),
            m: Some(1),
            c: Some(1),
        }],
    }
}

pub fn hybrid_loop_data() -> BiserialQuiverData {
    brauer_loop_data(true)
}

/// Biserial data of the catalog entries built by the hybrid construction.
pub fn biserial_data(name: &str) -> Option<BiserialQuiverData> {
    match name {
        "triangle" => Some(triangle_data(true)),
        "triangle_brauer" => Some(triangle_data(false)),
        "brauer_loop" => Some(brauer_loop_data(false)),
        "hybrid_loop" => Some(hybrid_loop_data()),
        _ => None,
    }
}

fn power(word: &str, k: usize) -> String {
    vec![word; k].join(" ")
}

pub fn loop_with_triangle() -> Result<BoundQuiverPresentation, HybridError> {
    Ok(PresentationBuilder::new("loop_triangle", 2, 8)
        .vertices(["1", "2", "3"])
        .arrow("a1", "1", "1")
        .arrow("b1", "1", "2")
        .arrow("b2", "2", "3")
        .arrow("b3", "3", "1")
        .zero("b3 b1")
        .zero("a1 a1 b1")
        .relation(&[(1, "b1 b2 b3"), (-1, "a1 a1")])
        .zero("b3 a1 a1")
        .zero("a1 a1 a1 a1")
        .zero("b2 b3 a1 b1 b2")
        .build()?)
}

fn sd3c_quiver(name: &str, bound: usize) -> PresentationBuilder {
    PresentationBuilder::new(name, 2, bound)
        .vertices(["0", "1", "2"])
        .arrow("beta", "1", "0")
        .arrow("gamma", "0", "1")
        .arrow("delta", "0", "2")
        .arrow("eta", "2", "0")
        .arrow("rho", "0", "0")
}

pub fn sd3c1(s: usize) -> Result<BoundQuiverPresentation, HybridError> {
    assert!(s >= 3);
    Ok(sd3c_quiver("sd3c1", s + 4)
        .zero("beta delta")
        .zero("beta rho")
        .zero("rho gamma")
        .zero("eta gamma")
        .zero("eta rho")
        .zero("rho delta")
        .relation(&[(1, &power("rho", s)), (-1, "gamma beta")])
        .relation(&[(1, "gamma beta"), (-1, "delta eta")])
        .zero("beta gamma beta")
        .zero("eta delta eta")
        .build()?)
}

pub fn sd3c2(s: usize, k: usize) -> Result<BoundQuiverPresentation, HybridError> {
    assert!(s >= 2 && k >= 2);
    let gb_k = power("gamma beta", k);
    // the zero relation (βγ)^{k-1}βγ would give an algebra that is not
    // weakly symmetric; the mirror image of (ηδ)^{k-1}ηγ is (βγ)^{k-1}βδ
    let bg_kd = format!("{} beta delta", power("beta gamma", k - 1));
    let ed_ke = format!("{} eta gamma", power("eta delta", k - 1));
    Ok(sd3c_quiver("sd3c2", 2 * k + s + 3)
        .zero("beta rho")
        .zero("rho delta")
        .zero("eta rho")
        .zero("rho gamma")
        .relation(&[(1, "gamma beta"), (-1, "delta eta")])
        .relation(&[(1, &gb_k), (-1, &power("rho", s))])
        .zero(bg_kd.trim())
        .zero(ed_ke.trim())
        .build()?)
}

/// Also defines `W = (α, -γ)Λ + (β, -η)Λ` inside `P_0 ⊕ P_1`.
pub fn sd2b3(s: usize, c: i64) -> Result<BoundQuiverPresentation, HybridError> {
    assert!(s >= 2);
    let name = match (s, c) {
        (2, 0) => "sd2b3".to_string(),
        (2, c) => format!("sd2b3_c{c}"),
        (s, 0) => format!("sd2b3_s{s}"),
        (s, c) => format!("sd2b3_s{s}_c{c}"),
    };
    let eta_s1 = power("eta", s + 1);
    Ok(PresentationBuilder::new(&name, 2, s + 4)
        .vertices(["0", "1"])
        .arrow("alpha", "0", "0")
        .arrow("beta", "0", "1")
        .arrow("gamma", "1", "0")
        .arrow("eta", "1", "1")
        .relation(&[(1, "beta gamma"), (-1, "alpha alpha")])
        .relation(&[(1, "alpha beta"), (-1, "beta eta")])
        .relation(&[(1, "eta gamma"), (-1, "gamma alpha")])
        .relation(&[(1, "gamma beta"), (-1, "eta eta"), (-c, &eta_s1)])
        .zero(&format!("{} beta", power("alpha", s)))
        .zero(&power("alpha", s + 2))
        .zero(&power("eta", s + 2))
        .zero(&format!("{} gamma", power("eta", s)))
        .zero(&format!("beta {}", power("eta", s)))
        .module(
            "W",
            &["0", "1"],
            &[&[&[(1, "alpha")], &[(-1, "gamma")]], &[&[(1, "beta")], &[(-1, "eta")]]],
            &[],
        )
        .build()?)
}

/// Also defines `X = αΛ / (αΛ ∩ βΛ)`, realized as `(αΛ + βΛ) / βΛ`.
pub fn sd2a2(k: usize, c: i64) -> Result<BoundQuiverPresentation, HybridError> {
    assert!(k >= 2);
    let bga = "beta gamma alpha";
    let rhs = format!("{} beta gamma", power(bga, k - 1));
    let mut terms: Vec<(i64, String)> = vec![(1, "alpha alpha".into()), (-1, rhs)];
    if c != 0 {
        terms.push((-c, power(bga, k)));
    }
    let terms: Vec<(i64, &str)> = terms.iter().map(|(c, p)| (*c, p.as_str())).collect();
    Ok(PresentationBuilder::new("sd2a2", 2, 6 * k + 2)
        .vertices(["0", "1"])
        .arrow("alpha", "0", "0")
        .arrow("beta", "0", "1")
        .arrow("gamma", "1", "0")
        .zero("gamma beta")
        .relation(&terms)
        .relation(&[(1, &power("alpha beta gamma", k)), (-1, &power(bga, k))])
        .module("X", &["0"], &[&[&[(1, "alpha")]]], &[&[&[(1, "beta")]]])
        .build()?)
}

pub fn klein_four() -> Result<BoundQuiverPresentation, HybridError> {
    Ok(PresentationBuilder::new("klein_four", 2, 3)
        .vertices(["0"])
        .arrow("x", "0", "0")
        .arrow("y", "0", "0")
        .zero("x x")
        .zero("y y")
        .relation(&[(1, "x y"), (1, "y x")])
        .build()?)
}

/// `F_p[x]/(x^{p^a})` as the local Nakayama algebra with Kupisch series `[p^a]`.
pub fn cyclic_group(p: u32, a: u32) -> (NakayamaAlgebra, BoundQuiverPresentation) {
    let order = p.pow(a) as usize;
    let alg = NakayamaAlgebra::cyclic(&[order]).expect("local series is valid");
    let mut pres = kupisch_presentation(&alg, p);
    pres.name = format!("gf{p}_c{order}");
    (alg, pres)
}

/// Presentation of a catalog entry.
pub fn presentation(name: &str) -> Result<BoundQuiverPresentation, HybridError> {
    let e = entry(name)?;
    match e.kind {
        CatalogKind::LoopWithTriangle => loop_with_triangle(),
        CatalogKind::Sd3c1 { s } => sd3c1(s),
        CatalogKind::Sd3c2 { s, k } => sd3c2(s, k),
        CatalogKind::Sd2b3 { s, c } => sd2b3(s, c),
        CatalogKind::Sd2a2 { k, c } => sd2a2(k, c),
        CatalogKind::Hybrid => biserial_data(name)
            .expect("hybrid entry has data")
            .validate()?
            .build(e.char_p),
        CatalogKind::CyclicGroup { a } => Ok(cyclic_group(e.char_p, a).1),
        CatalogKind::KleinFour => klein_four(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::build_algebra;
    use crate::oracle::homological::Oracle;

    #[test]
    fn unmirrored_sd3c2_zero_relation_breaks_symmetry() {
        let pres = sd3c_quiver("unmirrored", 12)
            .zero("beta rho")
            .zero("rho delta")
            .zero("eta rho")
            .zero("rho gamma")
            .relation(&[(1, "gamma beta"), (-1, "delta eta")])
            .relation(&[(1, "gamma beta gamma beta"), (-1, "rho rho")])
            .zero("beta gamma beta gamma")
            .zero("eta delta eta gamma")
            .build()
            .unwrap();
        assert!(!Oracle::build(&pres).unwrap().is_weakly_symmetric());
        assert!(Oracle::build(&sd3c2(2, 2).unwrap()).unwrap().is_weakly_symmetric());
    }

    #[test]
    fn every_entry_builds() {
        for e in entries() {
            let pres = presentation(e.name).unwrap_or_else(|err| panic!("{}: {err}", e.name));
            assert_eq!(pres.char_p, e.char_p, "{}", e.name);
            build_algebra(&pres).unwrap_or_else(|err| panic!("{}: {err}", e.name));
        }
    }

    #[test]
    fn presentations_round_trip_through_toml() {
        for e in entries() {
            let pres = presentation(e.name).unwrap();
            let back = BoundQuiverPresentation::from_toml(&pres.to_toml()).unwrap();
            assert_eq!(back, pres, "{}", e.name);
        }
    }
}
