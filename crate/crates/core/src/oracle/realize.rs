//! Nakayama algebras as monomial bound quiver algebras.

use std::sync::Arc;

use super::homological::Oracle;
use super::module::QuiverModule;
use super::presentation::{Arrow, BoundQuiverPresentation, Combination, Path, Quiver};
use crate::nakayama::{NakayamaAlgebra, Shape};

/// Quiver `0 -> 1 -> ... -> n-1` (closed up for the cyclic shape) with the
/// path of length `c_i` from each vertex `i` as the only relations.
pub fn kupisch_presentation(alg: &NakayamaAlgebra, p: u32) -> BoundQuiverPresentation {
    let n = alg.n();
    let c = alg.kupisch();
    let arrow_count = match alg.shape() {
        Shape::Cyclic if n == 1 && c[0] == 1 => 0,
        Shape::Cyclic => n,
        Shape::Linear => n - 1,
    };
    let arrows: Vec<Arrow> = (0..arrow_count)
        .map(|i| Arrow {
            label: format!("a{i}"),
            source: i,
            target: (i + 1) % n,
        })
        .collect();
    let quiver = Quiver {
        vertices: (0..n).map(|i| i.to_string()).collect(),
        arrows,
    };
    let mut relations = Vec::new();
    for (i, &ci) in c.iter().enumerate() {
        if arrow_count == 0 {
            break;
        }
        if alg.shape() == Shape::Linear && i + ci > n - 1 {
            continue;
        }
        let arrows = (0..ci).map(|d| (i + d) % n).collect();
        let path = Path::new(&quiver, i, arrows).expect("consecutive arrows compose");
        relations.push(Combination::monomial(path));
    }
    BoundQuiverPresentation {
        name: format!("kupisch {alg}"),
        quiver: Arc::new(quiver),
        char_p: p,
        relations,
        loewy_bound: alg.loewy_length().max(1),
        modules: Vec::new(),
    }
}

/// The serial module `e_iΛ / e_iJ^k`.
pub fn serial_module(oracle: &Oracle, vertex: usize, length: usize) -> QuiverModule {
    let p = oracle.projective(vertex);
    p.radical_power(length).quotient(p).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn realization_has_the_expected_dimension() {
        for (series, shape) in [
            (vec![4, 4], Shape::Cyclic),
            (vec![2, 3], Shape::Cyclic),
            (vec![3, 2, 1], Shape::Linear),
            (vec![1], Shape::Cyclic),
            (vec![5], Shape::Cyclic),
        ] {
            let alg = NakayamaAlgebra::new(&series, shape).unwrap();
            let o = Oracle::build(&kupisch_presentation(&alg, 2)).unwrap();
            assert_eq!(o.algebra().dimension(), alg.dimension(), "{alg}");
            for v in 0..alg.n() {
                assert_eq!(o.projective(v).loewy_length(), alg.kupisch()[v]);
            }
        }
    }

    #[test]
    fn serial_modules_are_uniserial() {
        let alg = NakayamaAlgebra::cyclic(&[3, 3]).unwrap();
        let o = Oracle::build(&kupisch_presentation(&alg, 3)).unwrap();
        let m = serial_module(&o, 1, 2);
        assert_eq!(m.radical_layers(), vec![vec![0, 1], vec![1, 0]]);
    }
}
