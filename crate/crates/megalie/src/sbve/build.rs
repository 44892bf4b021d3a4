//! Assembly of the truncated symmetry algebra from symbolic commutators.

use super::generators::GeneratorSet;
use super::SbveError;
use crate::exactalg::{LieAlgebra, Rational};
use crate::symvec::decompose_in_basis;

/// Compute all pairwise commutators of the generator fields, decompose
/// each in the generator basis and assemble the structure constants.
///
/// A commutator falling outside the span means the truncation is broken;
/// that is a hard error naming the offending pair.
pub fn build_truncated_algebra(gs: &GeneratorSet) -> Result<LieAlgebra, SbveError> {
    let labels = gs.labels();
    let fields = gs.fields();
    let n = fields.len();
    let mut c = vec![vec![vec![Rational::ZERO; n]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let bracket = fields[i].commutator(&fields[j]);
            let coords = decompose_in_basis(&bracket, &fields).map_err(|source| {
                SbveError::NonClosure {
                    left: labels[i].clone(),
                    right: labels[j].clone(),
                    source,
                }
            })?;
            for (k, v) in coords.into_iter().enumerate() {
                c[i][j][k] = v;
                c[j][i][k] = -v;
            }
        }
    }
    LieAlgebra::new(labels, c).map_err(SbveError::Algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sbve::generators::generators;

    fn index_of(g: &LieAlgebra, label: &str) -> usize {
        g.labels().iter().position(|l| l == label).unwrap()
    }

    #[test]
    fn rest_frame_bracket_table() {
        let gs = generators(Rational::ZERO, 4).unwrap();
        let g = build_truncated_algebra(&gs).unwrap();
        assert_eq!(g.dim(), 10);
        let d = index_of(&g, "D");
        let p = index_of(&g, "P");
        // [D, P] = -P
        assert_eq!(g.structure_constant(d, p, p), Rational::from(-1));
        for n in 0..=4usize {
            let zn = index_of(&g, &format!("Z{n}"));
            // [D, Z_n] = (n + 1) Z_n
            assert_eq!(
                g.structure_constant(d, zn, zn),
                Rational::integer(n as i128 + 1)
            );
            // [P, Z_n] = n Z_{n-1}
            if n > 0 {
                let zprev = index_of(&g, &format!("Z{}", n - 1));
                assert_eq!(
                    g.structure_constant(p, zn, zprev),
                    Rational::integer(n as i128)
                );
            }
        }
        // so(3) block and vanishing cross-sector brackets.
        let (j1, j2, j3) = (index_of(&g, "J1"), index_of(&g, "J2"), index_of(&g, "J3"));
        assert_eq!(g.structure_constant(j1, j2, j3), Rational::ONE);
        assert_eq!(g.structure_constant(j2, j3, j1), Rational::ONE);
        assert_eq!(g.structure_constant(j3, j1, j2), Rational::ONE);
        for &ji in &[j1, j2, j3] {
            for k in 0..g.dim() {
                assert!(g.structure_constant(ji, d, k).is_zero());
                assert!(g.structure_constant(ji, p, k).is_zero());
                let z0 = index_of(&g, "Z0");
                assert!(g.structure_constant(ji, z0, k).is_zero());
            }
        }
    }

    #[test]
    fn rotating_frame_mixes_time_translation_into_rotation() {
        let gs = generators(Rational::from(1), 3).unwrap();
        let g = build_truncated_algebra(&gs).unwrap();
        let d = index_of(&g, "D");
        let p = index_of(&g, "P");
        let j1 = index_of(&g, "J1");
        let j3 = index_of(&g, "J3");
        let j2 = index_of(&g, "J2");
        // [D, P] = -P + Omega J1
        assert_eq!(g.structure_constant(d, p, p), Rational::from(-1));
        assert_eq!(g.structure_constant(d, p, j1), Rational::from(1));
        // [P, J2] = Omega J3
        assert_eq!(g.structure_constant(p, j2, j3), Rational::from(1));
        assert_eq!(g.structure_constant(p, j3, j2), Rational::from(-1));
    }

    #[test]
    fn truncation_consistency_between_sizes() {
        // Structure constants over the shared labels agree between N and N+1.
        let g4 = build_truncated_algebra(&generators(Rational::ZERO, 4).unwrap()).unwrap();
        let g5 = build_truncated_algebra(&generators(Rational::ZERO, 5).unwrap()).unwrap();
        let embed: Vec<usize> = g4
            .labels()
            .iter()
            .map(|l| g5.labels().iter().position(|m| m == l).unwrap())
            .collect();
        for i in 0..g4.dim() {
            for j in 0..g4.dim() {
                for k in 0..g4.dim() {
                    assert_eq!(
                        g4.structure_constant(i, j, k),
                        g5.structure_constant(embed[i], embed[j], embed[k])
                    );
                }
            }
        }
    }
}
