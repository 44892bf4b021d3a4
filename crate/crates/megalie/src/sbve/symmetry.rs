//! The symmetry transformations of the vorticity equation: the
//! rotating-frame elimination map, the two discrete mirror symmetries,
//! the general rotation-free symmetry family, induced linear maps on the
//! algebra, and the factor group of the symmetry group.

use super::generators::GeneratorSet;
use super::SbveError;
use crate::exactalg::{LieAlgebra, LinearMap, Rational, Subspace};
use crate::symvec::{decompose_in_basis, pushforward, ChartMap, Expr, PointTransformation};

/// Map that removes the angular velocity from both the equation and the
/// algebra: `(t, lambda, mu, psi) -> (t, lambda + Omega t, mu, psi - Omega mu)`
/// with symbolic `Omega` and closed-form inverse.
pub fn omega_elimination() -> PointTransformation {
    let om = Expr::param("Omega");
    let forward = ChartMap {
        t: Expr::t(),
        lambda: Expr::lambda() + om.clone() * Expr::t(),
        mu: Expr::mu(),
        psi: Expr::psi() - om.clone() * Expr::mu(),
    };
    let inverse = ChartMap {
        t: Expr::t(),
        lambda: Expr::lambda() - om.clone() * Expr::t(),
        mu: Expr::mu(),
        psi: Expr::psi() + om * Expr::mu(),
    };
    PointTransformation::new(forward, inverse)
}

/// The two independent discrete symmetries: sign changes of
/// `(t, lambda)` and of `(mu, psi)`. Both are involutions.
pub fn discrete_symmetries() -> (PointTransformation, PointTransformation) {
    let sigma1 = {
        let map = ChartMap {
            t: -Expr::t(),
            lambda: -Expr::lambda(),
            mu: Expr::mu(),
            psi: Expr::psi(),
        };
        PointTransformation::new(map.clone(), map)
    };
    let sigma2 = {
        let map = ChartMap {
            t: Expr::t(),
            lambda: Expr::lambda(),
            mu: -Expr::mu(),
            psi: -Expr::psi(),
        };
        PointTransformation::new(map.clone(), map)
    };
    (sigma1, sigma2)
}

/// Parameters of the rotation-free symmetry family
/// `t -> a1 t + a0, mu -> eps mu, psi -> (eps / a1) psi + f(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryParams {
    pub a0: Rational,
    pub a1: Rational,
    /// `+1` or `-1`.
    pub epsilon: Rational,
    /// Coefficients of `f(t) = sum f_k t^k`, degree at most the truncation.
    pub f_coeffs: Vec<Rational>,
}

impl SymmetryParams {
    pub fn identity() -> SymmetryParams {
        SymmetryParams {
            a0: Rational::ZERO,
            a1: Rational::ONE,
            epsilon: Rational::ONE,
            f_coeffs: Vec::new(),
        }
    }

    /// The gauge scaling `c = eps / a1` the family forces on `psi`.
    pub fn induced_c(&self) -> Rational {
        self.epsilon / self.a1
    }
}

fn polynomial(coeffs: &[Rational], var: &Expr) -> Expr {
    let mut out = Expr::zero();
    for (k, coef) in coeffs.iter().enumerate() {
        if !coef.is_zero() {
            out = out + var.pow(k as u32).scale(*coef);
        }
    }
    out
}

/// Build the symmetry family member for `p`; rejects `a1 = 0` (the map
/// would be singular) and `epsilon` outside `{1, -1}`.
pub fn general_symmetry(p: &SymmetryParams) -> Result<PointTransformation, SbveError> {
    if p.a1.is_zero() {
        return Err(SbveError::SingularSymmetry);
    }
    if !(p.epsilon.is_one() || (-p.epsilon).is_one()) {
        return Err(SbveError::EpsilonNotSign { value: p.epsilon });
    }
    let a1 = Expr::from_rational(p.a1);
    let a0 = Expr::from_rational(p.a0);
    let c = p.induced_c();
    let forward = ChartMap {
        t: a1.clone() * Expr::t() + a0.clone(),
        lambda: Expr::lambda(),
        mu: Expr::mu().scale(p.epsilon),
        psi: Expr::psi().scale(c) + polynomial(&p.f_coeffs, &Expr::t()),
    };
    // t = (t~ - a0)/a1; psi = (psi~ - f(t)) / c with t expressed in t~.
    let t_back = (Expr::t() - a0).scale(p.a1.recip());
    let inverse = ChartMap {
        t: t_back.clone(),
        lambda: Expr::lambda(),
        mu: Expr::mu().scale(p.epsilon),
        psi: (Expr::psi() - polynomial(&p.f_coeffs, &t_back)).scale(c.recip()),
    };
    Ok(PointTransformation::new(forward, inverse))
}

/// Matrix of the push-forward action on the algebra, decomposing each
/// image in the basis of `target` (usually `source` itself). Column `j`
/// holds the coordinates of the image of generator `j`.
pub fn pushforward_matrix_to(
    source: &GeneratorSet,
    target: &GeneratorSet,
    tr: &PointTransformation,
    seed: u64,
) -> Result<LinearMap, SbveError> {
    let target_fields = target.fields();
    let mut images = Vec::with_capacity(source.len());
    for (label, field) in source.members() {
        let pushed = pushforward(field, tr, seed).map_err(SbveError::Symbolic)?;
        let coords = decompose_in_basis(&pushed, &target_fields).map_err(|source_err| {
            SbveError::PushforwardOutsideSpan {
                label: label.clone(),
                source: source_err,
            }
        })?;
        images.push(coords);
    }
    LinearMap::from_images(&images).map_err(SbveError::Algebra)
}

/// Push-forward matrix in the generator set's own basis.
pub fn pushforward_matrix(
    gs: &GeneratorSet,
    tr: &PointTransformation,
    seed: u64,
) -> Result<LinearMap, SbveError> {
    pushforward_matrix_to(gs, gs, tr, seed)
}

/// Composition table of the four coset representatives
/// `{id, sigma1, sigma2, sigma1 sigma2}` modulo continuous symmetries.
#[derive(Clone, Debug)]
pub struct FactorGroupTable {
    pub representative_names: [&'static str; 4],
    /// `table[i][j]` is the index of `rep_i ∘ rep_j`.
    pub table: [[usize; 4]; 4],
}

impl FactorGroupTable {
    /// The Klein four-group is exactly the xor table.
    pub fn is_klein_four(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.table[i][j] == i ^ j))
    }
}

pub fn factor_group_table() -> Result<FactorGroupTable, SbveError> {
    let (s1, s2) = discrete_symmetries();
    let id = PointTransformation::identity();
    let s12 = s1.compose(&s2).map_err(SbveError::Symbolic)?;
    let reps = [id, s1, s2, s12];
    let mut table = [[usize::MAX; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            let product = reps[i].compose(&reps[j]).map_err(SbveError::Symbolic)?;
            let k = reps
                .iter()
                .position(|r| r.same_coordinates(&product))
                .ok_or(SbveError::CosetNotClosed { i, j })?;
            table[i][j] = k;
        }
    }
    Ok(FactorGroupTable {
        representative_names: ["id", "sigma1", "sigma2", "sigma1*sigma2"],
        table,
    })
}

/// One step of the iterated stabilizer series on the truncated algebra.
#[derive(Clone, Debug)]
pub struct StabilizerStep {
    pub input: Subspace,
    pub output: Subspace,
    /// True when the step only holds in the truncation (the step that
    /// absorbs the time translation at top gauge degree).
    pub truncation_sensitive: bool,
}

/// Iterate `s = {z in i0 : [z, i0] ⊆ i2}` with `i0 = span{P, Z-tower}`
/// from `i2 = span{Z0}`, reproducing the gauge-tower megaideal series.
/// The final step at the truncation boundary absorbs `P` and is flagged.
pub fn stabilizer_series(g: &LieAlgebra, n_max: usize) -> Result<Vec<StabilizerStep>, SbveError> {
    let find = |name: &str| {
        g.labels()
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| SbveError::MissingLabel {
                label: name.to_string(),
            })
    };
    let p = find("P")?;
    let mut pz = vec![p];
    for n in 0..=n_max {
        pz.push(find(&format!("Z{n}"))?);
    }
    let i0 = Subspace::coordinate_span(g.dim(), &pz);
    let mut i2 = Subspace::coordinate_span(g.dim(), &[find("Z0")?]);
    let mut steps = Vec::new();
    for k in 0..n_max {
        let output = g.stabilizer(&i0, &i0, &i2).map_err(SbveError::Algebra)?;
        steps.push(StabilizerStep {
            input: i2.clone(),
            output: output.clone(),
            truncation_sensitive: k == n_max - 1,
        });
        i2 = output;
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symvec::{is_zero, Zeroness, DEFAULT_SEED};

    #[test]
    fn omega_elimination_has_exact_inverse() {
        let tr = omega_elimination();
        assert_eq!(
            tr.verify_inverse(DEFAULT_SEED).unwrap(),
            Zeroness::ZeroSymbolic
        );
        // Omega = 0 collapses to the identity.
        let at_zero = tr.instantiate("Omega", Rational::ZERO);
        assert!(at_zero.same_coordinates(&PointTransformation::identity()));
    }

    #[test]
    fn discrete_symmetries_are_involutions() {
        let (s1, s2) = discrete_symmetries();
        for s in [&s1, &s2] {
            assert_eq!(
                s.verify_inverse(DEFAULT_SEED).unwrap(),
                Zeroness::ZeroSymbolic
            );
            let twice = s.compose(s).unwrap();
            assert!(twice.same_coordinates(&PointTransformation::identity()));
        }
        assert_eq!(s1.forward.t, -Expr::t());
        assert_eq!(s1.forward.lambda, -Expr::lambda());
        assert_eq!(s2.forward.mu, -Expr::mu());
        assert_eq!(s2.forward.psi, -Expr::psi());
    }

    #[test]
    fn general_symmetry_special_members() {
        // (0, 1, 1, 0) is the identity.
        let id = general_symmetry(&SymmetryParams::identity()).unwrap();
        assert!(id.same_coordinates(&PointTransformation::identity()));

        // (0, -1, 1, 0) flips t and psi.
        let flip = general_symmetry(&SymmetryParams {
            a0: Rational::ZERO,
            a1: Rational::from(-1),
            epsilon: Rational::ONE,
            f_coeffs: vec![],
        })
        .unwrap();
        assert_eq!(flip.forward.t, -Expr::t());
        assert_eq!(flip.forward.psi, -Expr::psi());
        assert_eq!(flip.forward.lambda, Expr::lambda());

        // (0, 1, -1, 0) is the mu/psi mirror.
        let (_, s2) = discrete_symmetries();
        let mirror = general_symmetry(&SymmetryParams {
            a0: Rational::ZERO,
            a1: Rational::ONE,
            epsilon: Rational::from(-1),
            f_coeffs: vec![],
        })
        .unwrap();
        assert!(mirror.same_coordinates(&s2));

        assert!(matches!(
            general_symmetry(&SymmetryParams {
                a0: Rational::ZERO,
                a1: Rational::ZERO,
                epsilon: Rational::ONE,
                f_coeffs: vec![],
            }),
            Err(SbveError::SingularSymmetry)
        ));
    }

    #[test]
    fn general_symmetry_inverse_verifies() {
        let p = SymmetryParams {
            a0: Rational::new(1, 2),
            a1: Rational::from(-3),
            epsilon: Rational::from(-1),
            f_coeffs: vec![Rational::ONE, Rational::ZERO, Rational::new(2, 5)],
        };
        let tr = general_symmetry(&p).unwrap();
        assert_eq!(
            tr.verify_inverse(DEFAULT_SEED).unwrap(),
            Zeroness::ZeroSymbolic
        );
    }

    #[test]
    fn factor_group_is_klein_four() {
        let table = factor_group_table().unwrap();
        assert!(table.is_klein_four());
        // sigma1 and sigma2 commute.
        assert_eq!(table.table[1][2], table.table[2][1]);
    }

    #[test]
    fn gauge_composition_example() {
        // transform preserving lambda composed with omega elimination stays
        // in the supported substitution family.
        let (s1, _) = discrete_symmetries();
        let eq2 = omega_elimination().instantiate("Omega", Rational::from(2));
        let c = eq2.compose(&s1).unwrap();
        let z = is_zero(
            &(c.forward.lambda.clone() + Expr::lambda() + Expr::int(2) * Expr::t()),
            DEFAULT_SEED,
        );
        assert!(z.is_zero(), "lambda component should be -(lambda + 2t)");
    }
}
