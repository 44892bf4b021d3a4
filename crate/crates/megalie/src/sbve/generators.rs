//! Symmetry generators of the spherical vorticity equation and their
//! finite-dimensional truncation.
//!
//! The gauge family `g(t) d/dpsi` is infinite dimensional; the truncation
//! keeps the polynomial tower `Z_n = t^n d/dpsi` for `n = 0..N`. All
//! statements about the truncated model that survive enlarging `N` are
//! statements about the full algebra; the closure engine's stability
//! filter makes that comparison explicit.
//!
//! With `theta = lambda + Omega t` and `s = sqrt(1 - mu^2)` the generators
//! are
//!
//! - `D  = t d/dt - Omega t d/dlambda - (psi - Omega mu) d/dpsi`
//! - `P  = d/dt`
//! - `J1 = d/dlambda`
//! - `J2 = (mu sin theta / s) d/dlambda + s cos theta d/dmu + Omega s cos theta d/dpsi`
//! - `J3 = (mu cos theta / s) d/dlambda - s sin theta d/dmu - Omega s sin theta d/dpsi`
//! - `Z_n = t^n d/dpsi`
//!
//! The `d/dpsi` coefficients of `J2`, `J3` carry the factor `(1 - mu^2)`:
//! pulling the rest-frame rotation fields back through the rotating-frame
//! map forces it, and the algebra does not close without it.

use super::SbveError;
use crate::exactalg::Rational;
use crate::symvec::{Expr, VectorField};

/// Labelled generator list for fixed angular velocity and truncation.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    omega: Rational,
    n_max: usize,
    members: Vec<(String, VectorField)>,
}

impl GeneratorSet {
    pub fn omega(&self) -> Rational {
        self.omega
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.members.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn fields(&self) -> Vec<VectorField> {
        self.members.iter().map(|(_, f)| f.clone()).collect()
    }

    pub fn members(&self) -> &[(String, VectorField)] {
        &self.members
    }

    pub fn field(&self, label: &str) -> Option<&VectorField> {
        self.members
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, f)| f)
    }
}

/// Build the truncated generator set. The stabilizer series needs gauge
/// degree at least 2, so `n_max >= 2` is required.
pub fn generators(omega: Rational, n_max: usize) -> Result<GeneratorSet, SbveError> {
    if n_max < 2 {
        return Err(SbveError::TruncationTooSmall { n_max });
    }
    let om = Expr::from_rational(omega);
    let theta = Expr::lambda() + om.clone() * Expr::t();
    let sin = Expr::sin(&theta).expect("affine");
    let cos = Expr::cos(&theta).expect("affine");

    let d = VectorField::new(
        Expr::t(),
        -(om.clone() * Expr::t()),
        Expr::zero(),
        om.clone() * Expr::mu() - Expr::psi(),
    );
    let p = VectorField::new(Expr::one(), Expr::zero(), Expr::zero(), Expr::zero());
    let j1 = VectorField::new(Expr::zero(), Expr::one(), Expr::zero(), Expr::zero());
    let j2 = VectorField::new(
        Expr::zero(),
        Expr::mu() * Expr::s_pow(-1) * sin.clone(),
        Expr::s() * cos.clone(),
        om.clone() * Expr::s() * cos.clone(),
    );
    let j3 = VectorField::new(
        Expr::zero(),
        Expr::mu() * Expr::s_pow(-1) * cos,
        -(Expr::s() * sin.clone()),
        -(om * Expr::s() * sin),
    );

    let mut members = vec![
        ("D".to_string(), d),
        ("P".to_string(), p),
        ("J1".to_string(), j1),
        ("J2".to_string(), j2),
        ("J3".to_string(), j3),
    ];
    for n in 0..=n_max {
        members.push((
            format!("Z{n}"),
            VectorField::new(
                Expr::zero(),
                Expr::zero(),
                Expr::zero(),
                Expr::t().pow(n as u32),
            ),
        ));
    }
    Ok(GeneratorSet {
        omega,
        n_max,
        members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symvec::Var;

    #[test]
    fn rest_frame_scaling_field() {
        let gs = generators(Rational::ZERO, 4).unwrap();
        let d = gs.field("D").unwrap();
        assert_eq!(d.xi_t, Expr::t());
        assert_eq!(d.xi_psi, -Expr::psi());
        assert!(d.xi_lambda.is_zero_expr());
    }

    #[test]
    fn gauge_base_is_constant_shift() {
        for omega in [Rational::ZERO, Rational::from(3)] {
            let gs = generators(omega, 2).unwrap();
            let z0 = gs.field("Z0").unwrap();
            assert_eq!(z0.xi_psi, Expr::one());
        }
    }

    #[test]
    fn rest_frame_rotation_matches_hand_formula() {
        let gs = generators(Rational::ZERO, 2).unwrap();
        let j2 = gs.field("J2").unwrap();
        let lam = Expr::lambda();
        assert_eq!(
            j2.xi_lambda,
            Expr::mu() * Expr::s_pow(-1) * Expr::sin(&lam).unwrap()
        );
        assert_eq!(j2.xi_mu, Expr::s() * Expr::cos(&lam).unwrap());
        assert!(j2.xi_psi.is_zero_expr());
    }

    #[test]
    fn truncation_minimum_is_enforced() {
        assert!(matches!(
            generators(Rational::ZERO, 1),
            Err(SbveError::TruncationTooSmall { n_max: 1 })
        ));
    }

    #[test]
    fn rotation_commutators_close_cyclically_at_omega_zero() {
        let gs = generators(Rational::ZERO, 2).unwrap();
        let j1 = gs.field("J1").unwrap();
        let j2 = gs.field("J2").unwrap();
        let j3 = gs.field("J3").unwrap();
        assert_eq!(&j1.commutator(j2), j3);
        assert_eq!(&j2.commutator(j3), j1);
        assert_eq!(&j3.commutator(j1), j2);
    }

    #[test]
    fn rotating_frame_commutators_involve_rotation_shift() {
        // [P, J2] = Omega * J3 in the rotating frame.
        let omega = Rational::from(1);
        let gs = generators(omega, 2).unwrap();
        let p = gs.field("P").unwrap();
        let j2 = gs.field("J2").unwrap();
        let j3 = gs.field("J3").unwrap();
        assert_eq!(p.commutator(j2), j3.scale(omega));
        // [D, J2] = 0 only with the corrected gauge coefficient.
        let d = gs.field("D").unwrap();
        let c = d.commutator(j2);
        assert!(c.is_zero_field(), "got {}", c.component(Var::Psi));
    }
}
