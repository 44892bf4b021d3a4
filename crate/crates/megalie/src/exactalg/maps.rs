//! Linear maps on algebra coordinates: automorphism checking, megaideal
//! preservation, and extraction of the constraint coefficients that a
//! symmetry candidate must satisfy on the vorticity-equation algebra.

use super::algebra::LieAlgebra;
use super::matrix::Matrix;
use super::rational::Rational;
use super::subspace::Subspace;
use super::ExactAlgError;

/// Square matrix acting on algebra coordinates; column `j` is the image of
/// basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Result<LinearMap, ExactAlgError> {
        if matrix.rows() != matrix.cols() {
            return Err(ExactAlgError::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        Ok(LinearMap { matrix })
    }

    pub fn identity(n: usize) -> LinearMap {
        LinearMap {
            matrix: Matrix::identity(n),
        }
    }

    /// Diagonal map, one scalar per basis element.
    pub fn diagonal(entries: &[Rational]) -> LinearMap {
        let mut m = Matrix::zero(entries.len(), entries.len());
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        LinearMap { matrix: m }
    }

    /// Build from basis images: `images[j]` is the coordinate vector of the
    /// image of basis element `j`.
    pub fn from_images(images: &[Vec<Rational>]) -> Result<LinearMap, ExactAlgError> {
        let n = images.len();
        let mut m = Matrix::zero(n, n);
        for (j, img) in images.iter().enumerate() {
            if img.len() != n {
                return Err(ExactAlgError::DimensionMismatch {
                    context: "linear map from images",
                    left: n,
                    right: img.len(),
                });
            }
            for i in 0..n {
                m[(i, j)] = img[i];
            }
        }
        Ok(LinearMap { matrix: m })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, ExactAlgError> {
        self.matrix.mul_vec(v)
    }

    /// Image of basis element `j` as a coordinate vector.
    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.dim()).map(|i| self.matrix[(i, j)]).collect()
    }

    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap, ExactAlgError> {
        Ok(LinearMap {
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        self.matrix.inverse().map(|matrix| LinearMap { matrix })
    }
}

/// Verdict of the automorphism check, with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomorphismCheck {
    Automorphism,
    Singular,
    /// `m[e_i, e_j] != [m e_i, m e_j]`; both sides are reported.
    BracketMismatch {
        i: usize,
        j: usize,
        mapped_bracket: Vec<Rational>,
        bracket_of_images: Vec<Rational>,
    },
}

impl AutomorphismCheck {
    pub fn is_automorphism(&self) -> bool {
        matches!(self, AutomorphismCheck::Automorphism)
    }
}

/// `m` is an automorphism iff it is invertible and `m[x,y] = [mx,my]` for
/// all basis pairs, exactly.
pub fn is_automorphism(g: &LieAlgebra, m: &LinearMap) -> Result<AutomorphismCheck, ExactAlgError> {
    if m.dim() != g.dim() {
        return Err(ExactAlgError::DimensionMismatch {
            context: "automorphism check",
            left: g.dim(),
            right: m.dim(),
        });
    }
    if m.inverse().is_none() {
        return Ok(AutomorphismCheck::Singular);
    }
    let n = g.dim();
    let columns: Vec<Vec<Rational>> = (0..n).map(|j| m.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut basis_bracket = vec![Rational::ZERO; n];
            for k in 0..n {
                basis_bracket[k] = g.structure_constant(i, j, k);
            }
            let mapped_bracket = m.apply(&basis_bracket)?;
            let bracket_of_images = g.bracket_element(&columns[i], &columns[j])?;
            if mapped_bracket != bracket_of_images {
                return Ok(AutomorphismCheck::BracketMismatch {
                    i,
                    j,
                    mapped_bracket,
                    bracket_of_images,
                });
            }
        }
    }
    Ok(AutomorphismCheck::Automorphism)
}

/// `m` sends `s` into itself: every image of a basis row reduces to zero
/// against the canonical basis of `s`.
pub fn preserves_subspace(m: &LinearMap, s: &Subspace) -> Result<bool, ExactAlgError> {
    if m.dim() != s.ambient() {
        return Err(ExactAlgError::DimensionMismatch {
            context: "subspace preservation",
            left: m.dim(),
            right: s.ambient(),
        });
    }
    for row in s.basis_rows() {
        if !s.contains_vector(&m.apply(row)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients forced on a symmetry candidate by megaideal invariance on
/// the truncated vorticity-equation algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstraintCoefficients {
    /// Image of `Z0` is `c * Z0`.
    pub c: Rational,
    /// Image of `Z1` is `d1 * Z1 + d0 * Z0`.
    pub d0: Rational,
    pub d1: Rational,
    /// Coefficient of `P` in the image of `P`.
    pub a1: Rational,
    /// 3x3 block on the rotation triple; special orthogonal.
    pub b: Matrix,
}

/// Which invariance condition a candidate map violated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstraintViolation {
    /// Image of `Z0` is not a nonzero multiple of `Z0`.
    GaugeBase,
    /// Image of `Z1` is not `d1*Z1 + d0*Z0` with `d1 != 0`.
    GaugeLine,
    /// Image of `P` leaves `span{P} + Z`-tower, or has zero `P`-part.
    TimeTranslation,
    /// Rotation block leaves `span{J1,J2,J3}` or is not special orthogonal.
    RotationBlock,
    /// `a1 * d1 != c`.
    ScalingRelation,
}

impl std::fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            ConstraintViolation::GaugeBase => "image of Z0 must be c*Z0 with c != 0",
            ConstraintViolation::GaugeLine => "image of Z1 must be d1*Z1 + d0*Z0 with d1 != 0",
            ConstraintViolation::TimeTranslation => {
                "image of P must be a1*P plus gauge terms with a1 != 0"
            }
            ConstraintViolation::RotationBlock => {
                "rotation triple must map to itself by a special orthogonal block"
            }
            ConstraintViolation::ScalingRelation => "bracket-forced relation a1*d1 = c violated",
        };
        write!(f, "{name}")
    }
}

/// Index layout of the labelled vorticity-algebra basis.
struct SbveLayout {
    d: usize,
    p: usize,
    j: [usize; 3],
    z: Vec<usize>,
}

fn sbve_layout(g: &LieAlgebra) -> Result<SbveLayout, ExactAlgError> {
    let find = |name: &str| {
        g.labels()
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| ExactAlgError::SchemaError {
                message: format!("label {name:?} missing from algebra"),
            })
    };
    let d = find("D")?;
    let p = find("P")?;
    let j = [find("J1")?, find("J2")?, find("J3")?];
    let mut z = Vec::new();
    loop {
        let name = format!("Z{}", z.len());
        match g.labels().iter().position(|l| l == &name) {
            Some(idx) => z.push(idx),
            None => break,
        }
    }
    if z.len() < 2 || 5 + z.len() != g.dim() {
        return Err(ExactAlgError::SchemaError {
            message: format!(
                "label set does not form a D,P,J1..J3,Z0..ZN basis (dim {})",
                g.dim()
            ),
        });
    }
    Ok(SbveLayout { d, p, j, z })
}

/// Verify the megaideal-invariance conditions on a candidate map over the
/// labelled truncated algebra and extract the forced coefficients.
pub fn extract_constraint_coefficients(
    g: &LieAlgebra,
    m: &LinearMap,
) -> Result<Result<ConstraintCoefficients, ConstraintViolation>, ExactAlgError> {
    if m.dim() != g.dim() {
        return Err(ExactAlgError::DimensionMismatch {
            context: "constraint extraction",
            left: g.dim(),
            right: m.dim(),
        });
    }
    let layout = sbve_layout(g)?;

    // Image of Z0 = c * Z0, c != 0.
    let z0_img = m.column(layout.z[0]);
    let c = z0_img[layout.z[0]];
    let z0_clean = z0_img
        .iter()
        .enumerate()
        .all(|(k, v)| k == layout.z[0] || v.is_zero());
    if c.is_zero() || !z0_clean {
        return Ok(Err(ConstraintViolation::GaugeBase));
    }

    // Image of Z1 = d1 * Z1 + d0 * Z0, d1 != 0.
    let z1_img = m.column(layout.z[1]);
    let d1 = z1_img[layout.z[1]];
    let d0 = z1_img[layout.z[0]];
    let z1_clean = z1_img
        .iter()
        .enumerate()
        .all(|(k, v)| k == layout.z[0] || k == layout.z[1] || v.is_zero());
    if d1.is_zero() || !z1_clean {
        return Ok(Err(ConstraintViolation::GaugeLine));
    }

    // Image of P = a1 * P + gauge tower, a1 != 0.
    let p_img = m.column(layout.p);
    let a1 = p_img[layout.p];
    let p_clean = p_img
        .iter()
        .enumerate()
        .all(|(k, v)| k == layout.p || layout.z.contains(&k) || v.is_zero());
    if a1.is_zero() || !p_clean {
        return Ok(Err(ConstraintViolation::TimeTranslation));
    }
    let _ = layout.d;

    // Rotation block: images of J land in span{J} with B^T B = I, det B = 1.
    let mut b = Matrix::zero(3, 3);
    for (col, &jc) in layout.j.iter().enumerate() {
        let img = m.column(jc);
        let clean = img
            .iter()
            .enumerate()
            .all(|(k, v)| layout.j.contains(&k) || v.is_zero());
        if !clean {
            return Ok(Err(ConstraintViolation::RotationBlock));
        }
        for (row, &jr) in layout.j.iter().enumerate() {
            b[(row, col)] = img[jr];
        }
    }
    let orthogonal = b.transpose().mul(&b)? == Matrix::identity(3);
    if !orthogonal || b.determinant()? != Rational::ONE {
        return Ok(Err(ConstraintViolation::RotationBlock));
    }

    if a1 * d1 != c {
        return Ok(Err(ConstraintViolation::ScalingRelation));
    }

    Ok(Ok(ConstraintCoefficients { c, d0, d1, a1, b }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn so3() -> LieAlgebra {
        let mut c = vec![vec![vec![Rational::ZERO; 3]; 3]; 3];
        for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            c[i][j][k] = Rational::ONE;
            c[j][i][k] = Rational::from(-1);
        }
        LieAlgebra::new(vec!["J1".into(), "J2".into(), "J3".into()], c).unwrap()
    }

    #[test]
    fn identity_is_automorphism() {
        let g = so3();
        let id = LinearMap::identity(3);
        assert!(is_automorphism(&g, &id).unwrap().is_automorphism());
    }

    #[test]
    fn singular_map_is_rejected_with_reason() {
        let g = so3();
        let m = LinearMap::diagonal(&[Rational::ONE, Rational::ZERO, Rational::ONE]);
        assert_eq!(is_automorphism(&g, &m).unwrap(), AutomorphismCheck::Singular);
    }

    #[test]
    fn scaling_breaks_so3_brackets_with_witness() {
        let g = so3();
        let m = LinearMap::diagonal(&[Rational::from(2), Rational::ONE, Rational::ONE]);
        match is_automorphism(&g, &m).unwrap() {
            AutomorphismCheck::BracketMismatch { i, j, .. } => assert_eq!((i, j), (0, 1)),
            other => panic!("expected mismatch, got {other:?}"),
        }
    }

    #[test]
    fn preservation_checks() {
        let full = Subspace::full(2);
        let e1 = Subspace::coordinate_span(2, &[0]);
        let swap = LinearMap::new(Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap();
        assert!(preserves_subspace(&swap, &full).unwrap());
        assert!(!preserves_subspace(&swap, &e1).unwrap());
    }
}
