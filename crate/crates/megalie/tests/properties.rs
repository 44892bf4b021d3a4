//! Property tests for the algebraic laws the library is built on.

use megalie::exactalg::{
    is_automorphism, megaideal_closure, preserves_subspace, AutomorphismCheck, ClosureOptions,
    LieAlgebra, LinearMap, Matrix, Rational, Subspace,
};
use megalie::sbve::{build_truncated_algebra, discrete_symmetries, generators, pushforward_matrix};
use megalie::symvec::{pushforward, Expr, PointTransformation, Var, VectorField, DEFAULT_SEED};
use proptest::prelude::*;

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Rational::new(n as i128, d as i128))
}

fn subspace_strategy(ambient: usize) -> impl Strategy<Value = Subspace> {
    prop::collection::vec(
        prop::collection::vec(rational_strategy(), ambient),
        0..=ambient,
    )
    .prop_map(move |rows| Subspace::span_of_vectors(ambient, &rows))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subspace_sum_laws(
        a in subspace_strategy(5),
        b in subspace_strategy(5),
        c in subspace_strategy(5),
    ) {
        // commutative, associative, idempotent
        prop_assert_eq!(a.sum(&b).unwrap(), b.sum(&a).unwrap());
        prop_assert_eq!(
            a.sum(&b).unwrap().sum(&c).unwrap(),
            a.sum(&b.sum(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sum(&a).unwrap(), a.clone());
        // monotone: both summands embed in the sum
        let s = a.sum(&b).unwrap();
        prop_assert!(s.contains(&a));
        prop_assert!(s.contains(&b));
    }

    #[test]
    fn subspace_intersection_laws(
        a in subspace_strategy(5),
        b in subspace_strategy(5),
    ) {
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(a.intersect(&b).unwrap(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        prop_assert!(a.contains(&i));
        prop_assert!(b.contains(&i));
        // inclusion decided by reduction: i + a == a
        prop_assert_eq!(i.sum(&a).unwrap(), a.clone());
    }

    #[test]
    fn rref_preserves_row_space(
        rows in prop::collection::vec(prop::collection::vec(rational_strategy(), 4), 1..=4)
    ) {
        let m = Matrix::from_rows(rows);
        let r = m.rref();
        prop_assert_eq!(Subspace::span(&m), Subspace::span(&r));
        // idempotent
        prop_assert_eq!(r.rref(), r);
    }
}

/// Random small change of basis of the rest-frame algebra with gauge
/// degree 2, used to probe the automorphism checker.
fn small_sbve_algebra() -> LieAlgebra {
    build_truncated_algebra(&generators(Rational::ZERO, 2).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn failed_automorphism_checks_return_a_witness(
        diag in prop::collection::vec(1i64..=3, 8)
    ) {
        let g = small_sbve_algebra();
        let entries: Vec<Rational> = diag.iter().map(|&v| Rational::from(v)).collect();
        let m = LinearMap::diagonal(&entries);
        match is_automorphism(&g, &m).unwrap() {
            AutomorphismCheck::Automorphism => {
                // A diagonal automorphism of this algebra must fix the
                // rotation block scale: verify the claim on all pairs.
                for i in 0..g.dim() {
                    for j in 0..g.dim() {
                        let bracket: Vec<Rational> =
                            (0..g.dim()).map(|k| g.structure_constant(i, j, k)).collect();
                        let lhs = m.apply(&bracket).unwrap();
                        let rhs = g.bracket_element(&m.column(i), &m.column(j)).unwrap();
                        prop_assert_eq!(lhs, rhs);
                    }
                }
            }
            AutomorphismCheck::BracketMismatch { i, j, mapped_bracket, bracket_of_images } => {
                // The witness pair must actually witness the failure.
                prop_assert_ne!(mapped_bracket, bracket_of_images);
                prop_assert!(i < j);
            }
            AutomorphismCheck::Singular => prop_assert!(false, "diagonal with nonzero entries"),
        }
    }

    #[test]
    fn stabilizer_containments(
        i0 in subspace_strategy(8),
        i1 in subspace_strategy(8),
        i2 in subspace_strategy(8),
    ) {
        let g = small_sbve_algebra();
        let s = g.stabilizer(&i0, &i1, &i2).unwrap();
        // contained in i0
        prop_assert!(i0.contains(&s));
        // contains the relative centralizer (the i2 = 0 case)
        let c = g.centralizer(&i0, &i1).unwrap();
        prop_assert!(s.contains(&c));
        // vacuous condition keeps all of i0
        let bracket = g.bracket_subspace(&i0, &i1).unwrap();
        if i2.contains(&bracket) {
            prop_assert_eq!(s, i0);
        }
    }
}

#[test]
fn closure_output_is_invariant_under_mirror_push_maps() {
    let gs = generators(Rational::ZERO, 4).unwrap();
    let g = build_truncated_algebra(&gs).unwrap();
    let (s1, s2) = discrete_symmetries();
    let m1 = pushforward_matrix(&gs, &s1, DEFAULT_SEED).unwrap();
    let m2 = pushforward_matrix(&gs, &s2, DEFAULT_SEED).unwrap();
    let closure = megaideal_closure(&g, &[], ClosureOptions::default()).unwrap();
    for found in &closure.found {
        for (name, m) in [("sigma1", &m1), ("sigma2", &m2)] {
            assert!(
                preserves_subspace(m, &found.subspace).unwrap(),
                "{name} must preserve {} ({})",
                found.subspace.describe(&g.labels().to_vec()),
                found.expr
            );
        }
    }
}

/// Small random expressions for calculus laws. Depth is kept low; the
/// canonical form grows quickly under products.
fn expr_strategy() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        rational_strategy().prop_map(Expr::from_rational),
        Just(Expr::t()),
        Just(Expr::mu()),
        Just(Expr::psi()),
        Just(Expr::s()),
        Just(Expr::s_pow(-1)),
        Just(Expr::sin(&Expr::lambda()).unwrap()),
        Just(Expr::cos(&(Expr::lambda() + Expr::param("Omega") * Expr::t())).unwrap()),
    ];
    prop::collection::vec(leaf, 1..=3).prop_map(|leaves| {
        let mut product = Expr::one();
        for l in leaves {
            product = product * l;
        }
        product
    })
}

fn var_strategy() -> impl Strategy<Value = Var> {
    prop_oneof![Just(Var::T), Just(Var::Lambda), Just(Var::Mu), Just(Var::Psi)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn differentiation_is_linear(
        e in expr_strategy(),
        f in expr_strategy(),
        r in rational_strategy(),
        v in var_strategy(),
    ) {
        let lhs = (e.clone().scale(r) + f.clone()).differentiate(v);
        let rhs = e.differentiate(v).scale(r) + f.differentiate(v);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_rule_holds_symbolically(
        e in expr_strategy(),
        f in expr_strategy(),
        v in var_strategy(),
    ) {
        let d_product = (e.clone() * f.clone()).differentiate(v);
        let expanded = e.differentiate(v) * f.clone() + e * f.differentiate(v);
        prop_assert!((d_product - expanded).is_zero_expr());
    }
}

fn sbve_generator_fields() -> Vec<VectorField> {
    generators(Rational::ZERO, 3).unwrap().fields()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutator_is_bilinear_and_antisymmetric(
        i in 0usize..9,
        j in 0usize..9,
        r in rational_strategy(),
    ) {
        let fields = sbve_generator_fields();
        let (x, y) = (&fields[i], &fields[j]);
        let lhs = x.scale(r).commutator(y);
        let rhs = x.commutator(y).scale(r);
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(x.commutator(y), y.commutator(x).neg());
    }

    #[test]
    fn jacobi_identity_on_generators(
        i in 0usize..9,
        j in 0usize..9,
        k in 0usize..9,
    ) {
        let fields = sbve_generator_fields();
        let (x, y, z) = (&fields[i], &fields[j], &fields[k]);
        let cyclic = x
            .commutator(&y.commutator(z))
            .add(&y.commutator(&z.commutator(x)))
            .add(&z.commutator(&x.commutator(y)));
        prop_assert!(cyclic.is_zero_field());
    }
}

fn transformation_pool() -> Vec<PointTransformation> {
    use megalie::sbve::omega_elimination;
    let (s1, s2) = discrete_symmetries();
    let eq2 = omega_elimination().instantiate("Omega", Rational::new(2, 3));
    vec![PointTransformation::identity(), s1, s2, eq2]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pushforward_is_functorial(
        field_idx in 0usize..9,
        a in 0usize..4,
        b in 0usize..4,
    ) {
        let fields = sbve_generator_fields();
        let pool = transformation_pool();
        let x = &fields[field_idx];
        let (t1, t2) = (&pool[a], &pool[b]);
        let composed = t2.compose(t1).unwrap();
        let direct = pushforward(x, &composed, DEFAULT_SEED).unwrap();
        let staged = pushforward(
            &pushforward(x, t1, DEFAULT_SEED).unwrap(),
            t2,
            DEFAULT_SEED,
        ).unwrap();
        prop_assert_eq!(direct, staged);
    }

    #[test]
    fn pushforward_preserves_commutators(
        i in 0usize..9,
        j in 0usize..9,
        which in 0usize..2,
    ) {
        let fields = sbve_generator_fields();
        let (s1, s2) = discrete_symmetries();
        let tr = if which == 0 { s1 } else { s2 };
        let lhs = pushforward(&fields[i].commutator(&fields[j]), &tr, DEFAULT_SEED).unwrap();
        let rhs = pushforward(&fields[i], &tr, DEFAULT_SEED)
            .unwrap()
            .commutator(&pushforward(&fields[j], &tr, DEFAULT_SEED).unwrap());
        prop_assert!(lhs.sub(&rhs).is_zero_field());
    }
}

#[test]
fn conjugated_algebras_stay_valid() {
    // Jacobi survives an exact change of basis; the validator re-checks it.
    let g = small_sbve_algebra();
    let n = g.dim();
    let mut t = Matrix::identity(n);
    t[(0, 1)] = Rational::new(3, 2);
    t[(5, 0)] = Rational::from(-2);
    let t_inv = t.inverse().unwrap();
    let mut c = vec![vec![vec![Rational::ZERO; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            let fi: Vec<Rational> = (0..n).map(|r| t[(r, i)]).collect();
            let fj: Vec<Rational> = (0..n).map(|r| t[(r, j)]).collect();
            let coords = t_inv.mul_vec(&g.bracket_element(&fi, &fj).unwrap()).unwrap();
            for k in 0..n {
                c[i][j][k] = coords[k];
            }
        }
    }
    assert!(LieAlgebra::new(g.labels().to_vec(), c).is_ok());
}
