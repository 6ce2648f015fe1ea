use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nilpotent_forms::forms::{n0_space, random_tuple, FormTuple};
use nilpotent_forms::grassmann::{basis_from_plucker, check_plucker_relations, plucker};
use nilpotent_forms::group::{GroupElement, GroupPresentation};
use nilpotent_forms::isotropy::{bound_k, bound_s, greedy_isotropic, is_isotropic};
use nilpotent_forms::lie::{random_subspace, LieAlgebra2};
use nilpotent_forms::linalg::{
    enumerate_subspaces, gaussian_binomial, kernel_basis, Field, Matrix, PrimeField, Rationals, Subspace,
};

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, cols), rows)
        .prop_map(|r| Matrix::from_i64(&Rationals, &r))
}

fn alternating(n: usize) -> impl Strategy<Value = Matrix<Rationals>> {
    prop::collection::vec(-4i64..=4, n * (n - 1) / 2).prop_map(move |c| {
        let mut m = vec![vec![0i64; n]; n];
        let mut it = c.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().unwrap();
                m[i][j] = v;
                m[j][i] = -v;
            }
        }
        Matrix::from_i64(&Rationals, &m)
    })
}

fn invertible(t: usize, seed: u64) -> Matrix<Rationals> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<Vec<i64>> = (0..t).map(|_| (0..t).map(|_| rng.random_range(-3..=3)).collect()).collect();
        let m = Matrix::from_i64(&Rationals, &rows);
        if m.rank() == t {
            return m;
        }
    }
}

fn shape() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=6).prop_flat_map(|n| (Just(n), 1..=(n * (n - 1) / 2).min(4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rref_is_idempotent(m in small_matrix(4, 5)) {
        let once = m.rref().reduced;
        prop_assert_eq!(once.rref().reduced, once.clone());
    }

    #[test]
    fn row_and_column_rank_agree(m in small_matrix(3, 5)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn pfaffian_transforms_by_determinant(a in alternating(4), c in small_matrix(4, 4)) {
        let transformed = c.transpose().mul(&a).unwrap().mul(&c).unwrap();
        let lhs = transformed.pfaffian().unwrap();
        let rhs = c.determinant().unwrap() * a.pfaffian().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pfaffian_squares_to_determinant(a in alternating(6)) {
        let pf = a.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, a.determinant().unwrap());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in small_matrix(3, 6)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(k.dim() + m.rank(), 6);
        for v in k.vectors() {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn subspace_ignores_spanning_set(m in small_matrix(3, 5), c in small_matrix(3, 3)) {
        prop_assume!(c.rank() == 3);
        let mixed = c.mul(&m).unwrap();
        prop_assert_eq!(Subspace::row_space(&m), Subspace::row_space(&mixed));
    }

    #[test]
    fn change_basis_keeps_span((n, t) in shape(), seed in any::<u64>()) {
        let phi = random_tuple(n, t, 6, seed).unwrap();
        let psi = phi.change_basis(&invertible(t, seed ^ 1)).unwrap();
        prop_assert!(phi.spans_equal(&psi).unwrap());
        let (l, l2) = (LieAlgebra2::new(phi).unwrap(), LieAlgebra2::new(psi).unwrap());
        prop_assert_eq!(l.center_dim(), l2.center_dim());
    }

    #[test]
    fn n0_has_expected_dimension(n in 2usize..=6, k in 0usize..=3, seed in any::<u64>()) {
        prop_assume!(k <= n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_subspace(&mut rng, n, k, 3);
        prop_assume!(u.dim() == k);
        let n0 = n0_space(&u);
        let m = n - k;
        prop_assert_eq!(n0.dim(), m * m.saturating_sub(1) / 2);
        let sample = FormTuple::from_coordinate_rows(&Rationals, n, n0.basis()).unwrap();
        let e = |a: usize| { let mut v = vec![q(0); n]; v[a] = q(1); v };
        for f in sample.forms() {
            for a in 0..n {
                for uv in u.vectors() {
                    prop_assert!(f.evaluate(&e(a), uv).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn bracket_is_bilinear_and_class_two((n, t) in shape(), seed in any::<u64>(), c in -5i64..=5) {
        use rand::Rng;
        let l = LieAlgebra2::new(random_tuple(n, t, 6, seed).unwrap()).unwrap();
        let f = Rationals;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 2);
        let mut el = || l.element(
            (0..n).map(|_| q(rng.random_range(-5..=5))).collect(),
            (0..t).map(|_| q(rng.random_range(-5..=5))).collect(),
        ).unwrap();
        let (x, y, z) = (el(), el(), el());
        let lhs = l.bracket(&x.add(&f, &y.scale(&f, &q(c))), &z).unwrap();
        let rhs = l.bracket(&x, &z).unwrap().add(&f, &l.bracket(&y, &z).unwrap().scale(&f, &q(c)));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(l.bracket(&x, &y).unwrap(), l.bracket(&y, &x).unwrap().neg(&f));
        let xy = l.bracket(&x, &y).unwrap();
        prop_assert!(l.bracket(&xy, &z).unwrap().is_zero(&f));
        prop_assert!(xy.v.iter().all(Zero::is_zero));
    }

    #[test]
    fn certificates_ignore_basis_of_span(seed in any::<u64>(), t in 2usize..=4) {
        let (n, n0, t0) = (5, 3, 1);
        let phi = random_tuple(n, t, 4, seed).unwrap();
        let psi = phi.change_basis(&invertible(t, seed ^ 3)).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_subspace(&mut rng, n, n - n0, 2);
        prop_assume!(u.dim() == n - n0);
        let a = LieAlgebra2::new(phi).unwrap().ms_certificate(&u, n0, t0).unwrap();
        let b = LieAlgebra2::new(psi).unwrap().ms_certificate(&u, n0, t0).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn large_t_certifies_every_subspace(seed in any::<u64>()) {
        // N0(U) and span Φ are forced to meet in dimension at least t + N0 - N
        let (n, n0, t0, t) = (4, 3, 1, 4);
        let l = LieAlgebra2::new(random_tuple(n, t, 5, seed).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_subspace(&mut rng, n, n - n0, 3);
        prop_assume!(u.dim() == n - n0);
        prop_assert!(l.ms_certificate(&u, n0, t0).unwrap());
    }

    #[test]
    fn quotient_keeps_the_complementary_forms(seed in any::<u64>(), t in 2usize..=4) {
        let n = 5;
        let l = LieAlgebra2::new(random_tuple(n, t, 5, seed).unwrap()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = random_subspace(&mut rng, t, 1, 3);
        let quotient = l.quotient_central(&h).unwrap();
        prop_assert_eq!(quotient.t(), t - 1);
        // forms of the quotient are exactly the forms of Φ annihilated by h
        let hv: Vec<BigRational> = h.vectors().next().unwrap().to_vec();
        let f = Rationals;
        for form in quotient.phi().forms() {
            let stacked = l.phi().vectorization().vstack(&Matrix::from_rows(&f, form.coordinates().len(), vec![form.coordinates()]).unwrap()).unwrap();
            prop_assert_eq!(stacked.rank(), t);
        }
        let combos = l.phi().vectorization().transpose();
        let annihilated = kernel_basis(&Matrix::from_rows(&f, t, vec![hv]).unwrap());
        let projected: Vec<Vec<BigRational>> = annihilated
            .vectors()
            .map(|c| combos.mul_vec(c).unwrap())
            .collect();
        let expected = Subspace::span(&f, combos.rows(), projected).unwrap();
        prop_assert_eq!(quotient.phi().span(), expected);
    }

    #[test]
    fn group_laws(seed in any::<u64>(), a in prop::collection::vec(-9i64..=9, 12), b in prop::collection::vec(-9i64..=9, 6)) {
        let gp = GroupPresentation::new(random_tuple(4, 2, 5, seed).unwrap()).unwrap();
        let g = gp.element_i64(&a[0..4], &b[0..2]).unwrap();
        let h = gp.element_i64(&a[4..8], &b[2..4]).unwrap();
        let k = gp.element_i64(&a[8..12], &b[4..6]).unwrap();
        let m = |x: &GroupElement, y: &GroupElement| -> GroupElement { gp.multiply(x, y).unwrap() };
        prop_assert_eq!(m(&m(&g, &h), &k), m(&g, &m(&h, &k)));
        prop_assert!(m(&g, &gp.inverse(&g).unwrap()).is_identity());
        let direct = m(&m(&gp.inverse(&g).unwrap(), &gp.inverse(&h).unwrap()), &m(&g, &h));
        prop_assert_eq!(gp.commutator(&g, &h).unwrap(), direct);
        let lhs = gp.malcev_map(&m(&g, &h)).unwrap();
        let rhs = gp.bch_mul(&gp.malcev_map(&g).unwrap(), &gp.malcev_map(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(gp.parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn plucker_round_trip(seed in any::<u64>(), n in 3usize..=6, k in 1usize..=3) {
        prop_assume!(k < n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_subspace(&mut rng, n, k, 4);
        prop_assume!(u.dim() == k);
        let p = plucker(&u).unwrap();
        prop_assert!(check_plucker_relations(&p));
        prop_assert_eq!(basis_from_plucker(&p).unwrap(), u);
    }

    #[test]
    fn bound_s_exceeds_bound_k_by_t(n in 2usize..=40, t in 2usize..=40) {
        prop_assume!(t <= n * (n - 1) / 2);
        prop_assert_eq!(bound_s(n, t).unwrap(), bound_k(n, t).unwrap() + t);
    }

    #[test]
    fn greedy_meets_its_guarantee((n, t) in shape(), seed in any::<u64>()) {
        let phi = random_tuple(n, t, 10, seed).unwrap();
        let cert = greedy_isotropic(&phi, seed, 3).unwrap();
        prop_assert!(cert.verified);
        prop_assert!(is_isotropic(&phi, &cert.subspace));
        prop_assert!(cert.dim() >= n.div_ceil(t + 1));
    }
}

#[test]
fn enumeration_matches_gaussian_binomials() {
    for p in [2u64, 3, 5] {
        let fp = PrimeField::new(p).unwrap();
        for n in 1..=4 {
            for k in 0..=n {
                let subs: Vec<Subspace<PrimeField>> = enumerate_subspaces(&fp, n, k, 1_000_000).unwrap().collect();
                let expected = gaussian_binomial(n, k, p).to_usize().unwrap();
                assert_eq!(subs.len(), expected, "p={p} n={n} k={k}");
                let mut dedup = subs.clone();
                dedup.sort_by_key(|s| s.to_string());
                dedup.dedup();
                assert_eq!(dedup.len(), expected);
                assert!(subs.iter().all(|s| s.dim() == k && fp.characteristic() == p));
            }
        }
    }
}
