use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use wicket_core::dilatation::family_polynomial;
use wicket_core::linalg::{
    cauchy_bound, largest_real_root, smith_normal_form, IntMatrix, IntPoly, SturmSequence,
};
use wicket_core::train_track::{family_incidence_matrix, w6_incidence_matrix};

/// Determinant by fraction-free elimination, as an independent check on
/// the constant term of the characteristic polynomial and on SNF.
fn bareiss_det(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn square(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max).prop_flat_map(|d| prop::collection::vec(prop::collection::vec(-6i64..=6, d), d))
}

proptest! {
    #[test]
    fn cayley_hamilton_on_random_matrices(rows in square(6)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        prop_assert!(m.satisfies_cayley_hamilton().unwrap());
    }

    #[test]
    fn char_poly_constant_term_is_signed_determinant(rows in square(6)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let p = m.char_poly().unwrap();
        let d = rows.len();
        let det = bareiss_det(&rows);
        let expected = if d % 2 == 0 { det } else { -det };
        prop_assert_eq!(p.coeff(0), expected);
        prop_assert!(p.is_monic());
        prop_assert_eq!(p.degree(), Some(d));
    }

    #[test]
    fn smith_form_divisibility_and_determinant(rows in square(5)) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let snf = smith_normal_form(&m);
        for w in snf.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
        prop_assert!(snf.invariant_factors.iter().all(|d| d.is_positive()));
        let det = bareiss_det(&rows);
        if det.is_zero() {
            prop_assert!(snf.rank() < rows.len());
        } else {
            prop_assert_eq!(snf.rank(), rows.len());
            let prod: BigInt = snf.invariant_factors.iter().product();
            prop_assert_eq!(prod, det.abs());
        }
    }

    #[test]
    fn smith_form_rank_matches_transpose(rows in (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-5i64..=5, c), r)
    })) {
        let m = IntMatrix::from_rows(&rows).unwrap();
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&m.transpose());
        prop_assert_eq!(&a.invariant_factors, &b.invariant_factors);
        prop_assert_eq!(a.free_rank + a.invariant_factors.len(), m.cols());
    }

    #[test]
    fn largest_root_of_product_of_linear_factors(roots in prop::collection::vec(-20i64..=20, 1..6)) {
        let mut p = IntPoly::one();
        for &r in &roots {
            p = &p * &IntPoly::from_i64(&[-r, 1]);
        }
        let b = largest_real_root(&p, 1e-10).unwrap();
        let top = *roots.iter().max().unwrap() as f64;
        prop_assert!(b.contains(top));
        prop_assert!(b.width_f64() <= 1e-10);
        let distinct: std::collections::BTreeSet<_> = roots.iter().collect();
        prop_assert_eq!(SturmSequence::new(&p.squarefree_part()).count_real(), distinct.len());
    }
}

#[test]
fn cayley_hamilton_for_constructed_matrices() {
    assert!(w6_incidence_matrix().satisfies_cayley_hamilton().unwrap());
    for n in 0..=5 {
        assert!(
            family_incidence_matrix(n)
                .satisfies_cayley_hamilton()
                .unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn exactly_one_root_above_one_for_n_up_to_50() {
    let one = BigRational::one();
    for n in 0..=50 {
        let p = family_polynomial(n).squarefree_part();
        let bound = cauchy_bound(&p);
        let sturm = SturmSequence::new(&p);
        assert_eq!(sturm.count_between(&one, &bound), 1, "n={n}");
    }
}

#[test]
fn family_polynomials_are_palindromic_with_double_root_at_one() {
    for n in 0..=30 {
        let p = family_polynomial(n);
        assert!(p.is_palindromic(), "n={n}");
        assert_eq!(p.eval_bigint(&BigInt::one()), BigInt::zero());
        assert_eq!(p.derivative().eval_bigint(&BigInt::one()), BigInt::zero());
        assert_eq!(p.sign_variations(), 4);
    }
}
