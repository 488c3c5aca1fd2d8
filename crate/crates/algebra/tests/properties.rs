//! Property suites for the exact arithmetic layer.

use std::cmp::Ordering;

use ballq_algebra::{
    parse_polynomial, FpMatrix, GaussianRational, Monomial, PrimeField, SparsePolynomial,
    VariableFrame,
};
use proptest::prelude::*;

fn arb_gaussian_rational() -> impl Strategy<Value = GaussianRational> {
    (-50i64..50, -50i64..50, 1i64..20)
        .prop_map(|(a, b, d)| GaussianRational::from_parts(a, b, d))
}

fn arb_poly(frame: std::sync::Arc<VariableFrame>) -> impl Strategy<Value = SparsePolynomial> {
    let n = frame.len();
    prop::collection::vec(
        (prop::collection::vec(0u16..4, n), arb_gaussian_rational()),
        0..6,
    )
    .prop_map(move |terms| {
        SparsePolynomial::from_terms(
            frame.clone(),
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::new(e), c))
                .collect(),
        )
        .unwrap()
    })
}

fn arb_monomial(n: usize) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..5, n).prop_map(Monomial::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_rational_field_axioms(
        a in arb_gaussian_rational(),
        b in arb_gaussian_rational(),
        c in arb_gaussian_rational(),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv()).is_one());
        }
    }

    #[test]
    fn reduce_mod_is_ring_homomorphism(seed_f in 0u64..1000, seed_g in 0u64..1000) {
        let frame = VariableFrame::numbered("x", 4);
        let field = PrimeField::default_field();
        let f = pseudo_poly(&frame, seed_f);
        let g = pseudo_poly(&frame, seed_g);
        let lhs_mul = f.mul(&g).reduce_mod(&field).unwrap();
        let rhs_mul = f.reduce_mod(&field).unwrap().mul(&g.reduce_mod(&field).unwrap());
        prop_assert_eq!(lhs_mul, rhs_mul);
        let lhs_add = f.add(&g).reduce_mod(&field).unwrap();
        let rhs_add = f.reduce_mod(&field).unwrap().add(&g.reduce_mod(&field).unwrap());
        prop_assert_eq!(lhs_add, rhs_add);
    }

    #[test]
    fn degrevlex_total_multiplicative_degree_compatible(
        a in arb_monomial(5),
        b in arb_monomial(5),
        c in arb_monomial(5),
    ) {
        let w = vec![1u32; 5];
        // totality and antisymmetry
        let ab = a.cmp_degrevlex(&b, &w);
        let ba = b.cmp_degrevlex(&a, &w);
        prop_assert_eq!(ab, ba.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        // multiplicativity
        let ac = a.mul(&c);
        let bc = b.mul(&c);
        prop_assert_eq!(ac.cmp_degrevlex(&bc, &w), ab);
        // degree compatibility
        if a.total_degree() > b.total_degree() {
            prop_assert_eq!(ab, Ordering::Greater);
        }
        // transitivity spot check
        let bcmp = b.cmp_degrevlex(&c, &w);
        if ab != Ordering::Less && bcmp != Ordering::Less {
            prop_assert!(a.cmp_degrevlex(&c, &w) != Ordering::Less);
        }
    }

    #[test]
    fn evaluation_is_ring_homomorphism(seed_f in 0u64..1000, seed_g in 0u64..1000, seed_p in 0u64..1000) {
        let frame = VariableFrame::numbered("x", 4);
        let f = pseudo_poly(&frame, seed_f);
        let g = pseudo_poly(&frame, seed_g);
        let point: Vec<GaussianRational> = (0..4)
            .map(|k| {
                let s = seed_p.wrapping_mul(31).wrapping_add(k * 17) % 13;
                GaussianRational::from_parts(s as i64 - 6, (s as i64) % 3, 1 + (s as i64 % 4))
            })
            .collect();
        let lhs = f.mul(&g).evaluate(&point).unwrap();
        let rhs = &f.evaluate(&point).unwrap() * &g.evaluate(&point).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

fn pseudo_poly(frame: &std::sync::Arc<VariableFrame>, seed: u64) -> SparsePolynomial {
    // deterministic small polynomial from a seed
    let mut terms = Vec::new();
    let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    let nterms = (s % 5) as usize + 1;
    for _ in 0..nterms {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let exps: Vec<u16> = (0..frame.len())
            .map(|k| ((s >> (8 * k)) % 3) as u16)
            .collect();
        let a = ((s >> 13) % 19) as i64 - 9;
        let b = ((s >> 27) % 19) as i64 - 9;
        let d = ((s >> 41) % 6) as i64 + 1;
        terms.push((Monomial::new(exps), GaussianRational::from_parts(a, b, d)));
    }
    SparsePolynomial::from_terms(frame.clone(), terms).unwrap()
}

#[test]
fn rank_equals_transpose_rank_on_random_matrices() {
    // deterministic xorshift fill, sizes up to 500 x 500 (one large case)
    let field = PrimeField::default_field();
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for &(r, c) in &[(5usize, 8usize), (30, 17), (64, 64), (120, 80), (500, 500)] {
        let mut m = FpMatrix::zero(field.clone(), r, c);
        for i in 0..r {
            for j in 0..c {
                // sparse-ish fill
                let v = next();
                if v % 4 == 0 {
                    m.set(i, j, v % 101);
                }
            }
        }
        assert_eq!(m.rank(), m.transpose().rank(), "size {r}x{c}");
    }
}

#[test]
fn evaluate_table_style_equation() {
    // -2W1^2 + W2W3 + W0W7 at (1,1,1,2,0,0,0,0) evaluates to 0
    let frame = VariableFrame::new(
        (0..8).map(|k| format!("W{k}")).collect(),
        vec![1, 2, 2, 2, 3, 3, 3, 3],
    )
    .unwrap();
    let p = parse_polynomial(&frame, "-2W1^2 + W2 W3 + W0 W7").unwrap();
    let point: Vec<GaussianRational> = [1, 1, 1, 2, 0, 0, 0, 0]
        .iter()
        .map(|&v| GaussianRational::from_int(v))
        .collect();
    assert!(p.evaluate(&point).unwrap().is_zero());
}
