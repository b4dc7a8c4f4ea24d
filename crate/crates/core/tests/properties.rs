use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use coxgrowth::catalog::{catalog, Source};
use coxgrowth::coxeter::enumerate_finite_subsets;
use coxgrowth::growth::recursion::{
    block_product_derivatives, block_product_derivatives_recursive, inverse_derivatives, signed_subset_sums,
    signed_subset_sums_brute,
};
use coxgrowth::growth::{steinberg_series, taylor_coefficients};
use coxgrowth::poly::{block, block_product, cyclotomic, divisors, sturm_real_roots, Bound, IntPolynomial};
use coxgrowth::spectral::minus_one_multiplicity;
use coxgrowth::{classify_finite, CoxeterSystem, Entry, RationalFunction};

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

fn blocks_strategy() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(2u32..=12, 1..=8)
}

fn poly_strategy() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-20i64..=20, 1..8).prop_map(|c| IntPolynomial::from_i64(&c))
}

fn exceed(blocks: &[u32], k: u32) -> i64 {
    blocks.iter().filter(|&&n| n > k).count() as i64
}

proptest! {
    /// `(x - 1)^(r-1) prod [n_i] = sum_{X != {}} (-1)^(r-|X|) [n_X]`.
    #[test]
    fn subset_identity(blocks in blocks_strategy()) {
        let r = blocks.len();
        let lhs = &IntPolynomial::from_i64(&[-1, 1]).pow(r as u32 - 1) * &block_product(&blocks).unwrap();
        let mut rhs = IntPolynomial::zero();
        for mask in 1u32..(1 << r) {
            let n: u32 = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| blocks[i]).sum();
            let term = block(n).unwrap();
            rhs = if (r - mask.count_ones() as usize).is_multiple_of(2) { &rhs + &term } else { &rhs - &term };
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn low_derivatives(blocks in blocks_strategy()) {
        let g = block_product(&blocks).unwrap();
        let direct: Vec<BigInt> = (0..=3).map(|l| g.coeff(l) * factorial(l)).collect();
        let r = blocks.len() as i64;
        let (n2, n3) = (exceed(&blocks, 2), exceed(&blocks, 3));
        prop_assert_eq!(&direct[1], &BigInt::from(r));
        prop_assert_eq!(&direct[2], &BigInt::from(r * (r - 1) + 2 * n2));
        prop_assert_eq!(&direct[3], &BigInt::from(r * (r - 1) * (r - 2) + 6 * (r - 1) * n2 + 6 * n3));
        let via_sums = block_product_derivatives(&blocks, 8);
        let via_rec = block_product_derivatives_recursive(&blocks, 8);
        let all: Vec<BigInt> = (0..=8).map(|l| g.coeff(l) * factorial(l)).collect();
        prop_assert_eq!(&via_sums, &all);
        prop_assert_eq!(&via_rec, &all);
    }

    #[test]
    fn leibniz_inversion(blocks in blocks_strategy()) {
        let g = block_product_derivatives(&blocks, 8);
        let inv = inverse_derivatives(&g);
        let f = RationalFunction::new(IntPolynomial::one(), block_product(&blocks).unwrap()).unwrap();
        let series = f.series(8).unwrap();
        for (l, c) in series.iter().enumerate() {
            prop_assert_eq!(&BigRational::from_integer(inv[l].clone()), &(c * BigRational::from_integer(factorial(l))));
        }
    }

    #[test]
    fn subset_sums_match_brute_force(blocks in prop::collection::vec(1u32..=12, 0..=12)) {
        prop_assert_eq!(signed_subset_sums(&blocks), signed_subset_sums_brute(&blocks));
    }

    #[test]
    fn cyclotomic_prime_rule(m in 1u64..40, pi in 0usize..4) {
        let p = [2u64, 3, 5, 7][pi];
        let lifted = cyclotomic(m).compose_power(p as usize);
        let want = if m % p == 0 { lifted } else { lifted.exact_div(&cyclotomic(m)).unwrap() };
        prop_assert_eq!(cyclotomic(p * m), want);
    }

    #[test]
    fn blocks_factor_and_are_palindromic(k in 1u32..60) {
        let prod: IntPolynomial = divisors(k as u64).into_iter().filter(|&d| d > 1).map(cyclotomic).product();
        let b = block(k).unwrap();
        prop_assert_eq!(&b, &prod);
        prop_assert!(b.is_palindromic());
        prop_assert_eq!(&b.reverse(), &b);
    }

    #[test]
    fn reverse_is_an_involution(p in poly_strategy()) {
        prop_assume!(!p.coeff(0).is_zero());
        prop_assert_eq!(p.reverse().reverse(), p);
    }

    #[test]
    fn mul_div_round_trip(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn sturm_counts_constructed_roots(roots in prop::collection::vec((-6i64..=6, 1u32..=3), 1..5)) {
        let p: IntPolynomial = roots.iter().map(|&(r, m)| IntPolynomial::from_i64(&[-r, 1]).pow(m)).product();
        let iso = sturm_real_roots(&p, Bound::NegInf, Bound::PosInf).unwrap();
        let mut distinct: Vec<i64> = roots.iter().map(|r| r.0).collect();
        distinct.sort_unstable();
        distinct.dedup();
        prop_assert_eq!(iso.distinct(), distinct.len());
        prop_assert_eq!(iso.total_multiplicity(), roots.iter().map(|r| r.1).sum::<u32>());
    }

    #[test]
    fn classification_ignores_labels(seed in any::<u64>(), which in 0usize..6) {
        let systems = [
            CoxeterSystem::linear(&[5, 3, 3]).unwrap(),
            CoxeterSystem::linear(&[3, 4, 3]).unwrap(),
            CoxeterSystem::linear(&[3, 3, 3, 3]).unwrap(),
            CoxeterSystem::from_edges(5, &[(0, 1, Entry::Finite(3)), (2, 3, Entry::Finite(5))]).unwrap(),
            CoxeterSystem::from_edges(4, &[(0, 1, Entry::Finite(3)), (0, 2, Entry::Finite(3)), (0, 3, Entry::Finite(3))]).unwrap(),
            CoxeterSystem::linear(&[5, 3, 3, 4]).unwrap(),
        ];
        let sys = &systems[which];
        let n = sys.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let names = |s: &CoxeterSystem| {
            let c = classify_finite(s);
            let mut v: Vec<String> = c.types().map(|t| t.iter().map(|t| t.name()).collect()).unwrap_or_default();
            v.sort();
            (c.is_finite(), v)
        };
        prop_assert_eq!(names(sys), names(&sys.permuted(&perm).unwrap()));
    }
}

#[test]
fn lattices_are_downward_closed() {
    for e in catalog() {
        let Source::System(sys) = &e.source else { continue };
        let lattice = enumerate_finite_subsets(sys).unwrap();
        for entry in &lattice.entries {
            for drop in 0..entry.subset.len() {
                let mut sub = entry.subset.clone();
                sub.remove(drop);
                assert!(lattice.contains(&sub), "{}: {:?} missing", e.key, sub);
            }
            for (i, j, m) in sys.off_diagonal() {
                if m.is_infinite() {
                    assert!(!(entry.subset.contains(&i) && entry.subset.contains(&j)), "{}", e.key);
                }
            }
        }
    }
}

#[test]
fn taylor_coefficients_are_counts() {
    for e in catalog() {
        let Source::System(sys) = &e.source else { continue };
        let s = steinberg_series(sys).unwrap();
        let a = taylor_coefficients(&s, 64).unwrap();
        let n = BigInt::from(sys.rank());
        assert!(a[0].is_one(), "{}", e.key);
        assert_eq!(a[1], n, "{}", e.key);
        for w in a.windows(2) {
            assert!(w[1] >= BigInt::zero() && w[1] <= &n * &w[0], "{}", e.key);
        }
    }
}

#[test]
fn reciprocity_across_catalog() {
    for e in catalog().into_iter().filter(|e| e.verified) {
        let (Source::System(sys), Some(n)) = (&e.source, e.dimension) else {
            continue;
        };
        let s = steinberg_series(sys).unwrap();
        assert!(s.reciprocity_holds(n), "{}", e.key);
        if n >= 3 {
            assert!(minus_one_multiplicity(&s).multiplicity() >= 1, "{}", e.key);
        }
    }
}
