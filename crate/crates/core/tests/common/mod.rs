//! Seeded fixture generators shared by the integration tests.
#![allow(dead_code)]

use drazin_core::{index_of, CMatrix, GaussianRational};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gauss_int(rng: &mut impl Rng, bound: i64) -> GaussianRational {
    GaussianRational::from_integers(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| gauss_int(rng, bound))
}

/// `L R` with inner dimension below `n`, so the product is singular.
pub fn rank_deficient(rng: &mut impl Rng, n: usize) -> CMatrix {
    let inner = rng.gen_range(1..n);
    let l = random_matrix(rng, n, inner, 2);
    let r = random_matrix(rng, inner, n, 2);
    &l * &r
}

/// Unit-triangular factors give a determinant of one and an inverse with
/// Gaussian-integer entries.
pub fn unimodular(rng: &mut impl Rng, n: usize) -> CMatrix {
    let lower = CMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => GaussianRational::one(),
        std::cmp::Ordering::Greater => gauss_int(rng, 1),
        std::cmp::Ordering::Less => GaussianRational::zero(),
    });
    let upper = CMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => GaussianRational::one(),
        std::cmp::Ordering::Less => gauss_int(rng, 1),
        std::cmp::Ordering::Greater => GaussianRational::zero(),
    });
    &lower * &upper
}

pub fn invertible(rng: &mut impl Rng, n: usize, bound: i64) -> CMatrix {
    loop {
        let m = random_matrix(rng, n, n, bound);
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// `P diag(C, J) P^{-1}` with `C` invertible of size `core` and `J` a single
/// nilpotent Jordan block of size `n - core`, so the index is `n - core`.
pub fn with_nilpotent_block(rng: &mut impl Rng, n: usize, core: usize) -> CMatrix {
    assert!(core < n);
    let c = if core > 0 { Some(invertible(rng, core, 2)) } else { None };
    let block = CMatrix::from_fn(n, n, |i, j| {
        if i <= core && j <= core {
            c.as_ref().unwrap().get(i, j).clone()
        } else if i > core && j == i + 1 {
            GaussianRational::one()
        } else {
            GaussianRational::zero()
        }
    });
    let p = unimodular(rng, n);
    let p_inv = p.inverse().unwrap();
    &(&p * &block) * &p_inv
}

/// `count` singular matrices of size 2..=5: mostly `L R` products, with
/// every fourth fixture carrying a nilpotent block of size at least two.
pub fn singular_fixtures(seed: u64, count: usize) -> Vec<CMatrix> {
    let mut rng = rng(seed);
    (0..count)
        .map(|idx| {
            let n = 2 + idx % 4;
            if idx % 4 == 3 {
                let core = rng.gen_range(0..=n - 2);
                with_nilpotent_block(&mut rng, n, core)
            } else {
                rank_deficient(&mut rng, n)
            }
        })
        .collect()
}

/// `(A, B)` pairs with nilpotent, index-one and index-two `A` among them.
pub fn ode_pairs(seed: u64, count: usize) -> Vec<(CMatrix, CMatrix)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|idx| {
            let n = 2 + idx % 3;
            let a = match idx % 5 {
                0 => with_nilpotent_block(&mut rng, n, 0),
                1 => with_nilpotent_block(&mut rng, n, n - 2),
                2 => loop {
                    let m = rank_deficient(&mut rng, n);
                    if index_of(&m).unwrap().k == 1 {
                        break m;
                    }
                },
                3 => rank_deficient(&mut rng, n),
                _ => invertible(&mut rng, n, 2),
            };
            let b = random_matrix(&mut rng, n, n, 3);
            (a, b)
        })
        .collect()
}
