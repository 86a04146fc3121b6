//! Seeded random words for property checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::laurent::{Assignment, LaurentPoly, Monomial};
use crate::word::{commutator, pure_generator, CommutatorConvention, GroupId, Letter, LetterKind, Word};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random `A_ij^±1` in `B_n`.
pub fn random_pure_generator<R: Rng>(group: GroupId, rng: &mut R) -> Result<Word> {
    let n = group.strands();
    let i = rng.gen_range(1..n);
    let j = rng.gen_range(i + 1..=n);
    let a = pure_generator(group, i, j)?;
    Ok(if rng.gen_bool(0.5) { a } else { a.invert() })
}

/// A product of `factors` random `A_ij^±1`; pure by construction.
pub fn random_pure_word<R: Rng>(group: GroupId, factors: usize, rng: &mut R) -> Result<Word> {
    let mut w = Word::empty(group);
    for _ in 0..factors {
        w = w.concat(&random_pure_generator(group, rng)?)?;
    }
    Ok(w)
}

/// A product of `count` commutators of random pure generators. Every pair
/// of strands has linking number zero.
pub fn random_zero_linking_word<R: Rng>(group: GroupId, count: usize, rng: &mut R) -> Result<Word> {
    let mut w = Word::empty(group);
    for _ in 0..count {
        let x = random_pure_generator(group, rng)?;
        let y = random_pure_generator(group, rng)?;
        w = w.concat(&commutator(&x, &y, CommutatorConvention::InverseLast)?)?;
    }
    Ok(w)
}

/// Up to `max_terms` terms with coefficients in `-9..=9` and exponents in
/// `-3..=3`.
pub fn random_poly<R: Rng>(max_terms: usize, rng: &mut R) -> LaurentPoly {
    let count = rng.gen_range(0..=max_terms);
    LaurentPoly::from_terms((0..count).map(|_| {
        let e = [rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
        (Monomial(e), BigInt::from(rng.gen_range(-9..=9)))
    }))
}

/// Nonzero rationals with numerators and denominators up to 5 in size.
pub fn random_assignment<R: Rng>(rng: &mut R) -> Assignment {
    let mut value = || {
        let num = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1..=5)))
    };
    let (t, s, r) = (value(), value(), value());
    Assignment::new(t, s, r).expect("values are nonzero")
}

/// A word of `len` random letters allowed in `group`, with powers in
/// `-3..=3` (never zero).
pub fn random_word<R: Rng>(group: GroupId, len: usize, rng: &mut R) -> Word {
    let kinds: Vec<LetterKind> = [LetterKind::Sigma, LetterKind::Tau, LetterKind::Pi, LetterKind::Zeta]
        .into_iter()
        .filter(|&k| group.allows(k))
        .collect();
    let letters = (0..len)
        .map(|_| {
            let kind = kinds[rng.gen_range(0..kinds.len())];
            let mut power = rng.gen_range(1..=3);
            if rng.gen_bool(0.5) {
                power = -power;
            }
            let index = if kind == LetterKind::Zeta {
                0
            } else {
                rng.gen_range(1..=group.max_index())
            };
            Letter { kind, index, power }
        })
        .collect();
    Word::new(group, letters).expect("letters are drawn from the group")
}
