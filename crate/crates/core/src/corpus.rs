//! Seeded pseudo-random formulas over the atoms `p`, `q`, `r`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::formula::Formula;

pub const ATOMS: [&str; 3] = ["p", "q", "r"];

/// Seed used by the cross-check corpus.
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_0b1e;

/// `count` formulas, each with a node count drawn uniformly from
/// `1..=max_size`. Same seed, same corpus.
pub fn random_formulas(seed: u64, count: usize, max_size: usize) -> Vec<Formula> {
    assert!(max_size >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size);
            formula_of_size(&mut rng, size)
        })
        .collect()
}

fn formula_of_size(rng: &mut ChaCha8Rng, size: usize) -> Formula {
    match size {
        0 => unreachable!(),
        1 => match rng.gen_range(0..10) {
            0 => Formula::Top,
            1 => Formula::Bottom,
            _ => Formula::atom(ATOMS[rng.gen_range(0..ATOMS.len())]),
        },
        2 => unary(rng, size),
        _ => {
            if rng.gen_bool(0.35) {
                unary(rng, size)
            } else {
                let left = rng.gen_range(1..=size - 2);
                let a = formula_of_size(rng, left);
                let b = formula_of_size(rng, size - 1 - left);
                match rng.gen_range(0..4) {
                    0 => Formula::and(a, b),
                    1 => Formula::or(a, b),
                    2 => Formula::implies(a, b),
                    _ => Formula::iff(a, b),
                }
            }
        }
    }
}

fn unary(rng: &mut ChaCha8Rng, size: usize) -> Formula {
    let inner = formula_of_size(rng, size - 1);
    if rng.gen_bool(0.5) {
        Formula::not(inner)
    } else {
        Formula::nabla(inner)
    }
}
