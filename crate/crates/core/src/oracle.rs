//! Brute-force reference computations, kept separate from the engines they
//! are used to check, and a generator of random test codes.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::code::LinearCode;
use crate::gf::matrix::Matrix;
use crate::groebner::order::degrevlex_cmp_mask;
use crate::limits::Limits;
use crate::scalar::Residue;
use crate::schubert::for_each_rref_basis;

/// Degrevlex-smallest element of the coset `u + C`, by scanning `C`.
pub fn coset_minimum(u: u64, codewords: &[u64]) -> u64 {
    codewords
        .iter()
        .map(|c| u ^ c)
        .min_by(|a, b| degrevlex_cmp_mask(*a, *b))
        .expect("a code contains zero")
}

/// Minimal non-standard squarefree monomials by a full divisor scan: every
/// `u` in `2^n` is classified by brute-force coset minimum, then kept if it
/// is not minimal in its coset while all its maximal divisors are.
pub fn minimal_nonstandard_leads<R: Residue>(
    code: &LinearCode<R>,
    limits: &Limits,
) -> Result<Vec<u64>> {
    let n = code.n();
    if n > limits.coset_n {
        return Err(Error::EnumerationBound {
            what: "divisor scan",
            needed_log2: n as u32,
            limit_log2: limits.coset_n as u32,
        });
    }
    let codewords = code.codeword_masks(limits)?;
    let standard: Vec<bool> = (0u64..1 << n)
        .map(|u| coset_minimum(u, &codewords) == u)
        .collect();
    let mut leads: Vec<u64> = (0u64..1 << n)
        .filter(|&u| {
            !standard[u as usize]
                && (0..n)
                    .filter(|j| u >> j & 1 == 1)
                    .all(|j| standard[(u & !(1 << j)) as usize])
        })
        .collect();
    leads.sort_by(|a, b| degrevlex_cmp_mask(*a, *b));
    Ok(leads)
}

/// Number of `l`-subspaces of `F_q^m`, counted one RREF basis at a time.
pub fn subspace_count(l: usize, m: usize, q: u64, limits: &Limits) -> Result<u128> {
    let mut count = 0u128;
    for_each_rref_basis::<u64>(l, m, q, limits, None, |_| count += 1)?;
    Ok(count)
}

/// Whether `a` precedes `b` in degrevlex.
pub fn degrevlex_less(a: u64, b: u64) -> bool {
    degrevlex_cmp_mask(a, b) == Ordering::Less
}

/// Random binary codes with `n` in `n_range`, `k` in `k_range`, distinct
/// nonzero columns and minimum distance at least `min_d`. Deterministic for
/// a given seed.
pub fn random_binary_codes(
    count: usize,
    n_range: std::ops::RangeInclusive<usize>,
    k_range: std::ops::RangeInclusive<usize>,
    min_d: u32,
    seed: u64,
) -> Result<Vec<LinearCode<u32>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 100_000 {
            return Err(Error::Shape("could not sample enough random codes".into()));
        }
        let n = rng.gen_range(n_range.clone());
        let k = rng.gen_range(k_range.clone());
        if k == 0 || k > n {
            continue;
        }
        // distinct nonzero columns drawn from F_2^k \ {0}
        if n > (1usize << k) - 1 {
            continue;
        }
        let mut columns: Vec<u64> = Vec::with_capacity(n);
        while columns.len() < n {
            let c = rng.gen_range(1u64..1 << k);
            if !columns.contains(&c) {
                columns.push(c);
            }
        }
        let rows: Vec<Vec<u64>> = (0..k)
            .map(|r| columns.iter().map(|c| c >> r & 1).collect())
            .collect();
        let Ok(code) = LinearCode::new(Matrix::from_rows(&rows, 2u32)?) else {
            continue;
        };
        if code.min_distance_bruteforce()? >= min_d {
            out.push(code);
        }
    }
    Ok(out)
}
