//! Degree reverse lexicographic order with `x1 > x2 > ... > xn`.

use std::cmp::Ordering;

/// Compares two squarefree monomials given as variable masks (bit `i-1`
/// set means `x_i` divides the monomial).
#[inline]
pub fn degrevlex_cmp_mask(a: u64, b: u64) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal => {}
        other => return other,
    }
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let highest = 63 - diff.leading_zeros();
    // the side carrying the highest differing variable is smaller
    if a >> highest & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Compares exponent vectors of equal length.
pub fn degrevlex_cmp_exponents(a: &[u8], b: &[u8]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    let da: u32 = a.iter().map(|&e| u32::from(e)).sum();
    let db: u32 = b.iter().map(|&e| u32::from(e)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        other => return other,
    }
    for (ea, eb) in a.iter().zip(b).rev() {
        if ea != eb {
            return eb.cmp(ea);
        }
    }
    Ordering::Equal
}
