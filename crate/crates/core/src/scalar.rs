//! Residue storage types for prime-field matrices.
//!
//! Matrix entries are kept in an unsigned primitive integer; all
//! arithmetic is carried out after widening to `u128`, so any `Residue`
//! can hold any modulus that fits in it.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{FromPrimitive, PrimInt, ToPrimitive, Unsigned};

/// An unsigned integer type able to store residues modulo a prime.
pub trait Residue:
    PrimInt + Unsigned + FromPrimitive + ToPrimitive + Hash + Debug + Display + Send + Sync + 'static
{
    fn to_wide(self) -> u128 {
        self.to_u128().expect("unsigned primitive fits in u128")
    }

    fn from_wide(v: u128) -> Self {
        Self::from_u128(v).expect("reduced residue fits in storage type")
    }

    fn add_mod(self, rhs: Self, p: Self) -> Self {
        Self::from_wide((self.to_wide() + rhs.to_wide()) % p.to_wide())
    }

    fn sub_mod(self, rhs: Self, p: Self) -> Self {
        let p = p.to_wide();
        Self::from_wide((self.to_wide() + p - rhs.to_wide() % p) % p)
    }

    fn mul_mod(self, rhs: Self, p: Self) -> Self {
        Self::from_wide(self.to_wide() * rhs.to_wide() % p.to_wide())
    }

    fn neg_mod(self, p: Self) -> Self {
        Self::zero().sub_mod(self, p)
    }

    /// Multiplicative inverse by Fermat's little theorem; `p` must be prime
    /// and `self` nonzero.
    fn inv_mod(self, p: Self) -> Self {
        let p = p.to_wide();
        let mut base = self.to_wide() % p;
        let mut exp = p - 2;
        let mut acc = 1u128;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        Self::from_wide(acc)
    }
}

impl Residue for u8 {}
impl Residue for u16 {}
impl Residue for u32 {}
impl Residue for u64 {}

/// Trial-division primality test; moduli here are tiny.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_small_primes() {
        for p in [2u32, 3, 5, 7, 13] {
            for a in 1..p {
                assert_eq!(a.mul_mod(a.inv_mod(p), p), 1, "a={a} p={p}");
            }
        }
    }

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn sub_and_neg_wrap() {
        assert_eq!(1u8.sub_mod(2, 3), 2);
        assert_eq!(0u16.neg_mod(5), 0);
        assert_eq!(2u64.neg_mod(5), 3);
    }
}
