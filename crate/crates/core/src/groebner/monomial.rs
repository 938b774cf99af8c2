use std::cmp::Ordering;
use std::fmt;

use super::order::{degrevlex_cmp_exponents, degrevlex_cmp_mask};
use crate::error::{Error, Result};
use crate::gf::word::{low_mask, BinaryWord, MAX_LEN};

/// A squarefree monomial in `x1..xn`, identified with its support.
///
/// The support mask is the same bit layout as [`BinaryWord`], so the
/// word/monomial correspondence is a relabelling.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SquarefreeMonomial {
    mask: u64,
    n: usize,
}

impl SquarefreeMonomial {
    pub fn one(n: usize) -> Self {
        Self { mask: 0, n }
    }

    pub fn from_mask(mask: u64, n: usize) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::WordTooLong(n));
        }
        if mask & !low_mask(n) != 0 {
            return Err(Error::Parse(format!(
                "mask {mask:#x} uses variables beyond x{n}"
            )));
        }
        Ok(Self { mask, n })
    }

    pub fn from_vars(vars: &[usize], n: usize) -> Result<Self> {
        Ok(BinaryWord::from_support(vars, n)?.into())
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.mask
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.mask.count_ones()
    }

    pub fn is_one(&self) -> bool {
        self.mask == 0
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    /// Variable indices (1-based), ascending.
    pub fn vars(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| self.mask >> (i - 1) & 1 == 1)
            .collect()
    }

    pub fn to_word(self) -> BinaryWord {
        BinaryWord::from_bits(self.mask, self.n).expect("monomial fits its length")
    }

    pub fn to_monomial(self) -> Monomial {
        Monomial::from_exponents((0..self.n).map(|i| (self.mask >> i & 1) as u8).collect())
    }

    /// Parses `1` or a `*`-separated product of distinct `x<i>`.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let m = Monomial::parse(s, n)?;
        m.to_squarefree()
            .ok_or_else(|| Error::Parse(format!("`{s}` is not squarefree")))
    }
}

impl From<BinaryWord> for SquarefreeMonomial {
    fn from(w: BinaryWord) -> Self {
        Self {
            mask: w.bits(),
            n: w.len(),
        }
    }
}

impl Ord for SquarefreeMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.n, other.n);
        degrevlex_cmp_mask(self.mask, other.mask)
    }
}

impl PartialOrd for SquarefreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SquarefreeMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factors(f, self.vars().into_iter().map(|v| (v, 1)))
    }
}

/// A monomial with arbitrary exponents, used by the Buchberger engine.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exponents: Vec<u8>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Self {
            exponents: vec![0; n],
        }
    }

    pub fn from_exponents(exponents: Vec<u8>) -> Self {
        Self { exponents }
    }

    pub fn var_power(var: usize, power: u8, n: usize) -> Self {
        let mut m = Self::one(n);
        m.exponents[var - 1] = power;
        m
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exponents
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    /// `self / other`; `other` must divide `self`.
    pub fn div(&self, other: &Self) -> Self {
        debug_assert!(other.divides(self));
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn to_squarefree(&self) -> Option<SquarefreeMonomial> {
        if self.exponents.iter().any(|&e| e > 1) {
            return None;
        }
        let mask = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e == 1)
            .fold(0u64, |m, (i, _)| m | 1 << i);
        SquarefreeMonomial::from_mask(mask, self.n()).ok()
    }

    /// Parses `1`, or `*`-joined factors `x<i>` / `x<i>^<e>`. Juxtaposed
    /// factors (`x1x2`, `x_{10}`) and repeated variables are accepted.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let compact: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '{' | '}' | '_'))
            .collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut m = Self::one(n);
        if compact == "1" {
            return Ok(m);
        }
        let bytes = compact.as_bytes();
        let mut pos = 0;
        let number = |pos: &mut usize| -> Result<usize> {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            compact[start..*pos]
                .parse()
                .map_err(|_| Error::Parse(format!("expected a number in `{s}`")))
        };
        while pos < bytes.len() {
            match bytes[pos] {
                b'*' => pos += 1,
                b'x' => {
                    pos += 1;
                    let var = number(&mut pos)?;
                    if var == 0 || var > n {
                        return Err(Error::Parse(format!("variable x{var} outside x1..x{n}")));
                    }
                    let mut power = 1;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        power = number(&mut pos)?;
                    }
                    let e = &mut m.exponents[var - 1];
                    *e = u8::try_from(usize::from(*e) + power)
                        .map_err(|_| Error::Parse(format!("exponent too large in `{s}`")))?;
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected `{}` in monomial `{s}`",
                        other as char
                    )))
                }
            }
        }
        Ok(m)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        degrevlex_cmp_exponents(&self.exponents, &other.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factors(
            f,
            self.exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i + 1, e)),
        )
    }
}

fn write_factors(
    f: &mut fmt::Formatter<'_>,
    factors: impl Iterator<Item = (usize, u8)>,
) -> fmt::Result {
    let mut first = true;
    for (var, e) in factors {
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "x{var}")?;
        } else {
            write!(f, "x{var}^{e}")?;
        }
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

/// Degrevlex comparison of two monomials over the same variables.
pub fn degrevlex_compare(a: &Monomial, b: &Monomial) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let m = Monomial::parse("x1*x2^2*x10", 10).unwrap();
        assert_eq!(m.degree(), 4);
        assert_eq!(m.to_string(), "x1*x2^2*x10");
        assert_eq!(Monomial::parse(" 1 ", 3).unwrap(), Monomial::one(3));
        assert_eq!(
            Monomial::parse("x_1x_{10}", 10).unwrap(),
            Monomial::parse("x1*x10", 10).unwrap()
        );
        assert!(Monomial::parse("x11", 10).is_err());
        assert!(Monomial::parse("y1", 10).is_err());
        assert!(SquarefreeMonomial::parse("x1*x1", 3).is_err());
    }

    #[test]
    fn squarefree_round_trip() {
        let s = SquarefreeMonomial::from_vars(&[1, 2, 3, 4, 5], 7).unwrap();
        assert_eq!(s.to_string(), "x1*x2*x3*x4*x5");
        assert_eq!(s.to_word().to_string(), "1111100");
        assert_eq!(s.to_monomial().to_squarefree(), Some(s));
        assert_eq!(SquarefreeMonomial::one(4).to_string(), "1");
    }

    #[test]
    fn compare_examples() {
        let n = 7;
        let a = Monomial::parse("x1*x2", n).unwrap();
        let b = Monomial::parse("x4*x7", n).unwrap();
        assert_eq!(degrevlex_compare(&a, &b), Ordering::Greater);
        assert_eq!(
            degrevlex_compare(&Monomial::one(n), &Monomial::var_power(1, 1, n)),
            Ordering::Less
        );
        let x3 = Monomial::var_power(3, 1, n);
        assert_eq!(degrevlex_compare(&x3, &x3), Ordering::Equal);
    }

    #[test]
    fn lcm_div_coprime() {
        let n = 4;
        let a = Monomial::parse("x1^2*x2", n).unwrap();
        let b = Monomial::parse("x2*x3", n).unwrap();
        let l = a.lcm(&b);
        assert_eq!(l.to_string(), "x1^2*x2*x3");
        assert_eq!(l.div(&a).to_string(), "x3");
        assert!(!a.is_coprime(&b));
        assert!(a.is_coprime(&Monomial::parse("x4", n).unwrap()));
    }
}
