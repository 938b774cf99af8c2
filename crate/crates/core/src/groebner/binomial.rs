use std::cmp::Ordering;
use std::fmt;

use super::monomial::{Monomial, SquarefreeMonomial};
use crate::error::{Error, Result};
use crate::gf::code::LinearCode;
use crate::scalar::Residue;

/// Which family a basis element belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum BinomialKind {
    /// `x_i^2 - 1`.
    FieldRelation,
    /// Any other binomial `X^u - X^v`.
    Code,
}

/// A binomial `lead - trail` over GF(2) with `lead > trail` in degrevlex.
///
/// Over GF(2) the sign is immaterial, so a binomial is an unordered pair of
/// distinct monomials; the constructor orients it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Binomial {
    lead: Monomial,
    trail: Monomial,
}

impl Binomial {
    /// `a - b` oriented by degrevlex; `None` when the terms cancel.
    pub fn new(a: Monomial, b: Monomial) -> Option<Self> {
        assert_eq!(a.n(), b.n(), "monomials over different variable sets");
        match a.cmp(&b) {
            Ordering::Equal => None,
            Ordering::Greater => Some(Self { lead: a, trail: b }),
            Ordering::Less => Some(Self { lead: b, trail: a }),
        }
    }

    pub fn field_relation(var: usize, n: usize) -> Self {
        Self {
            lead: Monomial::var_power(var, 2, n),
            trail: Monomial::one(n),
        }
    }

    pub fn from_squarefree(a: SquarefreeMonomial, b: SquarefreeMonomial) -> Option<Self> {
        Self::new(a.to_monomial(), b.to_monomial())
    }

    pub fn lead(&self) -> &Monomial {
        &self.lead
    }

    pub fn trail(&self) -> &Monomial {
        &self.trail
    }

    pub fn n(&self) -> usize {
        self.lead.n()
    }

    /// Total degree of the leading term.
    pub fn degree(&self) -> u32 {
        self.lead.degree()
    }

    pub fn kind(&self) -> BinomialKind {
        let e = self.lead.exponents();
        let single_square = e.iter().filter(|&&x| x != 0).count() == 1 && e.contains(&2);
        if single_square && self.trail.is_one() {
            BinomialKind::FieldRelation
        } else {
            BinomialKind::Code
        }
    }

    /// Lead and trail as squarefree masks, when both are squarefree.
    pub fn squarefree_masks(&self) -> Option<(u64, u64)> {
        Some((
            self.lead.to_squarefree()?.mask(),
            self.trail.to_squarefree()?.mask(),
        ))
    }

    /// Parses `term - term` (or `term + term`); the orientation is recomputed.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let parts: Vec<&str> = s.split(['-', '+']).collect();
        let [a, b] = parts[..] else {
            return Err(Error::Parse(format!("`{s}` is not a binomial `a - b`")));
        };
        Self::new(Monomial::parse(a, n)?, Monomial::parse(b, n)?)
            .ok_or_else(|| Error::Parse(format!("`{s}` is the zero polynomial")))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// Generators `X^{w_i} - 1` for every generator row plus `x_i^2 - 1` for
/// every coordinate.
pub fn ideal_generators<R: Residue>(code: &LinearCode<R>) -> Result<Vec<Binomial>> {
    let n = code.n();
    let mut gens = Vec::with_capacity(code.k() + n);
    for (i, w) in code.generator_words()?.into_iter().enumerate() {
        if w.is_zero() {
            return Err(Error::DegenerateRow(i + 1));
        }
        let row = SquarefreeMonomial::from(w).to_monomial();
        gens.push(Binomial::new(row, Monomial::one(n)).expect("nonzero row"));
    }
    gens.extend((1..=n).map(|i| Binomial::field_relation(i, n)));
    Ok(gens)
}
