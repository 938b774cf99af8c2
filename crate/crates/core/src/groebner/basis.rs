use std::collections::HashSet;

use super::binomial::{Binomial, BinomialKind};
use super::monomial::SquarefreeMonomial;
use crate::error::{Error, Result};

/// Identifier of the only supported monomial order.
pub const ORDER_ID: &str = "degrevlex";

/// A reduced Gröbner basis of a binary code ideal.
///
/// Elements are sorted by leading term, ascending. Construction checks
/// reducedness: every code binomial is squarefree, no leading term divides
/// another element's lead or trail, and all `n` field relations are present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedGroebnerBasis {
    n: usize,
    elements: Vec<Binomial>,
    /// `(lead, trail)` masks of the code binomials, in element order.
    rules: Vec<(u64, u64)>,
}

impl ReducedGroebnerBasis {
    pub fn new(n: usize, mut elements: Vec<Binomial>) -> Result<Self> {
        if let Some(b) = elements.iter().find(|b| b.n() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: b.n(),
            });
        }
        elements.sort_by(|a, b| a.lead().cmp(b.lead()));
        let mut fields = HashSet::new();
        let mut rules = Vec::new();
        for b in &elements {
            match b.kind() {
                BinomialKind::FieldRelation => {
                    let var = b.lead().exponents().iter().position(|&e| e == 2).unwrap() + 1;
                    if !fields.insert(var) {
                        return Err(Error::Parse(format!("duplicate element {b}")));
                    }
                }
                BinomialKind::Code => {
                    let masks = b.squarefree_masks().ok_or_else(|| {
                        Error::Parse(format!("code binomial {b} is not squarefree"))
                    })?;
                    rules.push(masks);
                }
            }
        }
        if fields.len() != n {
            let missing = (1..=n).find(|v| !fields.contains(v)).unwrap_or(0);
            return Err(Error::DegenerateCode(missing));
        }
        for (i, &(lead, _)) in rules.iter().enumerate() {
            for (j, &(other_lead, other_trail)) in rules.iter().enumerate() {
                if i != j && lead & !other_lead == 0 {
                    return Err(Error::Parse(format!(
                        "not reduced: lead of {} divides lead of {}",
                        mask_name(lead, n),
                        mask_name(other_lead, n)
                    )));
                }
                if lead & !other_trail == 0 {
                    return Err(Error::Parse(format!(
                        "not reduced: lead {} divides trail {}",
                        mask_name(lead, n),
                        mask_name(other_trail, n)
                    )));
                }
            }
        }
        Ok(Self { n, elements, rules })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order_id(&self) -> &'static str {
        ORDER_ID
    }

    pub fn elements(&self) -> &[Binomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn code_binomials(&self) -> impl Iterator<Item = &Binomial> {
        self.elements
            .iter()
            .filter(|b| b.kind() == BinomialKind::Code)
    }

    pub fn field_relation_count(&self) -> usize {
        self.elements.len() - self.rules.len()
    }

    pub fn contains(&self, b: &Binomial) -> bool {
        self.elements
            .binary_search_by(|e| e.lead().cmp(b.lead()))
            .is_ok_and(|i| &self.elements[i] == b)
    }

    /// Canonical form of a squarefree monomial: the standard monomial of
    /// its coset, i.e. the degrevlex-smallest `a + c` over codewords `c`.
    pub fn normal_form(&self, a: &SquarefreeMonomial) -> Result<SquarefreeMonomial> {
        self.normal_form_by(a, |_| 0)
    }

    /// Normal form with a caller-chosen divisor at every step; the result
    /// does not depend on the choices.
    pub fn normal_form_by(
        &self,
        a: &SquarefreeMonomial,
        mut pick: impl FnMut(usize) -> usize,
    ) -> Result<SquarefreeMonomial> {
        if a.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: a.n(),
            });
        }
        let mut cur = a.mask();
        let mut candidates = Vec::new();
        loop {
            candidates.clear();
            candidates.extend(
                self.rules
                    .iter()
                    .filter(|(lead, _)| lead & !cur == 0)
                    .copied(),
            );
            if candidates.is_empty() {
                return SquarefreeMonomial::from_mask(cur, self.n);
            }
            let (lead, trail) = candidates[pick(candidates.len()) % candidates.len()];
            // (cur / lead) * trail, then x_i^2 -> 1
            cur = (cur & !lead) ^ trail;
        }
    }

    /// `min TD(f) - 1` over the code binomials.
    pub fn capability(&self) -> Result<u32> {
        self.rules
            .iter()
            .map(|(lead, _)| lead.count_ones())
            .min()
            .map(|d| d - 1)
            .ok_or(Error::CapabilityUndefined)
    }

    /// Set of `(lead, trail)` pairs, for order-insensitive comparison.
    pub fn pair_set(&self) -> HashSet<Binomial> {
        self.elements.iter().cloned().collect()
    }
}

fn mask_name(mask: u64, n: usize) -> String {
    SquarefreeMonomial::from_mask(mask, n)
        .map(|m| m.to_string())
        .unwrap_or_else(|_| format!("{mask:#x}"))
}
