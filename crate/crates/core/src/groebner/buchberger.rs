//! Reference Buchberger engine for binomial ideals over GF(2).
//!
//! Every polynomial handled here has at most two terms: S-polynomials and
//! reduction steps of binomials are again binomials or zero.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::basis::ReducedGroebnerBasis;
use super::binomial::Binomial;
use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// `(lcm/LT f)·f − (lcm/LT g)·g`; the leading terms cancel, leaving the
/// two shifted trails.
pub fn spoly(f: &Binomial, g: &Binomial) -> Option<Binomial> {
    let lcm = f.lead().lcm(g.lead());
    let a = lcm.div(f.lead()).mul(f.trail());
    let b = lcm.div(g.lead()).mul(g.trail());
    Binomial::new(a, b)
}

/// Rewrites `term` once by `rule`, which must divide it.
fn rewrite(term: &Monomial, rule: &Binomial) -> Monomial {
    term.div(rule.lead()).mul(rule.trail())
}

/// Fully reduces `poly` modulo `basis`, always rewriting the largest
/// reducible term by the first basis element whose lead divides it.
pub fn reduce(poly: &Binomial, basis: &[Binomial]) -> Option<Binomial> {
    reduce_by(poly, basis, |_| 0)
}

/// Full reduction with a caller-chosen rewrite at each step: `pick` receives
/// the number of available `(term, divisor)` choices and returns one index.
pub fn reduce_by(
    poly: &Binomial,
    basis: &[Binomial],
    mut pick: impl FnMut(usize) -> usize,
) -> Option<Binomial> {
    let mut terms = [poly.lead().clone(), poly.trail().clone()];
    loop {
        let mut choices: Vec<(usize, usize)> = Vec::new();
        for (t, term) in terms.iter().enumerate() {
            for (i, b) in basis.iter().enumerate() {
                if b.lead().divides(term) {
                    choices.push((t, i));
                }
            }
        }
        if choices.is_empty() {
            return Binomial::new(terms[0].clone(), terms[1].clone());
        }
        let (t, i) = choices[pick(choices.len()) % choices.len()];
        terms[t] = rewrite(&terms[t], &basis[i]);
        if terms[0] == terms[1] {
            return None;
        }
    }
}

/// Normal form of a single monomial; reduction never splits a monomial.
pub fn reduce_monomial(m: &Monomial, basis: &[Binomial]) -> Monomial {
    let mut cur = m.clone();
    while let Some(rule) = basis.iter().find(|b| b.lead().divides(&cur)) {
        cur = rewrite(&cur, rule);
    }
    cur
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner(basis: &[Binomial]) -> bool {
    basis.iter().enumerate().all(|(i, f)| {
        basis[i + 1..]
            .iter()
            .all(|g| spoly(f, g).and_then(|s| reduce(&s, basis)).is_none())
    })
}

/// Counters from one Buchberger run.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub pairs_considered: usize,
    pub pairs_skipped_coprime: usize,
    pub reductions_to_zero: usize,
    pub elements_added: usize,
}

/// Reduced Gröbner basis of the ideal generated by `generators` in `n`
/// variables, by the pair-queue algorithm followed by interreduction.
pub fn buchberger(generators: &[Binomial], n: usize) -> Result<ReducedGroebnerBasis> {
    buchberger_with(generators, n, &Limits::default()).map(|(gb, _)| gb)
}

/// Pairs are processed by increasing lcm (normal selection); pairs with
/// coprime leading terms are discarded.
pub fn buchberger_with(
    generators: &[Binomial],
    n: usize,
    limits: &Limits,
) -> Result<(ReducedGroebnerBasis, BuchbergerStats)> {
    if n > limits.buchberger_n {
        return Err(Error::BuchbergerGuard {
            n,
            limit: limits.buchberger_n,
        });
    }
    if let Some(g) = generators.iter().find(|g| g.n() != n) {
        return Err(Error::LengthMismatch {
            expected: n,
            got: g.n(),
        });
    }
    let mut stats = BuchbergerStats::default();
    let mut basis: Vec<Binomial> = Vec::new();
    for g in generators {
        if !basis.contains(g) {
            basis.push(g.clone());
        }
    }
    let mut queue: BinaryHeap<Reverse<(Monomial, usize, usize)>> = BinaryHeap::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.push(Reverse((basis[i].lead().lcm(basis[j].lead()), i, j)));
        }
    }
    while let Some(Reverse((_, i, j))) = queue.pop() {
        stats.pairs_considered += 1;
        if basis[i].lead().is_coprime(basis[j].lead()) {
            stats.pairs_skipped_coprime += 1;
            continue;
        }
        let Some(remainder) = spoly(&basis[i], &basis[j]).and_then(|s| reduce(&s, &basis)) else {
            stats.reductions_to_zero += 1;
            continue;
        };
        let k = basis.len();
        for (i, b) in basis.iter().enumerate() {
            queue.push(Reverse((b.lead().lcm(remainder.lead()), i, k)));
        }
        basis.push(remainder);
        stats.elements_added += 1;
    }
    Ok((interreduce(&basis, n)?, stats))
}

/// Minimalises a Gröbner basis and reduces every trail.
pub fn interreduce(basis: &[Binomial], n: usize) -> Result<ReducedGroebnerBasis> {
    let mut minimal: Vec<Binomial> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(j, other)| {
            j != i
                && other.lead().divides(b.lead())
                // equal leads: keep the first occurrence only
                && (other.lead() != b.lead() || j < i)
        });
        if !redundant {
            minimal.push(b.clone());
        }
    }
    let reduced: Vec<Binomial> = minimal
        .iter()
        .map(|b| {
            let trail = reduce_monomial(b.trail(), &minimal);
            Binomial::new(b.lead().clone(), trail).expect("trail normal form stays below lead")
        })
        .collect();
    ReducedGroebnerBasis::new(n, reduced)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str, n: usize) -> Binomial {
        Binomial::parse(s, n).unwrap()
    }

    #[test]
    fn spoly_examples() {
        let f = b("x1*x2 - x4*x7", 7);
        let g = b("x2*x3 - x6*x7", 7);
        assert_eq!(spoly(&f, &f), None);
        assert_eq!(spoly(&f, &g).unwrap().to_string(), "x3*x4*x7 - x1*x6*x7");
        let h = Binomial::field_relation(1, 7);
        assert_eq!(spoly(&h, &f).unwrap().to_string(), "x1*x4*x7 - x2");
    }

    #[test]
    fn reduce_examples() {
        let f = b("x1*x2 - x4*x7", 7);
        assert_eq!(reduce(&f, std::slice::from_ref(&f)), None);
        let sq = Binomial::field_relation(4, 7);
        let fields: Vec<Binomial> = (1..=7).map(|i| Binomial::field_relation(i, 7)).collect();
        assert_eq!(reduce(&sq, &fields), None);
        // x1^3 - x2 reduces to x1 - x2 by x1^2 - 1
        let p = b("x1^3 - x2", 7);
        assert_eq!(reduce(&p, &fields).unwrap().to_string(), "x1 - x2");
    }

    #[test]
    fn field_relations_form_a_reduced_basis() {
        let fields: Vec<Binomial> = (1..=5).map(|i| Binomial::field_relation(i, 5)).collect();
        assert!(is_groebner(&fields));
        let gb = buchberger(&fields, 5).unwrap();
        let mut expected = fields.clone();
        expected.reverse();
        assert_eq!(gb.elements(), &expected[..]);
    }

    #[test]
    fn guard() {
        let fields: Vec<Binomial> = (1..=13).map(|i| Binomial::field_relation(i, 13)).collect();
        assert!(matches!(
            buchberger(&fields, 13),
            Err(Error::BuchbergerGuard { n: 13, limit: 12 })
        ));
    }
}
