//! Reduced Gröbner basis read off the coset structure of a binary code.
//!
//! The standard monomials are exactly the coset leaders of the degrevlex
//! leader table, one per coset. The leading terms of the reduced basis are
//! the minimal non-standard monomials: `x_i^2`, plus every squarefree `u`
//! outside the leader set whose maximal proper divisors are all leaders.
//! Since leaders are closed under division, each such `u` is a leader times
//! one variable, which bounds the scan by `2^(n-k) * n`.

use super::basis::ReducedGroebnerBasis;
use super::binomial::Binomial;
use super::monomial::SquarefreeMonomial;
use crate::error::{Error, Result};
use crate::gf::code::LinearCode;
use crate::gf::coset::CosetLeaderTable;
use crate::limits::Limits;
use crate::scalar::Residue;

pub fn coset_engine<R: Residue>(code: &LinearCode<R>) -> Result<ReducedGroebnerBasis> {
    coset_engine_with(code, &Limits::default())
}

pub fn coset_engine_with<R: Residue>(
    code: &LinearCode<R>,
    limits: &Limits,
) -> Result<ReducedGroebnerBasis> {
    let table = CosetLeaderTable::build_with(code, limits)?;
    from_leader_table(code, &table)
}

/// Builds the basis from an already computed leader table of `code`.
pub fn from_leader_table<R: Residue>(
    code: &LinearCode<R>,
    table: &CosetLeaderTable,
) -> Result<ReducedGroebnerBasis> {
    let n = code.n();
    if table.n() != n || table.redundancy() != n - code.k() {
        return Err(Error::Shape("leader table built for another code".into()));
    }
    let cols = code.column_syndromes()?;
    let leaders = table.leader_masks();
    let leader_of = |u: u64| leaders[LinearCode::<R>::syndrome_bits(cols, u) as usize];
    let is_standard = |u: u64| leader_of(u) == u;

    if let Some(i) = (0..n).find(|&i| !is_standard(1 << i)) {
        return Err(Error::DegenerateCode(i + 1));
    }

    let mut leads = Vec::new();
    for &s in leaders {
        for i in 0..n {
            let u = s | 1 << i;
            if u == s || is_standard(u) {
                continue;
            }
            // only the extension by the highest variable of u is kept, so
            // each minimal non-standard monomial is emitted once
            if 63 - u.leading_zeros() != i as u32 {
                continue;
            }
            let mut rest = u;
            let minimal = loop {
                if rest == 0 {
                    break true;
                }
                let j = rest.trailing_zeros();
                rest &= rest - 1;
                if !is_standard(u & !(1 << j)) {
                    break false;
                }
            };
            if minimal {
                leads.push(u);
            }
        }
    }

    let mut elements: Vec<Binomial> = leads
        .into_iter()
        .map(|u| {
            let lead = SquarefreeMonomial::from_mask(u, n)?;
            let trail = SquarefreeMonomial::from_mask(leader_of(u), n)?;
            Ok(Binomial::from_squarefree(lead, trail)
                .expect("non-standard lead differs from its leader"))
        })
        .collect::<Result<_>>()?;
    elements.extend((1..=n).map(|i| Binomial::field_relation(i, n)));
    ReducedGroebnerBasis::new(n, elements)
}
