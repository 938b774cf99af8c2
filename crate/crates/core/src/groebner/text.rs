//! Plain-text form of a basis: a header line, then one `lead - trail`
//! per line sorted by leading term.

use std::fmt::Write as _;

use super::basis::{ReducedGroebnerBasis, ORDER_ID};
use super::binomial::Binomial;
use crate::error::{Error, Result};

pub fn to_text(gb: &ReducedGroebnerBasis) -> String {
    let mut out = format!("# n={} order={} field=GF(2)\n", gb.n(), ORDER_ID);
    for b in gb.elements() {
        let _ = writeln!(out, "{b}");
    }
    out
}

/// A parsed list of binomials; not necessarily a reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialListing {
    pub n: usize,
    pub elements: Vec<Binomial>,
}

fn parse_header(line: &str) -> Result<usize> {
    let mut n = None;
    for field in line.trim_start_matches('#').split_whitespace() {
        let Some((key, value)) = field.split_once('=') else {
            continue;
        };
        match key {
            "n" => {
                n = Some(
                    value
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad n `{value}`")))?,
                )
            }
            "order" if value != ORDER_ID => return Err(Error::UnsupportedOrder(value.into())),
            "field" if value != "GF(2)" => {
                return Err(Error::Parse(format!("unsupported field `{value}`")))
            }
            _ => {}
        }
    }
    n.ok_or_else(|| Error::Parse(format!("header `{line}` lacks n=")))
}

/// Parses the header and every binomial line, in file order.
pub fn parse_listing(text: &str) -> Result<BinomialListing> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty basis file".into()))?;
    if !header.starts_with('#') {
        return Err(Error::Parse(
            "basis file must start with a `# n=...` header".into(),
        ));
    }
    let n = parse_header(header)?;
    let elements = lines
        .filter(|l| !l.starts_with('#'))
        .map(|l| Binomial::parse(l, n))
        .collect::<Result<_>>()?;
    Ok(BinomialListing { n, elements })
}

pub fn parse_basis(text: &str) -> Result<ReducedGroebnerBasis> {
    let listing = parse_listing(text)?;
    ReducedGroebnerBasis::new(listing.n, listing.elements)
}
