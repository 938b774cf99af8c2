//! Grassmannian and Schubert-variety points over prime fields, their
//! Plücker coordinates, and the generator matrices of Schubert codes.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::matrix::Matrix;
use crate::limits::Limits;
use crate::scalar::{is_prime, Residue};

/// A strictly increasing tuple `1 <= a_1 < ... < a_l <= m`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct IndexTuple(Vec<usize>);

impl IndexTuple {
    pub fn new(entries: Vec<usize>, m: usize) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidTuple("empty tuple".into()));
        }
        if entries[0] < 1 || *entries.last().unwrap() > m {
            return Err(Error::InvalidTuple(format!(
                "{entries:?} has entries outside 1..={m}"
            )));
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidTuple(format!(
                "{entries:?} is not strictly increasing"
            )));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All `C(m, l)` index tuples in lexicographic order.
pub fn index_tuples(l: usize, m: usize) -> Result<Vec<IndexTuple>> {
    if l == 0 || l > m {
        return Err(Error::InvalidTuple(format!(
            "need 1 <= l <= m, got l={l}, m={m}"
        )));
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=l).collect();
    loop {
        out.push(IndexTuple(cur.clone()));
        // rightmost entry that can still grow
        let Some(i) = (0..l).rev().find(|&i| cur[i] < m - (l - 1 - i)) else {
            return Ok(out);
        };
        cur[i] += 1;
        for j in i + 1..l {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Componentwise (Bruhat) order: `beta <= alpha` iff `beta_i <= alpha_i` for all `i`.
pub fn bruhat_leq(beta: &IndexTuple, alpha: &IndexTuple) -> Result<bool> {
    if beta.len() != alpha.len() {
        return Err(Error::Shape(format!(
            "tuples of lengths {} and {}",
            beta.len(),
            alpha.len()
        )));
    }
    Ok(beta.0.iter().zip(&alpha.0).all(|(b, a)| b <= a))
}

/// Number of `l`-dimensional subspaces of `F_q^m`, from the product formula.
pub fn gaussian_binomial(m: usize, l: usize, q: u64) -> Result<u128> {
    if l == 0 || l > m || q < 2 {
        return Err(Error::InvalidTuple(format!(
            "gaussian binomial needs 1 <= l <= m and q >= 2, got m={m}, l={l}, q={q}"
        )));
    }
    let pow = |e: usize| -> Result<u128> {
        u128::from(q)
            .checked_pow(e as u32)
            .ok_or(Error::Overflow("gaussian binomial"))
    };
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..l {
        let top = pow(m)? - pow(i)?;
        let bottom = pow(l)? - pow(i)?;
        num = num
            .checked_mul(top)
            .ok_or(Error::Overflow("gaussian binomial"))?;
        den = den
            .checked_mul(bottom)
            .ok_or(Error::Overflow("gaussian binomial"))?;
    }
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

/// Parameters `(l, m, q, alpha)` of a Schubert code.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SchubertSpec {
    l: usize,
    m: usize,
    q: u64,
    alpha: IndexTuple,
}

impl SchubertSpec {
    pub fn new(l: usize, m: usize, q: u64, alpha: Vec<usize>) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if l == 0 || l > m {
            return Err(Error::InvalidTuple(format!(
                "need 1 <= l <= m, got l={l}, m={m}"
            )));
        }
        if alpha.len() != l {
            return Err(Error::InvalidTuple(format!(
                "alpha {alpha:?} must have {l} entries"
            )));
        }
        Ok(Self {
            l,
            m,
            q,
            alpha: IndexTuple::new(alpha, m)?,
        })
    }

    /// The full Grassmann code: `alpha = (m-l+1, ..., m)`.
    pub fn grassmann(l: usize, m: usize, q: u64) -> Result<Self> {
        Self::new(l, m, q, (m - l + 1..=m).collect())
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn alpha(&self) -> &IndexTuple {
        &self.alpha
    }

    /// Tuples `beta <= alpha`, in lexicographic order.
    pub fn surviving_tuples(&self) -> Vec<IndexTuple> {
        index_tuples(self.l, self.m)
            .expect("validated shape")
            .into_iter()
            .filter(|b| bruhat_leq(b, &self.alpha).expect("same length"))
            .collect()
    }

    /// `sum (alpha_i - i)`.
    pub fn delta(&self) -> u32 {
        self.alpha
            .0
            .iter()
            .enumerate()
            .map(|(i, &a)| (a - (i + 1)) as u32)
            .sum()
    }
}

/// `[n, k, d]` data of a Schubert code; `d` is the closed form `q^delta`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SchubertParams {
    pub n_alpha: u64,
    pub k_alpha: usize,
    pub delta_alpha: u32,
    pub d: u128,
}

impl SchubertParams {
    pub fn capability(&self) -> u128 {
        (self.d - 1) / 2
    }

    /// Singleton bound attained.
    pub fn is_mds(&self) -> bool {
        self.k_alpha as u128 + self.d == u128::from(self.n_alpha) + 1
    }
}

pub fn schubert_params(spec: &SchubertSpec) -> Result<SchubertParams> {
    schubert_params_with(spec, &Limits::default())
}

pub fn schubert_params_with(spec: &SchubertSpec, limits: &Limits) -> Result<SchubertParams> {
    let mut n_alpha = 0u64;
    for_each_rref_basis::<u64>(spec.l, spec.m, spec.q, limits, Some(&spec.alpha), |_| {
        n_alpha += 1
    })?;
    let delta_alpha = spec.delta();
    Ok(SchubertParams {
        n_alpha,
        k_alpha: spec.surviving_tuples().len(),
        delta_alpha,
        d: u128::from(spec.q)
            .checked_pow(delta_alpha)
            .ok_or(Error::Overflow("q^delta"))?,
    })
}

/// A projective point given by its Plücker coordinates, indexed by
/// `index_tuples(l, m)` and scaled so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PluckerVector<R> {
    coords: Vec<R>,
}

impl<R: Residue> PluckerVector<R> {
    pub fn coords(&self) -> &[R] {
        &self.coords
    }

    pub fn get(&self, index: usize) -> R {
        self.coords[index]
    }

    /// Comma-separated residues.
    pub fn to_csv(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        parts.join(",")
    }
}

/// Plücker coordinates of the row space of an `l x m` matrix of rank `l`.
pub fn plucker<R: Residue>(basis: &Matrix<R>) -> Result<PluckerVector<R>> {
    let (l, m) = (basis.rows(), basis.cols());
    let p = basis.modulus();
    let mut coords = Vec::new();
    for tuple in index_tuples(l, m)? {
        let cols: Vec<usize> = tuple.0.iter().map(|c| c - 1).collect();
        coords.push(basis.select_columns(&cols).determinant()?);
    }
    let Some(first) = coords.iter().position(|c| !c.is_zero()) else {
        return Err(Error::NotABasis {
            rank: basis.rank(),
            rows: l,
        });
    };
    let inv = coords[first].inv_mod(p);
    for c in &mut coords {
        *c = c.mul_mod(inv, p);
    }
    Ok(PluckerVector { coords })
}

/// Which description of the Schubert variety selects points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchubertFilter {
    /// Pivot columns `j_i <= alpha_i` of the right-reduced echelon basis.
    Pivot,
    /// Plücker coordinates vanish at every `beta` not below `alpha`.
    Plucker,
}

/// Visits one echelon basis of every `l`-subspace of `F_q^m`.
///
/// The basis is reduced from the right: row `i` ends with a 1 in its pivot
/// column `j_i`, is zero beyond it, and every other row is zero in that
/// column. Then `dim(W ∩ span(e_1..e_a))` counts the pivots `<= a`, so the
/// Schubert condition is `j_i <= alpha_i`. Bases are visited by pivot tuple
/// (lex ascending), then by free entries read row-major as a base-`q`
/// integer ascending. With `bound`, only pivot tuples `<= bound` are visited.
pub fn for_each_rref_basis<R: Residue>(
    l: usize,
    m: usize,
    q: u64,
    limits: &Limits,
    bound: Option<&IndexTuple>,
    mut visit: impl FnMut(&Matrix<R>),
) -> Result<()> {
    let modulus = R::from_u64(q).ok_or(Error::Overflow("modulus"))?;
    let mut plans = Vec::new();
    let mut total: u128 = 0;
    for pivots in index_tuples(l, m)? {
        if let Some(b) = bound {
            if !bruhat_leq(&pivots, b)? {
                continue;
            }
        }
        let piv: Vec<usize> = pivots.0.iter().map(|c| c - 1).collect();
        let free: Vec<(usize, usize)> = (0..l)
            .flat_map(|r| {
                let piv = piv.clone();
                (0..piv[r])
                    .filter(move |c| !piv.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let count = u128::from(q)
            .checked_pow(free.len() as u32)
            .ok_or(Error::Overflow("subspace count"))?;
        total = total
            .checked_add(count)
            .ok_or(Error::Overflow("subspace count"))?;
        plans.push((piv, free));
    }
    let needed_log2 = 128 - total.saturating_sub(1).leading_zeros();
    if needed_log2 > limits.enumeration_log2 {
        return Err(Error::EnumerationBound {
            what: "subspace enumeration",
            needed_log2,
            limit_log2: limits.enumeration_log2,
        });
    }
    for (piv, free) in plans {
        let mut a = Matrix::<R>::zeros(l, m, modulus)?;
        for (r, &c) in piv.iter().enumerate() {
            a.set(r, c, R::one());
        }
        let mut digits = vec![0u64; free.len()];
        loop {
            for (&(r, c), &d) in free.iter().zip(&digits) {
                a.set(r, c, R::from_u64(d).expect("digit below modulus"));
            }
            visit(&a);
            // increment the base-q counter, last free entry least significant
            let Some(i) = digits.iter().rposition(|&d| d + 1 < q) else {
                break;
            };
            digits[i] += 1;
            for d in &mut digits[i + 1..] {
                *d = 0;
            }
        }
    }
    Ok(())
}

/// Points of the Schubert variety, selected by the pivot condition.
pub fn enumerate_schubert_points<R: Residue>(spec: &SchubertSpec) -> Result<Vec<PluckerVector<R>>> {
    enumerate_schubert_points_by(spec, SchubertFilter::Pivot, &Limits::default())
}

pub fn enumerate_schubert_points_by<R: Residue>(
    spec: &SchubertSpec,
    filter: SchubertFilter,
    limits: &Limits,
) -> Result<Vec<PluckerVector<R>>> {
    let tuples = index_tuples(spec.l, spec.m)?;
    let outside: Vec<usize> = tuples
        .iter()
        .enumerate()
        .filter(|(_, b)| !bruhat_leq(b, &spec.alpha).expect("same length"))
        .map(|(i, _)| i)
        .collect();
    let bound = match filter {
        SchubertFilter::Pivot => Some(&spec.alpha),
        SchubertFilter::Plucker => None,
    };
    let mut points = Vec::new();
    let mut failure = None;
    for_each_rref_basis::<R>(spec.l, spec.m, spec.q, limits, bound, |a| {
        if failure.is_some() {
            return;
        }
        match plucker(a) {
            Ok(p) => {
                if filter == SchubertFilter::Pivot || outside.iter().all(|&i| p.coords[i].is_zero())
                {
                    points.push(p);
                }
            }
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(points),
    }
}

/// Generator matrix of the Schubert code: row `r` evaluates the coordinate
/// `p_beta_r` (the `r`-th tuple below `alpha`) at every point.
pub fn generator_matrix<R: Residue>(spec: &SchubertSpec) -> Result<Matrix<R>> {
    generator_matrix_with(spec, &Limits::default())
}

pub fn generator_matrix_with<R: Residue>(
    spec: &SchubertSpec,
    limits: &Limits,
) -> Result<Matrix<R>> {
    let tuples = index_tuples(spec.l, spec.m)?;
    let rows: Vec<usize> = tuples
        .iter()
        .enumerate()
        .filter(|(_, b)| bruhat_leq(b, &spec.alpha).expect("same length"))
        .map(|(i, _)| i)
        .collect();
    let points = enumerate_schubert_points_by::<R>(spec, SchubertFilter::Pivot, limits)?;
    let modulus = R::from_u64(spec.q).ok_or(Error::Overflow("modulus"))?;
    let mut g = Matrix::zeros(rows.len(), points.len(), modulus)?;
    for (c, point) in points.iter().enumerate() {
        for (i, v) in point.coords.iter().enumerate() {
            if !rows.contains(&i) && !v.is_zero() {
                return Err(Error::ConstructionInvariant(format!(
                    "point {c} has nonzero coordinate at {}",
                    tuples[i]
                )));
            }
        }
        for (r, &i) in rows.iter().enumerate() {
            g.set(r, c, point.coords[i]);
        }
    }
    if g.has_zero_column() {
        return Err(Error::ConstructionInvariant("zero column".into()));
    }
    let rank = g.rank();
    if rank != rows.len() {
        return Err(Error::ConstructionInvariant(format!(
            "rank {rank} differs from k = {}",
            rows.len()
        )));
    }
    Ok(g)
}
