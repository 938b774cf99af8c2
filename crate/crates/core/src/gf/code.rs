//! Linear codes over prime fields, with binary fast paths.

use crate::error::{Error, Result};
use crate::gf::matrix::{parity_check_of, Matrix};
use crate::gf::word::{BinaryWord, MAX_LEN};
use crate::limits::Limits;
use crate::scalar::Residue;

/// A linear `[n, k]_p` code given by a full-row-rank generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode<R> {
    generator: Matrix<R>,
    parity_check: Matrix<R>,
    binary: Option<BinaryView>,
}

/// Bit-mask form of a binary code.
#[derive(Clone, Debug, PartialEq, Eq)]
struct BinaryView {
    rows: Vec<u64>,
    /// Syndrome contribution of each coordinate: bit `j` is `H[j][i]`.
    column_syndromes: Vec<u64>,
}

/// Outcome of brute-force nearest-neighbour decoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NearestNeighbour {
    pub codeword: BinaryWord,
    pub distance: u32,
    /// More than one codeword attains the minimum distance.
    pub ambiguous: bool,
}

impl<R: Residue> LinearCode<R> {
    pub fn new(generator: Matrix<R>) -> Result<Self> {
        let parity_check = parity_check_of(&generator)?;
        let is_binary = generator.modulus() == R::one() + R::one();
        // packed words need n <= 64; longer binary codes keep the generic paths
        let binary = if is_binary && generator.cols() <= MAX_LEN {
            let mask_of = |m: &Matrix<R>, r: usize| {
                m.row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            };
            let rows = (0..generator.rows())
                .map(|r| mask_of(&generator, r))
                .collect();
            let column_syndromes = (0..generator.cols())
                .map(|c| {
                    (0..parity_check.rows())
                        .filter(|&j| !parity_check.get(j, c).is_zero())
                        .fold(0u64, |acc, j| acc | 1 << j)
                })
                .collect();
            Some(BinaryView {
                rows,
                column_syndromes,
            })
        } else {
            None
        };
        Ok(Self {
            generator,
            parity_check,
            binary,
        })
    }

    pub fn generator(&self) -> &Matrix<R> {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix<R> {
        &self.parity_check
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn modulus(&self) -> u64 {
        self.generator.modulus().to_u64().expect("modulus fits u64")
    }

    pub fn is_binary(&self) -> bool {
        self.modulus() == 2
    }

    fn binary_view(&self) -> Result<&BinaryView> {
        self.binary.as_ref().ok_or_else(|| {
            if self.is_binary() {
                Error::WordTooLong(self.n())
            } else {
                Error::BinaryOnly(self.modulus())
            }
        })
    }

    /// Generator rows as words (binary codes only).
    pub fn generator_words(&self) -> Result<Vec<BinaryWord>> {
        let n = self.n();
        self.binary_view()?
            .rows
            .iter()
            .map(|&r| BinaryWord::from_bits(r, n))
            .collect()
    }

    pub(crate) fn row_masks(&self) -> Result<&[u64]> {
        Ok(&self.binary_view()?.rows)
    }

    pub(crate) fn column_syndromes(&self) -> Result<&[u64]> {
        Ok(&self.binary_view()?.column_syndromes)
    }

    /// Syndrome of a raw mask as an integer (bit `j` = `j`-th check).
    #[inline]
    pub(crate) fn syndrome_bits(view_cols: &[u64], mut word: u64) -> u64 {
        let mut s = 0;
        while word != 0 {
            s ^= view_cols[word.trailing_zeros() as usize];
            word &= word - 1;
        }
        s
    }

    /// `w·Hᵀ`, a word of length `n − k`.
    pub fn syndrome(&self, w: &BinaryWord) -> Result<BinaryWord> {
        let view = self.binary_view()?;
        w.check_len(self.n())?;
        BinaryWord::from_bits(
            Self::syndrome_bits(&view.column_syndromes, w.bits()),
            self.n() - self.k(),
        )
    }

    pub fn contains(&self, w: &BinaryWord) -> Result<bool> {
        Ok(self.syndrome(w)?.is_zero())
    }

    /// Encodes a message given as a `k`-bit mask (bit `i` selects row `i+1`).
    pub fn encode_bits(&self, message: u64) -> Result<BinaryWord> {
        let view = self.binary_view()?;
        let word = view
            .rows
            .iter()
            .enumerate()
            .filter(|(i, _)| message >> i & 1 == 1)
            .fold(0u64, |acc, (_, r)| acc ^ r);
        BinaryWord::from_bits(word, self.n())
    }

    fn check_enumeration(&self, limits: &Limits) -> Result<()> {
        let bits_per_symbol = 64 - (self.modulus() - 1).leading_zeros();
        let needed = self.k() as u32 * bits_per_symbol;
        if needed > limits.enumeration_log2 {
            return Err(Error::EnumerationBound {
                what: "codeword enumeration",
                needed_log2: needed,
                limit_log2: limits.enumeration_log2,
            });
        }
        Ok(())
    }

    /// All `2^k` codewords as masks, in Gray-code order (binary only).
    pub fn codeword_masks(&self, limits: &Limits) -> Result<Vec<u64>> {
        self.check_enumeration(limits)?;
        let rows = self.row_masks()?;
        let mut out = Vec::with_capacity(1 << rows.len());
        let mut w = 0u64;
        out.push(w);
        for i in 1u64..1 << rows.len() {
            w ^= rows[i.trailing_zeros() as usize];
            out.push(w);
        }
        Ok(out)
    }

    /// Calls `f` with the Hamming weight of every codeword.
    fn for_each_weight(&self, limits: &Limits, mut f: impl FnMut(usize)) -> Result<()> {
        self.check_enumeration(limits)?;
        if self.binary.is_some() {
            for w in self.codeword_masks(limits)? {
                f(w.count_ones() as usize);
            }
            return Ok(());
        }
        let p = self.generator.modulus();
        let (k, n) = (self.k(), self.n());
        let mut coeffs = vec![R::zero(); k];
        let mut word = vec![R::zero(); n];
        loop {
            f(word.iter().filter(|v| !v.is_zero()).count());
            // odometer step; adding the row once moves coefficient c to c+1,
            // including the wrap from p-1 back to 0
            let mut i = 0;
            loop {
                if i == k {
                    return Ok(());
                }
                for (w, &g) in word.iter_mut().zip(self.generator.row(i)) {
                    *w = w.add_mod(g, p);
                }
                coeffs[i] = coeffs[i].add_mod(R::one(), p);
                if !coeffs[i].is_zero() {
                    break;
                }
                i += 1;
            }
        }
    }

    /// Number of codewords of each weight `0..=n`.
    pub fn weight_distribution(&self) -> Result<Vec<u64>> {
        self.weight_distribution_with(&Limits::default())
    }

    pub fn weight_distribution_with(&self, limits: &Limits) -> Result<Vec<u64>> {
        let mut dist = vec![0u64; self.n() + 1];
        self.for_each_weight(limits, |w| dist[w] += 1)?;
        Ok(dist)
    }

    /// Exact minimum distance by enumerating every codeword.
    pub fn min_distance_bruteforce(&self) -> Result<u32> {
        self.min_distance_bruteforce_with(&Limits::default())
    }

    pub fn min_distance_bruteforce_with(&self, limits: &Limits) -> Result<u32> {
        if self.k() == 0 {
            return Err(Error::Shape(
                "zero-dimensional code has no nonzero codeword".into(),
            ));
        }
        let mut best = usize::MAX;
        self.for_each_weight(limits, |w| {
            if w > 0 {
                best = best.min(w);
            }
        })?;
        Ok(best as u32)
    }

    /// Brute-force nearest-neighbour decoding; ties resolve to the
    /// lexicographically smallest codeword.
    pub fn nn_decode(&self, w: &BinaryWord) -> Result<NearestNeighbour> {
        self.nn_decode_with(w, &Limits::default())
    }

    pub fn nn_decode_with(&self, w: &BinaryWord, limits: &Limits) -> Result<NearestNeighbour> {
        w.check_len(self.n())?;
        let n = self.n();
        let mut best: Option<(u32, u64, u64)> = None; // (distance, lex key, mask)
        let mut ties = 0usize;
        for c in self.codeword_masks(limits)? {
            let d = (c ^ w.bits()).count_ones();
            let key = BinaryWord::from_bits(c, n)?.lex_key();
            match best {
                Some((bd, _, _)) if d > bd => {}
                Some((bd, bk, _)) if d == bd => {
                    ties += 1;
                    if key < bk {
                        best = Some((d, key, c));
                    }
                }
                _ => {
                    best = Some((d, key, c));
                    ties = 0;
                }
            }
        }
        let (distance, _, mask) = best.expect("a linear code contains the zero word");
        Ok(NearestNeighbour {
            codeword: BinaryWord::from_bits(mask, n)?,
            distance,
            ambiguous: ties > 0,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[&str]) -> LinearCode<u32> {
        let data: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.bytes().map(|b| u64::from(b - b'0')).collect())
            .collect();
        LinearCode::new(Matrix::from_rows(&data, 2).unwrap()).unwrap()
    }

    fn a14() -> LinearCode<u32> {
        code(&["1000111", "0101110", "0011101"])
    }

    #[test]
    fn generator_rows_have_zero_syndrome() {
        let c = a14();
        for w in c.generator_words().unwrap() {
            assert!(c.syndrome(&w).unwrap().is_zero());
        }
        assert!(c.syndrome(&BinaryWord::zero(7).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn weight_one_word_is_not_a_codeword() {
        let c = a14();
        let s = c.syndrome(&"1000000".parse().unwrap()).unwrap();
        assert_eq!(s.len(), 4);
        assert!(!s.is_zero());
    }

    #[test]
    fn syndrome_length_mismatch() {
        let c = a14();
        assert!(matches!(
            c.syndrome(&"101".parse().unwrap()),
            Err(Error::LengthMismatch {
                expected: 7,
                got: 3
            })
        ));
    }

    #[test]
    fn distances() {
        assert_eq!(a14().min_distance_bruteforce().unwrap(), 4);
        assert_eq!(code(&["111"]).min_distance_bruteforce().unwrap(), 3);
    }

    #[test]
    fn weight_distributions() {
        let d = a14().weight_distribution().unwrap();
        assert_eq!(d, vec![1, 0, 0, 0, 7, 0, 0, 0]);
        let empty = LinearCode::new(Matrix::<u32>::zeros(0, 4, 2).unwrap()).unwrap();
        assert_eq!(empty.weight_distribution().unwrap(), vec![1, 0, 0, 0, 0]);
        assert_eq!(empty.parity_check().rows(), 4);
    }

    #[test]
    fn ternary_weight_distribution() {
        // ternary repetition code [3,1,3]_3 plus the [4,2,3]_3 tetracode
        let rep = LinearCode::new(Matrix::<u32>::from_rows(&[vec![1, 1, 1]], 3).unwrap()).unwrap();
        assert_eq!(rep.weight_distribution().unwrap(), vec![1, 0, 0, 2]);
        let tetra = LinearCode::new(
            Matrix::<u32>::from_rows(&[vec![1, 0, 1, 1], vec![0, 1, 1, 2]], 3).unwrap(),
        )
        .unwrap();
        assert_eq!(tetra.weight_distribution().unwrap(), vec![1, 0, 0, 8, 0]);
        assert_eq!(tetra.min_distance_bruteforce().unwrap(), 3);
        assert!(tetra.syndrome(&BinaryWord::zero(4).unwrap()).is_err());
    }

    #[test]
    fn enumeration_guard() {
        let c = a14();
        let tight = Limits {
            enumeration_log2: 2,
            ..Limits::default()
        };
        assert!(matches!(
            c.min_distance_bruteforce_with(&tight),
            Err(Error::EnumerationBound { needed_log2: 3, .. })
        ));
    }

    #[test]
    fn nn_decode_examples() {
        let c = a14();
        let cw: BinaryWord = "1110100".parse().unwrap();
        let r = c.nn_decode(&cw).unwrap();
        assert_eq!((r.codeword, r.distance, r.ambiguous), (cw, 0, false));
        let r = c.nn_decode(&"1111100".parse().unwrap()).unwrap();
        assert_eq!(r.codeword, cw);
        assert!(!r.ambiguous);
    }

    #[test]
    fn nn_decode_reports_ties() {
        let c = a14();
        // any word whose nearest codeword is at distance 2 sits in a weight-2 coset
        let tie = (0u64..128)
            .map(|b| BinaryWord::from_bits(b, 7).unwrap())
            .find(|w| c.nn_decode(w).unwrap().distance == 2)
            .unwrap();
        let r = c.nn_decode(&tie).unwrap();
        assert!(r.ambiguous);
        // tie-break is the lexicographically smallest among the minimizers
        let minimizers: Vec<BinaryWord> = c
            .codeword_masks(&Limits::default())
            .unwrap()
            .into_iter()
            .map(|m| BinaryWord::from_bits(m, 7).unwrap())
            .filter(|cw| cw.distance(&tie).unwrap() == 2)
            .collect();
        assert!(minimizers.len() >= 2);
        assert_eq!(
            r.codeword,
            *minimizers.iter().min_by_key(|w| w.to_string()).unwrap()
        );
    }
}
