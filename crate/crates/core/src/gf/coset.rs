//! Syndrome look-up tables with degrevlex-minimal coset leaders.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gf::code::LinearCode;
use crate::gf::word::BinaryWord;
use crate::groebner::order::degrevlex_cmp_mask;
use crate::limits::Limits;
use crate::scalar::Residue;

/// One leader per syndrome, indexed by the syndrome read as an integer
/// (bit `j` is the `j`-th parity check).
///
/// Each leader has minimum weight in its coset and, among those, is the
/// degrevlex-smallest, which makes it the standard monomial of the coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetLeaderTable {
    n: usize,
    redundancy: usize,
    leaders: Vec<u64>,
}

impl CosetLeaderTable {
    pub fn build<R: Residue>(code: &LinearCode<R>) -> Result<Self> {
        Self::build_with(code, &Limits::default())
    }

    /// Gray-code scan over all `2^n` words, keeping the degrevlex minimum
    /// of each syndrome class.
    pub fn build_with<R: Residue>(code: &LinearCode<R>, limits: &Limits) -> Result<Self> {
        if !code.is_binary() {
            return Err(Error::BinaryOnly(code.modulus()));
        }
        let n = code.n();
        if n > limits.coset_n {
            return Err(Error::EnumerationBound {
                what: "coset leader table",
                needed_log2: n as u32,
                limit_log2: limits.coset_n as u32,
            });
        }
        let cols = code.column_syndromes()?;
        let redundancy = n - code.k();
        const UNSET: u64 = u64::MAX;
        let mut leaders = vec![UNSET; 1usize << redundancy];
        leaders[0] = 0;
        let (mut word, mut syn) = (0u64, 0u64);
        for i in 1u64..1 << n {
            let bit = i.trailing_zeros() as usize;
            word ^= 1 << bit;
            syn ^= cols[bit];
            let slot = &mut leaders[syn as usize];
            if *slot == UNSET || degrevlex_cmp_mask(word, *slot) == Ordering::Less {
                *slot = word;
            }
        }
        debug_assert!(leaders.iter().all(|&l| l != UNSET));
        Ok(Self {
            n,
            redundancy,
            leaders,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of cosets, `2^(n-k)`.
    pub fn len(&self) -> usize {
        self.leaders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    pub fn redundancy(&self) -> usize {
        self.redundancy
    }

    pub fn leader_masks(&self) -> &[u64] {
        &self.leaders
    }

    pub fn leader(&self, syndrome: &BinaryWord) -> Result<BinaryWord> {
        syndrome.check_len(self.redundancy)?;
        BinaryWord::from_bits(self.leaders[syndrome.bits() as usize], self.n)
    }

    /// Leader of the coset containing `w`.
    pub fn leader_of<R: Residue>(
        &self,
        w: &BinaryWord,
        code: &LinearCode<R>,
    ) -> Result<BinaryWord> {
        self.leader(&code.syndrome(w)?)
    }

    /// Number of cosets whose leader has each weight.
    pub fn leader_weight_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n + 1];
        for l in &self.leaders {
            counts[l.count_ones() as usize] += 1;
        }
        counts
    }
}

/// Decodes `w` to `w − leader(S(w))`.
pub fn syndrome_decode<R: Residue>(
    w: &BinaryWord,
    table: &CosetLeaderTable,
    code: &LinearCode<R>,
) -> Result<BinaryWord> {
    w.xor(&table.leader_of(w, code)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::matrix::Matrix;

    fn a14() -> LinearCode<u32> {
        let rows: Vec<Vec<u64>> = ["1000111", "0101110", "0011101"]
            .iter()
            .map(|r| r.bytes().map(|b| u64::from(b - b'0')).collect())
            .collect();
        LinearCode::new(Matrix::from_rows(&rows, 2).unwrap()).unwrap()
    }

    #[test]
    fn zero_syndrome_has_zero_leader() {
        let t = CosetLeaderTable::build(&a14()).unwrap();
        assert_eq!(t.leader_masks()[0], 0);
        assert_eq!(t.len(), 16);
    }

    #[test]
    fn leaders_match_their_syndromes() {
        let code = a14();
        let t = CosetLeaderTable::build(&code).unwrap();
        for (s, &l) in t.leader_masks().iter().enumerate() {
            let w = BinaryWord::from_bits(l, 7).unwrap();
            assert_eq!(code.syndrome(&w).unwrap().bits(), s as u64);
        }
    }

    #[test]
    fn leader_of_listed_received_word() {
        let code = a14();
        let t = CosetLeaderTable::build(&code).unwrap();
        let w: BinaryWord = "1111100".parse().unwrap();
        assert_eq!(t.leader_of(&w, &code).unwrap().to_string(), "0001000");
        assert_eq!(
            syndrome_decode(&w, &t, &code).unwrap().to_string(),
            "1110100"
        );
    }

    #[test]
    fn leader_weight_profile() {
        // full 2^7 enumeration: weights 0,1,2,3 occur 1,7,7,1 times
        let t = CosetLeaderTable::build(&a14()).unwrap();
        assert_eq!(t.leader_weight_counts(), vec![1, 7, 7, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn leaders_are_coset_minima_by_brute_force() {
        let code = a14();
        let t = CosetLeaderTable::build(&code).unwrap();
        let words = code.codeword_masks(&Limits::default()).unwrap();
        for u in 0u64..128 {
            let min = words
                .iter()
                .map(|c| u ^ c)
                .min_by(|a, b| degrevlex_cmp_mask(*a, *b))
                .unwrap();
            let w = BinaryWord::from_bits(u, 7).unwrap();
            assert_eq!(t.leader_of(&w, &code).unwrap().bits(), min);
        }
    }

    #[test]
    fn guards() {
        let code = a14();
        let tight = Limits {
            coset_n: 6,
            ..Limits::default()
        };
        assert!(CosetLeaderTable::build_with(&code, &tight).is_err());
        let ternary = LinearCode::new(Matrix::<u32>::from_rows(&[vec![1, 2]], 3).unwrap()).unwrap();
        assert_eq!(
            CosetLeaderTable::build(&ternary).unwrap_err(),
            Error::BinaryOnly(3)
        );
    }
}
