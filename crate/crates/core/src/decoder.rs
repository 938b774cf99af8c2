//! Decoding by canonical forms, cross-validation against the classical
//! decoders, and a seeded channel simulator.

use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::code::LinearCode;
use crate::gf::coset::{syndrome_decode, CosetLeaderTable};
use crate::gf::word::BinaryWord;
use crate::groebner::basis::ReducedGroebnerBasis;
use crate::groebner::monomial::SquarefreeMonomial;
use crate::limits::Limits;
use crate::scalar::Residue;

pub fn word_to_monomial(w: &BinaryWord) -> SquarefreeMonomial {
    SquarefreeMonomial::from(*w)
}

pub fn monomial_to_word(m: &SquarefreeMonomial) -> BinaryWord {
    m.to_word()
}

/// Parses a received word given either as a binary string or as a
/// monomial such as `x1*x2*x3` (`1` is the zero word).
pub fn parse_word(s: &str, n: usize) -> Result<BinaryWord> {
    let s = s.trim();
    let w = if s.contains('x') || (s == "1" && n != 1) {
        SquarefreeMonomial::parse(s, n)?.to_word()
    } else {
        s.parse::<BinaryWord>()?
    };
    w.check_len(n)?;
    Ok(w)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecodeStatus {
    Decoded,
    TooManyErrors,
}

/// Bounded decoding follows the canonical-form rule exactly; complete
/// decoding always returns the coset leader (not part of that rule).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum DecodeMode {
    #[default]
    Bounded,
    Complete,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    /// Canonical form of the received word.
    pub canonical: SquarefreeMonomial,
    pub nf_weight: u32,
    pub error: Option<BinaryWord>,
    pub codeword: Option<BinaryWord>,
}

pub fn gb_decode(w: &BinaryWord, gb: &ReducedGroebnerBasis) -> Result<DecodeOutcome> {
    gb_decode_with(w, gb, DecodeMode::Bounded)
}

pub fn gb_decode_with(
    w: &BinaryWord,
    gb: &ReducedGroebnerBasis,
    mode: DecodeMode,
) -> Result<DecodeOutcome> {
    w.check_len(gb.n())?;
    let t = gb.capability()?;
    decode_with_capability(w, gb, t, mode)
}

fn decode_with_capability(
    w: &BinaryWord,
    gb: &ReducedGroebnerBasis,
    t: u32,
    mode: DecodeMode,
) -> Result<DecodeOutcome> {
    let canonical = gb.normal_form(&word_to_monomial(w))?;
    let nf_weight = canonical.degree();
    if nf_weight <= t || mode == DecodeMode::Complete {
        let error = monomial_to_word(&canonical);
        Ok(DecodeOutcome {
            status: DecodeStatus::Decoded,
            canonical,
            nf_weight,
            error: Some(error),
            codeword: Some(w.xor(&error)?),
        })
    } else {
        Ok(DecodeOutcome {
            status: DecodeStatus::TooManyErrors,
            canonical,
            nf_weight,
            error: None,
            codeword: None,
        })
    }
}

/// Results of the three decoders on one received word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Agreement {
    pub gb: DecodeOutcome,
    pub syndrome: BinaryWord,
    pub nearest: BinaryWord,
    pub nearest_ambiguous: bool,
    pub gb_matches_syndrome: bool,
    pub gb_matches_nearest: bool,
    pub syndrome_matches_nearest: bool,
}

impl Agreement {
    /// When the basis decodes, all three codewords coincide and the
    /// nearest codeword is unique.
    pub fn is_consistent(&self) -> bool {
        match self.gb.status {
            DecodeStatus::Decoded => {
                self.gb_matches_syndrome && self.gb_matches_nearest && !self.nearest_ambiguous
            }
            DecodeStatus::TooManyErrors => true,
        }
    }
}

pub fn cross_check<R: Residue>(
    w: &BinaryWord,
    code: &LinearCode<R>,
    gb: &ReducedGroebnerBasis,
    table: &CosetLeaderTable,
) -> Result<Agreement> {
    let outcome = gb_decode(w, gb)?;
    let syndrome = syndrome_decode(w, table, code)?;
    let nn = code.nn_decode_with(w, &Limits::default())?;
    Ok(Agreement {
        gb: outcome,
        syndrome,
        nearest: nn.codeword,
        nearest_ambiguous: nn.ambiguous,
        gb_matches_syndrome: outcome.codeword == Some(syndrome),
        gb_matches_nearest: outcome.codeword == Some(nn.codeword),
        syndrome_matches_nearest: syndrome == nn.codeword,
    })
}

/// Channel used by the simulator.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum ErrorModel {
    /// Exactly `w` flipped positions, uniformly chosen.
    FixedWeight(usize),
    /// Each position flips independently with this probability.
    Bsc(f64),
}

impl fmt::Display for ErrorModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::FixedWeight(w) => write!(f, "fixed_weight({w})"),
            Self::Bsc(p) => write!(f, "bsc({p})"),
        }
    }
}

impl FromStr for ErrorModel {
    type Err = Error;

    /// Accepts `fixed_weight(3)`, `fixed_weight:3`, `bsc(0.1)`, `bsc:0.1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (name, arg) = s
            .split_once(['(', ':', '='])
            .map(|(a, b)| (a.trim(), b.trim().trim_end_matches(')').trim()))
            .ok_or_else(|| Error::Parse(format!("model `{s}` needs an argument")))?;
        match name {
            "fixed_weight" | "fixed-weight" | "weight" => arg
                .parse()
                .map(Self::FixedWeight)
                .map_err(|_| Error::Parse(format!("bad weight `{arg}`"))),
            "bsc" => {
                let p: f64 = arg
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad probability `{arg}`")))?;
                Ok(Self::Bsc(p))
            }
            _ => Err(Error::Parse(format!("unknown model `{name}`"))),
        }
    }
}

/// Tally of a simulation run.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SimReport {
    pub trials: u64,
    pub successes: u64,
    pub failures_flagged: u64,
    pub miscorrections: u64,
    pub seed: u64,
    pub model: ErrorModel,
}

impl fmt::Display for SimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trials={} successes={} failures_flagged={} miscorrections={} seed={} model={}",
            self.trials,
            self.successes,
            self.failures_flagged,
            self.miscorrections,
            self.seed,
            self.model
        )
    }
}

#[derive(Clone, Copy, Default)]
struct Tally {
    successes: u64,
    flagged: u64,
    miscorrected: u64,
}

impl Tally {
    fn merge(self, other: Self) -> Self {
        Self {
            successes: self.successes + other.successes,
            flagged: self.flagged + other.flagged,
            miscorrected: self.miscorrected + other.miscorrected,
        }
    }
}

/// Independent stream for one trial: the master seed keys the generator and
/// the trial index selects the stream, so scheduling never changes a draw.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Sends uniformly random codewords through the channel and decodes them
/// with the basis. Every decoded output is checked for code membership.
pub fn simulate<R: Residue>(
    code: &LinearCode<R>,
    gb: &ReducedGroebnerBasis,
    model: ErrorModel,
    trials: u64,
    seed: u64,
) -> Result<SimReport> {
    let n = code.n();
    if gb.n() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: gb.n(),
        });
    }
    match model {
        ErrorModel::Bsc(p) if !(0.0..=1.0).contains(&p) || p.is_nan() => {
            return Err(Error::InvalidProbability(p))
        }
        ErrorModel::FixedWeight(w) if w > n => {
            return Err(Error::Parse(format!("error weight {w} exceeds length {n}")))
        }
        _ => {}
    }
    let t = gb.capability()?;
    let k = code.k();
    let tally = (0..trials)
        .into_par_iter()
        .map(|trial| -> Result<Tally> {
            let mut rng = trial_rng(seed, trial);
            let message = if k == 0 {
                0
            } else {
                rng.gen::<u64>() & ((1u64 << k) - 1)
            };
            let sent = code.encode_bits(message)?;
            let error_bits = match model {
                ErrorModel::FixedWeight(w) => sample(&mut rng, n, w)
                    .into_iter()
                    .fold(0u64, |acc, i| acc | 1 << i),
                ErrorModel::Bsc(p) => (0..n)
                    .filter(|_| rng.gen_bool(p))
                    .fold(0u64, |acc, i| acc | 1 << i),
            };
            let received = sent.xor(&BinaryWord::from_bits(error_bits, n)?)?;
            let outcome = decode_with_capability(&received, gb, t, DecodeMode::Bounded)?;
            let mut tally = Tally::default();
            match outcome.codeword {
                None => tally.flagged = 1,
                Some(c) => {
                    if !code.contains(&c)? {
                        return Err(Error::ConstructionInvariant(format!(
                            "decoder returned non-codeword {c}"
                        )));
                    }
                    if c == sent {
                        tally.successes = 1;
                    } else {
                        tally.miscorrected = 1;
                    }
                }
            }
            Ok(tally)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    Ok(SimReport {
        trials,
        successes: tally.successes,
        failures_flagged: tally.flagged,
        miscorrections: tally.miscorrected,
        seed,
        model,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::matrix::Matrix;
    use crate::groebner::coset_engine::coset_engine;

    fn a14() -> LinearCode<u32> {
        let rows: Vec<Vec<u64>> = ["1000111", "0101110", "0011101"]
            .iter()
            .map(|r| r.bytes().map(|b| u64::from(b - b'0')).collect())
            .collect();
        LinearCode::new(Matrix::from_rows(&rows, 2).unwrap()).unwrap()
    }

    #[test]
    fn word_monomial_bijection() {
        for bits in 0u64..128 {
            let w = BinaryWord::from_bits(bits, 7).unwrap();
            assert_eq!(monomial_to_word(&word_to_monomial(&w)), w);
        }
        assert!(word_to_monomial(&BinaryWord::zero(7).unwrap()).is_one());
        let w: BinaryWord = "1111100".parse().unwrap();
        assert_eq!(word_to_monomial(&w).to_string(), "x1*x2*x3*x4*x5");
    }

    #[test]
    fn parse_word_forms() {
        assert_eq!(parse_word("x1*x2*x3", 7).unwrap().to_string(), "1110000");
        assert_eq!(parse_word("1110000", 7).unwrap().to_string(), "1110000");
        assert_eq!(parse_word("1", 7).unwrap().to_string(), "0000000");
        assert!(parse_word("111", 7).is_err());
    }

    #[test]
    fn decode_listed_word() {
        let gb = coset_engine(&a14()).unwrap();
        let out = gb_decode(&parse_word("x1*x2*x3*x4*x5", 7).unwrap(), &gb).unwrap();
        assert_eq!(out.status, DecodeStatus::Decoded);
        assert_eq!(out.canonical.to_string(), "x4");
        assert_eq!(out.codeword.unwrap().to_string(), "1110100");
    }

    #[test]
    fn beyond_radius_is_flagged_unless_complete() {
        let code = a14();
        let gb = coset_engine(&code).unwrap();
        // a weight-2 coset leader exceeds t = 1
        let w = BinaryWord::from_bits(0b11, 7).unwrap();
        let out = gb_decode(&w, &gb).unwrap();
        assert_eq!(out.status, DecodeStatus::TooManyErrors);
        assert_eq!(out.nf_weight, 2);
        assert!(out.codeword.is_none());
        let complete = gb_decode_with(&w, &gb, DecodeMode::Complete).unwrap();
        assert!(code.contains(&complete.codeword.unwrap()).unwrap());
    }

    #[test]
    fn codeword_cross_check() {
        let code = a14();
        let gb = coset_engine(&code).unwrap();
        let table = CosetLeaderTable::build(&code).unwrap();
        let c: BinaryWord = "1000111".parse().unwrap();
        let a = cross_check(&c, &code, &gb, &table).unwrap();
        assert!(a.is_consistent());
        assert!(a.gb.error.unwrap().is_zero());
    }

    #[test]
    fn model_parsing() {
        assert_eq!(
            "fixed_weight(3)".parse::<ErrorModel>().unwrap(),
            ErrorModel::FixedWeight(3)
        );
        assert_eq!(
            "bsc:0.25".parse::<ErrorModel>().unwrap(),
            ErrorModel::Bsc(0.25)
        );
        assert!("gauss(1)".parse::<ErrorModel>().is_err());
        assert_eq!(ErrorModel::FixedWeight(2).to_string(), "fixed_weight(2)");
    }

    #[test]
    fn simulator_edge_models() {
        let code = a14();
        let gb = coset_engine(&code).unwrap();
        for model in [
            ErrorModel::FixedWeight(0),
            ErrorModel::Bsc(0.0),
            ErrorModel::FixedWeight(1),
        ] {
            let r = simulate(&code, &gb, model, 200, 7).unwrap();
            assert_eq!(r.successes, 200, "{model}");
        }
        assert!(matches!(
            simulate(&code, &gb, ErrorModel::Bsc(1.5), 10, 0),
            Err(Error::InvalidProbability(_))
        ));
        assert!(simulate(&code, &gb, ErrorModel::Bsc(f64::NAN), 10, 0).is_err());
    }

    #[test]
    fn simulator_is_reproducible() {
        let code = a14();
        let gb = coset_engine(&code).unwrap();
        let a = simulate(&code, &gb, ErrorModel::Bsc(0.2), 500, 99).unwrap();
        let b = simulate(&code, &gb, ErrorModel::Bsc(0.2), 500, 99).unwrap();
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(
            a.successes + a.failures_flagged + a.miscorrections,
            a.trials
        );
        let c = simulate(&code, &gb, ErrorModel::Bsc(0.2), 500, 100).unwrap();
        assert_ne!(a, c);
    }
}
