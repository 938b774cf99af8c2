//! The reference verification suite: every check compares a computed value
//! against either a shipped fixture or an independent brute-force oracle.

use std::cell::{OnceCell, RefCell};
use std::collections::HashSet;
use std::fmt::{self, Write as _};

use clap::ValueEnum;
use sgb_core::gf::{LinearCode, Matrix};
use sgb_core::groebner::{buchberger_with, coset_engine_with, ideal_generators, parse_listing};
use sgb_core::oracle::{
    coset_minimum, minimal_nonstandard_leads, random_binary_codes, subspace_count,
};
use sgb_core::schubert::{
    enumerate_schubert_points_by, generator_matrix_with, schubert_params_with,
};
use sgb_core::{
    bruhat_leq, cross_check, gaussian_binomial, gb_decode, index_tuples, parse_word, simulate,
    Binomial, CosetLeaderTable, ErrorModel, Limits, ReducedGroebnerBasis, SchubertFilter,
    SchubertSpec, SquarefreeMonomial,
};

use crate::fixtures::{FixtureSet, ReferenceCode};

/// Seed shared by the random-code sample and the simulator runs.
pub const SEED: u64 = 20_240_601;
pub const RANDOM_CODES: usize = 25;
pub const SIM_TRIALS: u64 = 1000;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, ValueEnum)]
pub enum Group {
    Fixtures,
    Params,
    Construct,
    Gb,
    Engines,
    Capability,
    Decode,
    Radius,
    NormalForm,
    Counting,
    Simulate,
}

impl Group {
    pub const ALL: [Group; 11] = [
        Group::Fixtures,
        Group::Params,
        Group::Construct,
        Group::Gb,
        Group::Engines,
        Group::Capability,
        Group::Decode,
        Group::Radius,
        Group::NormalForm,
        Group::Counting,
        Group::Simulate,
    ];

    /// Acceptance criterion number; the checksum group has none.
    pub fn criterion(self) -> Option<u8> {
        match self {
            Group::Fixtures => None,
            g => Some(Group::ALL.iter().position(|&x| x == g).unwrap() as u8),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Group::Fixtures => "fixtures",
            Group::Params => "params",
            Group::Construct => "construct",
            Group::Gb => "gb",
            Group::Engines => "engines",
            Group::Capability => "capability",
            Group::Decode => "decode",
            Group::Radius => "radius",
            Group::NormalForm => "normal-form",
            Group::Counting => "counting",
            Group::Simulate => "simulate",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub group: Group,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        match self.group.criterion() {
            Some(c) => write!(f, "{status} [{c:>2}] {}: {}", self.group.name(), self.name)?,
            None => write!(f, "{status} [--] {}: {}", self.group.name(), self.name)?,
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    /// Informational findings that never fail the run.
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{c}");
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        );
        out
    }
}

struct Prepared {
    code: LinearCode<u32>,
    gb: ReducedGroebnerBasis,
}

struct Suite<'a> {
    fixtures: &'a FixtureSet,
    limits: Limits,
    prepared: Vec<OnceCell<Result<Prepared, String>>>,
    random: OnceCell<Result<Vec<LinearCode<u32>>, String>>,
    report: RefCell<Report>,
}

fn spec_of(pc: &ReferenceCode) -> Result<SchubertSpec, String> {
    SchubertSpec::new(2, 5, 2, pc.expected.alpha.clone()).map_err(|e| e.to_string())
}

fn fixture_code(pc: &ReferenceCode) -> Result<LinearCode<u32>, String> {
    let m = Matrix::<u32>::from_text(&pc.matrix).map_err(|e| format!("matrix fixture: {e}"))?;
    LinearCode::new(m).map_err(|e| format!("matrix fixture: {e}"))
}

impl<'a> Suite<'a> {
    fn new(fixtures: &'a FixtureSet, limits: Limits) -> Self {
        Self {
            fixtures,
            limits,
            prepared: fixtures.codes.iter().map(|_| OnceCell::new()).collect(),
            random: OnceCell::new(),
            report: RefCell::default(),
        }
    }

    fn record(&self, group: Group, name: impl Into<String>, outcome: Result<String, String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.report.borrow_mut().checks.push(Check {
            group,
            name: name.into(),
            passed,
            detail,
        });
    }

    fn prepared(&self, i: usize) -> Result<&Prepared, String> {
        let limits = self.limits;
        self.prepared[i]
            .get_or_init(|| {
                let code = fixture_code(&self.fixtures.codes[i])?;
                let gb = coset_engine_with(&code, &limits).map_err(|e| e.to_string())?;
                Ok(Prepared { code, gb })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn random_codes(&self) -> Result<&[LinearCode<u32>], String> {
        self.random
            .get_or_init(|| {
                random_binary_codes(RANDOM_CODES, 5..=10, 2..=5, 3, SEED).map_err(|e| e.to_string())
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    fn run(&self, group: Group) {
        match group {
            Group::Fixtures => self.fixtures_group(),
            Group::Params => self.params(),
            Group::Construct => self.construct(),
            Group::Gb => self.gb(),
            Group::Engines => self.engines(),
            Group::Capability => self.capability(),
            Group::Decode => self.decode(),
            Group::Radius => self.radius(),
            Group::NormalForm => self.normal_form(),
            Group::Counting => self.counting(),
            Group::Simulate => self.simulate(),
        }
    }

    fn fixtures_group(&self) {
        let entries = self.fixtures.checksums.clone();
        for e in entries {
            let outcome = if e.ok() {
                Ok(String::new())
            } else {
                Err(format!("expected {}, found {}", e.expected, e.actual))
            };
            self.record(Group::Fixtures, format!("checksum {}", e.file), outcome);
        }
    }

    fn params(&self) {
        let limits = self.limits;
        for pc in self.fixtures.codes.clone() {
            let e = &pc.expected;
            let outcome = spec_of(&pc).and_then(|spec| {
                let p = schubert_params_with(&spec, &limits).map_err(|e| e.to_string())?;
                let got = (p.n_alpha, p.k_alpha, p.d, p.capability());
                let want = (e.n, e.k, e.d, u128::from(e.t));
                if got == want {
                    Ok(format!("[{},{},{}] t={}", got.0, got.1, got.2, got.3))
                } else {
                    Err(format!("got {got:?}, expected {want:?}"))
                }
            });
            self.record(Group::Params, format!("{} parameters", pc.label()), outcome);

            let outcome = spec_of(&pc).and_then(|spec| {
                let q_delta = 2u128.pow(spec.delta());
                let built = generator_matrix_with::<u32>(&spec, &limits)
                    .and_then(LinearCode::new)
                    .and_then(|c| c.min_distance_bruteforce_with(&limits))
                    .map_err(|e| e.to_string())?;
                let printed = fixture_code(&pc)?
                    .min_distance_bruteforce_with(&limits)
                    .map_err(|e| e.to_string())?;
                if u128::from(built) == q_delta && u128::from(printed) == q_delta {
                    Ok(format!("d=2^{}={q_delta}", spec.delta()))
                } else {
                    Err(format!(
                        "constructed d={built}, printed d={printed}, 2^delta={q_delta}"
                    ))
                }
            });
            self.record(
                Group::Params,
                format!("{} brute-force distance", pc.label()),
                outcome,
            );
        }
    }

    fn construct(&self) {
        let limits = self.limits;
        for pc in self.fixtures.codes.clone() {
            let built = spec_of(&pc).and_then(|spec| {
                generator_matrix_with::<u32>(&spec, &limits).map_err(|e| e.to_string())
            });
            let printed =
                Matrix::<u32>::from_text(&pc.matrix).map_err(|e| format!("matrix fixture: {e}"));
            let outcome = match (&built, &printed) {
                (Ok(b), Ok(p)) if b.column_multiset() == p.column_multiset() => {
                    Ok(format!("{}x{}", b.rows(), b.cols()))
                }
                (Ok(b), Ok(p)) => Err(format!(
                    "constructed {}x{} and printed {}x{} columns differ",
                    b.rows(),
                    b.cols(),
                    p.rows(),
                    p.cols()
                )),
                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
            };
            self.record(
                Group::Construct,
                format!("{} column multiset", pc.label()),
                outcome,
            );

            let outcome = built.and_then(|b| {
                let rank = b.rank();
                match (rank == pc.expected.k, b.has_zero_column()) {
                    (true, false) => Ok(format!("rank={rank}")),
                    (r, z) => Err(format!("rank={rank} (full: {r}), zero column: {z}")),
                }
            });
            self.record(
                Group::Construct,
                format!("{} rank, no zero column", pc.label()),
                outcome,
            );
        }
    }

    fn gb(&self) {
        let limits = self.limits;
        for (i, pc) in self.fixtures.codes.clone().into_iter().enumerate() {
            let listing = parse_listing(&pc.listing).map_err(|e| format!("listing fixture: {e}"));
            let listed: Result<HashSet<Binomial>, String> =
                listing.map(|l| l.elements.into_iter().collect());
            if pc.listing_is_complete() {
                let outcome = self.prepared(i).and_then(|p| {
                    let listed = listed.clone()?;
                    let computed = p.gb.pair_set();
                    if computed == listed && computed.len() == 21 {
                        Ok(format!("{} elements", computed.len()))
                    } else {
                        Err(format!(
                            "computed {} elements, listed {}, {} listed elements missing",
                            computed.len(),
                            listed.len(),
                            listed.difference(&computed).count()
                        ))
                    }
                });
                self.record(
                    Group::Gb,
                    format!("{} listing equals basis", pc.label()),
                    outcome,
                );
                continue;
            }

            let spots: Vec<String> = self
                .fixtures
                .spots
                .iter()
                .filter(|(k, _)| k == pc.key)
                .map(|(_, b)| b.clone())
                .collect();
            let outcome = self.prepared(i).and_then(|p| {
                if spots.is_empty() {
                    return Err("no spot elements recorded".into());
                }
                let n = p.gb.n();
                let missing: Vec<&String> = spots
                    .iter()
                    .filter(|s| !Binomial::parse(s, n).is_ok_and(|b| p.gb.contains(&b)))
                    .collect();
                if missing.is_empty() {
                    Ok(format!("{} spot elements", spots.len()))
                } else {
                    Err(format!("missing {missing:?}"))
                }
            });
            self.record(
                Group::Gb,
                format!("{} contains spot elements", pc.label()),
                outcome,
            );

            let outcome = self.prepared(i).and_then(|p| {
                let n = p.gb.n();
                match p.gb.field_relation_count() {
                    c if c == n => Ok(format!("{c}")),
                    c => Err(format!("{c} field relations for n={n}")),
                }
            });
            self.record(
                Group::Gb,
                format!("{} field relations", pc.label()),
                outcome,
            );

            let outcome = self.prepared(i).and_then(|p| {
                let oracle =
                    minimal_nonstandard_leads(&p.code, &limits).map_err(|e| e.to_string())?;
                let mut leads: Vec<u64> =
                    p.gb.code_binomials()
                        .filter_map(|b| b.squarefree_masks())
                        .map(|m| m.0)
                        .collect();
                leads.sort_by(|a, b| sgb_core::groebner::degrevlex_cmp_mask(*a, *b));
                let expected = oracle.len() + p.gb.n();
                if p.gb.len() == expected && leads == oracle {
                    Ok(format!("{} elements", p.gb.len()))
                } else {
                    Err(format!(
                        "basis has {}, divisor scan gives {expected}",
                        p.gb.len()
                    ))
                }
            });
            self.record(
                Group::Gb,
                format!("{} element count vs divisor scan", pc.label()),
                outcome,
            );

            // the long listings are compared in full only as a note
            if let (Ok(p), Ok(listed)) = (self.prepared(i), &listed) {
                let computed = p.gb.pair_set();
                let agree = listed.intersection(&computed).count();
                let note = if agree == listed.len() && agree == computed.len() {
                    format!(
                        "{}: transcribed listing agrees with the basis in full ({agree} elements)",
                        pc.label()
                    )
                } else {
                    format!(
                        "{}: transcribed listing has {} elements, {agree} of them in the basis of {}",
                        pc.label(),
                        listed.len(),
                        computed.len()
                    )
                };
                self.report.borrow_mut().notes.push(note);
            }
        }
    }

    fn engines(&self) {
        let limits = self.limits;
        let agree = |code: &LinearCode<u32>| -> Result<String, String> {
            let gens = ideal_generators(code).map_err(|e| e.to_string())?;
            let (bb, _) = buchberger_with(&gens, code.n(), &limits).map_err(|e| e.to_string())?;
            let ce = coset_engine_with(code, &limits).map_err(|e| e.to_string())?;
            if bb.elements() == ce.elements() {
                Ok(format!("{} elements", ce.len()))
            } else {
                Err(format!(
                    "buchberger {} vs coset {} elements",
                    bb.len(),
                    ce.len()
                ))
            }
        };
        for pc in self.fixtures.codes.clone() {
            if !pc.listing_is_complete() {
                continue;
            }
            let outcome = fixture_code(&pc).and_then(|c| agree(&c));
            self.record(
                Group::Engines,
                format!("{} buchberger = coset", pc.label()),
                outcome,
            );
        }
        let outcome = self.random_codes().and_then(|codes| {
            let mut total = 0;
            for (i, c) in codes.iter().enumerate() {
                agree(c).map_err(|e| format!("code {i} (n={}, k={}): {e}", c.n(), c.k()))?;
                total += 1;
            }
            Ok(format!("{total} codes"))
        });
        self.record(Group::Engines, "random codes buchberger = coset", outcome);
    }

    fn capability(&self) {
        let limits = self.limits;
        for (i, pc) in self.fixtures.codes.clone().into_iter().enumerate() {
            let outcome = self.prepared(i).and_then(|p| match p.gb.capability() {
                Ok(t) if t == pc.expected.t => Ok(format!("t={t}")),
                Ok(t) => Err(format!("t={t}, expected {}", pc.expected.t)),
                Err(e) => Err(e.to_string()),
            });
            self.record(
                Group::Capability,
                format!("{} capability", pc.label()),
                outcome,
            );
        }
        let outcome = self.random_codes().and_then(|codes| {
            for (i, c) in codes.iter().enumerate() {
                let d = c
                    .min_distance_bruteforce_with(&limits)
                    .map_err(|e| e.to_string())?;
                let gb = coset_engine_with(c, &limits).map_err(|e| e.to_string())?;
                let t = gb.capability().map_err(|e| e.to_string())?;
                if t != (d - 1) / 2 {
                    return Err(format!("code {i}: t={t}, d={d}"));
                }
            }
            Ok(format!("{} codes", codes.len()))
        });
        self.record(Group::Capability, "random codes t = (d-1)/2", outcome);
    }

    fn decode(&self) {
        for (i, pc) in self.fixtures.codes.clone().into_iter().enumerate() {
            for (r, row) in pc.decode_rows.iter().enumerate() {
                let outcome = self.prepared(i).and_then(|p| {
                    let n = p.gb.n();
                    let parse = |s: &str| parse_word(s, n).map_err(|e| format!("`{s}`: {e}"));
                    let received = parse(&row.received)?;
                    let canonical = parse(&row.canonical)?;
                    let decoded = parse(&row.decoded)?;
                    let out = gb_decode(&received, &p.gb).map_err(|e| e.to_string())?;
                    let got_canonical = out.canonical.to_word();
                    match out.codeword {
                        Some(c) if got_canonical == canonical && c == decoded => Ok(format!(
                            "{} -> {}",
                            out.canonical,
                            SquarefreeMonomial::from(c)
                        )),
                        c => Err(format!(
                            "canonical {}, decoded {:?}",
                            out.canonical,
                            c.map(|c| SquarefreeMonomial::from(c).to_string())
                        )),
                    }
                });
                self.record(
                    Group::Decode,
                    format!("{} row {}: {}", pc.label(), r + 1, row.received),
                    outcome,
                );
            }
        }
    }

    fn radius(&self) {
        let limits = self.limits;
        for (i, pc) in self.fixtures.codes.clone().into_iter().enumerate() {
            let outcome = self.prepared(i).and_then(|p| {
                let n = p.code.n();
                let t = p.gb.capability().map_err(|e| e.to_string())?;
                let table =
                    CosetLeaderTable::build_with(&p.code, &limits).map_err(|e| e.to_string())?;
                let codewords = p.code.codeword_masks(&limits).map_err(|e| e.to_string())?;
                let errors: Vec<u64> = (0u64..1 << n).filter(|e| e.count_ones() <= t).collect();
                let mut trials = 0u64;
                for &c in &codewords {
                    for &e in &errors {
                        let w =
                            sgb_core::BinaryWord::from_bits(c ^ e, n).map_err(|e| e.to_string())?;
                        let a =
                            cross_check(&w, &p.code, &p.gb, &table).map_err(|e| e.to_string())?;
                        let sent =
                            sgb_core::BinaryWord::from_bits(c, n).map_err(|e| e.to_string())?;
                        if a.gb.codeword != Some(sent) || !a.is_consistent() {
                            return Err(format!(
                                "codeword {sent} with error pattern {e:#b}: {a:?}"
                            ));
                        }
                        trials += 1;
                    }
                }
                Ok(format!(
                    "{} codewords x {} patterns = {trials}",
                    codewords.len(),
                    errors.len()
                ))
            });
            self.record(
                Group::Radius,
                format!("{} radius-t completeness", pc.label()),
                outcome,
            );
        }
    }

    fn normal_form(&self) {
        let limits = self.limits;
        let check = |code: &LinearCode<u32>, gb: &ReducedGroebnerBasis| -> Result<String, String> {
            let n = code.n();
            let words = code.codeword_masks(&limits).map_err(|e| e.to_string())?;
            for a in 0u64..1 << n {
                let m = SquarefreeMonomial::from_mask(a, n).map_err(|e| e.to_string())?;
                let nf = gb.normal_form(&m).map_err(|e| e.to_string())?;
                let oracle = coset_minimum(a, &words);
                if nf.mask() != oracle {
                    return Err(format!("{m}: normal form {nf}, coset minimum {oracle:#b}"));
                }
            }
            Ok(format!("{} monomials", 1u64 << n))
        };
        for (i, pc) in self.fixtures.codes.clone().into_iter().enumerate() {
            if pc.expected.n > 12 {
                continue;
            }
            let outcome = self.prepared(i).and_then(|p| check(&p.code, &p.gb));
            self.record(
                Group::NormalForm,
                format!("{} normal form = coset minimum", pc.label()),
                outcome,
            );
        }
        let outcome = self.random_codes().and_then(|codes| {
            for (i, c) in codes.iter().enumerate() {
                let gb = coset_engine_with(c, &limits).map_err(|e| e.to_string())?;
                check(c, &gb).map_err(|e| format!("code {i}: {e}"))?;
            }
            Ok(format!("{} codes", codes.len()))
        });
        self.record(
            Group::NormalForm,
            "random codes normal form = coset minimum",
            outcome,
        );
    }

    fn counting(&self) {
        let limits = self.limits;
        let outcome = (|| {
            let formula = gaussian_binomial(5, 2, 2).map_err(|e| e.to_string())?;
            let counted = subspace_count(2, 5, 2, &limits).map_err(|e| e.to_string())?;
            if formula == 155 && counted == 155 {
                Ok("155".to_string())
            } else {
                Err(format!("formula {formula}, enumerated {counted}"))
            }
        })();
        self.record(Group::Counting, "G(2,5) over GF(2) has 155 points", outcome);

        for q in [2u64, 3] {
            let tuples = match index_tuples(2, 5) {
                Ok(t) => t,
                Err(e) => return self.record(Group::Counting, "index tuples", Err(e.to_string())),
            };
            for alpha in &tuples {
                let outcome = (|| {
                    let spec = SchubertSpec::new(2, 5, q, alpha.entries().to_vec())
                        .map_err(|e| e.to_string())?;
                    let n_alpha = schubert_params_with(&spec, &limits)
                        .map_err(|e| e.to_string())?
                        .n_alpha;
                    let count = |f| {
                        enumerate_schubert_points_by::<u32>(&spec, f, &limits)
                            .map(|p| p.len() as u64)
                            .map_err(|e| e.to_string())
                    };
                    let pivot = count(SchubertFilter::Pivot)?;
                    let plucker = count(SchubertFilter::Plucker)?;
                    // cell decomposition: one affine cell q^(sum beta_i - i) per beta <= alpha
                    let mut cells = 0u64;
                    for beta in &tuples {
                        if bruhat_leq(beta, alpha).map_err(|e| e.to_string())? {
                            let dim: usize = beta
                                .entries()
                                .iter()
                                .enumerate()
                                .map(|(i, b)| b - 1 - i)
                                .sum();
                            cells += q.pow(dim as u32);
                        }
                    }
                    if n_alpha == pivot && pivot == plucker && plucker == cells {
                        Ok(format!("{n_alpha}"))
                    } else {
                        Err(format!(
                            "n_alpha={n_alpha}, pivot={pivot}, plucker={plucker}, cells={cells}"
                        ))
                    }
                })();
                self.record(
                    Group::Counting,
                    format!("q={q} alpha={alpha} point count"),
                    outcome,
                );
            }
        }
    }

    fn simulate(&self) {
        for (i, pc) in self.fixtures.codes.clone().into_iter().enumerate() {
            let outcome = self.prepared(i).and_then(|p| {
                let run = |w: usize, seed: u64| {
                    simulate(&p.code, &p.gb, ErrorModel::FixedWeight(w), SIM_TRIALS, seed)
                        .map_err(|e| e.to_string())
                };
                let t = pc.expected.t as usize;
                let first = run(t, SEED)?.to_string();
                let second = run(t, SEED)?.to_string();
                if first != second {
                    return Err(format!("reports differ: `{first}` vs `{second}`"));
                }
                for w in 1..=t {
                    let r = run(w, SEED + w as u64)?;
                    if r.successes != SIM_TRIALS {
                        return Err(format!("weight {w}: {r}"));
                    }
                }
                Ok(first)
            });
            self.record(
                Group::Simulate,
                format!("{} deterministic, all weights <= t corrected", pc.label()),
                outcome,
            );
        }
    }
}

impl ReferenceCode {
    /// The short listings are transcribed in full and compared as sets.
    pub fn listing_is_complete(&self) -> bool {
        self.expected.n <= 7
    }
}

/// Runs the selected groups (all when `only` is empty), in suite order.
pub fn run(fixtures: &FixtureSet, only: &[Group], limits: Limits) -> Report {
    let suite = Suite::new(fixtures, limits);
    for g in Group::ALL {
        if only.is_empty() || only.contains(&g) {
            suite.run(g);
        }
    }
    suite.report.into_inner()
}
