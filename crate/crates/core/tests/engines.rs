use sgb_core::groebner::{buchberger, coset_engine, ideal_generators, is_groebner};
use sgb_core::oracle::{coset_minimum, minimal_nonstandard_leads, random_binary_codes};
use sgb_core::{FpMatrix, LinearCode, SquarefreeMonomial};

fn code(rows: &[&str]) -> LinearCode {
    let rows: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.bytes().map(|b| u64::from(b - b'0')).collect())
        .collect();
    LinearCode::new(FpMatrix::from_rows(&rows, 2).unwrap()).unwrap()
}

fn hamming_like() -> Vec<LinearCode> {
    vec![
        code(&["1000111", "0101110", "0011101"]),
        code(&["1000111", "0101101", "0011011"]),
    ]
}

#[test]
fn engines_agree_on_small_simplex_codes() {
    for c in hamming_like() {
        let gens = ideal_generators(&c).unwrap();
        let bb = buchberger(&gens, c.n()).unwrap();
        let ce = coset_engine(&c).unwrap();
        assert_eq!(bb.elements(), ce.elements());
        assert_eq!(ce.len(), 21);
        assert_eq!(ce.capability().unwrap(), 1);
    }
}

#[test]
fn engines_agree_on_random_codes() {
    let codes = random_binary_codes(12, 5..=9, 2..=4, 3, 7).unwrap();
    for c in &codes {
        let gens = ideal_generators(c).unwrap();
        let bb = buchberger(&gens, c.n()).unwrap();
        let ce = coset_engine(c).unwrap();
        assert_eq!(bb.elements(), ce.elements(), "n={} k={}", c.n(), c.k());
        let d = c.min_distance_bruteforce().unwrap();
        assert_eq!(ce.capability().unwrap(), (d - 1) / 2);
        assert!(c.k() as u32 + d <= c.n() as u32 + 1);
    }
}

#[test]
fn generators_alone_are_not_a_basis() {
    let c = &hamming_like()[0];
    let gens = ideal_generators(c).unwrap();
    assert!(!is_groebner(&gens));
    let gb = coset_engine(c).unwrap();
    assert!(is_groebner(gb.elements()));
}

#[test]
fn leads_match_divisor_scan() {
    for c in hamming_like() {
        let gb = coset_engine(&c).unwrap();
        let mut leads: Vec<u64> = gb
            .code_binomials()
            .map(|b| b.squarefree_masks().unwrap().0)
            .collect();
        leads.sort_unstable();
        let mut oracle = minimal_nonstandard_leads(&c, &Default::default()).unwrap();
        oracle.sort_unstable();
        assert_eq!(leads, oracle);
    }
}

#[test]
fn normal_form_is_coset_minimum_and_confluent() {
    let c = &hamming_like()[1];
    let gb = coset_engine(c).unwrap();
    let words = c.codeword_masks(&Default::default()).unwrap();
    let mut state = 1u64;
    for a in 0..1u64 << c.n() {
        let m = SquarefreeMonomial::from_mask(a, c.n()).unwrap();
        let nf = gb.normal_form(&m).unwrap();
        assert_eq!(nf.mask(), coset_minimum(a, &words));
        // any choice of reducer reaches the same remainder
        let other = gb
            .normal_form_by(&m, |len| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as usize % len
            })
            .unwrap();
        assert_eq!(other, nf);
    }
}
