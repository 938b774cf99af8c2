/// Resource guards for exhaustive enumerations.
///
/// The defaults keep every scan at desk scale; callers raise them
/// explicitly when they know the instance is tractable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Limits {
    /// Maximum base-2 logarithm of the number of codewords or points enumerated.
    pub enumeration_log2: u32,
    /// Maximum code length for 2^n scans (coset tables, coset engine).
    pub coset_n: usize,
    /// Maximum variable count accepted by the Buchberger engine.
    pub buchberger_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            enumeration_log2: 24,
            coset_n: 24,
            buchberger_n: 12,
        }
    }
}

impl Limits {
    /// Limits with both enumeration guards set to `max_n`.
    pub fn with_max_n(max_n: usize) -> Self {
        Self {
            enumeration_log2: max_n as u32,
            coset_n: max_n,
            ..Self::default()
        }
    }
}
