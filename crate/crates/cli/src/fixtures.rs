//! Reference data shipped with the tool: printed generator matrices, basis
//! listings, decoding tables and expected parameters, with a SHA-256
//! manifest.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::CliError;

pub const MANIFEST: &str = "SHA256SUMS";
pub const CODES: [&str; 4] = ["1_4", "1_5", "2_3", "2_4"];

/// Directory used when neither `--fixtures` nor `SGB_FIXTURES` is given.
pub fn default_dir() -> PathBuf {
    match std::env::var_os("SGB_FIXTURES") {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedParams {
    pub alpha: Vec<usize>,
    pub n: u64,
    pub k: usize,
    pub d: u128,
    pub t: u32,
}

/// One row of a decoding table, as monomial strings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeRow {
    pub received: String,
    pub canonical: String,
    pub decoded: String,
}

#[derive(Clone, Debug)]
pub struct ReferenceCode {
    pub key: &'static str,
    pub matrix: String,
    pub listing: String,
    pub decode_rows: Vec<DecodeRow>,
    pub expected: ExpectedParams,
}

impl ReferenceCode {
    pub fn label(&self) -> String {
        format!("A({})", self.key.replace('_', ","))
    }
}

/// Result of comparing one file against the manifest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChecksumEntry {
    pub file: String,
    pub expected: String,
    pub actual: String,
}

impl ChecksumEntry {
    pub fn ok(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub dir: PathBuf,
    pub codes: Vec<ReferenceCode>,
    /// `(code key, binomial)` pairs quoted from the long listings.
    pub spots: Vec<(String, String)>,
    pub checksums: Vec<ChecksumEntry>,
}

fn read(dir: &Path, name: &str) -> Result<String, CliError> {
    let path = dir.join(name);
    fs::read_to_string(&path).map_err(|_| CliError::MissingFixture(path))
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn bad(file: &str, line: &str) -> CliError {
    CliError::Usage(format!("malformed fixture line in {file}: `{line}`"))
}

fn parse_params(text: &str) -> Result<BTreeMap<String, ExpectedParams>, CliError> {
    let mut out = BTreeMap::new();
    for line in data_lines(text) {
        let mut fields = line.split_whitespace();
        let key = fields.next().ok_or_else(|| bad("params.txt", line))?;
        let mut alpha = None;
        let (mut n, mut k, mut d, mut t) = (None, None, None, None);
        for f in fields {
            let (name, value) = f.split_once('=').ok_or_else(|| bad("params.txt", line))?;
            match name {
                "alpha" => {
                    alpha = Some(
                        value
                            .split(',')
                            .map(|v| v.parse().map_err(|_| bad("params.txt", line)))
                            .collect::<Result<Vec<usize>, _>>()?,
                    )
                }
                "n" => n = value.parse().ok(),
                "k" => k = value.parse().ok(),
                "d" => d = value.parse().ok(),
                "t" => t = value.parse().ok(),
                _ => return Err(bad("params.txt", line)),
            }
        }
        let expected = ExpectedParams {
            alpha: alpha.ok_or_else(|| bad("params.txt", line))?,
            n: n.ok_or_else(|| bad("params.txt", line))?,
            k: k.ok_or_else(|| bad("params.txt", line))?,
            d: d.ok_or_else(|| bad("params.txt", line))?,
            t: t.ok_or_else(|| bad("params.txt", line))?,
        };
        out.insert(key.to_string(), expected);
    }
    Ok(out)
}

fn parse_decode_rows(file: &str, text: &str) -> Result<Vec<DecodeRow>, CliError> {
    data_lines(text)
        .map(|line| {
            let cells: Vec<&str> = line.split('|').map(str::trim).collect();
            match cells[..] {
                [r, c, d] => Ok(DecodeRow {
                    received: r.into(),
                    canonical: c.into(),
                    decoded: d.into(),
                }),
                _ => Err(bad(file, line)),
            }
        })
        .collect()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Recomputes every digest listed in the manifest; a listed file that is
/// absent is a missing fixture.
fn verify_manifest(dir: &Path) -> Result<Vec<ChecksumEntry>, CliError> {
    let manifest = read(dir, MANIFEST)?;
    data_lines(&manifest)
        .map(|line| {
            let (digest, file) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| bad(MANIFEST, line))?;
            let file = file.trim().trim_start_matches('*').to_string();
            let path = dir.join(&file);
            let bytes = fs::read(&path).map_err(|_| CliError::MissingFixture(path))?;
            Ok(ChecksumEntry {
                file,
                expected: digest.to_ascii_lowercase(),
                actual: sha256_hex(&bytes),
            })
        })
        .collect()
}

impl FixtureSet {
    pub fn load_default() -> Result<Self, CliError> {
        Self::load(&default_dir())
    }

    pub fn load(dir: &Path) -> Result<Self, CliError> {
        let checksums = verify_manifest(dir)?;
        let mut params = parse_params(&read(dir, "params.txt")?)?;
        let mut codes = Vec::with_capacity(CODES.len());
        for key in CODES {
            let decode_file = format!("decode_{key}.txt");
            let expected = params
                .remove(key)
                .ok_or_else(|| CliError::Usage(format!("params.txt lacks code {key}")))?;
            codes.push(ReferenceCode {
                key,
                matrix: read(dir, &format!("matrix_{key}.txt"))?,
                listing: read(dir, &format!("gb_{key}.txt"))?,
                decode_rows: parse_decode_rows(&decode_file, &read(dir, &decode_file)?)?,
                expected,
            });
        }
        let spots = data_lines(&read(dir, "spots.txt")?)
            .map(|line| {
                line.split_once('|')
                    .map(|(k, b)| (k.trim().to_string(), b.trim().to_string()))
                    .ok_or_else(|| bad("spots.txt", line))
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            dir: dir.to_path_buf(),
            codes,
            spots,
            checksums,
        })
    }

    pub fn code(&self, key: &str) -> Option<&ReferenceCode> {
        self.codes.iter().find(|c| c.key == key)
    }
}
