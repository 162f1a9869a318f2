//! Line-delimited store of invariant records, and batch computation of such
//! records for a list of KS entries.
//!
//! The first line is `#rk3-store version=V source_sha256=HEX`; every other
//! line is one record of space-separated `name=value` fields, sorted by
//! normal form.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::invariants::{InvariantError, InvariantRecord};
use crate::ks::KSEntry;
use crate::polytope::PolytopeError;
use crate::symmetry::NormalForm;

pub const STORE_VERSION: u32 = 1;
const MAGIC: &str = "#rk3-store";

/// Hex SHA-256 of the input the store was computed from.
pub fn source_digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoreMeta {
    pub version: u32,
    pub source_sha256: String,
}

/// A record together with the position of the first input entry that
/// produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StoredRecord {
    pub index: usize,
    pub record: InvariantRecord,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultStore {
    pub meta: StoreMeta,
    pub records: BTreeMap<NormalForm, StoredRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StoreError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("missing store header")]
    MissingHeader,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StoreWarning {
    VersionMismatch { found: u32, expected: u32 },
    DigestMismatch { found: String, expected: String },
}

impl std::fmt::Display for StoreWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StoreWarning::VersionMismatch { found, expected } => {
                write!(f, "store version {found}, this build writes {expected}")
            }
            StoreWarning::DigestMismatch { found, expected } => {
                write!(f, "store was computed from source {found}, expected {expected}")
            }
        }
    }
}

impl ResultStore {
    pub fn new(source_sha256: String) -> Self {
        ResultStore { meta: StoreMeta { version: STORE_VERSION, source_sha256 }, records: BTreeMap::new() }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Records in input order.
    pub fn by_index(&self) -> Vec<&StoredRecord> {
        let mut v: Vec<&StoredRecord> = self.records.values().collect();
        v.sort_by_key(|r| r.index);
        v
    }
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn format_record(r: &StoredRecord) -> String {
    let rec = &r.record;
    let mut s = String::new();
    let _ = write!(
        s,
        "nf={} index={} k={} ell={} ell_dual={} rho_tor={} delta={} rho_cor={} rho_tor_dual={} h11={} h_k21={} mirror_ok={}",
        rec.normal_form.key(),
        r.index,
        rec.k,
        rec.ell,
        rec.ell_dual,
        opt(rec.rho_tor),
        opt(rec.delta),
        opt(rec.rho_cor),
        opt(rec.rho_tor_dual),
        opt(rec.h11),
        opt(rec.h_k21),
        rec.mirror_ok,
    );
    s
}

/// Text form of a store. Equal stores give identical bytes.
pub fn write_records(store: &ResultStore) -> String {
    let mut out = format!("{MAGIC} version={} source_sha256={}\n", store.meta.version, store.meta.source_sha256);
    for r in store.records.values() {
        out.push_str(&format_record(r));
        out.push('\n');
    }
    out
}

const FIELDS: [&str; 12] = [
    "nf", "index", "k", "ell", "ell_dual", "rho_tor", "delta", "rho_cor", "rho_tor_dual", "h11", "h_k21", "mirror_ok",
];

fn parse_record(text: &str, line: usize) -> Result<StoredRecord, StoreError> {
    let err = |message: String| StoreError::Malformed { line, message };
    let mut fields: BTreeMap<&str, &str> = BTreeMap::new();
    for (i, tok) in text.split_whitespace().enumerate() {
        let (name, value) = tok.split_once('=').ok_or_else(|| err(format!("field {tok:?} has no '='")))?;
        if FIELDS.get(i) != Some(&name) {
            return Err(err(format!("unexpected field {name:?} in position {}", i + 1)));
        }
        fields.insert(name, value);
    }
    if fields.len() != FIELDS.len() {
        return Err(err(format!("expected {} fields, found {}", FIELDS.len(), fields.len())));
    }
    let int = |name: &str| -> Result<i64, StoreError> {
        fields[name].parse::<i64>().map_err(|_| err(format!("{name} is not an integer")))
    };
    let count = |name: &str| -> Result<usize, StoreError> {
        fields[name].parse::<usize>().map_err(|_| err(format!("{name} is not a count")))
    };
    let maybe = |name: &str| -> Result<Option<i64>, StoreError> {
        match fields[name] {
            "-" => Ok(None),
            v => v.parse::<i64>().map(Some).map_err(|_| err(format!("{name} is not an integer or '-'"))),
        }
    };
    let normal_form = NormalForm::from_key(fields["nf"]).ok_or_else(|| err("bad normal form".into()))?;
    let mirror_ok = match fields["mirror_ok"] {
        "true" => true,
        "false" => false,
        _ => return Err(err("mirror_ok must be true or false".into())),
    };
    let record = InvariantRecord {
        k: count("k")?,
        ell: int("ell")?,
        ell_dual: int("ell_dual")?,
        rho_tor: maybe("rho_tor")?,
        delta: maybe("delta")?,
        rho_cor: maybe("rho_cor")?,
        rho_tor_dual: maybe("rho_tor_dual")?,
        h11: maybe("h11")?,
        h_k21: maybe("h_k21")?,
        mirror_ok,
        normal_form,
    };
    if record.normal_form.dim() != record.k {
        return Err(err("k does not match the normal form".into()));
    }
    let consistent = match (record.rho_tor, record.delta, record.rho_cor) {
        (Some(t), Some(d), Some(c)) => t + d == c,
        (None, None, None) => true,
        _ => false,
    };
    if !consistent {
        return Err(err("rho_cor must equal rho_tor + delta".into()));
    }
    Ok(StoredRecord { index: count("index")?, record })
}

/// Parses a store. Version and digest mismatches are reported as warnings;
/// `expected_digest` is compared when given.
pub fn parse_records(
    text: &str,
    expected_digest: Option<&str>,
) -> Result<(ResultStore, Vec<StoreWarning>), StoreError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(StoreError::MissingHeader)?;
    let rest = header.strip_prefix(MAGIC).ok_or(StoreError::MissingHeader)?;
    let bad_header = |message: &str| StoreError::Malformed { line: 1, message: message.to_string() };
    let mut version = None;
    let mut digest = None;
    for tok in rest.split_whitespace() {
        match tok.split_once('=') {
            Some(("version", v)) => version = Some(v.parse::<u32>().map_err(|_| bad_header("bad version"))?),
            Some(("source_sha256", d)) => digest = Some(d.to_string()),
            _ => return Err(bad_header("unknown header field")),
        }
    }
    let meta = StoreMeta {
        version: version.ok_or_else(|| bad_header("missing version"))?,
        source_sha256: digest.ok_or_else(|| bad_header("missing source_sha256"))?,
    };
    let mut warnings = Vec::new();
    if meta.version != STORE_VERSION {
        warnings.push(StoreWarning::VersionMismatch { found: meta.version, expected: STORE_VERSION });
    }
    if let Some(e) = expected_digest {
        if e != meta.source_sha256 {
            warnings.push(StoreWarning::DigestMismatch { found: meta.source_sha256.clone(), expected: e.to_string() });
        }
    }
    let mut records = BTreeMap::new();
    for (i, l) in lines {
        if l.trim().is_empty() {
            continue;
        }
        let r = parse_record(l, i + 1)?;
        let key = r.record.normal_form.clone();
        if records.insert(key, r).is_some() {
            return Err(StoreError::Malformed { line: i + 1, message: "duplicate normal form".into() });
        }
    }
    Ok((ResultStore { meta, records }, warnings))
}

#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Store(#[from] StoreError),
}

pub fn read_records(
    path: &std::path::Path,
    expected_digest: Option<&str>,
) -> Result<(ResultStore, Vec<StoreWarning>), ReadError> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_records(&text, expected_digest)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("entry {index}: {source}")]
pub struct IngestError {
    pub index: usize,
    pub source: InvariantError,
}

/// Computes the record of every entry on `jobs` worker threads. Entries with
/// the same normal form keep the smallest index; the result does not depend
/// on `jobs`.
pub fn ingest(entries: &[KSEntry], source_sha256: String, jobs: usize) -> Result<ResultStore, IngestError> {
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<InvariantRecord, InvariantError>>>> =
        Mutex::new(vec![None; entries.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs.max(1) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= entries.len() {
                    break;
                }
                let r = entries[i]
                    .polytope()
                    .map_err(InvariantError::from)
                    .and_then(|p| {
                        if p.is_reflexive() {
                            InvariantRecord::compute(&p)
                        } else {
                            Err(PolytopeError::NotReflexive.into())
                        }
                    });
                results.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    let mut store = ResultStore::new(source_sha256);
    for (index, r) in results.into_inner().expect("worker panicked").into_iter().enumerate() {
        let record = r.expect("every index visited").map_err(|source| IngestError { index, source })?;
        store.records.entry(record.normal_form.clone()).or_insert(StoredRecord { index, record });
    }
    Ok(store)
}
