//! Certificate documents and the command implementations behind the `unram`
//! binary. Commands write machine-readable output to `out`, prose to `err`,
//! and return the process exit code.

pub mod document;

use std::io::Write;

use serde::Serialize;
use unram_core::pipeline::{build_construction, verify_certificate, Config, DEFAULT_MAX_N};
use unram_core::quadforms::{isotropy_bruteforce, small_pfister_quadric};
use unram_core::symbols::parse_symbol;
use unram_core::{MonomialSymbol, Prime};

pub use document::{CertificateDocument, Payload};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;
pub const EXIT_REJECTED: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("malformed document: {0}")]
    Malformed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Malformed(_) => EXIT_MALFORMED,
        }
    }
}

impl From<unram_core::Error> for CliError {
    fn from(e: unram_core::Error) -> Self {
        if e.is_resource() {
            CliError::Resource(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

pub const CAP_ENV: &str = "UNRAM_CAP";

/// `--cap` wins over `UNRAM_CAP`, which wins over the default.
pub fn resolve_cap(flag: Option<usize>, env: Option<&str>) -> Result<usize, CliError> {
    if let Some(k) = flag {
        return Ok(k);
    }
    match env {
        Some(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{CAP_ENV} must be a non-negative integer, got `{v}`"))),
        None => Ok(DEFAULT_MAX_N),
    }
}

fn prime(value: u64, what: &str) -> Result<Prime, CliError> {
    u32::try_from(value)
        .ok()
        .and_then(|v| Prime::new(v).ok())
        .ok_or_else(|| CliError::Usage(format!("{what} must be prime")))
}

fn report<T>(result: Result<T, CliError>, err: &mut dyn Write) -> Result<T, i32> {
    result.map_err(|e| {
        let _ = writeln!(err, "error: {e}");
        e.exit_code()
    })
}

/// Builds the certificate for `(n, ℓ)`. With `out_path` the document goes to
/// the file and the summary to `out`; otherwise the document goes to `out`
/// and the summary to `err`.
pub fn cmd_construct(
    n: usize,
    ell: u64,
    out_path: Option<&std::path::Path>,
    cap: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let run = || -> Result<(CertificateDocument, String, Option<String>), CliError> {
        let p = prime(ell, "ell")?;
        if n < 2 {
            return Err(CliError::Usage(format!("n must be at least 2, got {n}")));
        }
        let config = Config {
            max_n: cap,
            ..Config::default()
        };
        let cert = build_construction(n, p, &config)?;
        let summary = format!("|I|={} total_dim={}", cert.basis.len(), cert.dims.total);
        let note = (!cert.dims.meets_lower_bound).then(|| {
            format!(
                "note: total dimension {} is below ell^n - 1 + 2n = {}",
                cert.dims.total, cert.dims.lower_bound
            )
        });
        Ok((document::document_from_certificate(&cert), summary, note))
    };
    let (doc, summary, note) = match report(run(), err) {
        Ok(x) => x,
        Err(code) => return code,
    };
    let text = doc.to_canonical_string();
    if let Some(note) = note {
        let _ = writeln!(err, "{note}");
    }
    match out_path {
        Some(path) => {
            if let Err(e) = std::fs::write(path, format!("{text}\n")) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
            let _ = writeln!(out, "{summary}");
        }
        None => {
            let _ = writeln!(out, "{text}");
            let _ = writeln!(err, "{summary}");
        }
    }
    EXIT_OK
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CheckVerdict {
    pub name: String,
    pub passed: bool,
    pub evidence: String,
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub accepted: bool,
    pub checks: Vec<CheckVerdict>,
    pub first_failure: Option<CheckVerdict>,
}

/// Parses and re-verifies a document. Only malformed input and size caps are
/// errors; everything else lands in the report.
pub fn verify_text(text: &str, cap: usize) -> Result<VerifyReport, CliError> {
    let doc = CertificateDocument::parse(text)?;
    let (payload, cert) = doc.decode()?;
    let config = Config {
        max_n: cap,
        ..Config::default()
    };
    let fresh = verify_certificate(&cert, &config)?;
    let mut checks: Vec<CheckVerdict> = fresh
        .checks
        .iter()
        .map(|c| CheckVerdict {
            name: c.name.clone(),
            passed: c.passed,
            evidence: c.evidence.clone(),
        })
        .collect();
    let stored_ok = fresh.checks == cert.checks;
    checks.push(CheckVerdict {
        name: "checksum".into(),
        passed: doc.checksum_matches(),
        evidence: if doc.checksum_matches() {
            format!("sha256 {}", doc.checksum)
        } else {
            format!("stored {} differs from sha256 {}", doc.checksum, document::checksum(&doc.payload))
        },
    });
    let mismatch = document::display_mismatch(&payload, &cert);
    checks.push(CheckVerdict {
        name: "display-fields".into(),
        passed: mismatch.is_none(),
        evidence: mismatch.unwrap_or_else(|| "derived text matches".into()),
    });
    checks.push(CheckVerdict {
        name: "stored-checks".into(),
        passed: stored_ok,
        evidence: if stored_ok {
            "stored verdicts match the re-run".into()
        } else {
            "stored verdicts differ from the re-run".into()
        },
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let first_failure = checks.iter().find(|c| !c.passed).cloned();
    Ok(VerifyReport {
        accepted: first_failure.is_none(),
        checks,
        first_failure,
    })
}

pub fn cmd_verify(path: &std::path::Path, cap: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return EXIT_USAGE;
        }
    };
    let report = match self::report(verify_text(&text, cap), err) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let value = serde_json::to_value(&report).expect("report serializes");
    let _ = out.write_all(&document::canonical_bytes(&value));
    let _ = writeln!(out);
    match &report.first_failure {
        None => {
            let _ = writeln!(err, "accepted: {} checks passed", report.checks.len());
            EXIT_OK
        }
        Some(f) => {
            let _ = writeln!(err, "rejected: {} failed: {}", f.name, f.evidence);
            EXIT_REJECTED
        }
    }
}

/// Residue of a symbol at `t_var` (1-based) in multivector notation.
pub fn residue_text(symbol: &str, var: usize, ell: u64, vars: usize) -> Result<String, CliError> {
    let p = prime(ell, "ell")?;
    let slots = parse_symbol(symbol)?.to_t_monomials(vars)?;
    if var == 0 || var > vars {
        return Err(CliError::Usage(format!("--var must be in 1..={vars}, got {var}")));
    }
    let class = MonomialSymbol::new(p, vars, slots)?.normalize();
    Ok(class.residue(var - 1)?.to_string())
}

/// Small Pfister quadric of a symbol with named variables.
pub fn pfister_text(symbol: &str) -> Result<String, CliError> {
    let (names, entries) = parse_symbol(symbol)?.to_named_monomials();
    let q = small_pfister_quadric(names.len(), &entries)?;
    Ok(q.form.polynomial(&names))
}

pub fn isotropy_text(form: &str, p: u64, cap: u128) -> Result<String, CliError> {
    let q = prime(p, "prime")?;
    let coeffs = form
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map(|x| q.reduce(x))
                .map_err(|_| CliError::Usage(format!("invalid coefficient `{c}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match isotropy_bruteforce(&coeffs, q, cap)? {
        Some(x) => format!(
            "witness ({})",
            x.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        ),
        None => "anisotropic".into(),
    })
}

/// Prints the result of a calculator command and maps errors to exit codes.
pub fn emit(result: Result<String, CliError>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match report(result, err) {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            EXIT_OK
        }
        Err(code) => code,
    }
}
