//! Serialized forms of polynomials, equivalence reports and search hits,
//! plus the pattern-list syntax accepted on the command line.
//!
//! Coefficients are always written as decimal strings so that values past
//! `u64` survive a round trip through JSON.

use std::str::FromStr;

use num_bigint::BigInt;
use patwilf_core::wilf::{Method, SearchHit, Verdict};
use patwilf_core::{EquivalenceReport, Error, Permutation, QPolynomial};
use serde::{Deserialize, Serialize};

/// Parses `"312,1432"` or, when a `;` is present, `"3,1,2;1,4,3,2"`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<Permutation>, Error> {
    let sep = if s.contains(';') { ';' } else { ',' };
    s.split(sep)
        .map(str::trim)
        .map(|item| {
            if item.is_empty() {
                Err(Error::Parse {
                    input: s.to_string(),
                    reason: "empty item in pattern list",
                })
            } else {
                Permutation::from_str(item)
            }
        })
        .collect()
}

pub fn pattern_strings(patterns: &[Permutation]) -> Vec<String> {
    patterns.iter().map(ToString::to_string).collect()
}

pub fn join_patterns(patterns: &[Permutation]) -> String {
    pattern_strings(patterns).join(",")
}

pub fn coeff_strings(poly: &QPolynomial) -> Vec<String> {
    poly.coeffs().iter().map(ToString::to_string).collect()
}

pub fn poly_from_strings(coeffs: &[String]) -> Result<QPolynomial, Error> {
    coeffs
        .iter()
        .map(|c| {
            BigInt::from_str(c).map_err(|_| Error::Parse {
                input: c.clone(),
                reason: "not a decimal integer",
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(QPolynomial::from_coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRow {
    pub n: usize,
    pub coeffs: Vec<String>,
}

/// `F_n` for a range of `n`, as emitted by `patwilf poly --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyResults {
    pub stat: String,
    pub patterns: Vec<String>,
    pub results: Vec<PolyRow>,
}

impl PolyResults {
    pub fn new(stat: &str, patterns: &[Permutation], polys: &[QPolynomial]) -> Self {
        Self {
            stat: stat.to_string(),
            patterns: pattern_strings(patterns),
            results: polys
                .iter()
                .enumerate()
                .map(|(n, p)| PolyRow {
                    n,
                    coeffs: coeff_strings(p),
                })
                .collect(),
        }
    }

    pub fn polynomials(&self) -> Result<Vec<(usize, QPolynomial)>, Error> {
        self.results
            .iter()
            .map(|row| Ok((row.n, poly_from_strings(&row.coeffs)?)))
            .collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.results {
            let poly = poly_from_strings(&row.coeffs).unwrap_or_default();
            out.push_str(&format!("n={}: {poly}\n", row.n));
        }
        out
    }

    /// Header `n,coeffs`, coefficients joined by `;`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,coeffs\n");
        for row in &self.results {
            out.push_str(&format!("{},{}\n", row.n, row.coeffs.join(";")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub stat: String,
    pub max_n: usize,
    pub method: String,
    /// `"equivalent"` or `"distinguished"`.
    pub verdict: String,
    /// The `n` in the verdict: `max_n` when equivalent, else the first
    /// differing size.
    pub verdict_n: usize,
    pub trivial_witness: Option<String>,
    pub corollary_guaranteed: bool,
    pub per_n: Vec<ReportRow>,
}

impl From<&EquivalenceReport> for ReportJson {
    fn from(r: &EquivalenceReport) -> Self {
        let (verdict, verdict_n) = match r.verdict {
            Verdict::EquivalentUpTo(n) => ("equivalent", n),
            Verdict::DistinguishedAt(n) => ("distinguished", n),
        };
        Self {
            left: pattern_strings(&r.left),
            right: pattern_strings(&r.right),
            stat: r.stat.clone(),
            max_n: r.max_n,
            method: match r.method {
                Method::Recursion => "recursion",
                Method::BruteForce => "brute-force",
            }
            .to_string(),
            verdict: verdict.to_string(),
            verdict_n,
            trivial_witness: r.trivial_witness.map(|w| w.tag().to_string()),
            corollary_guaranteed: r.corollary_guaranteed,
            per_n: r
                .per_n
                .iter()
                .map(|row| ReportRow {
                    n: row.n,
                    left: coeff_strings(&row.left),
                    right: coeff_strings(&row.right),
                    equal: row.equal,
                })
                .collect(),
        }
    }
}

/// One-line summary: the verdict, then whether the equivalence is trivial.
pub fn report_line(r: &EquivalenceReport) -> String {
    match (r.verdict, r.trivial_witness) {
        (Verdict::DistinguishedAt(_), _) => r.verdict.to_string(),
        (_, Some(w)) => format!("{}; trivial via {}", r.verdict, w.tag()),
        (_, None) => format!("{}; nontrivial", r.verdict),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHitJson {
    pub report: ReportJson,
    pub blocks: Vec<String>,
    pub flips: Vec<bool>,
    /// Every `(π, π')` construction in this symmetry class.
    pub constructions: Vec<[String; 2]>,
}

impl From<&SearchHit> for SearchHitJson {
    fn from(h: &SearchHit) -> Self {
        Self {
            report: ReportJson::from(&h.report),
            blocks: pattern_strings(&h.blocks),
            flips: h.flips.clone(),
            constructions: h
                .constructions
                .iter()
                .map(|(a, b)| [a.to_string(), b.to_string()])
                .collect(),
        }
    }
}

pub fn search_hit_line(h: &SearchHit) -> String {
    let flips: Vec<&str> = h.flips.iter().map(|&f| if f { "t" } else { "-" }).collect();
    format!(
        "{{{}}} ~ {{{}}}  blocks: {}  flips: {}  {}",
        join_patterns(&h.report.left),
        join_patterns(&h.report.right),
        pattern_strings(&h.blocks).join(" "),
        flips.join(""),
        h.report.verdict,
    )
}
