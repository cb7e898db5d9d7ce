//! JSON and text renderings of a verification run.

use std::fmt::Write as _;

use dilogint::format::to_fixed;
use dilogint::identities::{ClaimKind, IdentityId, IdentityReport};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub digits: u32,
    pub guard: u32,
    pub identities: Vec<IdentityId>,
    pub required_digits: Option<u32>,
    pub max_levels: u32,
    pub jobs: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub id: IdentityId,
    pub kind: ClaimKind,
    pub lhs: String,
    pub rhs: String,
    pub digits_agreed: u32,
    pub required: u32,
    pub passed: bool,
    pub verdict: String,
    pub wall_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Overall {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub timestamp: String,
    pub config: RunConfig,
    pub reports: Vec<ReportEntry>,
    pub overall: Overall,
}

impl ReportEntry {
    pub fn from_report(r: &IdentityReport, digits: u32) -> Self {
        let render = |x: &dilogint::Real| to_fixed(x, digits as usize);
        Self {
            id: r.id,
            kind: r.kind,
            lhs: render(&r.lhs),
            rhs: render(&r.rhs),
            digits_agreed: r.digits_agreed,
            required: r.required_digits,
            passed: r.passed,
            verdict: r.verdict(),
            wall_ms: r.wall_time.as_millis() as u64,
            error: r.error.clone(),
        }
    }
}

impl ReportDocument {
    pub fn new(config: RunConfig, reports: &[IdentityReport]) -> Self {
        let entries: Vec<ReportEntry> = reports
            .iter()
            .map(|r| ReportEntry::from_report(r, config.digits))
            .collect();
        let overall = if entries.iter().all(|e| e.passed) {
            Overall::Pass
        } else {
            Overall::Fail
        };
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true),
            config,
            reports: entries,
            overall,
        }
    }

    /// 0 when everything passed, 1 on a shortfall, 2 when an identity could
    /// not be evaluated.
    pub fn exit_code(&self) -> u8 {
        if self.reports.iter().any(|e| e.error.is_some()) {
            2
        } else if self.overall == Overall::Fail {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "dilogint {}  digits={} guard={} max_levels={}",
            self.tool_version, self.config.digits, self.config.guard, self.config.max_levels
        );
        for e in &self.reports {
            let kind = match e.kind {
                ClaimKind::Theorem => "theorem (paper-proved)",
                ClaimKind::Conjecture => "conjecture",
                ClaimKind::Identity => "identity",
            };
            let _ = writeln!(
                s,
                "{:<14} {:<22} {:<24} required {:>4}  {}  {} ms",
                e.id.name(),
                kind,
                e.verdict,
                e.required,
                if e.passed { "PASS" } else { "FAIL" },
                e.wall_ms
            );
            let _ = writeln!(s, "    digits_agreed = {}", e.digits_agreed);
            let _ = writeln!(s, "    lhs = {}", e.lhs);
            let _ = writeln!(s, "    rhs = {}", e.rhs);
            if let Some(err) = &e.error {
                let _ = writeln!(s, "    error: {err}");
            }
        }
        let _ = writeln!(
            s,
            "overall: {}",
            match self.overall {
                Overall::Pass => "pass",
                Overall::Fail => "fail",
            }
        );
        s
    }
}
