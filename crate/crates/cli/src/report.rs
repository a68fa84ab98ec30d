//! Serializable records and CSV rows. Maps are keyed by prime in numeric
//! order so that output is byte-stable.

use std::collections::BTreeMap;
use std::fmt::Write;

use indgen::invariants::GroupProfile;
use serde::Serialize;

use crate::Status;

/// One group's invariants and checks as a flat JSON object.
#[derive(Debug, Clone, Serialize)]
pub struct ProfileRecord {
    pub label: String,
    pub order: usize,
    pub soluble: bool,
    pub nilpotent: bool,
    pub d: usize,
    pub m: usize,
    pub d_p: BTreeMap<u64, u32>,
    pub delta: u32,
    pub alpha_p: Option<BTreeMap<u64, u32>>,
    pub m_witness: Vec<String>,
    pub m_le_delta: bool,
    pub m_eq_alpha_sum: Option<bool>,
    pub alpha_series_agree: Option<bool>,
    pub nilpotent_equality: bool,
    pub ranks_consistent: bool,
    pub delta_quotient_ok: bool,
    pub frattini_dichotomy_ok: bool,
}

impl ProfileRecord {
    pub fn new(label: &str, p: &GroupProfile) -> Self {
        ProfileRecord {
            label: label.into(),
            order: p.order,
            soluble: p.soluble,
            nilpotent: p.nilpotent,
            d: p.d,
            m: p.m,
            d_p: p.d_p.clone(),
            delta: p.delta,
            alpha_p: p.alpha_p.clone(),
            m_witness: p.m_witness.iter().map(|w| w.to_string()).collect(),
            m_le_delta: p.dennis_holds(),
            m_eq_alpha_sum: p.alpha_identity_holds(),
            alpha_series_agree: p.alpha_series_agree(),
            nilpotent_equality: p.nilpotent_equality_holds(),
            ranks_consistent: p.ranks_consistent(),
            delta_quotient_ok: p.delta_quotient_lemma_holds(),
            frattini_dichotomy_ok: p.frattini_dichotomy_holds(),
        }
    }
}

pub fn profile_status(p: &GroupProfile) -> Status {
    if !p.identities_hold() {
        Status::Violation
    } else if !p.dennis_holds() {
        Status::OpenAnomaly
    } else {
        Status::Pass
    }
}

/// A sweep row: a profiled group or a skipped entry.
#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum SweepRow {
    Profiled(ProfileRecord),
    Skipped { label: String, skipped: String },
}

impl SweepRow {
    pub fn label(&self) -> &str {
        match self {
            SweepRow::Profiled(r) => &r.label,
            SweepRow::Skipped { label, .. } => label,
        }
    }
}

pub const SWEEP_HEADER: &str = "label,order,soluble,nilpotent,d,m,delta,alpha_sum,m_le_delta,m_eq_alpha_sum,alpha_series_agree,delta_quotient_ok,frattini_dichotomy_ok,ranks_consistent,skipped";

fn opt(b: Option<bool>) -> String {
    b.map_or_else(|| "na".into(), |b| b.to_string())
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for row in rows {
        match row {
            SweepRow::Profiled(r) => {
                let alpha_sum = r
                    .alpha_p
                    .as_ref()
                    .map_or_else(|| "na".into(), |a| a.values().sum::<u32>().to_string());
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{},{},",
                    r.label,
                    r.order,
                    r.soluble,
                    r.nilpotent,
                    r.d,
                    r.m,
                    r.delta,
                    alpha_sum,
                    r.m_le_delta,
                    opt(r.m_eq_alpha_sum),
                    opt(r.alpha_series_agree),
                    r.delta_quotient_ok,
                    r.frattini_dichotomy_ok,
                    r.ranks_consistent,
                )
                .unwrap();
            }
            SweepRow::Skipped { label, skipped } => {
                let reason = skipped.replace([',', '\n'], ";");
                writeln!(out, "{label},,,,,,,,,,,,,,{reason}").unwrap();
            }
        }
    }
    out
}

/// Largest observed ratios of `m` to powers of `δ` over groups with `δ > 0`.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RatioSummary {
    pub groups: usize,
    pub sigma: f64,
    pub eta: f64,
    pub max_m_over_delta: f64,
    pub max_m_over_delta_sq: f64,
    pub max_m_over_delta_eta: f64,
    /// Labels with `m > σ·δ^η`; reported, not a failure.
    pub above_sigma_delta_eta: Vec<String>,
}

impl RatioSummary {
    pub fn new(records: &[&ProfileRecord], sigma: f64, eta: f64) -> Self {
        let mut s = RatioSummary {
            groups: records.len(),
            sigma,
            eta,
            max_m_over_delta: 0.0,
            max_m_over_delta_sq: 0.0,
            max_m_over_delta_eta: 0.0,
            above_sigma_delta_eta: Vec::new(),
        };
        for r in records.iter().filter(|r| r.delta > 0) {
            let (m, d) = (r.m as f64, r.delta as f64);
            s.max_m_over_delta = s.max_m_over_delta.max(m / d);
            s.max_m_over_delta_sq = s.max_m_over_delta_sq.max(m / (d * d));
            s.max_m_over_delta_eta = s.max_m_over_delta_eta.max(m / d.powf(eta));
            if m > sigma * d.powf(eta) {
                s.above_sigma_delta_eta.push(r.label.clone());
            }
        }
        s
    }

    pub fn text(&self) -> String {
        format!(
            "groups profiled: {}\nmax m/delta: {:.6}\nmax m/delta^2: {:.6}\nmax m/delta^{}: {:.6}\ngroups with m > {}*delta^{}: {}\n",
            self.groups,
            self.max_m_over_delta,
            self.max_m_over_delta_sq,
            self.eta,
            self.max_m_over_delta_eta,
            self.sigma,
            self.eta,
            if self.above_sigma_delta_eta.is_empty() {
                "none".into()
            } else {
                self.above_sigma_delta_eta.join(" ")
            }
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepDocument {
    pub rows: Vec<SweepRow>,
    pub summary: RatioSummary,
}
