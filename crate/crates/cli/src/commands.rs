//! Command implementations. Each returns the text to print and the exit
//! status, so the binary stays a thin argument parser.

use std::fmt::Write;
use std::path::{Path, PathBuf};

use indgen::arith::Factorizer;
use indgen::invariants;
use indgen::perm::parse_permutation;
use indgen::primes::{stup_constant, verify_pk_bounds, verify_rs_bounds, BoundReport, PrimeSieve};
use indgen::sym::{classify_range, verify_dm2_identity, verify_stop_bounds, DeltaSweep, StopBoundRecord};
use indgen::wreath::{rank_test_matrix, sylow_sum_check, verify_wreath_rank, SylowSumReport};
use indgen::zsigmondy::{primitive_prime_divisors, zsigmondy_sweep, ZsigmondyException};
use indgen::{Budget, PermGroup};

use crate::catalog::load_catalog;
use crate::deadline::Deadline;
use crate::error::core_status;
use crate::report::{profile_status, sweep_csv, ProfileRecord, RatioSummary, SweepDocument, SweepRow};
use crate::{grpfile, simple_groups, CliError, Status};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub status: Status,
}

impl Outcome {
    fn new(stdout: String, status: Status) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            status,
        }
    }
}

type CmdResult = Result<Outcome, CliError>;

fn bound_outcome(title: &str, report: &BoundReport) -> Outcome {
    let (lo, hi) = report.range_checked;
    let mut out = format!("{title}: checked {lo}..={hi}, {} violations\n", report.violations.len());
    for v in report.violations.iter().take(20) {
        writeln!(out, "violation {} at {}: {} > {}", v.check, v.x, v.lhs, v.rhs).unwrap();
    }
    let status = if report.passed { Status::Pass } else { Status::Violation };
    Outcome::new(out, status)
}

/// CSV rows `n,delta,offset,lower_ok,upper_tight_ok,chain_ok`. The bounds are
/// undefined at `n = 1`, where the flags read `na`.
pub fn sym_delta(from: u64, to: u64) -> CmdResult {
    if from < 1 || from > to {
        return Err(CliError::Usage("need 1 <= --from <= --to".into()));
    }
    if to > 100_000_000 {
        return Err(indgen::Error::Budget {
            what: "sym delta range",
            requested: to as u128,
            limit: 100_000_000,
        }
        .into());
    }
    let mut out = String::from("n,delta,offset,lower_ok,upper_tight_ok,chain_ok\n");
    let mut status = Status::Pass;
    for (n, delta) in DeltaSweep::new(to).skip_while(|&(n, _)| n < from) {
        let offset = delta as i64 - (n as i64 - 1);
        if n == 1 {
            writeln!(out, "1,{delta},{offset},na,na,na").unwrap();
            continue;
        }
        let r = StopBoundRecord::new(n, delta);
        if !r.passed() {
            status = Status::Violation;
        }
        writeln!(out, "{n},{delta},{offset},{},{},{}", r.lower_ok, r.upper_tight_ok, r.chain_ok).unwrap();
    }
    Ok(Outcome::new(out, status))
}

pub fn sym_classify(max: u64) -> CmdResult {
    let c = classify_range(max)?;
    let mut out = String::new();
    for (k, list) in c.lists.iter().enumerate() {
        let items: Vec<String> = list.iter().map(u64::to_string).collect();
        writeln!(out, "offset {k}: {}", items.join(" ")).unwrap();
    }
    writeln!(out, "offset < 0: {} values", c.residual_count).unwrap();
    for (n, offset) in &c.anomalies {
        writeln!(out, "anomaly: n={n} offset={offset}").unwrap();
    }
    writeln!(out, "verified up to {max}").unwrap();
    let status = if c.anomalies.is_empty() { Status::Pass } else { Status::Violation };
    Ok(Outcome::new(out, status))
}

pub fn sym_verify_stop(max: u64) -> CmdResult {
    if max < 2 {
        return Err(CliError::Usage("--max must be at least 2".into()));
    }
    let sieve = PrimeSieve::new(max as usize)?;
    Ok(bound_outcome("two-sided bounds on delta(Sym(n))", &verify_stop_bounds(2, max, &sieve)?))
}

/// Checks the closed form for the large-prime part of `δ(Sym(n))` exactly.
pub fn sym_identity(max: u64) -> CmdResult {
    if max < 2 {
        return Err(CliError::Usage("--max must be at least 2".into()));
    }
    let sieve = PrimeSieve::new(max as usize)?;
    let mut failures = Vec::new();
    for n in 2..=max {
        let r = verify_dm2_identity(n, &sieve)?;
        if !r.holds() {
            failures.push(r);
        }
    }
    let mut out = format!("large-prime identity: checked 2..={max}, {} failures\n", failures.len());
    for f in failures.iter().take(20) {
        writeln!(out, "failure at {}: digits {} closed form {}", f.n, f.from_digits, f.closed_form).unwrap();
    }
    let status = if failures.is_empty() { Status::Pass } else { Status::Violation };
    Ok(Outcome::new(out, status))
}

pub fn primes_rs(max: u64) -> CmdResult {
    let sieve = PrimeSieve::new(max.max(2) as usize)?;
    Ok(bound_outcome("prime counting bounds", &verify_rs_bounds(max, &sieve)?))
}

/// A sieve limit holding at least `k` primes.
fn limit_for_k_primes(k: u64) -> usize {
    let kf = k.max(6) as f64;
    (kf * (kf.ln() + kf.ln().ln())) as usize + 20
}

pub fn primes_pk(max: u64) -> CmdResult {
    let sieve = PrimeSieve::new(limit_for_k_primes(max))?;
    Ok(bound_outcome("nth prime bounds", &verify_pk_bounds(max, &sieve)?))
}

pub fn primes_stup(eta: f64, max: u64) -> CmdResult {
    if eta.is_nan() || eta <= 1.0 || max < 2 {
        return Err(CliError::Usage("need --eta > 1 and --max >= 2".into()));
    }
    let sieve = PrimeSieve::new(max as usize)?;
    let (c, n) = stup_constant(eta, max, &sieve)?;
    Ok(Outcome::new(
        format!("empirical c = {c:.6} at n = {n} (eta = {eta}, n <= {max})\n"),
        Status::Pass,
    ))
}

fn exception_text(e: ZsigmondyException, a: u128, n: u32) -> String {
    match e {
        ZsigmondyException::Mersenne { s } => format!("a={a}=2^{s}-1, n={n}"),
        ZsigmondyException::BinarySix => format!("a={a}, n={n}"),
    }
}

pub fn zsigmondy_single(a: u128, n: u32) -> CmdResult {
    let r = primitive_prime_divisors(a, n, &Factorizer::new())?;
    let mut out = match (r.primitive_primes.is_empty(), r.exception) {
        (true, Some(e)) => format!("none (exception: {})\n", exception_text(e, a, n)),
        (true, None) => "none\n".into(),
        (false, _) => {
            let ps: Vec<String> = r.primitive_primes.iter().map(u128::to_string).collect();
            format!("{}\n", ps.join(" "))
        }
    };
    let residues = if r.residues_ok() { "ok" } else { "FAILED" };
    writeln!(out, "residues mod {n}: {residues}").unwrap();
    let status = if r.residues_ok() && r.consistent_with_zsigmondy() {
        Status::Pass
    } else {
        Status::Violation
    };
    Ok(Outcome::new(out, status))
}

pub fn zsigmondy_sweep_cmd(a_max: u128, n_max: u32) -> CmdResult {
    if a_max < 2 || n_max < 2 {
        return Err(CliError::Usage("sweep bounds must be at least 2".into()));
    }
    let s = zsigmondy_sweep(a_max, n_max, &Factorizer::new())?;
    let mut out = format!(
        "sweep 2<=a<={a_max}, 2<=n<={n_max}: {} cases, {} exceptions, {} failures\n",
        s.cases,
        s.exceptions_seen.len(),
        s.failures.len()
    );
    let ex: Vec<String> = s.exceptions_seen.iter().map(|(a, n)| format!("({a},{n})")).collect();
    writeln!(out, "exceptions: {}", ex.join(" ")).unwrap();
    for f in &s.failures {
        writeln!(out, "failure ({}, {}): {}", f.a, f.n, f.reason).unwrap();
    }
    let status = if s.passed() { Status::Pass } else { Status::Violation };
    Ok(Outcome::new(out, status))
}

/// `π*(S)` for each row of the simple-group table.
pub fn zsigmondy_pi_star(table: Option<&Path>) -> CmdResult {
    let text = match table {
        Some(p) => std::fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.to_path_buf(),
            source,
        })?,
        None => simple_groups::BUNDLED.to_string(),
    };
    let rows = simple_groups::parse_table(&text, &Factorizer::new())?;
    let mut out = String::from("label,order,out_order,pi,pi_star,two_pi_star_primes\n");
    let mut status = Status::Pass;
    for r in &rows {
        let join = |v: &[u128]| v.iter().map(u128::to_string).collect::<Vec<_>>().join(" ");
        writeln!(
            out,
            "{},{},{},{},{},{}",
            r.label,
            r.order,
            r.out_order,
            join(&r.pi),
            join(&r.pi_star),
            r.has_two_pi_star_primes()
        )
        .unwrap();
        if !r.has_two_pi_star_primes() {
            status = Status::Violation;
        }
    }
    Ok(Outcome::new(out, status))
}

fn load(path: &Path, budget: &Budget) -> Result<(String, PermGroup), CliError> {
    let label = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    Ok((label, grpfile::read_group(path, budget)?))
}

pub fn group_profile(path: &Path, budget: &Budget, time_ms: Option<u64>) -> CmdResult {
    let (label, g) = load(path, budget)?;
    let p = invariants::profile(&g, budget, &Deadline::after_ms(time_ms))?;
    let json = serde_json::to_string_pretty(&ProfileRecord::new(&label, &p)).expect("records serialize");
    Ok(Outcome::new(json + "\n", profile_status(&p)))
}

pub fn group_m(path: &Path, budget: &Budget, time_ms: Option<u64>) -> CmdResult {
    let (_, g) = load(path, budget)?;
    let r = invariants::max_independent_generating_set(&g, budget, &Deadline::after_ms(time_ms))?;
    let witness: Vec<String> = r.witness.iter().map(|w| w.to_string()).collect();
    Ok(Outcome::new(
        format!("{}\nwitness: {}\n", r.m, witness.join(" ")),
        Status::Pass,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// Profiles every group in `dir`. The time budget applies to each group.
pub fn sweep_rows(dir: &Path, budget: &Budget, time_ms: Option<u64>) -> Result<(Vec<SweepRow>, Status), CliError> {
    let catalog = load_catalog(dir, budget)?;
    let mut rows = Vec::new();
    let mut status = Status::Pass;
    for s in &catalog.skipped {
        status = status.worst(s.status);
        rows.push(SweepRow::Skipped {
            label: s.label.clone(),
            skipped: s.reason.clone(),
        });
    }
    for entry in &catalog.entries {
        match invariants::profile(&entry.group, budget, &Deadline::after_ms(time_ms)) {
            Ok(p) => {
                status = status.worst(profile_status(&p));
                rows.push(SweepRow::Profiled(ProfileRecord::new(&entry.label, &p)));
            }
            Err(e) => {
                status = status.worst(core_status(&e));
                rows.push(SweepRow::Skipped {
                    label: entry.label.clone(),
                    skipped: e.to_string(),
                });
            }
        }
    }
    rows.sort_by(|a, b| a.label().cmp(b.label()));
    Ok((rows, status))
}

pub fn group_sweep(
    dir: &Path,
    sigma: f64,
    eta: f64,
    budget: &Budget,
    time_ms: Option<u64>,
    format: Format,
) -> CmdResult {
    let (rows, status) = sweep_rows(dir, budget, time_ms)?;
    let records: Vec<&ProfileRecord> = rows
        .iter()
        .filter_map(|r| match r {
            SweepRow::Profiled(p) => Some(p),
            SweepRow::Skipped { .. } => None,
        })
        .collect();
    let summary = RatioSummary::new(&records, sigma, eta);
    Ok(match format {
        Format::Csv => Outcome {
            stdout: sweep_csv(&rows),
            stderr: summary.text(),
            status,
        },
        Format::Json => {
            let doc = SweepDocument { rows, summary };
            Outcome::new(
                serde_json::to_string_pretty(&doc).expect("records serialize") + "\n",
                status,
            )
        }
    })
}

pub fn wreath_verify(budget: &Budget, time_ms: Option<u64>) -> CmdResult {
    let deadline = Deadline::after_ms(time_ms);
    let mut out = String::from("instance,order,rank,d_top,top_orbits,d_base,formula,holds\n");
    let mut status = Status::Pass;
    for (label, spec) in rank_test_matrix() {
        let r = verify_wreath_rank(&spec, budget, &deadline)?;
        writeln!(
            out,
            "{label},{},{},{},{},{},{},{}",
            r.order,
            r.rank,
            r.d_top,
            r.top_orbits,
            r.d_base,
            r.formula(),
            r.holds()
        )
        .unwrap();
        if !r.holds() {
            status = Status::Violation;
        }
    }
    Ok(Outcome::new(out, status))
}

fn perm_group(degree: usize, gens: &[&str]) -> PermGroup {
    let gens = gens.iter().map(|g| parse_permutation(g, degree).expect("valid cycles")).collect();
    PermGroup::from_generators(degree, gens).expect("small group")
}

/// `A5` on five points and the default transitive groups `K`.
pub fn default_instances() -> (PermGroup, Vec<(String, PermGroup)>) {
    let a5 = perm_group(5, &["(1 2 3)", "(1 2 3 4 5)"]);
    let ks = vec![
        ("Sym(2)".to_string(), perm_group(2, &["(1 2)"])),
        ("C3 regular".to_string(), perm_group(3, &["(1 2 3)"])),
        ("Sym(3) natural".to_string(), perm_group(3, &["(1 2)", "(1 2 3)"])),
        ("C2xC2 regular".to_string(), perm_group(4, &["(1 2)(3 4)", "(1 3)(2 4)"])),
    ];
    (a5, ks)
}

pub fn pablo_report_text(label: &str, r: &SylowSumReport) -> String {
    let terms: Vec<String> = r
        .terms
        .iter()
        .map(|t| {
            let constructed = t
                .constructed_rank
                .map_or_else(|| "not built".into(), |c| c.to_string());
            format!(
                "d_{} = {} + {}*{} = {} (constructed: {constructed})",
                t.p,
                t.d_top,
                t.top_orbits,
                t.d_base,
                t.value()
            )
        })
        .collect();
    format!(
        "K = {label}: {}; sum {} vs t = {}: {}\n",
        terms.join("; "),
        r.sum,
        r.t,
        if r.holds() { "holds" } else { "FAILS" }
    )
}

/// The Sylow-rank sum over `π*(S)` against `t_Ω(K)` for `S wr K`.
pub fn wreath_pablo(
    simple: Option<(&Path, u64)>,
    ks: &[PathBuf],
    budget: &Budget,
    time_ms: Option<u64>,
) -> CmdResult {
    let deadline = Deadline::after_ms(time_ms);
    let factorizer = Factorizer::new();
    let (default_s, default_ks) = default_instances();
    let (s_label, s, out_order) = match simple {
        Some((path, out)) => {
            let (label, g) = load(path, budget)?;
            (label, g, out)
        }
        None => ("A5".to_string(), default_s, 2),
    };
    let datum = indgen::zsigmondy::pi_star(&s_label, s.size() as u128, out_order, &factorizer)?;
    let pi_star: Vec<u64> = datum.pi_star.iter().map(|&p| p as u64).collect();
    let ks = if ks.is_empty() {
        default_ks
    } else {
        ks.iter().map(|p| load(p, budget)).collect::<Result<_, _>>()?
    };
    let pi_text: Vec<String> = pi_star.iter().map(u64::to_string).collect();
    let mut out = format!("S = {s_label}, pi* = {{{}}}\n", pi_text.join(", "));
    let mut status = Status::Pass;
    for (label, k) in &ks {
        let r = sylow_sum_check(&s, &pi_star, k, budget, &deadline)?;
        out.push_str(&pablo_report_text(label, &r));
        if !r.holds() {
            status = Status::Violation;
        }
    }
    Ok(Outcome::new(out, status))
}
