//! Performance-profile curves over solver timing records.
//!
//! Input: one record per (problem, config) with a solve time in seconds or a
//! DNF marker. For each config, the curve point (τ, p) says: fraction p of
//! all problems were solved within a factor 2^τ of the best time recorded
//! for that problem by any config. DNF never counts as solved, so the
//! rightmost point of a curve shows the config's overall solve rate.

use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq)]
pub struct TimingRecord {
    pub problem: String,
    pub config: String,
    /// None = did not finish.
    pub seconds: Option<f64>,
}

/// One step of a profile curve. `fraction` is non-decreasing in `tau`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfilePoint {
    /// log2 of the slowdown factor relative to the per-problem best.
    pub tau: f64,
    /// Fraction of all problems solved within that factor.
    pub fraction: f64,
}

#[derive(Debug, PartialEq)]
pub enum ProfileError {
    /// Configs must cover identical problem sets; the message lists the
    /// differences per config.
    MismatchedProblems(String),
    Duplicate { problem: String, config: String },
    BadTime { problem: String, config: String, seconds: f64 },
    Empty,
}

impl std::fmt::Display for ProfileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProfileError::MismatchedProblems(detail) => {
                write!(f, "configs cover different problem sets:\n{detail}")
            }
            ProfileError::Duplicate { problem, config } => {
                write!(f, "duplicate record for problem `{problem}`, config `{config}`")
            }
            ProfileError::BadTime { problem, config, seconds } => write!(
                f,
                "non-positive time {seconds} for problem `{problem}`, config `{config}`"
            ),
            ProfileError::Empty => write!(f, "no timing records"),
        }
    }
}

impl std::error::Error for ProfileError {}

/// Computes one curve per config, configs sorted by name.
pub fn compute_profile(
    records: &[TimingRecord],
) -> Result<Vec<(String, Vec<ProfilePoint>)>, ProfileError> {
    if records.is_empty() {
        return Err(ProfileError::Empty);
    }
    // config -> problem -> time
    let mut table: BTreeMap<&str, BTreeMap<&str, Option<f64>>> = BTreeMap::new();
    for r in records {
        if let Some(s) = r.seconds {
            if s <= 0.0 || !s.is_finite() {
                return Err(ProfileError::BadTime {
                    problem: r.problem.clone(),
                    config: r.config.clone(),
                    seconds: s,
                });
            }
        }
        if table
            .entry(&r.config)
            .or_default()
            .insert(&r.problem, r.seconds)
            .is_some()
        {
            return Err(ProfileError::Duplicate {
                problem: r.problem.clone(),
                config: r.config.clone(),
            });
        }
    }

    // Every config must report the same problem set.
    let universe: BTreeSet<&str> = records.iter().map(|r| r.problem.as_str()).collect();
    let mut mismatch = String::new();
    for (config, problems) in &table {
        let have: BTreeSet<&str> = problems.keys().copied().collect();
        let missing: Vec<&&str> = universe.difference(&have).collect();
        if !missing.is_empty() {
            let names: Vec<&str> = missing.iter().map(|s| **s).collect();
            mismatch.push_str(&format!("  {config}: missing {}\n", names.join(", ")));
        }
    }
    if !mismatch.is_empty() {
        return Err(ProfileError::MismatchedProblems(mismatch.trim_end().into()));
    }

    // Per-problem best over solved entries.
    let mut best: BTreeMap<&str, f64> = BTreeMap::new();
    for problems in table.values() {
        for (&p, &t) in problems {
            if let Some(t) = t {
                best.entry(p)
                    .and_modify(|b| *b = b.min(t))
                    .or_insert(t);
            }
        }
    }

    let total = universe.len() as f64;
    let mut out = Vec::new();
    for (config, problems) in &table {
        let mut taus: Vec<f64> = problems
            .iter()
            .filter_map(|(p, t)| t.map(|t| (t / best[p]).log2()))
            .collect();
        taus.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut points: Vec<ProfilePoint> = Vec::new();
        for (i, &tau) in taus.iter().enumerate() {
            let fraction = (i + 1) as f64 / total;
            match points.last_mut() {
                Some(last) if last.tau == tau => last.fraction = fraction,
                _ => points.push(ProfilePoint { tau, fraction }),
            }
        }
        out.push((config.to_string(), points));
    }
    Ok(out)
}

/// Parses `problem,config,seconds` lines; `seconds` may be `DNF`
/// (case-insensitive). `#` comments and a header line are skipped.
pub fn parse_records(text: &str) -> Result<Vec<TimingRecord>, String> {
    let mut records = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 3 {
            return Err(format!("line {line_no}: expected `problem,config,seconds`"));
        }
        if line_no == 1 && fields[2].eq_ignore_ascii_case("seconds") {
            continue; // header
        }
        let seconds = if fields[2].eq_ignore_ascii_case("dnf") {
            None
        } else {
            Some(
                fields[2]
                    .parse::<f64>()
                    .map_err(|_| format!("line {line_no}: bad time `{}`", fields[2]))?,
            )
        };
        records.push(TimingRecord {
            problem: fields[0].to_string(),
            config: fields[1].to_string(),
            seconds,
        });
    }
    Ok(records)
}

/// Serializes curves as `config,tau,fraction` CSV.
pub fn to_csv(curves: &[(String, Vec<ProfilePoint>)]) -> String {
    let mut out = String::from("config,tau,fraction\n");
    for (config, points) in curves {
        for p in points {
            out.push_str(&format!("{config},{},{}\n", p.tau, p.fraction));
        }
    }
    out
}
