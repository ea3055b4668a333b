//! Batch runner for task files: declarations, then checks, reported in TAP style.
//!
//! ```text
//! zoo A = Gf(c^2)
//! check central A.z in A
//! ```
//! prints `ok 1 - central A.z`. See [`task`] for the statement syntax.

mod env;
mod jobs;
pub mod suite;
pub mod task;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use task::{parse_task, CheckStmt, StmtKind};

/// Evaluation settings shared by every check of a run.
#[derive(Clone, Debug)]
pub struct Options {
    /// Default bounds for `center-search`.
    pub skew_bound: u32,
    pub coeff_bound: u32,
    /// Seed for the sampled identities of `tower-wellformed`.
    pub seed: u64,
    /// Default number of samples for `tower-wellformed`.
    pub samples: u32,
    /// Worker threads; 0 picks the available parallelism.
    pub threads: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            skew_bound: 2,
            coeff_bound: 2,
            seed: 0,
            samples: 20,
            threads: 0,
        }
    }
}

impl Options {
    /// Applies `skew=<n>,coeff=<m>` (either part may be omitted).
    pub fn set_bounds(&mut self, spec: &str) -> Result<(), String> {
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| format!("bad bound `{part}`, expected skew=<n> or coeff=<m>"))?;
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|_| format!("bound `{part}` is not a number"))?;
            match k.trim() {
                "skew" => self.skew_bound = v,
                "coeff" => self.coeff_bound = v,
                other => return Err(format!("unknown bound `{other}`, expected skew or coeff")),
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub index: usize,
    /// Line of the check in the task file.
    pub line: usize,
    pub name: String,
    pub status: Status,
    pub witness: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub source: String,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
    pub summary: Summary,
}

/// A parse or declaration error, located in the task file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaskError {
    pub source: String,
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for TaskError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.line == 0 {
            write!(f, "{}: error: {}", self.source, self.message)
        } else {
            write!(f, "{}:{}: error: {}", self.source, self.line, self.message)
        }
    }
}

impl std::error::Error for TaskError {}

/// Short label for a check: the kind and its subject, without the tower clause.
fn check_name(c: &CheckStmt) -> String {
    let subject = match c.kind.as_str() {
        "central" | "normal" | "inner-auto" | "inner-der" | "inner-power-scan" => {
            task::split_keyword(&c.args, "in").map_or(c.args.as_str(), |(s, _)| s)
        }
        _ => c.args.as_str(),
    };
    format!("{} {}", c.kind, subject).trim().to_string()
}

type JobResult = Result<(bool, Vec<String>), String>;

/// Runs jobs on a small pool; results come back in input order.
fn run_jobs(jobs: Vec<jobs::Job>, threads: usize) -> Vec<JobResult> {
    let n = jobs.len();
    let threads = match threads {
        0 => std::thread::available_parallelism().map_or(1, |p| p.get()),
        t => t,
    }
    .min(n.max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<JobResult>>> = (0..n).map(|_| Mutex::new(None)).collect();
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let out = match catch_unwind(AssertUnwindSafe(|| jobs[i].run())) {
                    Ok(Ok(v)) => Ok(v),
                    Ok(Err(e)) => Err(e.to_string()),
                    Err(p) => Err(match p.downcast_ref::<String>() {
                        Some(s) => format!("internal error: {s}"),
                        None => format!(
                            "internal error: {}",
                            p.downcast_ref::<&str>().copied().unwrap_or("panic")
                        ),
                    }),
                };
                *slots[i].lock().unwrap_or_else(|e| e.into_inner()) = Some(out);
            });
        }
    });
    slots
        .into_iter()
        .map(|m| {
            m.into_inner()
                .unwrap_or_else(|e| e.into_inner())
                .expect("every job ran")
        })
        .collect()
}

/// Parses and runs a task file given as text; `source` names it in diagnostics.
pub fn run_task(source: &str, text: &str, opts: &Options) -> Result<Report, TaskError> {
    let fail = |line: usize, message: String| TaskError {
        source: source.to_string(),
        line,
        message,
    };
    let stmts = parse_task(text).map_err(|(l, m)| fail(l, m))?;
    let mut env = env::Env::default();
    let mut pending = Vec::new();
    let mut jobs = Vec::new();
    for st in &stmts {
        if let Some(job) = env.declare(&st.kind, opts).map_err(|m| fail(st.line, m))? {
            let StmtKind::Check(c) = &st.kind else {
                unreachable!("only checks produce jobs")
            };
            pending.push((st.line, check_name(c)));
            jobs.push(job);
        }
    }
    let results = run_jobs(jobs, opts.threads);
    let mut summary = Summary::default();
    let checks = pending
        .into_iter()
        .zip(results)
        .enumerate()
        .map(|(i, ((line, name), r))| {
            let (status, witness) = match r {
                Ok((true, w)) => (Status::Pass, w),
                Ok((false, w)) => (Status::Fail, w),
                Err(e) => (Status::Error, vec![format!("error: {e}")]),
            };
            match status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Error => summary.errored += 1,
            }
            CheckOutcome {
                index: i + 1,
                line,
                name,
                status,
                witness,
            }
        })
        .collect();
    Ok(Report {
        source: source.to_string(),
        seed: opts.seed,
        checks,
        summary,
    })
}

/// Runs a file from disk.
pub fn run_file(path: &std::path::Path, opts: &Options) -> Result<Report, TaskError> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| TaskError {
        source: source.clone(),
        line: 0,
        message: e.to_string(),
    })?;
    run_task(&source, &text, opts)
}

/// Runs one of the built-in suites.
pub fn run_suite(name: &str, opts: &Options) -> Result<Report, TaskError> {
    let text = suite::suite_text(name).ok_or_else(|| TaskError {
        source: format!("suite {name}"),
        line: 0,
        message: format!(
            "unknown suite `{name}` (known: {})",
            suite::SUITES.join(", ")
        ),
    })?;
    run_task(&format!("suite {name}"), &text, opts)
}

impl Report {
    /// TAP-style text: plan, one line per check with `#` witness lines, summary.
    pub fn render_plain(&self) -> String {
        let mut out = format!("1..{}\n", self.checks.len());
        for c in &self.checks {
            let tag = if c.status == Status::Pass {
                "ok"
            } else {
                "not ok"
            };
            out.push_str(&format!("{tag} {} - {}", c.index, c.name));
            if c.status == Status::Error {
                out.push_str(" # ERROR");
            }
            out.push('\n');
            for w in &c.witness {
                out.push_str(&format!("#   {w}\n"));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "# passed {} / failed {} / errored {}\n",
            s.passed, s.failed, s.errored
        ));
        out
    }

    pub fn render_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// 0 when everything passed, 1 on a failed check, 2 on an evaluation error.
    pub fn exit_code(&self) -> i32 {
        if self.summary.errored > 0 {
            2
        } else if self.summary.failed > 0 {
            1
        } else {
            0
        }
    }
}

#[cfg(test)]
mod tests;
