//! Golden-output corpus.
//!
//! A manifest lists cases; each case is an argument list and an expected exit
//! code. Arguments starting with `@` are paths relative to the manifest's
//! directory. The expected stdout of case `name` lives in
//! `expected/<name>.out` next to the manifest and is compared byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::{Cli, Command, Outcome, RamseyCommand, EXIT_CHECK_FAILED, EXIT_INVALID, EXIT_OK};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusCase {
    pub name: String,
    pub args: Vec<String>,
    #[serde(default)]
    pub exit: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub cases: Vec<CorpusCase>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRun {
    pub name: String,
    pub outcome: Outcome,
}

pub fn load_manifest(path: &Path) -> Result<(PathBuf, Manifest)> {
    let manifest: Manifest = crate::input::load_json(path)?;
    let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
    Ok((dir, manifest))
}

pub fn expected_path(dir: &Path, case: &CorpusCase) -> PathBuf {
    dir.join("expected").join(format!("{}.out", case.name))
}

fn resolve(dir: &Path, arg: &str) -> String {
    match arg.strip_prefix('@') {
        Some(rel) => dir.join(rel).to_string_lossy().into_owned(),
        None => arg.to_string(),
    }
}

/// Runs one case in-process; `workers` overrides the worker count of ramsey commands.
pub fn run_case(dir: &Path, case: &CorpusCase, workers: Option<usize>) -> Outcome {
    let argv = std::iter::once("lattice-ramsey".to_string()).chain(case.args.iter().map(|a| resolve(dir, a)));
    let mut cli = match <Cli as clap::Parser>::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => return Outcome::text(EXIT_INVALID, e.to_string()),
    };
    if let (Some(w), Command::Ramsey(r)) = (workers, &mut cli.command) {
        let search = match r {
            RamseyCommand::Check { search, .. }
            | RamseyCommand::Search { search, .. }
            | RamseyCommand::Transport { search, .. }
            | RamseyCommand::CongruenceForm { search, .. } => search,
        };
        search.workers = w as u64;
    }
    crate::run(cli)
}

pub fn run_corpus(manifest: &Path, workers: Option<usize>) -> Result<Vec<CaseRun>> {
    let (dir, m) = load_manifest(manifest)?;
    Ok(m.cases.iter().map(|c| CaseRun { name: c.name.clone(), outcome: run_case(&dir, c, workers) }).collect())
}

/// The `corpus` subcommand.
pub fn command(manifest: &Path, update: bool, workers: Option<usize>) -> Result<Outcome> {
    let (dir, m) = load_manifest(manifest)?;
    if update {
        fs::create_dir_all(dir.join("expected")).context("creating expected/")?;
    }
    let mut failed = Vec::new();
    for case in &m.cases {
        let got = run_case(&dir, case, workers);
        let path = expected_path(&dir, case);
        if update {
            fs::write(&path, &got.stdout).with_context(|| format!("writing {}", path.display()))?;
            if got.code != case.exit {
                failed.push(
                    json!({ "name": case.name, "reason": format!("exit {} (manifest says {})", got.code, case.exit) }),
                );
            }
            continue;
        }
        let want = fs::read_to_string(&path).ok();
        let reason = if got.code != case.exit {
            Some(format!("exit {} (expected {})", got.code, case.exit))
        } else if want.as_deref() != Some(got.stdout.as_str()) {
            Some(if want.is_none() { "missing expected output".to_string() } else { "stdout differs".to_string() })
        } else {
            None
        };
        if let Some(reason) = reason {
            failed.push(json!({ "name": case.name, "reason": reason }));
        }
    }
    let code = if failed.is_empty() { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(Outcome::json(
        code,
        &json!({ "cases": m.cases.len(), "passed": m.cases.len() - failed.len(), "failed": failed }),
    ))
}
