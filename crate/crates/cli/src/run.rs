//! Subcommand dispatch. [`run`] never prints; it returns the report and
//! diagnostics so callers decide where they go.

use std::collections::BTreeSet;
use std::path::PathBuf;

use argchange_core::conditions::{
    evaluate_grounded_conditions, evaluate_preferred_conditions, ConditionId, Property,
};
use argchange_core::properties::{classify, ClassificationReport};
use argchange_core::semantics::status_in;
use argchange_core::suite::{run_oracle_check, run_proposition_suite, SuiteConfig};
use argchange_core::oracle::MAX_ORACLE_ARGUMENTS;
use argchange_core::{apply, extensions, Change, ChangeKind, Framework, SemanticsKind};
use thiserror::Error;

use crate::apx::{parse_framework, ApxError};
use crate::change_syntax::format_change;
use crate::report::Report;
use crate::whatif::{whatif, Target, WhatIfError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FINDINGS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Extensions,
    Classify,
    Conditions,
    WhatIf,
    Verify,
    OracleCheck,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Extensions => "extensions",
            Command::Classify => "classify",
            Command::Conditions => "conditions",
            Command::WhatIf => "whatif",
            Command::Verify => "verify",
            Command::OracleCheck => "oracle-check",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Input {
    Stdin,
    Path(PathBuf),
    Text(String),
}

/// Everything one invocation needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunSpec {
    pub command: Command,
    pub input: Input,
    pub semantics: SemanticsKind,
    pub change: Option<Change>,
    pub target: Option<Target>,
    pub budget: usize,
    pub argument: String,
    pub seed: u64,
    pub count: usize,
    /// Defaults to 8 for `verify` and 12 for `oracle-check`.
    pub max_args: Option<usize>,
    /// Change kind sampled by `verify`; `None` samples any kind.
    pub kind: Option<ChangeKind>,
}

impl RunSpec {
    pub fn new(command: Command) -> Self {
        RunSpec {
            command,
            input: Input::Stdin,
            semantics: SemanticsKind::Preferred,
            change: None,
            target: None,
            budget: 1,
            argument: "z".into(),
            seed: 0,
            count: 1000,
            max_args: None,
            kind: Some(ChangeKind::AddArgument),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Apx(#[from] ApxError),
    #[error(transparent)]
    Change(#[from] argchange_core::ChangeError),
    #[error(transparent)]
    WhatIf(#[from] WhatIfError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
    pub diagnostics: Vec<String>,
}

pub fn run(spec: &RunSpec) -> Outcome {
    match dispatch(spec) {
        Ok((findings, report)) => Outcome {
            code: if findings { EXIT_FINDINGS } else { EXIT_OK },
            report: report.to_string(),
            diagnostics: Vec::new(),
        },
        Err(e) => Outcome {
            code: EXIT_USAGE,
            report: String::new(),
            diagnostics: vec![format!("error: {e}")],
        },
    }
}

fn read_input(input: &Input) -> Result<String, CliError> {
    use std::io::Read;
    match input {
        Input::Text(t) => Ok(t.clone()),
        Input::Path(p) => std::fs::read_to_string(p).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        Input::Stdin => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| CliError::Io { path: "standard input".into(), source })?;
            Ok(s)
        }
    }
}

fn framework(spec: &RunSpec) -> Result<Framework, CliError> {
    Ok(parse_framework(&read_input(&spec.input)?)?)
}

fn required_change(spec: &RunSpec) -> Result<&Change, CliError> {
    spec.change
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{} requires --change", spec.command.as_str())))
}

fn dispatch(spec: &RunSpec) -> Result<(bool, Report), CliError> {
    let mut r = Report::new();
    r.field("command", spec.command.as_str());
    let findings = match spec.command {
        Command::Extensions => {
            let f = framework(spec)?;
            let exts = extensions(&f, spec.semantics);
            r.field("semantics", spec.semantics)
                .field("arguments", f.len())
                .field("attacks", f.attack_count())
                .field("extensions", &exts)
                .map("status", f.arguments().iter().map(|a| (a, status_in(&exts, a.as_str()))));
            false
        }
        Command::Classify => {
            let f = framework(spec)?;
            let c = required_change(spec)?;
            let (before, after, report) = analyse(&f, c, spec.semantics)?;
            r.field("semantics", spec.semantics)
                .field("change", format_change(c))
                .field("before", before)
                .field("after", after);
            classification_fields(&mut r, &report);
            false
        }
        Command::Conditions => conditions(spec, &mut r)?,
        Command::WhatIf => {
            let f = framework(spec)?;
            let target = spec
                .target
                .ok_or_else(|| CliError::Usage("whatif requires --target".into()))?;
            let res = whatif(&f, &spec.argument, spec.semantics, target, spec.budget)?;
            r.field("semantics", spec.semantics)
                .field("target", target)
                .field("budget", spec.budget)
                .field("argument", &spec.argument)
                .field("examined", res.examined)
                .list("hits", res.hits.iter().map(format_change));
            false
        }
        Command::Verify => {
            let cfg = suite_config(spec, 8)?;
            let s = run_proposition_suite(&cfg, spec.kind);
            r.field("seed", spec.seed)
                .field("count", spec.count)
                .field("max-arguments", cfg.max_arguments)
                .field("change-kind", spec.kind.map_or("any".to_string(), |k| k.to_string()))
                .field("instances", s.instances)
                .field("checks", s.checks)
                .field("closed-forms", s.closed_forms)
                .field("closed-form-mismatches", s.closed_form_mismatches)
                .map("labels", s.labels.iter().map(|((k, p), n)| (format!("{k}/{p}"), n)))
                .list(
                    "violations",
                    s.violations.iter().map(|v| format!("seed {}: {}", v.seed, v.violation)),
                );
            !s.violations.is_empty() || s.closed_form_mismatches > 0
        }
        Command::OracleCheck => {
            let cfg = suite_config(spec, 12)?;
            let s = run_oracle_check(&cfg);
            r.field("seed", spec.seed)
                .field("count", spec.count)
                .field("max-arguments", cfg.max_arguments)
                .field("frameworks", s.frameworks)
                .field("comparisons", s.comparisons)
                .list(
                    "mismatches",
                    s.mismatches.iter().map(|m| {
                        format!("seed {} {}: engine {} oracle {}", m.seed, m.semantics, m.engine, m.oracle)
                    }),
                );
            !s.mismatches.is_empty()
        }
    };
    Ok((findings, r))
}

fn suite_config(spec: &RunSpec, default_max: usize) -> Result<SuiteConfig, CliError> {
    let max = spec.max_args.unwrap_or(default_max);
    if max == 0 || max > MAX_ORACLE_ARGUMENTS {
        return Err(CliError::Usage(format!(
            "--max-args must be between 1 and {MAX_ORACLE_ARGUMENTS}"
        )));
    }
    Ok(SuiteConfig::new(spec.count, max, spec.seed))
}

fn analyse(
    f: &Framework,
    c: &Change,
    k: SemanticsKind,
) -> Result<(argchange_core::ExtensionSet, argchange_core::ExtensionSet, ClassificationReport), CliError> {
    let g = apply(f, c)?;
    let before = extensions(f, k);
    let after = extensions(&g, k);
    let report = classify(&before, &after, f.arguments(), c.added_argument()).expect("same semantics");
    Ok((before, after, report))
}

fn classification_fields(r: &mut Report, report: &ClassificationReport) {
    r.field("structural", report.structural)
        .field("monotony", report.monotony)
        .field("credulous-monotony", report.credulous_monotony)
        .field("skeptical-monotony", report.skeptical_monotony)
        .field(
            "priority-to-recency",
            report.priority_to_recency.map_or("n/a".to_string(), |b| b.to_string()),
        )
        .map("partial-monotony", &report.partial_monotony);
}

fn labelled<'a>(set: &'a BTreeSet<(Property, ConditionId)>) -> impl Iterator<Item = String> + 'a {
    set.iter().map(|(p, id)| format!("{p} ({id})"))
}

fn conditions(spec: &RunSpec, r: &mut Report) -> Result<bool, CliError> {
    let f = framework(spec)?;
    let c = required_change(spec)?;
    if c.kind() != ChangeKind::AddArgument {
        return Err(CliError::Usage("conditions requires an add-arg change".into()));
    }
    let cr = match spec.semantics {
        SemanticsKind::Grounded => evaluate_grounded_conditions(&f, c)?,
        SemanticsKind::Preferred => evaluate_preferred_conditions(&f, c)?,
        SemanticsKind::Stable => {
            return Err(CliError::Usage(
                "conditions are available for grounded and preferred semantics only".into(),
            ))
        }
    };
    let (before, after, report) = analyse(&f, c, spec.semantics)?;
    let unmet: Vec<String> = cr
        .fired_cs
        .iter()
        .filter(|(p, _)| !p.holds_in(&report))
        .map(|(p, id)| format!("{p} ({id})"))
        .collect();
    let contradicted: Vec<String> = cr
        .failed_cn
        .iter()
        .filter(|(p, _)| p.holds_in(&report))
        .map(|(p, id)| format!("{p} ({id})"))
        .collect();
    r.field("semantics", spec.semantics)
        .field("change", format_change(c))
        .field("before", before)
        .field("after", after)
        .list("fired-cs", labelled(&cr.fired_cs))
        .list("failed-cn", labelled(&cr.failed_cn))
        .list("holding-cn", labelled(&cr.holding_cn))
        .list("guaranteed", &cr.guaranteed)
        .list("excluded", &cr.excluded);
    classification_fields(r, &report);
    r.list("unmet-guarantees", &unmet)
        .list("contradicted-exclusions", &contradicted);
    Ok(!unmet.is_empty() || !contradicted.is_empty() || !cr.is_consistent())
}
