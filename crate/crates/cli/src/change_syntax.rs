//! Textual changes: `add-att:x>y`, `del-att:x>y`, `del-arg:z` and
//! `add-arg:z:SPEC`, where SPEC is a comma-separated list of `z>x` and `x>z`.

use argchange_core::{Change, ChangeError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChangeSyntaxError {
    #[error("unknown change '{0}' (expected add-att, del-att, add-arg or del-arg)")]
    UnknownKind(String),
    #[error("malformed change '{0}'")]
    Malformed(String),
    #[error("invalid change '{text}': {source}")]
    Invalid { text: String, source: ChangeError },
}

fn pair(text: &str) -> Option<(&str, &str)> {
    let (s, t) = text.split_once('>')?;
    Some((s, t))
}

pub fn parse_change(text: &str) -> Result<Change, ChangeSyntaxError> {
    let malformed = || ChangeSyntaxError::Malformed(text.into());
    let invalid = |source| ChangeSyntaxError::Invalid { text: text.into(), source };
    let (kind, rest) = text.split_once(':').ok_or_else(malformed)?;
    match kind {
        "add-att" | "del-att" => {
            let (s, t) = pair(rest).ok_or_else(malformed)?;
            let c = if kind == "add-att" {
                Change::add_attack(s, t)
            } else {
                Change::remove_attack(s, t)
            };
            c.map_err(invalid)
        }
        "del-arg" => Change::remove_argument(rest).map_err(invalid),
        "add-arg" => {
            let (z, spec) = rest.split_once(':').ok_or_else(malformed)?;
            let pairs = spec
                .split(',')
                .map(pair)
                .collect::<Option<Vec<_>>>()
                .ok_or_else(malformed)?;
            Change::add_argument(z, pairs).map_err(invalid)
        }
        _ => Err(ChangeSyntaxError::UnknownKind(kind.into())),
    }
}

pub fn format_change(c: &Change) -> String {
    match c {
        Change::AddAttack { source, target } => format!("add-att:{source}>{target}"),
        Change::RemoveAttack { source, target } => format!("del-att:{source}>{target}"),
        Change::RemoveArgument { argument } => format!("del-arg:{argument}"),
        Change::AddArgument { argument, interactions } => {
            let spec: Vec<String> = interactions.iter().map(|(s, t)| format!("{s}>{t}")).collect();
            format!("add-arg:{argument}:{}", spec.join(","))
        }
    }
}
