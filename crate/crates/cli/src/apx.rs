//! The APX text format: one `arg(NAME).` or `att(NAME,NAME).` per line,
//! `%` comment lines and blank lines. Attacks may name arguments declared
//! further down the file.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use argchange_core::{Framework, FrameworkError};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ApxError {
    #[error("malformed line {line}: '{text}'")]
    Malformed { line: usize, text: String },
    #[error("duplicate argument '{name}' at line {line}")]
    DuplicateArgument { name: String, line: usize },
    #[error("undeclared argument '{name}' at line {line}")]
    UndeclaredArgument { name: String, line: usize },
    #[error("no argument declared")]
    NoArguments,
}

#[derive(Debug, PartialEq, Eq)]
enum Token<'a> {
    Name(&'a str),
    Punct(char),
}

fn tokenize(line: &str) -> Option<Vec<Token<'_>>> {
    let mut out = Vec::new();
    let mut rest = line;
    loop {
        rest = rest.trim_start();
        let Some(c) = rest.chars().next() else {
            return Some(out);
        };
        if matches!(c, '(' | ')' | ',' | '.') {
            out.push(Token::Punct(c));
            rest = &rest[1..];
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let end = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            out.push(Token::Name(&rest[..end]));
            rest = &rest[end..];
        } else {
            return None;
        }
    }
}

enum Line<'a> {
    Arg(&'a str),
    Att(&'a str, &'a str),
}

fn parse_line(text: &str) -> Option<Line<'_>> {
    use Token::*;
    match tokenize(text)?.as_slice() {
        [Name("arg"), Punct('('), Name(a), Punct(')'), Punct('.')] => Some(Line::Arg(a)),
        [Name("att"), Punct('('), Name(a), Punct(','), Name(b), Punct(')'), Punct('.')] => {
            Some(Line::Att(a, b))
        }
        _ => None,
    }
}

pub fn parse_framework(text: &str) -> Result<Framework, ApxError> {
    let mut args: Vec<&str> = Vec::new();
    let mut declared = BTreeSet::new();
    let mut attacks: Vec<(&str, &str, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('%') {
            continue;
        }
        match parse_line(trimmed) {
            Some(Line::Arg(a)) => {
                if !declared.insert(a) {
                    return Err(ApxError::DuplicateArgument { name: a.into(), line });
                }
                args.push(a);
            }
            Some(Line::Att(a, b)) => attacks.push((a, b, line)),
            None => {
                return Err(ApxError::Malformed { line, text: trimmed.into() });
            }
        }
    }
    for &(a, b, line) in &attacks {
        for name in [a, b] {
            if !declared.contains(name) {
                return Err(ApxError::UndeclaredArgument { name: name.into(), line });
            }
        }
    }
    Framework::new(args, attacks.iter().map(|&(a, b, _)| (a, b))).map_err(|e| match e {
        FrameworkError::NoArguments => ApxError::NoArguments,
        other => unreachable!("validated above: {other}"),
    })
}

/// Arguments in name order, then attacks in (source, target) order.
pub fn serialize_framework(f: &Framework) -> String {
    let mut out = String::new();
    for a in f.arguments() {
        writeln!(out, "arg({a}).").unwrap();
    }
    for (s, t) in f.attacks_named() {
        writeln!(out, "att({s},{t}).").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_framework("arg(a).\narg(b).\natt(a,b).").unwrap();
        assert_eq!(f, Framework::new(["a", "b"], [("a", "b")]).unwrap());
    }

    #[test]
    fn whitespace_comments_and_forward_references() {
        let text = "% header\n\n  att( a , b ) .\narg (a).\n\targ(b)  .\n";
        let f = parse_framework(text).unwrap();
        assert!(f.has_attack("a", "b").unwrap());
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_framework("att(a,b).").unwrap_err().to_string(),
            "undeclared argument 'a' at line 1"
        );
        assert_eq!(
            parse_framework("arg(a).\n% c\narg(a).").unwrap_err(),
            ApxError::DuplicateArgument { name: "a".into(), line: 3 }
        );
        assert_eq!(
            parse_framework("arg(a).\narg(a b).").unwrap_err(),
            ApxError::Malformed { line: 2, text: "arg(a b).".into() }
        );
        assert!(matches!(parse_framework("arg(a)"), Err(ApxError::Malformed { line: 1, .. })));
        assert!(matches!(parse_framework("arg(a-b)."), Err(ApxError::Malformed { .. })));
        assert!(matches!(parse_framework("arg(a). % trailing"), Err(ApxError::Malformed { .. })));
        assert_eq!(parse_framework("% nothing\n"), Err(ApxError::NoArguments));
        assert_eq!(
            parse_framework("arg(a).\natt(a,c).").unwrap_err().to_string(),
            "undeclared argument 'c' at line 2"
        );
    }

    #[test]
    fn names_are_case_sensitive() {
        let f = parse_framework("arg(a).\narg(A).\natt(A,a).").unwrap();
        assert_eq!(f.len(), 2);
        assert!(f.has_attack("A", "a").unwrap());
    }

    #[test]
    fn serialization_is_canonical() {
        let f = parse_framework("arg(b).\narg(a).\natt(b,a).\natt(a,b).").unwrap();
        assert_eq!(serialize_framework(&f), "arg(a).\narg(b).\natt(a,b).\natt(b,a).\n");
    }
}
