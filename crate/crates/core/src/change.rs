//! The four single-step change operations and their inverses.

use alloc::collections::BTreeSet;

use thiserror::Error;

use crate::framework::{ArgumentId, Attack, Framework, FrameworkError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChangeKind {
    AddAttack,
    RemoveAttack,
    AddArgument,
    RemoveArgument,
}

impl ChangeKind {
    pub const ALL: [ChangeKind; 4] = [
        ChangeKind::AddAttack,
        ChangeKind::RemoveAttack,
        ChangeKind::AddArgument,
        ChangeKind::RemoveArgument,
    ];
}

/// A single change to a framework.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Change {
    AddAttack { source: ArgumentId, target: ArgumentId },
    RemoveAttack { source: ArgumentId, target: ArgumentId },
    /// Adds `argument` together with its interaction set. Build through
    /// [`Change::add_argument`] to get the interaction-set checks.
    AddArgument {
        argument: ArgumentId,
        interactions: BTreeSet<Attack>,
    },
    /// Removes `argument` and every attack incident to it.
    RemoveArgument { argument: ArgumentId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChangeError {
    #[error(transparent)]
    Framework(#[from] FrameworkError),
    #[error("attack ({0}, {1}) already exists")]
    DuplicateAttack(ArgumentId, ArgumentId),
    #[error("attack ({0}, {1}) does not exist")]
    MissingAttack(ArgumentId, ArgumentId),
    #[error("argument '{0}' already exists")]
    DuplicateArgument(ArgumentId),
    #[error("interaction endpoint '{0}' is not an argument of the framework")]
    DanglingEndpoint(ArgumentId),
    #[error("cannot remove '{0}': it is the last argument")]
    LastArgument(ArgumentId),
    #[error("the interaction set of '{0}' is empty")]
    EmptyInteractions(ArgumentId),
    #[error("the interaction set of '{0}' contains a self-attack")]
    SelfInteraction(ArgumentId),
    #[error("interaction ({1}, {2}) does not involve '{0}'")]
    ForeignInteraction(ArgumentId, ArgumentId, ArgumentId),
    #[error("the removal of '{0}' carries no record of its incident attacks")]
    MissingIncidentRecord(ArgumentId),
    #[error("change {0:?} is not reflected in the given framework")]
    NotApplied(Change),
    #[error("expected an argument addition, got {0:?}")]
    NotAnAddition(Change),
}

impl Change {
    pub fn add_attack(source: &str, target: &str) -> Result<Change, ChangeError> {
        Ok(Change::AddAttack {
            source: ArgumentId::new(source)?,
            target: ArgumentId::new(target)?,
        })
    }

    pub fn remove_attack(source: &str, target: &str) -> Result<Change, ChangeError> {
        Ok(Change::RemoveAttack {
            source: ArgumentId::new(source)?,
            target: ArgumentId::new(target)?,
        })
    }

    pub fn remove_argument(argument: &str) -> Result<Change, ChangeError> {
        Ok(Change::RemoveArgument {
            argument: ArgumentId::new(argument)?,
        })
    }

    /// An argument addition. The interaction set must be non-empty, must not
    /// contain `(z, z)`, and every pair must have `z` as exactly one endpoint.
    pub fn add_argument<I, S, T>(argument: &str, interactions: I) -> Result<Change, ChangeError>
    where
        I: IntoIterator<Item = (S, T)>,
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let z = ArgumentId::new(argument)?;
        let mut set = BTreeSet::new();
        for (s, t) in interactions {
            set.insert((ArgumentId::new(s.as_ref())?, ArgumentId::new(t.as_ref())?));
        }
        validate_interactions(&z, &set)?;
        Ok(Change::AddArgument {
            argument: z,
            interactions: set,
        })
    }

    pub fn kind(&self) -> ChangeKind {
        match self {
            Change::AddAttack { .. } => ChangeKind::AddAttack,
            Change::RemoveAttack { .. } => ChangeKind::RemoveAttack,
            Change::AddArgument { .. } => ChangeKind::AddArgument,
            Change::RemoveArgument { .. } => ChangeKind::RemoveArgument,
        }
    }

    /// The argument introduced by an addition.
    pub fn added_argument(&self) -> Option<&ArgumentId> {
        match self {
            Change::AddArgument { argument, .. } => Some(argument),
            _ => None,
        }
    }
}

fn validate_interactions(z: &ArgumentId, set: &BTreeSet<Attack>) -> Result<(), ChangeError> {
    if set.is_empty() {
        return Err(ChangeError::EmptyInteractions(z.clone()));
    }
    for (s, t) in set {
        match (s == z, t == z) {
            (true, true) => return Err(ChangeError::SelfInteraction(z.clone())),
            (false, false) => {
                return Err(ChangeError::ForeignInteraction(z.clone(), s.clone(), t.clone()))
            }
            _ => {}
        }
    }
    Ok(())
}

/// A change as applied, together with the attacks an argument removal took
/// away. This is what makes a removal invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChangeRecord {
    pub change: Change,
    pub removed_attacks: BTreeSet<Attack>,
}

impl ChangeRecord {
    pub fn inverse(&self) -> Result<Change, ChangeError> {
        match &self.change {
            Change::RemoveArgument { argument } => {
                validate_interactions(argument, &self.removed_attacks)?;
                Ok(Change::AddArgument {
                    argument: argument.clone(),
                    interactions: self.removed_attacks.clone(),
                })
            }
            other => Ok(invert_simple(other)),
        }
    }
}

/// Applies `c` to `f`, leaving `f` untouched.
pub fn apply(f: &Framework, c: &Change) -> Result<Framework, ChangeError> {
    apply_recorded(f, c).map(|(g, _)| g)
}

pub fn apply_recorded(f: &Framework, c: &Change) -> Result<(Framework, ChangeRecord), ChangeError> {
    let mut removed = BTreeSet::new();
    let g = match c {
        Change::AddAttack { source, target } => {
            let (s, t) = (f.index_of(source.as_str())?, f.index_of(target.as_str())?);
            if f.attacks_idx(s, t) {
                return Err(ChangeError::DuplicateAttack(source.clone(), target.clone()));
            }
            f.with_added_attack(s, t)
        }
        Change::RemoveAttack { source, target } => {
            let (s, t) = (f.index_of(source.as_str())?, f.index_of(target.as_str())?);
            if !f.attacks_idx(s, t) {
                return Err(ChangeError::MissingAttack(source.clone(), target.clone()));
            }
            f.with_removed_attack(s, t)
        }
        Change::AddArgument {
            argument,
            interactions,
        } => {
            validate_interactions(argument, interactions)?;
            if f.contains(argument.as_str()) {
                return Err(ChangeError::DuplicateArgument(argument.clone()));
            }
            for (s, t) in interactions {
                let other = if s == argument { t } else { s };
                if !f.contains(other.as_str()) {
                    return Err(ChangeError::DanglingEndpoint(other.clone()));
                }
            }
            let mut args = f.argument_set();
            args.insert(argument.clone());
            let mut attacks = f.attacks_named();
            attacks.extend(interactions.iter().cloned());
            Framework::from_named(args, &attacks)
        }
        Change::RemoveArgument { argument } => {
            f.index_of(argument.as_str())?;
            if f.len() < 2 {
                return Err(ChangeError::LastArgument(argument.clone()));
            }
            let mut args = f.argument_set();
            args.remove(argument);
            let (incident, kept): (BTreeSet<Attack>, BTreeSet<Attack>) = f
                .attacks_named()
                .into_iter()
                .partition(|(s, t)| s == argument || t == argument);
            removed = incident;
            Framework::from_named(args, &kept)
        }
    };
    Ok((
        g,
        ChangeRecord {
            change: c.clone(),
            removed_attacks: removed,
        },
    ))
}

fn invert_simple(c: &Change) -> Change {
    match c {
        Change::AddAttack { source, target } => Change::RemoveAttack {
            source: source.clone(),
            target: target.clone(),
        },
        Change::RemoveAttack { source, target } => Change::AddAttack {
            source: source.clone(),
            target: target.clone(),
        },
        Change::AddArgument { argument, .. } => Change::RemoveArgument {
            argument: argument.clone(),
        },
        Change::RemoveArgument { .. } => unreachable!("handled by the caller"),
    }
}

/// The change undoing `c`, checked against the framework `c` produced.
///
/// An argument removal cannot be inverted from the change alone: the incident
/// attacks are gone. Use [`ChangeRecord::inverse`] for that case.
pub fn inverse(c: &Change, after: &Framework) -> Result<Change, ChangeError> {
    let reflected = match c {
        Change::AddAttack { source, target } => after.has_attack(source.as_str(), target.as_str())?,
        Change::RemoveAttack { source, target } => {
            !after.has_attack(source.as_str(), target.as_str())?
        }
        Change::AddArgument { argument, interactions } => {
            after.contains(argument.as_str())
                && interactions.iter().all(|(s, t)| {
                    after.has_attack(s.as_str(), t.as_str()).unwrap_or(false)
                })
        }
        Change::RemoveArgument { argument } => {
            return Err(ChangeError::MissingIncidentRecord(argument.clone()));
        }
    };
    if !reflected {
        return Err(ChangeError::NotApplied(c.clone()));
    }
    Ok(invert_simple(c))
}

/// Attacks of `f` incident to `name`, as a removal would take them.
pub fn incident_attacks(f: &Framework, name: &str) -> Result<BTreeSet<Attack>, FrameworkError> {
    f.index_of(name)?;
    Ok(f.attacks_named()
        .into_iter()
        .filter(|(s, t)| s.as_str() == name || t.as_str() == name)
        .collect())
}

impl core::fmt::Display for ChangeKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            ChangeKind::AddAttack => "add-att",
            ChangeKind::RemoveAttack => "del-att",
            ChangeKind::AddArgument => "add-arg",
            ChangeKind::RemoveArgument => "del-arg",
        })
    }
}
