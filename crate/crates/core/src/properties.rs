//! Structural and status-based properties of a change, judged from the
//! extension sets before and after it.
//!
//! The structural labels are meant to be mutually exclusive. Two readings make
//! that hold on real outcomes:
//!
//! * expansive and altering only apply when both sides have at least one
//!   non-empty extension (with no extension, or only the empty one, the
//!   decisive and destructive labels cover the change);
//! * expansive asks for a one-to-one pairing in which every old extension is
//!   strictly contained in its new partner. Without the pairing, two new
//!   extensions could grow out of the same old one while another old
//!   extension disappears, which is both expansive and altering and breaks
//!   monotony.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::framework::ArgumentId;
use crate::semantics::{Extension, ExtensionSet, SemanticsKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructuralProperty {
    Decisive,
    Restrictive,
    Questioning,
    Destructive,
    Expansive,
    Conservative,
    Altering,
    Unclassified,
}

impl StructuralProperty {
    pub const ALL: [StructuralProperty; 8] = [
        StructuralProperty::Decisive,
        StructuralProperty::Restrictive,
        StructuralProperty::Questioning,
        StructuralProperty::Destructive,
        StructuralProperty::Expansive,
        StructuralProperty::Conservative,
        StructuralProperty::Altering,
        StructuralProperty::Unclassified,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            StructuralProperty::Decisive => "decisive",
            StructuralProperty::Restrictive => "restrictive",
            StructuralProperty::Questioning => "questioning",
            StructuralProperty::Destructive => "destructive",
            StructuralProperty::Expansive => "expansive",
            StructuralProperty::Conservative => "conservative",
            StructuralProperty::Altering => "altering",
            StructuralProperty::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for StructuralProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown structural property '{0}'")]
pub struct UnknownProperty(pub alloc::string::String);

impl FromStr for StructuralProperty {
    type Err = UnknownProperty;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StructuralProperty::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| UnknownProperty(s.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropertyError {
    #[error("extension sets computed under different semantics ({0} vs {1})")]
    SemanticsMismatch(SemanticsKind, SemanticsKind),
}

fn same_semantics(before: &ExtensionSet, after: &ExtensionSet) -> Result<(), PropertyError> {
    if before.semantics() == after.semantics() {
        Ok(())
    } else {
        Err(PropertyError::SemanticsMismatch(
            before.semantics(),
            after.semantics(),
        ))
    }
}

pub fn is_decisive(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    let n = before.len();
    (before.is_empty() || before.is_single_empty() || n >= 2)
        && after.len() == 1
        && !after.is_single_empty()
}

pub fn is_restrictive(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    let (n, p) = (before.len(), after.len());
    n >= 2 && n > p && p >= 2
}

pub fn is_questioning(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    let (n, p) = (before.len(), after.len());
    p >= 2 && (n == 0 || (p > n && n >= 1))
}

pub fn is_destructive(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    !before.is_empty() && before.iter().all(|e| !e.is_empty()) && after.is_degenerate()
}

pub fn is_expansive(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    !before.is_degenerate()
        && !after.is_degenerate()
        && before.len() == after.len()
        && has_strict_pairing(before, after)
}

pub fn is_conservative(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    before.extensions() == after.extensions()
}

pub fn is_altering(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    !before.is_degenerate()
        && !after.is_degenerate()
        && before.len() == after.len()
        && before
            .iter()
            .any(|e| after.iter().all(|e2| !e.is_subset(e2)))
}

/// A perfect matching between `before` and `after` in which every old
/// extension is a strict subset of its partner (Kuhn's augmenting paths).
fn has_strict_pairing(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    let olds: Vec<&Extension> = before.iter().collect();
    let news: Vec<&Extension> = after.iter().collect();
    if olds.len() != news.len() {
        return false;
    }
    let edges: Vec<Vec<usize>> = olds
        .iter()
        .map(|o| {
            news.iter()
                .enumerate()
                .filter(|(_, n)| o.len() < n.len() && o.is_subset(n))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let mut partner: Vec<Option<usize>> = vec![None; news.len()];
    fn augment(
        i: usize,
        edges: &[Vec<usize>],
        seen: &mut [bool],
        partner: &mut [Option<usize>],
    ) -> bool {
        for &j in &edges[i] {
            if !seen[j] {
                seen[j] = true;
                if partner[j].is_none_or(|k| augment(k, edges, seen, partner)) {
                    partner[j] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    (0..olds.len()).all(|i| {
        let mut seen = vec![false; news.len()];
        augment(i, &edges, &mut seen, &mut partner)
    })
}

/// Every definition the pair satisfies, in evaluation order. On outcomes of
/// real frameworks this has at most one element.
pub fn matching_definitions(before: &ExtensionSet, after: &ExtensionSet) -> Vec<StructuralProperty> {
    type Test = fn(&ExtensionSet, &ExtensionSet) -> bool;
    const TESTS: [(StructuralProperty, Test); 7] = [
        (StructuralProperty::Conservative, is_conservative),
        (StructuralProperty::Decisive, is_decisive),
        (StructuralProperty::Destructive, is_destructive),
        (StructuralProperty::Restrictive, is_restrictive),
        (StructuralProperty::Questioning, is_questioning),
        (StructuralProperty::Expansive, is_expansive),
        (StructuralProperty::Altering, is_altering),
    ];
    TESTS
        .iter()
        .filter(|(_, t)| t(before, after))
        .map(|(p, _)| *p)
        .collect()
}

pub fn classify_structural(
    before: &ExtensionSet,
    after: &ExtensionSet,
) -> Result<StructuralProperty, PropertyError> {
    same_semantics(before, after)?;
    Ok(matching_definitions(before, after)
        .first()
        .copied()
        .unwrap_or(StructuralProperty::Unclassified))
}

/// Each old extension is contained in some new one.
pub fn check_monotony(before: &ExtensionSet, after: &ExtensionSet) -> Result<bool, PropertyError> {
    same_semantics(before, after)?;
    Ok(monotony(before, after))
}

fn monotony(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    before
        .iter()
        .all(|e| after.iter().any(|e2| e.is_subset(e2)))
}

pub fn check_credulous_monotony(
    before: &ExtensionSet,
    after: &ExtensionSet,
) -> Result<bool, PropertyError> {
    same_semantics(before, after)?;
    Ok(before.union().is_subset(&after.union()))
}

/// The intersection over no extension counts as empty, so a change from a
/// framework without extensions satisfies this vacuously.
pub fn check_skeptical_monotony(
    before: &ExtensionSet,
    after: &ExtensionSet,
) -> Result<bool, PropertyError> {
    same_semantics(before, after)?;
    Ok(before.intersection().is_subset(&after.intersection()))
}

pub fn check_partial_monotony(
    before: &ExtensionSet,
    after: &ExtensionSet,
    x: &str,
) -> Result<bool, PropertyError> {
    same_semantics(before, after)?;
    Ok(!before.credulously_accepts(x) || after.credulously_accepts(x))
}

/// The added argument is in every extension, and there is at least one.
pub fn check_priority_to_recency(after: &ExtensionSet, z: &str) -> bool {
    after.skeptically_accepts(z)
}

/// Everything [`classify`] can say about one change.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub structural: StructuralProperty,
    pub monotony: bool,
    pub credulous_monotony: bool,
    pub skeptical_monotony: bool,
    pub partial_monotony: BTreeMap<ArgumentId, bool>,
    /// Only meaningful for argument additions.
    pub priority_to_recency: Option<bool>,
}

/// Classifies a change given its before/after extension sets. Partial
/// monotony is reported for each of `arguments` (normally the arguments of
/// the framework before the change).
pub fn classify<'a, I>(
    before: &ExtensionSet,
    after: &ExtensionSet,
    arguments: I,
    added: Option<&ArgumentId>,
) -> Result<ClassificationReport, PropertyError>
where
    I: IntoIterator<Item = &'a ArgumentId>,
{
    let structural = classify_structural(before, after)?;
    let partial_monotony = arguments
        .into_iter()
        .map(|x| {
            (
                x.clone(),
                !before.credulously_accepts(x.as_str()) || after.credulously_accepts(x.as_str()),
            )
        })
        .collect();
    Ok(ClassificationReport {
        structural,
        monotony: monotony(before, after),
        credulous_monotony: check_credulous_monotony(before, after)?,
        skeptical_monotony: check_skeptical_monotony(before, after)?,
        partial_monotony,
        priority_to_recency: added.map(|z| check_priority_to_recency(after, z.as_str())),
    })
}

/// Extension sets hit by the two cells of the structural table that cannot
/// occur for frameworks with at least one argument.
pub fn is_impossible_cell(before: &ExtensionSet, after: &ExtensionSet) -> bool {
    (before.is_empty() && after.is_single_empty()) || (before.is_single_empty() && after.is_empty())
}
