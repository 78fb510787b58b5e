//! Grounded, preferred and stable extensions, and argument status.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::framework::{ArgSet, ArgumentId, Framework, FrameworkError};

/// One extension: a set of argument names.
pub type Extension = BTreeSet<ArgumentId>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SemanticsKind {
    Grounded,
    Preferred,
    Stable,
}

impl SemanticsKind {
    pub const ALL: [SemanticsKind; 3] = [
        SemanticsKind::Grounded,
        SemanticsKind::Preferred,
        SemanticsKind::Stable,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SemanticsKind::Grounded => "grounded",
            SemanticsKind::Preferred => "preferred",
            SemanticsKind::Stable => "stable",
        }
    }
}

impl fmt::Display for SemanticsKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown semantics '{0}' (expected grounded, preferred or stable)")]
pub struct UnknownSemantics(pub alloc::string::String);

impl FromStr for SemanticsKind {
    type Err = UnknownSemantics;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grounded" => Ok(SemanticsKind::Grounded),
            "preferred" => Ok(SemanticsKind::Preferred),
            "stable" => Ok(SemanticsKind::Stable),
            other => Err(UnknownSemantics(other.into())),
        }
    }
}

/// The outcome of a framework under a semantics.
///
/// An empty `ExtensionSet` means "no extension" and is distinct from the set
/// holding one empty extension. Extensions are kept in canonical order
/// (members by name, extensions lexicographically), so equality is
/// structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtensionSet {
    semantics: SemanticsKind,
    extensions: BTreeSet<Extension>,
}

impl ExtensionSet {
    pub fn new<I>(semantics: SemanticsKind, extensions: I) -> Self
    where
        I: IntoIterator<Item = Extension>,
    {
        ExtensionSet {
            semantics,
            extensions: extensions.into_iter().collect(),
        }
    }

    /// Convenience constructor from name lists, mostly for fixtures.
    pub fn from_names<'a, I, J>(semantics: SemanticsKind, extensions: I) -> Result<Self, FrameworkError>
    where
        I: IntoIterator<Item = J>,
        J: IntoIterator<Item = &'a str>,
    {
        let mut out = BTreeSet::new();
        for ext in extensions {
            let mut e = Extension::new();
            for n in ext {
                e.insert(ArgumentId::new(n)?);
            }
            out.insert(e);
        }
        Ok(ExtensionSet {
            semantics,
            extensions: out,
        })
    }

    pub fn semantics(&self) -> SemanticsKind {
        self.semantics
    }

    pub fn extensions(&self) -> &BTreeSet<Extension> {
        &self.extensions
    }

    pub fn iter(&self) -> impl Iterator<Item = &Extension> {
        self.extensions.iter()
    }

    pub fn len(&self) -> usize {
        self.extensions.len()
    }

    /// No extension at all.
    pub fn is_empty(&self) -> bool {
        self.extensions.is_empty()
    }

    /// Exactly one extension, and it is empty.
    pub fn is_single_empty(&self) -> bool {
        self.extensions.len() == 1 && self.extensions.iter().all(BTreeSet::is_empty)
    }

    /// Either no extension or only the empty one: nothing can be accepted.
    pub fn is_degenerate(&self) -> bool {
        self.is_empty() || self.is_single_empty()
    }

    pub fn union(&self) -> Extension {
        self.extensions.iter().flatten().cloned().collect()
    }

    /// Intersection of all extensions; empty when there is no extension.
    pub fn intersection(&self) -> Extension {
        let mut it = self.extensions.iter();
        let Some(first) = it.next() else {
            return Extension::new();
        };
        let mut acc = first.clone();
        for e in it {
            acc.retain(|a| e.contains(a));
        }
        acc
    }

    pub fn credulously_accepts(&self, a: &str) -> bool {
        self.extensions.iter().any(|e| e.contains(a))
    }

    pub fn skeptically_accepts(&self, a: &str) -> bool {
        !self.extensions.is_empty() && self.extensions.iter().all(|e| e.contains(a))
    }

    /// Lifts index sets of `f` into named extensions.
    pub fn from_index_sets<'a, I>(semantics: SemanticsKind, f: &Framework, sets: I) -> Self
    where
        I: IntoIterator<Item = &'a ArgSet>,
    {
        ExtensionSet::new(semantics, sets.into_iter().map(|s| f.names_of(s)))
    }
}

impl fmt::Display for ExtensionSet {
    /// Renders as `[[a],[b,d]]`; no extension is `[]`, one empty extension `[[]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, ext) in self.extensions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_extension(f, ext)?;
        }
        f.write_str("]")
    }
}

pub fn write_extension(f: &mut impl fmt::Write, ext: &Extension) -> fmt::Result {
    f.write_str("[")?;
    for (i, a) in ext.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        f.write_str(a.as_str())?;
    }
    f.write_str("]")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArgumentStatus {
    SkepticallyAccepted,
    CredulouslyOnlyAccepted,
    Rejected,
}

impl fmt::Display for ArgumentStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArgumentStatus::SkepticallyAccepted => "skeptically-accepted",
            ArgumentStatus::CredulouslyOnlyAccepted => "credulously-accepted",
            ArgumentStatus::Rejected => "rejected",
        })
    }
}

/// The characteristic function: every argument all of whose attackers are
/// attacked by `s`.
pub fn characteristic<I, S>(f: &Framework, s: I) -> Result<Extension, FrameworkError>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let set = f.to_set(s)?;
    Ok(f.names_of(&characteristic_idx(f, &set)))
}

pub fn characteristic_idx(f: &Framework, s: &ArgSet) -> ArgSet {
    let mut out = f.empty_set();
    for a in 0..f.len() {
        if f.defends_idx(s, a) {
            out.insert(a);
        }
    }
    out
}

/// Least fixed point of the characteristic function, iterated from the empty
/// set. Stabilises after at most `|A|` rounds since the iterates only grow.
pub fn grounded_idx(f: &Framework) -> ArgSet {
    let mut current = f.empty_set();
    for _ in 0..=f.len() {
        let next = characteristic_idx(f, &current);
        if next == current {
            break;
        }
        current = next;
    }
    current
}

pub fn grounded(f: &Framework) -> ExtensionSet {
    ExtensionSet::new(SemanticsKind::Grounded, [f.names_of(&grounded_idx(f))])
}

pub fn is_admissible_idx(f: &Framework, s: &ArgSet) -> bool {
    f.is_conflict_free_idx(s) && s.ones().all(|a| f.defends_idx(s, a))
}

pub fn admissible_sets(f: &Framework) -> BTreeSet<Extension> {
    let search = Search::new(f, f.empty_set(), false);
    search.run().iter().map(|s| f.names_of(s)).collect()
}

/// Index sets of the preferred extensions, in no particular order.
pub fn preferred_idx(f: &Framework) -> Vec<ArgSet> {
    // Every preferred extension contains the grounded one, so the search
    // starts from it and only decides the remaining compatible arguments.
    let search = Search::new(f, grounded_idx(f), true);
    let candidates = search.run();
    candidates
        .iter()
        .filter(|s| {
            !candidates
                .iter()
                .any(|t| t != *s && s.is_subset(t))
        })
        .cloned()
        .collect()
}

pub fn preferred(f: &Framework) -> ExtensionSet {
    ExtensionSet::from_index_sets(SemanticsKind::Preferred, f, &preferred_idx(f))
}

pub fn stable_idx(f: &Framework) -> Vec<ArgSet> {
    let mut out = Vec::new();
    let mut inside = f.empty_set();
    let mut outside = f.empty_set();
    stable_search(f, 0, &mut inside, &mut outside, &mut out);
    out
}

pub fn stable(f: &Framework) -> ExtensionSet {
    ExtensionSet::from_index_sets(SemanticsKind::Stable, f, &stable_idx(f))
}

pub fn extensions(f: &Framework, k: SemanticsKind) -> ExtensionSet {
    match k {
        SemanticsKind::Grounded => grounded(f),
        SemanticsKind::Preferred => preferred(f),
        SemanticsKind::Stable => stable(f),
    }
}

pub fn status(f: &Framework, a: &str, k: SemanticsKind) -> Result<ArgumentStatus, FrameworkError> {
    f.index_of(a)?;
    Ok(status_in(&extensions(f, k), a))
}

/// Status of `a` with respect to an already computed extension set.
pub fn status_in(exts: &ExtensionSet, a: &str) -> ArgumentStatus {
    if exts.skeptically_accepts(a) {
        ArgumentStatus::SkepticallyAccepted
    } else if exts.credulously_accepts(a) {
        ArgumentStatus::CredulouslyOnlyAccepted
    } else {
        ArgumentStatus::Rejected
    }
}

/// Depth-first search for admissible sets: arguments are decided in index
/// order, each either joining the set (when conflict-free with it) or not.
/// A branch dies as soon as some member has an attacker that neither the set
/// nor any still-undecided compatible argument can attack.
struct Search<'a> {
    f: &'a Framework,
    start: ArgSet,
    order: Vec<usize>,
    maximal_only: bool,
}

impl<'a> Search<'a> {
    fn new(f: &'a Framework, start: ArgSet, maximal_only: bool) -> Self {
        let order = (0..f.len())
            .filter(|&v| !start.contains(v) && compatible(f, &start, v))
            .collect();
        Search {
            f,
            start,
            order,
            maximal_only,
        }
    }

    fn run(&self) -> Vec<ArgSet> {
        let mut out = Vec::new();
        let mut inside = self.start.clone();
        if self.viable(&inside, 0) {
            self.descend(0, &mut inside, &mut out);
        }
        out
    }

    fn descend(&self, pos: usize, inside: &mut ArgSet, out: &mut Vec<ArgSet>) {
        if pos == self.order.len() {
            if is_admissible_idx(self.f, inside) && (!self.maximal_only || self.locally_maximal(inside)) {
                out.push(inside.clone());
            }
            return;
        }
        let v = self.order[pos];
        if compatible(self.f, inside, v) {
            inside.insert(v);
            if self.viable(inside, pos + 1) {
                self.descend(pos + 1, inside, out);
            }
            inside.set(v, false);
        }
        if self.viable(inside, pos + 1) {
            self.descend(pos + 1, inside, out);
        }
    }

    /// Every attacker of a member can still be counter-attacked.
    fn viable(&self, inside: &ArgSet, pos: usize) -> bool {
        let f = self.f;
        inside.ones().all(|a| {
            f.attackers_of(a).iter().all(|&b| {
                f.set_attacks_idx(inside, b)
                    || self.order[pos..]
                        .iter()
                        .any(|&c| f.attacks_idx(c, b) && compatible(f, inside, c))
            })
        })
    }

    fn locally_maximal(&self, inside: &ArgSet) -> bool {
        let mut grown = inside.clone();
        (0..self.f.len()).filter(|&x| !inside.contains(x)).all(|x| {
            grown.insert(x);
            let extendable = is_admissible_idx(self.f, &grown);
            grown.set(x, false);
            !extendable
        })
    }
}

/// `v` can join `inside` without creating a conflict.
fn compatible(f: &Framework, inside: &ArgSet, v: usize) -> bool {
    !f.attacks_idx(v, v) && !f.set_attacks_idx(inside, v) && !f.arg_attacks_set_idx(v, inside)
}

fn stable_search(
    f: &Framework,
    v: usize,
    inside: &mut ArgSet,
    outside: &mut ArgSet,
    out: &mut Vec<ArgSet>,
) {
    // Every argument placed outside must end up attacked, either by the set
    // or by a later argument that could still join it.
    let can_be_covered = |inside: &ArgSet, outside: &ArgSet, next: usize| {
        outside.ones().all(|x| {
            f.set_attacks_idx(inside, x)
                || f
                    .attackers_of(x)
                    .iter()
                    .any(|&c| c >= next && compatible(f, inside, c))
        })
    };
    if v == f.len() {
        if f.is_conflict_free_idx(inside) && outside.ones().all(|x| f.set_attacks_idx(inside, x)) {
            out.push(inside.clone());
        }
        return;
    }
    if compatible(f, inside, v) {
        inside.insert(v);
        if can_be_covered(inside, outside, v + 1) {
            stable_search(f, v + 1, inside, outside, out);
        }
        inside.set(v, false);
    }
    outside.insert(v);
    if can_be_covered(inside, outside, v + 1) {
        stable_search(f, v + 1, inside, outside, out);
    }
    outside.set(v, false);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::fixtures::{reference_framework, three_cycle};

    fn exts(k: SemanticsKind, sets: &[&[&str]]) -> ExtensionSet {
        ExtensionSet::from_names(k, sets.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn ext(names: &[&str]) -> Extension {
        names.iter().map(|n| ArgumentId::new(*n).unwrap()).collect()
    }

    const NONE: [&str; 0] = [];

    #[test]
    fn characteristic_function() {
        let f = reference_framework();
        assert!(characteristic(&f, NONE).unwrap().is_empty());
        assert_eq!(characteristic(&f, ["B"]).unwrap(), ext(&["B", "D"]));
        let free = Framework::new(["A", "B"], [("A", "B"); 0]).unwrap();
        assert_eq!(characteristic(&free, ["A"]).unwrap(), ext(&["A", "B"]));
        assert!(characteristic(&f, ["Q"]).is_err());
    }

    #[test]
    fn grounded_examples() {
        assert_eq!(grounded(&reference_framework()), exts(SemanticsKind::Grounded, &[&[]]));
        let f = Framework::new(["A", "B", "C"], [("A", "B")]).unwrap();
        assert_eq!(grounded(&f), exts(SemanticsKind::Grounded, &[&["A", "C"]]));
        assert_eq!(grounded(&three_cycle()), exts(SemanticsKind::Grounded, &[&[]]));
    }

    #[test]
    fn admissible_reference_framework() {
        let got = admissible_sets(&reference_framework());
        let want: BTreeSet<Extension> =
            [ext(&[]), ext(&["A"]), ext(&["B"]), ext(&["B", "D"])].into_iter().collect();
        assert_eq!(got, want);
        let single = Framework::new(["A"], [("A", "A"); 0]).unwrap();
        assert_eq!(admissible_sets(&single), [ext(&[]), ext(&["A"])].into_iter().collect());
    }

    #[test]
    fn preferred_examples() {
        assert_eq!(
            preferred(&reference_framework()),
            exts(SemanticsKind::Preferred, &[&["A"], &["B", "D"]])
        );
        let f = Framework::new(
            ["A", "B", "C", "D"],
            [("A", "B"), ("B", "A"), ("B", "C"), ("D", "C")],
        )
        .unwrap();
        assert_eq!(
            preferred(&f),
            exts(SemanticsKind::Preferred, &[&["A", "D"], &["B", "D"]])
        );
    }

    #[test]
    fn stable_examples() {
        assert_eq!(stable(&reference_framework()), exts(SemanticsKind::Stable, &[&["B", "D"]]));
        assert!(stable(&three_cycle()).is_empty());
        let free = Framework::new(["A", "B"], [("A", "B"); 0]).unwrap();
        assert_eq!(stable(&free), exts(SemanticsKind::Stable, &[&["A", "B"]]));
    }

    #[test]
    fn statuses() {
        let f = reference_framework();
        assert_eq!(
            status(&f, "D", SemanticsKind::Preferred).unwrap(),
            ArgumentStatus::CredulouslyOnlyAccepted
        );
        assert_eq!(status(&f, "C", SemanticsKind::Preferred).unwrap(), ArgumentStatus::Rejected);
        let g = Framework::new(["A", "B"], [("A", "B")]).unwrap();
        assert_eq!(
            status(&g, "A", SemanticsKind::Grounded).unwrap(),
            ArgumentStatus::SkepticallyAccepted
        );
        assert!(status(&g, "Z", SemanticsKind::Grounded).is_err());
        // no stable extension: everything is rejected
        assert_eq!(
            status(&three_cycle(), "A", SemanticsKind::Stable).unwrap(),
            ArgumentStatus::Rejected
        );
    }

    #[test]
    fn empty_versus_single_empty() {
        let none = exts(SemanticsKind::Stable, &[]);
        let one_empty = exts(SemanticsKind::Stable, &[&[]]);
        assert_ne!(none, one_empty);
        assert!(none.is_empty() && !none.is_single_empty());
        assert!(one_empty.is_single_empty() && !one_empty.is_empty());
        assert!(none.intersection().is_empty());
        assert_eq!(alloc::format!("{none}"), "[]");
        assert_eq!(alloc::format!("{one_empty}"), "[[]]");
    }

    #[test]
    fn display_is_canonical() {
        let e = exts(SemanticsKind::Preferred, &[&["d", "b"], &["a"]]);
        assert_eq!(alloc::format!("{e}"), "[[a],[b,d]]");
    }

    #[test]
    fn semantics_names_round_trip() {
        for k in SemanticsKind::ALL {
            assert_eq!(k.as_str().parse::<SemanticsKind>().unwrap(), k);
        }
        assert!("complete".parse::<SemanticsKind>().is_err());
    }
}
