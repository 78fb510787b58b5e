//! Sufficient (CS) and necessary (CN) conditions for the properties of an
//! argument addition under grounded and preferred semantics, and a verifier
//! that checks the known results about changes on concrete instances.
//!
//! Condition ids are stable strings (`"P9"`, `"C2"`, `"L1"`, ...) so reports
//! and violation lists can be diffed.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::change::{apply, Change, ChangeError};
use crate::framework::{ArgSet, ArgumentId, Framework};
use crate::properties::{
    classify, is_impossible_cell, matching_definitions, ClassificationReport, StructuralProperty,
};
use crate::semantics::{
    characteristic_idx, extensions, grounded, grounded_idx, is_admissible_idx, preferred, stable,
    Extension, ExtensionSet, SemanticsKind,
};

pub type ConditionId = &'static str;

/// A property a condition can guarantee or exclude.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Structural(StructuralProperty),
    Monotony,
    SkepticalMonotony,
    PriorityToRecency,
    PartialMonotony(ArgumentId),
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Structural(p) => write!(f, "{p}"),
            Property::Monotony => f.write_str("monotony"),
            Property::SkepticalMonotony => f.write_str("skeptical-monotony"),
            Property::PriorityToRecency => f.write_str("priority-to-recency"),
            Property::PartialMonotony(x) => write!(f, "partial-monotony({x})"),
        }
    }
}

impl From<StructuralProperty> for Property {
    fn from(p: StructuralProperty) -> Self {
        Property::Structural(p)
    }
}

impl Property {
    /// Whether the property holds for a computed classification.
    pub fn holds_in(&self, report: &ClassificationReport) -> bool {
        match self {
            Property::Structural(p) => report.structural == *p,
            Property::Monotony => report.monotony,
            Property::SkepticalMonotony => report.skeptical_monotony,
            Property::PriorityToRecency => report.priority_to_recency == Some(true),
            Property::PartialMonotony(x) => report.partial_monotony.get(x).copied().unwrap_or(true),
        }
    }
}

/// Which conditions fired for one argument addition.
///
/// A property is guaranteed when one of its sufficient conditions holds and
/// excluded when one of its necessary conditions fails. A necessary condition
/// that holds guarantees nothing; those are listed in `holding_cn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub semantics: SemanticsKind,
    pub fired_cs: BTreeSet<(Property, ConditionId)>,
    pub failed_cn: BTreeSet<(Property, ConditionId)>,
    pub holding_cn: BTreeSet<(Property, ConditionId)>,
    pub guaranteed: BTreeSet<Property>,
    pub excluded: BTreeSet<Property>,
}

impl ConditionReport {
    fn new(semantics: SemanticsKind) -> Self {
        ConditionReport {
            semantics,
            fired_cs: BTreeSet::new(),
            failed_cn: BTreeSet::new(),
            holding_cn: BTreeSet::new(),
            guaranteed: BTreeSet::new(),
            excluded: BTreeSet::new(),
        }
    }

    fn cs(&mut self, p: impl Into<Property>, id: ConditionId, holds: bool) {
        if holds {
            let p = p.into();
            self.guaranteed.insert(p.clone());
            self.fired_cs.insert((p, id));
        }
    }

    fn cn(&mut self, p: impl Into<Property>, id: ConditionId, holds: bool) {
        let p = p.into();
        if holds {
            self.holding_cn.insert((p, id));
        } else {
            self.excluded.insert(p.clone());
            self.failed_cn.insert((p, id));
        }
    }

    /// No property is both guaranteed and excluded.
    pub fn is_consistent(&self) -> bool {
        self.guaranteed.is_disjoint(&self.excluded)
    }
}

/// The before and after graphs of an argument addition.
struct Addition<'a> {
    before: &'a Framework,
    after: Framework,
    z: ArgumentId,
    zi: usize,
    z_attacked: bool,
    z_attacks_g: bool,
}

impl<'a> Addition<'a> {
    fn new(f: &'a Framework, c: &Change) -> Result<Self, ChangeError> {
        let Change::AddArgument { argument, .. } = c else {
            return Err(ChangeError::NotAnAddition(c.clone()));
        };
        let after = apply(f, c)?;
        let zi = after.index_of(argument.as_str())?;
        Ok(Addition {
            before: f,
            z_attacked: !after.attackers_of(zi).is_empty(),
            z_attacks_g: !after.targets_of(zi).is_empty(),
            after,
            z: argument.clone(),
            zi,
        })
    }

    /// An extension of G as an index set of G'.
    fn lift(&self, e: &Extension) -> ArgSet {
        self.after
            .to_set(e)
            .expect("arguments of G are arguments of G'")
    }

    fn z_attacks(&self, e: &Extension) -> bool {
        self.after.arg_attacks_set_idx(self.zi, &self.lift(e))
    }

    fn defends_z(&self, e: &Extension) -> bool {
        self.after.defends_idx(&self.lift(e), self.zi)
    }

    fn z_hits_every_unattacked(&self) -> bool {
        self.before.unattacked().iter().all(|u| {
            let ui = self.after.index_of(u.as_str()).expect("argument of G");
            self.after.attacks_idx(self.zi, ui)
        })
    }
}

/// Conditions for the grounded semantics.
pub fn evaluate_grounded_conditions(f: &Framework, c: &Change) -> Result<ConditionReport, ChangeError> {
    use StructuralProperty::*;
    let a = Addition::new(f, c)?;
    let e = f.names_of(&grounded_idx(f));
    let empty = e.is_empty();
    let z_attacks_e = a.z_attacks(&e);
    let e_defends_z = a.defends_z(&e);

    let mut r = ConditionReport::new(SemanticsKind::Grounded);
    let decisive = empty && !a.z_attacked;
    r.cs(Decisive, "P9", decisive);
    r.cn(Decisive, "P9", decisive);
    r.cn(Decisive, "C1", !a.z_attacked && a.z_attacks_g);
    r.cn(Restrictive, "P12", false);
    r.cn(Questioning, "P12", false);
    let destructive = !empty && a.z_hits_every_unattacked() && a.z_attacked;
    r.cs(Destructive, "P13", destructive);
    r.cn(Destructive, "P13", destructive);
    r.cs(Expansive, "P11", !empty && !z_attacks_e && e_defends_z);
    r.cs(Conservative, "P9", empty && a.z_attacked);
    r.cs(Conservative, "P11", !empty && !z_attacks_e && !e_defends_z);
    r.cn(Altering, "P10", !empty && z_attacks_e);

    for p in [Property::Monotony, Property::SkepticalMonotony] {
        r.cs(p.clone(), "D15", empty);
        r.cs(p, "P10", !empty && !z_attacks_e);
    }
    r.cs(Property::PriorityToRecency, "P8", !a.z_attacked);
    r.cs(
        Property::PriorityToRecency,
        "C2",
        !empty && !z_attacks_e && e_defends_z,
    );

    let reach = a.after.parity_reach(a.zi);
    for x in &e {
        let xi = a.after.index_of(x.as_str())?;
        r.cs(Property::PartialMonotony(x.clone()), "P7", !reach.odd.contains(xi));
    }
    Ok(r)
}

/// Conditions for the preferred semantics.
pub fn evaluate_preferred_conditions(f: &Framework, c: &Change) -> Result<ConditionReport, ChangeError> {
    use StructuralProperty::*;
    let a = Addition::new(f, c)?;
    let exts = preferred(f);
    let single_empty = exts.is_single_empty();
    let attacks_some = exts.iter().any(|e| a.z_attacks(e));
    let all_defend = exts.iter().all(|e| a.defends_z(e));
    let none_defend = exts.iter().all(|e| !a.defends_z(e));
    let even_g = f.has_even_cycle();
    let even_g2 = a.after.has_even_cycle();
    let odd_g2 = a.after.has_odd_cycle();
    let hits_unattacked = a.z_hits_every_unattacked();

    let mut r = ConditionReport::new(SemanticsKind::Preferred);
    r.cs(Decisive, "P16", single_empty && !a.z_attacked && !even_g);
    if single_empty {
        r.cn(Decisive, "P17", a.z_attacks_g);
    }
    r.cn(Restrictive, "P15", even_g && attacks_some);
    r.cn(Questioning, "P17+P18", even_g2 && a.z_attacks_g);
    r.cs(
        Destructive,
        "P21",
        !single_empty && a.z_attacked && !even_g2 && hits_unattacked,
    );
    r.cn(
        Destructive,
        "P1.5+P2.2",
        !single_empty && a.z_attacked && odd_g2 && hits_unattacked,
    );
    r.cs(Expansive, "P18", !single_empty && !a.z_attacks_g && all_defend);
    r.cs(Conservative, "P17", single_empty && !a.z_attacks_g);
    r.cs(Conservative, "P18", !single_empty && !a.z_attacks_g && none_defend);
    r.cn(Altering, "P15", !single_empty && attacks_some);

    r.cs(Property::Monotony, "P19", !attacks_some);
    if !attacks_some {
        for x in f.arguments() {
            r.cs(Property::PartialMonotony(x.clone()), "P19", true);
        }
    }
    r.cs(Property::PriorityToRecency, "P14", !a.z_attacked);
    r.cs(
        Property::PriorityToRecency,
        "C3",
        exts.iter().all(|e| !a.z_attacks(e) && a.defends_z(e)),
    );
    r.cs(
        Property::SkepticalMonotony,
        "P20",
        !f.has_controversial_argument() && !a.z_attacks(&exts.intersection()),
    );
    Ok(r)
}

/// `start` together with every iterate of the characteristic function of
/// `g` applied to it, stopping at the first repeated iterate.
fn union_of_iterates(g: &Framework, start: ArgSet) -> ArgSet {
    let mut acc = start.clone();
    let mut seen: Vec<ArgSet> = Vec::new();
    let mut cur = start;
    loop {
        let next = characteristic_idx(g, &cur);
        if seen.contains(&next) {
            return acc;
        }
        acc.union_with(&next);
        seen.push(next.clone());
        cur = next;
    }
}

/// The closed form of the grounded extension after an addition, when the
/// addition is of one of the two kinds that admit one:
///
/// * `E = {}` and `Z` unattacked: `{Z}` plus every iterate of F' on `{Z}`;
/// * `E != {}`, `Z` does not attack `E` and `E` defends `Z`: the same set
///   together with `E`.
///
/// Returns `None` otherwise.
pub fn grounded_closed_forms(f: &Framework, c: &Change) -> Result<Option<Extension>, ChangeError> {
    let a = Addition::new(f, c)?;
    let e = f.names_of(&grounded_idx(f));
    let mut z = a.after.empty_set();
    z.insert(a.zi);
    let base = if e.is_empty() && !a.z_attacked {
        a.after.empty_set()
    } else if !e.is_empty() && !a.z_attacks(&e) && a.defends_z(&e) {
        a.lift(&e)
    } else {
        return Ok(None);
    };
    let mut out = union_of_iterates(&a.after, z);
    out.union_with(&base);
    Ok(Some(a.after.names_of(&out)))
}

/// A result about changes that failed on a concrete instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub proposition: String,
    pub framework: Framework,
    pub change: Option<Change>,
    pub semantics: SemanticsKind,
    pub expected: String,
    pub observed: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} under {}: expected {}, observed {}",
            self.proposition, self.semantics, self.expected, self.observed
        )?;
        if let Some(c) = &self.change {
            write!(f, " (change {c:?})")?;
        }
        write!(f, " on {:?}", self.framework)
    }
}

struct Collector<'a> {
    framework: &'a Framework,
    change: Option<&'a Change>,
    semantics: SemanticsKind,
    out: Vec<Violation>,
}

impl Collector<'_> {
    fn check(&mut self, id: &str, ok: bool, expected: impl fmt::Display, observed: impl fmt::Display) {
        if !ok {
            self.out.push(Violation {
                proposition: id.to_string(),
                framework: self.framework.clone(),
                change: self.change.cloned(),
                semantics: self.semantics,
                expected: expected.to_string(),
                observed: observed.to_string(),
            });
        }
    }
}

/// Applies `c` and checks every applicable result about the change under
/// `k`. An empty list means everything held.
pub fn verify_propositions(
    f: &Framework,
    c: &Change,
    k: SemanticsKind,
) -> Result<Vec<Violation>, ChangeError> {
    use StructuralProperty::*;
    let g = apply(f, c)?;
    let before = extensions(f, k);
    let after = extensions(&g, k);
    let report = classify(&before, &after, f.arguments(), c.added_argument())
        .expect("same semantics on both sides");
    let mut v = Collector { framework: f, change: Some(c), semantics: k, out: Vec::new() };
    let transition = || format!("{before} -> {after}");

    let matches = matching_definitions(&before, &after);
    v.check("EXCL", matches.len() <= 1, "at most one structural label", format!("{matches:?} for {}", transition()));
    v.check("T2", !is_impossible_cell(&before, &after), "a possible transition", transition());

    let s = report.structural;
    let (mono, skep) = (report.monotony, report.skeptical_monotony);
    v.check("P3.1", s != Conservative || (mono && skep), "monotony and skeptical monotony", transition());
    v.check("P3.2", s != Expansive || (mono && skep), "monotony and skeptical monotony", transition());
    v.check("P3.3", !(s == Decisive && mono) || skep, "skeptical monotony", transition());
    if k == SemanticsKind::Grounded {
        let listed = matches!(s, Decisive | Expansive | Conservative);
        v.check("P3.4", mono == listed, format!("monotony = {listed}"), format!("monotony = {mono} for {s}"));
        v.check("P3.4", mono == skep, "skeptical monotony = monotony", transition());
    }
    v.check("P4", !matches!(s, Destructive | Altering | Restrictive) || !mono, "no monotony", format!("{s}: {}", transition()));
    v.check("D15", !mono || report.credulous_monotony, "credulous monotony", transition());
    v.check(
        "D15",
        !mono || report.partial_monotony.values().all(|&b| b),
        "partial monotony for every argument",
        transition(),
    );

    if let Change::AddArgument { argument: z, .. } = c {
        let ptr = report.priority_to_recency == Some(true);
        v.check("P5", !matches!(s, Conservative | Destructive) || !ptr, "no priority to recency", format!("{s}: {}", transition()));
        v.check("P6", s != Expansive || ptr, "priority to recency", transition());
        check_lemma_one(&mut v, f, &g, z);
        match k {
            SemanticsKind::Grounded => check_grounded(&mut v, f, c, &before, &after, &report)?,
            SemanticsKind::Preferred => check_preferred(&mut v, f, c, &g, &before, &after, &report, z)?,
            SemanticsKind::Stable => {}
        }
    }
    Ok(v.out)
}

fn check_lemma_one(v: &mut Collector<'_>, f: &Framework, g: &Framework, z: &ArgumentId) {
    let zi = g.index_of(z.as_str()).expect("added argument");
    if g.attackers_of(zi).is_empty() || g.targets_of(zi).is_empty() {
        let (old, new) = (f.simple_cycles(), g.simple_cycles());
        v.check("L1", old == new, format!("{} cycles", old.len()), format!("{} cycles", new.len()));
    }
}

fn check_report(v: &mut Collector<'_>, r: &ConditionReport, report: &ClassificationReport) {
    v.check("CR", r.is_consistent(), "guaranteed and excluded disjoint", format!("{:?}", r.guaranteed.intersection(&r.excluded).collect::<Vec<_>>()));
    for (p, id) in &r.fired_cs {
        v.check(id, p.holds_in(report), format!("{p}"), format!("{report:?}"));
    }
    for (p, id) in &r.failed_cn {
        v.check(id, !p.holds_in(report), format!("not {p}"), format!("{report:?}"));
    }
}

fn check_grounded(
    v: &mut Collector<'_>,
    f: &Framework,
    c: &Change,
    before: &ExtensionSet,
    after: &ExtensionSet,
    report: &ClassificationReport,
) -> Result<(), ChangeError> {
    let r = evaluate_grounded_conditions(f, c)?;
    check_report(v, &r, report);
    let a = Addition::new(f, c)?;
    let e = before.iter().next().expect("one grounded extension");
    let e2 = after.iter().next().expect("one grounded extension");
    if e.is_empty() {
        v.check("P9", e2.is_empty() == a.z_attacked, format!("E' empty iff Z attacked ({})", a.z_attacked), format!("{after}"));
    }
    let s = report.structural;
    v.check(
        "P12",
        !matches!(s, StructuralProperty::Questioning | StructuralProperty::Restrictive),
        "neither questioning nor restrictive",
        s,
    );
    if s == StructuralProperty::Decisive {
        v.check("C1", !a.z_attacked && a.z_attacks_g, "Z unattacked and attacking G", format!("{c:?}"));
    }
    if let Some(closed) = grounded_closed_forms(f, c)? {
        let id = if e.is_empty() { "P9" } else { "P11" };
        v.check(id, &closed == e2, ExtensionSet::new(SemanticsKind::Grounded, [closed.clone()]), after);
        if !e.is_empty() && !a.z_attacks_g {
            let mut plus = e.clone();
            plus.insert(a.z.clone());
            v.check("P11", &plus == e2, ExtensionSet::new(SemanticsKind::Grounded, [plus.clone()]), after);
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn check_preferred(
    v: &mut Collector<'_>,
    f: &Framework,
    c: &Change,
    g: &Framework,
    before: &ExtensionSet,
    after: &ExtensionSet,
    report: &ClassificationReport,
    z: &ArgumentId,
) -> Result<(), ChangeError> {
    let r = evaluate_preferred_conditions(f, c)?;
    check_report(v, &r, report);
    let a = Addition::new(f, c)?;

    for e in before.iter() {
        if a.z_attacks(e) {
            continue;
        }
        let lifted = a.lift(e);
        v.check("P15", is_admissible_idx(g, &lifted), "E_i admissible in G'", fmt_ext(e));
        if a.defends_z(e) {
            let mut with_z = lifted;
            with_z.insert(a.zi);
            v.check("P15", is_admissible_idx(g, &with_z), "E_i + Z admissible in G'", fmt_ext(e));
        }
    }
    if before.is_single_empty() && !a.z_attacked && !f.has_even_cycle() {
        v.check("P16", after.len() == 1 && after.skeptically_accepts(z.as_str()), "a single extension containing Z", after);
    }
    if before.is_single_empty() && !a.z_attacks_g {
        v.check("P17", after.is_single_empty(), "[[]]", after);
    }
    if !before.is_single_empty() && !a.z_attacks_g {
        for e in before.iter() {
            let mut want = e.clone();
            if a.defends_z(e) {
                want.insert(z.clone());
            }
            v.check("P18", after.extensions().contains(&want), format!("{} in E'", fmt_ext(&want)), after);
        }
        v.check("P18", before.len() == after.len(), format!("{} extensions", before.len()), after.len());
    }
    for e2 in after.iter() {
        if !e2.contains(z) {
            let set = f.to_set(e2)?;
            v.check("L2", is_admissible_idx(f, &set), "admissible in G", fmt_ext(e2));
        }
        if !a.z_attacks_g && !e2.is_empty() {
            let set = f.to_set(e2.iter().filter(|x| *x != z))?;
            v.check("L3", is_admissible_idx(f, &set), "admissible in G after dropping Z", fmt_ext(e2));
        }
    }
    Ok(())
}

fn fmt_ext(e: &Extension) -> String {
    let mut s = String::new();
    crate::semantics::write_extension(&mut s, e).expect("writing to a string");
    s
}

/// Checks the general results about extensions of a single framework: how
/// admissible sets, grounded, preferred and stable extensions relate, and
/// what the presence or absence of cycles implies.
pub fn verify_semantics_invariants(f: &Framework) -> Vec<Violation> {
    let gr = grounded(f);
    let pr = preferred(f);
    let st = stable(f);
    let mut v = Collector { framework: f, change: None, semantics: SemanticsKind::Preferred, out: Vec::new() };

    v.semantics = SemanticsKind::Grounded;
    v.check("P1.1", gr.len() == 1, "one grounded extension", gr.len());
    v.semantics = SemanticsKind::Preferred;
    v.check("P1.1", !pr.is_empty(), "at least one preferred extension", &pr);
    for kind_set in [&gr, &pr, &st] {
        for e in kind_set.iter() {
            let ok = f.is_conflict_free(e).unwrap_or(false);
            v.semantics = kind_set.semantics();
            v.check("D4", ok, "conflict-free extension", fmt_ext(e));
        }
    }
    v.semantics = SemanticsKind::Preferred;
    for adm in crate::semantics::admissible_sets(f) {
        let ok = pr.iter().any(|p| adm.is_subset(p));
        v.check("P1.2", ok, "admissible set inside a preferred extension", fmt_ext(&adm));
    }
    v.semantics = SemanticsKind::Stable;
    v.check("P1.3", st.extensions().is_subset(pr.extensions()), format!("subset of {pr}"), &st);
    let g = gr.iter().next().cloned().unwrap_or_default();
    v.semantics = SemanticsKind::Preferred;
    v.check("P1.4", pr.iter().all(|p| g.is_subset(p)), format!("{gr} inside each preferred"), &pr);
    let unattacked = f.unattacked();
    let in_all = |s: &ExtensionSet| s.iter().all(|e| unattacked.is_subset(e));
    v.semantics = SemanticsKind::Grounded;
    v.check("P1.5", unattacked.is_subset(&g), fmt_ext(&unattacked), &gr);
    v.semantics = SemanticsKind::Preferred;
    v.check("P1.5", in_all(&pr), fmt_ext(&unattacked), &pr);
    v.semantics = SemanticsKind::Stable;
    v.check("P1.5", in_all(&st), fmt_ext(&unattacked), &st);

    v.semantics = SemanticsKind::Preferred;
    if !f.has_cycle() {
        let want = ExtensionSet::new(SemanticsKind::Preferred, [g.clone()]);
        v.check("P2.1", pr.extensions() == want.extensions(), &want, &pr);
        v.check("P2.1", st.extensions() == want.extensions(), &want, &st);
    }
    v.check("P2.2", !pr.is_single_empty() || f.has_odd_cycle(), "an odd cycle", "none");
    v.semantics = SemanticsKind::Stable;
    v.check("P2.3", !st.is_empty() || f.has_odd_cycle(), "an odd cycle", "none");
    if !f.has_odd_cycle() {
        v.check("P2.4", st.extensions() == pr.extensions(), &pr, &st);
    }
    v.semantics = SemanticsKind::Preferred;
    if !f.has_even_cycle() {
        v.check("P2.5", pr.len() == 1, "one preferred extension", &pr);
    }
    v.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::fixtures::*;
    use StructuralProperty::*;

    fn add(z: &str, pairs: &[(&str, &str)]) -> Change {
        Change::add_argument(z, pairs.iter().copied()).unwrap()
    }

    fn fw(args: &[&str], atts: &[(&str, &str)]) -> Framework {
        Framework::new(args.iter().copied(), atts.iter().copied()).unwrap()
    }

    fn names(ns: &[&str]) -> Extension {
        ns.iter().map(|n| ArgumentId::new(*n).unwrap()).collect()
    }

    #[test]
    fn grounded_decisive_on_three_cycle() {
        let f = three_cycle();
        let c = add("Z", &[("Z", "A")]);
        let r = evaluate_grounded_conditions(&f, &c).unwrap();
        assert!(r.guaranteed.contains(&Decisive.into()));
        assert!(r.guaranteed.contains(&Property::PriorityToRecency));
        assert!(r.fired_cs.contains(&(Decisive.into(), "P9")));
        assert!(r.is_consistent());
        assert_eq!(grounded_closed_forms(&f, &c).unwrap(), Some(names(&["B", "Z"])));
    }

    #[test]
    fn grounded_conservative_and_expansive() {
        let f = fw(&["A", "B"], &[("A", "B")]);
        let r = evaluate_grounded_conditions(&f, &add("Z", &[("A", "Z")])).unwrap();
        assert!(r.fired_cs.contains(&(Conservative.into(), "P11")));
        assert!(!r.guaranteed.contains(&Property::PriorityToRecency));

        let c = add("Z", &[("Z", "B")]);
        let r = evaluate_grounded_conditions(&f, &c).unwrap();
        assert!(r.fired_cs.contains(&(Expansive.into(), "P11")));
        assert_eq!(grounded_closed_forms(&f, &c).unwrap(), Some(names(&["A", "Z"])));
        assert!(r.excluded.contains(&Restrictive.into()));
        assert!(r.excluded.contains(&Questioning.into()));
    }

    #[test]
    fn closed_form_absent_outside_hypotheses() {
        let f = fw(&["A", "B"], &[("A", "B")]);
        assert_eq!(grounded_closed_forms(&f, &add("Z", &[("A", "Z")])).unwrap(), None);
        assert_eq!(grounded_closed_forms(&f, &add("Z", &[("Z", "A")])).unwrap(), None);
    }

    #[test]
    fn preferred_decisive_on_three_cycle() {
        let r = evaluate_preferred_conditions(&three_cycle(), &add("Z", &[("Z", "A")])).unwrap();
        assert!(r.fired_cs.contains(&(Decisive.into(), "P16")));
        assert!(r.holding_cn.contains(&(Decisive.into(), "P17")));
    }

    #[test]
    fn preferred_even_cycle_blocks_decisive_cs() {
        let f = fw(&["A", "B"], &[("A", "B"), ("B", "A")]);
        let r = evaluate_preferred_conditions(&f, &add("Z", &[("A", "Z")])).unwrap();
        assert!(!r.guaranteed.contains(&Decisive.into()));
        assert!(r.guaranteed.contains(&Property::Monotony));
        assert!(r.excluded.contains(&Questioning.into()));
        assert!(r.failed_cn.contains(&(Questioning.into(), "P17+P18")));
    }

    #[test]
    fn controversial_framework_skips_skeptical_cs() {
        let r = evaluate_preferred_conditions(&reference_framework(), &add("Z", &[("A", "Z")])).unwrap();
        assert!(r.fired_cs.iter().all(|(_, id)| *id != "P20"));
    }

    #[test]
    fn wrong_change_kind_is_rejected() {
        let c = Change::add_attack("A", "C").unwrap();
        assert!(matches!(
            evaluate_grounded_conditions(&three_cycle(), &c),
            Err(ChangeError::NotAnAddition(_))
        ));
        assert!(matches!(
            evaluate_preferred_conditions(&three_cycle(), &c),
            Err(ChangeError::NotAnAddition(_))
        ));
        assert!(grounded_closed_forms(&three_cycle(), &c).is_err());
    }

    #[test]
    fn verify_is_clean_on_small_cases() {
        let cases = [
            (three_cycle(), Change::add_attack("A", "C").unwrap()),
            (fw(&["A", "B", "C"], &[("A", "B"), ("B", "C")]), Change::add_attack("C", "A").unwrap()),
            (fw(&["A", "B", "C"], &[("A", "B"), ("B", "C")]), Change::remove_attack("A", "B").unwrap()),
            (reference_framework(), add("Z", &[("Z", "B"), ("C", "Z")])),
            (fw(&["A"], &[]), add("Z", &[("Z", "A")])),
            (fw(&["A", "B"], &[]), Change::remove_argument("A").unwrap()),
        ];
        for (f, c) in cases {
            for k in SemanticsKind::ALL {
                let v = verify_propositions(&f, &c, k).unwrap();
                assert!(v.is_empty(), "{v:?}");
            }
        }
    }

    #[test]
    fn semantics_invariants_hold_on_fixtures() {
        for f in [reference_framework(), three_cycle(), fw(&["A", "B"], &[("A", "B")])] {
            assert!(verify_semantics_invariants(&f).is_empty());
        }
    }

    #[test]
    fn violations_render() {
        let v = Violation {
            proposition: "P9".into(),
            framework: three_cycle(),
            change: None,
            semantics: SemanticsKind::Grounded,
            expected: "x".into(),
            observed: "y".into(),
        };
        assert!(v.to_string().starts_with("P9 under grounded: expected x, observed y"));
    }
}
