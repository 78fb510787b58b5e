//! Search for argument additions that give a change a wanted property.

use std::fmt;
use std::str::FromStr;

use argchange_core::properties::{classify, ClassificationReport, StructuralProperty};
use argchange_core::{apply, extensions, ArgumentId, Change, Framework, SemanticsKind};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Target {
    Structural(StructuralProperty),
    Monotony,
    CredulousMonotony,
    SkepticalMonotony,
    PriorityToRecency,
}

impl Target {
    pub fn holds_in(self, report: &ClassificationReport) -> bool {
        match self {
            Target::Structural(p) => report.structural == p,
            Target::Monotony => report.monotony,
            Target::CredulousMonotony => report.credulous_monotony,
            Target::SkepticalMonotony => report.skeptical_monotony,
            Target::PriorityToRecency => report.priority_to_recency == Some(true),
        }
    }

    pub fn all() -> Vec<Target> {
        let mut out: Vec<Target> = StructuralProperty::ALL.into_iter().map(Target::Structural).collect();
        out.extend([
            Target::Monotony,
            Target::CredulousMonotony,
            Target::SkepticalMonotony,
            Target::PriorityToRecency,
        ]);
        out
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Structural(p) => write!(f, "{p}"),
            Target::Monotony => f.write_str("monotony"),
            Target::CredulousMonotony => f.write_str("credulous-monotony"),
            Target::SkepticalMonotony => f.write_str("skeptical-monotony"),
            Target::PriorityToRecency => f.write_str("priority-to-recency"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WhatIfError {
    #[error("unknown target '{0}'")]
    UnknownTarget(String),
    #[error("argument '{0}' already exists; pick a fresh name")]
    NotFresh(String),
    #[error("invalid argument name '{0}'")]
    InvalidName(String),
}

impl FromStr for Target {
    type Err = WhatIfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Target::all()
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| WhatIfError::UnknownTarget(s.into()))
    }
}

/// Every addition of `z` with between 1 and `budget` interactions: by size,
/// then lexicographically over the sorted interaction lists.
pub fn candidates(f: &Framework, z: &str, budget: usize) -> Result<Vec<Change>, WhatIfError> {
    let zid = ArgumentId::new(z).map_err(|_| WhatIfError::InvalidName(z.into()))?;
    if f.contains(z) {
        return Err(WhatIfError::NotFresh(z.into()));
    }
    let mut pairs: Vec<(ArgumentId, ArgumentId)> = f
        .arguments()
        .iter()
        .flat_map(|x| [(zid.clone(), x.clone()), (x.clone(), zid.clone())])
        .collect();
    pairs.sort();
    let mut out = Vec::new();
    for size in 1..=budget.min(pairs.len()) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let chosen = idx.iter().map(|&i| {
                let (s, t) = &pairs[i];
                (s.as_str(), t.as_str())
            });
            out.push(Change::add_argument(z, chosen).expect("pairs involve z once"));
            // next combination in lexicographic order
            let Some(pos) = (0..size).rev().find(|&p| idx[p] < pairs.len() - size + p) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..size {
                idx[p] = idx[p - 1] + 1;
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhatIfResult {
    pub examined: usize,
    pub hits: Vec<Change>,
}

pub fn whatif(
    f: &Framework,
    z: &str,
    k: SemanticsKind,
    target: Target,
    budget: usize,
) -> Result<WhatIfResult, WhatIfError> {
    let all = candidates(f, z, budget)?;
    let before = extensions(f, k);
    let hits = all
        .iter()
        .filter(|c| {
            let after = extensions(&apply(f, c).expect("fresh addition applies"), k);
            let report = classify(&before, &after, f.arguments(), c.added_argument())
                .expect("same semantics");
            target.holds_in(&report)
        })
        .cloned()
        .collect();
    Ok(WhatIfResult { examined: all.len(), hits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::change_syntax::format_change;

    fn three_cycle() -> Framework {
        Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }

    #[test]
    fn candidate_order() {
        let f = Framework::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        let got: Vec<String> = candidates(&f, "z", 2).unwrap().iter().map(format_change).collect();
        assert_eq!(got, ["add-arg:z:a>z", "add-arg:z:z>a", "add-arg:z:a>z,z>a"]);
        assert_eq!(candidates(&three_cycle(), "z", 2).unwrap().len(), 6 + 15);
        assert_eq!(candidates(&three_cycle(), "z", 99).unwrap().len(), 63);
    }

    #[test]
    fn name_must_be_fresh() {
        assert_eq!(candidates(&three_cycle(), "a", 1), Err(WhatIfError::NotFresh("a".into())));
        assert_eq!(candidates(&three_cycle(), "z!", 1), Err(WhatIfError::InvalidName("z!".into())));
    }

    #[test]
    fn decisive_single_attacks_on_three_cycle() {
        let r = whatif(
            &three_cycle(),
            "z",
            SemanticsKind::Grounded,
            Target::Structural(StructuralProperty::Decisive),
            1,
        )
        .unwrap();
        let got: Vec<String> = r.hits.iter().map(format_change).collect();
        assert_eq!(got, ["add-arg:z:z>a", "add-arg:z:z>b", "add-arg:z:z>c"]);
        assert_eq!(r.examined, 6);
    }

    #[test]
    fn target_names_round_trip() {
        for t in Target::all() {
            assert_eq!(t.to_string().parse::<Target>().unwrap(), t);
        }
        assert!("sideways".parse::<Target>().is_err());
    }
}
