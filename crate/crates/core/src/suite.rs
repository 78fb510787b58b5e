//! Seeded randomized suites: engine against oracle, and the change results
//! over random (framework, change) instances.
//!
//! Instance `i` of a suite with base seed `s` is built entirely from
//! [`instance_seed`]`(s, i)`, so any failure reproduces from that one number.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::change::{Change, ChangeKind};
use crate::conditions::{grounded_closed_forms, verify_propositions, verify_semantics_invariants, Violation};
use crate::framework::Framework;
use crate::oracle::{brute_force_extensions, random_change, random_framework, GeneratorConfig};
use crate::properties::{classify_structural, StructuralProperty};
use crate::semantics::{extensions, grounded, ExtensionSet, SemanticsKind};
use crate::change::apply;

/// Attack probabilities used when none are given: 0.1, 0.3 and 0.6.
pub const DEFAULT_PROBABILITIES: [(u32, u32); 3] = [(1, 10), (3, 10), (6, 10)];

/// SplitMix64 step over `base + i`.
pub fn instance_seed(base: u64, i: u64) -> u64 {
    let mut z = base.wrapping_add(i.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub instances: usize,
    /// Frameworks get between 1 and this many arguments.
    pub max_arguments: usize,
    /// Instance `i` uses `probabilities[i % len]`.
    pub probabilities: Vec<(u32, u32)>,
    pub seed: u64,
}

impl SuiteConfig {
    pub fn new(instances: usize, max_arguments: usize, seed: u64) -> Self {
        SuiteConfig {
            instances,
            max_arguments,
            probabilities: DEFAULT_PROBABILITIES.to_vec(),
            seed,
        }
    }

    /// The framework of instance `i`, with the seed it was built from.
    pub fn framework(&self, i: usize) -> (u64, Framework) {
        let seed = instance_seed(self.seed, i as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=self.max_arguments.max(1));
        let p = self.probabilities[i % self.probabilities.len()];
        let f = random_framework(&GeneratorConfig::new(n, p, rng.gen())).expect("valid configuration");
        (seed, f)
    }
}

/// One disagreement between the engine and the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub seed: u64,
    pub framework: Framework,
    pub semantics: SemanticsKind,
    pub engine: ExtensionSet,
    pub oracle: ExtensionSet,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub frameworks: usize,
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Compares grounded, preferred and stable extensions with the oracle.
pub fn run_oracle_check(cfg: &SuiteConfig) -> OracleSummary {
    let mut out = OracleSummary::default();
    for i in 0..cfg.instances {
        let (seed, f) = cfg.framework(i);
        out.frameworks += 1;
        for k in SemanticsKind::ALL {
            let engine = extensions(&f, k);
            let oracle = brute_force_extensions(&f, k).expect("suite frameworks are within the oracle cap");
            out.comparisons += 1;
            if engine != oracle {
                out.mismatches.push(Mismatch { seed, framework: f.clone(), semantics: k, engine, oracle });
            }
        }
    }
    out
}

/// A violation together with the seed of the instance that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeededViolation {
    pub seed: u64,
    pub violation: Violation,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropositionSummary {
    pub instances: usize,
    pub checks: usize,
    /// How often each label occurred, per semantics.
    pub labels: BTreeMap<(SemanticsKind, StructuralProperty), usize>,
    /// Instances where a grounded closed form was defined and compared.
    pub closed_forms: usize,
    pub closed_form_mismatches: usize,
    pub violations: Vec<SeededViolation>,
}

/// Runs [`verify_propositions`] under all three semantics on random
/// changes, plus [`verify_semantics_invariants`] on each framework.
/// `kind` restricts the change kind; `None` samples any applicable kind.
pub fn run_proposition_suite(cfg: &SuiteConfig, kind: Option<ChangeKind>) -> PropositionSummary {
    let mut out = PropositionSummary::default();
    for i in 0..cfg.instances {
        let (seed, f) = cfg.framework(i);
        let change = match random_change(&f, kind, seed ^ 0x5A5A_5A5A) {
            Ok(c) => c,
            Err(_) => continue,
        };
        out.instances += 1;
        let push = |out: &mut PropositionSummary, vs: Vec<Violation>| {
            out.violations.extend(vs.into_iter().map(|violation| SeededViolation { seed, violation }));
        };
        push(&mut out, verify_semantics_invariants(&f));
        let g = apply(&f, &change).expect("sampled changes apply");
        for k in SemanticsKind::ALL {
            let label = classify_structural(&extensions(&f, k), &extensions(&g, k)).expect("same semantics");
            *out.labels.entry((k, label)).or_default() += 1;
            out.checks += 1;
            let vs = verify_propositions(&f, &change, k).expect("sampled changes apply");
            push(&mut out, vs);
        }
        if let Change::AddArgument { .. } = change {
            if let Some(closed) = grounded_closed_forms(&f, &change).expect("addition") {
                out.closed_forms += 1;
                if grounded(&g).iter().next() != Some(&closed) {
                    out.closed_form_mismatches += 1;
                }
            }
        }
    }
    out
}
