//! Brute-force extension enumeration and seeded instance generators.
//!
//! The enumeration transcribes the definitions directly over bit masks and
//! shares no code with [`crate::semantics`], so the two can be compared.
//! Generators use ChaCha8 seeded through `seed_from_u64`, which is portable
//! and fully specified, so a seed reproduces the same instance everywhere.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::change::{Change, ChangeKind};
use crate::framework::{ArgumentId, Framework};
use crate::semantics::{Extension, ExtensionSet, SemanticsKind};

/// Largest framework the brute-force enumeration accepts.
pub const MAX_ORACLE_ARGUMENTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("framework has {0} arguments; brute force is limited to {MAX_ORACLE_ARGUMENTS}")]
    TooLarge(usize),
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("no applicable {0} change")]
    NoApplicableChange(&'static str),
}

struct Masks {
    n: usize,
    /// `attackers[a]` is the mask of arguments attacking `a`.
    attackers: Vec<u32>,
}

impl Masks {
    fn new(f: &Framework) -> Result<Self, OracleError> {
        let n = f.len();
        if n > MAX_ORACLE_ARGUMENTS {
            return Err(OracleError::TooLarge(n));
        }
        let mut attackers = alloc::vec![0u32; n];
        for (s, t) in f.attack_indices() {
            attackers[t] |= 1 << s;
        }
        Ok(Masks { n, attackers })
    }

    fn attacks(&self, s: u32, a: usize) -> bool {
        self.attackers[a] & s != 0
    }

    fn conflict_free(&self, s: u32) -> bool {
        (0..self.n).all(|a| s & (1 << a) == 0 || !self.attacks(s, a))
    }

    fn defends(&self, s: u32, a: usize) -> bool {
        (0..self.n)
            .filter(|b| self.attackers[a] & (1 << b) != 0)
            .all(|b| self.attacks(s, b))
    }

    fn defended(&self, s: u32) -> u32 {
        (0..self.n)
            .filter(|&a| self.defends(s, a))
            .fold(0, |m, a| m | (1 << a))
    }

    fn admissible(&self, s: u32) -> bool {
        self.conflict_free(s) && self.defended(s) & s == s
    }

    fn stable(&self, s: u32) -> bool {
        self.conflict_free(s) && (0..self.n).all(|a| s & (1 << a) != 0 || self.attacks(s, a))
    }
}

/// All subsets of `0..n` by size, then lexicographically by sorted members.
fn subsets(n: usize) -> Vec<u32> {
    // Within one size, descending numeric order over reversed bit positions
    // is lexicographic order over ascending member lists.
    let rev = |m: u32| (0..n).filter(|b| m & (1 << b) != 0).fold(0u32, |r, b| r | 1 << (n - 1 - b));
    let mut out = Vec::with_capacity(1 << n);
    for k in 0..=n {
        let mut level: Vec<u32> = (0u32..(1u32 << n))
            .filter(|m| m.count_ones() as usize == k)
            .map(rev)
            .collect();
        level.sort_unstable_by(|a, b| b.cmp(a));
        out.extend(level.into_iter().map(rev));
    }
    out
}

fn to_extension(f: &Framework, m: u32) -> Extension {
    (0..f.len())
        .filter(|b| m & (1 << b) != 0)
        .map(|b| f.name(b).clone())
        .collect()
}

/// Admissible sets by exhaustive enumeration.
pub fn brute_force_admissible(f: &Framework) -> Result<BTreeSet<Extension>, OracleError> {
    let m = Masks::new(f)?;
    Ok(subsets(m.n)
        .into_iter()
        .filter(|&s| m.admissible(s))
        .map(|s| to_extension(f, s))
        .collect())
}

/// Extensions by exhaustive enumeration of all subsets.
pub fn brute_force_extensions(f: &Framework, k: SemanticsKind) -> Result<ExtensionSet, OracleError> {
    let m = Masks::new(f)?;
    let chosen: Vec<u32> = match k {
        SemanticsKind::Grounded => {
            let mut s = 0u32;
            loop {
                let next = m.defended(s);
                if next == s {
                    break alloc::vec![s];
                }
                s = next;
            }
        }
        SemanticsKind::Preferred => {
            let adm: Vec<u32> = subsets(m.n).into_iter().filter(|&s| m.admissible(s)).collect();
            adm.iter()
                .copied()
                .filter(|&s| !adm.iter().any(|&t| t != s && t & s == s))
                .collect()
        }
        SemanticsKind::Stable => subsets(m.n).into_iter().filter(|&s| m.stable(s)).collect(),
    };
    Ok(ExtensionSet::new(k, chosen.into_iter().map(|s| to_extension(f, s))))
}

/// Parameters of [`random_framework`]. Each ordered pair becomes an attack
/// with probability `attack_numerator / attack_denominator`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorConfig {
    pub argument_count: usize,
    pub attack_numerator: u32,
    pub attack_denominator: u32,
    pub allow_self_attacks: bool,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn new(argument_count: usize, attack_probability: (u32, u32), seed: u64) -> Self {
        GeneratorConfig {
            argument_count,
            attack_numerator: attack_probability.0,
            attack_denominator: attack_probability.1,
            allow_self_attacks: false,
            seed,
        }
    }
}

/// Name of the `i`-th generated argument.
pub fn generated_name(i: usize) -> String {
    format!("a{i}")
}

/// A framework on `a0 .. a{n-1}`, identical for identical configurations.
pub fn random_framework(cfg: &GeneratorConfig) -> Result<Framework, OracleError> {
    if cfg.argument_count == 0 {
        return Err(OracleError::InvalidConfig("argument_count must be positive"));
    }
    if cfg.attack_denominator == 0 || cfg.attack_numerator > cfg.attack_denominator {
        return Err(OracleError::InvalidConfig("attack probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let n = cfg.argument_count;
    let names: Vec<String> = (0..n).map(generated_name).collect();
    let mut attacks = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j && !cfg.allow_self_attacks {
                continue;
            }
            if rng.gen_ratio(cfg.attack_numerator, cfg.attack_denominator) {
                attacks.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    Ok(Framework::new(&names, attacks).expect("generated names are valid and distinct"))
}

/// `z`, or the first of `z1`, `z2`, ... not already in `f`.
pub fn fresh_name(f: &Framework) -> ArgumentId {
    let name = core::iter::once(String::from("z"))
        .chain((1..).map(|i| format!("z{i}")))
        .find(|n| !f.contains(n))
        .expect("an unused name exists");
    ArgumentId::new(name).expect("valid name")
}

fn kind_label(k: ChangeKind) -> &'static str {
    match k {
        ChangeKind::AddAttack => "add-attack",
        ChangeKind::RemoveAttack => "remove-attack",
        ChangeKind::AddArgument => "add-argument",
        ChangeKind::RemoveArgument => "remove-argument",
    }
}

fn applicable(f: &Framework, k: ChangeKind) -> bool {
    let n = f.len();
    match k {
        ChangeKind::AddAttack => (0..n).any(|s| (0..n).any(|t| s != t && !f.attacks_idx(s, t))),
        ChangeKind::RemoveAttack => f.attack_count() > 0,
        ChangeKind::AddArgument => true,
        ChangeKind::RemoveArgument => n >= 2,
    }
}

/// Samples a change applicable to `f`, uniformly among the applicable
/// changes of the requested kind (or of a uniformly chosen applicable kind).
///
/// Added attacks are never self-attacks. An added argument is named by
/// [`fresh_name`] and gets a uniformly chosen non-empty interaction set.
pub fn random_change(f: &Framework, kind: Option<ChangeKind>, seed: u64) -> Result<Change, OracleError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let kind = match kind {
        Some(k) if applicable(f, k) => k,
        Some(k) => return Err(OracleError::NoApplicableChange(kind_label(k))),
        None => {
            let kinds: Vec<ChangeKind> = ChangeKind::ALL.into_iter().filter(|&k| applicable(f, k)).collect();
            *kinds.choose(&mut rng).expect("argument addition is always applicable")
        }
    };
    let n = f.len();
    let name = |i: usize| f.name(i).as_str();
    let change = match kind {
        ChangeKind::AddAttack => {
            let free: Vec<(usize, usize)> = (0..n)
                .flat_map(|s| (0..n).map(move |t| (s, t)))
                .filter(|&(s, t)| s != t && !f.attacks_idx(s, t))
                .collect();
            let &(s, t) = free.choose(&mut rng).expect("checked applicable");
            Change::add_attack(name(s), name(t))
        }
        ChangeKind::RemoveAttack => {
            let existing: Vec<(usize, usize)> = f.attack_indices().collect();
            let &(s, t) = existing.choose(&mut rng).expect("checked applicable");
            Change::remove_attack(name(s), name(t))
        }
        ChangeKind::RemoveArgument => Change::remove_argument(name(rng.gen_range(0..n))),
        ChangeKind::AddArgument => {
            let z = fresh_name(f);
            let pairs: Vec<(&str, &str)> = (0..n)
                .flat_map(|i| [(z.as_str(), name(i)), (name(i), z.as_str())])
                .collect();
            loop {
                let chosen: Vec<(&str, &str)> = pairs.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
                if !chosen.is_empty() {
                    break Change::add_argument(z.as_str(), chosen);
                }
            }
        }
    };
    Ok(change.expect("sampled from valid names"))
}
