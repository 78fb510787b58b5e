//! Attack graphs: a finite set of named arguments and a binary attack relation,
//! together with the walk, cycle and controversiality analyses that the change
//! conditions are phrased in.
//!
//! Arguments are stored sorted by name, so an argument's index order is its
//! name order. Index-level sets ([`ArgSet`]) therefore iterate in canonical
//! name order as well.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::borrow::Borrow;
use core::fmt;
use core::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use thiserror::Error;

/// A set of arguments addressed by their index in a [`Framework`].
pub type ArgSet = FixedBitSet;

/// An attack `(source, target)` between two named arguments.
pub type Attack = (ArgumentId, ArgumentId);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("invalid argument name '{0}' (expected [a-zA-Z0-9_]+)")]
    InvalidName(String),
    #[error("a framework needs at least one argument")]
    NoArguments,
    #[error("duplicate argument '{0}'")]
    DuplicateArgument(ArgumentId),
    #[error("unknown argument '{0}'")]
    UnknownArgument(String),
}

/// Name of an argument: a non-empty token over `[a-zA-Z0-9_]`, compared
/// case-sensitively.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgumentId(String);

impl ArgumentId {
    pub fn new(name: impl Into<String>) -> Result<Self, FrameworkError> {
        let name = name.into();
        if is_valid_name(&name) {
            Ok(ArgumentId(name))
        } else {
            Err(FrameworkError::InvalidName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl AsRef<str> for ArgumentId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for ArgumentId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl core::str::FromStr for ArgumentId {
    type Err = FrameworkError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ArgumentId::new(s)
    }
}

/// An immutable argumentation framework `<A, R>`.
#[derive(Clone, PartialEq, Eq)]
pub struct Framework {
    names: Vec<ArgumentId>,
    index: BTreeMap<ArgumentId, usize>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Framework")
            .field("arguments", &self.names)
            .field("attacks", &self.attacks_named())
            .finish()
    }
}

impl Framework {
    /// Builds a framework. Repeated attacks collapse (the relation is a set);
    /// repeated argument names are rejected.
    pub fn new<I, J, S, T, U>(arguments: I, attacks: J) -> Result<Self, FrameworkError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
        J: IntoIterator<Item = (T, U)>,
        T: AsRef<str>,
        U: AsRef<str>,
    {
        let mut names = BTreeSet::new();
        for a in arguments {
            let id = ArgumentId::new(a.as_ref())?;
            if let Some(dup) = names.replace(id) {
                return Err(FrameworkError::DuplicateArgument(dup));
            }
        }
        if names.is_empty() {
            return Err(FrameworkError::NoArguments);
        }
        let names: Vec<ArgumentId> = names.into_iter().collect();
        let index: BTreeMap<ArgumentId, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let mut pairs = BTreeSet::new();
        for (s, t) in attacks {
            let lookup = |x: &str| {
                index
                    .get(x)
                    .copied()
                    .ok_or_else(|| FrameworkError::UnknownArgument(x.to_string()))
            };
            pairs.insert((lookup(s.as_ref())?, lookup(t.as_ref())?));
        }
        Ok(Self::from_parts(names, index, pairs))
    }

    fn from_parts(
        names: Vec<ArgumentId>,
        index: BTreeMap<ArgumentId, usize>,
        attacks: BTreeSet<(usize, usize)>,
    ) -> Self {
        let n = names.len();
        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        for &(s, t) in &attacks {
            targets[s].push(t);
            attackers[t].push(s);
        }
        Framework {
            names,
            index,
            attacks,
            attackers,
            targets,
        }
    }

    /// Number of arguments.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false: frameworks have at least one argument.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn arguments(&self) -> &[ArgumentId] {
        &self.names
    }

    pub fn argument_set(&self) -> BTreeSet<ArgumentId> {
        self.names.iter().cloned().collect()
    }

    pub fn attack_count(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_named(&self) -> BTreeSet<Attack> {
        self.attacks
            .iter()
            .map(|&(s, t)| (self.names[s].clone(), self.names[t].clone()))
            .collect()
    }

    pub fn attack_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.attacks.iter().copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }

    pub fn index_of(&self, name: &str) -> Result<usize, FrameworkError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| FrameworkError::UnknownArgument(name.to_string()))
    }

    pub fn name(&self, idx: usize) -> &ArgumentId {
        &self.names[idx]
    }

    pub fn has_attack(&self, source: &str, target: &str) -> Result<bool, FrameworkError> {
        let s = self.index_of(source)?;
        let t = self.index_of(target)?;
        Ok(self.attacks.contains(&(s, t)))
    }

    pub fn attacks_idx(&self, source: usize, target: usize) -> bool {
        self.attacks.contains(&(source, target))
    }

    pub fn attackers_of(&self, idx: usize) -> &[usize] {
        &self.attackers[idx]
    }

    pub fn targets_of(&self, idx: usize) -> &[usize] {
        &self.targets[idx]
    }

    /// An empty index set sized for this framework.
    pub fn empty_set(&self) -> ArgSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> ArgSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn to_set<I, S>(&self, names: I) -> Result<ArgSet, FrameworkError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut set = self.empty_set();
        for n in names {
            set.insert(self.index_of(n.as_ref())?);
        }
        Ok(set)
    }

    pub fn names_of(&self, set: &ArgSet) -> BTreeSet<ArgumentId> {
        set.ones().map(|i| self.names[i].clone()).collect()
    }

    /// Arguments attacking `a`.
    pub fn attackers(&self, a: &str) -> Result<BTreeSet<ArgumentId>, FrameworkError> {
        let i = self.index_of(a)?;
        Ok(self.attackers[i]
            .iter()
            .map(|&x| self.names[x].clone())
            .collect())
    }

    /// Whether some member of `s` attacks `a`.
    pub fn set_attacks<I, S>(&self, s: I, a: &str) -> Result<bool, FrameworkError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let set = self.to_set(s)?;
        let a = self.index_of(a)?;
        Ok(self.set_attacks_idx(&set, a))
    }

    /// Whether `a` attacks some member of `s`.
    pub fn arg_attacks_set<I, S>(&self, a: &str, s: I) -> Result<bool, FrameworkError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let a = self.index_of(a)?;
        let set = self.to_set(s)?;
        Ok(self.arg_attacks_set_idx(a, &set))
    }

    pub fn is_conflict_free<I, S>(&self, s: I) -> Result<bool, FrameworkError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let set = self.to_set(s)?;
        Ok(self.is_conflict_free_idx(&set))
    }

    pub fn set_attacks_idx(&self, s: &ArgSet, a: usize) -> bool {
        self.attackers[a].iter().any(|&x| s.contains(x))
    }

    pub fn arg_attacks_set_idx(&self, a: usize, s: &ArgSet) -> bool {
        self.targets[a].iter().any(|&x| s.contains(x))
    }

    pub fn is_conflict_free_idx(&self, s: &ArgSet) -> bool {
        s.ones()
            .all(|x| self.targets[x].iter().all(|&y| !s.contains(y)))
    }

    /// `s` defends `a`: every attacker of `a` is attacked by `s`.
    pub fn defends_idx(&self, s: &ArgSet, a: usize) -> bool {
        self.attackers[a]
            .iter()
            .all(|&b| self.set_attacks_idx(s, b))
    }

    /// Arguments with no attacker.
    pub fn unattacked(&self) -> BTreeSet<ArgumentId> {
        self.names_of(&self.unattacked_idx())
    }

    pub fn unattacked_idx(&self) -> ArgSet {
        let mut s = self.empty_set();
        for (i, att) in self.attackers.iter().enumerate() {
            if att.is_empty() {
                s.insert(i);
            }
        }
        s
    }

    /// Nodes reachable from `a` by walks of odd length and of even non-zero
    /// length, via BFS on the (node, parity) product graph.
    pub fn parity_reach(&self, a: usize) -> ParityReach {
        let n = self.len();
        let mut seen = [FixedBitSet::with_capacity(n), FixedBitSet::with_capacity(n)];
        let mut queue = VecDeque::new();
        // parity 1 = odd length so far
        for &t in &self.targets[a] {
            if !seen[1].put(t) {
                queue.push_back((t, 1usize));
            }
        }
        while let Some((v, p)) = queue.pop_front() {
            let q = 1 - p;
            for &t in &self.targets[v] {
                if !seen[q].put(t) {
                    queue.push_back((t, q));
                }
            }
        }
        let [even, odd] = seen;
        ParityReach { odd, even }
    }

    /// There is a directed walk of odd length from `a` to `b`.
    pub fn indirectly_attacks(&self, a: &str, b: &str) -> Result<bool, FrameworkError> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.parity_reach(a).odd.contains(b))
    }

    /// There is a directed walk of even, non-zero length from `a` to `b`.
    pub fn indirectly_defends(&self, a: &str, b: &str) -> Result<bool, FrameworkError> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.parity_reach(a).even.contains(b))
    }

    /// `x` both indirectly attacks and indirectly defends some argument.
    pub fn is_controversial(&self, x: &str) -> Result<bool, FrameworkError> {
        Ok(self.is_controversial_idx(self.index_of(x)?))
    }

    pub fn is_controversial_idx(&self, x: usize) -> bool {
        let r = self.parity_reach(x);
        !r.odd.is_disjoint(&r.even)
    }

    pub fn has_controversial_argument(&self) -> bool {
        (0..self.len()).any(|x| self.is_controversial_idx(x))
    }

    pub fn has_cycle(&self) -> bool {
        // Kahn's algorithm: a cycle exists iff some node is never released.
        let mut indeg: Vec<usize> = self.attackers.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..self.len()).filter(|&i| indeg[i] == 0).collect();
        let mut removed = 0;
        while let Some(v) = stack.pop() {
            removed += 1;
            for &t in &self.targets[v] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        removed < self.len()
    }

    /// Some argument has a closed walk of odd length, which is equivalent to
    /// the existence of an odd simple cycle.
    pub fn has_odd_cycle(&self) -> bool {
        (0..self.len()).any(|v| self.parity_reach(v).odd.contains(v))
    }

    /// Existence of an even-length simple cycle. Closed-walk parity does not
    /// work here (two odd cycles sharing a node give even closed walks), so
    /// this enumerates simple cycles and stops at the first even one. The
    /// worst case is exponential in the number of arguments.
    pub fn has_even_cycle(&self) -> bool {
        self.try_for_each_simple_cycle(|c| {
            if c.len() % 2 == 0 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
    }

    /// Visits every directed simple cycle once, as the node sequence starting
    /// at its smallest index. A self-attack is the cycle `[x]`.
    pub fn try_for_each_simple_cycle<F>(&self, mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.len();
        let mut on_path = FixedBitSet::with_capacity(n);
        let mut path = Vec::with_capacity(n);
        for start in 0..n {
            path.clear();
            path.push(start);
            on_path.clear();
            on_path.insert(start);
            self.cycles_from(start, start, &mut path, &mut on_path, &mut visit)?;
        }
        ControlFlow::Continue(())
    }

    fn cycles_from<F>(
        &self,
        start: usize,
        v: usize,
        path: &mut Vec<usize>,
        on_path: &mut FixedBitSet,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        for &t in &self.targets[v] {
            if t == start {
                visit(path)?;
            } else if t > start && !on_path.contains(t) {
                path.push(t);
                on_path.insert(t);
                self.cycles_from(start, t, path, on_path, visit)?;
                on_path.set(t, false);
                path.pop();
            }
        }
        ControlFlow::Continue(())
    }

    /// All simple cycles as name sequences, each rotated to start at its
    /// smallest name.
    pub fn simple_cycles(&self) -> BTreeSet<Vec<ArgumentId>> {
        let mut out = BTreeSet::new();
        let _ = self.try_for_each_simple_cycle(|c| {
            out.insert(c.iter().map(|&i| self.names[i].clone()).collect());
            ControlFlow::Continue(())
        });
        out
    }

    pub(crate) fn with_added_attack(&self, s: usize, t: usize) -> Framework {
        let mut attacks = self.attacks.clone();
        attacks.insert((s, t));
        Self::from_parts(self.names.clone(), self.index.clone(), attacks)
    }

    pub(crate) fn with_removed_attack(&self, s: usize, t: usize) -> Framework {
        let mut attacks = self.attacks.clone();
        attacks.remove(&(s, t));
        Self::from_parts(self.names.clone(), self.index.clone(), attacks)
    }

    /// Rebuilds from named parts; callers guarantee the names are valid and
    /// every endpoint is declared.
    pub(crate) fn from_named(arguments: BTreeSet<ArgumentId>, attacks: &BTreeSet<Attack>) -> Framework {
        let names: Vec<ArgumentId> = arguments.into_iter().collect();
        let index: BTreeMap<ArgumentId, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        let pairs = attacks
            .iter()
            .map(|(s, t)| (index[s], index[t]))
            .collect();
        Self::from_parts(names, index, pairs)
    }
}

/// Result of [`Framework::parity_reach`].
#[derive(Debug, Clone)]
pub struct ParityReach {
    pub odd: ArgSet,
    pub even: ArgSet,
}
