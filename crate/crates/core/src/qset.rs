//! Quasi-sets over a declared universe.
//!
//! Elements of a [`Kind::Quantum`] species (m-atoms) are recorded only by how
//! many of them a qset holds; there is no per-element record and nothing in
//! the public API orders or names them. Elements of a [`Kind::Classical`]
//! species (M-atoms) carry a label and behave like members of an ordinary
//! set.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether the elements of a species have identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    /// M-atoms: classical individuals, each with its own label.
    #[serde(rename = "M")]
    Classical,
    /// m-atoms: mutually indiscernible, only counted.
    #[serde(rename = "m")]
    Quantum,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Species {
    pub name: String,
    pub kind: Kind,
}

/// A labeled element of a classical species.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Member {
    pub species: String,
    pub label: String,
}

impl fmt::Display for Member {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.species, self.label)
    }
}

/// The fixed stock of species and elements every [`Qset`] is drawn from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    species: BTreeMap<String, Kind>,
    counts: BTreeMap<String, usize>,
    // sorted; a qset refers to members by position here
    members: Vec<Member>,
}

#[derive(Default)]
pub struct UniverseBuilder {
    species: BTreeMap<String, Kind>,
    counts: BTreeMap<String, usize>,
    members: BTreeSet<Member>,
    duplicate: Option<String>,
}

impl UniverseBuilder {
    /// Declare an m-atom species with `count` elements in the ambient stock.
    pub fn quantum(mut self, name: &str, count: usize) -> Self {
        if self.species.insert(name.to_owned(), Kind::Quantum).is_some() {
            self.duplicate.get_or_insert_with(|| name.to_owned());
        }
        if count > 0 {
            self.counts.insert(name.to_owned(), count);
        }
        self
    }

    /// Declare an M-atom species with the given labeled individuals.
    pub fn classical<I, S>(mut self, name: &str, labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if self.species.insert(name.to_owned(), Kind::Classical).is_some() {
            self.duplicate.get_or_insert_with(|| name.to_owned());
        }
        for label in labels {
            self.members.insert(Member {
                species: name.to_owned(),
                label: label.into(),
            });
        }
        self
    }

    pub fn build(self) -> Result<Arc<Universe>> {
        if let Some(name) = self.duplicate {
            return Err(Error::domain(format!("species `{name}` declared twice")));
        }
        Ok(Arc::new(Universe {
            species: self.species,
            counts: self.counts,
            members: self.members.into_iter().collect(),
        }))
    }
}

impl Universe {
    pub fn builder() -> UniverseBuilder {
        UniverseBuilder::default()
    }

    pub fn kind(&self, species: &str) -> Option<Kind> {
        self.species.get(species).copied()
    }

    /// Declared species in name order.
    pub fn species(&self) -> impl Iterator<Item = Species> + '_ {
        self.species.iter().map(|(name, &kind)| Species {
            name: name.clone(),
            kind,
        })
    }

    fn ambient_count(&self, species: &str) -> usize {
        self.counts.get(species).copied().unwrap_or(0)
    }

    fn member_index(&self, member: &Member) -> Option<usize> {
        self.members.binary_search(member).ok()
    }
}

/// Bitset of positions in [`Universe::members`], kept without trailing zero
/// words so that equal sets compare equal.
#[derive(Clone, Default, PartialEq, Eq)]
struct MemberSet(Vec<u64>);

impl MemberSet {
    fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / 64];
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        MemberSet(words)
    }

    fn trimmed(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        MemberSet(words)
    }

    fn contains(&self, i: usize) -> bool {
        self.0.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    fn insert(&mut self, i: usize) {
        if self.0.len() <= i / 64 {
            self.0.resize(i / 64 + 1, 0);
        }
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        if let Some(w) = self.0.get_mut(i / 64) {
            *w &= !(1 << (i % 64));
        }
        let words = std::mem::take(&mut self.0);
        *self = Self::trimmed(words);
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                (rest != 0).then(|| {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    k * 64 + b
                })
            })
        })
    }

    /// Lexicographic order of the ascending index sequences.
    fn cmp_sequence(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        let word = |v: &Self, i: usize| v.0.get(i).copied().unwrap_or(0);
        for k in 0..n {
            let diff = word(self, k) ^ word(other, k);
            if diff == 0 {
                continue;
            }
            // both agree below bit p; the side holding p is smaller unless the
            // other side stops there
            let p = diff.trailing_zeros();
            let (holder, rest) = if word(self, k) >> p & 1 == 1 {
                (Ordering::Less, other)
            } else {
                (Ordering::Greater, self)
            };
            let later = word(rest, k) >> p != 0 || rest.0.len() > k + 1;
            return if later { holder } else { holder.reverse() };
        }
        Ordering::Equal
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        let n = self.0.len().max(other.0.len());
        let word = |v: &Self, i: usize| v.0.get(i).copied().unwrap_or(0);
        Self::trimmed((0..n).map(|i| f(word(self, i), word(other, i))).collect())
    }

    fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection(other).is_empty()
    }
}

/// Opaque designation of one element of a qset.
///
/// For m-atoms the handle carries an internal token that is never exposed or
/// serialized; every public result is invariant under permuting those tokens.
/// Classical handles carry the element's public label.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementHandle {
    species: String,
    token: Token,
}

#[derive(Clone, PartialEq, Eq)]
enum Token {
    Anonymous(u32),
    Named(String),
}

impl ElementHandle {
    pub fn species(&self) -> &str {
        &self.species
    }

    /// The label of a classical element; `None` for m-atoms.
    pub fn label(&self) -> Option<&str> {
        match &self.token {
            Token::Named(label) => Some(label),
            Token::Anonymous(_) => None,
        }
    }

    pub fn is_classical(&self) -> bool {
        matches!(self.token, Token::Named(_))
    }
}

impl fmt::Debug for ElementHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.token {
            Token::Anonymous(_) => write!(f, "ElementHandle({})", self.species),
            Token::Named(label) => write!(f, "ElementHandle({}:{})", self.species, label),
        }
    }
}

/// A quasi-set: per-species counts of m-atoms plus a set of labeled M-atoms.
#[derive(Clone)]
pub struct Qset {
    universe: Arc<Universe>,
    counts: BTreeMap<String, usize>,
    members: MemberSet,
    // Internal token order for m-atom handles; absent means identity.
    tokens: BTreeMap<String, Vec<u32>>,
}

impl Qset {
    pub fn empty(universe: &Arc<Universe>) -> Self {
        Qset {
            universe: Arc::clone(universe),
            counts: BTreeMap::new(),
            members: MemberSet::default(),
            tokens: BTreeMap::new(),
        }
    }

    /// The whole ambient stock of the universe.
    pub fn ambient(universe: &Arc<Universe>) -> Self {
        Qset {
            universe: Arc::clone(universe),
            counts: universe.counts.clone(),
            members: MemberSet::full(universe.members.len()),
            tokens: BTreeMap::new(),
        }
    }

    /// Set the number of m-atoms of `species`.
    pub fn with_count(mut self, species: &str, count: usize) -> Result<Self> {
        match self.universe.kind(species) {
            Some(Kind::Quantum) => {}
            Some(Kind::Classical) => {
                return Err(Error::domain(format!(
                    "species `{species}` is classical; add labeled members instead"
                )))
            }
            None => return Err(Error::domain(format!("unknown species `{species}`"))),
        }
        let stock = self.universe.ambient_count(species);
        if count > stock {
            return Err(Error::domain(format!(
                "{count} elements of `{species}` requested but the universe holds {stock}"
            )));
        }
        self.tokens.remove(species);
        if count == 0 {
            self.counts.remove(species);
        } else {
            self.counts.insert(species.to_owned(), count);
        }
        Ok(self)
    }

    /// Add the classical element `species:label`.
    pub fn with_member(mut self, species: &str, label: &str) -> Result<Self> {
        match self.universe.kind(species) {
            Some(Kind::Classical) => {}
            Some(Kind::Quantum) => {
                return Err(Error::domain(format!(
                    "species `{species}` is quantum; its elements have no labels"
                )))
            }
            None => return Err(Error::domain(format!("unknown species `{species}`"))),
        }
        let member = Member {
            species: species.to_owned(),
            label: label.to_owned(),
        };
        let Some(i) = self.universe.member_index(&member) else {
            return Err(Error::domain(format!("`{member}` is not in the universe")));
        };
        self.members.insert(i);
        Ok(self)
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    /// Per-species m-atom counts; species with zero count are omitted.
    pub fn composition(&self) -> &BTreeMap<String, usize> {
        &self.counts
    }

    pub fn members(&self) -> impl Iterator<Item = &Member> {
        self.members.iter().map(|i| &self.universe.members[i])
    }

    pub fn count(&self, species: &str) -> usize {
        self.counts.get(species).copied().unwrap_or(0)
    }

    /// The quasi-cardinal: m-atom counts plus classical members.
    pub fn qcard(&self) -> usize {
        self.counts.values().sum::<usize>() + self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty() && self.members.is_empty()
    }

    pub fn same_universe(&self, other: &Qset) -> bool {
        Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe
    }

    fn ensure_same_universe(&self, other: &Qset) -> Result<()> {
        if self.same_universe(other) {
            Ok(())
        } else {
            Err(Error::domain("qsets belong to different universes"))
        }
    }

    /// Same universe, same composition, same classical members.
    pub fn indiscernible(&self, other: &Qset) -> bool {
        self.same_universe(other) && self.counts == other.counts && self.members == other.members
    }

    pub fn is_subqset_of(&self, other: &Qset) -> bool {
        self.same_universe(other)
            && self
                .counts
                .iter()
                .all(|(s, &n)| n <= other.count(s))
            && self.members.is_subset(&other.members)
    }

    fn with_parts(&self, counts: BTreeMap<String, usize>, members: MemberSet) -> Qset {
        Qset {
            universe: Arc::clone(&self.universe),
            counts: counts.into_iter().filter(|&(_, n)| n > 0).collect(),
            members,
            tokens: BTreeMap::new(),
        }
    }

    /// Smallest qset containing both: per-species maximum, set union of members.
    pub fn union(&self, other: &Qset) -> Result<Qset> {
        self.ensure_same_universe(other)?;
        let mut counts = self.counts.clone();
        for (s, &n) in &other.counts {
            let slot = counts.entry(s.clone()).or_insert(0);
            *slot = (*slot).max(n);
        }
        let members = self.members.union(&other.members);
        Ok(self.with_parts(counts, members))
    }

    /// Union of two qsets known to share no element: counts add.
    ///
    /// Fails if the sum does not fit in the universe, or if classical members
    /// overlap.
    pub fn disjoint_union(&self, other: &Qset) -> Result<Qset> {
        self.ensure_same_universe(other)?;
        if !self.members.is_disjoint(&other.members) {
            return Err(Error::domain("classical members overlap"));
        }
        let mut counts = self.counts.clone();
        for (s, &n) in &other.counts {
            *counts.entry(s.clone()).or_insert(0) += n;
        }
        for (s, &n) in &counts {
            let stock = self.universe.ambient_count(s);
            if n > stock {
                return Err(Error::domain(format!(
                    "disjoint union needs {n} elements of `{s}` but the universe holds {stock}"
                )));
            }
        }
        let members = self.members.union(&other.members);
        Ok(self.with_parts(counts, members))
    }

    /// Per-species minimum, set intersection of members.
    pub fn intersection(&self, other: &Qset) -> Result<Qset> {
        self.ensure_same_universe(other)?;
        let counts = self
            .counts
            .iter()
            .map(|(s, &n)| (s.clone(), n.min(other.count(s))))
            .collect();
        let members = self.members.intersection(&other.members);
        Ok(self.with_parts(counts, members))
    }

    /// Per-species subtraction floored at zero, set difference of members.
    pub fn difference(&self, other: &Qset) -> Result<Qset> {
        self.ensure_same_universe(other)?;
        let counts = self
            .counts
            .iter()
            .map(|(s, &n)| (s.clone(), n.saturating_sub(other.count(s))))
            .collect();
        let members = self.members.difference(&other.members);
        Ok(self.with_parts(counts, members))
    }

    /// Whether `parts` can sit inside `self` without sharing any element.
    ///
    /// Indiscernible elements cannot be told apart, so disjointness of m-atom
    /// parts is a statement about q-cardinals: the per-species totals must fit.
    pub fn fits_disjointly(&self, parts: &[Qset]) -> Result<bool> {
        let mut totals: BTreeMap<&str, usize> = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for part in parts {
            self.ensure_same_universe(part)?;
            for (s, &n) in &part.counts {
                *totals.entry(s).or_insert(0) += n;
            }
            for m in part.members.iter() {
                if !self.members.contains(m) || !seen.insert(m) {
                    return Ok(false);
                }
            }
        }
        Ok(totals.iter().all(|(s, &n)| n <= self.count(s)))
    }

    /// All subqsets of `self`, distinct up to indiscernibility.
    pub fn subqsets(&self) -> Vec<Qset> {
        let mut out = Vec::new();
        for eta in 0..=self.qcard() {
            self.collect_subqsets(eta, &mut out);
        }
        out
    }

    /// Composition-distinct subqsets with quasi-cardinal `eta`.
    ///
    /// Non-empty for every `eta <= qcard`; fails above it.
    pub fn subqsets_of_qcard(&self, eta: usize) -> Result<Vec<Qset>> {
        let q = self.qcard();
        if eta > q {
            return Err(Error::domain(format!(
                "no subqset of quasi-cardinal {eta} in a qset of quasi-cardinal {q}"
            )));
        }
        let mut out = Vec::new();
        self.collect_subqsets(eta, &mut out);
        Ok(out)
    }

    fn collect_subqsets(&self, eta: usize, out: &mut Vec<Qset>) {
        let species: Vec<(&String, usize)> = self.counts.iter().map(|(s, &n)| (s, n)).collect();
        let members: Vec<usize> = self.members.iter().collect();
        let mut chosen = vec![0usize; species.len()];
        self.walk_counts(&species, &members, 0, eta, &mut chosen, out);
    }

    fn walk_counts(
        &self,
        species: &[(&String, usize)],
        members: &[usize],
        idx: usize,
        remaining: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Qset>,
    ) {
        if idx == species.len() {
            if remaining > members.len() {
                return;
            }
            let counts: BTreeMap<String, usize> = species
                .iter()
                .zip(chosen.iter())
                .map(|(&(s, _), &n)| (s.clone(), n))
                .collect();
            for combo in combinations(members.len(), remaining) {
                let mut picked = MemberSet::default();
                for &i in &combo {
                    picked.insert(members[i]);
                }
                out.push(self.with_parts(counts.clone(), picked));
            }
            return;
        }
        let (_, available) = species[idx];
        for n in 0..=available.min(remaining) {
            chosen[idx] = n;
            self.walk_counts(species, members, idx + 1, remaining - n, chosen, out);
        }
        chosen[idx] = 0;
    }

    /// Split off pairwise-disjoint subqsets with the requested quasi-cardinals.
    ///
    /// Parts are filled from species in name order, then from classical
    /// members in label order.
    pub fn disjoint_partition(&self, parts: &[usize]) -> Result<Vec<Qset>> {
        let wanted: usize = parts.iter().sum();
        let q = self.qcard();
        if wanted > q {
            return Err(Error::domain(format!(
                "parts need quasi-cardinal {wanted} but the qset has {q}"
            )));
        }
        let mut pool_counts = self.counts.clone();
        let mut pool_members: Vec<usize> = self.members.iter().collect();
        pool_members.reverse();
        let mut out = Vec::with_capacity(parts.len());
        for &size in parts {
            let mut need = size;
            let mut counts = BTreeMap::new();
            for (s, left) in pool_counts.iter_mut() {
                if need == 0 {
                    break;
                }
                let take = need.min(*left);
                if take > 0 {
                    *left -= take;
                    need -= take;
                    counts.insert(s.clone(), take);
                }
            }
            let mut members = MemberSet::default();
            while need > 0 {
                // wanted <= qcard guarantees the pool suffices
                let m = pool_members.pop().expect("pool exhausted");
                members.insert(m);
                need -= 1;
            }
            out.push(self.with_parts(counts, members));
        }
        Ok(out)
    }

    /// Remove one element of `species` and insert one from outside the qset.
    ///
    /// For m-atoms the outgoing and incoming elements are indiscernible, so
    /// the result is indiscernible from `self`. For a classical species the
    /// first member (by label) is swapped for the first outside individual.
    pub fn swap_element(&self, species: &str) -> Result<Qset> {
        match self.universe.kind(species) {
            None => Err(Error::domain(format!("unknown species `{species}`"))),
            Some(Kind::Quantum) => {
                let here = self.count(species);
                if here == 0 {
                    return Err(Error::domain(format!("no element of `{species}` in the qset")));
                }
                if self.universe.ambient_count(species) <= here {
                    return Err(Error::domain(format!(
                        "the universe has no element of `{species}` outside the qset"
                    )));
                }
                let removed = self.clone().with_count(species, here - 1)?;
                let one = Qset::empty(&self.universe).with_count(species, 1)?;
                removed.disjoint_union(&one)
            }
            Some(Kind::Classical) => {
                let out = self
                    .members()
                    .find(|m| m.species == species)
                    .ok_or_else(|| Error::domain(format!("no element of `{species}` in the qset")))?;
                let incoming = self
                    .universe
                    .members
                    .iter()
                    .enumerate()
                    .find(|(i, m)| m.species == species && !self.members.contains(*i))
                    .map(|(_, m)| m)
                    .ok_or_else(|| {
                        Error::domain(format!(
                            "the universe has no element of `{species}` outside the qset"
                        ))
                    })?;
                self.classical_swap(species, &out.label, &incoming.label)
            }
        }
    }

    /// `(A − {x}) ∪ {y}` for classical individuals `x ∈ A`, `y ∉ A`.
    pub fn classical_swap(&self, species: &str, out_label: &str, in_label: &str) -> Result<Qset> {
        let out = Member {
            species: species.to_owned(),
            label: out_label.to_owned(),
        };
        let incoming = Member {
            species: species.to_owned(),
            label: in_label.to_owned(),
        };
        let out = match self.universe.member_index(&out) {
            Some(i) if self.members.contains(i) => i,
            _ => return Err(Error::domain(format!("`{out}` is not in the qset"))),
        };
        let Some(into) = self.universe.member_index(&incoming) else {
            return Err(Error::domain(format!("`{incoming}` is not in the universe")));
        };
        if self.members.contains(into) {
            return Err(Error::domain(format!("`{incoming}` is already in the qset")));
        }
        let mut members = self.members.clone();
        members.remove(out);
        members.insert(into);
        Ok(self.with_parts(self.counts.clone(), members))
    }

    /// Whether swapping one element of `species` leaves an indiscernible qset.
    ///
    /// Always true for m-atom species, false for classical ones.
    pub fn swap_indiscernibility_check(&self, species: &str) -> Result<bool> {
        let swapped = self.swap_element(species)?;
        Ok(swapped.indiscernible(self))
    }

    /// Reorder the internal tokens behind the m-atom handles of `species`.
    ///
    /// `perm` must be a permutation of `0..count(species)`. The result is
    /// observationally identical to `self`.
    pub fn permute_internal_labels(&self, species: &str, perm: &[usize]) -> Result<Qset> {
        if self.universe.kind(species) != Some(Kind::Quantum) {
            return Err(Error::domain(format!(
                "`{species}` is not an m-atom species of this universe"
            )));
        }
        let n = self.count(species);
        let mut seen = vec![false; n];
        if perm.len() != n || !perm.iter().all(|&i| i < n && !std::mem::replace(&mut seen[i], true)) {
            return Err(Error::domain(format!(
                "not a permutation of the {n} handles of `{species}`"
            )));
        }
        let current = self.tokens_for(species);
        let mut out = self.clone();
        out.tokens
            .insert(species.to_owned(), perm.iter().map(|&i| current[i]).collect());
        Ok(out)
    }

    fn tokens_for(&self, species: &str) -> Vec<u32> {
        match self.tokens.get(species) {
            Some(t) => t.clone(),
            None => (0..self.count(species) as u32).collect(),
        }
    }

    /// One handle per element: m-atom handles first (species in name order),
    /// then classical members.
    pub fn handles(&self) -> Vec<ElementHandle> {
        let mut out = Vec::with_capacity(self.qcard());
        for s in self.counts.keys() {
            out.extend(self.tokens_for(s).into_iter().map(|t| ElementHandle {
                species: s.clone(),
                token: Token::Anonymous(t),
            }));
        }
        out.extend(self.members().map(|m| ElementHandle {
            species: m.species.clone(),
            token: Token::Named(m.label.clone()),
        }));
        out
    }

    /// Whether `handle` designates an element of this qset.
    pub fn designates(&self, handle: &ElementHandle) -> bool {
        match &handle.token {
            Token::Anonymous(t) => (*t as usize) < self.count(&handle.species),
            Token::Named(label) => self
                .universe
                .member_index(&Member {
                    species: handle.species.clone(),
                    label: label.clone(),
                })
                .is_some_and(|i| self.members.contains(i)),
        }
    }

    /// Whether the element behind `handle` may lie in this qset.
    ///
    /// An m-atom lies in any qset holding some element of its species, since
    /// nothing distinguishes it from the others.
    pub fn may_contain(&self, handle: &ElementHandle) -> bool {
        match &handle.token {
            Token::Anonymous(_) => self.count(&handle.species) > 0,
            Token::Named(_) => self.designates(handle),
        }
    }
}

impl PartialEq for Qset {
    fn eq(&self, other: &Self) -> bool {
        self.indiscernible(other)
    }
}

impl Eq for Qset {}

impl PartialOrd for Qset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for canonical listings: by quasi-cardinal, then by
/// composition, then by members.
impl Ord for Qset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.qcard()
            .cmp(&other.qcard())
            .then_with(|| self.counts.iter().cmp(other.counts.iter()))
            .then_with(|| self.members.cmp_sequence(&other.members))
    }
}

impl fmt::Debug for Qset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Qset{self}")
    }
}

impl fmt::Display for Qset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (s, n) in &self.counts {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{s}:{n}")?;
        }
        for m in self.members() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// Index combinations of size `k` from `0..n`, in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}
