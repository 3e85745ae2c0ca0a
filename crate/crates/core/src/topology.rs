//! q-topologies: families of clouds closed under intersection and union,
//! and Hausdorff-style separation tests over them.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cloud::cloud_extent;
use crate::error::{Error, Result};
use crate::qset::{ElementHandle, Qset};
use crate::universe::{qset_from_map, CompositionMap, UniverseDoc};

/// A carrier qset with a finite family of open clouds.
#[derive(Clone, Debug)]
pub struct QTopology {
    carrier: Qset,
    opens: Vec<Qset>,
}

impl QTopology {
    /// Pair a carrier with a family of opens. The family is not checked
    /// here; see [`verify_axioms`].
    pub fn new(carrier: Qset, opens: Vec<Qset>) -> Result<Self> {
        if let Some(bad) = opens.iter().find(|o| !o.same_universe(&carrier)) {
            return Err(Error::domain(format!("open {bad} belongs to another universe")));
        }
        Ok(QTopology { carrier, opens })
    }

    pub fn carrier(&self) -> &Qset {
        &self.carrier
    }

    pub fn opens(&self) -> &[Qset] {
        &self.opens
    }

    /// True when every subqset of the carrier is open.
    pub fn is_discrete(&self) -> bool {
        let opens: BTreeSet<&Qset> = self.opens.iter().collect();
        self.carrier.subqsets().iter().all(|s| opens.contains(s))
    }
}

/// Close the cloud extents of all subqsets of `carrier` under finite
/// intersections and unions.
pub fn generate_cloud_topology(carrier: &Qset, bound: usize) -> Result<QTopology> {
    if carrier.qcard() > bound {
        return Err(Error::Resource {
            what: format!("quasi-cardinal {} of the carrier", carrier.qcard()),
            bound,
        });
    }
    // extents are already closed under union and intersection: each is a
    // choice of whole m-classes plus a choice of classical members
    let family: BTreeSet<Qset> = carrier
        .subqsets()
        .iter()
        .map(|b| cloud_extent(carrier, b))
        .collect();
    QTopology::new(carrier.clone(), family.into_iter().collect())
}

/// A failed axiom, with the offending opens written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    MissingEmpty,
    MissingCarrier,
    NotASubqset { open: String },
    NotACloud { open: String },
    IntersectionNotOpen { left: String, right: String },
    UnionNotOpen { family: Vec<String> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingEmpty => write!(f, "axiom 1: the empty qset is not open"),
            Violation::MissingCarrier => write!(f, "axiom 1: the carrier is not open"),
            Violation::NotASubqset { open } => write!(f, "open {open} is not a subqset of the carrier"),
            Violation::NotACloud { open } => write!(f, "open {open} is not a cloud"),
            Violation::IntersectionNotOpen { left, right } => {
                write!(f, "axiom 2: {left} ∩ {right} is not open")
            }
            Violation::UnionNotOpen { family } => {
                write!(f, "axiom 3: union of [{}] is not open", family.join(", "))
            }
        }
    }
}

/// How to check the union axiom.
///
/// The union of every subfamily is collected incrementally, one open at a
/// time, keeping only distinct results. While that collection stays within
/// `max_unions` the check covers every subfamily; past it, all pairs plus
/// `sample` random subfamilies are checked instead.
#[derive(Clone, Copy, Debug)]
pub struct AxiomCheck {
    pub max_unions: usize,
    pub sample: usize,
    pub seed: u64,
}

impl Default for AxiomCheck {
    fn default() -> Self {
        AxiomCheck {
            max_unions: 1 << 16,
            sample: 1024,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    /// Whether every subfamily was checked for axiom 3.
    pub exhaustive: bool,
}

const MAX_REPORTED: usize = 32;

pub fn verify_axioms(t: &QTopology) -> AxiomReport {
    verify_axioms_with(t, &AxiomCheck::default())
}

pub fn verify_axioms_with(t: &QTopology, check: &AxiomCheck) -> AxiomReport {
    let opens: BTreeSet<&Qset> = t.opens.iter().collect();
    let family: Vec<&Qset> = opens.iter().copied().collect();
    let mut violations = Vec::new();
    let push = |v: Violation, violations: &mut Vec<Violation>| {
        if violations.len() < MAX_REPORTED {
            violations.push(v);
        }
    };

    if !family.iter().any(|o| o.is_empty()) {
        push(Violation::MissingEmpty, &mut violations);
    }
    if !opens.contains(&t.carrier) {
        push(Violation::MissingCarrier, &mut violations);
    }
    for o in &family {
        if !o.is_subqset_of(&t.carrier) {
            push(Violation::NotASubqset { open: o.to_string() }, &mut violations);
        } else if cloud_extent(&t.carrier, o) != **o {
            push(Violation::NotACloud { open: o.to_string() }, &mut violations);
        }
    }

    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            let meet = a.intersection(b).expect("same universe");
            if !opens.contains(&meet) {
                push(
                    Violation::IntersectionNotOpen {
                        left: a.to_string(),
                        right: b.to_string(),
                    },
                    &mut violations,
                );
            }
        }
    }

    let k = family.len();
    let empty = Qset::empty(t.carrier.universe());
    let describe = |members: &[usize]| -> Vec<String> {
        members.iter().map(|&i| family[i].to_string()).collect()
    };

    let exhaustive = match subfamily_unions(&family, &empty, check.max_unions) {
        Some(unions) => {
            // index 0 is the empty subfamily, already covered by axiom 1
            for (k, u) in unions.sets.iter().enumerate().skip(1) {
                if !opens.contains(u) {
                    let witness = unions.witness(k);
                    push(Violation::UnionNotOpen { family: describe(&witness) }, &mut violations);
                }
            }
            true
        }
        None => {
            let union_of = |members: &[usize]| -> Qset {
                members.iter().fold(empty.clone(), |acc, &i| {
                    acc.union(family[i]).expect("same universe")
                })
            };
            for i in 0..k {
                for j in i + 1..k {
                    if !opens.contains(&union_of(&[i, j])) {
                        push(Violation::UnionNotOpen { family: describe(&[i, j]) }, &mut violations);
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(check.seed);
            for _ in 0..check.sample {
                let members: Vec<usize> = (0..k).filter(|_| rng.gen_bool(0.5)).collect();
                if !opens.contains(&union_of(&members)) {
                    push(Violation::UnionNotOpen { family: describe(&members) }, &mut violations);
                }
            }
            false
        }
    };

    AxiomReport {
        ok: violations.is_empty(),
        violations,
        exhaustive,
    }
}

/// Why two points could not be separated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    /// Both handles designate the same element.
    SamePoint,
    /// No open contains one of the points.
    Uncovered,
    /// Every open containing `p` meets every open containing `q`.
    NeighbourhoodsMeet,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Obstruction::SamePoint => "both handles designate the same point",
            Obstruction::Uncovered => "some point lies in no open",
            Obstruction::NeighbourhoodsMeet => {
                "every open containing p meets every open containing q"
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparationResult {
    /// Disjoint opens around `p` and `q` respectively.
    Separable { around_p: Qset, around_q: Qset },
    NotSeparable(Obstruction),
}

impl SeparationResult {
    pub fn is_separable(&self) -> bool {
        matches!(self, SeparationResult::Separable { .. })
    }
}

/// Search for disjoint opens `U ∋ p`, `V ∋ q`.
///
/// An m-atom lies in every open holding some element of its species, so two
/// handles of the same m-atom species can never be separated.
pub fn separation_test(t: &QTopology, p: &ElementHandle, q: &ElementHandle) -> Result<SeparationResult> {
    for h in [p, q] {
        if !t.carrier.designates(h) {
            return Err(Error::domain(format!("{h:?} does not designate a carrier element")));
        }
    }
    if p == q {
        return Ok(SeparationResult::NotSeparable(Obstruction::SamePoint));
    }
    let around = |h: &ElementHandle| -> Vec<&Qset> {
        t.opens.iter().filter(|o| o.may_contain(h)).collect()
    };
    let (ps, qs) = (around(p), around(q));
    if ps.is_empty() || qs.is_empty() {
        return Ok(SeparationResult::NotSeparable(Obstruction::Uncovered));
    }
    for u in &ps {
        for v in &qs {
            if u.intersection(v)?.is_empty() {
                return Ok(SeparationResult::Separable {
                    around_p: (*u).clone(),
                    around_q: (*v).clone(),
                });
            }
        }
    }
    Ok(SeparationResult::NotSeparable(Obstruction::NeighbourhoodsMeet))
}

fn describe_point(h: &ElementHandle) -> String {
    match h.label() {
        Some(label) => format!("{}:{}", h.species(), label),
        None => h.species().to_owned(),
    }
}

/// The union of every subfamily of `family`, each distinct union mapped to
/// one subfamily producing it. `None` once more than
/// `limit` distinct unions turn up.
/// Distinct unions of subfamilies, each remembering the union it grew from
/// and the open that was added.
struct Unions {
    sets: Vec<Qset>,
    parents: Vec<Option<(usize, usize)>>,
}

impl Unions {
    fn witness(&self, mut k: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while let Some((parent, i)) = self.parents[k] {
            w.push(i);
            k = parent;
        }
        w.reverse();
        w
    }
}

fn subfamily_unions(family: &[&Qset], empty: &Qset, limit: usize) -> Option<Unions> {
    let mut sets = vec![empty.clone()];
    let mut parents = vec![None];
    let mut seen = BTreeSet::from([empty.clone()]);
    for (i, open) in family.iter().enumerate() {
        for j in 0..sets.len() {
            if open.is_subqset_of(&sets[j]) {
                continue;
            }
            let u = sets[j].union(open).expect("same universe");
            if seen.insert(u.clone()) {
                sets.push(u);
                parents.push(Some((j, i)));
                if sets.len() > limit {
                    return None;
                }
            }
        }
    }
    Some(Unions { sets, parents })
}

/// Pairs of points that cannot be separated, described by species (and
/// label for classical points) only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HausdorffReport {
    pub hausdorff: bool,
    pub failing_pairs: Vec<[String; 2]>,
}

/// Run [`separation_test`] over all pairs of distinct points.
///
/// Points of one m-atom species are interchangeable, so a single handle
/// stands for its species in cross-species pairs and one same-species pair
/// is tested per species with at least two elements.
pub fn hausdorff_report(t: &QTopology) -> HausdorffReport {
    let handles = t.carrier.handles();
    let mut reps: Vec<&ElementHandle> = Vec::new();
    let mut same_species: Vec<(&ElementHandle, &ElementHandle)> = Vec::new();
    for (i, h) in handles.iter().enumerate() {
        if h.is_classical() {
            reps.push(h);
            continue;
        }
        let first = handles[..i].iter().position(|o| o.species() == h.species());
        match first {
            None => reps.push(h),
            Some(j) if handles[j + 1..i].iter().all(|o| o.species() != h.species()) => {
                same_species.push((&handles[j], h));
            }
            Some(_) => {}
        }
    }
    let mut pairs = same_species;
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            pairs.push((a, b));
        }
    }
    let failing_pairs: Vec<[String; 2]> = pairs
        .into_iter()
        .filter(|(p, q)| {
            !separation_test(t, p, q)
                .expect("handles come from the carrier")
                .is_separable()
        })
        .map(|(p, q)| [describe_point(p), describe_point(q)])
        .collect();
    HausdorffReport {
        hausdorff: failing_pairs.is_empty(),
        failing_pairs,
    }
}

/// JSON form of a topology: a universe document plus an optional carrier
/// (name of one of its qsets; the ambient when absent) and optional opens
/// (the generated cloud topology when absent).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TopologyDoc {
    #[serde(flatten)]
    pub universe: UniverseDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<CompositionMap>>,
}

impl TopologyDoc {
    pub fn build(&self, bound: usize) -> Result<QTopology> {
        let loaded = self.universe.load()?;
        let carrier = match &self.carrier {
            None => loaded.ambient.clone(),
            Some(name) => loaded
                .qsets
                .get(name)
                .cloned()
                .ok_or_else(|| Error::schema("carrier", format!("no qset named `{name}`")))?,
        };
        match &self.opens {
            None => generate_cloud_topology(&carrier, bound),
            Some(maps) => {
                let opens = maps
                    .iter()
                    .enumerate()
                    .map(|(i, m)| qset_from_map(&loaded.universe, m, &format!("opens[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                QTopology::new(carrier, opens)
            }
        }
    }
}
