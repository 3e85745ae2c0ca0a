//! Finite lattices, exhaustive law checkers, and the lattice of cloud extents.

use serde::{Deserialize, Serialize};

use crate::cloud::cloud_extent;
use crate::error::{Error, Result};
use crate::qset::Qset;

/// Default cap on the quasi-cardinal of ambients whose subqsets get enumerated.
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;

/// A finite lattice stored as its order relation and meet/join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteLattice {
    /// Build from a partial order given as a `leq[a][b]` matrix.
    ///
    /// Fails if the relation is not a partial order or some pair lacks a
    /// unique meet or join.
    pub fn from_order(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::domain("a lattice needs at least one element"));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::domain("order matrix does not match the element count"));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::domain(format!("order is not reflexive at `{}`", labels[a])));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::domain(format!(
                        "order is not antisymmetric: `{}` and `{}`",
                        labels[a], labels[b]
                    )));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::domain("order is not transitive"));
                    }
                }
            }
        }
        let bound = |a: usize, b: usize, lower: bool| -> Option<usize> {
            let below = |x: usize, y: usize| if lower { leq[x][y] } else { leq[y][x] };
            let candidates: Vec<usize> = (0..n).filter(|&x| below(x, a) && below(x, b)).collect();
            candidates
                .iter()
                .copied()
                .find(|&g| candidates.iter().all(|&x| below(x, g)))
        };
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                meet[a][b] = bound(a, b, true).ok_or_else(|| {
                    Error::domain(format!("`{}` and `{}` have no meet", labels[a], labels[b]))
                })?;
                join[a][b] = bound(a, b, false).ok_or_else(|| {
                    Error::domain(format!("`{}` and `{}` have no join", labels[a], labels[b]))
                })?;
            }
        }
        Ok(FiniteLattice {
            labels,
            leq,
            meet,
            join,
        })
    }

    /// Build from Hasse-diagram edges `(lower, upper)`.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::domain("cover edge refers to a missing element"));
            }
            leq[lo][hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Self::from_order(labels, leq)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// Exhaustive check of commutativity, associativity, idempotence and
    /// absorption for both operations. Returns the names of failed laws.
    pub fn law_violations(&self) -> Vec<String> {
        let n = self.len();
        let (m, j) = (&self.meet, &self.join);
        let mut failed = Vec::new();
        let mut flag = |name: &str, ok: bool| {
            if !ok && !failed.iter().any(|f: &String| f == name) {
                failed.push(name.to_owned());
            }
        };
        for a in 0..n {
            flag("idempotence", m[a][a] == a && j[a][a] == a);
            for b in 0..n {
                flag("commutativity", m[a][b] == m[b][a] && j[a][b] == j[b][a]);
                flag("absorption", m[a][j[a][b]] == a && j[a][m[a][b]] == a);
                flag("order", (m[a][b] == a) == self.leq[a][b]);
                for c in 0..n {
                    flag(
                        "associativity",
                        m[m[a][b]][c] == m[a][m[b][c]] && j[j[a][b]][c] == j[a][j[b][c]],
                    );
                }
            }
        }
        failed
    }

    /// The five-element pentagon `0 < a < c < 1`, `0 < b < 1`.
    pub fn pentagon() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_covers(labels, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
            .expect("N5 is a lattice")
    }

    /// The five-element diamond with three incomparable atoms.
    pub fn diamond() -> Self {
        let labels = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        Self::from_covers(labels, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .expect("M3 is a lattice")
    }

    /// The subsets of an `n`-element set ordered by inclusion.
    pub fn boolean(n: u32) -> Self {
        let size = 1usize << n;
        let labels = (0..size).map(|s| format!("{s:0width$b}", width = n as usize)).collect();
        let leq = (0..size)
            .map(|a| (0..size).map(|b| a & b == a).collect())
            .collect();
        Self::from_order(labels, leq).expect("power sets are lattices")
    }

    /// A chain of `n` elements.
    pub fn chain(n: usize) -> Self {
        let labels = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect();
        Self::from_order(labels, leq).expect("chains are lattices")
    }
}

/// Outcome of an exhaustive law check; `witness` is the first failing triple
/// `(a, b, c)` in lexicographic index order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LawCheck {
    pub holds: bool,
    pub witness: Option<[usize; 3]>,
}

fn first_failure(lattice: &FiniteLattice, fails: impl Fn(usize, usize, usize) -> bool) -> LawCheck {
    let n = lattice.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if fails(a, b, c) {
                    return LawCheck {
                        holds: false,
                        witness: Some([a, b, c]),
                    };
                }
            }
        }
    }
    LawCheck {
        holds: true,
        witness: None,
    }
}

/// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for all triples.
pub fn check_distributive(l: &FiniteLattice) -> LawCheck {
    first_failure(l, |a, b, c| {
        l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))
    })
}

/// `a ≤ c ⇒ a ∨ (b ∧ c) = (a ∨ b) ∧ c` for all triples.
pub fn check_modular(l: &FiniteLattice) -> LawCheck {
    first_failure(l, |a, b, c| {
        l.leq(a, c) && l.join(a, l.meet(b, c)) != l.meet(l.join(a, b), c)
    })
}

/// Serializable summary of both checks, witnesses given by element label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeReport {
    pub distributive: bool,
    pub modular: bool,
    pub witness: Vec<String>,
    pub modular_witness: Vec<String>,
}

impl LatticeReport {
    pub fn of(lattice: &FiniteLattice) -> Self {
        let names = |w: Option<[usize; 3]>| -> Vec<String> {
            w.map(|t| t.iter().map(|&i| lattice.labels[i].clone()).collect())
                .unwrap_or_default()
        };
        let d = check_distributive(lattice);
        let m = check_modular(lattice);
        LatticeReport {
            distributive: d.holds,
            modular: m.holds,
            witness: names(d.witness),
            modular_witness: names(m.witness),
        }
    }
}

/// Adjacency form used for lattice fixtures:
/// `{"elements": ["0", "a", "1"], "covers": [["0", "a"], ["a", "1"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDoc {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl LatticeDoc {
    pub fn build(&self) -> Result<FiniteLattice> {
        let index = |name: &str, i: usize, side: usize| -> Result<usize> {
            self.elements.iter().position(|e| e == name).ok_or_else(|| {
                Error::schema(format!("covers[{i}][{side}]"), format!("unknown element `{name}`"))
            })
        };
        let mut edges = Vec::with_capacity(self.covers.len());
        for (i, [lo, hi]) in self.covers.iter().enumerate() {
            edges.push((index(lo, i, 0)?, index(hi, i, 1)?));
        }
        let mut seen = std::collections::BTreeSet::new();
        for (i, e) in self.elements.iter().enumerate() {
            if !seen.insert(e) {
                return Err(Error::schema(format!("elements[{i}]"), format!("duplicate `{e}`")));
            }
        }
        FiniteLattice::from_covers(self.elements.clone(), &edges)
    }
}

/// The lattice of cloud extents of an ambient qset.
#[derive(Clone, Debug)]
pub struct CloudLattice {
    /// Distinct cloud extents, sorted by quasi-cardinal then composition.
    pub extents: Vec<Qset>,
    pub lattice: FiniteLattice,
}

/// Collect the cloud extents of every subqset of `ambient` and order them by
/// inclusion. Meet is plain intersection; join is the cloud of the union.
pub fn build_cloud_lattice(ambient: &Qset, bound: usize) -> Result<CloudLattice> {
    if ambient.qcard() > bound {
        return Err(Error::Resource {
            what: format!("quasi-cardinal {} of the ambient", ambient.qcard()),
            bound,
        });
    }
    let mut extents: Vec<Qset> = ambient
        .subqsets()
        .iter()
        .map(|b| cloud_extent(ambient, b))
        .collect();
    extents.sort();
    extents.dedup();

    let n = extents.len();
    let position = |q: &Qset| -> Result<usize> {
        extents
            .binary_search(q)
            .map_err(|_| Error::domain(format!("{q} is not a cloud extent of {ambient}")))
    };
    let leq: Vec<Vec<bool>> = extents
        .iter()
        .map(|a| extents.iter().map(|b| a.is_subqset_of(b)).collect())
        .collect();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            meet[a][b] = position(&extents[a].intersection(&extents[b])?)?;
            join[a][b] = position(&cloud_extent(ambient, &extents[a].union(&extents[b])?))?;
        }
    }
    let lattice = FiniteLattice {
        labels: extents.iter().map(|q| q.to_string()).collect(),
        leq,
        meet,
        join,
    };
    Ok(CloudLattice { extents, lattice })
}
