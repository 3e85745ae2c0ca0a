#![allow(dead_code)]

use std::f64::consts::PI;

/// Every bounded poset with `inner` elements strictly between a bottom and a
/// top, as a `leq` matrix on `inner + 2` points (0 is bottom, last is top).
///
/// Inner elements are naturally labeled (`i ≤ j` implies `i ≤ j` as
/// integers), so every poset appears at least once up to isomorphism.
pub fn bounded_posets(inner: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    let mut below: Vec<Vec<bool>> = Vec::new();
    extend(inner, &mut below, &mut out);
    out
}

fn extend(inner: usize, below: &mut Vec<Vec<bool>>, out: &mut Vec<Vec<Vec<bool>>>) {
    let j = below.len();
    if j == inner {
        let n = inner + 2;
        let mut leq = vec![vec![false; n]; n];
        for a in 0..n {
            leq[0][a] = true;
            leq[a][n - 1] = true;
            leq[a][a] = true;
        }
        for (b, row) in below.iter().enumerate() {
            for (a, &le) in row.iter().enumerate() {
                if le {
                    leq[a + 1][b + 1] = true;
                }
            }
        }
        out.push(leq);
        return;
    }
    // the strict predecessors of j must form a down-set of the poset so far
    for mask in 0u32..(1 << j) {
        let preds: Vec<bool> = (0..j).map(|i| mask >> i & 1 == 1).collect();
        let down_closed = (0..j).all(|p| !preds[p] || (0..j).all(|q| !below[p][q] || preds[q]));
        if down_closed {
            let mut row = preds;
            row.push(true);
            for r in below.iter_mut() {
                r.push(false);
            }
            below.push(row);
            extend(inner, below, out);
            below.pop();
            for r in below.iter_mut() {
                r.pop();
            }
        }
    }
}

/// Meet and join tables computed straight from the order, or `None` when
/// some pair lacks a glb or lub.
pub fn brute_tables(leq: &[Vec<bool>]) -> Option<(Vec<Vec<usize>>, Vec<Vec<usize>>)> {
    let n = leq.len();
    let mut meet = vec![vec![0; n]; n];
    let mut join = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&x| leq[x][a] && leq[x][b]).collect();
            let glb = lower.iter().copied().find(|&g| lower.iter().all(|&x| leq[x][g]))?;
            let upper: Vec<usize> = (0..n).filter(|&x| leq[a][x] && leq[b][x]).collect();
            let lub = upper.iter().copied().find(|&l| upper.iter().all(|&x| leq[l][x]))?;
            meet[a][b] = glb;
            join[a][b] = lub;
        }
    }
    Some((meet, join))
}

pub fn brute_distributive(meet: &[Vec<usize>], join: &[Vec<usize>]) -> bool {
    let n = meet.len();
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]))
    })
}

/// Modularity via the absence of a pentagon sublattice would be the textbook
/// route; here the law `x ≤ z ⇒ x ∨ (y ∧ z) = (x ∨ y) ∧ z` is tested directly
/// against tables built from the order alone.
pub fn brute_modular(leq: &[Vec<bool>], meet: &[Vec<usize>], join: &[Vec<usize>]) -> bool {
    let n = leq.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| !leq[x][z] || join[x][meet[y][z]] == meet[join[x][y]][z])
        })
    })
}

/// Whether the order contains a pentagon: `a < c`, `b` incomparable to both,
/// `a ∨ b = c ∨ b` and `a ∧ b = c ∧ b`.
pub fn has_pentagon(leq: &[Vec<bool>], meet: &[Vec<usize>], join: &[Vec<usize>]) -> bool {
    let n = leq.len();
    let incomparable = |x: usize, y: usize| !leq[x][y] && !leq[y][x];
    (0..n).any(|a| {
        (0..n).any(|c| {
            a != c
                && leq[a][c]
                && (0..n).any(|b| {
                    incomparable(a, b)
                        && incomparable(c, b)
                        && join[a][b] == join[c][b]
                        && meet[a][b] == meet[c][b]
                })
        })
    })
}

/// Ground state of a finite square well on `[-a, a]` with depth `v0`
/// (ħ = m = 1), solved on its own: `tan z = √(z0² − z²) / z` on `(0, π/2)`.
pub struct GroundState {
    pub energy: f64,
    k: f64,
    kappa: f64,
    a: f64,
    inside: f64,
    outside: f64,
}

impl GroundState {
    pub fn new(a: f64, v0: f64) -> Self {
        let z0 = a * (2.0 * v0).sqrt();
        let g = |z: f64| z.tan() - (z0 * z0 - z * z).sqrt() / z;
        let (mut lo, mut hi) = (1e-12, (PI / 2.0).min(z0) - 1e-15);
        for _ in 0..400 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let z = 0.5 * (lo + hi);
        let k = z / a;
        let kappa = (z0 * z0 - z * z).sqrt() / a;
        // continuity at x = a fixes the outer amplitude; then normalize
        let ratio = (k * a).cos() / (-kappa * a).exp();
        let inside_norm = a + (2.0 * k * a).sin() / (2.0 * k);
        let outside_norm = ratio * ratio * (-2.0 * kappa * a).exp() / kappa;
        let c = 1.0 / (inside_norm + outside_norm).sqrt();
        GroundState {
            energy: k * k / 2.0,
            k,
            kappa,
            a,
            inside: c,
            outside: c * ratio,
        }
    }

    pub fn at(&self, x: f64) -> f64 {
        if x.abs() <= self.a {
            self.inside * (self.k * x).cos()
        } else {
            self.outside * (-self.kappa * x.abs()).exp()
        }
    }
}

/// `∫ f` over `[lo, hi]` by the composite trapezoid rule on `n` panels.
pub fn trapezoid(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let h = (hi - lo) / n as f64;
    let inner: f64 = (1..n).map(|i| f(lo + h * i as f64)).sum();
    h * (0.5 * (f(lo) + f(hi)) + inner)
}
