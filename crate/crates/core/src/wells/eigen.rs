use std::f64::consts::PI;

use super::quadrature::Quadrature;
use super::well::{Depth, WellSpec};
use crate::error::{Error, Result};

/// Tails are cut where the amplitude falls below this fraction of the peak.
const TAIL_CUTOFF: f64 = 1e-16;
/// Bisection tolerance on the dimensionless wavenumber `k * half_width`.
const ROOT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
enum Profile {
    /// `amp * sin(k (x - left))` on `(left, left + width)`, zero elsewhere.
    Boxed { left: f64, width: f64, amp: f64, k: f64 },
    /// `amp * cos(k u)` or `amp * sin(k u)` inside, decaying as `exp(-kappa (|u| - a))` outside.
    Bound {
        center: f64,
        a: f64,
        even: bool,
        amp: f64,
        k: f64,
        kappa: f64,
    },
}

/// A normalized real stationary state of a single well.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Eigenstate {
    n: u32,
    energy: f64,
    hbar: f64,
    profile: Profile,
    support: (f64, f64),
}

impl Eigenstate {
    pub fn quantum_number(&self) -> u32 {
        self.n
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Interval outside which the amplitude is exactly zero (infinite well)
    /// or below `1e-16` of its peak (finite well).
    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    /// True when the state vanishes identically outside its support.
    pub fn is_compact(&self) -> bool {
        matches!(self.profile, Profile::Boxed { .. })
    }

    pub fn value(&self, x: f64) -> f64 {
        match self.profile {
            Profile::Boxed { left, width, amp, k } => {
                if x <= left || x >= left + width {
                    0.0
                } else {
                    amp * (k * (x - left)).sin()
                }
            }
            Profile::Bound {
                center,
                a,
                even,
                amp,
                k,
                kappa,
            } => {
                let u = x - center;
                if u.abs() <= a {
                    if even {
                        amp * (k * u).cos()
                    } else {
                        amp * (k * u).sin()
                    }
                } else {
                    let edge = if even {
                        amp * (k * a).cos()
                    } else {
                        u.signum() * amp * (k * a).sin()
                    };
                    edge * (-kappa * (u.abs() - a)).exp()
                }
            }
        }
    }

    pub fn derivative(&self, x: f64) -> f64 {
        match self.profile {
            Profile::Boxed { left, width, amp, k } => {
                if x <= left || x >= left + width {
                    0.0
                } else {
                    amp * k * (k * (x - left)).cos()
                }
            }
            Profile::Bound {
                center,
                a,
                even,
                amp,
                k,
                kappa,
            } => {
                let u = x - center;
                if u.abs() <= a {
                    if even {
                        -amp * k * (k * u).sin()
                    } else {
                        amp * k * (k * u).cos()
                    }
                } else {
                    -kappa * u.signum() * self.value(x)
                }
            }
        }
    }

    /// Points where the wavefunction or its derivative may be non-smooth,
    /// together with the support bounds.
    pub fn breakpoints(&self) -> Vec<f64> {
        let (lo, hi) = self.support;
        match self.profile {
            Profile::Boxed { .. } => vec![lo, hi],
            Profile::Bound { center, a, .. } => vec![lo, center - a, center + a, hi],
        }
    }

    /// `∫ |ψ|² dx` over the support.
    pub fn norm_squared(&self, quad: &Quadrature) -> Result<f64> {
        quad.integrate(|x| self.value(x).powi(2), &self.breakpoints())
    }
}

/// `ψₙ(x) = √(1/ε) sin(nπ (x − (c − ε)) / 2ε)` inside the well, zero outside,
/// with `Eₙ = n²π²ħ² / (2m (2ε)²)`.
pub fn infinite_well_eigenstate(w: &WellSpec, n: u32) -> Result<Eigenstate> {
    w.validate()?;
    if !w.depth.is_infinite() {
        return Err(Error::domain("infinite_well_eigenstate needs an infinite well"));
    }
    if n < 1 {
        return Err(Error::domain("quantum number must be at least 1"));
    }
    let width = 2.0 * w.half_width;
    let k = n as f64 * PI / width;
    Ok(Eigenstate {
        n,
        energy: (w.hbar * k).powi(2) / (2.0 * w.mass),
        hbar: w.hbar,
        profile: Profile::Boxed {
            left: w.left_edge(),
            width,
            amp: (1.0 / w.half_width).sqrt(),
            k,
        },
        support: (w.left_edge(), w.right_edge()),
    })
}

/// Bisection on a sign-changing bracket, stopping when the bracket is
/// narrower than `tol`.
pub(crate) fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::Numeric(format!("no sign change on [{lo}, {hi}]")));
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// All bound states of a finite square well, lowest energy first.
///
/// With `z = k a` and `z₀ = a √(2 m V₀) / ħ`, even states solve
/// `z tan z = √(z₀² − z²)` and odd states `−z cot z = √(z₀² − z²)`. Both are
/// rewritten without poles and bracketed on the branches `[jπ, jπ + π/2]`
/// and `[jπ + π/2, (j + 1)π]` below `z₀`.
pub fn finite_well_bound_states(w: &WellSpec) -> Result<Vec<Eigenstate>> {
    w.validate()?;
    let v0 = match w.depth {
        Depth::Finite(v) => v,
        Depth::Infinite => {
            return Err(Error::domain("finite_well_bound_states needs a finite depth"))
        }
    };
    let a = w.half_width;
    let z0 = a * (2.0 * w.mass * v0).sqrt() / w.hbar;
    let outside = |z: f64| (z0 * z0 - z * z).max(0.0).sqrt();
    let even = |z: f64| z * z.sin() - outside(z) * z.cos();
    let odd = |z: f64| z * z.cos() + outside(z) * z.sin();

    let mut roots: Vec<(f64, bool)> = Vec::new();
    let mut j = 0.0;
    while j * PI < z0 {
        let lo = j * PI;
        let mid = lo + 0.5 * PI;
        roots.push((bisect(even, lo, mid.min(z0), ROOT_TOL)?, true));
        if mid < z0 {
            roots.push((bisect(odd, mid, (lo + PI).min(z0), ROOT_TOL)?, false));
        }
        j += 1.0;
    }

    let mut states = Vec::with_capacity(roots.len());
    for (z, is_even) in roots {
        let kappa_a = outside(z);
        if kappa_a <= 0.0 || z <= 0.0 {
            // root sits at the continuum edge; not a normalizable state
            continue;
        }
        let k = z / a;
        let kappa = kappa_a / a;
        let (edge, norm) = if is_even {
            let c = (k * a).cos();
            (c.abs(), a + (2.0 * k * a).sin() / (2.0 * k) + c * c / kappa)
        } else {
            let s = (k * a).sin();
            (s.abs(), a - (2.0 * k * a).sin() / (2.0 * k) + s * s / kappa)
        };
        let amp = 1.0 / norm.sqrt();
        let peak = if is_even || k * a >= 0.5 * PI { 1.0 } else { edge };
        let tail = ((edge / peak) / TAIL_CUTOFF).ln().max(0.0) / kappa;
        states.push(Eigenstate {
            n: states.len() as u32 + 1,
            energy: (w.hbar * k).powi(2) / (2.0 * w.mass),
            hbar: w.hbar,
            profile: Profile::Bound {
                center: w.center,
                a,
                even: is_even,
                amp,
                k,
                kappa,
            },
            support: (w.left_edge() - tail, w.right_edge() + tail),
        });
    }
    Ok(states)
}

/// State `n` of the well, whichever kind it is.
pub fn eigenstate(w: &WellSpec, n: u32) -> Result<Eigenstate> {
    match w.depth {
        Depth::Infinite => infinite_well_eigenstate(w, n),
        Depth::Finite(_) => {
            if n < 1 {
                return Err(Error::domain("quantum number must be at least 1"));
            }
            let states = finite_well_bound_states(w)?;
            let count = states.len();
            states.into_iter().nth(n as usize - 1).ok_or_else(|| {
                Error::domain(format!("the well has {count} bound states; n = {n} requested"))
            })
        }
    }
}

/// `∫ f(x) g(x) dx` over the hull of both supports.
///
/// States that vanish outside disjoint supports give exactly zero.
pub fn overlap(f: &Eigenstate, g: &Eigenstate, quad: &Quadrature) -> Result<f64> {
    let (flo, fhi) = f.support;
    let (glo, ghi) = g.support;
    if f.is_compact() && g.is_compact() && (fhi <= glo || ghi <= flo) {
        return Ok(0.0);
    }
    let mut points = f.breakpoints();
    points.extend(g.breakpoints());
    quad.integrate(|x| f.value(x) * g.value(x), &points)
        .map_err(|e| Error::Numeric(format!("overlap of states n={} and n={}: {e}", f.n, g.n)))
}

/// `⟨ψ₁(a)ψ₂(b) | ψ₁(b)ψ₂(a)⟩`, factored into the two single-particle
/// cross integrals. For real states both factors equal `overlap(ψ₁, ψ₂)`.
pub fn interference_term(psi1: &Eigenstate, psi2: &Eigenstate, quad: &Quadrature) -> Result<f64> {
    let first = overlap(psi1, psi2, quad)?;
    let second = overlap(psi2, psi1, quad)?;
    Ok(first * second)
}

/// `Δx · Δp` in units of ħ.
///
/// For a real bound state `⟨p⟩ = 0` and `⟨p²⟩ = ħ² ∫ |ψ'|² dx`.
pub fn uncertainty_product(e: &Eigenstate, quad: &Quadrature) -> Result<f64> {
    let pts = e.breakpoints();
    let density = |x: f64| e.value(x).powi(2);
    let norm = quad.integrate(density, &pts)?;
    let mean = quad.integrate(|x| x * density(x), &pts)? / norm;
    let var_x = quad.integrate(|x| (x - mean).powi(2) * density(x), &pts)? / norm;
    let grad = quad.integrate(|x| e.derivative(x).powi(2), &pts)? / norm;
    let product = (var_x * grad).sqrt();
    if product.is_finite() && grad > 0.0 {
        Ok(product)
    } else {
        Err(Error::Numeric(format!(
            "momentum spread of state n={} is not resolvable",
            e.n
        )))
    }
}

/// `λ = h / |p|` with `h = 2πħ`.
pub fn debroglie_wavelength(p: f64, hbar: f64) -> Result<f64> {
    if p == 0.0 || !p.is_finite() {
        return Err(Error::domain("momentum must be finite and non-zero"));
    }
    Ok(2.0 * PI * hbar / p.abs())
}
