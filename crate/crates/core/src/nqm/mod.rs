//! Finite-dimensional model of a non-relativistic quantum mechanics: a
//! collection of systems, Hilbert spaces with Hermitian observables and
//! unitary operators, and Borel sets of outcomes. Born probabilities come
//! from the spectral decomposition of an observable.

mod borel;

use std::sync::OnceLock;

use nalgebra::{Complex, DMatrix, DVector};
use serde::{Deserialize, Serialize};

pub use borel::{Borelian, Interval};

use crate::error::{Error, Result};
use crate::qset::Qset;
use crate::universe::UniverseDoc;

pub type C64 = Complex<f64>;
pub type CMatrix = DMatrix<C64>;
pub type CVector = DVector<C64>;

/// Eigenvalues closer than this are treated as one degenerate eigenvalue.
pub const DEGENERACY_TOL: f64 = 1e-9;
/// Allowed deviation of `‖ψ‖²` from 1.
pub const NORMALIZATION_TOL: f64 = 1e-10;
/// Default tolerance for the Hermitian and unitary checks.
pub const MATRIX_TOL: f64 = 1e-10;

fn ensure_square(m: &CMatrix, what: &str) -> Result<()> {
    if m.is_square() {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "{what} must be square, got {}x{}",
            m.nrows(),
            m.ncols()
        )))
    }
}

fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// `max |A − A†| ≤ tol`
pub fn is_hermitian(a: &CMatrix, tol: f64) -> Result<bool> {
    ensure_square(a, "matrix")?;
    Ok(max_abs(&(a - a.adjoint())) <= tol)
}

/// `max |U U† − I| ≤ tol`
pub fn is_unitary(u: &CMatrix, tol: f64) -> Result<bool> {
    ensure_square(u, "matrix")?;
    let id = CMatrix::identity(u.nrows(), u.ncols());
    Ok(max_abs(&(u * u.adjoint() - id)) <= tol)
}

/// One eigenvalue with an orthonormal basis of its eigenspace.
#[derive(Clone, Debug)]
pub struct Eigenspace {
    pub value: f64,
    pub basis: Vec<CVector>,
}

/// Eigenspaces in increasing order of eigenvalue.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub eigenspaces: Vec<Eigenspace>,
}

/// A Hermitian matrix with a lazily computed, cached spectrum.
#[derive(Debug)]
pub struct Observable {
    matrix: CMatrix,
    spectrum: OnceLock<Spectrum>,
}

impl Clone for Observable {
    fn clone(&self) -> Self {
        Observable {
            matrix: self.matrix.clone(),
            spectrum: self.spectrum.clone(),
        }
    }
}

impl Observable {
    pub fn new(matrix: CMatrix, tol: f64) -> Result<Self> {
        if !is_hermitian(&matrix, tol)? {
            return Err(Error::domain("observable is not Hermitian"));
        }
        Ok(Observable {
            matrix,
            spectrum: OnceLock::new(),
        })
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn dimension(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn spectrum(&self) -> &Spectrum {
        self.spectrum.get_or_init(|| {
            let eig = self.matrix.clone().symmetric_eigen();
            let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
            order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
            let mut eigenspaces: Vec<Eigenspace> = Vec::new();
            let mut members: Vec<f64> = Vec::new();
            for i in order {
                let value = eig.eigenvalues[i];
                let vector = eig.eigenvectors.column(i).into_owned();
                match eigenspaces.last_mut() {
                    Some(last) if value - members.last().copied().unwrap_or(value) <= DEGENERACY_TOL => {
                        members.push(value);
                        last.basis.push(vector);
                        last.value = members.iter().sum::<f64>() / members.len() as f64;
                    }
                    _ => {
                        members = vec![value];
                        eigenspaces.push(Eigenspace {
                            value,
                            basis: vec![vector],
                        });
                    }
                }
            }
            Spectrum { eigenspaces }
        })
    }
}

/// Probability that measuring `a` in state `psi` gives a value in `delta`:
/// the squared norm of the projection of `psi` onto the eigenspaces whose
/// eigenvalue lies in `delta`.
pub fn born_probability(psi: &CVector, a: &Observable, delta: &Borelian) -> Result<f64> {
    if psi.len() != a.dimension() {
        return Err(Error::domain(format!(
            "state has dimension {} but the observable acts on {}",
            psi.len(),
            a.dimension()
        )));
    }
    let norm2 = psi.norm_squared();
    if (norm2 - 1.0).abs() > NORMALIZATION_TOL {
        return Err(Error::domain(format!("state is not normalized (‖ψ‖² = {norm2})")));
    }
    Ok(a.spectrum()
        .eigenspaces
        .iter()
        .filter(|e| delta.contains(e.value))
        .flat_map(|e| &e.basis)
        .map(|v| v.dotc(psi).norm_sqr())
        .sum())
}

/// One Hilbert space of the structure with its operators.
#[derive(Clone, Debug)]
pub struct HilbertSpace {
    pub dimension: usize,
    pub observables: Vec<CMatrix>,
    pub unitaries: Vec<CMatrix>,
}

/// `⟨S, {Hᵢ}, {Âᵢⱼ}, {Ûᵢₖ}, B(ℝ)⟩` at desk scale. Operators are kept raw
/// so that validation can report bad ones instead of refusing to build.
#[derive(Clone, Debug)]
pub struct NqmStructure {
    pub systems: Qset,
    pub spaces: Vec<HilbertSpace>,
    pub borelians: Vec<Vec<Interval>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clauses {
    pub systems: bool,
    pub spaces: bool,
    pub observables: bool,
    pub unitaries: bool,
    pub borel: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseFailure {
    pub clause: u8,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub clauses: Clauses,
    pub failures: Vec<ClauseFailure>,
}

/// Check the five components of the structure, collecting every failure.
pub fn validate_structure(s: &NqmStructure, tol: f64) -> ValidationReport {
    let mut failures = Vec::new();
    let mut fail = |clause: u8, detail: String| failures.push(ClauseFailure { clause, detail });

    if s.systems.is_empty() {
        fail(1, "the collection of systems is empty".into());
    }

    if s.spaces.is_empty() {
        fail(2, "no Hilbert spaces".into());
    }
    for (i, h) in s.spaces.iter().enumerate() {
        if h.dimension == 0 {
            fail(2, format!("spaces[{i}] has dimension 0"));
        }
    }

    let shape_ok = |m: &CMatrix, d: usize| m.nrows() == d && m.ncols() == d;
    for (i, h) in s.spaces.iter().enumerate() {
        for (j, a) in h.observables.iter().enumerate() {
            if !shape_ok(a, h.dimension) {
                fail(3, format!(
                    "spaces[{i}].observables[{j}] is {}x{}, expected {d}x{d}",
                    a.nrows(),
                    a.ncols(),
                    d = h.dimension
                ));
            } else if !is_hermitian(a, tol).unwrap_or(false) {
                fail(3, format!("spaces[{i}].observables[{j}] is not Hermitian"));
            }
        }
        for (k, u) in h.unitaries.iter().enumerate() {
            if !shape_ok(u, h.dimension) {
                fail(4, format!(
                    "spaces[{i}].unitaries[{k}] is {}x{}, expected {d}x{d}",
                    u.nrows(),
                    u.ncols(),
                    d = h.dimension
                ));
            } else if !is_unitary(u, tol).unwrap_or(false) {
                fail(4, format!("spaces[{i}].unitaries[{k}] is not unitary"));
            }
        }
    }

    let line = Borelian::real_line();
    if !(line.contains(0.0) && line.contains(-1e300) && line.contains(1e300))
        || Borelian::empty().contains(0.0)
    {
        fail(5, "Borel constructors are inconsistent".into());
    }
    for (i, b) in s.borelians.iter().enumerate() {
        if let Err(e) = Borelian::new(b.clone()) {
            fail(5, format!("borelians[{i}]: {e}"));
        }
    }

    let has = |c: u8| failures.iter().any(|f| f.clause == c);
    let clauses = Clauses {
        systems: !has(1),
        spaces: !has(2),
        observables: !has(3),
        unitaries: !has(4),
        borel: !has(5),
    };
    ValidationReport {
        ok: failures.is_empty(),
        clauses,
        failures,
    }
}

/// Matrices in JSON are nested row arrays of `[re, im]` pairs.
pub type MatrixDoc = Vec<Vec<[f64; 2]>>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpaceDoc {
    pub dimension: usize,
    #[serde(default)]
    pub observables: Vec<MatrixDoc>,
    #[serde(default)]
    pub unitaries: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureDoc {
    pub systems: UniverseDoc,
    pub spaces: Vec<SpaceDoc>,
    #[serde(default)]
    pub borelians: Vec<Vec<Interval>>,
}

pub fn matrix_from_doc(rows: &MatrixDoc, field: &str) -> Result<CMatrix> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    if let Some(i) = rows.iter().position(|r| r.len() != ncols) {
        return Err(Error::schema(format!("{field}[{i}]"), "ragged matrix row"));
    }
    Ok(CMatrix::from_fn(nrows, ncols, |i, j| {
        let [re, im] = rows[i][j];
        C64::new(re, im)
    }))
}

pub fn matrix_to_doc(m: &CMatrix) -> MatrixDoc {
    m.row_iter()
        .map(|r| r.iter().map(|z| [z.re, z.im]).collect())
        .collect()
}

impl StructureDoc {
    pub fn build(&self) -> Result<NqmStructure> {
        let systems = self.systems.load()?.ambient;
        let mut spaces = Vec::with_capacity(self.spaces.len());
        for (i, sp) in self.spaces.iter().enumerate() {
            let load = |ms: &[MatrixDoc], kind: &str| -> Result<Vec<CMatrix>> {
                ms.iter()
                    .enumerate()
                    .map(|(j, m)| matrix_from_doc(m, &format!("spaces[{i}].{kind}[{j}]")))
                    .collect()
            };
            spaces.push(HilbertSpace {
                dimension: sp.dimension,
                observables: load(&sp.observables, "observables")?,
                unitaries: load(&sp.unitaries, "unitaries")?,
            });
        }
        Ok(NqmStructure {
            systems,
            spaces,
            borelians: self.borelians.clone(),
        })
    }
}
