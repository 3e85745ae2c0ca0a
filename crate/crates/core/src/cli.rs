//! Command-line front end. Every command reads an optional JSON input, runs
//! one of the library checks and writes a JSON report (CSV for sweeps).
//!
//! Exit status: 0 when the run succeeds, 1 when a check it performs fails,
//! 2 on usage, parse or input errors.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::cloud::{cloud, clouds_intersect};
use crate::error::{Error, Result};
use crate::lattice::{build_cloud_lattice, LatticeDoc, LatticeReport, DEFAULT_ENUMERATION_BOUND};
use crate::nqm::{validate_structure, StructureDoc, MATRIX_TOL};
use crate::qset::{Kind, Qset, Universe};
use crate::topology::{hausdorff_report, verify_axioms_with, AxiomCheck, TopologyDoc};
use crate::universe::{qset_to_map, UniverseDoc};
use crate::wells::{
    eigenstate, interference_term, probability_decomposition_residual, separation_sweep,
    uncertainty_product, write_csv, Depth, Grid, Quadrature, TwoParticleState, WellSpec,
};

#[derive(Debug, Parser)]
#[command(name = "qsep", version, about = "Quasi-sets, clouds and two-well interference")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Matrix tolerance for nqm-validate, absolute quadrature tolerance for
    /// the wells commands.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Swap theorems, cloud collapse and disjoint cores on a demo universe.
    QsetDemo {
        /// Universe document to use instead of the built-in one.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Distributivity and modularity of a lattice or of a cloud lattice.
    CloudLattice {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Topology axioms and Hausdorff separation.
    TopologyCheck {
        #[arg(long)]
        input: PathBuf,
        /// Random subfamilies checked for the union axiom on large families.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
    },
    /// Interference term and probability split for a pair of wells.
    WellsInterference {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Interference over a grid of separations and depths, as CSV.
    WellsSweep {
        #[arg(long)]
        input: PathBuf,
    },
    /// Validate a finite-dimensional quantum structure.
    NqmValidate {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Treat both wells as infinitely deep whatever the input says.
    Infinite,
    /// Use the finite depths given in the input.
    Finite,
}

/// The rendered output of a command and whether its checks passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub passed: bool,
}

/// Parse `args` (program name first) and run. Returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config),
        Err(e) => {
            let _ = e.print();
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
    }
}

pub fn run(config: &RunConfig) -> i32 {
    let report = match execute(config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &config.output {
        Some(path) => fs::write(path, &report.body),
        None => io::stdout().lock().write_all(report.body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write report: {e}");
        return 2;
    }
    if report.passed {
        0
    } else {
        1
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Numeric(_) => 1,
        _ => 2,
    }
}

/// Run the configured command and render its report without writing it.
pub fn execute(config: &RunConfig) -> Result<Report> {
    match &config.command {
        Command::QsetDemo { input } => {
            let doc = match input {
                Some(path) => UniverseDoc::from_json(&read(path)?)?,
                None => demo_universe(),
            };
            qset_demo(&doc)
        }
        Command::CloudLattice { input, bound } => cloud_lattice(&read(input)?, *bound),
        Command::TopologyCheck {
            input,
            sample,
            seed,
            bound,
        } => {
            let mut check = AxiomCheck {
                seed: *seed,
                ..AxiomCheck::default()
            };
            if let Some(n) = sample {
                check.sample = *n;
            }
            topology_check(&read(input)?, &check, *bound)
        }
        Command::WellsInterference { input, mode } => {
            wells_interference(&read(input)?, *mode, &quadrature(config))
        }
        Command::WellsSweep { input } => wells_sweep(&read(input)?, &quadrature(config)),
        Command::NqmValidate { input } => {
            nqm_validate(&read(input)?, config.tolerance.unwrap_or(MATRIX_TOL))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display())))
    })
}

fn quadrature(config: &RunConfig) -> Quadrature {
    let mut q = Quadrature::default();
    if let Some(t) = config.tolerance {
        q.abs_tol = t;
    }
    q
}

fn render<T: Serialize>(value: &T, passed: bool) -> Report {
    let mut body = serde_json::to_string_pretty(value).expect("reports always serialize");
    body.push('\n');
    Report { body, passed }
}

fn demo_universe() -> UniverseDoc {
    let u = Universe::builder()
        .quantum("s", 6)
        .classical("person", ["Mary", "Paul", "Peter"])
        .build()
        .expect("demo universe is well formed");
    let a = Qset::empty(&u)
        .with_count("s", 3)
        .and_then(|q| q.with_member("person", "Paul"))
        .and_then(|q| q.with_member("person", "Peter"))
        .expect("demo qset fits the universe");
    UniverseDoc::describe(&u, &BTreeMap::from([("A".to_owned(), a)]))
}

#[derive(Serialize)]
struct DisjointCores {
    cores: Vec<Value>,
    clouds_intersect: bool,
}

/// Swap checks on the qset named `A` (the ambient when there is none), cloud
/// collapse and disjoint cores on each m-atom class of the ambient.
fn qset_demo(doc: &UniverseDoc) -> Result<Report> {
    let loaded = doc.load()?;
    let ambient = &loaded.ambient;
    let u = &loaded.universe;
    let subject = loaded.qsets.get("A").unwrap_or(ambient);

    let mut swap = BTreeMap::new();
    let mut classical = BTreeMap::new();
    let mut collapse = BTreeMap::new();
    let mut cores = BTreeMap::new();
    for sp in u.species() {
        match sp.kind {
            Kind::Quantum => {
                let here = subject.count(&sp.name);
                if here > 0 && here < ambient.count(&sp.name) {
                    swap.insert(sp.name.clone(), subject.swap_indiscernibility_check(&sp.name)?);
                }
                let n = ambient.count(&sp.name);
                if n == 0 {
                    continue;
                }
                let class = Qset::empty(u).with_count(&sp.name, n)?;
                let mut all = true;
                for core in class.subqsets().iter().filter(|c| !c.is_empty()) {
                    all &= cloud(ambient, core)?.extent().count(&sp.name) == n;
                }
                collapse.insert(sp.name.clone(), all);
                if n >= 2 {
                    let parts = class.disjoint_partition(&[n / 2, n / 2])?;
                    let a = cloud(ambient, &parts[0])?;
                    let b = cloud(ambient, &parts[1])?;
                    cores.insert(
                        sp.name.clone(),
                        DisjointCores {
                            cores: parts.iter().map(|p| json!(qset_to_map(p))).collect(),
                            clouds_intersect: clouds_intersect(&a, &b)?,
                        },
                    );
                }
            }
            Kind::Classical => {
                if let Ok(swapped) = subject.swap_element(&sp.name) {
                    classical.insert(sp.name.clone(), json!({
                        "swapped": qset_to_map(&swapped),
                        "equal": swapped == *subject,
                    }));
                }
            }
        }
    }
    let passed = swap.values().all(|&b| b)
        && collapse.values().all(|&b| b)
        && classical.values().all(|c| c["equal"] == false)
        && cores.values().all(|c| c.clouds_intersect);
    let report = json!({
        "ambient": qset_to_map(ambient),
        "subject": qset_to_map(subject),
        "qcard": subject.qcard(),
        "swap_indiscernible": swap,
        "classical_swap": classical,
        "cloud_collapse": collapse,
        "disjoint_cores": cores,
    });
    Ok(render(&report, passed))
}

fn cloud_lattice(text: &str, bound: usize) -> Result<Report> {
    let value: Value = serde_json::from_str(text)?;
    let report = if value.get("covers").is_some() {
        let doc: LatticeDoc = serde_json::from_value(value)?;
        let lattice = doc.build()?;
        json!({
            "source": "lattice",
            "elements": lattice.labels(),
            "report": LatticeReport::of(&lattice),
        })
    } else {
        let doc: UniverseDoc = serde_json::from_value(value)?;
        let loaded = doc.load()?;
        let cl = build_cloud_lattice(&loaded.ambient, bound)?;
        json!({
            "source": "clouds",
            "ambient": qset_to_map(&loaded.ambient),
            "elements": cl.lattice.labels(),
            "report": LatticeReport::of(&cl.lattice),
        })
    };
    Ok(render(&report, true))
}

fn topology_check(text: &str, check: &AxiomCheck, bound: usize) -> Result<Report> {
    let doc: TopologyDoc = serde_json::from_str(text)?;
    let t = doc.build(bound)?;
    let axioms = verify_axioms_with(&t, check);
    let hausdorff = hausdorff_report(&t);
    let passed = axioms.ok;
    let report = json!({
        "carrier": qset_to_map(t.carrier()),
        "opens": t.opens().len(),
        "discrete": t.is_discrete(),
        "axioms": axioms,
        "hausdorff": hausdorff.hausdorff,
        "failing_pairs": hausdorff.failing_pairs,
    });
    Ok(render(&report, passed))
}

fn default_n() -> u32 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    wells: Vec<WellSpec>,
    #[serde(default = "default_n")]
    n: u32,
}

impl PairDoc {
    fn pair(&self) -> Result<[WellSpec; 2]> {
        match self.wells.as_slice() {
            [a, b] => Ok([*a, *b]),
            other => Err(Error::schema("wells", format!("expected 2 wells, got {}", other.len()))),
        }
    }
}

fn wells_interference(text: &str, mode: Mode, quad: &Quadrature) -> Result<Report> {
    let doc: PairDoc = serde_json::from_str(text)?;
    let mut wells = doc.pair()?;
    for (i, w) in wells.iter_mut().enumerate() {
        match mode {
            Mode::Infinite => *w = w.with_depth(Depth::Infinite),
            Mode::Finite if w.depth.is_infinite() => {
                return Err(Error::schema(
                    format!("wells[{i}].depth"),
                    "finite mode needs a numeric depth",
                ))
            }
            Mode::Finite => {}
        }
    }
    let psi1 = eigenstate(&wells[0], doc.n)?;
    let psi2 = eigenstate(&wells[1], doc.n)?;
    let interference = interference_term(&psi1, &psi2, quad)?;
    let residual =
        probability_decomposition_residual(&TwoParticleState::antisymmetric(psi1, psi2), &Grid::default())?;
    let separated = wells[0].non_overlapping(&wells[1]);
    let passed = !(mode == Mode::Infinite && separated) || (interference == 0.0 && residual <= 1e-12);
    let report = json!({
        "mode": mode,
        "n": doc.n,
        "wells": wells,
        "non_overlapping": separated,
        "energies": [psi1.energy(), psi2.energy()],
        "uncertainty": [uncertainty_product(&psi1, quad)?, uncertainty_product(&psi2, quad)?],
        "interference": interference,
        "residual": residual,
    });
    Ok(render(&report, passed))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepDoc {
    wells: Vec<WellSpec>,
    #[serde(default = "default_n")]
    n: u32,
    separations: Vec<f64>,
    depths: Vec<Depth>,
}

fn wells_sweep(text: &str, quad: &Quadrature) -> Result<Report> {
    let doc: SweepDoc = serde_json::from_str(text)?;
    let base = PairDoc {
        wells: doc.wells,
        n: doc.n,
    }
    .pair()?;
    let rows = separation_sweep(&base, &doc.separations, &doc.depths, doc.n, quad, &Grid::default())?;
    let mut out = Vec::new();
    write_csv(&rows, &mut out)?;
    Ok(Report {
        body: String::from_utf8(out).expect("CSV of numbers is UTF-8"),
        passed: true,
    })
}

fn nqm_validate(text: &str, tol: f64) -> Result<Report> {
    let doc: StructureDoc = serde_json::from_str(text)?;
    let report = validate_structure(&doc.build()?, tol);
    let passed = report.ok;
    Ok(render(&report, passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> std::result::Result<RunConfig, clap::Error> {
        RunConfig::try_parse_from(std::iter::once("qsep").chain(args.iter().copied()))
    }

    #[test]
    fn unknown_command_is_a_usage_error() {
        assert!(parse(&["frobnicate"]).is_err());
        assert_eq!(main_with_args(["qsep", "frobnicate"]), 2);
        assert!(parse(&["wells-interference", "--input", "x.json", "--mode", "deep"]).is_err());
    }

    #[test]
    fn demo_passes_and_is_stable() {
        let config = parse(&["qset-demo"]).unwrap();
        let a = execute(&config).unwrap();
        let b = execute(&config).unwrap();
        assert!(a.passed);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a.body).unwrap();
        assert_eq!(v["swap_indiscernible"]["s"], true);
        assert_eq!(v["classical_swap"]["person"]["equal"], false);
        assert_eq!(v["disjoint_cores"]["s"]["clouds_intersect"], true);
        assert_eq!(v["cloud_collapse"]["s"], true);
    }

    #[test]
    fn finite_mode_needs_numeric_depth() {
        let text = r#"{"wells": [{"center": -2, "half_width": 0.5, "depth": "inf"},
                                  {"center": 2, "half_width": 0.5, "depth": 10}]}"#;
        let err = wells_interference(text, Mode::Finite, &Quadrature::default()).unwrap_err();
        assert!(err.to_string().contains("wells[0].depth"));
        let ok = wells_interference(text, Mode::Infinite, &Quadrature::default()).unwrap();
        assert!(ok.passed);
    }

    #[test]
    fn wrong_number_of_wells() {
        let text = r#"{"wells": [{"center": 0, "half_width": 0.5, "depth": "inf"}]}"#;
        assert!(matches!(
            wells_interference(text, Mode::Infinite, &Quadrature::default()),
            Err(Error::Schema { .. })
        ));
    }
}
