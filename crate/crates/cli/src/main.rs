mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use quadalg::algebra::{
    casimir_eigenvalue, casimir_value, dimension_of, enumerate_params, identify_class,
    ClassId, ClassParams, Identification, LieReading, Mode, ParamBox, ReadingStatus,
};
use quadalg::diffop::{realization_for, verify_equivalence, EquivalenceReport};
use quadalg::expr::{parse_spec, print_spec};
use quadalg::fock::{invariant_block, verify_central, verify_schwinger, CentralReport, FockSpace};
use quadalg::rep::dynamics::{spectral_asymmetry, tavis_cummings_matrix, TcParams};
use quadalg::rep::{build_rep, casimir_diag, casimir_report, verify_relations};
use quadalg::spectra::{DegeneracyRecord, PartitionRecord};
use quadalg::{Error, Rational};

use render::{json, pairs, Format, Grid};

const TC_TOL: f64 = 1e-12;

#[derive(Parser)]
#[command(
    name = "quadalg",
    version,
    about = "Exact representations and realizations of three-dimensional quadratic algebras"
)]
struct Cli {
    /// Output format (default depends on the command)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the class and (j or k, l) behind [Q+,Q-] = a*Q0^2 + b*Q0 + c
    Identify {
        /// Right-hand side, e.g. "-3*Q0^2 - 3*Q0 + 2"
        #[arg(long, allow_hyphen_values = true)]
        spec: String,
    },
    /// Matrix irreps
    #[command(subcommand)]
    Rep(RepCommand),
    /// Bosonic Fock-space realizations
    #[command(subcommand)]
    Fock(FockCommand),
    /// Differential-operator realizations
    #[command(subcommand)]
    Diffop(DiffopCommand),
    /// Level degeneracies of the 1:1:2 oscillator, three ways
    Degeneracy {
        #[arg(long)]
        max_n: u64,
    },
    /// Level counts up to interchange of the first two modes, three ways
    Partitions {
        #[arg(long)]
        max_n: u64,
    },
    /// Tavis-Cummings spectrum in a Q-(2) irrep
    Tc {
        #[arg(long, allow_hyphen_values = true)]
        j: Rational,
        #[arg(long, allow_hyphen_values = true)]
        l: Rational,
        #[arg(long, allow_hyphen_values = true)]
        omega: Rational,
        #[arg(long, allow_hyphen_values = true)]
        g: Rational,
    },
    /// Verify every lattice point of a class in a box
    Sweep {
        #[arg(long)]
        class: ClassId,
        #[arg(long, allow_hyphen_values = true)]
        spin_max: Rational,
        #[arg(long)]
        lattice_max: u64,
        /// Truncation for infinite irreps
        #[arg(long, default_value_t = 32)]
        nmax: usize,
    },
}

#[derive(Subcommand)]
enum RepCommand {
    /// Build the exact matrices
    Build(ParamArgs),
    /// Check the defining relations exactly
    Verify(ParamArgs),
    /// Casimir diagonal against its eigenvalue and the quoted closed form
    Casimir(ParamArgs),
}

#[derive(Subcommand)]
enum FockCommand {
    /// Central elements (and optionally one invariant block) in a cutoff box
    Check {
        #[arg(long)]
        class: ClassId,
        /// Per-mode cutoffs, e.g. 8,8,8 (two values for su2/su11)
        #[arg(long, value_delimiter = ',', required = true)]
        cutoffs: Vec<u32>,
        #[arg(long, visible_aliases = ["j", "k"], allow_hyphen_values = true)]
        spin: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        l: Option<Rational>,
        #[arg(long)]
        nmax: Option<usize>,
    },
}

#[derive(Subcommand)]
enum DiffopCommand {
    /// Compare the differential realization with the matrix irrep
    Check(ParamArgs),
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    class: ClassId,
    /// j for su2, Q-2, Q+2; k otherwise
    #[arg(long, visible_aliases = ["j", "k"], allow_hyphen_values = true)]
    spin: Rational,
    /// Eigenvalue of L (derived for su2 and su11)
    #[arg(long, allow_hyphen_values = true)]
    l: Option<Rational>,
    /// Last kept state of an infinite irrep
    #[arg(long)]
    nmax: Option<usize>,
    /// Accept rational k outside {1/2, 1, 3/2, ...}
    #[arg(long)]
    extended: bool,
}

/// Usage, parse and parameter errors; all exit with status 2.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Outcome {
    text: String,
    passed: bool,
}

fn params_of(class: ClassId, spin: Rational, l: Option<Rational>) -> Result<ClassParams, Failure> {
    match (class, l) {
        (ClassId::Su2, None) => Ok(ClassParams::su2(spin)),
        (ClassId::Su11, None) => Ok(ClassParams::su11(spin)),
        (_, Some(l)) => Ok(ClassParams::new(class, spin, l)),
        (_, None) => Err(Failure::Usage(format!("--l is required for class {class}"))),
    }
}

impl ParamArgs {
    fn params(&self) -> Result<ClassParams, Failure> {
        let p = params_of(self.class, self.spin.clone(), self.l.clone())?;
        let mode = if self.extended { Mode::Extended } else { Mode::Strict };
        p.require(mode)?;
        Ok(p)
    }
}

fn pick(format: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage(format!(
            "format {f:?} is not available for this command"
        )))
    }
}

const JSON_TABLE: &[Format] = &[Format::Json, Format::Table];
const ALL: &[Format] = &[Format::Json, Format::Csv, Format::Table];

fn yes_no(b: bool) -> String {
    if b { "ok" } else { "FAIL" }.to_string()
}

#[derive(Serialize)]
struct IdentifyOut<'a> {
    input: &'a str,
    canonical: String,
    #[serde(flatten)]
    identification: &'a Identification,
}

fn identify(text: &str, format: Option<Format>) -> Result<Outcome, Failure> {
    let format = pick(format, Format::Json, JSON_TABLE)?;
    let spec = parse_spec(text)?;
    let id = identify_class(&spec);
    let passed = id.valid().next().is_some()
        || matches!(id.lie, Some(LieReading::Su2 | LieReading::Su11));
    let text = match format {
        Format::Json => json(&IdentifyOut {
            input: text,
            canonical: print_spec(&spec),
            identification: &id,
        }),
        _ => {
            let mut g = Grid::new(&["class", "l", "central", "spin", "status", "detail"]);
            if let Some(lie) = id.lie {
                g.push(vec![
                    format!("{lie:?}").to_lowercase(),
                    String::new(),
                    String::new(),
                    String::new(),
                    "lie".into(),
                    String::new(),
                ]);
            }
            for i in &id.interpretations {
                let (status, detail) = match &i.status {
                    ReadingStatus::Valid { extended, case } => (
                        "valid".to_string(),
                        match (extended, case) {
                            (true, _) => "extended k".to_string(),
                            (_, Some(c)) => format!("case {c:?}"),
                            _ => String::new(),
                        },
                    ),
                    ReadingStatus::Invalid { diagnostic } => ("invalid".into(), diagnostic.clone()),
                    ReadingStatus::Rejected { reason } => ("rejected".into(), reason.clone()),
                };
                g.push(vec![
                    i.class.to_string(),
                    i.l.to_string(),
                    i.central.to_string(),
                    i.params.as_ref().map(|p| p.spin.to_string()).unwrap_or_default(),
                    status,
                    detail,
                ]);
            }
            format!("[Q+,Q-] = {}\n", print_spec(&spec)) + &g.table()
        }
    };
    Ok(Outcome { text, passed })
}

fn rep(cmd: &RepCommand, format: Option<Format>) -> Result<Outcome, Failure> {
    match cmd {
        RepCommand::Build(args) => {
            let format = pick(format, Format::Json, ALL)?;
            let p = args.params()?;
            let rep = build_rep(&p, args.nmax)?;
            let text = match format {
                Format::Json => json(&rep.export()),
                _ => {
                    let mut g = Grid::new(&["index", "q0", "qplus", "qplus_coeff", "qplus_radicand"]);
                    for i in 0..rep.dim {
                        let e = rep.qplus_sub.get(i);
                        g.push(vec![
                            i.to_string(),
                            rep.q0_diag[i].to_string(),
                            e.map(|e| e.to_string()).unwrap_or_default(),
                            e.map(|e| e.coeff().to_string()).unwrap_or_default(),
                            e.map(|e| e.radicand().to_string()).unwrap_or_default(),
                        ]);
                    }
                    if format == Format::Csv {
                        g.csv()
                    } else {
                        g.table()
                    }
                }
            };
            Ok(Outcome { text, passed: true })
        }
        RepCommand::Verify(args) => {
            let format = pick(format, Format::Json, JSON_TABLE)?;
            let p = args.params()?;
            let report = verify_relations(&build_rep(&p, args.nmax)?)?;
            let text = match format {
                Format::Json => json(&report),
                _ => pairs(&[
                    ("params", p.to_string()),
                    ("structure", print_spec(&report.spec)),
                    ("dim", report.dim.to_string()),
                    ("rows_checked", report.rows_checked.to_string()),
                    (
                        "boundary_row",
                        report.boundary_row.map(|r| r.to_string()).unwrap_or("none".into()),
                    ),
                    (
                        "max_violation",
                        report
                            .max_violation
                            .as_ref()
                            .map(|v| format!("{} row {}: {}", v.relation, v.row, v.residual))
                            .unwrap_or("none".into()),
                    ),
                    ("result", yes_no(report.passed)),
                ]),
            };
            Ok(Outcome {
                text,
                passed: report.passed,
            })
        }
        RepCommand::Casimir(args) => {
            let format = pick(format, Format::Json, JSON_TABLE)?;
            let p = args.params()?;
            let report = casimir_report(&build_rep(&p, args.nmax)?)?;
            let passed = report.passed();
            let text = match format {
                Format::Json => json(&report),
                _ => {
                    let diag: Vec<String> = report.diag.iter().map(|d| d.to_string()).collect();
                    pairs(&[
                        ("params", p.to_string()),
                        ("diag", diag.join(" ")),
                        ("constant", report.constant.to_string()),
                        ("eigenvalue", report.eigenvalue.to_string()),
                        ("closed_form", report.closed_form.to_string()),
                        ("matches_closed_form", report.matches_closed_form.to_string()),
                        ("result", yes_no(passed)),
                    ])
                }
            };
            Ok(Outcome { text, passed })
        }
    }
}

#[derive(Serialize)]
struct BlockCheck {
    params: ClassParams,
    dim: usize,
    matches_matrix_rep: bool,
}

#[derive(Serialize)]
struct FockOut {
    central: CentralReport,
    block: Option<BlockCheck>,
}

fn fock(cmd: &FockCommand, format: Option<Format>) -> Result<Outcome, Failure> {
    let FockCommand::Check {
        class,
        cutoffs,
        spin,
        l,
        nmax,
    } = cmd;
    let format = pick(format, Format::Json, JSON_TABLE)?;
    let space = FockSpace::new(cutoffs)?;
    let central = match class {
        ClassId::Su2 | ClassId::Su11 => verify_schwinger(*class, &space)?,
        _ => verify_central(*class, &space)?,
    };
    let block = match spin {
        Some(_) if matches!(class, ClassId::Su2 | ClassId::Su11) => {
            return Err(Failure::Usage(
                "invariant blocks are available for the three-mode classes only".into(),
            ))
        }
        Some(s) => {
            let p = params_of(*class, s.clone(), l.clone())?;
            p.require(Mode::Extended)?;
            let b = invariant_block(&p, *nmax, &space)?;
            let matches_matrix_rep = b == build_rep(&p, *nmax)?;
            Some(BlockCheck {
                params: p,
                dim: b.dim,
                matches_matrix_rep,
            })
        }
        None => None,
    };
    let passed = central.passed && block.as_ref().is_none_or(|b| b.matches_matrix_rep);
    let out = FockOut { central, block };
    let text = match format {
        Format::Json => json(&out),
        _ => {
            let mut g = Grid::new(&["relation", "checked", "excluded", "nonzero", "result"]);
            for c in &out.central.checks {
                g.push(vec![
                    c.relation.clone(),
                    c.checked_columns.to_string(),
                    c.excluded_columns.to_string(),
                    c.nonzero_entries.to_string(),
                    yes_no(c.nonzero_entries == 0),
                ]);
            }
            if let Some(b) = &out.block {
                g.push(vec![
                    format!("block {}", b.params),
                    b.dim.to_string(),
                    "0".into(),
                    String::new(),
                    yes_no(b.matches_matrix_rep),
                ]);
            }
            g.table()
        }
    };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct DiffopOut {
    q0: String,
    qplus: String,
    qminus: String,
    #[serde(flatten)]
    report: EquivalenceReport,
}

fn diffop(cmd: &DiffopCommand, format: Option<Format>) -> Result<Outcome, Failure> {
    let DiffopCommand::Check(args) = cmd;
    let format = pick(format, Format::Json, JSON_TABLE)?;
    let p = args.params()?;
    let real = realization_for(&p)?;
    let report = verify_equivalence(&p, args.nmax)?;
    let passed = report.passed;
    let out = DiffopOut {
        q0: real.q0.to_string(),
        qplus: real.qplus.to_string(),
        qminus: real.qminus.to_string(),
        report,
    };
    let text = match format {
        Format::Json => json(&out),
        _ => pairs(&[
            ("params", p.to_string()),
            ("Q0", out.q0.clone()),
            ("Q+", out.qplus.clone()),
            ("Q-", out.qminus.clone()),
            ("basis_size", out.report.basis_size.to_string()),
            ("rows_compared", out.report.rows_compared.to_string()),
            ("mismatches", out.report.mismatches.len().to_string()),
            ("result", yes_no(passed)),
        ]),
    };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct DegeneracyRow {
    #[serde(flatten)]
    record: DegeneracyRecord,
    agree: bool,
}

fn degeneracy(max_n: u64, format: Option<Format>) -> Result<Outcome, Failure> {
    let format = pick(format, Format::Csv, ALL)?;
    let records: Vec<DegeneracyRecord> = (0..=max_n).map(DegeneracyRecord::compute).collect();
    let passed = records.iter().all(DegeneracyRecord::agrees);
    let text = match format {
        Format::Json => json(
            &records
                .into_iter()
                .map(|r| DegeneracyRow {
                    agree: r.agrees(),
                    record: r,
                })
                .collect::<Vec<_>>(),
        ),
        _ => {
            let mut g = Grid::new(&["N", "l", "closed", "brute", "via_reps", "agree", "k_list"]);
            for r in &records {
                g.push(vec![
                    r.n.to_string(),
                    r.l.to_string(),
                    r.closed.to_string(),
                    r.brute.to_string(),
                    r.via_reps.to_string(),
                    yes_no(r.agrees()),
                    r.k_list_text(),
                ]);
            }
            if format == Format::Csv {
                g.csv()
            } else {
                g.table()
            }
        }
    };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct PartitionRow {
    #[serde(flatten)]
    record: PartitionRecord,
    agree: bool,
}

fn partitions(max_n: u64, format: Option<Format>) -> Result<Outcome, Failure> {
    let format = pick(format, Format::Csv, ALL)?;
    let records: Vec<PartitionRecord> = (0..=max_n).map(PartitionRecord::compute).collect();
    let passed = records.iter().all(PartitionRecord::agrees);
    let text = match format {
        Format::Json => json(
            &records
                .into_iter()
                .map(|r| PartitionRow {
                    agree: r.agrees(),
                    record: r,
                })
                .collect::<Vec<_>>(),
        ),
        _ => {
            let mut g = Grid::new(&["N", "closed", "brute", "dim_sum", "agree"]);
            for r in &records {
                g.push(vec![
                    r.n.to_string(),
                    r.closed.to_string(),
                    r.brute.to_string(),
                    r.dim_sum.to_string(),
                    yes_no(r.agrees()),
                ]);
            }
            if format == Format::Csv {
                g.csv()
            } else {
                g.table()
            }
        }
    };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct TcOut {
    params: ClassParams,
    omega: Rational,
    g: Rational,
    eigenvalues: Vec<f64>,
    asymmetry: f64,
}

fn tc(
    j: &Rational,
    l: &Rational,
    omega: &Rational,
    g: &Rational,
    format: Option<Format>,
) -> Result<Outcome, Failure> {
    let format = pick(format, Format::Csv, ALL)?;
    let p = ClassParams::new(ClassId::QMinus2, j.clone(), l.clone());
    p.require(Mode::Strict)?;
    let params = TcParams::new(omega.clone(), g.clone())?;
    let spectrum = tavis_cummings_matrix(&p, &params)?;
    let asymmetry = spectral_asymmetry(&spectrum, &params);
    let scale = spectrum.eigenvalues.iter().fold(1.0f64, |m, e| m.max(e.abs()));
    let passed = asymmetry <= TC_TOL * scale;
    let text = match format {
        Format::Json => json(&TcOut {
            params: p,
            omega: omega.clone(),
            g: g.clone(),
            eigenvalues: spectrum.eigenvalues,
            asymmetry,
        }),
        _ => {
            let mut grid = Grid::new(&["index", "value"]);
            for (i, e) in spectrum.eigenvalues.iter().enumerate() {
                grid.push(vec![i.to_string(), e.to_string()]);
            }
            if format == Format::Csv {
                grid.csv()
            } else {
                grid.table()
            }
        }
    };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct SweepRow {
    params: ClassParams,
    dim: String,
    relations: bool,
    casimir: bool,
    diffop: bool,
    closed_form: bool,
}

#[derive(Serialize)]
struct SweepOut {
    rows: Vec<SweepRow>,
    total: usize,
    failing: usize,
}

fn sweep_one(p: &ClassParams, nmax: usize) -> Result<SweepRow, Error> {
    let rep = build_rep(p, Some(nmax))?;
    let relations = verify_relations(&rep)?.passed;
    let diag = casimir_diag(&rep)?;
    let eig = casimir_eigenvalue(p)?;
    let closed = casimir_value(p)?;
    Ok(SweepRow {
        params: p.clone(),
        dim: dimension_of(p)?.to_string(),
        relations,
        casimir: diag.iter().all(|d| *d == eig),
        diffop: verify_equivalence(p, Some(nmax))?.passed,
        closed_form: diag.iter().all(|d| *d == closed),
    })
}

fn sweep(
    class: ClassId,
    spin_max: &Rational,
    lattice_max: u64,
    nmax: usize,
    format: Option<Format>,
) -> Result<Outcome, Failure> {
    let format = pick(format, Format::Table, ALL)?;
    let params = enumerate_params(class, &ParamBox::new(spin_max.clone(), lattice_max));
    let rows = params
        .iter()
        .map(|p| sweep_one(p, nmax))
        .collect::<Result<Vec<_>, _>>()?;
    let failing = rows
        .iter()
        .filter(|r| !(r.relations && r.casimir && r.diffop))
        .count();
    let out = SweepOut {
        total: rows.len(),
        failing,
        rows,
    };
    let text = match format {
        Format::Json => json(&out),
        _ => {
            let mut g = Grid::new(&[
                "class", "spin", "l", "dim", "relations", "casimir", "diffop", "closed_form",
            ]);
            for r in &out.rows {
                g.push(vec![
                    r.params.class.to_string(),
                    r.params.spin.to_string(),
                    r.params.l.to_string(),
                    r.dim.clone(),
                    yes_no(r.relations),
                    yes_no(r.casimir),
                    yes_no(r.diffop),
                    if r.closed_form { "match" } else { "differs" }.to_string(),
                ]);
            }
            if format == Format::Csv {
                g.csv()
            } else {
                g.table() + &format!("{} params, {} failing\n", out.total, out.failing)
            }
        }
    };
    Ok(Outcome {
        text,
        passed: failing == 0,
    })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Identify { spec } => identify(spec, f),
        Command::Rep(cmd) => rep(cmd, f),
        Command::Fock(cmd) => fock(cmd, f),
        Command::Diffop(cmd) => diffop(cmd, f),
        Command::Degeneracy { max_n } => degeneracy(*max_n, f),
        Command::Partitions { max_n } => partitions(*max_n, f),
        Command::Tc { j, l, omega, g } => tc(j, l, omega, g, f),
        Command::Sweep {
            class,
            spin_max,
            lattice_max,
            nmax,
        } => sweep(*class, spin_max, *lattice_max, *nmax, f),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &outcome.text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            if let Err(msg) = written {
                eprintln!("error: {msg}");
                return ExitCode::from(2);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
