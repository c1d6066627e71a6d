//! `gcb` - verification and construction tool for finite pointed G-crossed
//! braided categories.
//!
//! Subcommands: `verify`, `zest`, `obstruction`, `roundtrip`, `enumerate`,
//! `decategorify`. Exit codes: 0 all checks pass, 1 axiom failure or
//! unsolvable obstruction, 2 input error.

mod doc;

use clap::{Parser, Subcommand, ValueEnum};
use doc::{Document, Payload};
use gcb_core::cochain::{self, AbelianThreeCocycle, Cochain};
use gcb_core::fingroup::FiniteAbelianGroup;
use gcb_core::gcrossed::{self, GCrossedPointedCategory};
use gcb_core::gray;
use gcb_core::report::{Report, ReportOptions};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const DEFAULT_MAX_TUPLES: usize = 4096;

#[derive(Parser)]
#[command(
    name = "gcb",
    about = "Build and exhaustively verify finite pointed G-crossed braided categories",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportMode {
    /// Keep the first hundred failures per run.
    First,
    /// Keep every failure.
    All,
}

impl From<ReportMode> for ReportOptions {
    fn from(m: ReportMode) -> ReportOptions {
        match m {
            ReportMode::First => ReportOptions::FirstHundred,
            ReportMode::All => ReportOptions::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run every axiom suite that applies to the document.
    Verify {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "first")]
        report: ReportMode,
        /// Verifier threads (deterministic output regardless).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Run even when the tuple count exceeds the work bound.
        #[arg(long)]
        force: bool,
    },
    /// Build the G-crossed extension of a braided base twisted by (mu, omega).
    Zest {
        braided_path: PathBuf,
        /// Group: Z<n>, Z<n>xZ<m>, D<n>, or a path to a group document.
        #[arg(long)]
        group: String,
        /// 2-cocycle document, or "zero".
        #[arg(long)]
        mu: String,
        /// 3-cochain document, "zero", or "solve".
        #[arg(long)]
        omega: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the pushforward obstruction of (braided, group, mu) and whether
    /// a compatible omega exists.
    Obstruction {
        braided_path: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        mu: String,
    },
    /// Check that the Gray-monoid round trip reproduces the category.
    Roundtrip { path: PathBuf },
    /// Count quadratic forms and abelian 3-cocycle classes.
    Enumerate {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "K")]
        k: String,
        #[arg(long, default_value_t = DEFAULT_MAX_TUPLES)]
        bound: usize,
    },
    /// Forget the scalars: write the underlying G-crossed monoid.
    Decategorify {
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Doc(#[from] doc::DocError),
    #[error("{0}")]
    Input(String),
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Verify { path, report, jobs, force } => {
            cmd_verify(&path, report.into(), jobs, force)
        }
        Command::Zest { braided_path, group, mu, omega, out } => {
            cmd_zest(&braided_path, &group, &mu, &omega, &out)
        }
        Command::Obstruction { braided_path, group, mu } => {
            cmd_obstruction(&braided_path, &group, &mu)
        }
        Command::Roundtrip { path } => cmd_roundtrip(&path),
        Command::Enumerate { a, k, bound } => cmd_enumerate(&a, &k, bound),
        Command::Decategorify { path, out } => cmd_decategorify(&path, &out),
    }
}

fn max_tuples() -> usize {
    std::env::var("GCB_MAX_ORDER")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_TUPLES)
}

fn check_work_bound(tuples: usize, force: bool) -> Result<(), CliError> {
    let bound = max_tuples();
    if tuples > bound && !force {
        return Err(CliError::Input(format!(
            "largest axiom class has {tuples} tuples, above the bound {bound} \
             (set GCB_MAX_ORDER or pass --force)"
        )));
    }
    Ok(())
}

fn parse_group(spec: &str) -> Result<gcb_core::fingroup::FiniteGroup, CliError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix('D') {
        if let Ok(n) = rest.parse::<usize>() {
            if n < 3 {
                return Err(CliError::Input("dihedral needs n >= 3".into()));
            }
            return Ok(gcb_core::fingroup::make_dihedral(n));
        }
    }
    if spec.starts_with('Z') {
        let factors: Result<Vec<usize>, _> =
            spec.split('x').map(|p| p.trim_start_matches('Z').parse::<usize>()).collect();
        if let Ok(factors) = factors {
            if !factors.is_empty() && factors.iter().all(|&n| n >= 1) {
                return Ok(FiniteAbelianGroup::new(factors).to_group());
            }
        }
    }
    // otherwise: a path to a group document
    let d = doc::load(Path::new(spec))?;
    match d.payload {
        Payload::Group { group } => Ok(group.build()?),
        _ => Err(CliError::Input(format!("{spec} is not a group document"))),
    }
}

fn parse_abelian(spec: &str) -> Result<FiniteAbelianGroup, CliError> {
    let factors: Result<Vec<usize>, _> =
        spec.split('x').map(|p| p.trim().trim_start_matches('Z').parse::<usize>()).collect();
    match factors {
        Ok(f) if !f.is_empty() && f.iter().all(|&n| n >= 1) => {
            Ok(FiniteAbelianGroup::new(f))
        }
        _ => Err(CliError::Input(format!(
            "cannot parse abelian group {spec}; expected e.g. Z2 or Z2xZ4"
        ))),
    }
}

fn print_report(report: &Report) {
    if report.passed() {
        println!("all axioms hold");
    } else {
        print!("{report}");
    }
}

fn exit_for(report: &Report) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn verify_gcrossed_parallel(
    c: &GCrossedPointedCategory,
    opts: ReportOptions,
    jobs: usize,
) -> Report {
    if jobs <= 1 {
        return c.verify_all(opts);
    }
    // Suite-level parallelism with a deterministic merge order.
    let (monoidal, (action, braiding)) = std::thread::scope(|s| {
        let h1 = s.spawn(|| c.verify_monoidal(opts));
        let h2 = s.spawn(|| c.verify_action(opts));
        let braiding = c.verify_braiding(opts);
        (h1.join().expect("verifier"), (h2.join().expect("verifier"), braiding))
    });
    let mut report = monoidal;
    report.merge(action);
    report.merge(braiding);
    report
}

fn cmd_verify(
    path: &Path,
    opts: ReportOptions,
    jobs: usize,
    force: bool,
) -> Result<ExitCode, CliError> {
    let d = doc::load(path)?;
    let report = match &d.payload {
        Payload::Group { group } => {
            let g = group.build()?;
            let failures = gcb_core::fingroup::check_group_axioms(&g.rows());
            if failures.is_empty() {
                println!("group axioms hold (order {})", g.order());
                return Ok(ExitCode::SUCCESS);
            }
            for f in &failures {
                println!("group axiom failure: {f:?}");
            }
            return Ok(ExitCode::from(1));
        }
        Payload::Cochain { .. } => {
            let c = doc::as_cochain(&d.payload)?;
            if cochain::is_cocycle(&c) {
                println!("cocycle condition holds (degree {})", c.degree());
                return Ok(ExitCode::SUCCESS);
            }
            println!("coboundary of the cochain is nonzero: not a cocycle");
            return Ok(ExitCode::from(1));
        }
        Payload::Braided { .. } => {
            let b = doc::as_braided(&d.payload)?;
            let n = b.objects().order();
            check_work_bound(n * n * n * n, force)?;
            let mut report = b.check_pentagon(opts);
            report.merge(b.check_hexagons(opts));
            report
        }
        Payload::Gcrossed(p) => {
            let c = doc::build_gcrossed(p)?;
            let n = c.n_objects();
            check_work_bound(n * n * n * n, force)?;
            verify_gcrossed_parallel(&c, opts, jobs)
        }
        Payload::Gray { .. } => {
            let m = doc::as_gray(&d.payload)?;
            let cells = m.n_cells();
            check_work_bound(cells * cells * cells, force)?;
            m.verify_gray(opts)
        }
        Payload::CrossedMonoid { .. } => {
            let m = doc::as_crossed_monoid(&d.payload)?;
            let n = m.n_elements();
            check_work_bound(n * n * n, force)?;
            m.verify(opts)
        }
        Payload::Functor { .. } => {
            let f = doc::as_functor(&d.payload)?;
            let n = f.source.n_objects();
            check_work_bound(n * n * n * n, force)?;
            let mut report = f.source.verify_all(opts);
            report.merge(f.target.verify_all(opts));
            report.merge(gcrossed::verify_functor(&f, opts));
            report
        }
    };
    print_report(&report);
    Ok(exit_for(&report))
}

fn load_mu(
    spec: &str,
    grp: &gcb_core::fingroup::FiniteGroup,
    b: &gcb_core::pointed::PointedBraidedCategory,
) -> Result<Cochain, CliError> {
    if spec == "zero" || spec == "0" {
        return Ok(Cochain::zero(2, grp.clone(), b.objects().clone()));
    }
    let d = doc::load(Path::new(spec))?;
    let c = doc::as_cochain(&d.payload)?;
    Ok(c)
}

fn abelian_cocycle_of(
    b: &gcb_core::pointed::PointedBraidedCategory,
) -> Result<AbelianThreeCocycle, CliError> {
    let alpha = Cochain::new(
        3,
        b.objects().to_group(),
        b.scalars().clone(),
        b.alpha_table().to_vec(),
    )
    .map_err(|e| CliError::Input(e.to_string()))?;
    AbelianThreeCocycle::new(
        b.objects().clone(),
        b.scalars().clone(),
        alpha,
        b.beta_table().to_vec(),
    )
    .map_err(|e| {
        CliError::Input(format!("the base is not a valid braided category: {e}"))
    })
}

fn cmd_zest(
    braided_path: &Path,
    group: &str,
    mu_spec: &str,
    omega_spec: &str,
    out: &Path,
) -> Result<ExitCode, CliError> {
    let d = doc::load(braided_path)?;
    let b = doc::as_braided(&d.payload)?;
    let grp = parse_group(group)?;
    let mu = load_mu(mu_spec, &grp, &b)?;
    let omega = match omega_spec {
        "zero" | "0" => Cochain::zero(3, grp.clone(), b.scalars().clone()),
        "solve" => {
            let ac = abelian_cocycle_of(&b)?;
            match cochain::solve_obstruction(&mu, &ac)
                .map_err(|e| CliError::Input(e.to_string()))?
            {
                Some(omega) => omega,
                None => {
                    println!("no omega exists: the obstruction class does not vanish");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        path => {
            let d = doc::load(Path::new(path))?;
            doc::as_cochain(&d.payload)?
        }
    };
    match gcrossed::zest(&b, &grp, &mu, &omega) {
        Ok(c) => {
            let payload = Payload::Gcrossed(doc::gcrossed_payload(&c));
            doc::save(&Document::new(payload), out)?;
            println!(
                "wrote {} ({} objects over a group of order {})",
                out.display(),
                c.n_objects(),
                c.grp.order()
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(gcrossed::GcError::ObstructionNonvanishing { pushforward }) => {
            print_pushforward(&pushforward);
            println!("no omega exists");
            Ok(ExitCode::from(1))
        }
        Err(e @ gcrossed::GcError::IncompatibleOmega) => {
            println!("{e}");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(CliError::Input(e.to_string())),
    }
}

fn print_pushforward(push: &Cochain) {
    let mut any = false;
    for t in push.tuples() {
        let v = push.value(&t);
        if v != 0 {
            println!("pushforward{t:?} = {v}");
            any = true;
        }
    }
    if !any {
        println!("pushforward vanishes identically");
    }
}

fn cmd_obstruction(
    braided_path: &Path,
    group: &str,
    mu_spec: &str,
) -> Result<ExitCode, CliError> {
    let d = doc::load(braided_path)?;
    let b = doc::as_braided(&d.payload)?;
    let grp = parse_group(group)?;
    let mu = load_mu(mu_spec, &grp, &b)?;
    let ac = abelian_cocycle_of(&b)?;
    let push = cochain::pw_pushforward(&mu, &ac)
        .map_err(|e| CliError::Input(e.to_string()))?;
    print_pushforward(&push);
    match cochain::solve_obstruction(&mu, &ac)
        .map_err(|e| CliError::Input(e.to_string()))?
    {
        Some(omega) => {
            println!("omega exists: {:?}", omega.values());
            Ok(ExitCode::SUCCESS)
        }
        None => {
            println!("no omega exists");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_roundtrip(path: &Path) -> Result<ExitCode, CliError> {
    let d = doc::load(path)?;
    let Payload::Gcrossed(p) = &d.payload else {
        return Err(CliError::Input("roundtrip expects a gcrossed document".into()));
    };
    let c = doc::build_gcrossed(p)?;
    match gray::roundtrip_check(&c) {
        Ok(_functor) => {
            println!("round trip is the identity; the witness functor verifies");
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            println!("{e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_enumerate(a: &str, k: &str, bound: usize) -> Result<ExitCode, CliError> {
    let a = parse_abelian(a)?;
    let k = parse_abelian(k)?;
    let forms = cochain::enumerate_quadratic_forms(&a, &k, bound)
        .map_err(|e| CliError::Input(e.to_string()))?;
    let classes = cochain::enumerate_abelian_cocycle_classes(&a, &k, bound)
        .map_err(|e| CliError::Input(e.to_string()))?;
    println!("quadratic forms: {}, cocycle classes: {}", forms.len(), classes);
    if forms.len() != classes {
        println!("counts disagree: the Eilenberg-MacLane correspondence is violated");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_decategorify(path: &Path, out: &Path) -> Result<ExitCode, CliError> {
    let d = doc::load(path)?;
    let Payload::Gcrossed(p) = &d.payload else {
        return Err(CliError::Input("decategorify expects a gcrossed document".into()));
    };
    let c = doc::build_gcrossed(p)?;
    let m = gcrossed::decategorify(&c);
    let report = m.verify(ReportOptions::FirstHundred);
    doc::save(&Document::new(doc::crossed_monoid_payload(&m)), out)?;
    println!("wrote {}", out.display());
    print_report(&report);
    Ok(exit_for(&report))
}
