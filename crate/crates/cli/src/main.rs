//! `colorcar` command-line interface.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success (hypothesis verified, witness or certificate found, selfcheck passed) |
//! | 1 | a selfcheck property failed |
//! | 2 | I/O, parse or validation error |
//! | 3 | hypothesis or pairwise condition fails, or no positive circuits |
//! | 4 | rank condition fails |
//! | 5 | no witness although the hypothesis holds (dump attached) |
//! | 6 | an enumeration cap was exceeded |

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use colorcar::euclid::solve_colorful;
use colorcar::io::{
    exit_code_for, parse, to_json, CertificateDocument, ComplexDocument, InstanceDocument, MatroidDocument,
    OrientedMatroidDocument, PointConfigDocument, ScaffoldPayload,
};
use colorcar::selfcheck::{self, SUITES};
use colorcar::{
    build_z, check_instance, eta, find_witness, meshulam_check, reduced_homology, Caps, Error, SimplicialComplex,
};

#[derive(Parser)]
#[command(name = "colorcar", version, about = "Exact colorful Caratheodory and matroid topology toolkit")]
struct Cli {
    /// Raise or lower the ground-set cap for circuit enumeration and Alexander duals.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the rank condition and covering hypothesis of an instance.
    Verify {
        /// Instance document (`-` for stdin).
        file: PathBuf,
    },
    /// Find the lexicographically least positive circuit independent in the matroid.
    Witness {
        file: PathBuf,
        /// Also run the Meshulam scan on Z (ground sets of at most 8 elements).
        #[arg(long)]
        also_check_scaffold: bool,
    },
    /// Simplicial complex computations.
    #[command(subcommand)]
    Topo(Topo),
    /// Find a colorful simplex containing the target point.
    Colorful {
        /// Point configuration document (`-` for stdin).
        file: PathBuf,
        /// Allow any number of classes; no theorem guarantees a result.
        #[arg(long)]
        exploratory: bool,
    },
    /// Run the seeded property suites.
    Selfcheck(SelfcheckArgs),
}

#[derive(Subcommand)]
enum Topo {
    /// Reduced rational Betti numbers of a complex document.
    Homology { file: PathBuf },
    /// One plus the least degree of nonvanishing reduced homology.
    Eta { file: PathBuf },
    /// Alexander dual of a complex document.
    Dual { file: PathBuf },
    /// Support complex of the oriented matroid in an instance document.
    Support { file: PathBuf },
    /// Independence complex of the matroid in an instance document.
    Independence { file: PathBuf },
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Run only this suite (repeatable).
    #[arg(long = "suite", value_name = "NAME")]
    suites: Vec<String>,
    /// Cases per suite instead of each suite's default.
    #[arg(long)]
    cases: Option<usize>,
    /// Worker threads (default: one per core).
    #[arg(long)]
    threads: Option<usize>,
    /// List the suites and exit.
    #[arg(long)]
    list: bool,
}

fn read_input(path: &Path) -> Result<String, String> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map(|_| text).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

/// Prints a certificate and returns its exit code.
fn emit(doc: &CertificateDocument) -> u8 {
    print!("{}", to_json(doc));
    if let Some(d) = &doc.diagnostics {
        eprintln!("colorcar: {}", d.message);
    }
    doc.exit_code() as u8
}

fn load_instance(path: &Path, caps: &Caps) -> Result<colorcar::Instance, CertificateDocument> {
    let text = read_input(path).map_err(CertificateDocument::io_error)?;
    parse::<InstanceDocument>(&text)
        .and_then(|doc| doc.build(caps))
        .map_err(|e| CertificateDocument::from_error(&e, true))
}

fn verify(path: &Path, caps: &Caps) -> u8 {
    match load_instance(path, caps) {
        Ok(inst) => emit(&CertificateDocument::from_report(&inst, &check_instance(&inst))),
        Err(doc) => emit(&doc),
    }
}

fn witness(path: &Path, scaffold: bool, caps: &Caps) -> u8 {
    let inst = match load_instance(path, caps) {
        Ok(inst) => inst,
        Err(doc) => return emit(&doc),
    };
    let report = check_instance(&inst);
    if !report.passed() {
        return emit(&CertificateDocument::from_report(&inst, &report));
    }
    let verified = inst.oriented_matroid().axioms_verified();
    let mut doc = match find_witness(&inst) {
        Ok(w) => CertificateDocument::from_witness(&inst, &report, &w),
        Err(e) => return emit(&CertificateDocument::from_error(&e, verified)),
    };
    if scaffold {
        if inst.ground().len() > caps.meshulam {
            eprintln!(
                "colorcar: scaffold check skipped: {} elements exceed the limit of {}",
                inst.ground().len(),
                caps.meshulam
            );
        } else {
            match build_z(&inst, caps).and_then(|z| meshulam_check(&z, caps)) {
                Ok(r) => doc.scaffold = Some(ScaffoldPayload::from_report(&r, inst.ground())),
                Err(e) => return emit(&CertificateDocument::from_error(&e, verified)),
            }
        }
    }
    emit(&doc)
}

fn colorful(path: &Path, exploratory: bool, caps: &Caps) -> u8 {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(e) => return emit(&CertificateDocument::io_error(e)),
    };
    let result = parse::<PointConfigDocument>(&text)
        .and_then(|doc| doc.build(exploratory))
        .and_then(|cfg| solve_colorful(&cfg, caps));
    match result {
        Ok(cert) => emit(&CertificateDocument::from_colorful(&cert)),
        Err(e) => emit(&CertificateDocument::from_error(&e, true)),
    }
}

fn topo(cmd: &Topo, caps: &Caps) -> u8 {
    let (Topo::Homology { file }
    | Topo::Eta { file }
    | Topo::Dual { file }
    | Topo::Support { file }
    | Topo::Independence { file }) = cmd;
    let text = match read_input(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("colorcar: {e}");
            return 2;
        }
    };
    let complex = |text: &str| parse::<ComplexDocument>(text).and_then(|d| d.build());
    let out: Result<String, Error> = match cmd {
        Topo::Homology { .. } => complex(&text).and_then(|x| reduced_homology(&x, caps)).map(|h| to_json(&h)),
        Topo::Eta { .. } => complex(&text).and_then(|x| eta(&x, caps)).map(|e| to_json(&e)),
        Topo::Dual { .. } => complex(&text)
            .and_then(|x| x.alexander_dual(caps))
            .map(|d| to_json(&ComplexDocument::from_complex(&d))),
        Topo::Support { .. } => parse::<OrientedMatroidDocument>(&text)
            .and_then(|d| d.build(caps))
            .map(|om| to_json(&ComplexDocument::from_complex(&SimplicialComplex::support_complex(&om)))),
        Topo::Independence { .. } => parse::<MatroidDocument>(&text)
            .and_then(|d| d.build(caps))
            .and_then(|m| SimplicialComplex::independence_complex(&m, caps))
            .map(|y| to_json(&ComplexDocument::from_complex(&y))),
    };
    match out {
        Ok(s) => {
            print!("{s}");
            0
        }
        Err(e) => {
            eprintln!("colorcar: {e}");
            exit_code_for(&e) as u8
        }
    }
}

fn run_selfcheck(args: &SelfcheckArgs, caps: &Caps) -> u8 {
    if args.list {
        for s in SUITES {
            println!("{:<18} {:>4}  {}", s.name, s.default_cases, s.description);
        }
        return 0;
    }
    if let Some(bad) = args.suites.iter().find(|n| selfcheck::suite(n).is_none()) {
        eprintln!("colorcar: unknown suite `{bad}` (see --list)");
        return 2;
    }
    if let Some(n) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("colorcar: cannot configure {n} threads: {e}");
            return 2;
        }
    }
    println!("selfcheck seed {}", args.seed);
    let reports = selfcheck::run(&args.suites, args.seed, args.cases, caps);
    let mut failed = 0;
    for r in &reports {
        let stats: Vec<String> = r.stats.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!(
            "{:<18} {}  cases={} checks={} failures={}{}{}",
            r.name,
            if r.passed() { "PASS" } else { "FAIL" },
            r.cases,
            r.checks,
            r.failures,
            if stats.is_empty() { "" } else { "  " },
            stats.join(" ")
        );
        if let Some(f) = &r.first_failure {
            println!("    first failure: {f}");
            failed += 1;
        }
    }
    println!("{}/{} suites passed", reports.len() - failed, reports.len());
    u8::from(failed > 0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = cli.cap.map_or_else(Caps::default, Caps::with_ground_cap);
    let code = match &cli.command {
        Command::Verify { file } => verify(file, &caps),
        Command::Witness {
            file,
            also_check_scaffold,
        } => witness(file, *also_check_scaffold, &caps),
        Command::Topo(t) => topo(t, &caps),
        Command::Colorful { file, exploratory } => colorful(file, *exploratory, &caps),
        Command::Selfcheck(args) => run_selfcheck(args, &caps),
    };
    ExitCode::from(code)
}
