//! Command-line front end. [`run`] does all the work so it can be driven
//! from tests; the binary only forwards `std::env::args`.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::chevalley::scenarios::Scenario;
use crate::classical::{find_witness, is_valid_jordan_type, Form, Partition};
use crate::error::{Error, Result};
use crate::ffcount::{self, CountReport, PairMethod, TSV_HEADER};
use crate::field::PrimeField;
use crate::restricted::{dim_c_formula, gl_matrix_p_power, RestrictedAlgebra};
use crate::rootsys::RootSystem;

pub const DEFAULT_BUDGET: u64 = 1 << 26;
pub const DEFAULT_SEED: u64 = 0x5eed;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "nilvar", version, about = "Nilpotent commuting varieties: components, witnesses, certificates and point counts")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Enumeration budget (number of elements visited).
    #[arg(long, global = true, env = "NILVAR_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountObject {
    Pairs,
    UnipotentPairs,
    Nilpotent,
    Hilbert,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Naive,
    Stratified,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Distinguished parabolics: component count and dimension.
    Components {
        #[arg(long = "type")]
        cartan_type: String,
    },
    /// Distinguished pairs grouped by weighted diagram.
    BalaCarter {
        #[arg(long = "type")]
        cartan_type: String,
    },
    /// Commuting nilpotent witness for a classical Jordan type.
    Witness {
        #[arg(long)]
        partition: String,
        /// 0 for orthogonal, 1 for symplectic; omit for gl(n).
        #[arg(long)]
        kappa: Option<u8>,
        #[arg(long, default_value_t = 17)]
        prime: u64,
    },
    /// Exceptional-type certificates (e8p7, e7p5, e8tau, g2, or all).
    Exceptional {
        #[arg(default_value = "all")]
        scenario: String,
    },
    /// Point counts over prime fields with a leading-exponent fit.
    Count {
        #[arg(value_enum)]
        object: CountObject,
        #[arg(long, short)]
        n: usize,
        #[arg(long, alias = "prime", value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// Restricted Lie algebra checks on gl(n) and nilpotent centralizers.
    RestrictedCheck {
        #[arg(long, alias = "prime", value_delimiter = ',', default_value = "2,3,5")]
        primes: Vec<u64>,
        /// Restrict the toral-rank checks to one Jordan type.
        #[arg(long)]
        partition: Option<String>,
        /// Size of gl(n) for the Jacobson check.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Largest n for the toral-rank checks.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// Punctual Hilbert scheme point counts.
    Hilbert {
        #[arg(long, short)]
        r: usize,
        #[arg(long, alias = "prime", value_delimiter = ',', default_value = "2,3")]
        primes: Vec<u64>,
    },
}

/// What a subcommand produced.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub tsv: Vec<String>,
    pub passed: bool,
}

impl Output {
    fn new(json: Value, tsv: Vec<String>, passed: bool) -> Self {
        Output { json, tsv, passed }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values serialize") + "\n",
            Format::Tsv => self.tsv.iter().map(|l| format!("{l}\n")).collect(),
        }
    }
}

fn check_row(name: &str, pass: bool) -> Value {
    json!({"name": name, "pass": pass})
}

fn checks_tsv(checks: &[Value]) -> Vec<String> {
    let mut out = vec!["check\tpass".to_string()];
    out.extend(checks.iter().map(|c| format!("{}\t{}", c["name"].as_str().unwrap_or(""), c["pass"])));
    out
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse()
}

pub fn components(cartan_type: &str) -> Result<Output> {
    let sys = RootSystem::parse(cartan_type)?;
    let json = sys.components_json()?;
    let mut tsv = vec!["type\tJ\tdiagram\tcount\tdim".to_string()];
    for row in json["components"].as_array().into_iter().flatten() {
        tsv.push(format!("{}\t{}\t{}\t{}\t{}", json["type"].as_str().unwrap_or(""), row["J"], row["diagram"], json["count"], json["dim"]));
    }
    Ok(Output::new(json, tsv, true))
}

pub fn bala_carter(cartan_type: &str) -> Result<Output> {
    let sys = RootSystem::parse(cartan_type)?;
    let groups = sys.bala_carter_groups()?;
    let mut tsv = vec!["diagram\tpairs".to_string()];
    for g in &groups {
        let pairs: Vec<String> = g.pairs.iter().map(|p| p.to_string()).collect();
        tsv.push(format!("{:?}\t{}", g.diagram, pairs.join(" ")));
    }
    let json = json!({
        "schema": 1,
        "type": sys.cartan_type().to_string(),
        "orbits": groups.len(),
        "groups": groups,
    });
    Ok(Output::new(json, tsv, true))
}

pub fn witness(partition: &str, kappa: Option<u8>, prime: u64) -> Result<Output> {
    let lambda = parse_partition(partition)?;
    let form = Form::from_kappa(kappa)?;
    if !is_valid_jordan_type(&lambda, form) {
        return Err(Error::InvalidPartition(format!("{lambda} is not a nilpotent Jordan type for {form:?}")));
    }
    let f = PrimeField::new(prime)?;
    match find_witness(&f, &lambda, form)? {
        None => {
            let json = json!({"schema": 1, "status": "no witness required", "partition": lambda.to_string(), "form": form});
            Ok(Output::new(json, vec!["status".into(), "no witness required".into()], true))
        }
        Some(w) => {
            let mut json = w.to_json();
            json["status"] = json!("witness");
            let tsv = vec![
                "partition_e\tpartition_zhat\tkind\tcommutes\tnilpotent\tnot_dominated\tskew_adjoint".to_string(),
                format!(
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    w.partition_e,
                    w.partition_zhat,
                    json["kind"].as_str().unwrap_or(""),
                    w.checks.commutes,
                    w.checks.nilpotent,
                    w.checks.not_dominated,
                    w.checks.skew_adjoint.map_or("-".to_string(), |b| b.to_string())
                ),
            ];
            Ok(Output::new(json, tsv, w.checks.all_pass()))
        }
    }
}

pub fn exceptional(which: &str) -> Result<Output> {
    let scenarios: Vec<Scenario> = if which == "all" { Scenario::ALL.to_vec() } else { vec![which.parse()?] };
    let mut certs = Vec::new();
    let mut tsv = vec!["scenario\tp\tcheck\tpass".to_string()];
    let mut passed = true;
    for s in scenarios {
        let cert = s.run()?;
        passed &= cert.passed();
        for c in &cert.checks {
            tsv.push(format!("{}\t{}\t{}\t{}", cert.scenario, cert.p, c.name, c.pass));
        }
        certs.push(cert.to_json());
    }
    Ok(Output::new(json!({"schema": 1, "passed": passed, "certificates": certs}), tsv, passed))
}

fn count_rows(object: CountObject, n: usize, q: u64, method: MethodArg, budget: u64, checks: &mut Vec<Value>) -> Result<CountReport> {
    match object {
        CountObject::Nilpotent => {
            let r = ffcount::count_nilpotent(n, q, budget)?;
            checks.push(check_row(&format!("nilpotent count q^(n^2-n) at q={q}"), r.count == (q as u128).pow((n * n - n) as u32)));
            Ok(r)
        }
        CountObject::Pairs => {
            let methods: &[PairMethod] = match method {
                MethodArg::Naive => &[PairMethod::Naive],
                MethodArg::Stratified => &[PairMethod::Stratified],
                MethodArg::Both => &[PairMethod::Naive, PairMethod::Stratified],
            };
            let reports: Vec<CountReport> =
                methods.iter().map(|&m| ffcount::count_commuting_nilpotent_pairs(n, q, m, budget)).collect::<Result<_>>()?;
            if reports.len() == 2 {
                checks.push(check_row(&format!("naive = stratified at q={q}"), reports[0].count == reports[1].count));
            }
            Ok(reports[0].clone())
        }
        CountObject::UnipotentPairs => {
            let u = ffcount::count_unipotent_commuting_pairs(n, q, budget)?;
            let v = ffcount::count_commuting_nilpotent_pairs(n, q, PairMethod::Naive, budget)?;
            checks.push(check_row(&format!("unipotent pairs = nilpotent pairs at q={q}"), u.count == v.count));
            Ok(u)
        }
        CountObject::Hilbert => ffcount::hilbert_report(n, q, budget),
    }
}

fn validate_primes(primes: &[u64]) -> Result<Vec<u64>> {
    let mut ps = primes.to_vec();
    ps.sort_unstable();
    ps.dedup();
    if ps.is_empty() {
        return Err(Error::InvalidParameter("no primes given".into()));
    }
    for &p in &ps {
        PrimeField::new(p)?;
    }
    Ok(ps)
}

fn table(reports: &[CountReport]) -> Vec<String> {
    std::iter::once(TSV_HEADER.to_string()).chain(reports.iter().map(CountReport::tsv_row)).collect()
}

pub fn count(object: CountObject, n: usize, primes: &[u64], method: MethodArg, budget: u64) -> Result<Output> {
    let primes = validate_primes(primes)?;
    let mut checks = Vec::new();
    let mut reports: Vec<CountReport> =
        primes.iter().map(|&q| count_rows(object, n, q, method, budget, &mut checks)).collect::<Result<_>>()?;
    let fit = if reports.len() >= 2 { Some(ffcount::attach_exponent(&mut reports)?) } else { None };
    if let (CountObject::Hilbert, Some(fit)) = (object, &fit) {
        checks.push(check_row("leading exponent = r - 1", !fit.inconclusive && fit.exponent == n as i64 - 1));
    }
    let passed = checks.iter().all(|c| c["pass"] == json!(true));
    let json = json!({
        "schema": 1,
        "rows": reports.iter().map(CountReport::to_json).collect::<Vec<_>>(),
        "fit": fit,
        "checks": checks,
    });
    Ok(Output::new(json, table(&reports), passed))
}

pub fn hilbert(r: usize, primes: &[u64], budget: u64) -> Result<Output> {
    let primes = validate_primes(primes)?;
    let mut reports = Vec::new();
    let mut details = Vec::new();
    let mut checks = Vec::new();
    for &q in &primes {
        let h = ffcount::hilbert_point_count(r, q, budget)?;
        let fam = ffcount::verify_principal_family(r, q)?;
        checks.push(check_row(&format!("principal family distinct at q={q}"), fam.passed()));
        reports.push(ffcount::hilbert_report(r, q, budget)?);
        details.push(json!({"q": q, "triples": h.triples.to_string(), "gl_order": h.gl_order.to_string(), "points": h.points.to_string(), "family": fam}));
    }
    let fit = if reports.len() >= 2 { Some(ffcount::attach_exponent(&mut reports)?) } else { None };
    if let Some(fit) = &fit {
        checks.push(check_row("leading exponent = r - 1", !fit.inconclusive && fit.exponent == r as i64 - 1));
    }
    let passed = checks.iter().all(|c| c["pass"] == json!(true));
    let json = json!({
        "schema": 1,
        "r": r,
        "rows": reports.iter().map(CountReport::to_json).collect::<Vec<_>>(),
        "details": details,
        "fit": fit,
        "checks": checks,
    });
    Ok(Output::new(json, table(&reports), passed))
}

pub fn restricted_check(primes: &[u64], partition: Option<&str>, n: usize, max_n: usize, budget: u64, seed: u64) -> Result<Output> {
    let primes = validate_primes(primes)?;
    let only = partition.map(parse_partition).transpose()?;
    let mut checks = Vec::new();
    let mut toral = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &p in &primes {
        let g = RestrictedAlgebra::gl(n, p)?;
        let mut ok = true;
        for _ in 0..100 {
            let x = g.random_element(&mut rng);
            ok &= g.p_power(&x) == gl_matrix_p_power(&x, n, p)?;
        }
        checks.push(check_row(&format!("jacobson = matrix power on gl({n}, F_{p})"), ok));

        let g2 = RestrictedAlgebra::gl(2, p)?;
        if g2.size() <= budget {
            let all: Vec<Vec<u64>> = g2.elements().collect();
            let e = g2.semisimple_exponent(&all)?;
            let s = g2.toral_rank_search(budget, seed).witness.len();
            checks.push(check_row(&format!("span relation with s={s}, e={e} on gl(2, F_{p})"), all.iter().all(|x| g2.check_power_span(s, e, x))));
            let c = g2.nilvariety_point_count(budget, seed)?;
            checks.push(check_row(&format!("nilpotent count p^2 on gl(2, F_{p})"), c.count == p * p && c.predicted_exponent == 2));
        }

        let lambdas: Vec<Partition> = match &only {
            Some(l) => vec![l.clone()],
            None => (1..=max_n).flat_map(Partition::all).collect(),
        };
        for lambda in lambdas {
            let d = dim_c_formula(&lambda, p, budget, seed)?;
            let pass = d.toral_rank == lambda.len();
            checks.push(check_row(&format!("toral rank of z(e_{lambda}) over F_{p} = {}", lambda.len()), pass));
            toral.push(json!({"p": p, "partition": lambda.to_string(), "toral_rank": d.toral_rank, "exact": d.exact, "dim_c": d.value}));
        }
    }
    let passed = checks.iter().all(|c| c["pass"] == json!(true));
    let json = json!({"schema": 1, "seed": seed, "checks": checks, "toral": toral, "passed": passed});
    Ok(Output::new(json, checks_tsv(&checks), passed))
}

pub fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Components { cartan_type } => components(cartan_type),
        Command::BalaCarter { cartan_type } => bala_carter(cartan_type),
        Command::Witness { partition, kappa, prime } => witness(partition, *kappa, *prime),
        Command::Exceptional { scenario } => exceptional(scenario),
        Command::Count { object, n, primes, method } => count(*object, *n, primes, *method, cli.budget),
        Command::RestrictedCheck { primes, partition, n, max_n } => {
            restricted_check(primes, partition.as_deref(), *n, *max_n, cli.budget, cli.seed)
        }
        Command::Hilbert { r, primes } => hilbert(*r, primes, cli.budget),
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Inconsistent(_) | Error::BrokenAxiom(_) | Error::NoWitness(_) => EXIT_CHECK_FAILED,
        _ => EXIT_USAGE,
    }
}

/// Parses `args`, runs the subcommand and writes its output. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(output) => {
            let _ = out.write_all(output.render(cli.format).as_bytes());
            if output.passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code_for(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("nilvar").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    fn json_of(args: &[&str]) -> Value {
        let (code, out) = run_args(args);
        assert_eq!(code, 0, "{args:?}");
        serde_json::from_str(&out).unwrap()
    }

    #[test]
    fn components_command() {
        let v = json_of(&["components", "--type", "A5"]);
        assert_eq!((v["count"].as_u64(), v["dim"].as_u64(), v["schema"].as_u64()), (Some(1), Some(35), Some(1)));
        let v = json_of(&["components", "--type", "G2"]);
        assert_eq!((v["count"].as_u64(), v["dim"].as_u64()), (Some(2), Some(14)));
    }

    #[test]
    fn usage_errors_exit_1() {
        assert_eq!(run_args(&["components", "--type", "Q7"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["witness", "--partition", "2,x"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["count", "pairs", "-n", "2", "--primes", "4"]).0, EXIT_USAGE);
    }

    #[test]
    fn witness_paths() {
        let v = json_of(&["witness", "--partition", "2,2", "--prime", "5"]);
        assert_eq!(v["status"], "witness");
        assert_eq!(v["partition_zhat"], "4");
        let v = json_of(&["witness", "--partition", "3,3,3", "--kappa", "0"]);
        assert_eq!(v["partition_zhat"], "9");
        let v = json_of(&["witness", "--partition", "3,2,1"]);
        assert_eq!(v["status"], "no witness required");
    }

    #[test]
    fn count_and_hilbert() {
        let v = json_of(&["count", "pairs", "-n", "2", "--primes", "2,3"]);
        assert_eq!(v["fit"]["exponent"], 3);
        assert_eq!(v["rows"][0]["count"], 10);
        let v = json_of(&["count", "hilbert", "-n", "2", "--primes", "2,3"]);
        assert_eq!(v["fit"]["exponent"], 1);
        let v = json_of(&["count", "nilpotent", "-n", "2", "--primes", "2"]);
        assert_eq!(v["rows"][0]["count"], 4);
        let (code, out) = run_args(&["--format", "tsv", "hilbert", "-r", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "object\tn_or_r\tq\tcount\texponent\nhilbert_points\t2\t2\t3\t1\nhilbert_points\t2\t3\t4\t1\n");
    }

    #[test]
    fn budget_exceeded_is_reported() {
        let (code, out) = run_args(&["--budget", "10", "count", "pairs", "-n", "3", "--primes", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
    }

    #[test]
    fn output_is_reproducible() {
        let args = ["restricted-check", "--primes", "2", "--max-n", "2", "--seed", "7"];
        assert_eq!(run_args(&args), run_args(&args));
        assert_eq!(run_args(&args).0, 0);
    }
}
