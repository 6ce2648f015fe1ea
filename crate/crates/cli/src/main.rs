use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilpotent_forms::experiments::{
    run, threshold_table, ExperimentConfig, ExperimentKind, ExperimentReport, SearchStrategy, ThresholdRow,
};
use nilpotent_forms::forms::{AlternatingForm, FormTuple, FormTupleJson};
use nilpotent_forms::grassmann::{basis_from_plucker, check_plucker_relations, plucker};
use nilpotent_forms::group::{random_element, GroupPresentation};
use nilpotent_forms::isotropy::{
    greedy_isotropic, isotropic_dim_fp, quaternion_example, quaternion_minor_identity, random_rational_vector,
};
use nilpotent_forms::linalg::{parse_rational, Matrix, PrimeField, Rationals, Subspace, DEFAULT_ENUM_CAP};
use nilpotent_forms::{rng, Error};
use serde_json::json;

#[derive(Parser)]
#[command(name = "nilforms", version, about = "Experiments with 2-step nilpotent Lie algebras and groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand)]
enum Command {
    /// Center dimension of random algebras against the generic prediction.
    Center,
    /// Isotropic subspaces (abelian subalgebras) against the generic bounds.
    Abelian,
    /// Surjection certificates against the threshold bracket.
    Ms,
    /// Threshold bracket for every (n, n0, t0) in the given ranges.
    Thresholds,
    /// Plücker coordinates of the row space of `--rows`.
    Plucker,
    /// Random checks of the group law, commutators and the Mal'cev map.
    GroupCheck,
    /// Reproduces the quaternion example over Q and F_p.
    ExampleQuaternion,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    ExhaustiveFp,
    RandomizedQ,
}

#[derive(clap::Args)]
struct Opts {
    /// Dimension of V; a range like `3..6` for `thresholds`.
    #[arg(long, global = true)]
    n: Option<String>,
    #[arg(long, global = true)]
    t: Option<usize>,
    /// Target dimension n0; a range for `thresholds`.
    #[arg(long, global = true)]
    n0: Option<String>,
    #[arg(long, global = true)]
    t0: Option<usize>,
    #[arg(long, global = true)]
    trials: Option<usize>,
    #[arg(long, global = true, default_value_t = 20)]
    bound: i64,
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Form tuple JSON `{"n": .., "t": .., "forms": [[[..]]]}`.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_CAP)]
    enum_cap: u64,
    #[arg(long, global = true, value_enum, default_value_t = Strategy::ExhaustiveFp)]
    strategy: Strategy,
    #[arg(long, global = true, default_value_t = 20)]
    restarts: usize,
    /// Samples per trial for the randomized surjection search.
    #[arg(long, global = true, default_value_t = 200)]
    search_trials: usize,
    /// Subspace dimension for `plucker`.
    #[arg(long, global = true)]
    k: Option<usize>,
    /// Rows for `plucker`, `;`-separated, entries space-separated (`1 0 1/2; 0 1 3`).
    #[arg(long, global = true)]
    rows: Option<String>,
}

enum Outcome {
    Consistent,
    Flagged,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Config(msg.into())
}

fn parse_range(s: &str) -> Result<Vec<usize>, Error> {
    let bad = || usage(format!("`{s}` is not a number or range `a..b`"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            Ok((a..=b).collect())
        }
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
    }
}

fn single(s: &Option<String>, name: &str) -> Result<Option<usize>, Error> {
    match s {
        None => Ok(None),
        Some(s) => s.trim().parse().map(Some).map_err(|_| usage(format!("--{name} must be a number"))),
    }
}

fn read_input(opts: &Opts) -> Result<Option<FormTupleJson>, Error> {
    let Some(path) = &opts.input else { return Ok(None) };
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let raw: FormTupleJson = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    raw.clone().into_tuple()?;
    Ok(Some(raw))
}

fn experiment_config(kind: ExperimentKind, opts: &Opts) -> Result<ExperimentConfig, Error> {
    let input = read_input(opts)?;
    let (n, t) = match &input {
        Some(j) => (j.n, j.t),
        None => (
            single(&opts.n, "n")?.ok_or_else(|| usage("--n is required"))?,
            opts.t.ok_or_else(|| usage("--t is required"))?,
        ),
    };
    let mut cfg = ExperimentConfig::new(kind, n, t);
    cfg.n0 = single(&opts.n0, "n0")?;
    cfg.t0 = opts.t0;
    if let Some(trials) = opts.trials {
        cfg.trials = trials;
    }
    cfg.bound = opts.bound;
    cfg.prime = opts.prime;
    cfg.seed = opts.seed;
    cfg.enum_cap = opts.enum_cap;
    cfg.restarts = opts.restarts;
    cfg.strategy = match opts.strategy {
        Strategy::ExhaustiveFp => SearchStrategy::ExhaustiveFp,
        Strategy::RandomizedQ => SearchStrategy::RandomizedQ,
    };
    cfg.search_trials = opts.search_trials;
    cfg.input = input;
    cfg.validate()?;
    Ok(cfg)
}

fn print_pairs(out: &mut impl Write, pairs: &[(String, String)], format: Format) -> io::Result<()> {
    match format {
        Format::Table | Format::Json => {
            let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in pairs {
                writeln!(out, "{k:<width$}  {v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["key", "value"])?;
            for (k, v) in pairs {
                w.write_record([k, v])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn emit_report(report: &ExperimentReport, format: Format) -> Result<Outcome, Box<dyn std::error::Error>> {
    let mut out = io::stdout().lock();
    match format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        _ => {
            print_pairs(&mut out, &report.summary(), format)?;
            if matches!(format, Format::Table) {
                for d in &report.verdict.disagreements {
                    writeln!(out, "disagreement: {d}")?;
                }
                for d in &report.verdict.notable {
                    writeln!(out, "notable: {d}")?;
                }
            }
        }
    }
    Ok(if report.verdict.consistent {
        Outcome::Consistent
    } else {
        Outcome::Flagged
    })
}

fn thresholds(opts: &Opts) -> Result<Outcome, Box<dyn std::error::Error>> {
    let ns = parse_range(opts.n.as_deref().ok_or_else(|| usage("--n is required"))?)?;
    let n0s = match &opts.n0 {
        Some(s) => parse_range(s)?,
        None => (2..=ns.iter().copied().max().unwrap_or(0)).collect(),
    };
    let rows: Vec<ThresholdRow> = threshold_table(ns, n0s)?;
    let mut out = io::stdout().lock();
    match opts.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "{:>3} {:>3} {:>3} {:>10} {:>10} {:>10}", "n", "n0", "t0", "absence<", "always>=", "corollary")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>3} {:>3} {:>3} {:>10} {:>10} {:>10}",
                    r.n,
                    r.n0,
                    r.t0,
                    r.generic_absence_below,
                    r.guaranteed_at_or_above,
                    r.corollary_bound.as_deref().unwrap_or("-")
                )?;
            }
        }
    }
    Ok(if rows.iter().all(|r| r.ordered) {
        Outcome::Consistent
    } else {
        Outcome::Flagged
    })
}

fn plucker_cmd(opts: &Opts) -> Result<Outcome, Box<dyn std::error::Error>> {
    let text = opts.rows.as_deref().ok_or_else(|| usage("--rows is required"))?;
    let rows = text
        .split(';')
        .filter(|r| !r.trim().is_empty())
        .map(|r| r.split_whitespace().map(parse_rational).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let n = match single(&opts.n, "n")? {
        Some(n) => n,
        None => rows.first().map_or(0, Vec::len),
    };
    let q = Rationals;
    let u = Subspace::row_space(&Matrix::from_rows(&q, n, rows)?);
    if let Some(k) = opts.k {
        if k != u.dim() {
            return Err(usage(format!("rows span a {}-dimensional subspace, not {k}", u.dim())).into());
        }
    }
    let p = plucker(&u)?;
    let relations = check_plucker_relations(&p);
    let back = basis_from_plucker(&p)?;
    let round_trip = back == u;
    let coords: Vec<(String, String)> = p
        .coords()
        .iter()
        .map(|(idx, v)| {
            let name = idx.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
            (format!("p[{name}]"), v.to_string())
        })
        .collect();
    let basis: Vec<String> = back
        .vectors()
        .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    let mut out = io::stdout().lock();
    match opts.format {
        Format::Json => {
            let value = json!({
                "k": p.k(),
                "n": p.n(),
                "coordinates": coords.iter().map(|(k, v)| json!({"index": k, "value": v})).collect::<Vec<_>>(),
                "relations_hold": relations,
                "recovered_basis": basis,
                "round_trip": round_trip,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        }
        format => {
            let mut pairs = vec![("k".to_string(), p.k().to_string()), ("n".into(), p.n().to_string())];
            pairs.extend(coords);
            pairs.push(("relations_hold".into(), relations.to_string()));
            pairs.push(("recovered_basis".into(), basis.join("; ")));
            pairs.push(("round_trip".into(), round_trip.to_string()));
            print_pairs(&mut out, &pairs, format)?;
        }
    }
    Ok(if relations && round_trip {
        Outcome::Consistent
    } else {
        Outcome::Flagged
    })
}

fn heisenberg() -> FormTuple<Rationals> {
    FormTuple::new(&Rationals, 2, vec![AlternatingForm::standard(&Rationals, 2, 0, 1)]).expect("one form on Q^2")
}

fn group_check(opts: &Opts) -> Result<Outcome, Box<dyn std::error::Error>> {
    let phi = match read_input(opts)? {
        Some(j) => j.into_tuple()?,
        None => heisenberg(),
    };
    let gp = GroupPresentation::new(phi)?;
    let trials = opts.trials.unwrap_or(1000);
    if trials == 0 {
        return Err(usage("trials must be at least 1").into());
    }
    let q = Rationals;
    let (mut assoc, mut comm, mut hom, mut bch) = (0, 0, 0, 0);
    for i in 0..trials as u64 {
        let mut r = rng::trial_rng(opts.seed, i);
        let g = random_element(&gp, &mut r, 9);
        let h = random_element(&gp, &mut r, 9);
        let k = random_element(&gp, &mut r, 9);
        let gh = gp.multiply(&g, &h)?;
        if gp.multiply(&gh, &k)? == gp.multiply(&g, &gp.multiply(&h, &k)?)? {
            assoc += 1;
        }
        let direct = gp.multiply(
            &gp.multiply(&gp.inverse(&g)?, &gp.inverse(&h)?)?,
            &gh,
        )?;
        if gp.commutator(&g, &h)? == direct {
            comm += 1;
        }
        let (mg, mh) = (gp.malcev_map(&g)?, gp.malcev_map(&h)?);
        if gp.malcev_map(&gh)? == gp.bch_mul(&mg, &mh)? {
            hom += 1;
        }
        let chain = gp.bch_mul(&gp.bch_mul(&gp.bch_mul(&mg, &mh)?, &mg.neg(&q))?, &mh.neg(&q))?;
        if chain == gp.algebra().bracket(&mg, &mh)? {
            bch += 1;
        }
    }
    let pairs = vec![
        ("n".to_string(), gp.n().to_string()),
        ("t".into(), gp.t().to_string()),
        ("trials".into(), trials.to_string()),
        ("associativity".into(), assoc.to_string()),
        ("commutator_formula".into(), comm.to_string()),
        ("malcev_homomorphism".into(), hom.to_string()),
        ("bch_commutator_identity".into(), bch.to_string()),
        ("center_rank".into(), gp.center_rank().to_string()),
    ];
    let mut out = io::stdout().lock();
    match opts.format {
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> =
                pairs.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&map)?)?;
        }
        format => print_pairs(&mut out, &pairs, format)?,
    }
    Ok(if [assoc, comm, hom, bch].iter().all(|&c| c == trials) {
        Outcome::Consistent
    } else {
        Outcome::Flagged
    })
}

fn example_quaternion(opts: &Opts) -> Result<Outcome, Box<dyn std::error::Error>> {
    let q = Rationals;
    let quat = quaternion_example(&q);
    let points = opts.trials.unwrap_or(1000);
    let mut r = rng::seeded(opts.seed);
    let mut minors_ok = 0;
    for _ in 0..points {
        let x = random_rational_vector(&mut r, 4, opts.bound);
        if quaternion_minor_identity(&q, &x)? {
            minors_ok += 1;
        }
    }
    let greedy = greedy_isotropic(&quat, opts.seed, opts.restarts.max(100))?;
    let p = opts.prime.unwrap_or(5);
    let fp = PrimeField::new(p)?;
    let (oracle, witness) = isotropic_dim_fp(&quaternion_example(&fp), 2, opts.enum_cap)?;
    let matrices: Vec<String> = quat.forms().iter().map(|f| f.matrix().to_string()).collect();
    let witness: Vec<String> = witness
        .iter()
        .flat_map(|w| w.vectors().map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>())
        .collect();
    let mut pairs: Vec<(String, String)> = matrices
        .iter()
        .enumerate()
        .map(|(i, m)| (format!("phi{}", i + 1), m.clone()))
        .collect();
    pairs.push(("minor_identity".into(), format!("{minors_ok}/{points}")));
    pairs.push(("isotropic_dim_q".into(), greedy.dim().to_string()));
    pairs.push(("isotropic_verified".into(), greedy.verified.to_string()));
    pairs.push((format!("isotropic_dim_f{p}"), format!("{oracle:?}")));
    pairs.push((format!("witness_f{p}"), witness.join("; ")));
    let mut out = io::stdout().lock();
    match opts.format {
        Format::Json => {
            let value = json!({
                "forms": quat.to_json_value()?,
                "minor_identity": {"holds": minors_ok, "points": points},
                "isotropic_dim_q": greedy.dim(),
                "isotropic_verified": greedy.verified,
                "prime": p,
                "isotropic_dim_fp": oracle,
                "witness_fp": witness,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?)?;
        }
        format => print_pairs(&mut out, &pairs, format)?,
    }
    Ok(if minors_ok == points && greedy.verified && greedy.dim() == 1 {
        Outcome::Consistent
    } else {
        Outcome::Flagged
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, Box<dyn std::error::Error>> {
    let opts = &cli.opts;
    let kind = match cli.command {
        Command::Center => ExperimentKind::Center,
        Command::Abelian => ExperimentKind::Abelian,
        Command::Ms => ExperimentKind::Ms,
        Command::Thresholds => return thresholds(opts),
        Command::Plucker => return plucker_cmd(opts),
        Command::GroupCheck => return group_check(opts),
        Command::ExampleQuaternion => return example_quaternion(opts),
    };
    let cfg = experiment_config(kind, opts)?;
    let report = run(&cfg)?;
    emit_report(&report, opts.format)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(Outcome::Consistent) => ExitCode::SUCCESS,
        Ok(Outcome::Flagged) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
