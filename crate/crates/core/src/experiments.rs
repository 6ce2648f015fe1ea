//! Seeded Monte Carlo experiments comparing computed invariants of random
//! algebras with their generic predictions.
//!
//! "Generic" is sampled as uniform integer entries in `[-bound, bound]`.
//! Trial `i` draws its tuple and its search randomness from independent
//! streams of the master seed, and trials run in parallel but are collected
//! by index, so a report is a pure function of its configuration.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{form_space_dim, random_tuple, FormTuple, FormTupleJson};
use crate::group::{clear_denominators, GroupPresentation};
use crate::isotropy::{bound_k, bound_s, greedy_isotropic, is_isotropic, isotropic_dim_fp, OracleDim};
use crate::lie::{generic_center_dim, ms_thresholds, corollary_bound, LieAlgebra2, MsRegime, MsStrategy, MsWitness};
use crate::linalg::{is_prime, Field, PrimeField, Rationals, Subspace, DEFAULT_ENUM_CAP};
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Center,
    Abelian,
    Ms,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStrategy {
    ExhaustiveFp,
    RandomizedQ,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub n: usize,
    pub t: usize,
    pub n0: Option<usize>,
    pub t0: Option<usize>,
    pub trials: usize,
    pub bound: i64,
    /// Prime for finite-field oracles. For surjection searches this is the
    /// first prime tried; larger primes are used when the reduction degenerates.
    pub prime: Option<u64>,
    pub seed: u64,
    pub enum_cap: u64,
    /// Randomized greedy restarts for isotropic subspaces.
    pub restarts: usize,
    pub strategy: SearchStrategy,
    /// Samples per trial for the randomized surjection search.
    pub search_trials: usize,
    /// Fixed tuple used for every trial instead of random sampling.
    pub input: Option<FormTupleJson>,
}

impl ExperimentConfig {
    pub fn new(kind: ExperimentKind, n: usize, t: usize) -> Self {
        ExperimentConfig {
            kind,
            n,
            t,
            n0: None,
            t0: None,
            trials: 200,
            bound: 20,
            prime: None,
            seed: 0,
            enum_cap: DEFAULT_ENUM_CAP,
            restarts: 20,
            strategy: SearchStrategy::ExhaustiveFp,
            search_trials: 200,
            input: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.trials < 1 {
            return bad("trials must be at least 1".into());
        }
        if self.bound < 1 {
            return bad(format!("entry bound must be at least 1, got {}", self.bound));
        }
        if let Some(p) = self.prime {
            if !is_prime(p) || p > u32::MAX as u64 {
                return bad(format!("{p} is not a supported prime"));
            }
        }
        if self.n < 2 || self.t < 1 || self.t > form_space_dim(self.n) {
            return bad(format!(
                "need n >= 2 and 1 <= t <= n(n-1)/2, got (n, t) = ({}, {})",
                self.n, self.t
            ));
        }
        if let Some(input) = &self.input {
            if input.n != self.n || input.t != self.t {
                return bad(format!(
                    "input tuple has (n, t) = ({}, {}) but the configuration says ({}, {})",
                    input.n, input.t, self.n, self.t
                ));
            }
            input.clone().into_tuple().map_err(|e| Error::Config(e.to_string()))?;
        }
        match self.kind {
            ExperimentKind::Abelian if self.t < 2 => bad("isotropic bounds need t >= 2".into()),
            ExperimentKind::Ms => {
                let (Some(n0), Some(t0)) = (self.n0, self.t0) else {
                    return bad("surjection experiments need n0 and t0".into());
                };
                if n0 > self.n || t0 < 1 || t0 > form_space_dim(n0) {
                    return bad(format!(
                        "need n0 <= n and 1 <= t0 <= n0(n0-1)/2, got (n0, t0) = ({n0}, {t0})"
                    ));
                }
                if self.strategy == SearchStrategy::RandomizedQ && self.search_trials < 1 {
                    return bad("search trials must be at least 1".into());
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    fn tuple(&self, trial: usize) -> Result<FormTuple<Rationals>> {
        match &self.input {
            Some(input) => input.clone().into_tuple(),
            None => random_tuple(self.n, self.t, self.bound, rng::trial_seed(self.seed, 2 * trial as u64)),
        }
    }

    fn search_seed(&self, trial: usize) -> u64 {
        rng::trial_seed(self.seed, 2 * trial as u64 + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub consistent: bool,
    /// Outcomes contradicting a proved or generic statement.
    pub disagreements: Vec<String>,
    /// Events worth a look that contradict nothing, such as finite-field
    /// oracles exceeding a bound stated for algebraically closed fields.
    pub notable: Vec<String>,
}

impl Verdict {
    fn new(disagreements: Vec<String>, notable: Vec<String>) -> Self {
        Verdict {
            consistent: disagreements.is_empty(),
            disagreements,
            notable,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CenterRecord {
    pub trial: usize,
    pub center_dim: usize,
    pub group_center_rank: usize,
    pub derived_dim: usize,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CenterAggregate {
    pub matches: usize,
    pub match_frequency: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum OracleColumn {
    Exact { dim: usize },
    AtLeast { dim: usize },
    /// Not even planes could be enumerated within the cap.
    Skipped,
}

impl OracleColumn {
    fn exceeds(&self, k: usize) -> bool {
        match *self {
            OracleColumn::Exact { dim } | OracleColumn::AtLeast { dim } => dim > k,
            OracleColumn::Skipped => false,
        }
    }

    fn decided_within(&self, k: usize) -> bool {
        match *self {
            OracleColumn::Exact { dim } => dim <= k,
            _ => false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AbelianRecord {
    pub trial: usize,
    pub greedy_dim: usize,
    pub greedy_verified: bool,
    pub greedy_basis: Vec<String>,
    /// Pairwise commutators of the group elements given by the integer-cleared basis vanish.
    pub subgroup_abelian: bool,
    pub prime: u64,
    pub reduction_independent: bool,
    pub oracle: OracleColumn,
    pub oracle_witness: Option<Vec<String>>,
    pub oracle_witness_verified: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AbelianAggregate {
    pub greedy_min: usize,
    pub greedy_max: usize,
    pub greedy_guarantee_met: usize,
    pub greedy_at_bound_k: usize,
    pub greedy_attainment_frequency: f64,
    pub greedy_violations: usize,
    pub oracle_decided: usize,
    pub oracle_within_bound_k: usize,
    pub oracle_exceeds_bound_k: usize,
    pub oracle_skipped: usize,
    pub oracle_within_frequency: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MsRecord {
    pub trial: usize,
    pub strategy: MsStrategy,
    pub found: bool,
    pub examined: u64,
    pub certificate: Option<Vec<String>>,
    pub certificate_verified: Option<bool>,
    /// Pfaffian of the single form over `Q`, when `t = 1` and `n` is even.
    pub pfaffian: Option<String>,
    pub pfaffian_nonzero_mod_p: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MsAggregate {
    pub found: usize,
    pub found_frequency: f64,
    pub all_certificates_verified: bool,
    pub nondegenerate_trials: Option<usize>,
    pub found_among_nondegenerate: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Prediction {
    Center {
        predicted_center_dim: usize,
    },
    Abelian {
        bound_k: usize,
        bound_s: usize,
        greedy_guarantee: usize,
    },
    Ms {
        generic_absence_below: String,
        guaranteed_at_or_above: String,
        regime: MsRegime,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Records {
    Center(Vec<CenterRecord>),
    Abelian(Vec<AbelianRecord>),
    Ms(Vec<MsRecord>),
}

impl Records {
    pub fn len(&self) -> usize {
        match self {
            Records::Center(r) => r.len(),
            Records::Abelian(r) => r.len(),
            Records::Ms(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Aggregate {
    Center(CenterAggregate),
    Abelian(AbelianAggregate),
    Ms(MsAggregate),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub prediction: Prediction,
    pub records: Records,
    pub aggregate: Aggregate,
    pub verdict: Verdict,
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Flat `(key, value)` summary of prediction, aggregate and verdict.
    pub fn summary(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("kind".to_string(), kind_name(self.config.kind).to_string()),
            ("n".into(), self.config.n.to_string()),
            ("t".into(), self.config.t.to_string()),
        ];
        if let (Some(n0), Some(t0)) = (self.config.n0, self.config.t0) {
            out.push(("n0".into(), n0.to_string()));
            out.push(("t0".into(), t0.to_string()));
        }
        out.push(("trials".into(), self.records.len().to_string()));
        out.push(("seed".into(), self.config.seed.to_string()));
        for part in [
            serde_json::to_value(&self.prediction),
            serde_json::to_value(&self.aggregate),
        ] {
            if let Ok(serde_json::Value::Object(map)) = part {
                for (k, v) in map {
                    let text = match v {
                        serde_json::Value::String(s) => s,
                        serde_json::Value::Null => "-".into(),
                        other => other.to_string(),
                    };
                    out.push((k, text));
                }
            }
        }
        out.push(("consistent".into(), self.verdict.consistent.to_string()));
        out.push(("disagreements".into(), self.verdict.disagreements.len().to_string()));
        out.push(("notable".into(), self.verdict.notable.len().to_string()));
        out
    }
}

fn kind_name(kind: ExperimentKind) -> &'static str {
    match kind {
        ExperimentKind::Center => "center",
        ExperimentKind::Abelian => "abelian",
        ExperimentKind::Ms => "ms",
    }
}

fn frequency(count: usize, total: usize) -> f64 {
    if total == 0 {
        0.0
    } else {
        count as f64 / total as f64
    }
}

fn basis_strings<F: Field>(u: &Subspace<F>) -> Vec<String> {
    u.vectors()
        .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect()
}

fn check_kind(cfg: &ExperimentConfig, kind: ExperimentKind) -> Result<()> {
    if cfg.kind != kind {
        return Err(Error::Config(format!(
            "configuration is for a {} experiment",
            kind_name(cfg.kind)
        )));
    }
    cfg.validate()
}

pub fn run(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    match cfg.kind {
        ExperimentKind::Center => run_center_experiment(cfg),
        ExperimentKind::Abelian => run_abelian_experiment(cfg),
        ExperimentKind::Ms => run_ms_experiment(cfg),
    }
}

/// Compares `dim Z(L)` of sampled algebras with the generic value.
pub fn run_center_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    check_kind(cfg, ExperimentKind::Center)?;
    let predicted = generic_center_dim(cfg.n, cfg.t);
    let records: Vec<CenterRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let phi = cfg.tuple(trial)?;
            let group = GroupPresentation::new(phi)?;
            let l = group.algebra();
            let center_dim = l.center_dim();
            Ok(CenterRecord {
                trial,
                center_dim,
                group_center_rank: group.center_rank(),
                derived_dim: l.derived_dim(),
                matches: center_dim == predicted,
            })
        })
        .collect::<Result<_>>()?;
    let matches = records.iter().filter(|r| r.matches).count();
    let disagreements = records
        .iter()
        .filter(|r| !r.matches)
        .map(|r| format!("trial {}: center dimension {} but {} predicted", r.trial, r.center_dim, predicted))
        .chain(
            records
                .iter()
                .filter(|r| r.derived_dim != cfg.t)
                .map(|r| format!("trial {}: derived dimension {} for t = {}", r.trial, r.derived_dim, cfg.t)),
        )
        .collect();
    Ok(ExperimentReport {
        config: cfg.clone(),
        prediction: Prediction::Center {
            predicted_center_dim: predicted,
        },
        aggregate: Aggregate::Center(CenterAggregate {
            matches,
            match_frequency: frequency(matches, records.len()),
        }),
        records: Records::Center(records),
        verdict: Verdict::new(disagreements, Vec::new()),
    })
}

fn subgroup_is_abelian(group: &GroupPresentation, u: &Subspace<Rationals>) -> Result<bool> {
    let gens = u
        .vectors()
        .map(|v| group.element(clear_denominators(v), vec![Zero::zero(); group.t()]))
        .collect::<Result<Vec<_>>>()?;
    for (i, g) in gens.iter().enumerate() {
        for h in &gens[i + 1..] {
            if !group.commutator(g, h)?.is_identity() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Greedy isotropic subspaces over `Q` against the exhaustive `F_p` oracle
/// and the bounds `bound_k`, `bound_s`.
pub fn run_abelian_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    check_kind(cfg, ExperimentKind::Abelian)?;
    let bk = bound_k(cfg.n, cfg.t)?;
    let bs = bound_s(cfg.n, cfg.t)?;
    let guarantee = cfg.n.div_ceil(cfg.t + 1);
    let p = cfg.prime.unwrap_or(3);
    let fp = PrimeField::new(p)?;
    let records: Vec<AbelianRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let phi = cfg.tuple(trial)?;
            let cert = greedy_isotropic(&phi, cfg.search_seed(trial), cfg.restarts)?;
            let group = GroupPresentation::new(phi.clone())?;
            let subgroup_abelian = subgroup_is_abelian(&group, &cert.subspace)?;
            let reduced = phi.reduce_mod(&fp)?;
            let (dim, witness) = isotropic_dim_fp(&reduced, 2, cfg.enum_cap)?;
            let oracle = match dim {
                OracleDim::Exact(d) => OracleColumn::Exact { dim: d },
                OracleDim::AtLeast(d) if d >= 2 => OracleColumn::AtLeast { dim: d },
                OracleDim::AtLeast(_) => OracleColumn::Skipped,
            };
            Ok(AbelianRecord {
                trial,
                greedy_dim: cert.dim(),
                greedy_verified: cert.verified,
                greedy_basis: basis_strings(&cert.subspace),
                subgroup_abelian,
                prime: p,
                reduction_independent: reduced.is_independent(),
                oracle,
                oracle_witness_verified: witness.as_ref().map(|w| is_isotropic(&reduced, w)),
                oracle_witness: witness.as_ref().map(basis_strings),
            })
        })
        .collect::<Result<_>>()?;

    let mut disagreements = Vec::new();
    let mut notable = Vec::new();
    for r in &records {
        if !r.greedy_verified || !r.subgroup_abelian || r.oracle_witness_verified == Some(false) {
            disagreements.push(format!("trial {}: unverified isotropic subspace", r.trial));
        }
        if r.greedy_dim < guarantee {
            disagreements.push(format!(
                "trial {}: greedy dimension {} below the guarantee {guarantee}",
                r.trial, r.greedy_dim
            ));
        }
        if cfg.input.is_none() && r.greedy_dim > bk {
            disagreements.push(format!(
                "trial {}: isotropic subspace of dimension {} over Q exceeds bound_k = {bk}",
                r.trial, r.greedy_dim
            ));
        }
        if r.oracle.exceeds(bk) {
            notable.push(format!(
                "trial {}: isotropic subspace mod {p} of dimension above bound_k = {bk}: {}",
                r.trial,
                r.oracle_witness.as_ref().map(|w| w.join("; ")).unwrap_or_default()
            ));
        }
    }
    let greedy_at = records.iter().filter(|r| r.greedy_dim >= bk).count();
    let decided = records.iter().filter(|r| matches!(r.oracle, OracleColumn::Exact { .. })).count();
    let within = records.iter().filter(|r| r.oracle.decided_within(bk)).count();
    let aggregate = AbelianAggregate {
        greedy_min: records.iter().map(|r| r.greedy_dim).min().unwrap_or(0),
        greedy_max: records.iter().map(|r| r.greedy_dim).max().unwrap_or(0),
        greedy_guarantee_met: records.iter().filter(|r| r.greedy_dim >= guarantee).count(),
        greedy_at_bound_k: greedy_at,
        greedy_attainment_frequency: frequency(greedy_at, records.len()),
        greedy_violations: records.iter().filter(|r| r.greedy_dim > bk).count(),
        oracle_decided: decided,
        oracle_within_bound_k: within,
        oracle_exceeds_bound_k: records.iter().filter(|r| r.oracle.exceeds(bk)).count(),
        oracle_skipped: records.iter().filter(|r| r.oracle == OracleColumn::Skipped).count(),
        oracle_within_frequency: frequency(within, decided),
    };
    Ok(ExperimentReport {
        config: cfg.clone(),
        prediction: Prediction::Abelian {
            bound_k: bk,
            bound_s: bs,
            greedy_guarantee: guarantee,
        },
        records: Records::Abelian(records),
        aggregate: Aggregate::Abelian(aggregate),
        verdict: Verdict::new(disagreements, notable),
    })
}

/// Searches for surjection certificates and compares the outcome with the
/// regime given by the threshold bracket.
pub fn run_ms_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    check_kind(cfg, ExperimentKind::Ms)?;
    let (n0, t0) = (cfg.n0.expect("validated"), cfg.t0.expect("validated"));
    let thresholds = ms_thresholds(cfg.n, n0, t0)?;
    let regime = thresholds.regime(cfg.t);
    let single_even = cfg.t == 1 && cfg.n.is_multiple_of(2);
    let records: Vec<MsRecord> = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let l = LieAlgebra2::new(cfg.tuple(trial)?)?;
            let strategy = match cfg.strategy {
                SearchStrategy::ExhaustiveFp => MsStrategy::ExhaustiveFp {
                    p: l.default_prime(cfg.prime.unwrap_or(3))?,
                    cap: cfg.enum_cap,
                },
                SearchStrategy::RandomizedQ => MsStrategy::RandomizedQ {
                    trials: cfg.search_trials,
                    seed: cfg.search_seed(trial),
                },
            };
            let search = l.ms_search(n0, t0, &strategy)?;
            let verified = match &search.witness {
                None => None,
                Some(MsWitness::Q { u }) => Some(l.ms_certificate(u, n0, t0)?),
                Some(MsWitness::Fp { p, u }) => {
                    let reduced = l.reduce_mod(&PrimeField::new(*p)?)?;
                    Some(reduced.ms_certificate(u, n0, t0)?)
                }
            };
            let (pfaffian, nonzero_mod_p) = if single_even {
                let pf = l.phi().form(0).matrix().pfaffian()?;
                let nonzero = match strategy {
                    MsStrategy::ExhaustiveFp { p, .. } => {
                        Some(!PrimeField::new(p)?.reduce_rational(&pf)?.0.is_zero())
                    }
                    MsStrategy::RandomizedQ { .. } => Some(!pf.is_zero()),
                };
                (Some(pf.to_string()), nonzero)
            } else {
                (None, None)
            };
            Ok(MsRecord {
                trial,
                strategy,
                found: search.witness.is_some(),
                examined: search.examined,
                certificate: search.witness.as_ref().map(|w| w.basis_strings()),
                certificate_verified: verified,
                pfaffian,
                pfaffian_nonzero_mod_p: nonzero_mod_p,
            })
        })
        .collect::<Result<_>>()?;

    let over_q = cfg.strategy == SearchStrategy::RandomizedQ;
    let mut disagreements = Vec::new();
    let mut notable = Vec::new();
    for r in &records {
        if r.certificate_verified == Some(false) {
            disagreements.push(format!("trial {}: certificate fails verification", r.trial));
        }
        match regime {
            MsRegime::Guaranteed if !r.found => {
                disagreements.push(format!("trial {}: no certificate although every U works", r.trial));
            }
            MsRegime::GenericAbsence if r.found => {
                if over_q || r.pfaffian_nonzero_mod_p == Some(true) {
                    disagreements.push(format!("trial {}: certificate found where none should exist", r.trial));
                } else {
                    notable.push(format!("trial {}: certificate exists after reduction mod p", r.trial));
                }
            }
            _ => {}
        }
    }
    let found = records.iter().filter(|r| r.found).count();
    let nondegenerate: Option<Vec<&MsRecord>> =
        single_even.then(|| records.iter().filter(|r| r.pfaffian_nonzero_mod_p == Some(true)).collect());
    let aggregate = MsAggregate {
        found,
        found_frequency: frequency(found, records.len()),
        all_certificates_verified: records.iter().all(|r| r.certificate_verified != Some(false)),
        nondegenerate_trials: nondegenerate.as_ref().map(Vec::len),
        found_among_nondegenerate: nondegenerate.as_ref().map(|v| v.iter().filter(|r| r.found).count()),
    };
    Ok(ExperimentReport {
        config: cfg.clone(),
        prediction: Prediction::Ms {
            generic_absence_below: thresholds.generic_absence_below.to_string(),
            guaranteed_at_or_above: thresholds.guaranteed_at_or_above.to_string(),
            regime,
        },
        records: Records::Ms(records),
        aggregate: Aggregate::Ms(aggregate),
        verdict: Verdict::new(disagreements, notable),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdRow {
    pub n: usize,
    pub n0: usize,
    pub t0: usize,
    pub generic_absence_below: String,
    pub guaranteed_at_or_above: String,
    /// Bound for surjections onto algebras of dimension `n0 + t0 < n`.
    pub corollary_bound: Option<String>,
    /// The absence bound does not exceed the guarantee bound.
    pub ordered: bool,
}

/// One row per `(n, n0, t0)` with `2 <= n0 <= n` and `1 <= t0 <= n0(n0-1)/2`.
pub fn threshold_table(
    ns: impl IntoIterator<Item = usize>,
    n0s: impl IntoIterator<Item = usize>,
) -> Result<Vec<ThresholdRow>> {
    let n0s: Vec<usize> = n0s.into_iter().collect();
    let mut rows = Vec::new();
    for n in ns {
        for &n0 in n0s.iter().filter(|&&n0| n0 >= 2 && n0 <= n) {
            for t0 in 1..=form_space_dim(n0) {
                let th = ms_thresholds(n, n0, t0)?;
                let corollary = if n0 + t0 < n {
                    Some(corollary_bound(n, n0 + t0)?.to_string())
                } else {
                    None
                };
                rows.push(ThresholdRow {
                    n,
                    n0,
                    t0,
                    ordered: th.generic_absence_below <= th.guaranteed_at_or_above,
                    generic_absence_below: th.generic_absence_below.to_string(),
                    guaranteed_at_or_above: th.guaranteed_at_or_above.to_string(),
                    corollary_bound: corollary,
                });
            }
        }
    }
    Ok(rows)
}
