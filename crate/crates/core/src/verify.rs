//! Batch verification families and the versioned report format.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fock::check_relations;
use crate::partition::{n_left, BoxRef, Partition};
use crate::ring::{agrees, agrees_q, render_q_integers, unit_ratio, RatFunc, Tolerance, WeightVec};
use crate::verma::{
    ev_jantzen_closed, eval_jantzen_s_closed, gram_matrix, gram_matrix_on, jantzen_s_closed, jantzen_valuation,
    lemma62_check, root_weight, shapovalov_det_closed, JantzenEngine,
};
use crate::weyl::verify_theorem61;

pub const SCHEMA: &str = "fwl-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    FockRelations,
    Theorem51,
    Prop52,
    Lemma62,
    Lemma63,
    Prop64,
    Prop65,
    Theorem61,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::FockRelations,
        Family::Theorem51,
        Family::Prop52,
        Family::Lemma62,
        Family::Lemma63,
        Family::Prop64,
        Family::Prop65,
        Family::Theorem61,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::FockRelations => "fock-relations",
            Family::Theorem51 => "theorem51",
            Family::Prop52 => "prop52",
            Family::Lemma62 => "lemma62",
            Family::Lemma63 => "lemma63",
            Family::Prop64 => "prop64",
            Family::Prop65 => "prop65",
            Family::Theorem61 => "theorem61",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::Invalid(format!("unknown family {s:?}")))
    }
}

/// Bounds and comparison mode shared by all families.
#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    pub ell: Vec<u32>,
    /// `None`: each family's own rank range (`parts + 1` for partition families).
    pub rank: Option<usize>,
    pub max_size: u32,
    pub tolerance: Tolerance,
    /// Not echoed in reports, which must not depend on it.
    #[serde(skip)]
    pub jobs: usize,
    #[serde(skip)]
    pub inject_failure: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            ell: vec![2],
            rank: None,
            max_size: 4,
            tolerance: Tolerance::Signed,
            jobs: 0,
            inject_failure: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.ell.is_empty() || self.ell.iter().any(|&l| l < 2) {
            return Err(Error::Invalid("every ell must be at least 2".into()));
        }
        if self.rank.is_some_and(|n| n < 2) {
            return Err(Error::Invalid("rank must be at least 2".into()));
        }
        Ok(())
    }
}

/// One verified instance.
#[derive(Clone, Debug, Serialize)]
pub struct CaseRecord {
    pub family: Family,
    pub case: String,
    pub pass: bool,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub version: &'static str,
    pub config: RunConfig,
    pub cases: Vec<CaseRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(config: RunConfig, cases: Vec<CaseRecord>) -> Self {
        let passed = cases.iter().filter(|c| c.pass).count();
        let failed = cases.len() - passed;
        Report { schema: SCHEMA, version: env!("CARGO_PKG_VERSION"), config, cases, passed, failed }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            s.push_str(&format!("{} {} {}\n", if c.pass { "PASS" } else { "FAIL" }, c.family, c.case));
        }
        s.push_str(&format!("passed: {}, failed: {}\n", self.passed, self.failed));
        s
    }
}

/// A case description before it is run.
#[derive(Clone, Debug)]
enum Task {
    Relations { ell: u32 },
    Gram { rank: usize, nu: Vec<u32> },
    Shift { rank: usize, nu: Vec<u32>, k: usize },
    Lemma62 { rank: usize, k: usize },
    Lemma63 { rank: usize },
    Prop64 { lam: Partition },
    Prop65 { lam: Partition, ell: u32 },
    Theorem61 { lam: Partition, ell: u32, rank: usize },
}

/// Nonzero `nu` in `N^{rank-1}` with `|nu| <= h`, by height then lexicographically.
pub fn multidegrees(rank: usize, h: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, total: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            if cur.iter().sum::<u32>() == total {
                out.push(cur.clone());
            }
            return;
        }
        let used: u32 = cur.iter().sum();
        for x in 0..=total - used {
            cur.push(x);
            rec(len, total, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for t in 1..=h {
        rec(rank - 1, t, &mut Vec::new(), &mut out);
    }
    out
}

fn ranks(config: &RunConfig, default: &[usize]) -> Vec<usize> {
    config.rank.map_or_else(|| default.to_vec(), |n| vec![n])
}

fn tasks(family: Family, config: &RunConfig) -> Vec<Task> {
    let parts = || Partition::all_up_to(config.max_size);
    let mut out = Vec::new();
    match family {
        Family::FockRelations => out.extend(config.ell.iter().map(|&ell| Task::Relations { ell })),
        Family::Theorem51 => {
            for rank in ranks(config, &[2, 3]) {
                let h = if rank == 2 { 4 } else { 3 }.min(config.max_size);
                out.extend(multidegrees(rank, h).into_iter().map(|nu| Task::Gram { rank, nu }));
            }
        }
        Family::Prop52 => {
            for rank in ranks(config, &[2, 3]) {
                for nu in multidegrees(rank, 3.min(config.max_size)) {
                    out.extend((1..=rank).map(|k| Task::Shift { rank, nu: nu.clone(), k }));
                }
            }
        }
        Family::Lemma62 => {
            for rank in ranks(config, &[2, 3]) {
                out.extend((1..=rank).map(|k| Task::Lemma62 { rank, k }));
            }
        }
        Family::Lemma63 => out.extend(ranks(config, &[2, 3]).into_iter().map(|rank| Task::Lemma63 { rank })),
        Family::Prop64 => out.extend(parts().into_iter().map(|lam| Task::Prop64 { lam })),
        Family::Prop65 => {
            for lam in parts() {
                out.extend(config.ell.iter().map(|&ell| Task::Prop65 { lam: lam.clone(), ell }));
            }
        }
        Family::Theorem61 => {
            for &ell in &config.ell {
                for lam in parts() {
                    let rank = config.rank.unwrap_or(lam.len() + 1);
                    if rank > lam.len() {
                        out.push(Task::Theorem61 { lam, ell, rank });
                    }
                }
            }
        }
    }
    out
}

fn nu_string(nu: &[u32]) -> String {
    let v: Vec<String> = nu.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

fn case_name(t: &Task) -> String {
    match t {
        Task::Relations { ell } => format!("ell={ell}"),
        Task::Gram { rank, nu } => format!("N={rank} nu={}", nu_string(nu)),
        Task::Shift { rank, nu, k } => format!("N={rank} nu={} mu=eps{k}", nu_string(nu)),
        Task::Lemma62 { rank, k } => format!("N={rank} eta=eps{k}"),
        Task::Lemma63 { rank } => format!("N={rank}"),
        Task::Prop64 { lam } => format!("lambda=({lam})"),
        Task::Prop65 { lam, ell } => format!("lambda=({lam}) ell={ell}"),
        Task::Theorem61 { lam, ell, rank } => format!("lambda=({lam}) ell={ell} N={rank}"),
    }
}

fn ok(pass: bool, detail: Value) -> Result<(bool, Value)> {
    Ok((pass, detail))
}

/// The rank range used for hook-ratio comparisons of `lam`.
pub fn prop64_ranks(lam: &Partition) -> std::ops::RangeInclusive<usize> {
    let lo = lam.len() + 1;
    lo..=lo.max(5)
}

/// Closed-form evaluation against the hook-ratio formula, every `N` and `k`.
pub fn prop64_case(lam: &Partition, tol: Tolerance) -> Result<(bool, Vec<Value>)> {
    let mut all = true;
    let mut rows = Vec::new();
    for rank in prop64_ranks(lam) {
        let weight = WeightVec::from_parts(lam.parts(), rank);
        for k in 1..=rank {
            let closed = eval_jantzen_s_closed(k, rank, &weight)?;
            let hook = ev_jantzen_closed(lam, k);
            let pass = match &hook {
                Some(h) => agrees_q(&closed, h, tol),
                None => closed.is_zero(),
            };
            all &= pass;
            rows.push(json!({
                "rank": rank,
                "k": k,
                "closed": render_q_integers(&closed),
                "hook": hook.as_ref().map(render_q_integers),
                "pass": pass,
            }));
        }
    }
    Ok((all, rows))
}

fn run_task(t: &Task, config: &RunConfig) -> Result<(bool, Value)> {
    let tol = config.tolerance;
    match t {
        Task::Relations { ell } => {
            let r = check_relations(*ell, config.max_size);
            ok(r.passed, serde_json::to_value(&r).unwrap())
        }
        Task::Gram { rank, nu } => {
            let g = gram_matrix(*rank, &WeightVec::zero(*rank), nu)?;
            let closed = shapovalov_det_closed(&(-&root_weight(*rank, nu)), *rank);
            let u = unit_ratio(&g.det, &closed, false)?;
            ok(
                u.is_some(),
                json!({
                    "words": g.words.len(),
                    "independent": g.independent.len(),
                    "closed": closed.to_string(),
                    "unit": u,
                }),
            )
        }
        Task::Shift { rank, nu, k } => {
            let base = gram_matrix(*rank, &WeightVec::zero(*rank), nu)?;
            let mu = WeightVec::unit(*rank, *k);
            let shifted = gram_matrix_on(*rank, &mu, nu, base.words.clone(), Some(base.independent.clone()))?;
            let expected = base.det.sigma_shift(&mu);
            ok(
                shifted.det == expected,
                json!({ "independent": base.independent.len(), "det": shifted.det.to_string() }),
            )
        }
        Task::Lemma62 { rank, k } => {
            let r = lemma62_check(&WeightVec::unit(*rank, *k), *rank)?;
            let pass = match tol {
                Tolerance::Strict => r.strict,
                Tolerance::Signed => r.signed,
                Tolerance::Unit => unit_ratio(&r.lhs, &r.rhs, false)?.is_some(),
            };
            ok(pass, serde_json::to_value(&r).unwrap())
        }
        Task::Lemma63 { rank } => {
            let mut engine = JantzenEngine::new(*rank);
            let mut all = true;
            let mut rows = Vec::new();
            for k in 1..=*rank {
                let s = engine.s(k)?;
                let closed = jantzen_s_closed(k, *rank);
                let u = unit_ratio(&s, &closed, false)?;
                let pass = u.as_ref().is_some_and(|u| tol.accepts(u)) && agrees(&s, &closed, tol);
                let base = engine.base_coefficient(k)?;
                let triangular = s == &base * &crate::ring::MultiRat::q_pow(*rank, 1 - k as i64);
                all &= pass && triangular;
                rows.push(
                    json!({ "k": k, "engine": s.to_string(), "closed": closed.to_string(), "unit": u, "pass": pass }),
                );
            }
            ok(all, Value::Array(rows))
        }
        Task::Prop64 { lam } => {
            let (pass, rows) = prop64_case(lam, tol)?;
            ok(pass, Value::Array(rows))
        }
        Task::Prop65 { lam, ell } => {
            let mut rows = Vec::new();
            let mut all = true;
            for k in 1..=lam.len() + 1 {
                let Some(v) = jantzen_valuation(lam, k, *ell).or_else(|e| match e {
                    Error::CheckFailed(_) => Ok(None),
                    e => Err(e),
                })?
                else {
                    if lam.add_to_row(k).is_some() {
                        all = false;
                        rows.push(json!({ "k": k, "pass": false }));
                    }
                    continue;
                };
                let b = BoxRef::new(k as u32, lam.part(k) + 1);
                let nl = n_left(lam, b, *ell)?;
                all &= v == nl;
                rows.push(json!({ "k": k, "valuation": v, "n_left": nl, "pass": v == nl }));
            }
            ok(all, Value::Array(rows))
        }
        Task::Theorem61 { lam, ell, rank } => {
            let r = verify_theorem61(lam, *ell, *rank, tol)?;
            ok(r.pass, serde_json::to_value(&r).unwrap())
        }
    }
}

/// Corrupt one Fock exponent of a theorem61 record, or fail the case outright.
fn inject(record: &mut CaseRecord) {
    record.pass = false;
    if let Some(b) = record.detail.get_mut("boxes").and_then(|b| b.get_mut(0)) {
        let e = b["fock_exponent"].as_i64().unwrap_or(0);
        b["fock_exponent"] = json!(e + 1);
        b["pass"] = json!(false);
    }
    if let Some(obj) = record.detail.as_object_mut() {
        obj.insert("injected".into(), json!(true));
    } else {
        record.detail = json!({ "injected": true, "value": record.detail.take() });
    }
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(f)
}

/// Run the given families; cases keep their generation order regardless of `jobs`.
pub fn run_families(families: &[Family], config: &RunConfig) -> Result<Report> {
    config.validate()?;
    let all: Vec<(Family, Task)> =
        families.iter().flat_map(|&f| tasks(f, config).into_iter().map(move |t| (f, t))).collect();
    let mut cases: Vec<CaseRecord> = in_pool(config.jobs, || {
        all.par_iter()
            .map(|(family, t)| {
                let (pass, detail) = match run_task(t, config) {
                    Ok(r) => r,
                    Err(e) => (false, json!({ "error": e.to_string() })),
                };
                CaseRecord { family: *family, case: case_name(t), pass, detail }
            })
            .collect()
    });
    if config.inject_failure {
        if let Some(c) = cases.first_mut() {
            inject(c);
        }
    }
    Ok(Report::new(config.clone(), cases))
}

pub fn run_family(family: Family, config: &RunConfig) -> Result<Report> {
    run_families(&[family], config)
}

/// Render an evaluated value as a product of `q`-integers when possible.
pub fn render_value(r: &RatFunc) -> String {
    if r.is_zero() {
        "0".into()
    } else {
        render_q_integers(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report() {
        let r = Report::new(RunConfig::default(), Vec::new());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["cases"], json!([]));
        assert_eq!(v["passed"], json!(0));
        assert_eq!(v["failed"], json!(0));
        assert_eq!(v["schema"], json!(SCHEMA));
    }

    #[test]
    fn multidegree_counts() {
        assert_eq!(multidegrees(2, 4).len(), 4);
        assert_eq!(multidegrees(3, 3).len(), 9);
    }

    #[test]
    fn small_family_runs() {
        let config = RunConfig { max_size: 2, ..RunConfig::default() };
        for f in [Family::FockRelations, Family::Prop64, Family::Prop65, Family::Theorem61] {
            let r = run_family(f, &config).unwrap();
            assert!(r.all_passed(), "{}", r.to_text());
        }
        let bad = RunConfig { inject_failure: true, ..config };
        let r = run_family(Family::Theorem61, &bad).unwrap();
        assert_eq!(r.failed, 1);
    }
}
