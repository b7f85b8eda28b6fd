//! Benchmark harness: build frames for every (topology, kind, extension,
//! demand) cell, time the construction and collect the results.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{Read, Write};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::channel::{generate_topology, ChannelParams, Scenario, TopologyParams};
use crate::error::{Error, Result};
use crate::incrementer::{increment_until, AttributedFrame};
use crate::model::{
    BufferState, LinkQualityMatrix, Network, PlainPolicy, RoutingTable, ScheduleFrame,
};
use crate::oracle::{analytic_bound, simulate_frame};
use crate::routing::etx_route;
use crate::schedex::{schedex_plan, ReliabilityBound};
use crate::scheduling::{run_scheduler, SchedulerKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extension {
    None,
    SchedEx,
    Incrementer,
}

impl Extension {
    pub const ALL: [Extension; 3] = [Extension::None, Extension::SchedEx, Extension::Incrementer];

    pub fn name(self) -> &'static str {
        match self {
            Extension::None => "none",
            Extension::SchedEx => "schedex",
            Extension::Incrementer => "incrementer",
        }
    }

    /// Plain scheduling ignores the demand.
    pub fn uses_rho(self) -> bool {
        self != Extension::None
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Extension {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "none" | "plain" => Ok(Extension::None),
            "schedex" => Ok(Extension::SchedEx),
            "incrementer" => Ok(Extension::Incrementer),
            other => Err(Error::Parse(format!("unknown extension `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Parse(format!("unknown output format `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub topologies: usize,
    pub rhos: Vec<f64>,
    pub kinds: Vec<SchedulerKind>,
    pub extensions: Vec<Extension>,
    pub seed: u64,
    /// Monte-Carlo trials per record; 0 disables.
    pub trials: u64,
    /// Run cells one at a time so timings do not compete for cores.
    pub timing_strict: bool,
    /// Largest frame the Incrementer may grow to.
    pub max_slots: usize,
    /// Builds per cell; the fastest one is reported.
    pub repeats: usize,
    pub channel: ChannelParams,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![50, 200],
            topologies: 10,
            rhos: vec![0.9, 0.999, 0.99999],
            kinds: SchedulerKind::ALL.to_vec(),
            extensions: Extension::ALL.to_vec(),
            seed: 1,
            trials: 0,
            timing_strict: false,
            max_slots: 200_000,
            repeats: 1,
            channel: ChannelParams::default(),
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.kinds.is_empty() || self.extensions.is_empty() {
            return Err(Error::Domain(
                "sizes, kinds and extensions must be nonempty".into(),
            ));
        }
        if self.repeats == 0 {
            return Err(Error::Domain("need at least one build per cell".into()));
        }
        if self.topologies == 0 {
            return Err(Error::Domain("need at least one topology per size".into()));
        }
        if self.extensions.iter().any(|e| e.uses_rho()) && self.rhos.is_empty() {
            return Err(Error::Domain("rhos must be nonempty".into()));
        }
        for &r in &self.rhos {
            ReliabilityBound::new(r)?;
        }
        self.channel.validate()
    }

    /// Seed of the `i`-th topology of every size.
    pub fn topology_seed(&self, i: usize) -> u64 {
        self.seed.wrapping_mul(1_000_003).wrapping_add(i as u64)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub size: usize,
    pub seed: u64,
    pub kind: SchedulerKind,
    pub extension: Extension,
    pub rho: Option<f64>,
    pub frame_slots: usize,
    pub transmissions: usize,
    /// Wall clock of schedule construction only.
    pub runtime_ms: f64,
    /// Closed-form guarantee (SchedEx only).
    pub analytic_bound: Option<f64>,
    /// Reliability of the frame from its per-hop attempt counts.
    pub exact_reliability: Option<f64>,
    pub empirical_rate: Option<f64>,
    pub error: Option<String>,
}

impl BenchRecord {
    pub fn failed(&self) -> bool {
        self.error.is_some()
    }
}

/// A routed network ready for scheduling.
#[derive(Clone, Debug)]
pub struct Instance {
    pub size: usize,
    pub seed: u64,
    pub network: Network,
    pub quality: LinkQualityMatrix,
    pub routing: RoutingTable,
}

impl Instance {
    pub fn generate(size: usize, seed: u64, channel: &ChannelParams) -> Result<Self> {
        let (network, quality) = generate_topology(&TopologyParams::new(size, seed), channel)?;
        Self::route(size, seed, network, quality)
    }

    pub fn from_scenario(s: &Scenario) -> Result<Self> {
        let size = s.network.transceivers().len();
        Self::route(size, s.topology.seed, s.network.clone(), s.quality.clone())
    }

    fn route(size: usize, seed: u64, network: Network, quality: LinkQualityMatrix) -> Result<Self> {
        let routing = etx_route(&network, &quality)?;
        Ok(Instance {
            size,
            seed,
            network,
            quality,
            routing,
        })
    }
}

/// What one cell produced, before it is flattened into a record.
#[derive(Clone, Debug)]
pub struct CellOutput {
    pub frame: ScheduleFrame,
    /// Routing the frame was built for (loads for one packet per node).
    pub routing: RoutingTable,
    pub runtime_ms: f64,
    pub analytic_bound: Option<f64>,
    pub exact_reliability: f64,
}

/// Builds one frame and times its construction, keeping the fastest of
/// `repeats` builds.
pub fn build_cell(
    inst: &Instance,
    kind: SchedulerKind,
    ext: Extension,
    rho: Option<ReliabilityBound>,
    max_slots: usize,
    repeats: usize,
) -> Result<CellOutput> {
    let (net, q, r) = (&inst.network, &inst.quality, &inst.routing);
    let need_rho = || rho.ok_or_else(|| Error::Domain(format!("{ext} needs a demand")));
    match ext {
        Extension::None => {
            let b0 = BufferState::ones(net);
            let (frame, runtime_ms) = fastest(repeats, || {
                run_scheduler(kind, net, q, r, &b0, &mut PlainPolicy)
            })?;
            let exact = AttributedFrame::new(frame.clone(), q)?.reliability();
            Ok(CellOutput {
                frame,
                routing: r.clone(),
                runtime_ms,
                analytic_bound: None,
                exact_reliability: exact,
            })
        }
        Extension::SchedEx => {
            let rho = need_rho()?;
            let (plan, runtime_ms) = fastest(repeats, || schedex_plan(kind, net, q, r, rho))?;
            let bound = analytic_bound(
                &plan.repetitions,
                q,
                &plan.routing,
                plan.routing.packet_loads(),
            )?;
            let exact = AttributedFrame::new(plan.frame.clone(), q)?.reliability();
            Ok(CellOutput {
                frame: plan.frame,
                routing: plan.routing,
                runtime_ms,
                analytic_bound: Some(bound),
                exact_reliability: exact,
            })
        }
        Extension::Incrementer => {
            let rho = need_rho()?;
            let b0 = BufferState::ones(net);
            let (grown, runtime_ms) = fastest(repeats, || {
                let base = run_scheduler(kind, net, q, r, &b0, &mut PlainPolicy)?;
                increment_until(AttributedFrame::new(base, q)?, rho, max_slots)
            })?;
            let exact = grown.reliability();
            Ok(CellOutput {
                frame: grown.into_frame(),
                routing: r.clone(),
                runtime_ms,
                analytic_bound: None,
                exact_reliability: exact,
            })
        }
    }
}

fn fastest<T>(repeats: usize, mut build: impl FnMut() -> Result<T>) -> Result<(T, f64)> {
    let mut best: Option<(T, f64)> = None;
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        let out = build()?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        if best.as_ref().is_none_or(|(_, b)| ms < *b) {
            best = Some((out, ms));
        }
    }
    Ok(best.expect("at least one build"))
}

fn cells(cfg: &BenchConfig) -> Vec<(SchedulerKind, Extension, Option<f64>)> {
    let mut out = Vec::new();
    for &kind in &cfg.kinds {
        for &ext in &cfg.extensions {
            if ext.uses_rho() {
                out.extend(cfg.rhos.iter().map(|&r| (kind, ext, Some(r))));
            } else {
                out.push((kind, ext, None));
            }
        }
    }
    out
}

fn run_instance(
    cfg: &BenchConfig,
    size: usize,
    seed: u64,
    inst: std::result::Result<&Instance, &Error>,
) -> Vec<BenchRecord> {
    cells(cfg)
        .into_iter()
        .map(|(kind, extension, rho)| {
            let mut rec = BenchRecord {
                size,
                seed,
                kind,
                extension,
                rho,
                frame_slots: 0,
                transmissions: 0,
                runtime_ms: 0.0,
                analytic_bound: None,
                exact_reliability: None,
                empirical_rate: None,
                error: None,
            };
            let result = inst.map_err(|e| e.to_string()).and_then(|inst| {
                let out = rho
                    .map(ReliabilityBound::new)
                    .transpose()
                    .and_then(|bound| {
                        build_cell(inst, kind, extension, bound, cfg.max_slots, cfg.repeats)
                    })
                    .map_err(|e| e.to_string())?;
                let empirical = if cfg.trials > 0 {
                    let b0 = BufferState::ones(&inst.network);
                    let sim = simulate_frame(
                        &out.frame,
                        &out.routing,
                        &inst.network,
                        &inst.quality,
                        &b0,
                        cfg.trials,
                        seed ^ 0x5eed,
                    )
                    .map_err(|e| e.to_string())?;
                    Some(sim.rate)
                } else {
                    None
                };
                Ok((out, empirical))
            });
            match result {
                Ok((out, empirical)) => {
                    rec.frame_slots = out.frame.len();
                    rec.transmissions = out.frame.transmission_count();
                    rec.runtime_ms = out.runtime_ms;
                    rec.analytic_bound = out.analytic_bound;
                    rec.exact_reliability = Some(out.exact_reliability);
                    rec.empirical_rate = empirical;
                }
                Err(e) => rec.error = Some(e),
            }
            rec
        })
        .collect()
}

/// Runs every configured cell. Component failures become records with an
/// error message; the run continues.
pub fn run_benchmark(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let jobs: Vec<(usize, u64)> = cfg
        .sizes
        .iter()
        .flat_map(|&n| (0..cfg.topologies).map(move |i| (n, i)))
        .map(|(n, i)| (n, cfg.topology_seed(i)))
        .collect();
    let job = |&(size, seed): &(usize, u64)| {
        let inst = Instance::generate(size, seed, &cfg.channel);
        run_instance(cfg, size, seed, inst.as_ref())
    };
    let records = if cfg.timing_strict {
        jobs.iter().flat_map(job).collect()
    } else {
        jobs.par_iter().flat_map_iter(job).collect()
    };
    Ok(records)
}

/// Runs every configured kind/extension/demand on one loaded scenario.
pub fn run_scenario(cfg: &BenchConfig, scenario: &Scenario) -> Result<Vec<BenchRecord>> {
    let mut cfg = cfg.clone();
    cfg.sizes = vec![scenario.network.transceivers().len()];
    cfg.topologies = 1;
    cfg.validate()?;
    let inst = Instance::from_scenario(scenario);
    let size = scenario.network.transceivers().len();
    Ok(run_instance(
        &cfg,
        size,
        scenario.topology.seed,
        inst.as_ref(),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeanStd {
    pub n: usize,
    pub mean: f64,
    /// Sample standard deviation (n-1); 0 for a single value.
    pub std: f64,
}

impl MeanStd {
    pub fn of(values: &[f64]) -> Option<Self> {
        if values.is_empty() {
            return None;
        }
        let n = values.len();
        let mean = values.iter().sum::<f64>() / n as f64;
        let std = if n > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
        } else {
            0.0
        };
        Some(MeanStd { n, mean, std })
    }
}

impl fmt::Display for MeanStd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.1} ± {:.1}", self.mean, self.std)
    }
}

pub fn geometric_mean(values: &[f64]) -> Option<f64> {
    if values.is_empty() || values.iter().any(|&v| v <= 0.0) {
        return None;
    }
    Some((values.iter().map(|v| v.ln()).sum::<f64>() / values.len() as f64).exp())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub size: usize,
    pub kind: SchedulerKind,
    pub extension: Extension,
    pub rho: Option<f64>,
    pub runtime_ms: MeanStd,
    pub frame_slots: MeanStd,
}

/// SchedEx against Incrementer on the same (size, seed, kind, rho).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioSummary {
    pub size: usize,
    pub kind: SchedulerKind,
    pub rho: f64,
    /// Incrementer time over SchedEx time, per pair.
    pub speedup: MeanStd,
    pub speedup_geomean: f64,
    /// SchedEx frame length over Incrementer frame length, per pair.
    pub size_ratio: MeanStd,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub groups: Vec<GroupSummary>,
    pub ratios: Vec<RatioSummary>,
    pub failed: usize,
}

type GroupKey = (usize, SchedulerKind, Extension, Option<u64>);

pub fn summarize(records: &[BenchRecord]) -> Summary {
    let ok: Vec<&BenchRecord> = records.iter().filter(|r| !r.failed()).collect();
    let mut groups: BTreeMap<GroupKey, Vec<&BenchRecord>> = BTreeMap::new();
    for r in &ok {
        groups
            .entry((r.size, r.kind, r.extension, r.rho.map(f64::to_bits)))
            .or_default()
            .push(r);
    }
    let groups = groups
        .into_values()
        .filter_map(|rs| {
            let t: Vec<f64> = rs.iter().map(|r| r.runtime_ms).collect();
            let s: Vec<f64> = rs.iter().map(|r| r.frame_slots as f64).collect();
            Some(GroupSummary {
                size: rs[0].size,
                kind: rs[0].kind,
                extension: rs[0].extension,
                rho: rs[0].rho,
                runtime_ms: MeanStd::of(&t)?,
                frame_slots: MeanStd::of(&s)?,
            })
        })
        .collect();

    let mut pairs: BTreeMap<(usize, SchedulerKind, u64), Vec<(f64, f64)>> = BTreeMap::new();
    let find = |r: &BenchRecord, ext| {
        ok.iter().find(|o| {
            o.extension == ext
                && o.size == r.size
                && o.seed == r.seed
                && o.kind == r.kind
                && o.rho == r.rho
        })
    };
    for r in ok.iter().filter(|r| r.extension == Extension::SchedEx) {
        if let (Some(inc), Some(rho)) = (find(r, Extension::Incrementer), r.rho) {
            let speed = inc.runtime_ms / r.runtime_ms.max(1e-6);
            let ratio = r.frame_slots as f64 / inc.frame_slots as f64;
            pairs
                .entry((r.size, r.kind, rho.to_bits()))
                .or_default()
                .push((speed, ratio));
        }
    }
    let ratios = pairs
        .into_iter()
        .filter_map(|((size, kind, rho), v)| {
            let speed: Vec<f64> = v.iter().map(|p| p.0).collect();
            let ratio: Vec<f64> = v.iter().map(|p| p.1).collect();
            Some(RatioSummary {
                size,
                kind,
                rho: f64::from_bits(rho),
                speedup: MeanStd::of(&speed)?,
                speedup_geomean: geometric_mean(&speed)?,
                size_ratio: MeanStd::of(&ratio)?,
            })
        })
        .collect();
    Summary {
        groups,
        ratios,
        failed: records.len() - ok.len(),
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:>5} {:>10} {:>12} {:>8} {:>18} {:>18}",
            "size", "kind", "extension", "rho", "time ms", "slots"
        )?;
        for g in &self.groups {
            let rho = g.rho.map_or("-".to_string(), |r| r.to_string());
            writeln!(
                f,
                "{:>5} {:>10} {:>12} {:>8} {:>18} {:>18}",
                g.size,
                g.kind,
                g.extension,
                rho,
                g.runtime_ms.to_string(),
                g.frame_slots.to_string()
            )?;
        }
        if !self.ratios.is_empty() {
            writeln!(f)?;
            writeln!(
                f,
                "{:>5} {:>10} {:>8} {:>18} {:>10} {:>16}",
                "size", "kind", "rho", "speedup", "geomean", "size ratio"
            )?;
            for r in &self.ratios {
                writeln!(
                    f,
                    "{:>5} {:>10} {:>8} {:>18} {:>10.1} {:>16}",
                    r.size,
                    r.kind,
                    r.rho,
                    r.speedup.to_string(),
                    r.speedup_geomean,
                    format!("{:.3} ± {:.3}", r.size_ratio.mean, r.size_ratio.std)
                )?;
            }
        }
        if self.failed > 0 {
            writeln!(f, "\n{} failed records", self.failed)?;
        }
        Ok(())
    }
}

pub fn write_csv(records: &[BenchRecord], out: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(csv_error)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv(input: impl Read) -> Result<Vec<BenchRecord>> {
    csv::Reader::from_reader(input)
        .deserialize()
        .map(|r| r.map_err(csv_error))
        .collect()
}

pub fn write_json(records: &[BenchRecord], out: impl Write) -> Result<()> {
    serde_json::to_writer_pretty(out, records).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_json(input: impl Read) -> Result<Vec<BenchRecord>> {
    serde_json::from_reader(input).map_err(|e| Error::Parse(e.to_string()))
}

pub fn write_records(records: &[BenchRecord], format: OutputFormat, out: impl Write) -> Result<()> {
    match format {
        OutputFormat::Csv => write_csv(records, out),
        OutputFormat::Json => write_json(records, out),
    }
}

fn csv_error(e: csv::Error) -> Error {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Parse(format!("{other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> BenchConfig {
        BenchConfig {
            sizes: vec![50],
            topologies: 2,
            rhos: vec![0.9, 0.999],
            ..BenchConfig::default()
        }
    }

    #[test]
    fn plain_cell_ignores_rho() {
        let cfg = BenchConfig {
            topologies: 1,
            sizes: vec![50],
            kinds: vec![SchedulerKind::NodeBased],
            extensions: vec![Extension::None],
            ..BenchConfig::default()
        };
        assert_eq!(run_benchmark(&cfg).unwrap().len(), 1);
    }

    #[test]
    fn default_record_count() {
        let cfg = BenchConfig::default();
        // 4 kinds x (1 plain + 2 extensions x 3 rhos) per topology
        assert_eq!(cells(&cfg).len(), 4 * (1 + 2 * 3));
    }

    #[test]
    fn records_reproducible_and_guaranteed() {
        let cfg = tiny();
        let a = run_benchmark(&cfg).unwrap();
        let b = run_benchmark(&BenchConfig {
            timing_strict: true,
            ..cfg
        })
        .unwrap();
        assert_eq!(a.len(), 2 * 4 * 5);
        let strip = |rs: &[BenchRecord]| -> Vec<BenchRecord> {
            rs.iter()
                .cloned()
                .map(|r| BenchRecord {
                    runtime_ms: 0.0,
                    ..r
                })
                .collect()
        };
        assert_eq!(strip(&a), strip(&b));
        for r in &a {
            assert!(!r.failed(), "{r:?}");
            assert!(r.frame_slots >= 1);
            let rho = r.rho.unwrap_or(0.0);
            match r.extension {
                Extension::SchedEx => assert!(r.analytic_bound.unwrap() >= rho),
                Extension::Incrementer => assert!(r.exact_reliability.unwrap() >= rho),
                Extension::None => {}
            }
        }
        let s = summarize(&a);
        assert_eq!(s.ratios.len(), 4 * 2);
        assert!(s.to_string().contains("schedex"));
    }

    #[test]
    fn csv_and_json_round_trip() {
        let mut recs = run_benchmark(&BenchConfig {
            topologies: 1,
            ..tiny()
        })
        .unwrap();
        recs[0].error = Some("boom, with a comma".into());
        recs[1].empirical_rate = Some(0.987654321);
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        assert_eq!(read_csv(buf.as_slice()).unwrap(), recs);
        let mut buf = Vec::new();
        write_json(&recs, &mut buf).unwrap();
        assert_eq!(read_json(buf.as_slice()).unwrap(), recs);
    }

    #[test]
    fn sample_std() {
        let m = MeanStd::of(&[10.0, 20.0]).unwrap();
        assert_eq!(m.mean, 15.0);
        assert!((m.std - 7.0710678).abs() < 1e-6);
        assert!(MeanStd::of(&[]).is_none());
        assert!((geometric_mean(&[2.0, 8.0]).unwrap() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn matched_pair_speedup() {
        let base = BenchRecord {
            size: 50,
            seed: 3,
            kind: SchedulerKind::NodeBased,
            extension: Extension::SchedEx,
            rho: Some(0.9),
            frame_slots: 736,
            transmissions: 736,
            runtime_ms: 5.0,
            analytic_bound: Some(0.95),
            exact_reliability: Some(0.97),
            empirical_rate: None,
            error: None,
        };
        let inc = BenchRecord {
            extension: Extension::Incrementer,
            frame_slots: 609,
            runtime_ms: 274.0,
            analytic_bound: None,
            ..base.clone()
        };
        let s = summarize(&[base, inc]);
        assert!((s.ratios[0].speedup.mean - 54.8).abs() < 1e-9);
        assert!((s.ratios[0].size_ratio.mean - 736.0 / 609.0).abs() < 1e-12);
    }

    #[test]
    fn failures_become_records() {
        let cfg = BenchConfig {
            max_slots: 1,
            topologies: 1,
            ..tiny()
        };
        let recs = run_benchmark(&cfg).unwrap();
        let inc_failed = recs
            .iter()
            .filter(|r| r.extension == Extension::Incrementer)
            .all(|r| r.failed());
        assert!(inc_failed);
        assert_eq!(summarize(&recs).failed, 4 * 2);
    }

    #[test]
    fn names_parse() {
        for e in Extension::ALL {
            assert_eq!(e.to_string().parse::<Extension>().unwrap(), e);
        }
        assert_eq!("JSON".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
        assert!("xml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn invalid_config_rejected() {
        assert!(run_benchmark(&BenchConfig {
            repeats: 0,
            ..tiny()
        })
        .is_err());
        assert!(run_benchmark(&BenchConfig {
            topologies: 0,
            ..tiny()
        })
        .is_err());
        assert!(run_benchmark(&BenchConfig {
            rhos: vec![1.0],
            ..tiny()
        })
        .is_err());
    }
}
