use serde_json::{json, Value};

use subspace_cpd::calibration::{
    calibrate_threshold, compare, sweep_window, ArlMethod, CalibrationConfig, ExperimentRow,
    McConfig, RunLengths, SprtRunLengths, TrialSummary,
};
use subspace_cpd::detectors::{trace, Detector};
use subspace_cpd::io::{read_stream_csv, write_stream_csv};
use subspace_cpd::models::{reduce_switching, reduction_for};
use subspace_cpd::theory::{
    beta_coefficient, edd_lower_bound, threshold_prop1, threshold_prop2, tw_center_scale,
};
use subspace_cpd::{ChangeTime, DetectorSpec, Sampler, SpikedModel, SwitchSpec};

use crate::config::{DetectorKind, RunConfig};
use crate::table::{Cell, Table};
use crate::CliError;

const DEFAULT_CAP: usize = 1_000_000;

/// A finished command: its table and, if the censoring budget was
/// exceeded, a message for the exit status.
pub struct Outcome {
    pub table: Table,
    pub censoring: Option<String>,
}

impl Outcome {
    fn ok(table: Table) -> Self {
        Self {
            table,
            censoring: None,
        }
    }
}

/// Tracks the worst censored fraction over a command's estimates.
struct CensorCheck {
    budget: f64,
    worst: Option<String>,
}

impl CensorCheck {
    fn new(cfg: &RunConfig) -> Result<Self, CliError> {
        Ok(Self {
            budget: cfg.censor_budget()?,
            worst: None,
        })
    }

    fn add(&mut self, what: impl FnOnce() -> String, censored: usize, trials: usize) {
        if trials > 0 && censored as f64 > self.budget * trials as f64 && self.worst.is_none() {
            self.worst = Some(format!(
                "censoring budget exceeded: {censored} of {trials} trials censored ({}); raise --cap",
                what()
            ));
        }
    }

    fn finish(self, table: Table) -> Outcome {
        Outcome {
            table,
            censoring: self.worst,
        }
    }
}

fn calibration_config(cfg: &RunConfig, target: f64) -> CalibrationConfig {
    let mut c = CalibrationConfig::new(target, cfg.trials(), cfg.seed());
    c.cap = cfg.cap;
    c.tolerance = cfg.tolerance.unwrap_or(c.tolerance);
    c.method = cfg.method();
    c.allow_short_target = cfg.allow_short_arl.unwrap_or(false);
    c
}

fn mc_config(cfg: &RunConfig) -> McConfig {
    McConfig::new(cfg.trials(), cfg.seed(), cfg.cap.unwrap_or(DEFAULT_CAP))
}

pub fn theory(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let (w, k) = (cfg.w()?, cfg.k()?);
    let targets = cfg.targets()?;
    let simulate = cfg.simulate.unwrap_or(false);
    let c = tw_center_scale(w, k)?;
    let beta = beta_coefficient(k, w)?;
    let mut cols = vec!["target_arl", "prop1_b", "prop1_b_over_w", "prop2_b", "prop2_b_over_w"];
    if simulate {
        cols.extend(["sim_b", "sim_b_over_w", "sim_arl", "sim_arl_se", "sim_censored"]);
    }
    cols.push("note");
    let mut table = Table::new(&cols);
    table.extra.insert("mu".into(), json!(c.mu));
    table.extra.insert("sigma".into(), json!(c.sigma));
    table.extra.insert("beta".into(), json!(beta));
    let mut censor = CensorCheck::new(cfg)?;
    let wf = w as f64;
    for &target in &targets {
        let mut notes = Vec::new();
        let p1 = threshold_prop1(target, w, k)?;
        if let Some(warn) = &p1.warning {
            notes.push(warn.clone());
        }
        let p2 = match threshold_prop2(target, w, k) {
            Ok(b) => Some(b),
            Err(e) => {
                notes.push(format!("prop2: {e}"));
                None
            }
        };
        let mut row: Vec<Cell> = vec![
            target.into(),
            p1.b.into(),
            (p1.b / wf).into(),
            p2.into(),
            p2.map(|b| b / wf).into(),
        ];
        if simulate {
            let model = SpikedModel::axis(k, cfg.sigma2()?, 1.0, 0)?;
            let det = DetectorSpec::LargestEigenvalue { k, w };
            let mut cc = calibration_config(cfg, target);
            cc.method = ArlMethod::Direct;
            let cal = calibrate_threshold(&det, &model, &cc)?;
            if !cal.converged {
                notes.push("simulation did not reach the tolerance".into());
            }
            censor.add(|| format!("ARL {target}"), cal.summary.n_censored, cal.summary.trials);
            row.extend([
                cal.threshold.into(),
                (cal.threshold / wf).into(),
                cal.summary.mean.into(),
                cal.summary.std_err.into(),
                cal.summary.n_censored.into(),
            ]);
        }
        row.push(Cell::Text(notes.join("; ")));
        table.push(row);
    }
    Ok(censor.finish(table))
}

pub fn calibrate(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let model = cfg.model()?;
    let det = cfg.single_detector(&model)?;
    let targets = cfg.targets()?;
    for &t in &targets {
        calibration_config(cfg, t).validate(&det)?;
    }
    let mut table = Table::new(&[
        "detector", "w", "target_arl", "b", "b_over_w", "arl_hat", "arl_se", "censored", "trials",
        "evaluations", "converged",
    ]);
    let mut censor = CensorCheck::new(cfg)?;
    for &target in &targets {
        let cal = calibrate_threshold(&det, &model, &calibration_config(cfg, target))?;
        let s = &cal.summary;
        censor.add(|| format!("ARL {target}"), s.n_censored, s.trials);
        table.push(vec![
            det.name().into(),
            det.window().into(),
            target.into(),
            cal.threshold.into(),
            det.window().map(|w| cal.threshold / w as f64).into(),
            s.mean.into(),
            s.std_err.into(),
            s.n_censored.into(),
            s.trials.into(),
            cal.evaluations.into(),
            cal.converged.into(),
        ]);
    }
    Ok(censor.finish(table))
}

fn check_thresholds(b: &[f64]) -> Result<(), CliError> {
    match b.iter().find(|v| !(**v >= 0.0) || !v.is_finite()) {
        Some(v) => Err(CliError::Validation(format!("thresholds must be finite and >= 0, got {v}"))),
        None => Ok(()),
    }
}

fn summary_cells(det: &DetectorSpec, b: f64, s: &TrialSummary) -> Vec<Cell> {
    vec![
        det.name().into(),
        det.window().into(),
        b.into(),
        s.mean.into(),
        s.std_err.into(),
        s.n_censored.into(),
        s.trials.into(),
    ]
}

pub fn arl(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let model = cfg.model()?;
    let det = cfg.single_detector(&model)?;
    let bs = cfg.thresholds()?;
    check_thresholds(&bs)?;
    let mc = mc_config(cfg);
    let mut table = Table::new(&["detector", "w", "b", "arl_hat", "arl_se", "censored", "trials", "method"]);
    let mut censor = CensorCheck::new(cfg)?;
    let method = cfg.method();
    enum Estimator {
        Direct(RunLengths),
        Sprt(SprtRunLengths),
    }
    let mut est = match method {
        ArlMethod::Direct => Estimator::Direct(RunLengths::pre_change(&det, &model, &mc)?),
        ArlMethod::Sprt => Estimator::Sprt(SprtRunLengths::new(&det, &model, &mc)?),
    };
    for &b in &bs {
        let s = match &mut est {
            Estimator::Direct(r) => r.summary(b)?,
            Estimator::Sprt(r) => r.summary(b)?,
        };
        censor.add(|| format!("b = {b}"), s.n_censored, s.trials);
        let mut row = summary_cells(&det, b, &s);
        row.push(if method == ArlMethod::Sprt { "sprt" } else { "direct" }.into());
        table.push(row);
    }
    Ok(censor.finish(table))
}

pub fn edd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let model = cfg.model()?;
    let det = cfg.single_detector(&model)?;
    let bs = cfg.thresholds()?;
    check_thresholds(&bs)?;
    let mut runs = RunLengths::post_change(&det, &model, &mc_config(cfg))?;
    let mut table = Table::new(&["detector", "w", "b", "edd_hat", "edd_se", "censored", "trials", "bound"]);
    let mut censor = CensorCheck::new(cfg)?;
    for &b in &bs {
        let s = runs.summary(b)?;
        censor.add(|| format!("b = {b}"), s.n_censored, s.trials);
        let bound = match det {
            DetectorSpec::LargestEigenvalue { .. } if model.rho() > 0.0 => {
                Some(edd_lower_bound(b, model.rho(), model.sigma2())?)
            }
            _ => None,
        };
        let mut row = summary_cells(&det, b, &s);
        row.push(bound.into());
        table.push(row);
    }
    Ok(censor.finish(table))
}

const ROW_COLUMNS: [&str; 9] = [
    "detector", "w", "target_arl", "b", "arl_hat", "arl_se", "edd_hat", "edd_se", "censored",
];

fn row_cells(r: &ExperimentRow) -> Vec<Cell> {
    vec![
        r.detector.as_str().into(),
        r.w.into(),
        r.target_arl.into(),
        r.b.into(),
        r.arl_hat.into(),
        r.arl_se.into(),
        r.edd_hat.into(),
        r.edd_se.into(),
        r.censored.into(),
    ]
}

pub fn compare_cmd(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let model = cfg.model()?;
    let kinds = cfg.detectors.clone().unwrap_or_else(|| {
        vec![DetectorKind::Cusum, DetectorKind::SubspaceCusum, DetectorKind::LargestEigenvalue]
    });
    let dets = kinds
        .iter()
        .map(|&k| cfg.detector(k, &model))
        .collect::<Result<Vec<_>, _>>()?;
    let targets = cfg.targets()?;
    let exp = cfg.experiment()?;
    for det in &dets {
        for &t in &targets {
            let mut c = calibration_config(cfg, t);
            c.allow_short_target = exp.allow_short_target;
            c.validate(det)?;
        }
    }
    let rows = compare(&dets, &model, &targets, &exp)?;
    let mut table = Table::new(&ROW_COLUMNS);
    let mut censor = CensorCheck::new(cfg)?;
    for r in &rows {
        censor.add(
            || format!("{} at ARL {}", r.detector, r.target_arl),
            r.censored,
            exp.trials + exp.edd_trials,
        );
        table.push(row_cells(r));
    }
    Ok(censor.finish(table))
}

pub fn sweep(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let model = cfg.model()?;
    let family = cfg.sweep_family(&model)?;
    let windows = cfg
        .windows
        .clone()
        .filter(|w| !w.is_empty())
        .ok_or_else(|| CliError::Validation("--windows is required".into()))?;
    let targets = cfg.targets()?;
    let exp = cfg.experiment()?;
    for &w in &windows {
        let det = family.at_window(model.k(), w)?;
        det.validate()?;
        for &t in &targets {
            let mut c = calibration_config(cfg, t);
            c.allow_short_target = exp.allow_short_target;
            c.validate(&det)?;
        }
    }
    let result = sweep_window(&family, &model, &windows, &targets, &exp)?;
    let mut cols = ROW_COLUMNS.to_vec();
    cols.push("min_edd");
    let mut table = Table::new(&cols);
    let mut censor = CensorCheck::new(cfg)?;
    for r in &result.rows {
        censor.add(
            || format!("w = {:?} at ARL {}", r.w, r.target_arl),
            r.censored,
            exp.trials + exp.edd_trials,
        );
        let mut row = row_cells(r);
        row.push(result.envelope.contains(r).into());
        table.push(row);
    }
    let argmin: Vec<Value> = result
        .argmin_w()
        .iter()
        .map(|(t, w)| json!({"target_arl": t, "w": w}))
        .collect();
    table.extra.insert("argmin_w".into(), Value::Array(argmin));
    Ok(censor.finish(table))
}

pub fn project(cfg: &RunConfig, echo: &Value) -> Result<Outcome, CliError> {
    let k = cfg.k()?;
    let u1 = cfg.direction(cfg.u1.as_deref(), k, 1)?;
    let u2 = cfg.direction(cfg.u2.as_deref(), k, 2)?;
    let theta = cfg.theta()?;
    let sigma2 = cfg.sigma2()?;
    let red = reduction_for(theta, &u1, &u2)?;
    let mut table = Table::new(&["quantity", "i", "j", "value"]);
    table.push(vec!["theta_tilde".into(), Cell::Empty, Cell::Empty, red.theta_tilde.into()]);
    if let Some(u) = &red.u_reduced {
        for (i, v) in u.iter().enumerate() {
            table.push(vec!["u_reduced".into(), i.into(), Cell::Empty, (*v).into()]);
        }
    }
    for (i, row) in red.projection.rows().iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            table.push(vec!["q".into(), i.into(), j.into(), (*v).into()]);
        }
    }
    table.extra.insert("theta_tilde".into(), json!(red.theta_tilde));
    table.extra.insert("detectable".into(), json!(red.detectable()));

    let ys = if let Some(path) = &cfg.input {
        let file = read_stream_csv(std::fs::File::open(path)?)?;
        let ys = file
            .rows
            .iter()
            .map(|x| red.projection.apply(x))
            .collect::<subspace_cpd::Result<Vec<_>>>()?;
        Some(ys)
    } else if let Some(n) = cfg.n {
        let spec = SwitchSpec {
            sigma2,
            theta,
            u1,
            u2,
            tau: cfg.tau.map_or(ChangeTime::Never, ChangeTime::At),
            n,
            seed: cfg.seed(),
        };
        Some(reduce_switching(&spec)?.0)
    } else {
        None
    };
    if let Some(ys) = ys {
        let path = cfg.stream_out.as_ref().ok_or_else(|| {
            CliError::Validation("--stream-out is required with --n or --input".into())
        })?;
        let meta = json!({"projected": true, "theta_tilde": red.theta_tilde, "source": echo});
        write_stream_csv(std::fs::File::create(path)?, &meta, &ys)?;
        table.extra.insert("projected_rows".into(), json!(ys.len()));
    }
    Ok(Outcome::ok(table))
}

pub fn trace_cmd(cfg: &RunConfig, echo: &Value) -> Result<Outcome, CliError> {
    let bs = cfg.thresholds()?;
    let [b] = bs.as_slice() else {
        return Err(CliError::Validation("trace takes exactly one --b".into()));
    };
    if b.is_nan() {
        return Err(CliError::Validation("--b must not be NaN".into()));
    }
    let (model, xs) = if let Some(path) = &cfg.input {
        let file = read_stream_csv(std::fs::File::open(path)?)?;
        let k = match (cfg.k, file.dim()) {
            (_, Some(d)) => d,
            (Some(k), None) => k,
            (None, None) => return Err(CliError::Validation("empty stream: give --k".into())),
        };
        let cfg_k = RunConfig {
            k: Some(k),
            ..cfg.clone()
        };
        (cfg_k.model()?, file.rows)
    } else {
        let model = cfg.model()?;
        let n = cfg.n.ok_or_else(|| CliError::Validation("--n or --input is required".into()))?;
        let tau = cfg.tau.map_or(ChangeTime::Never, ChangeTime::At);
        let mut s = Sampler::new(&model, tau, cfg.seed());
        let xs: Vec<Vec<f64>> = (0..n).map(|_| s.next_vec()).collect();
        if let Some(path) = &cfg.stream_out {
            write_stream_csv(std::fs::File::create(path)?, echo, &xs)?;
        }
        (model, xs)
    };
    let spec = cfg.single_detector(&model)?;
    let mut det: Box<dyn Detector> = spec.build(*b)?;
    let rows = trace(det.as_mut(), xs.iter().map(Vec::as_slice))?;
    let mut table = Table::new(&["t", "statistic", "threshold", "stopped"]);
    for r in &rows {
        table.push(vec![r.t.into(), r.statistic.into(), r.threshold.into(), r.stopped.into()]);
    }
    let stopped = det.stopped_at();
    table.extra.insert("stopped_at".into(), json!(stopped));
    table.extra.insert("lookahead".into(), json!(spec.lookahead()));
    Ok(Outcome::ok(table))
}
