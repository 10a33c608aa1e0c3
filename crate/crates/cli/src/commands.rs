use std::fmt::Write as _;
use std::io::Read;

use anyhow::{anyhow, Context};
use serde::{Deserialize, Serialize};

use sympleig::hmat::{
    adjoint_det, detect_rotation_form, is_symplectic, symplectic_residual, RotationForm,
    EIGEN_TOL,
};
use sympleig::quat::DEFAULT_TOL;
use sympleig::solver::{bound_check, construct as build, BoundCheck, RealMatrix};
use sympleig::topology::{cayley_trace, cover_experiment, five_sigmas, PathPoint, OMEGA_THRESHOLD};
use sympleig::{MatH2, Quaternion};

use crate::Source;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0:#}")]
    Input(anyhow::Error),
    #[error("numerical assertion failed: {0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Numerical(_) => 2,
        }
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Input(e)
    }
}

impl From<sympleig::Error> for CliError {
    fn from(e: sympleig::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Input(e.into())
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_source(src: &Source) -> anyhow::Result<String> {
    match src {
        Source::Stdin => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
        Source::File(p) => {
            std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> anyhow::Result<T> {
    serde_json::from_str(text).with_context(|| format!("malformed {what} JSON"))
}

fn load<T: for<'de> Deserialize<'de>>(src: &Source, what: &str) -> anyhow::Result<T> {
    parse(&read_source(src)?, what)
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| CliError::Input(e.into()))
}

fn check_unit(q: Quaternion, what: &str) -> anyhow::Result<()> {
    if q.is_finite() && q.is_unit(DEFAULT_TOL) {
        Ok(())
    } else {
        Err(anyhow!("{what} has norm {}, expected 1", q.norm()))
    }
}

fn fmt_mat(out: &mut String, m: &MatH2) {
    for line in m.to_string().lines() {
        let _ = writeln!(out, "    {line}");
    }
}

pub fn construct(sigmas: &Source, text: bool) -> Result<String> {
    let sigmas: Vec<Quaternion> = load(sigmas, "sigmas")?;
    let r = build(&sigmas)?;
    if !text {
        return json(&r);
    }
    let mut out = String::new();
    let _ = writeln!(out, "branch     {:?} (rank {})", r.branch, r.rank);
    let _ = writeln!(out, "q          {}", r.q);
    let _ = writeln!(out, "cos θ      {:.17}", r.cos_theta);
    let _ = writeln!(out, "θ          {:.17}", r.theta);
    for (i, m) in r.matrices.iter().enumerate() {
        let _ = writeln!(out, "matrix {}", i + 1);
        fmt_mat(&mut out, m);
    }
    let _ = writeln!(out, "{:>5}  {:>12}  {:>12}  {:>12}", "index", "residual", "margin 1", "margin 2");
    for res in &r.residuals {
        let _ = writeln!(
            out,
            "{:>5}  {:>12.3e}  {:>12.3e}  {:>12.3e}",
            res.index, res.eigen_residual, res.margins[0], res.margins[1]
        );
    }
    Ok(out.trim_end().to_string())
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifyReport {
    pub sigma: Quaternion,
    pub is_eigenvalue: bool,
    pub margin: f64,
    pub tolerance: f64,
    pub symplectic_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub warning: Option<String>,
}

pub fn verify(matrix: &Source, sigma: &str, tol: Option<f64>, text: bool) -> Result<String> {
    let a: MatH2 = load(matrix, "matrix")?;
    let sigma: Quaternion = parse(sigma, "sigma")?;
    let tolerance = tol.unwrap_or(EIGEN_TOL);
    let margin = adjoint_det(&a.shift(sigma));
    let residual = symplectic_residual(&a);
    let mut warnings = Vec::new();
    if !is_symplectic(&a, 1e-8) {
        warnings.push(format!("matrix is not symplectic (residual {residual:e})"));
    }
    if !sigma.is_unit(DEFAULT_TOL) {
        warnings.push(format!("sigma has norm {}", sigma.norm()));
    }
    let report = VerifyReport {
        sigma,
        is_eigenvalue: margin <= tolerance,
        margin,
        tolerance,
        symplectic_residual: residual,
        warning: (!warnings.is_empty()).then(|| warnings.join("; ")),
    };
    if !text {
        return json(&report);
    }
    let mut out = format!(
        "is_eigenvalue        {}\nmargin               {:.6e}\ntolerance            {:e}\nsymplectic_residual  {:.3e}",
        report.is_eigenvalue, report.margin, report.tolerance, report.symplectic_residual
    );
    if let Some(w) = &report.warning {
        let _ = write!(out, "\nwarning              {w}");
    }
    Ok(out)
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ClassifyReport {
    pub rotation_form: Option<RotationForm>,
    pub cos_theta: Option<f64>,
    pub symplectic_residual: f64,
}

pub fn classify(matrix: &Source, tol: Option<f64>, text: bool) -> Result<String> {
    let a: MatH2 = load(matrix, "matrix")?;
    let form = detect_rotation_form(&a, tol.unwrap_or(DEFAULT_TOL))?;
    let report = ClassifyReport {
        rotation_form: form,
        cos_theta: form.map(|f| f.cos_theta()),
        symplectic_residual: symplectic_residual(&a),
    };
    if !text {
        return json(&report);
    }
    Ok(match form {
        Some(f) => format!(
            "rotation form: infinite left spectrum\nq      {}\nθ      {:.17}\ncos θ  {:.17}",
            f.q,
            f.theta,
            f.cos_theta()
        ),
        None => "not a rotation form: finite left spectrum".to_string(),
    })
}

pub fn cover(
    sigmas: Option<&Source>,
    samples: usize,
    seed: u64,
    tol: Option<f64>,
    text: bool,
) -> Result<String> {
    let sigmas: Vec<Quaternion> = match sigmas {
        Some(src) => load(src, "sigmas")?,
        None => five_sigmas().to_vec(),
    };
    let report = cover_experiment(&sigmas, samples, seed, tol.unwrap_or(OMEGA_THRESHOLD))?;
    if !text {
        return json(&report);
    }
    let mut out = String::new();
    let _ = writeln!(out, "sigmas           {}", report.sigmas.len());
    let _ = writeln!(out, "samples          {}", report.samples);
    let _ = writeln!(out, "seed             {}", seed);
    let _ = writeln!(out, "threshold        {:e}", report.threshold);
    let _ = writeln!(out, "min best margin  {:.6e}", report.min_best_margin);
    let _ = writeln!(out, "uncovered        {}", report.uncovered.len());
    for u in &report.uncovered {
        let _ = writeln!(out, "  sample {}: margins {:?}", u.index, u.margins);
    }
    Ok(out.trim_end().to_string())
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct ContractReport {
    pub sigma: Quaternion,
    pub steps: usize,
    pub path: Vec<PathPoint>,
    pub endpoint: MatH2,
}

pub fn contract(matrix: &Source, sigma: &str, steps: usize, text: bool) -> Result<String> {
    let a: MatH2 = load(matrix, "matrix")?;
    let sigma: Quaternion = parse(sigma, "sigma")?;
    check_unit(sigma, "sigma")?;
    let path = cayley_trace(&a, sigma, steps)?;
    let endpoint = path.last().map(|p| p.matrix).ok_or_else(|| anyhow!("empty path"))?;
    let report = ContractReport { sigma, steps, path, endpoint };
    if !text {
        return json(&report);
    }
    let mut out = format!("{:>8}  {:>14}  {:>12}\n", "t", "margin", "sp residual");
    for p in &report.path {
        let _ = writeln!(out, "{:>8.4}  {:>14.6e}  {:>12.3e}", p.t, p.margin, p.symplectic_residual);
    }
    let _ = writeln!(out, "endpoint");
    fmt_mat(&mut out, &report.endpoint);
    Ok(out.trim_end().to_string())
}

#[derive(Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    #[serde(flatten)]
    pub check: BoundCheck,
}

pub fn bound(matrix: &Source, w: Option<&str>, text: bool) -> Result<String> {
    let m: RealMatrix = load(matrix, "real matrix")?;
    let w: Vec<f64> = match w {
        Some(s) => parse(s, "w")?,
        None => vec![1.0; m.n_cols()],
    };
    let check = bound_check(&m, &w)?;
    let report = BoundReport { n: m.n_rows(), check };
    if !text {
        return json(&report);
    }
    Ok(format!(
        "‖Mw‖        {:.17}\n√N ‖w‖      {:.17}\nstrict      {}",
        check.lhs, check.rhs, check.strict
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kind() {
        let numerical: CliError = sympleig::Error::Numerical("residual 1e-3".into()).into();
        assert_eq!(numerical.exit_code(), 2);
        let input: CliError = sympleig::Error::SigmaCount(5).into();
        assert_eq!(input.exit_code(), 1);
        assert_eq!(CliError::from(anyhow!("bad file")).exit_code(), 1);
    }
}
