use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::Path;

use zdlab_core::format::{parse_element, AnyElement};
use zdlab_core::torus::{
    estimate_nullity, hyperplane_cover_check, relative_nullity_threshold, sample_zero_set, theorem1_verdict,
    theorem2_evidence, theorem3_verdict, Hyperplane, NullityParams, TorusError, TrigPolynomial, ZeroSetSample,
};

use super::exponent;
use crate::error::{input, parsed, read, CliError};
use crate::report::{num, Report, CSV_VERSION};
use crate::TorusArgs;

/// A number, optionally followed by `pi`: `1.5`, `pi`, `-pi`, `0.5pi`.
fn parse_real(token: &str) -> Option<f64> {
    match token.split_once('/') {
        Some((n, d)) => Some(n.parse::<f64>().ok()? / d.parse::<f64>().ok()?),
        None => token.parse().ok(),
    }
}

/// A real number or a multiple of π such as `pi`, `-pi` or `1/2pi`.
fn parse_angle(token: &str) -> Option<f64> {
    match token.strip_suffix("pi") {
        Some("") | Some("+") => Some(PI),
        Some("-") => Some(-PI),
        Some(c) => parse_real(c).map(|c| c * PI),
        None => parse_real(token),
    }
}

/// One plane per line: `<n_1> … <n_d> = <offset>`.
fn parse_planes(path: &Path, dim: usize) -> Result<Vec<Hyperplane>, CliError> {
    let text = read(path)?;
    let mut planes = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |m: &str| input(format!("{}: line {}: {m}", path.display(), i + 1));
        let (normal, offset) = line.split_once('=').ok_or_else(|| bad("expected `<n_1> … <n_d> = <offset>`"))?;
        let normal: Vec<f64> = normal
            .split_whitespace()
            .map(parse_angle)
            .collect::<Option<_>>()
            .ok_or_else(|| bad("bad normal"))?;
        if normal.len() != dim {
            return Err(bad(&format!("expected {dim} normal components, found {}", normal.len())));
        }
        let offset = parse_angle(offset.trim()).ok_or_else(|| bad("bad offset"))?;
        planes.push(Hyperplane::new(normal, offset).map_err(|e| bad(&e.to_string()))?);
    }
    Ok(planes)
}

fn write_csv(path: &Path, sample: &ZeroSetSample, args: &TorusArgs) -> Result<(), CliError> {
    let mut out = String::new();
    let _ = writeln!(out, "# format: {CSV_VERSION}");
    let _ = writeln!(out, "# input: {}", args.input.display());
    let _ = writeln!(out, "# resolution: {}", sample.resolution);
    let _ = writeln!(out, "# tol: {:e}", sample.tol);
    let cols: Vec<String> = (1..=sample.dim).map(|i| format!("t{i}")).collect();
    let _ = writeln!(out, "{},abs_alpha_hat", cols.join(","));
    for (t, v) in sample.points.iter().zip(&sample.abs_values) {
        let coords: Vec<String> = t.coords().iter().map(|x| num(*x)).collect();
        let _ = writeln!(out, "{},{}", coords.join(","), num(*v));
    }
    std::fs::write(path, out).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn torus(e: TorusError) -> CliError {
    input(e)
}

pub fn run(args: &TorusArgs) -> Result<Report, CliError> {
    let AnyElement::Lattice(alpha) = parsed(&args.input, parse_element(&read(&args.input)?))? else {
        return Err(input("torus commands need a `group zd <d>` element"));
    };
    let p = args.p.as_deref().map(exponent).transpose()?;
    let d = match alpha.group() {
        zdlab_core::Group::Lattice { dim } => dim,
        _ => unreachable!("lattice element"),
    };
    if !args.zeroset && !args.nullity && !args.verdict && args.hyperplanes.is_none() {
        return Err(input("choose at least one of --zeroset, --hyperplanes, --nullity, --verdict"));
    }
    if args.nullity && d < 2 {
        return Err(input("--nullity needs d ≥ 2"));
    }
    let mut report = Report::new("torus");
    report
        .knob("input", args.input.display())
        .knob("dim", d)
        .knob("resolution", args.resolution)
        .knob("tol", format!("{:e}", args.tol))
        .knob("dist_tol", format!("{:e}", args.dist_tol))
        .knob("rank_tol", format!("{:e}", args.rank_tol))
        .knob("fd_step", format!("{:e}", args.fd_step))
        .knob("max_charts", args.max_charts)
        .knob("p", args.p.as_deref().unwrap_or("-"))
        .knob("csv", args.csv.as_ref().map_or("-".into(), |p| p.display().to_string()));

    let poly = TrigPolynomial::from_element(&alpha).map_err(torus)?;
    let needs_sample = args.zeroset || args.nullity || args.hyperplanes.is_some();
    let sample = if needs_sample {
        Some(sample_zero_set(&poly, args.resolution, args.tol).map_err(torus)?)
    } else {
        None
    };
    if let Some(s) = &sample {
        report.field("zero_samples", s.len()).field("grid_step", num(s.step));
        if let Some(path) = &args.csv {
            write_csv(path, s, args)?;
            report.field("csv_written", path.display());
        }
    }
    if let (Some(path), Some(s)) = (&args.hyperplanes, &sample) {
        let planes = parse_planes(path, d)?;
        let cover = hyperplane_cover_check(s, &planes, args.dist_tol).map_err(torus)?;
        report
            .field("planes", planes.len())
            .field("covered", cover.covered)
            .field("uncovered", cover.uncovered.len());
        for t in cover.uncovered.iter().take(5) {
            report.line(format!("  uncovered_point: {t}"));
        }
        let v = theorem2_evidence(&cover);
        let note = if cover.covered { "zeros lie on the listed planes" } else { "planes do not cover the sample" };
        report.verdict("uniform_verdict", &v, note);
    }
    if let (true, Some(s)) = (args.nullity, &sample) {
        let params = NullityParams {
            rank_tol: args.rank_tol,
            fd_step: args.fd_step,
            chart_radius: None,
            max_charts: args.max_charts,
        };
        let r = estimate_nullity(&poly, s, params).map_err(torus)?;
        let usable = r.charts.iter().filter(|c| c.flags.is_empty()).count();
        report
            .field("nullity", r.nu)
            .field("hessian_rank", r.hessian_rank)
            .field("constant_rank", r.constant_rank)
            .field("charts", format!("{usable} usable of {}", r.charts.len()))
            .field("chart_radius", num(r.chart_radius));
        match relative_nullity_threshold(d, r.nu) {
            Ok(t) => {
                report.field("p_star", t);
                if let Some(p) = p {
                    let v = theorem3_verdict(d, r.nu, p).map_err(torus)?;
                    report.verdict("nullity_verdict", &v, &format!("zero divisor exactly when p > {t}"));
                }
            }
            Err(TorusError::HyperplaneRegime) => {
                report.field("p_star", "none (flat zero set; use --hyperplanes)");
            }
            Err(e) => return Err(torus(e)),
        }
    }
    if let (true, Some(p)) = (args.verdict, p) {
        let v = theorem1_verdict(d, p).map_err(torus)?;
        let note = match v.status {
            zdlab_core::VerdictStatus::NonzeroDivisor => format!("no p-zero divisors in CZ^{d} for p = {p}"),
            zdlab_core::VerdictStatus::OutOfScope => "needs d ≥ 2".to_string(),
            _ => format!("p = {p} is above the uniform bound"),
        };
        report.verdict("exponent_verdict", &v, &note);
    }
    Ok(report)
}
