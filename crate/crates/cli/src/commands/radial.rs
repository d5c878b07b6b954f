use zdlab_core::format::parse_radial;
use zdlab_core::radial::{critical_exponent, radial_linf_verdict, radial_zero_set, witness_residual, CriticalBranch};
use zdlab_core::scalar::{gauss, parse_rational};
use zdlab_core::{Citation, Verdict, VerdictStatus};

use super::{exponent, integer};
use crate::error::{input, parsed, read, CliError};
use crate::report::{num, Report};
use crate::RadialArgs;

pub fn run(args: &RadialArgs) -> Result<Report, CliError> {
    let alpha = parsed(&args.input, parse_radial(&read(&args.input)?))?;
    if !args.zeros && !args.pstar && args.witness.is_none() {
        return Err(input("choose at least one of --zeros, --pstar, --witness"));
    }
    if alpha.is_zero() {
        return Err(input("the zero element has no transform zeros"));
    }
    let mut report = Report::new("radial");
    report
        .knob("input", args.input.display())
        .knob("k", alpha.rank())
        .knob("witness", args.witness.as_ref().map_or("-".into(), |w| w.join(" ")));

    if args.zeros {
        let z = radial_zero_set(&alpha).map_err(input)?;
        report.field("degree", z.degree).field("real_zeros", z.real.len());
        for r in &z.real {
            report.line(format!(
                "  real {} interval={} spectrum={} sign_change={}",
                num(r.value),
                r.in_open_interval,
                r.in_spectrum,
                r.sign_change
            ));
        }
        report.field("complex_zeros", z.complex.len());
        for c in &z.complex {
            report.line(format!(
                "  complex {} {} spectrum={} backward_error={}",
                num(c.value.re),
                num(c.value.im),
                c.in_spectrum,
                num(c.backward_error)
            ));
        }
        let v = radial_linf_verdict(&alpha).map_err(input)?;
        let note = if v.status == VerdictStatus::ZeroDivisor {
            "a spherical function annihilates alpha"
        } else {
            "no transform zero in the spectrum"
        };
        report.verdict("linf_verdict", &v, note);
    }
    if args.pstar {
        let c = critical_exponent(&alpha).map_err(input)?;
        let branch = match c.branch {
            CriticalBranch::Empty => "no real zero in the open interval",
            CriticalBranch::SmallM => "m at most 2 sqrt(2k-1)",
            CriticalBranch::LargeM => "solved on the exponent curve",
        };
        report
            .field("m", num(c.m))
            .field("p_alpha", num(c.p))
            .field("branch", branch)
            .field("curve_residual", num(c.residual));
        if c.p.is_finite() {
            let v = Verdict::new(VerdictStatus::ZeroDivisor, Citation::RadialCriticalExponent).with_threshold(c.p);
            report.line(format!("critical_exponent: {v} -- p-zero divisor for every p > p_alpha"));
        }
    }
    if let Some(w) = &args.witness {
        let z = parse_rational(&w[0]).ok_or_else(|| input(format!("bad witness point {:?}", w[0])))?;
        let z = gauss(z, parse_rational("0").expect("zero"));
        let levels: usize = integer("level", &w[1])?;
        let p = exponent(&w[2])?;
        report.line("level residual");
        for level in 0..=levels {
            let r = witness_residual(&alpha, &z, level, p).map_err(input)?;
            report.line(format!("{level} {}", num(r)));
        }
    }
    Ok(report)
}
