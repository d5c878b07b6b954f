use zdlab_core::format::{parse_element, write_element, AnyElement};
use zdlab_core::{Element, Exponent, GaussRat, GroupElement};

use crate::error::{input, parsed, read, CliError};
use crate::report::{num, Report};
use crate::ConvolveArgs;

fn norms<E: GroupElement>(report: &mut Report, e: &Element<E, GaussRat>) {
    report
        .field("norm_1", num(e.lp_norm(Exponent::integer(1).expect("valid"))))
        .field("norm_2", num(e.lp_norm(Exponent::integer(2).expect("valid"))))
        .field("norm_inf", num(e.lp_norm(Exponent::Infinity)));
}

fn emit<E: GroupElement>(
    report: &mut Report,
    e: &Element<E, GaussRat>,
    out: Option<&std::path::Path>,
) -> Result<(), CliError> {
    let text = write_element(e);
    report.field("support", e.support_len());
    norms(report, e);
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            report.field("written", path.display());
        }
        None => {
            report.line("product:");
            for l in text.lines() {
                report.line(l);
            }
        }
    }
    Ok(())
}

pub fn run(args: &ConvolveArgs) -> Result<Report, CliError> {
    let a = parsed(&args.left, parse_element(&read(&args.left)?))?;
    let b = parsed(&args.right, parse_element(&read(&args.right)?))?;
    let mut report = Report::new("convolve");
    report
        .knob("left", args.left.display())
        .knob("right", args.right.display())
        .knob("out", args.out.as_ref().map_or("-".to_string(), |p| p.display().to_string()));
    let out = args.out.as_deref();
    match (a, b) {
        (AnyElement::Free(a), AnyElement::Free(b)) => emit(&mut report, &a.convolve(&b).map_err(input)?, out)?,
        (AnyElement::Lattice(a), AnyElement::Lattice(b)) => {
            emit(&mut report, &a.convolve(&b).map_err(input)?, out)?
        }
        (a, b) => return Err(input(format!("group mismatch: {} vs {}", a.group(), b.group()))),
    }
    Ok(report)
}
