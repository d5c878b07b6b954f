//! Seeded invariant checks and fixture replays.

use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zdlab_core::format::{parse_element, parse_radial, write_element, write_radial, AnyElement};
use zdlab_core::radial::{
    expand, gelfand_transform, radial_convolve, radial_projection, witness_residual, witness_residual_closed_form,
    RadialElement,
};
use zdlab_core::scalar::gauss_frac;
use zdlab_core::stallings::{coset_decompose, FoldOrder, SubgroupAutomaton};
use zdlab_core::torus::{zeta_inverse, zeta_map, RealGridFunction};
use zdlab_core::{Approx, Element, Exponent, FreeWord, GaussRat, Group, GroupElement, LatticePoint, Letter};

use crate::error::{input, CliError};
use crate::report::Report;
use crate::SelftestArgs;

const BUILTIN: [(&str, &str); 3] = [
    ("chi1_squared", include_str!("../../fixtures/chi1_squared.fixture")),
    ("free_product", include_str!("../../fixtures/free_product.fixture")),
    ("lattice_product", include_str!("../../fixtures/lattice_product.fixture")),
];

fn coeff(rng: &mut ChaCha8Rng) -> GaussRat {
    let den = rng.random_range(1..=4);
    gauss_frac(rng.random_range(-5..=5), rng.random_range(-5..=5), den)
}

fn word(rng: &mut ChaCha8Rng, rank: u32, max_len: usize) -> FreeWord {
    let len = rng.random_range(0..=max_len);
    FreeWord::from_letters((0..len).map(|_| Letter::new(rng.random_range(1..=rank), rng.random())))
}

fn free(rng: &mut ChaCha8Rng, rank: u32) -> Element<FreeWord, GaussRat> {
    let n = rng.random_range(0..=5);
    let terms: Vec<_> = (0..n).map(|_| (word(rng, rank, 4), coeff(rng))).collect();
    Element::from_terms(Group::Free { rank }, terms).expect("words of the right rank")
}

fn lattice(rng: &mut ChaCha8Rng, dim: usize) -> Element<LatticePoint, GaussRat> {
    let n = rng.random_range(0..=5);
    let terms: Vec<_> = (0..n)
        .map(|_| (LatticePoint((0..dim).map(|_| rng.random_range(-3..=3)).collect()), coeff(rng)))
        .collect();
    Element::from_terms(Group::Lattice { dim }, terms).expect("points of the right dimension")
}

fn radial(rng: &mut ChaCha8Rng, k: u32, len: usize) -> RadialElement<GaussRat> {
    RadialElement::new(k, (0..len).map(|_| coeff(rng)).collect())
}

fn pairing_identity<E: GroupElement>(a: &Element<E, GaussRat>, b: &Element<E, GaussRat>, y: &E) -> bool {
    a.tilde().translate(y).and_then(|t| t.pairing(&b.bar())).ok() == a.convolve(b).ok().map(|p| p.coeff(y))
}

type Check = fn(&mut ChaCha8Rng) -> bool;

const CHECKS: [(&str, Check); 9] = [
    ("free convolution is associative", |r| {
        let (a, b, c) = (free(r, 2), free(r, 2), free(r, 2));
        a.convolve(&b).and_then(|ab| ab.convolve(&c)).ok() == b.convolve(&c).and_then(|bc| a.convolve(&bc)).ok()
    }),
    ("lattice convolution commutes", |r| {
        let (a, b) = (lattice(r, 2), lattice(r, 2));
        a.convolve(&b).ok() == b.convolve(&a).ok()
    }),
    ("translate pairing gives convolution coefficients", |r| {
        let (a, b, y) = (free(r, 3), free(r, 3), word(r, 3, 5));
        let (c, d) = (lattice(r, 3), lattice(r, 3));
        let z = LatticePoint((0..3).map(|_| r.random_range(-4..=4)).collect());
        pairing_identity(&a, &b, &y) && pairing_identity(&c, &d, &z)
    }),
    ("Gelfand transform is multiplicative", |r| {
        let k = r.random_range(2..=3);
        let (a, b) = (radial(r, k, 6), radial(r, k, 6));
        let (Ok(ab), Ok(ta), Ok(tb)) = (radial_convolve(&a, &b), gelfand_transform(&a), gelfand_transform(&b)) else {
            return false;
        };
        gelfand_transform(&ab).map(|t| t.poly).ok() == Some(ta.poly.mul(&tb.poly))
    }),
    ("radial projection is idempotent", |r| {
        let beta = free(r, 2);
        let Ok(pb) = radial_projection(&beta) else { return false };
        expand(&pb, 4).and_then(|e| radial_projection(&e)).ok() == Some(pb)
    }),
    ("folding does not depend on fold order", |r| {
        let gens: Vec<FreeWord> = (0..r.random_range(1..=4)).map(|_| word(r, 2, 5)).collect();
        let seed = r.random();
        match (
            SubgroupAutomaton::build(&gens, 2),
            SubgroupAutomaton::build_with_order(&gens, 2, FoldOrder::Shuffled(seed)),
        ) {
            (Ok(a), Ok(b)) => a.is_isomorphic(&b),
            _ => false,
        }
    }),
    ("coset pieces reassemble", |r| {
        let gens: Vec<FreeWord> = (0..r.random_range(1..=3)).map(|_| word(r, 2, 4)).collect();
        let beta = free(r, 2);
        SubgroupAutomaton::build(&gens, 2)
            .ok()
            .and_then(|aut| coset_decompose(&beta, &aut).ok())
            .and_then(|d| d.reassemble().ok())
            == Some(beta)
    }),
    ("zeta map inverts", |r| {
        let dim = r.random_range(1..=2);
        let cells = (4usize * 5).pow(dim as u32);
        let values = (0..cells).map(|_| Approx::new(r.random_range(-1.0..1.0), r.random_range(-1.0..1.0))).collect();
        RealGridFunction::new(dim, 4, 2, values).is_ok_and(|f| zeta_inverse(&zeta_map(&f)) == f)
    }),
    ("spherical residual matches its closed form", |r| {
        let level = r.random_range(0..=8);
        let p = r.random_range(2.0..5.0);
        let alpha = RadialElement::<GaussRat>::chi(2, 1);
        let zero = gauss_frac(0, 0, 1);
        witness_residual(&alpha, &zero, level, Exponent::real(p).expect("finite")).is_ok_and(|got| {
            let want = witness_residual_closed_form(2, level, p);
            (got - want).abs() <= 1e-9 * want
        })
    }),
];

/// `kind <convolve|radial>` followed by `--- left`, `--- right` and
/// `--- expected` sections.
fn replay(name: &str, text: &str) -> Result<bool, CliError> {
    let bad = |m: &str| input(format!("fixture {name}: {m}"));
    let mut kind = None;
    let mut sections: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        if let Some(rest) = line.strip_prefix("--- ") {
            sections.push((rest.trim().to_string(), String::new()));
        } else if let Some((_, body)) = sections.last_mut() {
            body.push_str(line);
            body.push('\n');
        } else if let Some(k) = line.trim().strip_prefix("kind ") {
            kind = Some(k.trim().to_string());
        } else if !line.trim().is_empty() && !line.trim_start().starts_with('#') {
            return Err(bad(&format!("unexpected line {line:?}")));
        }
    }
    let section = |key: &str| {
        sections
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| bad(&format!("missing section {key}")))
    };
    let (left, right, expected) = (section("left")?, section("right")?, section("expected")?);
    let parse_err = |e: zdlab_core::ParseError| bad(&e.to_string());
    match kind.as_deref() {
        Some("convolve") => {
            let got = match (parse_element(left).map_err(parse_err)?, parse_element(right).map_err(parse_err)?) {
                (AnyElement::Free(a), AnyElement::Free(b)) => write_element(&a.convolve(&b).map_err(input)?),
                (AnyElement::Lattice(a), AnyElement::Lattice(b)) => write_element(&a.convolve(&b).map_err(input)?),
                _ => return Err(bad("group mismatch")),
            };
            let want = match parse_element(expected).map_err(parse_err)? {
                AnyElement::Free(e) => write_element(&e),
                AnyElement::Lattice(e) => write_element(&e),
            };
            Ok(got == want)
        }
        Some("radial") => {
            let a = parse_radial(left).map_err(parse_err)?;
            let b = parse_radial(right).map_err(parse_err)?;
            let want = write_radial(&parse_radial(expected).map_err(parse_err)?);
            Ok(write_radial(&radial_convolve(&a, &b).map_err(input)?) == want)
        }
        Some(other) => Err(bad(&format!("unknown kind {other:?}"))),
        None => Err(bad("missing `kind` line")),
    }
}

fn fixtures_in(dir: &Path) -> Result<Vec<(String, String)>, CliError> {
    let io = |source| CliError::Io { path: dir.to_path_buf(), source };
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .collect::<Result<Vec<_>, _>>()
        .map_err(io)?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "fixture"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
            crate::error::read(&p).map(|t| (name, t))
        })
        .collect()
}

pub fn run(args: &SelftestArgs) -> Result<Report, CliError> {
    if args.cases == 0 {
        return Err(input("--cases must be positive"));
    }
    let mut report = Report::new("selftest");
    report
        .knob("seed", args.seed)
        .knob("cases", args.cases)
        .knob("fixtures", args.fixtures.as_ref().map_or("-".into(), |p| p.display().to_string()));
    let mut failures = 0;
    for (i, (name, check)) in CHECKS.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed.wrapping_add(i as u64));
        let failed = (0..args.cases).find(|_| !check(&mut rng));
        match failed {
            None => report.line(format!("PASS {name} ({} cases)", args.cases)),
            Some(case) => {
                failures += 1;
                report.line(format!("FAIL {name} (case {case})"))
            }
        };
    }
    let mut fixtures: Vec<(String, String)> =
        BUILTIN.iter().map(|(n, t)| (n.to_string(), t.to_string())).collect();
    if let Some(dir) = &args.fixtures {
        fixtures.extend(fixtures_in(dir)?);
    }
    for (name, text) in &fixtures {
        if replay(name, text)? {
            report.line(format!("PASS fixture {name}"));
        } else {
            failures += 1;
            report.line(format!("FAIL fixture {name}"));
        }
    }
    report.field("failures", failures);
    if failures > 0 {
        report.mark_failed();
    }
    Ok(report)
}
