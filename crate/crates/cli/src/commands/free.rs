use zdlab_core::format::{parse_generators, write_element};
use zdlab_core::stallings::{example2_witness, SubgroupAutomaton};
use zdlab_core::FreeWord;

use super::integer;
use crate::error::{input, parsed, read, CliError};
use crate::report::{num, Report};
use crate::FreeArgs;

/// Writes a word in the input generators as `a1 A2 …`, `A` marking inverses.
fn abstract_word(w: &FreeWord) -> String {
    if w.is_empty() {
        return "e".into();
    }
    let letters: Vec<String> = w
        .letters()
        .iter()
        .map(|l| format!("{}{}", if l.is_inverse() { "A" } else { "a" }, l.generator()))
        .collect();
    letters.join(" ")
}

pub fn run(args: &FreeArgs) -> Result<Report, CliError> {
    if !args.rank && args.member.is_none() && args.example2.is_none() {
        return Err(input("choose at least one of --rank, --member, --example2"));
    }
    let mut report = Report::new("free");
    report
        .knob("generators", args.generators.as_ref().map_or("-".into(), |p| p.display().to_string()))
        .knob("member", args.member.as_deref().unwrap_or("-"))
        .knob("example2", args.example2.as_ref().map_or("-".into(), |v| v.join(" ")))
        .knob("show_gamma", args.show_gamma);

    if args.rank || args.member.is_some() {
        let path = args
            .generators
            .as_ref()
            .ok_or_else(|| input("--rank and --member need a generator file"))?;
        let (rank, gens) = parsed(path, parse_generators(&read(path)?))?;
        let aut = SubgroupAutomaton::build(&gens, rank).map_err(input)?;
        report
            .field("ambient_rank", rank)
            .field("generators", gens.len())
            .field("vertices", aut.vertex_count())
            .field("edges", aut.edges().len());
        if args.rank {
            report.field("subgroup_rank", aut.subgroup_rank());
            for (i, b) in aut.basis().iter().enumerate() {
                report.line(format!("  basis {}: {b}", i + 1));
            }
        }
        if let Some(text) = &args.member {
            let w = FreeWord::parse(text).map_err(|m| input(format!("bad word {text:?}: {m}")))?;
            if w.max_generator() > rank {
                return Err(input(format!("word {w} is not in F_{rank}")));
            }
            let m = aut.membership(&w);
            report.field("word", &w).field("member", m.member);
            match (&m.generator_word, m.failed_at) {
                (Some(g), _) => {
                    let factors: Vec<String> =
                        m.factorization.iter().map(|(i, s)| format!("b{}^{s}", i + 1)).collect();
                    report
                        .field("basis_factorization", if factors.is_empty() { "e".into() } else { factors.join(" ") })
                        .field("generator_word", abstract_word(g));
                }
                (None, Some(pos)) => {
                    report.field("failed_at", pos);
                    report.mark_negative();
                }
                (None, None) => unreachable!("non-members report a position"),
            }
        }
    }
    if let Some(v) = &args.example2 {
        let k: u32 = integer("rank", &v[0])?;
        let level: usize = integer("level", &v[1])?;
        let p: f64 = v[2].trim().parse().map_err(|_| input(format!("bad exponent {:?}", v[2])))?;
        let t = example2_witness(k, level, p).map_err(input)?;
        report
            .field("k", t.k)
            .field("level", t.level)
            .field("p", t.p)
            .field("cosets", t.coset_count)
            .field("representative", &t.representative)
            .field("identity_coset", t.identity_coset)
            .field("gamma_support", t.gamma.support_len())
            .field("residual", num(t.residual))
            .field("pushed_bound", num(t.pushed_bound))
            .field("tail_bound", t.tail_bound.map_or("diverges".into(), num));
        if args.show_gamma {
            report.line("gamma:");
            for l in write_element(&t.gamma).lines() {
                report.line(l);
            }
        }
    }
    Ok(report)
}
