//! Line-oriented text formats.
//!
//! Group algebra elements:
//!
//! ```text
//! group fz 2
//! 1 0 : x1 x1
//! 2 0 : e
//! -1/3 0 : X1 x2
//! ```
//!
//! or `group zd <d>` followed by `<re> <im> : <n1> ... <nd>`. Radial elements
//! use `radial fz <k>` followed by `<n> : <re> <im>`. Generator lists use the
//! `group fz <k>` header followed by one word per line. Blank lines and lines
//! starting with `#` are ignored on input; output is always canonical, sorted
//! and LF terminated.

use std::fmt::Write as _;

use crate::element::Element;
use crate::error::ParseError;
use crate::group::{FreeWord, Group, GroupElement, LatticePoint};
use crate::radial::RadialElement;
use crate::scalar::{gauss, parse_rational, Coeff, GaussRat};

/// An exact element read from text, over either group family.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyElement {
    Free(Element<FreeWord, GaussRat>),
    Lattice(Element<LatticePoint, GaussRat>),
}

impl AnyElement {
    pub fn group(&self) -> Group {
        match self {
            AnyElement::Free(e) => e.group(),
            AnyElement::Lattice(e) => e.group(),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_group_header(line_no: usize, line: &str) -> Result<Group, ParseError> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    match parts.as_slice() {
        ["group", "fz", k] => {
            let rank: u32 = k
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad rank {k:?}")))?;
            if rank == 0 {
                return Err(ParseError::new(line_no, "free group rank must be at least 1"));
            }
            Ok(Group::Free { rank })
        }
        ["group", "zd", d] => {
            let dim: usize = d
                .parse()
                .map_err(|_| ParseError::new(line_no, format!("bad dimension {d:?}")))?;
            if dim == 0 {
                return Err(ParseError::new(line_no, "lattice dimension must be at least 1"));
            }
            Ok(Group::Lattice { dim })
        }
        _ => Err(ParseError::new(
            line_no,
            "expected header `group fz <k>` or `group zd <d>`",
        )),
    }
}

fn parse_coeff(line_no: usize, re: &str, im: &str) -> Result<GaussRat, ParseError> {
    let re = parse_rational(re)
        .ok_or_else(|| ParseError::new(line_no, format!("bad real part {re:?}")))?;
    let im = parse_rational(im)
        .ok_or_else(|| ParseError::new(line_no, format!("bad imaginary part {im:?}")))?;
    Ok(gauss(re, im))
}

pub fn parse_element(text: &str) -> Result<AnyElement, ParseError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty input"))?;
    let group = parse_group_header(hl, header)?;
    let mut free = Vec::new();
    let mut lattice = Vec::new();
    for (no, line) in lines {
        let (coeff, key) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(no, "expected `<re> <im> : <element>`"))?;
        let parts: Vec<&str> = coeff.split_whitespace().collect();
        let [re, im] = parts.as_slice() else {
            return Err(ParseError::new(no, "expected two coefficient fields"));
        };
        let c = parse_coeff(no, re, im)?;
        match group {
            Group::Free { .. } => {
                let word = FreeWord::parse(key).map_err(|m| ParseError::new(no, m))?;
                if !word.belongs_to(&group) {
                    return Err(ParseError::new(no, format!("word {word} is not in {group}")));
                }
                free.push((word, c));
            }
            Group::Lattice { dim } => {
                let p = LatticePoint::parse(key).map_err(|m| ParseError::new(no, m))?;
                if p.dim() != dim {
                    return Err(ParseError::new(
                        no,
                        format!("expected {dim} coordinates, found {}", p.dim()),
                    ));
                }
                lattice.push((p, c));
            }
        }
    }
    // membership was checked line by line
    Ok(match group {
        Group::Free { .. } => AnyElement::Free(Element::from_terms(group, free).expect("checked")),
        Group::Lattice { .. } => {
            AnyElement::Lattice(Element::from_terms(group, lattice).expect("checked"))
        }
    })
}

fn header(group: Group) -> String {
    match group {
        Group::Free { rank } => format!("group fz {rank}\n"),
        Group::Lattice { dim } => format!("group zd {dim}\n"),
    }
}

pub fn write_element<E: GroupElement, C: Coeff>(element: &Element<E, C>) -> String {
    let mut out = header(element.group());
    for (g, c) in element.terms() {
        let (re, im) = c.render();
        let _ = writeln!(out, "{re} {im} : {g}");
    }
    out
}

pub fn parse_radial(text: &str) -> Result<RadialElement<GaussRat>, ParseError> {
    let mut lines = content_lines(text);
    let (hl, head) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty input"))?;
    let parts: Vec<&str> = head.split_whitespace().collect();
    let k: u32 = match parts.as_slice() {
        ["radial", "fz", k] => k
            .parse()
            .map_err(|_| ParseError::new(hl, format!("bad rank {k:?}")))?,
        _ => return Err(ParseError::new(hl, "expected header `radial fz <k>`")),
    };
    if k < 2 {
        return Err(ParseError::new(hl, "radial algebra needs rank at least 2"));
    }
    let mut coeffs: Vec<GaussRat> = Vec::new();
    for (no, line) in lines {
        let (n, c) = line
            .split_once(':')
            .ok_or_else(|| ParseError::new(no, "expected `<n> : <re> <im>`"))?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| ParseError::new(no, format!("bad sphere index {:?}", n.trim())))?;
        let parts: Vec<&str> = c.split_whitespace().collect();
        let [re, im] = parts.as_slice() else {
            return Err(ParseError::new(no, "expected two coefficient fields"));
        };
        let c = parse_coeff(no, re, im)?;
        if coeffs.len() <= n {
            coeffs.resize(n + 1, GaussRat::zero());
        }
        coeffs[n] = coeffs[n].clone() + c;
    }
    Ok(RadialElement::new(k, coeffs))
}

pub fn write_radial<C: Coeff>(element: &RadialElement<C>) -> String {
    let mut out = format!("radial fz {}\n", element.rank());
    for (n, c) in element.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (re, im) = c.render();
        let _ = writeln!(out, "{n} : {re} {im}");
    }
    out
}

/// Reads a generator list: `group fz <k>` then one word per line.
pub fn parse_generators(text: &str) -> Result<(u32, Vec<FreeWord>), ParseError> {
    let mut lines = content_lines(text);
    let (hl, head) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty input"))?;
    let rank = match parse_group_header(hl, head)? {
        Group::Free { rank } => rank,
        Group::Lattice { .. } => {
            return Err(ParseError::new(hl, "generator lists need a free group header"))
        }
    };
    let mut gens = Vec::new();
    for (no, line) in lines {
        let w = FreeWord::parse(line).map_err(|m| ParseError::new(no, m))?;
        if w.max_generator() > rank {
            return Err(ParseError::new(no, format!("word {w} is not in F_{rank}")));
        }
        gens.push(w);
    }
    if gens.is_empty() {
        return Err(ParseError::new(hl, "no generators listed"));
    }
    Ok((rank, gens))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gauss_frac;

    #[test]
    fn element_round_trip_is_canonical() {
        let text = "group fz 2\n# comment\n1 0 : X1 X1\n2 0 : e\n\n1 0 : x1 x1\n1/2 -3 : x2 X1\n";
        let parsed = parse_element(text).unwrap();
        let AnyElement::Free(e) = &parsed else { panic!() };
        let out = write_element(e);
        assert_eq!(out, "group fz 2\n2 0 : e\n1 0 : x1 x1\n1 0 : X1 X1\n1/2 -3 : x2 X1\n");
        assert_eq!(parse_element(&out).unwrap(), parsed);
    }

    #[test]
    fn lattice_format() {
        let text = "group zd 2\n1 0 : 0 0\n-1 0 : 1 0\n0.5 0 : 0 -1\n";
        let AnyElement::Lattice(e) = parse_element(text).unwrap() else { panic!() };
        assert_eq!(e.coeff(&LatticePoint(vec![0, -1])), gauss_frac(1, 0, 2));
        assert_eq!(
            write_element(&e),
            "group zd 2\n1/2 0 : 0 -1\n1 0 : 0 0\n-1 0 : 1 0\n"
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_element("group fz 2\n1 0 : x1\n1 0 x2\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_element("group fz 2\n1 0 : x3\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_element("group zd 2\n1 0 : 1\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_element("grp fz 2\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_element("group fz 2\n1 q : e\n").unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn unreduced_input_words_are_reduced_and_merged() {
        let AnyElement::Free(e) = parse_element("group fz 2\n1 0 : x1 X1\n1 0 : e\n").unwrap() else {
            panic!()
        };
        assert_eq!(e.support_len(), 1);
        assert_eq!(e.coeff(&FreeWord::identity()), gauss_frac(2, 0, 1));
    }

    #[test]
    fn radial_format() {
        let r = parse_radial("radial fz 2\n1 : 1 0\n0 : -19/5 0\n").unwrap();
        assert_eq!(r.coeffs().len(), 2);
        assert_eq!(write_radial(&r), "radial fz 2\n0 : -19/5 0\n1 : 1 0\n");
        assert!(parse_radial("radial fz 1\n").is_err());
        assert_eq!(parse_radial("radial fz 2\nx : 1 0\n").unwrap_err().line, 2);
    }

    #[test]
    fn generator_lists() {
        let (k, g) = parse_generators("group fz 2\nx1 x1\nx2 x2\nx1 x2\n").unwrap();
        assert_eq!(k, 2);
        assert_eq!(g.len(), 3);
        assert!(parse_generators("group fz 2\n").is_err());
        assert_eq!(parse_generators("group fz 2\nx3\n").unwrap_err().line, 2);
    }
}
