//! Group elements: reduced words in free groups and points of ℤ^d.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;

/// The ambient group of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// The free group F_k on generators x1..xk.
    Free { rank: u32 },
    /// The free abelian group ℤ^d.
    Lattice { dim: usize },
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Free { rank } => write!(f, "F_{rank}"),
            Group::Lattice { dim } => write!(f, "Z^{dim}"),
        }
    }
}

pub trait GroupElement: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {
    fn identity(group: &Group) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn is_identity(&self) -> bool;
    /// Whether the element lives in `group`.
    fn belongs_to(&self, group: &Group) -> bool;
}

/// A generator `x_i` or its inverse `X_i`, stored as `±i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: u32, inverse: bool) -> Letter {
        assert!(generator >= 1, "generators are numbered from 1");
        let g = generator as i32;
        Letter(if inverse { -g } else { g })
    }

    pub fn gen(generator: u32) -> Letter {
        Letter::new(generator, false)
    }

    pub fn inv_gen(generator: u32) -> Letter {
        Letter::new(generator, true)
    }

    pub fn generator(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }

    /// All `2k` letters in the order x1, X1, x2, X2, ...
    pub fn all(rank: u32) -> impl Iterator<Item = Letter> {
        (1..=rank).flat_map(|g| [Letter::gen(g), Letter::inv_gen(g)])
    }

    fn sort_key(self) -> (u32, bool) {
        (self.generator(), self.is_inverse())
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "X{}", self.generator())
        } else {
            write!(f, "x{}", self.generator())
        }
    }
}

impl std::str::FromStr for Letter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (inverse, digits) = match s.as_bytes().first() {
            Some(b'x') => (false, &s[1..]),
            Some(b'X') => (true, &s[1..]),
            _ => return Err(format!("bad letter {s:?}")),
        };
        match digits.parse::<u32>() {
            Ok(g) if g >= 1 => Ok(Letter::new(g, inverse)),
            _ => Err(format!("bad letter {s:?}")),
        }
    }
}

/// A freely reduced word in the generators of a free group.
///
/// Words are ordered by length first, then lexicographically by letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord::default()
    }

    /// Freely reduces the given letters.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> FreeWord {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        FreeWord { letters: out }
    }

    pub fn letter(l: Letter) -> FreeWord {
        FreeWord { letters: vec![l] }
    }

    pub fn gen(generator: u32) -> FreeWord {
        FreeWord::letter(Letter::gen(generator))
    }

    pub fn inv_gen(generator: u32) -> FreeWord {
        FreeWord::letter(Letter::inv_gen(generator))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Word length |x|.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn max_generator(&self) -> u32 {
        self.letters.iter().map(|l| l.generator()).max().unwrap_or(0)
    }

    pub fn pow(&self, n: i32) -> FreeWord {
        let base = if n < 0 { self.inverse_word() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.mul_word(&base);
        }
        out
    }

    pub fn mul_word(&self, rhs: &FreeWord) -> FreeWord {
        let mut cancel = 0;
        let (a, b) = (&self.letters, &rhs.letters);
        while cancel < a.len() && cancel < b.len() && a[a.len() - 1 - cancel] == b[cancel].inverse() {
            cancel += 1;
        }
        let mut letters = Vec::with_capacity(a.len() + b.len() - 2 * cancel);
        letters.extend_from_slice(&a[..a.len() - cancel]);
        letters.extend_from_slice(&b[cancel..]);
        let w = FreeWord { letters };
        debug_assert!(w.is_reduced(), "product of reduced words must be reduced");
        w
    }

    pub fn inverse_word(&self) -> FreeWord {
        FreeWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Applies a letter substitution and reduces.
    pub fn substitute(&self, image: impl Fn(Letter) -> FreeWord) -> FreeWord {
        let mut out: Vec<Letter> = Vec::new();
        for &l in &self.letters {
            for m in image(l).letters {
                push_reduced(&mut out, m);
            }
        }
        FreeWord { letters: out }
    }

    /// Parses whitespace separated tokens `x<i>` / `X<i>`, or `e`.
    pub fn parse(text: &str) -> Result<FreeWord, String> {
        let text = text.trim();
        if text == "e" {
            return Ok(FreeWord::identity());
        }
        let letters = text
            .split_whitespace()
            .map(|t| t.parse::<Letter>())
            .collect::<Result<Vec<_>, _>>()?;
        if letters.is_empty() {
            return Err("empty word".into());
        }
        Ok(FreeWord::from_letters(letters))
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl GroupElement for FreeWord {
    fn identity(_group: &Group) -> Self {
        FreeWord::identity()
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.mul_word(rhs)
    }

    fn inverse(&self) -> Self {
        self.inverse_word()
    }

    fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn belongs_to(&self, group: &Group) -> bool {
        matches!(group, Group::Free { rank } if self.max_generator() <= *rank)
    }
}

/// A point of ℤ^d, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(pub Vec<i64>);

impl LatticePoint {
    pub fn zero(dim: usize) -> LatticePoint {
        LatticePoint(vec![0; dim])
    }

    /// The unit vector e_axis.
    pub fn unit(dim: usize, axis: usize) -> LatticePoint {
        let mut v = vec![0; dim];
        v[axis] = 1;
        LatticePoint(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| -a).collect())
    }

    pub fn max_abs(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    pub fn parse(text: &str) -> Result<LatticePoint, String> {
        let coords = text
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| format!("bad coordinate {t:?}")))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.is_empty() {
            return Err("empty lattice point".into());
        }
        Ok(LatticePoint(coords))
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl GroupElement for LatticePoint {
    fn identity(group: &Group) -> Self {
        match group {
            Group::Lattice { dim } => LatticePoint::zero(*dim),
            Group::Free { .. } => panic!("lattice identity requested for a free group"),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }

    fn inverse(&self) -> Self {
        self.neg()
    }

    fn is_identity(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    fn belongs_to(&self, group: &Group) -> bool {
        matches!(group, Group::Lattice { dim } if *dim == self.0.len())
    }
}

/// Every reduced word of length exactly `n` in F_k, in sorted order.
pub fn sphere(rank: u32, n: usize) -> Vec<FreeWord> {
    let mut layer = vec![FreeWord::identity()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(layer.len() * (2 * rank as usize));
        for w in &layer {
            for l in Letter::all(rank) {
                if w.letters.last() == Some(&l.inverse()) {
                    continue;
                }
                let mut letters = w.letters.clone();
                letters.push(l);
                next.push(FreeWord { letters });
            }
        }
        layer = next;
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn reduction_and_products() {
        assert_eq!(w("x1 X1"), FreeWord::identity());
        assert_eq!(w("x1 x2 X2 x1"), w("x1 x1"));
        assert_eq!(w("x1 x2").mul_word(&w("X2 X1")), FreeWord::identity());
        assert_eq!(w("x1 x2").mul_word(&w("X2 x3")), w("x1 x3"));
        assert_eq!(w("x1 x2").inverse_word(), w("X2 X1"));
        assert_eq!(w("x1 x2").len(), 2);
        assert_eq!(w("e").len(), 0);
        assert_eq!(w("x1").pow(3), w("x1 x1 x1"));
        assert_eq!(w("x1 x2").pow(-1), w("X2 X1"));
    }

    #[test]
    fn word_order_is_shortlex() {
        let mut v = vec![w("x2"), w("x1 x1"), w("e"), w("X1"), w("x1")];
        v.sort();
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["e", "x1", "X1", "x2", "x1 x1"]);
    }

    #[test]
    fn parse_errors() {
        assert!(FreeWord::parse("x0").is_err());
        assert!(FreeWord::parse("y1").is_err());
        assert!(FreeWord::parse("").is_err());
        assert!(LatticePoint::parse("1 a").is_err());
    }

    #[test]
    fn sphere_sizes_match_enumeration() {
        // 2k(2k-1)^(n-1) words of length n
        assert_eq!(sphere(2, 0).len(), 1);
        assert_eq!(sphere(2, 1).len(), 4);
        assert_eq!(sphere(2, 3).len(), 36);
        assert_eq!(sphere(3, 2).len(), 30);
        assert!(sphere(2, 4).iter().all(|x| x.is_reduced() && x.len() == 4));
    }

    #[test]
    fn membership_of_group() {
        assert!(w("x1 X2").belongs_to(&Group::Free { rank: 2 }));
        assert!(!w("x3").belongs_to(&Group::Free { rank: 2 }));
        assert!(!LatticePoint(vec![1, 2]).belongs_to(&Group::Lattice { dim: 3 }));
    }
}
