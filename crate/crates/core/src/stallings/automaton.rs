//! Folded core graphs of finitely generated subgroups of F_k.
//!
//! Every edge also carries an output word in the abstract generators
//! `a_1, …, a_m` (one per input generator). Reading a loop at the base
//! and multiplying the outputs gives a word in the `a_i` that maps to the
//! element read, which is how membership produces factorizations.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::StallingsError;
use crate::group::{FreeWord, Letter};

/// A directed edge labelled by a generator: reading `x_gen` at `src` leads
/// to `dst`, reading `X_gen` at `dst` leads back to `src`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub src: usize,
    pub gen: u32,
    pub dst: usize,
    /// Output in the abstract generators, read from `src` to `dst`.
    pub output: FreeWord,
}

/// The order in which pending folds are carried out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FoldOrder {
    /// Always fold the smallest (vertex, letter) conflict first.
    Canonical,
    /// Pick conflicts at random from a seeded generator.
    Shuffled(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubgroupAutomaton {
    rank: u32,
    generators: Vec<FreeWord>,
    vertex_count: usize,
    /// Sorted by (src, gen); the base is vertex 0.
    edges: Vec<Edge>,
    /// For every (vertex, letter) the edge index and whether it is read forward.
    moves: HashMap<(usize, Letter), (usize, bool)>,
    /// Whether each edge belongs to the breadth-first spanning tree.
    in_tree: Vec<bool>,
    /// Basis index of each non-tree edge.
    basis_index: Vec<Option<usize>>,
    basis: Vec<FreeWord>,
}

/// Outcome of reading a word from the base.
#[derive(Debug, Clone, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// Position of the first letter that could not be read, or the word
    /// length when the trace ended away from the base.
    pub failed_at: Option<usize>,
    /// Factorization over [`SubgroupAutomaton::basis`] as (index, ±1).
    pub factorization: Vec<(usize, i32)>,
    /// The same element as a word in the input generators `a_i ↦ gens[i−1]`.
    pub generator_word: Option<FreeWord>,
}

struct Workspace {
    edges: Vec<Option<Edge>>,
    alive: Vec<bool>,
}

impl Workspace {
    fn half_edges(&self) -> BTreeMap<(usize, Letter), Vec<(usize, bool)>> {
        let mut map: BTreeMap<(usize, Letter), Vec<(usize, bool)>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let Some(e) = e {
                map.entry((e.src, Letter::gen(e.gen))).or_default().push((i, true));
                map.entry((e.dst, Letter::inv_gen(e.gen))).or_default().push((i, false));
            }
        }
        map
    }

    fn far_end(&self, (i, fwd): (usize, bool)) -> (usize, FreeWord) {
        let e = self.edges[i].as_ref().expect("live edge");
        if fwd {
            (e.dst, e.output.clone())
        } else {
            (e.src, e.output.inverse_word())
        }
    }

    /// Re-bases vertex `u` by `g`: outgoing outputs get `g·`, incoming `·g⁻¹`.
    fn gauge(&mut self, u: usize, g: &FreeWord) {
        let gi = g.inverse_word();
        for e in self.edges.iter_mut().flatten() {
            if e.src == u {
                e.output = g.mul_word(&e.output);
            }
            if e.dst == u {
                e.output = e.output.mul_word(&gi);
            }
        }
    }

    fn merge(&mut self, from: usize, into: usize) {
        for e in self.edges.iter_mut().flatten() {
            if e.src == from {
                e.src = into;
            }
            if e.dst == from {
                e.dst = into;
            }
        }
        self.alive[from] = false;
    }

    /// Identifies the far ends of two half-edges at the same vertex with the
    /// same letter. Only non-base vertices are re-based, so loop outputs at
    /// the base are unchanged.
    fn fold(&mut self, h1: (usize, bool), h2: (usize, bool)) {
        let (w1, o1) = self.far_end(h1);
        let (w2, o2) = self.far_end(h2);
        if w1 == w2 {
            self.edges[h2.0] = None;
            return;
        }
        let (u, keep, dropped, g) = if w2 != 0 {
            (w2, w1, h2.0, o1.inverse_word().mul_word(&o2))
        } else {
            (w1, w2, h1.0, o2.inverse_word().mul_word(&o1))
        };
        self.gauge(u, &g);
        self.edges[dropped] = None;
        self.merge(u, keep);
    }

    fn trim(&mut self) {
        loop {
            let mut degree = vec![0usize; self.alive.len()];
            for e in self.edges.iter().flatten() {
                degree[e.src] += 1;
                degree[e.dst] += 1;
            }
            let hairs: Vec<usize> = (1..self.alive.len())
                .filter(|&v| self.alive[v] && degree[v] <= 1)
                .collect();
            if hairs.is_empty() {
                return;
            }
            for v in hairs {
                self.alive[v] = false;
                for e in self.edges.iter_mut() {
                    if e.as_ref().is_some_and(|e| e.src == v || e.dst == v) {
                        *e = None;
                    }
                }
            }
        }
    }
}

impl SubgroupAutomaton {
    pub fn build(generators: &[FreeWord], rank: u32) -> Result<Self, StallingsError> {
        Self::build_with_order(generators, rank, FoldOrder::Canonical)
    }

    pub fn build_with_order(
        generators: &[FreeWord],
        rank: u32,
        order: FoldOrder,
    ) -> Result<Self, StallingsError> {
        if rank == 0 {
            return Err(StallingsError::InvalidRank(rank));
        }
        if let Some(w) = generators.iter().find(|w| w.max_generator() > rank) {
            return Err(StallingsError::GeneratorOutsideRank {
                word: w.to_string(),
                rank,
            });
        }
        let mut ws = Workspace {
            edges: Vec::new(),
            alive: vec![true],
        };
        for (a, w) in generators.iter().enumerate() {
            let label = FreeWord::gen(a as u32 + 1);
            let n = w.len();
            let mut prev = 0;
            for (t, &l) in w.letters().iter().enumerate() {
                let next = if t + 1 == n {
                    0
                } else {
                    ws.alive.push(true);
                    ws.alive.len() - 1
                };
                let out = if t == 0 { label.clone() } else { FreeWord::identity() };
                let edge = if l.is_inverse() {
                    Edge { src: next, gen: l.generator(), dst: prev, output: out.inverse_word() }
                } else {
                    Edge { src: prev, gen: l.generator(), dst: next, output: out }
                };
                ws.edges.push(Some(edge));
                prev = next;
            }
        }

        let mut rng = match order {
            FoldOrder::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
            FoldOrder::Canonical => None,
        };
        loop {
            let conflicts: Vec<Vec<(usize, bool)>> = ws
                .half_edges()
                .into_values()
                .filter(|v| v.len() > 1)
                .collect();
            if conflicts.is_empty() {
                break;
            }
            let (h1, h2) = match rng.as_mut() {
                None => (conflicts[0][0], conflicts[0][1]),
                Some(r) => {
                    let c = &conflicts[r.random_range(0..conflicts.len())];
                    let i = r.random_range(0..c.len());
                    let mut j = r.random_range(0..c.len() - 1);
                    if j >= i {
                        j += 1;
                    }
                    (c[i], c[j])
                }
            };
            ws.fold(h1, h2);
        }
        ws.trim();
        Ok(Self::canonicalize(ws, generators.to_vec(), rank))
    }

    /// Renumbers vertices in breadth-first order from the base, scanning
    /// letters as x1, X1, x2, X2, …
    fn canonicalize(ws: Workspace, generators: Vec<FreeWord>, rank: u32) -> Self {
        let half = ws.half_edges();
        let mut id: HashMap<usize, usize> = HashMap::new();
        let mut parent_edge: Vec<Option<usize>> = vec![None];
        let mut path: Vec<FreeWord> = vec![FreeWord::identity()];
        id.insert(0, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for l in Letter::all(rank) {
                let Some(hs) = half.get(&(v, l)) else { continue };
                let (far, _) = ws.far_end(hs[0]);
                if let std::collections::hash_map::Entry::Vacant(slot) = id.entry(far) {
                    slot.insert(parent_edge.len());
                    parent_edge.push(Some(hs[0].0));
                    path.push(path[id[&v]].mul_word(&FreeWord::letter(l)));
                    queue.push_back(far);
                }
            }
        }
        let tree_edges: Vec<usize> = parent_edge.iter().flatten().copied().collect();
        let mut edges: Vec<(Edge, bool)> = ws
            .edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.as_ref().map(|e| (i, e)))
            .map(|(i, e)| {
                (
                    Edge { src: id[&e.src], gen: e.gen, dst: id[&e.dst], output: e.output.clone() },
                    tree_edges.contains(&i),
                )
            })
            .collect();
        edges.sort_by_key(|(e, _)| (e.src, e.gen));

        let mut moves = HashMap::new();
        let mut basis = Vec::new();
        let mut basis_index = Vec::new();
        for (i, (e, tree)) in edges.iter().enumerate() {
            moves.insert((e.src, Letter::gen(e.gen)), (i, true));
            moves.insert((e.dst, Letter::inv_gen(e.gen)), (i, false));
            if *tree {
                basis_index.push(None);
            } else {
                basis_index.push(Some(basis.len()));
                basis.push(
                    path[e.src]
                        .mul_word(&FreeWord::gen(e.gen))
                        .mul_word(&path[e.dst].inverse_word()),
                );
            }
        }
        SubgroupAutomaton {
            rank,
            generators,
            vertex_count: path.len(),
            in_tree: edges.iter().map(|(_, t)| *t).collect(),
            edges: edges.into_iter().map(|(e, _)| e).collect(),
            moves,
            basis_index,
            basis,
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn generators(&self) -> &[FreeWord] {
        &self.generators
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Edges of the breadth-first spanning tree.
    pub fn tree_edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter().zip(&self.in_tree).filter(|(_, t)| **t).map(|(e, _)| e)
    }

    /// Free basis of the subgroup read off the spanning tree.
    pub fn basis(&self) -> &[FreeWord] {
        &self.basis
    }

    /// Rank of the subgroup, `#edges − #vertices + 1`.
    pub fn subgroup_rank(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    /// Vertex count and labelled edge list, which determine the automaton up
    /// to isomorphism.
    pub fn shape(&self) -> (usize, Vec<(usize, u32, usize)>) {
        (
            self.vertex_count,
            self.edges.iter().map(|e| (e.src, e.gen, e.dst)).collect(),
        )
    }

    pub fn is_isomorphic(&self, other: &SubgroupAutomaton) -> bool {
        self.rank == other.rank && self.shape() == other.shape()
    }

    /// No vertex has two half-edges with the same letter.
    pub fn is_folded(&self) -> bool {
        self.moves.len() == 2 * self.edges.len()
    }

    /// Every non-base vertex has degree at least two.
    pub fn is_core(&self) -> bool {
        let mut degree = vec![0usize; self.vertex_count];
        for e in &self.edges {
            degree[e.src] += 1;
            degree[e.dst] += 1;
        }
        degree.iter().skip(1).all(|&d| d >= 2)
    }

    /// One step from `v` along letter `l`.
    pub fn step(&self, v: usize, l: Letter) -> Option<usize> {
        self.moves.get(&(v, l)).map(|&(i, fwd)| {
            let e = &self.edges[i];
            if fwd {
                e.dst
            } else {
                e.src
            }
        })
    }

    /// Reads as much of `w` as possible from the base: the vertex reached and
    /// the number of letters consumed.
    pub fn read_prefix(&self, w: &FreeWord) -> (usize, usize) {
        let mut v = 0;
        for (i, &l) in w.letters().iter().enumerate() {
            match self.step(v, l) {
                Some(next) => v = next,
                None => return (v, i),
            }
        }
        (v, w.len())
    }

    pub fn membership(&self, w: &FreeWord) -> Membership {
        let mut v = 0;
        let mut factorization = Vec::new();
        let mut output = FreeWord::identity();
        for (pos, &l) in w.letters().iter().enumerate() {
            let Some(&(i, fwd)) = self.moves.get(&(v, l)) else {
                return Membership {
                    member: false,
                    failed_at: Some(pos),
                    factorization: Vec::new(),
                    generator_word: None,
                };
            };
            let e = &self.edges[i];
            if let Some(b) = self.basis_index[i] {
                factorization.push((b, if fwd { 1 } else { -1 }));
            }
            if fwd {
                output = output.mul_word(&e.output);
                v = e.dst;
            } else {
                output = output.mul_word(&e.output.inverse_word());
                v = e.src;
            }
        }
        if v != 0 {
            return Membership {
                member: false,
                failed_at: Some(w.len()),
                factorization: Vec::new(),
                generator_word: None,
            };
        }
        Membership {
            member: true,
            failed_at: None,
            factorization,
            generator_word: Some(output),
        }
    }

    pub fn contains(&self, w: &FreeWord) -> bool {
        let (v, read) = self.read_prefix(w);
        read == w.len() && v == 0
    }
}

/// Multiplies out a factorization over `basis`.
pub fn evaluate_factorization(basis: &[FreeWord], factors: &[(usize, i32)]) -> FreeWord {
    factors.iter().fold(FreeWord::identity(), |acc, &(i, s)| {
        acc.mul_word(&if s > 0 { basis[i].clone() } else { basis[i].inverse_word() })
    })
}

/// Maps a word in the abstract generators to F_k via `a_i ↦ images[i−1]`.
pub fn substitute_generators(word: &FreeWord, images: &[FreeWord]) -> FreeWord {
    word.substitute(|l| {
        let img = &images[l.generator() as usize - 1];
        if l.is_inverse() {
            img.inverse_word()
        } else {
            img.clone()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    fn gens(list: &[&str]) -> Vec<FreeWord> {
        list.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn single_generator() {
        let a = SubgroupAutomaton::build(&gens(&["x1"]), 2).unwrap();
        assert_eq!(a.subgroup_rank(), 1);
        assert_eq!(a.vertex_count(), 1);
    }

    #[test]
    fn squares_and_product() {
        let a = SubgroupAutomaton::build(&gens(&["x1 x1", "x2 x2", "x1 x2"]), 2).unwrap();
        assert_eq!(a.subgroup_rank(), 3);
        assert!(a.is_folded() && a.is_core());
        assert!(a.membership(&FreeWord::identity()).member);
        assert!(a.membership(&w("x1 x2")).member);
        let m = a.membership(&w("x1"));
        assert!(!m.member);
        assert_eq!(m.failed_at, Some(1));
    }

    #[test]
    fn folding_collapses_redundant_generators() {
        // ⟨x1, x1 x1⟩ = ⟨x1⟩
        let a = SubgroupAutomaton::build(&gens(&["x1", "x1 x1"]), 1).unwrap();
        assert_eq!(a.subgroup_rank(), 1);
        let trivial = SubgroupAutomaton::build(&[FreeWord::identity()], 2).unwrap();
        assert_eq!(trivial.subgroup_rank(), 0);
        // conjugate generators leave a hair that is trimmed away from the base
        let c = SubgroupAutomaton::build(&gens(&["x2 x1 X2"]), 2).unwrap();
        assert_eq!(c.subgroup_rank(), 1);
        assert_eq!(c.vertex_count(), 2);
    }

    #[test]
    fn factorizations_reproduce_the_word() {
        let g = gens(&["x1 x1", "x2 x2", "x1 x2", "X1 x2 x1"]);
        let a = SubgroupAutomaton::build(&g, 2).unwrap();
        for word in ["x1 x2 x1 x1", "X2 X1 x1 x1 x2 x2", "x1 x2 X1 X1", "X1 x2 x1 x1 x1"] {
            let word = w(word);
            let m = a.membership(&word);
            if !m.member {
                continue;
            }
            assert_eq!(evaluate_factorization(a.basis(), &m.factorization), word);
            assert_eq!(substitute_generators(m.generator_word.as_ref().unwrap(), &g), word);
        }
    }

    #[test]
    fn fold_order_does_not_matter() {
        let g = gens(&["x1 x2 X1", "x1 x1 x2", "X2 x1 x2 x2", "x2 x1"]);
        let base = SubgroupAutomaton::build(&g, 2).unwrap();
        for seed in 0..20 {
            let other = SubgroupAutomaton::build_with_order(&g, 2, FoldOrder::Shuffled(seed)).unwrap();
            assert!(base.is_isomorphic(&other));
            let word = w("x1 x2 X1 x1 x1 x2");
            let m = other.membership(&word);
            assert_eq!(m.member, base.membership(&word).member);
            if let Some(gw) = m.generator_word {
                assert_eq!(substitute_generators(&gw, &g), word);
            }
        }
    }

    #[test]
    fn foreign_generators_are_rejected() {
        assert!(SubgroupAutomaton::build(&gens(&["x3"]), 2).is_err());
    }
}
