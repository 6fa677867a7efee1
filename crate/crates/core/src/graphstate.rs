//! Multigraphs, the Boolean lattice of states, and the chromatic symmetric
//! function.
//!
//! A state is a subset of the (ordered) edge list, identified with a bit
//! vector over edge positions: bit `i` set means edge `e_{i+1}` is present,
//! so the full edge set is the all-ones string. Edge order is significant
//! and fixed for the lifetime of a graph: it defines binary-string positions
//! and the sign convention on lattice edges.
//!
//! `X_G` is computed two independent ways: the signed states formula
//! `Σ_F (-1)^{|F|} p_{λ(F)}` over all `2^m` states, and a brute-force oracle
//! over proper colorings read off in the monomial basis.

use std::fmt;

use num_traits::Zero;

use crate::partition::Partition;
use crate::symfunc::{qint, quint, Basis, Q, SymExpr};

/// Multigraph on vertices `0..n` with an ordered edge list.
///
/// `u == v` is a loop; repeated pairs are parallel edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Subset of the edge positions `0..m`, as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct State(pub u64);

impl State {
    pub fn empty() -> Self {
        State(0)
    }

    pub fn full(m: usize) -> Self {
        State(if m == 64 { u64::MAX } else { (1u64 << m) - 1 })
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.0 >> edge & 1 == 1
    }

    pub fn size(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn without(&self, edge: usize) -> State {
        State(self.0 & !(1u64 << edge))
    }

    pub fn with(&self, edge: usize) -> State {
        State(self.0 | 1u64 << edge)
    }

    pub fn edges(&self, m: usize) -> impl Iterator<Item = usize> + '_ {
        (0..m).filter(move |&i| self.contains(i))
    }

    /// Binary string `z_1…z_m`, 1 meaning the edge is present.
    pub fn bit_string(&self, m: usize) -> String {
        (0..m)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }
}

/// Connected components of a state: blocks sorted ascending, ordered by
/// minimum element; `ptype` is the partition of block sizes.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentData {
    pub blocks: Vec<Vec<usize>>,
    pub ptype: Partition,
}

/// Edge of the Hasse diagram from a state to the state with one fewer edge.
///
/// `sign = (-1)^k` where `k` counts present edges with index strictly greater
/// than the removed position; this makes every lattice square anticommute.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HasseEdge {
    pub from: State,
    pub to: State,
    pub star_position: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphParseError {
    Header(String),
    Edge { line: usize, msg: String },
    VertexRange { line: usize, v: usize, n: usize },
    EdgeCount { expected: usize, got: usize },
}

impl fmt::Display for GraphParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphParseError::Header(s) => write!(f, "bad header line: {s}"),
            GraphParseError::Edge { line, msg } => write!(f, "bad edge on line {line}: {msg}"),
            GraphParseError::VertexRange { line, v, n } => {
                write!(f, "vertex {v} out of range 1..={n} on line {line}")
            }
            GraphParseError::EdgeCount { expected, got } => {
                write!(f, "expected {expected} edges, found {got}")
            }
        }
    }
}

impl std::error::Error for GraphParseError {}

impl Multigraph {
    /// Vertices are 1-indexed in the public constructor, matching the file
    /// format; internally everything is 0-indexed.
    pub fn new(n: usize, edges_1indexed: &[(usize, usize)]) -> Self {
        assert!(n >= 1, "graph needs at least one vertex");
        let edges = edges_1indexed
            .iter()
            .map(|&(u, v)| {
                assert!(u >= 1 && u <= n && v >= 1 && v <= n, "vertex out of range");
                (u - 1, v - 1)
            })
            .collect();
        Multigraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of edge `i`, 0-indexed.
    pub fn edge(&self, i: usize) -> (usize, usize) {
        self.edges[i]
    }

    pub fn edges_1indexed(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|&(u, v)| (u + 1, v + 1)).collect()
    }

    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    /// Graph with the same vertices and the edge list permuted/filtered by
    /// `keep` (indices into the current edge list, in the new order).
    pub fn with_edge_order(&self, keep: &[usize]) -> Multigraph {
        Multigraph {
            n: self.n,
            edges: keep.iter().map(|&i| self.edges[i]).collect(),
        }
    }

    /// Disjoint union; `other`'s vertices are shifted past `self`'s, edges
    /// listed `self` first.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        Multigraph {
            n: self.n + other.n,
            edges,
        }
    }

    pub fn complete(n: usize) -> Multigraph {
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edges.push((u, v));
            }
        }
        Multigraph::new(n, &edges)
    }

    pub fn path(n: usize) -> Multigraph {
        let edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        Multigraph::new(n, &edges)
    }

    pub fn star(n: usize) -> Multigraph {
        let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
        Multigraph::new(n, &edges)
    }

    pub fn cycle(n: usize) -> Multigraph {
        let mut edges: Vec<_> = (1..n).map(|u| (u, u + 1)).collect();
        edges.push((n, 1));
        Multigraph::new(n, &edges)
    }

    pub fn edgeless(n: usize) -> Multigraph {
        Multigraph::new(n, &[])
    }

    /// Parses the text format: first line `n m`, then `m` lines `u v`
    /// (1-indexed); edge order is file order. A loop is `u u`.
    pub fn parse(text: &str) -> Result<Multigraph, GraphParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (_, header) = lines
            .next()
            .ok_or_else(|| GraphParseError::Header("empty input".into()))?;
        let mut it = header.split_whitespace();
        let n: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or_else(|| GraphParseError::Header(header.into()))?;
        let m: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| GraphParseError::Header(header.into()))?;
        if it.next().is_some() {
            return Err(GraphParseError::Header(header.into()));
        }
        let mut edges = Vec::with_capacity(m);
        for (lineno, line) in lines {
            let mut it = line.split_whitespace();
            let parse_v = |s: Option<&str>| -> Result<usize, GraphParseError> {
                s.and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| GraphParseError::Edge {
                        line: lineno,
                        msg: line.into(),
                    })
            };
            let u = parse_v(it.next())?;
            let v = parse_v(it.next())?;
            if it.next().is_some() {
                return Err(GraphParseError::Edge {
                    line: lineno,
                    msg: line.into(),
                });
            }
            for w in [u, v] {
                if w < 1 || w > n {
                    return Err(GraphParseError::VertexRange {
                        line: lineno,
                        v: w,
                        n,
                    });
                }
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphParseError::EdgeCount {
                expected: m,
                got: edges.len(),
            });
        }
        Ok(Multigraph::new(n, &edges))
    }

    /// Writes the text format back out; exact round trip with [`parse`].
    ///
    /// [`parse`]: Multigraph::parse
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges_1indexed() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// All `2^m` states, ascending by bit mask.
    pub fn states(&self) -> impl Iterator<Item = State> {
        let count = 1u64 << self.m();
        (0..count).map(State)
    }

    pub fn states_of_size(&self, i: usize) -> Vec<State> {
        self.states().filter(|s| s.size() == i).collect()
    }

    /// Connected components of the spanning subgraph selected by `f`.
    /// Isolated vertices are singleton blocks; loops and parallel edges do
    /// not change blocks.
    pub fn components(&self, f: State) -> ComponentData {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for i in 0..self.m() {
            if f.contains(i) {
                let (u, v) = self.edges[i];
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru.max(rv)] = ru.min(rv);
                }
            }
        }
        let mut blocks_by_root: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            let r = find(&mut parent, v);
            blocks_by_root[r].push(v);
        }
        let blocks: Vec<Vec<usize>> = blocks_by_root.into_iter().filter(|b| !b.is_empty()).collect();
        let ptype = Partition::new(blocks.iter().map(|b| b.len()).collect());
        ComponentData { blocks, ptype }
    }

    /// Downward Hasse edges from `f`, one per present edge, ordered by star
    /// position and carrying the `(-1)^k` sign.
    pub fn hasse_down(&self, f: State) -> Vec<HasseEdge> {
        let mut out = Vec::with_capacity(f.size());
        for i in 0..self.m() {
            if !f.contains(i) {
                continue;
            }
            let ones_after = (i + 1..self.m()).filter(|&j| f.contains(j)).count();
            out.push(HasseEdge {
                from: f,
                to: f.without(i),
                star_position: i,
                sign: if ones_after % 2 == 0 { 1 } else { -1 },
            });
        }
        out
    }

    /// `X_G = Σ_F (-1)^{|F|} p_{λ(F)}` over all states. Zero when the graph
    /// has a loop (paired states cancel).
    pub fn chromatic_sym_states(&self) -> SymExpr {
        let mut out = SymExpr::zero(Basis::PowerSum);
        for f in self.states() {
            let sign = if f.size() % 2 == 0 { 1 } else { -1 };
            out.add_term(self.components(f).ptype, qint(sign));
        }
        out
    }

    /// Brute-force oracle: buckets proper colorings with colors `{1..n}` by
    /// color-class size profile and reads off monomial coefficients.
    pub fn chromatic_sym_colorings(&self) -> SymExpr {
        let mut out = SymExpr::zero(Basis::Monomial);
        if self.has_loop() {
            return out;
        }
        let n = self.n;
        let mut counts: std::collections::BTreeMap<Partition, u64> = Default::default();
        let mut coloring = vec![0usize; n];
        loop {
            if self.is_proper(&coloring) {
                let mut class_sizes = vec![0usize; n];
                for &c in &coloring {
                    class_sizes[c] += 1;
                }
                let profile = Partition::new(class_sizes.into_iter().filter(|&s| s > 0).collect());
                *counts.entry(profile).or_insert(0) += 1;
            }
            // odometer over colorings
            let mut k = 0;
            loop {
                if k == n {
                    // divide each bucket by the number of distinct monomials of its shape
                    for (lambda, count) in counts {
                        let perms = distinct_rearrangements(&lambda, n);
                        let coeff = quint(count) / quint(perms);
                        assert!(coeff.is_integer(), "coloring bucket not divisible");
                        out.add_term(lambda, coeff);
                    }
                    return out;
                }
                coloring[k] += 1;
                if coloring[k] < n {
                    break;
                }
                coloring[k] = 0;
                k += 1;
            }
        }
    }

    fn is_proper(&self, coloring: &[usize]) -> bool {
        self.edges.iter().all(|&(u, v)| coloring[u] != coloring[v])
    }

    /// Number of proper colorings with `k` colors, by direct enumeration.
    pub fn chromatic_polynomial_value(&self, k: usize) -> u64 {
        if self.has_loop() {
            return 0;
        }
        if k == 0 {
            return if self.n == 0 { 1 } else { 0 };
        }
        let mut count = 0u64;
        let mut coloring = vec![0usize; self.n];
        'outer: loop {
            if self.is_proper(&coloring) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == self.n {
                    break 'outer;
                }
                coloring[i] += 1;
                if coloring[i] < k {
                    break;
                }
                coloring[i] = 0;
                i += 1;
            }
        }
        count
    }
}

/// Number of distinct sequences of length `slots` whose nonzero entries are a
/// rearrangement of `lambda`: `slots! / (∏ m_i(λ)! · (slots - ℓ(λ))!)`.
fn distinct_rearrangements(lambda: &Partition, slots: usize) -> u64 {
    assert!(lambda.len() <= slots);
    let fact = |k: usize| -> u64 { (1..=k as u64).product() };
    let mut denom = fact(slots - lambda.len());
    let mut run = 0;
    let mut prev = 0;
    for &p in lambda.parts() {
        if p == prev {
            run += 1;
        } else {
            prev = p;
            run = 1;
        }
        denom *= run;
    }
    fact(slots) / denom
}

/// Evaluates an expression at `x_1 = … = x_k = 1`, rest zero.
///
/// In the monomial basis `m_λ(1^k)` counts distinct rearrangements of `λ`
/// into `k` slots; this is how `X_G(1^k) = χ_G(k)` is cross-checked.
pub fn eval_monomial_at_ones(e: &SymExpr, k: usize) -> Q {
    assert_eq!(e.basis(), Basis::Monomial);
    let mut acc = Q::zero();
    for (lambda, c) in e.iter() {
        if lambda.len() <= k {
            acc += c * quint(distinct_rearrangements(lambda, k));
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{p_to_s, s_to_m};

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn components_examples() {
        let k3 = Multigraph::complete(3);
        let full = State::full(3);
        let c = k3.components(full);
        assert_eq!(c.blocks, vec![vec![0, 1, 2]]);
        assert_eq!(c.ptype, pt(&[3]));

        let c = k3.components(State::empty());
        assert_eq!(c.blocks, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(c.ptype, pt(&[1, 1, 1]));

        // P_4 with edges 1-2, 2-3, 3-4; state {e_1, e_3}
        let p4 = Multigraph::path(4);
        let f = State::empty().with(0).with(2);
        let c = p4.components(f);
        assert_eq!(c.blocks, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(c.ptype, pt(&[2, 2]));

        // loops and parallel edges leave blocks alone
        let g = Multigraph::new(2, &[(1, 1), (1, 2), (1, 2)]);
        let c = g.components(State::full(3));
        assert_eq!(c.blocks, vec![vec![0, 1]]);
    }

    #[test]
    fn hasse_signs_match_triangle_diagram() {
        // K_3 with e_1 = {1,2}, e_2 = {1,3}, e_3 = {2,3}; the sign depends
        // only on bit positions, not endpoints.
        let k3 = Multigraph::complete(3);
        let sign_of = |state: State, star: usize| {
            k3.hasse_down(state)
                .into_iter()
                .find(|h| h.star_position == star)
                .unwrap()
                .sign
        };
        let s = |bits: &str| {
            State(
                bits.chars()
                    .enumerate()
                    .map(|(i, c)| if c == '1' { 1u64 << i } else { 0 })
                    .sum(),
            )
        };
        // from 111: +d_{*11}, -d_{1*1}, +d_{11*}
        assert_eq!(sign_of(s("111"), 0), 1);
        assert_eq!(sign_of(s("111"), 1), -1);
        assert_eq!(sign_of(s("111"), 2), 1);
        // from 011 (e_2, e_3 present): -d_{0*1}, +d_{01*}
        assert_eq!(sign_of(s("011"), 1), -1);
        assert_eq!(sign_of(s("011"), 2), 1);
        // from 101: -d_{*01}, +d_{10*}
        assert_eq!(sign_of(s("101"), 0), -1);
        assert_eq!(sign_of(s("101"), 2), 1);
        // from 110: -d_{*10}, +d_{1*0}
        assert_eq!(sign_of(s("110"), 0), -1);
        assert_eq!(sign_of(s("110"), 1), 1);
        // level 1 edges are all +
        assert_eq!(sign_of(s("100"), 0), 1);
        assert_eq!(sign_of(s("010"), 1), 1);
        assert_eq!(sign_of(s("001"), 2), 1);
    }

    #[test]
    fn square_sign_law() {
        // every lattice square has three edges of one sign, one of the other
        for g in [
            Multigraph::complete(3),
            Multigraph::complete(4),
            Multigraph::path(5),
            Multigraph::cycle(4),
            Multigraph::new(3, &[(1, 2), (1, 2), (2, 3), (1, 1), (1, 3), (2, 3)]),
        ] {
            assert!(g.m() <= 6);
            for f in g.states() {
                let m = g.m();
                for a in 0..m {
                    for b in a + 1..m {
                        if !f.contains(a) || !f.contains(b) {
                            continue;
                        }
                        let sign_of = |from: State, star: usize| {
                            g.hasse_down(from)
                                .into_iter()
                                .find(|h| h.star_position == star)
                                .unwrap()
                                .sign as i32
                        };
                        let product = sign_of(f, a)
                            * sign_of(f, b)
                            * sign_of(f.without(a), b)
                            * sign_of(f.without(b), a);
                        assert_eq!(product, -1, "square must anticommute");
                    }
                }
            }
        }
    }

    #[test]
    fn states_formula_examples() {
        for n in 1..=4 {
            let e = Multigraph::edgeless(n).chromatic_sym_states();
            assert_eq!(e, SymExpr::term(Basis::PowerSum, pt(&vec![1; n]), qint(1)));
        }

        let k2 = Multigraph::complete(2).chromatic_sym_states();
        let mut expected = SymExpr::zero(Basis::PowerSum);
        expected.add_term(pt(&[1, 1]), qint(1));
        expected.add_term(pt(&[2]), qint(-1));
        assert_eq!(k2, expected);

        let p3 = Multigraph::path(3).chromatic_sym_states();
        let mut expected = SymExpr::zero(Basis::PowerSum);
        expected.add_term(pt(&[1, 1, 1]), qint(1));
        expected.add_term(pt(&[2, 1]), qint(-2));
        expected.add_term(pt(&[3]), qint(1));
        assert_eq!(p3, expected);
    }

    #[test]
    fn loop_kills_states_formula() {
        let g = Multigraph::new(3, &[(1, 2), (2, 2), (2, 3)]);
        assert!(g.chromatic_sym_states().is_zero());
        assert!(g.chromatic_sym_colorings().is_zero());
        assert_eq!(g.chromatic_polynomial_value(3), 0);
    }

    #[test]
    fn coloring_oracle_examples() {
        let k2 = Multigraph::complete(2).chromatic_sym_colorings();
        assert_eq!(k2, SymExpr::term(Basis::Monomial, pt(&[1, 1]), qint(2)));

        let k3 = Multigraph::complete(3).chromatic_sym_colorings();
        assert_eq!(k3, SymExpr::term(Basis::Monomial, pt(&[1, 1, 1]), qint(6)));

        let v = Multigraph::edgeless(1).chromatic_sym_colorings();
        assert_eq!(v, SymExpr::term(Basis::Monomial, pt(&[1]), qint(1)));
    }

    #[test]
    fn chromatic_values() {
        assert_eq!(Multigraph::complete(2).chromatic_polynomial_value(3), 6);
        assert_eq!(Multigraph::complete(3).chromatic_polynomial_value(3), 6);
        assert_eq!(Multigraph::complete(3).chromatic_polynomial_value(2), 0);
    }

    #[test]
    fn basis_change_consistency() {
        // states formula → schur → monomial equals the coloring oracle
        let mut graphs = vec![
            Multigraph::complete(2),
            Multigraph::path(3),
            Multigraph::complete(3),
            Multigraph::path(4),
            Multigraph::star(4),
            Multigraph::cycle(4),
            Multigraph::complete(4),
            Multigraph::new(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]),
            Multigraph::new(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]),
        ];
        graphs.push(Multigraph::path(5)); // one n = 5 sample
        for g in graphs {
            let via_states = s_to_m(&p_to_s(&g.chromatic_sym_states()));
            assert_eq!(via_states, g.chromatic_sym_colorings(), "n={} m={}", g.n(), g.m());
        }
    }

    #[test]
    fn specialization_matches_chromatic_polynomial() {
        for g in [
            Multigraph::complete(2),
            Multigraph::path(3),
            Multigraph::complete(3),
            Multigraph::star(4),
            Multigraph::cycle(4),
            Multigraph::complete(4),
        ] {
            let xm = g.chromatic_sym_colorings();
            for k in 0..=4 {
                assert_eq!(
                    eval_monomial_at_ones(&xm, k),
                    quint(g.chromatic_polynomial_value(k)),
                    "k = {k}"
                );
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let text = "4 3\n1 2\n2 3\n2 2\n";
        let g = Multigraph::parse(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges_1indexed(), vec![(1, 2), (2, 3), (2, 2)]);
        assert_eq!(g.to_text(), text);

        assert!(Multigraph::parse("").is_err());
        assert!(Multigraph::parse("3\n").is_err());
        assert!(Multigraph::parse("2 1\n1 3\n").is_err());
        assert!(Multigraph::parse("2 2\n1 2\n").is_err());
    }

    proptest::proptest! {
        #[test]
        fn text_format_round_trips(
            n in 1usize..9,
            raw in proptest::collection::vec((0usize..8, 0usize..8), 0..12),
        ) {
            let edges: Vec<(usize, usize)> =
                raw.iter().map(|&(u, v)| (u % n + 1, v % n + 1)).collect();
            let g = Multigraph::new(n, &edges);
            let back = Multigraph::parse(&g.to_text()).unwrap();
            proptest::prop_assert_eq!(back, g);
        }
    }
}
