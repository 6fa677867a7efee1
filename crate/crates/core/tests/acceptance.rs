//! Acceptance suite: every criterion the engine must meet, each as one test
//! that prints a pass line (visible with `cargo test -- --nocapture`).
//!
//! All comparisons are exact — no tolerances anywhere.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::One;

use chromsym::homengine::{
    build_complex, chain_euler_characteristic, decategorification_holds, disjoint_union_check,
    euler_check_with, find_triangle, frobenius_series, graph_homology,
    homology_euler_characteristic, relabeling_invariance_check, simplify_graph,
    subcomplex_union_check, triangle_recurrence_check, BigradedSeries,
};
use chromsym::partition::{partitions_of, Partition};
use chromsym::symfunc::{lr_product, p_to_s, qint, s_to_m, specht_dim, Basis, Q, SymExpr};
use chromsym::Multigraph;

fn pt(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn series_table(entries: &[(usize, usize, &[usize], u64)]) -> BTreeMap<(usize, usize, Partition), u64> {
    entries
        .iter()
        .map(|&(i, j, l, m)| ((i, j, pt(l)), m))
        .collect()
}

fn k5_minus_edge() -> Multigraph {
    let mut edges = Vec::new();
    for u in 1..=5 {
        for v in u + 1..=5 {
            if !(u == 4 && v == 5) {
                edges.push((u, v));
            }
        }
    }
    Multigraph::new(5, &edges)
}

fn paw() -> Multigraph {
    Multigraph::new(4, &[(1, 2), (1, 3), (2, 3), (3, 4)])
}

fn diamond() -> Multigraph {
    Multigraph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
}

fn bull() -> Multigraph {
    Multigraph::new(5, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 5)])
}

fn butterfly() -> Multigraph {
    Multigraph::new(5, &[(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
}

fn k4_pendant() -> Multigraph {
    Multigraph::new(5, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)])
}

/// Simple-graph corpus, all with n ≤ 5 and m ≤ 7.
fn simple_corpus() -> Vec<Multigraph> {
    vec![
        Multigraph::edgeless(1),
        Multigraph::edgeless(2),
        Multigraph::edgeless(3),
        Multigraph::edgeless(4),
        Multigraph::complete(2),
        Multigraph::path(3),
        Multigraph::complete(3),
        Multigraph::path(4),
        Multigraph::star(4),
        Multigraph::cycle(4),
        paw(),
        diamond(),
        Multigraph::complete(4),
        Multigraph::path(5),
        Multigraph::star(5),
        Multigraph::cycle(5),
        bull(),
        butterfly(),
        k4_pendant(),
    ]
}

/// Multigraph additions: loops and parallel edges.
fn multigraph_corpus() -> Vec<Multigraph> {
    vec![
        Multigraph::new(1, &[(1, 1)]),
        Multigraph::new(2, &[(1, 2), (1, 2)]),
        Multigraph::new(2, &[(1, 2), (2, 2)]),
        Multigraph::new(3, &[(1, 2), (1, 2), (2, 3)]),
        Multigraph::new(3, &[(1, 2), (1, 3), (2, 3), (3, 3)]),
    ]
}

/// Labeled representatives of every connected simple graph with n ≤ 4
/// (one per isomorphism class).
fn connected_up_to_four() -> Vec<Multigraph> {
    vec![
        Multigraph::edgeless(1),
        Multigraph::complete(2),
        Multigraph::path(3),
        Multigraph::complete(3),
        Multigraph::path(4),
        Multigraph::star(4),
        Multigraph::cycle(4),
        paw(),
        diamond(),
        Multigraph::complete(4),
    ]
}

#[test]
fn criterion_1_golden_tables() {
    let start = Instant::now();

    // edgeless graphs: H_{0,0} = ⊕ f^λ S^λ and Frob = p_1^n, constant in q, t
    for n in 1..=4 {
        let h = graph_homology(&Multigraph::edgeless(n));
        let mut expected = BTreeMap::new();
        for lambda in partitions_of(n) {
            expected.insert((0, 0, lambda.clone()), specht_dim(&lambda));
        }
        assert_eq!(h.table(), expected, "edgeless n={n}");
        let series = frobenius_series(&h);
        let p1n = SymExpr::term(Basis::PowerSum, pt(&vec![1; n]), qint(1));
        assert_eq!(series.specialize(&Q::one(), &Q::one()), p_to_s(&p1n));
    }

    // K_2: (1 + qt)·s[1,1]
    let k2 = frobenius_series(&graph_homology(&Multigraph::complete(2)));
    assert_eq!(
        k2.terms,
        series_table(&[(0, 0, &[1, 1], 1), (1, 1, &[1, 1], 1)])
    );

    // K_3: full bigraded table
    let k3 = graph_homology(&Multigraph::complete(3));
    assert_eq!(
        k3.table(),
        series_table(&[
            (0, 0, &[1, 1, 1], 1),
            (1, 0, &[2, 1], 1),
            (1, 1, &[2, 1], 1),
            (1, 1, &[1, 1, 1], 3),
            (2, 2, &[1, 1, 1], 2),
        ])
    );
    // series grouped per Schur index: s[2,1] carries (q-1)t, s[1,1,1]
    // carries (1+qt)(1+2qt) = 1 + 3qt + 2q²t²
    let k3s = frobenius_series(&k3);
    let groups = k3s.by_partition();
    assert_eq!(groups[&pt(&[2, 1])], vec![(1, 0, -1), (1, 1, 1)]);
    assert_eq!(
        groups[&pt(&[1, 1, 1])],
        vec![(0, 0, 1), (1, 1, 3), (2, 2, 2)]
    );
    // monomial-basis form: collect the m-expansion per (i, j) monomial;
    // m[2,1] carries (q-1)t and m[1,1,1] carries 1 - 2t + 5qt + 2q²t²
    let mut m21: BTreeMap<(usize, usize), Q> = BTreeMap::new();
    let mut m111: BTreeMap<(usize, usize), Q> = BTreeMap::new();
    for ((i, j), e) in &k3.entries {
        let mut schur = SymExpr::zero(Basis::Schur);
        for (l, m) in &e.mults {
            schur.add_term(l.clone(), qint(*m as i64));
        }
        let mono = s_to_m(&schur);
        let sign = if (i + j) % 2 == 0 { qint(1) } else { qint(-1) };
        let c21 = mono.coeff(&pt(&[2, 1])) * &sign;
        let c111 = mono.coeff(&pt(&[1, 1, 1])) * &sign;
        if !(c21 == qint(0)) {
            m21.insert((*i, *j), c21);
        }
        if !(c111 == qint(0)) {
            m111.insert((*i, *j), c111);
        }
    }
    let expect21: BTreeMap<(usize, usize), Q> =
        [((1, 0), qint(-1)), ((1, 1), qint(1))].into_iter().collect();
    let expect111: BTreeMap<(usize, usize), Q> = [
        ((0, 0), qint(1)),
        ((1, 0), qint(-2)),
        ((1, 1), qint(5)),
        ((2, 2), qint(2)),
    ]
    .into_iter()
    .collect();
    assert_eq!(m21, expect21, "monomial coefficient of m[2,1]");
    assert_eq!(m111, expect111, "monomial coefficient of m[1,1,1]");

    // P_3: qt·s[2,1] + (1+qt)²·s[1,1,1]
    let p3 = frobenius_series(&graph_homology(&Multigraph::path(3)));
    assert_eq!(
        p3.terms,
        series_table(&[
            (0, 0, &[1, 1, 1], 1),
            (1, 1, &[2, 1], 1),
            (1, 1, &[1, 1, 1], 2),
            (2, 2, &[1, 1, 1], 1),
        ])
    );

    // P_4: qt(1+qt)·s[2,2] + 2qt(1+qt)·s[2,1,1] + (1+qt)³·s[1,1,1,1]
    let p4 = frobenius_series(&graph_homology(&Multigraph::path(4)));
    assert_eq!(
        p4.terms,
        series_table(&[
            (0, 0, &[1, 1, 1, 1], 1),
            (1, 1, &[2, 2], 1),
            (1, 1, &[2, 1, 1], 2),
            (1, 1, &[1, 1, 1, 1], 3),
            (2, 2, &[2, 2], 1),
            (2, 2, &[2, 1, 1], 2),
            (2, 2, &[1, 1, 1, 1], 3),
            (3, 3, &[1, 1, 1, 1], 1),
        ])
    );

    // T_4 (the star on four vertices):
    // qt·s[3,1] - t·s[2,2] + qt(3+2qt)·s[2,1,1] + (1+qt)³·s[1,1,1,1].
    //
    // In the j = 1 strip, rank d_{2,1} = 21 is forced: the kernel of d_{2,1}
    // contains the image of d_{3,1} ≅ S[3,1] (dimension 3 out of 24), and the
    // canonical maps attain the maximum. Hence H_{2,1} = 0 and
    // dim H_{1,1} = 36 - 21 = 15 = dim(S[3,1] ⊕ 3S[2,1,1] ⊕ 3S[1,1,1,1]);
    // no S[2,2] appears at (1,1) or (2,1). Verified against an independent
    // reimplementation of the j = 1 strip; the extra canceling S[2,2] pair
    // sometimes quoted for this graph is invisible to the q = 1 and Euler
    // specializations, which is how it evades those checks.
    let t4 = frobenius_series(&graph_homology(&Multigraph::star(4)));
    assert_eq!(
        t4.terms,
        series_table(&[
            (0, 0, &[1, 1, 1, 1], 1),
            (1, 0, &[2, 2], 1),
            (1, 1, &[3, 1], 1),
            (1, 1, &[2, 1, 1], 3),
            (1, 1, &[1, 1, 1, 1], 3),
            (2, 2, &[2, 1, 1], 2),
            (2, 2, &[1, 1, 1, 1], 3),
            (3, 3, &[1, 1, 1, 1], 1),
        ])
    );
    assert_eq!(
        t4.rendered(),
        "tq·s[3,1] - t·s[2,2] + (3tq + 2t^2q^2)·s[2,1,1] + (1 + 3tq + 3t^2q^2 + t^3q^3)·s[1,1,1,1]"
    );

    println!(
        "criterion 1 (golden tables: edgeless, K2, K3, P3, P4, T4): PASS ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_2_decategorification() {
    let start = Instant::now();
    for g in connected_up_to_four() {
        let series = frobenius_series(&graph_homology(&g));
        assert!(
            decategorification_holds(&g, &series),
            "Frob(1,1) ≠ X_G for n={} m={}",
            g.n(),
            g.m()
        );
    }
    let g = k5_minus_edge();
    let series = frobenius_series(&graph_homology(&g));
    assert!(decategorification_holds(&g, &series), "K_5 minus an edge");
    println!(
        "criterion 2 (Frob(1,1) = X_G on all connected n ≤ 4 and K5-e): PASS ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_3_differential_and_grading() {
    let start = Instant::now();
    // build_complex asserts d² = 0; the grading bound is re-checked here
    for g in simple_corpus().into_iter().chain(multigraph_corpus()) {
        assert!(g.n() <= 5 && g.m() <= 7);
        let c = build_complex(&g);
        for i in 0..c.dims.len() {
            for j in 0..c.jcap() {
                assert!(j <= i || c.dims[i][j] == 0, "dim C_{{{i},{j}}} ≠ 0");
            }
        }
    }
    println!(
        "criterion 3 (d² = 0 and j > i vanishing on the corpus): PASS ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_4_loop_and_parallel_laws() {
    let start = Instant::now();
    for g in connected_up_to_four().into_iter().chain([bull()]) {
        // adding a loop kills homology
        let mut edges = g.edges_1indexed();
        edges.push((1, 1));
        let looped = Multigraph::new(g.n(), &edges);
        let (_, vanished) = simplify_graph(&looped);
        assert!(vanished);
        assert!(graph_homology(&looped).is_zero(), "loop on n={}", g.n());

        // doubling any single edge leaves the table unchanged
        let base = graph_homology(&g).table();
        for e in 0..g.m() {
            let mut edges = g.edges_1indexed();
            edges.push(edges[e]);
            let doubled = Multigraph::new(g.n(), &edges);
            assert_eq!(
                graph_homology(&doubled).table(),
                base,
                "doubling edge {e} of n={} m={}",
                g.n(),
                g.m()
            );
        }
    }
    println!(
        "criterion 4 (loop vanishing and parallel-edge collapse): PASS ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_5_kunneth() {
    let start = Instant::now();
    let k2 = Multigraph::complete(2);
    let k3 = Multigraph::complete(3);
    let point = Multigraph::edgeless(1);
    assert!(disjoint_union_check(&k2, &k2), "K2 + K2");
    assert!(disjoint_union_check(&k2, &Multigraph::edgeless(2)), "K2 + edgeless2");
    assert!(disjoint_union_check(&k3, &point), "K3 + point");

    // G + • via the adding-a-box branching, against direct computation
    for g in [k2.clone(), k3.clone()] {
        let h = graph_homology(&g);
        let mut branched: BTreeMap<(usize, usize, Partition), u64> = BTreeMap::new();
        for ((i, j), e) in &h.entries {
            for (l, m) in &e.mults {
                for (mu, c) in lr_product(l, &pt(&[1])).iter() {
                    let c = u64::try_from(c.to_integer()).unwrap();
                    *branched.entry((*i, *j, mu.clone())).or_insert(0) += m * c;
                }
            }
        }
        let direct = graph_homology(&g.disjoint_union(&point)).table();
        assert_eq!(branched, direct, "branching for n={}", g.n());
    }
    // the K_2 + • table, spelled out
    let direct = graph_homology(&k2.disjoint_union(&point)).table();
    assert_eq!(
        direct,
        series_table(&[
            (0, 0, &[2, 1], 1),
            (0, 0, &[1, 1, 1], 1),
            (1, 1, &[2, 1], 1),
            (1, 1, &[1, 1, 1], 1),
        ])
    );
    println!("criterion 5 (Künneth and branching): PASS ({:.2?})", start.elapsed());
}

#[test]
fn criterion_6_triangle_recurrence() {
    let start = Instant::now();
    let k3 = Multigraph::complete(3);
    assert!(triangle_recurrence_check(&k3, (0, 1, 2)));

    let k4 = Multigraph::complete(4);
    let t = find_triangle(&k4).unwrap();
    assert!(triangle_recurrence_check(&k4, t));

    let paw = paw();
    let t_paw = find_triangle(&paw).unwrap();
    assert!(triangle_recurrence_check(&paw, t_paw));

    assert!(subcomplex_union_check(&k3, 0, 1));
    assert!(subcomplex_union_check(&k4, t.0, t.1));

    // remaining triangle-bearing corpus graphs
    for g in [diamond(), bull(), butterfly()] {
        let t = find_triangle(&g).unwrap();
        assert!(triangle_recurrence_check(&g, t), "n={} m={}", g.n(), g.m());
    }
    println!(
        "criterion 6 (triangle recurrence and subcomplex comparison): PASS ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_7_property_suite() {
    let start = Instant::now();
    // nonnegative integer multiplicities, weighted sums equal dimensions
    for g in simple_corpus() {
        let h = graph_homology(&g);
        for ((i, j), e) in &h.entries {
            let weighted: u64 = e.mults.iter().map(|(l, m)| m * specht_dim(l)).sum();
            assert_eq!(weighted, e.dim as u64, "H_{{{i},{j}}} of n={}", g.n());
        }
    }
    // edge-relabeling invariance, three shuffles each
    for (g, seed) in [
        (Multigraph::complete(3), 11),
        (Multigraph::path(4), 22),
        (Multigraph::star(4), 33),
    ] {
        assert!(relabeling_invariance_check(&g, 3, seed));
    }
    // Euler characteristic (chain vs homology level) and decategorification
    // across the full corpus, multigraphs included
    for g in simple_corpus().into_iter().chain(multigraph_corpus()) {
        let series = frobenius_series(&graph_homology(&g));
        assert!(euler_check_with(&g, &series), "euler for n={} m={}", g.n(), g.m());
        assert_eq!(
            homology_euler_characteristic(&series),
            chain_euler_characteristic(&g)
        );
        assert!(
            decategorification_holds(&g, &series),
            "Frob(1,1) ≠ X_G for n={} m={}",
            g.n(),
            g.m()
        );
    }
    println!(
        "criterion 7 (multiplicity integrality, relabeling, Euler): PASS ({:.2?})",
        start.elapsed()
    );
}

#[test]
fn criterion_8_coloring_oracle() {
    let start = Instant::now();
    for g in simple_corpus()
        .into_iter()
        .chain(multigraph_corpus())
        .filter(|g| g.n() <= 4)
    {
        let via_states = s_to_m(&p_to_s(&g.chromatic_sym_states()));
        assert_eq!(
            via_states,
            g.chromatic_sym_colorings(),
            "basis change vs coloring oracle for n={} m={}",
            g.n(),
            g.m()
        );
    }
    println!(
        "criterion 8 (states formula matches coloring oracle): PASS ({:.2?})",
        start.elapsed()
    );
}

/// Not a numbered criterion: the series type multiplies the way disjoint
/// unions compose, pinned here because criterion 5 relies on it.
#[test]
fn series_product_matches_square_of_k2() {
    let k2 = frobenius_series(&graph_homology(&Multigraph::complete(2)));
    let prod = k2.product(&k2);
    let mut expected = BigradedSeries::zero(4);
    for (i, j, mult) in [(0usize, 0usize, 1u64), (1, 1, 2), (2, 2, 1)] {
        for l in [pt(&[2, 2]), pt(&[2, 1, 1]), pt(&[1, 1, 1, 1])] {
            expected.terms.insert((i, j, l), mult);
        }
    }
    assert_eq!(prod, expected);
}
