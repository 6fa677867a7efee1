//! Concrete realizations of the state modules and their per-edge maps.
//!
//! The module of a state with components `B_1, …, B_r` is the induction, from
//! the Young subgroup of the component partition, of a tensor product of
//! exterior algebras: block `B` of size `b` contributes the exterior algebra
//! of its standard representation, realized on the adapted basis
//! `e_v − e_{min B}` for `v ∈ B, v ≠ min B`. A module element is a linear
//! combination of `(coset representative, wedge monomial)` pairs; the
//! internal grading is the total wedge degree.
//!
//! Per-edge maps come in two flavors. When removing the edge does not change
//! components the two realizations are literally identical and the map is the
//! identity matrix. When a block `C` splits into `A ⊔ B`, the sum-zero space
//! of `C` decomposes as `V_A ⊕ V_B ⊕ ⟨u⟩` with `u = b·1_A − a·1_B` spanning
//! the trivial constituent; the local map kills every wedge monomial touching
//! `u` and the full map is the adjunction unit `v ↦ Σ_k g_k ⊗ proj(g_k⁻¹ v)`
//! over coset representatives of `S_A × S_B` in `S_C`, induced up through the
//! remaining blocks with coset composition re-canonicalized.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::graphstate::{HasseEdge, Multigraph, State};
use crate::linalg::ColMat;
use crate::perm::{canonicalize, coset_reps, Perm};
use crate::symfunc::{qint, Q};

/// Element of an exterior algebra on an indexed basis: bit mask → coefficient.
pub type WedgeElt = BTreeMap<u32, Q>;

/// `elt ∧ (Σ c_i w_i)`; inserting `w_i` into a sorted monomial costs the sign
/// of the number of factors above it.
fn wedge_mul_vector(elt: &WedgeElt, vector: &[(u32, Q)]) -> WedgeElt {
    let mut out = WedgeElt::new();
    for (&mask, c) in elt {
        for (i, vc) in vector {
            let bit = 1u32 << i;
            if mask & bit != 0 {
                continue;
            }
            let above = (mask >> (i + 1)).count_ones();
            let sign = if above % 2 == 0 { Q::one() } else { -Q::one() };
            let coeff = c * vc * sign;
            if coeff.is_zero() {
                continue;
            }
            let entry = out.entry(mask | bit).or_insert_with(Q::zero);
            *entry += coeff;
            if entry.is_zero() {
                out.remove(&(mask | bit));
            }
        }
    }
    out
}

/// Image of a monomial under a linear substitution of the basis vectors.
fn apply_linear(images: &[Vec<(u32, Q)>], mask: u32) -> WedgeElt {
    let mut acc = WedgeElt::new();
    acc.insert(0, Q::one());
    let mut i = 0u32;
    let mut rest = mask;
    while rest != 0 {
        if rest & 1 == 1 {
            acc = wedge_mul_vector(&acc, &images[i as usize]);
            if acc.is_empty() {
                return acc;
            }
        }
        rest >>= 1;
        i += 1;
    }
    acc
}

/// Substitution images of a block's adapted basis under a permutation
/// stabilizing the block (or any permutation of it, for the local split).
///
/// Basis index `i` is the vertex `block[i+1]`; `e_v − e_min` maps to
/// `w_{p(v)} − w_{p(min)}` with `w_min = 0` understood.
fn block_action_images(block: &[usize], p: &Perm) -> Vec<Vec<(u32, Q)>> {
    let min = block[0];
    let idx_of = |v: usize| -> Option<u32> {
        if v == min {
            None
        } else {
            let k = block.binary_search(&v).expect("vertex not in block");
            Some((k - 1) as u32)
        }
    };
    block[1..]
        .iter()
        .map(|&v| {
            let mut img = Vec::with_capacity(2);
            if let Some(k) = idx_of(p.apply(v)) {
                img.push((k, Q::one()));
            }
            if let Some(k) = idx_of(p.apply(min)) {
                img.push((k, -Q::one()));
            }
            img
        })
        .collect()
}

/// Explicit basis and bookkeeping for one state's graded module.
#[derive(Debug)]
pub struct ModuleRealization {
    pub state: State,
    /// Connected components, each sorted, ordered by minimum vertex.
    pub blocks: Vec<Vec<usize>>,
    /// Minimal coset representatives, lexicographic one-line order.
    pub coset_reps: Vec<Perm>,
    rep_index: HashMap<Vec<u32>, u32>,
    /// Wedge monomials: one mask per block, in graded-lex order.
    pub monomials: Vec<Vec<u32>>,
    mono_index: HashMap<Vec<u32>, u32>,
    pub mono_degree: Vec<usize>,
    pub dim: usize,
    /// Local basis indices of each internal degree, in basis order.
    pub locals_by_degree: Vec<Vec<u32>>,
    /// Position of each local index inside its degree list.
    pub pos_in_degree: Vec<u32>,
}

impl ModuleRealization {
    /// Basis index of `(coset, monomial)`; cosets are the outer factor.
    pub fn basis_index(&self, rep: usize, mono: usize) -> usize {
        rep * self.monomials.len() + mono
    }

    pub fn split_index(&self, local: usize) -> (usize, usize) {
        (local / self.monomials.len(), local % self.monomials.len())
    }

    pub fn degree_of(&self, local: usize) -> usize {
        self.mono_degree[local % self.monomials.len()]
    }

    pub fn rep_index_of(&self, p: &Perm) -> usize {
        self.rep_index[p.one_line()] as usize
    }

    pub fn mono_index_of(&self, tuple: &[u32]) -> usize {
        self.mono_index[tuple] as usize
    }

    /// Graded dimension in degree `j`.
    pub fn graded_dim(&self, j: usize) -> usize {
        self.locals_by_degree.get(j).map_or(0, |v| v.len())
    }

    pub fn max_degree(&self) -> usize {
        self.locals_by_degree.len().saturating_sub(1)
    }
}

/// Builds the realization of `M_F`.
pub fn module_of_state(g: &Multigraph, f: State) -> ModuleRealization {
    let n = g.n();
    let comp = g.components(f);
    let blocks = comp.blocks;
    let ground: Vec<usize> = (0..n).collect();
    let reps = coset_reps(n, &ground, &blocks);
    let rep_index: HashMap<Vec<u32>, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, r)| (r.one_line().to_vec(), i as u32))
        .collect();

    // per-block masks sorted by (degree, value), then tuples in graded-lex
    let per_block: Vec<Vec<u32>> = blocks
        .iter()
        .map(|b| {
            let dim = b.len() - 1;
            let mut masks: Vec<u32> = (0..(1u32 << dim)).collect();
            masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
            masks
        })
        .collect();
    let mut monomials: Vec<Vec<u32>> = vec![Vec::new()];
    for masks in &per_block {
        let mut next = Vec::with_capacity(monomials.len() * masks.len());
        for t in &monomials {
            for &m in masks {
                let mut t2 = t.clone();
                t2.push(m);
                next.push(t2);
            }
        }
        monomials = next;
    }
    monomials.sort_by_key(|t| {
        (
            t.iter().map(|m| m.count_ones()).sum::<u32>(),
            t.clone(),
        )
    });
    let mono_degree: Vec<usize> = monomials
        .iter()
        .map(|t| t.iter().map(|m| m.count_ones() as usize).sum())
        .collect();
    let mono_index: HashMap<Vec<u32>, u32> = monomials
        .iter()
        .enumerate()
        .map(|(i, t)| (t.clone(), i as u32))
        .collect();

    let dim = reps.len() * monomials.len();
    // dim = (n!/∏ b_k!) · ∏ 2^{b_k - 1}
    let expected: u128 = {
        let fact = |k: usize| -> u128 { (1..=k as u128).product() };
        let mut d = fact(n);
        for b in &blocks {
            d /= fact(b.len());
            d *= 1u128 << (b.len() - 1);
        }
        d
    };
    assert_eq!(dim as u128, expected, "dimension formula");

    let max_deg = n - blocks.len();
    let mut locals_by_degree: Vec<Vec<u32>> = vec![Vec::new(); max_deg + 1];
    let mut pos_in_degree = vec![0u32; dim];
    for local in 0..dim {
        let j = mono_degree[local % monomials.len()];
        pos_in_degree[local] = locals_by_degree[j].len() as u32;
        locals_by_degree[j].push(local as u32);
    }

    ModuleRealization {
        state: f,
        blocks,
        coset_reps: reps,
        rep_index,
        monomials,
        mono_index,
        mono_degree,
        dim,
        locals_by_degree,
        pos_in_degree,
    }
}

/// Applies a block-stabilizing permutation to a monomial tuple, expanding
/// block by block.
fn apply_young_to_tuple(
    images_per_block: &[Vec<Vec<(u32, Q)>>],
    tuple: &[u32],
    coeff: &Q,
) -> Vec<(Vec<u32>, Q)> {
    let mut acc: Vec<(Vec<u32>, Q)> = vec![(Vec::with_capacity(tuple.len()), coeff.clone())];
    for (k, &mask) in tuple.iter().enumerate() {
        let expanded = apply_linear(&images_per_block[k], mask);
        if expanded.is_empty() {
            return Vec::new();
        }
        let mut next = Vec::with_capacity(acc.len() * expanded.len());
        for (prefix, c) in &acc {
            for (m, mc) in &expanded {
                let mut t = prefix.clone();
                t.push(*m);
                next.push((t, c * mc));
            }
        }
        acc = next;
    }
    acc
}

/// Exact permutation-action matrix on a realization:
/// `p · (σ ⊗ w) = τ ⊗ (h · w)` with `p∘σ = τ∘h`, `h` in the Young subgroup.
pub fn act(p: &Perm, real: &ModuleRealization) -> ColMat {
    let mut out = ColMat::zero(real.dim, real.dim);
    for (ri, sigma) in real.coset_reps.iter().enumerate() {
        let (tau, h) = canonicalize(&p.compose(sigma), &real.blocks);
        let ti = real.rep_index_of(&tau);
        let images: Vec<Vec<Vec<(u32, Q)>>> = real
            .blocks
            .iter()
            .map(|b| block_action_images(b, &h))
            .collect();
        for (mi, tuple) in real.monomials.iter().enumerate() {
            let entries: Vec<(u32, Q)> = apply_young_to_tuple(&images, tuple, &Q::one())
                .into_iter()
                .map(|(t, c)| (real.basis_index(ti, real.mono_index_of(&t)) as u32, c))
                .collect();
            out.set_col(real.basis_index(ri, mi), entries);
        }
    }
    out
}

/// Signed-entry form of an action matrix, for cheap trace work. Permutation
/// actions on wedge bases only ever produce entries `±1`.
pub struct SignMat {
    pub dim: usize,
    pub rows: Vec<Vec<(u32, i8)>>,
}

pub fn act_signs(p: &Perm, real: &ModuleRealization) -> SignMat {
    let m = act(p, real);
    let mut rows: Vec<Vec<(u32, i8)>> = vec![Vec::new(); real.dim];
    for c in 0..m.ncols() {
        for (r, v) in m.col(c) {
            let s = if *v == Q::one() {
                1
            } else if *v == -Q::one() {
                -1
            } else {
                panic!("permutation action entry {v} is not ±1")
            };
            rows[*r as usize].push((c as u32, s));
        }
    }
    SignMat { dim: real.dim, rows }
}

impl SignMat {
    pub fn get(&self, r: usize, c: u32) -> i8 {
        self.rows[r]
            .binary_search_by_key(&c, |e| e.0)
            .map(|k| self.rows[r][k].1)
            .unwrap_or(0)
    }

    /// Trace over a set of local indices (a degree slice).
    pub fn trace_over(&self, locals: &[u32]) -> i64 {
        locals.iter().map(|&l| self.get(l as usize, l) as i64).sum()
    }
}

/// Module map between adjacent states, with its realizations.
pub struct EquivariantMap {
    pub source: Arc<ModuleRealization>,
    pub target: Arc<ModuleRealization>,
    pub matrix: ColMat,
    pub degree_preserving: bool,
}

/// Identity map for an edge removal that does not change components.
pub fn case1_map(
    source: Arc<ModuleRealization>,
    target: Arc<ModuleRealization>,
) -> EquivariantMap {
    assert_eq!(
        source.blocks, target.blocks,
        "case-1 map requires identical components"
    );
    let matrix = ColMat::identity(source.dim);
    EquivariantMap {
        source,
        target,
        matrix,
        degree_preserving: true,
    }
}

/// Local data for one block split `C → A ⊔ B`: the expansion of each
/// `C`-adapted wedge monomial in the `(V_A, V_B, u)` basis with `u`-monomials
/// killed.
struct SplitLocal {
    c_block: Vec<usize>,
    /// images of the C-adapted vectors in the target list [A.., B.., u]
    tinv_cols: Vec<Vec<(u32, Q)>>,
    a_len: usize,
    b_len: usize,
}

impl SplitLocal {
    fn new(c_block: &[usize], a_block: &[usize], b_block: &[usize]) -> Self {
        let cdim = c_block.len() - 1;
        let coord = |v: usize| -> Option<usize> {
            if v == c_block[0] {
                None
            } else {
                Some(c_block.binary_search(&v).unwrap() - 1)
            }
        };
        // columns of T: the target list vectors in C-adapted coordinates
        let mut t: Vec<Vec<Q>> = Vec::with_capacity(cdim);
        let mut push_adapted = |block: &[usize]| {
            for &v in &block[1..] {
                let mut col = vec![Q::zero(); cdim];
                if let Some(k) = coord(v) {
                    col[k] = Q::one();
                }
                if let Some(k) = coord(block[0]) {
                    col[k] = -Q::one();
                }
                t.push(col);
            }
        };
        push_adapted(a_block);
        push_adapted(b_block);
        let (a, b) = (a_block.len() as i64, b_block.len() as i64);
        let mut u = vec![Q::zero(); cdim];
        for &v in a_block {
            if let Some(k) = coord(v) {
                u[k] = qint(b);
            }
        }
        for &v in b_block {
            if let Some(k) = coord(v) {
                u[k] = qint(-a);
            }
        }
        t.push(u);
        assert_eq!(t.len(), cdim);

        let tinv = invert_dense(&t);
        // column i of T⁻¹ = expansion of the i-th C-adapted vector
        let tinv_cols: Vec<Vec<(u32, Q)>> = (0..cdim)
            .map(|i| {
                (0..cdim)
                    .filter_map(|k| {
                        let v = tinv[i][k].clone();
                        (!v.is_zero()).then_some((k as u32, v))
                    })
                    .collect()
            })
            .collect();
        SplitLocal {
            c_block: c_block.to_vec(),
            tinv_cols,
            a_len: a_block.len() - 1,
            b_len: b_block.len() - 1,
        }
    }

    /// Expands a C-mask and keeps the `u`-free part as `(maskA, maskB)` pairs.
    fn project(&self, mask: u32) -> Vec<(u32, u32, Q)> {
        let expanded = apply_linear(&self.tinv_cols, mask);
        let u_bit = 1u32 << (self.a_len + self.b_len);
        expanded
            .into_iter()
            .filter(|(m, _)| m & u_bit == 0)
            .map(|(m, c)| {
                let mask_a = m & ((1u32 << self.a_len) - 1);
                let mask_b = m >> self.a_len;
                (mask_a, mask_b, c)
            })
            .collect()
    }
}

/// Dense inverse over the rationals; columns of the input are the matrix
/// columns. Panics if singular (the adapted bases always are invertible).
fn invert_dense(cols: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let n = cols.len();
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).collect())
        .collect();
    let mut inv: Vec<Vec<Q>> = (0..n)
        .map(|r| (0..n).map(|c| if r == c { Q::one() } else { Q::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("singular basis matrix");
        a.swap(c, p);
        inv.swap(c, p);
        let pv = a[c][c].clone();
        for k in 0..n {
            a[c][k] /= &pv;
            inv[c][k] /= &pv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for k in 0..n {
                    let d = &f * &a[c][k];
                    a[r][k] -= d;
                    let d = &f * &inv[c][k];
                    inv[r][k] -= d;
                }
            }
        }
    }
    // return columns of the inverse
    (0..n)
        .map(|c| (0..n).map(|r| inv[r][c].clone()).collect())
        .collect()
}

/// Map for an edge removal that splits one block into two: the adjunction
/// unit over cosets of `S_A × S_B` in `S_C`, induced through the remaining
/// blocks.
pub fn split_map(
    g: &Multigraph,
    source: Arc<ModuleRealization>,
    target: Arc<ModuleRealization>,
    edge: usize,
) -> EquivariantMap {
    let n = g.n();
    let (eu, _ev) = g.edge(edge);
    // the source block that splits is the one containing the edge
    let s_idx = source
        .blocks
        .iter()
        .position(|b| b.contains(&eu))
        .expect("edge endpoint not in any block");
    let c_block = source.blocks[s_idx].clone();
    // target blocks partitioning C, in target tuple positions
    let split_parts: Vec<usize> = target
        .blocks
        .iter()
        .enumerate()
        .filter(|(_, b)| c_block.contains(&b[0]))
        .map(|(i, _)| i)
        .collect();
    assert_eq!(split_parts.len(), 2, "split map requires the block to split in two");
    let (a_idx, b_idx) = (split_parts[0], split_parts[1]);
    let a_block = target.blocks[a_idx].clone();
    let b_block = target.blocks[b_idx].clone();
    assert_eq!(a_block.len() + b_block.len(), c_block.len());

    // source block k (≠ s_idx) keeps its monomial at the target position of
    // the same block
    let carry: Vec<(usize, usize)> = source
        .blocks
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != s_idx)
        .map(|(k, b)| {
            let t = target
                .blocks
                .iter()
                .position(|tb| tb == b)
                .expect("unsplit block must survive");
            (k, t)
        })
        .collect();

    let local = SplitLocal::new(&c_block, &a_block, &b_block);
    let mut proj_cache: HashMap<u32, Vec<(u32, u32, Q)>> = HashMap::new();

    let cosets = coset_reps(n, &c_block, &[a_block.clone(), b_block.clone()]);
    let mut cols: Vec<Vec<(u32, Q)>> = vec![Vec::new(); source.dim];

    for (ri, sigma) in source.coset_reps.iter().enumerate() {
        for gk in &cosets {
            let (tau, h) = canonicalize(&sigma.compose(gk), &target.blocks);
            let ti = target.rep_index_of(&tau);
            let h_images: Vec<Vec<Vec<(u32, Q)>>> = target
                .blocks
                .iter()
                .map(|b| block_action_images(b, &h))
                .collect();
            let g_inv_images = block_action_images(&local.c_block, &gk.inverse());

            for (mi, tuple) in source.monomials.iter().enumerate() {
                let moved = apply_linear(&g_inv_images, tuple[s_idx]);
                if moved.is_empty() {
                    continue;
                }
                let col = &mut cols[source.basis_index(ri, mi)];
                for (cmask, c1) in &moved {
                    let parts = proj_cache
                        .entry(*cmask)
                        .or_insert_with(|| local.project(*cmask));
                    for (mask_a, mask_b, c2) in parts.iter() {
                        let mut t_tuple = vec![0u32; target.blocks.len()];
                        for &(k, t) in &carry {
                            t_tuple[t] = tuple[k];
                        }
                        t_tuple[a_idx] = *mask_a;
                        t_tuple[b_idx] = *mask_b;
                        // A tuple orients its wedge factors in block order.
                        // The expansion produces (A-part)∧(B-part) adjacent at
                        // C's slot; moving the B-part to its own slot crosses
                        // every factor sitting strictly between.
                        let between: u32 = t_tuple[a_idx + 1..b_idx]
                            .iter()
                            .map(|m| m.count_ones())
                            .sum();
                        let coeff = if (mask_b.count_ones() * between) % 2 == 1 {
                            -(c1 * c2)
                        } else {
                            c1 * c2
                        };
                        for (final_tuple, c3) in
                            apply_young_to_tuple(&h_images, &t_tuple, &coeff)
                        {
                            let row =
                                target.basis_index(ti, target.mono_index_of(&final_tuple));
                            col.push((row as u32, c3));
                        }
                    }
                }
            }
        }
    }

    let mut matrix = ColMat::zero(target.dim, source.dim);
    for (c, entries) in cols.into_iter().enumerate() {
        matrix.set_col(c, entries);
    }
    let mut map = EquivariantMap {
        source,
        target,
        matrix,
        degree_preserving: false,
    };
    map.degree_preserving = is_degree_preserving(&map);
    debug_assert!(map.degree_preserving);
    map
}

/// Signed per-edge map for a Hasse edge: `(-1)^k` times the identity or the
/// split map, as the components dictate.
pub fn per_edge_map(
    g: &Multigraph,
    h: &HasseEdge,
    source: Arc<ModuleRealization>,
    target: Arc<ModuleRealization>,
) -> EquivariantMap {
    let mut map = if source.blocks == target.blocks {
        case1_map(source, target)
    } else {
        split_map(g, source, target, h.star_position)
    };
    if h.sign < 0 {
        map.matrix = map.matrix.scaled(&qint(-1));
    }
    map
}

/// Checks that a matrix maps degree-`j` source vectors into the degree-`j`
/// span of the target.
pub fn is_degree_preserving(map: &EquivariantMap) -> bool {
    (0..map.source.dim).all(|c| {
        let j = map.source.degree_of(c);
        map.matrix
            .col(c)
            .iter()
            .all(|(r, _)| map.target.degree_of(*r as usize) == j)
    })
}
