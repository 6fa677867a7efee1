//! Permutations of `{0..n-1}` and Young-subgroup coset machinery.
//!
//! For an ordered set partition of the ground set into blocks, the Young
//! subgroup is the set of permutations stabilizing each block. Every left
//! coset has a unique minimal-length representative: the permutation that is
//! increasing on each block. Factoring an arbitrary permutation as
//! `p = rep ∘ h` with `h` in the Young subgroup is what makes induced-module
//! actions computable.

use std::fmt;

use crate::partition::Partition;

/// Permutation in one-line notation: `perm.apply(i)` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// Builds from one-line images; panics unless a bijection.
    pub fn from_images(images: Vec<u32>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            assert!((v as usize) < n && !seen[v as usize], "not a permutation");
            seen[v as usize] = true;
        }
        Perm(images)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn one_line(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm(other.0.iter().map(|&v| self.0[v as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm(inv)
    }

    /// Adjacent transposition `(i, i+1)`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Perm {
        assert!(i + 1 < n);
        let mut images: Vec<u32> = (0..n as u32).collect();
        images.swap(i, i + 1);
        Perm(images)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.apply(cur);
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    /// Canonical representative of a cycle type: cycles on consecutive
    /// integers, largest cycle first.
    pub fn canonical_of_type(mu: &Partition) -> Perm {
        let n = mu.size();
        let mut images = vec![0u32; n];
        let mut base = 0;
        for &len in mu.parts() {
            for k in 0..len {
                images[base + k] = (base + (k + 1) % len) as u32;
            }
            base += len;
        }
        Perm(images)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

/// The unique coset representative with the same block images as `p` that is
/// increasing on each block, together with `h` such that `p = rep ∘ h`.
///
/// `h` stabilizes every block.
pub fn canonicalize(p: &Perm, blocks: &[Vec<usize>]) -> (Perm, Perm) {
    let n = p.n();
    let mut rep = vec![u32::MAX; n];
    for block in blocks {
        // block is sorted ascending; rep sends it order-preservingly onto its image set
        let mut image: Vec<u32> = block.iter().map(|&v| p.0[v]).collect();
        image.sort_unstable();
        for (v, img) in block.iter().zip(image) {
            rep[*v] = img;
        }
    }
    let rep = Perm::from_images(rep);
    let h = rep.inverse().compose(p);
    (rep, h)
}

/// Minimal-length left-coset representatives of the Young subgroup of
/// `blocks` inside the symmetric group on `ground`, as permutations of
/// `{0..n-1}` fixing everything outside `ground`. Sorted lexicographically by
/// one-line notation.
///
/// `blocks` must partition `ground`; each block and `ground` sorted ascending.
pub fn coset_reps(n: usize, ground: &[usize], blocks: &[Vec<usize>]) -> Vec<Perm> {
    debug_assert_eq!(ground.len(), blocks.iter().map(|b| b.len()).sum::<usize>());
    let mut reps = Vec::new();
    let mut images = vec![u32::MAX; n];
    for (i, img) in images.iter_mut().enumerate() {
        if !ground.contains(&i) {
            *img = i as u32;
        }
    }
    fn rec(
        blocks: &[Vec<usize>],
        k: usize,
        available: &mut Vec<usize>,
        images: &mut Vec<u32>,
        reps: &mut Vec<Perm>,
    ) {
        if k == blocks.len() {
            reps.push(Perm::from_images(images.clone()));
            return;
        }
        let b = blocks[k].len();
        // choose the sorted image set of block k among remaining ground elements
        let avail = available.clone();
        for combo in combinations(&avail, b) {
            for (v, img) in blocks[k].iter().zip(&combo) {
                images[*v] = *img as u32;
            }
            available.retain(|x| !combo.contains(x));
            rec(blocks, k + 1, available, images, reps);
            *available = avail.clone();
        }
    }
    let mut available = ground.to_vec();
    rec(blocks, 0, &mut available, &mut images, &mut reps);
    reps.sort_unstable();
    reps
}

/// All `k`-element subsets of `items` (which is sorted), each sorted.
fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(items: &[usize], start: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        let need = k - current.len();
        for i in start..=items.len().saturating_sub(need) {
            current.push(items[i]);
            rec(items, i + 1, k, current, out);
            current.pop();
        }
    }
    if k <= items.len() {
        rec(items, 0, k, &mut current, &mut out);
    }
    out
}
