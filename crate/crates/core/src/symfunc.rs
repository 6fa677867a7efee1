//! Symmetric-group characters and the symmetric-function calculus.
//!
//! Three bases of the ring of symmetric functions appear: power sums `p`,
//! Schur functions `s`, and monomial symmetric functions `m`. The bridge
//! between representation theory and symmetric functions is the Frobenius
//! characteristic, which sends the irreducible (Specht) module `S^λ` to
//! `s_λ`; under it the induction product of modules becomes the ordinary
//! product, computed by the Littlewood-Richardson rule.
//!
//! Character values `χ^λ(μ)` come from the Murnaghan-Nakayama border-strip
//! recursion, Schur-to-monomial expansion from direct semistandard-tableau
//! enumeration (Kostka numbers), and character decomposition from the
//! orthogonality relations weighted by `z_μ`.
//!
//! All coefficients are exact arbitrary-precision rationals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::partition::{partitions_of, Partition};

/// Exact rational scalar used throughout the crate.
pub type Q = num_rational::BigRational;

pub fn qint(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn quint(v: u64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// `z_λ = ∏ i^{m_i(λ)} m_i(λ)!`, the centralizer order of cycle type `λ`.
pub fn z_of(lambda: &Partition) -> u64 {
    let mut z: u64 = 1;
    let mut run = 0u64;
    let mut prev = 0usize;
    for &p in lambda.parts() {
        if p == prev {
            run += 1;
        } else {
            prev = p;
            run = 1;
        }
        // multiply incrementally: i^{m_i} m_i! = ∏ over the run of (i * k)
        z = z
            .checked_mul(p as u64)
            .and_then(|z| z.checked_mul(run))
            .expect("z_λ overflow");
    }
    z
}

fn char_memo() -> &'static Mutex<HashMap<(Partition, Partition), i64>> {
    static MEMO: OnceLock<Mutex<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Irreducible character `χ^λ(μ)` by the Murnaghan-Nakayama rule.
///
/// Border strips are removed via beta-numbers: with `B = {λ_i + L - i}`,
/// removing a strip of size `k` replaces some `b ∈ B` by `b - k ∉ B`, and the
/// strip height is the number of elements of `B` strictly between them.
/// Memoized on `(λ, μ)`; for `μ = (1^n)` this returns `f^λ = dim S^λ`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> i64 {
    assert_eq!(
        lambda.size(),
        mu.size(),
        "character of {lambda} at cycle type {mu}: size mismatch"
    );
    if lambda.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = char_memo().lock().unwrap().get(&key) {
        return v;
    }

    let k = mu.parts()[0];
    let mu_rest = Partition::new(mu.parts()[1..].to_vec());
    let len = lambda.len();
    let betas: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();

    let mut value: i64 = 0;
    for (i, &b) in betas.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if betas.contains(&target) {
            continue;
        }
        let height = betas.iter().filter(|&&c| target < c && c < b).count();
        let sign = if height % 2 == 0 { 1 } else { -1 };

        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let new_parts: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &nb)| nb + 1 + j - len)
            .filter(|&p| p > 0)
            .collect();
        value += sign * mn_character(&Partition::new(new_parts), &mu_rest);
    }

    char_memo().lock().unwrap().insert(key, value);
    value
}

/// `f^λ = χ^λ(1^n)`, the number of standard Young tableaux of shape `λ`.
pub fn specht_dim(lambda: &Partition) -> u64 {
    let d = mn_character(lambda, &Partition::column(lambda.size()));
    assert!(d > 0);
    d as u64
}

/// Basis tag of a [`SymExpr`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Basis {
    PowerSum,
    Schur,
    Monomial,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::PowerSum => 'p',
            Basis::Schur => 's',
            Basis::Monomial => 'm',
        }
    }
}

/// Formal linear combination of basis elements with exact rational
/// coefficients. Zero coefficients are never stored; two expressions in the
/// same basis are equal iff their coefficient maps are equal.
///
/// Mixed degrees are allowed (each index partition carries its own size).
#[derive(Clone, PartialEq, Eq)]
pub struct SymExpr {
    basis: Basis,
    coeffs: BTreeMap<Partition, Q>,
}

impl SymExpr {
    pub fn zero(basis: Basis) -> Self {
        SymExpr {
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn term(basis: Basis, lambda: Partition, c: Q) -> Self {
        let mut e = SymExpr::zero(basis);
        e.add_term(lambda, c);
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Q)> {
        self.coeffs.iter()
    }

    /// Terms sorted by partition in reverse lexicographic order.
    pub fn terms_revlex(&self) -> Vec<(&Partition, &Q)> {
        self.coeffs.iter().rev().collect()
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SymExpr) -> SymExpr {
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        let mut out = self.clone();
        for (l, c) in other.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymExpr) -> SymExpr {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> SymExpr {
        if c.is_zero() {
            return SymExpr::zero(self.basis);
        }
        SymExpr {
            basis: self.basis,
            coeffs: self
                .coeffs
                .iter()
                .map(|(l, v)| (l.clone(), v * c))
                .collect(),
        }
    }

    /// True iff all coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl fmt::Display for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        for (k, (lambda, c)) in self.terms_revlex().into_iter().enumerate() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if k == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if !mag.is_one() {
                write!(f, "{mag}·")?;
            }
            write!(f, "{letter}[")?;
            for (j, p) in lambda.parts().iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct TermDoc {
    partition: Vec<usize>,
    num: i64,
    den: i64,
}

impl Serialize for SymExpr {
    /// `{"basis": "s", "terms": [{"partition": [2,1], "num": 1, "den": 1}, …]}`
    /// with terms sorted by partition in reverse lexicographic order.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SymExpr", 2)?;
        st.serialize_field("basis", &self.basis.letter().to_string())?;
        struct Terms<'a>(&'a SymExpr);
        impl Serialize for Terms<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.coeffs.len()))?;
                for (l, c) in self.0.terms_revlex() {
                    seq.serialize_element(&TermDoc {
                        partition: l.parts().to_vec(),
                        num: i64::try_from(c.numer()).expect("coefficient numerator out of i64"),
                        den: i64::try_from(c.denom()).expect("coefficient denominator out of i64"),
                    })?;
                }
                seq.end()
            }
        }
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

/// Class function on `S_n`: one exact rational value per cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterVector {
    pub n: usize,
    pub values: BTreeMap<Partition, Q>,
}

impl CharacterVector {
    /// Builds from a value per cycle type; must cover every partition of `n`.
    pub fn new(n: usize, values: BTreeMap<Partition, Q>) -> Self {
        for mu in partitions_of(n) {
            assert!(values.contains_key(&mu), "missing cycle type {mu}");
        }
        CharacterVector { n, values }
    }

    pub fn value(&self, mu: &Partition) -> &Q {
        &self.values[mu]
    }

    /// Character of the irreducible `S^λ`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let n = lambda.size();
        let values = partitions_of(n)
            .into_iter()
            .map(|mu| {
                let v = qint(mn_character(lambda, &mu));
                (mu, v)
            })
            .collect();
        CharacterVector { n, values }
    }
}

/// Expands a power-sum expression in the Schur basis via `p_μ = Σ_λ χ^λ(μ) s_λ`.
pub fn p_to_s(e: &SymExpr) -> SymExpr {
    assert_eq!(e.basis(), Basis::PowerSum);
    let mut out = SymExpr::zero(Basis::Schur);
    for (mu, c) in e.iter() {
        for lambda in partitions_of(mu.size()) {
            out.add_term(lambda.clone(), c * qint(mn_character(&lambda, mu)));
        }
    }
    out
}

/// Expands a Schur expression in power sums via `s_λ = Σ_μ χ^λ(μ) z_μ^{-1} p_μ`.
pub fn s_to_p(e: &SymExpr) -> SymExpr {
    assert_eq!(e.basis(), Basis::Schur);
    let mut out = SymExpr::zero(Basis::PowerSum);
    for (lambda, c) in e.iter() {
        for mu in partitions_of(lambda.size()) {
            let z = quint(z_of(&mu));
            out.add_term(mu.clone(), c * qint(mn_character(lambda, &mu)) / z);
        }
    }
    out
}

/// Kostka number `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`,
/// counted by direct enumeration.
pub fn kostka(shape: &Partition, content: &Partition) -> u64 {
    if shape.size() != content.size() {
        return 0;
    }
    if shape.is_empty() {
        return 1;
    }
    // Fill cells row-major; rows weakly increase, columns strictly increase.
    let rows = shape.len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; shape.part(r)]).collect();
    let mut remaining: Vec<usize> = content.parts().to_vec();
    fn rec(
        shape: &Partition,
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        r: usize,
        c: usize,
    ) -> u64 {
        if r == shape.len() {
            return 1;
        }
        let (nr, nc) = if c + 1 < shape.part(r) {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(grid[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(grid[r - 1][c] + 1);
            }
            lo
        };
        let mut count = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            count += rec(shape, grid, remaining, nr, nc);
            remaining[v - 1] += 1;
        }
        count
    }
    rec(shape, &mut grid, &mut remaining, 0, 0)
}

/// Converts a Schur expression to the monomial basis; the transition
/// coefficients are the Kostka numbers.
pub fn s_to_m(e: &SymExpr) -> SymExpr {
    assert_eq!(e.basis(), Basis::Schur);
    let mut out = SymExpr::zero(Basis::Monomial);
    for (lambda, c) in e.iter() {
        for mu in partitions_of(lambda.size()) {
            let k = kostka(lambda, &mu);
            if k > 0 {
                out.add_term(mu.clone(), c * qint(k as i64));
            }
        }
    }
    out
}

/// Littlewood-Richardson coefficient `c^ν_{λμ}`: fillings of `ν/λ` with
/// content `μ`, rows weakly increasing, columns strictly increasing, whose
/// reverse reading word (rows top to bottom, each right to left) is a
/// lattice word.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    if mu.is_empty() {
        return 1;
    }
    // Cells of ν/λ in reverse reading order.
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r)..nu.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let rows = nu.len();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; nu.part(r)]).collect();
    let mut counts = vec![0usize; mu.len()];
    fn rec(
        cells: &[(usize, usize)],
        k: usize,
        lambda: &Partition,
        mu: &Partition,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut total = 0;
        for v in 1..=mu.len() {
            if counts[v - 1] >= mu.part(v - 1) {
                continue;
            }
            // lattice word: after placing v, #v must not exceed #(v-1)
            if v > 1 && counts[v - 1] + 1 > counts[v - 2] {
                continue;
            }
            // weakly increasing along the row (right neighbor already placed)
            if c + 1 < grid[r].len() && grid[r][c + 1] != 0 && v > grid[r][c + 1] {
                continue;
            }
            // strictly increasing down the column
            if r > 0 && c < grid[r - 1].len() && c >= lambda.part(r - 1) {
                // the cell above is a filled skew cell, not part of λ
                let above = grid[r - 1][c];
                if above == 0 || v <= above {
                    continue;
                }
            }
            grid[r][c] = v;
            counts[v - 1] += 1;
            total += rec(cells, k + 1, lambda, mu, grid, counts);
            counts[v - 1] -= 1;
            grid[r][c] = 0;
        }
        total
    }
    rec(&cells, 0, lambda, mu, &mut grid, &mut counts)
}

/// Schur expansion of `s_λ · s_μ` by the Littlewood-Richardson rule.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> SymExpr {
    let n = lambda.size() + mu.size();
    let mut out = SymExpr::zero(Basis::Schur);
    for nu in partitions_of(n) {
        let c = lr_coefficient(&nu, lambda, mu);
        if c > 0 {
            out.add_term(nu, qint(c as i64));
        }
    }
    out
}

/// Bilinear extension of [`lr_product`]; models the product of the
/// Grothendieck ring of symmetric-group representations.
pub fn induction_product(a: &SymExpr, b: &SymExpr) -> SymExpr {
    assert_eq!(a.basis(), Basis::Schur);
    assert_eq!(b.basis(), Basis::Schur);
    let mut out = SymExpr::zero(Basis::Schur);
    for (la, ca) in a.iter() {
        for (lb, cb) in b.iter() {
            let prod = lr_product(la, lb);
            for (nu, c) in prod.iter() {
                out.add_term(nu.clone(), ca * cb * c);
            }
        }
    }
    out
}

/// Decomposes a virtual character into Schur multiplicities by orthogonality:
/// `m_λ = Σ_μ χ(μ) χ^λ(μ) / z_μ`.
///
/// Panics on a non-integer multiplicity, which signals a corrupted character.
pub fn character_to_schur(chi: &CharacterVector) -> SymExpr {
    let mut out = SymExpr::zero(Basis::Schur);
    for lambda in partitions_of(chi.n) {
        let mut m = Q::zero();
        for mu in partitions_of(chi.n) {
            m += chi.value(&mu) * qint(mn_character(&lambda, &mu)) / quint(z_of(&mu));
        }
        assert!(
            m.is_integer(),
            "non-integer multiplicity {m} of {lambda}: corrupted character"
        );
        out.add_term(lambda, m);
    }
    out
}

/// `Σ_{i=0}^{n-1} (-1)^i s_{(n-i,1^i)}`, the Schur expansion of `p_n`.
pub fn hook_alternating_sum(n: usize) -> SymExpr {
    assert!(n >= 1);
    let mut out = SymExpr::zero(Basis::Schur);
    for i in 0..n {
        out.add_term(Partition::hook(n, i), qint(if i % 2 == 0 { 1 } else { -1 }));
    }
    out
}
