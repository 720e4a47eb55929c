//! Partitions, standard tableaux, injections and permutations.
//!
//! Everything is 1-indexed: a permutation of degree `k` is stored in one-line
//! notation as the images of `1..=k`, an injection `[x] -> [y]` as the images
//! of `1..=x`. Composition follows the usual function convention,
//! `(g ∘ f)(i) = g(f(i))`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., k}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &v in &images {
            if v == 0 || v > k || seen[v - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            images: (1..=k).collect(),
        }
    }

    /// Transposition of `a` and `b` in the symmetric group of degree `k`.
    pub fn transposition(k: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (1..=k).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::Composition(format!(
                "permutations of degree {} and {}",
                self.degree(),
                other.degree()
            )));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Cycle lengths sorted in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Diagram {
        let k = self.degree();
        let mut seen = vec![false; k];
        let mut lengths = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] - 1;
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Diagram { rows: lengths }
    }

    pub fn sign(&self) -> i32 {
        let cycles = self.cycle_type();
        if (self.degree() - cycles.num_rows()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Every permutation of degree `k`, lexicographic in one-line notation.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        let mut used = vec![false; k];
        fn rec(k: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == k {
                out.push(Permutation {
                    images: current.clone(),
                });
                return;
            }
            for v in 1..=k {
                if !used[v - 1] {
                    used[v - 1] = true;
                    current.push(v);
                    rec(k, current, used, out);
                    current.pop();
                    used[v - 1] = false;
                }
            }
        }
        rec(k, &mut current, &mut used, &mut out);
        out
    }

    /// Canonical element of a conjugacy class: cycles in weakly decreasing
    /// length, each on consecutive integers, e.g. `(3,2,1)` gives
    /// `(1 2 3)(4 5)(6)`.
    pub fn class_representative(class: &Diagram) -> Permutation {
        let mut images = Vec::with_capacity(class.size());
        let mut start = 1;
        for &len in class.rows() {
            for i in 0..len {
                images.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn as_injection(&self) -> Injection {
        Injection {
            images: self.images.clone(),
            target: self.degree(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.images)
    }
}

fn write_bracketed(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    write!(f, "[")?;
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, "]")
}

/// Precompose a word `[k] -> N+` with a permutation of `[k]`: `(word ∘ sigma)`.
pub fn precompose(word: &[usize], sigma: &Permutation) -> Vec<usize> {
    debug_assert_eq!(word.len(), sigma.degree());
    sigma.images.iter().map(|&v| word[v - 1]).collect()
}

/// An integer partition, read as an upper-left justified diagram in matrix
/// coordinates. Row `i` (1-indexed) holds `rows[i - 1]` boxes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    rows: Vec<usize>,
}

impl Diagram {
    /// Builds a diagram from non-increasing row lengths. Trailing zeros are dropped.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) || rows.contains(&0) {
            return Err(Error::InvalidPartition(rows));
        }
        Ok(Diagram { rows })
    }

    pub fn empty() -> Self {
        Diagram { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Length of row `i` (1-indexed), zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.row(i) >= j
    }

    pub fn contains(&self, other: &Diagram) -> bool {
        other.rows.len() <= self.rows.len()
            && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Diagram {
        let first = self.row(1);
        Diagram {
            rows: (1..=first)
                .map(|j| self.rows.iter().filter(|&&r| r >= j).count())
                .collect(),
        }
    }

    /// Boxes in lexicographic order; this is the distinguished filling `t_λ`.
    pub fn boxes(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Number of standard tableaux, by the hook length formula.
    pub fn hook_length_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut numerator: u128 = (1..=self.size() as u128).product();
        let mut hooks: u128 = 1;
        for (i, &len) in self.rows.iter().enumerate() {
            for j in 1..=len {
                let arm = len - j;
                let leg = conj.row(j) - (i + 1);
                hooks *= (arm + leg + 1) as u128;
                let g = gcd_u128(numerator, hooks);
                numerator /= g;
                hooks /= g;
            }
        }
        numerator / hooks
    }

    /// Size of the conjugacy class of cycle type `self`, i.e. `n! / z_μ`.
    pub fn class_size(&self) -> u128 {
        let n: u128 = (1..=self.size() as u128).product();
        n / self.centralizer_order()
    }

    /// `z_μ = Π i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        let mut i = 0;
        while i < self.rows.len() {
            let part = self.rows[i];
            let mut mult = 0u128;
            while i < self.rows.len() && self.rows[i] == part {
                mult += 1;
                z *= part as u128;
                z *= mult;
                i += 1;
            }
        }
        z
    }

    /// Parses `"2,2,1"`; `""` and `"0"` give the empty diagram.
    pub fn parse(text: &str) -> std::result::Result<Diagram, String> {
        let text = text.trim();
        if text.is_empty() || text == "0" {
            return Ok(Diagram::empty());
        }
        let parts = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|e| format!("bad part {p:?}: {e}"))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Diagram::new(parts).map_err(|e| e.to_string())
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for Diagram {
    /// Sage-style list, e.g. `[2, 1]` and `[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// All partitions of `k` in descending lexicographic order, e.g.
/// `(3), (2,1), (1,1,1)`.
pub fn partitions(k: usize) -> Vec<Diagram> {
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Diagram>) {
        if remaining == 0 {
            out.push(Diagram {
                rows: current.clone(),
            });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

/// A standard Young tableau stored as its rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if Diagram::new(lengths.clone()).is_err() || lengths.contains(&0) {
            return Err(Error::InvalidTableau(
                rows,
                "row lengths are not a partition",
            ));
        }
        let k: usize = lengths.iter().sum();
        let mut seen = vec![false; k];
        for row in &rows {
            for &v in row {
                if v == 0 || v > k || seen[v - 1] {
                    return Err(Error::InvalidTableau(
                        rows,
                        "entries must be 1..k, each once",
                    ));
                }
                seen[v - 1] = true;
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidTableau(rows, "rows must increase"));
            }
            if i > 0
                && row
                    .iter()
                    .zip(&rows[i - 1])
                    .any(|(below, above)| below <= above)
            {
                return Err(Error::InvalidTableau(rows, "columns must increase"));
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Diagram {
        Diagram {
            rows: self.rows.iter().map(Vec::len).collect(),
        }
    }

    /// Entries read left to right, top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The box `(row, column)` holding `entry`; this is `t(entry)`.
    pub fn box_of(&self, entry: usize) -> Option<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .find_map(|(i, row)| row.iter().position(|&v| v == entry).map(|j| (i + 1, j + 1)))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for v in row {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Standard tableaux of a shape, sorted lexicographically by reading word.
///
/// For `(2,2,1)` this gives `12/34/5, 12/35/4, 13/24/5, 13/25/4, 14/25/3`;
/// for `(2,1)` it gives `12/3` before `13/2`.
pub fn standard_tableaux(shape: &Diagram) -> Vec<Tableau> {
    fn rec(shape: &Diagram, next: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if next > shape.size() {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..shape.num_rows() {
            let len = rows[i].len();
            let fits = len < shape.rows[i] && (i == 0 || rows[i - 1].len() > len);
            if fits {
                rows[i].push(next);
                rec(shape, next + 1, rows, out);
                rows[i].pop();
            }
        }
    }
    let mut rows = vec![Vec::new(); shape.num_rows()];
    let mut out = Vec::new();
    rec(shape, 1, &mut rows, &mut out);
    out.sort_by_key(Tableau::reading_word);
    out
}

/// An injection `[x] -> [y]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Injection {
    images: Vec<usize>,
    target: usize,
}

impl Injection {
    pub fn new(images: Vec<usize>, target: usize) -> Result<Self> {
        let mut seen = HashSet::with_capacity(images.len());
        if images
            .iter()
            .any(|&v| v == 0 || v > target || !seen.insert(v))
        {
            return Err(Error::InvalidInjection { images, target });
        }
        Ok(Injection { images, target })
    }

    pub fn identity(x: usize) -> Self {
        Injection {
            images: (1..=x).collect(),
            target: x,
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn source(&self) -> usize {
        self.images.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_monotone(&self) -> bool {
        self.images.windows(2).all(|w| w[0] < w[1])
    }

    /// `self ∘ other` where `other: [a] -> [x]` and `self: [x] -> [y]`.
    pub fn compose(&self, other: &Injection) -> Result<Injection> {
        if other.target != self.source() {
            return Err(Error::Composition(format!(
                "[{}] -> [{}] after [{}] -> [{}]",
                self.source(),
                self.target,
                other.source(),
                other.target
            )));
        }
        Ok(Injection {
            images: other.images.iter().map(|&v| self.images[v - 1]).collect(),
            target: self.target,
        })
    }

    /// `self ∘ sigma` for `sigma` a permutation of the source.
    pub fn compose_permutation(&self, sigma: &Permutation) -> Result<Injection> {
        self.compose(&sigma.as_injection())
    }

    pub fn image_set(&self) -> BTreeSet<usize> {
        self.images.iter().copied().collect()
    }

    /// Reinterprets a bijection `[k] -> [k]` as a permutation.
    pub fn to_permutation(&self) -> Result<Permutation> {
        if self.source() != self.target {
            return Err(Error::InvalidPermutation(self.images.clone()));
        }
        Permutation::new(self.images.clone())
    }
}

impl fmt::Display for Injection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bracketed(f, &self.images)
    }
}

/// Strictly increasing injections `[k] -> [n]`, lexicographic on images.
pub fn monotone_injections(k: usize, n: usize) -> Vec<Injection> {
    fn rec(k: usize, n: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Injection>) {
        if current.len() == k {
            out.push(Injection {
                images: current.clone(),
                target: n,
            });
            return;
        }
        let remaining = k - current.len();
        for v in start..=(n + 1).saturating_sub(remaining) {
            current.push(v);
            rec(k, n, v + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(k, n, 1, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// All injections `[k] -> [n]`, lexicographic on images.
pub fn all_injections(k: usize, n: usize) -> Vec<Injection> {
    fn rec(
        k: usize,
        n: usize,
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<Injection>,
    ) {
        if current.len() == k {
            out.push(Injection {
                images: current.clone(),
                target: n,
            });
            return;
        }
        for v in 1..=n {
            if !used[v - 1] {
                used[v - 1] = true;
                current.push(v);
                rec(k, n, used, current, out);
                current.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(
            k,
            n,
            &mut vec![false; n],
            &mut Vec::with_capacity(k),
            &mut out,
        );
    }
    out
}

/// `n (n-1) ... (n-k+1)`, the number of injections `[k] -> [n]`.
pub fn falling_factorial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    ((n - k + 1)..=n).map(|v| v as u128).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The permutation with `t ∘ ζ(t) = t_λ`: the reading word of `t`.
pub fn zeta(t: &Tableau) -> Permutation {
    Permutation {
        images: t.reading_word(),
    }
}

/// The permutation with `p ∘ ξ(p)⁻¹` monotone: `ξ(p)(l)` is the rank of
/// `p(l)` among the images of `p`.
pub fn xi(p: &Injection) -> Permutation {
    let mut sorted = p.images.clone();
    sorted.sort_unstable();
    Permutation {
        images: p
            .images
            .iter()
            .map(|v| sorted.binary_search(v).expect("image value present") + 1)
            .collect(),
    }
}

/// The monotone injection with the same image as `f`; `f = ν(f) ∘ ξ(f)`.
pub fn nu(f: &Injection) -> Injection {
    let mut images = f.images.clone();
    images.sort_unstable();
    Injection {
        images,
        target: f.target,
    }
}

/// Position `l` holds the row index of the box containing `l`.
pub fn row_word(t: &Tableau) -> Vec<usize> {
    let mut word = vec![0; t.size()];
    for (i, row) in t.rows.iter().enumerate() {
        for &v in row {
            word[v - 1] = i + 1;
        }
    }
    word
}

/// Position `l` holds the column index of the box containing `l`.
pub fn col_word(t: &Tableau) -> Vec<usize> {
    let mut word = vec![0; t.size()];
    for row in &t.rows {
        for (j, &v) in row.iter().enumerate() {
            word[v - 1] = j + 1;
        }
    }
    word
}

/// Zero if the boxes `(a(l), b(l))` repeat; otherwise the sign of the
/// permutation sending each box to its position in lexicographic order.
///
/// Only distinctness is checked, not that every prefix is a diagram.
pub fn chi(a: &[usize], b: &[usize]) -> i32 {
    assert_eq!(a.len(), b.len(), "chi needs words of equal length");
    let k = a.len();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_unstable_by_key(|&l| (a[l], b[l]));
    if order
        .windows(2)
        .any(|w| (a[w[0]], b[w[0]]) == (a[w[1]], b[w[1]]))
    {
        return 0;
    }
    // order[m] = l means box l sits at lex position m; its inverse is the
    // permutation in question, and both have the same sign.
    let mut seen = vec![false; k];
    let mut transpositions = 0;
    for start in 0..k {
        let mut i = start;
        let mut len = 0;
        while !seen[i] {
            seen[i] = true;
            i = order[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    if transpositions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `λ` with a new top row of length `n`.
pub fn lambda_plus_n(shape: &Diagram, n: usize) -> Result<Diagram> {
    if n < shape.row(1) {
        return Err(Error::TopRowTooShort {
            n,
            first: shape.row(1),
        });
    }
    let mut rows = Vec::with_capacity(shape.num_rows() + 1);
    rows.push(n);
    rows.extend_from_slice(&shape.rows);
    Diagram::new(rows)
}

/// True iff `inner ⊆ outer` and `outer \ inner` has at most one box per column.
pub fn is_horizontal_strip_extension(inner: &Diagram, outer: &Diagram) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    // Column j gains boxes in rows where inner.row(i) < j <= outer.row(i).
    // At most one per column is equivalent to outer.row(i + 1) <= inner.row(i).
    (1..=outer.num_rows()).all(|i| outer.row(i + 1) <= inner.row(i))
}

/// All `λ'` of size `|λ| + m` with `λ ⊆_h λ'`.
pub fn horizontal_strip_extensions(shape: &Diagram, m: usize) -> Vec<Diagram> {
    partitions(shape.size() + m)
        .into_iter()
        .filter(|outer| is_horizontal_strip_extension(shape, outer))
        .collect()
}
