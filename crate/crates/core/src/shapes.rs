//! Partitions, skew shapes and horizontal/vertical strips.
//!
//! Diagrams are drawn in the French convention: row 1 is the bottom row and
//! column 1 the leftmost column. A partition `(5,5,2,1)` therefore has five
//! boxes in each of its two bottom rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers, stored without trailing
/// zeros. Missing parts read as 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The `rows × cols` rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition(vec![cols; rows])
    }

    /// Single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::rectangle(n, 1)
    }

    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, i.e. the height of the diagram.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of the first row.
    pub fn width(&self) -> usize {
        self.part(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        Partition((1..=width).map(|c| self.0.iter().take_while(|&&p| p >= c).count()).collect())
    }

    pub fn fits(&self, bounds: Bounds) -> bool {
        self.len() <= bounds.rows && self.width() <= bounds.cols
    }

    pub fn contains_box(&self, b: BoxCoord) -> bool {
        b.row >= 1 && b.col >= 1 && self.part(b.row - 1) >= b.col
    }

    /// Boxes of the diagram, bottom row first, left to right.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |col| BoxCoord::new(i + 1, col)))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// 1-based box position: `row` counted from the bottom, `col` from the left.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        BoxCoord { row, col }
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(row {}, col {})", self.row, self.col)
    }
}

/// A `rows × cols` bounding box, e.g. the rectangle a Grassmannian's Schubert
/// classes live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bounds {
    pub rows: usize,
    pub cols: usize,
}

impl Bounds {
    pub const fn new(rows: usize, cols: usize) -> Self {
        Bounds { rows, cols }
    }

    pub fn rectangle(&self) -> Partition {
        Partition::rectangle(self.rows, self.cols)
    }

    pub fn area(&self) -> usize {
        self.rows * self.cols
    }
}

/// The boxes of `outer` that are not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&outer, &inner) {
            return Err(Error::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    /// The straight shape `λ/∅`.
    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of boxes in row `i` (0-based).
    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    pub fn contains_box(&self, b: BoxCoord) -> bool {
        self.outer.contains_box(b) && !self.inner.contains_box(b)
    }

    /// Boxes bottom row first, left to right.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        (0..self.outer.len())
            .flat_map(move |i| (self.inner.part(i) + 1..=self.outer.part(i)).map(move |col| BoxCoord::new(i + 1, col)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

/// True iff the diagram of `mu` is a subset of the diagram of `lambda`.
pub fn contains(lambda: &Partition, mu: &Partition) -> bool {
    mu.len() <= lambda.len() && mu.parts().iter().zip(lambda.parts()).all(|(m, l)| m <= l)
}

/// No two boxes of the skew shape share a column.
pub fn is_horizontal_strip(s: &SkewShape) -> bool {
    // Column c holds two boxes iff some row i+1 reaches past row i's inner edge.
    (1..s.outer.len()).all(|i| s.outer.part(i) <= s.inner.part(i - 1))
}

/// No two boxes of the skew shape share a row.
pub fn is_vertical_strip(s: &SkewShape) -> bool {
    (0..s.outer.len()).all(|i| s.row_len(i) <= 1)
}

/// Orientation of a Pieri strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StripKind {
    /// At most one box per column.
    Horizontal,
    /// At most one box per row.
    Vertical,
}

/// All `ν ⊇ λ` with `ν/λ` a horizontal strip of `k` boxes and `ν` inside
/// `bounds`. Reverse-lexicographic order on part sequences.
pub fn extensions_by_row_strip(lambda: &Partition, k: usize, bounds: Bounds) -> Vec<Partition> {
    strip_extensions(lambda, Some(k), Some(&bounds.rectangle()), bounds.rows, StripKind::Horizontal)
}

/// Vertical-strip counterpart of [`extensions_by_row_strip`].
pub fn extensions_by_col_strip(lambda: &Partition, k: usize, bounds: Bounds) -> Vec<Partition> {
    strip_extensions(lambda, Some(k), Some(&bounds.rectangle()), bounds.rows, StripKind::Vertical)
}

/// Shared strip kernel.
///
/// Extends `lambda` by a strip of the given kind. `size = None` means any size
/// (including 0). `limit` caps each row (`ν ⊆ limit`); `max_rows` caps the
/// height. With no `limit`, `size` must be given.
pub(crate) fn strip_extensions(
    lambda: &Partition,
    size: Option<usize>,
    limit: Option<&Partition>,
    max_rows: usize,
    kind: StripKind,
) -> Vec<Partition> {
    assert!(size.is_some() || limit.is_some(), "unbounded strip of unbounded size");
    if lambda.len() > max_rows || limit.is_some_and(|l| !contains(l, lambda)) {
        return Vec::new();
    }
    let rows = match kind {
        StripKind::Horizontal => (lambda.len() + 1).min(max_rows),
        StripKind::Vertical => (lambda.len() + size.unwrap_or(max_rows)).min(max_rows),
    };
    let rows = match limit {
        Some(l) => rows.min(l.len()),
        None => rows,
    };
    let mut out = Vec::new();
    let mut nu = Vec::with_capacity(rows);
    extend_rows(lambda, limit, rows, size, kind, &mut nu, &mut out);
    out
}

fn extend_rows(
    lambda: &Partition,
    limit: Option<&Partition>,
    rows: usize,
    remaining: Option<usize>,
    kind: StripKind,
    nu: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let i = nu.len();
    if i == rows {
        if remaining.is_none_or(|r| r == 0) {
            out.push(Partition::from_parts_unchecked(nu.clone()));
        }
        return;
    }
    let lo = lambda.part(i);
    let mut hi = match kind {
        StripKind::Horizontal => {
            if i == 0 {
                usize::MAX
            } else {
                lambda.part(i - 1)
            }
        }
        StripKind::Vertical => {
            let cap = lo + 1;
            if i == 0 {
                cap
            } else {
                cap.min(nu[i - 1])
            }
        }
    };
    if let Some(l) = limit {
        hi = hi.min(l.part(i));
    }
    if let Some(r) = remaining {
        hi = hi.min(lo + r);
    }
    if hi < lo {
        return;
    }
    // Descending choices give reverse-lexicographic output.
    for v in (lo..=hi).rev() {
        nu.push(v);
        let rem = remaining.map(|r| r - (v - lo));
        extend_rows(lambda, limit, rows, rem, kind, nu, out);
        nu.pop();
    }
}

/// Every partition of `n` that fits in `bounds`, reverse-lexicographic.
pub fn partitions_in_box(n: usize, bounds: Bounds) -> Vec<Partition> {
    fn go(n: usize, max_part: usize, rows_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            cur.push(p);
            go(n - p, p, rows_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, bounds.cols, bounds.rows, &mut Vec::new(), &mut out);
    out
}
