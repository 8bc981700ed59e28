//! Fillings of straight and skew shapes.
//!
//! A [`Filling`] always stores its *standard-orientation reading*: entries of
//! each row of the skew shape, bottom row first, left to right. A filling
//! flagged [`Orientation::Rotated180`] is that reading turned upside down
//! inside an anchoring box, so a 180°-rotated SYT is stored as the SYT itself.
//! The validity predicates all act on the stored reading.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::shapes::{strip_extensions, Bounds, BoxCoord, Partition, SkewShape, StripKind};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    #[default]
    Standard,
    /// Read after rotating the plane 180° inside a `rows × cols` box anchored
    /// at the origin: box `(i, j)` of the reading sits at `(rows+1-i, cols+1-j)`.
    Rotated180 { rows: usize, cols: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
    orientation: Orientation,
}

impl Filling {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut rows = rows;
        while rows.len() > shape.outer().len() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        if rows.len() > shape.outer().len() {
            return Err(Error::validation(
                "row length matches shape",
                None,
                format!("{} rows for shape {shape}", rows.len()),
            ));
        }
        rows.resize(shape.outer().len(), Vec::new());
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i) {
                return Err(Error::validation(
                    "row length matches shape",
                    Some(BoxCoord::new(i + 1, shape.inner().part(i) + 1)),
                    format!("row {} has {} entries, shape {} needs {}", i + 1, row.len(), shape, shape.row_len(i)),
                ));
            }
        }
        Ok(Filling { shape, rows, orientation: Orientation::Standard })
    }

    /// A filling of a straight shape given its rows bottom-up.
    pub fn straight(rows: Vec<Vec<u32>>) -> Result<Self> {
        let lens: Vec<usize> = rows.iter().map(Vec::len).collect();
        let shape = Partition::new(lens)?;
        Filling::new(SkewShape::straight(shape), rows)
    }

    /// A skew filling whose row `i` starts right after `inner`'s row `i`.
    pub fn skew(inner: Partition, rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len().max(inner.len());
        let outer: Vec<usize> = (0..n).map(|i| inner.part(i) + rows.get(i).map_or(0, Vec::len)).collect();
        let shape = SkewShape::new(Partition::new(outer)?, inner)?;
        Filling::new(shape, rows)
    }

    /// Rebuilds a standard-orientation filling from explicit box positions.
    /// Each row's boxes must be contiguous and the result a skew shape.
    pub fn from_cells(cells: impl IntoIterator<Item = (BoxCoord, u32)>) -> Result<Self> {
        let cells: BTreeMap<BoxCoord, u32> = cells.into_iter().collect();
        let height = cells.keys().map(|b| b.row).max().unwrap_or(0);
        let mut rows: Vec<Vec<(usize, u32)>> = vec![Vec::new(); height];
        for (b, &v) in &cells {
            if b.row == 0 || b.col == 0 {
                return Err(Error::validation("coordinates are 1-based", Some(*b), "zero row or column"));
            }
            rows[b.row - 1].push((b.col, v));
        }
        let mut outer = vec![0; height];
        let mut inner = vec![0; height];
        let mut entries = vec![Vec::new(); height];
        // Top-down so empty rows can borrow the row above's edge.
        for i in (0..height).rev() {
            let row = &rows[i];
            if row.is_empty() {
                let v = if i + 1 < height { outer[i + 1] } else { 0 };
                outer[i] = v;
                inner[i] = v;
                continue;
            }
            let first = row[0].0;
            if row.iter().enumerate().any(|(k, &(c, _))| c != first + k) {
                return Err(Error::validation(
                    "rows are contiguous",
                    Some(BoxCoord::new(i + 1, first)),
                    format!("row {} has a gap", i + 1),
                ));
            }
            inner[i] = first - 1;
            outer[i] = first - 1 + row.len();
            entries[i] = row.iter().map(|&(_, v)| v).collect();
        }
        let shape = SkewShape::new(Partition::new(outer)?, Partition::new(inner)?)?;
        Filling::new(shape, entries)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Rows of the standard reading, bottom first.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub(crate) fn with_orientation(mut self, orientation: Orientation) -> Self {
        self.orientation = orientation;
        self
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// Entry at a box of the standard reading.
    pub fn get(&self, b: BoxCoord) -> Option<u32> {
        if !self.shape.contains_box(b) {
            return None;
        }
        let i = b.row - 1;
        Some(self.rows[i][b.col - 1 - self.shape.inner().part(i)])
    }

    /// `(box, entry)` pairs of the standard reading, bottom row first.
    pub fn entries(&self) -> impl Iterator<Item = (BoxCoord, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let offset = self.shape.inner().part(i);
            row.iter().enumerate().map(move |(k, &v)| (BoxCoord::new(i + 1, offset + k + 1), v))
        })
    }

    /// Entries at the positions they occupy in the plane, after applying the
    /// orientation.
    pub fn placed_cells(&self) -> Vec<(BoxCoord, u32)> {
        match self.orientation {
            Orientation::Standard => self.entries().collect(),
            Orientation::Rotated180 { rows, cols } => {
                self.entries().map(|(b, v)| (BoxCoord::new(rows + 1 - b.row, cols + 1 - b.col), v)).collect()
            }
        }
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    /// Reflects the reading across the main diagonal (conjugate shape).
    pub fn transpose(&self) -> Filling {
        let outer = self.shape.outer().conjugate();
        let inner = self.shape.inner().conjugate();
        let shape = SkewShape::new(outer, inner).expect("conjugation preserves containment");
        let mut rows: Vec<Vec<u32>> = (0..shape.outer().len()).map(|i| Vec::with_capacity(shape.row_len(i))).collect();
        // Entries of the new row c are column c of the old reading, bottom-up.
        let mut by_col: BTreeMap<usize, Vec<(usize, u32)>> = BTreeMap::new();
        for (b, v) in self.entries() {
            by_col.entry(b.col).or_default().push((b.row, v));
        }
        for (col, mut cells) in by_col {
            cells.sort();
            rows[col - 1] = cells.into_iter().map(|(_, v)| v).collect();
        }
        let orientation = match self.orientation {
            Orientation::Standard => Orientation::Standard,
            Orientation::Rotated180 { rows, cols } => Orientation::Rotated180 { rows: cols, cols: rows },
        };
        Filling { shape, rows, orientation }
    }

    fn fits(&self, bounds: Bounds) -> bool {
        self.shape.outer().fits(bounds)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate().rev() {
            let pad = self.shape.inner().part(i);
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}{}", "  ".repeat(pad), cells.join(" "))?;
        }
        Ok(())
    }
}

/// Letter multiplicities. `multiplicities[k]` counts the letter `k+1`;
/// zeros are tallied separately.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Content {
    pub zeros: usize,
    pub multiplicities: Vec<usize>,
}

impl Content {
    /// `(m_0, m_1, …, m_max)` with `max` at least `up_to`.
    pub fn from_zero(&self, up_to: usize) -> Vec<usize> {
        let mut v = vec![self.zeros];
        v.extend(&self.multiplicities);
        if v.len() < up_to + 1 {
            v.resize(up_to + 1, 0);
        }
        v
    }

    /// True iff every letter `1..=n` occurs exactly `each` times and nothing else does.
    pub fn is_uniform(&self, n: usize, each: usize) -> bool {
        self.zeros == 0
            && self.multiplicities.len() == if each == 0 { 0 } else { n }
            && self.multiplicities.iter().all(|&m| m == each)
    }
}

pub fn content(f: &Filling) -> Content {
    content_of(f.rows.iter().flatten().copied())
}

pub(crate) fn content_of(letters: impl IntoIterator<Item = u32>) -> Content {
    let mut c = Content::default();
    for v in letters {
        if v == 0 {
            c.zeros += 1;
        } else {
            let k = v as usize - 1;
            if c.multiplicities.len() <= k {
                c.multiplicities.resize(k + 1, 0);
            }
            c.multiplicities[k] += 1;
        }
    }
    c
}

/// Rows weakly increase left to right, columns strictly increase bottom to top.
pub fn check_ssyt(f: &Filling) -> Result<()> {
    check_monotone(f, false, true)
}

/// Rows strictly increase, columns weakly increase.
pub fn check_transposed_ssyt(f: &Filling) -> Result<()> {
    check_monotone(f, true, false)
}

fn check_monotone(f: &Filling, strict_rows: bool, strict_cols: bool) -> Result<()> {
    for (b, v) in f.entries() {
        if let Some(right) = f.get(BoxCoord::new(b.row, b.col + 1)) {
            if right < v || (strict_rows && right == v) {
                let what = if strict_rows { "rows strictly increase" } else { "rows weakly increase" };
                return Err(Error::validation(what, Some(b), format!("{v} followed by {right}")));
            }
        }
        if let Some(above) = f.get(BoxCoord::new(b.row + 1, b.col)) {
            if above < v || (strict_cols && above == v) {
                let what = if strict_cols { "columns strictly increase" } else { "columns weakly increase" };
                return Err(Error::validation(what, Some(b), format!("{v} below {above}")));
            }
        }
    }
    Ok(())
}

pub fn check_syt(f: &Filling) -> Result<()> {
    check_ssyt(f)?;
    let n = f.size();
    if !content(f).is_uniform(n, 1) {
        return Err(Error::validation("entries are 1..n once each", None, format!("content is not (1^{n})")));
    }
    Ok(())
}

pub fn is_ssyt(f: &Filling) -> bool {
    check_ssyt(f).is_ok()
}

pub fn is_transposed_ssyt(f: &Filling) -> bool {
    check_transposed_ssyt(f).is_ok()
}

pub fn is_syt(f: &Filling) -> bool {
    check_syt(f).is_ok()
}

/// Toggles the orientation inside `target`. Entries keep their reading; only
/// their placement in the plane changes. Involutive.
pub fn rotate180(f: &Filling, target: Bounds) -> Result<Filling> {
    if !f.fits(target) {
        return Err(Error::Dimension { rows: target.rows, cols: target.cols });
    }
    let orientation = match f.orientation {
        Orientation::Standard => Orientation::Rotated180 { rows: target.rows, cols: target.cols },
        Orientation::Rotated180 { rows, cols } if rows == target.rows && cols == target.cols => Orientation::Standard,
        Orientation::Rotated180 { .. } => return Err(Error::Dimension { rows: target.rows, cols: target.cols }),
    };
    Ok(f.clone().with_orientation(orientation))
}

/// Replaces each entry `e` with `r - e`.
pub fn invert_alphabet(f: &Filling, r: u32) -> Result<Filling> {
    let mut out = f.clone();
    for (i, row) in out.rows.iter_mut().enumerate() {
        for (k, v) in row.iter_mut().enumerate() {
            if *v > r {
                let at = BoxCoord::new(i + 1, f.shape.inner().part(i) + k + 1);
                return Err(Error::validation("entries within alphabet", Some(at), format!("{v} > {r}")));
            }
            *v = r - *v;
        }
    }
    Ok(out)
}

/// Number of standard Young tableaux of shape `lambda`, by the hook length formula.
pub fn count_syt_hook_length(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for b in lambda.boxes() {
        let arm = lambda.part(b.row - 1) - b.col;
        let leg = conj.part(b.col - 1) - b.row;
        hooks *= BigUint::from(arm + leg + 1);
    }
    factorial(lambda.size()) / hooks
}

pub(crate) fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Which family [`enumerate_fillings`] produces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FillingKind {
    /// Each letter occupies a horizontal strip.
    Ssyt,
    /// Each letter occupies a vertical strip.
    Transposed,
}

impl FillingKind {
    fn strip(self) -> StripKind {
        match self {
            FillingKind::Ssyt => StripKind::Horizontal,
            FillingKind::Transposed => StripKind::Vertical,
        }
    }
}

/// All fillings of `shape` of the given kind over `alphabet`, optionally with
/// fixed content (`content[k]` copies of the `k`-th letter of the alphabet).
///
/// Fillings are built one letter at a time, each letter extending the shape
/// by a strip.
pub fn enumerate_fillings(
    shape: &SkewShape,
    kind: FillingKind,
    alphabet: RangeInclusive<u32>,
    content: Option<&[usize]>,
) -> Vec<Filling> {
    fill_by_strips(shape.inner(), kind, alphabet, content, shape.outer(), Some(shape.outer()))
}

/// Strip recursion from `start` inside `limit`. With `target = None` every
/// reachable end shape is accepted.
pub(crate) fn fill_by_strips(
    start: &Partition,
    kind: FillingKind,
    alphabet: RangeInclusive<u32>,
    content: Option<&[usize]>,
    limit: &Partition,
    target: Option<&Partition>,
) -> Vec<Filling> {
    let letters: Vec<u32> = alphabet.collect();
    if let Some(c) = content {
        assert_eq!(c.len(), letters.len(), "content must give one multiplicity per letter");
        if let Some(t) = target {
            if c.iter().sum::<usize>() + start.size() != t.size() {
                return Vec::new();
            }
        }
    }
    let mut out = Vec::new();
    let mut chain = vec![start.clone()];
    chain_step(kind, &letters, content, limit, target, &mut chain, &mut out);
    out
}

fn chain_step(
    kind: FillingKind,
    letters: &[u32],
    content: Option<&[usize]>,
    limit: &Partition,
    target: Option<&Partition>,
    chain: &mut Vec<Partition>,
    out: &mut Vec<Filling>,
) {
    let step = chain.len() - 1;
    let cur = chain.last().expect("chain starts non-empty").clone();
    if step == letters.len() {
        if target.is_none_or(|t| *t == cur) {
            out.push(chain_to_filling(chain, letters));
        }
        return;
    }
    let size = content.map(|c| c[step]);
    for next in strip_extensions(&cur, size, Some(limit), limit.len(), kind.strip()) {
        chain.push(next);
        chain_step(kind, letters, content, limit, target, chain, out);
        chain.pop();
    }
}

fn chain_to_filling(chain: &[Partition], letters: &[u32]) -> Filling {
    let start = &chain[0];
    let end = chain.last().expect("non-empty chain");
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); end.len()];
    for (k, pair) in chain.windows(2).enumerate() {
        for (i, row) in rows.iter_mut().enumerate() {
            let added = pair[1].part(i) - pair[0].part(i);
            row.extend(std::iter::repeat_n(letters[k], added));
        }
    }
    let shape = SkewShape::new(end.clone(), start.clone()).expect("strip chains only grow");
    Filling::new(shape, rows).expect("chain rows match shape")
}
