//! L-tableaux: an `(r+1) × (d-r)` grid holding a red transposed SSYT with
//! content `(r^g)` in the lower left and a blue SSYT over `{0, …, r}` on the
//! complementary skew shape.
//!
//! For `d = g + r` the map [`l_to_word`] sends each L-tableau to a word of
//! length `g` over `{0, …, r}`:
//!
//! 1. the red tableau goes to a rotated SYT ("purple") by [`phi`], whose cells
//!    are exactly the blue cells;
//! 2. rotating purple and blue back and replacing each blue `e` by `r - e`
//!    gives an RSK pair `(P, Q)`;
//! 3. inverse RSK yields the word.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::rsk::{rsk_insert, rsk_inverse, RskPair, Word};
use crate::shapes::{Bounds, BoxCoord, Partition, SkewShape};
use crate::tableau::{
    check_ssyt, check_syt, check_transposed_ssyt, content, enumerate_fillings, fill_by_strips, invert_alphabet,
    rotate180, Filling, FillingKind, Orientation,
};

/// A validated L-tableau with parameters `(g, r, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LTableau {
    g: usize,
    r: usize,
    d: usize,
    grid: Grid,
}

impl LTableau {
    /// Validates a grid against every L-tableau invariant.
    ///
    /// `r = 0` is accepted as the degenerate one-row case that removing rows
    /// from a restricted tableau can reach.
    pub fn new(g: usize, r: usize, d: usize, grid: Grid) -> Result<Self> {
        if d < r {
            return Err(Error::param(format!("need d >= r, got r={r}, d={d}")));
        }
        if grid.height() != r + 1 || grid.width() != d - r {
            return Err(Error::validation(
                "grid is (r+1) x (d-r)",
                None,
                format!("got {}x{}, expected {}x{}", grid.height(), grid.width(), r + 1, d - r),
            ));
        }
        if let Some((b, _)) = grid.cells().find(|(_, c)| !c.is_red() && !c.is_blue()) {
            return Err(Error::validation("every cell is red or blue", Some(b), "gray or empty cell"));
        }
        let red = grid.red_filling()?;
        RedTableau::new(red, g, r, r).map_err(|e| relabel(e, "red tableau"))?;
        let blue = grid.blue_filling()?;
        BlueTableau::new(blue, r)?;
        Ok(LTableau { g, r, d, grid })
    }

    pub(crate) fn from_parts(g: usize, r: usize, d: usize, red: &Filling, blue: &Filling) -> Result<Self> {
        let mut grid = Grid::filled(r + 1, d - r, Cell::Empty);
        grid.paint(red, Cell::Red)?;
        grid.paint(blue, Cell::Blue)?;
        LTableau::new(g, r, d, grid)
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn red(&self) -> RedTableau {
        let f = self.grid.red_filling().expect("validated on construction");
        RedTableau { filling: f, g: self.g, r: self.r, i: self.r }
    }

    pub fn blue(&self) -> BlueTableau {
        BlueTableau { filling: self.grid.blue_filling().expect("validated on construction"), r: self.r }
    }

    /// Largest blue entry, if any blue cell exists.
    pub fn max_blue(&self) -> Option<u32> {
        self.grid
            .cells()
            .filter_map(|(_, c)| match c {
                Cell::Blue(v) => Some(v),
                _ => None,
            })
            .max()
    }
}

fn relabel(e: Error, what: &str) -> Error {
    match e {
        Error::Validation { invariant, at, detail } => {
            Error::Validation { invariant, at, detail: format!("{what}: {detail}") }
        }
        other => other,
    }
}

/// A transposed SSYT with content `(i^g)` and height at most `r+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RedTableau {
    filling: Filling,
    g: usize,
    r: usize,
    i: usize,
}

impl RedTableau {
    pub fn new(filling: Filling, g: usize, r: usize, i: usize) -> Result<Self> {
        if filling.orientation() != Orientation::Standard || !filling.shape().is_straight() {
            return Err(Error::validation(
                "red tableau has a straight standard shape",
                None,
                "skew or rotated filling",
            ));
        }
        if filling.shape().outer().len() > r + 1 {
            return Err(Error::validation(
                "height at most r+1",
                Some(BoxCoord::new(r + 2, 1)),
                format!("height {} exceeds {}", filling.shape().outer().len(), r + 1),
            ));
        }
        check_transposed_ssyt(&filling)?;
        let c = content(&filling);
        if !c.is_uniform(g, i) {
            return Err(Error::validation(
                "content is (i^g)",
                None,
                format!("expected each of 1..={g} exactly {i} times, got zeros={} {:?}", c.zeros, c.multiplicities),
            ));
        }
        Ok(RedTableau { filling, g, r, i })
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Copies of each letter.
    pub fn multiplicity(&self) -> usize {
        self.i
    }

    /// Letters present in each of the `r+1` rows, bottom first.
    fn row_sets(&self) -> Vec<BTreeSet<u32>> {
        let mut sets = vec![BTreeSet::new(); self.r + 1];
        for (k, row) in self.filling.rows().iter().enumerate() {
            sets[k].extend(row.iter().copied());
        }
        sets
    }
}

/// A 180°-rotated SYT of size `g` in the top-right of an `(r+1) × g` box.
/// The stored reading is the unrotated SYT.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PurpleTableau {
    filling: Filling,
    r: usize,
}

impl PurpleTableau {
    pub fn new(filling: Filling, r: usize) -> Result<Self> {
        let g = filling.size();
        if filling.orientation() != (Orientation::Rotated180 { rows: r + 1, cols: g }) {
            return Err(Error::validation(
                "purple tableau is rotated in an (r+1) x g box",
                None,
                format!("{:?}", filling.orientation()),
            ));
        }
        if filling.shape().outer().len() > r + 1 {
            return Err(Error::validation(
                "height at most r+1",
                None,
                format!("height {}", filling.shape().outer().len()),
            ));
        }
        check_syt(&filling)?;
        Ok(PurpleTableau { filling, r })
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    pub fn g(&self) -> usize {
        self.filling.size()
    }

    pub fn r(&self) -> usize {
        self.r
    }
}

/// Blue part of an L-tableau: an SSYT over `{0, …, r}` on the skew shape left
/// by the red cells, as it sits in the grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlueTableau {
    filling: Filling,
    r: usize,
}

impl BlueTableau {
    pub fn new(filling: Filling, r: usize) -> Result<Self> {
        if let Some((b, v)) = filling.entries().find(|&(_, v)| v as usize > r) {
            return Err(Error::validation("blue entries lie in 0..=r", Some(b), format!("{v} > {r}")));
        }
        check_ssyt(&filling)?;
        Ok(BlueTableau { filling, r })
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }
}

/// Rows of the rotated tableau built by placing, for each letter `1..=g` in
/// turn, a box as far right as possible in every row of `red` lacking it.
/// Returned bottom row first, each row in placement order (right to left).
fn place_in_missing_rows(red: &RedTableau) -> Result<Vec<Vec<u32>>> {
    let sets = red.row_sets();
    let per_step = red.r + 1 - red.i;
    let mut placed: Vec<Vec<u32>> = vec![Vec::new(); red.r + 1];
    for label in 1..=red.g as u32 {
        let mut added = 0;
        for (row, set) in placed.iter_mut().zip(&sets) {
            if !set.contains(&label) {
                row.push(label);
                added += 1;
            }
        }
        if added != per_step {
            return Err(Error::Invariant(format!("letter {label} missing from {added} rows, expected {per_step}")));
        }
    }
    Ok(placed)
}

/// Reading of the placed tableau after rotating it back upright.
fn upright(placed: Vec<Vec<u32>>) -> Result<Filling> {
    let mut rows: Vec<Vec<u32>> = placed.into_iter().rev().collect();
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    Filling::straight(rows).map_err(|e| Error::Invariant(format!("placement is not a rotated diagram: {e}")))
}

/// Red to purple: a bijection `TrSSYT(g, r) → SYT^180(g, r)` whose image is
/// the complement of the red shape in the `(r+1) × g` rectangle.
pub fn phi(red: &RedTableau) -> Result<PurpleTableau> {
    if red.i != red.r {
        return Err(Error::param(format!("phi needs content (r^g), got ({}^{})", red.i, red.g)));
    }
    let q = upright(place_in_missing_rows(red)?)?;
    let purple = rotate180(&q, Bounds::new(red.r + 1, red.g))?;
    PurpleTableau::new(purple, red.r).map_err(|e| Error::Invariant(format!("phi produced an invalid tableau: {e}")))
}

/// Rebuilds the red tableau by undoing the placements for `g, g-1, …, 1`.
pub fn phi_inverse(purple: &PurpleTableau) -> Result<RedTableau> {
    let (g, r) = (purple.g(), purple.r);
    // Rows of the placed tableau, bottom first, right to left.
    let mut placed: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for (k, row) in purple.filling.rows().iter().enumerate() {
        placed[r - k] = row.clone();
    }
    let mut red_rows: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for label in (1..=g as u32).rev() {
        for (row, red_row) in placed.iter_mut().zip(red_rows.iter_mut()) {
            if row.last() == Some(&label) {
                row.pop();
            } else {
                red_row.push(label);
            }
        }
    }
    if placed.iter().any(|row| !row.is_empty()) {
        return Err(Error::Invariant("purple labels out of placement order".into()));
    }
    for row in &mut red_rows {
        row.reverse();
    }
    while red_rows.last().is_some_and(Vec::is_empty) {
        red_rows.pop();
    }
    let red = RedTableau::new(Filling::straight(red_rows)?, g, r, r)?;
    if phi(&red)? != *purple {
        return Err(Error::Invariant("phi does not return the given purple tableau".into()));
    }
    Ok(red)
}

/// `TrSSYT(g, r, i) → TrSSYT(g, r, r+1-i)`: place a vertical strip of each
/// letter in the rows lacking it, then rotate upright.
pub fn phi_i(red: &RedTableau) -> Result<RedTableau> {
    if red.i == 0 || red.i > red.r {
        return Err(Error::param(format!("phi_i needs 1 <= i <= r, got i={}, r={}", red.i, red.r)));
    }
    let out = upright(place_in_missing_rows(red)?)?;
    RedTableau::new(out, red.g, red.r, red.r + 1 - red.i)
        .map_err(|e| Error::Invariant(format!("phi_i produced an invalid tableau: {e}")))
}

/// Every tableau in `TrSSYT(g, r, i)`.
pub fn enumerate_trssyt(g: usize, r: usize, i: usize) -> Vec<RedTableau> {
    let limit = Bounds::new(r + 1, g).rectangle();
    let content = vec![i; g];
    fill_by_strips(&Partition::empty(), FillingKind::Transposed, 1..=g as u32, Some(&content), &limit, None)
        .into_iter()
        .map(|filling| RedTableau { filling, g, r, i })
        .collect()
}

fn enumerate_with_blue_alphabet(g: usize, r: usize, d: usize, max_blue: u32) -> Vec<LTableau> {
    if d < r {
        return Vec::new();
    }
    let rect = Bounds::new(r + 1, d - r).rectangle();
    let content = vec![r; g];
    let reds = fill_by_strips(&Partition::empty(), FillingKind::Transposed, 1..=g as u32, Some(&content), &rect, None);
    reds.par_iter()
        .flat_map_iter(|red| {
            let shape = SkewShape::new(rect.clone(), red.shape().outer().clone()).expect("red fits the grid");
            enumerate_fillings(&shape, FillingKind::Ssyt, 0..=max_blue, None).into_iter().map(move |blue| {
                LTableau::from_parts(g, r, d, red, &blue).expect("strip recursion yields valid tableaux")
            })
        })
        .collect()
}

/// All L-tableaux with parameters `(g, r, d)`: red tableaux by vertical-strip
/// recursion, then blue fillings of each complement by horizontal strips.
pub fn enumerate_l(g: usize, r: usize, d: usize) -> Vec<LTableau> {
    enumerate_with_blue_alphabet(g, r, d, r as u32)
}

/// L-tableaux with parameters `(g, r, g+r)` whose blue entries are at most `r - i`.
pub fn enumerate_restricted_l(g: usize, r: usize, i: usize) -> Result<Vec<LTableau>> {
    if i > r {
        return Err(Error::param(format!("need i <= r, got i={i}, r={r}")));
    }
    Ok(enumerate_with_blue_alphabet(g, r, g + r, (r - i) as u32))
}

/// Drops the columns right of column `g`, each of which must read
/// `0, 1, …, r` bottom to top in blue.
pub fn truncate(t: &LTableau) -> Result<LTableau> {
    let (g, r, d) = (t.g, t.r, t.d);
    if d < g + r {
        return Err(Error::param(format!("truncation needs d >= g+r, got g={g}, r={r}, d={d}")));
    }
    for col in g + 1..=d - r {
        for row in 1..=r + 1 {
            let b = BoxCoord::new(row, col);
            if t.grid.get(b) != Some(Cell::Blue(row as u32 - 1)) {
                return Err(Error::Invariant(format!("column {col} is not the forced blue column at {b}")));
            }
        }
    }
    let rows = t.grid.rows().iter().map(|row| row[..g].to_vec()).collect();
    LTableau::new(g, r, g + r, Grid::new(rows)?)
}

/// Inverse of [`truncate`]: appends forced blue columns up to width `d - r`.
pub fn pad_to(t: &LTableau, d: usize) -> Result<LTableau> {
    if t.d != t.g + t.r || d < t.d {
        return Err(Error::param(format!("padding needs a truncated tableau and d >= {}", t.d)));
    }
    let rows = t
        .grid
        .rows()
        .iter()
        .enumerate()
        .map(|(k, row)| {
            let mut row = row.clone();
            row.resize(d - t.r, Cell::Blue(k as u32));
            row
        })
        .collect();
    LTableau::new(t.g, t.r, d, Grid::new(rows)?)
}

/// The pair `(P, Q)` attached to a truncated L-tableau.
pub fn l_to_rsk_pair(t: &LTableau) -> Result<RskPair> {
    let (g, r) = (t.g, t.r);
    if t.d != g + r {
        return Err(Error::param(format!("need d = g+r, got g={g}, r={r}, d={}", t.d)));
    }
    let purple = phi(&t.red())?;
    let blue = t.blue();
    let blue_cells: BTreeMap<BoxCoord, u32> = blue.filling.placed_cells().into_iter().collect();
    let purple_cells: BTreeSet<BoxCoord> = purple.filling.placed_cells().into_iter().map(|(b, _)| b).collect();
    if !blue_cells.keys().copied().eq(purple_cells.iter().copied()) {
        return Err(Error::Invariant("blue and purple shapes differ".into()));
    }
    let box_ = Bounds::new(r + 1, g);
    let q = rotate180(&purple.filling, box_)?;
    let rotated = blue_cells.into_iter().map(|(b, v)| (BoxCoord::new(r + 2 - b.row, g + 1 - b.col), v));
    let p = invert_alphabet(&Filling::from_cells(rotated)?, r as u32)?;
    Ok(RskPair { p, q })
}

/// The word of length `g` over `{0, …, r}` attached to an L-tableau with `d = g + r`.
pub fn l_to_word(t: &LTableau) -> Result<Word> {
    rsk_inverse(&l_to_rsk_pair(t)?, t.r as u32)
}

/// Inverse of [`l_to_word`]; the result has `d = g + r` with `g = |w|`.
pub fn word_to_l(w: &Word) -> Result<LTableau> {
    let (g, r) = (w.len(), w.r() as usize);
    let pair = rsk_insert(w);
    let box_ = Bounds::new(r + 1, g);
    let purple = PurpleTableau::new(rotate180(&pair.q, box_)?, r)?;
    let red = phi_inverse(&purple)?;
    let inverted = invert_alphabet(&pair.p, r as u32)?;
    let blue = Filling::from_cells(inverted.entries().map(|(b, v)| (BoxCoord::new(r + 2 - b.row, g + 1 - b.col), v)))?;
    LTableau::from_parts(g, r, g + r, &red.filling, &blue)
}

/// Removes the bottom `i` rows of a restricted tableau (blue entries at most
/// `r - i`); each must be the full red row `1, …, g`. The result has
/// parameters `(g, r-i, g+r-i)`, i.e. the same width `g`.
pub fn strip_bottom_rows(t: &LTableau, i: usize) -> Result<LTableau> {
    let (g, r) = (t.g, t.r);
    if t.d != g + r || i > r {
        return Err(Error::param(format!("need d = g+r and i <= r, got (g,r,d,i)=({g},{r},{},{i})", t.d)));
    }
    if let Some(m) = t.max_blue() {
        if m as usize > r - i {
            return Err(Error::validation("blue entries at most r-i", None, format!("blue {m} > {}", r - i)));
        }
    }
    for row in 0..i {
        for (col, &c) in t.grid.rows()[row].iter().enumerate() {
            if c != Cell::Red(col as u32 + 1) {
                return Err(Error::Invariant(format!("row {} is not the full red row 1..{g}", row + 1)));
            }
        }
    }
    let rows = t.grid.rows()[i..].to_vec();
    let rows = if rows.iter().all(Vec::is_empty) && g == 0 { vec![Vec::new(); r + 1 - i] } else { rows };
    LTableau::new(g, r - i, g + r - i, Grid::new(rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(rows: &[&[u32]]) -> Filling {
        Filling::straight(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn grid(rows: &[&[Cell]]) -> Grid {
        Grid::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    use Cell::{Blue as B, Red as R};

    #[test]
    fn zero_genus_has_one_tableau() {
        let all = enumerate_l(0, 1, 1);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].grid().width(), 0);
        assert_eq!(enumerate_l(0, 2, 4).len(), 1);
        assert_eq!(enumerate_l(2, 1, 3).len(), 4);
    }

    #[test]
    fn validation_pinpoints_cells() {
        // Blue column 1 over 1 is not strictly increasing.
        let bad = grid(&[&[R(1), B(1)], &[B(0), B(1)]]);
        let err = LTableau::new(1, 1, 3, bad).unwrap_err();
        assert!(matches!(err, Error::Validation { at: Some(b), .. } if b == BoxCoord::new(1, 2)), "{err}");
        let gray = grid(&[&[R(1), Cell::Gray], &[R(1), B(1)]]);
        assert!(LTableau::new(1, 1, 3, gray).is_err());
    }

    #[test]
    fn phi_single_letter() {
        for r in 1..=3 {
            let column: Vec<&[u32]> = vec![&[1]; r];
            let red = RedTableau::new(f(&column), 1, r, r).unwrap();
            let purple = phi(&red).unwrap();
            assert_eq!(purple.filling().placed_cells(), vec![(BoxCoord::new(r + 1, 1), 1)]);
            assert_eq!(phi_inverse(&purple).unwrap(), red);
        }
    }

    #[test]
    fn red_validation() {
        assert!(RedTableau::new(f(&[&[1, 2], &[1, 2]]), 2, 1, 2).is_ok());
        assert!(RedTableau::new(f(&[&[1, 2], &[1, 2]]), 2, 2, 1).is_err());
        assert!(RedTableau::new(f(&[&[1], &[1], &[1]]), 1, 1, 3).is_err(), "too tall");
    }

    #[test]
    fn truncate_and_pad_are_inverse() {
        for t in enumerate_l(2, 2, 6) {
            let short = truncate(&t).unwrap();
            assert_eq!(short.d(), 4);
            assert_eq!(pad_to(&short, 6).unwrap(), t);
        }
        let t = &enumerate_l(2, 1, 3)[0];
        assert_eq!(&truncate(t).unwrap(), t);
    }

    #[test]
    fn all_zero_word() {
        let w = Word::new(vec![0, 0], 1).unwrap();
        let t = word_to_l(&w).unwrap();
        // P = [0,0] inverts to [1,1]; rotated it fills the top row.
        assert_eq!(t.grid(), &grid(&[&[R(1), R(2)], &[B(1), B(1)]]));
        assert_eq!(l_to_word(&t).unwrap(), w);
    }

    #[test]
    fn restricted_extremes() {
        assert_eq!(enumerate_restricted_l(3, 2, 0).unwrap(), enumerate_l(3, 2, 5));
        let only = enumerate_restricted_l(3, 2, 2).unwrap();
        assert_eq!(only.len(), 1);
        assert_eq!(only[0].max_blue(), Some(0));
        assert_eq!(enumerate_restricted_l(2, 2, 1).unwrap().len(), 4);
        assert!(enumerate_restricted_l(2, 2, 3).is_err());
    }

    #[test]
    fn strip_rows_identity_and_image() {
        for t in enumerate_restricted_l(2, 2, 0).unwrap() {
            assert_eq!(strip_bottom_rows(&t, 0).unwrap(), t);
        }
        let images: BTreeSet<LTableau> =
            enumerate_restricted_l(2, 2, 1).unwrap().iter().map(|t| strip_bottom_rows(t, 1).unwrap()).collect();
        assert_eq!(images.len(), 4);
        assert!(images.iter().all(|t| t.r() == 1 && t.grid().height() == 2 && t.grid().width() == 2));
    }
}
