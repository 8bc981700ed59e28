//! Positive and negative L′-tableaux for `r = 1`, the column-appending map ψ,
//! and the bijection between reduced positive tableaux and binary words.
//!
//! A tableau fills a two-row grid with a red SYT of size `g` in the lower
//! left, gray boxes at the right end of the top row, and a blue SSYT over
//! `{0, 1}` on the rest. Positive grids have width `d-1` and `k-1` gray
//! boxes; negative grids have width `d-2` and `k-2` gray boxes.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::pieri::integral_lprime;
use crate::rsk::{rsk_insert, rsk_inverse, RskPair, Word};
use crate::shapes::{BoxCoord, Partition, SkewShape};
use crate::tableau::{
    check_ssyt, check_syt, enumerate_fillings, fill_by_strips, invert_alphabet, Filling, FillingKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// Grid width and number of gray boxes.
    pub fn dimensions(self, d: usize, k: usize) -> Option<(usize, usize)> {
        match self {
            Sign::Positive => Some((d.checked_sub(1)?, k.checked_sub(1)?)),
            Sign::Negative => Some((d.checked_sub(2)?, k.checked_sub(2)?)),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "positive",
            Sign::Negative => "negative",
        })
    }
}

fn check_params(d: usize, k: usize) -> Result<()> {
    if k < 2 || k > d {
        return Err(Error::param(format!("need 2 <= k <= d, got d={d}, k={k}")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LPrimeTableau {
    sign: Sign,
    g: usize,
    d: usize,
    k: usize,
    grid: Grid,
}

impl LPrimeTableau {
    pub fn new(sign: Sign, g: usize, d: usize, k: usize, grid: Grid) -> Result<Self> {
        check_params(d, k)?;
        let (width, gray) = sign.dimensions(d, k).expect("checked parameters");
        if grid.height() != 2 || grid.width() != width {
            return Err(Error::validation(
                "grid is 2 x W",
                None,
                format!("got {}x{}, expected 2x{width}", grid.height(), grid.width()),
            ));
        }
        for (b, c) in grid.cells() {
            let should_be_gray = b.row == 2 && b.col + gray > width;
            if (c == Cell::Gray) != should_be_gray {
                let detail = if should_be_gray { "expected gray" } else { "unexpected gray" };
                return Err(Error::validation("gray cells are the rightmost top-row boxes", Some(b), detail));
            }
            if c == Cell::Empty {
                return Err(Error::validation("every cell is red, blue or gray", Some(b), "empty cell"));
            }
        }
        let red = grid.red_filling()?;
        if red.size() != g {
            return Err(Error::validation("red tableau has size g", None, format!("size {}, g = {g}", red.size())));
        }
        check_syt(&red)?;
        let blue = grid.blue_filling()?;
        if let Some((b, v)) = blue.entries().find(|&(_, v)| v > 1) {
            return Err(Error::validation("blue entries lie in {0, 1}", Some(b), format!("{v} > 1")));
        }
        check_ssyt(&blue)?;
        Ok(LPrimeTableau { sign, g, d, k, grid })
    }

    fn from_parts(sign: Sign, g: usize, d: usize, k: usize, red: &Filling, blue: &Filling) -> Result<Self> {
        let (width, gray) = sign.dimensions(d, k).expect("checked parameters");
        let mut grid = Grid::filled(2, width, Cell::Empty);
        for col in width - gray + 1..=width {
            grid.set(BoxCoord::new(2, col), Cell::Gray);
        }
        grid.paint(red, Cell::Red)?;
        grid.paint(blue, Cell::Blue)?;
        LPrimeTableau::new(sign, g, d, k, grid)
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn red(&self) -> Filling {
        self.grid.red_filling().expect("validated on construction")
    }

    pub fn blue(&self) -> Filling {
        self.grid.blue_filling().expect("validated on construction")
    }

    fn bottom_has_blue_one(&self) -> bool {
        self.grid.rows()[0].contains(&Cell::Blue(1))
    }
}

/// All tableaux of one sign, red SYTs by strip recursion and then blue
/// fillings of each complement.
pub fn enumerate_lprime(g: usize, d: usize, k: usize, sign: Sign) -> Result<Vec<LPrimeTableau>> {
    check_params(d, k)?;
    let Some((width, gray)) = sign.dimensions(d, k) else {
        return Ok(Vec::new());
    };
    if gray > width {
        return Ok(Vec::new());
    }
    let outer = Partition::new(vec![width, width - gray])?;
    let reds = fill_by_strips(&Partition::empty(), FillingKind::Ssyt, 1..=g as u32, Some(&vec![1; g]), &outer, None);
    Ok(reds
        .par_iter()
        .flat_map_iter(|red| {
            let shape = SkewShape::new(outer.clone(), red.shape().outer().clone()).expect("red fits");
            enumerate_fillings(&shape, FillingKind::Ssyt, 0..=1, None).into_iter().map(move |blue| {
                LPrimeTableau::from_parts(sign, g, d, k, red, &blue).expect("strip recursion yields valid tableaux")
            })
        })
        .collect())
}

/// Appends a column with a blue 1 below a gray box.
pub fn psi(t: &LPrimeTableau) -> Result<LPrimeTableau> {
    if t.sign != Sign::Negative {
        return Err(Error::validation("psi takes a negative tableau", None, "got a positive tableau"));
    }
    let mut rows = t.grid.rows().to_vec();
    rows[0].push(Cell::Blue(1));
    rows[1].push(Cell::Gray);
    LPrimeTableau::new(Sign::Positive, t.g, t.d, t.k, Grid::new(rows)?)
}

/// Whether a positive tableau lies in the image of [`psi`]: exactly when its
/// bottom row holds a blue 1.
pub fn is_psi_image(t: &LPrimeTableau) -> bool {
    t.sign == Sign::Positive && t.bottom_has_blue_one()
}

/// The unique negative tableau mapped to `t` by [`psi`], if any.
pub fn psi_preimage(t: &LPrimeTableau) -> Option<LPrimeTableau> {
    if !is_psi_image(t) {
        return None;
    }
    let mut rows = t.grid.rows().to_vec();
    rows[0].pop();
    rows[1].pop();
    LPrimeTableau::new(Sign::Negative, t.g, t.d, t.k, Grid::new(rows).ok()?).ok()
}

/// The three computations of the signed count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LPrimeCount {
    pub positive: usize,
    pub negative: usize,
    /// Positives without a blue 1 in the bottom row.
    pub reduced: usize,
    /// The intersection-number oracle, absent when `k + g > 2d + 1`.
    pub integral: Option<BigInt>,
}

impl LPrimeCount {
    pub fn difference(&self) -> BigInt {
        BigInt::from(self.positive) - BigInt::from(self.negative)
    }
}

pub fn count_lprime_details(g: usize, d: usize, k: usize) -> Result<LPrimeCount> {
    let pos = enumerate_lprime(g, d, k, Sign::Positive)?;
    let neg = enumerate_lprime(g, d, k, Sign::Negative)?;
    let reduced = pos.iter().filter(|t| !is_psi_image(t)).count();
    let integral = if k + g <= 2 * d + 1 { Some(integral_lprime(g, d, k)?) } else { None };
    Ok(LPrimeCount { positive: pos.len(), negative: neg.len(), reduced, integral })
}

/// `|positives| - |negatives|`, after checking that the reduced count and the
/// integral agree with it.
pub fn count_lprime(g: usize, d: usize, k: usize) -> Result<BigInt> {
    let c = count_lprime_details(g, d, k)?;
    let diff = c.difference();
    if diff != BigInt::from(c.reduced) || c.integral.as_ref().is_some_and(|i| *i != diff) {
        return Err(Error::Invariant(format!("counting routes disagree for (g,d,k)=({g},{d},{k}): {c:?}")));
    }
    Ok(diff)
}

fn check_binary_regime(g: usize, d: usize, k: usize) -> Result<()> {
    check_params(d, k)?;
    if d < g + k {
        return Err(Error::param(format!("need d >= g+k, got g={g}, d={d}, k={k}")));
    }
    Ok(())
}

/// The RSK pair read off the first `g` columns: red gives `Q`; blue rotated
/// and with 0 and 1 swapped gives `P`.
pub fn lprime_to_rsk_pair(t: &LPrimeTableau) -> Result<RskPair> {
    let (g, d, k) = (t.g, t.d, t.k);
    check_binary_regime(g, d, k)?;
    if t.sign != Sign::Positive {
        return Err(Error::validation("tableau is positive", None, "got a negative tableau"));
    }
    if let Some(col) = t.grid.rows()[0].iter().position(|&c| c == Cell::Blue(1)) {
        return Err(Error::validation("no blue 1 in the bottom row", Some(BoxCoord::new(1, col + 1)), "blue 1"));
    }
    let q = t.red();
    let rotated = t
        .blue()
        .entries()
        .filter(|(b, _)| b.col <= g)
        .map(|(b, v)| (BoxCoord::new(3 - b.row, g + 1 - b.col), v))
        .collect::<Vec<_>>();
    let p = invert_alphabet(&Filling::from_cells(rotated)?, 1)?;
    Ok(RskPair { p, q })
}

pub fn lprime_to_binary(t: &LPrimeTableau) -> Result<Word> {
    rsk_inverse(&lprime_to_rsk_pair(t)?, 1)
}

/// Inverse of [`lprime_to_binary`]: the first `g` columns come from RSK, the
/// rest are forced (blue 0 under gray, blue 0 below blue 1 elsewhere).
pub fn binary_to_lprime(w: &Word, d: usize, k: usize) -> Result<LPrimeTableau> {
    let g = w.len();
    check_binary_regime(g, d, k)?;
    if w.r() != 1 {
        return Err(Error::param(format!("expected a binary word, got alphabet 0..={}", w.r())));
    }
    let pair = rsk_insert(w);
    let width = d - 1;
    let gray_start = width - (k - 1) + 1;
    let mut grid = Grid::filled(2, width, Cell::Empty);
    grid.paint(&pair.q, Cell::Red)?;
    for (b, v) in invert_alphabet(&pair.p, 1)?.entries() {
        grid.set(BoxCoord::new(3 - b.row, g + 1 - b.col), Cell::Blue(v));
    }
    for col in g + 1..=width {
        grid.set(BoxCoord::new(1, col), Cell::Blue(0));
        let top = if col >= gray_start { Cell::Gray } else { Cell::Blue(1) };
        grid.set(BoxCoord::new(2, col), top);
    }
    LPrimeTableau::new(Sign::Positive, g, d, k, grid)
}

/// Closed form `2^g`, valid when `d >= g + k`.
pub fn lprime_prediction(g: usize) -> BigInt {
    BigInt::from(1) << g
}
