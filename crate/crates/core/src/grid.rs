//! Rectangular grids of coloured cells, the common home of L- and L′-tableaux.

use std::fmt;

use crate::error::{Error, Result};
use crate::shapes::{BoxCoord, Partition};
use crate::tableau::Filling;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cell {
    Red(u32),
    Blue(u32),
    Gray,
    Empty,
}

impl Cell {
    pub fn is_red(self) -> bool {
        matches!(self, Cell::Red(_))
    }

    pub fn is_blue(self) -> bool {
        matches!(self, Cell::Blue(_))
    }
}

/// Cells indexed bottom row first, French convention.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grid {
    height: usize,
    width: usize,
    rows: Vec<Vec<Cell>>,
}

impl Grid {
    pub fn new(rows: Vec<Vec<Cell>>) -> Result<Self> {
        let width = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|r| r.len() != width) {
            return Err(Error::validation(
                "grid is rectangular",
                Some(BoxCoord::new(i + 1, 1)),
                format!("row {} has {} cells, expected {width}", i + 1, rows[i].len()),
            ));
        }
        Ok(Grid { height: rows.len(), width, rows })
    }

    pub fn filled(height: usize, width: usize, cell: Cell) -> Self {
        Grid { height, width, rows: vec![vec![cell; width]; height] }
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn get(&self, b: BoxCoord) -> Option<Cell> {
        self.rows.get(b.row.checked_sub(1)?)?.get(b.col.checked_sub(1)?).copied()
    }

    pub fn set(&mut self, b: BoxCoord, cell: Cell) {
        self.rows[b.row - 1][b.col - 1] = cell;
    }

    pub fn cells(&self) -> impl Iterator<Item = (BoxCoord, Cell)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &c)| (BoxCoord::new(i + 1, j + 1), c)))
    }

    /// Writes a filling's placed cells with the given colour.
    pub(crate) fn paint(&mut self, f: &Filling, colour: fn(u32) -> Cell) -> Result<()> {
        for (b, v) in f.placed_cells() {
            if b.row > self.height || b.col > self.width {
                return Err(Error::Dimension { rows: self.height, cols: self.width });
            }
            self.set(b, colour(v));
        }
        Ok(())
    }

    /// Shape of the red cells, which must be left- and bottom-justified.
    pub fn red_shape(&self) -> Result<Partition> {
        let mut lens = Vec::with_capacity(self.height);
        for (i, row) in self.rows.iter().enumerate() {
            let len = row.iter().take_while(|c| c.is_red()).count();
            if let Some(j) = row[len..].iter().position(|c| c.is_red()) {
                return Err(Error::validation(
                    "red cells are left-justified",
                    Some(BoxCoord::new(i + 1, len + j + 1)),
                    "red cell to the right of a non-red cell",
                ));
            }
            lens.push(len);
        }
        Partition::new(lens.clone()).map_err(|_| {
            let k = lens.windows(2).position(|w| w[0] < w[1]).unwrap_or(0);
            Error::validation(
                "red cells are bottom-justified",
                Some(BoxCoord::new(k + 2, lens[k + 1])),
                "row longer than the row below",
            )
        })
    }

    /// The red cells as a straight filling.
    pub fn red_filling(&self) -> Result<Filling> {
        let shape = self.red_shape()?;
        let rows = (0..shape.len())
            .map(|i| {
                self.rows[i][..shape.part(i)]
                    .iter()
                    .map(|c| match c {
                        Cell::Red(v) => *v,
                        _ => unreachable!("red prefix"),
                    })
                    .collect()
            })
            .collect();
        Filling::straight(rows)
    }

    /// The blue cells as a skew filling; they must form contiguous row
    /// segments, each starting right after the red prefix.
    pub fn blue_filling(&self) -> Result<Filling> {
        let red = self.red_shape()?;
        let mut rows = Vec::with_capacity(self.height);
        for (i, row) in self.rows.iter().enumerate() {
            let start = red.part(i);
            let vals: Vec<u32> = row[start..]
                .iter()
                .map_while(|c| match c {
                    Cell::Blue(v) => Some(*v),
                    _ => None,
                })
                .collect();
            if let Some(j) = row[start + vals.len()..].iter().position(|c| c.is_blue()) {
                return Err(Error::validation(
                    "blue cells are contiguous after the red cells",
                    Some(BoxCoord::new(i + 1, start + vals.len() + j + 1)),
                    "blue cell separated from the blue region",
                ));
            }
            rows.push(vals);
        }
        while rows.last().is_some_and(|r| r.is_empty()) && rows.len() > red.len() {
            rows.pop();
        }
        Filling::skew(red, rows)
    }
}

impl fmt::Display for Grid {
    /// Top row first, one token per cell: `r3` red, `b0` blue, `##` gray, `..` empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| match c {
                        Cell::Red(v) => format!("r{v}"),
                        Cell::Blue(v) => format!("b{v}"),
                        Cell::Gray => "##".to_string(),
                        Cell::Empty => "..".to_string(),
                    })
                    .collect()
            })
            .collect();
        let w = tokens.iter().flatten().map(String::len).max().unwrap_or(2);
        for row in tokens.iter().rev() {
            let line: Vec<String> = row.iter().map(|t| format!("{t:>w$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}
