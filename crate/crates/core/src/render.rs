//! Plain-text and `ytableau` renderings. Both print the top row first, as
//! the diagrams are drawn.

use crate::grid::{Cell, Grid};
use crate::shapes::BoxCoord;
use crate::tableau::{Filling, Orientation};

pub fn grid_ascii(g: &Grid) -> String {
    g.to_string()
}

fn latex_cell(c: Cell) -> String {
    match c {
        Cell::Red(v) => format!(r"*(white!80!red) \color{{black}} {v}"),
        Cell::Blue(v) => format!(r"\color{{blue}} {v}"),
        Cell::Gray => r"*(white!80!black)".to_string(),
        Cell::Empty => r"\none".to_string(),
    }
}

fn latex_rows(rows: Vec<Vec<String>>) -> String {
    let mut out = String::from("\\begin{ytableau}\n");
    let n = rows.len();
    for (k, row) in rows.into_iter().enumerate() {
        out.push(' ');
        out.push_str(&row.join(" & "));
        if k + 1 < n {
            out.push_str(r" \\");
        }
        out.push('\n');
    }
    out.push_str("\\end{ytableau}\n");
    out
}

/// A `ytableau` body with the red/blue/gray colouring of the figures.
pub fn grid_latex(g: &Grid) -> String {
    latex_rows(g.rows().iter().rev().map(|row| row.iter().map(|&c| latex_cell(c)).collect()).collect())
}

/// Cells of a filling as placed in the plane, `None` where the bounding
/// rectangle has no box.
fn placed_matrix(f: &Filling) -> Vec<Vec<Option<u32>>> {
    let cells = f.placed_cells();
    let (h, w) = match f.orientation() {
        Orientation::Rotated180 { rows, cols } => (rows, cols),
        Orientation::Standard => (f.shape().outer().len(), f.shape().outer().width()),
    };
    let mut m = vec![vec![None; w]; h];
    for (BoxCoord { row, col }, v) in cells {
        m[row - 1][col - 1] = Some(v);
    }
    m
}

/// Top row first; `.` marks positions outside the shape.
pub fn filling_ascii(f: &Filling) -> String {
    let m = placed_matrix(f);
    let width = f.max_entry().map_or(1, |v| v.to_string().len());
    let mut out = String::new();
    for row in m.iter().rev() {
        let mut cells: Vec<String> = row.iter().map(|c| c.map_or(".".to_string(), |v| v.to_string())).collect();
        if matches!(f.orientation(), Orientation::Standard) {
            while cells.last().is_some_and(|c| c == ".") {
                cells.pop();
            }
        }
        let line: Vec<String> = cells.iter().map(|c| format!("{c:>width$}")).collect();
        out.push_str(line.join(" ").trim_end());
        out.push('\n');
    }
    out
}

pub fn filling_latex(f: &Filling) -> String {
    let rows = placed_matrix(f)
        .into_iter()
        .rev()
        .map(|row| {
            let mut cells: Vec<String> =
                row.into_iter().map(|c| c.map_or(r"\none".to_string(), |v| v.to_string())).collect();
            while cells.last().is_some_and(|c| c == r"\none") {
                cells.pop();
            }
            cells
        })
        .collect();
    latex_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::Bounds;
    use crate::tableau::rotate180;
    use Cell::{Blue as B, Gray as G, Red as R};

    #[test]
    fn grid_renderings() {
        let g = Grid::new(vec![vec![R(1), R(2), B(0)], vec![R(3), B(1), G]]).unwrap();
        assert_eq!(grid_ascii(&g), "r3 b1 ##\nr1 r2 b0\n");
        let tex = grid_latex(&g);
        assert_eq!(
            tex,
            "\\begin{ytableau}\n *(white!80!red) \\color{black} 3 & \\color{blue} 1 & *(white!80!black) \\\\\n *(white!80!red) \\color{black} 1 & *(white!80!red) \\color{black} 2 & \\color{blue} 0\n\\end{ytableau}\n"
        );
    }

    #[test]
    fn filling_renderings() {
        let f = Filling::straight(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(filling_ascii(&f), "3\n1 2\n");
        let rot = rotate180(&f, Bounds::new(2, 3)).unwrap();
        assert_eq!(filling_ascii(&rot), ". 2 1\n. . 3\n");
        assert!(filling_latex(&rot).contains(r"\none & 2 & 1 \\"));
    }
}
