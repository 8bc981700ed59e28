//! Fixtures shared by the integration tests: the worked examples, written
//! top row first as they are drawn.

#![allow(dead_code)]

use ltab::grid::{Cell, Grid};
use ltab::tableau::Filling;

/// Parses tokens `r3`, `b0`, `##` (gray). Rows are given top row first.
pub fn grid(top_first: &[&str]) -> Grid {
    let rows = top_first
        .iter()
        .rev()
        .map(|line| {
            line.split_whitespace()
                .map(|t| match (&t[..1], &t[1..]) {
                    ("r", v) => Cell::Red(v.parse().unwrap()),
                    ("b", v) => Cell::Blue(v.parse().unwrap()),
                    ("#", _) => Cell::Gray,
                    _ => panic!("bad token {t}"),
                })
                .collect()
        })
        .collect();
    Grid::new(rows).unwrap()
}

/// A straight filling from rows given bottom row first.
pub fn filling(bottom_first: &[&[u32]]) -> Filling {
    Filling::straight(bottom_first.iter().map(|r| r.to_vec()).collect()).unwrap()
}

pub fn example_l_4_3_9() -> Grid {
    grid(&["r2 r4 b1 b3 b3 b3", "r1 r3 r4 b1 b2 b2", "r1 r2 r3 b0 b1 b1", "r1 r2 r3 r4 b0 b0"])
}

pub fn example_red_7_3() -> Filling {
    filling(&[&[1, 2, 3, 4, 6, 7], &[1, 2, 3, 5, 6, 7], &[1, 3, 4, 5, 7], &[2, 4, 5, 6]])
}

/// The purple image of [`example_red_7_3`], stored upright.
pub fn example_purple_7_3() -> Filling {
    filling(&[&[1, 3, 7], &[2, 6], &[4], &[5]])
}

/// The (7,3,10) L-tableau built on [`example_red_7_3`].
pub fn example_l_7_3_10() -> Grid {
    grid(&["r2 r4 r5 r6 b0 b2 b3", "r1 r3 r4 r5 r7 b1 b2", "r1 r2 r3 r5 r6 r7 b1", "r1 r2 r3 r4 r6 r7 b0"])
}

/// The same grid with the bottom red row exactly as typeset, which repeats
/// the second row and so has only two 4's.
pub fn example_l_7_3_10_as_printed() -> Grid {
    grid(&["r2 r4 r5 r6 b0 b2 b3", "r1 r3 r4 r5 r7 b1 b2", "r1 r2 r3 r5 r6 r7 b1", "r1 r2 r3 r5 r6 r7 b0"])
}

pub fn example_l_5_1_6() -> Grid {
    grid(&["r3 b0 b1 b1 b1", "r1 r2 r4 r5 b0"])
}

pub fn example_lprime_positive() -> Grid {
    grid(&["r3 b0 b1 ## ## ##", "r1 r2 b0 b0 b1 b1"])
}

pub fn example_lprime_negative() -> Grid {
    grid(&["r3 b0 b1 ## ##", "r1 r2 b0 b0 b1"])
}

pub fn example_lprime_reduced() -> Grid {
    grid(&["r3 b0 b1 ## ## ##", "r1 r2 b0 b0 b0 b0"])
}

pub fn figure_phi3_source() -> Filling {
    filling(&[&[1, 2, 3, 4], &[1, 3, 4], &[1, 3, 5], &[2, 4, 5], &[2, 5]])
}

/// Upright reading of the rotated image in the figure.
pub fn figure_phi3_image() -> Filling {
    filling(&[&[1, 3, 4], &[1, 3], &[2, 4], &[2, 5], &[5]])
}

pub fn castelnuovo_red_10_4() -> Filling {
    filling(&[
        &[1, 2, 3, 4, 5, 6, 8, 9],
        &[1, 2, 3, 4, 6, 7, 8, 10],
        &[1, 2, 4, 5, 6, 7, 9, 10],
        &[1, 3, 4, 5, 7, 8, 9, 10],
        &[2, 3, 5, 6, 7, 8, 9, 10],
    ])
}

pub fn castelnuovo_purple_10_4() -> Filling {
    filling(&[&[1, 4], &[2, 6], &[3, 8], &[5, 9], &[7, 10]])
}
