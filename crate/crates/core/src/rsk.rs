//! Robinson–Schensted–Knuth insertion for words over `{0, …, r}`.
//!
//! A word of length `n` maps to a pair `(P, Q)` of equal shape where `P` is
//! semistandard over `{0, …, r}` and `Q` is standard, recording the step at
//! which each box appeared.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::BoxCoord;
use crate::tableau::{check_ssyt, check_syt, Filling};

/// A finite sequence over `{0, …, r}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WordRepr", into = "WordRepr")]
pub struct Word {
    r: u32,
    letters: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct WordRepr {
    r: u32,
    letters: Vec<u32>,
}

impl TryFrom<WordRepr> for Word {
    type Error = Error;
    fn try_from(w: WordRepr) -> Result<Self> {
        Word::new(w.letters, w.r)
    }
}

impl From<Word> for WordRepr {
    fn from(w: Word) -> Self {
        WordRepr { r: w.r, letters: w.letters }
    }
}

impl Word {
    pub fn new(letters: impl Into<Vec<u32>>, r: u32) -> Result<Self> {
        let letters = letters.into();
        if let Some(&bad) = letters.iter().find(|&&l| l > r) {
            return Err(Error::Alphabet { value: bad, max: r });
        }
        Ok(Word { r, letters })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    /// Largest permitted letter.
    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// All `(r+1)^n` words of length `n`, in lexicographic order.
    pub fn all(r: u32, n: usize) -> impl Iterator<Item = Word> {
        let base = r as u64 + 1;
        let total = base.pow(n as u32);
        (0..total).map(move |mut code| {
            let mut letters = vec![0; n];
            for slot in letters.iter_mut().rev() {
                *slot = (code % base) as u32;
                code /= base;
            }
            Word { r, letters }
        })
    }
}

/// Insertion tableau `p` and recording tableau `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RskPair {
    pub p: Filling,
    pub q: Filling,
}

impl RskPair {
    /// Checks shape equality, standardness of `q`, semistandardness of `p`,
    /// reporting each failure under its own invariant name.
    pub fn validate(&self) -> Result<()> {
        if !self.p.shape().is_straight() || self.p.shape() != self.q.shape() {
            return Err(Error::validation(
                "P and Q have the same straight shape",
                None,
                format!("P has shape {}, Q has shape {}", self.p.shape(), self.q.shape()),
            ));
        }
        check_syt(&self.q).map_err(|e| rename(e, "Q is standard"))?;
        check_ssyt(&self.p).map_err(|e| rename(e, "P is semistandard"))?;
        Ok(())
    }
}

fn rename(e: Error, invariant: &'static str) -> Error {
    match e {
        Error::Validation { invariant: inner, at, detail } => {
            Error::Validation { invariant, at, detail: format!("{inner}: {detail}") }
        }
        other => other,
    }
}

/// Row-inserts the letters in order. Each letter bumps the leftmost entry of
/// the row strictly greater than it.
pub fn rsk_insert(w: &Word) -> RskPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (step, &letter) in w.letters.iter().enumerate() {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(k) => {
                    x = std::mem::replace(&mut p[row][k], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    RskPair {
        p: Filling::straight(p).expect("insertion keeps a partition shape"),
        q: Filling::straight(q).expect("recording tableau has insertion shape"),
    }
}

/// Reverse bumping driven by `Q`'s entries `n, …, 1`.
pub fn rsk_inverse(pair: &RskPair, r: u32) -> Result<Word> {
    pair.validate()?;
    if let Some(m) = pair.p.max_entry() {
        if m > r {
            let at = pair.p.entries().find(|&(_, v)| v == m).map(|(b, _)| b);
            return Err(Error::validation("P entries within 0..=r", at, format!("{m} > {r}")));
        }
    }
    let mut p: Vec<Vec<u32>> = pair.p.rows().to_vec();
    let n = pair.q.size();
    let mut where_is = vec![BoxCoord::new(0, 0); n + 1];
    for (b, v) in pair.q.entries() {
        where_is[v as usize] = b;
    }
    let mut letters = vec![0; n];
    for step in (1..=n).rev() {
        let b = where_is[step];
        let mut row = b.row - 1;
        // Q standard and same shape guarantee b is the last box of its row.
        debug_assert_eq!(p[row].len(), b.col);
        let mut x = p[row].pop().expect("box present");
        if p[row].is_empty() {
            p.pop();
        }
        while row > 0 {
            row -= 1;
            let k = p[row].iter().rposition(|&y| y < x).expect("semistandard column strictness");
            x = std::mem::replace(&mut p[row][k], x);
        }
        letters[step - 1] = x;
    }
    Word::new(letters, r)
}
