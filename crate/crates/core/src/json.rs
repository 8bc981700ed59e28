//! JSON forms of every tableau type.
//!
//! Grids are `{"family", "params", "grid"}` with rows bottom first and cells
//! `{"kind": "red"|"blue"|"gray", "value"?}`. Fillings are
//! `{"shape", "inner"?, "rows", "orientation", "box"?}`, words
//! `{"r", "letters"}`, RSK pairs `{"p", "q"}`.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::grid::{Cell, Grid};
use crate::lprime::{LPrimeTableau, Sign};
use crate::ltab::LTableau;
use crate::rsk::RskPair;
use crate::shapes::{Bounds, Partition, SkewShape};
use crate::tableau::{rotate180, Filling, Orientation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum CellRepr {
    Red { value: u32 },
    Blue { value: u32 },
    Gray,
    Empty,
}

impl From<Cell> for CellRepr {
    fn from(c: Cell) -> Self {
        match c {
            Cell::Red(value) => CellRepr::Red { value },
            Cell::Blue(value) => CellRepr::Blue { value },
            Cell::Gray => CellRepr::Gray,
            Cell::Empty => CellRepr::Empty,
        }
    }
}

impl From<CellRepr> for Cell {
    fn from(c: CellRepr) -> Self {
        match c {
            CellRepr::Red { value } => Cell::Red(value),
            CellRepr::Blue { value } => Cell::Blue(value),
            CellRepr::Gray => Cell::Gray,
            CellRepr::Empty => Cell::Empty,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    L,
    Restricted,
    Lprime,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub g: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRepr {
    pub family: Family,
    pub params: Params,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<Sign>,
    pub grid: Vec<Vec<CellRepr>>,
}

/// Any of the grid-shaped tableau families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridTableau {
    L(LTableau),
    /// An L-tableau with `d = g + r` and blue entries at most `r - i`.
    Restricted {
        tableau: LTableau,
        i: usize,
    },
    LPrime(LPrimeTableau),
}

impl GridTableau {
    pub fn grid(&self) -> &Grid {
        match self {
            GridTableau::L(t) | GridTableau::Restricted { tableau: t, .. } => t.grid(),
            GridTableau::LPrime(t) => t.grid(),
        }
    }
}

fn missing(name: &str, family: Family) -> Error {
    Error::Parse(format!("params.{name} is required for family {family:?}"))
}

impl TryFrom<GridRepr> for GridTableau {
    type Error = Error;

    fn try_from(repr: GridRepr) -> Result<Self> {
        let rows = repr.grid.into_iter().map(|row| row.into_iter().map(Cell::from).collect()).collect();
        let grid = Grid::new(rows)?;
        let p = repr.params;
        match repr.family {
            Family::L => {
                let r = p.r.ok_or_else(|| missing("r", repr.family))?;
                let d = p.d.ok_or_else(|| missing("d", repr.family))?;
                Ok(GridTableau::L(LTableau::new(p.g, r, d, grid)?))
            }
            Family::Restricted => {
                let r = p.r.ok_or_else(|| missing("r", repr.family))?;
                let i = p.i.ok_or_else(|| missing("i", repr.family))?;
                let t = LTableau::new(p.g, r, p.g + r, grid)?;
                if i > r || t.max_blue().is_some_and(|m| m as usize > r - i) {
                    return Err(Error::validation("blue entries at most r-i", None, format!("i = {i}, r = {r}")));
                }
                Ok(GridTableau::Restricted { tableau: t, i })
            }
            Family::Lprime => {
                let d = p.d.ok_or_else(|| missing("d", repr.family))?;
                let k = p.k.ok_or_else(|| missing("k", repr.family))?;
                let sign = repr.sign.ok_or_else(|| Error::Parse("sign is required for family lprime".into()))?;
                Ok(GridTableau::LPrime(LPrimeTableau::new(sign, p.g, d, k, grid)?))
            }
        }
    }
}

impl From<&GridTableau> for GridRepr {
    fn from(t: &GridTableau) -> Self {
        let (family, params, sign) = match t {
            GridTableau::L(t) => {
                (Family::L, Params { g: t.g(), r: Some(t.r()), d: Some(t.d()), ..Params::default() }, None)
            }
            GridTableau::Restricted { tableau: t, i } => (
                Family::Restricted,
                Params { g: t.g(), r: Some(t.r()), d: Some(t.d()), i: Some(*i), ..Params::default() },
                None,
            ),
            GridTableau::LPrime(t) => (
                Family::Lprime,
                Params { g: t.g(), d: Some(t.d()), k: Some(t.k()), ..Params::default() },
                Some(t.sign()),
            ),
        };
        let grid = t.grid().rows().iter().map(|row| row.iter().map(|&c| CellRepr::from(c)).collect()).collect();
        GridRepr { family, params, sign, grid }
    }
}

impl Serialize for GridTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GridRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GridTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GridTableau::try_from(GridRepr::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

impl Serialize for LTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GridTableau::L(self.clone()).serialize(s)
    }
}

impl Serialize for LPrimeTableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GridTableau::LPrime(self.clone()).serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrientationRepr {
    Standard,
    Rotated180,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FillingRepr {
    pub shape: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
    #[serde(default = "standard")]
    pub orientation: OrientationRepr,
    /// `[rows, cols]` of the anchoring box of a rotated filling.
    #[serde(default, rename = "box", skip_serializing_if = "Option::is_none")]
    pub bounds: Option<[usize; 2]>,
}

fn standard() -> OrientationRepr {
    OrientationRepr::Standard
}

impl From<&Filling> for FillingRepr {
    fn from(f: &Filling) -> Self {
        let (orientation, bounds) = match f.orientation() {
            Orientation::Standard => (OrientationRepr::Standard, None),
            Orientation::Rotated180 { rows, cols } => (OrientationRepr::Rotated180, Some([rows, cols])),
        };
        FillingRepr {
            shape: f.shape().outer().parts().to_vec(),
            inner: f.shape().inner().parts().to_vec(),
            rows: f.rows().to_vec(),
            orientation,
            bounds,
        }
    }
}

impl TryFrom<FillingRepr> for Filling {
    type Error = Error;

    fn try_from(repr: FillingRepr) -> Result<Self> {
        let shape = SkewShape::new(Partition::new(repr.shape)?, Partition::new(repr.inner)?)?;
        let f = Filling::new(shape, repr.rows)?;
        match (repr.orientation, repr.bounds) {
            (OrientationRepr::Standard, None) => Ok(f),
            (OrientationRepr::Rotated180, Some([rows, cols])) => rotate180(&f, Bounds::new(rows, cols)),
            (OrientationRepr::Standard, Some(_)) => Err(Error::Parse("box given for a standard filling".into())),
            (OrientationRepr::Rotated180, None) => Err(Error::Parse("rotated180 filling needs a box".into())),
        }
    }
}

impl Serialize for Filling {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FillingRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Filling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Filling::try_from(FillingRepr::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PairRepr {
    p: FillingRepr,
    q: FillingRepr,
}

impl Serialize for RskPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PairRepr { p: (&self.p).into(), q: (&self.q).into() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RskPair {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PairRepr::deserialize(d)?;
        let p = Filling::try_from(repr.p).map_err(serde::de::Error::custom)?;
        let q = Filling::try_from(repr.q).map_err(serde::de::Error::custom)?;
        Ok(RskPair { p, q })
    }
}

/// Compact single-line JSON.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("tableau types always serialize")
}

/// Parses and validates, keeping structured validation errors intact.
pub fn from_json<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn parse_grid(s: &str) -> Result<GridTableau> {
    from_json::<GridRepr>(s)?.try_into()
}

pub fn parse_filling(s: &str) -> Result<Filling> {
    from_json::<FillingRepr>(s)?.try_into()
}

pub fn parse_pair(s: &str) -> Result<RskPair> {
    let repr: PairRepr = from_json(s)?;
    Ok(RskPair { p: repr.p.try_into()?, q: repr.q.try_into()? })
}
