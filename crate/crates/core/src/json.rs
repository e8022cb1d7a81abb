//! JSON encodings shared by the command-line tool.
//!
//! Integers are JSON numbers inside `±(2⁵³ − 1)` and decimal strings outside.
//! Rationals are strings `"p/q"`, or `"p"` when integral. Every type here is
//! pinned to [`BigInt`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::brauer::{BField, BrauerWitness};
use crate::error::{Error, Result};
use crate::isometry::Isometry;
use crate::lattice::{Lattice, Sublattice};
use crate::linalg::{Matrix, Signature};
use crate::moduli::ModuliReport;
use crate::mukai::MukaiVector;
use crate::stability::HilbertCoeffs;
use crate::walls::{Wall, WallQuery};

const SAFE: i64 = (1 << 53) - 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(n) if n.abs() <= SAFE => s.serialize_i64(n),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct IntVisitor;

impl Visitor<'_> for IntVisitor {
    type Value = JsonInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonInt, E> {
        Ok(JsonInt(v.into()))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonInt, E> {
        BigInt::from_str(v.trim())
            .map(JsonInt)
            .map_err(|_| E::custom(format!("not an integer: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(IntVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub BigRational);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(&self.0))
    }
}

pub fn format_rat(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rat(v: &str) -> Option<BigRational> {
    let v = v.trim();
    match v.split_once('/') {
        None => BigInt::from_str(v).ok().map(BigRational::from_integer),
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = JsonRat;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a rational \"p/q\" or an integer")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<JsonRat, E> {
        Ok(JsonRat(BigRational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<JsonRat, E> {
        Ok(JsonRat(BigRational::from_integer(v.into())))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<JsonRat, E> {
        parse_rat(v)
            .map(JsonRat)
            .ok_or_else(|| E::custom(format!("not a rational: {v:?}")))
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

/// Matrix entry: a JSON integer when integral, a `"p/q"` string otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonEntry(pub BigRational);

impl Serialize for JsonEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            JsonInt(self.0.to_integer()).serialize(s)
        } else {
            JsonRat(self.0.clone()).serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for JsonEntry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        JsonRat::deserialize(d).map(|q| JsonEntry(q.0))
    }
}

pub fn ints(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

pub fn unints(v: &[JsonInt]) -> Vec<BigInt> {
    v.iter().map(|x| x.0.clone()).collect()
}

pub fn rats(v: &[BigRational]) -> Vec<JsonRat> {
    v.iter().cloned().map(JsonRat).collect()
}

pub fn unrats(v: &[JsonRat]) -> Vec<BigRational> {
    v.iter().map(|x| x.0.clone()).collect()
}

pub fn int_rows(m: &Matrix<BigInt>) -> Vec<Vec<JsonInt>> {
    m.row_iter().map(ints).collect()
}

fn rows_width<X>(rows: &[Vec<X>], width: Option<usize>) -> Result<usize> {
    let cols = width.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
    if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
        return Err(Error::Dimension {
            expected: cols,
            found: bad.len(),
            context: "matrix row length",
        });
    }
    Ok(cols)
}

pub fn int_matrix_from(rows: &[Vec<JsonInt>], width: Option<usize>) -> Result<Matrix<BigInt>> {
    let cols = rows_width(rows, width)?;
    Matrix::from_rows(rows.iter().map(|r| unints(r)).collect(), cols)
}

pub fn entry_rows(m: &Matrix<BigRational>) -> Vec<Vec<JsonEntry>> {
    m.row_iter()
        .map(|r| r.iter().cloned().map(JsonEntry).collect())
        .collect()
}

pub fn rat_matrix_from(rows: &[Vec<JsonEntry>], width: Option<usize>) -> Result<Matrix<BigRational>> {
    let cols = rows_width(rows, width)?;
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|x| x.0.clone()).collect())
            .collect(),
        cols,
    )
}

/// `{"rows": n, "cols": m, "data": [[…]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<JsonEntry>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &Matrix<BigRational>) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            data: entry_rows(m),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix<BigRational>> {
        if self.data.len() != self.rows {
            return Err(Error::Dimension {
                expected: self.rows,
                found: self.data.len(),
                context: "matrix row count",
            });
        }
        rat_matrix_from(&self.data, Some(self.cols))
    }
}

/// A lattice by name (`"K3"`, `"Mukai"`, `"U"`, `"E8-"`) or by Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LatticeJson {
    Named(String),
    Gram {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        name: Option<String>,
        gram: Vec<Vec<JsonInt>>,
    },
}

pub fn named_lattice(name: &str) -> Result<Lattice> {
    Ok(match name {
        "K3" => Lattice::k3(),
        "Mukai" => Lattice::mukai(),
        "U" => Lattice::hyperbolic_plane(),
        "E8-" | "E8(-1)" => Lattice::e8_negative(),
        other => return Err(Error::Malformed(format!("unknown lattice name {other:?}"))),
    })
}

impl LatticeJson {
    pub fn from_lattice(l: &Lattice) -> Self {
        LatticeJson::Gram {
            name: l.name().map(str::to_owned),
            gram: int_rows(l.gram()),
        }
    }

    pub fn to_lattice(&self) -> Result<Lattice> {
        match self {
            LatticeJson::Named(n) => named_lattice(n),
            LatticeJson::Gram { name, gram } => {
                let n = gram.len();
                let l = Lattice::new(int_matrix_from(gram, Some(n))?)?;
                Ok(match name {
                    Some(s) => l.named(s.clone()),
                    None => l,
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SublatticeJson {
    pub ambient: LatticeJson,
    pub basis: Vec<Vec<JsonInt>>,
}

impl SublatticeJson {
    pub fn from_sublattice(s: &Sublattice) -> Self {
        SublatticeJson {
            ambient: LatticeJson::from_lattice(s.ambient()),
            basis: int_rows(s.basis()),
        }
    }

    pub fn to_sublattice(&self) -> Result<Sublattice> {
        let ambient = self.ambient.to_lattice()?;
        let basis = int_matrix_from(&self.basis, Some(ambient.rank()))?;
        Sublattice::new(ambient, basis)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MukaiJson {
    pub r: JsonInt,
    pub c: Vec<JsonRat>,
    pub s: JsonRat,
}

impl From<&MukaiVector> for MukaiJson {
    fn from(v: &MukaiVector) -> Self {
        MukaiJson {
            r: JsonInt(v.r.clone()),
            c: rats(&v.c),
            s: JsonRat(v.s.clone()),
        }
    }
}

impl From<&MukaiJson> for MukaiVector {
    fn from(v: &MukaiJson) -> Self {
        MukaiVector::new(v.r.0.clone(), unrats(&v.c), v.s.0.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HilbertJson {
    pub d: usize,
    pub a: Vec<JsonRat>,
}

impl HilbertJson {
    pub fn to_coeffs(&self) -> Result<HilbertCoeffs> {
        HilbertCoeffs::new(self.d, unrats(&self.a))
    }
}

impl From<&HilbertCoeffs> for HilbertJson {
    fn from(h: &HilbertCoeffs) -> Self {
        HilbertJson {
            d: h.d,
            a: rats(&h.a),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BFieldJson {
    pub xi: Vec<JsonInt>,
    pub r: JsonInt,
}

impl BFieldJson {
    pub fn to_bfield(&self) -> Result<BField> {
        BField::new(unints(&self.xi), self.r.0.clone())
    }
}

impl From<&BField> for BFieldJson {
    fn from(b: &BField) -> Self {
        BFieldJson {
            xi: ints(&b.xi),
            r: JsonInt(b.r.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessJson {
    #[serde(rename = "L")]
    pub l: Vec<JsonInt>,
    #[serde(rename = "N")]
    pub n: Vec<JsonInt>,
}

impl From<&BrauerWitness> for WitnessJson {
    fn from(w: &BrauerWitness) -> Self {
        WitnessJson {
            l: ints(&w.l),
            n: ints(&w.n),
        }
    }
}

impl From<&WitnessJson> for BrauerWitness {
    fn from(w: &WitnessJson) -> Self {
        BrauerWitness {
            l: unints(&w.l),
            n: unints(&w.n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallQueryJson {
    pub ns: LatticeJson,
    pub v: MukaiJson,
    pub r0: JsonInt,
    #[serde(rename = "H0")]
    pub h0: Vec<JsonInt>,
    #[serde(rename = "H1")]
    pub h1: Vec<JsonInt>,
}

impl WallQueryJson {
    pub fn to_query(&self) -> Result<WallQuery> {
        Ok(WallQuery {
            ns: self.ns.to_lattice()?,
            v: (&self.v).into(),
            r0: self.r0.0.clone(),
            h0: unints(&self.h0),
            h1: unints(&self.h1),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallJson {
    pub xi: Vec<JsonInt>,
    pub norm: JsonInt,
    pub on_endpoint: bool,
}

impl From<&Wall> for WallJson {
    fn from(w: &Wall) -> Self {
        WallJson {
            xi: ints(&w.xi),
            norm: JsonInt(w.norm.clone()),
            on_endpoint: w.on_endpoint,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallsJson {
    pub bound: JsonRat,
    pub walls: Vec<WallJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportJson {
    pub v2: JsonInt,
    pub dim: JsonInt,
    pub nonempty: bool,
    pub is_k3: bool,
    pub hilb_n: Option<JsonInt>,
}

impl From<&ModuliReport> for ReportJson {
    fn from(r: &ModuliReport) -> Self {
        ReportJson {
            v2: JsonInt(r.pairing_square.clone()),
            dim: JsonInt(r.dim.clone()),
            nonempty: r.nonempty,
            is_k3: r.is_k3,
            hilb_n: r.hilb_n.clone().map(JsonInt),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IsometryJson {
    pub matrix: Vec<Vec<JsonEntry>>,
    pub source: LatticeJson,
    pub target: LatticeJson,
}

impl IsometryJson {
    pub fn to_isometry(&self) -> Result<Isometry> {
        let source = self.source.to_lattice()?;
        let target = self.target.to_lattice()?;
        let m = rat_matrix_from(&self.matrix, Some(source.rank()))?;
        Isometry::new(m, source, target)
    }
}

impl From<&Isometry> for IsometryJson {
    fn from(i: &Isometry) -> Self {
        IsometryJson {
            matrix: entry_rows(&i.matrix),
            source: LatticeJson::from_lattice(&i.source),
            target: LatticeJson::from_lattice(&i.target),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureJson {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl From<Signature> for SignatureJson {
    fn from(s: Signature) -> Self {
        SignatureJson {
            pos: s.pos,
            neg: s.neg,
            zero: s.zero,
        }
    }
}
