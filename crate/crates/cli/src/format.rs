//! The JSON matrix file format and per-ring element encodings.
//!
//! ```json
//! {"ring": {"kind": "intmod", "modulus": "7"}, "n": 2, "rows": [["1", "2"], ["3", "4"]]}
//! ```

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use charpoly_core::{IntPoly, Integers, IntegersMod, Matrix, PolyOverIntegers, Rationals, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Int,
    Rational,
    Intmod,
    Polyint,
}

/// Ring descriptor as it appears in matrix files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub kind: RingKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

impl RingSpec {
    pub fn new(kind: RingKind) -> Self {
        RingSpec {
            kind,
            modulus: None,
        }
    }

    pub fn intmod(m: u64) -> Self {
        RingSpec {
            kind: RingKind::Intmod,
            modulus: Some(m.to_string()),
        }
    }

    /// Validated modulus for `intmod`; `None` for other kinds.
    pub fn parsed_modulus(&self) -> Result<Option<u64>, String> {
        match (self.kind, &self.modulus) {
            (RingKind::Intmod, None) => Err("ring.modulus is required for intmod".into()),
            (RingKind::Intmod, Some(s)) => match s.trim().parse::<u64>() {
                Ok(m) if m >= 2 => Ok(Some(m)),
                _ => Err(format!(
                    "ring.modulus: bad modulus {s:?}, expected an integer >= 2"
                )),
            },
            (_, Some(_)) => Err("ring.modulus is only allowed for intmod".into()),
            (_, None) => Ok(None),
        }
    }
}

/// Compact form used on the command line and in CSV: `int`, `rational`,
/// `intmod:<m>`, `polyint`.
impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RingKind::Int => f.write_str("int"),
            RingKind::Rational => f.write_str("rational"),
            RingKind::Intmod => write!(f, "intmod:{}", self.modulus.as_deref().unwrap_or("?")),
            RingKind::Polyint => f.write_str("polyint"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let spec = match s.split_once(':') {
            Some(("intmod", m)) => RingSpec {
                kind: RingKind::Intmod,
                modulus: Some(m.into()),
            },
            None if s == "int" => RingSpec::new(RingKind::Int),
            None if s == "rational" => RingSpec::new(RingKind::Rational),
            None if s == "polyint" => RingSpec::new(RingKind::Polyint),
            _ => {
                return Err(format!(
                    "unknown ring {s:?}; expected int, rational, intmod:<m> or polyint"
                ))
            }
        };
        spec.parsed_modulus()?;
        Ok(spec)
    }
}

/// On-disk matrix file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub ring: RingSpec,
    pub n: usize,
    pub rows: Vec<Vec<Value>>,
}

/// Element encoding for a ring, plus its descriptor.
pub trait Codec: Ring {
    fn spec(&self) -> RingSpec;
    fn decode(&self, v: &Value) -> Result<Self::Elem, String>;
    fn encode(&self, e: &Self::Elem) -> Value;
    /// Single-line rendering for text output and digests.
    fn text(&self, e: &Self::Elem) -> String;
}

fn integer(v: &Value) -> Result<BigInt, String> {
    match v {
        Value::String(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("invalid integer {s:?}")),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().unwrap()),
        other => Err(format!("expected an integer string, found {other}")),
    }
}

impl Codec for Integers {
    fn spec(&self) -> RingSpec {
        RingSpec::new(RingKind::Int)
    }

    fn decode(&self, v: &Value) -> Result<BigInt, String> {
        integer(v)
    }

    fn encode(&self, e: &BigInt) -> Value {
        Value::String(e.to_string())
    }

    fn text(&self, e: &BigInt) -> String {
        e.to_string()
    }
}

impl Codec for Rationals {
    fn spec(&self) -> RingSpec {
        RingSpec::new(RingKind::Rational)
    }

    fn decode(&self, v: &Value) -> Result<BigRational, String> {
        let Value::String(s) = v else {
            return integer(v).map(BigRational::from_integer);
        };
        let Some((p, q)) = s.split_once('/') else {
            return integer(v).map(BigRational::from_integer);
        };
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("invalid rational {s:?}"))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("invalid rational {s:?}"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(BigRational::new(p, q))
    }

    fn encode(&self, e: &BigRational) -> Value {
        Value::String(self.text(e))
    }

    fn text(&self, e: &BigRational) -> String {
        if e.denom().is_one() {
            e.numer().to_string()
        } else {
            format!("{}/{}", e.numer(), e.denom())
        }
    }
}

impl Codec for IntegersMod {
    fn spec(&self) -> RingSpec {
        RingSpec::intmod(self.modulus())
    }

    fn decode(&self, v: &Value) -> Result<u64, String> {
        integer(v).map(|x| self.from_bigint(&x))
    }

    fn encode(&self, e: &u64) -> Value {
        Value::String(e.to_string())
    }

    fn text(&self, e: &u64) -> String {
        e.to_string()
    }
}

impl Codec for PolyOverIntegers {
    fn spec(&self) -> RingSpec {
        RingSpec::new(RingKind::Polyint)
    }

    fn decode(&self, v: &Value) -> Result<IntPoly, String> {
        let Value::Array(items) = v else {
            return Err(format!(
                "expected an array of coefficient strings, found {v}"
            ));
        };
        let coeffs = items
            .iter()
            .enumerate()
            .map(|(i, c)| integer(c).map_err(|e| format!("coefficient {i}: {e}")))
            .collect::<Result<_, _>>()?;
        Ok(IntPoly::new(coeffs))
    }

    fn encode(&self, e: &IntPoly) -> Value {
        Value::Array(
            e.coeffs()
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }

    fn text(&self, e: &IntPoly) -> String {
        e.to_string()
    }
}

/// A matrix over whichever ring its file declared.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Int(Matrix<Integers>),
    Rational(Matrix<Rationals>),
    IntMod(Matrix<IntegersMod>),
    PolyInt(Matrix<PolyOverIntegers>),
}

/// Runs `$body` with `$m` bound to the typed matrix inside an [`AnyMatrix`].
#[macro_export]
macro_rules! with_matrix {
    ($any:expr, $m:ident => $body:expr) => {
        match $any {
            $crate::format::AnyMatrix::Int($m) => $body,
            $crate::format::AnyMatrix::Rational($m) => $body,
            $crate::format::AnyMatrix::IntMod($m) => $body,
            $crate::format::AnyMatrix::PolyInt($m) => $body,
        }
    };
}

fn build<R: Codec>(ring: R, file: &MatrixFile) -> Result<Matrix<R>, String> {
    let n = file.n;
    if file.rows.len() != n {
        return Err(format!(
            "rows: expected {n} rows, found {}",
            file.rows.len()
        ));
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in file.rows.iter().enumerate() {
        if row.len() != n {
            return Err(format!(
                "rows[{i}]: expected {n} entries, found {}",
                row.len()
            ));
        }
        for (j, v) in row.iter().enumerate() {
            entries.push(ring.decode(v).map_err(|e| format!("rows[{i}][{j}]: {e}"))?);
        }
    }
    Matrix::from_entries(ring, n, entries).map_err(|e| e.to_string())
}

impl AnyMatrix {
    pub fn from_file(file: &MatrixFile) -> Result<Self, CliError> {
        let modulus = file.ring.parsed_modulus().map_err(CliError::Parse)?;
        let built = match file.ring.kind {
            RingKind::Int => build(Integers, file).map(AnyMatrix::Int),
            RingKind::Rational => build(Rationals, file).map(AnyMatrix::Rational),
            RingKind::Intmod => {
                let ring = IntegersMod::new(modulus.expect("validated")).map_err(CliError::Core)?;
                build(ring, file).map(AnyMatrix::IntMod)
            }
            RingKind::Polyint => build(PolyOverIntegers, file).map(AnyMatrix::PolyInt),
        };
        built.map_err(CliError::Parse)
    }

    pub fn to_file(&self) -> MatrixFile {
        with_matrix!(self, m => to_file(m))
    }

    pub fn n(&self) -> usize {
        with_matrix!(self, m => m.n())
    }
}

pub fn to_file<R: Codec>(m: &Matrix<R>) -> MatrixFile {
    let ring = m.ring();
    MatrixFile {
        ring: ring.spec(),
        n: m.n(),
        rows: m
            .rows()
            .map(|row| row.iter().map(|e| ring.encode(e)).collect())
            .collect(),
    }
}

/// Parses matrix file contents; JSON syntax errors report line and column.
pub fn parse_matrix_str(text: &str) -> Result<AnyMatrix, CliError> {
    let file: MatrixFile =
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    AnyMatrix::from_file(&file)
}

pub fn parse_matrix_file(path: &Path) -> Result<AnyMatrix, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_matrix_str(&text).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn serialize_matrix(m: &AnyMatrix) -> String {
    serde_json::to_string(&m.to_file()).expect("matrix files always serialize")
}
