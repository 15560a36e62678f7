//! Algorithm dispatch and result rendering for `charpoly compute`.

use std::io::Write;

use charpoly_core::charpoly::{
    adjugate_from_charpoly, berkowitz, charpoly_oracle, faddeev_leverrier, preparata_sarwate,
};
use charpoly_core::elimination::{bareiss_det, fflu_adjugate, field_lu_det, hessenberg_charpoly};
use charpoly_core::{Matrix, OpCounter, Ring};
use clap::ValueEnum;
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::format::Codec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Algorithm {
    /// Baby-step giant-step Faddeev-Leverrier.
    Ps,
    /// Faddeev-Leverrier.
    Fl,
    Berkowitz,
    /// Fraction-free LU (determinant, adjugate with --adjugate).
    Bareiss,
    /// LU over a field (determinant only).
    Lu,
    /// Hessenberg reduction over a field.
    Hessenberg,
    /// Cofactor expansion, n <= 8.
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ps => "ps",
            Algorithm::Fl => "fl",
            Algorithm::Berkowitz => "berkowitz",
            Algorithm::Bareiss => "bareiss",
            Algorithm::Lu => "lu",
            Algorithm::Hessenberg => "hessenberg",
            Algorithm::Oracle => "oracle",
        }
    }

    /// Whether the algorithm produces the characteristic polynomial, not just
    /// the determinant.
    pub fn computes_charpoly(self) -> bool {
        !matches!(self, Algorithm::Bareiss | Algorithm::Lu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

/// What an algorithm run produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Computed<R: Ring> {
    pub coeffs: Option<Vec<R::Elem>>,
    pub det: R::Elem,
    pub adjugate: Option<Matrix<R>>,
    pub counter: OpCounter,
}

pub fn run_algorithm<R: Ring>(
    a: &Matrix<R>,
    algorithm: Algorithm,
    block_size: Option<usize>,
    want_adjugate: bool,
) -> Result<Computed<R>, CliError> {
    if block_size.is_some() && algorithm != Algorithm::Ps {
        return Err(CliError::Precondition(format!(
            "--m only applies to ps, not {}",
            algorithm.name()
        )));
    }
    let mut counter = OpCounter::new();
    let c = &mut counter;
    let (coeffs, det, adjugate) = match algorithm {
        Algorithm::Ps => {
            let out = preparata_sarwate(a, block_size, c)?;
            (
                Some(out.coeffs),
                out.det,
                out.adjugate.filter(|_| want_adjugate),
            )
        }
        Algorithm::Fl => {
            let out = faddeev_leverrier(a, c)?;
            (
                Some(out.coeffs),
                out.det,
                out.adjugate.filter(|_| want_adjugate),
            )
        }
        Algorithm::Berkowitz | Algorithm::Hessenberg | Algorithm::Oracle => {
            let (coeffs, det) = match algorithm {
                Algorithm::Berkowitz => {
                    let out = berkowitz(a, c)?;
                    (out.coeffs, out.det)
                }
                Algorithm::Hessenberg => {
                    let out = hessenberg_charpoly(a, c)?;
                    (out.coeffs, out.det)
                }
                _ => {
                    let coeffs = charpoly_oracle(a)?;
                    let ring = a.ring();
                    let det = if a.n().is_multiple_of(2) {
                        coeffs[0].clone()
                    } else {
                        ring.neg(&coeffs[0])
                    };
                    (coeffs, det)
                }
            };
            let adjugate = if want_adjugate {
                Some(adjugate_from_charpoly(a, &coeffs, c)?)
            } else {
                None
            };
            (Some(coeffs), det, adjugate)
        }
        Algorithm::Bareiss if want_adjugate => {
            let (det, adj) = fflu_adjugate(a, c)?;
            (None, det, Some(adj))
        }
        Algorithm::Bareiss => (None, bareiss_det(a, c)?.det, None),
        Algorithm::Lu if want_adjugate => {
            return Err(CliError::Precondition(
                "lu computes the determinant only; no adjugate".into(),
            ));
        }
        Algorithm::Lu => (None, field_lu_det(a, c)?, None),
    };
    Ok(Computed {
        coeffs,
        det,
        adjugate,
        counter,
    })
}

fn counter_json(c: &OpCounter) -> Value {
    json!({
        "full_matmul": c.full_matmul,
        "ring_mul": c.ring_mul,
        "ring_add": c.ring_add,
        "ring_divexact": c.ring_divexact,
        "product_trace_calls": c.product_trace_calls,
    })
}

pub fn render_json<R: Codec>(
    a: &Matrix<R>,
    algorithm: Algorithm,
    out: &Computed<R>,
    count_ops: bool,
) -> Value {
    let ring = a.ring();
    let mut obj = Map::new();
    obj.insert("algorithm".into(), json!(algorithm.name()));
    obj.insert(
        "ring".into(),
        serde_json::to_value(ring.spec()).expect("serializable"),
    );
    obj.insert("n".into(), json!(a.n()));
    if let Some(coeffs) = &out.coeffs {
        obj.insert(
            "coeffs".into(),
            Value::Array(coeffs.iter().map(|e| ring.encode(e)).collect()),
        );
    }
    obj.insert("det".into(), ring.encode(&out.det));
    if let Some(adj) = &out.adjugate {
        let rows = adj
            .rows()
            .map(|r| Value::Array(r.iter().map(|e| ring.encode(e)).collect()));
        obj.insert("adjugate".into(), Value::Array(rows.collect()));
    }
    if count_ops {
        obj.insert("ops".into(), counter_json(&out.counter));
    }
    Value::Object(obj)
}

fn text_list<R: Codec>(ring: &R, xs: &[R::Elem]) -> String {
    let items: Vec<String> = xs.iter().map(|e| ring.text(e)).collect();
    format!("[{}]", items.join(", "))
}

pub fn render_text<R: Codec>(a: &Matrix<R>, out: &Computed<R>, count_ops: bool) -> String {
    let ring = a.ring();
    let mut s = String::new();
    if let Some(coeffs) = &out.coeffs {
        s += &format!("coeffs: {}\n", text_list(ring, coeffs));
    }
    s += &format!("det: {}\n", ring.text(&out.det));
    if let Some(adj) = &out.adjugate {
        s += "adjugate:\n";
        for row in adj.rows() {
            s += &format!("  {}\n", text_list(ring, row));
        }
    }
    if count_ops {
        let c = &out.counter;
        s += &format!(
            "ops: full_matmul={} ring_mul={} ring_add={} ring_divexact={} product_trace_calls={}\n",
            c.full_matmul, c.ring_mul, c.ring_add, c.ring_divexact, c.product_trace_calls
        );
    }
    s
}

/// Runs one algorithm on `a` and writes the result in the requested format.
pub fn compute_and_write<R: Codec>(
    a: &Matrix<R>,
    algorithm: Algorithm,
    block_size: Option<usize>,
    want_adjugate: bool,
    format: OutputFormat,
    count_ops: bool,
    w: &mut dyn Write,
) -> Result<(), CliError> {
    let out = run_algorithm(a, algorithm, block_size, want_adjugate)?;
    let text = match format {
        OutputFormat::Json => {
            let v = render_json(a, algorithm, &out, count_ops);
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        OutputFormat::Text => render_text(a, &out, count_ops),
    };
    w.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}
