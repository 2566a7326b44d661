//! Input formats: the polynomial string grammar and the JSON matrix and
//! polynomial encodings shared by the command line and the file interfaces.
//!
//! Polynomials are written in the single variable `x` with `^` for powers,
//! e.g. `x^3-6x^2+7x-1` or `1 + 3x + x^2`; whitespace is ignored. Matrices
//! are JSON objects `{"rows": r, "cols": c, "entries": [["num/den", ...]]}`
//! with row-major entries; plain integers may omit the denominator.

use crate::intpoly::IntPoly;
use crate::matrix::RatMatrix;
use crate::quaternion::{Quaternion, QuatMatrix};
use crate::rational::{format_rat, parse_rat, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

/// Parse the polynomial grammar into ascending integer coefficients.
pub fn parse_poly(text: &str) -> Result<IntPoly, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0usize;
    let mut coeffs: Vec<BigInt> = Vec::new();
    let mut any_term = false;

    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };

    loop {
        skip_ws(&mut pos);
        if pos >= chars.len() {
            break;
        }
        let term_start = pos;
        // sign
        let mut negative = false;
        if chars[pos] == '+' || chars[pos] == '-' {
            negative = chars[pos] == '-';
            pos += 1;
            skip_ws(&mut pos);
        } else if any_term {
            return err(pos, format!("expected `+` or `-`, found `{}`", chars[pos]));
        }
        // optional integer literal
        let digits_start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let coeff: Option<BigInt> = if pos > digits_start {
            let s: String = chars[digits_start..pos].iter().collect();
            Some(s.parse().expect("digits parse"))
        } else {
            None
        };
        skip_ws(&mut pos);
        // optional variable part
        let mut exponent: usize = 0;
        let mut has_var = false;
        if pos < chars.len() && (chars[pos] == 'x' || chars[pos] == 'X') {
            has_var = true;
            pos += 1;
            skip_ws(&mut pos);
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                skip_ws(&mut pos);
                let exp_start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == exp_start {
                    return err(pos, "expected exponent digits after `^`");
                }
                let s: String = chars[exp_start..pos].iter().collect();
                exponent = s
                    .parse()
                    .map_err(|_| ParseError {
                        position: exp_start,
                        message: "exponent too large".into(),
                    })?;
            } else {
                exponent = 1;
            }
        }
        if !has_var && coeff.is_none() {
            return err(term_start, "expected a coefficient or `x`");
        }
        let mut c = coeff.unwrap_or_else(|| BigInt::from(1));
        if negative {
            c = -c;
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, BigInt::zero());
        }
        coeffs[exponent] += c;
        any_term = true;
    }
    if !any_term {
        return err(0, "empty polynomial");
    }
    Ok(IntPoly::new(coeffs))
}

/// Render ascending coefficients back into the grammar.
pub fn render_poly(p: &IntPoly) -> String {
    p.to_string().replace(' ', "")
}

pub fn matrix_to_json(m: &RatMatrix) -> Value {
    let entries: Vec<Vec<String>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| format_rat(m.get(i, j))).collect())
        .collect();
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

pub fn matrix_from_json(v: &Value) -> Result<RatMatrix, ParseError> {
    let rows = v["rows"]
        .as_u64()
        .ok_or_else(|| ParseError {
            position: 0,
            message: "missing integer field `rows`".into(),
        })? as usize;
    let cols = v["cols"]
        .as_u64()
        .ok_or_else(|| ParseError {
            position: 0,
            message: "missing integer field `cols`".into(),
        })? as usize;
    let entries = v["entries"].as_array().ok_or_else(|| ParseError {
        position: 0,
        message: "missing array field `entries`".into(),
    })?;
    if entries.len() != rows {
        return err(0, format!("expected {rows} rows, found {}", entries.len()));
    }
    let mut out = RatMatrix::zero(rows, cols);
    for (i, row) in entries.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| ParseError {
            position: i,
            message: format!("row {i} is not an array"),
        })?;
        if row.len() != cols {
            return err(i, format!("row {i}: expected {cols} entries"));
        }
        for (j, cell) in row.iter().enumerate() {
            let r = rat_from_json(cell).map_err(|msg| ParseError {
                position: i * cols + j,
                message: msg,
            })?;
            out.set(i, j, r);
        }
    }
    Ok(out)
}

fn rat_from_json(v: &Value) -> Result<Rat, String> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(crate::rational::rat(i))
            } else {
                Err(format!("non-integer numeric literal {n}; use \"num/den\""))
            }
        }
        other => Err(format!("expected rational string, found {other}")),
    }
}

/// Quaternion JSON: `["x", "y", "z", "w"]` as rational strings.
pub fn quaternion_to_json(q: &Quaternion) -> Value {
    json!([
        format_rat(&q.x),
        format_rat(&q.y),
        format_rat(&q.z),
        format_rat(&q.w)
    ])
}

pub fn quaternion_from_json(v: &Value) -> Result<Quaternion, ParseError> {
    let arr = v.as_array().filter(|a| a.len() == 4).ok_or_else(|| ParseError {
        position: 0,
        message: "quaternion must be a four-element array".into(),
    })?;
    let mut parts = Vec::with_capacity(4);
    for (i, cell) in arr.iter().enumerate() {
        parts.push(rat_from_json(cell).map_err(|msg| ParseError {
            position: i,
            message: msg,
        })?);
    }
    let mut it = parts.into_iter();
    Ok(Quaternion::new(
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
        it.next().unwrap(),
    ))
}

/// Quaternionic matrix JSON: nested arrays of quaternions.
pub fn quat_matrix_to_json(m: &QuatMatrix) -> Value {
    let rows: Vec<Value> = (0..m.size())
        .map(|i| {
            Value::Array(
                (0..m.size())
                    .map(|j| quaternion_to_json(m.get(i, j)))
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

pub fn quat_matrix_from_json(v: &Value) -> Result<QuatMatrix, ParseError> {
    let rows = v.as_array().ok_or_else(|| ParseError {
        position: 0,
        message: "quaternionic matrix must be an array of rows".into(),
    })?;
    let q = rows.len();
    let mut out = Vec::with_capacity(q);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == q).ok_or_else(|| ParseError {
            position: i,
            message: format!("row {i} must have exactly {q} quaternions"),
        })?;
        out.push(
            row.iter()
                .map(quaternion_from_json)
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(QuatMatrix::from_rows(out))
}

/// Vector input: comma-separated rationals.
pub fn parse_vector(text: &str) -> Result<Vec<Rat>, ParseError> {
    text.split(',')
        .enumerate()
        .map(|(i, part)| {
            parse_rat(part).map_err(|msg| ParseError {
                position: i,
                message: msg,
            })
        })
        .collect()
}
