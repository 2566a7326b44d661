//! Exact rational scalars used throughout the crate.
//!
//! `Rat` is an arbitrary-precision rational kept in lowest terms with a
//! positive denominator, which is exactly the invariant every exact routine
//! here relies on.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`, `d != 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"num/den"` or `"num"` (optionally signed).
pub fn parse_rat(text: &str) -> Result<Rat, String> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| format!("invalid integer `{num}`"))?;
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| format!("invalid integer `{d}`"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(format!("zero denominator in `{t}`"));
    }
    Ok(Rat::new(n, d))
}

/// Render as `"num"` for integers and `"num/den"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    bigint_to_f64(r.numer()) / bigint_to_f64(r.denom())
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    if let Ok(v) = n.to_string().parse::<f64>() {
        v
    } else if n.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    }
}
