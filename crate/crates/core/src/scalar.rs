//! Exact rational scalars.
//!
//! Every quantity in the library is a reduced fraction of arbitrary-precision
//! integers. Floating point never enters the core computations; it appears
//! only in the cross-check oracles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exact rational number in canonical reduced form.
pub type Scalar = BigRational;

/// Shorthand for an integer scalar.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Error produced when a rational literal cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError {
    pub input: String,
}

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal {:?} (expected \"p\" or \"p/q\")", self.input)
    }
}

impl std::error::Error for ParseScalarError {}

/// Parses `"p"` or `"p/q"` with optional sign and surrounding whitespace.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    let t = s.trim();
    let err = || ParseScalarError { input: s.to_string() };
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num_str.parse().map_err(|_| err())?;
    let den: BigInt = den_str.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

/// Formats a scalar as `"p"` or `"p/q"`, the form `parse_scalar` accepts.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Uniform norm `max_j |x_j|` of a vector.
pub fn inf_norm(v: &[Scalar]) -> Scalar {
    let mut best = Scalar::zero();
    for x in v {
        let a = x.abs();
        if a > best {
            best = a;
        }
    }
    best
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero_vec(a: &[Scalar]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Scales a rational vector to a primitive integer vector (coprime entries,
/// same direction). Returns `None` for the zero vector.
pub fn primitive_direction(v: &[Scalar]) -> Option<Vec<BigInt>> {
    use num_integer::Integer;
    if is_zero_vec(v) {
        return None;
    }
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    Some(ints.iter().map(|n| n / &g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(format_scalar(&x), s.trim());
        }
        assert_eq!(parse_scalar(" 4/6 ").unwrap(), frac(2, 3));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("a/b").is_err());
    }

    #[test]
    fn primitive_direction_reduces() {
        let v = vec![frac(2, 3), frac(-4, 3)];
        let d = primitive_direction(&v).unwrap();
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(-2)]);
        assert!(primitive_direction(&[zero(), zero()]).is_none());
    }

    #[test]
    fn inf_norm_is_max_abs() {
        assert_eq!(inf_norm(&[frac(-3, 1), frac(2, 1)]), int(3));
        assert_eq!(inf_norm(&[]), int(0));
    }
}
