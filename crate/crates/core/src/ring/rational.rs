//! Rational scalars.
//!
//! `QRational` is `num_rational::BigRational`: always reduced, positive
//! denominator, zero stored as `0/1`.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type QRational = BigRational;

pub fn rat(n: i64) -> QRational {
    QRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> QRational {
    QRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-7/2"`.
pub fn parse_rational(s: &str) -> Option<QRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(QRational::from_integer),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                None
            } else {
                Some(QRational::new(n, d))
            }
        }
    }
}
