use num_bigint::BigInt;
use serde::Serializer;

use crate::exactmath::Rational;

pub fn bigint<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    // Exact decimal; JSON numbers are fine for integers but may overflow
    // consumers, so integers wider than i64 become strings.
    match i64::try_from(n) {
        Ok(v) => s.serialize_i64(v),
        Err(_) => s.serialize_str(&n.to_string()),
    }
}

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn rationals<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(qs.iter().map(|q| q.to_string()))
}
