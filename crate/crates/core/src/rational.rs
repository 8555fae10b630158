//! Exact rational coefficients and sparse linear combinations.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign_q(negative: bool) -> Q {
    if negative {
        -Q::one()
    } else {
        Q::one()
    }
}

pub fn factorial(n: u32) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Q::from_integer(acc)
}

/// Parses `"p/q"`, `"p"`, `"-p/q"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let r = Q::from_str(t).map_err(|_| Error::Config(format!("invalid rational '{s}'")))?;
    Ok(r)
}

pub fn render_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn abs_q(x: &Q) -> Q {
    x.abs()
}

/// Adds `v` into `map[k]`, dropping the entry when it cancels.
pub fn add_to<K: Ord>(map: &mut BTreeMap<K, Q>, k: K, v: Q) {
    if v.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
        Entry::Vacant(e) => {
            e.insert(v);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += v;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn add_map<K: Ord + Clone>(into: &mut BTreeMap<K, Q>, from: &BTreeMap<K, Q>, scale: &Q) {
    if scale.is_zero() {
        return;
    }
    for (k, v) in from {
        add_to(into, k.clone(), v * scale);
    }
}
