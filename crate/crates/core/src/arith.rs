//! Small exact-arithmetic helpers shared by the modules, plus the JSON
//! encodings used for big integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Reduces a signed integer into `0..n`.
pub fn residue(x: i64, n: u64) -> u64 {
    debug_assert!(n > 0);
    (x as i128).rem_euclid(n as i128) as u64
}

/// Inverse of `a` modulo `n`, if it exists. `n == 1` yields `Some(0)`.
pub fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let ext = (a as i128).extended_gcd(&(n as i128));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(n as i128) as u64)
}

pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Divides out the content of an integer vector and fixes the sign so that
/// the first nonzero entry is positive. Zero vectors are returned unchanged.
pub fn primitive_up_to_sign(v: &[BigInt]) -> Vec<BigInt> {
    let mut out = primitive(v);
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            out.iter_mut().for_each(|x| *x = -&*x);
        }
    }
    out
}

/// Divides out the content of an integer vector, keeping its direction.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators of a rational vector and returns the primitive
/// integer vector pointing the same way.
pub fn integer_direction(v: &[BigRational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    primitive(&ints)
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().cloned().map(BigRational::from_integer).collect())
        .collect();
    row_reduce(&mut m)
}

/// In-place reduced row echelon form; returns the rank.
pub(crate) fn row_reduce(m: &mut [Vec<BigRational>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        m[r].iter_mut().for_each(|x| *x *= &inv);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                row.iter_mut().zip(&pivot).for_each(|(x, p)| *x -= &f * p);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Big integers serialize as JSON numbers when they fit in `i64`, and as
/// decimal strings otherwise. Both forms are accepted on input.
pub mod bigint_json {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        match x.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&x.to_string()),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(v) => Ok(BigInt::from(v)),
            Repr::Text(t) => t.trim().parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Serde wrapper for a single big integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct JsonInt(#[serde(with = "bigint_json")] pub BigInt);

/// Rationals serialize as `{"num": .., "den": ..}` with a positive denominator.
pub mod rational_json {
    use super::*;

    #[derive(Serialize, Deserialize)]
    struct Repr {
        #[serde(with = "bigint_json")]
        num: BigInt,
        #[serde(with = "bigint_json")]
        den: BigInt,
    }

    pub fn serialize<S: Serializer>(x: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        Repr {
            num: x.numer().clone(),
            den: x.denom().clone(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let r = Repr::deserialize(d)?;
        if r.den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(BigRational::new(r.num, r.den))
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(xs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
            s.collect_seq(xs.iter().map(|x| Repr {
                num: x.numer().clone(),
                den: x.denom().clone(),
            }))
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
            let rs = Vec::<Repr>::deserialize(d)?;
            rs.into_iter()
                .map(|r| {
                    if r.den.is_zero() {
                        Err(serde::de::Error::custom("zero denominator"))
                    } else {
                        Ok(BigRational::new(r.num, r.den))
                    }
                })
                .collect()
        }
    }
}

/// Renders a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
