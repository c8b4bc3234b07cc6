//! Cyclic quotient surface singularities `1/n(a,b)`.
//!
//! Normal forms, Hirzebruch–Jung resolutions, discrepancies, Gorenstein
//! indices, and the Q-Gorenstein deformation theory needed for the toric
//! del Pezzo quotients: the `(w, r, m, w0)` arithmetic that separates
//! rigid points from T-singularities, and the torus characters carried by
//! the versal deformation parameters.
//!
//! Everything here is exact. Orders are `u64` with `u128` intermediates;
//! rationals are arbitrary precision.

use std::fmt;
use std::ops::{Add, Mul, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{self, gcd_u64, mod_inverse, mul_mod, residue};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SingularityError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("weight {weight} shares the factor {gcd} with the order {order}; the fixed locus is not isolated")]
    NonIsolated { order: u64, weight: i64, gcd: u64 },
    #[error("1/{order}(1,{q}) is not a valid normal form")]
    InvalidNormalForm { order: u64, q: u64 },
    #[error("a smooth point has no exceptional curves")]
    Smooth,
    #[error("invalid resolution chain {0:?}: coefficients must be at least 2")]
    InvalidChain(Vec<u64>),
    #[error("cannot parse {input:?}: expected 1/n(a,b)")]
    Parse { input: String },
    #[error("{0} has no Q-Gorenstein deformations")]
    NoDeformations(NormalForm),
    #[error("the Q-Gorenstein deformation space of {0} is not determined (neither rigid, Du Val, nor T)")]
    UnknownQDef(NormalForm),
}

/// A character of the two-dimensional torus, written additively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Character(pub i64, pub i64);

impl Character {
    pub const ZERO: Character = Character(0, 0);

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, o: Character) -> Character {
        Character(self.0 + o.0, self.1 + o.1)
    }
}

impl Neg for Character {
    type Output = Character;
    fn neg(self) -> Character {
        Character(-self.0, -self.1)
    }
}

impl Mul<Character> for i64 {
    type Output = Character;
    fn mul(self, c: Character) -> Character {
        Character(self * c.0, self * c.1)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// The germ `C²/Z_n` with generator acting by `(ζ^a, ζ^b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicQuotientSingularity {
    pub order: u64,
    pub weight_a: i64,
    pub weight_b: i64,
}

impl CyclicQuotientSingularity {
    pub fn new(order: u64, weight_a: i64, weight_b: i64) -> Result<Self, SingularityError> {
        if order == 0 {
            return Err(SingularityError::ZeroOrder);
        }
        for w in [weight_a, weight_b] {
            let g = gcd_u64(order, residue(w, order));
            if g != 1 {
                return Err(SingularityError::NonIsolated {
                    order,
                    weight: w,
                    gcd: g,
                });
            }
        }
        Ok(Self {
            order,
            weight_a,
            weight_b,
        })
    }
}

impl FromStr for CyclicQuotientSingularity {
    type Err = SingularityError;

    /// Parses `1/n(a,b)`; whitespace is ignored and weights may be negative.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let err = || SingularityError::Parse {
            input: input.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let rest = s.strip_prefix("1/").ok_or_else(err)?;
        let (n, weights) = rest.split_once('(').ok_or_else(err)?;
        let weights = weights.strip_suffix(')').ok_or_else(err)?;
        let (a, b) = weights.split_once(',').ok_or_else(err)?;
        let n: u64 = n.parse().map_err(|_| err())?;
        let a: i64 = a.parse().map_err(|_| err())?;
        let b: i64 = b.parse().map_err(|_| err())?;
        Self::new(n, a, b)
    }
}

/// `1/n(1,q)`, or the smooth point when `n = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    order: u64,
    q: Option<u64>,
}

impl NormalForm {
    pub fn new(order: u64, q: u64) -> Result<Self, SingularityError> {
        match order {
            0 => Err(SingularityError::ZeroOrder),
            1 => Ok(Self::smooth()),
            n if q >= 1 && q < n && gcd_u64(n, q) == 1 => Ok(Self {
                order: n,
                q: Some(q),
            }),
            n => Err(SingularityError::InvalidNormalForm { order: n, q }),
        }
    }

    pub fn smooth() -> Self {
        Self { order: 1, q: None }
    }

    /// The Du Val point `A_{n-1} = 1/n(1,n-1)`.
    pub fn a_type(n: u64) -> Result<Self, SingularityError> {
        if n == 0 {
            return Err(SingularityError::ZeroOrder);
        }
        Self::new(n, n - 1)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn q(&self) -> Option<u64> {
        self.q
    }

    pub fn is_smooth(&self) -> bool {
        self.order == 1
    }

    /// The same germ with the two coordinates swapped: `1/n(1,q⁻¹)`.
    pub fn inverse(&self) -> Self {
        match self.q {
            None => *self,
            Some(q) => Self {
                order: self.order,
                q: Some(mod_inverse(q, self.order).expect("q is a unit")),
            },
        }
    }

    /// Representative with the smaller of `q` and `q⁻¹`.
    pub fn canonical(&self) -> Self {
        (*self).min(self.inverse())
    }

    pub fn is_equivalent(&self, other: &NormalForm) -> bool {
        self == other || *self == other.inverse()
    }

    pub fn is_a_type(&self) -> bool {
        self.q.is_some_and(|q| q == self.order - 1)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            None => write!(f, "smooth"),
            Some(q) if q == self.order - 1 => write!(f, "A_{}", self.order - 1),
            Some(q) => write!(f, "1/{}(1,{})", self.order, q),
        }
    }
}

/// Rescales the weights so the first one is 1: `q ≡ a⁻¹·b (mod n)`.
pub fn normalize(s: &CyclicQuotientSingularity) -> Result<NormalForm, SingularityError> {
    let s = CyclicQuotientSingularity::new(s.order, s.weight_a, s.weight_b)?;
    let n = s.order;
    if n == 1 {
        return Ok(NormalForm::smooth());
    }
    let a_inv = mod_inverse(residue(s.weight_a, n), n).expect("checked coprime");
    NormalForm::new(n, mul_mod(a_inv, residue(s.weight_b, n), n))
}

/// Chain of exceptional curves of the minimal resolution; curve `i` has
/// self-intersection `-coefficients[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HJResolution {
    coefficients: Vec<u64>,
}

impl HJResolution {
    pub fn new(coefficients: Vec<u64>) -> Result<Self, SingularityError> {
        if coefficients.is_empty() || coefficients.iter().any(|&b| b < 2) {
            return Err(SingularityError::InvalidChain(coefficients));
        }
        Ok(Self { coefficients })
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn self_intersections(&self) -> Vec<i64> {
        self.coefficients.iter().map(|&b| -(b as i64)).collect()
    }

    /// Evaluates `b₁ − 1/(b₂ − 1/(… − 1/b_k))`.
    pub fn fraction(&self) -> BigRational {
        let mut acc: Option<BigRational> = None;
        for &b in self.coefficients.iter().rev() {
            let b = BigRational::from_integer(BigInt::from(b));
            acc = Some(match acc {
                None => b,
                Some(x) => b - x.recip(),
            });
        }
        acc.expect("non-empty chain")
    }

    pub fn is_a_chain(&self) -> bool {
        self.coefficients.iter().all(|&b| b == 2)
    }
}

pub fn hirzebruch_jung(nf: &NormalForm) -> Result<HJResolution, SingularityError> {
    let Some(q) = nf.q else {
        return Err(SingularityError::Smooth);
    };
    let (mut n, mut q) = (nf.order, q);
    let mut coefficients = Vec::new();
    while q != 0 {
        let b = n.div_ceil(q);
        coefficients.push(b);
        (n, q) = (q, b * q - n);
    }
    HJResolution::new(coefficients)
}

/// Discrepancies `a_j` in `K_Y = π*K_X + Σ a_j E_j`, one per curve of the chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyVector {
    #[serde(with = "arith::rational_json::vec")]
    values: Vec<BigRational>,
}

impl DiscrepancyVector {
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// `1 + a_j` for each curve.
    pub fn log_discrepancies(&self) -> Vec<BigRational> {
        self.values.iter().map(|a| a + BigRational::one()).collect()
    }

    pub fn min(&self) -> Option<&BigRational> {
        self.values.iter().min()
    }
}

/// Solves the adjunction system `a_{j-1} − b_j a_j + a_{j+1} = b_j − 2`
/// (with `a_0 = a_{k+1} = 0`) by tridiagonal elimination.
pub fn discrepancies(hj: &HJResolution) -> DiscrepancyVector {
    let b: Vec<BigRational> = hj
        .coefficients
        .iter()
        .map(|&x| BigRational::from_integer(BigInt::from(x)))
        .collect();
    let two = BigRational::from_integer(BigInt::from(2));
    let k = b.len();
    // Forward sweep over rows [1, -b_j, 1 | b_j - 2].
    let mut diag: Vec<BigRational> = Vec::with_capacity(k);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(k);
    for j in 0..k {
        let mut d = -b[j].clone();
        let mut r = &b[j] - &two;
        if j > 0 {
            let f = diag[j - 1].recip();
            d -= &f;
            r -= &rhs[j - 1] * &f;
        }
        diag.push(d);
        rhs.push(r);
    }
    let mut values = vec![BigRational::zero(); k];
    for j in (0..k).rev() {
        let mut r = rhs[j].clone();
        if j + 1 < k {
            r -= &values[j + 1];
        }
        values[j] = r / &diag[j];
    }
    DiscrepancyVector { values }
}

/// Smallest `r ≥ 1` with `rK` Cartier at the point: `n / gcd(n, q+1)`.
pub fn gorenstein_index(nf: &NormalForm) -> u64 {
    match nf.q {
        None => 1,
        Some(q) => nf.order / gcd_u64(nf.order, q + 1),
    }
}

/// Q-Gorenstein data of `1/n(1,q)`: `w = gcd(n, q+1)`, `n = w·r`,
/// `w = m·r + w0` with `0 ≤ w0 < r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityClassification {
    pub w: u64,
    pub r: u64,
    pub m: u64,
    pub w0: u64,
    pub is_smooth: bool,
    pub is_du_val: bool,
    #[serde(rename = "is_T")]
    pub is_t: bool,
    #[serde(rename = "is_primitive_T")]
    pub is_primitive_t: bool,
    pub is_qg_rigid: bool,
    #[serde(with = "qdef_json")]
    pub qdef_dim: Option<u64>,
}

mod qdef_json {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Option<u64>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(v) => s.serialize_u64(*v),
            None => s.serialize_str("UNKNOWN"),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<u64>, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Dim(u64),
            Tag(String),
        }
        match Repr::deserialize(d)? {
            Repr::Dim(v) => Ok(Some(v)),
            Repr::Tag(t) if t == "UNKNOWN" => Ok(None),
            Repr::Tag(t) => Err(serde::de::Error::custom(format!(
                "unexpected qdef_dim {t:?}"
            ))),
        }
    }
}

/// The smooth point is treated as `A_0`: Du Val and T with no parameters.
pub fn classify(nf: &NormalForm) -> SingularityClassification {
    let n = nf.order;
    let w = match nf.q {
        None => 1,
        Some(q) => gcd_u64(n, q + 1),
    };
    let r = n / w;
    let (m, w0) = (w / r, w % r);
    let is_du_val = r == 1;
    let is_t = w0 == 0;
    let is_qg_rigid = m == 0;
    let qdef_dim = if is_du_val {
        Some(n - 1)
    } else if is_qg_rigid {
        Some(0)
    } else if is_t {
        Some(m)
    } else {
        None
    };
    SingularityClassification {
        w,
        r,
        m,
        w0,
        is_smooth: n == 1,
        is_du_val,
        is_t,
        is_primitive_t: is_t && m == 1 && n > 1,
        is_qg_rigid,
        qdef_dim,
    }
}

/// Presentation `1/(d·s²)(1, d·s·a − 1)` of a non-smooth Du Val or T point,
/// as `(d, s)`; Du Val `A_{n-1}` is `(n, 1)`.
fn t_presentation(nf: &NormalForm) -> Result<(u64, u64), SingularityError> {
    let c = classify(nf);
    match c.qdef_dim {
        None => Err(SingularityError::UnknownQDef(*nf)),
        Some(0) => Err(SingularityError::NoDeformations(*nf)),
        Some(_) if c.is_du_val => Ok((nf.order, 1)),
        Some(_) => Ok((c.m, c.r)),
    }
}

/// Torus characters of the versal Q-Gorenstein deformation parameters.
///
/// `local_weights` are the characters of the two orbifold chart coordinates
/// `(u, v)`. The index-one cover is `xy = z^{ds}` with `z = uv`, and the
/// versal family `xy = z^{ds} + Σ a_j z^{js}` makes `a_j` carry
/// `(d − j)·s·(α + β)`. Du Val points (`s = 1`) drop the `z^{d-1}` term, so
/// `j` runs over `0..d-1`; T points with `s ≥ 2` keep all `j` in `0..d`.
pub fn versal_weights(
    nf: &NormalForm,
    local_weights: [Character; 2],
) -> Result<Vec<Character>, SingularityError> {
    let (d, s) = t_presentation(nf)?;
    let z = local_weights[0] + local_weights[1];
    let params = if s == 1 { d - 1 } else { d };
    Ok((0..params).map(|j| (((d - j) * s) as i64) * z).collect())
}

/// Rank of the middle homology of the Milnor fibre of a generic
/// Q-Gorenstein smoothing: `d − 1` for `1/(d·s²)(1, d·s·a − 1)`, so `n − 1`
/// for `A_{n-1}`. Rigid and smooth points contribute nothing.
pub fn qg_milnor_number(nf: &NormalForm) -> Result<u64, SingularityError> {
    match t_presentation(nf) {
        Ok((d, _)) => Ok(d - 1),
        Err(SingularityError::NoDeformations(_)) => Ok(0),
        Err(e) => Err(e),
    }
}

/// Minimum discrepancy at the point; zero for smooth points.
pub fn min_discrepancy(nf: &NormalForm) -> BigRational {
    match hirzebruch_jung(nf) {
        Ok(hj) => discrepancies(&hj)
            .min()
            .cloned()
            .unwrap_or_else(BigRational::zero),
        Err(_) => BigRational::zero(),
    }
}

/// True when the discrepancy vector sits in the klt range `(-1, 0]`.
pub fn is_klt_range(d: &DiscrepancyVector) -> bool {
    let minus_one = -BigRational::one();
    d.values.iter().all(|a| *a > minus_one && !a.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn normalize_examples() {
        for l in 2..40u64 {
            let s = CyclicQuotientSingularity::new(l, 1, -1).unwrap();
            assert_eq!(normalize(&s).unwrap(), NormalForm::a_type(l).unwrap());
        }
        let smooth = CyclicQuotientSingularity::new(1, 0, 0).unwrap();
        assert!(normalize(&smooth).unwrap().is_smooth());
        let s = CyclicQuotientSingularity::new(5, 2, 3).unwrap();
        assert_eq!(normalize(&s).unwrap(), NormalForm::new(5, 4).unwrap());
    }

    #[test]
    fn rejects_non_isolated() {
        assert_eq!(
            CyclicQuotientSingularity::new(6, 2, 1),
            Err(SingularityError::NonIsolated {
                order: 6,
                weight: 2,
                gcd: 2
            })
        );
        assert!(CyclicQuotientSingularity::new(4, 1, 0).is_err());
        assert_eq!(
            CyclicQuotientSingularity::new(0, 1, 1),
            Err(SingularityError::ZeroOrder)
        );
    }

    #[test]
    fn parse_forms() {
        let s: CyclicQuotientSingularity = "1/9(1,2)".parse().unwrap();
        assert_eq!((s.order, s.weight_a, s.weight_b), (9, 1, 2));
        let s: CyclicQuotientSingularity = " 1/7( -1 , 3 )".parse().unwrap();
        assert_eq!(normalize(&s).unwrap(), NormalForm::new(7, 4).unwrap());
        assert!(matches!(
            "2/9(1,2)".parse::<CyclicQuotientSingularity>(),
            Err(SingularityError::Parse { .. })
        ));
        assert!(matches!(
            "1/9(1,2".parse::<CyclicQuotientSingularity>(),
            Err(SingularityError::Parse { .. })
        ));
        assert!(matches!(
            "1/9(3,2)".parse::<CyclicQuotientSingularity>(),
            Err(SingularityError::NonIsolated { .. })
        ));
    }

    #[test]
    fn hj_examples() {
        for l in 2..30u64 {
            let hj = hirzebruch_jung(&NormalForm::new(l, 1).unwrap()).unwrap();
            assert_eq!(hj.coefficients(), &[l]);
            assert_eq!(hj.self_intersections(), vec![-(l as i64)]);
            let a = hirzebruch_jung(&NormalForm::a_type(l).unwrap()).unwrap();
            assert_eq!(a.coefficients(), vec![2; (l - 1) as usize].as_slice());
        }
        let hj = hirzebruch_jung(&NormalForm::new(9, 2).unwrap()).unwrap();
        assert_eq!(hj.coefficients(), &[5, 2]);
        assert_eq!(hj.fraction(), q(9, 2));
        assert_eq!(
            hirzebruch_jung(&NormalForm::smooth()),
            Err(SingularityError::Smooth)
        );
    }

    #[test]
    fn discrepancy_examples() {
        for l in 2..30i64 {
            let hj = HJResolution::new(vec![l as u64]).unwrap();
            assert_eq!(discrepancies(&hj).values(), &[q(2, l) - q(1, 1)]);
        }
        let a = discrepancies(&HJResolution::new(vec![2; 6]).unwrap());
        assert!(a.values().iter().all(Zero::is_zero));
        // Golden values for [5,2], from an exact 2x2 solve.
        let d = discrepancies(&HJResolution::new(vec![5, 2]).unwrap());
        assert_eq!(d.values(), &[q(-2, 3), q(-1, 3)]);
        assert_eq!(d.log_discrepancies(), vec![q(1, 3), q(2, 3)]);
    }

    #[test]
    fn gorenstein_examples() {
        for n in 2..50u64 {
            assert_eq!(gorenstein_index(&NormalForm::a_type(n).unwrap()), 1);
        }
        for l in (3..51u64).step_by(2) {
            assert_eq!(gorenstein_index(&NormalForm::new(l, 1).unwrap()), l);
        }
        assert_eq!(gorenstein_index(&NormalForm::new(9, 2).unwrap()), 3);
        // brute force for the last one: smallest r with r(1+q) ≡ 0 mod 9
        assert_eq!((1..=9u64).find(|r| (r * 3) % 9 == 0), Some(3));
    }

    #[test]
    fn classify_examples() {
        for l in (5..200u64).step_by(2).filter(|&l| l != 9) {
            let c = classify(&NormalForm::new(l, 2).unwrap());
            assert!(c.is_qg_rigid, "l={l}");
            assert_eq!(c.qdef_dim, Some(0));
        }
        let c = classify(&NormalForm::new(9, 2).unwrap());
        assert!(c.is_t && c.is_primitive_t && !c.is_du_val);
        assert_eq!(c.qdef_dim, Some(1));
        let c = classify(&NormalForm::new(4, 1).unwrap());
        assert!(c.is_t);
        assert_eq!(c.qdef_dim, Some(1));
        for l in 2..40 {
            let c = classify(&NormalForm::a_type(l).unwrap());
            assert!(c.is_du_val && c.is_t);
            assert_eq!(c.qdef_dim, Some(l - 1));
        }
        // 1/15(1,2): w = 3, r = 5, m = 0.
        let c = classify(&NormalForm::new(15, 2).unwrap());
        assert_eq!((c.w, c.r, c.m, c.w0), (3, 5, 0, 3));
        assert!(c.is_qg_rigid);
        // 1/24(1,5): w = 6, r = 4, m = 1, w0 = 2, neither rigid nor T.
        let c = classify(&NormalForm::new(24, 5).unwrap());
        assert_eq!((c.w, c.r, c.m, c.w0), (6, 4, 1, 2));
        assert_eq!(c.qdef_dim, None);
        let c = classify(&NormalForm::smooth());
        assert!(c.is_smooth && c.is_du_val && !c.is_qg_rigid && !c.is_primitive_t);
        assert_eq!(c.qdef_dim, Some(0));
    }

    #[test]
    fn classification_json_marks_unknown() {
        let c = classify(&NormalForm::new(24, 5).unwrap());
        let v = serde_json::to_value(&c).unwrap();
        assert_eq!(v["qdef_dim"], "UNKNOWN");
        assert_eq!(v["is_T"], false);
        let back: SingularityClassification = serde_json::from_value(v).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn versal_weight_examples() {
        let (a, b) = (Character(1, 0), Character(0, 1));
        for l in 2..20u64 {
            let nf = NormalForm::a_type(l).unwrap();
            let w = versal_weights(&nf, [a, b]).unwrap();
            let expect: Vec<Character> = (2..=l as i64).rev().map(|e| Character(e, e)).collect();
            assert_eq!(w, expect);
            let opp = versal_weights(&nf, [-a, -b]).unwrap();
            assert_eq!(opp, expect.iter().map(|&c| -c).collect::<Vec<_>>());
        }
        let w = versal_weights(
            &NormalForm::new(4, 1).unwrap(),
            [Character(-1, 0), Character(0, 1)],
        )
        .unwrap();
        assert_eq!(w, vec![Character(-2, 2)]);
        let w = versal_weights(&NormalForm::new(9, 2).unwrap(), [a, b]).unwrap();
        assert_eq!(w, vec![Character(3, 3)]);
        // 1/8(1,3) = 1/(2·2²)(1, 2·2·1 − 1): two parameters of weight 4z, 2z.
        let w = versal_weights(&NormalForm::new(8, 3).unwrap(), [a, b]).unwrap();
        assert_eq!(w, vec![Character(4, 4), Character(2, 2)]);
        assert!(matches!(
            versal_weights(&NormalForm::new(7, 2).unwrap(), [a, b]),
            Err(SingularityError::NoDeformations(_))
        ));
        assert!(matches!(
            versal_weights(&NormalForm::new(24, 5).unwrap(), [a, b]),
            Err(SingularityError::UnknownQDef(_))
        ));
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(qg_milnor_number(&NormalForm::a_type(7).unwrap()), Ok(6));
        assert_eq!(qg_milnor_number(&NormalForm::new(4, 1).unwrap()), Ok(0));
        assert_eq!(qg_milnor_number(&NormalForm::new(9, 2).unwrap()), Ok(0));
        assert_eq!(qg_milnor_number(&NormalForm::new(8, 3).unwrap()), Ok(1));
        assert_eq!(qg_milnor_number(&NormalForm::new(7, 1).unwrap()), Ok(0));
        assert_eq!(qg_milnor_number(&NormalForm::smooth()), Ok(0));
    }

    #[test]
    fn display() {
        assert_eq!(NormalForm::a_type(5).unwrap().to_string(), "A_4");
        assert_eq!(NormalForm::new(9, 2).unwrap().to_string(), "1/9(1,2)");
        assert_eq!(NormalForm::smooth().to_string(), "smooth");
        assert_eq!(
            NormalForm::new(9, 5).unwrap().canonical(),
            NormalForm::new(9, 2).unwrap()
        );
    }
}
