//! Affine GIT for a torus `(C*)^k` acting diagonally on `C^N`.
//!
//! The action is an integer `k × N` weight matrix `W`; column `i` is the
//! character on coordinate `i`. For diagonal actions the orbit type of a
//! point depends only on which coordinates are nonzero, so points are
//! represented by their [`SupportPoint`].
//!
//! A support `S` is polystable (closed orbit) iff `-w_i` lies in the cone
//! spanned by `{w_j : j ∈ S}` for every `i ∈ S`. The quotient `C^N // T`
//! has dimension `|S*| - rank(W_{S*})`, where `S*` is the largest support
//! admitting a strictly positive relation `W_S x = 0`.

mod lp;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{self, integer_direction, primitive, JsonInt};

pub use lp::{cone_contains, nonneg_solution};

/// Default cap on the number of exponent vectors `invariant_monomials`
/// may visit.
pub const DEFAULT_MONOMIAL_BUDGET: u128 = 1_000_000;

/// Largest `N` for which [`quotient_dim_by_supports`] will enumerate all
/// `2^N` supports.
pub const MAX_SUPPORT_ENUMERATION: usize = 24;

/// Largest box of candidate one-parameter subgroups searched before falling
/// back to a linear program.
const MAX_LAMBDA_BOX: u128 = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GitError {
    #[error("weight matrix must have at least one row")]
    NoRows,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("cannot parse weights {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("cannot parse support {input:?}: {reason}")]
    ParseSupport { input: String, reason: String },
    #[error("support index {index} out of range for {n_coords} coordinates")]
    SupportOutOfRange { index: usize, n_coords: usize },
    #[error("enumeration would visit {required} exponent vectors, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error(
        "support enumeration over {0} coordinates exceeds the limit of {MAX_SUPPORT_ENUMERATION}"
    )]
    TooManyCoordinates(usize),
    #[error("weights do not fit in 64 bits; monomial enumeration unsupported")]
    WeightTooLarge,
}

/// Integer weights of a `k`-torus on `N` coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSystem {
    rank: usize,
    n_coords: usize,
    matrix: Vec<Vec<BigInt>>,
}

impl WeightSystem {
    pub fn new(matrix: Vec<Vec<BigInt>>) -> Result<Self, GitError> {
        let expected = matrix.first().ok_or(GitError::NoRows)?.len();
        for (row, r) in matrix.iter().enumerate() {
            if r.len() != expected {
                return Err(GitError::Ragged {
                    row,
                    found: r.len(),
                    expected,
                });
            }
        }
        Ok(Self {
            rank: matrix.len(),
            n_coords: expected,
            matrix,
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, GitError> {
        Self::new(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Builds a system from its columns; `rank` is needed when there are none.
    pub fn from_columns<C: AsRef<[i64]>>(rank: usize, columns: &[C]) -> Result<Self, GitError> {
        if rank == 0 {
            return Err(GitError::NoRows);
        }
        let mut matrix = vec![Vec::with_capacity(columns.len()); rank];
        for (i, c) in columns.iter().enumerate() {
            let c = c.as_ref();
            if c.len() != rank {
                return Err(GitError::Ragged {
                    row: i,
                    found: c.len(),
                    expected: rank,
                });
            }
            for (row, &x) in matrix.iter_mut().zip(c) {
                row.push(BigInt::from(x));
            }
        }
        Self::new(matrix)
    }

    /// Parses `"5,4,3,2"` (one row) or `"1,0;0,1"` (rows separated by `;`).
    pub fn parse(input: &str) -> Result<Self, GitError> {
        let err = |reason: String| GitError::Parse {
            input: input.to_string(),
            reason,
        };
        let trimmed = input.trim();
        if trimmed.is_empty() {
            return Err(err("empty weight list".into()));
        }
        let rows = trimmed
            .split(';')
            .map(|row| {
                let row = row.trim();
                if row.is_empty() {
                    return Ok(Vec::new());
                }
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigInt>()
                            .map_err(|_| err(format!("{:?} is not an integer", x.trim())))
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(rows).map_err(|e| err(e.to_string()))
    }

    /// Accepts a JSON 2D array, or the object form produced by serialization.
    pub fn from_json(input: &str) -> Result<Self, GitError> {
        serde_json::from_str(input).map_err(|e| GitError::Parse {
            input: input.to_string(),
            reason: e.to_string(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n_coords(&self) -> usize {
        self.n_coords
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn column(&self, i: usize) -> Vec<BigInt> {
        self.matrix.iter().map(|r| r[i].clone()).collect()
    }

    pub fn negated(&self) -> Self {
        Self {
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().map(|x| -x).collect())
                .collect(),
            ..self.clone()
        }
    }

    /// Columns restricted to `support`, in index order.
    pub fn restrict(&self, support: &SupportPoint) -> Self {
        self.check(support);
        Self {
            rank: self.rank,
            n_coords: support.len(),
            matrix: self
                .matrix
                .iter()
                .map(|r| support.iter().map(|i| r[i].clone()).collect())
                .collect(),
        }
    }

    fn check(&self, p: &SupportPoint) {
        if let Some(&i) = p.indices.last() {
            assert!(
                i < self.n_coords,
                "support index {i} out of range for {} coordinates",
                self.n_coords
            );
        }
    }

    fn pairing(&self, lambda: &[BigInt], i: usize) -> BigInt {
        self.matrix.iter().zip(lambda).map(|(r, l)| &r[i] * l).sum()
    }

    /// Primitive directions of the nonzero columns in `support`, each with the
    /// coordinates pointing that way, plus the zero columns.
    fn directions(
        &self,
        support: &SupportPoint,
    ) -> (BTreeMap<Vec<BigInt>, Vec<usize>>, Vec<usize>) {
        let mut dirs: BTreeMap<Vec<BigInt>, Vec<usize>> = BTreeMap::new();
        let mut zeros = Vec::new();
        for i in support.iter() {
            let c = self.column(i);
            if c.iter().all(Zero::is_zero) {
                zeros.push(i);
            } else {
                dirs.entry(primitive(&c)).or_default().push(i);
            }
        }
        (dirs, zeros)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightSystemRepr {
    rank: usize,
    n_coords: usize,
    matrix: Vec<Vec<JsonInt>>,
}

impl Serialize for WeightSystem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WeightSystemRepr {
            rank: self.rank,
            n_coords: self.n_coords,
            matrix: self
                .matrix
                .iter()
                .map(|r| r.iter().cloned().map(JsonInt).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Matrix(Vec<Vec<JsonInt>>),
            Object(WeightSystemRepr),
        }
        let matrix = match Repr::deserialize(d)? {
            Repr::Matrix(m) => m,
            Repr::Object(o) => o.matrix,
        };
        WeightSystem::new(
            matrix
                .into_iter()
                .map(|r| r.into_iter().map(|x| x.0).collect())
                .collect(),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// The set of nonzero coordinates of a point (0-based indices).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SupportPoint {
    indices: Vec<usize>,
}

impl SupportPoint {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = indices.into_iter().collect();
        Self {
            indices: set.into_iter().collect(),
        }
    }

    pub fn origin() -> Self {
        Self::default()
    }

    pub fn full(n_coords: usize) -> Self {
        Self {
            indices: (0..n_coords).collect(),
        }
    }

    /// Parses a comma-separated list of 1-based coordinate indices; an empty
    /// string is the origin.
    pub fn parse_one_based(input: &str, n_coords: usize) -> Result<Self, GitError> {
        let err = |reason: String| GitError::ParseSupport {
            input: input.to_string(),
            reason,
        };
        let t = input.trim();
        if t.is_empty() {
            return Ok(Self::origin());
        }
        let mut out = Vec::new();
        for x in t.split(',') {
            let i: usize = x
                .trim()
                .parse()
                .map_err(|_| err(format!("{:?} is not a positive index", x.trim())))?;
            if i == 0 || i > n_coords {
                return Err(GitError::SupportOutOfRange { index: i, n_coords });
            }
            out.push(i - 1);
        }
        Ok(Self::new(out))
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &SupportPoint) -> bool {
        self.iter().all(|i| other.contains(i))
    }
}

impl fmt::Display for SupportPoint {
    /// 1-based, matching the CLI syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, i) in self.indices.iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GITResult {
    pub quotient_dim: usize,
    pub kernel_rank: usize,
    pub effective_rank: usize,
}

/// A one-parameter subgroup `λ` with `⟨λ, w_i⟩ ≥ 0` on the support (strictly
/// somewhere), and the support of `lim_{t→0} λ(t)·x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Destabilization {
    pub lambda: Vec<JsonInt>,
    pub limit: SupportPoint,
}

impl Destabilization {
    pub fn lambda(&self) -> Vec<BigInt> {
        self.lambda.iter().map(|x| x.0.clone()).collect()
    }
}

pub fn analyze(ws: &WeightSystem) -> GITResult {
    let kernel_rank = kernel_rank(ws);
    GITResult {
        quotient_dim: quotient_dim(ws),
        kernel_rank,
        effective_rank: ws.rank - kernel_rank,
    }
}

/// Dimension of `C^N // T`. Uses the closed form for `k = 1`.
pub fn quotient_dim(ws: &WeightSystem) -> usize {
    match quotient_dim_closed_form(ws) {
        Some(d) => d,
        None => quotient_dim_general(ws),
    }
}

/// For a single `C*`: zero-weight coordinates, plus `p + q − 1` when `p`
/// positive and `q` negative weights are both present.
pub fn quotient_dim_closed_form(ws: &WeightSystem) -> Option<usize> {
    if ws.rank != 1 {
        return None;
    }
    let row = &ws.matrix[0];
    let zero = row.iter().filter(|x| x.is_zero()).count();
    let pos = row.iter().filter(|x| x.is_positive()).count();
    let neg = row.iter().filter(|x| x.is_negative()).count();
    Some(zero + if pos > 0 && neg > 0 { pos + neg - 1 } else { 0 })
}

/// `|S*| − rank(W_{S*})` with `S*` the polystable core of the full support.
pub fn quotient_dim_general(ws: &WeightSystem) -> usize {
    let core = polystable_core(ws, &SupportPoint::full(ws.n_coords));
    core.len() - arith::rank(ws.restrict(&core).matrix())
}

/// Maximum of `|S| − rank(W_S)` over every support `S` on which
/// `W_S x = 0` has a strictly positive solution, by visiting all `2^N`
/// supports.
pub fn quotient_dim_by_supports(ws: &WeightSystem) -> Result<usize, GitError> {
    let n = ws.n_coords;
    if n > MAX_SUPPORT_ENUMERATION {
        return Err(GitError::TooManyCoordinates(n));
    }
    let mut best = 0;
    for mask in 1u32..(1u32 << n) {
        let support = SupportPoint::new((0..n).filter(|i| mask >> i & 1 == 1));
        if support.len() <= best {
            continue;
        }
        let sub = ws.restrict(&support);
        let dim = support.len() - arith::rank(sub.matrix());
        if dim > best && admits_positive_relation(&sub) {
            best = dim;
        }
    }
    Ok(best)
}

/// Whether `W x = 0` has a solution with every coordinate strictly positive;
/// substituting `x = 1 + y` turns this into `W y = −W·1, y ≥ 0`.
fn admits_positive_relation(ws: &WeightSystem) -> bool {
    let a: Vec<Vec<BigRational>> = ws.matrix.iter().map(|r| lp::to_rational(r)).collect();
    let b: Vec<BigRational> = ws
        .matrix
        .iter()
        .map(|r| -BigRational::from_integer(r.iter().sum()))
        .collect();
    lp::nonneg_solution(&a, &b).is_some()
}

/// Dimension of the subtorus acting trivially: `k − rank(W)`.
pub fn kernel_rank(ws: &WeightSystem) -> usize {
    ws.rank - arith::rank(&ws.matrix)
}

/// Integer basis (primitive vectors) of `{λ : λ·W = 0}`.
pub fn kernel_basis(ws: &WeightSystem) -> Vec<Vec<BigInt>> {
    // Null space of Wᵀ via reduced row echelon form of W transposed.
    let k = ws.rank;
    let mut m: Vec<Vec<BigRational>> = (0..ws.n_coords)
        .map(|i| {
            ws.matrix
                .iter()
                .map(|r| BigRational::from_integer(r[i].clone()))
                .collect()
        })
        .collect();
    let r = arith::row_reduce(&mut m);
    let mut pivots = Vec::with_capacity(r);
    for row in m.iter().take(r) {
        pivots.push(row.iter().position(|x| !x.is_zero()).expect("pivot row"));
    }
    (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); k];
            v[free] = BigRational::one();
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            arith::primitive_up_to_sign(&integer_direction(&v))
        })
        .collect()
}

/// The largest sub-support of `p` whose orbit is closed: the coordinates
/// `i ∈ S` with `−w_i` in the cone over `W_S`.
pub fn polystable_core(ws: &WeightSystem, p: &SupportPoint) -> SupportPoint {
    ws.check(p);
    let (dirs, zeros) = ws.directions(p);
    let gens: Vec<&[BigInt]> = dirs.keys().map(Vec::as_slice).collect();
    let mut core = zeros;
    for (d, idx) in &dirs {
        let neg: Vec<BigInt> = d.iter().map(|x| -x).collect();
        if lp::cone_contains(&gens, &neg) {
            core.extend(idx);
        }
    }
    SupportPoint::new(core)
}

pub fn is_polystable(ws: &WeightSystem, p: &SupportPoint) -> bool {
    polystable_core(ws, p).len() == p.len()
}

/// True when some nonzero point has a closed orbit.
pub fn has_nonempty_polystable(ws: &WeightSystem) -> bool {
    !polystable_core(ws, &SupportPoint::full(ws.n_coords)).is_empty()
}

/// A destabilizing one-parameter subgroup for `p`, or `None` when the orbit
/// is closed.
///
/// `λ` is the first valid vector when candidates are ordered by sup-norm and
/// then lexicographically, searched up to the largest entry of a primitive
/// column direction (always enough for `k ≤ 2`). Larger problems fall back
/// to an exact linear program.
pub fn destabilizing_limit(ws: &WeightSystem, p: &SupportPoint) -> Option<Destabilization> {
    if is_polystable(ws, p) {
        return None;
    }
    let (dirs, _) = ws.directions(p);
    let dirs: Vec<&Vec<BigInt>> = dirs.keys().collect();
    let lambda = box_search(ws.rank, &dirs).unwrap_or_else(|| lp_certificate(ws.rank, &dirs));
    let limit = SupportPoint::new(p.iter().filter(|&i| ws.pairing(&lambda, i).is_zero()));
    Some(Destabilization {
        lambda: lambda.into_iter().map(JsonInt).collect(),
        limit,
    })
}

/// Repeats [`destabilizing_limit`] until the support is polystable.
pub fn limit_chain(ws: &WeightSystem, p: &SupportPoint) -> Vec<Destabilization> {
    let mut out = Vec::new();
    let mut cur = p.clone();
    while let Some(step) = destabilizing_limit(ws, &cur) {
        cur = step.limit.clone();
        out.push(step);
    }
    out
}

fn destabilizes(lambda: &[BigInt], dirs: &[&Vec<BigInt>]) -> bool {
    let mut strict = false;
    for d in dirs {
        let v: BigInt = d.iter().zip(lambda).map(|(a, b)| a * b).sum();
        if v.is_negative() {
            return false;
        }
        strict |= v.is_positive();
    }
    strict
}

fn box_search(k: usize, dirs: &[&Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let bound = dirs
        .iter()
        .flat_map(|d| d.iter())
        .map(|x| x.abs().to_i64().unwrap_or(i64::MAX))
        .max()
        .unwrap_or(1)
        .max(1);
    let side = (2 * bound as u128).saturating_add(1);
    if side
        .checked_pow(k as u32)
        .is_none_or(|s| s > MAX_LAMBDA_BOX)
    {
        return None;
    }
    for norm in 1..=bound {
        let mut cand = vec![-norm; k];
        loop {
            if cand.iter().any(|x| x.abs() == norm) {
                let lambda: Vec<BigInt> = cand.iter().map(|&x| BigInt::from(x)).collect();
                if destabilizes(&lambda, dirs) {
                    return Some(lambda);
                }
            }
            // Lexicographic successor in [-norm, norm]^k.
            let mut pos = k;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if cand[pos] < norm {
                    cand[pos] += 1;
                    cand[pos + 1..].iter_mut().for_each(|x| *x = -norm);
                    pos = usize::MAX;
                    break;
                }
            }
            if pos != usize::MAX {
                break;
            }
        }
    }
    None
}

/// Solves `⟨λ, d⟩ ≥ 0` for all directions with `Σ_d ⟨λ, d⟩ = 1`, writing
/// `λ = p − q` with `p, q ≥ 0`.
fn lp_certificate(k: usize, dirs: &[&Vec<BigInt>]) -> Vec<BigInt> {
    let nd = dirs.len();
    let cols = 2 * k + nd;
    let mut a = Vec::with_capacity(nd + 1);
    let mut b = Vec::with_capacity(nd + 1);
    for (j, d) in dirs.iter().enumerate() {
        let mut row = vec![BigRational::zero(); cols];
        for i in 0..k {
            row[i] = BigRational::from_integer(d[i].clone());
            row[k + i] = -row[i].clone();
        }
        row[2 * k + j] = -BigRational::one();
        a.push(row);
        b.push(BigRational::zero());
    }
    let mut total = vec![BigRational::zero(); cols];
    for d in dirs {
        for i in 0..k {
            total[i] += BigRational::from_integer(d[i].clone());
        }
    }
    for i in 0..k {
        total[k + i] = -total[i].clone();
    }
    a.push(total);
    b.push(BigRational::one());
    let x = lp::nonneg_solution(&a, &b).expect("non-closed orbit has a destabilizer");
    let lambda: Vec<BigRational> = (0..k).map(|i| &x[i] - &x[k + i]).collect();
    integer_direction(&lambda)
}

/// A `λ` with `⟨λ, w_i⟩ > 0` for every column, if the columns lie in an
/// open half-space.
pub fn open_half_space_witness(ws: &WeightSystem) -> Option<Vec<BigInt>> {
    let k = ws.rank;
    let n = ws.n_coords;
    if n == 0 {
        return Some((0..k).map(|i| BigInt::from(u8::from(i == 0))).collect());
    }
    let cols = 2 * k + n;
    let mut a = Vec::with_capacity(n);
    for j in 0..n {
        let mut row = vec![BigRational::zero(); cols];
        for i in 0..k {
            row[i] = BigRational::from_integer(ws.matrix[i][j].clone());
            row[k + i] = -row[i].clone();
        }
        row[2 * k + j] = -BigRational::one();
        a.push(row);
    }
    let b = vec![BigRational::one(); n];
    let x = lp::nonneg_solution(&a, &b)?;
    let lambda: Vec<BigRational> = (0..k).map(|i| &x[i] - &x[k + i]).collect();
    Some(integer_direction(&lambda))
}

/// Number of exponent vectors in `N^n` of total degree `≤ cap`, i.e.
/// `C(cap + n, n)`, saturating.
pub fn monomial_count(n: usize, cap: u32) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=n as u128 {
        c = match c.checked_mul(cap as u128 + i) {
            Some(v) => v / i,
            None => return u128::MAX,
        };
    }
    c
}

/// All exponent vectors `m` of total degree `≤ degree_cap` with `W m = 0`,
/// by exhaustive enumeration in lexicographic order.
pub fn invariant_monomials(
    ws: &WeightSystem,
    degree_cap: u32,
    budget: u128,
) -> Result<Vec<Vec<u32>>, GitError> {
    let required = monomial_count(ws.n_coords, degree_cap);
    if required > budget {
        return Err(GitError::BudgetExceeded { required, budget });
    }
    let cols: Vec<Vec<i128>> = (0..ws.n_coords)
        .map(|i| {
            ws.matrix
                .iter()
                .map(|r| {
                    r[i].to_i64()
                        .map(i128::from)
                        .ok_or(GitError::WeightTooLarge)
                })
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    let mut exps = vec![0u32; ws.n_coords];
    let mut acc = vec![0i128; ws.rank];
    enumerate(&cols, 0, degree_cap, &mut exps, &mut acc, &mut out);
    Ok(out)
}

fn enumerate(
    cols: &[Vec<i128>],
    i: usize,
    left: u32,
    exps: &mut Vec<u32>,
    acc: &mut Vec<i128>,
    out: &mut Vec<Vec<u32>>,
) {
    if i == cols.len() {
        if acc.iter().all(|&x| x == 0) {
            out.push(exps.clone());
        }
        return;
    }
    for e in 0..=left {
        exps[i] = e;
        enumerate(cols, i + 1, left - e, exps, acc, out);
        acc.iter_mut().zip(&cols[i]).for_each(|(a, w)| *a += w);
    }
    acc.iter_mut()
        .zip(&cols[i])
        .for_each(|(a, w)| *a -= (left as i128 + 1) * w);
    exps[i] = 0;
}

/// Rank of the lattice spanned by exponent vectors.
pub fn exponent_lattice_rank(vectors: &[Vec<u32>]) -> usize {
    let Some(n) = vectors.first().map(Vec::len) else {
        return 0;
    };
    // Incremental echelon basis; stops once the basis spans everything.
    let mut basis: Vec<(usize, Vec<BigInt>)> = Vec::new();
    for v in vectors {
        if basis.len() == n {
            break;
        }
        let mut v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        for (pc, b) in &basis {
            if !v[*pc].is_zero() {
                let (f, g) = (b[*pc].clone(), v[*pc].clone());
                v.iter_mut()
                    .zip(b)
                    .for_each(|(x, y)| *x = &*x * &f - y * &g);
                v = primitive(&v);
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            basis.push((pc, v));
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(rows: &[&[i64]]) -> WeightSystem {
        WeightSystem::from_rows(rows).unwrap()
    }

    fn x_row(l: i64) -> Vec<i64> {
        let mut r: Vec<i64> = (2..=l).rev().collect();
        r.extend((2..=l).rev().map(|x| -x));
        r
    }

    fn y_row(l: i64) -> Vec<i64> {
        (2..=l).rev().collect()
    }

    fn ints(v: &[i64]) -> Vec<JsonInt> {
        v.iter().map(|&x| JsonInt(BigInt::from(x))).collect()
    }

    #[test]
    fn parse_formats() {
        let w = WeightSystem::parse("5,4,3,2").unwrap();
        assert_eq!((w.rank(), w.n_coords()), (1, 4));
        let w = WeightSystem::parse(" 1, 0 ; 0 ,-1").unwrap();
        assert_eq!(w, ws(&[&[1, 0], &[0, -1]]));
        assert!(matches!(
            WeightSystem::parse("1,2;3"),
            Err(GitError::Parse { .. })
        ));
        assert!(matches!(
            WeightSystem::parse("1,x"),
            Err(GitError::Parse { .. })
        ));
        assert!(matches!(
            WeightSystem::parse(""),
            Err(GitError::Parse { .. })
        ));
        let j = WeightSystem::from_json("[[2,-2],[2,2]]").unwrap();
        assert_eq!(j, ws(&[&[2, -2], &[2, 2]]));
        let big = WeightSystem::from_json(r#"[["123456789012345678901234567890", 1]]"#).unwrap();
        assert_eq!(
            big.matrix()[0][0].to_string(),
            "123456789012345678901234567890"
        );
        assert!(WeightSystem::from_json("[[1],[2,3]]").is_err());
    }

    #[test]
    fn json_roundtrip() {
        let w = ws(&[&[1, -2, 3], &[0, 4, -5]]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"rank":2,"n_coords":3,"matrix":[[1,-2,3],[0,4,-5]]}"#);
        assert_eq!(serde_json::from_str::<WeightSystem>(&s).unwrap(), w);
        assert_eq!(
            serde_json::from_str::<WeightSystem>("[[1,-2,3],[0,4,-5]]").unwrap(),
            w
        );
    }

    #[test]
    fn quotient_dim_examples() {
        let x5 = ws(&[&x_row(5)]);
        assert_eq!(quotient_dim(&x5), 7);
        assert_eq!(quotient_dim_general(&x5), 7);
        assert_eq!(quotient_dim(&ws(&[&y_row(5)])), 0);
        assert_eq!(quotient_dim(&ws(&[&[0, 0, 0], &[0, 0, 0]])), 3);
        let x2 = WeightSystem::from_columns(2, &[[2, 2], [-2, 2], [2, -2], [-2, -2]]).unwrap();
        assert_eq!(quotient_dim(&x2), 2);
        assert_eq!(quotient_dim_by_supports(&x2), Ok(2));
    }

    #[test]
    fn kernel_examples() {
        let cols: Vec<[i64; 2]> = x_row(7).iter().map(|&x| [x, x]).collect();
        let x7 = WeightSystem::from_columns(2, &cols).unwrap();
        assert_eq!(kernel_rank(&x7), 1);
        assert_eq!(
            kernel_basis(&x7),
            vec![vec![BigInt::from(1), BigInt::from(-1)]]
        );
        assert_eq!(kernel_rank(&ws(&[&[0, 0, 0], &[0, 0, 0]])), 2);
        let x2 = WeightSystem::from_columns(2, &[[2, 2], [-2, 2], [2, -2], [-2, -2]]).unwrap();
        assert_eq!(kernel_rank(&x2), 0);
        assert!(kernel_basis(&x2).is_empty());
        assert_eq!(
            analyze(&x7),
            GITResult {
                quotient_dim: 11,
                kernel_rank: 1,
                effective_rank: 1
            }
        );
    }

    #[test]
    fn polystability_examples() {
        let y = ws(&[&y_row(7)]);
        assert!(is_polystable(&y, &SupportPoint::origin()));
        assert!(!is_polystable(&y, &SupportPoint::new([2])));
        assert!(!is_polystable(&y, &SupportPoint::full(6)));
        let x = ws(&[&x_row(6)]);
        assert!(is_polystable(&x, &SupportPoint::full(10)));
        assert!(!is_polystable(&x, &SupportPoint::new(0..5)));
        assert!(is_polystable(&x, &SupportPoint::new([0, 5])));
    }

    #[test]
    fn destabilizer_examples() {
        let y = ws(&[&y_row(5)]);
        let d = destabilizing_limit(&y, &SupportPoint::full(4)).unwrap();
        assert_eq!(d.lambda, ints(&[1]));
        assert!(d.limit.is_empty());
        let x = ws(&[&x_row(5)]);
        assert_eq!(destabilizing_limit(&x, &SupportPoint::full(8)), None);
        let pm = ws(&[&[1, -1]]);
        let d = destabilizing_limit(&pm, &SupportPoint::new([0])).unwrap();
        assert_eq!(d.lambda, ints(&[1]));
        assert!(d.limit.is_empty());
        let d = destabilizing_limit(&pm, &SupportPoint::new([1])).unwrap();
        assert_eq!(d.lambda, ints(&[-1]));
    }

    #[test]
    fn destabilizer_two_torus_limit() {
        // (1,0),(−1,0),(0,1): λ = (0,1) kills the third and keeps the pair.
        let w = WeightSystem::from_columns(2, &[[1, 0], [-1, 0], [0, 1]]).unwrap();
        let d = destabilizing_limit(&w, &SupportPoint::full(3)).unwrap();
        assert_eq!(d.lambda, ints(&[0, 1]));
        assert_eq!(d.limit, SupportPoint::new([0, 1]));
        assert!(is_polystable(&w, &d.limit));
    }

    #[test]
    fn lp_fallback_certificate() {
        let dirs = [
            vec![BigInt::from(1), BigInt::from(2), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(-3)],
        ];
        let refs: Vec<&Vec<BigInt>> = dirs.iter().collect();
        let lambda = lp_certificate(3, &refs);
        assert!(destabilizes(&lambda, &refs));
    }

    #[test]
    fn half_space() {
        assert!(open_half_space_witness(&ws(&[&y_row(9)])).is_some());
        assert!(open_half_space_witness(&ws(&[&x_row(9)])).is_none());
        assert!(open_half_space_witness(&ws(&[&[1, 0]])).is_none());
        let w = WeightSystem::from_columns(2, &[[1, 3], [2, -1]]).unwrap();
        let l = open_half_space_witness(&w).unwrap();
        for i in 0..2 {
            assert!(w.pairing(&l, i).is_positive());
        }
    }

    #[test]
    fn monomial_examples() {
        let m = invariant_monomials(&ws(&[&[1, -1]]), 2, DEFAULT_MONOMIAL_BUDGET).unwrap();
        assert_eq!(m, vec![vec![0, 0], vec![1, 1]]);
        let m = invariant_monomials(&ws(&[&[2, -3]]), 5, DEFAULT_MONOMIAL_BUDGET).unwrap();
        assert!(m.contains(&vec![3, 2]));
        let x3 = ws(&[&[3, 2, -3, -2]]);
        let m = invariant_monomials(&x3, 6, DEFAULT_MONOMIAL_BUDGET).unwrap();
        for v in [[1, 0, 1, 0], [0, 1, 0, 1], [0, 3, 2, 0]] {
            assert!(m.contains(&v.to_vec()));
        }
        assert_eq!(exponent_lattice_rank(&m), 3);
        assert_eq!(
            invariant_monomials(&x3, 40, 1000),
            Err(GitError::BudgetExceeded {
                required: monomial_count(4, 40),
                budget: 1000
            })
        );
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomial_count(2, 2), 6);
        assert_eq!(monomial_count(5, 12), 6188);
        assert_eq!(monomial_count(0, 7), 1);
    }

    #[test]
    fn support_parsing() {
        let s = SupportPoint::parse_one_based("1, 3,2", 4).unwrap();
        assert_eq!(s, SupportPoint::new([0, 1, 2]));
        assert_eq!(s.to_string(), "{1,2,3}");
        assert_eq!(
            SupportPoint::parse_one_based("", 4).unwrap(),
            SupportPoint::origin()
        );
        assert!(matches!(
            SupportPoint::parse_one_based("0", 4),
            Err(GitError::SupportOutOfRange { .. })
        ));
        assert!(matches!(
            SupportPoint::parse_one_based("5", 4),
            Err(GitError::SupportOutOfRange { .. })
        ));
    }
}
