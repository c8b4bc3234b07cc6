//! Diagonal cyclic quotients of `P²` and `P¹×P¹`.
//!
//! The group `Z_l` acts by `ζ·z_i = ζ^{c_i} z_i` on homogeneous coordinates.
//! Because the action commutes with the big torus, stabilizers are constant
//! along torus orbits, so the branch locus is found by visiting the finitely
//! many orbits (coordinate strata). The action must have isolated fixed
//! points: any positive-dimensional orbit with nontrivial stabilizer is
//! rejected.
//!
//! Chart conventions. The residual torus `(C*)²` acts on homogeneous
//! coordinates with characters
//!
//! * `P²`: `z0 ↦ λ1 z0`, `z1 ↦ λ2 z1`, `z2` fixed;
//! * `P¹×P¹`: `z0 ↦ λ1 z0`, `w0 ↦ λ2 w0`, `z1`, `w1` fixed.
//!
//! At a coordinate point with `z_k ≠ 0` the chart coordinates are the
//! ratios `z_i / z_k`, carrying cyclic weight `c_i − c_k` and character
//! `e_i − e_k`. With this choice the `A_{l-1}` point `[0:0:1]` of `Y_l`
//! (and `([0:1],[0:1])` of `X_l`) has chart characters `(1,0), (0,1)`, so
//! its versal parameters carry `(l, l), (l-1, l-1), …, (2, 2)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, gcd_u64, residue};
use crate::cqsing::{
    self, classify, normalize, versal_weights, Character, CyclicQuotientSingularity, NormalForm,
    SingularityError,
};
use crate::torusgit::WeightSystem;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("group order must be at least 2, got {0}")]
    InvalidOrder(u64),
    #[error("{ambient} needs {expected} weights, got {found}")]
    WeightCount {
        ambient: Ambient,
        expected: usize,
        found: usize,
    },
    #[error("the action is not effective: a subgroup of order {0} acts trivially")]
    NotEffective(u64),
    #[error("a subgroup of order {subgroup_order} fixes the {locus} pointwise; the fixed locus is not isolated")]
    NonIsolated { subgroup_order: u64, locus: String },
    #[error("qDef dimension unknown at {point} ({singularity})")]
    UnknownQDef {
        point: String,
        singularity: NormalForm,
    },
    #[error(transparent)]
    Singularity(#[from] SingularityError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ambient {
    P2,
    P1xP1,
}

impl Ambient {
    /// `(−K)²` of the ambient surface.
    pub fn anticanonical_degree(self) -> u64 {
        match self {
            Ambient::P2 => 9,
            Ambient::P1xP1 => 8,
        }
    }

    /// Rank of `H²`; the torus action is trivial on cohomology, so this is
    /// also the rank of the invariant part.
    pub fn b2(self) -> u32 {
        match self {
            Ambient::P2 => 1,
            Ambient::P1xP1 => 2,
        }
    }

    fn weight_count(self) -> usize {
        match self {
            Ambient::P2 => 3,
            Ambient::P1xP1 => 2,
        }
    }

    /// Homogeneous coordinates grouped by factor: (name, torus character).
    fn factors(self) -> Vec<Vec<(&'static str, Character)>> {
        match self {
            Ambient::P2 => vec![vec![
                ("z0", Character(1, 0)),
                ("z1", Character(0, 1)),
                ("z2", Character::ZERO),
            ]],
            Ambient::P1xP1 => vec![
                vec![("z0", Character(1, 0)), ("z1", Character::ZERO)],
                vec![("w0", Character(0, 1)), ("w1", Character::ZERO)],
            ],
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::P2 => "P2",
            Ambient::P1xP1 => "P1xP1",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `(P¹×P¹)/Z_l`, `ζ·([z0:z1],[w0:w1]) = ([ζz0:z1],[ζ⁻¹w0:w1])`, `l ≥ 2`.
    X,
    /// `P²/Z_l`, `ζ·[z0:z1:z2] = [ζz0:ζ⁻¹z1:z2]`, `l ≥ 3` odd.
    Y,
}

impl Family {
    pub fn action(self, l: u64) -> Result<CyclicAction, SurfaceError> {
        match self {
            Family::X => CyclicAction::new(Ambient::P1xP1, l, vec![1, -1]),
            Family::Y => CyclicAction::new(Ambient::P2, l, vec![1, -1, 0]),
        }
    }

    /// Orders admitted by the preset (the Y family needs odd `l`).
    pub fn is_valid_order(self, l: u64) -> bool {
        match self {
            Family::X => l >= 2,
            Family::Y => l >= 3 && l % 2 == 1,
        }
    }

    pub fn min_order(self) -> u64 {
        match self {
            Family::X => 2,
            Family::Y => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::X => "X",
            Family::Y => "Y",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "X" | "x" => Ok(Family::X),
            "Y" | "y" => Ok(Family::Y),
            other => Err(format!("unknown family {other:?}; expected X or Y")),
        }
    }
}

/// A diagonal `Z_l` action. For `P²` the weights are `(c0, c1, c2)`; for
/// `P¹×P¹` they are one weight per factor, acting on its first coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclicAction {
    pub ambient: Ambient,
    pub order: u64,
    pub weights: Vec<i64>,
}

impl CyclicAction {
    pub fn new(ambient: Ambient, order: u64, weights: Vec<i64>) -> Result<Self, SurfaceError> {
        if order < 2 {
            return Err(SurfaceError::InvalidOrder(order));
        }
        if weights.len() != ambient.weight_count() {
            return Err(SurfaceError::WeightCount {
                ambient,
                expected: ambient.weight_count(),
                found: weights.len(),
            });
        }
        Ok(Self {
            ambient,
            order,
            weights,
        })
    }

    /// The preset this action coincides with, if any.
    pub fn preset(&self) -> Option<Family> {
        let l = self.order;
        let res: Vec<u64> = self.weights.iter().map(|&w| residue(w, l)).collect();
        let matches = |w: &[i64]| w.iter().map(|&x| residue(x, l)).eq(res.iter().copied());
        match self.ambient {
            Ambient::P1xP1 if matches(&[1, -1]) => Some(Family::X),
            Ambient::P2 if matches(&[1, -1, 0]) => Some(Family::Y),
            _ => None,
        }
    }

    /// Cyclic weights of the homogeneous coordinates, grouped by factor.
    fn coordinate_weights(&self) -> Vec<Vec<i64>> {
        match self.ambient {
            Ambient::P2 => vec![self.weights.clone()],
            Ambient::P1xP1 => self.weights.iter().map(|&w| vec![w, 0]).collect(),
        }
    }
}

/// A torus orbit of the ambient: for each factor, the indices of the
/// homogeneous coordinates that are nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusOrbit {
    pub nonzero: Vec<Vec<usize>>,
}

impl TorusOrbit {
    pub fn dim(&self) -> usize {
        self.nonzero.iter().map(|s| s.len() - 1).sum()
    }
}

/// Every torus orbit of the ambient.
pub fn torus_orbits(ambient: Ambient) -> Vec<TorusOrbit> {
    let mut out = vec![TorusOrbit {
        nonzero: Vec::new(),
    }];
    for factor in ambient.factors() {
        let n = factor.len();
        let subsets: Vec<Vec<usize>> = (1u32..(1 << n))
            .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
            .collect();
        out = out
            .into_iter()
            .flat_map(|o| {
                subsets.iter().map(move |s| {
                    let mut nz = o.nonzero.clone();
                    nz.push(s.clone());
                    TorusOrbit { nonzero: nz }
                })
            })
            .collect();
    }
    out
}

/// Order of the subgroup fixing the points of `orbit`:
/// `gcd(l, c_i − c_j)` over nonzero pairs within each factor.
pub fn stabilizer_order(action: &CyclicAction, orbit: &TorusOrbit) -> u64 {
    let cw = action.coordinate_weights();
    let mut g = action.order;
    for (weights, nz) in cw.iter().zip(&orbit.nonzero) {
        for &i in nz {
            g = gcd_u64(g, residue(weights[i] - weights[nz[0]], action.order));
        }
    }
    g
}

/// Same as [`stabilizer_order`], by testing every group element.
pub fn stabilizer_order_brute(action: &CyclicAction, orbit: &TorusOrbit) -> u64 {
    let l = action.order as i128;
    let cw = action.coordinate_weights();
    (0..l)
        .filter(|&k| {
            cw.iter().zip(&orbit.nonzero).all(|(weights, nz)| {
                let e0 = (k * weights[nz[0]] as i128).rem_euclid(l);
                nz.iter()
                    .all(|&i| (k * weights[i] as i128).rem_euclid(l) == e0)
            })
        })
        .count() as u64
}

/// A singular point of the quotient with its local data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRecord {
    pub point_label: String,
    pub stabilizer_order: u64,
    pub local_cyclic_weights: [u64; 2],
    pub local_torus_weights: [Character; 2],
    pub singularity: NormalForm,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub action: CyclicAction,
    pub singular_locus: Vec<FixedPointRecord>,
    #[serde(with = "arith::rational_json")]
    pub volume: BigRational,
    /// `None` when the action is not one of the presets.
    pub aut0_dim: Option<u32>,
    pub b2_base: u32,
}

/// Labels such as `[0:0:1]` or `([0:1],[1:0])`.
fn point_label(ambient: Ambient, nonzero: &[usize]) -> String {
    let factors = ambient.factors();
    let parts: Vec<String> = factors
        .iter()
        .zip(nonzero)
        .map(|(f, &k)| {
            let coords: Vec<&str> = (0..f.len())
                .map(|i| if i == k { "1" } else { "0" })
                .collect();
            format!("[{}]", coords.join(":"))
        })
        .collect();
    if parts.len() == 1 {
        parts[0].clone()
    } else {
        format!("({})", parts.join(","))
    }
}

fn locus_label(ambient: Ambient, orbit: &TorusOrbit) -> String {
    let factors = ambient.factors();
    let zero: Vec<String> = factors
        .iter()
        .zip(&orbit.nonzero)
        .flat_map(|(f, nz)| {
            f.iter()
                .enumerate()
                .filter(|(i, _)| !nz.contains(i))
                .map(|(_, (name, _))| format!("{name} = 0"))
        })
        .collect();
    let kind = match ambient {
        Ambient::P2 => "line",
        Ambient::P1xP1 => "curve",
    };
    format!("{kind} {{{}}}", zero.join(", "))
}

/// Coordinate points in listing order: within a factor the point with the
/// last coordinate nonzero comes first, then the others in index order; the
/// first factor varies fastest.
fn coordinate_points(ambient: Ambient) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for factor in ambient.factors() {
        let n = factor.len();
        let order: Vec<usize> = std::iter::once(n - 1).chain(0..n - 1).collect();
        out = order
            .iter()
            .flat_map(|&k| {
                out.iter().map(move |p| {
                    let mut p = p.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out
}

pub fn build_surface(action: &CyclicAction) -> Result<SurfaceModel, SurfaceError> {
    let orbits = torus_orbits(action.ambient);
    // The open orbit's stabilizer acts trivially everywhere.
    let generic = orbits.iter().max_by_key(|o| o.dim()).expect("orbits");
    let kernel = stabilizer_order(action, generic);
    if kernel != 1 {
        return Err(SurfaceError::NotEffective(kernel));
    }
    // Lower-dimensional strata first, so curves are reported before surfaces.
    let mut by_dim: Vec<&TorusOrbit> = orbits.iter().filter(|o| o.dim() > 0).collect();
    by_dim.sort_by_key(|o| o.dim());
    for orbit in by_dim {
        let s = stabilizer_order(action, orbit);
        if s != 1 {
            return Err(SurfaceError::NonIsolated {
                subgroup_order: s,
                locus: locus_label(action.ambient, orbit),
            });
        }
    }

    let factors = action.ambient.factors();
    let cw = action.coordinate_weights();
    let mut singular_locus = Vec::new();
    for point in coordinate_points(action.ambient) {
        let orbit = TorusOrbit {
            nonzero: point.iter().map(|&k| vec![k]).collect(),
        };
        let s = stabilizer_order(action, &orbit);
        if s == 1 {
            continue;
        }
        let mut chart: Vec<(i64, Character)> = Vec::with_capacity(2);
        for ((f, w), &k) in factors.iter().zip(&cw).zip(&point) {
            for i in (0..f.len()).filter(|&i| i != k) {
                chart.push((w[i] - w[k], f[i].1 + -f[k].1));
            }
        }
        let germ = CyclicQuotientSingularity::new(s, chart[0].0, chart[1].0)?;
        let mut nf = normalize(&germ)?;
        if nf != nf.canonical() {
            chart.swap(0, 1);
            nf = nf.canonical();
        }
        singular_locus.push(FixedPointRecord {
            point_label: point_label(action.ambient, &point),
            stabilizer_order: s,
            local_cyclic_weights: [residue(chart[0].0, s), residue(chart[1].0, s)],
            local_torus_weights: [chart[0].1, chart[1].1],
            singularity: nf,
        });
    }

    Ok(SurfaceModel {
        action: action.clone(),
        singular_locus,
        volume: BigRational::new(
            BigInt::from(action.ambient.anticanonical_degree()),
            BigInt::from(action.order),
        ),
        aut0_dim: action.preset().map(|_| 2),
        b2_base: action.ambient.b2(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QDefBlock {
    pub point: FixedPointRecord,
    pub weights: Vec<Character>,
}

/// `qDef = ⊕_p qDef(p)` with the 2-torus weights of every parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QDefModel {
    pub total_dim: usize,
    pub blocks: Vec<QDefBlock>,
    /// Two rows; column `j` is the character of the `j`-th parameter.
    pub weight_matrix: Vec<Vec<i64>>,
}

impl QDefModel {
    pub fn columns(&self) -> impl Iterator<Item = Character> + '_ {
        self.blocks.iter().flat_map(|b| b.weights.iter().copied())
    }

    pub fn weight_system(&self) -> WeightSystem {
        WeightSystem::from_rows(&self.weight_matrix).expect("two consistent rows")
    }
}

pub fn assemble_qdef(surface: &SurfaceModel) -> Result<QDefModel, SurfaceError> {
    let mut blocks = Vec::with_capacity(surface.singular_locus.len());
    for p in &surface.singular_locus {
        let weights = match classify(&p.singularity).qdef_dim {
            None => {
                return Err(SurfaceError::UnknownQDef {
                    point: p.point_label.clone(),
                    singularity: p.singularity,
                })
            }
            Some(0) => Vec::new(),
            Some(_) => versal_weights(&p.singularity, p.local_torus_weights)?,
        };
        blocks.push(QDefBlock {
            point: p.clone(),
            weights,
        });
    }
    let cols: Vec<Character> = blocks
        .iter()
        .flat_map(|b| b.weights.iter().copied())
        .collect();
    Ok(QDefModel {
        total_dim: cols.len(),
        weight_matrix: vec![
            cols.iter().map(|c| c.0).collect(),
            cols.iter().map(|c| c.1).collect(),
        ],
        blocks,
    })
}

/// `b₂` of a generic fibre that smooths every Du Val and T point while the
/// rigid points persist: the ambient invariant rank plus the Milnor number
/// of each smoothing.
pub fn betti_of_generic_smoothing(surface: &SurfaceModel) -> Result<u64, SurfaceError> {
    let mut b2 = surface.b2_base as u64;
    for p in &surface.singular_locus {
        b2 += cqsing::qg_milnor_number(&p.singularity).map_err(|_| SurfaceError::UnknownQDef {
            point: p.point_label.clone(),
            singularity: p.singularity,
        })?;
    }
    Ok(b2)
}
