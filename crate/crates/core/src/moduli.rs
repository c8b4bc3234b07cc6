//! Local K-moduli near `[X_l]` and `[Y_l]`.
//!
//! The deformation space is `qDef` with its torus action; the stack has
//! dimension `dim qDef − dim Aut⁰` and the coarse space near the point is
//! the affine GIT quotient `qDef // T`.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{self, lcm_u64};
use crate::cqsing;
use crate::quotsurf::{self, Family, QDefModel, SurfaceError, SurfaceModel};
use crate::torusgit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SurfaceId {
    pub family: Family,
    pub l: u64,
}

impl fmt::Display for SurfaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalModuliModel {
    pub surface_id: SurfaceId,
    pub qdef_dim: usize,
    pub aut_dim: usize,
    pub stack_dim: i64,
    pub coarse_dim: usize,
    pub kernel_rank: usize,
    pub isolated: bool,
    #[serde(with = "arith::rational_json")]
    pub volume: BigRational,
    #[serde(with = "arith::rational_json")]
    pub min_discrepancy: BigRational,
    pub gorenstein_index: u64,
    pub b2_generic: u64,
}

/// Everything computed on the way to a [`LocalModuliModel`].
#[derive(Clone, Debug)]
pub struct LocalAnalysis {
    pub surface: SurfaceModel,
    pub qdef: QDefModel,
    pub model: LocalModuliModel,
}

pub fn analyze(family: Family, l: u64) -> Result<LocalAnalysis, SurfaceError> {
    let action = family.action(l)?;
    let surface = quotsurf::build_surface(&action)?;
    let qdef = quotsurf::assemble_qdef(&surface)?;
    let ws = qdef.weight_system();
    let git = torusgit::analyze(&ws);
    // The presets carry exactly the 2-torus as reductive Aut⁰.
    let aut_dim = surface.aut0_dim.unwrap_or(2) as usize;

    let points = &surface.singular_locus;
    let min_discrepancy = points
        .iter()
        .map(|p| cqsing::min_discrepancy(&p.singularity))
        .min()
        .unwrap_or_else(BigRational::zero);
    let gorenstein_index = points
        .iter()
        .map(|p| cqsing::gorenstein_index(&p.singularity))
        .fold(1, lcm_u64);

    let model = LocalModuliModel {
        surface_id: SurfaceId { family, l },
        qdef_dim: qdef.total_dim,
        aut_dim,
        stack_dim: qdef.total_dim as i64 - aut_dim as i64,
        coarse_dim: git.quotient_dim,
        kernel_rank: git.kernel_rank,
        isolated: git.quotient_dim == 0 && !torusgit::has_nonempty_polystable(&ws),
        volume: surface.volume.clone(),
        min_discrepancy,
        gorenstein_index,
        b2_generic: quotsurf::betti_of_generic_smoothing(&surface)?,
    };
    Ok(LocalAnalysis {
        surface,
        qdef,
        model,
    })
}

pub fn local_model(family: Family, l: u64) -> Result<LocalModuliModel, SurfaceError> {
    analyze(family, l).map(|a| a.model)
}

/// Valid orders of `family` in `l_min..=l_max`, ascending.
pub fn valid_orders(family: Family, l_min: u64, l_max: u64) -> impl Iterator<Item = u64> {
    (l_min.max(family.min_order())..=l_max).filter(move |&l| family.is_valid_order(l))
}

pub fn table(
    family: Family,
    l_min: u64,
    l_max: u64,
) -> Result<Vec<LocalModuliModel>, SurfaceError> {
    valid_orders(family, l_min, l_max)
        .map(|l| local_model(family, l))
        .collect()
}

/// The dimension that grows without bound along the family: coarse for X,
/// stack for Y.
fn growing_dim(m: &LocalModuliModel) -> i64 {
    match m.surface_id.family {
        Family::X => m.coarse_dim as i64,
        Family::Y => m.stack_dim,
    }
}

/// Beyond this order the generic formulas `2l − 3` (X) and `l − 3` (Y) hold.
fn generic_from(family: Family) -> u64 {
    match family {
        Family::X => 5,
        Family::Y => 11,
    }
}

/// Smallest valid `l` whose growing dimension reaches `target_dim`.
pub fn unboundedness_witness(family: Family, target_dim: u64) -> u64 {
    let t = target_dim as i64;
    let dim_at = |l| growing_dim(&local_model(family, l).expect("preset orders are valid"));
    // Small orders include the special cases, so evaluate them directly.
    for l in valid_orders(family, 0, generic_from(family) - 1) {
        if dim_at(l) >= t {
            return l;
        }
    }
    let mut l = match family {
        Family::X => target_dim.saturating_add(3).div_ceil(2),
        Family::Y => {
            let c = target_dim.saturating_add(3);
            c + 1 - c % 2
        }
    }
    .max(generic_from(family));
    while dim_at(l) < t {
        l += if family == Family::Y { 2 } else { 1 };
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn y7() {
        let m = local_model(Family::Y, 7).unwrap();
        assert_eq!(
            (m.qdef_dim, m.aut_dim, m.stack_dim, m.coarse_dim),
            (6, 2, 4, 0)
        );
        assert!(m.isolated);
        assert_eq!(m.volume, rat(9, 7));
        assert_eq!(m.gorenstein_index, 7);
        assert_eq!(m.b2_generic, 7);
    }

    #[test]
    fn x7() {
        let m = local_model(Family::X, 7).unwrap();
        assert_eq!(
            (m.qdef_dim, m.aut_dim, m.stack_dim, m.coarse_dim),
            (12, 2, 10, 11)
        );
        assert_eq!(m.kernel_rank, 1);
        assert!(!m.isolated);
        assert_eq!(m.min_discrepancy, rat(2 - 7, 7));
        assert_eq!(m.b2_generic, 14);
    }

    #[test]
    fn special_orders() {
        assert_eq!(local_model(Family::X, 2).unwrap().coarse_dim, 2);
        assert_eq!(local_model(Family::X, 4).unwrap().coarse_dim, 6);
        assert_eq!(local_model(Family::Y, 3).unwrap().stack_dim, 4);
        assert_eq!(local_model(Family::Y, 9).unwrap().stack_dim, 8);
        assert_eq!(local_model(Family::Y, 3).unwrap().coarse_dim, 4);
        assert_eq!(local_model(Family::Y, 9).unwrap().coarse_dim, 8);
    }

    #[test]
    fn errors_propagate() {
        assert!(matches!(
            local_model(Family::Y, 4),
            Err(SurfaceError::NonIsolated { .. })
        ));
        assert!(matches!(
            local_model(Family::X, 1),
            Err(SurfaceError::InvalidOrder(1))
        ));
    }

    #[test]
    fn tables() {
        let t = table(Family::Y, 5, 9).unwrap();
        let ls: Vec<u64> = t.iter().map(|m| m.surface_id.l).collect();
        assert_eq!(ls, vec![5, 7, 9]);
        assert_eq!(
            t.iter().map(|m| m.stack_dim).collect::<Vec<_>>(),
            vec![2, 4, 8]
        );
        let t = table(Family::X, 2, 2).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].coarse_dim, 2);
        assert!(table(Family::X, 5, 4).unwrap().is_empty());
        let t = table(Family::X, 2, 8).unwrap();
        assert_eq!(
            t.iter().map(|m| m.coarse_dim).collect::<Vec<_>>(),
            vec![2, 3, 6, 7, 9, 11, 13]
        );
    }

    #[test]
    fn witnesses() {
        assert_eq!(unboundedness_witness(Family::X, 100), 52);
        assert_eq!(unboundedness_witness(Family::Y, 0), 3);
        assert_eq!(unboundedness_witness(Family::Y, 10), 13);
        assert_eq!(unboundedness_witness(Family::X, 0), 2);
        assert_eq!(unboundedness_witness(Family::X, 6), 4);
        assert_eq!(unboundedness_witness(Family::X, 7), 5);
        assert_eq!(unboundedness_witness(Family::Y, 5), 9);
        assert_eq!(unboundedness_witness(Family::Y, 9), 13);
    }

    #[test]
    fn witness_is_minimal_by_scan() {
        for family in [Family::X, Family::Y] {
            for t in 0..30 {
                let w = unboundedness_witness(family, t);
                let first = valid_orders(family, 0, 200)
                    .find(|&l| growing_dim(&local_model(family, l).unwrap()) >= t as i64)
                    .unwrap();
                assert_eq!(w, first, "{family} target {t}");
            }
        }
    }

    #[test]
    fn json_is_stable() {
        let a = serde_json::to_string(&local_model(Family::X, 6).unwrap()).unwrap();
        let b = serde_json::to_string(&local_model(Family::X, 6).unwrap()).unwrap();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["surface_id"], serde_json::json!({"family": "X", "l": 6}));
        assert_eq!(v["volume"], serde_json::json!({"num": 4, "den": 3}));
        let back: LocalModuliModel = serde_json::from_str(&a).unwrap();
        assert_eq!(back, local_model(Family::X, 6).unwrap());
    }
}
