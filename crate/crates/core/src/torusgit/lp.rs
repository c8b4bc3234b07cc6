//! Exact feasibility for `A x = b, x ≥ 0` by phase-one simplex over the
//! rationals with Bland's rule (no cycling, no tolerances).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns a nonnegative solution of `A x = b` if one exists.
pub fn nonneg_solution(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = a.len();
    debug_assert_eq!(m, b.len());
    let n = a.first().map_or(0, Vec::len);
    if m == 0 {
        return Some(vec![BigRational::zero(); n]);
    }
    // Tableau columns: n originals, m artificials, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for (i, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut r = Vec::with_capacity(width);
        r.extend(row.iter().map(|x| if flip { -x } else { x.clone() }));
        r.extend((0..m).map(|j| if i == j { one() } else { BigRational::zero() }));
        r.push(if flip { -rhs } else { rhs.clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs for minimizing the sum of artificials.
    let mut cost = vec![BigRational::zero(); width];
    for r in &t {
        for j in 0..n {
            cost[j] -= &r[j];
        }
        cost[width - 1] -= &r[width - 1];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so a pivot row always exists.
        let (row, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, row, enter);
        basis[row] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = t[i][width - 1].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<BigRational>], cost: &mut [BigRational], row: usize, col: usize) {
    let inv = t[row][col].recip();
    t[row].iter_mut().for_each(|x| *x *= &inv);
    let p = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i != row && !r[col].is_zero() {
            let f = r[col].clone();
            r.iter_mut().zip(&p).for_each(|(x, y)| *x -= &f * y);
        }
    }
    if !cost[col].is_zero() {
        let f = cost[col].clone();
        cost.iter_mut().zip(&p).for_each(|(x, y)| *x -= &f * y);
    }
}

fn one() -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

/// Whether `target` lies in the closed convex cone spanned by `gens`
/// (each generator a vector of the same length as `target`).
pub fn cone_contains(gens: &[&[BigInt]], target: &[BigInt]) -> bool {
    let k = target.len();
    let a: Vec<Vec<BigRational>> = (0..k)
        .map(|i| {
            gens.iter()
                .map(|g| BigRational::from_integer(g[i].clone()))
                .collect()
        })
        .collect();
    nonneg_solution(&a, &to_rational(target)).is_some()
}
