//! Exact linear algebra: rational Gaussian elimination, nullspaces,
//! fraction-free integer elimination for square solves, and a phase-one
//! simplex with Bland's rule for feasibility tests.
//!
//! Everything is dense; instances are desk-scale. No floating point and no
//! epsilons anywhere.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Solve the square system `a x = rhs` by rational Gaussian elimination
/// with partial (first non-zero) pivoting. `None` when singular.
pub fn solve_square(a: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n) && rhs.len() == n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let pv = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= pv.clone();
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Basis of the right nullspace of the matrix whose columns are `cols`
/// (each of length `m`): all vectors `x` with `sum_j x_j cols[j] = 0`.
pub fn nullspace_of_columns(cols: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let k = cols.len();
    if k == 0 {
        return Vec::new();
    }
    let m = cols[0].len();
    assert!(cols.iter().all(|c| c.len() == m));
    // Row-reduce the m x k matrix A with A[i][j] = cols[j][i].
    let mut a: Vec<Vec<Rat>> = (0..m)
        .map(|i| (0..k).map(|j| cols[j][i].clone()).collect())
        .collect();
    let mut pivot_col_of_row: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(p) = (row..m).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let pv = a[row][col].clone();
        for x in a[row].iter_mut() {
            *x /= pv.clone();
        }
        for r in 0..m {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..k {
                    let delta = &f * &a[row][c];
                    a[r][c] -= delta;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == m {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let free_cols: Vec<usize> = (0..k).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![Rat::zero(); k];
        v[fc] = Rat::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -a[r][fc].clone();
        }
        basis.push(v);
    }
    basis
}

/// One particular solution of the (possibly rectangular) system `a x = rhs`,
/// with free variables set to zero. `None` when inconsistent.
pub fn solve_particular(a: &[Vec<Rat>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    assert!(a.iter().all(|r| r.len() == n) && rhs.len() == m);
    let mut aug: Vec<Vec<Rat>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..m).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(row, p);
        let pv = aug[row][col].clone();
        for x in aug[row].iter_mut() {
            *x /= pv.clone();
        }
        for r in 0..m {
            if r != row && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in 0..=n {
                    let delta = &f * &aug[row][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == m {
            break;
        }
    }
    // Inconsistent when a zero row has non-zero rhs.
    for r in row..m {
        if !aug[r][n].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); n];
    for (r, c) in pivots {
        x[c] = aug[r][n].clone();
    }
    Some(x)
}

/// Marker for i128 overflow in the fraction-free path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// Fraction-free (Bareiss) elimination for an integer square system.
/// Returns `Err(Overflow)` on i128 overflow so callers can fall back to
/// the rational path, `Ok(None)` when singular.
pub fn bareiss_solve_i128(a: &[Vec<i128>], rhs: &[i128]) -> Result<Option<Vec<Rat>>, Overflow> {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(*b);
            r
        })
        .collect();
    let mut prev: i128 = 1;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| m[r][col] != 0) else {
            return Ok(None);
        };
        m.swap(col, p);
        let pivot = m[col][col];
        for r in (col + 1)..n {
            for c in (col + 1)..=n {
                let hi = pivot.checked_mul(m[r][c]).ok_or(Overflow)?;
                let lo = m[r][col].checked_mul(m[col][c]).ok_or(Overflow)?;
                let num = hi.checked_sub(lo).ok_or(Overflow)?;
                debug_assert_eq!(num % prev, 0, "Bareiss divisibility");
                m[r][c] = num / prev;
            }
            m[r][col] = 0;
        }
        prev = pivot;
    }
    // Back-substitution on the integer upper-triangular system, in rationals.
    let mut x = vec![Rat::zero(); n];
    for r in (0..n).rev() {
        let mut acc = Rat::from_integer(BigInt::from(m[r][n]));
        for c in (r + 1)..n {
            acc -= Rat::from_integer(BigInt::from(m[r][c])) * &x[c];
        }
        x[r] = acc / Rat::from_integer(BigInt::from(m[r][r]));
    }
    Ok(Some(x))
}

/// Exact feasibility of `{x : a_ge x >= b_ge, a_eq x = b_eq}` with free
/// variables, by phase-one simplex with Bland's rule (smallest-index
/// entering and leaving choices), which cannot cycle. Runs on word-size
/// rationals and falls back to big rationals if any operation overflows.
pub fn feasible(a_ge: &[Vec<Rat>], b_ge: &[Rat], a_eq: &[Vec<Rat>], b_eq: &[Rat]) -> bool {
    match simplex::phase_one::<simplex::Q64>(a_ge, b_ge, a_eq, b_eq) {
        Some(answer) => answer,
        None => simplex::phase_one::<Rat>(a_ge, b_ge, a_eq, b_eq)
            .expect("big-rational arithmetic cannot overflow"),
    }
}

mod simplex {
    use super::Rat;

    /// Tableau scalar: exact rational arithmetic with fallible operations,
    /// so a machine-word fast path can bail out to big rationals on
    /// overflow.
    pub(super) trait Scalar: Sized + Clone {
        fn zero() -> Self;
        fn one() -> Self;
        fn from_rat(r: &Rat) -> Option<Self>;
        fn is_zero(&self) -> bool;
        fn is_negative(&self) -> bool;
        fn is_positive(&self) -> bool;
        fn neg(&self) -> Option<Self>;
        fn add(&self, o: &Self) -> Option<Self>;
        fn sub(&self, o: &Self) -> Option<Self>;
        fn mul(&self, o: &Self) -> Option<Self>;
        fn div(&self, o: &Self) -> Option<Self>;
        fn lt(&self, o: &Self) -> bool;
    }

    impl Scalar for Rat {
        fn zero() -> Self {
            <Rat as num_traits::Zero>::zero()
        }
        fn one() -> Self {
            <Rat as num_traits::One>::one()
        }
        fn from_rat(r: &Rat) -> Option<Self> {
            Some(r.clone())
        }
        fn is_zero(&self) -> bool {
            num_traits::Zero::is_zero(self)
        }
        fn is_negative(&self) -> bool {
            num_traits::Signed::is_negative(self)
        }
        fn is_positive(&self) -> bool {
            num_traits::Signed::is_positive(self)
        }
        fn neg(&self) -> Option<Self> {
            Some(-self)
        }
        fn add(&self, o: &Self) -> Option<Self> {
            Some(self + o)
        }
        fn sub(&self, o: &Self) -> Option<Self> {
            Some(self - o)
        }
        fn mul(&self, o: &Self) -> Option<Self> {
            Some(self * o)
        }
        fn div(&self, o: &Self) -> Option<Self> {
            Some(self / o)
        }
        fn lt(&self, o: &Self) -> bool {
            self < o
        }
    }

    /// Reduced fraction over i64 with i128 intermediates; every operation
    /// reports overflow instead of wrapping.
    #[derive(Clone, Copy, Debug)]
    pub(super) struct Q64 {
        n: i64,
        d: i64, // > 0
    }

    impl Q64 {
        fn make(n: i128, d: i128) -> Option<Q64> {
            if d == 0 {
                return None;
            }
            let (mut n, mut d) = if d < 0 { (-n, -d) } else { (n, d) };
            if n == 0 {
                d = 1;
            } else {
                let g = num_integer::gcd(n.abs(), d);
                n /= g;
                d /= g;
            }
            Some(Q64 {
                n: i64::try_from(n).ok()?,
                d: i64::try_from(d).ok()?,
            })
        }
    }

    impl Scalar for Q64 {
        fn zero() -> Self {
            Q64 { n: 0, d: 1 }
        }
        fn one() -> Self {
            Q64 { n: 1, d: 1 }
        }
        fn from_rat(r: &Rat) -> Option<Self> {
            let n = i64::try_from(r.numer()).ok()?;
            let d = i64::try_from(r.denom()).ok()?;
            Q64::make(n as i128, d as i128)
        }
        fn is_zero(&self) -> bool {
            self.n == 0
        }
        fn is_negative(&self) -> bool {
            self.n < 0
        }
        fn is_positive(&self) -> bool {
            self.n > 0
        }
        fn neg(&self) -> Option<Self> {
            Some(Q64 {
                n: self.n.checked_neg()?,
                d: self.d,
            })
        }
        fn add(&self, o: &Self) -> Option<Self> {
            let n = (self.n as i128) * (o.d as i128) + (o.n as i128) * (self.d as i128);
            Q64::make(n, (self.d as i128) * (o.d as i128))
        }
        fn sub(&self, o: &Self) -> Option<Self> {
            let n = (self.n as i128) * (o.d as i128) - (o.n as i128) * (self.d as i128);
            Q64::make(n, (self.d as i128) * (o.d as i128))
        }
        fn mul(&self, o: &Self) -> Option<Self> {
            Q64::make(
                (self.n as i128) * (o.n as i128),
                (self.d as i128) * (o.d as i128),
            )
        }
        fn div(&self, o: &Self) -> Option<Self> {
            if o.n == 0 {
                return None;
            }
            Q64::make(
                (self.n as i128) * (o.d as i128),
                (self.d as i128) * (o.n as i128),
            )
        }
        fn lt(&self, o: &Self) -> bool {
            (self.n as i128) * (o.d as i128) < (o.n as i128) * (self.d as i128)
        }
    }

    /// `None` signals scalar overflow, never an infeasibility verdict.
    pub(super) fn phase_one<S: Scalar>(
        a_ge: &[Vec<Rat>],
        b_ge: &[Rat],
        a_eq: &[Vec<Rat>],
        b_eq: &[Rat],
    ) -> Option<bool> {
        let d = a_ge
            .first()
            .map(|r| r.len())
            .or_else(|| a_eq.first().map(|r| r.len()))
            .unwrap_or(0);
        let m = a_ge.len() + a_eq.len();
        if m == 0 {
            return Some(true);
        }
        // Columns: x+ (d), x- (d), surplus per >= row, artificials (m).
        let n_struct = 2 * d + a_ge.len();
        let n_total = n_struct + m;
        let mut tab: Vec<Vec<S>> = Vec::with_capacity(m);
        let mut rhs: Vec<S> = Vec::with_capacity(m);
        let rows = a_ge
            .iter()
            .zip(b_ge)
            .map(|(r, b)| (r, b, true))
            .chain(a_eq.iter().zip(b_eq).map(|(r, b)| (r, b, false)));
        for (i, (coeffs, b, has_surplus)) in rows.enumerate() {
            let b = S::from_rat(b)?;
            let flip = b.is_negative();
            let mut row = vec![S::zero(); n_total];
            for (j, c) in coeffs.iter().enumerate() {
                let c = S::from_rat(c)?;
                let c = if flip { c.neg()? } else { c };
                row[d + j] = c.neg()?;
                row[j] = c;
            }
            if has_surplus {
                row[2 * d + i] = if flip { S::one() } else { S::one().neg()? };
            }
            tab.push(row);
            rhs.push(if flip { b.neg()? } else { b });
        }
        // Artificial basis.
        let mut basis: Vec<usize> = Vec::with_capacity(m);
        for (i, row) in tab.iter_mut().enumerate() {
            row[n_struct + i] = S::one();
            basis.push(n_struct + i);
        }
        // Phase-one objective: minimize the sum of artificials. `obj` holds
        // the reduced costs; artificial columns start at zero.
        let mut obj = vec![S::zero(); n_total];
        for (j, slot) in obj.iter_mut().enumerate().take(n_struct) {
            let mut s = S::zero();
            for row in &tab {
                s = s.add(&row[j])?;
            }
            *slot = s.neg()?;
            let _ = j;
        }
        let mut obj_val = S::zero();
        for b in &rhs {
            obj_val = obj_val.add(b)?;
        }

        // Bland: enter at the smallest-index column with negative reduced
        // cost, until none remains.
        while let Some(enter) = (0..n_total).find(|&j| obj[j].is_negative()) {
            // Ratio test; Bland tie-break by smallest basis variable index.
            let mut leave: Option<(usize, S)> = None;
            for r in 0..m {
                if tab[r][enter].is_positive() {
                    let ratio = rhs[r].div(&tab[r][enter])?;
                    match &leave {
                        None => leave = Some((r, ratio)),
                        Some((lr, lratio)) => {
                            if ratio.lt(lratio) || (!lratio.lt(&ratio) && basis[r] < basis[*lr]) {
                                leave = Some((r, ratio));
                            }
                        }
                    }
                }
            }
            let Some((lr, _)) = leave else {
                // Unbounded phase-one cannot happen: the objective is
                // bounded below by zero.
                break;
            };
            // Pivot on (lr, enter).
            let pv = tab[lr][enter].clone();
            for x in tab[lr].iter_mut() {
                *x = x.div(&pv)?;
            }
            rhs[lr] = rhs[lr].div(&pv)?;
            for r in 0..m {
                if r != lr && !tab[r][enter].is_zero() {
                    let f = tab[r][enter].clone();
                    for c in 0..n_total {
                        if !tab[lr][c].is_zero() {
                            let delta = f.mul(&tab[lr][c])?;
                            tab[r][c] = tab[r][c].sub(&delta)?;
                        }
                    }
                    let delta = f.mul(&rhs[lr])?;
                    rhs[r] = rhs[r].sub(&delta)?;
                }
            }
            if !obj[enter].is_zero() {
                let f = obj[enter].clone();
                for c in 0..n_total {
                    if !tab[lr][c].is_zero() {
                        let delta = f.mul(&tab[lr][c])?;
                        obj[c] = obj[c].sub(&delta)?;
                    }
                }
                // Entering at value rhs[lr] changes the objective by
                // f * rhs[lr].
                let delta = f.mul(&rhs[lr])?;
                obj_val = obj_val.add(&delta)?;
            }
            basis[lr] = enter;
        }
        Some(obj_val.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        rat_int(n)
    }

    #[test]
    fn square_solve_and_singularity() {
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)]];
        let x = solve_square(&a, &[r(3), r(1)]).unwrap();
        assert_eq!(x, vec![r(2), r(1)]);
        let sing = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(solve_square(&sing, &[r(1), r(2)]).is_none());
    }

    #[test]
    fn nullspace_of_dependent_columns() {
        // e1, e2, e1+e2 -> one dependence (1, 1, -1).
        let cols = vec![vec![r(1), r(0)], vec![r(0), r(1)], vec![r(1), r(1)]];
        let ns = nullspace_of_columns(&cols);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let scale = &v[2];
        assert_eq!(&v[0] / scale, r(-1));
        assert_eq!(&v[1] / scale, r(-1));
    }

    #[test]
    fn bareiss_matches_rational_solve() {
        let a_int = vec![
            vec![2i128, 1, -1],
            vec![-3, -1, 2],
            vec![-2, 1, 2],
        ];
        let rhs_int = vec![8i128, -11, -3];
        let fast = bareiss_solve_i128(&a_int, &rhs_int).unwrap().unwrap();
        let a: Vec<Vec<Rat>> = a_int
            .iter()
            .map(|row| row.iter().map(|&x| r(x as i64)).collect())
            .collect();
        let rhs: Vec<Rat> = rhs_int.iter().map(|&x| r(x as i64)).collect();
        assert_eq!(fast, solve_square(&a, &rhs).unwrap());
        assert_eq!(fast, vec![r(2), r(3), r(-1)]);
    }

    #[test]
    fn feasibility_basics() {
        // x >= 1 and -x >= 0 is infeasible.
        assert!(!feasible(
            &[vec![r(1)], vec![r(-1)]],
            &[r(1), r(0)],
            &[],
            &[]
        ));
        // x + y >= 1, x - y = 0 is feasible.
        assert!(feasible(&[vec![r(1), r(1)]], &[r(1)], &[vec![r(1), r(-1)]], &[r(0)]));
        // Empty system is feasible.
        assert!(feasible(&[], &[], &[], &[]));
    }

    #[test]
    fn feasibility_cone_example() {
        // Facet-support test shape: can h12 + h3 be tight while the three
        // P3 facets stay >= 1? Coordinates (h1, h2, h3, h12, h23).
        let tight = vec![r(0), r(0), r(1), r(1), r(0)]; // h3 + h12
        let f1 = vec![r(1), r(1), r(0), r(-1), r(0)]; // h1 + h2 - h12
        let f2 = vec![r(0), r(1), r(1), r(0), r(-1)]; // h2 + h3 - h23
        let f3 = vec![r(0), r(-1), r(0), r(1), r(1)]; // h12 + h23 - h2
        // h12 + h3 = (h12 + h23 - h2) + (h2 + h3 - h23): forcing it to zero
        // while both summands are >= 1 is infeasible.
        assert!(!feasible(
            &[f1.clone(), f2.clone(), f3.clone()],
            &[r(1), r(1), r(1)],
            &[tight],
            &[r(0)]
        ));
        // Each true facet admits a supporting point.
        assert!(feasible(&[f2, f3], &[r(1), r(1)], &[f1], &[r(0)]));
    }
}
