//! Floating-point cross-check oracles. Nothing here feeds results back into
//! the exact computations; these routines exist so the test suites can
//! compare the exact answers against independent numeric routes.

use crate::lp::Rel;
use crate::scalar::Scalar;
use num_traits::ToPrimitive;

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().expect("desk-scale rationals fit in f64")
}

pub fn vec_to_f64(v: &[Scalar]) -> Vec<f64> {
    v.iter().map(to_f64).collect()
}

const EPS: f64 = 1e-11;

/// Dense two-phase simplex over f64 with Dantzig pivoting — an independent
/// implementation (different arithmetic, different pivot rule) of the same
/// problem shape as the exact solver.
pub struct FloatLp {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<f64>,
    maximize: bool,
    constraints: Vec<(Vec<f64>, Rel, f64)>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FloatLpResult {
    Optimal { value: f64, point: Vec<f64> },
    Infeasible,
    Unbounded,
}

impl FloatLp {
    pub fn minimize(objective: Vec<f64>) -> Self {
        let n = objective.len();
        FloatLp { num_vars: n, free: vec![false; n], objective, maximize: false, constraints: Vec::new() }
    }

    pub fn maximize(objective: Vec<f64>) -> Self {
        let mut p = FloatLp::minimize(objective);
        p.maximize = true;
        p
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn add_constraint(&mut self, coeffs: Vec<f64>, rel: Rel, rhs: f64) -> &mut Self {
        self.constraints.push((coeffs, rel, rhs));
        self
    }

    pub fn solve(&self) -> FloatLpResult {
        let mut col_of = Vec::with_capacity(self.num_vars);
        let mut ncols = 0;
        for i in 0..self.num_vars {
            if self.free[i] {
                col_of.push((ncols, Some(ncols + 1)));
                ncols += 2;
            } else {
                col_of.push((ncols, None));
                ncols += 1;
            }
        }
        let nstruct = ncols;
        let m = self.constraints.len();
        ncols += self.constraints.iter().filter(|(_, r, _)| *r != Rel::Eq).count();
        let mut a = vec![vec![0.0; ncols]; m];
        let mut b = vec![0.0; m];
        let mut slack = nstruct;
        for (row, (coeffs, rel, rhs)) in self.constraints.iter().enumerate() {
            for (i, c) in coeffs.iter().enumerate() {
                let (p, n) = col_of[i];
                a[row][p] = *c;
                if let Some(n) = n {
                    a[row][n] = -*c;
                }
            }
            match rel {
                Rel::Le => {
                    a[row][slack] = 1.0;
                    slack += 1;
                }
                Rel::Ge => {
                    a[row][slack] = -1.0;
                    slack += 1;
                }
                Rel::Eq => {}
            }
            b[row] = *rhs;
        }
        for row in 0..m {
            if b[row] < 0.0 {
                b[row] = -b[row];
                for v in a[row].iter_mut() {
                    *v = -*v;
                }
            }
        }
        let mut cost = vec![0.0; ncols];
        for i in 0..self.num_vars {
            let c = if self.maximize { -self.objective[i] } else { self.objective[i] };
            let (p, n) = col_of[i];
            cost[p] = c;
            if let Some(n) = n {
                cost[n] = -c;
            }
        }
        match float_two_phase(a, b, cost, ncols) {
            None => FloatLpResult::Infeasible,
            Some(None) => FloatLpResult::Unbounded,
            Some(Some((value, x))) => {
                let mut point = Vec::with_capacity(self.num_vars);
                for i in 0..self.num_vars {
                    let (p, n) = col_of[i];
                    point.push(match n {
                        Some(n) => x[p] - x[n],
                        None => x[p],
                    });
                }
                let value = if self.maximize { -value } else { value };
                FloatLpResult::Optimal { value, point }
            }
        }
    }
}

type Phase2 = Option<Option<(f64, Vec<f64>)>>;

fn float_two_phase(a: Vec<Vec<f64>>, b: Vec<f64>, cost: Vec<f64>, n: usize) -> Phase2 {
    let m = a.len();
    let mut t = vec![vec![0.0; n + m + 1]; m];
    for i in 0..m {
        t[i][..n].copy_from_slice(&a[i]);
        t[i][n + i] = 1.0;
        t[i][n + m] = b[i];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let phase1: Vec<f64> = (0..n + m).map(|j| if j >= n { 1.0 } else { 0.0 }).collect();
    if !float_optimize(&mut t, &mut basis, &phase1) {
        return None; // phase 1 cannot be unbounded; treat as failure
    }
    let total = n + m;
    let obj1: f64 = basis.iter().enumerate().map(|(i, &v)| phase1[v] * t[i][total]).sum();
    if obj1 > 1e-8 {
        return None;
    }
    for i in 0..m {
        if basis[i] >= n {
            if let Some(j) = (0..n).find(|&j| t[i][j].abs() > 1e-9) {
                float_pivot(&mut t, &mut basis, i, j);
            }
        }
    }
    let mut cost_full = cost;
    cost_full.resize(n + m, 1e18); // bar leftover artificials
    if !float_optimize(&mut t, &mut basis, &cost_full) {
        return Some(None);
    }
    let mut x = vec![0.0; n];
    for (i, &v) in basis.iter().enumerate() {
        if v < n {
            x[v] = t[i][total];
        }
    }
    let value: f64 =
        (0..n).map(|j| if cost_full[j] >= 1e17 { 0.0 } else { cost_full[j] * x[j] }).sum();
    Some(Some((value, x)))
}

fn float_optimize(t: &mut [Vec<f64>], basis: &mut [usize], cost: &[f64]) -> bool {
    let m = t.len();
    if m == 0 {
        return true;
    }
    let ncols = t[0].len() - 1;
    for _ in 0..20_000 {
        // reduced costs; Dantzig rule
        let mut entering = None;
        let mut best = -EPS;
        for j in 0..ncols {
            if basis.contains(&j) {
                continue;
            }
            let mut r = cost[j];
            for i in 0..m {
                if cost[basis[i]] != 0.0 && t[i][j] != 0.0 {
                    r -= cost[basis[i]] * t[i][j];
                }
            }
            if r < best {
                best = r;
                entering = Some(j);
            }
        }
        let Some(col) = entering else {
            return true;
        };
        let mut leave = None;
        let mut best_ratio = f64::INFINITY;
        for i in 0..m {
            if t[i][col] > EPS {
                let ratio = t[i][ncols] / t[i][col];
                if ratio < best_ratio - EPS {
                    best_ratio = ratio;
                    leave = Some(i);
                }
            }
        }
        let Some(row) = leave else {
            return false;
        };
        float_pivot(t, basis, row, col);
    }
    true // stalled; callers compare values with tolerance anyway
}

fn float_pivot(t: &mut [Vec<f64>], basis: &mut [usize], row: usize, col: usize) {
    let ncols = t[0].len();
    let inv = 1.0 / t[row][col];
    for v in t[row].iter_mut() {
        *v *= inv;
    }
    for i in 0..t.len() {
        if i != row && t[i][col].abs() > 0.0 {
            let f = t[i][col];
            for j in 0..ncols {
                t[i][j] -= f * t[row][j];
            }
        }
    }
    basis[row] = col;
}

/// Distance to the cone of `gens` in the uniform norm, by the float LP.
pub fn float_distance(gens: &[Vec<f64>], x: &[f64]) -> f64 {
    let dim = x.len();
    let m = gens.len();
    let mut obj = vec![0.0; m + 1];
    obj[0] = 1.0;
    let mut p = FloatLp::minimize(obj);
    for i in 0..dim {
        let mut plus = vec![0.0; m + 1];
        let mut minus = vec![0.0; m + 1];
        plus[0] = 1.0;
        minus[0] = 1.0;
        for (j, g) in gens.iter().enumerate() {
            plus[j + 1] = g[i];
            minus[j + 1] = -g[i];
        }
        p.add_constraint(plus, Rel::Ge, x[i]);
        p.add_constraint(minus, Rel::Ge, -x[i]);
    }
    match p.solve() {
        FloatLpResult::Optimal { value, .. } => value,
        other => panic!("float distance LP failed: {other:?}"),
    }
}

/// Projected-subgradient descent for the same distance problem, with a
/// Polyak step against a shrinking target gap. A second independent route
/// next to the float LP; checked at a loose tolerance.
pub fn subgradient_distance(gens: &[Vec<f64>], x: &[f64], iters: usize) -> f64 {
    let m = gens.len();
    if m == 0 {
        return x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    }
    let f = |l: &[f64]| -> f64 {
        let mut worst = 0.0f64;
        for i in 0..x.len() {
            let mut gi = 0.0;
            for (j, g) in gens.iter().enumerate() {
                gi += g[i] * l[j];
            }
            worst = worst.max((x[i] - gi).abs());
        }
        worst
    };
    let subgrad = |l: &[f64]| -> Vec<f64> {
        let mut active = 0;
        let mut worst = -1.0;
        let mut sign = 1.0;
        for i in 0..x.len() {
            let mut gi = 0.0;
            for (j, g) in gens.iter().enumerate() {
                gi += g[i] * l[j];
            }
            let r = x[i] - gi;
            if r.abs() > worst {
                worst = r.abs();
                active = i;
                sign = if r >= 0.0 { 1.0 } else { -1.0 };
            }
        }
        gens.iter().map(|g| -sign * g[active]).collect()
    };
    let mut lambda = vec![0.0f64; m];
    let mut point = lambda.clone();
    let mut best = f(&lambda);
    let mut gap = best.max(1.0) / 2.0;
    let rounds = 40;
    let per_round = (iters / rounds).max(50);
    for _ in 0..rounds {
        let target = (best - gap).max(0.0);
        let mut improved = false;
        for _ in 0..per_round {
            let value = f(&lambda);
            if value < best {
                best = value;
                point.copy_from_slice(&lambda);
                improved = true;
            }
            let g = subgrad(&lambda);
            let norm_sq: f64 = g.iter().map(|v| v * v).sum();
            if norm_sq < 1e-30 || value <= target {
                break;
            }
            let step = (value - target) / norm_sq;
            for (lj, gj) in lambda.iter_mut().zip(&g) {
                *lj = (*lj - step * gj).max(0.0);
            }
        }
        if !improved {
            gap /= 2.0;
            lambda.copy_from_slice(&point);
        }
        if gap < 1e-9 {
            break;
        }
    }
    best
}

/// Complex adaptive Simpson quadrature of `f` on `[a, b]`.
pub fn simpson_complex(
    f: &dyn Fn(f64) -> (f64, f64),
    a: f64,
    b: f64,
    tol: f64,
    depth: usize,
) -> (f64, f64) {
    fn simpson(f: &dyn Fn(f64) -> (f64, f64), a: f64, b: f64) -> (f64, f64) {
        let m = 0.5 * (a + b);
        let (fa, ga) = f(a);
        let (fm, gm) = f(m);
        let (fb, gb) = f(b);
        let h = (b - a) / 6.0;
        (h * (fa + 4.0 * fm + fb), h * (ga + 4.0 * gm + gb))
    }
    fn rec(
        f: &dyn Fn(f64) -> (f64, f64),
        a: f64,
        b: f64,
        whole: (f64, f64),
        tol: f64,
        depth: usize,
    ) -> (f64, f64) {
        let m = 0.5 * (a + b);
        let left = simpson(f, a, m);
        let right = simpson(f, m, b);
        let err =
            ((left.0 + right.0 - whole.0).powi(2) + (left.1 + right.1 - whole.1).powi(2)).sqrt();
        if depth == 0 || err < 15.0 * tol {
            (left.0 + right.0, left.1 + right.1)
        } else {
            let l = rec(f, a, m, left, tol / 2.0, depth - 1);
            let r = rec(f, m, b, right, tol / 2.0, depth - 1);
            (l.0 + r.0, l.1 + r.1)
        }
    }
    let whole = simpson(f, a, b);
    rec(f, a, b, whole, tol, depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_lp_matches_exact_on_a_sample() {
        // min x + y s.t. x + y >= 2, x <= 5
        let mut p = FloatLp::minimize(vec![1.0, 1.0]);
        p.add_constraint(vec![1.0, 1.0], Rel::Ge, 2.0);
        p.add_constraint(vec![1.0, 0.0], Rel::Le, 5.0);
        match p.solve() {
            FloatLpResult::Optimal { value, .. } => assert!((value - 2.0).abs() < 1e-9),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn float_distance_quadrant() {
        let gens = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert!((float_distance(&gens, &[-3.0, 2.0]) - 3.0).abs() < 1e-9);
        assert!(float_distance(&gens, &[1.0, 1.0]).abs() < 1e-9);
    }

    #[test]
    fn subgradient_is_close() {
        let gens = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let d = subgradient_distance(&gens, &[-3.0, 2.0], 20_000);
        assert!((d - 3.0).abs() < 1e-4, "got {d}");
    }

    #[test]
    fn simpson_integrates_exponentials() {
        // int_0^inf e^{-x} dx = 1, truncated far out
        let f = |x: f64| ((-x).exp(), 0.0);
        let (re, im) = simpson_complex(&f, 0.0, 60.0, 1e-12, 40);
        assert!((re - 1.0).abs() < 1e-10);
        assert!(im.abs() < 1e-12);
    }
}
