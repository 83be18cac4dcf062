//! Exact linear programming: two-phase primal simplex with Bland's rule.
//!
//! All pivoting is over arbitrary-precision rationals, so results are exact
//! and termination is guaranteed (Bland's rule never cycles). Problems at
//! desk scale are tiny; no effort is spent on sparsity.

use crate::linalg::Mat;
use crate::scalar::Scalar;
use num_traits::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Optimal { value: Scalar, point: Vec<Scalar> },
    Infeasible,
    Unbounded,
}

impl LpResult {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpResult::Infeasible)
    }

    pub fn optimal_value(&self) -> Option<&Scalar> {
        match self {
            LpResult::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }
}

/// Linear program over a mix of free and nonnegative variables.
#[derive(Clone, Debug)]
pub struct LpProblem {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<Scalar>,
    maximize: bool,
    constraints: Vec<(Vec<Scalar>, Rel, Scalar)>,
}

impl LpProblem {
    /// A minimization problem with `num_vars` nonnegative variables.
    pub fn minimize(objective: Vec<Scalar>) -> Self {
        let n = objective.len();
        LpProblem { num_vars: n, free: vec![false; n], objective, maximize: false, constraints: Vec::new() }
    }

    pub fn maximize(objective: Vec<Scalar>) -> Self {
        let mut p = LpProblem::minimize(objective);
        p.maximize = true;
        p
    }

    /// Feasibility problem (zero objective) over `num_vars` nonnegative variables.
    pub fn feasibility(num_vars: usize) -> Self {
        LpProblem::minimize(vec![Scalar::zero(); num_vars])
    }

    /// Marks a variable as free (unrestricted in sign).
    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.free[var] = true;
        self
    }

    pub fn set_all_free(&mut self) -> &mut Self {
        self.free.iter_mut().for_each(|f| *f = true);
        self
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Scalar>, rel: Rel, rhs: Scalar) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "constraint arity mismatch");
        self.constraints.push((coeffs, rel, rhs));
        self
    }

    pub fn solve(&self) -> LpResult {
        // Expand free variables into differences of nonnegative pairs.
        let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(self.num_vars);
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
        // slack columns
        let nslack = self.constraints.iter().filter(|(_, r, _)| *r != Rel::Eq).count();
        ncols += nslack;

        let mut a = Mat::zero(m, ncols);
        let mut b: Vec<Scalar> = Vec::with_capacity(m);
        let mut slack = nstruct;
        for (row, (coeffs, rel, rhs)) in self.constraints.iter().enumerate() {
            for (i, c) in coeffs.iter().enumerate() {
                let (p, n) = col_of[i];
                *a.at_mut(row, p) = c.clone();
                if let Some(n) = n {
                    *a.at_mut(row, n) = -c.clone();
                }
            }
            match rel {
                Rel::Le => {
                    *a.at_mut(row, slack) = Scalar::from_integer(1.into());
                    slack += 1;
                }
                Rel::Ge => {
                    *a.at_mut(row, slack) = -Scalar::from_integer(1.into());
                    slack += 1;
                }
                Rel::Eq => {}
            }
            b.push(rhs.clone());
        }
        // Normalize rhs signs.
        for row in 0..m {
            if b[row] < Scalar::zero() {
                b[row] = -b[row].clone();
                for j in 0..ncols {
                    let v = -a.at(row, j).clone();
                    *a.at_mut(row, j) = v;
                }
            }
        }

        let mut cost: Vec<Scalar> = vec![Scalar::zero(); ncols];
        for i in 0..self.num_vars {
            let c = if self.maximize { -self.objective[i].clone() } else { self.objective[i].clone() };
            let (p, n) = col_of[i];
            cost[p] = c.clone();
            if let Some(n) = n {
                cost[n] = -c;
            }
        }

        match simplex_two_phase(a, b, cost) {
            Phase2Result::Infeasible => LpResult::Infeasible,
            Phase2Result::Unbounded => LpResult::Unbounded,
            Phase2Result::Optimal { value, x } => {
                let mut point = Vec::with_capacity(self.num_vars);
                for i in 0..self.num_vars {
                    let (p, n) = col_of[i];
                    let v = match n {
                        Some(n) => &x[p] - &x[n],
                        None => x[p].clone(),
                    };
                    point.push(v);
                }
                let value = if self.maximize { -value } else { value };
                LpResult::Optimal { value, point }
            }
        }
    }
}

enum Phase2Result {
    Optimal { value: Scalar, x: Vec<Scalar> },
    Infeasible,
    Unbounded,
}

/// Tableau state: `a` is m x n, `b` is the current basic solution values,
/// `basis[i]` is the variable basic in row `i`.
struct Tableau {
    a: Mat,
    b: Vec<Scalar>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let n = self.a.cols();
        let inv = self.a.at(row, col).recip();
        for j in 0..n {
            let v = self.a.at(row, j) * &inv;
            *self.a.at_mut(row, j) = v;
        }
        self.b[row] = &self.b[row] * &inv;
        for i in 0..self.a.rows() {
            if i == row || self.a.at(i, col).is_zero() {
                continue;
            }
            let f = self.a.at(i, col).clone();
            for j in 0..n {
                let v = self.a.at(i, j) - &f * self.a.at(row, j);
                *self.a.at_mut(i, j) = v;
            }
            self.b[i] = &self.b[i] - &f * &self.b[row];
        }
        self.basis[row] = col;
    }

    /// Runs Bland-rule simplex for the given cost vector from the current
    /// feasible basis. Returns false if unbounded.
    fn optimize(&mut self, cost: &[Scalar]) -> bool {
        loop {
            // Reduced costs r_j = c_j - c_B . a_j, recomputed exactly.
            let mut entering = None;
            for j in 0..self.a.cols() {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut r = cost[j].clone();
                for i in 0..self.a.rows() {
                    if !cost[self.basis[i]].is_zero() && !self.a.at(i, j).is_zero() {
                        r -= &cost[self.basis[i]] * self.a.at(i, j);
                    }
                }
                if r < Scalar::zero() {
                    entering = Some(j);
                    break; // Bland: smallest index
                }
            }
            let Some(col) = entering else {
                return true;
            };
            let mut leave: Option<(usize, Scalar)> = None;
            for i in 0..self.a.rows() {
                if *self.a.at(i, col) > Scalar::zero() {
                    let ratio = &self.b[i] / self.a.at(i, col);
                    let better = match &leave {
                        None => true,
                        Some((r, best)) => {
                            ratio < *best || (ratio == *best && self.basis[i] < self.basis[*r])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((row, _)) = leave else {
                return false;
            };
            self.pivot(row, col);
        }
    }

    fn objective_value(&self, cost: &[Scalar]) -> Scalar {
        let mut v = Scalar::zero();
        for i in 0..self.a.rows() {
            v += &cost[self.basis[i]] * &self.b[i];
        }
        v
    }

    fn solution(&self, n: usize) -> Vec<Scalar> {
        let mut x = vec![Scalar::zero(); n];
        for (i, &v) in self.basis.iter().enumerate() {
            if v < n {
                x[v] = self.b[i].clone();
            }
        }
        x
    }
}

fn simplex_two_phase(a: Mat, b: Vec<Scalar>, cost: Vec<Scalar>) -> Phase2Result {
    let m = a.rows();
    let n = a.cols();
    // Phase 1: artificial variable per row.
    let mut full = Mat::zero(m, n + m);
    for i in 0..m {
        for j in 0..n {
            *full.at_mut(i, j) = a.at(i, j).clone();
        }
        *full.at_mut(i, n + i) = Scalar::from_integer(1.into());
    }
    let mut t = Tableau { a: full, b, basis: (n..n + m).collect() };
    let mut phase1_cost = vec![Scalar::zero(); n + m];
    for c in phase1_cost.iter_mut().skip(n) {
        *c = Scalar::from_integer(1.into());
    }
    let bounded = t.optimize(&phase1_cost);
    debug_assert!(bounded, "phase 1 is always bounded below by zero");
    if !t.objective_value(&phase1_cost).is_zero() {
        return Phase2Result::Infeasible;
    }
    // Drive artificials out of the basis; drop rows that are redundant.
    let mut drop_rows = Vec::new();
    for i in 0..m {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.a.at(i, j).is_zero()) {
                Some(j) => t.pivot(i, j),
                None => drop_rows.push(i),
            }
        }
    }
    if !drop_rows.is_empty() {
        let keep: Vec<usize> = (0..m).filter(|i| !drop_rows.contains(i)).collect();
        let a2 = Mat::from_fn(keep.len(), n, |i, j| t.a.at(keep[i], j).clone());
        let b2: Vec<Scalar> = keep.iter().map(|&i| t.b[i].clone()).collect();
        let basis2: Vec<usize> = keep.iter().map(|&i| t.basis[i]).collect();
        t = Tableau { a: a2, b: b2, basis: basis2 };
    } else {
        // Strip artificial columns.
        let a2 = Mat::from_fn(t.a.rows(), n, |i, j| t.a.at(i, j).clone());
        t = Tableau { a: a2, b: t.b, basis: t.basis };
    }
    debug_assert!(t.basis.iter().all(|&v| v < n));
    if t.a.cols() != n {
        let a2 = Mat::from_fn(t.a.rows(), n, |i, j| t.a.at(i, j).clone());
        t = Tableau { a: a2, b: t.b, basis: t.basis };
    }

    if !t.optimize(&cost) {
        return Phase2Result::Unbounded;
    }
    Phase2Result::Optimal { value: t.objective_value(&cost), x: t.solution(n) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn basic_minimization() {
        // min x + y s.t. x + y >= 2, x <= 5, x,y >= 0
        let mut p = LpProblem::minimize(vec![int(1), int(1)]);
        p.add_constraint(vec![int(1), int(1)], Rel::Ge, int(2));
        p.add_constraint(vec![int(1), int(0)], Rel::Le, int(5));
        match p.solve() {
            LpResult::Optimal { value, point } => {
                assert_eq!(value, int(2));
                assert_eq!(&point[0] + &point[1], int(2));
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn maximization_with_fraction() {
        // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6
        let mut p = LpProblem::maximize(vec![int(3), int(2)]);
        p.add_constraint(vec![int(1), int(1)], Rel::Le, int(4));
        p.add_constraint(vec![int(1), int(3)], Rel::Le, int(6));
        assert_eq!(p.solve().optimal_value(), Some(&int(12)));
    }

    #[test]
    fn free_variables_and_equalities() {
        // min |structure|: x free with x = -3 forced
        let mut p = LpProblem::minimize(vec![int(1)]);
        p.set_free(0);
        p.add_constraint(vec![int(2)], Rel::Eq, int(-6));
        match p.solve() {
            LpResult::Optimal { value, point } => {
                assert_eq!(point[0], int(-3));
                assert_eq!(value, int(-3));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut p = LpProblem::feasibility(1);
        p.add_constraint(vec![int(1)], Rel::Ge, int(3));
        p.add_constraint(vec![int(1)], Rel::Le, int(1));
        assert_eq!(p.solve(), LpResult::Infeasible);

        let p = LpProblem::minimize(vec![int(-1)]);
        assert_eq!(p.solve(), LpResult::Unbounded);
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Classic cycling-prone instance (Beale); Bland's rule must terminate.
        let mut p = LpProblem::minimize(vec![frac(-3, 4), int(150), frac(-1, 50), int(6)]);
        p.add_constraint(vec![frac(1, 4), int(-60), frac(-1, 25), int(9)], Rel::Le, int(0));
        p.add_constraint(vec![frac(1, 2), int(-90), frac(-1, 50), int(3)], Rel::Le, int(0));
        p.add_constraint(vec![int(0), int(0), int(1), int(0)], Rel::Le, int(1));
        assert_eq!(p.solve().optimal_value(), Some(&frac(-1, 20)));
    }

    #[test]
    fn redundant_equalities() {
        let mut p = LpProblem::minimize(vec![int(1), int(1)]);
        p.add_constraint(vec![int(1), int(1)], Rel::Eq, int(2));
        p.add_constraint(vec![int(2), int(2)], Rel::Eq, int(4));
        assert_eq!(p.solve().optimal_value(), Some(&int(2)));
    }
}
