//! A small dense two-phase simplex solver.
//!
//! Problems are stated as
//!
//! ```text
//! minimize    c . z
//! subject to  A_eq z  = b_eq
//!             A_le z <= b_le
//!             l <= z <= u        (either side may be absent)
//! ```
//!
//! and rewritten in standard form (nonnegative columns, one slack per
//! inequality) before solving. Free variables are split into a difference of
//! two nonnegative columns; finite upper bounds become extra inequality rows.
//! The tableau is dense, so memory is `O(rows * columns)`: a problem with a
//! few thousand rows and columns needs tens of megabytes.
//!
//! Pricing is Dantzig's largest-coefficient rule until the objective stalls
//! for [`SimplexOptions::stall_limit`] consecutive degenerate pivots, after
//! which Bland's smallest-index rule takes over for the rest of the phase and
//! guarantees termination.

use serde::Serialize;

use crate::error::{Error, Result};

/// Feasibility tolerance for reported solutions and for the phase-one verdict.
pub const LP_TOL: f64 = 1e-9;

/// Tableau entries below this magnitude are treated as zero.
pub const PIVOT_TOL: f64 = 1e-10;

/// Per-variable bounds; `None` means unbounded on that side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bound {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

impl Bound {
    pub const NONNEGATIVE: Self = Self {
        lower: Some(0.0),
        upper: None,
    };
    pub const FREE: Self = Self {
        lower: None,
        upper: None,
    };

    pub fn between(lower: f64, upper: f64) -> Self {
        Self {
            lower: Some(lower),
            upper: Some(upper),
        }
    }

    pub fn at_least(lower: f64) -> Self {
        Self {
            lower: Some(lower),
            upper: None,
        }
    }

    pub fn at_most(upper: f64) -> Self {
        Self {
            lower: None,
            upper: Some(upper),
        }
    }
}

/// One linear constraint row.
#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coefficients: Vec<f64>,
    pub rhs: f64,
}

/// A linear program in general form. See the module docs.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<f64>,
    pub eq_constraints: Vec<Constraint>,
    /// `row . z <= rhs`.
    pub ineq_constraints: Vec<Constraint>,
    pub bounds: Vec<Bound>,
}

impl LinearProgram {
    /// A problem with zero objective, no constraints and `z >= 0`.
    pub fn new(num_vars: usize) -> Self {
        Self {
            num_vars,
            objective: vec![0.0; num_vars],
            eq_constraints: Vec::new(),
            ineq_constraints: Vec::new(),
            bounds: vec![Bound::NONNEGATIVE; num_vars],
        }
    }

    pub fn minimize(mut self, objective: Vec<f64>) -> Self {
        self.objective = objective;
        self
    }

    pub fn add_eq(&mut self, coefficients: Vec<f64>, rhs: f64) {
        self.eq_constraints.push(Constraint { coefficients, rhs });
    }

    /// `row . z <= rhs`.
    pub fn add_le(&mut self, coefficients: Vec<f64>, rhs: f64) {
        self.ineq_constraints.push(Constraint { coefficients, rhs });
    }

    /// `row . z >= rhs`, stored negated.
    pub fn add_ge(&mut self, coefficients: Vec<f64>, rhs: f64) {
        let coefficients = coefficients.into_iter().map(|c| -c).collect();
        self.ineq_constraints.push(Constraint {
            coefficients,
            rhs: -rhs,
        });
    }

    pub fn set_bounds(&mut self, var: usize, bound: Bound) {
        self.bounds[var] = bound;
    }

    pub fn num_constraints(&self) -> usize {
        self.eq_constraints.len() + self.ineq_constraints.len()
    }

    /// Rejects rows of the wrong length, non-finite data and crossed bounds.
    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars;
        if self.objective.len() != n {
            return Err(Error::MalformedLp(format!(
                "objective has {} entries for {n} variables",
                self.objective.len()
            )));
        }
        if self.bounds.len() != n {
            return Err(Error::MalformedLp(format!(
                "{} bounds for {n} variables",
                self.bounds.len()
            )));
        }
        for (kind, rows) in [
            ("equality", &self.eq_constraints),
            ("inequality", &self.ineq_constraints),
        ] {
            for (r, c) in rows.iter().enumerate() {
                if c.coefficients.len() != n {
                    return Err(Error::MalformedLp(format!(
                        "{kind} row {r} has {} coefficients for {n} variables",
                        c.coefficients.len()
                    )));
                }
                if !c.rhs.is_finite() || c.coefficients.iter().any(|a| !a.is_finite()) {
                    return Err(Error::MalformedLp(format!("{kind} row {r} is not finite")));
                }
            }
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(Error::MalformedLp("objective is not finite".into()));
        }
        for (v, b) in self.bounds.iter().enumerate() {
            if b.lower.is_some_and(|l| !l.is_finite()) || b.upper.is_some_and(|u| !u.is_finite()) {
                return Err(Error::MalformedLp(format!(
                    "bound of variable {v} is not finite"
                )));
            }
            if let (Some(l), Some(u)) = (b.lower, b.upper) {
                if l > u {
                    return Err(Error::MalformedLp(format!(
                        "variable {v} has lower bound {l} above upper bound {u}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn objective_value(&self, z: &[f64]) -> f64 {
        dot(&self.objective, z)
    }

    /// Largest constraint or bound violation of `z`. Row violations are
    /// divided by `max(1, |rhs|, sum_i |a_i z_i|)`.
    pub fn max_violation(&self, z: &[f64]) -> f64 {
        let scale = |c: &Constraint| {
            let mag: f64 = c
                .coefficients
                .iter()
                .zip(z)
                .map(|(a, x)| (a * x).abs())
                .sum();
            mag.max(c.rhs.abs()).max(1.0)
        };
        let eq = self
            .eq_constraints
            .iter()
            .map(|c| (dot(&c.coefficients, z) - c.rhs).abs() / scale(c));
        let le = self
            .ineq_constraints
            .iter()
            .map(|c| (dot(&c.coefficients, z) - c.rhs).max(0.0) / scale(c));
        let bounds = self.bounds.iter().zip(z).map(|(b, &x)| {
            let lo = b.lower.map_or(0.0, |l| (l - x).max(0.0));
            let hi = b.upper.map_or(0.0, |u| (x - u).max(0.0));
            lo.max(hi)
        });
        eq.chain(le).chain(bounds).fold(0.0, f64::max)
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Result of [`solve_lp`]. `solution` and `objective_value` are present iff optimal.
#[derive(Debug, Clone, PartialEq)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub solution: Option<Vec<f64>>,
    pub objective_value: Option<f64>,
    pub iterations: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    /// Smallest eligible index for both entering and leaving variables.
    Bland,
    /// Most negative reduced cost, falling back to Bland after a stall.
    Dantzig,
}

#[derive(Debug, Clone, Copy)]
pub struct SimplexOptions {
    pub rule: PivotRule,
    /// Consecutive degenerate pivots tolerated before switching to Bland.
    pub stall_limit: usize,
    pub max_iterations: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        Self {
            rule: PivotRule::Dantzig,
            stall_limit: 50,
            max_iterations: 1_000_000,
        }
    }
}

pub fn solve_lp(lp: &LinearProgram) -> Result<LpOutcome> {
    solve_lp_with(lp, SimplexOptions::default())
}

pub fn solve_lp_with(lp: &LinearProgram, options: SimplexOptions) -> Result<LpOutcome> {
    lp.validate()?;
    let std = StandardForm::build(lp);
    let mut tableau = Tableau::new(&std);
    let mut iterations = 0;

    tableau.set_phase_one_costs();
    match tableau.run(options, &mut iterations)? {
        Phase::Optimal => {}
        Phase::Unbounded => unreachable!("phase one is bounded below by zero"),
    }
    let rhs_scale = std.rows.iter().map(|r| r.rhs.abs()).fold(1.0, f64::max);
    if -tableau.objective_rhs() > LP_TOL * rhs_scale {
        return Ok(LpOutcome {
            status: LpStatus::Infeasible,
            solution: None,
            objective_value: None,
            iterations,
        });
    }
    tableau.drop_artificials();
    tableau.set_costs(&std.costs);
    if let Phase::Unbounded = tableau.run(options, &mut iterations)? {
        return Ok(LpOutcome {
            status: LpStatus::Unbounded,
            solution: None,
            objective_value: None,
            iterations,
        });
    }

    let y = tableau.primal();
    let z = std.recover(&y);
    debug_assert!(
        lp.max_violation(&z) <= LP_TOL,
        "simplex returned a point violating constraints by {:e}",
        lp.max_violation(&z)
    );
    Ok(LpOutcome {
        status: LpStatus::Optimal,
        objective_value: Some(lp.objective_value(&z)),
        solution: Some(z),
        iterations,
    })
}

// ---------------------------------------------------------------------------
// standard form

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowKind {
    Eq,
    Le,
}

struct Row {
    coefficients: Vec<f64>,
    rhs: f64,
    kind: RowKind,
}

/// `z_v = offset_v + sum (sign * y_col)` for every original variable.
struct VarMap {
    offset: f64,
    terms: Vec<(usize, f64)>,
}

struct StandardForm {
    columns: usize,
    vars: Vec<VarMap>,
    costs: Vec<f64>,
    rows: Vec<Row>,
}

impl StandardForm {
    fn build(lp: &LinearProgram) -> Self {
        let mut vars = Vec::with_capacity(lp.num_vars);
        let mut columns = 0;
        let mut upper_rows = Vec::new();
        for b in &lp.bounds {
            let map = match (b.lower, b.upper) {
                (Some(l), upper) => {
                    if let Some(u) = upper {
                        upper_rows.push((columns, u - l));
                    }
                    VarMap {
                        offset: l,
                        terms: vec![(columns, 1.0)],
                    }
                }
                (None, Some(u)) => VarMap {
                    offset: u,
                    terms: vec![(columns, -1.0)],
                },
                (None, None) => {
                    columns += 1;
                    VarMap {
                        offset: 0.0,
                        terms: vec![(columns - 1, 1.0), (columns, -1.0)],
                    }
                }
            };
            columns += 1;
            vars.push(map);
        }

        let mut costs = vec![0.0; columns];
        for (map, c) in vars.iter().zip(&lp.objective) {
            for &(col, sign) in &map.terms {
                costs[col] += sign * c;
            }
        }

        let translate = |c: &Constraint, kind: RowKind| {
            let mut coefficients = vec![0.0; columns];
            let mut rhs = c.rhs;
            for (map, a) in vars.iter().zip(&c.coefficients) {
                if *a == 0.0 {
                    continue;
                }
                rhs -= a * map.offset;
                for &(col, sign) in &map.terms {
                    coefficients[col] += sign * a;
                }
            }
            Row {
                coefficients,
                rhs,
                kind,
            }
        };
        let mut rows: Vec<Row> = lp
            .eq_constraints
            .iter()
            .map(|c| translate(c, RowKind::Eq))
            .chain(
                lp.ineq_constraints
                    .iter()
                    .map(|c| translate(c, RowKind::Le)),
            )
            .collect();
        for (col, width) in upper_rows {
            let mut coefficients = vec![0.0; columns];
            coefficients[col] = 1.0;
            rows.push(Row {
                coefficients,
                rhs: width,
                kind: RowKind::Le,
            });
        }
        Self {
            columns,
            vars,
            costs,
            rows,
        }
    }

    fn recover(&self, y: &[f64]) -> Vec<f64> {
        self.vars
            .iter()
            .map(|m| m.offset + m.terms.iter().map(|&(c, s)| s * y[c]).sum::<f64>())
            .collect()
    }
}

// ---------------------------------------------------------------------------
// tableau

enum Phase {
    Optimal,
    Unbounded,
}

struct Tableau {
    /// Row-major `rows x (cols + 1)`; the last entry of each row is the rhs.
    data: Vec<f64>,
    rows: usize,
    cols: usize,
    /// Reduced costs, last entry holds minus the objective value.
    cost: Vec<f64>,
    basis: Vec<usize>,
    /// Columns `structural..cols` beyond this index are artificial.
    first_artificial: usize,
}

impl Tableau {
    fn new(std: &StandardForm) -> Self {
        let slacks = std.rows.iter().filter(|r| r.kind == RowKind::Le).count();
        let needs_artificial: Vec<bool> = std
            .rows
            .iter()
            .map(|r| r.kind == RowKind::Eq || r.rhs < 0.0)
            .collect();
        let artificials = needs_artificial.iter().filter(|&&a| a).count();
        let first_artificial = std.columns + slacks;
        let cols = first_artificial + artificials;
        let width = cols + 1;
        let rows = std.rows.len();

        let mut data = vec![0.0; rows * width];
        let mut basis = vec![0; rows];
        let mut next_slack = std.columns;
        let mut next_art = first_artificial;
        for (r, row) in std.rows.iter().enumerate() {
            let flip = if row.rhs < 0.0 { -1.0 } else { 1.0 };
            let line = &mut data[r * width..(r + 1) * width];
            for (dst, a) in line.iter_mut().zip(&row.coefficients) {
                *dst = flip * a;
            }
            line[cols] = flip * row.rhs;
            if row.kind == RowKind::Le {
                line[next_slack] = flip;
                if !needs_artificial[r] {
                    basis[r] = next_slack;
                }
                next_slack += 1;
            }
            if needs_artificial[r] {
                line[next_art] = 1.0;
                basis[r] = next_art;
                next_art += 1;
            }
        }
        Self {
            data,
            rows,
            cols,
            cost: vec![0.0; width],
            basis,
            first_artificial,
        }
    }

    fn width(&self) -> usize {
        self.cols + 1
    }

    fn row(&self, r: usize) -> &[f64] {
        let w = self.width();
        &self.data[r * w..(r + 1) * w]
    }

    fn rhs(&self, r: usize) -> f64 {
        self.data[r * self.width() + self.cols]
    }

    fn objective_rhs(&self) -> f64 {
        self.cost[self.cols]
    }

    fn set_phase_one_costs(&mut self) {
        let costs: Vec<f64> = (0..self.cols)
            .map(|c| if c >= self.first_artificial { 1.0 } else { 0.0 })
            .collect();
        self.set_costs(&costs);
    }

    /// Reduced costs `c - c_B B^-1 A` for the current basis.
    fn set_costs(&mut self, costs: &[f64]) {
        let w = self.width();
        let mut reduced = vec![0.0; w];
        reduced[..costs.len()].copy_from_slice(costs);
        for r in 0..self.rows {
            let cb = costs.get(self.basis[r]).copied().unwrap_or(0.0);
            if cb == 0.0 {
                continue;
            }
            for (d, a) in reduced.iter_mut().zip(&self.data[r * w..(r + 1) * w]) {
                *d -= cb * a;
            }
        }
        self.cost = reduced;
    }

    fn run(&mut self, options: SimplexOptions, iterations: &mut usize) -> Result<Phase> {
        let mut rule = options.rule;
        let mut stalled = 0;
        loop {
            let Some(enter) = self.entering(rule) else {
                return Ok(Phase::Optimal);
            };
            let Some(leave) = self.leaving(enter, rule) else {
                return Ok(Phase::Unbounded);
            };
            let before = self.objective_rhs();
            self.pivot(leave, enter);
            *iterations += 1;
            if *iterations > options.max_iterations {
                return Err(Error::Consistency(format!(
                    "simplex exceeded {} iterations",
                    options.max_iterations
                )));
            }
            if (self.objective_rhs() - before).abs() <= PIVOT_TOL {
                stalled += 1;
                if stalled > options.stall_limit {
                    rule = PivotRule::Bland;
                }
            } else {
                stalled = 0;
            }
        }
    }

    fn entering(&self, rule: PivotRule) -> Option<usize> {
        let candidates = self.cost[..self.cols]
            .iter()
            .enumerate()
            .filter(|(_, &d)| d < -PIVOT_TOL);
        match rule {
            PivotRule::Bland => candidates.map(|(c, _)| c).next(),
            PivotRule::Dantzig => candidates.min_by(|a, b| a.1.total_cmp(b.1)).map(|(c, _)| c),
        }
    }

    /// Minimum-ratio row. Ties go to the smallest basic index under Bland and
    /// to the largest pivot element otherwise.
    fn leaving(&self, col: usize, rule: PivotRule) -> Option<usize> {
        let mut best: Option<(usize, f64, f64)> = None;
        for r in 0..self.rows {
            let a = self.row(r)[col];
            if a <= PIVOT_TOL {
                continue;
            }
            let ratio = self.rhs(r).max(0.0) / a;
            let better = match best {
                None => true,
                Some((br, bratio, ba)) => {
                    if ratio < bratio - PIVOT_TOL {
                        true
                    } else if ratio <= bratio + PIVOT_TOL {
                        match rule {
                            PivotRule::Bland => self.basis[r] < self.basis[br],
                            PivotRule::Dantzig => a > ba,
                        }
                    } else {
                        false
                    }
                }
            };
            if better {
                best = Some((r, ratio, a));
            }
        }
        best.map(|(r, _, _)| r)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.width();
        let inv = 1.0 / self.data[r * w + c];
        let mut pivot_row = self.data[r * w..(r + 1) * w].to_vec();
        for x in &mut pivot_row {
            *x *= inv;
        }
        pivot_row[c] = 1.0;
        let nonzero: Vec<usize> = (0..w).filter(|&k| pivot_row[k] != 0.0).collect();

        for (i, line) in self.data.chunks_exact_mut(w).enumerate() {
            if i == r {
                line.copy_from_slice(&pivot_row);
                continue;
            }
            let f = line[c];
            if f == 0.0 {
                continue;
            }
            for &k in &nonzero {
                line[k] -= f * pivot_row[k];
            }
            line[c] = 0.0;
        }
        let f = self.cost[c];
        if f != 0.0 {
            for &k in &nonzero {
                self.cost[k] -= f * pivot_row[k];
            }
            self.cost[c] = 0.0;
        }
        self.basis[r] = c;
    }

    /// Pivot zero-level artificials out of the basis, drop rows that turn out
    /// redundant, then drop the artificial columns.
    fn drop_artificials(&mut self) {
        let mut redundant = Vec::new();
        for r in 0..self.rows {
            if self.basis[r] < self.first_artificial {
                continue;
            }
            let col = (0..self.first_artificial)
                .filter(|&c| self.row(r)[c].abs() > PIVOT_TOL)
                .max_by(|&a, &b| self.row(r)[a].abs().total_cmp(&self.row(r)[b].abs()));
            match col {
                Some(c) => self.pivot(r, c),
                None => redundant.push(r),
            }
        }

        let old_w = self.width();
        let cols = self.first_artificial;
        let new_w = cols + 1;
        let keep: Vec<usize> = (0..self.rows).filter(|r| !redundant.contains(r)).collect();
        let mut data = Vec::with_capacity(keep.len() * new_w);
        for &r in &keep {
            let line = &self.data[r * old_w..(r + 1) * old_w];
            data.extend_from_slice(&line[..cols]);
            data.push(line[old_w - 1]);
        }
        self.basis = keep.iter().map(|&r| self.basis[r]).collect();
        self.data = data;
        self.rows = keep.len();
        self.cols = cols;
        self.cost = vec![0.0; new_w];
    }

    fn primal(&self) -> Vec<f64> {
        let mut y = vec![0.0; self.cols];
        for r in 0..self.rows {
            if self.basis[r] < self.cols {
                y[self.basis[r]] = self.rhs(r).max(0.0);
            }
        }
        y
    }
}
