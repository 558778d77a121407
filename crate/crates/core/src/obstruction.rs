//! Numerical obstruction to a deformed embedding being a complete
//! intersection: a codimension-`r` complete intersection with degrees `d'_i`
//! would need `Σ d'_i = S` and `Π d'_i = P`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::ci::{fmt_tuple, CompleteIntersection};
use crate::cover::CoverSpec;

/// Default cap on visited search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InfeasibleReason {
    /// `S^r < P·r^r`: no real solution exists.
    AmGm,
    /// The complete search found nothing.
    ExhaustedSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionResult {
    /// Every solution, as sorted tuples in lexicographic order.
    Solvable(Vec<Vec<i64>>),
    Infeasible(InfeasibleReason),
    /// The node budget ran out before the search finished.
    SearchBudgetExceeded,
}

impl ObstructionResult {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, ObstructionResult::Infeasible(_))
    }

    pub fn witnesses(&self) -> &[Vec<i64>] {
        match self {
            ObstructionResult::Solvable(w) => w,
            _ => &[],
        }
    }
}

impl fmt::Display for ObstructionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObstructionResult::Solvable(ws) => {
                write!(f, "Solvable[")?;
                for (i, w) in ws.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    fmt_tuple(f, w)?;
                }
                write!(f, "]")
            }
            ObstructionResult::Infeasible(InfeasibleReason::AmGm) => write!(f, "Infeasible(AMGM)"),
            ObstructionResult::Infeasible(InfeasibleReason::ExhaustedSearch) => {
                write!(f, "Infeasible(ExhaustedSearch)")
            }
            ObstructionResult::SearchBudgetExceeded => write!(f, "SearchBudgetExceeded"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiObstruction {
    pub target_sum: i64,
    pub target_prod: BigUint,
    pub parts: i64,
    pub result: ObstructionResult,
}

/// The search visited more nodes than allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("search exceeded its budget of {budget} nodes")]
pub struct BudgetExceeded {
    pub budget: u64,
}

/// `(S, P, r)` with `S = δ + ram_twist`, `P = deg(π)·Π d_i`, `r` the codimension.
pub fn ci_constraints(ci: &CompleteIntersection, spec: &CoverSpec) -> (i64, BigUint, i64) {
    let sum = ci.degree_sum() + spec.ram_twist();
    let prod = ci.degree() * BigUint::from(spec.degree());
    (sum, prod, ci.codim())
}

/// `S^r < P·r^r`, compared exactly.
pub fn amgm_infeasible(sum: i64, prod: &BigUint, parts: i64) -> bool {
    if parts < 1 {
        return false;
    }
    if sum < 0 {
        return true;
    }
    let r = parts as u32;
    BigUint::from(sum as u64).pow(r) < prod * BigUint::from(parts as u64).pow(r)
}

/// All nondecreasing `parts`-tuples of integers `≥ min_part` with sum `sum`
/// and product `prod`, in lexicographic order.
pub fn solve_ci(
    sum: i64,
    prod: &BigUint,
    parts: i64,
    min_part: i64,
    budget: u64,
) -> Result<Vec<Vec<i64>>, BudgetExceeded> {
    if parts < 1 || min_part < 1 || sum < parts * min_part || prod.is_zero() {
        return Ok(Vec::new());
    }
    let witnesses = match prod.to_u128() {
        Some(p) => Search::new(budget).run(sum, p, parts, min_part)?,
        None => Search::new(budget).run(sum, prod.clone(), parts, min_part)?,
    };
    for w in &witnesses {
        let s: i64 = w.iter().sum();
        let p: BigUint = w.iter().map(|&x| BigUint::from(x as u64)).product();
        assert!(
            s == sum && &p == prod && w.windows(2).all(|x| x[0] <= x[1]),
            "solver produced an invalid witness {w:?}"
        );
    }
    Ok(witnesses)
}

/// Builds the constraints, short-circuits on the AM–GM certificate, and
/// otherwise searches with the default settings.
pub fn obstruction_report(ci: &CompleteIntersection, spec: &CoverSpec) -> CiObstruction {
    obstruction_report_with(ci, spec, 2, DEFAULT_NODE_BUDGET)
}

pub fn obstruction_report_with(
    ci: &CompleteIntersection,
    spec: &CoverSpec,
    min_part: i64,
    budget: u64,
) -> CiObstruction {
    let (sum, prod, parts) = ci_constraints(ci, spec);
    let result = if amgm_infeasible(sum, &prod, parts) {
        ObstructionResult::Infeasible(InfeasibleReason::AmGm)
    } else {
        match solve_ci(sum, &prod, parts, min_part, budget) {
            Ok(w) if w.is_empty() => ObstructionResult::Infeasible(InfeasibleReason::ExhaustedSearch),
            Ok(w) => ObstructionResult::Solvable(w),
            Err(_) => ObstructionResult::SearchBudgetExceeded,
        }
    };
    CiObstruction { target_sum: sum, target_prod: prod, parts, result }
}

/// Arithmetic the search needs, so that products fitting in `u128` avoid
/// heap allocation.
trait Product: Clone {
    fn divisible_by(&self, x: i64) -> bool;
    fn div_by(&self, x: i64) -> Self;
    fn equals(&self, x: i64) -> bool;
    /// `x^k ≤ self`.
    fn power_fits(&self, x: i64, k: u32) -> bool;
    /// `sum^k < self·k^k`.
    fn amgm_fails(&self, sum: i64, k: u32) -> bool;
}

impl Product for u128 {
    fn divisible_by(&self, x: i64) -> bool {
        self.is_multiple_of(x as u128)
    }
    fn div_by(&self, x: i64) -> Self {
        self / x as u128
    }
    fn equals(&self, x: i64) -> bool {
        *self == x as u128
    }
    fn power_fits(&self, x: i64, k: u32) -> bool {
        (x as u128).checked_pow(k).is_some_and(|v| v <= *self)
    }
    fn amgm_fails(&self, sum: i64, k: u32) -> bool {
        let (Some(lhs), Some(kk)) = ((sum as u128).checked_pow(k), (k as u128).checked_pow(k)) else {
            return false;
        };
        match self.checked_mul(kk) {
            Some(rhs) => lhs < rhs,
            None => true,
        }
    }
}

impl Product for BigUint {
    fn divisible_by(&self, x: i64) -> bool {
        (self % x as u64).is_zero()
    }
    fn div_by(&self, x: i64) -> Self {
        self / x as u64
    }
    fn equals(&self, x: i64) -> bool {
        *self == BigUint::from(x as u64)
    }
    fn power_fits(&self, x: i64, k: u32) -> bool {
        BigUint::from(x as u64).pow(k) <= *self
    }
    fn amgm_fails(&self, sum: i64, k: u32) -> bool {
        BigUint::from(sum as u64).pow(k) < self * BigUint::from(k).pow(k)
    }
}

struct Search {
    budget: u64,
    nodes: u64,
    prefix: Vec<i64>,
    out: Vec<Vec<i64>>,
}

impl Search {
    fn new(budget: u64) -> Self {
        Search { budget, nodes: 0, prefix: Vec::new(), out: Vec::new() }
    }

    fn run<P: Product>(
        mut self,
        sum: i64,
        prod: P,
        parts: i64,
        min_part: i64,
    ) -> Result<Vec<Vec<i64>>, BudgetExceeded> {
        self.descend(sum, &prod, parts, min_part, min_part)?;
        Ok(self.out)
    }

    fn descend<P: Product>(
        &mut self,
        sum: i64,
        prod: &P,
        left: i64,
        lo: i64,
        min_part: i64,
    ) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExceeded { budget: self.budget });
        }
        if left == 1 {
            if sum >= lo && prod.equals(sum) {
                let mut w = self.prefix.clone();
                w.push(sum);
                self.out.push(w);
            }
            return Ok(());
        }
        if prod.amgm_fails(sum, left as u32) {
            return Ok(());
        }
        let hi = (sum / left).min(sum - min_part * (left - 1));
        for x in lo..=hi {
            if !prod.power_fits(x, left as u32) {
                break;
            }
            if !prod.divisible_by(x) {
                continue;
            }
            self.prefix.push(x);
            let res = self.descend(sum - x, &prod.div_by(x), left - 1, x, min_part);
            self.prefix.pop();
            res?;
        }
        Ok(())
    }
}
