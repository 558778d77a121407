//! Necessary conditions on `(N, s)` (and on the twists) for each behaviour
//! criterion to hold, per cover family.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Criterion {
    EmbeddingA,
    EmbeddingB,
    Birational,
    DegreePreserved,
    Halving,
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Criterion::EmbeddingA => "EmbeddingA",
            Criterion::EmbeddingB => "EmbeddingB",
            Criterion::Birational => "Birational",
            Criterion::DegreePreserved => "DegreePreserved",
            Criterion::Halving => "Halving",
        })
    }
}

/// Cover families with bound lemmas: `Z_n` with twist `k`, and
/// `Z_n × Z_2` with twists `(k, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    SimpleCyclic,
    ZnZ2,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::SimpleCyclic => "SimpleCyclic",
            Family::ZnZ2 => "ZnZ2",
        })
    }
}

/// The admissible region at fixed `(m, n, k, l, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundBox {
    pub ambient_min: i64,
    pub ambient_max: i64,
    pub s_min: i64,
    pub k_min: Option<i64>,
    pub l_min: Option<i64>,
    /// `k·(n−1) + N ≤ k_budget`.
    pub k_budget: Option<i64>,
}

impl BoundBox {
    /// No ambient dimension is admissible.
    pub fn is_empty(&self) -> bool {
        self.ambient_min > self.ambient_max
    }

    /// Whether `(N, s, k, l)` satisfies every inequality, where `n` is the
    /// order of the leading cyclic factor.
    pub fn contains(&self, ambient: i64, s: i64, n: i64, k: i64, l: Option<i64>) -> bool {
        (self.ambient_min..=self.ambient_max).contains(&ambient)
            && s >= self.s_min
            && self.k_min.is_none_or(|lo| k >= lo)
            && match (self.l_min, l) {
                (Some(lo), Some(l)) => l >= lo,
                (Some(_), None) => false,
                (None, _) => true,
            }
            && self.k_budget.is_none_or(|b| k * (n - 1) + ambient <= b)
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    num_integer::Integer::div_ceil(&a, &b)
}

/// The bound lemma for `criterion` on `family` at `(m, n, k, l, s)`.
///
/// Every configuration of dimension `m` with the given cover parameters and
/// subcanonicity `s` that satisfies the criterion lies in the returned box.
pub fn bound_box(
    criterion: Criterion,
    family: Family,
    m: i64,
    n: i64,
    k: i64,
    l: Option<i64>,
    s: i64,
) -> Result<BoundBox> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!("dimension m = {m} < 2")));
    }
    if n < 2 {
        return Err(Error::InvalidParameter(format!("cover order n = {n} < 2")));
    }
    match family {
        Family::SimpleCyclic => simple_cyclic_box(criterion, m, n, k, s),
        Family::ZnZ2 => {
            let l = l.ok_or_else(|| {
                Error::InvalidParameter("Z_n x Z_2 bounds need the twist l".into())
            })?;
            znz2_box(criterion, m, n, k, l, s)
        }
    }
}

fn simple_cyclic_box(criterion: Criterion, m: i64, n: i64, k: i64, s: i64) -> Result<BoundBox> {
    let complete = |ambient_min, ambient_max, s_min| BoundBox {
        ambient_min,
        ambient_max,
        s_min,
        k_min: Some(2),
        l_min: None,
        k_budget: None,
    };
    Ok(match criterion {
        Criterion::EmbeddingA => complete(
            m + n - 1,
            2 * (m + n) + s - (n - 1) * (n + 2) - 1,
            (n - 1) * (n + 2) - (m + n),
        ),
        Criterion::EmbeddingB => complete(
            2 * m + n - 1,
            2 * (2 * m + n - 1) - 2 * (n - 1) * (m + n) + s + 1,
            2 * m * (n - 2) + n * (2 * n - 3),
        ),
        Criterion::Birational => {
            let h = n / 2;
            complete(
                m + h,
                2 * (m + h) - 2 * (n - 1) * (h + 1) + s + 1,
                2 * (n - 1) * (h + 1) - (m + h) - 1,
            )
        }
        Criterion::DegreePreserved => {
            let ambient_max = 2 * m + s + 1 - k * (n - 1);
            let ambient_min = if k >= 3 {
                ceil_div(s + 1 + m * (k - 1) - k * (n - 1), k - 2).max(m + 1)
            } else {
                ambient_max + 1
            };
            BoundBox {
                ambient_min,
                ambient_max,
                s_min: i64::MIN,
                k_min: Some(3),
                l_min: None,
                k_budget: None,
            }
        }
        Criterion::Halving => {
            return Err(Error::UnsupportedCombination {
                criterion: criterion.to_string(),
                family: Family::SimpleCyclic.to_string(),
            })
        }
    })
}

fn znz2_box(criterion: Criterion, m: i64, n: i64, k: i64, l: i64, s: i64) -> Result<BoundBox> {
    let complete = |ambient_min, ambient_max, s_min| BoundBox {
        ambient_min,
        ambient_max,
        s_min,
        k_min: Some(2),
        l_min: Some(2),
        k_budget: None,
    };
    Ok(match criterion {
        Criterion::EmbeddingA => complete(
            m + 2 * n - 1,
            2 * (m + 2 * n - 1) - 2 * n * (n + 1) + s + 1,
            2 * n * n - m,
        ),
        Criterion::EmbeddingB => complete(
            2 * m + 2 * n - 1,
            2 * (2 * m + 2 * n - 1) - 2 * n * (m + 2 * n) + s + 1,
            2 * m * (n - 1) + n * (2 * n - 1),
        ),
        Criterion::Birational => complete(m + n, 2 * m - 2 * n * n + s + 1, 2 * n * n + n - m - 1),
        Criterion::DegreePreserved => {
            let ambient_max = 2 * m + s + 1 - l - k * (n - 1);
            let ambient_min = if k >= 3 && l >= 3 {
                let base = s + 1 - l - k * (n - 1);
                ceil_div(m * (k - 1) + base, k - 2)
                    .max(ceil_div(m * (l - 1) + base, l - 2))
                    .max(m + 1)
            } else {
                ambient_max + 1
            };
            BoundBox {
                ambient_min,
                ambient_max,
                s_min: i64::MIN,
                k_min: Some(3),
                l_min: Some(3),
                k_budget: None,
            }
        }
        Criterion::Halving => BoundBox {
            ambient_min: m + 1,
            ambient_max: 2 * (m + 1) + s + 1 - 2 * l - (n - 1) * (2 * l + 1),
            s_min: 2 * l + (n - 1) * (2 * l + 1) - (m + 2),
            k_min: Some(2 * l + 1),
            l_min: Some(1),
            k_budget: Some(2 * (m + 1) + s + 1),
        },
    })
}
