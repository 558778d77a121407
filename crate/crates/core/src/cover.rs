//! Abelian covers `π: X → Y`, described by the twists of the trace-zero
//! module `π_*O_X = O_Y ⊕ ⨁ O_Y(−k_i)`, and the invariants of `(X, L)`
//! with `L = π^*O_Y(1)`.

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::ci::CompleteIntersection;
use crate::error::{Error, Result};

/// Upper limit on the cover degree; the twist list is materialised.
pub const MAX_COVER_DEGREE: u64 = 1 << 20;

/// One simple cyclic factor: degree `order`, branched in `|O_Y(order·twist)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CyclicFactor {
    pub order: u64,
    pub twist: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoverSpec {
    /// Twists `k, 2k, …, (n−1)k`.
    SimpleCyclic { n: u64, k: i64 },
    /// Fiber product over `Y` of simple cyclic covers. Twists are the
    /// nonzero lattice sums `Σ_j i_j κ_j`, `0 ≤ i_j < n_j`.
    CyclicProduct { factors: Vec<CyclicFactor> },
    /// A split cover with a caller-supplied ramification twist
    /// (`K_X = π^*O_Y(δ − N − 1 + ram_twist)`).
    ExplicitSplit { twists: Vec<i64>, ram_twist: i64 },
}

impl CoverSpec {
    pub fn simple_cyclic(n: u64, k: i64) -> Result<Self> {
        let spec = CoverSpec::SimpleCyclic { n, k };
        spec.validate()?;
        Ok(spec)
    }

    pub fn cyclic_product(factors: &[(u64, i64)]) -> Result<Self> {
        let spec = CoverSpec::CyclicProduct {
            factors: factors
                .iter()
                .map(|&(order, twist)| CyclicFactor { order, twist })
                .collect(),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// The `Z_n × Z_2` cover: a degree-`n` cyclic cover with twist `k`
    /// fibred with a double cover with twist `l`.
    pub fn znz2(n: u64, k: i64, l: i64) -> Result<Self> {
        Self::cyclic_product(&[(n, k), (2, l)])
    }

    pub fn explicit_split(twists: &[i64], ram_twist: i64) -> Result<Self> {
        let mut twists = twists.to_vec();
        twists.sort_unstable();
        let spec = CoverSpec::ExplicitSplit { twists, ram_twist };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCover(msg));
        match self {
            CoverSpec::SimpleCyclic { n, k } => {
                if *n < 2 {
                    return bad(format!("cyclic order {n} < 2"));
                }
                if *k < 1 {
                    return bad(format!("cyclic twist {k} < 1"));
                }
                if *n > MAX_COVER_DEGREE {
                    return bad(format!("cover degree {n} exceeds {MAX_COVER_DEGREE}"));
                }
            }
            CoverSpec::CyclicProduct { factors } => {
                if factors.is_empty() {
                    return bad("product of no factors".into());
                }
                let mut total: u64 = 1;
                for f in factors {
                    if f.order < 2 {
                        return bad(format!("factor order {} < 2", f.order));
                    }
                    if f.twist < 1 {
                        return bad(format!("factor twist {} < 1", f.twist));
                    }
                    total = total.saturating_mul(f.order);
                }
                if total > MAX_COVER_DEGREE {
                    return bad(format!("cover degree {total} exceeds {MAX_COVER_DEGREE}"));
                }
            }
            CoverSpec::ExplicitSplit { twists, .. } => {
                if twists.is_empty() {
                    return bad("split cover needs at least one twist".into());
                }
                if let Some(t) = twists.iter().find(|&&t| t < 1) {
                    return bad(format!("twist {t} < 1"));
                }
                if twists.len() as u64 + 1 > MAX_COVER_DEGREE {
                    return bad("too many twists".into());
                }
            }
        }
        Ok(())
    }

    /// `n = deg π`.
    pub fn degree(&self) -> u64 {
        match self {
            CoverSpec::SimpleCyclic { n, .. } => *n,
            CoverSpec::CyclicProduct { factors } => factors.iter().map(|f| f.order).product(),
            CoverSpec::ExplicitSplit { twists, .. } => twists.len() as u64 + 1,
        }
    }

    /// The sorted multiset `k_1 ≤ … ≤ k_{n−1}`.
    pub fn twists(&self) -> Vec<i64> {
        match self {
            CoverSpec::SimpleCyclic { n, k } => (1..*n as i64).map(|i| i * k).collect(),
            CoverSpec::CyclicProduct { factors } => lattice_twists(factors),
            CoverSpec::ExplicitSplit { twists, .. } => twists.clone(),
        }
    }

    /// Twist of the ramification divisor: `K_X = π^*(K_Y ⊗ O_Y(ram_twist))`.
    pub fn ram_twist(&self) -> i64 {
        match self {
            CoverSpec::SimpleCyclic { n, k } => (*n as i64 - 1) * k,
            CoverSpec::CyclicProduct { factors } => factors
                .iter()
                .map(|f| (f.order as i64 - 1) * f.twist)
                .sum(),
            CoverSpec::ExplicitSplit { ram_twist, .. } => *ram_twist,
        }
    }

    pub fn min_twist(&self) -> i64 {
        match self {
            CoverSpec::SimpleCyclic { k, .. } => *k,
            CoverSpec::CyclicProduct { factors } => {
                factors.iter().map(|f| f.twist).min().unwrap_or(0)
            }
            CoverSpec::ExplicitSplit { twists, .. } => twists[0],
        }
    }

    /// The cyclic factors, if the cover is built from them.
    pub fn cyclic_factors(&self) -> Option<Vec<CyclicFactor>> {
        match self {
            CoverSpec::SimpleCyclic { n, k } => Some(vec![CyclicFactor { order: *n, twist: *k }]),
            CoverSpec::CyclicProduct { factors } => Some(factors.clone()),
            CoverSpec::ExplicitSplit { .. } => None,
        }
    }
}

impl std::fmt::Display for CoverSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoverSpec::SimpleCyclic { n, k } => write!(f, "cyclic:{n},{k}"),
            CoverSpec::CyclicProduct { factors } => {
                write!(f, "product:")?;
                for (i, fac) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{},{}", fac.order, fac.twist)?;
                }
                Ok(())
            }
            CoverSpec::ExplicitSplit { twists, ram_twist } => {
                write!(f, "split:")?;
                for (i, t) in twists.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ":{ram_twist}")
            }
        }
    }
}

/// Parses `cyclic:n,k`, `product:n1,k1;n2,k2;…` or `split:t1,t2,…:ram`.
impl std::str::FromStr for CoverSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidCover(format!("{why} in '{text}'"));
        let int = |x: &str| -> Result<i64> {
            x.trim().parse::<i64>().map_err(|_| bad(&format!("'{}' is not an integer", x.trim())))
        };
        let order = |x: &str| -> Result<u64> {
            x.trim().parse::<u64>().map_err(|_| bad(&format!("'{}' is not a cover order", x.trim())))
        };
        let pair = |x: &str| -> Result<(u64, i64)> {
            let (n, k) = x.split_once(',').ok_or_else(|| bad("expected 'n,k'"))?;
            Ok((order(n)?, int(k)?))
        };
        let (kind, body) = text.trim().split_once(':').ok_or_else(|| bad("missing ':'"))?;
        match kind {
            "cyclic" => {
                let (n, k) = pair(body)?;
                CoverSpec::simple_cyclic(n, k)
            }
            "product" => {
                let factors = body.split(';').map(pair).collect::<Result<Vec<_>>>()?;
                CoverSpec::cyclic_product(&factors)
            }
            "split" => {
                let (twists, ram) = body.rsplit_once(':').ok_or_else(|| bad("expected 'split:t1,t2,...:ram'"))?;
                let twists = twists.split(',').map(int).collect::<Result<Vec<_>>>()?;
                CoverSpec::explicit_split(&twists, int(ram)?)
            }
            other => Err(bad(&format!("unknown cover kind '{other}'"))),
        }
    }
}

pub(crate) fn lattice_twists(factors: &[CyclicFactor]) -> Vec<i64> {
    let mut sums = vec![0i64];
    for f in factors {
        let mut next = Vec::with_capacity(sums.len() * f.order as usize);
        for i in 0..f.order as i64 {
            next.extend(sums.iter().map(|s| s + i * f.twist));
        }
        sums = next;
    }
    // Drop the trivial character (the all-zero tuple is the first entry).
    sums.remove(0);
    sums.sort_unstable();
    sums
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarietyType {
    Fano,
    CalabiYau,
    GeneralType,
}

/// Numerical invariants of `(X, L)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverAnalysis {
    /// `m = dim X = N − r`.
    pub dim: i64,
    pub degree: u64,
    /// `K_X = L^{⊗s}`.
    pub subcanonicity: i64,
    /// `L^m = n · d`.
    pub l_top: BigUint,
    /// `K_X^m = s^m · L^m`.
    pub k_top: BigInt,
    pub geometric_genus: BigUint,
    /// `k_1 ≥ 2`, i.e. `φ` is given by the complete series `|L|`.
    pub complete_series: bool,
    pub variety_type: VarietyType,
}

/// `s = δ + ram_twist − N − 1`.
pub fn subcanonicity(ci: &CompleteIntersection, spec: &CoverSpec) -> i64 {
    ci.degree_sum() + spec.ram_twist() - ci.ambient_dim() - 1
}

pub fn analyze(ci: &CompleteIntersection, spec: &CoverSpec) -> CoverAnalysis {
    let dim = ci.dim();
    let degree = spec.degree();
    let s = subcanonicity(ci, spec);
    let l_top = ci.degree() * degree;
    let k_top = BigInt::from(s).pow(dim as u32) * BigInt::from(l_top.clone());

    // p_g = h^0(K_X) = h^0(π_*π^*O_Y(s)) = h^0(O_Y(s)) + Σ h^0(O_Y(s − k_i)).
    let mut geometric_genus = ci.h0(s);
    if s > 0 {
        for t in spec.twists() {
            if t > s {
                break;
            }
            geometric_genus += ci.h0(s - t);
        }
    }

    let variety_type = match s {
        s if s < 0 => VarietyType::Fano,
        0 => VarietyType::CalabiYau,
        _ => VarietyType::GeneralType,
    };
    CoverAnalysis {
        dim,
        degree,
        subcanonicity: s,
        l_top,
        k_top,
        geometric_genus,
        complete_series: spec.min_twist() >= 2,
        variety_type,
    }
}

/// `K_X^m` written as the tables print it: `±(n·d)·|s|^m`.
pub fn factored_k_top(analysis: &CoverAnalysis) -> String {
    let s = analysis.subcanonicity;
    let m = analysis.dim;
    if s == 0 {
        return "0".into();
    }
    let negative = s < 0 && m % 2 == 1;
    let sign = if negative { "-" } else { "" };
    let base = s.unsigned_abs();
    if base == 1 {
        format!("{sign}{}", analysis.l_top)
    } else if analysis.l_top.is_one() {
        format!("{sign}{base}^{m}")
    } else {
        format!("{sign}{}·{base}^{m}", analysis.l_top)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(n: i64, d: &[i64]) -> CompleteIntersection {
        CompleteIntersection::new(n, d).unwrap()
    }

    #[test]
    fn parse_round_trips() {
        for text in ["cyclic:3,2", "product:2,5;2,2", "split:2,3:7"] {
            let spec: CoverSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!("split:3,2:7".parse::<CoverSpec>().unwrap().to_string(), "split:2,3:7");
        for bad in ["cyclic:3", "cyclic:x,2", "torus:1,2", "product:", "cyclic:1,2", "split:2,3"] {
            assert!(matches!(bad.parse::<CoverSpec>(), Err(Error::InvalidCover(_))), "{bad}");
        }
    }

    #[test]
    fn twist_lists() {
        assert_eq!(CoverSpec::simple_cyclic(4, 2).unwrap().twists(), vec![2, 4, 6]);
        let v4 = CoverSpec::cyclic_product(&[(2, 2), (2, 2)]).unwrap();
        assert_eq!(v4.twists(), vec![2, 2, 4]);
        assert_eq!(v4.degree(), 4);
        let z6 = CoverSpec::cyclic_product(&[(3, 2), (2, 3)]).unwrap();
        assert_eq!(z6.twists(), vec![2, 3, 4, 5, 7]);
        assert_eq!(z6.ram_twist(), 7);
    }

    #[test]
    fn invalid_covers() {
        assert!(CoverSpec::simple_cyclic(1, 2).is_err());
        assert!(CoverSpec::simple_cyclic(3, 0).is_err());
        assert!(CoverSpec::cyclic_product(&[]).is_err());
        assert!(CoverSpec::cyclic_product(&[(2, 1), (1, 3)]).is_err());
        assert!(CoverSpec::explicit_split(&[], 3).is_err());
        assert!(CoverSpec::explicit_split(&[2, 0], 3).is_err());
    }

    #[test]
    fn explicit_split_sorts_and_keeps_ram_twist() {
        let spec = CoverSpec::explicit_split(&[5, 2, 3], 9).unwrap();
        assert_eq!(spec.twists(), vec![2, 3, 5]);
        assert_eq!(spec.ram_twist(), 9);
        assert_eq!(spec.degree(), 4);
        assert_eq!(spec.to_string(), "split:2,3,5:9");
    }

    #[test]
    fn subcanonicity_examples() {
        let c3 = CoverSpec::simple_cyclic(3, 2).unwrap();
        assert_eq!(subcanonicity(&ci(12, &[2, 4]), &c3), -3);
        assert_eq!(subcanonicity(&ci(6, &[4]), &c3), 1);
        let v4 = CoverSpec::cyclic_product(&[(2, 2), (2, 2)]).unwrap();
        assert_eq!(subcanonicity(&ci(12, &[2, 2, 4]), &v4), -1);
    }

    #[test]
    fn analysis_examples() {
        let a = analyze(&ci(16, &[2, 4, 6]), &CoverSpec::simple_cyclic(4, 2).unwrap());
        assert_eq!((a.dim, a.subcanonicity), (13, 1));
        assert_eq!(a.k_top, BigInt::from(192));
        assert_eq!(a.geometric_genus, BigUint::from(17u32));
        assert_eq!(a.variety_type, VarietyType::GeneralType);
        assert!(a.complete_series);

        let a = analyze(&ci(30, &[2, 4, 6, 8]), &CoverSpec::simple_cyclic(5, 2).unwrap());
        assert_eq!((a.dim, a.subcanonicity), (26, -3));
        assert_eq!(a.k_top, BigInt::from(1920) * BigInt::from(3).pow(26));
        assert_eq!(a.geometric_genus, BigUint::from(0u32));
        assert_eq!(a.variety_type, VarietyType::Fano);
        assert_eq!(factored_k_top(&a), "1920·3^26");

        let v4 = CoverSpec::cyclic_product(&[(2, 2), (2, 2)]).unwrap();
        let a = analyze(&ci(10, &[2, 2, 4]), &v4);
        assert_eq!((a.dim, a.degree, a.subcanonicity), (7, 4, 1));
        assert_eq!(a.k_top, BigInt::from(64));
        assert_eq!(a.geometric_genus, BigUint::from(11u32));

        let a = analyze(&ci(9, &[4, 4, 4, 4, 4, 4]), &v4);
        assert_eq!((a.dim, a.subcanonicity), (3, 18));
        assert_eq!(a.l_top, BigUint::from(4u32).pow(7));
    }

    #[test]
    fn calabi_yau_has_pg_one() {
        let a = analyze(&ci(9, &[2, 4]), &CoverSpec::simple_cyclic(3, 2).unwrap());
        assert_eq!(a.subcanonicity, 0);
        assert_eq!(a.variety_type, VarietyType::CalabiYau);
        assert!(a.geometric_genus.is_one());
        assert_eq!(factored_k_top(&a), "0");
    }

    #[test]
    fn factored_form_signs() {
        let a = analyze(&ci(20, &[2, 4, 6]), &CoverSpec::simple_cyclic(4, 2).unwrap());
        assert_eq!(factored_k_top(&a), "-192·3^17");
        let a = analyze(&ci(18, &[2, 4, 6]), &CoverSpec::simple_cyclic(4, 2).unwrap());
        assert_eq!(factored_k_top(&a), "-192");
    }
}
