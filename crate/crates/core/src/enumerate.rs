//! Deterministic sweeps over bounded configuration spaces.
//!
//! The subcanonicity relation `δ + ram_twist = N + s + 1` fixes the degree
//! sum of the complete intersection, so every sweep over finite ranges of
//! `(m, n, k, l, s)` is finite: `r = N − m ≥ 1` and `δ ≥ 2r` force
//! `N ≤ 2m + s + 1 − ram_twist`.

use std::ops::RangeInclusive;

use crate::bounds::{bound_box, BoundBox, Criterion, Family};
use crate::ci::CompleteIntersection;
use crate::classify::{
    birational_twists, check_degree_preserved, check_embedding_a, check_embedding_b,
    check_halving, classify, Behavior, Certificate, Verdict,
};
use crate::cover::{analyze, CoverAnalysis, CoverSpec};
use crate::error::{Error, Result};
use crate::obstruction::{obstruction_report, CiObstruction};

/// Which covers a sweep ranges over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverFamily {
    /// `Z_n` with twist `k`.
    SimpleCyclic,
    /// `Z_n × Z_2` with twists `(k, l)`.
    ZnZ2,
    /// One fixed cyclic product; the `n`, `k`, `l` ranges are ignored.
    Fixed(Vec<(u64, i64)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumFilter {
    pub family: CoverFamily,
    pub n_range: RangeInclusive<u64>,
    pub k_range: RangeInclusive<i64>,
    pub l_range: RangeInclusive<i64>,
    pub m_range: RangeInclusive<i64>,
    /// Optional restriction of the ambient dimension `N`.
    pub ambient_range: Option<RangeInclusive<i64>>,
    pub s_range: RangeInclusive<i64>,
    /// Keep configurations exhibiting any of these; empty keeps everything.
    /// `HalvesDegree` matches both halving flavours.
    pub behaviors: Vec<Behavior>,
    /// Keep only covers whose smallest twist is at least 2.
    pub require_complete_series: bool,
    /// Emit each unordered multidegree once; otherwise every distinct
    /// ordering is emitted.
    pub dedupe: bool,
}

impl EnumFilter {
    pub fn new(family: CoverFamily) -> Self {
        EnumFilter {
            family,
            n_range: 2..=5,
            k_range: 2..=2,
            l_range: 2..=2,
            m_range: 2..=12,
            ambient_range: None,
            s_range: -3..=3,
            behaviors: Vec::new(),
            require_complete_series: true,
            dedupe: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ranges = [
            ("n", *self.n_range.start() as i64, *self.n_range.end() as i64),
            ("k", *self.k_range.start(), *self.k_range.end()),
            ("l", *self.l_range.start(), *self.l_range.end()),
            ("m", *self.m_range.start(), *self.m_range.end()),
            ("s", *self.s_range.start(), *self.s_range.end()),
        ];
        for (name, lo, hi) in ranges {
            if lo > hi {
                return Err(Error::InvalidParameter(format!("empty {name} range {lo}..{hi}")));
            }
        }
        if *self.m_range.start() < 2 {
            return Err(Error::InvalidParameter("m range must start at 2 or above".into()));
        }
        if let Some(r) = &self.ambient_range {
            if r.start() > r.end() {
                return Err(Error::InvalidParameter("empty N range".into()));
            }
        }
        Ok(())
    }

    fn keeps(&self, verdict: &Verdict) -> bool {
        self.behaviors.is_empty()
            || self.behaviors.iter().any(|&b| match b {
                Behavior::HalvesDegree => verdict.halves_degree(),
                other => verdict.has(other),
            })
    }
}

/// A configuration before any invariant has been computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub m: i64,
    /// Order of the leading cyclic factor.
    pub n: u64,
    pub k: i64,
    pub l: Option<i64>,
    pub s: i64,
    pub ci: CompleteIntersection,
    pub spec: CoverSpec,
}

/// A fully evaluated configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    pub m: i64,
    pub n: u64,
    pub k: i64,
    pub l: Option<i64>,
    pub s: i64,
    pub ci: CompleteIntersection,
    pub spec: CoverSpec,
    pub analysis: CoverAnalysis,
    pub verdict: Verdict,
    pub obstruction: CiObstruction,
}

impl Configuration {
    pub fn evaluate(m: i64, n: u64, k: i64, l: Option<i64>, ci: CompleteIntersection, spec: CoverSpec) -> Self {
        let verdict = classify(&ci, &spec);
        Self::with_verdict(Candidate { m, n, k, l, s: 0, ci, spec }, verdict)
    }

    fn with_verdict(c: Candidate, verdict: Verdict) -> Self {
        let analysis = analyze(&c.ci, &c.spec);
        let obstruction = obstruction_report(&c.ci, &c.spec);
        Configuration {
            m: c.m,
            n: c.n,
            k: c.k,
            l: c.l,
            s: analysis.subcanonicity,
            ci: c.ci,
            spec: c.spec,
            analysis,
            verdict,
            obstruction,
        }
    }
}

/// The covers a filter ranges over, as `(n, k, l, spec)` in lexicographic order.
fn covers(filter: &EnumFilter) -> Vec<(u64, i64, Option<i64>, CoverSpec)> {
    let mut out = Vec::new();
    match &filter.family {
        CoverFamily::SimpleCyclic => {
            for n in filter.n_range.clone() {
                for k in filter.k_range.clone() {
                    if let Ok(spec) = CoverSpec::simple_cyclic(n, k) {
                        out.push((n, k, None, spec));
                    }
                }
            }
        }
        CoverFamily::ZnZ2 => {
            for n in filter.n_range.clone() {
                for k in filter.k_range.clone() {
                    for l in filter.l_range.clone() {
                        if let Ok(spec) = CoverSpec::znz2(n, k, l) {
                            out.push((n, k, Some(l), spec));
                        }
                    }
                }
            }
        }
        CoverFamily::Fixed(factors) => {
            if let Ok(spec) = CoverSpec::cyclic_product(factors) {
                let (n, k) = factors[0];
                let l = factors.get(1).map(|f| f.1);
                out.push((n, k, l, spec));
            }
        }
    }
    if filter.require_complete_series {
        out.retain(|c| c.3.min_twist() >= 2);
    }
    out
}

/// Every candidate of the filter's ranges in the order
/// `(m, n, k, l, N, s, multidegree)`, without behaviour filtering.
pub fn candidates(filter: &EnumFilter) -> Result<impl Iterator<Item = Candidate>> {
    filter.validate()?;
    let covers = covers(filter);
    let s_range = filter.s_range.clone();
    let ambient_range = filter.ambient_range.clone();
    let dedupe = filter.dedupe;
    Ok(filter.m_range.clone().flat_map(move |m| {
        let covers = covers.clone();
        let s_range = s_range.clone();
        let ambient_range = ambient_range.clone();
        covers.into_iter().flat_map(move |(n, k, l, spec)| {
            let ram = spec.ram_twist();
            let s_range = s_range.clone();
            let hi = 2 * m + s_range.end() + 1 - ram;
            let (lo, hi) = match &ambient_range {
                Some(r) => ((m + 1).max(*r.start()), hi.min(*r.end())),
                None => (m + 1, hi),
            };
            (lo..=hi).flat_map(move |ambient| {
                let spec = spec.clone();
                s_range.clone().flat_map(move |s| {
                    let spec = spec.clone();
                    let delta = ambient + s + 1 - ram;
                    let r = (ambient - m) as usize;
                    multidegrees(delta, r, dedupe).filter_map(move |d| {
                        let ci = CompleteIntersection::new(ambient, &d).ok()?;
                        Some(Candidate { m, n, k, l, s, ci, spec: spec.clone() })
                    })
                })
            })
        })
    }))
}

/// Lazily evaluated configurations matching the filter.
pub fn enumerate_configs(filter: &EnumFilter) -> Result<impl Iterator<Item = Configuration>> {
    let stream = candidates(filter)?;
    let filter = filter.clone();
    Ok(stream.filter_map(move |c| {
        let verdict = classify(&c.ci, &c.spec);
        filter.keeps(&verdict).then(|| Configuration::with_verdict(c, verdict))
    }))
}

/// Multidegrees of length `r`, entries `≥ 2`, summing to `total`: sorted
/// tuples in lexicographic order, or with `dedupe = false` every distinct
/// ordering of each.
pub fn multidegrees(total: i64, r: usize, dedupe: bool) -> Box<dyn Iterator<Item = Vec<i64>>> {
    let sorted = SortedTuples::new(total, r);
    if dedupe {
        Box::new(sorted)
    } else {
        Box::new(sorted.flat_map(Permutations::new))
    }
}

/// Nondecreasing `r`-tuples with entries `≥ 2` and fixed sum.
struct SortedTuples {
    total: i64,
    next: Option<Vec<i64>>,
}

impl SortedTuples {
    fn new(total: i64, r: usize) -> Self {
        let next = if r == 0 || total < 2 * r as i64 {
            None
        } else {
            let mut v = vec![2; r];
            v[r - 1] = total - 2 * (r as i64 - 1);
            Some(v)
        };
        SortedTuples { total, next }
    }

    fn successor(&self, cur: &[i64]) -> Option<Vec<i64>> {
        let r = cur.len();
        let mut prefix_sum: i64 = cur[..r.saturating_sub(1)].iter().sum();
        for i in (0..r.saturating_sub(1)).rev() {
            prefix_sum -= cur[i];
            let v = cur[i] + 1;
            let tail = (r - i - 1) as i64;
            let rest = self.total - prefix_sum - v;
            if rest >= v * tail {
                let mut next = cur[..i].to_vec();
                next.extend(std::iter::repeat_n(v, r - i - 1));
                next.push(rest - v * (tail - 1));
                return Some(next);
            }
        }
        None
    }
}

impl Iterator for SortedTuples {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let cur = self.next.take()?;
        self.next = self.successor(&cur);
        Some(cur)
    }
}

/// Distinct permutations of a sorted tuple in lexicographic order.
struct Permutations {
    next: Option<Vec<i64>>,
}

impl Permutations {
    fn new(sorted: Vec<i64>) -> Self {
        Permutations { next: Some(sorted) }
    }
}

impl Iterator for Permutations {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let cur = self.next.take()?;
        let mut v = cur.clone();
        if let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) {
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
            v.swap(i - 1, j);
            v[i..].reverse();
            self.next = Some(v);
        }
        Some(cur)
    }
}

/// Whether `criterion` holds, judged as the corresponding bound lemma
/// phrases it. Halving uses the `Z_2` factor with twist `l` as inner cover.
pub fn criterion_holds(criterion: Criterion, c: &Candidate) -> bool {
    match criterion {
        Criterion::EmbeddingA => check_embedding_a(&c.ci, &c.spec).is_some(),
        Criterion::EmbeddingB => check_embedding_b(&c.ci, &c.spec).is_some(),
        Criterion::Birational => birational_twists(c.ci.degrees(), &c.spec.twists()).is_some(),
        Criterion::DegreePreserved => check_degree_preserved(&c.ci, &c.spec).is_some(),
        Criterion::Halving => match (&c.spec, c.l) {
            (CoverSpec::CyclicProduct { factors }, Some(l)) if factors.len() == 2 => {
                let outer = CoverSpec::simple_cyclic(factors[0].order, factors[0].twist);
                outer.is_ok_and(|o| {
                    matches!(check_halving(&c.ci, &o.twists(), l), Ok(Some(Certificate::Halving(_))))
                })
            }
            _ => false,
        },
    }
}

/// A configuration satisfying a criterion outside the lemma's box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub candidate: Candidate,
    pub bound: BoundBox,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BoundReport {
    /// Candidates examined.
    pub checked: u64,
    /// Candidates satisfying the criterion.
    pub satisfied: u64,
    pub violations: Vec<Violation>,
}

/// Sweeps `sample` and checks that every configuration satisfying
/// `criterion` lies inside its bound box.
pub fn verify_bound_lemma(criterion: Criterion, family: Family, sample: &EnumFilter) -> Result<BoundReport> {
    let mut report = BoundReport::default();
    for c in candidates(sample)? {
        report.checked += 1;
        if !criterion_holds(criterion, &c) {
            continue;
        }
        report.satisfied += 1;
        let bound = bound_box(criterion, family, c.m, c.n as i64, c.k, c.l, c.s)?;
        if !bound.contains(c.ci.ambient_dim(), c.s, c.n as i64, c.k, c.l) {
            report.violations.push(Violation { candidate: c, bound });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_tuples() {
        let all: Vec<_> = multidegrees(9, 3, true).collect();
        assert_eq!(all, vec![vec![2, 2, 5], vec![2, 3, 4], vec![3, 3, 3]]);
        assert_eq!(multidegrees(5, 3, true).count(), 0);
        assert_eq!(multidegrees(6, 3, true).collect::<Vec<_>>(), vec![vec![2, 2, 2]]);
        assert_eq!(multidegrees(7, 1, true).collect::<Vec<_>>(), vec![vec![7]]);
    }

    #[test]
    fn permutations() {
        let all: Vec<_> = multidegrees(8, 3, false).collect();
        assert_eq!(
            all,
            vec![vec![2, 2, 4], vec![2, 4, 2], vec![4, 2, 2], vec![2, 3, 3], vec![3, 2, 3], vec![3, 3, 2]]
        );
    }

    #[test]
    fn simple_cyclic_sweep_includes_table_rows() {
        let mut f = EnumFilter::new(CoverFamily::SimpleCyclic);
        f.n_range = 3..=3;
        f.s_range = 1..=1;
        f.m_range = 5..=7;
        f.behaviors = vec![Behavior::EmbeddingA];
        let rows: Vec<_> = enumerate_configs(&f).unwrap().map(|c| (c.m, c.ci)).collect();
        assert!(rows.contains(&(6, CompleteIntersection::new(8, &[2, 4]).unwrap())));
        assert!(rows.contains(&(7, CompleteIntersection::new(10, &[2, 2, 4]).unwrap())));
    }

    #[test]
    fn emitted_rows_are_subcanonical_and_ordered() {
        let mut f = EnumFilter::new(CoverFamily::ZnZ2);
        f.n_range = 2..=3;
        f.m_range = 2..=5;
        f.s_range = -1..=1;
        let rows: Vec<_> = enumerate_configs(&f).unwrap().collect();
        assert!(!rows.is_empty());
        for c in &rows {
            assert_eq!(c.analysis.subcanonicity, c.s);
        }
        let keys: Vec<_> = rows
            .iter()
            .map(|c| (c.m, c.n, c.k, c.l, c.ci.ambient_dim(), c.s, c.ci.degrees().to_vec()))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn invalid_filters() {
        let mut f = EnumFilter::new(CoverFamily::SimpleCyclic);
        f.s_range = 2..=1;
        assert!(candidates(&f).is_err());
        let mut f = EnumFilter::new(CoverFamily::SimpleCyclic);
        f.m_range = 1..=3;
        assert!(candidates(&f).is_err());
    }
}
