//! Deformation-behaviour criteria for `φ = i ∘ π`, evaluated as
//! certificates that name the inequality and index that witnessed them.
//!
//! All indices are 1-based into the sorted multidegree `d_1 ≤ … ≤ d_r` and
//! sorted twists `k_1 ≤ … ≤ k_{n−1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::ci::{fmt_tuple, CompleteIntersection};
use crate::cover::{lattice_twists, CoverSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Behavior {
    DegreePreserved,
    Birational,
    EmbeddingA,
    EmbeddingB,
    HalvesDegree,
    HalvesDegreeSmoothImage,
}

impl Behavior {
    pub const ALL: [Behavior; 6] = [
        Behavior::DegreePreserved,
        Behavior::Birational,
        Behavior::EmbeddingA,
        Behavior::EmbeddingB,
        Behavior::HalvesDegree,
        Behavior::HalvesDegreeSmoothImage,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Behavior::DegreePreserved => "DegreePreserved",
            Behavior::Birational => "Birational",
            Behavior::EmbeddingA => "EmbeddingA",
            Behavior::EmbeddingB => "EmbeddingB",
            Behavior::HalvesDegree => "HalvesDegree",
            Behavior::HalvesDegreeSmoothImage => "HalvesDegreeSmoothImage",
        }
    }
}

/// How the image of a degree-halving deformation was shown to be smooth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmoothImage {
    /// `d_s = l`.
    DegreeMatchesInner { index: usize },
    /// `2r > N` and `d_{2r−N} ≥ l`.
    DoubleCoverEmbeds { index: usize, degree: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalvingCertificate {
    /// Position of the inner double-cover factor in a `CyclicProduct`, when
    /// the tower came from one.
    pub inner_factor: Option<usize>,
    pub inner_twist: i64,
    pub outer_twists: Vec<i64>,
    pub max_degree: i64,
    pub smooth_image: Option<SmoothImage>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// `d_r < k_1`.
    DegreePreserved { max_degree: i64, min_twist: i64 },
    /// `r ≥ ⌊n/2⌋` and `d_index ≥ k_{n−1}` with `index = r − ⌊n/2⌋ + 1`.
    Birational { index: usize, degree: i64, max_twist: i64 },
    /// `d_{l_j} = k_j` for strictly increasing `l_1 < … < l_{n−1}`.
    EmbeddingA { indices: Vec<usize> },
    /// `2r > N + n − 2` and `d_index ≥ k_{n−1}` with `index = 2r + 2 − n − N`.
    EmbeddingB { index: usize, degree: i64, max_twist: i64 },
    /// `k'_1 > max{2l, d_r}` and `d_r ≥ l` for a double cover under an
    /// `n/2`-cover.
    Halving(HalvingCertificate),
}

impl Certificate {
    pub fn behavior(&self) -> Behavior {
        match self {
            Certificate::DegreePreserved { .. } => Behavior::DegreePreserved,
            Certificate::Birational { .. } => Behavior::Birational,
            Certificate::EmbeddingA { .. } => Behavior::EmbeddingA,
            Certificate::EmbeddingB { .. } => Behavior::EmbeddingB,
            Certificate::Halving(h) if h.smooth_image.is_some() => {
                Behavior::HalvesDegreeSmoothImage
            }
            Certificate::Halving(_) => Behavior::HalvesDegree,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::DegreePreserved { max_degree, min_twist } => {
                write!(f, "DegreePreserved: d_r={max_degree} < k_1={min_twist}")
            }
            Certificate::Birational { index, degree, max_twist } => {
                write!(f, "Birational: d_{index}={degree} >= k_max={max_twist}")
            }
            Certificate::EmbeddingA { indices } => {
                write!(f, "EmbeddingA: d at indices ")?;
                let idx: Vec<i64> = indices.iter().map(|&i| i as i64).collect();
                fmt_tuple(f, &idx)?;
                write!(f, " equals the twists")
            }
            Certificate::EmbeddingB { index, degree, max_twist } => {
                write!(f, "EmbeddingB: d_{index}={degree} >= k_max={max_twist}")
            }
            Certificate::Halving(h) => {
                write!(
                    f,
                    "HalvesDegree: k'_1={} > max(2l={}, d_r={}) and d_r >= l={}",
                    h.outer_twists[0],
                    2 * h.inner_twist,
                    h.max_degree,
                    h.inner_twist
                )?;
                if let Some(i) = h.inner_factor {
                    write!(f, " [inner factor {}]", i + 1)?;
                }
                match &h.smooth_image {
                    Some(SmoothImage::DegreeMatchesInner { index }) => {
                        write!(f, "; smooth image: d_{index}=l")
                    }
                    Some(SmoothImage::DoubleCoverEmbeds { index, degree }) => {
                        write!(f, "; smooth image: d_{index}={degree} >= l")
                    }
                    None => Ok(()),
                }
            }
        }
    }
}

/// Strongest behaviour shown, ordered
/// `Embedding > Birational > HalvesDegree > DegreePreserved > Inconclusive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Summary {
    Inconclusive,
    DegreePreserved,
    HalvesDegree,
    Birational,
    Embedding,
}

impl Summary {
    pub fn name(self) -> &'static str {
        match self {
            Summary::Inconclusive => "Inconclusive",
            Summary::DegreePreserved => "DegreePreserved",
            Summary::HalvesDegree => "HalvesDegree",
            Summary::Birational => "Birational",
            Summary::Embedding => "Embedding",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CiStatus {
    /// Codimension two with an `EmbeddingA` certificate: every embedded
    /// smoothing is a complete intersection.
    KnownCiCodim2,
    /// The general embedded deformation is a complete intersection of this
    /// (sorted) multidegree.
    ExpectedCi(Vec<i64>),
    Unknown,
}

impl fmt::Display for CiStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CiStatus::KnownCiCodim2 => write!(f, "KnownCI_codim2"),
            CiStatus::ExpectedCi(d) => {
                write!(f, "ExpectedCI")?;
                fmt_tuple(f, d)
            }
            CiStatus::Unknown => write!(f, "Unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub certificates: Vec<Certificate>,
    pub summary: Summary,
    pub ci_status: CiStatus,
}

impl Verdict {
    pub fn behaviors(&self) -> Vec<Behavior> {
        let mut out: Vec<Behavior> = self.certificates.iter().map(Certificate::behavior).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn has(&self, behavior: Behavior) -> bool {
        self.certificates.iter().any(|c| c.behavior() == behavior)
    }

    /// Either halving flavour.
    pub fn halves_degree(&self) -> bool {
        self.certificates.iter().any(|c| matches!(c, Certificate::Halving(_)))
    }

    pub fn embeds(&self) -> bool {
        self.has(Behavior::EmbeddingA) || self.has(Behavior::EmbeddingB)
    }
}

pub fn check_degree_preserved(ci: &CompleteIntersection, spec: &CoverSpec) -> Option<Certificate> {
    check_degree_preserved_twists(ci.degrees(), &spec.twists())
}

fn check_degree_preserved_twists(degrees: &[i64], twists: &[i64]) -> Option<Certificate> {
    let max_degree = *degrees.last()?;
    let min_twist = *twists.first()?;
    (max_degree < min_twist).then_some(Certificate::DegreePreserved { max_degree, min_twist })
}

pub fn check_birational(ci: &CompleteIntersection, spec: &CoverSpec) -> Option<Certificate> {
    birational_twists(ci.degrees(), &spec.twists())
}

/// Birationality test against an explicit twist list.
pub fn birational_twists(degrees: &[i64], twists: &[i64]) -> Option<Certificate> {
    let n = twists.len() + 1;
    let half = n / 2;
    let r = degrees.len();
    if r < half || half == 0 {
        return None;
    }
    let index = r - half + 1;
    let degree = degrees[index - 1];
    let max_twist = *twists.last()?;
    (degree >= max_twist).then_some(Certificate::Birational { index, degree, max_twist })
}

pub fn check_embedding_a(ci: &CompleteIntersection, spec: &CoverSpec) -> Option<Certificate> {
    embedding_a_twists(ci.degrees(), &spec.twists())
}

/// Greedy matching of the sorted twists into the sorted degrees.
fn embedding_a_twists(degrees: &[i64], twists: &[i64]) -> Option<Certificate> {
    if degrees.len() < twists.len() {
        return None;
    }
    let mut indices = Vec::with_capacity(twists.len());
    let mut pos = 0;
    for &t in twists {
        while pos < degrees.len() && degrees[pos] < t {
            pos += 1;
        }
        if pos == degrees.len() || degrees[pos] != t {
            return None;
        }
        indices.push(pos + 1);
        pos += 1;
    }
    Some(Certificate::EmbeddingA { indices })
}

pub fn check_embedding_b(ci: &CompleteIntersection, spec: &CoverSpec) -> Option<Certificate> {
    embedding_b_twists(ci.ambient_dim(), ci.degrees(), &spec.twists())
}

fn embedding_b_twists(ambient: i64, degrees: &[i64], twists: &[i64]) -> Option<Certificate> {
    let n = twists.len() as i64 + 1;
    let r = degrees.len() as i64;
    if 2 * r <= ambient + n - 2 {
        return None;
    }
    let index = 2 * r + 2 - n - ambient;
    if index < 1 || index > r {
        return None;
    }
    let degree = degrees[index as usize - 1];
    let max_twist = *twists.last()?;
    (degree >= max_twist).then_some(Certificate::EmbeddingB {
        index: index as usize,
        degree,
        max_twist,
    })
}

/// Degree-halving test for a double cover with twist `inner_l` under an
/// `n/2`-cover whose trace-zero module is pulled back from
/// `⨁ O_Y(−k'_i)`, `outer_twists` being the `k'_i`.
pub fn check_halving(
    ci: &CompleteIntersection,
    outer_twists: &[i64],
    inner_l: i64,
) -> Result<Option<Certificate>> {
    if outer_twists.is_empty() {
        return Err(Error::NotATower(
            "the intermediate cover must have degree at least 2".into(),
        ));
    }
    if inner_l < 1 {
        return Err(Error::NotATower(format!("double-cover twist {inner_l} < 1")));
    }
    if outer_twists.iter().any(|&t| t < 1) {
        return Err(Error::NotATower("outer twists must be positive".into()));
    }
    let mut outer = outer_twists.to_vec();
    outer.sort_unstable();
    Ok(halving_sorted(ci, outer, inner_l, None))
}

fn halving_sorted(
    ci: &CompleteIntersection,
    outer_twists: Vec<i64>,
    l: i64,
    inner_factor: Option<usize>,
) -> Option<Certificate> {
    let degrees = ci.degrees();
    let max_degree = *degrees.last()?;
    if !(outer_twists[0] > (2 * l).max(max_degree) && max_degree >= l) {
        return None;
    }
    let r = ci.codim();
    let n = ci.ambient_dim();
    let smooth_image = if let Some(pos) = degrees.iter().position(|&d| d == l) {
        Some(SmoothImage::DegreeMatchesInner { index: pos + 1 })
    } else if 2 * r > n && degrees[(2 * r - n) as usize - 1] >= l {
        let index = (2 * r - n) as usize;
        Some(SmoothImage::DoubleCoverEmbeds { index, degree: degrees[index - 1] })
    } else {
        None
    };
    Some(Certificate::Halving(HalvingCertificate {
        inner_factor,
        inner_twist: l,
        outer_twists,
        max_degree,
        smooth_image,
    }))
}

/// Every tower decomposition of a cyclic product: each factor of order 2
/// taken as the inner double cover, the rest forming the outer cover.
fn product_halvings(ci: &CompleteIntersection, spec: &CoverSpec) -> Vec<Certificate> {
    let CoverSpec::CyclicProduct { factors } = spec else {
        return Vec::new();
    };
    if factors.len() < 2 {
        return Vec::new();
    }
    factors
        .iter()
        .enumerate()
        .filter(|(_, f)| f.order == 2)
        .filter_map(|(j, inner)| {
            let rest: Vec<_> = factors
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .map(|(_, f)| *f)
                .collect();
            halving_sorted(ci, lattice_twists(&rest), inner.twist, Some(j))
        })
        .collect()
}

/// Runs every criterion and aggregates the certificates.
pub fn classify(ci: &CompleteIntersection, spec: &CoverSpec) -> Verdict {
    let twists = spec.twists();
    let degrees = ci.degrees();
    let mut certificates = Vec::new();
    certificates.extend(check_degree_preserved_twists(degrees, &twists));
    certificates.extend(birational_twists(degrees, &twists));
    certificates.extend(embedding_a_twists(degrees, &twists));
    certificates.extend(embedding_b_twists(ci.ambient_dim(), degrees, &twists));
    certificates.extend(product_halvings(ci, spec));

    let summary = certificates
        .iter()
        .map(|c| match c.behavior() {
            Behavior::EmbeddingA | Behavior::EmbeddingB => Summary::Embedding,
            Behavior::Birational => Summary::Birational,
            Behavior::HalvesDegree | Behavior::HalvesDegreeSmoothImage => Summary::HalvesDegree,
            Behavior::DegreePreserved => Summary::DegreePreserved,
        })
        .max()
        .unwrap_or(Summary::Inconclusive);

    let embeds = summary == Summary::Embedding;
    let has_a = certificates.iter().any(|c| matches!(c, Certificate::EmbeddingA { .. }));
    let ci_status = if has_a && ci.codim() == 2 {
        CiStatus::KnownCiCodim2
    } else if embeds {
        expected_ci(degrees, spec).map_or(CiStatus::Unknown, CiStatus::ExpectedCi)
    } else {
        CiStatus::Unknown
    };
    Verdict { certificates, summary, ci_status }
}

/// Replaces one occurrence of each factor twist `κ_j` by `n_j κ_j`, if the
/// multidegree contains all of them (as a multiset).
fn expected_ci(degrees: &[i64], spec: &CoverSpec) -> Option<Vec<i64>> {
    let factors = spec.cyclic_factors()?;
    let mut remaining = degrees.to_vec();
    let mut replaced = Vec::with_capacity(factors.len());
    for f in &factors {
        let pos = remaining.iter().position(|&d| d == f.twist)?;
        remaining.remove(pos);
        replaced.push(f.order as i64 * f.twist);
    }
    remaining.extend(replaced);
    remaining.sort_unstable();
    Some(remaining)
}
