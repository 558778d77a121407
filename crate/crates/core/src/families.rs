//! Generators for the named infinite families of examples.

use num_bigint::BigUint;

use crate::bounds::{bound_box, Criterion, Family};
use crate::ci::CompleteIntersection;
use crate::cover::CoverSpec;
use crate::enumerate::{candidates, criterion_holds, CoverFamily, EnumFilter};
use crate::enumerate::Configuration;
use crate::error::{Error, Result};

/// `Z_4`-covers of `CI(9k/2; k, 2k, 3k)` with twist `k`: codimension three,
/// `s = N − 1`, with `m/N → 1` as `k` grows.
pub fn family_codim3_limit1(k: i64) -> Result<Configuration> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k = {k} < 2")));
    }
    if (9 * k) % 2 != 0 {
        return Err(Error::BadParity(k));
    }
    let ambient = 9 * k / 2;
    let ci = CompleteIntersection::new(ambient, &[k, 2 * k, 3 * k])?;
    let spec = CoverSpec::simple_cyclic(4, k)?;
    Ok(Configuration::evaluate(ambient - 3, 4, k, None, ci, spec))
}

/// `Z_{(b−a)l+1}`-covers of `CI(bl; k, 2k, …, (b−a)l·k)` with twist `k`,
/// whose ratio `m/N` equals `a/b`.
pub fn family_rational_limit(a: i64, b: i64, k: i64, l: i64) -> Result<Configuration> {
    if !(0 < a && a < b) {
        return Err(Error::InvalidParameter(format!("need 0 < a < b, got a = {a}, b = {b}")));
    }
    if k < 2 || l < 2 {
        return Err(Error::InvalidParameter(format!("need k, l >= 2, got k = {k}, l = {l}")));
    }
    let r = (b - a) * l;
    let ambient = b * l;
    let degrees: Vec<i64> = (1..=r).map(|i| i * k).collect();
    let ci = CompleteIntersection::new(ambient, &degrees)?;
    let n = (r + 1) as u64;
    let spec = CoverSpec::simple_cyclic(n, k)?;
    let config = Configuration::evaluate(a * l, n, k, None, ci, spec);
    let closed_form = l * (b - a) * ((b - a) * l + 3) * k / 2 - b * l - 1;
    if closed_form != config.s {
        return Err(Error::ClosedFormMismatch { closed_form, computed: config.s });
    }
    Ok(config)
}

/// `Z_n`-covers of `CI(2m+n−1; (2(n−1))^{m+n−1})` with twist 2: embedded
/// deformations exist, and none of them is a complete intersection.
pub fn family_half_limit(n: i64, m: i64) -> Result<Configuration> {
    if n < 3 || m < 3 {
        return Err(Error::InvalidParameter(format!("need n, m >= 3, got n = {n}, m = {m}")));
    }
    let r = m + n - 1;
    let ci = CompleteIntersection::new(2 * m + n - 1, &vec![2 * (n - 1); r as usize])?;
    let spec = CoverSpec::simple_cyclic(n as u64, 2)?;
    Ok(Configuration::evaluate(m, n as u64, 2, None, ci, spec))
}

/// `(m+n)^{m+n−1} < n·(m+n−1)^{m+n−1}`, the integer form of
/// `(1 + 1/(m+n−1))^{m+n−1} < n` behind the half-limit obstruction.
pub fn half_limit_amgm_margin(n: i64, m: i64) -> bool {
    let e = (m + n - 1) as u32;
    BigUint::from((m + n) as u64).pow(e) < BigUint::from(n as u64) * BigUint::from((m + n - 1) as u64).pow(e)
}

/// All configurations with the given `(m, n, k, l, N, s)` on which
/// `criterion` holds, after checking that the parameters satisfy the
/// criterion's bound lemma.
#[allow(clippy::too_many_arguments)]
pub fn family_recipe(
    criterion: Criterion,
    family: Family,
    m: i64,
    n: i64,
    s: i64,
    ambient: i64,
    k: i64,
    l: Option<i64>,
) -> Result<Vec<Configuration>> {
    let bound = bound_box(criterion, family, m, n, k, l, s)?;
    if !bound.contains(ambient, s, n, k, l) {
        return Err(Error::OutOfBoundBox(format!(
            "{criterion} on {family} with m={m}, n={n}, k={k}, l={l:?}, N={ambient}, s={s}: \
             N must lie in [{}, {}] and s >= {}",
            bound.ambient_min, bound.ambient_max, bound.s_min
        )));
    }
    let cover_family = match family {
        Family::SimpleCyclic => CoverFamily::SimpleCyclic,
        Family::ZnZ2 => CoverFamily::ZnZ2,
    };
    let filter = EnumFilter {
        family: cover_family,
        n_range: n as u64..=n as u64,
        k_range: k..=k,
        l_range: l.unwrap_or(2)..=l.unwrap_or(2),
        m_range: m..=m,
        ambient_range: Some(ambient..=ambient),
        s_range: s..=s,
        behaviors: Vec::new(),
        require_complete_series: false,
        dedupe: true,
    };
    Ok(candidates(&filter)?
        .filter(|c| criterion_holds(criterion, c))
        .map(|c| Configuration::evaluate(c.m, c.n, c.k, c.l, c.ci, c.spec))
        .collect())
}
