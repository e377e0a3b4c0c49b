//! Cross-module consistency suite behind `boolinv selftest`.

use crate::boolean::{boolean_sexpr_builder, connected_components, is_boolean_by, Method};
use crate::bruhat::{ideal, ideal_by_filter, is_boolean_lattice, product_decomposition_check};
use crate::counting::{cross_validate, ValidationReport};
use crate::enumerate::{involutions, signed_involutions};
use crate::error::{Error, Result};
use crate::motzkin::{alpha, psi, psi_inverse};
use crate::sexpr::{eval_sexpr, rank_profile};
use crate::signed::{is_boolean_signed_by, SignedMethod};

pub const SELFTEST_MAX_N: usize = 9;
const POSET_MAX_N: usize = 7;
const IDEAL_FILTER_MAX_N: usize = 6;
const SIGNED_MAX_N: usize = 4;
const COUNTING_MAX_N: usize = 10;

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut check: impl FnMut(&T) -> Result<Option<String>>,
) -> Result<Option<String>> {
    for item in items {
        if let Some(msg) = check(&item)? {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

fn all_involutions(max_n: usize) -> Result<Vec<crate::perm::Involution>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(involutions(n)?);
    }
    Ok(out)
}

/// Runs every invariant on all involutions with `n <= max_n`; the costlier
/// checks stop at smaller sizes.
pub fn selftest(max_n: usize, jobs: usize) -> Result<ValidationReport> {
    if max_n > SELFTEST_MAX_N {
        return Err(Error::Resource(format!(
            "selftest limited to n <= {SELFTEST_MAX_N}, got {max_n}"
        )));
    }
    let all = all_involutions(max_n)?;
    let mut report = ValidationReport {
        n_max: max_n,
        checks: Vec::new(),
    };

    let agree = first_failure(&all, |w| {
        let methods: &[Method] = if w.n() <= POSET_MAX_N {
            &[
                Method::Patterns,
                Method::LongCrossing,
                Method::Sexpr,
                Method::Poset,
            ]
        } else {
            &[Method::Patterns, Method::LongCrossing, Method::Sexpr]
        };
        let verdicts = methods
            .iter()
            .map(|&m| is_boolean_by(w, m))
            .collect::<Result<Vec<_>>>()?;
        Ok((!verdicts.iter().all(|&b| b == verdicts[0]))
            .then(|| format!("{w}: {methods:?} -> {verdicts:?}")))
    })?;
    report.push("Boolean criteria agree", agree);

    let builder = first_failure(&all, |w| {
        if !is_boolean_by(w, Method::LongCrossing)? {
            return Ok(None);
        }
        let e = boolean_sexpr_builder(w)?;
        let ok = !e.has_repeated_letter()
            && e.len() == rank_profile(w).rank
            && eval_sexpr(&e, w.n())? == **w;
        Ok((!ok).then(|| format!("{w}: built {e}")))
    })?;
    report.push("repeat-free expression evaluates back", builder);

    let components = first_failure(&all, |w| {
        let boolean = is_boolean_by(w, Method::LongCrossing)?;
        let parts = connected_components(w).components;
        let mut each = true;
        for &(a, b) in &parts {
            let d: Vec<usize> = (a..=b).collect();
            let piece = crate::boolean::restrict(w, &d)?;
            let piece = crate::perm::Involution::try_from(piece)?;
            each &= is_boolean_by(&piece, Method::LongCrossing)?;
        }
        Ok((each != boolean).then(|| format!("{w}: components {parts:?}")))
    })?;
    report.push("Boolean iff every component is", components);

    let motzkin = first_failure(&all, |w| {
        if !is_boolean_by(w, Method::LongCrossing)? {
            return Ok(None);
        }
        let p = psi(w);
        let prof = rank_profile(w);
        let ok = psi_inverse(&p)? == **w
            && prof.rank == w.n() - alpha(&p)
            && prof.coxeter_length == 2 * prof.rank - w.excedance_count();
        Ok((!ok).then(|| format!("{w} -> {p}")))
    })?;
    report.push("psi transports rank and length", motzkin);

    let small: Vec<_> = all.iter().filter(|w| w.n() <= IDEAL_FILTER_MAX_N).collect();
    let ideals = first_failure(&small, |w| {
        let p = ideal(w)?;
        let mut filtered = ideal_by_filter(w)?;
        filtered.sort();
        let mut generated = p.elements().to_vec();
        generated.sort();
        if generated != filtered {
            return Ok(Some(format!("{w}: subword and filter ideals differ")));
        }
        let graded = (0..p.len())
            .all(|u| (0..p.len()).all(|v| u == v || !p.leq(u, v) || p.rank_of(u) < p.rank_of(v)));
        let boolean = is_boolean_lattice(&p);
        let size_ok = !boolean || p.len() == 1usize << rank_profile(w).rank;
        let product_ok = product_decomposition_check(w)?;
        Ok((!(graded && size_ok && product_ok))
            .then(|| format!("{w}: graded={graded}, size={size_ok}, product={product_ok}")))
    })?;
    report.push("ideal structure", ideals);

    let mut signed_failure = None;
    for n in 1..=max_n.min(SIGNED_MAX_N) {
        for w in signed_involutions(n)? {
            let phi = is_boolean_signed_by(&w, SignedMethod::Phi)?;
            let pat = is_boolean_signed_by(&w, SignedMethod::SignedPatterns)?;
            let sx = is_boolean_signed_by(&w, SignedMethod::Sexpr)?;
            if phi != pat || phi != sx {
                signed_failure = Some(format!("{w}: phi={phi}, patterns={pat}, sexpr={sx}"));
                break;
            }
        }
        if signed_failure.is_some() {
            break;
        }
    }
    report.push("signed criteria agree", signed_failure);

    let counts = cross_validate(max_n.min(COUNTING_MAX_N), jobs)?;
    report.checks.extend(counts.checks);
    Ok(report)
}
