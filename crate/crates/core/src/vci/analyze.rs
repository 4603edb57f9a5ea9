//! The full decision pipeline.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bipoly::BiPoly;
use crate::geometry::{
    configuration_of, forms_through, rulings_of, Axis, BiProjPoint, PointSet, Ruling,
};

use super::classify::{classify_ferrers, classify_few_rulings};
use super::construct::construct_balanced_vci;
use super::refute::{refute_cross, refute_gcd, refute_number_theory};
use super::{
    bezout_count, random_combination, Bidegree, Criterion, Refutation, VciCertificate, VciVerdict,
    VerifyMode, Witness,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Largest total degree `a + b` tried for either form when `|X| ≥ mn`.
    pub degree_cap: u32,
    /// Random pairs tried per degree pair.
    pub trials: usize,
    pub seed: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            degree_cap: 8,
            trials: 3,
            seed: 0x5eed_0001,
        }
    }
}

pub fn analyze(x: &PointSet) -> VciVerdict {
    analyze_with(x, &AnalyzeOptions::default())
}

/// Balanced construction, then the classifiers for few rulings and Ferrers
/// diagrams, then the refuters, then a search for a pair of forms.
///
/// The search only returns pairs that pass verification. Below `|X| = mn`
/// the degrees and line components are forced, so a failed search is a
/// refutation. Above it every admissible degree pair up to the cap is
/// tried; when none works the forced line components of each failing pair
/// are examined to tell coordinate-dependent failures apart.
pub fn analyze_with(x: &PointSet, opts: &AnalyzeOptions) -> VciVerdict {
    if let Ok(cert) = construct_balanced_vci(x) {
        if let Some(cert) = cert.verified(x, VerifyMode::Fast) {
            return VciVerdict::Vci(cert);
        }
    }
    if let Ok(v) = classify_few_rulings(x) {
        return v;
    }
    if configuration_of(x).is_ferrers() {
        if let Ok(v) = classify_ferrers(x) {
            return v;
        }
    }
    if let Some(r) = refute_cross(x) {
        return VciVerdict::NotVci(r);
    }
    if let Some(r) = refute_gcd(x) {
        return VciVerdict::NotVci(r);
    }
    if let Ok(Some(r)) = refute_number_theory(x) {
        return VciVerdict::NotVci(r);
    }
    let r = rulings_of(x);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    if x.len() < r.m() * r.n() {
        forced_degree_search(x, opts, &mut rng)
    } else {
        degree_search(x, opts, &mut rng)
    }
}

fn try_pairs(
    x: &PointSet,
    fs: &[BiPoly],
    gs: &[BiPoly],
    make_g: &dyn Fn(BiPoly) -> BiPoly,
    trials: usize,
    rng: &mut ChaCha8Rng,
    source: &str,
) -> Option<VciCertificate> {
    for _ in 0..trials {
        let f = random_combination(fs, rng)?;
        let g = make_g(random_combination(gs, rng)?);
        let (df, dg) = (f.bidegree().unwrap(), g.bidegree().unwrap());
        let mut cert = VciCertificate::new(f, g, source);
        cert.trace.push(format!("degrees {df:?}, {dg:?}"));
        if let Some(c) = cert.verified(x, VerifyMode::Fast) {
            return Some(c);
        }
    }
    None
}

/// `|X| < mn`: `f` has bidegree `(m,n)`, `g` is the maximal rows and columns
/// times a residual form through the remaining points.
fn forced_degree_search(x: &PointSet, opts: &AnalyzeOptions, rng: &mut ChaCha8Rng) -> VciVerdict {
    let field = x.field();
    let r = rulings_of(x);
    let (m, n) = (r.m(), r.n());
    let fs = forms_through(field, x.points(), (m as u32, n as u32));
    let rows: Vec<&Ruling> = r
        .horizontal
        .iter()
        .filter(|h| h.1.len() == m)
        .map(|h| &h.0)
        .collect();
    let cols: Vec<&Ruling> = r
        .vertical
        .iter()
        .filter(|v| v.1.len() == n)
        .map(|v| &v.0)
        .collect();
    let lines = BiPoly::product(field, rows.iter().chain(&cols).map(|l| &l.form));
    let rest: Vec<BiProjPoint> = x
        .points()
        .iter()
        .filter(|p| !rows.iter().chain(&cols).any(|l| l.contains(p)))
        .cloned()
        .collect();
    let mut tried = Vec::new();
    for c in 0..m as u32 {
        for d in 0..n as u32 {
            if bezout_count((m as u32, n as u32), (c, d)) != x.len() as u64 {
                continue;
            }
            tried.push(format!("({c},{d})"));
            let (Some(pc), Some(pd)) = (
                c.checked_sub(cols.len() as u32),
                d.checked_sub(rows.len() as u32),
            ) else {
                continue;
            };
            let gs = forms_through(field, &rest, (pc, pd));
            let make_g = |g0: BiPoly| &lines * &g0;
            if let Some(cert) = try_pairs(
                x,
                &fs,
                &gs,
                &make_g,
                opts.trials,
                rng,
                "FORCED_DEGREE_SEARCH",
            ) {
                return VciVerdict::Vci(cert);
            }
        }
    }
    VciVerdict::NotVci(Refutation {
        criterion: Criterion::ForcedDegreeSearch,
        witness: Witness::Search {
            detail: format!(
                "f must have degree ({m},{n}); no verified pair with g of degree in [{}]",
                tried.join(", ")
            ),
        },
    })
}

/// Lines forced into every form of a bidegree through a point set: a
/// ruling with more points than the form's degree along it.
struct ForcedStructure {
    lines: Vec<Ruling>,
    /// `None` when the forced lines exceed the bidegree.
    residual: Option<Bidegree>,
    rest: Vec<BiProjPoint>,
}

fn forced_structure(points: &[BiProjPoint], deg: Bidegree) -> ForcedStructure {
    let (mut a, mut b) = (deg.0 as i64, deg.1 as i64);
    let mut rest = points.to_vec();
    let mut lines = Vec::new();
    loop {
        let mut new_lines = Vec::new();
        for axis in [Axis::Vertical, Axis::Horizontal] {
            let limit = if axis == Axis::Vertical { b } else { a };
            let mut seen: Vec<Ruling> = Vec::new();
            for p in &rest {
                let l = Ruling::through(p, axis);
                if seen.contains(&l) {
                    continue;
                }
                let k = rest.iter().filter(|q| l.contains(q)).count() as i64;
                if k > limit {
                    new_lines.push(l.clone());
                }
                seen.push(l);
            }
        }
        if new_lines.is_empty() {
            break;
        }
        for l in &new_lines {
            match l.axis {
                Axis::Vertical => a -= 1,
                Axis::Horizontal => b -= 1,
            }
        }
        rest.retain(|p| !new_lines.iter().any(|l| l.contains(p)));
        lines.extend(new_lines);
        if a < 0 || b < 0 {
            return ForcedStructure {
                lines,
                residual: None,
                rest,
            };
        }
    }
    ForcedStructure {
        lines,
        residual: Some((a as u32, b as u32)),
        rest,
    }
}

/// Explains an empty space of forms when special coordinates could fill
/// it: the forced lines fit, and the residual form faces at least as many
/// conditions as it has coefficients.
fn coordinate_note(field_points: &PointSet, deg: Bidegree) -> Option<String> {
    let fs = forced_structure(field_points.points(), deg);
    let (pa, pb) = fs.residual?;
    let dim = ((pa + 1) * (pb + 1)) as usize;
    if fs.rest.is_empty() || fs.rest.len() < dim {
        return None;
    }
    if !forms_through(field_points.field(), &fs.rest, (pa, pb)).is_empty() {
        return None;
    }
    let mut parts = Vec::new();
    for l in &fs.lines {
        let kind = match l.axis {
            Axis::Vertical => "vertical",
            Axis::Horizontal => "horizontal",
        };
        parts.push(format!("{deg:?}-form contains {kind} line {l}"));
    }
    parts.push(format!(
        "residual ({pa},{pb}) form through {} points: kernel empty",
        fs.rest.len()
    ));
    Some(parts.join("; "))
}

/// `|X| ≥ mn`: all degree pairs with `ad + bc = |X|`, every degree
/// positive (a zero degree means a union of parallel lines, which only
/// works for balanced sets), `max(a,c) ≥ m` and `max(b,d) ≥ n`.
fn degree_search(x: &PointSet, opts: &AnalyzeOptions, rng: &mut ChaCha8Rng) -> VciVerdict {
    let field = x.field();
    let r = rulings_of(x);
    let (m, n, size) = (r.m() as u32, r.n() as u32, x.len() as u32);
    let mut pairs = Vec::new();
    for a in 1..=size {
        for b in 1..=size {
            for c in 1..=size {
                for d in 1..=size {
                    if (a, b) > (c, d)
                        || bezout_count((a, b), (c, d)) != size as u64
                        || a.max(c) < m
                        || b.max(d) < n
                    {
                        continue;
                    }
                    pairs.push(((a, b), (c, d)));
                }
            }
        }
    }
    let mut skipped = Vec::new();
    let mut notes = Vec::new();
    for &(df, dg) in &pairs {
        if df.0 + df.1 > opts.degree_cap || dg.0 + dg.1 > opts.degree_cap {
            skipped.push(format!("{df:?},{dg:?}"));
            continue;
        }
        let fs = forms_through(field, x.points(), df);
        let gs = forms_through(field, x.points(), dg);
        if !fs.is_empty() && !gs.is_empty() {
            if let Some(cert) = try_pairs(x, &fs, &gs, &|g| g, opts.trials, rng, "DEGREE_SEARCH") {
                return VciVerdict::Vci(cert);
            }
            continue;
        }
        let mut reasons = Vec::new();
        let mut explained = true;
        for (deg, space) in [(df, &fs), (dg, &gs)] {
            if space.is_empty() {
                match coordinate_note(x, deg) {
                    Some(note) => reasons.push(note),
                    None => explained = false,
                }
            }
        }
        if explained {
            notes.push(format!(
                "forced degrees ({},{}),({},{}); {}",
                df.0,
                df.1,
                dg.0,
                dg.1,
                reasons.join("; ")
            ));
        }
    }
    if !notes.is_empty() {
        return VciVerdict::CoordinateDependent(notes.join(" | "));
    }
    if !skipped.is_empty() {
        return VciVerdict::Undecided(format!(
            "degree pairs beyond total degree {}: {}",
            opts.degree_cap,
            skipped.join(" ")
        ));
    }
    VciVerdict::NotVci(Refutation {
        criterion: Criterion::DegreeSearch,
        witness: Witness::Search {
            detail: format!(
                "no verified pair among {} admissible degree pairs",
                pairs.len()
            ),
        },
    })
}
