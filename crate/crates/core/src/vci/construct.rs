//! Explicit pairs of forms through a point set.

use std::collections::BTreeMap;

use crate::bipoly::{binary_roots, BiPoly};
use crate::error::{Error, Result};
use crate::geometry::{rulings_of, BiProjPoint, PointSet, Ruling};

use super::VciCertificate;

/// `f = ∏ ℓ_i` over the vertical rulings and `g = Σ (f / ℓ_i) g_i`, where
/// `g_i` is the product of the horizontal forms through the points on the
/// `i`-th ruling, padded to `pad` factors by repeating the last one.
fn sum_of_rulings(x: &PointSet, pad: usize) -> (BiPoly, BiPoly) {
    let field = x.field();
    let r = rulings_of(x);
    let lines: Vec<&BiPoly> = r.vertical.iter().map(|(l, _)| &l.form).collect();
    let f = BiPoly::product(field, lines.iter().copied());
    let mut g: Option<BiPoly> = None;
    for (i, (_, pts)) in r.vertical.iter().enumerate() {
        let mut factors: Vec<BiPoly> = pts
            .iter()
            .map(|p| Ruling::horizontal(p.y.clone()).form)
            .collect();
        let last = factors.last().expect("rulings are nonempty").clone();
        while factors.len() < pad {
            factors.push(last.clone());
        }
        let others = BiPoly::product(
            field,
            lines
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, l)| *l),
        );
        let term = &others * &BiPoly::product(field, &factors);
        g = Some(match g {
            None => term,
            Some(acc) => acc.try_add(&term).expect("equal bidegrees"),
        });
    }
    (f, g.expect("nonempty point set"))
}

/// Pair of forms for a set with the same number of points on every
/// vertical ruling, or on every horizontal one (handled by transposing).
pub fn construct_balanced_vci(x: &PointSet) -> Result<VciCertificate> {
    let r = rulings_of(x);
    let equal =
        |rs: &[(Ruling, Vec<BiProjPoint>)]| rs.iter().all(|(_, p)| p.len() == rs[0].1.len());
    if equal(&r.vertical) {
        let (f, g) = sum_of_rulings(x, r.n());
        let mut cert = VciCertificate::new(f, g, "BALANCED");
        cert.trace.push(format!(
            "{} vertical rulings with {} points each",
            r.vertical.len(),
            r.n()
        ));
        return Ok(cert);
    }
    if equal(&r.horizontal) {
        let t = x.transpose();
        let (f, g) = sum_of_rulings(&t, r.m());
        let mut cert = VciCertificate::new(f.transpose(), g.transpose(), "BALANCED");
        cert.trace.push(format!(
            "{} horizontal rulings with {} points each",
            r.horizontal.len(),
            r.m()
        ));
        return Ok(cert);
    }
    Err(Error::Precondition(
        "rulings carry different numbers of points in both directions".into(),
    ))
}

/// Multiplicity of each point of `V(f, g)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicityMap(pub BTreeMap<BiProjPoint, u32>);

impl MultiplicityMap {
    pub fn get(&self, p: &BiProjPoint) -> u32 {
        self.0.get(p).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.values().map(|&k| k as u64).sum()
    }

    pub fn support(&self) -> Vec<&BiProjPoint> {
        self.0.keys().collect()
    }
}

/// Forms whose common zeros are exactly `X` as a set; points on short
/// vertical rulings are counted with extra multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetTheoreticVci {
    pub f: BiPoly,
    pub g: BiPoly,
    pub multiplicities: MultiplicityMap,
}

impl SetTheoreticVci {
    /// Whether the support of `V(f, g)` computed ruling by ruling is `X`.
    pub fn support_matches(&self, x: &PointSet) -> bool {
        let support: Vec<&BiProjPoint> = self.multiplicities.support();
        support.len() == x.len() && support.iter().all(|p| x.contains(p))
    }
}

/// Every point set is cut out set-theoretically by `f = ∏ ℓ_i` and
/// `g = Σ (f/ℓ_i) g_i` with each `g_i` padded to `n` horizontal factors.
///
/// Multiplicities are read off the roots of `g` restricted to each vertical
/// ruling, where `f` vanishes identically.
pub fn construct_set_theoretic(x: &PointSet) -> SetTheoreticVci {
    let r = rulings_of(x);
    let (f, g) = sum_of_rulings(x, r.n());
    let mut mult = BTreeMap::new();
    for (ruling, _) in &r.vertical {
        let restricted = g.restrict_to_ruling(ruling);
        let roots = binary_roots(&restricted);
        for (y, k) in roots.roots {
            let p = BiProjPoint::new(ruling.coordinate.clone(), y).expect("same field");
            mult.insert(p, k);
        }
    }
    SetTheoreticVci {
        f,
        g,
        multiplicities: MultiplicityMap(mult),
    }
}
