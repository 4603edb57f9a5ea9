//! Complete answers for Ferrers diagrams and for sets on at most three
//! rulings of one direction.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bipoly::{binary_roots, BiPoly};
use crate::error::{Error, Result};
use crate::geometry::{configuration_of, forms_through, rulings_of, BiProjPoint, PointSet, Ruling};

use super::construct::construct_balanced_vci;
use super::refute::refute_cross;
use super::{
    random_combination, Criterion, Refutation, VciCertificate, VciVerdict, VerifyMode, Witness,
};

/// A Ferrers diagram is a VCI exactly when it is a full rectangle, in which
/// case the `m` vertical and `n` horizontal lines form a complete
/// intersection.
pub fn classify_ferrers(x: &PointSet) -> Result<VciVerdict> {
    let config = configuration_of(x);
    if !config.is_ferrers() {
        return Err(Error::Precondition(
            "configuration is not a Ferrers diagram".into(),
        ));
    }
    if config.is_rectangle() {
        let r = rulings_of(x);
        let f = BiPoly::product(x.field(), r.vertical.iter().map(|(l, _)| &l.form));
        let g = BiPoly::product(x.field(), r.horizontal.iter().map(|(l, _)| &l.form));
        let mut cert = VciCertificate::new(f, g, "RECTANGLE");
        cert.trace
            .push(format!("{}x{} grid of points", r.m(), r.n()));
        return Ok(VciVerdict::Vci(cert));
    }
    let cross = refute_cross(x).expect("the corner of a non-rectangular Ferrers diagram");
    Ok(VciVerdict::NotVci(Refutation {
        criterion: Criterion::Ferrers,
        witness: cross.witness,
    }))
}

/// Sets whose points lie on at most three horizontal rulings, or at most
/// three vertical rulings (handled by transposing).
pub fn classify_few_rulings(x: &PointSet) -> Result<VciVerdict> {
    let r = rulings_of(x);
    if r.horizontal.len() <= 3 {
        return Ok(classify_rows(x));
    }
    if r.vertical.len() <= 3 {
        return Ok(classify_rows(&x.transpose()).transpose());
    }
    Err(Error::Precondition(format!(
        "points lie on {} horizontal and {} vertical rulings",
        r.horizontal.len(),
        r.vertical.len()
    )))
}

/// Classification when all points lie on at most three horizontal rulings.
fn classify_rows(x: &PointSet) -> VciVerdict {
    let field = x.field();
    let r = rulings_of(x);
    let rows = &r.horizontal;
    let balanced = || construct_balanced_vci(x).ok().map(VciVerdict::Vci);
    match rows.len() {
        1 => {
            let f = rows[0].0.form.clone();
            let g = BiPoly::product(field, r.vertical.iter().map(|(l, _)| &l.form));
            VciVerdict::Vci(VciCertificate::new(f, g, "SINGLE_RULING"))
        }
        2 => {
            if let Some(v) = balanced() {
                return v;
            }
            if rows[0].1.len() == rows[1].1.len() {
                return VciVerdict::Vci(paired_rows(x, &rows[0], &rows[1]));
            }
            VciVerdict::NotVci(cite_cross(x, Criterion::TwoRulings))
        }
        _ => {
            if let Some(v) = balanced() {
                return v;
            }
            if let Some(cert) = two_blocks(x) {
                return VciVerdict::Vci(cert);
            }
            if let Some(cert) = curve_and_lines(x) {
                return VciVerdict::Vci(cert);
            }
            if let Some(cross) = refute_cross(x) {
                return VciVerdict::NotVci(Refutation {
                    criterion: Criterion::ThreeRulings,
                    witness: cross.witness,
                });
            }
            let counts: Vec<usize> = rows.iter().map(|h| h.1.len()).collect();
            VciVerdict::NotVci(Refutation {
                criterion: Criterion::ThreeRulings,
                witness: Witness::Search {
                    detail: format!(
                        "three rows with {counts:?} points: rows and columns unbalanced, no two rows paired column by column, no (k,1)-curve through X for a repeated row count k"
                    ),
                },
            })
        }
    }
}

fn cite_cross(x: &PointSet, criterion: Criterion) -> Refutation {
    let cross = refute_cross(x).expect("unequal rows sharing a column");
    Refutation {
        criterion,
        witness: cross.witness,
    }
}

/// Two rows with `k` points each: the two row lines against a product of
/// `(1,1)`-forms `ℓ_{x(p)} h_2 − ℓ_{x(q)} h_1`, one through each pair
/// `p ∈ row 1`, `q ∈ row 2`.
fn paired_rows(
    x: &PointSet,
    a: &(Ruling, Vec<BiProjPoint>),
    b: &(Ruling, Vec<BiProjPoint>),
) -> VciCertificate {
    let field = x.field();
    let (h1, h2) = (&a.0.form, &b.0.form);
    let f = h1 * h2;
    let conics: Vec<BiPoly> =
        a.1.iter()
            .zip(&b.1)
            .map(|(p, q)| {
                let lp = Ruling::vertical(p.x.clone()).form;
                let lq = Ruling::vertical(q.x.clone()).form;
                (&lp * h2)
                    .try_sub(&(&lq * h1))
                    .expect("both of bidegree (1,1)")
            })
            .collect();
    let g = BiPoly::product(field, &conics);
    let mut cert = VciCertificate::new(f, g, "TWO_RULINGS");
    cert.trace.push(format!(
        "{} (1,1)-forms through paired points",
        conics.len()
    ));
    cert
}

/// Two rows occupying the same columns, no column with three points:
/// `f` = both paired rows times the vertical lines through the third row,
/// `g` = the paired columns times the third row.
fn two_blocks(x: &PointSet) -> Option<VciCertificate> {
    let r = rulings_of(x);
    let rows = &r.horizontal;
    if r.n() > 2 {
        return None;
    }
    for lone in 0..3 {
        let pair: Vec<usize> = (0..3).filter(|&i| i != lone).collect();
        let cols = |i: usize| {
            let mut v: Vec<_> = rows[i].1.iter().map(|p| p.x.clone()).collect();
            v.sort();
            v
        };
        if cols(pair[0]) != cols(pair[1]) {
            continue;
        }
        let mut f = &rows[pair[0]].0.form * &rows[pair[1]].0.form;
        for p in &rows[lone].1 {
            f = &f * &Ruling::vertical(p.x.clone()).form;
        }
        let mut g = rows[lone].0.form.clone();
        for c in cols(pair[0]) {
            g = &g * &Ruling::vertical(c).form;
        }
        let mut cert = VciCertificate::new(f, g, "THREE_RULINGS_BLOCKS");
        cert.trace
            .push("two rows paired column by column plus one free row".into());
        if let Some(c) = cert.verified(x, VerifyMode::Fast) {
            return Some(c);
        }
    }
    None
}

/// Two rows with `k` points each and all of `X` on a `(k,1)`-curve `C`:
/// `g` = both rows times the vertical lines through the third row. Each
/// such vertical line must meet `C` only at the point of `X` it carries.
fn curve_and_lines(x: &PointSet) -> Option<VciCertificate> {
    let field = x.field();
    let r = rulings_of(x);
    let rows = &r.horizontal;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        if rows[i].1.len() != rows[j].1.len() {
            continue;
        }
        let k = rows[i].1.len() as u32;
        let lone = 3 - i - j;
        let basis = forms_through(field, x.points(), (k, 1));
        if basis.is_empty() {
            continue;
        }
        let mut g = &rows[i].0.form * &rows[j].0.form;
        let verticals: Vec<Ruling> = rows[lone]
            .1
            .iter()
            .map(|p| Ruling::vertical(p.x.clone()))
            .collect();
        for v in &verticals {
            g = &g * &v.form;
        }
        for attempt in 0..4 {
            let curve = if attempt == 0 && basis.len() == 1 {
                basis[0].clone()
            } else {
                random_combination(&basis, &mut rng)?
            };
            let mut trace = vec![format!("(k,1)-curve with k = {k}: {curve}")];
            for v in &verticals {
                let restricted = curve.restrict_to_ruling(v);
                if restricted.is_zero() {
                    trace.push(format!("curve contains the line {v}"));
                    continue;
                }
                let roots = binary_roots(&restricted);
                let meets: Vec<String> = roots
                    .roots
                    .iter()
                    .map(|(y, e)| format!("y={y} (x{e})"))
                    .collect();
                trace.push(format!("curve meets {v} at {}", meets.join(", ")));
            }
            let mut cert = VciCertificate::new(curve, g.clone(), "THREE_RULINGS_CURVE");
            cert.trace = trace;
            if let Some(c) = cert.verified(x, VerifyMode::Fast) {
                return Some(c);
            }
        }
    }
    None
}
