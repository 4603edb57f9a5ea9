//! Combinatorial and number-theoretic obstructions.
//!
//! Rows are horizontal rulings (at most `m` points each), columns vertical
//! rulings (at most `n` points each). When `|X| < mn` any pair `(f, g)`
//! cutting out `X` can be ordered so that `f` has bidegree `(m, n)`; then `g`
//! has some bidegree `(c, d)` with `c < m`, `d < n`, contains exactly the
//! `s` rows with `m` points and the `t` columns with `n` points, and the
//! remaining factor of `g` has bidegree `(c − t, d − s)`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::mod_inverse;
use crate::geometry::{rulings_of, Axis, BiProjPoint, PointSet, Rulings};

use super::{Criterion, GapRuling, Refutation, Witness};

pub fn refute_cross(x: &PointSet) -> Option<Refutation> {
    let r = rulings_of(x);
    let (m, n) = (r.m(), r.n());
    if x.len() >= m * n {
        return None;
    }
    let row_count = |p: &BiProjPoint| {
        r.horizontal
            .iter()
            .find(|(l, _)| l.contains(p))
            .map_or(0, |h| h.1.len())
    };
    let col_count = |p: &BiProjPoint| {
        r.vertical
            .iter()
            .find(|(l, _)| l.contains(p))
            .map_or(0, |v| v.1.len())
    };
    let point = x
        .points()
        .iter()
        .find(|p| row_count(p) == m && col_count(p) == n)?;
    Some(Refutation {
        criterion: Criterion::Cross,
        witness: Witness::Cross {
            m,
            n,
            size: x.len(),
            point: point.clone(),
            row_count: m,
            col_count: n,
        },
    })
}

pub fn refute_gcd(x: &PointSet) -> Option<Refutation> {
    let r = rulings_of(x);
    let (m, n, size) = (r.m(), r.n(), x.len());
    (size < m * n && size % m.gcd(&n) != 0).then_some(Refutation {
        criterion: Criterion::Gcd,
        witness: Witness::Gcd { m, n, size },
    })
}

/// `c ≡ n⁻¹|X| (mod m)` and `d ≡ m⁻¹|X| (mod n)` with `0 ≤ c < m`,
/// `0 ≤ d < n`. Requires only `gcd(m, n) = 1`.
pub fn degree_candidates_for(size: usize, m: usize, n: usize) -> Result<(u32, u32)> {
    if m == 0 || n == 0 || m.gcd(&n) != 1 {
        return Err(Error::Precondition(format!("gcd({m},{n}) != 1")));
    }
    let solve = |modulus: usize, unit: usize| -> Result<u32> {
        if modulus == 1 {
            return Ok(0);
        }
        let inv = mod_inverse((unit % modulus) as i64, modulus as i64)?;
        Ok(((inv as usize * (size % modulus)) % modulus) as u32)
    };
    Ok((solve(m, n)?, solve(n, m)?))
}

/// The bidegree `(c, d)` forced on `g` when `|X| < mn` and `gcd(m, n) = 1`.
pub fn degree_candidates(x: &PointSet) -> Result<(u32, u32)> {
    let r = rulings_of(x);
    check_regime(x, &r)?;
    degree_candidates_for(x.len(), r.m(), r.n())
}

fn check_regime(x: &PointSet, r: &Rulings) -> Result<()> {
    let (m, n) = (r.m(), r.n());
    if x.len() >= m * n {
        return Err(Error::Precondition(format!(
            "|X| = {} is not below m*n = {}",
            x.len(),
            m * n
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::Precondition(format!("gcd({m},{n}) != 1")));
    }
    Ok(())
}

/// Applies, in order: `dm + cn ≠ |X|`; `d < s` or `c < t`; a non-maximal
/// ruling with more points off the forced lines than the residual factor of
/// `g` can vanish on without containing it.
///
/// The last test only counts points not already covered by the maximal
/// rulings of the other direction, since those lie on line components of
/// `g` anyway.
pub fn refute_number_theory(x: &PointSet) -> Result<Option<Refutation>> {
    let r = rulings_of(x);
    check_regime(x, &r)?;
    let (m, n, size) = (r.m(), r.n(), x.len());
    let (c, d) = degree_candidates_for(size, m, n)?;
    let s = r.horizontal.iter().filter(|h| h.1.len() == m).count();
    let t = r.vertical.iter().filter(|v| v.1.len() == n).count();
    let witness = |ruling| Witness::NumberTheory {
        m,
        n,
        size,
        c,
        d,
        s,
        t,
        ruling,
    };
    if d as usize * m + c as usize * n != size {
        return Ok(Some(Refutation {
            criterion: Criterion::DegreeCandidates,
            witness: witness(None),
        }));
    }
    if (d as usize) < s || (c as usize) < t {
        return Ok(Some(Refutation {
            criterion: Criterion::LineBudget,
            witness: witness(None),
        }));
    }
    let (px, py) = (c as usize - t, d as usize - s);
    let max_cols: Vec<_> = r
        .vertical
        .iter()
        .filter(|v| v.1.len() == n)
        .map(|v| &v.0)
        .collect();
    let max_rows: Vec<_> = r
        .horizontal
        .iter()
        .filter(|h| h.1.len() == m)
        .map(|h| &h.0)
        .collect();
    for (ruling, pts) in r.horizontal.iter().filter(|h| h.1.len() < m) {
        let uncovered = pts
            .iter()
            .filter(|p| !max_cols.iter().any(|l| l.contains(p)))
            .count();
        if uncovered > px {
            return Ok(Some(Refutation {
                criterion: Criterion::RulingGap,
                witness: witness(Some(GapRuling {
                    axis: Axis::Horizontal,
                    coordinate: ruling.coordinate.clone(),
                    count: pts.len(),
                    uncovered,
                })),
            }));
        }
    }
    for (ruling, pts) in r.vertical.iter().filter(|v| v.1.len() < n) {
        let uncovered = pts
            .iter()
            .filter(|p| !max_rows.iter().any(|l| l.contains(p)))
            .count();
        if uncovered > py {
            return Ok(Some(Refutation {
                criterion: Criterion::RulingGap,
                witness: witness(Some(GapRuling {
                    axis: Axis::Vertical,
                    coordinate: ruling.coordinate.clone(),
                    count: pts.len(),
                    uncovered,
                })),
            }));
        }
    }
    Ok(None)
}
