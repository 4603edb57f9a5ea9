#![allow(dead_code)]

use rand::Rng;
use vci_core::{BiPoly, BiProjPoint, Field, IntPoint, PointSet, ProjPoint, Scalar};

pub const Q: Field = Field::Rationals;
pub const FP: Field = Field::Prime(32003);

pub fn poly(field: Field, terms: &[(i64, [u32; 4])]) -> BiPoly {
    BiPoly::from_int_terms(field, terms).unwrap()
}

pub fn points(field: Field, pts: &[IntPoint]) -> PointSet {
    PointSet::from_ints(field, pts).unwrap()
}

/// Three points on two rows: two on y=[0:1], one on y=[1:1].
pub fn three_points() -> PointSet {
    points(Q, &[((1, 0), (0, 1)), ((1, 1), (0, 1)), ((0, 1), (1, 1))])
}

/// `f = x1 y1` and `g = x0 (x1 − x0)(y1 − y0)`.
pub fn three_point_pair() -> (BiPoly, BiPoly) {
    let f = poly(Q, &[(1, [0, 1, 0, 1])]);
    let g = &(&poly(Q, &[(1, [1, 0, 0, 0])]) * &poly(Q, &[(1, [0, 1, 0, 0]), (-1, [1, 0, 0, 0])]))
        * &poly(Q, &[(1, [0, 0, 0, 1]), (-1, [0, 0, 1, 0])]);
    (f, g)
}

/// The common zeros of [`three_point_pair`]: [`three_points`] with both
/// coordinate pairs read in reverse order.
pub fn three_points_cut() -> PointSet {
    points(Q, &[((0, 1), (1, 0)), ((1, 1), (1, 0)), ((1, 0), (1, 1))])
}

/// Four points `([k:1],[1:k])` on the hyperbola `x0 y0 = x1 y1` plus two
/// points on the vertical line `x = [1:0]`. With `moved`, the point
/// `([4:1],[1:4])` becomes `([4:1],[1:5])`.
pub fn hyperbola_six(moved: bool) -> PointSet {
    let last = if moved { 5 } else { 4 };
    points(
        Q,
        &[
            ((1, 1), (1, 1)),
            ((2, 1), (1, 2)),
            ((3, 1), (1, 3)),
            ((4, 1), (1, last)),
            ((1, 0), (1, 1)),
            ((1, 0), (1, 0)),
        ],
    )
}

/// `f = x0 x1 y0 − x1² y1` and the companion `(2,2)`-form for [`hyperbola_six`].
pub fn hyperbola_pair() -> (BiPoly, BiPoly) {
    let f = poly(Q, &[(1, [1, 1, 1, 0]), (-1, [0, 2, 0, 1])]);
    let g = poly(
        Q,
        &[
            (24, [0, 2, 2, 0]),
            (-1, [2, 0, 1, 1]),
            (-50, [0, 2, 1, 1]),
            (1, [2, 0, 0, 2]),
            (-9, [1, 1, 0, 2]),
            (35, [0, 2, 0, 2]),
        ],
    );
    (f, g)
}

/// Staircase of six points on the columns x = 0, 1, 2 with 1, 2, 3 points.
pub fn staircase_six() -> PointSet {
    points(
        Q,
        &[
            ((0, 1), (0, 1)),
            ((1, 1), (0, 1)),
            ((1, 1), (1, 1)),
            ((2, 1), (0, 1)),
            ((2, 1), (1, 1)),
            ((2, 1), (2, 1)),
        ],
    )
}

/// Seven points: rows with 3, 2, 1, 1 points and columns with 2, 2, 1, 1, 1.
pub fn seven_points() -> PointSet {
    points(
        Q,
        &[
            ((1, 1), (1, 1)),
            ((2, 1), (1, 1)),
            ((3, 1), (1, 1)),
            ((1, 1), (2, 1)),
            ((4, 1), (2, 1)),
            ((2, 1), (3, 1)),
            ((5, 1), (4, 1)),
        ],
    )
}

/// `count` distinct random field elements.
pub fn distinct_scalars<R: Rng>(field: Field, count: usize, rng: &mut R) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::new();
    while out.len() < count {
        let s = field.random(rng);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Points at grid cells `(column, row)` with random distinct coordinates
/// per column and per row.
pub fn realize_cells<R: Rng>(field: Field, cells: &[(usize, usize)], rng: &mut R) -> PointSet {
    let cols = cells.iter().map(|c| c.0).max().unwrap() + 1;
    let rows = cells.iter().map(|c| c.1).max().unwrap() + 1;
    let xs = distinct_scalars(field, cols, rng);
    let ys = distinct_scalars(field, rows, rng);
    let pts = cells
        .iter()
        .map(|&(c, r)| {
            BiProjPoint::new(
                ProjPoint::affine(xs[c].clone()),
                ProjPoint::affine(ys[r].clone()),
            )
            .unwrap()
        })
        .collect();
    PointSet::new(field, pts).unwrap()
}

/// All nonempty subsets of an `cols × rows` grid with at most `max_size`
/// cells, as lists of `(column, row)`.
pub fn grid_subsets(cols: usize, rows: usize, max_size: usize) -> Vec<Vec<(usize, usize)>> {
    let cells: Vec<(usize, usize)> = (0..cols)
        .flat_map(|c| (0..rows).map(move |r| (c, r)))
        .collect();
    let mut out = Vec::new();
    for mask in 1u32..(1 << cells.len()) {
        if mask.count_ones() as usize > max_size {
            continue;
        }
        out.push(
            cells
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, c)| *c)
                .collect(),
        );
    }
    out
}

/// Random balanced set: `k` vertical rulings with `n` points each.
pub fn random_balanced<R: Rng>(field: Field, k: usize, n: usize, rng: &mut R) -> PointSet {
    let xs = distinct_scalars(field, k, rng);
    let mut pts = Vec::new();
    for x in xs {
        for y in distinct_scalars(field, n, rng) {
            pts.push(BiProjPoint::new(ProjPoint::affine(x.clone()), ProjPoint::affine(y)).unwrap());
        }
    }
    PointSet::new(field, pts).unwrap()
}
