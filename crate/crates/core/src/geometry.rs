//! Points of P¹×P¹, rulings, grid configurations, cross ratios, vanishing
//! ideals and interpolation of forms through points.

use std::collections::BTreeMap;
use std::fmt;

use crate::bipoly::{BiMonomial, BiPoly};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::groebner::{intersect, Ideal};
use crate::linalg::Matrix;

/// A point of P¹ in canonical form: `[α:1]`, or `[1:0]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    coords: [Scalar; 2],
}

impl ProjPoint {
    pub fn new(a: Scalar, b: Scalar) -> Result<ProjPoint> {
        if a.field() != b.field() {
            return Err(Error::FieldMismatch(
                a.field().to_string(),
                b.field().to_string(),
            ));
        }
        if b.is_zero() {
            if a.is_zero() {
                return Err(Error::InvalidPoint("[0:0]".into()));
            }
            return Ok(ProjPoint::infinity(a.field()));
        }
        Ok(ProjPoint::affine(a.try_div(&b)?))
    }

    pub fn from_ints(field: Field, a: i64, b: i64) -> Result<ProjPoint> {
        ProjPoint::new(Scalar::from_i64(field, a), Scalar::from_i64(field, b))
    }

    /// `[α:1]`.
    pub fn affine(alpha: Scalar) -> ProjPoint {
        let one = alpha.field().one();
        ProjPoint {
            coords: [alpha, one],
        }
    }

    /// `[1:0]`.
    pub fn infinity(field: Field) -> ProjPoint {
        ProjPoint {
            coords: [field.one(), field.zero()],
        }
    }

    pub fn coords(&self) -> [Scalar; 2] {
        self.coords.clone()
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn is_infinity(&self) -> bool {
        self.coords[1].is_zero()
    }

    /// The affine coordinate `α` of `[α:1]`.
    pub fn affine_value(&self) -> Option<&Scalar> {
        (!self.is_infinity()).then_some(&self.coords[0])
    }

    /// Monic linear form `a'·u0 − a·u1` vanishing at `[a:a']`, in the
    /// variables `(x0, x1)` or `(y0, y1)`.
    fn linear_form(&self, in_x: bool) -> BiPoly {
        let f = self.field();
        let (u0, u1) = if in_x {
            (BiPoly::x0(f), BiPoly::x1(f))
        } else {
            (BiPoly::y0(f), BiPoly::y1(f))
        };
        let [a, b] = self.coords();
        u0.scale(&b).try_sub(&u1.scale(&a)).unwrap().monic()
    }

    fn transform(&self, m: &[[Scalar; 2]; 2]) -> Result<ProjPoint> {
        let [a, b] = &self.coords;
        ProjPoint::new(
            &(&m[0][0] * a) + &(&m[0][1] * b),
            &(&m[1][0] * a) + &(&m[1][1] * b),
        )
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.coords[0], self.coords[1])
    }
}

/// A point `(x, y)` of P¹×P¹.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiProjPoint {
    pub x: ProjPoint,
    pub y: ProjPoint,
}

impl BiProjPoint {
    pub fn new(x: ProjPoint, y: ProjPoint) -> Result<BiProjPoint> {
        if x.field() != y.field() {
            return Err(Error::FieldMismatch(
                x.field().to_string(),
                y.field().to_string(),
            ));
        }
        Ok(BiProjPoint { x, y })
    }

    pub fn from_ints(field: Field, x: (i64, i64), y: (i64, i64)) -> Result<BiProjPoint> {
        BiProjPoint::new(
            ProjPoint::from_ints(field, x.0, x.1)?,
            ProjPoint::from_ints(field, y.0, y.1)?,
        )
    }

    /// `(x0, x1, y0, y1)` of the canonical representative.
    pub fn coords(&self) -> [Scalar; 4] {
        let [a, b] = self.x.coords();
        let [c, d] = self.y.coords();
        [a, b, c, d]
    }

    pub fn field(&self) -> Field {
        self.x.field()
    }

    pub fn transpose(&self) -> BiProjPoint {
        BiProjPoint {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// The ideal `⟨ℓ_x, ℓ_y⟩` of the point.
    pub fn ideal(&self) -> Ideal {
        Ideal::new(
            self.field(),
            vec![self.x.linear_form(true), self.y.linear_form(false)],
        )
        .unwrap()
    }
}

impl fmt::Display for BiProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `([x0:x1], [y0:y1])` with integer coordinates.
pub type IntPoint = ((i64, i64), (i64, i64));

/// A nonempty finite set of distinct points, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSet {
    field: Field,
    points: Vec<BiProjPoint>,
}

impl PointSet {
    pub fn new(field: Field, mut points: Vec<BiProjPoint>) -> Result<PointSet> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if let Some(p) = points.iter().find(|p| p.field() != field) {
            return Err(Error::FieldMismatch(
                field.to_string(),
                p.field().to_string(),
            ));
        }
        points.sort();
        if let Some(w) = points.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoint(w[0].to_string()));
        }
        Ok(PointSet { field, points })
    }

    pub fn from_ints(field: Field, pts: &[IntPoint]) -> Result<PointSet> {
        let points = pts
            .iter()
            .map(|&(x, y)| BiProjPoint::from_ints(field, x, y))
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(field, points)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn points(&self) -> &[BiProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: &BiProjPoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Swaps the two factors of every point.
    pub fn transpose(&self) -> PointSet {
        PointSet::new(
            self.field,
            self.points.iter().map(|p| p.transpose()).collect(),
        )
        .unwrap()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Vertical rulings fix the first coordinate, horizontal ones the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Vertical,
    Horizontal,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::Vertical => Axis::Horizontal,
            Axis::Horizontal => Axis::Vertical,
        }
    }
}

/// A line `{x = c}` (vertical) or `{y = c}` (horizontal) with its monic
/// defining form of bidegree `(1,0)` or `(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ruling {
    pub axis: Axis,
    pub coordinate: ProjPoint,
    pub form: BiPoly,
}

impl Ruling {
    pub fn vertical(coordinate: ProjPoint) -> Ruling {
        let form = coordinate.linear_form(true);
        Ruling {
            axis: Axis::Vertical,
            coordinate,
            form,
        }
    }

    pub fn horizontal(coordinate: ProjPoint) -> Ruling {
        let form = coordinate.linear_form(false);
        Ruling {
            axis: Axis::Horizontal,
            coordinate,
            form,
        }
    }

    /// The vertical or horizontal ruling through `p`.
    pub fn through(p: &BiProjPoint, axis: Axis) -> Ruling {
        match axis {
            Axis::Vertical => Ruling::vertical(p.x.clone()),
            Axis::Horizontal => Ruling::horizontal(p.y.clone()),
        }
    }

    pub fn contains(&self, p: &BiProjPoint) -> bool {
        match self.axis {
            Axis::Vertical => p.x == self.coordinate,
            Axis::Horizontal => p.y == self.coordinate,
        }
    }
}

impl fmt::Display for Ruling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.axis {
            Axis::Vertical => write!(f, "x={}", self.coordinate),
            Axis::Horizontal => write!(f, "y={}", self.coordinate),
        }
    }
}

/// Points of `X` grouped by ruling, each list sorted by decreasing size and
/// then by coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rulings {
    pub vertical: Vec<(Ruling, Vec<BiProjPoint>)>,
    pub horizontal: Vec<(Ruling, Vec<BiProjPoint>)>,
}

impl Rulings {
    pub fn of_axis(&self, axis: Axis) -> &[(Ruling, Vec<BiProjPoint>)] {
        match axis {
            Axis::Vertical => &self.vertical,
            Axis::Horizontal => &self.horizontal,
        }
    }

    /// Largest number of points on a horizontal ruling.
    pub fn m(&self) -> usize {
        self.horizontal.first().map_or(0, |r| r.1.len())
    }

    /// Largest number of points on a vertical ruling.
    pub fn n(&self) -> usize {
        self.vertical.first().map_or(0, |r| r.1.len())
    }
}

pub fn rulings_of(x: &PointSet) -> Rulings {
    let group = |axis: Axis| {
        let mut map: BTreeMap<ProjPoint, Vec<BiProjPoint>> = BTreeMap::new();
        for p in x.points() {
            let key = match axis {
                Axis::Vertical => p.x.clone(),
                Axis::Horizontal => p.y.clone(),
            };
            map.entry(key).or_default().push(p.clone());
        }
        let mut out: Vec<(Ruling, Vec<BiProjPoint>)> = map
            .into_iter()
            .map(|(c, pts)| {
                let r = match axis {
                    Axis::Vertical => Ruling::vertical(c),
                    Axis::Horizontal => Ruling::horizontal(c),
                };
                (r, pts)
            })
            .collect();
        out.sort_by(|a, b| {
            b.1.len()
                .cmp(&a.1.len())
                .then_with(|| a.0.coordinate.cmp(&b.0.coordinate))
        });
        out
    };
    Rulings {
        vertical: group(Axis::Vertical),
        horizontal: group(Axis::Horizontal),
    }
}

/// The combinatorial type of a point set: which grid cells of its rulings
/// are occupied. Rows are horizontal rulings, columns vertical ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub row_counts: Vec<usize>,
    pub col_counts: Vec<usize>,
    /// `incidence[r][c]`: whether row `r` meets column `c` in a point.
    pub incidence: Vec<Vec<bool>>,
    pub m: usize,
    pub n: usize,
}

/// Above this many candidate orderings the canonical search gives up and
/// returns the first candidate, which is deterministic but not guaranteed
/// to be relabeling invariant.
const CANONICAL_SEARCH_LIMIT: u64 = 200_000;

impl Configuration {
    /// Canonical configuration of an arbitrary incidence matrix. Empty rows
    /// and columns are discarded.
    pub fn from_incidence(incidence: &[Vec<bool>]) -> Configuration {
        let cols = incidence.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<bool>> = incidence
            .iter()
            .filter(|r| r.iter().any(|&b| b))
            .cloned()
            .collect();
        let keep: Vec<usize> = (0..cols).filter(|&c| rows.iter().any(|r| r[c])).collect();
        let trimmed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| keep.iter().map(|&c| r[c]).collect())
            .collect();
        let incidence = canonical_incidence(&trimmed);
        let row_counts: Vec<usize> = incidence
            .iter()
            .map(|r| r.iter().filter(|&&b| b).count())
            .collect();
        let col_counts: Vec<usize> = (0..incidence.first().map_or(0, |r| r.len()))
            .map(|c| incidence.iter().filter(|r| r[c]).count())
            .collect();
        Configuration {
            m: row_counts.first().copied().unwrap_or(0),
            n: col_counts.first().copied().unwrap_or(0),
            row_counts,
            col_counts,
            incidence,
        }
    }

    pub fn size(&self) -> usize {
        self.row_counts.iter().sum()
    }

    /// Rows as strings of `1`/`0` joined by `/`, e.g. `110/011`.
    pub fn id(&self) -> String {
        self.incidence
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&b| if b { '1' } else { '0' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("/")
    }

    /// Whether the column sets of the rows are totally ordered by inclusion.
    pub fn is_ferrers(&self) -> bool {
        let subset = |a: &[bool], b: &[bool]| a.iter().zip(b).all(|(&x, &y)| !x || y);
        self.incidence.iter().enumerate().all(|(i, a)| {
            self.incidence[i + 1..]
                .iter()
                .all(|b| subset(a, b) || subset(b, a))
        })
    }

    /// Whether the set fills a complete `m × n` grid.
    pub fn is_rectangle(&self) -> bool {
        self.incidence.iter().all(|r| r.iter().all(|&b| b))
    }

    pub fn transpose(&self) -> Configuration {
        let cols = self.incidence.first().map_or(0, |r| r.len());
        let t: Vec<Vec<bool>> = (0..cols)
            .map(|c| self.incidence.iter().map(|r| r[c]).collect())
            .collect();
        Configuration::from_incidence(&t)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

fn transpose_bits(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|c| m.iter().map(|r| r[c]).collect())
        .collect()
}

fn count(v: &[bool]) -> usize {
    v.iter().filter(|&&b| b).count()
}

/// Columns of `m` grouped into classes of equal count, largest first; each
/// class sorted descending.
fn column_classes(m: &[Vec<bool>]) -> Vec<Vec<Vec<bool>>> {
    let mut cols = transpose_bits(m);
    cols.sort_by(|a, b| count(b).cmp(&count(a)).then_with(|| b.cmp(a)));
    let mut classes: Vec<Vec<Vec<bool>>> = Vec::new();
    for c in cols {
        match classes.last_mut() {
            Some(cl) if count(&cl[0]) == count(&c) => cl.push(c),
            _ => classes.push(vec![c]),
        }
    }
    classes
}

/// Number of distinct orderings of a multiset, saturating.
fn multiset_perms(items: &[Vec<bool>]) -> u64 {
    let mut total: u64 = 1;
    let mut seen: Vec<&Vec<bool>> = Vec::new();
    for (i, _) in items.iter().enumerate() {
        total = total.saturating_mul(i as u64 + 1);
    }
    for it in items {
        if seen.contains(&it) {
            continue;
        }
        seen.push(it);
        let k = items.iter().filter(|x| *x == it).count() as u64;
        total /= (1..=k).product::<u64>().max(1);
    }
    total
}

fn ordering_cost(m: &[Vec<bool>]) -> u64 {
    column_classes(m)
        .iter()
        .fold(1u64, |acc, cl| acc.saturating_mul(multiset_perms(cl)))
}

/// Lexicographic successor of a sequence; false when already the last.
fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Best matrix over all column orderings consistent with the count classes,
/// rows sorted by (count, bits) descending in each candidate.
fn best_over_column_orders(m: &[Vec<bool>], exhaustive: bool) -> Vec<Vec<bool>> {
    let mut classes = column_classes(m);
    for cl in &mut classes {
        cl.sort();
    }
    let build = |classes: &[Vec<Vec<bool>>]| {
        let cols: Vec<Vec<bool>> = classes.iter().flatten().cloned().collect();
        let mut rows = transpose_bits(&cols);
        rows.sort_by(|a, b| count(b).cmp(&count(a)).then_with(|| b.cmp(a)));
        rows
    };
    let mut best = build(&classes);
    if !exhaustive {
        return best;
    }
    // odometer over the per-class permutations
    loop {
        let cand = build(&classes);
        if cand > best {
            best = cand;
        }
        let mut k = classes.len();
        loop {
            if k == 0 {
                return best;
            }
            k -= 1;
            if next_permutation(&mut classes[k]) {
                break;
            }
            classes[k].sort();
        }
    }
}

/// Canonical incidence matrix: rows by decreasing count, columns by
/// decreasing count, ties broken by the lexicographically largest matrix.
/// Whichever side has fewer admissible orderings is enumerated; the other
/// is sorted. Any fixed comparison gives a relabeling invariant maximum, so
/// the row-enumerating branch compares transposed matrices.
fn canonical_incidence(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    if m.is_empty() {
        return Vec::new();
    }
    let t = transpose_bits(m);
    let max_row = m.iter().map(|r| count(r)).max().unwrap_or(0);
    let max_col = t.iter().map(|r| count(r)).max().unwrap_or(0);
    // With one point per row every column order yields the same sorted rows,
    // and symmetrically for columns.
    if max_row <= 1 {
        return best_over_column_orders(m, false);
    }
    if max_col <= 1 {
        return transpose_bits(&best_over_column_orders(&t, false));
    }
    let cost_cols = ordering_cost(m);
    let cost_rows = ordering_cost(&t);
    if cost_cols <= cost_rows {
        best_over_column_orders(m, cost_cols <= CANONICAL_SEARCH_LIMIT)
    } else {
        transpose_bits(&best_over_column_orders(
            &t,
            cost_rows <= CANONICAL_SEARCH_LIMIT,
        ))
    }
}

pub fn configuration_of(x: &PointSet) -> Configuration {
    let r = rulings_of(x);
    let incidence: Vec<Vec<bool>> = r
        .horizontal
        .iter()
        .map(|(_, row)| {
            r.vertical
                .iter()
                .map(|(col, _)| row.iter().any(|p| col.contains(p)))
                .collect()
        })
        .collect();
    Configuration::from_incidence(&incidence)
}

/// `I_X` as the intersection of the ideals of the points.
pub fn vanishing_ideal(x: &PointSet) -> Ideal {
    let mut layer: Vec<Ideal> = x.points().iter().map(|p| p.ideal()).collect();
    while layer.len() > 1 {
        let mut next = Vec::with_capacity(layer.len().div_ceil(2));
        let mut it = layer.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(intersect(&a, &b)),
                None => next.push(a.normalized()),
            }
        }
        layer = next;
    }
    layer.pop().unwrap().normalized()
}

/// Value of a cross ratio: a field element or the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossRatio {
    Finite(Scalar),
    Infinity,
}

impl fmt::Display for CrossRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrossRatio::Finite(s) => write!(f, "{s}"),
            CrossRatio::Infinity => write!(f, "inf"),
        }
    }
}

/// Cross ratio of `[a:a'], [b:b'], [c:c'], [d:d']`:
/// `(c a' − a c')(d b' − b d') / ((d a' − a d')(c b' − b c'))`.
///
/// The expression is homogeneous of degree zero in each point, so points
/// at `[1:0]` or `[0:1]` need no special treatment.
pub fn cross_ratio(p: [&ProjPoint; 4]) -> Result<CrossRatio> {
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] == p[j] {
                return Err(Error::DegenerateCrossRatio);
            }
        }
    }
    let field = p[0].field();
    if p.iter().any(|q| q.field() != field) {
        return Err(Error::FieldMismatch(field.to_string(), "mixed".into()));
    }
    let [a, a1] = p[0].coords();
    let [b, b1] = p[1].coords();
    let [c, c1] = p[2].coords();
    let [d, d1] = p[3].coords();
    let det = |u: &Scalar, u1: &Scalar, v: &Scalar, v1: &Scalar| &(u * v1) - &(v * u1);
    let num = &det(&c, &c1, &a, &a1) * &det(&d, &d1, &b, &b1);
    let den = &det(&d, &d1, &a, &a1) * &det(&c, &c1, &b, &b1);
    if den.is_zero() {
        return Ok(CrossRatio::Infinity);
    }
    Ok(CrossRatio::Finite(num.try_div(&den)?))
}

/// Applies `[u:v] ↦ [m00 u + m01 v : m10 u + m11 v]`.
pub fn transform_point(p: &ProjPoint, m: &[[Scalar; 2]; 2]) -> Result<ProjPoint> {
    p.transform(m)
}

/// Basis of the forms of bidegree `(a,b)` vanishing at the given points.
pub fn forms_through(field: Field, points: &[BiProjPoint], bidegree: (u32, u32)) -> Vec<BiPoly> {
    let monos = BiMonomial::all_of_bidegree(bidegree.0, bidegree.1);
    let rows: Vec<Vec<Scalar>> = points
        .iter()
        .map(|p| {
            let c = p.coords();
            monos
                .iter()
                .map(|m| {
                    let mut v = field.one();
                    for (i, &e) in m.0.iter().enumerate() {
                        if e > 0 {
                            v = &v * &c[i].pow(e);
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    Matrix::new(field, monos.len(), rows)
        .kernel()
        .into_iter()
        .map(|v| {
            BiPoly::from_terms(field, monos.iter().cloned().zip(v))
                .expect("single bidegree")
                .monic()
        })
        .collect()
}

/// Basis of the forms of bidegree `(a,b)` vanishing on `X`.
pub fn form_through_points(x: &PointSet, bidegree: (u32, u32)) -> Vec<BiPoly> {
    forms_through(x.field(), x.points(), bidegree)
}
