//! Bihomogeneous polynomials in the Cox ring `k[x0, x1, y0, y1]` of
//! P¹×P¹, graded by `deg x_i = (1,0)` and `deg y_i = (0,1)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::geometry::{Axis, BiProjPoint, ProjPoint, Ruling};
use crate::unipoly::{Bpoly, Upoly};

/// Exponent vector `(x0, x1, y0, y1)`.
///
/// `Ord` is graded reverse lexicographic with `x0 > x1 > y0 > y1`; this is
/// the global term order for normalization and printing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiMonomial(pub [u32; 4]);

impl BiMonomial {
    pub const ONE: BiMonomial = BiMonomial([0; 4]);

    pub fn bidegree(&self) -> (u32, u32) {
        (self.0[0] + self.0[1], self.0[2] + self.0[3])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &BiMonomial) -> BiMonomial {
        BiMonomial(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    pub fn divides(&self, o: &BiMonomial) -> bool {
        (0..4).all(|i| self.0[i] <= o.0[i])
    }

    /// `o / self`, if `self` divides `o`.
    pub fn quotient(&self, o: &BiMonomial) -> Option<BiMonomial> {
        self.divides(o)
            .then(|| BiMonomial(std::array::from_fn(|i| o.0[i] - self.0[i])))
    }

    pub fn transpose(&self) -> BiMonomial {
        let [a, b, c, d] = self.0;
        BiMonomial([c, d, a, b])
    }

    /// All monomials of a given bidegree, ascending in the term order.
    pub fn all_of_bidegree(a: u32, b: u32) -> Vec<BiMonomial> {
        let mut out: Vec<BiMonomial> = (0..=a)
            .flat_map(|i| (0..=b).map(move |j| BiMonomial([i, a - i, j, b - j])))
            .collect();
        out.sort();
        out
    }
}

impl PartialOrd for BiMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BiMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for i in (0..4).rev() {
                    if self.0[i] != other.0[i] {
                        return other.0[i].cmp(&self.0[i]);
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Display for BiMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 4] = ["x0", "x1", "y0", "y1"];
        let mut first = true;
        for (name, &e) in NAMES.iter().zip(self.0.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A bihomogeneous polynomial. The zero polynomial has no bidegree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiPoly {
    field: Field,
    terms: BTreeMap<BiMonomial, Scalar>,
}

impl BiPoly {
    pub fn zero(field: Field) -> BiPoly {
        BiPoly {
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> BiPoly {
        BiPoly::monomial(BiMonomial::ONE, c)
    }

    pub fn one(field: Field) -> BiPoly {
        BiPoly::constant(field.one())
    }

    pub fn monomial(m: BiMonomial, c: Scalar) -> BiPoly {
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        BiPoly { field, terms }
    }

    /// Single variable by index `0..4` = `x0, x1, y0, y1`.
    pub fn var(field: Field, idx: usize) -> BiPoly {
        let mut e = [0; 4];
        e[idx] = 1;
        BiPoly::monomial(BiMonomial(e), field.one())
    }

    pub fn x0(field: Field) -> BiPoly {
        BiPoly::var(field, 0)
    }
    pub fn x1(field: Field) -> BiPoly {
        BiPoly::var(field, 1)
    }
    pub fn y0(field: Field) -> BiPoly {
        BiPoly::var(field, 2)
    }
    pub fn y1(field: Field) -> BiPoly {
        BiPoly::var(field, 3)
    }

    /// Builds from terms, summing duplicates and rejecting mixed bidegrees.
    pub fn from_terms<I>(field: Field, terms: I) -> Result<BiPoly>
    where
        I: IntoIterator<Item = (BiMonomial, Scalar)>,
    {
        let mut map: BTreeMap<BiMonomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            if c.field() != field {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    c.field().to_string(),
                ));
            }
            let entry = map.entry(m).or_insert_with(|| field.zero());
            *entry = &*entry + &c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut degs = map.keys().map(|m| m.bidegree());
        if let Some(d) = degs.next() {
            if degs.any(|e| e != d) {
                return Err(Error::NotBihomogeneous);
            }
        }
        Ok(BiPoly { field, terms: map })
    }

    /// Like [`BiPoly::from_terms`] with small integer coefficients.
    pub fn from_int_terms(field: Field, terms: &[(i64, [u32; 4])]) -> Result<BiPoly> {
        BiPoly::from_terms(
            field,
            terms
                .iter()
                .map(|(c, e)| (BiMonomial(*e), Scalar::from_i64(field, *c))),
        )
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        self.terms.keys().next().map(|m| m.bidegree())
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.bidegree() == Some((0, 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&BiMonomial, &Scalar)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, m: &BiMonomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn leading_term(&self) -> Option<(&BiMonomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn check_field(&self, o: &BiPoly) -> Result<()> {
        if self.field != o.field {
            return Err(Error::FieldMismatch(
                self.field.to_string(),
                o.field.to_string(),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &BiPoly) -> Result<BiPoly> {
        self.check_field(o)?;
        if let (Some(a), Some(b)) = (self.bidegree(), o.bidegree()) {
            if a != b {
                return Err(Error::BidegreeMismatch(a.0, a.1, b.0, b.1));
            }
        }
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            let entry = terms.entry(*m).or_insert_with(|| self.field.zero());
            *entry = &*entry + c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(BiPoly {
            field: self.field,
            terms,
        })
    }

    pub fn try_sub(&self, o: &BiPoly) -> Result<BiPoly> {
        self.try_add(&o.neg())
    }

    pub fn try_mul(&self, o: &BiPoly) -> Result<BiPoly> {
        self.check_field(o)?;
        let mut terms: BTreeMap<BiMonomial, Scalar> = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                let entry = terms.entry(m.mul(n)).or_insert_with(|| self.field.zero());
                *entry = &*entry + &(a * b);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(BiPoly {
            field: self.field,
            terms,
        })
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BiPoly {
        if c.is_zero() {
            return BiPoly::zero(self.field);
        }
        BiPoly {
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &BiMonomial) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(n, a)| (m.mul(n), a.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BiPoly {
        (0..e).fold(BiPoly::one(self.field), |acc, _| &acc * self)
    }

    /// Product of a list; the empty product is `1`.
    pub fn product<'a, I: IntoIterator<Item = &'a BiPoly>>(field: Field, it: I) -> BiPoly {
        it.into_iter().fold(BiPoly::one(field), |acc, p| &acc * p)
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> BiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("leading coefficient is nonzero")),
        }
    }

    /// Swaps the two P¹ factors.
    pub fn transpose(&self) -> BiPoly {
        BiPoly {
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.transpose(), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at a coordinate vector `(x0, x1, y0, y1)`.
    pub fn eval_coords(&self, v: &[Scalar; 4]) -> Scalar {
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = &t * &v[i].pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Value at the canonical representative of `p`. Whether the value is
    /// zero does not depend on the representative.
    pub fn evaluate(&self, p: &BiProjPoint) -> Scalar {
        self.eval_coords(&p.coords())
    }

    /// Substitutes the fixed coordinate pair of `ruling`, leaving a binary
    /// form in the other pair.
    pub fn restrict_to_ruling(&self, ruling: &Ruling) -> BinaryForm {
        let (a, b) = self.bidegree().unwrap_or((0, 0));
        let [c0, c1] = ruling.coordinate.coords();
        let degree = match ruling.axis {
            Axis::Vertical => b,
            Axis::Horizontal => a,
        };
        let mut coeffs = vec![self.field.zero(); degree as usize + 1];
        for (m, c) in &self.terms {
            let [e0, e1, f0, f1] = m.0;
            let (fixed, free0) = match ruling.axis {
                Axis::Vertical => (&c0.pow(e0) * &c1.pow(e1), f0),
                Axis::Horizontal => (&c0.pow(f0) * &c1.pow(f1), e0),
            };
            let idx = free0 as usize;
            coeffs[idx] = &coeffs[idx] + &(c * &fixed);
        }
        BinaryForm::new(self.field, ruling.axis, degree, coeffs)
    }

    /// Exact division; fails if `d` does not divide `self`.
    pub fn exact_div(&self, d: &BiPoly) -> Result<BiPoly> {
        self.check_field(d)?;
        let (lm, lc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        let mut rem = self.clone();
        let mut quot = BiPoly::zero(self.field);
        while let Some((m, c)) = rem.leading_term() {
            let Some(q) = lm.quotient(m) else {
                return Err(Error::InexactDivision);
            };
            let coef = c * &lc_inv;
            let term = BiPoly::monomial(q, coef);
            rem = rem.try_sub(&(&term * d))?;
            quot = quot.try_add(&term)?;
        }
        Ok(quot)
    }

    /// Monic gcd; a constant exactly when `self` and `o` are coprime.
    pub fn gcd(&self, o: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        let (fx, fy) = self.valuations();
        let (gx, gy) = o.valuations();
        let g = self.dehomogenize().gcd(&o.dehomogenize());
        let mut e = [0u32; 4];
        e[1] = fx.min(gx);
        e[3] = fy.min(gy);
        rehomogenize(self.field, &g)
            .mul_monomial(&BiMonomial(e))
            .monic()
    }

    /// Powers of `x1` and `y1` dividing the polynomial.
    fn valuations(&self) -> (u32, u32) {
        let vx = self.terms.keys().map(|m| m.0[1]).min().unwrap_or(0);
        let vy = self.terms.keys().map(|m| m.0[3]).min().unwrap_or(0);
        (vx, vy)
    }

    /// Sets `x1 = y1 = 1`; outer variable `y0`, inner `x0`.
    fn dehomogenize(&self) -> Bpoly {
        let max_y = self.terms.keys().map(|m| m.0[2]).max().unwrap_or(0) as usize;
        let max_x = self.terms.keys().map(|m| m.0[0]).max().unwrap_or(0) as usize;
        let mut grid = vec![vec![self.field.zero(); max_x + 1]; max_y + 1];
        for (m, c) in &self.terms {
            grid[m.0[2] as usize][m.0[0] as usize] = c.clone();
        }
        Bpoly::new(
            self.field,
            grid.into_iter()
                .map(|row| Upoly::new(self.field, row))
                .collect(),
        )
    }
}

fn rehomogenize(field: Field, g: &Bpoly) -> BiPoly {
    let dy = g.coeffs.len().saturating_sub(1) as u32;
    let dx = g
        .coeffs
        .iter()
        .filter_map(|c| c.degree())
        .max()
        .unwrap_or(0) as u32;
    let terms = g.coeffs.iter().enumerate().flat_map(|(j, c)| {
        c.coeffs
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(move |(i, s)| {
                let (i, j) = (i as u32, j as u32);
                (BiMonomial([i, dx - i, j, dy - j]), s.clone())
            })
    });
    BiPoly::from_terms(field, terms).expect("rehomogenized gcd is bihomogeneous")
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        self.try_mul(rhs).expect("BiPoly field mismatch")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if *m == BiMonomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// A binary form in one coordinate pair.
///
/// `coeffs[i]` is the coefficient of `u0^i * u1^(degree - i)`, where `(u0, u1)`
/// is `(x0, x1)` for forms on a horizontal ruling and `(y0, y1)` for forms on
/// a vertical ruling. The form may be identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub field: Field,
    /// Axis of the ruling the form lives on: forms on vertical rulings are
    /// in `(y0, y1)`, forms on horizontal rulings in `(x0, x1)`.
    pub axis: Axis,
    pub degree: u32,
    pub coeffs: Vec<Scalar>,
}

/// Roots of a binary form in P¹ over the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryRoots {
    pub roots: Vec<(ProjPoint, u32)>,
    /// Degree of the factor with no roots in the field.
    pub residual_degree: u32,
}

impl BinaryForm {
    pub fn new(field: Field, axis: Axis, degree: u32, coeffs: Vec<Scalar>) -> BinaryForm {
        debug_assert_eq!(coeffs.len(), degree as usize + 1);
        BinaryForm {
            field,
            axis,
            degree,
            coeffs,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// All roots with multiplicity. `[1:0]` is a root of multiplicity
    /// `degree - (top nonzero index)`; the others come from the dehomogenized
    /// polynomial in `u0 / u1`.
    pub fn roots(&self) -> BinaryRoots {
        assert!(!self.is_zero(), "roots of the zero form");
        let dehom = Upoly::new(self.field, self.coeffs.clone());
        let affine_deg = dehom.degree().unwrap() as u32;
        let mut roots: Vec<(ProjPoint, u32)> = dehom
            .roots()
            .into_iter()
            .map(|(a, k)| (ProjPoint::affine(a), k))
            .collect();
        let at_infinity = self.degree - affine_deg;
        if at_infinity > 0 {
            roots.push((ProjPoint::infinity(self.field), at_infinity));
        }
        roots.sort();
        let found: u32 = roots.iter().map(|(_, k)| k).sum();
        BinaryRoots {
            roots,
            residual_degree: self.degree - found,
        }
    }
}

/// Root finding on a nonzero binary form.
pub fn binary_roots(q: &BinaryForm) -> BinaryRoots {
    q.roots()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Ruling;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn p(terms: &[(i64, [u32; 4])]) -> BiPoly {
        BiPoly::from_int_terms(Q, terms).unwrap()
    }

    fn pt(a: (i64, i64), b: (i64, i64)) -> BiProjPoint {
        BiProjPoint::from_ints(Q, a, b).unwrap()
    }

    #[test]
    fn grevlex_order() {
        let x0 = BiMonomial([1, 0, 0, 0]);
        let x1 = BiMonomial([0, 1, 0, 0]);
        let y1 = BiMonomial([0, 0, 0, 1]);
        assert!(x0 > x1 && x1 > y1);
        // x0*y1 > x1^2? Same degree; last variable y1 has larger exponent in x0*y1
        assert!(BiMonomial([0, 2, 0, 0]) > BiMonomial([1, 0, 0, 1]));
    }

    #[test]
    fn add_mul_examples() {
        let a = &p(&[(1, [1, 0, 1, 0])]) * &p(&[(1, [0, 1, 0, 1])]);
        assert_eq!(a, p(&[(1, [1, 1, 1, 1])]));
        assert_eq!(a.bidegree(), Some((2, 2)));
        let s = p(&[(1, [1, 0, 1, 0])])
            .try_add(&p(&[(1, [0, 1, 0, 1])]))
            .unwrap();
        assert_eq!(s.bidegree(), Some((1, 1)));
        assert_eq!(s.num_terms(), 2);
        let g = example_g();
        assert_eq!(g.bidegree(), Some((2, 1)));
        assert!(matches!(
            BiPoly::x0(Q).try_add(&BiPoly::y0(Q)),
            Err(Error::BidegreeMismatch(..))
        ));
        assert!(BiPoly::from_int_terms(Q, &[(1, [1, 0, 0, 0]), (1, [0, 0, 1, 0])]).is_err());
        assert_eq!(BiPoly::zero(Q).bidegree(), None);
    }

    /// x0 (x1 - x0)(y1 - y0)
    fn example_g() -> BiPoly {
        let a = BiPoly::x1(Q).try_sub(&BiPoly::x0(Q)).unwrap();
        let b = BiPoly::y1(Q).try_sub(&BiPoly::y0(Q)).unwrap();
        &(&BiPoly::x0(Q) * &a) * &b
    }

    #[test]
    fn printing() {
        assert_eq!(
            example_g().to_string(),
            "x0^2*y0 - x0*x1*y0 - x0^2*y1 + x0*x1*y1"
        );
        assert_eq!(BiPoly::zero(Q).to_string(), "0");
    }

    #[test]
    fn evaluate_examples() {
        let f = p(&[(1, [0, 1, 0, 1])]);
        assert!(f.evaluate(&pt((1, 0), (0, 1))).is_zero());
        let g = p(&[(1, [1, 0, 1, 0])]);
        assert!(g.evaluate(&pt((1, 0), (0, 1))).is_zero());
        assert!(g.evaluate(&pt((1, 1), (1, 1))).is_one());
    }

    #[test]
    fn restrict_examples() {
        let g = example_g();
        let r = g.restrict_to_ruling(&Ruling::vertical(ProjPoint::from_ints(Q, 1, 1).unwrap()));
        assert!(r.is_zero());
        // vertical ruling x = [2:1] does not divide g: a degree-1 form in y
        let r = g.restrict_to_ruling(&Ruling::vertical(ProjPoint::from_ints(Q, 2, 1).unwrap()));
        assert!(!r.is_zero());
        assert_eq!(r.degree, 1);
        // x1*y1 on y = [0:1]: substitute y0 = 0, y1 = 1, leaving x1
        let f = p(&[(1, [0, 1, 0, 1])]);
        let r = f.restrict_to_ruling(&Ruling::horizontal(ProjPoint::from_ints(Q, 0, 1).unwrap()));
        assert_eq!(r.degree, 1);
        assert_eq!(
            r.coeffs,
            vec![Scalar::from_i64(Q, 1), Scalar::from_i64(Q, 0)]
        );
    }

    #[test]
    fn gcd_examples() {
        let x0y0 = p(&[(1, [1, 0, 1, 0])]);
        let x0y1 = p(&[(1, [1, 0, 0, 1])]);
        let x1y1 = p(&[(1, [0, 1, 0, 1])]);
        assert_eq!(x0y0.gcd(&x0y1), BiPoly::x0(Q));
        assert!(x0y0.gcd(&x1y1).is_unit());
        let a = &BiPoly::x0(Q) * &BiPoly::x1(Q).try_sub(&BiPoly::x0(Q)).unwrap();
        let b = &BiPoly::x0(Q) * &BiPoly::y1(Q).try_sub(&BiPoly::y0(Q)).unwrap();
        assert_eq!(a.gcd(&b), BiPoly::x0(Q));
        // x1 powers survive dehomogenization
        let c = p(&[(1, [0, 2, 1, 0])]);
        let d = p(&[(1, [0, 1, 0, 0]), (1, [1, 0, 0, 0])]);
        assert_eq!(c.gcd(&(&d * &BiPoly::x1(Q))), BiPoly::x1(Q));
    }

    #[test]
    fn binary_roots_examples() {
        let y0y1 = p(&[(1, [0, 0, 1, 1])]);
        let r = y0y1.restrict_to_ruling(&Ruling::vertical(ProjPoint::from_ints(Q, 1, 0).unwrap()));
        let roots = binary_roots(&r);
        assert_eq!(
            roots.roots,
            vec![
                (ProjPoint::from_ints(Q, 0, 1).unwrap(), 1),
                (ProjPoint::from_ints(Q, 1, 0).unwrap(), 1)
            ]
        );
        let sq = p(&[(1, [0, 0, 0, 2]), (-2, [0, 0, 1, 1]), (1, [0, 0, 2, 0])]);
        let r = sq.restrict_to_ruling(&Ruling::vertical(ProjPoint::from_ints(Q, 1, 0).unwrap()));
        assert_eq!(
            binary_roots(&r).roots,
            vec![(ProjPoint::from_ints(Q, 1, 1).unwrap(), 2)]
        );
        // x0^2 + x1^2: discriminant negative, nothing rational
        let circ = p(&[(1, [2, 0, 0, 0]), (1, [0, 2, 0, 0])]);
        let r =
            circ.restrict_to_ruling(&Ruling::horizontal(ProjPoint::from_ints(Q, 1, 0).unwrap()));
        let roots = binary_roots(&r);
        assert!(roots.roots.is_empty());
        assert_eq!(roots.residual_degree, 2);
    }

    #[test]
    fn exact_division() {
        let g = example_g();
        assert_eq!(
            g.exact_div(&BiPoly::x0(Q)).unwrap().bidegree(),
            Some((1, 1))
        );
        assert!(matches!(
            g.exact_div(&BiPoly::x1(Q)),
            Err(Error::InexactDivision)
        ));
    }

    fn linear(field: Field, which: usize, a: i64, b: i64) -> BiPoly {
        let (u0, u1) = if which == 0 { (0, 1) } else { (2, 3) };
        BiPoly::var(field, u0)
            .scale(&Scalar::from_i64(field, b))
            .try_sub(&BiPoly::var(field, u1).scale(&Scalar::from_i64(field, a)))
            .unwrap()
    }

    /// Random products of linear forms: splitting polynomials with known factors.
    fn split_poly() -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((0usize..2, -3i64..4, 1i64..3), 1..4).prop_map(|fs| {
            BiPoly::product(
                Q,
                fs.iter()
                    .map(|&(w, a, b)| linear(Q, w, a, b))
                    .collect::<Vec<_>>()
                    .iter(),
            )
        })
    }

    fn point() -> impl Strategy<Value = BiProjPoint> {
        (-3i64..4, 1i64..3, -3i64..4, 0i64..2)
            .prop_filter("not both zero", |t| t.3 != 0 || t.2 != 0)
            .prop_map(|(a, b, c, d)| pt((a, b), (c, d)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn gcd_divides_and_scales(f in split_poly(), g in split_poly(), h in split_poly()) {
            let d = f.gcd(&g);
            prop_assert!(f.exact_div(&d).is_ok());
            prop_assert!(g.exact_div(&d).is_ok());
            let lhs = (&f * &h).gcd(&(&g * &h));
            prop_assert_eq!(lhs, (&h * &d).monic());
        }

        #[test]
        fn evaluation_is_multiplicative(f in split_poly(), g in split_poly(), x in point()) {
            prop_assert_eq!((&f * &g).evaluate(&x), &f.evaluate(&x) * &g.evaluate(&x));
        }

        #[test]
        fn restriction_vanishes_iff_divisible(f in split_poly(), a in -3i64..4, vertical in any::<bool>()) {
            let c = ProjPoint::from_ints(Q, a, 1).unwrap();
            let r = if vertical { Ruling::vertical(c) } else { Ruling::horizontal(c) };
            let divides = f.gcd(&r.form).bidegree() != Some((0, 0));
            prop_assert_eq!(f.restrict_to_ruling(&r).is_zero(), divides);
        }
    }
}
