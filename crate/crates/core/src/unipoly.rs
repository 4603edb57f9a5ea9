//! Dense univariate and bivariate polynomials used behind the bihomogeneous
//! gcd and binary-form root finding.
//!
//! `Upoly` is `k[u]`; `Bpoly` is `(k[u])[v]`, viewed as a univariate
//! polynomial whose coefficients are `Upoly`s. The bivariate gcd runs
//! content/primitive-part recursion with a subresultant remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Scalar};

/// Polynomial in one variable, coefficients low to high, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Upoly {
    pub field: Field,
    pub coeffs: Vec<Scalar>,
}

impl Upoly {
    pub fn zero(field: Field) -> Self {
        Upoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        Upoly::new(c.field(), vec![c])
    }

    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Upoly { field, coeffs }
    }

    /// `u - a`
    pub fn linear_root(a: &Scalar) -> Self {
        let f = a.field();
        Upoly::new(f, vec![-a, f.one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Scalar {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    fn coeff(&self, i: usize) -> Scalar {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn sub(&self, o: &Upoly) -> Upoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Upoly::new(
            self.field,
            (0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect(),
        )
    }

    pub fn mul(&self, o: &Upoly) -> Upoly {
        if self.is_zero() || o.is_zero() {
            return Upoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Upoly::new(self.field, out)
    }

    pub fn scale(&self, c: &Scalar) -> Upoly {
        Upoly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Upoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Euclidean division over the field.
    pub fn divrem(&self, d: &Upoly) -> (Upoly, Upoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let inv = d.lc().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Upoly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = &rem[idx] - &(&c * b);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Upoly::new(self.field, quot), Upoly::new(self.field, rem))
    }

    pub fn exact_div(&self, d: &Upoly) -> Option<Upoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; zero only if both inputs are zero.
    pub fn gcd(&self, o: &Upoly) -> Upoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    fn powmod(&self, mut e: u64, m: &Upoly) -> Upoly {
        let mut base = self.divrem(m).1;
        let mut acc = Upoly::constant(self.field.one()).divrem(m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).divrem(m).1;
            }
            base = base.mul(&base).divrem(m).1;
            e >>= 1;
        }
        acc
    }

    /// Roots in the coefficient field together with their multiplicities,
    /// sorted by root. Over `Q` only rational roots are found.
    pub fn roots(&self) -> Vec<(Scalar, u32)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut simple = match self.field {
            Field::Prime(p) => roots_mod_p(&self.monic(), p),
            Field::Rationals => rational_roots(self),
        };
        simple.sort();
        simple.dedup();
        simple
            .into_iter()
            .map(|r| {
                let lin = Upoly::linear_root(&r);
                let mut q = self.clone();
                let mut mult = 0;
                while let Some(next) = q.exact_div(&lin) {
                    q = next;
                    mult += 1;
                }
                (r, mult)
            })
            .collect()
    }
}

/// Distinct roots in `F_p` via `gcd(f, u^p - u)` and random splitting.
fn roots_mod_p(f: &Upoly, p: u64) -> Vec<Scalar> {
    let field = f.field;
    let u = Upoly::new(field, vec![field.zero(), field.one()]);
    let split = u.powmod(p, f).sub(&u);
    let g = f.gcd(&split);
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    if p == 2 {
        for v in 0..2 {
            let s = Scalar::from_i64(field, v);
            if g.eval(&s).is_zero() {
                out.push(s);
            }
        }
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut stack = vec![g];
    while let Some(h) = stack.pop() {
        match h.degree() {
            Some(0) | None => {}
            Some(1) => out.push(-(&h.coeffs[0] / &h.coeffs[1])),
            Some(_) => loop {
                let a = Scalar::from_i64(field, rng.gen_range(0..p as i64));
                let shifted = Upoly::new(field, vec![a, field.one()]);
                let w = shifted
                    .powmod((p - 1) / 2, &h)
                    .sub(&Upoly::constant(field.one()));
                let d = h.gcd(&w);
                let dd = d.degree().unwrap_or(0);
                if dd > 0 && dd < h.degree().unwrap() {
                    let other = h.exact_div(&d).unwrap();
                    stack.push(d);
                    stack.push(other);
                    break;
                }
            },
        }
    }
    out
}

/// Divisors of `n > 0`, when `n` is small enough to trial-divide.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let v = n.to_u64()?;
    if v > 1u64 << 40 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            out.push(BigInt::from(d));
            if d * d != v {
                out.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots by the rational root test on the primitive integer form.
/// Coefficients too large to trial-divide yield no roots (reported upstream
/// as a non-split residual).
fn rational_roots(f: &Upoly) -> Vec<Scalar> {
    let mut out = Vec::new();
    let mut coeffs: Vec<BigRational> = f
        .coeffs
        .iter()
        .map(|c| c.as_rational().cloned().unwrap())
        .collect();
    // zero is a root iff the constant term vanishes
    let low = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        out.push(Scalar::from_i64(Field::Rationals, 0));
        coeffs.drain(..low);
    }
    if coeffs.len() <= 1 {
        return out;
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
    let (Some(ps), Some(qs)) = (
        small_divisors(&ints[0].abs()),
        small_divisors(&ints.last().unwrap().abs()),
    ) else {
        return out;
    };
    let reduced = Upoly::new(
        Field::Rationals,
        ints.iter()
            .map(|c| Scalar::Rational(BigRational::from_integer(c.clone())))
            .collect(),
    );
    for pn in &ps {
        for qd in &qs {
            for sign in [1i32, -1] {
                let cand = BigRational::new(pn * BigInt::from(sign), qd.clone());
                let s = Scalar::Rational(cand);
                if reduced.eval(&s).is_zero() {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Polynomial in `v` with coefficients in `k[u]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Bpoly {
    pub field: Field,
    pub coeffs: Vec<Upoly>,
}

impl Bpoly {
    pub fn new(field: Field, mut coeffs: Vec<Upoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Bpoly { field, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lc(&self) -> Upoly {
        self.coeffs
            .last()
            .cloned()
            .unwrap_or_else(|| Upoly::zero(self.field))
    }

    fn content(&self) -> Upoly {
        self.coeffs
            .iter()
            .fold(Upoly::zero(self.field), |acc, c| acc.gcd(c))
    }

    fn scale(&self, c: &Upoly) -> Bpoly {
        Bpoly::new(self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    fn div_coeff(&self, c: &Upoly) -> Bpoly {
        Bpoly::new(
            self.field,
            self.coeffs
                .iter()
                .map(|a| a.exact_div(c).expect("exact coefficient division"))
                .collect(),
        )
    }

    fn primitive_part(&self) -> Bpoly {
        if self.is_zero() {
            return self.clone();
        }
        self.div_coeff(&self.content())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    fn prem(&self, b: &Bpoly) -> Bpoly {
        let db = b.degree();
        let lb = b.lc();
        let mut r = self.clone();
        let mut steps = 0usize;
        let delta = self.degree() + 1 - db;
        while !r.is_zero() && r.degree() >= db {
            let shift = r.degree() - db;
            let lr = r.lc();
            let mut scaled = r.scale(&lb).coeffs;
            for (j, c) in b.coeffs.iter().enumerate() {
                scaled[shift + j] = scaled[shift + j].sub(&lr.mul(c));
            }
            r = Bpoly::new(self.field, scaled);
            steps += 1;
        }
        let mut factor = Upoly::constant(self.field.one());
        for _ in steps..delta {
            factor = factor.mul(&lb);
        }
        r.scale(&factor)
    }

    /// Gcd up to a unit of `k`.
    pub fn gcd(&self, other: &Bpoly) -> Bpoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let content = self.content().gcd(&other.content());
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        let one = Upoly::constant(self.field.one());
        let mut g = one.clone();
        let mut h = one.clone();
        let prim = loop {
            let delta = a.degree() - b.degree();
            let r = a.prem(&b);
            if r.is_zero() {
                break b.primitive_part();
            }
            if r.degree() == 0 {
                break Bpoly::new(self.field, vec![one.clone()]);
            }
            let mut divisor = g.clone();
            for _ in 0..delta {
                divisor = divisor.mul(&h);
            }
            a = b;
            b = r.div_coeff(&divisor);
            g = a.lc();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => {
                    let mut num = one.clone();
                    for _ in 0..delta {
                        num = num.mul(&g);
                    }
                    let mut den = one.clone();
                    for _ in 0..delta - 1 {
                        den = den.mul(&h);
                    }
                    num.exact_div(&den).expect("subresultant h update is exact")
                }
            };
        };
        prim.scale(&content)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(field: Field, c: &[i64]) -> Upoly {
        Upoly::new(
            field,
            c.iter().map(|&v| Scalar::from_i64(field, v)).collect(),
        )
    }

    #[test]
    fn univariate_gcd() {
        let q = Field::Rationals;
        // (u-1)(u-2) and (u-1)(u+3)
        let a = up(q, &[2, -3, 1]);
        let b = up(q, &[-3, 2, 1]);
        assert_eq!(a.gcd(&b), up(q, &[-1, 1]));
    }

    #[test]
    fn roots_over_q_and_fp() {
        let q = Field::Rationals;
        // (u - 1/2)^2 (u + 3) u
        let half = Scalar::from_ratio(q, 1, 2).unwrap();
        let f = Upoly::linear_root(&half)
            .mul(&Upoly::linear_root(&half))
            .mul(&up(q, &[3, 1]))
            .mul(&up(q, &[0, 1]));
        let r = f.roots();
        assert_eq!(
            r,
            vec![
                (Scalar::from_i64(q, -3), 1),
                (Scalar::from_i64(q, 0), 1),
                (half, 2)
            ]
        );
        // u^2 + 1 has no rational roots
        assert!(up(q, &[1, 0, 1]).roots().is_empty());

        let p = Field::Prime(32003);
        let f = up(p, &[6, -5, 1]).mul(&up(p, &[-7, 1]));
        let roots: Vec<i64> = f.roots().iter().map(|(s, _)| s.to_i64().unwrap()).collect();
        assert_eq!(roots, vec![2, 3, 7]);
    }

    #[test]
    fn bivariate_gcd_shares_factor() {
        let q = Field::Rationals;
        // (v + u) * (v - 1) and (v + u) * u
        let vu = Bpoly::new(q, vec![up(q, &[0, 1]), up(q, &[1])]);
        let a = Bpoly::new(q, vec![up(q, &[0, -1]), up(q, &[-1, 1]), up(q, &[1])]);
        let b = Bpoly::new(q, vec![up(q, &[0, 0, 1]), up(q, &[0, 1])]);
        let g = a.gcd(&b);
        // equal up to a unit
        assert_eq!(g.coeffs.len(), 2);
        let ratio = &g.coeffs[1].lc() / &vu.coeffs[1].lc();
        assert_eq!(g, vu.scale(&Upoly::constant(ratio)));
    }
}
