//! Ideal arithmetic in the Cox ring: Buchberger's algorithm, reduced bases,
//! membership, intersection, colon/saturation and Hilbert function values.
//!
//! Intersections and saturations adjoin one auxiliary variable `t` and
//! eliminate it under a block order with `t` first. Internally polynomials
//! live in `k[x0, x1, y0, y1, t]`; everything handed back to callers is a
//! bihomogeneous [`BiPoly`].

use std::cmp::Ordering;
use std::fmt;

use crate::bipoly::{BiMonomial, BiPoly};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// Exponents of `(x0, x1, y0, y1, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Mono([u32; 5]);

impl Mono {
    fn from_bi(m: &BiMonomial) -> Mono {
        let [a, b, c, d] = m.0;
        Mono([a, b, c, d, 0])
    }

    fn to_bi(self) -> BiMonomial {
        let [a, b, c, d, _] = self.0;
        BiMonomial([a, b, c, d])
    }

    fn mul(&self, o: &Mono) -> Mono {
        Mono(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }

    fn divides(&self, o: &Mono) -> bool {
        (0..5).all(|i| self.0[i] <= o.0[i])
    }

    fn div(&self, o: &Mono) -> Mono {
        Mono(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }

    fn lcm(&self, o: &Mono) -> Mono {
        Mono(std::array::from_fn(|i| self.0[i].max(o.0[i])))
    }

    fn coprime(&self, o: &Mono) -> bool {
        (0..5).all(|i| self.0[i] == 0 || o.0[i] == 0)
    }

    fn t(&self) -> u32 {
        self.0[4]
    }
}

/// Monomial orders available to the engine.
///
/// Both restrict to graded reverse lexicographic order with
/// `x0 > x1 > y0 > y1` on the Cox ring; they differ only in how the auxiliary
/// variable `t` is ranked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// grevlex on `x0 > x1 > y0 > y1 > t`.
    #[default]
    GradedReverseLex,
    /// Block order: `t`-degree first, ties broken by grevlex on the rest.
    EliminateAux,
}

impl MonomialOrder {
    fn cmp(&self, a: &Mono, b: &Mono) -> Ordering {
        let grevlex = |a: &Mono, b: &Mono, n: usize| {
            let da: u32 = a.0[..n].iter().sum();
            let db: u32 = b.0[..n].iter().sum();
            da.cmp(&db).then_with(|| {
                for i in (0..n).rev() {
                    if a.0[i] != b.0[i] {
                        return b.0[i].cmp(&a.0[i]);
                    }
                }
                Ordering::Equal
            })
        };
        match self {
            MonomialOrder::GradedReverseLex => grevlex(a, b, 5),
            MonomialOrder::EliminateAux => a.t().cmp(&b.t()).then_with(|| grevlex(a, b, 4)),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::GradedReverseLex => "grevlex",
            MonomialOrder::EliminateAux => "eliminate-t",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sparse polynomial, terms sorted ascending so the leading term is last.
#[derive(Clone, Debug)]
struct Poly {
    terms: Vec<(Mono, Scalar)>,
}

impl Poly {
    fn from_terms(mut terms: Vec<(Mono, Scalar)>, order: MonomialOrder) -> Poly {
        terms.retain(|(_, c)| !c.is_zero());
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Poly { terms }
    }

    fn from_bipoly(p: &BiPoly, order: MonomialOrder) -> Poly {
        Poly::from_terms(
            p.terms()
                .map(|(m, c)| (Mono::from_bi(m), c.clone()))
                .collect(),
            order,
        )
    }

    fn to_bipoly(&self, field: Field) -> BiPoly {
        BiPoly::from_terms(
            field,
            self.terms.iter().map(|(m, c)| (m.to_bi(), c.clone())),
        )
        .expect("graded ideal operations keep generators bihomogeneous")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Mono, Scalar) {
        self.terms.last().expect("leading term of zero polynomial")
    }

    fn lm(&self) -> Mono {
        self.lead().0
    }

    fn monic(mut self) -> Poly {
        if let Some((_, c)) = self.terms.last() {
            let inv = c.inv().unwrap();
            for (_, v) in &mut self.terms {
                *v = &*v * &inv;
            }
        }
        self
    }

    fn has_aux(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.t() > 0)
    }

    /// `self - c * m * g`, merging two ascending term lists.
    fn sub_mul(&self, c: &Scalar, m: &Mono, g: &Poly, order: MonomialOrder) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g
            .terms
            .iter()
            .map(|(gm, gc)| (gm.mul(m), gc * c))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    let (bm, bc) = b.next().unwrap();
                    out.push((bm, -bc));
                }
                (Some((am, _)), Some((bm, _))) => match order.cmp(am, bm) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => {
                        let (bm, bc) = b.next().unwrap();
                        out.push((bm, -bc));
                    }
                    Ordering::Equal => {
                        let (am, ac) = a.next().unwrap();
                        let (_, bc) = b.next().unwrap();
                        let v = ac - &bc;
                        if !v.is_zero() {
                            out.push((*am, v));
                        }
                    }
                },
            }
        }
        Poly { terms: out }
    }

    fn mul_mono(&self, m: &Mono, c: &Scalar) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(a, v)| (a.mul(m), v * c)).collect(),
        }
    }
}

/// Full normal form of `p` modulo a list of monic polynomials.
fn normal_form(p: &Poly, basis: &[Poly], order: MonomialOrder) -> Poly {
    let mut p = p.clone();
    let mut rem: Vec<(Mono, Scalar)> = Vec::new();
    while let Some((lm, lc)) = p.terms.last().cloned() {
        match basis.iter().find(|g| g.lm().divides(&lm)) {
            Some(g) => {
                p = p.sub_mul(&lc, &lm.div(&g.lm()), g, order);
            }
            None => {
                p.terms.pop();
                rem.push((lm, lc));
            }
        }
    }
    rem.reverse();
    Poly { terms: rem }
}

fn s_polynomial(f: &Poly, g: &Poly, order: MonomialOrder) -> Poly {
    let l = f.lm().lcm(&g.lm());
    let one = f.lead().1.field().one();
    let a = f.mul_mono(&l.div(&f.lm()), &one);
    a.sub_mul(&one, &l.div(&g.lm()), g, order)
}

/// Reduced Gröbner basis of monic polynomials, ascending by leading monomial.
///
/// Pairs are processed by the normal strategy (smallest lcm first, ties by
/// index) with the product and chain criteria.
fn groebner(gens: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for g in gens {
        let r = normal_form(&g, &basis, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let k = basis.len();
        basis.push(r);
        pairs.extend((0..k).map(|i| (i, k)));
    }
    while !pairs.is_empty() {
        let idx = (0..pairs.len())
            .min_by(|&a, &b| {
                let (i, j) = pairs[a];
                let (k, l) = pairs[b];
                let la = basis[i].lm().lcm(&basis[j].lm());
                let lb = basis[k].lm().lcm(&basis[l].lm());
                order.cmp(&la, &lb).then((i, j).cmp(&(k, l)))
            })
            .unwrap();
        let (i, j) = pairs.swap_remove(idx);
        let (li, lj) = (basis[i].lm(), basis[j].lm());
        if li.coprime(&lj) {
            continue;
        }
        let lcm = li.lcm(&lj);
        let pending = |a: usize, b: usize| {
            let key = if a < b { (a, b) } else { (b, a) };
            pairs.contains(&key)
        };
        let chain = (0..basis.len()).any(|k| {
            k != i && k != j && basis[k].lm().divides(&lcm) && !pending(i, k) && !pending(j, k)
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let k = basis.len();
        basis.push(r);
        pairs.extend((0..k).map(|i| (i, k)));
    }
    reduce_basis(basis, order)
}

fn reduce_basis(mut basis: Vec<Poly>, order: MonomialOrder) -> Vec<Poly> {
    basis.sort_by(|a, b| order.cmp(&a.lm(), &b.lm()));
    let mut minimal: Vec<Poly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(&g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p.clone())
            .collect();
        reduced.push(normal_form(&minimal[k], &others, order).monic());
    }
    reduced
}

/// An ideal of the Cox ring given by bihomogeneous generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    field: Field,
    generators: Vec<BiPoly>,
}

impl Ideal {
    /// Drops zero generators and duplicates up to scaling.
    pub fn new(field: Field, generators: Vec<BiPoly>) -> Result<Ideal> {
        let mut seen: Vec<BiPoly> = Vec::new();
        let mut gens = Vec::new();
        for g in generators {
            if g.field() != field {
                return Err(Error::FieldMismatch(
                    field.to_string(),
                    g.field().to_string(),
                ));
            }
            if g.is_zero() {
                continue;
            }
            let key = g.monic();
            if !seen.contains(&key) {
                seen.push(key);
                gens.push(g);
            }
        }
        Ok(Ideal {
            field,
            generators: gens,
        })
    }

    pub fn zero(field: Field) -> Ideal {
        Ideal {
            field,
            generators: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[BiPoly] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The ideal generated by a reduced Gröbner basis of `self`.
    pub fn normalized(&self) -> Ideal {
        Ideal {
            field: self.field,
            generators: buchberger(self, MonomialOrder::GradedReverseLex).basis,
        }
    }

    fn polys(&self, order: MonomialOrder) -> Vec<Poly> {
        self.generators
            .iter()
            .map(|g| Poly::from_bipoly(g, order))
            .collect()
    }
}

/// A Gröbner basis tagged with the order it was computed in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub field: Field,
    pub basis: Vec<BiPoly>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<BiMonomial> {
        self.basis
            .iter()
            .map(|g| Poly::from_bipoly(g, self.order).lm().to_bi())
            .collect()
    }
}

/// Reduced Gröbner basis; deterministic for a given ideal and order.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder) -> GroebnerBasis {
    let basis = groebner(ideal.polys(order), order)
        .iter()
        .map(|p| p.to_bipoly(ideal.field))
        .collect();
    GroebnerBasis {
        field: ideal.field,
        basis,
        order,
        reduced: true,
    }
}

pub fn ideal_member(f: &BiPoly, g: &GroebnerBasis) -> bool {
    if f.is_zero() {
        return true;
    }
    let basis: Vec<Poly> = g
        .basis
        .iter()
        .map(|p| Poly::from_bipoly(p, g.order))
        .collect();
    normal_form(&Poly::from_bipoly(f, g.order), &basis, g.order).is_zero()
}

/// Equality of ideals, decided by comparing reduced bases.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> bool {
    i.field == j.field
        && buchberger(i, MonomialOrder::GradedReverseLex).basis
            == buchberger(j, MonomialOrder::GradedReverseLex).basis
}

fn aux_var(field: Field) -> Poly {
    Poly {
        terms: vec![(Mono([0, 0, 0, 0, 1]), field.one())],
    }
}

fn eliminate(gens: Vec<Poly>, field: Field) -> Ideal {
    let order = MonomialOrder::EliminateAux;
    let basis = groebner(gens, order);
    let generators = basis
        .iter()
        .filter(|p| !p.has_aux())
        .map(|p| p.to_bipoly(field))
        .collect();
    Ideal { field, generators }.normalized()
}

fn same_field(i: &Ideal, j: &Ideal) {
    assert_eq!(i.field, j.field, "ideal operation across different fields");
}

/// `I ∩ J` via elimination of `t` from `t·I + (1 − t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Ideal {
    same_field(i, j);
    if i.is_zero() || j.is_zero() {
        return Ideal::zero(i.field);
    }
    let order = MonomialOrder::EliminateAux;
    let field = i.field;
    let t = aux_var(field);
    let one = field.one();
    let mut gens: Vec<Poly> = i
        .polys(order)
        .iter()
        .map(|f| Poly::from_terms(f.mul_mono(&Mono([0, 0, 0, 0, 1]), &one).terms, order))
        .collect();
    for g in j.polys(order) {
        // (1 - t) g
        let tg = Poly::from_terms(g.mul_mono(&Mono([0, 0, 0, 0, 1]), &one).terms, order);
        let mut terms = g.terms.clone();
        terms.extend(tg.terms.into_iter().map(|(m, c)| (m, -c)));
        gens.push(Poly::from_terms(terms, order));
    }
    let _ = t;
    eliminate(gens, field)
}

/// `I : f^∞` via elimination of `t` from `I + ⟨t·f − 1⟩`.
pub fn saturate_by_element(i: &Ideal, f: &BiPoly) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::Precondition(
            "saturation by the zero polynomial".into(),
        ));
    }
    if f.is_unit() || i.is_zero() {
        return Ok(i.normalized());
    }
    let order = MonomialOrder::EliminateAux;
    let field = i.field;
    let mut terms: Vec<(Mono, Scalar)> = Poly::from_bipoly(f, order)
        .terms
        .into_iter()
        .map(|(m, c)| (m.mul(&Mono([0, 0, 0, 0, 1])), c))
        .collect();
    terms.push((Mono([0; 5]), -field.one()));
    let mut gens = i.polys(order);
    gens.push(Poly::from_terms(terms, order));
    Ok(eliminate(gens, field))
}

/// `I : J^∞ = ⋂_g (I : g^∞)` over the generators `g` of `J`.
pub fn saturate(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    same_field(i, j);
    if j.is_zero() {
        return Err(Error::Precondition("saturation by the zero ideal".into()));
    }
    let mut acc: Option<Ideal> = None;
    for g in j.generators() {
        let s = saturate_by_element(i, g)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s),
        });
    }
    Ok(acc.unwrap())
}

/// Exchanges two exponent slots; the result is bihomogeneous again only
/// once the slots are swapped back.
fn swap_slots(p: &Poly, a: usize, b: usize, order: MonomialOrder) -> Poly {
    Poly::from_terms(
        p.terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0;
                e.swap(a, b);
                (Mono(e), c.clone())
            })
            .collect(),
        order,
    )
}

/// Substitutes `x_a ↦ x_a + c·x_b`.
fn shear(p: &BiPoly, a: usize, b: usize, c: &Scalar) -> BiPoly {
    let field = p.field();
    let lin = BiPoly::var(field, a)
        .try_add(&BiPoly::var(field, b).scale(c))
        .expect("same field");
    let mut out = BiPoly::zero(field);
    for (m, v) in p.terms() {
        let mut rest = m.0;
        let e = std::mem::replace(&mut rest[a], 0);
        let term = lin.pow(e).mul_monomial(&BiMonomial(rest)).scale(v);
        out = out.try_add(&term).expect("same field");
    }
    out
}

/// `I : x_v^∞` for a variable `x_v`.
///
/// Bihomogeneous ideals are homogeneous for total degree, so in grevlex with
/// `x_v` smallest the basis elements divided by their largest `x_v` power
/// form a basis of the saturation. `x_v` is moved to the last slot (`y1`),
/// and moved back afterwards.
fn saturate_by_variable(i: &Ideal, v: usize) -> Ideal {
    let order = MonomialOrder::GradedReverseLex;
    let field = i.field;
    let swapped: Vec<Poly> = i
        .polys(order)
        .iter()
        .map(|g| swap_slots(g, v, 3, order))
        .collect();
    let generators = groebner(swapped, order)
        .iter()
        .map(|g| {
            let k = g.terms.iter().map(|(m, _)| m.0[3]).min().unwrap_or(0);
            let mut e = [0; 5];
            e[3] = k;
            let stripped = Poly {
                terms: g
                    .terms
                    .iter()
                    .map(|(m, c)| (m.div(&Mono(e)), c.clone()))
                    .collect(),
            };
            swap_slots(&stripped, v, 3, order).to_bipoly(field)
        })
        .collect();
    Ideal { field, generators }.normalized()
}

/// `I : ⟨x_a, x_b⟩^∞` as `(I : x_b^∞) ∩ (I : l^∞)` with `l = x_a + c·x_b`.
///
/// A prime avoiding `⟨x_a, x_b⟩` contains at most one of `x_b` and `l`, so
/// the intersection is exact for every `c`. When the two colon ideals already
/// agree, the intersection is skipped.
fn saturate_by_linear_pair(i: &Ideal, a: usize, b: usize) -> Ideal {
    let field = i.field;
    let first = saturate_by_variable(i, b);
    let c = field.one();
    let moved = Ideal {
        field,
        generators: i.generators.iter().map(|g| shear(g, a, b, &-&c)).collect(),
    };
    let back = saturate_by_variable(&moved, a);
    let second = Ideal {
        field,
        generators: back.generators.iter().map(|g| shear(g, a, b, &c)).collect(),
    }
    .normalized();
    if first == second {
        first
    } else {
        intersect(&first, &second)
    }
}

/// `I : B^∞` for the irrelevant ideal `B = ⟨x0,x1⟩ ∩ ⟨y0,y1⟩`, computed as
/// `(I : ⟨x0,x1⟩^∞) : ⟨y0,y1⟩^∞`.
pub fn saturate_by_irrelevant(i: &Ideal) -> Ideal {
    if i.is_zero() {
        return i.clone();
    }
    let step = saturate_by_linear_pair(i, 0, 1);
    saturate_by_linear_pair(&step, 2, 3)
}

/// The irrelevant ideal itself.
pub fn irrelevant_ideal(field: Field) -> Ideal {
    let gens = [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]
        .iter()
        .map(|e| BiPoly::monomial(BiMonomial(*e), field.one()))
        .collect();
    Ideal::new(field, gens).unwrap()
}

/// `dim_k (S/I)_(a,b)`: standard monomials of bidegree `(a,b)`.
pub fn hilbert_value(i: &Ideal, bidegree: (u32, u32)) -> u64 {
    let gb = buchberger(i, MonomialOrder::GradedReverseLex);
    let lms = gb.leading_monomials();
    BiMonomial::all_of_bidegree(bidegree.0, bidegree.1)
        .iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: Field = Field::Rationals;

    fn p(terms: &[(i64, [u32; 4])]) -> BiPoly {
        BiPoly::from_int_terms(Q, terms).unwrap()
    }

    fn mono(e: [u32; 4]) -> BiPoly {
        p(&[(1, e)])
    }

    fn ideal(gens: Vec<BiPoly>) -> Ideal {
        Ideal::new(Q, gens).unwrap()
    }

    const X0: [u32; 4] = [1, 0, 0, 0];
    const X1: [u32; 4] = [0, 1, 0, 0];
    const Y0: [u32; 4] = [0, 0, 1, 0];
    const Y1: [u32; 4] = [0, 0, 0, 1];

    fn ix() -> Ideal {
        ideal(vec![
            mono([1, 1, 0, 0]),
            mono([1, 0, 1, 0]),
            mono([0, 1, 0, 1]),
            mono([0, 0, 1, 1]),
        ])
    }

    #[test]
    fn buchberger_examples() {
        let g = buchberger(
            &ideal(vec![mono(X1), mono(Y0)]),
            MonomialOrder::GradedReverseLex,
        );
        assert_eq!(g.basis.len(), 2);
        let g = buchberger(
            &ideal(vec![mono([1, 0, 1, 0]), mono([0, 1, 0, 1])]),
            MonomialOrder::GradedReverseLex,
        );
        assert_eq!(g.basis.len(), 2);
        let g = buchberger(&ix(), MonomialOrder::GradedReverseLex);
        assert_eq!(g.basis.len(), 4);
        assert!(ix().generators().iter().all(|f| g.basis.contains(f)));
    }

    #[test]
    fn membership_examples() {
        let g = buchberger(
            &ideal(vec![mono([1, 0, 1, 0]), mono([0, 1, 0, 1])]),
            MonomialOrder::GradedReverseLex,
        );
        assert!(ideal_member(&mono([1, 1, 1, 0]), &g));
        assert!(!ideal_member(&mono([1, 1, 0, 0]), &g));
        assert!(ideal_member(&BiPoly::zero(Q), &g));
    }

    #[test]
    fn equality_examples() {
        assert!(ideal_equal(
            &ideal(vec![mono(X0), mono(Y0)]),
            &ideal(vec![mono(Y0), mono(X0)])
        ));
        let ci = ideal(vec![mono([1, 0, 1, 0]), mono([0, 1, 0, 1])]);
        assert!(!ideal_equal(&ci, &ix()));
        assert!(!ideal_equal(
            &ideal(vec![mono(X0)]),
            &ideal(vec![mono([2, 0, 0, 0])])
        ));
    }

    #[test]
    fn intersection_examples() {
        let a = ideal(vec![mono(X1), mono(Y0)]);
        let b = ideal(vec![mono(X0), mono(Y1)]);
        assert!(ideal_equal(&intersect(&a, &b), &ix()));
        assert!(ideal_equal(&intersect(&a, &a), &a));
        let c = intersect(&ideal(vec![mono(X0)]), &ideal(vec![mono(X1)]));
        assert!(ideal_equal(&c, &ideal(vec![mono([1, 1, 0, 0])])));
    }

    #[test]
    fn saturation_examples() {
        let ci = ideal(vec![mono([1, 0, 1, 0]), mono([0, 1, 0, 1])]);
        assert!(ideal_equal(&saturate_by_irrelevant(&ci), &ix()));
        assert!(ideal_equal(
            &saturate(&ci, &irrelevant_ideal(Q)).unwrap(),
            &ix()
        ));
        let x0 = ideal(vec![mono(X0)]);
        assert!(ideal_equal(&saturate_by_irrelevant(&x0), &x0));
        let emb = ideal(vec![mono([2, 0, 0, 0]), mono([1, 1, 0, 0])]);
        assert!(ideal_equal(&saturate_by_irrelevant(&emb), &x0));
        assert!(ideal_equal(&saturate_by_irrelevant(&ix()), &ix()));
        assert!(saturate(&x0, &Ideal::zero(Q)).is_err());
        // empty zero set; the colon by B^k stalls for k = 0, 1, 2
        let empty = ideal(vec![
            p(&[(3, [1, 0, 2, 0]), (5, [0, 1, 2, 0]), (7, [0, 1, 1, 1])]),
            mono(X0),
            mono([0, 0, 0, 2]),
        ]);
        assert!(ideal_equal(
            &saturate_by_irrelevant(&empty),
            &ideal(vec![BiPoly::one(Q)])
        ));
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_value(&Ideal::zero(Q), (2, 3)), 12);
        assert_eq!(hilbert_value(&ix(), (3, 3)), 2);
        assert_eq!(hilbert_value(&ideal(vec![BiPoly::one(Q)]), (1, 1)), 0);
    }

    #[test]
    fn elimination_order_is_grevlex_on_cox_ring() {
        let a = buchberger(&ix(), MonomialOrder::EliminateAux);
        let b = buchberger(&ix(), MonomialOrder::GradedReverseLex);
        assert_eq!(a.basis, b.basis);
    }

    fn small_poly(field: Field) -> impl Strategy<Value = BiPoly> {
        (0u32..3, 0u32..3, prop::collection::vec(-2i64..3, 9)).prop_map(move |(a, b, cs)| {
            let ms = BiMonomial::all_of_bidegree(a, b);
            BiPoly::from_terms(
                field,
                ms.into_iter()
                    .zip(cs)
                    .map(|(m, c)| (m, Scalar::from_i64(field, c))),
            )
            .unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn reduced_basis_is_order_independent(gens in prop::collection::vec(small_poly(Field::Prime(32003)), 1..4)) {
            let f = Field::Prime(32003);
            let mut rev = gens.clone();
            rev.reverse();
            let a = buchberger(&Ideal::new(f, gens).unwrap(), MonomialOrder::GradedReverseLex);
            let b = buchberger(&Ideal::new(f, rev).unwrap(), MonomialOrder::GradedReverseLex);
            prop_assert_eq!(a, b);
        }

        #[test]
        fn saturation_idempotent_and_monotone(gens in prop::collection::vec(small_poly(Field::Prime(32003)), 1..3)) {
            let f = Field::Prime(32003);
            let i = Ideal::new(f, gens).unwrap();
            let s = saturate_by_irrelevant(&i);
            prop_assert!(ideal_equal(&saturate_by_irrelevant(&s), &s));
            let gb = buchberger(&s, MonomialOrder::GradedReverseLex);
            prop_assert!(i.generators().iter().all(|g| ideal_member(g, &gb)));
        }

        #[test]
        fn variable_trick_matches_elimination(gens in prop::collection::vec(small_poly(Field::Prime(32003)), 1..4)) {
            let f = Field::Prime(32003);
            let i = Ideal::new(f, gens).unwrap();
            let mx = Ideal::new(f, vec![BiPoly::x0(f), BiPoly::x1(f)]).unwrap();
            let my = Ideal::new(f, vec![BiPoly::y0(f), BiPoly::y1(f)]).unwrap();
            let slow = saturate(&saturate(&i, &mx).unwrap(), &my).unwrap();
            prop_assert!(ideal_equal(&saturate_by_irrelevant(&i), &slow));
        }

        #[test]
        fn intersection_commutes(a in prop::collection::vec(small_poly(Field::Prime(32003)), 1..3),
                                 b in prop::collection::vec(small_poly(Field::Prime(32003)), 1..3),
                                 c in prop::collection::vec(small_poly(Field::Prime(32003)), 1..2)) {
            let f = Field::Prime(32003);
            let (a, b, c) = (Ideal::new(f, a).unwrap(), Ideal::new(f, b).unwrap(), Ideal::new(f, c).unwrap());
            prop_assert!(ideal_equal(&intersect(&a, &b), &intersect(&b, &a)));
            prop_assert!(ideal_equal(
                &intersect(&intersect(&a, &b), &c),
                &intersect(&a, &intersect(&b, &c))
            ));
        }
    }
}
