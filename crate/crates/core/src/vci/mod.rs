//! Virtual complete intersections: certificates, verification, constructions,
//! refutations and classification of point sets.
//!
//! `X` is a VCI when `sat_B(⟨f, g⟩) = I_X` for two bihomogeneous forms.

mod analyze;
mod classify;
mod construct;
mod refute;

pub use analyze::{analyze, analyze_with, AnalyzeOptions};
pub use classify::{classify_ferrers, classify_few_rulings};
pub use construct::{
    construct_balanced_vci, construct_set_theoretic, MultiplicityMap, SetTheoreticVci,
};
pub use refute::{
    degree_candidates, degree_candidates_for, refute_cross, refute_gcd, refute_number_theory,
};

use std::fmt;

use rand::Rng;

use crate::bipoly::BiPoly;
use crate::geometry::{vanishing_ideal, Axis, BiProjPoint, PointSet, ProjPoint};
use crate::groebner::{ideal_equal, saturate_by_irrelevant, Ideal};

pub type Bidegree = (u32, u32);

/// `ad + bc`, the number of intersection points of coprime forms of
/// bidegrees `(a,b)` and `(c,d)` counted with multiplicity.
pub fn bezout_count(f: Bidegree, g: Bidegree) -> u64 {
    f.0 as u64 * g.1 as u64 + f.1 as u64 * g.0 as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum VerifyMode {
    /// Coprimality, vanishing on `X`, and the intersection count.
    #[default]
    Fast,
    /// Compares `sat_B(⟨f, g⟩)` with `I_X`.
    Saturation,
    Both,
}

impl VerifyMode {
    pub fn parse(s: &str) -> Option<VerifyMode> {
        match s {
            "fast" => Some(VerifyMode::Fast),
            "saturation" => Some(VerifyMode::Saturation),
            "both" => Some(VerifyMode::Both),
            _ => None,
        }
    }
}

/// Outcome of [`verify_vci`] with one line per check that ran.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verification {
    pub accepted: bool,
    pub trace: Vec<String>,
}

fn verify_fast(x: &PointSet, f: &BiPoly, g: &BiPoly, trace: &mut Vec<String>) -> bool {
    let (df, dg) = (f.bidegree().unwrap(), g.bidegree().unwrap());
    let h = f.gcd(g);
    let coprime = h.is_unit();
    if coprime {
        trace.push("fast: gcd(f,g) = 1".into());
    } else {
        trace.push(format!("fast: common factor {h}"));
    }
    let missed: Vec<&BiProjPoint> = x
        .points()
        .iter()
        .filter(|p| !f.evaluate(p).is_zero() || !g.evaluate(p).is_zero())
        .collect();
    if missed.is_empty() {
        trace.push(format!("fast: f and g vanish at all {} points", x.len()));
    } else {
        trace.push(format!(
            "fast: {} points not on V(f,g), first {}",
            missed.len(),
            missed[0]
        ));
    }
    let count = bezout_count(df, dg);
    let count_ok = count == x.len() as u64;
    trace.push(format!(
        "fast: bezout count {}*{} + {}*{} = {} {} |X| = {}",
        df.0,
        dg.1,
        df.1,
        dg.0,
        count,
        if count_ok { "==" } else { "!=" },
        x.len()
    ));
    coprime && missed.is_empty() && count_ok
}

fn verify_saturation(x: &PointSet, f: &BiPoly, g: &BiPoly, trace: &mut Vec<String>) -> bool {
    let fg = Ideal::new(x.field(), vec![f.clone(), g.clone()]).expect("same field");
    let sat = saturate_by_irrelevant(&fg);
    let ok = ideal_equal(&sat, &vanishing_ideal(x));
    trace.push(format!(
        "saturation: sat_B(<f,g>) {} I_X",
        if ok { "==" } else { "!=" }
    ));
    ok
}

/// Checks whether `(f, g)` cuts out exactly `X` after saturation.
///
/// A common factor, a wrong field or a zero form is a rejection recorded in
/// the trace.
pub fn verify_vci(x: &PointSet, f: &BiPoly, g: &BiPoly, mode: VerifyMode) -> Verification {
    let mut trace = Vec::new();
    if f.field() != x.field() || g.field() != x.field() {
        trace.push(format!("forms are not over {}", x.field()));
        return Verification {
            accepted: false,
            trace,
        };
    }
    if f.is_zero() || g.is_zero() {
        trace.push("zero form".into());
        return Verification {
            accepted: false,
            trace,
        };
    }
    let accepted = match mode {
        VerifyMode::Fast => verify_fast(x, f, g, &mut trace),
        VerifyMode::Saturation => verify_saturation(x, f, g, &mut trace),
        VerifyMode::Both => {
            let a = verify_fast(x, f, g, &mut trace);
            let b = verify_saturation(x, f, g, &mut trace);
            if a != b {
                trace.push("fast and saturation checks disagree".into());
            }
            a && b
        }
    };
    Verification { accepted, trace }
}

/// Twists of the Koszul complex `S ← S(−a,−b) ⊕ S(−c,−d) ← S(−a−c,−b−d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KoszulShape {
    pub start: (i64, i64),
    pub middle: [(i64, i64); 2],
    pub end: (i64, i64),
}

impl fmt::Display for KoszulShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [(a, b), (c, d)] = self.middle;
        write!(
            f,
            "S <- S({a},{b}) + S({c},{d}) <- S({},{})",
            self.end.0, self.end.1
        )
    }
}

/// Two forms witnessing that a point set is a VCI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VciCertificate {
    pub f: BiPoly,
    pub g: BiPoly,
    pub degrees: [Bidegree; 2],
    /// How the pair was found and which checks it passed.
    pub source: String,
    pub trace: Vec<String>,
}

impl VciCertificate {
    /// Panics on zero forms.
    pub fn new(f: BiPoly, g: BiPoly, source: impl Into<String>) -> VciCertificate {
        let degrees = [
            f.bidegree().expect("nonzero f"),
            g.bidegree().expect("nonzero g"),
        ];
        VciCertificate {
            f,
            g,
            degrees,
            source: source.into(),
            trace: Vec::new(),
        }
    }

    pub fn koszul_twists(&self) -> KoszulShape {
        koszul_shape(self)
    }

    pub fn bezout_count(&self) -> u64 {
        bezout_count(self.degrees[0], self.degrees[1])
    }

    pub fn transpose(&self) -> VciCertificate {
        let mut c =
            VciCertificate::new(self.f.transpose(), self.g.transpose(), self.source.clone());
        c.trace = self.trace.clone();
        c
    }

    pub(crate) fn verified(mut self, x: &PointSet, mode: VerifyMode) -> Option<VciCertificate> {
        let v = verify_vci(x, &self.f, &self.g, mode);
        self.trace.extend(v.trace);
        v.accepted.then_some(self)
    }
}

pub fn koszul_shape(cert: &VciCertificate) -> KoszulShape {
    let [(a, b), (c, d)] = cert.degrees;
    let (a, b, c, d) = (a as i64, b as i64, c as i64, d as i64);
    KoszulShape {
        start: (0, 0),
        middle: [(-a, -b), (-c, -d)],
        end: (-a - c, -b - d),
    }
}

/// The criterion cited by a negative verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    /// `|X| < mn` and some point lies on an `m`-point row and an `n`-point column.
    Cross,
    /// `|X| < mn` and `gcd(m, n) ∤ |X|`.
    Gcd,
    /// The forced degrees do not satisfy `dm + cn = |X|`.
    DegreeCandidates,
    /// Fewer line components available than maximal rulings: `d < s` or `c < t`.
    LineBudget,
    /// A non-maximal ruling carries more points than the residual form can cut.
    RulingGap,
    /// Ferrers diagram that is not a rectangle.
    Ferrers,
    TwoRulings,
    ThreeRulings,
    /// No pair of forms of the forced degrees cuts out `X`.
    ForcedDegreeSearch,
    /// No pair of forms of any admissible degrees cuts out `X`.
    DegreeSearch,
}

impl Criterion {
    pub fn name(&self) -> &'static str {
        match self {
            Criterion::Cross => "CROSS",
            Criterion::Gcd => "GCD",
            Criterion::DegreeCandidates => "DEGREE_CANDIDATES",
            Criterion::LineBudget => "LINE_BUDGET",
            Criterion::RulingGap => "RULING_GAP",
            Criterion::Ferrers => "FERRERS",
            Criterion::TwoRulings => "TWO_RULINGS",
            Criterion::ThreeRulings => "THREE_RULINGS",
            Criterion::ForcedDegreeSearch => "FORCED_DEGREE_SEARCH",
            Criterion::DegreeSearch => "DEGREE_SEARCH",
        }
    }

    pub fn parse(s: &str) -> Option<Criterion> {
        use Criterion::*;
        [
            Cross,
            Gcd,
            DegreeCandidates,
            LineBudget,
            RulingGap,
            Ferrers,
            TwoRulings,
            ThreeRulings,
            ForcedDegreeSearch,
            DegreeSearch,
        ]
        .into_iter()
        .find(|c| c.name() == s)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A ruling singled out by the ruling-gap condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapRuling {
    pub axis: Axis,
    pub coordinate: ProjPoint,
    /// Points on the ruling.
    pub count: usize,
    /// Points on it not covered by the forced line components of `g`.
    pub uncovered: usize,
}

/// The data a negative verdict rests on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Cross {
        m: usize,
        n: usize,
        size: usize,
        point: BiProjPoint,
        row_count: usize,
        col_count: usize,
    },
    Gcd {
        m: usize,
        n: usize,
        size: usize,
    },
    /// Forced degrees `(m,n)` for `f` and `(c,d)` for `g`; `s` maximal rows
    /// and `t` maximal columns.
    NumberTheory {
        m: usize,
        n: usize,
        size: usize,
        c: u32,
        d: u32,
        s: usize,
        t: usize,
        ruling: Option<GapRuling>,
    },
    Search {
        detail: String,
    },
}

impl Witness {
    /// Residual bidegree `(c − t, d − s)` of `g` after removing its forced
    /// line components.
    pub fn residual(&self) -> Option<(i64, i64)> {
        match self {
            Witness::NumberTheory { c, d, s, t, .. } => {
                Some((*c as i64 - *t as i64, *d as i64 - *s as i64))
            }
            _ => None,
        }
    }

    fn transpose(&self) -> Witness {
        match self.clone() {
            Witness::Cross {
                m,
                n,
                size,
                point,
                row_count,
                col_count,
            } => Witness::Cross {
                m: n,
                n: m,
                size,
                point: point.transpose(),
                row_count: col_count,
                col_count: row_count,
            },
            Witness::Gcd { m, n, size } => Witness::Gcd { m: n, n: m, size },
            Witness::NumberTheory {
                m,
                n,
                size,
                c,
                d,
                s,
                t,
                ruling,
            } => Witness::NumberTheory {
                m: n,
                n: m,
                size,
                c: d,
                d: c,
                s: t,
                t: s,
                ruling: ruling.map(|r| GapRuling {
                    axis: r.axis.other(),
                    ..r
                }),
            },
            w @ Witness::Search { .. } => w,
        }
    }
}

/// A negative verdict with the criterion it cites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub criterion: Criterion,
    pub witness: Witness,
}

impl Refutation {
    /// Re-checks the cited inequality or divisibility on the stored values.
    pub fn holds(&self) -> bool {
        use num_integer::Integer;
        match (&self.criterion, &self.witness) {
            (
                Criterion::Cross
                | Criterion::Ferrers
                | Criterion::TwoRulings
                | Criterion::ThreeRulings,
                Witness::Cross {
                    m,
                    n,
                    size,
                    row_count,
                    col_count,
                    ..
                },
            ) => size < &(m * n) && row_count == m && col_count == n,
            (Criterion::Gcd, Witness::Gcd { m, n, size }) => {
                size < &(m * n) && size % m.gcd(n) != 0
            }
            (
                Criterion::DegreeCandidates,
                Witness::NumberTheory {
                    m, n, size, c, d, ..
                },
            ) => *d as usize * m + *c as usize * n != *size,
            (Criterion::LineBudget, Witness::NumberTheory { c, d, s, t, .. }) => {
                (*d as usize) < *s || (*c as usize) < *t
            }
            (
                Criterion::RulingGap,
                w @ Witness::NumberTheory {
                    m,
                    n,
                    ruling: Some(r),
                    ..
                },
            ) => {
                let (px, py) = w.residual().unwrap();
                match r.axis {
                    Axis::Horizontal => r.count < *m && r.uncovered as i64 > px,
                    Axis::Vertical => r.count < *n && r.uncovered as i64 > py,
                }
            }
            (
                Criterion::ThreeRulings | Criterion::ForcedDegreeSearch | Criterion::DegreeSearch,
                Witness::Search { .. },
            ) => true,
            _ => false,
        }
    }

    pub fn transpose(&self) -> Refutation {
        Refutation {
            criterion: self.criterion,
            witness: self.witness.transpose(),
        }
    }
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Witness::Cross { m, n, size, point, .. } => write!(
                f,
                "{}: |X| = {size} < {} = m*n and {point} lies on an {m}-point row and an {n}-point column",
                self.criterion,
                m * n
            ),
            Witness::Gcd { m, n, size } => {
                write!(f, "{}: |X| = {size} < {} and gcd({m},{n}) does not divide {size}", self.criterion, m * n)
            }
            w @ Witness::NumberTheory { m, n, size, c, d, s, t, ruling } => {
                write!(
                    f,
                    "{}: m={m} n={n} |X|={size} (c,d)=({c},{d}) s={s} t={t} residual={:?}",
                    self.criterion,
                    w.residual().unwrap()
                )?;
                if let Some(r) = ruling {
                    let axis = match r.axis {
                        Axis::Horizontal => "y",
                        Axis::Vertical => "x",
                    };
                    write!(f, "; ruling {axis}={} has {} uncovered points", r.coordinate, r.uncovered)?;
                }
                Ok(())
            }
            Witness::Search { detail } => write!(f, "{}: {detail}", self.criterion),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VciVerdict {
    Vci(VciCertificate),
    NotVci(Refutation),
    /// Forced-structure analysis shows the configuration needs special
    /// coordinates, and these coordinates fail.
    CoordinateDependent(String),
    Undecided(String),
}

impl VciVerdict {
    pub fn status(&self) -> &'static str {
        match self {
            VciVerdict::Vci(_) => "VCI",
            VciVerdict::NotVci(_) => "NOT_VCI",
            VciVerdict::CoordinateDependent(_) => "COORDINATE_DEPENDENT",
            VciVerdict::Undecided(_) => "UNDECIDED",
        }
    }

    /// The construction or criterion behind the verdict.
    pub fn criterion(&self) -> String {
        match self {
            VciVerdict::Vci(c) => c.source.clone(),
            VciVerdict::NotVci(r) => r.criterion.name().to_string(),
            VciVerdict::CoordinateDependent(_) => "FORCED_STRUCTURE".into(),
            VciVerdict::Undecided(_) => "DEGREE_CAP".into(),
        }
    }

    pub fn is_vci(&self) -> bool {
        matches!(self, VciVerdict::Vci(_))
    }

    pub fn transpose(&self) -> VciVerdict {
        match self {
            VciVerdict::Vci(c) => VciVerdict::Vci(c.transpose()),
            VciVerdict::NotVci(r) => VciVerdict::NotVci(r.transpose()),
            other => other.clone(),
        }
    }
}

impl fmt::Display for VciVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VciVerdict::Vci(c) => write!(
                f,
                "VCI via {}: f = {} of degree {:?}, g = {} of degree {:?}",
                c.source, c.f, c.degrees[0], c.g, c.degrees[1]
            ),
            VciVerdict::NotVci(r) => write!(f, "NOT_VCI by {r}"),
            VciVerdict::CoordinateDependent(s) => write!(f, "COORDINATE_DEPENDENT: {s}"),
            VciVerdict::Undecided(s) => write!(f, "UNDECIDED: {s}"),
        }
    }
}

/// A random linear combination of `basis` with nonzero coefficients.
pub(crate) fn random_combination<R: Rng + ?Sized>(basis: &[BiPoly], rng: &mut R) -> Option<BiPoly> {
    let first = basis.first()?;
    let field = first.field();
    let mut acc = BiPoly::zero(field);
    for b in basis {
        acc = acc.try_add(&b.scale(&field.random_nonzero(rng))).ok()?;
    }
    (!acc.is_zero()).then_some(acc)
}
