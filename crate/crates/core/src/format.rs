//! JSON documents for point sets, ideals, Gröbner bases, certificates and
//! verdicts.
//!
//! Scalars are strings (`"p/q"`, `"p"`, or a residue for `F_p`); the field
//! is declared once per document as `"QQ"` or `"GF(p)"`. A polynomial is a
//! list of `{"coeff", "exp": [e_x0, e_x1, e_y0, e_y1]}` in ascending term
//! order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bipoly::{BiMonomial, BiPoly};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::geometry::{Axis, BiProjPoint, PointSet, ProjPoint};
use crate::groebner::{GroebnerBasis, Ideal, MonomialOrder};
use crate::vci::{
    Criterion, GapRuling, MultiplicityMap, Refutation, SetTheoreticVci, VciCertificate, VciVerdict,
    Verification, Witness,
};

/// A value with a self-describing JSON form.
pub trait JsonDoc: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value) -> Result<Self>;

    fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize")
    }

    fn parse_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_json(&v)
    }
}

fn decode<T: for<'de> Deserialize<'de>>(v: &Value) -> Result<T> {
    T::deserialize(v).map_err(|e| Error::Format(e.to_string()))
}

fn encode<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("wire types serialize")
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exp: [u32; 4],
}

type PolyJson = Vec<TermJson>;
type PointJson = [[String; 2]; 2];

fn poly_wire(f: &BiPoly) -> PolyJson {
    f.terms()
        .map(|(m, c)| TermJson {
            coeff: c.to_string(),
            exp: m.0,
        })
        .collect()
}

fn poly_unwire(field: Field, terms: &PolyJson) -> Result<BiPoly> {
    let parsed = terms
        .iter()
        .map(|t| Ok((BiMonomial(t.exp), Scalar::parse(field, &t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    BiPoly::from_terms(field, parsed)
}

pub fn poly_to_json(f: &BiPoly) -> Value {
    encode(&poly_wire(f))
}

pub fn poly_from_json(field: Field, v: &Value) -> Result<BiPoly> {
    poly_unwire(field, &decode(v)?)
}

fn point_wire(p: &BiProjPoint) -> PointJson {
    let [a, b, c, d] = p.coords();
    [
        [a.to_string(), b.to_string()],
        [c.to_string(), d.to_string()],
    ]
}

fn proj_unwire(field: Field, c: &[String; 2]) -> Result<ProjPoint> {
    ProjPoint::new(Scalar::parse(field, &c[0])?, Scalar::parse(field, &c[1])?)
}

fn point_unwire(field: Field, p: &PointJson) -> Result<BiProjPoint> {
    BiProjPoint::new(proj_unwire(field, &p[0])?, proj_unwire(field, &p[1])?)
}

fn field_of(v: &Value) -> Result<Field> {
    let s = v
        .get("field")
        .and_then(Value::as_str)
        .ok_or_else(|| Error::Format("missing \"field\"".into()))?;
    Field::parse(s)
}

#[derive(Serialize, Deserialize)]
struct PointSetJson {
    field: String,
    points: Vec<PointJson>,
}

impl JsonDoc for PointSet {
    fn to_json(&self) -> Value {
        encode(&PointSetJson {
            field: self.field().to_string(),
            points: self.points().iter().map(point_wire).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let field = field_of(v)?;
        let doc: PointSetJson = decode(v)?;
        let pts = doc
            .points
            .iter()
            .map(|p| point_unwire(field, p))
            .collect::<Result<Vec<_>>>()?;
        PointSet::new(field, pts)
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    field: String,
    generators: Vec<PolyJson>,
}

impl JsonDoc for Ideal {
    fn to_json(&self) -> Value {
        encode(&IdealJson {
            field: self.field().to_string(),
            generators: self.generators().iter().map(poly_wire).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let field = field_of(v)?;
        let doc: IdealJson = decode(v)?;
        let gens = doc
            .generators
            .iter()
            .map(|g| poly_unwire(field, g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(field, gens)
    }
}

#[derive(Serialize, Deserialize)]
struct GroebnerJson {
    field: String,
    order: String,
    reduced: bool,
    basis: Vec<PolyJson>,
}

impl JsonDoc for GroebnerBasis {
    fn to_json(&self) -> Value {
        encode(&GroebnerJson {
            field: self.field.to_string(),
            order: self.order.name().to_string(),
            reduced: self.reduced,
            basis: self.basis.iter().map(poly_wire).collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let field = field_of(v)?;
        let doc: GroebnerJson = decode(v)?;
        let order = [MonomialOrder::GradedReverseLex, MonomialOrder::EliminateAux]
            .into_iter()
            .find(|o| o.name() == doc.order)
            .ok_or_else(|| Error::Format(format!("unknown order {:?}", doc.order)))?;
        let basis = doc
            .basis
            .iter()
            .map(|g| poly_unwire(field, g))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroebnerBasis {
            field,
            basis,
            order,
            reduced: doc.reduced,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    field: String,
    f: PolyJson,
    g: PolyJson,
    degrees: [[u32; 2]; 2],
    /// `S`, the two middle twists, and the last twist; ignored on input.
    #[serde(default)]
    koszul_twists: Vec<[i64; 2]>,
    #[serde(default)]
    source: String,
    #[serde(default)]
    trace: Vec<String>,
}

fn certificate_wire(c: &VciCertificate) -> CertificateJson {
    let k = c.koszul_twists();
    CertificateJson {
        field: c.f.field().to_string(),
        f: poly_wire(&c.f),
        g: poly_wire(&c.g),
        degrees: c.degrees.map(|(a, b)| [a, b]),
        koszul_twists: [k.start, k.middle[0], k.middle[1], k.end]
            .iter()
            .map(|&(a, b)| [a, b])
            .collect(),
        source: c.source.clone(),
        trace: c.trace.clone(),
    }
}

fn certificate_unwire(doc: &CertificateJson) -> Result<VciCertificate> {
    let field = Field::parse(&doc.field)?;
    let f = poly_unwire(field, &doc.f)?;
    let g = poly_unwire(field, &doc.g)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::Format("certificate with a zero form".into()));
    }
    let mut cert = VciCertificate::new(f, g, doc.source.clone());
    if cert.degrees != doc.degrees.map(|[a, b]| (a, b)) {
        return Err(Error::Format(format!(
            "declared degrees {:?} do not match the forms {:?}",
            doc.degrees, cert.degrees
        )));
    }
    cert.trace = doc.trace.clone();
    Ok(cert)
}

impl JsonDoc for VciCertificate {
    fn to_json(&self) -> Value {
        encode(&certificate_wire(self))
    }

    fn from_json(v: &Value) -> Result<Self> {
        certificate_unwire(&decode(v)?)
    }
}

#[derive(Serialize, Deserialize)]
struct MultiplicityJson {
    point: PointJson,
    multiplicity: u32,
}

#[derive(Serialize, Deserialize)]
struct SetTheoreticJson {
    field: String,
    f: PolyJson,
    g: PolyJson,
    multiplicities: Vec<MultiplicityJson>,
}

impl JsonDoc for SetTheoreticVci {
    fn to_json(&self) -> Value {
        encode(&SetTheoreticJson {
            field: self.f.field().to_string(),
            f: poly_wire(&self.f),
            g: poly_wire(&self.g),
            multiplicities: self
                .multiplicities
                .0
                .iter()
                .map(|(p, &k)| MultiplicityJson {
                    point: point_wire(p),
                    multiplicity: k,
                })
                .collect(),
        })
    }

    fn from_json(v: &Value) -> Result<Self> {
        let field = field_of(v)?;
        let doc: SetTheoreticJson = decode(v)?;
        let mut map = BTreeMap::new();
        for m in &doc.multiplicities {
            map.insert(point_unwire(field, &m.point)?, m.multiplicity);
        }
        Ok(SetTheoreticVci {
            f: poly_unwire(field, &doc.f)?,
            g: poly_unwire(field, &doc.g)?,
            multiplicities: MultiplicityMap(map),
        })
    }
}

#[derive(Serialize, Deserialize)]
struct GapJson {
    axis: String,
    coordinate: [String; 2],
    count: usize,
    uncovered: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum WitnessJson {
    Cross {
        m: usize,
        n: usize,
        size: usize,
        point: PointJson,
        row_count: usize,
        col_count: usize,
    },
    Gcd {
        m: usize,
        n: usize,
        size: usize,
    },
    NumberTheory {
        m: usize,
        n: usize,
        size: usize,
        c: u32,
        d: u32,
        s: usize,
        t: usize,
        residual: [i64; 2],
        ruling: Option<GapJson>,
    },
    Search {
        detail: String,
    },
}

fn axis_name(a: Axis) -> &'static str {
    match a {
        Axis::Vertical => "vertical",
        Axis::Horizontal => "horizontal",
    }
}

fn witness_wire(w: &Witness) -> WitnessJson {
    match w {
        Witness::Cross {
            m,
            n,
            size,
            point,
            row_count,
            col_count,
        } => WitnessJson::Cross {
            m: *m,
            n: *n,
            size: *size,
            point: point_wire(point),
            row_count: *row_count,
            col_count: *col_count,
        },
        Witness::Gcd { m, n, size } => WitnessJson::Gcd {
            m: *m,
            n: *n,
            size: *size,
        },
        Witness::NumberTheory {
            m,
            n,
            size,
            c,
            d,
            s,
            t,
            ruling,
        } => {
            let (rx, ry) = w.residual().expect("number-theory witness");
            WitnessJson::NumberTheory {
                m: *m,
                n: *n,
                size: *size,
                c: *c,
                d: *d,
                s: *s,
                t: *t,
                residual: [rx, ry],
                ruling: ruling.as_ref().map(|r| {
                    let [a, b] = r.coordinate.coords();
                    GapJson {
                        axis: axis_name(r.axis).into(),
                        coordinate: [a.to_string(), b.to_string()],
                        count: r.count,
                        uncovered: r.uncovered,
                    }
                }),
            }
        }
        Witness::Search { detail } => WitnessJson::Search {
            detail: detail.clone(),
        },
    }
}

fn witness_unwire(field: Field, w: WitnessJson) -> Result<Witness> {
    Ok(match w {
        WitnessJson::Cross {
            m,
            n,
            size,
            point,
            row_count,
            col_count,
        } => Witness::Cross {
            m,
            n,
            size,
            point: point_unwire(field, &point)?,
            row_count,
            col_count,
        },
        WitnessJson::Gcd { m, n, size } => Witness::Gcd { m, n, size },
        WitnessJson::NumberTheory {
            m,
            n,
            size,
            c,
            d,
            s,
            t,
            ruling,
            ..
        } => {
            let ruling = match ruling {
                None => None,
                Some(r) => Some(GapRuling {
                    axis: match r.axis.as_str() {
                        "vertical" => Axis::Vertical,
                        "horizontal" => Axis::Horizontal,
                        other => return Err(Error::Format(format!("unknown axis {other:?}"))),
                    },
                    coordinate: proj_unwire(field, &r.coordinate)?,
                    count: r.count,
                    uncovered: r.uncovered,
                }),
            };
            Witness::NumberTheory {
                m,
                n,
                size,
                c,
                d,
                s,
                t,
                ruling,
            }
        }
        WitnessJson::Search { detail } => Witness::Search { detail },
    })
}

#[derive(Serialize, Deserialize)]
struct VerdictJson {
    status: String,
    criterion: String,
    field: String,
    #[serde(default)]
    witness: Option<WitnessJson>,
    #[serde(default)]
    certificate: Option<CertificateJson>,
    #[serde(default)]
    detail: Option<String>,
}

/// Verdicts carry the field of the analyzed set, which the witness points
/// are read in.
pub fn verdict_to_json(v: &VciVerdict, field: Field) -> Value {
    let mut doc = VerdictJson {
        status: v.status().into(),
        criterion: v.criterion(),
        field: field.to_string(),
        witness: None,
        certificate: None,
        detail: None,
    };
    match v {
        VciVerdict::Vci(c) => doc.certificate = Some(certificate_wire(c)),
        VciVerdict::NotVci(r) => doc.witness = Some(witness_wire(&r.witness)),
        VciVerdict::CoordinateDependent(s) | VciVerdict::Undecided(s) => {
            doc.detail = Some(s.clone())
        }
    }
    encode(&doc)
}

pub fn verdict_from_json(v: &Value) -> Result<VciVerdict> {
    let field = field_of(v)?;
    let doc: VerdictJson = decode(v)?;
    let missing = |what: &str| Error::Format(format!("{} verdict without {what}", doc.status));
    match doc.status.as_str() {
        "VCI" => Ok(VciVerdict::Vci(certificate_unwire(
            doc.certificate
                .as_ref()
                .ok_or_else(|| missing("certificate"))?,
        )?)),
        "NOT_VCI" => {
            let criterion = Criterion::parse(&doc.criterion)
                .ok_or_else(|| Error::Format(format!("unknown criterion {:?}", doc.criterion)))?;
            let witness = witness_unwire(field, doc.witness.ok_or_else(|| missing("witness"))?)?;
            Ok(VciVerdict::NotVci(Refutation { criterion, witness }))
        }
        "COORDINATE_DEPENDENT" => Ok(VciVerdict::CoordinateDependent(
            doc.detail.clone().ok_or_else(|| missing("detail"))?,
        )),
        "UNDECIDED" => Ok(VciVerdict::Undecided(
            doc.detail.clone().ok_or_else(|| missing("detail"))?,
        )),
        other => Err(Error::Format(format!("unknown status {other:?}"))),
    }
}

pub fn verification_to_json(v: &Verification) -> Value {
    serde_json::json!({ "accepted": v.accepted, "trace": v.trace })
}
