//! Brute-force cross-checks for the main engines. Both oracles avoid the
//! code paths they are meant to check: saturation is computed degreewise
//! from spanning sets and row reduction, and witnesses are searched for
//! over every admissible pair of bidegrees.

use std::collections::{BTreeMap, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bipoly::{BiMonomial, BiPoly};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::geometry::{forms_through, PointSet};
use crate::groebner::Ideal;
use crate::linalg::{reduce_against, Matrix};
use crate::vci::{bezout_count, random_combination, Bidegree, VciCertificate, VerifyMode};

/// `dim (S / (I : B^∞))_(a,b)` for every `(a,b)` up to a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturationTable {
    pub bound: Bidegree,
    pub dims: BTreeMap<Bidegree, u64>,
}

impl SaturationTable {
    pub fn get(&self, bidegree: Bidegree) -> Option<u64> {
        self.dims.get(&bidegree).copied()
    }
}

/// Row-reduced spanning set of `I_(a,b)`: every generator times every
/// monomial of the complementary bidegree.
struct GradedPiece {
    index: HashMap<BiMonomial, usize>,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl GradedPiece {
    fn new(ideal: &Ideal, (a, b): Bidegree) -> GradedPiece {
        let field = ideal.field();
        let monos = BiMonomial::all_of_bidegree(a, b);
        let index: HashMap<BiMonomial, usize> =
            monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut rows = Vec::new();
        for g in ideal.generators() {
            let (ga, gb) = g.bidegree().expect("nonzero generator");
            if ga > a || gb > b {
                continue;
            }
            for m in BiMonomial::all_of_bidegree(a - ga, b - gb) {
                rows.push(coefficient_vector(&g.mul_monomial(&m), &index, field));
            }
        }
        let mut matrix = Matrix::new(field, monos.len(), rows);
        let pivots = matrix.rref();
        GradedPiece {
            index,
            rows: matrix.rows,
            pivots,
        }
    }

    fn residue(&self, f: &BiPoly, field: Field) -> Vec<Scalar> {
        reduce_against(
            &self.rows,
            &self.pivots,
            &coefficient_vector(f, &self.index, field),
        )
    }
}

fn coefficient_vector(f: &BiPoly, index: &HashMap<BiMonomial, usize>, field: Field) -> Vec<Scalar> {
    let mut v = vec![field.zero(); index.len()];
    for (m, c) in f.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// Dimension of `{s ∈ S_(a,b) : s·M ∈ I for every monomial M of bidegree (k,k)}`.
/// The monomials of bidegree `(k,k)` generate `B^k`.
fn colon_dimension(ideal: &Ideal, (a, b): Bidegree, k: u32) -> usize {
    let field = ideal.field();
    let source = BiMonomial::all_of_bidegree(a, b);
    let piece = GradedPiece::new(ideal, (a + k, b + k));
    let multipliers = BiMonomial::all_of_bidegree(k, k);
    // Column j of the map holds the residues of source[j]·M for all M.
    let columns: Vec<Vec<Scalar>> = source
        .iter()
        .map(|s| {
            multipliers
                .iter()
                .flat_map(|m| piece.residue(&BiPoly::monomial(s.mul(m), field.one()), field))
                .collect()
        })
        .collect();
    let height = columns.first().map_or(0, |c| c.len());
    let rows: Vec<Vec<Scalar>> = (0..height)
        .map(|i| columns.iter().map(|c| c[i].clone()).collect())
        .collect();
    source.len() - Matrix::new(field, source.len(), rows).rank()
}

/// Degreewise saturation by the irrelevant ideal. The colon `I_(a,b) : B^k`
/// only grows with `k`, and it can stall for several steps before growing
/// again, so it is evaluated at the cap `k` directly; one more step must not
/// change it.
///
/// `bound` must be at least the sum of the generators' bidegrees plus
/// `(2, 2)`, and the larger entry of that requirement is the cap on `k`.
pub fn saturation_by_linear_algebra(ideal: &Ideal, bound: Bidegree) -> Result<SaturationTable> {
    let (sa, sb) = ideal
        .generators()
        .iter()
        .filter_map(|g| g.bidegree())
        .fold((0, 0), |(x, y), (a, b)| (x + a, y + b));
    let need = (sa + 2, sb + 2);
    if bound.0 < need.0 || bound.1 < need.1 {
        return Err(Error::BoundTooSmall(format!(
            "bound {bound:?} is below {need:?}"
        )));
    }
    let k_max = need.0.max(need.1);
    let mut dims = BTreeMap::new();
    for a in 0..=bound.0 {
        for b in 0..=bound.1 {
            let total = ((a + 1) * (b + 1)) as usize;
            if ideal.is_zero() {
                dims.insert((a, b), total as u64);
                continue;
            }
            let colon = colon_dimension(ideal, (a, b), k_max);
            if colon < total && colon_dimension(ideal, (a, b), k_max + 1) != colon {
                return Err(Error::BoundTooSmall(format!(
                    "colon in bidegree ({a},{b}) still growing at B^{k_max}"
                )));
            }
            dims.insert((a, b), (total - colon) as u64);
        }
    }
    Ok(SaturationTable { bound, dims })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCaps {
    /// Largest entry of either bidegree; `None` means `|X|`.
    pub max_component: Option<u32>,
    /// Random pairs tried per pair of bidegrees with nonzero form spaces.
    pub trials: usize,
    pub seed: u64,
}

impl Default for SearchCaps {
    fn default() -> Self {
        SearchCaps {
            max_component: None,
            trials: 3,
            seed: 0x0ac1_e000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessSearch {
    Found(VciCertificate),
    Exhausted { pairs: usize },
}

impl WitnessSearch {
    pub fn is_found(&self) -> bool {
        matches!(self, WitnessSearch::Found(_))
    }
}

/// Tries every unordered pair of bidegrees `(a,b), (c,d)` with
/// `ad + bc = |X|` and entries up to the cap, taking random members of the
/// spaces of forms through `X` and keeping the first pair the fast verifier
/// accepts. Pairs are visited in lexicographic order.
///
/// Pairs that work form an open subset of the product of the two form
/// spaces, so over a large field a few random draws find one when it exists.
pub fn exhaustive_witness_search(x: &PointSet, caps: &SearchCaps) -> WitnessSearch {
    let size = x.len() as u64;
    let cap = caps.max_component.unwrap_or(x.len() as u32);
    let mut rng = ChaCha8Rng::seed_from_u64(caps.seed);
    let mut spaces: HashMap<Bidegree, Vec<BiPoly>> = HashMap::new();
    let mut space = |d: Bidegree| {
        spaces
            .entry(d)
            .or_insert_with(|| forms_through(x.field(), x.points(), d))
            .clone()
    };
    let degrees: Vec<Bidegree> = (0..=cap)
        .flat_map(|a| (0..=cap).map(move |b| (a, b)))
        .filter(|&d| d != (0, 0))
        .collect();
    let mut pairs = 0;
    for (i, &df) in degrees.iter().enumerate() {
        for &dg in &degrees[i..] {
            if bezout_count(df, dg) != size {
                continue;
            }
            pairs += 1;
            let fs = space(df);
            if fs.is_empty() {
                continue;
            }
            let gs = space(dg);
            if gs.is_empty() {
                continue;
            }
            for _ in 0..caps.trials {
                let (Some(f), Some(g)) = (
                    random_combination(&fs, &mut rng),
                    random_combination(&gs, &mut rng),
                ) else {
                    continue;
                };
                let cert = VciCertificate::new(f, g, "EXHAUSTIVE_SEARCH");
                if let Some(c) = cert.verified(x, VerifyMode::Fast) {
                    return WitnessSearch::Found(c);
                }
            }
        }
    }
    WitnessSearch::Exhausted { pairs }
}
