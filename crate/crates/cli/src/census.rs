//! Verdict table over all configurations that fit in a small grid.

use std::collections::BTreeMap;
use std::io;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vci_core::{
    analyze, configuration_of, BiProjPoint, Configuration, Field, PointSet, ProjPoint, Scalar,
};

fn distinct(field: Field, count: usize, rng: &mut ChaCha8Rng) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = Vec::with_capacity(count);
    while out.len() < count {
        let s = field.random(rng);
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

fn counts(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Every nonempty subset of the `rows × cols` grid is placed on random
/// coordinates; one representative per canonical configuration is
/// analyzed. Rows go to stdout as CSV, sorted by size and configuration id,
/// and verdict totals go to stderr.
pub fn run(
    field: Field,
    rows: usize,
    cols: usize,
    seed: u64,
) -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let xs = distinct(field, cols, &mut rng);
    let ys = distinct(field, rows, &mut rng);
    let cells = rows * cols;
    let mut seen: BTreeMap<(usize, String), (Configuration, PointSet)> = BTreeMap::new();
    for mask in 1u32..(1 << cells) {
        let pts: Vec<BiProjPoint> = (0..cells)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| {
                BiProjPoint::new(
                    ProjPoint::affine(xs[i % cols].clone()),
                    ProjPoint::affine(ys[i / cols].clone()),
                )
                .expect("same field")
            })
            .collect();
        let x = PointSet::new(field, pts)?;
        let config = configuration_of(&x);
        seen.entry((x.len(), config.id())).or_insert((config, x));
    }
    let mut out = csv::Writer::from_writer(io::stdout());
    out.write_record([
        "configuration-id",
        "row_counts",
        "col_counts",
        "|X|",
        "m",
        "n",
        "verdict",
        "criterion",
    ])?;
    let mut totals: BTreeMap<&'static str, usize> = BTreeMap::new();
    for ((size, id), (config, x)) in &seen {
        let v = analyze(x);
        *totals.entry(v.status()).or_default() += 1;
        out.write_record([
            id.clone(),
            counts(&config.row_counts),
            counts(&config.col_counts),
            size.to_string(),
            config.m.to_string(),
            config.n.to_string(),
            v.status().to_string(),
            v.criterion(),
        ])?;
    }
    out.flush()?;
    eprintln!(
        "{} configurations on a {rows}x{cols} grid over {field}",
        seen.len()
    );
    for (status, k) in totals {
        eprintln!("{status}: {k}");
    }
    Ok(())
}
