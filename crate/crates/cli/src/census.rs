//! Random-module census: ξ-profiles and class membership, in parallel.

use crate::commands::Output;
use crate::workspace::Workspace;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;
use xi_core::algebra::Algebra;
use xi_core::approx::membership;
use xi_core::corpus::{random_module, RandomShape};
use xi_core::invariants::{xi_sequence_with, XiOptions};
use xi_core::modules::Module;
use xi_core::{Error, Result};

const ATTEMPTS: usize = 200;

#[derive(Serialize, Clone, Debug)]
struct Row {
    index: usize,
    dim: usize,
    mu: usize,
    xi: Option<Vec<usize>>,
    limit: Option<usize>,
    certificate: Option<String>,
    /// `[in_A, in_E, in_H]` for n = 1, 2.
    membership: Vec<[bool; 3]>,
    note: Option<String>,
}

#[derive(Serialize, Debug)]
struct Summary {
    modules: usize,
    budget_exceeded: usize,
    monotone: usize,
    constant: usize,
    /// `(module index, n)` with `ξ(n) > ξ(n−1) > 0`.
    positive_jumps: Vec<(usize, usize)>,
}

/// Module `i` is drawn from its own stream, so the output does not depend
/// on scheduling.
fn draw(ring: &Arc<Algebra>, seed: u64, i: usize, dim_max: usize) -> Option<Arc<Module>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i as u64);
    let shape = RandomShape::for_ring(ring);
    (0..ATTEMPTS).map(|_| random_module(ring, shape, &mut rng)).find(|m| !m.is_zero() && m.dim() <= dim_max)
}

fn survey(ring: &Arc<Algebra>, seed: u64, i: usize, dim_max: usize, n_max: usize) -> Result<Row> {
    let Some(m) = draw(ring, seed, i, dim_max) else {
        let note = Some(format!("no nonzero module of dimension <= {dim_max} drawn"));
        return Ok(Row { index: i, dim: 0, mu: 0, xi: None, limit: None, certificate: None, membership: vec![], note });
    };
    let mut row = Row { index: i, dim: m.dim(), mu: m.mu(), xi: None, limit: None, certificate: None, membership: vec![], note: None };
    match xi_sequence_with(&m, XiOptions { n_max, ..XiOptions::default() }) {
        Ok(r) => {
            row.limit = Some(r.limit);
            row.certificate = Some(r.certificate.to_string());
            row.xi = Some(r.values);
        }
        Err(e @ Error::Budget { .. }) => row.note = Some(e.to_string()),
        Err(e) => return Err(e),
    }
    for n in 1..=2 {
        let r = membership(&m, n)?;
        row.membership.push([r.in_a, r.in_e, r.in_h]);
    }
    Ok(row)
}

fn summarize(rows: &[Row]) -> Summary {
    let mut s = Summary {
        modules: rows.len(),
        budget_exceeded: 0,
        monotone: 0,
        constant: 0,
        positive_jumps: Vec::new(),
    };
    for r in rows {
        let Some(xi) = &r.xi else {
            s.budget_exceeded += r.note.as_deref().map_or(0, |n| n.contains("budget") as usize);
            continue;
        };
        if xi.windows(2).all(|w| w[0] <= w[1]) {
            s.monotone += 1;
        }
        if xi.iter().all(|&v| v == xi[0]) {
            s.constant += 1;
        }
        for n in 1..xi.len() {
            if xi[n] > xi[n - 1] && xi[n - 1] > 0 {
                s.positive_jumps.push((r.index, n));
            }
        }
    }
    s
}

fn flags(f: &[bool; 3]) -> String {
    f.iter().zip(["A", "E", "H"]).map(|(&b, c)| if b { c } else { "-" }).collect()
}

pub fn run(ws: &Workspace, out: &Output, ring_ref: &str, count: usize, dim_max: usize, n_max: usize) -> Result<u8> {
    let ring = ws.ring(ring_ref, None)?;
    let rows: Vec<Row> =
        (0..count).into_par_iter().map(|i| survey(&ring, ws.seed, i, dim_max, n_max)).collect::<Result<_>>()?;
    let summary = summarize(&rows);
    println!("census of {count} modules over {ring_ref}, seed {}, dim <= {dim_max}, n <= {n_max}", ws.seed);
    println!("{:>4} {:>4} {:>3}  {:<28} {:<24} {:<4} {:<4}", "#", "dim", "mu", "xi", "certificate", "n=1", "n=2");
    for r in &rows {
        let xi = r.xi.as_ref().map_or_else(|| "-".to_string(), |v| format!("{v:?}"));
        let cert = r.certificate.clone().unwrap_or_else(|| r.note.clone().unwrap_or_default());
        let m: Vec<String> = r.membership.iter().map(flags).collect();
        println!(
            "{:>4} {:>4} {:>3}  {:<28} {:<24} {:<4} {:<4}",
            r.index,
            r.dim,
            r.mu,
            xi,
            cert,
            m.first().map_or("", String::as_str),
            m.get(1).map_or("", String::as_str)
        );
    }
    println!(
        "monotone {}/{}, constant {}, budget exceeded {}, jumps above a positive value {:?}",
        summary.monotone,
        summary.modules - summary.budget_exceeded,
        summary.constant,
        summary.budget_exceeded,
        summary.positive_jumps
    );
    out.emit(&serde_json::json!({ "ring": ring_ref, "seed": ws.seed, "rows": rows, "summary": summary }))?;
    Ok(0)
}
