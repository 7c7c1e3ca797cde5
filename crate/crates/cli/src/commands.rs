use crate::workspace::Workspace;
use crate::{ApproxKind, RingAction};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use xi_core::approx::{ab_approximation, fpd_hull, origin_extension, verify_ses, SesReport, ShortExactSeq};
use xi_core::invariants::{index as ring_index, xi_sequence_with, IndexVariant, XiOptions};
use xi_core::io::{parse_sequence_json, SequenceFile, XiReportFile};
use xi_core::{Error, Result};

/// Where JSON results go.
pub struct Output {
    json: Option<PathBuf>,
}

impl Output {
    pub fn new(json: Option<PathBuf>) -> Self {
        Output { json }
    }

    /// Write `v` to the `--json` path; `-` means standard output.
    pub fn emit(&self, v: &Value) -> Result<()> {
        let text = serde_json::to_string_pretty(v).expect("json serializes");
        match &self.json {
            Some(p) if p.as_os_str() == "-" => {
                println!("{text}");
                Ok(())
            }
            Some(p) => std::fs::write(p, text + "\n").map_err(|e| Error::Parse(format!("cannot write {}: {e}", p.display()))),
            None => Ok(()),
        }
    }
}

pub fn ring(ws: &Workspace, out: &Output, action: RingAction, reference: &str) -> Result<u8> {
    let r = ws.ring(reference, None)?;
    let socle = r.socle().dim();
    let info = json!({
        "ring": reference,
        "p": r.field().p(),
        "dim": r.dim(),
        "basis": r.names(),
        "socle_dim": socle,
        "gorenstein": r.is_gorenstein(),
        "loewy_length": r.loewy_length(),
    });
    match action {
        RingAction::Check => println!("{reference}: valid artinian local algebra of dimension {}", r.dim()),
        RingAction::Info => {
            println!("ring          {reference}");
            println!("p             {}", r.field().p());
            println!("dim           {}", r.dim());
            println!("basis         {}", r.names().join(" "));
            println!("socle dim     {socle} (type {socle})");
            println!("Gorenstein    {}", r.is_gorenstein());
            println!("Loewy length  {}", r.loewy_length());
        }
    }
    out.emit(&info)?;
    Ok(0)
}

pub fn xi(ws: &Workspace, out: &Output, ring: Option<&str>, module: &str, n: Option<usize>, max: Option<usize>) -> Result<u8> {
    let (m, _) = ws.module(module, ring)?;
    let n_max = match (n, max) {
        (Some(n), _) => n,
        (None, Some(max)) => max,
        (None, None) => return Err(Error::Parse("give --n N or --seq --max N".into())),
    };
    let report = xi_sequence_with(&m, XiOptions { n_max, ..XiOptions::default() })?;
    match n {
        Some(n) => println!("xi({n}) = {}", report.values[n]),
        None => {
            println!("{:>4} {:>6}", "n", "xi");
            for (i, v) in report.values.iter().enumerate() {
                println!("{i:>4} {v:>6}");
            }
            let bound = if report.limit_is_exact() { "" } else { " (lower bound)" };
            println!("limit {}{bound}, certificate {}, mu {}", report.limit, report.certificate, report.mu);
        }
    }
    out.emit(&serde_json::to_value(XiReportFile::new(module, &report)).expect("report serializes"))?;
    Ok(0)
}

fn print_report(seq: &ShortExactSeq, rep: &SesReport) {
    println!("sequence {}: 0 -> left -> mid -> right -> 0", seq.kind);
    for (name, x) in [("left", &seq.left), ("mid", &seq.mid), ("right", &seq.right)] {
        println!("  {name:<6} dim {:>4}  mu {:>3}  free rank {:>3}", x.dim(), x.mu(), x.free_rank());
    }
    for c in &rep.clauses {
        println!("  [{}] {:<26} {}", if c.holds { "pass" } else { "FAIL" }, c.name, c.detail);
    }
}

pub fn approx(
    ws: &Workspace,
    out: &Output,
    kind: ApproxKind,
    ring: Option<&str>,
    module: &str,
    n: usize,
    minimize: bool,
) -> Result<u8> {
    let (m, ring_ref) = ws.module(module, ring)?;
    let seq = match kind {
        ApproxKind::Ab => ab_approximation(&m, n, minimize)?,
        ApproxKind::Origin => origin_extension(&m, n)?,
        ApproxKind::Hull => fpd_hull(&m, n, minimize)?,
    };
    let rep = verify_ses(&seq);
    println!("seed {}", ws.seed);
    print_report(&seq, &rep);
    if let ApproxKind::Hull = kind {
        println!("mu(Y) - mu(X) = {}", seq.mid.mu() as i64 - seq.right.mu() as i64);
    }
    out.emit(&serde_json::to_value(SequenceFile::from_seq(&seq, &ring_ref)).expect("sequence serializes"))?;
    Ok(if rep.all_pass() { 0 } else { 1 })
}

pub fn verify(ws: &Workspace, out: &Output, path: &Path) -> Result<u8> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let seq = parse_sequence_json(&text, |r| ws.ring(r, path.parent()))?;
    let rep = verify_ses(&seq);
    print_report(&seq, &rep);
    let clauses: Vec<Value> =
        rep.clauses.iter().map(|c| json!({"name": c.name, "holds": c.holds, "detail": c.detail})).collect();
    out.emit(&json!({"kind": seq.kind.to_string(), "all_pass": rep.all_pass(), "clauses": clauses}))?;
    Ok(if rep.all_pass() { 0 } else { 1 })
}

pub fn index(ws: &Workspace, out: &Output, reference: &str) -> Result<u8> {
    let r = ws.ring(reference, None)?;
    let rep = ring_index(&r)?;
    let label = match rep.variant {
        IndexVariant::Delta => "delta",
        IndexVariant::Xi => "xi(0)",
    };
    for (n, v) in &rep.values {
        println!("{label}(R/m^{n}) = {v}");
    }
    println!("index = {}", rep.index);
    out.emit(&json!({"ring": reference, "index": rep.index, "variant": label, "values": rep.values}))?;
    Ok(0)
}
