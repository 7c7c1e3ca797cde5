//! JSON formats for rings, modules, ξ-reports and short exact sequences.
//!
//! Modules are written as minimal presentations. Reading one back gives the
//! cokernel in a fixed basis, so sequence matrices are stored in the bases
//! of the re-read modules and survive a round trip unchanged.

use crate::algebra::{parse_monomial, Algebra};
use crate::approx::{SeqKind, ShortExactSeq};
use crate::error::{Error, Result};
use crate::exactla::{Matrix, PrimeField};
use crate::invariants::{Certificate, XiReport};
use crate::modules::{Module, Morphism, RingMatrix};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::sync::Arc;

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct RingFile {
    pub p: u32,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<String>>,
}

impl RingFile {
    pub fn build(&self) -> Result<Arc<Algebra>> {
        let field = PrimeField::new(self.p)?;
        let missing = |what: &str| Error::Parse(format!("{} ring needs \"{what}\"", self.kind));
        match self.kind.as_str() {
            "structure_constants" => {
                let basis = self.basis.clone().ok_or_else(|| missing("basis"))?;
                let table = self.table.clone().ok_or_else(|| missing("table"))?;
                Algebra::from_structure_constants(field, basis, table)
            }
            "monomial_quotient" => {
                let vars = self.vars.clone().ok_or_else(|| missing("vars"))?;
                let rels = self.relations.as_ref().ok_or_else(|| missing("relations"))?;
                let rels = rels.iter().map(|r| parse_monomial(&vars, r)).collect::<Result<Vec<_>>>()?;
                Algebra::monomial_quotient(field, &vars, &rels)
            }
            k => Err(Error::Parse(format!("unknown ring kind {k:?}"))),
        }
    }

    /// Structure-constant form of any ring.
    pub fn from_algebra(r: &Algebra) -> Self {
        RingFile {
            p: r.field().p(),
            kind: "structure_constants".into(),
            basis: Some(r.names().to_vec()),
            table: Some(r.table().clone()),
            vars: None,
            relations: None,
        }
    }
}

pub fn parse_ring_json(text: &str) -> Result<Arc<Algebra>> {
    serde_json::from_str::<RingFile>(text).map_err(parse_err)?.build()
}

pub fn ring_to_json(r: &Algebra) -> Value {
    serde_json::to_value(RingFile::from_algebra(r)).expect("ring file serializes")
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct ModuleFile {
    pub ring: String,
    pub presentation: Vec<Vec<String>>,
}

impl ModuleFile {
    pub fn build(&self, ring: &Arc<Algebra>) -> Result<Arc<Module>> {
        let p = RingMatrix::from_strings(ring, &self.presentation, None)?;
        Ok(Module::from_presentation(&p))
    }

    /// The minimal presentation of `m`, with the isomorphism from the module
    /// that [`ModuleFile::build`] returns onto `m`.
    pub fn from_module(m: &Arc<Module>, ring_ref: &str) -> (Self, Morphism) {
        let (_, iso) = m.presented();
        let presentation = m.minimal_presentation().to_strings();
        (ModuleFile { ring: ring_ref.to_string(), presentation }, iso)
    }
}

/// Parse a module file; `resolve` maps the ring reference to a ring.
pub fn parse_module_json(text: &str, resolve: impl Fn(&str) -> Result<Arc<Algebra>>) -> Result<Arc<Module>> {
    let f: ModuleFile = serde_json::from_str(text).map_err(parse_err)?;
    f.build(&resolve(&f.ring)?)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct XiReportFile {
    pub module: String,
    pub xi: Vec<usize>,
    pub limit: usize,
    pub certificate: String,
    pub mu: usize,
}

impl XiReportFile {
    pub fn new(module: &str, r: &XiReport) -> Self {
        XiReportFile {
            module: module.to_string(),
            xi: r.values.clone(),
            limit: r.limit,
            certificate: r.certificate.to_string(),
            mu: r.mu,
        }
    }

    pub fn report(&self) -> Result<XiReport> {
        let certificate: Certificate = self.certificate.parse()?;
        Ok(XiReport { mu: self.mu, values: self.xi.clone(), limit: self.limit, certificate })
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct SequenceFile {
    pub kind: String,
    pub n: usize,
    pub ring: String,
    pub left: ModuleFile,
    pub mid: ModuleFile,
    pub right: ModuleFile,
    /// The module being approximated.
    pub base: ModuleFile,
    pub inj: Vec<Vec<u32>>,
    pub surj: Vec<Vec<u32>>,
}

fn transport(f: &Morphism, src: &Morphism, tgt: &Morphism) -> Matrix {
    let inv = tgt.matrix().inverse().expect("presentation isomorphism is invertible");
    inv.mul(f.matrix()).mul(src.matrix())
}

impl SequenceFile {
    pub fn from_seq(seq: &ShortExactSeq, ring_ref: &str) -> Self {
        let (left, il) = ModuleFile::from_module(&seq.left, ring_ref);
        let (mid, im) = ModuleFile::from_module(&seq.mid, ring_ref);
        let (right, ir) = ModuleFile::from_module(&seq.right, ring_ref);
        let (base, _) = ModuleFile::from_module(&seq.base, ring_ref);
        SequenceFile {
            kind: seq.kind.tag().to_string(),
            n: seq.kind.n(),
            ring: ring_ref.to_string(),
            left,
            mid,
            right,
            base,
            inj: transport(&seq.inj, &il, &im).to_rows(),
            surj: transport(&seq.surj, &im, &ir).to_rows(),
        }
    }

    pub fn build(&self, ring: &Arc<Algebra>) -> Result<ShortExactSeq> {
        let kind = SeqKind::from_tag(&self.kind, self.n)?;
        let (left, mid, right, base) =
            (self.left.build(ring)?, self.mid.build(ring)?, self.right.build(ring)?, self.base.build(ring)?);
        let f = ring.field();
        let mat = |rows: &[Vec<u32>], r: usize, c: usize| -> Result<Matrix> {
            if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                return Err(Error::Parse(format!("matrix must be {r}x{c}")));
            }
            let data = rows.iter().flatten().map(|&x| x % f.p()).collect();
            Ok(Matrix::from_data(f, r, c, data))
        };
        let inj = Morphism::new(left.clone(), mid.clone(), mat(&self.inj, mid.dim(), left.dim())?)?;
        let surj = Morphism::new(mid.clone(), right.clone(), mat(&self.surj, right.dim(), mid.dim())?)?;
        ShortExactSeq::new(inj, surj, kind, base)
    }
}

pub fn sequence_to_json(seq: &ShortExactSeq, ring_ref: &str) -> Value {
    serde_json::to_value(SequenceFile::from_seq(seq, ring_ref)).expect("sequence serializes")
}

pub fn parse_sequence_json(text: &str, resolve: impl Fn(&str) -> Result<Arc<Algebra>>) -> Result<ShortExactSeq> {
    let f: SequenceFile = serde_json::from_str(text).map_err(parse_err)?;
    f.build(&resolve(&f.ring)?)
}
