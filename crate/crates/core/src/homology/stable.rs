//! Maps factoring through projectives and the stable Hom quotient.

use super::{hom_basis, HomSpace};
use crate::exactla::{Accumulator, Echelon, Matrix, SVec, Subspace};
use crate::modules::{Module, Morphism, Piece};
use std::sync::Arc;

/// `Hom(M, N)/𝒫(M, N)`.
#[derive(Clone, Debug)]
pub struct StableHomSpace {
    pub hom: HomSpace,
    /// `𝒫(M, N)` in the coordinates of `hom`.
    pub projective_factoring: Subspace,
    /// Basis of `Hom(M, F_N)` and the coordinates of each composite with
    /// the cover `F_N → N`.
    through_cover: Vec<Morphism>,
    composite_coords: Vec<Vec<u32>>,
}

/// `𝒫(M, N)` is the image of `Hom(M, F_N) → Hom(M, N)` under the cover.
pub fn stable_hom(m: &Arc<Module>, n: &Arc<Module>) -> StableHomSpace {
    let f = m.field();
    let hom = hom_basis(m, n);
    let cover = n.free_cover();
    let to_free = hom_basis(m, cover.source());
    let composite_coords: Vec<Vec<u32>> = to_free.basis.iter().map(|h| hom.coordinates(&cover.compose(h))).collect();
    let projective_factoring = Subspace::span(f, hom.dim(), composite_coords.iter().map(|v| v.as_slice()));
    StableHomSpace { hom, projective_factoring, through_cover: to_free.basis, composite_coords }
}

impl StableHomSpace {
    pub fn dim(&self) -> usize {
        self.hom.dim() - self.projective_factoring.dim()
    }

    /// Hom-basis indices whose classes form a basis of the quotient.
    pub fn quotient_indices(&self) -> Vec<usize> {
        self.projective_factoring.complement_indices()
    }

    /// Representatives of a basis of the stable Hom space.
    pub fn quotient_basis(&self) -> Vec<Morphism> {
        self.quotient_indices().into_iter().map(|i| self.hom.basis[i].clone()).collect()
    }

    /// The class of `f` in quotient coordinates.
    pub fn class_of(&self, f: &Morphism) -> Vec<u32> {
        self.projective_factoring.quotient_coords(&self.hom.coordinates(f))
    }

    pub fn is_stably_zero(&self, f: &Morphism) -> bool {
        self.class_of(f).iter().all(|&x| x == 0)
    }

    /// A map `h : M → F_N` with `π∘h = f`, when `f ∈ 𝒫`.
    pub fn projective_witness(&self, f: &Morphism) -> Option<Morphism> {
        let fld = f.source().field();
        let k = self.composite_coords.len();
        let a = Matrix::from_columns(fld, self.hom.dim(), &self.composite_coords);
        let c = a.solve_vec(&self.hom.coordinates(f))?;
        let src = self.hom.source.clone();
        let tgt = self.through_cover.first().map(|h| h.target().clone());
        let tgt = tgt.unwrap_or_else(|| Module::free(src.ring(), self.hom.target.mu()));
        let mut mat = Matrix::zeros(fld, tgt.dim(), src.dim());
        for i in 0..k {
            if c[i] != 0 {
                mat = mat.add(&self.through_cover[i].matrix().scale(c[i]));
            }
        }
        Some(Morphism::new_unchecked(src, tgt, mat))
    }
}

/// Linear map on `Hom(X, Y)` whose kernel is exactly `𝒫(X, Y)`.
///
/// `X` is split into pieces. On a cyclic piece `R·e ≅ R/I`, maps into free
/// modules send `e` into `ann(I)·F`, so `g` factors on that piece iff
/// `g(e) ∈ ann(I)·Y`. On a general piece `P`, the composites `P → F_Y → Y`
/// are spanned by `p ↦ u(p)·y` for `u ∈ P*` and generators `y` of `Y`.
pub struct ResidueMap {
    source_dim: usize,
    target_dim: usize,
    parts: Vec<Part>,
    spans: Vec<Echelon>,
    len: usize,
}

/// Residues of `g` on the given columns of `X`, modulo the subspace
/// `spans[span]` of `Y^{columns}`.
struct Part {
    columns: Vec<SVec>,
    span: usize,
    offset: usize,
}

impl ResidueMap {
    pub fn new(x: &Arc<Module>, y: &Arc<Module>) -> Self {
        let f = x.field();
        let ring = x.ring();
        let d = ring.dim();
        let dy = y.dim();
        let mut acc = Accumulator::new(f, dy);
        // ideals seen so far, with the index of the echelon of ann(I)·Y
        let mut ideals: Vec<(Subspace, usize)> = Vec::new();
        let mut spans: Vec<Echelon> = Vec::new();
        let mut parts = Vec::new();
        let mut offset = 0;
        let ygens = y.generator_indices();
        for piece in x.pieces() {
            match piece {
                Piece::Cyclic(c) => {
                    let idx = match ideals.iter().find(|(i, _)| *i == c.ideal) {
                        Some(&(_, i)) => i,
                        None => {
                            let ann = ring.annihilator(&c.ideal);
                            let mut e = Echelon::new(f, dy);
                            for a in ann.basis() {
                                for &g in ygens {
                                    for (l, &al) in a.iter().enumerate() {
                                        if al != 0 {
                                            acc.add_scaled(al, y.act_basis(l, g));
                                        }
                                    }
                                    e.insert(&acc.take());
                                }
                            }
                            spans.push(e);
                            ideals.push((c.ideal.clone(), spans.len() - 1));
                            spans.len() - 1
                        }
                    };
                    if spans[idx].rank() < dy {
                        parts.push(Part { columns: vec![c.generator.clone()], span: idx, offset });
                        offset += dy;
                    }
                }
                Piece::General { module, inclusion } => {
                    let mp = module.mu();
                    let columns: Vec<SVec> = module
                        .generator_indices()
                        .iter()
                        .map(|&g| crate::exactla::sparsify(&inclusion.matrix().column(g)))
                        .collect();
                    let mut e = Echelon::new(f, mp * dy);
                    for u in &module.dual_data().functionals {
                        let mut blocks: Vec<Vec<u32>> = vec![vec![0; d]; mp];
                        for &(i, c) in u {
                            blocks[i as usize / d][i as usize % d] = c;
                        }
                        for &g in ygens {
                            let mut v: SVec = Vec::new();
                            for (j, b) in blocks.iter().enumerate() {
                                for (l, &bl) in b.iter().enumerate() {
                                    if bl != 0 {
                                        acc.add_scaled(bl, y.act_basis(l, g));
                                    }
                                }
                                v.extend(acc.take().into_iter().map(|(i, c)| (i + (j * dy) as u32, c)));
                            }
                            e.insert(&v);
                        }
                    }
                    if e.rank() < mp * dy {
                        spans.push(e);
                        parts.push(Part { columns, span: spans.len() - 1, offset });
                        offset += mp * dy;
                    }
                }
            }
        }
        ResidueMap { source_dim: x.dim(), target_dim: dy, parts, spans, len: offset }
    }

    /// Length of residue vectors.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Residue of `g : X → Y`; zero iff `g ∈ 𝒫(X, Y)`.
    pub fn residue(&mut self, g: &Matrix) -> SVec {
        assert_eq!((g.rows(), g.cols()), (self.target_dim, self.source_dim));
        let f = g.field();
        let dy = self.target_dim;
        let mut out = Vec::new();
        let mut acc = Accumulator::new(f, dy);
        for part in &self.parts {
            let mut v: SVec = Vec::new();
            for (j, col) in part.columns.iter().enumerate() {
                for &(c, x) in col {
                    for i in 0..dy {
                        let y = g.get(i, c as usize);
                        if y != 0 {
                            acc.add(i as u32, f.mul(x, y));
                        }
                    }
                }
                v.extend(acc.take().into_iter().map(|(i, c)| (i + (j * dy) as u32, c)));
            }
            let r = self.spans[part.span].reduce(&v);
            out.extend(r.into_iter().map(|(i, c)| (i + part.offset as u32, c)));
        }
        out
    }
}

/// The residue of `g` under the piece decomposition of its source.
pub fn projective_residue(g: &Morphism) -> SVec {
    ResidueMap::new(g.source(), g.target()).residue(g.matrix())
}

/// Does `g` factor through a projective module?
pub fn factors_through_projective(g: &Morphism) -> bool {
    projective_residue(g).is_empty()
}
