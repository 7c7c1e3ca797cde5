//! Brute-force oracle over small prime fields.
//!
//! Shares no code with the engine beyond reading a ring's structure
//! constants and a module's action matrices. Hom spaces are kernels of the
//! commutation system solved by a local elimination routine; elements of
//! Hom(M, k) and of factorization sets are then enumerated one by one.

use std::collections::HashSet;
use std::sync::Arc;
use xi_core::algebra::Algebra;
use xi_core::modules::Module;

/// Dense row-major matrix over 𝔽_p.
pub type Mat = Vec<Vec<u32>>;

/// Enumeration cap for factorization sets; larger sets use a rank test.
const ENUM_CAP: u64 = 1 << 16;

#[derive(Clone, Debug)]
pub struct Ring {
    pub p: u32,
    pub d: usize,
    /// `table[i][j]` = coordinates of `b_i · b_j`.
    pub table: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug)]
pub struct Rep {
    pub dim: usize,
    /// `act[l]` acts on column vectors.
    pub act: Vec<Mat>,
}

impl Ring {
    pub fn of(r: &Algebra) -> Ring {
        Ring { p: r.field().p(), d: r.dim(), table: r.table().clone() }
    }

    pub fn rep(&self, m: &Arc<Module>) -> Rep {
        let act = m.actions_dense().iter().map(|a| (0..a.rows()).map(|i| a.row(i).to_vec()).collect()).collect();
        Rep { dim: m.dim(), act }
    }

    pub fn free(&self, r: usize) -> Rep {
        let d = self.d;
        let act = (0..d)
            .map(|l| {
                let mut a = zeros(r * d, r * d);
                for i in 0..r {
                    for b in 0..d {
                        for c in 0..d {
                            a[i * d + c][i * d + b] = self.table[l][b][c];
                        }
                    }
                }
                a
            })
            .collect();
        Rep { dim: r * d, act }
    }

    pub fn residue(&self) -> Rep {
        Rep { dim: 1, act: (0..self.d).map(|l| vec![vec![u32::from(l == 0)]]).collect() }
    }
}

fn zeros(r: usize, c: usize) -> Mat {
    vec![vec![0; c]; r]
}

fn inv(p: u32, a: u32) -> u32 {
    let (p, mut base, mut e, mut acc) = (p as u64, a as u64, p as u64 - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc as u32
}

fn mul(p: u32, a: &Mat, b: &Mat, inner: usize) -> Mat {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for t in 0..inner {
            if row[t] == 0 {
                continue;
            }
            for j in 0..cols {
                out[i][j] = ((out[i][j] as u64 + row[t] as u64 * b[t][j] as u64) % p as u64) as u32;
            }
        }
    }
    out
}

fn apply(p: u32, a: &Mat, v: &[u32]) -> Vec<u32> {
    a.iter().map(|row| (row.iter().zip(v).map(|(&x, &y)| x as u64 * y as u64).sum::<u64>() % p as u64) as u32).collect()
}

fn column(a: &Mat, j: usize) -> Vec<u32> {
    a.iter().map(|r| r[j]).collect()
}

fn from_columns(rows: usize, cols: &[Vec<u32>]) -> Mat {
    (0..rows).map(|i| cols.iter().map(|c| c[i]).collect()).collect()
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
fn rref(p: u32, mut rows: Mat, ncols: usize) -> (Mat, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let s = inv(p, rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = (*x as u64 * s as u64 % p as u64) as u32;
        }
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c] as u64;
                for j in 0..ncols {
                    rows[k][j] = ((rows[k][j] as u64 + (p as u64 - f) * rows[r][j] as u64) % p as u64) as u32;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(p: u32, vectors: &[Vec<u32>]) -> usize {
    let n = vectors.first().map_or(0, Vec::len);
    rref(p, vectors.to_vec(), n).1.len()
}

/// Basis of `{x : a·x = 0}`.
fn nullspace(p: u32, a: Mat, ncols: usize) -> Vec<Vec<u32>> {
    let (rows, pivots) = rref(p, a, ncols);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut x = vec![0; ncols];
            x[free] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                x[pc] = (p - row[free]) % p;
            }
            x
        })
        .collect()
}

/// Some `x` with `a·x = b`.
fn solve(p: u32, a: &Mat, b: &[u32]) -> Option<Vec<u32>> {
    let ncols = a.first().map_or(0, Vec::len);
    let aug: Mat = a.iter().zip(b).map(|(row, &y)| row.iter().copied().chain([y]).collect()).collect();
    let (rows, pivots) = rref(p, aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![0; ncols];
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = row[ncols];
    }
    Some(x)
}

/// All `p^k` combinations of `basis`.
fn span_elements(p: u32, basis: &[Vec<u32>], len: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![0; len]];
    for v in basis {
        out = out
            .iter()
            .flat_map(|w| {
                (0..p).map(move |c| w.iter().zip(v).map(|(&a, &b)| ((a as u64 + c as u64 * b as u64) % p as u64) as u32).collect())
            })
            .collect();
    }
    out
}

fn flatten(m: &Mat) -> Vec<u32> {
    m.iter().flatten().copied().collect()
}

fn unflatten(v: &[u32], rows: usize, cols: usize) -> Mat {
    (0..rows).map(|i| v[i * cols..(i + 1) * cols].to_vec()).collect()
}

/// A free cover `π: R^μ → X` from generators lifting a basis of `X/𝔪X`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub free: Rep,
    pub pi: Mat,
    pub gens: Vec<Vec<u32>>,
    /// Kernel of `π` as a module, with its inclusion into the cover.
    pub syzygy: Rep,
    pub incl: Mat,
}

impl Ring {
    pub fn hom_space(&self, x: &Rep, y: &Rep) -> Vec<Mat> {
        let (p, n) = (self.p, x.dim * y.dim);
        let mut eqs = Vec::new();
        for l in 1..self.d {
            for r in 0..y.dim {
                for c in 0..x.dim {
                    let mut e = vec![0u32; n];
                    for t in 0..y.dim {
                        e[t * x.dim + c] = (e[t * x.dim + c] + y.act[l][r][t]) % p;
                    }
                    for t in 0..x.dim {
                        e[r * x.dim + t] = (e[r * x.dim + t] + p - x.act[l][t][c]) % p;
                    }
                    eqs.push(e);
                }
            }
        }
        nullspace(p, eqs, n).iter().map(|v| unflatten(v, y.dim, x.dim)).collect()
    }

    /// Every linear map `X → Y` tested for equivariance; only for tiny spaces.
    pub fn hom_by_enumeration(&self, x: &Rep, y: &Rep) -> usize {
        let p = self.p;
        let n = x.dim * y.dim;
        let units: Vec<Vec<u32>> = (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect();
        let count = span_elements(p, &units, n)
            .iter()
            .filter(|v| {
                let f = unflatten(v, y.dim, x.dim);
                (1..self.d).all(|l| mul(p, &f, &x.act[l], x.dim) == mul(p, &y.act[l], &f, y.dim))
            })
            .count();
        log(p, count as u64)
    }

    fn sub_rep(&self, x: &Rep, basis: &[Vec<u32>]) -> (Rep, Mat) {
        let incl = from_columns(x.dim, basis);
        let act = (0..self.d)
            .map(|l| {
                let cols: Vec<Vec<u32>> =
                    basis.iter().map(|s| solve(self.p, &incl, &apply(self.p, &x.act[l], s)).expect("submodule")).collect();
                from_columns(basis.len(), &cols)
            })
            .collect();
        (Rep { dim: basis.len(), act }, incl)
    }

    pub fn cover(&self, x: &Rep) -> Cover {
        let p = self.p;
        let mut span: Vec<Vec<u32>> = Vec::new();
        for l in 1..self.d {
            for j in 0..x.dim {
                span.push(column(&x.act[l], j));
            }
        }
        let mut gens = Vec::new();
        for j in 0..x.dim {
            let e: Vec<u32> = (0..x.dim).map(|i| u32::from(i == j)).collect();
            let before = rank(p, &span);
            span.push(e.clone());
            if rank(p, &span) > before {
                gens.push(e);
            } else {
                span.pop();
            }
        }
        let free = self.free(gens.len());
        let cols: Vec<Vec<u32>> =
            gens.iter().flat_map(|g| (0..self.d).map(move |b| apply(p, &x.act[b], g))).collect();
        let pi = from_columns(x.dim, &cols);
        let kernel = nullspace(p, pi.clone(), free.dim);
        let (syzygy, incl) = self.sub_rep(&free, &kernel);
        Cover { free, pi, gens, syzygy, incl }
    }

    /// Covers of `X, ΩX, …, Ω^{n-1}X`.
    pub fn resolution(&self, x: &Rep, n: usize) -> Vec<Cover> {
        let mut out: Vec<Cover> = Vec::new();
        for i in 0..n {
            let next = if i == 0 { self.cover(x) } else { self.cover(&out[i - 1].syzygy) };
            out.push(next);
        }
        out
    }

    /// `Ωf : ΩX → ΩY` for `f : X → Y`, lifting generator images along `π_Y`.
    fn lift(&self, f: &Mat, cx: &Cover, cy: &Cover) -> Mat {
        let p = self.p;
        let mut cols = Vec::new();
        for g in &cx.gens {
            let z = solve(p, &cy.pi, &apply(p, f, g)).expect("cover is surjective");
            cols.extend((0..self.d).map(|b| apply(p, &cy.free.act[b], &z)));
        }
        let big = from_columns(cy.free.dim, &cols);
        let moved: Vec<Vec<u32>> = (0..cx.syzygy.dim)
            .map(|j| {
                let v = apply(p, &big, &column(&cx.incl, j));
                solve(p, &cy.incl, &v).expect("lift preserves kernels")
            })
            .collect();
        from_columns(cy.syzygy.dim, &moved)
    }

    /// Postcomposites `π ∘ g` for a basis of `Hom(X, F_Y)`, flattened.
    fn factorization_basis(&self, x: &Rep, cy: &Cover) -> Vec<Vec<u32>> {
        self.hom_space(x, &cy.free).iter().map(|g| flatten(&mul(self.p, &cy.pi, g, cy.free.dim))).collect()
    }

    /// `dim Hom(X, Y) − dim 𝒫(X, Y)`, with `𝒫` enumerated as a set of maps
    /// when small enough.
    pub fn stable_hom_dim(&self, x: &Rep, y: &Rep) -> usize {
        let hom = self.hom_space(x, y).len();
        let basis = self.factorization_basis(x, &self.cover(y));
        let pdim = if (self.p as u64).checked_pow(basis.len() as u32).is_some_and(|s| s <= ENUM_CAP) {
            let set: HashSet<Vec<u32>> = span_elements(self.p, &basis, x.dim * y.dim).into_iter().collect();
            log(self.p, set.len() as u64)
        } else {
            rank(self.p, &basis)
        };
        hom - pdim
    }

    /// `dim Ext^i(X, R) = dim Hom(Ω^i X, R) − dim(restrictions from F_{i-1})`.
    pub fn ext_ring_dim(&self, x: &Rep, i: usize) -> usize {
        assert!(i >= 1);
        let res = self.resolution(x, i);
        let last = &res[i - 1];
        let r = self.free(1);
        let hom = self.hom_space(&last.syzygy, &r).len();
        let restricted: Vec<Vec<u32>> =
            self.hom_space(&last.free, &r).iter().map(|h| flatten(&mul(self.p, h, &last.incl, last.free.dim))).collect();
        hom - rank(self.p, &restricted)
    }

    /// `ξ(n, X)`: count the functionals `f : X → k` whose `n`-th syzygy map
    /// factors through a projective.
    pub fn xi(&self, x: &Rep, n: usize) -> usize {
        let p = self.p;
        let k = self.residue();
        let hom = self.hom_space(x, &k);
        let rx = self.resolution(x, n);
        let rk = self.resolution(&k, n);
        let (sx, sk) = match n {
            0 => (x.clone(), k.clone()),
            _ => (rx[n - 1].syzygy.clone(), rk[n - 1].syzygy.clone()),
        };
        let target = self.cover(&sk);
        let basis = self.factorization_basis(&sx, &target);
        let small = (p as u64).checked_pow(basis.len() as u32).is_some_and(|s| s <= ENUM_CAP);
        let set: HashSet<Vec<u32>> =
            if small { span_elements(p, &basis, sx.dim * sk.dim).into_iter().collect() } else { HashSet::new() };
        let base_rank = rank(p, &basis);
        let flat_hom: Vec<Vec<u32>> = hom.iter().map(flatten).collect();
        let count = span_elements(p, &flat_hom, x.dim)
            .iter()
            .filter(|v| {
                let mut f = unflatten(v, 1, x.dim);
                for i in 0..n {
                    f = self.lift(&f, &rx[i], &rk[i]);
                }
                let f = flatten(&f);
                if small {
                    set.contains(&f)
                } else {
                    let mut with = basis.clone();
                    with.push(f);
                    rank(p, &with) == base_rank
                }
            })
            .count();
        log(p, count as u64)
    }
}

/// `log_p` of a power of `p`.
fn log(p: u32, mut n: u64) -> usize {
    let mut e = 0;
    while n > 1 {
        assert_eq!(n % p as u64, 0, "set size is not a power of p");
        n /= p as u64;
        e += 1;
    }
    e
}
