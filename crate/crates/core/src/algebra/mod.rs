//! Artinian local commutative algebras over 𝔽_p given by structure constants.
//!
//! The basis is `b₀ = 1, b₁, …, b_{d-1}` with the maximal ideal spanned by
//! `b₁, …`. Validation is exhaustive, and the powers of 𝔪 and the socle are
//! computed once at construction.

mod element;
mod monomial;

pub use element::RingElement;
pub use monomial::{parse_monomial, Monomial};

use crate::error::{Error, Result};
use crate::exactla::{sparsify, Echelon, PrimeField, SVec, SparseMatrix, Subspace};
use std::fmt;
use std::sync::Arc;

/// Why a multiplication table fails to define an artinian local algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDefect {
    Shape(String),
    /// `b₀·b_j` or `b_j·b₀` differs from `b_j`.
    UnitRow { i: usize, j: usize },
    NonCommutative { i: usize, j: usize },
    /// `(b_i b_j) b_l ≠ b_i (b_j b_l)`.
    NonAssociative { i: usize, j: usize, l: usize },
    /// Either `b_i·b_j` has a nonzero `b₀` coefficient (`l = 0`), or
    /// `b_i^j` has a nonzero `b_l` coefficient with `j = dim`.
    NotNilpotent { i: usize, j: usize, l: usize },
}

impl fmt::Display for RingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDefect::Shape(s) => write!(f, "malformed table: {s}"),
            RingDefect::UnitRow { i, j } => write!(f, "unit row wrong: b{i}*b{j} != b{j}"),
            RingDefect::NonCommutative { i, j } => write!(f, "non-commutative: witness ({i}, {j})"),
            RingDefect::NonAssociative { i, j, l } => {
                write!(f, "non-associative: witness ({i}, {j}, {l})")
            }
            RingDefect::NotNilpotent { i, j, l } => {
                write!(f, "maximal ideal not nilpotent: witness ({i}, {j}, {l})")
            }
        }
    }
}

pub struct Algebra {
    field: PrimeField,
    names: Vec<String>,
    table: Vec<Vec<Vec<u32>>>,
    table_sparse: Vec<Vec<SVec>>,
    mult: Vec<SparseMatrix>,
    vars: Vec<(String, usize)>,
    powers: Vec<Subspace>,
    socle: Subspace,
    label: String,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra({}, d={}, p={})", self.label, self.dim(), self.field.p())
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.table == other.table
    }
}

impl Algebra {
    /// Validate a multiplication table; `table[i][j]` is the coefficient
    /// vector of `b_i·b_j`.
    pub fn from_structure_constants(
        field: PrimeField,
        names: Vec<String>,
        table: Vec<Vec<Vec<u32>>>,
    ) -> Result<Arc<Algebra>> {
        Self::build(field, names, table, Vec::new(), String::from("custom"))
    }

    pub(crate) fn build(
        field: PrimeField,
        names: Vec<String>,
        table: Vec<Vec<Vec<u32>>>,
        vars: Vec<(String, usize)>,
        label: String,
    ) -> Result<Arc<Algebra>> {
        let d = names.len();
        let bad = |s: String| Error::InvalidRing(RingDefect::Shape(s));
        if d == 0 {
            return Err(bad("empty basis".into()));
        }
        if table.len() != d || table.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(bad(format!("table must be {d}x{d}x{d}")));
        }
        let table: Vec<Vec<Vec<u32>>> = table
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.into_iter().map(|x| x % field.p()).collect()).collect())
            .collect();
        check_table(field, &table)?;
        let mult: Vec<SparseMatrix> = (0..d)
            .map(|i| {
                let cols: Vec<SVec> = (0..d).map(|j| sparsify(&table[i][j])).collect();
                SparseMatrix::from_columns(field, d, &cols)
            })
            .collect();
        check_nilpotent(&table, &mult)?;

        let mut powers = vec![Subspace::full(field, d)];
        let mut cur = Subspace::span_sparse(field, d, (1..d).map(|i| vec![(i as u32, 1)]).collect::<Vec<_>>().iter());
        loop {
            let done = cur.dim() == 0;
            powers.push(cur.clone());
            if done {
                break;
            }
            let mut next = Subspace::zero(field, d);
            for v in cur.basis() {
                for m in &mult[1..] {
                    next.add_dense(&m.mul_vec(&v));
                }
            }
            cur = next;
        }
        let mut e = Echelon::new(field, d);
        for m in &mult[1..] {
            for i in 0..d {
                e.insert(m.row(i));
            }
        }
        let socle = Subspace::span_sparse(field, d, e.kernel().iter());
        let table_sparse = table.iter().map(|r| r.iter().map(|v| sparsify(v)).collect()).collect();
        Ok(Arc::new(Algebra { field, names, table, table_sparse, mult, vars, powers, socle, label }))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }
    pub fn dim(&self) -> usize {
        self.names.len()
    }
    pub fn names(&self) -> &[String] {
        &self.names
    }
    pub fn label(&self) -> &str {
        &self.label
    }
    pub(crate) fn with_label(mut self: Arc<Self>, label: &str) -> Arc<Self> {
        if let Some(a) = Arc::get_mut(&mut self) {
            a.label = label.to_string();
        }
        self
    }
    /// Structure constants: coefficient vector of `b_i·b_j`.
    pub fn product(&self, i: usize, j: usize) -> &[u32] {
        &self.table[i][j]
    }
    /// `b_i·b_j` as a sparse vector.
    pub fn product_sparse(&self, i: usize, j: usize) -> &SVec {
        &self.table_sparse[i][j]
    }
    pub fn table(&self) -> &Vec<Vec<Vec<u32>>> {
        &self.table
    }
    /// Matrix of multiplication by `b_i` on R.
    pub fn mult_matrix(&self, i: usize) -> &SparseMatrix {
        &self.mult[i]
    }
    /// Named generators usable in element strings (monomial quotients).
    pub fn vars(&self) -> &[(String, usize)] {
        &self.vars
    }

    pub fn one(&self) -> RingElement {
        RingElement::basis(self.dim(), 0)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(x, y);
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    if t != 0 {
                        *o = f.mul_add(*o, c, t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `r` on R.
    pub fn element_matrix(&self, r: &[u32]) -> SparseMatrix {
        let terms: Vec<(u32, &SparseMatrix)> = r.iter().copied().zip(self.mult.iter()).collect();
        SparseMatrix::combination(self.field, self.dim(), self.dim(), &terms)
    }

    pub fn is_unit(&self, r: &[u32]) -> bool {
        r[0] != 0
    }

    /// `𝔪^t` for `t ≤ loewy_length`; zero beyond.
    pub fn power(&self, t: usize) -> Subspace {
        self.powers.get(t).cloned().unwrap_or_else(|| Subspace::zero(self.field, self.dim()))
    }

    pub fn maximal_ideal(&self) -> &Subspace {
        &self.powers[1]
    }

    /// `{r : 𝔪 r = 0}`.
    pub fn socle(&self) -> &Subspace {
        &self.socle
    }

    pub fn is_gorenstein(&self) -> bool {
        self.socle.dim() == 1
    }

    /// Smallest `ℓ` with `𝔪^ℓ = 0`.
    pub fn loewy_length(&self) -> usize {
        self.powers.len() - 1
    }

    /// `{s : s·I = 0}` for an ideal `I` given as a subspace.
    pub fn annihilator(&self, ideal: &Subspace) -> Subspace {
        let d = self.dim();
        let mut e = Echelon::new(self.field, d);
        for v in ideal.basis() {
            let m = self.element_matrix(&v);
            for i in 0..d {
                e.insert(m.row(i));
            }
        }
        Subspace::span_sparse(self.field, d, e.kernel().iter())
    }

    /// Parse a linear combination such as `"x + 2*y"` or `"-x^2"`.
    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        element::parse(self, s)
    }

    pub fn format_element(&self, r: &[u32]) -> String {
        element::format(self, r)
    }
}

fn check_table(field: PrimeField, t: &[Vec<Vec<u32>>]) -> Result<()> {
    let d = t.len();
    for j in 0..d {
        let e: Vec<u32> = (0..d).map(|k| (k == j) as u32).collect();
        if t[0][j] != e {
            return Err(Error::InvalidRing(RingDefect::UnitRow { i: 0, j }));
        }
        if t[j][0] != e {
            return Err(Error::InvalidRing(RingDefect::UnitRow { i: j, j: 0 }));
        }
    }
    for i in 0..d {
        for j in i + 1..d {
            if t[i][j] != t[j][i] {
                return Err(Error::InvalidRing(RingDefect::NonCommutative { i, j }));
            }
        }
    }
    for i in 1..d {
        for j in 1..d {
            if t[i][j][0] != 0 {
                return Err(Error::InvalidRing(RingDefect::NotNilpotent { i, j, l: 0 }));
            }
        }
    }
    let prod = |a: &[u32], l: usize| -> Vec<u32> {
        let mut out = vec![0u32; d];
        for (m, &c) in a.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(&t[m][l]) {
                *o = field.mul_add(*o, c, x);
            }
        }
        out
    };
    for i in 1..d {
        for j in 1..d {
            for l in 1..d {
                let left = prod(&t[i][j], l);
                let right = prod(&t[j][l], i);
                if left != right {
                    return Err(Error::InvalidRing(RingDefect::NonAssociative { i, j, l }));
                }
            }
        }
    }
    Ok(())
}

fn check_nilpotent(t: &[Vec<Vec<u32>>], mult: &[SparseMatrix]) -> Result<()> {
    let d = t.len();
    // In a commutative ring the ideal is nilpotent iff each generator is.
    for i in 1..d {
        let mut v: Vec<u32> = (0..d).map(|k| (k == i) as u32).collect();
        for _ in 1..d {
            v = mult[i].mul_vec(&v);
        }
        if let Some(l) = v.iter().position(|&x| x != 0) {
            return Err(Error::InvalidRing(RingDefect::NotNilpotent { i, j: d, l }));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn cubic_table() -> Vec<Vec<Vec<u32>>> {
        // basis 1, x, x^2
        let e = |k: usize| -> Vec<u32> { (0..3).map(|i| (i == k) as u32).collect() };
        let z = vec![0; 3];
        vec![
            vec![e(0), e(1), e(2)],
            vec![e(1), e(2), z.clone()],
            vec![e(2), z.clone(), z],
        ]
    }

    fn names() -> Vec<String> {
        vec!["1".into(), "x".into(), "x^2".into()]
    }

    #[test]
    fn truncated_polynomial_ring_is_valid() {
        let a = Algebra::from_structure_constants(f(), names(), cubic_table()).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.loewy_length(), 3);
        assert!(a.is_gorenstein());
        assert_eq!(a.socle().basis(), vec![vec![0, 0, 1]]);
    }

    #[test]
    fn unit_in_maximal_ideal_is_rejected() {
        let mut t = cubic_table();
        t[1][2] = vec![1, 0, 0];
        t[2][1] = vec![1, 0, 0];
        let err = Algebra::from_structure_constants(f(), names(), t).unwrap_err();
        assert!(matches!(err, Error::InvalidRing(RingDefect::NotNilpotent { .. })), "{err}");
    }

    #[test]
    fn wrong_unit_row_is_rejected() {
        let mut t = cubic_table();
        t[0][1] = vec![0, 0, 1];
        let err = Algebra::from_structure_constants(f(), names(), t).unwrap_err();
        assert!(matches!(err, Error::InvalidRing(RingDefect::UnitRow { .. })));
    }

    #[test]
    fn non_commutative_table_is_rejected() {
        let mut t = cubic_table();
        t[2][1] = vec![0, 0, 1];
        let err = Algebra::from_structure_constants(f(), names(), t).unwrap_err();
        assert!(matches!(err, Error::InvalidRing(RingDefect::NonCommutative { i: 1, j: 2 })));
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // a*a = b, a*b = b, b*b = 0: (aa)b = 0 but a(ab) = b
        let e = |k: usize| -> Vec<u32> { (0..3).map(|i| (i == k) as u32).collect() };
        let z = vec![0; 3];
        let t = vec![
            vec![e(0), e(1), e(2)],
            vec![e(1), e(2), e(2)],
            vec![e(2), e(2), z],
        ];
        let err = Algebra::from_structure_constants(f(), names(), t).unwrap_err();
        assert!(matches!(err, Error::InvalidRing(RingDefect::NonAssociative { .. })), "{err}");
    }
}
