use super::Algebra;
use crate::error::{Error, Result};

/// An element of R in the basis `b₀, …, b_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub coeffs: Vec<u32>,
}

impl RingElement {
    pub fn zero(d: usize) -> Self {
        RingElement { coeffs: vec![0; d] }
    }
    pub fn basis(d: usize, i: usize) -> Self {
        let mut coeffs = vec![0; d];
        coeffs[i] = 1;
        RingElement { coeffs }
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&x| x == 0)
    }
    /// True when the element lies in the maximal ideal.
    pub fn in_maximal_ideal(&self) -> bool {
        self.coeffs[0] == 0
    }
}

pub(super) fn parse(r: &Algebra, s: &str) -> Result<RingElement> {
    let f = r.field();
    let d = r.dim();
    let err = |m: &str| Error::Parse(format!("ring element {s:?}: {m}"));
    let mut acc = vec![0u32; d];
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(err("empty"));
    }
    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (k, c) in text.char_indices() {
        if (c == '+' || c == '-') && !(k > 0 && text[..k].ends_with('^')) {
            if k > 0 {
                if cur.is_empty() {
                    return Err(err("dangling sign"));
                }
                terms.push((neg, std::mem::take(&mut cur)));
            }
            neg = c == '-';
        } else {
            cur.push(c);
        }
    }
    if cur.is_empty() {
        return Err(err("dangling sign"));
    }
    terms.push((neg, cur));

    for (neg, term) in terms {
        let mut val = r.one().coeffs;
        if let Some(i) = r.names().iter().position(|n| n == &term) {
            val = RingElement::basis(d, i).coeffs;
        } else {
            for factor in term.split('*') {
                if factor.is_empty() {
                    return Err(err("empty factor"));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => (b, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                let x: Vec<u32> = if let Ok(n) = base.parse::<i64>() {
                    let mut v = vec![0u32; d];
                    v[0] = f.from_i64(n);
                    v
                } else if let Some(i) = r.names().iter().position(|n| n == base) {
                    RingElement::basis(d, i).coeffs
                } else if let Some((_, i)) = r.vars().iter().find(|(n, _)| n == base) {
                    RingElement::basis(d, *i).coeffs
                } else {
                    return Err(err(&format!("unknown symbol {base:?}")));
                };
                for _ in 0..exp {
                    val = r.mul(&val, &x);
                }
            }
        }
        for (a, v) in acc.iter_mut().zip(val) {
            *a = if neg { f.sub(*a, v) } else { f.add(*a, v) };
        }
    }
    Ok(RingElement { coeffs: acc })
}

pub(super) fn format(r: &Algebra, v: &[u32]) -> String {
    let f = r.field();
    let mut out = String::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let s = f.to_signed(c);
        let name = &r.names()[i];
        let mag = s.unsigned_abs();
        if out.is_empty() {
            if s < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if s < 0 { " - " } else { " + " });
        }
        if i == 0 {
            out.push_str(&mag.to_string());
        } else if mag == 1 {
            out.push_str(name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
