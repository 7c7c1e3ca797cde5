use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::PrimeField;
use std::collections::HashMap;
use std::sync::Arc;

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

/// Parse `"x^2*y"` against a variable list; `"1"` is the empty monomial.
pub fn parse_monomial(vars: &[String], s: &str) -> Result<Monomial> {
    let mut e = vec![0u32; vars.len()];
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "1" {
        return Ok(e);
    }
    for factor in t.split('*') {
        let (base, exp) = match factor.split_once('^') {
            Some((b, x)) => (b, x.parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?),
            None => (factor, 1),
        };
        let i = vars
            .iter()
            .position(|v| v == base)
            .ok_or_else(|| Error::Parse(format!("unknown variable {base:?} in monomial {s:?}")))?;
        e[i] += exp;
    }
    Ok(e)
}

fn monomial_name(vars: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e)
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { v.clone() } else { format!("{v}^{k}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

impl Algebra {
    /// `𝔽_p[vars]/(relations)` for monomial relations. The basis is the set
    /// of standard monomials, ordered by degree and then lexicographically
    /// with earlier variables first.
    pub fn monomial_quotient(field: PrimeField, vars: &[String], relations: &[Monomial]) -> Result<Arc<Algebra>> {
        let n = vars.len();
        if relations.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("relation has wrong number of exponents".into()));
        }
        if relations.iter().any(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::Parse("relation 1 gives the zero ring".into()));
        }
        let mut bound = vec![0u32; n];
        for (i, b) in bound.iter_mut().enumerate() {
            *b = relations
                .iter()
                .filter(|r| r.iter().enumerate().all(|(j, &x)| j == i || x == 0))
                .map(|r| r[i])
                .min()
                .ok_or_else(|| {
                    Error::Parse(format!("infinite-dimensional quotient: no pure power of {} among relations", vars[i]))
                })?;
        }
        let mut basis: Vec<Monomial> = Vec::new();
        let mut e = vec![0u32; n];
        loop {
            if !relations.iter().any(|r| divides(r, &e)) {
                basis.push(e.clone());
            }
            let mut k = 0;
            while k < n {
                e[k] += 1;
                if e[k] < bound[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        basis.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let d = basis.len();
        let mut table = vec![vec![vec![0u32; d]; d]; d];
        for (i, a) in basis.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let s: Monomial = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(&k) = index.get(&s) {
                    table[i][j][k] = 1;
                }
            }
        }
        let names: Vec<String> = basis.iter().map(|m| monomial_name(vars, m)).collect();
        let var_list: Vec<(String, usize)> = (0..n)
            .filter_map(|i| {
                let mut m = vec![0u32; n];
                m[i] = 1;
                index.get(&m).map(|&k| (vars[i].clone(), k))
            })
            .collect();
        let rels: Vec<String> = relations.iter().map(|r| monomial_name(vars, r)).collect();
        let label = format!("F_{}[{}]/({})", field.p(), vars.join(","), rels.join(","));
        Algebra::build(field, names, table, var_list, label)
    }

    /// Parse relation strings and build the quotient.
    pub fn monomial_quotient_str(field: PrimeField, vars: &[&str], relations: &[&str]) -> Result<Arc<Algebra>> {
        let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let rels = relations.iter().map(|r| parse_monomial(&vars, r)).collect::<Result<Vec<_>>>()?;
        Self::monomial_quotient(field, &vars, &rels)
    }
}
