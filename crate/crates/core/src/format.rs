//! Line-oriented text and JSON forms of algebras, cochains and matrices.
//!
//! Text layouts (all rationals as `num/den`):
//!
//! ```text
//! algebra:  <dim> <N> <family> <ω_1> … <ω_N>      then  i j k C_ij^k   (i < j)
//! matrix:   <rows> <cols>                        then  row col value
//! cochain:  <dim>                                then  i j ξ_ij      (i < j)
//! ```
//!
//! Generic (non CK) algebras use `N = 0` and family `generic`.

use serde::{Deserialize, Serialize};

use crate::algebra::{CkMeta, LieAlgebra};
use crate::ck::Family;
use crate::cohomology::TwoCochain;
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::omega::OmegaVector;
use crate::rational::{self, Rational};

fn parse_usize(tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what}")))
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

pub fn algebra_to_text(g: &LieAlgebra) -> String {
    let mut out = match g.meta() {
        Some(m) => {
            let omega: Vec<String> = m.omega.values().iter().map(rational::to_fraction).collect();
            format!(
                "{} {} {} {}\n",
                g.dim(),
                m.omega.n(),
                m.family,
                omega.join(" ")
            )
        }
        None => format!("{} 0 generic\n", g.dim()),
    };
    for (i, j, k, c) in g.entries() {
        out.push_str(&format!("{i} {j} {k} {}\n", rational::to_fraction(&c)));
    }
    out
}

fn parse_meta(n: usize, family: &str, omega: Vec<Rational>) -> Result<Option<CkMeta>> {
    match family {
        "generic" => Ok(None),
        f => {
            let family: Family = f.parse()?;
            if omega.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: omega.len(),
                });
            }
            Ok(Some(CkMeta {
                family,
                omega: OmegaVector::new(omega)?,
            }))
        }
    }
}

pub fn algebra_from_text(text: &str) -> Result<LieAlgebra> {
    let mut lines = data_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty algebra file".into()))?;
    let mut toks = header.split_whitespace();
    let dim = parse_usize(toks.next(), "dimension")?;
    let n = parse_usize(toks.next(), "N")?;
    let family = toks
        .next()
        .ok_or_else(|| Error::Parse("missing family".into()))?;
    let omega = toks.map(rational::parse).collect::<Result<Vec<_>>>()?;
    let meta = parse_meta(n, family, omega)?;
    let mut entries = Vec::new();
    for line in lines {
        let mut t = line.split_whitespace();
        let i = parse_usize(t.next(), "i")?;
        let j = parse_usize(t.next(), "j")?;
        let k = parse_usize(t.next(), "k")?;
        let c = rational::parse(
            t.next()
                .ok_or_else(|| Error::Parse("missing constant".into()))?,
        )?;
        entries.push((i, j, k, c));
    }
    Ok(LieAlgebra::from_entries(dim, entries)?.with_meta(meta))
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    dim: usize,
    n: usize,
    family: Option<Family>,
    omega: Vec<String>,
    constants: Vec<(usize, usize, usize, String)>,
}

pub fn algebra_to_json(g: &LieAlgebra) -> Result<String> {
    let (n, family, omega) = match g.meta() {
        Some(m) => (
            m.omega.n(),
            Some(m.family),
            m.omega.values().iter().map(rational::to_fraction).collect(),
        ),
        None => (0, None, Vec::new()),
    };
    let doc = AlgebraJson {
        dim: g.dim(),
        n,
        family,
        omega,
        constants: g
            .entries()
            .into_iter()
            .map(|(i, j, k, c)| (i, j, k, rational::to_fraction(&c)))
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&doc)?)
}

pub fn algebra_from_json(text: &str) -> Result<LieAlgebra> {
    let doc: AlgebraJson = serde_json::from_str(text)?;
    let omega = doc
        .omega
        .iter()
        .map(|s| rational::parse(s))
        .collect::<Result<Vec<_>>>()?;
    let meta = match doc.family {
        Some(f) => parse_meta(doc.n, &f.to_string(), omega)?,
        None => None,
    };
    let entries = doc
        .constants
        .into_iter()
        .map(|(i, j, k, c)| Ok((i, j, k, rational::parse(&c)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LieAlgebra::from_entries(doc.dim, entries)?.with_meta(meta))
}

pub fn matrix_to_text(m: &SparseMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for (r, c, v) in m.triplets() {
        out.push_str(&format!("{r} {c} {}\n", rational::to_fraction(v)));
    }
    out
}

pub fn matrix_from_text(text: &str) -> Result<SparseMatrix> {
    let mut lines = data_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let mut t = header.split_whitespace();
    let rows = parse_usize(t.next(), "rows")?;
    let cols = parse_usize(t.next(), "cols")?;
    let triplets = lines
        .map(|line| {
            let mut t = line.split_whitespace();
            Ok((
                parse_usize(t.next(), "row")?,
                parse_usize(t.next(), "col")?,
                rational::parse(
                    t.next()
                        .ok_or_else(|| Error::Parse("missing value".into()))?,
                )?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_triplets(rows, cols, triplets)
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, String)>,
}

pub fn matrix_to_json(m: &SparseMatrix) -> Result<String> {
    Ok(serde_json::to_string_pretty(&MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: m
            .triplets()
            .map(|(r, c, v)| (r, c, rational::to_fraction(v)))
            .collect(),
    })?)
}

pub fn matrix_from_json(text: &str) -> Result<SparseMatrix> {
    let doc: MatrixJson = serde_json::from_str(text)?;
    let triplets = doc
        .entries
        .into_iter()
        .map(|(r, c, v)| Ok((r, c, rational::parse(&v)?)))
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_triplets(doc.rows, doc.cols, triplets)
}

pub fn cochain_to_text(xi: &TwoCochain) -> String {
    let mut out = format!("{}\n", xi.dim());
    for (i, j, v) in xi.entries() {
        out.push_str(&format!("{i} {j} {}\n", rational::to_fraction(v)));
    }
    out
}

pub fn cochain_from_text(text: &str) -> Result<TwoCochain> {
    let mut lines = data_lines(text);
    let dim = parse_usize(lines.next(), "dimension")?;
    let mut xi = TwoCochain::zero(dim);
    for line in lines {
        let mut t = line.split_whitespace();
        let i = parse_usize(t.next(), "i")?;
        let j = parse_usize(t.next(), "j")?;
        let v = rational::parse(
            t.next()
                .ok_or_else(|| Error::Parse("missing value".into()))?,
        )?;
        if i >= dim || j >= dim || i == j {
            return Err(Error::Parse(format!("invalid cochain entry {i} {j}")));
        }
        xi.add(i, j, v);
    }
    Ok(xi)
}

#[derive(Serialize, Deserialize)]
struct CochainJson {
    dim: usize,
    entries: Vec<(usize, usize, String)>,
}

pub fn cochain_to_json(xi: &TwoCochain) -> Result<String> {
    Ok(serde_json::to_string_pretty(&CochainJson {
        dim: xi.dim(),
        entries: xi
            .entries()
            .map(|(i, j, v)| (i, j, rational::to_fraction(v)))
            .collect(),
    })?)
}

pub fn cochain_from_json(text: &str) -> Result<TwoCochain> {
    let doc: CochainJson = serde_json::from_str(text)?;
    let mut xi = TwoCochain::zero(doc.dim);
    for (i, j, v) in doc.entries {
        if i >= doc.dim || j >= doc.dim || i == j {
            return Err(Error::Parse(format!("invalid cochain entry {i} {j}")));
        }
        xi.add(i, j, rational::parse(&v)?);
    }
    Ok(xi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ck::build_u_omega;
    use crate::rational::ratio;

    #[test]
    fn algebra_text_layout() {
        let g = crate::ck::build_su_omega(1, &OmegaVector::from_ints(&[1]).unwrap()).unwrap();
        assert_eq!(
            algebra_to_text(&g),
            "3 1 su 1/1\n0 1 2 -2/1\n0 2 1 2/1\n1 2 0 -2/1\n"
        );
    }

    #[test]
    fn algebra_roundtrips() {
        let w = OmegaVector::new(vec![ratio(1, 2), ratio(0, 1), ratio(-3, 1)]).unwrap();
        let g = build_u_omega(3, &w).unwrap();
        assert_eq!(algebra_from_text(&algebra_to_text(&g)).unwrap(), g);
        assert_eq!(algebra_from_json(&algebra_to_json(&g).unwrap()).unwrap(), g);
        let generic = LieAlgebra::from_entries(3, [(0, 1, 2, ratio(7, 3))]).unwrap();
        assert_eq!(
            algebra_from_text(&algebra_to_text(&generic)).unwrap(),
            generic
        );
        assert_eq!(
            algebra_from_json(&algebra_to_json(&generic).unwrap()).unwrap(),
            generic
        );
    }

    #[test]
    fn malformed_inputs() {
        assert!(algebra_from_text("").is_err());
        assert!(algebra_from_text("3 1 so 1/1").is_err());
        assert!(algebra_from_text("3 2 su 1/1").is_err());
        assert!(algebra_from_text("3 0 generic\n0 1 5 1/1").is_err());
        assert!(cochain_from_text("3\n0 0 1/1").is_err());
        assert!(matrix_from_text("2 2\n0 2 1/1").is_err());
    }

    #[test]
    fn matrix_and_cochain_roundtrip() {
        let m =
            SparseMatrix::from_triplets(2, 3, [(0, 1, ratio(1, 2)), (1, 2, ratio(-4, 1))]).unwrap();
        assert_eq!(matrix_from_text(&matrix_to_text(&m)).unwrap(), m);
        assert_eq!(matrix_from_json(&matrix_to_json(&m).unwrap()).unwrap(), m);
        let mut xi = TwoCochain::zero(4);
        xi.set(3, 1, ratio(5, 7));
        assert_eq!(cochain_to_text(&xi), "4\n1 3 -5/7\n");
        assert_eq!(cochain_from_text(&cochain_to_text(&xi)).unwrap(), xi);
        assert_eq!(
            cochain_from_json(&cochain_to_json(&xi).unwrap()).unwrap(),
            xi
        );
    }
}
