//! JSON file formats for algebras and fusion rings.
//!
//! Algebra: `{"basis": [..], "structure": [[i, j, k, "p/q"], ..], "gram": [["p/q", ..], ..]}`
//! with sparse structure triples for `i ≤ j` only.
//!
//! Ring: `{"labels": [..], "unit": "..", "N": [[a, b, c, mult], ..]}`.

use serde::{Deserialize, Serialize};

use crate::algebra::GriessAlgebra;
use crate::error::{Error, Result};
use crate::exact::{fmt_rational, parse_rational, Matrix, Rational};
use crate::fusion::{FusionRing, Label};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    basis: Vec<String>,
    structure: Vec<(usize, usize, usize, String)>,
    gram: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingFile {
    labels: Vec<String>,
    unit: String,
    #[serde(rename = "N")]
    n: Vec<(String, String, String, u32)>,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn algebra_to_json(a: &GriessAlgebra) -> String {
    let n = a.dim();
    let mut structure = Vec::new();
    for i in 0..n {
        for j in i..n {
            for k in 0..n {
                let s = a.structure_constant(i, j, k);
                if !num_traits::Zero::is_zero(s) {
                    structure.push((i, j, k, fmt_rational(s)));
                }
            }
        }
    }
    let gram = (0..n)
        .map(|i| a.gram().row(i).iter().map(fmt_rational).collect())
        .collect();
    let file = AlgebraFile {
        basis: a.basis_names().to_vec(),
        structure,
        gram,
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes") + "\n"
}

/// Reads an algebra file. Only the shape is validated here; the axioms are
/// left to [`GriessAlgebra::verify_axioms`].
pub fn algebra_from_json(text: &str) -> Result<GriessAlgebra> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(parse_err)?;
    let n = file.basis.len();
    if n == 0 {
        return Err(Error::Parse("empty basis".to_owned()));
    }
    let mut products: Vec<Vec<Vec<Rational>>> = vec![vec![vec![Rational::default(); n]; n]; n];
    let mut seen = std::collections::BTreeSet::new();
    for (i, j, k, value) in &file.structure {
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::Parse(format!(
                "structure index ({i},{j},{k}) out of range for dim {n}"
            )));
        }
        if i > j {
            return Err(Error::Parse(format!(
                "structure triple ({i},{j},{k}) has i > j"
            )));
        }
        if !seen.insert((*i, *j, *k)) {
            return Err(Error::Parse(format!(
                "structure triple ({i},{j},{k}) listed twice"
            )));
        }
        let v = parse_rational(value)?;
        products[*i][*j][*k] = v.clone();
        products[*j][*i][*k] = v;
    }
    let rows = file
        .gram
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| parse_rational(s))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let gram = Matrix::from_rows(rows)?;
    GriessAlgebra::new(file.basis, products, gram)
}

pub fn ring_to_json(r: &FusionRing) -> String {
    let file = RingFile {
        labels: r.label_names().into_iter().map(str::to_owned).collect(),
        unit: r.unit().to_owned(),
        n: r.entries()
            .into_iter()
            .map(|(a, b, c, m)| (a.to_owned(), b.to_owned(), c.to_owned(), m))
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes") + "\n"
}

/// Reads a ring file; rational label names carry their weight.
pub fn ring_from_json(name: &str, text: &str) -> Result<FusionRing> {
    let file: RingFile = serde_json::from_str(text).map_err(parse_err)?;
    let labels = file.labels.into_iter().map(Label::new).collect();
    FusionRing::from_entries(name, labels, &file.unit, file.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::build_algebra;
    use crate::exact::rat;
    use crate::fusion::{builtin, BUILTIN_RINGS};

    #[test]
    fn algebra_round_trip() {
        for l in [rat(1, 64), rat(13, 256)] {
            let a = build_algebra(&l).unwrap().into_algebra();
            let text = algebra_to_json(&a);
            assert_eq!(algebra_from_json(&text).unwrap(), a);
        }
    }

    #[test]
    fn algebra_json_shape() {
        let a = build_algebra(&rat(13, 256)).unwrap().into_algebra();
        let v: serde_json::Value = serde_json::from_str(&algebra_to_json(&a)).unwrap();
        assert_eq!(v["basis"], serde_json::json!(["e", "a", "b", "c"]));
        assert_eq!(v["structure"][0], serde_json::json!([0, 0, 0, "2"]));
        assert_eq!(v["gram"][3][3], serde_json::json!("243/2048"));
        assert!(v["structure"]
            .as_array()
            .unwrap()
            .iter()
            .any(|t| *t == serde_json::json!([2, 2, 0, "2187/32768"])));
    }

    #[test]
    fn malformed_algebra_files() {
        for bad in [
            "{",
            r#"{"basis": [], "structure": [], "gram": []}"#,
            r#"{"basis": ["e"], "structure": [[0, 0, 1, "2"]], "gram": [["1/4"]]}"#,
            r#"{"basis": ["e", "a"], "structure": [[1, 0, 0, "2"]], "gram": [["1", "0"], ["0", "1"]]}"#,
            r#"{"basis": ["e"], "structure": [[0, 0, 0, "x"]], "gram": [["1/4"]]}"#,
            r#"{"basis": ["e"], "structure": [], "gram": [["1/4", "0"]]}"#,
        ] {
            assert!(algebra_from_json(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn ring_round_trip() {
        for name in BUILTIN_RINGS {
            let r = builtin(name).unwrap();
            let back = ring_from_json(name, &ring_to_json(&r)).unwrap();
            assert_eq!(back.entries(), r.entries());
            assert_eq!(back.unit(), r.unit());
            assert!(back.verify().is_ok());
        }
    }
}
