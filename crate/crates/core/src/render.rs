//! Serialization of polynomials and functionals: plain text, LaTeX and JSON.
//!
//! Terms are ordered by descending degree, then by the graded multiset
//! order, so a Gaussian fourth Wick polynomial prints as
//! `a^{4} - 6a^{2} + 3`. JSON maps are keyed by the canonical multiset text
//! and round-trip exactly.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{HElem, Letter, Multiset, Rat};
use crate::error::{Error, Result};
use crate::hopf::Functional;

fn ordered_terms(x: &HElem) -> Vec<(&Multiset, &Rat)> {
    let mut terms: Vec<_> = x.iter().collect();
    terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| a.cmp(b)));
    terms
}

/// Plain-text polynomial, e.g. `a^4 - 6 a^2 + 3`.
pub fn poly_text(x: &HElem) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (idx, (mset, coeff)) in ordered_terms(x).into_iter().enumerate() {
        let mag = coeff.abs();
        if idx == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if coeff.is_negative() { " - " } else { " + " });
        }
        if mset.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mset.to_string());
        } else {
            out.push_str(&format!("{mag} {mset}"));
        }
    }
    out
}

fn multiset_latex(m: &Multiset) -> String {
    let rendered: Vec<String> = m
        .iter()
        .map(|(letter, count)| {
            if count == 1 {
                letter.to_string()
            } else {
                format!("{letter}^{{{count}}}")
            }
        })
        .collect();
    rendered.join(" ")
}

fn rat_latex(r: &Rat) -> String {
    if r.is_integer() {
        r.to_string()
    } else {
        let sign = if r.is_negative() { "-" } else { "" };
        let a = r.abs();
        format!("{sign}\\frac{{{}}}{{{}}}", a.numer(), a.denom())
    }
}

/// LaTeX polynomial, e.g. `a^{4} - 6a^{2} + 3`.
pub fn poly_latex(x: &HElem) -> String {
    if x.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (idx, (mset, coeff)) in ordered_terms(x).into_iter().enumerate() {
        let mag = coeff.abs();
        if idx == 0 {
            if coeff.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if coeff.is_negative() { " - " } else { " + " });
        }
        if mset.is_empty() {
            out.push_str(&rat_latex(&mag));
        } else if mag.is_one() {
            out.push_str(&multiset_latex(mset));
        } else {
            out.push_str(&format!("{}{}", rat_latex(&mag), multiset_latex(mset)));
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    terms: BTreeMap<String, String>,
}

/// JSON polynomial: `{"terms":{"<mset>":"<rational>"}}`.
pub fn poly_json(x: &HElem) -> String {
    let raw = RawPoly {
        terms: x
            .iter()
            .map(|(m, r)| (m.to_string(), r.to_string()))
            .collect(),
    };
    serde_json::to_string(&raw).expect("polynomial serializes")
}

pub fn poly_from_json(text: &str) -> Result<HElem> {
    let raw: RawPoly =
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(format!("bad JSON: {e}")))?;
    let mut out = HElem::zero();
    for (mset, coeff) in &raw.terms {
        out.add_term(Multiset::from_str(mset)?, Rat::from_str(coeff)?);
    }
    Ok(out)
}

#[derive(Serialize, Deserialize)]
struct RawFunctional {
    max_degree: u32,
    values: BTreeMap<String, String>,
}

/// JSON functional: `{"max_degree":n,"values":{"<mset>":"<rational>"}}`, the
/// table holding every multiset over `alphabet` up to `max_degree`.
pub fn functional_json(f: &Functional, alphabet: &[Letter], max_degree: u32) -> Result<String> {
    let mut values = BTreeMap::new();
    for m in Multiset::enumerate(alphabet, max_degree) {
        values.insert(m.to_string(), f.eval(&m)?.to_string());
    }
    let raw = RawFunctional { max_degree, values };
    Ok(serde_json::to_string_pretty(&raw).expect("functional serializes"))
}

/// Rebuild a table functional from its JSON form. The table alphabet is
/// whatever the keys mention.
pub fn functional_from_json(text: &str) -> Result<(Functional, Vec<Letter>)> {
    let raw: RawFunctional =
        serde_json::from_str(text).map_err(|e| Error::InvalidSpec(format!("bad JSON: {e}")))?;
    let mut table = BTreeMap::new();
    let mut letters = Vec::new();
    for (mset, value) in &raw.values {
        let m = Multiset::from_str(mset)?;
        for letter in m.support() {
            if !letters.contains(letter) {
                letters.push(letter.clone());
            }
        }
        table.insert(m, Rat::from_str(value)?);
    }
    letters.sort();
    Ok((Functional::from_table(table, raw.max_degree), letters))
}

/// Plain-text functional dump: one `<mset> = <value>` line per basis
/// element, in the graded order.
pub fn functional_text(f: &Functional, alphabet: &[Letter], max_degree: u32) -> Result<String> {
    let mut out = String::new();
    for m in Multiset::enumerate(alphabet, max_degree) {
        out.push_str(&format!("{m} = {}\n", f.eval(&m)?));
    }
    Ok(out)
}

/// LaTeX functional dump: an aligned list of values.
pub fn functional_latex(f: &Functional, alphabet: &[Letter], max_degree: u32) -> Result<String> {
    let mut out = String::new();
    for m in Multiset::enumerate(alphabet, max_degree) {
        let rendered = if m.is_empty() {
            "1".to_owned()
        } else {
            multiset_latex(&m)
        };
        out.push_str(&format!(
            "{rendered} &\\mapsto {}\\\\\n",
            rat_latex(&f.eval(&m)?)
        ));
    }
    Ok(out)
}
