//! Table document construction, serialization and the per-weight cache.
//!
//! The JSON schema is
//! `{"weight": n, "order": [[parts], …], "entries": [{"mu": […], "lambda": […], "coeffs": [c0,c1,…]}, …]}`
//! with raw coefficients ascending in `q` and entries sorted by (mu, lambda)
//! in ascending lexicographic order; only nonzero entries are stored. Cache
//! files carry the same document plus a `schema_version` field and are
//! ignored when the version or weight disagrees.

use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use qhl::foundations::{strict_partitions, QPolynomial};
use qhl::qkostka::{l_table_morris, l_table_vertex};

use crate::{Failure, TableFormat};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq)]
pub struct Entry {
    pub mu: Vec<u32>,
    pub lambda: Vec<u32>,
    pub coeffs: Vec<i64>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq)]
pub struct TableDocument {
    pub weight: u32,
    pub order: Vec<Vec<u32>>,
    pub entries: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema_version: u32,
    weight: u32,
    order: Vec<Vec<u32>>,
    entries: Vec<Entry>,
}

fn cache_path(dir: &Path, weight: u32) -> std::path::PathBuf {
    dir.join(format!("ltable-{weight}.json"))
}

fn try_load(dir: &Path, weight: u32) -> Option<TableDocument> {
    let bytes = fs::read(cache_path(dir, weight)).ok()?;
    let cached: CacheFile = serde_json::from_slice(&bytes).ok()?;
    if cached.schema_version != SCHEMA_VERSION || cached.weight != weight {
        return None;
    }
    let order: Vec<Vec<u32>> = strict_partitions(weight)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect();
    if cached.order != order {
        return None;
    }
    Some(TableDocument { weight, order: cached.order, entries: cached.entries })
}

fn store(dir: &Path, doc: &TableDocument) {
    let file = CacheFile {
        schema_version: SCHEMA_VERSION,
        weight: doc.weight,
        order: doc.order.clone(),
        entries: doc.entries.clone(),
    };
    let path = cache_path(dir, doc.weight);
    let tmp = path.with_extension("json.tmp");
    let write = || -> std::io::Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(&tmp, serde_json::to_string_pretty(&file).expect("serializable"))?;
        fs::rename(&tmp, &path)
    };
    if let Err(e) = write() {
        eprintln!("warning: could not write cache {}: {e}", path.display());
    }
}

/// Compute the full table for one weight with the vertex route, verify it
/// against the Morris recurrence row by row, and return the document.
fn compute(weight: u32) -> Result<TableDocument, Failure> {
    let order = strict_partitions(weight);
    let rows: Result<Vec<Vec<Entry>>, Failure> = order
        .par_iter()
        .map(|mu| {
            let vertex = l_table_vertex(mu);
            let morris = l_table_morris(mu);
            if !vertex.entries_eq(&morris) {
                return Err(Failure::Internal(format!(
                    "vertex and Morris tables disagree at mu = {mu}"
                )));
            }
            Ok(vertex
                .rows()
                .map(|(lam, c)| Entry {
                    mu: mu.parts().to_vec(),
                    lambda: lam.parts().to_vec(),
                    coeffs: c.coeffs().to_vec(),
                })
                .collect())
        })
        .collect();
    Ok(TableDocument {
        weight,
        order: order.iter().map(|p| p.parts().to_vec()).collect(),
        entries: rows?.into_iter().flatten().collect(),
    })
}

pub fn load_or_compute(weight: u32, cache_dir: Option<&Path>) -> Result<TableDocument, Failure> {
    if let Some(dir) = cache_dir {
        if let Some(doc) = try_load(dir, weight) {
            return Ok(doc);
        }
    }
    let doc = compute(weight)?;
    if let Some(dir) = cache_dir {
        store(dir, &doc);
    }
    Ok(doc)
}

fn scaled_coeffs(entry: &Entry) -> Result<Vec<i64>, Failure> {
    let e = entry.mu.len() as i64 - entry.lambda.len() as i64;
    debug_assert!(e >= 0, "support lies above mu in dominance");
    QPolynomial::from_coeffs(entry.coeffs.clone())
        .div_exact_pow2(e as u32)
        .map(|p| p.coeffs().to_vec())
        .ok_or_else(|| {
            Failure::Internal(format!(
                "2^{{l(mu)-l(lambda)}} does not divide L at mu={:?} lambda={:?}",
                entry.mu, entry.lambda
            ))
        })
}

fn doc_with_scaling(doc: &TableDocument, scaled: bool) -> Result<TableDocument, Failure> {
    if !scaled {
        return Ok(doc.clone());
    }
    let entries = doc
        .entries
        .iter()
        .map(|e| {
            Ok(Entry {
                mu: e.mu.clone(),
                lambda: e.lambda.clone(),
                coeffs: scaled_coeffs(e)?,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    Ok(TableDocument { weight: doc.weight, order: doc.order.clone(), entries })
}

fn latex_poly(coeffs: &[i64]) -> String {
    let nonzero: Vec<(usize, i64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k, c))
        .collect();
    if nonzero.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in nonzero.iter().enumerate() {
        let (sign, a) = if *c < 0 { ("-", -c) } else { (if i == 0 { "" } else { "+" }, *c) };
        out.push_str(sign);
        match (a, k) {
            (_, 0) => out.push_str(&a.to_string()),
            (1, 1) => out.push('q'),
            (1, _) => out.push_str(&format!("q^{{{k}}}")),
            (_, 1) => out.push_str(&format!("{a}\\,q")),
            (_, _) => out.push_str(&format!("{a}\\,q^{{{k}}}")),
        }
    }
    out
}

fn render_latex(doc: &TableDocument) -> String {
    let n = doc.order.len();
    let mut lookup = std::collections::BTreeMap::new();
    for e in &doc.entries {
        lookup.insert((e.mu.clone(), e.lambda.clone()), e.coeffs.clone());
    }
    let mut s = String::new();
    s.push_str("\\begin{equation*}\n\\left[\\begin{array}{");
    s.push_str(&"c".repeat(n));
    s.push_str("}\n");
    let header: Vec<String> = doc
        .order
        .iter()
        .map(|p| {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    s.push_str(&header.join("&"));
    s.push_str("\\\\\n");
    for mu in &doc.order {
        let row: Vec<String> = doc
            .order
            .iter()
            .map(|lam| match lookup.get(&(mu.clone(), lam.clone())) {
                Some(c) => latex_poly(c),
                None => "0".to_string(),
            })
            .collect();
        s.push_str(&row.join("&"));
        s.push_str("\\\\\n");
    }
    s.push_str("\\end{array}\\right]\n\\end{equation*}\n");
    s
}

fn render_csv(doc: &TableDocument) -> String {
    let mut s = String::from("mu,lambda,coeffs\n");
    for e in &doc.entries {
        let join = |v: &[u32]| {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        };
        let coeffs = e.coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        s.push_str(&format!("\"{}\",\"{}\",\"{}\"\n", join(&e.mu), join(&e.lambda), coeffs));
    }
    s
}

pub fn render(doc: &TableDocument, format: TableFormat, scaled: bool) -> Result<String, Failure> {
    let doc = doc_with_scaling(doc, scaled)?;
    Ok(match format {
        TableFormat::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            s
        }
        TableFormat::Csv => render_csv(&doc),
        TableFormat::Latex => render_latex(&doc),
    })
}
