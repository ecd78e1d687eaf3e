//! Python bindings for the main types and operations: partitions come in
//! as lists of ints, expansions go out as lists of (index, coefficients)
//! pairs with coefficients ascending in q.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qhl::foundations::{Partition, StrictPartition};
use qhl::operators::compose_g;
use qhl::parabolic::{parabolic_g, PartitionSequence};
use qhl::qkostka::{kostant_r as kostant_r_impl, RootVector};
use qhl::qspace::{straighten as straighten_impl, QWord};
use qhl::QExpansion;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn strict(parts: Vec<u32>) -> PyResult<StrictPartition> {
    StrictPartition::new(parts).map_err(err)
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn expansion_pairs(e: &QExpansion) -> Vec<(Vec<u32>, Vec<i64>)> {
    e.terms()
        .map(|(l, c)| (l.parts().to_vec(), c.coeffs().to_vec()))
        .collect()
}

/// All strict partitions of n in ascending lexicographic order.
#[pyfunction]
fn strict_partitions(n: u32) -> Vec<Vec<u32>> {
    qhl::foundations::strict_partitions(n)
        .iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// n(lambda) = sum (i-1)*lambda_i.
#[pyfunction]
fn n_stat(parts: Vec<u32>) -> PyResult<u64> {
    Ok(partition(parts)?.n_stat())
}

/// Dominance order: a <= b.
#[pyfunction]
fn dominance_leq(a: Vec<u32>, b: Vec<u32>) -> PyResult<bool> {
    qhl::foundations::dominance_leq(&partition(a)?, &partition(b)?).map_err(err)
}

/// G_mu[X;q] in the Schur Q-basis: list of (lambda, coeffs) pairs.
#[pyfunction]
fn expand_g(mu: Vec<u32>) -> PyResult<Vec<(Vec<u32>, Vec<i64>)>> {
    Ok(expansion_pairs(&compose_g(&strict(mu)?)))
}

/// The Q-Kostka polynomial L_{lambda,mu}(q) as ascending coefficients.
#[pyfunction]
fn l_polynomial(lam: Vec<u32>, mu: Vec<u32>) -> PyResult<Vec<i64>> {
    let lam = strict(lam)?;
    let mu = strict(mu)?;
    if lam.weight() != mu.weight() {
        return Err(err(qhl::Error::WeightMismatch(lam.weight(), mu.weight())));
    }
    Ok(qhl::qkostka::l_table_vertex(&mu).get(&lam).coeffs().to_vec())
}

/// The full table for one content by a chosen algorithm
/// ("vertex", "morris", "series" or "kostant").
#[pyfunction]
#[pyo3(signature = (mu, algorithm="vertex"))]
fn l_table(mu: Vec<u32>, algorithm: &str) -> PyResult<Vec<(Vec<u32>, Vec<i64>)>> {
    let mu = strict(mu)?;
    let table = match algorithm {
        "vertex" => qhl::qkostka::l_table_vertex(&mu),
        "morris" => qhl::qkostka::l_table_morris(&mu),
        "series" => qhl::qkostka::l_table_series(&mu),
        "kostant" => qhl::qkostka::l_table_kostant(&mu),
        other => return Err(err(format!("unknown algorithm {other:?}"))),
    };
    Ok(table
        .rows()
        .map(|(l, c)| (l.parts().to_vec(), c.coeffs().to_vec()))
        .collect())
}

/// Number of marked shifted tableaux of the shape and content.
#[pyfunction]
#[pyo3(signature = (shape, content, unmarked_diagonal=true))]
fn count_tableaux(shape: Vec<u32>, content: Vec<u32>, unmarked_diagonal: bool) -> PyResult<usize> {
    let ts = qhl::shifted_tableaux::enumerate(&strict(shape)?, &partition(content)?, unmarked_diagonal)
        .map_err(err)?;
    Ok(ts.len())
}

/// Sizes of the mark-erasure classes, ascending.
#[pyfunction]
fn class_sizes(shape: Vec<u32>, content: Vec<u32>) -> PyResult<Vec<usize>> {
    let cls = qhl::shifted_tableaux::classes(&strict(shape)?, &partition(content)?).map_err(err)?;
    let mut sizes: Vec<usize> = cls.iter().map(|c| c.size).collect();
    sizes.sort_unstable();
    Ok(sizes)
}

/// (shape, class size, rank) triples from the first consistent rank
/// assignment of every shape.
#[pyfunction]
fn rank_levels(content: Vec<u32>) -> PyResult<Vec<(Vec<u32>, usize, usize)>> {
    let rs = qhl::shifted_tableaux::rank_search(&strict(content)?);
    let mut out = Vec::new();
    for sr in &rs.shapes {
        if let Some(first) = sr.assignments.first() {
            for (class, &rank) in sr.classes.iter().zip(first.iter()) {
                out.push((sr.shape.parts().to_vec(), class.size, rank));
            }
        }
    }
    Ok(out)
}

/// The Kostka-Foulkes polynomial K_{lambda,mu}(q), ascending coefficients.
#[pyfunction]
fn kostka_foulkes(lam: Vec<u32>, mu: Vec<u32>) -> PyResult<Vec<i64>> {
    let k = qhl::classical::kostka_foulkes(&partition(lam)?, &partition(mu)?).map_err(err)?;
    Ok(k.coeffs().to_vec())
}

/// Charges of all column-strict tableaux of the shape and content, sorted.
#[pyfunction]
fn charge_values(shape: Vec<u32>, content: Vec<u32>) -> PyResult<Vec<u32>> {
    let ts = qhl::classical::cst_enumerate(&partition(shape)?, &partition(content)?).map_err(err)?;
    let mut charges: Vec<u32> = ts.iter().map(qhl::classical::charge).collect();
    charges.sort_unstable();
    Ok(charges)
}

/// Straighten Q_{w_1}...Q_{w_k}(1); the result is a single signed
/// power-of-two multiple of a basis element, or empty.
#[pyfunction]
fn straighten_word(word: Vec<i64>) -> Vec<(Vec<u32>, Vec<i64>)> {
    expansion_pairs(&straighten_impl(&QWord(word)))
}

/// Parabolic expansion G_{mu*} for blocks given as lists of parts.
#[pyfunction]
fn parabolic_expansion(blocks: Vec<Vec<u32>>) -> PyResult<Vec<(Vec<u32>, Vec<i64>)>> {
    let blocks = blocks.into_iter().map(strict).collect::<PyResult<Vec<_>>>()?;
    let ps = PartitionSequence::new(blocks).map_err(err)?;
    Ok(expansion_pairs(&parabolic_g(&ps)))
}

/// The q-Kostant count R_q(alpha) for a root-lattice vector.
#[pyfunction]
fn kostant_r(entries: Vec<i64>) -> PyResult<Vec<i64>> {
    let rv = RootVector::new(entries).map_err(err)?;
    Ok(kostant_r_impl(&rv).coeffs().to_vec())
}

#[pymodule]
fn qhl_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(strict_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(n_stat, m)?)?;
    m.add_function(wrap_pyfunction!(dominance_leq, m)?)?;
    m.add_function(wrap_pyfunction!(expand_g, m)?)?;
    m.add_function(wrap_pyfunction!(l_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(l_table, m)?)?;
    m.add_function(wrap_pyfunction!(count_tableaux, m)?)?;
    m.add_function(wrap_pyfunction!(class_sizes, m)?)?;
    m.add_function(wrap_pyfunction!(rank_levels, m)?)?;
    m.add_function(wrap_pyfunction!(kostka_foulkes, m)?)?;
    m.add_function(wrap_pyfunction!(charge_values, m)?)?;
    m.add_function(wrap_pyfunction!(straighten_word, m)?)?;
    m.add_function(wrap_pyfunction!(parabolic_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(kostant_r, m)?)?;
    Ok(())
}
