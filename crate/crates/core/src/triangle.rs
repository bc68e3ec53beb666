//! Doubly indexed arrays of exact entries.

use crate::algebra::{Poly, Ring, Scalar};

/// Rows `first_row..=max_n`; row `n` stores entries for `k = 0..row.len()`
/// and every entry outside that range is zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle<E> {
    name: String,
    first_row: usize,
    rows: Vec<Vec<E>>,
}

/// How an entry prints in tables and exports.
pub trait Entry: Ring {
    fn render(&self) -> String;
    fn entry_zero() -> Self;
}

impl Entry for Scalar {
    fn render(&self) -> String {
        self.to_string()
    }
    fn entry_zero() -> Self {
        <Scalar as num_traits::Zero>::zero()
    }
}

/// Polynomial entries are polynomials in `q`.
impl Entry for Poly {
    fn render(&self) -> String {
        self.display_var("q").to_string()
    }
    fn entry_zero() -> Self {
        Poly::zero()
    }
}

impl<E: Entry> Triangle<E> {
    pub fn new(name: impl Into<String>, first_row: usize, rows: Vec<Vec<E>>) -> Self {
        Triangle { name: name.into(), first_row, rows }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn first_row(&self) -> usize {
        self.first_row
    }

    pub fn max_n(&self) -> Option<usize> {
        (!self.rows.is_empty()).then(|| self.first_row + self.rows.len() - 1)
    }

    pub fn row(&self, n: usize) -> Option<&[E]> {
        n.checked_sub(self.first_row).and_then(|i| self.rows.get(i)).map(Vec::as_slice)
    }

    /// Inclusive k-range stored for row `n`.
    pub fn k_range(&self, n: usize) -> Option<(usize, usize)> {
        self.row(n).map(|r| (0, r.len().saturating_sub(1)))
    }

    pub fn entry(&self, n: usize, k: usize) -> E {
        self.row(n).and_then(|r| r.get(k)).cloned().unwrap_or_else(E::entry_zero)
    }

    /// Iterates `(n, row)` pairs.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &[E])> {
        self.rows.iter().enumerate().map(move |(i, r)| (i + self.first_row, r.as_slice()))
    }

    pub fn rows_mut(&mut self) -> impl Iterator<Item = &mut Vec<E>> {
        self.rows.iter_mut()
    }
}

impl Triangle<Scalar> {
    /// `sum_k T(n, k) x^k`.
    pub fn row_poly(&self, n: usize) -> Option<Poly> {
        self.row(n).map(|r| Poly::new(r.to_vec()))
    }
}
