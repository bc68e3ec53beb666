//! Recurrence-defined triangles and polynomial sequences. These are the
//! canonical producers that grammar images, enumerations and generating
//! functions are checked against.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{binomial, int, pow_i64, ratio, Alphabet, MultiPoly, Poly, Scalar};
use crate::triangle::{Entry, Triangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} is defined from n = {first}, asked for n = {n}")]
    IndexOutOfRange { family: &'static str, first: usize, n: usize },
}

/// Triangles with scalar entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Alternating runs, rows from n = 1.
    R,
    /// Up-down runs.
    T,
    /// Gamma coefficients of the type A Eulerian polynomials, rows from n = 1.
    A,
    /// Gamma coefficients of the type B Eulerian polynomials.
    B,
    /// Alternating runs of dual Stirling permutations.
    F,
    /// Gamma coefficients of `F_n`.
    Gamma,
    /// Semi-gamma coefficients of `F_n`.
    SemiF,
}

impl Family {
    pub const ALL: [Family; 7] = [Family::R, Family::T, Family::A, Family::B, Family::F, Family::Gamma, Family::SemiF];

    pub fn name(self) -> &'static str {
        match self {
            Family::R => "R",
            Family::T => "T",
            Family::A => "a",
            Family::B => "b",
            Family::F => "F",
            Family::Gamma => "gamma",
            Family::SemiF => "f",
        }
    }

    pub fn first_row(self) -> usize {
        match self {
            Family::R | Family::A => 1,
            _ => 0,
        }
    }

    /// Length of row `n` (the stored k-range is `0..len`).
    fn row_len(self, n: usize) -> usize {
        match self {
            Family::R => n,
            Family::T | Family::Gamma | Family::SemiF => n + 1,
            Family::A => n.div_ceil(2) + 1,
            Family::B => n / 2 + 1,
            Family::F if n == 0 => 1,
            Family::F => 2 * n,
        }
    }

    fn initial_row(self) -> Vec<Scalar> {
        match self {
            Family::A => vec![int(0), int(1)],
            _ => vec![int(1)],
        }
    }

    /// Multipliers of `prev[k]`, `prev[k-1]`, `prev[k-2]` when building row
    /// `n + 1` from row `n`.
    fn weights(self, n: i64, k: i64) -> [i64; 3] {
        match self {
            Family::R => [k, 2, n - k + 1],
            Family::T => [k, 1, n - k + 2],
            // a(n+1,k) = k a(n,k) + (2(n+1) - 4k + 4) a(n,k-1)
            Family::A => [k, 2 * n - 4 * k + 6, 0],
            // b(n+1,k) = (1+2k) b(n,k) + 4(n+1 - 2k + 1) b(n,k-1)
            Family::B => [1 + 2 * k, 4 * (n - 2 * k + 2), 0],
            Family::F => [k, 1, 2 * n - k + 2],
            Family::Gamma => [k, 2 * n - 4 * k + 5, 0],
            Family::SemiF => [k, 1, 4 * (n - k + 2)],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

fn prev_entry<E: Entry>(row: &[E], k: i64) -> E {
    if k < 0 {
        E::entry_zero()
    } else {
        row.get(k as usize).cloned().unwrap_or_else(E::entry_zero)
    }
}

/// Rows `first_row..=max_n` of a scalar family. Asking for `max_n` below the
/// first row yields an empty triangle.
pub fn triangle(family: Family, max_n: usize) -> Triangle<Scalar> {
    let first = family.first_row();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    if max_n >= first {
        rows.push(family.initial_row());
    }
    for n in first..max_n {
        let prev = rows.last().unwrap();
        let next = (0..family.row_len(n + 1) as i64)
            .map(|k| {
                let w = family.weights(n as i64, k);
                (0..3)
                    .filter(|&j| w[j] != 0)
                    .map(|j| prev_entry(prev, k - j as i64) * int(w[j]))
                    .fold(Scalar::zero(), |a, b| a + b)
            })
            .collect();
        rows.push(next);
    }
    Triangle::new(family.name(), first, rows)
}

/// `R_{n,k}(q)`: q-alternating run triangle, entries are polynomials in `q`.
pub fn rq_triangle(max_n: usize) -> Triangle<Poly> {
    let q = Poly::x();
    let mut rows = vec![vec![Poly::one()]];
    for n in 0..max_n as i64 {
        let prev = rows.last().unwrap();
        let next = (0..=n + 1)
            .map(|k| {
                &(&prev_entry(prev, k).scale(&int(k)) + &(&q * &prev_entry(prev, k - 1)))
                    + &prev_entry(prev, k - 2).scale(&int(n - k + 2))
            })
            .collect();
        rows.push(next);
    }
    Triangle::new("Rq", 0, rows)
}

/// Either kind of triangle, for front ends that pick a family by name.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyTriangle {
    Scalar(Triangle<Scalar>),
    QPoly(Triangle<Poly>),
}

/// Accepts `R|T|Rq|a|b|F|gamma|f`.
pub fn triangle_by_name(name: &str, max_n: usize) -> Result<AnyTriangle, FamilyError> {
    if name == "Rq" {
        return Ok(AnyTriangle::QPoly(rq_triangle(max_n)));
    }
    Ok(AnyTriangle::Scalar(triangle(name.parse()?, max_n)))
}

/// `sum_k R_{n,k}(q0) x^k`.
pub fn q_specialize(row: &[Poly], q0: &Scalar) -> Poly {
    Poly::new(row.iter().map(|e| e.evaluate(q0)).collect())
}

/// `R_n(x;q)` as a polynomial over the alphabet `[x, q]`.
pub fn rq_bivariate(row: &[Poly]) -> MultiPoly {
    let al = Alphabet::new(&["x", "q"]);
    let mut out = MultiPoly::zero(&al);
    for (k, e) in row.iter().enumerate() {
        for (j, c) in e.coeffs().iter().enumerate() {
            out.add_term(vec![k as u32, j as u32], c.clone());
        }
    }
    out
}

/// `R_n(x,y;q0) = sum_i C(n,i) (q0 x y - q0 x)^i R_{n-i}(x;q0)` over `[x, y]`.
pub fn inclusion_exclusion_rxy(n: usize, q0: &Scalar) -> MultiPoly {
    let al = Alphabet::new(&["x", "y"]);
    let rq = rq_triangle(n);
    let x = MultiPoly::var(&al, "x").unwrap();
    let y = MultiPoly::var(&al, "y").unwrap();
    let base = (&(&x * &y) - &x).scale(q0);
    let mut out = MultiPoly::zero(&al);
    let mut pw = MultiPoly::one(&al);
    for i in 0..=n {
        let r = q_specialize(rq.row(n - i).unwrap(), q0);
        let r = MultiPoly::from_univariate(&al, "x", &r).unwrap();
        let term = (&pw * &r).scale(&Scalar::from_integer(binomial(n as u64, i as u64)));
        out = &out + &term;
        pw = &pw * &base;
    }
    out
}

/// Polynomial sequences defined by a differential recurrence or by a gamma
/// expansion of a triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sequence {
    BPoly,
    CPoly,
    DPoly,
    GammaPoly,
    FPoly,
    EulerA,
    EulerB,
}

impl Sequence {
    pub const ALL: [Sequence; 7] = [
        Sequence::BPoly,
        Sequence::CPoly,
        Sequence::DPoly,
        Sequence::GammaPoly,
        Sequence::FPoly,
        Sequence::EulerA,
        Sequence::EulerB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Sequence::BPoly => "bpoly",
            Sequence::CPoly => "cpoly",
            Sequence::DPoly => "dpoly",
            Sequence::GammaPoly => "gammapoly",
            Sequence::FPoly => "Fpoly",
            Sequence::EulerA => "eulerA",
            Sequence::EulerB => "eulerB",
        }
    }

    pub fn first_index(self) -> usize {
        match self {
            Sequence::CPoly | Sequence::EulerA => 1,
            _ => 0,
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Sequence {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sequence::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySeq {
    pub sequence: Sequence,
    pub first_index: usize,
    pub values: Vec<Poly>,
}

impl PolySeq {
    pub fn get(&self, n: usize) -> Option<&Poly> {
        n.checked_sub(self.first_index).and_then(|i| self.values.get(i))
    }
}

/// `next = mult * p + x(1 - c x^2)... ` style step: `a(x) p + b(x) p'`.
fn diff_step(p: &Poly, mult: &Poly, deriv_mult: &Poly) -> Poly {
    &(mult * p) + &(deriv_mult * &p.derivative())
}

pub fn polyseq(seq: Sequence, max_n: usize) -> PolySeq {
    let first = seq.first_index();
    let two_x_one_minus_x2 = Poly::from_ints(&[0, 2, 0, -2]);
    let x_one_minus_x2 = Poly::from_ints(&[0, 1, 0, -1]);
    let mut values: Vec<Poly> = Vec::new();
    match seq {
        Sequence::BPoly => {
            values.push(Poly::one());
            for n in 0..max_n as i64 {
                let p = values.last().unwrap();
                values.push(diff_step(p, &Poly::from_ints(&[1, 1, 2 * n]), &two_x_one_minus_x2));
            }
        }
        Sequence::CPoly => {
            if max_n >= 1 {
                values.push(Poly::x());
            }
            for n in 1..max_n as i64 {
                let p = values.last().unwrap();
                values.push(diff_step(p, &Poly::from_ints(&[-1, 3, 2 * n]), &two_x_one_minus_x2));
            }
        }
        Sequence::DPoly => {
            values.push(Poly::one());
            if max_n >= 1 {
                values.push(Poly::zero());
            }
            for n in 1..max_n as i64 {
                let cur = &values[n as usize];
                let prev = &values[n as usize - 1];
                let next =
                    &diff_step(cur, &Poly::monomial(int(n), 2), &x_one_minus_x2) + &prev.shift_up(1).scale(&int(n));
                values.push(next);
            }
        }
        Sequence::GammaPoly => {
            values.push(Poly::one());
            for n in 0..max_n as i64 {
                let p = values.last().unwrap();
                values.push(diff_step(p, &Poly::monomial(int(2 * n + 1), 1), &Poly::from_ints(&[0, 1, -4])));
            }
        }
        Sequence::FPoly => {
            values.push(Poly::one());
            for n in 0..max_n as i64 {
                let p = values.last().unwrap();
                values.push(diff_step(p, &Poly::from_ints(&[0, 1, 2 * n]), &x_one_minus_x2));
            }
        }
        Sequence::EulerA => {
            values = (1..=max_n).map(eulerian_a).collect();
        }
        Sequence::EulerB => {
            values = (0..=max_n).map(eulerian_b).collect();
        }
    }
    PolySeq { sequence: seq, first_index: first, values }
}

/// `sum_k w_k c_k x^k (1+x)^(e - k * step)` style assembly used by every
/// gamma-type expansion in this module.
fn assemble(coeffs: &[Scalar], weight: impl Fn(usize) -> Scalar, outer: usize, step: usize, base: &Poly) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| base.pow((outer - step * k) as u32).shift_up(k).scale(&(c * weight(k))))
        .fold(Poly::zero(), |a, b| &a + &b)
}

/// `A_n(x) = sum_k a(n,k) x^k (1+x)^(n+1-2k)`, i.e. `sum x^(des+1)`.
pub fn eulerian_a(n: usize) -> Poly {
    let t = triangle(Family::A, n);
    match t.row(n) {
        Some(row) => assemble(row, |_| Scalar::one(), n + 1, 2, &Poly::one_plus_x()),
        None => Poly::one(),
    }
}

/// `B_n(x) = sum_k b(n,k) x^k (1+x)^(n-2k)`, i.e. `sum x^(des_B)`.
pub fn eulerian_b(n: usize) -> Poly {
    let t = triangle(Family::B, n);
    assemble(t.row(n).unwrap(), |_| Scalar::one(), n, 2, &Poly::one_plus_x())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EulerType {
    A,
    B,
}

pub fn eulerian(n: usize, kind: EulerType) -> Result<Poly, FamilyError> {
    match kind {
        EulerType::A if n == 0 => Err(FamilyError::IndexOutOfRange { family: "eulerA", first: 1, n }),
        EulerType::A => Ok(eulerian_a(n)),
        EulerType::B => Ok(eulerian_b(n)),
    }
}

/// `b_n(x) = sum_k 2^-k b(n,k) x^k (1+x)^(n-k)`.
pub fn b_from_triangle(n: usize) -> Poly {
    let t = triangle(Family::B, n);
    assemble(t.row(n).unwrap(), |k| pow_i64(&ratio(1, 2), k as i64), n, 1, &Poly::one_plus_x())
}

/// `F_n(x) = sum_k gamma_{n,k} x^k (1+x)^(2n-2k)`.
pub fn f_from_gamma(n: usize) -> Poly {
    let t = triangle(Family::Gamma, n);
    assemble(t.row(n).unwrap(), |_| Scalar::one(), 2 * n, 2, &Poly::one_plus_x())
}

/// `F_n(x) = sum_k f_{n,k} x^k (1+x^2)^(n-k)`.
pub fn f_from_semi(n: usize) -> Poly {
    let t = triangle(Family::SemiF, n);
    assemble(t.row(n).unwrap(), |_| Scalar::one(), n, 1, &Poly::from_ints(&[1, 0, 1]))
}
