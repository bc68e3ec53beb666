//! Truncated power series in `z` over any exact coefficient ring, plus the
//! generating-function identities built on them.

mod egf;
mod theta;

pub use egf::{
    carlitz_check, carlitz_series, d_diag_identity, d_diag_product_identity, derangement_identity, egf_carlitz, egf_rq,
    egf_t, f_diag_identity, f_dual_identity, f_dual_samples, pde_check, pde_check_rows, rq_series_check,
    rq_symmetry_check, rxyz_check, stanley_t, t_series_check, IdentityReport, IdentityWitness,
};
pub use theta::{r_discriminant, theta_identity_holds, theta_power_r, theta_target};

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{factorial, int, ratio, Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("constant term is not invertible")]
    NonInvertibleConstantTerm,
    #[error("{op} needs constant term {expected}")]
    BadConstantTerm { op: &'static str, expected: &'static str },
    #[error("coefficient {index} keeps a radical part or is not a polynomial")]
    ExtensionResidue { index: usize },
    #[error("sample x0 = {0} makes the construction degenerate")]
    DegenerateSample(Scalar),
}

/// `sum_{n <= order} coeffs[n] z^n`.
#[derive(Clone, PartialEq)]
pub struct TruncatedSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> TruncatedSeries<C> {
    /// Pads with zeros or truncates so that there are `order + 1` terms.
    /// `template` supplies the ring context for padding.
    pub fn new(template: &C, mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, template.zero_like());
        TruncatedSeries { coeffs }
    }

    /// `sum_n values[n] z^n / n!`.
    pub fn from_egf(template: &C, values: Vec<C>, order: usize) -> Self {
        let coeffs = values
            .into_iter()
            .enumerate()
            .map(|(n, v)| v.scaled(&Scalar::new(BigInt::from(1), factorial(n as u64))))
            .collect();
        Self::new(template, coeffs, order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        let t = c.zero_like();
        Self::new(&t, vec![c], order)
    }

    pub fn zero(template: &C, order: usize) -> Self {
        Self::new(template, Vec::new(), order)
    }

    pub fn one(template: &C, order: usize) -> Self {
        Self::constant(template.one_like(), order)
    }

    /// `e^(a z)`.
    pub fn exp_linear(a: &C, order: usize) -> Self {
        let mut coeffs = vec![a.one_like()];
        for n in 1..=order {
            let next = coeffs[n - 1].times(a).scaled(&ratio(1, n as i64));
            coeffs.push(next);
        }
        TruncatedSeries { coeffs }
    }

    /// `sin(a z)` and `cos(a z)`.
    pub fn sin_cos_linear(a: &C, order: usize) -> (Self, Self) {
        let e = Self::exp_linear(a, order);
        let zero = a.zero_like();
        let (mut s, mut c) = (vec![zero.clone(); order + 1], vec![zero; order + 1]);
        for (n, t) in e.coeffs.into_iter().enumerate() {
            let signed = if (n / 2) % 2 == 0 { t } else { t.negated() };
            if n % 2 == 0 {
                c[n] = signed;
            } else {
                s[n] = signed;
            }
        }
        (TruncatedSeries { coeffs: s }, TruncatedSeries { coeffs: c })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    /// `n! * [z^n]`.
    pub fn egf_coeff(&self, n: usize) -> C {
        self.coeffs[n].scaled(&Scalar::from_integer(factorial(n as u64)))
    }

    pub fn egf_coeffs(&self) -> Vec<C> {
        (0..=self.order()).map(|n| self.egf_coeff(n)).collect()
    }

    fn template(&self) -> C {
        self.coeffs[0].zero_like()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(&self.template(), self.coeffs.clone(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|n| self.coeffs[n].plus(&other.coeffs[n])).collect();
        TruncatedSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(Ring::negated).collect() }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.scaled(c)).collect() }
    }

    pub fn mul_coeff(&self, c: &C) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a.times(c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![self.template(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero_elem() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero_elem() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn inv(&self) -> Result<Self, SeriesError> {
        let c0inv = self.coeffs[0].try_inv().ok_or(SeriesError::NonInvertibleConstantTerm)?;
        let mut out = vec![c0inv.clone()];
        for n in 1..=self.order() {
            let mut acc = self.template();
            for k in 1..=n {
                if !self.coeffs[k].is_zero_elem() {
                    acc = acc.plus(&self.coeffs[k].times(&out[n - k]));
                }
            }
            out.push(acc.times(&c0inv).negated());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inv()?))
    }

    fn require_constant(&self, one: bool, op: &'static str) -> Result<(), SeriesError> {
        let c0 = &self.coeffs[0];
        let ok = if one { c0.minus(&c0.one_like()).is_zero_elem() } else { c0.is_zero_elem() };
        if ok {
            Ok(())
        } else {
            Err(SeriesError::BadConstantTerm { op, expected: if one { "1" } else { "0" } })
        }
    }

    /// From `E' = S' E`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        self.require_constant(false, "exp")?;
        let mut out = vec![self.coeffs[0].one_like()];
        for n in 1..=self.order() {
            let mut acc = self.template();
            for k in 1..=n {
                if !self.coeffs[k].is_zero_elem() {
                    acc = acc.plus(&self.coeffs[k].times(&out[n - k]).scaled(&int(k as i64)));
                }
            }
            out.push(acc.scaled(&ratio(1, n as i64)));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// From `S L' = S'` with `S(0) = 1`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        self.require_constant(true, "log")?;
        let mut out = vec![self.template()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].scaled(&int(n as i64));
            for (k, lk) in out.iter().enumerate().take(n).skip(1) {
                if !lk.is_zero_elem() {
                    acc = acc.minus(&lk.times(&self.coeffs[n - k]).scaled(&int(k as i64)));
                }
            }
            out.push(acc.scaled(&ratio(1, n as i64)));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// From `R^2 = S` with `R(0) = 1`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        self.require_constant(true, "sqrt")?;
        let mut out = vec![self.coeffs[0].one_like()];
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc = acc.minus(&out[k].times(&out[n - k]));
            }
            out.push(acc.scaled(&ratio(1, 2)));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `exp(q log S)`.
    pub fn pow_rational(&self, q: &Scalar) -> Result<Self, SeriesError> {
        self.log()?.scale(q).exp()
    }

    /// `S(c z)`.
    pub fn scale_z(&self, c: &C) -> Self {
        let mut power = c.one_like();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.times(&power));
            power = power.times(c);
        }
        TruncatedSeries { coeffs }
    }

    /// `d/dz`, losing one order.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(&self.template(), 0);
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(n, a)| a.scaled(&int(n as i64))).collect();
        TruncatedSeries { coeffs }
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<D: Ring, E>(&self, f: impl Fn(usize, &C) -> Result<D, E>) -> Result<TruncatedSeries<D>, E> {
        let coeffs = self.coeffs.iter().enumerate().map(|(n, c)| f(n, c)).collect::<Result<_, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

impl<C: Ring + fmt::Display> TruncatedSeries<C> {
    /// One line per term: `n  n!*[z^n]`.
    pub fn egf_table(&self) -> String {
        let mut out = String::from("n\tn! [z^n]\n");
        for n in 0..=self.order() {
            out.push_str(&format!("{n}\t{}\n", self.egf_coeff(n)));
        }
        out
    }
}

impl<C: Ring + fmt::Display> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..=self.order())
            .filter(|&n| !self.coeffs[n].is_zero_elem())
            .map(|n| format!("({}) z^{n}/{n}!", self.egf_coeff(n)))
            .collect();
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl<C: Ring> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}
