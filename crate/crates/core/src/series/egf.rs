//! Closed-form exponential generating functions and the identities that tie
//! them to the recurrence triangles.

use std::fmt::Display;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{SeriesError, TruncatedSeries};
use crate::algebra::{int, Alphabet, MultiPoly, Poly, QuadExt, RationalFunction, Ring, Scalar};
use crate::families::{
    inclusion_exclusion_rxy, polyseq, q_specialize, rq_bivariate, rq_triangle, triangle, Family, Sequence,
};
use crate::gamma::farey_samples;

/// Outcome of comparing a closed form with its oracle through `order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub order: usize,
    pub pass: bool,
    /// Smallest `n` whose coefficients disagree.
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "order": self.order,
            "pass": self.pass,
            "first_mismatch": self.first_mismatch,
        })
    }
}

/// A report together with both sides, as `n! [z^n]` rendered to text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityWitness {
    pub report: IdentityReport,
    pub closed_form: Vec<String>,
    pub oracle: Vec<String>,
}

fn compare<C: PartialEq + Display>(identity: &str, order: usize, lhs: &[C], rhs: &[C]) -> IdentityWitness {
    let first_mismatch = (0..=order).find(|&n| lhs.get(n) != rhs.get(n));
    IdentityWitness {
        report: IdentityReport {
            identity: identity.to_string(),
            order,
            pass: first_mismatch.is_none(),
            first_mismatch,
        },
        closed_form: lhs.iter().map(ToString::to_string).collect(),
        oracle: rhs.iter().map(ToString::to_string).collect(),
    }
}

/// `(1-x) (1 + rho + 2x e^(rho z) + (1-rho) e^(2 rho z)) /
///  (1 + rho - x^2 + (1 - rho - x^2) e^(2 rho z))` with `rho^2 = 1 - x^2`.
pub fn stanley_t<C: Ring>(x: &C, rho: &C, order: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    let one = x.one_like();
    let x2 = x.times(x);
    let e1 = TruncatedSeries::exp_linear(rho, order);
    let e2 = TruncatedSeries::exp_linear(&rho.scaled(&int(2)), order);
    let num = TruncatedSeries::constant(one.plus(rho), order)
        .add(&e1.mul_coeff(&x.scaled(&int(2))))
        .add(&e2.mul_coeff(&one.minus(rho)));
    let den = TruncatedSeries::constant(one.plus(rho).minus(&x2), order).add(&e2.mul_coeff(&one.minus(rho).minus(&x2)));
    Ok(num.div(&den)?.mul_coeff(&one.minus(x)))
}

/// `(1-x)/(1+x) * ((rho + sin(rho z)) / (x - cos(rho z)))^2`.
pub fn carlitz_series<C: Ring>(x: &C, rho: &C, order: usize) -> Result<TruncatedSeries<C>, SeriesError> {
    let one = x.one_like();
    let (sin, cos) = TruncatedSeries::sin_cos_linear(rho, order);
    let num = TruncatedSeries::constant(rho.clone(), order).add(&sin);
    let den = TruncatedSeries::constant(x.clone(), order).sub(&cos);
    let ratio = num.div(&den)?;
    let front = one.minus(x).times(&one.plus(x).try_inv().ok_or(SeriesError::NonInvertibleConstantTerm)?);
    Ok(ratio.mul(&ratio).mul_coeff(&front))
}

/// `x` and `rho` inside `Q(x)[rho] / (rho^2 - (1 - x^2))`.
fn rho_extension() -> (QuadExt, QuadExt) {
    let disc = RationalFunction::from_poly(Poly::from_ints(&[1, 0, -1]));
    (QuadExt::from_base(RationalFunction::from_poly(Poly::x()), &disc), QuadExt::rho(&disc))
}

/// Asserts every coefficient has lost its `rho` part and is a polynomial.
fn collapse(s: &TruncatedSeries<QuadExt>) -> Result<TruncatedSeries<Poly>, SeriesError> {
    s.try_map(|n, c| {
        if !c.radical().is_zero() {
            return Err(SeriesError::ExtensionResidue { index: n });
        }
        c.base().to_poly().map_err(|_| SeriesError::ExtensionResidue { index: n })
    })
}

/// Stanley's `T(x, z)`; `n! [z^n] = T_n(x)`.
pub fn egf_t(order: usize) -> Result<TruncatedSeries<Poly>, SeriesError> {
    let (x, rho) = rho_extension();
    collapse(&stanley_t(&x, &rho, order)?)
}

/// Carlitz's form; `n! [z^n] = sum_k R_{n+1,k} x^(n-k)`.
pub fn egf_carlitz(order: usize) -> Result<TruncatedSeries<Poly>, SeriesError> {
    let (x, rho) = rho_extension();
    collapse(&carlitz_series(&x, &rho, order)?)
}

/// `T(x, z)^q0`; `n! [z^n] = R_n(x; q0)`.
pub fn egf_rq(q0: &Scalar, order: usize) -> Result<TruncatedSeries<Poly>, SeriesError> {
    egf_t(order)?.pow_rational(q0)
}

/// `e^(-xz) T(x, z)` against the derangement polynomials `d_n(x)`.
pub fn derangement_identity(order: usize) -> Result<IdentityWitness, SeriesError> {
    let t = egf_t(order)?;
    let lhs = TruncatedSeries::exp_linear(&-Poly::x(), order).mul(&t).egf_coeffs();
    let rhs = polyseq(Sequence::DPoly, order).values;
    Ok(compare("derangement", order, &lhs, &rhs))
}

/// `0, 1/2, 1/3, 2/5`, then further fractions of (0, 1) until there are
/// `2 * order + 1` distinct points, one more than the degree bound `2n` of
/// both sides at every `n <= order`.
pub fn f_dual_samples(order: usize) -> Vec<Scalar> {
    let mut out = vec![
        Scalar::zero(),
        Scalar::new(1.into(), 2.into()),
        Scalar::new(1.into(), 3.into()),
        Scalar::new(2.into(), 5.into()),
    ];
    let needed = 2 * order + 1;
    let mut extra = farey_samples(needed + 4).into_iter();
    while out.len() < needed {
        let c = extra.next().expect("enough fractions");
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// `sqrt(T(2x0/(1+x0^2), (1+x0^2) z))` against `F_n(x0)`. The inner
/// discriminant `1 - u^2` is the square of `(1-x0^2)/(1+x0^2)`, so the whole
/// computation stays in Q.
pub fn f_dual_identity(x0: &Scalar, order: usize) -> Result<IdentityWitness, SeriesError> {
    let one = Scalar::one();
    if x0 * x0 == one {
        return Err(SeriesError::DegenerateSample(x0.clone()));
    }
    let s = &one + x0 * x0;
    let u = x0 * int(2) / &s;
    let rho = (&one - x0 * x0) / &s;
    let lhs = stanley_t(&u, &rho, order)?.scale_z(&s).sqrt()?.egf_coeffs();
    let f = polyseq(Sequence::FPoly, order);
    let rhs: Vec<Scalar> = f.values.iter().map(|p| p.evaluate(x0)).collect();
    Ok(compare(&format!("F_dual@{x0}"), order, &lhs, &rhs))
}

fn tan_sec(order: usize) -> Result<(TruncatedSeries<Scalar>, TruncatedSeries<Scalar>), SeriesError> {
    let (sin, cos) = TruncatedSeries::sin_cos_linear(&int(1), order);
    let sec = cos.inv()?;
    Ok((sin.mul(&sec), sec))
}

/// `sqrt((1 + tan z)/(1 - tan z))` against the diagonal `f_{n,n}`.
pub fn f_diag_identity(order: usize) -> Result<IdentityWitness, SeriesError> {
    let (tan, _) = tan_sec(order)?;
    let one = TruncatedSeries::one(&int(0), order);
    let lhs = one.add(&tan).div(&one.sub(&tan))?.sqrt()?.egf_coeffs();
    let f = triangle(Family::SemiF, order);
    let rhs: Vec<Scalar> = (0..=order).map(|n| f.entry(n, n)).collect();
    Ok(compare("f_diag", order, &lhs, &rhs))
}

fn d_diagonal(order: usize) -> Vec<Scalar> {
    polyseq(Sequence::DPoly, order).values.iter().enumerate().map(|(n, p)| p.coeff(n)).collect()
}

/// `e^(-z) / (tan z + sec z)` against the diagonal `d_{n,n}`.
pub fn d_diag_identity(order: usize) -> Result<IdentityWitness, SeriesError> {
    let (tan, sec) = tan_sec(order)?;
    let lhs = TruncatedSeries::exp_linear(&int(-1), order).div(&tan.add(&sec))?.egf_coeffs();
    Ok(compare("d_diag", order, &lhs, &d_diagonal(order)))
}

/// `e^(-z) (tan z + sec z)` against the diagonal `d_{n,n}`; this is the
/// diagonal of `e^(-xz) T(x, z)` since `T_{n,n}` is the Euler number.
pub fn d_diag_product_identity(order: usize) -> Result<IdentityWitness, SeriesError> {
    let (tan, sec) = tan_sec(order)?;
    let lhs = TruncatedSeries::exp_linear(&int(-1), order).mul(&tan.add(&sec)).egf_coeffs();
    Ok(compare("d_diag_product", order, &lhs, &d_diagonal(order)))
}

/// `R_{n+1} - n x^2 R_n = x(1-x^2) dR_n/dx + q x R_n` for `n < order`,
/// the coefficientwise form of the PDE, on `R_n(x;q)` over `[x, q]`.
pub fn pde_check_rows(rows: &[MultiPoly], order: usize) -> IdentityReport {
    let al = rows[0].alphabet().clone();
    let x = MultiPoly::var(&al, "x").expect("x in alphabet");
    let q = MultiPoly::var(&al, "q").expect("q in alphabet");
    let x2 = &x * &x;
    let x_one_minus_x2 = &x - &(&x2 * &x);
    let first_mismatch = (0..order).find(|&n| {
        let r = &rows[n];
        let lhs = &rows[n + 1] - &(&x2 * r).scale(&int(n as i64));
        let rhs = &(&x_one_minus_x2 * &r.partial(0)) + &(&(&q * &x) * r);
        lhs != rhs
    });
    IdentityReport { identity: "pde".into(), order, pass: first_mismatch.is_none(), first_mismatch }
}

/// PDE check on rows of the `R_n(x;q)` recurrence triangle.
pub fn pde_check(order: usize) -> IdentityReport {
    let rq = rq_triangle(order);
    let rows: Vec<MultiPoly> = (0..=order).map(|n| rq_bivariate(rq.row(n).unwrap())).collect();
    pde_check_rows(&rows, order)
}

/// Coefficients of `T^q0` against `T^(-q0)` with `x -> -x`.
pub fn rq_symmetry_check(q0: &Scalar, order: usize) -> Result<IdentityReport, SeriesError> {
    let plus = egf_rq(q0, order)?.egf_coeffs();
    let minus: Vec<Poly> = egf_rq(&-q0, order)?.egf_coeffs().iter().map(|p| p.rescale_var(&int(-1))).collect();
    Ok(compare(&format!("Rq_parity@{q0}"), order, &minus, &plus).report)
}

/// `e^(q0 x (y-1) z) T(x,z)^q0` against the inclusion-exclusion sum.
pub fn rxyz_check(q0: &Scalar, order: usize) -> Result<IdentityWitness, SeriesError> {
    let al = Alphabet::new(&["x", "y"]);
    let lift = |p: &Poly| MultiPoly::from_univariate(&al, "x", p).expect("x in alphabet");
    let r = egf_rq(q0, order)?.map(lift);
    let x = MultiPoly::var(&al, "x").unwrap();
    let y = MultiPoly::var(&al, "y").unwrap();
    let a = (&(&x * &y) - &x).scale(q0);
    let lhs = TruncatedSeries::exp_linear(&a, order).mul(&r).egf_coeffs();
    let rhs: Vec<MultiPoly> = (0..=order).map(|n| inclusion_exclusion_rxy(n, q0)).collect();
    Ok(compare(&format!("Rxyz@{q0}"), order, &lhs, &rhs))
}

/// `n! [z^n] T^q0` against `R_n(x; q0)` from the q-triangle.
pub fn rq_series_check(q0: &Scalar, order: usize) -> Result<IdentityWitness, SeriesError> {
    let lhs = egf_rq(q0, order)?.egf_coeffs();
    let rq = rq_triangle(order);
    let rhs: Vec<Poly> = (0..=order).map(|n| q_specialize(rq.row(n).unwrap(), q0)).collect();
    Ok(compare(&format!("Rq@{q0}"), order, &lhs, &rhs))
}

/// `n! [z^n] T` against `T_n(x)` from the recurrence.
pub fn t_series_check(order: usize) -> Result<IdentityWitness, SeriesError> {
    let lhs = egf_t(order)?.egf_coeffs();
    let t = triangle(Family::T, order);
    let rhs: Vec<Poly> = (0..=order).map(|n| t.row_poly(n).unwrap()).collect();
    Ok(compare("T", order, &lhs, &rhs))
}

/// Carlitz coefficients against reversed `R_{n+1}` rows.
pub fn carlitz_check(order: usize) -> Result<IdentityWitness, SeriesError> {
    let lhs = egf_carlitz(order)?.egf_coeffs();
    let r = triangle(Family::R, order + 1);
    let rhs: Vec<Poly> = (0..=order).map(|n| Poly::new((0..=n).map(|j| r.entry(n + 1, n - j)).collect())).collect();
    Ok(compare("carlitz", order, &lhs, &rhs))
}
