//! Gamma and semi-gamma expansions of symmetric polynomials, the even/odd
//! split, and the David–Barton transform between the bases
//! `x^k (1+x)^(d-2k)` and `x^k (1+x)^(n-delta-k)`.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{binomial, int, pow_i64, ratio, AlgebraError, Poly, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GammaError {
    #[error("polynomial is not symmetric on [{low}, {high}]")]
    NotSymmetric { low: usize, high: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("gamma form has base degree {found}, expected n + delta = {expected}")]
    BaseDegreeMismatch { expected: i64, found: usize },
    #[error("term k = {k} needs (1+x)^{exponent}")]
    NegativeExponent { k: usize, exponent: i64 },
    #[error("sample t = {0} is outside (0, 1)")]
    DegenerateSample(Scalar),
}

/// `x^shift * sum_k gammas[k] x^k (1+x)^(base_degree - 2k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaForm {
    pub shift: usize,
    pub base_degree: usize,
    pub gammas: Vec<Scalar>,
}

/// `x^shift (1+x)^nu * sum_k lambdas[k] x^k (1+x^2)^(half_degree - k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemiGammaForm {
    pub shift: usize,
    pub nu: u8,
    pub half_degree: usize,
    pub lambdas: Vec<Scalar>,
}

fn coeff_strings(cs: &[Scalar]) -> Vec<String> {
    cs.iter().map(|c| c.to_string()).collect()
}

impl GammaForm {
    pub fn reassemble(&self) -> Poly {
        let one_plus_x = Poly::one_plus_x();
        let mut out = Poly::zero();
        for (k, g) in self.gammas.iter().enumerate() {
            if !g.is_zero() {
                out = &out + &one_plus_x.pow((self.base_degree - 2 * k) as u32).shift_up(k).scale(g);
            }
        }
        out.shift_up(self.shift)
    }

    pub fn is_positive(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    /// Absorbs `x^shift` into the basis: same polynomial with `shift = 0`,
    /// base degree raised by `2 * shift` and leading zero coefficients.
    pub fn normalized(&self) -> GammaForm {
        let mut gammas = vec![Scalar::zero(); self.shift];
        gammas.extend(self.gammas.iter().cloned());
        GammaForm { shift: 0, base_degree: self.base_degree + 2 * self.shift, gammas }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nu": Value::Null,
            "base": self.base_degree,
            "shift": self.shift,
            "coeffs": coeff_strings(&self.gammas),
        })
    }
}

impl SemiGammaForm {
    pub fn reassemble(&self) -> Poly {
        let one_plus_x2 = Poly::from_ints(&[1, 0, 1]);
        let mut out = Poly::zero();
        for (k, l) in self.lambdas.iter().enumerate() {
            if !l.is_zero() {
                out = &out + &one_plus_x2.pow((self.half_degree - k) as u32).shift_up(k).scale(l);
            }
        }
        (&out * &Poly::one_plus_x().pow(self.nu as u32)).shift_up(self.shift)
    }

    pub fn is_positive(&self) -> bool {
        self.lambdas.iter().all(|l| !l.is_negative())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nu": self.nu,
            "base": self.half_degree,
            "shift": self.shift,
            "coeffs": coeff_strings(&self.lambdas),
        })
    }
}

fn symmetric_core(p: &Poly, low: usize, high: usize) -> Result<Poly, GammaError> {
    if !p.is_symmetric(low, high)? {
        return Err(GammaError::NotSymmetric { low, high });
    }
    Ok(p.shift_down(low))
}

/// Unique `gamma_k` with `p = x^low * sum gamma_k x^k (1+x)^(d-2k)`,
/// `d = high - low`.
pub fn gamma_expand(p: &Poly, low: usize, high: usize) -> Result<GammaForm, GammaError> {
    let mut rest = symmetric_core(p, low, high)?;
    let d = high - low;
    let one_plus_x = Poly::one_plus_x();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for k in 0..=d / 2 {
        let g = rest.coeff(k);
        if !g.is_zero() {
            rest = &rest - &one_plus_x.pow((d - 2 * k) as u32).shift_up(k).scale(&g);
        }
        gammas.push(g);
    }
    debug_assert!(rest.is_zero());
    Ok(GammaForm { shift: low, base_degree: d, gammas })
}

/// Unique `lambda_k` with `p = x^low (1+x)^nu sum lambda_k x^k (1+x^2)^(m-k)`.
pub fn semi_gamma_expand(p: &Poly, low: usize, high: usize) -> Result<SemiGammaForm, GammaError> {
    let core = symmetric_core(p, low, high)?;
    let d = high - low;
    let nu = (d % 2) as u8;
    let mut rest = if nu == 1 { core.divide_exact(&Poly::one_plus_x())? } else { core };
    let m = (d - nu as usize) / 2;
    let one_plus_x2 = Poly::from_ints(&[1, 0, 1]);
    let mut lambdas = Vec::with_capacity(m + 1);
    for k in 0..=m {
        let l = rest.coeff(k);
        if !l.is_zero() {
            rest = &rest - &one_plus_x2.pow((m - k) as u32).shift_up(k).scale(&l);
        }
        lambdas.push(l);
    }
    debug_assert!(rest.is_zero());
    Ok(SemiGammaForm { shift: low, nu, half_degree: m, lambdas })
}

/// `lambda_k = sum_i C(m-i, k-i) 2^(k-i) gamma_i`, from
/// `(1+x)^2 = (1+x^2) + 2x`. An odd base degree contributes `nu = 1`.
pub fn gamma_to_lambda(g: &GammaForm) -> SemiGammaForm {
    let nu = (g.base_degree % 2) as u8;
    let m = g.base_degree / 2;
    let lambdas = (0..=m)
        .map(|k| {
            let mut acc = Scalar::zero();
            for (i, gi) in g.gammas.iter().enumerate().take(k + 1) {
                let w = Scalar::from_integer(binomial((m - i) as u64, (k - i) as u64) << (k - i));
                acc += w * gi;
            }
            acc
        })
        .collect();
    SemiGammaForm { shift: g.shift, nu, half_degree: m, lambdas }
}

/// `p / (1+x)^nu = g1(x^2) + x g2(x^2)`.
pub fn split_even_odd(p: &Poly, nu: u8) -> Result<(Poly, Poly), GammaError> {
    let q = p.divide_exact(&Poly::one_plus_x().pow(nu as u32))?;
    let pick = |parity: usize| Poly::new(q.coeffs().iter().skip(parity).step_by(2).cloned().collect());
    Ok((pick(0), pick(1)))
}

/// `N_n(x) = sum_k 2^(2 delta - k) M(n,k) x^k (1+x)^(n - delta - k)` where
/// `M_n(x) = sum_k M(n,k) x^k (1+x)^(n + delta - 2k)`.
pub fn david_barton_assemble(m: &GammaForm, n: usize, delta: i64) -> Result<Poly, GammaError> {
    let m = m.normalized();
    let expected = n as i64 + delta;
    if m.base_degree as i64 != expected {
        return Err(GammaError::BaseDegreeMismatch { expected, found: m.base_degree });
    }
    let one_plus_x = Poly::one_plus_x();
    let half = ratio(1, 2);
    let mut out = Poly::zero();
    for (k, c) in m.gammas.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let exponent = n as i64 - delta - k as i64;
        if exponent < 0 {
            return Err(GammaError::NegativeExponent { k, exponent });
        }
        let w = pow_i64(&half, k as i64 - 2 * delta);
        out = &out + &one_plus_x.pow(exponent as u32).shift_up(k).scale(&(c * w));
    }
    Ok(out)
}

/// First `count` fractions of (0, 1) ordered by denominator then numerator,
/// skipping non-reduced ones: 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
pub fn farey_samples(count: usize) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(count);
    let mut den = 2i64;
    while out.len() < count {
        for num in 1..den {
            if out.len() == count {
                break;
            }
            if num_integer::gcd(num, den) == 1 {
                out.push(ratio(num, den));
            }
        }
        den += 1;
    }
    out
}

/// Outcome of one rational-parametrization comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DavidBartonCheck {
    pub pass: bool,
    pub samples: usize,
    pub needed: usize,
    pub first_mismatch: Option<Scalar>,
}

/// Compares `N_n(x)` with `((1+x)/2)^(n-delta) (1+w)^(n+delta) M_n((1-w)/(1+w))`
/// at `x = (1-t^2)/(1+t^2)`, where `w = t` exactly. Passing needs agreement
/// at every sample and more samples than `deg N_n`.
pub fn david_barton_check(
    m: &Poly,
    nn: &Poly,
    n: usize,
    delta: i64,
    samples: &[Scalar],
) -> Result<DavidBartonCheck, GammaError> {
    let one = Scalar::one();
    let needed = nn.degree().unwrap_or(0) + 1;
    let mut first_mismatch = None;
    for t in samples {
        if !t.is_positive() || t >= &one {
            return Err(GammaError::DegenerateSample(t.clone()));
        }
        let t2 = t * t;
        let x = (&one - &t2) / (&one + &t2);
        let lhs = nn.evaluate(&x);
        let rhs = pow_i64(&((&one + &x) / int(2)), n as i64 - delta)
            * pow_i64(&(&one + t), n as i64 + delta)
            * m.evaluate(&((&one - t) / (&one + t)));
        if lhs != rhs && first_mismatch.is_none() {
            first_mismatch = Some(t.clone());
        }
    }
    Ok(DavidBartonCheck {
        pass: first_mismatch.is_none() && samples.len() >= needed,
        samples: samples.len(),
        needed,
        first_mismatch,
    })
}

/// Boolean form of [`david_barton_check`].
pub fn david_barton_identity_check(
    m: &Poly,
    nn: &Poly,
    n: usize,
    delta: i64,
    samples: &[Scalar],
) -> Result<bool, GammaError> {
    Ok(david_barton_check(m, nn, n, delta, samples)?.pass)
}

/// Both halves of `F_n(x)/x = g1(x^2) + x g2(x^2)` expanded in the gamma
/// basis on `[0, n-1]` and `[0, n-2]`.
pub fn split_halves_gamma(f_n: &Poly) -> Result<(GammaForm, GammaForm), GammaError> {
    let core = f_n.shift_down(1);
    let d = core.degree().unwrap_or(0);
    let (g1, g2) = split_even_odd(&core, 0)?;
    let m = d / 2;
    let e1 = gamma_expand(&g1, 0, m)?;
    let e2 = if m == 0 { gamma_expand(&g2, 0, 0)? } else { gamma_expand(&g2, 0, m - 1)? };
    Ok((e1, e2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{polyseq, triangle, Family, Sequence};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn gamma_examples() {
        let a3 = Poly::from_ints(&[0, 1, 4, 1]);
        let g = gamma_expand(&a3, 1, 3).unwrap();
        assert_eq!(g.gammas, ints(&[1, 2]));
        assert!(g.is_positive());
        assert_eq!(g.reassemble(), a3);
        let f2 = gamma_expand(&Poly::from_ints(&[0, 1, 1, 1]), 1, 3).unwrap();
        assert_eq!(f2.gammas, ints(&[1, -1]));
        assert!(!f2.is_positive());
        assert_eq!(gamma_expand(&Poly::from_ints(&[1, 2, 1]), 0, 2).unwrap().gammas, ints(&[1, 0]));
        assert!(matches!(gamma_expand(&Poly::from_ints(&[0, 2, 12, 10]), 1, 3), Err(GammaError::NotSymmetric { .. })));
        assert!(matches!(gamma_expand(&Poly::from_ints(&[1, 1]), 1, 3), Err(GammaError::Algebra(_))));
    }

    #[test]
    fn semi_gamma_examples() {
        let f3 = Poly::from_ints(&[1, 3, 7, 3, 1]);
        let s = semi_gamma_expand(&f3, 0, 4).unwrap();
        assert_eq!((s.nu, s.lambdas.clone()), (0, ints(&[1, 3, 5])));
        assert_eq!(s.reassemble(), f3);
        let c = semi_gamma_expand(&Poly::from_ints(&[1, 3, 3, 1]), 0, 3).unwrap();
        assert_eq!((c.nu, c.lambdas.clone()), (1, ints(&[1, 2])));
        let one = semi_gamma_expand(&Poly::one(), 0, 0).unwrap();
        assert_eq!((one.nu, one.lambdas), (0, ints(&[1])));
    }

    #[test]
    fn lambda_from_gamma_examples() {
        let g = GammaForm { shift: 0, base_degree: 2, gammas: ints(&[1, 0]) };
        assert_eq!(gamma_to_lambda(&g).lambdas, ints(&[1, 2]));
        let g = GammaForm { shift: 0, base_degree: 2, gammas: ints(&[1, -1]) };
        assert_eq!(gamma_to_lambda(&g).lambdas, ints(&[1, 1]));
        let g = GammaForm { shift: 0, base_degree: 6, gammas: ints(&[0, 0, 0, 0]) };
        assert!(gamma_to_lambda(&g).lambdas.iter().all(Zero::is_zero));
    }

    #[test]
    fn split_examples() {
        let (g1, g2) = split_even_odd(&Poly::from_ints(&[1, 3, 7, 3, 1]), 0).unwrap();
        assert_eq!((g1, g2), (Poly::from_ints(&[1, 7, 1]), Poly::from_ints(&[3, 3])));
        let (g1, g2) = split_even_odd(&Poly::from_ints(&[1, 0, 1]), 0).unwrap();
        assert_eq!((g1, g2), (Poly::from_ints(&[1, 1]), Poly::zero()));
        let (g1, g2) = split_even_odd(&Poly::from_ints(&[1, 3, 3, 1]), 1).unwrap();
        assert_eq!((g1, g2), (Poly::from_ints(&[1, 1]), Poly::from_ints(&[2])));
        assert!(split_even_odd(&Poly::from_ints(&[1, 0, 1]), 1).is_err());
    }

    #[test]
    fn json_shape() {
        let g = gamma_expand(&Poly::from_ints(&[0, 1, 1, 1]), 1, 3).unwrap();
        assert_eq!(g.to_json().to_string(), r#"{"base":2,"coeffs":["1","-1"],"nu":null,"shift":1}"#);
        let s = semi_gamma_expand(&Poly::from_ints(&[1, 3, 3, 1]), 0, 3).unwrap();
        assert_eq!(s.to_json()["nu"], json!(1));
    }

    #[test]
    fn david_barton_examples() {
        let a3 = GammaForm { shift: 0, base_degree: 4, gammas: ints(&[0, 1, 2]) };
        assert_eq!(david_barton_assemble(&a3, 3, 1).unwrap(), Poly::from_ints(&[0, 2, 4]));
        let shifted = GammaForm { shift: 1, base_degree: 2, gammas: ints(&[1, 2]) };
        assert_eq!(david_barton_assemble(&shifted, 3, 1).unwrap(), Poly::from_ints(&[0, 2, 4]));
        let b2 = GammaForm { shift: 0, base_degree: 2, gammas: ints(&[1, 4]) };
        assert_eq!(david_barton_assemble(&b2, 2, 0).unwrap(), Poly::from_ints(&[1, 4, 3]));
        let a2 = GammaForm { shift: 0, base_degree: 3, gammas: ints(&[0, 1]) };
        assert_eq!(david_barton_assemble(&a2, 2, 1).unwrap(), Poly::from_ints(&[0, 2]));
        let a1 = GammaForm { shift: 0, base_degree: 2, gammas: ints(&[0, 1]) };
        assert!(matches!(david_barton_assemble(&a1, 1, 1), Err(GammaError::NegativeExponent { .. })));
        assert!(matches!(david_barton_assemble(&a1, 3, 1), Err(GammaError::BaseDegreeMismatch { .. })));
    }

    #[test]
    fn hand_evaluated_sample() {
        let a2 = Poly::from_ints(&[0, 1, 1]);
        let r2 = Poly::from_ints(&[0, 2]);
        let c = david_barton_check(&a2, &r2, 2, 1, &[ratio(1, 3)]).unwrap();
        assert!(c.first_mismatch.is_none());
        assert!(!c.pass, "one sample does not certify a degree-1 identity");
        assert!(david_barton_identity_check(&a2, &r2, 2, 1, &farey_samples(2)).unwrap());
        assert!(david_barton_check(&a2, &r2, 2, 1, &[int(1)]).is_err());
    }

    #[test]
    fn farey_prefix() {
        let want = [ratio(1, 2), ratio(1, 3), ratio(2, 3), ratio(1, 4), ratio(3, 4), ratio(1, 5)];
        assert_eq!(farey_samples(6), want);
    }

    #[test]
    fn eulerian_families_satisfy_transform() {
        let r = triangle(Family::R, 8);
        let a = triangle(Family::A, 8);
        for n in 2..=8 {
            let form = GammaForm { shift: 0, base_degree: n + 1, gammas: a.row(n).unwrap().to_vec() };
            let rn = r.row_poly(n).unwrap();
            assert_eq!(david_barton_assemble(&form, n, 1).unwrap(), rn);
            let samples = farey_samples(rn.degree().unwrap() + 1);
            assert!(david_barton_identity_check(&form.reassemble(), &rn, n, 1, &samples).unwrap());
        }
    }

    #[test]
    fn f_split_halves_positive() {
        let f = polyseq(Sequence::FPoly, 10);
        for n in 1..=10 {
            let (e1, e2) = split_halves_gamma(f.get(n).unwrap()).unwrap();
            assert!(e1.is_positive() && e2.is_positive(), "n = {n}");
        }
    }

    fn symmetric_poly() -> impl Strategy<Value = (Poly, usize, usize)> {
        (0usize..3, 0usize..10).prop_flat_map(|(low, d)| {
            prop::collection::vec(-20i64..21, d / 2 + 1).prop_map(move |half| {
                let mut c = vec![0i64; low + d + 1];
                for (i, &h) in half.iter().enumerate() {
                    c[low + i] = h;
                    c[low + d - i] = h;
                }
                (Poly::from_ints(&c), low, low + d)
            })
        })
    }

    proptest! {
        #[test]
        fn round_trips((p, low, high) in symmetric_poly()) {
            let g = gamma_expand(&p, low, high).unwrap();
            prop_assert_eq!(g.reassemble(), p.clone());
            let s = semi_gamma_expand(&p, low, high).unwrap();
            prop_assert_eq!(s.reassemble(), p.clone());
            prop_assert_eq!(gamma_to_lambda(&g), s);
        }

        #[test]
        fn gamma_positive_implies_semi((p, low, high) in symmetric_poly()) {
            let g = gamma_expand(&p, low, high).unwrap();
            if g.is_positive() {
                prop_assert!(gamma_to_lambda(&g).is_positive());
            }
        }
    }
}
