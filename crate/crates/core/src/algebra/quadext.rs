use std::fmt;

use super::ratfunc::RationalFunction;
use super::AlgebraError;

/// `base + radical * rho` in `Q(x)[rho] / (rho^2 - discriminant)`.
///
/// The discriminant travels with every element; arithmetic between elements
/// of different extensions is rejected.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadExt {
    base: RationalFunction,
    radical: RationalFunction,
    discriminant: RationalFunction,
}

impl QuadExt {
    pub fn new(base: RationalFunction, radical: RationalFunction, discriminant: RationalFunction) -> Self {
        QuadExt { base, radical, discriminant }
    }

    pub fn from_base(base: RationalFunction, discriminant: &RationalFunction) -> Self {
        QuadExt::new(base, RationalFunction::zero(), discriminant.clone())
    }

    /// The generator `rho` itself.
    pub fn rho(discriminant: &RationalFunction) -> Self {
        QuadExt::new(RationalFunction::zero(), RationalFunction::one(), discriminant.clone())
    }

    pub fn base(&self) -> &RationalFunction {
        &self.base
    }

    pub fn radical(&self) -> &RationalFunction {
        &self.radical
    }

    pub fn discriminant(&self) -> &RationalFunction {
        &self.discriminant
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.radical.is_zero()
    }

    pub fn zero_like(&self) -> Self {
        QuadExt::from_base(RationalFunction::zero(), &self.discriminant)
    }

    pub fn one_like(&self) -> Self {
        QuadExt::from_base(RationalFunction::one(), &self.discriminant)
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.discriminant == other.discriminant {
            Ok(())
        } else {
            Err(AlgebraError::DiscriminantMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(QuadExt::new(&self.base + &other.base, &self.radical + &other.radical, self.discriminant.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        let (a, b, c, d) = (&self.base, &self.radical, &other.base, &other.radical);
        let base = &(a * c) + &(&(b * d) * &self.discriminant);
        let radical = &(a * d) + &(b * c);
        Ok(QuadExt::new(base, radical, self.discriminant.clone()))
    }

    pub fn neg(&self) -> Self {
        QuadExt::new(-&self.base, -&self.radical, self.discriminant.clone())
    }

    pub fn conjugate(&self) -> Self {
        QuadExt::new(self.base.clone(), -&self.radical, self.discriminant.clone())
    }

    /// `(a + b rho)(a - b rho) = a^2 - b^2 D`.
    pub fn norm(&self) -> RationalFunction {
        &(&self.base * &self.base) - &(&(&self.radical * &self.radical) * &self.discriminant)
    }

    pub fn scale_rf(&self, c: &RationalFunction) -> Self {
        QuadExt::new(&self.base * c, &self.radical * c, self.discriminant.clone())
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.conjugate().scale_rf(&n.inv()?))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    /// `d/dx` given the derivative of `rho` expressed in the extension.
    pub fn derivative_with(&self, rho_prime: &QuadExt) -> Result<Self, AlgebraError> {
        let plain = QuadExt::new(self.base.derivative(), self.radical.derivative(), self.discriminant.clone());
        let chain = QuadExt::from_base(self.radical.clone(), &self.discriminant).try_mul(rho_prime)?;
        plain.try_add(&chain)
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})*rho", self.base, self.radical)
    }
}

impl fmt::Debug for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadExt[rho^2 = {}]({self})", self.discriminant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;
    use proptest::prelude::*;

    fn one_minus_x2() -> RationalFunction {
        RationalFunction::from_poly(Poly::from_ints(&[1, 0, -1]))
    }

    #[test]
    fn rho_squares_to_discriminant() {
        let d = one_minus_x2();
        let rho = QuadExt::rho(&d);
        let sq = rho.try_mul(&rho).unwrap();
        assert_eq!(sq, QuadExt::from_base(d.clone(), &d));
        let inv = rho.inv().unwrap();
        assert_eq!(rho.try_mul(&inv).unwrap(), rho.one_like());
    }

    #[test]
    fn mixing_discriminants_is_an_error() {
        let w2 = RationalFunction::new(Poly::from_ints(&[1, -1]), Poly::from_ints(&[1, 1])).unwrap();
        let a = QuadExt::rho(&one_minus_x2());
        let b = QuadExt::rho(&w2);
        assert_eq!(a.try_mul(&b), Err(AlgebraError::DiscriminantMismatch));
        assert_eq!(a.try_add(&b), Err(AlgebraError::DiscriminantMismatch));
    }

    fn small_rf() -> impl Strategy<Value = RationalFunction> {
        (prop::collection::vec(-4i64..=4, 0..4), prop::collection::vec(-4i64..=4, 1..3))
            .prop_filter_map("nonzero den", |(n, d)| {
                RationalFunction::new(Poly::from_ints(&n), Poly::from_ints(&d)).ok()
            })
    }

    proptest! {
        #[test]
        fn conjugate_product_is_norm(a in small_rf(), b in small_rf()) {
            let disc = RationalFunction::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[1, -1])).unwrap();
            let z = QuadExt::new(a.clone(), b.clone(), disc.clone());
            let prod = z.try_mul(&z.conjugate()).unwrap();
            let expect = &(&a * &a) - &(&(&b * &b) * &disc);
            prop_assert_eq!(prod, QuadExt::from_base(expect, &disc));
        }
    }
}
