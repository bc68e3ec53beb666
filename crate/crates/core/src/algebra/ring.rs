use std::fmt::Debug;

use num_traits::{One, Zero};

use super::{MultiPoly, Poly, QuadExt, RationalFunction, Scalar};

/// Commutative ring interface shared by triangle builders and truncated
/// series. Constructors go through an existing element so that domains with
/// context (an alphabet, a discriminant) can carry it along.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Scalar) -> Self;
    /// Multiplicative inverse when it exists in the domain.
    fn try_inv(&self) -> Option<Self>;
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self * c
    }
    fn try_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    /// Only nonzero constants are units in Q[x].
    fn try_inv(&self) -> Option<Self> {
        (self.degree() == Some(0)).then(|| Poly::constant(self.coeff(0).recip()))
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.alphabet())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.alphabet())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn try_inv(&self) -> Option<Self> {
        self.as_constant().filter(|c| !c.is_zero()).map(|c| MultiPoly::constant(self.alphabet(), c.recip()))
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
    fn one_like(&self) -> Self {
        RationalFunction::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}

/// Elements from different extensions never meet inside one computation;
/// doing so is a programming error and panics.
impl Ring for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::zero_like(self)
    }
    fn one_like(&self) -> Self {
        QuadExt::one_like(self)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, o: &Self) -> Self {
        self.try_add(o).expect("same quadratic extension")
    }
    fn minus(&self, o: &Self) -> Self {
        self.try_sub(o).expect("same quadratic extension")
    }
    fn times(&self, o: &Self) -> Self {
        self.try_mul(o).expect("same quadratic extension")
    }
    fn negated(&self) -> Self {
        QuadExt::neg(self)
    }
    fn scaled(&self, c: &Scalar) -> Self {
        self.scale_rf(&RationalFunction::constant(c.clone()))
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
}
