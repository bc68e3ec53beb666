//! Powers of `theta = x d/dx` applied to `r(x)`, `r^2 = (1+x)/(1-x)`.

use crate::algebra::{Poly, QuadExt, RationalFunction};

/// `(1+x)/(1-x)`.
pub fn r_discriminant() -> RationalFunction {
    RationalFunction::new(Poly::from_ints(&[1, 1]), Poly::from_ints(&[1, -1])).expect("nonzero denominator")
}

fn rf(p: Poly) -> RationalFunction {
    RationalFunction::from_poly(p)
}

/// `theta^n r` in `Q(x)[r]`, using `r' = r / (1 - x^2)`.
pub fn theta_power_r(n: usize) -> QuadExt {
    let disc = r_discriminant();
    let one_minus_x2 = rf(Poly::from_ints(&[1, 0, -1]));
    let r_prime = QuadExt::new(RationalFunction::zero(), one_minus_x2.inv().expect("nonzero"), disc.clone());
    let x = rf(Poly::x());
    let mut cur = QuadExt::rho(&disc);
    for _ in 0..n {
        cur = cur.derivative_with(&r_prime).expect("same extension").scale_rf(&x);
    }
    cur
}

/// `r F_n / (1-x^2)^n` for even `n`, `F_n / (r (1-x^2)^(n-1) (1-x)^2)` for odd `n`.
pub fn theta_target(n: usize, f_n: &Poly) -> QuadExt {
    let disc = r_discriminant();
    let r = QuadExt::rho(&disc);
    let one_minus_x2 = Poly::from_ints(&[1, 0, -1]);
    if n.is_multiple_of(2) {
        let c = RationalFunction::new(f_n.clone(), one_minus_x2.pow(n as u32)).expect("nonzero");
        r.scale_rf(&c)
    } else {
        let den = &one_minus_x2.pow(n as u32 - 1) * &Poly::from_ints(&[1, -1]).pow(2);
        let c = RationalFunction::new(f_n.clone(), den).expect("nonzero");
        QuadExt::from_base(c, &disc).try_div(&r).expect("r is invertible")
    }
}

pub fn theta_identity_holds(n: usize, f_n: &Poly) -> bool {
    theta_power_r(n) == theta_target(n, f_n)
}
