//! Frozen reference values, each reachable only through the public API.

use altrun_core::algebra::{int, ratio, MultiPoly, Poly, Scalar};
use altrun_core::enumerate::{
    cycle_canonical, distribution, generate, signed_altrun, stat, Budget, CombObject, ObjectClass, Permutation,
    SignedPermutation, Statistic, StirlingWord,
};
use altrun_core::families::{
    eulerian, inclusion_exclusion_rxy, polyseq, q_specialize, rq_bivariate, rq_triangle, triangle, EulerType, Family,
    Sequence,
};
use altrun_core::gamma::{
    david_barton_assemble, david_barton_check, gamma_expand, gamma_to_lambda, semi_gamma_expand, split_even_odd,
};
use altrun_core::grammar::{extract_triangle, g1, g2, prop31_grammar, row_scalars};
use altrun_core::series::{egf_rq, egf_t, f_diag_identity, pde_check, theta_power_r, theta_target};

fn p(cs: &[i64]) -> Poly {
    Poly::from_ints(cs)
}

fn ints(cs: &[i64]) -> Vec<Scalar> {
    cs.iter().map(|&c| int(c)).collect()
}

fn f4() -> Poly {
    p(&[0, 1, 7, 29, 31, 29, 7, 1])
}

#[test]
fn polynomial_arithmetic() {
    let r4 = p(&[0, 2, 12, 10]);
    assert_eq!(r4.evaluate(&int(-1)), int(0));
    assert_eq!(p(&[0, 1, 4, 3]).divide_exact(&Poly::one_plus_x()).unwrap(), p(&[0, 1, 3]));
    assert_eq!(r4.root_multiplicity(&int(-1)).unwrap(), 1);
    let r7 = triangle(Family::R, 7).row_poly(7).unwrap();
    assert_eq!(r7.root_multiplicity(&int(-1)).unwrap(), 2);
    assert!(f4().is_symmetric(1, 7).unwrap());
    assert!(!r4.is_symmetric(1, 3).unwrap());
}

#[test]
fn grammar_values() {
    let g = g1();
    let (q, a, b, c) = (g.var("q").unwrap(), g.var("a").unwrap(), g.var("b").unwrap(), g.var("c").unwrap());
    let d1 = g.apply(&a).unwrap();
    assert_eq!(d1, &(&q * &a) * &b);
    let want = &a * &(&(&(&q * &q) * &(&b * &b)) + &(&(&q * &b) * &c));
    assert_eq!(g.apply(&d1).unwrap(), want);

    let r3 = extract_triangle(&g.iterate(&a, 3).unwrap(), ("a", 1), "b", "c", 3).unwrap();
    let al = r3[0].alphabet().clone();
    let qq = MultiPoly::var(&al, "q").unwrap();
    assert!(r3[0].is_zero());
    assert_eq!(r3[1], qq);
    assert_eq!(r3[2], qq.pow(2).scale(&int(3)));
    assert_eq!(r3[3], &qq + &qq.pow(3));

    let g2 = g2();
    let (x, y, z) = (g2.var("x").unwrap(), g2.var("y").unwrap(), g2.var("z").unwrap());
    let want = &x * &(&(&(&y.pow(3) * &z) + &(&y.pow(2) * &z.pow(2))) + &(&y * &z.pow(3)));
    assert_eq!(g2.iterate(&x, 2).unwrap(), want);

    let p31 = prop31_grammar();
    let a2 = p31.var("a").unwrap().pow(2);
    let row = extract_triangle(&p31.iterate(&a2, 2).unwrap(), ("a", 2), "b", "c", 2).unwrap();
    assert_eq!(row_scalars(&row).unwrap(), ints(&[0, 2, 4]));
}

#[test]
fn enumeration_values() {
    let words: Vec<String> =
        generate(ObjectClass::Stirling, 2, Budget::default()).unwrap().map(|o| o.to_string()).collect();
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(sorted, ["1122", "1221", "2211"]);

    let pi = CombObject::Perm("324156".parse().unwrap());
    assert_eq!(stat(&pi, Statistic::Altrun).unwrap(), 4);
    assert_eq!(stat(&pi, Statistic::Udrun).unwrap(), 5);
    assert_eq!(stat(&CombObject::Perm(Permutation::identity(3)), Statistic::Crun).unwrap(), 3);
    let c312: Permutation = "312".parse().unwrap();
    assert_eq!(stat(&CombObject::Perm(c312.clone()), Statistic::Crun).unwrap(), 3);
    assert_eq!(cycle_canonical(&c312).to_string(), "(1 3 2)");

    let dual = |w: &str| altrun_core::enumerate::dual_map(&w.parse::<StirlingWord>().unwrap()).to_string();
    assert_eq!(dual("221331"), "432651");
    assert_eq!(dual("1122"), "2143");

    let sp = |w: Vec<i32>| signed_altrun(&SignedPermutation::new(w).unwrap());
    assert_eq!(sp(vec![1, 2]), 1);
    assert_eq!(sp(vec![2, -1]), 2);

    let d = |c, s| distribution(c, 3, &[(s, "x")], Budget::default()).unwrap().to_univariate("x").unwrap();
    assert_eq!(d(ObjectClass::Perm, Statistic::Altrun), p(&[0, 2, 4]));
    let f2 = distribution(ObjectClass::Stirling, 2, &[(Statistic::Fap, "x")], Budget::default()).unwrap();
    assert_eq!(f2.to_univariate("x").unwrap(), p(&[0, 1, 1, 1]));
    let rq3 = distribution(ObjectClass::Perm, 3, &[(Statistic::Crun, "x"), (Statistic::Cyc, "q")], Budget::default())
        .unwrap();
    assert_eq!(rq3, rq_bivariate(rq_triangle(3).row(3).unwrap()));
}

#[test]
fn family_values() {
    assert_eq!(triangle(Family::T, 3).row(3).unwrap(), ints(&[0, 1, 3, 2]).as_slice());
    assert_eq!(triangle(Family::Gamma, 4).entry(4, 4), int(-15));
    assert_eq!(triangle(Family::R, 1).row(1).unwrap(), ints(&[1]).as_slice());
    let d3 = polyseq(Sequence::DPoly, 3).get(3).unwrap().clone();
    assert_eq!(d3, p(&[0, 1, 0, 1]));
    assert_eq!(d3.evaluate(&int(-1)), int(-2));
    assert_eq!(polyseq(Sequence::GammaPoly, 3).get(3).unwrap(), &p(&[0, 1, -1, 3]));
    assert_eq!(polyseq(Sequence::FPoly, 4).get(4).unwrap(), &f4());

    let rq = rq_triangle(2);
    assert_eq!(q_specialize(rq.row(2).unwrap(), &int(1)), p(&[0, 1, 1]));
    assert_eq!(q_specialize(rq.row(2).unwrap(), &int(2)), p(&[0, 2, 4]));

    let at_y0 =
        |n| inclusion_exclusion_rxy(n, &int(1)).specialize(&[("y", int(0))]).unwrap().to_univariate("x").unwrap();
    assert_eq!(at_y0(2), p(&[0, 1]));
    assert_eq!(at_y0(3), p(&[0, 1, 0, 1]));

    assert_eq!(eulerian(2, EulerType::A).unwrap(), p(&[0, 1, 1]));
    assert_eq!(eulerian(2, EulerType::B).unwrap(), p(&[1, 6, 1]));
    assert_eq!(eulerian(1, EulerType::A).unwrap(), p(&[0, 1]));
}

#[test]
fn gamma_values() {
    let a3 = gamma_expand(&p(&[0, 1, 4, 1]), 1, 3).unwrap();
    assert_eq!(a3.gammas, ints(&[1, 2]));
    let f2 = gamma_expand(&p(&[0, 1, 1, 1]), 1, 3).unwrap();
    assert_eq!(f2.gammas, ints(&[1, -1]));
    assert!(!f2.is_positive());

    let f3_over_x = p(&[1, 3, 7, 3, 1]);
    let s = semi_gamma_expand(&f3_over_x, 0, 4).unwrap();
    assert_eq!((s.nu, s.lambdas.clone()), (0, ints(&[1, 3, 5])));
    assert_eq!(split_even_odd(&f3_over_x, 0).unwrap(), (p(&[1, 7, 1]), p(&[3, 3])));

    let f2_over_x = gamma_expand(&p(&[1, 1, 1]), 0, 2).unwrap();
    assert_eq!(gamma_to_lambda(&f2_over_x).lambdas, ints(&[1, 1]));

    assert_eq!(david_barton_assemble(&a3, 3, 1).unwrap(), p(&[0, 2, 4]));
    let b2 = gamma_expand(&p(&[1, 6, 1]), 0, 2).unwrap();
    assert_eq!(b2.gammas, ints(&[1, 4]));
    assert_eq!(david_barton_assemble(&b2, 2, 0).unwrap(), p(&[1, 4, 3]));
    let a2 = gamma_expand(&p(&[0, 1, 1]), 1, 2).unwrap();
    assert_eq!(david_barton_assemble(&a2, 2, 1).unwrap(), p(&[0, 2]));

    // x = 4/5 at t = 1/3: (9/10) (4/3)^3 A_2(1/2) = 8/5 = R_2(4/5).
    let c = david_barton_check(&p(&[0, 1, 1]), &p(&[0, 2]), 2, 1, &[ratio(1, 3)]).unwrap();
    assert!(c.first_mismatch.is_none());
    assert_eq!(p(&[0, 2]).evaluate(&ratio(4, 5)), ratio(8, 5));
}

#[test]
fn series_values() {
    let t = egf_t(3).unwrap();
    assert_eq!(t.egf_coeff(3), p(&[0, 1, 3, 2]));
    assert_eq!(t.egf_coeff(2), p(&[0, 1, 1]));
    let r2 = egf_rq(&int(2), 6).unwrap();
    let r = triangle(Family::R, 7);
    for n in 0..=6 {
        assert_eq!(r2.egf_coeff(n), r.row_poly(n + 1).unwrap(), "n={n}");
    }
    let half = egf_rq(&ratio(1, 2), 3).unwrap();
    assert_eq!(half.egf_coeff(3).rescale_var(&int(2)), p(&[0, 1, 3, 5]));

    let fd = f_diag_identity(5).unwrap();
    assert!(fd.report.pass);
    assert_eq!(fd.oracle, ["1", "1", "1", "5", "17", "121"]);
    assert!(pde_check(8).pass);

    assert_eq!(theta_power_r(1), theta_target(1, &p(&[0, 1])));
    assert_eq!(theta_power_r(2), theta_target(2, &p(&[0, 1, 1, 1])));
}
