//! Acceptance criteria, one line per criterion plus one per sub-check.
//!
//! Runs without the libtest harness so the report prints in order. The exit
//! status is zero only when the failing sub-checks are exactly the entries of
//! `KNOWN_RED`, each of which stays visibly red in the report.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use altrun_core::algebra::{binomial, double_factorial_odd, factorial, int, ratio, Alphabet, MultiPoly, Poly, Scalar};
use altrun_core::enumerate::{distribution, Budget, ObjectClass, Statistic};
use altrun_core::families::{eulerian_b, polyseq, rq_bivariate, rq_triangle, triangle, Family, Sequence};
use altrun_core::gamma::{
    david_barton_assemble, david_barton_identity_check, farey_samples, gamma_expand, gamma_to_lambda,
    semi_gamma_expand, split_halves_gamma,
};
use altrun_core::grammar::checks;
use altrun_core::series::{
    carlitz_check, d_diag_identity, derangement_identity, f_diag_identity, f_dual_identity, f_dual_samples, pde_check,
    pde_check_rows, rq_series_check, rxyz_check, t_series_check, theta_identity_holds, IdentityWitness, SeriesError,
};
use altrun_core::verify::{david_barton_pairs, symmetric_family_polys};

/// Sub-checks expected to fail. The stated closed form for the diagonal of
/// the derangement polynomials does not match the recurrence; the matching
/// form e^(-x)(tan x + sec x) is covered by the library's own tests.
const KNOWN_RED: &[&str] = &["5.d_diag"];

type Check = Result<String, String>;
type Sub = (&'static str, Box<dyn FnOnce() -> Check>);

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Option<Duration>,
    subs: Vec<Sub>,
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(c: Criterion, failures: &mut Vec<String>) {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut all = true;
    for (name, f) in c.subs {
        let id = format!("{}.{name}", c.id);
        let outcome = f();
        let (pass, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        if !pass {
            all = false;
            failures.push(id.clone());
        }
        lines.push(format!("    {} {id}: {detail}", if pass { "PASS" } else { "FAIL" }));
    }
    let elapsed = start.elapsed();
    let timing = match c.limit {
        Some(limit) => {
            let ok = elapsed < limit;
            if !ok {
                all = false;
                failures.push(format!("{}.runtime", c.id));
            }
            format!("{:.2} s, limit {} s", elapsed.as_secs_f64(), limit.as_secs())
        }
        None => format!("{:.2} s", elapsed.as_secs_f64()),
    };
    println!("{} criterion {}: {} ({timing})", if all { "PASS" } else { "FAIL" }, c.id, c.title);
    for l in lines {
        println!("{l}");
    }
}

fn dist(class: ObjectClass, n: usize, s: Statistic) -> Poly {
    distribution(class, n, &[(s, "x")], Budget::default()).unwrap().to_univariate("x").unwrap()
}

fn criterion_1() -> Criterion {
    let subs: Vec<Sub> = vec![
        (
            "altrun_R",
            Box::new(|| {
                let r = triangle(Family::R, 8);
                for n in 1..=8 {
                    ensure(dist(ObjectClass::Perm, n, Statistic::Altrun) == r.row_poly(n).unwrap(), || {
                        format!("n={n}")
                    })?;
                }
                Ok("n = 1..8".into())
            }),
        ),
        (
            "udrun_T",
            Box::new(|| {
                let t = triangle(Family::T, 8);
                for n in 1..=8 {
                    ensure(dist(ObjectClass::Perm, n, Statistic::Udrun) == t.row_poly(n).unwrap(), || {
                        format!("n={n}")
                    })?;
                }
                Ok("n = 1..8".into())
            }),
        ),
        (
            "crun_cyc_Rq",
            Box::new(|| {
                let rq = rq_triangle(8);
                for n in 1..=8 {
                    let d = distribution(
                        ObjectClass::Perm,
                        n,
                        &[(Statistic::Crun, "x"), (Statistic::Cyc, "q")],
                        Budget::default(),
                    )
                    .unwrap();
                    ensure(d == rq_bivariate(rq.row(n).unwrap()), || format!("n={n}"))?;
                }
                Ok("n = 1..8".into())
            }),
        ),
        (
            "derangement_d",
            Box::new(|| {
                let d = polyseq(Sequence::DPoly, 9);
                for n in 1..=9 {
                    ensure(dist(ObjectClass::Derangement, n, Statistic::Crun) == *d.get(n).unwrap(), || {
                        format!("n={n}")
                    })?;
                }
                Ok("n = 1..9".into())
            }),
        ),
        (
            "stirling_F",
            Box::new(|| {
                let f = triangle(Family::F, 7);
                for n in 1..=7 {
                    let want = f.row_poly(n).unwrap();
                    ensure(dist(ObjectClass::Stirling, n, Statistic::Fap) == want, || format!("fap, n={n}"))?;
                    ensure(dist(ObjectClass::DualStirling, n, Statistic::Altrun) == want, || format!("dual, n={n}"))?;
                }
                Ok("fap on Q_n and altrun on dual Q_n, n = 1..7".into())
            }),
        ),
        (
            "signed_B_c",
            Box::new(|| {
                let c = polyseq(Sequence::CPoly, 6);
                for n in 1..=6 {
                    ensure(dist(ObjectClass::Signed, n, Statistic::DesB) == eulerian_b(n), || format!("B_{n}"))?;
                    ensure(dist(ObjectClass::SignedHat, n, Statistic::AltrunB) == *c.get(n).unwrap(), || {
                        format!("c_{n}")
                    })?;
                }
                Ok("des_B on B_n and altrun on hat B_n, n = 1..6".into())
            }),
        ),
    ];
    Criterion { id: 1, title: "triangle/enumeration equivalence", limit: Some(Duration::from_secs(60)), subs }
}

fn grammar_sub(f: fn(usize) -> Result<(), String>) -> Box<dyn FnOnce() -> Check> {
    Box::new(move || f(10).map(|_| "n = 0..10".to_string()))
}

fn criterion_2() -> Criterion {
    let subs: Vec<Sub> = vec![
        ("prop31", grammar_sub(checks::prop31)),
        ("prop32", grammar_sub(checks::prop32)),
        ("g1_rq", grammar_sub(checks::g1_rows)),
        ("g2_F", grammar_sub(checks::g2_rows)),
        ("g3_gamma", grammar_sub(checks::g3_rows)),
        ("g4_f", grammar_sub(checks::g4_rows)),
        ("leibniz_convolution", grammar_sub(checks::leibniz_convolution)),
    ];
    Criterion { id: 2, title: "grammar equivalence", limit: Some(Duration::from_secs(10)), subs }
}

fn criterion_3() -> Criterion {
    let subs: Vec<Sub> = vec![
        (
            "T_half_1px_R",
            Box::new(|| {
                let (r, t) = (triangle(Family::R, 12), triangle(Family::T, 12));
                for n in 2..=12 {
                    let want = (&Poly::one_plus_x() * &r.row_poly(n).unwrap()).scale(&ratio(1, 2));
                    ensure(t.row_poly(n).unwrap() == want, || format!("n={n}"))?;
                }
                Ok("n = 2..12".into())
            }),
        ),
        (
            "R_convolution",
            Box::new(|| {
                let (r, t) = (triangle(Family::R, 13), triangle(Family::T, 12));
                for n in 0..=12 {
                    let mut sum = Poly::zero();
                    for k in 0..=n {
                        let c = Scalar::from_integer(binomial(n as u64, k as u64));
                        sum = &sum + &(&t.row_poly(k).unwrap() * &t.row_poly(n - k).unwrap()).scale(&c);
                    }
                    ensure(sum == r.row_poly(n + 1).unwrap(), || format!("n={n}"))?;
                }
                Ok("n = 0..12".into())
            }),
        ),
        (
            "root_multiplicity",
            Box::new(|| {
                let r = triangle(Family::R, 12);
                for n in 2..=12 {
                    let m = r.row_poly(n).unwrap().root_multiplicity(&int(-1)).unwrap();
                    ensure(m == n / 2 - 1, || format!("n={n}: {m}"))?;
                }
                Ok("n = 2..12".into())
            }),
        ),
        (
            "Rq_parity",
            Box::new(|| {
                let rq = rq_triangle(12);
                let al = Alphabet::new(&["x", "q"]);
                let (x, q) = (MultiPoly::var(&al, "x").unwrap(), MultiPoly::var(&al, "q").unwrap());
                for n in 0..=12 {
                    let p = rq_bivariate(rq.row(n).unwrap());
                    ensure(p.substitute(&al, &[x.clone(), -&q]) == p.substitute(&al, &[-&x, q.clone()]), || {
                        format!("n={n}")
                    })?;
                }
                Ok("n = 0..12".into())
            }),
        ),
        (
            "d_at_minus_one",
            Box::new(|| {
                let d = polyseq(Sequence::DPoly, 12);
                for n in 1..=12 {
                    ensure(d.get(n).unwrap().evaluate(&int(-1)) == int(1 - n as i64), || format!("n={n}"))?;
                }
                Ok("n = 1..12".into())
            }),
        ),
        (
            "gamma_diagonal",
            Box::new(|| {
                let g = triangle(Family::Gamma, 13);
                for n in 1..=12 {
                    let sign = if n % 2 == 0 { 1 } else { -1 };
                    let want = Scalar::from_integer(double_factorial_odd(n as u64)) * int(sign);
                    ensure(g.entry(n + 1, n + 1) == want, || format!("n={n}"))?;
                }
                Ok("n = 1..12".into())
            }),
        ),
        (
            "f_nonnegative",
            Box::new(|| {
                let f = triangle(Family::SemiF, 40);
                for (n, row) in f.rows() {
                    ensure(row.iter().all(|c| *c >= Scalar::zero()), || format!("row {n}"))?;
                }
                Ok("n = 0..40".into())
            }),
        ),
    ];
    Criterion { id: 3, title: "identity suite", limit: None, subs }
}

fn criterion_4() -> Criterion {
    let pairs = david_barton_pairs(10);
    let mutation_pairs = pairs.clone();
    let subs: Vec<Sub> = vec![
        (
            "certificates",
            Box::new(move || {
                for (label, n, delta, form, nn) in &pairs {
                    ensure(david_barton_assemble(form, *n, *delta).unwrap() == *nn, || {
                        format!("{label} assembly n={n}")
                    })?;
                    let samples = farey_samples(nn.degree().unwrap() + 1);
                    let ok = david_barton_identity_check(&form.reassemble(), nn, *n, *delta, &samples).unwrap();
                    ensure(ok, || format!("{label} n={n}"))?;
                }
                Ok(format!("(A_n, R_n) n = 2..10 and (B_n, b_n) n = 1..10, {} pairs", pairs.len()))
            }),
        ),
        (
            "mutations",
            Box::new(move || {
                let mut count = 0;
                for (label, n, delta, form, nn) in &mutation_pairs {
                    let samples = farey_samples(nn.degree().unwrap() + 1);
                    for k in 0..form.gammas.len() {
                        let mut bad = form.clone();
                        bad.gammas[k] += Scalar::one();
                        let ok = david_barton_identity_check(&bad.reassemble(), nn, *n, *delta, &samples).unwrap();
                        ensure(!ok, || format!("{label} n={n} k={k} survives"))?;
                        count += 1;
                    }
                }
                Ok(format!("{count} single-entry mutations rejected"))
            }),
        ),
    ];
    Criterion { id: 4, title: "David-Barton certificates", limit: Some(Duration::from_secs(5)), subs }
}

fn witness(w: Result<IdentityWitness, SeriesError>) -> Check {
    let w = w.map_err(|e| e.to_string())?;
    match w.report.first_mismatch {
        None => Ok(format!("order {}", w.report.order)),
        Some(n) => Err(format!(
            "first mismatch at n={n}: closed form gives {}, recurrence gives {}",
            w.closed_form[n], w.oracle[n]
        )),
    }
}

fn criterion_5() -> Criterion {
    const ORDER: usize = 12;
    let subs: Vec<Sub> = vec![
        ("egf_T", Box::new(|| witness(t_series_check(ORDER)))),
        ("carlitz", Box::new(|| witness(carlitz_check(ORDER)))),
        (
            "egf_Rq",
            Box::new(|| {
                for q in [int(1), int(2), int(3), ratio(1, 2)] {
                    witness(rq_series_check(&q, ORDER)).map_err(|e| format!("q={q}: {e}"))?;
                }
                Ok("q in {1, 2, 3, 1/2}, order 12".into())
            }),
        ),
        ("derangement", Box::new(|| witness(derangement_identity(ORDER)))),
        (
            "Rxyz",
            Box::new(|| {
                for q in [int(1), int(2), int(3), ratio(1, 2)] {
                    witness(rxyz_check(&q, 8)).map_err(|e| format!("q={q}: {e}"))?;
                }
                Ok("q in {1, 2, 3, 1/2}, n <= 8".into())
            }),
        ),
        (
            "pde",
            Box::new(|| {
                let r = pde_check(ORDER);
                ensure(r.pass, || format!("mismatch at {:?}", r.first_mismatch))?;
                let rq = rq_triangle(ORDER);
                let mut rows: Vec<MultiPoly> = (0..=ORDER).map(|n| rq_bivariate(rq.row(n).unwrap())).collect();
                rows[5].add_term(vec![2, 3], int(1));
                ensure(!pde_check_rows(&rows, ORDER).pass, || "mutated triangle passes".into())?;
                Ok("order 12; mutated triangle rejected".into())
            }),
        ),
        ("f_diag", Box::new(|| witness(f_diag_identity(ORDER)))),
        ("d_diag", Box::new(|| witness(d_diag_identity(ORDER)))),
        (
            "F_dual",
            Box::new(|| {
                let samples = f_dual_samples(ORDER);
                for x0 in &samples {
                    witness(f_dual_identity(x0, ORDER)).map_err(|e| format!("x0={x0}: {e}"))?;
                }
                Ok(format!(
                    "{} samples from x0 in {{0, 1/2, 1/3, 2/5, ...}}, degree bound {}",
                    samples.len(),
                    2 * ORDER
                ))
            }),
        ),
        (
            "theta",
            Box::new(|| {
                let f = polyseq(Sequence::FPoly, 10);
                for n in 0..=10 {
                    ensure(theta_identity_holds(n, f.get(n).unwrap()), || format!("n={n}"))?;
                }
                Ok("n = 0..10".into())
            }),
        ),
    ];
    Criterion { id: 5, title: "series certificates at order 12", limit: Some(Duration::from_secs(30)), subs }
}

fn random_symmetric(rng: &mut ChaCha8Rng) -> (Poly, usize, usize) {
    let d = rng.gen_range(0..=16usize);
    let low = rng.gen_range(0..=2usize);
    let mut c = vec![Scalar::zero(); low + d + 1];
    for i in 0..=d / 2 {
        let v = ratio(rng.gen_range(-60..=60), rng.gen_range(1..=4));
        c[low + i] = v.clone();
        c[low + d - i] = v;
    }
    (Poly::new(c), low, low + d)
}

fn criterion_6() -> Criterion {
    let subs: Vec<Sub> = vec![
        (
            "family_round_trip",
            Box::new(|| {
                let polys = symmetric_family_polys(12);
                for (name, p, lo, hi) in &polys {
                    let g = gamma_expand(p, *lo, *hi).map_err(|e| format!("{name}: {e}"))?;
                    let s = semi_gamma_expand(p, *lo, *hi).map_err(|e| format!("{name}: {e}"))?;
                    ensure(g.reassemble() == *p && s.reassemble() == *p, || name.clone())?;
                }
                for (label, _, _, form, _) in david_barton_pairs(12) {
                    ensure(gamma_expand(&form.reassemble(), 0, form.base_degree).unwrap() == form, || {
                        label.to_string()
                    })?;
                }
                Ok(format!("{} polynomials A_n, B_n, F_n plus a- and b-rows, n <= 12", polys.len()))
            }),
        ),
        (
            "lambda_random",
            Box::new(|| {
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
                for i in 0..200 {
                    let (p, lo, hi) = random_symmetric(&mut rng);
                    let g = gamma_expand(&p, lo, hi).unwrap();
                    let s = semi_gamma_expand(&p, lo, hi).unwrap();
                    ensure(gamma_to_lambda(&g) == s, || format!("sample {i}: {p}"))?;
                    ensure(g.reassemble() == p && s.reassemble() == p, || format!("sample {i}: reassembly"))?;
                }
                Ok("200 random symmetric polynomials, degree <= 16".into())
            }),
        ),
        (
            "F_split_halves",
            Box::new(|| {
                let f = polyseq(Sequence::FPoly, 12);
                for n in 1..=12 {
                    let (g1, g2) = split_halves_gamma(f.get(n).unwrap()).unwrap();
                    ensure(g1.is_positive() && g2.is_positive(), || format!("n={n}"))?;
                }
                Ok("n = 1..12".into())
            }),
        ),
    ];
    Criterion { id: 6, title: "gamma machinery", limit: Some(Duration::from_secs(10)), subs }
}

fn main() -> ExitCode {
    // Sanity anchor for the factorial helper used by row-sum statements.
    assert_eq!(factorial(5), 120.into());
    let mut failures = Vec::new();
    for c in [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6()] {
        run(c, &mut failures);
    }
    let unexpected: Vec<&String> = failures.iter().filter(|f| !KNOWN_RED.contains(&f.as_str())).collect();
    let missing: Vec<&&str> = KNOWN_RED.iter().filter(|k| !failures.iter().any(|f| f == *k)).collect();
    println!("summary: {} failing sub-check(s) {:?}; known red {:?}", failures.len(), failures, KNOWN_RED);
    if unexpected.is_empty() && missing.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures {unexpected:?}, known red now passing {missing:?}");
        ExitCode::FAILURE
    }
}
