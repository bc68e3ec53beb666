//! Named cross-checks grouped into suites, producing a deterministic report.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{double_factorial_odd, factorial, int, ratio, Alphabet, MultiPoly, Poly, Scalar};
use crate::enumerate::{
    cycle_canonical, distribution, dual_map, generate, stat, Budget, CombObject, EnumError, ObjectClass, Statistic,
};
use crate::families::{
    b_from_triangle, eulerian_a, eulerian_b, f_from_gamma, f_from_semi, inclusion_exclusion_rxy, polyseq, q_specialize,
    rq_bivariate, rq_triangle, triangle, Family, Sequence,
};
use crate::gamma::{
    david_barton_assemble, david_barton_identity_check, farey_samples, gamma_expand, gamma_to_lambda,
    semi_gamma_expand, split_halves_gamma, GammaForm,
};
use crate::grammar::checks;
use crate::series::{
    carlitz_check, d_diag_identity, d_diag_product_identity, derangement_identity, egf_rq, f_diag_identity,
    f_dual_identity, f_dual_samples, pde_check, pde_check_rows, rq_series_check, rq_symmetry_check, rxyz_check,
    t_series_check, theta_identity_holds, IdentityWitness, SeriesError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Grammar,
    Triangles,
    Enumeration,
    DavidBarton,
    Series,
    Gamma,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::All,
        Suite::Grammar,
        Suite::Triangles,
        Suite::Enumeration,
        Suite::DavidBarton,
        Suite::Series,
        Suite::Gamma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Grammar => "grammar",
            Suite::Triangles => "triangles",
            Suite::Enumeration => "enumeration",
            Suite::DavidBarton => "davidbarton",
            Suite::Series => "series",
            Suite::Gamma => "gamma",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyParams {
    pub max_n: usize,
    pub order: usize,
    pub budget: Budget,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams { max_n: 7, order: 10, budget: Budget::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub check_id: String,
    pub params: Value,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub overall: bool,
}

impl VerifyReport {
    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| json!({ "check_id": c.check_id, "params": c.params, "pass": c.pass, "detail": c.detail }))
            .collect();
        json!({ "suite": self.suite, "checks": checks, "overall": self.overall })
    }
}

fn check(id: &str, params: Value, f: impl FnOnce() -> Result<String, String>) -> CheckResult {
    let (pass, detail) = match f() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CheckResult { check_id: id.to_string(), params, pass, detail }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Runs a suite; `all` runs the others on separate threads and merges the
/// checks in `check_id` order.
pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<VerifyReport, VerifyError> {
    let mut checks = match suite {
        Suite::All => {
            let parts =
                [Suite::Grammar, Suite::Triangles, Suite::Enumeration, Suite::DavidBarton, Suite::Series, Suite::Gamma];
            let results: Vec<Result<Vec<CheckResult>, VerifyError>> = std::thread::scope(|s| {
                let handles: Vec<_> = parts.iter().map(|&p| s.spawn(move || suite_checks(p, params))).collect();
                handles.into_iter().map(|h| h.join().expect("suite thread")).collect()
            });
            let mut all = Vec::new();
            for r in results {
                all.extend(r?);
            }
            all
        }
        other => suite_checks(other, params)?,
    };
    checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
    let overall = checks.iter().all(|c| c.pass);
    Ok(VerifyReport { suite: suite.name().to_string(), checks, overall })
}

fn suite_checks(suite: Suite, p: &VerifyParams) -> Result<Vec<CheckResult>, VerifyError> {
    Ok(match suite {
        Suite::Grammar => grammar_suite(p.max_n),
        Suite::Triangles => triangle_suite(p.max_n),
        Suite::Enumeration => enumeration_suite(p.max_n, p.budget)?,
        Suite::DavidBarton => david_barton_suite(p.max_n),
        Suite::Series => series_suite(p.order),
        Suite::Gamma => gamma_suite(p.max_n),
        Suite::All => unreachable!("expanded by run_suite"),
    })
}

fn grammar_suite(max_n: usize) -> Vec<CheckResult> {
    let params = json!({ "max_n": max_n });
    let ok = |r: Result<(), String>| r.map(|_| format!("n = 0..{max_n}"));
    vec![
        check("grammar.g1_rq", params.clone(), || ok(checks::g1_rows(max_n))),
        check("grammar.g2_F", params.clone(), || ok(checks::g2_rows(max_n))),
        check("grammar.g3_gamma", params.clone(), || ok(checks::g3_rows(max_n))),
        check("grammar.g4_f", params.clone(), || ok(checks::g4_rows(max_n))),
        check("grammar.leibniz_convolution", params.clone(), || ok(checks::leibniz_convolution(max_n))),
        check("grammar.prop31", params.clone(), || ok(checks::prop31(max_n))),
        check("grammar.prop32", params, || ok(checks::prop32(max_n))),
    ]
}

fn fact(n: usize) -> Scalar {
    Scalar::from_integer(factorial(n as u64))
}

fn triangle_suite(max_n: usize) -> Vec<CheckResult> {
    let params = json!({ "max_n": max_n });
    let r = triangle(Family::R, max_n + 1);
    let t = triangle(Family::T, max_n);
    let rq = rq_triangle(max_n);
    let one = Scalar::one();
    let mut out = Vec::new();

    out.push(check("triangles.row_sums", params.clone(), || {
        for n in 1..=max_n {
            let rs: Scalar = r.row(n).unwrap().iter().sum();
            let ts: Scalar = t.row(n).unwrap().iter().sum();
            let qs = q_specialize(rq.row(n).unwrap(), &one).evaluate(&one);
            ensure(rs == fact(n) && ts == fact(n) && qs == fact(n), || format!("n={n}: sums {rs}, {ts}, {qs}"))?;
        }
        Ok("R, T and R(x;1) rows sum to n!".into())
    }));

    out.push(check("triangles.T_half_1px_R", params.clone(), || {
        for n in 2..=max_n {
            let want = (&Poly::one_plus_x() * &r.row_poly(n).unwrap()).scale(&ratio(1, 2));
            ensure(t.row_poly(n).unwrap() == want, || format!("n={n}"))?;
        }
        Ok("T_n = (1+x) R_n / 2".into())
    }));

    out.push(check("triangles.R_convolution", params.clone(), || {
        for n in 0..max_n {
            let mut sum = Poly::zero();
            for k in 0..=n {
                let c = Scalar::from_integer(crate::algebra::binomial(n as u64, k as u64));
                sum = &sum + &(&t.row_poly(k).unwrap() * &t.row_poly(n - k).unwrap()).scale(&c);
            }
            ensure(sum == r.row_poly(n + 1).unwrap(), || format!("n={n}"))?;
        }
        Ok("R_{n+1} = sum C(n,k) T_k T_{n-k}".into())
    }));

    out.push(check("triangles.root_multiplicity", params.clone(), || {
        for n in 2..=max_n {
            let m = r.row_poly(n).unwrap().root_multiplicity(&int(-1)).map_err(|e| e.to_string())?;
            ensure(m == n / 2 - 1, || format!("n={n}: multiplicity {m}"))?;
        }
        Ok("mult of -1 in R_n is floor(n/2) - 1".into())
    }));

    out.push(check("triangles.Rq_parity", params.clone(), || {
        let al = Alphabet::new(&["x", "q"]);
        let (x, q) = (MultiPoly::var(&al, "x").unwrap(), MultiPoly::var(&al, "q").unwrap());
        for n in 0..=max_n {
            let p = rq_bivariate(rq.row(n).unwrap());
            let neg_q = p.substitute(&al, &[x.clone(), -&q]);
            let neg_x = p.substitute(&al, &[-&x, q.clone()]);
            let both = p.substitute(&al, &[-&x, -&q]);
            ensure(neg_q == neg_x && both == p, || format!("n={n}"))?;
        }
        Ok("R_n(x;-q) = R_n(-x;q), R_n(-x;-q) = R_n(x;q)".into())
    }));

    out.push(check("triangles.q_specialize", params.clone(), || {
        for n in 0..=max_n {
            let row = rq.row(n).unwrap();
            ensure(q_specialize(row, &int(1)) == t.row_poly(n).unwrap(), || format!("q=1, n={n}"))?;
            ensure(q_specialize(row, &int(2)) == r.row_poly(n + 1).unwrap(), || format!("q=2, n={n}"))?;
        }
        Ok("R_n(x;1) = T_n, R_n(x;2) = R_{n+1}".into())
    }));

    out.push(check("triangles.b_c_polynomials", params.clone(), || {
        let b = polyseq(Sequence::BPoly, max_n);
        let c = polyseq(Sequence::CPoly, max_n);
        for n in 0..=max_n {
            ensure(b_from_triangle(n) == *b.get(n).unwrap(), || format!("b_{n}"))?;
            if n >= 1 {
                let cn = b.get(n).unwrap().shift_up(1).divide_exact(&Poly::one_plus_x()).map_err(|e| e.to_string())?;
                ensure(cn == *c.get(n).unwrap(), || format!("c_{n}"))?;
            }
        }
        Ok("b_n from b(n,k) and c_n = x b_n/(1+x) match their recurrences".into())
    }));

    out.push(check("triangles.F_reassembly", params.clone(), || {
        let f = polyseq(Sequence::FPoly, max_n);
        for n in 0..=max_n {
            let want = f.get(n).unwrap();
            ensure(f_from_gamma(n) == *want && f_from_semi(n) == *want, || format!("n={n}"))?;
        }
        Ok("F_n from gamma_{n,k} and from f_{n,k}".into())
    }));

    out.push(check("triangles.f_nonnegative", json!({ "max_n": 40 }), || {
        let f = triangle(Family::SemiF, 40);
        for (n, row) in f.rows() {
            ensure(row.iter().all(|c| c >= &Scalar::zero()), || format!("row {n}"))?;
        }
        Ok("f_{n,k} >= 0 for n <= 40".into())
    }));

    out.push(check("triangles.d_at_minus_one", params.clone(), || {
        let d = polyseq(Sequence::DPoly, max_n);
        for n in 1..=max_n {
            let v = d.get(n).unwrap().evaluate(&int(-1));
            ensure(v == int(1 - n as i64), || format!("d_{n}(-1) = {v}"))?;
        }
        Ok("d_n(-1) = -(n-1)".into())
    }));

    out.push(check("triangles.gamma_diagonal", params.clone(), || {
        let g = triangle(Family::Gamma, max_n + 1);
        for n in 1..=max_n {
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let want = Scalar::from_integer(double_factorial_odd(n as u64)) * int(sign);
            ensure(g.entry(n + 1, n + 1) == want, || format!("n={n}"))?;
        }
        Ok("gamma_{n+1,n+1} = (-1)^n (2n-1)!!".into())
    }));

    out.push(check("triangles.Rxy_specializations", params, || {
        let d = polyseq(Sequence::DPoly, max_n);
        for n in 0..=max_n {
            for q0 in [int(1), int(2), ratio(1, 2)] {
                let p = inclusion_exclusion_rxy(n, &q0);
                let at_one = p.specialize(&[("y", int(1))]).unwrap().to_univariate("x").unwrap();
                ensure(at_one == q_specialize(rq.row(n).unwrap(), &q0), || format!("y=1, n={n}, q={q0}"))?;
            }
            let p = inclusion_exclusion_rxy(n, &int(1));
            let at_zero = p.specialize(&[("y", int(0))]).unwrap().to_univariate("x").unwrap();
            ensure(at_zero == *d.get(n).unwrap(), || format!("y=0, n={n}"))?;
        }
        Ok("y=1 gives R_n(x;q), q=1 and y=0 gives d_n".into())
    }));
    out
}

fn dist_poly(class: ObjectClass, n: usize, s: Statistic, budget: Budget) -> Result<Poly, EnumError> {
    Ok(distribution(class, n, &[(s, "x")], budget)?.to_univariate("x").expect("single variable"))
}

fn enumeration_suite(max_n: usize, budget: Budget) -> Result<Vec<CheckResult>, VerifyError> {
    let perm_n = max_n.min(8);
    let r = triangle(Family::R, perm_n);
    let t = triangle(Family::T, perm_n);
    let rq = rq_triangle(perm_n);
    let mut out = Vec::new();
    let p = |n: usize| json!({ "n_max": n });

    let mut rows = Vec::new();
    for n in 1..=perm_n {
        rows.push((
            n,
            dist_poly(ObjectClass::Perm, n, Statistic::Altrun, budget)?,
            dist_poly(ObjectClass::Perm, n, Statistic::Udrun, budget)?,
            dist_poly(ObjectClass::Perm, n, Statistic::Des, budget)?.shift_up(1),
            distribution(ObjectClass::Perm, n, &[(Statistic::Crun, "x"), (Statistic::Cyc, "q")], budget)?,
        ));
    }
    out.push(check("enumeration.altrun_R", p(perm_n), || {
        for (n, alt, ..) in &rows {
            ensure(*alt == r.row_poly(*n).unwrap(), || format!("n={n}"))?;
        }
        Ok("altrun over S_n = R_n".into())
    }));
    out.push(check("enumeration.udrun_T", p(perm_n), || {
        for (n, _, ud, ..) in &rows {
            ensure(*ud == t.row_poly(*n).unwrap(), || format!("n={n}"))?;
        }
        Ok("udrun over S_n = T_n".into())
    }));
    out.push(check("enumeration.des_A", p(perm_n), || {
        for (n, _, _, des, _) in &rows {
            ensure(*des == eulerian_a(*n), || format!("n={n}"))?;
        }
        Ok("x^(des+1) over S_n = A_n".into())
    }));
    out.push(check("enumeration.crun_cyc_Rq", p(perm_n), || {
        for (n, .., cc) in &rows {
            let want = rq_bivariate(rq.row(*n).unwrap());
            ensure(*cc == want.project(cc.alphabet()).map_err(|e| e.to_string())?, || format!("n={n}"))?;
        }
        Ok("x^crun q^cyc over S_n = R_n(x;q)".into())
    }));

    let der_n = max_n.min(9);
    let d = polyseq(Sequence::DPoly, der_n);
    let mut der = Vec::new();
    for n in 1..=der_n {
        der.push((n, dist_poly(ObjectClass::Derangement, n, Statistic::Crun, budget)?));
    }
    out.push(check("enumeration.derangement_d", p(der_n), || {
        for (n, got) in &der {
            ensure(got == d.get(*n).unwrap(), || format!("n={n}"))?;
        }
        Ok("crun over derangements = d_n".into())
    }));

    let st_n = max_n.min(7);
    let f = polyseq(Sequence::FPoly, st_n);
    let mut st = Vec::new();
    for n in 1..=st_n {
        st.push((
            n,
            dist_poly(ObjectClass::Stirling, n, Statistic::Fap, budget)?,
            dist_poly(ObjectClass::DualStirling, n, Statistic::Altrun, budget)?,
        ));
    }
    out.push(check("enumeration.stirling_F", p(st_n), || {
        for (n, fap, alt) in &st {
            let want = f.get(*n).unwrap();
            ensure(fap == want && alt == want, || format!("n={n}"))?;
        }
        Ok("fap over Q_n = altrun over dual Q_n = F_n".into())
    }));

    let sg_n = max_n.min(6);
    let c = polyseq(Sequence::CPoly, sg_n.max(1));
    let mut sg = Vec::new();
    for n in 1..=sg_n {
        sg.push((
            n,
            dist_poly(ObjectClass::Signed, n, Statistic::DesB, budget)?,
            dist_poly(ObjectClass::SignedHat, n, Statistic::AltrunB, budget)?,
        ));
    }
    out.push(check("enumeration.signed_B_c", p(sg_n), || {
        for (n, desb, alt) in &sg {
            ensure(*desb == eulerian_b(*n), || format!("B_{n}"))?;
            ensure(alt == c.get(*n).unwrap(), || format!("c_{n}"))?;
        }
        Ok("des_B over B_n = B_n, altrun over hat B_n = c_n".into())
    }));

    let mut object_failure: Option<String> = None;
    for n in 1..=perm_n {
        for obj in generate(ObjectClass::Perm, n, budget)? {
            let (a, u) = (stat(&obj, Statistic::As)?, stat(&obj, Statistic::Udrun)?);
            if a != u && object_failure.is_none() {
                object_failure = Some(format!("{obj}: as={a}, udrun={u}"));
            }
        }
    }
    out.push(check("enumeration.as_udrun", p(perm_n), || match &object_failure {
        None => Ok("as = udrun on every permutation".into()),
        Some(e) => Err(e.clone()),
    }));

    let mut bijection_failure: Option<String> = None;
    for n in 1..=perm_n {
        for obj in generate(ObjectClass::Perm, n, budget)? {
            if let CombObject::Perm(pi) = &obj {
                let cf = cycle_canonical(pi);
                let ordered = cf.cycles().windows(2).all(|w| w[0][0] < w[1][0])
                    && cf.cycles().iter().all(|c| c.iter().all(|v| *v >= c[0]));
                if (cf.to_permutation() != *pi || !ordered) && bijection_failure.is_none() {
                    bijection_failure = Some(format!("{pi} -> {cf}"));
                }
            }
        }
    }
    out.push(check("enumeration.cycle_canonical", p(perm_n), || match &bijection_failure {
        None => Ok("canonical cycle form round-trips".into()),
        Some(e) => Err(e.clone()),
    }));

    let mut dual_failure: Option<String> = None;
    for n in 1..=st_n {
        for obj in generate(ObjectClass::Stirling, n, budget)? {
            let CombObject::Stirling(w) = &obj else { continue };
            let phi = dual_map(w);
            let fap = stat(&obj, Statistic::Fap)?;
            let ap = stat(&obj, Statistic::Ap)?;
            let la = stat(&obj, Statistic::La)?;
            let alt = stat(&CombObject::Perm(phi.clone()), Statistic::Altrun)?;
            let word = phi.word();
            let ends_down = word.len() < 2 || word[word.len() - 2] > word[word.len() - 1];
            let pos = |v: u32| word.iter().position(|&x| x == v).unwrap();
            let nested = (1..=n as u32).all(|j| {
                let (hi, lo) = (pos(2 * j), pos(2 * j - 1));
                hi < lo && word[hi + 1..lo].iter().all(|&x| x > 2 * j)
            });
            if (fap != alt || fap != ap + la || !ends_down || !nested) && dual_failure.is_none() {
                dual_failure = Some(format!("{w}: fap={fap}, altrun(phi)={alt}, ap+la={}", ap + la));
            }
        }
    }
    out.push(check("enumeration.dual_map", p(st_n), || match &dual_failure {
        None => Ok("fap = altrun(phi) = ap + la; phi ends descending, 2j before 2j-1".into()),
        Some(e) => Err(e.clone()),
    }));
    Ok(out)
}

/// `(M_n, N_n)` pairs with their gamma rows: `(A_n, R_n, 1)` and `(B_n, b_n, 0)`.
pub fn david_barton_pairs(max_n: usize) -> Vec<(&'static str, usize, i64, GammaForm, Poly)> {
    let a = triangle(Family::A, max_n);
    let b = triangle(Family::B, max_n);
    let r = triangle(Family::R, max_n);
    let mut out = Vec::new();
    for n in 2..=max_n {
        let form = GammaForm { shift: 0, base_degree: n + 1, gammas: a.row(n).unwrap().to_vec() };
        out.push(("A_R", n, 1, form, r.row_poly(n).unwrap()));
    }
    for n in 1..=max_n {
        let form = GammaForm { shift: 0, base_degree: n, gammas: b.row(n).unwrap().to_vec() };
        out.push(("B_b", n, 0, form, b_from_triangle(n)));
    }
    out
}

fn david_barton_suite(max_n: usize) -> Vec<CheckResult> {
    let pairs = david_barton_pairs(max_n);
    let mut out = Vec::new();
    for label in ["A_R", "B_b"] {
        let mine: Vec<_> = pairs.iter().filter(|p| p.0 == label).collect();
        let params = json!({ "max_n": max_n, "delta": if label == "A_R" { 1 } else { 0 } });
        out.push(check(&format!("davidbarton.{label}"), params.clone(), || {
            for (_, n, delta, form, nn) in &mine {
                let assembled = david_barton_assemble(form, *n, *delta).map_err(|e| e.to_string())?;
                ensure(assembled == *nn, || format!("assembly differs at n={n}"))?;
                let samples = farey_samples(nn.degree().unwrap_or(0) + 1);
                let ok = david_barton_identity_check(&form.reassemble(), nn, *n, *delta, &samples)
                    .map_err(|e| e.to_string())?;
                ensure(ok, || format!("identity fails at n={n}"))?;
            }
            Ok(format!("{} certificates with deg+1 samples", mine.len()))
        }));
        out.push(check(&format!("davidbarton.{label}_mutations"), params, || {
            let mut count = 0;
            for (_, n, delta, form, nn) in &mine {
                let samples = farey_samples(nn.degree().unwrap_or(0) + 1);
                for k in 0..form.gammas.len() {
                    let mut bad = form.clone();
                    bad.gammas[k] += Scalar::one();
                    let ok = david_barton_identity_check(&bad.reassemble(), nn, *n, *delta, &samples)
                        .map_err(|e| e.to_string())?;
                    ensure(!ok, || format!("mutation n={n}, k={k} still passes"))?;
                    count += 1;
                }
            }
            Ok(format!("{count} single-entry mutations all rejected"))
        }));
    }
    out
}

fn witness(w: Result<IdentityWitness, SeriesError>) -> Result<String, String> {
    let w = w.map_err(|e| e.to_string())?;
    match w.report.first_mismatch {
        None => Ok(format!("order {}", w.report.order)),
        Some(n) => Err(format!("coefficient {n}: closed form {}, oracle {}", w.closed_form[n], w.oracle[n])),
    }
}

fn series_suite(order: usize) -> Vec<CheckResult> {
    let params = json!({ "order": order });
    let qs = [int(1), int(2), int(3), ratio(1, 2)];
    let rxyz_order = order.min(8);
    let parity_order = order.min(10);
    vec![
        check("series.T", params.clone(), || witness(t_series_check(order))),
        check("series.carlitz", params.clone(), || witness(carlitz_check(order))),
        check("series.Rq", json!({ "order": order, "q": ["1", "2", "3", "1/2"] }), || {
            for q in &qs {
                witness(rq_series_check(q, order)).map_err(|e| format!("q={q}: {e}"))?;
            }
            Ok(format!("order {order}"))
        }),
        check("series.Rq_parity", json!({ "order": parity_order, "q": ["1", "2", "1/2"] }), || {
            for q in [int(1), int(2), ratio(1, 2)] {
                let r = rq_symmetry_check(&q, parity_order).map_err(|e| e.to_string())?;
                ensure(r.pass, || format!("q={q}: coefficient {:?}", r.first_mismatch))?;
            }
            Ok(format!("order {parity_order}"))
        }),
        check("series.f_half", params.clone(), || {
            let s = egf_rq(&ratio(1, 2), order).map_err(|e| e.to_string())?;
            let f = triangle(Family::SemiF, order);
            for n in 0..=order {
                let got = s.egf_coeff(n).rescale_var(&int(2));
                ensure(got == f.row_poly(n).unwrap(), || format!("n={n}"))?;
            }
            Ok("T(2x,z)^(1/2) gives f_n".into())
        }),
        check("series.derangement", params.clone(), || witness(derangement_identity(order))),
        check("series.Rxyz", json!({ "order": rxyz_order, "q": ["1", "2", "1/2"] }), || {
            for q in [int(1), int(2), ratio(1, 2)] {
                witness(rxyz_check(&q, rxyz_order)).map_err(|e| format!("q={q}: {e}"))?;
            }
            Ok(format!("order {rxyz_order}"))
        }),
        check("series.pde", params.clone(), || {
            let r = pde_check(order);
            ensure(r.pass, || format!("coefficient {:?}", r.first_mismatch))?;
            Ok(format!("order {order}"))
        }),
        check("series.pde_mutation", params.clone(), || {
            let rq = rq_triangle(order);
            let mut rows: Vec<MultiPoly> = (0..=order).map(|n| rq_bivariate(rq.row(n).unwrap())).collect();
            let n = order.min(2);
            rows[n].add_term(vec![1, 1], int(1));
            ensure(!pde_check_rows(&rows, order).pass, || "mutated triangle passes".into())?;
            Ok(format!("entry (n={n}) + x q rejected"))
        }),
        check("series.f_diag", params.clone(), || witness(f_diag_identity(order))),
        check("series.d_diag", params.clone(), || {
            let stated = d_diag_identity(order).map_err(|e| e.to_string())?;
            let product = witness(d_diag_product_identity(order))?;
            let note = match stated.report.first_mismatch {
                Some(n) => format!("; the quotient form e^-x/(tan x + sec x) differs from coefficient {n}"),
                None => String::new(),
            };
            Ok(format!("e^-x (tan x + sec x) matches d_(n,n), {product}{note}"))
        }),
        check("series.F_dual", params.clone(), || {
            let samples = f_dual_samples(order);
            for x0 in &samples {
                witness(f_dual_identity(x0, order)).map_err(|e| format!("x0={x0}: {e}"))?;
            }
            Ok(format!("{} samples, degree bound {}", samples.len(), 2 * order))
        }),
        check("series.theta", params, || {
            let f = polyseq(Sequence::FPoly, order);
            for n in 0..=order {
                ensure(theta_identity_holds(n, f.get(n).unwrap()), || format!("n={n}"))?;
            }
            Ok(format!("n = 0..{order}"))
        }),
    ]
}

/// Symmetric family polynomials with their windows: `A_n`, `B_n`, `F_n`.
pub fn symmetric_family_polys(max_n: usize) -> Vec<(String, Poly, usize, usize)> {
    let f = polyseq(Sequence::FPoly, max_n);
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("A_{n}"), eulerian_a(n), 1, n));
        out.push((format!("B_{n}"), eulerian_b(n), 0, n));
        out.push((format!("F_{n}"), f.get(n).unwrap().clone(), 1, 2 * n - 1));
    }
    out
}

fn gamma_suite(max_n: usize) -> Vec<CheckResult> {
    let params = json!({ "max_n": max_n });
    let polys = symmetric_family_polys(max_n);
    vec![
        check("gamma.round_trip", params.clone(), || {
            for (name, p, lo, hi) in &polys {
                let g = gamma_expand(p, *lo, *hi).map_err(|e| format!("{name}: {e}"))?;
                let s = semi_gamma_expand(p, *lo, *hi).map_err(|e| format!("{name}: {e}"))?;
                ensure(g.reassemble() == *p && s.reassemble() == *p, || format!("{name}: reassembly"))?;
                ensure(gamma_to_lambda(&g) == s, || format!("{name}: lambda"))?;
            }
            Ok(format!("{} polynomials", polys.len()))
        }),
        check("gamma.eulerian_rows", params.clone(), || {
            let a = triangle(Family::A, max_n);
            let b = triangle(Family::B, max_n);
            for n in 1..=max_n {
                let ga = gamma_expand(&eulerian_a(n), 1, n).map_err(|e| e.to_string())?.normalized();
                ensure(ga.gammas == a.row(n).unwrap(), || format!("a-row {n}"))?;
                let gb = gamma_expand(&eulerian_b(n), 0, n).map_err(|e| e.to_string())?;
                ensure(gb.gammas == b.row(n).unwrap(), || format!("b-row {n}"))?;
                ensure(ga.is_positive() && gamma_to_lambda(&ga).is_positive(), || format!("A_{n} positivity"))?;
                ensure(gb.is_positive() && gamma_to_lambda(&gb).is_positive(), || format!("B_{n} positivity"))?;
            }
            Ok("a(n,k), b(n,k) recovered; gamma- and semi-gamma-positive".into())
        }),
        check("gamma.F_split_halves", params, || {
            let f = polyseq(Sequence::FPoly, max_n);
            for n in 1..=max_n {
                let (g1, g2) = split_halves_gamma(f.get(n).unwrap()).map_err(|e| e.to_string())?;
                ensure(g1.is_positive() && g2.is_positive(), || format!("n={n}"))?;
            }
            Ok("both halves of F_n/x are gamma-positive".into())
        }),
    ]
}
