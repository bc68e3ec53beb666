//! Chen grammars: the formal derivative induced by letter substitution
//! rules, its iterates, and coefficient-row extraction from the images.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{int, parse_scalar, Alphabet, MultiPoly, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GrammarError {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("cannot parse grammar: {0}")]
    Parse(String),
    #[error("letter `{0}` has more than one rule")]
    DuplicateRule(String),
    #[error("image does not have the expected shape: {0}")]
    NotOfExpectedShape(String),
}

/// Substitution rules over an ordered alphabet. Letters without a rule are
/// constants: their derivative is zero.
#[derive(Clone, PartialEq)]
pub struct Grammar {
    alphabet: Alphabet,
    rules: Vec<MultiPoly>,
}

/// Coefficient and letter powers of one parsed monomial.
type ParsedTerm = (Scalar, Vec<(String, u32)>);

impl Grammar {
    pub fn new(alphabet: &Alphabet, rules: Vec<(&str, MultiPoly)>) -> Result<Self, GrammarError> {
        let mut images: Vec<Option<MultiPoly>> = vec![None; alphabet.len()];
        for (letter, img) in rules {
            let i = alphabet.index_of(letter).ok_or_else(|| GrammarError::UnknownSymbol(letter.to_string()))?;
            if images[i].is_some() {
                return Err(GrammarError::DuplicateRule(letter.to_string()));
            }
            images[i] = Some(img.project(alphabet).map_err(|e| GrammarError::UnknownSymbol(e.to_string()))?);
        }
        let rules = images.into_iter().map(|r| r.unwrap_or_else(|| MultiPoly::zero(alphabet))).collect();
        Ok(Grammar { alphabet: alphabet.clone(), rules })
    }

    /// Parses `"a->q*a*b; b->b*c; c->b^2"`. Letters that only appear on
    /// right-hand sides become constants.
    pub fn parse(text: &str) -> Result<Self, GrammarError> {
        let mut lhs: Vec<String> = Vec::new();
        let mut rhs_terms: Vec<Vec<ParsedTerm>> = Vec::new();
        let mut extra: Vec<String> = Vec::new();
        for rule in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
            let (l, r) =
                rule.split_once("->").ok_or_else(|| GrammarError::Parse(format!("missing `->` in `{rule}`")))?;
            let l = l.trim();
            if !is_identifier(l) {
                return Err(GrammarError::Parse(format!("bad letter `{l}`")));
            }
            if lhs.iter().any(|x| x == l) {
                return Err(GrammarError::DuplicateRule(l.to_string()));
            }
            lhs.push(l.to_string());
            let terms = parse_sum(r)?;
            for (_, factors) in &terms {
                for (name, _) in factors {
                    if !extra.contains(name) {
                        extra.push(name.clone());
                    }
                }
            }
            rhs_terms.push(terms);
        }
        if lhs.is_empty() {
            return Err(GrammarError::Parse("no rules".into()));
        }
        let mut names = lhs.clone();
        names.extend(extra.into_iter().filter(|n| !lhs.contains(n)));
        let alphabet = Alphabet::new(&names);
        let mut rules = Vec::new();
        for (letter, terms) in lhs.iter().zip(rhs_terms) {
            let mut img = MultiPoly::zero(&alphabet);
            for (c, factors) in terms {
                let mut e = vec![0u32; alphabet.len()];
                for (name, k) in factors {
                    e[alphabet.index_of(&name).unwrap()] += k;
                }
                img.add_term(e, c);
            }
            rules.push((letter.as_str(), img));
        }
        Grammar::new(&alphabet, rules)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rule(&self, letter: &str) -> Option<&MultiPoly> {
        self.alphabet.index_of(letter).map(|i| &self.rules[i])
    }

    pub fn constants(&self) -> Vec<&str> {
        self.alphabet.names().iter().zip(&self.rules).filter(|(_, r)| r.is_zero()).map(|(n, _)| n.as_str()).collect()
    }

    pub fn var(&self, letter: &str) -> Result<MultiPoly, GrammarError> {
        MultiPoly::var(&self.alphabet, letter).map_err(|_| GrammarError::UnknownSymbol(letter.to_string()))
    }

    fn lift(&self, p: &MultiPoly) -> Result<MultiPoly, GrammarError> {
        if p.alphabet() == &self.alphabet {
            return Ok(p.clone());
        }
        p.project(&self.alphabet).map_err(|e| match e {
            crate::algebra::AlgebraError::UnknownSymbol(s) => GrammarError::UnknownSymbol(s),
            other => GrammarError::UnknownSymbol(other.to_string()),
        })
    }

    /// One application of the formal derivative, extended by linearity and
    /// the Leibniz rule.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, GrammarError> {
        let p = self.lift(p)?;
        let mut out = MultiPoly::zero(&self.alphabet);
        for (e, c) in p.terms() {
            for (i, &k) in e.iter().enumerate() {
                if k == 0 || self.rules[i].is_zero() {
                    continue;
                }
                let mut rest = e.to_vec();
                rest[i] -= 1;
                let mono = MultiPoly::monomial(&self.alphabet, rest, c * int(k as i64));
                out = &out + &(&mono * &self.rules[i]);
            }
        }
        Ok(out)
    }

    pub fn iterate(&self, seed: &MultiPoly, n: usize) -> Result<MultiPoly, GrammarError> {
        let mut cur = self.lift(seed)?;
        for _ in 0..n {
            cur = self.apply(&cur)?;
        }
        Ok(cur)
    }

    /// `seed, D(seed), ..., D^n(seed)`.
    pub fn orbit(&self, seed: &MultiPoly, n: usize) -> Result<Vec<MultiPoly>, GrammarError> {
        let mut out = vec![self.lift(seed)?];
        for _ in 0..n {
            let next = self.apply(out.last().unwrap())?;
            out.push(next);
        }
        Ok(out)
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .alphabet
            .names()
            .iter()
            .zip(&self.rules)
            .filter(|(_, r)| !r.is_zero())
            .map(|(n, r)| format!("{n}->{}", r.to_string().replace(' ', "")))
            .collect();
        f.write_str(&parts.join("; "))
    }
}

impl fmt::Debug for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Grammar({self})")
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

type Term = (Scalar, Vec<(String, u32)>);

fn parse_sum(s: &str) -> Result<Vec<Term>, GrammarError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(GrammarError::Parse("empty right-hand side".into()));
    }
    let mut terms = Vec::new();
    let mut sign = Scalar::one();
    let mut current = String::new();
    let flush = |cur: &mut String, sign: &Scalar, terms: &mut Vec<Term>| -> Result<(), GrammarError> {
        if cur.trim().is_empty() {
            return Err(GrammarError::Parse("dangling operator".into()));
        }
        let (c, f) = parse_product(cur.trim())?;
        terms.push((c * sign, f));
        cur.clear();
        Ok(())
    };
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '+' | '-' if i == 0 => sign = if ch == '-' { -Scalar::one() } else { Scalar::one() },
            '+' | '-' => {
                flush(&mut current, &sign, &mut terms)?;
                sign = if ch == '-' { -Scalar::one() } else { Scalar::one() };
            }
            _ => current.push(ch),
        }
    }
    flush(&mut current, &sign, &mut terms)?;
    Ok(terms)
}

fn parse_product(s: &str) -> Result<Term, GrammarError> {
    let mut coeff = Scalar::one();
    let mut factors = Vec::new();
    for f in s.split('*').map(str::trim) {
        if f.is_empty() {
            return Err(GrammarError::Parse(format!("empty factor in `{s}`")));
        }
        if f.starts_with(|c: char| c.is_ascii_digit()) {
            coeff *= parse_scalar(f).map_err(|_| GrammarError::Parse(format!("bad coefficient `{f}`")))?;
            continue;
        }
        let (name, pow) = match f.split_once('^') {
            Some((n, p)) => {
                let p: u32 = p.trim().parse().map_err(|_| GrammarError::Parse(format!("bad power in `{f}`")))?;
                (n.trim(), p)
            }
            None => (f, 1),
        };
        if !is_identifier(name) {
            return Err(GrammarError::Parse(format!("bad letter `{name}`")));
        }
        factors.push((name.to_string(), pow));
    }
    if coeff.is_zero() {
        factors.clear();
    }
    Ok((coeff, factors))
}

/// `a -> ab, b -> bc, c -> b^2`.
pub fn prop31_grammar() -> Grammar {
    Grammar::parse("a->a*b; b->b*c; c->b^2").unwrap()
}

/// `a -> 2ab, b -> bc, c -> b^2`.
pub fn prop32_grammar() -> Grammar {
    Grammar::parse("a->2*a*b; b->b*c; c->b^2").unwrap()
}

/// `a -> qab, b -> bc, c -> b^2` with `q` a constant letter.
pub fn g1() -> Grammar {
    Grammar::parse("a->q*a*b; b->b*c; c->b^2").unwrap()
}

/// `x -> xyz, y -> yz^2, z -> y^2 z`.
pub fn g2() -> Grammar {
    Grammar::parse("x->x*y*z; y->y*z^2; z->y^2*z").unwrap()
}

/// `x -> xa, a -> a(b^2 - 2a), b -> ab`.
pub fn g3() -> Grammar {
    Grammar::parse("x->x*a; a->a*b^2 - 2*a^2; b->a*b").unwrap()
}

/// `x -> xu, u -> uv, v -> 4u^2`.
pub fn g4() -> Grammar {
    Grammar::parse("x->x*u; u->u*v; v->4*u^2").unwrap()
}

/// Reads `image = seed^e * sum_k row[k] count^(k) co^(j)` where
/// `count_weight * k + co_weight * j = total`; entries of the row are
/// polynomials in the remaining letters.
pub fn extract_weighted_row(
    image: &MultiPoly,
    seed: (&str, u32),
    count: (&str, u32),
    co: (&str, u32),
    total: u32,
) -> Result<Vec<MultiPoly>, GrammarError> {
    let al = image.alphabet();
    let idx = |name: &str| al.index_of(name).ok_or_else(|| GrammarError::UnknownSymbol(name.to_string()));
    let (si, ci, oi) = (idx(seed.0)?, idx(count.0)?, idx(co.0)?);
    let rest_names: Vec<&str> =
        al.names().iter().enumerate().filter(|(i, _)| ![si, ci, oi].contains(i)).map(|(_, n)| n.as_str()).collect();
    let rest = Alphabet::new(&rest_names);
    let len = (total / count.1) as usize + 1;
    let mut row = vec![MultiPoly::zero(&rest); len];
    for (e, c) in image.terms() {
        let (k, j) = (e[ci], e[oi]);
        if e[si] != seed.1 || count.1 * k + co.1 * j != total {
            let shown = MultiPoly::monomial(al, e.to_vec(), c.clone());
            return Err(GrammarError::NotOfExpectedShape(format!("unexpected term {shown}")));
        }
        let residual: Vec<u32> =
            e.iter().enumerate().filter(|(i, _)| ![si, ci, oi].contains(i)).map(|(_, &v)| v).collect();
        row[k as usize].add_term(residual, c.clone());
    }
    Ok(row)
}

/// Row `n` from `image = seed^e * sum_k row[k] count^k co^(n-k)`.
pub fn extract_triangle(
    image: &MultiPoly,
    seed: (&str, u32),
    count_letter: &str,
    co_letter: &str,
    n: u32,
) -> Result<Vec<MultiPoly>, GrammarError> {
    extract_weighted_row(image, seed, (count_letter, 1), (co_letter, 1), n)
}

/// Converts a row of constant-in-everything entries to scalars.
pub fn row_scalars(row: &[MultiPoly]) -> Result<Vec<Scalar>, GrammarError> {
    row.iter()
        .map(|e| e.as_constant().ok_or_else(|| GrammarError::NotOfExpectedShape(format!("non-constant entry {e}"))))
        .collect()
}

/// Grammar-versus-recurrence comparisons. Each returns `Err` with a short
/// description of the first disagreement.
pub mod checks {
    use super::*;
    use crate::algebra::{binomial, ratio, Poly};
    use crate::families::{rq_triangle, triangle, Family};
    use crate::triangle::Triangle;

    fn compare(label: &str, n: usize, got: &[Scalar], want: &Triangle<Scalar>) -> Result<(), String> {
        let width = got.len().max(want.row(n).map_or(0, |r| r.len()));
        for k in 0..width {
            let g = got.get(k).cloned().unwrap_or_else(Scalar::zero);
            if g != want.entry(n, k) {
                return Err(format!("{label}: n={n} k={k}: grammar gives {g}, recurrence gives {}", want.entry(n, k)));
            }
        }
        Ok(())
    }

    fn err(e: GrammarError) -> String {
        e.to_string()
    }

    /// `D^n(a) = a sum T_{n,k} b^k c^(n-k)` and `D^n(a^2) = a^2 sum R_{n+1,k} b^k c^(n-k)`.
    pub fn prop31(max_n: usize) -> Result<(), String> {
        let g = prop31_grammar();
        let t = triangle(Family::T, max_n);
        let r = triangle(Family::R, max_n + 1);
        let a = g.var("a").map_err(err)?;
        for (n, img) in g.orbit(&a, max_n).map_err(err)?.iter().enumerate() {
            let row = row_scalars(&extract_triangle(img, ("a", 1), "b", "c", n as u32).map_err(err)?).map_err(err)?;
            compare("D^n(a) vs T", n, &row, &t)?;
        }
        for (n, img) in g.orbit(&a.pow(2), max_n).map_err(err)?.iter().enumerate() {
            let row = row_scalars(&extract_triangle(img, ("a", 2), "b", "c", n as u32).map_err(err)?).map_err(err)?;
            compare("D^n(a^2) vs R", n + 1, &row, &r)?;
        }
        Ok(())
    }

    /// `D^n(a) = a sum R_{n+1,k} b^k c^(n-k)` for `a -> 2ab`.
    pub fn prop32(max_n: usize) -> Result<(), String> {
        let g = prop32_grammar();
        let r = triangle(Family::R, max_n + 1);
        for (n, img) in g.orbit(&g.var("a").map_err(err)?, max_n).map_err(err)?.iter().enumerate() {
            let row = row_scalars(&extract_triangle(img, ("a", 1), "b", "c", n as u32).map_err(err)?).map_err(err)?;
            compare("D^n(a) vs R", n + 1, &row, &r)?;
        }
        Ok(())
    }

    /// `D^n(a) = a sum R_{n,k}(q) b^k c^(n-k)` under G1.
    pub fn g1_rows(max_n: usize) -> Result<(), String> {
        let g = g1();
        let rq = rq_triangle(max_n);
        for (n, img) in g.orbit(&g.var("a").map_err(err)?, max_n).map_err(err)?.iter().enumerate() {
            let row = extract_triangle(img, ("a", 1), "b", "c", n as u32).map_err(err)?;
            for (k, e) in row.iter().enumerate() {
                let got = e.to_univariate("q").map_err(|e| e.to_string())?;
                if got != rq.entry(n, k) {
                    return Err(format!(
                        "G1: n={n} k={k}: grammar gives {}, recurrence gives {}",
                        got.display_var("q"),
                        rq.entry(n, k).display_var("q")
                    ));
                }
            }
        }
        Ok(())
    }

    /// `D^n(x) = x sum F_{n,k} y^k z^(2n-k)` under G2.
    pub fn g2_rows(max_n: usize) -> Result<(), String> {
        let g = g2();
        let f = triangle(Family::F, max_n);
        for (n, img) in g.orbit(&g.var("x").map_err(err)?, max_n).map_err(err)?.iter().enumerate() {
            let row =
                row_scalars(&extract_triangle(img, ("x", 1), "y", "z", 2 * n as u32).map_err(err)?).map_err(err)?;
            compare("G2 vs F", n, &row, &f)?;
        }
        Ok(())
    }

    /// `D^n(x) = x sum gamma_{n,k} a^k b^(2n-2k)` under G3, and the morphism
    /// `a = yz, b = y + z` carries the G3 image onto the G2 image.
    pub fn g3_rows(max_n: usize) -> Result<(), String> {
        let (g, g2) = (g3(), g2());
        let gam = triangle(Family::Gamma, max_n);
        let images = g.orbit(&g.var("x").map_err(err)?, max_n).map_err(err)?;
        let targets = g2.orbit(&g2.var("x").map_err(err)?, max_n).map_err(err)?;
        let al = g2.alphabet();
        let (y, z) = (g2.var("y").map_err(err)?, g2.var("z").map_err(err)?);
        let map = [("a", &y * &z), ("b", &y + &z)];
        for (n, img) in images.iter().enumerate() {
            let row = row_scalars(&extract_weighted_row(img, ("x", 1), ("a", 2), ("b", 1), 2 * n as u32).map_err(err)?)
                .map_err(err)?;
            compare("G3 vs gamma", n, &row, &gam)?;
            let moved = img.substitute_named(al, &map).map_err(|e| e.to_string())?;
            if moved != targets[n] {
                return Err(format!("G3 under a=yz, b=y+z differs from G2 at n={n}"));
            }
        }
        Ok(())
    }

    /// `D^n(x) = x sum f_{n,k} u^k v^(n-k)` under G4; the morphism
    /// `u = yz, v = y^2 + z^2` carries it onto G2, and G1 under
    /// `q = 1/2, a = x, b = 2u, c = v` carries onto G4.
    pub fn g4_rows(max_n: usize) -> Result<(), String> {
        let (g, g2, g1) = (g4(), g2(), g1());
        let f = triangle(Family::SemiF, max_n);
        let images = g.orbit(&g.var("x").map_err(err)?, max_n).map_err(err)?;
        let to_g2 = g2.orbit(&g2.var("x").map_err(err)?, max_n).map_err(err)?;
        let from_g1 = g1.orbit(&g1.var("a").map_err(err)?, max_n).map_err(err)?;
        let (y, z) = (g2.var("y").map_err(err)?, g2.var("z").map_err(err)?);
        let up = [("u", &y * &z), ("v", &y.pow(2) + &z.pow(2))];
        let al4 = g.alphabet();
        let (x, u, v) = (g.var("x").map_err(err)?, g.var("u").map_err(err)?, g.var("v").map_err(err)?);
        let down = [("q", MultiPoly::constant(al4, ratio(1, 2))), ("a", x), ("b", u.scale(&int(2))), ("c", v)];
        for (n, img) in images.iter().enumerate() {
            let row = row_scalars(&extract_triangle(img, ("x", 1), "u", "v", n as u32).map_err(err)?).map_err(err)?;
            compare("G4 vs f", n, &row, &f)?;
            if img.substitute_named(g2.alphabet(), &up).map_err(|e| e.to_string())? != to_g2[n] {
                return Err(format!("G4 under u=yz, v=y^2+z^2 differs from G2 at n={n}"));
            }
            if from_g1[n].substitute_named(al4, &down).map_err(|e| e.to_string())? != *img {
                return Err(format!("G1 under q=1/2, a=x, b=2u, c=v differs from G4 at n={n}"));
            }
        }
        Ok(())
    }

    /// `R_{n+1}(x) = sum_k C(n,k) T_k(x) T_{n-k}(x)`, with `R_{n+1}` read off
    /// `D^n(a^2)` and each `T_k` off `D^k(a)`.
    pub fn leibniz_convolution(max_n: usize) -> Result<(), String> {
        let g = prop31_grammar();
        let a = g.var("a").map_err(err)?;
        let as_poly = |img: &MultiPoly, power: u32, n: usize| -> Result<Poly, String> {
            let row =
                row_scalars(&extract_triangle(img, ("a", power), "b", "c", n as u32).map_err(err)?).map_err(err)?;
            Ok(Poly::new(row))
        };
        let ts: Vec<Poly> = g
            .orbit(&a, max_n)
            .map_err(err)?
            .iter()
            .enumerate()
            .map(|(n, img)| as_poly(img, 1, n))
            .collect::<Result<_, _>>()?;
        for (n, img) in g.orbit(&a.pow(2), max_n).map_err(err)?.iter().enumerate() {
            let lhs = as_poly(img, 2, n)?;
            let mut rhs = Poly::zero();
            for k in 0..=n {
                let c = Scalar::from_integer(binomial(n as u64, k as u64));
                rhs = &rhs + &(&ts[k] * &ts[n - k]).scale(&c);
            }
            if lhs != rhs {
                return Err(format!("n={n}: D^n(a^2) gives {lhs}, convolution gives {rhs}"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Poly;

    #[test]
    fn g1_first_derivatives() {
        let g = g1();
        let a = g.var("a").unwrap();
        let d1 = g.apply(&a).unwrap();
        assert_eq!(d1, Grammar::parse("z->q*a*b").unwrap().rule("z").unwrap().project(g.alphabet()).unwrap());
        let d2 = g.apply(&d1).unwrap();
        let (q, b, c) = (g.var("q").unwrap(), g.var("b").unwrap(), g.var("c").unwrap());
        let want = &a * &(&(&q.pow(2) * &b.pow(2)) + &(&(&q * &b) * &c));
        assert_eq!(d2, want);
        assert_eq!(g.constants(), vec!["q"]);
    }

    #[test]
    fn derivative_of_constant_is_zero() {
        let g = g4();
        assert!(g.apply(&MultiPoly::one(g.alphabet())).unwrap().is_zero());
    }

    #[test]
    fn g2_second_iterate() {
        let g = g2();
        let d2 = g.iterate(&g.var("x").unwrap(), 2).unwrap();
        let want = Grammar::parse("w->x*y^3*z + x*y^2*z^2 + x*y*z^3").unwrap();
        assert_eq!(d2, want.rule("w").unwrap().project(g.alphabet()).unwrap());
        let row = row_scalars(&extract_triangle(&d2, ("x", 1), "y", "z", 4).unwrap()).unwrap();
        assert_eq!(row, vec![int(0), int(1), int(1), int(1), int(0)]);
    }

    #[test]
    fn seed_power_and_zero_iterates() {
        let g = prop31_grammar();
        let a2 = g.var("a").unwrap().pow(2);
        assert_eq!(g.iterate(&a2, 0).unwrap(), a2);
        let d2 = g.iterate(&a2, 2).unwrap();
        let row = row_scalars(&extract_triangle(&d2, ("a", 2), "b", "c", 2).unwrap()).unwrap();
        assert_eq!(row, vec![int(0), int(2), int(4)]);
        let row0 = row_scalars(&extract_triangle(&g.var("a").unwrap(), ("a", 1), "b", "c", 0).unwrap()).unwrap();
        assert_eq!(row0, vec![int(1)]);
    }

    #[test]
    fn g1_third_iterate_row() {
        let g = g1();
        let d3 = g.iterate(&g.var("a").unwrap(), 3).unwrap();
        let row: Vec<Poly> = extract_triangle(&d3, ("a", 1), "b", "c", 3)
            .unwrap()
            .iter()
            .map(|e| e.to_univariate("q").unwrap())
            .collect();
        assert_eq!(
            row,
            vec![Poly::zero(), Poly::from_ints(&[0, 1]), Poly::from_ints(&[0, 0, 3]), Poly::from_ints(&[0, 1, 0, 1])]
        );
    }

    #[test]
    fn shape_errors() {
        let g = g1();
        let d2 = g.iterate(&g.var("a").unwrap(), 2).unwrap();
        assert!(matches!(extract_triangle(&d2, ("a", 1), "b", "c", 3), Err(GrammarError::NotOfExpectedShape(_))));
        assert!(matches!(extract_triangle(&d2, ("a", 2), "b", "c", 2), Err(GrammarError::NotOfExpectedShape(_))));
        assert!(matches!(extract_triangle(&d2, ("w", 1), "b", "c", 2), Err(GrammarError::UnknownSymbol(_))));
    }

    #[test]
    fn parser_errors_and_unknown_symbols() {
        assert!(matches!(Grammar::parse("a=>b"), Err(GrammarError::Parse(_))));
        assert!(matches!(Grammar::parse("a->b; a->c"), Err(GrammarError::DuplicateRule(_))));
        assert!(matches!(Grammar::parse("a->b^x"), Err(GrammarError::Parse(_))));
        assert!(matches!(Grammar::parse("a->b +"), Err(GrammarError::Parse(_))));
        let other = Alphabet::new(&["z"]);
        let z = MultiPoly::var(&other, "z").unwrap();
        assert!(matches!(g1().apply(&z), Err(GrammarError::UnknownSymbol(_))));
        let g = Grammar::parse("a -> -2*a^2 + 1/2*b; b -> 0").unwrap();
        assert_eq!(g.to_string(), "a->1/2*b-2*a^2");
    }

    #[test]
    fn recurrence_agreement_small() {
        checks::prop31(6).unwrap();
        checks::prop32(6).unwrap();
        checks::g1_rows(6).unwrap();
        checks::g2_rows(5).unwrap();
        checks::g3_rows(5).unwrap();
        checks::g4_rows(5).unwrap();
        checks::leibniz_convolution(6).unwrap();
    }

    use proptest::prelude::*;

    fn small_poly(al: Alphabet) -> impl Strategy<Value = MultiPoly> {
        let n = al.len();
        prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 0..5).prop_map(move |terms| {
            let mut p = MultiPoly::zero(&al);
            for (e, c) in terms {
                p.add_term(e, int(c));
            }
            p
        })
    }

    fn grammars() -> Vec<Grammar> {
        vec![g1(), g2(), g3(), g4()]
    }

    proptest! {
        #[test]
        fn leibniz((gi, p, r) in (0usize..4).prop_flat_map(|gi| {
            let al = grammars()[gi].alphabet().clone();
            (Just(gi), small_poly(al.clone()), small_poly(al))
        })) {
            let g = &grammars()[gi];
            let lhs = g.apply(&(&p * &r)).unwrap();
            let rhs = &(&g.apply(&p).unwrap() * &r) + &(&p * &g.apply(&r).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn linearity(p in small_poly(g1().alphabet().clone()), r in small_poly(g1().alphabet().clone()),
                     alpha in -3i64..4, beta in -3i64..4) {
            let g = g1();
            let combo = &p.scale(&int(alpha)) + &r.scale(&int(beta));
            let lhs = g.apply(&combo).unwrap();
            let rhs = &g.apply(&p).unwrap().scale(&int(alpha)) + &g.apply(&r).unwrap().scale(&int(beta));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
