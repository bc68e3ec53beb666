use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::poly::{write_terms, Poly};
use super::scalar::{int, Scalar};
use super::AlgebraError;

/// Ordered list of symbol names shared by every polynomial built over it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Arc<[String]>);

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Alphabet(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|s| s == name)
    }

    pub fn require(&self, name: &str) -> Result<usize, AlgebraError> {
        self.index_of(name).ok_or_else(|| AlgebraError::UnknownSymbol(name.to_string()))
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Sparse multivariate polynomial. Exponent tuples always have the
/// alphabet's length and zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl MultiPoly {
    pub fn zero(alphabet: &Alphabet) -> Self {
        MultiPoly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &Alphabet, c: Scalar) -> Self {
        let mut p = MultiPoly::zero(alphabet);
        p.add_term(vec![0; alphabet.len()], c);
        p
    }

    pub fn one(alphabet: &Alphabet) -> Self {
        MultiPoly::constant(alphabet, Scalar::one())
    }

    pub fn var(alphabet: &Alphabet, name: &str) -> Result<Self, AlgebraError> {
        let i = alphabet.require(name)?;
        let mut e = vec![0; alphabet.len()];
        e[i] = 1;
        Ok(MultiPoly::monomial(alphabet, e, Scalar::one()))
    }

    pub fn monomial(alphabet: &Alphabet, exponents: Vec<u32>, c: Scalar) -> Self {
        assert_eq!(exponents.len(), alphabet.len(), "exponent tuple length");
        let mut p = MultiPoly::zero(alphabet);
        p.add_term(exponents, c);
        p
    }

    /// Embeds a univariate polynomial as a polynomial in `var`.
    pub fn from_univariate(alphabet: &Alphabet, var: &str, p: &Poly) -> Result<Self, AlgebraError> {
        let i = alphabet.require(var)?;
        let mut out = MultiPoly::zero(alphabet);
        for (d, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; alphabet.len()];
            e[i] = d as u32;
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> Scalar {
        self.terms.get(exponents).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The constant term when the polynomial is a constant, `None` otherwise.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.iter().next().filter(|(e, _)| e.iter().all(|&k| k == 0)).map(|(_, c)| c.clone()),
            _ => None,
        }
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exponents) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn same_alphabet(&self, other: &MultiPoly) {
        assert!(
            self.alphabet == other.alphabet,
            "{}",
            AlgebraError::AlphabetMismatch(self.alphabet.names().to_vec(), other.alphabet.names().to_vec())
        );
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.alphabet);
        }
        MultiPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(&self.alphabet);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to the letter at `index`.
    pub fn partial(&self, index: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.alphabet);
        for (e, c) in &self.terms {
            if e[index] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[index] -= 1;
            out.add_term(e2, c * int(e[index] as i64));
        }
        out
    }

    /// Alphabet morphism: letter `i` of `self` is replaced by `images[i]`,
    /// all of which live over `target`.
    pub fn substitute(&self, target: &Alphabet, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.alphabet.len(), "one image per letter");
        let mut cache: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(target), p.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while cache[i].len() <= k as usize {
                    let next = cache[i].last().unwrap() * &images[i];
                    cache[i].push(next);
                }
                term = &term * &cache[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Substitution by name: letters listed in `map` go to the given images,
    /// every other letter must exist in `target` and maps to itself.
    pub fn substitute_named(&self, target: &Alphabet, map: &[(&str, MultiPoly)]) -> Result<MultiPoly, AlgebraError> {
        let images = self
            .alphabet
            .names()
            .iter()
            .map(|name| match map.iter().find(|(n, _)| n == name) {
                Some((_, img)) => Ok(img.clone()),
                None => MultiPoly::var(target, name),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.substitute(target, &images))
    }

    /// Re-expresses the polynomial over `target`; letters actually used must
    /// appear there.
    pub fn project(&self, target: &Alphabet) -> Result<MultiPoly, AlgebraError> {
        let map: Vec<Option<usize>> = self.alphabet.names().iter().map(|n| target.index_of(n)).collect();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| AlgebraError::UnknownSymbol(self.alphabet.names()[i].clone()))?;
                e2[j] = k;
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Collapses to a univariate polynomial in `var`; fails if any other
    /// letter occurs.
    pub fn to_univariate(&self, var: &str) -> Result<Poly, AlgebraError> {
        let idx = self.alphabet.index_of(var);
        let mut coeffs: Vec<Scalar> = Vec::new();
        for (e, c) in &self.terms {
            let mut deg = 0usize;
            for (i, &k) in e.iter().enumerate() {
                if Some(i) == idx {
                    deg = k as usize;
                } else if k != 0 {
                    return Err(AlgebraError::UnknownSymbol(self.alphabet.names()[i].clone()));
                }
            }
            if coeffs.len() <= deg {
                coeffs.resize(deg + 1, Scalar::zero());
            }
            coeffs[deg] += c;
        }
        Ok(Poly::new(coeffs))
    }

    /// Substitutes scalar values for the named letters, leaving exponents of
    /// those letters at zero.
    pub fn specialize(&self, values: &[(&str, Scalar)]) -> Result<MultiPoly, AlgebraError> {
        let idx: Vec<(usize, &Scalar)> =
            values.iter().map(|(n, v)| self.alphabet.require(n).map(|i| (i, v))).collect::<Result<_, _>>()?;
        let mut out = MultiPoly::zero(&self.alphabet);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let mut c2 = c.clone();
            for &(i, v) in &idx {
                for _ in 0..e2[i] {
                    c2 *= v;
                }
                e2[i] = 0;
            }
            out.add_term(e2, c2);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sorted: Vec<(&Vec<u32>, &Scalar)> = self.terms.iter().collect();
        sorted.sort_by_key(|(e, _)| (e.iter().sum::<u32>(), e.iter().map(|&k| u32::MAX - k).collect::<Vec<_>>()));
        let names = self.alphabet.names();
        write_terms(
            f,
            sorted
                .into_iter()
                .map(|(e, c)| (c.clone(), e.iter().enumerate().map(|(i, &k)| (names[i].as_str(), k)).collect())),
        )
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{:?}]({self})", self.alphabet)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.same_alphabet(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Scalar::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.same_alphabet(rhs);
        let mut acc: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(Scalar::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        MultiPoly { alphabet: self.alphabet.clone(), terms: acc }
    }
}
