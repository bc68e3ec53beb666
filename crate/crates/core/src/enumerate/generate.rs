use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::objects::{dual_map, CombObject, Permutation, SignedPermutation, StirlingWord};
use super::stats::stat;
use super::{Budget, EnumError, ObjectClass, Statistic};
use crate::algebra::{double_factorial_odd, factorial, int, Alphabet, MultiPoly};

/// Number of objects `generate(class, n)` yields.
pub fn cardinality(class: ObjectClass, n: usize) -> BigInt {
    let nn = n as u64;
    match class {
        ObjectClass::Perm => factorial(nn),
        ObjectClass::Signed => factorial(nn) << n,
        ObjectClass::SignedHat if n == 0 => BigInt::zero(),
        ObjectClass::SignedHat => factorial(nn) << (n - 1),
        ObjectClass::Derangement => {
            // D_n = (n-1)(D_{n-1} + D_{n-2})
            let (mut a, mut b) = (BigInt::one(), BigInt::zero());
            if n == 0 {
                return a;
            }
            for k in 2..=nn {
                let next = BigInt::from(k - 1) * (&a + &b);
                a = b;
                b = next;
            }
            b
        }
        ObjectClass::Stirling | ObjectClass::DualStirling => double_factorial_odd(nn),
    }
}

/// Depth-first generator over words, yielding them in lexicographic order.
pub struct ObjectStream {
    class: ObjectClass,
    len: usize,
    candidates: Vec<i32>,
    word: Vec<i32>,
    next_idx: Vec<usize>,
    done: bool,
}

impl ObjectStream {
    fn new(class: ObjectClass, n: usize) -> Self {
        let n32 = n as i32;
        let (len, candidates): (usize, Vec<i32>) = match class {
            ObjectClass::Perm | ObjectClass::Derangement => (n, (1..=n32).collect()),
            ObjectClass::Signed | ObjectClass::SignedHat => (n, (-n32..=-1).chain(1..=n32).collect()),
            ObjectClass::Stirling | ObjectClass::DualStirling => (2 * n, (1..=n32).collect()),
        };
        ObjectStream { class, len, candidates, word: Vec::with_capacity(len), next_idx: vec![0], done: false }
    }

    fn admissible(&self, v: i32) -> bool {
        let w = &self.word;
        let pos = w.len();
        match self.class {
            ObjectClass::Perm => !w.contains(&v),
            ObjectClass::Derangement => v as usize != pos + 1 && !w.contains(&v),
            ObjectClass::Signed => !w.iter().any(|u| u.abs() == v.abs()),
            ObjectClass::SignedHat => (pos > 0 || v > 0) && !w.iter().any(|u| u.abs() == v.abs()),
            ObjectClass::Stirling | ObjectClass::DualStirling => {
                // Open values (seen once) form an increasing stack: a new value
                // must exceed all of them, and only the top may be closed.
                let mut count = 0;
                let mut top_open = 0;
                let mut seen = vec![0u8; self.candidates.len() + 1];
                for &u in w {
                    seen[u as usize] += 1;
                    if u == v {
                        count += 1;
                    }
                }
                for (u, &c) in seen.iter().enumerate() {
                    if c == 1 {
                        top_open = u as i32;
                    }
                }
                match count {
                    0 => v > top_open,
                    1 => v == top_open,
                    _ => false,
                }
            }
        }
    }

    fn emit(&self) -> CombObject {
        match self.class {
            ObjectClass::Perm | ObjectClass::Derangement => {
                CombObject::Perm(Permutation::new_unchecked(self.word.iter().map(|&v| v as u32).collect()))
            }
            ObjectClass::Signed | ObjectClass::SignedHat => {
                CombObject::Signed(SignedPermutation::new_unchecked(self.word.clone()))
            }
            ObjectClass::Stirling => {
                CombObject::Stirling(StirlingWord::new_unchecked(self.word.iter().map(|&v| v as u32).collect()))
            }
            ObjectClass::DualStirling => {
                let s = StirlingWord::new_unchecked(self.word.iter().map(|&v| v as u32).collect());
                CombObject::Perm(dual_map(&s))
            }
        }
    }
}

impl Iterator for ObjectStream {
    type Item = CombObject;

    fn next(&mut self) -> Option<CombObject> {
        if self.done {
            return None;
        }
        if self.len == 0 {
            self.done = true;
            return (self.class != ObjectClass::SignedHat).then(|| self.emit());
        }
        loop {
            let depth = self.word.len();
            if depth == self.len {
                let out = self.emit();
                self.word.pop();
                self.next_idx.pop();
                return Some(out);
            }
            let start = self.next_idx[depth];
            let found = (start..self.candidates.len()).find(|&i| self.admissible(self.candidates[i]));
            match found {
                Some(i) => {
                    self.next_idx[depth] = i + 1;
                    self.word.push(self.candidates[i]);
                    self.next_idx.push(0);
                }
                None if depth == 0 => {
                    self.done = true;
                    return None;
                }
                None => {
                    self.word.pop();
                    self.next_idx.pop();
                }
            }
        }
    }
}

/// Streams every object of the class exactly once, in lexicographic order of
/// its word (dual Stirling permutations inherit the order of their preimages,
/// which the dual map preserves).
pub fn generate(class: ObjectClass, n: usize, budget: Budget) -> Result<ObjectStream, EnumError> {
    if class == ObjectClass::SignedHat && n == 0 {
        return Err(EnumError::EmptyClass(class));
    }
    let count = cardinality(class, n);
    if count > BigInt::from(budget.0) {
        return Err(EnumError::SizeLimit { class, n, count: count.to_string(), budget: budget.0 });
    }
    Ok(ObjectStream::new(class, n))
}

/// `sum over objects of prod var^stat`, as a polynomial over the listed
/// variable names (in order).
pub fn distribution(
    class: ObjectClass,
    n: usize,
    stats: &[(Statistic, &str)],
    budget: Budget,
) -> Result<MultiPoly, EnumError> {
    let names: Vec<&str> = stats.iter().map(|(_, v)| *v).collect();
    let alphabet = Alphabet::new(&names);
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for obj in generate(class, n, budget)? {
        let key = stats.iter().map(|(s, _)| stat(&obj, *s)).collect::<Result<Vec<_>, _>>()?;
        *counts.entry(key).or_default() += 1;
    }
    // Exponent tuples must line up with distinct variables; repeated names
    // multiply into the same letter.
    let mut out = MultiPoly::zero(&alphabet);
    for (key, c) in counts {
        let mut e = vec![0u32; alphabet.len()];
        for (k, name) in key.iter().zip(&names) {
            e[alphabet.index_of(name).unwrap()] += k;
        }
        out.add_term(e, int(c.to_i64().expect("count fits i64")));
    }
    Ok(out)
}
