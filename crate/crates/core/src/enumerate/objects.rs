use std::fmt;
use std::str::FromStr;

use super::EnumError;

/// A permutation of `[n]` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self, EnumError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(EnumError::InvalidPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    pub(crate) fn new_unchecked(word: Vec<u32>) -> Self {
        Permutation(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: u32) -> u32 {
        self.0[i as usize - 1]
    }
}

fn write_word<T: fmt::Display>(f: &mut fmt::Formatter<'_>, word: &[T], compact: bool) -> fmt::Result {
    let sep = if compact { "" } else { " " };
    for (i, v) in word.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0, self.0.iter().all(|&v| v < 10))
    }
}

/// Parses `"324156"` (single digits) or whitespace-separated values.
fn parse_values(s: &str) -> Option<Vec<i64>> {
    let s = s.trim();
    if s.contains(char::is_whitespace) {
        s.split_whitespace().map(|t| t.parse().ok()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(i64::from)).collect()
    }
}

impl FromStr for Permutation {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnumError::InvalidPermutation(s.to_string());
        let vals = parse_values(s).ok_or_else(bad)?;
        let word = vals.into_iter().map(|v| u32::try_from(v).map_err(|_| bad())).collect::<Result<_, _>>()?;
        Permutation::new(word)
    }
}

/// A signed permutation `pi(1) ... pi(n)`; statistics read it as the word
/// `0 pi(1) ... pi(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation(Vec<i32>);

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self, EnumError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(EnumError::InvalidSignedPermutation(format!("{word:?}")));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation(word))
    }

    pub(crate) fn new_unchecked(word: Vec<i32>) -> Self {
        SignedPermutation(word)
    }

    pub fn word(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word with the implicit leading zero.
    pub fn zero_prefixed(&self) -> Vec<i64> {
        std::iter::once(0).chain(self.0.iter().map(|&v| v as i64)).collect()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| format!("{v:+}")).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SignedPermutation {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnumError::InvalidSignedPermutation(s.to_string());
        let word = s.split_whitespace().map(|t| t.parse::<i32>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
        SignedPermutation::new(word)
    }
}

/// Standard cycle decomposition: each cycle starts at its minimum and cycles
/// are sorted by their minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleForm {
    cycles: Vec<Vec<u32>>,
}

impl CycleForm {
    pub fn cycles(&self) -> &[Vec<u32>] {
        &self.cycles
    }

    pub fn size(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0u32; self.size()];
        for cyc in &self.cycles {
            for (i, &v) in cyc.iter().enumerate() {
                word[v as usize - 1] = cyc[(i + 1) % cyc.len()];
            }
        }
        Permutation(word)
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in &self.cycles {
            f.write_str("(")?;
            write_word(f, cyc, false)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub fn cycle_canonical(pi: &Permutation) -> CycleForm {
    let n = pi.len();
    let mut seen = vec![false; n + 1];
    let mut cycles = Vec::new();
    for start in 1..=n as u32 {
        if seen[start as usize] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = start;
        while !seen[v as usize] {
            seen[v as usize] = true;
            cyc.push(v);
            v = pi.apply(v);
        }
        cycles.push(cyc);
    }
    CycleForm { cycles }
}

/// A Stirling permutation: each of `1..=n` twice, and everything between the
/// two copies of `i` is larger than `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StirlingWord(Vec<u32>);

impl StirlingWord {
    pub fn new(word: Vec<u32>) -> Result<Self, EnumError> {
        if is_stirling(&word) {
            Ok(StirlingWord(word))
        } else {
            Err(EnumError::InvalidStirlingWord(format!("{word:?}")))
        }
    }

    pub(crate) fn new_unchecked(word: Vec<u32>) -> Self {
        StirlingWord(word)
    }

    pub fn word(&self) -> &[u32] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len() / 2
    }
}

fn is_stirling(word: &[u32]) -> bool {
    if !word.len().is_multiple_of(2) {
        return false;
    }
    let n = word.len() / 2;
    let mut first = vec![None; n + 1];
    let mut count = vec![0u8; n + 1];
    for (pos, &v) in word.iter().enumerate() {
        let v = v as usize;
        if v == 0 || v > n {
            return false;
        }
        count[v] += 1;
        match count[v] {
            1 => first[v] = Some(pos),
            2 => {
                let start = first[v].unwrap();
                if word[start + 1..pos].iter().any(|&u| u as usize <= v) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    true
}

impl fmt::Display for StirlingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.0, self.0.iter().all(|&v| v < 10))
    }
}

impl FromStr for StirlingWord {
    type Err = EnumError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnumError::InvalidStirlingWord(s.to_string());
        let vals = parse_values(s).ok_or_else(bad)?;
        let word = vals.into_iter().map(|v| u32::try_from(v).map_err(|_| bad())).collect::<Result<_, _>>()?;
        StirlingWord::new(word)
    }
}

/// First occurrence of `j` becomes `2j`, the second becomes `2j - 1`.
pub fn dual_map(sigma: &StirlingWord) -> Permutation {
    let n = sigma.order();
    let mut seen = vec![false; n + 1];
    let word = sigma
        .word()
        .iter()
        .map(|&j| {
            let ju = j as usize;
            if seen[ju] {
                2 * j - 1
            } else {
                seen[ju] = true;
                2 * j
            }
        })
        .collect();
    Permutation(word)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CombObject {
    Perm(Permutation),
    Signed(SignedPermutation),
    Stirling(StirlingWord),
    Cycles(CycleForm),
}

impl CombObject {
    pub fn kind(&self) -> &'static str {
        match self {
            CombObject::Perm(_) => "permutation",
            CombObject::Signed(_) => "signed permutation",
            CombObject::Stirling(_) => "Stirling permutation",
            CombObject::Cycles(_) => "cycle form",
        }
    }
}

impl fmt::Display for CombObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombObject::Perm(p) => p.fmt(f),
            CombObject::Signed(p) => p.fmt(f),
            CombObject::Stirling(s) => s.fmt(f),
            CombObject::Cycles(c) => c.fmt(f),
        }
    }
}
