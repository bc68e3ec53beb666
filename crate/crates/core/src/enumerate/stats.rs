use super::objects::{cycle_canonical, CombObject, CycleForm, Permutation, SignedPermutation, StirlingWord};
use super::{EnumError, Statistic};

const INFINITY: i64 = i64::MAX;

/// Number of maximal monotone blocks; words of length 0 or 1 have none.
pub fn alternating_runs(word: &[i64]) -> u32 {
    let mut runs = 0;
    let mut prev_up: Option<bool> = None;
    for w in word.windows(2) {
        let up = w[0] < w[1];
        if prev_up != Some(up) {
            runs += 1;
            prev_up = Some(up);
        }
    }
    runs
}

fn as_i64(word: &[u32]) -> Vec<i64> {
    word.iter().map(|&v| v as i64).collect()
}

/// Alternating runs of the zero-prefixed word.
pub fn signed_altrun(pi: &SignedPermutation) -> u32 {
    alternating_runs(&pi.zero_prefixed())
}

/// Longest subsequence `a1 > a2 < a3 > ...`.
fn longest_alternating_subsequence(word: &[u32]) -> u32 {
    // odd[i]: best odd-length pattern ending at i (next step must descend)
    // even[i]: best even-length pattern ending at i (next step must ascend)
    let n = word.len();
    let mut odd = vec![0u32; n];
    let mut even = vec![0u32; n];
    let mut best = 0;
    for i in 0..n {
        odd[i] = 1;
        for j in 0..i {
            if word[j] < word[i] && even[j] > 0 {
                odd[i] = odd[i].max(even[j] + 1);
            }
            if word[j] > word[i] {
                even[i] = even[i].max(odd[j] + 1);
            }
        }
        best = best.max(odd[i]).max(even[i]);
    }
    best
}

struct CycleCounts {
    crun: u32,
    cpk: u32,
    cdasc: u32,
    cddes: u32,
    fix: u32,
    cyc: u32,
}

fn cycle_counts(cf: &CycleForm) -> CycleCounts {
    let mut c = CycleCounts { crun: 0, cpk: 0, cdasc: 0, cddes: 0, fix: 0, cyc: 0 };
    for cyc in cf.cycles() {
        let mut w = as_i64(cyc);
        w.push(INFINITY);
        c.crun += alternating_runs(&w);
        c.cyc += 1;
        if cyc.len() == 1 {
            c.fix += 1;
        }
        // positions 2..=k of y_1..y_k, with y_{k+1} the sentinel
        for i in 1..cyc.len() {
            let (a, b, d) = (w[i - 1], w[i], w[i + 1]);
            if a < b && b > d {
                c.cpk += 1;
            } else if a < b && b < d {
                c.cdasc += 1;
            } else if a > b && b > d {
                c.cddes += 1;
            }
        }
    }
    c
}

fn perm_stat(p: &Permutation, s: Statistic) -> Option<u32> {
    let w = p.word();
    Some(match s {
        Statistic::Altrun => alternating_runs(&as_i64(w)),
        Statistic::Udrun => {
            let mut v = vec![0i64];
            v.extend(as_i64(w));
            alternating_runs(&v)
        }
        Statistic::Des => w.windows(2).filter(|x| x[0] > x[1]).count() as u32,
        Statistic::As => longest_alternating_subsequence(w),
        Statistic::Crun | Statistic::Cyc | Statistic::Fix | Statistic::Cpk | Statistic::Cdasc | Statistic::Cddes => {
            cycle_stat(&cycle_canonical(p), s)?
        }
        _ => return None,
    })
}

fn cycle_stat(cf: &CycleForm, s: Statistic) -> Option<u32> {
    let c = cycle_counts(cf);
    Some(match s {
        Statistic::Crun => c.crun,
        Statistic::Cyc => c.cyc,
        Statistic::Fix => c.fix,
        Statistic::Cpk => c.cpk,
        Statistic::Cdasc => c.cdasc,
        Statistic::Cddes => c.cddes,
        _ => return None,
    })
}

fn signed_stat(p: &SignedPermutation, s: Statistic) -> Option<u32> {
    let w = p.zero_prefixed();
    Some(match s {
        Statistic::DesB => w.windows(2).filter(|x| x[0] > x[1]).count() as u32,
        Statistic::AltrunB => alternating_runs(&w),
        _ => return None,
    })
}

/// Ascent-plateaus at 1-based positions `from..=2n-1`, with `sigma_0 = 0`.
fn plateaus(w: &[u32], from: usize) -> u32 {
    (from..w.len())
        .filter(|&i| {
            let prev = if i == 1 { 0 } else { w[i - 2] };
            prev < w[i - 1] && w[i - 1] == w[i]
        })
        .count() as u32
}

fn stirling_stat(sw: &StirlingWord, s: Statistic) -> Option<u32> {
    let w = sw.word();
    Some(match s {
        Statistic::Ap => plateaus(w, 2),
        Statistic::La => plateaus(w, 1),
        Statistic::Fap => {
            let lead = u32::from(w.len() >= 2 && w[0] == w[1]);
            2 * plateaus(w, 2) + lead
        }
        _ => return None,
    })
}

pub fn stat(object: &CombObject, s: Statistic) -> Result<u32, EnumError> {
    let value = match object {
        CombObject::Perm(p) => perm_stat(p, s),
        CombObject::Signed(p) => signed_stat(p, s),
        CombObject::Stirling(w) => stirling_stat(w, s),
        CombObject::Cycles(c) => cycle_stat(c, s),
    };
    value.ok_or(EnumError::StatClassMismatch { stat: s, kind: object.kind() })
}
