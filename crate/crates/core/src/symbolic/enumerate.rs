use std::fmt;

use super::{PeriodicSequence, Symbol, SymbolicError};

const MAX_ENUM_PERIOD: usize = 24;

/// Möbius function by trial factorization.
pub fn moebius(mut n: u64) -> i64 {
    debug_assert!(n >= 1);
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of points of minimal period exactly n in the full 2-shift:
/// Σ_{d|n} µ(d)·2^{n/d}.
pub fn min_period_point_count(n: usize) -> u64 {
    let n = n as u64;
    let mut total: i64 = 0;
    for d in 1..=n {
        if n % d == 0 {
            total += moebius(d) * 2i64.pow((n / d) as u32);
        }
    }
    total as u64
}

/// One maximal representative per cyclic orbit of minimal period n, emitted
/// in ascending block order with R before L (deterministic for golden files).
pub fn enumerate_min_period_orbits(n: usize) -> Result<Vec<PeriodicSequence>, SymbolicError> {
    if n == 0 || n > MAX_ENUM_PERIOD {
        return Err(SymbolicError::PeriodOutOfRange {
            n,
            max: MAX_ENUM_PERIOD,
        });
    }
    let mut out = Vec::new();
    let mut block = vec![Symbol::R; n];
    for v in 0u64..(1u64 << n) {
        for (i, sym) in block.iter_mut().enumerate() {
            *sym = if (v >> (n - 1 - i)) & 1 == 0 {
                Symbol::R
            } else {
                Symbol::L
            };
        }
        if !has_minimal_period(&block) {
            continue;
        }
        let seq = PeriodicSequence::new(block.clone()).expect("nonempty C-free block");
        if seq.is_maximal() {
            out.push(seq);
        }
    }
    Ok(out)
}

fn has_minimal_period(block: &[Symbol]) -> bool {
    let n = block.len();
    for d in 1..n {
        if n % d == 0 && (d..n).all(|i| block[i] == block[i - d]) {
            return false;
        }
    }
    true
}

/// An unordered pair {A, ν(A)}, stored with the parity-larger member first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SequencePair {
    hi: PeriodicSequence,
    lo: PeriodicSequence,
}

impl SequencePair {
    pub fn new(a: PeriodicSequence, b: PeriodicSequence) -> SequencePair {
        if a >= b {
            SequencePair { hi: a, lo: b }
        } else {
            SequencePair { hi: b, lo: a }
        }
    }

    pub fn hi(&self) -> &PeriodicSequence {
        &self.hi
    }

    pub fn lo(&self) -> &PeriodicSequence {
        &self.lo
    }

    pub fn contains(&self, s: &PeriodicSequence) -> bool {
        &self.hi == s || &self.lo == s
    }
}

impl fmt::Display for SequencePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.hi, self.lo)
    }
}

/// Partition of all minimal-period-n sequences into pairs {A, ν(A)}, sorted
/// by the larger member in descending parity order. For n = 1 this is the
/// single pair {(L)^∞, (R)^∞}.
pub fn symbolic_matching(n: usize) -> Result<Vec<SequencePair>, SymbolicError> {
    let orbits = enumerate_min_period_orbits(n)?;
    let mut pairs = Vec::new();
    for rep in &orbits {
        for k in 0..n {
            let a = rep.shift(k);
            let b = a.nu();
            // each unordered pair shows up once from each member; keep one
            if a > b || (n == 1 && a.block()[0] == Symbol::R) {
                pairs.push(SequencePair::new(a, b));
            }
        }
    }
    pairs.sort_by(|p, q| q.hi.cmp(&p.hi));
    pairs.dedup();
    Ok(pairs)
}
