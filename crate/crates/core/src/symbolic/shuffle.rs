use std::fmt;

use super::{PeriodicSequence, SymbolicError};

/// The shuffle of a periodic orbit: the permutation (i_1, …, i_n) listing
/// shift indices in increasing spatial order, f^{i_1}(p) < … < f^{i_n}(p).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Shuffle {
    order: Vec<usize>,
}

impl Shuffle {
    pub fn new(order: Vec<usize>) -> Result<Self, SymbolicError> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &i in &order {
            if i >= n || seen[i] {
                return Err(SymbolicError::NotAPermutation { n });
            }
            seen[i] = true;
        }
        Ok(Self { order })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

impl fmt::Display for Shuffle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.order.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// Shuffle of a periodic sequence, computed symbolically: the order of the
/// orbit points equals the parity order of their itineraries, which are the
/// rotations of the sequence.
pub fn shuffle_of(a: &PeriodicSequence) -> Shuffle {
    let n = a.period();
    let rotations: Vec<PeriodicSequence> = (0..n).map(|k| a.shift(k)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| rotations[i].compare(&rotations[j]));
    Shuffle { order }
}

/// The half-period shift γ of a shuffle: every entry moved by n/2 mod n.
/// γ is an involution and γ(σ(x)) = σ(f^{n/2}(x)).
pub fn gamma_half_shift(s: &Shuffle) -> Result<Shuffle, SymbolicError> {
    let n = s.len();
    if n % 2 != 0 {
        return Err(SymbolicError::OddLength { n });
    }
    let order = s.order.iter().map(|&i| (i + n / 2) % n).collect();
    Ok(Shuffle { order })
}
