use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::SymbolicError;

/// One itinerary symbol. The derived order is the kneading order L < C < R.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    L,
    C,
    R,
}

impl Symbol {
    /// The bar operation of the twin map: L̄ = R, R̄ = L. C is left alone;
    /// periodic blocks never contain it.
    pub fn flipped(self) -> Symbol {
        match self {
            Symbol::L => Symbol::R,
            Symbol::R => Symbol::L,
            Symbol::C => Symbol::C,
        }
    }

    fn from_char(c: char) -> Option<Symbol> {
        match c {
            'L' => Some(Symbol::L),
            'C' => Some(Symbol::C),
            'R' => Some(Symbol::R),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Symbol::L => 'L',
            Symbol::C => 'C',
            Symbol::R => 'R',
        }
    }
}

/// Compare two symbol words under the parity ordering: scan the common
/// prefix and decide at the first differing index, with the symbol order
/// reversed when the prefix contains an odd number of R's.
///
/// A word marked periodic repeats its block forever; a finite word simply
/// ends. Two periodic words are compared over lcm of their periods (two
/// periodic words that agree on that window agree everywhere). If the
/// comparable window is exhausted without a difference the words are Equal.
pub fn compare_words(a: &[Symbol], a_periodic: bool, b: &[Symbol], b_periodic: bool) -> Ordering {
    let window = match (a_periodic, b_periodic) {
        (true, true) => lcm(a.len(), b.len()),
        (true, false) => b.len(),
        (false, true) => a.len(),
        (false, false) => a.len().min(b.len()),
    };
    let mut even = true;
    for i in 0..window {
        let sa = a[i % a.len()];
        let sb = b[i % b.len()];
        if sa != sb {
            return if even { sa.cmp(&sb) } else { sb.cmp(&sa) };
        }
        if sa == Symbol::R {
            even = !even;
        }
    }
    Ordering::Equal
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A periodic admissible sequence (A_0 … A_{n-1})^∞ over {L, R}, stored in
/// minimal-period form: the constructor rejects C and reduces the block to
/// its shortest period.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSequence {
    block: Vec<Symbol>,
}

impl PeriodicSequence {
    pub fn new(block: Vec<Symbol>) -> Result<Self, SymbolicError> {
        if block.is_empty() {
            return Err(SymbolicError::EmptyBlock);
        }
        if block.contains(&Symbol::C) {
            return Err(SymbolicError::CInPeriodicBlock);
        }
        Ok(Self {
            block: reduce_to_minimal_period(block),
        })
    }

    /// Minimal period n.
    pub fn period(&self) -> usize {
        self.block.len()
    }

    pub fn block(&self) -> &[Symbol] {
        &self.block
    }

    pub fn symbol(&self, i: usize) -> Symbol {
        self.block[i % self.block.len()]
    }

    /// The shift map S^k: cyclic rotation of the block k places to the left.
    pub fn shift(&self, k: usize) -> PeriodicSequence {
        let n = self.block.len();
        let k = k % n;
        let mut block = Vec::with_capacity(n);
        block.extend_from_slice(&self.block[k..]);
        block.extend_from_slice(&self.block[..k]);
        // a rotation of a minimal-period block keeps its minimal period
        PeriodicSequence { block }
    }

    /// Maximal means S^m(A) ≤ A for every shift m.
    pub fn is_maximal(&self) -> bool {
        let n = self.period();
        (1..n).all(|m| self.compare(&self.shift(m)) != Ordering::Less)
    }

    /// The unique m with S^m(A) maximal; unique because the n rotations of a
    /// minimal-period block are pairwise distinct and totally ordered.
    pub fn maximal_rotation_index(&self) -> usize {
        let n = self.period();
        (0..n)
            .max_by(|&i, &j| self.shift(i).compare(&self.shift(j)))
            .unwrap_or(0)
    }

    /// The maximal rotation itself, used as the canonical orbit representative.
    pub fn maximal_rotation(&self) -> PeriodicSequence {
        self.shift(self.maximal_rotation_index())
    }

    /// The twin map µ: rotate to the maximal representative, flip the last
    /// symbol of its block, rotate back. The result has period n or n/2.
    pub fn mu(&self) -> PeriodicSequence {
        let m = self.maximal_rotation_index();
        let mut w = self.shift(m).block;
        let last = w.last_mut().expect("nonempty block");
        *last = last.flipped();
        w.rotate_right(m);
        PeriodicSequence {
            block: reduce_to_minimal_period(w),
        }
    }

    /// The pairing map ν: µ when µ preserves the period, the half-period
    /// shift when µ halves it. For n ≥ 2 this is a fixed-point-free
    /// involution on minimal-period-n sequences.
    pub fn nu(&self) -> PeriodicSequence {
        let n = self.period();
        let mu = self.mu();
        if mu.period() == n {
            mu
        } else {
            self.shift(n / 2)
        }
    }

    pub fn compare(&self, other: &PeriodicSequence) -> Ordering {
        compare_words(&self.block, true, &other.block, true)
    }
}

impl PartialOrd for PeriodicSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PeriodicSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

impl fmt::Display for PeriodicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.block {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PeriodicSequence {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut block = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match Symbol::from_char(c) {
                Some(Symbol::C) => return Err(SymbolicError::CInPeriodicBlock),
                Some(sym) => block.push(sym),
                None => return Err(SymbolicError::InvalidCharacter { found: c, position }),
            }
        }
        PeriodicSequence::new(block)
    }
}

fn reduce_to_minimal_period(block: Vec<Symbol>) -> Vec<Symbol> {
    let n = block.len();
    for d in 1..n {
        if n % d != 0 {
            continue;
        }
        if (d..n).all(|i| block[i] == block[i - d]) {
            return block[..d].to_vec();
        }
    }
    block
}

/// A finite itinerary: a word of R's and L's, optionally closed by a single
/// terminal C ("we omit the sequence after C").
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteItinerary {
    symbols: Vec<Symbol>,
}

impl FiniteItinerary {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, SymbolicError> {
        if symbols.is_empty() {
            return Err(SymbolicError::EmptyBlock);
        }
        let len = symbols.len();
        if let Some(position) = symbols[..len - 1].iter().position(|&s| s == Symbol::C) {
            return Err(SymbolicError::InteriorC { position, len });
        }
        Ok(Self { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn terminated_by_c(&self) -> bool {
        self.symbols.last() == Some(&Symbol::C)
    }

    pub fn compare(&self, other: &FiniteItinerary) -> Ordering {
        compare_words(&self.symbols, false, &other.symbols, false)
    }

    pub fn compare_periodic(&self, other: &PeriodicSequence) -> Ordering {
        compare_words(&self.symbols, false, other.block(), true)
    }

    /// True when the word is C-free and its infinite repetition-free reading
    /// matches `seq` cyclically, i.e. symbol i equals seq's symbol i.
    pub fn matches_cyclically(&self, seq: &PeriodicSequence) -> bool {
        !self.terminated_by_c()
            && self
                .symbols
                .iter()
                .enumerate()
                .all(|(i, &s)| s == seq.symbol(i))
    }
}

impl fmt::Display for FiniteItinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for FiniteItinerary {
    type Err = SymbolicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut symbols = Vec::with_capacity(s.len());
        for (position, c) in s.chars().enumerate() {
            match Symbol::from_char(c) {
                Some(sym) => symbols.push(sym),
                None => return Err(SymbolicError::InvalidCharacter { found: c, position }),
            }
        }
        FiniteItinerary::new(symbols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> PeriodicSequence {
        s.parse().unwrap()
    }

    #[test]
    fn constructor_reduces_to_minimal_period() {
        assert_eq!(seq("RLLRLLRLL"), seq("RLL"));
        assert_eq!(seq("RLRL").period(), 2);
        assert_eq!(seq("RLR").period(), 3);
    }

    #[test]
    fn parser_rejects_garbage() {
        assert!(matches!(
            "RLx".parse::<PeriodicSequence>(),
            Err(SymbolicError::InvalidCharacter { position: 2, .. })
        ));
        assert!(matches!(
            "RLC".parse::<PeriodicSequence>(),
            Err(SymbolicError::CInPeriodicBlock)
        ));
        assert!(matches!(
            "RCL".parse::<FiniteItinerary>(),
            Err(SymbolicError::InteriorC { position: 1, .. })
        ));
        assert!("RLC".parse::<FiniteItinerary>().is_ok());
        assert!(matches!(
            "".parse::<PeriodicSequence>(),
            Err(SymbolicError::EmptyBlock)
        ));
    }

    #[test]
    fn compare_spec_examples() {
        // (RLL) vs (RLR): prefix RL has one R, so the order reverses at L vs R.
        assert_eq!(seq("RLL").compare(&seq("RLR")), Ordering::Greater);
        assert_eq!(seq("R").compare(&seq("R")), Ordering::Equal);
        assert_eq!(seq("L").compare(&seq("R")), Ordering::Less);
    }

    #[test]
    fn compare_over_lcm_window() {
        // (RL) vs (RLRL) are the same sequence after reduction.
        assert_eq!(seq("RL").compare(&seq("RLRL")), Ordering::Equal);
        // different periods, decided inside the lcm window
        assert_eq!(seq("RL").compare(&seq("RLL")), Ordering::Less);
    }

    #[test]
    fn c_uses_its_order_position_at_terminal_index() {
        let rlc: FiniteItinerary = "RLC".parse().unwrap();
        // prefix RL is odd, so the symbol order reverses: C sits above R and
        // below L there (on the tent map the RLC point is x = 7/8)
        assert_eq!(rlc.compare_periodic(&seq("RLL")), Ordering::Less);
        assert_eq!(rlc.compare_periodic(&seq("RLR")), Ordering::Greater);
    }

    #[test]
    fn shift_spec_examples() {
        assert_eq!(seq("RLLRLR").shift(3), seq("RLRRLL"));
        assert_eq!(seq("RLRRLL").shift(0), seq("RLRRLL"));
        assert_eq!(seq("RL").shift(2), seq("RL"));
    }

    #[test]
    fn maximality_spec_examples() {
        assert!(seq("RLRRRR").is_maximal());
        assert!(seq("RLLRLLRLL").is_maximal()); // reduces to (RLL)
        assert!(!seq("LR").is_maximal());
        assert!(seq("L").is_maximal());
        assert!(seq("R").is_maximal());
    }

    #[test]
    fn maximal_rotation_index_examples() {
        assert_eq!(seq("RLRRRR").maximal_rotation_index(), 0);
        // brute force: rotations of LRRRRR are maximal at shift 5, which is RLRRRR
        assert_eq!(seq("LRRRRR").maximal_rotation_index(), 5);
        assert_eq!(seq("LRRRRR").maximal_rotation(), seq("RLRRRR"));
        assert_eq!(seq("LLR").maximal_rotation_index(), 2);
    }

    #[test]
    fn mu_spec_examples() {
        assert_eq!(seq("RLRRRR").mu(), seq("RLRRRL"));
        assert_eq!(seq("RLLRLR").mu(), seq("RLL"));
        assert_eq!(seq("R").mu(), seq("L"));
    }

    #[test]
    fn nu_spec_examples() {
        assert_eq!(seq("RLRRRR").nu(), seq("RLRRRL"));
        assert_eq!(seq("RLLRLR").nu(), seq("RLRRLL"));
        assert_eq!(seq("R").nu(), seq("L"));
    }

    #[test]
    fn itinerary_cyclic_match() {
        let it: FiniteItinerary = "RLRRLL".parse().unwrap();
        assert!(it.matches_cyclically(&seq("RLRRLL")));
        assert!(!it.matches_cyclically(&seq("RLRRLR")));
        let with_c: FiniteItinerary = "RLC".parse().unwrap();
        assert!(!with_c.matches_cyclically(&seq("RL")));
    }
}
