//! Arithmetic over Z_n and the canonical set representations: residue sets
//! backed by bitsets, intervals of fixed parity, and integer sets for
//! computations that take place in Z rather than Z_n.
//!
//! Elements of Z_n are always the least residues `0..n`. Sets never store a
//! bit at or above `n`.

use std::fmt;

use crate::error::{Error, Result};

/// Group order of Z_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus(u32);

impl Modulus {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "modulus must be positive");
        Modulus(n)
    }

    #[inline]
    pub fn n(self) -> u32 {
        self.0
    }

    /// Least residue of `x`.
    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % u64::from(self.0)) as u32
    }

    /// Least residue of a signed value.
    #[inline]
    pub fn reduce_signed(self, x: i64) -> u32 {
        x.rem_euclid(i64::from(self.0)) as u32
    }

    /// (n - x) mod n for a least residue x.
    #[inline]
    pub fn negate(self, x: u32) -> u32 {
        debug_assert!(x < self.0);
        if x == 0 {
            0
        } else {
            self.0 - x
        }
    }

    /// (a + b) mod n for least residues a, b.
    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.0 && b < self.0);
        let s = a as u64 + b as u64;
        if s >= u64::from(self.0) {
            (s - u64::from(self.0)) as u32
        } else {
            s as u32
        }
    }

    /// (a - b) mod n for least residues a, b.
    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.0 && b < self.0);
        if a >= b {
            a - b
        } else {
            self.0 - b + a
        }
    }
}

#[inline]
fn word_count(n: u32) -> usize {
    ((n as usize) + 63) / 64
}

/// Mask with the low `k` bits set, `0 < k <= 64`.
#[inline]
fn low_mask(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// OR bits `[lo, hi)` of `src` into `dst` starting at bit position `dst_lo`.
/// The source and destination ranges must both be in bounds.
fn or_bit_range(dst: &mut [u64], src: &[u64], lo: u32, hi: u32, dst_lo: u32) {
    let mut bit = lo;
    let mut out = dst_lo;
    while bit < hi {
        let w = (bit / 64) as usize;
        let off = bit % 64;
        let take = (64 - off).min(hi - bit);
        let chunk = (src[w] >> off) & low_mask(take);
        let tw = (out / 64) as usize;
        let toff = out % 64;
        dst[tw] |= chunk << toff;
        if toff + take > 64 {
            dst[tw + 1] |= chunk >> (64 - toff);
        }
        bit += take;
        out += take;
    }
}

// ============================================================================
// ResidueSet
// ============================================================================

/// A subset of Z_n with O(1) membership, stored as a bitset over `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: Modulus,
    words: Vec<u64>,
}

impl ResidueSet {
    pub fn empty(modulus: Modulus) -> Self {
        ResidueSet {
            modulus,
            words: vec![0; word_count(modulus.n())],
        }
    }

    /// The full set `{0, 1, ..., n-1}`.
    pub fn full(modulus: Modulus) -> Self {
        let n = modulus.n();
        let mut words = vec![u64::MAX; word_count(n)];
        let tail = n % 64;
        if tail != 0 {
            *words.last_mut().unwrap() = low_mask(tail);
        }
        ResidueSet { modulus, words }
    }

    pub fn from_members<I: IntoIterator<Item = u32>>(modulus: Modulus, members: I) -> Result<Self> {
        let mut set = ResidueSet::empty(modulus);
        for m in members {
            if m >= modulus.n() {
                return Err(Error::ResidueOutOfRange {
                    value: m,
                    n: modulus.n(),
                });
            }
            set.insert(m);
        }
        Ok(set)
    }

    #[inline]
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    #[inline]
    pub fn insert(&mut self, x: u32) {
        debug_assert!(x < self.modulus.n());
        self.words[(x / 64) as usize] |= 1u64 << (x % 64);
    }

    #[inline]
    pub fn remove(&mut self, x: u32) {
        debug_assert!(x < self.modulus.n());
        self.words[(x / 64) as usize] &= !(1u64 << (x % 64));
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        x < self.modulus.n() && (self.words[(x / 64) as usize] >> (x % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    /// Ascending iterator over members.
    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = (i as u32) * 64;
            BitIter { word: w, base }
        })
    }

    pub fn members(&self) -> Vec<u32> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<u32> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some((i as u32) * 64 + 63 - w.leading_zeros());
            }
        }
        None
    }

    /// Overwrites this set with the bits of `src` without reallocating.
    #[inline]
    pub fn copy_from(&mut self, src: &ResidueSet) {
        debug_assert_eq!(self.modulus, src.modulus);
        self.words.copy_from_slice(&src.words);
    }

    #[inline]
    pub fn union_with(&mut self, other: &ResidueSet) {
        debug_assert_eq!(self.modulus, other.modulus);
        for (d, s) in self.words.iter_mut().zip(&other.words) {
            *d |= s;
        }
    }

    pub fn intersection(&self, other: &ResidueSet) -> ResidueSet {
        debug_assert_eq!(self.modulus, other.modulus);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        ResidueSet {
            modulus: self.modulus,
            words,
        }
    }

    pub fn intersects(&self, other: &ResidueSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Smallest element of `self & other`, if any.
    pub fn first_common(&self, other: &ResidueSet) -> Option<u32> {
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let w = a & b;
            if w != 0 {
                return Some((i as u32) * 64 + w.trailing_zeros());
            }
        }
        None
    }

    /// Smallest residue not covered by `self | other`, if any.
    pub fn first_uncovered_with(&self, other: &ResidueSet) -> Option<u32> {
        let full = ResidueSet::full(self.modulus);
        for (i, ((a, b), f)) in self
            .words
            .iter()
            .zip(&other.words)
            .zip(&full.words)
            .enumerate()
        {
            let w = !(a | b) & f;
            if w != 0 {
                return Some((i as u32) * 64 + w.trailing_zeros());
            }
        }
        None
    }

    pub fn complement(&self) -> ResidueSet {
        let full = ResidueSet::full(self.modulus);
        let words = self
            .words
            .iter()
            .zip(&full.words)
            .map(|(a, f)| !a & f)
            .collect();
        ResidueSet {
            modulus: self.modulus,
            words,
        }
    }

    /// `self |= { (x + shift) mod n : x in src }`.
    ///
    /// This is the workhorse of sumset computation: a pairwise sumset A + B is
    /// a sequence of these, one per member of B.
    pub fn or_rotated_from(&mut self, src: &ResidueSet, shift: u32) {
        debug_assert_eq!(self.modulus, src.modulus);
        let n = self.modulus.n();
        debug_assert!(shift < n);
        if shift == 0 {
            self.union_with(src);
            return;
        }
        // bits [0, n-shift) move up to [shift, n)
        or_bit_range(&mut self.words, &src.words, 0, n - shift, shift);
        // bits [n-shift, n) wrap to [0, shift)
        or_bit_range(&mut self.words, &src.words, n - shift, n, 0);
    }

    /// `{ (n - x) mod n : x in self }`.
    pub fn negated(&self) -> ResidueSet {
        let mut out = ResidueSet::empty(self.modulus);
        for x in self.iter() {
            out.insert(self.modulus.negate(x));
        }
        out
    }

    /// True iff the set is closed under negation mod n.
    pub fn is_symmetric(&self) -> bool {
        self.first_asymmetric().is_none()
    }

    /// Smallest member whose negation is missing, if any.
    pub fn first_asymmetric(&self) -> Option<u32> {
        self.iter()
            .find(|&x| !self.contains(self.modulus.negate(x)))
    }

    /// Lift the least residues into Z.
    pub fn to_int_set(&self) -> IntSet {
        let mut out = IntSet::new();
        for x in self.iter() {
            out.insert(u64::from(x));
        }
        out
    }
}

impl fmt::Display for ResidueSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

struct BitIter {
    word: u64,
    base: u32,
}

impl Iterator for BitIter {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(self.base + tz)
    }
}

// ============================================================================
// ParityInterval
// ============================================================================

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    #[inline]
    pub fn of(x: u64) -> Parity {
        if x % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    #[inline]
    pub fn matches(self, x: u64) -> bool {
        Parity::of(x) == self
    }
}

/// `{lo, lo+2, ..., hi}` with `lo` and `hi` of the stated parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityInterval {
    lo: u64,
    hi: u64,
    parity: Parity,
}

impl ParityInterval {
    pub fn new(lo: u64, hi: u64, parity: Parity) -> Self {
        assert!(lo <= hi, "interval endpoints out of order: [{lo},{hi}]");
        assert!(
            parity.matches(lo) && parity.matches(hi),
            "interval endpoints [{lo},{hi}] must both have the declared parity"
        );
        ParityInterval { lo, hi, parity }
    }

    pub fn even(lo: u64, hi: u64) -> Self {
        Self::new(lo, hi, Parity::Even)
    }

    pub fn odd(lo: u64, hi: u64) -> Self {
        Self::new(lo, hi, Parity::Odd)
    }

    pub fn singleton(x: u64) -> Self {
        Self::new(x, x, Parity::of(x))
    }

    #[inline]
    pub fn lo(&self) -> u64 {
        self.lo
    }

    #[inline]
    pub fn hi(&self) -> u64 {
        self.hi
    }

    #[inline]
    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `(hi - lo)/2 + 1`.
    pub fn cardinality(&self) -> u64 {
        (self.hi - self.lo) / 2 + 1
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> {
        (self.lo..=self.hi).step_by(2)
    }

    pub fn contains(&self, x: u64) -> bool {
        x >= self.lo && x <= self.hi && self.parity.matches(x)
    }

    pub fn to_int_set(&self) -> IntSet {
        let mut out = IntSet::new();
        for x in self.iter() {
            out.insert(x);
        }
        out
    }
}

impl fmt::Display for ParityInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.parity {
            Parity::Even => "e",
            Parity::Odd => "o",
        };
        write!(f, "[{},{}]_{}", self.lo, self.hi, tag)
    }
}

/// The arithmetic progression of an interval as a subset of Z_n.
///
/// The interval must already lie inside `0..n`; wraparound is expressed by
/// the caller as a union of two intervals.
pub fn interval_to_set(iv: ParityInterval, m: Modulus) -> Result<ResidueSet> {
    if iv.hi >= u64::from(m.n()) {
        return Err(Error::IntervalOutOfBounds {
            lo: iv.lo as i64,
            hi: iv.hi as i64,
            n: m.n(),
        });
    }
    let mut out = ResidueSet::empty(m);
    for x in iv.iter() {
        out.insert(x as u32);
    }
    Ok(out)
}

/// `{ (n - x) mod n : x in s }`.
pub fn negate_set(s: &ResidueSet) -> ResidueSet {
    s.negated()
}

// ============================================================================
// IntSet
// ============================================================================

/// A finite set of nonnegative integers, stored as a growable bitset.
///
/// Used when a computation lives in Z rather than Z_n (the key lemma and
/// everything downstream of it).
#[derive(Debug, Clone, Default)]
pub struct IntSet {
    words: Vec<u64>,
}

impl IntSet {
    pub fn new() -> Self {
        IntSet { words: Vec::new() }
    }

    fn grow_for(&mut self, bit: u64) {
        let need = (bit / 64 + 1) as usize;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
    }

    pub fn insert(&mut self, x: u64) {
        self.grow_for(x);
        self.words[(x / 64) as usize] |= 1u64 << (x % 64);
    }

    pub fn contains(&self, x: u64) -> bool {
        let w = (x / 64) as usize;
        w < self.words.len() && (self.words[w] >> (x % 64)) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let base = (i as u64) * 64;
            IntBitIter { word: w, base }
        })
    }

    pub fn members(&self) -> Vec<u64> {
        self.iter().collect()
    }

    pub fn min(&self) -> Option<u64> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<u64> {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return Some((i as u64) * 64 + 63 - u64::from(w.leading_zeros()));
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &IntSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (d, s) in self.words.iter_mut().zip(&other.words) {
            *d |= s;
        }
    }

    pub fn remove_all(&mut self, other: &IntSet) {
        for (d, s) in self.words.iter_mut().zip(&other.words) {
            *d &= !s;
        }
    }

    /// `self |= { x + shift : x in src }`.
    pub fn or_shifted_from(&mut self, src: &IntSet, shift: u64) {
        if let Some(mx) = src.max() {
            self.grow_for(mx + shift);
            let hi = mx + 1;
            // reuse the residue-set range primitive; all bounds are in range
            or_bit_range_u64(&mut self.words, &src.words, 0, hi, shift);
        }
    }
}

/// 64-bit-indexed variant of `or_bit_range` for IntSet.
fn or_bit_range_u64(dst: &mut [u64], src: &[u64], lo: u64, hi: u64, dst_lo: u64) {
    let mut bit = lo;
    let mut out = dst_lo;
    while bit < hi {
        let w = (bit / 64) as usize;
        let off = (bit % 64) as u32;
        let take = u64::from(64 - off).min(hi - bit) as u32;
        let chunk = (src[w] >> off) & low_mask(take);
        let tw = (out / 64) as usize;
        let toff = (out % 64) as u32;
        dst[tw] |= chunk << toff;
        if toff + take > 64 {
            dst[tw + 1] |= chunk >> (64 - toff);
        }
        bit += u64::from(take);
        out += u64::from(take);
    }
}

impl PartialEq for IntSet {
    fn eq(&self, other: &Self) -> bool {
        let common = self.words.len().min(other.words.len());
        if self.words[..common] != other.words[..common] {
            return false;
        }
        self.words[common..].iter().all(|&w| w == 0)
            && other.words[common..].iter().all(|&w| w == 0)
    }
}

impl Eq for IntSet {}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

struct IntBitIter {
    word: u64,
    base: u64,
}

impl Iterator for IntBitIter {
    type Item = u64;

    #[inline]
    fn next(&mut self) -> Option<u64> {
        if self.word == 0 {
            return None;
        }
        let tz = self.word.trailing_zeros();
        self.word &= self.word - 1;
        Some(self.base + u64::from(tz))
    }
}
