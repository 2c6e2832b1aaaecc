//! l-fold sumsets in Z and Z_n, the restricted sumset R_l(S), and
//! independent brute-force oracles for both.
//!
//! The fast path computes sumsets as repeated shift-OR passes over bitsets.
//! The brute-force oracles enumerate multisets explicitly and exist to check
//! the fast path in tests.

use crate::error::{Error, Result};
use crate::residue::{IntSet, Modulus, ResidueSet};

/// Which arithmetic a sumset is computed in.
///
/// `Integers` is only meaningful when `fold * max(S) < n`, so that sums in Z
/// and in Z_n coincide; the functions below reject requests that would wrap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ambient {
    Modular,
    Integers,
}

/// The l-fold sumset `{ s_1 + ... + s_fold : s_i in base }`.
pub fn fold_sumset(base: &ResidueSet, fold: u32, ambient: Ambient) -> Result<ResidueSet> {
    if fold == 0 {
        return Err(Error::InvalidFold);
    }
    match ambient {
        Ambient::Modular => Ok(fold_sumset_modular(base, fold)),
        Ambient::Integers => {
            let n = base.modulus().n();
            if let Some(mx) = base.max() {
                let max_sum = u64::from(mx) * u64::from(fold);
                if max_sum >= u64::from(n) {
                    return Err(Error::AmbientOverflow { max_sum, n });
                }
            }
            let ints = fold_sumset_int(&base.to_int_set(), fold)?;
            let mut out = ResidueSet::empty(base.modulus());
            for x in ints.iter() {
                out.insert(x as u32);
            }
            Ok(out)
        }
    }
}

fn fold_sumset_modular(base: &ResidueSet, fold: u32) -> ResidueSet {
    let mut acc = base.clone();
    for _ in 1..fold {
        let mut next = ResidueSet::empty(base.modulus());
        for b in base.iter() {
            next.or_rotated_from(&acc, b);
        }
        acc = next;
    }
    acc
}

/// The l-fold sumset of a set of nonnegative integers, computed in Z.
pub fn fold_sumset_int(base: &IntSet, fold: u32) -> Result<IntSet> {
    if fold == 0 {
        return Err(Error::InvalidFold);
    }
    let mut acc = base.clone();
    for _ in 1..fold {
        let mut next = IntSet::new();
        for b in base.iter() {
            next.or_shifted_from(&acc, b);
        }
        acc = next;
    }
    Ok(acc)
}

const ORACLE_MULTISET_LIMIT: u128 = 5_000_000;

fn oracle_guard(size: usize, fold: u32) -> Result<()> {
    if size > 64 || fold > 8 || multiset_count(size as u64, fold) > ORACLE_MULTISET_LIMIT {
        return Err(Error::OracleTooLarge { size, fold });
    }
    Ok(())
}

/// `C(size + fold - 1, fold)`: multisets of cardinality `fold`.
fn multiset_count(size: u64, fold: u32) -> u128 {
    crate::verify::binomial(size + u64::from(fold) - 1, u64::from(fold))
}

/// Independent oracle for `fold_sumset`: explicit enumeration of all
/// multisets of size `fold`. Test use only; guarded against blowup.
pub fn brute_force_sumset(base: &ResidueSet, fold: u32, ambient: Ambient) -> Result<ResidueSet> {
    if fold == 0 {
        return Err(Error::InvalidFold);
    }
    oracle_guard(base.len(), fold)?;
    if let (Ambient::Integers, Some(mx)) = (ambient, base.max()) {
        let max_sum = u64::from(mx) * u64::from(fold);
        if max_sum >= u64::from(base.modulus().n()) {
            return Err(Error::AmbientOverflow {
                max_sum,
                n: base.modulus().n(),
            });
        }
    }
    let members = base.members();
    let mut out = ResidueSet::empty(base.modulus());
    let modulus = base.modulus();
    enumerate_multisets_u32(&members, fold, 0, 0, &mut |sum| {
        out.insert(modulus.reduce(sum));
    });
    Ok(out)
}

/// Integer-ambient counterpart of `brute_force_sumset`.
pub fn brute_force_sumset_int(base: &IntSet, fold: u32) -> Result<IntSet> {
    if fold == 0 {
        return Err(Error::InvalidFold);
    }
    oracle_guard(base.len(), fold)?;
    let members = base.members();
    let mut out = IntSet::new();
    enumerate_multisets(&members, fold, 0, 0, &mut |sum| {
        out.insert(sum);
    });
    Ok(out)
}

fn enumerate_multisets(members: &[u64], remaining: u32, start: usize, sum: u64, f: &mut impl FnMut(u64)) {
    if remaining == 0 {
        f(sum);
        return;
    }
    for (i, &m) in members.iter().enumerate().skip(start) {
        enumerate_multisets(members, remaining - 1, i, sum + m, f);
    }
}

fn enumerate_multisets_u32(members: &[u32], remaining: u32, start: usize, sum: u64, f: &mut impl FnMut(u64)) {
    if remaining == 0 {
        f(sum);
        return;
    }
    for (i, &m) in members.iter().enumerate().skip(start) {
        enumerate_multisets_u32(members, remaining - 1, i, sum + u64::from(m), f);
    }
}

// ============================================================================
// Restricted sumset R_l(S)
// ============================================================================
//
// x is in R_l(S) iff some walk 0 -> x of length l in Cay(Z_n, S) has pairwise
// distinct prefix sums P_0 = 0, P_1, ..., P_l = x: a consecutive subsum
// s_i + ... + s_j equals P_j - P_{i-1}, so the "no zero consecutive subsum"
// condition is exactly prefix-sum distinctness once 0 is excluded from S.

struct RestrictedDfs<'a> {
    members: Vec<u32>,
    modulus: Modulus,
    on_path: Vec<bool>,
    path: Vec<u32>,
    out: &'a mut ResidueSet,
}

impl<'a> RestrictedDfs<'a> {
    fn new(s: &ResidueSet, out: &'a mut ResidueSet) -> Result<Self> {
        if s.contains(0) {
            return Err(Error::ZeroInSet);
        }
        let n = s.modulus().n() as usize;
        let mut on_path = vec![false; n];
        on_path[0] = true;
        Ok(RestrictedDfs {
            members: s.members(),
            modulus: s.modulus(),
            on_path,
            path: vec![0],
            out,
        })
    }

    fn run(&mut self, depth: u32) {
        let cur = *self.path.last().unwrap();
        if depth == 0 {
            self.out.insert(cur);
            return;
        }
        for i in 0..self.members.len() {
            let s = self.members[i];
            let next = self.modulus.add(cur, s);
            if self.on_path[next as usize] {
                continue;
            }
            self.on_path[next as usize] = true;
            self.path.push(next);
            self.run(depth - 1);
            self.path.pop();
            self.on_path[next as usize] = false;
        }
    }
}

/// The restricted sumset `R_l(S)`: sums of `fold` members with no consecutive
/// subsum congruent to 0 mod n. Requires `0 not in S`.
///
/// Computed by depth-limited search over simple paths from 0 in Cay(Z_n, S);
/// cost grows like `|S|^fold`, which is fine at desk scale.
pub fn restricted_sumset(s: &ResidueSet, fold: u32) -> Result<ResidueSet> {
    if fold == 0 {
        return Err(Error::InvalidFold);
    }
    let mut out = ResidueSet::empty(s.modulus());
    let mut dfs = RestrictedDfs::new(s, &mut out)?;
    dfs.run(fold);
    Ok(out)
}

/// Outcome of a capped witness probe.
pub enum WitnessProbe {
    Found(Vec<u32>),
    Absent,
    /// The node cap was hit before the search tree was exhausted.
    Capped,
}

/// Unrestricted fold sumsets `1S, 2S, ..., max_fold * S`, used as admissible
/// reachability bounds during witness search: a partial sum `P` with `r`
/// steps left can only reach `target` if `target - P` lies in `rS`.
pub fn reachability_sets(s: &ResidueSet, max_fold: u32) -> Vec<ResidueSet> {
    let mut reach = Vec::with_capacity(max_fold as usize);
    if max_fold == 0 {
        return reach;
    }
    reach.push(s.clone());
    for _ in 1..max_fold {
        let mut next = ResidueSet::empty(s.modulus());
        for b in s.iter() {
            next.or_rotated_from(reach.last().unwrap(), b);
        }
        reach.push(next);
    }
    reach
}

struct WitnessDfs<'a> {
    set: &'a ResidueSet,
    members: &'a [u32],
    reach: &'a [ResidueSet],
    modulus: Modulus,
    target: u32,
    on_path: Vec<bool>,
    steps: Vec<u32>,
    nodes: u64,
    cap: u64,
    capped: bool,
}

impl WitnessDfs<'_> {
    fn run(&mut self, cur: u32, remaining: u32) -> bool {
        self.nodes += 1;
        if self.nodes > self.cap {
            self.capped = true;
            return false;
        }
        if remaining == 1 {
            // last step is a direct membership test
            let need = self.modulus.sub(self.target, cur);
            if self.set.contains(need) && !self.on_path[self.target as usize] {
                self.steps.push(need);
                return true;
            }
            return false;
        }
        for &s in self.members {
            let next = self.modulus.add(cur, s);
            if self.on_path[next as usize] || next == self.target {
                // entering the target early would force a revisit at the end
                continue;
            }
            let gap = self.modulus.sub(self.target, next);
            if !self.reach[(remaining - 2) as usize].contains(gap) {
                continue;
            }
            self.on_path[next as usize] = true;
            self.steps.push(s);
            if self.run(next, remaining - 1) {
                return true;
            }
            self.steps.pop();
            self.on_path[next as usize] = false;
            if self.capped {
                return false;
            }
        }
        false
    }
}

/// Capped witness search with precomputed reachability sets (`reach[r-1]`
/// must be the r-fold sumset of `s`, for r up to `fold - 1`).
pub fn probe_witness(
    s: &ResidueSet,
    reach: &[ResidueSet],
    fold: u32,
    target: u32,
    cap: u64,
) -> Result<WitnessProbe> {
    if fold == 0 {
        return Err(Error::InvalidFold);
    }
    if s.contains(0) {
        return Err(Error::ZeroInSet);
    }
    if fold == 1 {
        return Ok(if s.contains(target) && target != 0 {
            WitnessProbe::Found(vec![target])
        } else {
            WitnessProbe::Absent
        });
    }
    debug_assert!(reach.len() as u32 >= fold - 1);
    let members = s.members();
    let n = s.modulus().n() as usize;
    let mut on_path = vec![false; n];
    on_path[0] = true;
    let mut dfs = WitnessDfs {
        set: s,
        members: &members,
        reach,
        modulus: s.modulus(),
        target,
        on_path,
        steps: Vec::new(),
        nodes: 0,
        cap,
        capped: false,
    };
    if dfs.run(0, fold) {
        Ok(WitnessProbe::Found(dfs.steps))
    } else if dfs.capped {
        Ok(WitnessProbe::Capped)
    } else {
        Ok(WitnessProbe::Absent)
    }
}

/// An explicit sequence `s_1, ..., s_fold` summing to `target` with no zero
/// consecutive subsum, or `None` when `target` is not in `R_l(S)`.
///
/// Deterministic; the result is independently re-checkable with
/// [`check_subsum_witness`].
pub fn subsum_check_witness(s: &ResidueSet, fold: u32, target: u32) -> Result<Option<Vec<u32>>> {
    if fold == 0 {
        return Err(Error::InvalidFold);
    }
    let reach = reachability_sets(s, fold.saturating_sub(1));
    match probe_witness(s, &reach, fold, target, u64::MAX)? {
        WitnessProbe::Found(w) => Ok(Some(w)),
        WitnessProbe::Absent => Ok(None),
        WitnessProbe::Capped => unreachable!("uncapped search cannot be capped"),
    }
}

/// Membership test for `R_l(S)` with early exit.
pub fn has_restricted_witness(s: &ResidueSet, fold: u32, target: u32) -> Result<bool> {
    Ok(subsum_check_witness(s, fold, target)?.is_some())
}

/// Independent O(l^2) re-check of a subsum witness: every term is in `s`,
/// the total is `target`, and s_i + ... + s_j is nonzero mod n for all
/// 1 <= i < j <= l. Deliberately avoids the prefix-sum reformulation.
pub fn check_subsum_witness(s: &ResidueSet, fold: u32, target: u32, witness: &[u32]) -> bool {
    if witness.len() != fold as usize {
        return false;
    }
    if !witness.iter().all(|&w| s.contains(w)) {
        return false;
    }
    let m = s.modulus();
    let total = witness
        .iter()
        .fold(0u32, |acc, &w| m.add(acc, w));
    if total != target {
        return false;
    }
    for i in 0..witness.len() {
        let mut sum = witness[i];
        for j in i + 1..witness.len() {
            sum = m.add(sum, witness[j]);
            if sum == 0 {
                return false;
            }
        }
    }
    true
}
