//! Certificates. Set level: symmetric, complete, (l,1)-sum-free, and the
//! two hypotheses under which `Cay(Z_n, S)` is C_{l+1}-saturated without
//! building the graph. Graph level: regularity, C_k-freeness, and
//! C_k-saturation by direct search.
//!
//! The set-level and graph-level certificates are independent
//! implementations of the same conclusion; their agreement is itself a
//! tested invariant rather than an assumption.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{self, CayleyGraph};
use crate::residue::ResidueSet;
use crate::sumset::{self, fold_sumset, Ambient};

/// A concrete, independently re-checkable witness for a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    /// An element that should not be where it is (e.g. in `lS` and `S`).
    Element(u32),
    /// A residue that a covering check failed to reach.
    Missing(u32),
    /// A non-adjacent vertex pair with no saturating path.
    Pair(u32, u32),
    /// A forbidden cycle, as its vertex sequence.
    Cycle(Vec<u32>),
    /// A violated counting inequality, shown as `n > cap`.
    CountingBound { n: u32, cap: u128 },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Element(x) => write!(f, "element={x}"),
            Counterexample::Missing(x) => write!(f, "missing={x}"),
            Counterexample::Pair(u, v) => write!(f, "pair={u},{v}"),
            Counterexample::Cycle(vs) => {
                write!(f, "cycle=")?;
                for (i, v) in vs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}")?;
                }
                Ok(())
            }
            Counterexample::CountingBound { n, cap } => write!(f, "bound={n}>{cap}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
}

impl Check {
    fn pass(name: &'static str) -> Self {
        Check {
            name,
            passed: true,
            counterexample: None,
        }
    }

    fn fail(name: &'static str, cx: Counterexample) -> Self {
        Check {
            name,
            passed: false,
            counterexample: Some(cx),
        }
    }

    fn from_option(name: &'static str, cx: Option<Counterexample>) -> Self {
        match cx {
            None => Check::pass(name),
            Some(cx) => Check::fail(name, cx),
        }
    }
}

/// Structured pass/fail across a list of named checks. `overall` holds iff
/// every check passed; every failed check carries a counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn overall(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    fn merge(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(f, "check name={} pass={}", c.name, c.passed)?;
            if let Some(cx) = &c.counterexample {
                write!(f, " {cx}")?;
            }
            writeln!(f)?;
        }
        write!(f, "overall pass={}", self.overall())
    }
}

/// `C(a, b)` in u128, saturating on overflow.
pub fn binomial(a: u64, b: u64) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num: u128 = 1;
    for i in 0..b {
        num = num.saturating_mul(u128::from(a - i));
        num /= u128::from(i + 1);
    }
    num
}

/// The counting inequality `n <= C(size + l - 1, l) + size` every complete
/// (l,1)-sum-free set of the given size must satisfy: `lS` has at most
/// multiset-many elements, and together with `S` it must cover Z_n.
pub fn counting_bound_holds(n: u32, size: u64, ell: u32) -> bool {
    let cap = binomial(size + u64::from(ell) - 1, u64::from(ell)).saturating_add(u128::from(size));
    u128::from(n) <= cap
}

fn counting_cap(size: u64, ell: u32) -> u128 {
    binomial(size + u64::from(ell) - 1, u64::from(ell)).saturating_add(u128::from(size))
}

/// First element of `lS ∩ S`, or `None` when `S` is (l,1)-sum-free.
pub fn sum_free_violation(s: &ResidueSet, ell: u32) -> Result<Option<u32>> {
    let lsum = fold_sumset(s, ell, Ambient::Modular)?;
    Ok(lsum.first_common(s))
}

/// True iff `lS ∩ S = ∅`.
pub fn is_sum_free(s: &ResidueSet, ell: u32) -> Result<bool> {
    Ok(sum_free_violation(s, ell)?.is_none())
}

/// First residue missing from `lS ∪ S`, or `None` when `S` is complete.
pub fn completeness_gap(s: &ResidueSet, ell: u32) -> Result<Option<u32>> {
    let lsum = fold_sumset(s, ell, Ambient::Modular)?;
    Ok(lsum.first_uncovered_with(s))
}

/// True iff `lS ∪ S = Z_n`.
pub fn is_complete(s: &ResidueSet, ell: u32) -> Result<bool> {
    Ok(completeness_gap(s, ell)?.is_none())
}

/// The full set-level certificate: symmetric, (l,1)-sum-free, complete,
/// plus the counting-bound sanity check.
pub fn certify_symmetric_complete_sumfree(s: &ResidueSet, ell: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    report.push(Check::from_option(
        "symmetric",
        s.first_asymmetric().map(Counterexample::Element),
    ));
    report.push(Check::from_option(
        "sum_free",
        sum_free_violation(s, ell)?.map(Counterexample::Element),
    ));
    report.push(Check::from_option(
        "complete",
        completeness_gap(s, ell)?.map(Counterexample::Missing),
    ));
    let n = s.modulus().n();
    let size = s.len() as u64;
    report.push(if counting_bound_holds(n, size, ell) {
        Check::pass("counting_bound")
    } else {
        Check::fail(
            "counting_bound",
            Counterexample::CountingBound {
                n,
                cap: counting_cap(size, ell),
            },
        )
    });
    Ok(report)
}

/// True iff `0 ∉ (l+1)S`. Requires a symmetric input, for which the direct
/// computation agrees with the shortcut `0 ∈ (l+1)S ⟺ lS ∩ S ≠ ∅`; both
/// routes are evaluated and must coincide.
pub fn check_no_zero_in_ell_plus_one(s: &ResidueSet, ell: u32) -> Result<bool> {
    if let Some(x) = s.first_asymmetric() {
        return Err(Error::SymmetryRequired { value: x });
    }
    let direct = !fold_sumset(s, ell + 1, Ambient::Modular)?.contains(0);
    let shortcut = sum_free_violation(s, ell)?.is_none();
    assert_eq!(
        direct, shortcut,
        "direct (l+1)-fold route and symmetric shortcut disagree"
    );
    Ok(direct)
}

/// The two hypotheses under which `Cay(Z_n, S)` is an `|S|`-regular
/// C_{l+1}-saturated graph: `R_l(S) = Z_n \ (S ∪ {0})` and `0 ∉ (l+1)S`,
/// together with symmetry of `S`.
///
/// The restricted-sumset equality is decided per target: every residue
/// outside `S ∪ {0}` needs a witness path, and every element of `lS ∩ S`
/// must be shown unreachable (elements of `S` outside `lS` cannot be in
/// `R_l(S)` at all, since `R_l(S) ⊆ lS`).
pub fn certify_proposition(s: &ResidueSet, ell: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    report.push(Check::from_option(
        "symmetric",
        s.first_asymmetric().map(Counterexample::Element),
    ));
    report.push(Check::from_option(
        "zero_absent",
        if s.contains(0) {
            Some(Counterexample::Element(0))
        } else {
            None
        },
    ));

    if s.contains(0) {
        // R_l(S) is undefined with 0 in S; the certificate already failed
        report.push(Check::fail(
            "restricted_complement",
            Counterexample::Element(0),
        ));
    } else {
        report.push(Check::from_option(
            "restricted_complement",
            restricted_complement_violation(s, ell)?,
        ));
    }

    // Direct route needs no symmetry; evaluated on all inputs.
    let zero_free = !fold_sumset(s, ell + 1, Ambient::Modular)?.contains(0);
    if s.is_symmetric() && !s.contains(0) {
        let shortcut = sum_free_violation(s, ell)?.is_none();
        assert_eq!(zero_free, shortcut, "(l+1)-fold routes disagree");
    }
    report.push(Check::from_option(
        "no_zero_in_ell_plus_one",
        if zero_free {
            None
        } else {
            Some(Counterexample::Element(0))
        },
    ));
    Ok(report)
}

fn restricted_complement_violation(s: &ResidueSet, ell: u32) -> Result<Option<Counterexample>> {
    let n = s.modulus().n();
    let reach = sumset::reachability_sets(s, ell.saturating_sub(1));
    let lsum = if ell >= 1 {
        fold_sumset(s, ell, Ambient::Modular)?
    } else {
        ResidueSet::empty(s.modulus())
    };
    // For symmetric S, negating a witness for x gives one for -x, so each
    // pair {x, n-x} is decided together: probe whichever side exhausts its
    // search tree first, escalating the node cap until one does.
    let symmetric = s.is_symmetric();
    let mut decided = vec![false; n as usize];
    for x in 0..n {
        if x == 0 || decided[x as usize] {
            continue; // 0 is never in R_l(S): the total sum is a subsum
        }
        let mirror = s.modulus().negate(x);
        let audit = |target: u32, w: &[u32]| {
            assert!(
                sumset::check_subsum_witness(s, ell, target, w),
                "witness search returned an invalid witness for {target}"
            );
        };
        if s.contains(x) {
            // R_l(S) ⊆ lS, so only elements of lS ∩ S can possibly intrude
            if lsum.contains(x) {
                match sumset::probe_witness(s, &reach, ell, x, u64::MAX)? {
                    sumset::WitnessProbe::Found(w) => {
                        audit(x, &w);
                        return Ok(Some(Counterexample::Element(x)));
                    }
                    sumset::WitnessProbe::Absent => {}
                    sumset::WitnessProbe::Capped => unreachable!(),
                }
            }
            decided[x as usize] = true;
            continue;
        }
        let found = if symmetric && mirror != x {
            let mut cap = 4096u64;
            loop {
                match sumset::probe_witness(s, &reach, ell, x, cap)? {
                    sumset::WitnessProbe::Found(w) => {
                        audit(x, &w);
                        break true;
                    }
                    sumset::WitnessProbe::Absent => break false,
                    sumset::WitnessProbe::Capped => {}
                }
                match sumset::probe_witness(s, &reach, ell, mirror, cap)? {
                    sumset::WitnessProbe::Found(w) => {
                        audit(mirror, &w);
                        break true;
                    }
                    sumset::WitnessProbe::Absent => break false,
                    sumset::WitnessProbe::Capped => {}
                }
                cap = cap.saturating_mul(16);
            }
        } else {
            match sumset::probe_witness(s, &reach, ell, x, u64::MAX)? {
                sumset::WitnessProbe::Found(w) => {
                    audit(x, &w);
                    true
                }
                sumset::WitnessProbe::Absent => false,
                sumset::WitnessProbe::Capped => unreachable!(),
            }
        };
        if !found {
            return Ok(Some(Counterexample::Missing(x)));
        }
        decided[x as usize] = true;
        if symmetric {
            decided[mirror as usize] = true;
        }
    }
    Ok(None)
}

/// Graph-level C_k-saturation: (a) no C_k, and (b) every non-adjacent pair
/// joined by a simple path of `k - 1` edges.
pub fn certify_cycle_saturated(g: &CayleyGraph, k: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    let cycle = graph::find_cycle_of_length(g, k)?;
    report.push(Check::from_option(
        "cycle_free",
        cycle.map(Counterexample::Cycle),
    ));
    if report.overall() {
        let pair = graph::first_unsaturated_pair(g, k)?;
        report.push(Check::from_option(
            "saturated",
            pair.map(|(u, v)| Counterexample::Pair(u, v)),
        ));
    } else {
        // a graph with a C_k cannot be C_k-saturated; no pair scan needed
        report.push(Check::fail(
            "saturated",
            report.checks[0].counterexample.clone().unwrap(),
        ));
    }
    Ok(report)
}

/// Full graph certificate: regularity plus C_k-freeness and C_k-saturation.
pub fn certify_graph(g: &CayleyGraph, k: u32) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    report.push(Check::from_option(
        "regular",
        graph::first_irregular_vertex(g).map(|(v, _)| Counterexample::Element(v)),
    ));
    report.merge(certify_cycle_saturated(g, k)?);
    Ok(report)
}
