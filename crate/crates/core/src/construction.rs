//! The explicit construction: derive `(r, t, gamma, j, k, alpha, M)` from
//! `(l, n)`, build `S+ = I1 u I2 u I3` and `S = S+ u S-`, and evaluate the
//! key lemma's closed-form sumset.
//!
//! For odd group orders the construction yields a symmetric complete
//! (l,1)-sum-free set; even orders are served by the balanced complete
//! bipartite graph instead.

use crate::error::{Error, Result};
use crate::graph::CayleyGraph;
use crate::residue::{interval_to_set, IntSet, Modulus, ParityInterval, ResidueSet};

/// Everything the construction derives from `(l, n)`.
///
/// The fields satisfy, by construction:
/// - `n = (2l+2)k + r` with `r` odd in `{1, ..., 2l+1}`,
/// - `r = l + 3 - 4(t+2) + gamma(2l+2)` with `t` in `{1, ..., l+1}`,
/// - `j = 2*gamma + 1`, `alpha = k + gamma - 2t - 4`, `big_m = l(2k+j)`,
/// - `big_m = n - (2k + j - 2(2t+4) + 2)` (the lemma that places `l S+`
///   just below the negative copies of `I2` and `I3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConstructionParams {
    pub ell: u32,
    pub n: u32,
    pub r: u32,
    pub t: u32,
    pub gamma: i64,
    pub j: u64,
    pub k: u64,
    pub alpha: u64,
    /// `M = l(2k + j)`, the maximum of the l-fold sumset of `S+`.
    pub big_m: u64,
}

/// Smallest group order the strict derivation accepts for a given `l`
/// (exclusive): `12 l^2 + 36 l + 24`.
pub fn order_bound(ell: u32) -> u64 {
    let l = u64::from(ell);
    12 * l * l + 36 * l + 24
}

fn validate_ell(ell: u32) -> Result<()> {
    if ell % 2 == 1 {
        return Err(Error::OddEll { ell });
    }
    if ell < 4 {
        return Err(Error::EllTooSmall { ell });
    }
    Ok(())
}

impl ConstructionParams {
    /// Derivation under the theorem hypothesis `n > 12 l^2 + 36 l + 24`,
    /// which guarantees `k >= 6l + 12 >= 4t + 2l + 2|gamma| + 2`.
    pub fn derive(ell: u32, n: u32) -> Result<Self> {
        validate_ell(ell)?;
        let bound = order_bound(ell);
        if n % 2 == 0 || u64::from(n) <= bound {
            return Err(Error::OutOfRange { n, bound });
        }
        let params = Self::solve(ell, n)?;
        debug_assert!(params.k >= params.min_k());
        Ok(params)
    }

    /// Derivation under the weaker hypothesis `k >= 4t + 2l + 2|gamma| + 2`,
    /// which admits smaller odd orders.
    pub fn derive_forced(ell: u32, n: u32) -> Result<Self> {
        validate_ell(ell)?;
        if n % 2 == 0 {
            return Err(Error::OutOfRange {
                n,
                bound: order_bound(ell),
            });
        }
        Self::solve(ell, n)
    }

    fn solve(ell: u32, n: u32) -> Result<Self> {
        let period = i64::from(2 * ell + 2);
        let r = i64::from(n) % period;
        debug_assert!(r % 2 == 1, "odd n has odd residue mod the even period");

        // Unique t in {1, ..., l+1} with l + 3 - 4(t+2) = r (mod 2l+2).
        // The scan doubles as the uniqueness assertion behind the derivation.
        let raw = |t: i64| i64::from(ell) + 3 - 4 * (t + 2);
        let hits: Vec<i64> = (1..=i64::from(ell) + 1)
            .filter(|&t| raw(t).rem_euclid(period) == r)
            .collect();
        assert_eq!(
            hits.len(),
            1,
            "residue map t -> l+3-4(t+2) must hit r = {r} exactly once for l = {ell}"
        );
        let t = hits[0];

        let diff = r - raw(t);
        assert_eq!(diff % period, 0);
        let gamma = diff / period;
        let j = 2 * gamma + 1;
        assert!(j >= 1, "gamma is never negative for l >= 4");
        assert!(gamma < 4, "gamma < 4 for all t <= l+1");

        let k = (i64::from(n) - r) / period;
        let min_k = 4 * t + 2 * i64::from(ell) + 2 * gamma.abs() + 2;
        if k < min_k {
            return Err(Error::KTooSmall {
                k: k.max(0) as u64,
                min_k: min_k as u64,
            });
        }

        // the k hypothesis puts alpha at or above the key-lemma threshold
        let alpha = k + gamma - 2 * t - 4;
        assert!(alpha >= 2 * t + 2 * i64::from(ell) - 2);
        let big_m = i64::from(ell) * (2 * k + j);

        // l(2k+j) = n - (2k + j - 2(2t+4) + 2), by direct computation
        assert_eq!(big_m, i64::from(n) - (2 * k + j - 2 * (2 * t + 4) + 2));
        assert!(big_m < i64::from(n));

        Ok(ConstructionParams {
            ell,
            n,
            r: r as u32,
            t: t as u32,
            gamma,
            j: j as u64,
            k: k as u64,
            alpha: alpha as u64,
            big_m: big_m as u64,
        })
    }

    /// `4t + 2l + 2|gamma| + 2`, the hypothesis on `k`.
    pub fn min_k(&self) -> u64 {
        4 * u64::from(self.t) + 2 * u64::from(self.ell) + 2 * self.gamma.unsigned_abs() + 2
    }

    pub fn modulus(&self) -> Modulus {
        Modulus::new(self.n)
    }

    /// `|S+| = k + gamma - t - 1`.
    pub fn splus_size(&self) -> u64 {
        (self.k as i64 + self.gamma - i64::from(self.t) - 1) as u64
    }
}

/// Convenience wrapper matching the operation name used throughout.
pub fn derive_params(ell: u32, n: u32) -> Result<ConstructionParams> {
    ConstructionParams::derive(ell, n)
}

/// The three interval pieces of `S+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SPlusParts {
    pub i1: ParityInterval,
    pub i2: ParityInterval,
    pub i3: ParityInterval,
}

impl SPlusParts {
    /// `I1 = odds 1..2a+1`, `I2 = odds 2a+5..2a+5+2t`, `I3 = {2a+4t+9}`,
    /// as subsets of Z. Requires `t >= 1`.
    pub fn from_alpha_t(alpha: u64, t: u32) -> Self {
        assert!(t >= 1);
        let t = u64::from(t);
        let i1 = ParityInterval::odd(1, 2 * alpha + 1);
        let i2 = ParityInterval::odd(2 * alpha + 5, 2 * alpha + 5 + 2 * t);
        let i3 = ParityInterval::singleton(2 * alpha + 4 * t + 9);
        debug_assert!(i1.hi() < i2.lo() && i2.hi() < i3.lo());
        SPlusParts { i1, i2, i3 }
    }

    pub fn to_int_set(&self) -> IntSet {
        let mut out = self.i1.to_int_set();
        out.union_with(&self.i2.to_int_set());
        out.union_with(&self.i3.to_int_set());
        out
    }
}

/// The intervals of `S+` for derived parameters.
pub fn splus_parts(p: &ConstructionParams) -> SPlusParts {
    SPlusParts::from_alpha_t(p.alpha, p.t)
}

/// `S+ = I1 u I2 u I3` as least residues mod n.
pub fn build_splus(p: &ConstructionParams) -> ResidueSet {
    let parts = splus_parts(p);
    let m = p.modulus();
    let mut out = interval_to_set(parts.i1, m).expect("I1 fits below n");
    out.union_with(&interval_to_set(parts.i2, m).expect("I2 fits below n"));
    out.union_with(&interval_to_set(parts.i3, m).expect("I3 fits below n"));
    debug_assert_eq!(out.len() as u64, p.splus_size());
    debug_assert_eq!(u64::from(out.max().unwrap()), 2 * p.k + p.j);
    out
}

/// `S = S+ u S-`, the symmetric completion of `S+`.
pub fn build_full_set(p: &ConstructionParams) -> ResidueSet {
    let mut s = build_splus(p);
    s.union_with(&s.negated());
    debug_assert!(s.is_symmetric());
    debug_assert!(!s.contains(0));
    debug_assert_eq!(s.len() as u64, 2 * p.splus_size());
    s
}

/// The key lemma's closed form for `l S+` in Z:
/// `[l, M]_e \ ([M-2t-2, M-2]_e u {M-4t-6})` with `M = l(2a + 4t + 9)`.
///
/// Requires the lemma hypothesis `alpha >= 2t + 2l - 2`.
pub fn key_lemma_rhs(ell: u32, t: u32, alpha: u64) -> Result<IntSet> {
    validate_ell(ell)?;
    assert!(t >= 1);
    let min_alpha = 2 * u64::from(t) + 2 * u64::from(ell) - 2;
    if alpha < min_alpha {
        return Err(Error::KeyLemmaRange { alpha, min_alpha });
    }
    let l = u64::from(ell);
    let t = u64::from(t);
    let m = l * (2 * alpha + 4 * t + 9);
    let mut out = ParityInterval::even(l, m).to_int_set();
    out.remove_all(&ParityInterval::even(m - 2 * t - 2, m - 2).to_int_set());
    out.remove_all(&ParityInterval::singleton(m - 4 * t - 6).to_int_set());
    Ok(out)
}

/// The interval `J_{b1,b2,b3} = b1*I1 + b2*I2 + b3*I3` in closed form:
/// `[M - b1(2a+4t+8) - b2(4t+4), M - b1(4t+8) - b2(2t+4)]_e`.
///
/// The union over all compositions of `l` equals `l S+`.
pub fn j_interval(beta: (u32, u32, u32), ell: u32, t: u32, alpha: u64) -> Result<ParityInterval> {
    validate_ell(ell)?;
    assert!(t >= 1);
    let (b1, b2, b3) = beta;
    if b1 + b2 + b3 != ell {
        return Err(Error::InvalidComposition {
            b1,
            b2,
            b3,
            ell,
        });
    }
    let l = i64::from(ell);
    let t = i64::from(t);
    let a = alpha as i64;
    let m = l * (2 * a + 4 * t + 9);
    let lo = m - i64::from(b1) * (2 * a + 4 * t + 8) - i64::from(b2) * (4 * t + 4);
    let hi = m - i64::from(b1) * (4 * t + 8) - i64::from(b2) * (2 * t + 4);
    debug_assert!(lo >= l && lo <= hi);
    Ok(ParityInterval::even(lo as u64, hi as u64))
}

/// `K_{n/2,n/2}` as the Cayley graph of the odd residues, for even n.
///
/// This is the (n/2)-regular C_{l+1}-saturated graph that covers even group
/// orders.
pub fn balanced_bipartite_graph(n: u32, ell: u32) -> Result<CayleyGraph> {
    validate_ell(ell)?;
    if n % 2 == 1 {
        return Err(Error::OddN { n });
    }
    let side = n / 2;
    if u64::from(side) < (u64::from(ell) + 2) / 2 {
        return Err(Error::BipartiteTooSmall { n, ell });
    }
    let m = Modulus::new(n);
    let odds = ResidueSet::from_members(m, (1..n).step_by(2))?;
    CayleyGraph::new(odds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumset::{brute_force_sumset_int, fold_sumset_int};

    #[test]
    fn derive_401() {
        let p = derive_params(4, 401).unwrap();
        assert_eq!(
            p,
            ConstructionParams {
                ell: 4,
                n: 401,
                r: 1,
                t: 2,
                gamma: 1,
                j: 3,
                k: 40,
                alpha: 33,
                big_m: 332,
            }
        );
        // cross-check the lemma identity: 401 - (83 - 16 + 2) = 332 = 4 * 83
        assert_eq!(p.big_m, 401 - (2 * 40 + 3 - 16 + 2));
    }

    #[test]
    fn derive_363() {
        let p = derive_params(4, 363).unwrap();
        assert_eq!(p.r, 3);
        assert_eq!(p.t, 4);
        assert_eq!(p.gamma, 2);
        assert_eq!(p.j, 5);
        assert_eq!(p.k, 36);
        assert_eq!(p.alpha, 26);
        assert_eq!(p.big_m, 308);
    }

    #[test]
    fn derive_rejects_odd_ell() {
        assert!(matches!(derive_params(5, 401), Err(Error::OddEll { .. })));
    }

    #[test]
    fn derive_rejects_out_of_range() {
        assert!(matches!(
            derive_params(4, 101),
            Err(Error::OutOfRange { bound: 360, .. })
        ));
        // even n
        assert!(matches!(derive_params(4, 400), Err(Error::OutOfRange { .. })));
        // the bound itself is not inside the range
        assert!(matches!(derive_params(4, 359), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn derive_forced_accepts_smaller_orders() {
        // k = 25 >= 4t + 2l + 2|gamma| + 2 must hold; scan down to find one
        let p = ConstructionParams::derive_forced(4, 251).unwrap();
        assert_eq!(u64::from(2 * p.ell + 2) * p.k + u64::from(p.r), 251);
        assert!(p.k >= p.min_k());
        // far too small for any t
        assert!(matches!(
            ConstructionParams::derive_forced(4, 41),
            Err(Error::KTooSmall { .. })
        ));
    }

    #[test]
    fn splus_401_members() {
        let p = derive_params(4, 401).unwrap();
        let s = build_splus(&p);
        let mut expected: Vec<u32> = (1..=67).step_by(2).collect();
        expected.extend([71, 73, 75, 83]);
        assert_eq!(s.members(), expected);
        assert_eq!(s.len(), 38);
    }

    #[test]
    fn splus_363_singleton_piece() {
        let p = derive_params(4, 363).unwrap();
        let parts = splus_parts(&p);
        assert_eq!(parts.i3, ParityInterval::singleton(77));
        assert_eq!(2 * p.k + p.j, 77);
    }

    #[test]
    fn splus_always_starts_at_one() {
        for ell in [4u32, 6, 8] {
            let bound = order_bound(ell);
            let n = (bound + 1) as u32 | 1;
            let p = derive_params(ell, n).unwrap();
            assert_eq!(build_splus(&p).min(), Some(1));
        }
    }

    #[test]
    fn full_set_401() {
        let p = derive_params(4, 401).unwrap();
        let s = build_full_set(&p);
        assert_eq!(s.len(), 76);
        assert!(s.is_symmetric());
        assert!(!s.contains(0));
        for x in [1, 3, 400, 398] {
            assert!(s.contains(x));
        }
    }

    #[test]
    fn key_lemma_rhs_example() {
        let rhs = key_lemma_rhs(4, 1, 8).unwrap();
        assert_eq!(rhs.min(), Some(4));
        assert_eq!(rhs.max(), Some(116));
        assert!(!rhs.contains(106));
        assert!(!rhs.contains(112));
        assert!(!rhs.contains(114));
        assert!(rhs.contains(110));

        let splus = SPlusParts::from_alpha_t(8, 1).to_int_set();
        assert_eq!(fold_sumset_int(&splus, 4).unwrap(), rhs);
        assert_eq!(brute_force_sumset_int(&splus, 4).unwrap(), rhs);
    }

    #[test]
    fn key_lemma_rejects_small_alpha() {
        assert!(matches!(
            key_lemma_rhs(4, 1, 7),
            Err(Error::KeyLemmaRange { min_alpha: 8, .. })
        ));
    }

    #[test]
    fn j_interval_examples() {
        // J_{0,0,l} = l*I3 = {M}
        assert_eq!(
            j_interval((0, 0, 4), 4, 1, 8).unwrap(),
            ParityInterval::even(116, 116)
        );
        // J_{l,0,0} = l*I1 = [l, l(2a+1)]_e
        assert_eq!(
            j_interval((4, 0, 0), 4, 1, 8).unwrap(),
            ParityInterval::even(4, 68)
        );
        // J_{0,1,l-1} = [M-4t-4, M-2t-4]_e
        assert_eq!(
            j_interval((0, 1, 3), 4, 1, 8).unwrap(),
            ParityInterval::even(108, 110)
        );
    }

    #[test]
    fn j_interval_rejects_bad_composition() {
        assert!(matches!(
            j_interval((1, 1, 1), 4, 1, 8),
            Err(Error::InvalidComposition { .. })
        ));
    }

    #[test]
    fn j_intervals_cover_key_lemma_rhs() {
        for (ell, t, alpha) in [(4u32, 1u32, 8u64), (4, 2, 12), (6, 1, 12), (6, 2, 16)] {
            let rhs = key_lemma_rhs(ell, t, alpha).unwrap();
            let mut union = IntSet::new();
            for b1 in 0..=ell {
                for b2 in 0..=(ell - b1) {
                    let b3 = ell - b1 - b2;
                    let iv = j_interval((b1, b2, b3), ell, t, alpha).unwrap();
                    union.union_with(&iv.to_int_set());
                }
            }
            assert_eq!(union, rhs, "l={ell} t={t} alpha={alpha}");
        }
    }

    #[test]
    fn lemma_identity_and_bounds_over_residue_sweep() {
        // Every odd n in (bound, bound + 2(2l+2)] covers each odd residue
        // class mod 2l+2 at least once.
        for ell in [4u32, 6, 8] {
            let bound = order_bound(ell);
            let period = u64::from(2 * ell + 2);
            let mut n = bound + 1;
            while n <= bound + 2 * period {
                if n % 2 == 1 {
                    let p = derive_params(ell, n as u32).unwrap();
                    let l = u64::from(ell);
                    let t = u64::from(p.t);
                    let lhs = l * (2 * p.k + p.j);
                    let rhs = n - (2 * p.k + p.j - 2 * (2 * t + 4) + 2);
                    assert_eq!(lhs, rhs, "l={ell} n={n}");
                    assert_eq!(p.big_m, lhs);
                    assert!(p.big_m < n);
                    // the slack below n is at least 4t + 4l - 1
                    assert!(n - p.big_m >= 4 * t + 4 * l - 1);
                    assert!(p.k >= p.min_k());
                    // orders above the strict bound force k >= 6l + 12
                    assert!(p.k >= 6 * l + 12);
                    assert!(p.alpha >= 2 * t + 2 * l - 2);
                }
                n += 1;
            }
        }
    }

    #[test]
    fn t_residue_map_is_a_bijection() {
        for ell in [4u32, 6, 8] {
            let period = i64::from(2 * ell + 2);
            let mut residues: Vec<i64> = (1..=i64::from(ell) + 1)
                .map(|t| (i64::from(ell) + 3 - 4 * (t + 2)).rem_euclid(period))
                .collect();
            residues.sort_unstable();
            let expected: Vec<i64> = (1..period).step_by(2).collect();
            assert_eq!(residues, expected, "l={ell}");
        }
    }

    #[test]
    fn bipartite_examples() {
        let g = balanced_bipartite_graph(6, 4).unwrap();
        assert_eq!(g.degree(), 3);
        assert_eq!(g.edge_count(), 9);

        assert!(matches!(
            balanced_bipartite_graph(4, 4),
            Err(Error::BipartiteTooSmall { .. })
        ));
        assert!(matches!(balanced_bipartite_graph(7, 4), Err(Error::OddN { .. })));
    }
}
