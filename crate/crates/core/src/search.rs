//! Exhaustive computation of psi_l(n), the minimum cardinality of a
//! symmetric complete (l,1)-sum-free set in Z_n.
//!
//! Candidates are enumerated by their positive half `H` inside
//! `{1, ..., ceil(n/2) - 1}`, plus the self-negating element `n/2` when `n`
//! is even and the target size is odd. Sizes are tried in increasing order,
//! so the first size with a passing candidate is the minimum; within a size
//! the lexicographically smallest half wins.
//!
//! Work is split across a thread pool by the first element of `H`. Tasks
//! share nothing and the merge is a deterministic lexicographic minimum, so
//! the result (including node counts) is identical for any thread count.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::residue::{Modulus, ResidueSet};
use crate::verify::{self, counting_bound_holds};

/// Version string stamped into result-log records.
pub const LOG_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Largest candidate size to try; defaults to `n / 2`.
    pub max_size: Option<u32>,
    /// Worker threads; defaults to the global pool.
    pub threads: Option<usize>,
    /// Node budget; exceeding it between sizes yields `Inconclusive`.
    pub budget: Option<u64>,
    /// Monotone pruning: the counting-bound size cut and the early
    /// sum-free-violation cut. Disabling must not change any outcome.
    pub prune: bool,
    /// Optional accelerator: skip candidates that are not minimal in their
    /// multiplicative-unit orbit. Off by default; changes witnesses but not
    /// psi values.
    pub canonical: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_size: None,
            threads: None,
            budget: None,
            prune: true,
            canonical: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found {
        psi: u32,
        witness: ResidueSet,
        /// For even n with an odd psi (witness contains n/2): the minimum
        /// over sets excluding n/2, when one exists within `max_size`.
        psi_without_half: Option<u32>,
    },
    NoneExists {
        up_to: u32,
    },
    Inconclusive {
        up_to: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStats {
    /// Partial half-sets expanded.
    pub nodes: u64,
    /// Full-size candidates tested.
    pub candidates: u64,
    pub millis: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub ell: u32,
    pub n: u32,
    pub outcome: SearchOutcome,
    pub stats: SearchStats,
}

impl SearchResult {
    /// Equality ignoring wall time, for determinism checks.
    pub fn same_outcome(&self, other: &SearchResult) -> bool {
        self.ell == other.ell
            && self.n == other.n
            && self.outcome == other.outcome
            && self.stats.nodes == other.stats.nodes
            && self.stats.candidates == other.stats.candidates
    }
}

fn validate_search_ell(ell: u32) -> Result<()> {
    if ell % 2 == 1 {
        return Err(Error::OddEll { ell });
    }
    if ell < 2 {
        return Err(Error::EllTooSmall { ell });
    }
    Ok(())
}

// ============================================================================
// Incremental enumeration state
// ============================================================================

#[derive(Clone, Copy)]
enum Item {
    /// The symmetric pair `{x, n - x}`.
    Pair(u32),
    /// The self-negating element `n/2` (even n only).
    Half,
}

/// DFS state: the partial symmetric set and a stack of its 1..=l fold
/// sumsets, updated incrementally on push and restored on pop. Level
/// buffers are preallocated for the whole depth, so the hot loop never
/// allocates.
struct EnumState {
    m: Modulus,
    ell: usize,
    levels: Vec<Vec<ResidueSet>>,
    depth: usize,
    set: ResidueSet,
    half: Vec<u32>,
    nodes: u64,
    candidates: u64,
}

impl EnumState {
    fn new(m: Modulus, ell: u32, max_depth: usize) -> Self {
        EnumState {
            m,
            ell: ell as usize,
            levels: (0..=max_depth)
                .map(|_| vec![ResidueSet::empty(m); ell as usize])
                .collect(),
            depth: 0,
            set: ResidueSet::empty(m),
            half: Vec::new(),
            nodes: 0,
            candidates: 0,
        }
    }

    /// `j S_new = union over a of (a-fold sums of the new item) + (j-a) S_old`.
    fn push(&mut self, item: Item) {
        self.nodes += 1;
        let n = i64::from(self.m.n());
        self.depth += 1;
        let (front, back) = self.levels.split_at_mut(self.depth);
        let top = &front[self.depth - 1];
        let new = &mut back[0];
        for j in 0..self.ell {
            new[j].copy_from(&top[j]);
        }
        for j in 1..=self.ell {
            for a in 1..=j {
                match item {
                    Item::Pair(x) => {
                        // a-fold sums of {x, n-x}: (a - 2i) x for 0 <= i <= a
                        for i in 0..=a {
                            let q = ((a as i64 - 2 * i as i64) * i64::from(x)).rem_euclid(n) as u32;
                            if a == j {
                                new[j - 1].insert(q);
                            } else {
                                new[j - 1].or_rotated_from(&top[j - a - 1], q);
                            }
                        }
                    }
                    Item::Half => {
                        let h = self.m.n() / 2;
                        let q = ((a as u64 * u64::from(h)) % u64::from(self.m.n())) as u32;
                        if a == j {
                            new[j - 1].insert(q);
                        } else {
                            new[j - 1].or_rotated_from(&top[j - a - 1], q);
                        }
                    }
                }
            }
        }
        match item {
            Item::Pair(x) => {
                self.set.insert(x);
                self.set.insert(self.m.negate(x));
                self.half.push(x);
            }
            Item::Half => {
                self.set.insert(self.m.n() / 2);
            }
        }
    }

    fn pop(&mut self, item: Item) {
        self.depth -= 1;
        match item {
            Item::Pair(x) => {
                self.set.remove(x);
                self.set.remove(self.m.negate(x));
                self.half.pop();
            }
            Item::Half => {
                self.set.remove(self.m.n() / 2);
            }
        }
    }

    fn fold_top(&self) -> &ResidueSet {
        &self.levels[self.depth][self.ell - 1]
    }

    /// The early sum-free cut: `lS` and `S` only grow along a DFS branch,
    /// so an intersection now dooms every extension.
    fn violates_sum_free(&self) -> bool {
        self.fold_top().intersects(&self.set)
    }

    fn is_complete(&self) -> bool {
        self.set.first_uncovered_with(self.fold_top()).is_none()
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// True iff `members(S)` is lexicographically minimal among the images
/// `u * S` over multiplicative units `u`. Unit multiplication preserves the
/// symmetric-complete-sum-free property, so restricting to canonical
/// candidates cannot change psi.
fn is_unit_canonical(s: &ResidueSet) -> bool {
    let n = s.modulus().n();
    let base = s.members();
    for u in 2..n {
        if gcd(u, n) != 1 {
            continue;
        }
        let mut image: Vec<u32> = base
            .iter()
            .map(|&x| ((u64::from(u) * u64::from(x)) % u64::from(n)) as u32)
            .collect();
        image.sort_unstable();
        if image < base {
            return false;
        }
    }
    true
}

struct SizePass<'a> {
    m: Modulus,
    ell: u32,
    half_max: u32,
    pairs: u32,
    include_half: bool,
    opts: &'a SearchOptions,
}

#[derive(Default)]
struct TaskResult {
    hit: Option<Vec<u32>>,
    nodes: u64,
    candidates: u64,
}

impl TaskResult {
    fn merge(mut self, other: TaskResult) -> TaskResult {
        self.nodes += other.nodes;
        self.candidates += other.candidates;
        self.hit = match (self.hit, other.hit) {
            (None, h) | (h, None) => h,
            (Some(a), Some(b)) => Some(if a <= b { a } else { b }),
        };
        self
    }
}

impl SizePass<'_> {
    fn accept(&self, st: &mut EnumState) -> bool {
        st.candidates += 1;
        if !st.is_complete() {
            return false;
        }
        if !self.opts.prune && st.violates_sum_free() {
            return false;
        }
        if self.opts.canonical && !is_unit_canonical(&st.set) {
            return false;
        }
        true
    }

    fn extend(&self, st: &mut EnumState, last: u32, left: u32, hit: &mut Option<Vec<u32>>) {
        if left == 0 {
            if self.accept(st) {
                *hit = Some(st.half.clone());
            }
            return;
        }
        let max_first = self.half_max - (left - 1);
        for w in (last + 1)..=max_first {
            st.push(Item::Pair(w));
            if !(self.opts.prune && st.violates_sum_free()) {
                self.extend(st, w, left - 1, hit);
            }
            st.pop(Item::Pair(w));
            if hit.is_some() {
                return;
            }
        }
    }

    fn max_depth(&self) -> usize {
        self.pairs as usize + usize::from(self.include_half)
    }

    fn task(&self, first: u32) -> TaskResult {
        let mut st = EnumState::new(self.m, self.ell, self.max_depth());
        if self.include_half {
            st.push(Item::Half);
        }
        st.push(Item::Pair(first));
        let mut hit = None;
        if !(self.opts.prune && st.violates_sum_free()) {
            self.extend(&mut st, first, self.pairs - 1, &mut hit);
        }
        TaskResult {
            hit,
            nodes: st.nodes,
            candidates: st.candidates,
        }
    }

    /// Enumerates every candidate of this size. Returns the lexicographically
    /// smallest passing half, if any.
    fn run(&self) -> TaskResult {
        if self.pairs == 0 {
            let mut st = EnumState::new(self.m, self.ell, self.max_depth());
            if self.include_half {
                st.push(Item::Half);
            }
            let mut hit = None;
            if self.accept(&mut st) {
                hit = Some(Vec::new());
            }
            return TaskResult {
                hit,
                nodes: st.nodes,
                candidates: st.candidates,
            };
        }
        let last_first = self.half_max - (self.pairs - 1);
        (1..last_first + 1)
            .into_par_iter()
            .map(|v| self.task(v))
            .reduce(TaskResult::default, TaskResult::merge)
    }
}

// ============================================================================
// psi search
// ============================================================================

fn assemble_witness(m: Modulus, half: &[u32], with_half: bool) -> ResidueSet {
    let mut s = ResidueSet::empty(m);
    for &x in half {
        s.insert(x);
        s.insert(m.negate(x));
    }
    if with_half {
        s.insert(m.n() / 2);
    }
    s
}

/// Exhaustive minimum-size search. See the module docs for the candidate
/// space and determinism guarantees.
pub fn psi_search(n: u32, ell: u32, opts: &SearchOptions) -> Result<SearchResult> {
    validate_search_ell(ell)?;
    match opts.threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("worker pool");
            pool.install(|| psi_search_inner(n, ell, opts))
        }
        None => psi_search_inner(n, ell, opts),
    }
}

fn psi_search_inner(n: u32, ell: u32, opts: &SearchOptions) -> Result<SearchResult> {
    let started = Instant::now();
    let m = Modulus::new(n);
    let half_max = if n % 2 == 0 {
        n / 2 - 1
    } else {
        (n - 1) / 2
    };
    let max_size = opts.max_size.unwrap_or(n / 2);

    let mut nodes = 0u64;
    let mut candidates = 0u64;
    let mut last_done = 0u32;
    let mut found: Option<(u32, Vec<u32>)> = None;

    let mut size = 0u32;
    while size <= max_size {
        if let Some(budget) = opts.budget {
            if nodes >= budget {
                return Ok(SearchResult {
                    ell,
                    n,
                    outcome: SearchOutcome::Inconclusive { up_to: last_done },
                    stats: SearchStats {
                        nodes,
                        candidates,
                        millis: started.elapsed().as_millis() as u64,
                    },
                });
            }
        }
        let include_half = size % 2 == 1;
        let viable = !(include_half && n % 2 == 1)
            && size / 2 <= half_max
            && !(opts.prune && !counting_bound_holds(n, u64::from(size), ell));
        if viable {
            let pass = SizePass {
                m,
                ell,
                half_max,
                pairs: size / 2,
                include_half,
                opts,
            };
            let out = pass.run();
            nodes += out.nodes;
            candidates += out.candidates;
            if let Some(h) = out.hit {
                found = Some((size, h));
                break;
            }
        }
        last_done = size;
        size += 1;
    }

    let outcome = match found {
        None => SearchOutcome::NoneExists { up_to: max_size },
        Some((psi, half)) => {
            let witness = assemble_witness(m, &half, psi % 2 == 1);
            let report = verify::certify_symmetric_complete_sumfree(&witness, ell)?;
            assert!(
                report.overall(),
                "search hit fails its own certificate: n={n} l={ell} witness={witness}"
            );
            // When the minimum uses n/2, also report the minimum without it.
            let psi_without_half = if psi % 2 == 1 {
                let mut alt = None;
                let mut alt_size = psi + 1;
                while alt_size <= max_size {
                    if opts.budget.is_some_and(|b| nodes >= b) {
                        break;
                    }
                    if alt_size % 2 == 0
                        && alt_size / 2 <= half_max
                        && !(opts.prune && !counting_bound_holds(n, u64::from(alt_size), ell))
                    {
                        let pass = SizePass {
                            m,
                            ell,
                            half_max,
                            pairs: alt_size / 2,
                            include_half: false,
                            opts,
                        };
                        let out = pass.run();
                        nodes += out.nodes;
                        candidates += out.candidates;
                        if let Some(h) = out.hit {
                            let w = assemble_witness(m, &h, false);
                            let rep = verify::certify_symmetric_complete_sumfree(&w, ell)?;
                            assert!(rep.overall());
                            alt = Some(alt_size);
                            break;
                        }
                    }
                    alt_size += 1;
                }
                alt
            } else {
                None
            };
            SearchOutcome::Found {
                psi,
                witness,
                psi_without_half,
            }
        }
    };

    Ok(SearchResult {
        ell,
        n,
        outcome,
        stats: SearchStats {
            nodes,
            candidates,
            millis: started.elapsed().as_millis() as u64,
        },
    })
}

// ============================================================================
// Result log
// ============================================================================

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogOutcome {
    Found {
        psi: u32,
        witness: Vec<u32>,
        psi_without_half: Option<u32>,
    },
    NoneExists {
        up_to: u32,
    },
    Inconclusive {
        up_to: u32,
    },
}

/// One line of the result log. Field names and order are fixed by
/// `FORMATS.md`; golden tests parse these lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogEntry {
    pub ell: u32,
    pub n: u32,
    pub outcome: LogOutcome,
    pub nodes: u64,
    pub millis: u64,
    pub version: String,
}

impl LogEntry {
    pub fn from_result(r: &SearchResult) -> LogEntry {
        let outcome = match &r.outcome {
            SearchOutcome::Found {
                psi,
                witness,
                psi_without_half,
            } => LogOutcome::Found {
                psi: *psi,
                witness: witness.members(),
                psi_without_half: *psi_without_half,
            },
            SearchOutcome::NoneExists { up_to } => LogOutcome::NoneExists { up_to: *up_to },
            SearchOutcome::Inconclusive { up_to } => LogOutcome::Inconclusive { up_to: *up_to },
        };
        LogEntry {
            ell: r.ell,
            n: r.n,
            outcome,
            nodes: r.stats.nodes,
            millis: r.stats.millis,
            version: LOG_VERSION.to_string(),
        }
    }

    pub fn to_search_result(&self) -> Result<SearchResult> {
        let outcome = match &self.outcome {
            LogOutcome::Found {
                psi,
                witness,
                psi_without_half,
            } => SearchOutcome::Found {
                psi: *psi,
                witness: ResidueSet::from_members(Modulus::new(self.n), witness.iter().copied())?,
                psi_without_half: *psi_without_half,
            },
            LogOutcome::NoneExists { up_to } => SearchOutcome::NoneExists { up_to: *up_to },
            LogOutcome::Inconclusive { up_to } => SearchOutcome::Inconclusive { up_to: *up_to },
        };
        Ok(SearchResult {
            ell: self.ell,
            n: self.n,
            outcome,
            stats: SearchStats {
                nodes: self.nodes,
                candidates: 0,
                millis: self.millis,
            },
        })
    }

    /// The log line. `with_millis = false` drops the wall-time field, which
    /// keeps command output byte-identical across reruns.
    pub fn to_line_with(&self, with_millis: bool) -> String {
        let mut line = format!("result ell={} n={}", self.ell, self.n);
        match &self.outcome {
            LogOutcome::Found {
                psi,
                witness,
                psi_without_half,
            } => {
                line.push_str(&format!(" outcome=found psi={psi} witness="));
                let parts: Vec<String> = witness.iter().map(|x| x.to_string()).collect();
                line.push_str(&parts.join(","));
                if let Some(alt) = psi_without_half {
                    line.push_str(&format!(" psi_no_half={alt}"));
                }
            }
            LogOutcome::NoneExists { up_to } => {
                line.push_str(&format!(" outcome=none up_to={up_to}"));
            }
            LogOutcome::Inconclusive { up_to } => {
                line.push_str(&format!(" outcome=inconclusive up_to={up_to}"));
            }
        }
        line.push_str(&format!(" nodes={}", self.nodes));
        if with_millis {
            line.push_str(&format!(" millis={}", self.millis));
        }
        line.push_str(&format!(" version={}", self.version));
        line
    }

    pub fn to_line(&self) -> String {
        self.to_line_with(true)
    }

    /// Parses a `result ...` line; returns None for blank/foreign lines.
    pub fn parse_line(line: &str) -> Option<LogEntry> {
        let mut parts = line.split_whitespace();
        if parts.next()? != "result" {
            return None;
        }
        let mut ell = None;
        let mut n = None;
        let mut outcome_kind = None;
        let mut psi = None;
        let mut witness: Option<Vec<u32>> = None;
        let mut psi_no_half = None;
        let mut up_to = None;
        let mut nodes = 0u64;
        let mut millis = 0u64;
        let mut version = String::new();
        for part in parts {
            let (key, value) = part.split_once('=')?;
            match key {
                "ell" => ell = value.parse().ok(),
                "n" => n = value.parse().ok(),
                "outcome" => outcome_kind = Some(value.to_string()),
                "psi" => psi = value.parse().ok(),
                "witness" => {
                    let mut ws = Vec::new();
                    if !value.is_empty() {
                        for v in value.split(',') {
                            ws.push(v.parse().ok()?);
                        }
                    }
                    witness = Some(ws);
                }
                "psi_no_half" => psi_no_half = value.parse().ok(),
                "up_to" => up_to = value.parse().ok(),
                "nodes" => nodes = value.parse().ok()?,
                "millis" => millis = value.parse().ok()?,
                "version" => version = value.to_string(),
                _ => return None,
            }
        }
        let outcome = match outcome_kind?.as_str() {
            "found" => LogOutcome::Found {
                psi: psi?,
                witness: witness?,
                psi_without_half: psi_no_half,
            },
            "none" => LogOutcome::NoneExists { up_to: up_to? },
            "inconclusive" => LogOutcome::Inconclusive { up_to: up_to? },
            _ => return None,
        };
        Some(LogEntry {
            ell: ell?,
            n: n?,
            outcome,
            nodes,
            millis,
            version,
        })
    }
}

/// Append-only result log keyed by `(ell, n, version)`.
pub struct ResultLog {
    path: PathBuf,
}

impl ResultLog {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        ResultLog { path: path.into() }
    }

    /// The project-local default.
    pub fn default_path() -> PathBuf {
        PathBuf::from("psi-results.log")
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Loads all parseable entries; a missing file is an empty log.
    pub fn load(&self) -> Result<Vec<LogEntry>> {
        let file = match std::fs::File::open(&self.path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Error::LogIo(e.to_string())),
        };
        let mut entries = Vec::new();
        for line in BufReader::new(file).lines() {
            let line = line.map_err(|e| Error::LogIo(e.to_string()))?;
            if let Some(entry) = LogEntry::parse_line(&line) {
                entries.push(entry);
            }
        }
        Ok(entries)
    }

    pub fn append(&self, entry: &LogEntry) -> Result<()> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(|e| Error::LogIo(e.to_string()))?;
        writeln!(file, "{}", entry.to_line()).map_err(|e| Error::LogIo(e.to_string()))
    }
}

/// Runs `psi_search` over `from..=to`, streaming each result through
/// `on_result` and persisting to `log` when given. With `resume`, entries
/// already in the log (matching ell and version, not inconclusive) are
/// reused instead of recomputed.
pub fn psi_table<F: FnMut(&SearchResult)>(
    ell: u32,
    from: u32,
    to: u32,
    opts: &SearchOptions,
    log: Option<&ResultLog>,
    resume: bool,
    mut on_result: F,
) -> Result<Vec<SearchResult>> {
    validate_search_ell(ell)?;
    let cached: Vec<LogEntry> = if resume {
        match log {
            Some(l) => l
                .load()?
                .into_iter()
                .filter(|e| {
                    e.ell == ell
                        && e.version == LOG_VERSION
                        && !matches!(e.outcome, LogOutcome::Inconclusive { .. })
                })
                .collect(),
            None => Vec::new(),
        }
    } else {
        Vec::new()
    };

    let mut results = Vec::new();
    for n in from..=to {
        let result = match cached.iter().find(|e| e.n == n) {
            Some(entry) => entry.to_search_result()?,
            None => {
                let r = psi_search(n, ell, opts)?;
                if let Some(l) = log {
                    l.append(&LogEntry::from_result(&r))?;
                }
                r
            }
        };
        on_result(&result);
        results.push(result);
    }
    Ok(results)
}

// ============================================================================
// rsat reporting
// ============================================================================

/// Edge count and bound report for a certified saturation witness.
#[derive(Debug, Clone, PartialEq)]
pub struct RsatReport {
    pub ell: u32,
    pub n: u32,
    pub degree: u32,
    pub edges: u64,
    /// `edges <= n^2 / (2(l+1)) + n`, checked in exact integers.
    pub bound_plus_satisfied: bool,
    /// The `- n` variant of the same bound; reported for comparison only,
    /// as the size estimate `|S| <= 2(k + 1)` establishes just the `+ n`
    /// form.
    pub bound_minus_satisfied: bool,
    pub cached_psi: Option<u32>,
}

impl RsatReport {
    pub fn bound_plus(&self) -> f64 {
        let n = f64::from(self.n);
        n * n / (2.0 * (f64::from(self.ell) + 1.0)) + n
    }

    pub fn bound_minus(&self) -> f64 {
        let n = f64::from(self.n);
        n * n / (2.0 * (f64::from(self.ell) + 1.0)) - n
    }

    /// `rsat(n, C_{l+1}) <= n * psi_l(n)`, available when psi is cached.
    pub fn product_bound(&self) -> Option<u64> {
        self.cached_psi
            .map(|p| u64::from(self.n) * u64::from(p))
    }
}

/// Reports degree, edges, and the quadratic bounds for a set that certifies
/// as a saturation witness. Uncertified input is refused; the edge count of
/// a non-witness says nothing about rsat.
pub fn rsat_report(s: &ResidueSet, ell: u32, cached_psi: Option<u32>) -> Result<RsatReport> {
    let report = verify::certify_proposition(s, ell)?;
    if !report.overall() {
        return Err(Error::CertificateRequired);
    }
    let n = s.modulus().n();
    let degree = s.len() as u32;
    let total = u64::from(n) * u64::from(degree);
    debug_assert_eq!(total % 2, 0);
    let edges = total / 2;
    // edges <= n^2/(2(l+1)) +- n, scaled by 2(l+1) to stay in integers
    let scale = 2 * (u128::from(ell) + 1);
    let lhs = scale * u128::from(edges);
    let nn = u128::from(n) * u128::from(n);
    let plus = lhs <= nn + scale * u128::from(n);
    let minus = lhs <= nn.saturating_sub(scale * u128::from(n));
    Ok(RsatReport {
        ell,
        n,
        degree,
        edges,
        bound_plus_satisfied: plus,
        bound_minus_satisfied: minus,
        cached_psi,
    })
}
