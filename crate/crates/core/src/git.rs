//! GIT for the `C^*`-action on `(P^1)^N` linearized with weight `-n` at the
//! fixed point `([0:1], ..., [0:1])`.
//!
//! Sections of the `r`-th power of the linearized bundle have a monomial basis
//! indexed by `m in [0, N r]^N`; such a monomial is invariant iff
//! `sum m_j = N r n`, and it is nonvanishing at a configuration iff every
//! `Zero` slot has `m_j = N r` and every `Infinity` slot has `m_j = 0`.
//!
//! Two independent classifiers live here: the closed form in terms of the mark
//! counts, and a search over monomials that only uses the definitions above.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::configuration::{act, limit_point_for_exponent, mark_data, Configuration, FiberPoint};
use crate::error::{Error, Result};
use crate::stability::{ModuliParams, StabilityClass};

/// Largest `N * r` the monomial search accepts by default.
pub const DEFAULT_SEARCH_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearizationSpec {
    n: usize,
    big_n: usize,
    r: u32,
}

impl LinearizationSpec {
    /// Exponent `n` on `N` points, first power of the bundle.
    pub fn new(n: i64, big_n: usize) -> Result<Self> {
        if n < 0 || n as usize > big_n {
            return Err(Error::InvalidLinearization { n, big_n });
        }
        Ok(LinearizationSpec {
            n: n as usize,
            big_n,
            r: 1,
        })
    }

    /// `n = 2(g-1+d)` on `N = 4g-4` points.
    pub fn from_params(p: &ModuliParams) -> Result<Self> {
        Self::new(p.linearization_exponent(), p.num_points())
    }

    pub fn with_power(self, r: u32) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidPower(r));
        }
        Ok(LinearizationSpec { r, ..self })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_points(&self) -> usize {
        self.big_n
    }

    pub fn power(&self) -> u32 {
        self.r
    }

    /// `N r`, the largest exponent of a single factor.
    pub fn top(&self) -> u32 {
        self.big_n as u32 * self.r
    }
}

/// Exponent vector of a basis monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MonomialIndex(pub Vec<u32>);

impl MonomialIndex {
    pub fn in_bounds(&self, spec: &LinearizationSpec) -> bool {
        self.0.len() == spec.num_points() && self.0.iter().all(|&m| m <= spec.top())
    }

    /// Slots with `m_j = N r`.
    pub fn saturated_top(&self, spec: &LinearizationSpec) -> usize {
        self.0.iter().filter(|&&m| m == spec.top()).count()
    }

    /// Slots with `m_j = 0`.
    pub fn saturated_bottom(&self) -> usize {
        self.0.iter().filter(|&&m| m == 0).count()
    }

    /// Number of `C^*` factors of the nonvanishing locus; the action there is
    /// closed iff this is positive.
    pub fn free_factors(&self, spec: &LinearizationSpec) -> usize {
        self.0.len() - self.saturated_top(spec) - self.saturated_bottom()
    }
}

impl fmt::Display for MonomialIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Balancing condition `sum m_j = N r n`.
pub fn is_invariant(m: &MonomialIndex, spec: &LinearizationSpec) -> bool {
    let total: u64 = m.0.iter().map(|&x| x as u64).sum();
    total == spec.big_n as u64 * spec.r as u64 * spec.n as u64
}

pub fn monomial_nonvanishing(m: &MonomialIndex, c: &Configuration, spec: &LinearizationSpec) -> bool {
    if m.0.len() != c.len() {
        return false;
    }
    c.points.iter().zip(&m.0).all(|(pt, &mj)| match pt {
        FiberPoint::Zero => mj == spec.top(),
        FiberPoint::Infinity => mj == 0,
        FiberPoint::Finite(_) => true,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GitClass {
    GitStable,
    StrictlySemistable,
    GitUnstable,
}

impl GitClass {
    pub fn is_semistable(&self) -> bool {
        !matches!(self, GitClass::GitUnstable)
    }
}

impl fmt::Display for GitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GitClass::GitStable => "GitStable",
            GitClass::StrictlySemistable => "StrictlySemistable",
            GitClass::GitUnstable => "GitUnstable",
        };
        f.write_str(s)
    }
}

/// Stable bundles are GIT-stable points, both semistable-but-not-stable kinds
/// are strictly semistable points.
pub fn git_class_of(class: StabilityClass) -> GitClass {
    match class {
        StabilityClass::Stable => GitClass::GitStable,
        StabilityClass::StrictlyPolystable | StabilityClass::SemistableNotPolystable => {
            GitClass::StrictlySemistable
        }
        StabilityClass::Unstable => GitClass::GitUnstable,
    }
}

/// Stable iff `n1 < n` and `n2 < N - n`; semistable iff both hold non-strictly.
pub fn classify_closed_form(c: &Configuration, spec: &LinearizationSpec) -> Result<GitClass> {
    c.check_len(spec.num_points())?;
    let m = mark_data(c);
    let (n1, n2, n, rest) = (m.n1(), m.n2(), spec.n, spec.big_n - spec.n);
    Ok(if n1 < n && n2 < rest {
        GitClass::GitStable
    } else if n1 <= n && n2 <= rest {
        GitClass::StrictlySemistable
    } else {
        GitClass::GitUnstable
    })
}

/// Result of the monomial search, with the monomial that decided it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteForceOutcome {
    pub class: GitClass,
    /// Power `r` of the witness, when one was found.
    pub power: Option<u32>,
    /// A nonvanishing invariant monomial: one with a free factor for stable
    /// points, any one for strictly semistable points.
    pub witness: Option<MonomialIndex>,
}

/// Depth-first walk over exponent vectors with `sum = target` and slot `j`
/// restricted to `domains[j]`. Calls `visit` on each complete vector; stops
/// early when `visit` returns `true`.
fn search_monomials(domains: &[(u32, u32)], target: u64, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
    // suffix bounds for pruning
    let k = domains.len();
    let mut min_tail = vec![0u64; k + 1];
    let mut max_tail = vec![0u64; k + 1];
    for j in (0..k).rev() {
        min_tail[j] = min_tail[j + 1] + domains[j].0 as u64;
        max_tail[j] = max_tail[j + 1] + domains[j].1 as u64;
    }
    Search {
        domains,
        target,
        min_tail,
        max_tail,
        current: vec![0u32; k],
        visit,
    }
    .go(0, 0)
}

struct Search<'a> {
    domains: &'a [(u32, u32)],
    target: u64,
    min_tail: Vec<u64>,
    max_tail: Vec<u64>,
    current: Vec<u32>,
    visit: &'a mut dyn FnMut(&[u32]) -> bool,
}

impl Search<'_> {
    fn go(&mut self, j: usize, sum: u64) -> bool {
        if j == self.domains.len() {
            return sum == self.target && (self.visit)(&self.current);
        }
        let (lo, hi) = self.domains[j];
        for v in lo..=hi {
            let s = sum + v as u64;
            if s + self.min_tail[j + 1] > self.target {
                break;
            }
            if s + self.max_tail[j + 1] < self.target {
                continue;
            }
            self.current[j] = v;
            if self.go(j + 1, s) {
                return true;
            }
        }
        false
    }
}

/// Every invariant monomial index for `spec` (all `m` in `[0, N r]^N` with the
/// balancing sum), in lexicographic order.
pub fn invariant_monomials(spec: &LinearizationSpec, limit: usize) -> Result<Vec<MonomialIndex>> {
    let size = spec.top() as usize;
    if size > limit {
        return Err(Error::SearchSpaceTooLarge { size, limit });
    }
    let domains = vec![(0, spec.top()); spec.num_points()];
    let target = spec.big_n as u64 * spec.r as u64 * spec.n as u64;
    let mut out = Vec::new();
    search_monomials(&domains, target, &mut |m| {
        out.push(MonomialIndex(m.to_vec()));
        false
    });
    Ok(out)
}

/// Classification straight from the definitions: semistable iff some
/// invariant monomial of some power `r <= r_max` is nonvanishing at `c`;
/// stable iff additionally one such monomial has a free `C^*` factor (its
/// nonvanishing locus has closed orbits) and `c` is not a fixed point.
pub fn classify_bruteforce_with_limit(
    c: &Configuration,
    spec: &LinearizationSpec,
    r_max: u32,
    limit: usize,
) -> Result<BruteForceOutcome> {
    if r_max == 0 {
        return Err(Error::InvalidPower(0));
    }
    c.check_len(spec.num_points())?;
    let size = spec.with_power(r_max)?.top() as usize;
    if size > limit {
        return Err(Error::SearchSpaceTooLarge { size, limit });
    }
    let is_fixed = c.is_fully_marked();
    let mut semistable: Option<(u32, MonomialIndex)> = None;

    for r in 1..=r_max {
        let sp = spec.with_power(r)?;
        // the nonvanishing condition pins the marked slots; searching only
        // those vectors visits exactly the nonvanishing monomials
        let domains: Vec<(u32, u32)> = c
            .points
            .iter()
            .map(|pt| match pt {
                FiberPoint::Zero => (sp.top(), sp.top()),
                FiberPoint::Infinity => (0, 0),
                FiberPoint::Finite(_) => (0, sp.top()),
            })
            .collect();
        let target = sp.big_n as u64 * r as u64 * sp.n as u64;
        let mut stable_witness: Option<MonomialIndex> = None;
        search_monomials(&domains, target, &mut |m| {
            let idx = MonomialIndex(m.to_vec());
            debug_assert!(idx.in_bounds(&sp));
            if !(is_invariant(&idx, &sp) && monomial_nonvanishing(&idx, c, &sp)) {
                return false;
            }
            if semistable.is_none() {
                semistable = Some((r, idx.clone()));
            }
            if !is_fixed && idx.free_factors(&sp) > 0 {
                stable_witness = Some(idx);
                return true;
            }
            false
        });
        if let Some(w) = stable_witness {
            return Ok(BruteForceOutcome {
                class: GitClass::GitStable,
                power: Some(r),
                witness: Some(w),
            });
        }
    }

    Ok(match semistable {
        Some((r, w)) => BruteForceOutcome {
            class: GitClass::StrictlySemistable,
            power: Some(r),
            witness: Some(w),
        },
        None => BruteForceOutcome {
            class: GitClass::GitUnstable,
            power: None,
            witness: None,
        },
    })
}

pub fn classify_bruteforce(c: &Configuration, spec: &LinearizationSpec, r_max: u32) -> Result<GitClass> {
    Ok(classify_bruteforce_with_limit(c, spec, r_max, DEFAULT_SEARCH_LIMIT)?.class)
}

/// Scales a configuration so that its lowest-indexed finite slot is `1`.
pub fn normalize_orbit(c: &Configuration) -> Configuration {
    match c.points.iter().find_map(FiberPoint::coordinate) {
        Some(t) if !t.is_one() => {
            let s = t.inverse().expect("finite coordinates are nonzero");
            act(&s, c).expect("inverse of a nonzero scalar is nonzero")
        }
        _ => c.clone(),
    }
}

/// Canonical point of the S-equivalence class: the normalized orbit point for
/// stable configurations, the fixed point in the orbit closure for strictly
/// semistable ones.
pub fn s_equivalence_representative(c: &Configuration, spec: &LinearizationSpec) -> Result<Configuration> {
    match classify_closed_form(c, spec)? {
        GitClass::GitStable => Ok(normalize_orbit(c)),
        GitClass::StrictlySemistable => limit_point_for_exponent(c, spec.n),
        GitClass::GitUnstable => Err(Error::GitUnstable),
    }
}
