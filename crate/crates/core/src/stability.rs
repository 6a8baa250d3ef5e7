//! Integer stability arithmetic for SU(1,2) Higgs bundles whose quadratic
//! differential has simple zeros.
//!
//! Everything here depends only on the genus `g`, the degree `d` of
//! `L = det F*`, and how the `N = 4g - 4` zeros of `q` split into zeros of
//! `beta`, zeros of `gamma`, and the rest.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Genus and degree, with the derived point count and linearization exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuliParams {
    g: i64,
    d: i64,
}

impl ModuliParams {
    pub fn new(g: i64, d: i64) -> Result<Self> {
        if g < 2 {
            return Err(Error::InvalidGenus(g));
        }
        Ok(ModuliParams { g, d })
    }

    pub fn genus(&self) -> i64 {
        self.g
    }

    pub fn degree(&self) -> i64 {
        self.d
    }

    /// `N = 4g - 4`, the number of zeros of `q`.
    pub fn num_points(&self) -> usize {
        (4 * self.g - 4) as usize
    }

    /// `n = 2(g - 1 + d)`, which is also the bound on `d_gamma`.
    pub fn linearization_exponent(&self) -> i64 {
        2 * (self.g - 1 + self.d)
    }

    /// `2(g - 1 - d)`, the bound on `d_beta`.
    pub fn beta_bound(&self) -> i64 {
        2 * (self.g - 1 - self.d)
    }

    pub fn gamma_bound(&self) -> i64 {
        self.linearization_exponent()
    }

    /// `|d| < g - 1`.
    pub fn in_stable_range(&self) -> bool {
        self.d.abs() < self.g - 1
    }
}

/// True iff `|d| < g - 1`. Semistable objects still exist at `|d| = g - 1`.
pub fn milnor_wood_admits_stable(g: i64, d: i64) -> Result<bool> {
    Ok(ModuliParams::new(g, d)?.in_stable_range())
}

/// Which divisor a zero of `q` belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    /// `beta` vanishes here.
    Beta,
    /// `gamma` vanishes here.
    Gamma,
    /// Neither vanishes.
    Rest,
}

/// Assignment of each zero of `q` to `D_beta`, `D_gamma` or `D_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabeledPartition {
    assignment: Vec<Label>,
}

impl LabeledPartition {
    pub fn new(assignment: Vec<Label>) -> Self {
        LabeledPartition { assignment }
    }

    /// The canonical labeled partition with the given counts: betas first,
    /// then gammas, then the rest.
    pub fn from_counts(d_beta: usize, d_gamma: usize, d_r: usize) -> Self {
        let mut v = vec![Label::Beta; d_beta];
        v.extend(std::iter::repeat_n(Label::Gamma, d_gamma));
        v.extend(std::iter::repeat_n(Label::Rest, d_r));
        LabeledPartition { assignment: v }
    }

    pub fn assignment(&self) -> &[Label] {
        &self.assignment
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    fn count(&self, l: Label) -> usize {
        self.assignment.iter().filter(|&&x| x == l).count()
    }

    pub fn d_beta(&self) -> usize {
        self.count(Label::Beta)
    }

    pub fn d_gamma(&self) -> usize {
        self.count(Label::Gamma)
    }

    pub fn d_rest(&self) -> usize {
        self.count(Label::Rest)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StabilityClass {
    Stable,
    StrictlyPolystable,
    SemistableNotPolystable,
    Unstable,
}

impl fmt::Display for StabilityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StabilityClass::Stable => "Stable",
            StabilityClass::StrictlyPolystable => "StrictlyPolystable",
            StabilityClass::SemistableNotPolystable => "SemistableNotPolystable",
            StabilityClass::Unstable => "Unstable",
        };
        f.write_str(s)
    }
}

/// Classification from the counts alone.
pub fn classify_counts(p: &ModuliParams, d_beta: usize, d_gamma: usize) -> StabilityClass {
    let (db, dg) = (d_beta as i64, d_gamma as i64);
    let (bb, gb) = (p.beta_bound(), p.gamma_bound());
    if db < bb && dg < gb {
        StabilityClass::Stable
    } else if db == bb && dg == gb {
        StabilityClass::StrictlyPolystable
    } else if db <= bb && dg <= gb {
        StabilityClass::SemistableNotPolystable
    } else {
        StabilityClass::Unstable
    }
}

pub fn classify_partition(p: &ModuliParams, part: &LabeledPartition) -> Result<StabilityClass> {
    if part.len() != p.num_points() {
        return Err(Error::LengthMismatch {
            expected: p.num_points(),
            found: part.len(),
        });
    }
    Ok(classify_counts(p, part.d_beta(), part.d_gamma()))
}

/// `g + d_r`: the Picard variety contributes `g`, the torus fiber `d_r`.
pub fn stratum_dimension(p: &ModuliParams, part: &LabeledPartition) -> Result<i64> {
    match classify_partition(p, part)? {
        StabilityClass::Stable => Ok(p.genus() + part.d_rest() as i64),
        _ => Err(Error::NotStable {
            d_beta: part.d_beta(),
            d_gamma: part.d_gamma(),
        }),
    }
}

/// Degrees of `L(D_beta) K^-1` and `L^-2(-D_beta) K` in the polystable
/// splitting, with `d_beta = 2(g - 1 - d)`. They sum to `-d`.
pub fn polystable_split_degrees(p: &ModuliParams) -> (i64, i64) {
    let (g, d) = (p.genus(), p.degree());
    let d_beta = p.beta_bound();
    let canonical = 2 * g - 2;
    (d + d_beta - canonical, -2 * d - d_beta + canonical)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub d_beta: usize,
    pub d_gamma: usize,
    pub d_rest: usize,
    pub class: StabilityClass,
    /// Number of labeled partitions with these counts, `N!/(d_beta! d_gamma! d_r!)`.
    pub labeled_count: BigUint,
    /// Only for stable rows.
    pub stratum_dimension: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub params: ModuliParams,
    pub rows: Vec<CensusRow>,
}

impl Census {
    /// Total labeled count for one class.
    pub fn labeled_total(&self, class: StabilityClass) -> BigUint {
        self.rows
            .iter()
            .filter(|r| r.class == class)
            .map(|r| &r.labeled_count)
            .sum()
    }

    pub fn totals(&self) -> BTreeMap<StabilityClass, BigUint> {
        let mut out = BTreeMap::new();
        for r in &self.rows {
            *out.entry(r.class).or_insert_with(BigUint::zero) += &r.labeled_count;
        }
        out
    }

    pub fn grand_total(&self) -> BigUint {
        self.rows.iter().map(|r| &r.labeled_count).sum()
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Multinomial `n! / (k_1! ... k_m!)`.
pub fn multinomial(parts: &[usize]) -> BigUint {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, &k| acc / factorial(k))
}

/// Every `(d_beta, d_gamma)` with `d_beta + d_gamma <= N`, ordered by
/// `d_beta` then `d_gamma`.
pub fn census(p: &ModuliParams) -> Census {
    let n = p.num_points();
    let mut rows = Vec::with_capacity((n + 1) * (n + 2) / 2);
    for d_beta in 0..=n {
        for d_gamma in 0..=(n - d_beta) {
            let d_rest = n - d_beta - d_gamma;
            let class = classify_counts(p, d_beta, d_gamma);
            let stratum_dimension = (class == StabilityClass::Stable).then(|| p.genus() + d_rest as i64);
            rows.push(CensusRow {
                d_beta,
                d_gamma,
                d_rest,
                class,
                labeled_count: multinomial(&[d_beta, d_gamma, d_rest]),
                stratum_dimension,
            });
        }
    }
    Census { params: *p, rows }
}
