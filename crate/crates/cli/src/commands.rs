use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use su12_core::configuration::in_y;
use su12_core::git::{
    classify_bruteforce_with_limit, classify_closed_form, s_equivalence_representative, DEFAULT_SEARCH_LIMIT,
};
use su12_core::local_model::{
    expected_vanishing, hecke_round_trip, normal_form_check, smith_form, verify_phi_e,
};
use su12_core::stability::{census, classify_counts, stratum_dimension};
use su12_core::{
    sampling, Configuration, GitClass, LabeledPartition, LinearizationSpec, Mat2, ModuliParams,
    MonomialIndex, Scalar, StabilityClass, TruncatedSeries,
};

use crate::error::{CliError, CliResult, EXIT_ASSERTION, EXIT_OK};

/// A rendered command result: the structured data, any warnings for stderr,
/// and the exit code it implies.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome<T> {
    pub data: T,
    pub warnings: Vec<String>,
    pub exit_code: u8,
}

fn outside_range_warning(p: &ModuliParams) -> Option<String> {
    (!p.in_stable_range()).then(|| {
        format!(
            "|d| = {} >= g - 1 = {}: outside the range where stable objects exist",
            p.degree().abs(),
            p.genus() - 1
        )
    })
}

fn require_range(p: &ModuliParams) -> CliResult<()> {
    match outside_range_warning(p) {
        Some(w) => Err(CliError::Usage(format!("{w}; this command needs |d| < g - 1"))),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub name: String,
    pub lhs: i64,
    pub rhs: i64,
    /// `lhs < rhs`.
    pub strict: bool,
    /// `lhs <= rhs`.
    pub weak: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub genus: i64,
    pub degree: i64,
    pub d_beta: i64,
    pub d_gamma: i64,
    pub d_rest: i64,
    pub class: StabilityClass,
    pub inequalities: Vec<Inequality>,
    pub stratum_dimension: Option<i64>,
}

pub fn cmd_stability(g: i64, d: i64, d_beta: i64, d_gamma: i64) -> CliResult<Outcome<StabilityReport>> {
    let p = ModuliParams::new(g, d)?;
    let n = p.num_points() as i64;
    if d_beta < 0 || d_gamma < 0 || d_beta + d_gamma > n {
        return Err(CliError::Usage(format!("d_beta + d_gamma must lie in 0..={n}")));
    }
    let class = classify_counts(&p, d_beta as usize, d_gamma as usize);
    let ineq = |name: &str, lhs: i64, rhs: i64| Inequality {
        name: name.to_string(),
        lhs,
        rhs,
        strict: lhs < rhs,
        weak: lhs <= rhs,
    };
    let part =
        LabeledPartition::from_counts(d_beta as usize, d_gamma as usize, (n - d_beta - d_gamma) as usize);
    Ok(Outcome {
        data: StabilityReport {
            genus: g,
            degree: d,
            d_beta,
            d_gamma,
            d_rest: n - d_beta - d_gamma,
            class,
            inequalities: vec![
                ineq("d_beta vs 2(g-1-d)", d_beta, p.beta_bound()),
                ineq("d_gamma vs 2(g-1+d)", d_gamma, p.gamma_bound()),
            ],
            stratum_dimension: stratum_dimension(&p, &part).ok(),
        },
        warnings: outside_range_warning(&p).into_iter().collect(),
        exit_code: EXIT_OK,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusLine {
    pub d_beta: usize,
    pub d_gamma: usize,
    pub d_rest: usize,
    pub class: StabilityClass,
    /// Decimal string; counts outgrow 64 bits for large genus.
    pub labeled_count: String,
    pub stratum_dimension: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTotal {
    pub class: StabilityClass,
    pub labeled_count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub genus: i64,
    pub degree: i64,
    pub num_points: usize,
    pub rows: Vec<CensusLine>,
    pub totals: Vec<ClassTotal>,
    pub grand_total: String,
}

pub fn cmd_census(g: i64, d: i64) -> CliResult<Outcome<CensusReport>> {
    let p = ModuliParams::new(g, d)?;
    let c = census(&p);
    let totals = [
        StabilityClass::Stable,
        StabilityClass::StrictlyPolystable,
        StabilityClass::SemistableNotPolystable,
        StabilityClass::Unstable,
    ]
    .into_iter()
    .map(|class| ClassTotal {
        class,
        labeled_count: c.labeled_total(class).to_string(),
    })
    .collect();
    Ok(Outcome {
        data: CensusReport {
            genus: g,
            degree: d,
            num_points: p.num_points(),
            grand_total: c.grand_total().to_string(),
            rows: c
                .rows
                .into_iter()
                .map(|r| CensusLine {
                    d_beta: r.d_beta,
                    d_gamma: r.d_gamma,
                    d_rest: r.d_rest,
                    class: r.class,
                    labeled_count: r.labeled_count.to_string(),
                    stratum_dimension: r.stratum_dimension,
                })
                .collect(),
            totals,
        },
        warnings: outside_range_warning(&p).into_iter().collect(),
        exit_code: EXIT_OK,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GitRow {
    pub index: usize,
    pub configuration: Configuration,
    pub in_y: bool,
    pub closed_form: GitClass,
    pub brute_force: GitClass,
    pub agree: bool,
    pub power: Option<u32>,
    pub witness: Option<MonomialIndex>,
    pub representative: Option<Configuration>,
}

/// Parses a JSON array of configurations; an empty or blank file is an empty array.
pub fn parse_configurations(text: &str) -> CliResult<Vec<Configuration>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(serde_json::from_str(text)?)
}

pub fn cmd_git_classify(
    configs: &[Configuration],
    g: i64,
    d: i64,
    r_max: u32,
) -> CliResult<Outcome<Vec<GitRow>>> {
    let p = ModuliParams::new(g, d)?;
    require_range(&p)?;
    let spec = LinearizationSpec::from_params(&p)?;
    let mut rows = Vec::with_capacity(configs.len());
    for (index, c) in configs.iter().enumerate() {
        c.check_len(p.num_points())?;
        let closed = classify_closed_form(c, &spec)?;
        let brute = classify_bruteforce_with_limit(c, &spec, r_max, DEFAULT_SEARCH_LIMIT)?;
        rows.push(GitRow {
            index,
            configuration: c.clone(),
            in_y: in_y(c, &p)?,
            closed_form: closed,
            brute_force: brute.class,
            agree: closed == brute.class,
            power: brute.power,
            witness: brute.witness,
            representative: s_equivalence_representative(c, &spec).ok(),
        });
    }
    let exit_code = if rows.iter().all(|r| r.agree) {
        EXIT_OK
    } else {
        EXIT_ASSERTION
    };
    Ok(Outcome {
        data: rows,
        warnings: Vec::new(),
        exit_code,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFailure {
    pub case: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub name: String,
    pub cases: usize,
    pub passed: usize,
    pub failures: Vec<CaseFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalReport {
    pub truncation: usize,
    pub seed: u64,
    pub cases: usize,
    /// Pivot positions used by the random Smith cases.
    pub smith_pivots: Vec<(usize, usize)>,
    pub suites: Vec<SuiteReport>,
    pub all_passed: bool,
}

fn run_suite<I>(name: &str, cases: I) -> SuiteReport
where
    I: IntoIterator<Item = Result<(), String>>,
{
    let mut report = SuiteReport {
        name: name.to_string(),
        cases: 0,
        passed: 0,
        failures: Vec::new(),
    };
    for (case, result) in cases.into_iter().enumerate() {
        report.cases += 1;
        match result {
            Ok(()) => report.passed += 1,
            Err(message) => report.failures.push(CaseFailure { case, message }),
        }
    }
    report
}

/// Independent generator for case `case` of suite `suite`.
fn case_rng(seed: u64, suite: u64, case: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((suite << 32) | case as u64);
    rng
}

fn check_smith(phi: &Mat2) -> Result<(usize, usize), String> {
    let f = smith_form(phi).map_err(|e| e.to_string())?;
    let rec =
        f.p.try_mul(phi)
            .and_then(|m| m.try_mul(&f.q))
            .map_err(|e| e.to_string())?;
    if rec != Mat2::smith_target(phi.order()) {
        return Err("P phi Q != diag(1, zeta)".into());
    }
    if !(f.p.det().is_unit() && f.q.det().is_unit()) {
        return Err("P or Q is not invertible".into());
    }
    Ok(f.pivot)
}

/// Extra Smith inputs: a JSON array of matrices.
pub fn parse_matrices(text: &str) -> CliResult<Vec<Mat2>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Ok(serde_json::from_str(text)?)
}

pub fn cmd_local_verify(
    t: usize,
    seed: u64,
    cases: usize,
    extra: &[Mat2],
) -> CliResult<Outcome<LocalReport>> {
    if t < 2 {
        return Err(CliError::Usage(format!("truncation must be at least 2, got {t}")));
    }
    let mut suites = Vec::new();

    let mut pivots = BTreeSet::new();
    suites.push(run_suite(
        "smith_random",
        (0..cases).map(|k| {
            let phi = sampling::det_zeta_matrix(&mut case_rng(seed, 0, k), t);
            check_smith(&phi).map(|pivot| {
                pivots.insert(pivot);
            })
        }),
    ));

    let worked = [
        Mat2::smith_target(t),
        Mat2::diag(TruncatedSeries::zeta(t), TruncatedSeries::one(t)),
        Mat2::from_int_rows(t, [[&[1, 1], &[0, 1]], [&[0, 1], &[0, 1]]]),
    ];
    suites.push(run_suite(
        "smith_examples",
        worked.iter().map(|phi| check_smith(phi).map(|_| ())),
    ));

    if !extra.is_empty() {
        suites.push(run_suite(
            "smith_input",
            extra.iter().map(|phi| check_smith(phi).map(|_| ())),
        ));
    }

    suites.push(run_suite(
        "hecke_round_trip",
        (0..cases).map(|k| {
            let xi = sampling::covector(&mut case_rng(seed, 1, k));
            let rt = hecke_round_trip(&xi, t).map_err(|e| e.to_string())?;
            if !rt.identities_hold() {
                return Err(format!("identities fail for {xi:?}"));
            }
            let got = (
                rt.higgs.beta_vanishes_at_origin(),
                rt.higgs.gamma_vanishes_at_origin(),
            );
            if got != expected_vanishing(&xi.fiber_point()) {
                return Err(format!("vanishing pattern {got:?} for {:?}", xi.fiber_point()));
            }
            Ok(())
        }),
    ));

    let base = normal_form_check(&Scalar::from(1), t)?;
    suites.push(run_suite(
        "normal_form",
        (0..cases).map(|k| {
            let b = sampling::nonzero_scalar(&mut case_rng(seed, 2, k));
            let r = normal_form_check(&b, t).map_err(|e| e.to_string())?;
            if let Some(c) = r.checks.iter().find(|c| !c.passed) {
                return Err(format!("b = {b}: {}", c.name));
            }
            if r.matrix_output() != base.matrix_output() {
                return Err(format!("b = {b}: output depends on b"));
            }
            Ok(())
        }),
    ));

    suites.push(run_suite(
        "phi_naturality",
        (0..cases).map(|k| {
            let mut rng = case_rng(seed, 3, k);
            let mu = loop {
                let m = [
                    [sampling::scalar(&mut rng), sampling::scalar(&mut rng)],
                    [sampling::scalar(&mut rng), sampling::scalar(&mut rng)],
                ];
                if verify_phi_e(&m).is_ok() {
                    break m;
                }
            };
            let r = verify_phi_e(&mu).map_err(|e| e.to_string())?;
            if r.is_isomorphism && r.naturality_holds && r.determinant == Scalar::from(1) {
                Ok(())
            } else {
                Err(format!("phi_E checks fail for {mu:?}"))
            }
        }),
    ));

    let all_passed = suites.iter().all(|s| s.failures.is_empty());
    Ok(Outcome {
        data: LocalReport {
            truncation: t,
            seed,
            cases,
            smith_pivots: pivots.into_iter().collect(),
            suites,
            all_passed,
        },
        warnings: Vec::new(),
        exit_code: if all_passed { EXIT_OK } else { EXIT_ASSERTION },
    })
}
