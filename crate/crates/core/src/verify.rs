//! Cross-oracle verification suites.
//!
//! Each suite compares two or more independent routes to the same quantity
//! (closed forms, enumeration, fold reduction, transfer matrices) and
//! records every case with its expected and actual value. Cases that do not
//! fit the face budget are listed as skips, never dropped.

use std::fmt::Display;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{euler_from_fvector, f_vector, link_graph, FaceBudget};
use crate::error::{Error, Result};
use crate::graph::{Family, FamilyTag, Graph};
use crate::homology::WedgeOfSpheres;
use crate::homology::{betti_of_family, homology, reduced_homology, BettiProfile, Coefficients};
use crate::predict::{chi_of_wedge, expected_f6, predict_family, predict_gamma};
use crate::transfer::{period_of, TransferModel};

pub const DEFAULT_SEED: u64 = 0x1d_c0de;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub input: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub runtime: f64,
    pub budget_skips: Vec<String>,
}

impl VerificationReport {
    /// True iff every case that ran passed.
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn summary(&self) -> String {
        let ok = self.cases.iter().filter(|c| c.pass).count();
        format!(
            "{:<22} {} {}/{} passed, {} skipped ({:.2}s)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            ok,
            self.cases.len(),
            self.budget_skips.len(),
            self.runtime
        )
    }
}

/// Outcome of a single case before it is filed into a report.
enum Outcome {
    Checked(CaseResult),
    Skipped(String),
}

fn case(
    input: impl Into<String>,
    expected: impl Display,
    actual: impl Display,
    pass: bool,
) -> Outcome {
    Outcome::Checked(CaseResult {
        input: input.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
        pass,
    })
}

fn eq_case<T: Display + PartialEq>(input: impl Into<String>, expected: T, actual: T) -> Outcome {
    let pass = expected == actual;
    case(input, expected, actual, pass)
}

/// Turns budget errors into skips and any other error into a failed case.
fn guarded(input: String, f: impl FnOnce() -> Result<Outcome>) -> Outcome {
    match f() {
        Ok(o) => o,
        Err(
            e @ (Error::FaceBudgetExceeded { .. }
            | Error::IntegralTooLarge { .. }
            | Error::TooManyVertices(_)),
        ) => Outcome::Skipped(format!("{input}: {e}")),
        Err(e) => case(input, "no error", format!("error: {e}"), false),
    }
}

fn assemble(suite: &str, started: Instant, outcomes: Vec<Outcome>) -> VerificationReport {
    let mut cases = Vec::new();
    let mut budget_skips = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Checked(c) => cases.push(c),
            Outcome::Skipped(s) => budget_skips.push(s),
        }
    }
    VerificationReport {
        suite: suite.to_string(),
        cases,
        runtime: started.elapsed().as_secs_f64(),
        budget_skips,
    }
}

/// Readable rendering of a Betti profile for reports.
struct Betti<'a>(&'a BettiProfile);

impl Display for Betti<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .0
            .reduced_betti
            .iter()
            .map(|(d, c)| format!("b{d}={c}"))
            .chain(
                self.0
                    .torsion
                    .iter()
                    .map(|t| format!("T{}=Z/{}", t.dim, t.factor)),
            )
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

fn same_betti(expected: &BettiProfile, actual: &BettiProfile) -> bool {
    expected.reduced_betti == actual.reduced_betti && expected.torsion == actual.torsion
}

fn betti_case(input: String, expected: &BettiProfile, actual: &BettiProfile) -> Outcome {
    case(
        input,
        Betti(expected),
        Betti(actual),
        same_betti(expected, actual),
    )
}

/// `χ(I(Γ_{n,6}))` from the transfer matrix, the 28-periodic table and the
/// closed form, for `n = 1..=max_n`.
pub fn verify_euler_table(max_n: u32) -> VerificationReport {
    let started = Instant::now();
    let outcomes = match TransferModel::new(6).and_then(|m| m.sweep(max_n as usize)) {
        Ok(values) => (1..=max_n)
            .map(|n| {
                guarded(format!("n={n}"), || {
                    let table = expected_f6(n)?;
                    let closed = chi_of_wedge(&predict_gamma(n)?);
                    let transfer = values[n as usize - 1];
                    Ok(case(
                        format!("n={n}"),
                        table,
                        format!("transfer={transfer} predicted={closed}"),
                        transfer == table && closed == table,
                    ))
                })
            })
            .collect(),
        Err(e) => vec![case("sweep", "values", format!("error: {e}"), false)],
    };
    assemble("euler-table", started, outcomes)
}

/// Closed-form χ against the transfer matrix for `n = 1..=max_n`.
pub fn verify_predictor_chi(max_n: u32) -> VerificationReport {
    let started = Instant::now();
    let outcomes = match TransferModel::new(6).and_then(|m| m.sweep(max_n as usize)) {
        Ok(values) => (1..=max_n)
            .map(|n| {
                guarded(format!("n={n}"), || {
                    Ok(eq_case(
                        format!("n={n}"),
                        values[n as usize - 1],
                        chi_of_wedge(&predict_gamma(n)?),
                    ))
                })
            })
            .collect(),
        Err(e) => vec![case("sweep", "values", format!("error: {e}"), false)],
    };
    assemble("predictor-chi", started, outcomes)
}

/// Transfer matrix against face enumeration for all grids with `n k <= max_area`.
pub fn verify_transfer_oracle(max_area: u32) -> VerificationReport {
    let started = Instant::now();
    let budget = FaceBudget::default();
    let pairs: Vec<(u32, u32)> = (1..=max_area.min(crate::transfer::MAX_K))
        .flat_map(|k| (1..=max_area / k).map(move |n| (n, k)))
        .collect();
    let outcomes = pairs
        .par_iter()
        .map(|&(n, k)| {
            let input = format!("n={n} k={k}");
            guarded(input.clone(), || {
                let g = Graph::build_gamma(n, k)?;
                let enumerated = euler_from_fvector(&f_vector(&g, budget)?);
                let transfer = TransferModel::new(k)?.chi(n as usize)?;
                Ok(eq_case(input, enumerated, transfer))
            })
        })
        .collect();
    assemble("transfer-oracle", started, outcomes)
}

fn predicted_profile(family: Family, coefficients: Coefficients) -> Result<BettiProfile> {
    Ok(predict_family(family)?.betti(coefficients))
}

/// Fold-reduced homology of every family member with `n <= max_n` against
/// the closed forms. With integer coefficients torsion must be empty.
pub fn verify_small_homology(
    max_n: u32,
    coefficients: Coefficients,
    budget: FaceBudget,
) -> VerificationReport {
    verify_homology_range(1, max_n, coefficients, budget, true, "small-homology")
}

/// As [`verify_small_homology`] but on the full complexes, without fold
/// reduction.
pub fn verify_brute_homology(
    max_n: u32,
    coefficients: Coefficients,
    budget: FaceBudget,
) -> VerificationReport {
    verify_homology_range(1, max_n, coefficients, budget, false, "brute-homology")
}

fn verify_homology_range(
    min_n: u32,
    max_n: u32,
    coefficients: Coefficients,
    budget: FaceBudget,
    fold: bool,
    suite: &str,
) -> VerificationReport {
    let started = Instant::now();
    let families: Vec<Family> = (min_n..=max_n)
        .flat_map(|n| FamilyTag::ALL.into_iter().map(move |t| t.with(n, 6)))
        .collect();
    let outcomes = families
        .par_iter()
        .map(|&f| {
            let input = format!("{f} {coefficients}");
            guarded(input.clone(), || {
                let expected = predicted_profile(f, coefficients)?;
                let actual = if fold {
                    betti_of_family(f, coefficients, budget)?.profile
                } else {
                    homology(&Graph::build_family(f)?, coefficients, budget)?
                };
                Ok(betti_case(input, &expected, &actual))
            })
        })
        .collect();
    assemble(suite, started, outcomes)
}

fn family_betti(f: Family, budget: FaceBudget) -> Result<BettiProfile> {
    Ok(betti_of_family(f, Coefficients::GF2, budget)?.profile)
}

/// Computes `(expected, actual)` for one identity.
type SplitJob = Box<dyn Fn() -> Result<(BettiProfile, BettiProfile)> + Send + Sync>;

/// Betti additivity of the cofiber splittings and the two deleted
/// neighbourhood suspension identities, for every applicable `n <= max_n`.
/// All sides are computed from homology, not from the closed forms.
pub fn verify_splittings(max_n: u32, budget: FaceBudget) -> VerificationReport {
    let started = Instant::now();
    let mut jobs: Vec<(String, SplitJob)> = Vec::new();
    for n in 4..=max_n {
        jobs.push((
            format!("A({n}) = X({n}) v S^4 B({})", n - 3),
            Box::new(move || {
                let lhs = family_betti(Family::A(n), budget)?;
                let rhs = family_betti(Family::X(n), budget)?
                    .plus(&family_betti(Family::B(n - 3), budget)?.shifted(4));
                Ok((rhs, lhs))
            }),
        ));
        jobs.push((
            format!("A({n}) - N[v] = S^3 B({})", n - 3),
            Box::new(move || {
                let a = Graph::build_family(Family::A(n))?;
                let v = a.index_of(Family::A(n).v()).expect("v_n is in A_n");
                let lhs = reduced_homology(&link_graph(&a, v)?, Coefficients::GF2, budget)?.profile;
                let rhs = family_betti(Family::B(n - 3), budget)?.shifted(3);
                Ok((rhs, lhs))
            }),
        ));
    }
    for n in 5..=max_n {
        jobs.push((
            format!("B({n}) = Y({n}) v S^6 A({})", n - 4),
            Box::new(move || {
                let lhs = family_betti(Family::B(n), budget)?;
                let rhs = family_betti(Family::Y(n), budget)?
                    .plus(&family_betti(Family::A(n - 4), budget)?.shifted(6));
                Ok((rhs, lhs))
            }),
        ));
        jobs.push((
            format!("Gamma({n}) = Y({n}) v 2 S^6 A({})", n - 4),
            Box::new(move || {
                let lhs = family_betti(Family::Gamma { n, k: 6 }, budget)?;
                let a = family_betti(Family::A(n - 4), budget)?.shifted(6);
                let rhs = family_betti(Family::Y(n), budget)?.plus(&a).plus(&a);
                Ok((rhs, lhs))
            }),
        ));
        jobs.push((
            format!("B({n}) - N[v] = S^5 A({})", n - 4),
            Box::new(move || {
                let b = Graph::build_family(Family::B(n))?;
                let v = b.index_of(Family::B(n).v()).expect("v_n is in B_n");
                let lhs = reduced_homology(&link_graph(&b, v)?, Coefficients::GF2, budget)?.profile;
                let rhs = family_betti(Family::A(n - 4), budget)?.shifted(5);
                Ok((rhs, lhs))
            }),
        ));
    }
    let outcomes = jobs
        .par_iter()
        .map(|(input, job)| {
            guarded(input.clone(), || {
                let (expected, actual) = job()?;
                Ok(betti_case(input.clone(), &expected, &actual))
            })
        })
        .collect();
    assemble("splittings", started, outcomes)
}

/// A random induced subgraph of `Γ_{n,6}` with `n <= 4` and at most 20
/// vertices.
pub fn random_grid_subgraph(rng: &mut impl Rng) -> Graph {
    let n = rng.gen_range(1..=4u32);
    let g = Graph::build_gamma(n, 6).expect("n >= 1");
    let size = rng.gen_range(0..=g.len().min(20));
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.shuffle(rng);
    let mut drop = order.split_off(size);
    drop.sort_unstable();
    g.delete_vertices(&drop).expect("indices come from g")
}

/// Homology before and after fold reduction on `count` seeded random
/// induced subgraphs.
pub fn verify_fold_soundness(seed: u64, count: usize, budget: FaceBudget) -> VerificationReport {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<Graph> = (0..count).map(|_| random_grid_subgraph(&mut rng)).collect();
    let outcomes = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| {
            let coords: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
            let input = format!(
                "seed={seed} case={i} n={} kept=[{}]",
                g.n(),
                coords.join("")
            );
            guarded(input.clone(), || {
                let direct = homology(g, Coefficients::GF2, budget)?;
                let reduced = reduced_homology(g, Coefficients::GF2, budget)?.profile;
                Ok(betti_case(input, &direct, &reduced))
            })
        })
        .collect();
    assemble("fold-soundness", started, outcomes)
}

fn wedge_case(input: String, expected: &WedgeOfSpheres, actual: &WedgeOfSpheres) -> Outcome {
    eq_case(input, expected.to_string(), actual.to_string())
}

/// Multiset identities among the closed forms for all `n <= max_n`.
pub fn verify_formula_consistency(max_n: u32) -> VerificationReport {
    let started = Instant::now();
    let p = |f: Family| predict_family(f).expect("valid family");
    let mut outcomes = Vec::new();
    for n in 1..=max_n {
        let gamma = predict_gamma(n).expect("n >= 1");
        outcomes.push(eq_case(
            format!("chi Gamma({n})"),
            expected_f6(n).expect("n >= 1"),
            chi_of_wedge(&gamma),
        ));
        if n >= 5 {
            let rhs = p(Family::Y(n)).wedge(&p(Family::A(n - 4)).suspend(6).repeat(2));
            outcomes.push(wedge_case(
                format!("Gamma({n}) = Y v 2 S^6 A"),
                &rhs,
                &gamma,
            ));
            let rhs = p(Family::Y(n)).wedge(&p(Family::A(n - 4)).suspend(6));
            outcomes.push(wedge_case(
                format!("B({n}) = Y v S^6 A"),
                &rhs,
                &p(Family::B(n)),
            ));
        }
        if n >= 4 {
            let rhs = p(Family::X(n)).wedge(&p(Family::B(n - 3)).suspend(4));
            outcomes.push(wedge_case(
                format!("A({n}) = X v S^4 B"),
                &rhs,
                &p(Family::A(n)),
            ));
        }
        if n >= 8 {
            let rhs = p(Family::X(n))
                .wedge(&p(Family::Y(n - 3)).suspend(4))
                .wedge(&p(Family::A(n - 7)).suspend(10));
            outcomes.push(wedge_case(
                format!("A({n}) = X v S^4 Y v S^10 A"),
                &rhs,
                &p(Family::A(n)),
            ));
        }
        if n % 2 == 1 && n >= 15 {
            let k = ((n - 1) / 2) as i32;
            let rhs = WedgeOfSpheres::spheres(3 * k, 3).wedge(&p(Family::A(n - 14)).suspend(20));
            outcomes.push(wedge_case(
                format!("A({n}) = 3 S^{} v S^20 A", 3 * k),
                &rhs,
                &p(Family::A(n)),
            ));
        }
        // dimension bounds
        let half = (n / 2) as i32;
        let (a_bound, b_bound) = if n % 2 == 1 {
            (3 * half, 3 * half + 1)
        } else {
            (3 * half - 1, 3 * half - 1)
        };
        for (f, bound) in [(Family::A(n), a_bound), (Family::B(n), b_bound)] {
            let top = p(f).max_dim();
            outcomes.push(case(
                format!("dim {f} <= {bound}"),
                format!("<= {bound}"),
                top.map_or("pt".to_string(), |d| d.to_string()),
                top.is_none_or(|d| d <= bound),
            ));
        }
    }
    assemble("formula-consistency", started, outcomes)
}

/// Maxima of `|values|` over consecutive blocks of `block` entries.
pub fn block_maxima(values: &[i64], block: usize) -> Vec<i64> {
    values
        .chunks(block)
        .map(|c| c.iter().map(|v| v.abs()).max().unwrap_or(0))
        .collect()
}

/// Periods of `n -> χ(I(Γ_{n,k}))` for `k = 1, 2, 3, 5`, and unbounded
/// growth without a period for `k = 4`.
pub fn verify_literature_periods() -> VerificationReport {
    let started = Instant::now();
    let mut outcomes = Vec::new();
    for (k, period, window) in [
        (1u32, 6usize, 100usize),
        (2, 4, 100),
        (3, 8, 100),
        (5, 40, 200),
    ] {
        outcomes.push(guarded(format!("k={k}"), || {
            let values = TransferModel::new(k)?.sweep(window)?;
            let found = period_of(&values);
            Ok(case(
                format!("k={k} window={window}"),
                period,
                found.map_or("none".to_string(), |p| p.to_string()),
                found == Some(period),
            ))
        }));
    }
    outcomes.push(guarded("k=4".to_string(), || {
        let values = TransferModel::new(4)?.sweep(400)?;
        let found = period_of(&values);
        let maxima = block_maxima(&values, 50);
        let growing = maxima.windows(2).all(|w| w[1] > w[0]);
        Ok(case(
            "k=4 window=400",
            "no period, block maxima strictly increasing",
            format!(
                "period={} maxima={:?}",
                found.map_or("none".to_string(), |p| p.to_string()),
                maxima
            ),
            found.is_none() && growing,
        ))
    }));
    assemble("literature-periods", started, outcomes)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub budget: FaceBudget,
    /// Adds the `n = 5` family homology check over `GF(2)` on the full
    /// complexes.
    pub deep: bool,
    /// Adds `n = 6` as well, through fold reduction.
    pub deeper: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            budget: FaceBudget::default(),
            deep: false,
            deeper: false,
        }
    }
}

pub const SUITES: [&str; 11] = [
    "euler-table",
    "predictor-chi",
    "transfer-oracle",
    "small-homology",
    "small-homology-int",
    "brute-homology",
    "brute-homology-int",
    "splittings",
    "fold-soundness",
    "formula-consistency",
    "literature-periods",
];

/// Runs one named suite. Unknown names yield `None`.
pub fn run_suite(name: &str, opts: &VerifyOptions) -> Option<VerificationReport> {
    Some(match name {
        "euler-table" => verify_euler_table(56),
        "predictor-chi" => verify_predictor_chi(500),
        "transfer-oracle" => verify_transfer_oracle(30),
        "small-homology" => verify_small_homology(4, Coefficients::GF2, opts.budget),
        "small-homology-int" => {
            let mut r = verify_small_homology(4, Coefficients::Integers, opts.budget);
            r.suite = name.to_string();
            r
        }
        "brute-homology" => verify_brute_homology(4, Coefficients::GF2, opts.budget),
        "brute-homology-int" => {
            let mut r = verify_brute_homology(4, Coefficients::Integers, opts.budget);
            r.suite = name.to_string();
            r
        }
        "splittings" => verify_splittings(5, opts.budget),
        "fold-soundness" => verify_fold_soundness(opts.seed, 200, opts.budget),
        "formula-consistency" => verify_formula_consistency(500),
        "literature-periods" => verify_literature_periods(),
        "deep-homology" => verify_homology_range(5, 5, Coefficients::GF2, opts.budget, false, name),
        "deeper-homology" => {
            verify_homology_range(6, 6, Coefficients::GF2, opts.budget, true, name)
        }
        _ => return None,
    })
}

/// Every standard suite, plus the deep ones when requested.
pub fn run_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    let mut names: Vec<&str> = SUITES.to_vec();
    if opts.deep || opts.deeper {
        names.push("deep-homology");
    }
    if opts.deeper {
        names.push("deeper-homology");
    }
    names
        .into_iter()
        .map(|n| run_suite(n, opts).expect("listed suites exist"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_table_spot_cases() {
        let r = verify_euler_table(56);
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        let find = |n: u32| {
            r.cases
                .iter()
                .find(|c| c.input == format!("n={n}"))
                .unwrap()
        };
        assert_eq!(find(11).expected, "-2");
        assert_eq!(find(39).expected, "-2");
        assert_eq!(find(1).expected, "0");
    }

    #[test]
    fn random_subgraphs_are_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (g, h) = (random_grid_subgraph(&mut a), random_grid_subgraph(&mut b));
            assert_eq!(g, h);
            assert!(g.len() <= 20);
            assert!(g.n() <= 4);
        }
    }

    #[test]
    fn report_json_is_stable() {
        let mut r = verify_formula_consistency(30);
        r.runtime = 0.0;
        let a = serde_json::to_string(&r).unwrap();
        let mut again = verify_formula_consistency(30);
        again.runtime = 0.0;
        assert_eq!(a, serde_json::to_string(&again).unwrap());
        assert!(r.passed());
    }

    #[test]
    fn budget_errors_become_skips() {
        let r = verify_fold_soundness(1, 30, FaceBudget::new(3));
        assert!(!r.budget_skips.is_empty());
        assert!(r.passed());
        assert_eq!(r.cases.len() + r.budget_skips.len(), 30);
    }

    #[test]
    fn blocks() {
        assert_eq!(block_maxima(&[1, -5, 2, 3, -1], 2), vec![5, 3, 1]);
    }
}
