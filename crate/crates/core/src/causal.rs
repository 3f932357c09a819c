//! Treatment effect of a transformation on membership scores.
//!
//! Each row is one sample under one treatment arm. The estimate is the
//! coefficient on `T` in the regression `Y ~ 1 + T + Z`, with the code
//! features `Z` standardised first.

use std::collections::{BTreeMap, HashMap};

use rand::seq::{index, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use sect_java::CodeFeatures;

use crate::linalg::{default_tol, least_squares, LinalgError};
use crate::scalar::{mean, ordered_sum, sample_std, Scalar};
use crate::scoring::Method;

pub const ESTIMATOR: &str = "backdoor.linear_regression";
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CausalError {
    #[error("frame needs rows in both treatment arms")]
    SingleArm,
    #[error("treatment must be 0 or 1, got {0}")]
    BadTreatment(u8),
    #[error("outcome column is not finite")]
    NonFinite,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Min-max rescaling `(a - min) / (max - min + eps)`.
///
/// Results are clamped just below one for spreads so wide that `eps` is lost
/// to rounding, keeping every output in `[0, 1)`.
pub fn relative_scores<F: Scalar>(values: &[F], epsilon: F) -> Vec<F> {
    let Some(&first) = values.first() else {
        return Vec::new();
    };
    let (lo, hi) = values.iter().fold((first, first), |(lo, hi), &v| (lo.min(v), hi.max(v)));
    let below_one = F::one() - F::epsilon() / F::lit(2.0);
    let den = hi - lo + epsilon;
    values.iter().map(|&v| ((v - lo) / den).min(below_one)).collect()
}

/// Pearson correlation; `None` when either column has zero variance.
pub fn pearson_r<F: Scalar>(x: &[F], y: &[F]) -> Option<F> {
    if x.len() != y.len() || x.len() < 2 {
        return None;
    }
    let (mx, my) = (mean(x), mean(y));
    let sxy = ordered_sum(x.iter().zip(y).map(|(&a, &b)| (a - mx) * (b - my)));
    let sxx = ordered_sum(x.iter().map(|&a| (a - mx) * (a - mx)));
    let syy = ordered_sum(y.iter().map(|&b| (b - my) * (b - my)));
    if sxx == F::zero() || syy == F::zero() {
        return None;
    }
    Some(sxy / (sxx.sqrt() * syy.sqrt()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CausalRow<F> {
    pub unit_id: String,
    pub treatment: u8,
    pub y0: F,
    pub y1: F,
    pub y2: F,
    pub z: CodeFeatures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Y0,
    Y1,
    Y2,
}

impl Outcome {
    pub const ALL: [Outcome; 3] = [Outcome::Y0, Outcome::Y1, Outcome::Y2];

    pub fn method(self) -> Method {
        match self {
            Outcome::Y0 => Method::Loss,
            Outcome::Y1 => Method::MinK,
            Outcome::Y2 => Method::Zlib,
        }
    }

    pub fn of<F: Scalar>(self, row: &CausalRow<F>) -> F {
        match self {
            Outcome::Y0 => row.y0,
            Outcome::Y1 => row.y1,
            Outcome::Y2 => row.y2,
        }
    }
}

/// Regression inputs: treatment, outcome and named confounder columns.
#[derive(Debug, Clone)]
pub struct Design<F> {
    pub t: Vec<F>,
    pub y: Vec<F>,
    pub z: Vec<(String, Vec<F>)>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AteFit<F> {
    pub ate: F,
    /// Confounders left out: constant or collinear with earlier columns.
    pub dropped: Vec<String>,
}

impl<F: Scalar> Design<F> {
    pub fn from_frame(frame: &[CausalRow<F>], outcome: Outcome) -> Result<Self, CausalError> {
        let mut t = Vec::with_capacity(frame.len());
        for r in frame {
            if r.treatment > 1 {
                return Err(CausalError::BadTreatment(r.treatment));
            }
            t.push(F::count(r.treatment as usize));
        }
        let y = frame.iter().map(|r| outcome.of(r)).collect();
        let z = CodeFeatures::NAMES
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let col = frame.iter().map(|r| F::from_u64(r.z.as_array()[i]).unwrap()).collect();
                (name.to_string(), col)
            })
            .collect();
        Ok(Design { t, y, z })
    }

    fn check(&self) -> Result<(), CausalError> {
        let treated = self.t.iter().filter(|&&v| v == F::one()).count();
        if treated == 0 || treated == self.t.len() {
            return Err(CausalError::SingleArm);
        }
        if self.y.iter().any(|v| !v.is_finite()) {
            return Err(CausalError::NonFinite);
        }
        Ok(())
    }

    pub fn subset(&self, rows: &[usize]) -> Design<F> {
        let pick = |c: &[F]| rows.iter().map(|&i| c[i]).collect::<Vec<F>>();
        Design {
            t: pick(&self.t),
            y: pick(&self.y),
            z: self.z.iter().map(|(n, c)| (n.clone(), pick(c))).collect(),
        }
    }

    /// Backdoor-adjusted effect of `t` on `y`.
    pub fn estimate(&self) -> Result<AteFit<F>, CausalError> {
        self.check()?;
        let n = self.y.len();
        let mut cols = vec![vec![F::one(); n], self.t.clone()];
        let mut names = Vec::new();
        let mut dropped = Vec::new();
        for (name, col) in &self.z {
            let m = mean(col);
            let sd = sample_std(col);
            // NaN spreads fail the first test too.
            if sd.partial_cmp(&F::zero()) != Some(std::cmp::Ordering::Greater) || sd <= F::epsilon() * m.abs() {
                dropped.push(name.clone());
                continue;
            }
            cols.push(col.iter().map(|&v| (v - m) / sd).collect());
            names.push(name.clone());
        }
        let fit = least_squares(&cols, &self.y, 2, default_tol())?;
        for (i, name) in names.into_iter().enumerate() {
            if fit.coef[i + 2].is_none() {
                dropped.push(name);
            }
        }
        Ok(AteFit {
            ate: fit.coef[1].expect("treatment column is required"),
            dropped,
        })
    }
}

pub fn estimate_ate<F: Scalar>(frame: &[CausalRow<F>], outcome: Outcome) -> Result<AteFit<F>, CausalError> {
    Design::from_frame(frame, outcome)?.estimate()
}

/// Correlation between treatment and outcome.
pub fn pearson<F: Scalar>(frame: &[CausalRow<F>], outcome: Outcome) -> Result<Option<F>, CausalError> {
    let d = Design::from_frame(frame, outcome)?;
    d.check()?;
    Ok(pearson_r(&d.t, &d.y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Refuter {
    /// Random common cause.
    R1,
    /// Placebo treatment.
    R2,
    /// Unobserved confounder.
    R3,
    /// Data subsets.
    R4,
}

impl Refuter {
    pub const ALL: [Refuter; 4] = [Refuter::R1, Refuter::R2, Refuter::R3, Refuter::R4];
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Refutation<F> {
    pub new_value: F,
    pub passed: bool,
    /// Standard deviation of the subset estimates (data-subset refuter only).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub std: Option<F>,
}

/// Strength of the synthetic unobserved confounder's link to `T` and `Y`.
pub const CONFOUNDER_CORRELATION: f64 = 0.2;
pub const SUBSETS: usize = 10;
pub const SUBSET_FRACTION: f64 = 0.8;

fn normals<F: Scalar>(rng: &mut ChaCha8Rng, n: usize) -> Vec<F> {
    (0..n)
        .map(|_| F::lit(<StandardNormal as Distribution<f64>>::sample(&StandardNormal, rng)))
        .collect()
}

fn standardized<F: Scalar>(x: &[F]) -> Vec<F> {
    let m = mean(x);
    let sd = sample_std(x);
    if sd > F::zero() {
        x.iter().map(|&v| (v - m) / sd).collect()
    } else {
        vec![F::zero(); x.len()]
    }
}

/// Column correlated by about `rho` with both `t` and `y`.
///
/// With `t` and `y` standardised and correlated by `r`, the column
/// `a (t + y) + e` with unit normal noise `e` has correlation `rho` to each
/// when `a = rho / sqrt((1 + r)(1 + r - 2 rho^2))`.
pub fn synthetic_confounder<F: Scalar>(t: &[F], y: &[F], rho: F, rng: &mut ChaCha8Rng) -> Vec<F> {
    let ts = standardized(t);
    let ys = standardized(y);
    let two_rho2 = F::lit(2.0) * rho * rho;
    let r = pearson_r(&ts, &ys)
        .unwrap_or(F::zero())
        .max(two_rho2 - F::one() + F::lit(1e-6));
    let a = rho / ((F::one() + r) * (F::one() + r - two_rho2)).sqrt();
    let e = normals::<F>(rng, t.len());
    (0..t.len()).map(|i| a * (ts[i] + ys[i]) + e[i]).collect()
}

fn stable<F: Scalar>(base: F, new: F) -> bool {
    (new - base).abs() <= F::lit(0.05).max(F::lit(0.1) * base.abs())
}

impl<F: Scalar> Design<F> {
    pub fn refute(&self, method: Refuter, seed: u64) -> Result<Refutation<F>, CausalError> {
        let base = self.estimate()?.ate;
        let n = self.y.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match method {
            Refuter::R1 => {
                let mut d = self.clone();
                d.z.push(("random_common_cause".into(), normals(&mut rng, n)));
                let new = d.estimate()?.ate;
                Ok(Refutation { new_value: new, passed: stable(base, new), std: None })
            }
            Refuter::R2 => {
                let mut d = self.clone();
                d.t.shuffle(&mut rng);
                let new = d.estimate()?.ate;
                Ok(Refutation { new_value: new, passed: new.abs() <= F::lit(0.05), std: None })
            }
            Refuter::R3 => {
                let u = synthetic_confounder(&self.t, &self.y, F::lit(CONFOUNDER_CORRELATION), &mut rng);
                let mut d = self.clone();
                d.z.push(("unobserved_confounder".into(), u));
                let new = d.estimate()?.ate;
                Ok(Refutation { new_value: new, passed: stable(base, new), std: None })
            }
            Refuter::R4 => {
                let size = (F::lit(SUBSET_FRACTION) * F::count(n)).floor().to_usize().unwrap();
                let ates = (0..SUBSETS)
                    .map(|i| {
                        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
                        let mut rows = index::sample(&mut rng, n, size).into_vec();
                        rows.sort_unstable();
                        self.subset(&rows).estimate().map(|f| f.ate)
                    })
                    .collect::<Result<Vec<F>, _>>()?;
                let sd = sample_std(&ates);
                Ok(Refutation { new_value: mean(&ates), passed: sd <= F::lit(0.1), std: Some(sd) })
            }
        }
    }
}

pub fn refute<F: Scalar>(
    frame: &[CausalRow<F>],
    outcome: Outcome,
    method: Refuter,
    seed: u64,
) -> Result<Refutation<F>, CausalError> {
    Design::from_frame(frame, outcome)?.refute(method, seed)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeReport<F> {
    pub outcome: Outcome,
    pub p: Option<F>,
    pub ate: F,
    pub dropped_confounders: Vec<String>,
    pub refutations: BTreeMap<Refuter, Refutation<F>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AteReport<F> {
    pub rule_id: String,
    pub estimator: String,
    pub n_rows: usize,
    pub seed: u64,
    /// Keyed by scoring method.
    pub outcomes: BTreeMap<Method, OutcomeReport<F>>,
}

/// Estimate, correlation and all four refutations for every outcome.
pub fn analyze<F: Scalar>(frame: &[CausalRow<F>], rule_id: &str, seed: u64) -> Result<AteReport<F>, CausalError> {
    let mut outcomes = BTreeMap::new();
    for o in Outcome::ALL {
        let d = Design::from_frame(frame, o)?;
        let fit = d.estimate()?;
        let mut refutations = BTreeMap::new();
        for r in Refuter::ALL {
            refutations.insert(r, d.refute(r, seed)?);
        }
        outcomes.insert(
            o.method(),
            OutcomeReport {
                outcome: o,
                p: pearson_r(&d.t, &d.y),
                ate: fit.ate,
                dropped_confounders: fit.dropped,
                refutations,
            },
        );
    }
    Ok(AteReport {
        rule_id: rule_id.to_owned(),
        estimator: ESTIMATOR.to_owned(),
        n_rows: frame.len(),
        seed,
        outcomes,
    })
}

/// Raw membership scores of one treatment arm, indexed like `ids`.
#[derive(Debug, Clone)]
pub struct ArmScores<F> {
    pub ids: Vec<String>,
    pub is_member: Vec<bool>,
    /// LOSS, MIN_K, ZLIB columns.
    pub values: [Vec<F>; 3],
}

/// Builds causal rows from the member scores of both arms.
///
/// Scores are negated so larger means "more member-like", then rescaled
/// with [`relative_scores`] over all samples of the arm (members and
/// non-members). Only members become rows, with the features of their
/// original code as confounders. A positive effect therefore means the
/// treatment made members easier to detect.
pub fn build_frame<F: Scalar>(
    arm0: &ArmScores<F>,
    arm1: &ArmScores<F>,
    features: &HashMap<String, CodeFeatures>,
    epsilon: F,
) -> Vec<CausalRow<F>> {
    let mut rows = Vec::new();
    for (t, arm) in [(0u8, arm0), (1u8, arm1)] {
        let rel: Vec<Vec<F>> = arm
            .values
            .iter()
            .map(|col| relative_scores(&col.iter().map(|&v| -v).collect::<Vec<_>>(), epsilon))
            .collect();
        for (i, id) in arm.ids.iter().enumerate() {
            if !arm.is_member[i] {
                continue;
            }
            rows.push(CausalRow {
                unit_id: id.clone(),
                treatment: t,
                y0: rel[0][i],
                y1: rel[1][i],
                y2: rel[2][i],
                z: features.get(id).copied().unwrap_or_default(),
            });
        }
    }
    rows
}
