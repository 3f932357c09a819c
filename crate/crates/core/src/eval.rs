//! AUC-ROC, bootstrap confidence intervals and completion accuracy.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::scalar::{mean, ordered_sum, Scalar};
use crate::scoring::Method;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("scores must contain both members and non-members")]
    SingleClass,
    #[error("score values must be finite")]
    NonFinite,
    #[error("sequences differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("sequence is empty")]
    Empty,
    #[error("at least one bootstrap resample is required")]
    NoResamples,
}

fn split<F: Scalar>(scores: &[(F, bool)]) -> Result<(Vec<F>, Vec<F>), EvalError> {
    if scores.iter().any(|(v, _)| !v.is_finite()) {
        return Err(EvalError::NonFinite);
    }
    let members = scores.iter().filter(|s| s.1).map(|s| s.0).collect::<Vec<_>>();
    let nonmembers = scores.iter().filter(|s| !s.1).map(|s| s.0).collect::<Vec<_>>();
    if members.is_empty() || nonmembers.is_empty() {
        return Err(EvalError::SingleClass);
    }
    Ok((members, nonmembers))
}

/// Twice the Mann-Whitney U statistic for "member score below non-member
/// score": each strictly ordered pair counts 2, each tie counts 1.
/// Integer valued, so the AUC built from it is exact up to one division.
pub fn mann_whitney_u2<F: Scalar>(members: &[F], nonmembers: &[F]) -> u128 {
    let mut sorted = nonmembers.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    members
        .iter()
        .map(|m| {
            let below = sorted.partition_point(|x| x < m);
            let upto = sorted.partition_point(|x| x <= m);
            let greater = sorted.len() - upto;
            (2 * greater + (upto - below)) as u128
        })
        .sum()
}

fn auc_of<F: Scalar>(members: &[F], nonmembers: &[F]) -> F {
    let pairs = 2 * members.len() as u128 * nonmembers.len() as u128;
    F::from_u128(mann_whitney_u2(members, nonmembers)).unwrap() / F::from_u128(pairs).unwrap()
}

/// AUC of the classifier "lower score means member".
pub fn auc_roc<F: Scalar>(scores: &[(F, bool)]) -> Result<F, EvalError> {
    let (m, n) = split(scores)?;
    Ok(auc_of(&m, &n))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RocResult<F> {
    pub auc: F,
    pub bootstrap_mean: F,
    pub ci_low: F,
    pub ci_high: F,
    pub n_boot: usize,
    pub seed: u64,
}

/// Linear interpolation between closest ranks of sorted data.
pub fn percentile<F: Scalar>(sorted: &[F], q: F) -> F {
    let pos = q * F::count(sorted.len() - 1);
    let lo = pos.floor().to_usize().unwrap();
    let hi = (lo + 1).min(sorted.len() - 1);
    let frac = pos - F::count(lo);
    sorted[lo] + (sorted[hi] - sorted[lo]) * frac
}

/// Stratified bootstrap: members and non-members are resampled separately at
/// their original sizes. Resample `i` draws from its own generator seeded
/// with `seed + i`, so results do not depend on scheduling.
pub fn bootstrap_auc<F: Scalar>(scores: &[(F, bool)], n_boot: usize, seed: u64) -> Result<RocResult<F>, EvalError> {
    if n_boot == 0 {
        return Err(EvalError::NoResamples);
    }
    let (m, n) = split(scores)?;
    let aucs: Vec<F> = (0..n_boot)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i as u64));
            let rm: Vec<F> = (0..m.len()).map(|_| m[rng.random_range(0..m.len())]).collect();
            let rn: Vec<F> = (0..n.len()).map(|_| n[rng.random_range(0..n.len())]).collect();
            auc_of(&rm, &rn)
        })
        .collect();
    let bootstrap_mean = mean(&aucs);
    let mut sorted = aucs;
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(RocResult {
        auc: auc_of(&m, &n),
        bootstrap_mean,
        ci_low: percentile(&sorted, F::lit(0.025)),
        ci_high: percentile(&sorted, F::lit(0.975)),
        n_boot,
        seed,
    })
}

/// Fraction of positions where the prediction equals the reference.
pub fn token_accuracy<F: Scalar, T: PartialEq>(reference: &[T], predicted: &[T]) -> Result<F, EvalError> {
    if reference.len() != predicted.len() {
        return Err(EvalError::LengthMismatch(reference.len(), predicted.len()));
    }
    if reference.is_empty() {
        return Err(EvalError::Empty);
    }
    let hits = reference.iter().zip(predicted).filter(|(a, b)| a == b).count();
    Ok(F::count(hits) / F::count(reference.len()))
}

/// Mean per-sample accuracy.
pub fn dataset_accuracy<F: Scalar>(per_sample: &[F]) -> Result<F, EvalError> {
    if per_sample.is_empty() {
        return Err(EvalError::Empty);
    }
    Ok(ordered_sum(per_sample.iter().copied()) / F::count(per_sample.len()))
}

/// Evaluation report for one scoring method.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub method: Method,
    pub auc: f64,
    pub bootstrap_mean: f64,
    pub ci: [f64; 2],
    pub n_member: usize,
    pub n_nonmember: usize,
    pub seed: u64,
}

impl EvalReport {
    pub fn new(method: Method, roc: &RocResult<f64>, n_member: usize, n_nonmember: usize) -> Self {
        EvalReport {
            method,
            auc: roc.auc,
            bootstrap_mean: roc.bootstrap_mean,
            ci: [roc.ci_low, roc.ci_high],
            n_member,
            n_nonmember,
            seed: roc.seed,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labelled(m: &[f64], n: &[f64]) -> Vec<(f64, bool)> {
        m.iter().map(|&v| (v, true)).chain(n.iter().map(|&v| (v, false))).collect()
    }

    #[test]
    fn auc_examples() {
        assert_eq!(auc_roc(&labelled(&[0.1, 0.2], &[0.8, 0.9])).unwrap(), 1.0);
        assert_eq!(auc_roc(&labelled(&[0.2, 0.4], &[0.3, 0.5])).unwrap(), 0.75);
        assert_eq!(auc_roc(&labelled(&[1.0, 1.0], &[1.0, 1.0, 1.0])).unwrap(), 0.5);
        assert_eq!(auc_roc(&labelled(&[0.9], &[0.1])).unwrap(), 0.0);
    }

    #[test]
    fn auc_rejects_single_class_and_nan() {
        assert_eq!(auc_roc(&labelled(&[1.0], &[])).unwrap_err(), EvalError::SingleClass);
        assert_eq!(auc_roc(&labelled(&[f64::NAN], &[1.0])).unwrap_err(), EvalError::NonFinite);
    }

    #[test]
    fn separated_bootstrap_is_degenerate() {
        let r = bootstrap_auc(&labelled(&[0.1, 0.2, 0.3], &[0.8, 0.9]), 200, 42).unwrap();
        assert_eq!((r.auc, r.bootstrap_mean, r.ci_low, r.ci_high), (1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn single_resample_equals_its_auc() {
        let s = labelled(&[0.2, 0.4, 0.1, 0.7], &[0.3, 0.5, 0.6]);
        let r = bootstrap_auc(&s, 1, 9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let m = [0.2, 0.4, 0.1, 0.7];
        let n = [0.3, 0.5, 0.6];
        let rm: Vec<f64> = (0..4).map(|_| m[rng.random_range(0..4)]).collect();
        let rn: Vec<f64> = (0..3).map(|_| n[rng.random_range(0..3)]).collect();
        let expect = auc_roc(&labelled(&rm, &rn)).unwrap();
        assert_eq!(r.bootstrap_mean, expect);
        assert_eq!(r.ci_low, expect);
        assert_eq!(r.ci_high, expect);
    }

    #[test]
    fn percentile_interpolates() {
        assert_eq!(percentile(&[1.0, 2.0, 3.0, 4.0], 0.5), 2.5);
        assert_eq!(percentile(&[5.0], 0.975), 5.0);
    }

    #[test]
    fn accuracy_examples() {
        let a = ["a", "b", "c"];
        assert_eq!(token_accuracy::<f64, _>(&a, &a).unwrap(), 1.0);
        assert_eq!(token_accuracy::<f64, _>(&a, &["a", "x", "c"]).unwrap(), 2.0 / 3.0);
        assert_eq!(
            token_accuracy::<f64, _>(&a, &["a"]).unwrap_err(),
            EvalError::LengthMismatch(3, 1)
        );
    }
}
