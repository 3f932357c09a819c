//! Member / non-member evaluation sets.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use sect_java::SourceUnit;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DatasetError {
    #[error("no applicable members for rule {0}")]
    NoApplicableMembers(String),
    #[error("test pool has no eligible non-members")]
    NoNonmembers,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DatasetParams {
    pub max_per_side: usize,
    /// Samples need strictly more words than this.
    pub min_words: usize,
    pub max_words: usize,
    pub seed: u64,
}

impl Default for DatasetParams {
    fn default() -> Self {
        DatasetParams {
            max_per_side: 1000,
            min_words: 100,
            max_words: 200,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MIDataset {
    pub rule_id: String,
    pub members: Vec<SourceUnit>,
    pub nonmembers: Vec<SourceUnit>,
    pub parameters: DatasetParams,
}

/// Draws members from rule-applicable training units and an equal number of
/// non-members from the test pool. Both sides keep only units longer than
/// `min_words` words, truncated to their first `max_words`.
///
/// The member count is capped by the number of eligible non-members so the
/// two sides always have equal size.
pub fn build_dataset(
    train_pool: &[SourceUnit],
    test_pool: &[SourceUnit],
    rule_id: &str,
    applicable: impl Fn(&SourceUnit) -> bool,
    params: DatasetParams,
) -> Result<MIDataset, DatasetError> {
    let long_enough = |u: &SourceUnit| u.word_count > params.min_words;
    let eligible_m: Vec<&SourceUnit> = train_pool
        .iter()
        .filter(|u| long_enough(u) && applicable(u))
        .collect();
    if eligible_m.is_empty() {
        return Err(DatasetError::NoApplicableMembers(rule_id.to_owned()));
    }
    let eligible_n: Vec<&SourceUnit> = test_pool.iter().filter(|u| long_enough(u)).collect();
    if eligible_n.is_empty() {
        return Err(DatasetError::NoNonmembers);
    }
    let n = eligible_m.len().min(eligible_n.len()).min(params.max_per_side);
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut pick = |pool: &[&SourceUnit]| -> Vec<SourceUnit> {
        let mut idx = index::sample(&mut rng, pool.len(), n).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| pool[i].truncated(params.max_words)).collect()
    };
    let members = pick(&eligible_m);
    let nonmembers = pick(&eligible_n);
    Ok(MIDataset {
        rule_id: rule_id.to_owned(),
        members,
        nonmembers,
        parameters: params,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(i: usize, words: usize) -> SourceUnit {
        let text: Vec<String> = (0..words).map(|w| format!("w{w}")).collect();
        SourceUnit::new(format!("u{i}"), format!("u{i}.java"), text.join(" "))
    }

    #[test]
    fn keeps_every_applicable_member_below_the_cap() {
        let train: Vec<_> = (0..400).map(|i| unit(i, 150)).collect();
        let test: Vec<_> = (0..500).map(|i| unit(1000 + i, 150)).collect();
        let ds = build_dataset(&train, &test, "4", |u| u.id[1..].parse::<usize>().unwrap() < 307, DatasetParams::default()).unwrap();
        assert_eq!(ds.members.len(), 307);
        assert_eq!(ds.nonmembers.len(), 307);
    }

    #[test]
    fn caps_at_max_per_side() {
        let train: Vec<_> = (0..30).map(|i| unit(i, 101)).collect();
        let test: Vec<_> = (0..30).map(|i| unit(100 + i, 101)).collect();
        let params = DatasetParams { max_per_side: 10, ..Default::default() };
        let ds = build_dataset(&train, &test, "1", |_| true, params).unwrap();
        assert_eq!((ds.members.len(), ds.nonmembers.len()), (10, 10));
    }

    #[test]
    fn word_thresholds() {
        let train = vec![unit(0, 90), unit(1, 250), unit(2, 100)];
        let test = vec![unit(3, 120)];
        let ds = build_dataset(&train, &test, "1", |_| true, DatasetParams::default()).unwrap();
        assert_eq!(ds.members.len(), 1);
        assert_eq!(ds.members[0].id, "u1");
        assert_eq!(ds.members[0].word_count, 200);
        assert_eq!(ds.nonmembers[0].word_count, 120);
    }

    #[test]
    fn errors_without_members() {
        let train = vec![unit(0, 150)];
        let test = vec![unit(1, 150)];
        assert_eq!(
            build_dataset(&train, &test, "4", |_| false, DatasetParams::default()).unwrap_err(),
            DatasetError::NoApplicableMembers("4".into())
        );
    }

    #[test]
    fn seed_changes_selection_not_size() {
        let train: Vec<_> = (0..50).map(|i| unit(i, 150)).collect();
        let test: Vec<_> = (0..50).map(|i| unit(100 + i, 150)).collect();
        let p = |seed| DatasetParams { max_per_side: 20, seed, ..Default::default() };
        let a = build_dataset(&train, &test, "1", |_| true, p(1)).unwrap();
        let b = build_dataset(&train, &test, "1", |_| true, p(1)).unwrap();
        let c = build_dataset(&train, &test, "1", |_| true, p(2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.members.len(), c.members.len());
        assert_ne!(a.members, c.members);
    }
}
