use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::model::train;
use super::{ClassifierError, LabeledSample};

#[derive(Debug, Clone, PartialEq)]
pub struct CrossValidation {
    /// Mean of the per-fold accuracies.
    pub accuracy: f64,
    pub fold_accuracies: Vec<f64>,
}

/// Assigns each sample index to one of `k` folds after a seeded shuffle.
/// Fold sizes differ by at most one.
pub fn assign_folds(n: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let mut fold = vec![0; n];
    for (pos, &i) in order.iter().enumerate() {
        fold[i] = pos % k;
    }
    fold
}

/// k-fold cross-validation of the multinomial model.
pub fn cross_validate(
    samples: &[LabeledSample],
    k: usize,
    seed: u64,
    alpha: f64,
) -> Result<CrossValidation, ClassifierError> {
    if k < 2 || samples.len() < k {
        return Err(ClassifierError::TooFewSamples {
            samples: samples.len(),
            folds: k,
        });
    }
    let folds = assign_folds(samples.len(), k, seed);
    let mut fold_accuracies = Vec::with_capacity(k);
    for f in 0..k {
        let training: Vec<LabeledSample> = samples
            .iter()
            .zip(&folds)
            .filter(|(_, &g)| g != f)
            .map(|(s, _)| s.clone())
            .collect();
        let model = train(&training, alpha)?;
        let (mut hits, mut total) = (0usize, 0usize);
        for (s, _) in samples.iter().zip(&folds).filter(|(_, &g)| g == f) {
            total += 1;
            if model.predict(&s.text).label == s.label {
                hits += 1;
            }
        }
        fold_accuracies.push(hits as f64 / total as f64);
    }
    let accuracy = fold_accuracies.iter().sum::<f64>() / k as f64;
    Ok(CrossValidation {
        accuracy,
        fold_accuracies,
    })
}
