//! Summary statistics over per-run final best scores.

use serde::{Deserialize, Serialize};

/// Mean, population standard deviation, median, best, and worst of a batch's
/// final scores.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StatsSummary {
    pub mean: f64,
    pub std: f64,
    pub median: f64,
    pub best: f64,
    pub worst: f64,
}

impl StatsSummary {
    /// `None` when no run succeeded.
    pub fn from_scores(scores: &[f64]) -> Option<Self> {
        if scores.is_empty() {
            return None;
        }
        let n = scores.len() as f64;
        let mean = scores.iter().sum::<f64>() / n;
        let var = scores.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let mut sorted = scores.to_vec();
        sorted.sort_by(f64::total_cmp);
        Some(Self {
            mean,
            std: var.sqrt(),
            median: median_of_sorted(&sorted),
            best: sorted[0],
            worst: *sorted.last().unwrap(),
        })
    }
}

pub fn median_of_sorted(sorted: &[f64]) -> f64 {
    let n = sorted.len();
    if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_collapses_to_one_value() {
        let s = StatsSummary::from_scores(&[2.5]).unwrap();
        assert_eq!(s.mean, 2.5);
        assert_eq!(s.median, 2.5);
        assert_eq!(s.best, 2.5);
        assert_eq!(s.worst, 2.5);
        assert_eq!(s.std, 0.0);
    }

    #[test]
    fn population_std_and_order() {
        let s = StatsSummary::from_scores(&[2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0]).unwrap();
        assert_eq!(s.mean, 5.0);
        assert_eq!(s.std, 2.0); // classic population-variance example
        assert_eq!(s.best, 2.0);
        assert_eq!(s.worst, 9.0);
        assert!(s.best <= s.median && s.median <= s.worst);
    }

    #[test]
    fn even_count_median_averages_middles() {
        let s = StatsSummary::from_scores(&[1.0, 2.0, 3.0, 10.0]).unwrap();
        assert_eq!(s.median, 2.5);
    }

    #[test]
    fn empty_is_none() {
        assert!(StatsSummary::from_scores(&[]).is_none());
    }
}
