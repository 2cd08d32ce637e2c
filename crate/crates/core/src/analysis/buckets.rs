use serde::Serialize;

use crate::{Error, Result};

pub const BUCKET_COUNT: usize = 7;
const INTERVALS: usize = 15;
const MERGED: usize = 5;

/// Buckets over the score range of an analysed node set: fifteen equal-width
/// intervals with the lowest five and highest five merged.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BucketAssignment {
    /// Eight increasing boundaries in score units.
    pub edges: [f64; BUCKET_COUNT + 1],
    /// The analysed nodes, in input order.
    pub nodes: Vec<usize>,
    /// Bucket index in `0..7` for each entry of `nodes`.
    pub buckets: Vec<usize>,
}

impl BucketAssignment {
    pub fn sizes(&self) -> [usize; BUCKET_COUNT] {
        let mut sizes = [0; BUCKET_COUNT];
        for &b in &self.buckets {
            sizes[b] += 1;
        }
        sizes
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.nodes.iter().copied().zip(self.buckets.iter().copied())
    }
}

fn interval_to_bucket(interval: usize) -> usize {
    interval.saturating_sub(MERGED - 1).min(BUCKET_COUNT - 1)
}

/// Buckets `analyzed` nodes by `scores`. Intervals are half-open on the right
/// except the last.
pub fn bucketize(scores: &[f64], analyzed: &[usize]) -> Result<BucketAssignment> {
    if analyzed.is_empty() {
        return Err(Error::BadParams("no nodes to bucket".into()));
    }
    let values: Vec<f64> = analyzed.iter().map(|&i| scores[i]).collect();
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::BadParams("non-finite score".into()));
    }
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if !(hi > lo) {
        return Err(Error::DegenerateRange);
    }
    let width = (hi - lo) / INTERVALS as f64;
    let boundary = |k: usize| if k == INTERVALS { hi } else { lo + width * k as f64 };
    let mut edges = [0.0; BUCKET_COUNT + 1];
    edges[0] = lo;
    for (b, edge) in edges.iter_mut().enumerate().take(BUCKET_COUNT).skip(1) {
        *edge = boundary(b + MERGED - 1);
    }
    edges[BUCKET_COUNT] = hi;
    let buckets = values
        .iter()
        .map(|&v| {
            let mut interval = (((v - lo) / (hi - lo)) * INTERVALS as f64).floor() as usize;
            interval = interval.min(INTERVALS - 1);
            // Keep the floor consistent with the stored boundaries.
            while interval > 0 && v < boundary(interval) {
                interval -= 1;
            }
            while interval + 1 < INTERVALS && v >= boundary(interval + 1) {
                interval += 1;
            }
            interval_to_bucket(interval)
        })
        .collect();
    Ok(BucketAssignment {
        edges,
        nodes: analyzed.to_vec(),
        buckets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_rule() {
        let expected = [0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 6, 6, 6, 6];
        for (interval, &b) in expected.iter().enumerate() {
            assert_eq!(interval_to_bucket(interval), b);
        }
    }

    #[test]
    fn midpoint_lands_in_bucket_three() {
        let scores: Vec<f64> = (0..=15).map(|x| x as f64).chain([7.5]).collect();
        let nodes: Vec<usize> = (0..scores.len()).collect();
        let b = bucketize(&scores, &nodes).unwrap();
        assert_eq!(*b.buckets.last().unwrap(), 3);
        // Integer scores sit on boundaries: k -> interval k (15 -> closed last).
        let expected = [0, 0, 0, 0, 0, 1, 2, 3, 4, 5, 6, 6, 6, 6, 6, 6];
        assert_eq!(&b.buckets[..16], &expected);
        assert_eq!(b.edges, [0.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0, 15.0]);
    }

    #[test]
    fn extremes_only() {
        let b = bucketize(&[1.0, 2.0, 1.0], &[0, 1, 2]).unwrap();
        assert_eq!(b.buckets, vec![0, 6, 0]);
    }

    #[test]
    fn analyzed_subset_only() {
        let b = bucketize(&[100.0, 1.0, 2.0], &[1, 2]).unwrap();
        assert_eq!(b.nodes, vec![1, 2]);
        assert_eq!(b.buckets, vec![0, 6]);
        assert_eq!(b.sizes().iter().sum::<usize>(), 2);
    }

    #[test]
    fn errors() {
        assert!(matches!(bucketize(&[1.0, 1.0], &[0, 1]), Err(Error::DegenerateRange)));
        assert!(bucketize(&[1.0], &[]).is_err());
    }
}
