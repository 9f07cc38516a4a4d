use std::collections::HashMap;

use crate::error::{malformed, Result};
use crate::lattice::{Assignment, Dim, ItemId, Pair};
use crate::oracle::Oracle;
use crate::scalar::Scalar;

/// Weighted coverage: every `(item, dim)` pair covers a set of universe
/// elements and `f(S)` is the total weight of the union covered by `S`.
///
/// Monotone and k-submodular for any nonnegative weights.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverageOracle<T> {
    n: usize,
    k: usize,
    elements: Vec<(String, T)>,
    /// Bitset of covered elements per pair, indexed `item_index * k + dim_index`.
    covers: Vec<Vec<u64>>,
    words: usize,
}

impl<T: Scalar> CoverageOracle<T> {
    pub fn new(
        n: usize,
        k: usize,
        elements: Vec<(String, T)>,
        covers: Vec<(Pair, Vec<String>)>,
    ) -> Result<Self> {
        let mut by_name = HashMap::with_capacity(elements.len());
        for (idx, (name, weight)) in elements.iter().enumerate() {
            if *weight < T::zero() {
                return Err(malformed(format!("element {name:?} has a negative weight")));
            }
            if by_name.insert(name.as_str(), idx).is_some() {
                return Err(malformed(format!("element {name:?} is listed twice")));
            }
        }
        let mut indexed = Vec::with_capacity(covers.len());
        for ((item, dim), names) in covers {
            let ids = names
                .iter()
                .map(|name| {
                    by_name
                        .get(name.as_str())
                        .copied()
                        .ok_or_else(|| malformed(format!("pair ({item},{dim}) covers unknown element {name:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            indexed.push(((item, dim), ids));
        }
        Self::from_indices(n, k, elements, indexed)
    }

    /// Like [`CoverageOracle::new`] with covers given as element positions.
    pub fn from_indices(
        n: usize,
        k: usize,
        elements: Vec<(String, T)>,
        covers: Vec<(Pair, Vec<usize>)>,
    ) -> Result<Self> {
        if k == 0 {
            return Err(malformed("k must be at least 1"));
        }
        if let Some((name, _)) = elements.iter().find(|(_, w)| *w < T::zero()) {
            return Err(malformed(format!("element {name:?} has a negative weight")));
        }
        let words = elements.len().div_ceil(64);
        let mut bits = vec![vec![0u64; words]; n * k];
        let mut seen = vec![false; n * k];
        for ((item, dim), ids) in covers {
            if item.0 == 0 || item.index() >= n || dim.0 == 0 || dim.index() >= k {
                return Err(malformed(format!("cover entry ({item},{dim}) outside {n} items x {k} dims")));
            }
            let slot = item.index() * k + dim.index();
            if std::mem::replace(&mut seen[slot], true) {
                return Err(malformed(format!("cover entry ({item},{dim}) listed twice")));
            }
            for e in ids {
                if e >= elements.len() {
                    return Err(malformed(format!("cover entry ({item},{dim}) references element #{e}")));
                }
                bits[slot][e / 64] |= 1 << (e % 64);
            }
        }
        Ok(Self { n, k, elements, covers: bits, words })
    }

    /// The constant-zero function over `n` items and `k` dimensions.
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        Self::from_indices(n, k, Vec::new(), Vec::new())
    }

    pub fn elements(&self) -> &[(String, T)] {
        &self.elements
    }

    pub fn total_weight(&self) -> T {
        self.elements.iter().fold(T::zero(), |acc, (_, w)| acc + w.clone())
    }

    /// Element positions covered by `(item, dim)`, ascending.
    pub fn covered_by(&self, item: ItemId, dim: Dim) -> Vec<usize> {
        let set = &self.covers[item.index() * self.k + dim.index()];
        (0..self.elements.len()).filter(|&e| set[e / 64] >> (e % 64) & 1 == 1).collect()
    }
}

impl<T: Scalar> Oracle<T> for CoverageOracle<T> {
    fn n(&self) -> usize {
        self.n
    }

    fn k(&self) -> usize {
        self.k
    }

    fn value_of(&self, s: &Assignment) -> T {
        let mut union = vec![0u64; self.words];
        for (a, i) in s.iter() {
            let set = &self.covers[a.index() * self.k + i.index()];
            for (acc, w) in union.iter_mut().zip(set) {
                *acc |= w;
            }
        }
        // Sum in element order so the result is bit-reproducible.
        let mut total = T::zero();
        for (wi, mut word) in union.into_iter().enumerate() {
            while word != 0 {
                let bit = word.trailing_zeros() as usize;
                total += self.elements[wi * 64 + bit].1.clone();
                word &= word - 1;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures::coverage_w;

    #[test]
    fn rejects_unknown_and_negative_elements() {
        let bad = CoverageOracle::<f64>::new(
            1,
            1,
            vec![("e1".into(), 1.0)],
            vec![((ItemId(1), Dim(1)), vec!["e9".into()])],
        );
        assert!(bad.is_err());
        let neg = CoverageOracle::<f64>::new(1, 1, vec![("e1".into(), -1.0)], vec![]);
        assert!(neg.is_err());
        let dup = CoverageOracle::<f64>::new(1, 1, vec![("e".into(), 1.0), ("e".into(), 2.0)], vec![]);
        assert!(dup.is_err());
        let out = CoverageOracle::<f64>::from_indices(1, 1, vec![], vec![((ItemId(2), Dim(1)), vec![])]);
        assert!(out.is_err());
    }

    #[test]
    fn bounded_by_total_weight_with_equality_on_full_cover() {
        let w = coverage_w::<f64>();
        assert_eq!(w.total_weight(), 3.0);
        let full = Assignment::from_raw(&[(1, 1), (2, 2)]).unwrap();
        assert_eq!(w.value_of(&full), w.total_weight());
        let partial = Assignment::from_raw(&[(1, 2), (2, 1)]).unwrap();
        assert!(w.value_of(&partial) < w.total_weight());
    }

    #[test]
    fn many_elements_span_words() {
        let elements: Vec<(String, f64)> = (0..130).map(|e| (format!("e{e}"), 0.5)).collect();
        let covers = vec![
            ((ItemId(1), Dim(1)), (0..70).collect()),
            ((ItemId(2), Dim(1)), (60..130).collect()),
        ];
        let o = CoverageOracle::from_indices(2, 1, elements, covers).unwrap();
        let both = Assignment::from_raw(&[(1, 1), (2, 1)]).unwrap();
        assert_eq!(o.value_of(&both), 65.0);
        assert_eq!(o.covered_by(ItemId(2), Dim(1)).len(), 70);
    }
}
