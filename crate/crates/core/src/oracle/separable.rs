use crate::error::{malformed, Result};
use crate::lattice::Assignment;
use crate::oracle::Oracle;
use crate::scalar::Scalar;

/// `f(S) = Σ_i min(cap_i, Σ_{a ∈ X_i} m_i(a))`.
///
/// Each dimension is a budget-additive function of its own item set, so the
/// sum is monotone and orthant submodular.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableSumOracle<T> {
    n: usize,
    /// `masses[i][a]` is the mass of item `a` in dimension `i` (both 0-based).
    masses: Vec<Vec<T>>,
    caps: Vec<T>,
}

impl<T: Scalar> SeparableSumOracle<T> {
    pub fn new(n: usize, masses: Vec<Vec<T>>, caps: Vec<T>) -> Result<Self> {
        if masses.is_empty() {
            return Err(malformed("k must be at least 1"));
        }
        if masses.len() != caps.len() {
            return Err(malformed(format!("{} mass rows but {} caps", masses.len(), caps.len())));
        }
        for (i, row) in masses.iter().enumerate() {
            if row.len() != n {
                return Err(malformed(format!("dimension {} lists {} masses, expected {n}", i + 1, row.len())));
            }
            if row.iter().any(|m| *m < T::zero()) {
                return Err(malformed(format!("dimension {} has a negative mass", i + 1)));
            }
        }
        if caps.iter().any(|c| *c < T::zero()) {
            return Err(malformed("caps must be nonnegative"));
        }
        Ok(Self { n, masses, caps })
    }

    pub fn masses(&self) -> &[Vec<T>] {
        &self.masses
    }

    pub fn caps(&self) -> &[T] {
        &self.caps
    }
}

impl<T: Scalar> Oracle<T> for SeparableSumOracle<T> {
    fn n(&self) -> usize {
        self.n
    }

    fn k(&self) -> usize {
        self.caps.len()
    }

    fn value_of(&self, s: &Assignment) -> T {
        let mut load = vec![T::zero(); self.caps.len()];
        for (a, i) in s.iter() {
            load[i.index()] += self.masses[i.index()][a.index()].clone();
        }
        load.into_iter()
            .zip(&self.caps)
            .fold(T::zero(), |acc, (l, cap)| acc + l.min_of(cap.clone()))
    }
}
