use crate::error::{malformed, Result};
use crate::lattice::Assignment;
use crate::oracle::Oracle;
use crate::scalar::Scalar;
use crate::space::Space;

/// An explicit table of `f` over all `(k+1)^n` assignments.
///
/// Tables are normalized on load: `f(∅)` is subtracted from every entry and
/// kept as [`TabularOracle::offset`].
#[derive(Clone, Debug)]
pub struct TabularOracle<T> {
    space: Space,
    values: Vec<T>,
    offset: T,
}

impl<T: PartialEq> PartialEq for TabularOracle<T> {
    fn eq(&self, other: &Self) -> bool {
        self.space.n() == other.space.n()
            && self.space.k() == other.space.k()
            && self.values == other.values
            && self.offset == other.offset
    }
}

impl<T: Scalar> TabularOracle<T> {
    /// `values[idx]` is `f` at dense index `idx` (see [`Space`]).
    pub fn from_values(n: usize, k: usize, mut values: Vec<T>) -> Result<Self> {
        let space = Space::new(n, k)?;
        if values.len() != space.len() {
            return Err(malformed(format!("table has {} entries, expected {}", values.len(), space.len())));
        }
        let offset = values[0].clone();
        for v in &mut values {
            *v -= offset.clone();
        }
        Ok(Self { space, values, offset })
    }

    /// Builds the table from `(key, value)` entries, where each key is the
    /// length-`n` digit string of an assignment (character `j` is item
    /// `j+1`'s dimension, `0` for unassigned). Every key must appear once.
    pub fn from_keyed<I>(n: usize, k: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (String, T)>,
    {
        let space = Space::new(n, k)?;
        let mut slots: Vec<Option<T>> = vec![None; space.len()];
        for (key, value) in entries {
            let idx = space.index_of_key(&key)?;
            if slots[idx].replace(value).is_some() {
                return Err(malformed(format!("table key {key:?} appears twice")));
            }
        }
        let values = slots
            .into_iter()
            .enumerate()
            .map(|(idx, v)| v.ok_or_else(|| malformed(format!("table is missing key {:?}", space.key_of(idx)))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_values(n, k, values)
    }

    /// Tabulates another oracle without counting evaluations.
    pub fn tabulate<O: Oracle<T> + ?Sized>(oracle: &O) -> Result<Self> {
        let space = Space::new(oracle.n(), oracle.k())?;
        let values = space.iter().map(|s| oracle.value_of(&s)).collect();
        Self::from_values(oracle.n(), oracle.k(), values)
    }

    /// `f(∅)` of the table as given, before normalization.
    pub fn offset(&self) -> &T {
        &self.offset
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    /// Normalized values in dense index order.
    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `(key, normalized value)` pairs in dense index order.
    pub fn entries(&self) -> impl Iterator<Item = (String, &T)> + '_ {
        self.values.iter().enumerate().map(|(idx, v)| (self.space.key_of(idx), v))
    }
}

impl<T: Scalar> Oracle<T> for TabularOracle<T> {
    fn n(&self) -> usize {
        self.space.n()
    }

    fn k(&self) -> usize {
        self.space.k()
    }

    fn value_of(&self, s: &Assignment) -> T {
        let idx = self.space.index_of(s).expect("assignment within table bounds");
        self.values[idx].clone()
    }
}
