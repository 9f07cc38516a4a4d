//! Dense enumeration of all `(k+1)^n` assignments over `n` items.
//!
//! An assignment is encoded as the integer `Σ_a d_a (k+1)^(a-1)`, where
//! `d_a = 0` when item `a` is unassigned and `d_a = i` when it sits in
//! dimension `i`. Item 1 is the least significant digit. "Canonical
//! enumeration order" for the validators and the exact solver is the
//! increasing order of this index.

use crate::error::{malformed, Error, Result};
use crate::lattice::{Assignment, Dim, ItemId};

pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Environment variable that overrides [`DEFAULT_ENUMERATION_CAP`].
///
/// Raising it is unsafe in practice: exhaustive passes grow as `(k+1)^n`
/// (pairwise checks as its square) and can run for hours or exhaust memory.
pub const CAP_ENV_VAR: &str = "KSUB_EVAL_CAP";

/// The active enumeration cap.
pub fn enumeration_cap() -> u64 {
    std::env::var(CAP_ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<u64>().ok())
        .unwrap_or(DEFAULT_ENUMERATION_CAP)
}

#[derive(Clone, Debug)]
pub struct Space {
    n: usize,
    k: usize,
    strides: Vec<usize>,
    len: usize,
}

impl Space {
    /// Space for `n` items and `k` dimensions under the active cap.
    pub fn new(n: usize, k: usize) -> Result<Self> {
        Self::with_cap(n, k, enumeration_cap())
    }

    pub fn with_cap(n: usize, k: usize, cap: u64) -> Result<Self> {
        if k == 0 {
            return Err(malformed("k must be at least 1"));
        }
        let too_big = || Error::SizeLimit { required: format!("{}^{}", k + 1, n), cap };
        let radix = k + 1;
        let mut strides = Vec::with_capacity(n);
        let mut len: u64 = 1;
        for _ in 0..n {
            strides.push(len as usize);
            len = len.checked_mul(radix as u64).ok_or_else(too_big)?;
        }
        if len > cap {
            return Err(too_big());
        }
        Ok(Self { n, k, strides, len: len as usize })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Index offset contributed by item `item_index` (0-based) per unit of digit.
    pub fn stride(&self, item_index: usize) -> usize {
        self.strides[item_index]
    }

    /// Digit of item `item_index` (0-based) in `index`: 0 or its dimension.
    pub fn digit(&self, index: usize, item_index: usize) -> usize {
        (index / self.strides[item_index]) % (self.k + 1)
    }

    pub fn index_of(&self, s: &Assignment) -> Result<usize> {
        s.check_bounds(self.n, self.k)?;
        Ok(s.iter().map(|(a, i)| i.0 as usize * self.strides[a.index()]).sum())
    }

    pub fn assignment_at(&self, index: usize) -> Assignment {
        let pairs = (0..self.n).filter_map(|a| {
            let d = self.digit(index, a);
            (d > 0).then(|| (ItemId::from_index(a), Dim(d as u16)))
        });
        Assignment::from_pairs(pairs).expect("dense index decodes to a valid assignment")
    }

    /// All assignments in canonical enumeration order.
    pub fn iter(&self) -> impl Iterator<Item = Assignment> + '_ {
        (0..self.len).map(move |idx| self.assignment_at(idx))
    }

    /// Text key of `index`: character `j` holds the digit of item `j + 1`.
    pub fn key_of(&self, index: usize) -> String {
        (0..self.n)
            .map(|a| char::from_digit(self.digit(index, a) as u32, 36).expect("k <= 35"))
            .collect()
    }

    /// Inverse of [`Space::key_of`].
    pub fn index_of_key(&self, key: &str) -> Result<usize> {
        let chars: Vec<char> = key.chars().collect();
        if chars.len() != self.n {
            return Err(malformed(format!("key {key:?} must have length {}", self.n)));
        }
        chars.iter().enumerate().try_fold(0usize, |acc, (a, c)| {
            let d = c
                .to_digit(36)
                .filter(|&d| d as usize <= self.k)
                .ok_or_else(|| malformed(format!("key {key:?} has digit {c:?} outside 0..={}", self.k)))?;
            Ok(acc + d as usize * self.strides[a])
        })
    }
}
