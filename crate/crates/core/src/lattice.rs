//! Partial assignments of items to one of `k` dimensions, and the lattice
//! operations on them.
//!
//! A k-tuple of pairwise disjoint item sets `(X_1, ..., X_k)` is stored as the
//! set of `(item, dimension)` pairs it induces, so disjointness is simply
//! "no item appears twice". Pairs are kept sorted by item, which fixes the
//! canonical iteration and serialization order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{malformed, precondition, Result};

/// 1-based item index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ItemId(pub u32);

/// 1-based dimension index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dim(pub u16);

pub type Pair = (ItemId, Dim);

impl ItemId {
    /// Zero-based position, for indexing per-item tables.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(index: usize) -> Self {
        ItemId(u32::try_from(index + 1).expect("item index fits in u32"))
    }
}

impl Dim {
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }

    pub fn from_index(index: usize) -> Self {
        Dim(u16::try_from(index + 1).expect("dimension index fits in u16"))
    }

    /// All dimensions `1..=k` in increasing order.
    pub fn all(k: usize) -> impl Iterator<Item = Dim> + Clone {
        (0..k).map(Dim::from_index)
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of item-dimension pairs with distinct items.
///
/// The derived ordering compares the sorted pair sequences lexicographically;
/// every "lexicographically smallest" tie rule in the crate refers to it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u32, u16)>", into = "Vec<(u32, u16)>")]
pub struct Assignment {
    pairs: Vec<Pair>,
}

impl Assignment {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds an assignment, rejecting zero indices and repeated items.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Pair>,
    {
        let mut pairs: Vec<Pair> = pairs.into_iter().collect();
        pairs.sort_unstable();
        for &(item, dim) in &pairs {
            if item.0 == 0 || dim.0 == 0 {
                return Err(malformed(format!("pair ({item}, {dim}) uses a zero index")));
            }
        }
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(malformed(format!("item {} assigned more than once", w[0].0)));
        }
        Ok(Self { pairs })
    }

    /// Convenience constructor from raw `(item, dim)` numbers.
    pub fn from_raw(pairs: &[(u32, u16)]) -> Result<Self> {
        Self::from_pairs(pairs.iter().map(|&(a, i)| (ItemId(a), Dim(i))))
    }

    /// Number of assigned items, `|S| = |U(S)|`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[Pair] {
        &self.pairs
    }

    pub fn iter(&self) -> impl Iterator<Item = Pair> + '_ {
        self.pairs.iter().copied()
    }

    /// The support `U(S)`, in increasing order.
    pub fn items(&self) -> impl Iterator<Item = ItemId> + '_ {
        self.pairs.iter().map(|&(a, _)| a)
    }

    fn position(&self, item: ItemId) -> std::result::Result<usize, usize> {
        self.pairs.binary_search_by(|&(a, _)| a.cmp(&item))
    }

    pub fn dim_of(&self, item: ItemId) -> Option<Dim> {
        self.position(item).ok().map(|p| self.pairs[p].1)
    }

    pub fn contains_item(&self, item: ItemId) -> bool {
        self.position(item).is_ok()
    }

    pub fn contains(&self, (item, dim): Pair) -> bool {
        self.dim_of(item) == Some(dim)
    }

    /// Adds `(item, dim)`; the item must not be assigned yet.
    pub fn insert(&mut self, item: ItemId, dim: Dim) -> Result<()> {
        if item.0 == 0 || dim.0 == 0 {
            return Err(malformed(format!("pair ({item}, {dim}) uses a zero index")));
        }
        match self.position(item) {
            Ok(_) => Err(precondition(format!("item {item} is already assigned"))),
            Err(p) => {
                self.pairs.insert(p, (item, dim));
                Ok(())
            }
        }
    }

    /// `S ∪ {(item, dim)}` as a new value.
    pub fn with(&self, item: ItemId, dim: Dim) -> Result<Self> {
        let mut next = self.clone();
        next.insert(item, dim)?;
        Ok(next)
    }

    /// Union of two assignments with disjoint supports.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        for (a, i) in other.iter() {
            out.insert(a, i)?;
        }
        Ok(out)
    }

    /// Checks every pair against an `n`-item, `k`-dimension ground set.
    pub fn check_bounds(&self, n: usize, k: usize) -> Result<()> {
        for &(item, dim) in &self.pairs {
            if item.index() >= n {
                return Err(malformed(format!("item {item} outside 1..={n}")));
            }
            if dim.index() >= k {
                return Err(malformed(format!("dimension {dim} outside 1..={k}")));
            }
        }
        Ok(())
    }

    /// Pair-wise subset test. Same as [`precedes`].
    pub fn is_subset(&self, other: &Self) -> bool {
        self.len() <= other.len() && self.iter().all(|p| other.contains(p))
    }
}

impl TryFrom<Vec<(u32, u16)>> for Assignment {
    type Error = crate::Error;

    fn try_from(raw: Vec<(u32, u16)>) -> Result<Self> {
        Assignment::from_raw(&raw)
    }
}

impl From<Assignment> for Vec<(u32, u16)> {
    fn from(s: Assignment) -> Self {
        s.pairs.into_iter().map(|(a, i)| (a.0, i.0)).collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, (a, i)) in self.pairs.iter().enumerate() {
            if n > 0 {
                f.write_str(", ")?;
            }
            write!(f, "({a},{i})")?;
        }
        f.write_str("}")
    }
}

/// `x ⊔ y`: item `a` lands in dimension `i` iff some input places it in `i`
/// and neither input places it in another dimension.
pub fn join(x: &Assignment, y: &Assignment, k: usize) -> Result<Assignment> {
    check_dims(x, k)?;
    check_dims(y, k)?;
    let mut pairs = Vec::with_capacity(x.len() + y.len());
    let (mut xs, mut ys) = (x.pairs.iter().peekable(), y.pairs.iter().peekable());
    loop {
        match (xs.peek(), ys.peek()) {
            (Some(&&(a, i)), Some(&&(b, j))) => {
                if a < b {
                    pairs.push((a, i));
                    xs.next();
                } else if b < a {
                    pairs.push((b, j));
                    ys.next();
                } else {
                    if i == j {
                        pairs.push((a, i));
                    }
                    xs.next();
                    ys.next();
                }
            }
            (Some(&&p), None) => {
                pairs.push(p);
                xs.next();
            }
            (None, Some(&&p)) => {
                pairs.push(p);
                ys.next();
            }
            (None, None) => break,
        }
    }
    Ok(Assignment { pairs })
}

/// `x ⊓ y`: the pairs present in both.
pub fn meet(x: &Assignment, y: &Assignment) -> Assignment {
    let pairs = x.pairs.iter().copied().filter(|&p| y.contains(p)).collect();
    Assignment { pairs }
}

/// `x ⪯ y`: every pair of `x` is a pair of `y`.
pub fn precedes(x: &Assignment, y: &Assignment) -> bool {
    x.is_subset(y)
}

fn check_dims(x: &Assignment, k: usize) -> Result<()> {
    match x.pairs.iter().find(|&&(_, d)| d.index() >= k) {
        Some(&(a, d)) => Err(malformed(format!("item {a} has dimension {d} > k = {k}"))),
        None => Ok(()),
    }
}
