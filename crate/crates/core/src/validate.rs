//! Exhaustive structural checks on small oracles.
//!
//! Each validator tabulates `f` over the whole space (one counted evaluation
//! per assignment) and scans the relevant tuples in canonical enumeration
//! order, so a failing verdict always carries the first violating tuple.
//!
//! | validator | tuples scanned, in order | inequality |
//! |---|---|---|
//! | [`validate_monotone`] | `(x, a, i)` | `Δ_{a,i}(x) >= 0` |
//! | [`validate_orthant_submodular`] | `(x, a, i, y)` with `x ⪯ y`, `a ∉ U(y)` | `Δ_{a,i}(x) >= Δ_{a,i}(y)` |
//! | [`validate_lattice_ksubmodular`] | `(x, y)` | `f(x)+f(y) >= f(x⊔y)+f(x⊓y)` |
//!
//! `x` and `y` run over dense indices (see [`crate::space`]); items and
//! dimensions ascend. Each inequality is granted the scalar's tolerance.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counter::EvalCounter;
use crate::error::Result;
use crate::lattice::{join, meet, Assignment, Dim, ItemId, Pair};
use crate::oracle::Oracle;
use crate::scalar::Scalar;
use crate::space::Space;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Monotone,
    OrthantSubmodular,
    KSubmodular,
}

impl Property {
    pub fn inequality(self) -> &'static str {
        match self {
            Property::Monotone => "f(y) - f(x) >= 0 for y = x + (a,i)",
            Property::OrthantSubmodular => "Δ_{a,i}(x) >= Δ_{a,i}(y) for x ⪯ y",
            Property::KSubmodular => "f(x) + f(y) >= f(x ⊔ y) + f(x ⊓ y)",
        }
    }
}

/// A concrete violation: `lhs >= rhs - tolerance` fails for these values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness<T> {
    pub property: Property,
    pub inequality: String,
    pub x: Assignment,
    pub y: Assignment,
    pub pair: Option<Pair>,
    pub lhs: T,
    pub rhs: T,
}

impl<T: Scalar> Witness<T> {
    /// Recomputes both sides from `oracle`; true if the violation persists.
    pub fn recheck<O: Oracle<T> + ?Sized>(&self, oracle: &O) -> Result<bool> {
        let mut c = EvalCounter::new();
        let (lhs, rhs) = match self.property {
            Property::Monotone => {
                (oracle.evaluate(&self.y, &mut c)? - oracle.evaluate(&self.x, &mut c)?, T::zero())
            }
            Property::OrthantSubmodular => {
                let (a, i) = self.pair.expect("orthant witness names a pair");
                let dx = oracle.evaluate(&self.x.with(a, i)?, &mut c)? - oracle.evaluate(&self.x, &mut c)?;
                let dy = oracle.evaluate(&self.y.with(a, i)?, &mut c)? - oracle.evaluate(&self.y, &mut c)?;
                (dx, dy)
            }
            Property::KSubmodular => {
                let lhs = oracle.evaluate(&self.x, &mut c)? + oracle.evaluate(&self.y, &mut c)?;
                let rhs = oracle.evaluate(&join(&self.x, &self.y, oracle.k())?, &mut c)?
                    + oracle.evaluate(&meet(&self.x, &self.y), &mut c)?;
                (lhs, rhs)
            }
        };
        Ok(!lhs.ge_tol(&rhs))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationVerdict<T> {
    pub passed: bool,
    pub witness: Option<Witness<T>>,
}

impl<T> ValidationVerdict<T> {
    fn from_witness(witness: Option<Witness<T>>) -> Self {
        Self { passed: witness.is_none(), witness }
    }
}

struct Table<T> {
    space: Space,
    values: Vec<T>,
}

impl<T: Scalar> Table<T> {
    fn build<O: Oracle<T> + ?Sized>(oracle: &O) -> Result<Self> {
        let space = Space::new(oracle.n(), oracle.k())?;
        let mut counter = EvalCounter::new();
        let values = space
            .iter()
            .map(|s| oracle.evaluate(&s, &mut counter))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { space, values })
    }

    fn delta(&self, x: usize, a: usize, dim: usize) -> T {
        self.values[x + dim * self.space.stride(a)].clone() - self.values[x].clone()
    }

    fn free_items(&self, x: usize) -> Vec<usize> {
        (0..self.space.n()).filter(|&a| self.space.digit(x, a) == 0).collect()
    }

    fn pair(a: usize, dim: usize) -> Pair {
        (ItemId::from_index(a), Dim(dim as u16))
    }
}

pub fn validate_monotone<T, O>(oracle: &O) -> Result<ValidationVerdict<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let table = Table::build(oracle)?;
    let k = table.space.k();
    let witness = (0..table.space.len()).into_par_iter().find_map_first(|x| {
        for a in table.free_items(x) {
            for dim in 1..=k {
                let gain = table.delta(x, a, dim);
                if !gain.ge_tol(&T::zero()) {
                    let xs = table.space.assignment_at(x);
                    let (item, d) = Table::<T>::pair(a, dim);
                    return Some(Witness {
                        property: Property::Monotone,
                        inequality: Property::Monotone.inequality().into(),
                        y: xs.with(item, d).expect("item is free"),
                        x: xs,
                        pair: Some((item, d)),
                        lhs: gain,
                        rhs: T::zero(),
                    });
                }
            }
        }
        None
    });
    Ok(ValidationVerdict::from_witness(witness))
}

pub fn validate_orthant_submodular<T, O>(oracle: &O) -> Result<ValidationVerdict<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let table = Table::build(oracle)?;
    let space = &table.space;
    let k = space.k();
    let witness = (0..space.len()).into_par_iter().find_map_first(|x| {
        let free = table.free_items(x);
        for &a in &free {
            let others: Vec<usize> = free.iter().copied().filter(|&b| b != a).collect();
            for dim in 1..=k {
                let dx = table.delta(x, a, dim);
                // Supersets y of x with item a free, ascending by index.
                let mut digits = vec![0usize; others.len()];
                let mut y = x;
                loop {
                    let dy = table.delta(y, a, dim);
                    if !dx.ge_tol(&dy) {
                        return Some(Witness {
                            property: Property::OrthantSubmodular,
                            inequality: Property::OrthantSubmodular.inequality().into(),
                            x: space.assignment_at(x),
                            y: space.assignment_at(y),
                            pair: Some(Table::<T>::pair(a, dim)),
                            lhs: dx,
                            rhs: dy,
                        });
                    }
                    // Odometer step, lowest item first.
                    let mut pos = 0;
                    loop {
                        if pos == others.len() {
                            break;
                        }
                        let stride = space.stride(others[pos]);
                        if digits[pos] < k {
                            digits[pos] += 1;
                            y += stride;
                            break;
                        }
                        y -= digits[pos] * stride;
                        digits[pos] = 0;
                        pos += 1;
                    }
                    if pos == others.len() {
                        break;
                    }
                }
            }
        }
        None
    });
    Ok(ValidationVerdict::from_witness(witness))
}

pub fn validate_lattice_ksubmodular<T, O>(oracle: &O) -> Result<ValidationVerdict<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let table = Table::build(oracle)?;
    let space = &table.space;
    let n = space.n();
    let digits: Vec<Vec<u8>> = (0..space.len())
        .map(|idx| (0..n).map(|a| space.digit(idx, a) as u8).collect())
        .collect();
    // Both the inequality and the operations are symmetric, so the first
    // violating (x, y) in lexicographic order always has x <= y.
    let witness = (0..space.len()).into_par_iter().find_map_first(|x| {
        let dx = &digits[x];
        for (y, dy) in digits.iter().enumerate().skip(x) {
            let (mut j, mut m) = (0usize, 0usize);
            for a in 0..n {
                let (p, q) = (dx[a] as usize, dy[a] as usize);
                let stride = space.stride(a);
                if p == q {
                    j += p * stride;
                    m += p * stride;
                } else if p == 0 || q == 0 {
                    j += (p + q) * stride;
                }
            }
            let lhs = table.values[x].clone() + table.values[y].clone();
            let rhs = table.values[j].clone() + table.values[m].clone();
            if !lhs.ge_tol(&rhs) {
                return Some(Witness {
                    property: Property::KSubmodular,
                    inequality: Property::KSubmodular.inequality().into(),
                    x: space.assignment_at(x),
                    y: space.assignment_at(y),
                    pair: None,
                    lhs,
                    rhs,
                });
            }
        }
        None
    });
    Ok(ValidationVerdict::from_witness(witness))
}
