//! Permutations of `{0, ..., n-1}` and their coordinatewise action on tuples.

use std::fmt;

use crate::arith::lcm_list;
use crate::error::{Error, Result};
use crate::partition::CycleType;

/// A bijection on `{0, ..., n-1}`, stored as its image vector.
///
/// Labels are 0-based everywhere; only [`fmt::Display`] shifts to `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::NotABijection { n, images });
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of `{0..n}` from disjoint cycles; unmentioned
    /// points are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::OutOfRange { value: x, n });
                }
                if std::mem::replace(&mut touched[x], true) {
                    return Err(Error::NotABijection {
                        n,
                        images: cycle.to_vec(),
                    });
                }
                images[x] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    /// Some permutation with the given cycle type: cycles laid out on
    /// consecutive points, longest first.
    pub fn with_cycle_type(j: &CycleType) -> Self {
        let mut images = Vec::with_capacity(j.n());
        let mut start = 0;
        for len in j.parts() {
            images.extend((start + 1..start + len).chain(std::iter::once(start)));
            start += len;
        }
        Self { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `x`. Panics if `x >= n`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: format!("n = {}", self.n()),
                actual: format!("n = {}", other.n()),
            });
        }
        Ok(Perm {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.n());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same size");
            }
            base = base.compose(&base).expect("same size");
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that
    /// point. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        CycleType::from_parts(&lens).expect("cycle lengths are positive")
    }

    /// Order in the symmetric group: lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let lens: Vec<u64> = self.cycles().iter().map(|c| c.len() as u64).collect();
        lcm_list(&lens).expect("cycle lengths are positive")
    }

    /// Coordinatewise image of a tuple, `p^{×k}(t)`.
    pub fn apply_tuple(&self, t: &[usize]) -> Result<Vec<usize>> {
        t.iter()
            .map(|&x| {
                self.images.get(x).copied().ok_or(Error::OutOfRange {
                    value: x,
                    n: self.n(),
                })
            })
            .collect()
    }

    /// Every permutation of `{0..n}` in lexicographic order of image vectors.
    pub fn all(n: usize) -> AllPerms {
        AllPerms {
            next: Some((0..n).collect()),
        }
    }
}

pub fn cycle_type_of(p: &Perm) -> CycleType {
    p.cycle_type()
}

/// Cycle notation on 1-based labels, fixed points omitted; identity is `()`.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct AllPerms {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Perm { images: current })
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
