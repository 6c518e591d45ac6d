use crate::scalars::{FieldCtx, Scalar};
use std::collections::BTreeMap;

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize, ctx: &FieldCtx) -> Self {
        SparseVec { entries: vec![(i, ctx.one())] }
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec { entries: vec![(i, c)] }
    }

    /// Builds from unsorted entries; duplicates are summed and zeros dropped.
    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut acc = Accumulator::new();
        for (i, c) in entries {
            acc.add(i, &c);
        }
        acc.finish()
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SparseVec { entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect() }
    }

    pub fn to_dense(&self, len: usize, ctx: &FieldCtx) -> Vec<Scalar> {
        let mut out = vec![ctx.zero(); len];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, c)| (*i, c))
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries.binary_search_by_key(&i, |(j, _)| *j).ok().map(|k| &self.entries[k].1)
    }

    pub fn first(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn last(&self) -> Option<&(usize, Scalar)> {
        self.entries.last()
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// `self + c * other` by a sorted merge.
    pub fn add_scaled(&self, other: &SparseVec, c: &Scalar) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(other, &c.ctx().one()),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, c)) => self.add_scaled(other, &-c.ctx().one()),
        }
    }

    /// Reindexes through `f`, summing collisions.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        Self::from_entries(self.entries.iter().map(|(i, c)| (f(*i), c.clone())))
    }

    /// Standard dot product.
    pub fn dot(&self, other: &SparseVec, ctx: &FieldCtx) -> Scalar {
        let mut acc = ctx.zero();
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        while let (Some((i, x)), Some((j, y))) = (a.peek(), b.peek()) {
            if i < j {
                a.next();
            } else if j < i {
                b.next();
            } else {
                acc += &(x * y);
                a.next();
                b.next();
            }
        }
        acc
    }
}

/// Collects scattered contributions into a [`SparseVec`].
#[derive(Default)]
pub struct Accumulator {
    map: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn new() -> Self {
        Accumulator { map: BTreeMap::new() }
    }

    pub fn add(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&i) {
            Some(x) => *x += c,
            None => {
                self.map.insert(i, c.clone());
            }
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec, c: &Scalar) {
        for (i, x) in v.iter() {
            self.add(i, &(x * c));
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec { entries: self.map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}
