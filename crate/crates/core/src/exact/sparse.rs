use std::collections::BTreeMap;

use super::{Matrix, Scalar};

/// Sparse vector: strictly increasing indices with nonzero values.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SVec {
    entries: Vec<(usize, Scalar)>,
}

impl SVec {
    pub fn new() -> Self {
        SVec::default()
    }

    pub fn unit(i: usize) -> Self {
        SVec {
            entries: vec![(i, Scalar::one())],
        }
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut map: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            *map.entry(i).or_default() += &v;
        }
        SVec {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(v: &[Scalar]) -> Self {
        SVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn iter(&self) -> std::slice::Iter<'_, (usize, Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.entries.first()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.entries.binary_search_by_key(&i, |(k, _)| *k) {
            Ok(p) => self.entries[p].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> SVec {
        if s.is_zero() {
            return SVec::new();
        }
        SVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * s)).collect(),
        }
    }

    /// `self + s · other`, merging the sorted index lists.
    pub fn add_scaled(&self, s: &Scalar, other: &SVec) -> SVec {
        if s.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (0, 0);
        while a < self.entries.len() || b < other.entries.len() {
            let ia = self.entries.get(a).map(|e| e.0);
            let ib = other.entries.get(b).map(|e| e.0);
            match (ia, ib) {
                (Some(x), Some(y)) if x == y => {
                    let v = &self.entries[a].1 + &(s * &other.entries[b].1);
                    if !v.is_zero() {
                        out.push((x, v));
                    }
                    a += 1;
                    b += 1;
                }
                (Some(x), Some(y)) if x < y => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (Some(_), None) => {
                    out.push(self.entries[a].clone());
                    a += 1;
                }
                (_, Some(y)) => {
                    out.push((y, s * &other.entries[b].1));
                    b += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        SVec { entries: out }
    }

    pub fn add(&self, other: &SVec) -> SVec {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SVec) -> SVec {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    /// Re-indexes entries through `f`; `f` must be injective on the support.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SVec {
        let mut entries: Vec<(usize, Scalar)> =
            self.entries.iter().map(|(i, v)| (f(*i), v.clone())).collect();
        entries.sort_by_key(|e| e.0);
        SVec { entries }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }
}

/// Dense scratch space for accumulating sparse linear combinations.
pub(crate) struct Acc {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
    flag: Vec<bool>,
}

impl Acc {
    pub fn new(n: usize) -> Self {
        Acc {
            vals: vec![Scalar::zero(); n],
            touched: Vec::new(),
            flag: vec![false; n],
        }
    }

    pub fn add(&mut self, i: usize, v: &Scalar) {
        if v.is_zero() {
            return;
        }
        if !self.flag[i] {
            self.flag[i] = true;
            self.touched.push(i);
        }
        self.vals[i] += v;
    }

    pub fn add_scaled(&mut self, s: &Scalar, v: &SVec) {
        if s.is_zero() {
            return;
        }
        if s.is_one() {
            for (i, x) in v.iter() {
                self.add(*i, x);
            }
        } else {
            for (i, x) in v.iter() {
                self.add(*i, &(s * x));
            }
        }
    }

    pub fn drain(&mut self) -> SVec {
        self.touched.sort_unstable();
        let mut entries = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.flag[i] = false;
            let v = std::mem::take(&mut self.vals[i]);
            if !v.is_zero() {
                entries.push((i, v));
            }
        }
        self.touched.clear();
        SVec { entries }
    }
}

/// Sparse matrix stored by columns; column `j` is the image of the basis vector `e_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    rows: usize,
    cols: Vec<SVec>,
}

impl SparseMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMat {
            rows,
            cols: vec![SVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat {
            rows: n,
            cols: (0..n).map(SVec::unit).collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<SVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < rows)));
        SparseMat { rows, cols }
    }

    pub fn from_fn(rows: usize, ncols: usize, f: impl FnMut(usize) -> SVec) -> Self {
        SparseMat::from_columns(rows, (0..ncols).map(f).collect())
    }

    /// Matrix of a permutation sending basis vector `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        SparseMat {
            rows: perm.len(),
            cols: perm.iter().map(|&p| SVec::unit(p)).collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &SVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SVec] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.cols[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SVec::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols.len()
            && self.cols.iter().enumerate().all(|(j, c)| {
                c.nnz() == 1 && c.leading().is_some_and(|(i, v)| *i == j && v.is_one())
            })
    }

    pub fn apply(&self, v: &SVec) -> SVec {
        let mut acc = Acc::new(self.rows);
        for (j, x) in v.iter() {
            acc.add_scaled(x, &self.cols[*j]);
        }
        acc.drain()
    }

    /// The composite `self ∘ other`.
    pub fn mul(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols.len(), other.rows, "sparse product dimension mismatch");
        let mut acc = Acc::new(self.rows);
        let cols = other
            .cols
            .iter()
            .map(|col| {
                for (j, x) in col.iter() {
                    acc.add_scaled(x, &self.cols[*j]);
                }
                acc.drain()
            })
            .collect();
        SparseMat {
            rows: self.rows,
            cols,
        }
    }

    pub fn add_scaled(&self, s: &Scalar, other: &SparseMat) -> SparseMat {
        assert_eq!((self.rows, self.cols.len()), (other.rows, other.cols.len()));
        SparseMat {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| a.add_scaled(s, b))
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        self.add_scaled(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        self.add_scaled(&Scalar::from_int(-1), other)
    }

    pub fn scale(&self, s: &Scalar) -> SparseMat {
        SparseMat {
            rows: self.rows,
            cols: self.cols.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.iter() {
                buckets[*i].push((j, v.clone()));
            }
        }
        SparseMat {
            rows: self.cols.len(),
            cols: buckets.into_iter().map(|entries| SVec { entries }).collect(),
        }
    }

    /// Kronecker product; the left factor is the more significant index.
    pub fn kron(&self, other: &SparseMat) -> SparseMat {
        let r = self.rows * other.rows;
        let mut cols = Vec::with_capacity(self.cols.len() * other.cols.len());
        for a in &self.cols {
            for b in &other.cols {
                let mut entries = Vec::with_capacity(a.nnz() * b.nnz());
                for (i, x) in a.iter() {
                    for (k, y) in b.iter() {
                        entries.push((i * other.rows + k, x * y));
                    }
                }
                cols.push(SVec { entries });
            }
        }
        SparseMat { rows: r, cols }
    }

    /// Stacks `self` on top of `other` (same column count).
    pub fn vstack(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.cols.len(), other.cols.len());
        let shift = self.rows;
        SparseMat {
            rows: self.rows + other.rows,
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(a, b)| {
                    let mut entries = a.entries.clone();
                    entries.extend(b.iter().map(|(i, v)| (i + shift, v.clone())));
                    SVec { entries }
                })
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col.iter() {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.rows);
        for c in &self.cols {
            e.insert(c);
        }
        e.rank()
    }

    /// Basis of the null space.
    pub fn kernel(&self) -> Vec<SVec> {
        kernel_of_rows(self.transpose().columns(), self.cols.len())
    }

    /// The columns of `self` that are independent of the columns before them.
    pub fn image(&self) -> Vec<SVec> {
        let mut e = Echelon::new(self.rows);
        self.cols.iter().filter(|c| e.insert(c)).cloned().collect()
    }
}

const NONE: usize = usize::MAX;

/// Incrementally grown row-echelon basis of a subspace of k^dim.
///
/// Every stored row has a distinct leading index (its pivot) with leading
/// coefficient one and vanishes at all pivots present when it was inserted.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SVec>,
    pivot_of: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
            pivot_of: vec![NONE; dim],
        }
    }

    pub fn from_vectors<'a>(dim: usize, vs: impl IntoIterator<Item = &'a SVec>) -> Self {
        let mut e = Echelon::new(dim);
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SVec] {
        &self.rows
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_of[i] != NONE
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim).filter(|&i| self.is_pivot(i)).collect()
    }

    /// Canonical representative of `v` modulo the span: zero at every pivot.
    pub fn reduce(&self, v: &SVec) -> SVec {
        if self.rows.is_empty() {
            return v.clone();
        }
        let mut work: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(k, _)| self.pivot_of[**k] != NONE)
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let row = &self.rows[self.pivot_of[k]];
            for (i, r) in row.iter() {
                let e = work.entry(*i).or_default();
                *e -= &(&c * r);
                if e.is_zero() {
                    work.remove(i);
                }
            }
            cursor = k + 1;
        }
        SVec {
            entries: work.into_iter().collect(),
        }
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &SVec) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.leading().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading coefficient");
        let row = r.scale(&inv);
        self.pivot_of[p] = self.rows.len();
        self.rows.push(row);
        true
    }

    /// Rows brought to reduced row echelon form, sorted by pivot.
    pub fn rref_rows(&self) -> Vec<SVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].leading().unwrap().0));
        let mut done = Echelon::new(self.dim);
        let mut out: Vec<SVec> = Vec::with_capacity(self.rows.len());
        for r in order {
            let row = done.reduce(&self.rows[r]);
            let p = row.leading().unwrap().0;
            done.pivot_of[p] = done.rows.len();
            done.rows.push(row.clone());
            out.push(row);
        }
        out.reverse();
        out
    }

    /// Coordinates of `v` in the quotient k^dim / span, indexed by the non-pivot positions.
    pub fn quotient_map(&self) -> QuotientMap {
        let mut index = vec![NONE; self.dim];
        let mut q = 0;
        for (i, slot) in index.iter_mut().enumerate() {
            if !self.is_pivot(i) {
                *slot = q;
                q += 1;
            }
        }
        QuotientMap { index, dim: q }
    }
}

/// Position map from ambient coordinates to quotient coordinates.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    index: Vec<usize>,
    dim: usize,
}

impl QuotientMap {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Quotient coordinates of an already reduced vector.
    pub fn coords(&self, reduced: &SVec) -> SVec {
        SVec {
            entries: reduced
                .iter()
                .map(|(i, v)| {
                    debug_assert!(self.index[*i] != NONE, "vector not reduced");
                    (self.index[*i], v.clone())
                })
                .collect(),
        }
    }
}

/// A linearly independent family with coordinate lookup.
///
/// Members are numbered in insertion order; [`Frame::coords`] expresses a vector of their
/// span as a combination of them.
#[derive(Clone, Debug)]
pub struct Frame {
    dim: usize,
    len: usize,
    rows: Vec<SVec>,
    /// `rows[r] = Σⱼ combos[r]ⱼ · memberⱼ`
    combos: Vec<SVec>,
    pivot_of: Vec<usize>,
}

impl Frame {
    pub fn new(dim: usize) -> Self {
        Frame {
            dim,
            len: 0,
            rows: Vec::new(),
            combos: Vec::new(),
            pivot_of: vec![NONE; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Splits `v = remainder + Σⱼ cⱼ memberⱼ` with the remainder zero at every pivot.
    fn reduce_tracking(&self, v: &SVec) -> (SVec, SVec) {
        let mut work: BTreeMap<usize, Scalar> = v.iter().cloned().collect();
        let mut combo = Acc::new(self.len.max(1));
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(k, _)| self.pivot_of[**k] != NONE)
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            let r = self.pivot_of[k];
            for (i, x) in self.rows[r].iter() {
                let e = work.entry(*i).or_default();
                *e -= &(&c * x);
                if e.is_zero() {
                    work.remove(i);
                }
            }
            combo.add_scaled(&c, &self.combos[r]);
            cursor = k + 1;
        }
        (SVec { entries: work.into_iter().collect() }, combo.drain())
    }

    /// Adds `v` as the next member if it is independent of the current ones.
    pub fn push(&mut self, v: &SVec) -> bool {
        let (rem, c) = self.reduce_tracking(v);
        let Some((p, lead)) = rem.leading().cloned() else {
            return false;
        };
        let inv = lead.inv().expect("nonzero leading coefficient");
        self.pivot_of[p] = self.rows.len();
        self.rows.push(rem.scale(&inv));
        self.combos.push(SVec::unit(self.len).sub(&c).scale(&inv));
        self.len += 1;
        true
    }

    /// Coefficients of `v` in terms of the members, if `v` lies in their span.
    pub fn coords(&self, v: &SVec) -> Option<SVec> {
        let (rem, c) = self.reduce_tracking(v);
        rem.is_zero().then_some(c)
    }
}

/// Null space of the matrix whose rows are `rows`, with `ncols` columns.
pub fn kernel_of_rows(rows: &[SVec], ncols: usize) -> Vec<SVec> {
    let e = Echelon::from_vectors(ncols, rows);
    let rref = e.rref_rows();
    let mut per_free: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
    for row in &rref {
        let p = row.leading().unwrap().0;
        for (i, v) in row.iter().skip(1) {
            if !e.is_pivot(*i) {
                per_free[*i].push((p, -v));
            }
        }
    }
    (0..ncols)
        .filter(|&f| !e.is_pivot(f))
        .map(|f| {
            let mut entries = std::mem::take(&mut per_free[f]);
            entries.push((f, Scalar::one()));
            entries.sort_by_key(|x| x.0);
            SVec { entries }
        })
        .collect()
}
