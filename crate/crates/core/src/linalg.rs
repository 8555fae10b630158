//! Exact sparse linear algebra over enumerated bases.
//!
//! Elimination is Gauss-Jordan over the rationals. Columns are processed in
//! order and the pivot row is the one with the fewest nonzeros, which keeps
//! fill low on the very sparse operator matrices this crate builds. Every row
//! carries the combination of original rows it came from, so an inconsistent
//! system yields a certificate `y` with `yᵀA = 0` and `y·b ≠ 0`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::ce::{enumerate_tensors, Tensor, TruncationProfile, Variant};
use crate::error::{Error, Result};
use crate::graded::{enumerate_words, CyclicWord, Parity, SymplecticSpace};
use crate::par::{self, Execution};
use crate::rational::{add_map, add_to, Q};

type Row = BTreeMap<usize, Q>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Row>,
}

impl SparseRationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseRationalMatrix {
            rows,
            cols,
            data: vec![Row::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_dense(d: &[Vec<Q>]) -> Self {
        let cols = d.first().map_or(0, Vec::len);
        let mut m = Self::zeros(d.len(), cols);
        for (i, row) in d.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::zero(); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (&j, v) in row {
                d[i][j] = v.clone();
            }
        }
        d
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Q {
        self.data[i].get(&j).cloned().unwrap_or_else(Q::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    /// `(row, col, value)` triples in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.data[j].insert(i, v.clone());
        }
        t
    }

    pub fn mul_vec(&self, x: &[Q]) -> Result<Vec<Q>> {
        if x.len() != self.cols {
            return Err(Error::Usage(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok(self
            .data
            .iter()
            .map(|r| r.iter().fold(Q::zero(), |acc, (&j, v)| acc + v * &x[j]))
            .collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Usage(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, r) in self.data.iter().enumerate() {
            let mut acc = Row::new();
            for (&k, v) in r {
                add_map(&mut acc, &other.data[k], v);
            }
            out.data[i] = acc;
        }
        Ok(out)
    }

    /// Reorders rows and columns: new row `i` is old row `rp[i]`, likewise for columns.
    pub fn permuted(&self, rp: &[usize], cp: &[usize]) -> Self {
        let mut inv = vec![0; self.cols];
        for (new, &old) in cp.iter().enumerate() {
            inv[old] = new;
        }
        let mut out = Self::zeros(self.rows, self.cols);
        for (new, &old) in rp.iter().enumerate() {
            out.data[new] = self.data[old]
                .iter()
                .map(|(&j, v)| (inv[j], v.clone()))
                .collect();
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(Vec<Q>),
    /// `y` with `yᵀA = 0` and `y·b ≠ 0`.
    NoSolution {
        certificate: Vec<Q>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    /// Basis of the null space, one vector per free column.
    pub kernel: Vec<Vec<Q>>,
    pub outcome: Option<SolveOutcome>,
}

struct Working {
    coeffs: Row,
    rhs: Q,
    track: Row,
}

fn axpy(dst: &mut Row, src: &Row, s: &Q) {
    add_map(dst, src, s);
}

/// Rank, null space and (optionally) a solution of `A x = b` or a certificate.
pub fn solve_and_kernel(a: &SparseRationalMatrix, b: Option<&[Q]>) -> Result<SolveReport> {
    if let Some(b) = b {
        if b.len() != a.rows {
            return Err(Error::Usage(format!(
                "right-hand side of length {} for {} rows",
                b.len(),
                a.rows
            )));
        }
    }
    let mut rows: Vec<Working> = a
        .data
        .iter()
        .enumerate()
        .map(|(i, r)| Working {
            coeffs: r.clone(),
            rhs: b.map_or_else(Q::zero, |b| b[i].clone()),
            track: [(i, Q::one())].into_iter().collect(),
        })
        .collect();
    // column -> rows with a nonzero entry there, kept approximately; verified on use
    let mut used = vec![false; rows.len()];
    let mut pivot_of_col: BTreeMap<usize, usize> = BTreeMap::new();
    for col in 0..a.cols {
        let pick = (0..rows.len())
            .filter(|&r| !used[r] && rows[r].coeffs.contains_key(&col))
            .min_by_key(|&r| (rows[r].coeffs.len(), r));
        let Some(pr) = pick else { continue };
        used[pr] = true;
        let inv = Q::one() / rows[pr].coeffs[&col].clone();
        let piv = &mut rows[pr];
        for v in piv.coeffs.values_mut() {
            *v *= &inv;
        }
        piv.rhs *= &inv;
        for v in piv.track.values_mut() {
            *v *= &inv;
        }
        let (pc, prhs, ptrack) = (
            rows[pr].coeffs.clone(),
            rows[pr].rhs.clone(),
            rows[pr].track.clone(),
        );
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pr {
                continue;
            }
            let Some(f) = row.coeffs.get(&col).cloned() else {
                continue;
            };
            let s = -f;
            axpy(&mut row.coeffs, &pc, &s);
            row.rhs += &prhs * &s;
            axpy(&mut row.track, &ptrack, &s);
        }
        pivot_of_col.insert(col, pr);
    }
    let rank = pivot_of_col.len();
    let pivot_cols: Vec<usize> = pivot_of_col.keys().copied().collect();
    let mut kernel = Vec::new();
    for f in (0..a.cols).filter(|c| !pivot_of_col.contains_key(c)) {
        let mut v = vec![Q::zero(); a.cols];
        v[f] = Q::one();
        for (&pc, &pr) in &pivot_of_col {
            if let Some(x) = rows[pr].coeffs.get(&f) {
                v[pc] = -x.clone();
            }
        }
        kernel.push(v);
    }
    let outcome = b.map(|_| {
        if let Some(bad) = rows
            .iter()
            .find(|r| r.coeffs.is_empty() && !r.rhs.is_zero())
        {
            let mut y = vec![Q::zero(); a.rows];
            for (&i, v) in &bad.track {
                y[i] = v.clone();
            }
            SolveOutcome::NoSolution { certificate: y }
        } else {
            let mut x = vec![Q::zero(); a.cols];
            for (&pc, &pr) in &pivot_of_col {
                x[pc] = rows[pr].rhs.clone();
            }
            SolveOutcome::Solved(x)
        }
    });
    Ok(SolveReport {
        rank,
        pivot_cols,
        kernel,
        outcome,
    })
}

pub fn rank(a: &SparseRationalMatrix) -> usize {
    solve_and_kernel(a, None).map(|r| r.rank).unwrap_or(0)
}

/// Incrementally maintained echelon basis of a subspace of `Q^n`.
#[derive(Debug, Clone, Default)]
pub struct EchelonBasis {
    rows: BTreeMap<usize, Row>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &Row) -> Row {
        let mut v = v.clone();
        loop {
            let Some((&lead, coef)) = v.iter().find(|(k, _)| self.rows.contains_key(k)) else {
                return v;
            };
            let s = -coef.clone();
            add_map(&mut v, &self.rows[&lead], &s);
        }
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let row: Row = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        let r = self.reduce(&row);
        let Some((&lead, c)) = r.iter().next() else {
            return false;
        };
        let inv = Q::one() / c.clone();
        let r: Row = r.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        // keep the basis fully reduced on lead positions
        for other in self.rows.values_mut() {
            if let Some(f) = other.get(&lead).cloned() {
                add_map(other, &r, &-f);
            }
        }
        self.rows.insert(lead, r);
        true
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let row: Row = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, x.clone()))
            .collect();
        self.reduce(&row).is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub homology_dim: usize,
    /// Cycles spanning a complement of the boundaries.
    pub representatives: Vec<Vec<Q>>,
}

/// Homology at the middle of `C_{k+1} --d_in--> C_k --d_out--> C_{k-1}`.
pub fn homology_dims(
    d_in: &SparseRationalMatrix,
    d_out: &SparseRationalMatrix,
) -> Result<Homology> {
    if d_in.rows != d_out.cols {
        return Err(Error::Usage(format!(
            "d_in has {} rows but d_out has {} columns",
            d_in.rows, d_out.cols
        )));
    }
    if !d_out.mul(d_in)?.is_zero() {
        return Err(Error::Integrity(
            "composite of consecutive differentials is nonzero".into(),
        ));
    }
    let out = solve_and_kernel(d_out, None)?;
    let mut span = EchelonBasis::new();
    let dt = d_in.transpose();
    for col in &dt.data {
        let v: Vec<Q> = (0..d_in.rows)
            .map(|i| col.get(&i).cloned().unwrap_or_else(Q::zero))
            .collect();
        span.insert(&v);
    }
    let image_dim = span.dim();
    let mut representatives = Vec::new();
    for k in &out.kernel {
        if span.insert(k) {
            representatives.push(k.clone());
        }
    }
    let kernel_dim = out.kernel.len();
    Ok(Homology {
        kernel_dim,
        image_dim,
        homology_dim: kernel_dim - image_dim,
        representatives,
    })
}

/// An ordered, duplicate-free list of basis keys with index lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisSlice<K: Ord + Clone> {
    items: Vec<K>,
    index: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> BasisSlice<K> {
    pub fn new(items: Vec<K>) -> Self {
        let mut seen = BTreeMap::new();
        let mut kept = Vec::with_capacity(items.len());
        for k in items {
            if !seen.contains_key(&k) {
                seen.insert(k.clone(), kept.len());
                kept.push(k);
            }
        }
        BasisSlice {
            items: kept,
            index: seen,
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[K] {
        &self.items
    }

    pub fn index_of(&self, k: &K) -> Option<usize> {
        self.index.get(k).copied()
    }

    pub fn coordinates(&self, v: &BTreeMap<K, Q>) -> Option<Vec<Q>> {
        let mut out = vec![Q::zero(); self.len()];
        for (k, c) in v {
            out[self.index_of(k)?] = c.clone();
        }
        Some(out)
    }

    pub fn combination(&self, coords: &[Q]) -> BTreeMap<K, Q> {
        let mut m = BTreeMap::new();
        for (k, c) in self.items.iter().zip(coords) {
            add_to(&mut m, k.clone(), c.clone());
        }
        m
    }

    pub fn filter(&self, f: impl Fn(&K) -> bool) -> Self {
        Self::new(self.items.iter().filter(|k| f(k)).cloned().collect())
    }
}

/// Words of length in `min_len..=max_len`, optionally of one parity.
pub fn word_basis(
    space: &SymplecticSpace,
    min_len: usize,
    max_len: usize,
    parity: Option<Parity>,
) -> BasisSlice<CyclicWord> {
    let words = if min_len > max_len {
        Vec::new()
    } else {
        enumerate_words(space, min_len.max(1), max_len)
    };
    BasisSlice::new(
        words
            .into_iter()
            .filter(|w| parity.is_none_or(|p| w.parity(space) == p))
            .collect(),
    )
}

/// Tensors of a variant inside a profile, optionally restricted to one
/// filtration order and one parity.
pub fn tensor_basis(
    space: &SymplecticSpace,
    variant: Variant,
    profile: &TruncationProfile,
    allow_order_one: bool,
    filtration: Option<usize>,
    parity: Option<Parity>,
) -> BasisSlice<Tensor> {
    BasisSlice::new(
        enumerate_tensors(space, variant, profile, allow_order_one)
            .into_iter()
            .filter(|t| {
                filtration.is_none_or(|f| t.filtration() == f)
                    && parity.is_none_or(|p| t.parity(space) == p)
            })
            .collect(),
    )
}

/// Matrix of a linear operator between two slices. Column `j` holds the
/// coordinates of `op(domain[j])`. A component outside the codomain is a
/// range error unless `truncate` is set, in which case it is dropped.
pub fn matrix_of_operator<K, F, R>(
    exec: Execution,
    op: F,
    domain: &BasisSlice<K>,
    codomain: &BasisSlice<K>,
    truncate: bool,
    render: R,
) -> Result<SparseRationalMatrix>
where
    K: Ord + Clone + Send + Sync,
    F: Fn(&K) -> BTreeMap<K, Q> + Sync + Send,
    R: Fn(&K) -> String,
{
    let columns = par::map_collect(exec, domain.items(), |k| op(k));
    let mut m = SparseRationalMatrix::zeros(codomain.len(), domain.len());
    for (j, col) in columns.into_iter().enumerate() {
        for (k, v) in col {
            match codomain.index_of(&k) {
                Some(i) => m.set(i, j, v),
                None if truncate => {}
                None => {
                    return Err(Error::Range(format!(
                        "image of '{}' has component '{}' outside the codomain slice",
                        render(&domain.items()[j]),
                        render(&k)
                    )))
                }
            }
        }
    }
    Ok(m)
}
