//! Sparse exact linear algebra over `Rat`.

use num_traits::{One, Zero};

use crate::rat::Rat;

/// Sparse vector: `(index, coefficient)` pairs, indices strictly increasing,
/// coefficients nonzero.
pub type SparseVec = Vec<(usize, Rat)>;

/// Sorts, merges duplicates and drops zeros.
pub fn normalize(mut v: Vec<(usize, Rat)>) -> SparseVec {
    v.sort_by_key(|(i, _)| *i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += &c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub fn scale(v: &[(usize, Rat)], c: &Rat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn add(a: &[(usize, Rat)], b: &[(usize, Rat)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push(b[j].clone());
            j += 1;
        } else {
            let s = &a[i].1 + &b[j].1;
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Row-echelon basis of a subspace of `Q^dim`. Every row has leading
/// coefficient 1 at its pivot and no entries before it. In reduced mode the
/// pivot columns of all other rows are zero as well, which makes reduction a
/// single pass; it pays off when the subspace has small codimension.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    reduced: bool,
    rows: Vec<SparseVec>,
    pivot_row: Vec<Option<usize>>,
}

/// Result of reducing a vector against an [`Echelon`] basis.
#[derive(Clone, Debug, Default)]
pub struct Reduction {
    /// Normal form, supported on non-pivot columns only.
    pub remainder: SparseVec,
    /// Coordinates along the basis rows: `(row index, coefficient)`.
    pub coords: Vec<(usize, Rat)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Echelon {
        Echelon { dim, reduced: false, rows: Vec::new(), pivot_row: vec![None; dim] }
    }

    pub fn new_reduced(dim: usize) -> Echelon {
        Echelon { reduced: true, ..Echelon::new(dim) }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivot(&self, row: usize) -> usize {
        self.rows[row][0].0
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// Columns without a pivot; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.dim).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    pub fn reduce(&self, v: &[(usize, Rat)]) -> Reduction {
        if v.is_empty() {
            return Reduction::default();
        }
        if self.reduced {
            self.reduce_single_pass(v)
        } else {
            self.reduce_cascading(v)
        }
    }

    fn reduce_single_pass(&self, v: &[(usize, Rat)]) -> Reduction {
        let mut acc: Vec<(usize, Rat)> = Vec::new();
        let mut coords = Vec::new();
        for (i, c) in v {
            match self.pivot_row[*i] {
                Some(r) => {
                    acc.extend(self.rows[r][1..].iter().map(|(j, x)| (*j, -(x * c))));
                    coords.push((r, c.clone()));
                }
                None => acc.push((*i, c.clone())),
            }
        }
        Reduction { remainder: normalize(acc), coords }
    }

    fn reduce_cascading(&self, v: &[(usize, Rat)]) -> Reduction {
        let start = v[0].0;
        let mut work: Vec<Rat> = vec![Rat::zero(); self.dim];
        for (i, c) in v {
            work[*i] = c.clone();
        }
        let mut coords = Vec::new();
        let mut remainder = Vec::new();
        for col in start..self.dim {
            if work[col].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut work[col], Rat::zero());
            match self.pivot_row[col] {
                Some(r) => {
                    for (j, x) in &self.rows[r][1..] {
                        work[*j] -= &(x * &c);
                    }
                    coords.push((r, c));
                }
                None => remainder.push((col, c)),
            }
        }
        Reduction { remainder, coords }
    }

    pub fn contains(&self, v: &[(usize, Rat)]) -> bool {
        self.reduce(v).remainder.is_empty()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[(usize, Rat)]) -> bool {
        let rem = self.reduce(v).remainder;
        if rem.is_empty() {
            return false;
        }
        let lead = rem[0].1.recip();
        let row = if lead.is_one() { rem } else { scale(&rem, &lead) };
        let p = row[0].0;
        if self.reduced {
            for other in &mut self.rows {
                if let Ok(k) = other.binary_search_by_key(&p, |(i, _)| *i) {
                    let c = -&other[k].1;
                    *other = add(other, &scale(&row, &c));
                }
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(row);
        true
    }
}

/// Sparse square matrix stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub n: usize,
    pub cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix { n, cols: (0..n).map(|i| vec![(i, Rat::one())]).collect() }
    }

    pub fn from_columns(cols: Vec<SparseVec>) -> SparseMatrix {
        SparseMatrix { n: cols.len(), cols }
    }

    pub fn apply(&self, v: &[(usize, Rat)]) -> SparseVec {
        let mut acc = Vec::new();
        for (j, c) in v {
            acc.extend(self.cols[*j].iter().map(|(i, x)| (*i, x * c)));
        }
        normalize(acc)
    }

    /// `self * other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix { n: self.n, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn entry(&self, row: usize, col: usize) -> Rat {
        self.cols[col]
            .binary_search_by_key(&row, |(i, _)| *i)
            .map(|k| self.cols[col][k].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    pub fn trace(&self) -> Rat {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    /// Traces of `self^k` for `k = 0..=m`.
    pub fn power_traces(&self, m: usize) -> Vec<Rat> {
        let mut out = vec![Rat::from(self.n as i64)];
        let mut power = SparseMatrix::identity(self.n);
        for _ in 0..m {
            power = self.compose(&power);
            out.push(power.trace());
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        let mut rows = vec![vec![Rat::zero(); self.n]; self.n];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, x) in c {
                rows[*i][j] = x.clone();
            }
        }
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        normalize(entries.iter().map(|(i, c)| (*i, Rat::int(*c))).collect())
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new(4);
        assert!(e.insert(&v(&[(0, 1), (1, 1)])));
        assert!(e.insert(&v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&v(&[(0, 1), (2, -1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(0, 2), (1, 3), (2, 1)])));
        assert!(!e.contains(&v(&[(3, 1)])));
        assert_eq!(e.free_columns(), vec![2, 3]);
    }

    #[test]
    fn reduced_mode_agrees() {
        let vs = [v(&[(0, 1), (2, 3), (4, 1)]), v(&[(1, 2), (2, 1)]), v(&[(0, 1), (1, 1), (3, 5)]), v(&[(2, 1), (4, -1)])];
        let mut plain = Echelon::new(5);
        let mut red = Echelon::new_reduced(5);
        for x in &vs {
            assert_eq!(plain.insert(x), red.insert(x));
        }
        assert_eq!(plain.free_columns(), red.free_columns());
        for row in red.rows() {
            for (i, _) in &row[1..] {
                assert!(!red.is_pivot(*i));
            }
        }
        let probe = v(&[(0, 7), (3, 1), (4, 2)]);
        assert_eq!(plain.reduce(&probe).remainder, red.reduce(&probe).remainder);
    }

    #[test]
    fn coordinates_reconstruct_vector() {
        for mut e in [Echelon::new(5), Echelon::new_reduced(5)] {
            coordinates_case(&mut e);
        }
    }

    fn coordinates_case(e: &mut Echelon) {
        e.insert(&v(&[(0, 2), (3, 1)]));
        e.insert(&v(&[(1, 1), (3, -1), (4, 1)]));
        let target = add(&scale(e.rows()[0].as_slice(), &Rat::int(3)), &scale(&e.rows()[1], &Rat::new(-1, 2)));
        let r = e.reduce(&target);
        assert!(r.remainder.is_empty());
        let mut rebuilt = Vec::new();
        for (row, c) in &r.coords {
            rebuilt = add(&rebuilt, &scale(&e.rows()[*row], c));
        }
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn matrix_powers() {
        // 3-cycle permutation matrix
        let m = SparseMatrix::from_columns(vec![v(&[(1, 1)]), v(&[(2, 1)]), v(&[(0, 1)])]);
        let t = m.power_traces(3);
        assert_eq!(t, vec![Rat::int(3), Rat::zero(), Rat::zero(), Rat::int(3)]);
        assert!(m.compose(&m).compose(&m).is_identity());
    }
}
