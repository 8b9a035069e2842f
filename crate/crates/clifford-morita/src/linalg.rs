//! Exact dense linear algebra over the coefficient fields: row reduction,
//! solving, nullspaces, and an incremental row-span used for basis
//! extraction and coordinate expression all over the crate.


use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: ExactScalar> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows);
        let mut out: Matrix<K> = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for j in 0..self.cols {
                    if !self[(i, j)].is_zero() && !v[j].is_zero() {
                        acc = acc + self[(i, j)].clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: &K) -> Matrix<K> {
        let mut out = self.clone();
        for x in &mut out.data {
            *x = x.clone() * c.clone();
        }
        out
    }

    pub fn add(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x = x.clone() + y.clone();
        }
        out
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn flatten(&self) -> Vec<K> {
        self.data.clone()
    }

    /// Reduced row echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> (Matrix<K>, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].inverse().expect("pivot nonzero");
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let delta = factor.clone() * m[(r, j)].clone();
                        m[(i, j)] = m[(i, j)].clone() - delta;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, r, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right nullspace.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let (r, rank, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![K::zero(); self.cols];
            vec[free] = K::one();
            for (col, &p) in pivot_set.iter().enumerate() {
                if let Some(row) = p {
                    vec[col] = -r[(row, free)].clone();
                }
            }
            basis.push(vec);
        }
        debug_assert_eq!(basis.len(), self.cols - rank);
        basis
    }

    /// Exact solution set of `M x = b`.
    pub fn solve(&self, b: &[K]) -> Result<SolveOutcome<K>> {
        if b.len() != self.rows {
            return Err(Error::DimMismatch(format!(
                "rhs length {} does not match {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(SolveOutcome::NoSolution);
        }
        let mut particular = vec![K::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            particular[col] = r[(row, self.cols)].clone();
        }
        let nullspace = self.nullspace();
        if nullspace.is_empty() {
            Ok(SolveOutcome::Solution(particular))
        } else {
            Ok(SolveOutcome::SolutionSpace {
                particular,
                nullspace,
            })
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<K> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.data[i * self.cols + j]
    }
}

impl<K> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.data[i * self.cols + j]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SolveOutcome<K> {
    Solution(Vec<K>),
    NoSolution,
    SolutionSpace {
        particular: Vec<K>,
        nullspace: Vec<Vec<K>>,
    },
}

impl<K: Clone> SolveOutcome<K> {
    pub fn any_solution(&self) -> Option<Vec<K>> {
        match self {
            SolveOutcome::Solution(v) => Some(v.clone()),
            SolveOutcome::SolutionSpace { particular, .. } => Some(particular.clone()),
            SolveOutcome::NoSolution => None,
        }
    }
}

/// Incremental reduced row span with coordinate tracking: rows are kept in
/// reduced echelon form together with the combination of inserted vectors
/// producing each row, so membership tests also yield coordinates in the
/// inserted basis.
#[derive(Clone, Debug)]
pub struct RowSpan<K> {
    cols: usize,
    rows: Vec<Vec<K>>,
    combos: Vec<Vec<K>>,
    pivots: Vec<usize>,
    inserted: usize,
}

impl<K: ExactScalar> RowSpan<K> {
    pub fn new(cols: usize) -> Self {
        RowSpan {
            cols,
            rows: Vec::new(),
            combos: Vec::new(),
            pivots: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The echelon rows themselves (canonical spanning set).
    pub fn rows(&self) -> &[Vec<K>] {
        &self.rows
    }

    fn reduce(&self, v: &mut Vec<K>, combo: &mut Vec<K>) {
        for (idx, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for j in 0..self.cols {
                    if !self.rows[idx][j].is_zero() {
                        let delta = factor.clone() * self.rows[idx][j].clone();
                        v[j] = v[j].clone() - delta;
                    }
                }
                for (c, rc) in combo.iter_mut().zip(&self.combos[idx]) {
                    *c = c.clone() - factor.clone() * rc.clone();
                }
            }
        }
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: Vec<K>) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut combo = vec![K::zero(); self.inserted + 1];
        combo[self.inserted] = K::one();
        self.inserted += 1;
        for c in &mut self.combos {
            c.push(K::zero());
        }
        let mut v = v;
        self.reduce(&mut v, &mut combo);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inverse().unwrap();
        for x in &mut v {
            *x = x.clone() * inv.clone();
        }
        for c in &mut combo {
            *c = c.clone() * inv.clone();
        }
        // Back-substitute into existing rows to keep reduced form.
        for idx in 0..self.rows.len() {
            if !self.rows[idx][p].is_zero() {
                let factor = self.rows[idx][p].clone();
                for j in 0..self.cols {
                    let delta = factor.clone() * v[j].clone();
                    self.rows[idx][j] = self.rows[idx][j].clone() - delta;
                }
                for (c, vc) in self.combos[idx].iter_mut().zip(&combo) {
                    *c = c.clone() - factor.clone() * vc.clone();
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        self.combos.insert(pos, combo);
        true
    }

    pub fn contains(&self, v: &[K]) -> bool {
        self.coordinates_in_inserted(v).is_some()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo the span: subtracts echelon
    /// rows until every pivot column is zero.
    pub fn reduce_mod(&self, v: &[K]) -> Vec<K> {
        let mut v = v.to_vec();
        for (idx, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for j in 0..self.cols {
                    if !self.rows[idx][j].is_zero() {
                        let delta = factor.clone() * self.rows[idx][j].clone();
                        v[j] = v[j].clone() - delta;
                    }
                }
            }
        }
        v
    }

    /// If `v` lies in the span, coordinates of `v` over the *inserted*
    /// vectors (one entry per insert call, including dependent inserts).
    pub fn coordinates_in_inserted(&self, v: &[K]) -> Option<Vec<K>> {
        let mut v = v.to_vec();
        let mut combo = vec![K::zero(); self.inserted];
        for (idx, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for j in 0..self.cols {
                    if !self.rows[idx][j].is_zero() {
                        let delta = factor.clone() * self.rows[idx][j].clone();
                        v[j] = v[j].clone() - delta;
                    }
                }
                for (c, rc) in combo.iter_mut().zip(&self.combos[idx]) {
                    *c = c.clone() + factor.clone() * rc.clone();
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(combo)
        } else {
            None
        }
    }

    /// Coordinates of `v` over the echelon rows (requires membership).
    pub fn coordinates_in_rows(&self, v: &[K]) -> Option<Vec<K>> {
        let mut v = v.to_vec();
        let mut coords = vec![K::zero(); self.rows.len()];
        for (idx, &p) in self.pivots.iter().enumerate() {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                coords[idx] = factor.clone();
                for j in 0..self.cols {
                    if !self.rows[idx][j].is_zero() {
                        let delta = factor.clone() * self.rows[idx][j].clone();
                        v[j] = v[j].clone() - delta;
                    }
                }
            }
        }
        if v.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use num_traits::Zero;

    fn rat(n: i64) -> Rat {
        <Rat as ExactScalar>::from_int(n)
    }

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_ranks() {
        assert_eq!(Matrix::<Rat>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Rat>::zero(3, 3).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn rref_idempotent() {
        let a = m(&[&[2, 4, 1], &[1, 2, 3], &[0, 1, 1]]);
        let (r1, _, _) = a.rref();
        let (r2, _, _) = r1.rref();
        assert_eq!(r1, r2);
    }

    #[test]
    fn solve_identity() {
        let b = vec![rat(3), rat(-1)];
        match Matrix::<Rat>::identity(2).solve(&b).unwrap() {
            SolveOutcome::Solution(x) => assert_eq!(x, b),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solve_inconsistent() {
        let a = m(&[&[1, 1], &[1, 1]]);
        let b = vec![rat(1), rat(2)];
        assert_eq!(a.solve(&b).unwrap(), SolveOutcome::NoSolution);
    }

    #[test]
    fn solve_underdetermined_rank_nullity() {
        let a = m(&[&[1, 2, 3]]);
        let b = vec![rat(6)];
        match a.solve(&b).unwrap() {
            SolveOutcome::SolutionSpace {
                particular,
                nullspace,
            } => {
                assert_eq!(nullspace.len(), 2); // cols - rank
                assert_eq!(a.apply(&particular), b);
                for v in &nullspace {
                    assert!(a.apply(v).iter().all(|x| x.is_zero()));
                }
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn solve_verified_by_back_substitution() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let b = vec![rat(5), rat(10)];
        let x = a.solve(&b).unwrap().any_solution().unwrap();
        assert_eq!(a.apply(&x), b);
    }

    #[test]
    fn rowspan_coordinates() {
        let mut span = RowSpan::<Rat>::new(3);
        assert!(span.insert(vec![rat(1), rat(1), rat(0)]));
        assert!(span.insert(vec![rat(0), rat(2), rat(2)]));
        assert!(!span.insert(vec![rat(2), rat(4), rat(2)]));
        assert_eq!(span.rank(), 2);
        let coords = span
            .coordinates_in_inserted(&[rat(1), rat(3), rat(2)])
            .unwrap();
        // 1*(1,1,0) + 1*(0,2,2)
        assert_eq!(coords[0], rat(1));
        assert_eq!(coords[1], rat(1));
        assert!(span.coordinates_in_inserted(&[rat(0), rat(0), rat(1)]).is_none());
    }
}
