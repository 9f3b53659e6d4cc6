//! Exact linear algebra over K.
//!
//! [`ExactMatrix`] is a plain dense matrix with reduced row echelon form and
//! nullspace. [`SparseEchelon`] runs the same Gauss-Jordan elimination row by
//! row on sparse rows; the centralizer solver feeds it the (very sparse)
//! linearized commutation equations.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq)]
pub struct ExactMatrix<K> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

impl<K: Scalar> ExactMatrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    /// Row-major entries; panics unless `entries.len() == rows * cols`.
    pub fn from_entries(rows: usize, cols: usize, entries: Vec<K>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<K>>, cols: usize) -> Self {
        let n = rows.len();
        let entries: Vec<K> = rows
            .into_iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged row");
                r
            })
            .collect();
        Self::from_entries(n, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(K::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and the pivot columns.
    ///
    /// Among the candidate pivots of a column the entry of least bit size is
    /// chosen, which keeps rational growth down.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let best = (prow..m.rows)
                .filter(|&r| !m.get(r, c).is_zero())
                .min_by_key(|&r| m.get(r, c).bit_size());
            let Some(best) = best else { continue };
            m.swap_rows(prow, best);
            let inv = m.get(prow, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(prow, j).clone() * inv.clone();
                m.set(prow, j, v);
            }
            for r in 0..m.rows {
                if r == prow || m.get(r, c).is_zero() {
                    continue;
                }
                let f = m.get(r, c).clone();
                for j in c..m.cols {
                    if m.get(prow, j).is_zero() {
                        continue;
                    }
                    let v = m.get(r, j).clone() - f.clone() * m.get(prow, j).clone();
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            prow += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : Mv = 0}`, each vector scaled so its first nonzero
    /// entry is one.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![K::zero(); self.cols];
                v[f] = K::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                normalize_first(v)
            })
            .collect()
    }
}

fn normalize_first<K: Scalar>(v: Vec<K>) -> Vec<K> {
    match v.iter().find(|x| !x.is_zero()).and_then(Scalar::inverse) {
        Some(inv) => v.into_iter().map(|x| x * inv.clone()).collect(),
        None => v,
    }
}

impl<K: Scalar> fmt::Debug for ExactMatrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse row: `(column, value)` pairs, sorted by column, no zeros.
pub type SparseRow<K> = Vec<(usize, K)>;

/// Which entry of a reduced row becomes its pivot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    /// Entry of least bit size, ties to the lowest column.
    LeastBitSize,
    /// Lowest column; yields the reduced row echelon form of the span.
    FirstColumn,
}

/// Incremental Gauss-Jordan elimination on sparse rows.
///
/// Invariant: every stored row has entry one at its pivot column and zero at
/// every other pivot column.
pub struct SparseEchelon<K> {
    cols: usize,
    rule: PivotRule,
    pivots: BTreeMap<usize, SparseRow<K>>,
}

fn lookup<K>(row: &SparseRow<K>, col: usize) -> Option<&K> {
    row.binary_search_by_key(&col, |e| e.0).ok().map(|i| &row[i].1)
}

/// `a - f * b`
fn axpy<K: Scalar>(a: &SparseRow<K>, f: &K, b: &SparseRow<K>) -> SparseRow<K> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, -(f.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - f.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<K: Scalar> SparseEchelon<K> {
    pub fn new(cols: usize) -> Self {
        Self::with_rule(cols, PivotRule::LeastBitSize)
    }

    pub fn with_rule(cols: usize, rule: PivotRule) -> Self {
        SparseEchelon {
            cols,
            rule,
            pivots: BTreeMap::new(),
        }
    }

    /// Stored rows ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = (usize, &SparseRow<K>)> {
        self.pivots.iter().map(|(c, r)| (*c, r))
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Add one equation. Entries may be unsorted and contain zeros or
    /// repeated columns (they are summed).
    pub fn insert(&mut self, entries: impl IntoIterator<Item = (usize, K)>) {
        let mut acc: BTreeMap<usize, K> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column out of range");
            let slot = acc.entry(c).or_insert_with(K::zero);
            *slot = slot.clone() + v;
        }
        let mut row: SparseRow<K> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let hits: Vec<(usize, K)> = row
            .iter()
            .filter(|(c, _)| self.pivots.contains_key(c))
            .cloned()
            .collect();
        for (c, f) in hits {
            row = axpy(&row, &f, &self.pivots[&c]);
        }
        let pick = match self.rule {
            PivotRule::LeastBitSize => row.iter().min_by_key(|(c, v)| (v.bit_size(), *c)),
            PivotRule::FirstColumn => row.first(),
        };
        let Some(&(pc, ref pv)) = pick else {
            return;
        };
        let inv = pv.inverse().expect("nonzero pivot");
        let row: SparseRow<K> = row.into_iter().map(|(c, v)| (c, v * inv.clone())).collect();
        for other in self.pivots.values_mut() {
            if let Some(f) = lookup(other, pc).cloned() {
                *other = axpy(other, &f, &row);
            }
        }
        self.pivots.insert(pc, row);
    }

    /// Basis of the solution space, one vector per free column, each with
    /// first nonzero entry one.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.pivots.contains_key(c)).collect();
        let index: BTreeMap<usize, usize> = free.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut basis: Vec<Vec<K>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![K::zero(); self.cols];
                v[f] = K::one();
                v
            })
            .collect();
        for (&pc, row) in &self.pivots {
            for (c, val) in row {
                if *c != pc {
                    basis[index[c]][pc] = -val.clone();
                }
            }
        }
        basis.into_iter().map(normalize_first).collect()
    }
}

/// Canonical basis of the span of sparse `vectors`: the nonzero rows of its
/// reduced row echelon form, ordered by pivot column.
pub fn echelon_basis_sparse<K: Scalar>(
    vectors: impl IntoIterator<Item = SparseRow<K>>,
    cols: usize,
) -> Vec<SparseRow<K>> {
    let mut e = SparseEchelon::with_rule(cols, PivotRule::FirstColumn);
    for v in vectors {
        e.insert(v);
    }
    e.pivots.into_values().collect()
}

/// Dense counterpart of [`echelon_basis_sparse`].
pub fn echelon_basis<K: Scalar>(vectors: Vec<Vec<K>>, cols: usize) -> Vec<Vec<K>> {
    let sparse = vectors
        .into_iter()
        .map(|v| v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect());
    echelon_basis_sparse(sparse, cols)
        .into_iter()
        .map(|row| {
            let mut v = vec![K::zero(); cols];
            for (c, x) in row {
                v[c] = x;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_traits::{One, Zero};
    use crate::scalar::Fp;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn mat(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(),
            rows[0].len(),
        )
    }

    fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> ExactMatrix<Rational> {
        let entries = (0..rows * cols)
            .map(|_| if rng.gen_bool(0.5) { q(0) } else { q(rng.gen_range(-4..5)) })
            .collect();
        ExactMatrix::from_entries(rows, cols, entries)
    }

    #[test]
    fn rref_examples() {
        let id = ExactMatrix::<Rational>::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let z = ExactMatrix::<Rational>::zeros(2, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).rref(), (mat(&[&[1, 2], &[0, 0]]), vec![0]));
    }

    #[test]
    fn nullspace_examples() {
        assert!(ExactMatrix::<Rational>::identity(3).nullspace().is_empty());
        assert_eq!(ExactMatrix::<Rational>::zeros(2, 3).nullspace().len(), 3);
        let ns = mat(&[&[1, 2], &[2, 4]]).nullspace();
        assert_eq!(ns.len(), 1);
        // first-nonzero normalization of span{(-2, 1)}
        assert_eq!(ns[0], vec![q(1), Rational::new((-1).into(), 2.into())]);
        let scaled: Vec<Rational> = ns[0].iter().map(|v| v.clone() * q(-2)).collect();
        assert_eq!(scaled, vec![q(-2), q(1)]);
    }

    #[test]
    fn random_matrices_rank_nullity_and_idempotence() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let (rows, cols) = (rng.gen_range(1..7), rng.gen_range(1..7));
            let m = random_matrix(&mut rng, rows, cols);
            let (r, pivots) = m.rref();
            assert_eq!(r.rref(), (r.clone(), pivots.clone()));
            let ns = m.nullspace();
            assert_eq!(ns.len() + pivots.len(), cols);
            for v in &ns {
                assert!(m.mul_vec(v).iter().all(Zero::is_zero));
                assert!(v.iter().find(|x| !x.is_zero()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn sparse_agrees_with_dense() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let (rows, cols) = (rng.gen_range(1..9), rng.gen_range(1..9));
            let m = random_matrix(&mut rng, rows, cols);
            let mut s = SparseEchelon::new(cols);
            for r in 0..rows {
                s.insert(m.row(r).iter().cloned().enumerate());
            }
            assert_eq!(s.rank(), m.rank());
            let sparse_ns = s.nullspace();
            for v in &sparse_ns {
                assert!(m.mul_vec(v).iter().all(Zero::is_zero));
            }
            let canonical = echelon_basis(sparse_ns, cols);
            assert_eq!(canonical, echelon_basis(m.nullspace(), cols));
            // agrees with the dense reduced row echelon form of the basis
            if !canonical.is_empty() {
                let dense = ExactMatrix::from_rows(m.nullspace(), cols).rref().0;
                for (i, row) in canonical.iter().enumerate() {
                    assert_eq!(row.as_slice(), dense.row(i));
                }
            }
        }
    }

    #[test]
    fn prime_field_elimination() {
        type F = Fp<5>;
        let m = ExactMatrix::from_rows(
            vec![vec![F::new(1), F::new(2)], vec![F::new(3), F::new(1)]],
            2,
        );
        // det = 1 - 6 = -5 = 0 mod 5
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }
}
