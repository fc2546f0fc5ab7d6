//! Dense linear algebra over GF(p): ranks, kernels, incremental echelon
//! forms. Used by the Koszul complex and the Macaulay-matrix checks.

use crate::field::PrimeField;

/// Rank of a dense matrix (rows are consumed).
pub fn rank(mut rows: Vec<Vec<u32>>, field: &PrimeField) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for v in rows[rank][col..].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let (top, rest) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in rest.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            let neg = field.neg(factor);
            for c in col..ncols {
                if prow[c] != 0 {
                    row[c] = field.add(row[c], field.mul(neg, prow[c]));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of the right kernel `{v : A v = 0}` of an `m x n` matrix.
pub fn kernel(rows: &[Vec<u32>], ncols: usize, field: &PrimeField) -> Vec<Vec<u32>> {
    let mut a: Vec<Vec<u32>> = rows.to_vec();
    let mut pivots: Vec<usize> = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..a.len()).find(|&k| a[k][col] != 0) else {
            continue;
        };
        a.swap(r, p);
        let inv = field.inv(a[r][col]);
        for v in a[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let prow = a[r].clone();
        for (k, row) in a.iter_mut().enumerate() {
            if k == r || row[col] == 0 {
                continue;
            }
            let neg = field.neg(row[col]);
            for c in 0..ncols {
                if prow[c] != 0 {
                    row[c] = field.add(row[c], field.mul(neg, prow[c]));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u32; ncols];
        v[free] = 1;
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = field.neg(a[k][free]);
        }
        basis.push(v);
    }
    basis
}

/// Row space kept in reduced echelon form, grown one vector at a time.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    rows: Vec<(usize, Vec<u32>)>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField) -> Self {
        Self {
            field,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u32]) {
        let f = &self.field;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &y) in v.iter_mut().zip(row) {
                if y != 0 {
                    *x = f.add(*x, f.mul(neg, y));
                }
            }
        }
    }

    /// Canonical representative of `v` modulo the span.
    pub fn remainder(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Add `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let f = self.field;
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &y) in row.iter_mut().zip(&w) {
                    if y != 0 {
                        *x = f.add(*x, f.mul(neg, y));
                    }
                }
            }
        }
        self.rows.push((pc, w));
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}
