use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2m::{Fe, FieldCtx};

/// A full-rank k x n generator matrix over GF(q), stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    ctx: Arc<FieldCtx>,
    k: usize,
    n: usize,
    entries: Vec<Fe>,
}

impl fmt::Debug for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "GeneratorMatrix {}x{} over GF({}) [",
            self.k,
            self.n,
            self.ctx.q()
        )?;
        for i in 0..self.k {
            let row: Vec<String> = self.row(i).iter().map(|x| x.0.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl GeneratorMatrix {
    /// Validates shape, element range and full row rank.
    pub fn new(ctx: Arc<FieldCtx>, rows: Vec<Vec<Fe>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::MalformedMatrix("no rows".into()));
        }
        let n = rows[0].len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::MalformedMatrix(
                "rows must be nonempty and equally long".into(),
            ));
        }
        if k > n {
            return Err(Error::MalformedMatrix(format!(
                "{k} rows exceed {n} columns"
            )));
        }
        for x in rows.iter().flatten() {
            ctx.elem(x.0)?;
        }
        let g = GeneratorMatrix {
            ctx,
            k,
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        let rank = g.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(g)
    }

    pub fn from_columns(ctx: Arc<FieldCtx>, columns: &[Vec<Fe>]) -> Result<Self> {
        let k = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != k) {
            return Err(Error::MalformedMatrix(
                "columns must be equally long".into(),
            ));
        }
        let rows = (0..k)
            .map(|i| columns.iter().map(|c| c[i]).collect())
            .collect();
        Self::new(ctx, rows)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.ctx.q()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Fe]> {
        self.entries.chunks(self.n)
    }

    pub fn column(&self, j: usize) -> Vec<Fe> {
        (0..self.k).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<Fe>> + '_ {
        (0..self.n).map(|j| self.column(j))
    }

    /// `message * G`.
    pub fn encode(&self, message: &[Fe]) -> Vec<Fe> {
        assert_eq!(message.len(), self.k);
        let f = &*self.ctx;
        let mut out = vec![Fe::ZERO; self.n];
        for (row, &m) in self.rows().zip(message) {
            if m.is_zero() {
                continue;
            }
            for (o, &g) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(m, g));
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Fe>>, Vec<usize>) {
        row_reduce(&self.ctx, self.rows().map(<[Fe]>::to_vec).collect())
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Appends a parity column holding each row's coordinate sum, so every
    /// codeword of the extension sums to zero.
    pub fn extend(&self) -> GeneratorMatrix {
        let f = &*self.ctx;
        let rows = self
            .rows()
            .map(|r| {
                let parity = r.iter().fold(Fe::ZERO, |acc, &x| f.add(acc, x));
                let mut r = r.to_vec();
                r.push(parity);
                r
            })
            .collect();
        GeneratorMatrix::new(self.ctx.clone(), rows).expect("extension keeps full rank")
    }

    /// A generator matrix of the dual code (a parity-check matrix of this
    /// one). `None` when k = n and the dual is the zero code.
    pub fn dual(&self) -> Option<GeneratorMatrix> {
        if self.k == self.n {
            return None;
        }
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.n).filter(|j| !pivots.contains(j)).collect();
        let rows = free
            .iter()
            .map(|&fc| {
                let mut h = vec![Fe::ZERO; self.n];
                h[fc] = Fe::ONE;
                // characteristic 2: -r = r
                for (i, &p) in pivots.iter().enumerate() {
                    h[p] = r[i][fc];
                }
                h
            })
            .collect();
        Some(GeneratorMatrix::new(self.ctx.clone(), rows).expect("parity checks are independent"))
    }

    /// The same code with columns reordered: column `j` of the result is
    /// column `perm[j]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Result<GeneratorMatrix> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::MalformedMatrix(
                "not a permutation of the columns".into(),
            ));
        }
        let cols: Vec<Vec<Fe>> = perm.iter().map(|&p| self.column(p)).collect();
        GeneratorMatrix::from_columns(self.ctx.clone(), &cols)
    }

    pub fn scale_column(&self, j: usize, by: Fe) -> Result<GeneratorMatrix> {
        if by.is_zero() {
            return Err(Error::Precondition("column scale must be nonzero".into()));
        }
        let mut cols: Vec<Vec<Fe>> = self.columns().collect();
        for x in &mut cols[j] {
            *x = self.ctx.mul(*x, by);
        }
        GeneratorMatrix::from_columns(self.ctx.clone(), &cols)
    }
}

/// Gauss-Jordan elimination over GF(q).
pub fn row_reduce(f: &FieldCtx, mut rows: Vec<Vec<Fe>>) -> (Vec<Vec<Fe>>, Vec<usize>) {
    let n = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            let factor = row[c];
            if i != r && !factor.is_zero() {
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x = f.add(*x, f.mul(factor, p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(pivots.len());
    (rows, pivots)
}

/// Rank of an arbitrary list of vectors.
pub fn rank_of(f: &FieldCtx, vectors: &[Vec<Fe>]) -> usize {
    row_reduce(f, vectors.to_vec()).1.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: u32) -> Arc<FieldCtx> {
        Arc::new(FieldCtx::new(m).unwrap())
    }

    fn fe(rows: &[&[u32]]) -> Vec<Vec<Fe>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| Fe(x)).collect())
            .collect()
    }

    #[test]
    fn rejects_bad_shapes() {
        let c = ctx(3);
        assert!(GeneratorMatrix::new(c.clone(), vec![]).is_err());
        assert!(GeneratorMatrix::new(c.clone(), fe(&[&[1, 2], &[3]])).is_err());
        assert!(GeneratorMatrix::new(c.clone(), fe(&[&[1, 9]])).is_err());
        assert!(matches!(
            GeneratorMatrix::new(c, fe(&[&[1, 2, 3], &[2, 4, 6]])),
            Err(Error::RankDeficient { rank: 1, k: 2 })
        ));
    }

    #[test]
    fn extension_sums_to_zero() {
        let c = ctx(3);
        let g = GeneratorMatrix::new(c.clone(), fe(&[&[1, 2, 3, 4], &[0, 1, 5, 7]])).unwrap();
        let ext = g.extend();
        assert_eq!(ext.n(), 5);
        for a in c.elements() {
            for b in c.elements() {
                let w = ext.encode(&[a, b]);
                assert_eq!(w.iter().fold(Fe::ZERO, |s, &x| c.add(s, x)), Fe::ZERO);
            }
        }
    }

    #[test]
    fn dual_is_orthogonal() {
        let c = ctx(4);
        let g = GeneratorMatrix::new(
            c.clone(),
            fe(&[
                &[1, 2, 3, 4, 5, 6],
                &[0, 1, 5, 7, 9, 11],
                &[3, 3, 0, 1, 2, 15],
            ]),
        )
        .unwrap();
        let h = g.dual().unwrap();
        assert_eq!(h.k(), 3);
        for gr in g.rows() {
            for hr in h.rows() {
                let dot = gr
                    .iter()
                    .zip(hr)
                    .fold(Fe::ZERO, |s, (&a, &b)| c.add(s, c.mul(a, b)));
                assert_eq!(dot, Fe::ZERO);
            }
        }
        let full = GeneratorMatrix::new(c, fe(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(full.dual().is_none());
    }

    #[test]
    fn permutation_validation() {
        let c = ctx(3);
        let g = GeneratorMatrix::new(c, fe(&[&[1, 2, 3]])).unwrap();
        assert!(g.permute_columns(&[0, 0, 1]).is_err());
        let p = g.permute_columns(&[2, 0, 1]).unwrap();
        assert_eq!(p.row(0), &[Fe(3), Fe(1), Fe(2)]);
    }
}
