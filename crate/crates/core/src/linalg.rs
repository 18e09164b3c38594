//! Dense exact row reduction over the coefficient field, used by the degreewise
//! presentation kernels. Dimensions here are small (one graded piece at a time).

use crate::field::Coeff;

/// A growing row space in reduced echelon form.
pub struct RowSpace<F: Coeff> {
    cols: usize,
    /// Rows with pairwise distinct pivot columns, each normalized to pivot 1.
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Coeff> RowSpace<F> {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the space. Returns the residual row.
    pub fn reduce(&self, mut row: Vec<F>) -> Vec<F> {
        debug_assert_eq!(row.len(), self.cols);
        for (r, &p) in self.rows.iter().zip(&self.pivots) {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(r) {
                    *x = x.sub(&c.mul(y));
                }
            }
        }
        row
    }

    /// Insert `row` if independent. Returns true when the rank grew.
    pub fn insert(&mut self, row: Vec<F>) -> bool {
        let red = self.reduce(row);
        match red.iter().position(|c| !c.is_zero()) {
            None => false,
            Some(p) => {
                let inv = red[p].inv();
                let norm: Vec<F> = red.iter().map(|c| c.mul(&inv)).collect();
                // Back-substitute to keep earlier rows reduced at the new pivot.
                for r in &mut self.rows {
                    if !r[p].is_zero() {
                        let c = r[p].clone();
                        for (x, y) in r.iter_mut().zip(&norm) {
                            *x = x.sub(&c.mul(y));
                        }
                    }
                }
                self.rows.push(norm);
                self.pivots.push(p);
                true
            }
        }
    }

    pub fn contains(&self, row: Vec<F>) -> bool {
        self.reduce(row).iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Gf;

    fn row(v: &[i64]) -> Vec<Gf> {
        v.iter().map(|&n| Gf::new(n, 32003)).collect()
    }

    #[test]
    fn rank_and_membership() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(row(&[1, 2, 3])));
        assert!(s.insert(row(&[0, 1, 1])));
        assert!(!s.insert(row(&[1, 3, 4]))); // sum of the two
        assert_eq!(s.rank(), 2);
        assert!(s.contains(row(&[2, 5, 7])));
        assert!(!s.contains(row(&[0, 0, 1])));
    }
}
