//! Bit-packed GF(2) linear algebra: rank, solving, nullspace bases.
//!
//! Rows are `Vec<u64>` bit blocks. This backs the instantaneous-stabiliser
//! rank oracle and the small symplectic solves used when constructing and
//! evolving logical operators.

/// Dense GF(2) matrix with `cols` logical columns, rows packed into u64 words.
#[derive(Debug, Clone)]
pub struct BitMatrix {
    pub rows: Vec<Vec<u64>>,
    pub cols: usize,
    words: usize,
}

impl BitMatrix {
    pub fn new(cols: usize) -> Self {
        Self {
            rows: Vec::new(),
            cols,
            words: cols.div_ceil(64),
        }
    }

    pub fn zero_row(&self) -> Vec<u64> {
        vec![0u64; self.words]
    }

    pub fn push_row(&mut self, row: Vec<u64>) {
        debug_assert_eq!(row.len(), self.words);
        self.rows.push(row);
    }

    pub fn push_row_from_bits(&mut self, bits: impl IntoIterator<Item = usize>) {
        let mut row = self.zero_row();
        for b in bits {
            debug_assert!(b < self.cols);
            row[b / 64] |= 1u64 << (b % 64);
        }
        self.rows.push(row);
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// In-place row reduction; returns the rank. Row order is not preserved.
    pub fn rank(mut self) -> usize {
        gaussian_rank(&mut self.rows, self.cols)
    }
}

pub fn get_bit(row: &[u64], i: usize) -> bool {
    row[i / 64] >> (i % 64) & 1 == 1
}

pub fn set_bit(row: &mut [u64], i: usize) {
    row[i / 64] |= 1u64 << (i % 64);
}

pub fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

fn gaussian_rank(rows: &mut [Vec<u64>], cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| get_bit(&rows[r], col)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if get_bit(row, col) {
                xor_into(row, prow);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Solves `A x = b` over GF(2) where `a` holds the rows of `A` (each of
/// `cols` bits). Returns one solution as a bit vector of length `cols`,
/// or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<u64>], b: &[bool], cols: usize) -> Option<Vec<bool>> {
    let words = cols.div_ceil(64);
    // Augment with b as an extra column.
    let mut rows: Vec<(Vec<u64>, bool)> = a
        .iter()
        .zip(b)
        .map(|(r, &bit)| {
            debug_assert_eq!(r.len(), words);
            (r.clone(), bit)
        })
        .collect();

    let mut pivot_col_of_row = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| get_bit(&rows[r].0, col)) else {
            continue;
        };
        rows.swap(rank, p);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let (prow, pbit) = (&head[rank].0.clone(), head[rank].1);
        for row in tail.iter_mut() {
            if get_bit(&row.0, col) {
                xor_into(&mut row.0, prow);
                row.1 ^= pbit;
            }
        }
        pivot_col_of_row.push(col);
        rank += 1;
    }
    // Inconsistent if a zero row has b = 1.
    if rows[rank..].iter().any(|(_, bit)| *bit) {
        return None;
    }
    // Back-substitute with free variables set to 0.
    let mut x = vec![false; cols];
    for r in (0..rank).rev() {
        let col = pivot_col_of_row[r];
        let mut v = rows[r].1;
        for c in col + 1..cols {
            if get_bit(&rows[r].0, c) && x[c] {
                v = !v;
            }
        }
        x[col] = v;
    }
    Some(x)
}

/// Basis of the nullspace of `A` (rows of `cols` bits each); each returned
/// vector has length `cols`.
pub fn nullspace(a: &[Vec<u64>], cols: usize) -> Vec<Vec<bool>> {
    let words = cols.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = a.to_vec();
    for r in &rows {
        debug_assert_eq!(r.len(), words);
    }
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| get_bit(&rows[r], col)) else {
            continue;
        };
        rows.swap(rank, p);
        let prow = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && get_bit(row, col) {
                xor_into(row, &prow);
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    let is_pivot = {
        let mut v = vec![false; cols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![false; cols];
        x[free] = true;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            if get_bit(&rows[r], free) {
                x[pc] = true;
            }
        }
        basis.push(x);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_identity_and_dependent_rows() {
        let mut m = BitMatrix::new(4);
        m.push_row_from_bits([0]);
        m.push_row_from_bits([1]);
        m.push_row_from_bits([0, 1]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solve_small_system() {
        // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1
        let mut m = BitMatrix::new(3);
        m.push_row_from_bits([0, 1]);
        m.push_row_from_bits([1, 2]);
        m.push_row_from_bits([0, 2]);
        let x = solve(&m.rows, &[true, false, true], 3).unwrap();
        assert_eq!(x[0] ^ x[1], true);
        assert_eq!(x[1] ^ x[2], false);
        assert_eq!(x[0] ^ x[2], true);
    }

    #[test]
    fn inconsistent_system() {
        let mut m = BitMatrix::new(2);
        m.push_row_from_bits([0, 1]);
        m.push_row_from_bits([0, 1]);
        assert!(solve(&m.rows, &[true, false], 2).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        // single row x0 + x1 + x2 = 0 over 3 vars -> nullspace dim 2
        let mut m = BitMatrix::new(3);
        m.push_row_from_bits([0, 1, 2]);
        let ns = nullspace(&m.rows, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!(v.iter().filter(|&&b| b).count() % 2, 0);
        }
    }
}
