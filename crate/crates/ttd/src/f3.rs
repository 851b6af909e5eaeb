//! Tiny F_3 linear algebra: spans, row reduction, kernels. Vectors are
//! `Vec<u8>` with entries in {0, 1, 2}.

pub type V3 = Vec<u8>;

pub fn add(a: &[u8], b: &[u8]) -> V3 {
    a.iter().zip(b).map(|(x, y)| (x + y) % 3).collect()
}

pub fn sub(a: &[u8], b: &[u8]) -> V3 {
    a.iter().zip(b).map(|(x, y)| (x + 2 * y) % 3).collect()
}

pub fn scale(a: &[u8], c: u8) -> V3 {
    a.iter().map(|x| (x * c) % 3).collect()
}

pub fn is_zero(a: &[u8]) -> bool {
    a.iter().all(|&x| x == 0)
}

/// Row-reduce in place; returns pivot column indices.
pub fn rref(rows: &mut Vec<V3>) -> Vec<usize> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut piv = Vec::new();
    let mut rank = 0;
    for c in 0..n {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        if rows[rank][c] == 2 {
            rows[rank] = scale(&rows[rank], 2);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][c] != 0 {
                let f = rows[i][c];
                rows[i] = sub(&rows[i], &scale(&rows[rank], f));
            }
        }
        piv.push(c);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    piv
}

/// Kernel basis of the linear map given by `rows` acting on F_3^n.
pub fn kernel(rows: &[V3], n: usize) -> Vec<V3> {
    let mut m: Vec<V3> = rows.to_vec();
    let piv = rref(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !piv.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![0u8; n];
        v[fc] = 1;
        for (i, &pc) in piv.iter().enumerate() {
            v[pc] = (3 - m[i][fc] % 3) % 3;
        }
        basis.push(v);
    }
    basis
}

/// An incrementally grown subspace of F_3^n.
#[derive(Clone, Debug)]
pub struct Span {
    pub n: usize,
    rows: Vec<V3>,
}

impl Span {
    pub fn new(n: usize) -> Self {
        Span { n, rows: vec![] }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut m = self.rows.clone();
        let piv = rref(&mut m);
        let mut w: V3 = v.to_vec();
        for (i, &pc) in piv.iter().enumerate() {
            if w[pc] != 0 {
                let f = w[pc];
                w = sub(&w, &scale(&m[i], f));
            }
        }
        is_zero(&w)
    }

    /// Adds a vector; returns `true` if it enlarged the span.
    pub fn add(&mut self, v: &[u8]) -> bool {
        if self.contains(v) {
            return false;
        }
        self.rows.push(v.to_vec());
        true
    }

    pub fn dim(&self) -> usize {
        let mut m = self.rows.clone();
        rref(&mut m).len()
    }

    pub fn reduced_basis(&self) -> Vec<V3> {
        let mut m = self.rows.clone();
        rref(&mut m);
        m
    }

    /// Row vectors annihilating the span (a basis of the dual complement).
    pub fn annihilator(&self) -> Vec<V3> {
        if self.rows.is_empty() {
            return (0..self.n)
                .map(|i| {
                    let mut v = vec![0u8; self.n];
                    v[i] = 1;
                    v
                })
                .collect();
        }
        kernel(&self.rows, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn span_and_kernel() {
        let mut s = Span::new(3);
        assert!(s.add(&[1, 2, 0]));
        assert!(s.add(&[0, 1, 1]));
        assert!(!s.add(&[1, 0, 1])); // = row1 + row2 * ... check: (1,2,0)+(0,1,1)=(1,0,1)
        assert_eq!(s.dim(), 2);
        let ann = s.annihilator();
        assert_eq!(ann.len(), 1);
        for row in &s.reduced_basis() {
            let dot: u8 = row.iter().zip(&ann[0]).map(|(a, b)| a * b % 3).sum::<u8>() % 3;
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn kernel_of_singular_map() {
        let rows = vec![vec![1, 1, 1], vec![2, 2, 2]];
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 2);
    }
}
