//! Small dense linear algebra over a prime field `F_p` with `p < 2^31`.

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of `F_p^*`.
pub(crate) fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let qs = prime_divisors(p - 1);
    (2..p)
        .find(|&g| qs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots")
}

/// Row vectors spanning a subspace, kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub(crate) struct Subspace {
    pub rows: Vec<Vec<u64>>,
    pub pivots: Vec<usize>,
}

impl Subspace {
    pub fn full(n: usize) -> Self {
        Self {
            rows: (0..n)
                .map(|i| {
                    let mut v = vec![0; n];
                    v[i] = 1;
                    v
                })
                .collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Span of arbitrary vectors, echelonized.
    pub fn span(mut vecs: Vec<Vec<u64>>, p: u64) -> Self {
        let pivots = rref(&mut vecs, p);
        vecs.truncate(pivots.len());
        Self { rows: vecs, pivots }
    }
}

/// In-place reduced row echelon form; returns pivot columns. Zero rows are
/// moved to the bottom.
pub(crate) fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : A v = 0}` for a square matrix `A` (row-major).
pub(crate) fn nullspace(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, Vec::len);
    let mut m = a.to_vec();
    let pivots = rref(&mut m, p);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI − A)`, coefficients low to high, via
/// reduction to upper Hessenberg form.
pub(crate) fn char_poly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h = a.to_vec();
    // Hessenberg reduction by similarity transforms.
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let inv = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            let u = h[i][m - 1] * inv % p;
            if u == 0 {
                continue;
            }
            // row_i -= u * row_m
            for j in 0..n {
                let t = u * h[m][j] % p;
                h[i][j] = (h[i][j] + p - t) % p;
            }
            // col_m += u * col_i
            for row in h.iter_mut() {
                row[m] = (row[m] + u * row[i]) % p;
            }
        }
    }
    // p_k(x) for the leading k×k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        // (x − h_kk) p_{k}
        let prev = &polys[k];
        let mut next = vec![0u64; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + p - c * h[k][k] % p) % p;
        }
        let mut t = 1u64;
        for i in (0..k).rev() {
            t = t * h[i + 1][i] % p;
            let coef = t * h[i][k] % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = (next[d] + p - coef * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub(crate) fn eval_poly(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// All roots of `poly` in `F_p`, ascending.
pub(crate) fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval_poly(poly, x, p) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = 433;

    fn det_brute(a: &[Vec<u64>], p: u64) -> u64 {
        let mut m = a.to_vec();
        let n = m.len();
        let mut det = 1u64;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| m[r][c] != 0) else {
                return 0;
            };
            if r != c {
                m.swap(r, c);
                det = (p - det) % p;
            }
            det = det * m[c][c] % p;
            let inv = inv_mod(m[c][c], p);
            for r in c + 1..n {
                let f = m[r][c] * inv % p;
                for j in 0..n {
                    m[r][j] = (m[r][j] + p - f * m[c][j] % p) % p;
                }
            }
        }
        det
    }

    #[test]
    fn char_poly_matches_determinant() {
        let a = vec![
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![5, 3, 5, 8],
            vec![9, 7, 9, 3],
        ];
        let cp = char_poly(&a, P);
        assert_eq!(cp.len(), 5);
        assert_eq!(cp[4], 1);
        for x in [0u64, 1, 2, 17, 400] {
            let shifted: Vec<Vec<u64>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            let d = if i == j { x } else { 0 };
                            (d + P - a[i][j]) % P
                        })
                        .collect()
                })
                .collect();
            assert_eq!(eval_poly(&cp, x, P), det_brute(&shifted, P));
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = vec![vec![1, 2, 3], vec![2, 4, 6], vec![3, 6, 9]];
        let ns = nullspace(&a, P);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &a {
                let s: u64 = row.iter().zip(&v).map(|(x, y)| x * y % P).sum::<u64>() % P;
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(433), 5);
        assert!(is_prime(433));
        assert!(!is_prime(435));
    }
}
