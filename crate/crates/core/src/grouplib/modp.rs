//! Small-prime modular linear algebra used by the character-table solver.
//!
//! Everything here works with `u64` residues for primes well below 2³²;
//! intermediate products go through `u128`.

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    pow(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
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

/// Smallest prime p ≡ 1 (mod modulus) with p > lower_bound.
pub fn find_prime(modulus: u64, lower_bound: u64) -> u64 {
    let mut p = (lower_bound / modulus + 1) * modulus + 1;
    loop {
        if is_prime(p) {
            return p;
        }
        p += modulus;
    }
}

/// A generator of the multiplicative group of F_p.
pub fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..p {
        for &q in &factors {
            if pow(g, (p - 1) / q, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("F_p has a primitive root");
}

/// Determinant of a square matrix mod p.
pub fn det(matrix: &[Vec<u64>], p: u64) -> u64 {
    let n = matrix.len();
    let mut a: Vec<Vec<u64>> = matrix.to_vec();
    let mut result = 1u64;
    for k in 0..n {
        let pivot = (k..n).find(|&r| a[r][k] % p != 0);
        let pivot = match pivot {
            Some(r) => r,
            None => return 0,
        };
        if pivot != k {
            a.swap(pivot, k);
            result = sub(0, result, p);
        }
        result = mul(result, a[k][k], p);
        let piv_inv = inv(a[k][k], p);
        for r in k + 1..n {
            if a[r][k] % p == 0 {
                continue;
            }
            let factor = mul(a[r][k], piv_inv, p);
            for c in k..n {
                let t = mul(factor, a[k][c], p);
                a[r][c] = sub(a[r][c], t, p);
            }
        }
    }
    result
}

/// Basis of the nullspace of a (not necessarily square) matrix mod p.
pub fn nullspace(matrix: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a: Vec<Vec<u64>> = matrix.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
    let rows = a.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| a[r][col] != 0);
        let pivot = match pivot {
            Some(r) => r,
            None => continue,
        };
        a.swap(pivot, row);
        let piv_inv = inv(a[row][col], p);
        for c in col..cols {
            a[row][c] = mul(a[row][c], piv_inv, p);
        }
        for r in 0..rows {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..cols {
                    let t = mul(factor, a[row][c], p);
                    a[r][c] = sub(a[r][c], t, p);
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    let pivot_cols: Vec<usize> = pivot_col_of_row.clone();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = sub(0, a[r][free], p);
        }
        basis.push(v);
    }
    basis
}

/// Solve `A x = b` mod p for a consistent system; returns one solution.
pub fn solve(matrix: &[Vec<u64>], b: &[u64], p: u64) -> Option<Vec<u64>> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    let mut a: Vec<Vec<u64>> = matrix
        .iter()
        .zip(b.iter())
        .map(|(r, &rhs)| {
            let mut row: Vec<u64> = r.iter().map(|&x| x % p).collect();
            row.push(rhs % p);
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| a[r][col] != 0);
        let pivot = match pivot {
            Some(r) => r,
            None => continue,
        };
        a.swap(pivot, row);
        let piv_inv = inv(a[row][col], p);
        for c in col..=cols {
            a[row][c] = mul(a[row][c], piv_inv, p);
        }
        for r in 0..rows {
            if r != row && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..=cols {
                    let t = mul(factor, a[row][c], p);
                    a[r][c] = sub(a[r][c], t, p);
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }
    // Inconsistent row check.
    for r in row..rows {
        if a[r][cols] != 0 {
            return None;
        }
    }
    let mut x = vec![0u64; cols];
    for &(r, c) in &pivots {
        x[c] = a[r][cols];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_hunting() {
        assert!(is_prime(421));
        assert_eq!(find_prime(60, 240), 421);
        let g = primitive_root(421);
        assert_eq!(pow(g, 420, 421), 1);
        assert_ne!(pow(g, 210, 421), 1);
        assert_ne!(pow(g, 140, 421), 1);
    }

    #[test]
    fn nullspace_and_solve() {
        let p = 13;
        let a = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&a, 3, p);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let dot: u64 = (0..3).map(|i| mul(a[0][i], v[i], p)).sum::<u64>() % p;
            assert_eq!(dot, 0);
        }
        let m = vec![vec![1, 1], vec![1, 12]]; // [[1,1],[1,-1]]
        let x = solve(&m, &[5, 1], p).unwrap();
        assert_eq!((x[0] + x[1]) % p, 5);
        assert_eq!((x[0] + 12 * x[1]) % p, 1);
        assert_eq!(det(&m, p), sub(12, 1, p));
    }
}
