//! Exact irreducible character tables of finite groups.
//!
//! Two cooperating algorithms:
//!
//! 1. A tensor-split pass: seed with the trivial character and a faithful
//!    character π, repeatedly form (known irreducible)·π, strip known
//!    constituents with the exact inner product, and adopt any norm-1
//!    remainder as a new irreducible. Faithfulness of π guarantees every
//!    irreducible *occurs* in some tensor power, but occurrence does not
//!    imply separability: constituents that a ring automorphism of R(Γ)
//!    fixing π permutes (the conjugate pair in a cyclic group, the three
//!    sign characters of the quaternion group, the two branch characters
//!    past a fork of an affine E diagram) can never be isolated this way,
//!    so the pass is allowed to stall.
//!
//! 2. A class-matrix completion: central characters are the simultaneous
//!    eigenvectors of the class-sum multiplication matrices. We find them
//!    by exact linear algebra over a small prime field F_p with p ≡ 1
//!    (mod exponent), then lift each character value back to the cyclotomic
//!    field ℚ(ζ_d) through its exact eigenvalue-multiplicity decomposition.
//!    This always yields the full table.
//!
//! Every character adopted by the tensor-split pass is cross-checked
//! against the completed table, and the final table is verified row-
//! orthonormal with Σ nᵢ² = |Γ| before being returned.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::modp;
use super::table::GroupTable;
use super::ConjugacyClass;
use crate::exactnum::{rat, Cyclotomic, Rational};

/// Maximum number of tensor layers the split pass explores before handing
/// over to the class-matrix completion.
pub const TENSOR_DEPTH_CAP: u32 = 20;

/// Exact standard inner product ⟨f,g⟩ = (1/|Γ|) Σ_c |c|·f(c)·g(c⁻¹-class).
pub fn inner_product_classwise(
    f: &[Cyclotomic],
    g: &[Cyclotomic],
    classes: &[ConjugacyClass],
    inverse_class: &[usize],
    order: usize,
) -> Cyclotomic {
    let mut acc = Cyclotomic::zero();
    for (l, class) in classes.iter().enumerate() {
        let term = &f[l] * &g[inverse_class[l]];
        acc += &term.scale(&rat(class.size as i64, 1));
    }
    acc.scale(&rat(1, order as i64))
}

/// Class index → class of the inverses of its members.
pub fn inverse_class_map(
    table: &GroupTable,
    classes: &[ConjugacyClass],
    class_of: &[usize],
) -> Vec<usize> {
    classes
        .iter()
        .map(|c| class_of[table.inv(c.representative)])
        .collect()
}

/// Complete irreducible character table, one value vector per character,
/// indexed by the given class list. Rows are ordered with the trivial
/// character first, then by (degree, rendered values).
///
/// `seed` optionally supplies the values of a faithful character to drive
/// the tensor-split pass; the class-matrix completion runs regardless and
/// the two results are cross-checked.
pub fn irreducible_characters(
    table: &GroupTable,
    classes: &[ConjugacyClass],
    seed: Option<&[Cyclotomic]>,
) -> Vec<Vec<Cyclotomic>> {
    let class_of = table.class_map(classes);
    let inverse_class = inverse_class_map(table, classes, &class_of);

    let adopted = match seed {
        Some(pi) => tensor_split_pass(table, classes, &inverse_class, pi),
        None => Vec::new(),
    };

    let mut rows = class_matrix_table(table, classes, &class_of, &inverse_class);

    for chi in &adopted {
        assert!(
            rows.iter().any(|row| row == chi),
            "tensor-split produced a character missing from the completed table"
        );
    }

    // Deterministic order: trivial first, then by (degree, rendering).
    let trivial_at = rows
        .iter()
        .position(|row| row.iter().all(|v| *v == Cyclotomic::one()))
        .expect("trivial character present");
    let trivial = rows.remove(trivial_at);
    rows.sort_by_key(|row| {
        let degree = row[0].to_integer().expect("integral degree");
        let rendering: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        (degree, rendering)
    });
    rows.insert(0, trivial);

    verify_table(table, classes, &inverse_class, &rows);
    rows
}

fn tensor_split_pass(
    table: &GroupTable,
    classes: &[ConjugacyClass],
    inverse_class: &[usize],
    pi: &[Cyclotomic],
) -> Vec<Vec<Cyclotomic>> {
    let n = table.order();
    let k = classes.len();
    let trivial = vec![Cyclotomic::one(); k];
    let mut known: Vec<Vec<Cyclotomic>> = vec![trivial];
    let mut sum_sq: usize = 1;

    let ip = |f: &[Cyclotomic], g: &[Cyclotomic]| {
        inner_product_classwise(f, g, classes, inverse_class, n)
    };
    let tensor = |f: &[Cyclotomic], g: &[Cyclotomic]| -> Vec<Cyclotomic> {
        f.iter().zip(g.iter()).map(|(a, b)| a * b).collect()
    };

    let mut queue: std::collections::VecDeque<(Vec<Cyclotomic>, u32)> =
        std::collections::VecDeque::new();
    queue.push_back((pi.to_vec(), 1));

    while let Some((candidate, depth)) = queue.pop_front() {
        if sum_sq == n || depth > TENSOR_DEPTH_CAP {
            break;
        }
        let mut remainder = candidate;
        for chi in &known {
            let mult = ip(&remainder, chi);
            let mult = mult
                .to_integer()
                .expect("genuine character has integral multiplicities");
            if mult.to_i64() != Some(0) {
                let m = Cyclotomic::from_rational(Rational::from_integer(mult));
                for (r, c) in remainder.iter_mut().zip(chi.iter()) {
                    *r = &*r - &(&m * c);
                }
            }
        }
        if remainder.iter().all(|v| v.is_zero()) {
            continue;
        }
        let norm = ip(&remainder, &remainder)
            .to_integer()
            .expect("norm of a genuine character is integral");
        if norm == BigInt::from(1) {
            let degree = remainder[0]
                .to_integer()
                .expect("integral degree")
                .to_usize()
                .expect("positive degree");
            sum_sq += degree * degree;
            queue.push_back((tensor(&remainder, pi), depth + 1));
            known.push(remainder);
        }
    }
    known
}

/// Full table via simultaneous eigenvectors of the class-sum matrices over
/// F_p, with exact cyclotomic lifting of each value.
fn class_matrix_table(
    table: &GroupTable,
    classes: &[ConjugacyClass],
    class_of: &[usize],
    inverse_class: &[usize],
) -> Vec<Vec<Cyclotomic>> {
    let n = table.order();
    let k = classes.len();
    if k == 1 {
        return vec![vec![Cyclotomic::one()]];
    }
    let exponent = table.exponent();
    let p = modp::find_prime(exponent, 2 * n as u64);
    let root = modp::primitive_root(p);
    let w = modp::pow(root, (p - 1) / exponent, p); // primitive e-th root mod p

    // Class-sum structure constants: matrices B_i with (B_i)[j][l] =
    // #{(x,y) ∈ c_i × c_j : xy = z_l} for a fixed representative z_l.
    // Each central character vector v (v_l = |c_l| χ(c_l)/χ(1)) satisfies
    // B_i v = v_i v for every i.
    let mut b = vec![vec![vec![0u64; k]; k]; k];
    for (l, class_l) in classes.iter().enumerate() {
        let z = class_l.representative;
        for (i, class_i) in classes.iter().enumerate() {
            for &x in &class_i.members {
                let y = table.mul(table.inv(x), z);
                b[i][class_of[y]][l] += 1;
            }
        }
    }

    // Simultaneous eigenspace refinement over F_p. Subspaces are stored as
    // row bases in the ambient k-dimensional space.
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k)
        .map(|i| {
            let mut e = vec![0u64; k];
            e[i] = 1;
            e
        })
        .collect()];
    for bi in &b {
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            next.extend(split_invariant_subspace(bi, &basis, k, p));
        }
        spaces = next;
    }
    assert!(
        spaces.iter().all(|s| s.len() == 1),
        "class-matrix eigenspaces did not refine to lines"
    );
    assert_eq!(spaces.len(), k);

    let id_class = classes
        .iter()
        .position(|c| c.size == 1 && c.element_order == 1)
        .expect("identity class");

    let mut rows = Vec::new();
    for space in spaces {
        let mut v = space.into_iter().next().unwrap();
        assert!(v[id_class] != 0, "central character nonzero at identity");
        let norm = modp::inv(v[id_class], p);
        for x in v.iter_mut() {
            *x = modp::mul(*x, norm, p);
        }
        // Degree from ⟨χ,χ⟩ = 1: d² = |Γ| / Σ_l v_l v_{l*} / |c_l|.
        let mut s = 0u64;
        for l in 0..k {
            let t = modp::mul(v[l], v[inverse_class[l]], p);
            s = modp::add(s, modp::mul(t, modp::inv(classes[l].size as u64, p), p), p);
        }
        let d_sq = modp::mul(n as u64, modp::inv(s, p), p);
        let degree = (1..=n)
            .map(|d| d as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|&d| modp::mul(d, d, p) == d_sq)
            .expect("integral degree exists");

        // χ(c_l) mod p.
        let theta: Vec<u64> = (0..k)
            .map(|l| {
                modp::mul(
                    modp::mul(degree, v[l], p),
                    modp::inv(classes[l].size as u64, p),
                    p,
                )
            })
            .collect();

        // Exact lift: χ(g) = Σ_i m_i ζ_d^i where m_i is the multiplicity of
        // the eigenvalue ζ_d^i of ρ(g), recovered by a DFT over ⟨g⟩ mod p.
        let mut row = Vec::with_capacity(k);
        for (l, class) in classes.iter().enumerate() {
            let g = class.representative;
            let d = table.element_order(g) as u64;
            let z = modp::pow(w, exponent / d, p);
            let z_inv = modp::inv(z, p);
            let mut power_thetas = Vec::with_capacity(d as usize);
            let mut x = 0usize; // g^0
            for _ in 0..d {
                power_thetas.push(theta[class_of[x]]);
                x = table.mul(x, g);
            }
            let d_inv = modp::inv(d, p);
            let mut terms: Vec<(u64, Rational)> = Vec::new();
            let mut mult_sum = 0u64;
            for i in 0..d {
                let mut acc = 0u64;
                for (j, &t) in power_thetas.iter().enumerate() {
                    let phase = modp::pow(z_inv, i * j as u64, p);
                    acc = modp::add(acc, modp::mul(t, phase, p), p);
                }
                let m = modp::mul(acc, d_inv, p);
                assert!(
                    m <= degree,
                    "eigenvalue multiplicity exceeds the degree; lift failed"
                );
                mult_sum += m;
                if m > 0 {
                    terms.push((i, rat(m as i64, 1)));
                }
            }
            assert_eq!(mult_sum, degree, "eigenvalue multiplicities sum to degree");
            row.push(Cyclotomic::new(d, &terms));
            let _ = l;
        }
        rows.push(row);
    }
    rows
}

// Split an invariant subspace (row basis) into the eigenspaces of `op`.
fn split_invariant_subspace(
    op: &[Vec<u64>],
    basis: &[Vec<u64>],
    k: usize,
    p: u64,
) -> Vec<Vec<Vec<u64>>> {
    let dim = basis.len();
    // Coordinates of op·b_j in the basis: columns of the restricted matrix.
    // Solve basisᵀ · x = op · b_j for each j.
    let basis_t: Vec<Vec<u64>> = (0..k)
        .map(|r| (0..dim).map(|j| basis[j][r]).collect())
        .collect();
    let mut restricted = vec![vec![0u64; dim]; dim];
    for (j, bj) in basis.iter().enumerate() {
        let image: Vec<u64> = (0..k)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..k {
                    acc = modp::add(acc, modp::mul(op[r][c], bj[c], p), p);
                }
                acc
            })
            .collect();
        let x = modp::solve(&basis_t, &image, p)
            .expect("operator preserves the invariant subspace");
        for i in 0..dim {
            restricted[i][j] = x[i];
        }
    }
    // Eigenvalues: roots of det(restricted − λI) found by scanning F_p.
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in 0..p {
        let shifted: Vec<Vec<u64>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            modp::sub(restricted[i][j], lambda, p)
                        } else {
                            restricted[i][j]
                        }
                    })
                    .collect()
            })
            .collect();
        if modp::det(&shifted, p) != 0 {
            continue;
        }
        let ns = modp::nullspace(&shifted, dim, p);
        assert!(!ns.is_empty());
        total += ns.len();
        let lifted: Vec<Vec<u64>> = ns
            .iter()
            .map(|coords| {
                (0..k)
                    .map(|r| {
                        let mut acc = 0u64;
                        for (j, &c) in coords.iter().enumerate() {
                            acc = modp::add(acc, modp::mul(c, basis[j][r], p), p);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        out.push(lifted);
        if total == dim {
            break;
        }
    }
    assert_eq!(
        total, dim,
        "class matrix not diagonalizable over F_p; prime choice invalid"
    );
    out
}

fn verify_table(
    table: &GroupTable,
    classes: &[ConjugacyClass],
    inverse_class: &[usize],
    rows: &[Vec<Cyclotomic>],
) {
    let n = table.order();
    let k = classes.len();
    assert_eq!(rows.len(), k, "character count equals class count");
    let mut sum_sq = BigInt::from(0);
    for row in rows {
        sum_sq += row[0].to_integer().expect("integral degree").pow(2);
    }
    assert_eq!(sum_sq, BigInt::from(n as i64), "Σ nᵢ² = |Γ|");
    for (a, ra) in rows.iter().enumerate() {
        for (bi, rb) in rows.iter().enumerate() {
            let ip = inner_product_classwise(ra, rb, classes, inverse_class, n);
            let expected = if a == bi {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            };
            assert_eq!(ip, expected, "rows {a},{bi} fail orthonormality");
        }
    }
}
