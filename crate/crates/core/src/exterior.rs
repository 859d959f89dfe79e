//! The Γₙ action on ℂ^{kn} = (ℂ^k)ⁿ and the alternating-sum virtual
//! character λ(ℂ^{kn}) = Σ (−1)^i Λ^i ℂ^{kn}.
//!
//! The character value of λ(V) at g is Π(1 − tᵢ) over the eigenvalues of
//! g on V, i.e. det(I − g|V); evaluating it on a canonical representative
//! of each conjugacy type gives λ(ℂ^{kn}) as a type-indexed class
//! function. For small kn the determinant route is cross-checked against
//! the literal alternating sum of exterior-power traces, which ties the
//! elementary-symmetric-function identity Σ(−1)^m e_m = det(I − M) into
//! the verified chain.
//!
//! The headline check is `verify_identity`: λ(ℂ^{kn}) computed this way
//! coincides type-by-type with η_n(λ(π)) built by the wreath machinery —
//! and is identically zero when Γ is trivial.

use serde_json::json;

use crate::exactnum::Cyclotomic;
use crate::grouplib::MatrixGroup;
use crate::linalg::CycMatrix;
use crate::mckay::xi_character;
use crate::wreath::{
    enumerate_types, eta_n, type_of, Partition, PartitionFunction, WreathClassFunction,
    WreathElement,
};

/// Largest kn for which `lambda_char` re-verifies det(I − M) against the
/// literal alternating sum of exterior-power traces (the binomial blow-up
/// makes larger sizes pointless once the identity is pinned at small size).
pub const LITERAL_CHECK_MAX_DIM: usize = 6;

/// The kn×kn matrix of (g, σ) on (ℂ^k)ⁿ: output slot i is π(g_i) applied
/// to input slot σ⁻¹(i). For nontrivial catalog groups k must be 2 (the
/// SL₂ embedding); the trivial group acts by bare block permutations for
/// any k.
pub fn action_matrix(x: &WreathElement, group: &MatrixGroup, k: usize) -> CycMatrix {
    assert!(
        group.order() == 1 || k == 2,
        "catalog groups only carry the SL₂ embedding"
    );
    let n = x.n();
    let mut sigma_inv = vec![0usize; n];
    for i in 0..n {
        sigma_inv[x.sigma[i]] = i;
    }
    let mut m = CycMatrix::zero(k * n, k * n);
    for slot in 0..n {
        let source = sigma_inv[slot];
        for a in 0..k {
            for b in 0..k {
                let entry = if group.order() == 1 {
                    if a == b {
                        Cyclotomic::one()
                    } else {
                        Cyclotomic::zero()
                    }
                } else {
                    group.matrix(x.g[slot]).entries[a * 2 + b].clone()
                };
                m[(slot * k + a, source * k + b)] = entry;
            }
        }
    }
    m
}

/// A canonical element of the conjugacy class with type ρ: for each part i
/// of ρ(c), a cycle on consecutive slots carrying (rep(c), e, …, e), whose
/// cycle-product is the class representative by construction.
pub fn canonical_representative(rho: &PartitionFunction, group: &MatrixGroup) -> WreathElement {
    let n = rho.weight();
    let mut g = vec![0usize; n];
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut cursor = 0usize;
    for (&c, partition) in rho.iter() {
        let rep = group.conjugacy_classes()[c].representative;
        for &part in partition.parts() {
            let len = part as usize;
            g[cursor] = rep;
            // Cycle cursor → cursor+1 → … → cursor+len−1 → cursor.
            for offset in 0..len {
                let i = cursor + offset;
                sigma[i] = if offset + 1 < len { i + 1 } else { cursor };
            }
            cursor += len;
        }
    }
    WreathElement { g, sigma }
}

/// λ(ℂ^{kn}) as a type-indexed class function: det(I − M(ρ)) on the
/// canonical representative of each type, cross-checked for kn ≤ 6
/// against the literal alternating sum Σ (−1)^i tr Λ^i(M).
pub fn lambda_char(group: &MatrixGroup, k: usize, n: usize) -> WreathClassFunction {
    let identity = CycMatrix::identity(k * n);
    WreathClassFunction::from_fn(group, n, |rho| {
        let rep = canonical_representative(rho, group);
        debug_assert_eq!(type_of(&rep, group), *rho);
        let m = action_matrix(&rep, group, k);
        let det = identity.sub(&m).det();
        if k * n <= LITERAL_CHECK_MAX_DIM {
            let mut alternating = Cyclotomic::zero();
            for i in 0..=k * n {
                let tr = m.exterior_power_trace(i);
                if i % 2 == 0 {
                    alternating += &tr;
                } else {
                    alternating -= &tr;
                }
            }
            assert_eq!(
                alternating, det,
                "det(I − M) must equal the literal alternating sum at type {rho}"
            );
        }
        det
    })
}

/// Per-type comparison of λ(ℂ^{kn}) with η_n(λ(π)).
#[derive(Debug, Clone)]
pub struct TypeComparison {
    pub conjugacy_type: PartitionFunction,
    pub lambda_value: Cyclotomic,
    pub eta_value: Cyclotomic,
    pub equal: bool,
}

/// Verification report for one (Γ, k, n) triple.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub group: String,
    pub k: usize,
    pub n: usize,
    pub types: Vec<TypeComparison>,
    pub verdict: bool,
}

impl IdentityReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": "1",
            "group": self.group,
            "k": self.k,
            "n": self.n,
            "types": self.types.iter().map(|t| json!({
                "type": t.conjugacy_type.to_string(),
                "lambda_value": t.lambda_value.to_string(),
                "eta_value": t.eta_value.to_string(),
                "equal": t.equal,
            })).collect::<Vec<_>>(),
            "verdict": if self.verdict { "equal" } else { "unequal" },
        })
    }
}

/// Compare λ(ℂ^{kn}) against η_n(λ(π)) type-by-type. Both sides are
/// computed along independent routes: exterior determinants on canonical
/// representatives versus the multiplicative cycle formula on ξ = 2γ₀ − π.
pub fn verify_identity(group: &MatrixGroup, k: usize, n: usize) -> IdentityReport {
    let lambda = lambda_char(group, k, n);
    let xi = if group.order() == 1 {
        // λ(π) for the trivial group in ℂ^k is the zero class function.
        crate::grouplib::ClassFunction::constant(Cyclotomic::zero(), 1)
    } else {
        xi_character(group)
    };
    let eta = eta_n(&xi, n, group);
    let mut types = Vec::new();
    let mut verdict = true;
    for rho in enumerate_types(group.num_classes(), n) {
        let lambda_value = lambda.value(&rho);
        let eta_value = eta.value(&rho);
        let equal = lambda_value == eta_value;
        verdict &= equal;
        types.push(TypeComparison {
            conjugacy_type: rho,
            lambda_value,
            eta_value,
            equal,
        });
    }
    IdentityReport {
        group: format!(
            "{}({})",
            group.spec.family.kebab_name(),
            group.spec.parameter
        ),
        k,
        n,
        types,
        verdict,
    }
}

/// Trace of Λ^i of the action matrix of a single-n-cycle element (α, s):
/// vanishes whenever n ∤ i. Exposed for the vanishing-pattern tests.
pub fn exterior_trace_single_cycle(
    group: &MatrixGroup,
    k: usize,
    n: usize,
    class: usize,
    i: usize,
) -> Cyclotomic {
    let rho = PartitionFunction::singleton(class, Partition::new(vec![n as u32]));
    let rep = canonical_representative(&rho, group);
    action_matrix(&rep, group, k).exterior_power_trace(i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouplib::{build_group, GroupSpec};

    #[test]
    fn action_matrix_examples() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        // Identity element → identity matrix.
        let id = WreathElement::identity(2);
        assert_eq!(action_matrix(&id, &g, 2), CycMatrix::identity(4));
        // ((−I, I), (12)) → [[0, −I₂],[I₂, 0]].
        let minus = (0..2).find(|&i| i != 0 && g.mul(i, i) == 0).unwrap();
        let x = WreathElement {
            g: vec![minus, 0],
            sigma: vec![1, 0],
        };
        let m = action_matrix(&x, &g, 2);
        let minus_one = Cyclotomic::from_int(-1);
        assert_eq!(m[(0, 2)], minus_one);
        assert_eq!(m[(1, 3)], minus_one);
        assert_eq!(m[(2, 0)], Cyclotomic::one());
        assert_eq!(m[(3, 1)], Cyclotomic::one());
        for i in 0..4 {
            assert!(m[(i, i)].is_zero());
        }
    }

    #[test]
    fn action_is_homomorphism() {
        let g = build_group(&GroupSpec::cyclic(3)).unwrap();
        let x = WreathElement {
            g: vec![1, 2],
            sigma: vec![1, 0],
        };
        let y = WreathElement {
            g: vec![2, 0],
            sigma: vec![1, 0],
        };
        let lhs = action_matrix(&x.mul(&y, &g), &g, 2);
        let rhs = action_matrix(&x, &g, 2).mul(&action_matrix(&y, &g, 2));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trivial_group_action_is_block_permutation() {
        let g = build_group(&GroupSpec::cyclic(1)).unwrap();
        let x = WreathElement {
            g: vec![0, 0, 0],
            sigma: vec![1, 2, 0],
        };
        let m = action_matrix(&x, &g, 2);
        // Output slot 0 reads input slot σ⁻¹(0) = 2.
        assert_eq!(m[(0, 4)], Cyclotomic::one());
        assert_eq!(m[(1, 5)], Cyclotomic::one());
        assert_eq!(m[(2, 0)], Cyclotomic::one());
    }

    #[test]
    fn canonical_representatives_have_their_type() {
        let g = build_group(&GroupSpec::binary_dihedral(2)).unwrap();
        for n in 1..=3 {
            for rho in enumerate_types(g.num_classes(), n) {
                let rep = canonical_representative(&rho, &g);
                assert_eq!(type_of(&rep, &g), rho, "n = {n}");
            }
        }
    }

    #[test]
    fn lambda_values_cyclic2() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let lambda = lambda_char(&g, 2, 2);
        // Identity type has eigenvalue 1, so the determinant vanishes.
        let idt = PartitionFunction::singleton(0, Partition::new(vec![1, 1]));
        assert!(lambda.value(&idt).is_zero());
        // Type (2) at the class of −I evaluates to 4.
        let t = PartitionFunction::singleton(1, Partition::new(vec![2]));
        assert_eq!(lambda.value(&t), Cyclotomic::from_int(4));
    }

    #[test]
    fn lambda_trivial_group_is_zero() {
        let g = build_group(&GroupSpec::cyclic(1)).unwrap();
        for n in 1..=4 {
            let lambda = lambda_char(&g, 2, n);
            assert!(lambda.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn vanishing_pattern_single_cycle() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        for class in 0..2 {
            for n in 2..=3 {
                for i in 0..=2 * n {
                    let tr = exterior_trace_single_cycle(&g, 2, n, class, i);
                    if i % n != 0 {
                        assert!(tr.is_zero(), "Λ^{i} trace at n={n} must vanish");
                    }
                }
            }
        }
    }

    #[test]
    fn identity_verification_small() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let report = verify_identity(&g, 2, 2);
        assert!(report.verdict);
        assert_eq!(report.types.len(), 5);

        let c3 = build_group(&GroupSpec::cyclic(3)).unwrap();
        let report = verify_identity(&c3, 2, 2);
        assert!(report.verdict);
        assert_eq!(report.types.len(), 9);

        let trivial = build_group(&GroupSpec::cyclic(1)).unwrap();
        let report = verify_identity(&trivial, 2, 3);
        assert!(report.verdict);
        assert_eq!(report.types.len(), 3);
        assert!(report
            .types
            .iter()
            .all(|t| t.lambda_value.is_zero() && t.eta_value.is_zero()));
    }

    #[test]
    fn multiplicativity_over_juxtaposed_types() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let l1 = lambda_char(&g, 2, 1);
        let l2 = lambda_char(&g, 2, 2);
        let l3 = lambda_char(&g, 2, 3);
        for t1 in enumerate_types(g.num_classes(), 1) {
            for t2 in enumerate_types(g.num_classes(), 2) {
                let joined = t1.union(&t2);
                assert_eq!(
                    l3.value(&joined),
                    &l1.value(&t1) * &l2.value(&t2),
                    "λ is multiplicative across juxtaposed types"
                );
            }
        }
    }
}
