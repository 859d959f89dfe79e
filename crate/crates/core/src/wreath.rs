//! Character theory of the wreath products Γₙ = Γ≀Sₙ.
//!
//! Conjugacy classes of Γₙ are indexed by *types*: partition-valued
//! functions ρ on the conjugacy classes of Γ, where an element (g, σ)
//! contributes a part k to ρ(c) for every k-cycle of σ whose cycle-product
//! lies in the class c. All class-function computation here is
//! type-indexed — |Γₙ| = |Γ|ⁿ·n! grows far too fast for element-wise work —
//! with explicit elements kept only for `type_of`, conjugacy sampling, and
//! the brute-force oracle group.
//!
//! Irreducible characters are indexed by partition-valued functions on the
//! irreducible characters of Γ and are computed through the characteristic
//! map: per-color Murnaghan–Nakayama expansion of Schur functions into
//! power sums, then the base change p_m(γ) = Σ_c (γ(c)/ζ_c)·p_m(c) from
//! character-colored to class-colored power sums. That base-change
//! convention is pinned down by two requirements checked at runtime:
//! orthonormality of the resulting characters and positivity of every
//! degree χ^ρ(identity type).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::json;
use thiserror::Error;

use crate::exactnum::{Cyclotomic, Rational};
use crate::grouplib::{CharacterTable, ClassFunction, GroupTable, MatrixGroup};

#[derive(Debug, Error)]
pub enum WreathError {
    #[error("class function on {got} types where {expected} were expected")]
    DomainMismatch { got: usize, expected: usize },
    #[error("brute-force oracle limited to |Γₙ| ≤ {cap}, got {size}")]
    OracleTooLarge { cap: usize, size: usize },
}

/// A partition λ₁ ≥ … ≥ λ_l ≥ 1 with cached weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicities m_i = number of parts equal to i, as (i, m_i) pairs.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// z_λ = Π i^{m_i}·m_i!, the symmetric-group centralizer order.
    pub fn z_lambda(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, m) in self.multiplicities() {
            for _ in 0..m {
                z *= BigInt::from(i);
            }
            z *= factorial(m as usize);
        }
        z
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_tableaux_count(&self) -> BigInt {
        let n = self.weight();
        if n == 0 {
            return BigInt::one();
        }
        let mut hooks = BigInt::one();
        let cols: Vec<u32> = (0..self.parts[0])
            .map(|c| self.parts.iter().filter(|&&p| p > c).count() as u32)
            .collect();
        for (r, &row_len) in self.parts.iter().enumerate() {
            for c in 0..row_len {
                let arm = row_len - c - 1;
                let leg = cols[c as usize] - r as u32 - 1;
                hooks *= BigInt::from(arm + leg + 1);
            }
        }
        factorial(n) / hooks
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of `n` in descending lexicographic order: (n) first,
/// (1ⁿ) last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            current.push(p as u32);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A partition-valued function on a finite index set {0,…,set_size−1}.
/// Empty partitions are omitted from the map; the weight is Σ |ρ(x)|.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionFunction {
    assignment: BTreeMap<usize, Partition>,
}

impl PartitionFunction {
    pub fn empty() -> Self {
        PartitionFunction {
            assignment: BTreeMap::new(),
        }
    }

    pub fn from_assignment(assignment: BTreeMap<usize, Partition>) -> Self {
        let assignment = assignment
            .into_iter()
            .filter(|(_, p)| !p.is_empty())
            .collect();
        PartitionFunction { assignment }
    }

    pub fn singleton(index: usize, partition: Partition) -> Self {
        let mut assignment = BTreeMap::new();
        if !partition.is_empty() {
            assignment.insert(index, partition);
        }
        PartitionFunction { assignment }
    }

    pub fn get(&self, index: usize) -> Partition {
        self.assignment
            .get(&index)
            .cloned()
            .unwrap_or_else(Partition::empty)
    }

    pub fn weight(&self) -> usize {
        self.assignment.values().map(|p| p.weight()).sum()
    }

    /// Total number of parts Σ_x l(ρ(x)) — the number of cycles when this
    /// is the type of a wreath element.
    pub fn total_length(&self) -> usize {
        self.assignment.values().map(|p| p.len()).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&usize, &Partition)> {
        self.assignment.iter()
    }

    /// Add a single part at an index.
    pub fn with_part(&self, index: usize, part: u32) -> Self {
        let mut assignment = self.assignment.clone();
        let mut parts = assignment
            .remove(&index)
            .map(|p| p.parts)
            .unwrap_or_default();
        parts.push(part);
        assignment.insert(index, Partition::new(parts));
        PartitionFunction { assignment }
    }

    /// Disjoint (multiset) union of two partition functions.
    pub fn union(&self, other: &Self) -> Self {
        let mut assignment = self.assignment.clone();
        for (&i, p) in other.assignment.iter() {
            let mut parts = assignment.remove(&i).map(|q| q.parts).unwrap_or_default();
            parts.extend_from_slice(p.parts());
            assignment.insert(i, Partition::new(parts));
        }
        PartitionFunction { assignment }
    }

    /// Relabel indices through a map (used for inverse-class types and for
    /// color bijections).
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        let assignment = self
            .assignment
            .iter()
            .map(|(&i, p)| (map(i), p.clone()))
            .collect();
        PartitionFunction { assignment }
    }
}

impl std::fmt::Display for PartitionFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.assignment.is_empty() {
            return write!(f, "{{}}");
        }
        let body: Vec<String> = self
            .assignment
            .iter()
            .map(|(i, p)| format!("{i}:{p}"))
            .collect();
        write!(f, "{{{}}}", body.join(" "))
    }
}

/// All partition-valued functions of weight `n` on a set of `set_size`
/// indices, in deterministic lexicographic order.
pub fn enumerate_types(set_size: usize, n: usize) -> Vec<PartitionFunction> {
    fn rec(
        index: usize,
        set_size: usize,
        remaining: usize,
        current: &mut BTreeMap<usize, Partition>,
        out: &mut Vec<PartitionFunction>,
    ) {
        if index == set_size {
            if remaining == 0 {
                out.push(PartitionFunction {
                    assignment: current.clone(),
                });
            }
            return;
        }
        if index == set_size - 1 {
            // Last index takes everything that remains.
            if remaining == 0 {
                out.push(PartitionFunction {
                    assignment: current.clone(),
                });
            } else {
                for p in partitions_of(remaining) {
                    current.insert(index, p);
                    out.push(PartitionFunction {
                        assignment: current.clone(),
                    });
                    current.remove(&index);
                }
            }
            return;
        }
        for w in 0..=remaining {
            if w == 0 {
                rec(index + 1, set_size, remaining, current, out);
            } else {
                for p in partitions_of(w) {
                    current.insert(index, p);
                    rec(index + 1, set_size, remaining - w, current, out);
                    current.remove(&index);
                }
            }
        }
    }
    let mut out = Vec::new();
    if set_size == 0 {
        if n == 0 {
            out.push(PartitionFunction::empty());
        }
        return out;
    }
    rec(0, set_size, n, &mut BTreeMap::new(), &mut out);
    out
}

/// An explicit element (g, σ) ∈ Γₙ; σ is stored as the image vector
/// σ(i) = sigma[i] on 0-based slots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathElement {
    pub g: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl WreathElement {
    pub fn identity(n: usize) -> Self {
        WreathElement {
            g: vec![0; n],
            sigma: (0..n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    /// (g,σ)·(h,τ) = (g·σ(h), στ) where σ permutes the factors of h.
    pub fn mul(&self, rhs: &WreathElement, group: &MatrixGroup) -> WreathElement {
        let n = self.n();
        assert_eq!(n, rhs.n());
        let mut sigma_inv = vec![0usize; n];
        for i in 0..n {
            sigma_inv[self.sigma[i]] = i;
        }
        let g = (0..n)
            .map(|i| group.mul(self.g[i], rhs.g[sigma_inv[i]]))
            .collect();
        let sigma = (0..n).map(|i| self.sigma[rhs.sigma[i]]).collect();
        WreathElement { g, sigma }
    }

    pub fn inverse(&self, group: &MatrixGroup) -> WreathElement {
        let n = self.n();
        let mut sigma = vec![0usize; n];
        for i in 0..n {
            sigma[self.sigma[i]] = i;
        }
        let g = (0..n).map(|j| group.inv(self.g[self.sigma[j]])).collect();
        WreathElement { g, sigma }
    }
}

/// The type of a wreath element: for each cycle (i₁ … i_k) of σ, the
/// cycle-product g_{i_k}···g_{i₁} is classified into its Γ-conjugacy class
/// c and contributes a part k to ρ(c).
pub fn type_of(x: &WreathElement, group: &MatrixGroup) -> PartitionFunction {
    let n = x.n();
    let mut visited = vec![false; n];
    let mut result = PartitionFunction::empty();
    for start in 0..n {
        if visited[start] {
            continue;
        }
        let mut product = x.g[start];
        let mut length = 1u32;
        visited[start] = true;
        let mut i = x.sigma[start];
        while i != start {
            visited[i] = true;
            product = group.mul(x.g[i], product);
            length += 1;
            i = x.sigma[i];
        }
        result = result.with_part(group.class_of(product), length);
    }
    result
}

/// Z_ρ = Π_c Π_i i^{m_i(c)} · m_i(c)! · ζ_c^{m_i(c)} — the centralizer
/// order in Γₙ of an element of type ρ; the class size is |Γₙ|/Z_ρ.
pub fn centralizer_order(rho: &PartitionFunction, group: &MatrixGroup) -> BigInt {
    let mut z = BigInt::one();
    for (&c, partition) in rho.iter() {
        let zeta_c = BigInt::from(group.conjugacy_classes()[c].centralizer_order);
        for (i, m) in partition.multiplicities() {
            for _ in 0..m {
                z *= BigInt::from(i) * &zeta_c;
            }
            z *= factorial(m as usize);
        }
    }
    z
}

/// |Γₙ| = |Γ|ⁿ·n!.
pub fn wreath_order(group: &MatrixGroup, n: usize) -> BigInt {
    BigInt::from(group.order()).pow(n as u32) * factorial(n)
}

/// A class function on Γₙ: one exact value for every type in 𝒫ₙ(Γ_*).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathClassFunction {
    pub n: usize,
    pub values: BTreeMap<PartitionFunction, Cyclotomic>,
}

impl WreathClassFunction {
    /// The weight-0 unit: a single empty type with value 1.
    pub fn unit() -> Self {
        let mut values = BTreeMap::new();
        values.insert(PartitionFunction::empty(), Cyclotomic::one());
        WreathClassFunction { n: 0, values }
    }

    pub fn from_fn(
        group: &MatrixGroup,
        n: usize,
        mut f: impl FnMut(&PartitionFunction) -> Cyclotomic,
    ) -> Self {
        let values = enumerate_types(group.num_classes(), n)
            .into_iter()
            .map(|rho| {
                let v = f(&rho);
                (rho, v)
            })
            .collect();
        WreathClassFunction { n, values }
    }

    pub fn value(&self, rho: &PartitionFunction) -> Cyclotomic {
        self.values
            .get(rho)
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    pub fn pointwise_mul(&self, rhs: &WreathClassFunction) -> WreathClassFunction {
        assert_eq!(self.n, rhs.n);
        WreathClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(rho, v)| (rho.clone(), v * &rhs.value(rho)))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &WreathClassFunction) -> WreathClassFunction {
        assert_eq!(self.n, rhs.n);
        WreathClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(rho, v)| (rho.clone(), v - &rhs.value(rho)))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> WreathClassFunction {
        WreathClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(rho, v)| (rho.clone(), s * v))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.values().all(|v| v.is_zero())
    }

    /// JSON rendering: a list of {type, value} entries with class-indexed
    /// part lists.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<serde_json::Value> = self
            .values
            .iter()
            .map(|(rho, v)| {
                let type_obj: serde_json::Map<String, serde_json::Value> = rho
                    .iter()
                    .map(|(&c, p)| {
                        (
                            format!("c{c}"),
                            json!(p.parts().iter().map(|&x| x).collect::<Vec<u32>>()),
                        )
                    })
                    .collect();
                json!({ "type": type_obj, "value": v.to_string() })
            })
            .collect();
        json!(entries)
    }
}

/// The inverse type ρ*(c) = ρ(c⁻¹-class): the type of x⁻¹ when x has
/// type ρ.
pub fn inverse_type(rho: &PartitionFunction, group: &MatrixGroup) -> PartitionFunction {
    rho.relabel(|c| group.inverse_class(c))
}

/// ⟨f,g⟩_{Γₙ} = Σ_ρ Z_ρ⁻¹ f(ρ) g(ρ*), the standard inner product
/// evaluated type-wise (class size / |Γₙ| = 1/Z_ρ).
pub fn wreath_inner_product(
    f: &WreathClassFunction,
    g: &WreathClassFunction,
    group: &MatrixGroup,
) -> Cyclotomic {
    assert_eq!(f.n, g.n);
    let mut acc = Cyclotomic::zero();
    for (rho, fv) in f.values.iter() {
        if fv.is_zero() {
            continue;
        }
        let gv = g.value(&inverse_type(rho, group));
        if gv.is_zero() {
            continue;
        }
        let z = centralizer_order(rho, group);
        let weight = Rational::new(BigInt::one(), z);
        acc += &(&(fv * &gv)).scale(&weight);
    }
    acc
}

/// η_n(f): value Π_c f(c)^{l(ρ(c))} at type ρ. For a genuine character of
/// Γ this is the character of the n-th outer tensor power of the module
/// under Γₙ; the formula extends it to arbitrary class functions.
pub fn eta_n(f: &ClassFunction, n: usize, group: &MatrixGroup) -> WreathClassFunction {
    if n == 0 {
        return WreathClassFunction::unit();
    }
    WreathClassFunction::from_fn(group, n, |rho| {
        let mut acc = Cyclotomic::one();
        for (&c, partition) in rho.iter() {
            acc = &acc * &f.values[c].pow(partition.len() as u64);
        }
        acc
    })
}

/// ε_n(f) = sign ⊗ η_n(f): the sign of σ at type ρ is
/// (−1)^{n − Σ_c l(ρ(c))}.
pub fn epsilon_n(f: &ClassFunction, n: usize, group: &MatrixGroup) -> WreathClassFunction {
    if n == 0 {
        return WreathClassFunction::unit();
    }
    WreathClassFunction::from_fn(group, n, |rho| {
        let mut acc = Cyclotomic::one();
        for (&c, partition) in rho.iter() {
            acc = &acc * &f.values[c].pow(partition.len() as u64);
        }
        if (n - rho.total_length()) % 2 == 1 {
            acc = -&acc;
        }
        acc
    })
}

/// Induction from Γ_m × Γ_{n−m} to Γₙ, computed type-combinatorially:
/// Ind(f⊗g)(ρ) = Z_ρ · Σ_{ρ = ρ′ ⊔ ρ″} f(ρ′) g(ρ″) / (Z_{ρ′} Z_{ρ″}),
/// summed over distinct sub-multiset splittings with ‖ρ′‖ = m.
pub fn induce(
    f: &WreathClassFunction,
    g: &WreathClassFunction,
    group: &MatrixGroup,
) -> WreathClassFunction {
    let n = f.n + g.n;
    let m = f.n;
    WreathClassFunction::from_fn(group, n, |rho| {
        let z_rho = centralizer_order(rho, group);
        let mut acc = Cyclotomic::zero();
        for (left, right) in split_type(rho, m) {
            let fv = f.value(&left);
            if fv.is_zero() {
                continue;
            }
            let gv = g.value(&right);
            if gv.is_zero() {
                continue;
            }
            let weight = Rational::new(
                z_rho.clone(),
                centralizer_order(&left, group) * centralizer_order(&right, group),
            );
            acc += &(&fv * &gv).scale(&weight);
        }
        acc
    })
}

/// All distinct splittings ρ = ρ′ ⊔ ρ″ with ‖ρ′‖ = m, as sub-multisets per
/// class and part size.
fn split_type(rho: &PartitionFunction, m: usize) -> Vec<(PartitionFunction, PartitionFunction)> {
    // Flatten to (class, part size, multiplicity) triples.
    let slots: Vec<(usize, u32, u32)> = rho
        .iter()
        .flat_map(|(&c, p)| {
            p.multiplicities()
                .into_iter()
                .map(move |(i, mult)| (c, i, mult))
        })
        .collect();
    let mut out = Vec::new();
    fn rec(
        slots: &[(usize, u32, u32)],
        idx: usize,
        left_budget: usize,
        left: &mut Vec<(usize, u32, u32)>,
        out: &mut Vec<(PartitionFunction, PartitionFunction)>,
        rho: &PartitionFunction,
    ) {
        if idx == slots.len() {
            if left_budget == 0 {
                let mut l = BTreeMap::<usize, Vec<u32>>::new();
                for &(c, size, k) in left.iter() {
                    for _ in 0..k {
                        l.entry(c).or_default().push(size);
                    }
                }
                let left_pf = PartitionFunction::from_assignment(
                    l.into_iter()
                        .map(|(c, parts)| (c, Partition::new(parts)))
                        .collect(),
                );
                // Right = ρ minus left, computed by multiset subtraction.
                let mut r = BTreeMap::<usize, Vec<u32>>::new();
                for (&c, p) in rho.iter() {
                    let mut remaining: Vec<u32> = p.parts().to_vec();
                    for part in left_pf.get(c).parts() {
                        let pos = remaining.iter().position(|x| x == part).unwrap();
                        remaining.remove(pos);
                    }
                    if !remaining.is_empty() {
                        r.insert(c, remaining);
                    }
                }
                let right_pf = PartitionFunction::from_assignment(
                    r.into_iter()
                        .map(|(c, parts)| (c, Partition::new(parts)))
                        .collect(),
                );
                out.push((left_pf, right_pf));
            }
            return;
        }
        let (c, size, mult) = slots[idx];
        for k in 0..=mult {
            let used = (size as usize) * (k as usize);
            if used > left_budget {
                break;
            }
            left.push((c, size, k));
            rec(slots, idx + 1, left_budget - used, left, out, rho);
            left.pop();
        }
    }
    rec(&slots, 0, m, &mut Vec::new(), &mut out, rho);
    out
}

/// η_n(β − γ) by the alternating-induction expansion
/// Σ_{m=0}^{n} (−1)^m Ind[η_{n−m}(β) ⊗ ε_m(γ)]. Agrees pointwise with
/// η_n applied to the pointwise difference β − γ.
pub fn eta_virtual(
    beta: &ClassFunction,
    gamma: &ClassFunction,
    n: usize,
    group: &MatrixGroup,
) -> WreathClassFunction {
    let mut acc = WreathClassFunction::from_fn(group, n, |_| Cyclotomic::zero());
    for m in 0..=n {
        let left = eta_n(beta, n - m, group);
        let right = epsilon_n(gamma, m, group);
        let term = induce(&left, &right, group);
        if m % 2 == 0 {
            acc = WreathClassFunction {
                n,
                values: acc
                    .values
                    .iter()
                    .map(|(rho, v)| (rho.clone(), v + &term.value(rho)))
                    .collect(),
            };
        } else {
            acc = acc.sub(&term);
        }
    }
    acc
}

/// Symmetric-group character χ^shape(cycle_type) by the Murnaghan–Nakayama
/// rule, implemented on beta-sets: removing a border strip of length t is
/// replacing a beta-number b by b−t, with sign given by the number of
/// beta-numbers jumped over.
pub fn symmetric_group_character(shape: &Partition, cycle_type: &Partition) -> BigInt {
    assert_eq!(shape.weight(), cycle_type.weight());
    let rows = shape.len().max(1) + cycle_type.weight();
    let mut beta: Vec<i64> = (0..rows)
        .map(|i| {
            let part = if i < shape.len() {
                shape.parts()[i] as i64
            } else {
                0
            };
            part + (rows as i64 - 1 - i as i64)
        })
        .collect();
    beta.sort_unstable_by(|a, b| b.cmp(a));
    fn rec(beta: &mut Vec<i64>, parts: &[u32]) -> BigInt {
        let t = match parts.first() {
            Some(&t) => t as i64,
            None => return BigInt::one(),
        };
        let mut total = BigInt::zero();
        for i in 0..beta.len() {
            let target = beta[i] - t;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            // Height change = number of beta-numbers strictly between.
            let jumped = beta
                .iter()
                .filter(|&&x| target < x && x < beta[i])
                .count();
            let mut next = beta.clone();
            next[i] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let sub = rec(&mut next, &parts[1..]);
            if jumped % 2 == 0 {
                total += sub;
            } else {
                total -= sub;
            }
        }
        total
    }
    rec(&mut beta, cycle_type.parts())
}

/// The complete set of irreducible characters of Γₙ, indexed by
/// 𝒫ₙ(Γ*) (partition-valued functions on the irreducible characters of Γ).
/// Verified orthonormal with positive integral degrees before returning.
pub fn irreducibles(
    group: &MatrixGroup,
    table: &CharacterTable,
    n: usize,
) -> BTreeMap<PartitionFunction, WreathClassFunction> {
    let num_colors = table.rows.len();
    let color_types = enumerate_types(num_colors, n);

    // κ(γ,c) = γ(c)/ζ_c: base change from character-colored to
    // class-colored power sums.
    let kappa: Vec<Vec<Cyclotomic>> = (0..num_colors)
        .map(|gamma| {
            (0..group.num_classes())
                .map(|c| {
                    let zeta_c = group.conjugacy_classes()[c].centralizer_order as i64;
                    table.rows[gamma].values[c].scale(&Rational::new(
                        BigInt::one(),
                        BigInt::from(zeta_c),
                    ))
                })
                .collect()
        })
        .collect();

    let mut result = BTreeMap::new();
    for rho in &color_types {
        // Expand Π_γ s_{ρ(γ)}(x_γ) into class-colored power sums.
        // acc: class-type → coefficient of the corresponding monomial.
        let mut acc: BTreeMap<PartitionFunction, Cyclotomic> = BTreeMap::new();
        acc.insert(PartitionFunction::empty(), Cyclotomic::one());
        for (&gamma, shape) in rho.iter() {
            let w = shape.weight();
            // s_shape = Σ_{λ ⊢ w} χ^shape(λ)/z_λ · p_λ.
            let mut color_contrib: BTreeMap<PartitionFunction, Cyclotomic> = BTreeMap::new();
            for lambda in partitions_of(w) {
                let chi = symmetric_group_character(shape, &lambda);
                if chi.is_zero() {
                    continue;
                }
                let coeff = Rational::new(chi, lambda.z_lambda());
                // Π_{m ∈ λ} (Σ_c κ(γ,c) p_m(c)), expanded incrementally.
                let mut partial: BTreeMap<PartitionFunction, Cyclotomic> = BTreeMap::new();
                partial.insert(PartitionFunction::empty(), Cyclotomic::one());
                for &m in lambda.parts() {
                    let mut next: BTreeMap<PartitionFunction, Cyclotomic> = BTreeMap::new();
                    for (ct, cv) in &partial {
                        for c in 0..group.num_classes() {
                            if kappa[gamma][c].is_zero() {
                                continue;
                            }
                            let new_type = ct.with_part(c, m);
                            let term = cv * &kappa[gamma][c];
                            next.entry(new_type)
                                .and_modify(|x| *x += &term)
                                .or_insert(term);
                        }
                    }
                    partial = next;
                }
                for (ct, cv) in partial {
                    let term = cv.scale(&coeff);
                    color_contrib
                        .entry(ct)
                        .and_modify(|x| *x += &term)
                        .or_insert(term);
                }
            }
            // acc ⊗ color_contrib (disjoint-color monomial product).
            let mut next: BTreeMap<PartitionFunction, Cyclotomic> = BTreeMap::new();
            for (t1, v1) in &acc {
                for (t2, v2) in &color_contrib {
                    let t = t1.union(t2);
                    let v = v1 * v2;
                    next.entry(t).and_modify(|x| *x += &v).or_insert(v);
                }
            }
            acc = next;
        }
        // χ^ρ(ρ′) = Z_{ρ′} · [P_{ρ′}] of the expansion.
        let chi = WreathClassFunction::from_fn(group, n, |class_type| {
            match acc.get(class_type) {
                Some(v) => {
                    let z = centralizer_order(class_type, group);
                    v.scale(&Rational::from_integer(z))
                }
                None => Cyclotomic::zero(),
            }
        });
        result.insert(rho.clone(), chi);
    }

    // Internal consistency: orthonormality and positive integral degrees.
    let identity_type = PartitionFunction::singleton(0, Partition::new(vec![1; n.max(1)]));
    for (rho, chi) in &result {
        if n > 0 {
            let deg = chi
                .value(&identity_type)
                .to_integer()
                .expect("integral degree");
            assert!(deg.is_positive(), "degree of χ^{rho} must be positive");
        }
        for (sigma, psi) in &result {
            let ip = wreath_inner_product(chi, psi, group);
            let expected = if rho == sigma {
                Cyclotomic::one()
            } else {
                Cyclotomic::zero()
            };
            assert_eq!(
                ip, expected,
                "wreath irreducibles fail orthonormality at ({rho}, {sigma})"
            );
        }
    }
    result
}

/// Degree of χ^ρ by the product formula
/// n!·Π_γ (n_γ^{|ρ(γ)|}·f^{ρ(γ)}) / Π_γ |ρ(γ)|!.
pub fn irreducible_degree(rho: &PartitionFunction, table: &CharacterTable) -> BigInt {
    let n = rho.weight();
    let mut acc = factorial(n);
    for (&gamma, p) in rho.iter() {
        acc *= BigInt::from(table.degrees[gamma]).pow(p.weight() as u32);
        acc *= p.standard_tableaux_count();
        acc /= factorial(p.weight());
    }
    acc
}

/// Gram matrix of the weighted form ⟨η_n(ξ)·χ^ρ, χ^σ⟩_{Γₙ} on the
/// irreducible basis, with its row labels. Entries are verified integral;
/// symmetry and positive semidefiniteness are the paper-level contracts
/// checked by the callers and the test suite.
pub fn weighted_gram(
    group: &MatrixGroup,
    table: &CharacterTable,
    n: usize,
) -> (Vec<PartitionFunction>, Vec<Vec<BigInt>>) {
    let xi = crate::mckay::xi_character(group);
    let eta_xi = eta_n(&xi, n, group);
    let irreps = irreducibles(group, table, n);
    let labels: Vec<PartitionFunction> = irreps.keys().cloned().collect();
    let chars: Vec<&WreathClassFunction> = irreps.values().collect();
    let k = labels.len();
    let mut gram = vec![vec![BigInt::zero(); k]; k];
    for i in 0..k {
        let weighted = eta_xi.pointwise_mul(chars[i]);
        for j in 0..k {
            let v = wreath_inner_product(&weighted, chars[j], group);
            gram[i][j] = v
                .to_integer()
                .expect("weighted Gram entries are integers");
        }
    }
    (labels, gram)
}

/// Explicit Γ≀Sₙ as an abstract group (the brute-force oracle): all
/// (g, σ) pairs with the wreath multiplication law, identity at index 0.
/// Returns the multiplication-table group together with the element list.
pub fn wreath_group_table(
    group: &MatrixGroup,
    n: usize,
    cap: usize,
) -> Result<(GroupTable, Vec<WreathElement>), WreathError> {
    let size_big = wreath_order(group, n);
    let size = size_big
        .to_usize()
        .filter(|&s| s <= cap)
        .ok_or(WreathError::OracleTooLarge {
            cap,
            size: size_big.to_usize().unwrap_or(usize::MAX),
        })?;

    let perms = permutations(n);
    // Identity element first: colors all zero, identity permutation.
    let mut elements = Vec::with_capacity(size);
    for colors in multi_radix(group.order(), n) {
        for p in &perms {
            elements.push(WreathElement {
                g: colors.clone(),
                sigma: p.clone(),
            });
        }
    }
    assert_eq!(elements.len(), size);
    assert_eq!(elements[0], WreathElement::identity(n));

    let index: std::collections::HashMap<WreathElement, usize> = elements
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let mult: Vec<Vec<u32>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| index[&a.mul(b, group)] as u32)
                .collect()
        })
        .collect();
    Ok((GroupTable::new(mult), elements))
}

// All permutations of 0..n in lexicographic order (identity first).
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn multi_radix(base: usize, digits: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; digits];
    loop {
        out.push(current.clone());
        let mut i = digits;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            current[i] += 1;
            if current[i] < base {
                break;
            }
            current[i] = 0;
        }
    }
}
