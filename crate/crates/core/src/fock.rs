//! The graded space ⊕ₙ R(Γₙ) in its power-sum polynomial model.
//!
//! Under the characteristic map, the direct sum of the Γₙ representation
//! rings becomes the polynomial algebra on generators p_m(γ), m ≥ 1,
//! γ ∈ Γ*. This module realizes the algebraic structures carried across
//! that identification:
//!
//! - Hopf algebra: the product is induction (plain polynomial
//!   multiplication here) and the coproduct is restriction, determined by
//!   the generators p_m(γ) being primitive;
//! - Heisenberg operators: creation is multiplication by p_m(γ),
//!   annihilation is the derivation p_{m'}(γ') ↦ δ_{mm'}·m·B(γ,γ'), where
//!   B is either the standard (orthonormal) pairing or the weighted pairing
//!   given by the Cartan matrix;
//! - Adams operations ψ^m: the algebra endomorphisms p_k(γ) ↦ p_{km}(γ);
//! - Θ: color-relabeling along a bijection, the Fock-level shadow of the
//!   Schur-basis matching isomorphism.
//!
//! Coefficients are rational: character values never enter this module
//! except through the integer Cartan matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use crate::exactnum::Rational;
use crate::mckay::CartanMatrix;

/// A monomial Π p_mᵢ(γᵢ): a sorted multiset of (m, color) pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PowerSumMonomial {
    factors: Vec<(u32, usize)>,
}

impl PowerSumMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn generator(m: u32, color: usize) -> Self {
        assert!(m >= 1);
        PowerSumMonomial {
            factors: vec![(m, color)],
        }
    }

    pub fn from_factors(mut factors: Vec<(u32, usize)>) -> Self {
        assert!(factors.iter().all(|&(m, _)| m >= 1));
        factors.sort_unstable();
        PowerSumMonomial { factors }
    }

    pub fn factors(&self) -> &[(u32, usize)] {
        &self.factors
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(m, _)| m as usize).sum()
    }

    pub fn mul(&self, rhs: &PowerSumMonomial) -> PowerSumMonomial {
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&rhs.factors);
        factors.sort_unstable();
        PowerSumMonomial { factors }
    }

    /// Distinct factors with multiplicities.
    pub fn factor_multiplicities(&self) -> Vec<((u32, usize), u32)> {
        let mut out: Vec<((u32, usize), u32)> = Vec::new();
        for &f in &self.factors {
            match out.last_mut() {
                Some((g, k)) if *g == f => *k += 1,
                _ => out.push((f, 1)),
            }
        }
        out
    }

    fn without_one(&self, factor: (u32, usize)) -> PowerSumMonomial {
        let mut factors = self.factors.clone();
        let pos = factors.iter().position(|&f| f == factor).expect("present");
        factors.remove(pos);
        PowerSumMonomial { factors }
    }
}

impl std::fmt::Display for PowerSumMonomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let rendered: Vec<String> = self
            .factor_multiplicities()
            .into_iter()
            .rev()
            .map(|((m, color), mult)| {
                if mult == 1 {
                    format!("p_{m}(g{color})")
                } else {
                    format!("p_{m}(g{color})^{mult}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join("*"))
    }
}

/// An element of the Fock space: a finite rational combination of
/// power-sum monomials. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FockVector {
    terms: BTreeMap<PowerSumMonomial, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PowerSumMonomial::unit(), Rational::one())
    }

    pub fn generator(m: u32, color: usize) -> Self {
        Self::monomial(PowerSumMonomial::generator(m, color), Rational::one())
    }

    pub fn monomial(mono: PowerSumMonomial, coeff: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        FockVector { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PowerSumMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mono: &PowerSumMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mono: PowerSumMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> FockVector {
        if s.is_zero() {
            return FockVector::zero();
        }
        FockVector {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * s))
                .collect(),
        }
    }

    /// Graded commutative product (Hopf multiplication = induction).
    pub fn mul(&self, rhs: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    /// The degree-d homogeneous component.
    pub fn graded_piece(&self, d: usize) -> FockVector {
        FockVector {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .terms
            .iter()
            .map(|(m, c)| json!({ "monomial": m.to_string(), "coefficient": c.to_string() }))
            .collect::<Vec<_>>())
    }
}

/// The bilinear pairing on colors used by the annihilation operators:
/// standard (δ on the orthonormal irreducible basis) or weighted by a
/// symmetric Cartan matrix.
#[derive(Debug, Clone)]
pub enum FormChoice {
    Standard,
    Weighted(CartanMatrix),
}

impl FormChoice {
    pub fn weighted(cartan: CartanMatrix) -> Self {
        assert!(
            cartan.is_symmetric(),
            "weighted form needs a symmetric matrix"
        );
        FormChoice::Weighted(cartan)
    }

    pub fn pairing(&self, beta: usize, gamma: usize) -> Rational {
        match self {
            FormChoice::Standard => {
                if beta == gamma {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }
            FormChoice::Weighted(a) => Rational::from_integer(BigInt::from(a.entries[beta][gamma])),
        }
    }
}

/// Creation operator: multiplication by p_m(color).
pub fn create(m: u32, color: usize, v: &FockVector) -> FockVector {
    v.mul(&FockVector::generator(m, color))
}

/// Annihilation operator: the derivation sending p_{m'}(γ') to
/// δ_{mm'}·m·B(color, γ'). Kills the vacuum.
pub fn annihilate(m: u32, color: usize, v: &FockVector, form: &FormChoice) -> FockVector {
    let mut out = FockVector::zero();
    for (mono, coeff) in v.terms() {
        for ((fm, fcolor), mult) in mono.factor_multiplicities() {
            if fm != m {
                continue;
            }
            let pairing = form.pairing(color, fcolor);
            if pairing.is_zero() {
                continue;
            }
            let factor = Rational::from_integer(BigInt::from(mult as i64 * m as i64)) * pairing;
            out.add_term(mono.without_one((fm, fcolor)), coeff * &factor);
        }
    }
    out
}

/// Adams operation ψ^m: the algebra endomorphism p_k(γ) ↦ p_{km}(γ).
pub fn adams(m: u32, v: &FockVector) -> FockVector {
    assert!(m >= 1);
    let mut out = FockVector::zero();
    for (mono, coeff) in v.terms() {
        let factors = mono
            .factors()
            .iter()
            .map(|&(k, color)| (k * m, color))
            .collect();
        out.add_term(PowerSumMonomial::from_factors(factors), coeff.clone());
    }
    out
}

/// Formal sum of left⊗right monomial pairs with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Coproduct {
    terms: BTreeMap<(PowerSumMonomial, PowerSumMonomial), Rational>,
}

impl Coproduct {
    pub fn terms(
        &self,
    ) -> impl Iterator<Item = (&(PowerSumMonomial, PowerSumMonomial), &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: PowerSumMonomial, right: PowerSumMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Componentwise product of coproducts (the Hopf compatibility side).
    pub fn mul(&self, rhs: &Coproduct) -> Coproduct {
        let mut out = Coproduct::default();
        for ((l1, r1), c1) in self.terms() {
            for ((l2, r2), c2) in rhs.terms() {
                out.add_term(l1.mul(l2), r1.mul(r2), c1 * c2);
            }
        }
        out
    }
}

/// Coproduct: the algebra homomorphism with every generator primitive,
/// Δp_m(γ) = p_m(γ)⊗1 + 1⊗p_m(γ). On a monomial this distributes each
/// factor left or right; repeated factors pick up binomial coefficients.
pub fn coproduct(v: &FockVector) -> Coproduct {
    let mut out = Coproduct::default();
    for (mono, coeff) in v.terms() {
        let groups = mono.factor_multiplicities();
        // For each distinct factor, choose how many copies go left.
        let mut splits: Vec<(PowerSumMonomial, PowerSumMonomial, Rational)> = vec![(
            PowerSumMonomial::unit(),
            PowerSumMonomial::unit(),
            coeff.clone(),
        )];
        for ((m, color), mult) in groups {
            let mut next = Vec::new();
            for (left, right, c) in &splits {
                for take in 0..=mult {
                    let ways = binomial(mult, take);
                    let mut lf = left.factors().to_vec();
                    lf.extend(std::iter::repeat((m, color)).take(take as usize));
                    let mut rf = right.factors().to_vec();
                    rf.extend(std::iter::repeat((m, color)).take((mult - take) as usize));
                    next.push((
                        PowerSumMonomial::from_factors(lf),
                        PowerSumMonomial::from_factors(rf),
                        c * Rational::from_integer(ways),
                    ));
                }
            }
            splits = next;
        }
        for (left, right, c) in splits {
            out.add_term(left, right, c);
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Coefficients of q⁰…q^D of Π_{m ≥ 1} (1 − q^m)^{−(r+1)}: the graded
/// dimensions of a polynomial algebra on r+1 generators in every positive
/// degree, which count 𝒫ₙ over an (r+1)-element color set.
pub fn graded_dims(num_colors: usize, max_degree: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); max_degree + 1];
    coeffs[0] = BigInt::one();
    for m in 1..=max_degree {
        for _ in 0..num_colors {
            // Multiply by 1/(1 − q^m): prefix sums with stride m.
            for d in m..=max_degree {
                let prev = coeffs[d - m].clone();
                coeffs[d] += prev;
            }
        }
    }
    coeffs
}

/// A bijection of color sets, applied to vectors as p_m(γ) ↦ p_m(θγ).
#[derive(Debug, Clone)]
pub struct ColorBijection {
    image: Vec<usize>,
}

impl ColorBijection {
    pub fn new(image: Vec<usize>) -> Self {
        let n = image.len();
        let mut seen = vec![false; n];
        for &i in &image {
            assert!(i < n && !seen[i], "not a bijection");
            seen[i] = true;
        }
        ColorBijection { image }
    }

    pub fn identity(n: usize) -> Self {
        ColorBijection {
            image: (0..n).collect(),
        }
    }

    pub fn apply_color(&self, color: usize) -> usize {
        self.image[color]
    }

    pub fn inverse(&self) -> ColorBijection {
        let mut image = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        ColorBijection { image }
    }

    /// The induced algebra isomorphism Θ.
    pub fn apply(&self, v: &FockVector) -> FockVector {
        let mut out = FockVector::zero();
        for (mono, coeff) in v.terms() {
            let factors = mono
                .factors()
                .iter()
                .map(|&(m, color)| (m, self.image[color]))
                .collect();
            out.add_term(PowerSumMonomial::from_factors(factors), coeff.clone());
        }
        out
    }

    /// Whether Θ maps the source Cartan matrix onto itself, entry for
    /// entry — the exact condition for it to intertwine the weighted
    /// Heisenberg operators.
    pub fn preserves_matrix(&self, a: &CartanMatrix) -> bool {
        let n = a.size();
        assert_eq!(n, self.image.len());
        (0..n).all(|i| (0..n).all(|j| a.entries[self.image[i]][self.image[j]] == a.entries[i][j]))
    }
}

/// All monomials of exact degree d over the given colors, in canonical
/// order. The basis of the degree-d graded piece.
pub fn basis_monomials(num_colors: usize, d: usize) -> Vec<PowerSumMonomial> {
    crate::wreath::enumerate_types(num_colors, d)
        .into_iter()
        .map(|rho| {
            let mut factors = Vec::new();
            for (&color, partition) in rho.iter() {
                for &part in partition.parts() {
                    factors.push((part, color));
                }
            }
            PowerSumMonomial::from_factors(factors)
        })
        .collect()
}

/// The complete homogeneous lift h_n in one color:
/// h_n = Σ_{λ ⊢ n} z_λ⁻¹ p_λ with every part taken at `color`.
pub fn complete_homogeneous(n: usize, color: usize) -> FockVector {
    let mut out = FockVector::zero();
    for lambda in crate::wreath::partitions_of(n) {
        let factors = lambda.parts().iter().map(|&m| (m, color)).collect();
        out.add_term(
            PowerSumMonomial::from_factors(factors),
            Rational::new(BigInt::one(), lambda.z_lambda()),
        );
    }
    out
}

/// Exhaustive Heisenberg commutation check on the degree-≤ truncation:
/// [annihilate(m,β), create(m',γ)] = δ_{mm'}·m·B(β,γ)·id on every basis
/// monomial of degree ≤ `truncation`.
pub fn heisenberg_commutation_holds(
    num_colors: usize,
    form: &FormChoice,
    truncation: usize,
) -> bool {
    for d in 0..=truncation {
        for mono in basis_monomials(num_colors, d) {
            let v = FockVector::monomial(mono, Rational::one());
            for m in 1..=truncation as u32 {
                for mp in 1..=truncation as u32 {
                    for beta in 0..num_colors {
                        for gamma in 0..num_colors {
                            let ac = annihilate(m, beta, &create(mp, gamma, &v), form);
                            let ca = create(mp, gamma, &annihilate(m, beta, &v, form));
                            let commutator = ac.sub(&ca);
                            let expected = if m == mp {
                                v.scale(
                                    &(Rational::from_integer(BigInt::from(m))
                                        * form.pairing(beta, gamma)),
                                )
                            } else {
                                FockVector::zero()
                            };
                            if commutator != expected {
                                return false;
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Check that Θ intertwines the Heisenberg operators for the given form on
/// all basis monomials of degree ≤ `truncation`:
/// Θ∘a_m(β) = a_m(θβ)∘Θ and Θ∘a†_m(β) = a†_m(θβ)∘Θ.
pub fn theta_intertwines_heisenberg(
    bijection: &ColorBijection,
    num_colors: usize,
    form: &FormChoice,
    truncation: usize,
) -> bool {
    for d in 0..=truncation {
        for mono in basis_monomials(num_colors, d) {
            let v = FockVector::monomial(mono, Rational::one());
            let tv = bijection.apply(&v);
            for m in 1..=truncation as u32 {
                for beta in 0..num_colors {
                    let created = bijection.apply(&create(m, beta, &v));
                    if created != create(m, bijection.apply_color(beta), &tv) {
                        return false;
                    }
                    let annihilated = bijection.apply(&annihilate(m, beta, &v, form));
                    if annihilated != annihilate(m, bijection.apply_color(beta), &tv, form) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, rat_int};

    fn p(m: u32, color: usize) -> FockVector {
        FockVector::generator(m, color)
    }

    #[test]
    fn multiplication_basics() {
        let one = FockVector::one();
        assert_eq!(p(1, 0).mul(&one), p(1, 0));
        let sq = p(1, 0).mul(&p(1, 0));
        let expected = FockVector::monomial(
            PowerSumMonomial::from_factors(vec![(1, 0), (1, 0)]),
            Rational::one(),
        );
        assert_eq!(sq, expected);
        // (p1(0) + p1(1))² = p1(0)² + 2 p1(0)p1(1) + p1(1)².
        let s = p(1, 0).add(&p(1, 1));
        let sq = s.mul(&s);
        assert_eq!(
            sq.coefficient(&PowerSumMonomial::from_factors(vec![(1, 0), (1, 1)])),
            rat_int(2)
        );
        assert_eq!(
            sq.coefficient(&PowerSumMonomial::from_factors(vec![(1, 0), (1, 0)])),
            rat_int(1)
        );
    }

    #[test]
    fn coproduct_examples() {
        // Δ(1) = 1⊗1.
        let unit = coproduct(&FockVector::one());
        assert_eq!(unit.terms().count(), 1);
        // Δ(p_m(γ)) = p⊗1 + 1⊗p.
        let d = coproduct(&p(2, 1));
        let u = PowerSumMonomial::unit();
        let g = PowerSumMonomial::generator(2, 1);
        assert_eq!(d.terms().count(), 2);
        let terms: Vec<_> = d.terms().collect();
        assert!(terms.contains(&(&(g.clone(), u.clone()), &rat_int(1))));
        assert!(terms.contains(&(&(u, g), &rat_int(1))));
        // Δ(p²) = p²⊗1 + 2p⊗p + 1⊗p².
        let sq = p(1, 0).mul(&p(1, 0));
        let d = coproduct(&sq);
        let gen = PowerSumMonomial::generator(1, 0);
        let coeff = d
            .terms()
            .find(|((l, r), _)| *l == gen && *r == gen)
            .map(|(_, c)| c.clone())
            .unwrap();
        assert_eq!(coeff, rat_int(2));
    }

    #[test]
    fn hopf_compatibility_on_samples() {
        let u = p(1, 0).add(&p(2, 1).scale(&rat(1, 3)));
        let v = p(1, 1).mul(&p(1, 1)).add(&FockVector::one());
        let lhs = coproduct(&u.mul(&v));
        let rhs = coproduct(&u).mul(&coproduct(&v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn heisenberg_examples() {
        // Vacuum is killed.
        assert!(annihilate(1, 0, &FockVector::one(), &FormChoice::Standard).is_zero());
        // Standard form: a_1(γ) p_1(γ) = 1.
        let out = annihilate(1, 0, &p(1, 0), &FormChoice::Standard);
        assert_eq!(out, FockVector::one());
        // Weighted form with the affine A1 matrix: a_1(γ0) p_1(γ1) = −2.
        let a = CartanMatrix {
            entries: vec![vec![2, -2], vec![-2, 2]],
        };
        let form = FormChoice::weighted(a);
        let out = annihilate(1, 0, &p(1, 1), &form);
        assert_eq!(out, FockVector::one().scale(&rat_int(-2)));
    }

    #[test]
    fn heisenberg_commutation_standard_and_weighted() {
        assert!(heisenberg_commutation_holds(2, &FormChoice::Standard, 4));
        let a = CartanMatrix {
            entries: vec![vec![2, -2], vec![-2, 2]],
        };
        assert!(heisenberg_commutation_holds(2, &FormChoice::weighted(a), 4));
    }

    #[test]
    fn adams_composition() {
        assert_eq!(adams(1, &p(1, 0)), p(1, 0));
        assert_eq!(adams(2, &p(1, 0)), p(2, 0));
        let composed = adams(2, &adams(3, &p(1, 0)));
        assert_eq!(composed, adams(6, &p(1, 0)));
        assert_eq!(composed, p(6, 0));
        // Endomorphism property on a product.
        let prod = p(1, 0).mul(&p(2, 1));
        assert_eq!(adams(2, &prod), adams(2, &p(1, 0)).mul(&adams(2, &p(2, 1))));
    }

    #[test]
    fn graded_dims_match_partition_counts() {
        let one_color = graded_dims(1, 5);
        let expected: Vec<BigInt> = [1, 1, 2, 3, 5, 7].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(one_color, expected);
        let two_colors = graded_dims(2, 3);
        assert_eq!(two_colors[3], BigInt::from(10));
        // Dimension of the degree-n graded piece = |𝒫ₙ(colors)|.
        for colors in 1..=3 {
            let dims = graded_dims(colors, 6);
            for d in 0..=6 {
                assert_eq!(
                    dims[d],
                    BigInt::from(basis_monomials(colors, d).len()),
                    "colors={colors} degree={d}"
                );
            }
        }
    }

    #[test]
    fn theta_relabels_consistently() {
        let id = ColorBijection::identity(3);
        let v = p(1, 0).mul(&p(2, 2)).add(&p(3, 1));
        assert_eq!(id.apply(&v), v);
        let swap = ColorBijection::new(vec![1, 0]);
        let u = p(1, 0).mul(&p(1, 0)).add(&p(2, 1));
        let swapped = swap.apply(&u);
        assert_eq!(
            swapped,
            p(1, 1).mul(&p(1, 1)).add(&p(2, 0)),
            "products relabel consistently"
        );
        // Θ is invertible with Θ⁻¹ = theta(inverse bijection).
        let rot = ColorBijection::new(vec![1, 2, 0]);
        let back = rot.inverse().apply(&rot.apply(&v));
        assert_eq!(back, v);
        // Algebra map: Θ(uv) = Θ(u)Θ(v).
        let lhs = rot.apply(&u.mul(&v));
        let rhs = rot.apply(&u).mul(&rot.apply(&v));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_heisenberg_standard_any_bijection() {
        let swap = ColorBijection::new(vec![1, 0]);
        assert!(theta_intertwines_heisenberg(
            &swap,
            2,
            &FormChoice::Standard,
            4
        ));
    }

    #[test]
    fn theta_heisenberg_weighted_depends_on_symmetry() {
        // Affine A2: every permutation preserves the matrix.
        let a2 = CartanMatrix {
            entries: vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]],
        };
        let rot = ColorBijection::new(vec![1, 2, 0]);
        assert!(rot.preserves_matrix(&a2));
        assert!(theta_intertwines_heisenberg(
            &rot,
            3,
            &FormChoice::weighted(a2),
            4
        ));
        // Affine A3 (4-cycle): the transposition (0 1) is not a diagram
        // automorphism and the weighted intertwining fails.
        let a3 = CartanMatrix {
            entries: vec![
                vec![2, -1, 0, -1],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![-1, 0, -1, 2],
            ],
        };
        let bad = ColorBijection::new(vec![1, 0, 2, 3]);
        assert!(!bad.preserves_matrix(&a3));
        assert!(!theta_intertwines_heisenberg(
            &bad,
            4,
            &FormChoice::weighted(a3),
            3
        ));
    }

    #[test]
    fn creates_and_annihilates_commute_among_themselves() {
        let form = FormChoice::Standard;
        for d in 0..=3 {
            for mono in basis_monomials(2, d) {
                let v = FockVector::monomial(mono, Rational::one());
                for m1 in 1..=3 {
                    for m2 in 1..=3 {
                        let c12 = create(m1, 0, &create(m2, 1, &v));
                        let c21 = create(m2, 1, &create(m1, 0, &v));
                        assert_eq!(c12, c21);
                        let a12 = annihilate(m1, 0, &annihilate(m2, 1, &v, &form), &form);
                        let a21 = annihilate(m2, 1, &annihilate(m1, 0, &v, &form), &form);
                        assert_eq!(a12, a21);
                    }
                }
            }
        }
    }

    #[test]
    fn adams_generating_identity_degree5() {
        // Σₙ qⁿ hₙ = exp(Σ_m ψ^m(p_1) q^m / m) coefficient-wise to
        // degree 5, in a single color.
        let color = 0usize;
        let max = 5usize;
        let mut series = vec![FockVector::zero(); max + 1];
        series[0] = FockVector::one();
        // acc holds S^k/k! truncated; S has q-coefficient ψ^m(p_1)/m = p_m/m.
        let mut acc = vec![FockVector::zero(); max + 1];
        acc[0] = FockVector::one();
        for k in 1..=max {
            let mut next = vec![FockVector::zero(); max + 1];
            for d_prev in 0..=max {
                if acc[d_prev].is_zero() {
                    continue;
                }
                for m in 1..=max - d_prev {
                    let term = adams(m as u32, &p(1, color))
                        .scale(&Rational::new(BigInt::one(), BigInt::from(m)));
                    next[d_prev + m] = next[d_prev + m].add(&acc[d_prev].mul(&term));
                }
            }
            for d in 0..=max {
                acc[d] = next[d].scale(&Rational::new(BigInt::one(), BigInt::from(k)));
                series[d] = series[d].add(&acc[d]);
            }
        }
        for n in 0..=max {
            assert_eq!(series[n], complete_homogeneous(n, color), "degree {n}");
        }
    }
}
