//! Degree-truncated verification that the Γₙ-invariant polynomials on
//! ℂ^{2n} are generated by power-sum lifts of Γ-invariants.
//!
//! Γₙ acts on ℂ[x₁,…,xₙ,y₁,…,yₙ]: each Γ factor through the defining 2×2
//! matrices on its own (xᵢ, yᵢ) pair, Sₙ by permuting the pairs. For a
//! Γ-invariant f(x,y) the lift f̃ = Σᵢ f(xᵢ,yᵢ) is Γₙ-invariant, and the
//! claim under test is that such lifts of any linear basis of ℂ[x,y]^Γ
//! generate the whole invariant algebra. Both sides of the comparison are
//! computed independently: the invariant side by exact Reynolds averaging
//! (slotwise Γ-average, then Sₙ-symmetrization — their composition is the
//! Γₙ-average) of every monomial and row reduction, the generated side by
//! expanding all products of lifts of the stated total degree.
//!
//! This is a verification harness, not a production invariant-theory
//! engine: inputs whose monomial count exceeds a hard cap are refused.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::json;
use thiserror::Error;

use crate::exactnum::{Cyclotomic, Rational};
use crate::grouplib::MatrixGroup;
use crate::linalg;
use crate::wreath::{centralizer_order, enumerate_types};

/// Refuse degree components with more monomials than this.
pub const MONOMIAL_CAP: usize = 20_000;

#[derive(Debug, Error)]
pub enum InvariantsError {
    #[error("degree {degree} has {count} monomials, exceeding the cap of {cap}")]
    TooManyMonomials {
        degree: usize,
        count: usize,
        cap: usize,
    },
}

/// A polynomial in x₁..xₙ, y₁..yₙ: sparse exponent-vector → coefficient.
/// Exponent index i < n is xᵢ; index n+i is yᵢ.
pub type Poly = BTreeMap<Vec<u16>, Cyclotomic>;

/// A list of homogeneous polynomials spanning a subspace of one degree
/// component, kept in reduced row-echelon form over the monomial basis.
#[derive(Debug, Clone)]
pub struct PolySpace {
    pub degree: usize,
    pub num_vars: usize,
    pub basis: Vec<Poly>,
}

impl PolySpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

fn poly_add_term(poly: &mut Poly, exps: Vec<u16>, coeff: Cyclotomic) {
    if coeff.is_zero() {
        return;
    }
    match poly.entry(exps) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn poly_mul(a: &Poly, b: &Poly, num_vars: usize) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let exps: Vec<u16> = (0..num_vars).map(|i| ea[i] + eb[i]).collect();
            poly_add_term(&mut out, exps, ca * cb);
        }
    }
    out
}

fn poly_scale(a: &Poly, s: &Rational) -> Poly {
    a.iter().map(|(e, c)| (e.clone(), c.scale(s))).collect()
}

/// All exponent vectors of total degree d in `num_vars` variables,
/// lexicographic.
fn monomials_of_degree(num_vars: usize, d: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut current = vec![0u16; num_vars];
    fn rec(i: usize, remaining: usize, current: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == current.len() {
            current[i] = remaining as u16;
            out.push(current.clone());
            return;
        }
        for take in 0..=remaining {
            current[i] = take as u16;
            rec(i + 1, remaining - take, current, out);
        }
        current[i] = 0;
    }
    if num_vars == 0 {
        if d == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(0, d, &mut current, &mut out);
    out
}

fn binomial_usize(n: usize, k: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

// Average of the single-slot monomial x^a y^b over Γ, as a polynomial in
// the two slot variables (exponent pairs → coefficient).
fn slot_average(group: &MatrixGroup, a: u16, b: u16) -> BTreeMap<(u16, u16), Cyclotomic> {
    let mut acc: BTreeMap<(u16, u16), Cyclotomic> = BTreeMap::new();
    for m in &group.elements {
        // Substitute x ↦ p·x + q·y, y ↦ r·x + s·y and expand
        // (px+qy)^a (rx+sy)^b by binomials.
        let [p, q, r, s] = &m.entries;
        for i in 0..=a {
            let cx = p.pow(i as u64);
            let cy = q.pow((a - i) as u64);
            let bin_a = Rational::from_integer(BigInt::from(binomial_usize(a as usize, i as usize) as i64));
            let term_a = (&cx * &cy).scale(&bin_a);
            if term_a.is_zero() {
                continue;
            }
            for j in 0..=b {
                let dx = r.pow(j as u64);
                let dy = s.pow((b - j) as u64);
                let bin_b =
                    Rational::from_integer(BigInt::from(binomial_usize(b as usize, j as usize) as i64));
                let term = &term_a * &(&dx * &dy).scale(&bin_b);
                if term.is_zero() {
                    continue;
                }
                let key = (i + j, (a - i) + (b - j));
                match acc.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(term);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &term;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
    }
    let scale = Rational::new(BigInt::one(), BigInt::from(group.order()));
    acc.into_iter()
        .filter_map(|(k, v)| {
            let s = v.scale(&scale);
            if s.is_zero() {
                None
            } else {
                Some((k, s))
            }
        })
        .collect()
}

/// The Reynolds operator for Γₙ applied to one monomial: slotwise
/// Γ-average followed by Sₙ-symmetrization. Exact projection onto the
/// invariants.
pub fn reynolds(group: &MatrixGroup, n: usize, exps: &[u16]) -> Poly {
    let num_vars = 2 * n;
    assert_eq!(exps.len(), num_vars);
    // Product over slots of the per-slot Γ-averages.
    let mut acc: Poly = BTreeMap::new();
    acc.insert(vec![0u16; num_vars], Cyclotomic::one());
    for slot in 0..n {
        let avg = slot_average(group, exps[slot], exps[n + slot]);
        let mut next: Poly = BTreeMap::new();
        for (e, c) in &acc {
            for (&(xa, yb), v) in &avg {
                let mut exps2 = e.clone();
                exps2[slot] += xa;
                exps2[n + slot] += yb;
                poly_add_term(&mut next, exps2, c * v);
            }
        }
        acc = next;
    }
    // Sₙ-symmetrization.
    let perms = all_permutations(n);
    let mut sym: Poly = BTreeMap::new();
    for perm in &perms {
        for (e, c) in &acc {
            let mut moved = vec![0u16; num_vars];
            for i in 0..n {
                moved[perm[i]] = e[i];
                moved[n + perm[i]] = e[n + i];
            }
            poly_add_term(&mut sym, moved, c.clone());
        }
    }
    poly_scale(&sym, &Rational::new(BigInt::one(), BigInt::from(perms.len())))
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
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

// Row-reduce a set of homogeneous polynomials over the fixed monomial
// basis of their degree; returns an echelon basis as polynomials.
fn reduce_to_basis(polys: Vec<Poly>, num_vars: usize, d: usize) -> Vec<Poly> {
    let monomials = monomials_of_degree(num_vars, d);
    let index: BTreeMap<&Vec<u16>, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<Vec<Cyclotomic>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Cyclotomic::zero(); monomials.len()];
            for (e, c) in p {
                row[index[e]] = c.clone();
            }
            row
        })
        .collect();
    let reduced = linalg::row_reduce(rows);
    reduced
        .into_iter()
        .map(|row| {
            row.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (monomials[i].clone(), c))
                .collect()
        })
        .collect()
}

fn check_cap(num_vars: usize, d: usize) -> Result<(), InvariantsError> {
    let count = binomial_usize(num_vars + d.max(1) - 1 + usize::from(d == 0), d);
    if count > MONOMIAL_CAP {
        return Err(InvariantsError::TooManyMonomials {
            degree: d,
            count,
            cap: MONOMIAL_CAP,
        });
    }
    Ok(())
}

/// Basis of the degree-d homogeneous Γₙ-invariants, by Reynolds-averaging
/// every degree-d monomial and row-reducing.
pub fn invariant_basis(
    group: &MatrixGroup,
    n: usize,
    d: usize,
) -> Result<PolySpace, InvariantsError> {
    let num_vars = 2 * n;
    check_cap(num_vars, d)?;
    let mut projected = Vec::new();
    for exps in monomials_of_degree(num_vars, d) {
        let p = reynolds(group, n, &exps);
        if !p.is_empty() {
            projected.push(p);
        }
    }
    Ok(PolySpace {
        degree: d,
        num_vars,
        basis: reduce_to_basis(projected, num_vars, d),
    })
}

/// The lift f̃(x,y) = f(x₁,y₁) + … + f(xₙ,yₙ) of a one-slot polynomial.
fn lift(f: &Poly, n: usize) -> Poly {
    let num_vars = 2 * n;
    let mut out: Poly = BTreeMap::new();
    for slot in 0..n {
        for (e, c) in f {
            let mut exps = vec![0u16; num_vars];
            exps[slot] = e[0];
            exps[n + slot] = e[1];
            poly_add_term(&mut out, exps, c.clone());
        }
    }
    out
}

/// The degree-d slice of the subalgebra generated by the lifts f̃ of a
/// basis of ℂ[x,y]^Γ in degrees 1..=d: all products of lifts with total
/// degree d, row-reduced. Degree 0 is the constants.
pub fn generator_span(
    group: &MatrixGroup,
    n: usize,
    d: usize,
) -> Result<PolySpace, InvariantsError> {
    let num_vars = 2 * n;
    check_cap(num_vars, d)?;
    if d == 0 {
        let mut one: Poly = BTreeMap::new();
        one.insert(vec![0u16; num_vars], Cyclotomic::one());
        return Ok(PolySpace {
            degree: 0,
            num_vars,
            basis: vec![one],
        });
    }
    // Self-hosted basis of ℂ[x,y]^Γ per degree, via the n = 1 case.
    let mut generators: Vec<(usize, Poly)> = Vec::new();
    for e in 1..=d {
        let base = invariant_basis(group, 1, e)?;
        for f in base.basis {
            generators.push((e, lift(&f, n)));
        }
    }
    // All products of generators with total degree exactly d.
    let mut products: Vec<Poly> = Vec::new();
    fn rec(
        generators: &[(usize, Poly)],
        from: usize,
        remaining: usize,
        current: &Poly,
        num_vars: usize,
        out: &mut Vec<Poly>,
    ) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for (i, (deg, gen)) in generators.iter().enumerate().skip(from) {
            if *deg > remaining {
                continue;
            }
            let next = poly_mul(current, gen, num_vars);
            rec(generators, i, remaining - deg, &next, num_vars, out);
        }
    }
    let mut one: Poly = BTreeMap::new();
    one.insert(vec![0u16; num_vars], Cyclotomic::one());
    rec(&generators, 0, d, &one, num_vars, &mut products);
    Ok(PolySpace {
        degree: d,
        num_vars,
        basis: reduce_to_basis(products, num_vars, d),
    })
}

/// One degree of the lemma comparison.
#[derive(Debug, Clone)]
pub struct DegreeComparison {
    pub degree: usize,
    pub dim_invariants: usize,
    pub dim_generated: usize,
    pub contained: bool,
    pub equal: bool,
}

/// Report of the generator-lemma verification up to a degree bound.
#[derive(Debug, Clone)]
pub struct LemmaReport {
    pub group: String,
    pub n: usize,
    pub degrees: Vec<DegreeComparison>,
    pub verdict: bool,
}

impl LemmaReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": "1",
            "group": self.group,
            "n": self.n,
            "degrees": self.degrees.iter().map(|d| json!({
                "d": d.degree,
                "dim_invariants": d.dim_invariants,
                "dim_generated": d.dim_generated,
                "equal": d.equal,
            })).collect::<Vec<_>>(),
            "verdict": if self.verdict { "pass" } else { "fail" },
        })
    }
}

/// Compare `generator_span` against `invariant_basis` in every degree
/// d ≤ d_max: containment (every generated element reduces to zero against
/// the invariant basis) and dimension equality.
pub fn verify_lemma(
    group: &MatrixGroup,
    n: usize,
    d_max: usize,
) -> Result<LemmaReport, InvariantsError> {
    let mut degrees = Vec::new();
    let mut verdict = true;
    for d in 0..=d_max {
        let invariants = invariant_basis(group, n, d)?;
        let generated = generator_span(group, n, d)?;
        let monomials = monomials_of_degree(2 * n, d);
        let index: BTreeMap<&Vec<u16>, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let inv_rows: Vec<Vec<Cyclotomic>> = invariants
            .basis
            .iter()
            .map(|p| {
                let mut row = vec![Cyclotomic::zero(); monomials.len()];
                for (e, c) in p {
                    row[index[e]] = c.clone();
                }
                row
            })
            .collect();
        let contained = generated.basis.iter().all(|p| {
            let mut row = vec![Cyclotomic::zero(); monomials.len()];
            for (e, c) in p {
                row[index[e]] = c.clone();
            }
            linalg::reduce_against(&mut row, &inv_rows);
            row.iter().all(|c| c.is_zero())
        });
        let equal = contained && invariants.dimension() == generated.dimension();
        verdict &= equal;
        degrees.push(DegreeComparison {
            degree: d,
            dim_invariants: invariants.dimension(),
            dim_generated: generated.dimension(),
            contained,
            equal,
        });
    }
    Ok(LemmaReport {
        group: format!(
            "{}({})",
            group.spec.family.kebab_name(),
            group.spec.parameter
        ),
        n,
        degrees,
        verdict,
    })
}

/// Molien-series dimensions of the Γₙ-invariants up to degree d_max:
/// (1/|Γₙ|) Σ_x 1/det(I − q·M(x)), summed over type representatives with
/// exact class sizes, expanded as a power series.
pub fn molien_dims(group: &MatrixGroup, n: usize, d_max: usize) -> Vec<usize> {
    let mut series = vec![Rational::from_integer(BigInt::from(0)); d_max + 1];
    let mut series_cyc: Vec<Cyclotomic> = vec![Cyclotomic::zero(); d_max + 1];
    for rho in enumerate_types(group.num_classes(), n) {
        let rep = crate::exterior::canonical_representative(&rho, group);
        let m = crate::exterior::action_matrix(&rep, group, 2);
        // det(I − qM) = Σ_i (−1)^i e_i(M) q^i.
        let dim = 2 * n;
        let mut det_coeffs = vec![Cyclotomic::zero(); d_max + 1];
        det_coeffs[0] = Cyclotomic::one();
        for i in 1..=dim.min(d_max) {
            let e_i = m.exterior_power_trace(i);
            det_coeffs[i] = if i % 2 == 1 { -&e_i } else { e_i };
        }
        // Series inverse: b₀ = 1, b_k = −Σ_{j≥1} a_j b_{k−j}.
        let mut inv = vec![Cyclotomic::zero(); d_max + 1];
        inv[0] = Cyclotomic::one();
        for k in 1..=d_max {
            let mut acc = Cyclotomic::zero();
            for j in 1..=k {
                if !det_coeffs[j].is_zero() && !inv[k - j].is_zero() {
                    acc += &(&det_coeffs[j] * &inv[k - j]);
                }
            }
            inv[k] = -&acc;
        }
        let weight = Rational::new(BigInt::one(), centralizer_order(&rho, group));
        for k in 0..=d_max {
            series_cyc[k] += &inv[k].scale(&weight);
        }
    }
    for (k, v) in series_cyc.iter().enumerate() {
        series[k] = v
            .to_rational()
            .expect("Molien coefficients are rational");
    }
    series
        .into_iter()
        .map(|r| {
            assert!(r.denom().is_one(), "Molien coefficients are integers");
            let (_, digits) = r.numer().to_u32_digits();
            digits.first().copied().unwrap_or(0) as usize
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouplib::{build_group, GroupSpec};

    #[test]
    fn degree_zero_is_constants() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let space = invariant_basis(&g, 2, 0).unwrap();
        assert_eq!(space.dimension(), 1);
    }

    #[test]
    fn cyclic2_one_slot_degree2() {
        // −1 acts by sign on both variables; all of x², xy, y² survive.
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let space = invariant_basis(&g, 1, 2).unwrap();
        assert_eq!(space.dimension(), 3);
        // Odd degrees vanish.
        assert_eq!(invariant_basis(&g, 1, 1).unwrap().dimension(), 0);
        assert_eq!(invariant_basis(&g, 1, 3).unwrap().dimension(), 0);
    }

    #[test]
    fn cyclic2_two_slots_degree2() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let space = invariant_basis(&g, 2, 2).unwrap();
        assert_eq!(space.dimension(), 3);
        let gen = generator_span(&g, 2, 2).unwrap();
        assert_eq!(gen.dimension(), 3);
    }

    #[test]
    fn trivial_group_two_slots_degree2() {
        // S2-invariants of degree 2 in 4 variables: the 10 monomials fall
        // into 6 orbits (x₁², x₁x₂, x₁y₁, x₁y₂, y₁², y₁y₂ up to the swap),
        // matching the Molien count (10 + 2)/2 = 6. All of them are
        // reachable from lifts: x₁x₂ = ((x₁+x₂)² − (x₁²+x₂²))/2 and so on.
        let g = build_group(&GroupSpec::cyclic(1)).unwrap();
        let inv = invariant_basis(&g, 2, 2).unwrap();
        assert_eq!(inv.dimension(), 6);
        let gen = generator_span(&g, 2, 2).unwrap();
        assert_eq!(gen.dimension(), 6);
    }

    #[test]
    fn generator_span_degree1_cyclic2_is_zero() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        for n in 1..=2 {
            assert_eq!(generator_span(&g, n, 1).unwrap().dimension(), 0, "n={n}");
        }
    }

    #[test]
    fn reynolds_is_projection() {
        let g = build_group(&GroupSpec::cyclic(3)).unwrap();
        for exps in monomials_of_degree(4, 3) {
            let once = reynolds(&g, 2, &exps);
            // Averaging an already-invariant polynomial is the identity:
            // apply Reynolds to each monomial of `once` and combine.
            let mut twice: Poly = BTreeMap::new();
            for (e, c) in &once {
                for (e2, c2) in reynolds(&g, 2, e) {
                    let prod = c * &c2;
                    poly_add_term(&mut twice, e2, prod);
                }
            }
            assert_eq!(twice, once);
        }
    }

    #[test]
    fn lemma_holds_for_cyclic2_n1() {
        // n = 1 is the tautological case: f̃ = f.
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let report = verify_lemma(&g, 1, 4).unwrap();
        assert!(report.verdict);
    }

    #[test]
    fn lemma_holds_for_cyclic2_n2() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let report = verify_lemma(&g, 2, 4).unwrap();
        assert!(report.verdict, "{report:?}");
    }

    #[test]
    fn molien_matches_invariant_dims() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let molien = molien_dims(&g, 2, 4);
        for d in 0..=4 {
            let dim = invariant_basis(&g, 2, d).unwrap().dimension();
            assert_eq!(molien[d], dim, "degree {d}");
        }
    }

    #[test]
    fn cap_fires_for_huge_inputs() {
        let g = build_group(&GroupSpec::cyclic(2)).unwrap();
        let err = invariant_basis(&g, 10, 10);
        assert!(matches!(
            err,
            Err(InvariantsError::TooManyMonomials { .. })
        ));
    }
}
