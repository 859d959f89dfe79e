//! The McKay correspondence data of a finite subgroup Γ ⊂ SL₂(ℂ): the
//! self-dual virtual character ξ = 2γ₀ − π, the matrix A with
//! a_ij = ⟨ξ·γᵢ, γⱼ⟩, the weighted bilinear form ⟨f,g⟩_ξ = ⟨ξ·f, g⟩, and
//! recognition of A as an affine Cartan matrix of ADE type with null
//! vector δ = (dim Vᵢ).
//!
//! Drawing one edge between vertices i and j when a_ij = −1 and two when
//! a_ij = −2 recovers the affine Dynkin diagram; the trivial group
//! degenerates to the 1×1 zero matrix, reported as type `Zero` so that
//! downstream Gram computations stay total.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::json;
use thiserror::Error;

use crate::exactnum::Cyclotomic;
use crate::grouplib::{decompose, inner_product, CharacterTable, ClassFunction, MatrixGroup};
use crate::linalg;

#[derive(Debug, Error)]
pub enum McKayError {
    #[error("⟨ξ·γ_{i}, γ_{j}⟩ is not an integer: {value}")]
    NonIntegerEntry { i: usize, j: usize, value: String },
    #[error("matrix does not match any affine ADE template")]
    NotAffineAde,
    #[error("A·δ ≠ 0: the degree vector is not in the radical")]
    DegreesNotNull,
}

/// The (r+1)×(r+1) integer matrix a_ij = ⟨ξ·γᵢ, γⱼ⟩, symmetric with
/// diagonal 2 for nontrivial Γ. Vertex i is the i-th character-table row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn to_bigint(&self) -> Vec<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    /// Exact positive-semidefiniteness via the integer characteristic
    /// polynomial sign test.
    pub fn is_positive_semidefinite(&self) -> bool {
        linalg::is_positive_semidefinite(&self.to_bigint())
    }

    /// A·v for an integer vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v.iter()).map(|(a, x)| a * x).sum())
            .collect()
    }
}

/// Affine ADE label; `Zero` is the degenerate 1×1 case of the trivial group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AffineType {
    Zero,
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl std::fmt::Display for AffineType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AffineType::Zero => write!(f, "Zero"),
            AffineType::A(m) => write!(f, "A~{m}"),
            AffineType::D(m) => write!(f, "D~{m}"),
            AffineType::E6 => write!(f, "E~6"),
            AffineType::E7 => write!(f, "E~7"),
            AffineType::E8 => write!(f, "E~8"),
        }
    }
}

/// Result of affine-type recognition: the label, a bijection from
/// character indices to template node ids (the trivial character maps to
/// the affine node, always template node 0), and the δ vector.
#[derive(Debug, Clone)]
pub struct AffineTypeReport {
    pub label: AffineType,
    pub node_bijection: Vec<usize>,
    pub delta: Vec<i64>,
}

/// ξ = λ(π) = 2γ₀ − π as a class function: value 2 − tr π(c) on each class.
/// Self-dual because tr π(g⁻¹) is the complex conjugate of tr π(g).
pub fn xi_character(group: &MatrixGroup) -> ClassFunction {
    let pi = group.pi_character();
    let two = Cyclotomic::from_int(2);
    ClassFunction::from_values(pi.values.iter().map(|v| &two - v).collect())
}

/// The weighted bilinear form ⟨f,g⟩_ξ = ⟨ξ·f, g⟩_Γ; symmetric and bilinear.
pub fn weighted_form(
    f: &ClassFunction,
    g: &ClassFunction,
    group: &MatrixGroup,
) -> Result<Cyclotomic, crate::grouplib::GroupError> {
    let xi = xi_character(group);
    inner_product(&xi.pointwise_mul(f), g, group)
}

/// a_ij = ⟨ξ·γᵢ, γⱼ⟩_Γ, which equals 2·Id − (adjacency of the McKay
/// quiver). Non-integer entries indicate an internal inconsistency.
pub fn cartan_matrix(
    group: &MatrixGroup,
    table: &CharacterTable,
) -> Result<CartanMatrix, McKayError> {
    let xi = xi_character(group);
    let k = table.rows.len();
    let mut entries = vec![vec![0i64; k]; k];
    for i in 0..k {
        let xi_gi = xi.pointwise_mul(&table.rows[i]);
        for j in 0..k {
            let value = inner_product(&xi_gi, &table.rows[j], group)
                .expect("table rows live on the group's classes");
            let as_int = value
                .to_integer()
                .and_then(|b| b.to_i64())
                .ok_or_else(|| McKayError::NonIntegerEntry {
                    i,
                    j,
                    value: value.to_string(),
                })?;
            entries[i][j] = as_int;
        }
    }
    Ok(CartanMatrix { entries })
}

struct Template {
    label: AffineType,
    edges: Vec<(usize, usize, i64)>, // (node, node, multiplicity)
    delta: Vec<i64>,
}

impl Template {
    fn nodes(&self) -> usize {
        self.delta.len()
    }

    fn multiplicity(&self, a: usize, b: usize) -> i64 {
        for &(x, y, m) in &self.edges {
            if (x, y) == (a, b) || (y, x) == (a, b) {
                return m;
            }
        }
        0
    }
}

// Node 0 is the affine node of every template.
fn affine_templates(nodes: usize) -> Vec<Template> {
    let mut out = Vec::new();
    if nodes == 1 {
        out.push(Template {
            label: AffineType::Zero,
            edges: vec![],
            delta: vec![1],
        });
        return out;
    }
    if nodes == 2 {
        // A~1: doubled edge.
        out.push(Template {
            label: AffineType::A(1),
            edges: vec![(0, 1, 2)],
            delta: vec![1, 1],
        });
        return out;
    }
    // A~(m): (m+1)-cycle, all marks 1.
    {
        let m = nodes - 1;
        let edges = (0..nodes).map(|i| (i, (i + 1) % nodes, 1)).collect();
        out.push(Template {
            label: AffineType::A(m),
            edges,
            delta: vec![1; nodes],
        });
    }
    // D~(m) for m ≥ 4: a chain of mark-2 nodes with a pair of mark-1 tails
    // at each end.
    if nodes >= 5 {
        let m = nodes - 1;
        let mut edges = vec![(0, 2, 1), (1, 2, 1)];
        for i in 2..nodes - 3 {
            edges.push((i, i + 1, 1));
        }
        edges.push((nodes - 2, nodes - 3, 1));
        edges.push((nodes - 1, nodes - 3, 1));
        let mut delta = vec![2; nodes];
        delta[0] = 1;
        delta[1] = 1;
        delta[nodes - 2] = 1;
        delta[nodes - 1] = 1;
        out.push(Template {
            label: AffineType::D(m),
            edges,
            delta,
        });
    }
    if nodes == 7 {
        // E~6: three arms of length 2 from the central node 2.
        out.push(Template {
            label: AffineType::E6,
            edges: vec![
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 1),
                (2, 5, 1),
                (5, 6, 1),
            ],
            delta: vec![1, 2, 3, 2, 1, 2, 1],
        });
    }
    if nodes == 8 {
        // E~7: chain of 7 with one node hanging off the middle.
        out.push(Template {
            label: AffineType::E7,
            edges: vec![
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 1),
                (4, 5, 1),
                (5, 6, 1),
                (3, 7, 1),
            ],
            delta: vec![1, 2, 3, 4, 3, 2, 1, 2],
        });
    }
    if nodes == 9 {
        // E~8: chain of 8 with one node hanging off the mark-6 node.
        out.push(Template {
            label: AffineType::E8,
            edges: vec![
                (0, 1, 1),
                (1, 2, 1),
                (2, 3, 1),
                (3, 4, 1),
                (4, 5, 1),
                (5, 6, 1),
                (6, 7, 1),
                (5, 8, 1),
            ],
            delta: vec![1, 2, 3, 4, 5, 6, 4, 2, 3],
        });
    }
    out
}

fn match_template(
    cartan: &CartanMatrix,
    degrees: &[i64],
    template: &Template,
) -> Option<Vec<usize>> {
    let n = cartan.size();
    if template.nodes() != n {
        return None;
    }
    // Backtracking bijection: character index → template node. The trivial
    // character (index 0) must land on the affine node (template node 0),
    // and δ marks must match exactly.
    fn consistent(
        cartan: &CartanMatrix,
        template: &Template,
        assignment: &[usize],
        placed: usize,
    ) -> bool {
        for other in 0..placed {
            let expected = template.multiplicity(assignment[placed], assignment[other]);
            if -cartan.entries[placed][other] != expected {
                return false;
            }
        }
        true
    }

    fn backtrack(
        cartan: &CartanMatrix,
        degrees: &[i64],
        template: &Template,
        assignment: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        let n = assignment.len();
        if next == n {
            return true;
        }
        let candidates: Vec<usize> = if next == 0 { vec![0] } else { (0..n).collect() };
        for node in candidates {
            if used[node] || template.delta[node] != degrees[next] {
                continue;
            }
            assignment[next] = node;
            used[node] = true;
            if consistent(cartan, template, assignment, next)
                && backtrack(cartan, degrees, template, assignment, used, next + 1)
            {
                return true;
            }
            assignment[next] = usize::MAX;
            used[node] = false;
        }
        false
    }

    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(cartan, degrees, template, &mut assignment, &mut used, 0) {
        Some(assignment)
    } else {
        None
    }
}

/// Recognize an affine ADE Cartan matrix by explicit template matching and
/// verify that the degree vector spans its radical (A·δ = 0).
pub fn identify_affine_type(
    cartan: &CartanMatrix,
    degrees: &[i64],
) -> Result<AffineTypeReport, McKayError> {
    if cartan.apply(degrees).iter().any(|x| *x != 0) {
        return Err(McKayError::DegreesNotNull);
    }
    for template in affine_templates(cartan.size()) {
        if let Some(bijection) = match_template(cartan, degrees, &template) {
            return Ok(AffineTypeReport {
                label: template.label,
                node_bijection: bijection,
                delta: degrees.to_vec(),
            });
        }
    }
    Err(McKayError::NotAffineAde)
}

/// Σ_{i,j} a^Q_{ij} nᵢ nⱼ where π·γᵢ = Σ_j a^Q_{ij} γⱼ: the dimension of
/// the Γ-equivariant Hom-space between the regular representation and its
/// twist by the defining representation. Equals 2|Γ| for every catalog
/// group.
pub fn hom_dimension_check(group: &MatrixGroup, table: &CharacterTable) -> BigInt {
    let pi = group.pi_character();
    let mut total = BigInt::zero();
    for (i, row) in table.rows.iter().enumerate() {
        let product = pi.pointwise_mul(row);
        let mults = decompose(&product, table, group).expect("same group");
        for (j, m) in mults.iter().enumerate() {
            let a = m.to_integer().expect("tensor multiplicities are integers");
            total += a * BigInt::from(table.degrees[i]) * BigInt::from(table.degrees[j]);
        }
    }
    total
}

/// DOT rendering of the McKay graph: undirected multigraph, one `--` line
/// per unit of edge multiplicity, node labels = character degrees.
pub fn export_graph(cartan: &CartanMatrix, labels: &[u64]) -> String {
    let mut out = String::from("graph mckay {\n");
    for (i, d) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{d}\"];\n"));
    }
    let n = cartan.size();
    for i in 0..n {
        for j in i + 1..n {
            let mult = -cartan.entries[i][j];
            for _ in 0..mult {
                out.push_str(&format!("  n{i} -- n{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Full JSON verification report for one group.
pub fn report(group: &MatrixGroup) -> serde_json::Value {
    let table = group.character_table();
    let xi = xi_character(group);
    let cartan = cartan_matrix(group, &table).expect("integral Cartan matrix");
    let degrees: Vec<i64> = table.degrees.iter().map(|&d| d as i64).collect();
    let affine = identify_affine_type(&cartan, &degrees);
    let hom_dim = hom_dimension_check(group, &table);
    let expected = BigInt::from(2 * group.order() as i64);
    json!({
        "schema": "1",
        "group": group.spec.family.kebab_name(),
        "parameter": if group.spec.family.uses_parameter() { Some(group.spec.parameter) } else { None },
        "xi_values": xi.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        "cartan": cartan.entries,
        "symmetric": cartan.is_symmetric(),
        "positive_semidefinite": cartan.is_positive_semidefinite(),
        "affine_type": match &affine {
            Ok(r) => json!({
                "label": r.label.to_string(),
                "node_bijection": r.node_bijection,
                "delta": r.delta,
            }),
            Err(e) => json!({ "error": e.to_string() }),
        },
        "hom_dim_check": {
            "value": hom_dim.to_string(),
            "expected": expected.to_string(),
            "equal": hom_dim == expected,
        },
    })
}
