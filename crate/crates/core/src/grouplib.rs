//! The finite subgroups of SL₂(ℂ) as explicit matrix groups, their
//! conjugacy classes, character tables, and the standard inner product on
//! class functions.
//!
//! The catalog follows the classical classification: cyclic, binary
//! dihedral, binary tetrahedral, binary octahedral, binary icosahedral.
//! Groups are enumerated to closure from explicit generator matrices with
//! exact cyclotomic entries, so the defining two-dimensional representation
//! π is intrinsic to the group rather than a table annotation.

pub mod chartab;
pub mod modp;
pub mod table;

use std::collections::HashMap;

use num_traits::ToPrimitive;
use serde_json::json;
use thiserror::Error;

use crate::exactnum::{rat, Cyclotomic};
pub use table::GroupTable;

/// Hard limit on closure enumeration; the catalog tops out at order 120.
pub const DEFAULT_ELEMENT_CAP: usize = 1000;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("group closure exceeded the element cap of {cap}")]
    ClosureCapExceeded { cap: usize },
    #[error("class function defined on {got} classes, group has {expected}")]
    ClassCountMismatch { got: usize, expected: usize },
}

/// The five families of finite subgroups of SL₂(ℂ).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupFamily {
    Cyclic,
    BinaryDihedral,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
}

impl GroupFamily {
    pub fn kebab_name(self) -> &'static str {
        match self {
            GroupFamily::Cyclic => "cyclic",
            GroupFamily::BinaryDihedral => "binary-dihedral",
            GroupFamily::BinaryTetrahedral => "binary-tetrahedral",
            GroupFamily::BinaryOctahedral => "binary-octahedral",
            GroupFamily::BinaryIcosahedral => "binary-icosahedral",
        }
    }

    pub fn from_kebab(s: &str) -> Option<Self> {
        Some(match s {
            "cyclic" => GroupFamily::Cyclic,
            "binary-dihedral" => GroupFamily::BinaryDihedral,
            "binary-tetrahedral" => GroupFamily::BinaryTetrahedral,
            "binary-octahedral" => GroupFamily::BinaryOctahedral,
            "binary-icosahedral" => GroupFamily::BinaryIcosahedral,
            _ => return None,
        })
    }

    /// Whether the order parameter is meaningful for this family.
    pub fn uses_parameter(self) -> bool {
        matches!(self, GroupFamily::Cyclic | GroupFamily::BinaryDihedral)
    }
}

/// A catalog entry: family plus order parameter (Cyclic(n) has order n,
/// BinaryDihedral(n) has order 4n; the parameter is ignored for the three
/// exceptional groups).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupSpec {
    pub family: GroupFamily,
    pub parameter: u64,
}

impl GroupSpec {
    pub fn new(family: GroupFamily, parameter: u64) -> Self {
        assert!(
            !family.uses_parameter() || parameter >= 1,
            "parameter must be ≥ 1"
        );
        GroupSpec { family, parameter }
    }

    pub fn cyclic(n: u64) -> Self {
        Self::new(GroupFamily::Cyclic, n)
    }

    pub fn binary_dihedral(n: u64) -> Self {
        Self::new(GroupFamily::BinaryDihedral, n)
    }

    pub fn binary_tetrahedral() -> Self {
        Self::new(GroupFamily::BinaryTetrahedral, 1)
    }

    pub fn binary_octahedral() -> Self {
        Self::new(GroupFamily::BinaryOctahedral, 1)
    }

    pub fn binary_icosahedral() -> Self {
        Self::new(GroupFamily::BinaryIcosahedral, 1)
    }
}

/// 2×2 matrix with exact cyclotomic entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2 {
    pub entries: [Cyclotomic; 4],
}

impl Matrix2 {
    pub fn new(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> Self {
        Matrix2 {
            entries: [a, b, c, d],
        }
    }

    pub fn identity() -> Self {
        Matrix2::new(
            Cyclotomic::one(),
            Cyclotomic::zero(),
            Cyclotomic::zero(),
            Cyclotomic::one(),
        )
    }

    pub fn mul(&self, rhs: &Matrix2) -> Matrix2 {
        let [a, b, c, d] = &self.entries;
        let [e, f, g, h] = &rhs.entries;
        Matrix2::new(
            &(a * e) + &(b * g),
            &(a * f) + &(b * h),
            &(c * e) + &(d * g),
            &(c * f) + &(d * h),
        )
    }

    pub fn det(&self) -> Cyclotomic {
        let [a, b, c, d] = &self.entries;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> Cyclotomic {
        &self.entries[0] + &self.entries[3]
    }

    pub fn scale(&self, s: &Cyclotomic) -> Matrix2 {
        Matrix2::new(
            s * &self.entries[0],
            s * &self.entries[1],
            s * &self.entries[2],
            s * &self.entries[3],
        )
    }

    /// Deterministic canonical key: entry coefficient vectors at a fixed
    /// common conductor, independent of each entry's stored conductor.
    fn key_at(&self, conductor: u64) -> String {
        let mut out = String::new();
        for e in &self.entries {
            for c in e.dense_at(conductor) {
                out.push_str(&c.to_string());
                out.push(',');
            }
            out.push(';');
        }
        out
    }
}

/// One conjugacy class: deterministic representative, sorted members, and
/// the derived sizes. `size · centralizer_order = |Γ|` always.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub size: usize,
    pub centralizer_order: usize,
    pub element_order: u32,
}

/// A class function: one exact value per conjugacy class, in the group's
/// fixed class order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn constant(value: Cyclotomic, classes: usize) -> Self {
        ClassFunction {
            values: vec![value; classes],
        }
    }

    pub fn from_values(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    /// Pointwise (tensor-product) multiplication.
    pub fn pointwise_mul(&self, rhs: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(rhs.values.iter())
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(rhs.values.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Cyclotomic) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| s * v).collect(),
        }
    }
}

/// The full table of irreducible characters; row 0 is the trivial
/// character, rows are orthonormal, and Σ nᵢ² = |Γ|.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub rows: Vec<ClassFunction>,
    pub degrees: Vec<u64>,
}

/// A finite subgroup of SL₂(ℂ) enumerated to closure, with its conjugacy
/// data and multiplication oracle. Immutable after construction.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    pub spec: GroupSpec,
    pub elements: Vec<Matrix2>,
    conductor: u64,
    table: GroupTable,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
}

fn zeta(n: u64, k: u64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

fn generator_matrices(spec: &GroupSpec) -> Vec<Matrix2> {
    let zero = Cyclotomic::zero;
    let one = Cyclotomic::one;
    let neg_one = || Cyclotomic::from_int(-1);
    // The flip [[0,1],[−1,0]] shared by the dihedral and polyhedral series.
    let flip = || Matrix2::new(zero(), one(), neg_one(), zero());
    // (1/√2)·[[ζ8⁷, ζ8⁷], [ζ8⁵, ζ8]] with 1/√2 = (ζ8+ζ8⁷)/2; the classical
    // order-6 generator completing the binary tetrahedral group.
    let tetra = || {
        let inv_sqrt2 = (&zeta(8, 1) + &zeta(8, 7)).scale(&rat(1, 2));
        Matrix2::new(zeta(8, 7), zeta(8, 7), zeta(8, 5), zeta(8, 1)).scale(&inv_sqrt2)
    };
    match spec.family {
        GroupFamily::Cyclic => {
            let n = spec.parameter;
            vec![Matrix2::new(zeta(n, 1), zero(), zero(), zeta(n, n - 1))]
        }
        GroupFamily::BinaryDihedral => {
            let m = 2 * spec.parameter;
            vec![
                Matrix2::new(zeta(m, 1), zero(), zero(), zeta(m, m - 1)),
                flip(),
            ]
        }
        GroupFamily::BinaryTetrahedral => {
            vec![
                Matrix2::new(zeta(4, 1), zero(), zero(), zeta(4, 3)),
                flip(),
                tetra(),
            ]
        }
        GroupFamily::BinaryOctahedral => {
            vec![
                Matrix2::new(zeta(8, 1), zero(), zero(), zeta(8, 7)),
                flip(),
                tetra(),
            ]
        }
        GroupFamily::BinaryIcosahedral => {
            // Klein's ζ5-entry generators: an order-10 diagonal rotation and
            // a trace-0 element of order 4.
            let s = Matrix2::new(-&zeta(5, 3), zero(), zero(), -&zeta(5, 2));
            let phi = &zeta(5, 1) + &zeta(5, 4); // 2cos 72°
            let scale = (&zeta(5, 2) - &zeta(5, 3)).inverse().expect("nonzero");
            let t = Matrix2::new(phi.clone(), one(), one(), -&phi).scale(&scale);
            vec![s, t]
        }
    }
}

/// Enumerate the group generated by the documented generator matrices to
/// closure. The identity lands at index 0; every element is verified to
/// have determinant 1.
pub fn build_group(spec: &GroupSpec) -> Result<MatrixGroup, GroupError> {
    build_group_with_cap(spec, DEFAULT_ELEMENT_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<MatrixGroup, GroupError> {
    let generators = generator_matrices(spec);
    let conductor = generators
        .iter()
        .flat_map(|m| m.entries.iter())
        .map(|e| e.conductor())
        .fold(1u64, num_integer::lcm);

    let mut elements = vec![Matrix2::identity()];
    let mut index: HashMap<String, usize> = HashMap::new();
    index.insert(Matrix2::identity().key_at(conductor), 0);
    let mut frontier = 0usize;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        for g in &generators {
            let product = current.mul(g);
            let key = product.key_at(conductor);
            if !index.contains_key(&key) {
                if elements.len() >= cap {
                    return Err(GroupError::ClosureCapExceeded { cap });
                }
                index.insert(key, elements.len());
                elements.push(product);
            }
        }
        frontier += 1;
    }

    for m in &elements {
        assert_eq!(m.det(), Cyclotomic::one(), "all elements lie in SL₂");
    }

    let order = elements.len();
    let mut mult = vec![vec![0u32; order]; order];
    for (a, ma) in elements.iter().enumerate() {
        for (b, mb) in elements.iter().enumerate() {
            let key = ma.mul(mb).key_at(conductor);
            mult[a][b] = *index.get(&key).expect("closure is multiplication-closed") as u32;
        }
    }
    let table = GroupTable::new(mult);

    // Deterministic class order: element order, class size, canonical trace
    // rendering; the stable sort keeps enumeration order on full ties.
    let mut classes = table.conjugacy_classes();
    classes.sort_by(|a, b| {
        let ta = elements[a.representative].trace().to_string();
        let tb = elements[b.representative].trace().to_string();
        (a.element_order, a.size, ta).cmp(&(b.element_order, b.size, tb))
    });
    let class_of = table.class_map(&classes);
    let inverse_class = chartab::inverse_class_map(&table, &classes, &class_of);

    Ok(MatrixGroup {
        spec: *spec,
        elements,
        conductor,
        table,
        classes,
        class_of,
        inverse_class,
    })
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    pub fn inv(&self, a: usize) -> usize {
        self.table.inv(a)
    }

    pub fn matrix(&self, a: usize) -> &Matrix2 {
        &self.elements[a]
    }

    pub fn group_table(&self) -> &GroupTable {
        &self.table
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Class index of the inverses of a class.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.inverse_class[class]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// The character of the defining representation π: the matrix trace on
    /// each class representative.
    pub fn pi_character(&self) -> ClassFunction {
        ClassFunction {
            values: self
                .classes
                .iter()
                .map(|c| self.elements[c.representative].trace())
                .collect(),
        }
    }

    /// The trivial character.
    pub fn trivial_character(&self) -> ClassFunction {
        ClassFunction::constant(Cyclotomic::one(), self.classes.len())
    }

    /// Complete character table via the tensor-split pass seeded with π,
    /// completed (and cross-checked) by the class-matrix method. Row 0 is
    /// the trivial character.
    pub fn character_table(&self) -> CharacterTable {
        let pi = self.pi_character();
        let rows = chartab::irreducible_characters(&self.table, &self.classes, Some(&pi.values));
        let degrees = rows
            .iter()
            .map(|row| {
                row[0]
                    .to_integer()
                    .expect("integral degree")
                    .to_u64()
                    .expect("positive degree")
            })
            .collect();
        CharacterTable {
            rows: rows.into_iter().map(ClassFunction::from_values).collect(),
            degrees,
        }
    }

    /// JSON report of the group and its character table.
    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<serde_json::Value> = self
            .classes
            .iter()
            .map(|c| {
                json!({
                    "size": c.size,
                    "element_order": c.element_order,
                    "trace": self.elements[c.representative].trace().to_string(),
                })
            })
            .collect();
        let table = self.character_table();
        let rows: Vec<Vec<String>> = table
            .rows
            .iter()
            .map(|r| r.values.iter().map(|v| v.to_string()).collect())
            .collect();
        json!({
            "schema": "1",
            "family": self.spec.family.kebab_name(),
            "parameter": if self.spec.family.uses_parameter() { Some(self.spec.parameter) } else { None },
            "order": self.order(),
            "classes": classes,
            "table": rows,
        })
    }
}

/// Exact standard inner product ⟨f,g⟩_Γ = (1/|Γ|) Σ_c |c| f(c) g(c⁻¹-class).
/// Symmetric in its arguments; errors if either function is defined on the
/// wrong number of classes.
pub fn inner_product(
    f: &ClassFunction,
    g: &ClassFunction,
    group: &MatrixGroup,
) -> Result<Cyclotomic, GroupError> {
    let k = group.num_classes();
    for h in [f, g] {
        if h.values.len() != k {
            return Err(GroupError::ClassCountMismatch {
                got: h.values.len(),
                expected: k,
            });
        }
    }
    Ok(chartab::inner_product_classwise(
        &f.values,
        &g.values,
        &group.classes,
        &group.inverse_class,
        group.order(),
    ))
}

/// Multiplicities mᵢ = ⟨f, γᵢ⟩ of a class function against the irreducible
/// rows. For a virtual character the reconstruction Σ mᵢ γᵢ = f is exact;
/// non-integer multiplicities are returned as-is.
pub fn decompose(
    f: &ClassFunction,
    table: &CharacterTable,
    group: &MatrixGroup,
) -> Result<Vec<Cyclotomic>, GroupError> {
    table
        .rows
        .iter()
        .map(|row| inner_product(f, row, group))
        .collect()
}

/// The regular character: |Γ| at the identity class, 0 elsewhere.
pub fn regular_character(group: &MatrixGroup) -> ClassFunction {
    let mut values = vec![Cyclotomic::zero(); group.num_classes()];
    values[0] = Cyclotomic::from_int(group.order() as i64);
    ClassFunction { values }
}
