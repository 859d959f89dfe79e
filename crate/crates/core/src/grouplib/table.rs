//! Abstract finite group given by its multiplication table.
//!
//! The catalog matrix groups and the brute-force wreath-product oracle both
//! reduce to this representation: element indices with a multiplication
//! oracle. Index 0 is always the identity.

use super::ConjugacyClass;

#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    elem_order: Vec<u32>,
}

impl GroupTable {
    /// Build from a multiplication table `mult[a][b] = a·b`. The identity
    /// must sit at index 0; inverses and element orders are derived.
    pub fn new(mult: Vec<Vec<u32>>) -> Self {
        let order = mult.len();
        assert!(order > 0);
        for (a, row) in mult.iter().enumerate() {
            assert_eq!(row.len(), order);
            assert_eq!(row[0], a as u32, "index 0 must be the identity");
            assert_eq!(mult[0][a], a as u32, "index 0 must be the identity");
        }
        let flat: Vec<u32> = mult.into_iter().flatten().collect();
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if flat[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
            assert_ne!(inv[a], u32::MAX, "element without inverse");
        }
        let mut elem_order = vec![0u32; order];
        for a in 0..order {
            let mut x = a as u32;
            let mut k = 1;
            while x != 0 {
                x = flat[x as usize * order + a];
                k += 1;
            }
            elem_order[a] = k;
        }
        GroupTable {
            order,
            mult: flat,
            inv,
            elem_order,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.elem_order[a]
    }

    /// Exponent of the group: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        let mut e: u64 = 1;
        for a in 0..self.order {
            e = num_integer::lcm(e, self.elem_order[a] as u64);
        }
        e
    }

    /// Conjugacy classes by exhaustive orbit computation, sorted by
    /// (element order, class size, smallest member index). Callers with more
    /// structure (e.g. matrix traces) may re-sort.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..n {
                let y = self.mul(self.mul(g, x), self.inv(g));
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: members[0],
                size: members.len(),
                centralizer_order: n / members.len(),
                element_order: self.elem_order[x],
                members,
            });
        }
        classes.sort_by_key(|c| (c.element_order, c.size, c.representative));
        classes
    }

    /// Element index → class index, for a given class list.
    pub fn class_map(&self, classes: &[ConjugacyClass]) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.order];
        for (ci, class) in classes.iter().enumerate() {
            for &m in &class.members {
                map[m] = ci;
            }
        }
        assert!(map.iter().all(|&c| c != usize::MAX), "classes must partition");
        map
    }
}
