//! Exact arithmetic for small finite groups.
//!
//! Elements are dense indices `0..order`, index 0 is always the identity.
//! Every table is validated on construction: associativity is checked
//! exhaustively, inverses must exist, labels must be unique.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on group order. Exhaustive subgroup enumeration and the
/// character-table solver stay tractable well past the sizes used here.
pub const ORDER_CAP_DEFAULT: usize = 128;

/// A finite group given by its complete multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// `mul[a * order + b]` is the index of `a * b`.
    mul: Vec<usize>,
    inv: Vec<usize>,
    labels: Vec<String>,
    name: String,
}

/// A conjugacy class, stored with its canonical representative
/// (the smallest element index in the class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub rep: usize,
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }
}

/// On-disk description of a group: a named preset, a raw multiplication
/// table, or a set of permutation generators.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GroupSpec {
    pub fn preset(name: &str) -> Self {
        GroupSpec {
            preset: Some(name.to_string()),
            table: None,
            permutations: None,
            labels: None,
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.build_with_cap(ORDER_CAP_DEFAULT)
    }

    pub fn build_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        let mut g = match (&self.preset, &self.table, &self.permutations) {
            (Some(name), None, None) => FiniteGroup::preset_with_cap(name, cap)?,
            (None, Some(table), None) => FiniteGroup::from_table(table.clone(), None, cap)?,
            (None, None, Some(perms)) => FiniteGroup::from_permutations(perms, cap)?,
            _ => {
                return Err(Error::InvalidSpec(
                    "exactly one of 'preset', 'table', 'permutations' must be given".into(),
                ))
            }
        };
        if let Some(labels) = &self.labels {
            g.set_labels(labels.clone())?;
        }
        Ok(g)
    }
}

impl FiniteGroup {
    /// Builds and validates a group from a full multiplication table.
    /// The identity must sit at index 0.
    pub fn from_table(
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
        cap: usize,
    ) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        if n > cap {
            return Err(Error::OrderCapExceeded { order: n, cap });
        }
        let mut mul = vec![0usize; n * n];
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {a} has length {} instead of {n}",
                    row.len()
                )));
            }
            for (b, &c) in row.iter().enumerate() {
                if c >= n {
                    return Err(Error::MalformedTable(format!(
                        "entry ({a},{b}) = {c} out of range"
                    )));
                }
                mul[a * n + b] = c;
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        let mut g = FiniteGroup {
            order: n,
            mul,
            inv: vec![0; n],
            labels,
            name: format!("G{n}"),
        };
        g.validate()?;
        Ok(g)
    }

    /// Generates a group from permutation generators by breadth-first
    /// closure. Elements are indexed in discovery order, identity first.
    pub fn from_permutations(generators: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
        let degree = generators.first().map(|p| p.len()).unwrap_or(0);
        for p in generators {
            let mut seen = vec![false; degree];
            if p.len() != degree {
                return Err(Error::NotAPermutation(p.clone()));
            }
            for &i in p {
                if i >= degree || seen[i] {
                    return Err(Error::NotAPermutation(p.clone()));
                }
                seen[i] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elements: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for gen in generators {
                // apply elements[i] first, then gen
                let composed: Vec<usize> = elements[i].iter().map(|&x| gen[x]).collect();
                if !index.contains_key(&composed) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded {
                            order: elements.len() + 1,
                            cap,
                        });
                    }
                    index.insert(composed.clone(), elements.len());
                    elements.push(composed.clone());
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        let n = elements.len();
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                // product a*b acts as "apply b, then a" on points
                let composed: Vec<usize> = elements[b].iter().map(|&x| elements[a][x]).collect();
                table[a][b] = index[&composed];
            }
        }
        let mut g = FiniteGroup::from_table(table, None, cap)?;
        g.name = format!("Perm{n}");
        Ok(g)
    }

    /// Builds a named preset: `Z<n>`, `S3`, `D4`, or an `x`-joined direct
    /// product of those (e.g. `Z2xZ2`, `Z2xZ4`).
    pub fn preset(name: &str) -> Result<FiniteGroup> {
        FiniteGroup::preset_with_cap(name, ORDER_CAP_DEFAULT)
    }

    pub fn preset_with_cap(name: &str, cap: usize) -> Result<FiniteGroup> {
        let parts: Vec<&str> = name.split('x').collect();
        let mut g: Option<FiniteGroup> = None;
        for part in parts {
            let factor = FiniteGroup::base_preset(part, cap)?;
            g = Some(match g {
                None => factor,
                Some(acc) => acc.direct_product(&factor, cap)?,
            });
        }
        let mut g = g.ok_or_else(|| Error::UnknownPreset(name.to_string()))?;
        g.name = name.to_string();
        Ok(g)
    }

    fn base_preset(name: &str, cap: usize) -> Result<FiniteGroup> {
        if let Some(rest) = name.strip_prefix('Z') {
            if let Ok(n) = rest.parse::<usize>() {
                if n == 0 {
                    return Err(Error::UnknownPreset(name.to_string()));
                }
                return FiniteGroup::cyclic(n, cap);
            }
        }
        match name {
            "S3" => FiniteGroup::s3(),
            "D4" => FiniteGroup::d4(),
            _ => Err(Error::UnknownPreset(name.to_string())),
        }
    }

    /// Cyclic group of order `n`, elements labeled `0..n-1` additively.
    pub fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup> {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mut g = FiniteGroup::from_table(table, Some(labels), cap)?;
        g.name = format!("Z{n}");
        Ok(g)
    }

    /// Symmetric group on 3 letters with elements ordered
    /// e, τ, τ², σ, στ, στ² (τ the 3-cycle, σ a flip; τσ = στ²).
    pub fn s3() -> Result<FiniteGroup> {
        // element (i, j) = σ^i τ^j; (i1,j1)(i2,j2) = σ^(i1+i2) τ^((-1)^i2 j1 + j2)
        let idx = |i: usize, j: usize| i * 3 + j;
        let mut table = vec![vec![0usize; 6]; 6];
        for i1 in 0..2 {
            for j1 in 0..3 {
                for i2 in 0..2 {
                    for j2 in 0..3 {
                        let i = (i1 + i2) % 2;
                        let j1s = if i2 == 1 { (3 - j1) % 3 } else { j1 };
                        let j = (j1s + j2) % 3;
                        table[idx(i1, j1)][idx(i2, j2)] = idx(i, j);
                    }
                }
            }
        }
        let labels = ["e", "τ", "τ²", "σ", "στ", "στ²"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut g = FiniteGroup::from_table(table, Some(labels), 8)?;
        g.name = "S3".into();
        Ok(g)
    }

    /// Dihedral group of order 8 with elements ordered
    /// e, r, r², r³, s, sr, sr², sr³ (r⁴ = s² = e, r s = s r⁻¹).
    pub fn d4() -> Result<FiniteGroup> {
        // element (m, k) = s^m r^k; (m1,k1)(m2,k2) = s^(m1+m2) r^((-1)^m2 k1 + k2)
        let idx = |m: usize, k: usize| m * 4 + k;
        let mut table = vec![vec![0usize; 8]; 8];
        for m1 in 0..2 {
            for k1 in 0..4 {
                for m2 in 0..2 {
                    for k2 in 0..4 {
                        let m = (m1 + m2) % 2;
                        let k1s = if m2 == 1 { (4 - k1) % 4 } else { k1 };
                        let k = (k1s + k2) % 4;
                        table[idx(m1, k1)][idx(m2, k2)] = idx(m, k);
                    }
                }
            }
        }
        let labels = ["e", "r", "r²", "r³", "s", "sr", "sr²", "sr³"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let mut g = FiniteGroup::from_table(table, Some(labels), 8)?;
        g.name = "D4".into();
        Ok(g)
    }

    /// Direct product, elements ordered with the right factor fastest;
    /// labels are `(a,b)` pairs of the factor labels.
    pub fn direct_product(&self, other: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
        let n = self.order * other.order;
        if n > cap {
            return Err(Error::OrderCapExceeded { order: n, cap });
        }
        let idx = |a: usize, b: usize| a * other.order + b;
        let mut table = vec![vec![0usize; n]; n];
        let mut labels = vec![String::new(); n];
        for a1 in 0..self.order {
            for b1 in 0..other.order {
                labels[idx(a1, b1)] = format!("({},{})", self.labels[a1], other.labels[b1]);
                for a2 in 0..self.order {
                    for b2 in 0..other.order {
                        table[idx(a1, b1)][idx(a2, b2)] =
                            idx(self.mul(a1, a2), other.mul(b1, b2));
                    }
                }
            }
        }
        let mut g = FiniteGroup::from_table(table, Some(labels), cap)?;
        g.name = format!("{}x{}", self.name, other.name);
        Ok(g)
    }

    fn validate(&mut self) -> Result<()> {
        let n = self.order;
        // identity at index 0
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::NoIdentity);
            }
        }
        // inverses
        for a in 0..n {
            match (0..n).find(|&b| self.mul(a, b) == 0 && self.mul(b, a) == 0) {
                Some(b) => self.inv[a] = b,
                None => return Err(Error::NoInverse(a)),
            }
        }
        // associativity, exhaustive
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        // each row/column is a permutation (Latin square) follows from the
        // group axioms above, so no separate check is needed.
        if self.labels.len() != n {
            return Err(Error::MalformedTable(format!(
                "{} labels for {} elements",
                self.labels.len(),
                n
            )));
        }
        let mut seen = HashMap::new();
        for l in &self.labels {
            if seen.insert(l.clone(), ()).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(())
    }

    pub fn set_labels(&mut self, labels: Vec<String>) -> Result<()> {
        if labels.len() != self.order {
            return Err(Error::MalformedTable(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        let old = std::mem::replace(&mut self.labels, labels);
        if let Err(e) = self.validate() {
            self.labels = old;
            return Err(e);
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// x g x⁻¹
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inv[x])
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Conjugacy classes, ordered by smallest member; the identity class
    /// comes first.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let n = self.order;
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if assigned[g] {
                continue;
            }
            let mut elements: Vec<usize> = (0..n).map(|x| self.conj(g, x)).collect();
            elements.sort_unstable();
            elements.dedup();
            for &e in &elements {
                assigned[e] = true;
            }
            classes.push(ConjugacyClass { rep: g, elements });
        }
        classes
    }

    /// Index of the class containing each element.
    pub fn class_of(&self, classes: &[ConjugacyClass]) -> Vec<usize> {
        let mut of = vec![0usize; self.order];
        for (i, c) in classes.iter().enumerate() {
            for &e in &c.elements {
                of[e] = i;
            }
        }
        of
    }

    /// Elements commuting with `a`, as a sorted element list.
    pub fn centralizer_elements(&self, a: usize) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| self.mul(g, a) == self.mul(a, g))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_structure_matches_its_labels() {
        let g = FiniteGroup::s3().unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.label(0), "e");
        // τ * τ = τ²
        assert_eq!(g.mul(1, 1), 2);
        // σ * τ = στ
        assert_eq!(g.mul(3, 1), 4);
        // τ * σ = στ²
        assert_eq!(g.mul(1, 3), 5);
        assert!(!g.is_abelian());
    }

    #[test]
    fn trivial_group_preset() {
        let g = FiniteGroup::preset("Z1").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn d4_from_generators_has_order_8() {
        // 4-cycle and a flip generate the dihedral group of the square
        let g = FiniteGroup::from_permutations(&[vec![1, 2, 3, 0], vec![2, 1, 0, 3]], 128).unwrap();
        assert_eq!(g.order(), 8);
    }

    #[test]
    fn d4_relations() {
        let g = FiniteGroup::d4().unwrap();
        // r * s = sr³ (index 7): rs = s r⁻¹
        assert_eq!(g.mul(1, 4), 7);
        // s * r = sr (index 5)
        assert_eq!(g.mul(4, 1), 5);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(4), 2);
    }

    #[test]
    fn s3_conjugacy_classes() {
        let g = FiniteGroup::s3().unwrap();
        let cls = g.conjugacy_classes();
        assert_eq!(cls.len(), 3);
        assert_eq!(cls[0].elements, vec![0]);
        assert_eq!(cls[1].elements, vec![1, 2]);
        assert_eq!(cls[2].elements, vec![3, 4, 5]);
    }

    #[test]
    fn d4_has_five_classes() {
        let g = FiniteGroup::d4().unwrap();
        let cls = g.conjugacy_classes();
        let sizes: Vec<usize> = cls.iter().map(|c| c.size()).collect();
        assert_eq!(cls.len(), 5);
        assert_eq!(sizes.iter().sum::<usize>(), 8);
        // [e], [r], [r²], [s], [sr] ordered by smallest member
        assert_eq!(cls[1].elements, vec![1, 3]);
        assert_eq!(cls[2].elements, vec![2]);
        assert_eq!(cls[3].elements, vec![4, 6]);
        assert_eq!(cls[4].elements, vec![5, 7]);
    }

    #[test]
    fn abelian_groups_have_singleton_classes() {
        for name in ["Z2", "Z3", "Z4", "Z2xZ2"] {
            let g = FiniteGroup::preset(name).unwrap();
            assert!(g.is_abelian());
            assert!(g.conjugacy_classes().iter().all(|c| c.size() == 1));
        }
    }

    #[test]
    fn centralizers_in_d4() {
        let g = FiniteGroup::d4().unwrap();
        // Z(r) = <r> of order 4
        assert_eq!(g.centralizer_elements(1), vec![0, 1, 2, 3]);
        // Z(s) = {e, r², s, sr²}
        assert_eq!(g.centralizer_elements(4), vec![0, 2, 4, 6]);
        // Z(e) = G
        assert_eq!(g.centralizer_elements(0).len(), 8);
    }

    #[test]
    fn non_associative_table_rejected() {
        // 2x2 table that fails the axioms
        let err = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None, 8);
        assert!(err.is_err());
    }

    #[test]
    fn bad_permutation_rejected() {
        assert!(FiniteGroup::from_permutations(&[vec![0, 0, 1]], 8).is_err());
    }

    #[test]
    fn order_cap_enforced() {
        assert!(matches!(
            FiniteGroup::cyclic(20, 10),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn group_spec_roundtrip() {
        let spec: GroupSpec = serde_json::from_str(r#"{"preset": "S3"}"#).unwrap();
        let g = spec.build().unwrap();
        assert_eq!(g.order(), 6);
        let spec2: GroupSpec =
            serde_json::from_str(r#"{"permutations": [[1,2,3,0],[2,1,0,3]]}"#).unwrap();
        assert_eq!(spec2.build().unwrap().order(), 8);
    }
}
