//! Subgroups, cosets, quotients and subgroup enumeration.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A subgroup of a parent group, stored as a sorted element-index set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    /// Validates closure, identity and inverses and returns the subgroup.
    pub fn new(parent: &FiniteGroup, mut elements: Vec<usize>) -> Result<Subgroup> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let inside: HashSet<usize> = elements.iter().copied().collect();
        for &a in &elements {
            if a >= parent.order() {
                return Err(Error::NotASubgroup(format!("element {a} out of range")));
            }
            if !inside.contains(&parent.inv(a)) {
                return Err(Error::NotASubgroup(format!("inverse of {a} missing")));
            }
            for &b in &elements {
                if !inside.contains(&parent.mul(a, b)) {
                    return Err(Error::SubgroupNotClosed(a, b));
                }
            }
        }
        Ok(Subgroup { elements })
    }

    /// Closure of a generating set.
    pub fn generated_by(parent: &FiniteGroup, generators: &[usize]) -> Subgroup {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        seen.insert(0);
        let mut queue: Vec<usize> = vec![0];
        while let Some(x) = queue.pop() {
            for &g in generators {
                let y = parent.mul(x, g);
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        // generators' inverses are reached automatically in a finite group
        Subgroup {
            elements: seen.into_iter().collect(),
        }
    }

    pub fn trivial() -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn whole(parent: &FiniteGroup) -> Subgroup {
        Subgroup {
            elements: parent.elements().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// True when `x H x⁻¹ = H` for every `x` in `ambient`.
    pub fn is_normal_in_elements(&self, parent: &FiniteGroup, ambient: &[usize]) -> bool {
        ambient
            .iter()
            .all(|&x| self.elements.iter().all(|&h| self.contains(parent.conj(h, x))))
    }

    pub fn is_normal_in(&self, parent: &FiniteGroup, ambient: &Subgroup) -> bool {
        self.is_normal_in_elements(parent, ambient.elements())
    }

    pub fn is_normal_in_group(&self, parent: &FiniteGroup) -> bool {
        let all: Vec<usize> = parent.elements().collect();
        self.is_normal_in_elements(parent, &all)
    }

    /// x H x⁻¹
    pub fn conjugate(&self, parent: &FiniteGroup, x: usize) -> Subgroup {
        let mut elements: Vec<usize> = self.elements.iter().map(|&h| parent.conj(h, x)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// Display form like `{e, r², s, sr²}`.
    pub fn describe(&self, parent: &FiniteGroup) -> String {
        let names: Vec<&str> = self.elements.iter().map(|&g| parent.label(g)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Realizes the subgroup as a standalone [`FiniteGroup`]. Returns the
    /// group together with the local->parent element map; the identity maps
    /// to index 0 on both sides.
    pub fn as_group(&self, parent: &FiniteGroup) -> Result<(FiniteGroup, Vec<usize>)> {
        let to_parent = self.elements.clone();
        let mut to_local = vec![usize::MAX; parent.order()];
        for (i, &g) in to_parent.iter().enumerate() {
            to_local[g] = i;
        }
        let n = to_parent.len();
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[a][b] = to_local[parent.mul(to_parent[a], to_parent[b])];
            }
        }
        let labels = to_parent
            .iter()
            .map(|&g| parent.label(g).to_string())
            .collect();
        let mut g = FiniteGroup::from_table(table, Some(labels), parent.order().max(n))?;
        g.set_name(format!("{}<{}>", parent.name(), n));
        Ok((g, to_parent))
    }
}

/// Which side a coset decomposition uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum CosetSide {
    Left,
    Right,
    Double,
}

/// A partition of an ambient element set into (left, right or double)
/// cosets of a subgroup. Representatives are the smallest member of each
/// coset, listed in ascending order, so the identity coset comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub side: CosetSide,
    pub representatives: Vec<usize>,
    /// element -> coset index, usize::MAX outside the ambient set
    pub membership: Vec<usize>,
    pub cosets: Vec<Vec<usize>>,
}

impl CosetDecomposition {
    pub fn count(&self) -> usize {
        self.representatives.len()
    }

    pub fn coset_index(&self, g: usize) -> Option<usize> {
        match self.membership.get(g) {
            Some(&i) if i != usize::MAX => Some(i),
            _ => None,
        }
    }
}

/// Left (`gH`) or right (`Hg`) cosets of `h` inside the ambient element
/// list (commonly the whole group or a subgroup containing `h`).
pub fn cosets_in(
    parent: &FiniteGroup,
    h: &Subgroup,
    ambient: &[usize],
    side: CosetSide,
) -> CosetDecomposition {
    let mut membership = vec![usize::MAX; parent.order()];
    let mut representatives = Vec::new();
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for &g in ambient {
        if membership[g] != usize::MAX {
            continue;
        }
        let idx = representatives.len();
        let mut coset: Vec<usize> = match side {
            CosetSide::Left => h.elements().iter().map(|&x| parent.mul(g, x)).collect(),
            CosetSide::Right => h.elements().iter().map(|&x| parent.mul(x, g)).collect(),
            CosetSide::Double => unreachable!("use double_cosets"),
        };
        coset.sort_unstable();
        for &m in &coset {
            membership[m] = idx;
        }
        representatives.push(coset[0]);
        cosets.push(coset);
    }
    CosetDecomposition {
        side,
        representatives,
        membership,
        cosets,
    }
}

/// Cosets of a subgroup in the whole parent group.
pub fn cosets(parent: &FiniteGroup, h: &Subgroup, side: CosetSide) -> CosetDecomposition {
    let all: Vec<usize> = parent.elements().collect();
    cosets_in(parent, h, &all, side)
}

/// Double cosets `A g B` of the whole parent group.
pub fn double_cosets(parent: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> CosetDecomposition {
    let mut membership = vec![usize::MAX; parent.order()];
    let mut representatives = Vec::new();
    let mut cosets_list: Vec<Vec<usize>> = Vec::new();
    for g in parent.elements() {
        if membership[g] != usize::MAX {
            continue;
        }
        let idx = representatives.len();
        let mut coset = Vec::new();
        for &x in a.elements() {
            let xg = parent.mul(x, g);
            for &y in b.elements() {
                coset.push(parent.mul(xg, y));
            }
        }
        coset.sort_unstable();
        coset.dedup();
        for &m in &coset {
            membership[m] = idx;
        }
        representatives.push(coset[0]);
        cosets_list.push(coset);
    }
    CosetDecomposition {
        side: CosetSide::Double,
        representatives,
        membership,
        cosets: cosets_list,
    }
}

/// All subgroups of the parent, sorted canonically (by order, then by the
/// element list). The list is closed under conjugation by construction.
pub fn subgroups(parent: &FiniteGroup) -> Vec<Subgroup> {
    // breadth-first growth: extend each known subgroup by one generator
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial()];
    while let Some(h) = frontier.pop() {
        for g in parent.elements() {
            if h.contains(g) {
                continue;
            }
            let mut gens: Vec<usize> = h.elements().to_vec();
            gens.push(g);
            let bigger = Subgroup::generated_by(parent, &gens);
            if found.insert(bigger.elements().to_vec()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|elements| Subgroup { elements })
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    out
}

/// All subgroups of `h` (as subgroups of the parent) that are normal in `h`.
pub fn normal_subgroups_in(parent: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    // enumerate subgroups of the subgroup by the same closure growth,
    // restricted to h's elements
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(vec![0]);
    let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial()];
    while let Some(k) = frontier.pop() {
        for &g in h.elements() {
            if k.contains(g) {
                continue;
            }
            let mut gens: Vec<usize> = k.elements().to_vec();
            gens.push(g);
            let bigger = Subgroup::generated_by(parent, &gens);
            if found.insert(bigger.elements().to_vec()) {
                frontier.push(bigger);
            }
        }
    }
    let mut out: Vec<Subgroup> = found
        .into_iter()
        .map(|elements| Subgroup { elements })
        .filter(|k| k.is_normal_in(parent, h))
        .collect();
    out.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements().cmp(b.elements()))
    });
    out
}

/// The quotient group M/N realized as a [`FiniteGroup`] over coset
/// representatives, together with the projection M -> M/N.
#[derive(Debug, Clone)]
pub struct QuotientGroup {
    pub group: Arc<FiniteGroup>,
    pub numerator: Subgroup,
    pub denominator: Subgroup,
    /// cosets of N inside M, index-aligned with `group` elements
    pub cosets: CosetDecomposition,
}

impl QuotientGroup {
    /// Builds M/N. Fails unless N is a normal subgroup of M.
    pub fn new(parent: &FiniteGroup, m: &Subgroup, n: &Subgroup) -> Result<QuotientGroup> {
        if !n.is_subset_of(m) {
            return Err(Error::NotASubgroup("N is not contained in M".into()));
        }
        if !n.is_normal_in(parent, m) {
            return Err(Error::NotNormal);
        }
        let decomp = cosets_in(parent, n, m.elements(), CosetSide::Left);
        let q = decomp.count();
        let mut table = vec![vec![0usize; q]; q];
        for i in 0..q {
            for j in 0..q {
                let prod = parent.mul(decomp.representatives[i], decomp.representatives[j]);
                table[i][j] = decomp.coset_index(prod).expect("product left M");
            }
        }
        let labels = decomp
            .representatives
            .iter()
            .map(|&r| {
                if n.order() == 1 {
                    parent.label(r).to_string()
                } else {
                    format!("[{}]", parent.label(r))
                }
            })
            .collect();
        let mut group = FiniteGroup::from_table(table, Some(labels), parent.order().max(q))?;
        group.set_name(format!("{}-quotient{}", parent.name(), q));
        Ok(QuotientGroup {
            group: Arc::new(group),
            numerator: m.clone(),
            denominator: n.clone(),
            cosets: decomp,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Projection M -> M/N; None outside M.
    pub fn project(&self, g: usize) -> Option<usize> {
        self.cosets.coset_index(g)
    }

    /// Canonical representative in M of a quotient element.
    pub fn representative(&self, q: usize) -> usize {
        self.cosets.representatives[q]
    }
}

/// Searches for an isomorphism between two groups by backtracking over
/// generator images. Intended for small orders (≤ 16 or so).
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let n = a.order();
    // quick invariant: element-order multisets must match
    let mut ord_a: Vec<usize> = (0..n).map(|g| a.element_order(g)).collect();
    let mut ord_b: Vec<usize> = (0..n).map(|g| b.element_order(g)).collect();
    let orders_a = ord_a.clone();
    let orders_b = ord_b.clone();
    ord_a.sort_unstable();
    ord_b.sort_unstable();
    if ord_a != ord_b {
        return false;
    }
    // pick a small generating set of `a` greedily
    let mut gens: Vec<usize> = Vec::new();
    let mut span = Subgroup::trivial();
    for g in 0..n {
        if !span.contains(g) {
            gens.push(g);
            let mut gg = span.elements().to_vec();
            gg.push(g);
            span = Subgroup::generated_by(a, &gg);
            if span.order() == n {
                break;
            }
        }
    }

    fn extend(
        a: &FiniteGroup,
        b: &FiniteGroup,
        gens: &[usize],
        images: &mut Vec<usize>,
        orders_a: &[usize],
        orders_b: &[usize],
    ) -> bool {
        if images.len() == gens.len() {
            // build the full map by closure and verify the homomorphism
            let n = a.order();
            let mut map = vec![usize::MAX; n];
            map[0] = 0;
            let mut frontier = vec![0usize];
            while let Some(x) = frontier.pop() {
                for (k, &g) in gens.iter().enumerate() {
                    let xa = a.mul(x, g);
                    let xb = b.mul(map[x], images[k]);
                    if map[xa] == usize::MAX {
                        map[xa] = xb;
                        frontier.push(xa);
                    } else if map[xa] != xb {
                        return false;
                    }
                }
            }
            if map.iter().any(|&m| m == usize::MAX) {
                return false;
            }
            let mut hit = vec![false; n];
            for &m in &map {
                if hit[m] {
                    return false;
                }
                hit[m] = true;
            }
            return (0..n)
                .all(|x| (0..n).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
        }
        let g = gens[images.len()];
        for h in 0..b.order() {
            if orders_b[h] != orders_a[g] {
                continue;
            }
            images.push(h);
            if extend(a, b, gens, images, orders_a, orders_b) {
                return true;
            }
            images.pop();
        }
        false
    }

    let mut images = Vec::new();
    extend(a, b, &gens, &mut images, &orders_a, &orders_b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::s3().unwrap()
    }

    fn d4() -> FiniteGroup {
        FiniteGroup::d4().unwrap()
    }

    #[test]
    fn z2xz2_has_five_subgroups() {
        let g = FiniteGroup::preset("Z2xZ2").unwrap();
        let subs = subgroups(&g);
        assert_eq!(subs.len(), 5);
        let orders: Vec<usize> = subs.iter().map(|s| s.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 4]);
    }

    #[test]
    fn subgroup_list_closed_under_conjugation() {
        for g in [s3(), d4()] {
            let subs = subgroups(&g);
            for h in &subs {
                for x in g.elements() {
                    let c = h.conjugate(&g, x);
                    assert!(subs.contains(&c));
                }
            }
        }
    }

    #[test]
    fn d4_normal_subgroups() {
        let g = d4();
        let whole = Subgroup::whole(&g);
        let normals = normal_subgroups_in(&g, &whole);
        // {e}, Z(D4)={e,r²}, <r>, two D2s, D4 itself
        assert_eq!(normals.len(), 6);
        assert!(normals.iter().any(|n| n.elements() == [0, 2]));
        assert!(normals.iter().any(|n| n.elements() == [0, 1, 2, 3]));
    }

    #[test]
    fn trivial_subgroup_normals() {
        let g = s3();
        let t = Subgroup::trivial();
        let normals = normal_subgroups_in(&g, &t);
        assert_eq!(normals.len(), 1);
        assert_eq!(normals[0].order(), 1);
    }

    #[test]
    fn s3_z3_has_two_cosets() {
        let g = s3();
        let z3 = Subgroup::new(&g, vec![0, 1, 2]).unwrap();
        let dec = cosets(&g, &z3, CosetSide::Left);
        assert_eq!(dec.count(), 2);
        assert_eq!(dec.representatives[0], 0);
        // partition check
        let mut total: Vec<usize> = dec.cosets.iter().flatten().copied().collect();
        total.sort_unstable();
        assert_eq!(total, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn d4_order2_subgroup_has_four_left_cosets() {
        let g = d4();
        let h = Subgroup::new(&g, vec![0, 4]).unwrap();
        assert_eq!(cosets(&g, &h, CosetSide::Left).count(), 4);
    }

    #[test]
    fn trivial_double_cosets_are_singletons() {
        let g = s3();
        let t = Subgroup::trivial();
        let dec = double_cosets(&g, &t, &t);
        assert_eq!(dec.count(), 6);
    }

    #[test]
    fn quotient_d4_by_center_is_klein() {
        let g = d4();
        let m = Subgroup::whole(&g);
        let n = Subgroup::new(&g, vec![0, 2]).unwrap();
        let q = QuotientGroup::new(&g, &m, &n).unwrap();
        assert_eq!(q.order(), 4);
        let klein = FiniteGroup::preset("Z2xZ2").unwrap();
        assert!(are_isomorphic(&q.group, &klein));
        assert!(!are_isomorphic(&q.group, &FiniteGroup::preset("Z4").unwrap()));
    }

    #[test]
    fn quotient_whole_by_itself_is_trivial() {
        let g = s3();
        let m = Subgroup::whole(&g);
        let q = QuotientGroup::new(&g, &m, &m).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn quotient_d4_by_rotations_is_z2() {
        let g = d4();
        let m = Subgroup::whole(&g);
        let n = Subgroup::new(&g, vec![0, 1, 2, 3]).unwrap();
        let q = QuotientGroup::new(&g, &m, &n).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn non_normal_quotient_rejected() {
        let g = s3();
        let m = Subgroup::whole(&g);
        let n = Subgroup::new(&g, vec![0, 3]).unwrap(); // {e, σ} not normal in S3
        assert!(matches!(QuotientGroup::new(&g, &m, &n), Err(Error::NotNormal)));
    }

    #[test]
    fn projection_is_homomorphism() {
        let g = d4();
        let m = Subgroup::whole(&g);
        let n = Subgroup::new(&g, vec![0, 2]).unwrap();
        let q = QuotientGroup::new(&g, &m, &n).unwrap();
        for a in g.elements() {
            for b in g.elements() {
                let lhs = q.project(g.mul(a, b)).unwrap();
                let rhs = q.group.mul(q.project(a).unwrap(), q.project(b).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }
}
