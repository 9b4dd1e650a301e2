//! Anyons of the quantum double of a finite group.
//!
//! An anyon is a pair (conjugacy class C, irreducible character R of the
//! centralizer of a class representative); its quantum dimension is
//! |C| · dim R. Characters are evaluated on the double's basis h g* via a
//! fixed conjugator choice k_b with b = k_b a k_b⁻¹ and k_a = e.

use std::sync::Arc;

use num_complex::Complex64;

use crate::chartab::{character_table, CharacterTable, INT_RESIDUAL_TOL};
use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteGroup};
use crate::subgroup::Subgroup;

/// One anyon type of D(G).
#[derive(Debug, Clone)]
pub struct Anyon {
    /// index into the conjugacy-class list
    pub class_idx: usize,
    /// canonical class representative (smallest element index)
    pub class_rep: usize,
    /// irrep index into the centralizer's character table
    pub irrep: usize,
    pub irrep_dim: usize,
    pub quantum_dim: usize,
    pub name: String,
}

/// Conjugator choice for a conjugacy class: for each b in the class of a,
/// an element k_b with b = k_b a k_b⁻¹; k_a = e for the representative.
#[derive(Debug, Clone)]
pub struct KMap {
    /// element -> conjugator (usize::MAX outside the class)
    pub k: Vec<usize>,
}

impl KMap {
    /// Smallest-index conjugator for each class member.
    pub fn new(group: &FiniteGroup, class: &ConjugacyClass) -> KMap {
        let mut k = vec![usize::MAX; group.order()];
        for &b in &class.elements {
            k[b] = (0..group.order())
                .find(|&x| group.conj(class.rep, x) == b)
                .expect("class member must be conjugate to the representative");
        }
        debug_assert_eq!(k[class.rep], 0);
        KMap { k }
    }

    /// Alternative conjugator choice: picks the `offset`-th valid conjugator
    /// per member instead of the smallest. Used to test that characters do
    /// not depend on the choice. The representative keeps k = e.
    pub fn with_offset(group: &FiniteGroup, class: &ConjugacyClass, offset: usize) -> KMap {
        let mut k = vec![usize::MAX; group.order()];
        for &b in &class.elements {
            let all: Vec<usize> = (0..group.order())
                .filter(|&x| group.conj(class.rep, x) == b)
                .collect();
            k[b] = if b == class.rep {
                0
            } else {
                all[offset % all.len()]
            };
        }
        KMap { k }
    }
}

/// Cached anyon data for the double of one group.
#[derive(Debug, Clone)]
pub struct Double {
    pub group: Arc<FiniteGroup>,
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
    /// per class: centralizer of the representative, as a standalone group,
    /// with the local->parent map
    pub centralizers: Vec<(FiniteGroup, Vec<usize>)>,
    pub cent_tables: Vec<CharacterTable>,
    pub kmaps: Vec<KMap>,
    pub anyons: Vec<Anyon>,
}

impl Double {
    pub fn new(group: Arc<FiniteGroup>) -> Result<Double> {
        let classes = group.conjugacy_classes();
        let class_of = group.class_of(&classes);
        let mut centralizers = Vec::with_capacity(classes.len());
        let mut cent_tables = Vec::with_capacity(classes.len());
        let mut kmaps = Vec::with_capacity(classes.len());
        for class in &classes {
            let z = Subgroup::new(&group, group.centralizer_elements(class.rep))?;
            let (zg, to_parent) = z.as_group(&group)?;
            let table = character_table(&zg)?;
            centralizers.push((zg, to_parent));
            cent_tables.push(table);
            kmaps.push(KMap::new(&group, class));
        }
        let mut anyons = Vec::new();
        for (ci, class) in classes.iter().enumerate() {
            let table = &cent_tables[ci];
            for irrep in 0..table.num_irreps() {
                anyons.push(Anyon {
                    class_idx: ci,
                    class_rep: class.rep,
                    irrep,
                    irrep_dim: table.dim(irrep),
                    quantum_dim: class.size() * table.dim(irrep),
                    name: String::new(),
                });
            }
        }
        let mut d = Double {
            group,
            classes,
            class_of,
            centralizers,
            cent_tables,
            kmaps,
            anyons,
        };
        let names = crate::anyon::names::assign(&d);
        for (a, n) in d.anyons.iter_mut().zip(names) {
            a.name = n;
        }
        Ok(d)
    }

    pub fn num_anyons(&self) -> usize {
        self.anyons.len()
    }

    /// Index of the vacuum (identity class, trivial irrep).
    pub fn vacuum(&self) -> usize {
        0
    }

    pub fn anyon_by_name(&self, name: &str) -> Option<usize> {
        self.anyons.iter().position(|a| a.name == name)
    }

    /// Centralizer size of the class representative of anyon `a`.
    pub fn centralizer_order(&self, a: usize) -> usize {
        self.centralizers[self.anyons[a].class_idx].0.order()
    }

    /// Character of anyon `a` at the double-basis element h g*, using the
    /// stored conjugator choice.
    pub fn chi(&self, a: usize, h: usize, g: usize) -> Complex64 {
        self.chi_with_kmap(a, h, g, &self.kmaps[self.anyons[a].class_idx])
    }

    /// Same, with an explicit conjugator choice (for independence tests).
    pub fn chi_with_kmap(&self, a: usize, h: usize, g: usize, kmap: &KMap) -> Complex64 {
        let anyon = &self.anyons[a];
        let zero = Complex64::new(0.0, 0.0);
        if self.class_of[g] != anyon.class_idx {
            return zero;
        }
        let gr = &self.group;
        if gr.mul(g, h) != gr.mul(h, g) {
            return zero;
        }
        let kg = kmap.k[g];
        let conj_h = gr.conj(h, gr.inv(kg));
        let (zg, to_parent) = &self.centralizers[anyon.class_idx];
        let local = to_parent
            .iter()
            .position(|&p| p == conj_h)
            .expect("k_g^-1 h k_g must lie in the centralizer");
        let _ = zg;
        self.cent_tables[anyon.class_idx].value(anyon.irrep, local)
    }

    /// Full character table of anyon `a` over all pairs (h, g), indexed
    /// h * |G| + g.
    pub fn chi_table(&self, a: usize) -> Vec<Complex64> {
        let n = self.group.order();
        let mut out = vec![Complex64::new(0.0, 0.0); n * n];
        for h in 0..n {
            for g in 0..n {
                out[h * n + g] = self.chi(a, h, g);
            }
        }
        out
    }
}

/// Enumerates the anyons of D(G); one per (class, centralizer irrep) pair,
/// vacuum first, in deterministic order.
pub fn anyons(group: Arc<FiniteGroup>) -> Result<Vec<Anyon>> {
    Ok(Double::new(group)?.anyons)
}

/// Character of a single anyon at h g* (convenience wrapper over
/// [`Double::chi`]).
pub fn chi_anyon(double: &Double, a: usize, h: usize, g: usize) -> Complex64 {
    double.chi(a, h, g)
}

/// A function on the double's basis pairs (h, g), h g* with h, g in G.
#[derive(Debug, Clone)]
pub struct DoubleClassFunction {
    pub order: usize,
    /// values indexed h * order + g
    pub values: Vec<Complex64>,
}

impl DoubleClassFunction {
    pub fn from_fn(group: &FiniteGroup, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let n = group.order();
        let mut values = vec![Complex64::new(0.0, 0.0); n * n];
        for h in 0..n {
            for g in 0..n {
                values[h * n + g] = f(h, g);
            }
        }
        DoubleClassFunction { order: n, values }
    }

    pub fn value(&self, h: usize, g: usize) -> Complex64 {
        self.values[h * self.order + g]
    }

    pub fn conj(&self) -> Self {
        DoubleClassFunction {
            order: self.order,
            values: self.values.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        DoubleClassFunction {
            order: self.order,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    /// Largest deviation from invariance under simultaneous conjugation of
    /// (h, g) by every group element.
    pub fn class_function_deviation(&self, group: &FiniteGroup) -> f64 {
        let n = group.order();
        let mut worst: f64 = 0.0;
        for h in 0..n {
            for g in 0..n {
                let v = self.value(h, g);
                for x in 0..n {
                    let w = self.value(group.conj(h, x), group.conj(g, x));
                    worst = worst.max((v - w).norm());
                }
            }
        }
        worst
    }
}

/// Plain unnormalized inner product over all pairs (h, g).
pub fn inner_product(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Decomposes a class function of the double into anyon characters.
/// Returns the integer multiplicity per anyon (in `double.anyons` order).
pub fn decompose(double: &Double, f: &DoubleClassFunction) -> Result<Vec<i64>> {
    let dev = f.class_function_deviation(&double.group);
    if dev > 1e-8 {
        return Err(Error::NotAClassFunction(dev));
    }
    let mut out = Vec::with_capacity(double.num_anyons());
    for a in 0..double.num_anyons() {
        let chi = double.chi_table(a);
        let num = inner_product(&chi, &f.values);
        let den = inner_product(&chi, &chi).re;
        let m = num / den;
        let rounded = m.re.round();
        let residual = (m - Complex64::new(rounded, 0.0)).norm();
        let name = double.anyons[a].name.clone();
        if residual > INT_RESIDUAL_TOL {
            return Err(Error::NonIntegerMultiplicity {
                name,
                value: m.re,
                residual,
            });
        }
        if rounded < 0.0 {
            return Err(Error::NegativeMultiplicity {
                name,
                value: rounded,
            });
        }
        out.push(rounded as i64);
    }
    Ok(out)
}

pub(crate) mod names {
    use super::Double;
    use num_complex::Complex64;

    /// Assigns display names following the usual conventions where they
    /// exist (toric-code 1/e/m/f ladders, S3's A..H, D4's A_i..E_ij);
    /// otherwise "(classRepLabel,irrepIdx)".
    pub fn assign(d: &Double) -> Vec<String> {
        let g = &d.group;
        let n = g.order();
        if n == 1 {
            return vec!["1".to_string()];
        }
        if n == 2 {
            return toric_names(d);
        }
        if n == 3 && g.is_abelian() {
            return z3_names(d);
        }
        if g.is_abelian() && is_pair_labeled(d) {
            if let Some(names) = bilayer_names(d) {
                return names;
            }
        }
        if n == 6 && !g.is_abelian() {
            return s3_names(d);
        }
        if n == 8 && !g.is_abelian() && d.classes.len() == 5 {
            if let Some(names) = d4_names(d) {
                return names;
            }
        }
        generic_names(d)
    }

    fn generic_names(d: &Double) -> Vec<String> {
        d.anyons
            .iter()
            .map(|a| format!("({},{})", d.group.label(a.class_rep), a.irrep))
            .collect()
    }

    /// 1, e, m, f for any group of order 2.
    fn toric_names(d: &Double) -> Vec<String> {
        d.anyons
            .iter()
            .map(|a| {
                let flux = a.class_rep != 0;
                let chg = charge_sign(d, a.class_idx, a.irrep);
                match (flux, chg) {
                    (false, false) => "1",
                    (false, true) => "e",
                    (true, false) => "m",
                    (true, true) => "f",
                }
                .to_string()
            })
            .collect()
    }

    /// True when the irrep is nontrivial (for centralizer = whole abelian
    /// group of order 2: value -1 at the generator).
    fn charge_sign(d: &Double, class_idx: usize, irrep: usize) -> bool {
        let t = &d.cent_tables[class_idx];
        (0..t.classes.len()).any(|c| (t.chi[irrep][c] - Complex64::new(1.0, 0.0)).norm() > 1e-8)
    }

    /// m/m~ flux and e/e~ charge names for the cyclic group of order 3,
    /// generator = element 1.
    fn z3_names(d: &Double) -> Vec<String> {
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        d.anyons
            .iter()
            .map(|a| {
                let flux = match a.class_rep {
                    0 => "",
                    1 => "m",
                    _ => "m~",
                };
                // centralizer is the whole group; read the charge exponent
                // off the character value at element 1
                let t = &d.cent_tables[a.class_idx];
                let v = t.value(a.irrep, 1);
                let charge = if (v - Complex64::new(1.0, 0.0)).norm() < 1e-8 {
                    ""
                } else if (v - omega).norm() < 1e-8 {
                    "e"
                } else {
                    "e~"
                };
                let name = format!("{flux}{charge}");
                if name.is_empty() {
                    "1".to_string()
                } else {
                    name
                }
            })
            .collect()
    }

    fn is_pair_labeled(d: &Double) -> bool {
        d.group
            .labels()
            .iter()
            .all(|l| l.starts_with('(') && l.ends_with(')') && l.contains(','))
    }

    /// Bilayer names x y~ for direct products of two order-2 groups, read
    /// off the (a,b) element labels.
    fn bilayer_names(d: &Double) -> Option<Vec<String>> {
        let g = &d.group;
        if g.order() != 4 {
            return None;
        }
        // split labels into components; find the generators (1,0) and (0,1)
        let comp = |i: usize| -> Option<(String, String)> {
            let l = g.label(i);
            let inner = &l[1..l.len() - 1];
            let (a, b) = inner.split_once(',')?;
            Some((a.to_string(), b.to_string()))
        };
        let parts: Vec<(String, String)> = (0..4).filter_map(comp).collect();
        if parts.len() != 4 {
            return None;
        }
        let id = &parts[0];
        let gen1 = (0..4).find(|&i| parts[i].0 != id.0 && parts[i].1 == id.1)?;
        let gen2 = (0..4).find(|&i| parts[i].0 == id.0 && parts[i].1 != id.1)?;
        let names = d
            .anyons
            .iter()
            .map(|a| {
                let flux1 = parts[a.class_rep].0 != id.0;
                let flux2 = parts[a.class_rep].1 != id.1;
                let t = &d.cent_tables[a.class_idx];
                let neg = |v: Complex64| (v - Complex64::new(-1.0, 0.0)).norm() < 1e-8;
                let chg1 = neg(t.value(a.irrep, gen1));
                let chg2 = neg(t.value(a.irrep, gen2));
                let layer = |flux: bool, chg: bool| match (flux, chg) {
                    (false, false) => "",
                    (false, true) => "e",
                    (true, false) => "m",
                    (true, true) => "f",
                };
                let l1 = layer(flux1, chg1).to_string();
                let l2 = layer(flux2, chg2);
                let l2t: String = l2.chars().map(|c| format!("{c}~")).collect();
                let name = format!("{l1}{l2t}");
                if name.is_empty() {
                    "1".to_string()
                } else {
                    name
                }
            })
            .collect();
        Some(names)
    }

    /// A..H for the double of the symmetric group on three letters.
    /// Classes are recognized by size: {e}, the 2-cycle class (size 3,
    /// order-2 elements) and the 3-cycle class (size 2).
    fn s3_names(d: &Double) -> Vec<String> {
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        d.anyons
            .iter()
            .map(|a| {
                let class = &d.classes[a.class_idx];
                let t = &d.cent_tables[a.class_idx];
                match class.size() {
                    1 => match a.irrep_dim {
                        2 => "C".to_string(),
                        _ => {
                            if charge_sign(d, a.class_idx, a.irrep) {
                                "B".to_string()
                            } else {
                                "A".to_string()
                            }
                        }
                    },
                    3 => {
                        if charge_sign(d, a.class_idx, a.irrep) {
                            "E".to_string()
                        } else {
                            "D".to_string()
                        }
                    }
                    _ => {
                        // centralizer is cyclic of order 3; read off the
                        // character at its generator (local element 1)
                        let v = t.value(a.irrep, 1);
                        if (v - Complex64::new(1.0, 0.0)).norm() < 1e-8 {
                            "F".to_string()
                        } else if (v - omega).norm() < 1e-8 {
                            "G".to_string()
                        } else {
                            "H".to_string()
                        }
                    }
                }
            })
            .collect()
    }

    /// A_i, B_i, C_k, D_ij, E_ij for the double of the dihedral group of
    /// order 8.
    fn d4_names(d: &Double) -> Option<Vec<String>> {
        let g = &d.group;
        // identify the central order-2 element r² (singleton non-identity
        // class) and the rotation class [r]
        let central = d
            .classes
            .iter()
            .find(|c| c.size() == 1 && c.rep != 0)?
            .rep;
        let mut names = Vec::with_capacity(d.anyons.len());
        // the two reflection classes ordered by representative: D then E
        let refl: Vec<usize> = d
            .classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.size() == 2 && g.element_order(c.rep) == 2)
            .map(|(i, _)| i)
            .collect();
        for a in &d.anyons {
            let class = &d.classes[a.class_idx];
            let t = &d.cent_tables[a.class_idx];
            let (zg, to_parent) = &d.centralizers[a.class_idx];
            let local_of = |p: usize| to_parent.iter().position(|&x| x == p);
            let name = if class.rep == 0 || class.rep == central {
                // centralizer is the whole group: four linears + one 2-dim
                let family = if class.rep == 0 { "A" } else { "B" };
                if a.irrep_dim == 2 {
                    format!("{family}4")
                } else {
                    // linear characters: index by signs at a rotation
                    // generator r and a reflection s
                    let r = (0..g.order()).find(|&x| g.element_order(x) == 4)?;
                    let s = (0..g.order())
                        .find(|&x| g.element_order(x) == 2 && x != central)?;
                    let neg = |p: usize| {
                        (t.value(a.irrep, local_of(p).unwrap()) - Complex64::new(-1.0, 0.0))
                            .norm()
                            < 1e-8
                    };
                    let i = match (neg(r), neg(s)) {
                        (false, false) => 0,
                        (false, true) => 1,
                        (true, false) => 2,
                        (true, true) => 3,
                    };
                    format!("{family}{i}")
                }
            } else if g.element_order(class.rep) == 4 {
                // C_k: centralizer is cyclic of order 4 generated by the
                // representative; k from chi(rep) = i^k
                let v = t.value(a.irrep, local_of(class.rep)?);
                let k = ((v.arg() / (std::f64::consts::PI / 2.0)).round() as i64).rem_euclid(4);
                format!("C{k}")
            } else {
                // D_ij / E_ij: centralizer {e, r², w, wr²}; i = sign
                // exponent at r², j = sign exponent at the reflection w
                let family = if a.class_idx == refl[0] { "D" } else { "E" };
                let neg = |p: usize| {
                    (t.value(a.irrep, local_of(p).unwrap()) - Complex64::new(-1.0, 0.0)).norm()
                        < 1e-8
                };
                let i = neg(central) as usize;
                let j = neg(class.rep) as usize;
                format!("{family}{i}{j}")
            };
            names.push(name);
            let _ = zg;
        }
        Some(names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn double(name: &str) -> Double {
        Double::new(Arc::new(FiniteGroup::preset(name).unwrap())).unwrap()
    }

    #[test]
    fn s3_double_has_eight_anyons_with_table_data() {
        let d = double("S3");
        assert_eq!(d.num_anyons(), 8);
        let by_name: Vec<(&str, usize, usize)> = d
            .anyons
            .iter()
            .map(|a| (a.name.as_str(), a.quantum_dim, d.centralizer_order(0)))
            .collect();
        let _ = by_name;
        let expect: &[(&str, usize, usize)] = &[
            ("A", 1, 6),
            ("B", 1, 6),
            ("C", 2, 6),
            ("D", 3, 2),
            ("E", 3, 2),
            ("F", 2, 3),
            ("G", 2, 3),
            ("H", 2, 3),
        ];
        for &(name, dim, cent) in expect {
            let idx = d.anyon_by_name(name).unwrap_or_else(|| panic!("{name}"));
            assert_eq!(d.anyons[idx].quantum_dim, dim, "dim of {name}");
            assert_eq!(d.centralizer_order(idx), cent, "centralizer of {name}");
        }
        let total: usize = d.anyons.iter().map(|a| a.quantum_dim.pow(2)).sum();
        assert_eq!(total, 36);
    }

    #[test]
    fn d4_double_has_22_anyons() {
        let d = double("D4");
        assert_eq!(d.num_anyons(), 22);
        let total: usize = d.anyons.iter().map(|a| a.quantum_dim.pow(2)).sum();
        assert_eq!(total, 64);
        for prefix in ["A", "B"] {
            for i in 0..5 {
                assert!(d.anyon_by_name(&format!("{prefix}{i}")).is_some());
            }
        }
        for k in 0..4 {
            assert!(d.anyon_by_name(&format!("C{k}")).is_some());
        }
        for family in ["D", "E"] {
            for i in 0..2 {
                for j in 0..2 {
                    assert!(d.anyon_by_name(&format!("{family}{i}{j}")).is_some());
                }
            }
        }
    }

    #[test]
    fn trivial_group_has_single_vacuum() {
        let d = double("Z1");
        assert_eq!(d.num_anyons(), 1);
        assert_eq!(d.anyons[0].quantum_dim, 1);
        assert_eq!(d.anyons[0].name, "1");
    }

    #[test]
    fn quantum_dim_square_sum_for_presets() {
        for name in ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4"] {
            let d = double(name);
            let total: usize = d.anyons.iter().map(|a| a.quantum_dim.pow(2)).sum();
            assert_eq!(total, d.group.order().pow(2), "{name}");
        }
    }

    #[test]
    fn z2_chi_table_matches_toric_expectations() {
        let d = double("Z2");
        let one = Complex64::new(1.0, 0.0);
        let e = d.anyon_by_name("e").unwrap();
        // chi_e(h g*) = [g = identity] * sign(h)
        assert_eq!(d.chi(e, 0, 0), one);
        assert_eq!(d.chi(e, 1, 0), -one);
        assert_eq!(d.chi(e, 0, 1), Complex64::new(0.0, 0.0));
        let m = d.anyon_by_name("m").unwrap();
        assert_eq!(d.chi(m, 0, 1), one);
        assert_eq!(d.chi(m, 1, 1), one);
        let f = d.anyon_by_name("f").unwrap();
        assert_eq!(d.chi(f, 1, 1), -one);
    }

    #[test]
    fn vacuum_chi_at_identity_is_one() {
        for name in ["Z2", "S3", "D4"] {
            let d = double(name);
            assert_eq!(d.chi(0, 0, 0), Complex64::new(1.0, 0.0));
        }
    }

    #[test]
    fn s3_chi_f_is_indicator_of_rotations() {
        let d = double("S3");
        let f = d.anyon_by_name("F").unwrap();
        for h in 0..6 {
            for g in 0..6 {
                let expect = if h <= 2 && (g == 1 || g == 2) { 1.0 } else { 0.0 };
                assert!(
                    (d.chi(f, h, g) - Complex64::new(expect, 0.0)).norm() < 1e-9,
                    "chi_F({h},{g})"
                );
            }
        }
    }

    #[test]
    fn chi_is_kmap_independent() {
        for name in ["S3", "D4"] {
            let d = double(name);
            for a in 0..d.num_anyons() {
                let ci = d.anyons[a].class_idx;
                for offset in 1..4 {
                    let alt = KMap::with_offset(&d.group, &d.classes[ci], offset);
                    for h in 0..d.group.order() {
                        for g in 0..d.group.order() {
                            let x = d.chi(a, h, g);
                            let y = d.chi_with_kmap(a, h, g, &alt);
                            assert!((x - y).norm() < 1e-10);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anyon_characters_are_orthogonal() {
        for name in ["Z2", "Z3", "S3", "D4"] {
            let d = double(name);
            let n = d.group.order() as f64;
            for a in 0..d.num_anyons() {
                let ca = d.chi_table(a);
                for b in 0..d.num_anyons() {
                    let cb = d.chi_table(b);
                    let ip = inner_product(&ca, &cb);
                    let expect = if a == b { n } else { 0.0 };
                    assert!(
                        (ip - Complex64::new(expect, 0.0)).norm() < 1e-8,
                        "{name}: <{}|{}> = {ip}",
                        d.anyons[a].name,
                        d.anyons[b].name
                    );
                }
            }
        }
    }

    #[test]
    fn decompose_recovers_sums_of_characters() {
        let d = double("S3");
        let a = d.anyon_by_name("A").unwrap();
        let f = d.anyon_by_name("F").unwrap();
        let ca = d.chi_table(a);
        let cf = d.chi_table(f);
        let sum = DoubleClassFunction {
            order: 6,
            values: ca.iter().zip(&cf).map(|(x, y)| x + y).collect(),
        };
        let m = decompose(&d, &sum).unwrap();
        let mut expect = vec![0i64; 8];
        expect[a] = 1;
        expect[f] = 1;
        assert_eq!(m, expect);
    }

    #[test]
    fn decompose_rejects_non_class_functions() {
        let d = double("S3");
        let mut values = vec![Complex64::new(0.0, 0.0); 36];
        values[1 * 6 + 0] = Complex64::new(1.0, 0.0); // breaks conjugation symmetry
        let f = DoubleClassFunction { order: 6, values };
        assert!(matches!(
            decompose(&d, &f),
            Err(Error::NotAClassFunction(_))
        ));
    }
}
