//! Complex character tables of small finite groups.
//!
//! The solver diagonalizes a random nonnegative-integer combination of the
//! class-sum matrices. In the basis rescaled by sqrt(class size) the family
//! of class-sum matrices is closed under transposition, so the combination
//! is a normal matrix; its Hermitian and anti-Hermitian parts are
//! diagonalized by a cyclic Jacobi sweep, and any residual degeneracy is
//! split off with further members of the family. Runs are seeded and retried
//! with fresh weights if the spectrum groups poorly.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::group::{ConjugacyClass, FiniteGroup};

/// Tolerance for treating a floating-point value as an exact integer.
pub const INT_RESIDUAL_TOL: f64 = 1e-6;
/// Tolerance for character orthogonality checks.
pub const ORTHO_TOL: f64 = 1e-8;

/// The table of irreducible complex characters of a group.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub classes: Vec<ConjugacyClass>,
    /// element -> class index
    pub class_of: Vec<usize>,
    /// chi[irrep][class]
    pub chi: Vec<Vec<Complex64>>,
    pub dims: Vec<usize>,
}

impl CharacterTable {
    pub fn num_irreps(&self) -> usize {
        self.chi.len()
    }

    /// Character value of an irrep at a group element.
    pub fn value(&self, irrep: usize, element: usize) -> Complex64 {
        self.chi[irrep][self.class_of[element]]
    }

    pub fn dim(&self, irrep: usize) -> usize {
        self.dims[irrep]
    }
}

type CMat = Vec<Vec<Complex64>>;

fn cmat_zero(n: usize) -> CMat {
    vec![vec![Complex64::new(0.0, 0.0); n]; n]
}

/// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
/// Returns (eigenvalues, columns-as-eigenvectors).
fn jacobi_hermitian(mut a: CMat) -> (Vec<f64>, CMat) {
    let n = a.len();
    let mut v = cmat_zero(n);
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }
    let off = |a: &CMat| -> f64 {
        let mut s = 0.0;
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    s += a[p][q].norm_sqr();
                }
            }
        }
        s
    };
    for _sweep in 0..100 {
        if off(&a) < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq.norm() < 1e-15 {
                    continue;
                }
                let app = a[p][p].re;
                let aqq = a[q][q].re;
                let phase = apq / apq.norm();
                let tau = (aqq - app) / (2.0 * apq.norm());
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // rotation U: U[p][p]=c, U[p][q]=-s*phase, U[q][p]=s*conj(phase), U[q][q]=c
                let upp = Complex64::new(c, 0.0);
                let upq = -phase * s;
                let uqp = phase.conj() * s;
                let uqq = Complex64::new(c, 0.0);
                // A <- U^dagger A U
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = akp * upp + akq * uqp;
                    a[k][q] = akp * upq + akq * uqq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = upp.conj() * apk + uqp.conj() * aqk;
                    a[q][k] = upq.conj() * apk + uqq.conj() * aqk;
                }
                for k in 0..n {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = vkp * upp + vkq * uqp;
                    v[k][q] = vkp * upq + vkq * uqq;
                }
            }
        }
    }
    let eigs: Vec<f64> = (0..n).map(|i| a[i][i].re).collect();
    (eigs, v)
}

/// Class multiplication structure constants a_{ij}^k: the number of ways
/// an element of class k factors as (element of class i) * (element of
/// class j).
fn structure_constants(g: &FiniteGroup, classes: &[ConjugacyClass], class_of: &[usize]) -> Vec<Vec<Vec<f64>>> {
    let k = classes.len();
    let mut a = vec![vec![vec![0.0f64; k]; k]; k];
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate() {
            // count products landing in each class, then divide by the
            // class size to get a_{ij}^k
            for &x in &ci.elements {
                for &y in &cj.elements {
                    a[i][j][class_of[g.mul(x, y)]] += 1.0;
                }
            }
            for (kk, ck) in classes.iter().enumerate() {
                a[i][j][kk] /= ck.size() as f64;
            }
        }
    }
    a
}

struct Splitter {
    /// Matrices spanning the (transpose-closed) commutative algebra, in the
    /// sqrt-class-size rescaled basis.
    rescaled: Vec<CMat>,
}

impl Splitter {
    /// Restriction of `m` to the subspace spanned by (orthonormal) columns.
    fn restrict(m: &CMat, basis: &[Vec<Complex64>]) -> CMat {
        let d = basis.len();
        let n = m.len();
        let mut out = cmat_zero(d);
        for (col, bcol) in basis.iter().enumerate() {
            // m * bcol
            let mut mb = vec![Complex64::new(0.0, 0.0); n];
            for r in 0..n {
                let mut acc = Complex64::new(0.0, 0.0);
                for c in 0..n {
                    acc += m[r][c] * bcol[c];
                }
                mb[r] = acc;
            }
            for (row, brow) in basis.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for r in 0..n {
                    acc += brow[r].conj() * mb[r];
                }
                out[row][col] = acc;
            }
        }
        out
    }

    /// Splits `subspace` into eigenspaces of the Hermitian operator `h`
    /// (given in ambient coordinates).
    fn split_by(&self, subspaces: Vec<Vec<Vec<Complex64>>>, h: &CMat, tol: f64) -> Vec<Vec<Vec<Complex64>>> {
        let mut out = Vec::new();
        for basis in subspaces {
            if basis.len() == 1 {
                out.push(basis);
                continue;
            }
            let r = Self::restrict(h, &basis);
            let (eigs, vecs) = jacobi_hermitian(r);
            let d = basis.len();
            let n = basis[0].len();
            // group eigenvalues
            let mut order: Vec<usize> = (0..d).collect();
            order.sort_by(|&a, &b| eigs[a].partial_cmp(&eigs[b]).unwrap());
            let mut groups: Vec<Vec<usize>> = Vec::new();
            for &i in &order {
                match groups.last_mut() {
                    Some(grp) if (eigs[grp[0]] - eigs[i]).abs() < tol => grp.push(i),
                    _ => groups.push(vec![i]),
                }
            }
            for grp in groups {
                let mut newbasis = Vec::new();
                for &col in &grp {
                    let mut vec_ambient = vec![Complex64::new(0.0, 0.0); n];
                    for (bi, bvec) in basis.iter().enumerate() {
                        for r in 0..n {
                            vec_ambient[r] += bvec[r] * vecs[bi][col];
                        }
                    }
                    newbasis.push(vec_ambient);
                }
                out.push(newbasis);
            }
        }
        out
    }
}

/// Computes the character table with the default seed.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    character_table_seeded(g, 0x5eed)
}

pub fn character_table_seeded(g: &FiniteGroup, seed: u64) -> Result<CharacterTable> {
    let classes = g.conjugacy_classes();
    let class_of = g.class_of(&classes);
    let k = classes.len();
    let n_g = g.order() as f64;
    let a = structure_constants(g, &classes, &class_of);

    // N_i with (N_i)_{jk} = a_{ij}^k, rescaled to B_i = D^{-1/2} N_i D^{1/2}
    let mut rescaled: Vec<CMat> = Vec::with_capacity(k);
    for i in 0..k {
        let mut b = cmat_zero(k);
        for j in 0..k {
            for kk in 0..k {
                let scale = (classes[kk].size() as f64 / classes[j].size() as f64).sqrt();
                b[j][kk] = Complex64::new(a[i][j][kk] * scale, 0.0);
            }
        }
        rescaled.push(b);
    }
    let splitter = Splitter { rescaled };

    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut last_residual = f64::INFINITY;
    for _retry in 0..8 {
        // random nonnegative-integer combination of the class-sum matrices
        let weights: Vec<f64> = (0..k).map(|_| rng.gen_range(1..64) as f64).collect();
        let mut combo = cmat_zero(k);
        for (i, b) in splitter.rescaled.iter().enumerate() {
            for r in 0..k {
                for c in 0..k {
                    combo[r][c] += b[r][c] * weights[i];
                }
            }
        }
        // Hermitian and anti-Hermitian parts (combo is real, so these are
        // the symmetric part and -i times the antisymmetric part)
        let mut h1 = cmat_zero(k);
        let mut h2 = cmat_zero(k);
        for r in 0..k {
            for c in 0..k {
                h1[r][c] = (combo[r][c] + combo[c][r].conj()) * 0.5;
                h2[r][c] = (combo[r][c] - combo[c][r].conj()) * Complex64::new(0.0, -0.5);
            }
        }

        let mut id_basis: Vec<Vec<Vec<Complex64>>> = vec![(0..k)
            .map(|i| {
                let mut v = vec![Complex64::new(0.0, 0.0); k];
                v[i] = Complex64::new(1.0, 0.0);
                v
            })
            .collect()];
        id_basis = splitter.split_by(id_basis, &h1, 1e-7);
        id_basis = splitter.split_by(id_basis, &h2, 1e-7);
        // finish splitting any residual degeneracy with individual members
        for b in &splitter.rescaled {
            if id_basis.iter().all(|s| s.len() == 1) {
                break;
            }
            let mut hb = cmat_zero(k);
            let mut ab = cmat_zero(k);
            for r in 0..k {
                for c in 0..k {
                    hb[r][c] = (b[r][c] + b[c][r].conj()) * 0.5;
                    ab[r][c] = (b[r][c] - b[c][r].conj()) * Complex64::new(0.0, -0.5);
                }
            }
            id_basis = splitter.split_by(id_basis, &hb, 1e-7);
            id_basis = splitter.split_by(id_basis, &ab, 1e-7);
        }
        if !id_basis.iter().all(|s| s.len() == 1) {
            continue; // retry with new weights
        }

        // each 1-dim space carries one irrep: recover characters
        let mut rows: Vec<(usize, Vec<Complex64>)> = Vec::new();
        let mut ok = true;
        for space in &id_basis {
            let v = &space[0];
            // omega_j = sqrt(|C_j|) * v_j / v_0  (identity class is index 0)
            if v[0].norm() < 1e-12 {
                ok = false;
                break;
            }
            let omega: Vec<Complex64> = (0..k)
                .map(|j| v[j] / v[0] * Complex64::new((classes[j].size() as f64).sqrt(), 0.0))
                .collect();
            let norm: f64 = (0..k)
                .map(|j| omega[j].norm_sqr() / classes[j].size() as f64)
                .sum();
            let dim_f = (n_g / norm).sqrt();
            let dim = dim_f.round();
            if (dim_f - dim).abs() > 1e-4 || dim < 1.0 {
                ok = false;
                break;
            }
            let chi: Vec<Complex64> = (0..k)
                .map(|j| omega[j] * dim / classes[j].size() as f64)
                .collect();
            rows.push((dim as usize, chi));
        }
        if !ok {
            continue;
        }

        // deterministic order: trivial character first, then by dimension,
        // then lexicographic on rounded character values
        let key = |row: &(usize, Vec<Complex64>)| -> (usize, Vec<(i64, i64)>) {
            let vals = row
                .1
                .iter()
                .map(|z| ((z.re * 1e6).round() as i64, (z.im * 1e6).round() as i64))
                .collect();
            (row.0, vals)
        };
        rows.sort_by(|a, b| {
            let ta = a.1.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-6);
            let tb = b.1.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-6);
            tb.cmp(&ta).then_with(|| key(a).cmp(&key(b)))
        });

        let dims: Vec<usize> = rows.iter().map(|r| r.0).collect();
        let chi: Vec<Vec<Complex64>> = rows.into_iter().map(|r| r.1).collect();
        let table = CharacterTable {
            classes: classes.clone(),
            class_of: class_of.clone(),
            chi,
            dims,
        };
        match validate_table(g, &table) {
            Ok(()) => return Ok(table),
            Err(Error::CharTableFailed { residual, .. }) => {
                last_residual = residual;
                continue;
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::CharTableFailed {
        retries: 8,
        residual: last_residual,
    })
}

fn validate_table(g: &FiniteGroup, t: &CharacterTable) -> Result<()> {
    let k = t.classes.len();
    let n = g.order() as f64;
    // sum of squared dimensions
    let sum_sq: usize = t.dims.iter().map(|d| d * d).sum();
    if sum_sq != g.order() {
        return Err(Error::CharTableFailed {
            retries: 0,
            residual: (sum_sq as f64 - n).abs(),
        });
    }
    // row orthogonality
    let mut worst: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..k {
                acc += Complex64::new(t.classes[c].size() as f64, 0.0) * t.chi[i][c]
                    * t.chi[j][c].conj();
            }
            acc /= n;
            let expect = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((acc - expect).norm());
        }
    }
    if worst > ORTHO_TOL {
        return Err(Error::CharTableFailed {
            retries: 0,
            residual: worst,
        });
    }
    // first row must be the trivial character
    if !t.chi[0]
        .iter()
        .all(|z| (z - Complex64::new(1.0, 0.0)).norm() < ORTHO_TOL)
    {
        return Err(Error::CharTableFailed {
            retries: 0,
            residual: 1.0,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn assert_close(a: Complex64, b: Complex64) {
        assert!((a - b).norm() < 1e-7, "{a} vs {b}");
    }

    #[test]
    fn jacobi_diagonalizes_random_hermitian() {
        let mut rng = ChaCha12Rng::seed_from_u64(7);
        for n in [2usize, 3, 5, 8] {
            let mut m = cmat_zero(n);
            for i in 0..n {
                m[i][i] = Complex64::new(rng.gen_range(-3.0..3.0), 0.0);
                for j in (i + 1)..n {
                    let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    m[i][j] = z;
                    m[j][i] = z.conj();
                }
            }
            let (eigs, v) = jacobi_hermitian(m.clone());
            // reconstruct M v_k = lambda_k v_k
            for kcol in 0..n {
                for r in 0..n {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for c in 0..n {
                        acc += m[r][c] * v[c][kcol];
                    }
                    assert_close(acc, v[r][kcol] * eigs[kcol]);
                }
            }
        }
    }

    #[test]
    fn s3_character_table() {
        let g = FiniteGroup::s3().unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dims, vec![1, 1, 2]);
        // trivial, sign, standard; classes ordered e, {τ,τ²}, {σ,...}
        assert_close(t.chi[1][0], Complex64::new(1.0, 0.0));
        assert_close(t.chi[1][1], Complex64::new(1.0, 0.0));
        assert_close(t.chi[1][2], Complex64::new(-1.0, 0.0));
        assert_close(t.chi[2][0], Complex64::new(2.0, 0.0));
        assert_close(t.chi[2][1], Complex64::new(-1.0, 0.0));
        assert_close(t.chi[2][2], Complex64::new(0.0, 0.0));
    }

    #[test]
    fn z3_characters_are_cube_roots() {
        let g = FiniteGroup::preset("Z3").unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dims, vec![1, 1, 1]);
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        // the three rows are h -> omega^(a*h) for a = 0, 1, 2 in some order
        let mut found = [false; 3];
        for row in &t.chi {
            for a in 0..3u32 {
                if (0..3).all(|h| (row[h] - omega.powu(a * h as u32)).norm() < 1e-8) {
                    found[a as usize] = true;
                }
            }
        }
        assert!(found.iter().all(|&f| f));
    }

    #[test]
    fn d4_has_four_linears_and_one_2d() {
        let g = FiniteGroup::d4().unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.dims, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn tables_validate_for_presets() {
        for name in ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z2xZ3", "S3", "D4", "Z2xZ2xZ2"] {
            let g = FiniteGroup::preset(name).unwrap();
            let t = character_table(&g).unwrap();
            assert_eq!(t.dims.iter().map(|d| d * d).sum::<usize>(), g.order());
        }
    }

    #[test]
    fn s3xz2_table() {
        // a nonabelian product: 6 irreps
        let g = FiniteGroup::preset("S3xZ2").unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.num_irreps(), 6);
        assert_eq!(t.dims.iter().map(|d| d * d).sum::<usize>(), 12);
    }
}
