//! Word-sized prime-field kernels for the exhaustive searches: automorphism
//! enumeration, generator-image isomorphism search and canonical forms.
//!
//! Everything here mirrors a generic routine elsewhere in the crate but works
//! on `u64` residues, which keeps the `p^n` loops fast.

use rayon::prelude::*;

use crate::algebra::Algebra;
use crate::morphism::Word;
use crate::scalar::{FieldSpec, Scalar};

pub fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "{a} is not invertible mod {p}");
    t.rem_euclid(p as i128) as u64
}

/// Structure constants as residues mod `p`; index `(i*n + j)*n + k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpAlgebra {
    pub p: u64,
    pub n: usize,
    pub sc: Vec<u64>,
}

impl FpAlgebra {
    pub fn from_algebra(a: &Algebra) -> Option<Self> {
        let p = a.field().modulus()?;
        // keeps `x + y * z` below 2^64 for residues x, y, z
        if p >= 1 << 31 {
            return None;
        }
        let n = a.dim();
        let mut sc = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                sc.extend(a.product(i, j).iter().map(|c| c.residue().expect("prime field")));
            }
        }
        Some(FpAlgebra { p, n, sc })
    }

    pub fn to_algebra(&self) -> Algebra {
        let field = FieldSpec::Prime(self.p);
        let mut a = Algebra::zero(field, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let c = self.sc[(i * self.n + j) * self.n + k];
                    if c != 0 {
                        a.set_coeff(i, j, k, Scalar::from_i64(field, c as i64));
                    }
                }
            }
        }
        a
    }

    pub fn product(&self, i: usize, j: usize) -> &[u64] {
        let s = (i * self.n + j) * self.n;
        &self.sc[s..s + self.n]
    }

    pub fn mul_into(&self, x: &[u64], y: &[u64], out: &mut [u64]) {
        let (n, p) = (self.n, self.p);
        out.iter_mut().for_each(|o| *o = 0);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = xi * yj % p;
                let row = &self.sc[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, &s) in out.iter_mut().zip(row) {
                    if s != 0 {
                        *o = (*o + c * s) % p;
                    }
                }
            }
        }
    }

    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.n];
        self.mul_into(x, y, &mut out);
        out
    }

    /// Echelon form of `A^2`.
    pub fn square(&self) -> Echelon {
        let mut e = Echelon::new(self.p, self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                e.insert(self.product(i, j).to_vec());
            }
        }
        e
    }
}

/// Incrementally maintained reduced echelon basis over GF(p).
#[derive(Debug, Clone)]
pub struct Echelon {
    p: u64,
    n: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u64, n: usize) -> Self {
        Echelon { p, n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [u64]) {
        let p = self.p;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c != 0 {
                let f = p - c;
                for (x, &r) in v.iter_mut().zip(row) {
                    if r != 0 {
                        *x = (*x + f * r) % p;
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` if independent; returns whether it was.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let p = self.p;
        let inv = inv_mod(v[pc], p);
        v.iter_mut().for_each(|x| *x = *x * inv % p);
        for row in &mut self.rows {
            let c = row[pc];
            if c != 0 {
                let f = p - c;
                for (x, &r) in row.iter_mut().zip(&v) {
                    if r != 0 {
                        *x = (*x + f * r) % p;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(at, pc);
        self.rows.insert(at, v);
        true
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn ambient(&self) -> usize {
        self.n
    }
}

/// Inverse of a square matrix (row-major) over GF(p).
pub fn invert(m: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for c in 0..n {
        let sel = (c..n).find(|&r| a[r][c] != 0)?;
        a.swap(c, sel);
        let inv = inv_mod(a[c][c], p);
        a[c].iter_mut().for_each(|x| *x = *x * inv % p);
        let pivot = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != c && row[c] != 0 {
                let f = p - row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + f * y) % p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// `i`-th vector of `GF(p)^n` in lexicographic order.
pub fn vector_at(mut index: u64, p: u64, n: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    for slot in v.iter_mut().rev() {
        *slot = index % p;
        index /= p;
    }
    v
}

/// Breadth-first word basis generated by `v`: degree by degree, left degree
/// ascending, left factor then right factor in acceptance order; a product is
/// accepted when independent of everything accepted before. Returns the words
/// and their vectors, or `None` if `v` does not generate `A`.
pub fn word_basis(a: &FpAlgebra, v: &[u64]) -> Option<(Vec<Word>, Vec<Vec<u64>>)> {
    let n = a.n;
    let mut ech = Echelon::new(a.p, n);
    if n == 0 || !ech.insert(v.to_vec()) {
        return None;
    }
    let mut words = vec![Word::Generator];
    let mut vecs = vec![v.to_vec()];
    let mut degree = vec![1usize];
    let mut buf = vec![0; n];
    let mut d = 2;
    while vecs.len() < n && d <= n {
        let count = vecs.len();
        'outer: for left_deg in 1..d {
            for u in 0..count {
                if degree[u] != left_deg {
                    continue;
                }
                for w in 0..count {
                    if degree[w] != d - left_deg {
                        continue;
                    }
                    a.mul_into(&vecs[u], &vecs[w], &mut buf);
                    if ech.insert(buf.clone()) {
                        words.push(Word::Product(u, w));
                        vecs.push(buf.clone());
                        degree.push(d);
                        if vecs.len() == n {
                            break 'outer;
                        }
                    }
                }
            }
        }
        d += 1;
    }
    (vecs.len() == n).then_some((words, vecs))
}

/// Precomputed data for mapping a one-generated algebra into others by
/// choosing the image of its generator.
#[derive(Debug, Clone)]
pub struct GeneratorPlan {
    pub p: u64,
    pub generator: Vec<u64>,
    pub words: Vec<Word>,
    /// `W^{-1}` where the columns of `W` are the word-basis vectors.
    pub winv: Vec<Vec<u64>>,
    square: Echelon,
}

impl GeneratorPlan {
    /// Uses the first standard basis vector outside `A^2` as generator.
    pub fn new(a: &FpAlgebra) -> Option<Self> {
        let square = a.square();
        let g = (0..a.n).find(|&i| {
            let mut e = vec![0; a.n];
            e[i] = 1;
            !square.contains(&e)
        })?;
        let mut gen = vec![0; a.n];
        gen[g] = 1;
        let (words, vecs) = word_basis(a, &gen)?;
        let w: Vec<Vec<u64>> = (0..a.n).map(|r| vecs.iter().map(|c| c[r]).collect()).collect();
        let winv = invert(&w, a.p)?;
        Some(GeneratorPlan { p: a.p, generator: gen, words, winv, square })
    }

    /// Images of the word basis in `b` when the generator goes to `v`.
    pub fn images(&self, b: &FpAlgebra, v: &[u64]) -> Vec<Vec<u64>> {
        let mut imgs: Vec<Vec<u64>> = Vec::with_capacity(self.words.len());
        for w in &self.words {
            let img = match *w {
                Word::Generator => v.to_vec(),
                Word::Product(l, r) => b.mul(&imgs[l], &imgs[r]),
            };
            imgs.push(img);
        }
        imgs
    }

    /// Matrix (row-major, `b.n x a.n`) of the linear map sending the word
    /// basis to `images`.
    pub fn matrix(&self, images: &[Vec<u64>], target_dim: usize) -> Vec<Vec<u64>> {
        let p = self.p;
        let n = self.winv.len();
        (0..target_dim)
            .map(|r| {
                (0..n)
                    .map(|c| images.iter().zip(&self.winv).fold(0, |acc, (img, wrow)| (acc + img[r] * wrow[c]) % p))
                    .collect()
            })
            .collect()
    }

    pub fn in_square(&self, v: &[u64]) -> bool {
        self.square.contains(v)
    }
}

/// Column `i` of a row-major matrix.
fn column(m: &[Vec<u64>], i: usize) -> Vec<u64> {
    m.iter().map(|r| r[i]).collect()
}

/// Whether `phi` (row-major, `b.n x a.n`) is multiplicative on basis pairs.
pub fn is_homomorphism(a: &FpAlgebra, b: &FpAlgebra, phi: &[Vec<u64>]) -> bool {
    let p = a.p;
    let cols: Vec<Vec<u64>> = (0..a.n).map(|i| column(phi, i)).collect();
    let mut lhs = vec![0; b.n];
    let mut rhs = vec![0; b.n];
    for i in 0..a.n {
        for j in 0..a.n {
            b.mul_into(&cols[i], &cols[j], &mut lhs);
            rhs.iter_mut().for_each(|x| *x = 0);
            for (k, &c) in a.product(i, j).iter().enumerate() {
                if c != 0 {
                    for (x, &y) in rhs.iter_mut().zip(&cols[k]) {
                        *x = (*x + c * y) % p;
                    }
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// The homomorphism determined by sending the generator to `v`, if the
/// induced linear map is one.
pub fn extend(plan: &GeneratorPlan, a: &FpAlgebra, b: &FpAlgebra, v: &[u64]) -> Option<Vec<Vec<u64>>> {
    let imgs = plan.images(b, v);
    let phi = plan.matrix(&imgs, b.n);
    is_homomorphism(a, b, &phi).then_some(phi)
}

/// Bijective homomorphism determined by `v`, if any. Requires equal dims.
pub fn extend_bijective(plan: &GeneratorPlan, a: &FpAlgebra, b: &FpAlgebra, v: &[u64]) -> Option<Vec<Vec<u64>>> {
    let imgs = plan.images(b, v);
    let mut ech = Echelon::new(b.p, b.n);
    if !imgs.iter().all(|x| ech.insert(x.clone())) {
        return None;
    }
    let phi = plan.matrix(&imgs, b.n);
    is_homomorphism(a, b, &phi).then_some(phi)
}

fn candidate_count(p: u64, n: usize) -> u64 {
    p.checked_pow(n as u32).unwrap_or(u64::MAX)
}

/// All automorphisms, in lexicographic order of the generator image.
pub fn automorphisms(a: &FpAlgebra) -> Option<Vec<Vec<Vec<u64>>>> {
    let plan = GeneratorPlan::new(a)?;
    let total = candidate_count(a.p, a.n);
    let found: Vec<(u64, Vec<Vec<u64>>)> = (0..total)
        .into_par_iter()
        .filter_map(|idx| {
            let v = vector_at(idx, a.p, a.n);
            if plan.in_square(&v) {
                return None;
            }
            extend_bijective(&plan, a, a, &v).map(|m| (idx, m))
        })
        .collect();
    Some(found.into_iter().map(|(_, m)| m).collect())
}

/// An isomorphism `a -> b` found by trying every generator image, if any.
pub fn find_isomorphism(a: &FpAlgebra, b: &FpAlgebra) -> Option<Vec<Vec<u64>>> {
    if a.n != b.n || a.p != b.p {
        return None;
    }
    let plan = GeneratorPlan::new(a)?;
    let b_square = b.square();
    if b_square.rank() != plan.square.rank() {
        return None;
    }
    (0..candidate_count(b.p, b.n)).into_par_iter().find_map_first(|idx| {
        let v = vector_at(idx, b.p, b.n);
        if b_square.contains(&v) {
            return None;
        }
        extend_bijective(&plan, a, b, &v)
    })
}

/// Canonical form under change of basis: the lexicographically least
/// multiplication table among all word bases generated by vectors outside
/// `A^2`. Two one-generated algebras are isomorphic iff their canonical
/// tables agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    pub table: Vec<u64>,
    /// Columns of the basis realizing the table (row-major matrix).
    pub basis: Vec<Vec<u64>>,
}

fn table_in_basis(a: &FpAlgebra, vecs: &[Vec<u64>], best: Option<&[u64]>) -> Option<Vec<u64>> {
    let n = a.n;
    let p = a.p;
    let w: Vec<Vec<u64>> = (0..n).map(|r| vecs.iter().map(|c| c[r]).collect()).collect();
    let winv = invert(&w, p).expect("word basis is a basis");
    let mut table = Vec::with_capacity(n * n * n);
    let mut buf = vec![0; n];
    let mut still_equal = best.is_some();
    for i in 0..n {
        for j in 0..n {
            a.mul_into(&vecs[i], &vecs[j], &mut buf);
            for row in &winv {
                let c = row.iter().zip(&buf).fold(0, |acc, (x, y)| (acc + x * y) % p);
                if still_equal {
                    let b = best.expect("set")[table.len()];
                    if c > b {
                        return None;
                    }
                    if c < b {
                        still_equal = false;
                    }
                }
                table.push(c);
            }
        }
    }
    if still_equal {
        // equal to the best so far; keep the earlier one
        return None;
    }
    Some(table)
}

pub fn canonical_form(a: &FpAlgebra) -> Option<CanonicalForm> {
    let square = a.square();
    if a.n == 0 || square.rank() + 1 != a.n {
        return None;
    }
    let total = candidate_count(a.p, a.n);
    let chunk = (a.p.pow((a.n as u32).saturating_sub(1))).max(1);
    let chunks = total.div_ceil(chunk);
    let partial: Vec<Option<CanonicalForm>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut best: Option<CanonicalForm> = None;
            for idx in c * chunk..((c + 1) * chunk).min(total) {
                let v = vector_at(idx, a.p, a.n);
                if square.contains(&v) {
                    continue;
                }
                let (_, vecs) = word_basis(a, &v).expect("vectors outside A^2 generate");
                if let Some(t) = table_in_basis(a, &vecs, best.as_ref().map(|b| b.table.as_slice())) {
                    let basis = (0..a.n).map(|r| vecs.iter().map(|col| col[r]).collect()).collect();
                    best = Some(CanonicalForm { table: t, basis });
                }
            }
            best
        })
        .collect();
    partial.into_iter().flatten().reduce(|x, y| if y.table < x.table { y } else { x })
}

/// Matrix product over GF(p).
pub fn mat_mul(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| (0..m).map(|c| row.iter().zip(b).fold(0, |acc, (x, brow)| (acc + x * brow[c]) % p)).collect())
        .collect()
}

pub fn to_scalar_matrix(m: &[Vec<u64>], p: u64) -> Vec<Vec<Scalar>> {
    let field = FieldSpec::Prime(p);
    m.iter().map(|r| r.iter().map(|&x| Scalar::from_i64(field, x as i64)).collect()).collect()
}

pub fn from_scalar_matrix(m: &[Vec<Scalar>]) -> Vec<Vec<u64>> {
    m.iter().map(|r| r.iter().map(|x| x.residue().expect("prime field")).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(a: &Algebra) -> FpAlgebra {
        FpAlgebra::from_algebra(a).unwrap()
    }

    #[test]
    fn echelon_insert() {
        let mut e = Echelon::new(5, 3);
        assert!(e.insert(vec![1, 2, 0]));
        assert!(e.insert(vec![2, 4, 1]));
        assert!(!e.insert(vec![3, 1, 4]));
        assert_eq!(e.pivots(), &[0, 2]);
        assert!(e.contains(&[0, 0, 3]));
        assert!(!e.contains(&[0, 1, 0]));
    }

    #[test]
    fn inverse_mod_p() {
        let m = vec![vec![1, 2], vec![3, 4]];
        let inv = invert(&m, 7).unwrap();
        assert_eq!(mat_mul(&m, &inv, 7), vec![vec![1, 0], vec![0, 1]]);
        assert!(invert(&[vec![1, 2], vec![2, 4]], 7).is_none());
    }

    #[test]
    fn chain_word_basis() {
        let a = Algebra::from_int_table(FieldSpec::Prime(3), 4, &[(1, 1, 1, 2), (2, 1, 1, 3), (3, 1, 1, 4)]);
        let (words, vecs) = word_basis(&fp(&a), &[1, 0, 0, 0]).unwrap();
        assert_eq!(words, vec![Word::Generator, Word::Product(0, 0), Word::Product(1, 0), Word::Product(2, 0)]);
        assert_eq!(vecs[3], vec![0, 0, 0, 1]);
        assert!(word_basis(&fp(&a), &[0, 1, 0, 0]).is_none());
    }

    #[test]
    fn canonical_forms_detect_relabeling() {
        let f = FieldSpec::Prime(5);
        let a = Algebra::from_int_table(f, 3, &[(1, 1, 1, 2), (2, 1, 1, 3)]);
        // same algebra with e2 and e3 swapped and e1 scaled
        let b = Algebra::from_int_table(f, 3, &[(1, 1, 4, 3), (3, 1, 3, 2)]);
        let c = Algebra::from_int_table(f, 3, &[(1, 1, 1, 2), (1, 2, 1, 3)]);
        let (ca, cb, cc) = (canonical_form(&fp(&a)), canonical_form(&fp(&b)), canonical_form(&fp(&c)));
        assert_eq!(ca.as_ref().unwrap().table, cb.as_ref().unwrap().table);
        assert_ne!(ca.unwrap().table, cc.unwrap().table);
        assert!(find_isomorphism(&fp(&a), &fp(&b)).is_some());
        assert!(find_isomorphism(&fp(&a), &fp(&c)).is_none());
    }
}
