//! Exact sparse linear algebra over the rationals.
//!
//! Everything is built on [`Echelon`], an incrementally maintained reduced
//! row echelon form. Rows are sparse, sorted by column, with a unit pivot in
//! front. Because the form is fully reduced, reducing a vector needs one
//! pass over its pivot entries, and inserting a new row only touches the
//! existing rows that have an entry in the new pivot column.

use std::collections::BTreeMap;
use std::hash::Hash;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::ncpoly::NCPoly;
use crate::rational::Rat;
use crate::word::{Alphabet, Word};

/// Sparse vector: strictly increasing column indices, no zero entries.
pub type SparseVec = Vec<(usize, Rat)>;

/// `a + c·b` for sparse vectors.
pub fn axpy(a: &[(usize, Rat)], c: &Rat, b: &[(usize, Rat)]) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale_vec(v: &[(usize, Rat)], c: &Rat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(k, x)| (*k, x * c)).collect()
}

/// Builds a sparse vector from unsorted entries, summing duplicates.
pub fn sparse_from_entries(entries: impl IntoIterator<Item = (usize, Rat)>) -> SparseVec {
    let mut m: BTreeMap<usize, Rat> = BTreeMap::new();
    for (k, v) in entries {
        *m.entry(k).or_insert(Rat::ZERO) += &v;
    }
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub fn dense_to_sparse(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k, x.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &[(usize, Rat)], len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::ZERO; len];
    for (k, x) in v {
        out[*k] = x.clone();
    }
    out
}

/// A subspace of `Q^cols` kept in reduced row echelon form.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    cols: usize,
    /// pivot column -> row with entry 1 at the pivot and 0 at other pivots.
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(cols: usize) -> Echelon {
        Echelon {
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// The remainder of `v` modulo the row space.
    pub fn reduce(&self, v: &[(usize, Rat)]) -> SparseVec {
        let mut out: SparseVec = v.to_vec();
        for (k, c) in v {
            if let Some(row) = self.rows.get(k) {
                // The pivot entry of `out` at `k` is still `c`: earlier
                // subtractions only touch non-pivot columns.
                out = axpy(&out, &-c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[(usize, Rat)]) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the spanning set. Returns true when the rank grew.
    pub fn insert(&mut self, v: &[(usize, Rat)]) -> bool {
        let r = self.reduce(v);
        let Some((p, lead)) = r.first().cloned() else {
            return false;
        };
        let r = scale_vec(&r, &lead.recip());
        for row in self.rows.values_mut() {
            if let Ok(pos) = row.binary_search_by_key(&p, |e| e.0) {
                let c = row[pos].1.clone();
                *row = axpy(row, &-c, &r);
            }
        }
        self.rows.insert(p, r);
        true
    }

    /// Basis of `{x : row·x = 0 for every row}`, one vector per free column.
    pub fn null_space(&self) -> Vec<SparseVec> {
        let mut by_free: BTreeMap<usize, Vec<(usize, Rat)>> = BTreeMap::new();
        for f in 0..self.cols {
            if !self.rows.contains_key(&f) {
                by_free.insert(f, vec![(f, Rat::ONE)]);
            }
        }
        for (&p, row) in &self.rows {
            for (k, c) in row.iter().skip(1) {
                if let Some(v) = by_free.get_mut(k) {
                    v.push((p, -c));
                }
            }
        }
        by_free
            .into_values()
            .map(|mut v| {
                v.sort_by_key(|e| e.0);
                v
            })
            .collect()
    }
}

/// A rows × cols rational matrix with sparse rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> QMatrix {
        QMatrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> QMatrix {
        QMatrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Rat::ONE)]).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Rat>]) -> QMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        QMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| dense_to_sparse(r)).collect(),
        }
    }

    pub fn from_ints(rows: &[&[i64]]) -> QMatrix {
        let dense: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
            .collect();
        QMatrix::from_dense(&dense)
    }

    pub fn from_sparse_rows(cols: usize, data: Vec<SparseVec>) -> QMatrix {
        debug_assert!(data.iter().all(|r| r.iter().all(|(k, _)| *k < cols)));
        QMatrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(pos) => self.data[i][pos].1.clone(),
            Err(_) => Rat::ZERO,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        self.data
            .iter()
            .map(|r| sparse_to_dense(r, self.cols))
            .collect()
    }

    pub fn mul_vec(&self, x: &[(usize, Rat)]) -> SparseVec {
        let dense_x = sparse_to_dense(x, self.cols);
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, r)| {
                let s: Rat = r.iter().map(|(k, c)| c * &dense_x[*k]).sum();
                (!s.is_zero()).then_some((i, s))
            })
            .collect()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for r in &self.data {
            if e.is_full() {
                break;
            }
            e.insert(r);
        }
        e
    }

    /// Reduced row echelon form; zero rows are dropped.
    pub fn rref(&self) -> QMatrix {
        let e = self.echelon();
        QMatrix::from_sparse_rows(self.cols, e.rows().cloned().collect())
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Basis of the right kernel, in terms of the free columns of the RREF.
    pub fn kernel(&self) -> Vec<SparseVec> {
        self.echelon().null_space()
    }
}

pub fn rank_of(vectors: &[SparseVec], len: usize) -> usize {
    let mut e = Echelon::new(len);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

/// True iff both lists span the same subspace of `Q^len`.
pub fn span_equal(a: &[SparseVec], b: &[SparseVec], len: usize) -> bool {
    let mut ea = Echelon::new(len);
    for v in a {
        ea.insert(v);
    }
    let mut eb = Echelon::new(len);
    for v in b {
        eb.insert(v);
    }
    ea.rank() == eb.rank() && b.iter().all(|v| ea.contains(v))
}

/// True iff span(a) ⊆ span(b).
pub fn span_contains(b: &[SparseVec], a: &[SparseVec], len: usize) -> bool {
    let mut eb = Echelon::new(len);
    for v in b {
        eb.insert(v);
    }
    a.iter().all(|v| eb.contains(v))
}

/// Dense-vector convenience version of [`span_equal`].
pub fn span_equal_dense(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Result<bool> {
    let len = a.first().or(b.first()).map_or(0, |v| v.len());
    for v in a.iter().chain(b) {
        if v.len() != len {
            return Err(Error::LengthMismatch {
                left: len,
                right: v.len(),
            });
        }
    }
    let sa: Vec<_> = a.iter().map(|v| dense_to_sparse(v)).collect();
    let sb: Vec<_> = b.iter().map(|v| dense_to_sparse(v)).collect();
    Ok(span_equal(&sa, &sb, len))
}

/// Kernel of the linear map `Q^ncols -> Q^(keys)` whose matrix is given by
/// `(row key, column, value)` entries; duplicate entries are summed.
pub fn kernel_of_entries<K: Hash + Eq>(
    ncols: usize,
    entries: impl IntoIterator<Item = (K, usize, Rat)>,
) -> Vec<SparseVec> {
    let mut rows: FxHashMap<K, Vec<(usize, Rat)>> = FxHashMap::default();
    for (k, j, v) in entries {
        rows.entry(k).or_default().push((j, v));
    }
    let mut e = Echelon::new(ncols);
    for (_, r) in rows {
        if e.is_full() {
            break;
        }
        e.insert(&sparse_from_entries(r));
    }
    e.null_space()
}

/// Kernel of `c ↦ Σ c_j images[j]` for polynomial images.
pub fn kernel_of_images(images: &[NCPoly]) -> Vec<SparseVec> {
    kernel_of_entries(
        images.len(),
        images
            .iter()
            .enumerate()
            .flat_map(|(j, p)| p.terms().map(move |(w, c)| (w.clone(), j, c.clone()))),
    )
}

/// `Σ c_j polys[j]`.
pub fn combine(alphabet: Alphabet, polys: &[NCPoly], c: &[(usize, Rat)]) -> NCPoly {
    let mut out = NCPoly::zero(alphabet);
    for (j, x) in c {
        out += &polys[*j].scale(x);
    }
    out
}

/// An ordered list of words used as coordinates.
#[derive(Clone, Debug)]
pub struct WordIndex {
    alphabet: Alphabet,
    words: Vec<Word>,
    pos: FxHashMap<Word, usize>,
}

impl WordIndex {
    /// The order is canonicalized (length-lexicographic), duplicates dropped.
    pub fn new(alphabet: Alphabet, words: impl IntoIterator<Item = Word>) -> WordIndex {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort_by(|a, b| a.canonical_cmp(b));
        words.dedup();
        let pos = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();
        WordIndex {
            alphabet,
            words,
            pos,
        }
    }

    /// Index of all words occurring in the given polynomials.
    pub fn spanning<'a>(
        alphabet: Alphabet,
        polys: impl IntoIterator<Item = &'a NCPoly>,
    ) -> WordIndex {
        WordIndex::new(
            alphabet,
            polys
                .into_iter()
                .flat_map(|p| p.words().cloned())
                .collect::<Vec<_>>(),
        )
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn position(&self, w: &Word) -> Option<usize> {
        self.pos.get(w).copied()
    }

    pub fn coords(&self, p: &NCPoly) -> Result<SparseVec> {
        let mut v = Vec::with_capacity(p.len());
        for (w, c) in p.terms() {
            let k = self.position(w).ok_or_else(|| Error::OutOfIndex {
                word: w.display(p.alphabet()).to_string(),
            })?;
            v.push((k, c.clone()));
        }
        v.sort_by_key(|e| e.0);
        Ok(v)
    }

    pub fn poly(&self, v: &[(usize, Rat)]) -> NCPoly {
        NCPoly::from_terms(
            self.alphabet,
            v.iter().map(|(k, c)| (self.words[*k].clone(), c.clone())),
        )
    }
}

/// Reduced echelon basis of the span of `polys`: deterministic, with the
/// pivot word of each element (the canonically smallest surviving word)
/// carrying coefficient 1.
pub fn canonical_basis(alphabet: Alphabet, polys: &[NCPoly]) -> Vec<NCPoly> {
    let idx = WordIndex::spanning(alphabet, polys);
    let mut e = Echelon::new(idx.len());
    for p in polys {
        e.insert(&idx.coords(p).expect("index spans inputs"));
    }
    e.rows().map(|r| idx.poly(r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn kernel_examples() {
        let m = QMatrix::from_ints(&[&[1, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(span_equal(&k, &[vec![(0, r(1)), (1, r(-1))]], 2));
        assert_eq!(QMatrix::identity(5).rank(), 5);
        assert!(QMatrix::identity(5).kernel().is_empty());
        assert_eq!(QMatrix::zeros(2, 3).kernel().len(), 3);
    }

    #[test]
    fn span_examples() {
        let d = |v: &[i64]| v.iter().map(|&x| r(x)).collect::<Vec<_>>();
        assert!(span_equal_dense(&[d(&[1, 0])], &[d(&[2, 0])]).unwrap());
        assert!(!span_equal_dense(&[d(&[1, 0])], &[d(&[0, 1])]).unwrap());
        assert!(span_equal_dense(&[d(&[1, 1]), d(&[1, -1])], &[d(&[1, 0]), d(&[0, 1])]).unwrap());
        assert!(span_equal_dense(&[d(&[1, 0])], &[d(&[1, 0, 0])]).is_err());
    }

    #[test]
    fn coords_examples() {
        let p = crate::parse::parse_poly("x0 x1 - x1 x0", None).unwrap();
        let idx = WordIndex::new(Alphabet::X, p.words().cloned().collect::<Vec<_>>());
        assert_eq!(idx.coords(&p).unwrap(), vec![(0, r(1)), (1, r(-1))]);
        assert!(idx.coords(&NCPoly::zero(Alphabet::X)).unwrap().is_empty());
        assert_eq!(idx.poly(&idx.coords(&p).unwrap()), p);
        let q = crate::parse::parse_poly("x0", None).unwrap();
        assert!(idx.coords(&q).is_err());
    }

    #[test]
    fn rref_of_known_matrix() {
        let m = QMatrix::from_ints(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let rr = m.rref();
        assert_eq!(
            rr.to_dense(),
            vec![vec![r(1), r(2), r(0)], vec![r(0), r(0), r(1)]]
        );
        assert_eq!(rr.rref(), rr);
        let k = m.kernel();
        assert_eq!(k, vec![vec![(0, r(-2)), (1, r(1))]]);
    }

    fn arb_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..6, 1usize..7).prop_flat_map(|(rows, cols)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..=3, cols), rows).prop_map(
                |d| {
                    let dense: Vec<Vec<Rat>> = d
                        .iter()
                        .map(|r| r.iter().map(|&x| Rat::from_int(x)).collect())
                        .collect();
                    QMatrix::from_dense(&dense)
                },
            )
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let k = m.kernel();
            prop_assert_eq!(k.len() + m.rank(), m.ncols());
            for v in &k {
                prop_assert!(m.mul_vec(v).is_empty());
            }
            prop_assert_eq!(rank_of(&k, m.ncols()), k.len());
        }

        #[test]
        fn rref_is_idempotent_and_row_equivalent(m in arb_matrix()) {
            let rr = m.rref();
            prop_assert_eq!(rr.rref(), rr.clone());
            let orig: Vec<SparseVec> = (0..m.nrows()).map(|i| m.row(i).clone()).collect();
            let red: Vec<SparseVec> = (0..rr.nrows()).map(|i| rr.row(i).clone()).collect();
            prop_assert!(span_equal(&orig, &red, m.ncols()));
        }

        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix()) {
            let d = m.to_dense();
            let t: Vec<Vec<Rat>> = (0..m.ncols()).map(|j| d.iter().map(|r| r[j].clone()).collect()).collect();
            prop_assert_eq!(QMatrix::from_dense(&t).rank(), m.rank());
        }
    }
}
