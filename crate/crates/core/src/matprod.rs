//! Matrix-product codes `[C_1, ..., C_α] · A`.
//!
//! A codeword is the `n × β` matrix `[c_1 ... c_α] A`, read column-major:
//! entry `(j, t)` lands at coordinate `j + t*n`.

use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldElement, FieldError};
use crate::lincode::{CodeError, GeneratorMatrix, MinDistance};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatprodError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("matrix rows must all have {0} entries")]
    Ragged(usize),
    #[error("expected {expected} component codes, got {actual}")]
    ComponentCount { expected: usize, actual: usize },
    #[error("component codes must share length {expected}, found {actual}")]
    ComponentLength { expected: usize, actual: usize },
    #[error("NSC requires rows <= columns, got {rows} x {cols}")]
    TooManyRows { rows: usize, cols: usize },
    #[error("matrix does not have full row rank")]
    NotFullRank,
    #[error("matrix must be square and nonsingular")]
    Singular,
    #[error("every component is the zero code; the product is the zero code")]
    ZeroCode,
    #[error("components are nested in ascending order; pass them largest first")]
    MisorderedNesting,
    #[error("component {0} distance exceeds the enumeration budget")]
    DistanceUnknown(usize),
}

/// A dense `rows × cols` matrix over GF(p^m).
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixOverField {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<FieldElement>>,
    spec: Field,
}

impl std::fmt::Debug for MatrixOverField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for MatrixOverField {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Matrix", 3)?;
        s.serialize_field("rows", &self.rows)?;
        s.serialize_field("cols", &self.cols)?;
        s.serialize_field("entries", &self.entries)?;
        s.end()
    }
}

impl MatrixOverField {
    pub fn new(spec: &Field, entries: Vec<Vec<FieldElement>>) -> Result<Self, MatprodError> {
        let cols = entries.first().map_or(0, |r| r.len());
        for row in &entries {
            if row.len() != cols {
                return Err(MatprodError::Ragged(cols));
            }
            if row.iter().any(|e| e.spec() != spec) {
                return Err(FieldError::SpecMismatch.into());
            }
        }
        Ok(MatrixOverField {
            rows: entries.len(),
            cols,
            entries,
            spec: Arc::clone(spec),
        })
    }

    pub fn from_ints(spec: &Field, entries: &[Vec<i64>]) -> Result<Self, MatprodError> {
        let entries = entries
            .iter()
            .map(|r| r.iter().map(|&x| spec.from_int(x)).collect())
            .collect();
        Self::new(spec, entries)
    }

    pub fn from_json(spec: &Field, value: &serde_json::Value) -> Result<Self, crate::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            entries: Vec<Vec<Vec<u64>>>,
        }
        let raw: Raw = serde_json::from_value(value.clone())?;
        let entries = raw
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|d| spec.element(d))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(spec, entries)?)
    }

    pub fn identity(spec: &Field, size: usize) -> Self {
        let entries = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { spec.one() } else { spec.zero() })
                    .collect()
            })
            .collect();
        MatrixOverField {
            rows: size,
            cols: size,
            entries,
            spec: Arc::clone(spec),
        }
    }

    pub fn spec(&self) -> &Field {
        &self.spec
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<FieldElement>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        MatrixOverField {
            rows: self.cols,
            cols: self.rows,
            entries,
            spec: Arc::clone(&self.spec),
        }
    }

    pub fn mul(&self, other: &MatrixOverField) -> Result<Self, MatprodError> {
        if self.cols != other.rows {
            return Err(CodeError::LengthMismatch {
                expected: self.cols,
                actual: other.rows,
            }
            .into());
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| {
                        (0..self.cols).fold(self.spec.zero(), |acc, l| {
                            &acc + &(&self.entries[i][l] * &other.entries[l][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(MatrixOverField {
            rows: self.rows,
            cols: other.cols,
            entries,
            spec: Arc::clone(&self.spec),
        })
    }

    /// The linear code spanned by the first `t` rows.
    pub fn row_prefix_code(&self, t: usize) -> GeneratorMatrix {
        GeneratorMatrix::new(&self.spec, self.cols, self.entries[..t].to_vec())
            .expect("rows share the matrix width")
    }

    pub fn rank(&self) -> usize {
        self.row_prefix_code(self.rows).dimension()
    }

    /// Determinant of the square submatrix on `rows × cols`.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> FieldElement {
        let mut m: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        determinant(&mut m, &self.spec)
    }

    pub fn determinant(&self) -> Result<FieldElement, MatprodError> {
        if self.rows != self.cols {
            return Err(MatprodError::Singular);
        }
        Ok(determinant(&mut self.entries.clone(), &self.spec))
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self, MatprodError> {
        if self.rows != self.cols {
            return Err(MatprodError::Singular);
        }
        let n = self.rows;
        let mut aug: Vec<Vec<FieldElement>> = self
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.clone();
                r.extend((0..n).map(|j| {
                    if i == j {
                        self.spec.one()
                    } else {
                        self.spec.zero()
                    }
                }));
                r
            })
            .collect();
        for c in 0..n {
            let piv = (c..n)
                .find(|&i| !aug[i][c].is_zero())
                .ok_or(MatprodError::Singular)?;
            aug.swap(c, piv);
            let inv = aug[c][c].inv()?;
            for e in aug[c].iter_mut() {
                *e = &*e * &inv;
            }
            let pivot_row = aug[c].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i != c && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (e, pe) in row.iter_mut().zip(&pivot_row) {
                        *e = &*e - &(&f * pe);
                    }
                }
            }
        }
        let entries = aug.into_iter().map(|r| r[n..].to_vec()).collect();
        Ok(MatrixOverField {
            rows: n,
            cols: n,
            entries,
            spec: Arc::clone(&self.spec),
        })
    }
}

fn determinant(m: &mut [Vec<FieldElement>], spec: &Field) -> FieldElement {
    let n = m.len();
    let mut det = spec.one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return spec.zero();
        };
        if piv != c {
            m.swap(c, piv);
            det = -det;
        }
        det = &det * &m[c][c];
        let inv = m[c][c].inv().expect("pivot is nonzero");
        let (top, rest) = m.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in rest.iter_mut().filter(|r| !r[c].is_zero()) {
            let f = &row[c] * &inv;
            for (e, pe) in row[c..].iter_mut().zip(&pivot[c..]) {
                *e = &*e - &(&f * pe);
            }
        }
    }
    det
}

/// Generator matrix of `[C_1, ..., C_α] · A`: for component `i` and each of
/// its generator rows `g`, the word whose column-`t` block is `a_{i,t} g`.
pub fn matrix_product_code(
    components: &[GeneratorMatrix],
    a: &MatrixOverField,
) -> Result<GeneratorMatrix, MatprodError> {
    if components.len() != a.rows {
        return Err(MatprodError::ComponentCount {
            expected: a.rows,
            actual: components.len(),
        });
    }
    let n = components.first().map_or(0, |c| c.n());
    for c in components {
        if c.n() != n {
            return Err(MatprodError::ComponentLength {
                expected: n,
                actual: c.n(),
            });
        }
        if c.spec() != a.spec() {
            return Err(FieldError::SpecMismatch.into());
        }
    }
    let spec = a.spec();
    let mut rows = Vec::new();
    for (i, comp) in components.iter().enumerate() {
        for g in comp.rows() {
            let mut word = Vec::with_capacity(n * a.cols);
            for t in 0..a.cols {
                let coef = &a.entries[i][t];
                word.extend(g.iter().map(|x| coef * x));
            }
            rows.push(word);
        }
    }
    Ok(GeneratorMatrix::new(spec, n * a.cols, rows)?)
}

/// Non-singular by columns: for every `t <= α` and every column choice
/// `j_1 < ... < j_t`, the `t × t` minor on the first `t` rows is nonzero.
pub fn is_nsc(a: &MatrixOverField) -> Result<bool, MatprodError> {
    if a.rows > a.cols {
        return Err(MatprodError::TooManyRows {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let cols = a.cols;
    for t in 1..=a.rows {
        let rows: Vec<usize> = (0..t).collect();
        let mut choice: Vec<usize> = (0..t).collect();
        loop {
            if a.minor(&rows, &choice).is_zero() {
                return Ok(false);
            }
            // next t-combination of 0..cols in lexicographic order
            let Some(i) = (0..t).rev().find(|&i| choice[i] < cols - t + i) else {
                break;
            };
            choice[i] += 1;
            for l in i + 1..t {
                choice[l] = choice[l - 1] + 1;
            }
        }
    }
    Ok(true)
}

/// Lower bound `δ = min{d_i δ_i : d_i ≠ 0}` on the product code's distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceBound {
    pub bound: usize,
    /// The bound is the true minimum distance (nested components, NSC `A`).
    pub exact: bool,
    /// `δ_i` per row prefix of `A`.
    pub row_distances: Vec<usize>,
}

/// The `δ_i` of a matrix: `β - i + 1` when `A` is NSC, otherwise the exact
/// minimum distance of the code spanned by the first `i` rows of `A`, which
/// needs enumeration within `budget`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowDistances {
    pub nsc: bool,
    pub deltas: Vec<usize>,
}

impl RowDistances {
    pub fn new(a: &MatrixOverField, budget: u128) -> Result<Self, MatprodError> {
        if a.rank() != a.rows {
            return Err(MatprodError::NotFullRank);
        }
        let nsc = a.rows <= a.cols && is_nsc(a)?;
        let deltas = (1..=a.rows)
            .map(|i| {
                if nsc {
                    Ok(a.cols - i + 1)
                } else {
                    match a.row_prefix_code(i).min_distance(budget) {
                        MinDistance::Exact(d) => Ok(d),
                        MinDistance::Unknown { codewords } => {
                            Err(CodeError::BudgetExceeded { codewords, budget }.into())
                        }
                    }
                }
            })
            .collect::<Result<Vec<_>, MatprodError>>()?;
        Ok(RowDistances { nsc, deltas })
    }

    /// `min{d_i δ_i : d_i ≠ 0}`; exact when the components are nested and
    /// the matrix is NSC.
    pub fn bound(
        &self,
        component_distances: &[usize],
        nested: bool,
    ) -> Result<DistanceBound, MatprodError> {
        if component_distances.len() != self.deltas.len() {
            return Err(MatprodError::ComponentCount {
                expected: self.deltas.len(),
                actual: component_distances.len(),
            });
        }
        let bound = component_distances
            .iter()
            .zip(&self.deltas)
            .filter(|(&d, _)| d != 0)
            .map(|(&d, &delta)| d * delta)
            .min()
            .ok_or(MatprodError::ZeroCode)?;
        Ok(DistanceBound {
            bound,
            exact: nested && self.nsc,
            row_distances: self.deltas.clone(),
        })
    }
}

/// Distance bound from component distances (0 marks a zero component).
pub fn product_distance_bound(
    component_distances: &[usize],
    a: &MatrixOverField,
    nested: bool,
    budget: u128,
) -> Result<DistanceBound, MatprodError> {
    if component_distances.len() != a.rows {
        return Err(MatprodError::ComponentCount {
            expected: a.rows,
            actual: component_distances.len(),
        });
    }
    RowDistances::new(a, budget)?.bound(component_distances, nested)
}

/// Computes component distances and nesting itself, then applies
/// [`product_distance_bound`]. Components nested in ascending order are
/// rejected rather than reordered.
pub fn component_distance_bound(
    components: &[GeneratorMatrix],
    a: &MatrixOverField,
    budget: u128,
) -> Result<DistanceBound, MatprodError> {
    let descending = components
        .windows(2)
        .map(|w| w[1].is_subcode_of(&w[0]))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);
    let ascending = components
        .windows(2)
        .map(|w| w[0].is_subcode_of(&w[1]))
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .all(|b| b);
    if ascending && !descending {
        return Err(MatprodError::MisorderedNesting);
    }
    let distances = components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            c.min_distance(budget)
                .exact()
                .ok_or(MatprodError::DistanceUnknown(i))
        })
        .collect::<Result<Vec<_>, _>>()?;
    product_distance_bound(&distances, a, descending, budget)
}

/// Checks `([C_i] · A)^⊥ = [C_i^⊥] · (A^{-1})^T` by canonical forms.
pub fn dual_identity_holds(
    components: &[GeneratorMatrix],
    a: &MatrixOverField,
) -> Result<bool, MatprodError> {
    let inv_t = a.inverse()?.transpose();
    let lhs = matrix_product_code(components, a)?.dual();
    let duals: Vec<GeneratorMatrix> = components.iter().map(|c| c.dual()).collect();
    let rhs = matrix_product_code(&duals, &inv_t)?;
    Ok(crate::lincode::codes_equal(&lhs, &rhs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::lincode::{codes_equal, DEFAULT_BUDGET};
    use rand::{Rng, SeedableRng};

    fn f2() -> Field {
        FieldSpec::prime(2).unwrap()
    }

    #[test]
    fn u_u_plus_v() {
        let f = f2();
        let a = MatrixOverField::from_ints(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let c1 = GeneratorMatrix::from_ints(&f, 2, &[vec![1, 1]]).unwrap();
        let c2 = GeneratorMatrix::full_space(&f, 2);
        let mp = matrix_product_code(&[c1, c2], &a).unwrap();
        assert_eq!(mp.n(), 4);
        assert_eq!(mp.dimension(), 3);
        // direct evaluation: c1 = (1,1), c2 = (1,0) -> [c1 | c1 + c2]
        let w: Vec<_> = [1, 1, 0, 1].iter().map(|&x| f.from_int(x)).collect();
        assert!(mp.contains(&w).unwrap());
    }

    #[test]
    fn trivial_products() {
        let f7 = FieldSpec::prime(7).unwrap();
        let c = GeneratorMatrix::from_ints(&f7, 3, &[vec![1, 2, 3]]).unwrap();
        let one = MatrixOverField::identity(&f7, 1);
        assert!(codes_equal(
            &matrix_product_code(std::slice::from_ref(&c), &one).unwrap(),
            &c
        )
        .unwrap());
        let a = MatrixOverField::from_ints(&f7, &[vec![1, 1], vec![0, 1]]).unwrap();
        let z = GeneratorMatrix::zero_code(&f7, 3);
        assert_eq!(
            matrix_product_code(&[z.clone(), z], &a)
                .unwrap()
                .dimension(),
            0
        );
        assert!(matches!(
            matrix_product_code(&[c], &a),
            Err(MatprodError::ComponentCount { .. })
        ));
    }

    #[test]
    fn nsc_examples() {
        let f = f2();
        assert!(!is_nsc(&MatrixOverField::identity(&f, 2)).unwrap());
        assert!(
            is_nsc(&MatrixOverField::from_ints(&f, &[vec![1, 1], vec![1, 0]]).unwrap()).unwrap()
        );
        let tall = MatrixOverField::from_ints(&f, &[vec![1], vec![1]]).unwrap();
        assert!(matches!(
            is_nsc(&tall),
            Err(MatprodError::TooManyRows { .. })
        ));
        let f7 = FieldSpec::prime(7).unwrap();
        // Vandermonde rows are NSC
        let v = MatrixOverField::from_ints(
            &f7,
            &[vec![1, 1, 1, 1], vec![1, 2, 3, 4], vec![1, 4, 2, 2]],
        )
        .unwrap();
        assert!(is_nsc(&v).unwrap());
    }

    #[test]
    fn bound_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let one = MatrixOverField::identity(&f7, 1);
        assert_eq!(
            product_distance_bound(&[4], &one, true, DEFAULT_BUDGET).unwrap(),
            DistanceBound {
                bound: 4,
                exact: true,
                row_distances: vec![1]
            }
        );
        assert_eq!(
            product_distance_bound(&[0], &one, true, DEFAULT_BUDGET),
            Err(MatprodError::ZeroCode)
        );
        // non-NSC identity: row distances come from enumeration
        let id = MatrixOverField::identity(&f7, 2);
        let b = product_distance_bound(&[2, 3], &id, true, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.row_distances, vec![1, 1]);
        assert_eq!(b.bound, 2);
        assert!(!b.exact);
    }

    #[test]
    fn misordered_nesting_rejected() {
        let f = f2();
        let a = MatrixOverField::from_ints(&f, &[vec![1, 1], vec![1, 0]]).unwrap();
        let small = GeneratorMatrix::from_ints(&f, 2, &[vec![1, 1]]).unwrap();
        let big = GeneratorMatrix::full_space(&f, 2);
        assert_eq!(
            component_distance_bound(&[small.clone(), big.clone()], &a, DEFAULT_BUDGET),
            Err(MatprodError::MisorderedNesting)
        );
        let ok = component_distance_bound(&[big, small], &a, DEFAULT_BUDGET).unwrap();
        assert!(ok.exact);
        // (u|u+v)-type: min{1*2, 2*1} = 2
        assert_eq!(ok.bound, 2);
    }

    #[test]
    fn inverse_and_determinant() {
        let f7 = FieldSpec::prime(7).unwrap();
        let a = MatrixOverField::from_ints(&f7, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(a.determinant().unwrap(), f7.from_int(-2));
        assert_eq!(
            a.mul(&a.inverse().unwrap()).unwrap(),
            MatrixOverField::identity(&f7, 2)
        );
        let s = MatrixOverField::from_ints(&f7, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(s.inverse(), Err(MatprodError::Singular));
        assert!(s.determinant().unwrap().is_zero());
    }

    #[test]
    fn dual_identity_small_cases() {
        let f = f2();
        let c = GeneratorMatrix::from_ints(&f, 3, &[vec![1, 1, 0]]).unwrap();
        assert!(dual_identity_holds(&[c], &MatrixOverField::identity(&f, 1)).unwrap());
        let a = MatrixOverField::from_ints(&f, &[vec![1, 1], vec![0, 1]]).unwrap();
        let c1 = GeneratorMatrix::from_ints(&f, 2, &[vec![1, 1]]).unwrap();
        let c2 = GeneratorMatrix::full_space(&f, 2);
        assert!(dual_identity_holds(&[c1, c2], &a).unwrap());
        let s = MatrixOverField::from_ints(&f, &[vec![1, 1], vec![1, 1]]).unwrap();
        let c = GeneratorMatrix::full_space(&f, 2);
        assert_eq!(
            dual_identity_holds(&[c.clone(), c], &s),
            Err(MatprodError::Singular)
        );
    }

    fn random_code(rng: &mut impl Rng, spec: &Field, n: usize) -> GeneratorMatrix {
        let q = spec.order().unwrap();
        let k = rng.gen_range(0..=n);
        let rows = (0..k)
            .map(|_| {
                (0..n)
                    .map(|_| spec.element_from_index(rng.gen_range(0..q)))
                    .collect()
            })
            .collect();
        GeneratorMatrix::new(spec, n, rows).unwrap()
    }

    #[test]
    fn dual_identity_random_nonsingular() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        for p in [2u64, 3, 5, 7] {
            let spec = FieldSpec::prime(p).unwrap();
            let mut checked = 0;
            while checked < 10 {
                let alpha = rng.gen_range(1..4);
                let a = MatrixOverField::new(
                    &spec,
                    (0..alpha)
                        .map(|_| {
                            (0..alpha)
                                .map(|_| spec.element_from_index(rng.gen_range(0..p as u128)))
                                .collect()
                        })
                        .collect(),
                )
                .unwrap();
                if a.determinant().unwrap().is_zero() {
                    continue;
                }
                let n = rng.gen_range(1..5);
                let comps: Vec<_> = (0..alpha)
                    .map(|_| random_code(&mut rng, &spec, n))
                    .collect();
                let mp = matrix_product_code(&comps, &a).unwrap();
                let dims: usize = comps.iter().map(|c| c.dimension()).sum();
                assert_eq!(mp.dimension(), dims);
                assert!(dual_identity_holds(&comps, &a).unwrap());
                checked += 1;
            }
        }
    }

    #[test]
    fn exact_bound_matches_enumeration_for_nested_nsc() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let spec = FieldSpec::prime(5).unwrap();
        // 3 x 4 Vandermonde, NSC over F5
        let a = MatrixOverField::from_ints(
            &spec,
            &[vec![1, 1, 1, 1], vec![1, 2, 3, 4], vec![1, 4, 4, 1]],
        )
        .unwrap();
        assert!(is_nsc(&a).unwrap());
        for _ in 0..20 {
            let n = rng.gen_range(2..4);
            // nested chain C1 ⊇ C2 ⊇ C3 built by dropping rows
            let big = random_code(&mut rng, &spec, n).rref();
            let k = big.rows().len();
            let k2 = rng.gen_range(0..=k);
            let k3 = rng.gen_range(0..=k2);
            let c2 = GeneratorMatrix::new(&spec, n, big.rows()[..k2].to_vec()).unwrap();
            let c3 = GeneratorMatrix::new(&spec, n, big.rows()[..k3].to_vec()).unwrap();
            let comps = [big, c2, c3];
            let b = match component_distance_bound(&comps, &a, DEFAULT_BUDGET) {
                Ok(b) => b,
                Err(MatprodError::ZeroCode) => continue,
                Err(e) => panic!("{e}"),
            };
            assert!(b.exact);
            let mp = matrix_product_code(&comps, &a).unwrap();
            assert_eq!(mp.min_distance(DEFAULT_BUDGET), MinDistance::Exact(b.bound));
        }
    }

    #[test]
    fn matrix_json_shape() {
        let f7 = FieldSpec::prime(7).unwrap();
        let a = MatrixOverField::from_ints(&f7, &[vec![1, 6], vec![1, 0]]).unwrap();
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"rows": 2, "cols": 2, "entries": [[[1], [6]], [[1], [0]]]})
        );
        assert_eq!(MatrixOverField::from_json(&f7, &v).unwrap(), a);
    }
}
