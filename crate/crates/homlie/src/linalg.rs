//! Exact linear algebra over the rationals: canonical subspaces in reduced
//! row-echelon form, quotient presentations, and well-definedness checks for
//! induced maps.
//!
//! Canonicity is the load-bearing property: two equal subspaces have
//! identical representations, so subspace equality is representation
//! equality and every report is reproducible byte for byte.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::{format_vector, Scalar};

/// Coordinate vector. A plain `Vec<Scalar>`; dimension is its length.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(dim: usize) -> Vector {
    vec![Scalar::zero(); dim]
}

pub fn unit_vector(dim: usize, index: usize) -> Vector {
    let mut v = zero_vector(dim);
    v[index] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_assign(dst: &mut [Scalar], src: &[Scalar]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d += s;
    }
}

pub fn sub_assign(dst: &mut [Scalar], src: &[Scalar]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d -= s;
    }
}

/// `dst += c * src`, skipping the work when `c` or an entry is zero.
pub fn add_scaled(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

pub fn scale(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

pub fn negate(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the matrix whose j-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Self {
        let mut m = Matrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.data[i * m.cols + j] = col[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vector {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = zero_vector(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.at(i, j);
                if !a.is_zero() {
                    out[i] += a * x;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_mat(&self, other: &Matrix) -> Result<Matrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j).clone();
                        out.set(i, j, cur + a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        Subspace::from_spanning(&(0..self.rows).map(|i| self.row(i)).collect::<Vec<_>>(), self.cols)
            .expect("rows have uniform length")
            .rank()
    }

    /// Basis of the right null space `{ x : A x = 0 }`, in canonical RREF
    /// form (as a subspace of the column coordinate space).
    pub fn kernel(&self) -> Subspace {
        // Reduce A, then read the free-variable solutions off the RREF.
        let rref = Subspace::from_spanning(
            &(0..self.rows).map(|i| self.row(i)).collect::<Vec<_>>(),
            self.cols,
        )
        .expect("rows have uniform length");
        let pivots = &rref.pivot_cols;
        let mut generators = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = zero_vector(self.cols);
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rref.basis[r][free].clone();
            }
            generators.push(v);
        }
        Subspace::from_spanning(&generators, self.cols).expect("kernel vectors have ambient length")
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    /// One exact solution of `A x = b`, free variables set to zero;
    /// `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>, Error> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        let mut aug: Vec<Vector> = (0..self.rows)
            .map(|i| {
                let mut row = self.row(i);
                row.push(b[i].clone());
                row
            })
            .collect();
        let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(rank, pivot_row);
            let inv = aug[rank][col].clone();
            for x in aug[rank].iter_mut() {
                if !x.is_zero() {
                    *x /= &inv;
                }
            }
            for r in 0..self.rows {
                if r != rank && !aug[r][col].is_zero() {
                    let c = -aug[r][col].clone();
                    let pivot = aug[rank].clone();
                    add_scaled(&mut aug[r], &c, &pivot);
                }
            }
            pivots.push((rank, col));
            rank += 1;
        }
        for r in rank..self.rows {
            if !aug[r][self.cols].is_zero() {
                return Ok(None);
            }
        }
        let mut x = zero_vector(self.cols);
        for (row, col) in pivots {
            x[col] = aug[row][self.cols].clone();
        }
        Ok(Some(x))
    }
}

/// A linear subspace of `Q^n` held in canonical reduced row-echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    /// RREF basis rows: leading entry 1, strictly increasing pivot columns,
    /// each pivot column zero elsewhere.
    pub basis: Vec<Vector>,
    pub pivot_cols: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect(),
            pivot_cols: (0..ambient_dim).collect(),
        }
    }

    /// Canonical RREF basis of the span. Idempotent and order-independent.
    pub fn from_spanning(spanning: &[Vector], ambient_dim: usize) -> Result<Self, Error> {
        let mut builder = RrefBuilder::new(ambient_dim);
        for v in spanning {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    got: v.len(),
                });
            }
            builder.insert(v.clone());
        }
        Ok(builder.finish())
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_dim
    }

    /// Residual of `v` after elimination against the basis; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector, Error> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: v.len(),
            });
        }
        let mut r = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivot_cols) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                add_scaled(&mut r, &c, row);
            }
        }
        Ok(r)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, Error> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, Error> {
        for row in &other.basis {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` in this RREF basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>, Error> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivot_cols.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Ambient vector with the given coordinates in this basis.
    pub fn from_coordinates(&self, coords: &[Scalar]) -> Result<Vector, Error> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let mut v = zero_vector(self.ambient_dim);
        for (c, row) in coords.iter().zip(&self.basis) {
            add_scaled(&mut v, c, row);
        }
        Ok(v)
    }

    /// Matrix whose columns are the basis vectors (embedding into ambient
    /// coordinates).
    pub fn embedding_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.basis, self.ambient_dim)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Subspace::from_spanning(&gens, self.ambient_dim)
    }

    /// Intersection via the kernel-of-stacked-bases construction: solve
    /// `sum lambda_i s_i = sum mu_j t_j` and read off the left side.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                got: other.ambient_dim,
            });
        }
        let k1 = self.rank();
        let k2 = other.rank();
        if k1 == 0 || k2 == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Columns: lambda coefficients then mu coefficients.
        let mut stacked = Matrix::zero(self.ambient_dim, k1 + k2);
        for (j, row) in self.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                stacked.set(i, j, row[i].clone());
            }
        }
        for (j, row) in other.basis.iter().enumerate() {
            for i in 0..self.ambient_dim {
                stacked.set(i, k1 + j, -row[i].clone());
            }
        }
        let null = stacked.kernel();
        let mut gens = Vec::new();
        for sol in &null.basis {
            let mut v = zero_vector(self.ambient_dim);
            for (j, row) in self.basis.iter().enumerate() {
                add_scaled(&mut v, &sol[j], row);
            }
            gens.push(v);
        }
        Subspace::from_spanning(&gens, self.ambient_dim)
    }

    /// Image of this subspace under `f` (columns of ambient size).
    pub fn image_under(&self, f: &Matrix) -> Result<Subspace, Error> {
        let mut gens = Vec::new();
        for row in &self.basis {
            gens.push(f.mul_vec(row)?);
        }
        Subspace::from_spanning(&gens, f.rows())
    }

    pub fn describe(&self) -> String {
        if self.basis.is_empty() {
            return "{0}".to_string();
        }
        let rows: Vec<String> = self.basis.iter().map(|r| format_vector(r)).collect();
        format!("span{{{}}}", rows.join(", "))
    }
}

/// Incremental RREF accumulator. Inserting a vector reduces it against the
/// current rows and, when independent, back-substitutes so the invariant
/// holds after every step.
pub struct RrefBuilder {
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RrefBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        RrefBuilder {
            ambient_dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns true when the vector was independent (rank grew).
    pub fn insert(&mut self, v: Vector) -> bool {
        debug_assert_eq!(v.len(), self.ambient_dim);
        let mut r = v;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                add_scaled(&mut r, &c, row);
            }
        }
        let Some(lead) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[lead].clone();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x /= &inv;
            }
        }
        // Clear the new pivot column in existing rows.
        for row in self.rows.iter_mut() {
            if !row[lead].is_zero() {
                let c = -row[lead].clone();
                add_scaled(row, &c, &r);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, r);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = -r[p].clone();
                add_scaled(&mut r, &c, row);
            }
        }
        is_zero_vector(&r)
    }

    pub fn finish(self) -> Subspace {
        Subspace {
            ambient_dim: self.ambient_dim,
            basis: self.rows,
            pivot_cols: self.pivots,
        }
    }
}

/// A quotient space `Q^n / K` presented by the kernel `K`, a section (one
/// ambient representative per quotient coordinate) and the exact projection.
///
/// The section is the non-pivot standard basis vectors of the kernel's RREF,
/// so the presentation is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    pub kernel: Subspace,
    pub section: Vec<Vector>,
    pub projection: Matrix,
}

impl QuotientSpace {
    pub fn new(ambient_dim: usize, kernel: Subspace) -> Result<Self, Error> {
        if kernel.ambient_dim != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                got: kernel.ambient_dim,
            });
        }
        let free_cols: Vec<usize> =
            (0..ambient_dim).filter(|c| !kernel.pivot_cols.contains(c)).collect();
        let section: Vec<Vector> = free_cols.iter().map(|&c| unit_vector(ambient_dim, c)).collect();
        // Projection row k reads the free coordinate free_cols[k] of the
        // kernel-reduced representative.
        let mut projection = Matrix::zero(free_cols.len(), ambient_dim);
        for j in 0..ambient_dim {
            let reduced = kernel.reduce(&unit_vector(ambient_dim, j))?;
            for (k, &c) in free_cols.iter().enumerate() {
                projection.set(k, j, reduced[c].clone());
            }
        }
        Ok(QuotientSpace {
            ambient_dim,
            kernel,
            section,
            projection,
        })
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// Quotient coordinates of an ambient vector.
    pub fn project(&self, v: &[Scalar]) -> Result<Vector, Error> {
        self.projection.mul_vec(v)
    }

    /// Ambient representative of a quotient vector.
    pub fn lift(&self, q: &[Scalar]) -> Result<Vector, Error> {
        if q.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: q.len(),
            });
        }
        let mut v = zero_vector(self.ambient_dim);
        for (c, s) in q.iter().zip(&self.section) {
            add_scaled(&mut v, c, s);
        }
        Ok(v)
    }
}

/// Induced map on quotient coordinates: defined iff `f` carries the source
/// kernel into the destination kernel; otherwise the witness kernel vector
/// is returned. A failure signals a violated algebraic hypothesis, not a
/// bug.
pub fn induce_map(f: &Matrix, src: &QuotientSpace, dst: &QuotientSpace) -> Result<Matrix, Error> {
    if f.cols() != src.ambient_dim || f.rows() != dst.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: src.ambient_dim,
            got: f.cols(),
        });
    }
    for v in &src.kernel.basis {
        let image = f.mul_vec(v)?;
        if !dst.kernel.contains(&image)? {
            return Err(Error::not_well_defined("quotient descent", v));
        }
    }
    let mut columns = Vec::with_capacity(src.dim());
    for s in &src.section {
        columns.push(dst.project(&f.mul_vec(s)?)?);
    }
    Ok(Matrix::from_columns(&columns, dst.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn v(entries: &[i64]) -> Vector {
        entries.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn canonicalize_collinear() {
        let s = Subspace::from_spanning(&[v(&[1, 1]), v(&[2, 2])], 2).unwrap();
        assert_eq!(s.rank(), 1);
        assert_eq!(s.basis, vec![v(&[1, 1])]);
    }

    #[test]
    fn canonicalize_empty() {
        let s = Subspace::from_spanning(&[], 2).unwrap();
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn canonicalize_pivots() {
        let s =
            Subspace::from_spanning(&[v(&[0, 1, 0]), v(&[1, 0, 0]), v(&[1, 1, 0])], 3).unwrap();
        assert_eq!(s.rank(), 2);
        assert_eq!(s.pivot_cols, vec![0, 1]);
    }

    #[test]
    fn canonicalize_dimension_mismatch() {
        assert!(matches!(
            Subspace::from_spanning(&[v(&[1, 0, 0])], 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::from_spanning(&[v(&[1, 1])], 2).unwrap();
        assert!(s.contains(&v(&[3, 3])).unwrap());
        assert!(!s.contains(&v(&[1, 0])).unwrap());
        let z = Subspace::zero(2);
        assert!(z.contains(&v(&[0, 0])).unwrap());
    }

    #[test]
    fn sum_and_intersection() {
        let e1 = Subspace::from_spanning(&[v(&[1, 0])], 2).unwrap();
        let e2 = Subspace::from_spanning(&[v(&[0, 1])], 2).unwrap();
        assert!(e1.sum(&e2).unwrap().is_full());
        let diag = Subspace::from_spanning(&[v(&[1, 1])], 2).unwrap();
        assert_eq!(diag.intersect(&e1).unwrap().rank(), 0);
        assert_eq!(diag.intersect(&diag).unwrap(), diag);
    }

    #[test]
    fn quotient_presentation() {
        let kernel = Subspace::from_spanning(&[v(&[0, 0, 1])], 3).unwrap();
        let q = QuotientSpace::new(3, kernel).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.section, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        // projection annihilates the kernel and splits the section
        assert_eq!(q.project(&v(&[0, 0, 5])).unwrap(), v(&[0, 0]));
        assert_eq!(q.project(&q.lift(&v(&[2, 3])).unwrap()).unwrap(), v(&[2, 3]));

        let full = QuotientSpace::new(2, Subspace::full(2)).unwrap();
        assert_eq!(full.dim(), 0);
        let none = QuotientSpace::new(2, Subspace::zero(2)).unwrap();
        assert!(none.projection.is_identity());
    }

    #[test]
    fn induce_map_identity_and_failure() {
        let kernel = Subspace::from_spanning(&[v(&[0, 1])], 2).unwrap();
        let q = QuotientSpace::new(2, kernel).unwrap();
        let id = Matrix::identity(2);
        let induced = induce_map(&id, &q, &q).unwrap();
        assert!(induced.is_identity());

        // swap(e1, e2) does not preserve span{e2}
        let swap = Matrix::from_rows(vec![v(&[0, 1]), v(&[1, 0])]);
        match induce_map(&swap, &q, &q) {
            Err(Error::WellDefinedness { witness, .. }) => {
                assert_eq!(witness, "[0,1]");
            }
            other => panic!("expected well-definedness failure, got {other:?}"),
        }
    }

    #[test]
    fn projection_onto_first_coordinate() {
        let kernel = Subspace::from_spanning(&[v(&[0, 1])], 2).unwrap();
        let q = QuotientSpace::new(2, kernel).unwrap();
        let f = Matrix::from_rows(vec![v(&[1, 0]), v(&[0, 0])]);
        let induced = induce_map(&f, &q, &q).unwrap();
        assert!(induced.is_identity());
        assert_eq!(induced.rows(), 1);
    }

    #[test]
    fn kernel_of_matrix() {
        // x + y + z = 0 has a 2-dimensional solution space
        let m = Matrix::from_rows(vec![v(&[1, 1, 1])]);
        let k = m.kernel();
        assert_eq!(k.rank(), 2);
        for b in &k.basis {
            assert!(is_zero_vector(&m.mul_vec(b).unwrap()));
        }
    }

    #[test]
    fn rational_arithmetic_is_exact() {
        let s = Subspace::from_spanning(&[vec![ratio(1, 3), ratio(1, 6)]], 2).unwrap();
        assert_eq!(s.basis, vec![vec![int(1), ratio(1, 2)]]);
        assert!(s.contains(&[ratio(2, 7), ratio(1, 7)]).unwrap());
    }

    #[test]
    fn closure_property() {
        let s = Subspace::from_spanning(&[v(&[1, 2, 3]), v(&[0, 1, 1])], 3).unwrap();
        let member = s.from_coordinates(&[int(5), int(-7)]).unwrap();
        let mut gens = s.basis.clone();
        gens.push(member);
        assert_eq!(Subspace::from_spanning(&gens, 3).unwrap(), s);
    }
}
