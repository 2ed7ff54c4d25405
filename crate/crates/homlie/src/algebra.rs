//! Hom-Lie algebras by structure constants and a twist matrix, their axiom
//! validators, and the basic constructions: center, commutator subspaces,
//! quotients, direct products, Yau twists and the alpha-condition
//! predicates.

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{
    add_scaled, induce_map, is_zero_vector, unit_vector, zero_vector, Matrix, QuotientSpace,
    Subspace, Vector,
};
use crate::rational::{format_vector, Scalar};
use crate::Result;

/// Finite-dimensional Hom-Lie algebra over the rationals.
///
/// `bracket[i][j]` holds the coordinates of `[e_i, e_j]`; `alpha` is the
/// twist endomorphism in the same basis. The constructors antisymmetrize,
/// so loaded data is skew by construction; [`HomLieAlgebra::validate`]
/// still guards hand-built tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLieAlgebra {
    pub name: String,
    pub dim: usize,
    pub bracket: Vec<Vec<Vector>>,
    pub alpha: Matrix,
}

/// Verification levels for a subspace of a Hom-Lie algebra.
///
/// `Subalgebra` means closed under the bracket and alpha-invariant;
/// `HomIdeal` additionally absorbs brackets with the whole algebra. A plain
/// `Subspace` carries no claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubspaceKind {
    Subspace,
    Subalgebra,
    HomIdeal,
}

impl SubspaceKind {
    pub fn label(&self) -> &'static str {
        match self {
            SubspaceKind::Subspace => "subspace",
            SubspaceKind::Subalgebra => "subalgebra",
            SubspaceKind::HomIdeal => "hom_ideal",
        }
    }
}

/// A subspace of a named parent algebra together with its verified kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomSubspace {
    pub parent: String,
    pub space: Subspace,
    pub kind: SubspaceKind,
}

/// One axiom failure: which law, at which basis indices, with what residual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub law: String,
    pub indices: Vec<usize>,
    pub residual: Vector,
}

impl AxiomFailure {
    pub fn describe(&self) -> String {
        format!(
            "{} at {:?}: residual {}",
            self.law,
            self.indices,
            format_vector(&self.residual)
        )
    }
}

/// Outcome of an axiom check; failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub failures: Vec<AxiomFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, law: &str, indices: Vec<usize>, residual: Vector) {
        self.failures.push(AxiomFailure {
            law: law.to_string(),
            indices,
            residual,
        });
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

impl HomLieAlgebra {
    /// Builds from the `i < j` half of the bracket table, antisymmetrizing.
    /// Diagonal entries are zero by construction.
    pub fn from_upper_entries(
        name: &str,
        dim: usize,
        entries: &[(usize, usize, Vector)],
        alpha: Matrix,
    ) -> Result<Self> {
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: alpha.rows(),
            });
        }
        let mut bracket = vec![vec![zero_vector(dim); dim]; dim];
        for (i, j, value) in entries {
            assert!(i < j, "bracket entries must have i < j");
            if value.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: value.len(),
                });
            }
            bracket[*i][*j] = value.clone();
            bracket[*j][*i] = crate::linalg::negate(value);
        }
        Ok(HomLieAlgebra {
            name: name.to_string(),
            dim,
            bracket,
            alpha,
        })
    }

    pub fn abelian(name: &str, dim: usize, alpha: Matrix) -> Result<Self> {
        HomLieAlgebra::from_upper_entries(name, dim, &[], alpha)
    }

    pub fn zero_algebra(name: &str) -> Self {
        HomLieAlgebra {
            name: name.to_string(),
            dim: 0,
            bracket: Vec::new(),
            alpha: Matrix::zero(0, 0),
        }
    }

    pub fn alpha_column(&self, j: usize) -> Vector {
        self.alpha.column(j)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket_eval(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: if x.len() != self.dim { x.len() } else { y.len() },
            });
        }
        let mut out = zero_vector(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let table = &self.bracket[i][j];
                if !is_zero_vector(table) {
                    let c = xi * yj;
                    add_scaled(&mut out, &c, table);
                }
            }
        }
        Ok(out)
    }

    pub fn apply_alpha(&self, x: &[Scalar]) -> Result<Vector> {
        self.alpha.mul_vec(x)
    }

    /// Checks skew-symmetry, the Hom-Jacobi identity and multiplicativity of
    /// alpha on all basis tuples. Exact zero residuals required.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut skew = self.bracket[i][j].clone();
                crate::linalg::add_assign(&mut skew, &self.bracket[j][i]);
                if !is_zero_vector(&skew) {
                    report.push("skew-symmetry", vec![i + 1, j + 1], skew);
                }
            }
        }
        for i in 0..self.dim {
            if !is_zero_vector(&self.bracket[i][i]) {
                report.push("alternating", vec![i + 1], self.bracket[i][i].clone());
            }
        }
        let alpha_cols: Vec<Vector> = self.alpha.columns();
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    // [alpha(x),[y,z]] + [alpha(z),[x,y]] + [alpha(y),[z,x]]
                    let mut total = self
                        .bracket_eval(&alpha_cols[i], &self.bracket[j][k])
                        .expect("dims agree");
                    let t2 = self
                        .bracket_eval(&alpha_cols[k], &self.bracket[i][j])
                        .expect("dims agree");
                    let t3 = self
                        .bracket_eval(&alpha_cols[j], &self.bracket[k][i])
                        .expect("dims agree");
                    crate::linalg::add_assign(&mut total, &t2);
                    crate::linalg::add_assign(&mut total, &t3);
                    if !is_zero_vector(&total) {
                        report.push("hom-jacobi", vec![i + 1, j + 1, k + 1], total);
                    }
                }
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut lhs = self.apply_alpha(&self.bracket[i][j]).expect("dims agree");
                let rhs = self
                    .bracket_eval(&alpha_cols[i], &alpha_cols[j])
                    .expect("dims agree");
                crate::linalg::sub_assign(&mut lhs, &rhs);
                if !is_zero_vector(&lhs) {
                    report.push("multiplicativity", vec![i + 1, j + 1], lhs);
                }
            }
        }
        report
    }

    /// `Z(L)`: kernel of the stacked adjoint maps `x -> [x, e_j]`.
    ///
    /// Returned with kind `Subspace`: the theory only guarantees Hom-ideal
    /// structure when alpha is surjective, so the ideal claim is reported
    /// separately by [`HomLieAlgebra::center_is_hom_ideal`].
    pub fn center(&self) -> HomSubspace {
        let mut stacked = Matrix::zero(self.dim * self.dim, self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                for i in 0..self.dim {
                    // row (j*dim + k), column i: coefficient of e_k in [e_i, e_j]
                    stacked.set(j * self.dim + k, i, self.bracket[i][j][k].clone());
                }
            }
        }
        let space = stacked.kernel();
        HomSubspace {
            parent: self.name.clone(),
            space,
            kind: SubspaceKind::Subspace,
        }
    }

    /// Whether the center is alpha-invariant (brackets with the center are
    /// zero by definition, so this is the whole Hom-ideal condition).
    pub fn center_is_hom_ideal(&self) -> bool {
        let z = self.center();
        self.is_alpha_invariant(&z.space)
    }

    pub fn is_alpha_invariant(&self, s: &Subspace) -> bool {
        s.basis.iter().all(|b| {
            let image = self.apply_alpha(b).expect("dims agree");
            s.contains(&image).expect("dims agree")
        })
    }

    /// Verifies bracket closure of a subspace; returns the first escaping
    /// witness.
    fn bracket_closure_witness(&self, s: &Subspace) -> Option<(Vector, Vector, Vector)> {
        for a in &s.basis {
            for b in &s.basis {
                let val = self.bracket_eval(a, b).expect("dims agree");
                if !s.contains(&val).expect("dims agree") {
                    return Some((a.clone(), b.clone(), val));
                }
            }
        }
        None
    }

    /// Absorption witness: `[h, e_x]` outside the subspace for basis `h`.
    fn ideal_witness(&self, s: &Subspace) -> Option<(Vector, usize, Vector)> {
        for h in &s.basis {
            for x in 0..self.dim {
                let val = self
                    .bracket_eval(h, &unit_vector(self.dim, x))
                    .expect("dims agree");
                if !s.contains(&val).expect("dims agree") {
                    return Some((h.clone(), x, val));
                }
            }
        }
        None
    }

    /// Classifies a subspace at the strongest verified kind.
    pub fn classify(&self, space: Subspace) -> HomSubspace {
        let alpha_ok = self.is_alpha_invariant(&space);
        let kind = if alpha_ok && self.ideal_witness(&space).is_none() {
            SubspaceKind::HomIdeal
        } else if alpha_ok && self.bracket_closure_witness(&space).is_none() {
            SubspaceKind::Subalgebra
        } else {
            SubspaceKind::Subspace
        };
        HomSubspace {
            parent: self.name.clone(),
            space,
            kind,
        }
    }

    pub fn classify_span(&self, spanning: &[Vector]) -> Result<HomSubspace> {
        Ok(self.classify(Subspace::from_spanning(spanning, self.dim)?))
    }

    /// Canonical span of `{[h_a, k_b]}` over basis pairs, classified.
    pub fn commutator_subspace(&self, h: &HomSubspace, k: &HomSubspace) -> HomSubspace {
        let mut gens = Vec::new();
        for a in &h.space.basis {
            for b in &k.space.basis {
                gens.push(self.bracket_eval(a, b).expect("dims agree"));
            }
        }
        let space = Subspace::from_spanning(&gens, self.dim).expect("dims agree");
        self.classify(space)
    }

    pub fn full_subspace(&self) -> HomSubspace {
        HomSubspace {
            parent: self.name.clone(),
            space: Subspace::full(self.dim),
            kind: SubspaceKind::HomIdeal,
        }
    }

    /// Derived subalgebra `[L, L]`.
    pub fn derived_subalgebra(&self) -> HomSubspace {
        let full = self.full_subspace();
        self.commutator_subspace(&full, &full)
    }

    /// Quotient by a verified Hom-ideal, with the projection matrix.
    /// The induced bracket and twist are exact; the result re-validates.
    pub fn quotient_algebra(&self, ideal: &HomSubspace) -> Result<(HomLieAlgebra, Matrix)> {
        if !self.is_alpha_invariant(&ideal.space) {
            let b = ideal
                .space
                .basis
                .iter()
                .find(|b| {
                    let image = self.apply_alpha(b).expect("dims agree");
                    !ideal.space.contains(&image).expect("dims agree")
                })
                .expect("invariance failed");
            return Err(Error::NotAlphaInvariant {
                space: ideal.space.describe(),
                witness: format_vector(b),
            });
        }
        if let Some((h, x, value)) = self.ideal_witness(&ideal.space) {
            return Err(Error::NotAnIdeal {
                space: ideal.space.describe(),
                h: format_vector(&h),
                x: format!("e{}", x + 1),
                value: format_vector(&value),
            });
        }
        let quotient = QuotientSpace::new(self.dim, ideal.space.clone())?;
        let qdim = quotient.dim();
        let mut bracket = vec![vec![zero_vector(qdim); qdim]; qdim];
        for (p, sp) in quotient.section.iter().enumerate() {
            for (q, sq) in quotient.section.iter().enumerate() {
                bracket[p][q] = quotient.project(&self.bracket_eval(sp, sq)?)?;
            }
        }
        let alpha = induce_map(&self.alpha, &quotient, &quotient)?;
        let result = HomLieAlgebra {
            name: format!("{}/{}", self.name, ideal.space.describe()),
            dim: qdim,
            bracket,
            alpha,
        };
        Ok((result, quotient.projection))
    }

    /// Checks `f [x,y] = [f x, f y]` and `f alpha = alpha' f` on the basis.
    pub fn is_homomorphism(&self, f: &Matrix, target: &HomLieAlgebra) -> ValidationReport {
        let mut report = ValidationReport::default();
        if f.cols() != self.dim || f.rows() != target.dim {
            report.push("shape", vec![f.rows(), f.cols()], Vec::new());
            return report;
        }
        let f_cols = f.columns();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut lhs = f.mul_vec(&self.bracket[i][j]).expect("dims agree");
                let rhs = target.bracket_eval(&f_cols[i], &f_cols[j]).expect("dims agree");
                crate::linalg::sub_assign(&mut lhs, &rhs);
                if !is_zero_vector(&lhs) {
                    report.push("bracket preservation", vec![i + 1, j + 1], lhs);
                }
            }
        }
        for i in 0..self.dim {
            let mut lhs = f.mul_vec(&self.alpha_column(i)).expect("dims agree");
            let rhs = target.apply_alpha(&f_cols[i]).expect("dims agree");
            crate::linalg::sub_assign(&mut lhs, &rhs);
            if !is_zero_vector(&lhs) {
                report.push("alpha commuting", vec![i + 1], lhs);
            }
        }
        report
    }

    /// Block-diagonal direct product.
    pub fn direct_product(&self, other: &HomLieAlgebra) -> HomLieAlgebra {
        let dim = self.dim + other.dim;
        let mut bracket = vec![vec![zero_vector(dim); dim]; dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut v = self.bracket[i][j].clone();
                v.extend(zero_vector(other.dim));
                bracket[i][j] = v;
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                let mut v = zero_vector(self.dim);
                v.extend(other.bracket[i][j].iter().cloned());
                bracket[self.dim + i][self.dim + j] = v;
            }
        }
        let mut alpha = Matrix::zero(dim, dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                alpha.set(i, j, self.alpha.at(i, j).clone());
            }
        }
        for i in 0..other.dim {
            for j in 0..other.dim {
                alpha.set(self.dim + i, self.dim + j, other.alpha.at(i, j).clone());
            }
        }
        HomLieAlgebra {
            name: format!("{}x{}", self.name, other.name),
            dim,
            bracket,
            alpha,
        }
    }

    /// Yau twist: for a Lie algebra (`alpha = id`) and an endomorphism
    /// `beta`, the bracket `beta([x, y])` with twist `beta`.
    pub fn yau_twist(&self, beta: &Matrix) -> Result<HomLieAlgebra> {
        if !self.alpha.is_identity() {
            return Err(Error::HypothesisFailure {
                index: 0,
                name: "yau twist requires alpha = id".to_string(),
                witness: String::new(),
            });
        }
        // beta must preserve the bracket
        let beta_cols = beta.columns();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut lhs = beta.mul_vec(&self.bracket[i][j])?;
                let rhs = self.bracket_eval(&beta_cols[i], &beta_cols[j])?;
                crate::linalg::sub_assign(&mut lhs, &rhs);
                if !is_zero_vector(&lhs) {
                    return Err(Error::NotAnEndomorphism { i: i + 1, j: j + 1 });
                }
            }
        }
        let mut bracket = vec![vec![zero_vector(self.dim); self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                bracket[i][j] = beta.mul_vec(&self.bracket[i][j])?;
            }
        }
        Ok(HomLieAlgebra {
            name: format!("{}_twisted", self.name),
            dim: self.dim,
            bracket,
            alpha: beta.clone(),
        })
    }

    /// Surjectivity of alpha plus the alpha-identity and weak alpha-identity
    /// conditions `[Q, im(alpha - id)] = 0` and `[[Q,Q], im(alpha - id)] = 0`.
    pub fn alpha_props(&self) -> AlphaProps {
        let surjective = self.alpha.rank() == self.dim;
        let mut shifted = Vec::new();
        for j in 0..self.dim {
            let mut col = self.alpha_column(j);
            col[j] -= crate::rational::one();
            shifted.push(col);
        }
        let mut alpha_identity = true;
        for i in 0..self.dim {
            for s in &shifted {
                if !is_zero_vector(&self.bracket_eval(&unit_vector(self.dim, i), s).expect("dims")) {
                    alpha_identity = false;
                }
            }
        }
        let mut weak_alpha_identity = true;
        for i in 0..self.dim {
            for j in 0..self.dim {
                for s in &shifted {
                    let v = self
                        .bracket_eval(&self.bracket[i][j], s)
                        .expect("dims agree");
                    if !is_zero_vector(&v) {
                        weak_alpha_identity = false;
                    }
                }
            }
        }
        AlphaProps {
            surjective,
            alpha_identity,
            weak_alpha_identity,
        }
    }

    /// The subalgebra carried by an alpha-invariant, bracket-closed
    /// subspace, in the subspace's own coordinates, plus the embedding.
    pub fn restrict_to(&self, space: &Subspace) -> Result<(HomLieAlgebra, Matrix)> {
        if !self.is_alpha_invariant(space) {
            return Err(Error::NotAlphaInvariant {
                space: space.describe(),
                witness: String::new(),
            });
        }
        if let Some((a, b, _)) = self.bracket_closure_witness(space) {
            return Err(Error::NotASubalgebra {
                space: space.describe(),
                witness: format!("[{}, {}]", format_vector(&a), format_vector(&b)),
            });
        }
        let dim = space.rank();
        let mut bracket = vec![vec![zero_vector(dim); dim]; dim];
        for (i, a) in space.basis.iter().enumerate() {
            for (j, b) in space.basis.iter().enumerate() {
                let value = self.bracket_eval(a, b)?;
                bracket[i][j] = space
                    .coordinates(&value)?
                    .expect("closure verified above");
            }
        }
        let mut alpha_cols = Vec::new();
        for b in &space.basis {
            let image = self.apply_alpha(b)?;
            alpha_cols.push(space.coordinates(&image)?.expect("invariance verified above"));
        }
        let restricted = HomLieAlgebra {
            name: format!("{}|{}", self.name, space.describe()),
            dim,
            bracket,
            alpha: Matrix::from_columns(&alpha_cols, dim),
        };
        Ok((restricted, space.embedding_matrix()))
    }
}

/// Report of `alpha_props`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaProps {
    pub surjective: bool,
    pub alpha_identity: bool,
    pub weak_alpha_identity: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::int;

    fn v(entries: &[i64]) -> Vector {
        entries.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn heis3_validates_and_brackets() {
        let l = catalog::heis3();
        assert!(l.validate().passed());
        assert_eq!(
            l.bracket_eval(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(),
            v(&[0, 0, 1])
        );
        // [x, x] = 0 for arbitrary x
        let x = v(&[3, -2, 7]);
        assert!(is_zero_vector(&l.bracket_eval(&x, &x).unwrap()));
    }

    #[test]
    fn weak2_validates() {
        let l = catalog::weak2();
        assert!(l.validate().passed());
    }

    #[test]
    fn broken_skew_symmetry_is_reported() {
        let mut l = catalog::heis3();
        l.bracket[1][0] = v(&[0, 0, 1]); // should be -[e1,e2]
        let report = l.validate();
        assert!(!report.passed());
        assert!(report.failures.iter().any(|f| f.law == "skew-symmetry"
            && f.indices == vec![1, 2]));
    }

    #[test]
    fn sl2_bracket_oracle() {
        // hand expansion: with basis (h, e, f), [e, f] = h
        let l = catalog::sl2();
        assert!(l.validate().passed());
        assert_eq!(
            l.bracket_eval(&v(&[0, 1, 0]), &v(&[0, 0, 1])).unwrap(),
            v(&[1, 0, 0])
        );
    }

    #[test]
    fn centers() {
        let heis = catalog::heis3();
        let z = heis.center();
        assert_eq!(z.space, Subspace::from_spanning(&[v(&[0, 0, 1])], 3).unwrap());

        let ab = HomLieAlgebra::abelian("ab", 4, Matrix::identity(4)).unwrap();
        assert!(ab.center().space.is_full());

        assert_eq!(catalog::sl2().center().space.rank(), 0);
    }

    #[test]
    fn center_annihilates_everything() {
        for l in [catalog::heis3(), catalog::der4(), catalog::sl2(), catalog::gh3()] {
            let z = l.center();
            for b in &z.space.basis {
                for i in 0..l.dim {
                    let val = l.bracket_eval(b, &unit_vector(l.dim, i)).unwrap();
                    assert!(is_zero_vector(&val));
                }
            }
        }
    }

    #[test]
    fn commutators() {
        let der4 = catalog::der4();
        let full = der4.full_subspace();
        let c = der4.commutator_subspace(&full, &full);
        assert_eq!(
            c.space,
            Subspace::from_spanning(&[v(&[1, 0, 0, 0]), v(&[0, 1, 0, 0])], 4).unwrap()
        );

        let ab = HomLieAlgebra::abelian("ab", 2, Matrix::identity(2)).unwrap();
        assert!(ab.derived_subalgebra().space.is_zero());

        let nil4 = catalog::nil4();
        assert_eq!(
            nil4.derived_subalgebra().space,
            Subspace::from_spanning(&[v(&[1, 0, 0, 0]), v(&[0, 0, 1, 0]), v(&[0, 0, 0, 1])], 4)
                .unwrap()
        );
    }

    #[test]
    fn quotients() {
        // nonnil3 / span{a3} has the 2-dimensional [x, y] = y bracket
        let q = catalog::nonnil3();
        let ideal = q.classify_span(&[v(&[0, 0, 1])]).unwrap();
        assert_eq!(ideal.kind, SubspaceKind::HomIdeal);
        let (qt, proj) = q.quotient_algebra(&ideal).unwrap();
        assert!(qt.validate().passed());
        assert_eq!(qt.dim, 2);
        assert_eq!(qt.bracket[0][1], v(&[0, 1]));
        assert_eq!(proj.rows(), 2);

        // quotient by zero ideal is an isomorphic copy
        let zero_ideal = q.classify_span(&[]).unwrap();
        let (copy, proj) = q.quotient_algebra(&zero_ideal).unwrap();
        assert_eq!(copy.bracket, q.bracket);
        assert!(proj.is_identity());

        // span{a1} in der4 is not an ideal: [a1, a3] = a2 escapes
        let der4 = catalog::der4();
        let not_ideal = HomSubspace {
            parent: der4.name.clone(),
            space: Subspace::from_spanning(&[v(&[1, 0, 0, 0])], 4).unwrap(),
            kind: SubspaceKind::Subspace,
        };
        match der4.quotient_algebra(&not_ideal) {
            Err(Error::NotAnIdeal { value, .. }) => assert_eq!(value, "[0,1,0,0]"),
            other => panic!("expected NotAnIdeal, got {other:?}"),
        }
    }

    #[test]
    fn quotient_of_valid_algebra_validates() {
        for l in [catalog::heis3(), catalog::gh3(), catalog::nonnil3(), catalog::nil4()] {
            // every lower-central term is a hom-ideal; quotient must validate
            let c = l.commutator_subspace(&l.full_subspace(), &l.full_subspace());
            if c.kind == SubspaceKind::HomIdeal {
                let (qt, _) = l.quotient_algebra(&c).unwrap();
                assert!(qt.validate().passed(), "{} quotient fails", l.name);
            }
        }
    }

    #[test]
    fn homomorphism_checks() {
        let heis = catalog::heis3();
        assert!(heis.is_homomorphism(&Matrix::identity(3), &heis).passed());
        let der4 = catalog::der4();
        // zero map is always a homomorphism
        assert!(der4.is_homomorphism(&Matrix::zero(3, 4), &catalog::heis3()).passed());
        // swapping a1 and a2 in der4 breaks the bracket
        let mut swap = Matrix::identity(4);
        swap.set(0, 0, int(0));
        swap.set(1, 1, int(0));
        swap.set(0, 1, int(1));
        swap.set(1, 0, int(1));
        assert!(!der4.is_homomorphism(&swap, &der4).passed());
    }

    #[test]
    fn direct_products() {
        let heis = catalog::heis3();
        let p = heis.direct_product(&heis);
        assert!(p.validate().passed());
        assert_eq!(p.dim, 6);
        assert_eq!(p.center().space.rank(), 2);

        let a = HomLieAlgebra::abelian("a", 1, Matrix::identity(1)).unwrap();
        let b = HomLieAlgebra::abelian("b", 1, Matrix::identity(1)).unwrap();
        let ab = a.direct_product(&b);
        assert_eq!(ab.dim, 2);
        assert!(ab.derived_subalgebra().space.is_zero());
        assert_eq!(ab.alpha.rank(), 2);
    }

    #[test]
    fn yau_twists() {
        let sl2 = catalog::sl2();
        // identity twist returns the original bracket
        let same = sl2.yau_twist(&Matrix::identity(3)).unwrap();
        assert_eq!(same.bracket, sl2.bracket);
        // zero twist gives the abelian algebra with alpha = 0
        let zero = sl2.yau_twist(&Matrix::zero(3, 3)).unwrap();
        assert!(zero.derived_subalgebra().space.is_zero());
        assert!(zero.validate().passed());
        // the automorphism e -> f, f -> e, h -> -h validates
        let mut swap = Matrix::zero(3, 3);
        swap.set(0, 0, int(-1));
        swap.set(1, 2, int(1));
        swap.set(2, 1, int(1));
        let twisted = sl2.yau_twist(&swap).unwrap();
        assert!(twisted.validate().passed());
        // a non-endomorphism is rejected
        let mut bad = Matrix::zero(3, 3);
        bad.set(0, 1, int(1));
        assert!(matches!(sl2.yau_twist(&bad), Err(Error::NotAnEndomorphism { .. })));
    }

    #[test]
    fn alpha_properties() {
        let weak2 = catalog::weak2();
        let props = weak2.alpha_props();
        assert!(!props.surjective);
        assert!(!props.alpha_identity);
        assert!(props.weak_alpha_identity);

        let sl2 = catalog::sl2();
        let props = sl2.alpha_props();
        assert!(props.surjective && props.alpha_identity && props.weak_alpha_identity);

        let ab = HomLieAlgebra::abelian("ab", 3, Matrix::zero(3, 3)).unwrap();
        assert!(ab.alpha_props().alpha_identity);
    }

    #[test]
    fn alpha_identity_implies_weak() {
        for l in [
            catalog::heis3(),
            catalog::der4(),
            catalog::weak2(),
            catalog::gh3(),
            catalog::nil4(),
            catalog::nonnil3(),
            catalog::sl2(),
        ] {
            let p = l.alpha_props();
            assert!(!p.alpha_identity || p.weak_alpha_identity, "{}", l.name);
        }
    }

    #[test]
    fn derived_subalgebra_is_alpha_invariant() {
        for l in [catalog::heis3(), catalog::weak2(), catalog::sl2(), catalog::nil4()] {
            let c = l.derived_subalgebra();
            assert!(l.is_alpha_invariant(&c.space), "{}", l.name);
        }
    }

    #[test]
    fn surjective_alpha_center_is_ideal() {
        for l in [catalog::sl2(), catalog::heis3(), catalog::weak2()] {
            if l.alpha_props().surjective {
                assert!(l.center_is_hom_ideal(), "{}", l.name);
            }
        }
    }

    #[test]
    fn restriction_round_trip() {
        let gh3 = catalog::gh3();
        let g = Subspace::from_spanning(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let (restricted, emb) = gh3.restrict_to(&g).unwrap();
        assert!(restricted.validate().passed());
        assert_eq!(restricted.dim, 2);
        assert_eq!(restricted.bracket[0][1], v(&[0, 1]));
        assert_eq!(emb.mul_vec(&v(&[1, 0])).unwrap(), v(&[1, 0, 0]));
    }
}
