//! Hom-actions: tables, axiom validation, compatibility, induced
//! subspaces, semidirect products, and restriction/quotient plumbing.

use num_traits::Zero;

use crate::algebra::{HomLieAlgebra, HomSubspace, SubspaceKind, ValidationReport};
use crate::error::Error;
use crate::linalg::{
    add_scaled, is_zero_vector, unit_vector, zero_vector, Matrix, Subspace, Vector,
};
use crate::rational::{format_vector, Scalar};
use crate::Result;

/// A Hom-action of `actor` on `target`.
///
/// Stored actor-major: `table[i][j]` holds `^(e_i) f_j` in target
/// coordinates, matching the left-action notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomAction {
    pub actor: HomLieAlgebra,
    pub target: HomLieAlgebra,
    pub table: Vec<Vec<Vector>>,
}

impl HomAction {
    pub fn new(actor: HomLieAlgebra, target: HomLieAlgebra, table: Vec<Vec<Vector>>) -> Result<Self> {
        if table.len() != actor.dim {
            return Err(Error::DimensionMismatch {
                expected: actor.dim,
                got: table.len(),
            });
        }
        for row in &table {
            if row.len() != target.dim {
                return Err(Error::DimensionMismatch {
                    expected: target.dim,
                    got: row.len(),
                });
            }
            for entry in row {
                if entry.len() != target.dim {
                    return Err(Error::DimensionMismatch {
                        expected: target.dim,
                        got: entry.len(),
                    });
                }
            }
        }
        Ok(HomAction {
            actor,
            target,
            table,
        })
    }

    pub fn trivial(actor: HomLieAlgebra, target: HomLieAlgebra) -> Self {
        let table = vec![vec![zero_vector(target.dim); target.dim]; actor.dim];
        HomAction {
            actor,
            target,
            table,
        }
    }

    /// The self-action of an algebra by its own bracket.
    pub fn bracket_self(l: &HomLieAlgebra) -> Self {
        let table = (0..l.dim)
            .map(|i| (0..l.dim).map(|j| l.bracket[i][j].clone()).collect())
            .collect();
        HomAction {
            actor: l.clone(),
            target: l.clone(),
            table,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.table.iter().all(|row| row.iter().all(|v| is_zero_vector(v)))
    }

    /// Bilinear extension `^x v`.
    pub fn eval(&self, x: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        if x.len() != self.actor.dim {
            return Err(Error::DimensionMismatch {
                expected: self.actor.dim,
                got: x.len(),
            });
        }
        if v.len() != self.target.dim {
            return Err(Error::DimensionMismatch {
                expected: self.target.dim,
                got: v.len(),
            });
        }
        let mut out = zero_vector(self.target.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() || is_zero_vector(&self.table[i][j]) {
                    continue;
                }
                let c = xi * vj;
                add_scaled(&mut out, &c, &self.table[i][j]);
            }
        }
        Ok(out)
    }

    /// Checks the three Hom-action axioms on all basis tuples; residuals
    /// must be exactly zero. Failures are data, not errors.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let l = &self.actor;
        let m = &self.target;
        let alpha_l: Vec<Vector> = l.alpha.columns();
        let alpha_m: Vec<Vector> = m.alpha.columns();
        // a) ^([x,y]) alpha_M(m) = ^(alpha_L x)(^y m) - ^(alpha_L y)(^x m)
        for i in 0..l.dim {
            for j in 0..l.dim {
                for k in 0..m.dim {
                    let mut lhs = self
                        .eval(&l.bracket[i][j], &alpha_m[k])
                        .expect("dims agree");
                    let r1 = self.eval(&alpha_l[i], &self.table[j][k]).expect("dims agree");
                    let r2 = self.eval(&alpha_l[j], &self.table[i][k]).expect("dims agree");
                    crate::linalg::sub_assign(&mut lhs, &r1);
                    crate::linalg::add_assign(&mut lhs, &r2);
                    if !is_zero_vector(&lhs) {
                        report.push("action axiom a", vec![i + 1, j + 1, k + 1], lhs);
                    }
                }
            }
        }
        // b) ^(alpha_L x)[m, m'] = [^x m, alpha_M m'] + [alpha_M m, ^x m']
        for i in 0..l.dim {
            for j in 0..m.dim {
                for k in 0..m.dim {
                    let mut lhs = self
                        .eval(&alpha_l[i], &m.bracket[j][k])
                        .expect("dims agree");
                    let r1 = m
                        .bracket_eval(&self.table[i][j], &alpha_m[k])
                        .expect("dims agree");
                    let r2 = m
                        .bracket_eval(&alpha_m[j], &self.table[i][k])
                        .expect("dims agree");
                    crate::linalg::sub_assign(&mut lhs, &r1);
                    crate::linalg::sub_assign(&mut lhs, &r2);
                    if !is_zero_vector(&lhs) {
                        report.push("action axiom b", vec![i + 1, j + 1, k + 1], lhs);
                    }
                }
            }
        }
        // c) alpha_M(^x m) = ^(alpha_L x) alpha_M(m)
        for i in 0..l.dim {
            for j in 0..m.dim {
                let mut lhs = m.apply_alpha(&self.table[i][j]).expect("dims agree");
                let rhs = self.eval(&alpha_l[i], &alpha_m[j]).expect("dims agree");
                crate::linalg::sub_assign(&mut lhs, &rhs);
                if !is_zero_vector(&lhs) {
                    report.push("action axiom c", vec![i + 1, j + 1], lhs);
                }
            }
        }
        report
    }

    /// Span of the table entries inside the target, classified there.
    pub fn induced_subspace(&self) -> HomSubspace {
        let mut gens = Vec::new();
        for row in &self.table {
            for entry in row {
                gens.push(entry.clone());
            }
        }
        let space = Subspace::from_spanning(&gens, self.target.dim).expect("dims agree");
        self.target.classify(space)
    }

    /// Restriction to a subalgebra of the actor and an invariant subspace
    /// of the target, in restricted coordinates.
    pub fn restrict(&self, sub_actor: &Subspace, sub_target: &Subspace) -> Result<HomAction> {
        let (actor, _) = self.actor.restrict_to(sub_actor)?;
        let (target, _) = self.target.restrict_to(sub_target)?;
        let mut table = vec![vec![zero_vector(target.dim); target.dim]; actor.dim];
        for (i, a) in sub_actor.basis.iter().enumerate() {
            for (j, t) in sub_target.basis.iter().enumerate() {
                let value = self.eval(a, t)?;
                match sub_target.coordinates(&value)? {
                    Some(coords) => table[i][j] = coords,
                    None => {
                        return Err(Error::NotClosed {
                            actor: i + 1,
                            target: j + 1,
                            value: format_vector(&value),
                        })
                    }
                }
            }
        }
        HomAction::new(actor, target, table)
    }

    /// Same table with a replacement actor presented through an injection
    /// `embed : new_actor -> actor`.
    pub fn pull_actor_along(&self, new_actor: &HomLieAlgebra, embed: &Matrix) -> Result<HomAction> {
        let mut table = vec![vec![zero_vector(self.target.dim); self.target.dim]; new_actor.dim];
        for i in 0..new_actor.dim {
            let image = embed.mul_vec(&unit_vector(new_actor.dim, i))?;
            for j in 0..self.target.dim {
                table[i][j] = self.eval(&image, &unit_vector(self.target.dim, j))?;
            }
        }
        HomAction::new(new_actor.clone(), self.target.clone(), table)
    }

    /// Same table with a replacement target presented through an injection
    /// `embed : new_target -> target`; every value must come back through
    /// the embedding.
    pub fn pull_target_along(
        &self,
        new_target: &HomLieAlgebra,
        embed: &Matrix,
    ) -> Result<HomAction> {
        let mut table = vec![vec![zero_vector(new_target.dim); new_target.dim]; self.actor.dim];
        for i in 0..self.actor.dim {
            for j in 0..new_target.dim {
                let t = embed.mul_vec(&unit_vector(new_target.dim, j))?;
                let value = self.eval(&unit_vector(self.actor.dim, i), &t)?;
                match embed.solve(&value)? {
                    Some(coords) => table[i][j] = coords,
                    None => {
                        return Err(Error::NotClosed {
                            actor: i + 1,
                            target: j + 1,
                            value: format_vector(&value),
                        })
                    }
                }
            }
        }
        HomAction::new(self.actor.clone(), new_target.clone(), table)
    }

    /// Induced action on the quotient of the target by an ideal that is
    /// invariant under the actor.
    pub fn quotient_target(&self, ideal: &HomSubspace) -> Result<HomAction> {
        for i in 0..self.actor.dim {
            for b in &ideal.space.basis {
                let image = self.eval(&unit_vector(self.actor.dim, i), b)?;
                if !ideal.space.contains(&image)? {
                    return Err(Error::WellDefinedness {
                        stage: format!("quotient action by {}", ideal.space.describe()),
                        witness: format_vector(b),
                    });
                }
            }
        }
        let (quot, projection) = self.target.quotient_algebra(ideal)?;
        let quotient = crate::linalg::QuotientSpace::new(self.target.dim, ideal.space.clone())?;
        let mut table = vec![vec![zero_vector(quot.dim); quot.dim]; self.actor.dim];
        for i in 0..self.actor.dim {
            for (j, s) in quotient.section.iter().enumerate() {
                let value = self.eval(&unit_vector(self.actor.dim, i), s)?;
                table[i][j] = projection.mul_vec(&value)?;
            }
        }
        HomAction::new(self.actor.clone(), quot, table)
    }
}

/// Bracket action of a verified subalgebra on a verified Hom-ideal of the
/// same parent algebra, in restricted coordinates.
pub fn action_by_bracket(
    parent: &HomLieAlgebra,
    actor_sub: &HomSubspace,
    ideal_sub: &HomSubspace,
) -> Result<HomAction> {
    if actor_sub.kind < SubspaceKind::Subalgebra {
        return Err(Error::NotASubalgebra {
            space: actor_sub.space.describe(),
            witness: "kind not verified".to_string(),
        });
    }
    if ideal_sub.kind < SubspaceKind::HomIdeal {
        return Err(Error::NotAnIdeal {
            space: ideal_sub.space.describe(),
            h: String::new(),
            x: String::new(),
            value: "kind not verified".to_string(),
        });
    }
    let (actor, _) = parent.restrict_to(&actor_sub.space)?;
    let (target, _) = parent.restrict_to(&ideal_sub.space)?;
    let mut table = vec![vec![zero_vector(target.dim); target.dim]; actor.dim];
    for (i, a) in actor_sub.space.basis.iter().enumerate() {
        for (j, b) in ideal_sub.space.basis.iter().enumerate() {
            let value = parent.bracket_eval(a, b)?;
            table[i][j] = ideal_sub
                .space
                .coordinates(&value)?
                .expect("ideal absorbs brackets");
        }
    }
    HomAction::new(actor, target, table)
}

/// A compatible pair of mutual actions: `forward` is M acting on N,
/// `backward` is N acting on M. Construction verifies compatibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionPair {
    pub forward: HomAction,
    pub backward: HomAction,
}

impl ActionPair {
    pub fn m(&self) -> &HomLieAlgebra {
        &self.forward.actor
    }

    pub fn n(&self) -> &HomLieAlgebra {
        &self.forward.target
    }

    /// Verifies both compatibility identities over all basis tuples, then
    /// packages the pair. The failure carries the witness tuple and both
    /// sides' values.
    pub fn check_compatible(forward: HomAction, backward: HomAction) -> Result<ActionPair> {
        if forward.actor.dim != backward.target.dim || forward.target.dim != backward.actor.dim {
            return Err(Error::DimensionMismatch {
                expected: forward.actor.dim,
                got: backward.target.dim,
            });
        }
        if let Some(witness) = compatibility_witness(&forward, &backward) {
            return Err(Error::IncompatibleActions { witness });
        }
        Ok(ActionPair { forward, backward })
    }

    /// Both actions trivial; compatible by construction.
    pub fn trivial(m: &HomLieAlgebra, n: &HomLieAlgebra) -> ActionPair {
        ActionPair {
            forward: HomAction::trivial(m.clone(), n.clone()),
            backward: HomAction::trivial(n.clone(), m.clone()),
        }
    }

    /// The bracket self-pair of one algebra.
    pub fn bracket_self_pair(l: &HomLieAlgebra) -> ActionPair {
        let act = HomAction::bracket_self(l);
        ActionPair::check_compatible(act.clone(), act)
            .expect("bracket self-actions are always compatible")
    }

    /// Mutual bracket actions of two verified Hom-ideals of one algebra.
    pub fn bracket_pair_of_ideals(
        parent: &HomLieAlgebra,
        a: &HomSubspace,
        b: &HomSubspace,
    ) -> Result<ActionPair> {
        let forward = action_by_bracket(parent, a, b)?;
        let backward = action_by_bracket(parent, b, a)?;
        ActionPair::check_compatible(forward, backward)
    }

    pub fn swapped(&self) -> ActionPair {
        ActionPair {
            forward: self.backward.clone(),
            backward: self.forward.clone(),
        }
    }
}

/// First failing compatibility instance, if any:
/// `^(^m n) m' = [m', ^n m]` and `^(^n m) n' = [n', ^m n]`.
pub fn compatibility_witness(forward: &HomAction, backward: &HomAction) -> Option<String> {
    let m_alg = &forward.actor;
    let n_alg = &forward.target;
    for i in 0..m_alg.dim {
        for j in 0..n_alg.dim {
            // ^m n with m = e_i, n = f_j
            let mn = &forward.table[i][j];
            // ^n m
            let nm = &backward.table[j][i];
            for k in 0..m_alg.dim {
                let lhs = backward
                    .eval(mn, &unit_vector(m_alg.dim, k))
                    .expect("dims agree");
                let rhs = m_alg
                    .bracket_eval(&unit_vector(m_alg.dim, k), nm)
                    .expect("dims agree");
                if lhs != rhs {
                    return Some(format!(
                        "^(^e{} f{}) e{} = {} but [e{}, ^f{} e{}] = {}",
                        i + 1,
                        j + 1,
                        k + 1,
                        format_vector(&lhs),
                        k + 1,
                        j + 1,
                        i + 1,
                        format_vector(&rhs)
                    ));
                }
            }
            for l in 0..n_alg.dim {
                let lhs = forward
                    .eval(nm, &unit_vector(n_alg.dim, l))
                    .expect("dims agree");
                let rhs = n_alg
                    .bracket_eval(&unit_vector(n_alg.dim, l), mn)
                    .expect("dims agree");
                if lhs != rhs {
                    return Some(format!(
                        "^(^f{} e{}) f{} = {} but [f{}, ^e{} f{}] = {}",
                        j + 1,
                        i + 1,
                        l + 1,
                        format_vector(&lhs),
                        l + 1,
                        i + 1,
                        j + 1,
                        format_vector(&rhs)
                    ));
                }
            }
        }
    }
    None
}

/// The semidirect product `M ⋊ L` for an action of L on M, with the two
/// injections and the projection onto L.
#[derive(Debug, Clone)]
pub struct Semidirect {
    pub algebra: HomLieAlgebra,
    pub target_injection: Matrix,
    pub actor_injection: Matrix,
    pub actor_projection: Matrix,
    pub target_block: HomSubspace,
}

/// Builds `M ⋊ L`. The full Hom-Jacobi of the constructed algebra is
/// re-validated rather than trusted; an axiom-valid action that fails to
/// produce a Hom-Lie semidirect product is reported as
/// `ActionNotAdmissible` with the failing witness.
pub fn semidirect(act: &HomAction) -> Result<Semidirect> {
    let m = &act.target;
    let l = &act.actor;
    let dim = m.dim + l.dim;
    let alpha_l: Vec<Vector> = l.alpha.columns();
    let pad = |mv: &Vector| -> Vector {
        let mut v = mv.clone();
        v.extend(zero_vector(l.dim));
        v
    };
    let mut bracket = vec![vec![zero_vector(dim); dim]; dim];
    for i in 0..m.dim {
        for j in 0..m.dim {
            bracket[i][j] = pad(&m.bracket[i][j]);
        }
    }
    for q in 0..l.dim {
        for p in 0..m.dim {
            // [(0, x), (m, 0)] = (^(alpha_L x) m, 0)
            let value = act.eval(&alpha_l[q], &unit_vector(m.dim, p))?;
            bracket[m.dim + q][p] = pad(&value);
            bracket[p][m.dim + q] = crate::linalg::negate(&bracket[m.dim + q][p]);
        }
    }
    for q in 0..l.dim {
        for r in 0..l.dim {
            let mut v = zero_vector(m.dim);
            v.extend(l.bracket[q][r].iter().cloned());
            bracket[m.dim + q][m.dim + r] = v;
        }
    }
    let mut alpha = Matrix::zero(dim, dim);
    for i in 0..m.dim {
        for j in 0..m.dim {
            alpha.set(i, j, m.alpha.at(i, j).clone());
        }
    }
    for i in 0..l.dim {
        for j in 0..l.dim {
            alpha.set(m.dim + i, m.dim + j, l.alpha.at(i, j).clone());
        }
    }
    let algebra = HomLieAlgebra {
        name: format!("{}:{}", m.name, l.name),
        dim,
        bracket,
        alpha,
    };
    let report = algebra.validate();
    if !report.passed() {
        return Err(Error::ActionNotAdmissible {
            witness: report.failures[0].describe(),
        });
    }
    let mut target_injection = Matrix::zero(dim, m.dim);
    for i in 0..m.dim {
        target_injection.set(i, i, crate::rational::one());
    }
    let mut actor_injection = Matrix::zero(dim, l.dim);
    for i in 0..l.dim {
        actor_injection.set(m.dim + i, i, crate::rational::one());
    }
    let mut actor_projection = Matrix::zero(l.dim, dim);
    for i in 0..l.dim {
        actor_projection.set(i, m.dim + i, crate::rational::one());
    }
    let block = algebra.classify(Subspace::from_spanning(
        &(0..m.dim).map(|i| unit_vector(dim, i)).collect::<Vec<_>>(),
        dim,
    )?);
    if block.kind < SubspaceKind::HomIdeal {
        return Err(Error::InvariantViolation {
            context: "semidirect target block is not a hom-ideal".to_string(),
        });
    }
    let proj_report = algebra.is_homomorphism(&actor_projection, l);
    if !proj_report.passed() {
        return Err(Error::InvariantViolation {
            context: "semidirect projection is not a homomorphism".to_string(),
        });
    }
    Ok(Semidirect {
        algebra,
        target_injection,
        actor_injection,
        actor_projection,
        target_block: block,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::int;

    fn v(entries: &[i64]) -> Vector {
        entries.iter().map(|&n| int(n)).collect()
    }

    fn gh3_pair() -> ActionPair {
        let gh3 = catalog::gh3();
        let g = gh3
            .classify_span(&[v(&[1, 0, 0]), v(&[0, 1, 0])])
            .unwrap();
        let h = gh3
            .classify_span(&[v(&[0, 1, 0]), v(&[0, 0, 1])])
            .unwrap();
        ActionPair::bracket_pair_of_ideals(&gh3, &g, &h).unwrap()
    }

    #[test]
    fn bracket_action_on_ideal_validates() {
        let pair = gh3_pair();
        assert!(pair.forward.validate().passed());
        assert!(pair.backward.validate().passed());
        // H acts on G: ^(a2) a1 = -a2, ^(a3) a2 = -a2, in G coordinates
        assert_eq!(pair.backward.table[0][0], v(&[0, -1]));
        assert_eq!(pair.backward.table[1][1], v(&[0, -1]));
        assert_eq!(pair.backward.table[0][1], v(&[0, 0]));
        assert_eq!(pair.backward.table[1][0], v(&[0, 0]));
    }

    #[test]
    fn trivial_actions_validate_and_are_compatible() {
        let m = catalog::heis3();
        let n = catalog::weak2();
        let pair = ActionPair::trivial(&m, &n);
        assert!(pair.forward.validate().passed());
        assert!(compatibility_witness(&pair.forward, &pair.backward).is_none());
    }

    #[test]
    fn incompatible_pair_has_witness() {
        // bracket action one way, trivial the other: the mixed identities fail
        let gh3 = catalog::gh3();
        let g = gh3.classify_span(&[v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let h = gh3.classify_span(&[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let fwd = action_by_bracket(&gh3, &g, &h).unwrap();
        let bwd = HomAction::trivial(fwd.target.clone(), fwd.actor.clone());
        assert!(compatibility_witness(&fwd, &bwd).is_some());
        assert!(matches!(
            ActionPair::check_compatible(fwd, bwd),
            Err(Error::IncompatibleActions { .. })
        ));
    }

    #[test]
    fn two_ideals_always_compatible() {
        // executable form of the two-ideal statement, over catalog fixtures
        for l in [catalog::gh3(), catalog::heis3(), catalog::nil4(), catalog::nonnil3()] {
            let derived = l.derived_subalgebra();
            if derived.kind == SubspaceKind::HomIdeal {
                let full = l.full_subspace();
                let pair = ActionPair::bracket_pair_of_ideals(&l, &derived, &full);
                assert!(pair.is_ok(), "{}", l.name);
            }
        }
    }

    #[test]
    fn induced_subspaces() {
        let pair = gh3_pair();
        // ^H G = span{a2} in G coordinates = span{(0,1)}
        let hg = pair.backward.induced_subspace();
        assert_eq!(hg.space, Subspace::from_spanning(&[v(&[0, 1])], 2).unwrap());
        let gh = pair.forward.induced_subspace();
        assert_eq!(gh.space, Subspace::from_spanning(&[v(&[1, 0])], 2).unwrap());

        let trivial = HomAction::trivial(catalog::heis3(), catalog::weak2());
        assert!(trivial.induced_subspace().space.is_zero());
    }

    #[test]
    fn perfpair_induced_subspaces_are_full() {
        let (m, n, fwd, bwd) = catalog::perfpair_actions();
        assert!(fwd.validate().passed());
        assert!(bwd.validate().passed());
        assert!(fwd.induced_subspace().space.is_full(), "^M N = N");
        assert!(bwd.induced_subspace().space.is_full(), "^N M = M");
        assert_eq!(m.dim, 3);
        assert_eq!(n.dim, 4);
        // the declared tables are not a compatible pair; the witness is stable
        let witness = compatibility_witness(&fwd, &bwd);
        assert!(witness.is_some());
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct_product() {
        let m = catalog::heis3();
        let l = catalog::weak2();
        let act = HomAction::trivial(l.clone(), m.clone());
        let sd = semidirect(&act).unwrap();
        let dp = m.direct_product(&l);
        assert_eq!(sd.algebra.bracket, dp.bracket);
        assert_eq!(sd.algebra.alpha, dp.alpha);
    }

    #[test]
    fn semidirect_of_self_action() {
        let l = catalog::heis3();
        let act = HomAction::bracket_self(&l);
        let sd = semidirect(&act).unwrap();
        assert_eq!(sd.algebra.dim, 6);
        assert!(sd.algebra.validate().passed());
        assert_eq!(sd.target_block.kind, SubspaceKind::HomIdeal);
    }

    #[test]
    fn semidirect_abelian_on_weak2() {
        let m = HomLieAlgebra::abelian("a1", 1, Matrix::zero(1, 1)).unwrap();
        let l = catalog::weak2();
        let act = HomAction::trivial(l.clone(), m.clone());
        let sd = semidirect(&act).unwrap();
        assert_eq!(sd.algebra.dim, 3);
        assert!(sd.algebra.validate().passed());
    }

    #[test]
    fn restriction_examples() {
        let gh3 = catalog::gh3();
        let self_action = HomAction::bracket_self(&gh3);
        let g = Subspace::from_spanning(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let h = Subspace::from_spanning(&[v(&[0, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        let restricted = self_action.restrict(&g, &h).unwrap();
        let pair = gh3_pair();
        assert_eq!(restricted.table, pair.forward.table);

        // restriction to a rank-0 target is the empty action
        let zero = Subspace::zero(3);
        let to_zero = self_action.restrict(&g, &zero).unwrap();
        assert!(to_zero.is_trivial());
    }

    #[test]
    fn restriction_not_closed() {
        let (_, _, fwd, _) = catalog::perfpair_actions();
        // target span{a3} inside N is not invariant: ^(e2) a3 = a1 escapes
        let full_m = Subspace::full(3);
        let a3 = Subspace::from_spanning(&[v(&[0, 0, 1, 0])], 4).unwrap();
        match fwd.restrict(&full_m, &a3) {
            Err(Error::NotClosed { value, .. }) => assert_eq!(value, "[0,1,0,0]"),
            other => panic!("expected NotClosed, got {other:?}"),
        }
    }

    #[test]
    fn quotient_action_examples() {
        // bracket self-action of nonnil3 onto the quotient by span{a3}
        let q = catalog::nonnil3();
        let act = HomAction::bracket_self(&q);
        let ideal = q.classify_span(&[v(&[0, 0, 1])]).unwrap();
        let quotiented = act.quotient_target(&ideal).unwrap();
        assert!(quotiented.validate().passed());
        assert_eq!(quotiented.target.dim, 2);

        // quotient by the zero ideal leaves the table unchanged
        let zero = q.classify_span(&[]).unwrap();
        let same = act.quotient_target(&zero).unwrap();
        assert_eq!(same.table, act.table);

        // a non-invariant ideal is rejected with a witness
        let der4 = catalog::der4();
        let act4 = HomAction::bracket_self(&der4);
        let bad = HomSubspace {
            parent: der4.name.clone(),
            space: Subspace::from_spanning(&[v(&[0, 1, 0, 0])], 4).unwrap(),
            kind: SubspaceKind::HomIdeal,
        };
        assert!(matches!(
            act4.quotient_target(&bad),
            Err(Error::WellDefinedness { .. }) | Err(Error::NotAnIdeal { .. })
        ));
    }
}
