//! Derived sequences, lower central series, central/abelian series
//! predicates, solvability/nilpotency classes with their preconditions,
//! k-Engel classification by polarization, and nilpotent-action checking.

use crate::action::HomAction;
use crate::algebra::{HomLieAlgebra, HomSubspace, SubspaceKind};
use crate::error::Error;
use crate::linalg::{is_zero_vector, unit_vector, Subspace, Vector};
use crate::prng::DeterministicRng;
use crate::Result;

/// Class verdicts for nilpotency and solvability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassVerdict {
    Class(usize),
    NotWithinBound(usize),
    /// The characterizing theorem's precondition is not met; the series is
    /// still reported.
    Indeterminate(String),
}

impl ClassVerdict {
    pub fn describe(&self) -> String {
        match self {
            ClassVerdict::Class(k) => k.to_string(),
            ClassVerdict::NotWithinBound(b) => format!("not_within_bound({b})"),
            ClassVerdict::Indeterminate(reason) => format!("indeterminate({reason})"),
        }
    }
}

/// A computed descending chain of terms with per-term Hom-ideal flags.
#[derive(Debug, Clone)]
pub struct SeriesReport {
    pub algebra: String,
    pub chain: Vec<HomSubspace>,
    pub each_is_ideal: Vec<bool>,
    pub stabilized_at: Option<usize>,
    pub class_verdict: ClassVerdict,
}

impl SeriesReport {
    pub fn term(&self, i: usize) -> &Subspace {
        &self.chain[i].space
    }

    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(|t| t.space.rank()).collect()
    }
}

fn iterate_series(
    q: &HomLieAlgebra,
    max_iter: usize,
    step: impl Fn(&HomSubspace) -> HomSubspace,
) -> (Vec<HomSubspace>, Vec<bool>, Option<usize>) {
    let mut chain = vec![q.full_subspace()];
    let mut stabilized_at = None;
    for i in 0..max_iter {
        let next = step(&chain[i]);
        if next.space == chain[i].space {
            stabilized_at = Some(i + 1);
            chain.push(next);
            break;
        }
        let vanished = next.space.is_zero();
        chain.push(next);
        if vanished {
            break;
        }
    }
    let ideal_flags = chain.iter().map(|t| t.kind == SubspaceKind::HomIdeal).collect();
    (chain, ideal_flags, stabilized_at)
}

/// Derived sequence `Q^(0) = Q`, `Q^(i+1) = [Q^(i), Q^(i)]`.
///
/// Terms need not be Hom-ideals; the per-term flag records what was
/// verified. The verdict reports the first vanishing index without any
/// solvability claim (see [`solvability_class`] for the gated verdict).
pub fn derived_sequence(q: &HomLieAlgebra, max_iter: usize) -> SeriesReport {
    let (chain, each_is_ideal, stabilized_at) =
        iterate_series(q, max_iter, |s| q.commutator_subspace(s, s));
    let class_verdict = match chain.iter().position(|t| t.space.is_zero()) {
        Some(k) => ClassVerdict::Class(k),
        None => ClassVerdict::NotWithinBound(max_iter),
    };
    SeriesReport {
        algebra: q.name.clone(),
        chain,
        each_is_ideal,
        stabilized_at,
        class_verdict,
    }
}

/// Lower central series `Q^[0] = Q`, `Q^[i+1] = [Q^[i], Q]`.
pub fn lower_central_series(q: &HomLieAlgebra, max_iter: usize) -> SeriesReport {
    let full = q.full_subspace();
    let (chain, each_is_ideal, stabilized_at) =
        iterate_series(q, max_iter, |s| q.commutator_subspace(s, &full));
    let class_verdict = match chain.iter().position(|t| t.space.is_zero()) {
        Some(k) => ClassVerdict::Class(k),
        None => ClassVerdict::NotWithinBound(max_iter),
    };
    SeriesReport {
        algebra: q.name.clone(),
        chain,
        each_is_ideal,
        stabilized_at,
        class_verdict,
    }
}

/// A strictly descending chain of subspaces of dimension n has length at
/// most n + 1, so this bound guarantees stabilization is observed.
pub fn default_max_iter(q: &HomLieAlgebra) -> usize {
    q.dim + 1
}

/// Nilpotency verdict: class k iff `Q^[k] = 0`; `non_nilpotent` when the
/// lower central series stabilizes nonzero. No alpha precondition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilpotencyVerdict {
    Class(usize),
    NonNilpotent,
}

impl NilpotencyVerdict {
    pub fn describe(&self) -> String {
        match self {
            NilpotencyVerdict::Class(k) => k.to_string(),
            NilpotencyVerdict::NonNilpotent => "non_nilpotent".to_string(),
        }
    }
}

pub fn nilpotency_class(q: &HomLieAlgebra) -> NilpotencyVerdict {
    let report = lower_central_series(q, default_max_iter(q));
    match report.class_verdict {
        ClassVerdict::Class(k) => NilpotencyVerdict::Class(k),
        _ => NilpotencyVerdict::NonNilpotent,
    }
}

/// Solvability verdict. Asserted only under the characterizing theorem's
/// precondition (alpha surjective or the weak alpha-identity); otherwise
/// indeterminate with the derived sequence attached.
#[derive(Debug, Clone)]
pub struct SolvabilityReport {
    pub verdict: ClassVerdict,
    pub derived: SeriesReport,
}

pub fn solvability_class(q: &HomLieAlgebra) -> SolvabilityReport {
    let derived = derived_sequence(q, default_max_iter(q));
    let props = q.alpha_props();
    let verdict = if props.surjective || props.weak_alpha_identity {
        match derived.class_verdict {
            ClassVerdict::Class(k) => ClassVerdict::Class(k),
            _ => ClassVerdict::NotWithinBound(default_max_iter(q)),
        }
    } else {
        ClassVerdict::Indeterminate(
            "neither alpha surjectivity nor the weak alpha-identity holds".to_string(),
        )
    };
    SolvabilityReport { verdict, derived }
}

/// Outcome of a series predicate with the first violation as witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCheck {
    pub holds: bool,
    pub witness: Option<String>,
}

fn check_chain_nested(q: &HomLieAlgebra, chain: &[HomSubspace]) -> Result<()> {
    if chain.is_empty()
        || !chain[0].space.is_zero()
        || !chain.last().expect("nonempty").space.is_full()
    {
        return Err(Error::ChainNotNested { index: 0 });
    }
    for i in 1..chain.len() {
        if chain[i].space.ambient_dim != q.dim
            || !chain[i].space.contains_subspace(&chain[i - 1].space)?
        {
            return Err(Error::ChainNotNested { index: i });
        }
    }
    Ok(())
}

/// `[Q, M_i] ⊆ M_{i-1}` for an ascending chain of verified Hom-ideals
/// `0 = M_0 ⊴ … ⊴ M_k = Q`.
pub fn is_central_series(q: &HomLieAlgebra, chain: &[HomSubspace]) -> Result<SeriesCheck> {
    check_chain_nested(q, chain)?;
    let full = q.full_subspace();
    for i in 1..chain.len() {
        let commutator = q.commutator_subspace(&full, &chain[i]);
        if !chain[i - 1].space.contains_subspace(&commutator.space)? {
            return Ok(SeriesCheck {
                holds: false,
                witness: Some(format!(
                    "[Q, M_{i}] = {} is not inside M_{}",
                    commutator.space.describe(),
                    i - 1
                )),
            });
        }
    }
    Ok(SeriesCheck {
        holds: true,
        witness: None,
    })
}

/// `[M_i, M_i] ⊆ M_{i-1}` for the same chain shape.
pub fn is_abelian_series(q: &HomLieAlgebra, chain: &[HomSubspace]) -> Result<SeriesCheck> {
    check_chain_nested(q, chain)?;
    for i in 1..chain.len() {
        let commutator = q.commutator_subspace(&chain[i], &chain[i]);
        if !chain[i - 1].space.contains_subspace(&commutator.space)? {
            return Ok(SeriesCheck {
                holds: false,
                witness: Some(format!(
                    "[M_{i}, M_{i}] = {} is not inside M_{}",
                    commutator.space.describe(),
                    i - 1
                )),
            });
        }
    }
    Ok(SeriesCheck {
        holds: true,
        witness: None,
    })
}

/// Engel classification up to a bound. Each k is tested independently.
#[derive(Debug, Clone)]
pub struct EngelReport {
    pub algebra: String,
    pub bound: usize,
    pub verdicts: Vec<(usize, bool)>,
    pub engel_class: Option<usize>,
}

/// Decides `R_x^k = 0 for all x` by full polarization: the symmetrization
/// of the multilinear chain `[... [[y, x_1], x_2] ..., x_k]` over the
/// x-slots must vanish on all basis multisets. Valid over a field of
/// characteristic zero; sampling cannot decide the universal quantifier,
/// polarization does.
pub fn is_k_engel(l: &HomLieAlgebra, k: usize) -> bool {
    assert!(k >= 1);
    if l.dim == 0 {
        return true;
    }
    let mut slots: Vec<usize> = vec![0; k];
    loop {
        for y in 0..l.dim {
            if !symmetrized_chain_vanishes(l, y, &slots) {
                return false;
            }
        }
        // next non-decreasing multiset of basis indices
        let mut pos = k;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            if slots[pos] + 1 < l.dim {
                let next = slots[pos] + 1;
                for s in slots.iter_mut().skip(pos) {
                    *s = next;
                }
                break;
            }
        }
    }
}

fn symmetrized_chain_vanishes(l: &HomLieAlgebra, y: usize, multiset: &[usize]) -> bool {
    let mut total = crate::linalg::zero_vector(l.dim);
    // multiset arrives sorted ascending; walk its distinct orderings once
    // each, so repeated entries do not inflate the work.
    let mut perm: Vec<usize> = multiset.to_vec();
    loop {
        let mut v = unit_vector(l.dim, y);
        for &x in &perm {
            v = l.bracket_eval(&v, &unit_vector(l.dim, x)).expect("dims agree");
            if is_zero_vector(&v) {
                break;
            }
        }
        crate::linalg::add_assign(&mut total, &v);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    is_zero_vector(&total)
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Direct evaluation `R_x^k(y)`; the sampling oracle for the polarization
/// path.
pub fn adjoint_power(l: &HomLieAlgebra, y: &[crate::rational::Scalar], x: &[crate::rational::Scalar], k: usize) -> Result<Vector> {
    let mut v = y.to_vec();
    for _ in 0..k {
        v = l.bracket_eval(&v, x)?;
    }
    Ok(v)
}

pub fn engel_class(l: &HomLieAlgebra, bound: usize) -> EngelReport {
    let mut verdicts = Vec::new();
    let mut engel_class = None;
    for k in 1..=bound {
        let ok = is_k_engel(l, k);
        verdicts.push((k, ok));
        if ok && engel_class.is_none() {
            engel_class = Some(k);
        }
    }
    EngelReport {
        algebra: l.name.clone(),
        bound,
        verdicts,
        engel_class,
    }
}

/// Sampling cross-check: for `count` deterministic pseudo-random x, test
/// `R_x^k(e_j) = 0`; returns false on the first nonzero value. Can refute
/// k-Engel but never establish it.
pub fn engel_sampling_agrees(l: &HomLieAlgebra, k: usize, count: usize) -> bool {
    let mut rng = DeterministicRng::new(0x9E3779B97F4A7C15);
    for _ in 0..count {
        let x = rng.vector(l.dim);
        for j in 0..l.dim {
            let v = adjoint_power(l, &unit_vector(l.dim, j), &x, k).expect("dims agree");
            if !is_zero_vector(&v) {
                return false;
            }
        }
    }
    true
}

/// Verdict of the nilpotent-action test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilpotentActionVerdict {
    /// The descending action chain vanishes and every term is a verified
    /// Hom-ideal of the target; reversed, it witnesses the action series.
    Yes { chain_dims: Vec<usize> },
    /// The chain stabilizes nonzero; vanishing is necessary, so this is a
    /// definitive no.
    No { stabilized_dim: usize },
    /// The chain vanishes but some term failed the Hom-ideal check.
    Indeterminate { failing_index: usize },
}

/// Computes the canonical candidate chain `L_0 = M`, `L_{i+1} = span of
/// ^Q L_i`, and classifies the outcome three ways.
pub fn acts_nilpotently(act: &HomAction) -> NilpotentActionVerdict {
    let m = &act.target;
    let mut chain: Vec<Subspace> = vec![Subspace::full(m.dim)];
    loop {
        let current = chain.last().expect("nonempty");
        let mut gens: Vec<Vector> = Vec::new();
        for i in 0..act.actor.dim {
            for b in &current.basis {
                gens.push(act.eval(&unit_vector(act.actor.dim, i), b).expect("dims agree"));
            }
        }
        let next = Subspace::from_spanning(&gens, m.dim).expect("dims agree");
        if next == *current {
            return NilpotentActionVerdict::No {
                stabilized_dim: next.rank(),
            };
        }
        let vanished = next.is_zero();
        chain.push(next);
        if vanished {
            break;
        }
    }
    for (i, term) in chain.iter().enumerate() {
        let classified = m.classify(term.clone());
        if classified.kind < SubspaceKind::HomIdeal {
            return NilpotentActionVerdict::Indeterminate { failing_index: i };
        }
    }
    NilpotentActionVerdict::Yes {
        chain_dims: chain.iter().map(Subspace::rank).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::HomAction;
    use crate::catalog;
    use crate::rational::int;

    fn v(entries: &[i64]) -> Vector {
        entries.iter().map(|&n| int(n)).collect()
    }

    fn span(l: &HomLieAlgebra, gens: &[&[i64]]) -> Subspace {
        Subspace::from_spanning(&gens.iter().map(|g| v(g)).collect::<Vec<_>>(), l.dim).unwrap()
    }

    #[test]
    fn derived_sequence_der4() {
        let q = catalog::der4();
        let report = derived_sequence(&q, default_max_iter(&q));
        assert_eq!(report.term(1), &span(&q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]));
        assert_eq!(report.term(2), &span(&q, &[&[1, 0, 0, 0]]));
        assert!(!report.each_is_ideal[2], "Q^(2) is not a hom-ideal");
        assert_eq!(report.class_verdict, ClassVerdict::Class(3));
    }

    #[test]
    fn derived_sequence_weak2_and_abelian() {
        let q = catalog::weak2();
        let report = derived_sequence(&q, default_max_iter(&q));
        assert_eq!(report.term(1), &span(&q, &[&[1, 0]]));
        assert!(report.term(2).is_zero());

        let ab = HomLieAlgebra::abelian("ab", 3, crate::linalg::Matrix::identity(3)).unwrap();
        let report = derived_sequence(&ab, default_max_iter(&ab));
        assert!(report.term(1).is_zero());
        assert_eq!(report.class_verdict, ClassVerdict::Class(1));
    }

    #[test]
    fn lower_central_series_fixtures() {
        let q = catalog::heis3();
        let report = lower_central_series(&q, default_max_iter(&q));
        assert_eq!(report.term(1), &span(&q, &[&[0, 0, 1]]));
        assert!(report.term(2).is_zero());
        assert!(report.each_is_ideal.iter().all(|&b| b));

        let w = catalog::weak2();
        let report = lower_central_series(&w, default_max_iter(&w));
        assert_eq!(report.term(1), &span(&w, &[&[1, 0]]));
        assert_eq!(report.stabilized_at, Some(2));
        assert!(matches!(report.class_verdict, ClassVerdict::NotWithinBound(_)));
    }

    #[test]
    fn nilpotency_classes() {
        assert_eq!(nilpotency_class(&catalog::heis3()), NilpotencyVerdict::Class(2));
        assert_eq!(nilpotency_class(&catalog::nonnil3()), NilpotencyVerdict::NonNilpotent);
        assert_eq!(nilpotency_class(&catalog::weak2()), NilpotencyVerdict::NonNilpotent);
        // [M, M] of nil4, restricted, has class 2
        let nil4 = catalog::nil4();
        let derived = nil4.derived_subalgebra();
        let (mm, _) = nil4.restrict_to(&derived.space).unwrap();
        assert_eq!(nilpotency_class(&mm), NilpotencyVerdict::Class(2));
    }

    #[test]
    fn solvability_classes() {
        let report = solvability_class(&catalog::weak2());
        assert_eq!(report.verdict, ClassVerdict::Class(2));

        let ab = HomLieAlgebra::abelian("ab", 2, crate::linalg::Matrix::identity(2)).unwrap();
        assert_eq!(solvability_class(&ab).verdict, ClassVerdict::Class(1));

        // der4 meets neither precondition: indeterminate, series attached
        let report = solvability_class(&catalog::der4());
        assert!(matches!(report.verdict, ClassVerdict::Indeterminate(_)));
        assert_eq!(report.derived.class_verdict, ClassVerdict::Class(3));
    }

    #[test]
    fn series_predicates() {
        let heis = catalog::heis3();
        let chain = vec![
            heis.classify_span(&[]).unwrap(),
            heis.classify_span(&[v(&[0, 0, 1])]).unwrap(),
            heis.full_subspace(),
        ];
        assert!(is_central_series(&heis, &chain).unwrap().holds);
        assert!(is_abelian_series(&heis, &chain).unwrap().holds);

        let weak2 = catalog::weak2();
        let chain = vec![
            weak2.classify_span(&[]).unwrap(),
            weak2.classify_span(&[v(&[1, 0])]).unwrap(),
            weak2.full_subspace(),
        ];
        assert!(is_abelian_series(&weak2, &chain).unwrap().holds);
        let central = is_central_series(&weak2, &chain).unwrap();
        assert!(!central.holds);
        assert!(central.witness.is_some());

        // single step over an abelian algebra: both predicates hold
        let ab = HomLieAlgebra::abelian("ab", 2, crate::linalg::Matrix::zero(2, 2)).unwrap();
        let chain = vec![ab.classify_span(&[]).unwrap(), ab.full_subspace()];
        assert!(is_central_series(&ab, &chain).unwrap().holds);
        assert!(is_abelian_series(&ab, &chain).unwrap().holds);

        // a non-nested chain errors with the index
        let chain = vec![
            heis.classify_span(&[v(&[1, 0, 0])]).unwrap(),
            heis.full_subspace(),
        ];
        assert!(matches!(
            is_central_series(&heis, &chain),
            Err(Error::ChainNotNested { .. })
        ));
    }

    #[test]
    fn derived_contained_in_lower_central() {
        for l in [
            catalog::der4(),
            catalog::weak2(),
            catalog::heis3(),
            catalog::gh3(),
            catalog::nil4(),
            catalog::nonnil3(),
            catalog::sl2(),
        ] {
            let derived = derived_sequence(&l, default_max_iter(&l));
            let lcs = lower_central_series(&l, default_max_iter(&l));
            for i in 0..derived.chain.len().min(lcs.chain.len()) {
                assert!(
                    lcs.term(i).contains_subspace(derived.term(i)).unwrap(),
                    "{} at index {i}",
                    l.name
                );
            }
        }
    }

    #[test]
    fn nilpotent_implies_derived_vanishes() {
        for l in [catalog::heis3(), catalog::nil4(), catalog::metab()] {
            if let NilpotencyVerdict::Class(k) = nilpotency_class(&l) {
                let derived = derived_sequence(&l, default_max_iter(&l));
                match derived.class_verdict {
                    ClassVerdict::Class(i) => assert!(i <= k, "{}", l.name),
                    other => panic!("derived sequence of nilpotent {} did not vanish: {other:?}", l.name),
                }
            }
        }
    }

    #[test]
    fn engel_classes() {
        // the derived subalgebra of weak2 is one-dimensional abelian
        let weak2 = catalog::weak2();
        let derived = weak2.derived_subalgebra();
        let (mm, _) = weak2.restrict_to(&derived.space).unwrap();
        let report = engel_class(&mm, mm.dim + 1);
        assert_eq!(report.engel_class, Some(1));

        let ab = HomLieAlgebra::abelian("ab", 3, crate::linalg::Matrix::zero(3, 3)).unwrap();
        assert_eq!(engel_class(&ab, 4).engel_class, Some(1));

        // sl2 is not k-Engel for any small k: ad(h) has nonzero eigenvalues
        let sl2 = catalog::sl2();
        let report = engel_class(&sl2, 4);
        assert_eq!(report.engel_class, None);

        // heis3 is 2-Engel but not 1-Engel
        let heis = catalog::heis3();
        assert!(!is_k_engel(&heis, 1));
        assert!(is_k_engel(&heis, 2));
    }

    #[test]
    fn engel_polarization_agrees_with_sampling() {
        for l in [catalog::heis3(), catalog::weak2(), catalog::gh3(), catalog::sl2()] {
            for k in 1..=3 {
                let decided = is_k_engel(&l, k);
                let sampled = engel_sampling_agrees(&l, k, 200);
                // sampling can only refute; when it refutes, polarization must too
                if !sampled {
                    assert!(!decided, "{} k={k}", l.name);
                }
                if decided {
                    assert!(sampled, "{} k={k}", l.name);
                }
            }
        }
    }

    #[test]
    fn nilpotent_action_verdicts() {
        // trivial action: chain vanishes in one step
        let act = HomAction::trivial(catalog::heis3(), catalog::weak2());
        match acts_nilpotently(&act) {
            NilpotentActionVerdict::Yes { chain_dims } => assert_eq!(chain_dims, vec![2, 0]),
            other => panic!("expected yes, got {other:?}"),
        }

        // nonnil3 acting on M/[M,M] by bracket: the chain stabilizes nonzero
        let q = catalog::nonnil3();
        let m = q.classify_span(&[v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let act = crate::action::action_by_bracket(&q, &q.full_subspace(), &m).unwrap();
        let mm = act.target.derived_subalgebra();
        let quotient_act = act.quotient_target(&mm).unwrap();
        assert!(matches!(
            acts_nilpotently(&quotient_act),
            NilpotentActionVerdict::No { stabilized_dim: 1 }
        ));

        // M itself acts nilpotently on M/[M,M] (the action is trivial there)
        let m_on_m = crate::action::action_by_bracket(&q, &m, &m).unwrap();
        let m_quot = m_on_m.quotient_target(&m_on_m.target.derived_subalgebra()).unwrap();
        assert!(matches!(
            acts_nilpotently(&m_quot),
            NilpotentActionVerdict::Yes { .. }
        ));
    }
}
