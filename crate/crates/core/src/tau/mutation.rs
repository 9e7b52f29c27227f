//! Mutation of support τ-tilting pairs.
//!
//! Left mutation at a summand `X ∉ Fac U` of `M = X ⊕ U` replaces `X` by the
//! cokernel of a minimal left `add U`-approximation, or moves a vertex into
//! the support part when that cokernel vanishes. Every other mutation is a
//! left mutation on the opposite side of the duality
//! `(M, P)† = (Tr M ⊕ P*, M_pr*)` between pairs over `A` and over `A^op`.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{opposite, BoundQuiverAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Span};
use crate::rep::{cokernel, decompose, hom_basis, is_isomorphic, kernel, projective_cover, ModMap, Rep};

use super::pair::{validate_with, PairStatus, Quotients, SttPair};
use super::transpose;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SummandRef {
    /// Index into the module part.
    Module(usize),
    /// A vertex of the support part.
    Support(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// The new pair is generated by the old one.
    Left,
    /// The new pair generates the old one.
    Right,
}

#[derive(Clone, Debug)]
pub struct Mutation {
    pub pair: SttPair,
    pub direction: Direction,
    /// The summand of the new pair that was not in the old one.
    pub introduced: SummandRef,
}

/// `N ∈ Fac M`: the evaluation map `M ⊗ Hom(M, N) → N` is onto.
pub fn in_fac(m: &Rep, n: &Rep) -> bool {
    if n.is_zero() {
        return true;
    }
    let basis = hom_basis(m, n);
    (0..n.dims().len()).all(|v| {
        let mut span = Span::new(n.field(), n.dims()[v]);
        for h in &basis {
            for c in h.blocks[v].columns() {
                span.insert(&c);
            }
        }
        span.dim() == n.dims()[v]
    })
}

fn assemble(x: &Rep, targets: &[Rep], copies: &[(usize, ModMap)]) -> ModMap {
    let algebra = x.algebra();
    let reps: Vec<&Rep> = copies.iter().map(|(t, _)| &targets[*t]).collect();
    let target = Rep::direct_sum_all(algebra, reps.iter().copied());
    let blocks = (0..x.dims().len())
        .map(|v| {
            copies
                .iter()
                .fold(Matrix::zeros(x.field(), 0, x.dims()[v]), |acc, (_, h)| {
                    acc.vstack(&h.blocks[v])
                })
        })
        .collect();
    ModMap {
        source: x.clone(),
        target,
        blocks,
    }
}

fn is_left_approximation(x: &Rep, targets: &[Rep], g: &ModMap) -> bool {
    targets.iter().all(|t| {
        let needed = hom_basis(x, t).len();
        if needed == 0 {
            return true;
        }
        let through: Vec<_> = hom_basis(&g.target, t).iter().map(|s| g.then(s).flatten()).collect();
        let len = through.first().map_or(0, Vec::len);
        Span::from_vectors(x.field(), len, &through).dim() == needed
    })
}

/// A minimal left `add(targets)`-approximation of `x`, found by deleting
/// copies from the universal map while it still approximates.
pub fn minimal_left_approximation(x: &Rep, targets: &[Rep]) -> ModMap {
    let mut copies: Vec<(usize, ModMap)> = Vec::new();
    for (t, rep) in targets.iter().enumerate() {
        for h in hom_basis(x, rep) {
            copies.push((t, h));
        }
    }
    for k in (0..copies.len()).rev() {
        let mut trial = copies.clone();
        trial.remove(k);
        if is_left_approximation(x, targets, &assemble(x, targets, &trial)) {
            copies = trial;
        }
    }
    assemble(x, targets, &copies)
}

/// The vertex of `P(i) ≅ X`, if `X` is projective.
fn projective_vertex(x: &Rep) -> Option<usize> {
    let (vs, cover) = projective_cover(x);
    (vs.len() == 1 && kernel(&cover).0.is_zero()).then(|| vs[0])
}

fn certify(quotients: &Quotients, pair: &SttPair) -> Result<()> {
    let m = pair.module_sum(quotients.algebra());
    let v = validate_with(quotients, &m, &pair.support)?;
    if v.status != PairStatus::ValidStt {
        return Err(Error::MutationFailed(v.diagnostic.unwrap_or_default()));
    }
    if pair.size() != quotients.algebra().vertex_count() {
        return Err(Error::MutationFailed("wrong number of summands".into()));
    }
    Ok(())
}

fn left_mutate(pair: &SttPair, k: usize) -> Result<(SttPair, SummandRef)> {
    let x = &pair.module[k];
    let algebra = x.algebra();
    let mut rest = pair.module.clone();
    rest.remove(k);
    let f = minimal_left_approximation(x, &rest);
    let (y, _) = cokernel(&f);
    if y.is_zero() {
        let u = Rep::direct_sum_all(algebra, &rest);
        let free: Vec<usize> = (0..algebra.vertex_count())
            .filter(|v| !pair.support.contains(v) && u.dims()[*v] == 0)
            .collect();
        let [v] = free.as_slice() else {
            return Err(Error::MutationFailed(format!(
                "{} candidate vertices leave the support",
                free.len()
            )));
        };
        let mut support = pair.support.clone();
        support.insert(*v);
        return Ok((SttPair { module: rest, support }, SummandRef::Support(*v)));
    }
    let d = decompose(&y)?;
    let mut fresh = Vec::new();
    for r in d.representatives() {
        let mut known = false;
        for u in &rest {
            if is_isomorphic(r, u)? {
                known = true;
                break;
            }
        }
        if !known {
            fresh.push(r.clone());
        }
    }
    if fresh.len() != 1 {
        return Err(Error::MutationFailed(format!(
            "cokernel has {} new indecomposable summands",
            fresh.len()
        )));
    }
    let mut module = rest;
    module.insert(k, fresh.pop().expect("one summand"));
    Ok((
        SttPair {
            module,
            support: pair.support.clone(),
        },
        SummandRef::Module(k),
    ))
}

/// `(M, P)†` over `to`, the opposite of the algebra of `pair`, with the
/// image of each summand.
fn dagger(to: &Arc<BoundQuiverAlgebra>, pair: &SttPair) -> (SttPair, impl Fn(SummandRef) -> SummandRef) {
    let mut module = Vec::new();
    let mut support = BTreeSet::new();
    let mut module_image = Vec::new();
    for x in &pair.module {
        match projective_vertex(x) {
            Some(v) => {
                support.insert(v);
                module_image.push(SummandRef::Support(v));
            }
            None => {
                module_image.push(SummandRef::Module(module.len()));
                module.push(transpose(x, to));
            }
        }
    }
    let mut support_image = Vec::new();
    for &v in &pair.support {
        support_image.push((v, SummandRef::Module(module.len())));
        module.push(Rep::projective(to, v));
    }
    let map = move |s: SummandRef| match s {
        SummandRef::Module(k) => module_image[k],
        SummandRef::Support(v) => support_image.iter().find(|(w, _)| *w == v).expect("support vertex").1,
    };
    (SttPair { module, support }, map)
}

/// Mutation at single summands, with both sides of the duality prepared.
pub struct Mutator {
    quotients: Quotients,
    op: Arc<BoundQuiverAlgebra>,
}

impl Mutator {
    pub fn new(algebra: &Arc<BoundQuiverAlgebra>) -> Mutator {
        let op = Arc::new(opposite(algebra));
        Mutator {
            quotients: Quotients::new(algebra),
            op,
        }
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        self.quotients.algebra()
    }

    pub fn quotients(&self) -> &Quotients {
        &self.quotients
    }

    pub fn mutate(&self, pair: &SttPair, at: SummandRef) -> Result<Mutation> {
        let a = self.quotients.algebra();
        let op = &self.op;
        let left = match at {
            SummandRef::Module(k) => {
                let x = pair
                    .module
                    .get(k)
                    .ok_or_else(|| Error::invalid("mutate", format!("no summand {k}")))?;
                let mut rest = pair.module.clone();
                rest.remove(k);
                !in_fac(&Rep::direct_sum_all(a, &rest), x)
            }
            SummandRef::Support(v) => {
                if !pair.support.contains(&v) {
                    return Err(Error::invalid(
                        "mutate",
                        format!("vertex {v} is not in the support part"),
                    ));
                }
                false
            }
        };
        let mutation = if left {
            let SummandRef::Module(k) = at else { unreachable!() };
            let (new, introduced) = left_mutate(pair, k)?;
            Mutation {
                pair: new,
                direction: Direction::Left,
                introduced,
            }
        } else {
            let (dual, image) = dagger(op, pair);
            let (dual_new, dual_introduced) = left_mutate(
                &dual,
                match image(at) {
                    SummandRef::Module(k) => k,
                    SummandRef::Support(_) => {
                        return Err(Error::MutationFailed("dual summand is not in the module part".into()));
                    }
                },
            )?;
            let (new, back) = dagger(a, &dual_new);
            Mutation {
                pair: new,
                direction: Direction::Right,
                introduced: back(dual_introduced),
            }
        };
        certify(&self.quotients, &mutation.pair)?;
        Ok(mutation)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::test_reps::*;

    fn same(a: &SttPair, b: &SttPair) -> bool {
        a.support == b.support
            && a.module.len() == b.module.len()
            && a.module
                .iter()
                .all(|x| b.module.iter().any(|y| is_isomorphic(x, y).unwrap()))
    }

    #[test]
    fn approximations() {
        let a = ex_a();
        let (p1, p2) = (Rep::projective(&a, 0), Rep::projective(&a, 1));
        assert!(minimal_left_approximation(&p1, std::slice::from_ref(&p2))
            .target
            .is_zero());
        let f = minimal_left_approximation(&p2, std::slice::from_ref(&p1));
        assert_eq!(f.rank(), 1);
        let (c, _) = cokernel(&f);
        assert!(is_isomorphic(&c, &Rep::simple(&a, 0)).unwrap());
        // two copies of the same target collapse to one
        let g = minimal_left_approximation(&p2, &[p1.clone(), p1.clone()]);
        assert_eq!(g.target.dim(), 2);
    }

    #[test]
    fn example_mutations() {
        let a = ex_a();
        let mu = Mutator::new(&a);
        let root = SttPair::root(&a);
        let m = mu.mutate(&root, SummandRef::Module(0)).unwrap();
        assert_eq!(m.direction, Direction::Left);
        assert_eq!(m.pair.support, BTreeSet::from([0]));
        assert!(is_isomorphic(&m.pair.module[0], &Rep::projective(&a, 1)).unwrap());
        let m = mu.mutate(&root, SummandRef::Module(1)).unwrap();
        let t = SttPair {
            module: vec![Rep::projective(&a, 0), Rep::simple(&a, 0)],
            support: BTreeSet::new(),
        };
        assert!(same(&m.pair, &t));
        let s1 = SttPair {
            module: vec![Rep::simple(&a, 0)],
            support: BTreeSet::from([1]),
        };
        let m = mu.mutate(&s1, SummandRef::Module(0)).unwrap();
        assert!(m.pair.module.is_empty());
        assert_eq!(m.pair.support, BTreeSet::from([0, 1]));
    }

    #[test]
    fn right_mutation_inverts_left() {
        let a = ex_a();
        let mu = Mutator::new(&a);
        let t = SttPair {
            module: vec![Rep::projective(&a, 0), Rep::simple(&a, 0)],
            support: BTreeSet::new(),
        };
        // S1 ∈ Fac P1, so mutation at S1 goes up to the root
        let m = mu.mutate(&t, SummandRef::Module(1)).unwrap();
        assert_eq!(m.direction, Direction::Right);
        assert!(same(&m.pair, &SttPair::root(&a)));
        let zero = SttPair {
            module: vec![],
            support: BTreeSet::from([0, 1]),
        };
        let m = mu.mutate(&zero, SummandRef::Support(0)).unwrap();
        assert_eq!(m.direction, Direction::Right);
        assert!(is_isomorphic(&m.pair.module[0], &Rep::simple(&a, 0)).unwrap());
        assert_eq!(m.pair.support, BTreeSet::from([1]));
        let back = mu.mutate(&m.pair, m.introduced).unwrap();
        assert!(same(&back.pair, &zero));
    }
}
