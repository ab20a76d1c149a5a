//! Dend on Loday's basis of planar binary trees.
//!
//! A tree with `n` internal vertices spans one dimension of `Dend(n)`; it is
//! encoded in preorder with `1` for an internal vertex and `0` for a leaf.
//! The products are
//! `t ≺ s = t^l ∨ (t^r * s)`, `t ≻ s = (t * s^l) ∨ s^r`, `* = ≺ + ≻`,
//! with the one-leaf tree `|` as unit for `*`.

use std::collections::HashMap;

use num_traits::One;

use super::{Gen, Monomial, NsOperad, OperadKind};
use crate::characters::catalan;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::rat::Rat;

pub type Tree = Vec<u8>;

/// Combination of trees with integer multiplicities.
type Comb = HashMap<Tree, i64>;

const UNIT: [u8; 1] = [0];
const GEN: [u8; 3] = [1, 0, 0];

fn subtree_end(t: &[u8], start: usize) -> usize {
    let mut open = 1usize;
    let mut pos = start;
    while open > 0 {
        open = if t[pos] == 1 { open + 1 } else { open - 1 };
        pos += 1;
    }
    pos
}

fn split(t: &[u8]) -> (&[u8], &[u8]) {
    debug_assert_eq!(t[0], 1);
    let mid = subtree_end(t, 1);
    (&t[1..mid], &t[mid..])
}

fn join(l: &[u8], r: &[u8]) -> Tree {
    let mut t = Vec::with_capacity(1 + l.len() + r.len());
    t.push(1);
    t.extend_from_slice(l);
    t.extend_from_slice(r);
    t
}

fn is_unit(t: &[u8]) -> bool {
    t.len() == 1
}

/// Number of internal vertices, i.e. the arity.
pub fn tree_arity(t: &[u8]) -> usize {
    t.iter().filter(|&&b| b == 1).count()
}

/// All trees with `n` internal vertices in lexicographic order of the encoding.
pub fn trees(n: usize) -> Vec<Tree> {
    let mut table: Vec<Vec<Tree>> = vec![vec![UNIT.to_vec()]];
    for k in 1..=n {
        let mut level = Vec::new();
        for left in 0..k {
            for l in &table[left] {
                for r in &table[k - 1 - left] {
                    level.push(join(l, r));
                }
            }
        }
        level.sort();
        table.push(level);
    }
    table.swap_remove(n)
}

fn single(t: Tree) -> Comb {
    HashMap::from([(t, 1)])
}

fn add_into(acc: &mut Comb, t: Tree, c: i64) {
    let e = acc.entry(t).or_insert(0);
    *e += c;
}

#[derive(Debug, Default)]
pub struct Dend {
    bases: Vec<Vec<Tree>>,
    index: Vec<HashMap<Tree, usize>>,
    star_memo: HashMap<(Tree, Tree), Vec<(Tree, i64)>>,
    compose_memo: HashMap<(usize, usize, usize, usize, usize), SparseVec>,
}

impl Dend {
    pub fn new() -> Dend {
        Dend::default()
    }

    fn ensure(&mut self, n: usize) -> Result<()> {
        self.check_arity(n)?;
        while self.bases.len() <= n {
            let k = self.bases.len();
            let level = trees(k);
            if k >= 1 && level.len() as u128 != catalan(k) {
                return Err(Error::Inconsistent(format!("Dend({k}) has {} trees", level.len())));
            }
            self.index.push(level.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect());
            self.bases.push(level);
        }
        Ok(())
    }

    pub fn basis(&mut self, n: usize) -> Result<&[Tree]> {
        self.ensure(n)?;
        Ok(&self.bases[n])
    }

    pub fn tree_index(&mut self, t: &[u8]) -> Result<usize> {
        let n = tree_arity(t);
        self.ensure(n)?;
        self.index[n].get(t).copied().ok_or_else(|| Error::Parse(format!("not a tree: {t:?}")))
    }

    fn star(&mut self, t: &[u8], s: &[u8]) -> Vec<(Tree, i64)> {
        if is_unit(t) {
            return vec![(s.to_vec(), 1)];
        }
        if is_unit(s) {
            return vec![(t.to_vec(), 1)];
        }
        let key = (t.to_vec(), s.to_vec());
        if let Some(v) = self.star_memo.get(&key) {
            return v.clone();
        }
        let mut acc = Comb::new();
        for (u, c) in self.prec(t, s) {
            add_into(&mut acc, u, c);
        }
        for (u, c) in self.succ(t, s) {
            add_into(&mut acc, u, c);
        }
        let v: Vec<(Tree, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        self.star_memo.insert(key, v.clone());
        v
    }

    fn prec(&mut self, t: &[u8], s: &[u8]) -> Vec<(Tree, i64)> {
        let (tl, tr) = split(t);
        self.star(tr, s).into_iter().map(|(u, c)| (join(tl, &u), c)).collect()
    }

    fn succ(&mut self, t: &[u8], s: &[u8]) -> Vec<(Tree, i64)> {
        let (sl, sr) = split(s);
        self.star(t, sl).into_iter().map(|(u, c)| (join(&u, sr), c)).collect()
    }

    fn product(&mut self, g: Gen, a: &Comb, b: &Comb) -> Comb {
        let mut acc = Comb::new();
        for (t, ct) in a {
            for (s, cs) in b {
                let terms = match g {
                    Gen::Left => self.prec(t, s),
                    Gen::Right => self.succ(t, s),
                };
                for (u, c) in terms {
                    add_into(&mut acc, u, c * ct * cs);
                }
            }
        }
        acc.retain(|_, c| *c != 0);
        acc
    }

    fn eval_tree_comb(&mut self, w: &Monomial) -> Comb {
        match w {
            Monomial::Leaf => single(GEN.to_vec()),
            Monomial::Node(g, a, b) => {
                let a = self.eval_tree_comb(a);
                let b = self.eval_tree_comb(b);
                self.product(*g, &a, &b)
            }
        }
    }

    /// `T ∘_i S` through the representative `(T^l ≻ x) ≺ T^r`.
    fn substitute(&mut self, t: &[u8], i: usize, s: &Comb) -> Comb {
        let (tl, tr) = split(t);
        let k = tree_arity(tl);
        let (left, mid, right) = if i <= k {
            (Some(self.substitute(tl, i, s)), single(GEN.to_vec()), (!is_unit(tr)).then(|| single(tr.to_vec())))
        } else if i == k + 1 {
            ((!is_unit(tl)).then(|| single(tl.to_vec())), s.clone(), (!is_unit(tr)).then(|| single(tr.to_vec())))
        } else {
            let r = self.substitute(tr, i - k - 1, s);
            ((!is_unit(tl)).then(|| single(tl.to_vec())), single(GEN.to_vec()), Some(r))
        };
        let a = match left {
            Some(l) => self.product(Gen::Right, &l, &mid),
            None => mid,
        };
        match right {
            Some(r) => self.product(Gen::Left, &a, &r),
            None => a,
        }
    }

    fn comb_to_sparse(&mut self, n: usize, comb: Comb) -> Result<SparseVec> {
        self.ensure(n)?;
        let mut v: SparseVec = comb
            .into_iter()
            .filter(|(_, c)| *c != 0)
            .map(|(t, c)| {
                let idx = self.index[n].get(&t).copied().ok_or_else(|| {
                    Error::Inconsistent(format!("tree {t:?} of arity {} in Dend({n})", tree_arity(&t)))
                })?;
                Ok((idx, Rat::int(c)))
            })
            .collect::<Result<_>>()?;
        v.sort_by_key(|(i, _)| *i);
        Ok(v)
    }

    fn tree_representative(t: &[u8]) -> Monomial {
        let (tl, tr) = split(t);
        let mut w = Monomial::Leaf;
        if !is_unit(tl) {
            w = Monomial::right(Dend::tree_representative(tl), w);
        }
        if !is_unit(tr) {
            w = Monomial::left(w, Dend::tree_representative(tr));
        }
        w
    }

    /// Dimension of the span of all monomials of arity `n` modulo every
    /// instance of the three relations, by row reduction.
    pub fn relation_quotient_dim(n: usize) -> usize {
        let monomials = Monomial::all(n);
        let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut span = Echelon::new(monomials.len());
        for m in &monomials {
            for rel in relation_instances(m) {
                let v = crate::linalg::normalize(rel.into_iter().map(|(w, c)| (index[&w], c)).collect());
                span.insert(&v);
            }
        }
        monomials.len() - span.rank()
    }
}

/// Every relation instance whose first term is `m` rewritten at one vertex.
pub fn relation_instances(m: &Monomial) -> Vec<Vec<(Monomial, Rat)>> {
    let mut out = Vec::new();
    let Some((g2, lhs, c)) = m.split() else {
        return out;
    };
    if let Some((g1, a, b)) = lhs.split() {
        let (a, b, c) = (a.clone(), b.clone(), c.clone());
        let one = Rat::one;
        let minus = || Rat::int(-1);
        let rel = match (g1, g2) {
            (Gen::Left, Gen::Left) => vec![
                (m.clone(), one()),
                (Monomial::left(a.clone(), Monomial::left(b.clone(), c.clone())), minus()),
                (Monomial::left(a, Monomial::right(b, c)), minus()),
            ],
            (Gen::Right, Gen::Left) => {
                vec![(m.clone(), one()), (Monomial::right(a, Monomial::left(b, c)), minus())]
            }
            (_, Gen::Right) => vec![
                (Monomial::right(Monomial::left(a.clone(), b.clone()), c.clone()), one()),
                (Monomial::right(Monomial::right(a.clone(), b.clone()), c.clone()), one()),
                (Monomial::right(a, Monomial::right(b, c)), minus()),
            ],
        };
        out.push(rel);
    }
    let (_, l, r) = m.split().expect("node");
    for rel in relation_instances(l) {
        out.push(rel.into_iter().map(|(w, c)| (Monomial::node(g2, w, r.clone()), c)).collect());
    }
    for rel in relation_instances(r) {
        out.push(rel.into_iter().map(|(w, c)| (Monomial::node(g2, l.clone(), w), c)).collect());
    }
    out
}

impl NsOperad for Dend {
    fn kind(&self) -> OperadKind {
        OperadKind::Dend
    }

    fn dim(&mut self, n: usize) -> Result<usize> {
        self.ensure(n)?;
        Ok(self.bases[n].len())
    }

    fn compose_basis(&mut self, n: usize, a: usize, i: usize, m: usize, b: usize) -> Result<SparseVec> {
        let key = (n, a, i, m, b);
        if let Some(v) = self.compose_memo.get(&key) {
            return Ok(v.clone());
        }
        let target = n + m - 1;
        self.ensure(target.max(n).max(m))?;
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!("slot {i} for arity {n}")));
        }
        let t = self.bases[n].get(a).cloned().ok_or_else(|| Error::OutOfRange(format!("Dend({n}) index {a}")))?;
        let s = self.bases[m].get(b).cloned().ok_or_else(|| Error::OutOfRange(format!("Dend({m}) index {b}")))?;
        let comb = self.substitute(&t, i, &single(s));
        let v = self.comb_to_sparse(target, comb)?;
        self.compose_memo.insert(key, v.clone());
        Ok(v)
    }

    fn eval_monomial(&mut self, w: &Monomial) -> Result<SparseVec> {
        let n = w.arity();
        self.ensure(n)?;
        let comb = self.eval_tree_comb(w);
        self.comb_to_sparse(n, comb)
    }

    fn representative(&mut self, n: usize, idx: usize) -> Result<Monomial> {
        self.ensure(n)?;
        let t = self.bases[n].get(idx).ok_or_else(|| Error::OutOfRange(format!("Dend({n}) index {idx}")))?;
        Ok(Dend::tree_representative(t))
    }

    /// `T^l ≻ (x ≺ T^r)`, equal to the representative by the middle relation.
    fn alternative_representative(&mut self, n: usize, idx: usize) -> Result<Option<Monomial>> {
        self.ensure(n)?;
        let t = self.bases[n].get(idx).ok_or_else(|| Error::OutOfRange(format!("Dend({n}) index {idx}")))?.clone();
        let (tl, tr) = split(&t);
        let mut w = Monomial::Leaf;
        if !is_unit(tr) {
            w = Monomial::left(w, Dend::tree_representative(tr));
        }
        if !is_unit(tl) {
            w = Monomial::right(Dend::tree_representative(tl), w);
        }
        Ok(Some(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_dimensions() {
        let mut d = Dend::new();
        let dims: Vec<usize> = (1..=8).map(|n| d.dim(n).unwrap()).collect();
        assert_eq!(dims, vec![1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn arity_two_basis_is_prec_then_succ() {
        let mut d = Dend::new();
        assert_eq!(d.eval_monomial(&"x1<x2".parse().unwrap()).unwrap(), vec![(0, Rat::one())]);
        assert_eq!(d.eval_monomial(&"x1>x2".parse().unwrap()).unwrap(), vec![(1, Rat::one())]);
    }

    #[test]
    fn representatives_evaluate_to_their_tree() {
        let mut d = Dend::new();
        for n in 1..=6 {
            for idx in 0..d.dim(n).unwrap() {
                let w = d.representative(n, idx).unwrap();
                assert_eq!(d.eval_monomial(&w).unwrap(), vec![(idx, Rat::one())]);
                let alt = d.alternative_representative(n, idx).unwrap().unwrap();
                assert_eq!(d.eval_monomial(&alt).unwrap(), vec![(idx, Rat::one())]);
            }
        }
    }

    #[test]
    fn relations_vanish_and_quotient_matches() {
        let mut d = Dend::new();
        for n in 3..=5 {
            for m in Monomial::all(n) {
                for rel in relation_instances(&m) {
                    assert!(d.eval_combination(&rel).unwrap().is_empty(), "{m}");
                }
            }
        }
        for n in 1..=6 {
            assert_eq!(Dend::relation_quotient_dim(n) as u128, catalan(n), "arity {n}");
        }
    }

    #[test]
    fn composition_is_grafting() {
        let mut d = Dend::new();
        for n in 1..=4 {
            for m in 1..=3 {
                for a in 0..d.dim(n).unwrap() {
                    for b in 0..d.dim(m).unwrap() {
                        let wa = d.representative(n, a).unwrap();
                        let wb = d.representative(m, b).unwrap();
                        for i in 1..=n {
                            let direct = d.eval_monomial(&wa.graft(i, &wb)).unwrap();
                            assert_eq!(d.compose_basis(n, a, i, m, b).unwrap(), direct);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_example() {
        let mut d = Dend::new();
        let succ = d.eval_monomial(&"x1>x2".parse().unwrap()).unwrap();
        let prec = d.eval_monomial(&"x1<x2".parse().unwrap()).unwrap();
        let c = d.compose(2, &succ, 2, 2, &prec).unwrap();
        assert_eq!(c, d.eval_monomial(&"x1>(x2<x3)".parse().unwrap()).unwrap());
        assert_eq!(c, d.eval_monomial(&"(x1>x2)<x3".parse().unwrap()).unwrap());
    }

    #[test]
    fn composition_is_associative() {
        let mut d = Dend::new();
        // (a ∘_i b) ∘_{i+j-1} c = a ∘_i (b ∘_j c) and parallel composition.
        for a in 0..5 {
            for b in 0..2 {
                for c in 0..5 {
                    for i in 1..=3 {
                        for j in 1..=2 {
                            let ab = d.compose_basis(3, a, i, 2, b).unwrap();
                            let lhs = d.compose(4, &ab, i + j - 1, 3, &[(c, Rat::one())]).unwrap();
                            let bc = d.compose_basis(2, b, j, 3, c).unwrap();
                            let rhs = d.compose(3, &[(a, Rat::one())], i, 4, &bc).unwrap();
                            assert_eq!(lhs, rhs);
                        }
                    }
                    let ab = d.compose_basis(3, a, 1, 2, b).unwrap();
                    let lhs = d.compose(4, &ab, 4, 3, &[(c, Rat::one())]).unwrap();
                    let ac = d.compose_basis(3, a, 3, 3, c).unwrap();
                    let rhs = d.compose(5, &ac, 1, 2, &[(b, Rat::one())]).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn unit_laws() {
        let mut d = Dend::new();
        for idx in 0..14 {
            assert_eq!(d.compose_basis(1, 0, 1, 4, idx).unwrap(), vec![(idx, Rat::one())]);
            for i in 1..=4 {
                assert_eq!(d.compose_basis(4, idx, i, 1, 0).unwrap(), vec![(idx, Rat::one())]);
            }
        }
    }
}
