//! Dias: basis `e^n_m`, `m = 1..=n`, stored at index `m - 1`.

use num_traits::One;

use super::{Gen, Monomial, NsOperad, OperadKind};
use crate::error::{Error, Result};
use crate::linalg::{SparseMatrix, SparseVec};
use crate::rat::Rat;

/// `e^n_m ∘_i e^ℓ_k = e^{n+ℓ-1}_r`; returns `r`.
pub fn dias_compose(m: usize, n: usize, i: usize, k: usize, l: usize) -> Result<usize> {
    if !(1..=n).contains(&m) || !(1..=l).contains(&k) || !(1..=n).contains(&i) {
        return Err(Error::OutOfRange(format!("e^{n}_{m} ∘_{i} e^{l}_{k}")));
    }
    Ok(if i == m {
        m + k - 1
    } else if i < m {
        m + l - 1
    } else {
        m
    })
}

/// Follows the side of each product away from the bar until one variable
/// remains; returns its position.
pub fn word_to_dias(w: &Monomial) -> usize {
    match w {
        Monomial::Leaf => 1,
        Monomial::Node(Gen::Left, a, _) => word_to_dias(a),
        Monomial::Node(Gen::Right, a, b) => a.arity() + word_to_dias(b),
    }
}

/// `x1 ⊢ (x2 ⊢ ( … ⊢ (xm ⊣ (x{m+1} ⊣ …))))`.
pub fn dias_representative(n: usize, m: usize) -> Monomial {
    assert!((1..=n).contains(&m));
    if n == 1 {
        return Monomial::Leaf;
    }
    if m > 1 {
        Monomial::right(Monomial::Leaf, dias_representative(n - 1, m - 1))
    } else {
        Monomial::left(Monomial::Leaf, dias_representative(n - 1, 1))
    }
}

/// `τ(e^n_1) = -e^n_n`, `τ(e^n_m) = -e^n_n + e^n_{m-1}` for `m ≥ 2`.
pub fn dias_tau_closed_form(n: usize) -> SparseMatrix {
    if n == 1 {
        return SparseMatrix::from_columns(vec![vec![(0, Rat::int(-1))]]);
    }
    let cols = (1..=n)
        .map(|m| {
            let mut col: SparseVec = Vec::new();
            if m >= 2 {
                col.push((m - 2, Rat::one()));
            }
            col.push((n - 1, Rat::int(-1)));
            col
        })
        .collect();
    SparseMatrix::from_columns(cols)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Dias;

impl NsOperad for Dias {
    fn kind(&self) -> OperadKind {
        OperadKind::Dias
    }

    fn dim(&mut self, n: usize) -> Result<usize> {
        self.check_arity(n)?;
        Ok(n)
    }

    fn compose_basis(&mut self, n: usize, a: usize, i: usize, m: usize, b: usize) -> Result<SparseVec> {
        self.check_arity(n + m - 1)?;
        let r = dias_compose(a + 1, n, i, b + 1, m)?;
        Ok(vec![(r - 1, Rat::one())])
    }

    fn eval_monomial(&mut self, w: &Monomial) -> Result<SparseVec> {
        Ok(vec![(word_to_dias(w) - 1, Rat::one())])
    }

    fn representative(&mut self, n: usize, idx: usize) -> Result<Monomial> {
        if idx >= self.dim(n)? {
            return Err(Error::OutOfRange(format!("basis index {idx} in Dias({n})")));
        }
        Ok(dias_representative(n, idx + 1))
    }

    fn alternative_representative(&mut self, n: usize, idx: usize) -> Result<Option<Monomial>> {
        // Left-nested variant: ((…((x1 ⊢ x2) ⊢ …) ⊢ xm) ⊣ …) ⊣ xn
        self.dim(n)?;
        let m = idx + 1;
        let mut w = Monomial::Leaf;
        for j in 2..=n {
            let g = if j <= m { Gen::Right } else { Gen::Left };
            w = Monomial::node(g, w, Monomial::Leaf);
        }
        Ok(Some(w))
    }
}

/// Monomials equal to `m` by one defining relation applied at the root.
fn root_rewrites(m: &Monomial) -> Vec<Monomial> {
    use Gen::{Left as L, Right as R};
    let Some((g, x, y)) = m.split() else {
        return Vec::new();
    };
    // classes of 3-ary shapes: (outer, inner, inner on the left)
    const CLASSES: [&[(Gen, Gen, bool)]; 3] = [
        &[(L, L, true), (L, L, false), (L, R, false)],
        &[(L, R, true), (R, L, false)],
        &[(R, L, true), (R, R, false), (R, R, true)],
    ];
    let build = |(outer, inner, left): (Gen, Gen, bool), a: &Monomial, b: &Monomial, c: &Monomial| {
        if left {
            Monomial::node(outer, Monomial::node(inner, a.clone(), b.clone()), c.clone())
        } else {
            Monomial::node(outer, a.clone(), Monomial::node(inner, b.clone(), c.clone()))
        }
    };
    let mut out = Vec::new();
    let mut shapes = Vec::new();
    if let Some((h, a, b)) = x.split() {
        shapes.push(((g, h, true), (a, b, y)));
    }
    if let Some((h, b, c)) = y.split() {
        shapes.push(((g, h, false), (x, b, c)));
    }
    for (shape, (a, b, c)) in shapes {
        let class = CLASSES.iter().find(|cl| cl.contains(&shape)).expect("every shape has a class");
        out.extend(class.iter().filter(|s| **s != shape).map(|s| build(*s, a, b, c)));
    }
    out
}

/// Relations `m - m'` for every single rewrite at any vertex of `m`.
pub fn dias_relation_instances(m: &Monomial) -> Vec<Vec<(Monomial, Rat)>> {
    let Some((g, l, r)) = m.split() else {
        return Vec::new();
    };
    let mut out: Vec<Vec<(Monomial, Rat)>> =
        root_rewrites(m).into_iter().map(|w| vec![(m.clone(), Rat::one()), (w, Rat::int(-1))]).collect();
    for rel in dias_relation_instances(l) {
        out.push(rel.into_iter().map(|(w, c)| (Monomial::node(g, w, r.clone()), c)).collect());
    }
    for rel in dias_relation_instances(r) {
        out.push(rel.into_iter().map(|(w, c)| (Monomial::node(g, l.clone(), w), c)).collect());
    }
    out
}
