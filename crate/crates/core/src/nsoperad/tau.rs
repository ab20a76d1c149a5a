//! The anticyclic maps `τ_n`, by recursion on compositions and from the
//! invariant bilinear form.

use num_traits::Zero;
use serde_json::json;

use super::{Gen, Monomial, NsOperad, OperadKind};
use crate::error::{Error, Result};
use crate::linalg::{add, scale, SparseMatrix, SparseVec};
use crate::rat::Rat;

/// `τ_n` in the canonical basis of `P(n)`; column `j` is the image of basis element `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauMatrix {
    pub kind: OperadKind,
    pub arity: usize,
    pub matrix: SparseMatrix,
    pub basis: Vec<String>,
}

impl TauMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.n
    }

    /// Row-major, one row per line, entries as `num/den`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.matrix.to_dense() {
            let cells: Vec<String> = row.iter().map(Rat::to_fraction_string).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Vec<String>> = self
            .matrix
            .to_dense()
            .iter()
            .map(|r| r.iter().map(Rat::to_fraction_string).collect())
            .collect();
        json!({
            "operad": self.kind.name(),
            "arity": self.arity,
            "dimension": self.dim(),
            "basis": self.basis,
            "matrix": rows,
        })
        .to_string()
    }
}

/// `τ_1, …, τ_n` for one operad.
#[derive(Clone, Debug)]
pub struct TauTable {
    pub kind: OperadKind,
    mats: Vec<SparseMatrix>,
}

fn generator_image(kind: OperadKind, g: Gen) -> SparseVec {
    let t = kind.tau2();
    Gen::BOTH
        .iter()
        .map(|h| (h.index(), t[g.index()][h.index()].clone()))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

fn neg(v: SparseVec) -> SparseVec {
    scale(&v, &Rat::int(-1))
}

impl TauTable {
    /// Computes `τ_k` for `k ≤ n`. Each basis element is split at the root of
    /// a representative monomial `g(A, B)` and
    /// `τ(g(A,B)) = -τ(A) ∘_a (τ(g) ∘_1 B)` with `a = arity(A)`, checked
    /// against `(-τ(A) ∘_a τ(g)) ∘_a B` and against a second representative.
    pub fn build(op: &mut dyn NsOperad, n: usize) -> Result<TauTable> {
        let kind = op.kind();
        op.dim(n)?;
        let mut table = TauTable { kind, mats: vec![SparseMatrix::from_columns(vec![vec![(0, Rat::int(-1))]])] };
        if n >= 2 {
            table
                .mats
                .push(SparseMatrix::from_columns(Gen::BOTH.iter().map(|g| generator_image(kind, *g)).collect()));
        }
        for k in 3..=n {
            let d = op.dim(k)?;
            let mut cols = Vec::with_capacity(d);
            for idx in 0..d {
                let w = op.representative(k, idx)?;
                let col = table.tau_of_monomial(op, &w, true)?;
                if let Some(alt) = op.alternative_representative(k, idx)? {
                    let other = table.tau_of_monomial(op, &alt, false)?;
                    if other != col {
                        return Err(Error::Inconsistent(format!(
                            "τ_{k} of basis element {idx} differs between {w} and {alt}"
                        )));
                    }
                }
                cols.push(col);
            }
            table.mats.push(SparseMatrix::from_columns(cols));
        }
        Ok(table)
    }

    fn tau_of_monomial(&self, op: &mut dyn NsOperad, w: &Monomial, both_ways: bool) -> Result<SparseVec> {
        let Some((g, a_mon, b_mon)) = w.split() else {
            return Ok(vec![(0, Rat::int(-1))]);
        };
        let (a, b) = (a_mon.arity(), b_mon.arity());
        let va = op.eval_monomial(a_mon)?;
        let vb = op.eval_monomial(b_mon)?;
        let ta = self.get(a).apply(&va);
        let tg = generator_image(self.kind, g);
        let inner = op.compose(2, &tg, 1, b, &vb)?;
        let r1 = neg(op.compose(a, &ta, a, 1 + b, &inner)?);
        if both_ways {
            let left = op.compose(a, &ta, a, 2, &tg)?;
            let r2 = neg(op.compose(a + 1, &left, a, b, &vb)?);
            if r1 != r2 {
                return Err(Error::Inconsistent(format!("τ of {w}: the two splittings disagree")));
            }
        }
        Ok(r1)
    }

    pub fn max_arity(&self) -> usize {
        self.mats.len()
    }

    pub fn get(&self, n: usize) -> &SparseMatrix {
        &self.mats[n - 1]
    }

    pub fn apply(&self, n: usize, v: &[(usize, Rat)]) -> SparseVec {
        self.get(n).apply(v)
    }

    pub fn matrix(&self, op: &mut dyn NsOperad, n: usize) -> Result<TauMatrix> {
        let d = op.dim(n)?;
        let basis = (0..d).map(|i| op.representative(n, i).map(|w| w.to_string())).collect::<Result<_>>()?;
        Ok(TauMatrix { kind: self.kind, arity: n, matrix: self.get(n).clone(), basis })
    }
}

/// `τ` of a monomial from the form rules: `⟨w(x1..xn), x{n+1}⟩` is rewritten
/// into `⟨w'(x2..x{n+1}), x1⟩` and `w'` is returned in the basis.
pub fn tau_from_form(op: &mut dyn NsOperad, w: &Monomial) -> Result<SparseVec> {
    let terms = pair(op.kind(), w, &Monomial::Leaf, 0)?;
    op.eval_combination(&terms)
}

const DEPTH_GUARD: usize = 64;

/// Returns `W` with `⟨u, v⟩ = ⟨W, x1⟩`, where `x1` is the first leaf of `u`.
fn pair(kind: OperadKind, u: &Monomial, v: &Monomial, depth: usize) -> Result<Vec<(Monomial, Rat)>> {
    if depth > DEPTH_GUARD {
        return Err(Error::Inconsistent("form rewriting did not terminate".into()));
    }
    let Some((g, a, b)) = u.split() else {
        // ⟨x1, v⟩ = -⟨v, x1⟩
        return Ok(vec![(v.clone(), Rat::int(-1))]);
    };
    let coeffs = kind.tau2();
    let mut out = Vec::new();
    for h in Gen::BOTH {
        let c = &coeffs[g.index()][h.index()];
        if c.is_zero() {
            continue;
        }
        // ⟨g(a, b), v⟩ = Σ_h c ⟨h(b, v), a⟩
        let hbv = Monomial::node(h, b.clone(), v.clone());
        if matches!(a, Monomial::Leaf) {
            out.push((hbv, c.clone()));
        } else {
            // ⟨h(b, v), a⟩ = -⟨a, h(b, v)⟩
            for (w, d) in pair(kind, a, &hbv, depth + 1)? {
                out.push((w, -(c * &d)));
            }
        }
    }
    Ok(out)
}

/// `Σ_{k=0}^{n} τ^k = 0` and `τ^{n+1} = Id`.
pub fn tau_char_poly_check(tau: &SparseMatrix, n: usize) -> bool {
    let mut power = SparseMatrix::identity(tau.n);
    let mut sum = power.clone();
    for _ in 0..n {
        power = tau.compose(&power);
        sum = SparseMatrix::from_columns(sum.cols.iter().zip(&power.cols).map(|(a, b)| add(a, b)).collect());
    }
    let vanishes = sum.cols.iter().all(|c| c.is_empty());
    vanishes && tau.compose(&power).is_identity()
}

#[cfg(test)]
mod tests {
    use super::super::{dias_tau_closed_form, Dend, Dias};
    use super::*;

    #[test]
    fn dias_matches_closed_form() {
        let table = TauTable::build(&mut Dias, 9).unwrap();
        for n in 1..=9 {
            assert_eq!(table.get(n), &dias_tau_closed_form(n), "arity {n}");
            assert!(tau_char_poly_check(table.get(n), n), "arity {n}");
        }
    }

    #[test]
    fn dias_arity_two_matrix() {
        let table = TauTable::build(&mut Dias, 2).unwrap();
        let dense = table.get(2).to_dense();
        assert_eq!(dense, vec![vec![Rat::int(0), Rat::int(1)], vec![Rat::int(-1), Rat::int(-1)]]);
    }

    #[test]
    fn dend_arity_two_matrix() {
        let mut d = Dend::new();
        let table = TauTable::build(&mut d, 2).unwrap();
        let m = table.matrix(&mut d, 2).unwrap();
        assert_eq!(m.to_csv(), "-1/1,1/1\n-1/1,0/1\n");
        assert_eq!(m.basis, vec!["(x1<x2)", "(x1>x2)"]);
    }

    #[test]
    fn dend_orders() {
        let mut d = Dend::new();
        let table = TauTable::build(&mut d, 6).unwrap();
        for n in 1..=6 {
            let mut p = SparseMatrix::identity(table.get(n).n);
            for _ in 0..=n {
                p = table.get(n).compose(&p);
            }
            assert!(p.is_identity(), "arity {n}");
        }
    }

    #[test]
    fn form_agrees_with_recursion() {
        let mut d = Dend::new();
        for op in [&mut Dias as &mut dyn NsOperad, &mut d] {
            let table = TauTable::build(op, 5).unwrap();
            for n in 1..=5 {
                for idx in 0..op.dim(n).unwrap() {
                    let w = op.representative(n, idx).unwrap();
                    assert_eq!(tau_from_form(op, &w).unwrap(), table.apply(n, &[(idx, Rat::from(1))]));
                }
            }
        }
    }

    #[test]
    fn form_examples() {
        // τ(x1 ⊣ x2 ⊣ x3) = -(x1 ⊢ x2 ⊢ x3)
        let w: Monomial = "(x1<x2)<x3".parse().unwrap();
        assert_eq!(tau_from_form(&mut Dias, &w).unwrap(), vec![(2, Rat::int(-1))]);
        let mut d = Dend::new();
        let w: Monomial = "x1<x2".parse().unwrap();
        assert_eq!(tau_from_form(&mut d, &w).unwrap(), vec![(0, Rat::int(-1)), (1, Rat::int(-1))]);
    }
}
