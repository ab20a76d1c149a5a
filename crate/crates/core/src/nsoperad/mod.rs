//! The non-symmetric operads Dias and Dend and their anticyclic maps `τ_n`.

mod dend;
mod dias;
mod monomial;
mod tau;

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{normalize, SparseVec};
use crate::rat::Rat;

pub use dend::{relation_instances, Dend, Tree};
pub use dias::{dias_compose, dias_relation_instances, dias_representative, dias_tau_closed_form, word_to_dias, Dias};
pub use monomial::{Gen, Monomial};
pub use tau::{tau_char_poly_check, tau_from_form, TauMatrix, TauTable};

pub const DIAS_DEFAULT_CAP: usize = 12;
pub const DEND_DEFAULT_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OperadKind {
    Dias,
    Dend,
}

impl OperadKind {
    /// Largest arity the engines will build; `OPERAD_MAX_ARITY` overrides.
    pub fn cap(self) -> usize {
        if let Some(v) = std::env::var("OPERAD_MAX_ARITY").ok().and_then(|v| v.trim().parse().ok()) {
            return v;
        }
        match self {
            OperadKind::Dias => DIAS_DEFAULT_CAP,
            OperadKind::Dend => DEND_DEFAULT_CAP,
        }
    }

    /// Coefficients of `τ_2` on the generators: `tau2(g)[h]` is the
    /// coefficient of `h` in `τ_2(g)`.
    pub fn tau2(self) -> [[Rat; 2]; 2] {
        let r = Rat::int;
        match self {
            // τ(⊣) = -⊢, τ(⊢) = ⊣ - ⊢
            OperadKind::Dias => [[r(0), r(-1)], [r(1), r(-1)]],
            // τ(≺) = -≺ - ≻, τ(≻) = ≺
            OperadKind::Dend => [[r(-1), r(-1)], [r(1), r(0)]],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OperadKind::Dias => "dias",
            OperadKind::Dend => "dend",
        }
    }
}

impl fmt::Display for OperadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OperadKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<OperadKind> {
        match s.to_ascii_lowercase().as_str() {
            "dias" => Ok(OperadKind::Dias),
            "dend" => Ok(OperadKind::Dend),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

/// A linear combination of basis elements of `P(arity)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadElement {
    pub kind: OperadKind,
    pub arity: usize,
    pub coeffs: SparseVec,
}

impl OperadElement {
    pub fn basis(kind: OperadKind, arity: usize, idx: usize) -> OperadElement {
        OperadElement { kind, arity, coeffs: vec![(idx, Rat::one())] }
    }

    pub fn unit(kind: OperadKind) -> OperadElement {
        OperadElement::basis(kind, 1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Shared interface of the two engines. Basis elements of arity `n` are
/// indexed `0..dim(n)`; arity 2 is ordered `[Left, Right]`.
pub trait NsOperad {
    fn kind(&self) -> OperadKind;

    fn dim(&mut self, n: usize) -> Result<usize>;

    /// Basis element `a` of arity `n` composed at slot `i` (1-based) with
    /// basis element `b` of arity `m`.
    fn compose_basis(&mut self, n: usize, a: usize, i: usize, m: usize, b: usize) -> Result<SparseVec>;

    /// Image of a monomial in the basis of `P(arity)`.
    fn eval_monomial(&mut self, w: &Monomial) -> Result<SparseVec>;

    /// A monomial whose image is the given basis element.
    fn representative(&mut self, n: usize, idx: usize) -> Result<Monomial>;

    /// A second monomial with the same image, used for consistency checks.
    fn alternative_representative(&mut self, _n: usize, _idx: usize) -> Result<Option<Monomial>> {
        Ok(None)
    }

    fn check_arity(&self, n: usize) -> Result<()> {
        let cap = self.kind().cap();
        if n == 0 {
            return Err(Error::OutOfRange("arity 0".into()));
        }
        if n > cap {
            return Err(Error::CapExceeded { arity: n, cap });
        }
        Ok(())
    }

    /// Bilinear extension of [`NsOperad::compose_basis`].
    fn compose(&mut self, n: usize, a: &[(usize, Rat)], i: usize, m: usize, b: &[(usize, Rat)]) -> Result<SparseVec> {
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!("slot {i} for arity {n}")));
        }
        let mut acc = Vec::new();
        for (x, cx) in a {
            for (y, cy) in b {
                let c = cx * cy;
                for (z, cz) in self.compose_basis(n, *x, i, m, *y)? {
                    acc.push((z, &cz * &c));
                }
            }
        }
        Ok(normalize(acc))
    }

    fn compose_elements(&mut self, a: &OperadElement, i: usize, b: &OperadElement) -> Result<OperadElement> {
        if a.kind != self.kind() || b.kind != self.kind() {
            return Err(Error::OperadMismatch(format!("{} with {} in {}", a.kind, b.kind, self.kind())));
        }
        let coeffs = self.compose(a.arity, &a.coeffs, i, b.arity, &b.coeffs)?;
        Ok(OperadElement { kind: self.kind(), arity: a.arity + b.arity - 1, coeffs })
    }

    /// Image of a linear combination of monomials of a common arity.
    fn eval_combination(&mut self, terms: &[(Monomial, Rat)]) -> Result<SparseVec> {
        let mut acc = Vec::new();
        for (w, c) in terms {
            if c.is_zero() {
                continue;
            }
            acc.extend(self.eval_monomial(w)?.into_iter().map(|(i, x)| (i, &x * c)));
        }
        Ok(normalize(acc))
    }
}

/// Builds an engine for `kind` behind a trait object.
pub fn engine(kind: OperadKind) -> Box<dyn NsOperad> {
    match kind {
        OperadKind::Dias => Box::new(Dias),
        OperadKind::Dend => Box::new(Dend::new()),
    }
}
