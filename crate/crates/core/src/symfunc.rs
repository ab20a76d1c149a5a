//! Truncated symmetric functions over the rationals, in the power-sum basis.
//!
//! A [`SymFunc`] is known exactly through its `max_degree`; everything of
//! higher degree is unknown. Each operator computes the largest bound its
//! inputs determine and never reports a bound larger than that.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numbercomb::{char_value, partitions, z_of, Partition};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    max_degree: usize,
    terms: BTreeMap<Partition, Rat>,
}

impl SymFunc {
    pub fn zero(max_degree: usize) -> SymFunc {
        SymFunc { max_degree, terms: BTreeMap::new() }
    }

    pub fn one(max_degree: usize) -> SymFunc {
        SymFunc::constant(Rat::one(), max_degree)
    }

    pub fn constant(c: Rat, max_degree: usize) -> SymFunc {
        SymFunc::monomial(Partition::empty(), c, max_degree)
    }

    /// The power sum `p_k`.
    pub fn p(k: u32, max_degree: usize) -> SymFunc {
        SymFunc::monomial(Partition::single(k), Rat::one(), max_degree)
    }

    /// `c * p_lambda`, dropped if beyond the bound.
    pub fn monomial(lambda: Partition, c: Rat, max_degree: usize) -> SymFunc {
        let mut f = SymFunc::zero(max_degree);
        f.add_term(lambda, c);
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Rat)>>(max_degree: usize, terms: I) -> SymFunc {
        let mut f = SymFunc::zero(max_degree);
        for (l, c) in terms {
            f.add_term(l, c);
        }
        f
    }

    /// Adds `c * p_lambda` in place; terms beyond the bound are discarded.
    pub fn add_term(&mut self, lambda: Partition, c: Rat) {
        if c.is_zero() || lambda.size() > self.max_degree {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn coeff(&self, lambda: &Partition) -> Rat {
        self.terms.get(lambda).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> Rat {
        self.coeff(&Partition::empty())
    }

    /// Smallest degree carrying a nonzero term; `max_degree + 1` for zero.
    pub fn valuation(&self) -> usize {
        self.terms.keys().map(|l| l.size()).min().unwrap_or(self.max_degree + 1)
    }

    /// Smallest positive degree carrying a nonzero term.
    fn positive_valuation(&self) -> usize {
        self.terms
            .keys()
            .map(|l| l.size())
            .filter(|&d| d > 0)
            .min()
            .unwrap_or(self.max_degree + 1)
    }

    /// The homogeneous component of degree `d` (same bound as `self`).
    pub fn degree_part(&self, d: usize) -> SymFunc {
        SymFunc {
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Explicitly forgets everything above degree `n` (`n` may not exceed the bound).
    pub fn truncate(&self, n: usize) -> SymFunc {
        assert!(n <= self.max_degree, "cannot raise a degree bound by truncation");
        SymFunc {
            max_degree: n,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.size() <= n)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    /// Equality of the parts known to both sides.
    pub fn agrees_with(&self, other: &SymFunc) -> bool {
        self.first_disagreement(other).is_none()
    }

    /// Lowest degree (within both bounds) where the two functions differ.
    pub fn first_disagreement(&self, other: &SymFunc) -> Option<usize> {
        let n = self.max_degree.min(other.max_degree);
        let diff = self.truncate(n).sub(&other.truncate(n));
        diff.terms.keys().map(|l| l.size()).min()
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let n = self.max_degree.min(other.max_degree);
        let mut out = self.truncate(n);
        for (l, c) in other.terms.iter() {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, c: &Rat) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.max_degree);
        }
        SymFunc {
            max_degree: self.max_degree,
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    /// Graded product. The result is known through
    /// `min(max(Nf, Ng), Nf + val(g), Ng + val(f))`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let (nf, ng) = (self.max_degree, other.max_degree);
        let bound = nf.max(ng).min(nf + other.valuation()).min(ng + self.valuation());
        mul_truncated(self, other, bound)
    }

    pub fn pow(&self, k: usize) -> SymFunc {
        let mut acc = SymFunc::one(self.max_degree);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Plethysm `self ∘ g`; `g` must have zero constant term. The result is
    /// known through the degree both inputs determine, capped at `max(Nf, Ng)`.
    pub fn plethysm(&self, g: &SymFunc) -> Result<SymFunc> {
        if !g.constant_term().is_zero() {
            return Err(Error::Precondition(
                "plethysm: inner function has a nonzero constant term".into(),
            ));
        }
        let e = g.valuation();
        let bound = (e * (self.max_degree + 1) - 1)
            .min(g.max_degree + e * (self.positive_valuation() - 1))
            .min(self.max_degree.max(g.max_degree));
        Ok(plethysm_truncated(self, g, bound))
    }

    /// `ΣF = -F(-p1, -p2, ...)`.
    pub fn suspension(&self) -> SymFunc {
        SymFunc {
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), if l.len() % 2 == 0 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Formal derivative in `p1`; the bound drops by one.
    pub fn d_p1(&self) -> SymFunc {
        let mut out = SymFunc::zero(self.max_degree.saturating_sub(1));
        for (l, c) in &self.terms {
            let m = l.multiplicity(1);
            if m > 0 {
                out.add_term(l.without_part(1).unwrap(), c * &Rat::int(m as i64));
            }
        }
        out
    }

    /// Euler operator: multiplies each degree-`d` component by `d`.
    pub fn euler(&self) -> SymFunc {
        SymFunc {
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c * &Rat::int(l.size() as i64)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// Internal (Kronecker) product: `p_λ * p_μ = δ_{λμ} z_λ p_λ`.
    pub fn kronecker(&self, other: &SymFunc) -> SymFunc {
        let n = self.max_degree.min(other.max_degree);
        let mut out = SymFunc::zero(n);
        for (l, c) in &self.terms {
            if let Some(d) = other.terms.get(l) {
                out.add_term(l.clone(), &(c * d) * &Rat::from_bigint(z_of(l).into()));
            }
        }
        out
    }

    /// Degree-preserving `p1·∂_{p1} - Id`: tensoring each homogeneous
    /// component with the reflection representation.
    pub fn reflection_tensor(&self) -> SymFunc {
        SymFunc::p(1, self.max_degree).mul(&self.d_p1()).sub(self)
    }

    /// Compositional inverse `g` with `self ∘ g = g ∘ self = p1`.
    pub fn plethystic_inverse(&self) -> Result<SymFunc> {
        if !self.constant_term().is_zero() {
            return Err(Error::Precondition("plethystic inverse: nonzero constant term".into()));
        }
        let n = self.max_degree;
        let c = self.coeff(&Partition::single(1));
        if c.is_zero() {
            return Err(Error::Precondition("plethystic inverse: no p1 term to invert".into()));
        }
        let p1 = Partition::single(1);
        let mut g = SymFunc::monomial(p1.clone(), c.recip(), n);
        for d in 2..=n {
            let rest = plethysm_truncated(self, &g, d).degree_part(d);
            for (l, x) in rest.terms {
                g.add_term(l, -(&x / &c));
            }
        }
        let check = plethysm_truncated(self, &g, n);
        if check != SymFunc::p(1, n) {
            return Err(Error::Inconsistent("plethystic inverse fails f∘g = p1".into()));
        }
        Ok(g)
    }

    /// Legendre transform `G = L F`, defined by `F ∘ ∂G + G = p1 ∂G`.
    pub fn legendre(&self) -> Result<SymFunc> {
        if self.terms.keys().any(|l| l.size() <= 1) {
            return Err(Error::Precondition("Legendre transform: terms of degree 0 or 1 present".into()));
        }
        if self.coeff(&Partition::repeated(1, 2)).is_zero() {
            return Err(Error::Precondition("Legendre transform: coefficient of p1^2 vanishes".into()));
        }
        let derivative = self.d_p1();
        let a = derivative.plethystic_inverse()?;
        let p1 = SymFunc::p(1, self.max_degree);
        let g = p1.mul(&a).sub(&self.plethysm(&a)?);
        if !g.d_p1().agrees_with(&a) {
            return Err(Error::Inconsistent("Legendre transform: ∂G differs from the inverse".into()));
        }
        let dg = g.d_p1();
        let lhs = self.plethysm(&dg)?.add(&g);
        let rhs = p1.mul(&dg);
        if let Some(d) = lhs.first_disagreement(&rhs) {
            return Err(Error::Inconsistent(format!(
                "Legendre transform: defining equation fails in degree {d}"
            )));
        }
        Ok(g)
    }

    /// `⟨f_n, s_λ⟩` for every partition `λ` of `n`.
    pub fn schur_expand(&self, n: usize) -> BTreeMap<Partition, Rat> {
        let part = self.degree_part(n);
        partitions(n)
            .into_iter()
            .map(|lambda| {
                let c: Rat = part
                    .terms
                    .iter()
                    .map(|(mu, c)| c * &Rat::int(char_value(&lambda, mu).unwrap()))
                    .sum();
                (lambda, c)
            })
            .collect()
    }

    /// Whether the degree-`n` component is a non-negative integer combination
    /// of Schur functions; lists every offending coefficient otherwise.
    pub fn is_schur_positive(&self, n: usize) -> SchurCheck {
        let witnesses: Vec<(Partition, Rat)> = self
            .schur_expand(n)
            .into_iter()
            .filter(|(_, c)| c.is_negative() || !c.is_integer())
            .collect();
        SchurCheck { positive: witnesses.is_empty(), witnesses }
    }

    /// Trace of a permutation of cycle type `mu` on the module with this characteristic.
    pub fn trace_eval(&self, mu: &Partition) -> Rat {
        &self.coeff(mu) * &Rat::from_bigint(z_of(mu).into())
    }

    /// Homogeneous components `0..=max_degree`.
    pub fn components(&self) -> Vec<SymFunc> {
        let mut out: Vec<SymFunc> = (0..=self.max_degree).map(|_| SymFunc::zero(self.max_degree)).collect();
        for (l, c) in &self.terms {
            out[l.size()].terms.insert(l.clone(), c.clone());
        }
        out
    }

    /// `exp(self)` for a function with zero constant term.
    pub fn exp(&self) -> Result<SymFunc> {
        if !self.constant_term().is_zero() {
            return Err(Error::Precondition("exp: nonzero constant term".into()));
        }
        let n = self.max_degree;
        let df = self.euler().components();
        let mut e: Vec<SymFunc> = vec![SymFunc::one(n)];
        for d in 1..=n {
            let mut acc = SymFunc::zero(n);
            for k in 1..=d {
                if df[k].is_zero() || e[d - k].is_zero() {
                    continue;
                }
                acc = acc.add(&mul_truncated(&df[k], &e[d - k], n));
            }
            e.push(acc.scale(&Rat::new(1, d as i64)));
        }
        Ok(e.iter().fold(SymFunc::zero(n), |a, b| a.add(b)))
    }

    /// Multiplicative inverse by Newton iteration `y <- y (2 - f y)`.
    pub fn recip(&self) -> Result<SymFunc> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::Precondition("recip: zero constant term".into()));
        }
        let n = self.max_degree;
        let two = SymFunc::constant(Rat::int(2), n);
        let y = newton(SymFunc::constant(c.recip(), n), |y| {
            mul_truncated(y, &two.sub(&mul_truncated(self, y, n)), n)
        })?;
        if mul_truncated(self, &y, n) != SymFunc::one(n) {
            return Err(Error::Inconsistent("recip: f·(1/f) != 1".into()));
        }
        Ok(y)
    }

    /// Square root with constant term 1, by Newton iteration `y <- (y + f/y)/2`.
    pub fn sqrt(&self) -> Result<SymFunc> {
        if self.constant_term() != Rat::one() {
            return Err(Error::Precondition("sqrt: constant term must be 1".into()));
        }
        let n = self.max_degree;
        let half = Rat::new(1, 2);
        let y = newton(SymFunc::one(n), |y| {
            let q = mul_truncated(self, &y.recip().expect("constant term stays 1"), n);
            y.add(&q).scale(&half)
        })?;
        if mul_truncated(&y, &y, n) != *self {
            return Err(Error::Inconsistent("sqrt: square differs from input".into()));
        }
        Ok(y)
    }

    /// Logarithm with constant term 1, by Newton iteration `y <- y + f·exp(-y) - 1`.
    pub fn log(&self) -> Result<SymFunc> {
        if self.constant_term() != Rat::one() {
            return Err(Error::Precondition("log: constant term must be 1".into()));
        }
        let n = self.max_degree;
        let one = SymFunc::one(n);
        let y = newton(SymFunc::zero(n), |y| {
            let e = y.neg().exp().expect("zero constant term");
            y.add(&mul_truncated(self, &e, n)).sub(&one)
        })?;
        if y.exp()? != *self {
            return Err(Error::Inconsistent("log: exp(log f) != f".into()));
        }
        Ok(y)
    }
}

fn newton<F: Fn(&SymFunc) -> SymFunc>(start: SymFunc, step: F) -> Result<SymFunc> {
    let n = start.max_degree;
    let mut y = start;
    // quadratic convergence: the number of correct degrees doubles per step
    let limit = 2 * (usize::BITS - n.leading_zeros()) as usize + 4;
    for _ in 0..limit {
        let next = step(&y);
        if next == y {
            return Ok(y);
        }
        y = next;
    }
    Err(Error::Inconsistent("Newton iteration did not stabilise".into()))
}

/// Product truncated at an explicit degree.
pub(crate) fn mul_truncated(f: &SymFunc, g: &SymFunc, bound: usize) -> SymFunc {
    let mut fs: Vec<(usize, &Partition, &Rat)> = f.terms.iter().map(|(l, c)| (l.size(), l, c)).collect();
    let mut gs: Vec<(usize, &Partition, &Rat)> = g.terms.iter().map(|(l, c)| (l.size(), l, c)).collect();
    fs.sort_by_key(|t| t.0);
    gs.sort_by_key(|t| t.0);
    let mut acc: HashMap<Partition, Rat> = HashMap::new();
    for &(df, lf, cf) in &fs {
        if df > bound {
            break;
        }
        for &(dg, lg, cg) in &gs {
            if df + dg > bound {
                break;
            }
            let key = lf.union(lg);
            let v = cf * cg;
            match acc.get_mut(&key) {
                Some(x) => *x += &v,
                None => {
                    acc.insert(key, v);
                }
            }
        }
    }
    SymFunc {
        max_degree: bound,
        terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    }
}

/// Plethysm truncated at an explicit degree (no bound inference).
pub(crate) fn plethysm_truncated(f: &SymFunc, g: &SymFunc, bound: usize) -> SymFunc {
    let mut out = SymFunc::zero(bound);
    let mut adams: HashMap<u32, SymFunc> = HashMap::new();
    let mut products: HashMap<Partition, SymFunc> = HashMap::new();
    products.insert(Partition::empty(), SymFunc::one(bound));
    let gv = g.valuation().max(1);
    for (lambda, c) in &f.terms {
        if lambda.size() * gv > bound {
            continue;
        }
        let value = product_for(lambda, g, bound, &mut adams, &mut products);
        for (l, x) in &value.terms {
            out.add_term(l.clone(), x * c);
        }
    }
    out
}

fn product_for(
    lambda: &Partition,
    g: &SymFunc,
    bound: usize,
    adams: &mut HashMap<u32, SymFunc>,
    products: &mut HashMap<Partition, SymFunc>,
) -> SymFunc {
    if let Some(v) = products.get(lambda) {
        return v.clone();
    }
    let parts = lambda.parts();
    let last = *parts.last().unwrap();
    let prefix = Partition::new(parts[..parts.len() - 1].to_vec());
    let head = product_for(&prefix, g, bound, adams, products);
    let pk = adams.entry(last).or_insert_with(|| {
        SymFunc::from_terms(bound, g.terms.iter().map(|(l, c)| (l.scaled(last), c.clone())))
    });
    let value = mul_truncated(&head, pk, bound);
    products.insert(lambda.clone(), value.clone());
    value
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurCheck {
    pub positive: bool,
    pub witnesses: Vec<(Partition, Rat)>,
}

#[derive(Serialize, Deserialize)]
struct SymFuncJson {
    max_degree: usize,
    terms: Vec<(Partition, String)>,
}

impl SymFunc {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serialisable")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = SymFuncJson {
            max_degree: self.max_degree,
            terms: self
                .terms
                .iter()
                .map(|(l, c)| (l.clone(), c.to_fraction_string()))
                .collect(),
        };
        serde_json::to_value(doc).expect("serialisable")
    }

    pub fn from_json(s: &str) -> Result<SymFunc> {
        let doc: SymFuncJson = serde_json::from_str(s)?;
        let mut f = SymFunc::zero(doc.max_degree);
        for (l, c) in doc.terms {
            if l.size() > doc.max_degree {
                return Err(Error::Parse(format!("term {l} exceeds max_degree {}", doc.max_degree)));
            }
            f.add_term(l, c.parse()?);
        }
        Ok(f)
    }
}

/// Renders `p_λ` as `p1^2*p3`.
pub fn format_monomial(l: &Partition) -> String {
    if l.is_empty() {
        return "1".into();
    }
    let mut mults = l.multiplicities();
    mults.reverse();
    mults
        .iter()
        .map(|&(k, m)| if m == 1 { format!("p{k}") } else { format!("p{k}^{m}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if l.is_empty() {
                write!(f, "{abs}")?;
            } else if abs == Rat::one() {
                write!(f, "{}", format_monomial(l))?;
            } else {
                write!(f, "{abs}*{}", format_monomial(l))?;
            }
        }
        Ok(())
    }
}
