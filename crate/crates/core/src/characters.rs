//! Closed-form characteristic functions, truncated at a degree bound.
//!
//! Anticyclic series place the `S_{n+1}`-module of arity `n` in degree
//! `n + 1`; operad (`*_OP`) series place the `S_n`-module in degree `n`.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::error::{Error, Result};
use crate::numbercomb::{binomial, divisors, fixed_points, moebius, partitions, totient, z_of, Partition};
use crate::rat::Rat;
use crate::symfunc::SymFunc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    Comm,
    AssocCyc,
    PermAc,
    DiasAc,
    DendAc,
    LeibAc,
    ZinbAc,
    PrelieConj,
    PrelieOp,
    DiasOp,
    DendOp,
    PermOp,
    LeibOp,
    ZinbOp,
}

impl SeriesName {
    pub const ALL: [SeriesName; 14] = [
        SeriesName::Comm,
        SeriesName::AssocCyc,
        SeriesName::PermAc,
        SeriesName::DiasAc,
        SeriesName::DendAc,
        SeriesName::LeibAc,
        SeriesName::ZinbAc,
        SeriesName::PrelieConj,
        SeriesName::PrelieOp,
        SeriesName::DiasOp,
        SeriesName::DendOp,
        SeriesName::PermOp,
        SeriesName::LeibOp,
        SeriesName::ZinbOp,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SeriesName::Comm => "COMM",
            SeriesName::AssocCyc => "ASSOC_CYC",
            SeriesName::PermAc => "PERM_AC",
            SeriesName::DiasAc => "DIAS_AC",
            SeriesName::DendAc => "DEND_AC",
            SeriesName::LeibAc => "LEIB_AC",
            SeriesName::ZinbAc => "ZINB_AC",
            SeriesName::PrelieConj => "PRELIE_CONJ",
            SeriesName::PrelieOp => "PRELIE_OP",
            SeriesName::DiasOp => "DIAS_OP",
            SeriesName::DendOp => "DEND_OP",
            SeriesName::PermOp => "PERM_OP",
            SeriesName::LeibOp => "LEIB_OP",
            SeriesName::ZinbOp => "ZINB_OP",
        }
    }

    /// Whether the series is graded by `n + 1` (anticyclic/cyclic) rather than `n`.
    pub fn is_cyclic(&self) -> bool {
        matches!(
            self,
            SeriesName::AssocCyc
                | SeriesName::PermAc
                | SeriesName::DiasAc
                | SeriesName::DendAc
                | SeriesName::LeibAc
                | SeriesName::ZinbAc
                | SeriesName::PrelieConj
        )
    }

    /// Dimension of the module sitting in degree `d`.
    pub fn expected_dimension(&self, d: usize) -> Option<u128> {
        let fact = |k: usize| -> u128 { (1..=k as u128).product() };
        if self.is_cyclic() {
            if d < 2 {
                return Some(0);
            }
            let n = d - 1;
            return Some(match self {
                SeriesName::AssocCyc => fact(n),
                SeriesName::PermAc => n as u128,
                SeriesName::DiasAc => n as u128 * fact(n),
                SeriesName::DendAc => catalan(n) * fact(n),
                SeriesName::LeibAc | SeriesName::ZinbAc => fact(n),
                SeriesName::PrelieConj => (n as u128).pow(n as u32 - 1),
                _ => unreachable!(),
            });
        }
        if d == 0 {
            return Some(0);
        }
        Some(match self {
            SeriesName::Comm => 1,
            SeriesName::PrelieOp => (d as u128).pow(d as u32 - 1),
            SeriesName::DiasOp => d as u128 * fact(d),
            SeriesName::DendOp => catalan(d) * fact(d),
            SeriesName::PermOp => d as u128,
            SeriesName::LeibOp | SeriesName::ZinbOp => fact(d),
            _ => unreachable!(),
        })
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesName {
    type Err = Error;
    fn from_str(s: &str) -> Result<SeriesName> {
        let upper = s.to_ascii_uppercase().replace('-', "_");
        SeriesName::ALL
            .iter()
            .copied()
            .find(|n| n.as_str() == upper)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

pub fn series(name: SeriesName, n: usize) -> Result<SymFunc> {
    match name {
        SeriesName::Comm => ch_comm(n),
        SeriesName::AssocCyc => Ok(ch_assoc_cyc(n)),
        SeriesName::PermAc => ch_perm_ac(n),
        SeriesName::DiasAc => Ok(ch_dias_ac(n)),
        SeriesName::DendAc => ch_dend_ac(n),
        SeriesName::LeibAc => Ok(ch_leib_ac(n)),
        SeriesName::ZinbAc => Ok(ch_zinb_ac(n)),
        SeriesName::PrelieConj => Ok(ch_prelie_conj(n)),
        SeriesName::PrelieOp => ch_prelie_op(n),
        SeriesName::DiasOp | SeriesName::DendOp | SeriesName::PermOp | SeriesName::LeibOp | SeriesName::ZinbOp => {
            ch_ops_plain(name, n)
        }
    }
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n as u64, n as u64) / (n as u128 + 1)
}

fn rat_u(x: u128) -> Rat {
    Rat::from_bigint(x.into())
}

/// `Σ_{k≥1} p_k / k`.
pub fn log_of_h(n: usize) -> SymFunc {
    SymFunc::from_terms(n, (1..=n as u32).map(|k| (Partition::single(k), Rat::new(1, k as i64))))
}

/// `Σ_{n≥0} h_n = exp(Σ p_k/k)`.
pub fn h_series(n: usize) -> Result<SymFunc> {
    log_of_h(n).exp()
}

/// `Σ_{n ≥ start} (1/n) Σ_{d|n} w(d) p_d^{n/d}`.
fn necklace_sum(n: usize, start: usize, weight: impl Fn(u64, u64) -> Rat) -> SymFunc {
    let mut f = SymFunc::zero(n);
    for m in start..=n {
        for d in divisors(m as u64) {
            let k = m as u64 / d;
            let c = &weight(d, k) / &Rat::int(m as i64);
            f.add_term(Partition::repeated(d as u32, k as usize), c);
        }
    }
    f
}

/// `ch(Comm) = exp(Σ p_k/k) - 1`.
pub fn ch_comm(n: usize) -> Result<SymFunc> {
    Ok(h_series(n)?.sub(&SymFunc::one(n)))
}

/// Anticyclic Perm: `(p1 - 1) exp(Σ p_k/k) + 1`.
pub fn ch_perm_ac(n: usize) -> Result<SymFunc> {
    let p1_minus_one = SymFunc::p(1, n).sub(&SymFunc::one(n));
    Ok(p1_minus_one.mul(&h_series(n)?).add(&SymFunc::one(n)))
}

/// Cyclic Assoc: `Σ_{n≥2} (1/n) Σ_{d|n} φ(d) p_d^{n/d}`.
pub fn ch_assoc_cyc(n: usize) -> SymFunc {
    necklace_sum(n, 2, |d, _| Rat::int(totient(d) as i64))
}

/// Anticyclic Dias: `Σ_{n≥2} (p1^n - (1/n) Σ_{d|n} φ(d) p_d^{n/d})`.
pub fn ch_dias_ac(n: usize) -> SymFunc {
    let powers = SymFunc::from_terms(n, (2..=n).map(|k| (Partition::repeated(1, k), Rat::one())));
    powers.sub(&ch_assoc_cyc(n))
}

/// Anticyclic Dend:
/// `1 - p1 - sqrt(1 - 4 p1) - Σ_{n≥1} (1/2n) Σ_{d|n} φ(d) C(2n/d, n/d) p_d^{n/d}`.
pub fn ch_dend_ac(n: usize) -> Result<SymFunc> {
    let root = SymFunc::one(n).sub(&SymFunc::p(1, n).scale(&Rat::int(4))).sqrt()?;
    let tail = necklace_sum(n, 1, |d, k| {
        &Rat::int(totient(d) as i64) * &rat_u(binomial(2 * k, k)) / Rat::int(2)
    });
    Ok(SymFunc::one(n).sub(&SymFunc::p(1, n)).sub(&root).sub(&tail))
}

/// The Lie modules `Lie(n)`, `n ≥ 2`: `Σ (1/n) Σ_{d|n} μ(d) p_d^{n/d}`.
pub fn lie_series(n: usize) -> SymFunc {
    necklace_sum(n, 2, |d, _| Rat::int(moebius(d)))
}

/// Anticyclic Leib; arity `n` carries `Lie(n+1)`.
pub fn ch_leib_ac(n: usize) -> SymFunc {
    lie_series(n)
}

/// Anticyclic Zinb; arity `n` carries `Lie(n+1)` as well.
pub fn ch_zinb_ac(n: usize) -> SymFunc {
    lie_series(n)
}

/// `Σ (1/n) Σ_{d|n} μ(d) (-1)^{n/d} p_d^{n/d}`, the Legendre transform of the
/// Leib series, equal to `-Σ Ch(Zinb)`.
pub fn zinb_legendre_side(n: usize) -> SymFunc {
    necklace_sum(n, 2, |d, k| Rat::int(moebius(d) * if k % 2 == 0 { 1 } else { -1 }))
}

/// Conjectured anticyclic PreLie series: the sum over non-empty `λ` with
/// `m_1(λ) ≠ 1` of
/// `(m_1 - 1)^{m_1 - 2} ∏_{k≥2} ((f_k - 1)^{m_k} - k m_k (f_k - 1)^{m_k - 1}) p_λ / z_λ`.
pub fn ch_prelie_conj(n: usize) -> SymFunc {
    let mut f = SymFunc::zero(n);
    for size in 1..=n {
        for lambda in partitions(size) {
            if let Some(c) = prelie_conj_coefficient(&lambda) {
                f.add_term(lambda.clone(), &c / &rat_u(z_of(&lambda)));
            }
        }
    }
    f
}

/// The numerator of the conjectured coefficient of `p_λ / z_λ`; `None` when
/// `λ` is excluded from the sum.
pub fn prelie_conj_coefficient(lambda: &Partition) -> Option<Rat> {
    let m1 = lambda.multiplicity(1) as i64;
    if lambda.is_empty() || m1 == 1 {
        return None;
    }
    // m1 = 0 gives (-1)^(-2) = 1, m1 = 2 gives 1^0 = 1
    let mut acc = Rat::int(m1 - 1).pow((m1 - 2) as i32);
    for (k, mk) in lambda.multiplicities() {
        if k == 1 {
            continue;
        }
        let base = Rat::int(fixed_points(k, lambda) as i64 - 1);
        let mk = mk as i64;
        let factor = &base.pow(mk as i32) - &(&Rat::int(k as i64 * mk) * &base.pow(mk as i32 - 1));
        acc = &acc * &factor;
    }
    Some(acc)
}

/// `ch(PreLie) = Σ(ch(Perm)^{-1})` from `ch(Perm) ∘ Σ ch(PreLie) = p1`.
pub fn ch_prelie_op(n: usize) -> Result<SymFunc> {
    Ok(ch_ops_plain(SeriesName::PermOp, n)?.plethystic_inverse()?.suspension())
}

/// Ordinary operad characteristics of Dias, Dend, Perm, Leib and Zinb.
pub fn ch_ops_plain(name: SeriesName, n: usize) -> Result<SymFunc> {
    let pow_series = |c: &dyn Fn(usize) -> Rat| {
        SymFunc::from_terms(n, (1..=n).map(|k| (Partition::repeated(1, k), c(k))))
    };
    match name {
        SeriesName::DiasOp => Ok(pow_series(&|k| Rat::int(k as i64))),
        SeriesName::DendOp => Ok(pow_series(&|k| rat_u(catalan(k)))),
        SeriesName::LeibOp | SeriesName::ZinbOp => Ok(pow_series(&|_| Rat::one())),
        SeriesName::PermOp => Ok(SymFunc::p(1, n).mul(&h_series(n)?)),
        other => Err(Error::UnknownName(format!("{other} is not a plain operad series"))),
    }
}

/// `Σ_{k≥1} (1/2k) C(2k,k) u^k` with `u = p1`.
pub fn central_binomial_log(n: usize) -> SymFunc {
    SymFunc::from_terms(
        n,
        (1..=n).map(|k| {
            (Partition::repeated(1, k), &rat_u(binomial(2 * k as u64, k as u64)) / &Rat::int(2 * k as i64))
        }),
    )
}

/// `-log((1 + sqrt(1 - 4u)) / 2)` computed through the series sqrt and log.
pub fn neg_log_half_one_plus_sqrt(n: usize) -> Result<SymFunc> {
    let root = SymFunc::one(n).sub(&SymFunc::p(1, n).scale(&Rat::int(4))).sqrt()?;
    let inner = SymFunc::one(n).add(&root).scale(&Rat::new(1, 2));
    Ok(inner.log()?.neg())
}

/// Trace at the identity of the degree-`d` component.
pub fn dimension_in_degree(f: &SymFunc, d: usize) -> Rat {
    if d == 0 {
        return f.constant_term();
    }
    f.trace_eval(&Partition::repeated(1, d))
}
