//! Named identity checks with pass/fail reports.

use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::characters::{self as ch, catalan, SeriesName};
use crate::error::{Error, Result};
use crate::nsoperad::{
    dias_relation_instances, dias_tau_closed_form, engine, relation_instances, tau_char_poly_check,
    tau_from_form, Dend, Monomial, NsOperad, OperadKind, TauTable,
};
use crate::numbercomb::{factorial, Partition};
use crate::rat::Rat;
use crate::symfunc::SymFunc;
use crate::symoperad::{
    check_stable, generate_ideal, generate_suboperad, induced_character_via_tau, module_character,
    restricted_character, seeds, InducedOperad, Space, Subspace,
};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub id: String,
    pub bound: usize,
    pub pass: bool,
    pub counterexample: Option<String>,
    #[serde(serialize_with = "ser_secs")]
    pub elapsed: Duration,
}

fn ser_secs<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{status} {} (bound {}, {:.2}s)", self.id, self.bound, self.elapsed.as_secs_f64())?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  {}", c.replace('\n', "\n  "))?;
        }
        Ok(())
    }
}

/// Outcome of a single check body: `Ok(None)` passes, `Ok(Some(msg))` fails
/// with a counterexample, `Err` fails with the error text.
pub type CheckOutcome = Result<Option<String>>;

pub fn run_check(id: &str, bound: usize, body: impl FnOnce() -> CheckOutcome) -> VerifyReport {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (pass, counterexample) = match outcome {
        Ok(None) => (true, None),
        Ok(Some(msg)) => (false, Some(msg)),
        Err(e) => (false, Some(format!("error: {e}"))),
    };
    VerifyReport { id: id.to_string(), bound, pass, counterexample, elapsed }
}

/// Compares two series through `bound`; on failure names the first
/// offending degree and prints both homogeneous components.
pub fn compare(lhs: &SymFunc, rhs: &SymFunc, bound: usize) -> Option<String> {
    let l = lhs.truncate(bound.min(lhs.max_degree()));
    let r = rhs.truncate(bound.min(rhs.max_degree()));
    let d = l.first_disagreement(&r)?;
    Some(format!(
        "first difference in degree {d}\n  lhs: {}\n  rhs: {}",
        l.degree_part(d),
        r.degree_part(d)
    ))
}

fn require_bound(f: &SymFunc, bound: usize) -> Result<()> {
    if f.max_degree() < bound {
        return Err(Error::Inconsistent(format!(
            "result only known through degree {}, needed {bound}",
            f.max_degree()
        )));
    }
    Ok(())
}

fn compare_exact(lhs: &SymFunc, rhs: &SymFunc, bound: usize) -> CheckOutcome {
    require_bound(lhs, bound)?;
    require_bound(rhs, bound)?;
    Ok(compare(lhs, rhs, bound))
}

/// `L(anticyclic P) = -Σ(anticyclic P^!)`.
pub fn legendre_pair(p: SeriesName, dual: SeriesName, n: usize) -> CheckOutcome {
    let lhs = ch::series(p, n)?.legendre()?;
    let rhs = ch::series(dual, n)?.suspension().neg();
    compare_exact(&lhs, &rhs, n)
}

/// `∂_{p1} G = p1 / (1 + p1)` for the Legendre transform `G` of the Leib series.
pub fn zinb_derivative(n: usize) -> CheckOutcome {
    let g = ch::ch_leib_ac(n + 1).legendre()?;
    let transcribed = ch::zinb_legendre_side(n + 1);
    if let Some(msg) = compare(&g, &transcribed, n + 1) {
        return Ok(Some(format!("Legendre transform differs from the transcribed series\n{msg}")));
    }
    let p1 = SymFunc::p(1, n);
    let rhs = p1.mul(&SymFunc::one(n).add(&p1).recip()?);
    compare_exact(&g.d_p1(), &rhs, n)
}

/// `ch(P) ∘ Σ ch(P^!) = p1`.
pub fn inversion_pair(p: SeriesName, dual: SeriesName, n: usize) -> CheckOutcome {
    let lhs = ch::series(p, n)?.plethysm(&ch::series(dual, n)?.suspension())?;
    compare_exact(&lhs, &SymFunc::p(1, n), n)
}

/// `ch(PreLie) (1 + Ch(PreLie)) = p1 (1 + ch(PreLie) + ch(PreLie)^2)`.
pub fn bizarre(n: usize) -> CheckOutcome {
    let op = ch::ch_prelie_op(n)?;
    let conj = ch::ch_prelie_conj(n);
    let one = SymFunc::one(n);
    let lhs = op.mul(&one.add(&conj));
    let rhs = SymFunc::p(1, n).mul(&one.add(&op).add(&op.mul(&op)));
    compare_exact(&lhs, &rhs, n)
}

/// `-log((1 + sqrt(1 - 4u)) / 2) = Σ (1/2k) C(2k,k) u^k`.
pub fn taylor_dend(n: usize) -> CheckOutcome {
    compare_exact(&ch::neg_log_half_one_plus_sqrt(n)?, &ch::central_binomial_log(n), n)
}

/// `Ch(Dias) = (p1 ∂_{p1} - Id) Ch(Assoc)`.
pub fn dias_tensor(n: usize) -> CheckOutcome {
    compare_exact(&ch::ch_assoc_cyc(n).reflection_tensor(), &ch::ch_dias_ac(n), n)
}

/// Degree-`d` parts of `Ch(Perm)` are exactly `s_{(d-1,1)}`.
pub fn perm_reflection(n: usize) -> CheckOutcome {
    let f = ch::ch_perm_ac(n)?;
    for d in 2..=n {
        if let Some(msg) = single_schur(&f, d, Partition::new(vec![d as u32 - 1, 1])) {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

/// `None` when the degree-`d` part of `f` is exactly `s_lambda`.
pub fn single_schur(f: &SymFunc, d: usize, lambda: Partition) -> Option<String> {
    let expansion = f.schur_expand(d);
    let bad: Vec<String> = expansion
        .iter()
        .filter(|(mu, c)| **c != if **mu == lambda { Rat::from(1) } else { Rat::from(0) })
        .map(|(mu, c)| format!("<{mu}> = {c}"))
        .collect();
    if bad.is_empty() {
        None
    } else {
        Some(format!("degree {d} is not s_{lambda}: {}", bad.join(", ")))
    }
}

/// Schur positivity and integrality of the conjectured PreLie series in
/// degrees `2..=n + 1`.
pub fn conjecture_positivity(n: usize) -> CheckOutcome {
    let f = ch::ch_prelie_conj(n + 1);
    for d in 2..=n + 1 {
        let check = f.is_schur_positive(d);
        if !check.positive {
            let w: Vec<String> = check.witnesses.iter().map(|(l, c)| format!("<{l}> = {c}")).collect();
            return Ok(Some(format!("degree {d}: {}\n  component: {}", w.join(", "), f.degree_part(d))));
        }
    }
    Ok(None)
}

/// `∂_{p1}` of the degree-`(k+1)` part of the conjecture is the degree-`k` part of `ch(PreLie)`.
pub fn conjecture_restriction(n: usize) -> CheckOutcome {
    let conj = ch::ch_prelie_conj(n + 1);
    let op = ch::ch_prelie_op(n)?;
    compare_exact(&conj.d_p1(), &op, n)
}

/// Trace at the identity against the dimension formula for every named series.
pub fn series_dimensions(n: usize) -> CheckOutcome {
    for name in SeriesName::ALL {
        let f = ch::series(name, n)?;
        for d in 1..=n {
            let expected = name.expected_dimension(d).expect("formula");
            let got = ch::dimension_in_degree(&f, d);
            if got != Rat::from_bigint(expected.into()) {
                return Ok(Some(format!("{name} degree {d}: dimension {got}, expected {expected}")));
            }
        }
    }
    Ok(None)
}

fn same_terms(a: &SymFunc, b: &SymFunc) -> bool {
    a.terms().eq(b.terms())
}

/// `None` when `got` equals the degree-`d` part of `expected`.
fn same_component(label: &str, d: usize, got: &SymFunc, expected: &SymFunc) -> Option<String> {
    let want = expected.degree_part(d);
    if got.terms().eq(want.terms()) {
        None
    } else {
        Some(format!("{label}, degree {d}\n  computed: {got}\n  expected: {want}"))
    }
}

/// Recursion-computed `τ_n` on Dias against the closed form.
pub fn tau_dias_closed_form(n: usize) -> CheckOutcome {
    let table = TauTable::build(&mut crate::nsoperad::Dias, n)?;
    for k in 1..=n {
        if table.get(k) != &dias_tau_closed_form(k) {
            return Ok(Some(format!("arity {k}: recursion {:?}", table.get(k).to_dense())));
        }
    }
    Ok(None)
}

/// `Σ_{k=0}^{n} τ_n^k = 0` and `τ_n^{n+1} = Id` on Dias.
pub fn tau_dias_companion(n: usize) -> CheckOutcome {
    let table = TauTable::build(&mut crate::nsoperad::Dias, n)?;
    Ok((1..=n).find(|&k| !tau_char_poly_check(table.get(k), k)).map(|k| format!("fails in arity {k}")))
}

/// `τ_n^{n+1} = Id` for every arity up to `n`.
pub fn tau_order(kind: OperadKind, n: usize) -> CheckOutcome {
    let mut op = engine(kind);
    let table = TauTable::build(op.as_mut(), n)?;
    for k in 1..=n {
        let t = table.get(k);
        let mut p = t.clone();
        for _ in 0..k {
            p = t.compose(&p);
        }
        if !p.is_identity() {
            return Ok(Some(format!("{kind}: τ_{k}^{} is not the identity", k + 1)));
        }
    }
    Ok(None)
}

/// `tau_from_form` against the recursion on every basis element, both operads.
pub fn tau_form_agreement(n: usize) -> CheckOutcome {
    for kind in [OperadKind::Dias, OperadKind::Dend] {
        let mut op = engine(kind);
        let table = TauTable::build(op.as_mut(), n)?;
        for k in 1..=n {
            for idx in 0..op.dim(k)? {
                let w = op.representative(k, idx)?;
                let from_form = tau_from_form(op.as_mut(), &w)?;
                if from_form != table.apply(k, &[(idx, Rat::from(1))]) {
                    return Ok(Some(format!("{kind} arity {k}: τ{w} differs")));
                }
            }
        }
    }
    Ok(None)
}

/// The defining relations vanish in every context, and for Dend the
/// relation span has codimension `c_n` among all monomials.
pub fn ns_relations(n: usize) -> CheckOutcome {
    let mut dend = Dend::new();
    let mut dias = crate::nsoperad::Dias;
    for k in 3..=n {
        for m in Monomial::all(k) {
            for rel in relation_instances(&m) {
                if !dend.eval_combination(&rel)?.is_empty() {
                    return Ok(Some(format!("Dend relation at {m} does not vanish")));
                }
            }
            for rel in dias_relation_instances(&m) {
                if !dias.eval_combination(&rel)?.is_empty() {
                    return Ok(Some(format!("Dias relation at {m} does not vanish")));
                }
            }
        }
    }
    for k in 1..=n {
        let q = Dend::relation_quotient_dim(k);
        if q as u128 != catalan(k) {
            return Ok(Some(format!("Dend({k}) modulo relations has dimension {q}")));
        }
    }
    Ok(None)
}

/// `Ch(Dend)` from the traces of `τ_n` against the closed form, `n ≤ bound`.
pub fn dend_tau_character(n: usize) -> CheckOutcome {
    let mut op = Dend::new();
    let table = TauTable::build(&mut op, n)?;
    let expected = ch::ch_dend_ac(n + 1)?;
    for k in 1..=n {
        let got = induced_character_via_tau(table.get(k), k);
        if let Some(msg) = same_component("Dend via τ", k + 1, &got, &expected) {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

/// Dias through its τ traces against the closed form.
pub fn dias_tau_character(n: usize) -> CheckOutcome {
    let expected = ch::ch_dias_ac(n + 1);
    for k in 1..=n {
        let got = induced_character_via_tau(&dias_tau_closed_form(k), k);
        if let Some(msg) = same_component("Dias via τ", k + 1, &got, &expected) {
            return Ok(Some(msg));
        }
    }
    Ok(None)
}

/// Sub-operad or quotient built by saturation, checked arity by arity.
struct BruteCase {
    kind: OperadKind,
    quotient: bool,
    label: &'static str,
}

fn brute_spaces(case: &BruteCase, n: usize) -> Result<(InducedOperad, Vec<Subspace>)> {
    let mut ind = InducedOperad::new(case.kind, n)?;
    let seed = match (case.kind, case.quotient) {
        (OperadKind::Dias, _) => seeds::leibniz_bracket(&ind),
        (OperadKind::Dend, false) => seeds::prelie_product(&ind),
        (OperadKind::Dend, true) => seeds::zinbiel_relation(&ind),
    };
    let spaces = if case.quotient {
        generate_ideal(&mut ind, &seed, n)?
    } else {
        generate_suboperad(&mut ind, &seed, n)?
    };
    for s in &spaces {
        check_stable(&ind, s)?;
    }
    Ok((ind, spaces))
}

fn brute_character(case: BruteCase, n: usize, expected: &SymFunc, schur: bool) -> CheckOutcome {
    let (ind, spaces) = brute_spaces(&case, n)?;
    for k in 1..=n {
        let space = if case.quotient { Space::Quotient(&spaces[k - 1]) } else { Space::Sub(&spaces[k - 1]) };
        let got = module_character(&ind, k, space)?;
        if let Some(msg) = same_component(case.label, k + 1, &got, expected) {
            return Ok(Some(msg));
        }
        if schur {
            if let Some(msg) = single_schur(&got, k + 1, Partition::new(vec![k as u32, 1])) {
                return Ok(Some(format!("{}: {msg}", case.label)));
            }
        }
        let restricted = restricted_character(&ind, k, space)?;
        if !restricted.terms().eq(got.d_p1().terms()) {
            return Ok(Some(format!("{} arity {k}: S_n restriction differs from ∂p1", case.label)));
        }
    }
    Ok(None)
}

pub fn brute_perm(n: usize) -> CheckOutcome {
    let case = BruteCase { kind: OperadKind::Dias, quotient: true, label: "Perm" };
    brute_character(case, n, &ch::ch_perm_ac(n + 1)?, true)
}

pub fn brute_leib(n: usize) -> CheckOutcome {
    let case = BruteCase { kind: OperadKind::Dias, quotient: false, label: "Leib" };
    brute_character(case, n, &ch::lie_series(n + 1), false)
}

pub fn brute_zinb(n: usize) -> CheckOutcome {
    let case = BruteCase { kind: OperadKind::Dend, quotient: true, label: "Zinb" };
    brute_character(case, n, &ch::lie_series(n + 1), false)
}

pub fn brute_prelie(n: usize) -> CheckOutcome {
    let case = BruteCase { kind: OperadKind::Dend, quotient: false, label: "PreLie" };
    brute_character(case, n, &ch::ch_prelie_conj(n + 1), false)
}

/// Ambient characters: Dias against the closed form, both operads against
/// the τ-trace formula, and ideal plus quotient equal to the ambient module.
pub fn brute_ambient(n: usize) -> CheckOutcome {
    let dias_expected = ch::ch_dias_ac(n + 1);
    for kind in [OperadKind::Dias, OperadKind::Dend] {
        let case = BruteCase { kind, quotient: true, label: "ideal" };
        let (ind, ideals) = brute_spaces(&case, n)?;
        for k in 1..=n {
            let amb = module_character(&ind, k, Space::Ambient)?;
            if kind == OperadKind::Dias {
                if let Some(msg) = same_component("Dias ambient", k + 1, &amb, &dias_expected) {
                    return Ok(Some(msg));
                }
            }
            let via_tau = induced_character_via_tau(ind.tau().get(k), k);
            if via_tau != amb {
                return Ok(Some(format!("{kind} arity {k}: ambient {amb} but τ traces give {via_tau}")));
            }
            let split = module_character(&ind, k, Space::Sub(&ideals[k - 1]))?
                .add(&module_character(&ind, k, Space::Quotient(&ideals[k - 1]))?);
            if split != amb {
                return Ok(Some(format!("{kind} arity {k}: ideal + quotient {split} differs from {amb}")));
            }
        }
    }
    Ok(None)
}

/// One row of the dimension table.
#[derive(Clone, Debug, Serialize)]
pub struct DimRow {
    pub operad: String,
    pub n: usize,
    pub computed: u128,
    pub expected: u128,
}

pub const DIM_OPERADS: [&str; 6] = ["dias", "dend", "perm", "leib", "zinb", "prelie"];

/// Brute-force dimensions of one operad for arities `1..=max_n`.
pub fn dimension_table(operad: &str, max_n: usize) -> Result<Vec<DimRow>> {
    let expected = |n: usize| -> u128 {
        match operad {
            "dias" | "perm" => n as u128,
            "dend" => catalan(n),
            "leib" | "zinb" => factorial(n),
            _ => (n as u128).pow(n as u32 - 1),
        }
    };
    let computed: Vec<u128> = match operad {
        "dias" | "dend" => {
            let mut op = engine(operad.parse()?);
            (1..=max_n).map(|n| op.dim(n).map(|d| d as u128)).collect::<Result<_>>()?
        }
        "perm" | "leib" | "zinb" | "prelie" => {
            let case = match operad {
                "perm" => BruteCase { kind: OperadKind::Dias, quotient: true, label: "Perm" },
                "leib" => BruteCase { kind: OperadKind::Dias, quotient: false, label: "Leib" },
                "zinb" => BruteCase { kind: OperadKind::Dend, quotient: true, label: "Zinb" },
                _ => BruteCase { kind: OperadKind::Dend, quotient: false, label: "PreLie" },
            };
            let (ind, spaces) = brute_spaces(&case, max_n)?;
            spaces
                .iter()
                .map(|s| if case.quotient { ind.ambient_dim(s.n) - s.dim() } else { s.dim() } as u128)
                .collect()
        }
        _ => return Err(Error::UnknownName(operad.to_string())),
    };
    Ok(computed
        .into_iter()
        .enumerate()
        .map(|(i, c)| DimRow { operad: operad.to_string(), n: i + 1, computed: c, expected: expected(i + 1) })
        .collect())
}

/// Dimension tables of all six operads; Dend alone goes up to its τ arity.
pub fn dimensions(n: usize) -> CheckOutcome {
    for operad in DIM_OPERADS {
        let bound = match operad {
            "dias" => OperadKind::Dias.cap(),
            "dend" => OperadKind::Dend.cap(),
            _ => n,
        };
        for row in dimension_table(operad, bound)? {
            if row.computed != row.expected {
                return Ok(Some(format!("{operad}({}) has dimension {}, expected {}", row.n, row.computed, row.expected)));
            }
        }
    }
    Ok(None)
}

/// A named check with its default bound.
pub struct Identity {
    pub id: &'static str,
    pub default_bound: usize,
    pub summary: &'static str,
    pub run: fn(usize) -> CheckOutcome,
}

pub fn registry() -> Vec<Identity> {
    use SeriesName::*;
    vec![
        Identity { id: "conjecture-positivity", default_bound: 14, summary: "conjectured PreLie series is Schur-positive and integral in degrees n+1 <= bound+1", run: conjecture_positivity },
        Identity { id: "conjecture-restriction", default_bound: 10, summary: "d/dp1 of the conjecture gives ch(PreLie)", run: conjecture_restriction },
        Identity { id: "bizarre", default_bound: 15, summary: "ch(PreLie)(1 + Ch(PreLie)) = p1(1 + ch(PreLie) + ch(PreLie)^2)", run: bizarre },
        Identity { id: "legendre-perm-prelie", default_bound: 12, summary: "L Ch(Perm) = -Sigma Ch(PreLie)", run: |n| legendre_pair(PermAc, PrelieConj, n) },
        Identity { id: "legendre-dias-dend", default_bound: 12, summary: "L Ch(Dias) = -Sigma Ch(Dend)", run: |n| legendre_pair(DiasAc, DendAc, n) },
        Identity { id: "legendre-leib-zinb", default_bound: 12, summary: "L Ch(Leib) = -Sigma Ch(Zinb)", run: |n| legendre_pair(LeibAc, ZinbAc, n) },
        Identity { id: "zinb-derivative", default_bound: 12, summary: "d/dp1 of L Ch(Leib) is p1/(1+p1)", run: zinb_derivative },
        Identity { id: "inversion-perm-prelie", default_bound: 10, summary: "ch(Perm) o Sigma ch(PreLie) = p1", run: |n| inversion_pair(PermOp, PrelieOp, n) },
        Identity { id: "inversion-dias-dend", default_bound: 10, summary: "ch(Dias) o Sigma ch(Dend) = p1", run: |n| inversion_pair(DiasOp, DendOp, n) },
        Identity { id: "inversion-leib-zinb", default_bound: 10, summary: "ch(Leib) o Sigma ch(Zinb) = p1", run: |n| inversion_pair(LeibOp, ZinbOp, n) },
        Identity { id: "taylor-dend", default_bound: 15, summary: "-log((1+sqrt(1-4u))/2) = sum C(2n,n) u^n / 2n", run: taylor_dend },
        Identity { id: "dias-tensor", default_bound: 12, summary: "Ch(Dias) = (p1 d/dp1 - Id) Ch(Assoc)", run: dias_tensor },
        Identity { id: "perm-reflection", default_bound: 12, summary: "Ch(Perm) in degree d is s_(d-1,1)", run: perm_reflection },
        Identity { id: "series-dimensions", default_bound: 12, summary: "traces at the identity match the dimension formulas", run: series_dimensions },
        Identity { id: "tau-dias-closed-form", default_bound: 7, summary: "recursive tau on Dias equals the closed form", run: tau_dias_closed_form },
        Identity { id: "tau-dias-companion", default_bound: 7, summary: "1 + tau + ... + tau^n = 0 on Dias(n)", run: tau_dias_companion },
        Identity { id: "tau-order-dias", default_bound: 12, summary: "tau_n^(n+1) = Id on Dias", run: |n| tau_order(OperadKind::Dias, n) },
        Identity { id: "tau-order-dend", default_bound: 8, summary: "tau_n^(n+1) = Id on Dend", run: |n| tau_order(OperadKind::Dend, n) },
        Identity { id: "tau-form", default_bound: 6, summary: "tau from the invariant form equals the recursion", run: tau_form_agreement },
        Identity { id: "ns-relations", default_bound: 6, summary: "defining relations vanish; Dend relation quotient has Catalan dimension", run: ns_relations },
        Identity { id: "dend-tau-character", default_bound: 8, summary: "Ch(Dend) from tau traces", run: dend_tau_character },
        Identity { id: "dias-tau-character", default_bound: 12, summary: "Ch(Dias) from tau traces", run: dias_tau_character },
        Identity { id: "brute-perm", default_bound: 5, summary: "Perm(n) character is the reflection representation", run: brute_perm },
        Identity { id: "brute-leib", default_bound: 5, summary: "Leib(n) character is Lie(n+1)", run: brute_leib },
        Identity { id: "brute-zinb", default_bound: 5, summary: "Zinb(n) character is Lie(n+1)", run: brute_zinb },
        Identity { id: "brute-prelie", default_bound: 5, summary: "PreLie(n) character matches the conjecture", run: brute_prelie },
        Identity { id: "brute-ambient", default_bound: 5, summary: "induced Dias/Dend characters, tau traces, ideal + quotient", run: brute_ambient },
        Identity { id: "dimensions", default_bound: 5, summary: "dimension tables of all six operads", run: dimensions },
    ]
}

pub fn run_identity(id: &str, bound: Option<usize>) -> Result<VerifyReport> {
    let entry = registry().into_iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownName(id.to_string()))?;
    let bound = bound.unwrap_or(entry.default_bound);
    Ok(run_check(entry.id, bound, || (entry.run)(bound)))
}

/// Every registered identity at its default bound.
pub fn run_all() -> Vec<VerifyReport> {
    registry().into_iter().map(|e| run_check(e.id, e.default_bound, || (e.run)(e.default_bound))).collect()
}

/// One line of the conjecture report.
#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub schur_positive: bool,
    pub integral: bool,
    pub brute_force: Option<bool>,
    pub restriction: Option<bool>,
}

/// Per-arity evidence for the conjectured PreLie character, then the
/// global identities through degree `max_n + 1`.
pub fn conjecture_report(max_n: usize) -> Result<(Vec<ConjectureRow>, Vec<VerifyReport>)> {
    let conj = ch::ch_prelie_conj(max_n + 1);
    let brute_n = max_n.min(crate::symoperad::brute_cap(OperadKind::Dend));
    let brute = if brute_n >= 1 {
        let case = BruteCase { kind: OperadKind::Dend, quotient: false, label: "PreLie" };
        let (ind, spaces) = brute_spaces(&case, brute_n)?;
        (1..=brute_n)
            .map(|k| module_character(&ind, k, Space::Sub(&spaces[k - 1])).map(|c| same_terms(&c, &conj.degree_part(k + 1))))
            .collect::<Result<Vec<bool>>>()?
    } else {
        Vec::new()
    };
    let restriction_n = max_n.min(10);
    let op = ch::ch_prelie_op(restriction_n.max(1))?;
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let expansion = conj.schur_expand(n + 1);
        let integral = expansion.values().all(Rat::is_integer);
        let schur_positive = integral && expansion.values().all(|c| !c.is_negative());
        let restriction = (n <= restriction_n)
            .then(|| same_terms(&conj.degree_part(n + 1).d_p1(), &op.degree_part(n)));
        rows.push(ConjectureRow { n, schur_positive, integral, brute_force: brute.get(n - 1).copied(), restriction });
    }
    let d = max_n + 1;
    let reports = vec![
        run_check("bizarre", d, || bizarre(d)),
        run_check("legendre-perm-prelie", d, || legendre_pair(SeriesName::PermAc, SeriesName::PrelieConj, d)),
    ];
    Ok((rows, reports))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_identity_is_an_error() {
        assert!(run_identity("no-such-identity", None).is_err());
    }

    #[test]
    fn small_bounds_pass() {
        for e in registry() {
            let bound = e.default_bound.min(4);
            let r = run_check(e.id, bound, || (e.run)(bound));
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn failure_names_first_degree() {
        let a = SymFunc::p(1, 4).add(&SymFunc::p(3, 4));
        let b = SymFunc::p(1, 4);
        let msg = compare(&a, &b, 4).unwrap();
        assert!(msg.starts_with("first difference in degree 3"), "{msg}");
    }

    #[test]
    fn conjecture_report_small() {
        let (rows, reports) = conjecture_report(6).unwrap();
        assert!(rows.iter().all(|r| r.schur_positive && r.integral));
        assert_eq!(rows.iter().filter(|r| r.brute_force == Some(true)).count(), 5);
        assert!(reports.iter().all(|r| r.pass));
    }
}
