//! Acceptance suite: one PASS/FAIL line per criterion on stdout.

use std::io::Write;
use std::time::Instant;

use num_rational::Ratio;
use num_traits::{One, Zero};

use anticyclic::characters::{self as ch, catalan};
use anticyclic::numbercomb::{factorial, Partition};
use anticyclic::rat::Rat;
use anticyclic::symfunc::SymFunc;
use anticyclic::verify::{self, VerifyReport};

/// Runs `checks`, prints one summary line and fails the test on any failure.
fn criterion(number: usize, title: &str, checks: &[(&str, usize)], extra: impl FnOnce() -> Option<String>) {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    for (id, bound) in checks {
        let r: VerifyReport = verify::run_identity(id, Some(*bound)).expect("registered identity");
        if !r.pass {
            failures.push(r.to_string());
        }
    }
    if let Some(msg) = extra() {
        failures.push(msg);
    }
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    writeln!(out, "{status} criterion {number}: {title} ({:.2}s)", start.elapsed().as_secs_f64()).unwrap();
    for f in &failures {
        writeln!(out, "    {f}").unwrap();
    }
    drop(out);
    assert!(failures.is_empty(), "criterion {number} failed: {failures:?}");
}

fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn ones(n: usize) -> Partition {
    Partition::new(vec![1; n])
}

#[test]
fn criterion_1_conjecture_positivity() {
    criterion(1, "conjectured PreLie series Schur-positive and integral, n <= 14", &[("conjecture-positivity", 14)], || {
        // dimension of PreLie(n) is n^(n-1)
        let f = ch::ch_prelie_conj(15);
        (1..=14usize).find_map(|n| {
            let dim = f.degree_part(n + 1).trace_eval(&ones(n + 1));
            let want = Rat::from_bigint(num_bigint::BigInt::from(n).pow(n as u32 - 1));
            (dim != want).then(|| format!("dimension of arity {n} is {dim}, expected {want}"))
        })
    });
}

#[test]
fn criterion_2_bizarre() {
    criterion(2, "PreLie functional equation through degree 15", &[("bizarre", 15)], || None);
}

#[test]
fn criterion_3_legendre() {
    criterion(
        3,
        "Legendre transforms of Perm, Dias, Leib and the Zinb derivative through degree 12",
        &[("legendre-perm-prelie", 12), ("legendre-dias-dend", 12), ("legendre-leib-zinb", 12), ("zinb-derivative", 12)],
        || {
            // p1/(1+p1) by hand: Σ (-1)^(k+1) p1^k
            let g = ch::zinb_legendre_side(12);
            let d = g.d_p1();
            let mut want = SymFunc::zero(11);
            for k in 1..=11 {
                want.add_term(ones(k), Rat::int(if k % 2 == 1 { 1 } else { -1 }));
            }
            (!d.truncate(11).agrees_with(&want)).then(|| format!("derivative is {}", d.truncate(11)))
        },
    );
}

#[test]
fn criterion_4_inversion() {
    criterion(
        4,
        "plethystic inversion of Koszul-dual pairs through degree 10",
        &[("inversion-perm-prelie", 10), ("inversion-dias-dend", 10), ("inversion-leib-zinb", 10)],
        || None,
    );
}

#[test]
fn criterion_5_tau() {
    criterion(
        5,
        "tau: Dias closed form n <= 7, companion relation, order n+1 on both operads, form agreement n <= 6",
        &[
            ("tau-dias-closed-form", 7),
            ("tau-dias-companion", 7),
            ("tau-order-dias", 12),
            ("tau-order-dend", 8),
            ("tau-form", 6),
            ("ns-relations", 6),
        ],
        || None,
    );
}

#[test]
fn criterion_6_brute_force() {
    criterion(
        6,
        "brute-force characters of Perm, Leib, Zinb, PreLie and Dias for n <= 5, Dend via tau for n <= 8",
        &[
            ("brute-perm", 5),
            ("brute-leib", 5),
            ("brute-zinb", 5),
            ("brute-prelie", 5),
            ("brute-ambient", 5),
            ("dend-tau-character", 8),
        ],
        || {
            // reflection representation, by hand in degree 3: s_(2,1) = (p1^3 - p3)/3
            let f = ch::ch_perm_ac(3).unwrap().degree_part(3);
            let want = SymFunc::from_terms(3, [(ones(3), Rat::new(1, 3)), (partition(&[3]), Rat::new(-1, 3))]);
            (!f.agrees_with(&want)).then(|| format!("Perm degree 3 is {f}"))
        },
    );
}

#[test]
fn criterion_7_dimensions() {
    criterion(7, "dimension tables of Dias, Dend, Perm, Leib, Zinb, PreLie", &[("dimensions", 5)], || {
        let expect = |op: &str, n: usize| -> u128 {
            match op {
                "dias" | "perm" => n as u128,
                "dend" => [1, 2, 5, 14, 42, 132, 429, 1430][n - 1],
                "leib" | "zinb" => [1, 2, 6, 24, 120][n - 1],
                _ => [1, 2, 9, 64, 625][n - 1],
            }
        };
        for op in verify::DIM_OPERADS {
            let max_n = if op == "dend" { 8 } else { 5 };
            for row in verify::dimension_table(op, max_n).unwrap() {
                if row.computed != expect(op, row.n) {
                    return Some(format!("{op}({}) = {}", row.n, row.computed));
                }
            }
        }
        (catalan(8) != 1430 || factorial(5) != 120).then(|| "counting helpers disagree".to_string())
    });
}

type Q = Ratio<i128>;

/// `-log((1 + sqrt(1 - 4u)) / 2)` by plain power-series arithmetic.
fn taylor_by_hand(n: usize) -> Vec<Q> {
    // s^2 = 1 - 4u, s_0 = 1
    let mut s = vec![Q::zero(); n + 1];
    s[0] = Q::one();
    for k in 1..=n {
        let target = if k == 1 { Q::from(-4) } else { Q::zero() };
        let cross: Q = (1..k).map(|i| s[i] * s[k - i]).sum();
        s[k] = (target - cross) / Q::from(2);
    }
    let y: Vec<Q> = s.iter().enumerate().map(|(k, c)| if k == 0 { (Q::one() + c) / Q::from(2) } else { c / Q::from(2) }).collect();
    // log y from y' = y * (log y)'
    let mut dlog = vec![Q::zero(); n];
    for k in 0..n {
        let yk1 = y[k + 1] * Q::from(k as i128 + 1);
        let cross: Q = (0..k).map(|i| dlog[i] * y[k - i]).sum();
        dlog[k] = (yk1 - cross) / y[0];
    }
    let mut out = vec![Q::zero(); n + 1];
    for k in 1..=n {
        out[k] = -dlog[k - 1] / Q::from(k as i128);
    }
    out
}

#[test]
fn criterion_8_taylor() {
    criterion(8, "Taylor expansion used for Dend through degree 15", &[("taylor-dend", 15)], || {
        let by_hand = taylor_by_hand(15);
        let lib = ch::neg_log_half_one_plus_sqrt(15).unwrap();
        (1..=15usize).find_map(|k| {
            let binom = (factorial(2 * k) / (factorial(k) * factorial(k))) as i128;
            let closed = Q::new(binom, 2 * k as i128);
            let lib_k = lib.coeff(&ones(k));
            let lib_q = Q::new(lib_k.numer().try_into().unwrap(), lib_k.denom().try_into().unwrap());
            (by_hand[k] != closed || lib_q != closed)
                .then(|| format!("u^{k}: by hand {}, library {lib_k}, closed form {closed}", by_hand[k]))
        })
    });
}
