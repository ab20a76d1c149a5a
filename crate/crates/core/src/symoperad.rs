//! Induced `S_{n+1}`-modules `P(n) ⊗ Q S_n` built from a non-symmetric
//! anticyclic operad, with sub-operad and ideal saturation and Frobenius
//! characteristics.
//!
//! A basis pair `(w, v)` with `w ∈ S_n` and `v` a basis index of `P(n)`
//! stands for the operation `v(x_{w(1)}, …, x_{w(n)})`.

use std::collections::VecDeque;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{normalize, Echelon, SparseMatrix, SparseVec};
use crate::nsoperad::{engine, NsOperad, OperadKind, TauTable};
use crate::numbercomb::{factorial, gcd, partitions, z_of, Partition};
use crate::rat::Rat;
use crate::symfunc::SymFunc;

pub const BRUTE_DIAS_CAP: usize = 6;
pub const BRUTE_DEND_CAP: usize = 5;

/// Largest arity for the brute-force induced constructions;
/// `OPERAD_BRUTE_MAX_ARITY` overrides.
pub fn brute_cap(kind: OperadKind) -> usize {
    if let Some(v) = std::env::var("OPERAD_BRUTE_MAX_ARITY").ok().and_then(|v| v.trim().parse().ok()) {
        return v;
    }
    match kind {
        OperadKind::Dias => BRUTE_DIAS_CAP,
        OperadKind::Dend => BRUTE_DEND_CAP,
    }
}

/// Permutation of `0..n` as its list of images.
pub type Perm = Vec<usize>;

pub fn identity_perm(n: usize) -> Perm {
    (0..n).collect()
}

/// `a ∘ b`, i.e. `i ↦ a(b(i))`.
pub fn compose_perm(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse_perm(a: &[usize]) -> Perm {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// All permutations of `0..n` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut p = identity_perm(n);
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("successor");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Position of `p` in [`all_perms`].
pub fn perm_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank += smaller * factorial(n - 1 - i) as usize;
    }
    rank
}

pub fn cycle_type(p: &[usize]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// A permutation of cycle type `lambda` made of consecutive cycles.
pub fn perm_of_cycle_type(lambda: &Partition) -> Perm {
    let mut p = Vec::with_capacity(lambda.size());
    let mut start = 0;
    for &k in lambda.parts() {
        let k = k as usize;
        for j in 0..k {
            p.push(start + (j + 1) % k);
        }
        start += k;
    }
    p
}

/// The long cycle `(n+1, n, …, 2, 1)` on `m = n + 1` letters: `j ↦ j - 1`, `1 ↦ n + 1`.
pub fn long_cycle(m: usize) -> Perm {
    (0..m).map(|j| if j == 0 { m - 1 } else { j - 1 }).collect()
}

/// Generators of `S_m`: the transposition of the first two letters and the
/// cycle `j ↦ j + 1`.
pub fn group_generators(m: usize) -> Vec<Perm> {
    if m < 2 {
        return Vec::new();
    }
    let mut t = identity_perm(m);
    t.swap(0, 1);
    let c: Perm = (0..m).map(|j| (j + 1) % m).collect();
    vec![t, c]
}

/// `P(n) ⊗ Q S_n` for `n ≤ max_n`, with the `S_{n+1}` action through `τ_n`.
pub struct InducedOperad {
    pub kind: OperadKind,
    engine: Box<dyn NsOperad>,
    tau: TauTable,
    tau_powers: Vec<Vec<SparseMatrix>>,
    dims: Vec<usize>,
    max_n: usize,
}

impl InducedOperad {
    pub fn new(kind: OperadKind, max_n: usize) -> Result<InducedOperad> {
        let cap = brute_cap(kind);
        if max_n > cap {
            return Err(Error::CapExceeded { arity: max_n, cap });
        }
        let mut engine = engine(kind);
        // compositions reach arity max_n from arities below it
        let tau = TauTable::build(engine.as_mut(), max_n.max(2))?;
        let mut dims = vec![0];
        let mut tau_powers = Vec::new();
        for n in 1..=max_n.max(2) {
            dims.push(engine.dim(n)?);
            let t = tau.get(n);
            let mut powers = vec![SparseMatrix::identity(t.n)];
            for k in 1..=n {
                powers.push(t.compose(&powers[k - 1]));
            }
            tau_powers.push(powers);
        }
        Ok(InducedOperad { kind, engine, tau, tau_powers, dims, max_n })
    }

    pub fn max_arity(&self) -> usize {
        self.max_n
    }

    pub fn tau(&self) -> &TauTable {
        &self.tau
    }

    pub fn ns_dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    pub fn ambient_dim(&self, n: usize) -> usize {
        factorial(n) as usize * self.dims[n]
    }

    pub fn index(&self, n: usize, w: &[usize], v: usize) -> usize {
        perm_rank(w) * self.dims[n] + v
    }

    pub fn decode(&self, n: usize, idx: usize) -> (Perm, usize) {
        let d = self.dims[n];
        (unrank(n, idx / d), idx % d)
    }

    pub fn basis_vector(&self, n: usize, w: &[usize], v: usize) -> SparseVec {
        vec![(self.index(n, w, v), Rat::from(1))]
    }

    /// Action of `σ ∈ S_{n+1}`: `σ·(w, v) = (w', τ^k v)` where
    /// `σ w = w' c^k` with `w'` fixing `n + 1`.
    pub fn act(&self, n: usize, sigma: &[usize], x: &[(usize, Rat)]) -> SparseVec {
        debug_assert_eq!(sigma.len(), n + 1);
        let mut acc = Vec::new();
        for (idx, c) in x {
            let (w, v) = self.decode(n, *idx);
            let mut u: Perm = compose_perm(sigma, &extend(&w));
            let j0 = inverse_perm(&u)[n];
            let k = (j0 + 1) % (n + 1);
            // u c^{-k}, with c^{-1}(j) = j + 1 and c^{-1}(n+1) = 1
            u = (0..=n).map(|x| u[(x + k) % (n + 1)]).collect();
            debug_assert_eq!(u[n], n);
            let base = perm_rank(&u[..n]) * self.dims[n];
            for (r, t) in &self.tau_powers[n - 1][k].cols[v] {
                acc.push((base + r, t * c));
            }
        }
        normalize(acc)
    }

    /// Relabeling action of `σ ∈ S_n`: `(w, v) ↦ (σ w, v)`.
    pub fn relabel(&self, n: usize, sigma: &[usize], x: &[(usize, Rat)]) -> SparseVec {
        let d = self.dims[n];
        normalize(
            x.iter()
                .map(|(idx, c)| {
                    let (w, v) = self.decode(n, *idx);
                    (perm_rank(&compose_perm(sigma, &w)) * d + v, c.clone())
                })
                .collect(),
        )
    }

    /// `x ∘_i y` for `x` of arity `m` and `y` of arity `n`:
    /// `(w, u) ∘_i (w', u') = (w'', u ∘_p u')` with `p = w^{-1}(i)`.
    pub fn compose(&mut self, m: usize, x: &[(usize, Rat)], i: usize, n: usize, y: &[(usize, Rat)]) -> Result<SparseVec> {
        if i == 0 || i > m {
            return Err(Error::OutOfRange(format!("slot {i} for arity {m}")));
        }
        let target = m + n - 1;
        if target > self.max_n.max(2) {
            return Err(Error::CapExceeded { arity: target, cap: self.max_n });
        }
        let mut acc = Vec::new();
        for (xi, cx) in x {
            let (w, u) = self.decode(m, *xi);
            let p = inverse_perm(&w)[i - 1];
            for (yi, cy) in y {
                let (w2, u2) = self.decode(n, *yi);
                let shift = |lab: usize| if lab > i - 1 { lab + n - 1 } else { lab };
                let mut w3 = Vec::with_capacity(target);
                w3.extend(w[..p].iter().map(|&l| shift(l)));
                w3.extend(w2.iter().map(|&l| l + i - 1));
                w3.extend(w[p + 1..].iter().map(|&l| shift(l)));
                let base = perm_rank(&w3) * self.dims[target];
                let c = cx * cy;
                for (r, t) in self.engine.compose_basis(m, u, p + 1, n, u2)? {
                    acc.push((base + r, &t * &c));
                }
            }
        }
        Ok(normalize(acc))
    }

    /// Text form of a basis element, e.g. `((x2<x1)>x3)`.
    pub fn render(&mut self, n: usize, idx: usize) -> Result<String> {
        let (w, v) = self.decode(n, idx);
        let labels: Vec<usize> = w.iter().map(|l| l + 1).collect();
        Ok(self.engine.representative(n, v)?.render_with(&labels))
    }
}

fn extend(w: &[usize]) -> Perm {
    let mut u = w.to_vec();
    u.push(w.len());
    u
}

fn unrank(n: usize, mut r: usize) -> Perm {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut p = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i) as usize;
        p.push(pool.remove(r / f));
        r %= f;
    }
    p
}

/// Subspace of the arity-`n` induced module.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub n: usize,
    pub echelon: Echelon,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Basis as sparse `row,col,value` triplets.
    pub fn to_triplet_csv(&self) -> String {
        let mut out = String::from("row,col,value\n");
        for (r, row) in self.echelon.rows().iter().enumerate() {
            for (c, x) in row {
                out.push_str(&format!("{r},{c},{}\n", x.to_fraction_string()));
            }
        }
        out
    }
}

/// Inserts `candidates` and closes the span under `gens` acting via `apply`.
fn saturate(
    ech: &mut Echelon,
    candidates: Vec<SparseVec>,
    gens: &[Perm],
    apply: impl Fn(&[usize], &[(usize, Rat)]) -> SparseVec,
) {
    let mut queue: VecDeque<SparseVec> = VecDeque::new();
    for c in candidates {
        if ech.insert(&c) {
            queue.push_back(c);
        }
    }
    while let Some(v) = queue.pop_front() {
        for g in gens {
            let image = apply(g, &v);
            if ech.insert(&image) {
                queue.push_back(image);
            }
        }
    }
}

/// Sub-operad generated by an arity-2 element, arities `1..=max_n`.
pub fn generate_suboperad(ind: &mut InducedOperad, seed: &[(usize, Rat)], max_n: usize) -> Result<Vec<Subspace>> {
    generate(ind, seed, max_n, false)
}

/// Operadic ideal generated by an arity-2 element, arities `1..=max_n`.
pub fn generate_ideal(ind: &mut InducedOperad, seed: &[(usize, Rat)], max_n: usize) -> Result<Vec<Subspace>> {
    generate(ind, seed, max_n, true)
}

fn generate(ind: &mut InducedOperad, seed: &[(usize, Rat)], max_n: usize, ideal: bool) -> Result<Vec<Subspace>> {
    if max_n > ind.max_arity() {
        return Err(Error::CapExceeded { arity: max_n, cap: ind.max_arity() });
    }
    let mut out: Vec<Subspace> = Vec::new();
    for n in 1..=max_n {
        let dim = ind.ambient_dim(n);
        let mut ech = if ideal { Echelon::new_reduced(dim) } else { Echelon::new(dim) };
        let mut candidates = Vec::new();
        match n {
            1 => {
                if !ideal {
                    candidates.push(ind.basis_vector(1, &[0], 0));
                }
            }
            2 => candidates.push(seed.to_vec()),
            _ => {
                let prev = out[n - 2].echelon.rows().to_vec();
                let two = out[1].echelon.rows().to_vec();
                if ideal {
                    let ambient_two: Vec<SparseVec> = (0..ind.ambient_dim(2)).map(|i| vec![(i, Rat::from(1))]).collect();
                    let ambient_prev: Vec<SparseVec> =
                        (0..ind.ambient_dim(n - 1)).map(|i| vec![(i, Rat::from(1))]).collect();
                    for y in &prev {
                        for g in &ambient_two {
                            for i in 1..n {
                                candidates.push(ind.compose(n - 1, y, i, 2, g)?);
                            }
                        }
                    }
                    for x in &ambient_prev {
                        for r in &two {
                            for i in 1..n {
                                candidates.push(ind.compose(n - 1, x, i, 2, r)?);
                            }
                        }
                    }
                } else {
                    for x in &prev {
                        for s in &two {
                            for i in 1..n {
                                candidates.push(ind.compose(n - 1, x, i, 2, s)?);
                            }
                        }
                    }
                }
            }
        }
        let gens = group_generators(n);
        let ind_ref = &*ind;
        saturate(&mut ech, candidates, &gens, |g, v| ind_ref.relabel(n, g, v));
        out.push(Subspace { n, echelon: ech });
    }
    Ok(out)
}

/// Which space a character is read from.
#[derive(Clone, Copy, Debug)]
pub enum Space<'a> {
    Ambient,
    Sub(&'a Subspace),
    Quotient(&'a Subspace),
}

impl Space<'_> {
    pub fn dim(&self, ind: &InducedOperad, n: usize) -> usize {
        match self {
            Space::Ambient => ind.ambient_dim(n),
            Space::Sub(s) => s.dim(),
            Space::Quotient(s) => ind.ambient_dim(n) - s.dim(),
        }
    }
}

/// Checks that every basis vector of `sub` stays inside under the
/// generators of `S_{n+1}`.
pub fn check_stable(ind: &InducedOperad, sub: &Subspace) -> Result<()> {
    let n = sub.n;
    let mut gens = group_generators(n + 1);
    gens.push(long_cycle(n + 1));
    for (r, row) in sub.echelon.rows().iter().enumerate() {
        for g in &gens {
            if !sub.echelon.contains(&ind.act(n, g, row)) {
                return Err(Error::NotStable(format!("arity {n}, basis vector {r}, permutation {g:?}")));
            }
        }
    }
    Ok(())
}

/// Trace of `σ ∈ S_{n+1}` on the space.
pub fn trace(ind: &InducedOperad, n: usize, space: Space<'_>, sigma: &[usize]) -> Result<Rat> {
    match space {
        Space::Ambient => {
            let mut t = Rat::zero();
            for idx in 0..ind.ambient_dim(n) {
                let image = ind.act(n, sigma, &[(idx, Rat::from(1))]);
                if let Ok(k) = image.binary_search_by_key(&idx, |(i, _)| *i) {
                    t += &image[k].1;
                }
            }
            Ok(t)
        }
        Space::Sub(sub) => {
            let mut t = Rat::zero();
            for (r, row) in sub.echelon.rows().iter().enumerate() {
                let red = sub.echelon.reduce(&ind.act(n, sigma, row));
                if !red.remainder.is_empty() {
                    return Err(Error::NotStable(format!("arity {n}, basis vector {r}")));
                }
                if let Some((_, c)) = red.coords.iter().find(|(j, _)| *j == r) {
                    t += c;
                }
            }
            Ok(t)
        }
        Space::Quotient(sub) => {
            let mut t = Rat::zero();
            for c in sub.echelon.free_columns() {
                let red = sub.echelon.reduce(&ind.act(n, sigma, &[(c, Rat::from(1))]));
                if let Ok(k) = red.remainder.binary_search_by_key(&c, |(i, _)| *i) {
                    t += &red.remainder[k].1;
                }
            }
            Ok(t)
        }
    }
}

/// Frobenius characteristic of the `S_{n+1}`-module, homogeneous of degree `n + 1`.
pub fn module_character(ind: &InducedOperad, n: usize, space: Space<'_>) -> Result<SymFunc> {
    let mut f = SymFunc::zero(n + 1);
    for mu in partitions(n + 1) {
        let t = trace(ind, n, space, &perm_of_cycle_type(&mu))?;
        f.add_term(mu.clone(), &t / &Rat::from_bigint(z_of(&mu).into()));
    }
    Ok(f)
}

/// Characteristic of the same space restricted to `S_n` (permutations fixing `n + 1`).
pub fn restricted_character(ind: &InducedOperad, n: usize, space: Space<'_>) -> Result<SymFunc> {
    let mut f = SymFunc::zero(n);
    for mu in partitions(n) {
        let sigma = extend(&perm_of_cycle_type(&mu));
        let t = trace(ind, n, space, &sigma)?;
        f.add_term(mu.clone(), &t / &Rat::from_bigint(z_of(&mu).into()));
    }
    Ok(f)
}

/// `(1/(n+1)) Σ_j tr(τ^j) p_{(n+1)/g}^g` with `g = gcd(j, n+1)`.
pub fn induced_character_via_tau(tau: &SparseMatrix, n: usize) -> SymFunc {
    let traces = tau.power_traces(n);
    let m = n as u64 + 1;
    let mut f = SymFunc::zero(n + 1);
    for (j, t) in traces.iter().enumerate() {
        let g = gcd(j as u64, m);
        let lambda = Partition::repeated((m / g) as u32, g as usize);
        f.add_term(lambda, t / &Rat::int(m as i64));
    }
    f
}

/// The four seeds, as elements of the arity-2 induced modules.
pub mod seeds {
    use super::*;

    fn element(ind: &InducedOperad, terms: &[(&[usize], usize, i64)]) -> SparseVec {
        normalize(terms.iter().map(|(w, v, c)| (ind.index(2, w, *v), Rat::int(*c))).collect())
    }

    /// `[x1, x2] = x1 ⊣ x2 - x2 ⊢ x1`; generates Leib and the ideal defining Perm.
    pub fn leibniz_bracket(ind: &InducedOperad) -> SparseVec {
        element(ind, &[(&[0, 1], 0, 1), (&[1, 0], 1, -1)])
    }

    /// `x2 ≻ x1 - x1 ≺ x2`; generates PreLie.
    pub fn prelie_product(ind: &InducedOperad) -> SparseVec {
        element(ind, &[(&[1, 0], 1, 1), (&[0, 1], 0, -1)])
    }

    /// `x1 ≺ x2 - x2 ≻ x1`; generates the ideal defining Zinb.
    pub fn zinbiel_relation(ind: &InducedOperad) -> SparseVec {
        element(ind, &[(&[0, 1], 0, 1), (&[1, 0], 1, -1)])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters;

    fn one() -> Rat {
        Rat::from(1)
    }

    #[test]
    fn permutation_helpers() {
        let perms = all_perms(4);
        assert_eq!(perms.len(), 24);
        for (r, p) in perms.iter().enumerate() {
            assert_eq!(perm_rank(p), r);
            assert_eq!(unrank(4, r), *p);
        }
        let lambda = Partition::new(vec![3, 2, 1]);
        assert_eq!(cycle_type(&perm_of_cycle_type(&lambda)), lambda);
        assert_eq!(cycle_type(&long_cycle(5)), Partition::single(5));
        assert_eq!(long_cycle(3), vec![2, 0, 1]);
    }

    #[test]
    fn action_basics() {
        let ind = InducedOperad::new(OperadKind::Dias, 3).unwrap();
        let n = 3;
        let x = ind.basis_vector(n, &[0, 1, 2], 1);
        // S_n part of the transversal
        let sigma = vec![1, 2, 0, 3];
        assert_eq!(ind.act(n, &sigma, &x), ind.basis_vector(n, &[1, 2, 0], 1));
        // the long cycle acts by τ
        let image = ind.act(n, &long_cycle(4), &x);
        let tau_v = ind.tau().apply(3, &[(1, one())]);
        let expected: SparseVec = tau_v.iter().map(|(v, c)| (ind.index(n, &[0, 1, 2], *v), c.clone())).collect();
        assert_eq!(image, normalize(expected));
    }

    #[test]
    fn action_is_a_group_action() {
        for kind in [OperadKind::Dias, OperadKind::Dend] {
            let ind = InducedOperad::new(kind, 4).unwrap();
            for n in 1..=4 {
                let perms = all_perms(n + 1);
                let step = (perms.len() / 7).max(1);
                for a in perms.iter().step_by(step) {
                    for b in perms.iter().skip(3).step_by(step) {
                        for idx in (0..ind.ambient_dim(n)).step_by(5) {
                            let x = vec![(idx, one())];
                            let lhs = ind.act(n, a, &ind.act(n, b, &x));
                            let rhs = ind.act(n, &compose_perm(a, b), &x);
                            assert_eq!(lhs, rhs, "{kind} n={n}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn composition_unit_and_equivariance() {
        let mut ind = InducedOperad::new(OperadKind::Dend, 4).unwrap();
        let unit = ind.basis_vector(1, &[0], 0);
        for idx in 0..ind.ambient_dim(3) {
            let x = vec![(idx, one())];
            assert_eq!(ind.compose(1, &unit, 1, 3, &x).unwrap(), x);
            for i in 1..=3 {
                assert_eq!(ind.compose(3, &x, i, 1, &unit).unwrap(), x);
            }
        }
        // σ·(x ∘_2 y) for σ swapping the labels of x: (σx) ∘_σ(2) y with block shift
        let x = ind.basis_vector(2, &[0, 1], 1);
        let y = ind.basis_vector(2, &[1, 0], 0);
        let sx = ind.relabel(2, &[1, 0], &x);
        let xy = ind.compose(2, &x, 2, 2, &y).unwrap();
        let lhs = ind.relabel(3, &[2, 0, 1], &xy);
        let rhs = ind.compose(2, &sx, 1, 2, &y).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn leibniz_identity_holds_in_dias() {
        let mut ind = InducedOperad::new(OperadKind::Dias, 3).unwrap();
        let b = seeds::leibniz_bracket(&ind);
        // [x,[y,z]] = [[x,y],z] - [[x,z],y]
        let x_yz = ind.compose(2, &b, 2, 2, &b).unwrap();
        let xy_z = ind.compose(2, &b, 1, 2, &b).unwrap();
        let xz_y = ind.relabel(3, &[0, 2, 1], &xy_z);
        let lhs = normalize(x_yz.into_iter().chain(xz_y).chain(crate::linalg::scale(&xy_z, &Rat::int(-1))).collect());
        assert!(lhs.is_empty());
    }

    #[test]
    fn small_characters() {
        let mut dias = InducedOperad::new(OperadKind::Dias, 3).unwrap();
        let seed = seeds::leibniz_bracket(&dias);
        let perm = generate_ideal(&mut dias, &seed, 3).unwrap();
        let leib = generate_suboperad(&mut dias, &seed, 3).unwrap();
        let dims: Vec<usize> = perm.iter().map(|s| dias.ambient_dim(s.n) - s.dim()).collect();
        assert_eq!(dims, vec![1, 2, 3]);
        assert_eq!(leib.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![1, 2, 6]);
        let ch_perm = characters::ch_perm_ac(4).unwrap();
        let ch_lie = characters::lie_series(4);
        for n in 1..=3 {
            check_stable(&dias, &perm[n - 1]).unwrap();
            check_stable(&dias, &leib[n - 1]).unwrap();
            let q = module_character(&dias, n, Space::Quotient(&perm[n - 1])).unwrap();
            assert!(q.terms().eq(ch_perm.degree_part(n + 1).terms()), "perm n={n}: {q}");
            let l = module_character(&dias, n, Space::Sub(&leib[n - 1])).unwrap();
            assert!(l.terms().eq(ch_lie.degree_part(n + 1).terms()), "leib n={n}: {l}");
            let amb = module_character(&dias, n, Space::Ambient).unwrap();
            let via_tau = induced_character_via_tau(dias.tau().get(n), n);
            assert_eq!(amb, via_tau);
        }
    }

    #[test]
    fn dend_small_characters() {
        let mut dend = InducedOperad::new(OperadKind::Dend, 3).unwrap();
        let pre = seeds::prelie_product(&dend);
        let zin = seeds::zinbiel_relation(&dend);
        let prelie = generate_suboperad(&mut dend, &pre, 3).unwrap();
        let zinb = generate_ideal(&mut dend, &zin, 3).unwrap();
        assert_eq!(prelie.iter().map(Subspace::dim).collect::<Vec<_>>(), vec![1, 2, 9]);
        let qdims: Vec<usize> = zinb.iter().map(|s| dend.ambient_dim(s.n) - s.dim()).collect();
        assert_eq!(qdims, vec![1, 2, 6]);
        let conj = characters::ch_prelie_conj(4);
        for n in 1..=3 {
            check_stable(&dend, &prelie[n - 1]).unwrap();
            check_stable(&dend, &zinb[n - 1]).unwrap();
            let c = module_character(&dend, n, Space::Sub(&prelie[n - 1])).unwrap();
            assert!(c.terms().eq(conj.degree_part(n + 1).terms()), "prelie n={n}: {c}");
            let r = restricted_character(&dend, n, Space::Sub(&prelie[n - 1])).unwrap();
            assert!(r.terms().eq(c.d_p1().terms()), "restriction n={n}");
        }
    }
}
