//! The lattice construction: `V_P = M(1) (x) C[P]`, the action of the loop
//! generators `x_alpha(m)` through vertex operator coefficients, translation
//! operators `e_lambda`, and level-k tensor powers with the diagonal action.
//!
//! The Heisenberg part uses the simple-root modes `alpha_i(-n)` as a PBW
//! basis of `M(1)`; their Gram matrix is the Cartan matrix.

use num_traits::{One, Zero};
use rayon::prelude::*;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{SparseEchelon, SparseVec};
use crate::root_data::{LieData, RootSystemData};
use crate::upbw::{AffineWeight, AlgElem, Coeff, GradedIndex, LoopGen};

/// A product `alpha_{i_1}(-n_1) ... alpha_{i_r}(-n_r)`, stored sorted as `(i, n)` with `n >= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisMonomial(Vec<(usize, u32)>);

impl HeisMonomial {
    pub fn vacuum() -> Self {
        HeisMonomial(Vec::new())
    }

    pub fn from_factors(mut f: Vec<(usize, u32)>) -> Self {
        debug_assert!(f.iter().all(|&(_, n)| n >= 1));
        f.sort();
        HeisMonomial(f)
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&(_, n)| n as i64).sum()
    }

    fn with(&self, f: (usize, u32)) -> Self {
        let mut v = self.0.clone();
        let pos = v.partition_point(|x| *x <= f);
        v.insert(pos, f);
        HeisMonomial(v)
    }
}

/// A basis state `h (x) e^mu` with `mu` in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FockState {
    pub lattice: Vec<i64>,
    pub heis: HeisMonomial,
}

impl FockState {
    pub fn new(heis: HeisMonomial, lattice: Vec<i64>) -> Self {
        FockState { lattice, heis }
    }

    pub fn lattice_only(lattice: Vec<i64>) -> Self {
        FockState {
            lattice,
            heis: HeisMonomial::vacuum(),
        }
    }

    /// L(0)-eigenvalue `deg h + <mu, mu>/2`.
    pub fn conformal_weight(&self, rs: &RootSystemData) -> Coeff {
        Coeff::from_integer(self.heis.degree().into())
            + rs.weight_pairing(&self.lattice, &self.lattice) / Coeff::from_integer(2.into())
    }
}

impl fmt::Display for FockState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let h: Vec<String> = self
            .heis
            .0
            .iter()
            .map(|&(i, n)| format!("a{}(-{})", i + 1, n))
            .collect();
        let mu: Vec<String> = self.lattice.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] e({})", h.join(" "), mu.join(","))
    }
}

/// A k-fold tensor of basis states.
pub type Tensor = Vec<FockState>;

pub fn format_tensor(t: &Tensor) -> String {
    t.iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" (x) ")
}

/// A finite combination of k-fold tensors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVec {
    terms: SparseVec<Tensor>,
}

impl ModuleVec {
    pub fn zero() -> Self {
        ModuleVec::default()
    }

    pub fn basis(t: Tensor) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(t, Coeff::one());
        ModuleVec { terms }
    }

    pub fn from_terms(terms: SparseVec<Tensor>) -> Self {
        let mut v = ModuleVec::zero();
        for (t, c) in terms {
            v.add_term(t, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &SparseVec<Tensor> {
        &self.terms
    }

    pub fn into_terms(self) -> SparseVec<Tensor> {
        self.terms
    }

    pub fn add_term(&mut self, t: Tensor, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(t) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVec, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> ModuleVec {
        let mut out = ModuleVec::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn sub(&self, other: &ModuleVec) -> ModuleVec {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        out
    }
}

type HeisVec = BTreeMap<HeisMonomial, Coeff>;

fn heis_add(v: &mut HeisVec, m: HeisMonomial, c: Coeff) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match v.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

type FactorImage = Vec<(FockState, Coeff)>;

/// The lattice module `V_P` together with the operators acting on it.
///
/// Single-factor actions are memoized per instance; instances are cheap and
/// meant to be created per worker.
pub struct FockSpace<'a> {
    lie: &'a LieData,
    memo: RefCell<HashMap<(LoopGen, FockState), FactorImage>>,
}

impl<'a> FockSpace<'a> {
    pub fn new(lie: &'a LieData) -> Self {
        FockSpace {
            lie,
            memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn lie(&self) -> &LieData {
        self.lie
    }

    /// `<alpha, alpha_i>` for each simple root.
    fn root_against_simple(&self, alpha: &[i64]) -> Vec<i64> {
        let n = self.lie.rank();
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                self.lie.roots.root_pairing(alpha, &e)
            })
            .collect()
    }

    /// `alpha(-n)` acting on a Heisenberg vector, `n >= 1`.
    fn creation(alpha: &[i64], n: u32, v: &HeisVec) -> HeisVec {
        let mut out = HeisVec::new();
        for (m, c) in v {
            for (i, ai) in alpha.iter().enumerate() {
                if *ai != 0 {
                    heis_add(
                        &mut out,
                        m.with((i, n)),
                        c * Coeff::from_integer((*ai).into()),
                    );
                }
            }
        }
        out
    }

    /// `alpha(n)` acting on a Heisenberg vector, `n >= 1`; `against` holds `<alpha, alpha_i>`.
    fn annihilation(against: &[i64], n: u32, v: &HeisVec) -> HeisVec {
        let mut out = HeisVec::new();
        for (m, c) in v {
            let f = &m.0;
            let mut j = 0;
            while j < f.len() {
                let mut e = j;
                while e < f.len() && f[e] == f[j] {
                    e += 1;
                }
                let (i, mode) = f[j];
                if mode == n && against[i] != 0 {
                    let mult = (e - j) as i64;
                    let mut rest = f.clone();
                    rest.remove(j);
                    let s = mult * n as i64 * against[i];
                    heis_add(
                        &mut out,
                        HeisMonomial(rest),
                        c * Coeff::from_integer(s.into()),
                    );
                }
                j = e;
            }
        }
        out
    }

    /// `x_alpha(m)` on a single basis state.
    pub fn act_x_state(&self, g: LoopGen, state: &FockState) -> Vec<(FockState, Coeff)> {
        let key = (g, state.clone());
        if let Some(hit) = self.memo.borrow().get(&key) {
            return hit.clone();
        }
        let out = self.act_x_state_uncached(g, state);
        self.memo.borrow_mut().insert(key, out.clone());
        out
    }

    fn act_x_state_uncached(&self, g: LoopGen, state: &FockState) -> Vec<(FockState, Coeff)> {
        let rs = &self.lie.roots;
        let alpha = rs.root(g.root);
        let against = self.root_against_simple(alpha);
        let pair = RootSystemData::mixed_pairing(alpha, &state.lattice);
        // coefficient of x^d in E^-(-alpha,x) E^+(-alpha,x)
        let d = -g.mode - 1 - pair;
        let deg = state.heis.degree();
        let a_min = (-d).max(0);
        if a_min > deg {
            return Vec::new();
        }
        // annihilation side: U_a = (1/a) sum_{n=1}^{a} (-alpha(n)) U_{a-n}
        let mut ups: Vec<HeisVec> = Vec::with_capacity(deg as usize + 1);
        let mut u0 = HeisVec::new();
        u0.insert(state.heis.clone(), Coeff::one());
        ups.push(u0);
        for a in 1..=deg {
            let mut acc = HeisVec::new();
            for n in 1..=a {
                for (m, c) in Self::annihilation(&against, n as u32, &ups[(a - n) as usize]) {
                    heis_add(&mut acc, m, -c);
                }
            }
            let inv = Coeff::new(1.into(), a.into());
            acc.values_mut().for_each(|c| *c *= &inv);
            ups.push(acc);
        }
        let mut total = HeisVec::new();
        for a in a_min..=deg {
            let u = &ups[a as usize];
            if u.is_empty() {
                continue;
            }
            let b = d + a;
            // creation side: V_b = (1/b) sum_{n=1}^{b} alpha(-n) V_{b-n}
            let mut vs: Vec<HeisVec> = vec![u.clone()];
            for bb in 1..=b {
                let mut acc = HeisVec::new();
                for n in 1..=bb {
                    for (m, c) in Self::creation(alpha, n as u32, &vs[(bb - n) as usize]) {
                        heis_add(&mut acc, m, c);
                    }
                }
                let inv = Coeff::new(1.into(), bb.into());
                acc.values_mut().for_each(|c| *c *= &inv);
                vs.push(acc);
            }
            for (m, c) in vs.pop().unwrap_or_default() {
                heis_add(&mut total, m, c);
            }
        }
        let sign = self.lie.cocycle.eps_root_weight(rs, alpha, &state.lattice);
        let shift = rs.root_to_weight(alpha);
        let lattice: Vec<i64> = state
            .lattice
            .iter()
            .zip(&shift)
            .map(|(a, b)| a + b)
            .collect();
        let sign = Coeff::from_integer(sign.into());
        total
            .into_iter()
            .map(|(h, c)| (FockState::new(h, lattice.clone()), c * &sign))
            .collect()
    }

    /// `x_alpha(m)` acting diagonally on a tensor vector.
    pub fn act_gen(&self, g: LoopGen, v: &ModuleVec) -> ModuleVec {
        let mut out = ModuleVec::zero();
        for (t, c) in &v.terms {
            for j in 0..t.len() {
                for (s, d) in self.act_x_state(g, &t[j]) {
                    let mut nt = t.clone();
                    nt[j] = s;
                    out.add_term(nt, c * d);
                }
            }
        }
        out
    }

    /// Action of an enveloping algebra element; monomials act right to left.
    pub fn act(&self, a: &AlgElem, v: &ModuleVec) -> ModuleVec {
        let mut out = ModuleVec::zero();
        for (m, c) in a.terms() {
            let mut acc = v.clone();
            for &g in m.factors().iter().rev() {
                if acc.is_zero() {
                    break;
                }
                acc = self.act_gen(g, &acc);
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Per-factor translation `h (x) e^mu -> eps(lambda, mu) h (x) e^{lambda+mu}`.
    pub fn e_lambda_tensor(&self, lambda: &[i64], v: &ModuleVec) -> Result<ModuleVec> {
        let rs = &self.lie.roots;
        let mut out = ModuleVec::zero();
        for (t, c) in &v.terms {
            let mut sign = 1i64;
            let mut nt = Vec::with_capacity(t.len());
            for s in t {
                sign *= self.lie.cocycle.eps_weights(rs, lambda, &s.lattice)?;
                let lattice = s.lattice.iter().zip(lambda).map(|(a, b)| a + b).collect();
                nt.push(FockState::new(s.heis.clone(), lattice));
            }
            out.add_term(nt, c * Coeff::from_integer(sign.into()));
        }
        Ok(out)
    }
}

/// The base tuple of `v_L`: `k_0` copies of `e^0`, then `k_i` copies of `e^{lambda_i}`.
pub fn highest_weight_tensor(lambda: &AffineWeight) -> Tensor {
    let n = lambda.rank();
    let mut t = Vec::with_capacity(lambda.level() as usize);
    for i in 0..=n {
        let mut mu = vec![0; n];
        if i > 0 {
            mu[i - 1] = 1;
        }
        for _ in 0..lambda.k(i) {
            t.push(FockState::lattice_only(mu.clone()));
        }
    }
    t
}

pub fn highest_weight_vector(lambda: &AffineWeight) -> ModuleVec {
    ModuleVec::basis(highest_weight_tensor(lambda))
}

/// Grading of a tensor relative to a base tensor; `None` if a lattice offset leaves Q.
pub fn tensor_grading(rs: &RootSystemData, base: &Tensor, t: &Tensor) -> Option<GradedIndex> {
    let n = rs.rank();
    let mut weight = Coeff::zero();
    let mut delta = vec![0i64; n];
    for (b, s) in base.iter().zip(t) {
        weight += s.conformal_weight(rs) - b.conformal_weight(rs);
        for (d, (x, y)) in delta.iter_mut().zip(s.lattice.iter().zip(&b.lattice)) {
            *d += x - y;
        }
    }
    let charges = rs.weight_to_root(&delta)?;
    if !weight.is_integer() {
        return None;
    }
    Some(GradedIndex::new(
        i64::try_from(weight.to_integer()).ok()?,
        charges,
    ))
}

/// All tensors of grading `g` relative to `v_L`, with lattice offsets in Q.
pub fn graded_basis(lie: &LieData, lambda: &AffineWeight, g: &GradedIndex) -> Vec<Tensor> {
    let rs = &lie.roots;
    let n = rs.rank();
    let base = highest_weight_tensor(lambda);
    let mut out = Vec::new();
    if g.weight < 0 || g.charges.len() != n {
        return out;
    }
    // Offsets per factor with their excess weight <base, d> + <d, d>/2 <= g.weight.
    let bound = offset_bound(n, g.weight);
    let offsets: Vec<Vec<(Vec<i64>, i64)>> = base
        .iter()
        .map(|b| {
            let mut list = Vec::new();
            let mut d = vec![-bound; n];
            loop {
                let excess =
                    RootSystemData::mixed_pairing(&d, &b.lattice) + rs.root_pairing(&d, &d) / 2;
                if excess <= g.weight {
                    list.push((d.clone(), excess));
                }
                let mut i = 0;
                while i < n {
                    d[i] += 1;
                    if d[i] <= bound {
                        break;
                    }
                    d[i] = -bound;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
            list
        })
        .collect();
    let mut chosen: Vec<(Vec<i64>, i64)> = Vec::new();
    combine_offsets(
        rs,
        &base,
        &offsets,
        &g.charges,
        g.weight,
        &mut chosen,
        &mut out,
    );
    out.sort();
    out
}

fn offset_bound(n: usize, weight: i64) -> i64 {
    // <d,d> >= (4/(n+1)^2) |d|^2 and |base|^2 <= (n+1)/4
    let np1 = (n + 1) as f64;
    let b2 = np1 / 4.0;
    let r = (2.0 * weight as f64 + b2).sqrt() + b2.sqrt();
    ((np1 * np1 / 4.0) * r * r).sqrt().ceil() as i64 + 1
}

fn combine_offsets(
    rs: &RootSystemData,
    base: &Tensor,
    offsets: &[Vec<(Vec<i64>, i64)>],
    charges_left: &[i64],
    weight_left: i64,
    chosen: &mut Vec<(Vec<i64>, i64)>,
    out: &mut Vec<Tensor>,
) {
    let j = chosen.len();
    if j == base.len() {
        if charges_left.iter().any(|c| *c != 0) || weight_left < 0 {
            return;
        }
        // distribute the remaining weight over the Heisenberg parts
        let mut parts = Vec::new();
        distribute_heis(rs.rank(), base, chosen, weight_left, &mut parts, out);
        return;
    }
    for (d, e) in &offsets[j] {
        if *e > weight_left {
            continue;
        }
        let rest: Vec<i64> = charges_left.iter().zip(d).map(|(c, x)| c - x).collect();
        chosen.push((d.clone(), *e));
        combine_offsets(rs, base, offsets, &rest, weight_left - e, chosen, out);
        chosen.pop();
    }
}

fn distribute_heis(
    n: usize,
    base: &Tensor,
    chosen: &[(Vec<i64>, i64)],
    weight_left: i64,
    parts: &mut Vec<i64>,
    out: &mut Vec<Tensor>,
) {
    let j = parts.len();
    if j + 1 == base.len() || base.is_empty() {
        if base.is_empty() {
            return;
        }
        parts.push(weight_left);
        emit_tensors(n, base, chosen, parts, out);
        parts.pop();
        return;
    }
    for h in 0..=weight_left {
        parts.push(h);
        distribute_heis(n, base, chosen, weight_left - h, parts, out);
        parts.pop();
    }
}

fn emit_tensors(
    n: usize,
    base: &Tensor,
    chosen: &[(Vec<i64>, i64)],
    heis_deg: &[i64],
    out: &mut Vec<Tensor>,
) {
    let per_factor: Vec<Vec<FockState>> = base
        .iter()
        .zip(chosen)
        .zip(heis_deg)
        .map(|((b, (d, _)), h)| {
            let dw: Vec<i64> = {
                // offset in weight coordinates
                let mut w = vec![0i64; n];
                for (i, di) in d.iter().enumerate() {
                    for (j, wj) in w.iter_mut().enumerate() {
                        *wj += di * cartan_entry(i, j);
                    }
                }
                w
            };
            let lattice: Vec<i64> = b.lattice.iter().zip(&dw).map(|(a, x)| a + x).collect();
            heis_monomials(n, *h as u32)
                .into_iter()
                .map(|hm| FockState::new(hm, lattice.clone()))
                .collect()
        })
        .collect();
    let mut cur = Vec::new();
    product_rec(&per_factor, &mut cur, out);
}

fn cartan_entry(i: usize, j: usize) -> i64 {
    match i.abs_diff(j) {
        0 => 2,
        1 => -1,
        _ => 0,
    }
}

fn product_rec(per: &[Vec<FockState>], cur: &mut Tensor, out: &mut Vec<Tensor>) {
    if cur.len() == per.len() {
        out.push(cur.clone());
        return;
    }
    for s in &per[cur.len()] {
        cur.push(s.clone());
        product_rec(per, cur, out);
        cur.pop();
    }
}

/// All Heisenberg monomials of the given degree.
pub fn heis_monomials(n: usize, degree: u32) -> Vec<HeisMonomial> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    heis_rec(n, degree, (0, 1), &mut cur, &mut out);
    out
}

fn heis_rec(
    n: usize,
    left: u32,
    min: (usize, u32),
    cur: &mut Vec<(usize, u32)>,
    out: &mut Vec<HeisMonomial>,
) {
    if left == 0 {
        out.push(HeisMonomial(cur.clone()));
        return;
    }
    for i in 0..n {
        for m in 1..=left {
            if (i, m) < min {
                continue;
            }
            cur.push((i, m));
            heis_rec(n, left - m, (i, m), cur, out);
            cur.pop();
        }
    }
}

/// All basis states of `V_P` of conformal weight at most `max_weight`, sorted.
pub fn lattice_states(lie: &LieData, max_weight: i64) -> Vec<FockState> {
    let rs = &lie.roots;
    let n = rs.rank();
    let bound = offset_bound(n, max_weight);
    let mut out = Vec::new();
    for class in 0..=n {
        let mut base = vec![0i64; n];
        if class > 0 {
            base[class - 1] = 1;
        }
        let mut d = vec![-bound; n];
        loop {
            let shift = rs.root_to_weight(&d);
            let mu: Vec<i64> = base.iter().zip(&shift).map(|(a, b)| a + b).collect();
            let lw = rs.weight_pairing(&mu, &mu) / Coeff::from_integer(2.into());
            let room = Coeff::from_integer(max_weight.into()) - lw;
            if room >= Coeff::zero() {
                let room = room.floor().to_integer();
                let room = i64::try_from(room).expect("small weight");
                for h in 0..=room {
                    for hm in heis_monomials(n, h as u32) {
                        out.push(FockState::new(hm, mu.clone()));
                    }
                }
            }
            let mut i = 0;
            while i < n {
                d[i] += 1;
                if d[i] <= bound {
                    break;
                }
                d[i] = -bound;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out.sort();
    out
}

/// Bases of the graded pieces `W(L)_g` for all gradings within a budget.
#[derive(Clone, Debug)]
pub struct PrincipalTable {
    pub lambda: AffineWeight,
    pub w_max: i64,
    pub charge_max: i64,
    pieces: BTreeMap<GradedIndex, Vec<ModuleVec>>,
}

impl PrincipalTable {
    /// Builds `W(L)_g = sum x_alpha(m) W(L)_{g'}` layer by layer in total charge.
    pub fn compute(
        lie: &LieData,
        lambda: &AffineWeight,
        w_max: i64,
        charge_max: i64,
    ) -> Result<Self> {
        if lambda.rank() != lie.rank() {
            return Err(Error::InvalidWeight(format!(
                "{lambda} does not have rank {}",
                lie.rank()
            )));
        }
        let rs = &lie.roots;
        let n = rs.rank();
        let mut pieces: BTreeMap<GradedIndex, Vec<ModuleVec>> = BTreeMap::new();
        pieces.insert(
            GradedIndex::new(0, vec![0; n]),
            vec![highest_weight_vector(lambda)],
        );
        for c in 1..=charge_max {
            let layer: Vec<GradedIndex> = charge_vectors(n, c)
                .into_iter()
                .flat_map(|ch| (1..=w_max).map(move |w| GradedIndex::new(w, ch.clone())))
                .collect();
            let done = &pieces;
            let results: Vec<(GradedIndex, Vec<ModuleVec>)> = layer
                .into_par_iter()
                .map(|g| {
                    let fock = FockSpace::new(lie);
                    let mut ech: SparseEchelon<Tensor> = SparseEchelon::new();
                    for root in 0..rs.num_positive_roots() {
                        for m in (-g.weight..=-1).rev() {
                            let gen = LoopGen::new(root, m);
                            let Some(prev) = g.minus_gen(rs, gen) else {
                                continue;
                            };
                            let Some(basis) = done.get(&prev) else {
                                continue;
                            };
                            for u in basis {
                                ech.insert(fock.act_gen(gen, u).into_terms());
                            }
                        }
                    }
                    let basis = ech
                        .reduced_rows()
                        .into_iter()
                        .map(ModuleVec::from_terms)
                        .collect();
                    (g, basis)
                })
                .collect();
            for (g, b) in results {
                if !b.is_empty() {
                    pieces.insert(g, b);
                }
            }
        }
        Ok(PrincipalTable {
            lambda: lambda.clone(),
            w_max,
            charge_max,
            pieces,
        })
    }

    pub fn dim(&self, g: &GradedIndex) -> Result<usize> {
        if g.weight > self.w_max || g.total_charge() > self.charge_max {
            return Err(Error::OutsideWindow(g.to_string()));
        }
        Ok(self.pieces.get(g).map_or(0, |b| b.len()))
    }

    pub fn basis(&self, g: &GradedIndex) -> &[ModuleVec] {
        self.pieces.get(g).map_or(&[], |b| b.as_slice())
    }

    /// Nonzero graded pieces in canonical order.
    pub fn nonzero(&self) -> impl Iterator<Item = (&GradedIndex, usize)> {
        self.pieces.iter().map(|(g, b)| (g, b.len()))
    }
}

/// Nonnegative integer vectors of length `n` summing to `total`, lexicographic.
pub fn charge_vectors(n: usize, total: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() + 1 == n {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=left {
            cur.push(v);
            rec(n, left - v, cur, out);
            cur.pop();
        }
    }
    if n > 0 && total >= 0 {
        rec(n, total, &mut cur, &mut out);
    }
    out
}
