//! Truncated graded components of the left ideals `I_L` of `U(nbar)`.
//!
//! Every element of `U(nbar)` is a sum of a negative-only part and a part in
//! `U(nbar) n_+`, and the latter lies in every ideal considered here. So the
//! image of `I_L` in `U(n_-)` is the smallest subspace containing the
//! projections of the generators and closed under `v -> proj(x_alpha(m) v)`.
//! Each such multiplication raises the total charge, so the components are
//! computed layer by layer in total charge without any fixpoint iteration.

use num_traits::One;
use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::fock::charge_vectors;
use crate::linalg::SparseEchelon;
use crate::root_data::{LieData, RootSystemData};
use crate::upbw::{
    ambient_dim, left_mul_gen, AffineWeight, AlgElem, Coeff, GradedIndex, LoopGen, Monomial,
};

/// `R^i_{-1,t}`: the sum of `x_{alpha_i}(m_1) ... x_{alpha_i}(m_{k+1})` over
/// `m_1 + ... + m_{k+1} = -t`, all `m_j <= -1`. `i` is 1-based.
pub fn r_generator(lie: &LieData, i: usize, t: i64, k: u32) -> Result<AlgElem> {
    let n = lie.rank();
    if i == 0 || i > n {
        return Err(Error::InvalidArgument(format!(
            "simple root index {i} not in 1..={n}"
        )));
    }
    let parts = k as i64 + 1;
    if k == 0 || t < parts {
        return Err(Error::InvalidArgument(format!(
            "R generator needs t >= {parts}, got t = {t}"
        )));
    }
    let root = lie.roots.simple_root_index(i);
    let mut out = AlgElem::zero();
    let mut cur = Vec::with_capacity(parts as usize);
    compositions(t, parts, &mut cur, &mut |c| {
        let mut word: Vec<LoopGen> = c.iter().map(|m| LoopGen::new(root, -m)).collect();
        word.sort();
        out.add_term(Monomial::from_sorted(word), Coeff::one());
    });
    Ok(out)
}

fn compositions(total: i64, parts: i64, cur: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
    if parts == 1 {
        cur.push(total);
        f(cur);
        cur.pop();
        return;
    }
    for first in 1..=total - (parts - 1) {
        cur.push(first);
        compositions(total - first, parts - 1, cur, f);
        cur.pop();
    }
}

/// The generating data of a left ideal of `U(nbar)`.
///
/// Always contains `U(nbar) n_+` and the truncations `R^i_{-1,t}` at level
/// `k`; `powers` lists the generators `x_alpha(-1)^p` and `extra` any further
/// elements.
#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpec {
    pub rank: usize,
    pub level: u32,
    pub lambda: Option<AffineWeight>,
    pub powers: Vec<(usize, u32)>,
    pub extra: Vec<AlgElem>,
}

impl IdealSpec {
    /// `I_L = I_{k L_0} + sum_alpha U(nbar) x_alpha(-1)^{k+1-<alpha, Lbar>}`.
    pub fn for_weight(lie: &LieData, lambda: &AffineWeight) -> Result<Self> {
        let rs = &lie.roots;
        if lambda.rank() != rs.rank() {
            return Err(Error::InvalidWeight(format!(
                "{lambda} does not have rank {}",
                rs.rank()
            )));
        }
        if lambda.level() == 0 {
            return Err(Error::InvalidWeight("level must be positive".into()));
        }
        let bar = lambda.finite_part();
        let k = lambda.level() as i64;
        let powers = (0..rs.num_positive_roots())
            .map(|a| {
                let p = k + 1 - RootSystemData::mixed_pairing(rs.root(a), &bar);
                (a, p as u32)
            })
            .collect();
        Ok(IdealSpec {
            rank: rs.rank(),
            level: lambda.level(),
            lambda: Some(lambda.clone()),
            powers,
            extra: Vec::new(),
        })
    }

    /// `I_{k L_0}` with no power generators.
    pub fn vacuum(rank: usize, level: u32) -> Self {
        IdealSpec {
            rank,
            level,
            lambda: None,
            powers: Vec::new(),
            extra: Vec::new(),
        }
    }

    pub fn with_power(mut self, root: usize, exponent: u32) -> Self {
        self.powers.push((root, exponent));
        self
    }

    pub fn with_extra(mut self, a: AlgElem) -> Self {
        self.extra.push(a);
        self
    }

    /// Only specs built from a weight have a stable cache key.
    fn cache_key(&self) -> Option<&AffineWeight> {
        self.lambda.as_ref().filter(|_| self.extra.is_empty())
    }

    /// Exponent of the power generator attached to `root`, if any.
    pub fn power_exponent(&self, root: usize) -> Option<u32> {
        self.powers
            .iter()
            .filter(|(r, _)| *r == root)
            .map(|(_, p)| *p)
            .min()
    }

    /// All generators of weight at most `t_max`, labelled.
    pub fn generators(&self, lie: &LieData, t_max: i64) -> Result<Vec<(String, AlgElem)>> {
        let rs = &lie.roots;
        let k = self.level as i64;
        let mut out = Vec::new();
        for i in 1..=self.rank {
            for t in (k + 1)..=t_max {
                out.push((
                    format!("R[{i}]_-1,{t}"),
                    r_generator(lie, i, t, self.level)?,
                ));
            }
        }
        for &(root, p) in &self.powers {
            if (p as i64) <= t_max {
                let label = format!(
                    "{}^{p}",
                    crate::text::format_gen(rs, LoopGen::new(root, -1))
                );
                out.push((
                    label,
                    crate::upbw::gen_power(LoopGen::new(root, -1), p as usize),
                ));
            }
        }
        for (idx, a) in self.extra.iter().enumerate() {
            out.push((format!("extra[{idx}]"), a.clone()));
        }
        Ok(out)
    }
}

/// Truncation parameters of the closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    /// Largest weight that is reported.
    pub w_max: i64,
    /// Largest weight of components computed (and of generators used).
    pub t_max: i64,
    /// Largest total charge of components computed.
    pub charge_max: i64,
    mode_bound: Option<i64>,
    charge_ceiling: Option<Vec<i64>>,
}

impl Window {
    pub fn new(w_max: i64, charge_max: i64) -> Self {
        Window {
            w_max,
            t_max: w_max,
            charge_max,
            mode_bound: None,
            charge_ceiling: None,
        }
    }

    pub fn with_t_max(mut self, t_max: i64) -> Self {
        self.t_max = t_max.max(self.w_max);
        self
    }

    pub fn with_mode_bound(mut self, m: Option<i64>) -> Self {
        self.mode_bound = m;
        self
    }

    /// Largest `|m|` of single-generator multiplications; defaults to `w_max + t_max`.
    pub fn mode_bound(&self) -> i64 {
        self.mode_bound.unwrap_or(self.w_max + self.t_max)
    }

    /// Restricts the computation to charge vectors bounded componentwise.
    ///
    /// Multiplication only raises charges, so components below the ceiling
    /// never depend on components outside it.
    pub fn with_charge_ceiling(mut self, ceiling: Option<Vec<i64>>) -> Self {
        self.charge_ceiling = ceiling;
        self
    }

    pub fn grown(&self) -> Window {
        Window {
            t_max: self.t_max + 1,
            ..self.clone()
        }
    }

    pub fn covers(&self, g: &GradedIndex) -> bool {
        g.weight <= self.t_max
            && g.total_charge() <= self.charge_max
            && self
                .charge_ceiling
                .as_ref()
                .is_none_or(|c| g.charges.iter().zip(c).all(|(x, y)| x <= y))
    }

    pub fn describe(&self) -> String {
        let mut s = format!(
            "w_max={} t_max={} mode_bound={} charge_max={}",
            self.w_max,
            self.t_max,
            self.mode_bound(),
            self.charge_max
        );
        if let Some(c) = &self.charge_ceiling {
            let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            s.push_str(&format!(" charge_ceiling={}", c.join(",")));
        }
        s
    }
}

/// One graded piece of the projected ideal.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    pub index: GradedIndex,
    span: SparseEchelon<Monomial>,
    rows: Vec<AlgElem>,
}

impl GradedSubspace {
    pub fn new(index: GradedIndex, span: SparseEchelon<Monomial>) -> Self {
        let rows = span
            .reduced_rows()
            .into_iter()
            .map(AlgElem::from_terms)
            .collect();
        GradedSubspace { index, span, rows }
    }

    pub fn empty(index: GradedIndex) -> Self {
        GradedSubspace::new(index, SparseEchelon::new())
    }

    pub fn rank(&self) -> usize {
        self.span.rank()
    }

    pub fn ambient_dim(&self, rs: &RootSystemData) -> usize {
        ambient_dim(rs, &self.index)
    }

    /// Reduced row echelon basis in canonical order.
    pub fn rows(&self) -> &[AlgElem] {
        &self.rows
    }

    /// Membership of a negative-only element homogeneous of this grading.
    pub fn contains(&self, a: &AlgElem) -> bool {
        self.span
            .contains(a.terms().map(|(m, c)| (m.clone(), c.clone())).collect())
    }
}

/// The computed components of one ideal within one window.
#[derive(Clone, Debug)]
pub struct IdealEngine {
    pub spec: IdealSpec,
    pub window: Window,
    components: BTreeMap<GradedIndex, GradedSubspace>,
}

impl IdealEngine {
    pub fn compute(lie: &LieData, spec: &IdealSpec, window: Window) -> Result<Self> {
        Self::compute_cached(lie, spec, window, None)
    }

    pub fn compute_cached(
        lie: &LieData,
        spec: &IdealSpec,
        window: Window,
        cache: Option<&Cache>,
    ) -> Result<Self> {
        let rs = &lie.roots;
        let n = rs.rank();
        if spec.rank != n {
            return Err(Error::InvalidArgument(format!(
                "ideal spec has rank {}, algebra has rank {n}",
                spec.rank
            )));
        }
        let cache = cache.filter(|_| spec.cache_key().is_some());
        let header = format!("{} {}", window.describe(), generator_fingerprint(spec));

        // seeds, grouped by grading
        let mut seeds: BTreeMap<GradedIndex, Vec<AlgElem>> = BTreeMap::new();
        for (_, g) in spec.generators(lie, window.t_max)? {
            for (idx, part) in g.project_negative().homogeneous_components(rs) {
                if window.covers(&idx) {
                    seeds.entry(idx).or_default().push(part);
                }
            }
        }

        let mb = window.mode_bound();
        let mut components: BTreeMap<GradedIndex, GradedSubspace> = BTreeMap::new();
        for c in 1..=window.charge_max {
            let layer: Vec<GradedIndex> = charge_vectors(n, c)
                .into_iter()
                .flat_map(|ch| (1..=window.t_max).map(move |w| GradedIndex::new(w, ch.clone())))
                .filter(|g| window.covers(g))
                .collect();
            let done = &components;
            let seeds = &seeds;
            let results: Vec<Result<(GradedIndex, GradedSubspace)>> = layer
                .into_par_iter()
                .map(|g| {
                    if let Some(cache) = cache {
                        let key = spec.cache_key().expect("filtered above");
                        if let Some(rows) = cache.load(lie, key, &g, &header)? {
                            let mut span = SparseEchelon::new();
                            for r in rows {
                                span.insert(r.into_terms());
                            }
                            return Ok((g.clone(), GradedSubspace::new(g, span)));
                        }
                    }
                    let mut span: SparseEchelon<Monomial> = SparseEchelon::new();
                    if let Some(list) = seeds.get(&g) {
                        for s in list {
                            span.insert(s.clone().into_terms());
                        }
                    }
                    for root in 0..rs.num_positive_roots() {
                        for m in -mb..=mb {
                            let gen = LoopGen::new(root, m);
                            let Some(prev) = g.minus_gen(rs, gen) else {
                                continue;
                            };
                            let Some(piece) = done.get(&prev) else {
                                continue;
                            };
                            for row in piece.rows() {
                                let prod = left_mul_gen(lie, gen, row).project_negative();
                                span.insert(prod.into_terms());
                            }
                        }
                    }
                    let sub = GradedSubspace::new(g.clone(), span);
                    if let Some(cache) = cache {
                        let key = spec.cache_key().expect("filtered above");
                        cache.store(lie, key, &g, &header, sub.rows())?;
                    }
                    Ok((g, sub))
                })
                .collect();
            for r in results {
                let (g, sub) = r?;
                if sub.rank() > 0 {
                    components.insert(g, sub);
                }
            }
        }
        Ok(IdealEngine {
            spec: spec.clone(),
            window,
            components,
        })
    }

    pub fn component(&self, g: &GradedIndex) -> Result<GradedSubspace> {
        if !self.window.covers(g) {
            return Err(Error::OutsideWindow(g.to_string()));
        }
        Ok(self
            .components
            .get(g)
            .cloned()
            .unwrap_or_else(|| GradedSubspace::empty(g.clone())))
    }

    pub fn rank(&self, g: &GradedIndex) -> Result<usize> {
        if !self.window.covers(g) {
            return Err(Error::OutsideWindow(g.to_string()));
        }
        Ok(self.components.get(g).map_or(0, |s| s.rank()))
    }

    pub fn quotient_dim(&self, rs: &RootSystemData, g: &GradedIndex) -> Result<usize> {
        let r = self.rank(g)?;
        Ok(ambient_dim(rs, g) - r)
    }

    /// True iff every graded component of the projection of `a` lies in the ideal.
    pub fn contains(&self, rs: &RootSystemData, a: &AlgElem) -> Result<bool> {
        for (g, part) in a.project_negative().homogeneous_components(rs) {
            if !self.window.covers(&g) {
                return Err(Error::OutsideWindow(g.to_string()));
            }
            let member = self.components.get(&g).is_some_and(|s| s.contains(&part));
            if !member {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Nonzero components in canonical order.
    pub fn nonzero(&self) -> impl Iterator<Item = &GradedSubspace> {
        self.components.values()
    }
}

fn generator_fingerprint(spec: &IdealSpec) -> String {
    let mut p: Vec<String> = spec
        .powers
        .iter()
        .map(|(r, e)| format!("{r}:{e}"))
        .collect();
    p.sort();
    format!("level={} powers={}", spec.level, p.join(","))
}

/// Membership in the ideal generated for `lambda`, with a window just large
/// enough for `a`, growing `t_max` up to `extra_growth` times while the
/// answer is negative.
pub fn is_member(lie: &LieData, spec: &IdealSpec, a: &AlgElem, extra_growth: u32) -> Result<bool> {
    let rs = &lie.roots;
    let parts = a.project_negative().homogeneous_components(rs);
    let Some(w) = parts.keys().map(|g| g.weight).max() else {
        return Ok(true);
    };
    let n = rs.rank();
    let ceiling: Vec<i64> = (0..n)
        .map(|i| parts.keys().map(|g| g.charges[i]).max().unwrap_or(0))
        .collect();
    let c = ceiling.iter().sum();
    let mut window = Window::new(w, c).with_charge_ceiling(Some(ceiling));
    for _ in 0..=extra_growth {
        let engine = IdealEngine::compute(lie, spec, window.clone())?;
        if engine.contains(rs, a)? {
            return Ok(true);
        }
        window = window.grown();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_elem;
    use crate::upbw::gen_power;

    fn lie2() -> LieData {
        LieData::new(2).unwrap()
    }

    fn weight(v: &[u32]) -> AffineWeight {
        AffineWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn r_generator_examples() {
        let lie = lie2();
        assert_eq!(
            r_generator(&lie, 1, 2, 1).unwrap(),
            parse_elem(&lie, "x[1,0](-1)^2").unwrap()
        );
        assert_eq!(
            r_generator(&lie, 1, 3, 1).unwrap(),
            parse_elem(&lie, "2 x[1,0](-2) x[1,0](-1)").unwrap()
        );
        assert_eq!(
            r_generator(&lie, 2, 4, 2).unwrap(),
            parse_elem(&lie, "3 x[0,1](-2) x[0,1](-1)^2").unwrap()
        );
        assert!(r_generator(&lie, 1, 1, 1).is_err());
        assert!(r_generator(&lie, 3, 4, 1).is_err());
    }

    #[test]
    fn power_exponents() {
        let lie = lie2();
        let s = IdealSpec::for_weight(&lie, &weight(&[1, 2, 3])).unwrap();
        // k0+k2+1, k0+k1+1, k0+1
        assert_eq!(s.powers, vec![(0, 5), (1, 4), (2, 2)]);
    }

    #[test]
    fn component_examples() {
        let lie = lie2();
        let rs = &lie.roots;
        let s = IdealSpec::for_weight(&lie, &weight(&[1, 0, 0])).unwrap();
        let e = IdealEngine::compute(&lie, &s, Window::new(3, 4)).unwrap();
        let g = GradedIndex::new(2, vec![2, 0]);
        assert_eq!(e.rank(&g).unwrap(), 1);
        assert_eq!(e.quotient_dim(rs, &g).unwrap(), 0);
        let g = GradedIndex::new(1, vec![1, 0]);
        assert_eq!(e.rank(&g).unwrap(), 0);
        assert_eq!(e.quotient_dim(rs, &g).unwrap(), 1);

        let s = IdealSpec::for_weight(&lie, &weight(&[0, 1, 0])).unwrap();
        let e = IdealEngine::compute(&lie, &s, Window::new(2, 2)).unwrap();
        assert_eq!(
            e.quotient_dim(rs, &GradedIndex::new(1, vec![1, 0]))
                .unwrap(),
            0
        );

        let s = IdealSpec::for_weight(&lie, &weight(&[0, 1, 1])).unwrap();
        let e = IdealEngine::compute(&lie, &s, Window::new(2, 2)).unwrap();
        assert!(e.contains(rs, &gen_power(LoopGen::new(2, -1), 1)).unwrap());
        assert!(!e.contains(rs, &gen_power(LoopGen::new(0, -1), 1)).unwrap());
        assert!(e.contains(rs, &AlgElem::zero()).unwrap());
        assert!(e.rank(&GradedIndex::new(9, vec![1, 0])).is_err());
    }

    #[test]
    fn remark_membership() {
        let lie = lie2();
        let s = IdealSpec::for_weight(&lie, &weight(&[1, 1, 0])).unwrap();
        let a = parse_elem(&lie, "x[0,1](-1)^3").unwrap();
        assert!(is_member(&lie, &s, &a, 0).unwrap());
    }

    #[test]
    fn positive_modes_are_in_every_ideal() {
        let lie = lie2();
        let s = IdealSpec::vacuum(2, 1);
        let a = parse_elem(&lie, "x[1,0](-2) x[0,1](0) + x[1,1](3)").unwrap();
        assert!(is_member(&lie, &s, &a, 0).unwrap());
    }
}
