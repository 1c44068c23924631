//! The enveloping algebra of the loop nilradical `n (x) C[t, t^-1]`.
//!
//! Elements are kept in a PBW normal form: products of loop generators
//! `x_alpha(m)` sorted by (sign class of the mode, root index, mode), with all
//! negative modes first. Under this order a normal-form monomial lies in the
//! left ideal generated by the nonnegative modes exactly when its last factor
//! has a nonnegative mode, so projecting onto the negative part is a filter.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_data::{LieData, RootSystemData};

pub type Coeff = BigRational;

/// A loop generator `x_alpha(m)`; `root` indexes the positive roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LoopGen {
    pub root: usize,
    pub mode: i64,
}

impl LoopGen {
    pub fn new(root: usize, mode: i64) -> Self {
        LoopGen { root, mode }
    }

    fn key(&self) -> (bool, usize, i64) {
        (self.mode >= 0, self.root, self.mode)
    }
}

impl Ord for LoopGen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for LoopGen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered product of loop generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<LoopGen>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Wraps factors that are already sorted; panics in debug builds otherwise.
    pub fn from_sorted(factors: Vec<LoopGen>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0] <= w[1]));
        Monomial(factors)
    }

    pub fn factors(&self) -> &[LoopGen] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// True if every factor has a negative mode.
    pub fn is_negative(&self) -> bool {
        self.0.last().is_none_or(|g| g.mode < 0)
    }

    /// Minus the sum of the modes.
    pub fn weight(&self) -> i64 {
        -self.0.iter().map(|g| g.mode).sum::<i64>()
    }

    pub fn charges(&self, rs: &RootSystemData) -> Vec<i64> {
        let mut c = vec![0; rs.rank()];
        for g in &self.0 {
            for (ci, ri) in c.iter_mut().zip(rs.root(g.root)) {
                *ci += ri;
            }
        }
        c
    }

    pub fn grading(&self, rs: &RootSystemData) -> GradedIndex {
        GradedIndex::new(self.weight(), self.charges(rs))
    }
}

/// A finite linear combination of normal-form monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AlgElem {
    terms: BTreeMap<Monomial, Coeff>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(Monomial::one())
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(m, Coeff::one());
        AlgElem { terms }
    }

    pub fn from_terms(terms: BTreeMap<Monomial, Coeff>) -> Self {
        let mut out = AlgElem::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn scalar(c: Coeff) -> Self {
        let mut e = AlgElem::zero();
        e.add_term(Monomial::one(), c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Coeff> {
        self.terms
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &AlgElem, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Coeff) -> AlgElem {
        let mut out = AlgElem::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> AlgElem {
        self.scale(&-Coeff::one())
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out.add_scaled(other, &-Coeff::one());
        out
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        out.add_scaled(other, &Coeff::one());
        out
    }

    /// Image in `U(n_-)`: drops monomials containing a nonnegative mode.
    pub fn project_negative(&self) -> AlgElem {
        AlgElem {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.is_negative())
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Splits into (weight, charge)-homogeneous parts.
    pub fn homogeneous_components(&self, rs: &RootSystemData) -> BTreeMap<GradedIndex, AlgElem> {
        let mut out: BTreeMap<GradedIndex, AlgElem> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.grading(rs))
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    /// The common grading of all terms, if the element is nonzero and homogeneous.
    pub fn grading(&self, rs: &RootSystemData) -> Option<GradedIndex> {
        let comps = self.homogeneous_components(rs);
        if comps.len() == 1 {
            comps.into_keys().next()
        } else {
            None
        }
    }

    /// The leading monomial in the canonical order, with its coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().next()
    }
}

/// Dominant integral affine weight `(k_0, ..., k_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight {
    coords: Vec<u32>,
}

impl AffineWeight {
    pub fn new(coords: Vec<u32>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidWeight(format!(
                "need at least two coordinates (k0,...,kn), got {}",
                coords.len()
            )));
        }
        Ok(AffineWeight { coords })
    }

    /// Parses `k0,k1,...,kn` and checks the length against the rank.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        let coords = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.parse::<i64>()
                    .map_err(|_| Error::InvalidWeight(format!("'{p}' is not an integer")))
                    .and_then(|v| {
                        u32::try_from(v).map_err(|_| {
                            Error::InvalidWeight(format!("coordinate {v} is negative"))
                        })
                    })
            })
            .collect::<Result<Vec<u32>>>()?;
        if coords.len() != rank + 1 {
            return Err(Error::InvalidWeight(format!(
                "expected {} coordinates for rank {rank}, got {}",
                rank + 1,
                coords.len()
            )));
        }
        AffineWeight::new(coords)
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn level(&self) -> u32 {
        self.coords.iter().sum()
    }

    /// `k_i`, `i` in `0..=n`.
    pub fn k(&self, i: usize) -> u32 {
        self.coords[i]
    }

    /// The finite part `sum_{i>=1} k_i lambda_i` in fundamental coordinates.
    pub fn finite_part(&self) -> Vec<i64> {
        self.coords[1..].iter().map(|&c| c as i64).collect()
    }

    /// Conformal weight `<L, L + 2 rho> / (2(k + n + 1))` of the top component.
    pub fn conformal_shift(&self, rs: &RootSystemData) -> Coeff {
        let l = self.finite_part();
        let rho2 = rs.simple_root_sum_weight();
        let shifted: Vec<i64> = l.iter().zip(&rho2).map(|(a, b)| a + b).collect();
        let num = rs.weight_pairing(&l, &shifted);
        let den = 2 * (self.level() as i64 + rs.rank() as i64 + 1);
        num / Coeff::from_integer(den.into())
    }

    /// Compact label used in file names, e.g. `1-0-0`.
    pub fn label(&self) -> String {
        self.coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join("-")
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A (weight, charge vector) label of a graded piece.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct GradedIndex {
    pub weight: i64,
    pub charges: Vec<i64>,
}

impl GradedIndex {
    pub fn new(weight: i64, charges: Vec<i64>) -> Self {
        GradedIndex { weight, charges }
    }

    pub fn total_charge(&self) -> i64 {
        self.charges.iter().sum()
    }

    /// The grading obtained by removing one factor `x_alpha(m)`.
    pub fn minus_gen(&self, rs: &RootSystemData, g: LoopGen) -> Option<GradedIndex> {
        let charges: Vec<i64> = self
            .charges
            .iter()
            .zip(rs.root(g.root))
            .map(|(c, r)| c - r)
            .collect();
        if charges.iter().any(|c| *c < 0) {
            return None;
        }
        Some(GradedIndex::new(self.weight + g.mode, charges))
    }

    pub fn label(&self) -> String {
        let c: Vec<String> = self.charges.iter().map(|c| c.to_string()).collect();
        format!("w{}_c{}", self.weight, c.join("-"))
    }
}

impl fmt::Display for GradedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.charges.iter().map(|c| c.to_string()).collect();
        write!(f, "({},({}))", self.weight, c.join(","))
    }
}

/// A character of Q given by its values on the simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character(Vec<Coeff>);

impl Character {
    pub fn new(values: Vec<Coeff>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroCharacter(i + 1));
        }
        Ok(Character(values))
    }

    pub fn trivial(rank: usize) -> Self {
        Character(vec![Coeff::one(); rank])
    }

    pub fn from_signs(signs: &[i64]) -> Result<Self> {
        Character::new(
            signs
                .iter()
                .map(|s| Coeff::from_integer((*s).into()))
                .collect(),
        )
    }

    /// `nu(beta)` for `beta` in root coordinates.
    pub fn eval(&self, beta: &[i64]) -> Coeff {
        let mut acc = Coeff::one();
        for (v, b) in self.0.iter().zip(beta) {
            if *b >= 0 {
                for _ in 0..*b {
                    acc *= v;
                }
            } else {
                for _ in 0..(-*b) {
                    acc /= v;
                }
            }
        }
        acc
    }

    pub fn inverse(&self) -> Character {
        Character(self.0.iter().map(|v| v.recip()).collect())
    }

    pub fn values(&self) -> &[Coeff] {
        &self.0
    }
}

/// Left multiplication of a normal-form monomial by one generator, accumulated into `out`.
fn left_mul_gen_into(
    lie: &LieData,
    g: LoopGen,
    mono: &[LoopGen],
    coeff: &Coeff,
    out: &mut AlgElem,
) {
    match mono.first() {
        None => out.add_term(Monomial(vec![g]), coeff.clone()),
        Some(first) if g <= *first => {
            let mut v = Vec::with_capacity(mono.len() + 1);
            v.push(g);
            v.extend_from_slice(mono);
            out.add_term(Monomial(v), coeff.clone());
        }
        Some(&first) => {
            // g * first * rest = first * (g * rest) + [g, first] * rest
            let mut inner = AlgElem::zero();
            left_mul_gen_into(lie, g, &mono[1..], coeff, &mut inner);
            for (m, c) in inner.terms {
                left_mul_gen_into(lie, first, &m.0, &c, out);
            }
            if let Some(sum) = lie.roots.root_sum(g.root, first.root) {
                let s = lie.structure.get(g.root, first.root);
                let c = coeff * Coeff::from_integer(s.into());
                left_mul_gen_into(
                    lie,
                    LoopGen::new(sum, g.mode + first.mode),
                    &mono[1..],
                    &c,
                    out,
                );
            }
        }
    }
}

/// `g * a`, straightened.
pub fn left_mul_gen(lie: &LieData, g: LoopGen, a: &AlgElem) -> AlgElem {
    let mut out = AlgElem::zero();
    for (m, c) in &a.terms {
        left_mul_gen_into(lie, g, &m.0, c, &mut out);
    }
    out
}

/// Normal form of an arbitrary word of generators.
pub fn straighten_word(lie: &LieData, word: &[LoopGen]) -> AlgElem {
    let mut acc = AlgElem::one();
    for &g in word.iter().rev() {
        acc = left_mul_gen(lie, g, &acc);
    }
    acc
}

/// Product `a * b` in normal form.
pub fn multiply(lie: &LieData, a: &AlgElem, b: &AlgElem) -> AlgElem {
    let mut out = AlgElem::zero();
    for (ma, ca) in &a.terms {
        let mut acc = b.clone();
        for &g in ma.0.iter().rev() {
            acc = left_mul_gen(lie, g, &acc);
        }
        out.add_scaled(&acc, ca);
    }
    out
}

/// `x_alpha(m)^p` for a single generator.
pub fn gen_power(g: LoopGen, p: usize) -> AlgElem {
    AlgElem::from_monomial(Monomial(vec![g; p]))
}

/// The automorphism `x_beta(m) -> nu(beta) x_beta(m - <lambda, beta>)`.
///
/// `lambda` is given in fundamental-weight coordinates.
pub fn tau(lie: &LieData, lambda: &[i64], nu: &Character, a: &AlgElem) -> AlgElem {
    let rs = &lie.roots;
    let mut out = AlgElem::zero();
    for (m, c) in &a.terms {
        let mut scalar = c.clone();
        let word: Vec<LoopGen> =
            m.0.iter()
                .map(|g| {
                    let beta = rs.root(g.root);
                    scalar *= nu.eval(beta);
                    LoopGen::new(g.root, g.mode - RootSystemData::mixed_pairing(beta, lambda))
                })
                .collect();
        let shifted = if word.windows(2).all(|w| w[0] <= w[1]) {
            AlgElem::from_monomial(Monomial(word))
        } else {
            straighten_word(lie, &word)
        };
        out.add_scaled(&shifted, &scalar);
    }
    out
}

fn require_rank_two(lie: &LieData) -> Result<()> {
    if lie.rank() != 2 {
        return Err(Error::RankTwoOnly(lie.rank()));
    }
    Ok(())
}

/// `tau_{lambda_i, nu}(a)` followed by the trailing factors attached to `Lambda`.
///
/// For `i = 1` the trailing factors are `x_{a1}(-1)^{k1} x_{a1+a2}(-1)^{k2}`,
/// for `i = 2` they are `x_{a2}(-1)^{k2} x_{a1+a2}(-1)^{k1}`.
pub fn tau_affine(
    lie: &LieData,
    i: usize,
    nu: &Character,
    lambda: &AffineWeight,
    a: &AlgElem,
) -> Result<AlgElem> {
    require_rank_two(lie)?;
    if lambda.rank() != 2 {
        return Err(Error::InvalidWeight(format!(
            "{lambda} is not a rank-2 weight"
        )));
    }
    let (k1, k2) = (lambda.k(1) as usize, lambda.k(2) as usize);
    let (fund, trailing) = match i {
        1 => (vec![1, 0], vec![(0, k1), (2, k2)]),
        2 => (vec![0, 1], vec![(1, k2), (2, k1)]),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "tau index {i} not in 1..=2"
            )))
        }
    };
    let shifted = tau(lie, &fund, nu, a);
    let mut tail = Vec::new();
    for (root, p) in trailing {
        tail.extend(std::iter::repeat_n(LoopGen::new(root, -1), p));
    }
    Ok(multiply(lie, &shifted, &straighten_word(lie, &tail)))
}

/// `omega_i = alpha_i - lambda_i` in fundamental coordinates.
pub fn omega(lie: &LieData, i: usize) -> Vec<i64> {
    let n = lie.rank();
    let mut a = vec![0; n];
    a[i - 1] = 1;
    let mut w = lie.roots.root_to_weight(&a);
    w[i - 1] -= 1;
    w
}

/// `tau_{omega_i, nu}(a) x_{alpha_i}(-1)^{k_i}`.
pub fn sigma_affine(
    lie: &LieData,
    i: usize,
    nu: &Character,
    k1: u32,
    k2: u32,
    a: &AlgElem,
) -> Result<AlgElem> {
    require_rank_two(lie)?;
    let ki = match i {
        1 => k1,
        2 => k2,
        _ => {
            return Err(Error::InvalidArgument(format!(
                "sigma index {i} not in 1..=2"
            )))
        }
    };
    let shifted = tau(lie, &omega(lie, i), nu, a);
    let tail = gen_power(LoopGen::new(i - 1, -1), ki as usize);
    Ok(multiply(lie, &shifted, &tail))
}

/// All normal-form monomials of grading `g` with modes in `[mode_floor, mode_ceiling]`.
///
/// With `negative_only` the ceiling is clamped to `-1`, which gives a basis of
/// the graded piece of `U(n_-)`.
pub fn enumerate_monomials(
    rs: &RootSystemData,
    g: &GradedIndex,
    mode_floor: i64,
    mode_ceiling: i64,
    negative_only: bool,
) -> Vec<Monomial> {
    let ceiling = if negative_only {
        mode_ceiling.min(-1)
    } else {
        mode_ceiling
    };
    let mut out = Vec::new();
    if g.charges.len() != rs.rank() || g.charges.iter().any(|c| *c < 0) || mode_floor > ceiling {
        return out;
    }
    let mut cands: Vec<LoopGen> = (0..rs.num_positive_roots())
        .flat_map(|r| (mode_floor..=ceiling).map(move |m| LoopGen::new(r, m)))
        .collect();
    cands.sort();
    let mut stack = Vec::new();
    enumerate_rec(
        rs,
        &cands,
        0,
        &mut g.charges.clone(),
        g.weight,
        mode_floor,
        ceiling,
        &mut stack,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    rs: &RootSystemData,
    cands: &[LoopGen],
    start: usize,
    charge_left: &mut Vec<i64>,
    weight_left: i64,
    floor: i64,
    ceiling: i64,
    stack: &mut Vec<LoopGen>,
    out: &mut Vec<Monomial>,
) {
    let total: i64 = charge_left.iter().sum();
    if total == 0 {
        if weight_left == 0 {
            out.push(Monomial(stack.clone()));
        }
        return;
    }
    // At most `total` further factors, each contributing weight in [-ceiling, -floor].
    let hi = total * -floor;
    let lo = if ceiling >= 0 {
        total * -ceiling
    } else {
        -ceiling
    };
    if weight_left > hi || weight_left < lo {
        return;
    }
    for (idx, &c) in cands.iter().enumerate().skip(start) {
        let root = rs.root(c.root);
        if root.iter().zip(charge_left.iter()).any(|(r, l)| r > l) {
            continue;
        }
        for (l, r) in charge_left.iter_mut().zip(root) {
            *l -= r;
        }
        stack.push(c);
        enumerate_rec(
            rs,
            cands,
            idx,
            charge_left,
            weight_left + c.mode,
            floor,
            ceiling,
            stack,
            out,
        );
        stack.pop();
        for (l, r) in charge_left.iter_mut().zip(root) {
            *l += r;
        }
    }
}

/// Number of negative-only monomials of grading `g`.
pub fn ambient_dim(rs: &RootSystemData, g: &GradedIndex) -> usize {
    if g.weight < 0 {
        return 0;
    }
    enumerate_monomials(rs, g, -g.weight.max(1), -1, true).len()
}

/// True if the coefficient is a positive number; used by formatting.
pub(crate) fn is_negative_coeff(c: &Coeff) -> bool {
    c.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie2() -> LieData {
        LieData::new(2).unwrap()
    }

    fn x(root: usize, mode: i64) -> LoopGen {
        LoopGen::new(root, mode)
    }

    fn mono(gens: &[(usize, i64)]) -> AlgElem {
        AlgElem::from_monomial(Monomial::from_sorted(
            gens.iter().map(|&(r, m)| x(r, m)).collect(),
        ))
    }

    fn int(v: i64) -> Coeff {
        Coeff::from_integer(v.into())
    }

    #[test]
    fn straightening_creates_commutator() {
        let lie = lie2();
        let got = multiply(&lie, &mono(&[(1, -1)]), &mono(&[(0, -1)]));
        let mut want = mono(&[(0, -1), (1, -1)]);
        want.add_term(
            Monomial::from_sorted(vec![x(2, -2)]),
            int(lie.structure.get(1, 0)),
        );
        assert_eq!(got, want);
        assert_eq!(lie.structure.get(1, 0).abs(), 1);
    }

    #[test]
    fn commuting_factors_reorder() {
        let lie = lie2();
        let got = multiply(&lie, &mono(&[(0, -1)]), &mono(&[(0, -3)]));
        assert_eq!(got, mono(&[(0, -3), (0, -1)]));
        let got = multiply(&lie, &mono(&[(0, -2)]), &mono(&[(2, -1)]));
        assert_eq!(got, mono(&[(0, -2), (2, -1)]));
    }

    #[test]
    fn negative_modes_sort_before_nonnegative() {
        let lie = lie2();
        // x_{a2}(0) x_{a1}(-1) = x_{a1}(-1) x_{a2}(0) + C_{a2,a1} x_{a1+a2}(-1)
        let got = multiply(&lie, &mono(&[(1, 0)]), &mono(&[(0, -1)]));
        let mut want = mono(&[(0, -1), (1, 0)]);
        want.add_term(
            Monomial::from_sorted(vec![x(2, -1)]),
            int(lie.structure.get(1, 0)),
        );
        assert_eq!(got, want);
        assert_eq!(
            got.project_negative(),
            mono(&[(2, -1)]).scale(&int(lie.structure.get(1, 0)))
        );
    }

    #[test]
    fn tau_examples() {
        let lie = lie2();
        let triv = Character::trivial(2);
        assert_eq!(
            tau(&lie, &[1, 0], &triv, &mono(&[(0, -1)])),
            mono(&[(0, -2)])
        );
        assert_eq!(
            tau(&lie, &[1, 0], &triv, &mono(&[(1, -1)])),
            mono(&[(1, -1)])
        );
        let nu = Character::from_signs(&[1, -1]).unwrap();
        assert_eq!(
            tau(&lie, &[0, 1], &nu, &mono(&[(2, -1)])),
            mono(&[(2, -2)]).neg()
        );
        assert!(matches!(
            Character::new(vec![int(1), int(0)]),
            Err(Error::ZeroCharacter(2))
        ));
    }

    #[test]
    fn tau_affine_examples() {
        let lie = lie2();
        let triv = Character::trivial(2);
        let l = AffineWeight::new(vec![1, 1, 0]).unwrap();
        assert_eq!(
            tau_affine(&lie, 1, &triv, &l, &AlgElem::one()).unwrap(),
            mono(&[(0, -1)])
        );
        let l = AffineWeight::new(vec![0, 1, 1]).unwrap();
        assert_eq!(
            tau_affine(&lie, 1, &triv, &l, &mono(&[(0, -1)])).unwrap(),
            mono(&[(0, -2), (0, -1), (2, -1)])
        );
        let l = AffineWeight::new(vec![1, 0, 1]).unwrap();
        assert_eq!(
            tau_affine(&lie, 2, &triv, &l, &AlgElem::one()).unwrap(),
            mono(&[(1, -1)])
        );
        let lie3 = LieData::new(3).unwrap();
        let l3 = AffineWeight::new(vec![1, 0, 0, 0]).unwrap();
        assert!(matches!(
            tau_affine(&lie3, 1, &Character::trivial(3), &l3, &AlgElem::one()),
            Err(Error::RankTwoOnly(3))
        ));
    }

    #[test]
    fn omega_pairings() {
        let lie = lie2();
        let w1 = omega(&lie, 1);
        assert_eq!(RootSystemData::mixed_pairing(&[1, 0], &w1), 1);
        assert_eq!(RootSystemData::mixed_pairing(&[0, 1], &w1), -1);
        assert_eq!(RootSystemData::mixed_pairing(&[1, 1], &w1), 0);
    }

    #[test]
    fn sigma_affine_examples() {
        let lie = lie2();
        let triv = Character::trivial(2);
        let got = sigma_affine(&lie, 1, &triv, 1, 1, &mono(&[(1, -1)])).unwrap();
        let want = multiply(&lie, &mono(&[(1, 0)]), &mono(&[(0, -1)]));
        assert_eq!(got, want);
        for m in [-3, -1, 0, 2] {
            let got = sigma_affine(&lie, 1, &triv, 0, 4, &mono(&[(0, m)])).unwrap();
            assert_eq!(got, mono(&[(0, m - 1)]));
        }
        for (k1, k2) in [(0, 0), (2, 1), (1, 3)] {
            let got = sigma_affine(&lie, 2, &triv, k1, k2, &AlgElem::one()).unwrap();
            assert_eq!(got, gen_power(x(1, -1), k2 as usize));
        }
    }

    #[test]
    fn enumerate_examples() {
        let lie = lie2();
        let rs = &lie.roots;
        let m = enumerate_monomials(rs, &GradedIndex::new(2, vec![2, 0]), -2, -1, true);
        assert_eq!(m, vec![Monomial::from_sorted(vec![x(0, -1), x(0, -1)])]);
        let m = enumerate_monomials(rs, &GradedIndex::new(3, vec![2, 0]), -3, -1, true);
        assert_eq!(m, vec![Monomial::from_sorted(vec![x(0, -2), x(0, -1)])]);
        let mut m = enumerate_monomials(rs, &GradedIndex::new(2, vec![1, 1]), -2, -1, true);
        m.sort();
        let mut want = vec![
            Monomial::from_sorted(vec![x(0, -1), x(1, -1)]),
            Monomial::from_sorted(vec![x(2, -2)]),
        ];
        want.sort();
        assert_eq!(m, want);
        // nonnegative modes allowed: weight 0 with one a1 factor at mode 0
        let m = enumerate_monomials(rs, &GradedIndex::new(0, vec![1, 0]), -2, 2, false);
        assert_eq!(m, vec![Monomial::from_sorted(vec![x(0, 0)])]);
    }

    #[test]
    fn affine_weight_parsing_and_shift() {
        let lie = lie2();
        let w = AffineWeight::parse("1,0,0", 2).unwrap();
        assert_eq!(w.level(), 1);
        assert!(AffineWeight::parse("1,0", 2).is_err());
        assert!(AffineWeight::parse("1,-1,0", 2).is_err());
        // <L1, L1 + a1 + a2> / (2 (1 + 3)) = (2/3 + 1) / 8
        let w = AffineWeight::parse("0,1,0", 2).unwrap();
        assert_eq!(
            w.conformal_shift(&lie.roots),
            Coeff::new(5.into(), 24.into())
        );
        let w = AffineWeight::parse("1,0,0", 2).unwrap();
        assert!(w.conformal_shift(&lie.roots).is_zero());
    }
}
