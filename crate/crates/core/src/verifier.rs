//! Two-sided verification of presentations `W(L) = U(nbar) / I_L`, together
//! with the lemma-level checks for the translation maps.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::cache::Cache;
use crate::error::{Error, Result};
use crate::fock::{
    charge_vectors, graded_basis, highest_weight_tensor, highest_weight_vector, lattice_states,
    tensor_grading, FockSpace, ModuleVec, PrincipalTable, Tensor,
};
use crate::ideal::{is_member, IdealEngine, IdealSpec, Window};
use crate::linalg::SparseEchelon;
use crate::root_data::{LieData, RootSystemData};
use crate::text::{format_elem, format_gen};
use crate::upbw::{
    ambient_dim, gen_power, sigma_affine, tau_affine, AffineWeight, AlgElem, Character, Coeff,
    GradedIndex, LoopGen,
};

/// `dim W(L)_g`.
pub fn principal_dim(lie: &LieData, lambda: &AffineWeight, g: &GradedIndex) -> Result<usize> {
    if g.weight < 0 || g.charges.iter().any(|c| *c < 0) {
        return Ok(0);
    }
    PrincipalTable::compute(lie, lambda, g.weight, g.total_charge())?.dim(g)
}

/// Applies every generator of `I_L` of weight at most `w_max`, and `x_alpha(m)`
/// for `m = 0, 1, 2`, to `v_L`; each entry records whether the result is zero.
pub fn annihilation_check(
    lie: &LieData,
    lambda: &AffineWeight,
    w_max: i64,
) -> Result<Vec<(String, bool)>> {
    let spec = IdealSpec::for_weight(lie, lambda)?;
    let fock = FockSpace::new(lie);
    let v = highest_weight_vector(lambda);
    let mut out = Vec::new();
    for (label, g) in spec.generators(lie, w_max)? {
        out.push((label, fock.act(&g, &v).is_zero()));
    }
    for root in 0..lie.roots.num_positive_roots() {
        for m in 0..=2 {
            let gen = LoopGen::new(root, m);
            let ok = fock.act_gen(gen, &v).is_zero();
            out.push((format_gen(&lie.roots, gen), ok));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Mismatch,
    Unstable,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Mismatch => 2,
            Status::Unstable => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Mismatch => "MISMATCH",
            Status::Unstable => "UNSTABLE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentRecord {
    pub n: usize,
    pub k: u32,
    pub lambda: String,
    pub weight: i64,
    pub charges: Vec<i64>,
    pub ambient: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
    pub principal_dim: usize,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub k: u32,
    pub lambda: String,
    pub statement: String,
    pub w_max: i64,
    pub charge_max: i64,
    pub window: String,
    pub growth_rounds: u32,
    pub status: Status,
    pub mismatch: Option<ComponentRecord>,
    pub components: Vec<ComponentRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "# n={} k={} lambda={} statement={} w_max={} charge_max={} window=[{}] growth_rounds={} status={}",
            self.n,
            self.k,
            self.lambda,
            self.statement,
            self.w_max,
            self.charge_max,
            self.window,
            self.growth_rounds,
            self.status.as_str()
        );
        s.push_str("n\tk\tlambda\tweight\tcharges\tambient\tideal_rank\tquotient_dim\tprincipal_dim\tequal\n");
        for c in &self.components {
            let ch: Vec<String> = c.charges.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                c.n,
                c.k,
                c.lambda,
                c.weight,
                ch.join(","),
                c.ambient,
                c.ideal_rank,
                c.quotient_dim,
                c.principal_dim,
                c.equal
            );
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub w_max: i64,
    pub charge_max: i64,
    pub mode_bound: Option<i64>,
    /// Number of times `t_max` may be enlarged after a mismatch.
    pub max_growth: u32,
    pub cache: Option<Cache>,
}

impl VerifyOptions {
    pub fn new(w_max: i64, charge_max: i64) -> Self {
        VerifyOptions {
            w_max,
            charge_max,
            mode_bound: None,
            max_growth: 3,
            cache: None,
        }
    }
}

fn weight_text(lambda: &AffineWeight) -> String {
    let c: Vec<String> = lambda.coords().iter().map(|x| x.to_string()).collect();
    c.join(",")
}

/// All gradings with weight at most `w_max` and total charge at most `charge_max`.
pub fn gradings(n: usize, w_max: i64, charge_max: i64) -> Vec<GradedIndex> {
    let mut out = Vec::new();
    for w in 0..=w_max {
        for c in 0..=charge_max {
            for ch in charge_vectors(n, c) {
                out.push(GradedIndex::new(w, ch));
            }
        }
    }
    out.sort();
    out
}

/// Compares `dim (U(nbar)/I_L)_g` with `dim W(L)_g` over the budget,
/// enlarging the ideal window while they disagree.
pub fn verify_presentation(
    lie: &LieData,
    lambda: &AffineWeight,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let rs = &lie.roots;
    let n = rs.rank();
    if opts.w_max < 0 || opts.charge_max < 0 {
        return Err(Error::InvalidArgument("budgets must be nonnegative".into()));
    }
    let spec = IdealSpec::for_weight(lie, lambda)?;
    let table = PrincipalTable::compute(lie, lambda, opts.w_max, opts.charge_max)?;
    let pieces: Vec<(GradedIndex, usize)> = gradings(n, opts.w_max, opts.charge_max)
        .into_iter()
        .map(|g| {
            let a = ambient_dim(rs, &g);
            (g, a)
        })
        .filter(|(_, a)| *a > 0)
        .collect();
    let label = weight_text(lambda);
    let mut window = Window::new(opts.w_max, opts.charge_max).with_mode_bound(opts.mode_bound);
    let mut previous: Option<Vec<usize>> = None;
    let mut round = 0;
    loop {
        let engine = IdealEngine::compute_cached(lie, &spec, window.clone(), opts.cache.as_ref())?;
        let mut records = Vec::with_capacity(pieces.len());
        for (g, ambient) in &pieces {
            let ideal_rank = engine.rank(g)?;
            let quotient_dim = ambient - ideal_rank;
            let principal_dim = table.dim(g)?;
            if quotient_dim < principal_dim {
                return Err(Error::Internal(format!(
                    "quotient dimension {quotient_dim} below principal dimension {principal_dim} at {g}"
                )));
            }
            records.push(ComponentRecord {
                n,
                k: lambda.level(),
                lambda: label.clone(),
                weight: g.weight,
                charges: g.charges.clone(),
                ambient: *ambient,
                ideal_rank,
                quotient_dim,
                principal_dim,
                equal: quotient_dim == principal_dim,
            });
        }
        let mismatch = records.iter().find(|r| !r.equal).cloned();
        let dims: Vec<usize> = records.iter().map(|r| r.quotient_dim).collect();
        let status = if mismatch.is_none() {
            Some(Status::Pass)
        } else if previous.as_ref() == Some(&dims) {
            Some(Status::Mismatch)
        } else if round == opts.max_growth {
            Some(Status::Unstable)
        } else {
            None
        };
        if let Some(status) = status {
            return Ok(VerificationReport {
                n,
                k: lambda.level(),
                lambda: label,
                statement: if n == 2 { "theorem" } else { "conjecture" }.to_string(),
                w_max: opts.w_max,
                charge_max: opts.charge_max,
                window: window.describe(),
                growth_rounds: round,
                status,
                mismatch,
                components: records,
            });
        }
        previous = Some(dims);
        window = window.grown();
        round += 1;
    }
}

/// Nonzero coefficients of `sum dim W(L)_{(w,r)} q^w z^r`.
pub fn qseries(
    lie: &LieData,
    lambda: &AffineWeight,
    w_max: i64,
    charge_max: i64,
) -> Result<Vec<(GradedIndex, usize)>> {
    let table = PrincipalTable::compute(lie, lambda, w_max, charge_max)?;
    Ok(table.nonzero().map(|(g, d)| (g.clone(), d)).collect())
}

pub fn qseries_tsv(rows: &[(GradedIndex, usize)]) -> String {
    let mut s = String::new();
    if let Some((g, _)) = rows.first() {
        let mut head = vec!["weight".to_string()];
        head.extend((1..=g.charges.len()).map(|i| format!("r{i}")));
        head.push("dim".into());
        let _ = writeln!(s, "{}", head.join("\t"));
    }
    for (g, d) in rows {
        let mut row = vec![g.weight.to_string()];
        row.extend(g.charges.iter().map(|c| c.to_string()));
        row.push(d.to_string());
        let _ = writeln!(s, "{}", row.join("\t"));
    }
    s
}

pub fn qseries_json(rows: &[(GradedIndex, usize)]) -> String {
    #[derive(Serialize)]
    struct Row<'a> {
        weight: i64,
        charges: &'a [i64],
        dim: usize,
    }
    let rows: Vec<Row> = rows
        .iter()
        .map(|(g, d)| Row {
            weight: g.weight,
            charges: &g.charges,
            dim: *d,
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaItem {
    pub map: String,
    pub generator: String,
    pub image: String,
    pub target: String,
    pub member: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub which: String,
    pub source: String,
    pub items: Vec<LemmaItem>,
    pub pass: bool,
}

impl LemmaReport {
    pub fn failures(&self) -> impl Iterator<Item = &LemmaItem> {
        self.items.iter().filter(|i| !i.member)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut s = format!(
            "# which={} source={} pass={}\n",
            self.which, self.source, self.pass
        );
        s.push_str("map\tgenerator\ttarget\tmember\timage\n");
        for i in &self.items {
            let _ = writeln!(
                s,
                "{}\t{}\t{}\t{}\t{}",
                i.map, i.generator, i.target, i.member, i.image
            );
        }
        s
    }
}

/// Generators of `I_L` of weight at most `w_max`, plus `x_alpha(m)` for `m = 0, 1, 2`.
fn lemma_generators(
    lie: &LieData,
    lambda: &AffineWeight,
    w_max: i64,
) -> Result<Vec<(String, AlgElem)>> {
    let spec = IdealSpec::for_weight(lie, lambda)?;
    let mut gens = spec.generators(lie, w_max)?;
    for root in 0..lie.roots.num_positive_roots() {
        for m in 0..=2 {
            let g = LoopGen::new(root, m);
            gens.push((format_gen(&lie.roots, g), gen_power(g, 1)));
        }
    }
    Ok(gens)
}

const LEMMA_GROWTH: u32 = 2;

fn check_images(
    lie: &LieData,
    map_name: &str,
    target: &AffineWeight,
    gens: &[(String, AlgElem)],
    image: impl Fn(&AlgElem) -> Result<AlgElem> + Sync,
) -> Result<Vec<LemmaItem>> {
    use rayon::prelude::*;
    let spec = IdealSpec::for_weight(lie, target)?;
    gens.par_iter()
        .map(|(label, g)| {
            let img = image(g)?;
            let member = is_member(lie, &spec, &img, LEMMA_GROWTH)?;
            Ok(LemmaItem {
                map: map_name.to_string(),
                generator: label.clone(),
                image: format_elem(&lie.roots, &img.project_negative()),
                target: weight_text(target),
                member,
            })
        })
        .collect()
}

/// `tau^L_{lambda_1}(I_L) in I_{(k2,k0,k1)}` and `tau^L_{lambda_2}(I_L) in I_{(k1,k2,k0)}`.
pub fn lemma_check_tau(lie: &LieData, lambda: &AffineWeight, w_max: i64) -> Result<LemmaReport> {
    if lie.rank() != 2 {
        return Err(Error::RankTwoOnly(lie.rank()));
    }
    let (k0, k1, k2) = (lambda.k(0), lambda.k(1), lambda.k(2));
    let gens = lemma_generators(lie, lambda, w_max)?;
    let nu = Character::trivial(2);
    let t1 = AffineWeight::new(vec![k2, k0, k1])?;
    let t2 = AffineWeight::new(vec![k1, k2, k0])?;
    let mut items = check_images(lie, "tau_lambda1", &t1, &gens, |g| {
        tau_affine(lie, 1, &nu, lambda, g)
    })?;
    items.extend(check_images(lie, "tau_lambda2", &t2, &gens, |g| {
        tau_affine(lie, 2, &nu, lambda, g)
    })?);
    let pass = items.iter().all(|i| i.member);
    Ok(LemmaReport {
        which: "tau".into(),
        source: weight_text(lambda),
        items,
        pass,
    })
}

/// For `L = k1 L_1 + k2 L_2`: `sigma_{omega_1}(I_L) in I_{(k1,k2,0)}` and
/// `sigma_{omega_2}(I_L) in I_{(k2,0,k1)}`.
pub fn lemma_check_sigma(lie: &LieData, k1: u32, k2: u32, w_max: i64) -> Result<LemmaReport> {
    if lie.rank() != 2 {
        return Err(Error::RankTwoOnly(lie.rank()));
    }
    let lambda = AffineWeight::new(vec![0, k1, k2])?;
    let gens = lemma_generators(lie, &lambda, w_max)?;
    let nu = Character::trivial(2);
    let t1 = AffineWeight::new(vec![k1, k2, 0])?;
    let t2 = AffineWeight::new(vec![k2, 0, k1])?;
    let mut items = check_images(lie, "sigma_omega1", &t1, &gens, |g| {
        sigma_affine(lie, 1, &nu, k1, k2, g)
    })?;
    items.extend(check_images(lie, "sigma_omega2", &t2, &gens, |g| {
        sigma_affine(lie, 2, &nu, k1, k2, g)
    })?);
    let pass = items.iter().all(|i| i.member);
    Ok(LemmaReport {
        which: "sigma".into(),
        source: weight_text(&lambda),
        items,
        pass,
    })
}

/// Class of a weight in `P/Q`, identified with `0..=n`.
fn lattice_class(mu: &[i64]) -> usize {
    let n1 = mu.len() as i64 + 1;
    let s: i64 = mu.iter().enumerate().map(|(i, c)| (i as i64 + 1) * c).sum();
    s.rem_euclid(n1) as usize
}

/// Target weight of `e_mu^{(x)k}` on `W(L)`: factor classes are shifted by the class of `mu`.
pub fn translated_weight(lambda: &AffineWeight, mu: &[i64]) -> Result<AffineWeight> {
    let n1 = lambda.rank() + 1;
    let shift = lattice_class(mu);
    let mut k = vec![0u32; n1];
    for j in 0..n1 {
        k[(j + shift) % n1] = lambda.k(j);
    }
    AffineWeight::new(k)
}

/// Reorders tensor factors so that their lattice classes increase, matching
/// the factor order of highest weight vectors.
fn canonical_order(v: &ModuleVec) -> ModuleVec {
    let Some(first) = v.terms().keys().next() else {
        return v.clone();
    };
    let mut perm: Vec<usize> = (0..first.len()).collect();
    perm.sort_by_key(|&j| lattice_class(&first[j].lattice));
    let mut out = ModuleVec::zero();
    for (t, c) in v.terms() {
        let nt: Tensor = perm.iter().map(|&j| t[j].clone()).collect();
        out.add_term(nt, c.clone());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationPiece {
    pub source: GradedIndex,
    pub target: GradedIndex,
    pub dim: usize,
    pub image_rank: usize,
    pub lands_in_target: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TranslationReport {
    pub map: String,
    pub source: String,
    pub target: String,
    pub conjugation_checked: usize,
    pub conjugation_failures: usize,
    pub pieces: Vec<TranslationPiece>,
    pub pass: bool,
}

/// Checks `e_mu x_alpha(m) = c(alpha, -mu) x_alpha(m - <alpha, mu>) e_mu` on
/// the basis tensors of `V_P^{(x)k}` near `v_L` (weight at most `conj_weight`,
/// charges in `[-1, 1]`, modes in `[-2, 2]`), and that `e_mu^{(x)k}` maps each
/// graded piece of `W(L)` with weight at most `w_max` injectively into a graded
/// piece of `W(L')`.
pub fn translation_check(
    lie: &LieData,
    map: &str,
    mu: &[i64],
    lambda: &AffineWeight,
    w_max: i64,
    charge_max: i64,
    conj_weight: i64,
) -> Result<TranslationReport> {
    let rs = &lie.roots;
    let n = rs.rank();
    let fock = FockSpace::new(lie);
    let target = translated_weight(lambda, mu)?;

    let mut checked = 0;
    let mut failures = 0;
    let mu_alpha: Vec<i64> = mu.to_vec();
    let neg_mu: Vec<i64> = mu.iter().map(|x| -x).collect();
    let mut charge_boxes = vec![vec![]];
    for _ in 0..n {
        charge_boxes = charge_boxes
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-1..=1).map(move |c| {
                    let mut v = v.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    for w in 0..=conj_weight {
        for ch in &charge_boxes {
            for t in graded_basis(lie, lambda, &GradedIndex::new(w, ch.clone())) {
                let v = ModuleVec::basis(t);
                let ev = fock.e_lambda_tensor(&mu_alpha, &v)?;
                for root in 0..rs.num_positive_roots() {
                    let alpha = rs.root(root);
                    let shift = RootSystemData::mixed_pairing(alpha, mu);
                    let c =
                        lie.cocycle
                            .commutator_weights(rs, &rs.root_to_weight(alpha), &neg_mu)?;
                    for m in -2..=2 {
                        let lhs = fock
                            .e_lambda_tensor(&mu_alpha, &fock.act_gen(LoopGen::new(root, m), &v))?;
                        let rhs = fock
                            .act_gen(LoopGen::new(root, m - shift), &ev)
                            .scale(&Coeff::from_integer(c.into()));
                        checked += 1;
                        if lhs != rhs {
                            failures += 1;
                        }
                    }
                }
            }
        }
    }

    let source_table = PrincipalTable::compute(lie, lambda, w_max, charge_max)?;
    let target_base = highest_weight_tensor(&target);
    let mut images: BTreeMap<GradedIndex, (GradedIndex, usize, Vec<ModuleVec>)> = BTreeMap::new();
    let (mut tw, mut tc) = (0, 0);
    for (g, d) in source_table.nonzero() {
        let imgs: Vec<ModuleVec> = source_table
            .basis(g)
            .iter()
            .map(|b| {
                fock.e_lambda_tensor(&mu_alpha, b)
                    .map(|v| canonical_order(&v))
            })
            .collect::<Result<_>>()?;
        let first = imgs[0].terms().keys().next().expect("nonzero image");
        let tg = tensor_grading(rs, &target_base, first).ok_or_else(|| {
            Error::Internal(format!("image of {g} leaves the target lattice coset"))
        })?;
        tw = tw.max(tg.weight);
        tc = tc.max(tg.total_charge());
        images.insert(g.clone(), (tg, d, imgs));
    }
    let target_table = PrincipalTable::compute(lie, &target, tw, tc)?;
    let mut pieces = Vec::new();
    for (g, (tg, d, imgs)) in images {
        let mut image_span: SparseEchelon<Tensor> = SparseEchelon::new();
        let mut target_span: SparseEchelon<Tensor> = SparseEchelon::new();
        for b in target_table.basis(&tg) {
            target_span.insert(b.terms().clone());
        }
        let mut lands = true;
        for v in &imgs {
            lands &= v
                .terms()
                .keys()
                .all(|t| tensor_grading(rs, &target_base, t).as_ref() == Some(&tg));
            lands &= target_span.contains(v.terms().clone());
            image_span.insert(v.terms().clone());
        }
        pieces.push(TranslationPiece {
            source: g,
            target: tg,
            dim: d,
            image_rank: image_span.rank(),
            lands_in_target: lands,
        });
    }
    let pass = failures == 0
        && pieces
            .iter()
            .all(|p| p.lands_in_target && p.image_rank == p.dim);
    Ok(TranslationReport {
        map: map.to_string(),
        source: weight_text(lambda),
        target: weight_text(&target),
        conjugation_checked: checked,
        conjugation_failures: failures,
        pieces,
        pass,
    })
}

/// Checks `[x_a(m), x_b(p)] v = C_{a,b} x_{a+b}(m+p) v` (or `0` when `a+b`
/// is not a root) for the lattice action.
pub fn commutator_agrees(fock: &FockSpace, a: LoopGen, b: LoopGen, v: &ModuleVec) -> bool {
    let lie = fock.lie();
    let ab = fock.act_gen(a, &fock.act_gen(b, v));
    let ba = fock.act_gen(b, &fock.act_gen(a, v));
    let lhs = ab.sub(&ba);
    let rhs = match lie.roots.root_sum(a.root, b.root) {
        Some(sum) => {
            fock.act_gen(LoopGen::new(sum, a.mode + b.mode), v)
                .scale(&Coeff::from_integer(
                    lie.structure.get(a.root, b.root).into(),
                ))
        }
        None => ModuleVec::zero(),
    };
    lhs == rhs
}

/// Result of a sampled or exhaustive operator check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OperatorCheck {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Random commutator checks on basis states of `V_P` of weight at most
/// `max_weight`, with modes in `[-mode_bound, mode_bound]`, reproducible from `seed`.
pub fn sample_commutators(
    lie: &LieData,
    samples: usize,
    seed: u64,
    max_weight: i64,
    mode_bound: i64,
) -> OperatorCheck {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(seed);
    let states = lattice_states(lie, max_weight);
    let fock = FockSpace::new(lie);
    let roots = lie.roots.num_positive_roots();
    let mut failures = Vec::new();
    for _ in 0..samples {
        let s = &states[rng.gen_range(0..states.len())];
        let a = LoopGen::new(
            rng.gen_range(0..roots),
            rng.gen_range(-mode_bound..=mode_bound),
        );
        let b = LoopGen::new(
            rng.gen_range(0..roots),
            rng.gen_range(-mode_bound..=mode_bound),
        );
        if !commutator_agrees(&fock, a, b, &ModuleVec::basis(vec![s.clone()])) {
            let rs = &lie.roots;
            failures.push(format!(
                "[{}, {}] on {s}",
                format_gen(rs, a),
                format_gen(rs, b)
            ));
        }
    }
    OperatorCheck {
        checked: samples,
        failures,
    }
}

/// `lambda_i` in fundamental coordinates (`i` 1-based).
pub fn fundamental(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i - 1] = 1;
    v
}

/// All dominant integral weights of the given rank and level, lexicographic.
pub fn dominant_weights(n: usize, k: u32) -> Vec<AffineWeight> {
    charge_vectors(n + 1, k as i64)
        .into_iter()
        .rev()
        .map(|c| AffineWeight::new(c.into_iter().map(|x| x as u32).collect()).expect("nonnegative"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lie2() -> LieData {
        LieData::new(2).unwrap()
    }

    fn weight(v: &[u32]) -> AffineWeight {
        AffineWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn principal_dim_examples() {
        let lie = lie2();
        assert_eq!(
            principal_dim(&lie, &weight(&[1, 0, 0]), &GradedIndex::new(1, vec![1, 0])).unwrap(),
            1
        );
        assert_eq!(
            principal_dim(&lie, &weight(&[0, 1, 0]), &GradedIndex::new(1, vec![1, 0])).unwrap(),
            0
        );
        assert_eq!(
            principal_dim(&lie, &weight(&[1, 0, 0]), &GradedIndex::new(2, vec![2, 0])).unwrap(),
            0
        );
    }

    #[test]
    fn small_presentations_pass() {
        let lie = lie2();
        for l in [[1, 0, 0], [0, 1, 0]] {
            let r = verify_presentation(&lie, &weight(&l), &VerifyOptions::new(3, 6)).unwrap();
            assert!(r.passed(), "{}", r.to_tsv());
        }
    }

    #[test]
    fn translated_weights_permute_cyclically() {
        let l = weight(&[3, 1, 2]);
        assert_eq!(translated_weight(&l, &[1, 0]).unwrap(), weight(&[2, 3, 1]));
        assert_eq!(translated_weight(&l, &[0, 1]).unwrap(), weight(&[1, 2, 3]));
        // omega_1 = alpha_1 - lambda_1 = (1,-1), omega_2 = (-1,1)
        let l = weight(&[0, 1, 2]);
        assert_eq!(translated_weight(&l, &[1, -1]).unwrap(), weight(&[1, 2, 0]));
        assert_eq!(translated_weight(&l, &[-1, 1]).unwrap(), weight(&[2, 0, 1]));
    }

    #[test]
    fn dominant_weight_listing() {
        let w: Vec<String> = dominant_weights(2, 1).iter().map(|w| w.label()).collect();
        assert_eq!(w, vec!["1-0-0", "0-1-0", "0-0-1"]);
        assert_eq!(dominant_weights(2, 2).len(), 6);
    }
}
