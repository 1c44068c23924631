//! Root system, pairing and cocycle data for sl(n+1).
//!
//! Roots are stored as coordinate vectors in the simple-root basis and
//! weights as coordinate vectors in the fundamental-weight basis. The
//! pairing between the two is the identity, `<alpha_i, lambda_j> = delta_ij`,
//! so `<alpha, mu>` is a plain dot product of coordinates.

use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::HashMap;

use crate::error::{Error, Result};

/// Static data of the A_n root system.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    fund_weight_pairing: Vec<Vec<BigRational>>,
    root_index: HashMap<Vec<i64>, usize>,
    sums: Vec<Vec<Option<usize>>>,
}

impl RootSystemData {
    /// Builds the data for sl(n+1).
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.abs_diff(j) {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();

        // Inverse of the A_n Cartan matrix: min(i,j)(n+1-max(i,j))/(n+1), 1-based.
        let np1 = BigRational::from_integer(((n + 1) as i64).into());
        let fund_weight_pairing = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        let num = (i.min(j) * (n + 1 - i.max(j))) as i64;
                        BigRational::from_integer(num.into()) / &np1
                    })
                    .collect()
            })
            .collect();

        // Positive roots of A_n are the interval vectors; order by height, then start.
        let mut positive_roots = Vec::with_capacity(n * (n + 1) / 2);
        for height in 1..=n {
            for start in 0..=(n - height) {
                let mut v = vec![0i64; n];
                v[start..start + height].iter_mut().for_each(|c| *c = 1);
                positive_roots.push(v);
            }
        }
        let root_index: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        let sums = positive_roots
            .iter()
            .map(|a| {
                positive_roots
                    .iter()
                    .map(|b| {
                        let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                        root_index.get(&s).copied()
                    })
                    .collect()
            })
            .collect();

        Ok(RootSystemData {
            rank: n,
            cartan,
            positive_roots,
            fund_weight_pairing,
            root_index,
            sums,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Coordinates of the positive root with the given index.
    pub fn root(&self, idx: usize) -> &[i64] {
        &self.positive_roots[idx]
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.root_index.get(coords).copied()
    }

    /// Index of the simple root alpha_i, `i` in `1..=n`.
    pub fn simple_root_index(&self, i: usize) -> usize {
        i - 1
    }

    /// Index of `root(a) + root(b)` when it is a positive root.
    pub fn root_sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a][b]
    }

    /// `<lambda_i, lambda_j>` (0-based indices).
    pub fn fund_weight_pairing(&self) -> &[Vec<BigRational>] {
        &self.fund_weight_pairing
    }

    /// `<x, y>` for two elements of the root lattice given in root coordinates.
    pub fn root_pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                acc += xi * self.cartan[i][j] * yj;
            }
        }
        acc
    }

    /// `<x, y>` for two weights given in fundamental-weight coordinates.
    pub fn weight_pairing(&self, x: &[i64], y: &[i64]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if *yj == 0 {
                    continue;
                }
                acc +=
                    &self.fund_weight_pairing[i][j] * BigRational::from_integer((xi * yj).into());
            }
        }
        acc
    }

    /// `<alpha, mu>` for `alpha` in root coordinates and `mu` in weight coordinates.
    pub fn mixed_pairing(alpha: &[i64], mu: &[i64]) -> i64 {
        alpha.iter().zip(mu).map(|(a, m)| a * m).sum()
    }

    /// Converts root coordinates to fundamental-weight coordinates.
    pub fn root_to_weight(&self, alpha: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|j| (0..self.rank).map(|i| alpha[i] * self.cartan[i][j]).sum())
            .collect()
    }

    /// Converts weight coordinates to root coordinates; `None` unless the weight lies in Q.
    pub fn weight_to_root(&self, mu: &[i64]) -> Option<Vec<i64>> {
        let mut out = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut acc = BigRational::zero();
            for (j, mj) in mu.iter().enumerate() {
                acc += &self.fund_weight_pairing[i][j] * BigRational::from_integer((*mj).into());
            }
            if !acc.is_integer() {
                return None;
            }
            out.push(i64::try_from(acc.to_integer()).ok()?);
        }
        Some(out)
    }

    /// Root coordinates of `rho = alpha_1 + ... + alpha_n` expressed as a weight.
    pub fn simple_root_sum_weight(&self) -> Vec<i64> {
        self.root_to_weight(&vec![1; self.rank])
    }

    /// Checks the structural invariants; used by tests and by `build`.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.rank;
        for i in 0..n {
            for j in 0..n {
                let mut acc = BigRational::zero();
                for l in 0..n {
                    acc += BigRational::from_integer(self.cartan[i][l].into())
                        * &self.fund_weight_pairing[l][j];
                }
                let expect = if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                };
                if acc != expect {
                    return Err(Error::Internal("inverse Cartan matrix mismatch".into()));
                }
            }
        }
        for r in &self.positive_roots {
            let first = r.iter().position(|c| *c != 0);
            let last = r.iter().rposition(|c| *c != 0);
            match (first, last) {
                (Some(f), Some(l)) if r[f..=l].iter().all(|c| *c == 1) => {}
                _ => return Err(Error::Internal(format!("root {r:?} is not an interval"))),
            }
            if self.root_pairing(r, r) != 2 {
                return Err(Error::Internal(format!(
                    "root {r:?} has square length != 2"
                )));
            }
        }
        Ok(())
    }
}

/// Bilinear ±1-valued cocycle on the weight lattice.
///
/// `eps(x, y) = (-1)^(x^T E y)` where `x`, `y` are weight coordinates.
/// In the root-basis fallback, `x` must lie in the root lattice and
/// the table is indexed by (simple root, fundamental weight).
#[derive(Clone, Debug)]
pub struct Cocycle {
    table: Vec<Vec<u8>>,
    kind: CocycleKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleKind {
    /// Defined on all of P x P.
    Full,
    /// Defined on Q x P only.
    RootBasis,
}

impl Cocycle {
    /// Builds a ±1 cocycle whose commutator map is `(-1)^<alpha,beta>` on Q x Q.
    pub fn build(rs: &RootSystemData) -> Result<Self> {
        let cocycle = match Self::full_table(rs) {
            Some(c) => c,
            None => Self::root_basis(rs)?,
        };
        cocycle.check_root_commutators(rs)?;
        Ok(cocycle)
    }

    /// Solves for a full P x P table; `None` if no ±1 bimultiplicative table exists.
    pub fn full_table(rs: &RootSystemData) -> Option<Self> {
        let n = rs.rank();
        let t = parity_matrix(rs);
        // Unknowns s_ij, i < j: exponent of c(lambda_i, lambda_j).
        let unknowns: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut rows = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut row: Vec<u8> = unknowns
                    .iter()
                    .map(|&(i, j)| (t[a][i] * t[b][j] + t[a][j] * t[b][i]) % 2)
                    .collect();
                row.push(t[a][b]);
                rows.push(row);
            }
        }
        let sol = solve_gf2(rows, unknowns.len())?;
        let mut table = vec![vec![0u8; n]; n];
        for (&(i, j), s) in unknowns.iter().zip(sol) {
            table[i][j] = s;
        }
        Some(Cocycle {
            table,
            kind: CocycleKind::Full,
        })
    }

    /// Cocycle defined on Q x P from a table of values eps(alpha_a, lambda_j).
    pub fn root_basis(rs: &RootSystemData) -> Result<Self> {
        let n = rs.rank();
        let t = parity_matrix(rs);
        // Unknowns u_aj; V = U T must satisfy V_ab + V_ba = T_ab for a < b.
        let unknowns: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |j| (a, j))).collect();
        let mut rows = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut row: Vec<u8> = unknowns
                    .iter()
                    .map(|&(r, j)| {
                        let mut v = 0;
                        if r == a {
                            v += t[j][b];
                        }
                        if r == b {
                            v += t[j][a];
                        }
                        v % 2
                    })
                    .collect();
                row.push(t[a][b]);
                rows.push(row);
            }
        }
        let sol = solve_gf2(rows, unknowns.len()).ok_or(Error::NoCocycle(n))?;
        let mut table = vec![vec![0u8; n]; n];
        for (&(a, j), s) in unknowns.iter().zip(sol) {
            table[a][j] = s;
        }
        Ok(Cocycle {
            table,
            kind: CocycleKind::RootBasis,
        })
    }

    pub fn kind(&self) -> CocycleKind {
        self.kind
    }

    /// `eps(x, y)` for weights in fundamental coordinates.
    pub fn eps_weights(&self, rs: &RootSystemData, x: &[i64], y: &[i64]) -> Result<i64> {
        match self.kind {
            CocycleKind::Full => Ok(self.eval(x, y)),
            CocycleKind::RootBasis => {
                let xr = rs.weight_to_root(x).ok_or(Error::CocycleUndefined)?;
                Ok(self.eval(&xr, y))
            }
        }
    }

    /// `eps(alpha, mu)` for `alpha` in root coordinates and `mu` in weight coordinates.
    pub fn eps_root_weight(&self, rs: &RootSystemData, alpha: &[i64], mu: &[i64]) -> i64 {
        match self.kind {
            CocycleKind::Full => self.eval(&rs.root_to_weight(alpha), mu),
            CocycleKind::RootBasis => self.eval(alpha, mu),
        }
    }

    /// Commutator map `c(x, y) = eps(x, y) / eps(y, x)`.
    pub fn commutator_weights(&self, rs: &RootSystemData, x: &[i64], y: &[i64]) -> Result<i64> {
        Ok(self.eps_weights(rs, x, y)? * self.eps_weights(rs, y, x)?)
    }

    /// `c(alpha, mu)` for `alpha` in Q (root coordinates) and `mu` in P.
    ///
    /// For the root-basis fallback this is only defined when `mu` is in Q as well.
    pub fn commutator_root_weight(
        &self,
        rs: &RootSystemData,
        alpha: &[i64],
        mu: &[i64],
    ) -> Result<i64> {
        let a = self.eps_root_weight(rs, alpha, mu);
        let b = match self.kind {
            CocycleKind::Full => self.eval(mu, &rs.root_to_weight(alpha)),
            CocycleKind::RootBasis => {
                let mr = rs.weight_to_root(mu).ok_or(Error::CocycleUndefined)?;
                self.eval(&mr, &rs.root_to_weight(alpha))
            }
        };
        Ok(a * b)
    }

    fn eval(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut parity = 0i64;
        for (i, xi) in x.iter().enumerate() {
            if xi.rem_euclid(2) == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if self.table[i][j] == 1 {
                    parity += yj.rem_euclid(2);
                }
            }
        }
        if parity % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Verifies `c(alpha_a, alpha_b) = (-1)^<alpha_a, alpha_b>` on all simple roots.
    pub fn check_root_commutators(&self, rs: &RootSystemData) -> Result<()> {
        let n = rs.rank();
        for a in 0..n {
            for b in 0..n {
                let mut ea = vec![0; n];
                ea[a] = 1;
                let mut eb = vec![0; n];
                eb[b] = 1;
                let c = self.commutator_root_weight(rs, &ea, &rs.root_to_weight(&eb))?;
                let expect = if rs.cartan()[a][b].rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                };
                if c != expect {
                    return Err(Error::Internal(format!(
                        "cocycle commutator c(alpha_{},alpha_{}) = {c}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

fn parity_matrix(rs: &RootSystemData) -> Vec<Vec<u8>> {
    rs.cartan()
        .iter()
        .map(|row| row.iter().map(|v| v.rem_euclid(2) as u8).collect())
        .collect()
}

/// Solves an augmented GF(2) system; free variables are set to zero.
fn solve_gf2(mut rows: Vec<Vec<u8>>, vars: usize) -> Option<Vec<u8>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let pivot_row = rows[r].clone();
                rows[i].iter_mut().zip(pivot_row).for_each(|(x, y)| *x ^= y);
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[vars] == 1) {
        return None;
    }
    let mut sol = vec![0u8; vars];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][vars];
    }
    Some(sol)
}

/// Structure constants `[x_a, x_b] = C_{a,b} x_{a+b}` in the lattice normalization.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    table: Vec<Vec<i64>>,
}

impl StructureConstants {
    /// `C_{a,b} = eps(a, b)` whenever `a + b` is a root.
    ///
    /// This is the normalization in which `x_a(m) -> x_a(m)` is a homomorphism
    /// into the lattice action; `eps(b, a) = -eps(a, b)` makes it antisymmetric.
    pub fn from_cocycle(rs: &RootSystemData, cocycle: &Cocycle) -> Self {
        let m = rs.num_positive_roots();
        let mut table = vec![vec![0i64; m]; m];
        for (a, row) in table.iter_mut().enumerate() {
            for (b, c) in row.iter_mut().enumerate() {
                if rs.root_sum(a, b).is_some() {
                    let wb = rs.root_to_weight(rs.root(b));
                    *c = cocycle.eps_root_weight(rs, rs.root(a), &wb);
                }
            }
        }
        StructureConstants { table }
    }

    /// `C_{a,b}`, zero when `a + b` is not a root.
    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.table[a][b]
    }
}

/// Everything the other modules need about sl(n+1), bundled.
#[derive(Clone, Debug)]
pub struct LieData {
    pub roots: RootSystemData,
    pub cocycle: Cocycle,
    pub structure: StructureConstants,
}

impl LieData {
    pub fn new(n: usize) -> Result<Self> {
        let roots = RootSystemData::new(n)?;
        roots.check_invariants()?;
        let cocycle = Cocycle::build(&roots)?;
        let structure = StructureConstants::from_cocycle(&roots, &cocycle);
        Ok(LieData {
            roots,
            cocycle,
            structure,
        })
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }
}
