//! Root-system bookkeeping for the simply laced finite types, built from a
//! Cartan matrix, together with the classical counting formulas (Weyl
//! dimension, Freudenthal multiplicities) used as independent oracles by the
//! rest of the crate.
//!
//! Conventions: `Λ` is the full coweight lattice, so fundamental coweights are
//! lattice points. A lattice vector carries its own basis tag; conversion
//! between the simple-coroot and fundamental-coweight bases goes through the
//! Cartan matrix and its inverse.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlcoveError, Result};
use crate::linalg;

/// Exact rational scalar used throughout the geometric kernels.
pub type Rat = Rational64;

fn rat(n: i64) -> Rat {
    Rat::from_integer(n)
}

/// A point of `Λ ⊗ ℝ` with exact rational coordinates in the simple-coroot
/// basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<Rat>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        RationalPoint { coords }
    }

    pub fn zero(rank: usize) -> Self {
        RationalPoint {
            coords: vec![Rat::zero(); rank],
        }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| *a - *b)
                .collect(),
        }
    }

    pub fn scale(&self, f: Rat) -> RationalPoint {
        RationalPoint {
            coords: self.coords.iter().map(|a| *a * f).collect(),
        }
    }

    pub fn add_int(&self, other: &[i64]) -> RationalPoint {
        RationalPoint {
            coords: self
                .coords
                .iter()
                .zip(other)
                .map(|(a, &b)| *a + rat(b))
                .collect(),
        }
    }

    /// Mean of a nonempty point collection.
    pub fn barycenter(points: &[RationalPoint]) -> RationalPoint {
        let n = points.len();
        assert!(n > 0, "barycenter of empty set");
        let mut acc = RationalPoint::zero(points[0].rank());
        for p in points {
            acc = acc.add(p);
        }
        acc.scale(Rat::new(1, n as i64))
    }
}

/// Which basis the integer coordinates of a [`LatticeVector`] refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Simple coroots `α_i^∨`.
    Coroot,
    /// Fundamental coweights `ω_i^∨`.
    Coweight,
}

/// Integer vector in the coweight lattice (or coroot sublattice), tagged with
/// the basis its coordinates are written in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeVector {
    coords: Vec<i64>,
    basis: Basis,
}

impl LatticeVector {
    pub fn coroot(coords: Vec<i64>) -> Self {
        LatticeVector {
            coords,
            basis: Basis::Coroot,
        }
    }

    pub fn coweight(coords: Vec<i64>) -> Self {
        LatticeVector {
            coords,
            basis: Basis::Coweight,
        }
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector::coweight(vec![0; rank])
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinates in the fundamental-coweight basis. Conversion from the
    /// coroot basis is multiplication by the Cartan matrix, hence integral.
    pub fn to_coweight(&self, rs: &RootSystem) -> Result<LatticeVector> {
        rs.check_rank(self.coords.len())?;
        match self.basis {
            Basis::Coweight => Ok(self.clone()),
            Basis::Coroot => {
                let coords = rs
                    .cartan
                    .iter()
                    .map(|row| linalg::dot_int(row, &self.coords))
                    .collect();
                Ok(LatticeVector::coweight(coords))
            }
        }
    }

    /// Coordinates in the simple-coroot basis, when the vector lies in the
    /// coroot lattice; errors otherwise.
    pub fn to_coroot(&self, rs: &RootSystem) -> Result<LatticeVector> {
        rs.check_rank(self.coords.len())?;
        match self.basis {
            Basis::Coroot => Ok(self.clone()),
            Basis::Coweight => {
                let coords = rs.coroot_coordinates(&self.coords).ok_or_else(|| {
                    AlcoveError::NotLattice(format!(
                        "{:?} is not in the coroot lattice",
                        self.coords
                    ))
                })?;
                Ok(LatticeVector::coroot(coords))
            }
        }
    }

    /// The vector as a rational point in coroot coordinates.
    pub fn to_point(&self, rs: &RootSystem) -> Result<RationalPoint> {
        rs.check_rank(self.coords.len())?;
        let coords = match self.basis {
            Basis::Coroot => self.coords.iter().map(|&c| rat(c)).collect(),
            Basis::Coweight => {
                let v: Vec<Rat> = self.coords.iter().map(|&c| rat(c)).collect();
                linalg::mat_vec_rat(&rs.cartan_inv, &v)
            }
        };
        Ok(RationalPoint::new(coords))
    }

    pub fn is_dominant(&self, rs: &RootSystem) -> Result<bool> {
        Ok(self.to_coweight(rs)?.coords.iter().all(|&c| c >= 0))
    }

    pub fn checked_add(&self, other: &LatticeVector) -> Result<LatticeVector> {
        if self.basis != other.basis || self.coords.len() != other.coords.len() {
            return Err(AlcoveError::InvalidInput(
                "lattice vector basis/rank mismatch".into(),
            ));
        }
        Ok(LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
            basis: self.basis,
        })
    }

    pub fn checked_sub(&self, other: &LatticeVector) -> Result<LatticeVector> {
        if self.basis != other.basis || self.coords.len() != other.coords.len() {
            return Err(AlcoveError::InvalidInput(
                "lattice vector basis/rank mismatch".into(),
            ));
        }
        Ok(LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
            basis: self.basis,
        })
    }
}

/// A simply laced root system constructed from its Cartan matrix.
///
/// Positive roots are stored as nonnegative integer vectors of simple-root
/// coefficients, ordered by height then lexicographically, so the first
/// `rank` entries are the simple roots themselves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    cartan: Vec<Vec<i64>>,
    cartan_inv: Vec<Vec<Rat>>,
    positive_roots: Vec<Vec<i64>>,
    /// Per positive root `α`: the vector `(⟨α, α_i^∨⟩)_i = A·m(α)`, pairing
    /// against coroot coordinates.
    pairing_rows: Vec<Vec<i64>>,
    highest_root: usize,
}

impl RootSystem {
    /// Build a root system from a symmetric simply laced Cartan matrix of
    /// finite, irreducible type.
    pub fn from_cartan(cartan: Vec<Vec<i64>>) -> Result<RootSystem> {
        let rank = cartan.len();
        if rank == 0 {
            return Err(AlcoveError::InvalidCartan("rank must be positive".into()));
        }
        for (i, row) in cartan.iter().enumerate() {
            if row.len() != rank {
                return Err(AlcoveError::InvalidCartan("matrix must be square".into()));
            }
            if row[i] != 2 {
                return Err(AlcoveError::InvalidCartan("diagonal must be 2".into()));
            }
            for (j, &a) in row.iter().enumerate() {
                if i != j {
                    if a != 0 && a != -1 {
                        return Err(AlcoveError::InvalidCartan(
                            "off-diagonal entries must be 0 or -1".into(),
                        ));
                    }
                    if cartan[j][i] != a {
                        return Err(AlcoveError::InvalidCartan("matrix must be symmetric".into()));
                    }
                }
            }
        }
        if !is_connected(&cartan) {
            return Err(AlcoveError::InvalidCartan(
                "diagram must be connected (irreducible type)".into(),
            ));
        }
        if !is_positive_definite(&cartan) {
            return Err(AlcoveError::InvalidCartan(
                "matrix must be positive definite (finite type)".into(),
            ));
        }

        let positive_roots = generate_positive_roots(&cartan);
        let pairing_rows: Vec<Vec<i64>> = positive_roots
            .iter()
            .map(|m| {
                (0..rank)
                    .map(|i| (0..rank).map(|j| cartan[j][i] * m[j]).sum())
                    .collect()
            })
            .collect();
        let max_height = positive_roots
            .iter()
            .map(|m| m.iter().sum::<i64>())
            .max()
            .unwrap();
        let highest: Vec<usize> = (0..positive_roots.len())
            .filter(|&k| positive_roots[k].iter().sum::<i64>() == max_height)
            .collect();
        debug_assert_eq!(highest.len(), 1, "irreducible type has a unique highest root");
        let cartan_inv = linalg::invert(&cartan);
        Ok(RootSystem {
            rank,
            cartan,
            cartan_inv,
            positive_roots,
            pairing_rows,
            highest_root: highest[0],
        })
    }

    /// The type `A_r` root system.
    pub fn type_a(rank: usize) -> Result<RootSystem> {
        if rank == 0 {
            return Err(AlcoveError::InvalidCartan("rank must be positive".into()));
        }
        let cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            2
                        } else if i.abs_diff(j) == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        RootSystem::from_cartan(cartan)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_inv(&self) -> &[Vec<Rat>] {
        &self.cartan_inv
    }

    /// Positive roots as simple-root coefficient vectors; simples come first.
    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn highest_root(&self) -> usize {
        self.highest_root
    }

    pub fn root_coeffs(&self, root: usize) -> Result<&[i64]> {
        self.positive_roots
            .get(root)
            .map(|v| v.as_slice())
            .ok_or(AlcoveError::RootIndexOutOfRange {
                index: root,
                count: self.positive_roots.len(),
            })
    }

    /// Coroot coordinates of `α^∨`; in simply laced types these equal the
    /// simple-root coefficients of `α`.
    pub fn coroot_vector(&self, root: usize) -> Result<&[i64]> {
        self.root_coeffs(root)
    }

    pub fn root_height(&self, root: usize) -> Result<i64> {
        Ok(self.root_coeffs(root)?.iter().sum())
    }

    pub(crate) fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank {
            return Err(AlcoveError::RankMismatch {
                expected: self.rank,
                got: len,
            });
        }
        Ok(())
    }

    /// `⟨α, x⟩` for a positive root and a rational point in coroot
    /// coordinates.
    pub fn pairing_point(&self, root: usize, x: &RationalPoint) -> Result<Rat> {
        self.check_rank(x.rank())?;
        let row = self
            .pairing_rows
            .get(root)
            .ok_or(AlcoveError::RootIndexOutOfRange {
                index: root,
                count: self.positive_roots.len(),
            })?;
        Ok(linalg::dot_int_rat(row, x.coords()))
    }

    /// `⟨α, v⟩` for a lattice vector.
    pub fn pairing_lattice(&self, root: usize, v: &LatticeVector) -> Result<i64> {
        let vw = v.to_coweight(self)?;
        let m = self.root_coeffs(root)?;
        Ok(linalg::dot_int(m, vw.coords()))
    }

    /// Coroot coordinates of a coweight-coordinate vector, if integral.
    fn coroot_coordinates(&self, coweight_coords: &[i64]) -> Option<Vec<i64>> {
        let v: Vec<Rat> = coweight_coords.iter().map(|&c| rat(c)).collect();
        let sol = linalg::mat_vec_rat(&self.cartan_inv, &v);
        sol.iter()
            .map(|r| r.is_integer().then(|| r.to_integer()))
            .collect()
    }

    /// `ρ^∨`: all fundamental-coweight coordinates equal to 1.
    pub fn rho_check(&self) -> LatticeVector {
        LatticeVector::coweight(vec![1; self.rank])
    }

    /// Barycenter of the fundamental alcove (mean of `0, ω_1^∨, …, ω_r^∨`
    /// in type `A`, where the highest root has all coefficients 1).
    pub fn fundamental_alcove_barycenter(&self) -> RationalPoint {
        // Vertices of the fundamental alcove are 0 and ω_i^∨ / c_i with
        // θ = Σ c_i α_i.
        let theta = &self.positive_roots[self.highest_root];
        let mut acc = vec![Rat::zero(); self.rank];
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc[j] += self.cartan_inv[j][i] / rat(theta[i]);
            }
        }
        RationalPoint::new(acc.iter().map(|c| *c / rat(self.rank as i64 + 1)).collect())
    }

    /// Permutation action of the simple reflection `s_i` on
    /// fundamental-coweight coordinates.
    pub fn simple_reflection_coweight(&self, i: usize, coords: &[i64]) -> Result<Vec<i64>> {
        self.check_rank(coords.len())?;
        if i >= self.rank {
            return Err(AlcoveError::RootIndexOutOfRange {
                index: i,
                count: self.rank,
            });
        }
        let c = coords[i];
        Ok((0..self.rank).map(|j| coords[j] - c * self.cartan[i][j]).collect())
    }
}

fn is_connected(cartan: &[Vec<i64>]) -> bool {
    let n = cartan.len();
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if !seen[j] && cartan[i][j] != 0 {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn is_positive_definite(cartan: &[Vec<i64>]) -> bool {
    // Leading principal minors, exactly.
    let n = cartan.len();
    for k in 1..=n {
        let sub: Vec<Vec<Rat>> = (0..k)
            .map(|i| (0..k).map(|j| rat(cartan[i][j])).collect())
            .collect();
        if determinant(sub) <= Rat::zero() {
            return false;
        }
    }
    true
}

fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::from_integer(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        det *= m[col][col];
        let inv = Rat::from_integer(1) / m[col][col];
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = m[r][col] * inv;
                for c in col..n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    det
}

/// Positive-root closure from the simple roots, walking up by height using
/// root strings (`β + α_i` is a root iff the string length below exceeds
/// `⟨β, α_i^∨⟩`).
fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let rank = cartan.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        index.insert(e.clone(), roots.len());
        roots.push(e);
    }
    let mut current = 0;
    while current < roots.len() {
        let beta = roots[current].clone();
        for i in 0..rank {
            // ⟨β, α_i^∨⟩ = Σ_j m_j A_{j,i}
            let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[j][i]).sum();
            let mut p = 0i64;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if down[i] < 0 || !index.contains_key(&down) {
                    break;
                }
                p += 1;
            }
            if p - pairing > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if !index.contains_key(&up) {
                    index.insert(up.clone(), roots.len());
                    roots.push(up);
                }
            }
        }
        current += 1;
    }
    roots.sort_by_key(|m| {
        let first = m.iter().position(|&c| c != 0).unwrap_or(rank);
        (m.iter().sum::<i64>(), first, m.clone())
    });
    roots
}

/// `⟨α, x⟩` — the canonical root/coweight pairing.
pub fn pairing(rs: &RootSystem, root: usize, x: &RationalPoint) -> Result<Rat> {
    rs.pairing_point(root, x)
}

/// Coroot coordinates of a point given by rational fundamental-coweight
/// coordinates.
pub(crate) fn coweight_rat_to_point(rs: &RootSystem, fund: &[Rat]) -> Vec<Rat> {
    linalg::mat_vec_rat(&rs.cartan_inv, fund)
}

/// Sum of simple-coroot coefficients of a coroot-lattice vector with
/// nonnegative coordinates.
pub fn height(rs: &RootSystem, v: &LatticeVector) -> Result<i64> {
    let c = v.to_coroot(rs)?;
    if let Some(&neg) = c.coords().iter().find(|&&x| x < 0) {
        return Err(AlcoveError::NegativeHeight(format!(
            "coefficient {neg} in {:?}",
            c.coords()
        )));
    }
    Ok(c.coords().iter().sum())
}

/// `⟨2ρ, μ⟩ = Σ_{α ∈ Φ₊} ⟨α, μ⟩` for dominant `μ`.
pub fn schubert_cell_dim(rs: &RootSystem, mu: &LatticeVector) -> Result<i64> {
    if !mu.is_dominant(rs)? {
        return Err(AlcoveError::NonDominant(format!("{:?}", mu.coords())));
    }
    let mw = mu.to_coweight(rs)?;
    Ok((0..rs.num_positive_roots())
        .map(|k| linalg::dot_int(&rs.positive_roots[k], mw.coords()))
        .sum())
}

/// True iff `rhs - lhs` is a nonnegative integer combination of simple
/// coroots.
pub fn dominance_leq(rs: &RootSystem, lhs: &LatticeVector, rhs: &LatticeVector) -> Result<bool> {
    let l = lhs.to_coweight(rs)?;
    let r = rhs.to_coweight(rs)?;
    let diff: Vec<i64> = r
        .coords()
        .iter()
        .zip(l.coords())
        .map(|(a, b)| a - b)
        .collect();
    Ok(match rs.coroot_coordinates(&diff) {
        Some(c) => c.iter().all(|&x| x >= 0),
        None => false,
    })
}

/// Weyl dimension formula: `Π_{α∈Φ₊} ⟨α, λ+ρ^∨⟩ / ⟨α, ρ^∨⟩`, exactly.
pub fn weyl_dim(rs: &RootSystem, lambda: &LatticeVector) -> Result<u64> {
    if !lambda.is_dominant(rs)? {
        return Err(AlcoveError::NonDominant(format!("{:?}", lambda.coords())));
    }
    let lw = lambda.to_coweight(rs)?;
    let shifted: Vec<i64> = lw.coords().iter().map(|&c| c + 1).collect();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for m in rs.positive_roots() {
        num *= linalg::dot_int(m, &shifted) as u128;
        den *= m.iter().sum::<i64>() as u128;
        let g = gcd_u128(num, den);
        num /= g;
        den /= g;
    }
    debug_assert_eq!(den, 1);
    Ok((num / den) as u64)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1)
}

/// The full weight-multiplicity table of the irreducible highest-weight
/// module `V_λ`, keyed by fundamental-coweight coordinates, computed by the
/// Freudenthal recursion in exact arithmetic.
pub fn weight_multiplicities(
    rs: &RootSystem,
    lambda: &LatticeVector,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    if !lambda.is_dominant(rs)? {
        return Err(AlcoveError::NonDominant(format!("{:?}", lambda.coords())));
    }
    let lam = lambda.to_coweight(rs)?.coords().to_vec();

    // Candidate weights: everything below λ whose dominant conjugate is
    // dominance-bounded by λ. BFS by subtracting simple roots.
    let mut weights: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue = VecDeque::from([lam.clone()]);
    seen.insert(lam.clone(), 0);
    while let Some(nu) = queue.pop_front() {
        weights.push(nu.clone());
        let depth = seen[&nu];
        for i in 0..rs.rank() {
            let next: Vec<i64> = (0..rs.rank()).map(|j| nu[j] - rs.cartan[i][j]).collect();
            if seen.contains_key(&next) {
                continue;
            }
            if is_weight_candidate(rs, &lam, &next) {
                seen.insert(next.clone(), depth + 1);
                queue.push_back(next);
            }
        }
    }
    // Process in increasing height of λ - ν.
    weights.sort_by_key(|nu| {
        let h = height_of_difference(rs, &lam, nu).expect("candidates differ by roots");
        (h, nu.clone())
    });

    let ip = |a: &[i64], b: &[i64]| -> Rat {
        let mut acc = Rat::zero();
        for i in 0..rs.rank() {
            for j in 0..rs.rank() {
                acc += rat(a[i]) * rs.cartan_inv[i][j] * rat(b[j]);
            }
        }
        acc
    };
    let plus_rho = |a: &[i64]| -> Vec<i64> { a.iter().map(|&c| c + 1).collect() };
    let lam_rho = plus_rho(&lam);
    let norm_lam = ip(&lam_rho, &lam_rho);

    let mut mult: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for nu in &weights {
        if *nu == lam {
            mult.insert(nu.clone(), 1);
            continue;
        }
        let mut acc = Rat::zero();
        for (k, m) in rs.positive_roots().iter().enumerate() {
            let alpha = &rs.pairing_rows_fund(k);
            let ht_alpha = m.iter().sum::<i64>();
            let remaining = height_of_difference(rs, &lam, nu).unwrap();
            let kmax = remaining / ht_alpha;
            for step in 1..=kmax {
                let shifted: Vec<i64> = (0..rs.rank())
                    .map(|j| nu[j] + step * alpha[j])
                    .collect();
                if let Some(&m_up) = mult.get(&shifted) {
                    if m_up > 0 {
                        acc += rat(m_up as i64) * ip(&shifted, alpha);
                    }
                }
            }
        }
        let nu_rho = plus_rho(nu);
        let denom = norm_lam - ip(&nu_rho, &nu_rho);
        debug_assert!(denom.is_positive(), "Freudenthal denominator must be positive");
        let value = rat(2) * acc / denom;
        debug_assert!(value.is_integer() && !value.is_negative());
        let v = value.to_integer() as u64;
        if v > 0 {
            mult.insert(nu.clone(), v);
        }
    }
    Ok(mult)
}

impl RootSystem {
    /// Fundamental-coweight coordinates of the positive root `α_k`, i.e. the
    /// same integer vector as the pairing row against coroot coordinates.
    fn pairing_rows_fund(&self, k: usize) -> Vec<i64> {
        self.pairing_rows[k].clone()
    }
}

fn is_weight_candidate(rs: &RootSystem, lam: &[i64], nu: &[i64]) -> bool {
    // Dominant conjugate of nu, then check λ - dom(ν) ∈ ℕ-span of simple
    // coroots.
    let mut d = nu.to_vec();
    loop {
        match d.iter().position(|&c| c < 0) {
            None => break,
            Some(i) => {
                d = rs
                    .simple_reflection_coweight(i, &d)
                    .expect("index in range");
            }
        }
    }
    let diff: Vec<i64> = lam.iter().zip(&d).map(|(a, b)| a - b).collect();
    match rs.coroot_coordinates(&diff) {
        Some(c) => c.iter().all(|&x| x >= 0),
        None => false,
    }
}

fn height_of_difference(rs: &RootSystem, lam: &[i64], nu: &[i64]) -> Option<i64> {
    let diff: Vec<i64> = lam.iter().zip(nu).map(|(a, b)| a - b).collect();
    rs.coroot_coordinates(&diff).map(|c| c.iter().sum())
}

/// Multiplicity of the weight `ν` in `V_λ`; 0 when `ν` is not a weight.
pub fn freudenthal_multiplicity(
    rs: &RootSystem,
    lambda: &LatticeVector,
    nu: &LatticeVector,
) -> Result<u64> {
    let table = weight_multiplicities(rs, lambda)?;
    let key = nu.to_coweight(rs)?.coords().to_vec();
    Ok(table.get(&key).copied().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::type_a(2).unwrap()
    }

    fn theta_check(rs: &RootSystem) -> LatticeVector {
        LatticeVector::coroot(rs.positive_roots()[rs.highest_root()].clone())
    }

    #[test]
    fn positive_roots_type_a() {
        for r in 1..=4 {
            let rs = RootSystem::type_a(r).unwrap();
            assert_eq!(rs.num_positive_roots(), r * (r + 1) / 2);
            // simples first
            for i in 0..r {
                let mut e = vec![0i64; r];
                e[i] = 1;
                assert_eq!(rs.positive_roots()[i], e);
            }
        }
        let rs = a2();
        assert_eq!(rs.positive_roots()[rs.highest_root()], vec![1, 1]);
    }

    #[test]
    fn from_cartan_rejects_bad_input() {
        assert!(RootSystem::from_cartan(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(RootSystem::from_cartan(vec![vec![2, 0], vec![0, 2]]).is_err());
        // affine A_1 tilde (not positive definite)
        assert!(RootSystem::from_cartan(vec![vec![2, -2], vec![-2, 2]]).is_err());
    }

    #[test]
    fn pairing_examples() {
        let rs = a2();
        let a1v = LatticeVector::coroot(vec![1, 0]).to_point(&rs).unwrap();
        let a2v = LatticeVector::coroot(vec![0, 1]).to_point(&rs).unwrap();
        let thv = theta_check(&rs).to_point(&rs).unwrap();
        assert_eq!(pairing(&rs, 0, &a1v).unwrap(), rat(2));
        assert_eq!(pairing(&rs, 0, &a2v).unwrap(), rat(-1));
        assert_eq!(pairing(&rs, rs.highest_root(), &thv).unwrap(), rat(2));
        assert!(pairing(&rs, 17, &a1v).is_err());
    }

    #[test]
    fn height_examples() {
        let rs = a2();
        assert_eq!(height(&rs, &theta_check(&rs)).unwrap(), 2);
        assert_eq!(height(&rs, &LatticeVector::coroot(vec![0, 0])).unwrap(), 0);
        assert_eq!(height(&rs, &LatticeVector::coroot(vec![3, 1])).unwrap(), 4);
        assert!(height(&rs, &LatticeVector::coroot(vec![-1, 2])).is_err());
    }

    #[test]
    fn schubert_dim_examples() {
        let rs = a2();
        assert_eq!(schubert_cell_dim(&rs, &theta_check(&rs)).unwrap(), 4);
        assert_eq!(schubert_cell_dim(&rs, &LatticeVector::zero(2)).unwrap(), 0);
        let a1 = RootSystem::type_a(1).unwrap();
        assert_eq!(
            schubert_cell_dim(&a1, &LatticeVector::coroot(vec![1])).unwrap(),
            2
        );
        assert!(schubert_cell_dim(&rs, &LatticeVector::coweight(vec![-1, 0])).is_err());
    }

    #[test]
    fn schubert_dim_additive() {
        let rs = a2();
        for a in 0..4i64 {
            for b in 0..4i64 {
                for c in 0..3i64 {
                    for d in 0..3i64 {
                        let x = LatticeVector::coweight(vec![a, b]);
                        let y = LatticeVector::coweight(vec![c, d]);
                        let sum = x.checked_add(&y).unwrap();
                        assert_eq!(
                            schubert_cell_dim(&rs, &sum).unwrap(),
                            schubert_cell_dim(&rs, &x).unwrap()
                                + schubert_cell_dim(&rs, &y).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let rs = a2();
        let zero = LatticeVector::zero(2);
        let th = theta_check(&rs);
        assert!(dominance_leq(&rs, &zero, &th).unwrap());
        assert!(dominance_leq(&rs, &th, &th).unwrap());
        let a1v = LatticeVector::coroot(vec![1, 0]);
        let a2v = LatticeVector::coroot(vec![0, 1]);
        assert!(!dominance_leq(&rs, &a1v, &a2v).unwrap());
    }

    #[test]
    fn dominance_is_partial_order() {
        // rank 2, coordinates in [-3, 3]: reflexivity, antisymmetry,
        // transitivity, exhaustively.
        let rs = a2();
        let mut vecs = Vec::new();
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                vecs.push(LatticeVector::coweight(vec![a, b]));
            }
        }
        let n = vecs.len();
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                leq[i][j] = dominance_leq(&rs, &vecs[i], &vecs[j]).unwrap();
            }
            assert!(leq[i][i], "reflexivity");
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] {
                    assert!(!leq[j][i], "antisymmetry");
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if !leq[i][j] {
                    continue;
                }
                for k in 0..n {
                    if leq[j][k] {
                        assert!(leq[i][k], "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn dominance_partial_order_rank3_sampled() {
        let rs = RootSystem::type_a(3).unwrap();
        let mut vecs = Vec::new();
        for a in -3..=3i64 {
            for b in -3..=3i64 {
                for c in -3..=3i64 {
                    vecs.push(LatticeVector::coweight(vec![a, b, c]));
                }
            }
        }
        // Reflexivity + antisymmetry on the full box; transitivity via the
        // composable pairs only.
        let mut pairs = Vec::new();
        for i in 0..vecs.len() {
            assert!(dominance_leq(&rs, &vecs[i], &vecs[i]).unwrap());
            for j in 0..vecs.len() {
                if dominance_leq(&rs, &vecs[i], &vecs[j]).unwrap() {
                    if i != j {
                        assert!(!dominance_leq(&rs, &vecs[j], &vecs[i]).unwrap());
                    }
                    pairs.push((i, j));
                }
            }
        }
        use std::collections::HashMap;
        let mut by_src: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(i, j) in &pairs {
            by_src.entry(i).or_default().push(j);
        }
        for &(i, j) in &pairs {
            if let Some(ks) = by_src.get(&j) {
                for &k in ks {
                    assert!(dominance_leq(&rs, &vecs[i], &vecs[k]).unwrap());
                }
            }
        }
    }

    #[test]
    fn weyl_dim_examples() {
        let rs = a2();
        assert_eq!(weyl_dim(&rs, &theta_check(&rs)).unwrap(), 8);
        assert_eq!(weyl_dim(&rs, &LatticeVector::zero(2)).unwrap(), 1);
        assert_eq!(weyl_dim(&rs, &LatticeVector::coweight(vec![1, 0])).unwrap(), 3);
        assert!(weyl_dim(&rs, &LatticeVector::coweight(vec![-1, 0])).is_err());
    }

    #[test]
    fn freudenthal_examples() {
        let rs = a2();
        let th = theta_check(&rs);
        let zero = LatticeVector::zero(2);
        assert_eq!(freudenthal_multiplicity(&rs, &th, &zero).unwrap(), 2);
        assert_eq!(freudenthal_multiplicity(&rs, &th, &th).unwrap(), 1);
        for coords in [vec![0i64, 0], vec![1, 0], vec![2, 1], vec![1, 3]] {
            let lam = LatticeVector::coweight(coords);
            assert_eq!(freudenthal_multiplicity(&rs, &lam, &lam).unwrap(), 1);
        }
    }

    #[test]
    fn freudenthal_sums_to_weyl_dim() {
        for r in 1..=3usize {
            let rs = RootSystem::type_a(r).unwrap();
            let lams: Vec<Vec<i64>> = match r {
                1 => vec![vec![0], vec![1], vec![2], vec![5]],
                2 => vec![vec![1, 1], vec![2, 0], vec![2, 2], vec![3, 1]],
                _ => vec![vec![1, 0, 1], vec![0, 2, 0], vec![1, 1, 1]],
            };
            for coords in lams {
                let lam = LatticeVector::coweight(coords);
                let table = weight_multiplicities(&rs, &lam).unwrap();
                let total: u64 = table.values().sum();
                assert_eq!(total, weyl_dim(&rs, &lam).unwrap());
            }
        }
    }

    #[test]
    fn freudenthal_weyl_invariant() {
        let rs = a2();
        let lam = LatticeVector::coweight(vec![2, 1]);
        let table = weight_multiplicities(&rs, &lam).unwrap();
        for (nu, &m) in &table {
            for i in 0..rs.rank() {
                let refl = rs.simple_reflection_coweight(i, nu).unwrap();
                let got = table.get(&refl).copied().unwrap_or(0);
                assert_eq!(got, m, "multiplicity not Weyl invariant at {nu:?}");
            }
        }
    }

    #[test]
    fn coroot_coweight_roundtrip() {
        let rs = a2();
        let v = LatticeVector::coroot(vec![2, -1]);
        let w = v.to_coweight(&rs).unwrap();
        assert_eq!(w.coords(), &[5, -4]);
        assert_eq!(w.to_coroot(&rs).unwrap(), v);
        // ω_1^∨ is a coweight but not a coroot-lattice element
        let omega1 = LatticeVector::coweight(vec![1, 0]);
        assert!(omega1.to_coroot(&rs).is_err());
        assert_eq!(
            omega1.to_point(&rs).unwrap().coords(),
            &[Rat::new(2, 3), Rat::new(1, 3)]
        );
    }
}
