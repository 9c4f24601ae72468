//! Double quivers of type A, modules over the preprojective relation, Maya
//! modules, submodule dimension-vector enumeration (two independent
//! backends), and the polytope of a module.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlcoveError, Result};
use crate::polytope::{convex_hull, dim_vector_point, LatticePolytope};
use crate::root_data::Rat;

type Mat = Vec<Vec<Rat>>;

fn zero_mat(rows: usize, cols: usize) -> Mat {
    vec![vec![Rat::zero(); cols]; rows]
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    let mut out = zero_mat(rows, cols);
    for r in 0..rows {
        for k in 0..inner {
            if a[r][k].is_zero() {
                continue;
            }
            for c in 0..cols {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    out
}

fn mat_is_zero(a: &Mat) -> bool {
    a.iter().all(|row| row.iter().all(|x| x.is_zero()))
}

fn mat_add_assign(a: &mut Mat, b: &Mat, sign: i64) {
    let s = Rat::from_integer(sign);
    for (ra, rb) in a.iter_mut().zip(b) {
        for (xa, xb) in ra.iter_mut().zip(rb) {
            *xa += s * *xb;
        }
    }
}

/// One arrow of a (possibly doubled) quiver. Vertices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
    /// For a starred arrow, the index of its base arrow.
    pub star_of: Option<usize>,
}

/// A finite quiver; doubling appends the reversed arrow `α*` for every base
/// arrow `α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
    doubled: bool,
}

impl Quiver {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn is_doubled(&self) -> bool {
        self.doubled
    }

    /// Indices of the base arrows (those with a star partner after doubling).
    pub fn base_arrows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].star_of.is_none())
    }

    fn star_index(&self, base: usize) -> Option<usize> {
        self.arrows.iter().position(|a| a.star_of == Some(base))
    }

    /// Append the reversed arrows.
    pub fn double(&self) -> Quiver {
        if self.doubled {
            return self.clone();
        }
        let mut arrows = self.arrows.clone();
        for (k, a) in self.arrows.iter().enumerate() {
            arrows.push(Arrow {
                source: a.target,
                target: a.source,
                label: format!("{}*", a.label),
                star_of: Some(k),
            });
        }
        Quiver {
            vertex_count: self.vertex_count,
            arrows,
            doubled: true,
        }
    }
}

/// The linearly oriented type `A_n` quiver with arrows `α_i : i → i−1`
/// (1-based vertices) for `1 < i ≤ n`.
pub fn linear_quiver(n: usize) -> Result<Quiver> {
    if n < 1 {
        return Err(AlcoveError::InvalidInput(
            "quiver needs at least one vertex".into(),
        ));
    }
    let arrows = (2..=n)
        .map(|i| Arrow {
            source: i - 1,
            target: i - 2,
            label: format!("a{i}"),
            star_of: None,
        })
        .collect();
    Ok(Quiver {
        vertex_count: n,
        arrows,
        doubled: false,
    })
}

/// A finite-dimensional module over the doubled quiver, with exact rational
/// matrices, one per arrow, of shape `dims[target] × dims[source]`.
#[derive(Debug, Clone)]
pub struct QuiverModule {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Mat>,
    /// Basis-vector names per vertex, kept when the module was built from a
    /// combinatorial basis.
    basis_labels: Option<Vec<Vec<String>>>,
}

impl PartialEq for QuiverModule {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for QuiverModule {}

impl QuiverModule {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<Mat>) -> Result<QuiverModule> {
        if dims.len() != quiver.vertex_count {
            return Err(AlcoveError::RankMismatch {
                expected: quiver.vertex_count,
                got: dims.len(),
            });
        }
        if maps.len() != quiver.arrows.len() {
            return Err(AlcoveError::QuiverMismatch(format!(
                "expected {} matrices, got {}",
                quiver.arrows.len(),
                maps.len()
            )));
        }
        for (a, m) in quiver.arrows.iter().zip(&maps) {
            let rows = dims[a.target];
            let cols = dims[a.source];
            if m.len() != rows || m.iter().any(|r| r.len() != cols) {
                return Err(AlcoveError::QuiverMismatch(format!(
                    "matrix for {} must be {}×{}",
                    a.label, rows, cols
                )));
            }
        }
        Ok(QuiverModule {
            quiver,
            dims,
            maps,
            basis_labels: None,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn basis_labels(&self) -> Option<&Vec<Vec<String>>> {
        self.basis_labels.as_ref()
    }

    /// True when every arrow maps each basis vector to a basis vector or 0.
    pub fn is_combinatorial(&self) -> bool {
        self.maps.iter().all(|m| {
            let cols = m.first().map_or(0, |r| r.len());
            (0..cols).all(|c| {
                let mut nonzero = 0;
                for row in m {
                    if !row[c].is_zero() {
                        if row[c] != Rat::one() {
                            return false;
                        }
                        nonzero += 1;
                    }
                }
                nonzero <= 1
            })
        })
    }
}

/// Build a module of the doubled linear quiver from combinatorial basis
/// vectors `v_{j,k}` (1-based `j` = vertex), with the standard actions
/// `α_j : v_{j,k} ↦ v_{j−1,k}` and `α_{j+1}^* : v_{j,k} ↦ v_{j+1,k+1}`.
pub fn module_from_basis(n: usize, basis: &[(usize, usize)]) -> Result<QuiverModule> {
    let quiver = linear_quiver(n)?.double();
    for &(j, k) in basis {
        if j < 1 || j > n {
            return Err(AlcoveError::InvalidInput(format!(
                "basis vector v_({j},{k}) has vertex out of range"
            )));
        }
    }
    let mut per_vertex: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(j, k) in basis {
        per_vertex[j - 1].push((j, k));
    }
    for list in per_vertex.iter_mut() {
        list.sort();
    }
    let dims: Vec<usize> = per_vertex.iter().map(|l| l.len()).collect();
    let position = |j: usize, k: usize| -> Option<usize> {
        per_vertex[j - 1].iter().position(|&(a, b)| (a, b) == (j, k))
    };

    let mut maps = Vec::new();
    for arrow in quiver.arrows() {
        let rows = dims[arrow.target];
        let cols = dims[arrow.source];
        let mut m = zero_mat(rows, cols);
        for (col, &(j, k)) in per_vertex[arrow.source].iter().enumerate() {
            let image = if arrow.star_of.is_none() {
                // α_{j} : v_{j,k} ↦ v_{j−1,k}
                (j - 1, k)
            } else {
                // α_{j+1}^* : v_{j,k} ↦ v_{j+1,k+1}
                (j + 1, k + 1)
            };
            if image.0 == arrow.target + 1 {
                if let Some(row) = position(image.0, image.1) {
                    m[row][col] = Rat::one();
                }
            }
        }
        maps.push(m);
    }
    let labels = per_vertex
        .iter()
        .map(|l| l.iter().map(|&(j, k)| format!("v{j},{k}")).collect())
        .collect();
    let mut module = QuiverModule::new(quiver, dims, maps)?;
    module.basis_labels = Some(labels);
    Ok(module)
}

/// The Maya module `N(A)` for a strictly increasing `A = {a_1 < … < a_m}`,
/// a proper subset of `{1..n}` other than `{1..m}`: basis
/// `v_{k,k}, …, v_{a_k−1,k}` for each `k`.
pub fn maya_module(n: usize, a_set: &[usize]) -> Result<QuiverModule> {
    if a_set.is_empty() {
        return Err(AlcoveError::InvalidMaya("the index set is empty".into()));
    }
    if a_set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(AlcoveError::InvalidMaya(
            "entries must be strictly increasing".into(),
        ));
    }
    if *a_set.last().unwrap() > n || a_set[0] < 1 {
        return Err(AlcoveError::InvalidMaya(format!(
            "entries must lie in 1..={n}"
        )));
    }
    if a_set.len() == n {
        return Err(AlcoveError::InvalidMaya(
            "the set must be a proper subset".into(),
        ));
    }
    if a_set.iter().enumerate().all(|(idx, &a)| a == idx + 1) {
        return Err(AlcoveError::InvalidMaya(
            "the initial segment {1..m} is excluded".into(),
        ));
    }
    let mut basis = Vec::new();
    for (idx, &ak) in a_set.iter().enumerate() {
        let k = idx + 1;
        for j in k..ak {
            basis.push((j, k));
        }
    }
    module_from_basis(n, &basis)
}

/// The preprojective relation `Σ_α (αα* − α*α)` restricted to every vertex.
pub fn verify_preprojective(module: &QuiverModule) -> Result<bool> {
    let q = module.quiver();
    if !q.is_doubled() {
        return Err(AlcoveError::QuiverMismatch(
            "preprojective relation needs the doubled quiver".into(),
        ));
    }
    for v in 0..q.vertex_count() {
        let mut acc = zero_mat(module.dims[v], module.dims[v]);
        for base in q.base_arrows() {
            let star = q.star_index(base).expect("doubled quiver");
            let a = &q.arrows()[base];
            if a.target == v {
                let term = mat_mul(&module.maps[base], &module.maps[star]);
                mat_add_assign(&mut acc, &term, 1);
            }
            if a.source == v {
                let term = mat_mul(&module.maps[star], &module.maps[base]);
                mat_add_assign(&mut acc, &term, -1);
            }
        }
        if !mat_is_zero(&acc) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Block-diagonal direct sum of two modules over the same quiver.
pub fn direct_sum(m1: &QuiverModule, m2: &QuiverModule) -> Result<QuiverModule> {
    if m1.quiver != m2.quiver {
        return Err(AlcoveError::QuiverMismatch(
            "direct sum needs identical quivers".into(),
        ));
    }
    let dims: Vec<usize> = m1.dims.iter().zip(&m2.dims).map(|(a, b)| a + b).collect();
    let mut maps = Vec::new();
    for (k, arrow) in m1.quiver.arrows().iter().enumerate() {
        let rows = dims[arrow.target];
        let cols = dims[arrow.source];
        let (r1, c1) = (m1.dims[arrow.target], m1.dims[arrow.source]);
        let mut m = zero_mat(rows, cols);
        for r in 0..r1 {
            for c in 0..c1 {
                m[r][c] = m1.maps[k][r][c];
            }
        }
        for r in 0..m2.dims[arrow.target] {
            for c in 0..m2.dims[arrow.source] {
                m[r1 + r][c1 + c] = m2.maps[k][r][c];
            }
        }
        maps.push(m);
    }
    let labels = match (&m1.basis_labels, &m2.basis_labels) {
        (Some(a), Some(b)) => Some(
            a.iter()
                .zip(b)
                .map(|(la, lb)| {
                    la.iter()
                        .map(|s| format!("{s}⊕1"))
                        .chain(lb.iter().map(|s| format!("{s}⊕2")))
                        .collect()
                })
                .collect(),
        ),
        _ => None,
    };
    let mut out = QuiverModule::new(m1.quiver.clone(), dims, maps)?;
    out.basis_labels = labels;
    Ok(out)
}

/// The four indecomposables of the doubled `A_2` quiver used as fixtures:
/// two simples and the two one-parameter extensions between them.
pub fn a2_module_fixtures() -> [QuiverModule; 4] {
    let a = module_from_basis(2, &[(1, 1)]).unwrap();
    let b = module_from_basis(2, &[(2, 1)]).unwrap();
    let c = module_from_basis(2, &[(1, 1), (2, 1)]).unwrap();
    let d = module_from_basis(2, &[(1, 1), (2, 2)]).unwrap();
    [a, b, c, d]
}

/// Enumeration backend for submodule dimension vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubmoduleMethod {
    /// Arrow-closed subsets of the distinguished basis (combinatorial
    /// modules only).
    Coordinate,
    /// All arrow-invariant graded subspaces over `𝔽_p`, by echelon forms.
    Exhaustive { prime: u32 },
}

/// Dimension vectors of submodules, by the requested backend.
pub fn submodule_dim_vectors(
    module: &QuiverModule,
    method: SubmoduleMethod,
) -> Result<BTreeSet<Vec<i64>>> {
    match method {
        SubmoduleMethod::Coordinate => coordinate_dim_vectors(module),
        SubmoduleMethod::Exhaustive { prime } => exhaustive_dim_vectors(module, prime),
    }
}

fn coordinate_dim_vectors(module: &QuiverModule) -> Result<BTreeSet<Vec<i64>>> {
    if !module.is_combinatorial() {
        return Err(AlcoveError::MethodPrecondition(
            "coordinate backend needs a combinatorial module".into(),
        ));
    }
    let total = module.total_dim();
    if total > 20 {
        return Err(AlcoveError::BudgetExceeded {
            budget: 1 << 20,
        });
    }
    // global basis: (vertex, index within vertex), vertex-major
    let mut offset = vec![0usize; module.dims.len()];
    let mut acc = 0;
    for (v, &d) in module.dims.iter().enumerate() {
        offset[v] = acc;
        acc += d;
    }
    // image mask of each basis vector under all arrows
    let mut img = vec![0u64; total];
    for (k, arrow) in module.quiver.arrows().iter().enumerate() {
        let m = &module.maps[k];
        for c in 0..module.dims[arrow.source] {
            for (r, row) in m.iter().enumerate() {
                if !row[c].is_zero() {
                    img[offset[arrow.source] + c] |= 1u64 << (offset[arrow.target] + r);
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for mask in 0u64..(1 << total) {
        let closed = (0..total)
            .filter(|&b| mask & (1 << b) != 0)
            .all(|b| img[b] & !mask == 0);
        if closed {
            let mut dv = vec![0i64; module.dims.len()];
            for (v, &d) in module.dims.iter().enumerate() {
                for idx in 0..d {
                    if mask & (1 << (offset[v] + idx)) != 0 {
                        dv[v] += 1;
                    }
                }
            }
            out.insert(dv);
        }
    }
    Ok(out)
}

// --- exhaustive backend over F_p ---

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is a small prime
    let mut result = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

fn mat_mod_p(m: &Mat, p: u64) -> Result<Vec<Vec<u64>>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| {
                    let den = x.denom().rem_euclid(p as i64) as u64;
                    if den == 0 {
                        return Err(AlcoveError::MethodPrecondition(format!(
                            "matrix entry {x} is not reducible mod {p}"
                        )));
                    }
                    let num = x.numer().rem_euclid(p as i64) as u64;
                    Ok(num * mod_inverse(den, p) % p)
                })
                .collect()
        })
        .collect()
}

/// All subspaces of `𝔽_p^d` as reduced row-echelon bases.
fn subspaces_mod_p(d: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    let mut out = vec![vec![]]; // the zero subspace
    for k in 1..=d {
        // choose pivot columns
        let mut pivots = (0..k).collect::<Vec<usize>>();
        loop {
            // free positions: (row, col) with col > pivot[row], col not a pivot
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    (pivots[r] + 1..d)
                        .filter(|c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let mut assignment = vec![0u64; free.len()];
            loop {
                let mut basis = vec![vec![0u64; d]; k];
                for r in 0..k {
                    basis[r][pivots[r]] = 1;
                }
                for (slot, &(r, c)) in free.iter().enumerate() {
                    basis[r][c] = assignment[slot];
                }
                out.push(basis);
                // advance the assignment
                let mut pos = 0;
                loop {
                    if pos == free.len() {
                        break;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < p {
                        break;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                }
                if pos == free.len() {
                    break;
                }
            }
            // next pivot combination
            let mut i = k;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if pivots[i] != i + d - k {
                    pivots[i] += 1;
                    for j in i + 1..k {
                        pivots[j] = pivots[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    pivots.clear();
                    break;
                }
            }
            if pivots.is_empty() {
                break;
            }
        }
    }
    out
}

fn in_rowspace(basis: &[Vec<u64>], mut v: Vec<u64>, p: u64) -> bool {
    for row in basis {
        let pivot = row.iter().position(|&x| x == 1).expect("echelon row");
        // rows are echelon with leading 1 at their pivot
        let c = v[pivot] % p;
        if c != 0 {
            for (idx, &x) in row.iter().enumerate() {
                v[idx] = (v[idx] + (p - c) * x) % p;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

fn exhaustive_dim_vectors(module: &QuiverModule, prime: u32) -> Result<BTreeSet<Vec<i64>>> {
    let p = prime as u64;
    if !(2..=13).contains(&p) || !(2..p).all(|d| p % d != 0) {
        return Err(AlcoveError::MethodPrecondition(format!(
            "{prime} is not a supported prime"
        )));
    }
    if module.total_dim() > 8 {
        return Err(AlcoveError::MethodPrecondition(
            "exhaustive backend requires total dimension ≤ 8".into(),
        ));
    }
    let maps_p: Vec<Vec<Vec<u64>>> = module
        .maps
        .iter()
        .map(|m| mat_mod_p(m, p))
        .collect::<Result<_>>()?;

    let per_vertex: Vec<Vec<Vec<Vec<u64>>>> = module
        .dims
        .iter()
        .map(|&d| subspaces_mod_p(d, p))
        .collect();
    let mut budget: u64 = 1;
    for subs in &per_vertex {
        budget = budget.saturating_mul(subs.len() as u64);
        if budget > 4_000_000 {
            return Err(AlcoveError::BudgetExceeded { budget: 4_000_000 });
        }
    }

    let nv = module.dims.len();
    let mut choice = vec![0usize; nv];
    let mut out = BTreeSet::new();
    loop {
        let invariant = module.quiver.arrows().iter().enumerate().all(|(k, arrow)| {
            let src = &per_vertex[arrow.source][choice[arrow.source]];
            let tgt = &per_vertex[arrow.target][choice[arrow.target]];
            src.iter().all(|g| {
                let img: Vec<u64> = (0..module.dims[arrow.target])
                    .map(|r| {
                        (0..module.dims[arrow.source])
                            .map(|c| maps_p[k][r][c] * g[c] % p)
                            .sum::<u64>()
                            % p
                    })
                    .collect();
                in_rowspace(tgt, img, p)
            })
        });
        if invariant {
            let dv: Vec<i64> = (0..nv)
                .map(|v| per_vertex[v][choice[v]].len() as i64)
                .collect();
            out.insert(dv);
        }
        // advance
        let mut pos = 0;
        loop {
            if pos == nv {
                return Ok(out);
            }
            choice[pos] += 1;
            if choice[pos] < per_vertex[pos].len() {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// `Pol(V)`: convex hull of the submodule dimension vectors, embedded by
/// `vertex i ↦ α_i^∨`.
pub fn pol_with(module: &QuiverModule, method: SubmoduleMethod) -> Result<LatticePolytope> {
    let dvs = submodule_dim_vectors(module, method)?;
    let points: Vec<_> = dvs.iter().map(|dv| dim_vector_point(dv)).collect();
    convex_hull(&points)
}

/// `Pol(V)` with the natural backend: coordinate for combinatorial modules,
/// exhaustive over `𝔽_2` otherwise.
pub fn pol(module: &QuiverModule) -> Result<LatticePolytope> {
    if module.is_combinatorial() {
        pol_with(module, SubmoduleMethod::Coordinate)
    } else {
        pol_with(module, SubmoduleMethod::Exhaustive { prime: 2 })
    }
}

// ---------------------------------------------------------------------------
// JSON form

/// Wire format of a module over the doubled linear quiver: 1-based vertices,
/// rational matrix entries as strings. Arrows not listed act as zero.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleDto {
    pub dims: Vec<usize>,
    pub arrows: Vec<ModuleArrowDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleArrowDto {
    pub from: usize,
    pub to: usize,
    pub matrix: Vec<Vec<String>>,
}

/// Either an explicit module or the Maya shorthand
/// `{"maya": {"n": 5, "set": [2,4,5]}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ModuleFileDto {
    Maya { maya: MayaDto },
    Explicit(ModuleDto),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MayaDto {
    pub n: usize,
    pub set: Vec<usize>,
}

pub fn module_to_dto(module: &QuiverModule) -> ModuleDto {
    let arrows = module
        .quiver
        .arrows()
        .iter()
        .zip(module.maps())
        .filter(|(_, m)| !mat_is_zero(m))
        .map(|(a, m)| ModuleArrowDto {
            from: a.source + 1,
            to: a.target + 1,
            matrix: m
                .iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect())
                .collect(),
        })
        .collect();
    ModuleDto {
        dims: module.dims.clone(),
        arrows,
    }
}

pub fn module_from_dto(dto: &ModuleFileDto) -> Result<QuiverModule> {
    match dto {
        ModuleFileDto::Maya { maya } => maya_module(maya.n, &maya.set),
        ModuleFileDto::Explicit(m) => explicit_module_from_dto(m),
    }
}

fn explicit_module_from_dto(dto: &ModuleDto) -> Result<QuiverModule> {
    let n = dto.dims.len();
    let quiver = linear_quiver(n)?.double();
    let mut maps: Vec<Mat> = quiver
        .arrows()
        .iter()
        .map(|a| zero_mat(dto.dims[a.target], dto.dims[a.source]))
        .collect();
    for arrow in &dto.arrows {
        if arrow.from < 1 || arrow.from > n || arrow.to < 1 || arrow.to > n {
            return Err(AlcoveError::InvalidInput(format!(
                "arrow {} → {} out of range",
                arrow.from, arrow.to
            )));
        }
        let idx = quiver
            .arrows()
            .iter()
            .position(|a| a.source == arrow.from - 1 && a.target == arrow.to - 1)
            .ok_or_else(|| {
                AlcoveError::InvalidInput(format!(
                    "arrow {} → {} is not part of the doubled linear quiver",
                    arrow.from, arrow.to
                ))
            })?;
        let rows = dto.dims[arrow.to - 1];
        let cols = dto.dims[arrow.from - 1];
        if arrow.matrix.len() != rows || arrow.matrix.iter().any(|r| r.len() != cols) {
            return Err(AlcoveError::InvalidInput(format!(
                "matrix for arrow {} → {} must be {}×{}",
                arrow.from, arrow.to, rows, cols
            )));
        }
        maps[idx] = arrow
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        s.parse::<Rat>().map_err(|e| {
                            AlcoveError::InvalidInput(format!("bad rational {s:?}: {e}"))
                        })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
    }
    QuiverModule::new(quiver, dto.dims.clone(), maps)
}
