//! Exact model of the affine Coxeter complex: affine roots and hyperplanes,
//! reflections, faces keyed by their sign vectors over the positive roots,
//! face types, and the incidence queries the gallery machinery needs.
//!
//! A face is determined by the evaluation pattern of every positive root on
//! its interior: either pinned to an integer level (`On(n)`) or strictly
//! inside a band (`Between(n)`, meaning the value lies in `(n, n+1)`). Face
//! equality, incidence, reflection and translation are all exact rational
//! evaluations against a witness point; no group-element bookkeeping is
//! needed.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{AlcoveError, Result};
use crate::linalg;
use crate::root_data::{LatticeVector, Rat, RationalPoint, RootSystem};

/// The hyperplane `H_{α,n} = {x : ⟨α, x⟩ = n}` for a positive root `α`.
/// Negative affine roots are normalized away: `H_{-α,-n} = H_{α,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRoot {
    /// Index into the ambient root system's positive roots.
    pub root: usize,
    /// Integer level of the hyperplane.
    pub level: i64,
}

impl AffineRoot {
    pub fn new(root: usize, level: i64) -> Self {
        AffineRoot { root, level }
    }
}

/// Evaluation pattern of one positive root on a face interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SignEntry {
    /// `⟨α, ·⟩ = n` on the face.
    On(i64),
    /// `n < ⟨α, ·⟩ < n+1` on the face interior.
    Between(i64),
}

/// A cell of the affine hyperplane arrangement.
///
/// Equality, hashing and ordering use the sign vector only; the witness is
/// carried along so reflections and translations stay cheap, and is
/// re-normalized to the barycenter on serialization.
#[derive(Debug, Clone)]
pub struct Face {
    signs: Vec<SignEntry>,
    witness: RationalPoint,
    dim: usize,
}

impl PartialEq for Face {
    fn eq(&self, other: &Self) -> bool {
        self.signs == other.signs
    }
}

impl Eq for Face {}

impl std::hash::Hash for Face {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.signs.hash(state);
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.signs.cmp(&other.signs)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Face(dim {}, [", self.dim)?;
        for (k, s) in self.signs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match s {
                SignEntry::On(n) => write!(f, "={n}")?,
                SignEntry::Between(n) => write!(f, "({n},{})", n + 1)?,
            }
        }
        write!(f, "])")
    }
}

impl Face {
    pub fn signs(&self) -> &[SignEntry] {
        &self.signs
    }

    pub fn sign(&self, root: usize) -> SignEntry {
        self.signs[root]
    }

    pub fn witness(&self) -> &RationalPoint {
        &self.witness
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_alcove(&self, rs: &RootSystem) -> bool {
        self.dim == rs.rank()
    }

    pub fn is_vertex(&self) -> bool {
        self.dim == 0
    }

    /// The hyperplanes containing this face.
    pub fn on_walls(&self) -> impl Iterator<Item = AffineRoot> + '_ {
        self.signs.iter().enumerate().filter_map(|(k, s)| match s {
            SignEntry::On(n) => Some(AffineRoot::new(k, *n)),
            SignEntry::Between(_) => None,
        })
    }

    /// For a facet: the unique hyperplane spanned by it.
    pub fn wall(&self) -> Option<AffineRoot> {
        let mut it = self.on_walls();
        match (it.next(), it.next()) {
            (Some(w), None) => Some(w),
            _ => None,
        }
    }

    /// Coweight coordinates of a vertex face.
    pub fn vertex_coweight(&self, rs: &RootSystem) -> Result<LatticeVector> {
        if self.dim != 0 {
            return Err(AlcoveError::InvalidInput(format!(
                "face of dimension {} is not a vertex",
                self.dim
            )));
        }
        let coords = (0..rs.rank())
            .map(|i| match self.signs[i] {
                SignEntry::On(n) => Ok(n),
                SignEntry::Between(_) => Err(AlcoveError::NotLattice(
                    "vertex witness not on simple-root hyperplanes".into(),
                )),
            })
            .collect::<Result<Vec<i64>>>()?;
        Ok(LatticeVector::coweight(coords))
    }
}

/// The canonical face of the fundamental alcove in a face's affine-Weyl
/// orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceType(Face);

impl FaceType {
    pub fn face(&self) -> &Face {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

impl fmt::Display for FaceType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Type{}", self.0)
    }
}

/// An element of the affine Weyl group in coroot coordinates: `x ↦ Lx + v`
/// with integer linear part and integer offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    linear: Vec<Vec<i64>>,
    offset: Vec<i64>,
}

impl AffineMap {
    pub fn identity(rank: usize) -> Self {
        AffineMap {
            linear: (0..rank)
                .map(|i| (0..rank).map(|j| i64::from(i == j)).collect())
                .collect(),
            offset: vec![0; rank],
        }
    }

    /// The reflection `s_{α,n}` as an affine map.
    pub fn reflection(rs: &RootSystem, beta: AffineRoot) -> Result<AffineMap> {
        let m = rs.coroot_vector(beta.root)?;
        let row: Vec<i64> = (0..rs.rank())
            .map(|i| {
                (0..rs.rank())
                    .map(|j| rs.cartan()[j][i] * m[j])
                    .sum::<i64>()
            })
            .collect();
        let rank = rs.rank();
        let linear = (0..rank)
            .map(|a| {
                (0..rank)
                    .map(|b| i64::from(a == b) - m[a] * row[b])
                    .collect()
            })
            .collect();
        let offset = m.iter().map(|&c| beta.level * c).collect();
        Ok(AffineMap { linear, offset })
    }

    /// Composition `self ∘ other`.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        let rank = self.offset.len();
        let linear = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| (0..rank).map(|k| self.linear[i][k] * other.linear[k][j]).sum())
                    .collect()
            })
            .collect();
        let offset = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|k| self.linear[i][k] * other.offset[k])
                    .sum::<i64>()
                    + self.offset[i]
            })
            .collect();
        AffineMap { linear, offset }
    }

    pub fn apply(&self, x: &RationalPoint) -> RationalPoint {
        let coords = (0..self.offset.len())
            .map(|i| {
                linalg::dot_int_rat(&self.linear[i], x.coords())
                    + Rat::from_integer(self.offset[i])
            })
            .collect();
        RationalPoint::new(coords)
    }
}

/// `x ↦ x − (⟨α, x⟩ − n)·α^∨`; an involution fixing `H_{α,n}`.
pub fn affine_reflection(rs: &RootSystem, beta: AffineRoot, x: &RationalPoint) -> Result<RationalPoint> {
    let value = rs.pairing_point(beta.root, x)? - Rat::from_integer(beta.level);
    let m = rs.coroot_vector(beta.root)?;
    let coords = x
        .coords()
        .iter()
        .zip(m)
        .map(|(c, &mi)| *c - value * Rat::from_integer(mi))
        .collect();
    Ok(RationalPoint::new(coords))
}

/// The unique open face of the arrangement containing `x`.
pub fn carrier_face(rs: &RootSystem, x: &RationalPoint) -> Result<Face> {
    rs.check_rank(x.rank())?;
    let mut signs = Vec::with_capacity(rs.num_positive_roots());
    let mut on_rows: Vec<Vec<i64>> = Vec::new();
    for k in 0..rs.num_positive_roots() {
        let v = rs.pairing_point(k, x)?;
        if v.is_integer() {
            signs.push(SignEntry::On(v.to_integer()));
            on_rows.push(rs.root_coeffs(k)?.to_vec());
        } else {
            signs.push(SignEntry::Between(v.floor().to_integer()));
        }
    }
    let dim = rs.rank() - linalg::rank_int(&on_rows);
    Ok(Face {
        signs,
        witness: x.clone(),
        dim,
    })
}

/// The origin vertex `{0}`.
pub fn origin_vertex(rs: &RootSystem) -> Face {
    carrier_face(rs, &RationalPoint::zero(rs.rank())).expect("origin is a valid point")
}

/// The fundamental alcove as a face.
pub fn fundamental_alcove(rs: &RootSystem) -> Face {
    carrier_face(rs, &rs.fundamental_alcove_barycenter()).expect("barycenter is a valid point")
}

/// Vertices of the fundamental alcove: `0` and `ω_i^∨ / c_i` where
/// `θ = Σ c_i α_i`.
pub fn fundamental_alcove_vertices(rs: &RootSystem) -> Vec<RationalPoint> {
    let theta = rs.root_coeffs(rs.highest_root()).expect("highest root");
    let mut vs = vec![RationalPoint::zero(rs.rank())];
    for i in 0..rs.rank() {
        let coords = (0..rs.rank())
            .map(|j| rs.cartan_inv()[j][i] / Rat::from_integer(theta[i]))
            .collect();
        vs.push(RationalPoint::new(coords));
    }
    vs
}

/// Fold a point into the closure of the fundamental alcove by simple affine
/// reflections, recording the reflections applied (in application order).
pub fn fold_to_fundamental(
    rs: &RootSystem,
    x: &RationalPoint,
) -> Result<(RationalPoint, Vec<AffineRoot>)> {
    let mut y = x.clone();
    let mut seq = Vec::new();
    let theta = rs.highest_root();
    // Each reflection strictly reduces the number of walls separating the
    // point from the fundamental alcove, so the loop ends long before the cap.
    for _ in 0..1_000_000 {
        let mut moved = false;
        for i in 0..rs.rank() {
            if rs.pairing_point(i, &y)?.is_negative() {
                let beta = AffineRoot::new(i, 0);
                y = affine_reflection(rs, beta, &y)?;
                seq.push(beta);
                moved = true;
                break;
            }
        }
        if moved {
            continue;
        }
        if rs.pairing_point(theta, &y)? > Rat::from_integer(1) {
            let beta = AffineRoot::new(theta, 1);
            y = affine_reflection(rs, beta, &y)?;
            seq.push(beta);
            continue;
        }
        return Ok((y, seq));
    }
    Err(AlcoveError::InvalidInput(
        "folding into the fundamental alcove did not terminate".into(),
    ))
}

/// The canonical representative of a face under the affine Weyl action.
pub fn face_type(rs: &RootSystem, f: &Face) -> Result<FaceType> {
    let (y, _) = fold_to_fundamental(rs, &f.witness)?;
    let folded = carrier_face(rs, &y)?;
    debug_assert_eq!(folded.dim, f.dim);
    Ok(FaceType(folded))
}

/// All alcoves whose closure contains `f`, in canonical (sign-vector) order.
///
/// The reflections in the hyperplanes through `f` generate the stabilizer of
/// `f`, which acts transitively on these alcoves, so a closure under those
/// reflections starting from any one of them finds all of them.
pub fn alcoves_containing(rs: &RootSystem, f: &Face) -> Result<Vec<Face>> {
    let start = adjacent_alcove(rs, f)?;
    let walls: Vec<AffineRoot> = f.on_walls().collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        if !seen.insert(a.signs.clone()) {
            continue;
        }
        for &w in &walls {
            let refl = reflect_face(rs, &a, w)?;
            if !seen.contains(&refl.signs) {
                queue.push_back(refl);
            }
        }
        out.push(a);
    }
    out.sort();
    Ok(out)
}

/// One alcove whose closure contains `f`: nudge the witness in the `ρ^∨`
/// direction, which is transverse to every wall through `f`.
fn adjacent_alcove(rs: &RootSystem, f: &Face) -> Result<Face> {
    if f.dim == rs.rank() {
        return Ok(f.clone());
    }
    let rho = {
        let ones: Vec<Rat> = vec![Rat::from_integer(1); rs.rank()];
        RationalPoint::new(linalg::mat_vec_rat(rs.cartan_inv(), &ones))
    };
    let mut bound: Rat = Rat::from_integer(1);
    for (k, s) in f.signs.iter().enumerate() {
        let ht = Rat::from_integer(rs.root_height(k)?);
        match s {
            SignEntry::On(_) => {
                let candidate = Rat::from_integer(1) / ht;
                bound = bound.min(candidate);
            }
            SignEntry::Between(n) => {
                let v = rs.pairing_point(k, &f.witness)?;
                let slack = (v - Rat::from_integer(*n)).min(Rat::from_integer(n + 1) - v);
                bound = bound.min(slack / ht);
            }
        }
    }
    let eps = bound / Rat::from_integer(2);
    let nudged = f.witness.add(&rho.scale(eps));
    let alcove = carrier_face(rs, &nudged)?;
    debug_assert!(alcove.is_alcove(rs));
    debug_assert!(face_in_closure(f, &alcove));
    Ok(alcove)
}

/// The alcoves around the origin, each paired with an affine-Weyl map
/// sending the fundamental alcove onto it. Canonical order.
pub fn alcoves_at_origin(rs: &RootSystem) -> Result<Vec<(Face, AffineMap)>> {
    let fund = fundamental_alcove(rs);
    let mut seen = std::collections::HashMap::new();
    let mut queue = std::collections::VecDeque::new();
    seen.insert(fund.signs.clone(), ());
    queue.push_back((fund, AffineMap::identity(rs.rank())));
    let mut out = Vec::new();
    while let Some((a, g)) = queue.pop_front() {
        for k in 0..rs.num_positive_roots() {
            let beta = AffineRoot::new(k, 0);
            let refl = reflect_face(rs, &a, beta)?;
            if !seen.contains_key(&refl.signs) {
                seen.insert(refl.signs.clone(), ());
                let map = AffineMap::reflection(rs, beta)?.compose(&g);
                queue.push_back((refl, map));
            }
        }
        out.push((a, g));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// The unique face of the closed alcove with the given type.
pub fn face_of_type_in_alcove(rs: &RootSystem, alcove: &Face, t: &FaceType) -> Result<Face> {
    if !alcove.is_alcove(rs) {
        return Err(AlcoveError::InvalidInput(
            "face_of_type_in_alcove requires a full-dimensional alcove".into(),
        ));
    }
    let (_, seq) = fold_to_fundamental(rs, &alcove.witness)?;
    let mut y = t.face().witness.clone();
    for beta in seq.iter().rev() {
        y = affine_reflection(rs, *beta, &y)?;
    }
    let face = carrier_face(rs, &y)?;
    debug_assert!(face_in_closure(&face, alcove));
    Ok(face)
}

/// Translate a face by a coroot-lattice vector.
pub fn translate_face(rs: &RootSystem, f: &Face, v: &LatticeVector) -> Result<Face> {
    let c = v.to_coroot(rs)?;
    let shifted = f.witness.add_int(c.coords());
    carrier_face(rs, &shifted)
}

/// Reflect a face across an affine hyperplane.
pub fn reflect_face(rs: &RootSystem, f: &Face, beta: AffineRoot) -> Result<Face> {
    let y = affine_reflection(rs, beta, &f.witness)?;
    carrier_face(rs, &y)
}

/// Sign test for `f ⊆ closure(alcove)`.
pub fn face_in_closure(f: &Face, alcove: &Face) -> bool {
    f.signs.iter().zip(&alcove.signs).all(|(fs, als)| match als {
        SignEntry::Between(n) => matches!(
            fs,
            SignEntry::Between(m) if m == n
        ) || matches!(fs, SignEntry::On(m) if *m == *n || *m == *n + 1),
        SignEntry::On(_) => false,
    })
}

/// The vertex set of a (bounded) face, canonically sorted.
///
/// Vertices are solutions of full-rank subsystems assembled from the face's
/// `On` equalities together with chosen bounds of its `Between` bands.
pub fn face_vertices(rs: &RootSystem, f: &Face) -> Result<Vec<RationalPoint>> {
    let rank = rs.rank();
    let mut on_rows = Vec::new();
    let mut on_rhs = Vec::new();
    let mut between = Vec::new();
    for (k, s) in f.signs.iter().enumerate() {
        let row: Vec<Rat> = (0..rank)
            .map(|i| {
                Rat::from_integer(
                    (0..rank)
                        .map(|j| rs.cartan()[j][i] * rs.root_coeffs(k).unwrap()[j])
                        .sum::<i64>(),
                )
            })
            .collect();
        match s {
            SignEntry::On(n) => {
                on_rows.push(row);
                on_rhs.push(Rat::from_integer(*n));
            }
            SignEntry::Between(n) => between.push((row, *n)),
        }
    }

    let mut vertices: Vec<RationalPoint> = Vec::new();
    let nb = between.len();
    // Each Between band contributes lower bound / upper bound / unconstrained.
    let mut choice = vec![0u8; nb];
    loop {
        let mut rows = on_rows.clone();
        let mut rhs = on_rhs.clone();
        for (idx, &c) in choice.iter().enumerate() {
            if c > 0 {
                let (row, n) = &between[idx];
                rows.push(row.clone());
                rhs.push(Rat::from_integer(if c == 1 { *n } else { *n + 1 }));
            }
        }
        if let linalg::Solution::Unique(x) = linalg::solve(&rows, &rhs) {
            let p = RationalPoint::new(x);
            if point_in_face_closure(rs, f, &p)? && !vertices.contains(&p) {
                // Only arrangement vertices qualify.
                if carrier_face(rs, &p)?.dim() == 0 {
                    vertices.push(p);
                }
            }
        }
        // advance mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == nb {
                vertices.sort();
                return Ok(vertices);
            }
            choice[pos] += 1;
            if choice[pos] < 3 {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

fn point_in_face_closure(rs: &RootSystem, f: &Face, p: &RationalPoint) -> Result<bool> {
    for (k, s) in f.signs.iter().enumerate() {
        let v = rs.pairing_point(k, p)?;
        let ok = match s {
            SignEntry::On(n) => v == Rat::from_integer(*n),
            SignEntry::Between(n) => {
                v >= Rat::from_integer(*n) && v <= Rat::from_integer(*n + 1)
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Same face with the witness normalized to the barycenter of its vertex
/// set; used for deterministic serialization.
pub fn canonicalize_face(rs: &RootSystem, f: &Face) -> Result<Face> {
    let vs = face_vertices(rs, f)?;
    let bary = RationalPoint::barycenter(&vs);
    let out = carrier_face(rs, &bary)?;
    debug_assert_eq!(&out, f);
    Ok(out)
}

// ---------------------------------------------------------------------------
// JSON form

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SignDto {
    On { root: usize, on: i64 },
    Between { root: usize, between: i64 },
}

/// Wire format of a face: `{"point": ["p/q", ...], "signs": [...]}` with
/// rationals as lowest-term strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceDto {
    pub point: Vec<String>,
    pub signs: Vec<SignDto>,
}

pub fn face_to_dto(rs: &RootSystem, f: &Face) -> Result<FaceDto> {
    let canon = canonicalize_face(rs, f)?;
    Ok(FaceDto {
        point: canon.witness.coords().iter().map(|r| r.to_string()).collect(),
        signs: canon
            .signs
            .iter()
            .enumerate()
            .map(|(k, s)| match s {
                SignEntry::On(n) => SignDto::On { root: k, on: *n },
                SignEntry::Between(n) => SignDto::Between { root: k, between: *n },
            })
            .collect(),
    })
}

pub fn face_from_dto(rs: &RootSystem, dto: &FaceDto) -> Result<Face> {
    let coords = dto
        .point
        .iter()
        .map(|s| {
            s.parse::<Rat>()
                .map_err(|e| AlcoveError::InvalidInput(format!("bad rational {s:?}: {e}")))
        })
        .collect::<Result<Vec<Rat>>>()?;
    let face = carrier_face(rs, &RationalPoint::new(coords))?;
    let mut expected = vec![None; rs.num_positive_roots()];
    for s in &dto.signs {
        let (root, entry) = match s {
            SignDto::On { root, on } => (*root, SignEntry::On(*on)),
            SignDto::Between { root, between } => (*root, SignEntry::Between(*between)),
        };
        if root >= expected.len() {
            return Err(AlcoveError::RootIndexOutOfRange {
                index: root,
                count: expected.len(),
            });
        }
        expected[root] = Some(entry);
    }
    for (k, e) in expected.iter().enumerate() {
        match e {
            Some(entry) if *entry == face.signs[k] => {}
            _ => {
                return Err(AlcoveError::InvalidInput(format!(
                    "sign vector inconsistent with witness at root {k}"
                )))
            }
        }
    }
    Ok(face)
}
