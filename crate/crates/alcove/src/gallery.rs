//! Galleries in the affine Coxeter complex: construction of based (minimal)
//! galleries, enumeration of all galleries of a fixed type, the positive
//! folding predicate, the dimension statistic, and the LS filter.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::affine::{
    alcoves_at_origin, carrier_face, face_from_dto, face_in_closure, face_to_dto, face_type,
    fundamental_alcove, fundamental_alcove_vertices, origin_vertex, reflect_face, AffineMap,
    AffineRoot, Face, FaceDto, FaceType, SignEntry,
};
use crate::error::{AlcoveError, Result};
use crate::root_data::{height, LatticeVector, Rat, RationalPoint, RootSystem};

/// An alternating sequence of small faces and alcoves
/// `G₀ ⊂ Δ̄₀ ⊃ G₁ ⊂ … ⊃ G_p ⊂ Δ̄_p ⊃ G_{p+1}` starting at the origin vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gallery {
    smalls: Vec<Face>,
    alcoves: Vec<Face>,
}

impl Gallery {
    /// Validating constructor.
    pub fn from_parts(rs: &RootSystem, smalls: Vec<Face>, alcoves: Vec<Face>) -> Result<Gallery> {
        let g = Gallery { smalls, alcoves };
        g.validate(rs)?;
        Ok(g)
    }

    pub(crate) fn from_parts_unchecked(smalls: Vec<Face>, alcoves: Vec<Face>) -> Gallery {
        Gallery { smalls, alcoves }
    }

    pub fn smalls(&self) -> &[Face] {
        &self.smalls
    }

    pub fn alcoves(&self) -> &[Face] {
        &self.alcoves
    }

    /// Number of wall steps: the gallery has `p+1` alcoves.
    pub fn p(&self) -> usize {
        self.alcoves.len() - 1
    }

    /// True at `j` when `Δ_j = Δ_{j-1}`.
    pub fn is_fold(&self, j: usize) -> Result<bool> {
        if j == 0 || j >= self.alcoves.len() {
            return Err(AlcoveError::GalleryIndexOutOfRange {
                index: j,
                p: self.p(),
            });
        }
        Ok(self.alcoves[j] == self.alcoves[j - 1])
    }

    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        if self.smalls.len() != self.alcoves.len() + 1 || self.alcoves.is_empty() {
            return Err(AlcoveError::MalformedGallery(
                "need |smalls| = |alcoves| + 1 with at least one alcove".into(),
            ));
        }
        if self.smalls[0] != origin_vertex(rs) {
            return Err(AlcoveError::MalformedGallery(
                "galleries start at the origin vertex".into(),
            ));
        }
        if !self.smalls.last().unwrap().is_vertex() {
            return Err(AlcoveError::MalformedGallery(
                "galleries end at a vertex".into(),
            ));
        }
        for (j, a) in self.alcoves.iter().enumerate() {
            if !a.is_alcove(rs) {
                return Err(AlcoveError::MalformedGallery(format!(
                    "entry {j} is not an alcove"
                )));
            }
            if !face_in_closure(&self.smalls[j], a) || !face_in_closure(&self.smalls[j + 1], a) {
                return Err(AlcoveError::MalformedGallery(format!(
                    "small faces around alcove {j} are not in its closure"
                )));
            }
        }
        for j in 1..self.alcoves.len() {
            if self.alcoves[j] == self.alcoves[j - 1] {
                continue;
            }
            let wall = self.smalls[j].wall().ok_or_else(|| {
                AlcoveError::MalformedGallery(format!("small face {j} is not a facet"))
            })?;
            if reflect_face(rs, &self.alcoves[j - 1], wall)? != self.alcoves[j] {
                return Err(AlcoveError::MalformedGallery(format!(
                    "alcoves {} and {} neither fold nor cross at their shared face",
                    j - 1,
                    j
                )));
            }
        }
        Ok(())
    }
}

/// The type of a gallery: face types in the alternating order
/// `type(G₀), type(Δ₀), type(G₁), …, type(G_{p+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GalleryType(pub Vec<FaceType>);

pub fn gallery_type(rs: &RootSystem, g: &Gallery) -> Result<GalleryType> {
    let mut out = Vec::with_capacity(2 * g.alcoves.len() + 1);
    for j in 0..g.alcoves.len() {
        out.push(face_type(rs, &g.smalls[j])?);
        out.push(face_type(rs, &g.alcoves[j])?);
    }
    out.push(face_type(rs, g.smalls.last().unwrap())?);
    Ok(GalleryType(out))
}

/// Endpoint of the gallery as a coweight.
pub fn weight(rs: &RootSystem, g: &Gallery) -> Result<LatticeVector> {
    g.smalls.last().unwrap().vertex_coweight(rs)
}

/// The positive affine roots whose hyperplane contains `G_j` while `Δ_j`
/// lies strictly on the positive side.
pub fn load_bearing_walls(rs: &RootSystem, g: &Gallery, j: usize) -> Result<BTreeSet<AffineRoot>> {
    if j >= g.alcoves.len() {
        return Err(AlcoveError::GalleryIndexOutOfRange { index: j, p: g.p() });
    }
    let mut out = BTreeSet::new();
    for wall in g.smalls[j].on_walls() {
        if g.alcoves[j].sign(wall.root) == SignEntry::Between(wall.level) {
            out.insert(wall);
        }
    }
    let _ = rs;
    Ok(out)
}

/// `dim δ = Σ_{j=0}^{p} |Φ^aff₊(j)|`.
pub fn gallery_dim(rs: &RootSystem, g: &Gallery) -> Result<i64> {
    let mut total = 0i64;
    for j in 0..g.alcoves.len() {
        total += load_bearing_walls(rs, g, j)?.len() as i64;
    }
    Ok(total)
}

/// Every fold must happen with the retained alcove strictly on the positive
/// side of some wall through the folding face.
pub fn is_positively_folded(rs: &RootSystem, g: &Gallery) -> Result<bool> {
    for j in 1..g.alcoves.len() {
        if g.is_fold(j)? && load_bearing_walls(rs, g, j)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// LS predicate relative to a based gallery `gamma` of weight `λ`:
/// positively folded and `dim γ_λ − dim δ = ht(λ − wt(δ))`.
pub fn is_ls(rs: &RootSystem, g: &Gallery, gamma: &Gallery) -> Result<bool> {
    if gallery_type(rs, g)? != gallery_type(rs, gamma)? {
        return Err(AlcoveError::TypeMismatch);
    }
    if !is_positively_folded(rs, g)? {
        return Ok(false);
    }
    let lam = weight(rs, gamma)?;
    let wt = weight(rs, g)?;
    let diff = lam.checked_sub(&wt)?;
    let Ok(ht) = height(rs, &diff) else {
        return Ok(false);
    };
    Ok(gallery_dim(rs, gamma)? - gallery_dim(rs, g)? == ht)
}

// ---------------------------------------------------------------------------
// Based galleries

fn primes_from(mut start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let isprime = |n: u64| n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0);
    while out.len() < count {
        start += 1;
        if isprime(start) {
            out.push(start);
        }
    }
    out
}

/// Closed form for the length of the shortest affine Weyl element taking the
/// fundamental-alcove vertex of λ's type to λ: the count of hyperplanes a
/// straight generic walk from the fundamental alcove crosses strictly before
/// reaching λ.
pub fn minimal_length(rs: &RootSystem, lambda: &LatticeVector) -> Result<i64> {
    if !lambda.is_dominant(rs)? {
        return Err(AlcoveError::NonDominant(format!("{:?}", lambda.coords())));
    }
    let mut total = 0;
    for k in 0..rs.num_positive_roots() {
        let n = rs.pairing_lattice(k, lambda)?;
        total += (n - 1).max(0);
    }
    Ok(total)
}

/// Deterministic minimal (based) gallery from the origin to `{λ}` obtained by
/// walking a straight segment from a generic interior point of the
/// fundamental alcove to a generic point just below `λ`, crossing hyperplanes
/// in parameter order.
pub fn minimal_gallery(rs: &RootSystem, lambda: &LatticeVector) -> Result<Gallery> {
    if !lambda.is_dominant(rs)? {
        return Err(AlcoveError::NonDominant(format!("{:?}", lambda.coords())));
    }
    let lam_point = lambda.to_point(rs)?;
    let pairings: Vec<i64> = (0..rs.num_positive_roots())
        .map(|k| rs.pairing_lattice(k, lambda))
        .collect::<Result<_>>()?;

    let mut prime_floor = 2 * rs.rank() as u64;
    for _attempt in 0..16 {
        let primes = primes_from(prime_floor, rs.rank());
        prime_floor = *primes.last().unwrap();
        if let Some(gallery) = try_straight_walk(rs, &lam_point, &pairings, &primes)? {
            debug_assert!(gallery.validate(rs).is_ok());
            return Ok(gallery);
        }
    }
    Err(AlcoveError::InvalidInput(
        "could not find a generic base point for the straight-line walk".into(),
    ))
}

fn try_straight_walk(
    rs: &RootSystem,
    lam_point: &RationalPoint,
    pairings: &[i64],
    primes: &[u64],
) -> Result<Option<Gallery>> {
    // Base point with fundamental-coweight coordinates 1/p_i.
    let fund: Vec<Rat> = primes.iter().map(|&p| Rat::new(1, p as i64)).collect();
    let mut base = {
        let coords = crate::root_data::coweight_rat_to_point(rs, &fund);
        RationalPoint::new(coords)
    };
    // Scale into the open fundamental alcove if the highest-root pairing is
    // too large (possible outside type A).
    let theta = rs.highest_root();
    while rs.pairing_point(theta, &base)? >= Rat::from_integer(1) {
        base = base.scale(Rat::new(1, 2));
    }

    let max_pairing = pairings.iter().copied().max().unwrap_or(0).max(1);
    let eps = Rat::new(1, 2 * max_pairing);
    // target t = λ + ε (b − λ)
    let target = lam_point.add(&base.sub(lam_point).scale(eps));

    // Crossing parameters: the walk meets H_{α,n} (1 ≤ n ≤ ⟨α,λ⟩ − 1) at
    // s = (n − ⟨α,b⟩) / (⟨α,t⟩ − ⟨α,b⟩).
    let mut crossings: Vec<(Rat, AffineRoot)> = Vec::new();
    for (k, &n_max) in pairings.iter().enumerate() {
        let b_val = rs.pairing_point(k, &base)?;
        let t_val = rs.pairing_point(k, &target)?;
        let denom = t_val - b_val;
        for n in 1..n_max {
            let s = (Rat::from_integer(n) - b_val) / denom;
            crossings.push((s, AffineRoot::new(k, n)));
        }
    }
    crossings.sort();
    for w in crossings.windows(2) {
        if w[0].0 == w[1].0 {
            return Ok(None); // coincident crossings: retry with new primes
        }
    }

    let at = |s: Rat| -> RationalPoint { base.add(&target.sub(&base).scale(s)) };
    let p = crossings.len();
    let mut smalls = Vec::with_capacity(p + 2);
    let mut alcoves = Vec::with_capacity(p + 1);
    smalls.push(origin_vertex(rs));
    for j in 0..=p {
        let lo = if j == 0 { Rat::zero() } else { crossings[j - 1].0 };
        let hi = if j == p {
            Rat::from_integer(1)
        } else {
            crossings[j].0
        };
        let mid = (lo + hi) / Rat::from_integer(2);
        let alcove = carrier_face(rs, &at(mid))?;
        if !alcove.is_alcove(rs) {
            return Ok(None);
        }
        alcoves.push(alcove);
        if j < p {
            let facet = carrier_face(rs, &at(crossings[j].0))?;
            if facet.dim() + 1 != rs.rank() {
                return Ok(None);
            }
            smalls.push(facet);
        }
    }
    smalls.push(carrier_face(rs, lam_point)?);
    Ok(Some(Gallery::from_parts_unchecked(smalls, alcoves)))
}

/// Build a based gallery from an explicit reduced word, read left to right as
/// successive wall crossings starting in the fundamental alcove. Letter `0`
/// crosses the wall of type `H_{θ,1}`, letter `i ∈ 1..=rank` the wall of type
/// `H_{α_i,0}`. The word must be reduced and must end in an alcove whose
/// λ-type vertex is `λ` after exactly the minimal number of crossings.
pub fn gallery_from_word(rs: &RootSystem, lambda: &LatticeVector, word: &[usize]) -> Result<Gallery> {
    if !lambda.is_dominant(rs)? {
        return Err(AlcoveError::NonDominant(format!("{:?}", lambda.coords())));
    }
    let fund_vertices = fundamental_alcove_vertices(rs);
    let facet_of_letter = |letter: usize| -> Result<Face> {
        if letter > rs.rank() {
            return Err(AlcoveError::InvalidInput(format!(
                "word letter {letter} out of range 0..={}",
                rs.rank()
            )));
        }
        let pts: Vec<RationalPoint> = if letter == 0 {
            fund_vertices[1..].to_vec()
        } else {
            (0..fund_vertices.len())
                .filter(|&i| i != letter)
                .map(|i| fund_vertices[i].clone())
                .collect()
        };
        carrier_face(rs, &RationalPoint::barycenter(&pts))
    };

    let fund_bary = rs.fundamental_alcove_barycenter();
    let mut g = AffineMap::identity(rs.rank());
    let mut alcove = fundamental_alcove(rs);
    let mut smalls = vec![origin_vertex(rs)];
    let mut alcoves = vec![alcove.clone()];
    let mut crossed: Vec<AffineRoot> = Vec::new();
    for &letter in word {
        let t = facet_of_letter(letter)?;
        let facet = carrier_face(rs, &g.apply(t.witness()))?;
        let wall = facet
            .wall()
            .ok_or_else(|| AlcoveError::MalformedGallery("crossing face is not a facet".into()))?;
        crossed.push(wall);
        g = AffineMap::reflection(rs, wall)?.compose(&g);
        alcove = carrier_face(rs, &g.apply(&fund_bary))?;
        smalls.push(facet);
        alcoves.push(alcove.clone());
    }

    // Reducedness: the number of crossings must equal the number of
    // hyperplanes separating the fundamental alcove from the final one.
    let end_bary = g.apply(&fund_bary);
    let mut separations = 0usize;
    for k in 0..rs.num_positive_roots() {
        let a = rs.pairing_point(k, &fund_bary)?;
        let b = rs.pairing_point(k, &end_bary)?;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let first = lo.floor().to_integer() + 1;
        let last = hi.ceil().to_integer() - 1;
        if last >= first {
            separations += (last - first + 1) as usize;
        }
    }
    if separations != word.len() {
        return Err(AlcoveError::InvalidInput(format!(
            "word of length {} is not reduced: only {} separating hyperplanes",
            word.len(),
            separations
        )));
    }
    let min_len = minimal_length(rs, lambda)? as usize;
    if word.len() != min_len {
        return Err(AlcoveError::InvalidInput(format!(
            "word length {} does not match the minimal length {min_len}",
            word.len()
        )));
    }

    let lam_vertex = carrier_face(rs, &lambda.to_point(rs)?)?;
    let lam_type = face_type(rs, &lam_vertex)?;
    let endpoint = crate::affine::face_of_type_in_alcove(rs, &alcove, &lam_type)?;
    if endpoint != lam_vertex {
        return Err(AlcoveError::InvalidInput(
            "reduced word does not end at the requested coweight".into(),
        ));
    }
    smalls.push(endpoint);
    let gallery = Gallery::from_parts_unchecked(smalls, alcoves);
    debug_assert!(gallery.validate(rs).is_ok());
    Ok(gallery)
}

// ---------------------------------------------------------------------------
// Enumeration of Γ(γ_λ)

/// Tunable limits for gallery enumeration.
#[derive(Debug, Clone, Copy)]
pub struct WalkOptions {
    /// Prune every fold that is not positively folded.
    pub positively_folded_only: bool,
    /// Abort after visiting this many galleries.
    pub budget: u64,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions {
            positively_folded_only: false,
            budget: 1_000_000,
        }
    }
}

/// Callback view of one enumerated gallery; faces are borrowed from the
/// walker stacks and must be cloned to outlive the call.
pub struct GalleryLeaf<'a> {
    pub smalls: &'a [Face],
    pub alcoves: &'a [Face],
    pub weight: LatticeVector,
    pub dim: i64,
    pub positively_folded: bool,
}

impl GalleryLeaf<'_> {
    pub fn to_gallery(&self) -> Gallery {
        Gallery::from_parts_unchecked(self.smalls.to_vec(), self.alcoves.to_vec())
    }
}

struct Walker<'a, F: FnMut(&GalleryLeaf) -> Result<()>> {
    rs: &'a RootSystem,
    step_types: Vec<Face>,
    end_type: Face,
    p: usize,
    opts: WalkOptions,
    visitor: F,
    smalls: Vec<Face>,
    alcoves: Vec<Face>,
    dim: i64,
    positively_folded: bool,
    leaves: u64,
}

impl<F: FnMut(&GalleryLeaf) -> Result<()>> Walker<'_, F> {
    fn leaf(&mut self, g: &AffineMap) -> Result<()> {
        let end = carrier_face(self.rs, &g.apply(self.end_type.witness()))?;
        let wt = end.vertex_coweight(self.rs)?;
        self.leaves += 1;
        if self.leaves > self.opts.budget {
            return Err(AlcoveError::BudgetExceeded {
                budget: self.opts.budget,
            });
        }
        self.smalls.push(end);
        let leaf = GalleryLeaf {
            smalls: &self.smalls,
            alcoves: &self.alcoves,
            weight: wt,
            dim: self.dim,
            positively_folded: self.positively_folded,
        };
        let out = (self.visitor)(&leaf);
        self.smalls.pop();
        out
    }

    fn descend(&mut self, j: usize, g: &AffineMap) -> Result<()> {
        if j == self.p + 1 {
            return self.leaf(g);
        }
        let facet = carrier_face(self.rs, &g.apply(self.step_types[j].witness()))?;
        let wall = facet.wall().ok_or_else(|| {
            AlcoveError::MalformedGallery(format!("type entry {j} is not a facet type"))
        })?;
        let current = self.alcoves.last().unwrap().clone();
        let stay_positive = current.sign(wall.root) == SignEntry::Between(wall.level);

        // fold first, then cross: canonical branch order
        if stay_positive || !self.opts.positively_folded_only {
            let saved_pf = self.positively_folded;
            self.smalls.push(facet.clone());
            self.alcoves.push(current.clone());
            let d = i64::from(stay_positive);
            self.dim += d;
            self.positively_folded &= stay_positive;
            self.descend(j + 1, g)?;
            self.positively_folded = saved_pf;
            self.dim -= d;
            self.alcoves.pop();
            self.smalls.pop();
        }

        let g2 = AffineMap::reflection(self.rs, wall)?.compose(g);
        let crossed = reflect_face(self.rs, &current, wall)?;
        let cross_positive = crossed.sign(wall.root) == SignEntry::Between(wall.level);
        self.smalls.push(facet);
        self.alcoves.push(crossed);
        let d = i64::from(cross_positive);
        self.dim += d;
        self.descend(j + 1, &g2)?;
        self.dim -= d;
        self.alcoves.pop();
        self.smalls.pop();
        Ok(())
    }
}

/// Stream every gallery of the same type as the based gallery `gamma`,
/// in canonical order (start alcoves in sign order; fold before cross).
///
/// `start_filter`, when given, restricts the walk to the listed indices into
/// the canonical origin-alcove order; enumeration over disjoint filters
/// partitions the full walk, which is what the parallel front end relies on.
pub fn walk_same_type<F: FnMut(&GalleryLeaf) -> Result<()>>(
    rs: &RootSystem,
    gamma: &Gallery,
    opts: WalkOptions,
    start_filter: Option<&[usize]>,
    visitor: F,
) -> Result<()> {
    gamma.validate(rs)?;
    let p = gamma.p();
    let mut step_types = Vec::with_capacity(p + 1);
    step_types.push(face_type(rs, &gamma.smalls[0])?.face().clone()); // origin, unused
    for j in 1..=p {
        let t = face_type(rs, &gamma.smalls[j])?;
        if t.dim() + 1 != rs.rank() {
            return Err(AlcoveError::MalformedGallery(format!(
                "interior face {j} of the based gallery is not a facet"
            )));
        }
        step_types.push(t.face().clone());
    }
    let end_type = face_type(rs, gamma.smalls.last().unwrap())?.face().clone();
    if !end_type.is_vertex() {
        return Err(AlcoveError::MalformedGallery(
            "based gallery must end at a vertex".into(),
        ));
    }

    let starts = alcoves_at_origin(rs)?;
    let mut walker = Walker {
        rs,
        step_types,
        end_type,
        p,
        opts,
        visitor,
        smalls: Vec::with_capacity(p + 2),
        alcoves: Vec::with_capacity(p + 1),
        dim: 0,
        positively_folded: true,
        leaves: 0,
    };
    for (idx, (alcove, map)) in starts.iter().enumerate() {
        if let Some(filter) = start_filter {
            if !filter.contains(&idx) {
                continue;
            }
        }
        walker.smalls.clear();
        walker.alcoves.clear();
        walker.smalls.push(origin_vertex(rs));
        walker.alcoves.push(alcove.clone());
        walker.dim = (0..rs.num_positive_roots())
            .filter(|&k| alcove.sign(k) == SignEntry::Between(0))
            .count() as i64;
        walker.positively_folded = true;
        walker.descend(1, map)?;
    }
    Ok(())
}

/// All galleries with the same type as `gamma` (`|W| · 2^p` of them).
pub fn enumerate_same_type(rs: &RootSystem, gamma: &Gallery) -> Result<Vec<Gallery>> {
    enumerate_same_type_with(rs, gamma, WalkOptions::default())
}

pub fn enumerate_same_type_with(
    rs: &RootSystem,
    gamma: &Gallery,
    opts: WalkOptions,
) -> Result<Vec<Gallery>> {
    let mut out = Vec::new();
    walk_same_type(rs, gamma, opts, None, |leaf| {
        out.push(leaf.to_gallery());
        Ok(())
    })?;
    Ok(out)
}

/// The LS galleries of the type of `gamma`, in canonical enumeration order.
pub fn enumerate_ls(rs: &RootSystem, gamma: &Gallery) -> Result<Vec<Gallery>> {
    enumerate_ls_with(rs, gamma, WalkOptions::default())
}

pub fn enumerate_ls_with(
    rs: &RootSystem,
    gamma: &Gallery,
    mut opts: WalkOptions,
) -> Result<Vec<Gallery>> {
    opts.positively_folded_only = true;
    let dim_gamma = gallery_dim(rs, gamma)?;
    let lam = weight(rs, gamma)?;
    let mut out = Vec::new();
    walk_same_type(rs, gamma, opts, None, |leaf| {
        if leaf.positively_folded && ls_deficit_matches(rs, &lam, leaf, dim_gamma)? {
            out.push(leaf.to_gallery());
        }
        Ok(())
    })?;
    Ok(out)
}

/// LS test for a walker leaf against the based gallery's weight and
/// dimension: `leaf.positively_folded` plus the exact dimension deficit.
pub fn leaf_is_ls(
    rs: &RootSystem,
    lam: &LatticeVector,
    dim_gamma: i64,
    leaf: &GalleryLeaf,
) -> Result<bool> {
    Ok(leaf.positively_folded && ls_deficit_matches(rs, lam, leaf, dim_gamma)?)
}

fn ls_deficit_matches(
    rs: &RootSystem,
    lam: &LatticeVector,
    leaf: &GalleryLeaf,
    dim_gamma: i64,
) -> Result<bool> {
    let diff = lam.checked_sub(&leaf.weight.to_coweight(rs)?)?;
    match height(rs, &diff) {
        Ok(h) => Ok(dim_gamma - leaf.dim == h),
        Err(AlcoveError::NegativeHeight(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// By-weight counts of the LS galleries of the type of `gamma`, without
/// materializing them. Keys are fundamental-coweight coordinates.
pub fn ls_weight_histogram(
    rs: &RootSystem,
    gamma: &Gallery,
    mut opts: WalkOptions,
    start_filter: Option<&[usize]>,
) -> Result<BTreeMap<Vec<i64>, u64>> {
    opts.positively_folded_only = true;
    let dim_gamma = gallery_dim(rs, gamma)?;
    let lam = weight(rs, gamma)?;
    let mut hist = BTreeMap::new();
    walk_same_type(rs, gamma, opts, start_filter, |leaf| {
        if leaf.positively_folded && ls_deficit_matches(rs, &lam, leaf, dim_gamma)? {
            *hist.entry(leaf.weight.coords().to_vec()).or_insert(0) += 1;
        }
        Ok(())
    })?;
    Ok(hist)
}

/// One row of a by-weight histogram in wire form:
/// `{"weight": [ints], "count": n, "ls": bool}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramEntry {
    pub weight: Vec<i64>,
    pub count: u64,
    pub ls: bool,
}

/// Flatten a by-weight count map into wire rows; `ls` records whether the
/// counts were taken over LS galleries only.
pub fn histogram_entries(hist: &BTreeMap<Vec<i64>, u64>, ls: bool) -> Vec<HistogramEntry> {
    hist.iter()
        .map(|(weight, &count)| HistogramEntry {
            weight: weight.clone(),
            count,
            ls,
        })
        .collect()
}

// ---------------------------------------------------------------------------
// JSON form

/// Wire format: `{"smalls": [Face...], "alcoves": [Face...], "folds": [bool...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GalleryDto {
    pub smalls: Vec<FaceDto>,
    pub alcoves: Vec<FaceDto>,
    pub folds: Vec<bool>,
}

pub fn gallery_to_dto(rs: &RootSystem, g: &Gallery) -> Result<GalleryDto> {
    let smalls = g
        .smalls
        .iter()
        .map(|f| face_to_dto(rs, f))
        .collect::<Result<_>>()?;
    let alcoves = g
        .alcoves
        .iter()
        .map(|f| face_to_dto(rs, f))
        .collect::<Result<_>>()?;
    let folds = (1..g.alcoves.len())
        .map(|j| g.alcoves[j] == g.alcoves[j - 1])
        .collect();
    Ok(GalleryDto {
        smalls,
        alcoves,
        folds,
    })
}

pub fn gallery_from_dto(rs: &RootSystem, dto: &GalleryDto) -> Result<Gallery> {
    let smalls = dto
        .smalls
        .iter()
        .map(|f| face_from_dto(rs, f))
        .collect::<Result<Vec<Face>>>()?;
    let alcoves = dto
        .alcoves
        .iter()
        .map(|f| face_from_dto(rs, f))
        .collect::<Result<Vec<Face>>>()?;
    let g = Gallery::from_parts(rs, smalls, alcoves)?;
    for (j, &fold) in dto.folds.iter().enumerate() {
        if g.is_fold(j + 1)? != fold {
            return Err(AlcoveError::InvalidInput(format!(
                "fold flag {j} inconsistent with the alcove sequence"
            )));
        }
    }
    Ok(g)
}
