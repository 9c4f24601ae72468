//! Root operators on galleries, crystal-graph generation, the elementary
//! crystals, and an axiom checker.
//!
//! The weight lattice of the crystals here is the coweight lattice: the
//! operators translate endpoints by simple coroots, and `⟨h_i, ·⟩` is the
//! pairing with the simple root `α_i`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::affine::{reflect_face, translate_face, AffineRoot, Face, SignEntry};
use crate::error::{AlcoveError, Result};
use crate::gallery::{gallery_from_dto, gallery_to_dto, Gallery, GalleryDto};
use crate::root_data::{LatticeVector, RootSystem};

fn simple_coroot(rs: &RootSystem, i: usize) -> LatticeVector {
    let mut c = vec![0i64; rs.rank()];
    c[i] = 1;
    LatticeVector::coroot(c)
}

/// Smallest level `m` such that some small face of `g` lies on `H_{α_i,m}`.
/// The origin face pins `m ≤ 0`.
fn min_level(g: &Gallery, i: usize) -> i64 {
    g.smalls()
        .iter()
        .filter_map(|f| match f.sign(i) {
            SignEntry::On(n) => Some(n),
            SignEntry::Between(_) => None,
        })
        .min()
        .expect("G_0 = {0} lies on every level-0 hyperplane")
}

/// `ε_i = −m`.
pub fn epsilon(rs: &RootSystem, g: &Gallery, i: usize) -> Result<i64> {
    check_simple(rs, i)?;
    Ok(-min_level(g, i))
}

/// `φ_i = ⟨α_i, wt⟩ − m`.
pub fn phi(rs: &RootSystem, g: &Gallery, i: usize) -> Result<i64> {
    check_simple(rs, i)?;
    let wt = crate::gallery::weight(rs, g)?;
    Ok(rs.pairing_lattice(i, &wt)? - min_level(g, i))
}

fn check_simple(rs: &RootSystem, i: usize) -> Result<()> {
    if i >= rs.rank() {
        return Err(AlcoveError::RootIndexOutOfRange {
            index: i,
            count: rs.rank(),
        });
    }
    Ok(())
}

enum Segment {
    Keep,
    Reflect,
    Translate,
}

fn rebuild(
    rs: &RootSystem,
    g: &Gallery,
    mirror: AffineRoot,
    shift: &LatticeVector,
    small_segment: impl Fn(usize) -> Segment,
    alcove_segment: impl Fn(usize) -> Segment,
) -> Result<Gallery> {
    let map_face = |f: &Face, seg: Segment| -> Result<Face> {
        match seg {
            Segment::Keep => Ok(f.clone()),
            Segment::Reflect => reflect_face(rs, f, mirror),
            Segment::Translate => translate_face(rs, f, shift),
        }
    };
    let smalls = g
        .smalls()
        .iter()
        .enumerate()
        .map(|(idx, f)| map_face(f, small_segment(idx)))
        .collect::<Result<Vec<Face>>>()?;
    let alcoves = g
        .alcoves()
        .iter()
        .enumerate()
        .map(|(idx, f)| map_face(f, alcove_segment(idx)))
        .collect::<Result<Vec<Face>>>()?;
    let out = Gallery::from_parts_unchecked(smalls, alcoves);
    debug_assert!(out.validate(rs).is_ok());
    Ok(out)
}

/// Raising operator `ẽ_i`: undefined when `m = 0`; otherwise reflect the
/// segment between the last visit to level `m+1` and the first visit to level
/// `m` across `H_{α_i,m+1}`, and translate everything after by `α_i^∨`.
pub fn e_op(rs: &RootSystem, g: &Gallery, i: usize) -> Result<Option<Gallery>> {
    check_simple(rs, i)?;
    let m = min_level(g, i);
    if m == 0 {
        return Ok(None);
    }
    let on = |idx: usize, level: i64| g.smalls()[idx].sign(i) == SignEntry::On(level);
    let k = (1..g.smalls().len())
        .find(|&idx| on(idx, m))
        .ok_or_else(|| AlcoveError::MalformedGallery("minimal level not attained".into()))?;
    let j = (0..k)
        .rev()
        .find(|&idx| on(idx, m + 1))
        .ok_or_else(|| AlcoveError::MalformedGallery("no face on the level above".into()))?;
    rebuild(
        rs,
        g,
        AffineRoot::new(i, m + 1),
        &simple_coroot(rs, i),
        |idx| {
            if idx <= j {
                Segment::Keep
            } else if idx < k {
                Segment::Reflect
            } else {
                Segment::Translate
            }
        },
        |idx| {
            if idx < j {
                Segment::Keep
            } else if idx < k {
                Segment::Reflect
            } else {
                Segment::Translate
            }
        },
    )
    .map(Some)
}

/// Lowering operator `f̃_i`: undefined when `m = ⟨α_i, wt⟩`; otherwise
/// reflect the segment between the last visit to level `m` and the next
/// visit to level `m+1` across `H_{α_i,m}`, and translate everything after
/// by `−α_i^∨`.
pub fn f_op(rs: &RootSystem, g: &Gallery, i: usize) -> Result<Option<Gallery>> {
    check_simple(rs, i)?;
    let m = min_level(g, i);
    let wt = crate::gallery::weight(rs, g)?;
    if m == rs.pairing_lattice(i, &wt)? {
        return Ok(None);
    }
    let on = |idx: usize, level: i64| g.smalls()[idx].sign(i) == SignEntry::On(level);
    let j = (0..g.smalls().len() - 1)
        .rev()
        .find(|&idx| on(idx, m))
        .ok_or_else(|| AlcoveError::MalformedGallery("minimal level not attained".into()))?;
    let k = (j + 1..g.smalls().len())
        .find(|&idx| on(idx, m + 1))
        .ok_or_else(|| AlcoveError::MalformedGallery("no face on the level above".into()))?;
    let minus_coroot = {
        let mut c = vec![0i64; rs.rank()];
        c[i] = -1;
        LatticeVector::coroot(c)
    };
    rebuild(
        rs,
        g,
        AffineRoot::new(i, m),
        &minus_coroot,
        |idx| {
            if idx <= j {
                Segment::Keep
            } else if idx < k {
                Segment::Reflect
            } else {
                Segment::Translate
            }
        },
        |idx| {
            if idx < j {
                Segment::Keep
            } else if idx < k {
                Segment::Reflect
            } else {
                Segment::Translate
            }
        },
    )
    .map(Some)
}

// ---------------------------------------------------------------------------
// Crystal graphs

/// Payload of a crystal element. `None` results of the operators play the
/// role of the distinguished element 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CrystalNode {
    Gallery(Gallery),
    /// Element `t_λ` of the singleton crystal `T(λ)`.
    TPoint { weight: LatticeVector },
    /// Element `b_i(n)` of the elementary crystal `B_i`, with weight
    /// `n·α_i^∨`.
    BPoint { i: usize, n: i64 },
}

impl CrystalNode {
    pub fn weight(&self, rs: &RootSystem) -> Result<LatticeVector> {
        match self {
            CrystalNode::Gallery(g) => crate::gallery::weight(rs, g),
            CrystalNode::TPoint { weight } => weight.to_coweight(rs),
            CrystalNode::BPoint { i, n } => {
                simple_coroot(rs, *i).to_coweight(rs).map(|v| {
                    LatticeVector::coweight(v.coords().iter().map(|c| c * n).collect())
                })
            }
        }
    }

    /// `ε_i`; `None` encodes `−∞`.
    pub fn eps(&self, rs: &RootSystem, i: usize) -> Result<Option<i64>> {
        match self {
            CrystalNode::Gallery(g) => epsilon(rs, g, i).map(Some),
            CrystalNode::TPoint { .. } => Ok(None),
            CrystalNode::BPoint { i: own, n } => {
                check_simple(rs, i)?;
                Ok((*own == i).then_some(-n))
            }
        }
    }

    /// `φ_i`; `None` encodes `−∞`.
    pub fn phi(&self, rs: &RootSystem, i: usize) -> Result<Option<i64>> {
        match self {
            CrystalNode::Gallery(g) => phi(rs, g, i).map(Some),
            CrystalNode::TPoint { .. } => Ok(None),
            CrystalNode::BPoint { i: own, n } => {
                check_simple(rs, i)?;
                Ok((*own == i).then_some(*n))
            }
        }
    }

    pub fn e(&self, rs: &RootSystem, i: usize) -> Result<Option<CrystalNode>> {
        match self {
            CrystalNode::Gallery(g) => Ok(e_op(rs, g, i)?.map(CrystalNode::Gallery)),
            CrystalNode::TPoint { .. } => Ok(None),
            CrystalNode::BPoint { i: own, n } => {
                check_simple(rs, i)?;
                Ok((*own == i).then_some(CrystalNode::BPoint { i: *own, n: n + 1 }))
            }
        }
    }

    pub fn f(&self, rs: &RootSystem, i: usize) -> Result<Option<CrystalNode>> {
        match self {
            CrystalNode::Gallery(g) => Ok(f_op(rs, g, i)?.map(CrystalNode::Gallery)),
            CrystalNode::TPoint { .. } => Ok(None),
            CrystalNode::BPoint { i: own, n } => {
                check_simple(rs, i)?;
                Ok((*own == i).then_some(CrystalNode::BPoint { i: *own, n: n - 1 }))
            }
        }
    }

    fn sort_key(&self, rs: &RootSystem) -> (Vec<i64>, String) {
        let wt = self.weight(rs).expect("weight of a crystal node");
        let neg: Vec<i64> = wt.coords().iter().map(|c| -c).collect();
        (neg, format!("{self:?}"))
    }
}

/// One node of a materialized crystal graph, with cached structure maps.
#[derive(Debug, Clone)]
pub struct CrystalElement {
    pub payload: CrystalNode,
    pub weight: LatticeVector,
    /// Cached `ε_i` per simple root; `None` encodes `−∞`.
    pub eps: Vec<Option<i64>>,
    /// Cached `φ_i` per simple root; `None` encodes `−∞`.
    pub phi: Vec<Option<i64>>,
}

impl CrystalElement {
    fn from_payload(rs: &RootSystem, payload: CrystalNode) -> Result<CrystalElement> {
        let weight = payload.weight(rs)?;
        let eps = (0..rs.rank())
            .map(|i| payload.eps(rs, i))
            .collect::<Result<_>>()?;
        let phi = (0..rs.rank())
            .map(|i| payload.phi(rs, i))
            .collect::<Result<_>>()?;
        Ok(CrystalElement {
            payload,
            weight,
            eps,
            phi,
        })
    }
}

/// A finite crystal graph: nodes plus `f̃_i` edges `(source, target, i)`.
#[derive(Debug, Clone)]
pub struct CrystalGraph {
    pub nodes: Vec<CrystalElement>,
    pub edges: Vec<(usize, usize, usize)>,
    /// Nodes whose strings continue outside a materialization window (used by
    /// the windowed elementary crystals); the axiom checker does not demand
    /// closure at these nodes.
    pub open_boundary: Vec<usize>,
}

impl CrystalGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// Indices of nodes with all `ẽ_i` undefined.
    pub fn sources(&self) -> Vec<usize> {
        let mut incoming = vec![false; self.nodes.len()];
        for &(_, to, _) in &self.edges {
            incoming[to] = true;
        }
        (0..self.nodes.len()).filter(|&k| !incoming[k]).collect()
    }
}

/// Closure of a seed gallery under all `ẽ_i`, `f̃_i`, with structural
/// deduplication. Fails once more than `node_cap` nodes appear.
pub fn generate_crystal(rs: &RootSystem, seed: &Gallery, node_cap: usize) -> Result<CrystalGraph> {
    seed.validate(rs)?;
    let mut index: HashMap<CrystalNode, usize> = HashMap::new();
    let mut payloads: Vec<CrystalNode> = Vec::new();
    let mut edges: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut queue = VecDeque::new();

    let start = CrystalNode::Gallery(seed.clone());
    index.insert(start.clone(), 0);
    payloads.push(start);
    queue.push_back(0usize);

    while let Some(cur) = queue.pop_front() {
        let payload = payloads[cur].clone();
        for i in 0..rs.rank() {
            for down in [false, true] {
                let next = if down {
                    payload.f(rs, i)?
                } else {
                    payload.e(rs, i)?
                };
                let Some(next) = next else { continue };
                let target = match index.get(&next) {
                    Some(&t) => t,
                    None => {
                        let t = payloads.len();
                        if t >= node_cap {
                            return Err(AlcoveError::BudgetExceeded {
                                budget: node_cap as u64,
                            });
                        }
                        index.insert(next.clone(), t);
                        payloads.push(next);
                        queue.push_back(t);
                        t
                    }
                };
                if down {
                    edges.insert((cur, target, i));
                } else {
                    edges.insert((target, cur, i));
                }
            }
        }
    }

    // Canonical order: weight descending, then payload encoding.
    let mut order: Vec<usize> = (0..payloads.len()).collect();
    order.sort_by_key(|&k| payloads[k].sort_key(rs));
    let mut rename = vec![0usize; payloads.len()];
    for (new, &old) in order.iter().enumerate() {
        rename[old] = new;
    }
    let mut nodes = vec![None; payloads.len()];
    for (old, payload) in payloads.into_iter().enumerate() {
        nodes[rename[old]] = Some(CrystalElement::from_payload(rs, payload)?);
    }
    let mut edge_list: Vec<(usize, usize, usize)> = edges
        .into_iter()
        .map(|(a, b, i)| (rename[a], rename[b], i))
        .collect();
    edge_list.sort();
    Ok(CrystalGraph {
        nodes: nodes.into_iter().map(Option::unwrap).collect(),
        edges: edge_list,
        open_boundary: Vec::new(),
    })
}

/// The singleton crystal `T(λ)`: weight `λ`, operators undefined, `φ = ε = −∞`.
pub fn elementary_t(rs: &RootSystem, lambda: &LatticeVector) -> Result<CrystalGraph> {
    let node = CrystalElement::from_payload(
        rs,
        CrystalNode::TPoint {
            weight: lambda.clone(),
        },
    )?;
    Ok(CrystalGraph {
        nodes: vec![node],
        edges: Vec::new(),
        open_boundary: Vec::new(),
    })
}

/// The `i`-string crystal `B_i` restricted to a window of `n` values;
/// the extreme nodes are marked as open boundary.
pub fn elementary_b(
    rs: &RootSystem,
    i: usize,
    window: std::ops::RangeInclusive<i64>,
) -> Result<CrystalGraph> {
    check_simple(rs, i)?;
    if window.is_empty() {
        return Err(AlcoveError::InvalidInput("empty window".into()));
    }
    let (lo, hi) = (*window.start(), *window.end());
    let mut nodes = Vec::new();
    for n in (lo..=hi).rev() {
        nodes.push(CrystalElement::from_payload(rs, CrystalNode::BPoint { i, n })?);
    }
    // node index 0 is b_i(hi); f̃_i(b_i(n)) = b_i(n−1)
    let edges = (0..nodes.len().saturating_sub(1))
        .map(|k| (k, k + 1, i))
        .collect();
    let open_boundary = if nodes.len() == 1 {
        vec![0]
    } else {
        vec![0, nodes.len() - 1]
    };
    Ok(CrystalGraph {
        nodes,
        edges,
        open_boundary,
    })
}

/// One failed axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: u8,
    pub node: usize,
    pub i: Option<usize>,
    pub detail: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "axiom {} at node {}{}: {}",
            self.axiom,
            self.node,
            self.i.map(|i| format!(", i = {i}")).unwrap_or_default(),
            self.detail
        )
    }
}

/// Outcome of [`verify_axioms`].
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "all crystal axioms hold")
        } else {
            writeln!(f, "{} violation(s):", self.violations.len())?;
            for v in &self.violations {
                writeln!(f,"  {v}")?;
            }
            Ok(())
        }
    }
}

/// Check the five crystal axioms on a finite graph.
///
/// Axioms 1–3 are checked against the cached node data (so corrupted caches
/// are reported); axioms 4 and 5 recompute the operators from the payloads.
pub fn verify_axioms(rs: &RootSystem, graph: &CrystalGraph) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    let mut push = |axiom, node, i, detail| {
        report.violations.push(AxiomViolation {
            axiom,
            node,
            i,
            detail,
        });
    };
    let index: HashMap<&CrystalNode, usize> = graph
        .nodes
        .iter()
        .enumerate()
        .map(|(k, n)| (&n.payload, k))
        .collect();
    let open: HashSet<usize> = graph.open_boundary.iter().copied().collect();
    let edge_set: HashSet<(usize, usize, usize)> = graph.edges.iter().copied().collect();

    // Axiom 1: φ_i = ε_i + ⟨h_i, wt⟩ (with −∞ on both sides at once).
    for (k, node) in graph.nodes.iter().enumerate() {
        for i in 0..rs.rank() {
            match (node.eps[i], node.phi[i]) {
                (Some(e), Some(p)) => {
                    let h = rs.pairing_lattice(i, &node.weight)?;
                    if p != e + h {
                        push(1, k, Some(i), format!("φ = {p} but ε + ⟨h,wt⟩ = {}", e + h));
                    }
                }
                (None, None) => {}
                _ => push(1, k, Some(i), "exactly one of ε, φ is −∞".into()),
            }
        }
    }

    // Axioms 2 and 3 along every f̃-edge (the ẽ direction is the same edge).
    for &(a, b, i) in &graph.edges {
        let (na, nb) = (&graph.nodes[a], &graph.nodes[b]);
        match (na.eps[i], nb.eps[i]) {
            (Some(ea), Some(eb)) if eb == ea + 1 => {}
            _ => push(3, a, Some(i), format!("ε not incremented along edge to {b}")),
        }
        match (na.phi[i], nb.phi[i]) {
            (Some(pa), Some(pb)) if pb == pa - 1 => {}
            _ => push(3, a, Some(i), format!("φ not decremented along edge to {b}")),
        }
        let expected = na
            .weight
            .checked_sub(&simple_coroot(rs, i).to_coweight(rs)?)?;
        if nb.weight != expected {
            push(3, a, Some(i), format!("weight along edge to {b} is not wt − α_i^∨"));
        }
    }

    // Axiom 4 (and closure): recompute f̃ and ẽ from payloads and compare
    // with the edge set, both directions.
    for (k, node) in graph.nodes.iter().enumerate() {
        for i in 0..rs.rank() {
            match node.payload.f(rs, i)? {
                Some(target) => match index.get(&target) {
                    Some(&t) => {
                        if !edge_set.contains(&(k, t, i)) {
                            push(4, k, Some(i), format!("missing edge to {t}"));
                        }
                        match target.e(rs, i)? {
                            Some(back) if back == node.payload => {}
                            _ => push(4, k, Some(i), "ẽ_i does not invert f̃_i".into()),
                        }
                    }
                    None if open.contains(&k) => {}
                    None => push(4, k, Some(i), "f̃_i leaves the graph".into()),
                },
                None => {
                    if let Some(&(_, t, _)) = graph
                        .edges
                        .iter()
                        .find(|&&(a, _, j)| a == k && j == i)
                    {
                        push(4, k, Some(i), format!("edge to {t} but f̃_i is undefined"));
                    }
                }
            }
            if let Some(target) = node.payload.e(rs, i)? {
                if !index.contains_key(&target) && !open.contains(&k) {
                    push(4, k, Some(i), "ẽ_i leaves the graph".into());
                }
            }
        }
    }

    // Axiom 5: φ_i = −∞ forces both operators to 0.
    for (k, node) in graph.nodes.iter().enumerate() {
        for i in 0..rs.rank() {
            if node.phi[i].is_none()
                && (node.payload.e(rs, i)?.is_some() || node.payload.f(rs, i)?.is_some())
            {
                push(5, k, Some(i), "operators defined despite φ = −∞".into());
            }
        }
    }

    Ok(report)
}

// ---------------------------------------------------------------------------
// Export

/// JSON node: weight plus, for gallery crystals, the gallery itself.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrystalNodeDto {
    pub weight: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gallery: Option<GalleryDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrystalEdgeDto {
    pub from: usize,
    pub to: usize,
    /// 1-based simple-root index.
    pub i: usize,
}

/// Wire format: `{"nodes": [...], "edges": [{"from":k,"to":l,"i":i}]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrystalGraphDto {
    pub nodes: Vec<CrystalNodeDto>,
    pub edges: Vec<CrystalEdgeDto>,
}

pub fn crystal_to_dto(
    rs: &RootSystem,
    graph: &CrystalGraph,
    include_galleries: bool,
) -> Result<CrystalGraphDto> {
    let nodes = graph
        .nodes
        .iter()
        .map(|n| {
            let gallery = match (&n.payload, include_galleries) {
                (CrystalNode::Gallery(g), true) => Some(gallery_to_dto(rs, g)?),
                _ => None,
            };
            Ok(CrystalNodeDto {
                weight: n.weight.coords().to_vec(),
                gallery,
            })
        })
        .collect::<Result<_>>()?;
    let edges = graph
        .edges
        .iter()
        .map(|&(from, to, i)| CrystalEdgeDto { from, to, i: i + 1 })
        .collect();
    Ok(CrystalGraphDto { nodes, edges })
}

/// Rebuild a gallery crystal from its wire form (requires galleries in the
/// node payloads).
pub fn crystal_from_dto(rs: &RootSystem, dto: &CrystalGraphDto) -> Result<CrystalGraph> {
    let nodes = dto
        .nodes
        .iter()
        .map(|n| {
            let g = n.gallery.as_ref().ok_or_else(|| {
                AlcoveError::InvalidInput("crystal node without gallery payload".into())
            })?;
            CrystalElement::from_payload(rs, CrystalNode::Gallery(gallery_from_dto(rs, g)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let edges = dto
        .edges
        .iter()
        .map(|e| {
            if e.i == 0 || e.i > rs.rank() {
                return Err(AlcoveError::RootIndexOutOfRange {
                    index: e.i,
                    count: rs.rank(),
                });
            }
            Ok((e.from, e.to, e.i - 1))
        })
        .collect::<Result<_>>()?;
    Ok(CrystalGraph {
        nodes,
        edges,
        open_boundary: Vec::new(),
    })
}

/// DOT rendering: nodes labeled by weight, edges labeled by the (1-based)
/// operator index.
pub fn crystal_to_dot(graph: &CrystalGraph) -> String {
    let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
    for (k, n) in graph.nodes.iter().enumerate() {
        let coords: Vec<String> = n.weight.coords().iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("  n{k} [label=\"({})\"];\n", coords.join(",")));
    }
    for &(a, b, i) in &graph.edges {
        out.push_str(&format!("  n{a} -> n{b} [label=\"{}\"];\n", i + 1));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{
        enumerate_ls, enumerate_same_type, gallery_type, is_ls, minimal_gallery, weight,
    };
    use crate::root_data::weyl_dim;

    fn a2() -> RootSystem {
        RootSystem::type_a(2).unwrap()
    }

    fn theta() -> LatticeVector {
        LatticeVector::coweight(vec![1, 1])
    }

    #[test]
    fn epsilon_phi_examples() {
        let rs = a2();
        let gamma = minimal_gallery(&rs, &theta()).unwrap();
        assert_eq!(epsilon(&rs, &gamma, 0).unwrap(), 0);
        assert_eq!(phi(&rs, &gamma, 0).unwrap(), 1);
        assert_eq!(phi(&rs, &gamma, 1).unwrap(), 1);
        let down = f_op(&rs, &gamma, 0).unwrap().unwrap();
        assert_eq!(epsilon(&rs, &down, 0).unwrap(), 1);
        // φ_i(γ_λ) = ⟨α_i, λ⟩ on based galleries
        for coords in [vec![2i64, 0], vec![2, 1], vec![0, 3]] {
            let lam = LatticeVector::coweight(coords.clone());
            let g = minimal_gallery(&rs, &lam).unwrap();
            for i in 0..2 {
                assert_eq!(phi(&rs, &g, i).unwrap(), coords[i]);
                assert!(epsilon(&rs, &g, i).unwrap() >= 0);
            }
        }
    }

    #[test]
    fn e_f_examples() {
        let rs = a2();
        let gamma = minimal_gallery(&rs, &theta()).unwrap();
        assert!(e_op(&rs, &gamma, 0).unwrap().is_none());
        assert!(e_op(&rs, &gamma, 1).unwrap().is_none());

        let f2 = f_op(&rs, &gamma, 1).unwrap().unwrap();
        // endpoint drops to θ∨ − α₂∨ = α₁∨
        assert_eq!(weight(&rs, &f2).unwrap().coords(), &[2, -1]);
        assert_eq!(e_op(&rs, &f2, 1).unwrap().unwrap(), gamma);
        assert_eq!(gallery_type(&rs, &f2).unwrap(), gallery_type(&rs, &gamma).unwrap());

        // f̃_i is the unique LS gallery at its weight
        let ls = enumerate_ls(&rs, &gamma).unwrap();
        let same: Vec<&Gallery> = ls
            .iter()
            .filter(|g| weight(&rs, g).unwrap().coords() == [2, -1])
            .collect();
        assert_eq!(same, vec![&f2]);

        // repeated lowering terminates
        let mut cur = gamma.clone();
        let mut steps = 0;
        loop {
            let mut advanced = false;
            for i in 0..2 {
                if let Some(next) = f_op(&rs, &cur, i).unwrap() {
                    cur = next;
                    advanced = true;
                    steps += 1;
                    break;
                }
            }
            if !advanced {
                break;
            }
            assert!(steps < 100);
        }
        for i in 0..2 {
            assert_eq!(phi(&rs, &cur, i).unwrap(), 0);
        }
    }

    #[test]
    fn operator_axioms_exhaustive_small() {
        // axioms 2-4 on every gallery of the fixed types in A₁ and A₂
        for (rank, coords) in [(1usize, vec![4i64]), (2, vec![1, 1]), (2, vec![2, 1])] {
            let rs = RootSystem::type_a(rank).unwrap();
            let lam = LatticeVector::coweight(coords);
            let gamma = minimal_gallery(&rs, &lam).unwrap();
            let all = enumerate_same_type(&rs, &gamma).unwrap();
            for g in &all {
                let tg = gallery_type(&rs, g).unwrap();
                for i in 0..rank {
                    if let Some(fg) = f_op(&rs, g, i).unwrap() {
                        assert_eq!(e_op(&rs, &fg, i).unwrap().as_ref(), Some(g));
                        assert_eq!(epsilon(&rs, &fg, i).unwrap(), epsilon(&rs, g, i).unwrap() + 1);
                        assert_eq!(phi(&rs, &fg, i).unwrap(), phi(&rs, g, i).unwrap() - 1);
                        let wt_drop = weight(&rs, g)
                            .unwrap()
                            .checked_sub(&weight(&rs, &fg).unwrap())
                            .unwrap();
                        let alpha = simple_coroot(&rs, i).to_coweight(&rs).unwrap();
                        assert_eq!(wt_drop, alpha);
                        assert_eq!(gallery_type(&rs, &fg).unwrap(), tg);
                    }
                    if let Some(eg) = e_op(&rs, g, i).unwrap() {
                        assert_eq!(f_op(&rs, &eg, i).unwrap().as_ref(), Some(g));
                        assert_eq!(gallery_type(&rs, &eg).unwrap(), tg);
                    }
                    // axiom 1 everywhere
                    let wt = weight(&rs, g).unwrap();
                    assert_eq!(
                        phi(&rs, g, i).unwrap(),
                        epsilon(&rs, g, i).unwrap() + rs.pairing_lattice(i, &wt).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn ls_closure_under_operators() {
        let rs = a2();
        for coords in [vec![1i64, 1], vec![2, 2], vec![1, 2]] {
            let lam = LatticeVector::coweight(coords);
            let gamma = minimal_gallery(&rs, &lam).unwrap();
            let ls = enumerate_ls(&rs, &gamma).unwrap();
            let ls_set: HashSet<&Gallery> = ls.iter().collect();
            for g in &ls {
                for i in 0..rs.rank() {
                    for h in [f_op(&rs, g, i).unwrap(), e_op(&rs, g, i).unwrap()]
                        .into_iter()
                        .flatten()
                    {
                        assert!(is_ls(&rs, &h, &gamma).unwrap());
                        assert!(ls_set.contains(&h));
                    }
                }
            }
        }
    }

    #[test]
    fn generate_crystal_sizes() {
        let rs = a2();
        let g8 = generate_crystal(&rs, &minimal_gallery(&rs, &theta()).unwrap(), 10_000).unwrap();
        assert_eq!(g8.node_count(), 8);

        let g1 = generate_crystal(
            &rs,
            &minimal_gallery(&rs, &LatticeVector::zero(2)).unwrap(),
            10_000,
        )
        .unwrap();
        assert_eq!(g1.node_count(), 1);
        assert!(g1.edges.is_empty());

        let lam = LatticeVector::coweight(vec![1, 0]);
        let g3 = generate_crystal(&rs, &minimal_gallery(&rs, &lam).unwrap(), 10_000).unwrap();
        assert_eq!(g3.node_count(), 3);
        // single string alternating i = 1, 2
        assert_eq!(g3.edges.len(), 2);
        let labels: Vec<usize> = g3.edges.iter().map(|&(_, _, i)| i).collect();
        assert_eq!(labels, vec![0, 1]);

        let err = generate_crystal(&rs, &minimal_gallery(&rs, &theta()).unwrap(), 3);
        assert!(matches!(err, Err(AlcoveError::BudgetExceeded { .. })));
    }

    #[test]
    fn crystal_matches_ls_enumeration() {
        for (rank, coords_list) in [
            (2usize, vec![vec![1i64, 1], vec![2, 0], vec![1, 2]]),
            (3, vec![vec![1, 0, 1], vec![0, 1, 0], vec![1, 1, 0]]),
        ] {
            let rs = RootSystem::type_a(rank).unwrap();
            for coords in coords_list {
                let lam = LatticeVector::coweight(coords);
                let gamma = minimal_gallery(&rs, &lam).unwrap();
                let graph = generate_crystal(&rs, &gamma, 100_000).unwrap();
                assert_eq!(graph.node_count() as u64, weyl_dim(&rs, &lam).unwrap());
                let ls: HashSet<Gallery> =
                    enumerate_ls(&rs, &gamma).unwrap().into_iter().collect();
                let nodes: HashSet<Gallery> = graph
                    .nodes
                    .iter()
                    .map(|n| match &n.payload {
                        CrystalNode::Gallery(g) => g.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                assert_eq!(ls, nodes);
                // unique source, of weight λ
                let sources = graph.sources();
                assert_eq!(sources.len(), 1);
                assert_eq!(
                    graph.nodes[sources[0]].weight,
                    lam.to_coweight(&rs).unwrap()
                );
            }
        }
    }

    #[test]
    fn axiom_checker_accepts_and_rejects() {
        let rs = a2();
        let graph = generate_crystal(&rs, &minimal_gallery(&rs, &theta()).unwrap(), 10_000).unwrap();
        assert!(verify_axioms(&rs, &graph).unwrap().passed());

        let mut broken = graph.clone();
        broken.nodes[3].eps[0] = broken.nodes[3].eps[0].map(|e| e + 5);
        let report = verify_axioms(&rs, &broken).unwrap();
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.node == 3));
    }

    #[test]
    fn elementary_crystals() {
        let rs = a2();
        let t = elementary_t(&rs, &theta()).unwrap();
        assert_eq!(t.node_count(), 1);
        assert!(verify_axioms(&rs, &t).unwrap().passed());
        assert!(t.nodes[0].payload.e(&rs, 0).unwrap().is_none());
        assert!(t.nodes[0].payload.f(&rs, 1).unwrap().is_none());
        assert!(t.nodes[0].eps[0].is_none());

        let b = elementary_b(&rs, 0, -2..=2).unwrap();
        assert_eq!(b.node_count(), 5);
        assert!(verify_axioms(&rs, &b).unwrap().passed());
        // ẽ_j, f̃_j vanish for j ≠ i
        for n in &b.nodes {
            assert!(n.payload.e(&rs, 1).unwrap().is_none());
            assert!(n.payload.f(&rs, 1).unwrap().is_none());
            assert!(n.eps[1].is_none());
            // axiom 1 with wt = n·α_i^∨: n = −n + ⟨α_1, n α_1^∨⟩
            let h = rs.pairing_lattice(0, &n.weight).unwrap();
            assert_eq!(n.phi[0].unwrap(), n.eps[0].unwrap() + h);
        }
        let single = elementary_b(&rs, 0, 0..=0).unwrap();
        assert_eq!(single.node_count(), 1);
        #[allow(clippy::reversed_empty_ranges)]
        let empty = elementary_b(&rs, 0, 3..=1);
        assert!(empty.is_err());
    }

    #[test]
    fn exports() {
        let rs = a2();
        let graph = generate_crystal(
            &rs,
            &minimal_gallery(&rs, &LatticeVector::coweight(vec![1, 0])).unwrap(),
            1000,
        )
        .unwrap();
        let dot = crystal_to_dot(&graph);
        assert!(dot.starts_with("digraph"));
        assert!(dot.contains("label=\"1\""));
        let dto = crystal_to_dto(&rs, &graph, true).unwrap();
        let text = serde_json::to_string(&dto).unwrap();
        let parsed: CrystalGraphDto = serde_json::from_str(&text).unwrap();
        let back = crystal_from_dto(&rs, &parsed).unwrap();
        assert_eq!(back.node_count(), graph.node_count());
        assert_eq!(back.edges, graph.edges);
        assert!(verify_axioms(&rs, &back).unwrap().passed());
    }
}
