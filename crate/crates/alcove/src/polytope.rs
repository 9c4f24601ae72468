//! Exact lattice-polytope arithmetic in coweight space: convex hulls,
//! Minkowski sums, membership, and the inclusion–exclusion union check, with
//! full polygon arithmetic (clipping, shoelace areas) in rank 2 and exact
//! LP feasibility elsewhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{AlcoveError, Result};
use crate::linalg;
use crate::root_data::{Rat, RationalPoint};

/// Convex hull of finitely many rational points, stored by its canonical
/// (deduplicated, lexicographically sorted) vertex list. For rank-2 ambient
/// space a counterclockwise boundary order is kept alongside for area and
/// clipping work.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePolytope {
    vertices: Vec<RationalPoint>,
    /// Indices into `vertices` in counterclockwise boundary order (rank-2
    /// ambient space with a full-dimensional or degenerate polygon).
    ccw: Option<Vec<usize>>,
    dim: usize,
}

impl LatticePolytope {
    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Dimension of the affine span of the vertex set.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_rank(&self) -> usize {
        self.vertices[0].rank()
    }

    /// Vertices in counterclockwise boundary order (rank-2 only).
    pub fn boundary_ccw(&self) -> Option<Vec<RationalPoint>> {
        self.ccw
            .as_ref()
            .map(|order| order.iter().map(|&k| self.vertices[k].clone()).collect())
    }

    pub fn translate(&self, by: &RationalPoint) -> LatticePolytope {
        let moved: Vec<RationalPoint> = self.vertices.iter().map(|v| v.add(by)).collect();
        convex_hull(&moved).expect("translate preserves hulls")
    }

    pub fn dilate(&self, factor: i64) -> LatticePolytope {
        let scaled: Vec<RationalPoint> = self
            .vertices
            .iter()
            .map(|v| v.scale(Rat::from_integer(factor)))
            .collect();
        convex_hull(&scaled).expect("dilation preserves hulls")
    }
}

/// Canonical convex hull of a nonempty point set.
pub fn convex_hull(points: &[RationalPoint]) -> Result<LatticePolytope> {
    if points.is_empty() {
        return Err(AlcoveError::EmptyPointSet);
    }
    let rank = points[0].rank();
    if points.iter().any(|p| p.rank() != rank) {
        return Err(AlcoveError::RankMismatch {
            expected: rank,
            got: points.iter().map(|p| p.rank()).find(|&r| r != rank).unwrap(),
        });
    }
    let mut unique: Vec<RationalPoint> = points.to_vec();
    unique.sort();
    unique.dedup();

    let dim = affine_dim(&unique);
    let mut vertices = if rank == 2 {
        hull_vertices_rank2(&unique)
    } else {
        hull_vertices_lp(&unique)
    };
    vertices.sort();
    let ccw = (rank == 2).then(|| ccw_order(&vertices));
    Ok(LatticePolytope { vertices, ccw, dim })
}

fn affine_dim(points: &[RationalPoint]) -> usize {
    if points.len() <= 1 {
        return 0;
    }
    let base = &points[0];
    let rows: Vec<Vec<Rat>> = points[1..]
        .iter()
        .map(|p| p.sub(base).coords().to_vec())
        .collect();
    linalg::rank(&rows)
}

/// Andrew's monotone chain over exact rationals; returns the hull vertex set.
fn hull_vertices_rank2(sorted_unique: &[RationalPoint]) -> Vec<RationalPoint> {
    let pts = sorted_unique;
    if pts.len() <= 2 {
        return pts.to_vec();
    }
    let cross = |o: &RationalPoint, a: &RationalPoint, b: &RationalPoint| -> Rat {
        let (ox, oy) = (o.coords()[0], o.coords()[1]);
        let (ax, ay) = (a.coords()[0], a.coords()[1]);
        let (bx, by) = (b.coords()[0], b.coords()[1]);
        (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)
    };
    let mut lower: Vec<RationalPoint> = Vec::new();
    for p in pts {
        while lower.len() >= 2
            && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RationalPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.is_empty() {
        // all collinear: keep the two extremes
        return vec![pts[0].clone(), pts[pts.len() - 1].clone()];
    }
    lower
}

/// Hull vertices in arbitrary rank: `p` is a vertex iff it is not a convex
/// combination of the other points (exact LP feasibility).
fn hull_vertices_lp(unique: &[RationalPoint]) -> Vec<RationalPoint> {
    if unique.len() <= 1 {
        return unique.to_vec();
    }
    unique
        .iter()
        .enumerate()
        .filter(|(k, p)| {
            let others: Vec<&RationalPoint> = unique
                .iter()
                .enumerate()
                .filter(|(j, _)| j != k)
                .map(|(_, q)| q)
                .collect();
            !in_convex_hull_of(p, &others)
        })
        .map(|(_, p)| p.clone())
        .collect()
}

fn ccw_order(vertices: &[RationalPoint]) -> Vec<usize> {
    if vertices.len() <= 2 {
        return (0..vertices.len()).collect();
    }
    let hull = hull_vertices_rank2(vertices);
    hull.iter()
        .map(|p| vertices.iter().position(|v| v == p).expect("hull vertex"))
        .collect()
}

fn to_big(r: Rat) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

/// Exact feasibility of `x ∈ conv(points)` by phase-one simplex with Bland's
/// rule over big rationals.
fn in_convex_hull_of(x: &RationalPoint, points: &[&RationalPoint]) -> bool {
    if points.is_empty() {
        return false;
    }
    let rank = x.rank();
    let ncols = points.len();
    // Rows: Σ λ_j p_j = x (rank rows), Σ λ_j = 1; λ ≥ 0.
    let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(rank + 1);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(rank + 1);
    for i in 0..rank {
        let row: Vec<BigRational> = points.iter().map(|p| to_big(p.coords()[i])).collect();
        rows.push(row);
        rhs.push(to_big(x.coords()[i]));
    }
    rows.push(vec![BigRational::one(); ncols]);
    rhs.push(BigRational::one());
    lp_feasible(rows, rhs)
}

/// Phase-one simplex: does `Az = b, z ≥ 0` have a solution? Artificial
/// variables start basic; Bland's rule guarantees termination.
fn lp_feasible(mut rows: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> bool {
    let m = rows.len();
    let n = rows[0].len();
    for i in 0..m {
        if rhs[i].is_negative() {
            for v in rows[i].iter_mut() {
                *v = -v.clone();
            }
            rhs[i] = -rhs[i].clone();
        }
    }
    // tableau columns: n original + m artificial
    let total = n + m;
    let mut tab: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row = rows[i].clone();
            for j in 0..m {
                row.push(if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                });
            }
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // objective: minimize sum of artificials; expressed as reduced costs
    let mut cost: Vec<BigRational> = vec![BigRational::zero(); total + 1];
    for i in 0..m {
        for j in 0..=total {
            let add = tab[i][j].clone();
            cost[j] += add;
        }
    }

    // entering variable: first column with positive reduced cost (Bland)
    while let Some(enter) = (0..total).find(|&j| cost[j].is_positive() && !basis.contains(&j)) {
        // leaving: minimal ratio, ties by smallest basis index (Bland)
        let mut leave: Option<usize> = None;
        let mut best: Option<BigRational> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = tab[i][total].clone() / tab[i][enter].clone();
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(li) = leave else {
            break; // phase-one objective is bounded below, so no pivot row means done
        };
        // pivot
        let pivot = tab[li][enter].clone();
        for j in 0..=total {
            tab[li][j] /= pivot.clone();
        }
        for i in 0..m {
            if i != li && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..=total {
                    let sub = f.clone() * tab[li][j].clone();
                    tab[i][j] -= sub;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for j in 0..=total {
                let sub = f.clone() * tab[li][j].clone();
                cost[j] -= sub;
            }
        }
        basis[li] = enter;
    }
    cost[total].is_zero()

}

/// `P +_M Q`: hull of the pairwise vertex sums.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.ambient_rank() != q.ambient_rank() {
        return Err(AlcoveError::RankMismatch {
            expected: p.ambient_rank(),
            got: q.ambient_rank(),
        });
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(a.add(b));
        }
    }
    convex_hull(&sums)
}

/// Membership in the closed hull: exact half-plane tests in rank 2,
/// LP feasibility otherwise.
pub fn contains(p: &LatticePolytope, x: &RationalPoint) -> Result<bool> {
    if x.rank() != p.ambient_rank() {
        return Err(AlcoveError::RankMismatch {
            expected: p.ambient_rank(),
            got: x.rank(),
        });
    }
    if p.ambient_rank() == 2 {
        return Ok(contains_rank2(p, x));
    }
    let refs: Vec<&RationalPoint> = p.vertices.iter().collect();
    Ok(in_convex_hull_of(x, &refs))
}

fn contains_rank2(p: &LatticePolytope, x: &RationalPoint) -> bool {
    let boundary = p.boundary_ccw().expect("rank-2 polytope has an order");
    match boundary.len() {
        0 => false,
        1 => boundary[0] == *x,
        2 => on_segment(&boundary[0], &boundary[1], x),
        _ => {
            let n = boundary.len();
            (0..n).all(|k| {
                let a = &boundary[k];
                let b = &boundary[(k + 1) % n];
                let cx = (b.coords()[0] - a.coords()[0]) * (x.coords()[1] - a.coords()[1])
                    - (b.coords()[1] - a.coords()[1]) * (x.coords()[0] - a.coords()[0]);
                !cx.is_negative()
            })
        }
    }
}

fn on_segment(a: &RationalPoint, b: &RationalPoint, x: &RationalPoint) -> bool {
    let cross = (b.coords()[0] - a.coords()[0]) * (x.coords()[1] - a.coords()[1])
        - (b.coords()[1] - a.coords()[1]) * (x.coords()[0] - a.coords()[0]);
    if !cross.is_zero() {
        return false;
    }
    let dot = (x.coords()[0] - a.coords()[0]) * (b.coords()[0] - a.coords()[0])
        + (x.coords()[1] - a.coords()[1]) * (b.coords()[1] - a.coords()[1]);
    let len2 = (b.coords()[0] - a.coords()[0]) * (b.coords()[0] - a.coords()[0])
        + (b.coords()[1] - a.coords()[1]) * (b.coords()[1] - a.coords()[1]);
    !dot.is_negative() && dot <= len2
}

/// Exact area of a rank-2 polytope by the shoelace formula.
pub fn area(p: &LatticePolytope) -> Result<Rat> {
    if p.ambient_rank() != 2 {
        return Err(AlcoveError::UnsupportedRank(
            "area requires rank-2 ambient space".into(),
        ));
    }
    let boundary = p.boundary_ccw().expect("rank-2 order");
    Ok(shoelace(&boundary))
}

fn shoelace(boundary: &[RationalPoint]) -> Rat {
    if boundary.len() < 3 {
        return Rat::zero();
    }
    let n = boundary.len();
    let mut acc = Rat::zero();
    for k in 0..n {
        let a = &boundary[k];
        let b = &boundary[(k + 1) % n];
        acc += a.coords()[0] * b.coords()[1] - b.coords()[0] * a.coords()[1];
    }
    acc / Rat::from_integer(2)
}

/// Sutherland–Hodgman clipping of a convex polygon by another, exactly.
/// Returns the boundary of the intersection (possibly empty or degenerate).
fn clip_polygons(subject: &[RationalPoint], clip: &[RationalPoint]) -> Vec<RationalPoint> {
    let mut out: Vec<RationalPoint> = subject.to_vec();
    if clip.len() < 3 {
        // degenerate clip region: intersection has zero area, irrelevant for
        // the inclusion–exclusion sums
        return Vec::new();
    }
    let n = clip.len();
    for k in 0..n {
        if out.is_empty() {
            break;
        }
        let a = &clip[k];
        let b = &clip[(k + 1) % n];
        let side = |p: &RationalPoint| -> Rat {
            (b.coords()[0] - a.coords()[0]) * (p.coords()[1] - a.coords()[1])
                - (b.coords()[1] - a.coords()[1]) * (p.coords()[0] - a.coords()[0])
        };
        let input = out.clone();
        out.clear();
        let m = input.len();
        for i in 0..m {
            let cur = &input[i];
            let next = &input[(i + 1) % m];
            let (sc, sn) = (side(cur), side(next));
            if !sc.is_negative() {
                out.push(cur.clone());
            }
            if (sc.is_negative() && sn.is_positive()) || (sc.is_positive() && sn.is_negative()) {
                let t = sc / (sc - sn);
                let inter = RationalPoint::new(vec![
                    cur.coords()[0] + t * (next.coords()[0] - cur.coords()[0]),
                    cur.coords()[1] + t * (next.coords()[1] - cur.coords()[1]),
                ]);
                out.push(inter);
            }
        }
    }
    out
}

fn intersection_area(p: &LatticePolytope, q: &LatticePolytope) -> Rat {
    let bp = p.boundary_ccw().expect("rank-2");
    let bq = q.boundary_ccw().expect("rank-2");
    if bp.len() < 3 || bq.len() < 3 {
        return Rat::zero();
    }
    shoelace(&clip_polygons(&bp, &bq))
}

/// Inclusion–exclusion check that the parts tile the whole: every part must
/// be contained in `whole` and the areas must balance exactly. Rank 2 only;
/// at most three parts.
pub fn union_equals(parts: &[LatticePolytope], whole: &LatticePolytope) -> Result<bool> {
    if whole.ambient_rank() != 2 || parts.iter().any(|p| p.ambient_rank() != 2) {
        return Err(AlcoveError::UnsupportedRank(
            "union_equals requires rank-2 ambient space".into(),
        ));
    }
    if parts.is_empty() || parts.len() > 3 {
        return Err(AlcoveError::InvalidInput(
            "union_equals supports 1 to 3 parts".into(),
        ));
    }
    for part in parts {
        for v in &part.vertices {
            if !contains(whole, v)? {
                return Ok(false);
            }
        }
    }
    let mut total = Rat::zero();
    for part in parts {
        total += area(part)?;
    }
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            total -= intersection_area(&parts[i], &parts[j]);
        }
    }
    if parts.len() == 3 {
        let pq = clip_polygons(
            &parts[0].boundary_ccw().unwrap(),
            &parts[1].boundary_ccw().unwrap(),
        );
        if pq.len() >= 3 {
            total += shoelace(&clip_polygons(&pq, &parts[2].boundary_ccw().unwrap()));
        }
    }
    Ok(total == area(whole)?)
}

/// The four primitive rank-2 generators in coroot coordinates:
/// two segments and two triangles.
pub struct PrimitiveA2 {
    pub alpha1: LatticePolytope,
    pub alpha2: LatticePolytope,
    pub beta1: LatticePolytope,
    pub beta2: LatticePolytope,
}

pub fn primitive_a2() -> PrimitiveA2 {
    let pt = |x: i64, y: i64| RationalPoint::new(vec![Rat::from_integer(x), Rat::from_integer(y)]);
    let hull = |pts: Vec<RationalPoint>| convex_hull(&pts).expect("fixed vertex data");
    PrimitiveA2 {
        alpha1: hull(vec![pt(0, 0), pt(1, 0)]),
        alpha2: hull(vec![pt(0, 0), pt(0, 1)]),
        beta1: hull(vec![pt(0, 0), pt(1, 0), pt(1, 1)]),
        beta2: hull(vec![pt(0, 0), pt(0, 1), pt(1, 1)]),
    }
}

/// Hulls are equal iff each vertex set lies in the other's hull; valid in
/// any ambient rank (used by the cross-backend checks).
pub fn hulls_equal(p: &LatticePolytope, q: &LatticePolytope) -> Result<bool> {
    if p.ambient_rank() != q.ambient_rank() {
        return Err(AlcoveError::RankMismatch {
            expected: p.ambient_rank(),
            got: q.ambient_rank(),
        });
    }
    for v in &p.vertices {
        if !contains(q, v)? {
            return Ok(false);
        }
    }
    for v in &q.vertices {
        if !contains(p, v)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// JSON form

/// Wire format: `{"vertices": [["p/q", "r/s"], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeDto {
    pub vertices: Vec<Vec<String>>,
}

pub fn polytope_to_dto(p: &LatticePolytope) -> PolytopeDto {
    PolytopeDto {
        vertices: p
            .vertices
            .iter()
            .map(|v| v.coords().iter().map(|c| c.to_string()).collect())
            .collect(),
    }
}

pub fn polytope_from_dto(dto: &PolytopeDto) -> Result<LatticePolytope> {
    let points = dto
        .vertices
        .iter()
        .map(|coords| {
            coords
                .iter()
                .map(|s| {
                    s.parse::<Rat>()
                        .map_err(|e| AlcoveError::InvalidInput(format!("bad rational {s:?}: {e}")))
                })
                .collect::<Result<Vec<Rat>>>()
                .map(RationalPoint::new)
        })
        .collect::<Result<Vec<RationalPoint>>>()?;
    convex_hull(&points)
}

/// Embed integer dimension vectors as coroot-coordinate points
/// (`vertex i ↦ α_i^∨`).
pub fn dim_vector_point(dims: &[i64]) -> RationalPoint {
    RationalPoint::new(dims.iter().map(|&d| Rat::from_integer(d)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> RationalPoint {
        RationalPoint::new(vec![Rat::from_integer(x), Rat::from_integer(y)])
    }

    #[test]
    fn hull_examples() {
        let beta1 = convex_hull(&[pt(0, 0), pt(1, 0), pt(1, 1)]).unwrap();
        assert_eq!(beta1, primitive_a2().beta1);
        assert_eq!(beta1.dim(), 2);

        let single = convex_hull(&[pt(3, -2)]).unwrap();
        assert_eq!(single.vertices().len(), 1);
        assert_eq!(single.dim(), 0);

        let segment = convex_hull(&[pt(0, 0), pt(1, 0), pt(2, 0)]).unwrap();
        assert_eq!(segment.vertices().len(), 2);
        assert_eq!(segment.dim(), 1);
        assert_eq!(segment.vertices(), &[pt(0, 0), pt(2, 0)]);

        assert!(convex_hull(&[]).is_err());
    }

    #[test]
    fn hull_idempotent() {
        for p in [
            primitive_a2().beta1,
            primitive_a2().alpha1,
            convex_hull(&[pt(0, 0), pt(2, 1), pt(1, 2), pt(1, 1), pt(2, 2)]).unwrap(),
        ] {
            assert_eq!(convex_hull(p.vertices()).unwrap(), p);
        }
    }

    #[test]
    fn minkowski_examples() {
        let prim = primitive_a2();
        let para = minkowski_sum(&prim.alpha1, &prim.alpha2).unwrap();
        assert_eq!(
            para.vertices(),
            &[pt(0, 0), pt(0, 1), pt(1, 0), pt(1, 1)]
        );
        let origin = convex_hull(&[pt(0, 0)]).unwrap();
        assert_eq!(minkowski_sum(&prim.beta1, &origin).unwrap(), prim.beta1);
        assert_eq!(
            minkowski_sum(&prim.alpha1, &prim.alpha2).unwrap(),
            minkowski_sum(&prim.alpha2, &prim.alpha1).unwrap()
        );
    }

    #[test]
    fn minkowski_assoc_comm_on_primitives() {
        let prim = primitive_a2();
        let gens = [prim.alpha1, prim.alpha2, prim.beta1, prim.beta2];
        for a in &gens {
            for b in &gens {
                assert_eq!(minkowski_sum(a, b).unwrap(), minkowski_sum(b, a).unwrap());
                for c in &gens {
                    let left = minkowski_sum(&minkowski_sum(a, b).unwrap(), c).unwrap();
                    let right = minkowski_sum(a, &minkowski_sum(b, c).unwrap()).unwrap();
                    assert_eq!(left, right);
                    for d in &gens {
                        let four1 =
                            minkowski_sum(&minkowski_sum(a, b).unwrap(), &minkowski_sum(c, d).unwrap())
                                .unwrap();
                        let four2 =
                            minkowski_sum(&left, d).unwrap();
                        assert_eq!(four1, four2);
                    }
                }
            }
        }
    }

    #[test]
    fn minkowski_vertices_are_pairwise_sums() {
        let prim = primitive_a2();
        let sum = minkowski_sum(&prim.beta1, &prim.beta2).unwrap();
        for v in sum.vertices() {
            let mut found = false;
            for a in prim.beta1.vertices() {
                for b in prim.beta2.vertices() {
                    if a.add(b) == *v {
                        found = true;
                    }
                }
            }
            assert!(found);
        }
    }

    #[test]
    fn contains_examples() {
        let prim = primitive_a2();
        for v in prim.beta1.vertices() {
            assert!(contains(&prim.beta1, v).unwrap());
        }
        let bary = RationalPoint::barycenter(prim.beta1.vertices());
        assert!(contains(&prim.beta1, &bary).unwrap());
        // θ∨ + α₁∨ = (2,1) lies outside β₁
        assert!(!contains(&prim.beta1, &pt(2, 1)).unwrap());
        // segment membership
        assert!(contains(&prim.alpha1, &RationalPoint::new(vec![Rat::new(1, 2), Rat::zero()])).unwrap());
        assert!(!contains(&prim.alpha1, &pt(2, 0)).unwrap());
    }

    #[test]
    fn contains_rank3_lp() {
        let p3 = |x: i64, y: i64, z: i64| {
            RationalPoint::new(vec![
                Rat::from_integer(x),
                Rat::from_integer(y),
                Rat::from_integer(z),
            ])
        };
        let simplex =
            convex_hull(&[p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0), p3(0, 0, 1)]).unwrap();
        assert_eq!(simplex.vertices().len(), 4);
        assert_eq!(simplex.dim(), 3);
        let inside = RationalPoint::new(vec![Rat::new(1, 4), Rat::new(1, 4), Rat::new(1, 4)]);
        assert!(contains(&simplex, &inside).unwrap());
        assert!(!contains(&simplex, &p3(1, 1, 1)).unwrap());
        // interior points are filtered from hulls
        let with_interior = convex_hull(&[
            p3(0, 0, 0),
            p3(1, 0, 0),
            p3(0, 1, 0),
            p3(0, 0, 1),
            p3(0, 0, 0),
        ])
        .unwrap();
        assert_eq!(with_interior, simplex);
    }

    #[test]
    fn union_examples() {
        let prim = primitive_a2();
        let whole = minkowski_sum(&prim.alpha1, &prim.alpha2).unwrap();
        assert!(union_equals(
            &[prim.beta1.clone(), prim.beta2.clone()],
            &whole
        )
        .unwrap());
        assert!(!union_equals(std::slice::from_ref(&prim.beta1), &whole).unwrap());
        assert!(union_equals(std::slice::from_ref(&whole), &whole).unwrap());
        // the identity also holds for degenerate polytopes
        assert!(union_equals(std::slice::from_ref(&prim.alpha1), &prim.alpha1).unwrap());
        // stability under dilation
        for k in [2i64, 3] {
            assert!(union_equals(
                &[prim.beta1.dilate(k), prim.beta2.dilate(k)],
                &whole.dilate(k)
            )
            .unwrap());
        }
        assert!(union_equals(&[], &whole).is_err());
    }

    #[test]
    fn primitive_fixtures() {
        let prim = primitive_a2();
        assert_ne!(prim.beta1, prim.beta2);
        assert_eq!(prim.beta1.vertices(), &[pt(0, 0), pt(1, 0), pt(1, 1)]);
        assert_eq!(prim.beta2.vertices(), &[pt(0, 0), pt(0, 1), pt(1, 1)]);
        assert_eq!(area(&prim.beta1).unwrap(), Rat::new(1, 2));
        assert_eq!(area(&prim.alpha1).unwrap(), Rat::zero());
    }

    #[test]
    fn polytope_json_roundtrip() {
        let prim = primitive_a2();
        let dto = polytope_to_dto(&prim.beta1);
        let text = serde_json::to_string(&dto).unwrap();
        let back: PolytopeDto = serde_json::from_str(&text).unwrap();
        assert_eq!(polytope_from_dto(&back).unwrap(), prim.beta1);
    }

    #[test]
    fn proptest_hull_invariants() {
        use proptest::prelude::*;
        let mut runner = proptest::test_runner::TestRunner::default();
        runner
            .run(
                &proptest::collection::vec((-6i64..=6, -6i64..=6), 1..12),
                |raw| {
                    let pts: Vec<RationalPoint> =
                        raw.iter().map(|&(x, y)| pt(x, y)).collect();
                    let hull = convex_hull(&pts).unwrap();
                    // idempotence
                    prop_assert_eq!(&convex_hull(hull.vertices()).unwrap(), &hull);
                    // all inputs inside
                    for p in &pts {
                        prop_assert!(contains(&hull, p).unwrap());
                    }
                    // no vertex inside the hull of the others
                    for (k, v) in hull.vertices().iter().enumerate() {
                        let others: Vec<RationalPoint> = hull
                            .vertices()
                            .iter()
                            .enumerate()
                            .filter(|(j, _)| *j != k)
                            .map(|(_, q)| q.clone())
                            .collect();
                        if !others.is_empty() {
                            let other_hull = convex_hull(&others).unwrap();
                            prop_assert!(!contains(&other_hull, v).unwrap());
                        }
                    }
                    Ok(())
                },
            )
            .unwrap();
    }
}
