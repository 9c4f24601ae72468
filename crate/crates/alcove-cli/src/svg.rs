//! SVG rendering for rank-2 scenes: the alcove arrangement, galleries, and
//! polytopes. Coordinates are embedded into the plane with
//! `α_1^∨ ↦ (1, 0)` and `α_2^∨ ↦ (−1/2, √3/2)`; rank-1 scenes sit on a line.

use alcove::affine::{face_vertices, Face};
use alcove::gallery::Gallery;
use alcove::polytope::LatticePolytope;
use alcove::{RationalPoint, Result, RootSystem};

const SCALE: f64 = 80.0;

fn rat_f64(r: alcove::Rat) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn embed(p: &RationalPoint) -> (f64, f64) {
    let c: Vec<f64> = p.coords().iter().map(|&x| rat_f64(x)).collect();
    match c.len() {
        1 => (c[0], 0.0),
        2 => (c[0] - c[1] / 2.0, c[1] * 3f64.sqrt() / 2.0),
        _ => (c[0], c.get(1).copied().unwrap_or(0.0)),
    }
}

struct Bounds {
    min_x: f64,
    max_x: f64,
    min_y: f64,
    max_y: f64,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            min_x: -1.0,
            max_x: 1.0,
            min_y: -1.0,
            max_y: 1.0,
        }
    }

    fn include(&mut self, (x, y): (f64, f64)) {
        self.min_x = self.min_x.min(x - 0.5);
        self.max_x = self.max_x.max(x + 0.5);
        self.min_y = self.min_y.min(y - 0.5);
        self.max_y = self.max_y.max(y + 0.5);
    }

    fn to_svg(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.min_x) * SCALE, (self.max_y - y) * SCALE)
    }
}

type Pt = (f64, f64);

pub struct Scene<'a> {
    rs: &'a RootSystem,
    polygons: Vec<(Vec<Pt>, &'static str)>,
    segments: Vec<(Pt, Pt, &'static str)>,
    bounds: Bounds,
    draw_arrangement: bool,
}

impl<'a> Scene<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Scene {
            rs,
            polygons: Vec::new(),
            segments: Vec::new(),
            bounds: Bounds::new(),
            draw_arrangement: false,
        }
    }

    pub fn with_arrangement(mut self) -> Self {
        self.draw_arrangement = true;
        self
    }

    fn face_outline(&mut self, face: &Face) -> Result<Vec<(f64, f64)>> {
        let vs = face_vertices(self.rs, face)?;
        let mut pts: Vec<(f64, f64)> = vs.iter().map(embed).collect();
        // order around the centroid for a sane polygon outline
        let cx = pts.iter().map(|p| p.0).sum::<f64>() / pts.len() as f64;
        let cy = pts.iter().map(|p| p.1).sum::<f64>() / pts.len() as f64;
        pts.sort_by(|a, b| {
            let ang_a = (a.1 - cy).atan2(a.0 - cx);
            let ang_b = (b.1 - cy).atan2(b.0 - cx);
            ang_a.partial_cmp(&ang_b).unwrap()
        });
        for &p in &pts {
            self.bounds.include(p);
        }
        Ok(pts)
    }

    pub fn add_gallery(&mut self, gallery: &Gallery) -> Result<()> {
        for alcove in gallery.alcoves() {
            let pts = self.face_outline(alcove)?;
            self.polygons.push((pts, "#fca5a5"));
        }
        for small in gallery.smalls() {
            let pts = self.face_outline(small)?;
            if pts.len() >= 2 {
                self.segments.push((pts[0], pts[1], "#16a34a"));
            }
        }
        Ok(())
    }

    pub fn add_polytope(&mut self, polytope: &LatticePolytope, color: &'static str) {
        let pts: Vec<(f64, f64)> = match polytope.boundary_ccw() {
            Some(boundary) => boundary.iter().map(embed).collect(),
            None => polytope.vertices().iter().map(embed).collect(),
        };
        for &p in &pts {
            self.bounds.include(p);
        }
        if pts.len() >= 3 {
            self.polygons.push((pts, color));
        } else if pts.len() == 2 {
            self.segments.push((pts[0], pts[1], color));
        } else if pts.len() == 1 {
            let (x, y) = pts[0];
            self.segments.push(((x - 0.02, y), (x + 0.02, y), color));
        }
    }

    pub fn render(&self) -> String {
        let b = &self.bounds;
        let width = (b.max_x - b.min_x) * SCALE;
        let height = (b.max_y - b.min_y) * SCALE;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{width:.0}\" height=\"{height:.0}\" \
             viewBox=\"0 0 {width:.1} {height:.1}\">\n"
        );
        if self.draw_arrangement {
            out.push_str(&self.arrangement_lines());
        }
        for (pts, color) in &self.polygons {
            let path: Vec<String> = pts
                .iter()
                .map(|&p| {
                    let (x, y) = b.to_svg(p);
                    format!("{x:.2},{y:.2}")
                })
                .collect();
            out.push_str(&format!(
                "  <polygon points=\"{}\" fill=\"{color}\" fill-opacity=\"0.6\" stroke=\"none\"/>\n",
                path.join(" ")
            ));
        }
        for &(p, q, color) in &self.segments {
            let (x1, y1) = b.to_svg(p);
            let (x2, y2) = b.to_svg(q);
            out.push_str(&format!(
                "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
                 stroke=\"{color}\" stroke-width=\"4\"/>\n"
            ));
        }
        out.push_str("</svg>\n");
        out
    }

    /// Dashed hyperplane segments clipped loosely to the current bounds.
    fn arrangement_lines(&self) -> String {
        let b = &self.bounds;
        let mut out = String::new();
        let radius = ((b.max_x - b.min_x).powi(2) + (b.max_y - b.min_y).powi(2)).sqrt();
        for k in 0..self.rs.num_positive_roots() {
            let coeffs = &self.rs.positive_roots()[k];
            let rank = self.rs.rank();
            // In this embedding the simple coroots have Gram matrix A/2, so
            // the functional ⟨α, ·⟩ is the Euclidean product with 2·Σ m_i e_i.
            let mut grad = (0.0f64, 0.0f64);
            for (i, &m) in coeffs.iter().enumerate().take(rank) {
                let mut unit = vec![alcove::Rat::from_integer(0); rank];
                unit[i] = alcove::Rat::from_integer(1);
                let e = embed(&RationalPoint::new(unit));
                grad.0 += 2.0 * m as f64 * e.0;
                grad.1 += 2.0 * m as f64 * e.1;
            }
            let norm2 = grad.0 * grad.0 + grad.1 * grad.1;
            if norm2 < 1e-12 {
                continue;
            }
            let dir = (-grad.1 / norm2.sqrt(), grad.0 / norm2.sqrt());
            let max_level = (radius as i64) + 1;
            for n in -max_level..=max_level {
                let base = (grad.0 * n as f64 / norm2, grad.1 * n as f64 / norm2);
                let p = (base.0 - dir.0 * radius, base.1 - dir.1 * radius);
                let q = (base.0 + dir.0 * radius, base.1 + dir.1 * radius);
                let (x1, y1) = b.to_svg(p);
                let (x2, y2) = b.to_svg(q);
                out.push_str(&format!(
                    "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" \
                     stroke=\"#9ca3af\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n"
                ));
            }
        }
        out
    }
}
