//! The canonical cusp triangulation of a 2-bridge link complement, built as a
//! finite triangulated torus.
//!
//! The construction starts from a zigzag strip `D′ = [0,1]×[0,1]` with one
//! triangle per letter of the word. An `R` pivots on the bottom line and adds
//! a vertex on the top line; an `L` pivots on the top line and adds a vertex on
//! the bottom line. The strip is reflected across `y = 1`, the pair is rotated
//! by π about `(0,1)`, and the result is translated by `(2k, 2m)` to tile the
//! plane. The edges `(−1, 1)` and `(r, c_n)` are removed, fusing each adjacent
//! pair of triangles into a clasp triangle whose long side is a meridional
//! edge. Finally the tiling is divided by the deck lattice spanned by
//! `(4/ε, 0)` and `(0, 2)`.
//!
//! Coordinates are exact integers: `y` counts horizontal lines and `x` is
//! scaled by [`CuspComplex::x_scale`]. They are presentation data; every
//! contract below is combinatorial.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Letter, TwoBridgeWord};

/// Exact point of the plane, `x` in units of `1 / x_scale`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub fn new(x: i64, y: i64) -> Point {
        Point { x, y }
    }

    fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }
}

fn cross(a: Point, b: Point) -> i64 {
    a.x * b.y - a.y * b.x
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    Meridional,
    Horizontal,
    Rising,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleKind {
    Clasp,
    Ordinary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: usize,
    /// Representative position inside the fundamental domain.
    pub position: Point,
    pub label: u32,
    pub valence: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: usize,
    pub endpoints: [usize; 2],
    /// A lift of the edge whose midpoint lies in the fundamental domain.
    pub segment: [Point; 2],
    pub class: EdgeClass,
    /// Vertices related to this edge by the edge/vertex correspondence; two
    /// for horizontal and meridional edges, one for rising edges.
    pub corresponding_vertices: Vec<usize>,
    pub corresponding_label: u32,
    pub valence: u32,
    /// The two triangles containing the edge (equal for no edge of a valid
    /// complex, but recorded as found).
    pub triangles: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangle {
    pub id: usize,
    /// Vertex ids of the corners, counterclockwise.
    pub vertices: [usize; 3],
    /// A counterclockwise lift of the corners whose centroid lies in the
    /// fundamental domain.
    pub corners: [Point; 3],
    /// `edges[k]` joins corners `k` and `k+1`.
    pub edges: [usize; 3],
    pub kind: TriangleKind,
    /// Index `t ∈ 1..=c` of the letter the triangle comes from.
    pub letter_index: usize,
    pub letter: Letter,
}

/// Gluing of triangle sides: side `k` of triangle `t` meets side `side` of
/// `triangle`, with corner `k` of `t` matching corner `side + 1` of `triangle`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideGluing {
    pub triangle: usize,
    pub side: usize,
}

/// Finite quotient-torus triangulation of one cusp.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspComplex {
    pub word: TwoBridgeWord,
    pub epsilon: u32,
    /// Denominator of `x` coordinates.
    pub x_scale: i64,
    /// Deck periods in unscaled units: `(4/ε, 2)`.
    pub periods: (i64, i64),
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
    pub gluings: Vec<[SideGluing; 3]>,
    /// Label `r` of the right clasp edge `(r, c_n)`.
    pub r_label: u32,
}

pub const COMPLEX_SCHEMA_VERSION: u32 = 1;

/// Versioned serialized form of a [`CuspComplex`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub schema_version: u32,
    #[serde(flatten)]
    pub complex: CuspComplex,
}

impl From<CuspComplex> for ComplexDocument {
    fn from(complex: CuspComplex) -> ComplexDocument {
        ComplexDocument { schema_version: COMPLEX_SCHEMA_VERSION, complex }
    }
}

/// Label → valence.
pub type ValenceTable = BTreeMap<u32, u32>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StripsAndClasps {
    /// Triangle ids of each horizontal strip, ordered left to right.
    pub strips: Vec<Vec<usize>>,
    pub clasps: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
}

/// Label used internally for the top-left corner of `D′`.
const LEFT_CLASP_LABEL: i64 = -1;

/// A vertex of `D′` before tiling.
#[derive(Debug, Clone, Copy)]
struct StripVertex {
    label: i64,
    point: Point,
}

#[derive(Debug, Clone, Copy)]
struct PlaneTriangle {
    corners: [StripVertex; 3],
    letter_index: usize,
    clasp: bool,
}

/// Lays out `D′`. Returns its triangles and the x scale used.
fn strip_layout(word: &TwoBridgeWord) -> (Vec<([i64; 3], usize)>, HashMap<i64, Point>, i64) {
    // (label, on_top) per triangle corner
    let mut top = vec![LEFT_CLASP_LABEL];
    let mut bottom = vec![0i64];
    let mut tris = Vec::new();
    for (i, letter) in word.letters().into_iter().enumerate() {
        let t = (i + 1) as i64;
        let cur_top = *top.last().unwrap();
        let cur_bot = *bottom.last().unwrap();
        tris.push(([cur_bot, cur_top, t], i + 1));
        match letter {
            Letter::R => top.push(t),
            Letter::L => bottom.push(t),
        }
    }
    let gaps_top = (top.len() - 1) as i64;
    let gaps_bot = (bottom.len() - 1) as i64;
    let scale = 2 * gaps_top.lcm(&gaps_bot);
    let mut pos = HashMap::new();
    for (k, &l) in top.iter().enumerate() {
        pos.insert(l, Point::new(k as i64 * scale / gaps_top, 1));
    }
    for (k, &l) in bottom.iter().enumerate() {
        pos.insert(l, Point::new(k as i64 * scale / gaps_bot, 0));
    }
    (tris, pos, scale)
}

/// Reduces a (possibly multiplied) point into `[0, px) × [0, py)`.
fn reduce(p: Point, px: i64, py: i64) -> Point {
    Point::new(p.x.rem_euclid(px), p.y.rem_euclid(py))
}

/// Label `r`: `c_{n−2}` when `α_n = 1`, otherwise `c_n − 1`.
pub fn r_label(word: &TwoBridgeWord) -> u32 {
    let n = word.syllable_count();
    let sums = word.prefix_sums();
    if word.alpha(n) == 1 {
        sums[n - 2] as u32
    } else {
        (sums[n] - 1) as u32
    }
}

impl CuspComplex {
    /// Builds the quotient-torus complex of one cusp. The word is normalized
    /// to start with `R` first.
    pub fn build(word: &TwoBridgeWord) -> Result<CuspComplex> {
        word.require_hyperbolic()?;
        let (word, _) = word.normalize();
        let c = word.crossings();
        let epsilon = word.component_count()?;
        let period_x = (4 / epsilon) as i64;
        let (strip, pos, scale) = strip_layout(&word);
        let right_clasp_label = c as i64;

        // Tile a window around the fundamental domain.
        let base: [fn(Point, i64) -> Point; 4] = [
            |p, _| p,
            |p, _| Point::new(p.x, 2 - p.y),
            |p, _| Point::new(-p.x, 2 - p.y),
            |p, _| Point::new(-p.x, p.y),
        ];
        let mut plane: Vec<PlaneTriangle> = Vec::new();
        for k in -1..=(period_x / 2 + 1) {
            for m in -1..=2 {
                let shift = Point::new(2 * k * scale, 2 * m);
                for map in base.iter() {
                    for (labels, t) in &strip {
                        let corners = labels.map(|l| StripVertex {
                            label: l,
                            point: map(pos[&l], scale).add(shift),
                        });
                        let clasp = labels
                            .iter()
                            .any(|&l| l == LEFT_CLASP_LABEL || l == right_clasp_label);
                        plane.push(PlaneTriangle { corners, letter_index: *t, clasp });
                    }
                }
            }
        }

        // Fuse clasp halves across the removed edges.
        let mut halves: HashMap<(Point, Point), Vec<PlaneTriangle>> = HashMap::new();
        let mut fused: Vec<PlaneTriangle> = Vec::new();
        for tri in plane {
            if !tri.clasp {
                fused.push(tri);
                continue;
            }
            let d = *tri
                .corners
                .iter()
                .find(|v| v.label == LEFT_CLASP_LABEL || v.label == right_clasp_label)
                .unwrap();
            let q = *tri.corners.iter().find(|v| v.point.x != d.point.x).ok_or_else(|| {
                Error::Invariant("clasp half without off-line corner".into())
            })?;
            halves.entry((d.point, q.point)).or_default().push(tri);
        }
        let mut keys: Vec<_> = halves.keys().copied().collect();
        keys.sort();
        for key in keys {
            let pair = &halves[&key];
            if pair.len() != 2 {
                // Partner fell outside the window.
                continue;
            }
            let (d, q) = key;
            let mut corners = Vec::new();
            for tri in pair {
                for v in tri.corners {
                    if v.point != d && !corners.iter().any(|u: &StripVertex| u.point == v.point) {
                        corners.push(v);
                    }
                }
            }
            if corners.len() != 3 || !corners.iter().any(|v| v.point == q) {
                return Err(Error::Invariant("clasp fusion did not produce a triangle".into()));
            }
            fused.push(PlaneTriangle {
                corners: [corners[0], corners[1], corners[2]],
                letter_index: pair[0].letter_index,
                clasp: true,
            });
        }

        // Keep one representative per deck orbit.
        let px = period_x * scale;
        let mut reps: Vec<PlaneTriangle> = fused
            .into_iter()
            .filter(|tri| {
                let sx: i64 = tri.corners.iter().map(|v| v.point.x).sum();
                let sy: i64 = tri.corners.iter().map(|v| v.point.y).sum();
                (0..3 * px).contains(&sx) && (0..6).contains(&sy)
            })
            .map(|mut tri| {
                let [a, b, cc] = tri.corners.map(|v| v.point);
                if cross(b.sub(a), cc.sub(a)) < 0 {
                    tri.corners.swap(1, 2);
                }
                tri
            })
            .collect();
        reps.sort_by_key(|tri| {
            let sx: i64 = tri.corners.iter().map(|v| v.point.x).sum();
            let sy: i64 = tri.corners.iter().map(|v| v.point.y).sum();
            (sx, sy)
        });

        // Vertices.
        let mut vertex_points: BTreeMap<Point, i64> = BTreeMap::new();
        for tri in &reps {
            for v in tri.corners {
                let rp = reduce(v.point, px, 2);
                if let Some(&old) = vertex_points.get(&rp) {
                    if old != v.label {
                        return Err(Error::Invariant("vertex with two labels".into()));
                    }
                }
                vertex_points.insert(rp, v.label);
            }
        }
        let vertex_index: HashMap<Point, usize> =
            vertex_points.keys().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut vertices: Vec<Vertex> = vertex_points
            .iter()
            .enumerate()
            .map(|(id, (p, &label))| Vertex { id, position: *p, label: label as u32, valence: 0 })
            .collect();

        // Edges, keyed by doubled midpoint.
        let mut edge_keys: BTreeMap<Point, [Point; 2]> = BTreeMap::new();
        for tri in &reps {
            for k in 0..3 {
                let a = tri.corners[k].point;
                let b = tri.corners[(k + 1) % 3].point;
                let mid = reduce(a.add(b), 2 * px, 4);
                let shift = Point::new(a.x + b.x - mid.x, a.y + b.y - mid.y);
                // shift is even in both coordinates
                let seg = [
                    Point::new(a.x - shift.x / 2, a.y - shift.y / 2),
                    Point::new(b.x - shift.x / 2, b.y - shift.y / 2),
                ];
                let seg = if seg[0] <= seg[1] { seg } else { [seg[1], seg[0]] };
                edge_keys.entry(mid).or_insert(seg);
            }
        }
        let edge_index: HashMap<Point, usize> =
            edge_keys.keys().enumerate().map(|(i, p)| (*p, i)).collect();

        let mut triangles = Vec::with_capacity(reps.len());
        for (id, tri) in reps.iter().enumerate() {
            let pts = tri.corners.map(|v| v.point);
            let vids = pts.map(|p| vertex_index[&reduce(p, px, 2)]);
            let eids = [0, 1, 2].map(|k| {
                let mid = reduce(pts[k].add(pts[(k + 1) % 3]), 2 * px, 4);
                edge_index[&mid]
            });
            triangles.push(Triangle {
                id,
                vertices: vids,
                corners: pts,
                edges: eids,
                kind: if tri.clasp { TriangleKind::Clasp } else { TriangleKind::Ordinary },
                letter_index: tri.letter_index,
                letter: word.letter(tri.letter_index),
            });
        }

        // Side gluings.
        let mut sides_of_edge: Vec<Vec<(usize, usize)>> = vec![Vec::new(); edge_keys.len()];
        for tri in &triangles {
            for k in 0..3 {
                sides_of_edge[tri.edges[k]].push((tri.id, k));
            }
        }
        let placeholder = SideGluing { triangle: usize::MAX, side: usize::MAX };
        let mut gluings = vec![[placeholder; 3]; triangles.len()];
        for sides in &sides_of_edge {
            if sides.len() != 2 {
                return Err(Error::Invariant(format!(
                    "edge borders {} triangle sides instead of 2",
                    sides.len()
                )));
            }
            let (t0, k0) = sides[0];
            let (t1, k1) = sides[1];
            let a0 = triangles[t0].corners[k0];
            let b0 = triangles[t0].corners[(k0 + 1) % 3];
            let a1 = triangles[t1].corners[k1];
            let b1 = triangles[t1].corners[(k1 + 1) % 3];
            // Orientable gluing: a0 ↔ b1, b0 ↔ a1, by a single lattice shift.
            let d0 = a0.sub(b1);
            let d1 = b0.sub(a1);
            if d0 != d1 || d0.x.rem_euclid(px) != 0 || d0.y.rem_euclid(2) != 0 {
                return Err(Error::Invariant("sides do not glue by a deck translation".into()));
            }
            gluings[t0][k0] = SideGluing { triangle: t1, side: k1 };
            gluings[t1][k1] = SideGluing { triangle: t0, side: k0 };
        }

        for tri in &triangles {
            for &v in &tri.vertices {
                vertices[v].valence += 1;
            }
        }

        let mut edges = Vec::with_capacity(edge_keys.len());
        for (id, (_, seg)) in edge_keys.iter().enumerate() {
            let (t0, k0) = sides_of_edge[id][0];
            let (t1, _) = sides_of_edge[id][1];
            let tri = &triangles[t0];
            let endpoints = [tri.vertices[k0], tri.vertices[(k0 + 1) % 3]];
            let class = match (seg[0].y - seg[1].y).abs() {
                0 => EdgeClass::Horizontal,
                1 => EdgeClass::Rising,
                2 if seg[0].x == seg[1].x && seg[0].x % scale == 0 => EdgeClass::Meridional,
                _ => return Err(Error::Invariant("edge of unexpected shape".into())),
            };
            edges.push(Edge {
                id,
                endpoints,
                segment: *seg,
                class,
                corresponding_vertices: Vec::new(),
                corresponding_label: 0,
                valence: 0,
                triangles: [t0, t1],
            });
        }

        let mut cx = CuspComplex {
            r_label: r_label(&word),
            word,
            epsilon,
            x_scale: scale,
            periods: (period_x, 2),
            vertices,
            edges,
            triangles,
            gluings,
        };
        cx.assign_edge_correspondence(&sides_of_edge)?;
        Ok(cx)
    }

    /// Edge/vertex correspondence. Horizontal and meridional edges correspond
    /// to the vertices across both adjacent triangles; a rising edge whose
    /// lower end is on `y = k` corresponds to the vertex across the triangle
    /// on its left for even `k` and on its right for odd `k`.
    fn assign_edge_correspondence(&mut self, sides_of_edge: &[Vec<(usize, usize)>]) -> Result<()> {
        for id in 0..self.edges.len() {
            let across: Vec<(usize, usize)> = sides_of_edge[id]
                .iter()
                .map(|&(t, k)| (t, self.triangles[t].vertices[(k + 2) % 3]))
                .collect();
            let chosen = match self.edges[id].class {
                EdgeClass::Horizontal | EdgeClass::Meridional => {
                    across.iter().map(|&(_, v)| v).collect::<Vec<_>>()
                }
                EdgeClass::Rising => {
                    // The triangle lies to the left of its side a→b (ccw).
                    let mut pick = None;
                    for (i, &(t, k)) in sides_of_edge[id].iter().enumerate() {
                        let a = self.triangles[t].corners[k];
                        let b = self.triangles[t].corners[(k + 1) % 3];
                        let (lower, upward) = if a.y < b.y { (a, true) } else { (b, false) };
                        // upward side ⇒ triangle is left of the upward edge
                        let want_left = lower.y.rem_euclid(2) == 0;
                        if upward == want_left {
                            pick = Some(across[i].1);
                        }
                    }
                    vec![pick.ok_or_else(|| {
                        Error::Invariant("rising edge without a corresponding vertex".into())
                    })?]
                }
            };
            let vals: Vec<u32> = chosen.iter().map(|&v| self.vertices[v].valence).collect();
            if vals.iter().any(|&v| v != vals[0]) {
                return Err(Error::Invariant(format!(
                    "edge {id} corresponds to vertices of valences {vals:?}"
                )));
            }
            let e = &mut self.edges[id];
            e.valence = vals[0];
            e.corresponding_label = self.vertices[chosen[0]].label;
            e.corresponding_vertices = chosen;
        }
        Ok(())
    }

    pub fn counts(&self) -> Counts {
        Counts {
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            triangles: self.triangles.len(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }

    /// Valence per label; fails if two vertices with one label disagree.
    pub fn computed_valences(&self) -> Result<ValenceTable> {
        let mut table = ValenceTable::new();
        for v in &self.vertices {
            if let Some(&old) = table.get(&v.label) {
                if old != v.valence {
                    return Err(Error::Invariant(format!(
                        "label {} has valences {} and {}",
                        v.label, old, v.valence
                    )));
                }
            }
            table.insert(v.label, v.valence);
        }
        Ok(table)
    }

    /// Edge id → label of its corresponding vertex.
    pub fn edge_vertex_correspondence(&self) -> BTreeMap<usize, u32> {
        self.edges.iter().map(|e| (e.id, e.corresponding_label)).collect()
    }

    pub fn vertex_multiplicity(&self, label: u32) -> usize {
        self.vertices.iter().filter(|v| v.label == label).count()
    }

    /// Horizontal strips (connected runs of ordinary triangles glued along
    /// rising edges) and clasp triangles.
    pub fn strips_and_clasps(&self) -> StripsAndClasps {
        let clasps: Vec<usize> = self
            .triangles
            .iter()
            .filter(|t| t.kind == TriangleKind::Clasp)
            .map(|t| t.id)
            .collect();
        let mut seen = vec![false; self.triangles.len()];
        let mut strips = Vec::new();
        for start in &self.triangles {
            if start.kind == TriangleKind::Clasp || seen[start.id] {
                continue;
            }
            let mut comp = Vec::new();
            let mut stack = vec![start.id];
            seen[start.id] = true;
            while let Some(t) = stack.pop() {
                comp.push(t);
                for k in 0..3 {
                    let e = &self.edges[self.triangles[t].edges[k]];
                    if e.class != EdgeClass::Rising {
                        continue;
                    }
                    let n = self.gluings[t][k].triangle;
                    if self.triangles[n].kind == TriangleKind::Ordinary && !seen[n] {
                        seen[n] = true;
                        stack.push(n);
                    }
                }
            }
            comp.sort_by_key(|&t| self.triangles[t].letter_index);
            strips.push(comp);
        }
        strips.sort();
        StripsAndClasps { strips, clasps }
    }

    /// Structural checks: torus Euler characteristic, `3F = 2E`, every
    /// vertex link a single cycle, valid side gluings.
    pub fn validate(&self) -> Result<()> {
        let f = self.triangles.len();
        let e = self.edges.len();
        if self.euler_characteristic() != 0 {
            return Err(Error::Invariant("Euler characteristic is not 0".into()));
        }
        if 3 * f != 2 * e {
            return Err(Error::Invariant("3F != 2E".into()));
        }
        for (t, glue) in self.gluings.iter().enumerate() {
            for (k, g) in glue.iter().enumerate() {
                let back = self.gluings[g.triangle][g.side];
                if back.triangle != t || back.side != k {
                    return Err(Error::Invariant("side gluing is not an involution".into()));
                }
            }
        }
        let flags = crate::flags::FlagSystem::new(self);
        let links = flags.vertex_orbits();
        if links.len() != self.vertices.len() {
            return Err(Error::Invariant("a vertex link is not a single cycle".into()));
        }
        for v in &self.vertices {
            let ends = self
                .edges
                .iter()
                .map(|e| e.endpoints.iter().filter(|&&x| x == v.id).count())
                .sum::<usize>();
            if ends as u32 != v.valence {
                return Err(Error::Invariant("vertex valence disagrees with edge ends".into()));
            }
        }
        Ok(())
    }

    /// Labels lying on meridional lines: `0` and `c_{n−1}`.
    pub fn meridional_labels(&self) -> [u32; 2] {
        let n = self.word.syllable_count();
        [0, self.word.prefix_sums()[n - 1] as u32]
    }

    pub fn x_period_scaled(&self) -> i64 {
        self.periods.0 * self.x_scale
    }
}

/// Closed-form vertex valences for words outside the excluded family
/// (`R²L²`, `RL^m`, `RL^mR` up to inversion and mirror).
pub fn expected_valences(word: &TwoBridgeWord) -> Result<ValenceTable> {
    word.require_hyperbolic()?;
    let (word, _) = word.normalize();
    if is_excluded(&word) {
        return Err(Error::ExcludedWord(word.to_string()));
    }
    let n = word.syllable_count();
    let c = word.crossings();
    let sums = word.prefix_sums();
    let alpha = |i: usize| word.alpha(i);
    let r = r_label(&word);

    let mut table: ValenceTable = (0..c as u32).map(|j| (j, 4)).collect();
    table.insert(1, if alpha(1) > 1 { 3 } else { 2 * alpha(2) + 3 });
    table.insert(r, if alpha(n) > 1 { 3 } else { 2 * alpha(n - 1) + 3 });
    for i in 1..n - 1 {
        // 2α_{i+1}+4, one less at c₁ when α₁ = 1 and at c_{n−2} when α_n = 1
        let mut v = 2 * alpha(i + 1) + 4;
        if i == 1 && alpha(1) == 1 {
            v -= 1;
        }
        if i == n - 2 && alpha(n) == 1 {
            v -= 1;
        }
        table.insert(sums[i] as u32, v);
    }
    table.insert(0, 4 * alpha(1) + 4);
    table.insert(sums[n - 1] as u32, 4 * alpha(n) + 4);
    Ok(table)
}

/// Membership in `{R²L², RL^m, RL^mR}` up to inversion and mirror.
pub fn is_excluded(word: &TwoBridgeWord) -> bool {
    let canon = word.canonical_form();
    let s = canon.syllables();
    s == [2, 2] || (s.len() == 2 && s[0] == 1) || (s.len() == 3 && s[0] == 1 && s[2] == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(s: &str) -> CuspComplex {
        CuspComplex::build(&s.parse().unwrap()).unwrap()
    }

    fn table(pairs: &[(u32, u32)]) -> ValenceTable {
        pairs.iter().copied().collect()
    }

    #[test]
    fn figure_eight_counts_and_valences() {
        let cx = build("RL");
        assert_eq!(cx.epsilon, 1);
        assert_eq!(
            cx.counts(),
            Counts { vertices: 4, edges: 12, triangles: 8 }
        );
        assert!(cx.vertices.iter().all(|v| v.valence == 6));
        assert!(cx.edges.iter().all(|e| e.valence == 6));
        cx.validate().unwrap();
    }

    #[test]
    fn whitehead_counts() {
        let cx = build("RLR");
        assert_eq!(cx.epsilon, 2);
        assert_eq!(cx.counts(), Counts { vertices: 4, edges: 12, triangles: 8 });
        cx.validate().unwrap();
    }

    #[test]
    fn computed_valences_match_hand_values() {
        assert_eq!(
            build("R2L3R2L").computed_valences().unwrap(),
            table(&[(0, 12), (1, 3), (2, 10), (3, 4), (4, 4), (5, 7), (6, 4), (7, 8)])
        );
        assert_eq!(
            build("R3L2").computed_valences().unwrap(),
            table(&[(0, 16), (1, 3), (2, 4), (3, 12), (4, 3)])
        );
    }

    #[test]
    fn expected_valences_formula() {
        let w: TwoBridgeWord = "R2L3R2L2R".parse().unwrap();
        assert_eq!(
            expected_valences(&w).unwrap(),
            table(&[
                (0, 12),
                (1, 3),
                (2, 10),
                (3, 4),
                (4, 4),
                (5, 8),
                (6, 4),
                (7, 7),
                (8, 4),
                (9, 8)
            ])
        );
        assert!(matches!(
            expected_valences(&"RLR".parse().unwrap()),
            Err(Error::ExcludedWord(_))
        ));
        assert!(matches!(
            expected_valences(&"R3L".parse().unwrap()),
            Err(Error::ExcludedWord(_))
        ));
        assert!(matches!(
            expected_valences(&"R4".parse().unwrap()),
            Err(Error::NotHyperbolic(_))
        ));
    }

    #[test]
    fn clasps_sit_on_meridional_lines() {
        for s in ["RL", "RLR", "R2L3R2L", "R3L2RL2R3", "R3L3"] {
            let cx = build(s);
            let parts = cx.strips_and_clasps();
            let per_torus = 8 / cx.epsilon as usize;
            assert_eq!(parts.clasps.len(), per_torus, "{s}");
            let meridional: Vec<_> =
                cx.edges.iter().filter(|e| e.class == EdgeClass::Meridional).collect();
            assert_eq!(meridional.len(), 4 / cx.epsilon as usize, "{s}");
            for e in meridional {
                assert_eq!(e.segment[0].x % cx.x_scale, 0);
                assert_eq!((e.segment[1].y - e.segment[0].y).abs(), 2);
                for t in e.triangles {
                    assert_eq!(cx.triangles[t].kind, TriangleKind::Clasp);
                }
            }
        }
    }

    #[test]
    fn strips_hold_c_minus_two_triangles() {
        for (s, strips, width, clasps) in [("R2L3R2L", 4, 6, 4), ("R2L3R2L2R", 8, 8, 8)] {
            let cx = build(s);
            let parts = cx.strips_and_clasps();
            assert_eq!(parts.strips.len(), strips, "{s}");
            assert!(parts.strips.iter().all(|t| t.len() == width), "{s}");
            assert_eq!(parts.clasps.len(), clasps, "{s}");
            let total: usize = parts.strips.iter().map(Vec::len).sum();
            assert_eq!(total + parts.clasps.len(), cx.triangles.len());
        }
    }

    #[test]
    fn non_hyperbolic_is_rejected() {
        assert!(matches!(
            CuspComplex::build(&"R5".parse().unwrap()),
            Err(Error::NotHyperbolic(_))
        ));
    }

    #[test]
    fn mirrored_input_builds_the_same_complex() {
        assert_eq!(build("LRL"), build("RLR"));
    }
}
