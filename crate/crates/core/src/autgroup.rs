//! Valence-preserving automorphisms of the cusp complex, the axis-aligned
//! Euclidean candidates among them, and the symmetry group of the complement.
//!
//! Automorphisms of the lifted tiling are listed one per coset of the deck
//! group. Most of them normalize the deck group and act on the quotient
//! torus; for arithmetic words some do not. For a two-component link both
//! cusps carry the same torus, and each element is paired with a flag saying
//! whether the cusps are exchanged (the exchange acting as the identity
//! between the two copies).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::complex::{CuspComplex, Point};
use crate::error::Result;
use crate::flags::FlagSystem;
use crate::word::TwoBridgeWord;

/// Permutation of flags.
pub type FlagMap = Vec<usize>;

/// `(x, y) ↦ (±x + a, ±y + b)` with integer `a`, `b` in unscaled units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineMap {
    pub flip_x: bool,
    pub flip_y: bool,
    pub a: i64,
    pub b: i64,
}

impl AffineMap {
    pub const fn new(flip_x: bool, flip_y: bool, a: i64, b: i64) -> AffineMap {
        AffineMap { flip_x, flip_y, a, b }
    }

    fn apply(&self, p: Point, scale: i64) -> Point {
        let x = if self.flip_x { -p.x } else { p.x } + self.a * scale;
        let y = if self.flip_y { -p.y } else { p.y } + self.b;
        Point::new(x, y)
    }

    fn reduced(self, px: i64) -> AffineMap {
        AffineMap { a: self.a.rem_euclid(px), b: self.b.rem_euclid(2), ..self }
    }

    pub fn preserves_orientation(&self) -> bool {
        self.flip_x == self.flip_y
    }
}

/// The named Euclidean maps of the tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Candidate {
    /// Rotation by π about `(1, 1)`.
    Rho1,
    /// Rotation by π about `(2, 1)`.
    Rho2,
    /// Rotation by π about `(½, 1)`.
    Rho3,
    /// Rotation by π about `(½, ½)`.
    Rho4,
    /// Glide reflection `(x, y) ↦ (1 − x, y + 1)`.
    G,
    /// Reflection `(x, y) ↦ (x, 2 − y)`.
    Ry,
}

impl Candidate {
    pub const ALL: [Candidate; 6] =
        [Candidate::Rho1, Candidate::Rho2, Candidate::Rho3, Candidate::Rho4, Candidate::G, Candidate::Ry];

    pub fn map(self) -> AffineMap {
        match self {
            Candidate::Rho1 => AffineMap::new(true, true, 2, 2),
            Candidate::Rho2 => AffineMap::new(true, true, 4, 2),
            Candidate::Rho3 => AffineMap::new(true, true, 1, 2),
            Candidate::Rho4 => AffineMap::new(true, true, 1, 1),
            Candidate::G => AffineMap::new(true, false, 1, 1),
            Candidate::Ry => AffineMap::new(false, true, 0, 2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum AffineTag {
    Identity,
    Rho1,
    Rho2,
    Rho3,
    Rho4,
    G,
    Ry,
    /// `ρ₁ρ₂`, translation by `(2, 0)` on a knot torus.
    Rho1Rho2,
    Translation { i: i64, j: i64 },
    /// Axis-aligned affine map with no name of its own.
    Composite { flip_x: bool, flip_y: bool, a: i64, b: i64 },
}

impl fmt::Display for AffineTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineTag::Identity => write!(f, "id"),
            AffineTag::Rho1 => write!(f, "ρ₁"),
            AffineTag::Rho2 => write!(f, "ρ₂"),
            AffineTag::Rho3 => write!(f, "ρ₃"),
            AffineTag::Rho4 => write!(f, "ρ₄"),
            AffineTag::G => write!(f, "g"),
            AffineTag::Ry => write!(f, "r_y"),
            AffineTag::Rho1Rho2 => write!(f, "ρ₁ρ₂"),
            AffineTag::Translation { i, j } => write!(f, "τ_{{{i},{j}}}"),
            AffineTag::Composite { flip_x, flip_y, a, b } => write!(
                f,
                "({}x{:+}, {}y{:+})",
                if *flip_x { "-" } else { "" },
                a,
                if *flip_y { "-" } else { "" },
                b
            ),
        }
    }
}

/// Names an affine map of the torus with periods `(px, 2)`.
pub fn affine_tag(map: AffineMap, px: i64) -> AffineTag {
    let m = map.reduced(px);
    for c in Candidate::ALL {
        if c.map().reduced(px) == m {
            return match c {
                Candidate::Rho1 => AffineTag::Rho1,
                Candidate::Rho2 => AffineTag::Rho2,
                Candidate::Rho3 => AffineTag::Rho3,
                Candidate::Rho4 => AffineTag::Rho4,
                Candidate::G => AffineTag::G,
                Candidate::Ry => AffineTag::Ry,
            };
        }
    }
    match (m.flip_x, m.flip_y, m.a, m.b) {
        (false, false, 0, 0) => AffineTag::Identity,
        (false, false, 2, 0) if px == 4 => AffineTag::Rho1Rho2,
        (false, false, i, j) => AffineTag::Translation { i, j },
        (flip_x, flip_y, a, b) => AffineTag::Composite { flip_x, flip_y, a, b },
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutElement {
    /// Action on the flags of the torus; `None` when the element does not
    /// normalize the deck group and so has no torus action.
    #[serde(skip)]
    pub flag_map: Option<FlagMap>,
    /// Image of the base flag, which determines the element up to deck.
    pub base_image: usize,
    /// `+1` or `−1`.
    pub orientation: i8,
    /// Order on the torus for elements with a torus action. Otherwise the
    /// smallest finite order among nearby lifts to the plane, if any.
    pub order: Option<u32>,
    /// `None` when the element is not an axis-aligned affine map.
    pub affine_tag: Option<AffineTag>,
    /// Exchanges the two cusps of a two-component link.
    pub swaps_cusps: bool,
}

impl AutElement {
    /// Display name. A cusp exchange is written as a factor `ρ₂`, the image
    /// of the exchanging symmetry.
    pub fn name(&self) -> String {
        let base = match (self.affine_tag, self.order) {
            (Some(t), _) => t.to_string(),
            (None, Some(k)) => format!("order-{k}"),
            (None, None) => "non-affine".to_string(),
        };
        if !self.swaps_cusps {
            return base;
        }
        match self.affine_tag {
            Some(AffineTag::Identity) => "ρ₂".to_string(),
            Some(AffineTag::Rho1) => "ρ₁ρ₂".to_string(),
            _ => format!("{base}·ρ₂"),
        }
    }

    pub fn descends(&self) -> bool {
        self.flag_map.is_some()
    }

    pub fn is_identity(&self) -> bool {
        !self.swaps_cusps
            && self
                .flag_map
                .as_ref()
                .is_some_and(|m| m.iter().enumerate().all(|(i, &f)| i == f))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupType {
    #[serde(rename = "Z2+Z2")]
    Z2Z2,
    #[serde(rename = "D4")]
    D4,
    #[serde(rename = "Z2+Z2+Z2")]
    Z2Z2Z2,
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::Z2Z2 => "Z2⊕Z2",
            GroupType::D4 => "D4",
            GroupType::Z2Z2Z2 => "Z2⊕Z2⊕Z2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryGroup {
    pub isomorphism_type: GroupType,
    /// Type of the orientation-preserving subgroup.
    pub orientation_preserving: GroupType,
    pub has_orientation_reversing: bool,
}

impl SymmetryGroup {
    pub fn order(&self) -> usize {
        match self.isomorphism_type {
            GroupType::Z2Z2 => 4,
            GroupType::D4 | GroupType::Z2Z2Z2 => 8,
        }
    }
}

/// Symmetry group of the complement as a function of the word.
pub fn predicted_symmetry_group(word: &TwoBridgeWord) -> Result<SymmetryGroup> {
    word.require_hyperbolic()?;
    let (w, _) = word.normalize();
    let n = w.syllable_count();
    let group = if !w.is_palindromic() {
        SymmetryGroup {
            isomorphism_type: GroupType::Z2Z2,
            orientation_preserving: GroupType::Z2Z2,
            has_orientation_reversing: false,
        }
    } else if n % 2 == 0 {
        SymmetryGroup {
            isomorphism_type: GroupType::D4,
            orientation_preserving: GroupType::Z2Z2,
            has_orientation_reversing: true,
        }
    } else if w.alpha(n.div_ceil(2)) % 2 == 1 {
        SymmetryGroup {
            isomorphism_type: GroupType::D4,
            orientation_preserving: GroupType::D4,
            has_orientation_reversing: false,
        }
    } else {
        SymmetryGroup {
            isomorphism_type: GroupType::Z2Z2Z2,
            orientation_preserving: GroupType::Z2Z2Z2,
            has_orientation_reversing: false,
        }
    };
    Ok(group)
}

/// Isomorphism type of a group of order 4 or 8 given its element orders,
/// among the three types that occur.
pub fn classify_group(elements: &[AutElement]) -> Option<GroupType> {
    let max = elements.iter().map(|e| e.order).max()??;
    match (elements.len(), max) {
        (4, 2) => Some(GroupType::Z2Z2),
        (8, 2) => Some(GroupType::Z2Z2Z2),
        (8, 4) => {
            // D4 has five involutions; Z4⊕Z2 has three, Q8 one.
            let involutions = elements.iter().filter(|e| e.order == Some(2)).count();
            (involutions == 5).then_some(GroupType::D4)
        }
        _ => None,
    }
}

fn permutation_order(p: &[usize]) -> u32 {
    let mut seen = vec![false; p.len()];
    let mut order = 1u32;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0u32;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        order = order.lcm(&len);
    }
    order
}

fn compose(a: &[usize], b: &[usize]) -> FlagMap {
    // a after b
    b.iter().map(|&x| a[x]).collect()
}

/// Flag of the plane: a torus flag and the deck translate `(i, j)` of its
/// triangle's stored lift.
type Lifted = (usize, i64, i64);

/// Largest order searched for when an element has no torus action.
const MAX_PLANE_ORDER: u32 = 12;
/// Bound on plane flags developed while computing one such order.
const DEVELOP_LIMIT: usize = 200_000;

enum Propagation {
    Map(FlagMap),
    ValenceMismatch,
    /// Consistent locally but not well defined on the torus.
    Conflict,
}

/// Context shared by the searches below.
struct Search<'a> {
    cx: &'a CuspComplex,
    flags: FlagSystem,
    parity: Vec<bool>,
    /// Deck shift picked up when crossing the side of each flag.
    shift: Vec<(i64, i64)>,
}

impl<'a> Search<'a> {
    fn new(cx: &'a CuspComplex) -> Search<'a> {
        let flags = FlagSystem::new(cx);
        let parity = flags.orientation_classes().expect("torus is orientable");
        let px = cx.x_period_scaled();
        let shift = (0..flags.len())
            .map(|f| {
                let t = FlagSystem::triangle(f);
                let s = FlagSystem::side(f);
                let g = cx.gluings[t][s];
                let a = cx.triangles[t].corners[s];
                let b = cx.triangles[g.triangle].corners[(g.side + 1) % 3];
                ((a.x - b.x) / px, (a.y - b.y) / 2)
            })
            .collect();
        Search { cx, flags, parity, shift }
    }

    fn vertex_valence(&self, f: usize) -> u32 {
        let t = &self.cx.triangles[FlagSystem::triangle(f)];
        self.cx.vertices[t.vertices[FlagSystem::corner(f)]].valence
    }

    fn edge_valence(&self, f: usize) -> u32 {
        let t = &self.cx.triangles[FlagSystem::triangle(f)];
        self.cx.edges[t.edges[FlagSystem::side(f)]].valence
    }

    fn same_valences(&self, f: usize, g: usize) -> bool {
        self.vertex_valence(f) == self.vertex_valence(g) && self.edge_valence(f) == self.edge_valence(g)
    }

    fn preserves_valence(&self, map: &[usize]) -> bool {
        (0..map.len()).all(|f| self.same_valences(f, map[f]))
    }

    /// Extends `0 ↦ target` to a torus map commuting with the involutions.
    fn propagate(&self, target: usize) -> Propagation {
        let n = self.flags.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[0] = target;
        used[target] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            if !self.same_valences(f, map[f]) {
                return Propagation::ValenceMismatch;
            }
            for s in &self.flags.sigma {
                let (g, h) = (s[f], s[map[f]]);
                if map[g] == usize::MAX {
                    if used[h] {
                        return Propagation::Conflict;
                    }
                    map[g] = h;
                    used[h] = true;
                    queue.push_back(g);
                } else if map[g] != h {
                    return Propagation::Conflict;
                }
            }
        }
        Propagation::Map(map)
    }

    /// Whether `0 ↦ target` extends to a valence-preserving automorphism of
    /// the plane. Pairs of torus flags stand in for pairs of plane flags: the
    /// plane is simply connected, so the development never conflicts and
    /// only valences need checking.
    fn extends_to_plane(&self, target: usize) -> bool {
        let mut seen = std::collections::HashSet::from([(0usize, target)]);
        let mut queue = VecDeque::from([(0usize, target)]);
        while let Some((f, g)) = queue.pop_front() {
            if !self.same_valences(f, g) {
                return false;
            }
            for s in &self.flags.sigma {
                let p = (s[f], s[g]);
                if seen.insert(p) {
                    queue.push_back(p);
                }
            }
        }
        true
    }

    fn step(&self, k: usize, x: Lifted) -> Lifted {
        let (f, i, j) = x;
        let g = self.flags.sigma[k][f];
        if k == 2 {
            let (di, dj) = self.shift[f];
            (g, i + di, j + dj)
        } else {
            (g, i, j)
        }
    }

    /// Order of the plane automorphism sending the base flag to
    /// `(target, i, j)`, if at most [`MAX_PLANE_ORDER`].
    fn plane_order(&self, target: Lifted) -> Option<u32> {
        let base: Lifted = (0, 0, 0);
        let mut image: HashMap<Lifted, Lifted> = HashMap::from([(base, target)]);
        let mut queue = VecDeque::from([base]);
        let mut x = base;
        for k in 1..=MAX_PLANE_ORDER {
            while !image.contains_key(&x) {
                let y = queue.pop_front()?;
                let iy = image[&y];
                for s in 0..3 {
                    let z = self.step(s, y);
                    if !image.contains_key(&z) {
                        image.insert(z, self.step(s, iy));
                        queue.push_back(z);
                    }
                }
                if image.len() > DEVELOP_LIMIT {
                    return None;
                }
            }
            x = image[&x];
            if x == base {
                return Some(k);
            }
        }
        None
    }

    fn orientation_of(&self, target: usize) -> i8 {
        if self.parity[0] == self.parity[target] {
            1
        } else {
            -1
        }
    }

    /// Flag map induced by an affine map, if it is a simplicial automorphism.
    fn affine_flag_map(&self, m: AffineMap) -> Option<FlagMap> {
        let cx = self.cx;
        let s = cx.x_scale;
        let px = cx.x_period_scaled();
        let key = |pts: &[Point; 3]| {
            let x: i64 = pts.iter().map(|p| p.x).sum();
            let y: i64 = pts.iter().map(|p| p.y).sum();
            (x.rem_euclid(3 * px), y.rem_euclid(6))
        };
        let by_centroid: HashMap<(i64, i64), usize> =
            cx.triangles.iter().map(|t| (key(&t.corners), t.id)).collect();
        let mut corner_map = vec![[0usize; 3]; cx.triangles.len()];
        let mut tri_map = vec![0usize; cx.triangles.len()];
        for t in &cx.triangles {
            let img = t.corners.map(|p| m.apply(p, s));
            let target = *by_centroid.get(&key(&img))?;
            let tc = cx.triangles[target].corners;
            let sx: i64 = img.iter().map(|p| p.x).sum::<i64>() - tc.iter().map(|p| p.x).sum::<i64>();
            let sy: i64 = img.iter().map(|p| p.y).sum::<i64>() - tc.iter().map(|p| p.y).sum::<i64>();
            if sx % 3 != 0 || sy % 3 != 0 {
                return None;
            }
            let (dx, dy) = (sx / 3, sy / 3);
            for k in 0..3 {
                let p = Point::new(img[k].x - dx, img[k].y - dy);
                corner_map[t.id][k] = tc.iter().position(|&q| q == p)?;
            }
            tri_map[t.id] = target;
        }
        let mut map = vec![0usize; self.flags.len()];
        for (f, slot) in map.iter_mut().enumerate() {
            let t = FlagSystem::triangle(f);
            let a = FlagSystem::corner(f);
            let side = FlagSystem::side(f);
            let other = if a == side { (side + 1) % 3 } else { side };
            let (a2, o2) = (corner_map[t][a], corner_map[t][other]);
            let side2 = if o2 == (a2 + 1) % 3 { a2 } else { o2 };
            let b = if side2 == a2 { 0 } else { 1 };
            *slot = 6 * tri_map[t] + 2 * a2 + b;
        }
        // Simpliciality: the map must commute with the involutions.
        for s in &self.flags.sigma {
            if (0..map.len()).any(|f| map[s[f]] != s[map[f]]) {
                return None;
            }
        }
        Some(map)
    }

    fn affine_automorphisms(&self) -> HashMap<FlagMap, AffineMap> {
        let p = self.cx.periods.0;
        let mut out = HashMap::new();
        for flip_x in [false, true] {
            for flip_y in [false, true] {
                for a in 0..p {
                    for b in 0..2 {
                        let m = AffineMap::new(flip_x, flip_y, a, b);
                        if let Some(fm) = self.affine_flag_map(m) {
                            if self.preserves_valence(&fm) {
                                out.insert(fm, m);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn descending(&self, map: FlagMap, tags: &HashMap<FlagMap, AffineMap>) -> AutElement {
        AutElement {
            base_image: map[0],
            orientation: self.orientation_of(map[0]),
            order: Some(permutation_order(&map)),
            affine_tag: tags.get(&map).map(|&m| affine_tag(m, self.cx.periods.0)),
            swaps_cusps: false,
            flag_map: Some(map),
        }
    }

    fn non_descending(&self, target: usize) -> AutElement {
        let mut order = None;
        for i in -1..=1 {
            for j in -1..=1 {
                if let Some(k) = self.plane_order((target, i, j)) {
                    order = Some(order.map_or(k, |o: u32| o.min(k)));
                }
            }
        }
        AutElement {
            flag_map: None,
            base_image: target,
            orientation: self.orientation_of(target),
            order,
            affine_tag: None,
            swaps_cusps: false,
        }
    }

    /// Adds the cusp exchange for links.
    fn with_swaps(&self, elements: Vec<AutElement>) -> Vec<AutElement> {
        if self.cx.epsilon == 1 {
            return elements;
        }
        let swapped: Vec<AutElement> = elements
            .iter()
            .map(|e| AutElement {
                swaps_cusps: true,
                order: e.order.map(|k| k.lcm(&2)),
                ..e.clone()
            })
            .collect();
        elements.into_iter().chain(swapped).collect()
    }
}

fn sort_maps(maps: BTreeSet<FlagMap>) -> Vec<FlagMap> {
    // Identity first, then lexicographic.
    let mut v: Vec<FlagMap> = maps.into_iter().collect();
    v.sort_by_key(|m| (!m.iter().enumerate().all(|(i, &f)| i == f), m.clone()));
    v
}

/// Valence-preserving simplicial automorphisms of the lifted tiling, one per
/// coset of the deck group. Elements that normalize the deck group carry
/// their torus action; the others (possible only for arithmetic words) are
/// listed after them.
pub fn enumerate_automorphisms(cx: &CuspComplex) -> Vec<AutElement> {
    let search = Search::new(cx);
    let tags = search.affine_automorphisms();
    let mut maps = BTreeSet::new();
    let mut others = Vec::new();
    for target in 0..search.flags.len() {
        match search.propagate(target) {
            Propagation::Map(m) => {
                maps.insert(m);
            }
            Propagation::ValenceMismatch => {}
            Propagation::Conflict => {
                if search.extends_to_plane(target) {
                    others.push(target);
                }
            }
        }
    }
    let mut elements: Vec<AutElement> =
        sort_maps(maps).into_iter().map(|m| search.descending(m, &tags)).collect();
    elements.extend(others.into_iter().map(|t| search.non_descending(t)));
    search.with_swaps(elements)
}

/// Whether a named Euclidean map induces a valence-preserving simplicial
/// automorphism of the torus.
pub fn is_candidate_automorphism(cx: &CuspComplex, candidate: Candidate) -> bool {
    let search = Search::new(cx);
    search
        .affine_flag_map(candidate.map())
        .is_some_and(|m| search.preserves_valence(&m))
}

/// Images of the symmetries of the complement: `ρ₁`, then `ρ₂` for a knot
/// or the cusp exchange for a link, then `ρ₃` (palindromic, `n` odd) or `g`
/// (palindromic, `n` even). Generators that fail to be automorphisms are
/// skipped.
pub fn induced_symmetry_subgroup(cx: &CuspComplex) -> Vec<AutElement> {
    let search = Search::new(cx);
    let w = &cx.word;
    let mut gens = vec![Candidate::Rho1];
    if cx.epsilon == 1 {
        gens.push(Candidate::Rho2);
    }
    if w.is_palindromic() {
        gens.push(if w.syllable_count() % 2 == 1 { Candidate::Rho3 } else { Candidate::G });
    }
    let gen_maps: Vec<FlagMap> = gens
        .iter()
        .filter_map(|c| search.affine_flag_map(c.map()))
        .filter(|m| search.preserves_valence(m))
        .collect();
    let identity: FlagMap = (0..search.flags.len()).collect();
    let mut group: BTreeSet<FlagMap> = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(m) = frontier.pop() {
        for g in &gen_maps {
            let p = compose(g, &m);
            if group.insert(p.clone()) {
                frontier.push(p);
            }
        }
    }
    let tags = search.affine_automorphisms();
    let elements = sort_maps(group).into_iter().map(|m| search.descending(m, &tags)).collect();
    search.with_swaps(elements)
}

/// Automorphisms that are not images of symmetries of the complement.
pub fn hidden_elements(all: &[AutElement], induced: &[AutElement]) -> Vec<AutElement> {
    all.iter()
        .filter(|e| {
            !induced
                .iter()
                .any(|i| i.base_image == e.base_image && i.swaps_cusps == e.swaps_cusps)
        })
        .cloned()
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroupSummary {
    /// Number of deck cosets, counting cusp exchanges.
    pub order: usize,
    /// Elements with a torus action; these form a group.
    pub torus_group_order: usize,
    pub orientation_preserving: usize,
    pub orientation_reversing: usize,
    pub element_names: Vec<String>,
    pub element_orders: Vec<Option<u32>>,
    /// Type of the torus group, among the three that occur.
    pub computed_type: Option<GroupType>,
}

pub fn summarize(elements: &[AutElement]) -> AutGroupSummary {
    let op = elements.iter().filter(|e| e.orientation == 1).count();
    let torus: Vec<AutElement> = elements.iter().filter(|e| e.descends()).cloned().collect();
    AutGroupSummary {
        order: elements.len(),
        torus_group_order: torus.len(),
        orientation_preserving: op,
        orientation_reversing: elements.len() - op,
        element_names: elements.iter().map(AutElement::name).collect(),
        element_orders: elements.iter().map(|e| e.order).collect(),
        computed_type: classify_group(&torus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(s: &str) -> CuspComplex {
        CuspComplex::build(&s.parse().unwrap()).unwrap()
    }

    fn names(elements: &[AutElement]) -> BTreeSet<String> {
        elements.iter().map(AutElement::name).collect()
    }

    #[test]
    fn non_palindromic_link_has_four_elements() {
        let c = cx("R2L3R2L");
        let all = enumerate_automorphisms(&c);
        assert_eq!(all.len(), 4);
        assert_eq!(
            names(&all),
            ["id", "ρ₁", "ρ₂", "ρ₁ρ₂"].map(String::from).into_iter().collect()
        );
        assert_eq!(names(&induced_symmetry_subgroup(&c)), names(&all));
    }

    #[test]
    fn non_palindromic_knot_has_four_elements() {
        let c = cx("R2L3R2L2R");
        let all = enumerate_automorphisms(&c);
        assert_eq!(
            names(&all),
            ["id", "ρ₁", "ρ₂", "ρ₁ρ₂"].map(String::from).into_iter().collect()
        );
        assert_eq!(classify_group(&all), Some(GroupType::Z2Z2));
    }

    #[test]
    fn candidates() {
        assert!(is_candidate_automorphism(&cx("R2L3R2L"), Candidate::Rho1));
        assert!(is_candidate_automorphism(&cx("R3L2RL2R3"), Candidate::Rho3));
        assert!(is_candidate_automorphism(&cx("R3L3"), Candidate::G));
        assert!(!is_candidate_automorphism(&cx("R2L3R2L"), Candidate::G));
    }

    #[test]
    fn figure_eight_has_order_six() {
        let all = enumerate_automorphisms(&cx("RL"));
        assert!(all.iter().any(|e| e.order == Some(6)));
    }

    #[test]
    fn predicted_groups() {
        let p = |s: &str| predicted_symmetry_group(&s.parse().unwrap()).unwrap();
        assert_eq!(p("R2L3R2L").isomorphism_type, GroupType::Z2Z2);
        assert_eq!(p("R3L2RL2R3").isomorphism_type, GroupType::D4);
        assert!(!p("R3L2RL2R3").has_orientation_reversing);
        assert_eq!(p("R2L4R2").isomorphism_type, GroupType::Z2Z2Z2);
        assert!(p("R3L3").has_orientation_reversing);
    }

    #[test]
    fn affine_tags() {
        assert_eq!(affine_tag(Candidate::Rho2.map(), 2), AffineTag::Rho1);
        assert_eq!(affine_tag(Candidate::Rho2.map(), 4), AffineTag::Rho2);
        assert_eq!(affine_tag(AffineMap::new(false, false, 2, 0), 4), AffineTag::Rho1Rho2);
        assert_eq!(affine_tag(AffineMap::new(false, false, 0, 2), 4), AffineTag::Identity);
    }
}
