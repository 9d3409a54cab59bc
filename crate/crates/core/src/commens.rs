//! Hidden symmetries, the cusp of the minimal orientable orbifold, ladder
//! invariants, commensurability and the census.

use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autgroup::{
    enumerate_automorphisms, hidden_elements, induced_symmetry_subgroup, predicted_symmetry_group,
    AutElement,
};
use crate::complex::{CuspComplex, EdgeClass, TriangleKind};
use crate::error::{Error, Result};
use crate::flags::FlagSystem;
use crate::word::{Letter, TwoBridgeWord};

pub const SCHEMA_VERSION: u32 = 1;

/// Canonical exponent vectors of the four arithmetic words.
const FIGURE_EIGHT: [u32; 2] = [1, 1];
const WHITEHEAD: [u32; 3] = [1, 1, 1];
const SIX_TWO_TWO: [u32; 2] = [2, 2];
const SIX_THREE_TWO: [u32; 3] = [1, 2, 1];

/// Invariant trace field `ℚ(√d)` of an arithmetic complement, as `d`.
pub fn trace_field(word: &TwoBridgeWord) -> Option<i64> {
    let canon = word.canonical_form();
    match canon.syllables() {
        s if s == FIGURE_EIGHT => Some(-3),
        s if s == SIX_TWO_TWO => Some(-3),
        s if s == WHITEHEAD => Some(-1),
        s if s == SIX_THREE_TWO => Some(-7),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HiddenSymmetryVerdict {
    pub arithmetic: bool,
    pub has_hidden: bool,
    /// Order of the orientation-preserving detectable hidden symmetry.
    pub detectable_op_order: Option<u32>,
    /// Presence of an order-2 orientation-reversing detectable hidden symmetry.
    pub detectable_or: Option<bool>,
    pub notes: String,
}

pub fn hidden_symmetry_verdict(word: &TwoBridgeWord) -> Result<HiddenSymmetryVerdict> {
    word.require_hyperbolic()?;
    let canon = word.canonical_form();
    let s = canon.syllables();
    let detectable = |order: u32, name: &str| HiddenSymmetryVerdict {
        arithmetic: true,
        has_hidden: true,
        detectable_op_order: Some(order),
        detectable_or: Some(true),
        notes: format!(
            "{name} complement: order {order} orientation-preserving and order 2 \
             orientation-reversing detectable hidden symmetries"
        ),
    };
    Ok(if s == FIGURE_EIGHT {
        detectable(6, "figure-eight knot")
    } else if s == WHITEHEAD {
        detectable(4, "Whitehead link")
    } else if s == SIX_TWO_TWO {
        detectable(3, "6_2^2 link")
    } else if s == SIX_THREE_TWO {
        HiddenSymmetryVerdict {
            arithmetic: true,
            has_hidden: true,
            detectable_op_order: None,
            detectable_or: Some(false),
            notes: "6_3^2 link complement: arithmetic, hence hidden symmetries, \
                    but none detectable on the cusp"
                .into(),
        }
    } else {
        HiddenSymmetryVerdict {
            arithmetic: false,
            has_hidden: false,
            detectable_op_order: None,
            detectable_or: None,
            notes: "non-arithmetic: no hidden symmetries".into(),
        }
    })
}

/// Automorphisms of the lifted tiling not induced by symmetries.
pub fn detectable_hidden_elements(cx: &CuspComplex) -> Vec<AutElement> {
    hidden_elements(&enumerate_automorphisms(cx), &induced_symmetry_subgroup(cx))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ConeLocation {
    /// A vertex of the triangulation; `quotient_valence` is its valence in
    /// the quotient cellulation.
    Vertex { label: u32, valence: u32, quotient_valence: u32 },
    /// Midpoint of a meridional edge, the removed point of a clasp. It acts
    /// as a vertex of quotient valence 1.
    MeridionalFold,
    EdgeInterior { class: EdgeClass },
    TriangleInterior,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConePoint {
    pub location: ConeLocation,
    pub order: u32,
}

/// Where the singularities of the orbifold cusp sit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SingularityPattern {
    /// Every cone point is at a vertex (or meridional fold) of quotient
    /// valence other than 2.
    AtVertices,
    /// Some cone point lies inside a non-meridional edge.
    OffVertex,
    /// Some cone point is at a vertex of quotient valence 2.
    ValenceTwoVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldCusp {
    pub word: String,
    pub group_order: usize,
    /// Orbits of vertices, edges and triangles of the torus.
    pub cells: [usize; 3],
    pub underlying_euler_characteristic: i64,
    pub orientable: bool,
    /// Orbifold Euler characteristic as a reduced fraction.
    pub orbifold_euler_characteristic: (i64, i64),
    pub cone_points: Vec<ConePoint>,
    pub signature: String,
    pub pattern: SingularityPattern,
}

/// G-orbits of a family of flag sets, with the stabilizer order of each.
fn cell_orbits(cells: &[Vec<usize>], group: &[&Vec<usize>]) -> Vec<(usize, usize)> {
    let mut cell_of = vec![0usize; cells.iter().map(Vec::len).sum()];
    for (i, c) in cells.iter().enumerate() {
        for &f in c {
            cell_of[f] = i;
        }
    }
    let mut seen = vec![false; cells.len()];
    let mut out = Vec::new();
    for i in 0..cells.len() {
        if seen[i] {
            continue;
        }
        let mut orbit: Vec<usize> = group.iter().map(|g| cell_of[g[cells[i][0]]]).collect();
        orbit.sort_unstable();
        orbit.dedup();
        for &j in &orbit {
            seen[j] = true;
        }
        out.push((i, group.len() / orbit.len()));
    }
    out
}

/// Quotient of the cusp torus by the orientation-preserving induced
/// symmetries that keep the cusp in place.
pub fn minimal_orbifold_cusp(cx: &CuspComplex) -> Result<OrbifoldCusp> {
    if cx.word.is_arithmetic()? {
        return Err(Error::Arithmetic(cx.word.to_string()));
    }
    let elements = induced_symmetry_subgroup(cx);
    let group: Vec<&Vec<usize>> = elements
        .iter()
        .filter(|e| e.orientation == 1 && !e.swaps_cusps)
        .filter_map(|e| e.flag_map.as_ref())
        .collect();
    let order = group.len();
    let fs = FlagSystem::new(cx);
    let n = fs.len();
    if n % order != 0 {
        return Err(Error::Invariant("group does not act freely on flags".into()));
    }

    let vertices = fs.vertex_orbits();
    let edges = fs.edge_orbits();
    let faces = fs.face_orbits();
    let vo = cell_orbits(&vertices, &group);
    let eo = cell_orbits(&edges, &group);
    let fo = cell_orbits(&faces, &group);

    // Barycentric subdivision: flags are its triangles; each of its edges is
    // a σ_k pair, never folded by an orientation-preserving element.
    let bary_v = (vo.len() + eo.len() + fo.len()) as i64;
    let bary_e = (3 * n / 2 / order) as i64;
    let bary_f = (n / order) as i64;
    let chi = bary_v - bary_e + bary_f;

    let tri_of = |f: usize| &cx.triangles[FlagSystem::triangle(f)];
    let mut cone_points = Vec::new();
    for &(i, stab) in &vo {
        if stab > 1 {
            let f = vertices[i][0];
            let v = &cx.vertices[tri_of(f).vertices[FlagSystem::corner(f)]];
            cone_points.push(ConePoint {
                location: ConeLocation::Vertex {
                    label: v.label,
                    valence: v.valence,
                    quotient_valence: v.valence / stab as u32,
                },
                order: stab as u32,
            });
        }
    }
    for &(i, stab) in &eo {
        if stab > 1 {
            let f = edges[i][0];
            let class = cx.edges[tri_of(f).edges[FlagSystem::side(f)]].class;
            let location = if class == EdgeClass::Meridional {
                ConeLocation::MeridionalFold
            } else {
                ConeLocation::EdgeInterior { class }
            };
            cone_points.push(ConePoint { location, order: stab as u32 });
        }
    }
    for &(_, stab) in &fo {
        if stab > 1 {
            cone_points.push(ConePoint { location: ConeLocation::TriangleInterior, order: stab as u32 });
        }
    }

    // χ_orb = χ − Σ (1 − 1/m), kept as a fraction.
    let (mut num, mut den) = (chi, 1i64);
    for c in &cone_points {
        let m = c.order as i64;
        num = num * m - den * (m - 1);
        den *= m;
        let g = num.gcd(&den);
        num /= g;
        den /= g;
    }

    let orientable = fs.orientation_classes().is_some();
    let orders: Vec<String> = cone_points.iter().map(|c| c.order.to_string()).collect();
    let surface = match (orientable, chi) {
        (true, 2) => "S²".to_string(),
        (true, 0) => "T²".to_string(),
        _ => format!("χ={chi}"),
    };
    let signature = if orders.is_empty() {
        surface
    } else {
        format!("{surface}({})", orders.join(","))
    };

    let pattern = if cone_points
        .iter()
        .any(|c| matches!(c.location, ConeLocation::EdgeInterior { .. } | ConeLocation::TriangleInterior))
    {
        SingularityPattern::OffVertex
    } else if cone_points
        .iter()
        .any(|c| matches!(c.location, ConeLocation::Vertex { quotient_valence: 2, .. }))
    {
        SingularityPattern::ValenceTwoVertex
    } else {
        SingularityPattern::AtVertices
    };

    Ok(OrbifoldCusp {
        word: cx.word.to_string(),
        group_order: order,
        cells: [vo.len(), eo.len(), fo.len()],
        underlying_euler_characteristic: chi,
        orientable,
        orbifold_euler_characteristic: (num, den),
        cone_points,
        signature,
        pattern,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LadderKind {
    /// Runs clasp to clasp.
    Full,
    /// Runs from a clasp to the fold of a palindromic word with `n` odd.
    Folded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LadderInvariant {
    pub kind: LadderKind,
    pub letters: String,
    pub endpoints: (String, String),
}

fn swap_letters(s: &str) -> String {
    s.chars().map(|c| if c == 'R' { 'L' } else { 'R' }).collect()
}

impl LadderInvariant {
    /// Least string among the allowed transforms: reversal and letter swap
    /// for full ladders, letter swap only for folded ones.
    pub fn canonical_string(&self) -> String {
        let mut forms = vec![self.letters.clone(), swap_letters(&self.letters)];
        if self.kind == LadderKind::Full {
            let rev: String = self.letters.chars().rev().collect();
            forms.push(swap_letters(&rev));
            forms.push(rev);
        }
        forms.into_iter().min().unwrap()
    }

    /// Kind, endpoint markers and canonical string in one comparable key.
    pub fn key(&self) -> String {
        let kind = match self.kind {
            LadderKind::Full => "full",
            LadderKind::Folded => "folded",
        };
        format!("{kind}:{}-{}:{}", self.endpoints.0, self.endpoints.1, self.canonical_string())
    }

    pub fn equivalent(&self, other: &LadderInvariant) -> bool {
        self.kind == other.kind
            && self.endpoints == other.endpoints
            && self.canonical_string() == other.canonical_string()
    }
}

/// Letters met by a transversal of a horizontal strip, walking from the left
/// clasp across rising edges to the right clasp.
pub fn strip_transversal(cx: &CuspComplex) -> Result<Vec<Letter>> {
    let c = cx.word.crossings();
    let start = cx
        .triangles
        .iter()
        .find(|t| t.kind == TriangleKind::Clasp && t.letter_index == 1)
        .ok_or_else(|| Error::Invariant("no left clasp".into()))?;
    let mut letters = vec![start.letter];
    let mut prev = usize::MAX;
    let mut cur = start.id;
    for expected in 2..=c {
        let t = &cx.triangles[cur];
        let next = (0..3)
            .filter(|&k| cx.edges[t.edges[k]].class == EdgeClass::Rising)
            .map(|k| cx.gluings[cur][k].triangle)
            .find(|&n| n != prev && cx.triangles[n].letter_index == expected)
            .ok_or_else(|| Error::Invariant(format!("transversal stops before letter {expected}")))?;
        prev = cur;
        cur = next;
        letters.push(cx.triangles[cur].letter);
    }
    if cx.triangles[cur].kind != TriangleKind::Clasp {
        return Err(Error::Invariant("transversal does not end at a clasp".into()));
    }
    Ok(letters)
}

pub fn ladder_invariant(word: &TwoBridgeWord) -> Result<LadderInvariant> {
    word.require_hyperbolic()?;
    if word.is_arithmetic()? {
        return Err(Error::Arithmetic(word.to_string()));
    }
    let cx = CuspComplex::build(word)?;
    let letters: String = strip_transversal(&cx)?.into_iter().map(Letter::as_char).collect();
    let w = &cx.word;
    if w.is_palindromic() && w.syllable_count() % 2 == 1 {
        // The fold crosses an edge when the middle syllable is odd and sits
        // on a vertex when it is even.
        let half = w.crossings().div_ceil(2);
        let mid = w.alpha(w.syllable_count().div_ceil(2));
        let fold = if mid % 2 == 1 { "fold-edge" } else { "fold-vertex" };
        Ok(LadderInvariant {
            kind: LadderKind::Folded,
            letters: letters[..half].to_string(),
            endpoints: ("clasp".into(), fold.into()),
        })
    } else {
        Ok(LadderInvariant {
            kind: LadderKind::Full,
            letters,
            endpoints: ("clasp".into(), "clasp".into()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommensurabilityReason {
    Isometric,
    ArithmeticSameTraceField,
    ArithmeticDistinctTraceField,
    NonArithmeticDistinctCanonicalForm,
    MixedArithmeticNonarithmetic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommensurabilityVerdict {
    pub commensurable: bool,
    pub reason: CommensurabilityReason,
}

pub fn commensurable(a: &TwoBridgeWord, b: &TwoBridgeWord) -> Result<CommensurabilityVerdict> {
    use CommensurabilityReason::*;
    let (aa, ab) = (a.is_arithmetic()?, b.is_arithmetic()?);
    let verdict = |commensurable, reason| CommensurabilityVerdict { commensurable, reason };
    Ok(if a.canonical_form() == b.canonical_form() {
        verdict(true, Isometric)
    } else if aa && ab {
        if trace_field(a) == trace_field(b) {
            verdict(true, ArithmeticSameTraceField)
        } else {
            verdict(false, ArithmeticDistinctTraceField)
        }
    } else if aa != ab {
        verdict(false, MixedArithmeticNonarithmetic)
    } else {
        verdict(false, NonArithmeticDistinctCanonicalForm)
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverReport {
    pub word: String,
    pub arithmetic: bool,
    pub verdict: String,
    /// Lower bound on the volume of a cusped orientable hyperbolic
    /// 3-manifold, used in the arithmetic case.
    pub volume_bound: Option<f64>,
}

pub const MIN_CUSPED_VOLUME: f64 = 2.029;

pub fn cover_report(word: &TwoBridgeWord) -> Result<CoverReport> {
    let verdict = hidden_symmetry_verdict(word)?;
    let (w, _) = word.normalize();
    Ok(if verdict.arithmetic {
        CoverReport {
            word: w.to_string(),
            arithmetic: true,
            verdict: "no irregular covers of hyperbolic 3-manifolds".into(),
            volume_bound: Some(MIN_CUSPED_VOLUME),
        }
    } else {
        CoverReport {
            word: w.to_string(),
            arithmetic: false,
            verdict: "no irregular covers of hyperbolic 3-orbifolds".into(),
            volume_bound: None,
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub word: String,
    pub crossings: usize,
    pub syllables: usize,
    pub components: u32,
    pub fraction: String,
    pub symmetry_group: String,
    pub aut_order: usize,
    pub arithmetic: bool,
    pub has_hidden: bool,
    pub ladder: Option<String>,
    pub class_id: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub schema_version: u32,
    pub max_crossings: usize,
    pub words: usize,
    pub classes: usize,
    /// Commensurability classes with more than one member, as words.
    pub non_singleton_classes: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub records: Vec<CensusRecord>,
    pub summary: CensusSummary,
}

/// Canonical words with `2 ≤ c ≤ max`, by `c` then exponent vector.
pub fn census_words(max_crossings: usize) -> Vec<TwoBridgeWord> {
    fn rec(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            if prefix.len() >= 2 {
                out.push(prefix.clone());
            }
            return;
        }
        for a in 1..=rest {
            prefix.push(a);
            rec(rest - a, prefix, out);
            prefix.pop();
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for c in 2..=max_crossings as u32 {
        let mut comps = Vec::new();
        rec(c, &mut Vec::new(), &mut comps);
        comps.sort();
        for v in comps {
            let w = TwoBridgeWord::from_exponents(&v).expect("valid exponents");
            let canon = w.canonical_form();
            if seen.insert(canon.syllables().to_vec()) {
                out.push(canon);
            }
        }
    }
    out
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

pub fn census(max_crossings: usize) -> Result<CensusReport> {
    let words = census_words(max_crossings);
    let mut records: Vec<CensusRecord> = words
        .par_iter()
        .map(|w| -> Result<CensusRecord> {
            let (_, frac) = w.continued_fraction()?;
            let cx = CuspComplex::build(w)?;
            let hidden = hidden_symmetry_verdict(w)?;
            let ladder = if hidden.arithmetic {
                None
            } else {
                Some(ladder_invariant(w)?.key())
            };
            Ok(CensusRecord {
                word: w.to_string(),
                crossings: w.crossings(),
                syllables: w.syllable_count(),
                components: cx.epsilon,
                fraction: format!("{}/{}", frac.p, frac.q),
                symmetry_group: predicted_symmetry_group(w)?.isomorphism_type.to_string(),
                aut_order: enumerate_automorphisms(&cx).len(),
                arithmetic: hidden.arithmetic,
                has_hidden: hidden.has_hidden,
                ladder,
                class_id: 0,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut parent: Vec<usize> = (0..words.len()).collect();
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            if commensurable(&words[i], &words[j])?.commensurable {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut class_ids: BTreeMap<usize, usize> = BTreeMap::new();
    let mut members: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in 0..words.len() {
        let root = find(&mut parent, i);
        let next = class_ids.len();
        let id = *class_ids.entry(root).or_insert(next);
        records[i].class_id = id;
        members.entry(id).or_default().push(records[i].word.clone());
    }
    let non_singleton_classes = members.into_values().filter(|m| m.len() > 1).collect();
    Ok(CensusReport {
        summary: CensusSummary {
            schema_version: SCHEMA_VERSION,
            max_crossings,
            words: records.len(),
            classes: class_ids.len(),
            non_singleton_classes,
        },
        records,
    })
}
