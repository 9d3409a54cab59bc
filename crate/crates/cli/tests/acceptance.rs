//! Acceptance suite: one pass/fail line per criterion, then a single
//! assertion that every criterion held.

#[path = "../../core/tests/common/oracles.rs"]
mod oracles;

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use oracles::{all_words, plat_components};
use twobridge::autgroup::{
    classify_group, enumerate_automorphisms, induced_symmetry_subgroup, is_candidate_automorphism,
    predicted_symmetry_group, AutElement, Candidate,
};
use twobridge::commens::{census, detectable_hidden_elements, minimal_orbifold_cusp, ConeLocation, SingularityPattern};
use twobridge::complex::{expected_valences, is_excluded};
use twobridge::flags::FlagSystem;
use twobridge::{CuspComplex, TwoBridgeWord};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn build(w: &TwoBridgeWord) -> Result<CuspComplex, String> {
    CuspComplex::build(w).map_err(|e| format!("{w}: {e}"))
}

fn arithmetic(w: &TwoBridgeWord) -> bool {
    w.is_arithmetic().unwrap()
}

fn criterion_1() -> Check {
    let mut checked = 0;
    for w in all_words(12) {
        if is_excluded(&w) {
            continue;
        }
        let cx = build(&w)?;
        let computed = cx.computed_valences().map_err(|e| format!("{w}: {e}"))?;
        let expected = expected_valences(&w).map_err(|e| format!("{w}: {e}"))?;
        ensure(computed == expected, || format!("{w}: computed {computed:?} expected {expected:?}"))?;
        checked += 1;
    }
    Ok(format!("{checked} words agree exactly"))
}

fn criterion_2() -> Check {
    let words = all_words(12);
    for w in &words {
        let cx = build(w)?;
        let c = w.crossings();
        let eps = cx.epsilon as usize;
        let n = cx.counts();
        ensure(
            n.vertices == 4 * (c - 1) / eps && n.edges == 12 * (c - 1) / eps && n.triangles == 8 * (c - 1) / eps,
            || format!("{w}: counts {n:?}"),
        )?;
        ensure(cx.euler_characteristic() == 0, || format!("{w}: Euler characteristic"))?;
        cx.validate().map_err(|e| format!("{w}: {e}"))?;
        // Vertex links: each ⟨σ1, σ2⟩ orbit is one cycle around one vertex.
        let fs = FlagSystem::new(&cx);
        let orbits = fs.vertex_orbits();
        ensure(orbits.len() == cx.vertices.len(), || format!("{w}: vertex links"))?;
        for o in &orbits {
            let vertex = |f: usize| cx.triangles[FlagSystem::triangle(f)].vertices[FlagSystem::corner(f)];
            ensure(o.iter().all(|&f| vertex(f) == vertex(o[0])), || format!("{w}: vertex link"))?;
            ensure(o.len() == 2 * cx.vertices[vertex(o[0])].valence as usize, || {
                format!("{w}: link length")
            })?;
        }
        let table = cx.computed_valences().map_err(|e| format!("{w}: {e}"))?;
        let total: usize = table.iter().map(|(&l, &v)| cx.vertex_multiplicity(l) * v as usize).sum();
        ensure(total == 24 * (c - 1) / eps, || format!("{w}: handshake {total}"))?;
    }
    Ok(format!("{} words", words.len()))
}

fn criterion_3() -> Check {
    let exempt: BTreeSet<Vec<u32>> = [vec![1, 1], vec![1, 1, 1], vec![2, 2]].into_iter().collect();
    let words = all_words(12);
    for w in &words {
        let cx = build(w)?;
        let pal = w.is_palindromic();
        let odd = w.syllable_count() % 2 == 1;
        let pass = |c| is_candidate_automorphism(&cx, c);
        ensure(pass(Candidate::Rho1) && pass(Candidate::Rho2), || format!("{w}: ρ₁/ρ₂"))?;
        if arithmetic(w) {
            continue;
        }
        ensure(pass(Candidate::Rho3) == (pal && odd), || format!("{w}: ρ₃"))?;
        ensure(pass(Candidate::G) == (pal && !odd), || format!("{w}: g"))?;
        if !exempt.contains(&w.canonical_form().syllables().to_vec()) {
            ensure(!pass(Candidate::Ry) && !pass(Candidate::Rho4), || format!("{w}: r_y/ρ₄"))?;
        }
    }
    Ok(format!("{} words", words.len()))
}

fn key(v: &[AutElement]) -> BTreeSet<(usize, bool)> {
    v.iter().map(|e| (e.base_image, e.swaps_cusps)).collect()
}

fn criterion_4() -> Check {
    let mut checked = 0;
    for w in all_words(12) {
        if arithmetic(&w) {
            continue;
        }
        let cx = build(&w)?;
        let all = enumerate_automorphisms(&cx);
        let induced = induced_symmetry_subgroup(&cx);
        ensure(key(&all) == key(&induced), || format!("{w}: extra automorphisms"))?;
        let order = if w.is_palindromic() { 8 } else { 4 };
        ensure(all.len() == order, || format!("{w}: order {}", all.len()))?;
        let predicted = predicted_symmetry_group(&w).map_err(|e| e.to_string())?;
        let reversing = all.iter().any(|e| e.orientation == -1);
        let pal_even = w.is_palindromic() && w.syllable_count() % 2 == 0;
        ensure(reversing == pal_even && reversing == predicted.has_orientation_reversing, || {
            format!("{w}: orientation reversal")
        })?;
        ensure(predicted.order() == order, || format!("{w}: predicted order"))?;
        // The link groups carry the cusp exchange diagonally, so the abstract
        // type is compared on knots.
        if cx.epsilon == 1 {
            ensure(classify_group(&all) == Some(predicted.isomorphism_type), || format!("{w}: type"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} non-arithmetic words"))
}

fn criterion_5() -> Check {
    for (s, order) in [("RL", 6), ("RLR", 4), ("R2L2", 3)] {
        let cx = build(&s.parse().unwrap())?;
        let all = enumerate_automorphisms(&cx);
        ensure(all.iter().any(|e| e.order == Some(order)), || format!("{s}: no element of order {order}"))?;
        ensure(!detectable_hidden_elements(&cx).is_empty(), || format!("{s}: nothing hidden"))?;
    }
    let cx = build(&"RL2R".parse().unwrap())?;
    ensure(key(&enumerate_automorphisms(&cx)) == key(&induced_symmetry_subgroup(&cx)), || {
        "RL2R: group exceeds the induced group".into()
    })?;
    let rl = build(&"RL".parse().unwrap())?;
    ensure(rl.vertices.iter().all(|v| v.valence == 6), || "RL: vertex valence".into())?;
    ensure(rl.edges.iter().all(|e| e.valence == 6), || "RL: edge valence".into())?;
    Ok("orders 6, 4, 3 found; RL2R induced; RL valences all 6".into())
}

fn criterion_6() -> Check {
    let mut checked = 0;
    for w in all_words(12) {
        if arithmetic(&w) {
            continue;
        }
        let cx = build(&w)?;
        let o = minimal_orbifold_cusp(&cx).map_err(|e| format!("{w}: {e}"))?;
        ensure(o.signature == "S²(2,2,2,2)" && o.cone_points.len() == 4, || {
            format!("{w}: {}", o.signature)
        })?;
        ensure(o.cone_points.iter().all(|c| c.order == 2), || format!("{w}: cone orders"))?;
        ensure(o.orbifold_euler_characteristic.0 == 0, || format!("{w}: orbifold Euler characteristic"))?;
        let n = w.syllable_count();
        let expected = if !w.is_palindromic() || n % 2 == 0 {
            SingularityPattern::AtVertices
        } else if w.alpha(n.div_ceil(2)) % 2 == 1 {
            SingularityPattern::OffVertex
        } else {
            SingularityPattern::ValenceTwoVertex
        };
        ensure(o.pattern == expected, || format!("{w}: {:?} vs {expected:?}", o.pattern))?;
        let located = o.cone_points.iter().filter(|c| {
            matches!(c.location, ConeLocation::Vertex { .. } | ConeLocation::MeridionalFold)
        });
        if expected == SingularityPattern::AtVertices {
            ensure(located.count() == 4, || format!("{w}: cone point off the vertices"))?;
        }
        checked += 1;
    }
    Ok(format!("{checked} non-arithmetic words"))
}

fn criterion_7() -> Check {
    let report = census(10).map_err(|e| e.to_string())?;
    let expected = vec![vec!["RL".to_string(), "R2L2".to_string()]];
    ensure(report.summary.non_singleton_classes == expected, || {
        format!("classes {:?}", report.summary.non_singleton_classes)
    })?;
    Ok(format!("{} words, {} classes", report.summary.words, report.summary.classes))
}

fn criterion_8() -> Check {
    let words = all_words(12);
    for w in &words {
        let got = w.component_count().map_err(|e| e.to_string())?;
        ensure(got == plat_components(w), || format!("{w}: parity rule {got}"))?;
    }
    for (s, p, q) in [("RL", 5, 2), ("RLR", 8, 3), ("R2L2", 10, 3), ("RL2R", 12, 5)] {
        let w: TwoBridgeWord = s.parse().unwrap();
        let (_, f) = w.continued_fraction().map_err(|e| e.to_string())?;
        ensure((f.p, f.q) == (p, q), || format!("{s}: {}/{}", f.p, f.q))?;
    }
    Ok(format!("{} words; 5/2, 8/3, 10/3, 12/5", words.len()))
}

fn run_bin(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_twobridge"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn criterion_9() -> Check {
    let dir = std::env::temp_dir().join(format!("twobridge-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let analyze = ["analyze", "R2L3R2L2R", "--json"];
    ensure(run_bin(&analyze)? == run_bin(&analyze)?, || "analyze differs".into())?;
    let census = ["census", "--max-crossings", "8"];
    ensure(run_bin(&census)? == run_bin(&census)?, || "census differs".into())?;
    let mut svgs = Vec::new();
    for i in 0..2 {
        let path = dir.join(format!("render{i}.svg"));
        run_bin(&["render", "R2L3R", "--out", path.to_str().unwrap(), "--copies", "2", "2"])?;
        svgs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(svgs[0] == svgs[1], || "render differs".into())?;
    Ok("analyze, census and render are byte-identical".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(u32, fn() -> Check); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = Vec::new();
    for (n, check) in criteria {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {n}: PASS ({detail}; {secs:.1}s)"),
            Err(why) => {
                println!("criterion {n}: FAIL ({why}; {secs:.1}s)");
                failed.push(n);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
