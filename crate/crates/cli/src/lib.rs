//! Command-line front end. [`run`] takes the argument vector and the two
//! output streams and returns the process exit code.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use twobridge::autgroup::{
    classify_group, enumerate_automorphisms, induced_symmetry_subgroup, is_candidate_automorphism,
    predicted_symmetry_group, summarize, AutElement, AutGroupSummary, Candidate, SymmetryGroup,
};
use twobridge::commens::{
    census, commensurable, cover_report, detectable_hidden_elements, hidden_symmetry_verdict,
    ladder_invariant, minimal_orbifold_cusp, CommensurabilityReason, CoverReport,
    HiddenSymmetryVerdict, LadderInvariant,
};
use twobridge::complex::{expected_valences, is_excluded, ComplexDocument, Counts};
use twobridge::render::render_svg;
use twobridge::{CuspComplex, Error, TwoBridgeWord, ValenceTable};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NOT_HYPERBOLIC: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "twobridge", version, about = "Cusp triangulations and commensurability of 2-bridge links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report for one word.
    Analyze {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Computed vertex valences next to the closed form.
    Valences {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Symmetry group of the complement and the named Euclidean candidates.
    Symmetries {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Every valence-preserving automorphism of the lifted tiling.
    Autgroup {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Hidden-symmetry verdict, detectable elements and covering consequence.
    Hidden {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two complements are commensurable.
    Commensurable {
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Cusp of the minimal orientable orbifold.
    OrbifoldCusp {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Serialized cusp complex.
    Complex { word: String },
    /// Enumerate all words up to a crossing bound as JSON lines.
    Census {
        #[arg(long)]
        max_crossings: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw copies of the fundamental domain as SVG.
    Render {
        word: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, num_args = 2, value_names = ["KX", "KY"], default_values_t = [1u32, 1])]
        copies: Vec<u32>,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        Failure::Io(e.into())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the command line and returns the exit code. Data goes to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Lib(e @ Error::NotHyperbolic(_)) => (EXIT_NOT_HYPERBOLIC, e.to_string()),
                Failure::Lib(e @ Error::Invariant(_)) => (EXIT_INVARIANT, e.to_string()),
                Failure::Lib(e) => (EXIT_USAGE, e.to_string()),
                Failure::Io(e) => (EXIT_USAGE, e.to_string()),
                Failure::Usage(m) => (EXIT_USAGE, m),
            };
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn parse(word: &str) -> Result<TwoBridgeWord, Failure> {
    let w: TwoBridgeWord = word.parse()?;
    w.require_hyperbolic()?;
    Ok(w)
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Analyze { word, json } => analyze(&word, json, out),
        Command::Valences { word, json } => valences(&word, json, out),
        Command::Symmetries { word, json } => symmetries(&word, json, out),
        Command::Autgroup { word, json } => autgroup(&word, json, out),
        Command::Hidden { word, json } => hidden(&word, json, out),
        Command::Commensurable { first, second, json } => commensurable_cmd(&first, &second, json, out),
        Command::OrbifoldCusp { word, json } => orbifold(&word, json, out),
        Command::Complex { word } => {
            let cx = CuspComplex::build(&parse(&word)?)?;
            cx.validate()?;
            write_json(out, &ComplexDocument::from(cx))
        }
        Command::Census { max_crossings, out: path } => census_cmd(max_crossings, path, out),
        Command::Render { word, out: path, copies } => render(&word, &path, &copies, out),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordForms {
    pub input: String,
    pub normalized: String,
    pub mirrored: bool,
    pub canonical: String,
    pub expanded: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub word: WordForms,
    pub crossings: usize,
    pub syllables: Vec<u32>,
    pub n: usize,
    pub continued_fraction: Vec<u64>,
    pub fraction: String,
    pub components: u32,
    pub hyperbolic: bool,
    pub arithmetic: bool,
    pub palindromic: bool,
    pub symmetry_group: SymmetryGroup,
    pub automorphisms: AutGroupSummary,
    /// Whether the torus group agrees with the predicted symmetry group.
    pub automorphisms_match_prediction: bool,
    pub hidden_symmetries: HiddenSymmetryVerdict,
    pub ladder: Option<LadderInvariant>,
    pub counts: Counts,
    pub covers: CoverReport,
}

/// Order, orientation reversal and, for knots, isomorphism type of the torus
/// group against the prediction. For links the computed group pairs torus
/// maps with the cusp exchange, so only order and orientation are compared.
fn matches_prediction(cx: &CuspComplex, elements: &[AutElement], predicted: &SymmetryGroup) -> bool {
    let torus: Vec<AutElement> = elements.iter().filter(|e| e.descends()).cloned().collect();
    if torus.len() != elements.len() || torus.len() != predicted.order() {
        return false;
    }
    let reversing = torus.iter().any(|e| e.orientation == -1);
    reversing == predicted.has_orientation_reversing
        && (cx.epsilon == 2 || classify_group(&torus) == Some(predicted.isomorphism_type))
}

pub fn analysis_report(input: &str) -> Result<AnalysisReport, Error> {
    let w: TwoBridgeWord = input.parse()?;
    w.require_hyperbolic()?;
    let (normalized, mirrored) = w.normalize();
    let (cf, frac) = normalized.continued_fraction()?;
    let cx = CuspComplex::build(&normalized)?;
    cx.validate()?;
    let elements = enumerate_automorphisms(&cx);
    let predicted = predicted_symmetry_group(&normalized)?;
    let arithmetic = normalized.is_arithmetic()?;
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        word: WordForms {
            input: input.to_string(),
            normalized: normalized.to_string(),
            mirrored,
            canonical: normalized.canonical_form().to_string(),
            expanded: normalized.expanded(),
        },
        crossings: normalized.crossings(),
        syllables: normalized.syllables().to_vec(),
        n: normalized.syllable_count(),
        continued_fraction: cf,
        fraction: format!("{}/{}", frac.p, frac.q),
        components: cx.epsilon,
        hyperbolic: true,
        arithmetic,
        palindromic: normalized.is_palindromic(),
        symmetry_group: predicted,
        automorphisms_match_prediction: matches_prediction(&cx, &elements, &predicted),
        automorphisms: summarize(&elements),
        hidden_symmetries: hidden_symmetry_verdict(&normalized)?,
        ladder: if arithmetic { None } else { Some(ladder_invariant(&normalized)?) },
        counts: cx.counts(),
        covers: cover_report(&normalized)?,
    })
}

fn group_line(g: &SymmetryGroup) -> String {
    format!(
        "{} (orientation-preserving {}, orientation-reversing {})",
        g.isomorphism_type,
        g.orientation_preserving,
        if g.has_orientation_reversing { "present" } else { "absent" }
    )
}

fn analyze(word: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let r = analysis_report(word)?;
    if json {
        return write_json(out, &r);
    }
    writeln!(out, "word: {}", r.word.input)?;
    writeln!(out, "normalized: {}{}", r.word.normalized, if r.word.mirrored { " (mirrored)" } else { "" })?;
    writeln!(out, "canonical: {}", r.word.canonical)?;
    writeln!(out, "expanded: {}", r.word.expanded)?;
    writeln!(out, "crossings: {}", r.crossings)?;
    writeln!(out, "syllables: {:?} (n = {})", r.syllables, r.n)?;
    writeln!(out, "fraction: {} from {:?}", r.fraction, r.continued_fraction)?;
    writeln!(out, "components: {}", r.components)?;
    writeln!(out, "arithmetic: {}", r.arithmetic)?;
    writeln!(out, "palindromic: {}", r.palindromic)?;
    writeln!(out, "symmetry group: {}", group_line(&r.symmetry_group))?;
    writeln!(
        out,
        "automorphisms: {} ({} with a torus action), matches prediction: {}",
        r.automorphisms.order, r.automorphisms.torus_group_order, r.automorphisms_match_prediction
    )?;
    writeln!(out, "hidden symmetries: {}", r.hidden_symmetries.notes)?;
    match &r.ladder {
        Some(l) => writeln!(out, "ladder: {}", l.key())?,
        None => writeln!(out, "ladder: undefined for arithmetic words")?,
    }
    writeln!(out, "complex: V={} E={} F={}", r.counts.vertices, r.counts.edges, r.counts.triangles)?;
    writeln!(out, "covers: {}", r.covers.verdict)?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValenceReport {
    pub schema_version: u32,
    pub word: String,
    pub excluded: bool,
    pub computed: ValenceTable,
    pub expected: Option<ValenceTable>,
    pub agree: Option<bool>,
}

fn valences(word: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let w = parse(word)?.normalize().0;
    let cx = CuspComplex::build(&w)?;
    let computed = cx.computed_valences()?;
    let expected = if is_excluded(&w) { None } else { Some(expected_valences(&w)?) };
    let report = ValenceReport {
        schema_version: SCHEMA_VERSION,
        word: w.to_string(),
        excluded: expected.is_none(),
        agree: expected.as_ref().map(|e| *e == computed),
        computed,
        expected,
    };
    if json {
        return write_json(out, &report);
    }
    writeln!(out, "label  computed  expected")?;
    for (label, val) in &report.computed {
        let exp = report
            .expected
            .as_ref()
            .map_or("-".to_string(), |e| e.get(label).map_or("?".into(), u32::to_string));
        writeln!(out, "{label:>5}  {val:>8}  {exp:>8}")?;
    }
    match report.agree {
        Some(true) => writeln!(out, "closed form agrees")?,
        Some(false) => writeln!(out, "closed form DISAGREES")?,
        None => writeln!(out, "note: closed form excluded for R2L2, RL^m, RL^mR (up to inversion and mirror)")?,
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub schema_version: u32,
    pub word: String,
    pub predicted: SymmetryGroup,
    pub candidates: BTreeMap<String, bool>,
    pub induced: Vec<String>,
}

fn candidate_name(c: Candidate) -> &'static str {
    match c {
        Candidate::Rho1 => "rho1",
        Candidate::Rho2 => "rho2",
        Candidate::Rho3 => "rho3",
        Candidate::Rho4 => "rho4",
        Candidate::G => "g",
        Candidate::Ry => "r_y",
    }
}

fn symmetries(word: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let w = parse(word)?.normalize().0;
    let cx = CuspComplex::build(&w)?;
    let report = SymmetryReport {
        schema_version: SCHEMA_VERSION,
        word: w.to_string(),
        predicted: predicted_symmetry_group(&w)?,
        candidates: Candidate::ALL
            .iter()
            .map(|&c| (candidate_name(c).to_string(), is_candidate_automorphism(&cx, c)))
            .collect(),
        induced: induced_symmetry_subgroup(&cx).iter().map(AutElement::name).collect(),
    };
    if json {
        return write_json(out, &report);
    }
    writeln!(out, "symmetry group: {}", group_line(&report.predicted))?;
    for c in Candidate::ALL {
        let name = candidate_name(c);
        writeln!(out, "{name}: {}", if report.candidates[name] { "automorphism" } else { "no" })?;
    }
    writeln!(out, "induced: {}", report.induced.join(", "))?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRow {
    pub name: String,
    pub order: Option<u32>,
    pub orientation: i8,
    pub torus_action: bool,
    pub swaps_cusps: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AutGroupReport {
    pub schema_version: u32,
    pub word: String,
    pub summary: AutGroupSummary,
    pub elements: Vec<ElementRow>,
    pub predicted: SymmetryGroup,
    pub matches_prediction: bool,
}

fn rows(elements: &[AutElement]) -> Vec<ElementRow> {
    elements
        .iter()
        .map(|e| ElementRow {
            name: e.name(),
            order: e.order,
            orientation: e.orientation,
            torus_action: e.descends(),
            swaps_cusps: e.swaps_cusps,
        })
        .collect()
}

fn write_rows(out: &mut dyn Write, rows: &[ElementRow]) -> Outcome {
    for r in rows {
        writeln!(
            out,
            "  {:<16} order {:<4} {:<9}{}{}",
            r.name,
            r.order.map_or("?".to_string(), |k| k.to_string()),
            if r.orientation == 1 { "preserve" } else { "reverse" },
            if r.torus_action { "" } else { " no-torus-action" },
            if r.swaps_cusps { " swaps-cusps" } else { "" }
        )?;
    }
    Ok(())
}

fn autgroup(word: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let w = parse(word)?.normalize().0;
    let cx = CuspComplex::build(&w)?;
    let elements = enumerate_automorphisms(&cx);
    let predicted = predicted_symmetry_group(&w)?;
    let report = AutGroupReport {
        schema_version: SCHEMA_VERSION,
        word: w.to_string(),
        summary: summarize(&elements),
        elements: rows(&elements),
        matches_prediction: matches_prediction(&cx, &elements, &predicted),
        predicted,
    };
    if json {
        return write_json(out, &report);
    }
    writeln!(
        out,
        "{} elements ({} preserve orientation, {} with a torus action)",
        report.summary.order, report.summary.orientation_preserving, report.summary.torus_group_order
    )?;
    write_rows(out, &report.elements)?;
    writeln!(out, "predicted: {}", group_line(&report.predicted))?;
    writeln!(out, "matches prediction: {}", report.matches_prediction)?;
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HiddenReport {
    pub schema_version: u32,
    pub word: String,
    pub verdict: HiddenSymmetryVerdict,
    pub detectable_elements: Vec<ElementRow>,
    pub covers: CoverReport,
}

fn hidden(word: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let w = parse(word)?.normalize().0;
    let cx = CuspComplex::build(&w)?;
    let report = HiddenReport {
        schema_version: SCHEMA_VERSION,
        word: w.to_string(),
        verdict: hidden_symmetry_verdict(&w)?,
        detectable_elements: rows(&detectable_hidden_elements(&cx)),
        covers: cover_report(&w)?,
    };
    if json {
        return write_json(out, &report);
    }
    writeln!(out, "{}", report.verdict.notes)?;
    writeln!(out, "detectable elements on the cusp: {}", report.detectable_elements.len())?;
    write_rows(out, &report.detectable_elements)?;
    writeln!(out, "covers: {}", report.covers.verdict)?;
    if let Some(v) = report.covers.volume_bound {
        writeln!(out, "  (any cusped orientable hyperbolic 3-manifold has volume >= {v})")?;
    }
    Ok(())
}

fn reason_text(r: CommensurabilityReason) -> &'static str {
    match r {
        CommensurabilityReason::Isometric => "isometric",
        CommensurabilityReason::ArithmeticSameTraceField => "arithmetic, same trace field",
        CommensurabilityReason::ArithmeticDistinctTraceField => "arithmetic, distinct trace fields",
        CommensurabilityReason::NonArithmeticDistinctCanonicalForm => {
            "non-arithmetic, distinct canonical forms"
        }
        CommensurabilityReason::MixedArithmeticNonarithmetic => "one arithmetic, one not",
    }
}

fn commensurable_cmd(a: &str, b: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let (wa, wb) = (parse(a)?, parse(b)?);
    let v = commensurable(&wa, &wb)?;
    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            schema_version: u32,
            words: [String; 2],
            #[serde(flatten)]
            verdict: &'a twobridge::commens::CommensurabilityVerdict,
        }
        return write_json(
            out,
            &Doc { schema_version: SCHEMA_VERSION, words: [wa.to_string(), wb.to_string()], verdict: &v },
        );
    }
    let head = if v.commensurable { "commensurable" } else { "not commensurable" };
    writeln!(out, "{head} ({})", reason_text(v.reason))?;
    Ok(())
}

fn orbifold(word: &str, json: bool, out: &mut dyn Write) -> Outcome {
    let w = parse(word)?.normalize().0;
    let cx = CuspComplex::build(&w)?;
    let o = minimal_orbifold_cusp(&cx)?;
    let ladder = ladder_invariant(&w)?;
    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            schema_version: u32,
            #[serde(flatten)]
            cusp: &'a twobridge::commens::OrbifoldCusp,
            ladder: &'a LadderInvariant,
        }
        return write_json(out, &Doc { schema_version: SCHEMA_VERSION, cusp: &o, ladder: &ladder });
    }
    writeln!(out, "cusp: {}", o.signature)?;
    writeln!(
        out,
        "quotient of the torus by {} symmetries; cells V={} E={} F={}",
        o.group_order, o.cells[0], o.cells[1], o.cells[2]
    )?;
    let (n, d) = o.orbifold_euler_characteristic;
    writeln!(out, "orbifold Euler characteristic: {}", if d == 1 { n.to_string() } else { format!("{n}/{d}") })?;
    for c in &o.cone_points {
        writeln!(out, "  cone point of order {} at {:?}", c.order, c.location)?;
    }
    writeln!(out, "singularities: {:?}", o.pattern)?;
    writeln!(out, "ladder: {}", ladder.key())?;
    Ok(())
}

fn census_cmd(max: usize, path: Option<PathBuf>, out: &mut dyn Write) -> Outcome {
    if max < 2 {
        return Err(Failure::Usage("--max-crossings must be at least 2".into()));
    }
    let report = census(max)?;
    let mut text = String::new();
    for r in &report.records {
        text.push_str(&serde_json::to_string(r)?);
        text.push('\n');
    }
    #[derive(Serialize)]
    struct Footer<'a> {
        summary: &'a twobridge::commens::CensusSummary,
    }
    text.push_str(&serde_json::to_string(&Footer { summary: &report.summary })?);
    text.push('\n');
    match path {
        Some(p) => {
            fs::write(&p, text)?;
            writeln!(
                out,
                "wrote {} records to {}; non-singleton classes: {:?}",
                report.records.len(),
                p.display(),
                report.summary.non_singleton_classes
            )?;
        }
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn render(word: &str, path: &PathBuf, copies: &[u32], out: &mut dyn Write) -> Outcome {
    let w = parse(word)?.normalize().0;
    let cx = CuspComplex::build(&w)?;
    let svg = render_svg(&cx, copies[0], copies[1]);
    fs::write(path, &svg)?;
    writeln!(
        out,
        "wrote {} ({} triangles drawn)",
        path.display(),
        svg.matches("<polygon").count()
    )?;
    Ok(())
}
