//! JSON documents and human-readable tables for every command.

use std::fmt::Write as _;

use serde::Serialize;

use crate::filtration::{AttReport, DepthInterval, DimensionFiltration, ProbeReport, SeqCmVerdict};
use crate::ideal::{MonomialIdeal, PrimeSupport};
use crate::invariants::{LocalizationProfile, ModuleProfile};
use crate::ring::FieldSpec;
use crate::varset::VarSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

fn primes<'a>(ps: impl IntoIterator<Item = &'a PrimeSupport>, names: &[String]) -> Vec<String> {
    ps.into_iter().map(|p| p.display(names)).collect()
}

fn join_or_dash(v: Vec<String>) -> String {
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn interval(iv: Option<DepthInterval>) -> Option<[usize; 2]> {
    iv.map(|d| [d.lo, d.hi])
}

fn interval_text(iv: Option<DepthInterval>) -> String {
    match iv {
        None => "-".into(),
        Some(d) if d.is_exact() => d.lo.to_string(),
        Some(d) => format!("[{},{}]", d.lo, d.hi),
    }
}

fn field_line(field: FieldSpec) -> String {
    match field {
        FieldSpec::Rationals => format!("field: {field}"),
        FieldSpec::Prime(_) => format!("field: {field} (homology, depth and CM-ness can depend on the characteristic)"),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct HRow {
    i: usize,
    nonzero: bool,
    finite_length: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    k_dim: Option<u64>,
}

#[derive(Serialize)]
struct ProfileJson {
    vars: Vec<String>,
    gens: Vec<Vec<String>>,
    dim: usize,
    depth: usize,
    mdepth: usize,
    maximal_depth: bool,
    cohen_macaulay: bool,
    unmixed: bool,
    generalized_cm: bool,
    field: String,
    ass: Vec<String>,
    assd: Vec<String>,
    h_table: Vec<HRow>,
}

fn profile_json(p: &ModuleProfile) -> ProfileJson {
    let names = p.names();
    ProfileJson {
        vars: names.to_vec(),
        gens: p.ideals.iter().map(|i| i.gen_strings()).collect(),
        dim: p.dim,
        depth: p.depth,
        mdepth: p.mdepth,
        maximal_depth: p.flags.maximal_depth,
        cohen_macaulay: p.flags.cohen_macaulay,
        unmixed: p.flags.unmixed,
        generalized_cm: p.flags.generalized_cm,
        field: p.field.to_string(),
        ass: primes(&p.ass, names),
        assd: primes(&p.assd, names),
        h_table: p
            .hochster
            .entries
            .iter()
            .map(|e| HRow { i: e.degree, nonzero: e.nonzero, finite_length: e.finite_length, k_dim: e.k_dim })
            .collect(),
    }
}

pub fn profile(p: &ModuleProfile, fmt: Format) -> String {
    if fmt == Format::Json {
        return to_json(&profile_json(p));
    }
    let names = p.names();
    let mut s = String::new();
    writeln!(s, "{}", field_line(p.field)).unwrap();
    for (k, i) in p.ideals.iter().enumerate() {
        let label = if p.ideals.len() > 1 { format!("summand {k}") } else { "ideal".into() };
        writeln!(s, "{label}: {}", i.display()).unwrap();
    }
    writeln!(s, "dim: {}", p.dim).unwrap();
    writeln!(s, "depth: {}", p.depth).unwrap();
    writeln!(s, "mdepth: {}", p.mdepth).unwrap();
    let f = p.flags;
    writeln!(s, "maximal depth: {}", f.maximal_depth).unwrap();
    writeln!(s, "cohen-macaulay: {}", f.cohen_macaulay).unwrap();
    writeln!(s, "unmixed: {}", f.unmixed).unwrap();
    writeln!(s, "generalized cm: {}", f.generalized_cm).unwrap();
    writeln!(s, "ass: {}", join_or_dash(primes(&p.ass, names))).unwrap();
    writeln!(s, "assd: {}", join_or_dash(primes(&p.assd, names))).unwrap();
    writeln!(s, "local cohomology:").unwrap();
    writeln!(s, "  {:>3}  {:<7}  {:<13}  k_dim", "i", "nonzero", "finite_length").unwrap();
    for e in &p.hochster.entries {
        let k = e.k_dim.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
        writeln!(s, "  {:>3}  {:<7}  {:<13}  {}", e.degree, e.nonzero, e.finite_length, k).unwrap();
    }
    s
}

#[derive(Serialize)]
struct LevelJson {
    i: usize,
    ideal_gens: Vec<String>,
    nonzero: bool,
    ass_i: Vec<String>,
    depth_interval: Option<[usize; 2]>,
    module_depth_interval: Option<[usize; 2]>,
}

#[derive(Serialize)]
struct FiltrationJson {
    field: String,
    vars: Vec<String>,
    dim: usize,
    depth: usize,
    t: usize,
    mdepth_chain: Vec<[usize; 2]>,
    levels: Vec<LevelJson>,
}

/// Level ideals are printed by generators; the unit ideal prints as `["1"]`.
fn level_gens(i: &MonomialIdeal) -> Vec<String> {
    if i.is_unit() {
        vec!["1".into()]
    } else {
        i.gen_strings()
    }
}

pub fn filtration(f: &DimensionFiltration, fmt: Format) -> String {
    let names = f.base.ring().names();
    let chain = crate::filtration::mdepth_chain(f);
    if fmt == Format::Json {
        let levels = f
            .levels
            .iter()
            .zip(&f.intervals)
            .map(|(l, iv)| LevelJson {
                i: l.i,
                ideal_gens: level_gens(&l.ideal),
                nonzero: l.nonzero,
                ass_i: primes(&l.ass_i, names),
                depth_interval: interval(iv.quotient),
                module_depth_interval: interval(iv.module),
            })
            .collect();
        return to_json(&FiltrationJson {
            field: f.base.ring().field().to_string(),
            vars: names.to_vec(),
            dim: f.dim,
            depth: f.depth,
            t: f.t,
            mdepth_chain: chain.iter().map(|&(i, m)| [i, m]).collect(),
            levels,
        });
    }
    let mut s = String::new();
    writeln!(s, "{}", field_line(f.base.ring().field())).unwrap();
    writeln!(s, "ideal: {}", f.base.display()).unwrap();
    writeln!(s, "dim: {}  depth: {}  t: {}", f.dim, f.depth, f.t).unwrap();
    writeln!(s, "  {:>3}  {:<7}  {:<11}  {:<11}  level ideal / Ass^i", "i", "nonzero", "depth M_i", "depth Q_i").unwrap();
    for (l, iv) in f.levels.iter().zip(&f.intervals) {
        let ideal = if l.ideal.is_unit() { "(1)".to_string() } else { l.ideal.display() };
        writeln!(
            s,
            "  {:>3}  {:<7}  {:<11}  {:<11}  {}",
            l.i,
            l.nonzero,
            interval_text(iv.module),
            interval_text(iv.quotient),
            ideal
        )
        .unwrap();
        if !l.ass_i.is_empty() {
            writeln!(s, "  {:>3}  {:<7}  {:<11}  {:<11}  {}", "", "", "", "", primes(&l.ass_i, names).join(" ")).unwrap();
        }
    }
    let chain: Vec<String> = chain.iter().map(|(i, m)| format!("M_{i}:{m}")).collect();
    writeln!(s, "mdepth chain: {}", chain.join(" ")).unwrap();
    s
}

#[derive(Serialize)]
struct WitnessJson {
    skeleton_dim: i64,
    face: String,
    degree: i64,
}

#[derive(Serialize)]
struct SeqCmJson {
    field: String,
    status: &'static str,
    sequentially_cm: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    filtration_check: Option<bool>,
}

pub fn seqcm(ideal: &MonomialIdeal, v: &SeqCmVerdict, filtration_check: Option<bool>, fmt: Format) -> String {
    let names = ideal.ring().names();
    let doc = match v {
        SeqCmVerdict::Decided { sequentially_cm, witness } => SeqCmJson {
            field: ideal.ring().field().to_string(),
            status: "decided",
            sequentially_cm: Some(*sequentially_cm),
            witness: witness.as_ref().map(|w| WitnessJson {
                skeleton_dim: w.skeleton_dim,
                face: w.face.display(names),
                degree: w.degree,
            }),
            reason: None,
            filtration_check,
        },
        SeqCmVerdict::Undecided(r) => SeqCmJson {
            field: ideal.ring().field().to_string(),
            status: "undecided",
            sequentially_cm: None,
            witness: None,
            reason: Some(r.clone()),
            filtration_check,
        },
    };
    if fmt == Format::Json {
        return to_json(&doc);
    }
    let mut s = String::new();
    writeln!(s, "{}", field_line(ideal.ring().field())).unwrap();
    writeln!(s, "ideal: {}", ideal.display()).unwrap();
    match doc.sequentially_cm {
        Some(b) => writeln!(s, "sequentially cohen-macaulay: {b}").unwrap(),
        None => writeln!(s, "sequentially cohen-macaulay: undecided ({})", doc.reason.unwrap_or_default()).unwrap(),
    }
    if let Some(w) = doc.witness {
        writeln!(
            s,
            "witness: pure {}-skeleton, link of {} has reduced homology in degree {}",
            w.skeleton_dim, w.face, w.degree
        )
        .unwrap();
    }
    let fc = match filtration_check {
        Some(b) => b.to_string(),
        None => "undecided (inexact quotient depth intervals)".into(),
    };
    writeln!(s, "filtration check: {fc}").unwrap();
    s
}

#[derive(Serialize)]
struct ClaimJson {
    tag: &'static str,
    full_set: bool,
    primes: Vec<String>,
}

#[derive(Serialize)]
struct AttDegreeJson {
    i: usize,
    nonzero: bool,
    claims: Vec<ClaimJson>,
}

#[derive(Serialize)]
struct AttJson {
    field: String,
    depth: usize,
    dim: usize,
    hypothesis_every: bool,
    hypothesis_exists: bool,
    sequentially_cm: Option<bool>,
    notes: Vec<String>,
    degrees: Vec<AttDegreeJson>,
}

pub fn att(ideal: &MonomialIdeal, r: &AttReport, fmt: Format) -> String {
    let names = ideal.ring().names();
    let degrees: Vec<AttDegreeJson> = r
        .degrees
        .iter()
        .map(|d| AttDegreeJson {
            i: d.degree,
            nonzero: d.nonzero,
            claims: d
                .claims
                .iter()
                .map(|c| ClaimJson { tag: c.tag.as_str(), full_set: c.tag.is_full_set(), primes: primes(&c.primes, names) })
                .collect(),
        })
        .collect();
    if fmt == Format::Json {
        return to_json(&AttJson {
            field: ideal.ring().field().to_string(),
            depth: r.depth,
            dim: r.dim,
            hypothesis_every: r.hypothesis_every,
            hypothesis_exists: r.hypothesis_exists,
            sequentially_cm: r.sequentially_cm,
            notes: r.notes.clone(),
            degrees,
        });
    }
    let mut s = String::new();
    writeln!(s, "{}", field_line(ideal.ring().field())).unwrap();
    writeln!(s, "ideal: {}", ideal.display()).unwrap();
    writeln!(s, "depth: {}  dim: {}", r.depth, r.dim).unwrap();
    for n in &r.notes {
        writeln!(s, "note: {n}").unwrap();
    }
    for d in degrees {
        writeln!(s, "H^{} ({}):", d.i, if d.nonzero { "nonzero" } else { "zero" }).unwrap();
        for c in d.claims {
            let kind = if c.full_set { "=" } else { "⊇" };
            writeln!(s, "  {:<16} Att {kind} {{{}}}", c.tag, c.primes.join(" ")).unwrap();
        }
    }
    s
}

#[derive(Serialize)]
struct PsuppJson {
    i: usize,
    faces: Vec<String>,
    primes: Vec<String>,
}

#[derive(Serialize)]
struct PsuppDoc {
    field: String,
    degrees: Vec<PsuppJson>,
}

pub fn psupp(ideal: &MonomialIdeal, rows: &[(usize, Vec<VarSet>)], fmt: Format) -> String {
    let names = ideal.ring().names();
    let n = ideal.nvars();
    let degrees: Vec<PsuppJson> = rows
        .iter()
        .map(|(i, faces)| PsuppJson {
            i: *i,
            faces: faces.iter().map(|f| f.display(names)).collect(),
            primes: faces.iter().map(|&f| PrimeSupport::of_face(f, n).display(names)).collect(),
        })
        .collect();
    if fmt == Format::Json {
        return to_json(&PsuppDoc { field: ideal.ring().field().to_string(), degrees });
    }
    let mut s = String::new();
    writeln!(s, "{}", field_line(ideal.ring().field())).unwrap();
    writeln!(s, "ideal: {}", ideal.display()).unwrap();
    for d in degrees {
        writeln!(s, "degree {}: {}", d.i, join_or_dash(d.faces)).unwrap();
    }
    s
}

#[derive(Serialize)]
struct PolarizeJson {
    vars: Vec<String>,
    gens: Vec<String>,
    added_vars: usize,
}

pub fn polarize(p: &crate::ideal::Polarization, fmt: Format) -> String {
    if fmt == Format::Json {
        return to_json(&PolarizeJson {
            vars: p.ideal.ring().names().to_vec(),
            gens: p.ideal.gen_strings(),
            added_vars: p.added_vars,
        });
    }
    format!(
        "ring: {}\npolarization: {}\nadded variables: {}\n",
        p.ideal.ring().names().join(","),
        p.ideal.display(),
        p.added_vars
    )
}

#[derive(Serialize)]
struct TensorJson {
    factor_depths: Vec<usize>,
    factor_maximal_depth: Vec<bool>,
    join: ProfileJson,
}

pub fn tensor(factors: &[ModuleProfile], join: &ModuleProfile, fmt: Format) -> String {
    if fmt == Format::Json {
        return to_json(&TensorJson {
            factor_depths: factors.iter().map(|p| p.depth).collect(),
            factor_maximal_depth: factors.iter().map(|p| p.flags.maximal_depth).collect(),
            join: profile_json(join),
        });
    }
    let mut s = String::new();
    for (k, p) in factors.iter().enumerate() {
        writeln!(s, "factor {k}: {}  depth {}  maximal depth {}", p.ideals[0].display(), p.depth, p.flags.maximal_depth)
            .unwrap();
    }
    writeln!(s, "join:").unwrap();
    s.push_str(&profile(join, Format::Table));
    s
}

#[derive(Serialize)]
struct LocalizeJson {
    face: String,
    prime: String,
    face_size: usize,
    global_depth: usize,
    contains_assd: bool,
    localization: ProfileJson,
}

pub fn localize(ideal: &MonomialIdeal, l: &LocalizationProfile, fmt: Format) -> String {
    let names = ideal.ring().names();
    let doc = LocalizeJson {
        face: l.face.display(names),
        prime: PrimeSupport::of_face(l.face, ideal.nvars()).display(names),
        face_size: l.face_size,
        global_depth: l.global_depth,
        contains_assd: l.contains_assd,
        localization: profile_json(&l.profile),
    };
    if fmt == Format::Json {
        return to_json(&doc);
    }
    let mut s = String::new();
    writeln!(s, "face: {}  prime: {}  dim S/p: {}", doc.face, doc.prime, doc.face_size).unwrap();
    writeln!(s, "global depth: {}  local depth: {}", doc.global_depth, l.profile.depth).unwrap();
    writeln!(s, "prime contains an Assd member: {}", doc.contains_assd).unwrap();
    writeln!(s, "localization (link ideal):").unwrap();
    s.push_str(&profile(&l.profile, Format::Table));
    s
}

#[derive(Serialize)]
struct HitJson {
    sample: usize,
    vars: Vec<String>,
    gens: Vec<String>,
    degree: usize,
    depth: usize,
    dim: usize,
    k_dim: u64,
}

#[derive(Serialize)]
struct ProbeJson {
    field: String,
    seed: u64,
    samples: usize,
    max_vertices: usize,
    qualifying: usize,
    hits: Vec<HitJson>,
}

pub fn probe(r: &ProbeReport, field: FieldSpec, fmt: Format) -> String {
    let hits: Vec<HitJson> = r
        .hits
        .iter()
        .map(|h| HitJson {
            sample: h.sample,
            vars: h.ideal.ring().names().to_vec(),
            gens: h.ideal.gen_strings(),
            degree: h.degree,
            depth: h.depth,
            dim: h.dim,
            k_dim: h.k_dim,
        })
        .collect();
    if fmt == Format::Json {
        return to_json(&ProbeJson {
            field: field.to_string(),
            seed: r.config.seed,
            samples: r.config.samples,
            max_vertices: r.config.max_vertices,
            qualifying: r.qualifying,
            hits,
        });
    }
    let mut s = String::new();
    writeln!(s, "{}", field_line(field)).unwrap();
    writeln!(
        s,
        "seed {}  samples {}  max vertices {}  with maximal depth and positive depth: {}",
        r.config.seed, r.config.samples, r.config.max_vertices, r.qualifying
    )
    .unwrap();
    if hits.is_empty() {
        writeln!(s, "no nonzero finite-length H^i found").unwrap();
    }
    for h in hits {
        writeln!(
            s,
            "HIT sample {}: ({}) in {}: H^{} has finite length {} (depth {}, dim {})",
            h.sample,
            h.gens.join(", "),
            h.vars.join(","),
            h.degree,
            h.k_dim,
            h.depth,
            h.dim
        )
        .unwrap();
    }
    s
}
