//! Command implementations. Every command builds a deterministic report or
//! dump on stdout; mathematical failures flip the exit code to 1 while
//! input problems bubble up as errors (exit 2).

use crate::model::{self, format_matrix, ModelCone, ModelError};
use crate::report::{Format, RunReport};
use crate::Command;
use std::path::Path;
use std::process::ExitCode;
use ultracalc::cone::{simplicial_cover, BilinearForm};
use ultracalc::hyper::fourier;
use ultracalc::indsys::{
    check_condition, check_localizable, colimit, pushforward, Condition, IndSystem,
};
use ultracalc::lattice::{check_morphism, check_t1_hypotheses, QuasiLattice};
use ultracalc::scalar::parse_scalar;
use ultracalc::suites;

pub fn run(cmd: Command, format: Format) -> Result<ExitCode, ModelError> {
    match cmd {
        Command::Validate { model } => cmd_validate(&model, format),
        Command::Colimit { model, system, subset } => {
            cmd_colimit(&model, &system, subset.as_deref(), format)
        }
        Command::Check { model, system, conditions, family_cap } => {
            cmd_check(&model, &system, &conditions, family_cap, format)
        }
        Command::Pushforward { model, system, morphism } => {
            cmd_pushforward(&model, &system, &morphism, format)
        }
        Command::Cover { vectors, model, form } => {
            cmd_cover(&vectors, model.as_deref(), form.as_deref(), format)
        }
        Command::Fourier { model, functional } => cmd_fourier(&model, &functional, format),
        Command::Selftest { suite, seed } => cmd_selftest(&suite, seed, format),
    }
}

fn emit(report: &RunReport, format: Format) -> ExitCode {
    print!("{}", report.render(format));
    ExitCode::from(report.exit_code() as u8)
}

fn cmd_validate(path: &Path, format: Format) -> Result<ExitCode, ModelError> {
    let (_, m) = model::load(path)?;
    let mut report = RunReport::new(format!("validate {}", path.display()));
    for (name, cone) in &m.cones {
        let note = match cone {
            ModelCone::Convex(c) => format!(
                "convex, dim {}, {} generators, proper: {}",
                c.dim(),
                c.generators().len(),
                c.is_proper()
            ),
            ModelCone::Sector(s) => {
                format!("sectors, dim {}, proper: {}", s.dim(), s.is_proper())
            }
        };
        report.push(format!("cone {name}"), true, Some(note));
    }
    for (name, form) in &m.forms {
        report.push(format!("form {name}"), true, Some(format!("dim {}", form.dim())));
    }
    for (name, poset) in &m.posets {
        let quasi = QuasiLattice::from_poset(poset.clone());
        let mut note = match &quasi {
            Ok(q) if q.is_lattice() => "poset, quasi-lattice, lattice".to_string(),
            Ok(_) => "poset, quasi-lattice".to_string(),
            Err(e) => format!("poset (not a quasi-lattice: {e})"),
        };
        if let Some(carried) = m.poset_cones.get(name) {
            let elems: Vec<String> = poset
                .names()
                .iter()
                .zip(carried)
                .map(|(n, c)| format!("{n}={}", describe_sector(c)))
                .collect();
            note.push_str(&format!("; cones: {}", elems.join(", ")));
        }
        report.push(format!("poset {name}"), true, Some(note));
    }
    for (name, sys) in &m.systems {
        match sys.validate() {
            Ok(()) => report.push(format!("system {name}"), true, Some("functorial".into())),
            Err(e) => report.push(format!("system {name}"), false, Some(e.to_string())),
        }
    }
    for name in m.morphisms.keys() {
        let lm = m.lattice_morphism(name)?;
        let mr = check_morphism(&lm);
        let t1 = check_t1_hypotheses(&lm);
        report.push(
            format!("morphism {name}"),
            mr.is_morphism(),
            Some(format!(
                "morphism: {}, injective: {}, pushforward hypotheses: {}",
                mr.is_morphism(),
                mr.injective,
                t1.pass()
            )),
        );
    }
    for (name, u) in &m.functionals {
        let c = u.carrier();
        report.push(
            format!("functional {name}"),
            true,
            Some(format!(
                "{} point masses, {} segments, carrier proper: {}",
                u.masses().len(),
                u.segments().len(),
                c.is_proper()
            )),
        );
    }
    Ok(emit(&report, format))
}

fn describe_sector(s: &ultracalc::cone::SectorSet) -> String {
    use ultracalc::cone::SectorSet;
    match s {
        SectorSet::One(h) => match (h.pos, h.neg) {
            (false, false) => "{0}".into(),
            (true, false) => "halfline+".into(),
            (false, true) => "halfline-".into(),
            (true, true) => "line".into(),
        },
        SectorSet::Two(t) => {
            if t.is_full() {
                return "plane".into();
            }
            if t.is_zero() {
                return "{0}".into();
            }
            let mut parts = Vec::new();
            for a in t.arcs() {
                parts.push(format!("arc({},{})->({},{})", a.start.x, a.start.y, a.end.x, a.end.y));
            }
            for r in t.rays() {
                parts.push(format!("ray({},{})", r.x, r.y));
            }
            parts.join("+")
        }
    }
}

fn lookup_system<'m>(m: &'m model::Model, name: &str) -> Result<&'m IndSystem, ModelError> {
    m.systems
        .get(name)
        .ok_or_else(|| ModelError { message: format!("unknown system {name:?}") })
}

fn parse_subset(sys: &IndSystem, subset: Option<&str>) -> Result<Option<Vec<usize>>, ModelError> {
    let Some(list) = subset else { return Ok(None) };
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match sys.index().index_of(name) {
            Some(i) => out.push(i),
            None => {
                return Err(ModelError { message: format!("unknown element {name:?} in subset") })
            }
        }
    }
    Ok(Some(out))
}

fn cmd_colimit(
    path: &Path,
    system: &str,
    subset: Option<&str>,
    format: Format,
) -> Result<ExitCode, ModelError> {
    let (_, m) = model::load(path)?;
    let sys = lookup_system(&m, system)?;
    sys.validate().map_err(|e| ModelError { message: e.to_string() })?;
    let subset = parse_subset(sys, subset)?;
    let c = colimit(sys, subset.as_deref());
    match format {
        Format::Structured => {
            let mut doc = serde_json::Map::new();
            doc.insert("system".into(), system.into());
            doc.insert("dim".into(), c.dim().into());
            let members: Vec<String> =
                c.members().iter().map(|&a| sys.index().name(a).to_string()).collect();
            doc.insert("members".into(), serde_json::to_value(members).unwrap());
            let projections: serde_json::Map<String, serde_json::Value> = c
                .members()
                .iter()
                .map(|&a| {
                    (
                        sys.index().name(a).to_string(),
                        serde_json::to_value(format_matrix(c.projection(a))).unwrap(),
                    )
                })
                .collect();
            doc.insert("projections".into(), projections.into());
            doc.insert(
                "relation_basis".into(),
                serde_json::to_value(format_matrix(c.relation_basis())).unwrap(),
            );
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!("# colimit of {system}");
            println!("dim {}", c.dim());
            for &a in c.members() {
                println!("projection {}:", sys.index().name(a));
                for row in format_matrix(c.projection(a)) {
                    println!("  [{}]", row.join(", "));
                }
            }
            println!("relation basis ({} rows):", c.relation_basis().rows());
            for row in format_matrix(c.relation_basis()) {
                println!("  [{}]", row.join(", "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(
    path: &Path,
    system: &str,
    conditions: &str,
    family_cap: Option<usize>,
    format: Format,
) -> Result<ExitCode, ModelError> {
    let (_, m) = model::load(path)?;
    let sys = lookup_system(&m, system)?;
    sys.validate().map_err(|e| ModelError { message: e.to_string() })?;
    let q = QuasiLattice::from_poset(sys.index().clone())
        .map_err(|e| ModelError { message: format!("index is not a quasi-lattice: {e}") })?;
    let mut report = RunReport::new(format!("check {system}"));
    for c in conditions.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let r = match c {
            "I" => check_condition(sys, &q, Condition::I),
            "II" => check_condition(sys, &q, Condition::II),
            "III" => check_condition(sys, &q, Condition::III),
            "IIIprime" | "III'" => check_localizable(sys, &q, family_cap),
            other => return Err(ModelError { message: format!("unknown condition {other:?}") }),
        };
        let detail = r.counterexample.as_ref().map(|cex| {
            format!("counterexample (replayable): {}", describe_counterexample(sys, cex))
        });
        report.push(format!("condition {}", r.condition), r.pass, detail);
    }
    Ok(emit(&report, format))
}

fn describe_counterexample(
    sys: &IndSystem,
    cex: &ultracalc::indsys::Counterexample,
) -> String {
    use ultracalc::indsys::Counterexample as C;
    use ultracalc::scalar::format_scalar;
    let name = |i: usize| sys.index().name(i).to_string();
    let vec = |v: &[ultracalc::scalar::Scalar]| {
        let items: Vec<String> = v.iter().map(format_scalar).collect();
        format!("[{}]", items.join(", "))
    };
    match cex {
        C::Injectivity { pair, kernel_vector } => format!(
            "kernel vector {} of the map {} -> {}",
            vec(kernel_vector),
            name(pair.0),
            name(pair.1)
        ),
        C::Decomposition { pair, join, target_vector } => format!(
            "vector {} over {} misses the images of {} and {}",
            vec(target_vector),
            name(*join),
            name(pair.0),
            name(pair.1)
        ),
        C::Gluing { pair, upper, witness } => format!(
            "{} from {} and {} from {} agree at {} but do not glue",
            vec(&witness.0),
            name(pair.0),
            vec(&witness.1),
            name(pair.1),
            name(*upper)
        ),
        C::Family { family, upper, witnesses } => {
            let members: Vec<String> = family.iter().map(|&a| name(a)).collect();
            let vecs: Vec<String> = witnesses.iter().map(|w| vec(w)).collect();
            format!(
                "family [{}] with vectors [{}] agrees at {} but does not glue",
                members.join(", "),
                vecs.join(", "),
                name(*upper)
            )
        }
    }
}

fn cmd_pushforward(
    path: &Path,
    system: &str,
    morphism: &str,
    format: Format,
) -> Result<ExitCode, ModelError> {
    let (_, m) = model::load(path)?;
    let sys = lookup_system(&m, system)?;
    sys.validate().map_err(|e| ModelError { message: e.to_string() })?;
    let lm = m.lattice_morphism(morphism)?;
    let p = pushforward(sys, &lm).map_err(|e| ModelError { message: e.to_string() })?;
    let (_, target_name, _) = &m.morphisms[morphism];
    let doc = model::system_to_doc(&format!("{system}_pushforward"), target_name, &p.system);
    match format {
        Format::Structured | Format::Text => {
            // the dump is a model document either way, so it re-parses
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_cover(
    vectors: &str,
    model_path: Option<&Path>,
    form_name: Option<&str>,
    format: Format,
) -> Result<ExitCode, ModelError> {
    let mut vecs = Vec::new();
    for part in vectors.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let coords: Result<Vec<_>, _> = part
            .split(',')
            .map(|c| parse_scalar(c.trim()).map_err(|e| ModelError { message: e.to_string() }))
            .collect();
        vecs.push(coords?);
    }
    if vecs.is_empty() {
        return Err(ModelError { message: "no vectors given".into() });
    }
    let dim = vecs[0].len();
    let form = match (model_path, form_name) {
        (Some(path), Some(name)) => {
            let (_, m) = model::load(path)?;
            m.forms
                .get(name)
                .cloned()
                .ok_or_else(|| ModelError { message: format!("unknown form {name:?}") })?
        }
        (None, Some(_)) => {
            return Err(ModelError { message: "--form requires --model".into() })
        }
        _ => BilinearForm::standard(dim),
    };
    let cover =
        simplicial_cover(&vecs, &form).map_err(|e| ModelError { message: e.to_string() })?;
    let mut doc = crate::model::ModelDoc::default();
    for (i, k) in cover.cones.iter().enumerate() {
        doc.cones.insert(format!("K{}", i + 1), model::cone_to_doc(k));
    }
    for ((i, j), k) in &cover.pairwise {
        doc.cones.insert(format!("K{}{}", i + 1, j + 1), model::cone_to_doc(k));
    }
    for (i, g) in cover.gammas.iter().enumerate() {
        doc.cones.insert(format!("Gamma{}", i + 1), model::cone_to_doc(g));
    }
    for ((i, j), v) in &cover.wedges {
        doc.cones.insert(format!("V{}{}", i + 1, j + 1), model::cone_to_doc(v));
    }
    let _ = format;
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    Ok(ExitCode::SUCCESS)
}

fn cmd_fourier(path: &Path, functional: &str, format: Format) -> Result<ExitCode, ModelError> {
    let (_, m) = model::load(path)?;
    let u = m
        .functionals
        .get(functional)
        .ok_or_else(|| ModelError { message: format!("unknown functional {functional:?}") })?;
    let h = fourier(u);
    match format {
        Format::Structured => {
            let mut doc = serde_json::Map::new();
            doc.insert("functional".into(), functional.into());
            doc.insert("upper".into(), h.upper().to_string().into());
            doc.insert("lower".into(), h.lower().to_string().into());
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
        }
        Format::Text => {
            println!("({} | {})", h.upper(), h.lower());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_selftest(suite: &str, seed: u64, format: Format) -> Result<ExitCode, ModelError> {
    let mut report = RunReport::new(format!("selftest {suite} seed={seed}"));
    let run_one = |report: &mut RunReport, r: ultracalc::suites::SuiteReport| {
        let detail = if r.pass() {
            format!("{} checks", r.cases)
        } else {
            format!("{} checks, first failure: {}", r.cases, r.failures[0])
        };
        report.push(format!("suite {}", r.name), r.pass(), Some(detail));
    };
    if suite == "all" {
        for name in suites::SUITE_NAMES {
            run_one(&mut report, suites::suite_by_name(name, seed).expect("known name"));
        }
    } else {
        match suites::suite_by_name(suite, seed) {
            Some(r) => run_one(&mut report, r),
            None => {
                return Err(ModelError {
                    message: format!(
                        "unknown suite {suite:?}; available: {}",
                        suites::SUITE_NAMES.join(", ")
                    ),
                })
            }
        }
    }
    Ok(emit(&report, format))
}
