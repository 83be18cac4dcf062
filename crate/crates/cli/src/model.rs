//! The model file format: a single JSON document with named sections for
//! cones, forms, posets, systems, morphisms and functionals. Rationals are
//! strings like `"p/q"` and complex rationals like `"1/2-3i"`, so no
//! precision is lost in transit. Parsing resolves all cross-references and
//! validates dimensions.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use ultracalc::cone::sector::{SectorSet1, SectorSet2};
use ultracalc::cone::{BilinearForm, ConvexCone, Dir, SectorSet};
use ultracalc::hyper::{ECoef, GaussRat, Poly, PointMass, Segment, Side, Ultrafunctional1D};
use ultracalc::lattice::{cone_lattice_from_family, FinitePoset, LatticeMorphism, QuasiLattice};
use ultracalc::linalg::Mat;
use ultracalc::indsys::IndSystem;
use ultracalc::scalar::{format_scalar, parse_scalar, Scalar};

#[derive(Debug)]
pub struct ModelError {
    pub message: String,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl std::error::Error for ModelError {}

fn err<T>(message: impl Into<String>) -> Result<T, ModelError> {
    Err(ModelError { message: message.into() })
}

// ---------------------------------------------------------------------
// serde document
// ---------------------------------------------------------------------

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelDoc {
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub cones: BTreeMap<String, ConeDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, FormDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub posets: BTreeMap<String, PosetDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub systems: BTreeMap<String, SystemDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismDoc>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub functionals: BTreeMap<String, FunctionalDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeDoc {
    pub dim: usize,
    /// Convex polyhedral cone by generators.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<String>>>,
    /// One-dimensional sector: "zero" | "pos" | "neg" | "line".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfline: Option<String>,
    /// Two-dimensional sector set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sectors: Option<Vec<SectorDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub full: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SectorDoc {
    pub start: Vec<String>,
    pub end: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDoc {
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDoc {
    /// Explicit element names, with `leq`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    /// Explicit pairs `[a, b]` meaning `a <= b`; the reflexive-transitive
    /// closure is taken.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<(String, String)>>,
    /// Alternative form: the index generated from named cones (dimension at
    /// most 2). `closure` selects the meet-closure of the family plus the
    /// degenerate cone (elements `A0, A1, ...`) or its union lattice
    /// (elements `B0, B1, ...`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cone_family: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub poset: String,
    pub dims: BTreeMap<String, usize>,
    /// Connecting matrices keyed by `"a->b"` for comparable pairs.
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: String,
    pub target: String,
    /// Element images by name; may be omitted when both posets are
    /// cone-generated, in which case the inclusion of equal cones is taken.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub map: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalDoc {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub point_masses: Vec<PointMassDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub segments: Vec<SegmentDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointMassDoc {
    pub z: String,
    pub m: usize,
    pub c: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SegmentDoc {
    pub side: String,
    pub lambda: String,
    /// Weight polynomial coefficients in increasing degree.
    pub poly: Vec<String>,
}

// ---------------------------------------------------------------------
// resolved model
// ---------------------------------------------------------------------

/// A cone in either representation.
#[derive(Clone, Debug)]
pub enum ModelCone {
    Convex(ConvexCone),
    Sector(SectorSet),
}

/// The fully resolved model: all references checked, all structures built.
pub struct Model {
    pub cones: BTreeMap<String, ModelCone>,
    pub forms: BTreeMap<String, BilinearForm>,
    pub posets: BTreeMap<String, FinitePoset>,
    /// For cone-generated posets, the cone carried by each element.
    pub poset_cones: BTreeMap<String, Vec<SectorSet>>,
    pub systems: BTreeMap<String, IndSystem>,
    pub morphisms: BTreeMap<String, (String, String, Vec<usize>)>,
    pub functionals: BTreeMap<String, Ultrafunctional1D>,
}

impl Model {
    /// The quasi-lattice of a named poset, where one exists.
    pub fn quasi_lattice(&self, poset: &str) -> Result<QuasiLattice, ModelError> {
        let p = self
            .posets
            .get(poset)
            .ok_or_else(|| ModelError { message: format!("unknown poset {poset:?}") })?;
        QuasiLattice::from_poset(p.clone()).map_err(|e| ModelError { message: e.to_string() })
    }

    /// Resolves a named morphism into lattice form.
    pub fn lattice_morphism(&self, name: &str) -> Result<LatticeMorphism, ModelError> {
        let (src, tgt, map) = self
            .morphisms
            .get(name)
            .ok_or_else(|| ModelError { message: format!("unknown morphism {name:?}") })?;
        Ok(LatticeMorphism {
            source: self.quasi_lattice(src)?,
            target: self.quasi_lattice(tgt)?,
            map: map.clone(),
        })
    }
}

pub fn parse_vector(v: &[String]) -> Result<Vec<Scalar>, ModelError> {
    v.iter()
        .map(|s| parse_scalar(s).map_err(|e| ModelError { message: e.to_string() }))
        .collect()
}

pub fn parse_matrix(m: &[Vec<String>]) -> Result<Mat, ModelError> {
    let rows: Result<Vec<Vec<Scalar>>, ModelError> = m.iter().map(|r| parse_vector(r)).collect();
    let rows = rows?;
    if let Some(w) = rows.first().map(|r| r.len()) {
        if rows.iter().any(|r| r.len() != w) {
            return err("ragged matrix rows");
        }
    }
    Ok(Mat::from_rows(rows))
}

pub fn format_vector(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

pub fn format_matrix(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| format_vector(m.row(i))).collect()
}

/// Parses complex rational literals: `"p/q"`, `"i"`, `"-2i"`, `"1/2+3/4i"`.
pub fn parse_gauss(s: &str) -> Result<GaussRat, ModelError> {
    let t = s.trim().replace(' ', "");
    if t.is_empty() {
        return err("empty complex literal");
    }
    // find a +/- separating real and imaginary parts (not at position 0,
    // not inside a fraction)
    let bytes = t.as_bytes();
    let mut split = None;
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if b == b'+' || b == b'-' {
            split = Some(i);
        }
    }
    let parse_imag = |part: &str| -> Result<Scalar, ModelError> {
        let body = &part[..part.len() - 1];
        let body = match body {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        parse_scalar(body).map_err(|e| ModelError { message: e.to_string() })
    };
    if t.ends_with('i') {
        if let Some(pos) = split {
            let (re, im) = t.split_at(pos);
            let re = parse_scalar(re).map_err(|e| ModelError { message: e.to_string() })?;
            return Ok(GaussRat::new(re, parse_imag(im)?));
        }
        return Ok(GaussRat::new(Scalar::from_integer(0.into()), parse_imag(&t)?));
    }
    let re = parse_scalar(&t).map_err(|e| ModelError { message: e.to_string() })?;
    Ok(GaussRat::from_real(re))
}

fn resolve_cone(name: &str, doc: &ConeDoc) -> Result<ModelCone, ModelError> {
    let reprs = [doc.generators.is_some(), doc.halfline.is_some(), doc.sectors.is_some() || doc.rays.is_some() || doc.full];
    if reprs.iter().filter(|&&b| b).count() != 1 {
        return err(format!("cone {name:?} must use exactly one representation"));
    }
    if let Some(gens) = &doc.generators {
        let gens: Result<Vec<Vec<Scalar>>, ModelError> = gens.iter().map(|g| parse_vector(g)).collect();
        let cone = ConvexCone::new(doc.dim, gens?).map_err(|e| ModelError { message: format!("cone {name:?}: {e}") })?;
        return Ok(ModelCone::Convex(cone));
    }
    if let Some(h) = &doc.halfline {
        if doc.dim != 1 {
            return err(format!("cone {name:?}: halfline form requires dim 1"));
        }
        let s = match h.as_str() {
            "zero" => SectorSet1::zero(),
            "pos" => SectorSet1::positive(),
            "neg" => SectorSet1::negative(),
            "line" => SectorSet1::line(),
            other => return err(format!("cone {name:?}: unknown halfline {other:?}")),
        };
        return Ok(ModelCone::Sector(SectorSet::One(s)));
    }
    if doc.dim != 2 {
        return err(format!("cone {name:?}: sector form requires dim 2"));
    }
    let mut s = if doc.full { SectorSet2::full_plane() } else { SectorSet2::zero() };
    for sec in doc.sectors.iter().flatten() {
        let start = dir_from(
            &parse_vector(&sec.start)?,
            name,
        )?;
        let end = dir_from(&parse_vector(&sec.end)?, name)?;
        let piece = SectorSet2::sector(start, end)
            .map_err(|e| ModelError { message: format!("cone {name:?}: {e}") })?;
        s = s.join(&piece);
    }
    for ray in doc.rays.iter().flatten() {
        let d = dir_from(&parse_vector(ray)?, name)?;
        s = s.join(&SectorSet2::ray(d));
    }
    Ok(ModelCone::Sector(SectorSet::Two(s)))
}

fn dir_from(v: &[Scalar], name: &str) -> Result<Dir, ModelError> {
    if v.len() != 2 {
        return err(format!("cone {name:?}: directions have two coordinates"));
    }
    Dir::from_vec(v).ok_or_else(|| ModelError { message: format!("cone {name:?}: zero direction") })
}

/// Parses and resolves a model document.
pub fn resolve(doc: &ModelDoc) -> Result<Model, ModelError> {
    let mut cones = BTreeMap::new();
    for (name, c) in &doc.cones {
        cones.insert(name.clone(), resolve_cone(name, c)?);
    }
    let mut forms = BTreeMap::new();
    for (name, f) in &doc.forms {
        let m = parse_matrix(&f.matrix)?;
        let form =
            BilinearForm::new(m).map_err(|e| ModelError { message: format!("form {name:?}: {e}") })?;
        forms.insert(name.clone(), form);
    }
    let mut posets = BTreeMap::new();
    let mut poset_cones = BTreeMap::new();
    for (name, p) in &doc.posets {
        match (&p.elements, &p.cone_family) {
            (Some(elements), None) => {
                let leq = p.leq.clone().unwrap_or_default();
                let poset = FinitePoset::from_pairs(elements.clone(), &leq)
                    .map_err(|e| ModelError { message: format!("poset {name:?}: {e}") })?;
                posets.insert(name.clone(), poset);
            }
            (None, Some(family)) => {
                let mut sectors = Vec::with_capacity(family.len());
                for cname in family {
                    let cone = cones.get(cname).ok_or_else(|| ModelError {
                        message: format!("poset {name:?}: unknown cone {cname:?}"),
                    })?;
                    let sector = match cone {
                        ModelCone::Sector(s) => s.clone(),
                        ModelCone::Convex(c) => SectorSet::from_convex(c).map_err(|e| {
                            ModelError { message: format!("poset {name:?}: {e}") }
                        })?,
                    };
                    sectors.push(sector);
                }
                let cl = cone_lattice_from_family(&sectors, ultracalc::lattice::MAX_ELEMENTS)
                    .map_err(|e| ModelError { message: format!("poset {name:?}: {e}") })?;
                let (poset, carried) = match p.closure.as_deref().unwrap_or("meets") {
                    "meets" => (cl.quasi.poset().clone(), cl.cones_a),
                    "unions" => (cl.lattice.poset().clone(), cl.cones_b),
                    other => {
                        return err(format!(
                            "poset {name:?}: closure must be \"meets\" or \"unions\", got {other:?}"
                        ))
                    }
                };
                posets.insert(name.clone(), poset);
                poset_cones.insert(name.clone(), carried);
            }
            _ => {
                return err(format!(
                    "poset {name:?} needs either elements/leq or cone_family/closure"
                ))
            }
        }
    }
    let mut systems = BTreeMap::new();
    for (name, s) in &doc.systems {
        let poset = posets
            .get(&s.poset)
            .ok_or_else(|| ModelError { message: format!("system {name:?}: unknown poset {:?}", s.poset) })?;
        let mut dims = Vec::with_capacity(poset.len());
        for e in poset.names() {
            match s.dims.get(e) {
                Some(&d) => dims.push(d),
                None => return err(format!("system {name:?}: missing dimension for {e:?}")),
            }
        }
        let mut maps = BTreeMap::new();
        for (key, mat) in &s.maps {
            let Some((a, b)) = key.split_once("->") else {
                return err(format!("system {name:?}: map key {key:?} is not \"a->b\""));
            };
            let ai = poset
                .index_of(a.trim())
                .ok_or_else(|| ModelError { message: format!("system {name:?}: unknown element {a:?}") })?;
            let bi = poset
                .index_of(b.trim())
                .ok_or_else(|| ModelError { message: format!("system {name:?}: unknown element {b:?}") })?;
            maps.insert((ai, bi), parse_matrix(mat)?);
        }
        let sys = IndSystem::new(poset.clone(), dims, maps)
            .map_err(|e| ModelError { message: format!("system {name:?}: {e}") })?;
        systems.insert(name.clone(), sys);
    }
    let mut morphisms = BTreeMap::new();
    for (name, m) in &doc.morphisms {
        let source = posets
            .get(&m.source)
            .ok_or_else(|| ModelError { message: format!("morphism {name:?}: unknown poset {:?}", m.source) })?;
        let target = posets
            .get(&m.target)
            .ok_or_else(|| ModelError { message: format!("morphism {name:?}: unknown poset {:?}", m.target) })?;
        let map = if m.map.is_empty() {
            // derived inclusion: both posets carry cones; match by equality
            let (Some(src_cones), Some(tgt_cones)) =
                (poset_cones.get(&m.source), poset_cones.get(&m.target))
            else {
                return err(format!(
                    "morphism {name:?}: an empty map is only allowed between cone-generated posets"
                ));
            };
            let mut map = Vec::with_capacity(src_cones.len());
            for (i, c) in src_cones.iter().enumerate() {
                let ti = tgt_cones.iter().position(|d| d == c).ok_or_else(|| ModelError {
                    message: format!(
                        "morphism {name:?}: cone of element {} not present in the target",
                        source.name(i)
                    ),
                })?;
                map.push(ti);
            }
            map
        } else {
            let mut map = Vec::with_capacity(source.len());
            for e in source.names() {
                let image = m.map.get(e).ok_or_else(|| ModelError {
                    message: format!("morphism {name:?}: element {e:?} has no image"),
                })?;
                let ti = target.index_of(image).ok_or_else(|| ModelError {
                    message: format!("morphism {name:?}: unknown target element {image:?}"),
                })?;
                map.push(ti);
            }
            map
        };
        morphisms.insert(name.clone(), (m.source.clone(), m.target.clone(), map));
    }
    let mut functionals = BTreeMap::new();
    for (name, f) in &doc.functionals {
        let mut masses = Vec::new();
        for pm in &f.point_masses {
            masses.push(PointMass {
                location: parse_gauss(&pm.z)?,
                order: pm.m,
                coeff: ECoef::from_rat(parse_gauss(&pm.c)?),
            });
        }
        let mut segments = Vec::new();
        for s in &f.segments {
            let side = match s.side.as_str() {
                "+" | "pos" => Side::Pos,
                "-" | "neg" => Side::Neg,
                other => return err(format!("functional {name:?}: unknown side {other:?}")),
            };
            let coeffs: Result<Vec<ECoef>, ModelError> =
                s.poly.iter().map(|c| Ok(ECoef::from_rat(parse_gauss(c)?))).collect();
            segments.push(Segment {
                side,
                decay: parse_gauss(&s.lambda)?,
                weight: Poly::from_coeffs(coeffs?),
            });
        }
        let u = Ultrafunctional1D::new(masses, segments)
            .map_err(|e| ModelError { message: format!("functional {name:?}: {e}") })?;
        functionals.insert(name.clone(), u);
    }
    Ok(Model { cones, forms, posets, poset_cones, systems, morphisms, functionals })
}

pub fn load(path: &std::path::Path) -> Result<(ModelDoc, Model), ModelError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ModelError { message: format!("cannot read {}: {e}", path.display()) })?;
    let doc: ModelDoc = serde_json::from_str(&text)
        .map_err(|e| ModelError { message: format!("parse error in {}: {e}", path.display()) })?;
    let model = resolve(&doc)?;
    Ok((doc, model))
}

/// Serializes a system (with its poset) back into a self-contained model
/// document, the inverse of parsing.
pub fn system_to_doc(name: &str, poset_name: &str, sys: &IndSystem) -> ModelDoc {
    let mut doc = ModelDoc::default();
    doc.posets.insert(
        poset_name.to_string(),
        PosetDoc {
            elements: Some(sys.index().names().to_vec()),
            leq: Some(
                sys.index()
                    .comparable_pairs()
                    .map(|(a, b)| {
                        (sys.index().name(a).to_string(), sys.index().name(b).to_string())
                    })
                    .collect(),
            ),
            cone_family: None,
            closure: None,
        },
    );
    let dims: BTreeMap<String, usize> = sys
        .index()
        .names()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), sys.dim(i)))
        .collect();
    let maps: BTreeMap<String, Vec<Vec<String>>> = sys
        .maps()
        .iter()
        .map(|(&(a, b), m)| {
            (
                format!("{}->{}", sys.index().name(a), sys.index().name(b)),
                format_matrix(m),
            )
        })
        .collect();
    doc.systems.insert(
        name.to_string(),
        SystemDoc { poset: poset_name.to_string(), dims, maps },
    );
    doc
}

/// Serializes a convex cone into its document form.
pub fn cone_to_doc(cone: &ConvexCone) -> ConeDoc {
    ConeDoc {
        dim: cone.dim(),
        generators: Some(cone.generators().iter().map(|g| format_vector(g)).collect()),
        halfline: None,
        sectors: None,
        rays: None,
        full: false,
    }
}
