//! The on-disk arrangement format.
//!
//! A document is JSON with a `"format": 1` header. Every rational is a
//! string `"p/q"` (or `"p"`); JSON numbers are refused wherever a rational
//! is expected, so no float can enter.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use seshadri::arrangement::{Arrangement, Curve};
use seshadri::exact::{parse_rational, Rational};
use seshadri::lattice::{DivisorClass, LatticeData, SurfaceExt, SurfaceKind, SurfaceModel};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDocument {
    pub format: u32,
    pub surface: SurfaceSpec,
    pub curves: Vec<CurveSpec>,
    pub points: Vec<PointSpec>,
    /// Default line bundle for `analyze`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarization: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SurfaceSpec {
    ProjectivePlane,
    Ruled {
        g: u32,
        e: i64,
    },
    Abstract {
        labels: Vec<String>,
        gram: Vec<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        canonical_class: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        chern_c2: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        canonical_square: Option<String>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        ample_classes: Vec<Vec<String>>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub genus: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSpec {
    pub id: String,
    pub curves: Vec<String>,
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn field_err(field: &str, msg: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("field {field}: {msg}"))
}

fn parse_at(field: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|_| field_err(field, format!("expected a rational \"p/q\", found {text:?}")))
}

fn parse_vec(field: &str, texts: &[String]) -> Result<Vec<Rational>, CliError> {
    texts.iter().enumerate().map(|(i, t)| parse_at(&format!("{field}[{i}]"), t)).collect()
}

impl ArrangementDocument {
    pub fn from_arrangement(arr: &Arrangement, polarization: Option<&DivisorClass>) -> Self {
        let s = arr.surface();
        let surface = match s.kind() {
            SurfaceKind::ProjectivePlane => SurfaceSpec::ProjectivePlane,
            SurfaceKind::RuledSurface { genus, e } => SurfaceSpec::Ruled { g: *genus, e: *e },
            SurfaceKind::AbstractLattice => SurfaceSpec::Abstract {
                labels: s.basis_labels().to_vec(),
                gram: s.gram().iter().map(|row| rationals(row)).collect(),
                canonical_class: s.canonical_class_coeffs().map(rationals),
                chern_c2: s.chern_c2().map(ToString::to_string),
                canonical_square: s.canonical_square().map(ToString::to_string),
                ample_classes: s.ample_class_coeffs().iter().map(|v| rationals(v)).collect(),
            },
        };
        let curves = arr
            .curves()
            .iter()
            .map(|c| CurveSpec {
                id: c.id.clone(),
                class: c.class.as_ref().map(|d| rationals(d.coeffs())),
                genus: c.genus.as_ref().map(ToString::to_string),
            })
            .collect();
        let points = arr
            .points()
            .iter()
            .map(|p| PointSpec {
                id: p.id.clone(),
                curves: p.incident.iter().map(|&i| arr.curves()[i].id.clone()).collect(),
            })
            .collect();
        Self {
            format: FORMAT_VERSION,
            surface,
            curves,
            points,
            polarization: polarization.map(|l| rationals(l.coeffs())),
        }
    }

    /// Parses JSON text. Syntax and type errors carry line and column.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: Self = serde_json::from_str(text).map_err(|e| {
            CliError::Input(format!("parse error: {e}"))
        })?;
        if doc.format != FORMAT_VERSION {
            return Err(field_err("format", format!("unsupported version {}, expected {FORMAT_VERSION}", doc.format)));
        }
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }

    pub fn surface_model(&self) -> Result<Arc<SurfaceModel>, CliError> {
        Ok(match &self.surface {
            SurfaceSpec::ProjectivePlane => SurfaceModel::projective_plane(),
            SurfaceSpec::Ruled { g, e } => SurfaceModel::ruled(*g, *e),
            SurfaceSpec::Abstract { labels, gram, canonical_class, chern_c2, canonical_square, ample_classes } => {
                let gram = gram
                    .iter()
                    .enumerate()
                    .map(|(i, row)| parse_vec(&format!("surface.gram[{i}]"), row))
                    .collect::<Result<_, _>>()?;
                let data = LatticeData {
                    labels: labels.clone(),
                    gram,
                    canonical_class: canonical_class
                        .as_ref()
                        .map(|v| parse_vec("surface.canonical_class", v))
                        .transpose()?,
                    chern_c2: chern_c2.as_ref().map(|t| parse_at("surface.chern_c2", t)).transpose()?,
                    canonical_square: canonical_square
                        .as_ref()
                        .map(|t| parse_at("surface.canonical_square", t))
                        .transpose()?,
                    ample_classes: ample_classes
                        .iter()
                        .enumerate()
                        .map(|(i, v)| parse_vec(&format!("surface.ample_classes[{i}]"), v))
                        .collect::<Result<_, _>>()?,
                };
                SurfaceModel::abstract_lattice(data).map_err(|e| field_err("surface", e))?
            }
        })
    }

    /// Builds the arrangement and, if present, the polarization.
    pub fn to_arrangement(&self) -> Result<(Arrangement, Option<DivisorClass>), CliError> {
        let surface = self.surface_model()?;
        let mut curves = Vec::with_capacity(self.curves.len());
        for (i, c) in self.curves.iter().enumerate() {
            let mut curve = Curve::new(c.id.clone());
            if let Some(class) = &c.class {
                let field = format!("curves[{i}].class");
                let coeffs = parse_vec(&field, class)?;
                curve = curve.with_class(surface.class(coeffs).map_err(|_| {
                    field_err(&field, format!("expected {} entries, found {}", surface.rank(), class.len()))
                })?);
            }
            if let Some(g) = &c.genus {
                curve = curve.with_genus(parse_at(&format!("curves[{i}].genus"), g)?);
            }
            curves.push(curve);
        }
        let points = self.points.iter().map(|p| (p.id.clone(), p.curves.clone())).collect();
        let arr = Arrangement::new(Arc::clone(&surface), curves, points).map_err(|e| field_err("points", e))?;
        let polarization = match &self.polarization {
            Some(v) => {
                let coeffs = parse_vec("polarization", v)?;
                Some(surface.class(coeffs).map_err(|_| {
                    field_err("polarization", format!("expected {} entries, found {}", surface.rank(), v.len()))
                })?)
            }
            None => None,
        };
        Ok((arr, polarization))
    }
}
