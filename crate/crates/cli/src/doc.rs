//! The document format: a tagged JSON record per object kind, with dense
//! tables indexed lexicographically by element tuples. Canonical indexing
//! makes save/load an exact involution and round-trip comparisons literal.

use gcb_core::cochain::Cochain;
use gcb_core::crossed_monoid::GCrossedMonoid;
use gcb_core::fingroup::{self, FiniteAbelianGroup, FiniteGroup};
use gcb_core::gcrossed::{GCrossedFunctor, GCrossedPointedCategory};
use gcb_core::gray::PointedGrayMonoid;
use gcb_core::pointed::PointedBraidedCategory;
use serde::{Deserialize, Serialize};
use std::path::Path;
use thiserror::Error;

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum DocError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema version mismatch: file has {found}, this build reads {expected}")]
    SchemaVersionMismatch { found: String, expected: String },
    #[error("validation error: {0}")]
    Validation(String),
}

/// A group presentation: a named family or an explicit table.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum GroupSpec {
    Cyclic { cyclic: usize },
    Dihedral { dihedral: usize },
    Product { product: Vec<usize> },
    Table { table: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, DocError> {
        match self {
            GroupSpec::Cyclic { cyclic } => {
                if *cyclic == 0 {
                    return Err(DocError::Validation("cyclic order must be positive".into()));
                }
                Ok(fingroup::make_cyclic(*cyclic))
            }
            GroupSpec::Dihedral { dihedral } => {
                if *dihedral < 3 {
                    return Err(DocError::Validation("dihedral needs n >= 3".into()));
                }
                Ok(fingroup::make_dihedral(*dihedral))
            }
            GroupSpec::Product { product } => {
                if product.is_empty() {
                    return Err(DocError::Validation("empty product".into()));
                }
                Ok(FiniteAbelianGroup::new(product.clone()).to_group())
            }
            GroupSpec::Table { table } => FiniteGroup::from_table(table)
                .map_err(|e| DocError::Validation(e.to_string())),
        }
    }

    pub fn from_group(g: &FiniteGroup) -> GroupSpec {
        GroupSpec::Table { table: g.rows() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct AbelianSpec {
    pub cyclic_factors: Vec<usize>,
}

impl AbelianSpec {
    pub fn build(&self) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(self.cyclic_factors.clone())
    }

    pub fn of(a: &FiniteAbelianGroup) -> AbelianSpec {
        AbelianSpec { cyclic_factors: a.factors().to_vec() }
    }
}

/// The tagged document: one record kind per payload.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Group {
        group: GroupSpec,
    },
    Cochain {
        degree: usize,
        group: GroupSpec,
        coeff: AbelianSpec,
        values: Vec<usize>,
    },
    Braided {
        objects: AbelianSpec,
        scalars: AbelianSpec,
        alpha: Vec<usize>,
        beta: Vec<usize>,
    },
    Gcrossed(GcrossedPayload),
    Gray {
        group: GroupSpec,
        scalars: AbelianSpec,
        hom_count: Vec<usize>,
        id_cell: Vec<usize>,
        comp: Vec<usize>,
        l_act: Vec<usize>,
        r_act: Vec<usize>,
        phi: Vec<usize>,
    },
    CrossedMonoid {
        group: GroupSpec,
        carrier_count: Vec<usize>,
        mult: Vec<usize>,
        unit: usize,
        action: Vec<usize>,
    },
    Functor {
        source: GcrossedPayload,
        target: GcrossedPayload,
        obj_map: Vec<usize>,
        unitor: usize,
        tensorator: Vec<usize>,
        actionator: Vec<usize>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GcrossedPayload {
    pub group: GroupSpec,
    pub scalars: AbelianSpec,
    pub ob_count: Vec<usize>,
    pub unit: usize,
    pub tensor: Vec<usize>,
    pub assoc: Vec<usize>,
    pub lam: Vec<usize>,
    pub rho: Vec<usize>,
    pub act: Vec<usize>,
    pub unit_iso: Vec<usize>,
    pub tensorator: Vec<usize>,
    pub act_comp: Vec<usize>,
    pub unit_transf: Vec<usize>,
    pub braid: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Document {
    pub format_version: String,
    #[serde(flatten)]
    pub payload: Payload,
}

impl Document {
    pub fn new(payload: Payload) -> Document {
        Document { format_version: FORMAT_VERSION.to_string(), payload }
    }
}

pub fn save(doc: &Document, path: &Path) -> Result<(), DocError> {
    let text = serde_json::to_string_pretty(doc)
        .map_err(|e| DocError::Parse(e.to_string()))?;
    std::fs::write(path, text + "\n")?;
    Ok(())
}

/// Loads and fully validates a document: schema version, table sizes, and
/// the object-level typing constraints of the kind.
pub fn load(path: &Path) -> Result<Document, DocError> {
    let text = std::fs::read_to_string(path)?;
    let doc: Document =
        serde_json::from_str(&text).map_err(|e| DocError::Parse(e.to_string()))?;
    if doc.format_version != FORMAT_VERSION {
        return Err(DocError::SchemaVersionMismatch {
            found: doc.format_version,
            expected: FORMAT_VERSION.to_string(),
        });
    }
    validate(&doc)?;
    Ok(doc)
}

fn validate(doc: &Document) -> Result<(), DocError> {
    match &doc.payload {
        Payload::Group { group } => {
            group.build()?;
        }
        Payload::Cochain { .. } => {
            as_cochain(&doc.payload)?;
        }
        Payload::Braided { .. } => {
            as_braided(&doc.payload)?;
        }
        Payload::Gcrossed(p) => {
            build_gcrossed(p)?;
        }
        Payload::Gray { .. } => {
            as_gray(&doc.payload)?;
        }
        Payload::CrossedMonoid { .. } => {
            as_crossed_monoid(&doc.payload)?;
        }
        Payload::Functor { .. } => {
            as_functor(&doc.payload)?;
        }
    }
    Ok(())
}

pub fn as_cochain(p: &Payload) -> Result<Cochain, DocError> {
    let Payload::Cochain { degree, group, coeff, values } = p else {
        return Err(DocError::Validation("expected a cochain document".into()));
    };
    Cochain::new(*degree, group.build()?, coeff.build(), values.clone())
        .map_err(|e| DocError::Validation(e.to_string()))
}

pub fn as_braided(p: &Payload) -> Result<PointedBraidedCategory, DocError> {
    let Payload::Braided { objects, scalars, alpha, beta } = p else {
        return Err(DocError::Validation("expected a braided document".into()));
    };
    PointedBraidedCategory::new_unvalidated(
        objects.build(),
        scalars.build(),
        alpha.clone(),
        beta.clone(),
    )
    .map_err(|e| DocError::Validation(e.to_string()))
}

pub fn build_gcrossed(p: &GcrossedPayload) -> Result<GCrossedPointedCategory, DocError> {
    let c = GCrossedPointedCategory {
        grp: p.group.build()?,
        k: p.scalars.build(),
        ob_count: p.ob_count.clone(),
        unit: p.unit,
        tensor: p.tensor.clone(),
        assoc: p.assoc.clone(),
        lam: p.lam.clone(),
        rho: p.rho.clone(),
        act: p.act.clone(),
        unit_iso: p.unit_iso.clone(),
        tensorator: p.tensorator.clone(),
        act_comp: p.act_comp.clone(),
        unit_transf: p.unit_transf.clone(),
        braid: p.braid.clone(),
    };
    c.validate_typing().map_err(|e| DocError::Validation(e.to_string()))?;
    Ok(c)
}

pub fn gcrossed_payload(c: &GCrossedPointedCategory) -> GcrossedPayload {
    GcrossedPayload {
        group: GroupSpec::from_group(&c.grp),
        scalars: AbelianSpec::of(&c.k),
        ob_count: c.ob_count.clone(),
        unit: c.unit,
        tensor: c.tensor.clone(),
        assoc: c.assoc.clone(),
        lam: c.lam.clone(),
        rho: c.rho.clone(),
        act: c.act.clone(),
        unit_iso: c.unit_iso.clone(),
        tensorator: c.tensorator.clone(),
        act_comp: c.act_comp.clone(),
        unit_transf: c.unit_transf.clone(),
        braid: c.braid.clone(),
    }
}

pub fn as_gray(p: &Payload) -> Result<PointedGrayMonoid, DocError> {
    let Payload::Gray { group, scalars, hom_count, id_cell, comp, l_act, r_act, phi } = p
    else {
        return Err(DocError::Validation("expected a gray document".into()));
    };
    let m = PointedGrayMonoid {
        grp: group.build()?,
        k: scalars.build(),
        hom_count: hom_count.clone(),
        id_cell: id_cell.clone(),
        comp: comp.clone(),
        l_act: l_act.clone(),
        r_act: r_act.clone(),
        phi: phi.clone(),
    };
    Ok(m)
}

pub fn gray_payload(m: &PointedGrayMonoid) -> Payload {
    Payload::Gray {
        group: GroupSpec::from_group(&m.grp),
        scalars: AbelianSpec::of(&m.k),
        hom_count: m.hom_count.clone(),
        id_cell: m.id_cell.clone(),
        comp: m.comp.clone(),
        l_act: m.l_act.clone(),
        r_act: m.r_act.clone(),
        phi: m.phi.clone(),
    }
}

pub fn as_crossed_monoid(p: &Payload) -> Result<GCrossedMonoid, DocError> {
    let Payload::CrossedMonoid { group, carrier_count, mult, unit, action } = p else {
        return Err(DocError::Validation("expected a crossed monoid document".into()));
    };
    Ok(GCrossedMonoid {
        grp: group.build()?,
        carrier_count: carrier_count.clone(),
        mult: mult.clone(),
        unit: *unit,
        action: action.clone(),
    })
}

pub fn crossed_monoid_payload(m: &GCrossedMonoid) -> Payload {
    Payload::CrossedMonoid {
        group: GroupSpec::from_group(&m.grp),
        carrier_count: m.carrier_count.clone(),
        mult: m.mult.clone(),
        unit: m.unit,
        action: m.action.clone(),
    }
}

pub fn as_functor(p: &Payload) -> Result<GCrossedFunctor, DocError> {
    let Payload::Functor { source, target, obj_map, unitor, tensorator, actionator } = p
    else {
        return Err(DocError::Validation("expected a functor document".into()));
    };
    let f = GCrossedFunctor {
        source: build_gcrossed(source)?,
        target: build_gcrossed(target)?,
        obj_map: obj_map.clone(),
        unitor: *unitor,
        tensorator: tensorator.clone(),
        actionator: actionator.clone(),
    };
    f.validate_typing().map_err(|e| DocError::Validation(e.to_string()))?;
    Ok(f)
}

pub fn braided_payload(b: &PointedBraidedCategory) -> Payload {
    Payload::Braided {
        objects: AbelianSpec::of(b.objects()),
        scalars: AbelianSpec::of(b.scalars()),
        alpha: b.alpha_table().to_vec(),
        beta: b.beta_table().to_vec(),
    }
}

pub fn cochain_payload(c: &Cochain) -> Payload {
    Payload::Cochain {
        degree: c.degree(),
        group: GroupSpec::from_group(c.group()),
        coeff: AbelianSpec::of(c.coeff()),
        values: c.values().to_vec(),
    }
}
