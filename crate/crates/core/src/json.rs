//! JSON input schemas.
//!
//! Monoid: `{"elements": [names], "unit": i, "mul": [[i]], "inv": [i]}`.
//! Form: `{"epsilon": ±1, "gram": [[int]]}`.
//! Simplicial set: `{"counts": [n], "faces": [[[i]]], "degeneracies": [[[i]]]}`
//! with `faces[n][i]` (empty for `n = 0`) and `degeneracies[n][j]`.
//! Category: `{"objects": [names], "morphisms": [{"name", "src", "tgt"}],
//! "identities"?: [i], "compose": [[i | null]], "duality"?: {"objects",
//! "morphisms", "eta"?}}` where `compose[g][f]` is `g ∘ f`.
//!
//! Syntax and shape errors carry the line and column of the offending token.

use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::category::{CategoryWithDuality, Duality, FiniteCategory, Morphism};
use crate::error::{Error, Result};
use crate::forms::{validate_form, BilinearForm};
use crate::homology::IntegerMatrix;
use crate::monoid::FiniteMonoid;
use crate::simplicial::SimplicialSet;

fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e.to_string())))
    })
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoidInput {
    elements: Vec<String>,
    unit: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
}

pub fn parse_monoid(text: &str) -> Result<FiniteMonoid> {
    let m: MonoidInput = parse(text)?;
    FiniteMonoid::new(m.elements, m.unit, m.mul, m.inv)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FormInput {
    epsilon: i64,
    gram: Vec<Vec<i64>>,
}

pub fn parse_form(text: &str) -> Result<BilinearForm> {
    let f: FormInput = parse(text)?;
    let n = f.gram.len();
    if let Some(r) = f.gram.iter().position(|row| row.len() != n) {
        return Err(Error::Dimension(format!("row {r} of a {n}x{n} Gram matrix has {} entries", f.gram[r].len())));
    }
    validate_form(IntegerMatrix::from_i64(&f.gram), f.epsilon)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SimplicialInput {
    counts: Vec<usize>,
    faces: Vec<Vec<Vec<usize>>>,
    degeneracies: Vec<Vec<Vec<usize>>>,
}

pub fn parse_simplicial_set(text: &str) -> Result<SimplicialSet> {
    let s: SimplicialInput = parse(text)?;
    SimplicialSet::from_tables(s.counts, s.faces, s.degeneracies)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MorphismInput {
    name: String,
    src: usize,
    tgt: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DualityInput {
    objects: Vec<usize>,
    morphisms: Vec<usize>,
    eta: Option<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CategoryInput {
    objects: Vec<String>,
    morphisms: Vec<MorphismInput>,
    identities: Option<Vec<usize>>,
    compose: Vec<Vec<Option<usize>>>,
    duality: Option<DualityInput>,
}

/// The endomorphism of each object that is a two-sided unit in `compose`.
fn infer_identities(objects: usize, morphisms: &[Morphism], compose: &[Vec<Option<usize>>]) -> Result<Vec<usize>> {
    let n = morphisms.len();
    if compose.len() != n || compose.iter().any(|row| row.len() != n) {
        return Err(Error::CategoryAxiom(format!("composition table must be {n}x{n}")));
    }
    (0..objects)
        .map(|c| {
            (0..n)
                .filter(|&e| morphisms[e].source == c && morphisms[e].target == c)
                .find(|&e| {
                    (0..n).all(|f| {
                        (morphisms[f].source != c || compose[f][e] == Some(f))
                            && (morphisms[f].target != c || compose[e][f] == Some(f))
                    })
                })
                .ok_or_else(|| Error::CategoryAxiom(format!("object {c} has no identity")))
        })
        .collect()
}

pub fn parse_category(text: &str) -> Result<(FiniteCategory, Option<Duality>)> {
    let c: CategoryInput = parse(text)?;
    let morphisms: Vec<Morphism> = c
        .morphisms
        .into_iter()
        .map(|m| Morphism {
            name: m.name,
            source: m.src,
            target: m.tgt,
        })
        .collect();
    if let Some(f) = morphisms.iter().position(|m| m.source >= c.objects.len() || m.target >= c.objects.len()) {
        return Err(Error::CategoryAxiom(format!("morphism {f} has an endpoint outside the objects")));
    }
    let identities = match c.identities {
        Some(ids) => ids,
        None => infer_identities(c.objects.len(), &morphisms, &c.compose)?,
    };
    let category = FiniteCategory::new(c.objects, morphisms, identities, c.compose)?;
    let duality = match c.duality {
        None => None,
        Some(d) => Some(match d.eta {
            Some(eta) => Duality::new(&category, d.objects, d.morphisms, eta)?,
            None => Duality::strict(&category, d.objects, d.morphisms)?,
        }),
    };
    Ok((category, duality))
}

/// A category that must come with a duality.
pub fn parse_category_with_duality(text: &str) -> Result<CategoryWithDuality> {
    match parse_category(text)? {
        (category, Some(duality)) => Ok(CategoryWithDuality { category, duality }),
        (_, None) => Err(Error::Parse("category input has no \"duality\" tables".into())),
    }
}

/// What a JSON document describes, judged by its keys.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputKind {
    Monoid,
    Form,
    SimplicialSet,
    Category,
}

pub fn detect_kind(text: &str) -> Result<InputKind> {
    let value: serde_json::Value = parse(text)?;
    let has = |k: &str| value.get(k).is_some();
    if has("mul") {
        Ok(InputKind::Monoid)
    } else if has("gram") {
        Ok(InputKind::Form)
    } else if has("counts") {
        Ok(InputKind::SimplicialSet)
    } else if has("compose") {
        Ok(InputKind::Category)
    } else {
        Err(Error::Parse(
            "expected a monoid, form, simplicial set or category object".into(),
        ))
    }
}
