//! The category of symmetric forms in a category with duality.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;

use super::duality::Duality;
use super::finite::{FiniteCategory, Morphism};
use super::sd::{sd_category, sd_duality};

/// `Sym C`: objects are arrows `f: a -> T a` with `f = T f ∘ η_a`, morphisms
/// `f -> f'` are arrows `r: a -> a'` with `f = T r ∘ f' ∘ r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymCategory {
    pub category: FiniteCategory,
    /// The arrow of `C` each object is.
    pub forms: Vec<usize>,
    /// The arrow `r` of `C` underlying each morphism.
    pub underlying: Vec<usize>,
}

pub fn sym_category(c: &FiniteCategory, t: &Duality) -> SymCategory {
    let forms: Vec<usize> = (0..c.morphism_count())
        .filter(|&f| {
            let a = c.source(f);
            c.target(f) == t.objects[a] && c.compose(t.morphisms[f], t.eta[a]) == Some(f)
        })
        .collect();
    let mut morphisms = Vec::new();
    let mut underlying = Vec::new();
    for (i, &f) in forms.iter().enumerate() {
        for (j, &g) in forms.iter().enumerate() {
            for r in c.hom(c.source(f), c.source(g)) {
                if c.then(c.then(r, g), t.morphisms[r]) == f {
                    morphisms.push(Morphism {
                        name: c.morphism(r).name.clone(),
                        source: i,
                        target: j,
                    });
                    underlying.push(r);
                }
            }
        }
    }
    let index: HashMap<(usize, usize, usize), usize> = morphisms
        .iter()
        .zip(&underlying)
        .enumerate()
        .map(|(k, (m, &r))| ((m.source, m.target, r), k))
        .collect();
    let compose = (0..morphisms.len())
        .map(|second| {
            (0..morphisms.len())
                .map(|first| {
                    let (m1, m2) = (&morphisms[first], &morphisms[second]);
                    (m1.target == m2.source)
                        .then(|| index[&(m1.source, m2.target, c.then(underlying[first], underlying[second]))])
                })
                .collect()
        })
        .collect();
    let identities = forms.iter().enumerate().map(|(i, &f)| index[&(i, i, c.identity(c.source(f)))]).collect();
    let category = FiniteCategory::new(
        forms.iter().map(|&f| c.morphism(f).name.clone()).collect(),
        morphisms,
        identities,
        compose,
    )
    .expect("symmetric forms form a category");
    SymCategory {
        category,
        forms,
        underlying,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymComparison {
    pub objects: usize,
    pub morphisms: usize,
    pub fixed_objects: usize,
    pub fixed_morphisms: usize,
    /// The direct construction and the `SdT`-fixed subcategory have the same
    /// objects, the same morphisms and the same composition.
    pub agree: bool,
    pub failure: Option<String>,
}

/// Builds `Sym C` directly and as the subcategory of `Sd C` fixed by `SdT`,
/// and compares the two.
pub fn compare_sym(c: &FiniteCategory, t: &Duality) -> Result<SymComparison> {
    t.require_strict(c)?;
    let direct = sym_category(c, t);
    let sd = sd_category(c);
    let (tobj, tmor) = sd_duality(t, &sd);
    let fixed_objects: Vec<usize> = (0..sd.category.object_count()).filter(|&f| tobj[f] == f).collect();
    let fixed_morphisms: Vec<usize> = (0..sd.category.morphism_count())
        .filter(|&k| tmor[k] == k && tobj[sd.category.source(k)] == sd.category.source(k))
        .collect();
    let mut failure = None;
    if fixed_objects != direct.forms {
        failure = Some(format!("objects {:?} vs fixed {:?}", direct.forms, fixed_objects));
    }
    // a direct morphism r: f -> g corresponds to (r, T r): f -> g in Sd C
    let sd_index: HashMap<(usize, usize, usize, usize), usize> = (0..sd.category.morphism_count())
        .map(|k| {
            let (h, i) = sd.pairs[k];
            ((sd.category.source(k), sd.category.target(k), h, i), k)
        })
        .collect();
    let to_sd: Vec<Option<usize>> = (0..direct.category.morphism_count())
        .map(|k| {
            let r = direct.underlying[k];
            let (f, g) = (direct.forms[direct.category.source(k)], direct.forms[direct.category.target(k)]);
            sd_index.get(&(f, g, r, t.morphisms[r])).copied()
        })
        .collect();
    if failure.is_none() {
        let mut image: Vec<usize> = to_sd.iter().flatten().copied().collect();
        image.sort_unstable();
        if to_sd.iter().any(Option::is_none) || image != fixed_morphisms {
            failure = Some("morphisms of Sym C are not the SdT-fixed morphisms".into());
        }
    }
    if failure.is_none() {
        let n = direct.category.morphism_count();
        'outer: for a in 0..n {
            for b in 0..n {
                if let Some(ba) = direct.category.compose(b, a) {
                    let (sa, sb) = (to_sd[a].expect("checked"), to_sd[b].expect("checked"));
                    if sd.category.compose(sb, sa) != to_sd[ba] {
                        failure = Some(format!("composition differs at ({b}, {a})"));
                        break 'outer;
                    }
                }
            }
        }
    }
    Ok(SymComparison {
        objects: direct.category.object_count(),
        morphisms: direct.category.morphism_count(),
        fixed_objects: fixed_objects.len(),
        fixed_morphisms: fixed_morphisms.len(),
        agree: failure.is_none(),
        failure,
    })
}
