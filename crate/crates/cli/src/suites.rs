//! The verification suites behind `eqgc verify`.

use clap::ValueEnum;
use serde_json::{json, Value};

use eqgc::category::{
    compare_sd_nerve, compare_sym, d_construction, real_nerve, verify_d_construction, CategoryWithDuality, Duality, FiniteCategory,
};
use eqgc::forms::{
    hyperbolic_evenness, invariants, k0_is_invertible, standard_hyperbolic, symplectic_trials, witt_monoid_report,
    BilinearForm, K0Element,
};
use eqgc::json::{detect_kind, parse_category, parse_form, parse_monoid, InputKind};
use eqgc::monoid::{
    bar_projection, corpus, cyclic, fixed_point_bijection_b, ji_contraction_check, real_bar, symmetric3,
    verify_group_completion, CompletionOutcome, DegreeStatus, FiniteMonoid, LeftAction, RightAction,
};
use eqgc::simplicial::{check_homology_fibration, point, representable, SimplicialMap};

use crate::report::{Record, Status};
use crate::{Input, InputError, Settings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Relations,
    FixedPoints,
    Ji,
    GroupCompletion,
    Forms,
    Categories,
    Hofib,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::FixedPoints => "fixed-points",
            Suite::Ji => "ji",
            Suite::GroupCompletion => "group-completion",
            Suite::Forms => "forms",
            Suite::Categories => "categories",
            Suite::Hofib => "hofib",
        }
    }
}

const REAL_RELATIONS: &str = "real simplicial identities: w_n w_n = id, d_i w_n = w_{n-1} d_{n-i}, s_j w_n = w_{n+1} s_{n-j}";
const FIXED_POINTS: &str = "fixed points of Sd B M project bijectively onto B(*, M, M^C2)";
const JI: &str = "r(m_0, ..., m_p, m) = (m_0 ... m_p) m (m_0 ... m_p)^- retracts B(M, M, M^C2) onto M^C2";
const GROUP_COMPLETION: &str = "fixed-point group completion: telescope homology agrees with the localized pi_0 side";
const K0_NOT_GROUP: &str = "hyperbolic forms are even, so the class of <1> has no inverse after inverting them";
const K0_HYPERBOLIC: &str = "hyperbolic classes become units";
const SYMPLECTIC: &str = "every unimodular alternating form is congruent to J_n; the rank map is an isomorphism";
const WITT: &str = "stable isomorphism of unimodular symmetric forms by rank, signature and parity";
const SD_NERVE: &str = "the nerve of Sd C is the edgewise subdivision of the nerve of C";
const SYM: &str = "Sym C is the subcategory of Sd C fixed by SdT";
const D_CONSTRUCTION: &str = "D C has a strict duality and I, K are inverse equivalences with duality";
const HOFIB: &str = "homology fibration: pullbacks along simplex operators are homology equivalences";

pub fn run(suite: Suite, inputs: &[Input], settings: &Settings) -> Result<Vec<Record>, InputError> {
    match suite {
        Suite::Relations => Ok(monoids(inputs)?.iter().map(|(n, m)| relations(n, m, settings)).collect()),
        Suite::FixedPoints => Ok(monoids(inputs)?.iter().map(|(n, m)| fixed_points(n, m, settings)).collect()),
        Suite::Ji => Ok(monoids(inputs)?.iter().map(|(n, m)| ji(format!("ji/{n}"), m, settings.max_degree.unwrap_or(2))).collect()),
        Suite::GroupCompletion => {
            Ok(monoids(inputs)?.iter().flat_map(|(n, m)| group_completion(n, m, settings)).collect())
        }
        Suite::Forms => forms(inputs, settings),
        Suite::Categories => Ok(categories(inputs)?.iter().flat_map(|(n, c)| category_checks(n, c, settings)).collect()),
        Suite::Hofib => hofib(inputs, settings),
    }
}

fn invalid(input: &Input, e: eqgc::Error) -> InputError {
    InputError(format!("{}: {e}", input.name))
}

fn monoids(inputs: &[Input]) -> Result<Vec<(String, FiniteMonoid)>, InputError> {
    if inputs.is_empty() {
        return Ok(corpus().into_iter().map(|(n, m)| (n.to_string(), m)).collect());
    }
    inputs
        .iter()
        .map(|i| Ok((i.name.clone(), parse_monoid(&i.text).map_err(|e| invalid(i, e))?)))
        .collect()
}

fn categories(inputs: &[Input]) -> Result<Vec<(String, CategoryWithDuality)>, InputError> {
    if inputs.is_empty() {
        let mut out = Vec::new();
        for (name, m) in [("C2", cyclic(2)), ("S3", symmetric3())] {
            let category = FiniteCategory::from_monoid(&m);
            let duality = Duality::from_monoid(&m, &category).expect("corpus anti-involution");
            out.push((name.to_string(), CategoryWithDuality { category, duality }));
        }
        let category = FiniteCategory::poset(2);
        let duality = Duality::poset_reversal(&category).expect("order reversal");
        out.push(("[2]".to_string(), CategoryWithDuality { category, duality }));
        return Ok(out);
    }
    inputs
        .iter()
        .map(|i| match parse_category(&i.text).map_err(|e| invalid(i, e))? {
            (category, Some(duality)) => Ok((i.name.clone(), CategoryWithDuality { category, duality })),
            (_, None) => Err(InputError(format!("{}: category has no duality tables", i.name))),
        })
        .collect()
}

fn relations(name: &str, m: &FiniteMonoid, settings: &Settings) -> Record {
    let d = settings.max_degree.unwrap_or(4);
    let (status, witnesses) = match real_bar(m, d) {
        Ok((b, _)) => (Status::Pass, json!({ "degree": d, "simplices": b.set.counts() })),
        Err(e) => (Status::Fail, json!({ "degree": d, "error": e.to_string() })),
    };
    Record::new(format!("relations/{name}"), REAL_RELATIONS, status, witnesses)
}

fn fixed_points(name: &str, m: &FiniteMonoid, settings: &Settings) -> Record {
    let r = fixed_point_bijection_b(m, settings.max_degree.unwrap_or(3));
    Record::new(format!("fixed-points/{name}"), FIXED_POINTS, Status::from_bool(r.holds), to_value(&r))
}

fn ji(key: String, m: &FiniteMonoid, degree: usize) -> Record {
    match ji_contraction_check(m, degree) {
        Ok(r) => Record::new(key, JI, Status::from_bool(r.holds), to_value(&r)),
        Err(e) => Record::new(key, JI, Status::Fail, json!({ "error": e.to_string() })),
    }
}

fn group_completion(name: &str, m: &FiniteMonoid, settings: &Settings) -> Vec<Record> {
    let d = settings.max_degree.unwrap_or(2);
    let key = format!("group-completion/{name}");
    let main = match verify_group_completion(m, d, settings.stage_budget) {
        Err(e) => Record::new(key, GROUP_COMPLETION, Status::Fail, json!({ "error": e.to_string() })),
        Ok(report) => match &report.outcome {
            CompletionOutcome::HypothesisFailed { hypothesis, reason } => Record::new(
                key,
                GROUP_COMPLETION,
                Status::Skipped,
                json!({ "hypothesis": hypothesis, "reason": reason }),
            ),
            CompletionOutcome::Compared {
                generator,
                bijection,
                pi0,
                degrees,
            } => {
                let status = if !bijection.holds || degrees.iter().any(|x| x.status == DegreeStatus::Mismatch) {
                    Status::Fail
                } else if degrees.iter().all(|x| x.status == DegreeStatus::Match) {
                    Status::Pass
                } else {
                    Status::Unstabilized
                };
                let per_degree: Vec<Value> = degrees
                    .iter()
                    .map(|x| {
                        json!({
                            "degree": x.degree,
                            "status": x.status,
                            "telescope_colimit": x.homology_side.colimit.as_ref().map(|g| g.to_string()),
                            "stabilized_at": x.homology_side.stabilized_at,
                            "localized": x.localized_side.as_ref().map(|g| g.to_string()),
                        })
                    })
                    .collect();
                Record::new(
                    key,
                    GROUP_COMPLETION,
                    status,
                    json!({
                        "generator": m.name(generator.element),
                        "stage_budget": report.stage_budget,
                        "bijection_holds": bijection.holds,
                        "pi0_classes": pi0.class_count(),
                        "degrees": per_degree,
                    }),
                )
            }
        },
    };
    vec![main, ji(format!("group-completion/{name}/ji"), m, d)]
}

fn forms(inputs: &[Input], settings: &Settings) -> Result<Vec<Record>, InputError> {
    if !inputs.is_empty() {
        return inputs
            .iter()
            .map(|i| {
                let f = parse_form(&i.text).map_err(|e| invalid(i, e))?;
                Ok(form_record(&format!("forms/{}", i.name), &f))
            })
            .collect();
    }
    let mut records = Vec::new();
    let one = K0Element::class(&BilinearForm::diagonal_unit(1)).expect("unimodular");
    let one_invertible = k0_is_invertible(&one).expect("normal form");
    let evenness = hyperbolic_evenness(settings.seed, 1000, 5);
    records.push(Record::new(
        "forms/unit-form-not-invertible",
        K0_NOT_GROUP,
        Status::from_bool(!one_invertible && evenness.hyperbolic_even && evenness.unit_form_value == 1.into()),
        json!({ "class": one, "invertible": one_invertible, "evenness": evenness }),
    ));
    let hyperbolic: Vec<Value> = (0..=4)
        .map(|m| {
            let class = K0Element::class(&standard_hyperbolic(m, 1)).expect("unimodular");
            json!({ "m": m, "class": class, "invertible": k0_is_invertible(&class).expect("normal form") })
        })
        .collect();
    let all = hyperbolic.iter().all(|v| v["invertible"] == json!(true));
    records.push(Record::new("forms/hyperbolic-invertible", K0_HYPERBOLIC, Status::from_bool(all), json!(hyperbolic)));
    let trials = symplectic_trials(settings.seed, 100, 8);
    records.push(Record::new(
        "forms/symplectic-normal-form",
        SYMPLECTIC,
        Status::from_bool(trials.verified == trials.trials),
        to_value(&trials),
    ));
    let witt = witt_monoid_report();
    // <1> + <-1> is odd and H is even; <1> + H and <1> + <1> + <-1> share all
    // three invariants; <1> and <-1> differ in signature
    let expected = [false, true, false];
    let consistent = witt
        .relations
        .iter()
        .zip(expected)
        .all(|(r, e)| r.stably_isomorphic == e && (!e || r.witness.is_some()));
    records.push(Record::new("forms/witt-monoid", WITT, Status::from_bool(consistent), to_value(&witt)));
    Ok(records)
}

pub fn form_record(name: &str, f: &BilinearForm) -> Record {
    let inv = invariants(f);
    match K0Element::class(f) {
        Ok(class) => Record::new(
            name,
            WITT,
            Status::Pass,
            json!({ "invariants": inv, "class": class, "invertible": k0_is_invertible(&class).ok() }),
        ),
        Err(e) => Record::new(name, WITT, Status::Skipped, json!({ "invariants": inv, "reason": e.to_string() })),
    }
}

const MAX_SD_ARROWS: usize = 12;

/// Degree 3 unless `Sd N C` would have more than about two million
/// simplices there; `(N C)_{2d+1}` has at most `|mor|^(2d+1)` elements.
fn default_category_degree(c: &FiniteCategory) -> usize {
    let arrows = c.morphism_count().max(2) as f64;
    (1..=3).rev().find(|&d| arrows.powi(2 * d as i32 + 1) <= 2.0e6).unwrap_or(1)
}

fn category_checks(name: &str, c: &CategoryWithDuality, settings: &Settings) -> Vec<Record> {
    let mut records = Vec::new();
    let (cat, t) = (&c.category, &c.duality);
    records.push(match verify_d_construction(cat, t) {
        Ok(r) => Record::new(format!("categories/{name}/d-construction"), D_CONSTRUCTION, Status::from_bool(r.holds), to_value(&r)),
        Err(e) => Record::new(format!("categories/{name}/d-construction"), D_CONSTRUCTION, Status::Fail, json!({ "error": e.to_string() })),
    });
    // non-strict dualities are strictified before the nerve-level checks
    let strictified = (!t.is_strict(cat)).then(|| d_construction(cat, t).strictified);
    let (cat, t) = match &strictified {
        Some(s) => (&s.category, &s.duality),
        None => (cat, t),
    };
    let d = settings.max_degree.unwrap_or_else(|| default_category_degree(cat));
    let real = match real_nerve(cat, t, d) {
        Ok((n, _)) => Record::new(format!("categories/{name}/real-nerve"), REAL_RELATIONS, Status::Pass, json!({ "simplices": n.set.counts() })),
        Err(e) => Record::new(format!("categories/{name}/real-nerve"), REAL_RELATIONS, Status::Fail, json!({ "error": e.to_string() })),
    };
    records.push(real);
    // Sd C has up to |mor|^3 morphisms and is validated exhaustively
    if cat.morphism_count() > MAX_SD_ARROWS {
        let reason = json!({
            "reason": format!("{} arrows; Sd C is only built for at most {MAX_SD_ARROWS}", cat.morphism_count())
        });
        records.push(Record::new(format!("categories/{name}/sd-nerve"), SD_NERVE, Status::Skipped, reason.clone()));
        records.push(Record::new(format!("categories/{name}/sym"), SYM, Status::Skipped, reason));
        return records;
    }
    records.push(match compare_sd_nerve(cat, d) {
        Ok(r) => Record::new(format!("categories/{name}/sd-nerve"), SD_NERVE, Status::from_bool(r.isomorphic), to_value(&r)),
        Err(e) => Record::new(format!("categories/{name}/sd-nerve"), SD_NERVE, Status::Fail, json!({ "error": e.to_string() })),
    });
    records.push(match compare_sym(cat, t) {
        Ok(r) => Record::new(format!("categories/{name}/sym"), SYM, Status::from_bool(r.agree), to_value(&r)),
        Err(e) => Record::new(format!("categories/{name}/sym"), SYM, Status::Fail, json!({ "error": e.to_string() })),
    });
    records
}

fn hofib(inputs: &[Input], settings: &Settings) -> Result<Vec<Record>, InputError> {
    let d = settings.max_degree.unwrap_or(2);
    let named: Vec<(String, FiniteMonoid)> = if inputs.is_empty() {
        vec![("C2".into(), cyclic(2))]
    } else {
        monoids(inputs)?
    };
    let mut records = Vec::new();
    for (name, m) in &named {
        let key = format!("hofib/{name}/contractible-bar-projection");
        let record = bar_projection(&RightAction::regular(m), m, &LeftAction::point(m), d + 1)
            .and_then(|f| check_homology_fibration(&f, d, None));
        records.push(match record {
            Ok(r) => Record::new(
                key,
                HOFIB,
                Status::from_bool(r.holds()),
                json!({ "degree": d, "triples": r.total, "complete": r.complete, "first_failure": r.first_failure() }),
            ),
            Err(e) => Record::new(key, HOFIB, Status::Fail, json!({ "error": e.to_string() })),
        });
    }
    if inputs.is_empty() {
        // negative control: {0} -> Δ¹ misses vertex 1, so the checker must reject it
        let d1 = representable(1, d + 1);
        let inclusion = SimplicialMap::from_fn(point(d + 1), d1.set.clone(), |n, _| {
            d1.id(n, &vec![0; n + 1]).expect("constant simplex")
        })
        .expect("vertex inclusion is simplicial");
        let r = check_homology_fibration(&inclusion, d, None).expect("truncation covers the budget");
        let failure = r.first_failure();
        records.push(Record::new(
            "hofib/vertex-inclusion-rejected",
            HOFIB,
            Status::from_bool(!r.holds() && failure.and_then(|f| f.witness.as_ref()).is_some()),
            json!({ "degree": d, "holds": r.holds(), "first_failure": failure }),
        ));
    }
    Ok(records)
}

/// The kinds of input each suite reads.
pub fn accepts(suite: Suite, kind: InputKind) -> bool {
    match suite {
        Suite::Forms => kind == InputKind::Form,
        Suite::Categories => kind == InputKind::Category,
        _ => kind == InputKind::Monoid,
    }
}

pub fn check_kinds(suite: Suite, inputs: &[Input]) -> Result<(), InputError> {
    for i in inputs {
        let kind = detect_kind(&i.text).map_err(|e| invalid(i, e))?;
        if !accepts(suite, kind) {
            return Err(InputError(format!("{}: suite {} does not take {kind:?} input", i.name, suite.name())));
        }
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}
