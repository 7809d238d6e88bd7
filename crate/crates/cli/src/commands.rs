use serde_json::{json, Value};

use maxden_core::classify::{
    arithmetic_sequence, classify as classify_semigroup, dmax_additive, dmax_arithmetic,
    dmax_ed3_bezout, dmax_ed3_ceiling, dmax_symmetric_blowup, Ed3Input,
};
use maxden_core::engine::{dmax_with_workers, r_sets, BlowupContext, DmaxReport};
use maxden_core::factor::{enumerate_factorizations, LengthTable};
use maxden_core::oracle::{oracle_dmax, OracleBound};
use maxden_core::{engine, Error, GeneratingSet, Generators, Semigroup};

use crate::render;
use crate::{Failure, Format, Method, Settings};

/// Machine-readable result of one command.
pub struct Envelope {
    pub command: &'static str,
    pub inputs: Value,
    pub method_used: &'static str,
    pub result: Value,
}

impl Envelope {
    fn to_json(&self) -> String {
        // serde_json maps are BTreeMaps, so keys come out sorted.
        let v = json!({
            "command": self.command,
            "inputs": self.inputs,
            "method_used": self.method_used,
            "result": self.result,
        });
        let mut out = serde_json::to_string_pretty(&v).expect("json values always serialize");
        out.push('\n');
        out
    }
}

fn positive(raw: &[i64]) -> Result<Vec<u64>, Failure> {
    raw.iter()
        .map(|&g| {
            if g <= 0 {
                Err(Error::NonPositiveEntry(g).into())
            } else {
                Ok(g as u64)
            }
        })
        .collect()
}

fn semigroup(raw: &[i64]) -> Result<Semigroup, Failure> {
    Ok(Semigroup::new(&positive(raw)?)?)
}

fn nonnegative(value: i64, what: &str) -> Result<u64, Failure> {
    u64::try_from(value).map_err(|_| Failure::Input(format!("{what} must be nonnegative, got {value}")))
}

fn emit(envelope: &Envelope, settings: &Settings, csv: impl FnOnce() -> String, text: impl FnOnce() -> String) -> String {
    match settings.format {
        Format::Json => envelope.to_json(),
        Format::Csv => csv(),
        Format::Text => text(),
    }
}

struct Outcome {
    value: u64,
    method_used: &'static str,
    report: Option<DmaxReport>,
}

fn run_general(s: &Semigroup, workers: usize) -> Result<Outcome, Failure> {
    let report = dmax_with_workers(s, workers)?;
    Ok(Outcome {
        value: report.value,
        method_used: "general",
        report: Some(report),
    })
}

fn simple(value: u64, method_used: &'static str) -> Outcome {
    Outcome {
        value,
        method_used,
        report: None,
    }
}

fn run_ed3(s: &Semigroup) -> Result<Outcome, Failure> {
    let input = Ed3Input::from_semigroup(s)?;
    let ceiling = dmax_ed3_ceiling(&input)?;
    let bezout = dmax_ed3_bezout(&input)?;
    if ceiling != bezout {
        return Err(Failure::Internal(format!(
            "ed3 closed forms disagree on {s}: ceiling {ceiling}, bezout {bezout}"
        )));
    }
    Ok(simple(ceiling, "ed3-ceiling"))
}

fn run_arithmetic(s: &Semigroup) -> Result<Outcome, Failure> {
    let a = arithmetic_sequence(s).ok_or_else(|| {
        Failure::Precondition(format!("{s} is not generated by an arithmetic sequence"))
    })?;
    Ok(simple(dmax_arithmetic(a.e, a.d, a.t)?, "arithmetic"))
}

fn run_method(s: &Semigroup, method: Method, workers: usize) -> Result<Outcome, Failure> {
    match method {
        Method::General => run_general(s, workers),
        Method::Additive => Ok(simple(dmax_additive(s)?, "additive")),
        Method::SymmetricBlowup => Ok(simple(dmax_symmetric_blowup(s)?, "symmetric-blowup")),
        Method::Ed3 => run_ed3(s),
        Method::Ed3Ceiling => Ok(simple(dmax_ed3_ceiling(&Ed3Input::from_semigroup(s)?)?, "ed3-ceiling")),
        Method::Ed3Bezout => Ok(simple(dmax_ed3_bezout(&Ed3Input::from_semigroup(s)?)?, "ed3-bezout")),
        Method::Arithmetic => run_arithmetic(s),
        Method::Oracle => Ok(simple(oracle_dmax(s, &OracleBound::auto(s))?, "oracle")),
        Method::Auto => {
            if arithmetic_sequence(s).is_some() {
                return run_arithmetic(s);
            }
            if s.embedding_dimension() == 3 {
                return run_ed3(s);
            }
            match dmax_symmetric_blowup(s) {
                Ok(v) => return Ok(simple(v, "symmetric-blowup")),
                Err(Error::PreconditionFailed(_)) => {}
                Err(err) => return Err(err.into()),
            }
            match dmax_additive(s) {
                Ok(v) => Ok(simple(v, "additive")),
                Err(Error::NotAdditive) => run_general(s, workers),
                Err(err) => Err(err.into()),
            }
        }
    }
}

pub fn dmax(raw: &[i64], method: Method, verify: bool, settings: &Settings) -> Result<String, Failure> {
    let s = semigroup(raw)?;
    let outcome = run_method(&s, method, settings.workers)?;
    if verify {
        let general = dmax_with_workers(&s, settings.workers)?.value;
        if general != outcome.value {
            return Err(Failure::Internal(format!(
                "{} gave {} but the general method gives {general} for {s}",
                outcome.method_used, outcome.value
            )));
        }
    }

    let mut result = json!({
        "semigroup": s.generators(),
        "value": outcome.value,
    });
    if let Some(report) = &outcome.report {
        result["per_residue"] = report
            .per_residue
            .iter()
            .map(|r| {
                json!({
                    "residue": r.residue,
                    "dmax_si": r.dmax_si,
                    "witness": r.witness,
                    "r_sets": r.rsets.iter().map(|x| json!({
                        "u": x.u,
                        "min_order": x.min_order,
                        "size": x.len(),
                        "witness": x.witness,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
    }
    if verify {
        result["verified"] = json!(true);
    }
    let envelope = Envelope {
        command: "dmax",
        inputs: json!({
            "generators": raw,
            "method": method_name(method),
            "verify": verify,
        }),
        method_used: outcome.method_used,
        result,
    };
    Ok(emit(
        &envelope,
        settings,
        || render::dmax_csv(outcome.value, outcome.report.as_ref()),
        || render::dmax_text(&s, outcome.value, outcome.method_used, outcome.report.as_ref(), verify),
    ))
}

pub fn table(raw: &[i64], residue: i64, settings: &Settings) -> Result<String, Failure> {
    let s = semigroup(raw)?;
    let residue = nonnegative(residue, "residue")?;
    let ctx = BlowupContext::new(&s);
    let table = engine::adjustment_table(&ctx, residue)?;
    let report = r_sets(&ctx, &table)?;

    let result = json!({
        "multiplicity": s.multiplicity(),
        "dset": ctx.dset().elements(),
        "residue": residue,
        "f": ctx.blowup_apery_by_class()[residue as usize],
        "scan": table.scan_log.iter().map(|r| json!({"s": r.s, "ord": r.order, "adj": r.adj})).collect::<Vec<_>>(),
        "adjusted": table.adjusted_elements(),
        "r_sets": report.rsets.iter().map(|x| json!({
            "u": x.u,
            "min_order": x.min_order,
            "length_bound": x.length_bound,
            "factorizations": x.factorizations.iter().map(|f| f.coefficients().to_vec()).collect::<Vec<_>>(),
            "witness": x.witness,
        })).collect::<Vec<_>>(),
        "dmax_si": report.dmax_si,
        "witness": report.witness,
    });
    let envelope = Envelope {
        command: "table",
        inputs: json!({"generators": raw, "residue": residue}),
        method_used: "general",
        result,
    };
    Ok(emit(
        &envelope,
        settings,
        || render::scan_csv(&table),
        || render::table_text(&s, &ctx, &table, &report, settings.width),
    ))
}

pub fn classify(raw: &[i64], settings: &Settings) -> Result<String, Failure> {
    let s = semigroup(raw)?;
    let c = classify_semigroup(&s)?;
    let arith = c
        .arithmetic_sequence
        .map(|a| json!({"e": a.e, "d": a.d, "t": a.t}))
        .unwrap_or(Value::Null);
    let envelope = Envelope {
        command: "classify",
        inputs: json!({"generators": raw}),
        method_used: "general",
        result: json!({
            "semigroup": s.generators(),
            "additive": c.additive,
            "blowup_symmetric": c.blowup_symmetric,
            "supersymmetric": c.supersymmetric,
            "arithmetic_sequence": arith,
        }),
    };
    Ok(emit(
        &envelope,
        settings,
        || render::classify_csv(&c),
        || render::classify_text(&s, &c),
    ))
}

pub fn apery(raw: &[i64], element: Option<i64>, settings: &Settings) -> Result<String, Failure> {
    let s = semigroup(raw)?;
    let u = match element {
        Some(u) => nonnegative(u, "element")?,
        None => s.multiplicity(),
    };
    let ap = s.apery(u)?;
    let maximal = s.max_apery(u)?;
    let envelope = Envelope {
        command: "apery",
        inputs: json!({"generators": raw, "element": u}),
        method_used: "general",
        result: json!({
            "semigroup": s.generators(),
            "element": u,
            "apery": ap.elements,
            "maximal": maximal,
            "frobenius": s.frobenius(),
        }),
    };
    Ok(emit(
        &envelope,
        settings,
        || render::apery_csv(&ap.elements, &maximal),
        || render::apery_text(&s, u, &ap.elements, &maximal),
    ))
}

pub fn blowup(raw: &[i64], settings: &Settings) -> Result<String, Failure> {
    let s = semigroup(raw)?;
    let ctx = BlowupContext::new(&s);
    let envelope = Envelope {
        command: "blowup",
        inputs: json!({"generators": raw}),
        method_used: "general",
        result: json!({
            "semigroup": s.generators(),
            "dset": ctx.dset().elements(),
            "blowup": ctx.blowup().generators(),
            "blowup_apery": ctx.blowup_apery_by_class(),
            "blowup_frobenius": ctx.blowup().frobenius(),
        }),
    };
    Ok(emit(
        &envelope,
        settings,
        || render::blowup_csv(&ctx),
        || render::blowup_text(&ctx),
    ))
}

pub fn factorizations(raw: &[i64], target: i64, maximal_only: bool, settings: &Settings) -> Result<String, Failure> {
    let set = GeneratingSet::new(positive(raw)?)?;
    let target = nonnegative(target, "target")?;
    let mut all = enumerate_factorizations(&set, target);
    if maximal_only && !all.is_empty() {
        let ord = LengthTable::new(&set).order(target)?;
        all.retain(|f| f.length() == ord);
    }
    let envelope = Envelope {
        command: "factorizations",
        inputs: json!({"generators": raw, "target": target, "maximal_only": maximal_only}),
        method_used: "general",
        result: json!({
            "generators": set.generators(),
            "target": target,
            "count": all.len(),
            "factorizations": all.iter().map(|f| json!({
                "coefficients": f.coefficients(),
                "length": f.length(),
            })).collect::<Vec<_>>(),
        }),
    };
    Ok(emit(
        &envelope,
        settings,
        || render::factorizations_csv(set.len(), &all),
        || render::factorizations_text(&set, target, &all),
    ))
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Auto => "auto",
        Method::General => "general",
        Method::Additive => "additive",
        Method::SymmetricBlowup => "symmetric-blowup",
        Method::Ed3 => "ed3",
        Method::Ed3Ceiling => "ed3-ceiling",
        Method::Ed3Bezout => "ed3-bezout",
        Method::Arithmetic => "arithmetic",
        Method::Oracle => "oracle",
    }
}
