//! Command dispatch and JSON result payloads.

use std::time::Instant;

use serde_json::{json, Value};
use supclose_core::extensions::{
    sg_analyze, sg_conductor, sg_denominator_ideal, zloc_analyze, ExponentIdeal, SemigroupAnalysis,
};
use supclose_core::ideal::{ideal_intersect, ideal_quotient, radical_member, saturate, MonomialPrime};
use supclose_core::module::{
    ann_module, ass_module, critical_ideal, crucial_ideal, oda_generators, oda_member, support_closure,
};
use supclose_core::nagata::{nagata_conductor_member, nagata_oda_member, semigroup_ring, NagataElement, TPoly};
use supclose_core::zspec::{z_oda, z_supp, zset_closure, PrimeSetMode, ZIdeal, ZPrimeSet};
use supclose_core::{Ideal, PolyRing, Polynomial};

use crate::error::CliError;
use crate::session::Session;

pub const COMMANDS: &[&str] = &[
    "oda",
    "oda-member",
    "support-closure",
    "ann",
    "ass",
    "crucial",
    "critical",
    "radical-member",
    "intersect",
    "quotient",
    "saturate",
    "conductor",
    "denominator",
    "sg-analyze",
    "zloc-analyze",
    "z-supp",
    "z-oda",
    "nagata-conductor-member",
    "nagata-oda-member",
];

/// `{"command", "args", "result", "engine_version", "elapsed_ms"}`; keys
/// serialize in sorted order.
pub fn report(command: &str, args: &[String], result: Value, elapsed_ms: u128) -> Value {
    json!({
        "command": command,
        "args": args,
        "result": result,
        "engine_version": supclose_core::VERSION,
        "elapsed_ms": elapsed_ms as u64,
    })
}

/// Runs one command and wraps the result in a report.
pub fn run_command(session: &Session, command: &str, args: &[String]) -> Result<Value, CliError> {
    let start = Instant::now();
    let result = dispatch(session, command, args)?;
    Ok(report(command, args, result, start.elapsed().as_millis()))
}

fn arity(command: &str, args: &[String], min: usize, max: usize) -> Result<(), CliError> {
    if args.len() < min || args.len() > max {
        let want = if min == max { min.to_string() } else { format!("{min} to {max}") };
        return Err(CliError::parse(format!("`{command}` takes {want} arguments, got {}", args.len())));
    }
    Ok(())
}

pub fn ideal_json(ideal: &Ideal) -> Value {
    json!(ideal.canonical_gens().iter().map(Polynomial::to_string).collect::<Vec<_>>())
}

pub fn prime_json(p: &MonomialPrime, ring: &PolyRing) -> Value {
    json!(p.names(ring))
}

fn primes_json(ps: &[MonomialPrime], ring: &PolyRing) -> Value {
    Value::Array(ps.iter().map(|p| prime_json(p, ring)).collect())
}

pub fn exponent_json(ideal: &ExponentIdeal) -> Value {
    json!(ideal.generators())
}

pub fn zset_json(set: &ZPrimeSet) -> Value {
    let mode = match set.mode() {
        PrimeSetMode::Finite => "finite",
        PrimeSetMode::Cofinite => "cofinite",
    };
    json!({ "mode": mode, "primes": set.listed_primes(), "generic_point": set.contains_zero() })
}

pub fn zideal_json(i: ZIdeal) -> Value {
    json!(i.generator().to_string())
}

fn optional<T>(x: Option<T>, f: impl FnOnce(T) -> Value) -> Value {
    x.map_or(Value::Null, f)
}

fn existence(ideal: Option<MonomialPrime>, ring: &PolyRing) -> Value {
    match ideal {
        Some(p) => json!({ "exists": true, "ideal": prime_json(&p, ring) }),
        None => json!({ "exists": false }),
    }
}

fn parse_u64(text: &str) -> Result<u64, CliError> {
    text.parse().map_err(|_| CliError::parse(format!("`{text}` is not a nonnegative integer")))
}

fn semigroup_analysis_json(a: &SemigroupAnalysis) -> Value {
    let certificates: Vec<Value> = a
        .certificates
        .iter()
        .map(|c| {
            json!({
                "exponent": c.exponent,
                "denominator": exponent_json(&c.denominator),
                "radical_is_maximal": c.radical_is_maximal,
            })
        })
        .collect();
    json!({
        "proper": a.proper,
        "maximal": exponent_json(&a.maximal),
        "oda": exponent_json(&a.oda),
        "support": a.support.iter().map(exponent_json).collect::<Vec<_>>(),
        "crucial": optional(a.crucial.as_ref(), exponent_json),
        "critical": optional(a.critical.as_ref(), exponent_json),
        "conductor": exponent_json(&a.conductor),
        "conductor_radical_is_maximal": a.conductor_radical_is_maximal,
        "certificates": certificates,
        "support_matches_conductor": a.support_matches_conductor,
        "bound": a.bound,
    })
}

/// Parses `P` (and `Q`) as polynomials in `x` and `T`.
fn nagata_element(session: &Session, ext_name: &str, rest: &[String]) -> Result<NagataElement, CliError> {
    let ext = session.extension(ext_name)?;
    let host = PolyRing::rational(&["x", "T"]);
    let base = semigroup_ring();
    let split = |text: &str| -> Result<TPoly, CliError> {
        let p = Polynomial::parse(text, &host).map_err(|e| CliError::parse(format!("`{text}`: {e}")))?;
        Ok(TPoly::from_polynomial(&p, 1, &base)?)
    };
    let numerator = split(&rest[0])?;
    match rest.get(1) {
        Some(q) => Ok(NagataElement::new(ext, numerator, split(q)?)?),
        None => Ok(NagataElement::polynomial(ext, numerator)?),
    }
}

fn dispatch(session: &Session, command: &str, args: &[String]) -> Result<Value, CliError> {
    let ring = session.ring.as_ref();
    match command {
        "oda" => {
            arity(command, args, 1, 1)?;
            let view = oda_generators(&session.module(&args[0])?)?;
            match (view.generators(), view.min_primes()) {
                (Some(g), Some(p)) => Ok(json!({ "ideal": ideal_json(g), "min_primes": primes_json(p, ring) })),
                _ => Err(CliError::unsupported("Oda generators need monomial summands; use oda-member")),
            }
        }
        "oda-member" => {
            arity(command, args, 2, 2)?;
            let a = session.polynomial(&args[1])?;
            Ok(json!({ "member": oda_member(&session.module(&args[0])?, &a)? }))
        }
        "support-closure" => {
            arity(command, args, 1, 1)?;
            let sc = support_closure(&session.module(&args[0])?)?;
            match (sc.oda.generators(), &sc.min_primes) {
                (Some(g), Some(p)) => Ok(json!({
                    "ideal": ideal_json(g),
                    "min_primes": primes_json(p, ring),
                    "closed": sc.closed,
                })),
                _ => Err(CliError::unsupported("support closure needs monomial summands")),
            }
        }
        "ann" => {
            arity(command, args, 1, 1)?;
            Ok(json!({ "ideal": ideal_json(&ann_module(&session.module(&args[0])?)?) }))
        }
        "ass" => {
            arity(command, args, 1, 1)?;
            Ok(json!({ "primes": primes_json(&ass_module(&session.module(&args[0])?)?, ring) }))
        }
        "crucial" => {
            arity(command, args, 1, 1)?;
            Ok(existence(crucial_ideal(&session.module(&args[0])?)?.ideal, ring))
        }
        "critical" => {
            arity(command, args, 1, 1)?;
            Ok(existence(critical_ideal(&session.module(&args[0])?)?.ideal, ring))
        }
        "radical-member" => {
            arity(command, args, 2, 2)?;
            let f = session.polynomial(&args[0])?;
            Ok(json!({ "member": radical_member(&f, session.ideal(&args[1])?)? }))
        }
        "intersect" => {
            arity(command, args, 2, 2)?;
            let meet = ideal_intersect(session.ideal(&args[0])?, session.ideal(&args[1])?)?;
            Ok(json!({ "ideal": ideal_json(&meet) }))
        }
        "quotient" => {
            arity(command, args, 2, 2)?;
            let q = ideal_quotient(session.ideal(&args[0])?, session.ideal(&args[1])?)?;
            Ok(json!({ "ideal": ideal_json(&q) }))
        }
        "saturate" => {
            arity(command, args, 2, 2)?;
            let f = session.polynomial(&args[1])?;
            Ok(json!({ "ideal": ideal_json(&saturate(session.ideal(&args[0])?, &f)?) }))
        }
        "conductor" => {
            arity(command, args, 1, 1)?;
            if let Ok(ext) = session.extension(&args[0]) {
                return Ok(json!({ "generators": exponent_json(&sg_conductor(ext)) }));
            }
            let z =
                session.zloc(&args[0]).map_err(|_| CliError::parse(format!("undeclared extension `{}`", args[0])))?;
            Ok(json!({ "ideal": zideal_json(zloc_analyze(z).conductor) }))
        }
        "denominator" => {
            arity(command, args, 2, 2)?;
            let d = sg_denominator_ideal(session.extension(&args[0])?, parse_u64(&args[1])?)?;
            Ok(json!({ "generators": exponent_json(&d) }))
        }
        "sg-analyze" => {
            arity(command, args, 1, 1)?;
            Ok(semigroup_analysis_json(&sg_analyze(session.extension(&args[0])?)?))
        }
        "zloc-analyze" => {
            arity(command, args, 1, 1)?;
            let a = zloc_analyze(session.zloc(&args[0])?);
            Ok(json!({
                "oda": zideal_json(a.oda),
                "support": zset_json(&a.support),
                "conductor": zideal_json(a.conductor),
                "crucial": optional(a.crucial, zideal_json),
                "critical": optional(a.critical, zideal_json),
                "ass": zset_json(&a.ass),
                "ass_chain": a.ass_chain,
                "denominator_radicals": a.denominator_radicals,
            }))
        }
        "z-supp" => {
            arity(command, args, 1, 1)?;
            let s = z_supp(session.zmodule(&args[0])?);
            Ok(json!({ "set": zset_json(&s), "closed": s.is_closed(), "closure": zset_json(&zset_closure(&s)) }))
        }
        "z-oda" => {
            arity(command, args, 1, 1)?;
            Ok(json!({ "ideal": zideal_json(z_oda(session.zmodule(&args[0])?)) }))
        }
        "nagata-conductor-member" => {
            arity(command, args, 2, 3)?;
            let elem = nagata_element(session, &args[0], &args[1..])?;
            Ok(json!({ "member": nagata_conductor_member(session.extension(&args[0])?, &elem) }))
        }
        "nagata-oda-member" => {
            arity(command, args, 2, 3)?;
            let elem = nagata_element(session, &args[0], &args[1..])?;
            Ok(json!({ "member": nagata_oda_member(session.extension(&args[0])?, &elem)? }))
        }
        other => Err(CliError::parse(format!("unknown command `{other}`"))),
    }
}
