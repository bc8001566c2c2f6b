//! Shared test support: an independent Sturm-sequence root-count oracle, an
//! independent Leibniz determinant, a deterministic pseudo-random stream, and
//! a small JSON-schema checker for the shipped output schema. Everything here
//! stays independent of the library paths it is used to check.

#![allow(dead_code)]

use martensite::rat::{rat_i64, Rat, Sign};
use martensite::ring::Ring;
use martensite::strain::SymStrain;
use martensite::unipoly::UniPoly;
use serde_json::Value;

/// Sturm chain of `p`: `p, p', -rem(...)` down to a constant.
pub fn sturm_chain(p: &UniPoly) -> Vec<UniPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

fn variations_at(chain: &[UniPoly], x: &Rat) -> usize {
    let mut last = Sign::Zero;
    let mut count = 0;
    for p in chain {
        let s = p.sign_at(x);
        if s == Sign::Zero {
            continue;
        }
        if last != Sign::Zero && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of squarefree `p` in the half-open interval
/// `(a, b]`.
pub fn sturm_count(p: &UniPoly, a: &Rat, b: &Rat) -> usize {
    let chain = sturm_chain(p);
    variations_at(&chain, a) - variations_at(&chain, b)
}

/// Number of distinct real roots over the whole line.
pub fn sturm_count_all(p: &UniPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let b = p.root_bound() + rat_i64(1);
    sturm_count(p, &-b.clone(), &b)
}

/// Independent determinant by the full Leibniz sum over all six
/// permutations; used as an oracle against the cofactor-expansion route.
pub fn leibniz_det3<R: Ring>(m: &[[R; 3]; 3]) -> R {
    let term = |a: usize, b: usize, c: usize| m[0][a].mul_ref(&m[1][b]).mul_ref(&m[2][c]);
    term(0, 1, 2)
        .sub_ref(&term(0, 2, 1))
        .sub_ref(&term(1, 0, 2))
        .add_ref(&term(1, 2, 0))
        .add_ref(&term(2, 0, 1))
        .sub_ref(&term(2, 1, 0))
}

/// Deterministic xorshift stream for property tests.
pub struct Stream(u64);

impl Stream {
    pub fn new(seed: u64) -> Stream {
        Stream(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        self.0
    }

    pub fn small_rat(&mut self) -> Rat {
        let n = (self.next_u64() % 21) as i64 - 10;
        let d = 1 + (self.next_u64() % 6) as i64;
        Rat::new(n.into(), d.into())
    }

    /// A random trace-free symmetric matrix with small rational entries.
    pub fn trace_free_strain(&mut self) -> SymStrain<Rat> {
        let e11 = self.small_rat();
        let e22 = self.small_rat();
        let e33 = -(&e11 + &e22);
        SymStrain::new(e11, e22, e33, self.small_rat(), self.small_rat(), self.small_rat())
    }

    pub fn strain(&mut self) -> SymStrain<Rat> {
        SymStrain::new(
            self.small_rat(),
            self.small_rat(),
            self.small_rat(),
            self.small_rat(),
            self.small_rat(),
            self.small_rat(),
        )
    }
}

/// Minimal JSON-schema checker covering the subset used by the shipped
/// schema: type, enum, required, properties, additionalProperties: false,
/// items, oneOf.
pub fn validate_schema(schema: &Value, instance: &Value) -> Result<(), String> {
    if let Some(one_of) = schema.get("oneOf") {
        let branches = one_of.as_array().ok_or("oneOf must be an array")?;
        let matches: Vec<usize> = branches
            .iter()
            .enumerate()
            .filter(|(_, branch)| validate_schema(branch, instance).is_ok())
            .map(|(i, _)| i)
            .collect();
        return match matches.len() {
            1 => Ok(()),
            0 => Err("no oneOf branch matched".into()),
            n => Err(format!("{n} oneOf branches matched")),
        };
    }
    if let Some(ty) = schema.get("type") {
        let allowed: Vec<String> = match ty {
            Value::String(s) => vec![s.clone()],
            Value::Array(a) => a
                .iter()
                .map(|v| v.as_str().map(str::to_string).ok_or("bad type entry"))
                .collect::<Result<_, _>>()?,
            _ => return Err("bad type".into()),
        };
        let actual = match instance {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) => {
                if n.is_i64() || n.is_u64() {
                    "integer"
                } else {
                    "number"
                }
            }
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        let ok = allowed.iter().any(|a| {
            a == actual || (a == "number" && actual == "integer")
        });
        if !ok {
            return Err(format!("type mismatch: got {actual}, want {allowed:?}"));
        }
    }
    if let Some(options) = schema.get("enum") {
        let options = options.as_array().ok_or("enum must be an array")?;
        if !options.contains(instance) {
            return Err(format!("value {instance} not in enum"));
        }
    }
    if let Value::Object(obj) = instance {
        if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
            for key in required {
                let key = key.as_str().ok_or("bad required entry")?;
                if !obj.contains_key(key) {
                    return Err(format!("missing required property {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(|p| p.as_object());
        if let Some(props) = props {
            for (key, sub) in props {
                if let Some(v) = obj.get(key) {
                    validate_schema(sub, v).map_err(|e| format!("{key}: {e}"))?;
                }
            }
        }
        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
            for key in obj.keys() {
                if props.is_none_or(|p| !p.contains_key(key)) {
                    return Err(format!("unexpected property {key}"));
                }
            }
        }
    }
    if let (Value::Array(items), Some(item_schema)) = (instance, schema.get("items")) {
        for (i, v) in items.iter().enumerate() {
            validate_schema(item_schema, v).map_err(|e| format!("[{i}]: {e}"))?;
        }
    }
    Ok(())
}

/// Runs the CLI binary with the given arguments, returning (stdout, success).
pub fn run_cli(args: &[&str]) -> (String, bool) {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_martensite"))
        .args(args)
        .output()
        .expect("spawn CLI");
    (String::from_utf8(output.stdout).expect("utf8 stdout"), output.status.success())
}
