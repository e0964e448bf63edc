use std::collections::BTreeMap;

use super::{Field, Fp, Fq, RatFn, RootedField};
use crate::error::{Error, Result};
use crate::poly;

/// A parsed field descriptor of any supported kind.
#[derive(Clone, Debug)]
pub enum AnyField {
    Prime(RootedField<Fp>),
    Ext(RootedField<Fq>),
    RatPrime(RootedField<RatFn<Fp>>),
    RatExt(RootedField<RatFn<Fq>>),
}

/// Runs `$body` with `$rf` bound to the concrete `RootedField` inside an `AnyField`.
#[macro_export]
macro_rules! with_field {
    ($any:expr, |$rf:ident| $body:expr) => {
        match $any {
            $crate::field::AnyField::Prime($rf) => $body,
            $crate::field::AnyField::Ext($rf) => $body,
            $crate::field::AnyField::RatPrime($rf) => $body,
            $crate::field::AnyField::RatExt($rf) => $body,
        }
    };
}

impl AnyField {
    pub fn describe(&self) -> String {
        with_field!(self, |rf| rf.describe())
    }

    pub fn n(&self) -> usize {
        with_field!(self, |rf| rf.n)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, AnyField::Prime(_) | AnyField::Ext(_))
    }
}

fn key_values(parts: &[&str]) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for part in parts {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, found '{part}'")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn take<'a>(kv: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str> {
    kv.get(key)
        .map(|s| s.as_str())
        .ok_or_else(|| Error::Parse(format!("missing '{key}='")))
}

fn parse_int<T: std::str::FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("invalid {what}: '{s}'")))
}

fn parse_prime(rest: &str) -> Result<RootedField<Fp>> {
    let parts: Vec<&str> = rest.split(';').collect();
    let f = Fp::new(parse_int(parts[0], "prime")?)?;
    let kv = key_values(&parts[1..])?;
    let n = parse_int(take(&kv, "n")?, "n")?;
    let q = f.parse_elem(take(&kv, "q")?)?;
    RootedField::new(f, n, q)
}

fn parse_ext(rest: &str) -> Result<RootedField<Fq>> {
    let parts: Vec<&str> = rest.split(';').collect();
    let (p, k) = parts[0]
        .split_once('^')
        .ok_or_else(|| Error::Parse(format!("expected <p>^<k>, found '{}'", parts[0])))?;
    let p: u32 = parse_int(p, "prime")?;
    let k: usize = parse_int(k, "extension degree")?;
    let kv = key_values(&parts[1..])?;
    let base = Fp::new(p)?;
    let f = match kv.get("mod") {
        Some(m) => {
            let g = poly::parse_poly(&base, m, "z")?;
            if g.len() != k + 1 {
                return Err(Error::Parse(format!(
                    "modulus has degree {}, expected {k}",
                    g.len().saturating_sub(1)
                )));
            }
            let coeffs: Vec<i64> = g.iter().map(|&c| c as i64).collect();
            Fq::new(p, &coeffs)?
        }
        None => Fq::with_degree(p, k)?,
    };
    let n = parse_int(take(&kv, "n")?, "n")?;
    let q = f.parse_elem(take(&kv, "q")?)?;
    RootedField::new(f, n, q)
}

/// Parses `Fp:<p>;n=<n>;q=<int>`, `Fq:<p>^<k>;mod=<poly>;n=<n>;q=<poly>` or `Frat:<innerspec>`.
pub fn parse_field(spec: &str) -> Result<AnyField> {
    let spec = spec.trim();
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing field kind in '{spec}'")))?;
    match kind.trim() {
        "Fp" => Ok(AnyField::Prime(parse_prime(rest)?)),
        "Fq" => Ok(AnyField::Ext(parse_ext(rest)?)),
        "Frat" => match parse_field(rest)? {
            AnyField::Prime(inner) => {
                let f = RatFn::new(inner.field.clone())?;
                let q = f.from_inner(&inner.q);
                Ok(AnyField::RatPrime(RootedField::new(f, inner.n, q)?))
            }
            AnyField::Ext(inner) => {
                let f = RatFn::new(inner.field.clone())?;
                let q = f.from_inner(&inner.q);
                Ok(AnyField::RatExt(RootedField::new(f, inner.n, q)?))
            }
            _ => Err(Error::Parse("Frat expects a finite inner field".into())),
        },
        "Q" | "QQ" | "Qcyc" => Err(Error::UnsupportedField(
            "characteristic 0 fields are not supported".into(),
        )),
        other => Err(Error::Parse(format!("unknown field kind '{other}'"))),
    }
}
