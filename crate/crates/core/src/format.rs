//! Text formats for ring specifications and monomial spaces.
//!
//! A ring-spec file holds `key = value` lines:
//!
//! ```text
//! # W = k[X_(2,3)] / Q_(1,inf), truncated
//! n = 2
//! a = [1, inf]
//! lambda = [2, 3]
//! phi = [inf, 1, 2, inf, 1]
//! ```
//!
//! `phi` is optional and lists one cap per variable grouped by color:
//! `x[1,1], .., x[1,lambda_1], x[2,1], ..`. `n` is optional but checked when
//! present. A space file holds one monomial per line in canonical text form.

use crate::error::{Error, Result};
use crate::ring::{Ext, RingSpec};
use crate::space::MonomialSpace;

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// Parses a comma-separated list, with or without surrounding brackets.
pub fn parse_list<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>> {
    let inner = text.trim();
    let inner = inner
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .unwrap_or(inner)
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<T>()
                .map_err(|_| Error::parse(line, format!("bad list entry {:?}", t.trim())))
        })
        .collect()
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let (mut n, mut a, mut lambda, mut phi) = (None, None, None, None);
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::parse(no, "expected `key = value`"))?;
        match key.trim() {
            "n" => {
                n = Some(
                    value
                        .trim()
                        .parse::<usize>()
                        .map_err(|_| Error::parse(no, "n must be a positive integer"))?,
                )
            }
            "a" => a = Some(parse_list::<Ext>(no, value)?),
            "lambda" => lambda = Some(parse_list::<usize>(no, value)?),
            "phi" => phi = Some(parse_list::<Ext>(no, value)?),
            other => return Err(Error::parse(no, format!("unknown key {other:?}"))),
        }
    }
    let a = a.ok_or_else(|| Error::InvalidSpec("missing `a`".into()))?;
    let lambda = lambda.ok_or_else(|| Error::InvalidSpec("missing `lambda`".into()))?;
    if let Some(n) = n {
        if n != a.len() {
            return Err(Error::InvalidSpec(format!(
                "n = {n} but the type has {} entries",
                a.len()
            )));
        }
    }
    RingSpec::new(a, lambda, phi)
}

pub fn write_ring_spec(ring: &RingSpec) -> String {
    let list = |xs: Vec<String>| format!("[{}]", xs.join(", "));
    let mut out = format!(
        "n = {}\na = {}\nlambda = {}\n",
        ring.n(),
        list(ring.a().iter().map(Ext::to_string).collect()),
        list(ring.lambda().iter().map(usize::to_string).collect()),
    );
    if let Some(phi) = ring.phi() {
        out.push_str(&format!(
            "phi = {}\n",
            list(phi.iter().map(Ext::to_string).collect())
        ));
    }
    out
}

/// Parses a space file. The degree is read off the first monomial; an empty
/// file needs `degree`.
pub fn parse_space(ring: &RingSpec, text: &str, degree: Option<u32>) -> Result<MonomialSpace> {
    let mut members = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let m = ring
            .parse_monomial(line)
            .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        members.push(m);
    }
    let degree = match (degree, members.first()) {
        (Some(d), _) => d,
        (None, Some(m)) => m.degree(),
        (None, None) => {
            return Err(Error::InvalidSpec(
                "empty space file; pass the degree explicitly".into(),
            ))
        }
    };
    MonomialSpace::new(ring, degree, members)
}

pub fn write_space(space: &MonomialSpace) -> String {
    space.to_strings().into_iter().map(|s| s + "\n").collect()
}


#[cfg(test)]
mod properties {
    use super::*;
    use crate::strategies;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn ring_spec_files_round_trip(r in strategies::truncated_ring()) {
            prop_assert_eq!(parse_ring_spec(&write_ring_spec(&r)).unwrap(), r);
        }

        #[test]
        fn space_files_round_trip(a in strategies::space()) {
            prop_assert_eq!(parse_space(a.ring(), &write_space(&a), Some(a.degree())).unwrap(), a);
        }
    }
}
