//! Ring specifications, variables, monomials and the lex/revlex orders.
//!
//! A ring is described by a type `a` (per-color degree caps, possibly
//! infinite), a composition `lambda` (per-color variable counts) and an
//! optional truncation `phi` (per-variable exponent caps). The variables
//! `x[i,j]` are totally ordered by `x[i,j] > x[i',j']` iff `j > j'`, or
//! `j == j'` and `i < i'`.
//!
//! Monomials store a dense exponent vector indexed by *slot*, where slot 0
//! is the largest variable. With this layout the lex order on monomials of
//! equal degree is plain lexicographic comparison of the exponent vectors.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A positive integer or infinity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Ext {
    Fin(u32),
    Inf,
}

impl Ext {
    pub fn is_finite(self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Ext::Fin(v) => Some(v),
            Ext::Inf => None,
        }
    }

    /// `min(self, bound)` as a plain integer.
    pub fn cap(self, bound: u32) -> u32 {
        match self {
            Ext::Fin(v) => v.min(bound),
            Ext::Inf => bound,
        }
    }

    /// Whether `value <= self`.
    pub fn admits(self, value: u32) -> bool {
        match self {
            Ext::Fin(v) => value <= v,
            Ext::Inf => true,
        }
    }
}

impl From<u32> for Ext {
    fn from(v: u32) -> Self {
        Ext::Fin(v)
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Fin(v) => write!(f, "{v}"),
            Ext::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for Ext {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Ext::Inf);
        }
        s.parse::<u32>()
            .map(Ext::Fin)
            .map_err(|_| format!("expected a positive integer or `inf`, found `{s}`"))
    }
}

impl Serialize for Ext {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Ext::Fin(v) => serializer.serialize_u32(*v),
            Ext::Inf => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Ext {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u32),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Num(v) => Ok(Ext::Fin(v)),
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// The variable `x[color,index]`, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Variable {
    pub color: usize,
    pub index: usize,
}

impl Variable {
    pub fn new(color: usize, index: usize) -> Self {
        Variable { color, index }
    }

    /// The fixed total order, without reference to a ring.
    fn order(self, other: Variable) -> Ordering {
        self.index
            .cmp(&other.index)
            .then_with(|| other.color.cmp(&self.color))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.color, self.index)
    }
}

/// A monomial over the variables of some ring.
///
/// Membership in a graded piece is not implied; use [`RingSpec::contains`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
    color_degrees: Vec<u32>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Exponents indexed by slot (slot 0 is the largest variable).
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Per-color degrees, indexed by `color - 1`.
    pub fn color_degrees(&self) -> &[u32] {
        &self.color_degrees
    }

    pub fn color_degree(&self, color: usize) -> u32 {
        self.color_degrees[color - 1]
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// The set of colors appearing in the monomial.
    pub fn colors(&self) -> Vec<usize> {
        self.color_degrees
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

/// Lex comparison of two monomials of equal degree: the monomial with the
/// larger exponent at the largest variable where they differ is larger.
pub fn compare_lex(m: &Monomial, other: &Monomial) -> Result<Ordering> {
    if m.exps.len() != other.exps.len() {
        return Err(Error::RingMismatch);
    }
    if m.degree != other.degree {
        return Err(Error::DegreeMismatch {
            left: m.degree,
            right: other.degree,
        });
    }
    Ok(m.exps.cmp(&other.exps))
}

/// Revlex comparison: the exact reversal of [`compare_lex`].
pub fn compare_revlex(m: &Monomial, other: &Monomial) -> Result<Ordering> {
    compare_lex(m, other).map(Ordering::reverse)
}

/// Sort key putting monomials of one degree in descending revlex order.
pub(crate) fn revlex_desc_key(m: &Monomial) -> &[u32] {
    &m.exps
}

#[derive(Debug)]
struct RingInner {
    a: Vec<Ext>,
    lambda: Vec<usize>,
    phi: Option<Vec<Ext>>,
    vars: Vec<Variable>,
    slot_color: Vec<usize>,
    slot_cap: Vec<Ext>,
    /// `slot_of[color-1][index-1]`
    slot_of: Vec<Vec<usize>>,
}

/// A colored quotient ring `k[X_lambda] / (Q_a + T^phi)`.
///
/// Cheap to clone; the variable tables are shared.
#[derive(Clone)]
pub struct RingSpec(Arc<RingInner>);

impl RingSpec {
    /// Builds a ring. `phi`, when given, lists one cap per variable grouped by
    /// color: `x[1,1..lambda_1]`, then `x[2,1..lambda_2]`, and so on.
    pub fn new(a: Vec<Ext>, lambda: Vec<usize>, phi: Option<Vec<Ext>>) -> Result<Self> {
        let n = a.len();
        if n == 0 {
            return Err(Error::InvalidSpec("at least one color is required".into()));
        }
        if lambda.len() != n {
            return Err(Error::InvalidSpec(format!(
                "type has {n} entries but composition has {}",
                lambda.len()
            )));
        }
        if a.contains(&Ext::Fin(0)) {
            return Err(Error::InvalidSpec("type entries must be >= 1".into()));
        }
        if lambda.contains(&0) {
            return Err(Error::InvalidSpec(
                "composition entries must be >= 1".into(),
            ));
        }
        let total: usize = lambda.iter().sum();
        if let Some(phi) = &phi {
            if phi.len() != total {
                return Err(Error::InvalidSpec(format!(
                    "phi has {} entries, expected one per variable ({total})",
                    phi.len()
                )));
            }
            if phi.contains(&Ext::Fin(0)) {
                return Err(Error::InvalidSpec("phi entries must be >= 1".into()));
            }
        }

        let mut vars: Vec<Variable> = lambda
            .iter()
            .enumerate()
            .flat_map(|(c, &l)| (1..=l).map(move |j| Variable::new(c + 1, j)))
            .collect();
        vars.sort_by(|x, y| y.order(*x));

        let mut slot_of: Vec<Vec<usize>> = lambda.iter().map(|&l| vec![0; l]).collect();
        for (slot, v) in vars.iter().enumerate() {
            slot_of[v.color - 1][v.index - 1] = slot;
        }
        let offsets: Vec<usize> = lambda
            .iter()
            .scan(0, |acc, &l| {
                let o = *acc;
                *acc += l;
                Some(o)
            })
            .collect();
        let slot_color = vars.iter().map(|v| v.color).collect();
        let slot_cap = vars
            .iter()
            .map(|v| match &phi {
                Some(phi) => phi[offsets[v.color - 1] + v.index - 1],
                None => Ext::Inf,
            })
            .collect();

        Ok(RingSpec(Arc::new(RingInner {
            a,
            lambda,
            phi,
            vars,
            slot_color,
            slot_cap,
            slot_of,
        })))
    }

    pub fn untruncated(a: Vec<Ext>, lambda: Vec<usize>) -> Result<Self> {
        Self::new(a, lambda, None)
    }

    /// Shorthand for finite types in tests and examples.
    pub fn finite(a: &[u32], lambda: &[usize]) -> Result<Self> {
        Self::new(
            a.iter().map(|&x| Ext::Fin(x)).collect(),
            lambda.to_vec(),
            None,
        )
    }

    /// The same ring with a different truncation.
    pub fn with_phi(&self, phi: Option<Vec<Ext>>) -> Result<Self> {
        Self::new(self.0.a.clone(), self.0.lambda.clone(), phi)
    }

    /// The same ring with a different type.
    pub fn with_type(&self, a: Vec<Ext>) -> Result<Self> {
        Self::new(a, self.0.lambda.clone(), self.0.phi.clone())
    }

    pub fn n(&self) -> usize {
        self.0.a.len()
    }

    pub fn a(&self) -> &[Ext] {
        &self.0.a
    }

    pub fn lambda(&self) -> &[usize] {
        &self.0.lambda
    }

    pub fn phi(&self) -> Option<&[Ext]> {
        self.0.phi.as_deref()
    }

    pub fn is_truncated(&self) -> bool {
        self.0.phi.is_some()
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    /// Variables in descending order; position = slot.
    pub fn variables(&self) -> &[Variable] {
        &self.0.vars
    }

    pub fn variable(&self, slot: usize) -> Variable {
        self.0.vars[slot]
    }

    pub fn slot(&self, x: Variable) -> Result<usize> {
        self.0
            .slot_of
            .get(x.color.wrapping_sub(1))
            .and_then(|row| row.get(x.index.wrapping_sub(1)))
            .copied()
            .ok_or(Error::InvalidVariable {
                color: x.color,
                index: x.index,
            })
    }

    pub fn slot_color(&self, slot: usize) -> usize {
        self.0.slot_color[slot]
    }

    /// Slots of the variables of one color, in descending variable order.
    pub fn color_slots(&self, color: usize) -> Vec<usize> {
        (0..self.num_vars())
            .filter(|&s| self.0.slot_color[s] == color)
            .collect()
    }

    /// The exponent cap phi(x) of a slot (infinite when untruncated).
    pub fn slot_cap(&self, slot: usize) -> Ext {
        self.0.slot_cap[slot]
    }

    pub fn phi_of(&self, x: Variable) -> Result<Ext> {
        Ok(self.slot_cap(self.slot(x)?))
    }

    /// `|a|`, infinite when some entry is.
    pub fn type_sum(&self) -> Ext {
        self.0
            .a
            .iter()
            .try_fold(0u32, |acc, x| x.finite().map(|v| acc + v))
            .map_or(Ext::Inf, Ext::Fin)
    }

    /// Compares two variables under the fixed total order.
    pub fn compare_variables(&self, x: Variable, y: Variable) -> Result<Ordering> {
        self.slot(x)?;
        self.slot(y)?;
        Ok(x.order(y))
    }

    fn build(&self, exps: Vec<u32>) -> Monomial {
        let mut color_degrees = vec![0u32; self.n()];
        for (slot, &e) in exps.iter().enumerate() {
            color_degrees[self.0.slot_color[slot] - 1] += e;
        }
        let degree = exps.iter().sum();
        Monomial {
            exps,
            degree,
            color_degrees,
        }
    }

    pub fn one(&self) -> Monomial {
        self.build(vec![0; self.num_vars()])
    }

    /// A monomial from slot-indexed exponents.
    pub fn monomial(&self, exps: Vec<u32>) -> Result<Monomial> {
        if exps.len() != self.num_vars() {
            return Err(Error::RingMismatch);
        }
        Ok(self.build(exps))
    }

    /// A monomial from `(variable, exponent)` factors; repeated variables add up.
    pub fn monomial_from_factors(&self, factors: &[(Variable, u32)]) -> Result<Monomial> {
        let mut exps = vec![0; self.num_vars()];
        for &(x, e) in factors {
            exps[self.slot(x)?] += e;
        }
        Ok(self.build(exps))
    }

    pub fn var(&self, x: Variable) -> Result<Monomial> {
        self.monomial_from_factors(&[(x, 1)])
    }

    /// Whether a monomial is nonzero in `W(phi)`.
    pub fn contains(&self, m: &Monomial) -> bool {
        m.exps.len() == self.num_vars()
            && m.color_degrees
                .iter()
                .zip(&self.0.a)
                .all(|(&d, cap)| cap.admits(d))
            && m.exps
                .iter()
                .zip(&self.0.slot_cap)
                .all(|(&e, cap)| cap.admits(e))
    }

    /// `x * m`, or `None` when the product vanishes in `W(phi)`.
    pub fn multiply_slot(&self, m: &Monomial, slot: usize) -> Option<Monomial> {
        let color = self.0.slot_color[slot];
        if !self.0.a[color - 1].admits(m.color_degrees[color - 1] + 1)
            || !self.0.slot_cap[slot].admits(m.exps[slot] + 1)
        {
            return None;
        }
        let mut out = m.clone();
        out.exps[slot] += 1;
        out.color_degrees[color - 1] += 1;
        out.degree += 1;
        Some(out)
    }

    /// `m / x`, or `None` when `x` does not divide `m`.
    pub fn divide_slot(&self, m: &Monomial, slot: usize) -> Option<Monomial> {
        if m.exps[slot] == 0 {
            return None;
        }
        let mut out = m.clone();
        out.exps[slot] -= 1;
        out.color_degrees[self.0.slot_color[slot] - 1] -= 1;
        out.degree -= 1;
        Some(out)
    }

    pub fn multiply(&self, m: &Monomial, other: &Monomial) -> Monomial {
        self.build(m.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect())
    }

    /// `m / d`, or `None` when `d` does not divide `m`.
    pub fn divide(&self, m: &Monomial, d: &Monomial) -> Option<Monomial> {
        if !d.divides(m) {
            return None;
        }
        Some(self.build(m.exps.iter().zip(&d.exps).map(|(a, b)| a - b).collect()))
    }

    /// The `X_color`-part of a monomial.
    pub fn color_part(&self, m: &Monomial, color: usize) -> Monomial {
        let exps = m
            .exps
            .iter()
            .enumerate()
            .map(|(s, &e)| if self.0.slot_color[s] == color { e } else { 0 })
            .collect();
        self.build(exps)
    }

    /// Whether the support of `m` lies inside `X_color`.
    pub fn supported_on(&self, m: &Monomial, color: usize) -> bool {
        m.exps
            .iter()
            .enumerate()
            .all(|(s, &e)| e == 0 || self.0.slot_color[s] == color)
    }

    /// Canonical text form: factors `x[i,j]^e` ordered by color then index,
    /// joined by `*`; `1` for the empty monomial.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut factors = Vec::new();
        for (c, &l) in self.0.lambda.iter().enumerate() {
            for j in 1..=l {
                let e = m.exps[self.0.slot_of[c][j - 1]];
                match e {
                    0 => {}
                    1 => factors.push(format!("x[{},{}]", c + 1, j)),
                    _ => factors.push(format!("x[{},{}]^{}", c + 1, j, e)),
                }
            }
        }
        factors.join("*")
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let text = text.trim();
        let bad = |msg: String| Error::parse(0, msg);
        if text == "1" {
            return Ok(self.one());
        }
        let mut factors = Vec::new();
        for factor in text.split('*') {
            let factor = factor.trim();
            let (var, exp) = match factor.split_once('^') {
                Some((v, e)) => (
                    v.trim(),
                    e.trim()
                        .parse::<u32>()
                        .map_err(|_| bad(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor, 1),
            };
            let inner = var
                .strip_prefix("x[")
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| bad(format!("expected `x[i,j]`, found `{var}`")))?;
            let (i, j) = inner
                .split_once(',')
                .ok_or_else(|| bad(format!("expected `x[i,j]`, found `{var}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad index in `{var}`")))
            };
            factors.push((Variable::new(parse(i)?, parse(j)?), exp));
        }
        self.monomial_from_factors(&factors)
    }

    /// Wraps a monomial for `{}` formatting.
    pub fn show<'a>(&'a self, m: &'a Monomial) -> MonomialDisplay<'a> {
        MonomialDisplay { ring: self, m }
    }
}

pub struct MonomialDisplay<'a> {
    ring: &'a RingSpec,
    m: &'a Monomial,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format_monomial(self.m))
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.a == other.0.a
                && self.0.lambda == other.0.lambda
                && self.0.phi == other.0.phi)
    }
}

impl Eq for RingSpec {}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingSpec")
            .field("a", &self.0.a)
            .field("lambda", &self.0.lambda)
            .field("phi", &self.0.phi)
            .finish()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[Ext]| xs.iter().map(Ext::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "a=({}) lambda=({})",
            list(&self.0.a),
            self.0
                .lambda
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        )?;
        if let Some(phi) = &self.0.phi {
            write!(f, " phi=({})", list(phi))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct RingRecord {
    n: usize,
    a: Vec<Ext>,
    lambda: Vec<usize>,
    phi: Option<Vec<Ext>>,
}

impl Serialize for RingSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RingRecord {
            n: self.n(),
            a: self.0.a.clone(),
            lambda: self.0.lambda.clone(),
            phi: self.0.phi.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RingSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rec = RingRecord::deserialize(deserializer)?;
        if rec.n != rec.a.len() {
            return Err(serde::de::Error::custom(format!(
                "n = {} but the type has {} entries",
                rec.n,
                rec.a.len()
            )));
        }
        RingSpec::new(rec.a, rec.lambda, rec.phi).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_12_21() -> RingSpec {
        RingSpec::finite(&[1, 2], &[2, 1]).unwrap()
    }

    fn mono(r: &RingSpec, s: &str) -> Monomial {
        r.parse_monomial(s).unwrap()
    }

    #[test]
    fn variable_order_examples() {
        let r = RingSpec::finite(&[1, 1, 1], &[2, 1, 1]).unwrap();
        let x = Variable::new;
        assert_eq!(
            r.compare_variables(x(1, 2), x(2, 1)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            r.compare_variables(x(1, 1), x(2, 1)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            r.compare_variables(x(3, 1), x(3, 1)).unwrap(),
            Ordering::Equal
        );
        assert!(matches!(
            r.compare_variables(x(2, 2), x(1, 1)),
            Err(Error::InvalidVariable { color: 2, index: 2 })
        ));
    }

    #[test]
    fn slots_follow_descending_order() {
        let r = ring_12_21();
        let names: Vec<String> = r.variables().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["x[1,2]", "x[1,1]", "x[2,1]"]);
    }

    #[test]
    fn lex_examples() {
        let r = ring_12_21();
        let a = mono(&r, "x[1,2]*x[2,1]");
        let b = mono(&r, "x[1,1]*x[2,1]");
        let c = mono(&r, "x[2,1]^2");
        assert_eq!(compare_lex(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(compare_lex(&b, &c).unwrap(), Ordering::Greater);
        assert_eq!(compare_lex(&a, &a).unwrap(), Ordering::Equal);
        assert_eq!(compare_revlex(&a, &b).unwrap(), Ordering::Less);
        assert_eq!(compare_revlex(&c, &c).unwrap(), Ordering::Equal);
    }

    #[test]
    fn cross_degree_comparison_is_rejected() {
        let r = ring_12_21();
        let a = mono(&r, "x[1,2]");
        let b = mono(&r, "x[2,1]^2");
        assert!(matches!(
            compare_lex(&a, &b),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            compare_revlex(&a, &b),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn monomial_text_round_trip() {
        let r = RingSpec::finite(&[2, 3], &[2, 3]).unwrap();
        let m = mono(&r, "x[2,3]*x[1,1]^2 * x[2,1]");
        assert_eq!(m.degree(), 4);
        assert_eq!(m.color_degrees(), &[2, 2]);
        assert_eq!(r.format_monomial(&m), "x[1,1]^2*x[2,1]*x[2,3]");
        assert_eq!(r.parse_monomial(&r.format_monomial(&m)).unwrap(), m);
        assert_eq!(r.format_monomial(&r.one()), "1");
        assert!(r.parse_monomial("x[3,1]").is_err());
        assert!(r.parse_monomial("y[1,1]").is_err());
    }

    #[test]
    fn membership_respects_type_and_phi() {
        let r = RingSpec::new(
            vec![Ext::Fin(2), Ext::Inf],
            vec![2, 1],
            Some(vec![Ext::Fin(1), Ext::Inf, Ext::Fin(3)]),
        )
        .unwrap();
        assert!(r.contains(&mono(&r, "x[1,1]*x[1,2]*x[2,1]^3")));
        assert!(!r.contains(&mono(&r, "x[1,1]^2")));
        assert!(!r.contains(&mono(&r, "x[1,2]^3")));
        assert!(!r.contains(&mono(&r, "x[2,1]^4")));
        assert_eq!(r.phi_of(Variable::new(2, 1)).unwrap(), Ext::Fin(3));
        let x21 = r.slot(Variable::new(2, 1)).unwrap();
        let m = mono(&r, "x[2,1]^3");
        assert!(r.multiply_slot(&m, x21).is_none());
        assert_eq!(r.divide_slot(&m, x21).unwrap(), mono(&r, "x[2,1]^2"));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(RingSpec::finite(&[], &[]).is_err());
        assert!(RingSpec::finite(&[0], &[1]).is_err());
        assert!(RingSpec::finite(&[1], &[0]).is_err());
        assert!(RingSpec::finite(&[1, 1], &[1]).is_err());
        assert!(RingSpec::new(vec![Ext::Fin(1)], vec![2], Some(vec![Ext::Fin(1)])).is_err());
    }

    #[test]
    fn ring_serde_round_trip() {
        let r = RingSpec::new(
            vec![Ext::Fin(1), Ext::Inf],
            vec![2, 3],
            Some(vec![
                Ext::Inf,
                Ext::Fin(1),
                Ext::Fin(2),
                Ext::Inf,
                Ext::Fin(1),
            ]),
        )
        .unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"a":[1,"inf"],"lambda":[2,3],"phi":["inf",1,2,"inf",1]}"#
        );
        let back: RingSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(
            serde_json::from_str::<RingSpec>(r#"{"n":3,"a":[1],"lambda":[1],"phi":null}"#).is_err()
        );
    }

    #[test]
    fn ext_ordering_puts_infinity_last() {
        assert!(Ext::Fin(u32::MAX) < Ext::Inf);
        assert_eq!(Ext::Inf.cap(4), 4);
        assert_eq!(Ext::Fin(2).cap(4), 2);
        assert_eq!("inf".parse::<Ext>().unwrap(), Ext::Inf);
        assert!("0x".parse::<Ext>().is_err());
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use crate::space::enumerate_piece;
    use crate::strategies;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn revlex_reverses_lex(r in strategies::ring(), d in 0u32..=3, i in 0usize..64, j in 0usize..64) {
            let piece = enumerate_piece(&r, d);
            prop_assume!(!piece.is_empty());
            let (m, other) = (&piece.members()[i % piece.len()], &piece.members()[j % piece.len()]);
            prop_assert_eq!(compare_revlex(m, other).unwrap(), compare_lex(m, other).unwrap().reverse());
            prop_assert_eq!(compare_lex(m, other).unwrap() == Ordering::Equal, m == other);
        }

        #[test]
        fn monomial_text_round_trips(r in strategies::truncated_ring(), d in 0u32..=3, i in 0usize..64) {
            let piece = enumerate_piece(&r, d);
            if !piece.is_empty() {
                let m = &piece.members()[i % piece.len()];
                prop_assert_eq!(&r.parse_monomial(&r.format_monomial(m)).unwrap(), m);
            }
        }

        #[test]
        fn variable_order_matches_slots(r in strategies::ring()) {
            for (s, &x) in r.variables().iter().enumerate() {
                prop_assert_eq!(r.slot(x).unwrap(), s);
                for &y in &r.variables()[s + 1..] {
                    prop_assert_eq!(r.compare_variables(x, y).unwrap(), Ordering::Greater);
                }
            }
        }

        #[test]
        fn ring_json_round_trips(r in strategies::truncated_ring()) {
            let json = serde_json::to_string(&r).unwrap();
            prop_assert_eq!(serde_json::from_str::<RingSpec>(&json).unwrap(), r);
        }
    }
}
