//! Colored multicomplexes, f-vectors and revlex realizability.
//!
//! An ambient is a [`RingSpec`] with finite type: its monomials are the
//! universe `M_{a,pi}(phi)`, color `i` playing the role of the part `X_i` of
//! the vertex partition. A multicomplex is a divisibility-closed subset
//! containing `1`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Ext, Monomial, RingSpec, Variable};
use crate::space::{enumerate_piece, GradedPiece, MonomialSpace};

/// Face counts by degree, `f_0 = 1`. Trailing zeros are dropped.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct FVector(Vec<usize>);

impl FVector {
    pub fn new(mut counts: Vec<usize>) -> Result<Self> {
        if counts.first() != Some(&1) {
            return Err(Error::InvalidFVector("f_0 must be 1".into()));
        }
        while counts.len() > 1 && counts.last() == Some(&0) {
            counts.pop();
        }
        Ok(FVector(counts))
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    /// Largest degree with a nonzero count.
    pub fn top_degree(&self) -> u32 {
        (self.0.len() - 1) as u32
    }

    pub fn get(&self, degree: u32) -> usize {
        self.0.get(degree as usize).copied().unwrap_or(0)
    }
}

impl TryFrom<Vec<usize>> for FVector {
    type Error = Error;

    fn try_from(counts: Vec<usize>) -> Result<Self> {
        FVector::new(counts)
    }
}

impl From<FVector> for Vec<usize> {
    fn from(f: FVector) -> Self {
        f.0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for FVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let counts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidFVector(format!("bad count {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FVector::new(counts)
    }
}

fn check_ambient(ambient: &RingSpec) -> Result<()> {
    if ambient.a().iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidSpec(
            "multicomplex ambients need a finite type".into(),
        ));
    }
    Ok(())
}

/// Total degree bound of the ambient, `|a|`.
fn ambient_top(ambient: &RingSpec) -> u32 {
    ambient.a().iter().filter_map(|x| x.finite()).sum()
}

/// First `(monomial, missing divisor)` breaking divisibility closure of the
/// layered set, scanning degrees upward and each layer in descending revlex.
fn first_gap(ring: &RingSpec, layers: &[MonomialSpace]) -> Option<(Monomial, Monomial)> {
    for d in 1..layers.len() {
        for m in layers[d].members() {
            for slot in 0..ring.num_vars() {
                if let Some(div) = ring.divide_slot(m, slot) {
                    if !layers[d - 1].contains(&div) {
                        return Some((m.clone(), div));
                    }
                }
            }
        }
    }
    None
}

/// A divisibility-closed set of ambient monomials containing `1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredMulticomplex {
    ambient: RingSpec,
    /// `layers[d]` is `M^d`; the last layer is nonempty.
    layers: Vec<MonomialSpace>,
}

impl ColoredMulticomplex {
    /// Validates membership, `1 in M` and closure.
    pub fn new(ambient: &RingSpec, members: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        check_ambient(ambient)?;
        let mut by_degree: Vec<Vec<Monomial>> = Vec::new();
        for m in members {
            if !ambient.contains(&m) {
                return Err(Error::NotInPiece(ambient.format_monomial(&m)));
            }
            let d = m.degree() as usize;
            if by_degree.len() <= d {
                by_degree.resize(d + 1, Vec::new());
            }
            by_degree[d].push(m);
        }
        if by_degree.first().is_none_or(|l| l.is_empty()) {
            return Err(Error::NotClosed {
                monomial: "(empty set)".into(),
                missing: "1".into(),
            });
        }
        let layers = by_degree
            .into_iter()
            .enumerate()
            .map(|(d, ms)| {
                let unique: HashSet<Monomial> = ms.into_iter().collect();
                MonomialSpace::new(ambient, d as u32, unique)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_layers(ambient, layers)
    }

    fn from_layers(ambient: &RingSpec, mut layers: Vec<MonomialSpace>) -> Result<Self> {
        while layers.len() > 1 && layers.last().is_some_and(|l| l.is_empty()) {
            layers.pop();
        }
        if let Some((m, div)) = first_gap(ambient, &layers) {
            return Err(Error::NotClosed {
                monomial: ambient.format_monomial(&m),
                missing: ambient.format_monomial(&div),
            });
        }
        Ok(ColoredMulticomplex {
            ambient: ambient.clone(),
            layers,
        })
    }

    /// The smallest multicomplex containing the generators.
    pub fn generated_by(
        ambient: &RingSpec,
        generators: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        check_ambient(ambient)?;
        let mut all: HashSet<Monomial> = HashSet::new();
        let mut stack: Vec<Monomial> = vec![ambient.one()];
        for g in generators {
            if !ambient.contains(&g) {
                return Err(Error::NotInPiece(ambient.format_monomial(&g)));
            }
            stack.push(g);
        }
        while let Some(m) = stack.pop() {
            if all.contains(&m) {
                continue;
            }
            for slot in 0..ambient.num_vars() {
                if let Some(div) = ambient.divide_slot(&m, slot) {
                    stack.push(div);
                }
            }
            all.insert(m);
        }
        Self::new(ambient, all)
    }

    /// Parses monomials in canonical text form, one per entry.
    pub fn parse(ambient: &RingSpec, lines: &[&str]) -> Result<Self> {
        let members = lines
            .iter()
            .map(|l| ambient.parse_monomial(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ambient, members)
    }

    pub fn ambient(&self) -> &RingSpec {
        &self.ambient
    }

    pub fn layers(&self) -> &[MonomialSpace] {
        &self.layers
    }

    pub fn layer(&self, degree: u32) -> Option<&MonomialSpace> {
        self.layers.get(degree as usize)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.layer(m.degree()).is_some_and(|l| l.contains(m))
    }

    pub fn len(&self) -> usize {
        self.layers.iter().map(MonomialSpace::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> impl Iterator<Item = &Monomial> {
        self.layers.iter().flat_map(|l| l.members())
    }

    /// Members by degree, each degree in descending revlex order.
    pub fn to_strings(&self) -> Vec<String> {
        self.layers
            .iter()
            .flat_map(MonomialSpace::to_strings)
            .collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.layers.iter().map(MonomialSpace::len).collect())
    }
}

pub fn f_vector(m: &ColoredMulticomplex) -> FVector {
    m.f_vector()
}

fn pieces_for(ambient: &RingSpec, f: &FVector) -> Result<Vec<GradedPiece>> {
    (0..=f.top_degree())
        .map(|d| {
            let piece = enumerate_piece(ambient, d);
            if f.get(d) > piece.len() {
                return Err(Error::OutOfRange {
                    what: "f-vector entry",
                    value: f.get(d),
                    max: piece.len(),
                });
            }
            Ok(piece)
        })
        .collect()
}

/// The union of the top `f_d` monomials of every ambient piece, if it is a
/// multicomplex; otherwise [`Error::NotClosed`] with the first gap.
pub fn build_compressed(ambient: &RingSpec, f: &FVector) -> Result<ColoredMulticomplex> {
    check_ambient(ambient)?;
    let pieces = pieces_for(ambient, f)?;
    let layers = pieces
        .iter()
        .enumerate()
        .map(|(d, p)| p.revlex_segment(f.get(d as u32)))
        .collect::<Result<Vec<_>>>()?;
    ColoredMulticomplex::from_layers(ambient, layers)
}

/// Exhaustive search for any multicomplex in the ambient with f-vector `f`.
///
/// Layers are chosen degree by degree among the monomials whose divisors
/// all lie in the previous layer, trying subsets in lexicographic order of
/// their revlex positions. Every subset tried counts against `budget`.
pub fn search_realizable(
    ambient: &RingSpec,
    f: &FVector,
    budget: u64,
) -> Result<Option<ColoredMulticomplex>> {
    let mut spent = 0;
    search_counted(ambient, f, budget, &mut spent)
}

fn search_counted(
    ambient: &RingSpec,
    f: &FVector,
    budget: u64,
    spent: &mut u64,
) -> Result<Option<ColoredMulticomplex>> {
    check_ambient(ambient)?;
    let pieces = match pieces_for(ambient, f) {
        Ok(p) => p,
        Err(Error::OutOfRange { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let mut layers = vec![MonomialSpace::new(ambient, 0, [ambient.one()])?];
    if dfs(ambient, f, &pieces, &mut layers, budget, spent)? {
        return ColoredMulticomplex::from_layers(ambient, layers).map(Some);
    }
    Ok(None)
}

fn dfs(
    ambient: &RingSpec,
    f: &FVector,
    pieces: &[GradedPiece],
    layers: &mut Vec<MonomialSpace>,
    budget: u64,
    spent: &mut u64,
) -> Result<bool> {
    let d = layers.len();
    if d == pieces.len() {
        return Ok(true);
    }
    let below = &layers[d - 1];
    let open: Vec<Monomial> = pieces[d]
        .members()
        .iter()
        .filter(|m| {
            (0..ambient.num_vars()).all(|slot| {
                ambient
                    .divide_slot(m, slot)
                    .is_none_or(|div| below.contains(&div))
            })
        })
        .cloned()
        .collect();
    let k = f.get(d as u32);
    if open.len() < k {
        return Ok(false);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        *spent += 1;
        if *spent > budget {
            return Err(Error::BudgetExceeded(format!(
                "search tried more than {budget} candidate layers"
            )));
        }
        let layer = MonomialSpace::new(ambient, d as u32, idx.iter().map(|&i| open[i].clone()))?;
        layers.push(layer);
        // The top layer only has to fit; any choice is closed.
        if d + 1 == pieces.len() || dfs(ambient, f, pieces, layers, budget, spent)? {
            return Ok(true);
        }
        layers.pop();
        if !next_combination(&mut idx, open.len()) {
            return Ok(false);
        }
    }
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// A realizable f-vector whose revlex candidate is not a multicomplex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct HuntWitness {
    pub ambient: RingSpec,
    pub f: FVector,
    /// A multicomplex realizing `f`.
    pub multicomplex: Vec<String>,
    /// First member of the revlex candidate lacking a divisor.
    pub monomial: String,
    pub missing: String,
    /// Search candidates consumed before the witness was found.
    pub candidates: u64,
}

/// Sweeps f-vectors `(1, f_1, .., f_D)` with `D <= max_degree`, by `D` and
/// then lexicographically, for the first one that is realizable but whose
/// revlex candidate fails closure.
pub fn witness_hunt(
    ambient: &RingSpec,
    max_degree: u32,
    budget: u64,
) -> Result<Option<HuntWitness>> {
    check_ambient(ambient)?;
    let sizes: Vec<usize> = (0..=max_degree)
        .map(|d| enumerate_piece(ambient, d).len())
        .collect();
    let mut spent = 0u64;
    for top in 1..=max_degree as usize {
        if sizes[top] == 0 {
            break;
        }
        // Counts for degrees 1..=top; the top count is nonzero.
        let mut counts = vec![0usize; top + 1];
        counts[0] = 1;
        counts[top] = 1;
        loop {
            let f = FVector::new(counts.clone())?;
            match build_compressed(ambient, &f) {
                Err(Error::NotClosed { monomial, missing }) => {
                    if let Some(m) = search_counted(ambient, &f, budget, &mut spent)? {
                        return Ok(Some(HuntWitness {
                            ambient: ambient.clone(),
                            f,
                            multicomplex: m.to_strings(),
                            monomial,
                            missing,
                            candidates: spent,
                        }));
                    }
                }
                Ok(_) => {}
                Err(e) => return Err(e),
            }
            // Odometer over counts[1..=top], counts[top] >= 1.
            let mut i = top;
            loop {
                if i == 0 {
                    break;
                }
                let min = if i == top { 1 } else { 0 };
                if counts[i] < sizes[i] {
                    counts[i] += 1;
                    break;
                }
                counts[i] = min;
                i -= 1;
            }
            if i == 0 {
                break;
            }
        }
    }
    Ok(None)
}

/// Replays a hunt witness: the recorded set is a multicomplex with the
/// recorded f-vector, and the revlex candidate fails at the recorded gap.
pub fn check_hunt_witness(w: &HuntWitness) -> Result<()> {
    let lines: Vec<&str> = w.multicomplex.iter().map(String::as_str).collect();
    let m = ColoredMulticomplex::parse(&w.ambient, &lines)?;
    if m.f_vector() != w.f {
        return Err(Error::ReplayMismatch(format!(
            "multicomplex has f-vector {} but {} was recorded",
            m.f_vector(),
            w.f
        )));
    }
    match build_compressed(&w.ambient, &w.f) {
        Err(Error::NotClosed { monomial, missing })
            if monomial == w.monomial && missing == w.missing =>
        {
            Ok(())
        }
        Err(Error::NotClosed { monomial, missing }) => Err(Error::ReplayMismatch(format!(
            "revlex candidate fails at {monomial} / {missing}, recorded {} / {}",
            w.monomial, w.missing
        ))),
        Ok(_) => Err(Error::ReplayMismatch(
            "revlex candidate is a multicomplex".into(),
        )),
        Err(e) => Err(e),
    }
}

/// The degree-`d` ambient monomials outside `M`, for `d <= max_degree`.
pub fn ideal_complement(m: &ColoredMulticomplex, max_degree: u32) -> Vec<MonomialSpace> {
    (0..=max_degree)
        .map(|d| {
            let piece = enumerate_piece(&m.ambient, d);
            let outside = piece.members().iter().filter(|x| !m.contains(x)).cloned();
            MonomialSpace::new(&m.ambient, d, outside).expect("piece members are in the ambient")
        })
        .collect()
}

/// Inverse of [`ideal_complement`]: the ambient monomials of degree at most
/// `ideal.len() - 1` outside the given ideal pieces.
pub fn multicomplex_from_ideal(
    ambient: &RingSpec,
    ideal: &[MonomialSpace],
) -> Result<ColoredMulticomplex> {
    check_ambient(ambient)?;
    let mut members = Vec::new();
    for (d, part) in ideal.iter().enumerate() {
        let piece = enumerate_piece(ambient, d as u32);
        members.extend(
            piece
                .members()
                .iter()
                .filter(|x| !part.contains(x))
                .cloned(),
        );
    }
    ColoredMulticomplex::new(ambient, members)
}

/// Default degree bound for complements: the largest degree in the ambient.
pub fn ambient_degree(ambient: &RingSpec) -> u32 {
    ambient_top(ambient)
}

/// Whether every f-vector of an `a`-colored multicomplex in the ambient is
/// realized by a revlex one: either `n = 1` and `min(a, phi(x))` never
/// increases along the variable order, or `a = 1_n`.
pub fn revlex_characterizes(ambient: &RingSpec) -> Result<bool> {
    check_ambient(ambient)?;
    let n = ambient.n();
    let lambda = ambient.lambda();
    if !(lambda.iter().all(|&l| l >= 2) && lambda[n - 1] >= 3) {
        return Err(Error::Hypothesis(
            "partition sizes >= 2*1_n + delta_n".into(),
        ));
    }
    for t in 1..=n {
        let tail = (2..=lambda[t - 1])
            .map(|j| {
                ambient
                    .phi_of(Variable::new(t, j))
                    .expect("variable in ring")
            })
            .fold(Ext::Fin(0), |acc, x| match (acc, x) {
                (Ext::Fin(p), Ext::Fin(q)) => Ext::Fin(p.saturating_add(q)),
                _ => Ext::Inf,
            });
        if tail < ambient.a()[t - 1] {
            return Err(Error::Hypothesis(
                "sum of phi over X_t minus x[t,1] >= a_t for every t".into(),
            ));
        }
    }
    if n == 1 {
        let a = ambient.a()[0];
        let caps: Vec<Ext> = (1..=lambda[0])
            .map(|j| {
                ambient
                    .phi_of(Variable::new(1, j))
                    .expect("variable in ring")
                    .min(a)
            })
            .collect();
        return Ok(caps.windows(2).all(|w| w[0] >= w[1]));
    }
    Ok(ambient.a().iter().all(|&x| x == Ext::Fin(1)))
}

/// Parses a face list: one face per line, vertices `i:j` standing for
/// `x[i,j]`, separated by whitespace. Blank lines and `#` comments are
/// skipped; a line `{}` denotes the empty face. The result is the
/// multicomplex of squarefree monomials generated by the faces.
///
/// A face with `k` vertices is a degree-`k` monomial, so the multicomplex
/// f-vector is the simplicial one shifted by one: `f_k` counts faces of
/// dimension `k - 1`.
pub fn parse_face_list(ambient: &RingSpec, text: &str) -> Result<ColoredMulticomplex> {
    let mut gens = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() || line == "{}" {
            continue;
        }
        let mut factors = Vec::new();
        for tok in line.split_whitespace() {
            let (i, j) = tok.split_once(':').ok_or_else(|| {
                Error::parse(no + 1, format!("vertex {tok:?} is not of the form i:j"))
            })?;
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| Error::parse(no + 1, format!("bad vertex index in {tok:?}")))
            };
            factors.push((Variable::new(parse(i)?, parse(j)?), 1));
        }
        let m = ambient.monomial_from_factors(&factors)?;
        if m.exponents().iter().any(|&e| e > 1) {
            return Err(Error::parse(no + 1, "a face repeats a vertex"));
        }
        gens.push(m);
    }
    ColoredMulticomplex::generated_by(ambient, gens)
}

/// The face-list form of a squarefree multicomplex, one line per face.
pub fn to_face_list(m: &ColoredMulticomplex) -> Result<String> {
    let ring = m.ambient();
    let mut out = String::new();
    for x in m.members() {
        if x.exponents().iter().any(|&e| e > 1) {
            return Err(Error::InvalidSpec(format!(
                "{} is not squarefree",
                ring.format_monomial(x)
            )));
        }
        if x.is_one() {
            out.push_str("{}\n");
            continue;
        }
        let mut vs: Vec<Variable> = (0..ring.num_vars())
            .filter(|&s| x.exponents()[s] > 0)
            .map(|s| ring.variable(s))
            .collect();
        vs.sort_by_key(|v| (v.color, v.index));
        let toks: Vec<String> = vs
            .iter()
            .map(|v| format!("{}:{}", v.color, v.index))
            .collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    Ok(out)
}
