//! Fixpoint search for megaideals.
//!
//! Starting from the improper megaideals (and optional extra seeds), the
//! engine repeatedly applies every constructor that is known to send
//! megaideals to megaideals — stabilizers, brackets, centralizers, sums
//! and intersections — and collects the distinct subspaces it reaches.
//!
//! Every subspace remembers the first construction expression that
//! produced it. Rounds operate on a sorted snapshot of the member list
//! with a fixed phase order, so output and genesis expressions are fully
//! deterministic. Replaying a genesis expression on a larger model of the
//! same algebra decides whether the entry is an artifact of truncation.

use super::algebra::LieAlgebra;
use super::rational::Rational;
use super::subspace::Subspace;
use super::ExactAlgError;
use std::collections::BTreeMap;
use std::fmt;

/// Construction recipe for a discovered megaideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureExpr {
    Zero,
    Full,
    Seed(usize),
    Sum(Box<ClosureExpr>, Box<ClosureExpr>),
    Intersect(Box<ClosureExpr>, Box<ClosureExpr>),
    Bracket(Box<ClosureExpr>, Box<ClosureExpr>),
    /// `C_A(B) = {z in A : [z, B] = 0}`; `Centralizer(a, a)` is the center of `a`.
    Centralizer(Box<ClosureExpr>, Box<ClosureExpr>),
    /// `{z in i0 : [z, i1] ⊆ i2}`.
    Stabilizer(Box<ClosureExpr>, Box<ClosureExpr>, Box<ClosureExpr>),
}

impl fmt::Display for ClosureExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureExpr::Zero => write!(f, "0"),
            ClosureExpr::Full => write!(f, "g"),
            ClosureExpr::Seed(i) => write!(f, "seed{i}"),
            ClosureExpr::Sum(a, b) => write!(f, "({a} + {b})"),
            ClosureExpr::Intersect(a, b) => write!(f, "({a} & {b})"),
            ClosureExpr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
            ClosureExpr::Centralizer(a, b) => write!(f, "C({a}; {b})"),
            ClosureExpr::Stabilizer(a, b, c) => write!(f, "stab({a}; {b}; {c})"),
        }
    }
}

/// Evaluate a construction expression on an algebra.
pub fn replay(
    expr: &ClosureExpr,
    g: &LieAlgebra,
    seeds: &[Subspace],
) -> Result<Subspace, ExactAlgError> {
    match expr {
        ClosureExpr::Zero => Ok(Subspace::zero(g.dim())),
        ClosureExpr::Full => Ok(Subspace::full(g.dim())),
        ClosureExpr::Seed(i) => seeds
            .get(*i)
            .cloned()
            .ok_or(ExactAlgError::MissingSeed { index: *i }),
        ClosureExpr::Sum(a, b) => replay(a, g, seeds)?.sum(&replay(b, g, seeds)?),
        ClosureExpr::Intersect(a, b) => replay(a, g, seeds)?.intersect(&replay(b, g, seeds)?),
        ClosureExpr::Bracket(a, b) => {
            g.bracket_subspace(&replay(a, g, seeds)?, &replay(b, g, seeds)?)
        }
        ClosureExpr::Centralizer(a, b) => {
            g.centralizer(&replay(a, g, seeds)?, &replay(b, g, seeds)?)
        }
        ClosureExpr::Stabilizer(i0, i1, i2) => g.stabilizer(
            &replay(i0, g, seeds)?,
            &replay(i1, g, seeds)?,
            &replay(i2, g, seeds)?,
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    pub max_depth: usize,
    pub max_count: usize,
}

impl Default for ClosureOptions {
    fn default() -> ClosureOptions {
        ClosureOptions {
            max_depth: 6,
            max_count: 64,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FoundMegaideal {
    pub subspace: Subspace,
    pub expr: ClosureExpr,
    /// Round in which the subspace was first constructed; seeds are round 0.
    pub round: usize,
}

#[derive(Clone, Debug)]
pub struct ClosureResult {
    /// Distinct megaideals sorted by (dimension, lexicographic basis).
    pub found: Vec<FoundMegaideal>,
    /// False when a budget cut the search before the fixpoint.
    pub complete: bool,
}

impl ClosureResult {
    pub fn subspaces(&self) -> Vec<Subspace> {
        self.found.iter().map(|m| m.subspace.clone()).collect()
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.found.iter().any(|m| &m.subspace == s)
    }
}

struct Engine<'g> {
    g: &'g LieAlgebra,
    members: BTreeMap<Subspace, usize>,
    found: Vec<FoundMegaideal>,
    max_count: usize,
    overflow: bool,
}

impl<'g> Engine<'g> {
    fn insert(&mut self, subspace: Subspace, expr: ClosureExpr, round: usize) -> bool {
        if self.members.contains_key(&subspace) {
            return false;
        }
        if self.found.len() >= self.max_count {
            self.overflow = true;
            return false;
        }
        self.members.insert(subspace.clone(), self.found.len());
        self.found.push(FoundMegaideal {
            subspace,
            expr,
            round,
        });
        true
    }
}

/// Run the megaideal closure search. `{0}` and `g` are always seeded;
/// `extra_seeds` join them with `Seed(i)` expressions.
pub fn megaideal_closure(
    g: &LieAlgebra,
    extra_seeds: &[Subspace],
    opts: ClosureOptions,
) -> Result<ClosureResult, ExactAlgError> {
    let mut engine = Engine {
        g,
        members: BTreeMap::new(),
        found: Vec::new(),
        max_count: opts.max_count.max(2),
        overflow: false,
    };
    engine.insert(Subspace::zero(g.dim()), ClosureExpr::Zero, 0);
    engine.insert(Subspace::full(g.dim()), ClosureExpr::Full, 0);
    for (i, s) in extra_seeds.iter().enumerate() {
        if s.ambient() != g.dim() {
            return Err(ExactAlgError::DimensionMismatch {
                context: "closure seed",
                left: g.dim(),
                right: s.ambient(),
            });
        }
        engine.insert(s.clone(), ClosureExpr::Seed(i), 0);
    }

    let mut grew_in_last_round = false;
    let mut reached_fixpoint = false;
    for round in 1..=opts.max_depth {
        let grew = run_round(&mut engine, round)?;
        grew_in_last_round = grew;
        if engine.overflow {
            break;
        }
        if !grew {
            reached_fixpoint = true;
            break;
        }
    }

    let complete = reached_fixpoint && !engine.overflow && !grew_in_last_round;
    let mut found = engine.found;
    found.sort_by(|a, b| a.subspace.cmp(&b.subspace));
    Ok(ClosureResult { found, complete })
}

/// One round: apply every constructor to the round-start snapshot, in a
/// fixed phase order (stabilizer, bracket, centralizer, sum, intersect).
/// New members join the dedup set immediately but only become operands in
/// the next round.
fn run_round(engine: &mut Engine, round: usize) -> Result<bool, ExactAlgError> {
    let mut snapshot: Vec<(Subspace, ClosureExpr)> = engine
        .found
        .iter()
        .map(|m| (m.subspace.clone(), m.expr.clone()))
        .collect();
    snapshot.sort_by(|a, b| a.0.cmp(&b.0));
    let n = snapshot.len();
    let g = engine.g;
    let before = engine.found.len();

    // Pairwise bracket spans, shared between the stabilizer fast path and
    // the bracket phase. [u, v] and [v, u] span the same subspace.
    let mut bracket_table: Vec<Vec<Subspace>> = Vec::with_capacity(n);
    for a in 0..n {
        let mut row = Vec::with_capacity(n - a);
        for b in a..n {
            row.push(g.bracket_subspace(&snapshot[a].0, &snapshot[b].0)?);
        }
        bracket_table.push(row);
    }
    let bracket_of = |a: usize, b: usize| -> &Subspace {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        &bracket_table[lo][hi - lo]
    };

    // Phase 1: stabilizers over all ordered triples.
    for i0 in 0..n {
        if snapshot[i0].0.is_zero() {
            continue;
        }
        for i1 in 0..n {
            let pair_bracket = bracket_of(i0, i1);
            for i2 in 0..n {
                if engine.overflow {
                    return Ok(engine.found.len() > before);
                }
                // When [i0, i1] already lies in i2 the condition is vacuous.
                if snapshot[i2].0.contains(pair_bracket) {
                    continue;
                }
                let s = g.stabilizer(&snapshot[i0].0, &snapshot[i1].0, &snapshot[i2].0)?;
                let expr = ClosureExpr::Stabilizer(
                    Box::new(snapshot[i0].1.clone()),
                    Box::new(snapshot[i1].1.clone()),
                    Box::new(snapshot[i2].1.clone()),
                );
                engine.insert(s, expr, round);
            }
        }
    }

    // Phase 2: brackets (includes derived-series and lower-central steps).
    for a in 0..n {
        for b in a..n {
            let s = bracket_of(a, b).clone();
            let expr = ClosureExpr::Bracket(
                Box::new(snapshot[a].1.clone()),
                Box::new(snapshot[b].1.clone()),
            );
            engine.insert(s, expr, round);
        }
    }

    // Phase 3: centralizers over ordered pairs; (a, a) is the center of a.
    for a in 0..n {
        for b in 0..n {
            if engine.overflow {
                return Ok(engine.found.len() > before);
            }
            let s = g.centralizer(&snapshot[a].0, &snapshot[b].0)?;
            let expr = ClosureExpr::Centralizer(
                Box::new(snapshot[a].1.clone()),
                Box::new(snapshot[b].1.clone()),
            );
            engine.insert(s, expr, round);
        }
    }

    // Phase 4: sums.
    for a in 0..n {
        for b in a + 1..n {
            let s = snapshot[a].0.sum(&snapshot[b].0)?;
            let expr = ClosureExpr::Sum(
                Box::new(snapshot[a].1.clone()),
                Box::new(snapshot[b].1.clone()),
            );
            engine.insert(s, expr, round);
        }
    }

    // Phase 5: intersections.
    for a in 0..n {
        for b in a + 1..n {
            let s = snapshot[a].0.intersect(&snapshot[b].0)?;
            let expr = ClosureExpr::Intersect(
                Box::new(snapshot[a].1.clone()),
                Box::new(snapshot[b].1.clone()),
            );
            engine.insert(s, expr, round);
        }
    }

    Ok(engine.found.len() > before)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    /// The genesis expression reproduces the same subspace on the larger
    /// model (restricted to the embedded coordinates).
    Stable,
    /// The construction gives a different answer on the larger model: the
    /// entry reflects the truncation, not the algebra being modelled.
    TruncationSensitive,
}

/// Coordinate embedding of a smaller algebra into a bigger one by matching
/// basis labels. Fails unless the embedded brackets agree exactly.
pub fn label_embedding(
    small: &LieAlgebra,
    big: &LieAlgebra,
) -> Result<Vec<usize>, ExactAlgError> {
    let mut map = Vec::with_capacity(small.dim());
    for label in small.labels() {
        let pos = big
            .labels()
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| ExactAlgError::LabelNotEmbeddable {
                label: label.clone(),
            })?;
        map.push(pos);
    }
    // Sub-bracket consistency: [e_i, e_j] in the big algebra must be the
    // embedded image of the small bracket.
    for i in 0..small.dim() {
        for j in 0..small.dim() {
            let mut expected = vec![Rational::ZERO; big.dim()];
            for k in 0..small.dim() {
                expected[map[k]] = small.structure_constant(i, j, k);
            }
            for k in 0..big.dim() {
                if big.structure_constant(map[i], map[j], k) != expected[k] {
                    return Err(ExactAlgError::NotASubalgebra {
                        i: small.labels()[i].clone(),
                        j: small.labels()[j].clone(),
                    });
                }
            }
        }
    }
    Ok(map)
}

pub fn embed_subspace(s: &Subspace, embedding: &[usize], big_dim: usize) -> Subspace {
    let vectors: Vec<Vec<Rational>> = s
        .basis_rows()
        .map(|row| {
            let mut v = vec![Rational::ZERO; big_dim];
            for (i, &val) in row.iter().enumerate() {
                v[embedding[i]] = val;
            }
            v
        })
        .collect();
    Subspace::span_of_vectors(big_dim, &vectors)
}

/// Restrict a subspace of the big algebra to the embedded copy of the
/// small one, re-expressed in small coordinates.
fn restrict_subspace(
    s: &Subspace,
    embedding: &[usize],
    big_dim: usize,
    small_dim: usize,
) -> Result<Subspace, ExactAlgError> {
    let embedded_ambient = {
        let vecs: Vec<Vec<Rational>> = embedding
            .iter()
            .map(|&c| {
                let mut v = vec![Rational::ZERO; big_dim];
                v[c] = Rational::ONE;
                v
            })
            .collect();
        Subspace::span_of_vectors(big_dim, &vecs)
    };
    let inside = s.intersect(&embedded_ambient)?;
    let vectors: Vec<Vec<Rational>> = inside
        .basis_rows()
        .map(|row| embedding.iter().map(|&c| row[c]).collect())
        .collect();
    Ok(Subspace::span_of_vectors(small_dim, &vectors))
}

/// Classify each closure entry by replaying its genesis expression on a
/// larger model and comparing the restriction to the embedded coordinates.
pub fn stability_filter(
    result: &ClosureResult,
    small: &LieAlgebra,
    big: &LieAlgebra,
    big_seeds: &[Subspace],
) -> Result<Vec<(FoundMegaideal, Stability)>, ExactAlgError> {
    let embedding = label_embedding(small, big)?;
    let mut out = Vec::with_capacity(result.found.len());
    for entry in &result.found {
        let replayed = replay(&entry.expr, big, big_seeds)?;
        let restricted = restrict_subspace(&replayed, &embedding, big.dim(), small.dim())?;
        let verdict = if restricted == entry.subspace {
            Stability::Stable
        } else {
            Stability::TruncationSensitive
        };
        out.push((entry.clone(), verdict));
    }
    Ok(out)
}
