//! Signed-word reversing and the cube-condition completeness check.
//!
//! Right reversing repeatedly rewrites the leftmost negative-positive
//! adjacency of a signed word: `x⁻¹x` is deleted, and `x⁻¹y` becomes
//! `u·v⁻¹` where `x·u = y·v` is the relation headed by `x` and `y`.
//! On a complete presentation, a positive pair `u, v` represents the same
//! monoid element exactly when `u⁻¹v` reverses to the empty word, which
//! turns reversing into a decision procedure for the word problem and into
//! a calculator for least common multiples.

use crate::error::{Error, Result};
use crate::presentation::{Generator, Presentation, Sign, SignedWord, Word};

/// Step budget used by the CLI and tests unless overridden.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Terminal form of a reversal. For right reversing the signed word has been
/// brought to the shape `positive · negative⁻¹`; the `negative` component is
/// stored unreversed, as a positive word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReversalResult {
    pub positive: Word,
    pub negative: Word,
    pub steps: u64,
}

impl ReversalResult {
    pub fn is_trivial(&self) -> bool {
        self.positive.is_empty() && self.negative.is_empty()
    }
}

/// One rewrite in a reversal trace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReverseStep {
    /// `x⁻¹x` deleted at the given letter position.
    Cancel { position: usize, x: Generator },
    /// `x⁻¹y` replaced by `u·v⁻¹` at the given letter position.
    Complement {
        position: usize,
        x: Generator,
        y: Generator,
    },
}

fn right_reverse_impl(
    p: &Presentation,
    w: &SignedWord,
    budget: u64,
    mut trace: Option<&mut Vec<ReverseStep>>,
) -> Result<ReversalResult> {
    let mut letters: Vec<(Generator, Sign)> = w.letters().to_vec();
    let mut steps = 0u64;
    // The leftmost negative-positive adjacency can only move one slot to the
    // left of the previous rewrite site, so scanning resumes from there.
    let mut cursor = 0usize;
    loop {
        let mut site = None;
        let mut i = cursor;
        while i + 1 < letters.len() {
            if letters[i].1 == Sign::Neg && letters[i + 1].1 == Sign::Pos {
                site = Some(i);
                break;
            }
            i += 1;
        }
        let Some(i) = site else {
            break;
        };
        if steps >= budget {
            return Err(Error::BudgetExceeded { budget });
        }
        steps += 1;
        let x = letters[i].0;
        let y = letters[i + 1].0;
        if x == y {
            if let Some(t) = trace.as_deref_mut() {
                t.push(ReverseStep::Cancel { position: i, x });
            }
            letters.splice(i..i + 2, std::iter::empty());
        } else {
            let (u, v) = p
                .complement(x, y)
                .ok_or(Error::StuckReversal { x, y })?;
            if let Some(t) = trace.as_deref_mut() {
                t.push(ReverseStep::Complement { position: i, x, y });
            }
            let replacement: Vec<(Generator, Sign)> = u
                .letters()
                .iter()
                .map(|&g| (g, Sign::Pos))
                .chain(v.letters().iter().rev().map(|&g| (g, Sign::Neg)))
                .collect();
            letters.splice(i..i + 2, replacement);
        }
        cursor = i.saturating_sub(1);
    }
    // Terminal shape: positive letters then negative letters.
    let split = letters
        .iter()
        .position(|&(_, s)| s == Sign::Neg)
        .unwrap_or(letters.len());
    let positive: Word = letters[..split].iter().map(|&(g, _)| g).collect();
    let negative: Word = letters[split..].iter().rev().map(|&(g, _)| g).collect();
    Ok(ReversalResult {
        positive,
        negative,
        steps,
    })
}

/// Right-reverse a signed word to its terminal form `positive · negative⁻¹`,
/// always rewriting the leftmost negative-positive adjacency.
pub fn right_reverse(p: &Presentation, w: &SignedWord, budget: u64) -> Result<ReversalResult> {
    right_reverse_impl(p, w, budget, None)
}

/// As [`right_reverse`], also returning the rewrite trace.
pub fn right_reverse_traced(
    p: &Presentation,
    w: &SignedWord,
    budget: u64,
) -> Result<(ReversalResult, Vec<ReverseStep>)> {
    let mut trace = Vec::new();
    let result = right_reverse_impl(p, w, budget, Some(&mut trace))?;
    Ok((result, trace))
}

/// Left-reverse a signed word to the terminal form `negative⁻¹ · positive`.
///
/// Implemented through the mirror construction: reverse the letters, right
/// reverse over the reversed presentation, and mirror the outcome back.
pub fn left_reverse(p: &Presentation, w: &SignedWord, budget: u64) -> Result<ReversalResult> {
    let rev = crate::presentation::reverse_presentation(p);
    left_reverse_over(&rev, w, budget)
}

/// Left reversal when the reversed presentation is already at hand.
pub fn left_reverse_over(
    reversed: &Presentation,
    w: &SignedWord,
    budget: u64,
) -> Result<ReversalResult> {
    let mirrored = w.mirror();
    let rr = right_reverse(reversed, &mirrored, budget)?;
    Ok(ReversalResult {
        positive: rr.positive.reversed(),
        negative: rr.negative.reversed(),
        steps: rr.steps,
    })
}

/// Right complements of a pair of positive words: reverses `u⁻¹v` and
/// returns `(u\v, v\u)`, so that `u·(u\v) = v·(v\u)` is their right lcm.
pub fn complement_words(
    p: &Presentation,
    u: &Word,
    v: &Word,
    budget: u64,
) -> Result<(Word, Word)> {
    let w = SignedWord::inverse_of(u).concat(&SignedWord::positive(v));
    let r = right_reverse(p, &w, budget)?;
    Ok((r.positive, r.negative))
}

/// The cube condition for a triple of positive words: if `x⁻¹·z·z⁻¹·y`
/// reverses to `v'·u'⁻¹`, then `(x·v')⁻¹·(y·u')` must reverse to the empty
/// word. A stuck first reversal counts as vacuously satisfied; exceeding the
/// budget is reported as an error, never as `false`.
pub fn cube_condition(
    p: &Presentation,
    x: &Word,
    y: &Word,
    z: &Word,
    budget: u64,
) -> Result<bool> {
    let first = SignedWord::inverse_of(x)
        .concat(&SignedWord::positive(z))
        .concat(&SignedWord::inverse_of(z))
        .concat(&SignedWord::positive(y));
    let (v1, u1) = match right_reverse(p, &first, budget) {
        Ok(r) => (r.positive, r.negative),
        Err(Error::StuckReversal { .. }) => return Ok(true),
        Err(e) => return Err(e),
    };
    let second = SignedWord::inverse_of(&x.concat(&v1)).concat(&SignedWord::positive(&y.concat(&u1)));
    match right_reverse(p, &second, budget) {
        Ok(r) => Ok(r.is_trivial()),
        Err(Error::StuckReversal { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Outcome of a completeness check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompletenessReport {
    pub pass: bool,
    /// Least failing triple in the canonical generator order, if any.
    pub failing: Option<(Generator, Generator, Generator)>,
    pub triples_checked: usize,
}

/// Check completeness of a homogeneous complemented presentation by running
/// the cube condition over generator triples.
///
/// With `pruned` set, triples of the shapes `(x,x,y)` and `(x,y,x)` and the
/// reflections `(y,x,z)` of checked triples `(x,y,z)` are skipped; those
/// always satisfy the condition. The unpruned sweep checks every ordered
/// triple.
pub fn check_completeness(p: &Presentation, budget: u64, pruned: bool) -> Result<CompletenessReport> {
    p.check_homogeneous()?;
    p.check_complemented()?;
    let gens = p.generators();
    let mut triples_checked = 0usize;
    for &x in gens {
        for &y in gens {
            if pruned && x >= y {
                continue;
            }
            for &z in gens {
                if pruned && z == x {
                    continue;
                }
                triples_checked += 1;
                let ok = cube_condition(
                    p,
                    &Word::single(x),
                    &Word::single(y),
                    &Word::single(z),
                    budget,
                )?;
                if !ok {
                    return Ok(CompletenessReport {
                        pass: false,
                        failing: Some((x, y, z)),
                        triples_checked,
                    });
                }
            }
        }
    }
    Ok(CompletenessReport {
        pass: true,
        failing: None,
        triples_checked,
    })
}
