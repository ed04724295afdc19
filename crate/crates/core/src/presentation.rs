//! Generator alphabets, relations, and complemented presentations.
//!
//! The central builder is [`build_eer`], which produces the circular
//! presentation of the braid monoid of type (e,e,r): `e` circle generators
//! `t_0, …, t_{e-1}` (indices mod `e`) together with tail generators
//! `s_3, …, s_r`, subject to
//!
//! * braid and commutation relations among the `s_j`,
//! * `s_3 t_i s_3 = t_i s_3 t_i` and `s_j t_i = t_i s_j` for `j ≥ 4`,
//! * the circle relations `t_i t_{i-1} = t_j t_{j-1}`.
//!
//! Every relation is homogeneous, and each unordered pair of distinct
//! generators heads exactly one relation, so each presentation carries a
//! total right-complement table that drives word reversing.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// An atom of a presentation: a circle generator `t_i` (index in Z/e) or a
/// tail generator indexed `j`. Classical families reuse the `Tail` kind for
/// their generators `a_k` / `q_k`.
///
/// The derived order is the canonical generator order used for all
/// deterministic tie-breaking: `t_0 < t_1 < … < t_{e-1} < s_3 < … < s_r`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    Circle(u32),
    Tail(u32),
}

impl Generator {
    /// Circle generator with the index reduced into `{0, …, e-1}`.
    pub fn circle(i: i64, e: u32) -> Generator {
        Generator::Circle(i.rem_euclid(e as i64) as u32)
    }

    pub fn index(&self) -> u32 {
        match self {
            Generator::Circle(i) | Generator::Tail(i) => *i,
        }
    }

    pub fn is_circle(&self) -> bool {
        matches!(self, Generator::Circle(_))
    }
}

/// A positive word: a finite sequence of generators. The empty word denotes
/// the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new() -> Word {
        Word(Vec::new())
    }

    pub fn single(g: Generator) -> Word {
        Word(vec![g])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Letters in reverse order.
    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(&self, n: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * n);
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Orders by length first, then lexicographically in the canonical
    /// generator order. Used for all sorted set-valued outputs.
    pub fn cmp_graded(&self, other: &Word) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Word {
        Word(v)
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<T: IntoIterator<Item = Generator>>(iter: T) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a Generator;
    type IntoIter = std::slice::Iter<'a, Generator>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Sign of a letter in a signed word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A word over the generators and their formal inverses.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct SignedWord(Vec<(Generator, Sign)>);

impl SignedWord {
    pub fn new() -> SignedWord {
        SignedWord(Vec::new())
    }

    /// The word itself, all letters positive.
    pub fn positive(w: &Word) -> SignedWord {
        SignedWord(w.letters().iter().map(|&g| (g, Sign::Pos)).collect())
    }

    /// The formal inverse of a positive word: letters reversed and negated.
    pub fn inverse_of(w: &Word) -> SignedWord {
        SignedWord(w.letters().iter().rev().map(|&g| (g, Sign::Neg)).collect())
    }

    pub fn letters(&self) -> &[(Generator, Sign)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Generator, sign: Sign) {
        self.0.push((g, sign));
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// Group inverse: reverse the letters and flip every sign.
    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(|&(g, s)| (g, s.flip())).collect())
    }

    /// Mirror image: reverse the letter order, keeping signs.
    pub fn mirror(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<(Generator, Sign)>> for SignedWord {
    fn from(v: Vec<(Generator, Sign)>) -> SignedWord {
        SignedWord(v)
    }
}

/// A defining relation `lhs = rhs`. All relations produced by the builders
/// are homogeneous and have distinct head letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Relation {
        Relation { lhs, rhs }
    }

    /// The relation with both sides letter-reversed.
    pub fn reversed(&self) -> Relation {
        Relation::new(self.lhs.reversed(), self.rhs.reversed())
    }

    /// Sides as an unordered pair, for set-level comparisons.
    pub fn unordered(&self) -> (Word, Word) {
        if self.lhs <= self.rhs {
            (self.lhs.clone(), self.rhs.clone())
        } else {
            (self.rhs.clone(), self.lhs.clone())
        }
    }
}

/// Which presentation family a [`Presentation`] belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    /// The circular presentation of type (e,e,r).
    Eer,
    /// Classical braid presentation on a path (type A).
    ClassicalA,
    /// Classical type-B presentation (one edge labelled 4).
    ClassicalB,
    /// The circle-only presentation of the dual monoid of I2(e).
    DualI2,
    /// A presentation obtained by reversing all relations of another one.
    Reversed,
}

impl Family {
    fn as_str(&self) -> &'static str {
        match self {
            Family::Eer => "eer",
            Family::ClassicalA => "classical-a",
            Family::ClassicalB => "classical-b",
            Family::DualI2 => "dual-i2",
            Family::Reversed => "reversed",
        }
    }
}

/// A complemented semigroup presentation: a generator alphabet, a relation
/// set, and the right-complement table derived from it.
///
/// `complement(x, y) = (u, v)` exactly when `x·u = y·v` is the unique
/// relation whose sides begin with `x` and `y`. Presentations are immutable
/// after construction and all operations on them are pure.
#[derive(Clone, Debug)]
pub struct Presentation {
    family: Family,
    e: Option<u32>,
    r: u32,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    complement: HashMap<(Generator, Generator), (Word, Word)>,
    homogeneous: bool,
    circle_token: char,
    tail_token: char,
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.e == other.e
            && self.r == other.r
            && self.generators == other.generators
            && self.relations == other.relations
    }
}

impl Eq for Presentation {}

impl Presentation {
    fn from_parts(
        family: Family,
        e: Option<u32>,
        r: u32,
        generators: Vec<Generator>,
        relations: Vec<Relation>,
        circle_token: char,
        tail_token: char,
    ) -> Result<Presentation> {
        let mut complement = HashMap::new();
        for rel in &relations {
            let (x, y) = match (rel.lhs.letters().first(), rel.rhs.letters().first()) {
                (Some(&x), Some(&y)) => (x, y),
                _ => {
                    return Err(Error::NotComplemented(
                        "relation with an empty side".into(),
                    ))
                }
            };
            if x == y {
                return Err(Error::NotComplemented(format!(
                    "relation with equal heads {x:?}"
                )));
            }
            let u = Word::from(rel.lhs.letters()[1..].to_vec());
            let v = Word::from(rel.rhs.letters()[1..].to_vec());
            if complement.insert((x, y), (u.clone(), v.clone())).is_some()
                || complement.insert((y, x), (v, u)).is_some()
            {
                return Err(Error::NotComplemented(format!(
                    "two relations share the head pair {x:?}, {y:?}"
                )));
            }
        }
        let homogeneous = relations.iter().all(|rel| rel.lhs.len() == rel.rhs.len());
        Ok(Presentation {
            family,
            e,
            r,
            generators,
            relations,
            complement,
            homogeneous,
            circle_token,
            tail_token,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn e(&self) -> Option<u32> {
        self.e
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Generators in canonical order.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Right complement of the head pair `(x, y)`: the pair `(u, v)` with
    /// `x·u = y·v` a defining relation, if there is one.
    pub fn complement(&self, x: Generator, y: Generator) -> Option<(&Word, &Word)> {
        self.complement.get(&(x, y)).map(|(u, v)| (u, v))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Scan the relation set for the complemented-presentation conditions:
    /// no relation with equal heads, at most one relation per head pair.
    pub fn check_complemented(&self) -> Result<()> {
        let mut seen: HashMap<(Generator, Generator), usize> = HashMap::new();
        for (idx, rel) in self.relations.iter().enumerate() {
            let x = rel.lhs.letters()[0];
            let y = rel.rhs.letters()[0];
            if x == y {
                return Err(Error::NotComplemented(format!(
                    "relation {idx} has equal heads"
                )));
            }
            let key = if x < y { (x, y) } else { (y, x) };
            if seen.insert(key, idx).is_some() {
                return Err(Error::NotComplemented(format!(
                    "head pair of relation {idx} repeats"
                )));
            }
        }
        Ok(())
    }

    /// First relation whose sides have different lengths, if any.
    pub fn check_homogeneous(&self) -> Result<()> {
        for rel in &self.relations {
            if rel.lhs.len() != rel.rhs.len() {
                return Err(Error::NotHomogeneous {
                    lhs: self.word_to_string(&rel.lhs),
                    rhs: self.word_to_string(&rel.rhs),
                });
            }
        }
        Ok(())
    }

    /// Letterwise circle rotation `t_i -> t_{i-1}`, fixing tail generators.
    pub fn apply_down(&self, w: &Word) -> Word {
        let e = self.e.expect("apply_down needs a circle presentation");
        w.letters()
            .iter()
            .map(|&g| match g {
                Generator::Circle(i) => Generator::circle(i as i64 - 1, e),
                tail => tail,
            })
            .collect()
    }

    /// Letterwise circle rotation `t_i -> t_{i+1}`, fixing tail generators.
    pub fn apply_up(&self, w: &Word) -> Word {
        let e = self.e.expect("apply_up needs a circle presentation");
        w.letters()
            .iter()
            .map(|&g| match g {
                Generator::Circle(i) => Generator::circle(i as i64 + 1, e),
                tail => tail,
            })
            .collect()
    }

    /// Folding onto a smaller circle: reduce circle indices mod `e1`, which
    /// must divide this presentation's `e`. Tail letters are unchanged.
    pub fn fold(&self, w: &Word, e1: u32) -> Result<Word> {
        let e2 = self
            .e
            .ok_or_else(|| Error::InvalidParameters("fold needs a circle presentation".into()))?;
        if e1 == 0 || e2 % e1 != 0 {
            return Err(Error::InvalidParameters(format!(
                "fold target {e1} does not divide {e2}"
            )));
        }
        Ok(w.letters()
            .iter()
            .map(|&g| match g {
                Generator::Circle(i) => Generator::Circle(i % e1),
                tail => tail,
            })
            .collect())
    }

    // ------------------------------------------------------------------
    // Text format.
    //
    // Words are whitespace-separated tokens; the empty word renders as `1`.
    // Signed words prefix inverse letters with `-`.
    // ------------------------------------------------------------------

    fn token(&self, g: Generator) -> String {
        match g {
            Generator::Circle(i) => format!("{}{}", self.circle_token, i),
            Generator::Tail(j) => format!("{}{}", self.tail_token, j),
        }
    }

    pub fn word_to_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&g| self.token(g))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn signed_to_string(&self, w: &SignedWord) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.letters()
            .iter()
            .map(|&(g, s)| match s {
                Sign::Pos => self.token(g),
                Sign::Neg => format!("-{}", self.token(g)),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn parse_letter(&self, token: &str) -> Result<Generator> {
        let mut chars = token.chars();
        let kind = chars
            .next()
            .ok_or_else(|| Error::Parse("empty token".into()))?;
        let idx: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad generator token `{token}`")))?;
        if kind == self.circle_token {
            let e = self
                .e
                .ok_or_else(|| Error::Parse(format!("no circle generators in `{token}`'s family")))?;
            if idx >= e {
                return Err(Error::Parse(format!(
                    "circle index {idx} out of range 0..{e}"
                )));
            }
            return Ok(Generator::Circle(idx));
        }
        if kind == self.tail_token {
            let (lo, hi) = match self.family {
                Family::ClassicalA | Family::ClassicalB => (1, self.r),
                _ => (3, self.r),
            };
            if idx < lo || idx > hi {
                return Err(Error::Parse(format!(
                    "generator index {idx} out of range {lo}..={hi} in `{token}`"
                )));
            }
            return Ok(Generator::Tail(idx));
        }
        Err(Error::Parse(format!("unknown generator token `{token}`")))
    }

    /// Parse a positive word; the single token `1` denotes the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens == ["1"] || tokens.is_empty() {
            return Ok(Word::new());
        }
        tokens
            .iter()
            .map(|t| {
                if let Some(rest) = t.strip_prefix('-') {
                    Err(Error::Parse(format!(
                        "inverse letter `-{rest}` not allowed in a positive word"
                    )))
                } else {
                    self.parse_letter(t)
                }
            })
            .collect()
    }

    /// Parse a signed word; a `-` prefix marks an inverse letter.
    pub fn parse_signed_word(&self, s: &str) -> Result<SignedWord> {
        let tokens: Vec<&str> = s.split_whitespace().collect();
        if tokens == ["1"] || tokens.is_empty() {
            return Ok(SignedWord::new());
        }
        let mut out = SignedWord::new();
        for t in tokens {
            match t.strip_prefix('-') {
                Some(rest) => out.push(self.parse_letter(rest)?, Sign::Neg),
                None => out.push(self.parse_letter(t)?, Sign::Pos),
            }
        }
        Ok(out)
    }

    /// Line-oriented text form: a `family e r` header, then one relation per
    /// line as `lhs = rhs`.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} {}\n",
            self.family.as_str(),
            self.e.map_or("-".into(), |e| e.to_string()),
            self.r
        );
        for rel in &self.relations {
            out.push_str(&format!(
                "{} = {}\n",
                self.word_to_string(&rel.lhs),
                self.word_to_string(&rel.rhs)
            ));
        }
        out
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The alternating product `⟨ab⟩^m = abab…` with `m` letters.
pub fn alternating_product(a: Generator, b: Generator, m: usize) -> Word {
    (0..m).map(|i| if i % 2 == 0 { a } else { b }).collect()
}

fn braid_relation(a: Generator, b: Generator) -> Relation {
    Relation::new(
        alternating_product(a, b, 3),
        alternating_product(b, a, 3),
    )
}

fn commutation(a: Generator, b: Generator) -> Relation {
    Relation::new(
        Word::from(vec![a, b]),
        Word::from(vec![b, a]),
    )
}

fn circle_relations(e: u32) -> Vec<Relation> {
    // One relation t_i t_{i-1} = t_j t_{j-1} per unordered pair {i, j}.
    let mut rels = Vec::new();
    for i in 0..e {
        for j in (i + 1)..e {
            rels.push(Relation::new(
                Word::from(vec![
                    Generator::Circle(i),
                    Generator::circle(i as i64 - 1, e),
                ]),
                Word::from(vec![
                    Generator::Circle(j),
                    Generator::circle(j as i64 - 1, e),
                ]),
            ));
        }
    }
    rels
}

/// The circular presentation of type (e,e,r).
pub fn build_eer(e: u32, r: u32) -> Result<Presentation> {
    if e < 1 {
        return Err(Error::InvalidParameters(
            "circle size e must be at least 1".into(),
        ));
    }
    if r < 2 {
        return Err(Error::InvalidParameters("rank r must be at least 2".into()));
    }
    let mut generators: Vec<Generator> = (0..e).map(Generator::Circle).collect();
    generators.extend((3..=r).map(Generator::Tail));

    let mut relations = Vec::new();
    // Braid relations between adjacent tail generators.
    for j in 3..r {
        relations.push(braid_relation(Generator::Tail(j), Generator::Tail(j + 1)));
    }
    // Commutations between distant tail generators.
    for j in 3..=r {
        for k in (j + 2)..=r {
            relations.push(commutation(Generator::Tail(j), Generator::Tail(k)));
        }
    }
    // s_3 t_i s_3 = t_i s_3 t_i.
    if r >= 3 {
        for i in 0..e {
            relations.push(braid_relation(Generator::Tail(3), Generator::Circle(i)));
        }
    }
    // s_j t_i = t_i s_j for j >= 4.
    for j in 4..=r {
        for i in 0..e {
            relations.push(commutation(Generator::Tail(j), Generator::Circle(i)));
        }
    }
    relations.extend(circle_relations(e));

    Presentation::from_parts(Family::Eer, Some(e), r, generators, relations, 't', 's')
}

/// The classical braid presentation on `n` generators `a_1, …, a_n`
/// (type A_n): adjacent pairs braid, distant pairs commute.
pub fn build_classical_a(n: u32) -> Result<Presentation> {
    if n < 1 {
        return Err(Error::InvalidParameters(
            "need at least one generator".into(),
        ));
    }
    let generators: Vec<Generator> = (1..=n).map(Generator::Tail).collect();
    let mut relations = Vec::new();
    for j in 1..n {
        relations.push(braid_relation(Generator::Tail(j), Generator::Tail(j + 1)));
    }
    for j in 1..=n {
        for k in (j + 2)..=n {
            relations.push(commutation(Generator::Tail(j), Generator::Tail(k)));
        }
    }
    Presentation::from_parts(Family::ClassicalA, None, n, generators, relations, 't', 'a')
}

/// The classical type-B presentation on `q_1, …, q_n`: the pair `(q_1, q_2)`
/// satisfies the length-four relation, other adjacent pairs braid, distant
/// pairs commute.
pub fn build_classical_b(n: u32) -> Result<Presentation> {
    if n < 1 {
        return Err(Error::InvalidParameters(
            "need at least one generator".into(),
        ));
    }
    let generators: Vec<Generator> = (1..=n).map(Generator::Tail).collect();
    let mut relations = Vec::new();
    if n >= 2 {
        relations.push(Relation::new(
            alternating_product(Generator::Tail(1), Generator::Tail(2), 4),
            alternating_product(Generator::Tail(2), Generator::Tail(1), 4),
        ));
    }
    for j in 2..n {
        relations.push(braid_relation(Generator::Tail(j), Generator::Tail(j + 1)));
    }
    for j in 1..=n {
        for k in (j + 2)..=n {
            relations.push(commutation(Generator::Tail(j), Generator::Tail(k)));
        }
    }
    Presentation::from_parts(Family::ClassicalB, None, n, generators, relations, 't', 'q')
}

/// The circle-only presentation `⟨a_i, i ∈ Z/e | a_i a_{i-1} = a_j a_{j-1}⟩`,
/// the dual-monoid presentation of the dihedral braid group of I2(e).
/// Structurally this is the type (e,e,2) presentation on its own circle.
pub fn build_dual_i2(e: u32) -> Result<Presentation> {
    if e < 1 {
        return Err(Error::InvalidParameters(
            "circle size e must be at least 1".into(),
        ));
    }
    let generators: Vec<Generator> = (0..e).map(Generator::Circle).collect();
    let relations = circle_relations(e);
    Presentation::from_parts(Family::DualI2, Some(e), 2, generators, relations, 'a', 's')
}

/// The Garside element of the classical type-B monoid on `n` generators,
/// in the form `(q_1 q_2 … q_n)^n`.
pub fn classical_b_delta(n: u32) -> Word {
    let pass: Word = (1..=n).map(Generator::Tail).collect();
    pass.repeat(n as usize)
}

/// The presentation with every relation's two sides letter-reversed, on the
/// same generators. Reversing twice restores the original.
pub fn reverse_presentation(p: &Presentation) -> Presentation {
    let relations: Vec<Relation> = p.relations.iter().map(Relation::reversed).collect();
    let family = match p.family {
        Family::Eer | Family::DualI2 => Family::Reversed,
        // Braid and commutation relations are palindromes up to swapping
        // sides, so the classical families are fixed by reversal.
        Family::ClassicalA => Family::ClassicalA,
        Family::ClassicalB => Family::ClassicalB,
        // The alphabet tokens identify which circle family we started from.
        Family::Reversed => {
            if p.circle_token == 'a' && p.r == 2 {
                Family::DualI2
            } else {
                Family::Eer
            }
        }
    };
    Presentation::from_parts(
        family,
        p.e,
        p.r,
        p.generators.clone(),
        relations,
        p.circle_token,
        p.tail_token,
    )
    .expect("reversal of a built-in presentation stays complemented")
}

#[cfg(test)]
pub(crate) fn presentation_for_tests(
    generators: Vec<Generator>,
    relations: Vec<Relation>,
) -> Result<Presentation> {
    Presentation::from_parts(Family::ClassicalA, None, 2, generators, relations, 't', 'a')
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u32) -> Generator {
        Generator::Circle(i)
    }

    fn s(j: u32) -> Generator {
        Generator::Tail(j)
    }

    fn w(letters: &[Generator]) -> Word {
        Word::from(letters.to_vec())
    }

    #[test]
    fn eer_3_3_has_four_generators_and_six_relations() {
        let p = build_eer(3, 3).unwrap();
        assert_eq!(p.generators(), &[t(0), t(1), t(2), s(3)]);
        assert_eq!(p.relations().len(), 6);
        let braids = p
            .relations()
            .iter()
            .filter(|rel| rel.lhs.len() == 3)
            .count();
        let circles = p
            .relations()
            .iter()
            .filter(|rel| rel.lhs.len() == 2)
            .count();
        assert_eq!((braids, circles), (3, 3));
    }

    #[test]
    fn eer_generator_count_is_e_plus_r_minus_2() {
        for e in 1..=6 {
            for r in 2..=5 {
                let p = build_eer(e, r).unwrap();
                assert_eq!(p.generators().len() as u32, e + r - 2);
            }
        }
    }

    #[test]
    fn eer_relation_count_matches_schema() {
        for e in 1..=6u32 {
            for r in 2..=5u32 {
                let p = build_eer(e, r).unwrap();
                let braid_s = r.saturating_sub(3);
                let m = r.saturating_sub(2); // tail generator count
                let commute_s = if m >= 2 { m * (m - 1) / 2 - braid_s } else { 0 };
                let r3 = if r >= 3 { e } else { 0 };
                let r4 = if r >= 4 { e * (r - 3) } else { 0 };
                let r5 = e * (e - 1) / 2;
                assert_eq!(
                    p.relations().len() as u32,
                    braid_s + commute_s + r3 + r4 + r5,
                    "relation count for ({e},{r})"
                );
            }
        }
    }

    #[test]
    fn eer_1_3_is_the_two_generator_braid_presentation() {
        let p = build_eer(1, 3).unwrap();
        assert_eq!(p.generators().len(), 2);
        assert_eq!(p.relations().len(), 1);
        // t0 s3 t0 = s3 t0 s3 up to side order.
        let rel = &p.relations()[0];
        let sides = rel.unordered();
        let braid = braid_relation(s(3), t(0)).unordered();
        assert_eq!(sides, braid);
        // Same shape as the classical presentation on two generators.
        let a = build_classical_a(2).unwrap();
        assert_eq!(a.relations().len(), 1);
    }

    #[test]
    fn eer_rejects_bad_parameters() {
        assert!(build_eer(0, 3).is_err());
        assert!(build_eer(3, 1).is_err());
        assert!(build_classical_a(0).is_err());
        assert!(build_classical_b(0).is_err());
    }

    #[test]
    fn complement_is_total_on_distinct_pairs() {
        for (e, r) in [(1, 2), (1, 4), (2, 3), (3, 3), (4, 5), (6, 4)] {
            let p = build_eer(e, r).unwrap();
            for &x in p.generators() {
                for &y in p.generators() {
                    if x != y {
                        assert!(p.complement(x, y).is_some(), "({e},{r}) missing {x:?},{y:?}");
                    } else {
                        assert!(p.complement(x, y).is_none());
                    }
                }
            }
            p.check_complemented().unwrap();
            p.check_homogeneous().unwrap();
        }
    }

    #[test]
    fn classical_a_relation_counts() {
        assert_eq!(build_classical_a(1).unwrap().relations().len(), 0);
        assert_eq!(build_classical_a(2).unwrap().relations().len(), 1);
        assert_eq!(build_classical_a(3).unwrap().relations().len(), 3);
        let p = build_classical_a(2).unwrap();
        let rel = &p.relations()[0];
        assert_eq!(rel.lhs, w(&[s(1), s(2), s(1)]));
        assert_eq!(rel.rhs, w(&[s(2), s(1), s(2)]));
    }

    #[test]
    fn classical_b_relation_shapes() {
        assert_eq!(build_classical_b(1).unwrap().relations().len(), 0);
        let b2 = build_classical_b(2).unwrap();
        assert_eq!(b2.relations().len(), 1);
        assert_eq!(b2.relations()[0].lhs, w(&[s(1), s(2), s(1), s(2)]));
        assert_eq!(b2.relations()[0].rhs, w(&[s(2), s(1), s(2), s(1)]));
        let b3 = build_classical_b(3).unwrap();
        assert_eq!(b3.relations().len(), 3);
        let lengths: Vec<usize> = b3.relations().iter().map(|rel| rel.lhs.len()).collect();
        assert!(lengths.contains(&4) && lengths.contains(&3) && lengths.contains(&2));
    }

    #[test]
    fn reverse_of_circle_relation() {
        let p = build_eer(3, 3).unwrap();
        let rev = reverse_presentation(&p);
        // t1 t0 = t0 t2 reverses to t0 t1 = t2 t0.
        let reversed = Relation::new(w(&[t(0), t(1)]), w(&[t(2), t(0)])).unordered();
        assert!(
            rev.relations().iter().any(|rel| rel.unordered() == reversed),
            "reversed circle relation not found"
        );
    }

    #[test]
    fn reverse_is_an_involution() {
        for p in [
            build_eer(3, 3).unwrap(),
            build_eer(2, 4).unwrap(),
            build_classical_a(3).unwrap(),
            build_classical_b(3).unwrap(),
            build_dual_i2(4).unwrap(),
        ] {
            assert_eq!(reverse_presentation(&reverse_presentation(&p)), p);
        }
    }

    #[test]
    fn reverse_matches_negated_index_relabelling() {
        // Relabelling t_i -> t_{-i} carries the relations of the reversed
        // presentation back onto the original relation set.
        for (e, r) in [(2, 3), (3, 3), (4, 4), (5, 2)] {
            let p = build_eer(e, r).unwrap();
            let rev = reverse_presentation(&p);
            let negate = |word: &Word| -> Word {
                word.letters()
                    .iter()
                    .map(|&g| match g {
                        Generator::Circle(i) => Generator::circle(-(i as i64), e),
                        tail => tail,
                    })
                    .collect()
            };
            let mut original: Vec<_> = p.relations().iter().map(Relation::unordered).collect();
            let mut mapped: Vec<_> = rev
                .relations()
                .iter()
                .map(|rel| Relation::new(negate(&rel.lhs), negate(&rel.rhs)).unordered())
                .collect();
            original.sort();
            mapped.sort();
            assert_eq!(original, mapped, "({e},{r})");
        }
    }

    #[test]
    fn down_and_up_shift_circle_letters() {
        let p = build_eer(3, 3).unwrap();
        let word = w(&[t(0), s(3), t(2)]);
        assert_eq!(p.apply_down(&word), w(&[t(2), s(3), t(1)]));
        assert_eq!(p.apply_up(&p.apply_down(&word)), word);
        // Applying down e times is the identity.
        let mut shifted = word.clone();
        for _ in 0..3 {
            shifted = p.apply_down(&shifted);
        }
        assert_eq!(shifted, word);
    }

    #[test]
    fn down_maps_relations_to_relations() {
        for (e, r) in [(2, 3), (3, 3), (3, 4), (6, 4)] {
            let p = build_eer(e, r).unwrap();
            let set: std::collections::HashSet<_> =
                p.relations().iter().map(Relation::unordered).collect();
            for rel in p.relations() {
                let image =
                    Relation::new(p.apply_down(&rel.lhs), p.apply_down(&rel.rhs)).unordered();
                assert!(set.contains(&image), "({e},{r}): image of relation missing");
            }
        }
    }

    #[test]
    fn fold_reduces_circle_indices() {
        let p = build_eer(4, 3).unwrap();
        let word = w(&[t(3), t(1), s(3)]);
        assert_eq!(p.fold(&word, 2).unwrap(), w(&[t(1), t(1), s(3)]));
        assert_eq!(p.fold(&word, 4).unwrap(), word);
        assert!(p.fold(&word, 3).is_err());
        assert!(p.fold(&word, 0).is_err());
        // Out-of-range input indices normalize at construction, then fold.
        let normalized = w(&[Generator::circle(4, 4), t(1), s(3)]);
        assert_eq!(p.fold(&normalized, 2).unwrap(), w(&[t(0), t(1), s(3)]));
    }

    #[test]
    fn alternating_products() {
        assert_eq!(alternating_product(t(1), t(0), 0), Word::new());
        assert_eq!(alternating_product(t(1), t(0), 3), w(&[t(1), t(0), t(1)]));
        assert_eq!(
            alternating_product(t(1), t(0), 4),
            w(&[t(1), t(0), t(1), t(0)])
        );
    }

    #[test]
    fn word_text_round_trip() {
        let p = build_eer(3, 4).unwrap();
        let word = w(&[t(0), s(3), t(2), s(4)]);
        let text = p.word_to_string(&word);
        assert_eq!(text, "t0 s3 t2 s4");
        assert_eq!(p.parse_word(&text).unwrap(), word);
        assert_eq!(p.word_to_string(&Word::new()), "1");
        assert_eq!(p.parse_word("1").unwrap(), Word::new());
        assert!(p.parse_word("t3").is_err());
        assert!(p.parse_word("s7").is_err());
        assert!(p.parse_word("x1").is_err());
        assert!(p.parse_word("-t0").is_err());
    }

    #[test]
    fn signed_word_text_round_trip() {
        let p = build_eer(3, 3).unwrap();
        let sw = p.parse_signed_word("-t0 s3 -s3").unwrap();
        assert_eq!(p.signed_to_string(&sw), "-t0 s3 -s3");
        assert_eq!(sw.inverse().inverse(), sw);
        assert_eq!(p.parse_signed_word("1").unwrap(), SignedWord::new());
    }

    #[test]
    fn presentation_text_header() {
        let p = build_eer(3, 3).unwrap();
        let text = p.to_text();
        assert_eq!(
            text,
            "eer 3 3\n\
             s3 t0 s3 = t0 s3 t0\n\
             s3 t1 s3 = t1 s3 t1\n\
             s3 t2 s3 = t2 s3 t2\n\
             t0 t2 = t1 t0\n\
             t0 t2 = t2 t1\n\
             t1 t0 = t2 t1\n"
        );
        let a = build_classical_a(2).unwrap();
        assert!(a.to_text().starts_with("classical-a - 2\n"));
        assert!(a.to_text().contains("a1 a2 a1 = a2 a1 a2"));
        let d = build_dual_i2(3).unwrap();
        assert!(d.to_text().starts_with("dual-i2 3 2\n"));
        assert!(d.to_text().contains("a1 a0 = a2 a1"));
    }

    #[test]
    fn rank_two_family_is_the_dihedral_circle() {
        // Chopping the whole tail off leaves the circle presentation.
        for e in 2..=5 {
            let eer = build_eer(e, 2).unwrap();
            let dual = build_dual_i2(e).unwrap();
            let a: Vec<_> = eer.relations().iter().map(Relation::unordered).collect();
            let b: Vec<_> = dual.relations().iter().map(Relation::unordered).collect();
            assert_eq!(a, b);
            assert_eq!(eer.generators(), dual.generators());
        }
    }

    #[test]
    fn negative_circle_indices_normalize() {
        assert_eq!(Generator::circle(-1, 3), t(2));
        assert_eq!(Generator::circle(-3, 3), t(0));
        assert_eq!(Generator::circle(7, 3), t(1));
    }

    #[test]
    fn construction_rejects_head_collisions() {
        // Two relations on the same head pair.
        let err = Presentation::from_parts(
            Family::ClassicalA,
            None,
            2,
            vec![s(1), s(2)],
            vec![
                commutation(s(1), s(2)),
                braid_relation(s(1), s(2)),
            ],
            't',
            'a',
        );
        assert!(matches!(err, Err(crate::error::Error::NotComplemented(_))));
        // A relation with equal heads.
        let err = Presentation::from_parts(
            Family::ClassicalA,
            None,
            2,
            vec![s(1), s(2)],
            vec![Relation::new(w(&[s(1), s(2)]), w(&[s(1), s(2), s(2)]))],
            't',
            'a',
        );
        assert!(matches!(err, Err(crate::error::Error::NotComplemented(_))));
    }

    #[test]
    fn homogeneity_check_reports_unequal_sides() {
        // Complemented but not homogeneous: a·b = b·a·a.
        let p = Presentation::from_parts(
            Family::ClassicalA,
            None,
            2,
            vec![s(1), s(2)],
            vec![Relation::new(w(&[s(1), s(2)]), w(&[s(2), s(1), s(1)]))],
            't',
            'a',
        )
        .unwrap();
        assert!(!p.is_homogeneous());
        assert!(matches!(
            p.check_homogeneous(),
            Err(crate::error::Error::NotHomogeneous { .. })
        ));
        p.check_complemented().unwrap();
    }
}
