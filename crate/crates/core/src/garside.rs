//! The Garside layer: divisibility, lcm/gcd, the Garside element Δ and its
//! simples, greedy normal forms, word problems, and circles of elements.
//!
//! For the type (e,e,r) monoid the Garside element is Δ = Λ₂Λ₃⋯Λ_r with
//! Λ₂ = τ = t₁t₀ and Λ_p = s_p⋯s₃ τ s₃⋯s_p. Its divisors — the simples —
//! admit the closed description implemented by [`simples_closed`]: products
//! p₂p₃⋯p_r where each p_k ranges over the 2(k-1)+e divisors of Λ_k.
//! [`simples_oracle`] recovers the same set by brute-force divisor search,
//! with no input from the closed form.

use crate::error::{Error, Result};
use crate::presentation::{
    build_eer, reverse_presentation, Generator, Presentation, SignedWord, Word,
};
use crate::reversing::{right_reverse, ReversalResult};

/// The type (e,e,r) presentation packaged with its Garside data: the disk
/// element τ, the nested elements Λ₂,…,Λ_r, and Δ = Λ₂Λ₃⋯Λ_r.
#[derive(Clone, Debug)]
pub struct GarsideData {
    presentation: Presentation,
    e: u32,
    r: u32,
    tau: Word,
    lambdas: Vec<Word>,
    delta: Word,
}

impl GarsideData {
    pub fn new(e: u32, r: u32) -> Result<GarsideData> {
        let presentation = build_eer(e, r)?;
        let tau = Word::from(vec![
            Generator::circle(1, e),
            Generator::Circle(0),
        ]);
        let mut lambdas = Vec::with_capacity((r - 1) as usize);
        lambdas.push(tau.clone());
        for p in 3..=r {
            // Λ_p = s_p … s_3 τ s_3 … s_p
            let descending: Word = (3..=p).rev().map(Generator::Tail).collect();
            let ascending: Word = (3..=p).map(Generator::Tail).collect();
            lambdas.push(descending.concat(&tau).concat(&ascending));
        }
        let mut delta = Word::new();
        for l in &lambdas {
            delta = delta.concat(l);
        }
        Ok(GarsideData {
            presentation,
            e,
            r,
            tau,
            lambdas,
            delta,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// τ = t₁t₀, the common product around the circle.
    pub fn tau(&self) -> &Word {
        &self.tau
    }

    /// Λ_k for 2 ≤ k ≤ r; Λ_k has length 2(k-1).
    pub fn lambda(&self, k: u32) -> &Word {
        assert!((2..=self.r).contains(&k), "lambda index out of range");
        &self.lambdas[(k - 2) as usize]
    }

    pub fn lambdas(&self) -> &[Word] {
        &self.lambdas
    }

    /// The Garside element Δ = Λ₂Λ₃⋯Λ_r, of length r(r-1).
    pub fn delta(&self) -> &Word {
        &self.delta
    }
}

fn reverse_quotient(p: &Presentation, a: &Word, b: &Word, budget: u64) -> Result<ReversalResult> {
    let w = SignedWord::inverse_of(a).concat(&SignedWord::positive(b));
    right_reverse(p, &w, budget)
}

/// Does `a` left-divide `b`?
pub fn divides_left(p: &Presentation, a: &Word, b: &Word, budget: u64) -> Result<bool> {
    Ok(reverse_quotient(p, a, b, budget)?.negative.is_empty())
}

/// The residue `a\b` when `a` left-divides `b` (so `a·(a\b) = b`).
pub fn left_quotient(p: &Presentation, a: &Word, b: &Word, budget: u64) -> Result<Option<Word>> {
    let r = reverse_quotient(p, a, b, budget)?;
    Ok(r.negative.is_empty().then_some(r.positive))
}

/// Right lcm of two positive words together with its residues.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LcmResult {
    pub lcm: Word,
    /// `a\b`, the residue extending `a`.
    pub residue_a: Word,
    /// `b\a`, the residue extending `b`.
    pub residue_b: Word,
}

/// Right lcm `a ∨ b = a·(a\b) = b·(b\a)`, computed by reversing `a⁻¹b`.
pub fn lcm_right(p: &Presentation, a: &Word, b: &Word, budget: u64) -> Result<LcmResult> {
    let r = reverse_quotient(p, a, b, budget)?;
    Ok(LcmResult {
        lcm: a.concat(&r.positive),
        residue_a: r.positive,
        residue_b: r.negative,
    })
}

/// Left gcd `a ∧ b`, computed by greedy atom stripping: at each step the
/// least atom (canonical order) dividing both residuals is appended to the
/// gcd and stripped. The resulting word depends only on the monoid classes
/// of `a` and `b`, which makes it a canonical representative of the gcd.
pub fn gcd_left(p: &Presentation, a: &Word, b: &Word, budget: u64) -> Result<Word> {
    let mut g = Word::new();
    let mut x = a.clone();
    let mut y = b.clone();
    'strip: loop {
        for &atom in p.generators() {
            let atom_word = Word::single(atom);
            if let Some(x_rest) = left_quotient(p, &atom_word, &x, budget)? {
                if let Some(y_rest) = left_quotient(p, &atom_word, &y, budget)? {
                    g.push(atom);
                    x = x_rest;
                    y = y_rest;
                    continue 'strip;
                }
            }
        }
        return Ok(g);
    }
}

/// Monoid word problem: are `u` and `v` the same element?
pub fn equal_monoid(p: &Presentation, u: &Word, v: &Word, budget: u64) -> Result<bool> {
    if p.is_homogeneous() && u.len() != v.len() {
        return Ok(false);
    }
    Ok(reverse_quotient(p, u, v, budget)?.is_trivial())
}

/// Group word problem by the fraction method: reverse `u⁻¹v` fully to
/// `p·n⁻¹` and compare `p` with `n` in the monoid. Valid because the monoid
/// is Garside, hence a group of fractions.
pub fn equal_group(p: &Presentation, u: &SignedWord, v: &SignedWord, budget: u64) -> Result<bool> {
    let w = u.inverse().concat(v);
    let r = right_reverse(p, &w, budget)?;
    equal_monoid(p, &r.positive, &r.negative, budget)
}

/// Deduplicate `candidate` against `kept` up to monoid equality; returns
/// true when the candidate represents a new class.
fn is_new_class(p: &Presentation, kept: &[Word], candidate: &Word, budget: u64) -> Result<bool> {
    for w in kept {
        if equal_monoid(p, w, candidate, budget)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All left divisors of `b`, one canonical representative per class, sorted
/// by length then lexicographically. Breadth-first atom extension with
/// divisibility pruning: every divisor class of length L+1 arises from a
/// kept length-L representative extended by one atom.
pub fn left_divisors(p: &Presentation, b: &Word, budget: u64) -> Result<Vec<Word>> {
    let mut all: Vec<Word> = vec![Word::new()];
    let mut level: Vec<Word> = vec![Word::new()];
    while !level.is_empty() {
        let mut next: Vec<Word> = Vec::new();
        for w in &level {
            for &atom in p.generators() {
                let mut candidate = w.clone();
                candidate.push(atom);
                if !divides_left(p, &candidate, b, budget)? {
                    continue;
                }
                if is_new_class(p, &next, &candidate, budget)? {
                    next.push(candidate);
                }
            }
        }
        next.sort();
        all.extend(next.iter().cloned());
        level = next;
    }
    all.sort_by(|a, b| a.cmp_graded(b));
    Ok(all)
}

/// All right divisors of `b`, via the mirror: `d` right-divides `b` exactly
/// when the reversed word of `d` left-divides the reversed word of `b` over
/// the reversed presentation.
pub fn right_divisors(p: &Presentation, b: &Word, budget: u64) -> Result<Vec<Word>> {
    let rev = reverse_presentation(p);
    let divisors = left_divisors(&rev, &b.reversed(), budget)?;
    let mut out: Vec<Word> = divisors.iter().map(Word::reversed).collect();
    out.sort_by(|a, b| a.cmp_graded(b));
    Ok(out)
}

/// Result of a balance check on a positive word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalanceCheck {
    pub balanced: bool,
    pub left_divisors: Vec<Word>,
    pub right_divisors: Vec<Word>,
}

/// Compare the class sets of two divisor lists (both homogeneous-graded, so
/// matching is done within each length bucket).
fn same_classes(p: &Presentation, xs: &[Word], ys: &[Word], budget: u64) -> Result<bool> {
    if xs.len() != ys.len() {
        return Ok(false);
    }
    for x in xs {
        let mut found = false;
        for y in ys {
            if y.len() == x.len() && equal_monoid(p, x, y, budget)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Is `b` balanced, i.e. do its left and right divisor sets coincide?
pub fn is_balanced(p: &Presentation, b: &Word, budget: u64) -> Result<BalanceCheck> {
    let left = left_divisors(p, b, budget)?;
    let right = right_divisors(p, b, budget)?;
    let balanced = same_classes(p, &left, &right, budget)?;
    Ok(BalanceCheck {
        balanced,
        left_divisors: left,
        right_divisors: right,
    })
}

/// A simple in canonical tuple form: the component `p_k` is a canonical
/// divisor word of Λ_k, and `word` is the concatenation p₂p₃⋯p_r.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Simple {
    pub tuple: Vec<Word>,
    pub word: Word,
}

/// The canonical divisor words of Λ_k, in length order:
/// the empty word; the tail runs `s_k…s_j`; the words `s_k…s_3 t_i`;
/// `s_k…s_3 τ`; and `s_k…s_3 τ s_3…s_j`. For k = 2 the tail runs are empty
/// and the list is ε, t_0,…,t_{e-1}, τ.
pub fn lambda_divisors(e: u32, k: u32) -> Vec<Word> {
    let tau = Word::from(vec![Generator::circle(1, e), Generator::Circle(0)]);
    let descending: Word = (3..=k).rev().map(Generator::Tail).collect();
    let mut out = vec![Word::new()];
    // s_k … s_j for j = k down to 3: lengths 1, …, k-2.
    for j in (3..=k).rev() {
        out.push((j..=k).rev().map(Generator::Tail).collect());
    }
    // s_k … s_3 t_i: length k-1.
    for i in 0..e {
        let mut w = descending.clone();
        w.push(Generator::Circle(i));
        out.push(w);
    }
    // s_k … s_3 τ: length k.
    out.push(descending.concat(&tau));
    // s_k … s_3 τ s_3 … s_j for j = 3 to k: lengths k+1, …, 2k-2.
    for j in 3..=k {
        let ascending: Word = (3..=j).map(Generator::Tail).collect();
        out.push(descending.concat(&tau).concat(&ascending));
    }
    out
}

/// All simples from the closed description, sorted by word length then
/// lexicographically. The count is ∏_{k=2}^{r} (2(k-1)+e).
pub fn simples_closed(gd: &GarsideData) -> Vec<Simple> {
    let per_k: Vec<Vec<Word>> = (2..=gd.r).map(|k| lambda_divisors(gd.e, k)).collect();
    let mut simples = vec![Simple {
        tuple: Vec::new(),
        word: Word::new(),
    }];
    for divisors in &per_k {
        let mut extended = Vec::with_capacity(simples.len() * divisors.len());
        for simple in &simples {
            for d in divisors {
                let mut tuple = simple.tuple.clone();
                tuple.push(d.clone());
                extended.push(Simple {
                    word: simple.word.concat(d),
                    tuple,
                });
            }
        }
        simples = extended;
    }
    simples.sort_by(|a, b| a.word.cmp_graded(&b.word));
    simples
}

/// Brute-force enumeration of the left divisors of Δ, deduplicated by the
/// monoid word problem. Independent of the closed description of simples.
pub fn simples_oracle(gd: &GarsideData, budget: u64) -> Result<Vec<Word>> {
    left_divisors(&gd.presentation, &gd.delta, budget)
}

/// Greedy left normal form: `Δ^delta_power · factors`, with every factor a
/// simple other than ε and Δ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    pub delta_power: u32,
    pub factors: Vec<Word>,
}

impl NormalForm {
    /// The canonical word Δ^p · f₁ ⋯ f_m.
    pub fn to_word(&self, gd: &GarsideData) -> Word {
        let mut w = gd.delta().repeat(self.delta_power as usize);
        for f in &self.factors {
            w = w.concat(f);
        }
        w
    }
}

/// Compute the left-greedy normal form of a positive word: extract the
/// maximal power of Δ, then repeatedly split off Δ ∧ remainder. Two words
/// represent the same element exactly when their normal forms are identical.
pub fn normal_form(gd: &GarsideData, w: &Word, budget: u64) -> Result<NormalForm> {
    let p = &gd.presentation;
    let mut rest = w.clone();
    let mut delta_power = 0u32;
    while let Some(q) = left_quotient(p, &gd.delta, &rest, budget)? {
        rest = q;
        delta_power += 1;
    }
    let mut factors = Vec::new();
    while !rest.is_empty() {
        let head = gcd_left(p, &gd.delta, &rest, budget)?;
        // Every atom divides Δ, so the head of a nonempty word is nonempty.
        debug_assert!(!head.is_empty());
        rest = left_quotient(p, &head, &rest, budget)?
            .expect("gcd divides the remainder");
        factors.push(head);
    }
    Ok(NormalForm {
        delta_power,
        factors,
    })
}

/// The conjugation automorphism carried by Δ: `t_i -> t_{i+r}`, tails fixed,
/// satisfying Δ·x ≡ φ(x)·Δ.
pub fn phi(gd: &GarsideData, w: &Word) -> Word {
    w.letters()
        .iter()
        .map(|&g| match g {
            Generator::Circle(i) => Generator::circle(i as i64 + gd.r as i64, gd.e),
            tail => tail,
        })
        .collect()
}

/// Order of φ as a permutation of the generators (equals e / gcd(e, r)).
pub fn phi_order(gd: &GarsideData) -> u32 {
    let gens: Word = gd.presentation.generators().iter().copied().collect();
    let mut image = phi(gd, &gens);
    let mut order = 1;
    while image != gens {
        image = phi(gd, &image);
        order += 1;
    }
    order
}

/// Height grading: circle letters have height 2, `s_q` has height q, the
/// empty word has height 1. Every defining relation preserves it.
pub fn height(w: &Word) -> u32 {
    w.letters()
        .iter()
        .map(|g| match g {
            Generator::Circle(_) => 2,
            Generator::Tail(j) => *j,
        })
        .max()
        .unwrap_or(1)
}

/// Image of a word over the type-B generators `q_1, …, q_{r-1}` under the
/// embedding into the type (e,e,r) monoid: `q_1 -> τ`, `q_j -> s_{j+1}`.
pub fn psi_embed(gd: &GarsideData, w: &Word) -> Word {
    let mut out = Word::new();
    for &g in w.letters() {
        match g {
            Generator::Tail(1) => {
                for &l in gd.tau.letters() {
                    out.push(l);
                }
            }
            Generator::Tail(j) if j >= 2 && j < gd.r => out.push(Generator::Tail(j + 1)),
            other => panic!("psi_embed: {other:?} is not a type-B generator for r = {}", gd.r),
        }
    }
    out
}

/// A group model with decidable equality, enough to compute circles in.
pub trait GroupModel {
    type Elem: Clone;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Self::Elem;
    fn is_equal(&self, a: &Self::Elem, b: &Self::Elem) -> Result<bool>;
}

/// The braid group of a complete presentation, with elements represented by
/// signed words and equality decided by reversing.
pub struct BraidModel<'a> {
    pub presentation: &'a Presentation,
    pub budget: u64,
}

impl GroupModel for BraidModel<'_> {
    type Elem = SignedWord;

    fn mul(&self, a: &SignedWord, b: &SignedWord) -> SignedWord {
        a.concat(b)
    }

    fn inverse(&self, a: &SignedWord) -> SignedWord {
        a.inverse()
    }

    fn is_equal(&self, a: &SignedWord, b: &SignedWord) -> Result<bool> {
        equal_group(self.presentation, a, b, self.budget)
    }
}

/// A finite circle of elements: `members` lists g_0, …, g_{c-1} where c is
/// the minimal period, and `gamma` is the disk element g_1·g_0.
#[derive(Clone, Debug)]
pub struct Circle<E> {
    pub members: Vec<E>,
    pub gamma: E,
}

impl<E> Circle<E> {
    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    /// g_i for any integer index, through the detected period.
    pub fn g(&self, i: i64) -> &E {
        let c = self.members.len() as i64;
        &self.members[i.rem_euclid(c) as usize]
    }
}

/// Compute the circle of elements on `(g_1, g_0)`: g_i = g_{i-1}g_{i-2}g_{i-1}⁻¹,
/// equivalently g_i = γ·g_{i-1}⁻¹ with γ = g_1·g_0. Periodicity g_0 = g_c is
/// searched for c ≤ bound; one match makes the whole sequence c-periodic.
pub fn circle_make<M: GroupModel>(
    model: &M,
    g1: &M::Elem,
    g0: &M::Elem,
    bound: usize,
) -> Result<Circle<M::Elem>> {
    let gamma = model.mul(g1, g0);
    let mut sequence: Vec<M::Elem> = vec![g0.clone(), g1.clone()];
    for c in 1..=bound {
        if sequence.len() <= c {
            let prev = &sequence[sequence.len() - 1];
            let next = model.mul(&gamma, &model.inverse(prev));
            sequence.push(next);
        }
        if model.is_equal(&sequence[0], &sequence[c])? {
            sequence.truncate(c);
            return Ok(Circle {
                members: sequence,
                gamma,
            });
        }
    }
    Err(Error::NoPeriodFound { bound })
}

/// Cover relations of the simples lattice under left divisibility: in the
/// length grading, `a` is covered by `b` exactly when `a` divides `b` and
/// `b` is one letter longer.
pub fn lattice_covers(
    gd: &GarsideData,
    simples: &[Simple],
    budget: u64,
) -> Result<Vec<(usize, usize)>> {
    let p = &gd.presentation;
    let mut covers = Vec::new();
    for (i, a) in simples.iter().enumerate() {
        for (j, b) in simples.iter().enumerate() {
            if b.word.len() == a.word.len() + 1 && divides_left(p, &a.word, &b.word, budget)? {
                covers.push((i, j));
            }
        }
    }
    Ok(covers)
}

/// DOT rendering of the simples lattice: nodes labelled by canonical words,
/// edges the covering relations of left divisibility.
pub fn lattice_dot(gd: &GarsideData, budget: u64) -> Result<String> {
    let simples = simples_closed(gd);
    let covers = lattice_covers(gd, &simples, budget)?;
    let p = &gd.presentation;
    let mut out = String::from("digraph simples {\n  rankdir=BT;\n  node [shape=box];\n");
    for s in &simples {
        out.push_str(&format!("  \"{}\";\n", p.word_to_string(&s.word)));
    }
    for (i, j) in covers {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\";\n",
            p.word_to_string(&simples[i].word),
            p.word_to_string(&simples[j].word)
        ));
    }
    out.push_str("}\n");
    Ok(out)
}
