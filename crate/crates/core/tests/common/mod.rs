//! Shared helpers for the integration suites: seeded word generation and
//! relation-rewriting utilities that serve as reversing-independent oracles.

#![allow(dead_code)]

use std::collections::HashSet;

use eer::presentation::{Generator, Presentation, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(p: &Presentation, len: usize, rng: &mut impl Rng) -> Word {
    let gens = p.generators();
    (0..len).map(|_| gens[rng.random_range(0..gens.len())]).collect()
}

/// Every word obtained from `w` by one application of a defining relation.
pub fn rewrite_neighbors(p: &Presentation, w: &Word) -> Vec<Word> {
    let letters = w.letters();
    let mut out = Vec::new();
    for rel in p.relations() {
        for (from, to) in [(&rel.lhs, &rel.rhs), (&rel.rhs, &rel.lhs)] {
            let f = from.letters();
            if f.len() > letters.len() {
                continue;
            }
            for start in 0..=(letters.len() - f.len()) {
                if &letters[start..start + f.len()] == f {
                    let mut v: Vec<Generator> = letters[..start].to_vec();
                    v.extend_from_slice(to.letters());
                    v.extend_from_slice(&letters[start + f.len()..]);
                    out.push(Word::from(v));
                }
            }
        }
    }
    out
}

/// A random walk through the rewriting graph: the result represents the
/// same monoid element as `w`.
pub fn scramble(p: &Presentation, w: &Word, steps: usize, rng: &mut impl Rng) -> Word {
    let mut cur = w.clone();
    for _ in 0..steps {
        let nbrs = rewrite_neighbors(p, &cur);
        if nbrs.is_empty() {
            break;
        }
        cur = nbrs[rng.random_range(0..nbrs.len())].clone();
    }
    cur
}

/// The full rewriting class of `w`: exhaustive closure under single
/// relation applications. For homogeneous presentations this is exactly the
/// set of words representing the same element, independently of reversing.
pub fn rewrite_class(p: &Presentation, w: &Word, cap: usize) -> HashSet<Word> {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut frontier = vec![w.clone()];
    seen.insert(w.clone());
    while let Some(cur) = frontier.pop() {
        assert!(seen.len() <= cap, "rewriting class exceeded cap {cap}");
        for next in rewrite_neighbors(p, &cur) {
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    seen
}

/// All words over the presentation's alphabet of length at most `max_len`,
/// in length-then-generation order.
pub fn all_words(p: &Presentation, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    let mut level = vec![Word::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &level {
            for &g in p.generators() {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Group items into classes with a pairwise predicate; returns a class id
/// per item. The predicate must be an equivalence on the item set.
pub fn classify<T, F>(items: &[T], mut same: F) -> Vec<usize>
where
    F: FnMut(&T, &T) -> bool,
{
    let mut classes: Vec<usize> = Vec::with_capacity(items.len());
    let mut reps: Vec<usize> = Vec::new();
    for (i, item) in items.iter().enumerate() {
        let mut found = None;
        for (cid, &r) in reps.iter().enumerate() {
            if same(item, &items[r]) {
                found = Some(cid);
                break;
            }
        }
        match found {
            Some(cid) => classes.push(cid),
            None => {
                classes.push(reps.len());
                reps.push(i);
            }
        }
    }
    classes
}

/// Do two class labellings induce the same partition?
pub fn partitions_equal(a: &[usize], b: &[usize]) -> bool {
    use std::collections::HashMap;
    assert_eq!(a.len(), b.len());
    let mut fwd: HashMap<usize, usize> = HashMap::new();
    let mut bwd: HashMap<usize, usize> = HashMap::new();
    for (&x, &y) in a.iter().zip(b) {
        if *fwd.entry(x).or_insert(y) != y {
            return false;
        }
        if *bwd.entry(y).or_insert(x) != x {
            return false;
        }
    }
    true
}
