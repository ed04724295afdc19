//! The monomial-matrix model of the reflection group G(e,e,r).
//!
//! Elements are r×r monomial matrices whose nonzero entries are e-th roots
//! of unity with product 1. Roots of unity are kept symbolically as
//! exponents in Z/e, so every comparison is exact.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::garside::{simples_closed, GarsideData, GroupModel};
use crate::presentation::{build_eer, Generator, SignedWord, Word};

/// An r×r monomial matrix over the e-th roots of unity: row `i` has its
/// unique nonzero entry `ζ^exps[i]` in column `perm[i]`. The exponents of a
/// group element always sum to 0 mod e.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialMatrix {
    e: u32,
    perm: Vec<u32>,
    exps: Vec<u32>,
}

impl MonomialMatrix {
    pub fn identity(e: u32, r: u32) -> MonomialMatrix {
        MonomialMatrix {
            e,
            perm: (0..r).collect(),
            exps: vec![0; r as usize],
        }
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn size(&self) -> u32 {
        self.perm.len() as u32
    }

    /// Permutation in one-line notation, 0-based.
    pub fn perm(&self) -> &[u32] {
        &self.perm
    }

    /// Exponent of the nonzero entry in each row.
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| p == i as u32)
            && self.exps.iter().all(|&x| x == 0)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &MonomialMatrix) -> MonomialMatrix {
        debug_assert_eq!(self.e, rhs.e);
        debug_assert_eq!(self.perm.len(), rhs.perm.len());
        let n = self.perm.len();
        let mut perm = vec![0u32; n];
        let mut exps = vec![0u32; n];
        for i in 0..n {
            let k = self.perm[i] as usize;
            perm[i] = rhs.perm[k];
            exps[i] = (self.exps[i] + rhs.exps[k]) % self.e;
        }
        MonomialMatrix { e: self.e, perm, exps }
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let n = self.perm.len();
        let mut perm = vec![0u32; n];
        let mut exps = vec![0u32; n];
        for i in 0..n {
            let j = self.perm[i] as usize;
            perm[j] = i as u32;
            exps[j] = (self.e - self.exps[i]) % self.e;
        }
        MonomialMatrix { e: self.e, perm, exps }
    }

    /// Sum of the entry exponents mod e; zero on the whole group.
    pub fn exponent_sum(&self) -> u32 {
        self.exps.iter().sum::<u32>() % self.e
    }

    /// Dimension of the fixed space (the eigenvalue-1 eigenspace): each
    /// permutation cycle contributes 1 exactly when its entry exponents sum
    /// to 0 mod e.
    pub fn fixed_space_dim(&self) -> u32 {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut dim = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut sum = 0u32;
            let mut i = start;
            loop {
                seen[i] = true;
                sum = (sum + self.exps[i]) % self.e;
                i = self.perm[i] as usize;
                if i == start {
                    break;
                }
            }
            if sum == 0 {
                dim += 1;
            }
        }
        dim
    }
}

impl std::fmt::Display for MonomialMatrix {
    /// `perm=[σ(1),…,σ(r)] exp=[k_1,…,k_r] (mod e)`, 1-based.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let perm: Vec<String> = self.perm.iter().map(|&p| (p + 1).to_string()).collect();
        let exps: Vec<String> = self.exps.iter().map(|&x| x.to_string()).collect();
        write!(
            f,
            "perm=[{}] exp=[{}] (mod {})",
            perm.join(","),
            exps.join(","),
            self.e
        )
    }
}

/// Image of a generator: the circle generator `t_i` swaps the first two
/// coordinates with entries `ζ^{-i}`, `ζ^i`; the tail generator `s_j` is the
/// permutation matrix of the transposition (j-1, j).
pub fn generator_matrix(g: Generator, e: u32, r: u32) -> MonomialMatrix {
    let mut m = MonomialMatrix::identity(e, r);
    match g {
        Generator::Circle(i) => {
            assert!(i < e, "circle index out of range");
            assert!(r >= 2);
            m.perm[0] = 1;
            m.perm[1] = 0;
            m.exps[0] = (e - i % e) % e;
            m.exps[1] = i % e;
        }
        Generator::Tail(j) => {
            assert!((3..=r).contains(&j), "tail index out of range");
            let a = (j - 2) as usize;
            let b = (j - 1) as usize;
            m.perm[a] = b as u32;
            m.perm[b] = a as u32;
        }
    }
    m
}

/// Project a signed braid word to the reflection group. Generator images
/// are involutions, so inverse letters map to the same matrices.
pub fn project(w: &SignedWord, e: u32, r: u32) -> MonomialMatrix {
    w.letters().iter().fold(
        MonomialMatrix::identity(e, r),
        |acc, &(g, _)| acc.mul(&generator_matrix(g, e, r)),
    )
}

/// Project a positive word.
pub fn project_word(w: &Word, e: u32, r: u32) -> MonomialMatrix {
    project(&SignedWord::positive(w), e, r)
}

/// Enumerate G(e,e,r) as the closure of the generator matrices under
/// multiplication. `budget` bounds the number of elements explored; the
/// group order is e^(r-1)·r!.
pub fn enumerate_group(e: u32, r: u32, budget: u64) -> Result<Vec<MonomialMatrix>> {
    let p = build_eer(e, r)?;
    let gens: Vec<MonomialMatrix> = p
        .generators()
        .iter()
        .map(|&g| generator_matrix(g, e, r))
        .collect();
    let mut seen: HashSet<MonomialMatrix> = HashSet::new();
    let mut frontier = vec![MonomialMatrix::identity(e, r)];
    seen.insert(frontier[0].clone());
    while let Some(m) = frontier.pop() {
        for g in &gens {
            let next = m.mul(g);
            if seen.len() as u64 >= budget && !seen.contains(&next) {
                return Err(Error::BudgetExceeded { budget });
            }
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<MonomialMatrix> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Images of all simples in the reflection group, deduplicated and sorted.
pub fn simples_image(gd: &GarsideData) -> Vec<MonomialMatrix> {
    let mut out: Vec<MonomialMatrix> = simples_closed(gd)
        .iter()
        .map(|s| project_word(&s.word, gd.e(), gd.r()))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Outcome of checking the defining relations and generator squares among
/// the generator matrices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationReport {
    pub relations_checked: usize,
    pub squares_checked: usize,
    /// Human-readable description of the first failure, if any.
    pub failing: Option<String>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.failing.is_none()
    }
}

/// Verify that every defining relation of the type (e,e,r) presentation and
/// every generator square holds among the generator matrices.
pub fn verify_group_relations(e: u32, r: u32) -> Result<RelationReport> {
    let p = build_eer(e, r)?;
    let mut relations_checked = 0;
    for rel in p.relations() {
        let lhs = project_word(&rel.lhs, e, r);
        let rhs = project_word(&rel.rhs, e, r);
        if lhs != rhs {
            return Ok(RelationReport {
                relations_checked,
                squares_checked: 0,
                failing: Some(format!(
                    "{} = {}",
                    p.word_to_string(&rel.lhs),
                    p.word_to_string(&rel.rhs)
                )),
            });
        }
        relations_checked += 1;
    }
    let mut squares_checked = 0;
    for &g in p.generators() {
        let m = generator_matrix(g, e, r);
        if !m.mul(&m).is_identity() {
            return Ok(RelationReport {
                relations_checked,
                squares_checked,
                failing: Some(format!("square of {}", p.word_to_string(&Word::single(g)))),
            });
        }
        squares_checked += 1;
    }
    Ok(RelationReport {
        relations_checked,
        squares_checked,
        failing: None,
    })
}

/// The reflection group as a [`GroupModel`], for circle computations.
pub struct ReflectionModel {
    pub e: u32,
    pub r: u32,
}

impl GroupModel for ReflectionModel {
    type Elem = MonomialMatrix;

    fn mul(&self, a: &MonomialMatrix, b: &MonomialMatrix) -> MonomialMatrix {
        a.mul(b)
    }

    fn inverse(&self, a: &MonomialMatrix) -> MonomialMatrix {
        a.inverse()
    }

    fn is_equal(&self, a: &MonomialMatrix, b: &MonomialMatrix) -> Result<bool> {
        Ok(a == b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::circle_make;

    fn t(i: u32) -> Generator {
        Generator::Circle(i)
    }

    fn s(j: u32) -> Generator {
        Generator::Tail(j)
    }

    #[test]
    fn generator_matrices() {
        // t0 in (3,3): plain swap of the first two coordinates.
        let m = generator_matrix(t(0), 3, 3);
        assert_eq!(m.perm(), &[1, 0, 2]);
        assert_eq!(m.exps(), &[0, 0, 0]);
        // t1: swap with exponents (-1, 1) mod 3.
        let m = generator_matrix(t(1), 3, 3);
        assert_eq!(m.perm(), &[1, 0, 2]);
        assert_eq!(m.exps(), &[2, 1, 0]);
        // s3 is the transposition (2 3).
        let m = generator_matrix(s(3), 3, 3);
        assert_eq!(m.perm(), &[0, 2, 1]);
        assert_eq!(m.exps(), &[0, 0, 0]);
    }

    #[test]
    fn generators_are_reflections() {
        for (e, r) in [(1, 2), (2, 3), (3, 3), (4, 4)] {
            let p = build_eer(e, r).unwrap();
            for &g in p.generators() {
                let m = generator_matrix(g, e, r);
                assert!(m.mul(&m).is_identity(), "({e},{r}) {g:?} not an involution");
                assert_eq!(m.fixed_space_dim(), r - 1, "({e},{r}) {g:?} not a reflection");
                assert_eq!(m.exponent_sum(), 0);
            }
        }
    }

    #[test]
    fn projection_of_t0_t1_is_diagonal() {
        let p = build_eer(3, 3).unwrap();
        let w = p.parse_word("t0 t1").unwrap();
        let m = project_word(&w, 3, 3);
        assert_eq!(m.perm(), &[0, 1, 2]);
        assert_eq!(m.exps(), &[1, 2, 0]); // diag(ζ, ζ⁻¹, 1)
        assert_eq!(m.exponent_sum(), 0);
    }

    #[test]
    fn projection_is_a_homomorphism_on_relations() {
        for (e, r) in [(2, 3), (3, 3), (2, 4), (4, 4), (6, 4)] {
            let report = verify_group_relations(e, r).unwrap();
            assert!(report.all_hold(), "({e},{r}): {:?}", report.failing);
        }
        let report = verify_group_relations(3, 3).unwrap();
        assert_eq!(report.relations_checked, 6);
        assert_eq!(report.squares_checked, 4);
    }

    #[test]
    fn alternating_relation_holds_in_the_group() {
        for e in 1..=5u32 {
            let lhs = crate::presentation::alternating_product(t(1 % e), t(0), e as usize);
            let rhs = crate::presentation::alternating_product(t(0), t(1 % e), e as usize);
            assert_eq!(project_word(&lhs, e, 3), project_word(&rhs, e, 3));
        }
    }

    #[test]
    fn projection_of_empty_word() {
        assert!(project_word(&Word::new(), 3, 3).is_identity());
    }

    #[test]
    fn inverse_letters_project_to_the_same_matrix() {
        let p = build_eer(3, 3).unwrap();
        let pos = p.parse_signed_word("t1 s3").unwrap();
        let neg = p.parse_signed_word("-t1 -s3").unwrap();
        assert_eq!(project(&pos, 3, 3), project(&neg, 3, 3));
    }

    #[test]
    fn group_orders() {
        assert_eq!(enumerate_group(3, 3, 1 << 20).unwrap().len(), 54);
        assert_eq!(enumerate_group(2, 3, 1 << 20).unwrap().len(), 24);
        assert_eq!(enumerate_group(1, 2, 1 << 20).unwrap().len(), 2);
        for (e, r) in [(1, 3), (2, 2), (4, 3), (2, 4)] {
            let order = enumerate_group(e, r, 1 << 20).unwrap().len() as u64;
            let expected = (e as u64).pow(r - 1) * (1..=r as u64).product::<u64>();
            assert_eq!(order, expected, "({e},{r})");
        }
    }

    #[test]
    fn enumeration_budget() {
        match enumerate_group(3, 3, 10) {
            Err(Error::BudgetExceeded { budget: 10 }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn exponent_sum_invariant_on_the_group() {
        for m in enumerate_group(3, 3, 1 << 20).unwrap() {
            assert_eq!(m.exponent_sum(), 0);
        }
    }

    #[test]
    fn simples_image_sits_strictly_inside_g_3_3_3() {
        let gd = GarsideData::new(3, 3).unwrap();
        let image = simples_image(&gd);
        assert!(image.len() <= 35);
        assert!(image.len() < 54);
        let p = gd.presentation();
        let diag = project_word(&p.parse_word("t0 t1").unwrap(), 3, 3);
        assert!(!image.contains(&diag), "diag(ζ, ζ⁻¹, 1) must not be covered");
    }

    #[test]
    fn simples_image_covers_g_2_2_3() {
        let gd = GarsideData::new(2, 3).unwrap();
        let image = simples_image(&gd);
        assert_eq!(image.len(), 24);
        let group = enumerate_group(2, 3, 1 << 20).unwrap();
        assert_eq!(image, group);
    }

    #[test]
    fn circle_of_reflections_has_cardinality_e() {
        for e in 1..=6 {
            let model = ReflectionModel { e, r: 3 };
            let g1 = generator_matrix(t(1 % e), e, 3);
            let g0 = generator_matrix(t(0), e, 3);
            let circle = circle_make(&model, &g1, &g0, 4 * e as usize).unwrap();
            assert_eq!(circle.cardinality(), e as usize);
        }
    }

    #[test]
    fn display_format() {
        let m = generator_matrix(t(1), 3, 3);
        assert_eq!(m.to_string(), "perm=[2,1,3] exp=[2,1,0] (mod 3)");
    }
}
