//! Counting layer: Poincaré polynomials of simples, simple counts, zeta
//! polynomials by multichain counting, and the numerical duality statistics.
//!
//! Everything here is exact integer or rational arithmetic; no floating
//! point is used anywhere.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::error::Result;
use crate::garside::{divides_left, simples_closed, GarsideData};

/// An integer polynomial stored by ascending degree, with no trailing zero
/// coefficient; the zero polynomial is the empty sequence.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial(Vec<i64>);

impl IntPolynomial {
    pub fn from_coeffs(mut coeffs: Vec<i64>) -> IntPolynomial {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial(coeffs)
    }

    pub fn one() -> IntPolynomial {
        IntPolynomial(vec![1])
    }

    /// `q^lo + q^(lo+1) + … + q^hi`.
    pub fn ones(lo: usize, hi: usize) -> IntPolynomial {
        let mut coeffs = vec![0; hi + 1];
        for c in coeffs.iter_mut().take(hi + 1).skip(lo) {
            *c = 1;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.0.is_empty() || other.0.is_empty() {
            return IntPolynomial(Vec::new());
        }
        let mut coeffs = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn eval_bigint(&self, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for &c in self.0.iter().rev() {
            acc = acc * q + BigInt::from(c);
        }
        acc
    }

    pub fn eval_i64(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0i64, |acc, &c| acc * q + c)
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}q")?,
                (d, 1) => write!(f, "q^{d}")?,
                (d, c) => write!(f, "{c}q^{d}")?,
            }
        }
        Ok(())
    }
}

/// The length generating function of the divisors of Λ_k:
/// `1 + q + … + q^(k-2) + e·q^(k-1) + q^k + … + q^(2k-2)`.
fn eer_factor(e: u32, k: u32) -> IntPolynomial {
    let k = k as usize;
    let mut coeffs = vec![1i64; 2 * k - 1];
    coeffs[k - 1] = e as i64;
    IntPolynomial::from_coeffs(coeffs)
}

/// Closed form of the Poincaré polynomial of simples of type (e,e,r).
pub fn poincare_closed(e: u32, r: u32) -> IntPolynomial {
    assert!(e >= 1 && r >= 2, "parameters out of range");
    (2..=r).fold(IntPolynomial::one(), |acc, k| acc.mul(&eer_factor(e, k)))
}

/// Poincaré polynomial computed as a census: a histogram of the enumerated
/// simples by word length.
pub fn poincare_census(gd: &GarsideData) -> IntPolynomial {
    let rank = (gd.r() * (gd.r() - 1)) as usize;
    let mut coeffs = vec![0i64; rank + 1];
    for simple in simples_closed(gd) {
        coeffs[simple.word.len()] += 1;
    }
    IntPolynomial::from_coeffs(coeffs)
}

/// Number of simples: `∏_{k=2}^{r} (2(k-1) + e)`, equal to the double
/// factorial quotient `(2(r-1)+e)!! / e!!`.
pub fn simple_count(e: u32, r: u32) -> u128 {
    assert!(e >= 1 && r >= 2, "parameters out of range");
    (2..=r).map(|k| (2 * (k - 1) + e) as u128).product()
}

/// Classical Coxeter families whose Poincaré polynomials serve as
/// comparison references.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoxeterType {
    A,
    B,
    D,
}

/// Poincaré polynomial of the classical braid monoid of the given type.
pub fn classical_poincare(family: CoxeterType, n: u32) -> Result<IntPolynomial> {
    use crate::error::Error;
    if n < 1 {
        return Err(Error::InvalidParameters("rank must be at least 1".into()));
    }
    let n = n as usize;
    Ok(match family {
        CoxeterType::A => (1..=n).fold(IntPolynomial::one(), |acc, k| {
            acc.mul(&IntPolynomial::ones(0, k))
        }),
        CoxeterType::B => (1..=n).fold(IntPolynomial::one(), |acc, k| {
            acc.mul(&IntPolynomial::ones(0, 2 * k - 1))
        }),
        CoxeterType::D => {
            if n < 2 {
                return Err(Error::InvalidParameters(
                    "type D needs rank at least 2".into(),
                ));
            }
            (1..n).fold(IntPolynomial::ones(0, n - 1), |acc, k| {
                acc.mul(&IntPolynomial::ones(0, 2 * k - 1))
            })
        }
    })
}

/// The divisibility matrix of the simples lattice; entry `(i, j)` says
/// whether simple `i` left-divides simple `j`.
fn divisibility_matrix(gd: &GarsideData, budget: u64) -> Result<Vec<Vec<bool>>> {
    let simples = simples_closed(gd);
    let p = gd.presentation();
    let n = simples.len();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if simples[i].word.len() <= simples[j].word.len() {
                m[i][j] = divides_left(p, &simples[i].word, &simples[j].word, budget)?;
            }
        }
    }
    Ok(m)
}

/// Multichain counts in the lattice of simples: `Z(q)` is the number of
/// chains `a_1 ≼ a_2 ≼ … ≼ a_q` with `q` elements, and `Z(0) = 1` counts the
/// empty multichain. Returns `Z(0), …, Z(q_max)`.
pub fn zeta_values(gd: &GarsideData, q_max: u32, budget: u64) -> Result<Vec<BigInt>> {
    let m = divisibility_matrix(gd, budget)?;
    let n = m.len();
    let mut values = vec![BigInt::one()];
    if q_max == 0 {
        return Ok(values);
    }
    // ending[x] = number of multichains of the current length ending at x.
    let mut ending = vec![BigInt::one(); n];
    values.push(ending.iter().sum());
    for _ in 2..=q_max {
        let mut next = vec![BigInt::zero(); n];
        for (x, slot) in next.iter_mut().enumerate() {
            for y in 0..n {
                if m[y][x] {
                    *slot += &ending[y];
                }
            }
        }
        ending = next;
        values.push(ending.iter().sum());
    }
    Ok(values)
}

/// A polynomial with exact rational coefficients, ascending degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    pub fn eval_int(&self, q: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(q)))
    }

    /// Numerators over the least common denominator, ascending degree.
    pub fn common_denominator(&self) -> (Vec<BigInt>, BigInt) {
        let mut denom = BigInt::one();
        for c in &self.coeffs {
            denom = denom.lcm(c.denom());
        }
        let numerators = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        (numerators, denom)
    }

    fn mul_linear(&mut self, constant: &BigRational) {
        // self := self * (q + constant)
        let mut next = vec![BigRational::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            next[i + 1] += c;
            next[i] += c * constant;
        }
        self.coeffs = next;
    }

    fn scale(&mut self, factor: &BigRational) {
        for c in self.coeffs.iter_mut() {
            *c *= factor;
        }
    }

    fn add_scaled(&mut self, other: &RationalPolynomial, factor: &BigRational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs
                .resize(other.coeffs.len(), BigRational::zero());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += c * factor;
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// The unique polynomial of degree ≤ n through `(i, values[i])` for
    /// i = 0..=n, by Newton forward differences.
    pub fn interpolate(values: &[BigInt]) -> RationalPolynomial {
        let mut diffs: Vec<BigInt> = values.to_vec();
        let mut result = RationalPolynomial { coeffs: Vec::new() };
        // basis = binomial(q, k), built incrementally.
        let mut basis = RationalPolynomial {
            coeffs: vec![BigRational::one()],
        };
        for k in 0..values.len() {
            let lead = BigRational::from_integer(diffs[0].clone());
            result.add_scaled(&basis, &lead);
            // forward difference
            for i in 0..diffs.len() - 1 {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
            diffs.pop();
            if diffs.is_empty() {
                break;
            }
            // basis *= (q - k) / (k + 1)
            basis.mul_linear(&BigRational::from_integer(BigInt::from(-(k as i64))));
            basis.scale(&BigRational::new(BigInt::one(), BigInt::from(k as i64 + 1)));
        }
        result.trim();
        result
    }
}

impl std::fmt::Display for RationalPolynomial {
    /// Renders over the common denominator, descending degree, e.g.
    /// `(11q^6 + … + 1444q + 240)/240`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let (numerators, denom) = self.common_denominator();
        let mut body = String::new();
        for (deg, c) in numerators.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !body.is_empty() {
                body.push_str(if c.is_negative() { " - " } else { " + " });
            } else if c.is_negative() {
                body.push('-');
            }
            let a = c.abs();
            match deg {
                0 => body.push_str(&a.to_string()),
                1 if a.is_one() => body.push('q'),
                1 => body.push_str(&format!("{a}q")),
                d if a.is_one() => body.push_str(&format!("q^{d}")),
                d => body.push_str(&format!("{a}q^{d}")),
            }
        }
        if body.is_empty() {
            body.push('0');
        }
        if denom.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{denom}")
        }
    }
}

/// Zeta polynomial of the simples lattice: the polynomial of degree r(r-1)
/// interpolating the multichain counts at q = 0, …, r(r-1).
pub fn zeta_polynomial(gd: &GarsideData, budget: u64) -> Result<RationalPolynomial> {
    let rank = gd.r() * (gd.r() - 1);
    let values = zeta_values(gd, rank, budget)?;
    Ok(RationalPolynomial::interpolate(&values))
}

/// The three numerical statistics of the duality table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DualityStats {
    /// e + r - 2.
    pub atom_count: u32,
    /// r(r - 1).
    pub delta_length: u32,
    /// e / gcd(e, r).
    pub conj_order: u32,
}

pub fn duality_stats(e: u32, r: u32) -> DualityStats {
    assert!(e >= 1 && r >= 2, "parameters out of range");
    DualityStats {
        atom_count: e + r - 2,
        delta_length: r * (r - 1),
        conj_order: e / e.gcd(&r),
    }
}
