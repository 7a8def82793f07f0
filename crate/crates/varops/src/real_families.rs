//! Rule-defined variadic functions over floating-point reals, with sampled
//! law checks and per-family generators of equal-valued word pairs.
//!
//! Floats admit no exhaustive kernel search, so the preassociativity check
//! works from constructed pairs: each family that supports it knows how to
//! produce pairs (y, y′) with equal value. Generators draw letters from a
//! dyadic grid (multiples of 1/64), which keeps sums, sums of squares, and
//! sums of |·|^p exact in f64, so a permuted or mass-transferred word has
//! bit-identical value and the tolerance is spent only on the contexts.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::{property, CheckReport, Witness};

/// Value of a real family: a float, or ε for the empty word of an
/// ε-standard family. ε is a distinct marker, never a float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RealValue {
    Epsilon,
    Num(f64),
}

impl RealValue {
    pub fn as_num(&self) -> Option<f64> {
        match self {
            RealValue::Epsilon => None,
            RealValue::Num(x) => Some(*x),
        }
    }
}

/// The concrete real-valued variadic families reproduced by this crate.
#[derive(Debug, Clone, PartialEq)]
pub enum RealFamily {
    /// Fₙ(x) = Σxᵢ
    Sum,
    /// Fₙ(x) = c·Σxᵢ — preassociative but not associative for c ≠ 1
    ScaledSum { factor: f64 },
    /// Fₙ(x) = (Σ|xᵢ|^p)^(1/p), p ≥ 1 — associative, F₁ = |·| ≠ id
    PNorm { p: f64 },
    /// The p-norm with its unary part overwritten by the identity
    PNormIdentityUnary { p: f64 },
    /// Fₙ(x) = exp(Σxᵢ) — preassociative, factors as exp ∘ sum
    ExpSum,
    /// Fₙ(x) = Σxᵢ² — preassociative, factors as (·)² ∘ 2-norm
    SquaredDistance,
    /// F(x) = |x|, the length function — standard, not ε-standard
    Length,
    /// Hₙ(x) = max(Σxᵢ, 0) — not preassociative
    ReluSum,
    /// Fₙ(x) = |Σxᵢ| — not preassociative
    AbsSum,
    /// Hₙ(x) = Σ exp(n·xᵢ), an arity-indexed right composition — not
    /// preassociative
    ExpArityIndexed,
}

impl RealFamily {
    pub fn from_name(name: &str, params: &std::collections::BTreeMap<String, f64>) -> Result<Self> {
        let get = |key: &str, default: Option<f64>| -> Result<f64> {
            params
                .get(key)
                .copied()
                .or(default)
                .ok_or_else(|| Error::InvalidParameter(format!("missing parameter `{key}`")))
        };
        let family = match name {
            "sum" => RealFamily::Sum,
            "scaled-sum" => RealFamily::ScaledSum {
                factor: get("c", Some(2.0))?,
            },
            "pnorm" => RealFamily::PNorm { p: get("p", Some(2.0))? },
            "pnorm-id" => RealFamily::PNormIdentityUnary { p: get("p", Some(2.0))? },
            "exp-sum" => RealFamily::ExpSum,
            "squared-distance" => RealFamily::SquaredDistance,
            "length" => RealFamily::Length,
            "relu-sum" => RealFamily::ReluSum,
            "abs-sum" => RealFamily::AbsSum,
            "exp-arity-indexed" => RealFamily::ExpArityIndexed,
            other => return Err(Error::UnknownFamily(other.to_string())),
        };
        family.validate()?;
        Ok(family)
    }

    pub fn name(&self) -> &'static str {
        match self {
            RealFamily::Sum => "sum",
            RealFamily::ScaledSum { .. } => "scaled-sum",
            RealFamily::PNorm { .. } => "pnorm",
            RealFamily::PNormIdentityUnary { .. } => "pnorm-id",
            RealFamily::ExpSum => "exp-sum",
            RealFamily::SquaredDistance => "squared-distance",
            RealFamily::Length => "length",
            RealFamily::ReluSum => "relu-sum",
            RealFamily::AbsSum => "abs-sum",
            RealFamily::ExpArityIndexed => "exp-arity-indexed",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RealFamily::PNorm { p } | RealFamily::PNormIdentityUnary { p }
                if !p.is_finite() || *p < 1.0 =>
            {
                Err(Error::InvalidParameter(format!(
                    "p-norm exponent must satisfy p ≥ 1, got {p}"
                )))
            }
            RealFamily::ScaledSum { factor } if !factor.is_finite() => {
                Err(Error::InvalidParameter(format!(
                    "scale factor must be finite, got {factor}"
                )))
            }
            _ => Ok(()),
        }
    }

    /// ε-standard families map the empty word to ε; the length function maps
    /// it to 0 instead.
    pub fn is_epsilon_standard(&self) -> bool {
        !matches!(self, RealFamily::Length)
    }

    pub fn evaluate(&self, word: &[f64]) -> Result<RealValue> {
        self.validate()?;
        for &x in word {
            if !x.is_finite() {
                return Err(Error::NonFiniteInput(x));
            }
        }
        if word.is_empty() {
            return Ok(if self.is_epsilon_standard() {
                RealValue::Epsilon
            } else {
                RealValue::Num(0.0)
            });
        }
        let sum: f64 = word.iter().sum();
        let value = match self {
            RealFamily::Sum => sum,
            RealFamily::ScaledSum { factor } => factor * sum,
            RealFamily::PNorm { p } => p_norm(word, *p),
            RealFamily::PNormIdentityUnary { p } => {
                if word.len() == 1 {
                    word[0]
                } else {
                    p_norm(word, *p)
                }
            }
            RealFamily::ExpSum => sum.exp(),
            RealFamily::SquaredDistance => word.iter().map(|x| x * x).sum(),
            RealFamily::Length => word.len() as f64,
            RealFamily::ReluSum => sum.max(0.0),
            RealFamily::AbsSum => sum.abs(),
            RealFamily::ExpArityIndexed => {
                let n = word.len() as f64;
                word.iter().map(|x| (n * x).exp()).sum()
            }
        };
        Ok(RealValue::Num(value))
    }

    /// Letters are sampled from this symmetric interval; the arity-indexed
    /// exponential uses a narrow one so permuted sums stay within a few ULP.
    fn letter_bound(&self) -> i64 {
        match self {
            RealFamily::ExpArityIndexed => 2 * 64,
            _ => 10 * 64,
        }
    }

    pub fn has_witness_generator(&self) -> bool {
        !matches!(self, RealFamily::PNormIdentityUnary { .. })
    }

    /// Produce one pair (y, y′) with equal family value. The first pair of
    /// the families that violate preassociativity is pinned to the worked
    /// counterexample so the sampled check fails deterministically.
    fn witness_pair(&self, rng: &mut ChaCha8Rng, index: usize) -> (Vec<f64>, Vec<f64>) {
        match self {
            RealFamily::ReluSum => {
                if index == 0 {
                    return (vec![-1.0, -2.0], vec![-1.0, 1.0]);
                }
                if index % 3 == 1 {
                    // two words with different nonpositive sums: both values 0
                    let y = nonpositive_dyadic_word(rng);
                    let y2 = nonpositive_dyadic_word(rng);
                    return (y, y2);
                }
                equal_sum_pair(rng, self.letter_bound())
            }
            RealFamily::AbsSum => {
                if index == 0 {
                    return (vec![1.0], vec![-1.0]);
                }
                let y = dyadic_word(rng, 1, 4, self.letter_bound());
                if index % 2 == 1 {
                    let y2 = y.iter().map(|x| -x).collect();
                    (y, y2)
                } else {
                    let mut y2 = y.clone();
                    y2.shuffle(rng);
                    (y, y2)
                }
            }
            RealFamily::ExpArityIndexed => {
                if index == 0 {
                    return (
                        vec![0.0, std::f64::consts::LN_2],
                        vec![0.5 * 3f64.ln(), 0.5 * std::f64::consts::LN_2],
                    );
                }
                let y = dyadic_word(rng, 2, 4, self.letter_bound());
                let mut y2 = y.clone();
                y2.shuffle(rng);
                (y, y2)
            }
            RealFamily::SquaredDistance
            | RealFamily::PNorm { .. }
            | RealFamily::PNormIdentityUnary { .. } => {
                // permutations and sign flips preserve Σ|xᵢ|^p exactly
                let y = dyadic_word(rng, 2, 4, self.letter_bound());
                let mut y2 = y.clone();
                y2.shuffle(rng);
                for x in y2.iter_mut() {
                    if rng.random_bool(0.5) {
                        *x = -*x;
                    }
                }
                (y, y2)
            }
            RealFamily::Length => {
                let len = rng.random_range(1..=4);
                let y = dyadic_word_of_len(rng, len, self.letter_bound());
                let y2 = dyadic_word_of_len(rng, len, self.letter_bound());
                (y, y2)
            }
            _ => equal_sum_pair(rng, self.letter_bound()),
        }
    }
}

fn p_norm(word: &[f64], p: f64) -> f64 {
    word.iter()
        .map(|x| x.abs().powf(p))
        .sum::<f64>()
        .powf(1.0 / p)
}

fn dyadic(rng: &mut ChaCha8Rng, bound: i64) -> f64 {
    rng.random_range(-bound..=bound) as f64 / 64.0
}

fn dyadic_word_of_len(rng: &mut ChaCha8Rng, len: usize, bound: i64) -> Vec<f64> {
    (0..len).map(|_| dyadic(rng, bound)).collect()
}

fn dyadic_word(rng: &mut ChaCha8Rng, min: usize, max: usize, bound: i64) -> Vec<f64> {
    let len = rng.random_range(min..=max);
    dyadic_word_of_len(rng, len, bound)
}

fn nonpositive_dyadic_word(rng: &mut ChaCha8Rng) -> Vec<f64> {
    let len = rng.random_range(1..=4);
    (0..len)
        .map(|_| rng.random_range(-640..=0) as f64 / 64.0)
        .collect()
}

/// A pair with exactly equal sums, by permutation or by moving mass between
/// two positions. All letters are dyadic, so the equality is bit-exact.
fn equal_sum_pair(rng: &mut ChaCha8Rng, bound: i64) -> (Vec<f64>, Vec<f64>) {
    let y = dyadic_word(rng, 2, 4, bound);
    let mut y2 = y.clone();
    if rng.random_bool(0.5) {
        y2.shuffle(rng);
    } else {
        let i = rng.random_range(0..y2.len());
        let mut j = rng.random_range(0..y2.len());
        if j == i {
            j = (j + 1) % y2.len();
        }
        let delta = dyadic(rng, bound / 2);
        y2[i] += delta;
        y2[j] -= delta;
    }
    (y, y2)
}

fn require_num(v: RealValue) -> f64 {
    v.as_num().expect("nonempty word evaluates to a number")
}

/// Deviation within tolerance; false for NaN, so a poisoned computation
/// counts as a violation rather than a pass.
fn within(delta: f64, tol: f64) -> bool {
    delta.abs() <= tol
}

/// Sample `count` decompositions xyz and test |F(xyz) − F(xF(y)z)| ≤ tol,
/// collapsing to F(xz) when y = ε. Requires an ε-standard family.
pub fn check_associativity_identity(
    family: &RealFamily,
    seed: u64,
    count: usize,
    tol: f64,
) -> Result<CheckReport> {
    family.validate()?;
    if !family.is_epsilon_standard() {
        return Err(Error::InvalidParameter(format!(
            "family `{}` is not ε-standard",
            family.name()
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = family.letter_bound();
    let mut max_len = 0usize;
    for _ in 0..count {
        let x = dyadic_word(&mut rng, 0, 3, bound);
        let y = dyadic_word(&mut rng, 0, 3, bound);
        let z = dyadic_word(&mut rng, 0, 3, bound);
        let whole: Vec<f64> = x.iter().chain(&y).chain(&z).copied().collect();
        max_len = max_len.max(whole.len());
        let substituted: Vec<f64> = match family.evaluate(&y)? {
            RealValue::Epsilon => x.iter().chain(&z).copied().collect(),
            RealValue::Num(fy) => x
                .iter()
                .copied()
                .chain(std::iter::once(fy))
                .chain(z.iter().copied())
                .collect(),
        };
        let lhs = match family.evaluate(&whole)? {
            RealValue::Epsilon => {
                // whole is empty, so the substituted word is empty too
                continue;
            }
            RealValue::Num(v) => v,
        };
        let rhs = require_num(family.evaluate(&substituted)?);
        if !within(lhs - rhs, tol) {
            return Ok(CheckReport::fail(
                property::ASSOCIATIVITY_IDENTITY_SAMPLED,
                max_len,
                Witness::RealWords(vec![x, y, z]),
            ));
        }
    }
    Ok(CheckReport::pass(
        property::ASSOCIATIVITY_IDENTITY_SAMPLED,
        max_len,
    ))
}

/// Generate `count` equal-valued pairs (y, y′), surround them with random
/// contexts, and test |F(xyz) − F(xy′z)| ≤ tol. Requires the family to have
/// a witness-pair generator.
pub fn check_preassociativity_witnessed(
    family: &RealFamily,
    seed: u64,
    count: usize,
    tol: f64,
) -> Result<CheckReport> {
    family.validate()?;
    if !family.has_witness_generator() {
        return Err(Error::NoWitnessGenerator(family.name().to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = family.letter_bound();
    let mut max_len = 0usize;
    for index in 0..count {
        let (y, y2) = family.witness_pair(&mut rng, index);
        let fy = require_num(family.evaluate(&y)?);
        let fy2 = require_num(family.evaluate(&y2)?);
        debug_assert!(
            (fy - fy2).abs() <= tol,
            "generator produced an unequal pair for {}",
            family.name()
        );
        if !within(fy - fy2, tol) {
            continue;
        }
        let x = dyadic_word(&mut rng, 0, 3, bound);
        let z = dyadic_word(&mut rng, 0, 3, bound);
        let a: Vec<f64> = x.iter().chain(&y).chain(&z).copied().collect();
        let b: Vec<f64> = x.iter().chain(&y2).chain(&z).copied().collect();
        max_len = max_len.max(a.len().max(b.len()));
        let va = require_num(family.evaluate(&a)?);
        let vb = require_num(family.evaluate(&b)?);
        if !within(va - vb, tol) {
            return Ok(CheckReport::fail(
                property::PREASSOCIATIVITY_SAMPLED,
                max_len,
                Witness::RealWords(vec![x, y, y2, z]),
            ));
        }
    }
    Ok(CheckReport::pass(property::PREASSOCIATIVITY_SAMPLED, max_len))
}

/// The four numbers of the arity-indexed exponential counterexample:
/// Hₙ(x) = Σ exp(n·xᵢ) agrees at arity 2 on the two words built from
/// logarithms but separates at arity 3 after appending 0.
#[derive(Debug, Clone, Copy)]
pub struct ExpSequenceDemo {
    pub h2_log_pair: f64,
    pub h2_half_log_pair: f64,
    pub h3_log_triple: f64,
    pub h3_half_log_triple: f64,
}

pub fn exp_sequence_demo() -> ExpSequenceDemo {
    let family = RealFamily::ExpArityIndexed;
    let x1 = 1f64.ln();
    let x2 = 2f64.ln();
    let x1p = 0.5 * 3f64.ln();
    let x2p = 0.5 * 2f64.ln();
    let x3 = 0.0;
    let eval = |w: &[f64]| require_num(family.evaluate(w).unwrap());
    ExpSequenceDemo {
        h2_log_pair: eval(&[x1, x2]),
        h2_half_log_pair: eval(&[x1p, x2p]),
        h3_log_triple: eval(&[x1, x2, x3]),
        h3_half_log_triple: eval(&[x1p, x2p, x3]),
    }
}

/// The unary rule applied after an inner family in a registered
/// factorization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OuterMap {
    Identity,
    Exp,
    Scale(f64),
    Square,
}

impl OuterMap {
    pub fn apply(&self, t: f64) -> f64 {
        match self {
            OuterMap::Identity => t,
            OuterMap::Exp => t.exp(),
            OuterMap::Scale(c) => c * t,
            OuterMap::Square => t * t,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            OuterMap::Identity => "t ↦ t".to_string(),
            OuterMap::Exp => "t ↦ exp(t)".to_string(),
            OuterMap::Scale(c) => format!("t ↦ {c}·t"),
            OuterMap::Square => "t ↦ t²".to_string(),
        }
    }
}

/// A registered factorization F = outer ∘ inner with the largest sampled
/// deviation observed during verification.
#[derive(Debug, Clone)]
pub struct FamilyFactorization {
    pub inner: RealFamily,
    pub outer: OuterMap,
    pub max_sample_error: f64,
}

/// Look the family up in the curated factorable list and verify the
/// factorization on `count` sampled words.
pub fn factorize_family(
    family: &RealFamily,
    seed: u64,
    count: usize,
    tol: f64,
) -> Result<FamilyFactorization> {
    family.validate()?;
    let (inner, outer) = match family {
        RealFamily::Sum => (RealFamily::Sum, OuterMap::Identity),
        RealFamily::PNorm { p } => (RealFamily::PNorm { p: *p }, OuterMap::Identity),
        RealFamily::ExpSum => (RealFamily::Sum, OuterMap::Exp),
        RealFamily::ScaledSum { factor } => (RealFamily::Sum, OuterMap::Scale(*factor)),
        RealFamily::SquaredDistance => (RealFamily::PNorm { p: 2.0 }, OuterMap::Square),
        RealFamily::ReluSum | RealFamily::AbsSum | RealFamily::ExpArityIndexed => {
            return Err(Error::UnsupportedFactorization(
                family.name().to_string(),
                "the family is not preassociative".to_string(),
            ))
        }
        RealFamily::Length => {
            return Err(Error::UnsupportedFactorization(
                family.name().to_string(),
                "the unary range does not cover the full range".to_string(),
            ))
        }
        RealFamily::PNormIdentityUnary { .. } => {
            return Err(Error::UnsupportedFactorization(
                family.name().to_string(),
                "not in the curated factorable list".to_string(),
            ))
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = family.letter_bound();
    let mut max_err = 0f64;
    for _ in 0..count {
        let w = dyadic_word(&mut rng, 1, 6, bound);
        let direct = require_num(family.evaluate(&w)?);
        let via = outer.apply(require_num(inner.evaluate(&w)?));
        let err = (direct - via).abs();
        max_err = max_err.max(err);
        if !within(err, tol) {
            return Err(Error::UnsupportedFactorization(
                family.name().to_string(),
                format!("sampled verification exceeded tolerance: {err}"),
            ));
        }
    }
    Ok(FamilyFactorization {
        inner,
        outer,
        max_sample_error: max_err,
    })
}
