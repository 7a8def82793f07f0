//! Synthesis of variadic tables from unary/binary parts, and factorization
//! of preassociative tables through associative ε-standard operations.

use crate::carrier::{Carrier, Codomain, Value};
use crate::error::{Error, Result};
use crate::oracle::{is_preassociative, is_standard, is_unarily_quasi_range_idempotent};
use crate::quasi_inverse::{canonical_quasi_inverse, is_quasi_inverse};
use crate::report::{property, CheckReport, Witness};
use crate::table::{BinaryMap, TabulatedVariadic, UnaryMap};
use crate::word::WordSpace;

/// Per-condition verdicts for an extension existence check.
///
/// The overall verdict is the conjunction; each failed condition carries a
/// point witness. `chosen_g` records the quasi-inverse the conditions were
/// stated relative to, since the inner operation depends on that choice.
#[derive(Debug, Clone)]
pub struct ExtensionConditionsReport {
    pub conditions: Vec<CheckReport>,
    pub chosen_g: Option<UnaryMap>,
}

impl ExtensionConditionsReport {
    pub fn overall(&self) -> bool {
        self.conditions.iter().all(|c| c.verdict)
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.conditions.iter().find(|c| !c.verdict)
    }

    pub fn failure_summary(&self) -> String {
        let failed: Vec<&str> = self
            .conditions
            .iter()
            .filter(|c| !c.verdict)
            .map(|c| c.property.as_str())
            .collect();
        failed.join(", ")
    }
}

fn letter_of(v: Value) -> usize {
    v.as_letter().expect("operation values are letters")
}

fn require_unary_on(f1: &UnaryMap, carrier: &Carrier, codomain: &Codomain) -> Result<()> {
    if f1.domain() != &carrier.to_codomain() || f1.codomain() != codomain {
        return Err(Error::MapShapeMismatch {
            role: "unary part",
            expected: "a total map from the carrier into the codomain",
        });
    }
    Ok(())
}

fn require_binary_on(f2: &BinaryMap, carrier: &Carrier, codomain: &Codomain) -> Result<()> {
    if f2.carrier() != carrier || f2.codomain() != codomain {
        return Err(Error::MapShapeMismatch {
            role: "binary part",
            expected: "a total map on carrier pairs into the codomain",
        });
    }
    Ok(())
}

/// Conditions for (F₁, F₂) to be the unary and binary parts of an
/// associative ε-standard operation:
///   (i)   F₁∘F₁ = F₁ and F₁∘F₂ = F₂,
///   (ii)  F₂ = F₂∘(F₁, id) = F₂∘(id, F₁),
///   (iii) F₂ is associative.
pub fn check_associative_extension(
    f1: &UnaryMap,
    f2: &BinaryMap,
) -> Result<ExtensionConditionsReport> {
    let carrier = f2.carrier().clone();
    let plain = carrier.to_codomain();
    require_unary_on(f1, &carrier, &plain)?;
    require_binary_on(f2, &carrier, &plain)?;
    let n = carrier.len();
    let u = |x: usize| letter_of(f1.apply(Value::Val(x)));
    let b = |x: usize, y: usize| letter_of(f2.apply(x, y));
    let name = |x: usize| carrier.symbol(x).to_string();

    let mut cond_i = CheckReport::pass(property::EXTENSION_CONDITION_I, 0);
    'i: {
        for x in 0..n {
            if u(u(x)) != u(x) {
                cond_i = CheckReport::fail(
                    property::EXTENSION_CONDITION_I,
                    0,
                    Witness::Values(vec![name(x)]),
                );
                break 'i;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if u(b(x, y)) != b(x, y) {
                    cond_i = CheckReport::fail(
                        property::EXTENSION_CONDITION_I,
                        0,
                        Witness::Values(vec![name(x), name(y)]),
                    );
                    break 'i;
                }
            }
        }
    }

    let cond_ii = binary_compat_condition(&carrier, &|x, y| Value::Val(b(x, y)), &|x| u(x));
    let cond_iii = binary_associativity_condition(&carrier, &|x, y| b(x, y));

    Ok(ExtensionConditionsReport {
        conditions: vec![cond_i, cond_ii, cond_iii],
        chosen_g: None,
    })
}

/// H₂ = H₂∘(H₁, id) = H₂∘(id, H₁) for a binary map given as values and a
/// unary letter map.
fn binary_compat_condition(
    carrier: &Carrier,
    apply2: &dyn Fn(usize, usize) -> Value,
    apply1: &dyn Fn(usize) -> usize,
) -> CheckReport {
    let n = carrier.len();
    for x in 0..n {
        for y in 0..n {
            let base = apply2(x, y);
            if apply2(apply1(x), y) != base || apply2(x, apply1(y)) != base {
                return CheckReport::fail(
                    property::EXTENSION_CONDITION_II,
                    0,
                    Witness::Values(vec![
                        carrier.symbol(x).to_string(),
                        carrier.symbol(y).to_string(),
                    ]),
                );
            }
        }
    }
    CheckReport::pass(property::EXTENSION_CONDITION_II, 0)
}

fn binary_associativity_condition(
    carrier: &Carrier,
    apply2: &dyn Fn(usize, usize) -> usize,
) -> CheckReport {
    let n = carrier.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if apply2(apply2(x, y), z) != apply2(x, apply2(y, z)) {
                    return CheckReport::fail(
                        property::EXTENSION_CONDITION_III,
                        0,
                        Witness::Values(vec![
                            carrier.symbol(x).to_string(),
                            carrier.symbol(y).to_string(),
                            carrier.symbol(z).to_string(),
                        ]),
                    );
                }
            }
        }
    }
    CheckReport::pass(property::EXTENSION_CONDITION_III, 0)
}

/// The unique associative ε-standard extension of (F₁, F₂) up to the
/// horizon: G(ε) = ε, G₁ = F₁, G₂ = F₂, and Gₙ(x₁⋯xₙ) = F₂(Gₙ₋₁(x₁⋯xₙ₋₁)xₙ).
pub fn extend_associative(
    f1: &UnaryMap,
    f2: &BinaryMap,
    horizon: usize,
) -> Result<TabulatedVariadic> {
    let report = check_associative_extension(f1, f2)?;
    if !report.overall() {
        return Err(Error::ExtensionConditionsFailed {
            summary: report.failure_summary(),
        });
    }
    let carrier = f2.carrier().clone();
    build_by_recursion(&carrier, Value::Epsilon, f1, f2, None, horizon)
}

/// Conditions for (F₁, F₂) to be the unary and binary parts of a
/// preassociative, unarily quasi-range-idempotent standard function,
/// relative to an explicit g ∈ Q(F₁): ran(F₂) ⊆ ran(F₁), then with
/// H₁ = g∘F₁ and H₂ = g∘F₂,
///   (i)  H₂ = H₂∘(H₁, id) = H₂∘(id, H₁),
///   (ii) H₂ is associative.
pub fn check_preassociative_extension(
    f1: &UnaryMap,
    f2: &BinaryMap,
    g: &UnaryMap,
) -> Result<ExtensionConditionsReport> {
    let carrier = f2.carrier().clone();
    let codomain = f2.codomain().clone();
    require_unary_on(f1, &carrier, &codomain)?;
    if g.domain() != &codomain || g.codomain() != &carrier.to_codomain() {
        return Err(Error::MapShapeMismatch {
            role: "quasi-inverse",
            expected: "a total map from the codomain back to the carrier",
        });
    }
    let membership = is_quasi_inverse(f1, g)?;
    if !membership.verdict {
        return Err(Error::NotAQuasiInverse("g".to_string()));
    }

    let n = carrier.len();
    let f1_range = f1.range();
    let mut range_inclusion = CheckReport::pass(property::EXTENSION_RANGE_INCLUSION, 0);
    'range: for x in 0..n {
        for y in 0..n {
            if !f1_range.contains(&f2.apply(x, y)) {
                range_inclusion = CheckReport::fail(
                    property::EXTENSION_RANGE_INCLUSION,
                    0,
                    Witness::Values(vec![
                        carrier.symbol(x).to_string(),
                        carrier.symbol(y).to_string(),
                    ]),
                );
                break 'range;
            }
        }
    }

    let h1 = |x: usize| letter_of(g.apply(f1.apply(Value::Val(x))));
    let h2 = |x: usize, y: usize| letter_of(g.apply(f2.apply(x, y)));
    let compat = {
        let r = binary_compat_condition(&carrier, &|x, y| Value::Val(h2(x, y)), &h1);
        CheckReport {
            property: property::EXTENSION_CONDITION_I.to_string(),
            ..r
        }
    };
    let assoc = {
        let r = binary_associativity_condition(&carrier, &|x, y| h2(x, y));
        CheckReport {
            property: property::EXTENSION_CONDITION_II.to_string(),
            ..r
        }
    };

    Ok(ExtensionConditionsReport {
        conditions: vec![range_inclusion, compat, assoc],
        chosen_g: Some(g.clone()),
    })
}

/// The unique preassociative, unarily quasi-range-idempotent standard
/// extension of (F₀, F₁, F₂) up to the horizon: G(ε) = F₀ and
/// Gₙ(x₁⋯xₙ) = F₂((g∘Gₙ₋₁)(x₁⋯xₙ₋₁)xₙ).
///
/// F₀ is part of the data, not derived; a collision between F₀ and the value
/// of any nonempty word breaks standardness and is rejected.
pub fn extend_preassociative(
    f0: Value,
    f1: &UnaryMap,
    f2: &BinaryMap,
    g: &UnaryMap,
    horizon: usize,
) -> Result<TabulatedVariadic> {
    let report = check_preassociative_extension(f1, f2, g)?;
    if !report.overall() {
        return Err(Error::ExtensionConditionsFailed {
            summary: report.failure_summary(),
        });
    }
    let codomain = f2.codomain().clone();
    if !codomain.contains(f0) {
        return Err(Error::ValueOutsideCodomain {
            at: "ε".to_string(),
        });
    }
    let carrier = f2.carrier().clone();
    let table = build_by_recursion(&carrier, f0, f1, f2, Some(g), horizon)?;
    if table.range_over(1, horizon).contains(&f0) {
        return Err(Error::StandardnessCollision(
            codomain.name_of(f0).to_string(),
        ));
    }
    Ok(table)
}

/// Fill a table by the left-fold recursion Gₙ = F₂∘((g∘Gₙ₋₁), id), with
/// g = id in the associative case.
fn build_by_recursion(
    carrier: &Carrier,
    f0: Value,
    f1: &UnaryMap,
    f2: &BinaryMap,
    g: Option<&UnaryMap>,
    horizon: usize,
) -> Result<TabulatedVariadic> {
    let n = carrier.len();
    let space = WordSpace::new(n, horizon);
    let codomain = if g.is_some() {
        f2.codomain().clone()
    } else {
        carrier.operation_codomain()
    };
    let mut table = vec![f0; space.word_count()];
    for letter in 0..n {
        table[space.rank(&[letter])] = f1.apply(Value::Val(letter));
    }
    for i in 0..n {
        for j in 0..n {
            table[space.rank(&[i, j])] = f2.apply(i, j);
        }
    }
    let mut letters = Vec::new();
    for len in 3..=horizon {
        for rank in space.ranks_in(len, len) {
            letters.clear();
            letters.extend_from_slice(&space.unrank(rank));
            let last = *letters.last().unwrap();
            let prefix_rank = space.rank(&letters[..len - 1]);
            let prev = table[prefix_rank];
            let pulled = match g {
                Some(g) => letter_of(g.apply(prev)),
                None => letter_of(prev),
            };
            table[rank] = f2.apply(pulled, last);
        }
    }
    TabulatedVariadic::new(carrier.clone(), codomain, horizon, table)
}

/// A preassociative table written as a one-to-one map after an associative
/// ε-standard inner operation: F♭ = f ∘ H♭.
#[derive(Debug, Clone)]
pub struct Factorization {
    /// The associative ε-standard inner operation H with H♭ = g∘F♭.
    pub inner: TabulatedVariadic,
    /// The one-to-one outer map f = F₁ restricted to ran(H♭).
    pub outer: UnaryMap,
    /// The quasi-inverse of F₁ the construction used.
    pub quasi_inverse: UnaryMap,
}

fn require_precondition(report: CheckReport) -> Result<()> {
    if report.verdict {
        Ok(())
    } else {
        Err(Error::PreconditionFailed {
            property: report.property.clone(),
            report: Box::new(report),
        })
    }
}

fn checked_quasi_inverse(
    f: &TabulatedVariadic,
    g: Option<&UnaryMap>,
) -> Result<UnaryMap> {
    let f1 = f.unary_part();
    match g {
        Some(g) => {
            if g.domain() != f.codomain() || g.codomain() != &f.carrier().to_codomain() {
                return Err(Error::MapShapeMismatch {
                    role: "quasi-inverse",
                    expected: "a total map from the codomain back to the carrier",
                });
            }
            if !is_quasi_inverse(&f1, g)?.verdict {
                return Err(Error::NotAQuasiInverse("g".to_string()));
            }
            Ok(g.clone())
        }
        None => Ok(canonical_quasi_inverse(&f1)),
    }
}

/// Build the ε-standard inner operation H with H♭ = g∘F♭ and H(ε) = ε.
fn inner_table(f: &TabulatedVariadic, g: &UnaryMap) -> Result<TabulatedVariadic> {
    let carrier = f.carrier().clone();
    let horizon = f.horizon();
    let space = f.space();
    let mut table = vec![Value::Epsilon; space.word_count()];
    for rank in space.ranks_in(1, horizon) {
        table[rank] = g.apply(f.value_of_rank(rank));
    }
    TabulatedVariadic::new(carrier.clone(), carrier.operation_codomain(), horizon, table)
}

/// Factor a standard, preassociative, unarily quasi-range-idempotent table
/// as F♭ = f ∘ H♭ with H associative ε-standard and f one-to-one.
///
/// When no quasi-inverse is supplied the canonical member of Q(F₁) is used;
/// the choice is recorded in the result since H depends on it.
pub fn factorize(f: &TabulatedVariadic, g: Option<&UnaryMap>) -> Result<Factorization> {
    require_precondition(is_standard(f))?;
    require_precondition(is_preassociative(f))?;
    require_precondition(is_unarily_quasi_range_idempotent(f))?;
    let g = checked_quasi_inverse(f, g)?;
    let inner = inner_table(f, &g)?;

    let reached: Vec<usize> = {
        let range = inner.range_over(1, inner.horizon());
        range.into_iter().map(letter_of).collect()
    };
    let outer_domain = Codomain::new(
        reached
            .iter()
            .map(|&i| f.carrier().symbol(i).to_string())
            .collect::<Vec<_>>(),
        false,
    )?;
    let outer_table: Vec<Value> = reached.iter().map(|&i| f.value_at(&[i])).collect();
    let outer = UnaryMap::new(outer_domain, f.codomain().clone(), outer_table)?;
    debug_assert!(
        outer.is_one_to_one_on(&outer.domain().elements().collect::<Vec<_>>()),
        "the outer factor of a preassociative UQRI table is one-to-one"
    );
    Ok(Factorization {
        inner,
        outer,
        quasi_inverse: g,
    })
}

/// The unarily range-idempotent solution H of F♭ = F₁∘H♭, built as
/// H♭ = g∘F♭ with H(ε) = ε. Requires F unarily quasi-range-idempotent and
/// g ∈ Q(F₁); preassociativity is not needed.
pub fn build_range_idempotent_inner(
    f: &TabulatedVariadic,
    g: &UnaryMap,
) -> Result<TabulatedVariadic> {
    require_precondition(is_unarily_quasi_range_idempotent(f))?;
    let g = checked_quasi_inverse(f, Some(g))?;
    inner_table(f, &g)
}

/// Right composition: Hₙ = Fₙ∘(g, …, g) over a new carrier, with H(ε) a
/// fresh value outside ran(F♭). Preserves standardness and preassociativity.
pub fn compose_right(
    f: &TabulatedVariadic,
    g: &UnaryMap,
    h0: Value,
) -> Result<TabulatedVariadic> {
    require_precondition(is_standard(f))?;
    require_precondition(is_preassociative(f))?;
    if g.codomain() != &f.carrier().to_codomain() {
        return Err(Error::MapShapeMismatch {
            role: "right composition",
            expected: "a map into the carrier",
        });
    }
    if g.domain().has_epsilon() {
        return Err(Error::MapShapeMismatch {
            role: "right composition",
            expected: "a map whose domain is an ε-free carrier",
        });
    }
    if !f.codomain().contains(h0) {
        return Err(Error::ValueOutsideCodomain { at: "ε".to_string() });
    }
    if f.range_over(1, f.horizon()).contains(&h0) {
        return Err(Error::StandardnessCollision(
            f.codomain().name_of(h0).to_string(),
        ));
    }
    let new_carrier = Carrier::new(g.domain().values().to_vec())?;
    let horizon = f.horizon();
    let space = WordSpace::new(new_carrier.len(), horizon);
    let letter_map: Vec<usize> = g
        .domain()
        .elements()
        .map(|e| letter_of(g.apply(e)))
        .collect();
    let mut table = vec![h0; space.word_count()];
    let mut mapped = Vec::new();
    for (rank, slot) in table.iter_mut().enumerate().skip(1) {
        mapped.clear();
        mapped.extend(space.unrank(rank).iter().map(|&l| letter_map[l]));
        *slot = f.value_at(&mapped);
    }
    TabulatedVariadic::new(new_carrier, f.codomain().clone(), horizon, table)
}

/// Left composition: H♭ = g∘F♭ with H(ε) a fresh value. Requires g to be
/// one-to-one on ran(F♭) — the exact collision pair is reported otherwise,
/// which is precisely how left composition can destroy preassociativity.
pub fn compose_left(
    f: &TabulatedVariadic,
    g: &UnaryMap,
    h0: Value,
) -> Result<TabulatedVariadic> {
    require_precondition(is_standard(f))?;
    require_precondition(is_preassociative(f))?;
    if g.domain() != f.codomain() {
        return Err(Error::MapShapeMismatch {
            role: "left composition",
            expected: "a map defined on the codomain",
        });
    }
    let flat_range: Vec<Value> = f.range_over(1, f.horizon()).into_iter().collect();
    if let Some((a, b)) = g.collision_on(&flat_range) {
        return Err(Error::NotOneToOne {
            function: "g",
            on: "ran(F♭)",
            a: f.codomain().name_of(a).to_string(),
            b: f.codomain().name_of(b).to_string(),
        });
    }
    if !g.codomain().contains(h0) {
        return Err(Error::ValueOutsideCodomain { at: "ε".to_string() });
    }
    let mapped_range: Vec<Value> = flat_range.iter().map(|&v| g.apply(v)).collect();
    if mapped_range.contains(&h0) {
        return Err(Error::StandardnessCollision(
            g.codomain().name_of(h0).to_string(),
        ));
    }
    let horizon = f.horizon();
    let space = f.space();
    let mut table = vec![h0; space.word_count()];
    for rank in space.ranks_in(1, horizon) {
        table[rank] = g.apply(f.value_of_rank(rank));
    }
    TabulatedVariadic::new(
        f.carrier().clone(),
        g.codomain().clone(),
        horizon,
        table,
    )
}
