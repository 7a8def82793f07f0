//! Shared table builders for unit tests.

use crate::carrier::{Carrier, Codomain, Value};
use crate::table::TabulatedVariadic;
use crate::word::Word;

pub(crate) fn carrier01() -> Carrier {
    Carrier::new(["0", "1"]).unwrap()
}

pub(crate) fn carrier012() -> Carrier {
    Carrier::new(["0", "1", "2"]).unwrap()
}

fn sum_of(w: &Word) -> usize {
    w.letters().iter().sum()
}

/// mod-2 sum on {0,1} with F(ε) = ε.
pub(crate) fn xor_table(horizon: usize) -> TabulatedVariadic {
    let x = carrier01();
    let y = x.operation_codomain();
    TabulatedVariadic::from_fn(x, y, horizon, |w| {
        if w.is_empty() {
            Value::Epsilon
        } else {
            Value::Val(sum_of(w) % 2)
        }
    })
    .unwrap()
}

/// max on {0,1,2} with F(ε) = ε.
pub(crate) fn max_table(horizon: usize) -> TabulatedVariadic {
    let x = carrier012();
    let y = x.operation_codomain();
    TabulatedVariadic::from_fn(x, y, horizon, |w| {
        if w.is_empty() {
            Value::Epsilon
        } else {
            Value::Val(*w.letters().iter().max().unwrap())
        }
    })
    .unwrap()
}

/// mod-3 sum on {0,1,2} with F(ε) = ε.
pub(crate) fn mod3_table(horizon: usize) -> TabulatedVariadic {
    let x = carrier012();
    let y = x.operation_codomain();
    TabulatedVariadic::from_fn(x, y, horizon, |w| {
        if w.is_empty() {
            Value::Epsilon
        } else {
            Value::Val(sum_of(w) % 3)
        }
    })
    .unwrap()
}

/// The length function on {a,b}, into the codomain {0, 1, …, horizon}.
pub(crate) fn length_table(horizon: usize) -> TabulatedVariadic {
    let x = Carrier::new(["a", "b"]).unwrap();
    let y = Codomain::new(
        (0..=horizon).map(|k| k.to_string()).collect::<Vec<_>>(),
        false,
    )
    .unwrap();
    TabulatedVariadic::from_fn(x, y, horizon, |w| Value::Val(w.len())).unwrap()
}

/// F₂ = first-argument projection but F₃ = last-argument projection: not
/// associative, with the violation appearing at length 3.
pub(crate) fn mixed_projection_table() -> TabulatedVariadic {
    let x = carrier01();
    let y = x.operation_codomain();
    TabulatedVariadic::from_fn(x, y, 3, |w| match w.len() {
        0 => Value::Epsilon,
        1 => Value::Val(w.letters()[0]),
        2 => Value::Val(w.letters()[0]),
        _ => Value::Val(*w.letters().last().unwrap()),
    })
    .unwrap()
}

/// Two-row table on {a,b} with F(a) = F(b) but F(a,a) ≠ F(b,a): not
/// preassociative.
pub(crate) fn two_row_table() -> TabulatedVariadic {
    let x = Carrier::new(["a", "b"]).unwrap();
    let y = x.operation_codomain();
    TabulatedVariadic::from_fn(x, y, 2, |w| match w.letters() {
        [] => Value::Epsilon,
        [_] => Value::Val(0),
        [1, 0] => Value::Val(1),
        _ => Value::Val(0),
    })
    .unwrap()
}

/// The arity-indexed constant family: F₁ ≡ c, Fₙ ≡ c′ for n ≥ 2, F(ε)
/// distinct from both. Preassociative but not unarily quasi-range-idempotent.
pub(crate) fn constant_parts_table(horizon: usize) -> TabulatedVariadic {
    let x = Carrier::new(["a", "b"]).unwrap();
    let y = Codomain::new(["c", "c2", "d"], false).unwrap();
    TabulatedVariadic::from_fn(x, y, horizon, |w| match w.len() {
        0 => Value::Val(2),
        1 => Value::Val(0),
        _ => Value::Val(1),
    })
    .unwrap()
}
