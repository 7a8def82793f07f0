//! Cross-checks of the optimized oracles against naive definitional scans,
//! plus the free-monoid bookkeeping invariants.
//!
//! The naive checkers in this file quantify over every tuple of in-horizon
//! words straight from the definitions, with no kernel partition and no
//! context reduction, so they share nothing with the library's decision
//! paths.

use proptest::prelude::*;

use varops::oracle;
use varops::{enumerate_words, Carrier, Codomain, TabulatedVariadic, Value, Word};

fn all_words(carrier: &Carrier, max_len: usize) -> Vec<Word> {
    enumerate_words(carrier, 0, max_len).unwrap().collect()
}

fn value(f: &TabulatedVariadic, w: &Word) -> Value {
    f.value(w).unwrap()
}

/// Naive preassociativity: every (x, y, y′, z) with both sides in horizon.
fn naive_preassociative(f: &TabulatedVariadic) -> bool {
    let l = f.horizon();
    let words = all_words(f.carrier(), l);
    for x in &words {
        for y in &words {
            for y2 in &words {
                if value(f, y) != value(f, y2) {
                    continue;
                }
                for z in &words {
                    if x.len() + y.len() + z.len() > l || x.len() + y2.len() + z.len() > l {
                        continue;
                    }
                    let a = x.concat(y).unwrap().concat(z).unwrap();
                    let b = x.concat(y2).unwrap().concat(z).unwrap();
                    if value(f, &a) != value(f, &b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Naive two-equality form: every (x, x′, y, y′) with both products in
/// horizon.
fn naive_pairwise(f: &TabulatedVariadic) -> bool {
    let l = f.horizon();
    let words = all_words(f.carrier(), l);
    for x in &words {
        for x2 in &words {
            if value(f, x) != value(f, x2) {
                continue;
            }
            for y in &words {
                if x.len() + y.len() > l {
                    continue;
                }
                for y2 in &words {
                    if x2.len() + y2.len() > l || value(f, y) != value(f, y2) {
                        continue;
                    }
                    let a = x.concat(y).unwrap();
                    let b = x2.concat(y2).unwrap();
                    if value(f, &a) != value(f, &b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Naive associativity: every decomposition of every in-horizon word,
/// skipping substitutions that leave the horizon (possible only when y = ε
/// and F(ε) is a letter).
fn naive_associative(f: &TabulatedVariadic) -> bool {
    let l = f.horizon();
    let words = all_words(f.carrier(), l);
    let n = f.carrier().len();
    for x in &words {
        for y in &words {
            if x.len() + y.len() > l {
                continue;
            }
            for z in &words {
                if x.len() + y.len() + z.len() > l {
                    continue;
                }
                let whole = x.concat(y).unwrap().concat(z).unwrap();
                let substituted = match value(f, y) {
                    Value::Epsilon => x.concat(z).unwrap(),
                    Value::Val(v) => x
                        .concat(&Word::from_letters(n, vec![v]).unwrap())
                        .unwrap()
                        .concat(z)
                        .unwrap(),
                };
                if substituted.len() > l {
                    continue;
                }
                if value(f, &whole) != value(f, &substituted) {
                    return false;
                }
            }
        }
    }
    true
}

/// Naive strong preassociativity with unrestricted inserted blocks y, the
/// form the |y| = 1 implementation claims to be equivalent to.
fn naive_strongly_preassociative(f: &TabulatedVariadic) -> bool {
    let l = f.horizon();
    let words = all_words(f.carrier(), l);
    for x in &words {
        for x2 in &words {
            for y in &words {
                for z in &words {
                    if x.len() + z.len() > l || x.len() + y.len() + z.len() > l {
                        continue;
                    }
                    let xz = x.concat(z).unwrap();
                    for z2 in &words {
                        if x2.len() + z2.len() > l || x2.len() + y.len() + z2.len() > l {
                            continue;
                        }
                        let x2z2 = x2.concat(z2).unwrap();
                        if value(f, &xz) != value(f, &x2z2) {
                            continue;
                        }
                        let a = x.concat(y).unwrap().concat(z).unwrap();
                        let b = x2.concat(y).unwrap().concat(z2).unwrap();
                        if value(f, &a) != value(f, &b) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn ab() -> Carrier {
    Carrier::new(["a", "b"]).unwrap()
}

/// A table on {a,b} at horizon 3 into X ∪ {ε}, from 15 digits in 0..3.
fn operation_table(digits: &[usize]) -> TabulatedVariadic {
    let x = ab();
    let y = x.operation_codomain();
    let space = varops::WordSpace::new(2, 3);
    TabulatedVariadic::from_fn(x, y, 3, |w| match digits[space.rank(w.letters())] {
        0 => Value::Epsilon,
        d => Value::Val(d - 1),
    })
    .unwrap()
}

/// A table on {a,b} at horizon 3 into a detached three-value codomain.
fn plain_table(digits: &[usize]) -> TabulatedVariadic {
    let x = ab();
    let y = Codomain::new(["p", "q", "r"], false).unwrap();
    let space = varops::WordSpace::new(2, 3);
    TabulatedVariadic::from_fn(x, y, 3, |w| Value::Val(digits[space.rank(w.letters())]))
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn preassociativity_matches_naive_scan(digits in prop::collection::vec(0..3usize, 15)) {
        let f = plain_table(&digits);
        prop_assert_eq!(oracle::is_preassociative(&f).verdict, naive_preassociative(&f));
    }

    #[test]
    fn pairwise_matches_naive_scan(digits in prop::collection::vec(0..3usize, 15)) {
        let f = plain_table(&digits);
        prop_assert_eq!(oracle::is_preassociative_pairwise(&f).verdict, naive_pairwise(&f));
    }

    #[test]
    fn associativity_matches_naive_scan(digits in prop::collection::vec(0..3usize, 15)) {
        let f = operation_table(&digits);
        prop_assert_eq!(oracle::is_associative(&f).unwrap().verdict, naive_associative(&f));
    }

    #[test]
    fn failed_verdicts_carry_replayable_witnesses(digits in prop::collection::vec(0..3usize, 15)) {
        let f = operation_table(&digits);
        let report = oracle::is_preassociative(&f);
        if let Some(w) = report.witness_words() {
            prop_assert!(oracle::preassociativity_violation(&f, &w[0], &w[1], &w[2], &w[3]).unwrap());
        }
        let report = oracle::is_associative(&f).unwrap();
        if let Some(w) = report.witness_words() {
            prop_assert!(oracle::associativity_violation(&f, &w[0], &w[1], &w[2]).unwrap());
        }
        let report = oracle::is_preassociative_pairwise(&f);
        if let Some(w) = report.witness_words() {
            prop_assert!(oracle::pairwise_violation(&f, &w[0], &w[1], &w[2], &w[3]).unwrap());
        }
    }

    #[test]
    fn concat_is_a_monoid(
        xs in prop::collection::vec(0..2usize, 0..6),
        ys in prop::collection::vec(0..2usize, 0..6),
        zs in prop::collection::vec(0..2usize, 0..6),
    ) {
        let x = Word::from_letters(2, xs).unwrap();
        let y = Word::from_letters(2, ys).unwrap();
        let z = Word::from_letters(2, zs).unwrap();
        let left = x.concat(&y).unwrap().concat(&z).unwrap();
        let right = x.concat(&y.concat(&z).unwrap()).unwrap();
        prop_assert_eq!(&left, &right);
        let eps = Word::epsilon(2);
        prop_assert_eq!(&x.concat(&eps).unwrap(), &x);
        prop_assert_eq!(&eps.concat(&x).unwrap(), &x);
        prop_assert_eq!(left.len(), x.len() + y.len() + z.len());
    }

    #[test]
    fn enumeration_count_follows_the_geometric_series(n in 2usize..5, min in 0usize..3, extra in 0usize..3) {
        let max = min + extra;
        let symbols: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
        let carrier = Carrier::new(symbols).unwrap();
        let count = enumerate_words(&carrier, min, max).unwrap().count();
        let expected = (n.pow(max as u32 + 1) - n.pow(min as u32)) / (n - 1);
        prop_assert_eq!(count, expected);
    }

    #[test]
    fn enumeration_is_sorted_and_duplicate_free(n in 1usize..4, max in 0usize..4) {
        let symbols: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
        let carrier = Carrier::new(symbols).unwrap();
        let words: Vec<Word> = enumerate_words(&carrier, 0, max).unwrap().collect();
        for pair in words.windows(2) {
            prop_assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn quasi_inverse_enumeration_matches_brute_filter(images in prop::collection::vec(0..3usize, 3)) {
        let s = Codomain::new(["a", "b", "c"], false).unwrap();
        let f = varops::UnaryMap::from_fn(s.clone(), s.clone(), |v| {
            Value::Val(images[s.position(v)])
        }).unwrap();
        let enumerated = varops::quasi_inverse::enumerate_quasi_inverses(&f);
        let filtered = varops::quasi_inverse::quasi_inverses_by_filter(&f);
        prop_assert!(!enumerated.is_empty());
        prop_assert_eq!(enumerated.len(), filtered.len());
        let mut sorted = filtered;
        sorted.sort_by_key(|g| g.lex_key());
        prop_assert_eq!(enumerated.members(), sorted.as_slice());
        for g in enumerated.members() {
            prop_assert!(varops::quasi_inverse::is_quasi_inverse(g, &f).unwrap().verdict);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn strong_preassociativity_matches_unrestricted_blocks(digits in prop::collection::vec(0..3usize, 15)) {
        let f = plain_table(&digits);
        prop_assert_eq!(
            oracle::is_strongly_preassociative(&f).unwrap().verdict,
            naive_strongly_preassociative(&f)
        );
    }
}

/// Exhaustive sweep of every operation table on a two-letter carrier at
/// horizon 2: 3⁷ = 2187 tables.
#[test]
fn exhaustive_small_tables_support_the_law_implications() {
    let x = ab();
    let y = x.operation_codomain();
    let space_size = 7; // 1 + 2 + 4 words
    let mut checked = 0usize;
    for code in 0..3usize.pow(space_size as u32) {
        let mut digits = Vec::with_capacity(space_size);
        let mut c = code;
        for _ in 0..space_size {
            digits.push(c % 3);
            c /= 3;
        }
        let space = varops::WordSpace::new(2, 2);
        let f = TabulatedVariadic::from_fn(x.clone(), y.clone(), 2, |w| {
            match digits[space.rank(w.letters())] {
                0 => Value::Epsilon,
                d => Value::Val(d - 1),
            }
        })
        .unwrap();
        let assoc = oracle::is_associative(&f).unwrap().verdict;
        let standard = oracle::is_standard(&f).verdict;
        if assoc && standard {
            // an associative standard operation is necessarily ε-standard
            assert!(oracle::is_epsilon_standard(&f).unwrap().verdict);
        }
        if assoc {
            // associativity is equivalent to its |xz| ≤ 1 restriction
            assert!(oracle::is_associative_short(&f).unwrap().verdict);
        }
        let eps_standard = oracle::is_epsilon_standard(&f).unwrap().verdict;
        if eps_standard {
            let pre = oracle::is_preassociative(&f).verdict;
            let uri = oracle::is_unarily_range_idempotent(&f).unwrap().verdict;
            assert_eq!(assoc, pre && uri);
            assert_eq!(assoc, oracle::is_associative_short(&f).unwrap().verdict);
        }
        checked += 1;
    }
    assert_eq!(checked, 2187);
}

/// The kernel partition is a single-letter congruence exactly when the
/// preassociativity oracle says yes.
#[test]
fn kernel_congruence_iff_preassociative() {
    for code in [0usize, 1, 77, 1234, 9999, 31415, 2_097_151] {
        let mut digits = Vec::with_capacity(15);
        let mut c = code;
        for _ in 0..15 {
            digits.push(c % 3);
            c /= 3;
        }
        let f = plain_table(&digits);
        assert_eq!(
            oracle::kernel_partition(&f).is_single_letter_congruence(),
            oracle::is_preassociative(&f).verdict
        );
    }
}

/// Overwriting the unary part of an associative table with the identity
/// keeps it associative.
#[test]
fn setting_unary_part_to_identity_preserves_associativity() {
    use varops::construct::{check_associative_extension, extend_associative};
    let x = ab();
    let set = x.to_codomain();
    let mut rewritten = 0usize;
    for f1_code in 0..4usize {
        let f1 = varops::UnaryMap::new(
            set.clone(),
            set.clone(),
            vec![Value::Val(f1_code / 2), Value::Val(f1_code % 2)],
        )
        .unwrap();
        for f2_code in 0..16usize {
            let f2 = varops::BinaryMap::new(
                x.clone(),
                set.clone(),
                (0..4).map(|k| Value::Val((f2_code >> k) & 1)).collect(),
            )
            .unwrap();
            if !check_associative_extension(&f1, &f2).unwrap().overall() {
                continue;
            }
            let table = extend_associative(&f1, &f2, 4).unwrap();
            let mut modified = table.clone();
            for letter in 0..x.len() {
                let w = Word::from_letters(x.len(), vec![letter]).unwrap();
                modified = modified.with_entry(&w, Value::Val(letter)).unwrap();
            }
            assert!(oracle::is_associative(&modified).unwrap().verdict);
            rewritten += 1;
        }
    }
    assert!(rewritten > 0);
}

/// For a unarily quasi-range-idempotent table, the inner operation built
/// from any quasi-inverse of F₁ solves F♭ = F₁∘H♭, is unarily
/// range-idempotent, and leaves F₁ one-to-one on its flat range. For
/// preassociative inputs the factorization inner table is associative as
/// well.
#[test]
fn inner_solutions_hold_for_every_quasi_inverse_choice() {
    use varops::construct::{build_range_idempotent_inner, compose_left, extend_associative, factorize};
    use varops::quasi_inverse::enumerate_quasi_inverses;

    // σ∘(mod-3 sum): UQRI, preassociative, F₁ = σ ≠ id
    let x = Carrier::new(["0", "1", "2"]).unwrap();
    let id = varops::UnaryMap::identity(&x.to_codomain());
    let plus = varops::BinaryMap::from_fn(x.clone(), x.to_codomain(), |i, j| {
        Value::Val((i + j) % 3)
    })
    .unwrap();
    let base = extend_associative(&id, &plus, 3).unwrap();
    let sigma = [1usize, 2, 0];
    let y = base.codomain().clone();
    let g = varops::UnaryMap::from_fn(y.clone(), y.clone(), |v| match v {
        Value::Epsilon => Value::Epsilon,
        Value::Val(i) => Value::Val(sigma[i]),
    })
    .unwrap();
    let table = compose_left(&base, &g, Value::Epsilon).unwrap();

    let f1 = table.unary_part();
    let members = enumerate_quasi_inverses(&f1);
    assert!(!members.is_empty());
    for g in members.members() {
        let inner = build_range_idempotent_inner(&table, g).unwrap();
        assert!(oracle::is_unarily_range_idempotent(&inner).unwrap().verdict);
        for (word, value) in table.entries() {
            if word.is_empty() {
                continue;
            }
            let h = inner.value(&word).unwrap();
            let name = inner.codomain().name_of(h);
            assert_eq!(f1.apply_named(name).unwrap(), value);
        }
        let range: Vec<Value> = inner
            .range_over(1, inner.horizon())
            .into_iter()
            .map(|v| Value::Val(v.as_letter().unwrap()))
            .collect();
        assert!(f1.is_one_to_one_on(&range));

        let fact = factorize(&table, Some(g)).unwrap();
        assert!(oracle::is_associative(&fact.inner).unwrap().verdict);
        assert_eq!(fact.inner, inner);
    }
}
