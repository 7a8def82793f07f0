//! Exact enumeration and verification of quasi-inverses of finite unary maps.
//!
//! g is a quasi-inverse of f when f∘g restricted to ran(f) is the identity
//! and g maps nothing outside what it already reaches on ran(f). On finite
//! domains the set Q(f) is enumerated explicitly; within this crate its
//! members are the total maps from cod(f) to dom(f) satisfying both
//! conditions.

use std::collections::BTreeSet;

use crate::carrier::Value;
use crate::error::{Error, Result};
use crate::report::{property, CheckReport, Witness};
use crate::table::{TabulatedVariadic, UnaryMap};

/// Membership check for values of one map inside the domain of another,
/// matched by name so that merely overlapping value spaces compare.
fn covered_by(values: &BTreeSet<Value>, from: &UnaryMap, target: &UnaryMap) -> Option<String> {
    for &v in values {
        let name = from.codomain().name_of(v);
        if target.domain().value_named(name).is_err() {
            return Some(name.to_string());
        }
    }
    None
}

/// Check both defining conditions of a quasi-inverse pair.
///
/// Requires ran(f) ⊆ dom(g) and ran(g) ⊆ dom(f); errors otherwise. The
/// returned witness names the offending value.
pub fn is_quasi_inverse(f: &UnaryMap, g: &UnaryMap) -> Result<CheckReport> {
    if let Some(value) = covered_by(&f.range(), f, g) {
        return Err(Error::RangeNotCovered {
            function: "f",
            target: "dom(g)",
            value,
        });
    }
    if let Some(value) = covered_by(&g.range(), g, f) {
        return Err(Error::RangeNotCovered {
            function: "g",
            target: "dom(f)",
            value,
        });
    }
    // f ∘ g = id on ran(f)
    for &v in &f.range() {
        let name = f.codomain().name_of(v);
        let gv = g.apply_named(name)?;
        let back = f.apply_named(g.codomain().name_of(gv))?;
        if f.codomain().name_of(back) != name {
            return Ok(CheckReport::fail(
                property::QUASI_INVERSE,
                0,
                Witness::Values(vec![name.to_string()]),
            ));
        }
    }
    // ran(g restricted to ran(f)) = ran(g)
    let restricted: BTreeSet<String> = f
        .range()
        .iter()
        .map(|&v| {
            let gv = g.apply_named(f.codomain().name_of(v)).unwrap();
            g.codomain().name_of(gv).to_string()
        })
        .collect();
    for (from, to) in g.entries() {
        let to_name = g.codomain().name_of(to);
        if !restricted.contains(to_name) {
            return Ok(CheckReport::fail(
                property::QUASI_INVERSE,
                0,
                Witness::Values(vec![
                    g.domain().name_of(from).to_string(),
                    to_name.to_string(),
                ]),
            ));
        }
    }
    Ok(CheckReport::pass(property::QUASI_INVERSE, 0))
}

/// The complete set Q(f), canonically ordered.
#[derive(Debug, Clone)]
pub struct QuasiInverseSet {
    base: UnaryMap,
    members: Vec<UnaryMap>,
}

impl QuasiInverseSet {
    pub fn base(&self) -> &UnaryMap {
        &self.base
    }

    pub fn members(&self) -> &[UnaryMap] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The lexicographically least member, the default wherever a single
    /// quasi-inverse must be picked.
    pub fn canonical(&self) -> &UnaryMap {
        &self.members[0]
    }
}

/// Enumerate Q(f) over the total maps cod(f) → dom(f).
///
/// On ran(f), g must pick a preimage of each value (a section of f); off
/// ran(f), g must stay inside the image of that section so that
/// ran(g|ran(f)) = ran(g). Members come out sorted lexicographically by
/// table, and the set is never empty on a finite domain.
pub fn enumerate_quasi_inverses(f: &UnaryMap) -> QuasiInverseSet {
    let g_domain = f.codomain().clone();
    let g_codomain = f.domain().clone();
    let range: Vec<Value> = f.range().into_iter().collect();

    // preimages[k] = f⁻¹(range[k]), in domain order
    let preimages: Vec<Vec<Value>> = range
        .iter()
        .map(|&v| {
            f.entries()
                .filter(|&(_, fv)| fv == v)
                .map(|(x, _)| x)
                .collect()
        })
        .collect();

    let range_positions: Vec<Option<usize>> = g_domain
        .elements()
        .map(|e| range.iter().position(|&r| r == e))
        .collect();

    let mut members = Vec::new();
    let mut section = vec![0usize; range.len()];
    loop {
        let chosen: Vec<Value> = section
            .iter()
            .zip(&preimages)
            .map(|(&i, pre)| pre[i])
            .collect();
        let image: BTreeSet<Value> = chosen.iter().copied().collect();
        let image: Vec<Value> = image.into_iter().collect();

        // fill the elements of dom(g) outside ran(f) with image choices
        let free_slots: Vec<usize> = range_positions
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_none())
            .map(|(i, _)| i)
            .collect();
        let mut fill = vec![0usize; free_slots.len()];
        loop {
            let mut table = Vec::with_capacity(g_domain.card());
            let mut free_iter = fill.iter();
            for pos in &range_positions {
                match pos {
                    Some(k) => table.push(chosen[*k]),
                    None => table.push(image[*free_iter.next().unwrap()]),
                }
            }
            members.push(
                UnaryMap::new(g_domain.clone(), g_codomain.clone(), table)
                    .expect("enumerated quasi-inverse is a valid map"),
            );
            // odometer over the free slots
            let mut carry = true;
            for slot in fill.iter_mut().rev() {
                if carry {
                    *slot += 1;
                    if *slot == image.len() {
                        *slot = 0;
                    } else {
                        carry = false;
                    }
                }
            }
            if carry {
                break;
            }
        }
        // odometer over the sections
        let mut carry = true;
        for (slot, pre) in section.iter_mut().zip(&preimages).rev() {
            if carry {
                *slot += 1;
                if *slot == pre.len() {
                    *slot = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            break;
        }
    }

    members.sort_by_key(|g| g.lex_key());
    members.dedup();
    QuasiInverseSet {
        base: f.clone(),
        members,
    }
}

/// The canonical (lexicographically least) quasi-inverse of f.
pub fn canonical_quasi_inverse(f: &UnaryMap) -> UnaryMap {
    enumerate_quasi_inverses(f).canonical().clone()
}

/// Solve f = g ∘ h for h, given ran(f) ⊆ ran(g).
///
/// The solution is h = e ∘ f for the canonical e ∈ Q(g); the range inclusion
/// is necessary, and its first failure is reported with the offending value
/// of f.
pub fn solve_right_factor(f: &UnaryMap, g: &UnaryMap) -> Result<UnaryMap> {
    let g_range = g.range();
    for (_, v) in f.entries() {
        let name = f.codomain().name_of(v);
        let in_range = g_range
            .iter()
            .any(|&gv| g.codomain().name_of(gv) == name);
        if !in_range {
            return Err(Error::RangeInclusion {
                value: name.to_string(),
                of: "f",
                outside: "ran(g)",
            });
        }
    }
    let e = canonical_quasi_inverse(g);
    let table = f
        .entries()
        .map(|(_, v)| e.apply_named(f.codomain().name_of(v)))
        .collect::<Result<Vec<Value>>>()?;
    UnaryMap::new(f.domain().clone(), e.codomain().clone(), table)
}

/// Solve F♭ = g ∘ H♭ for a tabulated H, given ran(F♭) ⊆ ran(g).
///
/// H maps into dom(g) ∪ {ε} with H(ε) = ε and H♭ = e ∘ F♭ for the canonical
/// e ∈ Q(g).
pub fn solve_right_factor_table(
    f: &TabulatedVariadic,
    g: &UnaryMap,
) -> Result<TabulatedVariadic> {
    let g_range = g.range();
    let flat_range = f.range_over(1, f.horizon());
    for &v in &flat_range {
        let name = f.codomain().name_of(v);
        let in_range = g_range
            .iter()
            .any(|&gv| g.codomain().name_of(gv) == name);
        if !in_range {
            return Err(Error::RangeInclusion {
                value: name.to_string(),
                of: "F♭",
                outside: "ran(g)",
            });
        }
    }
    let e = canonical_quasi_inverse(g);
    if g.domain().has_epsilon() {
        return Err(Error::MapShapeMismatch {
            role: "right factor",
            expected: "a map whose domain is ε-free",
        });
    }
    let carrier = crate::carrier::Carrier::new(g.domain().values().to_vec())?;
    let codomain = carrier.operation_codomain();
    let table: Vec<Value> = f
        .entries()
        .map(|(w, v)| {
            if w.is_empty() {
                Ok(Value::Epsilon)
            } else {
                e.apply_named(f.codomain().name_of(v))
            }
        })
        .collect::<Result<Vec<Value>>>()?;
    TabulatedVariadic::new(carrier, codomain, f.horizon(), table)
}

/// Brute-force oracle: filter every total map cod(f) → dom(f) through
/// [`is_quasi_inverse`]. Exponential; intended for cross-checking the
/// backtracking enumeration at small sizes.
pub fn quasi_inverses_by_filter(f: &UnaryMap) -> Vec<UnaryMap> {
    let g_domain = f.codomain().clone();
    let g_codomain = f.domain().clone();
    let dom_card = g_domain.card();
    let cod_card = g_codomain.card();
    let mut result = Vec::new();
    let mut table_ix = vec![0usize; dom_card];
    loop {
        let table: Vec<Value> = table_ix.iter().map(|&i| g_codomain.element(i)).collect();
        let g = UnaryMap::new(g_domain.clone(), g_codomain.clone(), table).unwrap();
        if is_quasi_inverse(f, &g).map(|r| r.verdict).unwrap_or(false) {
            result.push(g);
        }
        let mut carry = true;
        for slot in table_ix.iter_mut().rev() {
            if carry {
                *slot += 1;
                if *slot == cod_card {
                    *slot = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            break;
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Codomain;

    fn set(names: &[&str]) -> Codomain {
        Codomain::new(names.to_vec(), false).unwrap()
    }

    fn collapse_map() -> UnaryMap {
        // f(a) = f(b) = a, f(c) = c
        let s = set(&["a", "b", "c"]);
        UnaryMap::from_pairs(s.clone(), s, &[("a", "a"), ("b", "a"), ("c", "c")]).unwrap()
    }

    #[test]
    fn identity_is_its_own_sole_quasi_inverse() {
        let s = set(&["a", "b", "c"]);
        let id = UnaryMap::identity(&s);
        assert!(is_quasi_inverse(&id, &id).unwrap().verdict);
        let q = enumerate_quasi_inverses(&id);
        assert_eq!(q.len(), 1);
        assert_eq!(q.canonical(), &id);
    }

    #[test]
    fn collapse_map_has_exactly_four_quasi_inverses() {
        // Exhaustive count over all 27 maps {a,b,c} → {a,b,c}.
        let f = collapse_map();
        let enumerated = enumerate_quasi_inverses(&f);
        let filtered = quasi_inverses_by_filter(&f);
        assert_eq!(enumerated.len(), 4);
        assert_eq!(filtered.len(), 4);
        let mut sorted = filtered;
        sorted.sort_by_key(|g| g.lex_key());
        assert_eq!(enumerated.members(), sorted.as_slice());
    }

    #[test]
    fn collapse_example_membership() {
        let s = set(&["a", "b", "c"]);
        let f = collapse_map();
        let g_good =
            UnaryMap::from_pairs(s.clone(), s.clone(), &[("a", "b"), ("b", "b"), ("c", "c")])
                .unwrap();
        assert!(is_quasi_inverse(&f, &g_good).unwrap().verdict);
        // identity fails the range condition: ran(g|{a,c}) = {a,c} ≠ {a,b,c}
        let g_bad = UnaryMap::identity(&s);
        let report = is_quasi_inverse(&f, &g_bad).unwrap();
        assert!(!report.verdict);
        assert!(report.witness.is_some());
    }

    #[test]
    fn constant_map_has_two_quasi_inverses() {
        // f ≡ a on {a,b}: brute force over all 4 maps gives g(b) = g(a).
        let s = set(&["a", "b"]);
        let f =
            UnaryMap::from_pairs(s.clone(), s.clone(), &[("a", "a"), ("b", "a")]).unwrap();
        let q = enumerate_quasi_inverses(&f);
        assert_eq!(q.len(), 2);
        assert_eq!(quasi_inverses_by_filter(&f).len(), 2);
        for g in q.members() {
            let ga = g.apply_named("a").unwrap();
            let gb = g.apply_named("b").unwrap();
            assert_eq!(ga, gb);
        }
    }

    #[test]
    fn quasi_inverse_relation_is_symmetric() {
        let f = collapse_map();
        for g in enumerate_quasi_inverses(&f).members() {
            assert!(is_quasi_inverse(g, &f).unwrap().verdict);
        }
    }

    #[test]
    fn one_to_one_restrictions() {
        let f = collapse_map();
        for g in enumerate_quasi_inverses(&f).members() {
            let f_range: Vec<Value> = f.range().into_iter().collect();
            let g_range: Vec<Value> = g.range().into_iter().collect();
            assert!(g.is_one_to_one_on(&f_range));
            assert!(f.is_one_to_one_on(&g_range));
        }
    }

    #[test]
    fn sandwich_identities() {
        // g∘f∘g = g and f∘g∘f = f for every enumerated member.
        let f = collapse_map();
        for g in enumerate_quasi_inverses(&f).members() {
            let gfg = g.compose(&f.compose(g).unwrap()).unwrap();
            assert_eq!(&gfg, g);
            let fgf = f.compose(&g.compose(&f).unwrap()).unwrap();
            assert_eq!(fgf, f);
        }
    }

    #[test]
    fn right_factor_solves_composition() {
        let s = set(&["a", "b", "c"]);
        let g =
            UnaryMap::from_pairs(s.clone(), s.clone(), &[("a", "b"), ("b", "c"), ("c", "a")])
                .unwrap();
        let f = g.clone();
        let h = solve_right_factor(&f, &g).unwrap();
        assert_eq!(g.compose(&h).unwrap(), f);

        let constant =
            UnaryMap::from_pairs(s.clone(), s.clone(), &[("a", "a"), ("b", "a"), ("c", "a")])
                .unwrap();
        let h2 = solve_right_factor(&constant, &g).unwrap();
        assert_eq!(g.compose(&h2).unwrap(), constant);
    }

    #[test]
    fn right_factor_rejects_range_escape() {
        let s = set(&["a", "b", "c"]);
        let f = UnaryMap::identity(&s);
        let g =
            UnaryMap::from_pairs(s.clone(), s.clone(), &[("a", "a"), ("b", "a"), ("c", "a")])
                .unwrap();
        let err = solve_right_factor(&f, &g).unwrap_err();
        assert!(matches!(err, Error::RangeInclusion { .. }));
    }
}
