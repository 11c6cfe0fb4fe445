//! Crossed-inverse identities.
//!
//! A table is *left CI* for a map `J_r` when `(x · y) · J_r(x) = y` for all
//! `x, y`, and *right CI* for `J_l` when `J_l(x) · (y · x) = y`. The maps are
//! taken as arbitrary [`TotalMap`]s; bijectivity is checked, never assumed.

use std::fmt;

use serde::Serialize;

use crate::algebra::{
    check_element, check_orders, compose, identity_element, invert_map, is_automorphism,
    is_bijective, is_left_quasigroup, is_quasigroup, is_right_quasigroup, left_translation,
    right_translation, CayleyTable, Element, TotalMap,
};
use crate::error::{Error, Result};

/// `(x · y) · j(x) = y` for all `x, y`.
pub fn check_left_ci(t: &CayleyTable, j: &TotalMap) -> Result<bool> {
    check_orders(t.order(), j.order())?;
    Ok(left_ci_holds(t, j))
}

/// Unchecked form of [`check_left_ci`] for callers that already matched orders.
pub(crate) fn left_ci_holds(t: &CayleyTable, j: &TotalMap) -> bool {
    let n = t.order();
    (0..n).all(|x| {
        let jx = j.apply(x);
        (0..n).all(|y| t.get(t.get(x, y), jx) == y)
    })
}

/// `j(x) · (y · x) = y` for all `x, y`.
pub fn check_right_ci(t: &CayleyTable, j: &TotalMap) -> Result<bool> {
    check_orders(t.order(), j.order())?;
    let n = t.order();
    Ok((0..n).all(|x| {
        let jx = j.apply(x);
        (0..n).all(|y| t.get(jx, t.get(y, x)) == y)
    }))
}

/// `R_{j(x)} ∘ L_x = ε`, evaluated through explicit translation maps.
pub fn translation_form_holds(t: &CayleyTable, j: &TotalMap, x: Element) -> Result<bool> {
    check_orders(t.order(), j.order())?;
    check_element(t, x)?;
    let composed = compose(&right_translation(t, j.apply(x)), &left_translation(t, x))?;
    Ok(composed.is_identity())
}

/// Collects, for each `x`, every `z` with `accept(x, z)`; distinguishes
/// "some `x` has no candidate" from "some `x` has several".
fn derive_unique(n: usize, accept: impl Fn(Element, Element) -> bool) -> Result<Option<TotalMap>> {
    let candidates: Vec<Vec<Element>> = (0..n)
        .map(|x| (0..n).filter(|&z| accept(x, z)).collect())
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    if let Some((element, c)) = candidates.iter().enumerate().find(|(_, c)| c.len() > 1) {
        return Err(Error::AmbiguousJ {
            element,
            candidates: c.clone(),
        });
    }
    Ok(Some(TotalMap::from_raw(
        candidates.into_iter().map(|c| c[0]).collect(),
    )))
}

/// The map `J_r` for which the table is left CI, if it exists.
///
/// Returns `Ok(None)` when some `x` admits no `z` with `(x · y) · z = y` for
/// every `y`, and [`Error::AmbiguousJ`] when every `x` admits one but some
/// admits several.
pub fn derive_right_j(t: &CayleyTable) -> Result<Option<TotalMap>> {
    let n = t.order();
    derive_unique(n, |x, z| (0..n).all(|y| t.get(t.get(x, y), z) == y))
}

/// The map `J_l` for which the table is right CI, if it exists.
pub fn derive_left_j(t: &CayleyTable) -> Result<Option<TotalMap>> {
    let n = t.order();
    derive_unique(n, |x, w| (0..n).all(|y| t.get(w, t.get(y, x)) == y))
}

/// The unique solution of `a · x = b` in a left CI table: `x = b · j(a)`.
///
/// Verifies the left CI identity first (`O(n²)`); hot paths should use
/// [`solve_left_unchecked`].
pub fn solve_left(t: &CayleyTable, j: &TotalMap, a: Element, b: Element) -> Result<Element> {
    check_element(t, a)?;
    check_element(t, b)?;
    if !check_left_ci(t, j)? {
        return Err(Error::PreconditionViolated(
            "table is not left CI for the given map",
        ));
    }
    Ok(solve_left_unchecked(t, j, a, b))
}

#[inline]
pub fn solve_left_unchecked(t: &CayleyTable, j: &TotalMap, a: Element, b: Element) -> Element {
    t.get(b, j.apply(a))
}

/// CI-loop properties of `j`: `x · j(x) = e` for all `x`, and `j` is
/// an automorphism.
pub fn ci_loop_report(t: &CayleyTable, j: &TotalMap) -> Result<(bool, bool)> {
    let e = identity_element(t).ok_or(Error::NotALoop)?;
    if !check_left_ci(t, j)? {
        return Err(Error::PreconditionViolated(
            "table is not left CI for the given map",
        ));
    }
    let inverse_property = (0..t.order()).all(|x| t.get(x, j.apply(x)) == e);
    Ok((inverse_property, is_automorphism(t, j)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    NotLeftCi,
    CiQuasigroup,
    CiLoop,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NotLeftCi => "NOT_LEFT_CI",
            Classification::CiQuasigroup => "CI_QUASIGROUP",
            Classification::CiLoop => "CI_LOOP",
        }
    }

    pub fn is_ci(self) -> bool {
        self != Classification::NotLeftCi
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Classification certificate for one table.
///
/// The loop-only flags are `None` unless the table is a CI-loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CiReport {
    pub order: usize,
    pub is_left_quasigroup: bool,
    pub is_right_quasigroup: bool,
    pub is_quasigroup: bool,
    pub jr: Option<TotalMap>,
    pub jl: Option<TotalMap>,
    pub jr_is_bijective: bool,
    pub jl_equals_jr_inverse: bool,
    pub loop_identity: Option<Element>,
    pub x_times_jx_is_identity: Option<bool>,
    pub j_is_automorphism: Option<bool>,
    pub classification: Classification,
}

impl CiReport {
    pub fn is_loop(&self) -> bool {
        self.is_quasigroup && self.loop_identity.is_some()
    }
}

pub fn classify(t: &CayleyTable) -> Result<CiReport> {
    let is_left = is_left_quasigroup(t);
    let is_right = is_right_quasigroup(t);
    let is_quasi = is_left && is_right;
    let loop_identity = identity_element(t);
    let mut report = CiReport {
        order: t.order(),
        is_left_quasigroup: is_left,
        is_right_quasigroup: is_right,
        is_quasigroup: is_quasi,
        jr: None,
        jl: None,
        jr_is_bijective: false,
        jl_equals_jr_inverse: false,
        loop_identity,
        x_times_jx_is_identity: None,
        j_is_automorphism: None,
        classification: Classification::NotLeftCi,
    };
    let Some(jr) = derive_right_j(t)? else {
        return Ok(report);
    };
    let jl = derive_left_j(t)?;
    report.jr_is_bijective = is_bijective(&jr);
    report.jl_equals_jr_inverse = match (&jl, invert_map(&jr)) {
        (Some(jl), Ok(inv)) => jl == inv.as_map(),
        _ => false,
    };
    if !is_quasi {
        return Err(Error::DerivedPropertyViolated(
            "left CI table is not a quasigroup",
        ));
    }
    if !report.jr_is_bijective {
        return Err(Error::DerivedPropertyViolated(
            "J_r of a left CI table is not bijective",
        ));
    }
    report.classification = match loop_identity {
        Some(_) => {
            let (inverse_property, automorphism) = ci_loop_report(t, &jr)?;
            report.x_times_jx_is_identity = Some(inverse_property);
            report.j_is_automorphism = Some(automorphism);
            Classification::CiLoop
        }
        None => Classification::CiQuasigroup,
    };
    report.jr = Some(jr);
    report.jl = jl;
    debug_assert!(!report.classification.is_ci() || is_quasigroup(t));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2() -> CayleyTable {
        CayleyTable::cyclic_group(2).unwrap()
    }
    fn z3() -> CayleyTable {
        CayleyTable::cyclic_group(3).unwrap()
    }
    fn diff3() -> CayleyTable {
        CayleyTable::from_fn(3, |x, y| (y + 3 - x) % 3).unwrap()
    }
    fn constant2() -> CayleyTable {
        CayleyTable::new(2, vec![0; 4]).unwrap()
    }
    fn trivial() -> CayleyTable {
        CayleyTable::new(1, vec![0]).unwrap()
    }
    fn map(v: &[usize]) -> TotalMap {
        TotalMap::new(v.to_vec()).unwrap()
    }

    #[test]
    fn left_ci_examples() {
        assert!(check_left_ci(&z2(), &map(&[0, 1])).unwrap());
        assert!(check_left_ci(&z3(), &map(&[0, 2, 1])).unwrap());
        assert!(!check_left_ci(&z2(), &map(&[1, 0])).unwrap());
        assert_eq!(
            check_left_ci(&z2(), &map(&[0, 1, 2])),
            Err(Error::OrderMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn right_ci_examples() {
        assert!(check_right_ci(&z3(), &map(&[0, 2, 1])).unwrap());
        assert!(check_right_ci(&z2(), &map(&[0, 1])).unwrap());
        assert!(!check_right_ci(&z3(), &map(&[1, 2, 0])).unwrap());
    }

    #[test]
    fn translation_form_examples() {
        assert!(translation_form_holds(&z3(), &map(&[0, 2, 1]), 1).unwrap());
        assert!(!translation_form_holds(&z2(), &map(&[1, 0]), 0).unwrap());
        assert!(translation_form_holds(&trivial(), &map(&[0]), 0).unwrap());
        assert!(matches!(
            translation_form_holds(&z2(), &map(&[0, 1]), 2),
            Err(Error::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn derive_examples() {
        assert_eq!(derive_right_j(&z3()).unwrap(), Some(map(&[0, 2, 1])));
        assert_eq!(derive_right_j(&diff3()).unwrap(), None);
        assert_eq!(derive_right_j(&constant2()).unwrap(), None);
        assert_eq!(derive_left_j(&z3()).unwrap(), Some(map(&[0, 2, 1])));
        assert_eq!(derive_left_j(&constant2()).unwrap(), None);
        assert_eq!(derive_left_j(&trivial()).unwrap(), Some(map(&[0])));
    }

    #[test]
    fn solve_left_examples() {
        let j = map(&[0, 2, 1]);
        assert_eq!(solve_left(&z3(), &j, 1, 0).unwrap(), 2);
        assert_eq!(z3().get(1, 2), 0);
        assert_eq!(solve_left(&z2(), &map(&[0, 1]), 0, 1).unwrap(), 1);
        for b in 0..3 {
            assert_eq!(solve_left(&z3(), &j, 0, b).unwrap(), b);
        }
        assert!(matches!(
            solve_left(&z2(), &map(&[1, 0]), 0, 1),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn loop_report_examples() {
        assert_eq!(
            ci_loop_report(&z3(), &map(&[0, 2, 1])).unwrap(),
            (true, true)
        );
        assert_eq!(ci_loop_report(&z2(), &map(&[0, 1])).unwrap(), (true, true));
        assert_eq!(
            ci_loop_report(&trivial(), &map(&[0])).unwrap(),
            (true, true)
        );
        assert_eq!(
            ci_loop_report(&diff3(), &map(&[0, 1, 2])),
            Err(Error::NotALoop)
        );
    }

    #[test]
    fn classify_z3() {
        let r = classify(&z3()).unwrap();
        assert_eq!(r.classification, Classification::CiLoop);
        assert_eq!(r.jr, Some(map(&[0, 2, 1])));
        assert_eq!(r.jl, Some(map(&[0, 2, 1])));
        assert_eq!(r.loop_identity, Some(0));
        assert_eq!(r.x_times_jx_is_identity, Some(true));
        assert_eq!(r.j_is_automorphism, Some(true));
        assert!(r.jr_is_bijective && r.jl_equals_jr_inverse && r.is_quasigroup && r.is_loop());
    }

    #[test]
    fn classify_non_ci() {
        let r = classify(&diff3()).unwrap();
        assert_eq!(r.classification, Classification::NotLeftCi);
        assert!(r.is_quasigroup);
        assert_eq!(r.loop_identity, None);
        assert_eq!(r.jr, None);

        let r = classify(&constant2()).unwrap();
        assert_eq!(r.classification, Classification::NotLeftCi);
        assert!(!r.is_quasigroup && !r.is_left_quasigroup && !r.is_right_quasigroup);
    }

    #[test]
    fn classify_ci_quasigroup_without_identity() {
        // x·y = 2x + 2y over Z3 is left CI with J = id and has no identity
        let t = CayleyTable::from_fn(3, |x, y| (2 * x + 2 * y) % 3).unwrap();
        let r = classify(&t).unwrap();
        assert_eq!(r.classification, Classification::CiQuasigroup);
        assert_eq!(r.jr, Some(map(&[0, 1, 2])));
        assert_eq!(r.loop_identity, None);
        assert_eq!(r.x_times_jx_is_identity, None);
    }

    #[test]
    fn classify_loop_with_nonzero_identity() {
        // x·y = x + y + 1 over Z2 has identity 1
        let t = CayleyTable::new(2, vec![1, 0, 0, 1]).unwrap();
        let r = classify(&t).unwrap();
        assert_eq!(r.classification, Classification::CiLoop);
        assert_eq!(r.loop_identity, Some(1));
        assert_eq!(r.jr, Some(map(&[0, 1])));
    }

    #[test]
    fn no_candidate_wins_over_ambiguity() {
        // Neither row admits a candidate: row 1 is constant.
        let t = CayleyTable::new(2, vec![0, 1, 0, 0]).unwrap();
        assert_eq!(derive_right_j(&t).unwrap(), None);
        assert_eq!(derive_left_j(&t).unwrap(), None);
    }

    #[test]
    fn ambiguity_never_fires_on_any_order_two_table() {
        // Two candidates z1, z2 for x force columns z1 and z2 to coincide,
        // which contradicts injectivity of row x.
        for code in 0..16usize {
            let entries = (0..4).map(|i| (code >> i) & 1).collect();
            let t = CayleyTable::new(2, entries).unwrap();
            assert!(derive_right_j(&t).is_ok());
            assert!(derive_left_j(&t).is_ok());
        }
    }
}
