//! Set families over the `n × n` grid: minimality filtering, transversality
//! tests and minimal-transversal enumeration (hypergraph dualization).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::boxes::{BoxSet, GridBox, MAX_GRID};
use crate::error::{Error, Result};

/// A finite family of box sets in the `n × n` grid.
///
/// Members are kept deduplicated and sorted lexicographically by their
/// `(row, col)`-sorted box lists; every family-returning operation in this
/// crate relies on that canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<BoxSet>,
}

impl SetFamily {
    /// Builds a family, checking that every box lies in `[n] × [n]`.
    pub fn new<I: IntoIterator<Item = BoxSet>>(n: usize, members: I) -> Result<Self> {
        if n > MAX_GRID {
            return Err(Error::GridTooLarge(n));
        }
        let members: Vec<BoxSet> = members.into_iter().collect();
        for b in members.iter().flat_map(|m| m.iter()) {
            if b.row > n || b.col > n {
                return Err(Error::OutsideGrid {
                    n,
                    row: b.row,
                    col: b.col,
                });
            }
        }
        Ok(Self::from_members(n, members))
    }

    /// Convenience constructor from plain coordinate lists.
    pub fn from_box_lists(n: usize, lists: &[&[(usize, usize)]]) -> Result<Self> {
        for &(row, col) in lists.iter().flat_map(|l| l.iter()) {
            if row == 0 || col == 0 || row > n || col > n {
                return Err(Error::OutsideGrid { n, row, col });
            }
        }
        Self::new(
            n,
            lists
                .iter()
                .map(|l| l.iter().map(|&b| GridBox::from(b)).collect()),
        )
    }

    /// Canonicalizes members already known to lie in the grid.
    pub(crate) fn from_members(n: usize, mut members: Vec<BoxSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { n, members }
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            members: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[BoxSet] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: &BoxSet) -> bool {
        self.members.binary_search(set).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BoxSet> {
        self.members.iter()
    }

    /// True when no member contains another.
    pub fn is_antichain(&self) -> bool {
        self.members.iter().enumerate().all(|(i, a)| {
            self.members
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset(b))
        })
    }

    /// Members present in exactly one of the two families.
    pub fn symmetric_difference(&self, other: &SetFamily) -> SetFamily {
        let members = self
            .members
            .iter()
            .filter(|m| !other.contains(m))
            .chain(other.members.iter().filter(|m| !self.contains(m)))
            .copied()
            .collect();
        Self::from_members(self.n.max(other.n), members)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("set family serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a BoxSet;
    type IntoIter = std::slice::Iter<'a, BoxSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// One member per line, e.g. `{(1,1), (1,3)}`; the empty family prints nothing.
impl fmt::Display for SetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in &self.members {
            writeln!(f, "{m}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyWire {
    n: usize,
    members: Vec<Vec<GridBox>>,
}

impl Serialize for SetFamily {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        FamilyWire {
            n: self.n,
            members: self.members.iter().map(|m| m.iter().collect()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetFamily {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let wire = FamilyWire::deserialize(deserializer)?;
        if wire.n > MAX_GRID {
            return Err(serde::de::Error::custom(Error::GridTooLarge(wire.n)));
        }
        let n = wire.n;
        let mut members = Vec::with_capacity(wire.members.len());
        for list in wire.members {
            let mut set = BoxSet::new();
            for b in list {
                if b.row == 0 || b.col == 0 || b.row > n || b.col > n {
                    return Err(serde::de::Error::custom(Error::OutsideGrid {
                        n,
                        row: b.row,
                        col: b.col,
                    }));
                }
                set.insert(b);
            }
            members.push(set);
        }
        Ok(SetFamily::from_members(n, members))
    }
}

/// `T` meets every member of `family` (vacuously true for the empty family).
pub fn is_transversal(t: &BoxSet, family: &SetFamily) -> bool {
    family.members.iter().all(|m| m.intersects(t))
}

/// `T` is a transversal and every `t ∈ T` has a private witness: a member
/// `S` with `S ∩ T = {t}`.
pub fn is_minimal_transversal(t: &BoxSet, family: &SetFamily) -> bool {
    if !is_transversal(t, family) {
        return false;
    }
    t.iter().all(|b| {
        family.members.iter().any(|m| {
            let hit = m.intersection(t);
            hit.len() == 1 && hit.contains(b)
        })
    })
}

/// Inclusion-minimal members of `family`.
pub fn minimalize(family: &SetFamily) -> SetFamily {
    SetFamily::from_members(family.n, minimal_sets(family.members.clone()))
}

/// Drops duplicates and every set strictly containing another.
pub(crate) fn minimal_sets(mut sets: Vec<BoxSet>) -> Vec<BoxSet> {
    sets.sort_unstable_by_key(|s| s.len());
    sets.dedup();
    let mut kept: Vec<BoxSet> = Vec::with_capacity(sets.len());
    for s in sets {
        // Sets are visited by ascending size, so any subset of `s` is
        // already in `kept` (or dominated by something that is).
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// The family of all inclusion-minimal transversals of `family`.
///
/// Berge multiplication: starting from `{∅}`, members are absorbed one at a
/// time in order of increasing size. Partial transversals already meeting
/// the new member are kept as they are; the others branch on each box of the
/// member, and a branch survives only if no kept transversal lies inside it
/// and it is not a superset of another branch.
pub fn transversal_dual(family: &SetFamily) -> SetFamily {
    let mut order: Vec<&BoxSet> = family.members.iter().collect();
    order.sort_by_key(|m| m.len());

    let mut current = vec![BoxSet::new()];
    for member in order {
        let (mut kept, missing): (Vec<BoxSet>, Vec<BoxSet>) =
            current.into_iter().partition(|t| t.intersects(member));
        if missing.is_empty() {
            current = kept;
            continue;
        }
        let mut grown: Vec<BoxSet> = Vec::new();
        for t in &missing {
            for b in member.iter() {
                let candidate = t.with(b);
                if !kept.iter().any(|k| k.is_subset(&candidate)) {
                    grown.push(candidate);
                }
            }
        }
        kept.extend(minimal_sets(grown));
        current = kept;
    }
    SetFamily::from_members(family.n, current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fam(n: usize, lists: &[&[(usize, usize)]]) -> SetFamily {
        SetFamily::from_box_lists(n, lists).unwrap()
    }

    fn set(boxes: &[(usize, usize)]) -> BoxSet {
        boxes.iter().map(|&b| GridBox::from(b)).collect()
    }

    fn a2143() -> SetFamily {
        fam(4, &[&[(1, 1)], &[(1, 3), (2, 2), (3, 1)]])
    }

    #[test]
    fn canonical_order_and_dedup() {
        let f = fam(
            4,
            &[
                &[(3, 1), (1, 1)],
                &[(1, 1)],
                &[(1, 1), (3, 1)],
                &[],
                &[(1, 1), (1, 3)],
            ],
        );
        let shown: Vec<String> = f.iter().map(|m| m.to_string()).collect();
        assert_eq!(shown, ["{}", "{(1,1)}", "{(1,1), (1,3)}", "{(1,1), (3,1)}"]);
    }

    #[test]
    fn rejects_boxes_outside_grid() {
        assert!(matches!(
            SetFamily::from_box_lists(2, &[&[(3, 1)]]),
            Err(Error::OutsideGrid {
                n: 2,
                row: 3,
                col: 1
            })
        ));
        assert!(SetFamily::from_box_lists(2, &[&[(0, 1)]]).is_err());
        assert!(matches!(
            SetFamily::new(17, []),
            Err(Error::GridTooLarge(17))
        ));
    }

    #[test]
    fn transversal_examples() {
        assert!(is_transversal(&BoxSet::new(), &SetFamily::empty(4)));
        assert!(is_transversal(&set(&[(1, 1), (2, 2)]), &a2143()));
        assert!(!is_transversal(&set(&[(2, 2)]), &a2143()));
    }

    #[test]
    fn minimal_transversal_examples() {
        assert!(is_minimal_transversal(&BoxSet::new(), &SetFamily::empty(4)));
        assert!(is_minimal_transversal(&set(&[(1, 1), (2, 2)]), &a2143()));
        assert!(!is_minimal_transversal(
            &set(&[(1, 1), (2, 2), (3, 1)]),
            &a2143()
        ));
        assert!(!is_minimal_transversal(&set(&[(2, 2)]), &a2143()));
    }

    #[test]
    fn dual_examples() {
        let dual_empty = transversal_dual(&SetFamily::empty(3));
        assert_eq!(dual_empty, SetFamily::new(3, [BoxSet::new()]).unwrap());

        let singletons = fam(3, &[&[(1, 2)], &[(2, 1)]]);
        assert_eq!(transversal_dual(&singletons), fam(3, &[&[(1, 2), (2, 1)]]));

        let rp = fam(
            4,
            &[&[(1, 1), (1, 3)], &[(1, 1), (2, 2)], &[(1, 1), (3, 1)]],
        );
        assert_eq!(transversal_dual(&a2143()), rp);
        assert_eq!(transversal_dual(&rp), a2143());
    }

    #[test]
    fn dual_of_family_containing_empty_set_is_empty() {
        let f = SetFamily::new(2, [BoxSet::new()]).unwrap();
        assert!(transversal_dual(&f).is_empty());
    }

    #[test]
    fn minimalize_examples() {
        let f = fam(3, &[&[(1, 1)], &[(1, 1), (1, 2)]]);
        assert_eq!(minimalize(&f), fam(3, &[&[(1, 1)]]));
        assert_eq!(minimalize(&a2143()), a2143());
    }

    #[test]
    fn json_shape_is_fixed() {
        let json = a2143().to_json();
        assert_eq!(json, r#"{"n":4,"members":[[[1,1]],[[1,3],[2,2],[3,1]]]}"#);
        assert_eq!(SetFamily::from_json(&json).unwrap(), a2143());
        assert_eq!(
            SetFamily::from_json(r#"{"n":0,"members":[]}"#).unwrap(),
            SetFamily::empty(0)
        );
    }

    #[test]
    fn json_errors() {
        assert!(matches!(SetFamily::from_json("{"), Err(Error::Json(_))));
        assert!(SetFamily::from_json(r#"{"n":2,"members":[[[3,1]]]}"#).is_err());
        assert!(SetFamily::from_json(r#"{"n":2,"members":[[[0,1]]]}"#).is_err());
        assert!(SetFamily::from_json(r#"{"n":2}"#).is_err());
    }

    /// Every subset of the universe, filtered to the minimal transversals.
    fn dual_by_exhaustion(family: &SetFamily, universe: &[GridBox]) -> SetFamily {
        let mut found = Vec::new();
        for mask in 0u32..(1 << universe.len()) {
            let t: BoxSet = universe
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &b)| b)
                .collect();
            if is_transversal(&t, family) {
                found.push(t);
            }
        }
        SetFamily::from_members(family.n(), minimal_sets(found))
    }

    fn arb_family() -> impl Strategy<Value = SetFamily> {
        // Universe of 9 boxes keeps the exhaustive oracle at 512 subsets.
        prop::collection::vec(
            prop::collection::btree_set((1usize..=3, 1usize..=3), 1..4),
            0..6,
        )
        .prop_map(|lists| {
            SetFamily::new(
                3,
                lists
                    .into_iter()
                    .map(|l| l.into_iter().map(GridBox::from).collect()),
            )
            .unwrap()
        })
    }

    fn universe3() -> Vec<GridBox> {
        (1..=3)
            .flat_map(|r| (1..=3).map(move |c| GridBox::new(r, c)))
            .collect()
    }

    proptest! {
        #[test]
        fn dual_matches_exhaustive_search(f in arb_family()) {
            let dual = transversal_dual(&f);
            prop_assert_eq!(&dual, &dual_by_exhaustion(&f, &universe3()));
            prop_assert!(dual.is_antichain());
            for t in &dual {
                prop_assert!(is_minimal_transversal(t, &f));
            }
        }

        #[test]
        fn double_dual_of_antichain(f in arb_family()) {
            let f = minimalize(&f);
            prop_assert_eq!(transversal_dual(&transversal_dual(&f)), f);
        }

        #[test]
        fn minimalize_is_idempotent(f in arb_family()) {
            let once = minimalize(&f);
            prop_assert!(once.is_antichain());
            prop_assert_eq!(minimalize(&once), once.clone());
        }

        #[test]
        fn json_round_trips(f in arb_family()) {
            prop_assert_eq!(SetFamily::from_json(&f.to_json()).unwrap(), f);
        }
    }
}
