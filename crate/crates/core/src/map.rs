//! Teacher and learner mappings.

use std::collections::BTreeMap;

use crate::graph::OrderedConsistencyGraph;

/// Partial injective assignment of witnesses to representations.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TeacherMap {
    assignment: Vec<Option<u32>>,
}

/// Learner side: the inverse of a [`TeacherMap`].
pub type LearnerMap = BTreeMap<u32, u32>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MapViolation {
    #[error("witness {witness} assigned to both {first} and {second}")]
    NotInjective { witness: u32, first: u32, second: u32 },
    #[error("pair ({rep}, {witness}) is not an edge")]
    NotAnEdge { rep: u32, witness: u32 },
    #[error("map covers {found} representations but the graph has {expected}")]
    SizeMismatch { expected: usize, found: usize },
}

impl TeacherMap {
    /// Empty map over `num_reps` representations.
    pub fn new(num_reps: usize) -> Self {
        TeacherMap {
            assignment: vec![None; num_reps],
        }
    }

    /// Builds a map from `(rep, witness)` pairs; later pairs overwrite
    /// earlier ones for the same rep.
    pub fn from_pairs(num_reps: usize, pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut m = TeacherMap::new(num_reps);
        for (r, w) in pairs {
            m.assign(r, w);
        }
        m
    }

    pub fn assign(&mut self, rep: u32, witness: u32) {
        let r = rep as usize;
        if r >= self.assignment.len() {
            self.assignment.resize(r + 1, None);
        }
        self.assignment[r] = Some(witness);
    }

    pub fn witness_of(&self, rep: u32) -> Option<u32> {
        self.assignment.get(rep as usize).copied().flatten()
    }

    pub fn is_assigned(&self, rep: u32) -> bool {
        self.witness_of(rep).is_some()
    }

    /// Number of representation slots (taught or not).
    pub fn num_reps(&self) -> usize {
        self.assignment.len()
    }

    /// Number of taught representations.
    pub fn len(&self) -> usize {
        self.assignment.iter().filter(|a| a.is_some()).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Assigned pairs in ascending representation order.
    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(r, w)| w.map(|w| (r as u32, w)))
    }

    pub fn invert(&self) -> LearnerMap {
        self.pairs().map(|(r, w)| (w, r)).collect()
    }

    pub fn check_injective(&self) -> Result<(), MapViolation> {
        let mut owner: BTreeMap<u32, u32> = BTreeMap::new();
        for (r, w) in self.pairs() {
            if let Some(&first) = owner.get(&w) {
                return Err(MapViolation::NotInjective {
                    witness: w,
                    first,
                    second: r,
                });
            }
            owner.insert(w, r);
        }
        Ok(())
    }

    /// Injective, and every pair is an edge of `g`.
    pub fn validate(&self, g: &OrderedConsistencyGraph) -> Result<(), MapViolation> {
        if self.assignment.len() != g.num_reps() {
            return Err(MapViolation::SizeMismatch {
                expected: g.num_reps(),
                found: self.assignment.len(),
            });
        }
        self.check_injective()?;
        for (r, w) in self.pairs() {
            if w as usize >= g.num_wits() || !g.has_edge(r, w) {
                return Err(MapViolation::NotAnEdge { rep: r, witness: w });
            }
        }
        Ok(())
    }

    /// Largest witness size used, if any pair is assigned.
    pub fn max_witness_size(&self, g: &OrderedConsistencyGraph) -> Option<u32> {
        self.pairs().map(|(_, w)| g.wit(w).size).max()
    }

    /// Largest 0-based witness index used.
    pub fn max_witness_index(&self) -> Option<u32> {
        self.pairs().map(|(_, w)| w).max()
    }
}

/// Inverse of a teacher map: witness → representation.
pub fn invert(map: &TeacherMap) -> LearnerMap {
    map.invert()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_inverts_to_empty() {
        assert!(invert(&TeacherMap::new(3)).is_empty());
    }

    #[test]
    fn injectivity_checked() {
        let m = TeacherMap::from_pairs(3, [(0, 4), (2, 4)]);
        assert_eq!(
            m.check_injective(),
            Err(MapViolation::NotInjective {
                witness: 4,
                first: 0,
                second: 2
            })
        );
    }

    #[test]
    fn round_trip() {
        let m = TeacherMap::from_pairs(4, [(0, 0), (1, 5), (3, 2)]);
        let l = m.invert();
        for (r, w) in m.pairs() {
            assert_eq!(l[&w], r);
        }
        assert_eq!(m.len(), 3);
        assert_eq!(m.max_witness_index(), Some(5));
    }
}
