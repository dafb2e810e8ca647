//! A finite model of quasi-sets: collections of atoms that carry a kind
//! and a count but no individual identity. Equality of the stored maps is
//! the model's indistinguishability relation; there is deliberately no
//! datum that could distinguish two atoms of the same kind, so "which
//! one" is unaskable by construction.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::state::{Mode, OccupationState};

/// A classically distinguishable species of atom ("electron", "photon").
/// Kinds live in the classical part of the model and have ordinary
/// identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AtomKind(String);

impl AtomKind {
    pub fn new(label: impl Into<String>) -> Self {
        AtomKind(label.into())
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for AtomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A pure finite quasi-set: kind -> quasi-cardinal, no zero counts.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QSet {
    counts: BTreeMap<AtomKind, u64>,
}

impl QSet {
    pub fn empty() -> Self {
        QSet::default()
    }

    /// Accumulates the given pairs; zero counts contribute nothing.
    pub fn from_counts(pairs: &[(AtomKind, u64)]) -> Self {
        let mut counts = BTreeMap::new();
        for (kind, n) in pairs {
            if *n > 0 {
                *counts.entry(kind.clone()).or_insert(0) += n;
            }
        }
        QSet { counts }
    }

    pub fn count_of(&self, kind: &AtomKind) -> u64 {
        self.counts.get(kind).copied().unwrap_or(0)
    }

    pub fn kinds(&self) -> impl Iterator<Item = (&AtomKind, u64)> {
        self.counts.iter().map(|(k, &n)| (k, n))
    }

    /// Weak extensionality: two quasi-sets with the same quantity of each
    /// sort are indistinguishable. In this model that is map equality.
    pub fn indistinguishable(&self, other: &QSet) -> bool {
        self == other
    }

    /// The quasi-cardinal: how many, with no answer to "which".
    pub fn qcard(&self) -> u64 {
        self.counts.values().sum()
    }

    /// (self - [[z]]) union [[w]]: swap one atom of kind `z` for one of
    /// kind `w`.
    pub fn replace(&self, z: &AtomKind, w: &AtomKind) -> Result<QSet, Error> {
        if self.count_of(z) == 0 {
            return Err(Error::AbsentKind(z.label().to_string()));
        }
        let mut counts = self.counts.clone();
        match counts.get_mut(z) {
            Some(n) if *n > 1 => *n -= 1,
            _ => {
                counts.remove(z);
            }
        }
        *counts.entry(w.clone()).or_insert(0) += 1;
        QSet { counts }.checked()
    }

    fn checked(self) -> Result<QSet, Error> {
        debug_assert!(self.counts.values().all(|&n| n > 0));
        Ok(self)
    }
}

impl fmt::Display for QSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (kind, n)) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{kind}:{n}")?;
        }
        write!(f, "}}")
    }
}

/// The strong singleton [[z]]: quasi-cardinal 1, element indistinguishable
/// from any atom of kind `z`.
pub fn strong_singleton(kind: &AtomKind) -> QSet {
    QSet::from_counts(&[(kind.clone(), 1)])
}

/// The fiber of an occupation state over one mode, as a pure quasi-set of
/// a single kind. The bridge preserves the count: qcard equals the
/// occupation number.
pub fn mode_fiber(f: &OccupationState, k: Mode) -> QSet {
    QSet::from_counts(&[(AtomKind::new("quantum"), f.count(k) as u64)])
}
