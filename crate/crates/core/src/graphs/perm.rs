use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::GraphError;

/// Permutation of the positive integers with finite support.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: BTreeMap<u32, u32>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// Builds a permutation from disjoint cycles; singletons are allowed and ignored.
    pub fn from_cycles(cycles: &[Vec<u32>]) -> Result<Self, GraphError> {
        let mut seen = BTreeSet::new();
        let mut map = BTreeMap::new();
        for cyc in cycles {
            for &x in cyc {
                if x == 0 {
                    return Err(GraphError::Format("half-edge labels start at 1".into()));
                }
                if !seen.insert(x) {
                    return Err(GraphError::Format(format!("label {x} appears twice")));
                }
            }
            if cyc.len() > 1 {
                for (i, &x) in cyc.iter().enumerate() {
                    map.insert(x, cyc[(i + 1) % cyc.len()]);
                }
            }
        }
        Ok(Permutation { map })
    }

    pub fn cycle(elems: &[u32]) -> Self {
        Permutation::from_cycles(&[elems.to_vec()]).expect("distinct cycle entries")
    }

    pub fn transposition(a: u32, b: u32) -> Self {
        if a == b {
            Permutation::identity()
        } else {
            Permutation::cycle(&[a, b])
        }
    }

    pub fn from_map(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        let mut map = BTreeMap::new();
        for (a, b) in pairs {
            if a != b {
                map.insert(a, b);
            }
        }
        let images: BTreeSet<u32> = map.values().copied().collect();
        let domain: BTreeSet<u32> = map.keys().copied().collect();
        if images != domain {
            return Err(GraphError::Format("map is not a bijection on its support".into()));
        }
        Ok(Permutation { map })
    }

    pub fn apply(&self, x: u32) -> u32 {
        *self.map.get(&x).unwrap_or(&x)
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            map: self.map.iter().map(|(a, b)| (*b, *a)).collect(),
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        let pts: BTreeSet<u32> = self.map.keys().chain(other.map.keys()).copied().collect();
        let map = pts
            .into_iter()
            .map(|x| (x, self.apply(other.apply(x))))
            .filter(|(a, b)| a != b)
            .collect();
        Permutation { map }
    }

    /// `σ ∘ self ∘ σ⁻¹`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Self {
        Permutation {
            map: self
                .map
                .iter()
                .map(|(a, b)| (sigma.apply(*a), sigma.apply(*b)))
                .collect(),
        }
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.map.keys().copied()
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_empty()
    }

    /// Cycles through the points of `domain` (fixed points included), each starting at its minimum.
    pub fn cycles_on(&self, domain: &BTreeSet<u32>) -> Vec<Vec<u32>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &x in domain {
            if seen.contains(&x) {
                continue;
            }
            let mut cyc = vec![x];
            seen.insert(x);
            let mut y = self.apply(x);
            while y != x {
                seen.insert(y);
                cyc.push(y);
                y = self.apply(y);
            }
            out.push(cyc);
        }
        out
    }

    /// Nontrivial cycles, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let dom: BTreeSet<u32> = self.map.keys().copied().collect();
        self.cycles_on(&dom)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        for c in self.cycles() {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// The parity involution (1 2)(3 4)(5 6)…
pub fn kappa(h: u32) -> u32 {
    if h % 2 == 1 {
        h + 1
    } else {
        h - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn composition_order() {
        let a = Permutation::cycle(&[1, 2]);
        let b = Permutation::cycle(&[2, 3]);
        // a ∘ b sends 2 -> 3 -> 3 and 3 -> 2 -> 1.
        let ab = a.compose(&b);
        assert_eq!(ab.apply(3), 1);
        assert_eq!(ab.apply(2), 3);
        assert_eq!(ab.apply(1), 2);
    }

    #[test]
    fn rejects_repeated_labels() {
        assert!(Permutation::from_cycles(&[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::from_cycles(&[vec![0, 1]]).is_err());
    }

    fn perm(n: u32) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<u32>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_map(v.into_iter().enumerate().map(|(i, x)| (i as u32 + 1, x))).unwrap())
    }

    proptest! {
        #[test]
        fn group_laws(a in perm(7), b in perm(7), c in perm(7)) {
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            prop_assert!(a.compose(&a.inverse()).is_identity());
            prop_assert_eq!(b.conjugate_by(&a), a.compose(&b).compose(&a.inverse()));
        }
    }
}
