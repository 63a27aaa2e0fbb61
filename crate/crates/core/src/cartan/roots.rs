use std::collections::{BTreeSet, HashMap};

use super::{CartanError, CartanMatrix};

/// Refuses to enumerate more positive roots than this (E8 has 120).
const MAX_POSITIVE_ROOTS: usize = 4096;

/// Roots in simple-root coordinates. Positive roots are ordered by height,
/// then by coordinates in decreasing lexicographic order, so the first `l`
/// are the simple roots `α_1, ..., α_l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    rank: usize,
    positive: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
}

pub fn height(r: &[i64]) -> i64 {
    r.iter().sum()
}

fn root_order(a: &Vec<i64>, b: &Vec<i64>) -> std::cmp::Ordering {
    height(a).cmp(&height(b)).then_with(|| b.cmp(a))
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn positive(&self) -> &[Vec<i64>] {
        &self.positive
    }

    /// Positive roots followed by their negatives in the same order.
    pub fn roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive.clone();
        out.extend(self.positive.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        out
    }

    pub fn len(&self) -> usize {
        2 * self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }

    pub fn positive_index(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &[i64]) -> bool {
        if self.index.contains_key(r) {
            return true;
        }
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        self.index.contains_key(&neg)
    }

    pub fn simple(&self, i: usize) -> &[i64] {
        &self.positive[i]
    }

    pub fn highest(&self) -> &[i64] {
        self.positive.last().expect("nonempty root system")
    }
}

/// Positive roots by height induction: `α + α_i` is a root exactly when
/// `p - <α, α_i^∨> > 0`, with `p` the largest `k` such that `α - k α_i` is
/// a root.
pub fn roots_from_cartan(a: &CartanMatrix) -> Result<RootSystem, CartanError> {
    a.require_finite()?;
    let l = a.rank();
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut all = simple.clone();
    let mut level = simple;
    while !level.is_empty() {
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for alpha in &level {
            for i in 0..l {
                let mut p = 0;
                let mut down = alpha.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - a.pairing(alpha, i) > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next.into_iter().collect();
        for r in &level {
            known.insert(r.clone());
        }
        all.extend(level.iter().cloned());
        if all.len() > MAX_POSITIVE_ROOTS {
            return Err(CartanError::NotFiniteType);
        }
    }
    all.sort_by(root_order);
    let index = all.iter().enumerate().map(|(k, r)| (r.clone(), k)).collect();
    Ok(RootSystem { rank: l, positive: all, index })
}

/// All roots reachable from the simple roots by the reflections
/// `s_i(α) = α - <α, α_i^∨> α_i`; an independent check on
/// [`roots_from_cartan`].
pub fn reflection_closure(a: &CartanMatrix, limit: usize) -> Option<BTreeSet<Vec<i64>>> {
    let l = a.rank();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut stack: Vec<Vec<i64>> = (0..l)
        .map(|i| {
            let mut v = vec![0; l];
            v[i] = 1;
            v
        })
        .collect();
    while let Some(r) = stack.pop() {
        if !seen.insert(r.clone()) {
            continue;
        }
        if seen.len() > limit {
            return None;
        }
        for i in 0..l {
            let c = a.pairing(&r, i);
            let mut s = r.clone();
            s[i] -= c;
            if !seen.contains(&s) {
                stack.push(s);
            }
        }
    }
    Some(seen)
}

#[cfg(test)]
mod tests {
    use super::super::{catalogue, named_cartan, CartanType};
    use super::*;

    #[test]
    fn counts_match_reflection_closure() {
        for (t, l) in catalogue() {
            let a = named_cartan(t, l).unwrap();
            let rs = roots_from_cartan(&a).unwrap();
            let oracle = reflection_closure(&a, 10_000).unwrap();
            assert_eq!(rs.len(), oracle.len(), "{t}{l}");
            let mine: BTreeSet<Vec<i64>> = rs.roots().into_iter().collect();
            assert_eq!(mine, oracle, "{t}{l}");
        }
    }

    #[test]
    fn known_counts() {
        let count = |t, l| roots_from_cartan(&named_cartan(t, l).unwrap()).unwrap().len();
        assert_eq!(count(CartanType::A, 2), 6);
        assert_eq!(count(CartanType::G, 2), 12);
        assert_eq!(count(CartanType::F, 4), 48);
        assert_eq!(count(CartanType::E, 8), 240);
    }

    #[test]
    fn ordering_and_highest_root() {
        let rs = roots_from_cartan(&named_cartan(CartanType::G, 2).unwrap()).unwrap();
        assert_eq!(rs.simple(0), [1, 0]);
        assert_eq!(rs.simple(1), [0, 1]);
        assert_eq!(rs.highest(), [2, 3]);
        let e8 = roots_from_cartan(&named_cartan(CartanType::E, 8).unwrap()).unwrap();
        assert_eq!(e8.highest(), [2, 3, 4, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn rejects_affine() {
        let a = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(roots_from_cartan(&a).unwrap_err(), CartanError::NotFiniteType);
        assert!(reflection_closure(&a, 500).is_none());
    }
}
