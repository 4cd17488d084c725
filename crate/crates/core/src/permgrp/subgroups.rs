use std::collections::{HashSet, VecDeque};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::group::{Elements, PermGroup};
use crate::error::{Error, Result};

/// Default bound on `|G|` for subgroup enumeration.
pub const DEFAULT_SUBGROUP_CAP: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completeness {
    AllUpToConjugacy,
    UserSupplied,
}

/// A list of subgroups of `parent`.
#[derive(Debug, Clone)]
pub struct SubgroupCatalog {
    pub parent: PermGroup,
    pub members: Vec<PermGroup>,
    pub completeness: Completeness,
}

impl SubgroupCatalog {
    /// Wraps a caller-chosen list, checking membership of every generator.
    pub fn user_supplied(parent: &PermGroup, members: Vec<PermGroup>) -> Result<Self> {
        for m in &members {
            m.require_subgroup_of(parent)?;
        }
        Ok(SubgroupCatalog { parent: parent.clone(), members, completeness: Completeness::UserSupplied })
    }

    pub fn is_complete(&self) -> bool {
        self.completeness == Completeness::AllUpToConjugacy
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Hex SHA-256 over the parent generators and the member generators.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        let mut feed = |g: &PermGroup| {
            h.update(format!("deg {};", g.degree()).as_bytes());
            for p in g.generators() {
                h.update(format!("{:?};", p.images()).as_bytes());
            }
            h.update(b"|");
        };
        feed(&self.parent);
        for m in &self.members {
            feed(m);
        }
        h.update(format!("{:?}", self.completeness).as_bytes());
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

type Bits = Vec<u64>;

fn bit_set(n: usize, elems: impl IntoIterator<Item = usize>) -> Bits {
    let mut b = vec![0u64; n.div_ceil(64)];
    for i in elems {
        b[i / 64] |= 1 << (i % 64);
    }
    b
}

fn bits_iter(b: &Bits) -> impl Iterator<Item = usize> + '_ {
    b.iter().enumerate().flat_map(|(w, &x)| (0..64).filter(move |k| x >> k & 1 == 1).map(move |k| w * 64 + k))
}

fn has(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

/// Closure of a set of element indices under multiplication.
fn close(e: &Elements, gens: &[usize]) -> Bits {
    let n = e.len();
    let mut members = vec![0usize];
    let mut set = bit_set(n, [0]);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = e.mul(g, x);
            if !has(&set, y) {
                set[y / 64] |= 1 << (y % 64);
                members.push(y);
                queue.push_back(y);
            }
        }
    }
    set
}

/// Least conjugate (as a sorted index list) over all conjugators.
fn canonical(e: &Elements, set: &Bits) -> Vec<usize> {
    let members: Vec<usize> = bits_iter(set).collect();
    let mut best: Option<Vec<usize>> = None;
    for g in 0..e.len() {
        let gi = e.inverse(g);
        let mut c: Vec<usize> = members.iter().map(|&h| e.mul(e.mul(g, h), gi)).collect();
        c.sort_unstable();
        if best.as_ref().is_none_or(|b| c < *b) {
            best = Some(c);
        }
    }
    best.unwrap_or_default()
}

/// All subgroups of `g` up to conjugacy by cyclic extension: every subgroup is
/// reached from a smaller one by adjoining one element.
///
/// Members are ordered by order, then by their canonical element set.
pub fn subgroups_up_to_conjugacy(g: &PermGroup, cap: u64) -> Result<SubgroupCatalog> {
    let order = g.order()?;
    if order > cap as u128 {
        return Err(Error::cap(format!("subgroup enumeration of {}", g.label()), order as u64, cap));
    }
    let e = g.elements()?;
    let n = e.len();
    // (canonical key, element set, generator indices)
    let mut found: Vec<(Vec<usize>, Bits, Vec<usize>)> = Vec::new();
    let mut keys: HashSet<Vec<usize>> = HashSet::new();
    let triv = bit_set(n, [0]);
    keys.insert(canonical(&e, &triv));
    found.push((vec![0], triv, vec![]));
    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            let (set, gens) = (found[idx].1.clone(), found[idx].2.clone());
            for x in 0..n {
                if has(&set, x) {
                    continue;
                }
                let mut ng = gens.clone();
                ng.push(x);
                let s = close(&e, &ng);
                let key = canonical(&e, &s);
                if keys.insert(key.clone()) {
                    found.push((key, s, ng));
                    next.push(found.len() - 1);
                }
            }
        }
        frontier = next;
    }
    found.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
    let members = found
        .into_iter()
        .enumerate()
        .map(|(k, (key, _, gens))| {
            let perms = gens.iter().map(|&i| e.get(i).clone()).collect();
            g.subgroup(perms, Some(format!("{}.c{:02}.o{}", g.label(), k, key.len())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SubgroupCatalog { parent: g.clone(), members, completeness: Completeness::AllUpToConjugacy })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(subgroups_up_to_conjugacy(&PermGroup::symmetric(3), 200).unwrap().len(), 4);
        assert_eq!(subgroups_up_to_conjugacy(&PermGroup::cyclic(2), 200).unwrap().len(), 2);
        assert_eq!(subgroups_up_to_conjugacy(&PermGroup::symmetric(4), 200).unwrap().len(), 11);
        assert!(subgroups_up_to_conjugacy(&PermGroup::symmetric(6), 200).unwrap_err().is_cap());
    }

    #[test]
    fn hash_is_stable() {
        let a = subgroups_up_to_conjugacy(&PermGroup::symmetric(3), 200).unwrap();
        let b = subgroups_up_to_conjugacy(&PermGroup::symmetric(3), 200).unwrap();
        assert_eq!(a.hash(), b.hash());
        assert_eq!(a.hash().len(), 64);
    }
}
