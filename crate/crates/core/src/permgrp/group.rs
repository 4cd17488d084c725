use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::perm::{cycle_type_rep, partitions, Perm};
use crate::error::{Error, Result};

/// Default bound on the number of elements an element closure may produce.
pub const DEFAULT_CLOSURE_CAP: u64 = 250_000;

/// Multiplication tables are only built up to this order.
const TABLE_LIMIT: usize = 2048;

/// Structural flag enabling membership and cycle-type fast paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Generic,
    Symmetric,
    Alternating,
}

/// Cached element closure of a group.
pub struct Elements {
    list: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// `list[i] = gens[via[i].1] * list[via[i].0]`; the identity points at itself.
    via: Vec<(usize, usize)>,
    table: OnceLock<Option<Vec<u32>>>,
    inverses: OnceLock<Vec<usize>>,
}

impl Elements {
    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn list(&self) -> &[Perm] {
        &self.list
    }

    pub fn get(&self, i: usize) -> &Perm {
        &self.list[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// BFS parent pointer: element `i` equals `generator(g) * element(parent)`.
    pub fn parent(&self, i: usize) -> (usize, usize) {
        self.via[i]
    }

    /// Word in the generators (applied right to left) giving element `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        while i != 0 {
            let (p, g) = self.via[i];
            w.push(g);
            i = p;
        }
        w
    }

    fn table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let n = self.len();
                if n > TABLE_LIMIT {
                    return None;
                }
                let mut t = vec![0u32; n * n];
                for i in 0..n {
                    for j in 0..n {
                        t[i * n + j] = self.index[&self.list[i].mul(&self.list[j])] as u32;
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    /// Index of `list[i] * list[j]`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.table() {
            Some(t) => t[i * self.len() + j] as usize,
            None => self.index[&self.list[i].mul(&self.list[j])],
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses.get_or_init(|| self.list.iter().map(|p| self.index[&p.inverse()]).collect())[i]
    }
}

impl fmt::Debug for Elements {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elements({})", self.len())
    }
}

struct Inner {
    degree: usize,
    generators: Vec<Perm>,
    name: Option<String>,
    kind: GroupKind,
    /// Closure under the default cap; `Err(lower_bound)` if it was exceeded.
    closure: OnceLock<std::result::Result<Arc<Elements>, u64>>,
    orbits: OnceLock<Vec<Vec<usize>>>,
}

/// A finite permutation group given by generators. Cheap to clone; caches
/// are shared between clones.
#[derive(Clone)]
pub struct PermGroup(Arc<Inner>);

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::with_kind(degree, generators, GroupKind::Generic, None)
    }

    pub fn named(degree: usize, generators: Vec<Perm>, name: impl Into<String>) -> Result<Self> {
        Self::with_kind(degree, generators, GroupKind::Generic, Some(name.into()))
    }

    fn with_kind(degree: usize, generators: Vec<Perm>, kind: GroupKind, name: Option<String>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::BadParams("degree must be positive".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::BadParams(format!("generator {g} has degree {} not {degree}", g.degree())));
        }
        // Identity generators only lengthen words.
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(PermGroup(Arc::new(Inner {
            degree,
            generators,
            name,
            kind,
            closure: OnceLock::new(),
            orbits: OnceLock::new(),
        })))
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![0, 1]]).unwrap());
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[(0..n).collect()]).unwrap());
        }
        Self::with_kind(n, gens, GroupKind::Symmetric, Some(format!("S{n}"))).unwrap()
    }

    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[vec![0, 1, 2]]).unwrap());
        }
        if n >= 4 {
            let c: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
            gens.push(Perm::from_cycles(n, &[c]).unwrap());
        }
        Self::with_kind(n, gens, GroupKind::Alternating, Some(format!("A{n}"))).unwrap()
    }

    /// Cyclic group generated by the `n`-cycle `(0 1 ... n-1)`.
    pub fn cyclic(n: usize) -> Self {
        let gens = if n >= 2 { vec![Perm::from_cycles(n, &[(0..n).collect()]).unwrap()] } else { vec![] };
        Self::with_kind(n, gens, GroupKind::Generic, Some(format!("C{n}"))).unwrap()
    }

    pub fn trivial(degree: usize) -> Self {
        Self::with_kind(degree, vec![], GroupKind::Generic, Some("1".into())).unwrap()
    }

    /// Group from 1-based cycle notation, one list of cycles per generator.
    pub fn from_cycles_1based(degree: usize, gens: &[Vec<Vec<usize>>], name: Option<String>) -> Result<Self> {
        let gens = gens.iter().map(|c| Perm::from_cycles_1based(degree, c)).collect::<Result<Vec<_>>>()?;
        Self::with_kind(degree, gens, GroupKind::Generic, name)
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        Self::with_kind(self.degree(), self.generators().to_vec(), self.kind(), Some(name.into())).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.generators
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    pub fn kind(&self) -> GroupKind {
        self.0.kind
    }

    pub fn label(&self) -> String {
        match self.name() {
            Some(n) => n.to_string(),
            None => {
                let g: Vec<String> = self.generators().iter().map(|p| p.to_string()).collect();
                format!("<{}>", g.join(", "))
            }
        }
    }

    /// Same generators on the same points.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.degree() == other.degree() && self.generators() == other.generators())
    }

    /// Group order when known without a closure.
    pub fn known_order(&self) -> Option<u128> {
        let n = self.degree() as u128;
        let fact = (1..=n).try_fold(1u128, |a, b| a.checked_mul(b));
        match self.kind() {
            GroupKind::Symmetric => fact,
            GroupKind::Alternating => fact.map(|f| if n >= 2 { f / 2 } else { 1 }),
            GroupKind::Generic => None,
        }
    }

    /// Element closure under the default cap.
    pub fn elements(&self) -> Result<Arc<Elements>> {
        self.close_elements(DEFAULT_CLOSURE_CAP)
    }

    /// Full element list: identity first, then by word length, ties broken by
    /// lexicographic images.
    pub fn close_elements(&self, cap: u64) -> Result<Arc<Elements>> {
        if let Some(o) = self.known_order() {
            if o > cap as u128 {
                return Err(Error::cap(format!("closure of {}", self.label()), o.min(u64::MAX as u128) as u64, cap));
            }
        }
        if cap > DEFAULT_CLOSURE_CAP {
            return bfs_closure(self.degree(), self.generators(), cap)
                .map(Arc::new)
                .map_err(|n| Error::cap(format!("closure of {}", self.label()), n, cap));
        }
        let cached = self.0.closure.get_or_init(|| {
            bfs_closure(self.degree(), self.generators(), DEFAULT_CLOSURE_CAP).map(Arc::new)
        });
        match cached {
            Ok(e) if e.len() as u64 <= cap => Ok(e.clone()),
            Ok(e) => Err(Error::cap(format!("closure of {}", self.label()), e.len() as u64, cap)),
            Err(n) => Err(Error::cap(format!("closure of {}", self.label()), *n, cap)),
        }
    }

    pub fn order(&self) -> Result<u128> {
        match self.known_order() {
            Some(o) => Ok(o),
            None => Ok(self.elements()?.len() as u128),
        }
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree() {
            return Ok(false);
        }
        match self.kind() {
            GroupKind::Symmetric => Ok(true),
            GroupKind::Alternating => Ok(p.is_even()),
            GroupKind::Generic => Ok(self.elements()?.index_of(p).is_some()),
        }
    }

    /// Checks that every generator of `self` lies in `parent`.
    pub fn is_subgroup_of(&self, parent: &PermGroup) -> Result<bool> {
        if self.degree() != parent.degree() {
            return Ok(false);
        }
        for g in self.generators() {
            if !parent.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn require_subgroup_of(&self, parent: &PermGroup) -> Result<()> {
        if self.is_subgroup_of(parent)? {
            Ok(())
        } else {
            Err(Error::NotSubgroup(format!("{} is not contained in {}", self.label(), parent.label())))
        }
    }

    /// Orbits on points, each sorted, ordered by least element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        self.0.orbits.get_or_init(|| {
            let n = self.degree();
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], mut x: usize) -> usize {
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for g in self.generators() {
                for i in 0..n {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
            let mut groups: Vec<Vec<usize>> = Vec::new();
            let mut slot = vec![usize::MAX; n];
            for i in 0..n {
                let r = find(&mut parent, i);
                if slot[r] == usize::MAX {
                    slot[r] = groups.len();
                    groups.push(Vec::new());
                }
                groups[slot[r]].push(i);
            }
            groups
        })
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.orbits().iter().map(|o| o.len()).collect()
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Subgroup generated by the given elements (checked to lie in `self`).
    pub fn subgroup(&self, gens: Vec<Perm>, name: Option<String>) -> Result<PermGroup> {
        for g in &gens {
            if !self.contains(g)? {
                return Err(Error::NotSubgroup(format!("{g} is not in {}", self.label())));
            }
        }
        Self::with_kind(self.degree(), gens, GroupKind::Generic, name)
    }

    /// One generator per distinct cyclic subgroup, the trivial subgroup first.
    ///
    /// Uses the element closure when it fits under `cap`; for symmetric and
    /// alternating groups beyond that it falls back to one representative
    /// per (even) cycle type.
    pub fn cyclic_subgroup_reps(&self, cap: u64) -> Result<Vec<PermGroup>> {
        match self.close_elements(cap) {
            Ok(e) => Ok(self.cyclic_reps_from_closure(&e)),
            Err(err) => match self.kind() {
                GroupKind::Generic => Err(err),
                _ => Ok(self.cycle_type_reps()),
            },
        }
    }

    fn cyclic_reps_from_closure(&self, e: &Elements) -> Vec<PermGroup> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for g in e.list() {
            let mut set: Vec<usize> = Vec::new();
            let mut x = Perm::identity(self.degree());
            loop {
                set.push(e.index_of(&x).expect("closed"));
                x = g.mul(&x);
                if x.is_identity() {
                    break;
                }
            }
            set.sort_unstable();
            if seen.insert(set) {
                let name = if g.is_identity() { "1".to_string() } else { format!("<{g}>") };
                out.push(Self::with_kind(self.degree(), vec![g.clone()], GroupKind::Generic, Some(name)).unwrap());
            }
        }
        out
    }

    /// One cyclic subgroup per cycle type (even types only for alternating groups).
    pub fn cycle_type_reps(&self) -> Vec<PermGroup> {
        let n = self.degree();
        partitions(n)
            .into_iter()
            .rev()
            .map(|lam| cycle_type_rep(n, &lam))
            .filter(|g| self.kind() != GroupKind::Alternating || g.is_even())
            .map(|g| {
                let name = if g.is_identity() { "1".to_string() } else { format!("<{g}>") };
                Self::with_kind(n, vec![g], GroupKind::Generic, Some(name)).unwrap()
            })
            .collect()
    }
}

fn bfs_closure(degree: usize, gens: &[Perm], cap: u64) -> std::result::Result<Elements, u64> {
    let id = Perm::identity(degree);
    let mut list = vec![id.clone()];
    let mut index = HashMap::new();
    index.insert(id, 0usize);
    let mut via = vec![(0usize, 0usize)];
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next: Vec<(Perm, usize, usize)> = Vec::new();
        for &i in &layer {
            for (k, s) in gens.iter().enumerate() {
                let p = s.mul(&list[i]);
                if !index.contains_key(&p) {
                    next.push((p, i, k));
                }
            }
        }
        next.sort();
        next.dedup_by(|a, b| a.0 == b.0);
        layer.clear();
        for (p, parent, k) in next {
            if list.len() as u64 >= cap {
                return Err(cap + 1);
            }
            index.insert(p.clone(), list.len());
            layer.push(list.len());
            list.push(p);
            via.push((parent, k));
        }
    }
    Ok(Elements { list, index, via, table: OnceLock::new(), inverses: OnceLock::new() })
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup({} on {} points)", self.label(), self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_orders() {
        assert_eq!(PermGroup::symmetric(3).elements().unwrap().len(), 6);
        assert_eq!(PermGroup::trivial(4).elements().unwrap().len(), 1);
        assert_eq!(PermGroup::alternating(5).elements().unwrap().len(), 60);
        let s4 = PermGroup::new(4, PermGroup::symmetric(4).generators().to_vec()).unwrap();
        assert_eq!(s4.elements().unwrap().len(), 24);
        assert!(s4.close_elements(10).unwrap_err().is_cap());
    }

    #[test]
    fn closure_order_is_bfs_then_lex() {
        let e = PermGroup::symmetric(3).elements().unwrap();
        assert!(e.get(0).is_identity());
        let words: Vec<usize> = (0..e.len()).map(|i| e.word(i).len()).collect();
        assert!(words.windows(2).all(|w| w[0] <= w[1]));
        for i in 0..e.len() {
            let mut p = Perm::identity(3);
            for &g in e.word(i).iter().rev() {
                p = PermGroup::symmetric(3).generators()[g].mul(&p);
            }
            assert_eq!(&p, e.get(i));
        }
    }

    #[test]
    fn orbit_example() {
        let g = PermGroup::from_cycles_1based(6, &[vec![vec![1, 2], vec![3, 4]], vec![vec![1, 2], vec![5, 6]]], None)
            .unwrap();
        assert_eq!(g.orbits(), &[vec![0, 1], vec![2, 3], vec![4, 5]]);
        assert!(PermGroup::cyclic(9).is_transitive());
        assert_eq!(PermGroup::trivial(3).orbit_sizes(), vec![1, 1, 1]);
    }

    #[test]
    fn cyclic_reps() {
        let v4 = PermGroup::from_cycles_1based(4, &[vec![vec![1, 2], vec![3, 4]], vec![vec![1, 3], vec![2, 4]]], None)
            .unwrap();
        assert_eq!(v4.cyclic_subgroup_reps(1000).unwrap().len(), 4);
        // S3: trivial, three of order 2, one of order 3.
        assert_eq!(PermGroup::symmetric(3).cyclic_subgroup_reps(1000).unwrap().len(), 5);
        // A8 beyond the cap: even cycle types of 8.
        let reps = PermGroup::alternating(8).cyclic_subgroup_reps(1000).unwrap();
        let even = partitions(8).into_iter().filter(|l| l.iter().map(|x| x - 1).sum::<usize>() % 2 == 0).count();
        assert_eq!(reps.len(), even);
    }
}
