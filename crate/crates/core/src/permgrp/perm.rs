use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, ..., degree-1}` stored by images.
///
/// Products compose right to left: `(a * b)(i) = a(b(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::BadParams(format!("images {images:?} are not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Perm { images: images.into_iter().map(|i| i as u32).collect() })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for c in cycles {
            for (k, &p) in c.iter().enumerate() {
                if p >= degree || touched[p] {
                    return Err(Error::BadParams(format!("bad cycle {c:?} for degree {degree}")));
                }
                touched[p] = true;
                images[p] = c[(k + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    /// Builds a permutation from 1-based cycles (the notation used on the command line).
    pub fn from_cycles_1based(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut zero = Vec::with_capacity(cycles.len());
        for c in cycles {
            if c.contains(&0) {
                return Err(Error::BadParams("1-based cycle contains 0".into()));
            }
            zero.push(c.iter().map(|&p| p - 1).collect());
        }
        Self::from_cycles(degree, &zero)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize).collect()
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn mul(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm { images: other.images.iter().map(|&i| self.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn pow(&self, k: i64) -> Perm {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Perm::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            out = base.mul(&out);
        }
        out
    }

    /// `self * g * self^-1`
    pub fn conjugate(&self, g: &Perm) -> Perm {
        self.mul(g).mul(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.apply(s);
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.apply(j);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = t.iter().sum();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        use num_integer::Integer;
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn sign(&self) -> i64 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &j)| i as u32 == j).count()
    }

    /// 1-based cycles, as accepted by [`Perm::from_cycles_1based`].
    pub fn cycles_1based(&self) -> Vec<Vec<usize>> {
        self.cycles().into_iter().map(|c| c.into_iter().map(|p| p + 1).collect()).collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles_1based();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A permutation with the given cycle type (lengths in any order), using
/// consecutive points for consecutive cycles.
pub fn cycle_type_rep(degree: usize, lengths: &[usize]) -> Perm {
    let mut cycles = Vec::new();
    let mut start = 0;
    for &l in lengths {
        cycles.push((start..start + l).collect::<Vec<_>>());
        start += l;
    }
    assert!(start <= degree);
    Perm::from_cycles(degree, &cycles).expect("disjoint cycles")
}

/// Partitions of `n` in decreasing-part order, listed in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=max.min(n)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::from_cycles(3, &[vec![0, 1]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        // a(b(1)) = a(2) = 2
        assert_eq!(a.mul(&b).apply(1), 2);
        assert_eq!(a.mul(&a), Perm::identity(3));
        assert_eq!(format!("{}", a.mul(&b)), "(1,2,3)");
    }

    #[test]
    fn cycle_data() {
        let p = Perm::from_cycles_1based(6, &[vec![1, 2, 3], vec![4, 5]]).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
        assert_eq!(p.pow(6), Perm::identity(6));
        assert_eq!(p.pow(-1), p.inverse());
        assert_eq!(partitions(4).len(), 5);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Perm::from_cycles_1based(3, &[vec![0, 1]]).is_err());
    }
}
