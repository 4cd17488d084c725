//! Named lattices over a permutation group of degree `n`.

use crate::error::{Error, Result};
use crate::permgrp::PermGroup;

use super::functors::{dual, sym2, tensor, wedge2};
use super::lattice::{sign_lattice, trivial_lattice, GLattice};
use super::permlat::{aug_kernel, natural, ordered_pairs, unordered_pairs};

/// Fixture names accepted by [`fixture`].
pub const FIXTURE_NAMES: &[&str] =
    &["Z", "U", "A", "A*", "A2", "Sym2A", "Wedge2A", "Sym2U", "Wedge2U", "W", "V", "sign"];

/// Builds a named lattice over `g` from its natural action.
pub fn fixture(name: &str, g: &PermGroup) -> Result<GLattice> {
    let n = g.degree();
    let u = || natural(g);
    let a = || aug_kernel(&natural(g));
    let l = match name {
        "Z" => trivial_lattice(g, 1),
        "U" => u(),
        "A" => a()?,
        "A*" => dual(&a()?),
        "A2" => tensor(&a()?, &a()?)?,
        "Sym2A" => sym2(&a()?),
        "Wedge2A" => wedge2(&a()?),
        "Sym2U" => sym2(&u()),
        "Wedge2U" => wedge2(&u()),
        "W" => unordered_pairs(g),
        "V" => ordered_pairs(g),
        "sign" => sign_lattice(g),
        _ => return Err(Error::Parse(format!("unknown lattice '{name}'"))),
    };
    Ok(l.with_name(format!("{name}({n})")))
}

/// Parses `"Name(n)"`, returning the fixture over `S_n`.
pub fn parse_fixture(s: &str) -> Result<GLattice> {
    let (name, n) = split_fixture(s)?;
    fixture(&name, &PermGroup::symmetric(n))
}

/// Splits `"Name(n)"` into its parts.
pub fn split_fixture(s: &str) -> Result<(String, usize)> {
    let bad = || Error::Parse(format!("lattice should look like Name(n), got '{s}'"));
    let s = s.trim();
    let open = s.find('(').ok_or_else(bad)?;
    let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let n: usize = inner.trim().parse().map_err(|_| bad())?;
    let name = &s[..open];
    if !FIXTURE_NAMES.contains(&name) {
        return Err(Error::Parse(format!("unknown lattice '{name}'")));
    }
    if n == 0 {
        return Err(bad());
    }
    Ok((name.to_string(), n))
}
