use serde::{Deserialize, Serialize};

use crate::permgrp::{DEFAULT_CLOSURE_CAP, DEFAULT_SUBGROUP_CAP};

/// Size limits shared by the cohomology engine, catalogs and reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Largest group order for bar-complex H^1.
    pub bar_h1: u64,
    /// Largest group order for bar-complex H^2.
    pub bar_h2: u64,
    /// Largest element closure.
    pub closure: u64,
    /// Largest subgroup catalog.
    pub subgroups: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { bar_h1: 192, bar_h2: 24, closure: DEFAULT_CLOSURE_CAP, subgroups: DEFAULT_SUBGROUP_CAP }
    }
}

impl Caps {
    pub fn bar(&self, degree: usize) -> u64 {
        if degree <= 1 {
            self.bar_h1
        } else {
            self.bar_h2
        }
    }
}
