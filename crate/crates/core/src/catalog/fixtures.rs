//! Shipped group data, validated on load.
//!
//! The exceptional linear groups are not given by closed formulas; each is
//! accepted only if its order and orbit sizes on the natural module match.

use crate::error::{Error, Result};
use crate::matgroup::MatGroup;
use crate::permgroup::PermGroup;

use super::parse::{parse_mat_group, parse_perm_group};

/// Permutation-group fixtures by file stem.
pub const PERM_FIXTURES: &[(&str, &str)] = &[
    (
        "agaml1_8",
        include_str!("../../../../fixtures/agaml1_8.pgrp"),
    ),
    ("agl3_2", include_str!("../../../../fixtures/agl3_2.pgrp")),
    (
        "c2_wr_d10",
        include_str!("../../../../fixtures/c2_wr_d10.pgrp"),
    ),
    ("d10", include_str!("../../../../fixtures/d10.pgrp")),
    ("m11", include_str!("../../../../fixtures/m11.pgrp")),
    ("m11_12", include_str!("../../../../fixtures/m11_12.pgrp")),
    ("m23", include_str!("../../../../fixtures/m23.pgrp")),
];

pub fn perm_fixture(name: &str) -> Result<PermGroup> {
    let (_, text) = PERM_FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no permutation fixture {:?}", name)))?;
    parse_perm_group(text).map_err(|e| Error::Fixture {
        name: name.to_string(),
        msg: e.to_string(),
    })
}

/// A linear group with its recorded order and orbit sizes.
#[derive(Clone, Copy, Debug)]
pub struct LinearFixture {
    pub name: &'static str,
    pub text: &'static str,
    pub order: u64,
    pub orbit_sizes: &'static [u64],
    /// Needs the vector bound raised above its default.
    pub large: bool,
}

pub const LINEAR_FIXTURES: &[LinearFixture] = &[
    LinearFixture {
        name: "sl2_5_gl4_3",
        text: include_str!("../../../../fixtures/sl2_5_gl4_3.mgrp"),
        order: 120,
        orbit_sizes: &[1, 40, 40],
        large: false,
    },
    LinearFixture {
        name: "psl2_11_gl5_3",
        text: include_str!("../../../../fixtures/psl2_11_gl5_3.mgrp"),
        order: 1320,
        orbit_sizes: &[1, 22, 110, 110],
        large: false,
    },
    LinearFixture {
        name: "m11_gl5_3",
        text: include_str!("../../../../fixtures/m11_gl5_3.mgrp"),
        order: 7920,
        orbit_sizes: &[1, 22, 220],
        large: false,
    },
    LinearFixture {
        name: "m23_gl11_2",
        text: include_str!("../../../../fixtures/m23_gl11_2.mgrp"),
        order: 10_200_960,
        orbit_sizes: &[1, 23, 253, 1771],
        large: true,
    },
    LinearFixture {
        name: "gl2_2_wr_s3_gl6_2",
        text: include_str!("../../../../fixtures/gl2_2_wr_s3_gl6_2.mgrp"),
        order: 1296,
        orbit_sizes: &[1, 9, 27, 27],
        large: false,
    },
];

pub fn linear_fixture(name: &str) -> Result<&'static LinearFixture> {
    LINEAR_FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("no linear fixture {:?}", name)))
}

impl LinearFixture {
    /// Parse and validate order and orbit sizes.
    pub fn load(&self) -> Result<MatGroup> {
        let fail = |msg: String| Error::Fixture {
            name: self.name.to_string(),
            msg,
        };
        let g = parse_mat_group(self.text).map_err(|e| fail(e.to_string()))?;
        let order = g.order()?;
        if order != self.order.into() {
            return Err(fail(format!("order {} != {}", order, self.order)));
        }
        let sizes: Vec<u64> = g.vector_orbits()?.iter().map(|o| o.size).collect();
        if sizes != self.orbit_sizes {
            return Err(fail(format!(
                "orbit sizes {:?} != {:?}",
                sizes, self.orbit_sizes
            )));
        }
        Ok(g)
    }
}
