//! Built-in groups, shipped fixtures and the group file formats.

pub mod builders;
pub mod fixtures;
mod parse;

use std::path::Path;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::permgroup::PermGroup;

pub use parse::{parse_mat_group, parse_perm_group, write_mat_group, write_perm_group};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    Solvable,
    PGroup,
    Simple,
    Fixture,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: PermGroup,
    pub expected_order: Option<u64>,
    pub tags: Vec<Tag>,
}

impl CatalogEntry {
    pub fn new(
        name: impl Into<String>,
        group: PermGroup,
        expected_order: Option<u64>,
    ) -> Result<Self> {
        let name = name.into();
        if let Some(e) = expected_order {
            if group.order_u64() != Some(e) {
                return Err(Error::OrderMismatch {
                    name,
                    expected: e.to_string(),
                    actual: group.order().to_string(),
                });
            }
        }
        let mut tags = Vec::new();
        if group.is_solvable() {
            tags.push(Tag::Solvable);
        }
        if let Some(n) = group.order_u64() {
            if n > 1 && arith::factorize(n).len() == 1 {
                tags.push(Tag::PGroup);
            }
        }
        Ok(CatalogEntry {
            name,
            group,
            expected_order,
            tags,
        })
    }

    fn tagged(mut self, tag: Tag) -> Self {
        if !self.tags.contains(&tag) {
            self.tags.push(tag);
            self.tags.sort();
        }
        self
    }

    pub fn has_tag(&self, tag: Tag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn order(&self) -> u64 {
        self.group.order_u64().expect("catalog groups are small")
    }
}

/// The default verification catalog, in a fixed order.
pub fn builtin() -> Result<Vec<CatalogEntry>> {
    use builders::*;
    let c = |n| cyclic(n);
    let mut out = Vec::new();
    let mut add = |name: String, g: PermGroup, order: u64| -> Result<()> {
        out.push(CatalogEntry::new(name, g, Some(order))?);
        Ok(())
    };
    for n in 2..=8usize {
        add(
            format!("S{}", n),
            sym(n),
            arith::to_u64(&arith::factorial(n as u64)).unwrap(),
        )?;
    }
    for n in 3..=8usize {
        add(
            format!("A{}", n),
            alt(n),
            arith::to_u64(&arith::factorial(n as u64)).unwrap() / 2,
        )?;
    }
    for n in [2, 3, 4, 5, 6, 8, 9, 12, 15] {
        add(format!("C{}", n), c(n)?, n as u64)?;
    }
    for n in [6, 8, 10, 12, 16, 18] {
        add(format!("D{}", n), dihedral(n)?, n as u64)?;
    }
    add("Q8".into(), quaternion(8)?, 8)?;
    add("Q16".into(), quaternion(16)?, 16)?;
    add("C2^2".into(), elementary_abelian(2, 2)?, 4)?;
    add("C2^3".into(), elementary_abelian(2, 3)?, 8)?;
    add("C3^2".into(), elementary_abelian(3, 2)?, 9)?;
    for p in [3u64, 5] {
        add(
            format!("{}^(1+2)_+", p),
            extraspecial(p, ExtraspecialType::ExponentP)?,
            p.pow(3),
        )?;
        add(
            format!("{}^(1+2)_-", p),
            extraspecial(p, ExtraspecialType::ExponentPSquared)?,
            p.pow(3),
        )?;
    }
    add("A4xC3".into(), direct_product(&alt(4), &c(3)?), 36)?;
    add("S3xS3".into(), direct_product(&sym(3), &sym(3)), 36)?;
    add("S4xC2".into(), direct_product(&sym(4), &c(2)?), 48)?;
    add("D8xC2".into(), direct_product(&dihedral(8)?, &c(2)?), 16)?;
    add("D8xC3".into(), direct_product(&dihedral(8)?, &c(3)?), 24)?;
    add("Q8xC3".into(), direct_product(&quaternion(8)?, &c(3)?), 24)?;
    add("C2wrC2".into(), wreath(&c(2)?, &c(2)?)?, 8)?;
    add("C3wrC2".into(), wreath(&c(3)?, &c(2)?)?, 18)?;
    add("C2wrC3".into(), wreath(&c(2)?, &c(3)?)?, 24)?;
    add("C2wrS3".into(), wreath(&c(2)?, &sym(3))?, 48)?;
    add("C3wrC3".into(), wreath(&c(3)?, &c(3)?)?, 81)?;
    add("S3wrC2".into(), wreath(&sym(3), &c(2)?)?, 72)?;
    add("S4wrC2".into(), wreath(&sym(4), &c(2)?)?, 1152)?;
    add("C2wrD10".into(), wreath(&c(2)?, &dihedral(10)?)?, 320)?;
    add("C3:C4".into(), metacyclic(3, 4, 2)?, 12)?;
    add("C7:C3".into(), metacyclic(7, 3, 2)?, 21)?;
    add("C9:C6".into(), metacyclic(9, 6, 2)?, 54)?;
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        add(
            format!("PSL2({})", q),
            psl2(q)?,
            q * (q * q - 1) / arith::gcd(2, q - 1),
        )?;
    }
    for q in [3u64, 5, 7, 9, 11, 13] {
        add(format!("SL2({})", q), sl2(q)?, q * (q * q - 1))?;
    }
    add("GL2(3)".into(), gl_mat(2, 3)?.as_perm_group()?, 48)?;
    add("SL3(2)".into(), gl_mat(3, 2)?.as_perm_group()?, 168)?;
    for q in [5u64, 7, 8, 9] {
        add(format!("AGL1({})", q), agl1(q)?, q * (q - 1))?;
    }
    add("AGammaL1(8)".into(), agaml1(8)?, 168)?;
    add("AGL2(3)".into(), agl(2, 3)?, 432)?;
    add("ASL2(3)".into(), asl(2, 3)?, 216)?;
    add("AGL3(2)".into(), agl(3, 2)?, 1344)?;
    add("M11".into(), mathieu11(), 7920)?;
    for e in &mut out {
        let simple = e.group.order_u64().is_some_and(|n| n > 1)
            && e.group
                .normal_subgroups()
                .map(|ns| ns.len() == 2)
                .unwrap_or(false);
        if simple {
            e.tags.push(Tag::Simple);
            e.tags.sort();
        }
    }
    Ok(out)
}

/// Every `*.pgrp` file of a directory, sorted by file name; the entry name
/// is the file stem.
pub fn load_dir(dir: &Path) -> Result<Vec<CatalogEntry>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "pgrp"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path)?;
            let name = path
                .file_stem()
                .unwrap_or_default()
                .to_string_lossy()
                .into_owned();
            let g = parse_perm_group(&text).map_err(|e| Error::Fixture {
                name: name.clone(),
                msg: e.to_string(),
            })?;
            Ok(CatalogEntry::new(name, g, None)?.tagged(Tag::Fixture))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_catalog_shape() {
        let cat = builtin().unwrap();
        let small = cat.iter().filter(|e| e.order() <= 2000).count();
        assert!(small >= 50, "{} groups of order at most 2000", small);
        let mut names: Vec<&str> = cat.iter().map(|e| e.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), cat.len());
        let a5 = cat.iter().find(|e| e.name == "A5").unwrap();
        assert!(a5.has_tag(Tag::Simple));
        assert!(!a5.has_tag(Tag::Solvable));
        let q8 = cat.iter().find(|e| e.name == "Q8").unwrap();
        assert!(q8.has_tag(Tag::PGroup));
    }
}
