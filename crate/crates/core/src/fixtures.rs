//! Check matrices and codes bundled with the library.

use crate::cr::{Code, CodeFile};
use crate::error::{Error, Result};
use crate::gf::{CheckMatrix, FieldOrder};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $name)))),*]
    };
}

const FILES: &[(&str, &str)] = bundled![
    "cr10_8.H",
    "cr21_4.H",
    "cr21_4.C",
    "cr28_8_a.H",
    "cr28_8_b.H",
    "cr35_10.H",
    "golay11.H",
    "golay12.H",
    "srg64_27.H",
    "srg64_28_a.H",
    "srg64_28_b.H",
    "srg81_20.H",
    "srg81_24_a.H",
    "srg81_24_b.H",
    "srg81_30_a.H",
    "srg81_30_b.H",
    "srg81_32_1.H",
    "srg81_32_2.H",
    "srg81_32_3.H",
    "srg81_32_4.H",
    "srg81_40.H",
];

/// File names of all bundled fixtures.
pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(n, _)| *n)
}

pub fn text(name: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == name || n.strip_suffix(".H") == Some(name))
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::InvalidArgument(format!("no bundled fixture {name:?}")))
}

/// The first comment line of a fixture.
pub fn description(name: &str) -> Result<&'static str> {
    let t = text(name)?;
    Ok(t.lines().next().and_then(|l| l.strip_prefix('#')).map_or("", str::trim))
}

pub fn matrix(name: &str) -> Result<CheckMatrix> {
    CheckMatrix::parse(text(name)?, FieldOrder::GF3)
}

pub fn code(name: &str) -> Result<Code> {
    Ok(CodeFile::parse(text(name)?, FieldOrder::GF3)?.code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_matrix_parses() {
        for name in names().filter(|n| n.ends_with(".H")) {
            let h = matrix(name).unwrap();
            assert_eq!(h.rank(), h.k(), "{name}");
            assert!(!description(name).unwrap().is_empty());
        }
        assert_eq!(code("cr21_4.C").unwrap().len(), 6);
        assert_eq!(matrix("cr21_4").unwrap().n(), 11);
        assert!(text("nope").is_err());
    }
}
