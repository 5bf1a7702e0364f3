//! Plain-text module files.
//!
//! ```text
//! field 32003
//! vars x0 x1 x2
//! target -1 -1 -1
//! source 0
//! x0
//! x1
//! x2
//! ```
//!
//! One line per target row, entries separated by commas. Lines starting
//! with `#` are ignored.

use std::fmt::Write;

use crate::algebra::field::{Field, PrimeField};
use crate::algebra::matrix::{GradedMatrix, MatOps};
use crate::algebra::module::GradedFreeModule;
use crate::algebra::monomial::{Mono, MAX_VARS};
use crate::algebra::ring::{format_mono, Poly, Ring};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleFile {
    pub ring: Ring<PrimeField>,
    pub names: Vec<String>,
    pub matrix: GradedMatrix<u32>,
}

fn malformed(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Malformed(format!("line {line}: {msg}"))
}

fn parse_twists(rest: &str, line: usize) -> Result<Vec<i64>> {
    rest.split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| malformed(line, format!("bad twist `{t}`"))))
        .collect()
}

/// Parses a polynomial in `+`, `-`, `*`, `^` over the given variable names.
pub fn parse_poly(ring: &Ring<PrimeField>, names: &[String], s: &str) -> std::result::Result<Poly<u32>, String> {
    let k = &ring.field;
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty expression".into());
    }
    let mut terms = vec![];
    let mut chunk = String::new();
    let mut sign = 1i64;
    let flush = |chunk: &str, sign: i64, terms: &mut Vec<(Mono, u32)>| -> std::result::Result<(), String> {
        if chunk.is_empty() {
            return Err("dangling sign".into());
        }
        let mut c = k.from_i64(sign);
        let mut ex = [0u32; MAX_VARS];
        for f in chunk.split('*') {
            let (base, pow) = match f.split_once('^') {
                Some((b, e)) => (b, e.parse::<u32>().map_err(|_| format!("bad exponent in `{f}`"))?),
                None => (f, 1),
            };
            if let Ok(v) = base.parse::<i64>() {
                let mut val = k.one();
                for _ in 0..pow {
                    val = k.mul(val, k.from_i64(v));
                }
                c = k.mul(c, val);
            } else if let Some(i) = names.iter().position(|n| n == base) {
                ex[i] += pow;
            } else {
                return Err(format!("unknown factor `{base}`"));
            }
        }
        terms.push((Mono::from_exponents(&ex), c));
        Ok(())
    };
    for (i, ch) in s.chars().enumerate() {
        match ch {
            '+' | '-' => {
                let prev = s[..i].chars().last();
                if i == 0 || prev == Some('^') {
                    if prev == Some('^') {
                        return Err("negative exponent".into());
                    }
                    sign = if ch == '-' { -1 } else { 1 };
                    continue;
                }
                flush(&chunk, sign, &mut terms)?;
                chunk.clear();
                sign = if ch == '-' { -1 } else { 1 };
            }
            _ => chunk.push(ch),
        }
    }
    flush(&chunk, sign, &mut terms)?;
    Ok(ring.from_terms(terms))
}

impl ModuleFile {
    pub fn new(ring: Ring<PrimeField>, matrix: GradedMatrix<u32>) -> Self {
        let names = crate::algebra::ring::default_names(ring.nvars);
        ModuleFile { ring, names, matrix }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut header = |key: &str| -> Result<(usize, String)> {
            let (no, l) = lines.next().ok_or_else(|| Error::Malformed(format!("missing `{key}` line")))?;
            let rest = l
                .strip_prefix(key)
                .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
                .ok_or_else(|| malformed(no, format!("expected `{key}`")))?;
            Ok((no, rest.trim().to_string()))
        };
        let (no, p) = header("field")?;
        let p: u32 = p.parse().map_err(|_| malformed(no, "bad characteristic"))?;
        let field = PrimeField::new(p).map_err(|e| malformed(no, e))?;
        let (no, vars) = header("vars")?;
        let names: Vec<String> = vars.split_whitespace().map(String::from).collect();
        if names.is_empty() || names.len() > MAX_VARS {
            return Err(malformed(no, format!("between 1 and {MAX_VARS} variables required")));
        }
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || names[..i].contains(n) {
                return Err(malformed(no, format!("bad variable name `{n}`")));
            }
        }
        let (no, t) = header("target")?;
        let target = GradedFreeModule::new(parse_twists(&t, no)?);
        let (no, s) = header("source")?;
        let source = GradedFreeModule::new(parse_twists(&s, no)?);
        let ring = Ring::new(field, names.len());
        let mut rows = vec![];
        if source.rank() > 0 {
            for _ in 0..target.rank() {
                let (no, l) = lines.next().ok_or_else(|| Error::Malformed("too few matrix rows".into()))?;
                let entries: Vec<&str> = l.split(',').collect();
                if entries.len() != source.rank() {
                    return Err(malformed(no, format!("expected {} entries", source.rank())));
                }
                let row = entries
                    .iter()
                    .map(|e| parse_poly(&ring, &names, e).map_err(|m| malformed(no, m)))
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
        }
        if let Some((no, _)) = lines.next() {
            return Err(malformed(no, "unexpected trailing line"));
        }
        let ops = MatOps::new(&ring);
        let matrix = if source.rank() == 0 {
            GradedMatrix::zero(source, target)
        } else {
            ops.from_entries(source, target, &rows)?
        };
        ops.require_graded(&matrix)?;
        Ok(ModuleFile { ring, names, matrix })
    }

    pub fn to_text(&self) -> String {
        let ops = MatOps::new(&self.ring);
        let mut s = String::new();
        let tw = |f: &GradedFreeModule| f.twists.iter().map(|t| format!(" {t}")).collect::<String>();
        writeln!(s, "field {}", self.ring.field.prime()).unwrap();
        writeln!(s, "vars {}", self.names.join(" ")).unwrap();
        writeln!(s, "target{}", tw(&self.matrix.target)).unwrap();
        writeln!(s, "source{}", tw(&self.matrix.source)).unwrap();
        if self.matrix.ncols() > 0 {
            for row in ops.entries(&self.matrix) {
                let cells: Vec<String> = row.iter().map(|p| self.ring.format(p, &self.names)).collect();
                writeln!(s, "{}", cells.join(", ")).unwrap();
            }
        }
        s
    }
}

/// A polynomial with the file's canonical spelling.
pub fn format_poly<K: Field>(ring: &Ring<K>, f: &Poly<K::Elem>) -> String {
    ring.format(f, &crate::algebra::ring::default_names(ring.nvars))
}

/// x0^a*x1^b... with default names.
pub fn format_monomial(m: &Mono, nvars: usize) -> String {
    let s = format_mono(m, &crate::algebra::ring::default_names(nvars));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER: &str = "field 32003\nvars x0 x1 x2\ntarget -1 -1 -1\nsource 0\nx0\nx1\nx2\n";

    #[test]
    fn round_trip() {
        let f = ModuleFile::parse(EULER).unwrap();
        assert_eq!(f.to_text(), EULER);
        assert_eq!(ModuleFile::parse(&f.to_text()).unwrap(), f);
    }

    #[test]
    fn signs_and_powers() {
        let r = Ring::new(PrimeField::default(), 2);
        let names = crate::algebra::ring::default_names(2);
        let p = parse_poly(&r, &names, "-x0^2 + 3*x0*x1 - 2^2*x1^2").unwrap();
        assert_eq!(r.format(&p, &names), "32002*x0^2 + 3*x0*x1 + 31999*x1^2");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(ModuleFile::parse("field 4\nvars x\ntarget 0\nsource\n").is_err());
        assert!(ModuleFile::parse("field 7\nvars x y\ntarget 0\nsource 1\nx*y\n").is_err());
        assert!(ModuleFile::parse("field 7\nvars x y\ntarget 0\nsource 1\nz\n").is_err());
        assert!(ModuleFile::parse("field 7\nvars x y\ntarget 0\nsource 1\nx, y\n").is_err());
        assert!(ModuleFile::parse("field 7\nvars x y\ntarget 0\nsource 1\nx\ny\n").is_err());
    }
}
