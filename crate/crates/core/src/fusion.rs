//! Fusion rings as multiplicity tensors `N_{ab}^c`, the built-in tables,
//! and exhaustive verification of the ring axioms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};

const TABLES: &str = include_str!("../data/fusion_rings.txt");
const TABLES_SHA256: &str = "ce23b0710282995a3e93d1b84cb50bea10b527c62933e24d2a1299c77cfd625b";

pub const BUILTIN_RINGS: [&str; 4] = ["ising", "vir_4_5", "w3_4_5", "vir_6_7_sub"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Label {
    pub name: String,
    pub weight: Option<Rational>,
}

impl Label {
    /// A name that parses as a rational is its own conformal weight.
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        let weight = parse_rational(&name).ok();
        Self { name, weight }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    name: String,
    labels: Vec<Label>,
    unit: usize,
    /// Dense, indexed `(a*n + b)*n + c`.
    n: Vec<u32>,
}

/// One failed ring axiom, by label name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingViolation {
    /// `N_{u a}^c ≠ δ_{ac}`.
    Unit {
        a: String,
        c: String,
        found: u32,
    },
    NonCommutative {
        a: String,
        b: String,
        c: String,
    },
    /// `Σ_e N_{ab}^e N_{ec}^d ≠ Σ_f N_{bc}^f N_{af}^d`.
    NonAssociative {
        a: String,
        b: String,
        c: String,
        d: String,
        lhs: u32,
        rhs: u32,
    },
}

impl fmt::Display for RingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Unit { a, c, found } => write!(f, "unit x {a} has multiplicity {found} at {c}"),
            Self::NonCommutative { a, b, c } => write!(f, "N[{a},{b}][{c}] != N[{b},{a}][{c}]"),
            Self::NonAssociative {
                a,
                b,
                c,
                d,
                lhs,
                rhs,
            } => {
                write!(
                    f,
                    "(({a} x {b}) x {c})[{d}] = {lhs} but ({a} x ({b} x {c}))[{d}] = {rhs}"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RingReport {
    pub violations: Vec<RingViolation>,
    /// Number of `(a, b, c, d)` quadruples checked for associativity.
    pub associativity_checks: usize,
}

impl RingReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A fusion product `x × y` landing outside the expected grade.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingViolation {
    pub a: String,
    pub b: String,
    pub c: String,
}

impl FusionRing {
    /// `entries` lists `(a, b, c, N_{ab}^c)`; absent entries are zero.
    pub fn from_entries(
        name: impl Into<String>,
        labels: Vec<Label>,
        unit: &str,
        entries: impl IntoIterator<Item = (String, String, String, u32)>,
    ) -> Result<Self> {
        let mut ring = Self {
            name: name.into(),
            n: vec![0; labels.len().pow(3)],
            unit: 0,
            labels,
        };
        let names: BTreeSet<&str> = ring.labels.iter().map(|l| l.name.as_str()).collect();
        if names.len() != ring.labels.len() {
            return Err(Error::CorruptTable {
                ring: ring.name,
                reason: "duplicate label".to_owned(),
            });
        }
        ring.unit = ring.index_of(unit)?;
        for (a, b, c, m) in entries {
            let (a, b, c) = (ring.index_of(&a)?, ring.index_of(&b)?, ring.index_of(&c)?);
            let slot = ring.slot(a, b, c);
            ring.n[slot] = m;
        }
        Ok(ring)
    }

    fn slot(&self, a: usize, b: usize, c: usize) -> usize {
        let n = self.labels.len();
        (a * n + b) * n + c
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label_names(&self) -> Vec<&str> {
        self.labels.iter().map(|l| l.name.as_str()).collect()
    }

    pub fn unit(&self) -> &str {
        &self.labels[self.unit].name
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l.name == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn multiplicity(&self, a: &str, b: &str, c: &str) -> Result<u32> {
        Ok(self.n[self.slot(self.index_of(a)?, self.index_of(b)?, self.index_of(c)?)])
    }

    /// Copy with a single `N_{ab}^c` overwritten.
    pub fn with_multiplicity(&self, a: &str, b: &str, c: &str, m: u32) -> Result<Self> {
        let slot = self.slot(self.index_of(a)?, self.index_of(b)?, self.index_of(c)?);
        let mut out = self.clone();
        out.n[slot] = m;
        Ok(out)
    }

    /// Non-zero `(a, b, c, N_{ab}^c)` in label order.
    pub fn entries(&self) -> Vec<(&str, &str, &str, u32)> {
        let len = self.labels.len();
        let mut out = Vec::new();
        for a in 0..len {
            for b in 0..len {
                for c in 0..len {
                    let m = self.n[self.slot(a, b, c)];
                    if m > 0 {
                        out.push((
                            self.labels[a].name.as_str(),
                            self.labels[b].name.as_str(),
                            self.labels[c].name.as_str(),
                            m,
                        ));
                    }
                }
            }
        }
        out
    }

    /// `a × b` as `(label, multiplicity)` in label order.
    pub fn fuse(&self, a: &str, b: &str) -> Result<Vec<(&str, u32)>> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self
            .fuse_idx(a, b)
            .map(|(c, m)| (self.labels[c].name.as_str(), m))
            .collect())
    }

    fn fuse_idx(&self, a: usize, b: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        (0..self.labels.len())
            .map(move |c| (c, self.n[self.slot(a, b, c)]))
            .filter(|(_, m)| *m > 0)
    }

    /// Unit, commutativity and associativity over every label tuple.
    pub fn verify(&self) -> RingReport {
        let len = self.labels.len();
        let name = |i: usize| self.labels[i].name.clone();
        let mut report = RingReport::default();
        for a in 0..len {
            for c in 0..len {
                let found = self.n[self.slot(self.unit, a, c)];
                if found != u32::from(a == c) {
                    report.violations.push(RingViolation::Unit {
                        a: name(a),
                        c: name(c),
                        found,
                    });
                }
            }
        }
        for a in 0..len {
            for b in a + 1..len {
                for c in 0..len {
                    if self.n[self.slot(a, b, c)] != self.n[self.slot(b, a, c)] {
                        report.violations.push(RingViolation::NonCommutative {
                            a: name(a),
                            b: name(b),
                            c: name(c),
                        });
                    }
                }
            }
        }
        for a in 0..len {
            for b in 0..len {
                for c in 0..len {
                    for d in 0..len {
                        let lhs: u32 = (0..len)
                            .map(|e| self.n[self.slot(a, b, e)] * self.n[self.slot(e, c, d)])
                            .sum();
                        let rhs: u32 = (0..len)
                            .map(|f| self.n[self.slot(b, c, f)] * self.n[self.slot(a, f, d)])
                            .sum();
                        report.associativity_checks += 1;
                        if lhs != rhs {
                            report.violations.push(RingViolation::NonAssociative {
                                a: name(a),
                                b: name(b),
                                c: name(c),
                                d: name(d),
                                lhs,
                                rhs,
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// Smallest fusion-closed label set containing `seed` and the unit, in
    /// label order.
    pub fn closure(&self, seed: &[&str]) -> Result<Vec<&str>> {
        let mut set: BTreeSet<usize> = seed
            .iter()
            .map(|s| self.index_of(s))
            .collect::<Result<_>>()?;
        set.insert(self.unit);
        loop {
            let mut next = set.clone();
            for &a in &set {
                for &b in &set {
                    next.extend(self.fuse_idx(a, b).map(|(c, _)| c));
                }
            }
            if next == set {
                break;
            }
            set = next;
        }
        Ok(set
            .into_iter()
            .map(|i| self.labels[i].name.as_str())
            .collect())
    }

    /// Products `a × b ∋ c` with `grade(c) ≠ grade(a) + grade(b)` mod `modulus`.
    pub fn grading_violations(
        &self,
        modulus: u32,
        grade: impl Fn(&str) -> u32,
    ) -> Vec<GradingViolation> {
        let len = self.labels.len();
        let grades: Vec<u32> = self
            .labels
            .iter()
            .map(|l| grade(&l.name) % modulus)
            .collect();
        let mut out = Vec::new();
        for a in 0..len {
            for b in 0..len {
                for (c, _) in self.fuse_idx(a, b) {
                    if grades[c] != (grades[a] + grades[b]) % modulus {
                        out.push(GradingViolation {
                            a: self.labels[a].name.clone(),
                            b: self.labels[b].name.clone(),
                            c: self.labels[c].name.clone(),
                        });
                    }
                }
            }
        }
        out
    }

    /// Whether the labels in `map`'s domain are fusion-closed here and their
    /// products match `other` label-by-label through `map`.
    pub fn matches_subring(&self, other: &FusionRing, map: &[(&str, &str)]) -> Result<bool> {
        let here: Vec<usize> = map
            .iter()
            .map(|(a, _)| self.index_of(a))
            .collect::<Result<_>>()?;
        let there: Vec<usize> = map
            .iter()
            .map(|(_, b)| other.index_of(b))
            .collect::<Result<_>>()?;
        for (i, &a) in here.iter().enumerate() {
            for (j, &b) in here.iter().enumerate() {
                if self.fuse_idx(a, b).any(|(c, _)| !here.contains(&c)) {
                    return Ok(false);
                }
                for (k, &c) in here.iter().enumerate() {
                    if self.n[self.slot(a, b, c)]
                        != other.n[other.slot(there[i], there[j], there[k])]
                    {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `W(0)`, `W(2/5)` have grade 0, `+` labels grade 1 and `−` labels grade 2.
pub fn w3_grade(label: &str) -> u32 {
    if label.ends_with(",+)") {
        1
    } else if label.ends_with(",-)") {
        2
    } else {
        0
    }
}

fn sha256_hex(data: &[u8]) -> String {
    Sha256::digest(data)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn parse_tables(text: &str) -> Result<BTreeMap<String, FusionRing>> {
    let corrupt = |ring: &str, reason: String| Error::CorruptTable {
        ring: ring.to_owned(),
        reason,
    };
    struct Block {
        name: String,
        labels: Vec<Label>,
        unit: Option<String>,
        rows: Vec<(String, Vec<Vec<String>>)>,
    }
    let mut blocks: Vec<Block> = Vec::new();
    for line in text.lines().map(str::trim) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
        if key == "ring" {
            blocks.push(Block {
                name: rest.trim().to_owned(),
                labels: Vec::new(),
                unit: None,
                rows: Vec::new(),
            });
            continue;
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| corrupt("?", format!("`{line}` before any ring")))?;
        match key {
            "labels" => {
                for tok in rest.split_whitespace() {
                    block.labels.push(match tok.split_once('@') {
                        Some((name, w)) => Label {
                            name: name.to_owned(),
                            weight: Some(parse_rational(w)?),
                        },
                        None => Label::new(tok),
                    });
                }
            }
            "unit" => block.unit = Some(rest.trim().to_owned()),
            "row" => {
                let (label, cells) = rest
                    .split_once('=')
                    .ok_or_else(|| corrupt(&block.name, format!("row without `=`: {line}")))?;
                let cells = cells
                    .split('|')
                    .map(|cell| cell.split(':').map(|s| s.trim().to_owned()).collect())
                    .collect();
                block.rows.push((label.trim().to_owned(), cells));
            }
            other => return Err(corrupt(&block.name, format!("unknown directive `{other}`"))),
        }
    }

    let mut rings = BTreeMap::new();
    for block in blocks {
        let unit = block
            .unit
            .ok_or_else(|| corrupt(&block.name, "missing unit".to_owned()))?;
        let columns: Vec<String> = block
            .labels
            .iter()
            .map(|l| l.name.clone())
            .filter(|n| *n != unit)
            .collect();
        let mut entries = Vec::new();
        for l in &block.labels {
            entries.push((unit.clone(), l.name.clone(), l.name.clone(), 1));
        }
        let mut seen = BTreeSet::new();
        for (row, cells) in &block.rows {
            if cells.len() != columns.len() {
                return Err(corrupt(
                    &block.name,
                    format!(
                        "row {row} has {} cells, expected {}",
                        cells.len(),
                        columns.len()
                    ),
                ));
            }
            seen.insert(row.clone());
            entries.push((row.clone(), unit.clone(), row.clone(), 1));
            for (col, cell) in columns.iter().zip(cells) {
                for summand in cell {
                    entries.push((row.clone(), col.clone(), summand.clone(), 1));
                }
            }
        }
        if seen.len() != columns.len() || columns.iter().any(|c| !seen.contains(c)) {
            return Err(corrupt(
                &block.name,
                "rows do not cover the non-unit labels".to_owned(),
            ));
        }
        let ring = FusionRing::from_entries(block.name.clone(), block.labels, &unit, entries)?;
        rings.insert(block.name, ring);
    }
    Ok(rings)
}

/// One of [`BUILTIN_RINGS`]. The embedded tables are checksummed and each
/// ring is verified before it is returned.
pub fn builtin(name: &str) -> Result<FusionRing> {
    if !BUILTIN_RINGS.contains(&name) {
        return Err(Error::UnknownRing(name.to_owned()));
    }
    let digest = sha256_hex(TABLES.as_bytes());
    if digest != TABLES_SHA256 {
        return Err(Error::CorruptTable {
            ring: name.to_owned(),
            reason: format!("checksum {digest} does not match {TABLES_SHA256}"),
        });
    }
    let ring = parse_tables(TABLES)?
        .remove(name)
        .ok_or_else(|| Error::UnknownRing(name.to_owned()))?;
    let report = ring.verify();
    if let Some(v) = report.violations.first() {
        return Err(Error::CorruptTable {
            ring: name.to_owned(),
            reason: format!("{} violations, first: {v}", report.violations.len()),
        });
    }
    Ok(ring)
}
