//! The unitary Virasoro discrete series and the weight bookkeeping built on
//! it.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{rat, Rational};

/// `c_m = 1 − 6/((m+2)(m+3))`
pub fn central_charge(m: u32) -> Rational {
    Rational::one() - Rational::new(6.into(), pronic(m))
}

fn pronic(m: u32) -> BigInt {
    BigInt::from(m + 2) * BigInt::from(m + 3)
}

/// The `m` with `(m+2)(m+3) = n`.
fn pronic_root(n: &BigInt) -> Option<u32> {
    let s = n.sqrt();
    if &s * (&s + 1u32) != *n || s < BigInt::from(2) {
        return None;
    }
    u32::try_from(s - 2u32).ok()
}

/// Smallest `m` with `(m+2)(m+3) ≥ x`.
fn first_pronic_at_least(x: &BigInt) -> u32 {
    let s = if x.is_positive() {
        x.sqrt()
    } else {
        BigInt::zero()
    };
    let mut m = u32::try_from(s).unwrap_or(u32::MAX).saturating_sub(3);
    while pronic(m) < *x {
        m += 1;
    }
    m
}

/// The `m` with `c_m = c`, if `c` is in the series.
pub fn find_m(c: &Rational) -> Option<u32> {
    if c.is_negative() || *c >= Rational::one() {
        return None;
    }
    // (m+2)(m+3) = 6/(1 − c) = n, so (2m+5)² = 4n + 1.
    let n = Rational::from_integer(6.into()) / (Rational::one() - c);
    if !n.is_integer() {
        return None;
    }
    let disc: BigInt = n.to_integer() * 4 + 1;
    let root = disc.sqrt();
    if &root * &root != disc {
        return None;
    }
    let m = (root - 5) / 2;
    u32::try_from(m).ok().filter(|&m| central_charge(m) == *c)
}

/// `h^m_{r,s} = (((m+3)r − (m+2)s)² − 1) / (4(m+2)(m+3))`
pub fn weight(m: u32, r: u32, s: u32) -> Rational {
    let p = BigInt::from(m + 3) * r - BigInt::from(m + 2) * s;
    Rational::new(&p * &p - 1, pronic(m) * 4)
}

/// All `(r, s)` cells of the Kac table with `1 ≤ s ≤ r ≤ m + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalModelTable {
    pub m: u32,
    pub c: Rational,
    pub cells: Vec<((u32, u32), Rational)>,
}

impl MinimalModelTable {
    pub fn new(m: u32) -> Self {
        let cells = (1..=m + 1)
            .flat_map(|r| (1..=r).map(move |s| ((r, s), weight(m, r, s))))
            .collect();
        Self {
            m,
            c: central_charge(m),
            cells,
        }
    }

    pub fn weights(&self) -> BTreeSet<Rational> {
        self.cells.iter().map(|(_, h)| h.clone()).collect()
    }
}

/// Distinct highest weights of the unitary modules at `c_m`.
pub fn weights(m: u32) -> BTreeSet<Rational> {
    MinimalModelTable::new(m).weights()
}

/// Pairs `(h, k)` with `h + k` a non-negative integer.
pub fn integer_weight_pairs(
    ws1: &BTreeSet<Rational>,
    ws2: &BTreeSet<Rational>,
) -> BTreeSet<(Rational, Rational)> {
    ws1.iter()
        .flat_map(|h| ws2.iter().map(move |k| (h, k)))
        .filter(|(h, k)| {
            let sum = *h + *k;
            sum.is_integer() && !sum.is_negative()
        })
        .map(|(h, k)| (h.clone(), k.clone()))
        .collect()
}

/// Multisets (ascending lists) of at least one series charge in
/// `[lower, upper]` summing to `c`.
///
/// With `n_i = (m_i+2)(m_i+3)`, a `k`-part solution is an Egyptian-fraction
/// identity `Σ 1/n_i = (k − c)/6`, and `k ≤ c/lower`, so the search is finite
/// even when `upper ≥ 1`.
pub fn decompose_charge(
    c: &Rational,
    lower: &Rational,
    upper: &Rational,
) -> Result<BTreeSet<Vec<Rational>>> {
    if !lower.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "lower bound must be positive, got {lower}"
        )));
    }
    let mut out = BTreeSet::new();
    if !c.is_positive() || *lower >= Rational::one() || upper < lower {
        return Ok(out);
    }
    let max_parts = (c / lower).floor().to_integer();
    // Smallest m with c_m ≥ lower.
    let mut m_min = 0u32;
    while central_charge(m_min) < *lower {
        m_min += 1;
    }
    let m_max = if *upper >= Rational::one() {
        None
    } else {
        let mut m = m_min;
        while central_charge(m + 1) <= *upper {
            m += 1;
        }
        if central_charge(m) > *upper {
            return Ok(out);
        }
        Some(m)
    };

    let mut k = BigInt::one();
    while k <= max_parts {
        let target = (Rational::from_integer(k.clone()) - c) / rat(6, 1);
        if target.is_positive() {
            let parts = u32::try_from(&k).expect("part count fits in u32");
            let mut chosen = Vec::new();
            egyptian(&target, parts, m_min, m_max, &mut chosen, &mut out);
        }
        k += 1;
    }
    Ok(out)
}

/// Extends `chosen` (non-decreasing m, so non-increasing 1/n) by `parts`
/// more terms summing to `rest`.
fn egyptian(
    rest: &Rational,
    parts: u32,
    m_from: u32,
    m_max: Option<u32>,
    chosen: &mut Vec<u32>,
    out: &mut BTreeSet<Vec<Rational>>,
) {
    if parts == 0 {
        if rest.is_zero() {
            out.insert(chosen.iter().map(|&m| central_charge(m)).collect());
        }
        return;
    }
    if !rest.is_positive() {
        return;
    }
    let in_range = |m: u32| m >= m_from && m_max.is_none_or(|top| m <= top);
    if parts == 1 {
        if let Some(m) = rest
            .numer()
            .is_one()
            .then(|| pronic_root(rest.denom()))
            .flatten()
        {
            if in_range(m) {
                chosen.push(m);
                out.insert(chosen.iter().map(|&m| central_charge(m)).collect());
                chosen.pop();
            }
        }
        return;
    }
    // Terms 1/n > rest cannot be used.
    let mut m = m_from.max(first_pronic_at_least(&rest.recip().ceil().to_integer()));
    loop {
        if m_max.is_some_and(|top| m > top) {
            return;
        }
        let unit = Rational::new(1.into(), pronic(m));
        // The largest remaining term is 1/n, so parts/n must still reach rest.
        if &unit * Rational::from_integer(parts.into()) < *rest {
            return;
        }
        if unit <= *rest {
            chosen.push(m);
            egyptian(&(rest - &unit), parts - 1, m, m_max, chosen, out);
            chosen.pop();
        }
        m += 1;
    }
}

/// One summand of a decomposition: `L(4/5,h) ⊗ L(6/7,k)` or a labelled
/// variant with the same weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub h: Rational,
    pub k: Rational,
    /// Module names when the summand is not a plain tensor product.
    pub labels: Option<(&'static str, &'static str)>,
}

impl Summand {
    fn plain(h: Rational, k: Rational) -> Self {
        Self { h, k, labels: None }
    }

    fn labelled(left: &'static str, right: &'static str) -> Self {
        Self {
            h: rat(2, 3),
            k: rat(4, 3),
            labels: Some((left, right)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeA2Case {
    pub index: u8,
    pub summands: Vec<Summand>,
    pub annotation: Option<&'static str>,
}

/// The four possible decompositions of the vertex algebra generated by `e`
/// and `f` when ⟨e,f⟩ = 13/1024. Every plain summand is checked to have
/// integral weight.
pub fn type_a2_decompositions() -> Result<Vec<TypeA2Case>> {
    let p = |h: (i64, i64), k: (i64, i64)| Summand::plain(rat(h.0, h.1), rat(k.0, k.1));
    let l = Summand::labelled;
    let cases = vec![
        TypeA2Case {
            index: 1,
            summands: vec![
                p((0, 1), (0, 1)),
                p((3, 1), (0, 1)),
                l("W(2/3,+)", "L(6/7,4/3)"),
                l("W(2/3,-)", "L(6/7,4/3)"),
            ],
            annotation: None,
        },
        TypeA2Case {
            index: 2,
            summands: vec![
                p((0, 1), (0, 1)),
                p((0, 1), (5, 1)),
                l("L(4/5,2/3)", "L(6/7,4/3)^+"),
                l("L(4/5,2/3)", "L(6/7,4/3)^-"),
            ],
            annotation: None,
        },
        TypeA2Case {
            index: 3,
            summands: vec![
                p((0, 1), (0, 1)),
                p((3, 1), (5, 1)),
                l("W(2/3,+)", "L(6/7,4/3)^+"),
                l("W(2/3,-)", "L(6/7,4/3)^+"),
            ],
            annotation: None,
        },
        TypeA2Case {
            index: 4,
            summands: vec![
                p((0, 1), (0, 1)),
                p((3, 1), (0, 1)),
                p((0, 1), (5, 1)),
                p((3, 1), (5, 1)),
                l("W(2/3,+-)", "L(6/7,4/3)^+"),
                l("W(2/3,-+)", "L(6/7,4/3)^-"),
            ],
            annotation: Some("3-State Potts model"),
        },
    ];
    for case in &cases {
        for s in &case.summands {
            let sum = &s.h + &s.k;
            if !sum.is_integer() {
                return Err(Error::IdentityFailed {
                    identity: format!("case ({}): h + k is an integer", case.index),
                    lhs: sum.to_string(),
                    rhs: "integer".to_owned(),
                });
            }
        }
    }
    Ok(cases)
}
