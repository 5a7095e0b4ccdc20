//! Brute-force subgroup enumeration used to validate the tuple enumeration
//! and the closed-form counts.
//!
//! Every subgroup of `Z_m x Z_n` needs at most two generators, so closing all
//! generator pairs finds them all. `<g, h>` is the sumset `<g> + <h>`; the
//! enumeration first collects the distinct cyclic subgroups and then forms
//! all pairwise sums.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::arith::{self, gcd, lcm, positive};
use crate::counting::{self, TypeKey};
use crate::error::{Error, Result};
use crate::subgroups::{enumerate_tuples, materialize, ElementSet, InvariantPair};

pub const DEFAULT_BOUND: u64 = 400;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub order: u64,
    pub exponent: u64,
    pub invariants: InvariantPair,
}

/// Which comparison produced a discrepancy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Total,
    Order,
    Type,
    Cyclic,
    CyclicOrder,
    Tuples,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Side::Total => "total",
            Side::Order => "order",
            Side::Type => "type",
            Side::Cyclic => "cyclic",
            Side::CyclicOrder => "cyclic_order",
            Side::Tuples => "tuples",
        };
        f.write_str(s)
    }
}

/// `expected` is the brute-force value, `actual` the value under test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub side: Side,
    pub key: String,
    pub expected: u64,
    pub actual: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub ambient: (u64, u64),
    pub subgroup_count: u64,
    pub by_order: BTreeMap<u64, u64>,
    pub by_type: BTreeMap<TypeKey, u64>,
    pub mismatches: Vec<Mismatch>,
}

impl OracleReport {
    pub fn is_ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_bound(m: u64, n: u64, bound: u64) -> Result<usize> {
    positive(m, "m")?;
    positive(n, "n")?;
    let product = m as u128 * n as u128;
    if product > bound as u128 {
        return Err(Error::BoundExceeded { product, bound });
    }
    Ok(product as usize)
}

/// All subgroups of `Z_m x Z_n` with the default bound `mn <= 400`.
pub fn brute_subgroups(m: u64, n: u64) -> Result<BTreeSet<ElementSet>> {
    brute_subgroups_bounded(m, n, DEFAULT_BOUND)
}

pub fn brute_subgroups_bounded(m: u64, n: u64, bound: u64) -> Result<BTreeSet<ElementSet>> {
    let size = check_bound(m, n, bound)?;
    let index = |x: u64, y: u64| (x * n + y) as usize;

    let mut cyclic: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..m {
        for y in 0..n {
            let mut members = Vec::new();
            let (mut cx, mut cy) = (0, 0);
            loop {
                members.push(index(cx, cy));
                (cx, cy) = ((cx + x) % m, (cy + y) % n);
                if (cx, cy) == (0, 0) {
                    break;
                }
            }
            members.sort_unstable();
            cyclic.insert(members);
        }
    }
    let cyclic: Vec<Vec<usize>> = cyclic.into_iter().collect();

    let mut seen = vec![u32::MAX; size];
    let mut result = BTreeSet::new();
    for (gi, g) in cyclic.iter().enumerate() {
        for (hi, h) in cyclic.iter().enumerate().skip(gi) {
            let stamp = (gi * cyclic.len() + hi) as u32;
            let mut members = Vec::with_capacity(g.len() * h.len());
            for &p in g {
                let (px, py) = ((p as u64) / n, (p as u64) % n);
                for &q in h {
                    let (qx, qy) = ((q as u64) / n, (q as u64) % n);
                    let s = index((px + qx) % m, (py + qy) % n);
                    if seen[s] != stamp {
                        seen[s] = stamp;
                        members.push(s);
                    }
                }
            }
            members.sort_unstable();
            let elements = members
                .into_iter()
                .map(|s| ((s as u64) / n, (s as u64) % n))
                .collect();
            result.insert(ElementSet::from_sorted(m, n, elements));
        }
    }
    Ok(result)
}

fn element_order(m: u64, n: u64, (x, y): (u64, u64)) -> Result<u64> {
    lcm(m / gcd(x, m), n / gcd(y, n))
}

/// Order, exponent and invariant factors of a subgroup, computed from the
/// orders of its elements.
pub fn classify(s: &ElementSet) -> Result<Classification> {
    s.check_closed()?;
    let (m, n) = s.ambient();
    let exponent = s
        .elements()
        .iter()
        .try_fold(1u64, |acc, &p| lcm(acc, element_order(m, n, p)?))?;
    let order = s.len() as u64;
    let invariants = InvariantPair::new(order / exponent, exponent)
        .ok_or_else(|| Error::NotClosed("order/exponent is not an invariant pair".into()))?;
    Ok(Classification {
        order,
        exponent,
        invariants,
    })
}

/// Whether a single element of `s` generates all of `s`.
pub fn has_generator(s: &ElementSet) -> Result<bool> {
    let (m, n) = s.ambient();
    let order = s.len() as u64;
    for &p in s.elements() {
        if element_order(m, n, p)? == order {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn cross_check(m: u64, n: u64) -> Result<OracleReport> {
    cross_check_bounded(m, n, DEFAULT_BOUND)
}

/// Compares brute-force enumeration against the tuple enumeration and every
/// closed-form counter.
pub fn cross_check_bounded(m: u64, n: u64, bound: u64) -> Result<OracleReport> {
    let brute = brute_subgroups_bounded(m, n, bound)?;
    let mut by_order: BTreeMap<u64, u64> = BTreeMap::new();
    let mut by_type: BTreeMap<TypeKey, u64> = BTreeMap::new();
    let mut cyclic_by_order: BTreeMap<u64, u64> = BTreeMap::new();
    for s in &brute {
        let class = classify(s)?;
        *by_order.entry(class.order).or_default() += 1;
        let key = TypeKey::new(class.invariants.u, class.invariants.v)?;
        *by_type.entry(key).or_default() += 1;
        if class.invariants.is_cyclic() {
            *cyclic_by_order.entry(class.order).or_default() += 1;
        }
    }
    let subgroup_count = brute.len() as u64;
    let mut mismatches = Vec::new();
    let mut compare = |side, key: String, expected: u64, actual: u64| {
        if expected != actual {
            mismatches.push(Mismatch {
                side,
                key,
                expected,
                actual,
            });
        }
    };

    compare(Side::Total, "s".into(), subgroup_count, counting::count_total(m, n)?);
    compare(
        Side::Total,
        "s_gcd_sum".into(),
        subgroup_count,
        counting::count_total_gcd_sum(m, n)?,
    );
    compare(
        Side::Total,
        "s_multiplicative".into(),
        subgroup_count,
        counting::count_total_fast(m, n)?,
    );

    for delta in arith::divisors(m * n)? {
        let expected = by_order.get(&delta).copied().unwrap_or(0);
        compare(
            Side::Order,
            delta.to_string(),
            expected,
            counting::count_by_order(m, n, delta)?,
        );
        let expected = cyclic_by_order.get(&delta).copied().unwrap_or(0);
        compare(
            Side::CyclicOrder,
            delta.to_string(),
            expected,
            counting::count_cyclic_by_order(m, n, delta)?,
        );
    }

    for small in arith::divisors(m * n)? {
        for large in arith::divisors(m * n)? {
            let Ok(key) = TypeKey::new(small, large) else {
                continue;
            };
            if (m * n) % (small * large) != 0 {
                continue;
            }
            let expected = by_type.get(&key).copied().unwrap_or(0);
            compare(
                Side::Type,
                format!("{},{}", small, large),
                expected,
                counting::count_by_type(m, n, key)?,
            );
        }
    }

    let cyclic: u64 = cyclic_by_order.values().sum();
    compare(Side::Cyclic, "c".into(), cyclic, counting::count_cyclic(m, n)?);
    compare(
        Side::Cyclic,
        "c_gcd_sum".into(),
        cyclic,
        counting::count_cyclic_gcd_sum(m, n)?,
    );

    let mut from_tuples = BTreeSet::new();
    let mut tuple_count = 0u64;
    for t in enumerate_tuples(m, n)? {
        from_tuples.insert(materialize(m, n, t)?);
        tuple_count += 1;
    }
    compare(Side::Tuples, "count".into(), subgroup_count, tuple_count);
    compare(
        Side::Tuples,
        "distinct".into(),
        subgroup_count,
        from_tuples.len() as u64,
    );
    compare(
        Side::Tuples,
        "missing".into(),
        0,
        brute.difference(&from_tuples).count() as u64,
    );
    compare(
        Side::Tuples,
        "extra".into(),
        0,
        from_tuples.difference(&brute).count() as u64,
    );

    Ok(OracleReport {
        ambient: (m, n),
        subgroup_count,
        by_order,
        by_type,
        mismatches,
    })
}
