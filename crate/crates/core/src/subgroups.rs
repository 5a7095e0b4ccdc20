//! Subgroups of `Z_m x Z_n` indexed by 5-tuples `(a, b, c, d, ell)`.
//!
//! A tuple is admissible when `a | m`, `b | a`, `c | n`, `d | c`,
//! `a/b = c/d = e`, `1 <= ell <= e` and `gcd(ell, e) = 1`. It names the subgroup
//!
//! ```text
//! { (i m/a, i ell n/c + j n/d) : 0 <= i < a, 0 <= j < d }
//! ```
//!
//! and every subgroup arises from exactly one admissible tuple. The subgroup
//! has order `ad`, exponent `lcm(a, c)` and is isomorphic to
//! `Z_gcd(b,d) x Z_lcm(a,c)`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arith::{self, gcd, lcm, positive};
use crate::error::{Error, MembershipError, Result};

/// Index of one subgroup of `Z_m x Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GoursatTuple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub ell: u64,
}

impl GoursatTuple {
    pub const fn new(a: u64, b: u64, c: u64, d: u64, ell: u64) -> Self {
        Self { a, b, c, d, ell }
    }

    /// Common quotient `a/b = c/d`. Only meaningful for validated tuples.
    pub fn quotient(&self) -> u64 {
        self.a / self.b
    }

    /// Checks membership in the index set for `Z_m x Z_n`, reporting the
    /// first violated condition.
    pub fn check(&self, m: u64, n: u64) -> std::result::Result<(), MembershipError> {
        let Self { a, b, c, d, ell } = *self;
        if a == 0 || b == 0 || c == 0 || d == 0 || ell == 0 || m == 0 || n == 0 {
            return Err(MembershipError::ZeroComponent);
        }
        if m % a != 0 {
            return Err(MembershipError::ANotDividingM { a, m });
        }
        if a % b != 0 {
            return Err(MembershipError::BNotDividingA { b, a });
        }
        if n % c != 0 {
            return Err(MembershipError::CNotDividingN { c, n });
        }
        if c % d != 0 {
            return Err(MembershipError::DNotDividingC { d, c });
        }
        let (left, right) = (a / b, c / d);
        if left != right {
            return Err(MembershipError::QuotientMismatch { left, right });
        }
        if ell > left {
            return Err(MembershipError::EllOutOfRange { ell, quotient: left });
        }
        if gcd(ell, left) != 1 {
            return Err(MembershipError::EllNotCoprime { ell, quotient: left });
        }
        Ok(())
    }

    pub fn validate(&self, m: u64, n: u64) -> Result<()> {
        self.check(m, n)
            .map_err(|reason| Error::NotMember { m, n, reason })
    }
}

impl fmt::Display for GoursatTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.a, self.b, self.c, self.d, self.ell)
    }
}

/// Invariant factor pair `(u, v)` with `u | v`, standing for `Z_u x Z_v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InvariantPair {
    pub u: u64,
    pub v: u64,
}

impl InvariantPair {
    pub fn new(u: u64, v: u64) -> Option<Self> {
        (u >= 1 && v % u == 0).then_some(Self { u, v })
    }

    pub fn is_cyclic(&self) -> bool {
        self.u == 1
    }
}

impl fmt::Display for InvariantPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.u == 1 {
            write!(f, "Z_{}", self.v)
        } else {
            write!(f, "Z_{} x Z_{}", self.u, self.v)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgroupDescriptor {
    pub ambient: (u64, u64),
    pub tuple: GoursatTuple,
    pub order: u64,
    pub exponent: u64,
    pub invariants: InvariantPair,
    pub cyclic: bool,
    pub generators: [(u64, u64); 2],
}

/// A subset of `Z_m x Z_n` as a sorted, duplicate-free list of reduced pairs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    m: u64,
    n: u64,
    elements: Vec<(u64, u64)>,
}

impl ElementSet {
    /// Builds a set from arbitrary pairs, reducing each coordinate.
    pub fn from_pairs<I>(m: u64, n: u64, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        positive(m, "m")?;
        positive(n, "n")?;
        let mut elements: Vec<_> = pairs.into_iter().map(|(x, y)| (x % m, y % n)).collect();
        elements.sort_unstable();
        elements.dedup();
        Ok(Self { m, n, elements })
    }

    pub(crate) fn from_sorted(m: u64, n: u64, elements: Vec<(u64, u64)>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { m, n, elements }
    }

    pub fn ambient(&self) -> (u64, u64) {
        (self.m, self.n)
    }

    pub fn elements(&self) -> &[(u64, u64)] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, point: (u64, u64)) -> bool {
        self.elements.binary_search(&point).is_ok()
    }

    /// Verifies the set is a subgroup: nonempty, contains zero and is closed
    /// under addition (finite, so negation follows).
    pub fn check_closed(&self) -> Result<()> {
        if !self.contains((0, 0)) {
            return Err(Error::NotClosed("missing (0,0)".into()));
        }
        for &(x1, y1) in &self.elements {
            for &(x2, y2) in &self.elements {
                let sum = (add_mod(x1, x2, self.m), add_mod(y1, y2, self.n));
                if !self.contains(sum) {
                    return Err(Error::NotClosed(format!(
                        "({x1},{y1}) + ({x2},{y2}) = ({},{}) is missing",
                        sum.0, sum.1
                    )));
                }
            }
        }
        Ok(())
    }
}

fn add_mod(x: u64, y: u64, modulus: u64) -> u64 {
    ((x as u128 + y as u128) % modulus as u128) as u64
}

/// Every admissible tuple for `Z_m x Z_n`, lexicographic in `(a, b, c, d, ell)`.
pub fn enumerate_tuples(m: u64, n: u64) -> Result<impl Iterator<Item = GoursatTuple>> {
    let divs_m = arith::divisors(positive(m, "m")?)?;
    let divs_n = arith::divisors(positive(n, "n")?)?;
    let outer = divs_m.clone();
    Ok(outer.into_iter().flat_map(move |a| {
        let divs_n = divs_n.clone();
        divs_m
            .iter()
            .copied()
            .filter(move |&b| a % b == 0)
            .collect::<Vec<_>>()
            .into_iter()
            .flat_map(move |b| {
                let e = a / b;
                divs_n
                    .iter()
                    .copied()
                    .filter(move |&c| c % e == 0)
                    .collect::<Vec<_>>()
                    .into_iter()
                    .flat_map(move |c| {
                        (1..=e)
                            .filter(move |&ell| gcd(ell, e) == 1)
                            .map(move |ell| GoursatTuple::new(a, b, c, c / e, ell))
                    })
            })
    }))
}

pub fn describe(m: u64, n: u64, t: GoursatTuple) -> Result<SubgroupDescriptor> {
    t.validate(m, n)?;
    let order = arith::checked_mul(t.a, t.d)?;
    let exponent = lcm(t.a, t.c)?;
    let u = gcd(t.b, t.d);
    debug_assert_eq!(u as u128 * exponent as u128, order as u128);
    let generators = [
        ((m / t.a) % m, mul_mod(t.ell, n / t.c, n)),
        (0, (n / t.d) % n),
    ];
    Ok(SubgroupDescriptor {
        ambient: (m, n),
        tuple: t,
        order,
        exponent,
        invariants: InvariantPair { u, v: exponent },
        cyclic: u == 1,
        generators,
    })
}

fn mul_mod(x: u64, y: u64, modulus: u64) -> u64 {
    ((x as u128 * y as u128) % modulus as u128) as u64
}

/// Lists the `a * d` elements of the subgroup named by `t`.
pub fn materialize(m: u64, n: u64, t: GoursatTuple) -> Result<ElementSet> {
    t.validate(m, n)?;
    let size = arith::checked_mul(t.a, t.d)?;
    let x_step = m / t.a;
    let y_shift = n / t.c;
    let y_step = n / t.d;
    let mut elements = Vec::with_capacity(usize::try_from(size).map_err(|_| Error::Overflow("size"))?);
    for i in 0..t.a {
        let base = mul_mod(i, mul_mod(t.ell, y_shift, n), n);
        let mut column: Vec<u64> = (0..t.d)
            .map(|j| add_mod(base, j * y_step, n))
            .collect();
        column.sort_unstable();
        elements.extend(column.into_iter().map(|y| (i * x_step, y)));
    }
    Ok(ElementSet::from_sorted(m, n, elements))
}

/// One row of the unreduced representation: for the given `i`, the second
/// coordinates `i ell n/c + j n/d` with `j_start <= j < j_start + d` all lie
/// in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OffsetRow {
    pub i: u64,
    pub j_start: i64,
}

impl OffsetRow {
    /// The `d` unreduced second coordinates of this row, ascending.
    pub fn column(&self, n: u64, t: GoursatTuple) -> Vec<i128> {
        let base = self.i as i128 * t.ell as i128 * (n / t.c) as i128;
        (0..t.d as i128)
            .map(|k| base + (self.j_start as i128 + k) * (n / t.d) as i128)
            .collect()
    }
}

/// Offsets `j_i = -floor(i ell d / c)` for `0 <= i < a`.
pub fn offset_form(m: u64, n: u64, t: GoursatTuple) -> Result<Vec<OffsetRow>> {
    t.validate(m, n)?;
    (0..t.a)
        .map(|i| {
            let q = i as u128 * t.ell as u128 * t.d as u128 / t.c as u128;
            let j_start = i64::try_from(q)
                .map(|q| -q)
                .map_err(|_| Error::Overflow("offset"))?;
            Ok(OffsetRow { i, j_start })
        })
        .collect()
}

/// Inverse of [`materialize`]: recovers the tuple naming a given subgroup.
///
/// `a` and `c` are the sizes of the two coordinate projections, `d` the size
/// of the slice `{y : (0, y) in s}` and `b` that of `{x : (x, 0) in s}`. The
/// multiplier `ell` is read off the element whose first coordinate is `m/a`.
pub fn find_tuple(m: u64, n: u64, s: &ElementSet) -> Result<GoursatTuple> {
    if s.ambient() != (m, n) {
        return Err(Error::NotClosed(format!(
            "set lives in Z_{} x Z_{}, not Z_{m} x Z_{n}",
            s.m, s.n
        )));
    }
    s.check_closed()?;
    let xs: BTreeSet<u64> = s.elements.iter().map(|p| p.0).collect();
    let ys: BTreeSet<u64> = s.elements.iter().map(|p| p.1).collect();
    let a = xs.len() as u64;
    let c = ys.len() as u64;
    let b = s.elements.iter().filter(|p| p.1 == 0).count() as u64;
    let d = s.elements.iter().filter(|p| p.0 == 0).count() as u64;
    if b == 0 || d == 0 || a % b != 0 || c % d != 0 || a / b != c / d {
        return Err(Error::NoMatchingTuple);
    }
    let e = a / b;
    let ell = if e == 1 {
        1
    } else {
        let x0 = m / a;
        let &(_, y0) = s
            .elements
            .iter()
            .find(|p| p.0 == x0)
            .ok_or(Error::NoMatchingTuple)?;
        let shift = n / c;
        if y0 % shift != 0 {
            return Err(Error::NoMatchingTuple);
        }
        match (y0 / shift) % e {
            0 => e,
            k => k,
        }
    };
    let t = GoursatTuple::new(a, b, c, d, ell);
    if t.check(m, n).is_err() || materialize(m, n, t)? != *s {
        return Err(Error::NoMatchingTuple);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// All subgroups of a tiny group by closing every subset of generators.
    fn closure_subgroups(m: u64, n: u64) -> BTreeSet<Vec<(u64, u64)>> {
        let points: Vec<_> = (0..m).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << points.len()) {
            let mut set: BTreeSet<(u64, u64)> = [(0, 0)].into();
            for (k, p) in points.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    set.insert(*p);
                }
            }
            loop {
                let snapshot: Vec<_> = set.iter().copied().collect();
                let before = set.len();
                for &(x1, y1) in &snapshot {
                    for &(x2, y2) in &snapshot {
                        set.insert(((x1 + x2) % m, (y1 + y2) % n));
                    }
                }
                if set.len() == before {
                    break;
                }
            }
            out.insert(set.into_iter().collect());
        }
        out
    }

    #[test]
    fn trivial_ambient_has_one_tuple() {
        let all: Vec<_> = enumerate_tuples(1, 1).unwrap().collect();
        assert_eq!(all, vec![GoursatTuple::new(1, 1, 1, 1, 1)]);
    }

    #[test]
    fn klein_four_tuples() {
        let all: Vec<_> = enumerate_tuples(2, 2).unwrap().collect();
        let expected = [
            (1, 1, 1, 1, 1),
            (1, 1, 2, 2, 1),
            (2, 1, 2, 1, 1),
            (2, 2, 1, 1, 1),
            (2, 2, 2, 2, 1),
        ]
        .map(|(a, b, c, d, l)| GoursatTuple::new(a, b, c, d, l));
        assert_eq!(all, expected);
        let materialized: BTreeSet<Vec<_>> = all
            .iter()
            .map(|&t| materialize(2, 2, t).unwrap().elements().to_vec())
            .collect();
        assert_eq!(materialized, closure_subgroups(2, 2));
    }

    #[test]
    fn tiny_groups_match_subset_closure() {
        for (m, n) in [(1, 4), (2, 3), (3, 3), (2, 4), (4, 2)] {
            let materialized: BTreeSet<Vec<_>> = enumerate_tuples(m, n)
                .unwrap()
                .map(|t| materialize(m, n, t).unwrap().elements().to_vec())
                .collect();
            assert_eq!(materialized, closure_subgroups(m, n), "({m},{n})");
        }
    }

    #[test]
    fn enumeration_is_sorted() {
        let all: Vec<_> = enumerate_tuples(12, 18).unwrap().collect();
        assert_eq!(all.len(), 80);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|t| t.check(12, 18).is_ok()));
    }

    #[test]
    fn describe_figure_subgroup() {
        let desc = describe(12, 18, GoursatTuple::new(6, 2, 18, 6, 1)).unwrap();
        assert_eq!(desc.order, 36);
        assert_eq!(desc.exponent, 18);
        assert_eq!(desc.invariants, InvariantPair { u: 2, v: 18 });
        assert!(!desc.cyclic);
        assert_eq!(desc.generators, [(2, 1), (0, 3)]);
    }

    #[test]
    fn describe_trivial_and_small() {
        let desc = describe(5, 7, GoursatTuple::new(1, 1, 1, 1, 1)).unwrap();
        assert_eq!((desc.order, desc.exponent), (1, 1));
        assert_eq!(desc.invariants, InvariantPair { u: 1, v: 1 });
        assert!(desc.cyclic);

        // Element orders of the materialized set: lcm is 4, size 8, so Z_2 x Z_4.
        let t = GoursatTuple::new(4, 4, 2, 2, 1);
        let set = materialize(12, 18, t).unwrap();
        let max_order = set
            .elements()
            .iter()
            .map(|&(x, y)| lcm(12 / gcd(x, 12), 18 / gcd(y, 18)).unwrap())
            .max()
            .unwrap();
        assert_eq!((set.len(), max_order), (8, 4));
        let desc = describe(12, 18, t).unwrap();
        assert_eq!(desc.order, 8);
        assert_eq!(desc.invariants, InvariantPair { u: 2, v: 4 });
    }

    #[test]
    fn membership_errors_are_distinct() {
        let cases = [
            ((0, 1, 1, 1, 1), MembershipError::ZeroComponent),
            ((5, 1, 1, 1, 1), MembershipError::ANotDividingM { a: 5, m: 12 }),
            ((4, 3, 1, 1, 1), MembershipError::BNotDividingA { b: 3, a: 4 }),
            ((1, 1, 4, 1, 1), MembershipError::CNotDividingN { c: 4, n: 18 }),
            ((1, 1, 6, 4, 1), MembershipError::DNotDividingC { d: 4, c: 6 }),
            ((4, 1, 2, 1, 1), MembershipError::QuotientMismatch { left: 4, right: 2 }),
            ((6, 2, 18, 6, 4), MembershipError::EllOutOfRange { ell: 4, quotient: 3 }),
            ((6, 2, 18, 6, 3), MembershipError::EllNotCoprime { ell: 3, quotient: 3 }),
        ];
        for ((a, b, c, d, l), expected) in cases {
            let t = GoursatTuple::new(a, b, c, d, l);
            assert_eq!(t.check(12, 18), Err(expected));
            assert!(matches!(
                describe(12, 18, t),
                Err(Error::NotMember { reason, .. }) if reason == expected
            ));
        }
    }

    #[test]
    fn materialize_examples() {
        let set = materialize(12, 18, GoursatTuple::new(6, 2, 18, 6, 1)).unwrap();
        assert_eq!(set.len(), 36);
        let column = |x| -> Vec<u64> {
            set.elements().iter().filter(|p| p.0 == x).map(|p| p.1).collect()
        };
        assert_eq!(column(0), vec![0, 3, 6, 9, 12, 15]);
        assert_eq!(column(2), vec![1, 4, 7, 10, 13, 16]);
        assert!(column(1).is_empty());

        let trivial = materialize(3, 3, GoursatTuple::new(1, 1, 1, 1, 1)).unwrap();
        assert_eq!(trivial.elements(), &[(0, 0)]);

        let set = materialize(4, 1, GoursatTuple::new(2, 2, 1, 1, 1)).unwrap();
        assert_eq!(set.elements(), &[(0, 0), (2, 0)]);
        assert!(materialize(4, 1, GoursatTuple::new(2, 1, 1, 1, 1)).is_err());
    }

    #[test]
    fn offset_form_examples() {
        let t = GoursatTuple::new(6, 2, 18, 6, 1);
        let rows = offset_form(12, 18, t).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[0].j_start, 0);
        assert_eq!(rows[3].j_start, -1);
        let set = materialize(12, 18, t).unwrap();
        for row in rows {
            let column = row.column(18, t);
            assert!(column.iter().all(|&y| (0..18).contains(&y)));
            let x = row.i * 2;
            let expected: Vec<i128> = set
                .elements()
                .iter()
                .filter(|p| p.0 == x)
                .map(|p| p.1 as i128)
                .collect();
            assert_eq!(column, expected);
        }
    }

    #[test]
    fn offset_form_all_tuples_small() {
        for m in 1..=12 {
            for n in 1..=12 {
                for t in enumerate_tuples(m, n).unwrap() {
                    let set = materialize(m, n, t).unwrap();
                    for row in offset_form(m, n, t).unwrap() {
                        let column = row.column(n, t);
                        assert!(column.iter().all(|&y| 0 <= y && y < n as i128));
                        let expected: Vec<i128> = set
                            .elements()
                            .iter()
                            .filter(|p| p.0 == row.i * (m / t.a))
                            .map(|p| p.1 as i128)
                            .collect();
                        assert_eq!(column, expected, "({m},{n}) {t} i={}", row.i);
                    }
                }
            }
        }
    }

    #[test]
    fn find_tuple_examples() {
        let trivial = ElementSet::from_pairs(12, 18, [(0, 0)]).unwrap();
        assert_eq!(find_tuple(12, 18, &trivial).unwrap(), GoursatTuple::new(1, 1, 1, 1, 1));

        let full =
            ElementSet::from_pairs(12, 18, (0..12).flat_map(|x| (0..18).map(move |y| (x, y))))
                .unwrap();
        // b = |{x : (x, 0) in s}| = 12 and d = |{y : (0, y) in s}| = 18.
        assert_eq!(find_tuple(12, 18, &full).unwrap(), GoursatTuple::new(12, 12, 18, 18, 1));

        for t in enumerate_tuples(2, 2).unwrap() {
            assert_eq!(find_tuple(2, 2, &materialize(2, 2, t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn find_tuple_rejects_non_subgroups() {
        let s = ElementSet::from_pairs(4, 4, [(0, 0), (1, 0)]).unwrap();
        assert!(matches!(find_tuple(4, 4, &s), Err(Error::NotClosed(_))));
        let s = ElementSet::from_pairs(4, 4, [(2, 0)]).unwrap();
        assert!(matches!(find_tuple(4, 4, &s), Err(Error::NotClosed(_))));
    }

    #[test]
    fn round_trip_and_order_identity() {
        for m in 1..=24 {
            for n in 1..=24 {
                for t in enumerate_tuples(m, n).unwrap() {
                    let set = materialize(m, n, t).unwrap();
                    assert_eq!(t.a * t.d, t.b * t.c);
                    assert_eq!(set.len() as u64, t.a * t.d);
                    assert_eq!(gcd(t.b, t.d) * lcm(t.a, t.c).unwrap(), t.a * t.d);
                    assert_eq!(find_tuple(m, n, &set).unwrap(), t, "({m},{n})");
                }
            }
        }
    }

    #[test]
    fn exponent_and_invariant_laws() {
        for m in 1..=24 {
            for n in 1..=24 {
                for t in enumerate_tuples(m, n).unwrap() {
                    let desc = describe(m, n, t).unwrap();
                    let set = materialize(m, n, t).unwrap();
                    let exponent = set.elements().iter().fold(1, |acc, &(x, y)| {
                        let order = lcm(m / gcd(x, m), n / gcd(y, n)).unwrap();
                        lcm(acc, order).unwrap()
                    });
                    assert_eq!(desc.exponent, exponent);
                    assert_eq!(desc.invariants.u, desc.order / desc.exponent);
                    assert_eq!(gcd(m, n) % desc.invariants.u, 0);
                    assert_eq!(desc.cyclic, desc.invariants.u == 1);
                    for g in desc.generators {
                        assert!(set.contains(g));
                    }
                }
            }
        }
    }

    #[test]
    fn bijection_up_to_36() {
        for m in 1..=36 {
            for n in 1..=36 {
                let sets: BTreeSet<ElementSet> = enumerate_tuples(m, n)
                    .unwrap()
                    .map(|t| materialize(m, n, t).unwrap())
                    .collect();
                let count = enumerate_tuples(m, n).unwrap().count();
                assert_eq!(sets.len(), count, "({m},{n})");
                assert_eq!(count as u64, crate::counting::count_total(m, n).unwrap());
            }
        }
    }

    #[test]
    fn closure_checked_for_small_sets() {
        for m in 1..=10 {
            for n in 1..=10 {
                for t in enumerate_tuples(m, n).unwrap() {
                    materialize(m, n, t).unwrap().check_closed().unwrap();
                }
            }
        }
    }

    #[test]
    fn degenerate_ambient() {
        assert_eq!(enumerate_tuples(7, 1).unwrap().count(), 2);
        assert_eq!(enumerate_tuples(1, 12).unwrap().count(), 6);
        assert!(enumerate_tuples(0, 3).is_err());
    }
}
