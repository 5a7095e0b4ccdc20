//! Closed-form subgroup counts for `Z_m x Z_n`.
//!
//! All results are exact `u64` values; intermediate sums are checked.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::{
    self, checked_add, checked_mul, checked_pow, euler_phi, factorize, gcd, is_prime, lcm,
    mobius_phi, positive, Factorization,
};
use crate::error::{Error, Result};

/// Isomorphism type `Z_A x Z_B` with `A | B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TypeKey {
    a: u64,
    b: u64,
}

impl TypeKey {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        if a == 0 || b == 0 || b % a != 0 {
            return Err(Error::TypeKey { a, b });
        }
        Ok(Self { a, b })
    }

    /// Smaller invariant factor `A`.
    pub fn small(&self) -> u64 {
        self.a
    }

    /// Larger invariant factor `B`, the exponent.
    pub fn large(&self) -> u64 {
        self.b
    }
}

impl fmt::Display for TypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{} x Z_{}", self.a, self.b)
    }
}

/// Aggregate subgroup counts for one ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupTable {
    pub ambient: (u64, u64),
    pub total: u64,
    pub by_order: BTreeMap<u64, u64>,
    pub by_type: BTreeMap<TypeKey, u64>,
    pub cyclic_total: u64,
    pub noncyclic_total: u64,
}

fn sum<I: IntoIterator<Item = Result<u64>>>(terms: I) -> Result<u64> {
    terms
        .into_iter()
        .try_fold(0u64, |acc, term| checked_add(acc, term?))
}

fn divides_product(d: u64, m: u64, n: u64) -> bool {
    (m as u128 * n as u128) % d as u128 == 0
}

/// `s(m, n) = sum over i | m, j | n of gcd(i, j)`.
pub fn count_total_gcd_sum(m: u64, n: u64) -> Result<u64> {
    let divs_m = arith::divisors(positive(m, "m")?)?;
    let divs_n = arith::divisors(positive(n, "n")?)?;
    sum(divs_m
        .iter()
        .flat_map(|&i| divs_n.iter().map(move |&j| Ok(gcd(i, j)))))
}

/// Total number of subgroups,
/// `s(m, n) = sum over t | gcd(m, n) of phi(t) tau(m/t) tau(n/t)`.
pub fn count_total(m: u64, n: u64) -> Result<u64> {
    divisor_weighted_tau_sum(m, n, euler_phi)
}

fn divisor_weighted_tau_sum(m: u64, n: u64, weight: fn(u64) -> Result<u64>) -> Result<u64> {
    let g = gcd(positive(m, "m")?, positive(n, "n")?);
    sum(arith::divisors(g)?.into_iter().map(|t| {
        let tt = checked_mul(arith::tau(m / t)?, arith::tau(n / t)?)?;
        checked_mul(weight(t)?, tt)
    }))
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Closed form for the number of subgroups of `Z_{p^a} x Z_{p^b}`, `1 <= a <= b`.
pub fn count_total_prime_power(p: u64, a: u32, b: u32) -> Result<u64> {
    require_prime(p)?;
    if a < 1 || a > b {
        return Err(Error::ExponentOrder { a, b });
    }
    let overflow = || Error::Overflow("prime-power total");
    let pow = |e: u32| -> Result<i128> { (p as i128).checked_pow(e).ok_or_else(overflow) };
    let (a_, b_) = (a as i128, b as i128);
    let p_ = p as i128;
    let numerator = (b_ - a_ + 1)
        .checked_mul(pow(a + 2)?)
        .and_then(|x| x.checked_sub((b_ - a_ - 1).checked_mul(pow(a + 1).ok()?)?))
        .and_then(|x| x.checked_sub((a_ + b_ + 3) * p_))
        .map(|x| x + (a_ + b_ + 1))
        .ok_or_else(overflow)?;
    let denominator = (p_ - 1) * (p_ - 1);
    debug_assert_eq!(numerator % denominator, 0);
    u64::try_from(numerator / denominator).map_err(|_| overflow())
}

/// Number of subgroups of order `delta`:
/// sum over `i | gcd(m, delta)`, `j | gcd(n, delta)` with `delta | ij` of `phi(ij / delta)`.
/// Zero when `delta` does not divide `mn`.
pub fn count_by_order(m: u64, n: u64, delta: u64) -> Result<u64> {
    positive(m, "m")?;
    positive(n, "n")?;
    positive(delta, "delta")?;
    if !divides_product(delta, m, n) {
        return Ok(0);
    }
    let divs_i = arith::divisors(gcd(m, delta))?;
    let divs_j = arith::divisors(gcd(n, delta))?;
    let mut total = 0u64;
    for &i in &divs_i {
        for &j in &divs_j {
            let ij = i as u128 * j as u128;
            if ij % delta as u128 == 0 {
                // ij / delta <= min(i, j), so it fits.
                total = checked_add(total, euler_phi((ij / delta as u128) as u64)?)?;
            }
        }
    }
    Ok(total)
}

/// Closed form for the number of subgroups of order `p^c` in `Z_{p^a} x Z_{p^b}`.
pub fn count_by_order_prime_power(p: u64, a: u32, b: u32, c: u32) -> Result<u64> {
    require_prime(p)?;
    if a < 1 || a > b {
        return Err(Error::ExponentOrder { a, b });
    }
    if c > a + b {
        return Err(Error::ExponentTooLarge { c, max: a + b });
    }
    let top = if c <= a {
        c + 1
    } else if c <= b {
        a + 1
    } else {
        a + b - c + 1
    };
    // (p^top - 1) / (p - 1) = 1 + p + ... + p^(top-1)
    Ok((checked_pow(p, top)? - 1) / (p - 1))
}

/// Number of subgroups isomorphic to `Z_A x Z_B`:
/// sum over `i | m`, `j | n` with `AB | ij` and `lcm(i, j) = B` of `phi(ij / AB)`.
/// Zero when `A` does not divide `gcd(m, n)`.
pub fn count_by_type(m: u64, n: u64, key: TypeKey) -> Result<u64> {
    let g = gcd(positive(m, "m")?, positive(n, "n")?);
    if g % key.a != 0 {
        return Ok(0);
    }
    let ab = key.a as u128 * key.b as u128;
    let divs_m = arith::divisors(m)?;
    let divs_n = arith::divisors(n)?;
    let mut total = 0u64;
    for &i in &divs_m {
        if key.b % i != 0 {
            continue;
        }
        for &j in &divs_n {
            let ij = i as u128 * j as u128;
            if ij % ab == 0 && lcm(i, j)? == key.b {
                total = checked_add(total, euler_phi((ij / ab) as u64)?)?;
            }
        }
    }
    Ok(total)
}

/// `c(m, n) = sum over i | m, j | n of phi(gcd(i, j))`.
pub fn count_cyclic_gcd_sum(m: u64, n: u64) -> Result<u64> {
    let divs_m = arith::divisors(positive(m, "m")?)?;
    let divs_n = arith::divisors(positive(n, "n")?)?;
    sum(divs_m
        .iter()
        .flat_map(|&i| divs_n.iter().map(move |&j| euler_phi(gcd(i, j)))))
}

/// Number of cyclic subgroups,
/// `c(m, n) = sum over t | gcd(m, n) of (mu * phi)(t) tau(m/t) tau(n/t)`.
pub fn count_cyclic(m: u64, n: u64) -> Result<u64> {
    divisor_weighted_tau_sum(m, n, mobius_phi)
}

/// Cyclic subgroups of order `delta`: sum over `i | m`, `j | n` with
/// `lcm(i, j) = delta` of `phi(gcd(i, j))`.
pub fn count_cyclic_by_order(m: u64, n: u64, delta: u64) -> Result<u64> {
    positive(m, "m")?;
    positive(n, "n")?;
    positive(delta, "delta")?;
    let divs_i = arith::divisors(gcd(m, delta))?;
    let divs_j = arith::divisors(gcd(n, delta))?;
    let mut total = 0u64;
    for &i in &divs_i {
        for &j in &divs_j {
            if lcm(i, j)? == delta {
                total = checked_add(total, euler_phi(gcd(i, j))?)?;
            }
        }
    }
    Ok(total)
}

/// Local factor of `s` at a prime: the closed form when both exponents are
/// positive, otherwise `(alpha + 1)(beta + 1)`.
pub fn total_local_factor(p: u64, alpha: u32, beta: u32) -> Result<u64> {
    if alpha == 0 || beta == 0 {
        return Ok((alpha as u64 + 1) * (beta as u64 + 1));
    }
    count_total_prime_power(p, alpha.min(beta), alpha.max(beta))
}

/// `s(m, n)` as a product of prime-power local factors.
pub fn count_total_fast(m: u64, n: u64) -> Result<u64> {
    arith::multiplicative_eval_2var(total_local_factor, m, n)
}

/// Builds the full count table from the closed forms. Zero rows are omitted.
pub fn build_table(m: u64, n: u64) -> Result<SubgroupTable> {
    let fm = factorize(positive(m, "m")?)?;
    let fn_ = factorize(positive(n, "n")?)?;
    let total = count_total(m, n)?;

    let mut by_order = BTreeMap::new();
    for delta in fm.merge(&fn_).divisors() {
        let count = count_by_order(m, n, delta)?;
        if count > 0 {
            by_order.insert(delta, count);
        }
    }

    let exponent = lcm(m, n)?;
    let exponent_divs = exponent_divisors(&fm, &fn_);
    let mut by_type = BTreeMap::new();
    for small in arith::divisors(gcd(m, n))? {
        for &large in exponent_divs.iter().filter(|&&b| b % small == 0) {
            debug_assert_eq!(exponent % large, 0);
            let key = TypeKey::new(small, large)?;
            let count = count_by_type(m, n, key)?;
            if count > 0 {
                by_type.insert(key, count);
            }
        }
    }

    let cyclic_total = count_cyclic(m, n)?;
    Ok(SubgroupTable {
        ambient: (m, n),
        total,
        by_order,
        by_type,
        cyclic_total,
        noncyclic_total: total - cyclic_total,
    })
}

/// Divisors of `lcm(m, n)` from the two factorizations.
fn exponent_divisors(fm: &Factorization, fn_: &Factorization) -> Vec<u64> {
    let joint = fm.merge(fn_);
    let mut out = vec![1u64];
    for &(p, _) in joint.pairs() {
        let e = fm.valuation(p).max(fn_.valuation(p));
        let len = out.len();
        let mut power = 1u64;
        for _ in 0..e {
            power *= p;
            for k in 0..len {
                out.push(out[k] * power);
            }
        }
    }
    out.sort_unstable();
    out
}
