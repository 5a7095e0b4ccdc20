//! Exact number-theory kernel over `u64`.
//!
//! Every function rejects `0` where a positive integer is required, and every
//! product is formed in `u128` and checked back into range, so overflow shows
//! up as [`Error::Overflow`] rather than wraparound.

use crate::error::{Error, Result};

pub(crate) fn positive(n: u64, what: &'static str) -> Result<u64> {
    if n == 0 {
        Err(Error::Zero(what))
    } else {
        Ok(n)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple; `lcm(0, x) = 0`.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    checked_mul(a / gcd(a, b), b)
}

pub fn checked_mul(a: u64, b: u64) -> Result<u64> {
    narrow(a as u128 * b as u128)
}

pub fn checked_add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow("power"))
}

fn narrow(value: u128) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Overflow("product"))
}

/// Canonical prime factorization: primes strictly increasing, exponents positive.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Exponent of `p` (zero when `p` does not occur).
    pub fn valuation(&self, p: u64) -> u32 {
        self.pairs
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn value(&self) -> Result<u64> {
        self.pairs
            .iter()
            .try_fold(1u64, |acc, &(p, e)| checked_mul(acc, checked_pow(p, e)?))
    }

    /// Number of divisors of the factored value.
    pub fn divisor_count(&self) -> u64 {
        self.pairs.iter().map(|&(_, e)| e as u64 + 1).product()
    }

    /// Factorization of the product of the two factored values.
    pub fn merge(&self, other: &Factorization) -> Factorization {
        let mut pairs = Vec::with_capacity(self.pairs.len() + other.pairs.len());
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() || j < other.pairs.len() {
            match (self.pairs.get(i), other.pairs.get(j)) {
                (Some(&(p, e)), Some(&(q, f))) if p == q => {
                    pairs.push((p, e + f));
                    i += 1;
                    j += 1;
                }
                (Some(&(p, e)), Some(&(q, _))) if p < q => {
                    pairs.push((p, e));
                    i += 1;
                }
                (Some(&(p, e)), None) => {
                    pairs.push((p, e));
                    i += 1;
                }
                (_, Some(&(q, f))) => {
                    pairs.push((q, f));
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Factorization { pairs }
    }

    /// All divisors of the factored value, ascending.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.pairs {
            let len = out.len();
            let mut power = 1u64;
            for _ in 0..e {
                // p^e divides a value that fit in u64, so this cannot overflow.
                power *= p;
                for k in 0..len {
                    out.push(out[k] * power);
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Trial division up to `sqrt(n)`.
pub fn factorize(n: u64) -> Result<Factorization> {
    let mut n = positive(n, "n")?;
    let mut pairs = Vec::new();
    let mut push_all = |n: &mut u64, p: u64| {
        let mut e = 0;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push_all(&mut n, 2);
    let mut p = 3u64;
    while p <= n / p {
        push_all(&mut n, p);
        p += 2;
    }
    if n > 1 {
        pairs.push((n, 1));
    }
    Ok(Factorization { pairs })
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).is_ok_and(|f| f.pairs == [(n, 1)])
}

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// Number of positive divisors.
pub fn tau(n: u64) -> Result<u64> {
    Ok(factorize(n)?.divisor_count())
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(phi_from(&f))
}

pub(crate) fn phi_from(f: &Factorization) -> u64 {
    f.pairs
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn mobius(n: u64) -> Result<i8> {
    let f = factorize(n)?;
    if f.pairs.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if f.pairs.len() % 2 == 0 {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Dirichlet convolution `(f * g)(n) = sum over d | n of f(d) g(n/d)`.
pub fn dirichlet<F, G>(f: F, g: G, n: u64) -> Result<i64>
where
    F: Fn(u64) -> Result<i64>,
    G: Fn(u64) -> Result<i64>,
{
    let mut acc: i128 = 0;
    for d in divisors(n)? {
        acc = acc
            .checked_add(f(d)? as i128 * g(n / d)? as i128)
            .ok_or(Error::Overflow("dirichlet"))?;
    }
    i64::try_from(acc).map_err(|_| Error::Overflow("dirichlet"))
}

/// `(mu * phi)(n)`, the coefficient in the cyclic-subgroup count.
pub fn mobius_phi(n: u64) -> Result<u64> {
    let value = dirichlet(|d| Ok(mobius(d)? as i64), |d| Ok(euler_phi(d)? as i64), n)?;
    // (mu * phi) is multiplicative with value p^e - 2p^(e-1) + p^(e-2) >= 0 at prime powers.
    u64::try_from(value).map_err(|_| Error::Overflow("mobius_phi"))
}

/// Evaluates a multiplicative function of two variables from its values at
/// prime powers: the product of `local(p, v_p(m), v_p(n))` over primes `p | mn`.
pub fn multiplicative_eval_2var<F>(local: F, m: u64, n: u64) -> Result<u64>
where
    F: Fn(u64, u32, u32) -> Result<u64>,
{
    let fm = factorize(positive(m, "m")?)?;
    let fn_ = factorize(positive(n, "n")?)?;
    let joint = fm.merge(&fn_);
    joint.pairs.iter().try_fold(1u64, |acc, &(p, _)| {
        checked_mul(acc, local(p, fm.valuation(p), fn_.valuation(p))?)
    })
}
