use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for
/// every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A positive integer kept as its prime factorization.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FactoredInt(BTreeMap<u64, u32>);

impl FactoredInt {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn prime(p: u64) -> Result<Self> {
        Self::from_factors([(p, 1)])
    }

    /// Builds a product of prime powers, re-verifying every prime.
    pub fn from_factors(factors: impl IntoIterator<Item = (u64, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, e) in factors {
            if !is_prime(p) {
                return Err(Error::Arithmetic(format!("{p} is not prime")));
            }
            if e > 0 {
                *map.entry(p).or_insert(0) += e;
            }
        }
        Ok(Self(map))
    }

    pub fn from_primes(primes: &[u64]) -> Result<Self> {
        Self::from_factors(primes.iter().map(|&p| (p, 1)))
    }

    /// Factors `n` by trial division up to 10^6; a leftover cofactor must
    /// itself be prime.
    pub fn factor(mut n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Arithmetic("zero has no factorization".into()));
        }
        let mut map = BTreeMap::new();
        let mut d = 2u64;
        while d <= 1_000_000 && d * d <= n {
            while n.is_multiple_of(d) {
                *map.entry(d).or_insert(0) += 1;
                n /= d;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if n > 1 {
            if !is_prime(n) {
                return Err(Error::Arithmetic(format!(
                    "cofactor {n} is composite with no factor below 10^6"
                )));
            }
            *map.entry(n).or_insert(0) += 1;
        }
        Ok(Self(map))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.0.get(&p).copied().unwrap_or(0)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.keys().copied()
    }

    pub fn factors(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.0.iter().map(|(&p, &e)| (p, e))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut map = self.0.clone();
        for (&p, &e) in &other.0 {
            *map.entry(p).or_insert(0) += e;
        }
        Self(map)
    }

    pub fn pow(&self, k: u32) -> Self {
        Self(
            self.0
                .iter()
                .map(|(&p, &e)| (p, e * k))
                .filter(|&(_, e)| e > 0)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|(&p, &e)| other.exponent(p) >= e)
    }

    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if !divisor.divides(self) {
            return Err(Error::Arithmetic(format!(
                "{divisor} does not divide {self}"
            )));
        }
        let mut map = self.0.clone();
        for (&p, &e) in &divisor.0 {
            let slot = map.get_mut(&p).expect("checked by divides");
            *slot -= e;
            if *slot == 0 {
                map.remove(&p);
            }
        }
        Ok(Self(map))
    }

    /// All positive divisors.
    pub fn divisors(&self) -> Vec<Self> {
        let mut out = vec![Self::one()];
        for (&p, &e) in &self.0 {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in &out {
                for k in 0..=e {
                    next.push(d.mul(&Self(BTreeMap::from([(p, k)])).pow(1)).trimmed());
                }
            }
            out = next;
        }
        out.sort();
        out
    }

    fn trimmed(mut self) -> Self {
        self.0.retain(|_, e| *e > 0);
        self
    }

    pub fn value(&self) -> BigUint {
        self.0.iter().fold(BigUint::from(1u32), |acc, (&p, &e)| {
            acc * BigUint::from(p).pow(e)
        })
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (&p, &e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("·")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A set of character degrees; always contains 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSet(BTreeSet<FactoredInt>);

impl DegreeSet {
    pub fn new(degrees: impl IntoIterator<Item = FactoredInt>) -> Result<Self> {
        let set: BTreeSet<_> = degrees.into_iter().collect();
        if !set.contains(&FactoredInt::one()) {
            return Err(Error::Arithmetic("a degree set must contain 1".into()));
        }
        Ok(Self(set))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, d: &FactoredInt) -> bool {
        self.0.contains(d)
    }

    pub fn iter(&self) -> impl Iterator<Item = &FactoredInt> {
        self.0.iter()
    }

    /// Every prime dividing some degree, ascending.
    pub fn primes(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.0.iter().flat_map(|d| d.primes()).collect();
        set.into_iter().collect()
    }
}

/// Degrees are listed in increasing numeric order.
impl fmt::Display for DegreeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut sorted: Vec<(BigUint, &FactoredInt)> =
            self.0.iter().map(|d| (d.value(), d)).collect();
        sorted.sort();
        f.write_str("{")?;
        for (i, (_, d)) in sorted.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("}")
    }
}
