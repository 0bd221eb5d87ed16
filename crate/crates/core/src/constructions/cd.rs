use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::factored::{is_prime, DegreeSet, FactoredInt};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Vertex `i` of a degree graph stands for `primes[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeLabeling {
    primes: Vec<u64>,
}

impl PrimeLabeling {
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn prime(&self, v: usize) -> Option<u64> {
        self.primes.get(v).copied()
    }

    pub fn vertex_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }
}

/// The prime degree graph of a degree set, vertices in ascending prime order.
pub fn graph_from_cd(ds: &DegreeSet) -> Result<(Graph, PrimeLabeling)> {
    let primes = ds.primes();
    if primes.is_empty() {
        return Err(Error::Arithmetic("no prime divides any degree".into()));
    }
    if primes.len() > MAX_ORDER {
        return Err(Error::OrderOutOfRange(primes.len()));
    }
    let mut edges = Vec::new();
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            if ds
                .iter()
                .any(|d| d.exponent(primes[i]) > 0 && d.exponent(primes[j]) > 0)
            {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(primes.len(), &edges)?;
    Ok((g, PrimeLabeling { primes }))
}

fn require_prime(n: u64) -> Result<()> {
    if is_prime(n) {
        Ok(())
    } else {
        Err(Error::Arithmetic(format!("{n} is not prime")))
    }
}

/// Does `f` expand to exactly `(base^exp - 1) / divisor`?
pub fn verify_factored_value(f: &FactoredInt, base: u64, exp: u32, divisor: u64) -> Result<bool> {
    if base < 2 || exp == 0 {
        return Err(Error::Arithmetic(format!(
            "{base}^{exp} - 1 is not a valid target"
        )));
    }
    if divisor == 0 {
        return Err(Error::Arithmetic("division by zero".into()));
    }
    let target = BigUint::from(base).pow(exp) - 1u32;
    let (quot, rem) = target.div_rem(&BigUint::from(divisor));
    Ok(rem == BigUint::from(0u32) && quot == f.value())
}

/// Degrees of the semilinear group on the field of order `q^n`: the
/// divisors of `n` together with `q^n - 1`.
pub fn cd_semilinear(q: u64, n: u32, mult: &FactoredInt) -> Result<DegreeSet> {
    require_prime(q)?;
    if !verify_factored_value(mult, q, n, 1)? {
        return Err(Error::Arithmetic(format!("{mult} is not {q}^{n} - 1")));
    }
    let mut degrees = FactoredInt::factor(u64::from(n))?.divisors();
    degrees.push(mult.clone());
    DegreeSet::new(degrees)
}

fn phi_prime(p: &BigUint, q: u32) -> BigUint {
    (p.pow(q) - 1u32) / (p - 1u32)
}

/// Pairwise coprimality of the cyclotomic values at `p` for `q`, `r` and `qr`.
pub fn cyclotomic_coprimality(p: u64, q: u64, r: u64) -> Result<bool> {
    for n in [p, q, r] {
        require_prime(n)?;
    }
    if q >= r {
        return Err(Error::Arithmetic(format!(
            "need q < r, got q = {q}, r = {r}"
        )));
    }
    let (q32, r32) = match (u32::try_from(q), u32::try_from(r)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return Err(Error::Arithmetic("exponent too large".into())),
    };
    let pb = BigUint::from(p);
    let one = BigUint::from(1u32);
    let pm1 = &pb - 1u32;
    let phi_q = phi_prime(&pb, q32);
    let phi_r = phi_prime(&pb, r32);
    let pq = pb.pow(q32) - 1u32;
    let pr = pb.pow(r32) - 1u32;
    let phi_qr = (pb.pow(q32 * r32) - 1u32) * &pm1 / (pq * pr);
    Ok(phi_q.gcd(&phi_r) == one && phi_q.gcd(&phi_qr) == one && phi_r.gcd(&phi_qr) == one)
}

/// The eleven degrees of the diameter-three construction with `q = 3`.
pub fn cd_diameter3(p: u64, r: u64, stuv: [u64; 4]) -> Result<DegreeSet> {
    if !cyclotomic_coprimality(p, 3, r)? {
        return Err(Error::Arithmetic(format!(
            "cyclotomic values at {p} for 3, {r}, {} are not coprime",
            3 * r
        )));
    }
    let mut sorted = stuv;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Arithmetic("s, t, u, v must be distinct".into()));
    }
    if let Some(&bad) = sorted.iter().find(|&&x| x == p || x == 3 || x == r) {
        return Err(Error::Arithmetic(format!("{bad} collides with p, q or r")));
    }
    let prod = FactoredInt::from_primes(&stuv)?;
    let three_r = u32::try_from(3 * r).map_err(|_| Error::Arithmetic("r too large".into()))?;
    if !verify_factored_value(&prod, p, three_r, p - 1)? {
        return Err(Error::Arithmetic(format!(
            "{prod} is not ({p}^{three_r} - 1)/({p} - 1)"
        )));
    }
    let small = FactoredInt::factor(p * p + p + 1)?;
    let rest = prod.div_exact(&small).map_err(|_| {
        Error::Arithmetic(format!("{p}^2 + {p} + 1 = {small} does not divide {prod}"))
    })?;

    let three = FactoredInt::prime(3)?;
    let rf = FactoredInt::prime(r)?;
    let pf = FactoredInt::prime(p)?;
    let pp = |e: u64| pf.pow(e as u32);
    let degrees = vec![
        FactoredInt::one(),
        three.clone(),
        rf.clone(),
        three.mul(&rf),
        prod.clone(),
        pp((3 * r - 1) / 2).mul(&prod),
        three.mul(&pp(3 * r)).mul(&rest),
        pp(3 * r - 3).mul(&rest),
        three.mul(&pp(3 * r - 3)).mul(&rest),
        pp(3 * r - 3).mul(&prod),
        pp(3 * r - 2).mul(&prod),
    ];
    DegreeSet::new(degrees)
}

/// Cliques `a_1..a_k` and `b_1..b_t` with `a_i ~ b_i` for `i <= t`.
/// The `a` clique takes vertices `0..k`.
pub fn gamma_kt_graph(k: usize, t: usize) -> Result<Graph> {
    if t < 1 || k < t {
        return Err(Error::Arithmetic(format!(
            "need k >= t >= 1, got k = {k}, t = {t}"
        )));
    }
    if k + t > MAX_ORDER {
        return Err(Error::OrderOutOfRange(k + t));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((i, j));
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            edges.push((k + i, k + j));
        }
        edges.push((i, k + i));
    }
    Graph::from_edges(k + t, &edges)
}
