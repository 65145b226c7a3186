//! Exact rational arithmetic, prime enumeration, and the number-theoretic
//! primitives every other module consumes.
//!
//! Rationals are immutable, eagerly reduced, and structurally nonnegative
//! (numerator and denominator are `BigUint`). No floating point lives here.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::Add;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// Hard ceiling for sieve-based prime enumeration. Bounds beyond this are
/// refused rather than silently degraded.
pub const SIEVE_CAP: u64 = 10_000_000;

/// An exact nonnegative rational in lowest terms.
///
/// Invariants: gcd(num, den) = 1, den >= 1, and num = 0 implies den = 1;
/// all enforced on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rat(Ratio<BigUint>);

impl Rat {
    /// Builds the reduced rational num/den. Fails on a zero denominator.
    pub fn new<N, D>(num: N, den: D) -> Result<Self>
    where
        N: Into<BigUint>,
        D: Into<BigUint>,
    {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::InvalidRational("denominator must be positive".into()));
        }
        Ok(Rat(Ratio::new(num.into(), den)))
    }

    /// Builds a rational from signed machine integers, rejecting a negative
    /// numerator or a nonpositive denominator.
    pub fn make(num: i64, den: i64) -> Result<Self> {
        if num < 0 {
            return Err(Error::InvalidRational(format!("negative numerator {num}")));
        }
        if den <= 0 {
            return Err(Error::InvalidRational(format!("nonpositive denominator {den}")));
        }
        Rat::new(num as u64, den as u64)
    }

    /// The rational zero (canonically 0/1).
    pub fn zero() -> Self {
        Rat(Ratio::zero())
    }

    /// The rational one.
    pub fn one() -> Self {
        Rat(Ratio::one())
    }

    /// A nonnegative integer as a rational.
    pub fn from_integer<N: Into<BigUint>>(n: N) -> Self {
        Rat(Ratio::from_integer(n.into()))
    }

    /// Numerator n(r) of the reduced form.
    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    /// Denominator d(r) of the reduced form.
    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    /// Whether the value is zero.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Whether the value is a nonnegative integer (denominator 1).
    pub fn is_integer(&self) -> bool {
        self.0.denom().is_one()
    }

    /// x - y, or None when the difference would be negative.
    pub fn checked_sub(&self, other: &Rat) -> Option<Rat> {
        if self < other {
            None
        } else {
            let num = self.0.numer() * other.0.denom();
            let sub = other.0.numer() * self.0.denom();
            let den = self.0.denom() * other.0.denom();
            Some(Rat(Ratio::new(num - sub, den)))
        }
    }

    /// Product with a nonnegative integer.
    pub fn scale(&self, k: &BigUint) -> Rat {
        Rat(Ratio::new(self.0.numer() * k, self.0.denom().clone()))
    }

    /// Largest integer <= self.
    pub fn floor(&self) -> BigUint {
        self.0.numer() / self.0.denom()
    }

    /// self * k as an exact integer, when k is a common denominator multiple;
    /// None when the product is not integral.
    pub fn times_integer_exact(&self, k: &BigUint) -> Option<BigUint> {
        let (q, r) = (self.0.numer() * k).div_rem(self.0.denom());
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }
}

impl Add for Rat {
    type Output = Rat;

    fn add(self, other: Rat) -> Rat {
        &self + &other
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0.numer() * other.0.denom()).cmp(&(other.0.numer() * self.0.denom()))
    }
}

impl std::ops::Add for &Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        Rat(&self.0 + &rhs.0)
    }
}

impl std::ops::Mul for &Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        Rat(&self.0 * &rhs.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Parses `a/b` or `a` with nonnegative decimal integers, exactly.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |m: &str| Error::InvalidRational(format!("{m}: {s:?}"));
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let digits = |t: &str| {
            !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
        };
        if !digits(num_str) || !digits(den_str) {
            return Err(bad("expected `a/b` or `a` with decimal digits"));
        }
        let num = BigUint::from_str(num_str).map_err(|_| bad("bad numerator"))?;
        let den = BigUint::from_str(den_str).map_err(|_| bad("bad denominator"))?;
        Rat::new(num, den)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Deterministic Miller-Rabin primality test, exact for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            exp >>= 1;
        }
        acc
    };
    // This witness set is exact below 3.3 * 10^24, far beyond u64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

struct SieveState {
    limit: u64,
    primes: Vec<u64>,
}

fn sieve_cell() -> &'static RwLock<SieveState> {
    static CELL: OnceLock<RwLock<SieveState>> = OnceLock::new();
    CELL.get_or_init(|| RwLock::new(SieveState { limit: 1, primes: Vec::new() }))
}

fn sieve_to(bound: u64) -> Vec<u64> {
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// All primes <= bound, from the shared cached sieve. Refuses bounds past
/// [`SIEVE_CAP`].
pub fn sieve_primes(bound: u64) -> Result<Vec<u64>> {
    if bound > SIEVE_CAP {
        return Err(Error::Resource(format!(
            "prime sieve bound {bound} exceeds cap {SIEVE_CAP}"
        )));
    }
    let cell = sieve_cell();
    {
        let state = cell.read().expect("sieve lock poisoned");
        if state.limit >= bound {
            let cut = state.primes.partition_point(|&p| p <= bound);
            return Ok(state.primes[..cut].to_vec());
        }
    }
    let mut state = cell.write().expect("sieve lock poisoned");
    if state.limit < bound {
        // Grow geometrically so repeated nearby requests resieve rarely.
        let target = (bound.saturating_mul(2)).clamp(1 << 16, SIEVE_CAP);
        state.primes = sieve_to(target);
        state.limit = target;
    }
    let cut = state.primes.partition_point(|&p| p <= bound);
    Ok(state.primes[..cut].to_vec())
}

/// How a set of primes is described: all primes, a congruence class, or an
/// explicit finite list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StreamKind {
    /// Every prime.
    AllPrimes,
    /// Primes p with p = m (mod n); requires gcd(m, n) = 1 and n > 0.
    ArithmeticProgression { m: u64, n: u64 },
    /// A strictly increasing list of verified primes.
    Explicit { primes: Vec<u64> },
}

/// A lazily enumerable set of primes with an optional enumeration cap.
///
/// A `limit` restricts the set itself to primes <= limit, so a limited
/// stream behaves as a finite set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeStream {
    /// The membership rule.
    pub kind: StreamKind,
    /// Optional upper bound on the primes in the set.
    pub limit: Option<u64>,
}

impl PrimeStream {
    /// The stream of all primes.
    pub fn all() -> Self {
        PrimeStream { kind: StreamKind::AllPrimes, limit: None }
    }

    /// The stream of primes = m (mod n). Requires n > 0 and gcd(m, n) = 1.
    pub fn ap(m: u64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("progression modulus must be positive".into()));
        }
        if m.gcd(&n) != 1 {
            return Err(Error::InvalidArgument(format!(
                "progression {m} mod {n} requires gcd(m, n) = 1"
            )));
        }
        Ok(PrimeStream { kind: StreamKind::ArithmeticProgression { m, n }, limit: None })
    }

    /// An explicit finite set; entries must be strictly increasing primes.
    pub fn explicit(primes: Vec<u64>) -> Result<Self> {
        for pair in primes.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::InvalidArgument(format!(
                    "explicit prime list must be strictly increasing, got {} then {}",
                    pair[0], pair[1]
                )));
            }
        }
        for &p in &primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(PrimeStream { kind: StreamKind::Explicit { primes }, limit: None })
    }

    /// The same stream restricted to primes <= limit. Explicit lists are
    /// already finite and take no limit; trim the list instead.
    pub fn with_limit(mut self, limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::InvalidArgument("limit must be positive".into()));
        }
        if matches!(self.kind, StreamKind::Explicit { .. }) {
            return Err(Error::InvalidArgument(
                "an explicit prime list takes no limit".into(),
            ));
        }
        self.limit = Some(limit);
        Ok(self)
    }

    /// Whether the set is finite (explicit list or limited enumeration).
    pub fn is_finite(&self) -> bool {
        self.limit.is_some() || matches!(self.kind, StreamKind::Explicit { .. })
    }

    /// Whether p belongs to the set.
    pub fn contains(&self, p: u64) -> bool {
        if let Some(limit) = self.limit {
            if p > limit {
                return false;
            }
        }
        match &self.kind {
            StreamKind::AllPrimes => is_prime(p),
            StreamKind::ArithmeticProgression { m, n } => is_prime(p) && p % n == m % n,
            StreamKind::Explicit { primes } => primes.binary_search(&p).is_ok(),
        }
    }

    /// All primes of the set that are <= bound, ascending. `bound >= 2`.
    pub fn primes_up_to(&self, bound: u64) -> Result<Vec<u64>> {
        if bound < 2 {
            return Err(Error::InvalidArgument(format!("bound {bound} must be at least 2")));
        }
        let bound = match self.limit {
            Some(limit) => bound.min(limit),
            None => bound,
        };
        match &self.kind {
            StreamKind::Explicit { primes } => {
                Ok(primes.iter().copied().take_while(|&p| p <= bound).collect())
            }
            StreamKind::AllPrimes => sieve_primes(bound),
            StreamKind::ArithmeticProgression { m, n } => {
                Ok(sieve_primes(bound)?.into_iter().filter(|p| p % n == m % n).collect())
            }
        }
    }

    /// The first `count` primes of the set, ascending. Fails when a finite
    /// set runs out or the sieve cap cannot supply enough primes.
    pub fn take(&self, count: usize) -> Result<Vec<u64>> {
        if count == 0 {
            return Ok(Vec::new());
        }
        if let StreamKind::Explicit { primes } = &self.kind {
            if primes.len() < count {
                return Err(Error::Resource(format!(
                    "prime stream holds {} primes, {count} requested",
                    primes.len()
                )));
            }
            return Ok(primes[..count].to_vec());
        }
        let mut bound = 1u64 << 16;
        loop {
            let found = self.primes_up_to(bound)?;
            if found.len() >= count {
                return Ok(found[..count].to_vec());
            }
            let at_cap = bound >= SIEVE_CAP || self.limit.is_some_and(|l| bound >= l);
            if at_cap {
                return Err(Error::Resource(format!(
                    "only {} primes available up to {bound}, {count} requested",
                    found.len()
                )));
            }
            bound = bound.saturating_mul(4).min(SIEVE_CAP);
        }
    }

    /// Number of primes in the set when finite; None for infinite sets.
    pub fn cardinality(&self) -> Result<Option<usize>> {
        match (&self.kind, self.limit) {
            (StreamKind::Explicit { primes }, _) => Ok(Some(primes.len())),
            (_, Some(limit)) => Ok(Some(self.primes_up_to(limit.max(2))?.len())),
            (_, None) => Ok(None),
        }
    }
}

/// p-adic valuation v_p(x) = v_p(num) - v_p(den) of a positive rational;
/// may be negative. Undefined at zero; p must be prime.
pub fn padic_val(p: u64, x: &Rat) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if x.is_zero() {
        return Err(Error::UndefinedValuation);
    }
    let count = |n: &BigUint| -> i64 {
        let p = BigUint::from(p);
        let mut n = n.clone();
        let mut v = 0i64;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                return v;
            }
            v += 1;
            n = q;
        }
    };
    Ok(count(x.numer()) - count(x.denom()))
}

/// Prime factorization of a positive u64 as (prime, exponent) pairs.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while *n % p == 0 {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if is_prime(n) {
            break;
        }
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Prime factorization of a positive BigUint built from modest primes.
/// Fails with a resource error when a cofactor resists small-prime trial
/// division and does not fit u64.
pub fn factor_biguint(n: &BigUint) -> Result<BTreeMap<u64, u32>> {
    let mut out = BTreeMap::new();
    if n.is_zero() {
        return Err(Error::InvalidArgument("cannot factor zero".into()));
    }
    if let Some(small) = n.to_u64() {
        for (p, e) in factor_u64(small) {
            out.insert(p, e);
        }
        return Ok(out);
    }
    let mut rest = n.clone();
    for p in sieve_primes(100_000)? {
        if rest.is_one() {
            break;
        }
        let pb = BigUint::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = rest.div_rem(&pb);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.insert(p, e);
        }
    }
    if rest.is_one() {
        return Ok(out);
    }
    match rest.to_u64() {
        Some(small) => {
            for (p, e) in factor_u64(small) {
                *out.entry(p).or_insert(0) += e;
            }
            Ok(out)
        }
        None => Err(Error::Resource(format!("cofactor {rest} too large to factor"))),
    }
}

/// Euler's totient, computed by prime factorization. n >= 1.
pub fn euler_totient(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidArgument("totient of 0 is undefined".into()));
    }
    let mut phi = n;
    for (p, _) in factor_u64(n) {
        phi = phi / p * (p - 1);
    }
    Ok(phi)
}

/// D_P(x): the primes of P dividing d(x). x must be positive.
pub fn dp_support(x: &Rat, stream: &PrimeStream) -> Result<BTreeSet<u64>> {
    if x.is_zero() {
        return Err(Error::InvalidArgument("dp_support requires a positive rational".into()));
    }
    let mut out = BTreeSet::new();
    for p in factor_biguint(x.denom())?.keys() {
        if stream.contains(*p) {
            out.insert(*p);
        }
    }
    Ok(out)
}

/// D_P(R) = union of D_P(r) over a finite set R of positive rationals.
pub fn dp_support_union(rs: &[Rat], stream: &PrimeStream) -> Result<BTreeSet<u64>> {
    let mut out = BTreeSet::new();
    for r in rs {
        out.extend(dp_support(r, stream)?);
    }
    Ok(out)
}

/// lcm of the denominators of a nonempty list of rationals.
pub fn lcm_denominators(rs: &[Rat]) -> Result<BigUint> {
    if rs.is_empty() {
        return Err(Error::InvalidArgument("lcm_denominators of an empty list".into()));
    }
    let mut acc = BigUint::one();
    for r in rs {
        acc = acc.lcm(r.denom());
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn rat_construction_reduces_and_canonicalizes() {
        let r = Rat::make(6, 4).unwrap();
        assert_eq!((r.numer().to_u64(), r.denom().to_u64()), (Some(3), Some(2)));
        let z = Rat::make(0, 7).unwrap();
        assert_eq!((z.numer().to_u64(), z.denom().to_u64()), (Some(0), Some(1)));
        let n = Rat::make(5, 1).unwrap();
        assert_eq!((n.numer().to_u64(), n.denom().to_u64()), (Some(5), Some(1)));
        assert!(Rat::make(-1, 2).is_err());
        assert!(Rat::make(1, 0).is_err());
        assert!(Rat::make(1, -3).is_err());
    }

    #[test]
    fn rat_parse_display_round_trip() {
        for s in ["0", "5", "1/2", "31/30", "76/9", "656/27"] {
            assert_eq!(rat(s).to_string(), s);
        }
        assert_eq!(rat("6/4").to_string(), "3/2");
        assert_eq!(rat("7/1").to_string(), "7");
        assert!("".parse::<Rat>().is_err());
        assert!("-1/2".parse::<Rat>().is_err());
        assert!("1/0".parse::<Rat>().is_err());
        assert!("1.5".parse::<Rat>().is_err());
        assert!("a/b".parse::<Rat>().is_err());
    }

    #[test]
    fn rat_ordering_and_arithmetic() {
        assert!(rat("1/3") < rat("1/2"));
        assert!(rat("7/6") > rat("1"));
        assert_eq!(&rat("1/2") + &rat("1/3"), rat("5/6"));
        assert_eq!(&rat("2/3") * &rat("2/3"), rat("4/9"));
        assert_eq!(rat("5/6").checked_sub(&rat("1/2")), Some(rat("1/3")));
        assert_eq!(rat("1/3").checked_sub(&rat("1/2")), None);
        assert_eq!(rat("7/2").floor(), BigUint::from(3u32));
    }

    #[test]
    fn padic_val_matches_definition() {
        assert_eq!(padic_val(2, &rat("3/8")).unwrap(), -3);
        assert_eq!(padic_val(3, &rat("18")).unwrap(), 2);
        assert_eq!(padic_val(5, &rat("7/4")).unwrap(), 0);
        assert_eq!(padic_val(2, &Rat::zero()), Err(Error::UndefinedValuation));
        assert_eq!(padic_val(4, &rat("1/2")), Err(Error::NotPrime(4)));
    }

    #[test]
    fn padic_val_is_additive_on_products() {
        let xs = ["3/8", "18", "7/4", "5/6", "49/12"];
        for p in [2u64, 3, 5, 7] {
            for a in xs {
                for b in xs {
                    let (a, b) = (rat(a), rat(b));
                    assert_eq!(
                        padic_val(p, &(&a * &b)).unwrap(),
                        padic_val(p, &a).unwrap() + padic_val(p, &b).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn padic_val_ultrametric_equality_case() {
        let pairs = [("3/8", "18"), ("5/6", "7/4"), ("1/2", "1/3"), ("49/12", "5/6")];
        for p in [2u64, 3, 5, 7] {
            for (a, b) in pairs {
                let (a, b) = (rat(a), rat(b));
                let (va, vb) = (padic_val(p, &a).unwrap(), padic_val(p, &b).unwrap());
                if va != vb {
                    assert_eq!(padic_val(p, &(&a + &b)).unwrap(), va.min(vb));
                }
            }
        }
    }

    #[test]
    fn miller_rabin_agrees_with_sieve() {
        let primes: BTreeSet<u64> = sieve_primes(10_000).unwrap().into_iter().collect();
        for n in 0..10_000u64 {
            assert_eq!(is_prime(n), primes.contains(&n), "disagreement at {n}");
        }
        assert!(is_prime(2_147_483_647));
        assert!(!is_prime(2_147_483_649));
    }

    #[test]
    fn primes_up_to_goldens() {
        assert_eq!(PrimeStream::all().primes_up_to(12).unwrap(), vec![2, 3, 5, 7, 11]);
        assert_eq!(
            PrimeStream::ap(1, 4).unwrap().primes_up_to(30).unwrap(),
            vec![5, 13, 17, 29]
        );
        let explicit = PrimeStream::explicit(vec![2, 3, 5]).unwrap();
        assert_eq!(explicit.primes_up_to(4).unwrap(), vec![2, 3]);
        assert!(PrimeStream::ap(2, 4).is_err());
        assert!(PrimeStream::all().primes_up_to(1).is_err());
        assert!(PrimeStream::all().primes_up_to(SIEVE_CAP + 1).is_err());
    }

    #[test]
    fn ap_streams_partition_the_primes() {
        // Congruence filtering equals post-filtering, and class sizes add up.
        let bound = 50_000u64;
        let all = PrimeStream::all().primes_up_to(bound).unwrap();
        let n = 12u64;
        let mut covered = 0usize;
        for m in 1..n {
            if m.gcd(&n) != 1 {
                continue;
            }
            let ap = PrimeStream::ap(m, n).unwrap().primes_up_to(bound).unwrap();
            let filtered: Vec<u64> = all.iter().copied().filter(|p| p % n == m).collect();
            assert_eq!(ap, filtered);
            covered += ap.len();
        }
        let dividing_n = all.iter().filter(|&&p| n % p == 0).count();
        assert_eq!(covered, all.len() - dividing_n);
    }

    #[test]
    fn stream_take_and_cardinality() {
        assert_eq!(PrimeStream::all().take(5).unwrap(), vec![2, 3, 5, 7, 11]);
        assert_eq!(PrimeStream::ap(1, 4).unwrap().take(3).unwrap(), vec![5, 13, 17]);
        let ex = PrimeStream::explicit(vec![2, 3]).unwrap();
        assert_eq!(ex.take(2).unwrap(), vec![2, 3]);
        assert!(ex.take(3).is_err());
        assert_eq!(ex.cardinality().unwrap(), Some(2));
        assert_eq!(PrimeStream::all().cardinality().unwrap(), None);
        let limited = PrimeStream::all().with_limit(10).unwrap();
        assert_eq!(limited.cardinality().unwrap(), Some(4));
        assert!(limited.take(5).is_err());
        assert!(!limited.contains(11));
        assert!(PrimeStream::explicit(vec![3, 2]).is_err());
        assert!(PrimeStream::explicit(vec![2, 9]).is_err());
        assert!(PrimeStream::explicit(vec![2, 3]).unwrap().with_limit(5).is_err());
    }

    #[test]
    fn euler_totient_goldens_and_brute_force() {
        assert_eq!(euler_totient(1).unwrap(), 1);
        assert_eq!(euler_totient(7).unwrap(), 6);
        assert_eq!(euler_totient(12).unwrap(), 4);
        assert!(euler_totient(0).is_err());
        for n in 1..=2_000u64 {
            let brute = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(euler_totient(n).unwrap(), brute, "totient({n})");
        }
    }

    #[test]
    fn dp_support_goldens() {
        let e235 = PrimeStream::explicit(vec![2, 3, 5]).unwrap();
        assert_eq!(
            dp_support(&rat("7/12"), &e235).unwrap(),
            BTreeSet::from([2, 3])
        );
        assert_eq!(dp_support(&rat("5"), &PrimeStream::all()).unwrap(), BTreeSet::new());
        let e23 = PrimeStream::explicit(vec![2, 3]).unwrap();
        let r = &rat("1/2") + &rat("1/3");
        assert_eq!(r, rat("5/6"));
        let support = dp_support(&r, &e23).unwrap();
        assert_eq!(support, BTreeSet::from([2, 3]));
        let parts = dp_support_union(&[rat("1/2"), rat("1/3")], &e23).unwrap();
        assert!(support.is_subset(&parts));
    }

    #[test]
    fn lcm_denominators_goldens() {
        let lcm = |ss: &[&str]| {
            let rs: Vec<Rat> = ss.iter().map(|s| rat(s)).collect();
            lcm_denominators(&rs).unwrap().to_u64().unwrap()
        };
        assert_eq!(lcm(&["1/2", "3/4"]), 4);
        assert_eq!(lcm(&["2", "5"]), 1);
        assert_eq!(lcm(&["1/6", "1/10", "1/15"]), 30);
        assert!(lcm_denominators(&[]).is_err());
    }

    #[test]
    fn factor_biguint_handles_primorials() {
        let primorial: BigUint = sieve_primes(53)
            .unwrap()
            .into_iter()
            .map(BigUint::from)
            .product();
        let factors = factor_biguint(&primorial).unwrap();
        assert_eq!(
            factors.keys().copied().collect::<Vec<u64>>(),
            sieve_primes(53).unwrap()
        );
        assert!(factors.values().all(|&e| e == 1));
    }
}
