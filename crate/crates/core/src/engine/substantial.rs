//! Substantiality of prime sets, with exact reciprocal partial sums and
//! float Mertens offsets for arithmetic progressions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::exactnum::{euler_totient, PrimeStream, Rat, StreamKind};
use crate::Result;

use super::{Substantiality, SubstantialityReport};

/// Decide substantiality and tabulate exact partial sums of reciprocals.
///
/// Finite streams are insubstantial and report their total as a single
/// entry. Infinite streams (all primes, or a coprime progression) are
/// substantial; exact sums are reported at the given checkpoints, with
/// float offsets against the expected log log growth for progressions.
pub fn is_substantial(p: &PrimeStream, checkpoints: &[u64]) -> Result<SubstantialityReport> {
    let finite: Option<Vec<u64>> = match (&p.kind, p.limit) {
        (StreamKind::Explicit { primes }, _) => Some(primes.clone()),
        (_, Some(limit)) => Some(p.primes_up_to(limit.max(2))?),
        (_, None) => None,
    };
    if let Some(primes) = finite {
        let mut acc = Accumulator::new();
        for &q in &primes {
            acc.push(q);
        }
        let partial_sums = match primes.last() {
            Some(&last) => vec![(last, acc.sum()?)],
            None => Vec::new(),
        };
        return Ok(SubstantialityReport {
            verdict: Substantiality::Insubstantial,
            partial_sums,
            mertens_offsets: Vec::new(),
        });
    }
    let mut points = checkpoints.to_vec();
    points.sort_unstable();
    points.dedup();
    let phi_inv = match &p.kind {
        StreamKind::ArithmeticProgression { n, .. } => Some(1.0 / euler_totient(*n)? as f64),
        _ => None,
    };
    let mut partial_sums = Vec::new();
    let mut mertens_offsets = Vec::new();
    if let Some(&bound) = points.last() {
        let primes = p.primes_up_to(bound.max(2))?;
        let mut acc = Accumulator::new();
        let mut iter = primes.iter().peekable();
        let mut seen_at_last_point = 0usize;
        let mut seen = 0usize;
        for &x in &points {
            while let Some(&&q) = iter.peek() {
                if q > x {
                    break;
                }
                acc.push(q);
                iter.next();
                seen += 1;
            }
            // Checkpoints that gained no primes are dropped to keep the
            // tabulated sums strictly increasing.
            if seen == seen_at_last_point {
                continue;
            }
            seen_at_last_point = seen;
            partial_sums.push((x, acc.sum()?));
            if let Some(inv) = phi_inv {
                mertens_offsets.push((x, acc.float_sum - inv * (x as f64).ln().ln()));
            }
        }
    }
    Ok(SubstantialityReport {
        verdict: Substantiality::Substantial,
        partial_sums,
        mertens_offsets,
    })
}

/// Running sum of reciprocals of distinct primes, kept reduced without
/// gcd work: the denominator is a squarefree prime product, and pushing
/// a fresh prime preserves coprimality of the numerator.
struct Accumulator {
    num: BigUint,
    den: BigUint,
    float_sum: f64,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator { num: BigUint::zero(), den: BigUint::one(), float_sum: 0.0 }
    }

    fn push(&mut self, q: u64) {
        self.num = &self.num * q + &self.den;
        self.den *= q;
        self.float_sum += 1.0 / q as f64;
    }

    fn sum(&self) -> Result<Rat> {
        Rat::new(self.num.clone(), self.den.clone())
    }
}
