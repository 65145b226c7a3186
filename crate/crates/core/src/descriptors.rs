//! Finite, serializable descriptions of Puiseux monoid families, with
//! truncated generator enumeration and a small text grammar.
//!
//! Grammar: `finite:<rat>,...` | `geometric:<rat>` | `primary:all` |
//! `primary:ap(<m>,<n>)` | `primary:<p1>,<p2>,...` | `psums-primary:<...>`
//! | `example-ab` | `prime-fractions:<1|2>` | `geo-psums:<rat>` |
//! `unbounded-geo:<rat>`. Rationals are ASCII `a/b` or `a`; the `all` and
//! `ap(m,n)` stream forms accept an `@<limit>` suffix restricting the prime
//! set to primes at most the limit.

use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exactnum::{PrimeStream, Rat, StreamKind};
use crate::{Error, Result};

/// Index cutoff for enumerating an infinite generator family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    depth: usize,
}

impl Truncation {
    /// A cutoff at the first `depth` generators; depth must be at least 1.
    pub fn new(depth: usize) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidArgument("truncation depth must be at least 1".into()));
        }
        Ok(Truncation { depth })
    }

    /// The index cutoff.
    pub fn depth(&self) -> usize {
        self.depth
    }
}

/// A finitely describable additive submonoid of the nonnegative rationals.
///
/// Each variant names a generator family; enumeration order is fixed per
/// family so truncation depths are meaningful.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "kebab-case")]
pub enum MonoidDescriptor {
    /// An explicit nonempty list of positive generators.
    Finite { generators: Vec<Rat> },
    /// Powers r, r^2, r^3, ... of a positive ratio.
    Geometric { ratio: Rat },
    /// Reciprocals 1/p over a set of primes.
    Primary { primes: PrimeStream },
    /// Partial sums 1/p_1 + ... + 1/p_n over a set of primes.
    PsumsPrimary { primes: PrimeStream },
    /// The interleaved family 1/p_2, (p_1-1)/p_1, 1/p_4, (p_3-1)/p_3, ...
    ExampleAb,
    /// (p - 1)/p or (p^2 - 1)/p over all primes in order.
    PrimeFractions { power: u8 },
    /// Partial sums r + r^2 + ... + r^n of a positive ratio.
    GeoPsums { ratio: Rat },
    /// The unbounded witnesses s_n = (n b^n + 1) a^n / b^n for r = a/b
    /// with a > 1 and b > 1.
    UnboundedGeo { ratio: Rat },
}

impl MonoidDescriptor {
    /// An explicit finite monoid; generators must be nonempty and positive.
    pub fn finite(generators: Vec<Rat>) -> Result<Self> {
        let d = MonoidDescriptor::Finite { generators };
        d.validate()?;
        Ok(d)
    }

    /// The monoid generated by the positive powers of `ratio` > 0.
    pub fn geometric(ratio: Rat) -> Result<Self> {
        let d = MonoidDescriptor::Geometric { ratio };
        d.validate()?;
        Ok(d)
    }

    /// The primary monoid of a prime set.
    pub fn primary(primes: PrimeStream) -> Self {
        MonoidDescriptor::Primary { primes }
    }

    /// The partial-sums monoid of a prime set.
    pub fn psums_primary(primes: PrimeStream) -> Self {
        MonoidDescriptor::PsumsPrimary { primes }
    }

    /// The interleaved two-sequence example monoid.
    pub fn example_ab() -> Self {
        MonoidDescriptor::ExampleAb
    }

    /// The (p^power - 1)/p family; power is 1 or 2.
    pub fn prime_fractions(power: u8) -> Result<Self> {
        let d = MonoidDescriptor::PrimeFractions { power };
        d.validate()?;
        Ok(d)
    }

    /// The geometric partial-sums monoid of `ratio` > 0.
    pub fn geo_psums(ratio: Rat) -> Result<Self> {
        let d = MonoidDescriptor::GeoPsums { ratio };
        d.validate()?;
        Ok(d)
    }

    /// The unbounded witness monoid of `ratio` with numerator and
    /// denominator both above 1.
    pub fn unbounded_geo(ratio: Rat) -> Result<Self> {
        let d = MonoidDescriptor::UnboundedGeo { ratio };
        d.validate()?;
        Ok(d)
    }

    /// Checks the per-variant invariants; needed after deserializing a
    /// descriptor from structured text, which bypasses the constructors.
    pub fn validate(&self) -> Result<()> {
        match self {
            MonoidDescriptor::Finite { generators } => {
                if generators.is_empty() {
                    return Err(Error::InvalidArgument(
                        "finite descriptor requires at least one generator".into(),
                    ));
                }
                if generators.iter().any(Rat::is_zero) {
                    return Err(Error::InvalidArgument("generators must be positive".into()));
                }
            }
            MonoidDescriptor::Geometric { ratio } | MonoidDescriptor::GeoPsums { ratio } => {
                if ratio.is_zero() {
                    return Err(Error::InvalidArgument("ratio must be positive".into()));
                }
            }
            MonoidDescriptor::UnboundedGeo { ratio } => {
                if ratio.numer().is_one() || ratio.denom().is_one() {
                    return Err(Error::InvalidArgument(
                        "unbounded witness ratio needs numerator and denominator above 1".into(),
                    ));
                }
            }
            MonoidDescriptor::PrimeFractions { power } => {
                if !matches!(power, 1 | 2) {
                    return Err(Error::InvalidArgument(format!(
                        "prime-fractions power must be 1 or 2, got {power}"
                    )));
                }
            }
            MonoidDescriptor::Primary { primes } | MonoidDescriptor::PsumsPrimary { primes } => {
                if let StreamKind::Explicit { primes } = &primes.kind {
                    PrimeStream::explicit(primes.clone())?;
                }
                if primes.limit == Some(0) {
                    return Err(Error::InvalidArgument("limit must be positive".into()));
                }
                if primes.limit.is_some()
                    && matches!(primes.kind, StreamKind::Explicit { .. })
                {
                    return Err(Error::InvalidArgument(
                        "an explicit prime list takes no limit".into(),
                    ));
                }
            }
            MonoidDescriptor::ExampleAb => {}
        }
        Ok(())
    }

    /// The first `depth` generators in the family's canonical order, exact
    /// and reduced. Finite descriptors return their whole list regardless
    /// of depth; a geometric ratio of 1 collapses to the single generator 1.
    pub fn generators_up_to(&self, trunc: Truncation) -> Result<Vec<Rat>> {
        self.validate()?;
        let k = trunc.depth();
        match self {
            MonoidDescriptor::Finite { generators } => Ok(generators.clone()),
            MonoidDescriptor::Geometric { ratio } => {
                if ratio == &Rat::one() {
                    return Ok(vec![Rat::one()]);
                }
                let mut out = Vec::with_capacity(k);
                let mut acc = ratio.clone();
                for _ in 0..k {
                    out.push(acc.clone());
                    acc = &acc * ratio;
                }
                Ok(out)
            }
            MonoidDescriptor::Primary { primes } => {
                let take = match primes.cardinality()? {
                    Some(n) => n.min(k),
                    None => k,
                };
                Ok(primes
                    .take(take)?
                    .into_iter()
                    .map(|p| Rat::new(1u32, p).expect("prime is positive"))
                    .collect())
            }
            MonoidDescriptor::PsumsPrimary { primes } => {
                let mut out = Vec::with_capacity(k);
                let mut acc = Rat::zero();
                for p in primes.take(k)? {
                    acc = &acc + &Rat::new(1u32, p).expect("prime is positive");
                    out.push(acc.clone());
                }
                Ok(out)
            }
            MonoidDescriptor::ExampleAb => {
                let primes = PrimeStream::all().take(k + 1)?;
                let mut out = Vec::with_capacity(k);
                for t in 1..=k {
                    // Odd slots take A_j = 1/p_{2j}; even slots take
                    // B_j = (p_{2j-1} - 1)/p_{2j-1}; indices are 1-based.
                    let rat = if t % 2 == 1 {
                        let p = primes[t];
                        Rat::new(1u32, p).expect("prime is positive")
                    } else {
                        let p = primes[t - 2];
                        Rat::new(p - 1, p).expect("prime is positive")
                    };
                    out.push(rat);
                }
                Ok(out)
            }
            MonoidDescriptor::PrimeFractions { power } => Ok(PrimeStream::all()
                .take(k)?
                .into_iter()
                .map(|p| {
                    let num = if *power == 1 { p - 1 } else { p * p - 1 };
                    Rat::new(num, p).expect("prime is positive")
                })
                .collect()),
            MonoidDescriptor::GeoPsums { ratio } => {
                let mut out = Vec::with_capacity(k);
                let mut power = ratio.clone();
                let mut acc = Rat::zero();
                for _ in 0..k {
                    acc = &acc + &power;
                    out.push(acc.clone());
                    power = &power * ratio;
                }
                Ok(out)
            }
            MonoidDescriptor::UnboundedGeo { ratio } => {
                let mut out = Vec::with_capacity(k);
                let mut power = ratio.clone();
                let b = Rat::new(ratio.denom().clone(), 1u32).expect("denominator positive");
                let mut bn = b.clone();
                for n in 1..=k {
                    // s_n = (n b^n + 1) a^n / b^n = (n b^n + 1) r^n.
                    let coeff = &(&Rat::from_integer(n as u64) * &bn) + &Rat::one();
                    out.push(&coeff * &power);
                    power = &power * ratio;
                    bn = &bn * &b;
                }
                Ok(out)
            }
        }
    }

    /// Canonical text form in the descriptor grammar.
    pub fn serialize_text(&self) -> String {
        self.to_string()
    }
}

fn stream_text(stream: &PrimeStream) -> String {
    let base = match &stream.kind {
        StreamKind::AllPrimes => "all".to_string(),
        StreamKind::ArithmeticProgression { m, n } => format!("ap({m},{n})"),
        StreamKind::Explicit { primes } => primes
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    };
    match stream.limit {
        Some(limit) => format!("{base}@{limit}"),
        None => base,
    }
}

impl fmt::Display for MonoidDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidDescriptor::Finite { generators } => {
                let parts: Vec<String> = generators.iter().map(Rat::to_string).collect();
                write!(f, "finite:{}", parts.join(","))
            }
            MonoidDescriptor::Geometric { ratio } => write!(f, "geometric:{ratio}"),
            MonoidDescriptor::Primary { primes } => write!(f, "primary:{}", stream_text(primes)),
            MonoidDescriptor::PsumsPrimary { primes } => {
                write!(f, "psums-primary:{}", stream_text(primes))
            }
            MonoidDescriptor::ExampleAb => write!(f, "example-ab"),
            MonoidDescriptor::PrimeFractions { power } => write!(f, "prime-fractions:{power}"),
            MonoidDescriptor::GeoPsums { ratio } => write!(f, "geo-psums:{ratio}"),
            MonoidDescriptor::UnboundedGeo { ratio } => write!(f, "unbounded-geo:{ratio}"),
        }
    }
}

/// Cursor over descriptor text tracking byte positions for error reports.
struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn error_at(&self, position: usize, message: impl Into<String>) -> Error {
        Error::Parse { position, message: message.into() }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected {token:?}")))
        }
    }

    fn integer(&mut self) -> Result<u64> {
        let digits: &str = self
            .rest()
            .split(|c: char| !c.is_ascii_digit())
            .next()
            .unwrap_or("");
        if digits.is_empty() {
            return Err(self.error("expected an integer"));
        }
        let value = digits
            .parse::<u64>()
            .map_err(|_| self.error(format!("integer {digits} out of range")))?;
        self.pos += digits.len();
        Ok(value)
    }

    fn rational(&mut self) -> Result<Rat> {
        let start = self.pos;
        let end = self
            .rest()
            .find(|c: char| c != '/' && !c.is_ascii_digit())
            .map(|off| start + off)
            .unwrap_or(self.text.len());
        let slice = &self.text[start..end];
        if slice.is_empty() {
            return Err(self.error("expected a rational `a/b` or `a`"));
        }
        let rat = Rat::from_str(slice).map_err(|e| self.error_at(start, e.to_string()))?;
        self.pos = end;
        Ok(rat)
    }

    fn rational_list(&mut self) -> Result<Vec<Rat>> {
        let mut out = vec![self.rational()?];
        while self.eat(",") {
            out.push(self.rational()?);
        }
        Ok(out)
    }

    fn stream(&mut self) -> Result<PrimeStream> {
        let start = self.pos;
        if self.eat("all") {
            return self.stream_limit(PrimeStream::all());
        }
        if self.eat("ap(") {
            let m = self.integer()?;
            self.expect(",")?;
            let n = self.integer()?;
            self.expect(")")?;
            let ap = PrimeStream::ap(m, n).map_err(|e| self.error_at(start, e.to_string()))?;
            return self.stream_limit(ap);
        }
        let mut primes = vec![self.integer()?];
        while self.eat(",") {
            primes.push(self.integer()?);
        }
        PrimeStream::explicit(primes).map_err(|e| self.error_at(start, e.to_string()))
    }

    fn stream_limit(&mut self, stream: PrimeStream) -> Result<PrimeStream> {
        if !self.eat("@") {
            return Ok(stream);
        }
        let at = self.pos;
        let limit = self.integer()?;
        stream.with_limit(limit).map_err(|e| self.error_at(at, e.to_string()))
    }

    fn finish(self, descriptor: MonoidDescriptor) -> Result<MonoidDescriptor> {
        if !self.rest().is_empty() {
            return Err(self.error("trailing input after descriptor"));
        }
        descriptor.validate().map_err(|e| self.error_at(0, e.to_string()))?;
        Ok(descriptor)
    }
}

impl FromStr for MonoidDescriptor {
    type Err = Error;

    /// Parses the descriptor grammar; errors carry the byte position of the
    /// offending token.
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { text: s, pos: 0 };
        if p.eat("finite:") {
            let gens = p.rational_list()?;
            return p.finish(MonoidDescriptor::Finite { generators: gens });
        }
        if p.eat("geometric:") {
            let ratio = p.rational()?;
            return p.finish(MonoidDescriptor::Geometric { ratio });
        }
        if p.eat("psums-primary:") {
            let primes = p.stream()?;
            return p.finish(MonoidDescriptor::PsumsPrimary { primes });
        }
        if p.eat("primary:") {
            let primes = p.stream()?;
            return p.finish(MonoidDescriptor::Primary { primes });
        }
        if p.eat("example-ab") {
            return p.finish(MonoidDescriptor::ExampleAb);
        }
        if p.eat("prime-fractions:") {
            let power = p.integer()?;
            let power = u8::try_from(power)
                .map_err(|_| p.error("prime-fractions power must be 1 or 2"))?;
            return p.finish(MonoidDescriptor::PrimeFractions { power });
        }
        if p.eat("geo-psums:") {
            let ratio = p.rational()?;
            return p.finish(MonoidDescriptor::GeoPsums { ratio });
        }
        if p.eat("unbounded-geo:") {
            let ratio = p.rational()?;
            return p.finish(MonoidDescriptor::UnboundedGeo { ratio });
        }
        Err(p.error("unknown descriptor kind"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn rats(ss: &[&str]) -> Vec<Rat> {
        ss.iter().map(|s| rat(s)).collect()
    }

    fn gens(text: &str, depth: usize) -> Vec<Rat> {
        let d: MonoidDescriptor = text.parse().unwrap();
        d.generators_up_to(Truncation::new(depth).unwrap()).unwrap()
    }

    #[test]
    fn generator_goldens() {
        assert_eq!(gens("geometric:2/3", 3), rats(&["2/3", "4/9", "8/27"]));
        assert_eq!(gens("psums-primary:all", 3), rats(&["1/2", "5/6", "31/30"]));
        assert_eq!(gens("geo-psums:1/2", 3), rats(&["1/2", "3/4", "7/8"]));
        assert_eq!(gens("unbounded-geo:2/3", 2), rats(&["8/3", "76/9"]));
        assert_eq!(gens("example-ab", 4), rats(&["1/3", "1/2", "1/7", "4/5"]));
        assert_eq!(gens("primary:all", 4), rats(&["1/2", "1/3", "1/5", "1/7"]));
        assert_eq!(gens("prime-fractions:1", 3), rats(&["1/2", "2/3", "4/5"]));
        assert_eq!(gens("prime-fractions:2", 3), rats(&["3/2", "8/3", "24/5"]));
        assert_eq!(gens("finite:1/2,3/4", 1), rats(&["1/2", "3/4"]));
        assert_eq!(gens("geometric:1", 5), rats(&["1"]));
        assert_eq!(gens("unbounded-geo:3/2", 2), rats(&["9/2", "81/4"]));
    }

    #[test]
    fn generator_prefix_property() {
        for text in [
            "geometric:2/3",
            "geometric:5/4",
            "primary:all",
            "primary:ap(1,4)",
            "psums-primary:all",
            "example-ab",
            "prime-fractions:1",
            "prime-fractions:2",
            "geo-psums:1/2",
            "geo-psums:7/5",
            "unbounded-geo:2/3",
        ] {
            for k in 1..8 {
                let shorter = gens(text, k);
                let longer = gens(text, k + 1);
                assert_eq!(&longer[..k], &shorter[..], "{text} at depth {k}");
            }
        }
    }

    #[test]
    fn named_families_are_strictly_monotone() {
        let increasing = |v: &[Rat]| v.windows(2).all(|w| w[0] < w[1]);
        let decreasing = |v: &[Rat]| v.windows(2).all(|w| w[0] > w[1]);
        assert!(decreasing(&gens("geometric:2/3", 20)));
        assert!(increasing(&gens("geometric:3/2", 20)));
        assert!(increasing(&gens("psums-primary:all", 20)));
        assert!(increasing(&gens("geo-psums:1/2", 20)));
        assert!(increasing(&gens("geo-psums:1", 20)));
        assert!(increasing(&gens("geo-psums:8/3", 20)));
        assert!(increasing(&gens("unbounded-geo:2/3", 20)));
        assert!(increasing(&gens("unbounded-geo:7/2", 20)));
        assert!(decreasing(&gens("primary:all", 20)));
    }

    #[test]
    fn explicit_psums_depth_is_bounded() {
        let d: MonoidDescriptor = "psums-primary:2,3".parse().unwrap();
        assert_eq!(
            d.generators_up_to(Truncation::new(2).unwrap()).unwrap(),
            rats(&["1/2", "5/6"])
        );
        assert!(d.generators_up_to(Truncation::new(3).unwrap()).is_err());
        // A primary descriptor over the same list clamps instead.
        let d: MonoidDescriptor = "primary:2,3".parse().unwrap();
        assert_eq!(
            d.generators_up_to(Truncation::new(5).unwrap()).unwrap(),
            rats(&["1/2", "1/3"])
        );
    }

    #[test]
    fn parse_goldens() {
        assert_eq!(
            "geometric:2/3".parse::<MonoidDescriptor>().unwrap(),
            MonoidDescriptor::geometric(rat("2/3")).unwrap()
        );
        assert_eq!(
            "primary:ap(1,4)".parse::<MonoidDescriptor>().unwrap(),
            MonoidDescriptor::primary(PrimeStream::ap(1, 4).unwrap())
        );
        assert_eq!(
            "finite:1/2,3/4".parse::<MonoidDescriptor>().unwrap(),
            MonoidDescriptor::finite(rats(&["1/2", "3/4"])).unwrap()
        );
        assert_eq!(
            "primary:all@100".parse::<MonoidDescriptor>().unwrap(),
            MonoidDescriptor::primary(PrimeStream::all().with_limit(100).unwrap())
        );
    }

    #[test]
    fn serialize_goldens() {
        let d = MonoidDescriptor::geometric(rat("2/3")).unwrap();
        assert_eq!(d.serialize_text(), "geometric:2/3");
        let d = MonoidDescriptor::psums_primary(PrimeStream::explicit(vec![2, 3, 5]).unwrap());
        assert_eq!(d.serialize_text(), "psums-primary:2,3,5");
        let d = MonoidDescriptor::prime_fractions(2).unwrap();
        assert_eq!(d.serialize_text(), "prime-fractions:2");
    }

    #[test]
    fn parse_serialize_round_trip() {
        let catalog = [
            "finite:1/2,3/4,2",
            "geometric:2/3",
            "geometric:5",
            "primary:all",
            "primary:ap(1,4)",
            "primary:ap(3,10)@5000",
            "primary:2,3,5",
            "psums-primary:all",
            "psums-primary:ap(1,4)",
            "psums-primary:2,3",
            "psums-primary:all@1000",
            "example-ab",
            "prime-fractions:1",
            "prime-fractions:2",
            "geo-psums:1/2",
            "geo-psums:2/3",
            "unbounded-geo:2/3",
            "unbounded-geo:3/2",
        ];
        for text in catalog {
            let d: MonoidDescriptor = text.parse().unwrap();
            assert_eq!(d.serialize_text(), text);
            let again: MonoidDescriptor = d.serialize_text().parse().unwrap();
            assert_eq!(again, d);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = "nonsense:1".parse::<MonoidDescriptor>().unwrap_err();
        assert_eq!(err, Error::Parse { position: 0, message: "unknown descriptor kind".into() });
        match "geometric:1/0".parse::<MonoidDescriptor>().unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 10),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "primary:ap(2,4)".parse::<MonoidDescriptor>().unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "primary:4,6".parse::<MonoidDescriptor>().unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "geometric:2/3,".parse::<MonoidDescriptor>().unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 13),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "prime-fractions:3".parse::<MonoidDescriptor>().unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match "primary:2,3@5".parse::<MonoidDescriptor>().unwrap_err() {
            Error::Parse { position, .. } => assert_eq!(position, 11),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!("finite:".parse::<MonoidDescriptor>().is_err());
        assert!("geometric:0".parse::<MonoidDescriptor>().is_err());
        assert!("unbounded-geo:2".parse::<MonoidDescriptor>().is_err());
        assert!("unbounded-geo:1/2".parse::<MonoidDescriptor>().is_err());
    }

    #[test]
    fn structured_form_uses_kind_and_params() {
        let d = MonoidDescriptor::geometric(rat("2/3")).unwrap();
        let json = serde_json::to_value(&d).unwrap();
        assert_eq!(json["kind"], "geometric");
        assert_eq!(json["params"]["ratio"], "2/3");
        let back: MonoidDescriptor = serde_json::from_value(json).unwrap();
        assert_eq!(back, d);
        let d: MonoidDescriptor = "primary:ap(1,4)@50".parse().unwrap();
        let json = serde_json::to_value(&d).unwrap();
        let back: MonoidDescriptor = serde_json::from_value(json).unwrap();
        assert_eq!(back, d);
    }
}
