//! Numerical semigroups: the finitely generated integer core behind every
//! finite-truncation decision on rational generating sets.
//!
//! A set of positive rationals with a common denominator bound is carried to
//! integer generators by multiplying through with the lcm of denominators;
//! membership questions transfer along that scaling bijection.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exactnum::{lcm_denominators, Rat};
use crate::{Error, Result};

/// Largest target value decided by the boolean membership table.
pub const TABLE_CAP: u64 = 10_000_000;

/// Largest multiplicity accepted by the Apery shortest-path computation.
pub const APERY_CAP: u64 = 1_000_000;

/// Whether the complement of a numerical semigroup in the integers is
/// finite, and if so where it ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Frobenius {
    /// Largest integer multiple of the content outside the monoid;
    /// -1 when the monoid is all of the nonnegative integers.
    Finite(i64),
    /// Content exceeds 1, so the complement is infinite.
    Infinite,
}

/// A submonoid of the nonnegative integers generated by finitely many
/// positive integers.
///
/// Invariants: generators are sorted, deduplicated, and positive;
/// reduced generators are the generators divided by their gcd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    content: u64,
    reduced: Vec<u64>,
    scale: Option<BigUint>,
}

impl NumericalSemigroup {
    /// Builds the monoid generated by a nonempty list of positive integers.
    pub fn from_integers(gens: &[u64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidArgument("generator list must be nonempty".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidArgument("generators must be positive".into()));
        }
        let mut generators = gens.to_vec();
        generators.sort_unstable();
        generators.dedup();
        let content = generators.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        let reduced = generators.iter().map(|&g| g / content).collect();
        Ok(NumericalSemigroup { generators, content, reduced, scale: None })
    }

    /// Scales a nonempty list of positive rationals by the lcm of their
    /// denominators and builds the resulting integer monoid; the scale is
    /// recorded. Membership of x in the rational monoid equals integer
    /// membership of scale * x when that product is an integer, and fails
    /// outright otherwise.
    pub fn from_rationals(gens: &[Rat]) -> Result<Self> {
        if gens.iter().any(Rat::is_zero) {
            return Err(Error::InvalidArgument("generators must be positive".into()));
        }
        let scale = lcm_denominators(gens)?;
        let scaled: Result<Vec<u64>> = gens
            .iter()
            .map(|r| {
                let t = r.times_integer_exact(&scale).expect("lcm clears denominator");
                t.to_u64().ok_or_else(|| {
                    Error::Resource(format!("scaled generator {t} exceeds machine range"))
                })
            })
            .collect();
        let mut ns = Self::from_integers(&scaled?)?;
        ns.scale = Some(scale);
        Ok(ns)
    }

    /// The sorted, deduplicated input generators.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// gcd of the generators; every element of the monoid is divisible by it.
    pub fn content(&self) -> u64 {
        self.content
    }

    /// Generators divided by the content; their gcd is 1.
    pub fn reduced_generators(&self) -> &[u64] {
        &self.reduced
    }

    /// Smallest reduced generator.
    pub fn multiplicity(&self) -> u64 {
        self.reduced[0]
    }

    /// The lcm used when the monoid was built from rationals.
    pub fn scale(&self) -> Option<&BigUint> {
        self.scale.as_ref()
    }

    /// Decides t with a machine-integer target. See [`Self::contains_big`].
    pub fn contains(&self, t: u64) -> Result<Option<BTreeMap<u64, u64>>> {
        self.contains_big(&BigUint::from(t))
    }

    /// Decides whether t lies in the monoid; on success returns a witness
    /// map from generator to multiplicity re-summing to t.
    ///
    /// Targets up to [`TABLE_CAP`] (after content reduction) go through a
    /// boolean table with a greedy largest-first representation walk; larger
    /// targets use the Apery residue test, whose witness takes a shortest
    /// path representative plus bulk copies of the multiplicity.
    pub fn contains_big(&self, t: &BigUint) -> Result<Option<BTreeMap<u64, u64>>> {
        if t.is_zero() {
            return Ok(Some(BTreeMap::new()));
        }
        let (q, r) = t.div_rem(&BigUint::from(self.content));
        if !r.is_zero() {
            return Ok(None);
        }
        let rep = match q.to_u64() {
            Some(small) if small <= TABLE_CAP => self.table_membership(small),
            _ => self.apery_membership(&q)?,
        };
        Ok(rep.map(|rep| {
            rep.into_iter().map(|(g, k)| (g * self.content, k)).collect()
        }))
    }

    /// Table route on the reduced monoid: reachability table, then a greedy
    /// walk taking the largest usable generator at every step.
    fn table_membership(&self, target: u64) -> Option<BTreeMap<u64, u64>> {
        let n = target as usize;
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for &g in &self.reduced {
            let g = g as usize;
            if g > n {
                break;
            }
            for v in g..=n {
                if reach[v - g] {
                    reach[v] = true;
                }
            }
        }
        if !reach[n] {
            return None;
        }
        let mut rep: BTreeMap<u64, u64> = BTreeMap::new();
        let mut v = n;
        while v > 0 {
            let g = self
                .reduced
                .iter()
                .rev()
                .find(|&&g| (g as usize) <= v && reach[v - g as usize])
                .expect("reachable value has a reachable predecessor");
            *rep.entry(*g).or_insert(0) += 1;
            v -= *g as usize;
        }
        Some(rep)
    }

    /// Apery route on the reduced monoid: t is a member iff t is at least
    /// the least monoid element in its residue class mod the multiplicity.
    fn apery_membership(&self, target: &BigUint) -> Result<Option<BTreeMap<u64, u64>>> {
        let m = self.multiplicity();
        let table = self.apery_table()?;
        let residue = (target % BigUint::from(m)).to_u64().expect("residue below u64 modulus");
        let least = &table.dist[residue as usize];
        if target < least {
            return Ok(None);
        }
        let mut rep = table.path_rep(residue);
        let copies = (target - least) / BigUint::from(m);
        if let Some(copies) = copies.to_u64() {
            if copies > 0 {
                *rep.entry(m).or_insert(0) += copies;
            }
            Ok(Some(rep))
        } else {
            Err(Error::Resource(format!("witness multiplicity {copies} exceeds machine range")))
        }
    }

    fn apery_table(&self) -> Result<AperyTable> {
        let m = self.multiplicity();
        if m > APERY_CAP {
            return Err(Error::Resource(format!(
                "multiplicity {m} exceeds Apery cap {APERY_CAP}"
            )));
        }
        Ok(AperyTable::shortest_paths(&self.reduced, m))
    }

    /// The Apery set of the reduced monoid relative to m: for each residue
    /// class i mod m, the least member congruent to i, listed by residue.
    /// m must itself be a member.
    pub fn apery(&self, m: u64) -> Result<Vec<u64>> {
        if m == 0 {
            return Err(Error::InvalidArgument("apery base must be positive".into()));
        }
        if m > APERY_CAP {
            return Err(Error::Resource(format!("apery base {m} exceeds cap {APERY_CAP}")));
        }
        let reduced = NumericalSemigroup::from_integers(&self.reduced)?;
        if reduced.contains(m)?.is_none() {
            return Err(Error::InvalidArgument(format!(
                "{m} is not a member of the reduced monoid"
            )));
        }
        let table = AperyTable::shortest_paths(&self.reduced, m);
        table
            .dist
            .iter()
            .map(|w| {
                w.to_u64().ok_or_else(|| {
                    Error::Resource("apery value exceeds machine range".into())
                })
            })
            .collect()
    }

    /// Largest integer (multiple of the content) outside the monoid, or the
    /// infinite marker when the content exceeds 1.
    pub fn frobenius(&self) -> Result<Frobenius> {
        if self.content > 1 {
            return Ok(Frobenius::Infinite);
        }
        let m = self.multiplicity();
        let apery = self.apery(m)?;
        let max = *apery.iter().max().expect("apery set is nonempty");
        let frob = i64::try_from(max)
            .ok()
            .and_then(|w| w.checked_sub(m as i64))
            .ok_or_else(|| Error::Resource("frobenius number exceeds machine range".into()))?;
        Ok(Frobenius::Finite(frob))
    }

    /// The generators not representable as sums of the other generators:
    /// the atom set of the monoid.
    pub fn minimal_generators(&self) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for (i, &g) in self.generators.iter().enumerate() {
            let others: Vec<u64> = self
                .generators
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &h)| h)
                .collect();
            let redundant = if others.is_empty() {
                false
            } else {
                NumericalSemigroup::from_integers(&others)?.contains(g)?.is_some()
            };
            if !redundant {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// Number of gaps (nonmembers below the Frobenius number). Requires
    /// content 1; computed from the Apery set.
    pub fn genus(&self) -> Result<u64> {
        if self.content > 1 {
            return Err(Error::InvalidArgument(
                "genus is infinite when the content exceeds 1".into(),
            ));
        }
        let m = self.multiplicity();
        let apery = self.apery(m)?;
        let sum: u128 = apery.iter().map(|&w| w as u128).sum();
        // Selmer's formula: genus = (sum of Apery values)/m - (m - 1)/2.
        let twice = 2 * sum / m as u128;
        debug_assert_eq!(2 * sum % m as u128, 0);
        let genus = (twice - (m as u128 - 1)) / 2;
        u64::try_from(genus)
            .map_err(|_| Error::Resource("genus exceeds machine range".into()))
    }
}

/// Least monoid element per residue class mod m, with predecessor links for
/// representation reconstruction.
struct AperyTable {
    m: u64,
    dist: Vec<BigUint>,
    parent_gen: Vec<u64>,
    parent_res: Vec<u64>,
}

impl AperyTable {
    /// Dijkstra over residues: an edge r -> (r + g) mod m of weight g for
    /// each generator g. Shortest distances from 0 are the least members.
    fn shortest_paths(gens: &[u64], m: u64) -> AperyTable {
        let n = m as usize;
        let mut dist = vec![u128::MAX; n];
        let mut parent_gen = vec![0u64; n];
        let mut parent_res = vec![0u64; n];
        dist[0] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0u128, 0u64)));
        while let Some(Reverse((d, r))) = heap.pop() {
            if d > dist[r as usize] {
                continue;
            }
            for &g in gens {
                if g % m == 0 {
                    continue;
                }
                let nr = (r + g % m) % m;
                let nd = d + g as u128;
                if nd < dist[nr as usize] {
                    dist[nr as usize] = nd;
                    parent_gen[nr as usize] = g;
                    parent_res[nr as usize] = r;
                    heap.push(Reverse((nd, nr)));
                }
            }
        }
        let dist = dist.into_iter().map(BigUint::from).collect();
        AperyTable { m, dist, parent_gen, parent_res }
    }

    /// Representation of the least member in the class of `residue`, read
    /// off the predecessor links.
    fn path_rep(&self, residue: u64) -> BTreeMap<u64, u64> {
        let mut rep = BTreeMap::new();
        let mut r = residue;
        let mut guard = 0u64;
        while r != 0 {
            let g = self.parent_gen[r as usize];
            *rep.entry(g).or_insert(0) += 1;
            r = self.parent_res[r as usize];
            guard += 1;
            assert!(guard <= self.m, "predecessor walk left the tree");
        }
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ns(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_integers(gens).unwrap()
    }

    fn resum(rep: &BTreeMap<u64, u64>) -> u64 {
        rep.iter().map(|(g, k)| g * k).sum()
    }

    #[test]
    fn construction_normalizes() {
        let s = ns(&[6, 9, 20]);
        assert_eq!(s.generators(), &[6, 9, 20]);
        assert_eq!(s.content(), 1);
        assert_eq!(s.multiplicity(), 6);
        let s = ns(&[4, 6]);
        assert_eq!(s.content(), 2);
        assert_eq!(s.reduced_generators(), &[2, 3]);
        let s = ns(&[5]);
        assert_eq!(s.content(), 5);
        assert_eq!(s.reduced_generators(), &[1]);
        let s = ns(&[9, 6, 6, 20]);
        assert_eq!(s.generators(), &[6, 9, 20]);
        assert!(NumericalSemigroup::from_integers(&[]).is_err());
        assert!(NumericalSemigroup::from_integers(&[3, 0]).is_err());
    }

    #[test]
    fn construction_from_rationals_scales_by_lcm() {
        let rats: Vec<Rat> = ["1/2", "3/4"].iter().map(|s| s.parse().unwrap()).collect();
        let s = NumericalSemigroup::from_rationals(&rats).unwrap();
        assert_eq!(s.scale().unwrap().to_u64(), Some(4));
        assert_eq!(s.generators(), &[2, 3]);
        let rats: Vec<Rat> = ["3/2", "9/4"].iter().map(|s| s.parse().unwrap()).collect();
        let s = NumericalSemigroup::from_rationals(&rats).unwrap();
        assert_eq!(s.scale().unwrap().to_u64(), Some(4));
        assert_eq!(s.generators(), &[6, 9]);
        assert_eq!(s.content(), 3);
        let rats: Vec<Rat> = ["2", "5"].iter().map(|s| s.parse().unwrap()).collect();
        let s = NumericalSemigroup::from_rationals(&rats).unwrap();
        assert_eq!(s.scale().unwrap().to_u64(), Some(1));
        assert_eq!(s.generators(), &[2, 5]);
        assert!(NumericalSemigroup::from_rationals(&[Rat::zero()]).is_err());
    }

    #[test]
    fn contains_goldens() {
        let s = ns(&[2, 3]);
        assert_eq!(s.contains(1).unwrap(), None);
        let rep = s.contains(5).unwrap().unwrap();
        assert_eq!(rep, BTreeMap::from([(2, 1), (3, 1)]));
        let s = ns(&[6, 9, 20]);
        assert_eq!(s.contains(43).unwrap(), None);
        let rep = s.contains(44).unwrap().unwrap();
        assert_eq!(resum(&rep), 44);
        assert_eq!(s.contains(0).unwrap(), Some(BTreeMap::new()));
    }

    #[test]
    fn contains_matches_exhaustive_table() {
        // Independent oracle: breadth-first closure of sums up to a bound.
        let cases: [&[u64]; 4] = [&[2, 3], &[3, 5], &[6, 9, 20], &[4, 6]];
        for gens in cases {
            let bound = 120u64;
            let mut table = vec![false; bound as usize + 1];
            table[0] = true;
            for v in 1..=bound {
                table[v as usize] =
                    gens.iter().any(|&g| g <= v && table[(v - g) as usize]);
            }
            let s = ns(gens);
            for t in 0..=bound {
                let got = s.contains(t).unwrap();
                assert_eq!(got.is_some(), table[t as usize], "{gens:?} at {t}");
                if let Some(rep) = got {
                    assert_eq!(resum(&rep), t);
                }
            }
        }
    }

    #[test]
    fn representation_is_greedy_largest_first() {
        let s = ns(&[6, 9, 20]);
        let rep = s.contains(44).unwrap().unwrap();
        assert_eq!(rep, BTreeMap::from([(6, 1), (9, 2), (20, 1)]));
        let s = ns(&[4, 6, 9, 10]);
        let rep = s.contains(20).unwrap().unwrap();
        assert_eq!(rep, BTreeMap::from([(10, 2)]));
    }

    #[test]
    fn content_reduction_scales_representations() {
        let s = ns(&[4, 6]);
        assert_eq!(s.contains(7).unwrap(), None);
        assert_eq!(s.contains(2).unwrap(), None);
        let rep = s.contains(10).unwrap().unwrap();
        assert_eq!(rep, BTreeMap::from([(4, 1), (6, 1)]));
        assert_eq!(resum(&rep), 10);
    }

    #[test]
    fn apery_goldens() {
        let s = ns(&[3, 5]);
        assert_eq!(s.apery(3).unwrap(), vec![0, 10, 5]);
        let s = ns(&[2, 3]);
        assert_eq!(s.apery(2).unwrap(), vec![0, 3]);
        let s = ns(&[1]);
        assert_eq!(s.apery(1).unwrap(), vec![0]);
        let s = ns(&[3, 5]);
        assert!(s.apery(4).is_err());
        assert!(s.apery(0).is_err());
    }

    #[test]
    fn apery_route_agrees_with_table_route() {
        // The same targets decided both ways, straddling representations.
        let s = ns(&[6, 9, 20]);
        let table = AperyTable::shortest_paths(s.reduced_generators(), 6);
        for t in 0..200u64 {
            let by_table = s.contains(t).unwrap().is_some();
            let r = (t % 6) as usize;
            let by_apery = BigUint::from(t) >= table.dist[r];
            assert_eq!(by_table, by_apery, "at {t}");
        }
        let rep = s.apery_membership(&BigUint::from(1_000_000_044u64)).unwrap().unwrap();
        assert_eq!(resum(&rep), 1_000_000_044);
    }

    #[test]
    fn frobenius_goldens() {
        assert_eq!(ns(&[3, 5]).frobenius().unwrap(), Frobenius::Finite(7));
        assert_eq!(ns(&[6, 9, 20]).frobenius().unwrap(), Frobenius::Finite(43));
        assert_eq!(ns(&[2, 4]).frobenius().unwrap(), Frobenius::Infinite);
        assert_eq!(ns(&[1]).frobenius().unwrap(), Frobenius::Finite(-1));
    }

    #[test]
    fn minimal_generators_goldens() {
        assert_eq!(ns(&[4, 6, 9, 10]).minimal_generators().unwrap(), vec![4, 6, 9]);
        assert_eq!(ns(&[2, 3, 4]).minimal_generators().unwrap(), vec![2, 3]);
        assert_eq!(ns(&[7]).minimal_generators().unwrap(), vec![7]);
        assert_eq!(ns(&[4, 6]).minimal_generators().unwrap(), vec![4, 6]);
    }

    #[test]
    fn genus_goldens() {
        assert_eq!(ns(&[3, 5]).genus().unwrap(), 4);
        assert_eq!(ns(&[1]).genus().unwrap(), 0);
        assert_eq!(ns(&[2, 3]).genus().unwrap(), 1);
        assert!(ns(&[2, 4]).genus().is_err());
    }

    #[test]
    fn genus_matches_direct_gap_count() {
        for gens in [[3u64, 5].as_slice(), &[6, 9, 20], &[5, 7, 11], &[2, 3]] {
            let s = ns(gens);
            let Frobenius::Finite(frob) = s.frobenius().unwrap() else {
                panic!("content 1 expected")
            };
            let gaps = (0..=frob.max(0) as u64)
                .filter(|&t| s.contains(t).unwrap().is_none())
                .count() as u64;
            assert_eq!(s.genus().unwrap(), gaps, "{gens:?}");
        }
    }
}
