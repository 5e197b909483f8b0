//! The prime sets Π_{f,g}, their linkage graph on the factor set and the
//! obstruction group G_P.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intfactor::{prime_support, to_u64_prime};
use crate::modpoly::{symmetric_common_factor, PolyModP, WitnessKind};
use crate::poly::{resultant, symmetric_check, IntPoly};
use crate::zfactor::SymmetricFactorSet;

/// Symmetric common factor of f and g modulo one prime of Π_{f,g}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiWitness {
    pub prime: u64,
    /// Monic witness h over F_p, with h(1 - X) = h(X).
    pub factor: String,
    pub kind: String,
}

/// Π_{f,g} for one unordered pair of factor indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiEntry {
    pub pair: (usize, usize),
    pub primes: Vec<u64>,
    pub witnesses: Vec<PiWitness>,
    #[serde(with = "crate::bigint_str")]
    pub resultant: BigInt,
}

impl PiEntry {
    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// Partition of the factor indices into linked classes; G_P ≅ (Z/2)^rank.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionGroup {
    pub components: Vec<Vec<usize>>,
    pub rank: usize,
}

impl ObstructionGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0
    }

    /// Order of the group, 2^rank.
    pub fn order(&self) -> BigInt {
        BigInt::from(1) << self.rank
    }
}

fn kind_name(k: WitnessKind) -> &'static str {
    match k {
        WitnessKind::OrbitPair => "orbit pair q·q(1-X)",
        WitnessKind::FixedEvenDegree => "fixed factor of even degree",
        WitnessKind::SquaredFixedPoint => "squared fixed point (X - 1/2)^2",
    }
}

fn check_factor(f: &IntPoly) -> Result<()> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::Assumptions(format!("{f} is constant")));
    }
    if !f.is_monic() {
        return Err(Error::Assumptions(format!("{f} is not monic")));
    }
    if !symmetric_check(f) {
        return Err(Error::Assumptions(format!("{f} is not symmetric")));
    }
    Ok(())
}

/// Π_{f,g}: primes p for which f mod p and g mod p share a nonconstant
/// symmetric factor. Only primes dividing Res(f, g) can qualify.
///
/// The returned entry carries the pair `(0, 1)`; [`obstruction_group`]
/// relabels it.
pub fn pi_set(f: &IntPoly, g: &IntPoly, seed: u64) -> Result<PiEntry> {
    if f == g {
        return Err(Error::IdenticalFactors);
    }
    check_factor(f)?;
    check_factor(g)?;
    let res = resultant(f, g);
    let mut entry = PiEntry {
        pair: (0, 1),
        primes: Vec::new(),
        witnesses: Vec::new(),
        resultant: res.clone(),
    };
    if res == BigInt::from(0) {
        return Err(Error::Assumptions(format!("{f} and {g} share a factor over Z")));
    }
    for p in prime_support(&res, seed)? {
        let p = to_u64_prime(&p).ok_or_else(|| {
            Error::Assumptions(format!("candidate prime {p} exceeds the modular arithmetic range"))
        })?;
        let sc = symmetric_common_factor(
            &PolyModP::from_int_poly(f, p),
            &PolyModP::from_int_poly(g, p),
            seed,
        )?;
        if let (Some(h), Some(kind)) = (sc.witness, sc.kind) {
            entry.primes.push(p);
            entry.witnesses.push(PiWitness {
                prime: p,
                factor: h.to_string(),
                kind: kind_name(kind).to_string(),
            });
        }
    }
    Ok(entry)
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut j = i;
    while parent[j] != r {
        let next = parent[j];
        parent[j] = r;
        j = next;
    }
    r
}

/// Components of the graph on `0..n` with the given edges, each sorted,
/// ordered by smallest member.
pub fn components(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if slot[r] == usize::MAX {
            slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[r]].push(i);
    }
    groups
}

/// All pairwise Π sets over the factor set and the resulting G_P.
pub fn obstruction_group(
    set: &SymmetricFactorSet,
    seed: u64,
) -> Result<(ObstructionGroup, Vec<PiEntry>)> {
    let violations = set.violations();
    if !set.all_symmetric || !set.squarefree {
        return Err(Error::Assumptions(violations.join("; ")));
    }
    let n = set.factors.len();
    let mut table = Vec::new();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut e = pi_set(&set.factors[i], &set.factors[j], seed)?;
            e.pair = (i, j);
            if !e.is_empty() {
                edges.push((i, j));
            }
            table.push(e);
        }
    }
    let components = components(n, &edges);
    let rank = components.len().saturating_sub(1);
    Ok((ObstructionGroup { components, rank }, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::delta_to_p;
    use crate::zfactor::standing_assumptions;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn first_example_links_at_two() {
        let f1 = p("x^4 - 2*x^3 + 5*x^2 - 4*x + 1");
        let f2 = p("x^4 - 2*x^3 + 11*x^2 - 10*x + 3");
        let e = pi_set(&f1, &f2, 0).unwrap();
        assert_eq!(e.primes, vec![2]);
        assert_eq!(e.witnesses[0].factor, "x^2 + x + 1 (mod 2)");
        assert_eq!(pi_set(&f2, &f1, 0).unwrap().primes, vec![2]);

        let set = standing_assumptions(&(&f1 * &f2), 0).unwrap();
        let (g, table) = obstruction_group(&set, 0).unwrap();
        assert_eq!(g.rank, 0);
        assert_eq!(g.components, vec![vec![0, 1]]);
        assert_eq!(table.len(), 1);
    }

    #[test]
    fn second_example_unlinked() {
        let g1 = delta_to_p(&p("x^6 - 3*x^5 - x^4 + 5*x^3 - x^2 - 3*x + 1")).unwrap();
        let g2 = delta_to_p(&p("x^4 - x^2 + 1")).unwrap();
        let e = pi_set(&g1, &g2, 0).unwrap();
        assert!(e.is_empty());
        let set = standing_assumptions(&(&g1 * &g2), 0).unwrap();
        let (g, _) = obstruction_group(&set, 0).unwrap();
        assert_eq!(g.rank, 1);
        assert_eq!(g.order(), BigInt::from(2));
    }

    #[test]
    fn errors_and_trivial_cases() {
        let f1 = p("x^4 - 2*x^3 + 5*x^2 - 4*x + 1");
        assert_eq!(pi_set(&f1, &f1, 0), Err(Error::IdenticalFactors));
        assert!(matches!(pi_set(&f1, &p("x^2 + x"), 0), Err(Error::Assumptions(_))));
        let set = standing_assumptions(&f1, 0).unwrap();
        let (g, table) = obstruction_group(&set, 0).unwrap();
        assert_eq!(g.rank, 0);
        assert!(table.is_empty());
        let bad = standing_assumptions(&(&f1 * &f1), 0).unwrap();
        assert!(obstruction_group(&bad, 0).is_err());
    }

    #[test]
    fn union_find_components() {
        assert_eq!(components(4, &[(2, 3)]), vec![vec![0], vec![1], vec![2, 3]]);
        assert_eq!(components(3, &[(0, 2), (1, 2)]), vec![vec![0, 1, 2]]);
        assert_eq!(components(0, &[]), Vec::<Vec<usize>>::new());
    }
}
