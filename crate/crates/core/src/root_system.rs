//! Cartan data for the finite root systems and the bilinear-form arithmetic
//! the recursions consume.
//!
//! The invariant form is normalized so that short roots have squared length 2:
//! `(α_i, α_j) = d_i · a_ij` with `d_i = (α_i, α_i)/2 ∈ {1, 2, 3}` and `a_ij`
//! the Cartan matrix. Node numbering follows Bourbaki throughout.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// The seven families of finite root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    /// Whether every root has the same length (families A, D, E).
    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }

    fn rank_is_valid(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// An element of the root lattice in the simple-root basis.
///
/// Coefficients may be signed; elements of the nonnegative cone `Q^{≥0}`
/// have every coefficient `≥ 0`. Ordering is lexicographic, which is a
/// linear extension of the componentwise partial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(pub Vec<i64>);

impl LatticeVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        LatticeVector(coeffs)
    }

    pub fn zero(rank: usize) -> Self {
        LatticeVector(vec![0; rank])
    }

    /// The `i`-th simple root (0-based index) in rank `rank`.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        LatticeVector(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Membership in the nonnegative cone `Q^{≥0}`.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Componentwise partial order: `self ≤ other`.
    pub fn leq(&self, other: &LatticeVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    fn require_nonnegative(&self) -> Result<()> {
        if self.is_nonnegative() {
            Ok(())
        } else {
            Err(Error::NegativeCoefficient(self.0.clone()))
        }
    }
}

impl Add<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&LatticeVector> for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        LatticeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Cartan datum of a finite root system: family, rank, Cartan matrix and the
/// symmetrizers `d_i` making `d_i · a_ij` symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemSpec {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
}

impl RootSystemSpec {
    /// Build the spec for `family` at `rank` with Bourbaki numbering.
    ///
    /// Rejects invalid combinations (G3, F5, E9, …). Symmetrizers are derived
    /// from the Cartan matrix rather than taken from a table, then checked
    /// against the symmetrizability and simply-laced invariants.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.rank_is_valid(rank) {
            return Err(Error::InvalidSystem(format!("{family}{rank}")));
        }
        let cartan = cartan_matrix(family, rank);
        let symmetrizers = derive_symmetrizers(&cartan)
            .ok_or_else(|| Error::InvalidSystem(format!("{family}{rank}")))?;
        debug_assert!(symmetrizers.iter().all(|d| (1..=3).contains(d)));
        debug_assert!(!family.is_simply_laced() || symmetrizers.iter().all(|&d| d == 1));
        Ok(RootSystemSpec {
            family,
            rank,
            cartan,
            symmetrizers,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    pub fn is_simply_laced(&self) -> bool {
        self.symmetrizers.iter().all(|&d| d == 1)
    }

    pub fn is_type_a(&self) -> bool {
        self.family == Family::A
    }

    /// Edges `{i, j}` (0-based, `i < j`) of the Dynkin diagram.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                if self.cartan[i][j] != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn check_len(&self, v: &LatticeVector) -> Result<()> {
        if v.len() == self.rank {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank,
                got: v.len(),
            })
        }
    }

    /// The invariant bilinear form: `(β, γ) = Σ_{i,j} b_i c_j d_i a_ij`.
    pub fn pairing(&self, beta: &LatticeVector, gamma: &LatticeVector) -> Result<i64> {
        self.check_len(beta)?;
        self.check_len(gamma)?;
        let mut acc = 0i64;
        for (i, &b) in beta.0.iter().enumerate() {
            if b == 0 {
                continue;
            }
            for (j, &c) in gamma.0.iter().enumerate() {
                acc += b * c * self.symmetrizers[i] * self.cartan[i][j];
            }
        }
        Ok(acc)
    }

    /// `(β, β)/2`, always an integer; positive for `β ≠ 0`.
    pub fn norm_half(&self, beta: &LatticeVector) -> Result<i64> {
        let n = self.pairing(beta, beta)?;
        debug_assert!(n % 2 == 0);
        Ok(n / 2)
    }

    /// `(ρ, α) = Σ_i d_i a_i`, with ρ the Weyl vector (`(ρ, α_i) = d_i`).
    pub fn rho_pairing(&self, alpha: &LatticeVector) -> Result<i64> {
        self.check_len(alpha)?;
        Ok(alpha
            .0
            .iter()
            .zip(&self.symmetrizers)
            .map(|(a, d)| a * d)
            .sum())
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    /// Parse a selector such as "A3" or "g2", case-insensitively.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::InvalidSystem(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::InvalidSystem(s.to_string()))?;
        RootSystemSpec::new(fam, rank)
    }
}

/// Cartan matrix in the row convention `a_ij = (α_i, α_j)/d_i`, so that the
/// short root of a multiple bond carries the `-2` (or `-3`) entry in its row.
fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |m: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        m[i][j] = -1;
        m[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(&mut m, i, i + 1);
            }
        }
        Family::B => {
            // chain with α_n short: (α_{n-1}, α_n) = -2
            for i in 0..n - 1 {
                link(&mut m, i, i + 1);
            }
            m[n - 1][n - 2] = -2;
        }
        Family::C => {
            // chain with α_n long: (α_{n-1}, α_n) = -2
            for i in 0..n - 1 {
                link(&mut m, i, i + 1);
            }
            m[n - 2][n - 1] = -2;
        }
        Family::D => {
            for i in 0..n - 2 {
                link(&mut m, i, i + 1);
            }
            link(&mut m, n - 3, n - 1);
        }
        Family::E => {
            // Bourbaki: chain 1-3-4-5-…-n, node 2 attached to node 4.
            link(&mut m, 0, 2);
            for i in 2..n - 1 {
                link(&mut m, i, i + 1);
            }
            link(&mut m, 1, 3);
        }
        Family::F => {
            // chain 1-2-3-4, α_1 α_2 long, α_3 α_4 short
            for i in 0..3 {
                link(&mut m, i, i + 1);
            }
            m[2][1] = -2;
        }
        Family::G => {
            // α_1 short, α_2 long: (α_1, α_2) = -3
            m[0][1] = -3;
            m[1][0] = -1;
        }
    }
    m
}

/// Minimal positive integers `d_i` with `d_i a_ij = d_j a_ji`, found by
/// propagating the ratios `a_ij / a_ji` along the (connected) diagram.
fn derive_symmetrizers(cartan: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = cartan.len();
    // numerator/denominator pairs relative to node 0
    let mut ratio: Vec<Option<(i64, i64)>> = vec![None; n];
    ratio[0] = Some((1, 1));
    let mut stack = vec![0usize];
    while let Some(i) = stack.pop() {
        let (num_i, den_i) = ratio[i].unwrap();
        for j in 0..n {
            if i == j || cartan[i][j] == 0 {
                continue;
            }
            // d_j / d_i = a_ij / a_ji
            let num_j = num_i * cartan[i][j];
            let den_j = den_i * cartan[j][i];
            let g = gcd_i64(num_j.abs(), den_j.abs());
            let (num_j, den_j) = (num_j / g, den_j / g);
            let (num_j, den_j) = if den_j < 0 {
                (-num_j, -den_j)
            } else {
                (num_j, den_j)
            };
            match ratio[j] {
                None => {
                    ratio[j] = Some((num_j, den_j));
                    stack.push(j);
                }
                Some(existing) => {
                    if existing != (num_j, den_j) {
                        return None;
                    }
                }
            }
        }
    }
    if ratio.iter().any(|r| r.is_none()) {
        return None; // disconnected diagram: not an irreducible system
    }
    let lcm_den = ratio
        .iter()
        .map(|r| r.unwrap().1)
        .fold(1i64, |a, b| a / gcd_i64(a, b) * b);
    let mut d: Vec<i64> = ratio
        .iter()
        .map(|r| {
            let (num, den) = r.unwrap();
            num * (lcm_den / den)
        })
        .collect();
    if d.iter().any(|&x| x <= 0) {
        return None;
    }
    let g = d.iter().fold(0i64, |a, &b| gcd_i64(a, b));
    for x in d.iter_mut() {
        *x /= g;
    }
    // normalize: short roots have length 2 ⇔ min d_i = 1
    let min = *d.iter().min().unwrap();
    if min != 1 {
        return None;
    }
    for (i, row) in cartan.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            if d[i] * a != d[j] * cartan[j][i] {
                return None;
            }
        }
    }
    Some(d)
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All `β` with `0 ≤ β ≤ α` in lexicographic order (leftmost coefficient
/// most significant). Cardinality `∏ (a_i + 1)`.
pub fn enumerate_interval(alpha: &LatticeVector) -> Result<IntervalIter> {
    alpha.require_nonnegative()?;
    Ok(IntervalIter {
        bounds: alpha.0.clone(),
        next: Some(vec![0; alpha.len()]),
    })
}

/// Lexicographic odometer over the box `∏ [0, a_i]`.
pub struct IntervalIter {
    bounds: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl Iterator for IntervalIter {
    type Item = LatticeVector;

    fn next(&mut self) -> Option<LatticeVector> {
        let current = self.next.take()?;
        let mut advanced = current.clone();
        let mut done = true;
        for i in (0..advanced.len()).rev() {
            if advanced[i] < self.bounds[i] {
                advanced[i] += 1;
                for x in advanced.iter_mut().skip(i + 1) {
                    *x = 0;
                }
                done = false;
                break;
            }
        }
        if !done {
            self.next = Some(advanced);
        } else if current.is_empty() {
            // rank-0 box has exactly one point
            self.next = None;
        }
        Some(LatticeVector(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(s: &str) -> RootSystemSpec {
        s.parse().unwrap()
    }

    fn lv(c: &[i64]) -> LatticeVector {
        LatticeVector::new(c.to_vec())
    }

    #[test]
    fn pairing_examples() {
        let a1 = spec("A1");
        assert_eq!(a1.pairing(&lv(&[1]), &lv(&[1])).unwrap(), 2);
        let a2 = spec("A2");
        assert_eq!(a2.pairing(&lv(&[1, 0]), &lv(&[0, 1])).unwrap(), -1);
        let g2 = spec("G2");
        assert_eq!(g2.symmetrizers(), &[1, 3]);
        assert_eq!(g2.pairing(&lv(&[1, 0]), &lv(&[0, 1])).unwrap(), -3);
    }

    #[test]
    fn pairing_dimension_mismatch() {
        let a2 = spec("A2");
        assert!(matches!(
            a2.pairing(&lv(&[1]), &lv(&[0, 1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn norm_half_examples() {
        let a1 = spec("A1");
        assert_eq!(a1.norm_half(&lv(&[2])).unwrap(), 4);
        let a2 = spec("A2");
        assert_eq!(a2.norm_half(&lv(&[1, 1])).unwrap(), 1);
        assert_eq!(a2.norm_half(&lv(&[0, 0])).unwrap(), 0);
    }

    #[test]
    fn rho_pairing_examples() {
        let a2 = spec("A2");
        assert_eq!(a2.rho_pairing(&lv(&[1, 1])).unwrap(), 2);
        assert_eq!(a2.rho_pairing(&lv(&[0, 0])).unwrap(), 0);
        let g2 = spec("G2");
        assert_eq!(g2.rho_pairing(&lv(&[1, 1])).unwrap(), 4);
    }

    #[test]
    fn symmetrizers_per_family() {
        assert_eq!(spec("A3").symmetrizers(), &[1, 1, 1]);
        assert_eq!(spec("B2").symmetrizers(), &[2, 1]);
        assert_eq!(spec("B3").symmetrizers(), &[2, 2, 1]);
        assert_eq!(spec("C3").symmetrizers(), &[1, 1, 2]);
        assert_eq!(spec("D4").symmetrizers(), &[1, 1, 1, 1]);
        assert_eq!(spec("F4").symmetrizers(), &[2, 2, 1, 1]);
        assert_eq!(spec("E6").symmetrizers(), &[1; 6]);
        assert_eq!(spec("E8").symmetrizers(), &[1; 8]);
    }

    #[test]
    fn selector_parsing() {
        assert!("a3".parse::<RootSystemSpec>().is_ok());
        assert!(" G2 ".parse::<RootSystemSpec>().is_ok());
        for bad in ["G3", "F5", "E9", "E5", "A0", "D2", "H4", "A", "3A", ""] {
            assert!(
                bad.parse::<RootSystemSpec>().is_err(),
                "expected rejection of {bad:?}"
            );
        }
    }

    #[test]
    fn interval_enumeration() {
        let pts: Vec<_> = enumerate_interval(&lv(&[1, 1])).unwrap().collect();
        assert_eq!(
            pts,
            vec![lv(&[0, 0]), lv(&[0, 1]), lv(&[1, 0]), lv(&[1, 1])]
        );
        assert_eq!(enumerate_interval(&lv(&[3])).unwrap().count(), 4);
        let zero: Vec<_> = enumerate_interval(&lv(&[0, 0])).unwrap().collect();
        assert_eq!(zero, vec![lv(&[0, 0])]);
        assert!(enumerate_interval(&lv(&[1, -1])).is_err());
    }

    #[test]
    fn interval_is_lex_sorted_and_complete() {
        let alpha = lv(&[2, 1, 2]);
        let pts: Vec<_> = enumerate_interval(&alpha).unwrap().collect();
        assert_eq!(pts.len(), 3 * 2 * 3);
        let mut sorted = pts.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(pts, sorted);
        assert!(pts.iter().all(|b| b.leq(&alpha)));
    }

    #[test]
    fn norm_positive_definite_small() {
        for s in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4"] {
            let spec = spec(s);
            let n = spec.rank();
            let mut stack = vec![vec![]];
            while let Some(v) = stack.pop() {
                if v.len() == n {
                    let w = lv(&v);
                    if !w.is_zero() {
                        assert!(
                            spec.norm_half(&w).unwrap() > 0,
                            "norm not positive for {s} {v:?}"
                        );
                    }
                    continue;
                }
                for c in -3..=3 {
                    let mut v2 = v.clone();
                    v2.push(c);
                    stack.push(v2);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn pairing_symmetric(b in proptest::collection::vec(-5i64..=5, 4),
                             c in proptest::collection::vec(-5i64..=5, 4)) {
            for s in ["A4", "D4", "F4"] {
                let spec: RootSystemSpec = s.parse().unwrap();
                let (bv, cv) = (lv(&b), lv(&c));
                prop_assert_eq!(spec.pairing(&bv, &cv).unwrap(), spec.pairing(&cv, &bv).unwrap());
            }
        }

        #[test]
        fn rho_additive(a in proptest::collection::vec(-5i64..=5, 3),
                        b in proptest::collection::vec(-5i64..=5, 3)) {
            for s in ["A3", "B3", "C3"] {
                let spec: RootSystemSpec = s.parse().unwrap();
                let (av, bv) = (lv(&a), lv(&b));
                let sum = &av + &bv;
                prop_assert_eq!(
                    spec.rho_pairing(&sum).unwrap(),
                    spec.rho_pairing(&av).unwrap() + spec.rho_pairing(&bv).unwrap()
                );
            }
        }
    }
}
