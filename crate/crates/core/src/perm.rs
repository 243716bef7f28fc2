//! Permutations on `{0..degree-1}` stored as image sequences.
//!
//! The group acts on the right: `x^(pq) = (x^p)^q`, and `compose(p, q)`
//! returns the permutation "apply `p`, then `q`".

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Error)]
pub enum PermError {
    #[error("images of length {0} are not a bijection of 0..{0}")]
    NotBijective(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid cycle notation: {0}")]
    BadCycleNotation(String),
}

use thiserror::Error;

/// A bijection on `{0..degree-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from an image sequence, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if (x as usize) >= n || seen[x as usize] {
                return Err(PermError::NotBijective(n));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// The image of a point under this permutation.
    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `compose(p, q)` = apply `p` then `q`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Conjugate: `self^other = other^-1 * self * other`.
    pub fn conjugate(&self, other: &Permutation) -> Permutation {
        other.inverse().compose(self).compose(other)
    }

    pub fn pow(&self, mut e: i64) -> Permutation {
        let base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for c in self.cycles_with_fixed(false) {
            order = lcm(order, c.len() as u64);
        }
        order
    }

    /// Number of fixed points among `lambda` (or the whole domain if `None`).
    pub fn fixed_point_count(&self, lambda: Option<&[u32]>) -> usize {
        match lambda {
            Some(set) => set.iter().filter(|&&x| self.apply(x) == x).count(),
            None => (0..self.degree() as u32).filter(|&x| self.apply(x) == x).count(),
        }
    }

    pub fn moved_points(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.degree() as u32).filter(move |&x| self.apply(x) != x)
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.moved_points().next()
    }

    /// Parity: true iff the permutation is even.
    pub fn is_even(&self) -> bool {
        let transpositions: usize = self
            .cycles_with_fixed(false)
            .iter()
            .map(|c| c.len() - 1)
            .sum();
        transpositions % 2 == 0
    }

    /// Disjoint cycles; singleton cycles included iff `with_fixed`.
    pub fn cycles_with_fixed(&self, with_fixed: bool) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 || with_fixed {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Renders 1-based disjoint-cycle notation, e.g. `(1 2 3)(4 5)`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles_with_fixed(false);
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for c in cycles {
            out.push('(');
            let parts: Vec<String> = c.iter().map(|&x| (x + 1).to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push(')');
        }
        out
    }

    /// Parses 1-based disjoint-cycle notation. Commas and whitespace both
    /// separate points; `()` denotes the identity.
    pub fn from_cycle_string(s: &str, degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let bad = || PermError::BadCycleNotation(s.to_string());
        let mut rest = s.trim();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let close = rest.find(')').ok_or_else(bad)?;
            let inner = &rest[1..close];
            let points: Vec<u32> = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            for &p in &points {
                if p == 0 || p as usize > degree {
                    return Err(bad());
                }
            }
            for w in 0..points.len() {
                let from = points[w] - 1;
                let to = points[(w + 1) % points.len()] - 1;
                if images[from as usize] != from {
                    return Err(bad()); // point repeated across cycles
                }
                images[from as usize] = to;
            }
            // A self-mapping in the loop above only stays valid for 1-cycles.
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_images(images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::from_cycle_string(s, n).unwrap()
    }

    #[test]
    fn compose_cyclic() {
        // (0 1 2) o (0 1 2) = (0 2 1), i.e. 1-based (1 2 3)^2 = (1 3 2).
        let c = p("(1 2 3)", 3);
        assert_eq!(c.compose(&c), p("(1 3 2)", 3));
        assert_eq!(c.compose(&Permutation::identity(3)), c);
    }

    #[test]
    fn inverse_roundtrip() {
        let g = p("(1 4 2)(3 5)", 6);
        assert!(g.compose(&g.inverse()).is_identity());
        assert!(g.inverse().compose(&g).is_identity());
    }

    #[test]
    fn thirteen_cycle_product() {
        // x a 13-cycle, y = x conjugated by (1 2 3); x*y is again a 13-cycle.
        let x = p("(1 2 3 4 5 6 7 8 9 10 11 12 13)", 13);
        let y = x.conjugate(&p("(1 2 3)", 13));
        let g = x.compose(&y);
        assert_eq!(g.order(), 13);
        assert_eq!(g.cycles_with_fixed(false).len(), 1);
    }

    #[test]
    fn cycle_string_roundtrip() {
        let g = p("(1 2)(3 4 5)", 7);
        assert_eq!(g.to_cycle_string(), "(1 2)(3 4 5)");
        assert_eq!(Permutation::from_cycle_string(&g.to_cycle_string(), 7).unwrap(), g);
        assert_eq!(Permutation::identity(4).to_cycle_string(), "()");
    }

    #[test]
    fn parity() {
        assert!(!p("(1 2)", 4).is_even());
        assert!(p("(1 2)(3 4)", 4).is_even());
        assert!(p("(1 2 3)", 4).is_even());
    }

    #[test]
    fn order_and_pow() {
        let g = p("(1 2)(3 4 5)", 5);
        assert_eq!(g.order(), 6);
        assert!(g.pow(6).is_identity());
        assert_eq!(g.pow(-1), g.inverse());
        assert_eq!(g.pow(5), g.inverse());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_cycle_string("(1 2", 3).is_err());
        assert!(Permutation::from_cycle_string("(1 2)(2 3)", 3).is_err());
        assert!(Permutation::from_cycle_string("(0 1)", 3).is_err());
        assert!(Permutation::from_cycle_string("(1 4)", 3).is_err());
    }
}
