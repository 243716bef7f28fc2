//! Small finite fields GF(q) with log/antilog multiplication tables.
//!
//! Elements are integer codes 0..q−1: the base-p digit packing of the
//! coefficient vector in the polynomial basis (for prime q the code is the
//! residue itself). A fixed primitive polynomial per q keeps the tables, and
//! hence every downstream certificate, reproducible.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FieldError {
    #[error("unsupported field size {0}")]
    Unsupported(u32),
    #[error("GF({0}) has no subfield of index 2 (conjugation undefined)")]
    NoConjugation(u32),
}

/// (q, characteristic, degree, reduction rule x^deg = c_0 + c_1·x + …).
/// Each polynomial is primitive (x generates the multiplicative group),
/// which is asserted when the tables are built.
const EXTENSION_POLYS: [(u32, u32, u32, &[u32]); 5] = [
    (4, 2, 2, &[1, 1]),        // x² = x + 1
    (8, 2, 3, &[1, 1, 0]),     // x³ = x + 1
    (9, 3, 2, &[1, 1]),        // x² = x + 1 over GF(3)
    (16, 2, 4, &[1, 1, 0, 0]), // x⁴ = x + 1
    (25, 5, 2, &[3, 1]),       // x² = x + 3 over GF(5)
];

const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

/// A finite field GF(q), q ≤ 25, with precomputed tables.
#[derive(Debug, Clone)]
pub struct FieldGF {
    pub q: u32,
    pub p: u32,
    pub deg: u32,
    /// exp[i] = g^i for a fixed primitive element g, length q−1.
    exp: Vec<u32>,
    /// log[a] defined for a in 1..q.
    log: Vec<u32>,
    add_table: Vec<u32>,
}

impl FieldGF {
    pub fn new(q: u32) -> Result<FieldGF, FieldError> {
        if PRIMES.contains(&q) {
            return Ok(Self::prime_field(q));
        }
        for &(qq, p, deg, coeffs) in &EXTENSION_POLYS {
            if qq == q {
                return Ok(Self::extension_field(q, p, deg, coeffs));
            }
        }
        Err(FieldError::Unsupported(q))
    }

    fn digits_add(p: u32, deg: u32, a: u32, b: u32) -> u32 {
        let mut out = 0;
        let mut mult = 1;
        let (mut a, mut b) = (a, b);
        for _ in 0..deg {
            out += (a % p + b % p) % p * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        out
    }

    fn finish(q: u32, p: u32, deg: u32, exp: Vec<u32>) -> FieldGF {
        assert_eq!(exp.len() as u32, q - 1, "primitive element must have order q−1");
        let mut log = vec![u32::MAX; q as usize];
        for (i, &a) in exp.iter().enumerate() {
            assert!(log[a as usize] == u32::MAX, "powers must be distinct");
            log[a as usize] = i as u32;
        }
        assert!(log[1..].iter().all(|&x| x != u32::MAX));
        let mut add_table = vec![0u32; (q * q) as usize];
        for a in 0..q {
            for b in 0..q {
                add_table[(a * q + b) as usize] = Self::digits_add(p, deg, a, b);
            }
        }
        FieldGF {
            q,
            p,
            deg,
            exp,
            log,
            add_table,
        }
    }

    fn prime_field(q: u32) -> FieldGF {
        if q == 2 {
            return Self::finish(2, 2, 1, vec![1]);
        }
        let g = (2..q)
            .find(|&a| {
                let mut pow = 1u64;
                (0..q - 2).all(|_| {
                    pow = pow * a as u64 % q as u64;
                    pow != 1
                })
            })
            .expect("every prime has a primitive root");
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut pow = 1u32;
        for _ in 0..q - 1 {
            exp.push(pow);
            pow = (pow as u64 * g as u64 % q as u64) as u32;
        }
        Self::finish(q, q, 1, exp)
    }

    fn extension_field(q: u32, p: u32, deg: u32, coeffs: &[u32]) -> FieldGF {
        // Multiply by x in the packed representation, reducing by the
        // relation x^deg = Σ coeffs[i]·x^i.
        let top = p.pow(deg - 1);
        let mul_x = |a: u32| -> u32 {
            let lead = a / top;
            let mut shifted = (a % top) * p;
            if lead != 0 {
                let mut mult = 1;
                for &c in coeffs.iter().take(deg as usize) {
                    let add = c * lead % p;
                    let digit = (shifted / mult % p + add) % p;
                    shifted = shifted - (shifted / mult % p) * mult + digit * mult;
                    mult *= p;
                }
            }
            shifted
        };
        let mut exp = Vec::new();
        let mut a = 1u32;
        loop {
            exp.push(a);
            a = mul_x(a);
            if a == 1 {
                break;
            }
            assert!(exp.len() < q as usize, "x is not primitive for GF({q})");
        }
        Self::finish(q, p, deg, exp)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add_table[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        // (p−1)·a, i.e. a added to itself p−2 more times.
        let mut x = a;
        for _ in 2..self.p {
            x = self.add(x, a);
        }
        x
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let m = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % m) as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let m = self.q - 1;
        self.exp[((m - self.log[a as usize]) % m) as usize]
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let m = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % m)) % m) as usize]
    }

    /// A fixed primitive element (generator of the multiplicative group).
    pub fn primitive(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    /// The involutory automorphism a ↦ a^√q of a square-order field.
    pub fn conj(&self, a: u32) -> u32 {
        debug_assert!(self.deg % 2 == 0, "need a square order");
        let q0 = self.p.pow(self.deg / 2) as u64;
        self.pow(a, q0)
    }

    /// Whether GF(q) has the index-2 subfield needed for unitary forms.
    pub fn has_conjugation(&self) -> bool {
        self.deg % 2 == 0
    }

    /// Norm map a ↦ a^{√q + 1} onto the subfield.
    pub fn norm(&self, a: u32) -> u32 {
        self.mul(a, self.conj(a))
    }

    /// Trace map a ↦ a + a^√q onto the subfield.
    pub fn trace_to_subfield(&self, a: u32) -> u32 {
        self.add(a, self.conj(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIZES: [u32; 11] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25];

    #[test]
    fn field_axioms_exhaustive() {
        for q in SIZES {
            let f = FieldGF::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_element_order() {
        for q in SIZES {
            let f = FieldGF::new(q).unwrap();
            let g = f.primitive();
            let mut seen = std::collections::HashSet::new();
            let mut x = 1;
            for _ in 0..q - 1 {
                assert!(seen.insert(x));
                x = f.mul(x, g);
            }
            assert_eq!(x, 1);
        }
    }

    #[test]
    fn conjugation_involution_and_automorphism() {
        for q in [4u32, 9, 16, 25] {
            let f = FieldGF::new(q).unwrap();
            assert!(f.has_conjugation());
            for a in f.elements() {
                assert_eq!(f.conj(f.conj(a)), a);
                // Norm and trace land in the subfield (fixed by conj).
                assert_eq!(f.conj(f.norm(a)), f.norm(a));
                assert_eq!(f.conj(f.trace_to_subfield(a)), f.trace_to_subfield(a));
                for b in f.elements() {
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                }
            }
            // The fixed subfield has exactly √q elements.
            let fixed = f.elements().filter(|&a| f.conj(a) == a).count() as u32;
            assert_eq!(fixed * fixed, q);
        }
    }

    #[test]
    fn characteristic_arithmetic() {
        let f = FieldGF::new(9).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(f.add(a, a), a), 0); // 3a = 0
        }
        let f = FieldGF::new(16).unwrap();
        for a in f.elements() {
            assert_eq!(f.add(a, a), 0);
            assert_eq!(f.neg(a), a);
        }
    }

    #[test]
    fn unsupported_size_rejected() {
        assert!(FieldGF::new(6).is_err());
        assert!(FieldGF::new(32).is_err());
    }
}
