//! Basis blades as generator bitmasks and the per-signature product table.

use std::fmt;
use std::sync::{Arc, OnceLock};

use super::signature::{Signature, N_MAX};

/// A basis blade: bit k-1 set means generator e_k is a factor, in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisBlade(pub usize);

impl BasisBlade {
    pub const SCALAR: BasisBlade = BasisBlade(0);

    pub fn generator(k: usize) -> Self {
        BasisBlade(1 << (k - 1))
    }

    pub fn pseudoscalar(sig: Signature) -> Self {
        BasisBlade(sig.dim() - 1)
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Generator indices in ascending order.
    pub fn generators(self) -> impl Iterator<Item = usize> {
        (0..usize::BITS as usize)
            .filter(move |&b| self.0 >> b & 1 == 1)
            .map(|b| b + 1)
    }

    /// Canonical label, e.g. `"e13"`; the scalar blade is `"1"`.
    pub fn label(self) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let mut s = String::from("e");
        for k in self.generators() {
            s.push(char::from_digit(k as u32, 10).unwrap());
        }
        s
    }
}

impl fmt::Display for BasisBlade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Sign from reordering the concatenated factors of `a` then `b` into ascending order.
fn reorder_sign(a: usize, b: usize) -> i8 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Product of two basis blades: result mask and sign.
pub fn blade_product(a: BasisBlade, b: BasisBlade, sig: Signature) -> (BasisBlade, i8) {
    let mut sign = reorder_sign(a.0, b.0);
    if (a.0 & b.0 & sig.negative_mask()).count_ones() % 2 == 1 {
        sign = -sign;
    }
    (BasisBlade(a.0 ^ b.0), sign)
}

/// Multiplication table of the basis blades of one signature.
#[derive(Debug)]
pub struct StructureTensor {
    sig: Signature,
    signs: Vec<i8>,
}

impl StructureTensor {
    fn build(sig: Signature) -> Self {
        let dim = sig.dim();
        let mut signs = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                signs.push(blade_product(BasisBlade(a), BasisBlade(b), sig).1);
            }
        }
        Self { sig, signs }
    }

    /// Shared table for `sig`, built on first use.
    pub fn of(sig: Signature) -> Arc<StructureTensor> {
        static CACHE: [OnceLock<Arc<StructureTensor>>; (N_MAX + 1) * (N_MAX + 1)] =
            [const { OnceLock::new() }; (N_MAX + 1) * (N_MAX + 1)];
        CACHE[sig.p() * (N_MAX + 1) + sig.q()]
            .get_or_init(|| Arc::new(StructureTensor::build(sig)))
            .clone()
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Sign of e_a e_b; the result blade is always `a ^ b`.
    #[inline]
    pub fn sign(&self, a: usize, b: usize) -> i8 {
        self.signs[(a << self.sig.n()) | b]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn generator_square_negative() {
        let e1 = BasisBlade::generator(1);
        assert_eq!(blade_product(e1, e1, sig(0, 1)), (BasisBlade::SCALAR, -1));
    }

    #[test]
    fn ordered_product_has_no_sign() {
        let (m, s) = blade_product(BasisBlade(0b01), BasisBlade(0b10), sig(2, 0));
        assert_eq!((m, s), (BasisBlade(0b11), 1));
        let (_, s) = blade_product(BasisBlade(0b10), BasisBlade(0b01), sig(2, 0));
        assert_eq!(s, -1);
    }

    #[test]
    fn bivector_square_is_minus_eps1_eps2() {
        for (p, q) in [(2, 0), (1, 1), (0, 2), (3, 1)] {
            let s = sig(p, q);
            let expect = -(s.epsilon(1) * s.epsilon(2)) as i8;
            assert_eq!(blade_product(BasisBlade(0b11), BasisBlade(0b11), s).1, expect);
        }
    }

    #[test]
    fn scalar_row_and_column_are_positive() {
        let t = StructureTensor::of(sig(2, 3));
        for m in 0..32 {
            assert_eq!(t.sign(0, m), 1);
            assert_eq!(t.sign(m, 0), 1);
        }
    }

    #[test]
    fn labels() {
        assert_eq!(BasisBlade(0).label(), "1");
        assert_eq!(BasisBlade(0b1101).label(), "e134");
        assert_eq!(BasisBlade(0b1101).grade(), 3);
    }
}
