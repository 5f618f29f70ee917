use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported dimension n = p + q.
pub const N_MAX: usize = 6;

/// Metric signature of a nondegenerate real Clifford algebra Cl(p,q).
///
/// Generators e_1..e_p square to +1, e_{p+1}..e_n square to -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        let n = p + q;
        if n == 0 || n > N_MAX {
            return Err(Error::InvalidSignature { p, q, max: N_MAX });
        }
        Ok(Self {
            p: p as u8,
            q: q as u8,
        })
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn q(self) -> usize {
        self.q as usize
    }

    pub fn n(self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of basis blades, 2^n.
    pub fn dim(self) -> usize {
        1 << self.n()
    }

    /// Square of generator `k` (1-based).
    pub fn epsilon(self, k: usize) -> i32 {
        debug_assert!(k >= 1 && k <= self.n());
        if k <= self.p() {
            1
        } else {
            -1
        }
    }

    /// Bitmask of generators squaring to -1.
    pub(crate) fn negative_mask(self) -> usize {
        ((1usize << self.q) - 1) << self.p
    }

    /// All signatures of dimension `n`, ordered by decreasing p.
    pub fn all_of_dim(n: usize) -> Result<Vec<Signature>> {
        (0..=n).rev().map(|p| Signature::new(p, n - p)).collect()
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

impl std::str::FromStr for Signature {
    type Err = Error;

    /// Parses `"p,q"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("signature must be 'p,q', got '{s}'"));
        let (p, q) = s.split_once(',').ok_or_else(bad)?;
        let p = p.trim().parse::<usize>().map_err(|_| bad())?;
        let q = q.trim().parse::<usize>().map_err(|_| bad())?;
        Signature::new(p, q)
    }
}

impl TryFrom<[usize; 2]> for Signature {
    type Error = Error;
    fn try_from(v: [usize; 2]) -> Result<Self> {
        Signature::new(v[0], v[1])
    }
}

impl From<Signature> for [usize; 2] {
    fn from(s: Signature) -> Self {
        [s.p(), s.q()]
    }
}
