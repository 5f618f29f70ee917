use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::Signature;
use crate::error::{Error, Result};

/// Root families of `A^2 = -1` for n <= 4.
///
/// The n = 4 names encode the vanishing pattern of the split
/// `A = X + X' e4` with `X = alpha + b + c + beta e123` and
/// `X' = alpha' + b' + c' + beta' e123`: `Z` is `alpha = alpha' = 0`,
/// `BP0`/`BPN0` is `b' = 0`/`b' != 0`, then `B0`/`BN0` for `beta` (or `b`),
/// and `BE0`/`BEN0` for `beta` when both `b` and `b'` are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[allow(non_camel_case_types)]
pub enum RootCase {
    /// Cl(0,1): `A = +-e1`.
    N1_NEG,
    /// n = 2, `alpha = 0`.
    N2_A0,
    /// n = 3, `alpha = beta = 0`.
    N3_A0B0,
    /// n = 3, `A = +-e123` where `e123^2 = -1`.
    N3_PSEUDO,
    /// `alpha = 0`, `alpha' != 0`.
    N4_A0_APN0,
    /// `alpha = alpha' = 0`, `b' = 0`, `beta = beta' = 0`.
    N4_Z_BP0_B0,
    /// `alpha = alpha' = 0`, `b' = 0`, `beta = 0`, `beta' != 0`.
    N4_Z_BP0_BPN0,
    /// `alpha = alpha' = 0`, `b' = 0`, `beta != 0`.
    N4_Z_BP0_BN0,
    /// `alpha = alpha' = 0`, `b' != 0`, `b = 0`, `beta = 0`.
    N4_Z_BPN0_B0_BE0,
    /// `alpha = alpha' = 0`, `b' != 0`, `b = 0`, `beta != 0`.
    N4_Z_BPN0_B0_BEN0,
    /// `alpha = alpha' = 0`, `b' != 0`, `b != 0`, `beta = 0`, `b' = gamma b`.
    N4_Z_BPN0_BN0_BE0,
    /// `alpha = alpha' = 0`, `b' != 0`, `b != 0`, `beta != 0`, `b' = eps4 (beta/beta') b`.
    N4_Z_BPN0_BN0_BEN0,
}

use RootCase::*;

impl RootCase {
    pub const ALL: [RootCase; 12] = [
        N1_NEG,
        N2_A0,
        N3_A0B0,
        N3_PSEUDO,
        N4_A0_APN0,
        N4_Z_BP0_B0,
        N4_Z_BP0_BPN0,
        N4_Z_BP0_BN0,
        N4_Z_BPN0_B0_BE0,
        N4_Z_BPN0_B0_BEN0,
        N4_Z_BPN0_BN0_BE0,
        N4_Z_BPN0_BN0_BEN0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            N1_NEG => "N1_NEG",
            N2_A0 => "N2_A0",
            N3_A0B0 => "N3_A0B0",
            N3_PSEUDO => "N3_PSEUDO",
            N4_A0_APN0 => "N4_A0_APN0",
            N4_Z_BP0_B0 => "N4_Z_BP0_B0",
            N4_Z_BP0_BPN0 => "N4_Z_BP0_BPN0",
            N4_Z_BP0_BN0 => "N4_Z_BP0_BN0",
            N4_Z_BPN0_B0_BE0 => "N4_Z_BPN0_B0_BE0",
            N4_Z_BPN0_B0_BEN0 => "N4_Z_BPN0_B0_BEN0",
            N4_Z_BPN0_BN0_BE0 => "N4_Z_BPN0_BN0_BE0",
            N4_Z_BPN0_BN0_BEN0 => "N4_Z_BPN0_BN0_BEN0",
        }
    }

    /// Dimension n the family lives in.
    pub fn n(self) -> usize {
        match self {
            N1_NEG => 1,
            N2_A0 => 2,
            N3_A0B0 | N3_PSEUDO => 3,
            _ => 4,
        }
    }

    /// Whether the family has members in `sig`.
    pub fn applies_to(self, sig: Signature) -> bool {
        if sig.n() != self.n() {
            return false;
        }
        let eps = |k| sig.epsilon(k);
        match self {
            N1_NEG => sig.q() == 1,
            N3_PSEUDO => eps(1) * eps(2) * eps(3) == 1,
            N4_Z_BP0_BN0 => sig.p() > 0,
            _ => true,
        }
    }

    pub fn ensure_applies(self, sig: Signature) -> Result<()> {
        if self.applies_to(sig) {
            Ok(())
        } else {
            Err(Error::CaseNotApplicable {
                case: self.name().to_string(),
                sig,
            })
        }
    }

    /// Cases of dimension n in catalog order.
    pub fn of_dim(n: usize) -> impl Iterator<Item = RootCase> {
        Self::ALL.into_iter().filter(move |c| c.n() == n)
    }

    /// Vanishing conditions defining the case.
    pub fn conditions(self) -> &'static str {
        match self {
            N1_NEG => "alpha = 0",
            N2_A0 => "alpha = 0",
            N3_A0B0 => "alpha = 0, beta = 0",
            N3_PSEUDO => "alpha = 0, beta != 0",
            N4_A0_APN0 => "alpha = 0, alpha' != 0",
            N4_Z_BP0_B0 => "alpha = alpha' = 0, b' = 0, beta = beta' = 0",
            N4_Z_BP0_BPN0 => "alpha = alpha' = 0, b' = 0, beta = 0, beta' != 0",
            N4_Z_BP0_BN0 => "alpha = alpha' = 0, b' = 0, beta != 0",
            N4_Z_BPN0_B0_BE0 => "alpha = alpha' = 0, b' != 0, b = 0, beta = 0",
            N4_Z_BPN0_B0_BEN0 => "alpha = alpha' = 0, b' != 0, b = 0, beta != 0",
            N4_Z_BPN0_BN0_BE0 => "alpha = alpha' = 0, b' != 0, b != 0, beta = 0",
            N4_Z_BPN0_BN0_BEN0 => "alpha = alpha' = 0, b' != 0, b != 0, beta != 0",
        }
    }

    /// Relations fixing the dependent quantities.
    pub fn relations(self) -> &'static str {
        match self {
            N1_NEG => "A = sigma e1",
            N2_A0 => "beta from the root equation, sign sigma",
            N3_A0B0 => "b ^ c = 0, |c| from the root equation",
            N3_PSEUDO => "A = sigma e123, b = c = 0",
            N4_A0_APN0 => "c = (1/alpha') b' ^ b, c' = (1/alpha') (beta' b' - eps4 beta b) e123",
            N4_Z_BP0_B0 => "c . c' = 0, b . c' = 0, b ^ c = 0",
            N4_Z_BP0_BPN0 => "c = -(1/beta') (b . c') e123^-1",
            N4_Z_BP0_BN0 => "b = 0, c = 0",
            N4_Z_BPN0_B0_BE0 => "beta' = 0, c . c' = 0, b' . c' = 0, b' ^ c = 0",
            N4_Z_BPN0_B0_BEN0 => "beta' = 0, c = -(eps4/beta) (b' . c') e123^-1",
            N4_Z_BPN0_BN0_BE0 => {
                "beta' = 0, b' = gamma b, c . c' = 0, b ^ c = 0, b . c' = 0"
            }
            N4_Z_BPN0_BN0_BEN0 => {
                "beta' != 0, b' = eps4 (beta/beta') b, c = -(1/beta') (b . c') e123^-1"
            }
        }
    }
}

impl fmt::Display for RootCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RootCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown case '{s}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn pseudoscalar_gate() {
        let admitted: Vec<_> = Signature::all_of_dim(3)
            .unwrap()
            .into_iter()
            .filter(|&s| N3_PSEUDO.applies_to(s))
            .collect();
        assert_eq!(admitted, vec![sig(3, 0), sig(1, 2)]);
    }

    #[test]
    fn names_roundtrip() {
        for c in RootCase::ALL {
            assert_eq!(c.name().parse::<RootCase>().unwrap(), c);
        }
        assert!("N5".parse::<RootCase>().is_err());
    }

    #[test]
    fn n1_only_negative() {
        assert!(N1_NEG.applies_to(sig(0, 1)));
        assert!(!N1_NEG.applies_to(sig(1, 0)));
        assert!(!N1_NEG.applies_to(sig(0, 2)));
    }
}
