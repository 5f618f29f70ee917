//! Sparse integer polynomials of degree <= 2 in the coefficient variables.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// Linear form `sum c_i x_i`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Linear(pub BTreeMap<usize, i64>);

impl Linear {
    pub fn var(i: usize) -> Self {
        Self::term(i, 1)
    }

    pub fn term(i: usize, c: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(i, c);
        }
        Linear(m)
    }

    pub fn scaled(&self, s: i64) -> Self {
        let mut out = Linear::default();
        for (&i, &c) in &self.0 {
            if c * s != 0 {
                out.0.insert(i, c * s);
            }
        }
        out
    }

    /// Product of two linear forms.
    pub fn times(&self, other: &Linear) -> Quadratic {
        let mut q = Quadratic::default();
        for (&i, &a) in &self.0 {
            for (&j, &b) in &other.0 {
                q.add_monomial(i, j, a * b);
            }
        }
        q
    }
}

impl Add for &Linear {
    type Output = Linear;
    fn add(self, rhs: &Linear) -> Linear {
        let mut out = self.clone();
        for (&i, &c) in &rhs.0 {
            let e = out.0.entry(i).or_insert(0);
            *e += c;
            if *e == 0 {
                out.0.remove(&i);
            }
        }
        out
    }
}

impl Sub for &Linear {
    type Output = Linear;
    fn sub(self, rhs: &Linear) -> Linear {
        self + &rhs.scaled(-1)
    }
}

/// `constant + sum_{i <= j} c_ij x_i x_j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Quadratic {
    pub terms: BTreeMap<(usize, usize), i64>,
    pub constant: i64,
}

impl Quadratic {
    pub fn constant(c: i64) -> Self {
        Self {
            terms: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn add_monomial(&mut self, i: usize, j: usize, c: i64) {
        let key = (i.min(j), i.max(j));
        let e = self.terms.entry(key).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn scaled(&self, s: i64) -> Self {
        let mut out = Quadratic::constant(self.constant * s);
        for (&(i, j), &c) in &self.terms {
            out.add_monomial(i, j, c * s);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant == 0
    }

    /// Substitute `x_i = 0` for every `i` with `zero(i)`.
    pub fn restrict(&self, zero: impl Fn(usize) -> bool) -> Self {
        let mut out = Quadratic::constant(self.constant);
        for (&(i, j), &c) in &self.terms {
            if !zero(i) && !zero(j) {
                out.add_monomial(i, j, c);
            }
        }
        out
    }

    /// Substitute `x_i -> sign(i) * x_i` with `sign(i)` in {-1, +1}.
    pub fn flip(&self, sign: impl Fn(usize) -> i64) -> Self {
        let mut out = Quadratic::constant(self.constant);
        for (&(i, j), &c) in &self.terms {
            out.add_monomial(i, j, c * sign(i) * sign(j));
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.constant as f64
            + self
                .terms
                .iter()
                .map(|(&(i, j), &c)| c as f64 * x[i] * x[j])
                .sum::<f64>()
    }
}

impl AddAssign<&Quadratic> for Quadratic {
    fn add_assign(&mut self, rhs: &Quadratic) {
        self.constant += rhs.constant;
        for (&(i, j), &c) in &rhs.terms {
            self.add_monomial(i, j, c);
        }
    }
}

impl Add for &Quadratic {
    type Output = Quadratic;
    fn add(self, rhs: &Quadratic) -> Quadratic {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Quadratic {
    type Output = Quadratic;
    fn add(mut self, rhs: Quadratic) -> Quadratic {
        self += &rhs;
        self
    }
}

impl Sub for Quadratic {
    type Output = Quadratic;
    fn sub(mut self, rhs: Quadratic) -> Quadratic {
        self += &rhs.scaled(-1);
        self
    }
}

impl Neg for Quadratic {
    type Output = Quadratic;
    fn neg(self) -> Quadratic {
        self.scaled(-1)
    }
}

impl Mul<i64> for Quadratic {
    type Output = Quadratic;
    fn mul(self, s: i64) -> Quadratic {
        self.scaled(s)
    }
}

impl Mul<i64> for &Quadratic {
    type Output = Quadratic;
    fn mul(self, s: i64) -> Quadratic {
        self.scaled(s)
    }
}
