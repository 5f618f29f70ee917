use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Named real parameters of a root family, e.g. `b1`, `beta_p`, `sigma`.
///
/// Vector-valued parameters are stored componentwise with a 1-based suffix
/// (`bp1`, `bp2`, `bp3`). Serializes as a JSON object in key order.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FamilyParams(BTreeMap<String, f64>);

impl FamilyParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: f64) -> Self {
        self.set(name, value);
        self
    }

    pub fn with_vec3(mut self, prefix: &str, v: [f64; 3]) -> Self {
        self.set_vec3(prefix, v);
        self
    }

    pub fn set(&mut self, name: &str, value: f64) {
        self.0.insert(name.to_string(), value);
    }

    pub fn set_vec3(&mut self, prefix: &str, v: [f64; 3]) {
        for (k, x) in v.into_iter().enumerate() {
            self.set(&format!("{prefix}{}", k + 1), x);
        }
    }

    pub fn get(&self, name: &str) -> Result<f64> {
        let v = *self
            .0
            .get(name)
            .ok_or_else(|| Error::MissingParam(name.to_string()))?;
        if !v.is_finite() {
            return Err(Error::InvalidArgument(format!("parameter {name} = {v}")));
        }
        Ok(v)
    }

    pub fn vec3(&self, prefix: &str) -> Result<[f64; 3]> {
        Ok([
            self.get(&format!("{prefix}1"))?,
            self.get(&format!("{prefix}2"))?,
            self.get(&format!("{prefix}3"))?,
        ])
    }

    /// A sign parameter: must be +1 or -1.
    pub fn sign(&self, name: &str) -> Result<f64> {
        let s = self.get(name)?;
        if s == 1.0 || s == -1.0 {
            Ok(s)
        } else {
            Err(Error::InvalidArgument(format!("{name} must be +1 or -1, got {s}")))
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, f64)> {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
