use serde::{Deserialize, Serialize};

use super::case::RootCase;
use super::params::FamilyParams;
use super::verify::verify;
use crate::algebra::{BasisBlade, Multivector, Signature};
use crate::error::{Error, Result};

/// Serialized root: `{"signature", "coeffs", "residual", "case", "params"}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootRecord {
    pub signature: Signature,
    pub coeffs: Vec<f64>,
    pub residual: f64,
    pub case: Option<RootCase>,
    #[serde(default)]
    pub params: FamilyParams,
}

impl RootRecord {
    pub fn new(a: &Multivector, case: Option<RootCase>, params: FamilyParams) -> Self {
        Self {
            signature: a.signature(),
            coeffs: a.coeffs().to_vec(),
            residual: verify(a, 0.0).residual_norm,
            case,
            params,
        }
    }

    pub fn multivector(&self) -> Result<Multivector> {
        Multivector::from_coeffs(self.signature, self.coeffs.clone())
    }
}

/// Accepts one record or an array of records.
pub fn records_from_json(text: &str) -> Result<Vec<RootRecord>> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("bad root JSON: {e}")))?;
    let parse = |v: serde_json::Value| {
        serde_json::from_value::<RootRecord>(v).map_err(|e| Error::InvalidArgument(format!("bad root record: {e}")))
    };
    match value {
        serde_json::Value::Array(items) => items.into_iter().map(parse).collect(),
        v => Ok(vec![parse(v)?]),
    }
}

/// CSV with columns signature, case, one per canonical blade, residual.
pub fn records_to_csv(sig: Signature, records: &[RootRecord]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["signature".to_string(), "case".to_string()];
    header.extend((0..sig.dim()).map(|m| BasisBlade(m).label()));
    header.push("residual".into());
    let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    w.write_record(&header).map_err(io)?;
    for r in records {
        if r.signature != sig {
            return Err(Error::SignatureMismatch(sig, r.signature));
        }
        let mut row = vec![r.signature.to_string(), r.case.map_or(String::new(), |c| c.to_string())];
        row.extend(r.coeffs.iter().map(|x| x.to_string()));
        row.push(r.residual.to_string());
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf8"))
}
