//! Machine-generated root tables: each row restricts the derived constraint
//! system by the case conditions and renders what is left.

use serde::Serialize;

use crate::algebra::{Signature, TextStyle};
use crate::error::{Error, Result};
use crate::roots::RootCase::{self, *};
use crate::symbolic::{derive_constraints, form_label, render_poly, solve_for_square, ConstraintSystem};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub signature: Signature,
    /// Case name, or `none` for the `alpha != 0` branch.
    pub case: String,
    pub conditions: String,
    /// Nonzero grade > 0 forms after the case substitution, `label: poly = 0`.
    pub constraints: Vec<String>,
    pub root_equation: String,
    pub solution: String,
}

const B: [usize; 3] = [0b001, 0b010, 0b100];
const C: [usize; 3] = [0b011, 0b101, 0b110];
const BETA: usize = 0b111;
const PRIME: usize = 0b1000;

/// Coefficients the case sets to zero, by canonical mask.
fn zero_masks(case: RootCase) -> Vec<usize> {
    let primed = |ms: &[usize]| ms.iter().map(|m| m | PRIME).collect::<Vec<_>>();
    let mut z = vec![0];
    match case {
        N1_NEG | N2_A0 | N4_A0_APN0 => {}
        N3_A0B0 => z.push(BETA),
        N3_PSEUDO => z.extend(B.iter().chain(&C)),
        N4_Z_BP0_B0 => {
            z.extend([PRIME, BETA, BETA | PRIME]);
            z.extend(primed(&B));
        }
        N4_Z_BP0_BPN0 => {
            z.extend([PRIME, BETA]);
            z.extend(primed(&B));
        }
        N4_Z_BP0_BN0 => {
            z.push(PRIME);
            z.extend(primed(&B));
            z.extend(B.iter().chain(&C));
        }
        N4_Z_BPN0_B0_BE0 => {
            z.extend([PRIME, BETA, BETA | PRIME]);
            z.extend(B);
        }
        N4_Z_BPN0_B0_BEN0 => {
            z.extend([PRIME, BETA | PRIME]);
            z.extend(B);
        }
        N4_Z_BPN0_BN0_BE0 => z.extend([PRIME, BETA, BETA | PRIME]),
        N4_Z_BPN0_BN0_BEN0 => z.push(PRIME),
    }
    z
}

fn restricted(sys: &ConstraintSystem, zero: &[usize]) -> (String, Vec<String>, crate::symbolic::Quadratic) {
    let sig = sys.signature();
    let style = TextStyle::Cyclic;
    let mut masks: Vec<usize> = (1..sig.dim()).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let constraints = masks
        .into_iter()
        .filter_map(|m| {
            let (label, s) = form_label(sig, m, style);
            let p = sys.form(m).to_polynomial().restrict(|i| zero.contains(&i)).scaled(s);
            (!p.is_zero()).then(|| format!("{label}: {} = 0", render_poly(&p, sig, style)))
        })
        .collect();
    let root = sys.root_form().to_polynomial().restrict(|i| zero.contains(&i));
    (format!("{} = -1", render_poly(&root, sig, style)), constraints, root)
}

fn solution(case: RootCase, sig: Signature, root: &crate::symbolic::Quadratic) -> String {
    if !case.applies_to(sig) {
        return format!("no solution for {sig}");
    }
    match case {
        N1_NEG => format!("A = +-e1 for {sig}"),
        N2_A0 => solve_for_square(root, -1, BETA & 0b11, sig, TextStyle::Cyclic)
            .unwrap_or_else(|| case.relations().to_string()),
        N3_PSEUDO => format!("A = +-e123 for {sig}"),
        _ => case.relations().to_string(),
    }
}

/// Rows for every signature of dimension `n` (1..=4): each catalog case,
/// then the `alpha != 0` branch.
pub fn table_rows(n: usize) -> Result<Vec<TableRow>> {
    if !(1..=4).contains(&n) {
        return Err(Error::UnsupportedDimension { n, max: 4 });
    }
    let mut rows = Vec::new();
    for sig in Signature::all_of_dim(n)? {
        let sys = derive_constraints(sig);
        for case in RootCase::of_dim(n) {
            let (root_equation, constraints, root) = restricted(&sys, &zero_masks(case));
            rows.push(TableRow {
                n,
                signature: sig,
                case: case.name().to_string(),
                conditions: case.conditions().to_string(),
                constraints,
                root_equation,
                solution: solution(case, sig, &root),
            });
        }
        let (root_equation, constraints, _) = restricted(&sys, &[]);
        rows.push(TableRow {
            n,
            signature: sig,
            case: "none".into(),
            conditions: "alpha != 0".into(),
            constraints,
            root_equation,
            solution: "no solution".into(),
        });
    }
    Ok(rows)
}

pub fn table_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    let mut current = None;
    for r in rows {
        if current != Some(r.signature) {
            out.push_str(&format!("n = {}, {}\n", r.n, r.signature));
            current = Some(r.signature);
        }
        out.push_str(&format!("  {} [{}]\n", r.case, r.conditions));
        for c in &r.constraints {
            out.push_str(&format!("    constraint: {c}\n"));
        }
        out.push_str(&format!("    root equation: {}\n", r.root_equation));
        out.push_str(&format!("    solution: {}\n", r.solution));
    }
    out
}

pub fn table_csv(rows: &[TableRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    w.write_record(["n", "signature", "case", "conditions", "constraints", "root_equation", "solution"])
        .map_err(io)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.signature.to_string(),
            r.case.clone(),
            r.conditions.clone(),
            r.constraints.join("; "),
            r.root_equation.clone(),
            r.solution.clone(),
        ])
        .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("utf8"))
}
