//! Human-readable constraint polynomials.
//!
//! Cyclic style names coefficients the way derivations by hand do:
//! `alpha`, `b1..b3`, `c1..c3` (on e23, e31, e12) and `beta` for the
//! part without e4, primed names for the e4 group in n = 4. Because
//! `e31 = -e13`, the variable `c2` is minus the canonical e13 coefficient;
//! rendering substitutes that sign. Canonical style uses `x0`, `x1`, `x13`, ...

use super::poly::Quadratic;
use super::system::{ConstraintSystem, QuadraticForm};
use crate::algebra::{styled_label, BasisBlade, Signature, TextStyle};

/// Name of the coefficient variable for `mask` and the sign `s` with
/// `x_mask = s * name`.
pub fn variable_name(sig: Signature, mask: usize, style: TextStyle) -> (String, i64) {
    if style == TextStyle::Canonical || sig.n() > 4 {
        let digits: String = BasisBlade(mask).generators().map(|k| k.to_string()).collect();
        return (format!("x{}", if digits.is_empty() { "0".into() } else { digits }), 1);
    }
    let (low, primed) = match sig.n() {
        4 => (mask & 0b111, mask & 0b1000 != 0),
        _ => (mask, false),
    };
    let (base, sign) = match (sig.n(), low) {
        (_, 0) => ("alpha", 1),
        (1, 1) => ("beta", 1),
        (2, 3) => ("beta", 1),
        (_, 1) => ("b1", 1),
        (_, 2) => ("b2", 1),
        (_, 4) => ("b3", 1),
        (_, 6) => ("c1", 1),
        (_, 5) => ("c2", -1),
        (_, 3) => ("c3", 1),
        _ => ("beta", 1),
    };
    let name = if primed { format!("{base}'") } else { base.to_string() };
    (name, sign)
}

/// Rank of a variable in rendered output: e4-free group first, then by grade,
/// then by index within the grade.
fn display_rank(sig: Signature, mask: usize, style: TextStyle) -> (usize, usize, usize) {
    if style == TextStyle::Canonical || sig.n() > 4 {
        return (0, mask.count_ones() as usize, mask);
    }
    let (low, group) = if sig.n() == 4 {
        (mask & 0b111, mask >> 3)
    } else {
        (mask, 0)
    };
    // index order b1 b2 b3, c1 c2 c3 over the masks 1 2 4 and 6 5 3
    let within = match low {
        1 | 6 => 0,
        2 | 5 => 1,
        4 | 3 => 2,
        _ => 0,
    };
    (group, low.count_ones() as usize, within)
}

/// Variable masks of `sig` in rendering order.
pub fn display_order(sig: Signature, style: TextStyle) -> Vec<usize> {
    let mut masks: Vec<usize> = (0..sig.dim()).collect();
    masks.sort_by_key(|&m| display_rank(sig, m, style));
    masks
}

/// Polynomial in named variables: substitutes the sign of every named
/// variable (`x_mask = s * name`).
pub fn to_named(poly: &Quadratic, sig: Signature, style: TextStyle) -> Quadratic {
    poly.flip(|m| variable_name(sig, m, style).1)
}

fn monomial(sig: Signature, style: TextStyle, i: usize, j: usize) -> String {
    let a = variable_name(sig, i, style).0;
    if i == j {
        format!("{a}^2")
    } else {
        let b = variable_name(sig, j, style).0;
        format!("{a}*{b}")
    }
}

/// Render a polynomial already expressed in named variables.
pub fn render_named(named: &Quadratic, sig: Signature, style: TextStyle) -> String {
    let rank = |m: usize| display_rank(sig, m, style);
    let mut terms: Vec<((usize, usize), i64)> = named
        .terms
        .iter()
        .map(|(&(i, j), &c)| {
            if rank(i) <= rank(j) {
                ((i, j), c)
            } else {
                ((j, i), c)
            }
        })
        .collect();
    terms.sort_by_key(|&((i, j), c)| (rank(i), rank(j), c));
    let mut parts: Vec<(i64, String)> = terms
        .into_iter()
        .map(|((i, j), c)| {
            let body = monomial(sig, style, i, j);
            let text = if c.abs() == 1 { body } else { format!("{}*{body}", c.abs()) };
            (c, text)
        })
        .collect();
    if named.constant != 0 {
        parts.push((named.constant, named.constant.abs().to_string()));
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (c, text)) in parts.into_iter().enumerate() {
        match (idx, c < 0) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    out
}

/// Render a polynomial in canonical coefficient variables.
pub fn render_poly(poly: &Quadratic, sig: Signature, style: TextStyle) -> String {
    render_named(&to_named(poly, sig, style), sig, style)
}

/// Label of output blade `mask` and the sign relating its form to the
/// canonical one (the e31 form is minus the e13 form).
pub fn form_label(sig: Signature, mask: usize, style: TextStyle) -> (String, i64) {
    let (label, s) = styled_label(sig, BasisBlade(mask), style);
    (label, s as i64)
}

/// Counts of positive and negative squares in a diagonal form.
pub fn quadric_signature(form: &QuadraticForm) -> (usize, usize) {
    let diag = (0..form.dim()).map(|i| form.get(i, i));
    let pos = diag.clone().filter(|&v| v > 0).count();
    (pos, diag.filter(|&v| v < 0).count())
}

/// Rewrite `poly = rhs` as `name^2 = ...` when `var` enters only through
/// `k var^2` with `k = +-1`.
pub fn solve_for_square(
    poly: &Quadratic,
    rhs: i64,
    var: usize,
    sig: Signature,
    style: TextStyle,
) -> Option<String> {
    let named = to_named(poly, sig, style);
    let k = *named.terms.get(&(var, var))?;
    if k.abs() != 1 || named.terms.keys().any(|&(i, j)| (i == var) != (j == var)) {
        return None;
    }
    // k v^2 + rest = rhs  =>  v^2 = k (rhs - rest)
    let mut rest = named.clone();
    rest.terms.remove(&(var, var));
    let mut solved = rest.scaled(-k);
    solved.constant += k * rhs;
    Some(format!(
        "{}^2 = {}",
        variable_name(sig, var, style).0,
        render_named(&solved, sig, style)
    ))
}

/// One line per output blade, `<label>: <polynomial> = <rhs>`, with the
/// scalar line carrying the root equation `... = -1`, followed by an
/// informational line giving the root quadric's square counts.
pub fn constraints_to_text(sys: &ConstraintSystem, style: TextStyle) -> String {
    let sig = sys.signature();
    let mut masks: Vec<usize> = (0..sig.dim()).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    let mut out = String::new();
    for m in masks {
        let (label, s) = form_label(sig, m, style);
        let poly = sys.form(m).to_polynomial().scaled(s);
        let rhs = if m == 0 { -1 } else { 0 };
        out.push_str(&format!("{label}: {} = {rhs}\n", render_poly(&poly, sig, style)));
    }
    let (pos, neg) = quadric_signature(sys.root_form());
    out.push_str(&format!("# root quadric: {pos} positive, {neg} negative squares\n"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::derive_constraints;

    fn sig(p: usize, q: usize) -> Signature {
        Signature::new(p, q).unwrap()
    }

    #[test]
    fn n1_lines() {
        let text = constraints_to_text(&derive_constraints(sig(1, 0)), TextStyle::Cyclic);
        assert!(text.contains("1: alpha^2 + beta^2 = -1"));
        assert!(text.contains("e1: 2*alpha*beta = 0"));
        let neg = constraints_to_text(&derive_constraints(sig(0, 1)), TextStyle::Cyclic);
        assert!(neg.contains("1: alpha^2 - beta^2 = -1"));
    }

    #[test]
    fn n3_trivector_in_cyclic_names() {
        let text = constraints_to_text(&derive_constraints(sig(3, 0)), TextStyle::Cyclic);
        assert!(text.contains("e123: 2*alpha*beta + 2*b1*c1 + 2*b2*c2 + 2*b3*c3 = 0"), "{text}");
        assert!(text.contains("# root quadric: 4 positive, 4 negative squares"));
    }

    #[test]
    fn canonical_names() {
        let text = constraints_to_text(&derive_constraints(sig(2, 0)), TextStyle::Canonical);
        assert!(text.contains("1: x0^2 + x1^2 + x2^2 - x12^2 = -1"), "{text}");
    }

    #[test]
    fn solved_form() {
        let s = sig(0, 2);
        let root = derive_constraints(s).root_form().to_polynomial().restrict(|m| m == 0);
        let solved = solve_for_square(&root, -1, 3, s, TextStyle::Cyclic).unwrap();
        assert_eq!(solved, "beta^2 = -b1^2 - b2^2 + 1");
    }

    #[test]
    fn zero_poly() {
        assert_eq!(render_poly(&Quadratic::default(), sig(1, 0), TextStyle::Cyclic), "0");
    }
}
