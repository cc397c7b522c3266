//! Parsers for field elements and polynomials given on the command line.

use rrcodes::{Field, FieldElement, Polynomial};

fn digits(s: &str, m: usize) -> Result<Vec<u64>, String> {
    let mut out = s
        .split(':')
        .map(|d| {
            d.trim()
                .parse::<u64>()
                .map_err(|e| format!("bad digit {d:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if out.len() > m {
        return Err(format!(
            "{s:?} has {} digits, field degree is {m}",
            out.len()
        ));
    }
    out.resize(m, 0);
    Ok(out)
}

/// A single element: a negative integer (so `-1` is the additive inverse of
/// one), or digits constant term first, separated by `:` or `,`.
pub fn element(spec: &Field, s: &str) -> Result<FieldElement, String> {
    let s = s.trim();
    if let Ok(v) = s.parse::<i64>() {
        if v < 0 {
            return Ok(spec.from_int(v));
        }
    }
    let d = digits(&s.replace(',', ":"), spec.m())?;
    spec.element(&d).map_err(|e| e.to_string())
}

/// Coefficients constant term first, separated by `,`; within a
/// coefficient, digits are separated by `:`.
pub fn polynomial(spec: &Field, s: &str) -> Result<Polynomial, String> {
    let coeffs = s
        .split(',')
        .map(|c| {
            spec.element(&digits(c, spec.m())?)
                .map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()?;
    Polynomial::new(spec, coeffs).map_err(|e| e.to_string())
}
