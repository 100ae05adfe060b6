//! Overflow-safe scalar nonlinearities and small numeric helpers.

/// Logistic sigmoid, stable for the whole f64 range.
///
/// Evaluates `exp` only on non-positive arguments so neither branch can
/// overflow. Stays strictly inside (0, 1) for |x| up to ~708.
pub fn sigmoid(x: f64) -> f64 {
    if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    }
}

/// softplus(x) = ln(1 + e^x), computed as max(x, 0) + ln_1p(e^-|x|).
pub fn softplus(x: f64) -> f64 {
    x.max(0.0) + (-x.abs()).exp().ln_1p()
}

/// Derivative of the context activation given the activated value.
pub fn tanh_deriv_from_value(u: f64) -> f64 {
    1.0 - u * u
}

pub fn sigmoid_deriv_from_value(u: f64) -> f64 {
    u * (1.0 - u)
}

/// Cosine similarity of two flat slices.
pub fn cosine_similarity(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb: f64 = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        0.0
    } else {
        dot / (na * nb)
    }
}

/// Relative error with a floor on the denominator so near-zero pairs
/// compare absolutely.
pub fn relative_error(a: f64, b: f64, floor: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs()).max(floor)
}
