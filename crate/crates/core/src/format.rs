//! Deterministic text formatting shared by the CSV exporters.

/// Formats a float with 15 significant digits in scientific notation.
/// Non-finite values become `inf`, `-inf` or `nan`.
pub fn sig15(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else if x == 0.0 {
        // collapse -0.0 so output does not depend on the sign of zero
        "0".to_string()
    } else {
        format!("{:.14e}", x)
    }
}
