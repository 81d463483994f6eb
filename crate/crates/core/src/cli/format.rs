//! Deterministic number formatting for emitted files.

/// Fixed 12-significant-digit scientific notation, e.g. `7.52252778064e-1`.
pub fn sci(v: f64) -> String {
    format!("{v:.11e}")
}

/// C-style `%.{precision}g`: shortest of fixed/scientific, trailing zeros
/// removed.
pub fn general(v: f64, precision: usize) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let precision = precision.max(1);
    let formatted = format!("{:.*e}", precision - 1, v);
    let (mantissa, exp) = formatted
        .split_once('e')
        .expect("scientific format has exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= precision as i32 {
        format!(
            "{}e{}{:02}",
            trim_zeros(mantissa),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    } else {
        let decimals = (precision as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
