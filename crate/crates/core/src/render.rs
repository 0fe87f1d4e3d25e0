//! Deterministic text rendering of floating-point values.
//!
//! All file formats and CLI output route numbers through [`format_f64`] so
//! that golden files are byte-stable: 12 significant digits, trailing zeros
//! trimmed, exact integers printed without a decimal point, `-0` normalized
//! to `0`.

/// Render `v` with up to 12 significant digits.
pub fn format_f64(v: f64) -> String {
    if v == 0.0 {
        // covers -0.0 as well
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{}", v);
    }
    if v.fract() == 0.0 && v.abs() < 1e12 {
        return format!("{}", v as i64);
    }
    let mag = v.abs().log10().floor() as i32;
    if !(-5..12).contains(&mag) {
        // very small or very large values go to scientific notation
        let s = format!("{:.11e}", v);
        return trim_exponential(&s);
    }
    let decimals = (11 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals, v);
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn trim_exponential(s: &str) -> String {
    match s.split_once('e') {
        Some((mantissa, exp)) => {
            let m = mantissa.trim_end_matches('0').trim_end_matches('.');
            format!("{}e{}", m, exp)
        }
        None => s.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_print_bare() {
        assert_eq!(format_f64(0.0), "0");
        assert_eq!(format_f64(-0.0), "0");
        assert_eq!(format_f64(1.0), "1");
        assert_eq!(format_f64(-3.0), "-3");
        assert_eq!(format_f64(250.0), "250");
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_f64(0.25), "0.25");
        assert_eq!(format_f64(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_f64(-1.0 / 3.0), "-0.333333333333");
        assert_eq!(format_f64(0.2), "0.2");
        assert_eq!(format_f64(1.0 / 5.0 + 2.0), "2.2");
    }

    #[test]
    fn tiny_values_use_scientific() {
        assert_eq!(format_f64(2.2e-16), "2.2e-16");
        assert_eq!(format_f64(-1.0e-12), "-1e-12");
    }

    #[test]
    fn negative_zero_rounding_normalized() {
        // a value that rounds to zero at 12 digits
        assert_eq!(format_f64(-1e-30), "-1e-30");
        assert_eq!(format_f64(-0.0000000000004), "-4e-13");
    }
}
