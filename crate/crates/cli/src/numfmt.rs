//! Number formatting for machine-readable output.

/// 17-significant-digit scientific form; round-trips every f64 exactly and
/// is byte-stable across runs.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// 6-significant-digit form for human-readable summaries.
pub fn fmt_human(v: f64) -> String {
    format!("{v:.5e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_format_round_trips() {
        for v in [0.1, 1.0, 32.0, -2.5e-7, 6.62607015e-27, std::f64::consts::PI] {
            let parsed: f64 = fmt_f64(v).parse().unwrap();
            assert_eq!(parsed.to_bits(), v.to_bits(), "{v} -> {}", fmt_f64(v));
        }
    }

    #[test]
    fn machine_format_has_17_significant_digits() {
        let s = fmt_f64(1.0 / 3.0);
        let mantissa = s.split('e').next().unwrap().replace(['-', '.'], "");
        assert_eq!(mantissa.len(), 17, "{s}");
    }
}
