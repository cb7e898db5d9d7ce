//! Decimal rendering of big floats.

use rug::Float;

/// Renders `x` in positional notation with `sig` significant digits.
pub fn to_fixed(x: &Float, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let (neg, digits, exp) = x.to_sign_string_exp(10, Some(sig.max(1)));
    let exp = exp.expect("finite nonzero value has an exponent");
    let mut out = String::with_capacity(sig + 8);
    if neg {
        out.push('-');
    }
    if exp <= 0 {
        out.push_str("0.");
        out.extend(std::iter::repeat_n('0', (-exp) as usize));
        out.push_str(&digits);
    } else {
        let exp = exp as usize;
        if exp >= digits.len() {
            out.push_str(&digits);
            out.extend(std::iter::repeat_n('0', exp - digits.len()));
        } else {
            out.push_str(&digits[..exp]);
            out.push('.');
            out.push_str(&digits[exp..]);
        }
    }
    out
}

/// Scientific notation with `sig` significant digits, e.g. `1.25e-40`.
pub fn to_sci(x: &Float, sig: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let (neg, digits, exp) = x.to_sign_string_exp(10, Some(sig.max(1)));
    let exp = exp.unwrap_or(0) - 1;
    let sign = if neg { "-" } else { "" };
    if digits.len() == 1 {
        format!("{sign}{digits}e{exp}")
    } else {
        format!("{sign}{}.{}e{exp}", &digits[..1], &digits[1..])
    }
}
