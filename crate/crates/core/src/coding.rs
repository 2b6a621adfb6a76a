//! Elias gamma codes.

/// Length in bits of the gamma code of `n >= 1`.
pub fn gamma_len(n: u64) -> u32 {
    assert!(n >= 1, "gamma codes start at 1");
    2 * (63 - n.leading_zeros()) + 1
}

/// Gamma code of `n >= 1`: `floor(log2 n)` zeros, then `n` in binary.
pub fn gamma_encode(n: u64) -> String {
    assert!(n >= 1, "gamma codes start at 1");
    let binary = format!("{n:b}");
    format!("{}{binary}", "0".repeat(binary.len() - 1))
}

/// Decodes one gamma code from the front of `bits`, returning the value and
/// the remaining bits.
pub fn gamma_decode(bits: &str) -> Option<(u64, &str)> {
    let zeros = bits.bytes().take_while(|&b| b == b'0').count();
    let end = 2 * zeros + 1;
    if bits.len() < end {
        return None;
    }
    let n = u64::from_str_radix(&bits[zeros..end], 2).ok()?;
    Some((n, &bits[end..]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_codes() {
        assert_eq!(gamma_encode(1), "1");
        assert_eq!(gamma_encode(2), "010");
        assert_eq!(gamma_encode(5), "00101");
        assert_eq!(gamma_len(1), 1);
        assert_eq!(gamma_len(4), 5);
    }

    #[test]
    fn length_matches_encoding_and_round_trips() {
        for n in 1..2000u64 {
            let code = gamma_encode(n);
            assert_eq!(code.len() as u32, gamma_len(n));
            assert_eq!(gamma_decode(&code), Some((n, "")));
        }
    }
}
