use std::fmt;
use std::str::FromStr;

/// Comma-separated primes and inclusive ranges: `13`, `7,13,31`, `3..200`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeList(pub Vec<u64>);

impl FromStr for PrimeList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let num = |t: &str| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("bad number {t:?} in {s:?}"))
            };
            match part.split_once("..") {
                Some((lo, hi)) => {
                    let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
                    if lo > hi {
                        return Err(format!("empty range {part:?}"));
                    }
                    out.extend((lo..=hi).filter(|&n| heisplit_core::arith::is_prime(n)));
                }
                None => out.push(num(part)?),
            }
        }
        if out.is_empty() {
            return Err(format!("no values in {s:?}"));
        }
        out.sort_unstable();
        out.dedup();
        Ok(PrimeList(out))
    }
}

impl fmt::Display for PrimeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}
