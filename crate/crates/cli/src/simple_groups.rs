//! Order data `(label, |S|, |Out(S)|)` for finite simple groups.

use indgen::arith::Factorizer;
use indgen::zsigmondy::{pi_star, SimpleGroupDatum};

use crate::CliError;

pub const BUNDLED: &str = include_str!("../data/simple_groups.txt");

/// Rows of whitespace-separated `label order out_order`; `#` comments.
pub fn parse_table(text: &str, factorizer: &Factorizer) -> Result<Vec<SimpleGroupDatum>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: &str| CliError::Format {
            path: "simple group table".into(),
            line: i + 1,
            message: message.into(),
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [label, order, out_order] = fields[..] else {
            return Err(bad("expected `label order out_order`"));
        };
        let order: u128 = order.parse().map_err(|_| bad("bad order"))?;
        let out_order: u64 = out_order.parse().map_err(|_| bad("bad outer automorphism order"))?;
        out.push(pi_star(label, order, out_order, factorizer)?);
    }
    Ok(out)
}

pub fn bundled(factorizer: &Factorizer) -> Vec<SimpleGroupDatum> {
    parse_table(BUNDLED, factorizer).expect("bundled table is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_rows() {
        let f = Factorizer::with_trial_bound(10_000);
        let rows = bundled(&f);
        let get = |l: &str| rows.iter().find(|r| r.label == l).unwrap();
        assert_eq!(get("A5").pi_star, [3, 5]);
        assert_eq!(get("A6").pi_star, [3, 5]);
        assert_eq!(get("PSL(3,4)").pi_star, [5, 7]);
        assert_eq!(get("PSL(2,8)").pi_star, [2, 7]);
        assert!(rows.iter().all(|r| r.has_two_pi_star_primes()));
        let three: Vec<&str> = rows.iter().filter(|r| r.pi.len() == 3).map(|r| r.label.as_str()).collect();
        assert_eq!(three.len(), 8);
    }

    #[test]
    fn malformed_rows() {
        let f = Factorizer::with_trial_bound(1000);
        assert!(parse_table("A5 60\n", &f).is_err());
        assert!(parse_table("A5 sixty 2\n", &f).is_err());
    }
}
