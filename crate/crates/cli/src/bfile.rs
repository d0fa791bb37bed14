//! OEIS b-files: one `n a(n)` pair per line, ascending `n`.

use std::fmt::Write as _;

use chordcount_core::BigUint;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BfileError {
    #[error("line {line}: expected `n a(n)`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: index {n} does not follow {prev}")]
    NotAscending { line: usize, n: usize, prev: usize },
}

/// Emits `terms` as a b-file. Indices must be strictly ascending.
pub fn emit(terms: &[(usize, BigUint)]) -> String {
    let mut out = String::new();
    for (n, a) in terms {
        writeln!(out, "{n} {a}").unwrap();
    }
    out
}

/// Parses a b-file. Lines starting with `#` and blank lines are ignored.
pub fn parse(text: &str) -> Result<Vec<(usize, BigUint)>, BfileError> {
    let mut out: Vec<(usize, BigUint)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || BfileError::Malformed {
            line: i + 1,
            text: raw.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(n), Some(a), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let n: usize = n.parse().map_err(|_| malformed())?;
        let a: BigUint = a.parse().map_err(|_| malformed())?;
        if let Some(&(prev, _)) = out.last() {
            if n <= prev {
                return Err(BfileError::NotAscending {
                    line: i + 1,
                    n,
                    prev,
                });
            }
        }
        out.push((n, a));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_skips_comments() {
        let terms = parse("# A383733\n\n6 42\n7 0\n").unwrap();
        assert_eq!(
            terms,
            vec![(6, BigUint::from(42u32)), (7, BigUint::from(0u32))]
        );
        assert_eq!(emit(&terms), "6 42\n7 0\n");
    }

    #[test]
    fn parse_rejects_bad_lines() {
        assert!(matches!(
            parse("6 42 1\n"),
            Err(BfileError::Malformed { line: 1, .. })
        ));
        assert!(matches!(parse("6 -1\n"), Err(BfileError::Malformed { .. })));
        assert!(matches!(
            parse("7 0\n6 42\n"),
            Err(BfileError::NotAscending {
                line: 2,
                n: 6,
                prev: 7
            })
        ));
    }

    proptest! {
        #[test]
        fn round_trip(start in 0usize..100, values in prop::collection::vec(any::<u128>(), 0..40)) {
            let terms: Vec<(usize, BigUint)> = values
                .iter()
                .enumerate()
                .map(|(i, v)| (start + i, BigUint::from(*v) * BigUint::from(*v)))
                .collect();
            let text = emit(&terms);
            let parsed = parse(&text).unwrap();
            prop_assert_eq!(&parsed, &terms);
            prop_assert_eq!(emit(&parsed), text);
        }
    }
}
