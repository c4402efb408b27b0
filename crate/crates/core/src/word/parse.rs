//! The textual word grammar shared by every engine:
//!
//! ```text
//! word := "1" | term ("*" term)*
//! term := name ("^" signed-int)?
//! name := [A-Za-z][A-Za-z0-9_]*
//! ```

use crate::error::ParseError;

/// A term as written, before any alphabet lookup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawSyllable {
    pub name: String,
    pub exp: i64,
    /// 1-based column where the name starts.
    pub column: usize,
}

pub fn is_valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Tokenizes a word. Leading and trailing whitespace is ignored; anything
/// else outside the grammar is rejected with its column.
pub fn parse_syllables(text: &str) -> Result<Vec<RawSyllable>, ParseError> {
    let offset = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(ParseError::new(
            offset + 1,
            "",
            "empty word (use `1` for the identity)",
        ));
    }
    if body == "1" {
        return Ok(Vec::new());
    }
    let bytes = body.as_bytes();
    let mut pos = 0usize;
    let mut out = Vec::new();
    let col = |p: usize| offset + p + 1;
    let token_at = |p: usize| -> String {
        body[p..]
            .chars()
            .take_while(|c| *c != '*')
            .collect::<String>()
    };

    loop {
        let start = pos;
        if pos >= bytes.len() || !bytes[pos].is_ascii_alphabetic() {
            let tok = if pos < bytes.len() {
                token_at(pos)
            } else {
                String::new()
            };
            return Err(ParseError::new(col(pos), tok, "expected generator name"));
        }
        pos += 1;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        let name = body[start..pos].to_string();
        let mut exp = 1i64;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let num_start = pos;
            if pos < bytes.len() && bytes[pos] == b'-' {
                pos += 1;
            }
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits_start {
                let tok = if num_start < bytes.len() {
                    token_at(num_start)
                } else {
                    String::new()
                };
                return Err(ParseError::new(
                    col(num_start),
                    tok,
                    "expected integer exponent",
                ));
            }
            exp = body[num_start..pos].parse::<i64>().map_err(|_| {
                ParseError::new(
                    col(num_start),
                    &body[num_start..pos],
                    "exponent out of range",
                )
            })?;
        }
        out.push(RawSyllable {
            name,
            exp,
            column: col(start),
        });
        if pos == bytes.len() {
            return Ok(out);
        }
        if bytes[pos] != b'*' {
            return Err(ParseError::new(
                col(pos),
                token_at(pos),
                "expected `*` or end of word",
            ));
        }
        pos += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_terms() {
        assert!(parse_syllables("1").unwrap().is_empty());
        let s = parse_syllables("a^-1*x^2").unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!((s[0].name.as_str(), s[0].exp, s[0].column), ("a", -1, 1));
        assert_eq!((s[1].name.as_str(), s[1].exp, s[1].column), ("x", 2, 6));
        let s = parse_syllables("al*be*al*be^-1").unwrap();
        assert_eq!(
            s.iter().map(|t| t.exp).collect::<Vec<_>>(),
            vec![1, 1, 1, -1]
        );
    }

    #[test]
    fn rejects_malformed() {
        let e = parse_syllables("x**y").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_syllables("x^").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_syllables("x y").unwrap_err();
        assert_eq!(e.column, 2);
        assert!(parse_syllables("").is_err());
        assert!(parse_syllables("2x").is_err());
        assert!(parse_syllables("x*1").is_err());
        assert!(parse_syllables("x^99999999999999999999").is_err());
    }

    #[test]
    fn names() {
        assert!(is_valid_name("r11"));
        assert!(is_valid_name("B_12"));
        assert!(!is_valid_name("1x"));
        assert!(!is_valid_name(""));
        assert!(!is_valid_name("x-y"));
    }
}
