use std::fs;

use primegraph::gen::corpus;
use primegraph::SquarefreeIdeal;

use crate::failure::Failure;

/// Loads an ideal from a JSON file or a `corpus:NAME` pseudo-path.
pub fn load_ideal(source: &str) -> Result<SquarefreeIdeal, Failure> {
    if let Some(name) = source.strip_prefix("corpus:") {
        return corpus(name).map_err(Failure::from);
    }
    let text = fs::read_to_string(source).map_err(|e| Failure::Input(format!("cannot read {source}: {e}")))?;
    SquarefreeIdeal::parse_json(&text).map_err(|e| Failure::Input(format!("{source}: {e}")))
}

/// Parses an edge list such as `"23"`, `"12,34"` or `"1-10 2-3"`.
pub fn parse_edges(text: &str) -> Result<Vec<(usize, usize)>, Failure> {
    let bad = |tok: &str| Failure::Input(format!("cannot read edge `{tok}`; use `23` or `2-3`"));
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| {
            let (a, b) = match tok.split_once('-') {
                Some((a, b)) => (a.parse().map_err(|_| bad(tok))?, b.parse().map_err(|_| bad(tok))?),
                None if tok.len() == 2 && tok.bytes().all(|b| b.is_ascii_digit()) => {
                    let d: Vec<usize> = tok.bytes().map(|b| (b - b'0') as usize).collect();
                    (d[0], d[1])
                }
                None => return Err(bad(tok)),
            };
            if a == b || a == 0 || b == 0 {
                return Err(bad(tok));
            }
            Ok((a.min(b), a.max(b)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_syntax() {
        assert_eq!(parse_edges("23").unwrap(), vec![(2, 3)]);
        assert_eq!(parse_edges("32, 14").unwrap(), vec![(2, 3), (1, 4)]);
        assert_eq!(parse_edges("1-10 2-3").unwrap(), vec![(1, 10), (2, 3)]);
        assert_eq!(parse_edges("").unwrap(), vec![]);
        assert!(parse_edges("22").is_err());
        assert!(parse_edges("123").is_err());
    }

    #[test]
    fn corpus_and_missing_files() {
        assert_eq!(load_ideal("corpus:vechi").unwrap().s(), 5);
        assert!(matches!(load_ideal("corpus:none"), Err(Failure::Input(_))));
        assert!(matches!(load_ideal("/nonexistent/ideal.json"), Err(Failure::Input(_))));
    }
}
