//! Parsing group elements from text, guided by the shape of the target
//! group's identity. Accepted forms mirror the element display:
//! permutations `(1 2)(3 4)` or `()`, projective matrices `[a b; c d]`,
//! field tuples `(x,y)`, semidirect pairs `<k|c>`.

use std::sync::Arc;

use pgx_core::{Group, GroupElement, Permutation};

/// Splits on `sep` at bracket depth zero, trimming each piece and dropping
/// empty ones.
pub fn split_top(text: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' | '[' | '<' => depth += 1,
            ')' | ']' | '>' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(text[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out.retain(|s| !s.is_empty());
    out
}

fn numbers(text: &str, seps: &[char]) -> Result<Vec<u32>, String> {
    text.split(|c: char| c.is_whitespace() || seps.contains(&c))
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("'{s}' is not a number")))
        .collect()
}

fn inner(text: &str, open: char, close: char) -> Result<&str, String> {
    text.strip_prefix(open)
        .and_then(|t| t.strip_suffix(close))
        .ok_or_else(|| format!("expected {open}...{close}, got '{text}'"))
}

fn parse_shaped(text: &str, shape: &GroupElement) -> Result<GroupElement, String> {
    let text = text.trim();
    match shape {
        GroupElement::Permutation(id) => {
            let degree = id.degree();
            let mut cycles = Vec::new();
            let mut rest = text;
            while !rest.is_empty() {
                let end = rest.find(')').ok_or("unclosed cycle")?;
                let body = inner(&rest[..=end], '(', ')')?;
                let pts = numbers(body, &[])?;
                if pts.len() > 1 {
                    cycles.push(pts);
                }
                rest = rest[end + 1..].trim_start();
            }
            Permutation::from_cycles(degree, &cycles)
                .map(GroupElement::Permutation)
                .map_err(|e| e.to_string())
        }
        GroupElement::ProjMat(_) => {
            let v = numbers(inner(text, '[', ']')?, &[';', ','])?;
            let m: [u32; 4] = v
                .try_into()
                .map_err(|_| "a matrix needs four entries".to_string())?;
            Ok(GroupElement::ProjMat(m))
        }
        GroupElement::DirectPair(id) => {
            let v = numbers(inner(text, '(', ')')?, &[','])?;
            if v.len() != id.len() {
                return Err(format!(
                    "expected {} coordinates, got {}",
                    id.len(),
                    v.len()
                ));
            }
            Ok(GroupElement::DirectPair(v))
        }
        GroupElement::SemidirectPair(k, c) => {
            let parts = split_top(inner(text, '<', '>')?, '|');
            let [kt, ct] = parts[..] else {
                return Err(format!("expected <kernel|complement>, got '{text}'"));
            };
            Ok(GroupElement::pair(
                parse_shaped(kt, k)?,
                parse_shaped(ct, c)?,
            ))
        }
    }
}

/// Parses one element and checks membership in `g`.
pub fn parse_element(g: &Group, text: &str) -> Result<GroupElement, String> {
    let x = parse_shaped(text, &g.identity())?;
    match g.contains(&x) {
        Ok(true) => Ok(x),
        Ok(false) => Err(format!("{x} is not an element of {}", g.name())),
        Err(e) => Err(e.to_string()),
    }
}

/// Parses a comma-separated generator list and returns the subgroup it
/// generates.
pub fn parse_subgroup(g: &Arc<Group>, name: &str, text: &str) -> Result<Arc<Group>, String> {
    let gens = split_top(text, ',')
        .into_iter()
        .map(|t| parse_element(g, t))
        .collect::<Result<Vec<_>, _>>()?;
    g.subgroup_generated(name, &gens).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use pgx_core::constructions;

    #[test]
    fn top_level_split() {
        assert_eq!(split_top("(1 2),(3 4)", ','), vec!["(1 2)", "(3 4)"]);
        assert_eq!(
            split_top("<(0,1)|(1,2)>, <(0,0)|(1,1)>", ','),
            vec!["<(0,1)|(1,2)>", "<(0,0)|(1,1)>"]
        );
        assert_eq!(
            split_top("[1 0; 0 2];[0 1; 1 0]", ';'),
            vec!["[1 0; 0 2]", "[0 1; 1 0]"]
        );
        assert!(split_top("  ", ',').is_empty());
    }

    #[test]
    fn elements_round_trip_through_display() {
        for g in [
            constructions::symmetric(4).unwrap(),
            constructions::pgl2(9).unwrap(),
            constructions::paper_g2().unwrap(),
            constructions::paper_g3().unwrap(),
        ] {
            for x in g.elements().unwrap().iter().step_by(7) {
                assert_eq!(&parse_element(&g, &x.to_string()).unwrap(), x);
            }
        }
    }

    #[test]
    fn rejects_foreign_and_malformed() {
        let a4 = constructions::alternating(4).unwrap();
        assert!(parse_element(&a4, "(1 2)")
            .unwrap_err()
            .contains("not an element"));
        assert!(parse_element(&a4, "(1 2").is_err());
        let g = constructions::pgl2(5).unwrap();
        assert!(parse_element(&g, "[1 2 3]").is_err());
        assert!(parse_element(&g, "[2 0; 0 1]").is_err());
    }
}
