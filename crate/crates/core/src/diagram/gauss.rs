use std::collections::BTreeMap;
use std::fmt;

use super::lex::Cursor;
use super::{Crossing, DiagramError, LinkDiagram, Sign};

/// One passage through a crossing: `O3+` passes over crossing 3, which has
/// sign +1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussToken {
    pub label: u64,
    pub over: bool,
    pub sign: Sign,
}

impl fmt::Display for GaussToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.over { 'O' } else { 'U' };
        let sign = if self.sign.is_positive() { '+' } else { '-' };
        write!(f, "{tag}{}{sign}", self.label)
    }
}

/// Signed, over/under-tagged Gauss code with one passage sequence per
/// component. An empty sequence is a crossing-free component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussCode {
    pub components: Vec<Vec<GaussToken>>,
}

impl GaussCode {
    pub fn new(components: Vec<Vec<GaussToken>>) -> Result<Self, DiagramError> {
        if components.is_empty() {
            return Err(DiagramError::EmptyDiagram);
        }
        let mut seen: BTreeMap<u64, Vec<GaussToken>> = BTreeMap::new();
        for t in components.iter().flatten() {
            seen.entry(t.label).or_default().push(*t);
        }
        for (&label, tokens) in &seen {
            let reason = match tokens.as_slice() {
                [a, b] if a.over == b.over => Some("must be passed once over and once under"),
                [a, b] if a.sign != b.sign => Some("the two passages disagree on the sign"),
                [_, _] => None,
                _ => Some("must occur exactly twice"),
            };
            if let Some(reason) = reason {
                return Err(DiagramError::GaussLabel {
                    label,
                    reason: reason.into(),
                });
            }
        }
        Ok(GaussCode { components })
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, comp) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for t in comp {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

/// Parses component strings of `O<label><sign>` / `U<label><sign>` tokens
/// separated by `;`. The empty string is a single crossing-free component.
pub fn parse_gauss(text: &str) -> Result<GaussCode, DiagramError> {
    let mut cur = Cursor::new(text);
    let mut components = vec![Vec::new()];
    loop {
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(';') => {
                cur.bump();
                components.push(Vec::new());
            }
            Some(',') => {
                cur.bump();
            }
            Some(tag @ ('O' | 'U')) => {
                cur.bump();
                let label = cur.unsigned()?;
                let sign = match cur.peek() {
                    Some('+') => Sign::Positive,
                    Some('-') => Sign::Negative,
                    _ => return Err(cur.error("expected '+' or '-' after crossing label")),
                };
                cur.bump();
                components
                    .last_mut()
                    .expect("at least one component")
                    .push(GaussToken {
                        label,
                        over: tag == 'O',
                        sign,
                    });
            }
            Some(_) => return Err(cur.error("expected 'O', 'U' or ';'")),
        }
    }
    GaussCode::new(components)
}

/// Realizes a classical Gauss code on the sphere.
///
/// Signs and over/under tags fix the cyclic order at every crossing, so the
/// rotation system is determined by the code; the code is realizable exactly
/// when that rotation system has genus zero on every connected piece.
pub fn gauss_to_diagram(code: &GaussCode) -> Result<LinkDiagram, DiagramError> {
    // label -> (under arrive, under depart, over arrive, over depart, sign)
    let mut passages: BTreeMap<u64, [Option<(usize, usize)>; 2]> = BTreeMap::new();
    let mut signs: BTreeMap<u64, Sign> = BTreeMap::new();
    let mut base = 0;
    let mut free_loops = 0;
    for comp in &code.components {
        let m = comp.len();
        if m == 0 {
            free_loops += 1;
            continue;
        }
        for (j, t) in comp.iter().enumerate() {
            let arrive = base + (j + m - 1) % m;
            let depart = base + j;
            passages.entry(t.label).or_default()[usize::from(t.over)] = Some((arrive, depart));
            signs.insert(t.label, t.sign);
        }
        base += m;
    }
    let crossings = passages
        .iter()
        .map(|(label, [under, over])| {
            let (ua, ud) = under.expect("validated: one under passage");
            let (oa, od) = over.expect("validated: one over passage");
            match signs[label] {
                Sign::Positive => Crossing::new([ua, oa, ud, od], Sign::Positive),
                Sign::Negative => Crossing::new([ua, od, ud, oa], Sign::Negative),
            }
        })
        .collect();
    LinkDiagram::from_crossings(crossings, free_loops).map_err(|err| match err {
        DiagramError::NonPlanar { .. } => DiagramError::NonRealizable,
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_trefoil() {
        let g = parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap();
        assert_eq!(g.components.len(), 1);
        assert_eq!(g.components[0].len(), 6);
        assert_eq!(
            g.components[0][1],
            GaussToken {
                label: 2,
                over: false,
                sign: Sign::Positive
            }
        );
        assert_eq!(g.to_string(), "O1+U2+O3+U1+O2+U3+");
    }

    #[test]
    fn empty_code_is_one_free_loop() {
        let g = parse_gauss("").unwrap();
        assert_eq!(g.components.len(), 1);
        let d = gauss_to_diagram(&g).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 1);
    }

    #[test]
    fn multi_component() {
        let g = parse_gauss("O1+ U2+ ; U1+ O2+").unwrap();
        assert_eq!(g.components.len(), 2);
        let d = gauss_to_diagram(&g).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.crossing_count(), 2);
    }

    #[test]
    fn rejects_label_misuse() {
        assert!(matches!(
            parse_gauss("O1+O1+"),
            Err(DiagramError::GaussLabel { label: 1, .. })
        ));
        assert!(matches!(
            parse_gauss("O1+U1-"),
            Err(DiagramError::GaussLabel { label: 1, .. })
        ));
        assert!(matches!(
            parse_gauss("O1+U2+U1+"),
            Err(DiagramError::GaussLabel { label: 2, .. })
        ));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(
            parse_gauss("O1*"),
            Err(DiagramError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_gauss("X1+"),
            Err(DiagramError::Syntax { position: 0, .. })
        ));
    }

    #[test]
    fn virtual_trefoil_is_rejected() {
        let g = parse_gauss("O1+O2+U1+U2+").unwrap();
        assert_eq!(gauss_to_diagram(&g), Err(DiagramError::NonRealizable));
    }
}
