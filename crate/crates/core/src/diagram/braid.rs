use std::fmt;

use super::lex::Cursor;
use super::{Crossing, DiagramError, LinkDiagram, Sign};

/// A braid word on `strands` strands. Letter `i > 0` is the generator
/// σ_i and `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self, DiagramError> {
        if strands < 1 {
            return Err(DiagramError::NoStrands);
        }
        if let Some(&letter) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(DiagramError::GeneratorOutOfRange { letter, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// The permutation of strand positions induced by the word: a strand
    /// starting at position `p` ends at `permutation()[p]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of cycles of [`permutation`](Self::permutation).
    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = perm[p];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BR({};", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        f.write_str(")")
    }
}

/// Parses `BR(n; w1 w2 ... wm)`. Letters may be separated by whitespace or
/// commas.
pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    if !cur.eat_str("BR") {
        return Err(cur.error("expected 'BR('"));
    }
    cur.expect('(')?;
    cur.skip_ws();
    let strands = cur.unsigned()? as usize;
    cur.expect(';')?;
    let mut letters = Vec::new();
    loop {
        cur.skip_ws();
        if cur.eat(')') {
            break;
        }
        if !letters.is_empty() && cur.eat(',') {
            cur.skip_ws();
        }
        letters.push(cur.signed()?);
    }
    if !cur.at_end() {
        return Err(cur.error("trailing input after braid"));
    }
    BraidWord::new(strands, letters)
}

/// Closure of a braid drawn bottom to top with positions numbered left to
/// right. In σ_i the strand moving from position i to i+1 passes under,
/// which makes the crossing positive; σ_i⁻¹ is its mirror.
pub fn braid_closure(word: &BraidWord) -> LinkDiagram {
    let n = word.strands;
    let mut current: Vec<usize> = (0..n).collect();
    let mut next_arc = n;
    let mut raw = Vec::with_capacity(word.letters.len());
    for &l in &word.letters {
        let i = l.unsigned_abs() as usize;
        let (bl, br) = (current[i - 1], current[i]);
        let (tl, tr) = (next_arc, next_arc + 1);
        next_arc += 2;
        raw.push(if l > 0 {
            Crossing::new([bl, br, tr, tl], Sign::Positive)
        } else {
            Crossing::new([br, tr, tl, bl], Sign::Negative)
        });
        current[i - 1] = tl;
        current[i] = tr;
    }

    let mut free_loops = 0;
    // closing strands identify each top arc with the bottom arc below it
    let mut rename: Vec<usize> = (0..next_arc).collect();
    for (p, &top) in current.iter().enumerate() {
        if top == p {
            free_loops += 1;
        } else {
            rename[top] = p;
        }
    }
    let mut dense = vec![usize::MAX; next_arc];
    let mut used = 0;
    for old in 0..next_arc {
        if rename[old] == old && (old >= n || current[old] != old) {
            dense[old] = used;
            used += 1;
        }
    }
    let crossings = raw
        .into_iter()
        .map(|x| Crossing::new(x.ends.map(|a| dense[rename[a]]), x.sign))
        .collect();
    LinkDiagram::from_crossings(crossings, free_loops).expect("braid closures are planar")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_words() {
        assert_eq!(
            parse_braid("BR(2; 1 1 1)").unwrap(),
            BraidWord {
                strands: 2,
                letters: vec![1, 1, 1]
            }
        );
        assert_eq!(
            parse_braid("BR(2; 1 1 1 1)").unwrap().letters,
            vec![1, 1, 1, 1]
        );
        assert_eq!(parse_braid("BR(3;)").unwrap().letters, Vec::<i64>::new());
        assert_eq!(
            parse_braid("BR(4; 1, -2, +3)").unwrap().letters,
            vec![1, -2, 3]
        );
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(
            parse_braid("BR(2; 2)"),
            Err(DiagramError::GeneratorOutOfRange {
                letter: 2,
                strands: 2
            })
        );
        assert_eq!(
            parse_braid("BR(3; 1 0)"),
            Err(DiagramError::GeneratorOutOfRange {
                letter: 0,
                strands: 3
            })
        );
        assert_eq!(parse_braid("BR(0; )"), Err(DiagramError::NoStrands));
        assert!(matches!(
            parse_braid("BR(2 1 1)"),
            Err(DiagramError::Syntax { .. })
        ));
        assert!(matches!(
            parse_braid("BR(2; 1 1) x"),
            Err(DiagramError::Syntax { .. })
        ));
    }

    #[test]
    fn display_round_trips() {
        let w = BraidWord::new(3, vec![1, -2, 1]).unwrap();
        assert_eq!(parse_braid(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn trefoil_closure() {
        let d = braid_closure(&parse_braid("BR(2; 1 1 1)").unwrap());
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.component_count(), 1);
        assert!(d.crossings().iter().all(|x| x.sign == Sign::Positive));
    }

    #[test]
    fn mirror_trefoil_closure() {
        let d = braid_closure(&parse_braid("BR(2; -1 -1 -1)").unwrap());
        assert!(d.crossings().iter().all(|x| x.sign == Sign::Negative));
    }

    #[test]
    fn torus_link_closure() {
        let w = parse_braid("BR(2; 1 1 1 1)").unwrap();
        assert_eq!(w.cycle_count(), 2);
        let d = braid_closure(&w);
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.component_count(), 2);
    }

    #[test]
    fn empty_word_is_unlink() {
        let d = braid_closure(&parse_braid("BR(3; )").unwrap());
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops(), 3);
    }

    #[test]
    fn untouched_strand_becomes_free_loop() {
        let d = braid_closure(&parse_braid("BR(3; 1 1 1)").unwrap());
        assert_eq!(d.free_loops(), 1);
        assert_eq!(d.component_count(), 2);
    }
}
