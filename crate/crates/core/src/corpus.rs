//! Named diagrams from the knot table and seeded random generators used by
//! the test suites and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{braid_closure, parse_pd, pd_to_diagram, BraidWord, LinkDiagram};

fn from_pd(text: &str) -> LinkDiagram {
    pd_to_diagram(&parse_pd(text).expect("corpus PD parses")).expect("corpus PD is valid")
}

fn from_braid(strands: usize, letters: &[i64]) -> LinkDiagram {
    braid_closure(&BraidWord::new(strands, letters.to_vec()).expect("corpus braid is valid"))
}

pub const TREFOIL_PD: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
pub const HOPF_PD: &str = "X(1,4,2,3) X(3,2,4,1)";
pub const FIGURE_EIGHT_PD: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
pub const POSITIVE_KINK_PD: &str = "X(1,2,2,1)";

/// The positive (right-handed) trefoil.
pub fn trefoil() -> LinkDiagram {
    from_pd(TREFOIL_PD)
}

pub fn hopf() -> LinkDiagram {
    from_pd(HOPF_PD)
}

pub fn figure_eight() -> LinkDiagram {
    from_pd(FIGURE_EIGHT_PD)
}

/// One-crossing diagram of the unknot with a positive crossing.
pub fn positive_kink() -> LinkDiagram {
    from_pd(POSITIVE_KINK_PD)
}

/// Closure of σ₁^q: the (2,q) torus knot or link.
pub fn torus_2(q: usize) -> LinkDiagram {
    from_braid(2, &vec![1; q])
}

/// Connected sum taken at the arcs leaving the under-strand of crossing 0,
/// which keeps sums of alternating diagrams alternating.
pub fn sum_at_first_crossing(a: &LinkDiagram, b: &LinkDiagram) -> LinkDiagram {
    a.connected_sum(
        a.crossing(0).under_out_arc(),
        b,
        b.crossing(0).under_out_arc(),
    )
    .expect("both summands have crossings")
}

/// Trefoil # trefoil.
pub fn granny() -> LinkDiagram {
    sum_at_first_crossing(&trefoil(), &trefoil())
}

/// Trefoil # mirror trefoil.
pub fn square() -> LinkDiagram {
    sum_at_first_crossing(&trefoil(), &trefoil().mirror())
}

/// Closures of positive braids with pretzel-like twist regions.
pub fn positive_braids() -> Vec<(&'static str, LinkDiagram)> {
    vec![
        ("BR(3; 1 2 1 2)", from_braid(3, &[1, 2, 1, 2])),
        ("BR(3; 1 1 2 1 1 2)", from_braid(3, &[1, 1, 2, 1, 1, 2])),
        (
            "BR(3; 1 1 1 2 2 1 2)",
            from_braid(3, &[1, 1, 1, 2, 2, 1, 2]),
        ),
        (
            "BR(3; 1 2 1 2 1 2 1 2)",
            from_braid(3, &[1, 2, 1, 2, 1, 2, 1, 2]),
        ),
        ("BR(3; 1 2 1 2 1 2)", from_braid(3, &[1, 2, 1, 2, 1, 2])),
        ("BR(4; 1 2 3 1 2 3)", from_braid(4, &[1, 2, 3, 1, 2, 3])),
        (
            "BR(4; 1 1 2 2 3 3 2 1)",
            from_braid(4, &[1, 1, 2, 2, 3, 3, 2, 1]),
        ),
        (
            "BR(4; 1 2 3 3 2 1 1 2 3)",
            from_braid(4, &[1, 2, 3, 3, 2, 1, 1, 2, 3]),
        ),
    ]
}

/// Every named diagram, for corpus-wide checks.
pub fn named() -> Vec<(String, LinkDiagram)> {
    let mut all: Vec<(String, LinkDiagram)> = vec![
        ("trefoil".into(), trefoil()),
        ("mirror trefoil".into(), trefoil().mirror()),
        ("hopf".into(), hopf()),
        ("figure-eight".into(), figure_eight()),
        ("positive kink".into(), positive_kink()),
        ("granny".into(), granny()),
        ("square".into(), square()),
        (
            "trefoil + trefoil (split)".into(),
            trefoil().disjoint_union(&trefoil()),
        ),
        ("hopf + hopf (split)".into(), hopf().disjoint_union(&hopf())),
        (
            "trefoil + free loop".into(),
            trefoil().with_extra_free_loops(1),
        ),
        ("unknot".into(), LinkDiagram::unlink(1).expect("unknot")),
        (
            "2-component unlink".into(),
            LinkDiagram::unlink(2).expect("unlink"),
        ),
    ];
    for q in 2..=7 {
        all.push((format!("T(2,{q})"), torus_2(q)));
    }
    for (name, d) in positive_braids() {
        all.push((name.into(), d));
    }
    all
}

/// Uniform random braid word with `2..=max_strands` strands and
/// `1..=max_len` letters.
pub fn random_braid<R: Rng + ?Sized>(
    rng: &mut R,
    max_strands: usize,
    max_len: usize,
    positive_only: bool,
) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands.max(2));
    let len = rng.gen_range(1..=max_len.max(1));
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands) as i64;
            if positive_only || rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("generated letters are in range")
}

/// Applies a random permutation to arcs and crossings.
pub fn random_relabel<R: Rng + ?Sized>(rng: &mut R, d: &LinkDiagram) -> LinkDiagram {
    let mut arcs: Vec<usize> = (0..d.arc_count()).collect();
    let mut crossings: Vec<usize> = (0..d.crossing_count()).collect();
    arcs.shuffle(rng);
    crossings.shuffle(rng);
    d.relabeled(&arcs, &crossings)
}

/// A random diagram: a braid closure, possibly summed with or placed beside
/// another, then randomly relabeled.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R) -> LinkDiagram {
    let first = braid_closure(&random_braid(rng, 4, 10, false));
    let d = match rng.gen_range(0..6) {
        0 => {
            let second = braid_closure(&random_braid(rng, 3, 6, false));
            first.disjoint_union(&second)
        }
        1 => {
            let second = braid_closure(&random_braid(rng, 3, 6, false));
            if first.crossing_count() > 0 && second.crossing_count() > 0 {
                let a = rng.gen_range(0..first.arc_count());
                let b = rng.gen_range(0..second.arc_count());
                first.connected_sum(a, &second, b).expect("arcs in range")
            } else {
                first
            }
        }
        _ => first,
    };
    random_relabel(rng, &d)
}
