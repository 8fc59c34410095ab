//! Named example matroids with reference orderings.

use num_rational::BigRational;

use crate::matroid::{Matroid, VectorConfig};
use crate::orderings::Ordering;
use crate::set::ElementSet;
use crate::split::SplitHypergraph;

pub struct Example {
    pub name: &'static str,
    pub matroid: Matroid,
    /// A valid inductive ordering, when one is known.
    pub ordering: Option<Ordering>,
}

fn set(v: &[usize]) -> ElementSet {
    v.iter().copied().collect()
}

fn paving(d: usize, n: usize, hyperplanes: &[&[usize]]) -> Matroid {
    let h: Vec<ElementSet> = hyperplanes.iter().map(|x| set(x)).collect();
    Matroid::paving(d, n, &h).expect("catalog paving matroid")
}

fn split(d: usize, n: usize, edges: &[(&[usize], usize)]) -> Matroid {
    let h = SplitHypergraph::new(d, n, edges.iter().map(|(e, r)| (set(e), *r)));
    Matroid::from_split(&h).expect("catalog split matroid")
}

fn with_order(name: &'static str, matroid: Matroid, order: &[usize]) -> Example {
    let ordering = Ordering::for_matroid(order.to_vec(), &matroid).expect("catalog ordering");
    Example {
        name,
        matroid,
        ordering: Some(ordering),
    }
}

/// Quadrilateral set: four lines through six points in the plane.
pub fn quadrilateral() -> Matroid {
    paving(6, 3, &[&[1, 2, 3], &[1, 5, 6], &[3, 4, 5], &[2, 4, 6]])
}

/// Three concurrent lines through point 7.
pub fn concurrent_lines() -> Matroid {
    paving(7, 3, &[&[1, 2, 7], &[3, 4, 7], &[5, 6, 7]])
}

pub fn paving7() -> Matroid {
    paving(
        7,
        4,
        &[&[1, 2, 3, 4], &[1, 2, 5, 6], &[3, 4, 5, 6], &[1, 3, 5, 7], &[2, 4, 6, 7]],
    )
}

/// Rank-4 paving matroid on eight points with five dependent hyperplanes;
/// `extra` adds `{3,4,7,8}`.
pub fn paving8_cycle(extra: bool) -> Matroid {
    let mut h: Vec<&[usize]> = vec![
        &[1, 2, 3, 4],
        &[3, 4, 5, 6],
        &[5, 6, 7, 8],
        &[7, 8, 1, 2],
        &[1, 2, 5, 6],
    ];
    if extra {
        h.push(&[3, 4, 7, 8]);
    }
    paving(8, 4, &h)
}

pub fn paving8_chain() -> Matroid {
    paving(8, 4, &[&[1, 2, 3, 4], &[3, 4, 5, 6], &[5, 6, 7, 8], &[1, 3, 5, 7]])
}

pub fn rank4_twelve() -> Matroid {
    split(
        12,
        4,
        &[
            (&[1, 2, 3, 4], 3),
            (&[3, 4, 5, 6], 3),
            (&[5, 6, 7, 8], 3),
            (&[7, 8, 9, 10], 3),
            (&[9, 10, 11, 12], 3),
            (&[1, 2, 11, 12], 3),
            (&[1, 5, 9], 2),
            (&[2, 6, 10], 2),
            (&[3, 7, 11], 2),
        ],
    )
}

pub fn rank6_twelve() -> Matroid {
    split(
        12,
        6,
        &[
            (&[1, 2, 3, 4, 5, 6], 5),
            (&[7, 8, 9, 10, 11, 12], 5),
            (&[1, 2, 7, 8], 3),
            (&[3, 4, 9, 10], 3),
            (&[5, 6, 11, 12], 3),
        ],
    )
}

pub fn rank4_six() -> Matroid {
    split(6, 4, &[(&[1, 2, 3, 6], 3), (&[4, 5, 6], 2)])
}

/// Six points in a plane of 4-space, three of them collinear, plus a point
/// off the plane. Point 6 lies on two subspaces spanning only the plane.
pub fn plane_in_four() -> Matroid {
    let rows: [[i64; 4]; 7] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [1, 2, 3, 0],
        [2, -1, 5, 0],
        [1, 1, 0, 0],
        [0, 0, 0, 1],
    ];
    let vectors = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    Matroid::from_vectors(VectorConfig { n: 4, vectors }).expect("catalog vectors")
}

/// Examples with inductive orderings, given or searched. `paving8-cycle` is
/// inductively connected but not realizable.
pub fn ordered_examples() -> Vec<Example> {
    let mut out = vec![
        with_order("quadrilateral", quadrilateral(), &[2, 3, 5, 6, 1, 4]),
        with_order("paving8-chain", paving8_chain(), &[1, 2, 3, 5, 4, 6, 7, 8]),
        with_order(
            "rank4-twelve",
            rank4_twelve(),
            &[1, 2, 3, 5, 6, 7, 9, 10, 11, 4, 8, 12],
        ),
        with_order(
            "rank6-twelve",
            rank6_twelve(),
            &[7, 8, 9, 11, 12, 6, 3, 2, 5, 1, 4, 10],
        ),
        with_order("rank4-six", rank4_six(), &[1, 2, 3, 4, 5, 6]),
        with_order("one-line", paving(5, 3, &[&[1, 2, 3]]), &[1, 2, 4, 3, 5]),
        with_order("plane-in-four", plane_in_four(), &[1, 3, 4, 7, 2, 5, 6]),
    ];
    for (n, d) in [(2, 3), (2, 4), (2, 5), (3, 5), (3, 6), (3, 7), (4, 6)] {
        let m = Matroid::uniform(n, d).expect("uniform");
        let order: Vec<usize> = (1..=d).collect();
        out.push(with_order(uniform_name(n, d), m, &order));
    }
    let searched = [
        ("concurrent-lines", concurrent_lines()),
        ("paving7", paving7()),
        ("paving8-cycle", paving8_cycle(false)),
    ];
    for (name, m) in searched {
        let ordering = crate::orderings::find_inductive_ordering(&m);
        out.push(Example {
            name,
            matroid: m,
            ordering,
        });
    }
    out
}

fn uniform_name(n: usize, d: usize) -> &'static str {
    match (n, d) {
        (2, 3) => "uniform-2-3",
        (2, 4) => "uniform-2-4",
        (2, 5) => "uniform-2-5",
        (3, 5) => "uniform-3-5",
        (3, 6) => "uniform-3-6",
        (3, 7) => "uniform-3-7",
        (4, 6) => "uniform-4-6",
        _ => "uniform",
    }
}
