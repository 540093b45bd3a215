//! One small graph per sub-case, with the occurrence that selects it.
//!
//! Most come straight from [`detect`]. Three sub-cases cannot be reached by
//! `detect` because an earlier configuration always matches first; their
//! fixtures name the triangle explicitly.

use super::{detect, Occurrence, SubCase};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub subcase: SubCase,
    pub graph: Graph,
    pub occurrence: Occurrence,
    /// Whether `detect` itself yields `occurrence`.
    pub detected: bool,
}

fn detected(subcase: SubCase, n: usize, edges: &[(usize, usize)]) -> Fixture {
    let graph = Graph::from_edges(n, edges).expect("fixture is simple");
    let occurrence = detect(&graph).expect("fixture has a configuration");
    Fixture {
        subcase,
        graph,
        occurrence,
        detected: true,
    }
}

fn triangle(subcase: SubCase, n: usize, edges: &[(usize, usize)]) -> Fixture {
    Fixture {
        subcase,
        graph: Graph::from_edges(n, edges).expect("fixture is simple"),
        occurrence: Occurrence::C5 { u: 0, v: 1, w: 2 },
        detected: false,
    }
}

/// Triangle `012` with private pairs `34`, `56`, `78`.
const BARE_TRIANGLE: [(usize, usize); 9] =
    [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 5), (1, 6), (2, 7), (2, 8)];

fn with_bare_triangle(extra: &[(usize, usize)]) -> Vec<(usize, usize)> {
    BARE_TRIANGLE.iter().chain(extra).copied().collect()
}

pub fn subcase_fixtures() -> Vec<Fixture> {
    use SubCase::*;
    vec![
        detected(C1, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
        // K4 on 0..4 and K4 on 4..8 joined by 0-4.
        detected(
            C2,
            8,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        ),
        detected(C3FewOuter, 6, &[(0, 5), (1, 4), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]),
        detected(
            C3AllOuter,
            6,
            &[(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)],
        ),
        detected(
            C3SomeOuter,
            6,
            &[(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)],
        ),
        detected(C4ThreeCommon, 5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]),
        detected(C4CutVertex, 7, &[(0, 6), (1, 6), (2, 5), (3, 5), (4, 5), (4, 6), (5, 6)]),
        detected(
            C4FourComponents,
            8,
            &[(0, 7), (1, 6), (2, 4), (2, 5), (3, 6), (3, 7), (4, 5), (4, 7), (5, 6), (6, 7)],
        ),
        detected(
            C4Connected,
            7,
            &[(0, 4), (0, 6), (1, 4), (1, 5), (2, 3), (2, 5), (2, 6), (3, 5), (3, 6), (4, 5), (4, 6)],
        ),
        triangle(C5TwinsTwoMissing, 5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 3), (1, 4), (3, 4)]),
        detected(
            C5TwinsOneMissing,
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
        ),
        detected(
            C5TwinsTriangle,
            6,
            &[(0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        ),
        detected(C5DegreeTwo, 5, &[(0, 3), (0, 4), (1, 2), (1, 4), (2, 4), (3, 4)]),
        triangle(C5NonCutEdge, 9, &with_bare_triangle(&[(3, 5), (6, 7), (8, 4)])),
        triangle(C5AllCutEdges, 9, &BARE_TRIANGLE),
    ]
}

/// Further explicit-triangle graphs for the sub-cases `detect` never reaches.
pub fn extra_triangle_fixtures() -> Vec<Fixture> {
    use SubCase::*;
    vec![
        triangle(C5TwinsTwoMissing, 6, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (1, 3), (1, 4), (3, 5), (4, 5)]),
        triangle(
            C5NonCutEdge,
            9,
            &with_bare_triangle(&[(3, 5), (6, 7), (8, 4), (3, 6), (5, 8), (4, 7)]),
        ),
        triangle(
            C5AllCutEdges,
            14,
            &with_bare_triangle(&[(3, 9), (3, 10), (9, 10), (8, 11), (8, 12), (11, 12), (11, 13), (12, 13)]),
        ),
    ]
}
