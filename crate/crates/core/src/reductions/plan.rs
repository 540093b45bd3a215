use std::fmt;

use serde::Serialize;

use super::Config;

/// Which branch of a configuration's reduction was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SubCase {
    C1,
    C2,
    /// At most one of `xu'`, `u'y`, `yv'`, `v'x` present.
    C3FewOuter,
    /// All four outer edges present.
    C3AllOuter,
    /// Two or three outer edges present.
    C3SomeOuter,
    /// `u` and `v` share three neighbours.
    C4ThreeCommon,
    /// Deleting `u` or `v` leaves three components.
    C4CutVertex,
    /// Deleting both leaves four components.
    C4FourComponents,
    /// Remaining case, one connected child.
    C4Connected,
    /// Two triangle vertices share three neighbours spanning at most one edge.
    C5TwinsTwoMissing,
    /// As above, exactly one edge missing among the shared neighbours.
    C5TwinsOneMissing,
    /// As above, the shared neighbours form a triangle.
    C5TwinsTriangle,
    /// A triangle vertex of degree 2.
    C5DegreeTwo,
    /// All degree 4 and some edge leaving the triangle is not a bridge.
    C5NonCutEdge,
    /// All degree 4 and every edge leaving the triangle is a bridge.
    C5AllCutEdges,
}

impl SubCase {
    pub const ALL: [SubCase; 15] = [
        SubCase::C1,
        SubCase::C2,
        SubCase::C3FewOuter,
        SubCase::C3AllOuter,
        SubCase::C3SomeOuter,
        SubCase::C4ThreeCommon,
        SubCase::C4CutVertex,
        SubCase::C4FourComponents,
        SubCase::C4Connected,
        SubCase::C5TwinsTwoMissing,
        SubCase::C5TwinsOneMissing,
        SubCase::C5TwinsTriangle,
        SubCase::C5DegreeTwo,
        SubCase::C5NonCutEdge,
        SubCase::C5AllCutEdges,
    ];

    pub fn config(self) -> Config {
        use SubCase::*;
        match self {
            C1 => Config::C1,
            C2 => Config::C2,
            C3FewOuter | C3AllOuter | C3SomeOuter => Config::C3,
            C4ThreeCommon | C4CutVertex | C4FourComponents | C4Connected => Config::C4,
            _ => Config::C5,
        }
    }

    /// Short stable identifier, e.g. `C4.2`.
    pub fn id(self) -> &'static str {
        use SubCase::*;
        match self {
            C1 => "C1",
            C2 => "C2",
            C3FewOuter => "C3.1",
            C3AllOuter => "C3.2",
            C3SomeOuter => "C3.3",
            C4ThreeCommon => "C4.1",
            C4CutVertex => "C4.2",
            C4FourComponents => "C4.3",
            C4Connected => "C4.4",
            C5TwinsTwoMissing => "C5.1",
            C5TwinsOneMissing => "C5.2",
            C5TwinsTriangle => "C5.3",
            C5DegreeTwo => "C5.4",
            C5NonCutEdge => "C5.5",
            C5AllCutEdges => "C5.6",
        }
    }

    pub fn from_id(id: &str) -> Option<SubCase> {
        SubCase::ALL.into_iter().find(|s| s.id() == id)
    }

    /// Largest allowed `|lifted| - Σ |child decompositions|`.
    pub fn max_delta(self) -> isize {
        use SubCase::*;
        match self {
            C1 | C4CutVertex | C4FourComponents | C5AllCutEdges => 0,
            C2 => -1,
            _ => 1,
        }
    }
}

impl fmt::Display for SubCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Vertex named in child coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChildVertex {
    pub child: usize,
    pub vertex: usize,
}

/// Edge added to a child that is not an edge of the parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SyntheticEdge {
    pub child: usize,
    pub a: usize,
    pub b: usize,
}

/// How to turn child decompositions back into one for the parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftPlan {
    pub config: Config,
    pub subcase: SubCase,
    pub synthetic: Vec<SyntheticEdge>,
    /// Named vertices of the recipe that survive in a child.
    pub anchors: Vec<(&'static str, ChildVertex)>,
    pub(crate) recipe: Recipe,
}

/// Parent-coordinate parameters of each recipe. `sigma` is a placeholder id
/// (the parent order) standing for a contracted vertex until it is resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Recipe {
    C1 {
        u: usize,
        v: usize,
        w: usize,
    },
    C2 {
        u: usize,
        v: usize,
    },
    C3Few {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
        up: usize,
        vp: usize,
        with_xy: bool,
    },
    C3All {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
        up: usize,
        vp: usize,
    },
    /// Labeled so that `xu'` is the added edge.
    C3Some {
        u: usize,
        v: usize,
        x: usize,
        y: usize,
        up: usize,
        vp: usize,
    },
    /// `ap` and `pb` are the added edges.
    Pivot {
        a: usize,
        b: usize,
        q: usize,
        p: usize,
        r: usize,
    },
    C4Cut {
        hub: usize,
        other: usize,
        t1: usize,
        t2: usize,
        t3: usize,
    },
    C4Four {
        u: usize,
        v: usize,
        t: [usize; 3],
        w: [usize; 3],
    },
    C4Connected {
        u: usize,
        v: usize,
        t: [usize; 3],
        w: [usize; 3],
    },
    /// `qr` is the added edge.
    C5TwinsOne {
        a: usize,
        b: usize,
        q: usize,
        p: usize,
        r: usize,
    },
    /// `c` is the third triangle vertex; it has degree 2 after deleting `a`, `b`.
    C5TwinsTriangle {
        a: usize,
        b: usize,
        c: usize,
        x: usize,
        y: usize,
    },
    C5DegreeTwo {
        u: usize,
        v: usize,
        w: usize,
        x: [usize; 2],
        z: Vec<usize>,
        sigma: usize,
    },
    C5NonCut {
        u: usize,
        v: usize,
        w: usize,
        x1: usize,
        x2: usize,
        y: [usize; 2],
        z: [usize; 2],
        sigma: usize,
    },
    C5AllCut {
        u: usize,
        v: usize,
        w: usize,
        x: [usize; 2],
        y: [usize; 2],
        z: [usize; 2],
    },
}
