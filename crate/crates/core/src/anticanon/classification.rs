// Classification rows by stratum and degree; the degree-1 rows seed propagation.
pub(crate) struct ClassRow {
    pub stratum: u32,
    pub degree: u32,
    pub label: &'static str,
    pub marked: bool,
    pub vertices: &'static [(u32, i64)],
    pub edges: &'static [(usize, usize)],
}

pub(crate) const ROWS: &[ClassRow] = &[
    ClassRow {
        stratum: 6,
        degree: 1,
        label: "E8",
        marked: true,
        vertices: &[(2, -2), (4, -2), (6, -2), (5, -2), (4, -2), (3, -2), (2, -2), (3, -2), (1, -1)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 7), (3, 4), (4, 5), (5, 6), (6, 8)],
    },
    ClassRow {
        stratum: 6,
        degree: 2,
        label: "E7",
        marked: true,
        vertices: &[(2, -2), (4, -2), (6, -2), (5, -2), (4, -2), (3, -2), (2, -1), (3, -2)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 7), (3, 4), (4, 5), (5, 6)],
    },
    ClassRow {
        stratum: 6,
        degree: 3,
        label: "E6",
        marked: true,
        vertices: &[(2, -2), (4, -2), (6, -2), (5, -2), (4, -2), (3, -1), (3, -2)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 6), (3, 4), (4, 5)],
    },
    ClassRow {
        stratum: 6,
        degree: 4,
        label: "D5",
        marked: true,
        vertices: &[(2, -2), (4, -2), (6, -2), (5, -2), (4, -1), (3, -2)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 5), (3, 4)],
    },
    ClassRow {
        stratum: 6,
        degree: 5,
        label: "A4",
        marked: true,
        vertices: &[(2, -2), (4, -2), (6, -2), (5, -1), (3, -2)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 4)],
    },
    ClassRow {
        stratum: 6,
        degree: 6,
        label: "A2+A1",
        marked: true,
        vertices: &[(6, -1), (3, -2), (2, -2), (4, -2)],
        edges: &[(0, 1), (0, 3), (2, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 1,
        label: "E7",
        marked: true,
        vertices: &[(2, -2), (3, -2), (4, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, -1)],
        edges: &[(0, 1), (0, 7), (1, 2), (2, 3), (2, 6), (3, 4), (4, 5)],
    },
    ClassRow {
        stratum: 4,
        degree: 2,
        label: "E6",
        marked: true,
        vertices: &[(2, -2), (3, -2), (4, -2), (3, -2), (2, -2), (2, -2), (1, -1), (1, -1)],
        edges: &[(0, 1), (0, 6), (1, 2), (2, 3), (2, 5), (3, 4), (4, 7)],
    },
    ClassRow {
        stratum: 4,
        degree: 2,
        label: "D6",
        marked: true,
        vertices: &[(3, -2), (4, -2), (3, -2), (2, -2), (1, -2), (2, -2), (2, -1)],
        edges: &[(0, 1), (0, 6), (1, 2), (1, 5), (2, 3), (3, 4)],
    },
    ClassRow {
        stratum: 4,
        degree: 2,
        label: "E7",
        marked: false,
        vertices: &[(2, -2), (3, -2), (4, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, 0)],
        edges: &[(0, 1), (0, 7), (1, 2), (2, 3), (2, 6), (3, 4), (4, 5)],
    },
    ClassRow {
        stratum: 4,
        degree: 3,
        label: "D5",
        marked: true,
        vertices: &[(3, -2), (4, -2), (3, -2), (2, -2), (1, -1), (2, -2), (2, -1)],
        edges: &[(0, 1), (0, 6), (1, 2), (1, 5), (2, 3), (3, 4)],
    },
    ClassRow {
        stratum: 4,
        degree: 3,
        label: "A5",
        marked: true,
        vertices: &[(4, -2), (3, -2), (2, -2), (1, -2), (2, -2), (3, -1)],
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (2, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 3,
        label: "E6",
        marked: false,
        vertices: &[(2, -2), (3, -2), (4, -2), (3, -2), (2, -2), (2, -2), (1, -1), (1, 0)],
        edges: &[(0, 1), (0, 6), (1, 2), (2, 3), (2, 5), (3, 4), (4, 7)],
    },
    ClassRow {
        stratum: 4,
        degree: 4,
        label: "D4",
        marked: true,
        vertices: &[(3, -2), (4, -2), (3, -2), (2, -1), (2, -2), (2, -1)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 4,
        label: "A4",
        marked: true,
        vertices: &[(4, -2), (3, -2), (2, -2), (1, -1), (2, -2), (3, -1)],
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (2, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 4,
        label: "A3+A1",
        marked: true,
        vertices: &[(3, -2), (2, -2), (1, -2), (2, -2), (4, -1)],
        edges: &[(0, 1), (0, 4), (1, 2), (3, 4)],
    },
    ClassRow {
        stratum: 4,
        degree: 4,
        label: "D5",
        marked: false,
        vertices: &[(3, -2), (4, -2), (3, -2), (2, -2), (1, 0), (2, -2), (2, -1)],
        edges: &[(0, 1), (0, 6), (1, 2), (1, 5), (2, 3), (3, 4)],
    },
    ClassRow {
        stratum: 4,
        degree: 5,
        label: "A3",
        marked: true,
        vertices: &[(4, -2), (3, -2), (2, -1), (2, -2), (3, -1)],
        edges: &[(0, 1), (0, 3), (0, 4), (1, 2)],
    },
    ClassRow {
        stratum: 4,
        degree: 5,
        label: "A2+A1",
        marked: true,
        vertices: &[(3, -2), (2, -2), (2, -2), (1, -1), (4, -1)],
        edges: &[(0, 1), (0, 4), (1, 3), (2, 4)],
    },
    ClassRow {
        stratum: 4,
        degree: 5,
        label: "A4",
        marked: false,
        vertices: &[(4, -2), (3, -2), (2, -2), (1, 0), (2, -2), (3, -1)],
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (2, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 6,
        label: "A2",
        marked: true,
        vertices: &[(4, -2), (3, -1), (2, -2), (3, -1)],
        edges: &[(0, 1), (0, 2), (0, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 6,
        label: "2A1",
        marked: true,
        vertices: &[(3, -2), (2, -1), (2, -2), (4, -1)],
        edges: &[(0, 1), (0, 3), (2, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 6,
        label: "A2+A1",
        marked: false,
        vertices: &[(2, -2), (4, -1), (3, -2), (2, -2), (1, 0)],
        edges: &[(0, 2), (0, 4), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 4,
        degree: 7,
        label: "A1",
        marked: true,
        vertices: &[(2, -2), (4, -1), (3, -1)],
        edges: &[(0, 1), (1, 2)],
    },
    ClassRow {
        stratum: 3,
        degree: 1,
        label: "E6",
        marked: true,
        vertices: &[(1, -2), (2, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, -1)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 5), (3, 4), (5, 6)],
    },
    ClassRow {
        stratum: 3,
        degree: 2,
        label: "D5",
        marked: true,
        vertices: &[(2, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, -1), (1, -1)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3), (4, 6)],
    },
    ClassRow {
        stratum: 3,
        degree: 2,
        label: "A5'",
        marked: true,
        vertices: &[(1, -2), (2, -2), (3, -2), (2, -2), (1, -2), (2, -1)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 5), (3, 4)],
    },
    ClassRow {
        stratum: 3,
        degree: 2,
        label: "E6",
        marked: false,
        vertices: &[(1, -2), (2, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, 0)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 5), (3, 4), (5, 6)],
    },
    ClassRow {
        stratum: 3,
        degree: 3,
        label: "D4",
        marked: true,
        vertices: &[(2, -2), (3, -2), (2, -2), (1, -1), (2, -2), (1, -1), (1, -1)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3), (4, 6)],
    },
    ClassRow {
        stratum: 3,
        degree: 3,
        label: "A4",
        marked: true,
        vertices: &[(2, -2), (3, -2), (2, -2), (1, -2), (2, -1), (1, -1)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 3,
        label: "2A2",
        marked: true,
        vertices: &[(1, -2), (2, -2), (2, -2), (1, -2), (3, -1)],
        edges: &[(0, 1), (1, 4), (2, 3), (2, 4)],
    },
    ClassRow {
        stratum: 3,
        degree: 3,
        label: "E6",
        marked: false,
        vertices: &[(1, -2), (2, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, 1)],
        edges: &[(0, 1), (1, 2), (2, 3), (2, 5), (3, 4), (5, 6)],
    },
    ClassRow {
        stratum: 3,
        degree: 3,
        label: "D5",
        marked: false,
        vertices: &[(2, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, -1), (1, 0)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3), (4, 6)],
    },
    ClassRow {
        stratum: 3,
        degree: 4,
        label: "A3",
        marked: true,
        vertices: &[(3, -2), (2, -2), (1, -2), (2, -1), (2, -1)],
        edges: &[(0, 1), (0, 3), (0, 4), (1, 2)],
    },
    ClassRow {
        stratum: 3,
        degree: 4,
        label: "A3",
        marked: true,
        vertices: &[(2, -2), (3, -2), (2, -1), (2, -2), (1, -1), (1, -1)],
        edges: &[(0, 1), (0, 4), (1, 2), (1, 3), (3, 5)],
    },
    ClassRow {
        stratum: 3,
        degree: 4,
        label: "A2+A1",
        marked: true,
        vertices: &[(2, -2), (2, -2), (1, -2), (3, -1), (1, -1)],
        edges: &[(0, 3), (0, 4), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 4,
        label: "D5",
        marked: false,
        vertices: &[(2, -2), (3, -2), (2, -2), (1, -2), (2, -2), (1, -1), (1, 1)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3), (4, 6)],
    },
    ClassRow {
        stratum: 3,
        degree: 4,
        label: "D4",
        marked: false,
        vertices: &[(2, -2), (3, -2), (2, -2), (2, -2), (1, -1), (1, 0), (1, -1)],
        edges: &[(0, 1), (0, 4), (1, 2), (1, 3), (2, 6), (3, 5)],
    },
    ClassRow {
        stratum: 3,
        degree: 4,
        label: "A4",
        marked: false,
        vertices: &[(2, -2), (3, -2), (2, -2), (1, -2), (2, -1), (1, 0)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 4), (2, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 5,
        label: "A2",
        marked: true,
        vertices: &[(2, -1), (2, -2), (1, -2), (3, -1)],
        edges: &[(0, 3), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 5,
        label: "A2",
        marked: true,
        vertices: &[(3, -2), (2, -2), (2, -1), (2, -1), (1, -1)],
        edges: &[(0, 1), (0, 2), (0, 3), (1, 4)],
    },
    ClassRow {
        stratum: 3,
        degree: 5,
        label: "2A1",
        marked: true,
        vertices: &[(2, -2), (2, -2), (3, -1), (1, -1), (1, -1)],
        edges: &[(0, 2), (0, 4), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 5,
        label: "A4",
        marked: false,
        vertices: &[(3, -2), (2, -2), (1, -2), (2, -2), (2, -1), (1, 1)],
        edges: &[(0, 1), (0, 3), (0, 4), (1, 2), (3, 5)],
    },
    ClassRow {
        stratum: 3,
        degree: 5,
        label: "A3",
        marked: false,
        vertices: &[(2, -2), (3, -2), (2, -2), (2, -1), (1, -1), (1, 0)],
        edges: &[(0, 1), (0, 5), (1, 2), (1, 3), (2, 4)],
    },
    ClassRow {
        stratum: 3,
        degree: 5,
        label: "A2+A1",
        marked: false,
        vertices: &[(2, -2), (2, -2), (3, -1), (1, -2), (1, 0)],
        edges: &[(0, 2), (0, 4), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 6,
        label: "A1",
        marked: true,
        vertices: &[(2, -2), (1, -1), (2, -1), (3, -1)],
        edges: &[(0, 1), (0, 3), (2, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 6,
        label: "A1",
        marked: true,
        vertices: &[(3, -2), (2, -1), (2, -1), (2, -1)],
        edges: &[(0, 1), (0, 2), (0, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 6,
        label: "A2+A1",
        marked: false,
        vertices: &[(2, -2), (2, -2), (3, -1), (1, -2), (1, 1)],
        edges: &[(0, 2), (0, 4), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 3,
        degree: 6,
        label: "A2",
        marked: false,
        vertices: &[(3, -2), (2, -1), (1, 0), (2, -1), (2, -2)],
        edges: &[(0, 1), (0, 3), (0, 4), (2, 4)],
    },
    ClassRow {
        stratum: 3,
        degree: 6,
        label: "A2",
        marked: false,
        vertices: &[(1, -2), (3, 0), (2, -2)],
        edges: &[(0, 2), (1, 2)],
    },
    ClassRow {
        stratum: 3,
        degree: 6,
        label: "2A1",
        marked: false,
        vertices: &[(2, -2), (2, -2), (3, -1), (1, -1), (1, 0)],
        edges: &[(0, 2), (0, 4), (1, 2), (1, 3)],
    },
    // weights adjusted to satisfy the anticanonical identity
    ClassRow {
        stratum: 3,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(2, -1), (2, -2), (3, -1), (1, 0)],
        edges: &[(0, 2), (1, 2), (1, 3)],
    },
    // weights adjusted to satisfy the anticanonical identity
    ClassRow {
        stratum: 3,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(1, -1), (3, 0), (2, -2)],
        edges: &[(0, 2), (1, 2)],
    },
    ClassRow {
        stratum: 2,
        degree: 1,
        label: "D8",
        marked: true,
        vertices: &[(1, -2), (1, -1), (2, -2), (2, -2), (2, -2), (2, -2), (2, -2), (1, -2), (1, -2)],
        edges: &[(0, 6), (1, 6), (2, 3), (2, 7), (2, 8), (3, 4), (4, 5), (5, 6)],
    },
    ClassRow {
        stratum: 2,
        degree: 1,
        label: "D7",
        marked: true,
        vertices: &[(1, -2), (1, -1), (2, -2), (2, -2), (2, -2), (2, -2), (1, -2), (1, -2)],
        edges: &[(0, 5), (1, 5), (2, 3), (2, 6), (2, 7), (3, 4), (4, 5)],
    },
    ClassRow {
        stratum: 2,
        degree: 1,
        label: "D6",
        marked: true,
        vertices: &[(1, -2), (1, -1), (2, -2), (2, -2), (2, -2), (1, -2), (1, -2)],
        edges: &[(0, 4), (1, 4), (2, 3), (2, 5), (2, 6), (3, 4)],
    },
    ClassRow {
        stratum: 2,
        degree: 1,
        label: "D5",
        marked: true,
        vertices: &[(1, -2), (1, -1), (2, -2), (2, -2), (1, -2), (1, -2)],
        edges: &[(0, 3), (1, 3), (2, 3), (2, 4), (2, 5)],
    },
    ClassRow {
        stratum: 2,
        degree: 1,
        label: "D4",
        marked: true,
        vertices: &[(1, -2), (1, -2), (2, -2), (1, -2), (1, -1)],
        edges: &[(0, 2), (1, 2), (2, 3), (2, 4)],
    },
    ClassRow {
        stratum: 2,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(1, 1), (1, -2), (2, 0)],
        edges: &[(0, 2), (1, 2)],
    },
    ClassRow {
        stratum: 2,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(2, -2), (1, 0), (1, -1), (2, 0)],
        edges: &[(0, 1), (0, 2), (0, 3)],
    },
    ClassRow {
        stratum: 2,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(1, -1), (2, -2), (2, -1), (2, 0)],
        edges: &[(0, 2), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 2,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(1, 2), (2, -1), (1, -2), (1, -1)],
        edges: &[(0, 1), (1, 2), (1, 3)],
    },
    ClassRow {
        stratum: 2,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(1, 0), (1, -1), (2, -2), (1, 0), (1, 0)],
        edges: &[(0, 2), (1, 2), (2, 3), (2, 4)],
    },
    ClassRow {
        stratum: 2,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(2, -2), (1, 0), (1, 0), (2, -1), (1, -1)],
        edges: &[(0, 1), (0, 2), (0, 3), (3, 4)],
    },
    ClassRow {
        stratum: 2,
        degree: 7,
        label: "A1",
        marked: false,
        vertices: &[(1, -2), (2, -1), (2, -1), (1, 1)],
        edges: &[(0, 1), (1, 2), (2, 3)],
    },
];

pub(crate) struct RuleSeed {
    pub key: &'static str,
    pub vertices: &'static [(u32, i64)],
    pub edges: &'static [(usize, usize)],
}

pub(crate) const RULE_SEEDS: &[RuleSeed] = &[
    RuleSeed {
        key: "one-curve",
        vertices: &[(2, -2), (2, -2), (3, -1), (1, -2), (1, 1)],
        edges: &[(0, 2), (0, 4), (1, 2), (1, 3)],
    },
    RuleSeed {
        key: "long-chain",
        vertices: &[(1, -2), (2, -2), (2, -2), (2, -1), (2, -1), (1, -1)],
        edges: &[(0, 3), (1, 2), (1, 3), (2, 4), (4, 5)],
    },
    RuleSeed {
        key: "long-chain",
        vertices: &[(1, -2), (1, -2), (2, -2), (2, -2), (2, -2), (2, -1), (2, -1)],
        edges: &[(0, 5), (1, 6), (2, 3), (2, 5), (3, 4), (4, 6)],
    },
    RuleSeed {
        key: "reduced-top",
        vertices: &[(1, -2), (2, -2), (2, -1), (1, 0), (2, -1)],
        edges: &[(0, 2), (1, 2), (1, 4), (3, 4)],
    },
    RuleSeed {
        key: "reduced-top",
        vertices: &[(1, -2), (2, -1), (2, -1), (1, 1)],
        edges: &[(0, 1), (1, 2), (2, 3)],
    },
    RuleSeed {
        key: "reduced-zero",
        vertices: &[(2, -2), (1, 0), (1, 0), (2, -1), (1, -1)],
        edges: &[(0, 1), (0, 2), (0, 3), (3, 4)],
    },
    RuleSeed {
        key: "reduced-zero",
        vertices: &[(1, -2), (2, -2), (2, -2), (1, 0), (2, -1), (1, 0)],
        edges: &[(0, 4), (1, 2), (1, 3), (1, 5), (2, 4)],
    },
    RuleSeed {
        key: "reduced-zero",
        vertices: &[(1, 0), (1, -1), (2, -2), (1, 0), (1, 0)],
        edges: &[(0, 2), (1, 2), (2, 3), (2, 4)],
    },
    RuleSeed {
        key: "reduced-zero",
        vertices: &[(1, 2), (2, -1), (1, -2), (1, -1)],
        edges: &[(0, 1), (1, 2), (1, 3)],
    },
    RuleSeed {
        key: "reduced-zero",
        vertices: &[(2, -2), (2, -1), (1, -2), (1, 2), (1, -2)],
        edges: &[(0, 1), (0, 3), (0, 4), (1, 2)],
    },
    RuleSeed {
        key: "double-zero",
        vertices: &[(2, -2), (1, 0), (1, -1), (2, 0)],
        edges: &[(0, 1), (0, 2), (0, 3)],
    },
    RuleSeed {
        key: "double-zero",
        vertices: &[(1, -1), (2, -2), (2, -1), (2, 0)],
        edges: &[(0, 2), (1, 2), (1, 3)],
    },
    RuleSeed {
        key: "double-zero",
        vertices: &[(1, -2), (2, -2), (2, -1), (2, 0), (2, -2)],
        edges: &[(0, 2), (1, 2), (1, 4), (3, 4)],
    },
    RuleSeed {
        key: "excluded",
        vertices: &[(1, -1), (1, -1), (2, -2), (2, -2), (2, -2), (2, -2), (1, -1), (1, -1)],
        edges: &[(0, 5), (1, 5), (2, 3), (2, 6), (2, 7), (3, 4), (4, 5)],
    },
];
