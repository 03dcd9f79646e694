//! Worked diagrams and their frozen label tables, shared by the table tests
//! and the acceptance run.

#![allow(dead_code)]

use skewpos::{BoxRef, SkewDiagram};

pub fn running() -> SkewDiagram {
    SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![3, 3, 2]).unwrap()
}

pub fn intro() -> SkewDiagram {
    SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![3, 1]).unwrap()
}

pub fn disconnected() -> SkewDiagram {
    SkewDiagram::from_parts(9, 4, vec![5, 5, 2, 2], vec![3, 3]).unwrap()
}

pub fn set(s: &str) -> Vec<usize> {
    s.split(',').map(|x| x.parse().unwrap()).collect()
}

/// Mismatches between a `(a, i, label)` table and `label`; every box of the
/// diagram must appear in the table.
pub fn grid_mismatches(d: &SkewDiagram, grid: &[(usize, usize, &str)], label: impl Fn(BoxRef) -> Vec<usize>) -> Vec<String> {
    let mut bad = Vec::new();
    if grid.len() != d.boxes().len() {
        bad.push(format!("{d}: table has {} boxes, diagram has {}", grid.len(), d.boxes().len()));
    }
    for &(a, i, s) in grid {
        let b = BoxRef::new(a, i);
        if !d.contains(b) {
            bad.push(format!("{b} not in {d}"));
        } else if label(b) != set(s) {
            bad.push(format!("{d} box {b}: got {:?}, table {s}", label(b)));
        }
    }
    bad
}

pub fn check_grid(d: &SkewDiagram, grid: &[(usize, usize, &str)], label: impl Fn(BoxRef) -> Vec<usize>) {
    let bad = grid_mismatches(d, grid, label);
    assert!(bad.is_empty(), "{bad:?}");
}

pub const RUNNING_LONG: [(usize, usize, &str); 15] = [
    (1, 1, "1,6,8,11,12"),
    (2, 1, "2,6,8,11,12"),
    (3, 1, "3,6,8,11,12"),
    (4, 1, "4,6,8,11,12"),
    (1, 2, "1,2,8,11,12"),
    (2, 2, "2,3,8,11,12"),
    (3, 2, "3,4,8,11,12"),
    (4, 2, "4,5,8,11,12"),
    (3, 3, "3,4,5,11,12"),
    (4, 3, "4,5,6,11,12"),
    (5, 3, "5,6,7,11,12"),
    (5, 4, "5,6,7,8,12"),
    (6, 4, "5,6,8,9,12"),
    (7, 4, "5,6,8,10,12"),
    (7, 5, "5,6,8,10,11"),
];

pub const RUNNING_SHORT: [(usize, usize, &str); 15] = [
    (1, 1, "1"),
    (2, 1, "2"),
    (3, 1, "3"),
    (4, 1, "4"),
    (1, 2, "1,2"),
    (2, 2, "2,3"),
    (3, 2, "3,4"),
    (4, 2, "4,5"),
    (3, 3, "3,4,5"),
    (4, 3, "4,5,6"),
    (5, 3, "5,6,7"),
    (5, 4, "5,6,7,8"),
    (6, 4, "5,6,8,9"),
    (7, 4, "5,6,8,10"),
    (7, 5, "5,6,8,10,11"),
];

pub const INTRO_LONG: [(usize, usize, &str); 19] = [
    (1, 1, "1,8,10,11,12"),
    (2, 1, "2,8,10,11,12"),
    (3, 1, "3,8,10,11,12"),
    (4, 1, "4,8,10,11,12"),
    (1, 2, "1,2,10,11,12"),
    (2, 2, "2,3,10,11,12"),
    (3, 2, "3,4,10,11,12"),
    (4, 2, "4,5,10,11,12"),
    (5, 2, "5,6,10,11,12"),
    (6, 2, "5,7,10,11,12"),
    (3, 3, "3,4,5,11,12"),
    (4, 3, "4,5,6,11,12"),
    (5, 3, "5,6,7,11,12"),
    (6, 3, "5,7,8,11,12"),
    (7, 3, "5,8,9,11,12"),
    (5, 4, "5,6,7,8,12"),
    (6, 4, "5,7,8,9,12"),
    (7, 4, "5,8,9,10,12"),
    (7, 5, "5,8,9,10,11"),
];

/// Right half of the intro diagram cut at column 6; the box `(5,4)` is
/// printed with a stray `12` in the source table, `10` is the value in `[10]`.
pub const INTRO_RIGHT: [(usize, usize, &str); 13] = [
    (1, 1, "1,7,8,9,10"),
    (2, 1, "2,7,8,9,10"),
    (3, 1, "3,7,8,9,10"),
    (4, 1, "4,7,8,9,10"),
    (1, 2, "1,2,8,9,10"),
    (2, 2, "2,3,8,9,10"),
    (3, 2, "3,4,8,9,10"),
    (4, 2, "4,5,8,9,10"),
    (5, 2, "5,6,8,9,10"),
    (3, 3, "3,4,5,9,10"),
    (4, 3, "4,5,6,9,10"),
    (5, 3, "5,6,7,9,10"),
    (5, 4, "5,6,7,8,10"),
];

pub const INTRO_LEFT: [(usize, usize, &str); 6] = [
    (1, 2, "1,2,5,6,7"),
    (1, 3, "1,2,3,6,7"),
    (2, 3, "1,3,4,6,7"),
    (1, 4, "1,2,3,4,7"),
    (2, 4, "1,3,4,5,7"),
    (2, 5, "1,3,4,5,6"),
];

pub const RUNNING_NECKLACE: [&str; 12] = [
    "1,6,8,11,12",
    "1,2,8,11,12",
    "2,3,8,11,12",
    "3,4,8,11,12",
    "3,4,5,11,12",
    "4,5,6,11,12",
    "5,6,7,11,12",
    "5,6,7,8,12",
    "5,6,8,9,12",
    "5,6,8,10,12",
    "5,6,8,10,11",
    "5,6,8,11,12",
];

pub const RUNNING_F: [(i64, i64); 12] =
    [(1, 3), (2, 4), (3, 6), (4, 7), (7, 9), (9, 10), (10, 12), (6, 14), (8, 17), (11, 20), (12, 23), (5, 13)];

pub const DISCONNECTED_NECKLACE: [&str; 9] =
    ["1,4,8,9", "1,2,8,9", "2,3,8,9", "3,4,8,9", "3,4,8,9", "3,4,6,9", "3,4,6,7", "3,4,7,8", "3,4,8,9"];

pub const DISCONNECTED_F: [(i64, i64); 9] = [(1, 3), (2, 4), (5, 5), (6, 8), (7, 9), (3, 10), (4, 11), (8, 15), (9, 16)];

pub const DISCONNECTED_LONG: [(usize, usize, &str); 8] = [
    (1, 1, "1,4,8,9"),
    (1, 2, "1,2,8,9"),
    (2, 1, "2,4,8,9"),
    (2, 2, "2,3,8,9"),
    (4, 3, "3,4,6,9"),
    (4, 4, "3,4,6,7"),
    (5, 3, "3,4,7,9"),
    (5, 4, "3,4,7,8"),
];

/// Mismatches between a necklace/permutation pair and the tables.
pub fn necklace_mismatches(d: &SkewDiagram, neck: &[&str], f: &[(i64, i64)]) -> Vec<String> {
    let got = skewpos::permutations::necklace(d);
    let perm = skewpos::permutations::baf(d);
    let mut bad = Vec::new();
    for (i, s) in neck.iter().enumerate() {
        if got.entry(i + 1) != set(s).as_slice() {
            bad.push(format!("I_{}: got {:?}, table {s}", i + 1, got.entry(i + 1)));
        }
    }
    for &(x, y) in f {
        if perm.eval(x) != y {
            bad.push(format!("f({x}) = {}, table {y}", perm.eval(x)));
        }
    }
    bad
}
