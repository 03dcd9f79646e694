//! Lattice model of the plabic graph: trips, trip permutation and source labels.
//!
//! Lattice coordinates put the south-west corner of the rectangle at `(0, 0)`;
//! box `(a, i)` is the unit cell `[n-k-a, n-k-a+1] × [i-1, i]`. Boundary edges
//! are the steps of the boundary path of `λ`, numbered `1..=n` from the
//! south-east corner.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{BoxRef, SkewDiagram};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeTrip {
    pub source: usize,
    pub target: usize,
    /// Lattice vertices visited, starting at the far end of the source edge.
    pub points: Vec<(i64, i64)>,
    pub orientation: Orientation,
    /// Boxes of `λ/μ` receiving the label `source`.
    pub labeled: Vec<BoxRef>,
    /// Whether the south-west region (containing `μ`) receives the label.
    pub labels_mu_region: bool,
}

impl LatticeTrip {
    pub fn is_lollipop(&self) -> bool {
        self.source == self.target
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Dir {
    Down,
    Left,
    Up,
    Right,
}

struct Lattice<'d> {
    d: &'d SkewDiagram,
    w: i64,
}

impl<'d> Lattice<'d> {
    fn new(d: &'d SkewDiagram) -> Self {
        Lattice { d, w: d.width() as i64 }
    }

    /// Box whose lower-left lattice corner is `(x, y)`, in `(a, i)` form.
    fn cell(&self, x: i64, y: i64) -> (i64, i64) {
        (self.w - x, y + 1)
    }

    /// `μ` extended by the phantom column left of the rectangle and the
    /// phantom row below it.
    fn in_mu_ext(&self, x: i64, y: i64) -> bool {
        let (a, i) = self.cell(x, y);
        if a == self.w + 1 || i == 0 {
            return true;
        }
        if a < 1 || a > self.w || i < 1 || i > self.d.k() as i64 {
            return false;
        }
        self.d.in_mu(BoxRef::new(a as usize, i as usize))
    }

    fn in_lambda(&self, x: i64, y: i64) -> bool {
        let (a, i) = self.cell(x, y);
        a >= 1 && a <= self.w && i >= 1 && i <= self.d.k() as i64 && self.d.in_lambda(BoxRef::new(a as usize, i as usize))
    }

    /// Cells on either side of the unit segment leaving `(x, y)` in `dir`.
    fn sides(&self, x: i64, y: i64, dir: Dir) -> [(i64, i64); 2] {
        match dir {
            Dir::Down => [(x - 1, y - 1), (x, y - 1)],
            Dir::Up => [(x - 1, y), (x, y)],
            Dir::Left => [(x - 1, y - 1), (x - 1, y)],
            Dir::Right => [(x, y - 1), (x, y)],
        }
    }

    fn interior_of_mu(&self, x: i64, y: i64, dir: Dir) -> bool {
        self.sides(x, y, dir).iter().all(|&(cx, cy)| self.in_mu_ext(cx, cy))
    }

    /// Vertices of the boundary path of `λ` from the south-east to the
    /// north-west corner; step `j` joins vertex `j-1` to vertex `j`.
    fn lambda_path(&self) -> Vec<(i64, i64)> {
        let mut pts = vec![(self.w, 0)];
        let (mut x, mut y) = (self.w, 0);
        let k = self.d.k() as i64;
        while (x, y) != (0, k) {
            // Go up while the box to the upper-left is in λ, else go left.
            if y < k && x > 0 && self.in_lambda(x - 1, y) {
                y += 1;
            } else if x > 0 {
                x -= 1;
            } else {
                y += 1;
            }
            pts.push((x, y));
        }
        pts
    }
}

fn step(p: (i64, i64), dir: Dir) -> (i64, i64) {
    match dir {
        Dir::Down => (p.0, p.1 - 1),
        Dir::Up => (p.0, p.1 + 1),
        Dir::Left => (p.0 - 1, p.1),
        Dir::Right => (p.0 + 1, p.1),
    }
}

/// Trip from boundary edge `j`: a down-left staircase to the boundary of `μ`,
/// a reflection, then straight north or east to the boundary of `λ`.
pub fn trip(d: &SkewDiagram, j: usize) -> Result<LatticeTrip> {
    let n = d.n();
    if j == 0 || j > n {
        return Err(Error::Precondition(format!("boundary edge {j} outside 1..={n}")));
    }
    let lat = Lattice::new(d);
    let path = lat.lambda_path();
    // The source edge is entered from outside: southward if vertical,
    // westward if horizontal.
    let vertical = path[j].1 > path[j - 1].1;
    let start_idx = if vertical { j } else { j - 1 };
    let (start, mut cur) = (path[start_idx], path[2 * j - 1 - start_idx]);
    let mut next = if vertical { Dir::Left } else { Dir::Down };
    let mut points = vec![start, cur];
    let cap = 4 * d.k() * d.width() + 8;
    let mut straight = None;
    for _ in 0..cap {
        if lat.interior_of_mu(cur.0, cur.1, next) {
            straight = Some(if next == Dir::Down { Dir::Up } else { Dir::Right });
            break;
        }
        cur = step(cur, next);
        points.push(cur);
        next = if next == Dir::Down { Dir::Left } else { Dir::Down };
    }
    let straight =
        straight.ok_or_else(|| Error::Degenerate(format!("trip {j} on {d} does not reach μ in {cap} steps")))?;
    for _ in 0..cap {
        // North: the cell to the right of the segment; east: the cell above.
        // Both have their lower-left corner at `cur`.
        if !lat.in_lambda(cur.0, cur.1) {
            break;
        }
        cur = step(cur, straight);
        points.push(cur);
    }
    let end_idx = path
        .iter()
        .position(|&p| p == cur)
        .ok_or_else(|| Error::Degenerate(format!("trip {j} on {d} ends off the boundary at {cur:?}")))?;
    // North-going trips land on the left end of a horizontal step, east-going
    // ones on the lower end of a vertical step.
    let target = if straight == Dir::Up { end_idx } else { end_idx + 1 };
    if target == 0 || target > n {
        return Err(Error::Degenerate(format!("trip {j} on {d} ends at corner {cur:?}")));
    }
    let closure: Vec<(i64, i64)> = if end_idx >= start_idx {
        path[start_idx + 1..end_idx].iter().rev().copied().collect()
    } else {
        path[end_idx + 1..start_idx].to_vec()
    };
    let mut poly = points.clone();
    poly.extend(closure);
    let area2 = shoelace2(&poly);
    let orientation = match area2.signum() {
        -1 => Orientation::Clockwise,
        1 => Orientation::Counterclockwise,
        _ if d.i_mu().contains(&j) => Orientation::Counterclockwise,
        _ => Orientation::Clockwise,
    };
    let labeled: Vec<BoxRef> = d
        .boxes()
        .into_iter()
        .filter(|b| {
            let cx = 2 * (lat.w - b.a as i64) + 1;
            let cy = 2 * (b.i as i64 - 1) + 1;
            let inside = winding(&poly, (cx, cy)) != 0;
            inside == (orientation == Orientation::Clockwise)
        })
        .collect();
    Ok(LatticeTrip {
        source: j,
        target,
        points,
        orientation,
        labeled,
        labels_mu_region: orientation == Orientation::Counterclockwise,
    })
}

fn shoelace2(poly: &[(i64, i64)]) -> i64 {
    let m = poly.len();
    (0..m).map(|t| {
        let (p, q) = (poly[t], poly[(t + 1) % m]);
        p.0 * q.1 - q.0 * p.1
    })
    .sum()
}

/// Winding number of the closed polygon around `c`, with the polygon in
/// lattice units and `c` in doubled units.
fn winding(poly: &[(i64, i64)], c: (i64, i64)) -> i64 {
    let m = poly.len();
    let mut wn = 0;
    for t in 0..m {
        let (p, q) = (poly[t], poly[(t + 1) % m]);
        let (px, py, qx, qy) = (2 * p.0, 2 * p.1, 2 * q.0, 2 * q.1);
        // Only vertical segments cross the horizontal ray to the right of c.
        if px == qx && px > c.0 && (py.min(qy) < c.1 && c.1 < py.max(qy)) {
            wn += if qy > py { 1 } else { -1 };
        }
    }
    wn
}

/// All `n` trips.
pub fn trips(d: &SkewDiagram) -> Result<Vec<LatticeTrip>> {
    (1..=d.n()).map(|j| trip(d, j)).collect()
}

/// Trip permutation: `targets[j-1]` is where trip `j` ends; fixed points
/// carry the orientation of their lollipop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripPermutation {
    pub targets: Vec<usize>,
    pub decorations: BTreeMap<usize, Orientation>,
}

pub fn trip_permutation(d: &SkewDiagram) -> Result<TripPermutation> {
    let ts = trips(d)?;
    Ok(TripPermutation {
        targets: ts.iter().map(|t| t.target).collect(),
        decorations: ts.iter().filter(|t| t.is_lollipop()).map(|t| (t.source, t.orientation)).collect(),
    })
}

/// Source labels of the boxes and of the south-west region.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SourceLabels {
    pub boxes: BTreeMap<BoxRef, Vec<usize>>,
    pub mu_region: Vec<usize>,
}

pub fn source_labels(d: &SkewDiagram) -> Result<SourceLabels> {
    let mut boxes: BTreeMap<BoxRef, Vec<usize>> = d.boxes().into_iter().map(|b| (b, Vec::new())).collect();
    let mut mu_region = Vec::new();
    for t in trips(d)? {
        for b in &t.labeled {
            boxes.get_mut(b).expect("labeled boxes lie in λ/μ").push(t.source);
        }
        if t.labels_mu_region {
            mu_region.push(t.source);
        }
    }
    Ok(SourceLabels { boxes, mu_region })
}

/// Text grid of the diagram, top row first; `μ` cells show `.` and cells
/// outside `λ` are blank.
pub fn render_ascii(d: &SkewDiagram, labels: &SourceLabels) -> String {
    let text = |b: BoxRef| -> String {
        labels.boxes.get(&b).map(|l| l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).unwrap_or_default()
    };
    let width = d.boxes().into_iter().map(|b| text(b).len()).max().unwrap_or(1).max(1);
    let mut s = String::new();
    for i in (1..=d.k()).rev() {
        let cells: Vec<String> = (1..=d.width())
            .rev()
            .map(|a| {
                let b = BoxRef::new(a, i);
                let body = if d.in_mu(b) {
                    ".".to_string()
                } else if d.in_lambda(b) {
                    text(b)
                } else {
                    String::new()
                };
                format!("{body:^width$}")
            })
            .collect();
        let _ = writeln!(s, "|{}|", cells.join("|"));
    }
    let _ = writeln!(s, "μ region: {}", labels.mu_region.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> SkewDiagram {
        SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![3, 3, 2]).unwrap()
    }

    #[test]
    fn lambda_path_has_n_steps() {
        let d = running();
        let lat = Lattice::new(&d);
        let p = lat.lambda_path();
        assert_eq!(p.len(), 13);
        assert_eq!(p[0], (7, 0));
        assert_eq!(p[12], (0, 5));
    }

    #[test]
    fn trip_four() {
        let t = trip(&running(), 4).unwrap();
        assert_eq!(t.orientation, Orientation::Clockwise);
        assert_eq!(t.target, 7);
        let mut got = t.labeled.clone();
        got.sort();
        let mut want: Vec<BoxRef> =
            [(4, 1), (4, 2), (4, 3), (3, 2), (3, 3)].iter().map(|&(a, i)| BoxRef::new(a, i)).collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn trip_five() {
        let t = trip(&running(), 5).unwrap();
        assert_eq!(t.orientation, Orientation::Counterclockwise);
        assert_eq!(t.target, 1);
        assert_eq!(t.labeled.len(), 8);
        assert!(t.labels_mu_region);
    }

    #[test]
    fn full_mu_has_only_the_mu_region() {
        let d = SkewDiagram::from_parts(6, 3, vec![2, 1], vec![2, 1]).unwrap();
        let l = source_labels(&d).unwrap();
        assert!(l.boxes.is_empty());
        assert_eq!(l.mu_region, d.i_mu());
    }

    #[test]
    fn agrees_with_labels_and_permutation() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let d = SkewDiagram::random(&mut rng, 2, 10);
            let l = source_labels(&d).unwrap();
            assert_eq!(l.mu_region, d.i_mu(), "{d}");
            for (b, lab) in &l.boxes {
                assert_eq!(lab, &d.long_label(*b).unwrap(), "{d} {b:?}");
            }
            let f = crate::permutations::baf(&d);
            let tp = trip_permutation(&d).unwrap();
            for j in 1..=d.n() {
                let fj = f.eval(j as i64);
                assert_eq!(tp.targets[j - 1] as i64, (fj - 1).rem_euclid(d.n() as i64) + 1, "{d} {j}");
                if fj == j as i64 || fj == (j + d.n()) as i64 {
                    let ccw = tp.decorations[&j] == Orientation::Counterclockwise;
                    assert_eq!(ccw, fj > j as i64, "{d} {j}");
                }
            }
        }
    }
}
