//! Cut of the intro diagram at column 6, checked against closed formulas
//! for the three new columns of the right matrix.

use skewpos::splicing::{in_u_a, left_point, right_point, right_point_raw};
use skewpos::variety::{membership, sample};
use skewpos::{PointV, Rat, SkewDiagram};

fn intro() -> SkewDiagram {
    SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![3, 1]).unwrap()
}

fn axpy(c: &Rat, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
    x.iter().zip(y).map(|(a, b)| c * a + b).collect()
}

fn scale(c: &Rat, x: &[Rat]) -> Vec<Rat> {
    x.iter().map(|a| c * a).collect()
}

/// Points of the intro diagram in `U_6`, with seeds.
fn points_in_u6(count: usize) -> Vec<PointV> {
    let d = intro();
    (1..)
        .map(|s| sample(&d, s, 100, false).unwrap())
        .filter(|p| in_u_a(p, 6).unwrap())
        .take(count)
        .collect()
}

#[test]
fn new_columns_match_formulas() {
    for p in points_in_u6(20) {
        let m = |c: &[usize]| p.minor(c);
        let v = |j: usize| p.column(j);
        let raw = right_point_raw(&p, 6).unwrap();

        let u7 = scale(&(m(&[5, 8, 10, 11, 12]) / m(&[5, 7, 10, 11, 12])), &v(7));
        assert_eq!(raw.column(7), u7, "seed {:?}", p.seed());

        let den = m(&[5, 7, 8, 11, 12]);
        let mut u8 = v(10);
        u8 = axpy(&-(m(&[5, 7, 8, 10, 12]) / &den), &v(11), &u8);
        u8 = axpy(&-(m(&[5, 7, 8, 11, 10]) / &den), &v(12), &u8);
        assert_eq!(raw.column(8), u8, "seed {:?}", p.seed());
        // Same vector from the other side of the intersection.
        let mut u8_left = scale(&(m(&[10, 7, 8, 11, 12]) / &den), &v(5));
        u8_left = axpy(&(m(&[5, 10, 8, 11, 12]) / &den), &v(7), &u8_left);
        u8_left = axpy(&(m(&[5, 7, 10, 11, 12]) / &den), &v(8), &u8_left);
        assert_eq!(u8, u8_left);

        let den9 = m(&[5, 7, 8, 9, 12]);
        let u9 = axpy(&(m(&[5, 7, 8, 11, 9]) / &den9), &v(12), &v(11));
        assert_eq!(raw.column(9), u9, "seed {:?}", p.seed());
        let mut u9_left = scale(&(m(&[5, 7, 8, 11, 12]) / &den9), &v(9));
        for (c, j) in [(m(&[9, 7, 8, 11, 12]), 5), (m(&[5, 9, 8, 11, 12]), 7), (m(&[5, 7, 9, 11, 12]), 8)] {
            u9_left = axpy(&-(c / &den9), &v(j), &u9_left);
        }
        assert_eq!(u9, u9_left);

        for j in 1..=6 {
            assert_eq!(raw.column(j), v(j));
        }
        assert_eq!(raw.column(10), v(12));
    }
}

#[test]
fn left_matrix_columns() {
    for p in points_in_u6(20) {
        let l = left_point(&p, 6).unwrap();
        for (j, src) in [5, 7, 8, 9, 10, 11, 12].into_iter().enumerate() {
            assert_eq!(l.column(j + 1), p.column(src));
        }
        assert!(membership(l.matrix(), l.diagram()));
        let r = right_point(&p, 6).unwrap();
        assert!(membership(r.matrix(), r.diagram()));
    }
}
