//! Frozen tables for the three worked diagrams.

use skewpos::braid::beta;
use skewpos::cluster::quiver;
use skewpos::BoxRef;

mod common;
use common::*;

#[test]
fn running_long_labels() {
    let d = running();
    check_grid(&d, &RUNNING_LONG, |b| d.long_label(b).unwrap());
    assert_eq!(d.i_mu(), set("5,6,8,11,12"));
}

#[test]
fn running_short_labels() {
    let d = running();
    check_grid(&d, &RUNNING_SHORT, |b| d.short_label(b).unwrap());
}

#[test]
fn intro_labels_and_cut() {
    let d = intro();
    check_grid(&d, &INTRO_LONG, |b| d.long_label(b).unwrap());
    assert_eq!(d.i_mu(), set("5,8,10,11,12"));
    let (left, right) = d.cut(6).unwrap();
    assert_eq!((left.n(), right.n()), (7, 10));
    check_grid(&right, &INTRO_RIGHT, |b| right.long_label(b).unwrap());
    assert_eq!(right.i_mu(), set("5,7,8,9,10"));
    check_grid(&left, &INTRO_LEFT, |b| left.long_label(b).unwrap());
    assert_eq!(left.i_mu(), set("1,3,5,6,7"));
}

#[test]
fn running_necklace_and_permutation() {
    let bad = necklace_mismatches(&running(), &RUNNING_NECKLACE, &RUNNING_F);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn disconnected_necklace_and_permutation() {
    let bad = necklace_mismatches(&disconnected(), &DISCONNECTED_NECKLACE, &DISCONNECTED_F);
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn disconnected_ribbon_and_labels() {
    let d = disconnected();
    check_grid(&d, &DISCONNECTED_LONG, |b| d.long_label(b).unwrap());
    assert_eq!(d.i_mu(), set("3,4,8,9"));
    let rib = d.ribbon();
    assert_eq!((rib.r.len(), rib.rbar.len()), (6, 2));
}

#[test]
fn intro_braid_word() {
    let (b, _) = beta(&intro());
    assert_eq!(b.nonempty_columns(), vec![vec![4, 3], vec![3, 2], vec![3, 2], vec![2, 1], vec![2, 1], vec![1], vec![1]]);
}

#[test]
fn mutable_vertices() {
    let d = running();
    let got: Vec<Vec<usize>> = quiver(&d).mutable().iter().map(|&b| d.long_label(b).unwrap()).collect();
    let mut want: Vec<Vec<usize>> =
        ["4,6,8,11,12", "3,6,8,11,12", "2,6,8,11,12", "4,5,8,11,12"].iter().map(|s| set(s)).collect();
    let mut got_sorted = got.clone();
    got_sorted.sort();
    want.sort();
    assert_eq!(got_sorted, want);

    let d = intro();
    let mutable: Vec<BoxRef> = quiver(&d).mutable();
    let want: Vec<BoxRef> =
        [(2, 1), (3, 1), (4, 1), (4, 2), (5, 2), (6, 2), (6, 3), (7, 3)].iter().map(|&(a, i)| BoxRef::new(a, i)).collect();
    let mut m = mutable.clone();
    m.sort();
    let mut w = want.clone();
    w.sort();
    assert_eq!(m, w);
}
