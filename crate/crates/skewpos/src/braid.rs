//! Positive braid words on `k` strands.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{BoxRef, SkewDiagram};
use crate::error::{Error, Result};
use crate::permutations::word_to_one_line;

/// Word in `σ_1, …, σ_{k-1}`, optionally split into column factors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidWord {
    pub k: usize,
    pub letters: Vec<usize>,
    pub columns: Vec<Vec<usize>>,
}

impl BraidWord {
    pub fn new(k: usize, columns: Vec<Vec<usize>>) -> Result<Self> {
        let letters: Vec<usize> = columns.iter().flatten().copied().collect();
        if let Some(&s) = letters.iter().find(|&&s| s == 0 || s >= k) {
            return Err(Error::InvalidPermutation(format!("σ_{s} out of range for {k} strands")));
        }
        Ok(BraidWord { k, letters, columns })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Image in the symmetric group `S_k`.
    pub fn permutation(&self) -> Vec<usize> {
        word_to_one_line(self.k, &self.letters).expect("letters are in range")
    }

    /// Concatenation, keeping the column factors of both words.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.k, other.k, "braids on different strand counts");
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        BraidWord::new(self.k, columns).expect("letters already validated")
    }

    /// Letters with empty column factors dropped; equality of braid words
    /// compares these.
    pub fn nonempty_columns(&self) -> Vec<Vec<usize>> {
        self.columns.iter().filter(|c| !c.is_empty()).cloned().collect()
    }
}

impl fmt::Display for BraidWord {
    /// `s4 s3 | s3 s2 | …`, empty column factors omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .nonempty_columns()
            .iter()
            .map(|c| c.iter().map(|s| format!("s{s}")).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", cols.join(" | "))
    }
}

/// Braid boxes in the order of the crossings of `β_{λ/μ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingMap {
    pub boxes: Vec<BoxRef>,
}

/// `β_{λ/μ} = C_1 ⋯ C_{n-k}` where the factor for column `a` (`j = n-k+1-a`
/// from the left) is `σ_{λ̄_a-1} σ_{λ̄_a-2} ⋯ σ_{μ̄_a+1}`; the crossing `σ_i` in
/// column `a` is the braid box `(a, i)`.
pub fn beta(d: &SkewDiagram) -> (BraidWord, CrossingMap) {
    let mut columns = Vec::with_capacity(d.width());
    let mut boxes = Vec::new();
    for a in (1..=d.width()).rev() {
        let lo = d.mu_bar(a) + 1;
        let hi = d.lambda_bar(a);
        let col: Vec<usize> = (lo..hi).rev().collect();
        boxes.extend(col.iter().map(|&i| BoxRef::new(a, i)));
        columns.push(col);
    }
    let word = BraidWord::new(d.k(), columns).expect("crossings lie below the top strand");
    (word, CrossingMap { boxes })
}

/// Positive lift of the longest element: `(σ_{k-1}⋯σ_1)(σ_{k-1}⋯σ_2)⋯(σ_{k-1})`.
pub fn half_twist(k: usize) -> BraidWord {
    let columns = (1..k).map(|lo| (lo..k).rev().collect()).collect();
    BraidWord::new(k, columns).expect("letters in range")
}

/// `(β_L, β_R)` for the two halves of `cut(d, a)`.
pub fn cut_braid(d: &SkewDiagram, a: usize) -> Result<(BraidWord, BraidWord)> {
    let (left, right) = d.cut(a)?;
    Ok((beta(&left).0, beta(&right).0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intro_braid() {
        let d = SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![3, 1]).unwrap();
        let (b, cm) = beta(&d);
        assert_eq!(b.to_string(), "s4 s3 | s3 s2 | s3 s2 | s2 s1 | s2 s1 | s1 | s1");
        assert_eq!(cm.boxes.len(), b.len());
        assert_eq!(cm.boxes[0], BoxRef::new(7, 4));
    }

    #[test]
    fn empty_skew_gives_empty_word() {
        let d = SkewDiagram::from_parts(6, 3, vec![2, 1], vec![2, 1]).unwrap();
        assert!(beta(&d).0.is_empty());
    }

    #[test]
    fn small_full_braid() {
        // λ=(2,1), k=2, n=4: columns from the left have heights 2 and 1.
        let d = SkewDiagram::from_parts(4, 2, vec![2, 1], vec![]).unwrap();
        let (b, _) = beta(&d);
        assert_eq!(b.columns, vec![vec![1], vec![]]);
    }

    #[test]
    fn half_twists() {
        assert_eq!(half_twist(2).letters, vec![1]);
        assert_eq!(half_twist(3).letters, vec![2, 1, 2]);
        let h = half_twist(5);
        assert_eq!(h.len(), 10);
        assert_eq!(h.permutation(), vec![5, 4, 3, 2, 1]);
    }

    #[test]
    fn out_of_range_letter() {
        assert!(BraidWord::new(3, vec![vec![3]]).is_err());
    }
}
