//! Partitions, skew diagrams in a `k × (n-k)` rectangle, box labels and the
//! boundary ribbon.
//!
//! Columns are counted from the right (`a = 1..=n-k`) and rows from the bottom
//! (`i = 1..=k`). The matrix column attached to the south and east edges of
//! box `(a, i)` is `a + i - 1`; that translation lives in this module only.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` for `i ≥ 1`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "partition parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition {
            parts: (1..=width)
                .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
                .collect(),
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Box `(a, i)`: column `a` from the right, row `i` from the bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxRef {
    pub a: usize,
    pub i: usize,
}

impl BoxRef {
    pub const fn new(a: usize, i: usize) -> Self {
        BoxRef { a, i }
    }

    /// Label `a + i - 1` carried by the south and east edges of the box.
    pub fn diagonal(&self) -> usize {
        self.a + self.i - 1
    }

    /// Identifier used in DOT output.
    pub fn id(&self) -> String {
        format!("a{}i{}", self.a, self.i)
    }
}

impl fmt::Display for BoxRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.i)
    }
}

/// Wire form of a skew diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub n: usize,
    pub k: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

/// Skew diagram `λ/μ` inside the `k × (n-k)` rectangle.
///
/// `k = n` is allowed: it is the zero-width diagram produced by cutting at
/// the rightmost column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "DiagramJson", into = "DiagramJson")]
pub struct SkewDiagram {
    n: usize,
    k: usize,
    lambda: Partition,
    mu: Partition,
    lambda_bar: Vec<usize>,
    mu_bar: Vec<usize>,
}

impl TryFrom<DiagramJson> for SkewDiagram {
    type Error = Error;
    fn try_from(d: DiagramJson) -> Result<Self> {
        SkewDiagram::from_parts(d.n, d.k, d.lambda, d.mu)
    }
}

impl From<SkewDiagram> for DiagramJson {
    fn from(d: SkewDiagram) -> Self {
        DiagramJson {
            n: d.n,
            k: d.k,
            lambda: d.lambda.parts.clone(),
            mu: d.mu.parts.clone(),
        }
    }
}

/// Boxes of the boundary ribbon, split by membership in `λ/μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonDecomposition {
    /// Ribbon boxes in `λ/μ`; these are the frozen boxes.
    pub r: BTreeSet<BoxRef>,
    /// Ribbon boxes inside `μ`.
    pub rbar: BTreeSet<BoxRef>,
    /// Top box of every non-empty column.
    pub r1: BTreeSet<BoxRef>,
}

impl SkewDiagram {
    pub fn new(n: usize, k: usize, lambda: Partition, mu: Partition) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidDiagram(format!("need 0 < k <= n, got k={k}, n={n}")));
        }
        let w = n - k;
        if lambda.len() > k {
            return Err(Error::InvalidDiagram(format!("λ={lambda} has more than k={k} parts")));
        }
        if lambda.part(1) > w {
            return Err(Error::InvalidDiagram(format!("λ_1={} exceeds n-k={w}", lambda.part(1))));
        }
        if let Some(i) = (1..=k).find(|&i| mu.part(i) > lambda.part(i)) {
            return Err(Error::InvalidDiagram(format!(
                "μ_{i}={} exceeds λ_{i}={} (μ not contained in λ at row {i})",
                mu.part(i),
                lambda.part(i)
            )));
        }
        if mu.len() > k {
            return Err(Error::InvalidDiagram(format!("μ={mu} has more than k={k} parts")));
        }
        let lt = lambda.conjugate();
        let mt = mu.conjugate();
        let col = |p: &Partition, a: usize| if w + 1 - a <= p.len() { p.part(w + 1 - a) } else { 0 };
        let lambda_bar = (1..=w).map(|a| col(&lt, a)).collect();
        let mu_bar = (1..=w).map(|a| col(&mt, a)).collect();
        Ok(SkewDiagram {
            n,
            k,
            lambda,
            mu,
            lambda_bar,
            mu_bar,
        })
    }

    pub fn from_parts(n: usize, k: usize, lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self> {
        Self::new(n, k, Partition::new(lambda)?, Partition::new(mu)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: DiagramJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        raw.try_into()
    }

    pub fn to_json(&self) -> DiagramJson {
        self.clone().into()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of columns `n - k`.
    pub fn width(&self) -> usize {
        self.n - self.k
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// `λ̄_a`, height of column `a` of `λ`.
    pub fn lambda_bar(&self, a: usize) -> usize {
        self.lambda_bar[a - 1]
    }

    /// `μ̄_a`, height of column `a` of `μ`.
    pub fn mu_bar(&self, a: usize) -> usize {
        self.mu_bar[a - 1]
    }

    /// `(μ̄, λ̄)` indexed by `a = 1..=n-k`.
    pub fn column_heights(&self) -> (Vec<usize>, Vec<usize>) {
        (self.mu_bar.clone(), self.lambda_bar.clone())
    }

    pub fn size(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    pub fn column_is_empty(&self, a: usize) -> bool {
        self.mu_bar(a) == self.lambda_bar(a)
    }

    fn in_rect(&self, b: BoxRef) -> bool {
        (1..=self.width()).contains(&b.a) && (1..=self.k).contains(&b.i)
    }

    pub fn in_lambda(&self, b: BoxRef) -> bool {
        self.in_rect(b) && b.i <= self.lambda_bar(b.a)
    }

    pub fn in_mu(&self, b: BoxRef) -> bool {
        self.in_rect(b) && b.i <= self.mu_bar(b.a)
    }

    /// `μ̄_a < i ≤ λ̄_a`.
    pub fn contains(&self, b: BoxRef) -> bool {
        self.in_rect(b) && self.mu_bar(b.a) < b.i && b.i <= self.lambda_bar(b.a)
    }

    /// Boxes of `λ/μ` ordered by column, then row.
    pub fn boxes(&self) -> Vec<BoxRef> {
        (1..=self.width())
            .flat_map(|a| (self.mu_bar(a) + 1..=self.lambda_bar(a)).map(move |i| BoxRef::new(a, i)))
            .collect()
    }

    /// `b_i = n - k - μ_i + i`.
    pub fn b(&self, i: usize) -> usize {
        self.width() - self.mu.part(i) + i
    }

    /// `d_i = n - k + 1 - λ_i`; box `(d_i, i)` ends row `i`.
    pub fn d(&self, i: usize) -> usize {
        self.width() + 1 - self.lambda.part(i)
    }

    pub fn i_mu(&self) -> Vec<usize> {
        (1..=self.k).map(|i| self.b(i)).collect()
    }

    pub fn i_lambda(&self) -> Vec<usize> {
        (1..=self.k).map(|i| self.d(i) + i - 1).collect()
    }

    fn require(&self, b: BoxRef) -> Result<()> {
        if self.contains(b) {
            Ok(())
        } else {
            Err(Error::BoxNotInDiagram { a: b.a, i: b.i })
        }
    }

    /// `a_j = min(a + j - 1, b_j)`.
    fn label_entry(&self, a: usize, j: usize) -> usize {
        (a + j - 1).min(self.b(j))
    }

    /// Short label `J(a, i)`.
    pub fn short_label(&self, b: BoxRef) -> Result<Vec<usize>> {
        self.require(b)?;
        Ok((1..=b.i).map(|j| self.label_entry(b.a, j)).collect())
    }

    /// Long label `I'(a, i) = J(a, i) ∪ {b_{i+1}, …, b_k}`.
    pub fn long_label(&self, b: BoxRef) -> Result<Vec<usize>> {
        let mut out = self.short_label(b)?;
        out.extend((b.i + 1..=self.k).map(|j| self.b(j)));
        Ok(out)
    }

    /// Long label extended to the box just below column `a`'s first box:
    /// `I'(a, μ̄_a)` is read as `I_μ`.
    pub fn long_label_or_mu(&self, a: usize, i: usize) -> Result<Vec<usize>> {
        if i == self.mu_bar(a) {
            Ok(self.i_mu())
        } else {
            self.long_label(BoxRef::new(a, i))
        }
    }

    /// `Ĵ(a, i) = {b_1, …, b_i}` for `(a, i) ∈ μ` with `(a-1, i) ∈ λ/μ`.
    pub fn tilde_label(&self, b: BoxRef) -> Result<Vec<usize>> {
        if !(self.in_mu(b) && b.a >= 2 && self.contains(BoxRef::new(b.a - 1, b.i))) {
            return Err(Error::Precondition(format!(
                "tilde label needs {b} in μ and its east neighbour in λ/μ"
            )));
        }
        Ok((1..=b.i).map(|j| self.b(j)).collect())
    }

    /// Box of `λ` whose north-east neighbour lies outside `λ`.
    pub fn in_ribbon(&self, b: BoxRef) -> bool {
        self.in_lambda(b) && !(b.a >= 2 && self.in_lambda(BoxRef::new(b.a - 1, b.i + 1)))
    }

    pub fn ribbon(&self) -> RibbonDecomposition {
        let mut r = BTreeSet::new();
        let mut rbar = BTreeSet::new();
        for a in 1..=self.width() {
            for i in 1..=self.lambda_bar(a) {
                let b = BoxRef::new(a, i);
                if self.in_ribbon(b) {
                    if self.contains(b) {
                        r.insert(b);
                    } else {
                        rbar.insert(b);
                    }
                }
            }
        }
        let r1 = (1..=self.width())
            .filter(|&a| !self.column_is_empty(a))
            .map(|a| BoxRef::new(a, self.lambda_bar(a)))
            .collect();
        RibbonDecomposition { r, rbar, r1 }
    }

    pub fn is_frozen(&self, b: BoxRef) -> bool {
        self.contains(b) && self.in_ribbon(b)
    }

    /// Box of `λ/μ` that is not the top of its column.
    pub fn is_braid_box(&self, b: BoxRef) -> bool {
        self.contains(b) && b.i < self.lambda_bar(b.a)
    }

    /// Every box of column `a` is a ribbon box.
    pub fn column_in_ribbon(&self, a: usize) -> bool {
        (self.mu_bar(a) + 1..=self.lambda_bar(a)).all(|i| self.in_ribbon(BoxRef::new(a, i)))
    }

    pub fn check_column(&self, a: usize) -> Result<()> {
        if (1..=self.width()).contains(&a) {
            Ok(())
        } else {
            Err(Error::ColumnOutOfRange { a, max: self.width() })
        }
    }

    /// Splits along column `a`: columns `a..=n-k` go left, `1..a` go right.
    ///
    /// The left diagram lives in `Gr(k, n-a+1)`, the right one in `Gr(k, k+a-1)`.
    pub fn cut(&self, a: usize) -> Result<(SkewDiagram, SkewDiagram)> {
        self.check_column(a)?;
        let lw = self.width() - a + 1;
        let left_part = |p: &Partition| -> Vec<usize> { p.parts().iter().map(|&x| x.min(lw)).collect() };
        let right_part =
            |p: &Partition| -> Vec<usize> { p.parts().iter().map(|&x| x.saturating_sub(lw)).collect() };
        let left = SkewDiagram::from_parts(
            self.n - a + 1,
            self.k,
            left_part(&self.lambda),
            left_part(&self.mu),
        )?;
        let right = SkewDiagram::from_parts(
            self.k + a - 1,
            self.k,
            right_part(&self.lambda),
            right_part(&self.mu),
        )?;
        Ok((left, right))
    }

    /// Random diagram with `2 ≤ n ≤ max_n` and `1 ≤ k < n`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, min_n: usize, max_n: usize) -> SkewDiagram {
        let n = rng.gen_range(min_n.max(2)..=max_n.max(2));
        let k = rng.gen_range(1..n);
        let w = n - k;
        let mut lambda: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=w)).collect();
        lambda.sort_unstable_by(|x, y| y.cmp(x));
        let mut mu: Vec<usize> = lambda.iter().map(|&l| rng.gen_range(0..=l)).collect();
        mu.sort_unstable_by(|x, y| y.cmp(x));
        SkewDiagram::from_parts(n, k, lambda, mu).expect("random diagram is valid")
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} in Gr({},{})", self.lambda, self.mu, self.k, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running() -> SkewDiagram {
        SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![3, 3, 2]).unwrap()
    }

    fn intro() -> SkewDiagram {
        SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![3, 1]).unwrap()
    }

    fn ex38() -> SkewDiagram {
        SkewDiagram::from_parts(9, 4, vec![5, 5, 2, 2], vec![3, 3]).unwrap()
    }

    #[test]
    fn conjugates() {
        let p = Partition::new(vec![7, 7, 5, 3, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[5, 4, 4, 3, 3, 2, 2]);
        assert!(Partition::empty().conjugate().is_empty());
        assert_eq!(Partition::new(vec![1, 1, 1]).unwrap().conjugate().parts(), &[3]);
        assert_eq!(Partition::new(vec![2, 0, 0]).unwrap().parts(), &[2]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn heights_running() {
        let (mb, lb) = running().column_heights();
        assert_eq!(lb, vec![2, 2, 3, 3, 4, 4, 5]);
        assert_eq!(mb, vec![0, 0, 0, 0, 2, 3, 3]);
    }

    #[test]
    fn label_sets() {
        assert_eq!(running().i_mu(), vec![5, 6, 8, 11, 12]);
        assert_eq!(intro().i_mu(), vec![5, 8, 10, 11, 12]);
        assert_eq!(running().i_lambda(), vec![1, 2, 5, 8, 11]);
        let d = running();
        assert_eq!(d.long_label(BoxRef::new(4, 2)).unwrap(), vec![4, 5, 8, 11, 12]);
        assert_eq!(d.long_label(BoxRef::new(7, 5)).unwrap(), vec![5, 6, 8, 10, 11]);
        assert_eq!(d.short_label(BoxRef::new(5, 4)).unwrap(), vec![5, 6, 7, 8]);
        assert_eq!(d.short_label(BoxRef::new(6, 4)).unwrap(), vec![5, 6, 8, 9]);
        assert_eq!(intro().long_label(BoxRef::new(6, 4)).unwrap(), vec![5, 7, 8, 9, 12]);
        assert_eq!(
            d.long_label(BoxRef::new(1, 3)),
            Err(Error::BoxNotInDiagram { a: 1, i: 3 })
        );
    }

    #[test]
    fn tilde_labels() {
        assert_eq!(running().tilde_label(BoxRef::new(6, 3)).unwrap(), vec![5, 6, 8]);
        assert_eq!(ex38().tilde_label(BoxRef::new(3, 2)).unwrap(), vec![3, 4]);
        assert!(running().tilde_label(BoxRef::new(4, 1)).is_err());
    }

    #[test]
    fn ribbon_counts() {
        let d = running();
        let rib = d.ribbon();
        assert_eq!(rib.r.len(), 11);
        assert_eq!(rib.r.len() + rib.rbar.len(), 7 + 5 - 1);
        let e = ex38().ribbon();
        assert_eq!((e.r.len(), e.rbar.len()), (6, 2));
        let same = SkewDiagram::from_parts(12, 5, vec![7, 7, 5, 3, 1], vec![7, 7, 5, 3, 1]).unwrap();
        assert!(same.ribbon().r.is_empty());
        assert_eq!(same.ribbon().rbar.len(), 11);
    }

    #[test]
    fn cut_intro() {
        let (l, r) = intro().cut(6).unwrap();
        assert_eq!(l.lambda().parts(), &[2, 2, 2, 2, 1]);
        assert_eq!(l.mu().parts(), &[2, 1]);
        assert_eq!((l.n(), l.k()), (7, 5));
        assert_eq!(r.lambda().parts(), &[5, 5, 3, 1]);
        assert_eq!(r.mu().parts(), &[1]);
        assert_eq!((r.n(), r.k()), (10, 5));
        let (l1, r1) = intro().cut(1).unwrap();
        assert_eq!(r1.width(), 0);
        assert_eq!(l1.lambda(), intro().lambda());
        assert!(intro().cut(8).is_err());
    }

    #[test]
    fn invalid_inputs() {
        let err = SkewDiagram::from_parts(12, 5, vec![3, 1], vec![3, 2]).unwrap_err();
        assert!(err.to_string().contains("row 2"), "{err}");
        assert!(SkewDiagram::from_parts(5, 2, vec![4], vec![]).is_err());
        assert!(SkewDiagram::from_parts(5, 0, vec![], vec![]).is_err());
    }

    #[test]
    fn json_roundtrip() {
        let d = running();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"n":12,"k":5,"lambda":[7,7,5,3,1],"mu":[3,3,2]}"#);
        assert_eq!(SkewDiagram::from_json(&s).unwrap(), d);
    }
}
