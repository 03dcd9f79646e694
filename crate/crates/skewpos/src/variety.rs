//! Points of the skew shaped positroid variety: representation, membership,
//! sampling, and the braid-variety dictionary (`omega` / `xi`).

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::braid::beta;
use crate::diagram::{BoxRef, DiagramJson, SkewDiagram};
use crate::error::{Error, Result};
use crate::linalg::{format_rat, parse_rat, rat, FlagK, Rat, RatMatrix, Subspace};
use crate::permutations::{baf, cyclic_rank, BoundedAffinePermutation, GrassmannNecklace};

/// Default half-width `B` of the integer coefficient range `[-B, B]`.
pub const DEFAULT_BOUND: i64 = 100;
/// Re-draws allowed for one column before the attempt is abandoned.
pub const COLUMN_RETRIES: usize = 32;
/// Whole-matrix attempts, each on its own random stream.
pub const SAMPLE_ATTEMPTS: usize = 32;

/// A `k × n` rational matrix together with the diagram it is meant to lie on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointV {
    diagram: SkewDiagram,
    matrix: RatMatrix,
    seed: Option<u64>,
}

/// Wire form of a point.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointJson {
    pub diagram: DiagramJson,
    pub seed: Option<u64>,
    pub matrix: Vec<Vec<String>>,
}

impl PointV {
    /// Checks the shape and rank; membership is not checked here.
    pub fn new(diagram: SkewDiagram, matrix: RatMatrix) -> Result<Self> {
        if matrix.rows() != diagram.k() || matrix.cols() != diagram.n() {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{}, diagram needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                diagram.k(),
                diagram.n()
            )));
        }
        let rank = matrix.rank();
        if rank != diagram.k() {
            return Err(Error::RankDeficient { rank, expected: diagram.k() });
        }
        Ok(PointV { diagram, matrix, seed: None })
    }

    /// Row-reduces so that `v_{b_i} = e_i`; needs `Δ_{I_μ} ≠ 0`.
    pub fn gauge_fixed(diagram: SkewDiagram, matrix: RatMatrix) -> Result<Self> {
        let p = PointV::new(diagram, matrix)?;
        p.regauged()
    }

    /// Same point of the Grassmannian in the gauge `v_{b_i} = e_i`.
    pub fn regauged(&self) -> Result<Self> {
        let cols: Vec<usize> = self.diagram.i_mu().iter().map(|b| b - 1).collect();
        let block = self.matrix.select_columns(&cols);
        let inv = block.inverse().map_err(|_| Error::NotMember("Δ_{I_μ} vanishes".into()))?;
        Ok(PointV {
            diagram: self.diagram.clone(),
            matrix: inv.mul(&self.matrix)?,
            seed: self.seed,
        })
    }

    pub fn with_seed(mut self, seed: Option<u64>) -> Self {
        self.seed = seed;
        self
    }

    pub fn diagram(&self) -> &SkewDiagram {
        &self.diagram
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn k(&self) -> usize {
        self.diagram.k()
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    /// `v_j` for `1 ≤ j ≤ n`.
    pub fn column(&self, j: usize) -> Vec<Rat> {
        self.matrix.column(j - 1)
    }

    /// `v_j` for any integer, with `v_{j+n} = (-1)^{k-1} v_j`.
    pub fn column_cyclic(&self, j: i64) -> Vec<Rat> {
        let n = self.n() as i64;
        let wraps = (j - 1).div_euclid(n);
        let base = self.column(((j - 1).rem_euclid(n) + 1) as usize);
        if (self.k() - 1) % 2 == 1 && wraps % 2 != 0 {
            base.into_iter().map(|x| -x).collect()
        } else {
            base
        }
    }

    /// Signed minor on 1-based columns in the given order.
    pub fn minor(&self, cols: &[usize]) -> Rat {
        let idx: Vec<usize> = cols.iter().map(|c| c - 1).collect();
        self.matrix.minor(&idx).expect("index tuple of length k")
    }

    /// Plücker coordinate `Δ_J` with `J` read in increasing order.
    pub fn plucker(&self, set: &[usize]) -> Rat {
        let mut s = set.to_vec();
        s.sort_unstable();
        self.minor(&s)
    }

    pub fn span_of(&self, cols: &[usize]) -> Subspace {
        let vs: Vec<Vec<Rat>> = cols.iter().map(|&c| self.column(c)).collect();
        Subspace::span(self.k(), &vs)
    }

    /// `V(a, i) = span{v_j : j ∈ J(a, i)}`.
    pub fn region(&self, b: BoxRef) -> Result<Subspace> {
        Ok(self.span_of(&self.diagram.short_label(b)?))
    }

    /// `W_i = ⟨v_{b_{k-i+1}}, …, v_{b_k}⟩`.
    pub fn w(&self, i: usize) -> Subspace {
        let imu = self.diagram.i_mu();
        self.span_of(&imu[self.k() - i..])
    }

    /// `W^op_i = ⟨v_{b_1}, …, v_{b_i}⟩`.
    pub fn w_op(&self, i: usize) -> Subspace {
        self.span_of(&self.diagram.i_mu()[..i])
    }

    /// `F⁰_j = span{v_{d_i+i-1} : i ≤ j}`.
    pub fn right_flag_part(&self, j: usize) -> Subspace {
        self.span_of(&self.diagram.i_lambda()[..j])
    }

    pub fn to_json(&self) -> PointJson {
        PointJson {
            diagram: self.diagram.to_json(),
            seed: self.seed,
            matrix: self
                .matrix
                .to_rows()
                .iter()
                .map(|r| r.iter().map(format_rat).collect())
                .collect(),
        }
    }

    /// Parses and checks shape and rank.
    pub fn from_json(p: &PointJson) -> Result<Self> {
        let d: SkewDiagram = p.diagram.clone().try_into()?;
        let rows = p
            .matrix
            .iter()
            .map(|r| r.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = RatMatrix::from_rows(rows)?;
        Ok(PointV::new(d, m)?.with_seed(p.seed))
    }
}

/// `f_V(i) = min{j ≥ i : v_i ∈ span(v_{i+1}, …, v_j)}`.
pub fn f_of_point(m: &RatMatrix) -> Result<BoundedAffinePermutation> {
    let (k, n) = (m.rows(), m.cols());
    let rank = m.rank();
    if rank != k {
        return Err(Error::RankDeficient { rank, expected: k });
    }
    let col = |j: usize| m.column((j - 1) % n);
    let mut values = Vec::with_capacity(n);
    for i in 1..=n {
        let vi = col(i);
        let mut span = Subspace::zero(k);
        let mut fi = i;
        while !span.contains(&vi) {
            fi += 1;
            span = span.sum(&Subspace::span(k, &[col(fi)]));
        }
        values.push(fi as i64);
    }
    BoundedAffinePermutation::new(n, k, values)
}

/// Source necklace of a point: `I_i` is the Gale-maximal basis in `≤_{i+1}`,
/// found greedily by scanning `[n]` from the top of that order down.
pub fn necklace_of_point(m: &RatMatrix) -> Result<GrassmannNecklace> {
    let (k, n) = (m.rows(), m.cols());
    let rank = m.rank();
    if rank != k {
        return Err(Error::RankDeficient { rank, expected: k });
    }
    let entries = (1..=n)
        .map(|i| {
            let start = i % n + 1;
            let mut order: Vec<usize> = (1..=n).collect();
            order.sort_by_key(|&x| std::cmp::Reverse(cyclic_rank(start, x, n)));
            let mut chosen = Vec::with_capacity(k);
            let mut span = Subspace::zero(k);
            for x in order {
                let v = m.column(x - 1);
                if !span.contains(&v) {
                    span = span.sum(&Subspace::span(k, &[v]));
                    chosen.push(x);
                    if chosen.len() == k {
                        break;
                    }
                }
            }
            chosen.sort_unstable();
            chosen
        })
        .collect();
    GrassmannNecklace::new(n, k, entries)
}

/// `f_V = f_{λ/μ}`.
pub fn membership(m: &RatMatrix, d: &SkewDiagram) -> bool {
    m.rows() == d.k()
        && m.cols() == d.n()
        && f_of_point(m).map(|f| f == baf(d)).unwrap_or(false)
}

/// Bookkeeping returned alongside a sampled point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleStats {
    /// Random coefficients drawn for the accepted point.
    pub free_parameters: usize,
    /// Whole-matrix attempts used, starting at 1.
    pub attempts: usize,
}

/// See [`sample_with_stats`].
pub fn sample(d: &SkewDiagram, seed: u64, bound: i64, normalize_r1: bool) -> Result<PointV> {
    sample_with_stats(d, seed, bound, normalize_r1).map(|(p, _)| p)
}

/// Random point in the gauge `v_{b_i} = e_i`.
///
/// Columns `a + μ̄_a` are filled for `a = n-k, …, 1` as integer combinations
/// of `v_{a+μ̄_a+1}, …, v_{a+λ̄_a}`, or zero when column `a` is empty. With
/// `normalize_r1` each such column is rescaled so that `Δ_{I'(a, λ̄_a)} = 1`.
pub fn sample_with_stats(
    d: &SkewDiagram,
    seed: u64,
    bound: i64,
    normalize_r1: bool,
) -> Result<(PointV, SampleStats)> {
    if bound < 1 {
        return Err(Error::Precondition(format!("coefficient bound {bound} must be positive")));
    }
    for attempt in 0..SAMPLE_ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(attempt as u64);
        if let Some((m, free)) = sample_attempt(d, &mut rng, bound, normalize_r1) {
            if membership(&m, d) {
                let p = PointV::new(d.clone(), m)?.with_seed(Some(seed));
                return Ok((p, SampleStats { free_parameters: free, attempts: attempt + 1 }));
            }
        }
    }
    Err(Error::RetryBudget(SAMPLE_ATTEMPTS))
}

fn sample_attempt(
    d: &SkewDiagram,
    rng: &mut ChaCha8Rng,
    bound: i64,
    normalize_r1: bool,
) -> Option<(RatMatrix, usize)> {
    let (n, k) = (d.n(), d.k());
    let mut m = RatMatrix::zeros(k, n);
    for (i, b) in d.i_mu().iter().enumerate() {
        m.set(i, b - 1, Rat::one());
    }
    let mut free = 0;
    for a in (1..=d.width()).rev() {
        if d.column_is_empty(a) {
            continue;
        }
        let s = a + d.mu_bar(a);
        let top = a + d.lambda_bar(a);
        let below_top = Subspace::span(k, &(s + 1..top).map(|t| m.column(t - 1)).collect::<Vec<_>>());
        let top_label = d.long_label(BoxRef::new(a, d.lambda_bar(a))).ok()?;
        let mut accepted = false;
        for _ in 0..COLUMN_RETRIES {
            let mut v = vec![Rat::zero(); k];
            for t in s + 1..=top {
                let c = rat(rng.gen_range(-bound..=bound));
                for (x, y) in v.iter_mut().zip(m.column(t - 1)) {
                    *x += &c * y;
                }
            }
            if below_top.contains(&v) {
                continue;
            }
            m.set_column(s - 1, &v);
            let delta = m.minor(&top_label.iter().map(|t| t - 1).collect::<Vec<_>>()).ok()?;
            if delta.is_zero() {
                continue;
            }
            if normalize_r1 {
                let scaled: Vec<Rat> = v.iter().map(|x| x / &delta).collect();
                m.set_column(s - 1, &scaled);
            }
            free += top - s;
            accepted = true;
            break;
        }
        if !accepted {
            return None;
        }
    }
    Some((m, free))
}

/// Region labels of the braid diagram together with the boundary data and
/// torus coordinates that pin down a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidLabeling {
    pub k: usize,
    /// `L(a, i)` for every box of `λ/μ`.
    pub regions: BTreeMap<BoxRef, Subspace>,
    /// Framing of the left boundary flag: `v_{b_1}, …, v_{b_k}`.
    pub left_basis: Vec<Vec<Rat>>,
    pub right_flag: FlagK,
    /// `Δ_{I'(a, λ̄_a)}` for the top box of every non-empty column.
    pub torus: BTreeMap<BoxRef, Rat>,
}

impl BraidLabeling {
    /// `W_i` spanned by the last `i` boundary vectors.
    pub fn w(&self, i: usize) -> Subspace {
        Subspace::span(self.k, &self.left_basis[self.k - i..])
    }
}

/// Violated region conditions on a point (empty when all hold).
pub fn region_violations(p: &PointV) -> Vec<String> {
    let d = p.diagram();
    let k = p.k();
    let mut bad = Vec::new();
    let region = |b: BoxRef| p.region(b).expect("box checked by caller");
    for b in d.boxes() {
        let v = region(b);
        if v.dim() != b.i {
            bad.push(format!("dim V{b} = {} != {}", v.dim(), b.i));
        }
        let up = BoxRef::new(b.a, b.i + 1);
        if d.contains(up) && !v.is_subspace_of(&region(up)) {
            bad.push(format!("V{b} not contained in V{up}"));
        }
        let right = BoxRef::new(b.a + 1, b.i);
        let diag = BoxRef::new(b.a, b.i + 1);
        if d.contains(right) && d.contains(diag) && !region(right).is_subspace_of(&region(diag)) {
            bad.push(format!("V{right} not contained in V{diag}"));
        }
        if d.contains(right) {
            let both_ribbon = d.is_frozen(b) && d.is_frozen(right);
            let same = v == region(right);
            if both_ribbon && !same {
                bad.push(format!("V{b} != V{right} for adjacent ribbon boxes"));
            }
            if !d.is_frozen(b) && same {
                bad.push(format!("V{b} = V{right} although {b} is not a ribbon box"));
            }
        }
    }
    for a in 2..=d.width() {
        for i in 1..=d.mu_bar(a) {
            let east = BoxRef::new(a - 1, i);
            if !d.contains(east) {
                continue;
            }
            // Only meaningful when the box above `east` exists.
            let up = BoxRef::new(a - 1, i + 1);
            if !d.contains(up) {
                continue;
            }
            let wop = p.w_op(i);
            if wop == region(east) {
                bad.push(format!("W^op_{i} = V{east}"));
            }
            if !wop.is_subspace_of(&region(up)) {
                bad.push(format!("W^op_{i} not contained in V{up}"));
            }
        }
    }
    for a in 1..=d.width() {
        let mb = d.mu_bar(a);
        if !p.w(k - mb).contains(&p.column(a + mb)) {
            bad.push(format!("v_{} not in W_{}", a + mb, k - mb));
        }
    }
    bad
}

/// `F^W_i = W_i`.
pub fn flag_w(p: &PointV) -> Result<FlagK> {
    FlagK::new((1..=p.k()).map(|i| p.w(i)).collect())
}

pub fn right_flag(p: &PointV) -> Result<FlagK> {
    FlagK::new((1..=p.k()).map(|j| p.right_flag_part(j)).collect())
}

/// Flag on the vertical line just right of column `a` (so after the factor
/// of column `a` in `β`). `a = n-k+1` gives the left boundary `W^op`.
pub fn cut_flag(p: &PointV, a: usize) -> Result<FlagK> {
    let d = p.diagram();
    if a == 0 || a > d.width() + 1 {
        return Err(Error::ColumnOutOfRange { a, max: d.width() + 1 });
    }
    let parts = (1..=p.k())
        .map(|i| {
            if a == d.width() + 1 || i <= d.mu_bar(a) {
                Ok(p.w_op(i))
            } else if i <= d.lambda_bar(a) {
                p.region(BoxRef::new(a, i))
            } else {
                Ok(p.right_flag_part(i))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    FlagK::new(parts)
}

/// Braid box, the generator index it crosses, and the flag just after it.
pub type Crossing = (BoxRef, usize, FlagK);

/// Flags of the braid diagram of `β_{λ/μ}`: the left boundary followed by
/// the flag after each crossing, paired with the crossing's box.
pub fn crossing_flags(p: &PointV) -> Result<(FlagK, Vec<Crossing>)> {
    let d = p.diagram();
    let start = cut_flag(p, d.width() + 1)?;
    let mut out = Vec::new();
    let mut prev = start.clone();
    let (_, cm) = beta(d);
    for b in cm.boxes {
        let after = cut_flag(p, b.a)?;
        let parts: Vec<Subspace> = (1..=p.k())
            .map(|j| if j >= b.i { after.get(j) } else { prev.get(j) })
            .collect();
        let f = FlagK::new(parts)?;
        out.push((b, b.i, f.clone()));
        prev = f;
    }
    Ok((start, out))
}

/// Principal minors along `β` from framing propagation.
///
/// Starts from the framed flag `(v_{b_1} | … | v_{b_k})` and at each crossing
/// `σ_i` replaces `(w_i, w_{i+1})` by `(w_{i+1} + c·w_i, w_i)` with `c` chosen
/// so the new `i`-th step lands in the next region. Returns, per braid box,
/// the principal `i × i` minor of the framed matrix after the crossing.
pub fn braid_principal_minors(p: &PointV) -> Result<Vec<(BoxRef, Rat)>> {
    let k = p.k();
    let (_, steps) = crossing_flags(p)?;
    let mut w: Vec<Vec<Rat>> = p.diagram().i_mu().iter().map(|&b| p.column(b)).collect();
    let mut out = Vec::new();
    for (b, i, flag) in steps {
        let target = flag.get(i);
        let x = target
            .basis()
            .iter()
            .find(|v| !Subspace::span(k, &w[..i - 1]).contains(v))
            .cloned()
            .ok_or_else(|| Error::Degenerate(format!("crossing {b} does not move the flag")))?;
        let coords = crate::linalg::cramer_expand(&x, &w)?;
        if coords[i].is_zero() {
            return Err(Error::Degenerate(format!("crossing {b} keeps step {i}")));
        }
        let c = &coords[i - 1] / &coords[i];
        let new_i: Vec<Rat> = w[i].iter().zip(&w[i - 1]).map(|(y, z)| y + &c * z).collect();
        let old_i = std::mem::replace(&mut w[i - 1], new_i);
        w[i] = old_i;
        let m = RatMatrix::from_columns(k, &w[..i])?;
        let principal = m
            .select_columns(&(0..i).collect::<Vec<_>>())
            .transpose()
            .select_columns(&(0..i).collect::<Vec<_>>())
            .det()?;
        out.push((b, principal));
    }
    Ok(out)
}

/// Braid-diagram labeling of a point of the variety.
pub fn omega(p: &PointV) -> Result<BraidLabeling> {
    let d = p.diagram();
    if !membership(p.matrix(), d) {
        return Err(Error::NotMember(format!("f_V differs from f of {d}")));
    }
    let bad = region_violations(p);
    if !bad.is_empty() {
        return Err(Error::Degenerate(bad.join("; ")));
    }
    let rf = right_flag(p)?;
    if !crate::linalg::transversal(&rf, &flag_w(p)?) {
        return Err(Error::Degenerate("right flag is not transversal to F^W".into()));
    }
    let regions = d
        .boxes()
        .into_iter()
        .map(|b| Ok((b, p.region(b)?)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    let torus = d
        .ribbon()
        .r1
        .into_iter()
        .map(|b| Ok((b, p.plucker(&d.long_label(b)?))))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(BraidLabeling {
        k: p.k(),
        regions,
        left_basis: d.i_mu().iter().map(|&b| p.column(b)).collect(),
        right_flag: rf,
        torus,
    })
}

/// Rebuilds the point from a labeling: `v_{b_i}` from the boundary framing,
/// then `v_{a+μ̄_a}` for `a = n-k, …, 1` spanning `L(a, μ̄_a+1) ∩ W_{k-μ̄_a}`,
/// scaled to match the stored `Δ_{I'(a, λ̄_a)}`.
pub fn xi(lab: &BraidLabeling, d: &SkewDiagram) -> Result<PointV> {
    let (n, k) = (d.n(), d.k());
    if lab.k != k || lab.left_basis.len() != k {
        return Err(Error::DimensionMismatch("labeling and diagram disagree on k".into()));
    }
    let mut m = RatMatrix::zeros(k, n);
    for (i, b) in d.i_mu().iter().enumerate() {
        m.set_column(b - 1, &lab.left_basis[i]);
    }
    for a in (1..=d.width()).rev() {
        if d.column_is_empty(a) {
            continue;
        }
        let mb = d.mu_bar(a);
        let first = BoxRef::new(a, mb + 1);
        let region = lab
            .regions
            .get(&first)
            .ok_or_else(|| Error::Precondition(format!("labeling lacks region {first}")))?;
        let line = region.intersect(&lab.w(k - mb));
        if line.dim() != 1 {
            return Err(Error::Degenerate(format!(
                "L{first} ∩ W_{} has dimension {}",
                k - mb,
                line.dim()
            )));
        }
        let s = a + mb;
        let u = line.basis()[0].clone();
        m.set_column(s - 1, &u);
        let top = BoxRef::new(a, d.lambda_bar(a));
        let label: Vec<usize> = d.long_label(top)?.iter().map(|t| t - 1).collect();
        let delta = m.minor(&label)?;
        if delta.is_zero() {
            return Err(Error::Degenerate(format!("Δ_I'{top} vanishes on the reconstructed column")));
        }
        let target = lab
            .torus
            .get(&top)
            .ok_or_else(|| Error::Precondition(format!("labeling lacks torus coordinate {top}")))?;
        let scale = target / delta;
        m.set_column(s - 1, &u.iter().map(|x| x * &scale).collect::<Vec<_>>());
    }
    PointV::new(d.clone(), m)
}
