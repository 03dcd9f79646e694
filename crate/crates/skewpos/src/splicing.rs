//! The splicing map `Φ_a = (V^L, V^R)` on the chart `U_a` and checks of
//! its quasi-cluster properties.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::cluster::seed_at;
use crate::diagram::{BoxRef, SkewDiagram};
use crate::error::{Error, Result};
use crate::linalg::{cramer_expand, transversal, FlagK, Rat, RatMatrix};
use crate::variety::{cut_flag, flag_w, membership, PointV};

/// A diagram with a chosen cut column and the two halves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutContext {
    pub diagram: SkewDiagram,
    pub a: usize,
    pub left: SkewDiagram,
    pub right: SkewDiagram,
    /// `I_{μ^R} = {b_1, …, b_{μ̄_a}, a+μ̄_a, …, a+k-1}`.
    pub b_right: Vec<usize>,
}

impl CutContext {
    pub fn new(d: &SkewDiagram, a: usize) -> Result<Self> {
        let (left, right) = d.cut(a)?;
        let mb = d.mu_bar(a);
        let b = d.i_mu();
        let b_right: Vec<usize> = (1..=d.k()).map(|i| if i <= mb { b[i - 1] } else { a + i - 1 }).collect();
        debug_assert_eq!(b_right, right.i_mu());
        Ok(CutContext { diagram: d.clone(), a, left, right, b_right })
    }

    /// Right-diagram column of `V` used for `u_j`, when `u_j = v_j` is copied.
    fn copied_columns(&self) -> Vec<usize> {
        (1..self.a).map(|ap| ap + self.diagram.mu_bar(ap)).collect()
    }
}

/// `Δ_{I'(a,i)}(V) ≠ 0` for `μ̄_a < i ≤ λ̄_a`.
pub fn in_u_a(p: &PointV, a: usize) -> Result<bool> {
    Ok(first_vanishing(p, a)?.is_none())
}

fn first_vanishing(p: &PointV, a: usize) -> Result<Option<Vec<usize>>> {
    let d = p.diagram();
    d.check_column(a)?;
    for i in d.mu_bar(a) + 1..=d.lambda_bar(a) {
        let label = d.long_label(BoxRef::new(a, i))?;
        if p.plucker(&label).is_zero() {
            return Ok(Some(label));
        }
    }
    Ok(None)
}

pub fn require_u_a(p: &PointV, a: usize) -> Result<()> {
    match first_vanishing(p, a)? {
        Some(minor) => Err(Error::NotInOpenSet { a, minor }),
        None => Ok(()),
    }
}

/// Every box of column `a` in `λ/μ` lies on the ribbon, so `U_a` is all of `S°`.
pub fn column_is_frozen(d: &SkewDiagram, a: usize) -> bool {
    d.column_in_ribbon(a)
}

/// `F^a`: `W^op` below `μ̄_a`, then `V(a, i)`, then the rightmost-box spaces.
pub fn flag_at_cut(p: &PointV, a: usize) -> Result<FlagK> {
    p.diagram().check_column(a)?;
    cut_flag(p, a)
}

/// `A_t = Δ_{I'(a,t-a)} / Δ_{I'(a,t-a+1)}` on the window
/// `a+μ̄_a ≤ t < a+λ̄_a`, and 1 elsewhere.
pub fn a_factor(p: &PointV, a: usize, t: usize) -> Result<Rat> {
    let d = p.diagram();
    d.check_column(a)?;
    if t < a + d.mu_bar(a) || t >= a + d.lambda_bar(a) {
        return Ok(Rat::one());
    }
    let i = t - a + 1;
    let num = p.plucker(&d.long_label_or_mu(a, i - 1)?);
    let den = p.plucker(&d.long_label(BoxRef::new(a, i))?);
    if den.is_zero() {
        return Err(Error::NotInOpenSet { a, minor: d.long_label(BoxRef::new(a, i))? });
    }
    Ok(num / den)
}

/// All non-trivial `A_t`, keyed by `t`.
pub fn a_factors(p: &PointV, a: usize) -> Result<BTreeMap<usize, Rat>> {
    let d = p.diagram();
    (a + d.mu_bar(a)..a + d.lambda_bar(a)).map(|t| Ok((t, a_factor(p, a, t)?))).collect()
}

/// `V^L = (v_{b_1}, …, v_{b_{μ̄_a}}, v_{a+μ̄_a}, …, v_n)`.
pub fn left_point(p: &PointV, a: usize) -> Result<PointV> {
    require_u_a(p, a)?;
    let ctx = CutContext::new(p.diagram(), a)?;
    let d = p.diagram();
    let mb = d.mu_bar(a);
    let b = d.i_mu();
    let cols: Vec<Vec<Rat>> = (1..=d.n() - a + 1)
        .map(|j| if j <= mb { p.column(b[j - 1]) } else { p.column(j + a - 1) })
        .collect();
    let m = RatMatrix::from_columns(d.k(), &cols)?;
    Ok(PointV::new(ctx.left, m)?.with_seed(p.seed()))
}

/// `V^R` in the frame of `V`, before regauging.
///
/// `u_{b^R_i}` spans `F^a_i ∩ W_{k-i+1}` normalized into
/// `v_{b_i} + ⟨v_{b_{i+1}}, …, v_{b_k}⟩`; the other columns are copied.
pub fn right_point_raw(p: &PointV, a: usize) -> Result<PointV> {
    require_u_a(p, a)?;
    let ctx = CutContext::new(p.diagram(), a)?;
    let d = p.diagram();
    let k = d.k();
    let b = d.i_mu();
    let fa = flag_at_cut(p, a)?;
    let mut cols: Vec<Option<Vec<Rat>>> = vec![None; k + a - 1];
    for i in 1..=k {
        let line = fa.get(i).intersect(&p.w(k - i + 1));
        if line.dim() != 1 {
            return Err(Error::Degenerate(format!("F^a_{i} ∩ W_{} has dimension {}", k - i + 1, line.dim())));
        }
        let x = &line.basis()[0];
        let tail: Vec<Vec<Rat>> = b[i - 1..].iter().map(|&t| p.column(t)).collect();
        let coords = cramer_expand(x, &tail)?;
        let lead = &coords[0];
        let u: Vec<Rat> = x.iter().map(|y| y / lead).collect();
        cols[ctx.b_right[i - 1] - 1] = Some(u);
    }
    for j in ctx.copied_columns() {
        cols[j - 1] = Some(p.column(j));
    }
    let cols: Vec<Vec<Rat>> = cols
        .into_iter()
        .enumerate()
        .map(|(j, c)| c.ok_or_else(|| Error::Degenerate(format!("column {} of V^R unassigned", j + 1))))
        .collect::<Result<_>>()?;
    let m = RatMatrix::from_columns(k, &cols)?;
    Ok(PointV::new(ctx.right, m)?.with_seed(p.seed()))
}

/// `V^R` regauged so that `u_{b^R_i} = e_i`.
pub fn right_point(p: &PointV, a: usize) -> Result<PointV> {
    right_point_raw(p, a)?.regauged()
}

/// `Φ_a(V) = (V^L, V^R)`.
pub fn phi(p: &PointV, a: usize) -> Result<(PointV, PointV)> {
    Ok((left_point(p, a)?, right_point(p, a)?))
}

/// Outcome of one family of checks: failures are human-readable strings.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// `Δ_{I'_R(a',i)}(V^R) = Δ_{I'(a',i)}(V) · A_{a'+μ̄_{a'}} ⋯ A_{a'+i-1}` on every
/// box of the right diagram, in the frame of `V`.
pub fn verify_minor_scaling(p: &PointV, a: usize) -> Result<Report> {
    let vr = right_point_raw(p, a)?;
    let d = p.diagram();
    let right = vr.diagram().clone();
    let mut rep = Report::default();
    for bx in right.boxes() {
        let mut expected = p.plucker(&d.long_label(bx)?);
        for t in bx.a + d.mu_bar(bx.a)..bx.a + bx.i {
            expected *= a_factor(p, a, t)?;
        }
        let got = vr.plucker(&right.long_label(bx)?);
        rep.check(got == expected, || format!("box {bx}: Δ_R = {got}, expected {expected}"));
    }
    Ok(rep)
}

/// Exchange ratios at mutable right boxes agree between `V` and `V^R`, and
/// every left cluster variable equals the one at the shifted box of `V`.
pub fn verify_exchange_ratios(p: &PointV, a: usize) -> Result<Report> {
    let (vl, vr) = (left_point(p, a)?, right_point_raw(p, a)?);
    let full = seed_at(p)?;
    let sr = seed_at(&vr)?;
    let sl = seed_at(&vl)?;
    let mut rep = Report::default();
    for bx in sr.quiver.mutable() {
        if full.quiver.is_frozen(bx) {
            rep.check(false, || format!("right box {bx} is mutable in Q^R but frozen in Q"));
            continue;
        }
        let (y, yr) = (full.exchange_ratio(bx)?, sr.exchange_ratio(bx)?);
        rep.check(y == yr, || format!("right box {bx}: ŷ = {y}, ŷ^R = {yr}"));
    }
    let shift = |b: BoxRef| BoxRef::new(b.a + a - 1, b.i);
    for (&bx, x) in &sl.values {
        let orig = full.value(shift(bx));
        rep.check(x == orig, || format!("left box {bx}: x^L = {x}, x = {orig}"));
    }
    for bx in sl.quiver.mutable() {
        let (y, yl) = (full.exchange_ratio(shift(bx))?, sl.exchange_ratio(bx)?);
        rep.check(y == yl, || format!("left box {bx}: ŷ = {y}, ŷ^L = {yl}"));
    }
    Ok(rep)
}

/// `u_t - A_t v_t ∈ V(a, t-a)` for `t` in the window of column `a`.
pub fn verify_triangularity(p: &PointV, a: usize) -> Result<Report> {
    let vr = right_point_raw(p, a)?;
    let d = p.diagram();
    let mut rep = Report::default();
    for t in a + d.mu_bar(a)..a + d.lambda_bar(a) {
        let i = t - a + 1;
        let at = a_factor(p, a, t)?;
        let diff: Vec<Rat> = vr.column(t).iter().zip(p.column(t)).map(|(u, v)| u - &at * v).collect();
        let below = if i - 1 == d.mu_bar(a) { p.w_op(i - 1) } else { p.region(BoxRef::new(a, i - 1))? };
        rep.check(below.contains(&diff), || format!("u_{t} - A_{t} v_{t} leaves V({a},{})", i - 1));
    }
    Ok(rep)
}

/// `u_{b^R_i} ∧ ⋯ ∧ u_{b^R_k} = v_{b_i} ∧ ⋯ ∧ v_{b_k}` for every `i`.
pub fn verify_wedge_identity(p: &PointV, a: usize) -> Result<Report> {
    let vr = right_point_raw(p, a)?;
    let ctx = CutContext::new(p.diagram(), a)?;
    let k = p.k();
    let b = p.diagram().i_mu();
    let mut rep = Report::default();
    for i in 1..=k {
        let us: Vec<usize> = ctx.b_right[i - 1..].iter().map(|c| c - 1).collect();
        let vs: Vec<usize> = b[i - 1..].iter().map(|c| c - 1).collect();
        let mu = vr.matrix().select_columns(&us).transpose();
        let mv = p.matrix().select_columns(&vs).transpose();
        let m = k - i + 1;
        let same = subsets(k, m).iter().all(|rows| mu.minor(rows).ok() == mv.minor(rows).ok());
        rep.check(same, || format!("wedge of u_{{b^R_{i}..}} differs from v_{{b_{i}..}}"));
    }
    Ok(rep)
}

fn subsets(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut Vec::new(), &mut out);
    out
}

/// `V ∈ U_a` exactly when `F^a` is transversal to `F^W`.
pub fn verify_open_set_criterion(p: &PointV, a: usize) -> Result<Report> {
    let mut rep = Report::default();
    let inside = in_u_a(p, a)?;
    let trans = transversal(&flag_at_cut(p, a)?, &flag_w(p)?);
    rep.check(inside == trans, || format!("column {a}: in U_a = {inside}, transversal = {trans}"));
    Ok(rep)
}

/// Both halves lie on their skew shaped positroids.
pub fn verify_membership(p: &PointV, a: usize) -> Result<Report> {
    let (l, r) = phi(p, a)?;
    let mut rep = Report::default();
    rep.check(membership(l.matrix(), l.diagram()), || format!("V^L not on {}", l.diagram()));
    rep.check(membership(r.matrix(), r.diagram()), || format!("V^R not on {}", r.diagram()));
    Ok(rep)
}

/// Every check above for one point and column.
pub fn verify_all(p: &PointV, a: usize) -> Result<BTreeMap<&'static str, Report>> {
    let mut out = BTreeMap::new();
    out.insert("open_set", verify_open_set_criterion(p, a)?);
    if !in_u_a(p, a)? {
        return Ok(out);
    }
    out.insert("membership", verify_membership(p, a)?);
    out.insert("minor_scaling", verify_minor_scaling(p, a)?);
    out.insert("exchange_ratios", verify_exchange_ratios(p, a)?);
    out.insert("triangularity", verify_triangularity(p, a)?);
    out.insert("wedge", verify_wedge_identity(p, a)?);
    Ok(out)
}
