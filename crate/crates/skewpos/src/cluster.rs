//! Initial seed of the cluster structure, quiver mutation and exchange ratios.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::diagram::{BoxRef, SkewDiagram};
use crate::error::{Error, Result};
use crate::linalg::{format_rat, Rat};
use crate::variety::{membership, PointV};

/// Ice quiver stored as a skew-symmetric exchange matrix.
///
/// `b[(u, v)] > 0` means `b[(u, v)]` arrows `u → v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: BTreeSet<BoxRef>,
    frozen: BTreeSet<BoxRef>,
    b: BTreeMap<(BoxRef, BoxRef), i64>,
}

impl Quiver {
    /// Empty quiver on the given vertices.
    pub fn new(vertices: impl IntoIterator<Item = BoxRef>, frozen: impl IntoIterator<Item = BoxRef>) -> Result<Self> {
        let vertices: BTreeSet<BoxRef> = vertices.into_iter().collect();
        let frozen: BTreeSet<BoxRef> = frozen.into_iter().collect();
        if let Some(f) = frozen.iter().find(|f| !vertices.contains(f)) {
            return Err(Error::Mutation(format!("frozen vertex {f} is not a vertex")));
        }
        Ok(Quiver { vertices, frozen, b: BTreeMap::new() })
    }

    /// Adds `m` arrows `u → v` (negative `m` reverses them).
    pub fn add_arrows(&mut self, u: BoxRef, v: BoxRef, m: i64) -> Result<()> {
        if u == v {
            return Err(Error::Mutation(format!("loop at {u}")));
        }
        for x in [u, v] {
            if !self.vertices.contains(&x) {
                return Err(Error::Mutation(format!("{x} is not a vertex")));
            }
        }
        let e = self.entry(u, v) + m;
        self.set_entry(u, v, e);
        Ok(())
    }

    fn set_entry(&mut self, u: BoxRef, v: BoxRef, e: i64) {
        if e == 0 {
            self.b.remove(&(u, v));
            self.b.remove(&(v, u));
        } else {
            self.b.insert((u, v), e);
            self.b.insert((v, u), -e);
        }
    }

    /// Signed arrow count `b_{uv}`.
    pub fn entry(&self, u: BoxRef, v: BoxRef) -> i64 {
        self.b.get(&(u, v)).copied().unwrap_or(0)
    }

    pub fn vertices(&self) -> &BTreeSet<BoxRef> {
        &self.vertices
    }

    pub fn frozen(&self) -> &BTreeSet<BoxRef> {
        &self.frozen
    }

    pub fn is_frozen(&self, v: BoxRef) -> bool {
        self.frozen.contains(&v)
    }

    pub fn mutable(&self) -> Vec<BoxRef> {
        self.vertices.iter().filter(|v| !self.frozen.contains(v)).copied().collect()
    }

    /// Arrows `(u, v, multiplicity)` with positive multiplicity.
    pub fn arrows(&self) -> Vec<(BoxRef, BoxRef, i64)> {
        self.b.iter().filter(|(_, &m)| m > 0).map(|(&(u, v), &m)| (u, v, m)).collect()
    }

    /// `(u, m)` for arrows `u → v`.
    pub fn in_arrows(&self, v: BoxRef) -> Vec<(BoxRef, i64)> {
        self.vertices.iter().map(|&u| (u, self.entry(u, v))).filter(|&(_, m)| m > 0).collect()
    }

    /// `(w, m)` for arrows `v → w`.
    pub fn out_arrows(&self, v: BoxRef) -> Vec<(BoxRef, i64)> {
        self.vertices.iter().map(|&w| (w, self.entry(v, w))).filter(|&(_, m)| m > 0).collect()
    }

    /// Quiver mutation at a mutable vertex.
    pub fn mutate(&self, k: BoxRef) -> Result<Quiver> {
        self.check_mutable(k)?;
        let mut out = self.clone();
        let verts: Vec<BoxRef> = self.vertices.iter().copied().collect();
        for (x, &u) in verts.iter().enumerate() {
            for &v in &verts[x + 1..] {
                if u == k || v == k {
                    out.set_entry(u, v, -self.entry(u, v));
                    continue;
                }
                if self.is_frozen(u) && self.is_frozen(v) {
                    continue;
                }
                let (uk, kv) = (self.entry(u, k), self.entry(k, v));
                let e = self.entry(u, v) + (uk.abs() * kv + uk * kv.abs()) / 2;
                out.set_entry(u, v, e);
            }
        }
        Ok(out)
    }

    fn check_mutable(&self, k: BoxRef) -> Result<()> {
        if !self.vertices.contains(&k) {
            return Err(Error::Mutation(format!("{k} is not a vertex")));
        }
        if self.is_frozen(k) {
            return Err(Error::Mutation(format!("{k} is frozen")));
        }
        Ok(())
    }

    /// Graphviz rendering; frozen vertices are boxes.
    pub fn to_dot(&self, labels: &BTreeMap<BoxRef, String>) -> String {
        let mut s = String::from("digraph quiver {\n");
        for v in &self.vertices {
            let shape = if self.is_frozen(*v) { "box" } else { "ellipse" };
            let label = labels.get(v).cloned().unwrap_or_else(|| v.to_string());
            let _ = writeln!(s, "  {} [label=\"{}\", shape={}];", v.id(), label, shape);
        }
        for (u, v, m) in self.arrows() {
            for _ in 0..m {
                let _ = writeln!(s, "  {} -> {};", u.id(), v.id());
            }
        }
        s.push_str("}\n");
        s
    }

    pub fn to_json(&self, labels: &BTreeMap<BoxRef, String>) -> Value {
        let verts: Vec<Value> = self
            .vertices
            .iter()
            .map(|v| {
                json!({
                    "id": v.id(),
                    "box": [v.a, v.i],
                    "frozen": self.is_frozen(*v),
                    "label": labels.get(v).cloned().unwrap_or_default(),
                })
            })
            .collect();
        let arrows: Vec<Value> =
            self.arrows().iter().map(|(u, v, m)| json!({"from": u.id(), "to": v.id(), "multiplicity": m})).collect();
        json!({"vertices": verts, "arrows": arrows})
    }
}

/// The initial quiver: boxes of `λ/μ`, frozen on the ribbon, with arrows
/// `(a,i) → (a+1,i)`, `(a,i) → (a,i-1)`, `(a,i) → (a-1,i+1)` whenever both
/// ends are boxes and at least one is mutable.
pub fn quiver(d: &SkewDiagram) -> Quiver {
    let boxes = d.boxes();
    let frozen: Vec<BoxRef> = boxes.iter().copied().filter(|&b| d.is_frozen(b)).collect();
    let mut q = Quiver::new(boxes.iter().copied(), frozen).expect("frozen boxes are boxes");
    for &b in &boxes {
        let targets = [
            Some(BoxRef::new(b.a + 1, b.i)),
            (b.i > 1).then(|| BoxRef::new(b.a, b.i - 1)),
            (b.a > 1).then(|| BoxRef::new(b.a - 1, b.i + 1)),
        ];
        for t in targets.into_iter().flatten() {
            if d.contains(t) && !(d.is_frozen(b) && d.is_frozen(t)) {
                q.add_arrows(b, t, 1).expect("distinct boxes of the diagram");
            }
        }
    }
    q
}

/// Quiver with values of the cluster variables at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    pub quiver: Quiver,
    pub values: BTreeMap<BoxRef, Rat>,
}

impl Seed {
    pub fn new(quiver: Quiver, values: BTreeMap<BoxRef, Rat>) -> Result<Self> {
        if quiver.vertices().iter().ne(values.keys()) {
            return Err(Error::Mutation("values do not match the vertices".into()));
        }
        Ok(Seed { quiver, values })
    }

    pub fn value(&self, v: BoxRef) -> &Rat {
        &self.values[&v]
    }

    /// Seed mutation: `x_k x_k' = ∏_{i→k} x_i + ∏_{k→j} x_j`.
    pub fn mutate(&self, k: BoxRef) -> Result<Seed> {
        self.quiver.check_mutable(k)?;
        let old = self.value(k);
        if old.is_zero() {
            return Err(Error::Mutation(format!("x at {k} is zero")));
        }
        let prod = |arrows: Vec<(BoxRef, i64)>| -> Rat {
            arrows.into_iter().fold(Rat::one(), |acc, (u, m)| acc * pow(self.value(u), m))
        };
        let new = (prod(self.quiver.in_arrows(k)) + prod(self.quiver.out_arrows(k))) / old;
        let mut values = self.values.clone();
        values.insert(k, new);
        Ok(Seed { quiver: self.quiver.mutate(k)?, values })
    }

    /// `ŷ_k = ∏_{j→k} x_j^{m} / ∏_{k→j} x_j^{m}`.
    pub fn exchange_ratio(&self, k: BoxRef) -> Result<Rat> {
        self.quiver.check_mutable(k)?;
        let mut num = Rat::one();
        let mut den = Rat::one();
        for (u, m) in self.quiver.in_arrows(k) {
            num *= pow(self.value(u), m);
        }
        for (w, m) in self.quiver.out_arrows(k) {
            den *= pow(self.value(w), m);
        }
        if den.is_zero() {
            return Err(Error::ZeroDenominator(format!("out-product at {k}")));
        }
        Ok(num / den)
    }

    pub fn values_json(&self) -> Value {
        Value::Object(self.values.iter().map(|(b, x)| (b.id(), Value::String(format_rat(x)))).collect())
    }
}

fn pow(x: &Rat, m: i64) -> Rat {
    let p = num_traits::pow(x.clone(), m.unsigned_abs() as usize);
    if m.is_negative() {
        p.recip()
    } else {
        p
    }
}

/// `x_{a,i} = Δ_{I'(a,i)}(V)` on the initial quiver.
pub fn seed_at(p: &PointV) -> Result<Seed> {
    let d = p.diagram();
    if !membership(p.matrix(), d) {
        return Err(Error::NotMember(format!("point does not lie on {d}")));
    }
    let values = d
        .boxes()
        .into_iter()
        .map(|b| Ok((b, p.plucker(&d.long_label(b)?))))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Seed::new(quiver(d), values)
}

/// Sorted `I'` labels, used as display names.
pub fn box_labels(d: &SkewDiagram) -> BTreeMap<BoxRef, String> {
    d.boxes()
        .into_iter()
        .map(|b| {
            let l = d.long_label(b).expect("box of the diagram");
            (b, l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
        })
        .collect()
}

/// Two-vertex quiver `u → v` with both vertices mutable.
pub fn toy_rank2(x1: Rat, x2: Rat) -> Seed {
    let (u, v) = (BoxRef::new(1, 1), BoxRef::new(2, 1));
    let mut q = Quiver::new([u, v], []).expect("no frozen vertices");
    q.add_arrows(u, v, 1).expect("distinct vertices");
    Seed::new(q, BTreeMap::from([(u, x1), (v, x2)])).expect("values match")
}
