//! Randomized property suite driven by `skewpos verify`.

use clap::ValueEnum;
use itertools::Itertools;
use rand::Rng;
use serde::Serialize;
use serde_json::{json, Value};

use skewpos::linalg::Rat;
use skewpos::permutations::{baf, gale_leq};
use skewpos::plabic::{source_labels, trip_permutation};
use skewpos::splicing::{column_is_frozen, in_u_a};
use skewpos::variety::{membership, sample};
use skewpos::{PointV, SkewDiagram};

use crate::{necklace_oracle_agrees, roundtrip_ok, splice_reports, trial_rng};

/// Largest `n` for which the exhaustive necklace oracle runs.
pub const ORACLE_MAX_N: usize = 10;

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Membership,
    Necklace,
    Roundtrip,
    Plabic,
    Splice,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Membership => "membership",
            Property::Necklace => "necklace",
            Property::Roundtrip => "roundtrip",
            Property::Plabic => "plabic",
            Property::Splice => "splice",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub bound: i64,
    pub trials: usize,
    pub diagram: Option<SkewDiagram>,
    pub column: Option<usize>,
    pub only: Option<Property>,
    pub inject_fault: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            bound: skewpos::variety::DEFAULT_BOUND,
            trials: 50,
            diagram: None,
            column: None,
            only: None,
            inject_fault: false,
        }
    }
}

/// Enough to rerun a single failing check.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub trial: usize,
    pub property: Property,
    pub diagram: skewpos::diagram::DiagramJson,
    pub seed: u64,
    pub column: Option<usize>,
    pub message: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub trials: usize,
    pub checked: std::collections::BTreeMap<&'static str, usize>,
    pub skipped_splices: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "trials": self.trials,
            "checked": self.checked,
            "skipped_splices": self.skipped_splices,
            "failures": self.failures,
        })
    }
}

/// Entry `i` is the nonvanishing `k`-subset that dominates every other one
/// in the Gale order starting at `i+1`, found by comparing all pairs.
/// `None` when no dominating subset exists.
pub fn exhaustive_necklace(p: &PointV) -> Option<Vec<Vec<usize>>> {
    let (n, k) = (p.n(), p.k());
    let zero = Rat::from_integer(0.into());
    let bases: Vec<Vec<usize>> = (1..=n).combinations(k).filter(|s| p.plucker(s) != zero).collect();
    (1..=n)
        .map(|i| {
            let start = i % n + 1;
            bases.iter().find(|b| bases.iter().all(|c| gale_leq(start, c, b, n))).cloned()
        })
        .collect()
}

fn perturb(p: &PointV) -> PointV {
    let d = p.diagram().clone();
    let imu = d.i_mu();
    let mut m = p.matrix().clone();
    let j = (1..=d.n()).find(|j| !imu.contains(j)).unwrap_or(1);
    let x = m.get(0, j - 1) + Rat::from_integer(1.into());
    m.set(0, j - 1, x);
    PointV::new(d, m).map(|q| q.with_seed(p.seed())).unwrap_or_else(|_| p.clone())
}

pub fn run(cfg: &SuiteConfig) -> SuiteReport {
    let mut rep = SuiteReport { trials: cfg.trials, ..Default::default() };
    let wants = |p: Property| cfg.only.is_none_or(|o| o == p);
    for t in 0..cfg.trials {
        let mut rng = trial_rng(cfg.seed, t);
        let d = cfg.diagram.clone().unwrap_or_else(|| SkewDiagram::random(&mut rng, 2, ORACLE_MAX_N));
        let seed: u64 = rng.gen();
        let column = cfg.column.or_else(|| (d.width() > 0).then(|| rng.gen_range(1..=d.width())));
        let fail = |rep: &mut SuiteReport, property: Property, message: String| {
            rep.failures.push(Failure { trial: t, property, diagram: d.to_json(), seed, column, message });
        };
        let count = |rep: &mut SuiteReport, p: Property| *rep.checked.entry(p.name()).or_default() += 1;

        if wants(Property::Plabic) {
            count(&mut rep, Property::Plabic);
            if let Err(msg) = plabic_agrees(&d) {
                fail(&mut rep, Property::Plabic, msg);
            }
        }
        let needs_point = [Property::Membership, Property::Necklace, Property::Roundtrip, Property::Splice]
            .iter()
            .any(|&p| wants(p));
        if !needs_point {
            continue;
        }
        let p = match sample(&d, seed, cfg.bound, false) {
            Ok(p) if cfg.inject_fault => perturb(&p),
            Ok(p) => p,
            Err(e) => {
                fail(&mut rep, Property::Membership, format!("sampling failed: {e}"));
                continue;
            }
        };
        if wants(Property::Membership) {
            count(&mut rep, Property::Membership);
            if !membership(p.matrix(), &d) {
                fail(&mut rep, Property::Membership, "f_V differs from f of the diagram".into());
                continue;
            }
        }
        if wants(Property::Necklace) && d.n() <= ORACLE_MAX_N {
            count(&mut rep, Property::Necklace);
            if !necklace_oracle_agrees(&p) {
                fail(&mut rep, Property::Necklace, "greedy necklace differs from exhaustive oracle".into());
            }
        }
        if wants(Property::Roundtrip) {
            count(&mut rep, Property::Roundtrip);
            if !roundtrip_ok(&p) {
                fail(&mut rep, Property::Roundtrip, "xi(omega(V)) != V".into());
            }
        }
        if wants(Property::Splice) {
            let Some(a) = column else { continue };
            match in_u_a(&p, a) {
                Ok(true) => {}
                Ok(false) if column_is_frozen(&d, a) => {
                    count(&mut rep, Property::Splice);
                    fail(&mut rep, Property::Splice, format!("column {a} lies in the ribbon but V is not in U_{a}"));
                    continue;
                }
                Ok(false) => {
                    rep.skipped_splices += 1;
                    continue;
                }
                Err(e) => {
                    count(&mut rep, Property::Splice);
                    fail(&mut rep, Property::Splice, e.to_string());
                    continue;
                }
            }
            count(&mut rep, Property::Splice);
            match splice_reports(&p, a) {
                Ok(all) => {
                    for (name, r) in all {
                        if let Some(first) = r.failures.first() {
                            fail(&mut rep, Property::Splice, format!("{name}: {first}"));
                        }
                    }
                }
                Err(e) => fail(&mut rep, Property::Splice, e.to_string()),
            }
        }
    }
    rep
}

fn plabic_agrees(d: &SkewDiagram) -> Result<(), String> {
    let n = d.n() as i64;
    let f = baf(d);
    let tp = trip_permutation(d).map_err(|e| e.to_string())?;
    for j in 1..=d.n() {
        let want = (f.eval(j as i64) - 1).rem_euclid(n) + 1;
        if tp.targets[j - 1] as i64 != want {
            return Err(format!("trip {j} ends at {}, f gives {want}", tp.targets[j - 1]));
        }
    }
    let sl = source_labels(d).map_err(|e| e.to_string())?;
    if sl.mu_region != d.i_mu() {
        return Err(format!("μ region labeled {:?}, expected {:?}", sl.mu_region, d.i_mu()));
    }
    for (b, l) in &sl.boxes {
        let want = d.long_label(*b).map_err(|e| e.to_string())?;
        if *l != want {
            return Err(format!("box {b} labeled {l:?}, expected {want:?}"));
        }
    }
    Ok(())
}
