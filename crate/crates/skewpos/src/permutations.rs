//! Grassmann necklaces, bounded affine permutations and the Grassmannian
//! permutations attached to partitions.

use serde::{Deserialize, Serialize};

use crate::diagram::{Partition, SkewDiagram};
use crate::error::{Error, Result};

/// Position of `x` in the cyclic order `≤_i` (`i` has position 0).
pub fn cyclic_rank(i: usize, x: usize, n: usize) -> usize {
    (x + n - i % n) % n
}

/// Sorts a set by `≤_i`.
pub fn sort_cyclic(i: usize, set: &[usize], n: usize) -> Vec<usize> {
    let mut v = set.to_vec();
    v.sort_by_key(|&x| cyclic_rank(i, x, n));
    v
}

/// Componentwise comparison `A ≤_i B` of two `k`-subsets.
pub fn gale_leq(i: usize, a: &[usize], b: &[usize], n: usize) -> bool {
    let a = sort_cyclic(i, a, n);
    let b = sort_cyclic(i, b, n);
    a.iter()
        .zip(&b)
        .all(|(&x, &y)| cyclic_rank(i, x, n) <= cyclic_rank(i, y, n))
}

/// Source Grassmann necklace `(I_1, …, I_n)`; each entry sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannNecklace {
    n: usize,
    k: usize,
    entries: Vec<Vec<usize>>,
}

impl GrassmannNecklace {
    pub fn new(n: usize, k: usize, entries: Vec<Vec<usize>>) -> Result<Self> {
        if entries.len() != n {
            return Err(Error::InvalidNecklace(format!("{} entries, expected {n}", entries.len())));
        }
        let mut entries = entries;
        for (idx, e) in entries.iter_mut().enumerate() {
            e.sort_unstable();
            e.dedup();
            if e.len() != k || e.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::InvalidNecklace(format!(
                    "I_{} = {e:?} is not a {k}-subset of [{n}]",
                    idx + 1
                )));
            }
        }
        let neck = GrassmannNecklace { n, k, entries };
        for i in 1..=n {
            let cur = neck.entry(i);
            let prev = neck.entry(i - 1);
            if cur.contains(&i) {
                let removed: Vec<usize> = cur.iter().copied().filter(|&x| x != i).collect();
                let extra: Vec<usize> = prev.iter().copied().filter(|x| !removed.contains(x)).collect();
                if removed.iter().any(|x| !prev.contains(x)) || extra.len() != 1 {
                    return Err(Error::InvalidNecklace(format!(
                        "I_{} is not obtained from I_{i} by exchanging {i}",
                        if i == 1 { n } else { i - 1 }
                    )));
                }
            } else if cur != prev {
                return Err(Error::InvalidNecklace(format!(
                    "{i} is not in I_{i} but I_{i} differs from its predecessor"
                )));
            }
        }
        Ok(neck)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `I_i` with cyclic indices, so `entry(0) = I_n`.
    pub fn entry(&self, i: usize) -> &[usize] {
        &self.entries[(i + self.n - 1) % self.n]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }
}

/// `(k, n)`-bounded affine permutation stored through its window `f(1..=n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundedAffinePermutation {
    n: usize,
    k: usize,
    values: Vec<i64>,
}

impl BoundedAffinePermutation {
    pub fn new(n: usize, k: usize, values: Vec<i64>) -> Result<Self> {
        if values.len() != n {
            return Err(Error::InvalidPermutation(format!("window of length {}, expected {n}", values.len())));
        }
        let nn = n as i64;
        let mut seen = vec![false; n];
        for (idx, &v) in values.iter().enumerate() {
            let i = idx as i64 + 1;
            if v < i || v > i + nn {
                return Err(Error::InvalidPermutation(format!("f({i})={v} violates i <= f(i) <= i+n")));
            }
            let r = (v - 1).rem_euclid(nn) as usize;
            if seen[r] {
                return Err(Error::InvalidPermutation(format!("f({i})={v} repeats a residue mod {n}")));
            }
            seen[r] = true;
        }
        let big = values.iter().filter(|&&v| v > nn).count();
        if big != k {
            return Err(Error::InvalidPermutation(format!("{big} values exceed n, expected k={k}")));
        }
        Ok(BoundedAffinePermutation { n, k, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> &[i64] {
        &self.values
    }

    /// `f(x)` for any integer, using `f(x + n) = f(x) + n`.
    pub fn eval(&self, x: i64) -> i64 {
        let nn = self.n as i64;
        let q = (x - 1).div_euclid(nn);
        let r = (x - 1).rem_euclid(nn) as usize;
        self.values[r] + q * nn
    }

    /// `f` reduced mod `n` to a permutation of `[n]`.
    pub fn reduced(&self) -> Vec<usize> {
        let nn = self.n as i64;
        self.values.iter().map(|&v| ((v - 1).rem_euclid(nn) + 1) as usize).collect()
    }
}

/// Necklace of a skew diagram: `I'(a, i)` at position `a + i - 1` for each
/// ribbon box of `λ/μ`, `I_μ` everywhere else.
pub fn necklace(d: &SkewDiagram) -> GrassmannNecklace {
    let imu = d.i_mu();
    let mut entries = vec![imu; d.n()];
    for b in d.ribbon().r {
        entries[b.diagonal() - 1] = d.long_label(b).expect("ribbon box lies in the diagram");
    }
    GrassmannNecklace::new(d.n(), d.k(), entries).expect("diagram necklace is valid")
}

/// `f(a + μ̄_a) = a + λ̄_a` and `f(b_i) = n - k - λ_i + i + n`.
pub fn baf(d: &SkewDiagram) -> BoundedAffinePermutation {
    let n = d.n();
    let mut values = vec![0i64; n];
    for a in 1..=d.width() {
        values[a + d.mu_bar(a) - 1] = (a + d.lambda_bar(a)) as i64;
    }
    for i in 1..=d.k() {
        values[d.b(i) - 1] = (d.width() - d.lambda().part(i) + i + n) as i64;
    }
    BoundedAffinePermutation::new(n, d.k(), values).expect("diagram permutation is bounded affine")
}

pub fn necklace_to_baf(neck: &GrassmannNecklace) -> Result<BoundedAffinePermutation> {
    let n = neck.n();
    let mut values = vec![0i64; n];
    for i in 1..=n {
        let cur = neck.entry(i);
        let prev = neck.entry(i - 1);
        let gone: Vec<usize> = prev.iter().copied().filter(|x| !cur.contains(x)).collect();
        match gone.as_slice() {
            [] => values[i - 1] = if cur.contains(&i) { (i + n) as i64 } else { i as i64 },
            [j] => values[j - 1] = if i > *j { i as i64 } else { (i + n) as i64 },
            _ => return Err(Error::InvalidNecklace(format!("I_{} and I_{i} differ in more than one element", i - 1))),
        }
    }
    BoundedAffinePermutation::new(n, neck.k(), values)
}

/// `a ∈ I_i` iff some lift `a' ≡ a` has `a' ≤ i < f(a')`.
pub fn baf_to_necklace(f: &BoundedAffinePermutation) -> Result<GrassmannNecklace> {
    let n = f.n() as i64;
    let entries = (1..=n)
        .map(|i| {
            (1..=n)
                .filter(|&a| {
                    let fa = f.eval(a);
                    (a <= i && i < fa) || i < fa - n
                })
                .map(|a| a as usize)
                .collect()
        })
        .collect();
    GrassmannNecklace::new(f.n(), f.k(), entries)
}

/// Permutation of `[n]` in one-line notation, with an optional word in the
/// simple transpositions `s_j = (j, j+1)`. Words multiply as compositions:
/// `s_{j1} s_{j2} ⋯` is `s_{j1} ∘ s_{j2} ∘ ⋯`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermWord {
    pub one_line: Vec<usize>,
    pub word: Option<Vec<usize>>,
}

impl PermWord {
    pub fn new(one_line: Vec<usize>, word: Option<Vec<usize>>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{one_line:?} is not a permutation")));
            }
            seen[x] = true;
        }
        let p = PermWord { one_line, word };
        if let Some(w) = &p.word {
            if word_to_one_line(n, w)? != p.one_line {
                return Err(Error::InvalidPermutation("word does not multiply to the one-line form".into()));
            }
            if w.len() != p.length() {
                return Err(Error::InvalidPermutation("word is not reduced".into()));
            }
        }
        Ok(p)
    }

    pub fn identity(n: usize) -> Self {
        PermWord {
            one_line: (1..=n).collect(),
            word: Some(Vec::new()),
        }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.one_line[x - 1]
    }

    /// Periodic extension `w(x + n) = w(x) + n` to all integers.
    pub fn apply_affine(&self, x: i64) -> i64 {
        let n = self.n() as i64;
        let q = (x - 1).div_euclid(n);
        let r = (x - 1).rem_euclid(n) as usize;
        self.one_line[r] as i64 + q * n
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PermWord) -> PermWord {
        PermWord {
            one_line: other.one_line.iter().map(|&x| self.apply(x)).collect(),
            word: None,
        }
    }

    pub fn inverse(&self) -> PermWord {
        let mut inv = vec![0; self.n()];
        for (idx, &x) in self.one_line.iter().enumerate() {
            inv[x - 1] = idx + 1;
        }
        PermWord { one_line: inv, word: None }
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }
}

/// One-line form of `s_{j1} ∘ s_{j2} ∘ ⋯`.
pub fn word_to_one_line(n: usize, word: &[usize]) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = (1..=n).collect();
    for &j in word {
        if j == 0 || j >= n {
            return Err(Error::InvalidPermutation(format!("generator s_{j} out of range for n={n}")));
        }
        p.swap(j - 1, j);
    }
    Ok(p)
}

/// `w_λ = [n-k+1-λ_1, …, n-λ_k, 1+λ^t_{n-k}, …, k+λ^t_1]` with its column
/// word `C_{n-k} ⋯ C_1`, `C_j = s_{j+λ̄_j} ⋯ s_{k+j-1}`.
pub fn w_grassmannian(p: &Partition, n: usize, k: usize) -> Result<PermWord> {
    let d = SkewDiagram::new(n, k, p.clone(), Partition::empty())?;
    let w = n - k;
    let mut one_line: Vec<usize> = (1..=k).map(|i| w + i - p.part(i)).collect();
    one_line.extend((1..=w).map(|a| a + d.lambda_bar(a)));
    let word: Vec<usize> = (1..=w)
        .rev()
        .flat_map(|j| (j + d.lambda_bar(j))..=(k + j - 1))
        .collect();
    PermWord::new(one_line, Some(word))
}

/// `w_{λ/μ}` as the product over `a = n-k, …, 1` of `s_{a+μ̄_a} ⋯ s_{a+λ̄_a-1}`.
pub fn w_skew(d: &SkewDiagram) -> Result<PermWord> {
    let word: Vec<usize> = (1..=d.width())
        .rev()
        .flat_map(|a| (a + d.mu_bar(a))..(a + d.lambda_bar(a)))
        .collect();
    let one_line = word_to_one_line(d.n(), &word)?;
    PermWord::new(one_line, Some(word))
}

/// The shift `t_k = [1+n, …, k+n, k+1, …, n]` as an affine map.
fn t_k(x: i64, n: i64, k: i64) -> i64 {
    let r = (x - 1).rem_euclid(n) + 1;
    if r <= k {
        x + n
    } else {
        x
    }
}

/// Checks `f_{λ/μ} = w_λ t_k w_μ^{-1}` on the window.
pub fn verify_f_factorization(d: &SkewDiagram) -> bool {
    let (n, k) = (d.n(), d.k());
    let (Ok(wl), Ok(wm)) = (
        w_grassmannian(d.lambda(), n, k),
        w_grassmannian(d.mu(), n, k),
    ) else {
        return false;
    };
    let wm_inv = wm.inverse();
    let f = baf(d);
    (1..=n as i64).all(|x| {
        let y = wl.apply_affine(t_k(wm_inv.apply_affine(x), n as i64, k as i64));
        y == f.eval(x)
    })
}
