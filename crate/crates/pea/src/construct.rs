//! Generators for the standard families of finite pseudo effect algebras:
//! intervals `[0, u]` in partially ordered abelian groups over `Z^n`,
//! horizontal sums, direct products, and seeded random tables.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{CertifiedAlgebra, Elem, PartialAlgebra};
use crate::error::{Error, Result};

/// Positive cone used to order `Z^dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cone {
    /// Componentwise order.
    Product,
    /// Lexicographic order.
    Lexicographic,
    /// `g <= h` iff `g = h` or `g` is strictly below `h` in every coordinate.
    Strict,
}

impl std::str::FromStr for Cone {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "product" => Ok(Cone::Product),
            "lex" | "lexicographic" => Ok(Cone::Lexicographic),
            "strict" => Ok(Cone::Strict),
            other => Err(Error::Parse(format!(
                "unknown cone {other:?}; expected product, lex, or strict"
            ))),
        }
    }
}

/// Description of a group interval `[0, u]` inside `(Z^dim, cone)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupIntervalSpec {
    pub dim: usize,
    pub cone: Cone,
    pub unit: Vec<i64>,
}

impl GroupIntervalSpec {
    pub fn new(cone: Cone, unit: Vec<i64>) -> Self {
        GroupIntervalSpec {
            dim: unit.len(),
            cone,
            unit,
        }
    }
}

fn cone_positive(cone: Cone, g: &[i64]) -> bool {
    match cone {
        Cone::Product => g.iter().all(|&x| x >= 0),
        Cone::Lexicographic => match g.iter().find(|&&x| x != 0) {
            Some(&x) => x > 0,
            None => true,
        },
        Cone::Strict => g.iter().all(|&x| x == 0) || g.iter().all(|&x| x >= 1),
    }
}

fn cone_leq(cone: Cone, g: &[i64], h: &[i64]) -> bool {
    let diff: Vec<i64> = h.iter().zip(g).map(|(a, b)| a - b).collect();
    cone_positive(cone, &diff)
}

/// Builds the interval algebra `{g : 0 <= g <= u}` with addition restricted
/// to sums staying inside the interval.
///
/// The lexicographic cone only yields a finite interval when every coordinate
/// of the unit except the last is zero; other lexicographic units are
/// rejected with [`Error::InfiniteInterval`]. (For example `u = (1, 1)` puts
/// every `(0, k)` with `k >= 0` below the unit.)
pub fn gamma(spec: &GroupIntervalSpec) -> Result<CertifiedAlgebra> {
    if spec.dim == 0 || spec.unit.len() != spec.dim {
        return Err(Error::InvalidSpec(format!(
            "unit length {} does not match dim {}",
            spec.unit.len(),
            spec.dim
        )));
    }
    let u = &spec.unit;
    if !cone_positive(spec.cone, u) || u.iter().all(|&x| x == 0) {
        return Err(Error::InvalidSpec(format!(
            "unit {u:?} is not strictly positive in the {:?} cone",
            spec.cone
        )));
    }
    if spec.cone == Cone::Lexicographic && u[..spec.dim - 1].iter().any(|&x| x != 0) {
        return Err(Error::InfiniteInterval(format!(
            "lexicographic interval below {u:?} contains infinitely many elements"
        )));
    }

    // Enumerate the carrier in lexicographic vector order.
    let mut elems: Vec<Vec<i64>> = Vec::new();
    match spec.cone {
        Cone::Product => {
            // odometer from (0,...,0) to u inclusive
            let mut cur = vec![0i64; spec.dim];
            'outer: loop {
                elems.push(cur.clone());
                let mut k = spec.dim;
                loop {
                    if k == 0 {
                        break 'outer;
                    }
                    k -= 1;
                    if cur[k] < u[k] {
                        cur[k] += 1;
                        for x in cur.iter_mut().skip(k + 1) {
                            *x = 0;
                        }
                        continue 'outer;
                    }
                }
            }
        }
        Cone::Lexicographic => {
            // only units of the shape (0,...,0,k) reach this point
            let last = u[spec.dim - 1];
            for t in 0..=last {
                let mut v = vec![0i64; spec.dim];
                v[spec.dim - 1] = t;
                elems.push(v);
            }
        }
        Cone::Strict => {
            elems.push(vec![0i64; spec.dim]);
            // interior: strictly between 0 and u in every coordinate
            if u.iter().all(|&x| x >= 2) {
                let mut cur: Vec<i64> = vec![1; spec.dim];
                'outer: loop {
                    elems.push(cur.clone());
                    let mut k = spec.dim;
                    loop {
                        if k == 0 {
                            break 'outer;
                        }
                        k -= 1;
                        if cur[k] < u[k] - 1 {
                            cur[k] += 1;
                            for x in cur.iter_mut().skip(k + 1) {
                                *x = 1;
                            }
                            continue 'outer;
                        }
                    }
                }
            }
            elems.push(u.clone());
            elems.sort();
            elems.dedup();
        }
    }
    finish_gamma(spec, elems)
}

fn finish_gamma(spec: &GroupIntervalSpec, elems: Vec<Vec<i64>>) -> Result<CertifiedAlgebra> {
    let index: HashMap<Vec<i64>, Elem> = elems
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i))
        .collect();
    let n = elems.len();
    let zero = index[&vec![0i64; spec.dim]];
    let one = index[&spec.unit];
    let labels: Vec<String> = elems.iter().map(|v| vector_label(v)).collect();

    let mut table = PartialAlgebra::new(n, zero, one).with_labels(labels);
    for (a, va) in elems.iter().enumerate() {
        for (b, vb) in elems.iter().enumerate() {
            let sum: Vec<i64> = va.iter().zip(vb).map(|(x, y)| x + y).collect();
            // the sum must land back in the interval and stay below the unit
            if let Some(&s) = index.get(&sum) {
                if cone_leq(spec.cone, &sum, &spec.unit) {
                    table.set(a, b, s);
                }
            }
        }
    }
    table.certify()
}

fn vector_label(v: &[i64]) -> String {
    if v.len() == 1 {
        v[0].to_string()
    } else {
        let coords: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        format!("({})", coords.join(","))
    }
}

/// Linear chain `0 < 1 < ... < n`, i.e. the interval `[0, n]` in `Z`.
pub fn chain(n: u32) -> Result<CertifiedAlgebra> {
    if n == 0 {
        return Err(Error::InvalidSpec("chain needs n >= 1".into()));
    }
    gamma(&GroupIntervalSpec::new(Cone::Product, vec![n as i64]))
}

/// Boolean algebra `2^n` as the interval `[0, (1,...,1)]` in `Z^n`.
pub fn boolean(n: u32) -> Result<CertifiedAlgebra> {
    if n == 0 {
        return Err(Error::InvalidSpec("boolean needs n >= 1".into()));
    }
    gamma(&GroupIntervalSpec::new(Cone::Product, vec![1; n as usize]))
}

/// The interval `[0, (n, n)]` in `Z^2` under the componentwise-strict order:
/// bottom, top, and the integer points strictly inside the square.
pub fn strict_square(n: u32) -> Result<CertifiedAlgebra> {
    if n == 0 {
        return Err(Error::InvalidSpec("strict square needs n >= 1".into()));
    }
    gamma(&GroupIntervalSpec::new(
        Cone::Strict,
        vec![n as i64, n as i64],
    ))
}

/// Height-two orthomodular lattice `MO_n`: `n` complement pairs
/// `a_i + a_i' = a_i' + a_i = 1` and no other nonzero sums.
pub fn mo(n: u32) -> Result<CertifiedAlgebra> {
    if n == 0 {
        return Err(Error::InvalidSpec("mo needs n >= 1".into()));
    }
    let n = n as usize;
    let size = 2 * n + 2;
    let one = size - 1;
    let mut labels = vec!["0".to_string()];
    for i in 1..=n {
        labels.push(format!("a{i}"));
        labels.push(format!("a{i}'"));
    }
    labels.push("1".to_string());
    let mut t = PartialAlgebra::new(size, 0, one).with_labels(labels);
    for i in 0..n {
        let a = 2 * i + 1;
        let b = 2 * i + 2;
        t.set(a, b, one);
        t.set(b, a, one);
    }
    t.certify()
}

/// Glues two algebras along shared bottom and top; interiors stay disjoint
/// and sums never cross sides.
pub fn horizontal_sum(a: &CertifiedAlgebra, b: &CertifiedAlgebra) -> Result<CertifiedAlgebra> {
    if a.size() < 2 || b.size() < 2 {
        return Err(Error::InvalidSpec(
            "horizontal sum needs nondegenerate summands".into(),
        ));
    }
    let size = a.size() + b.size() - 2;
    // index 0 = shared zero, 1 = shared one, then A's interior, then B's
    let map_a: Vec<Elem> = {
        let mut next = 2;
        (0..a.size())
            .map(|x| {
                if x == a.zero() {
                    0
                } else if x == a.one() {
                    1
                } else {
                    let i = next;
                    next += 1;
                    i
                }
            })
            .collect()
    };
    let a_interior = a.size() - 2;
    let map_b: Vec<Elem> = {
        let mut next = 2 + a_interior;
        (0..b.size())
            .map(|x| {
                if x == b.zero() {
                    0
                } else if x == b.one() {
                    1
                } else {
                    let i = next;
                    next += 1;
                    i
                }
            })
            .collect()
    };

    let mut labels = vec!["0".to_string(), "1".to_string()];
    for x in 0..a.size() {
        if x != a.zero() && x != a.one() {
            labels.push(format!("A.{}", a.label(x)));
        }
    }
    for x in 0..b.size() {
        if x != b.zero() && x != b.one() {
            labels.push(format!("B.{}", b.label(x)));
        }
    }

    let mut t = PartialAlgebra::new(size, 0, 1).with_labels(labels);
    for x in 0..a.size() {
        for y in 0..a.size() {
            if let Some(s) = a.add(x, y) {
                t.set(map_a[x], map_a[y], map_a[s]);
            }
        }
    }
    for x in 0..b.size() {
        for y in 0..b.size() {
            if let Some(s) = b.add(x, y) {
                t.set(map_b[x], map_b[y], map_b[s]);
            }
        }
    }
    t.certify()
}

/// Componentwise product algebra on the cartesian product of carriers.
pub fn direct_product(a: &CertifiedAlgebra, b: &CertifiedAlgebra) -> Result<CertifiedAlgebra> {
    let size = a.size() * b.size();
    let idx = |x: Elem, y: Elem| x * b.size() + y;
    let labels: Vec<String> = (0..a.size())
        .flat_map(|x| (0..b.size()).map(move |y| (x, y)))
        .map(|(x, y)| format!("({},{})", a.label(x), b.label(y)))
        .collect();
    let mut t = PartialAlgebra::new(size, idx(a.zero(), b.zero()), idx(a.one(), b.one()))
        .with_labels(labels);
    for xa in 0..a.size() {
        for ya in 0..a.size() {
            let Some(sa) = a.add(xa, ya) else { continue };
            for xb in 0..b.size() {
                for yb in 0..b.size() {
                    if let Some(sb) = b.add(xb, yb) {
                        t.set(idx(xa, xb), idx(ya, yb), idx(sa, sb));
                    }
                }
            }
        }
    }
    t.certify()
}

/// Random partial table, *not* necessarily an algebra. Deterministic per
/// seed. Used to exercise the validator's rejection paths.
pub fn random_table(seed: u64, size_bound: usize) -> PartialAlgebra {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = rng.gen_range(3..=size_bound.max(3));
    let one = size - 1;
    let mut t = PartialAlgebra::new(size, 0, one);
    pair_complements(&mut t, &mut rng, size);
    // sprinkle junk entries; most of these break an axiom
    let extras = rng.gen_range(0..=3);
    for _ in 0..extras {
        let a = rng.gen_range(1..size);
        let b = rng.gen_range(1..size);
        let c = rng.gen_range(0..size);
        t.set(a, b, c);
    }
    t
}

fn pair_complements(t: &mut PartialAlgebra, rng: &mut ChaCha8Rng, size: usize) {
    let one = size - 1;
    let mut interior: Vec<Elem> = (1..one).collect();
    while let Some(a) = interior.pop() {
        if interior.is_empty() || rng.gen_bool(0.3) {
            // self-paired: a + a = 1
            t.set(a, a, one);
        } else {
            let j = rng.gen_range(0..interior.len());
            let b = interior.remove(j);
            t.set(a, b, one);
            t.set(b, a, one);
        }
    }
}

/// Randomized table completion: pairs interior elements into complements,
/// optionally adds extra consistent entries, and keeps only tables that pass
/// certification. Deterministic per seed; `None` when no attempt certifies.
pub fn random_algebra(seed: u64, size_bound: usize) -> Option<CertifiedAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _attempt in 0..8 {
        let size = rng.gen_range(3..=size_bound.max(3));
        let one = size - 1;
        let mut t = PartialAlgebra::new(size, 0, one);
        pair_complements(&mut t, &mut rng, size);
        let extras = rng.gen_range(0..=2);
        for _ in 0..extras {
            let a = rng.gen_range(1..one.max(2));
            let b = rng.gen_range(1..one.max(2));
            let c = rng.gen_range(1..size);
            let candidate = {
                let mut t2 = t.clone();
                t2.set(a, b, c);
                t2
            };
            if candidate.validate_axioms().certified() {
                t = candidate;
            }
        }
        if let Ok(alg) = t.certify() {
            return Some(alg);
        }
    }
    None
}

/// The named tables every suite and example leans on.
pub fn standard_corpus() -> Vec<(String, CertifiedAlgebra)> {
    let mut out: Vec<(String, CertifiedAlgebra)> = Vec::new();
    for n in 2..=8 {
        out.push((format!("chain-{n}"), chain(n).unwrap()));
    }
    for n in 2..=4 {
        out.push((format!("boolean-2^{n}"), boolean(n).unwrap()));
    }
    for n in 2..=4 {
        out.push((format!("mo-{n}"), mo(n).unwrap()));
    }
    for n in 3..=5 {
        out.push((format!("strict-square-{n}"), strict_square(n).unwrap()));
    }
    let c2 = chain(2).unwrap();
    let c3 = chain(3).unwrap();
    out.push(("product-c2xc3".into(), direct_product(&c2, &c3).unwrap()));
    out.push(("hsum-c2-c2".into(), horizontal_sum(&c2, &c2).unwrap()));
    out
}
