//! Signed unimodular decomposition of plane cones.
//!
//! The lattice-point generating function `f(K, x) = Σ_{m ∈ K ∩ ℤ²} x^m` of a
//! closed simplicial cone `K = cone(u, w)` is written as
//! `Σ ε_i x^{a_i} / ((1 - x^{b_i1})(1 - x^{b_i2}))` with every `(b_i1, b_i2)`
//! a lattice basis.
//!
//! The index `D = |det(u, w)|` is reduced by inserting a short lattice vector
//! `z = αu + βw`: `[K] ≡ sign(α)[cone(z, w)] + sign(β)[cone(u, z)]` up to
//! rays, and the children have indices `|α|D` and `|β|D`, both at most
//! `√(4D/3)`. The ray ambiguity is removed afterwards: with `y` a generic
//! interior vector, each unimodular cone `C` is replaced by
//! `{x : x + εy ∈ C for small ε > 0}`, which turns the identity into an exact
//! one for the closed cone.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{validation, Result};

pub type Vec2 = [i64; 2];

fn det(u: Vec2, w: Vec2) -> i128 {
    u[0] as i128 * w[1] as i128 - u[1] as i128 * w[0] as i128
}

fn dot(u: Vec2, w: Vec2) -> i128 {
    u[0] as i128 * w[0] as i128 + u[1] as i128 * w[1] as i128
}

fn add(u: Vec2, w: Vec2) -> Vec2 {
    [u[0] + w[0], u[1] + w[1]]
}

fn scale(k: i64, u: Vec2) -> Vec2 {
    [k * u[0], k * u[1]]
}

/// A closed cone spanned by two primitive, independent integer vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cone2 {
    u: Vec2,
    w: Vec2,
}

impl Cone2 {
    pub fn new(u: Vec2, w: Vec2) -> Result<Self> {
        for g in [u, w] {
            if g[0].gcd(&g[1]) != 1 {
                return Err(validation(format!("generator {g:?} is not primitive")));
            }
        }
        if det(u, w) == 0 {
            return Err(validation(format!("generators {u:?} and {w:?} are dependent")));
        }
        Ok(Cone2 { u, w })
    }

    pub fn generators(&self) -> (Vec2, Vec2) {
        (self.u, self.w)
    }

    pub fn index(&self) -> u64 {
        det(self.u, self.w).unsigned_abs() as u64
    }

    /// Closed-cone membership: both coordinates in the generator basis are `≥ 0`.
    pub fn contains(&self, m: Vec2) -> bool {
        let d = det(self.u, self.w).signum();
        det(m, self.w) * d >= 0 && det(self.u, m) * d >= 0
    }
}

/// `|det(u, w)|`.
pub fn cone_index(c: &Cone2) -> u64 {
    c.index()
}

/// `ε · x^apex / ((1 - x^b1)(1 - x^b2))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SignedConeTerm {
    pub sign: i8,
    pub apex: Vec2,
    pub denominators: [Vec2; 2],
}

impl SignedConeTerm {
    pub fn is_unimodular(&self) -> bool {
        det(self.denominators[0], self.denominators[1]).abs() == 1
    }

    /// Coefficient of `x^m` in the expansion of this term where each
    /// `1/(1 - x^b)` is expanded towards `⟨xi, ·⟩ → +∞`.
    fn coefficient(&self, m: Vec2, xi: Vec2) -> i64 {
        let [b1, b2] = self.denominators;
        let d = det(b1, b2);
        let rel = [m[0] - self.apex[0], m[1] - self.apex[1]];
        // Unimodular, so the coordinates are integers.
        let k1 = (det(rel, b2) / d) as i64;
        let k2 = (det(b1, rel) / d) as i64;
        let factor = |k: i64, b: Vec2| -> i64 {
            if dot(xi, b) > 0 {
                (k >= 0) as i64
            } else {
                -((k <= -1) as i64)
            }
        };
        self.sign as i64 * factor(k1, b1) * factor(k2, b2)
    }
}

impl fmt::Display for SignedConeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [b1, b2] = self.denominators;
        write!(
            f,
            "{} x^({},{}) / (1 - x^({},{})) (1 - x^({},{}))",
            if self.sign > 0 { '+' } else { '-' },
            self.apex[0],
            self.apex[1],
            b1[0],
            b1[1],
            b2[0],
            b2[1]
        )
    }
}

/// Shortest nonzero vector of the lattice `adj(M)·ℤ²`, `M = [u w]`, returned
/// as its preimage `z ∈ ℤ²` (so `adj(M)·z = det(M)·(α, β)` with `z = αu + βw`).
fn short_vector(u: Vec2, w: Vec2) -> Vec2 {
    let image = |z: Vec2| -> Vec2 { [w[1] * z[0] - w[0] * z[1], -u[1] * z[0] + u[0] * z[1]] };
    // (image, preimage) pairs, Lagrange-Gauss reduction.
    let mut b1 = ([w[1], -u[1]], [1, 0]);
    let mut b2 = ([-w[0], u[0]], [0, 1]);
    loop {
        if dot(b1.0, b1.0) > dot(b2.0, b2.0) {
            std::mem::swap(&mut b1, &mut b2);
        }
        let num = dot(b1.0, b2.0);
        let den = dot(b1.0, b1.0);
        let mu = Integer::div_floor(&(2 * num + den), &(2 * den)) as i64;
        if mu == 0 {
            break;
        }
        b2 = (add(b2.0, scale(-mu, b1.0)), add(b2.1, scale(-mu, b1.1)));
    }
    debug_assert_eq!(image(b1.1), b1.0);
    b1.1
}

fn split(u: Vec2, w: Vec2, sign: i8, out: &mut Vec<(i8, Vec2, Vec2)>) {
    let d = det(u, w);
    if d.abs() == 1 {
        out.push((sign, u, w));
        return;
    }
    let z = short_vector(u, w);
    // det(z, w) = α·d and det(u, z) = β·d
    let alpha = (det(z, w) * d).signum() as i8;
    let beta = (det(u, z) * d).signum() as i8;
    debug_assert!(alpha != 0 && beta != 0);
    split(z, w, sign * alpha, out);
    split(u, z, sign * beta, out);
}

/// Interior vector `p·u + q·w` not parallel to any of `rays`.
fn generic_interior(c: &Cone2, rays: &[Vec2]) -> Vec2 {
    for total in 2i64.. {
        for p in 1..total {
            let y = add(scale(p, c.u), scale(total - p, c.w));
            if rays.iter().all(|&g| det(y, g) != 0) {
                return y;
            }
        }
    }
    unreachable!()
}

/// Integer vector in the interior of the dual cone with `⟨xi, b⟩ ≠ 0` for every `b`.
fn generic_dual(c: &Cone2, vectors: &[Vec2]) -> Vec2 {
    let rot = |v: Vec2| -> Vec2 { [-v[1], v[0]] };
    let orient = |v: Vec2, target: Vec2| if dot(v, target) > 0 { v } else { scale(-1, v) };
    let u_star = orient(rot(c.w), c.u);
    let w_star = orient(rot(c.u), c.w);
    for total in 2i64.. {
        for p in 1..total {
            let xi = add(scale(p, u_star), scale(total - p, w_star));
            if vectors.iter().all(|&b| dot(xi, b) != 0) {
                return xi;
            }
        }
    }
    unreachable!()
}

/// Signed decomposition of `f(c, x)` into unimodular terms.
pub fn decompose(c: &Cone2) -> Vec<SignedConeTerm> {
    let mut cones = Vec::new();
    split(c.u, c.w, 1, &mut cones);
    let rays: Vec<Vec2> = cones.iter().flat_map(|&(_, g1, g2)| [g1, g2]).collect();
    let y = generic_interior(c, &rays);
    cones
        .into_iter()
        .map(|(sign, g1, g2)| {
            let d = det(g1, g2);
            // y = y1·g1 + y2·g2; a negative coordinate drops that facet.
            let y1 = det(y, g2) * d;
            let y2 = det(g1, y) * d;
            let mut apex = [0, 0];
            if y1 < 0 {
                apex = add(apex, g1);
            }
            if y2 < 0 {
                apex = add(apex, g2);
            }
            SignedConeTerm { sign, apex, denominators: [g1, g2] }
        })
        .collect()
}

/// Lattice points of `c` with `‖m‖∞ ≤ n`, by direct membership test.
pub fn enumerate_bruteforce(c: &Cone2, n: u32) -> BTreeSet<Vec2> {
    let n = n as i64;
    let mut points = BTreeSet::new();
    for x in -n..=n {
        for y in -n..=n {
            if c.contains([x, y]) {
                points.insert([x, y]);
            }
        }
    }
    points
}

/// Expands every term as a Laurent series in a fixed generic direction from
/// the dual cone, sums them on the box `‖m‖∞ ≤ n`, and compares with the
/// 0/1 indicator from [`enumerate_bruteforce`].
pub fn series_verify(terms: &[SignedConeTerm], c: &Cone2, n: u32) -> bool {
    if !terms.iter().all(SignedConeTerm::is_unimodular) {
        return false;
    }
    let dens: Vec<Vec2> = terms.iter().flat_map(|t| t.denominators).collect();
    let xi = generic_dual(c, &dens);
    let inside = enumerate_bruteforce(c, n);
    let n = n as i64;
    for x in -n..=n {
        for y in -n..=n {
            let m = [x, y];
            let coeff: i64 = terms.iter().map(|t| t.coefficient(m, xi)).sum();
            if coeff != inside.contains(&m) as i64 {
                return false;
            }
        }
    }
    true
}
