//! Seeded random multiplicity tables and bicomplexes.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bicomplex::{bd, scramble, Arrow, Bicomplex, MultiplicityTable, ShapeKind, ZigzagShape};
use crate::decomposition::realize;

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Which indecomposables a generator may emit.
#[derive(Clone, Copy, Debug)]
pub struct ShapeParams {
    /// Longest zigzag.
    pub max_len: usize,
    /// Anchors are drawn from `[lo, hi]²`.
    pub lo: i64,
    pub hi: i64,
    pub allow_even: bool,
    pub allow_squares: bool,
}

impl Default for ShapeParams {
    fn default() -> Self {
        ShapeParams { max_len: 9, lo: 0, hi: 4, allow_even: true, allow_squares: true }
    }
}

/// One random dot, square or zigzag.
pub fn random_shape(rng: &mut GenRng, sp: &ShapeParams) -> ZigzagShape {
    let anchor = bd(rng.gen_range(sp.lo..=sp.hi), rng.gen_range(sp.lo..=sp.hi));
    let roll = rng.gen_range(0..10);
    if roll < 2 {
        return ZigzagShape::dot(anchor);
    }
    if roll < 4 && sp.allow_squares {
        return ZigzagShape::square(anchor);
    }
    let lengths: Vec<usize> = (2..=sp.max_len.max(1)).filter(|l| sp.allow_even || l % 2 == 1).collect();
    let Some(&length) = lengths.choose(rng) else {
        return ZigzagShape::dot(anchor);
    };
    let arrow = if rng.gen_bool(0.5) { Arrow::Horizontal } else { Arrow::Vertical };
    ZigzagShape::zigzag(anchor, length, arrow).expect("length ≥ 2")
}

/// A table with between 1 and `max_parts` summands.
pub fn random_table(rng: &mut GenRng, max_parts: usize, sp: &ShapeParams) -> MultiplicityTable {
    let parts = rng.gen_range(1..=max_parts.max(1));
    let mut t = MultiplicityTable::new();
    for _ in 0..parts {
        t.add(random_shape(rng, sp), 1);
    }
    t
}

/// Realize a random table and hide it behind a random change of basis.
pub fn random_complex(seed: u64, max_parts: usize, sp: &ShapeParams) -> (MultiplicityTable, Bicomplex) {
    let mut r = rng(seed);
    let t = random_table(&mut r, max_parts, sp);
    let a = realize(&t).expect("random tables are valid");
    (t, scramble(&a, seed ^ 0x9e37_79b9_7f4a_7c15))
}

fn inside(s: &ZigzagShape, n: i64) -> bool {
    s.entries().iter().all(|e| (0..=n).contains(&e.pq.p) && (0..=n).contains(&e.pq.q))
}

/// Random shape with every entry in `[0, n]²`.
fn shape_in_window(rng: &mut GenRng, n: i64, max_len: usize, allow_even: bool) -> ZigzagShape {
    let sp = ShapeParams { max_len, lo: 0, hi: n, allow_even, allow_squares: n >= 1 };
    loop {
        let s = random_shape(rng, &sp);
        if inside(&s, n) {
            return s;
        }
    }
}

/// A table with the symmetries of a compact complex manifold of dimension
/// `n`: closed under conjugation and under the duality `(p,q) ↦ (n−p, n−q)`,
/// with support in `[0, n]²`, no even zigzags and dots at `(0,0)` and `(n,n)`.
pub fn geometric_table(rng: &mut GenRng, n: i64, max_parts: usize, max_len: usize) -> MultiplicityTable {
    let mut t = MultiplicityTable::new();
    t.add(ZigzagShape::dot(bd(0, 0)), 1);
    t.add(ZigzagShape::dot(bd(n, n)), 1);
    for _ in 0..rng.gen_range(0..=max_parts) {
        let s = shape_in_window(rng, n, max_len, false);
        let mut orbit = vec![s, s.conjugate(), s.reflect(n), s.conjugate().reflect(n)];
        orbit.sort();
        orbit.dedup();
        for o in orbit {
            t.add(o, 1);
        }
    }
    t
}

/// A table supported in `[0, n]²` with no even zigzags, in which only dots
/// and squares meet the corners `(n, 0)` and `(0, n)`.
pub fn window_table(rng: &mut GenRng, n: i64, max_parts: usize) -> MultiplicityTable {
    let corners = [bd(n, 0), bd(0, n)];
    let mut t = MultiplicityTable::new();
    for _ in 0..rng.gen_range(1..=max_parts.max(1)) {
        let s = loop {
            let s = shape_in_window(rng, n, 2 * n as usize + 1, false);
            if s.kind != ShapeKind::Zigzag || s.entries().iter().all(|e| !corners.contains(&e.pq)) {
                break s;
            }
        };
        t.add(s, 1);
    }
    t
}
