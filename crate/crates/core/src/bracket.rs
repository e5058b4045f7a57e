//! Kauffman bracket by state sum, an independent recursive evaluator for
//! cross-checking, and the Jones polynomial.

use std::collections::BTreeMap;

use crate::diagram::{ArcId, Diagram, Smoothing};
use crate::error::BracketError;
use crate::poly::{loop_value, neg_cube_a_pow, LaurentPoly, Var};

pub const DEFAULT_CAP: usize = 24;
pub const ORACLE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketOptions {
    /// Largest crossing count accepted.
    pub cap: usize,
    /// Number of chunks the state space is split into, each summed on its
    /// own thread. `1` runs inline.
    pub threads: usize,
}

impl Default for BracketOptions {
    fn default() -> Self {
        BracketOptions { cap: DEFAULT_CAP, threads: 1 }
    }
}

/// States are enumerated as `u64` bit patterns.
const HARD_CAP: usize = 63;

fn check_cap(d: &Diagram, cap: usize) -> Result<(), BracketError> {
    let cap = cap.min(HARD_CAP);
    if d.crossing_count() > cap {
        return Err(BracketError::CapExceeded { crossings: d.crossing_count(), cap });
    }
    Ok(())
}

/// Arc ends joined by each smoothing of each crossing, over dense arc
/// indices.
struct Joins {
    arcs: usize,
    a: Vec<[(u16, u16); 2]>,
    b: Vec<[(u16, u16); 2]>,
}

impl Joins {
    fn new(d: &Diagram) -> Self {
        let index: BTreeMap<ArcId, u16> = d.arcs().enumerate().map(|(i, (a, _))| (a, i as u16)).collect();
        let pair = |x: &[ArcId; 4], (p, q): (usize, usize)| (index[&x[p]], index[&x[q]]);
        let [a0, a1] = Smoothing::A.pairs();
        let [b0, b1] = Smoothing::B.pairs();
        Joins {
            arcs: index.len(),
            a: d.crossings().iter().map(|x| [pair(x, a0), pair(x, a1)]).collect(),
            b: d.crossings().iter().map(|x| [pair(x, b0), pair(x, b1)]).collect(),
        }
    }

    /// Loop count of one state. Bit `n-1-i` of `state` selects the
    /// smoothing of crossing `i` (set means B), so numeric order is
    /// lexicographic order over crossings.
    fn loops(&self, state: u64, parent: &mut [u16]) -> u32 {
        let n = self.a.len();
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u16;
        }
        let mut components = self.arcs as u32;
        for i in 0..n {
            let joins = if state >> (n - 1 - i) & 1 == 1 { &self.b[i] } else { &self.a[i] };
            for &(x, y) in joins {
                let (rx, ry) = (find(parent, x), find(parent, y));
                if rx != ry {
                    parent[rx as usize] = ry;
                    components -= 1;
                }
            }
        }
        components
    }
}

fn find(parent: &mut [u16], mut x: u16) -> u16 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Histogram of states by (number of B-smoothings, loop count).
type StateCounts = BTreeMap<(u32, u32), u64>;

fn count_states(joins: &Joins, range: std::ops::Range<u64>) -> StateCounts {
    let mut counts = StateCounts::new();
    let mut parent = vec![0u16; joins.arcs];
    for state in range {
        let loops = joins.loops(state, &mut parent);
        *counts.entry((state.count_ones(), loops)).or_default() += 1;
    }
    counts
}

/// State sum over all `2^n` smoothings, with union-find loop counting.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    kauffman_bracket_with(d, BracketOptions::default())
}

pub fn kauffman_bracket_with(d: &Diagram, opts: BracketOptions) -> Result<LaurentPoly, BracketError> {
    check_cap(d, opts.cap)?;
    let n = d.crossing_count();
    let total = 1u64 << n;
    let joins = Joins::new(d);
    let chunks = opts.threads.max(1) as u64;

    let counts = if chunks == 1 {
        count_states(&joins, 0..total)
    } else {
        let bounds: Vec<u64> = (0..=chunks).map(|k| total * k / chunks).collect();
        let partials: Vec<StateCounts> = std::thread::scope(|s| {
            let handles: Vec<_> = bounds
                .windows(2)
                .map(|w| {
                    let joins = &joins;
                    let range = w[0]..w[1];
                    s.spawn(move || count_states(joins, range))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("state-sum worker panicked")).collect()
        });
        let mut merged = StateCounts::new();
        for part in partials {
            for (k, v) in part {
                *merged.entry(k).or_default() += v;
            }
        }
        merged
    };

    let delta = loop_value();
    let mut delta_pows: Vec<LaurentPoly> = vec![LaurentPoly::one(Var::A)];
    let mut out = LaurentPoly::zero(Var::A);
    for ((b_count, loops), count) in counts {
        let loops = loops + d.free_loops();
        while delta_pows.len() < loops as usize {
            let next = delta_pows.last().unwrap() * &delta;
            delta_pows.push(next);
        }
        let a_exp = n as i64 - 2 * b_count as i64;
        out = &out + &delta_pows[loops as usize - 1].scale(count, 4 * a_exp);
    }
    Ok(out)
}

/// Recursive skein evaluation: smooth the first crossing both ways by
/// relabeling arcs, recurse, and count circles at the leaves. Shares no
/// code with the state sum.
pub fn kauffman_bracket_oracle(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    check_cap(d, ORACLE_CAP)?;
    let crossings: Vec<[ArcId; 4]> = d.crossings().to_vec();
    let poly = skein(crossings, d.free_loops());
    Ok(poly)
}

fn skein(crossings: Vec<[ArcId; 4]>, loops: u32) -> LaurentPoly {
    let Some((&[a, b, c, d], rest)) = crossings.split_first() else {
        // Only circles remain.
        return loop_value().pow(loops - 1);
    };
    let resolve = |first: (ArcId, ArcId), second: (ArcId, ArcId)| {
        let mut rest = rest.to_vec();
        let mut loops = loops;
        let mut second = second;
        // Join the first pair, renaming y to x everywhere else.
        let (x, y) = first;
        if x == y {
            loops += 1;
        } else {
            rename(&mut rest, y, x);
            if second.0 == y {
                second.0 = x;
            }
            if second.1 == y {
                second.1 = x;
            }
        }
        let (x, y) = second;
        if x == y {
            loops += 1;
        } else {
            rename(&mut rest, y, x);
        }
        skein(rest, loops)
    };
    let with_a = resolve((a, b), (c, d));
    let with_b = resolve((a, d), (b, c));
    &with_a.scale(1, 4) + &with_b.scale(1, -4)
}

fn rename(crossings: &mut [[ArcId; 4]], from: ArcId, to: ArcId) {
    for x in crossings.iter_mut() {
        for arc in x.iter_mut() {
            if *arc == from {
                *arc = to;
            }
        }
    }
}

/// `(-A^3)^(-w) <D>` with `A = t^(-1/4)`.
pub fn jones(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    jones_with(d, BracketOptions::default())
}

pub fn jones_with(d: &Diagram, opts: BracketOptions) -> Result<LaurentPoly, BracketError> {
    let bracket = kauffman_bracket_with(d, opts)?;
    jones_from_bracket(&bracket, d.writhe())
}

pub fn jones_from_bracket(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly, BracketError> {
    Ok((&neg_cube_a_pow(-writhe) * bracket).substitute_a_to_t()?)
}
