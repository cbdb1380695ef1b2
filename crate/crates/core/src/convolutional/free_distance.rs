use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::polymatrix::ConvolutionalCode;
use crate::error::{Error, Result};
use crate::fields::{Fe, GaloisField};
use crate::matrix::{axpy, weight};
use crate::numtheory::saturating_pow;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FreeDistanceMethod {
    StateSearch,
    TheoremABracket,
    BoundCertified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeDistanceResult {
    pub lower: usize,
    /// `None` when nothing above the lower bound is known.
    pub upper: Option<usize>,
    pub method: FreeDistanceMethod,
    pub weight_cap: Option<usize>,
    pub states: Option<u128>,
    pub edges: Option<u128>,
}

impl FreeDistanceResult {
    /// The free distance when the bracket is closed.
    pub fn exact(&self) -> Option<usize> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }
}

/// States times input symbols of the controller-canonical trellis.
pub fn trellis_edges(field: &GaloisField, code: &ConvolutionalCode) -> u128 {
    saturating_pow(field.order(), (code.gamma + code.k) as u64)
}

/// Each row `r` keeps its last `ν_r` inputs; a state is the tuple of those
/// symbols, read as base-`Q` digits.
struct Trellis {
    states: usize,
    inputs: usize,
    /// Output contribution of the stored inputs.
    state_out: Vec<Vec<Fe>>,
    /// Output contribution of the current inputs.
    input_out: Vec<Vec<Fe>>,
    /// State with every row's memory moved one slot older.
    shifted: Vec<usize>,
    /// Index offset from placing the current inputs in the newest slots.
    shift_in: Vec<usize>,
}

impl Trellis {
    fn new(field: &GaloisField, code: &ConvolutionalCode) -> Self {
        let q = field.order() as usize;
        let g = code.generator.coefficients();
        let n = code.n;
        // slot (r, j) holds u_{r, t-j} for 1 ≤ j ≤ ν_r
        let mut slot_pos = Vec::new();
        let mut pos = 0;
        for &nu in &code.row_degrees {
            let row: Vec<usize> = (0..nu).map(|j| pos + j).collect();
            pos += nu;
            slot_pos.push(row);
        }
        let states = q.pow(code.gamma as u32);
        let inputs = q.pow(code.k as u32);

        let digits = |mut x: usize, len: usize| {
            let mut d = vec![0usize; len];
            for slot in d.iter_mut() {
                *slot = x % q;
                x /= q;
            }
            d
        };
        let mut state_out = Vec::with_capacity(states);
        let mut shifted = Vec::with_capacity(states);
        for s in 0..states {
            let d = digits(s, code.gamma);
            let mut out = vec![Fe::ZERO; n];
            let mut next = 0usize;
            for (r, slots) in slot_pos.iter().enumerate() {
                for (j, &p) in slots.iter().enumerate() {
                    if d[p] != 0 {
                        axpy(field, &mut out, Fe(d[p] as u32), g[j + 1].row(r));
                    }
                    if j + 1 < slots.len() {
                        next += d[p] * q.pow(slots[j + 1] as u32);
                    }
                }
            }
            state_out.push(out);
            shifted.push(next);
        }
        let mut input_out = Vec::with_capacity(inputs);
        let mut shift_in = Vec::with_capacity(inputs);
        for u in 0..inputs {
            let d = digits(u, code.k);
            let mut out = vec![Fe::ZERO; n];
            let mut off = 0usize;
            for (r, &ur) in d.iter().enumerate() {
                if ur != 0 {
                    axpy(field, &mut out, Fe(ur as u32), g[0].row(r));
                    if let Some(&p) = slot_pos[r].first() {
                        off += ur * q.pow(p as u32);
                    }
                }
            }
            input_out.push(out);
            shift_in.push(off);
        }
        Trellis { states, inputs, state_out, input_out, shifted, shift_in }
    }

    fn edge_weight(&self, field: &GaloisField, s: usize, u: usize) -> usize {
        let a = &self.state_out[s];
        let b = &self.input_out[u];
        a.iter().zip(b).filter(|(&x, &y)| !field.add(x, y).is_zero()).count()
    }
}

/// Minimum weight of a path that leaves the zero state on a nonzero input
/// and returns to it, found by Dijkstra's algorithm; weights above
/// `weight_cap` are pruned.
pub fn free_distance_exact(
    field: &GaloisField,
    code: &ConvolutionalCode,
    weight_cap: usize,
    budget: u64,
) -> Result<FreeDistanceResult> {
    let edges = trellis_edges(field, code);
    if edges > budget as u128 {
        return Err(Error::BudgetExceeded { needed: edges, budget });
    }
    let t = Trellis::new(field, code);
    let mut best = weight_cap + 1;
    let mut dist = vec![usize::MAX; t.states];
    let mut heap = BinaryHeap::new();
    for u in 1..t.inputs {
        let w = weight(&t.input_out[u]);
        let next = t.shift_in[u];
        if next == 0 {
            best = best.min(w);
        } else if w < dist[next] && w <= weight_cap {
            dist[next] = w;
            heap.push(Reverse((w, next)));
        }
    }
    while let Some(Reverse((w, s))) = heap.pop() {
        if w >= best {
            break;
        }
        if w > dist[s] {
            continue;
        }
        let base = t.shifted[s];
        for u in 0..t.inputs {
            let nw = w + t.edge_weight(field, s, u);
            if nw >= best {
                continue;
            }
            let next = base + t.shift_in[u];
            if next == 0 {
                best = nw;
            } else if nw < dist[next] {
                dist[next] = nw;
                heap.push(Reverse((nw, next)));
            }
        }
    }
    let (lower, upper) = if best <= weight_cap { (best, Some(best)) } else { (weight_cap + 1, None) };
    Ok(FreeDistanceResult {
        lower,
        upper,
        method: FreeDistanceMethod::StateSearch,
        weight_cap: Some(weight_cap),
        states: Some(t.states as u128),
        edges: Some(edges),
    })
}

/// `(min(d₀ + d_μ, d), d)`.
pub fn theorem_a_bracket(d0: usize, dmu: usize, d_block: usize) -> (usize, usize) {
    ((d0 + dmu).min(d_block), d_block)
}
