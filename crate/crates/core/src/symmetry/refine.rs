//! Coordinate colorings invariant under the monomial group.
//!
//! Colors are 64-bit hashes of labeling-free data, so their numeric order
//! is itself invariant and can be used to lay out canonical positions.

use crate::code::{echelon, for_each_in_span};
use crate::symbol::{Flavor, S3};
use crate::word::{ewt_bits, hwt_bits, symbol_at};

fn mix(mut h: u64, v: u64) -> u64 {
    h ^= v.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

fn hash_slice(seed: u64, values: &[u64]) -> u64 {
    values.iter().fold(seed, |h, &v| mix(h, v))
}

/// Symbol class under the local group: L keeps `1` apart from `ω, ω̄`.
fn class(flavor: Flavor, s: u8) -> usize {
    match (flavor, s) {
        (_, 0) => 0,
        (Flavor::L, 1) => 1,
        (Flavor::L, _) => 2,
        (Flavor::K, _) => 1,
    }
}

fn weight(flavor: Flavor, bits: u64) -> usize {
    match flavor {
        Flavor::L => ewt_bits(bits) as usize,
        Flavor::K => hwt_bits(bits) as usize,
    }
}

/// Canonical signature of the projection of the code onto coordinates
/// `(i, j)`, minimized over local actions at both coordinates.
fn pair_signature(flavor: Flavor, projected: &[u64]) -> u64 {
    let mut present = [[false; 4]; 4];
    for_each_in_span(projected, |v| {
        present[(v >> 2) as usize & 3][v as usize & 3] = true;
    });
    let group = flavor.local_group();
    let mut best = u16::MAX;
    for &a in group {
        for &b in group {
            let mut m = 0u16;
            for s in 0..4 {
                for t in 0..4 {
                    if present[s][t] {
                        let (u, v) = (S3[a as usize][s] as u16, S3[b as usize][t] as u16);
                        m |= 1 << (4 * u + v);
                    }
                }
            }
            best = best.min(m);
        }
    }
    best as u64 | ((projected.len() as u64) << 16)
}

/// Stable coloring of the coordinates listed in `coords`.
///
/// `words` must be all codewords of the code with basis `basis`.
pub(crate) fn refine_colors(
    flavor: Flavor,
    n: usize,
    basis: &[u64],
    words: &[u64],
    coords: &[usize],
) -> Vec<u64> {
    let m = coords.len();
    let mut colors: Vec<u64> = coords
        .iter()
        .map(|&i| {
            let mut hist = vec![0u64; 3 * (2 * n + 1)];
            for &w in words {
                let c = class(flavor, symbol_at(w, n, i));
                hist[c * (2 * n + 1) + weight(flavor, w)] += 1;
            }
            hash_slice(1, &hist)
        })
        .collect();
    let mut sig = vec![0u64; m * m];
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            let (i, j) = (coords[a], coords[b]);
            let projected = echelon(basis.iter().map(|&v| {
                ((symbol_at(v, n, i) as u64) << 2) | symbol_at(v, n, j) as u64
            }));
            sig[a * m + b] = pair_signature(flavor, &projected);
        }
    }
    let distinct = |c: &[u64]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v.dedup();
        v.len()
    };
    let mut count = distinct(&colors);
    loop {
        let next: Vec<u64> = (0..m)
            .map(|a| {
                let mut neighbours: Vec<u64> = (0..m)
                    .filter(|&b| b != a)
                    .map(|b| mix(colors[b], sig[a * m + b]))
                    .collect();
                neighbours.sort_unstable();
                hash_slice(colors[a], &neighbours)
            })
            .collect();
        let c = distinct(&next);
        colors = next;
        if c == count {
            break;
        }
        count = c;
    }
    colors
}
