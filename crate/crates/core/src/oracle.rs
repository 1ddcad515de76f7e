//! Brute-force reference computations for small `n`, used to cross-check
//! the backtracking and closure algorithms.

use crate::brandt::{Brandt, Code};
use crate::congruence::{Congruence, CompatibilityMode};
use crate::error::{NsrError, Result};
use crate::maps::MapTable;
use crate::table::NearSemiringTable;

/// Largest `|B_n|` for which every self-map is visited (8⁸ maps).
pub const BRUTE_FORCE_MAX_ORDER: usize = 8;

/// Largest algebra whose partitions are enumerated (Bell(10) = 115975).
pub const PARTITION_LIMIT: usize = 10;

/// `End(B_n)` by testing every self-map of `B_n`, sorted.
pub fn brute_force_endomorphisms(brandt: &Brandt) -> Result<Vec<MapTable>> {
    let order = brandt.order();
    if order > BRUTE_FORCE_MAX_ORDER {
        return Err(NsrError::CarrierTooLarge {
            size: order,
            limit: BRUTE_FORCE_MAX_ORDER,
        });
    }
    let total = (order as u64).pow(order as u32);
    let mut out = Vec::new();
    let mut images = vec![0 as Code; order];
    for mut k in 0..total {
        for slot in images.iter_mut() {
            *slot = (k % order as u64) as Code;
            k /= order as u64;
        }
        let hom = (0..order).all(|a| {
            (0..order).all(|b| {
                let sum = brandt.add_codes(a as Code, b as Code);
                images[sum as usize] == brandt.add_codes(images[a], images[b])
            })
        });
        if hom {
            out.push(MapTable::from_codes(brandt, images.clone())?);
        }
    }
    out.sort();
    Ok(out)
}

/// Every set partition of `0..size`, as restricted growth strings.
pub fn set_partitions(size: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, max: usize, size: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        for label in 0..=max + 1 {
            prefix.push(label);
            grow(prefix, max.max(label), size, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
    } else {
        let mut prefix = vec![0];
        grow(&mut prefix, 0, size, &mut out);
    }
    out
}

/// Whether a labelling is stable under the operations of `mode`, tested
/// pair by pair against every `c`.
pub fn directly_compatible(algebra: &NearSemiringTable, labels: &[usize], mode: CompatibilityMode) -> bool {
    let size = algebra.size();
    let right = mode != CompatibilityMode::PlusOnly;
    let left = mode == CompatibilityMode::TwoSided;
    for a in 0..size {
        for b in a + 1..size {
            if labels[a] != labels[b] {
                continue;
            }
            for c in 0..size {
                let same = |x: usize, y: usize| labels[x] == labels[y];
                if !same(algebra.add(a, c), algebra.add(b, c)) || !same(algebra.add(c, a), algebra.add(c, b)) {
                    return false;
                }
                if right && !same(algebra.mul(a, c), algebra.mul(b, c)) {
                    return false;
                }
                if left && !same(algebra.mul(c, a), algebra.mul(c, b)) {
                    return false;
                }
            }
        }
    }
    true
}

/// All congruences of `mode` by exhaustive partition enumeration, in report
/// order.
pub fn brute_force_congruences(algebra: &NearSemiringTable, mode: CompatibilityMode) -> Result<Vec<Congruence>> {
    if algebra.size() > PARTITION_LIMIT {
        return Err(NsrError::CarrierTooLarge {
            size: algebra.size(),
            limit: PARTITION_LIMIT,
        });
    }
    let mut out: Vec<Congruence> = set_partitions(algebra.size())
        .into_iter()
        .filter(|labels| directly_compatible(algebra, labels, mode))
        .map(|labels| Congruence::from_labels(&labels, mode))
        .collect();
    out.sort();
    Ok(out)
}
