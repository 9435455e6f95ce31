//! Inputs shared by the benchmarks.

use stingray_core::{GenericTriple, Partition};

/// Triples used for the enumeration benchmarks, smallest first.
pub fn enumeration_triples() -> Vec<GenericTriple> {
    [(3, 8, 5), (3, 10, 8), (4, 6, 4), (5, 6, 8)]
        .into_iter()
        .map(|(r, e, w)| GenericTriple::new(r, e, w).expect("generic"))
        .collect()
}

/// Every partition with at most `max_len` parts, each at most `max_part`.
pub fn bounded_partitions(max_len: usize, max_part: u64) -> Vec<Partition> {
    fn rec(max_len: usize, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
        if cur.len() == max_len {
            return;
        }
        for p in 1..=cap {
            cur.push(p);
            rec(max_len, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_len, max_part, &mut Vec::new(), &mut out);
    out
}
