//! Compare the set-merging scan with union-find on a growing random graph.

use std::time::Instant;

use overlap_chain::connectivity::partition_paper;
use overlap_chain::{connected_fast, connected_paper};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() {
    let small = [(1, 2), (3, 4), (2, 3), (5, 5)];
    let groups = partition_paper(&small).normalized();
    println!("components of {small:?}: {:?}", groups.groups());

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for m in [100usize, 1_000, 10_000] {
        let k = m as u32 / 2;
        let edges: Vec<(u32, u32)> = (0..m)
            .map(|_| (rng.gen_range(0..k), rng.gen_range(0..k)))
            .collect();
        let start = Instant::now();
        let paper = connected_paper(&edges);
        let paper_time = start.elapsed();
        let start = Instant::now();
        let fast = connected_fast(&edges);
        let fast_time = start.elapsed();
        println!("m={m:>6}  scan {paper} in {paper_time:?}  union-find {fast} in {fast_time:?}");
    }
}
