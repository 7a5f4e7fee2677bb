//! Fixed instances shared by the benchmarks.

use linesramsey::generators::{
    gen_parallel_planes_grid, gen_random_lines, gen_ruled_reguli, LineFlags,
};
use linesramsey::Config;

pub fn random_lines(n: usize, seed: u64, range: i64) -> Config {
    Config::Lines3(
        gen_random_lines(n, seed, range, LineFlags::default()).expect("valid parameters"),
    )
}

pub fn skew_lines(n: usize, seed: u64) -> Config {
    let flags = LineFlags {
        pairwise_skew: true,
        ..LineFlags::default()
    };
    Config::Lines3(gen_random_lines(n, seed, 100, flags).expect("valid parameters"))
}

pub fn ruled_reguli(k: usize) -> Config {
    Config::Lines3(gen_ruled_reguli(k, 0).expect("valid parameters"))
}

pub fn planes_grid(k: usize) -> Config {
    Config::Lines3(gen_parallel_planes_grid(k, 0).expect("valid parameters"))
}
