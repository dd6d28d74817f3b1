//! Time the decider on planted instances and print CSV plus growth ratios.

use overlap_chain::bench::{
    bench, growth_ratios, median_by_size, write_csv, BenchMethod, BenchOptions,
};
use overlap_chain::{GeneratorMode, GeneratorSpec};

fn main() {
    let template = GeneratorSpec::new(0, 2, 1, 8)
        .seed(42)
        .mode(GeneratorMode::PlantedYes);
    let methods = [
        BenchMethod::Build,
        BenchMethod::Decide,
        BenchMethod::ConnectedFast,
    ];
    let records = bench(
        &methods,
        &[1_000, 10_000, 100_000],
        3,
        &template,
        &BenchOptions::default(),
    )
    .expect("sizes within caps");
    write_csv(&records, std::io::stdout()).expect("stdout");
    for method in methods {
        let medians = median_by_size(&records, method);
        println!("# {method}: ratios {:.2?}", growth_ratios(&medians));
    }
}
