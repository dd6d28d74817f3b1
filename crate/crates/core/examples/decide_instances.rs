//! Decide a few small instances and print the verdicts.

use overlap_chain::{decide, Instance};

fn main() {
    let cases: [&[&str]; 4] = [
        &["ab", "ac", "cb", "cc", "ba"],
        &["ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba"],
        &["ab", "cd"],
        &["ab", "ab"],
    ];
    for strings in cases {
        let u = Instance::from_strs(strings, 1).expect("valid instance");
        let v = decide(&u);
        let odd: Vec<String> = v
            .odd_vertices
            .iter()
            .map(|(vertex, d)| format!("{vertex}:{d:+}"))
            .collect();
        println!(
            "{:<32} {:?} {:?} {:?} [{}]",
            strings.join(" "),
            v.answer,
            v.failure_reason,
            v.case,
            odd.join(", ")
        );
    }
}
