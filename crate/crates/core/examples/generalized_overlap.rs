//! Longer overlaps and token symbols: the same strings can chain at t=1 but
//! not at t=2.

use overlap_chain::{decide, extract_certificate, parse_instance_with, ParseOptions, SymbolMode};

fn main() {
    let text = "GLY ALA SER\nSER GLY PRO\n";
    for t in [1, 2] {
        let options = ParseOptions {
            t: Some(t),
            mode: Some(SymbolMode::Tokens),
            ..ParseOptions::default()
        };
        let u = parse_instance_with(text, &options).expect("valid document");
        let v = decide(&u);
        print!("t={t}: {:?}", v.answer);
        if let Some(c) = extract_certificate(&u) {
            print!("  {}", c.render_chain(&u));
        }
        println!();
    }

    let u = overlap_chain::Instance::from_strs(&["abcd", "cdab", "abcd"], 2).expect("valid");
    let c = extract_certificate(&u).expect("chainable");
    println!("s=4 t=2: {}", c.render_chain(&u));
}
