//! Default construction against augment-and-rotate on the same instance.

use overlap_chain::{extract_certificate_with, verify_certificate, CertifyOptions, Instance};

fn main() {
    let u = Instance::from_strs(&["ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba"], 1)
        .expect("valid instance");
    for (name, options) in [
        ("direct", CertifyOptions::default()),
        ("augment-and-rotate", CertifyOptions::fidelity()),
    ] {
        let c = extract_certificate_with(&u, options).expect("chainable");
        println!(
            "{name:<20} {}  {:?}",
            c.render_chain(&u),
            verify_certificate(&u, &c)
        );
    }
}
