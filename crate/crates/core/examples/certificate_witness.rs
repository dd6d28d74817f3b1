//! Extract an ordering for a YES instance, check it, then break it.

use overlap_chain::{extract_certificate, verify_certificate, Certificate, Instance};

fn main() {
    let u = Instance::from_strs(&["ca", "eb", "ad", "bf", "dc", "fe", "ab", "ab", "ba"], 1)
        .expect("valid instance");
    let c = extract_certificate(&u).expect("instance is chainable");
    println!("permutation {:?}", c.permutation);
    println!("chain       {}", c.render_chain(&u));
    println!("verify      {:?}", verify_certificate(&u, &c));

    let mut swapped = c.permutation.clone();
    swapped.swap(0, 1);
    let bad = Certificate::from_permutation(&u, swapped).expect("indices in range");
    match verify_certificate(&u, &bad) {
        Ok(()) => println!("swapped     still valid"),
        Err(defect) => println!("swapped     {} ({defect})", defect.code()),
    }
}
