//! Check the linear decider against both exhaustive searches on every
//! three-letter instance with four strings.

use overlap_chain::generate::alphabet_symbol;
use overlap_chain::{decide, oracle_backtrack, oracle_permutations, Instance, SymbolMode};

fn main() {
    let alphabet: usize = 3;
    let n = 4;
    let strings = alphabet * alphabet;
    let (mut total, mut yes, mut disagreements) = (0, 0, 0);
    for mut code in 0..strings.pow(n as u32) {
        let mut u = Vec::with_capacity(n);
        for _ in 0..n {
            let x = code % strings;
            code /= strings;
            u.push(vec![
                alphabet_symbol(x % alphabet),
                alphabet_symbol(x / alphabet),
            ]);
        }
        let u = Instance::new(u, 2, 1, SymbolMode::Chars).expect("valid instance");
        let decided = decide(&u).answer.is_yes();
        let perms = oracle_permutations(&u).expect("under cap");
        let backtrack = oracle_backtrack(&u).expect("under cap");
        total += 1;
        yes += usize::from(decided);
        if decided != perms || decided != backtrack {
            disagreements += 1;
        }
    }
    println!("{total} instances, {yes} yes, {disagreements} disagreements");
}
