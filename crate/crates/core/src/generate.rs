//! Seeded random instances.
//!
//! Randomness comes from ChaCha8 seeded through `SeedableRng::seed_from_u64`,
//! whose output is fixed across platforms, so a spec and seed always
//! produce the same instance.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::instance::{Instance, InstanceError, Symbol, SymbolMode};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum GeneratorMode {
    /// Every symbol drawn independently and uniformly.
    #[default]
    Uniform,
    /// A random chain, shuffled; always a YES instance.
    PlantedYes,
}

impl std::str::FromStr for GeneratorMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(GeneratorMode::Uniform),
            "planted_yes" | "planted-yes" => Ok(GeneratorMode::PlantedYes),
            other => Err(format!("unknown generator mode `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSpec {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub alphabet_size: usize,
    pub seed: u64,
    pub mode: GeneratorMode,
}

impl GeneratorSpec {
    pub fn new(n: usize, s: usize, t: usize, alphabet_size: usize) -> Self {
        GeneratorSpec {
            n,
            s,
            t,
            alphabet_size,
            seed: 0,
            mode: GeneratorMode::Uniform,
        }
    }

    pub fn seed(self, seed: u64) -> Self {
        GeneratorSpec { seed, ..self }
    }

    pub fn mode(self, mode: GeneratorMode) -> Self {
        GeneratorSpec { mode, ..self }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("planted instances need at least 2 symbols, got {0}")]
    PlantedAlphabetTooSmall(usize),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// The `index`-th symbol of the generator alphabet: `a`..`z`, then `A`..`Z`,
/// then consecutive CJK ideographs.
pub fn alphabet_symbol(index: usize) -> Symbol {
    let c = match index {
        0..=25 => char::from(b'a' + index as u8),
        26..=51 => char::from(b'A' + (index - 26) as u8),
        _ => char::from_u32(0x4E00 + (index - 52) as u32).expect("valid scalar below 0x9FFF"),
    };
    Symbol::from(c)
}

pub fn generate(spec: &GeneratorSpec) -> Result<Instance, GenerateError> {
    if spec.alphabet_size == 0 {
        return Err(GenerateError::EmptyAlphabet);
    }
    if spec.mode == GeneratorMode::PlantedYes && spec.alphabet_size < 2 {
        return Err(GenerateError::PlantedAlphabetTooSmall(spec.alphabet_size));
    }
    if spec.t == 0 || spec.t >= spec.s {
        return Err(InstanceError::InvalidOverlap {
            s: spec.s,
            t: spec.t,
        }
        .into());
    }
    if spec.n < 2 {
        return Err(InstanceError::TooFewStrings { found: spec.n }.into());
    }

    let alphabet: Vec<Symbol> = (0..spec.alphabet_size).map(alphabet_symbol).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let draw = |rng: &mut ChaCha8Rng| alphabet[rng.gen_range(0..alphabet.len())].clone();

    let strings: Vec<Vec<Symbol>> = match spec.mode {
        GeneratorMode::Uniform => (0..spec.n)
            .map(|_| (0..spec.s).map(|_| draw(&mut rng)).collect())
            .collect(),
        GeneratorMode::PlantedYes => {
            let mut chain: Vec<Vec<Symbol>> = Vec::with_capacity(spec.n);
            let mut current: Vec<Symbol> = (0..spec.s).map(|_| draw(&mut rng)).collect();
            for _ in 1..spec.n {
                let mut next: Vec<Symbol> = current[spec.s - spec.t..].to_vec();
                next.extend((spec.t..spec.s).map(|_| draw(&mut rng)));
                chain.push(std::mem::replace(&mut current, next));
            }
            chain.push(current);
            chain.shuffle(&mut rng);
            chain
        }
    };
    Ok(Instance::new(strings, spec.s, spec.t, SymbolMode::Chars)?)
}
