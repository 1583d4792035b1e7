//! The `--aut` mini-language.
//!
//! * `A=AB,B=B`: images of generators; capitals are generators, lowercase
//!   letters their inverses. Generators left out are fixed.
//! * `identity`
//! * `inner:W`: conjugation `x ↦ W x W⁻¹`.
//! * `random:K`: product of `K` random transvections drawn from the seed.

use hypsurf_core::{FreeAutomorphism, GroupWord, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

fn generator_index(key: &str, rank: usize) -> Result<usize, CliError> {
    let mut chars = key.chars();
    let (Some(ch), None) = (chars.next(), chars.next()) else {
        return Err(CliError::Usage(format!("bad generator name {key:?}")));
    };
    match Letter::from_char(ch) {
        Some(l) if ch.is_ascii_uppercase() && l.generator() < rank => Ok(l.generator()),
        _ => Err(CliError::Usage(format!(
            "{key:?} is not one of the {rank} generators (capital letters from A)"
        ))),
    }
}

/// `K` transvections `xᵢ ↦ xᵢ xⱼ^±` or `xⱼ^± xᵢ`, composed left to right.
pub fn random_transvections(rank: usize, k: usize, seed: u64) -> Result<FreeAutomorphism, CliError> {
    if rank < 2 {
        return Err(CliError::Usage("random automorphisms need rank >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut phi = FreeAutomorphism::identity(rank);
    for _ in 0..k {
        let i = rng.gen_range(0..rank);
        let j = (i + rng.gen_range(1..rank)) % rank;
        let t = FreeAutomorphism::transvection(rank, i, j, rng.gen(), rng.gen())?;
        phi = phi.compose(&t)?;
    }
    Ok(phi)
}

pub fn parse_automorphism(spec: &str, rank: usize, seed: u64) -> Result<FreeAutomorphism, CliError> {
    let spec = spec.trim();
    if spec == "identity" {
        return Ok(FreeAutomorphism::identity(rank));
    }
    if let Some(w) = spec.strip_prefix("inner:") {
        return Ok(FreeAutomorphism::inner(rank, &GroupWord::parse(w)?)?);
    }
    if let Some(k) = spec.strip_prefix("random:") {
        let k: usize = k
            .parse()
            .map_err(|_| CliError::Usage(format!("bad move count {k:?}")))?;
        return random_transvections(rank, k, seed);
    }
    let mut images: Vec<Option<GroupWord>> = vec![None; rank];
    for item in spec.split(',') {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("expected GEN=WORD, got {item:?}")))?;
        let i = generator_index(key.trim(), rank)?;
        if images[i].is_some() {
            return Err(CliError::Usage(format!("generator {key} given twice")));
        }
        images[i] = Some(GroupWord::parse(value.trim())?);
    }
    let images = images
        .into_iter()
        .enumerate()
        .map(|(i, w)| w.unwrap_or_else(|| GroupWord::generator(i as u16)))
        .collect();
    Ok(FreeAutomorphism::from_images(images)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(s: &str) -> GroupWord {
        GroupWord::parse(s).unwrap()
    }

    #[test]
    fn image_lists() {
        let twist = parse_automorphism("A=AB,B=B", 2, 0).unwrap();
        assert_eq!(twist.images(), &[word("AB"), word("B")]);
        let partial = parse_automorphism("B=Ba", 2, 0).unwrap();
        assert_eq!(partial.images(), &[word("A"), word("Ba")]);
        assert!(parse_automorphism("A=AB,A=A", 2, 0).is_err());
        assert!(parse_automorphism("C=A", 2, 0).is_err());
        assert!(parse_automorphism("a=A", 2, 0).is_err());
        assert!(matches!(
            parse_automorphism("A=AA", 2, 0),
            Err(CliError::Boundary(_))
        ));
    }

    #[test]
    fn keywords() {
        assert_eq!(parse_automorphism("identity", 4, 0).unwrap(), FreeAutomorphism::identity(4));
        let inner = parse_automorphism("inner:Ab", 4, 0).unwrap();
        assert_eq!(inner.images()[2], word("AbCBa"));
        let r1 = parse_automorphism("random:5", 2, 7).unwrap();
        let r2 = parse_automorphism("random:5", 2, 7).unwrap();
        assert_eq!(r1, r2);
        assert!(parse_automorphism("random:x", 2, 0).is_err());
    }
}
