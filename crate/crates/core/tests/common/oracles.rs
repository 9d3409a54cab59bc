//! Test-side oracles, written independently of the library code paths.

#![allow(dead_code)]

use twobridge::TwoBridgeWord;

/// Strand endpoints of a 4-plat.
const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

type Matching = [usize; 4];

fn matching(pairs: [(usize, usize); 2]) -> Matching {
    let mut m = [0; 4];
    for (a, b) in pairs {
        m[a] = b;
        m[b] = a;
    }
    m
}

fn permute(m: Matching, perm: [usize; 4]) -> Matching {
    let mut out = [0; 4];
    for a in 0..4 {
        out[perm[a]] = perm[m[a]];
    }
    out
}

/// Number of components of the 2-bridge link, by tracing strand endpoints.
///
/// Each `R` is a half twist exchanging `NE` and `SE`, each `L` one exchanging
/// `SW` and `SE`. The letters are applied from the innermost clasp outwards,
/// and the result is closed off by the `0` tangle: the closure has two
/// components exactly when the tangle's matching equals the closing one.
pub fn plat_components(word: &TwoBridgeWord) -> u32 {
    let zero = matching([(NW, NE), (SW, SE)]);
    let inf = matching([(NW, SW), (NE, SE)]);
    let r = [NW, SE, SW, NE];
    let l = [NW, NE, SE, SW];
    let mut letters = Vec::new();
    for (i, &a) in word.syllables().iter().enumerate() {
        let first = word.first_letter().as_char();
        let ch = if i % 2 == 0 { first } else if first == 'R' { 'L' } else { 'R' };
        letters.extend(std::iter::repeat(ch).take(a as usize));
    }
    let inner = *letters.last().unwrap();
    let mut m = if inner == 'R' { zero } else { inf };
    let mut seq = vec![inner];
    seq.extend(letters.iter().rev());
    seq.push(letters[0]);
    for ch in seq {
        m = permute(m, if ch == 'R' { r } else { l });
    }
    if m == zero {
        2
    } else {
        1
    }
}

/// `[a₁, …, a_n]` evaluated bottom-up with exact `u128` arithmetic.
pub fn nested_fraction(terms: &[u64]) -> (u128, u128) {
    let (mut p, mut q) = (*terms.last().unwrap() as u128, 1u128);
    for &a in terms.iter().rev().skip(1) {
        // a + q/p
        let np = a as u128 * p + q;
        q = p;
        p = np;
    }
    (p, q)
}

/// All normalized hyperbolic words with `2 ≤ c ≤ max_c`.
pub fn all_words(max_c: u32) -> Vec<TwoBridgeWord> {
    let mut out = Vec::new();
    for c in 2..=max_c {
        compositions(c, &mut Vec::new(), &mut out);
    }
    out
}

fn compositions(rest: u32, prefix: &mut Vec<u32>, out: &mut Vec<TwoBridgeWord>) {
    if rest == 0 {
        if prefix.len() >= 2 {
            out.push(TwoBridgeWord::from_exponents(prefix).unwrap());
        }
        return;
    }
    for a in 1..=rest {
        prefix.push(a);
        compositions(rest - a, prefix, out);
        prefix.pop();
    }
}
