//! Words in the letters `R` and `L` describing 2-bridge links.
//!
//! A word is stored as its syllable exponents together with the letter of the
//! first syllable. Letters alternate between syllables, so this is enough to
//! recover the expanded form `Ω₁ … Ω_c`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    R,
    L,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::R => Letter::L,
            Letter::L => Letter::R,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::R => 'R',
            Letter::L => 'L',
        }
    }

    /// The slope matrix applied when crossing a letter of this kind.
    pub fn matrix(self) -> SlopeMatrix {
        match self {
            Letter::R => SlopeMatrix::R,
            Letter::L => SlopeMatrix::L,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A reduced positive fraction `p/q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub p: u64,
    pub q: u64,
}

impl Fraction {
    pub fn new(p: u64, q: u64) -> Fraction {
        let g = p.gcd(&q).max(1);
        Fraction { p: p / g, q: q / g }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// A slope `num/den` of an edge in the punctured plane; `1/0` is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Slope {
    pub num: u64,
    pub den: u64,
}

impl Slope {
    pub fn new(num: u64, den: u64) -> Slope {
        let g = num.gcd(&den).max(1);
        Slope { num: num / g, den: den / g }
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Non-negative integer 2×2 matrix, a product of the generators `R` and `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlopeMatrix(pub [[u64; 2]; 2]);

impl SlopeMatrix {
    pub const IDENTITY: SlopeMatrix = SlopeMatrix([[1, 0], [0, 1]]);
    pub const R: SlopeMatrix = SlopeMatrix([[1, 1], [0, 1]]);
    pub const L: SlopeMatrix = SlopeMatrix([[1, 0], [1, 1]]);

    pub fn mul(&self, other: &SlopeMatrix) -> SlopeMatrix {
        let a = &self.0;
        let b = &other.0;
        SlopeMatrix([
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ])
    }

    pub fn determinant(&self) -> i128 {
        let m = &self.0;
        m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128
    }

    /// Applies the matrix to a slope, viewing `p/q` as the column `(q, p)`.
    pub fn apply(&self, s: Slope) -> Slope {
        let m = &self.0;
        let q = m[0][0] * s.den + m[0][1] * s.num;
        let p = m[1][0] * s.den + m[1][1] * s.num;
        Slope::new(p, q)
    }
}

/// Edge slopes of the 4-punctured spheres `S₁ … S_{c+1}` swept out by a word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeSequence {
    /// Each triple sorted increasingly.
    pub triples: Vec<[Slope; 3]>,
    /// Cumulative matrix after each letter; `matrices[0]` is the identity.
    pub matrices: Vec<SlopeMatrix>,
    pub tetrahedron_count: usize,
}

/// A 2-bridge word `R^{α₁} L^{α₂} R^{α₃} ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoBridgeWord {
    syllables: Vec<u32>,
    first_letter: Letter,
}

const ARITHMETIC: [&[u32]; 4] = [&[1, 1], &[1, 1, 1], &[2, 2], &[1, 2, 1]];

impl TwoBridgeWord {
    /// Builds a word from its exponents. Fails if the list is empty or an
    /// exponent is zero.
    pub fn new(syllables: Vec<u32>, first_letter: Letter) -> Result<TwoBridgeWord> {
        if syllables.is_empty() {
            return Err(Error::Parse { position: 0, message: "empty word".into() });
        }
        if let Some(i) = syllables.iter().position(|&a| a == 0) {
            return Err(Error::Parse {
                position: i + 1,
                message: "syllable exponent must be positive".into(),
            });
        }
        Ok(TwoBridgeWord { syllables, first_letter })
    }

    /// Word starting with `R` with the given exponents.
    pub fn from_exponents(syllables: &[u32]) -> Result<TwoBridgeWord> {
        TwoBridgeWord::new(syllables.to_vec(), Letter::R)
    }

    pub fn syllables(&self) -> &[u32] {
        &self.syllables
    }

    pub fn first_letter(&self) -> Letter {
        self.first_letter
    }

    /// Number of syllables `n`.
    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Number of letters `c = Σ αᵢ`.
    pub fn crossings(&self) -> usize {
        self.syllables.iter().map(|&a| a as usize).sum()
    }

    /// `α_i` with 1-based `i`.
    pub fn alpha(&self, i: usize) -> u32 {
        self.syllables[i - 1]
    }

    /// Letter of syllable `i` (1-based).
    pub fn syllable_letter(&self, i: usize) -> Letter {
        if i % 2 == 1 {
            self.first_letter
        } else {
            self.first_letter.swap()
        }
    }

    /// Prefix sums `c₀ = 0, c₁, …, c_n = c`.
    pub fn prefix_sums(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.syllables.len() + 1);
        let mut acc = 0usize;
        out.push(0);
        for &a in &self.syllables {
            acc += a as usize;
            out.push(acc);
        }
        out
    }

    /// Expanded letters `Ω₁ … Ω_c`.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.crossings());
        for (i, &a) in self.syllables.iter().enumerate() {
            let letter = self.syllable_letter(i + 1);
            out.extend(std::iter::repeat(letter).take(a as usize));
        }
        out
    }

    /// Letter `Ω_t` with 1-based `t`.
    pub fn letter(&self, t: usize) -> Letter {
        let sums = self.prefix_sums();
        let i = sums.iter().position(|&s| s >= t).expect("letter index in range");
        self.syllable_letter(i)
    }

    pub fn expanded(&self) -> String {
        self.letters().into_iter().map(Letter::as_char).collect()
    }

    /// Swaps letters so the word starts with `R`; reports whether a swap happened.
    pub fn normalize(&self) -> (TwoBridgeWord, bool) {
        match self.first_letter {
            Letter::R => (self.clone(), false),
            Letter::L => (
                TwoBridgeWord { syllables: self.syllables.clone(), first_letter: Letter::R },
                true,
            ),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.first_letter == Letter::R
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.syllables.len() >= 2
    }

    pub fn require_hyperbolic(&self) -> Result<()> {
        if self.is_hyperbolic() {
            Ok(())
        } else {
            Err(Error::NotHyperbolic(self.to_string()))
        }
    }

    /// Representative of the word up to inversion and mirror: the
    /// lexicographically smaller of the exponent vector and its reversal,
    /// starting with `R`.
    pub fn canonical_form(&self) -> TwoBridgeWord {
        let forward = self.syllables.clone();
        let mut backward = forward.clone();
        backward.reverse();
        TwoBridgeWord { syllables: forward.min(backward), first_letter: Letter::R }
    }

    /// The word read backwards, renormalized to start with `R`.
    pub fn inverted(&self) -> TwoBridgeWord {
        let mut s = self.syllables.clone();
        s.reverse();
        TwoBridgeWord { syllables: s, first_letter: Letter::R }
    }

    pub fn is_palindromic(&self) -> bool {
        self.syllables.iter().eq(self.syllables.iter().rev())
    }

    /// Figure-eight, Whitehead, 6²₂ or 6³₂.
    pub fn is_arithmetic(&self) -> Result<bool> {
        self.require_hyperbolic()?;
        let canon = self.canonical_form();
        Ok(ARITHMETIC.iter().any(|a| *a == canon.syllables.as_slice()))
    }

    /// `[α₁+1, α₂, …, α_{n−1}, α_n+1]` and its value `a₁ + 1/(a₂ + 1/(⋯ + 1/a_n))`.
    pub fn continued_fraction(&self) -> Result<(Vec<u64>, Fraction)> {
        self.require_hyperbolic()?;
        let mut terms: Vec<u64> = self.syllables.iter().map(|&a| a as u64).collect();
        terms[0] += 1;
        *terms.last_mut().unwrap() += 1;
        let mut num = *terms.last().unwrap();
        let mut den = 1u64;
        for &a in terms.iter().rev().skip(1) {
            let next = a * num + den;
            den = num;
            num = next;
        }
        Ok((terms, Fraction::new(num, den)))
    }

    /// Number of link components: 1 when `p` is odd, 2 otherwise.
    pub fn component_count(&self) -> Result<u32> {
        let (_, frac) = self.continued_fraction()?;
        Ok(if frac.p % 2 == 1 { 1 } else { 2 })
    }

    /// Slope triples of `S₁ … S_{c+1}`. Each letter right-multiplies the
    /// running matrix, so consecutive triangulations share two slopes.
    pub fn slope_sequence(&self) -> SlopeSequence {
        let base = [Slope::new(0, 1), Slope::new(1, 1), Slope::new(1, 0)];
        let mut m = SlopeMatrix::IDENTITY;
        let mut matrices = vec![m];
        let mut triples = vec![base];
        for letter in self.letters() {
            m = m.mul(&letter.matrix());
            let mut t = base.map(|s| m.apply(s));
            t.sort();
            matrices.push(m);
            triples.push(t);
        }
        SlopeSequence {
            triples,
            matrices,
            tetrahedron_count: 2 * self.crossings().saturating_sub(1),
        }
    }
}

impl fmt::Display for TwoBridgeWord {
    /// Compact exponent form, e.g. `R2L3R2L`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &a) in self.syllables.iter().enumerate() {
            write!(f, "{}", self.syllable_letter(i + 1))?;
            if a != 1 {
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for TwoBridgeWord {
    type Err = Error;

    /// Grammar `WORD := (LETTER EXP?)+` with letters `R`, `L` (either case).
    /// Equal adjacent letters merge into one syllable. Positions in errors
    /// are 1-based character offsets.
    fn from_str(text: &str) -> Result<TwoBridgeWord> {
        if text.is_empty() {
            return Err(Error::Parse { position: 0, message: "empty word".into() });
        }
        let chars: Vec<char> = text.chars().collect();
        let mut runs: Vec<(Letter, u32)> = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let letter = match chars[i] {
                'R' | 'r' => Letter::R,
                'L' | 'l' => Letter::L,
                ch => {
                    return Err(Error::Parse {
                        position: i + 1,
                        message: format!("unexpected character {ch:?}, expected R or L"),
                    })
                }
            };
            i += 1;
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let exp = if start == i {
                1
            } else {
                let digits: String = chars[start..i].iter().collect();
                let value: u32 = digits.parse().map_err(|_| Error::Parse {
                    position: start + 1,
                    message: "exponent out of range".into(),
                })?;
                if value == 0 {
                    return Err(Error::Parse {
                        position: start + 1,
                        message: "exponent must be positive".into(),
                    });
                }
                value
            };
            match runs.last_mut() {
                Some((l, a)) if *l == letter => {
                    *a = a.checked_add(exp).ok_or_else(|| Error::Parse {
                        position: start + 1,
                        message: "exponent out of range".into(),
                    })?
                }
                _ => runs.push((letter, exp)),
            }
        }
        let first_letter = runs[0].0;
        TwoBridgeWord::new(runs.into_iter().map(|(_, a)| a).collect(), first_letter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> TwoBridgeWord {
        s.parse().unwrap()
    }

    #[test]
    fn parses_exponent_and_expanded_forms() {
        let a = w("R2L3R2L");
        assert_eq!(a.syllables(), &[2, 3, 2, 1]);
        assert_eq!(a.first_letter(), Letter::R);
        assert_eq!(w("RRLLLRRL"), a);
        assert_eq!(w("rrL3r2l"), a);
        assert_eq!(a.to_string(), "R2L3R2L");
        assert_eq!(a.expanded(), "RRLLLRRL");
    }

    #[test]
    fn parse_errors_name_the_position() {
        assert_eq!(
            "R0L".parse::<TwoBridgeWord>().unwrap_err(),
            Error::Parse { position: 2, message: "exponent must be positive".into() }
        );
        assert!(matches!("".parse::<TwoBridgeWord>(), Err(Error::Parse { position: 0, .. })));
        assert!(matches!("RX".parse::<TwoBridgeWord>(), Err(Error::Parse { position: 2, .. })));
        assert!(matches!("3R".parse::<TwoBridgeWord>(), Err(Error::Parse { position: 1, .. })));
        assert!(matches!(
            "R99999999999".parse::<TwoBridgeWord>(),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn normalize_swaps_leading_l() {
        assert_eq!(w("LRL").normalize(), (w("RLR"), true));
        assert_eq!(w("RL").normalize(), (w("RL"), false));
        assert_eq!(w("L3R2").normalize(), (w("R3L2"), true));
    }

    #[test]
    fn hyperbolicity() {
        assert!(!w("R5").is_hyperbolic());
        assert!(w("RL").is_hyperbolic());
        assert!(w("R2L3R2L").is_hyperbolic());
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(w("R2L3R2L").canonical_form().syllables(), &[1, 2, 3, 2]);
        assert_eq!(w("R3L2").canonical_form().syllables(), &[2, 3]);
        assert_eq!(w("R3L2RL2R3").canonical_form().syllables(), &[3, 2, 1, 2, 3]);
    }

    #[test]
    fn palindromes() {
        assert!(w("R3L2RL2R3").is_palindromic());
        assert!(!w("R2L3R2L").is_palindromic());
        assert!(w("R3L3").is_palindromic());
    }

    #[test]
    fn arithmetic_list() {
        assert!(w("RL").is_arithmetic().unwrap());
        assert!(w("RL2R").is_arithmetic().unwrap());
        assert!(w("LR2L").normalize().0.is_arithmetic().unwrap());
        assert!(w("R2L2").is_arithmetic().unwrap());
        assert!(w("RLR").is_arithmetic().unwrap());
        assert!(!w("R2L3R2L").is_arithmetic().unwrap());
        assert!(matches!(w("R5").is_arithmetic(), Err(Error::NotHyperbolic(_))));
    }

    #[test]
    fn continued_fractions_of_arithmetic_words() {
        assert_eq!(w("RL").continued_fraction().unwrap(), (vec![2, 2], Fraction::new(5, 2)));
        assert_eq!(w("RLR").continued_fraction().unwrap(), (vec![2, 1, 2], Fraction::new(8, 3)));
        assert_eq!(w("R2L2").continued_fraction().unwrap(), (vec![3, 3], Fraction::new(10, 3)));
        assert_eq!(w("RL2R").continued_fraction().unwrap().1, Fraction::new(12, 5));
        assert!(w("R4").continued_fraction().is_err());
    }

    #[test]
    fn component_counts() {
        assert_eq!(w("RL").component_count().unwrap(), 1);
        assert_eq!(w("RLR").component_count().unwrap(), 2);
        assert_eq!(w("R2L3R2L").component_count().unwrap(), 2);
        assert_eq!(w("R2L3R2L2R").component_count().unwrap(), 1);
    }

    #[test]
    fn slope_sequence_starts_correctly() {
        let seq = w("RL").slope_sequence();
        assert_eq!(seq.triples.len(), 3);
        assert_eq!(seq.triples[0], [Slope::new(0, 1), Slope::new(1, 1), Slope::new(1, 0)]);
        assert_eq!(seq.triples[1], [Slope::new(0, 1), Slope::new(1, 2), Slope::new(1, 1)]);
        assert_eq!(seq.tetrahedron_count, 2);
    }

    #[test]
    fn letter_lookup_matches_expansion() {
        let a = w("R2L3R2L");
        let letters = a.letters();
        for t in 1..=a.crossings() {
            assert_eq!(a.letter(t), letters[t - 1]);
        }
        assert_eq!(a.prefix_sums(), vec![0, 2, 5, 7, 8]);
    }
}
