//! Freely reduced words in a finite-rank free group.
//!
//! Words are sequences of signed generator letters, kept freely reduced at
//! all times: no `x x^-1` or `x^-1 x` pair ever survives construction. The
//! empty word is the identity. Letters are indices into an [`Alphabet`],
//! which owns the generator names used for parsing and printing.
//!
//! The commutator convention is fixed throughout the crate as
//! `[u, v] = u v u^-1 v^-1`.

use std::collections::HashMap;
use std::fmt;

use crate::error::WordError;

/// A named generating set for a free group.
///
/// Names must be distinct identifiers (a run of ASCII letters followed by
/// optional digits). The default alphabet of rank `g` uses `x1..xg`; for
/// rank at most 3 the parser additionally accepts `x`, `y`, `z` as aliases
/// for `x1`, `x2`, `x3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars().peekable();
    let mut saw_letter = false;
    while let Some(&c) = chars.peek() {
        if c.is_ascii_alphabetic() {
            saw_letter = true;
            chars.next();
        } else {
            break;
        }
    }
    if !saw_letter {
        return false;
    }
    chars.all(|c| c.is_ascii_digit())
}

impl Alphabet {
    /// Builds an alphabet from explicit generator names.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, WordError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        let mut lookup = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(WordError::BadGeneratorName { name: n.clone() });
            }
            if lookup.insert(n.clone(), i).is_some() {
                return Err(WordError::DuplicateGenerator { name: n.clone() });
            }
        }
        Ok(Alphabet { names, lookup })
    }

    /// Default alphabet of the given rank: names `x1..xg`, with `x`, `y`,
    /// `z` accepted as parsing aliases when the rank is at most 3.
    pub fn with_rank(rank: usize) -> Self {
        assert!(rank >= 1, "alphabet rank must be at least 1");
        let names: Vec<String> = (1..=rank).map(|i| format!("x{i}")).collect();
        let mut alphabet = Alphabet::new(names).expect("default names are valid");
        if rank <= 3 {
            for (alias, idx) in ["x", "y", "z"].iter().zip(0..rank) {
                alphabet.lookup.insert((*alias).to_string(), idx);
            }
        }
        alphabet
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Resolves a generator name (or alias) to its index.
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.lookup.get(name).copied()
    }

    /// Extends the alphabet by one fresh generator and returns its index.
    ///
    /// The new name is the first unused entry of `x, y, z, x4, x5, ...` so
    /// that a rank-2 alphabet named `x y` gains `z`, matching the usual
    /// genus-3 notation. The chosen name never collides with existing ones.
    pub fn extend(&self) -> (Self, usize) {
        let mut candidates: Vec<String> = vec!["x".into(), "y".into(), "z".into()];
        for i in 4.. {
            candidates.push(format!("x{i}"));
            if candidates.len() > self.names.len() + 4 {
                break;
            }
        }
        let fresh = candidates
            .into_iter()
            .find(|c| !self.lookup.contains_key(c))
            .expect("candidate pool exceeds rank");
        let mut names = self.names.clone();
        names.push(fresh);
        let next = Alphabet::new(names).expect("fresh name stays valid");
        let idx = next.rank() - 1;
        (next, idx)
    }
}

/// One signed letter: a generator index and whether it is inverted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize) -> Self {
        Letter { gen, inverse: false }
    }

    pub fn inverted(gen: usize) -> Self {
        Letter { gen, inverse: true }
    }

    pub fn invert(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }

    /// Signed exponent contribution, `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word. The empty word is the group identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(index: usize) -> Self {
        Word { letters: vec![Letter::new(index)] }
    }

    /// Builds a word from raw letters, reducing freely.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Freely reduced concatenation `self * other`.
    pub fn multiply(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    /// Group inverse: reversed letters with flipped signs.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.invert()).collect(),
        }
    }

    /// The commutator `[self, other] = self * other * self^-1 * other^-1`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.multiply(other)
            .multiply(&self.inverse())
            .multiply(&other.inverse())
    }

    /// Integer power by repeated multiplication.
    pub fn power(&self, exponent: i64) -> Word {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..exponent.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// Signed count of each generator; zero exactly on the commutator
    /// subgroup.
    pub fn exponent_vector(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for l in &self.letters {
            assert!(l.gen < rank, "letter index {} out of range for rank {rank}", l.gen);
            v[l.gen] += l.sign();
        }
        v
    }

    /// Substitutes `images[i]` for generator `i` (the inverse image for an
    /// inverse letter) and reduces. This is the induced homomorphism on the
    /// free group, e.g. `i_*` from surface words to ambient words.
    pub fn apply_homomorphism(&self, images: &[Word]) -> Result<Word, WordError> {
        if let Some(max) = self.max_generator() {
            if max >= images.len() {
                return Err(WordError::ArityMismatch {
                    needed: max + 1,
                    supplied: images.len(),
                });
            }
        }
        let mut out: Vec<Letter> = Vec::new();
        for l in &self.letters {
            let image = &images[l.gen];
            if l.inverse {
                for im in image.letters.iter().rev() {
                    push_reduced(&mut out, im.invert());
                }
            } else {
                for &im in &image.letters {
                    push_reduced(&mut out, im);
                }
            }
        }
        Ok(Word { letters: out })
    }

    /// Canonical text form over the alphabet; the identity prints as `1`.
    pub fn format(&self, alphabet: &Alphabet) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(self.letters.len());
        for l in &self.letters {
            if l.inverse {
                parts.push(format!("{}^-1", alphabet.name(l.gen)));
            } else {
                parts.push(alphabet.name(l.gen).to_string());
            }
        }
        parts.join(" ")
    }
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    match out.last() {
        Some(&last) if last.cancels(l) => {
            out.pop();
        }
        _ => out.push(l),
    }
}

impl fmt::Display for Word {
    /// Alphabet-free debug form using raw indices `g0, g1, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                if l.inverse {
                    format!("g{}^-1", l.gen)
                } else {
                    format!("g{}", l.gen)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Recursive-descent parser for the word grammar:
///
/// ```text
/// word  := term*
/// term  := atom power?
/// atom  := identifier | '1' | '(' word ')' | '[' word ',' word ']'
/// power := '^' '-'? digits
/// ```
///
/// Whitespace is ignored. Identifiers are maximal runs of letters followed
/// by optional digits. `1` denotes the identity (so the canonical form of
/// the empty word re-parses); an empty input is likewise the identity.
/// `[u,v]` denotes `u v u^-1 v^-1`.
pub fn parse_word(text: &str, alphabet: &Alphabet) -> Result<Word, WordError> {
    let chars: Vec<char> = text.chars().collect();
    let mut parser = Parser { chars: &chars, pos: 0, alphabet };
    let word = parser.parse_sequence(&[])?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(WordError::Syntax {
            pos: parser.pos,
            message: format!("unexpected character '{}'", parser.chars[parser.pos]),
        });
    }
    Ok(word)
}

struct Parser<'a> {
    chars: &'a [char],
    pos: usize,
    alphabet: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// Parses `term*` until end of input or one of the `stops` characters.
    fn parse_sequence(&mut self, stops: &[char]) -> Result<Word, WordError> {
        let mut acc = Word::identity();
        loop {
            match self.peek() {
                None => return Ok(acc),
                Some(c) if stops.contains(&c) => return Ok(acc),
                Some(_) => {
                    let term = self.parse_term()?;
                    acc = acc.multiply(&term);
                }
            }
        }
    }

    fn parse_term(&mut self) -> Result<Word, WordError> {
        let atom = self.parse_atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let exponent = self.parse_exponent()?;
            Ok(atom.power(exponent))
        } else {
            Ok(atom)
        }
    }

    fn parse_atom(&mut self) -> Result<Word, WordError> {
        let c = self.peek().ok_or(WordError::Syntax {
            pos: self.pos,
            message: "expected a word atom".to_string(),
        })?;
        match c {
            '(' => {
                self.pos += 1;
                let inner = self.parse_sequence(&[')'])?;
                self.expect(')')?;
                Ok(inner)
            }
            '[' => {
                self.pos += 1;
                let left = self.parse_sequence(&[','])?;
                self.expect(',')?;
                let right = self.parse_sequence(&[']'])?;
                self.expect(']')?;
                Ok(left.commutator(&right))
            }
            '1' => {
                self.pos += 1;
                Ok(Word::identity())
            }
            c if c.is_ascii_alphabetic() => self.parse_generator(),
            other => Err(WordError::Syntax {
                pos: self.pos,
                message: format!("unexpected character '{other}'"),
            }),
        }
    }

    fn parse_generator(&mut self) -> Result<Word, WordError> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match self.alphabet.index_of(&name) {
            Some(idx) => Ok(Word::generator(idx)),
            None => Err(WordError::UnknownGenerator { pos: start, name }),
        }
    }

    fn parse_exponent(&mut self) -> Result<i64, WordError> {
        self.skip_ws();
        let mut negative = false;
        if self.chars.get(self.pos) == Some(&'-') {
            negative = true;
            self.pos += 1;
        }
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(WordError::Syntax {
                pos: self.pos,
                message: "expected digits after '^'".to_string(),
            });
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let value: i64 = digits.parse().map_err(|_| WordError::Syntax {
            pos: start,
            message: "exponent out of range".to_string(),
        })?;
        Ok(if negative { -value } else { value })
    }

    fn expect(&mut self, c: char) -> Result<(), WordError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(WordError::Syntax {
                pos: self.pos,
                message: format!("expected '{c}'"),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new(vec!["x", "y"]).unwrap()
    }

    fn w(text: &str) -> Word {
        parse_word(text, &ab()).unwrap()
    }

    #[test]
    fn parse_literal_letters() {
        let word = w("xy");
        assert_eq!(word.letters(), &[Letter::new(0), Letter::new(1)]);
    }

    #[test]
    fn parse_commutator_convention() {
        // [x,y] = x y x^-1 y^-1
        let word = w("[x,y]");
        assert_eq!(
            word.letters(),
            &[
                Letter::new(0),
                Letter::new(1),
                Letter::inverted(0),
                Letter::inverted(1)
            ]
        );
    }

    #[test]
    fn parse_powers_expand() {
        // Oracle: naive expansion x^-1 x^-1 y x y x, already reduced.
        let expected = Word::from_letters(vec![
            Letter::inverted(0),
            Letter::inverted(0),
            Letter::new(1),
            Letter::new(0),
            Letter::new(1),
            Letter::new(0),
        ]);
        assert_eq!(w("x^-2(yx)^2"), expected);
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_word("x)(", &ab()) {
            Err(WordError::Syntax { pos, .. }) => assert_eq!(pos, 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_word("x q2 y", &ab()) {
            Err(WordError::UnknownGenerator { pos, name }) => {
                assert_eq!(pos, 2);
                assert_eq!(name, "q2");
            }
            other => panic!("expected unknown generator, got {other:?}"),
        }
    }

    #[test]
    fn parse_identity_forms() {
        assert!(w("").is_identity());
        assert!(w("1").is_identity());
        assert!(w("x^0").is_identity());
        assert!(w("[x,x]").is_identity());
        assert!(w("[x,1]").is_identity());
    }

    #[test]
    fn multiply_cancels() {
        let a3 = Alphabet::new(vec!["x", "y", "z"]).unwrap();
        let xy = parse_word("xy", &a3).unwrap();
        let yinv_z = parse_word("y^-1z", &a3).unwrap();
        assert_eq!(xy.multiply(&yinv_z), parse_word("xz", &a3).unwrap());
        assert_eq!(w("xy").multiply(&w("yx")), w("x y y x"));
        let u = w("xyx^-1y");
        assert!(u.multiply(&u.inverse()).is_identity());
    }

    #[test]
    fn invert_reverses_and_flips() {
        assert_eq!(w("xy").inverse(), w("y^-1x^-1"));
        assert!(Word::identity().inverse().is_identity());
        assert_eq!(w("xyx^-1").inverse(), w("xy^-1x^-1"));
    }

    #[test]
    fn exponent_vector_counts_signed() {
        assert_eq!(w("xyx^-1").exponent_vector(2), vec![0, 1]);
        assert_eq!(w("[x,y]").exponent_vector(2), vec![0, 0]);
        assert_eq!(w("xxy^-1").exponent_vector(2), vec![2, -1]);
    }

    #[test]
    fn homomorphism_substitutes() {
        let images = vec![w("xy"), w("yx")];
        let source = Alphabet::new(vec!["a", "b"]).unwrap();
        let word = parse_word("ab^-1", &source).unwrap();
        assert_eq!(word.apply_homomorphism(&images).unwrap(), w("[x,y]"));
        assert!(Word::identity().apply_homomorphism(&images).unwrap().is_identity());
        let word = parse_word("ab", &source).unwrap();
        assert_eq!(word.apply_homomorphism(&images).unwrap(), w("x y y x"));
        let word = parse_word("[a,b]", &source).unwrap();
        assert!(word.apply_homomorphism(&[w("x")]).is_err());
    }

    #[test]
    fn alias_names_resolve_on_default_alphabet() {
        let a3 = Alphabet::with_rank(3);
        assert_eq!(parse_word("zx1", &a3).unwrap(), parse_word("x3 x", &a3).unwrap());
        let a4 = Alphabet::with_rank(4);
        assert!(parse_word("z", &a4).is_err());
    }

    #[test]
    fn extend_picks_conventional_names() {
        let (g3, idx) = ab().extend();
        assert_eq!(g3.name(idx), "z");
        let (g4, idx) = g3.extend();
        assert_eq!(g4.name(idx), "x4");
    }

    #[test]
    fn format_round_trips() {
        let alphabet = Alphabet::new(vec!["x", "y", "z"]).unwrap();
        for text in ["", "1", "x", "[x,[y,z]]", "x^-3(zy)^2", "z[y^-1,x][y,x]z^-1"] {
            let word = parse_word(text, &alphabet).unwrap();
            let reparsed = parse_word(&word.format(&alphabet), &alphabet).unwrap();
            assert_eq!(word, reparsed, "round trip failed for {text:?}");
        }
    }
}
