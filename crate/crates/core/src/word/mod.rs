//! Free-group words, presentations, homomorphisms and a small string
//! rewriting oracle.

mod hom;
mod parse;
mod presentation;
mod rewrite;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::group::GroupEngine;

pub use hom::{GroupHom, HomReport, RelatorCheck};
pub use parse::{is_valid_name, parse_syllables, RawSyllable};
pub use presentation::{Presentation, PresentationFile, Relator};
pub use rewrite::{RewriteSystem, DEFAULT_REWRITE_BUDGET};

/// A validated generator symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(String);

impl Generator {
    pub fn new(name: &str) -> Result<Self> {
        if is_valid_name(name) {
            Ok(Generator(name.to_string()))
        } else {
            Err(AlgebraError::InvalidGeneratorName(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Ordered generator list. Declaration order is the canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    generators: Vec<Generator>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let mut generators: Vec<Generator> = Vec::with_capacity(names.len());
        for n in names {
            let g = Generator::new(n.as_ref())?;
            if generators.contains(&g) {
                return Err(AlgebraError::DuplicateGenerator(g.0));
            }
            generators.push(g);
        }
        Ok(Arc::new(Alphabet { generators }))
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.generators
            .iter()
            .position(|g| g.0 == name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    pub fn name(&self, index: usize) -> &str {
        &self.generators[index].0
    }
}

/// A run `g^exp` of one generator; `exp` is never zero inside a [`FreeWord`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub exp: i64,
}

/// Freely reduced word in syllable run-length form.
#[derive(Clone)]
pub struct FreeWord {
    alphabet: Arc<Alphabet>,
    syllables: Vec<Syllable>,
}

impl PartialEq for FreeWord {
    fn eq(&self, other: &Self) -> bool {
        self.syllables == other.syllables
            && (Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet)
    }
}

impl Eq for FreeWord {}

impl Hash for FreeWord {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.syllables.hash(state);
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.alphabet.name(s.gen))?;
            if s.exp != 1 {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

/// Appends `s` to a reduced stack, merging and cancelling at the top.
fn push_reduced(stack: &mut Vec<Syllable>, s: Syllable) -> Result<()> {
    if s.exp == 0 {
        return Ok(());
    }
    match stack.last_mut() {
        Some(top) if top.gen == s.gen => {
            let e = top
                .exp
                .checked_add(s.exp)
                .ok_or(AlgebraError::OutOfRange("free word exponent"))?;
            if e == 0 {
                stack.pop();
            } else {
                top.exp = e;
            }
        }
        _ => stack.push(s),
    }
    Ok(())
}

/// Free reduction of raw `(name, exponent)` syllables over `alphabet`.
pub fn reduce<S: AsRef<str>>(alphabet: &Arc<Alphabet>, raw: &[(S, i64)]) -> Result<FreeWord> {
    let mut stack = Vec::with_capacity(raw.len());
    for (name, exp) in raw {
        let gen = alphabet.index_of(name.as_ref())?;
        push_reduced(&mut stack, Syllable { gen, exp: *exp })?;
    }
    Ok(FreeWord {
        alphabet: alphabet.clone(),
        syllables: stack,
    })
}

impl FreeWord {
    pub fn identity(alphabet: &Arc<Alphabet>) -> Self {
        FreeWord {
            alphabet: alphabet.clone(),
            syllables: Vec::new(),
        }
    }

    pub fn generator(alphabet: &Arc<Alphabet>, name: &str) -> Result<Self> {
        Self::power(alphabet, name, 1)
    }

    pub fn power(alphabet: &Arc<Alphabet>, name: &str, exp: i64) -> Result<Self> {
        let gen = alphabet.index_of(name)?;
        Ok(Self::from_index(alphabet, gen, exp))
    }

    pub(crate) fn from_index(alphabet: &Arc<Alphabet>, gen: usize, exp: i64) -> Self {
        debug_assert!(gen < alphabet.len());
        let syllables = if exp == 0 {
            Vec::new()
        } else {
            vec![Syllable { gen, exp }]
        };
        FreeWord {
            alphabet: alphabet.clone(),
            syllables,
        }
    }

    /// Builds a word from index syllables, reducing as it goes.
    pub fn from_syllables<I>(alphabet: &Arc<Alphabet>, syllables: I) -> Result<Self>
    where
        I: IntoIterator<Item = Syllable>,
    {
        let mut stack = Vec::new();
        for s in syllables {
            if s.gen >= alphabet.len() {
                return Err(AlgebraError::UnknownGenerator(format!("#{}", s.gen)));
            }
            push_reduced(&mut stack, s)?;
        }
        Ok(FreeWord {
            alphabet: alphabet.clone(),
            syllables: stack,
        })
    }

    /// Parses the word grammar against `alphabet`.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Self> {
        let raw = parse_syllables(text)?;
        let mut stack = Vec::with_capacity(raw.len());
        for t in raw {
            let gen = alphabet.index_of(&t.name).map_err(|_| {
                crate::error::ParseError::new(t.column, t.name.clone(), "unknown generator")
            })?;
            push_reduced(&mut stack, Syllable { gen, exp: t.exp })?;
        }
        Ok(FreeWord {
            alphabet: alphabet.clone(),
            syllables: stack,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of `|exp|`.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|s| s.exp.unsigned_abs()).sum()
    }

    fn same_alphabet(&self, other: &FreeWord) -> Result<()> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(AlgebraError::AlphabetMismatch)
        }
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.same_alphabet(other)?;
        let mut stack = self.syllables.clone();
        stack.reserve(other.syllables.len());
        let mut rest = other.syllables.iter();
        // Cancellation can only cascade at the junction.
        for s in rest.by_ref() {
            let before = stack.len();
            push_reduced(&mut stack, *s)?;
            if stack.len() >= before {
                break;
            }
        }
        stack.extend(rest.copied());
        Ok(FreeWord {
            alphabet: self.alphabet.clone(),
            syllables: stack,
        })
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            alphabet: self.alphabet.clone(),
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -s.exp,
                })
                .collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Result<FreeWord> {
        FreeGroup::new(self.alphabet.clone()).pow(self, n)
    }

    /// The commutator `[u, v] = u v u^-1 v^-1`.
    pub fn commutator(&self, other: &FreeWord) -> Result<FreeWord> {
        self.multiply(other)?
            .multiply(&self.invert())?
            .multiply(&other.invert())
    }

    /// Expansion into single letters `(generator, ±1)`.
    pub fn letters(&self) -> Vec<(usize, i8)> {
        let mut out = Vec::with_capacity(self.letter_len() as usize);
        for s in &self.syllables {
            let sign = if s.exp > 0 { 1 } else { -1 };
            for _ in 0..s.exp.unsigned_abs() {
                out.push((s.gen, sign));
            }
        }
        out
    }

    pub fn from_letters(alphabet: &Arc<Alphabet>, letters: &[(usize, i8)]) -> Result<FreeWord> {
        Self::from_syllables(
            alphabet,
            letters.iter().map(|&(gen, sign)| Syllable {
                gen,
                exp: sign as i64,
            }),
        )
    }
}

/// The free group on an alphabet as a [`GroupEngine`].
#[derive(Debug, Clone)]
pub struct FreeGroup {
    alphabet: Arc<Alphabet>,
}

impl FreeGroup {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        FreeGroup { alphabet }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn parse(&self, text: &str) -> Result<FreeWord> {
        FreeWord::parse(&self.alphabet, text)
    }
}

impl GroupEngine for FreeGroup {
    type Element = FreeWord;

    fn identity(&self) -> FreeWord {
        FreeWord::identity(&self.alphabet)
    }

    fn multiply(&self, u: &FreeWord, v: &FreeWord) -> Result<FreeWord> {
        u.multiply(v)
    }

    fn invert(&self, u: &FreeWord) -> Result<FreeWord> {
        Ok(u.invert())
    }

    fn is_identity(&self, u: &FreeWord) -> bool {
        u.is_identity()
    }

    fn pow(&self, u: &FreeWord, n: i64) -> Result<FreeWord> {
        // A single syllable only needs its exponent scaled.
        if let [s] = u.syllables() {
            let exp = s
                .exp
                .checked_mul(n)
                .ok_or(AlgebraError::OutOfRange("free word exponent"))?;
            return Ok(FreeWord::from_index(&u.alphabet, s.gen, exp));
        }
        let base = if n < 0 { u.invert() } else { u.clone() };
        let mut exp = n.unsigned_abs();
        let mut acc = FreeWord::identity(&u.alphabet);
        let mut square = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.multiply(&square)?;
            }
            exp >>= 1;
            if exp > 0 {
                square = square.multiply(&square)?;
            }
        }
        Ok(acc)
    }
}
