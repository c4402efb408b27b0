use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Alphabet, FreeWord};
use crate::error::Result;

/// A relator together with the label it is reported under.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub label: String,
    pub word: FreeWord,
}

/// Finite presentation `<alphabet | relators>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    alphabet: Arc<Alphabet>,
    relators: Vec<Relator>,
}

/// On-disk form: `{"alphabet": [...], "relators": ["..."]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub alphabet: Vec<String>,
    pub relators: Vec<String>,
}

impl Presentation {
    pub fn new<S: AsRef<str>>(name: &str, generators: &[S]) -> Result<Self> {
        Ok(Presentation {
            name: name.to_string(),
            alphabet: Alphabet::new(generators)?,
            relators: Vec::new(),
        })
    }

    /// Adds a relator given in the word grammar; it is labelled by its text.
    pub fn with_relator(mut self, text: &str) -> Result<Self> {
        let word = FreeWord::parse(&self.alphabet, text)?;
        self.relators.push(Relator {
            label: text.to_string(),
            word,
        });
        Ok(self)
    }

    /// Adds the relation `lhs = rhs` as the relator `lhs * rhs^-1`.
    pub fn with_relation(mut self, lhs: &str, rhs: &str) -> Result<Self> {
        let l = FreeWord::parse(&self.alphabet, lhs)?;
        let r = FreeWord::parse(&self.alphabet, rhs)?;
        self.relators.push(Relator {
            label: format!("{lhs} = {rhs}"),
            word: l.multiply(&r.invert())?,
        });
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn parse_word(&self, text: &str) -> Result<FreeWord> {
        FreeWord::parse(&self.alphabet, text)
    }

    pub fn from_file(name: &str, file: &PresentationFile) -> Result<Self> {
        let mut p = Presentation::new(name, &file.alphabet)?;
        for r in &file.relators {
            p = p.with_relator(r)?;
        }
        Ok(p)
    }

    pub fn from_json(name: &str, json: &str) -> Result<Self> {
        let file: PresentationFile = serde_json::from_str(json).map_err(|e| {
            crate::error::ParseError::new(e.column(), "", format!("invalid presentation JSON: {e}"))
        })?;
        Self::from_file(name, &file)
    }

    pub fn to_file(&self) -> PresentationFile {
        PresentationFile {
            alphabet: self
                .alphabet
                .generators()
                .iter()
                .map(|g| g.name().to_string())
                .collect(),
            relators: self.relators.iter().map(|r| r.word.to_string()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::AlgebraError;

    #[test]
    fn json_round_trip() {
        let json = r#"{"alphabet":["al","be"],"relators":["al*be*al*be^-1"]}"#;
        let p = Presentation::from_json("klein", json).unwrap();
        assert_eq!(p.alphabet().len(), 2);
        assert_eq!(p.relators()[0].word.to_string(), "al*be*al*be^-1");
        let back = serde_json::to_string(&p.to_file()).unwrap();
        assert_eq!(back, json);
    }

    #[test]
    fn relators_must_use_alphabet() {
        let json = r#"{"alphabet":["al"],"relators":["al*be"]}"#;
        let e = Presentation::from_json("bad", json).unwrap_err();
        assert!(matches!(e, AlgebraError::Parse(_)));
    }

    #[test]
    fn relation_becomes_relator() {
        let p = Presentation::new("t", &["x", "y"])
            .unwrap()
            .with_relation("x*y", "y*x")
            .unwrap();
        assert_eq!(p.relators()[0].word.to_string(), "x*y*x^-1*y^-1");
        assert_eq!(p.relators()[0].label, "x*y = y*x");
    }
}
