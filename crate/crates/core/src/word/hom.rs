use serde::Serialize;

use super::{FreeWord, Presentation};
use crate::error::{AlgebraError, Result};
use crate::group::GroupEngine;

/// A map from the generators of a presentation into a target engine.
#[derive(Debug, Clone)]
pub struct GroupHom<E: GroupEngine> {
    source: Presentation,
    target: E,
    images: Vec<Option<E::Element>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelatorCheck {
    pub label: String,
    pub relator: String,
    pub image: String,
    pub pass: bool,
}

/// Outcome of checking every relator of the source presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomReport {
    pub presentation: String,
    pub checks: Vec<RelatorCheck>,
    pub pass: bool,
}

impl HomReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelatorCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl<E: GroupEngine> GroupHom<E> {
    /// Generators missing from `images` are left unassigned; evaluating a
    /// word that uses them fails with [`AlgebraError::MissingImage`].
    pub fn new(source: Presentation, target: E, images: Vec<(&str, E::Element)>) -> Result<Self> {
        let mut slots = vec![None; source.alphabet().len()];
        for (name, img) in images {
            let idx = source.alphabet().index_of(name)?;
            slots[idx] = Some(img);
        }
        Ok(GroupHom {
            source,
            target,
            images: slots,
        })
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &E {
        &self.target
    }

    pub fn image(&self, name: &str) -> Result<&E::Element> {
        let idx = self.source.alphabet().index_of(name)?;
        self.images[idx]
            .as_ref()
            .ok_or_else(|| AlgebraError::MissingImage(name.to_string()))
    }

    /// Multiplicative extension of the generator images.
    pub fn evaluate(&self, w: &FreeWord) -> Result<E::Element> {
        let alphabet = self.source.alphabet();
        if !(std::sync::Arc::ptr_eq(w.alphabet(), alphabet) || **w.alphabet() == **alphabet) {
            return Err(AlgebraError::AlphabetMismatch);
        }
        let mut acc = self.target.identity();
        for s in w.syllables() {
            let img = self.images[s.gen]
                .as_ref()
                .ok_or_else(|| AlgebraError::MissingImage(alphabet.name(s.gen).to_string()))?;
            let p = self.target.pow(img, s.exp)?;
            acc = self.target.multiply(&acc, &p)?;
        }
        Ok(acc)
    }

    pub fn evaluate_str(&self, text: &str) -> Result<E::Element> {
        self.evaluate(&self.source.parse_word(text)?)
    }

    /// Checks that every relator maps to the identity.
    pub fn verify(&self) -> Result<HomReport> {
        let mut checks = Vec::with_capacity(self.source.relators().len());
        for r in self.source.relators() {
            let img = self.evaluate(&r.word)?;
            checks.push(RelatorCheck {
                label: r.label.clone(),
                relator: r.word.to_string(),
                image: img.to_string(),
                pass: self.target.is_identity(&img),
            });
        }
        let pass = checks.iter().all(|c| c.pass);
        Ok(HomReport {
            presentation: self.source.name().to_string(),
            checks,
            pass,
        })
    }
}
