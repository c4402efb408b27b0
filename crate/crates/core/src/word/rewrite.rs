use std::sync::Arc;

use super::{Alphabet, FreeWord};
use crate::error::{AlgebraError, Result};

pub const DEFAULT_REWRITE_BUDGET: usize = 1_000_000;

type Letter = (usize, i8);

/// Letter-level string rewriting modulo free reduction.
///
/// Rules are applied leftmost-first until none matches. The caller is
/// responsible for supplying a terminating, confluent rule list; the step
/// budget only guards against mistakes.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    alphabet: Arc<Alphabet>,
    rules: Vec<(Vec<Letter>, Vec<Letter>)>,
    budget: usize,
}

impl RewriteSystem {
    pub fn new(alphabet: Arc<Alphabet>) -> Self {
        RewriteSystem {
            alphabet,
            rules: Vec::new(),
            budget: DEFAULT_REWRITE_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_rule(mut self, lhs: &str, rhs: &str) -> Result<Self> {
        let l = FreeWord::parse(&self.alphabet, lhs)?.letters();
        let r = FreeWord::parse(&self.alphabet, rhs)?.letters();
        if l.is_empty() {
            return Err(AlgebraError::Domain(
                "rewrite rule with empty left side".into(),
            ));
        }
        self.rules.push((l, r));
        Ok(self)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Rules pushing every `be^±1` to the right of `al^±1` in `<al, be | al be al be^-1>`.
    /// Normal forms are `al^r * be^s`.
    pub fn klein() -> Self {
        let ab = Alphabet::new(&["al", "be"]).expect("static alphabet");
        RewriteSystem::new(ab)
            .with_rule("be*al", "al^-1*be")
            .and_then(|s| s.with_rule("be*al^-1", "al*be"))
            .and_then(|s| s.with_rule("be^-1*al", "al^-1*be^-1"))
            .and_then(|s| s.with_rule("be^-1*al^-1", "al*be^-1"))
            .expect("static rules")
    }

    /// Rules moving the central letters `a`, `b` to the right of `x`, `y`
    /// and sorting `a` before `b`. Normal forms are `w(x,y) * a^m * b^n`.
    pub fn p2t() -> Self {
        let ab = Alphabet::new(&["x", "y", "a", "b"]).expect("static alphabet");
        let mut sys = RewriteSystem::new(ab);
        for c in ["a", "b"] {
            for ce in [1, -1] {
                for g in ["x", "y"] {
                    for ge in [1, -1] {
                        sys = sys
                            .with_rule(&format!("{c}^{ce}*{g}^{ge}"), &format!("{g}^{ge}*{c}^{ce}"))
                            .expect("static rules");
                    }
                }
            }
        }
        for be in [1, -1] {
            for ae in [1, -1] {
                sys = sys
                    .with_rule(&format!("b^{be}*a^{ae}"), &format!("a^{ae}*b^{be}"))
                    .expect("static rules");
            }
        }
        sys
    }

    /// Rewrites `w` to exhaustion.
    pub fn normal_form(&self, w: &FreeWord) -> Result<FreeWord> {
        if !(Arc::ptr_eq(w.alphabet(), &self.alphabet) || **w.alphabet() == *self.alphabet) {
            return Err(AlgebraError::AlphabetMismatch);
        }
        let mut letters = w.letters();
        let max_lhs = self.rules.iter().map(|(l, _)| l.len()).max().unwrap_or(1);
        let mut steps = 0usize;
        let mut scan_from = 0usize;
        while let Some((pos, rule)) = self.leftmost_match(&letters, scan_from) {
            steps += 1;
            if steps > self.budget {
                return Err(AlgebraError::RewriteBudgetExceeded(self.budget));
            }
            let (lhs, rhs) = &self.rules[rule];
            letters.splice(pos..pos + lhs.len(), rhs.iter().copied());
            let lo = cancel_at_junctions(&mut letters, pos, pos + rhs.len());
            scan_from = lo.saturating_sub(max_lhs - 1);
        }
        FreeWord::from_letters(&self.alphabet, &letters)
    }

    fn leftmost_match(&self, letters: &[Letter], from: usize) -> Option<(usize, usize)> {
        for pos in from..letters.len() {
            for (i, (lhs, _)) in self.rules.iter().enumerate() {
                if letters[pos..].starts_with(lhs) {
                    return Some((pos, i));
                }
            }
        }
        None
    }
}

/// Freely cancels after splicing at `lo`; returns the leftmost index that
/// may have changed.
fn cancel_at_junctions(letters: &mut Vec<Letter>, lo: usize, _hi: usize) -> usize {
    // Everything left of `lo - 1` is untouched and already reduced.
    let start = lo.saturating_sub(1);
    let mut out: Vec<Letter> = letters[..start].to_vec();
    let mut leftmost = start;
    for &l in &letters[start..] {
        match out.last() {
            Some(&(g, s)) if g == l.0 && s == -l.1 => {
                out.pop();
                leftmost = leftmost.min(out.len());
            }
            _ => out.push(l),
        }
    }
    *letters = out;
    leftmost
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_example_from_two_rules() {
        let ab = Alphabet::new(&["al", "be"]).unwrap();
        let sys = RewriteSystem::new(ab.clone())
            .with_rule("be*al", "al^-1*be")
            .unwrap()
            .with_rule("be*al^-1", "al*be")
            .unwrap();
        let w = FreeWord::parse(&ab, "be*al*be").unwrap();
        assert_eq!(sys.normal_form(&w).unwrap().to_string(), "al^-1*be^2");
    }

    #[test]
    fn empty_rule_set_leaves_reduced_words() {
        let ab = Alphabet::new(&["x", "y"]).unwrap();
        let sys = RewriteSystem::new(ab.clone());
        let w = FreeWord::parse(&ab, "x*y^-1*x^-1*y*x^3").unwrap();
        assert_eq!(sys.normal_form(&w).unwrap(), w);
    }

    #[test]
    fn p2t_centralizes() {
        let sys = RewriteSystem::p2t();
        let w = FreeWord::parse(sys.alphabet(), "a*x*a^-1").unwrap();
        assert_eq!(sys.normal_form(&w).unwrap().to_string(), "x");
        let w = FreeWord::parse(sys.alphabet(), "b*a^-1*y*b^-1*x*a^2").unwrap();
        assert_eq!(sys.normal_form(&w).unwrap().to_string(), "y*x*a");
    }

    #[test]
    fn budget_guards_non_terminating_rules() {
        let ab = Alphabet::new(&["x", "y"]).unwrap();
        let sys = RewriteSystem::new(ab.clone())
            .with_rule("x*y", "y*x")
            .unwrap()
            .with_rule("y*x", "x*y")
            .unwrap()
            .with_budget(50);
        let w = FreeWord::parse(&ab, "x*y").unwrap();
        assert_eq!(
            sys.normal_form(&w).unwrap_err(),
            AlgebraError::RewriteBudgetExceeded(50)
        );
    }

    #[test]
    fn klein_normal_forms_are_sorted() {
        let sys = RewriteSystem::klein();
        let w = FreeWord::parse(sys.alphabet(), "be^3*al^2*be^-1*al").unwrap();
        // be^3 al^2 = al^-2 be^3; be^2 al = al be^2.
        assert_eq!(sys.normal_form(&w).unwrap().to_string(), "al^-1*be^2");
    }
}
