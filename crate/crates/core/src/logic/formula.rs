use std::fmt;
use std::ops::Not;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

/// Every connective of every supported logic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Connective {
    /// Classical negation, prefix `~`.
    Not,
    /// Linear negation, postfix `^`.
    Perp,
    And,
    Or,
    Implies,
    Tensor,
    Par,
    Lolli,
    /// `A/B`: yields `A` when `B` follows on the right.
    Over,
    /// `B\A`: yields `A` when `B` precedes on the left.
    Under,
    Product,
}

impl Connective {
    pub fn arity(self) -> usize {
        match self {
            Connective::Not | Connective::Perp => 1,
            _ => 2,
        }
    }

    /// ASCII spelling used by the textual grammar.
    pub fn ascii(self) -> &'static str {
        match self {
            Connective::Not => "~",
            Connective::Perp => "^",
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Implies => "->",
            Connective::Tensor => "*",
            Connective::Par => "@",
            Connective::Lolli => "-o",
            Connective::Over => "/",
            Connective::Under => "\\",
            Connective::Product => ".",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::Not => "¬",
            Connective::Perp => "⊥",
            Connective::And => "∧",
            Connective::Or => "∨",
            Connective::Implies => "→",
            Connective::Tensor => "⊗",
            Connective::Par => "⅋",
            Connective::Lolli => "⊸",
            Connective::Over => "/",
            Connective::Under => "\\",
            Connective::Product => "•",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Connective> {
        use Connective::*;
        [Not, Perp, And, Or, Implies, Tensor, Par, Lolli, Over, Under, Product]
            .into_iter()
            .find(|c| c.symbol() == s || c.ascii() == s)
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.ascii())
    }
}

/// Polarity of a formula occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Pos,
    #[serde(rename = "-")]
    Neg,
}

impl Not for Sign {
    type Output = Sign;

    fn not(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// A propositional formula. Operands are shared, so cloning is cheap.
///
/// Operand order follows the written form: `Over(a, b)` is `a/b` and
/// `Under(a, b)` is `a\b`, so the argument of a slash is `b` for `Over`
/// and `a` for `Under`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(Arc<str>),
    Unary(Connective, Arc<Formula>),
    Binary(Connective, Arc<Formula>, Arc<Formula>),
}

impl Formula {
    pub fn atom(name: impl AsRef<str>) -> Formula {
        Formula::Atom(Arc::from(name.as_ref()))
    }

    pub fn unary(connective: Connective, operand: Formula) -> Formula {
        debug_assert_eq!(connective.arity(), 1);
        Formula::Unary(connective, Arc::new(operand))
    }

    pub fn binary(connective: Connective, left: Formula, right: Formula) -> Formula {
        debug_assert_eq!(connective.arity(), 2);
        Formula::Binary(connective, Arc::new(left), Arc::new(right))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::Atom(_))
    }

    pub fn atom_name(&self) -> Option<&str> {
        match self {
            Formula::Atom(name) => Some(name),
            _ => None,
        }
    }

    pub fn connective(&self) -> Option<Connective> {
        match self {
            Formula::Atom(_) => None,
            Formula::Unary(c, _) | Formula::Binary(c, _, _) => Some(*c),
        }
    }

    /// Number of connective occurrences.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Unary(_, a) => 1 + a.size(),
            Formula::Binary(_, a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Connective nesting depth; atoms have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Unary(_, a) => 1 + a.depth(),
            Formula::Binary(_, a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Pre-order walk over all subformula occurrences, this formula first.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            out.push(f);
            match f {
                Formula::Atom(_) => {}
                Formula::Unary(_, a) => stack.push(a),
                Formula::Binary(_, a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
            }
        }
        out
    }

    pub fn connectives(&self) -> impl Iterator<Item = Connective> + '_ {
        self.subformulas().into_iter().filter_map(Formula::connective)
    }
}

impl fmt::Display for Formula {
    /// Canonical ASCII form: every compound operand is parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn operand(g: &Formula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match g {
                Formula::Binary(..) => write!(f, "({g})"),
                _ => write!(f, "{g}"),
            }
        }
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Unary(Connective::Perp, a) => {
                operand(a, f)?;
                f.write_str("^")
            }
            Formula::Unary(c, a) => {
                f.write_str(c.ascii())?;
                operand(a, f)
            }
            Formula::Binary(c, a, b) => {
                operand(a, f)?;
                f.write_str(c.ascii())?;
                operand(b, f)
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
