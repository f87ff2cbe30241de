//! Formulae, sequents and signed decomposition forests shared by every engine.

mod forest;
mod formula;
mod sequent;

pub use forest::{decompose, leaf_order, Class, DecompositionForest, Origin, PosId, Position, RootTree, Side};
pub use formula::{Connective, Formula, Sign};
pub use sequent::{Antecedent, Sequent, Structure};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// The logics handled by the toolkit, ordered from most to least structural freedom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LogicId {
    Classical,
    Mll,
    Mill,
    #[serde(rename = "l")]
    LambekL,
    #[serde(rename = "leps")]
    LambekLEps,
    Nl,
}

/// How the antecedent of a sequent is organised.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntecedentKind {
    Set,
    Multiset,
    Sequence,
    Tree,
}

impl LogicId {
    pub const ALL: [LogicId; 6] =
        [LogicId::Classical, LogicId::Mll, LogicId::Mill, LogicId::LambekL, LogicId::LambekLEps, LogicId::Nl];

    pub fn name(self) -> &'static str {
        match self {
            LogicId::Classical => "classical",
            LogicId::Mll => "mll",
            LogicId::Mill => "mill",
            LogicId::LambekL => "l",
            LogicId::LambekLEps => "leps",
            LogicId::Nl => "nl",
        }
    }

    pub fn connectives(self) -> &'static [Connective] {
        use Connective::*;
        match self {
            LogicId::Classical => &[Not, And, Or, Implies],
            LogicId::Mll => &[Perp, Tensor, Par, Lolli],
            LogicId::Mill => &[Tensor, Lolli],
            LogicId::LambekL | LogicId::LambekLEps => &[Over, Under, Product],
            LogicId::Nl => &[Over, Under],
        }
    }

    pub fn allows(self, connective: Connective) -> bool {
        self.connectives().contains(&connective)
    }

    pub fn antecedent_kind(self) -> AntecedentKind {
        match self {
            LogicId::Classical => AntecedentKind::Set,
            LogicId::Mll | LogicId::Mill => AntecedentKind::Multiset,
            LogicId::LambekL | LogicId::LambekLEps => AntecedentKind::Sequence,
            LogicId::Nl => AntecedentKind::Tree,
        }
    }

    pub fn single_conclusion(self) -> bool {
        !matches!(self, LogicId::Classical | LogicId::Mll)
    }

    pub fn allows_empty_antecedent(self) -> bool {
        !matches!(self, LogicId::LambekL | LogicId::Nl)
    }

    /// Logics without Exchange, whose proof nets must be planar.
    pub fn is_planar(self) -> bool {
        matches!(self, LogicId::LambekL | LogicId::LambekLEps | LogicId::Nl)
    }

    /// Logics counting formula occurrences (every atom consumed exactly once).
    pub fn is_linear(self) -> bool {
        self != LogicId::Classical
    }
}

impl fmt::Display for LogicId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pretty = match self {
            LogicId::Classical => "classical logic",
            LogicId::Mll => "MLL",
            LogicId::Mill => "MILL",
            LogicId::LambekL => "L",
            LogicId::LambekLEps => "L_eps",
            LogicId::Nl => "NL",
        };
        f.write_str(pretty)
    }
}

impl FromStr for LogicId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "classical" | "lk" => Ok(LogicId::Classical),
            "mll" => Ok(LogicId::Mll),
            "mill" => Ok(LogicId::Mill),
            "l" | "lambek" => Ok(LogicId::LambekL),
            "leps" | "l_eps" | "lepsilon" => Ok(LogicId::LambekLEps),
            "nl" => Ok(LogicId::Nl),
            other => Err(format!("unknown logic `{other}`")),
        }
    }
}
