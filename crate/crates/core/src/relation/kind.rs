use std::fmt;

use serde::{Serialize, Serializer};

/// The nine primary relations and four derived ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RelationKind {
    Disjoins,
    Belongs,
    Repeats,
    Contradicts,
    Follows,
    Extends,
    Excepts,
    Constrains,
    Characterizes,
    Details,
    Shares,
    Duplicates,
    Explains,
}

impl RelationKind {
    pub const ALL: [RelationKind; 13] = [
        RelationKind::Disjoins,
        RelationKind::Belongs,
        RelationKind::Repeats,
        RelationKind::Contradicts,
        RelationKind::Follows,
        RelationKind::Extends,
        RelationKind::Excepts,
        RelationKind::Constrains,
        RelationKind::Characterizes,
        RelationKind::Details,
        RelationKind::Shares,
        RelationKind::Duplicates,
        RelationKind::Explains,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            RelationKind::Disjoins => "DISJOINS",
            RelationKind::Belongs => "BELONGS",
            RelationKind::Repeats => "REPEATS",
            RelationKind::Contradicts => "CONTRADICTS",
            RelationKind::Follows => "FOLLOWS",
            RelationKind::Extends => "EXTENDS",
            RelationKind::Excepts => "EXCEPTS",
            RelationKind::Constrains => "CONSTRAINS",
            RelationKind::Characterizes => "CHARACTERIZES",
            RelationKind::Details => "DETAILS",
            RelationKind::Shares => "SHARES",
            RelationKind::Duplicates => "DUPLICATES",
            RelationKind::Explains => "EXPLAINS",
        }
    }

    pub fn from_keyword(word: &str) -> Option<RelationKind> {
        RelationKind::ALL.into_iter().find(|k| k.keyword() == word)
    }

    pub fn is_primary(self) -> bool {
        !self.is_derived()
    }

    pub fn is_derived(self) -> bool {
        matches!(
            self,
            RelationKind::Details | RelationKind::Shares | RelationKind::Duplicates | RelationKind::Explains
        )
    }

    /// Kinds whose operands can be swapped without changing meaning.
    pub fn is_symmetric(self) -> bool {
        matches!(
            self,
            RelationKind::Disjoins
                | RelationKind::Repeats
                | RelationKind::Contradicts
                | RelationKind::Shares
                | RelationKind::Duplicates
                | RelationKind::Explains
        )
    }

    /// The primary relation a derived kind specializes. `SHARES` relates
    /// composites through their parts and has no primary counterpart on the
    /// pair itself.
    pub fn primary(self) -> Option<RelationKind> {
        match self {
            RelationKind::Details => Some(RelationKind::Extends),
            RelationKind::Duplicates | RelationKind::Explains => Some(RelationKind::Repeats),
            RelationKind::Shares => None,
            k => Some(k),
        }
    }

    /// `REPEATS` or one of its notation refinements.
    pub fn is_repetition(self) -> bool {
        matches!(
            self,
            RelationKind::Repeats | RelationKind::Duplicates | RelationKind::Explains
        )
    }

    /// How an edge of this kind reads, with `from` and `to` as operands.
    pub fn describe(self, from: &str, to: &str) -> String {
        match self {
            RelationKind::Disjoins => format!("{from} and {to} are unrelated"),
            RelationKind::Belongs => format!("{from} is textually included in {to}"),
            RelationKind::Repeats => format!("{from} specifies the same property as {to}"),
            RelationKind::Contradicts => format!("{from} and {to} cannot both hold"),
            RelationKind::Follows => format!("{from} is a consequence of {to}"),
            RelationKind::Extends => format!("{from} adds to the properties of {to}"),
            RelationKind::Excepts => format!("{from} specifies an exception to {to}"),
            RelationKind::Constrains => format!("constraint {from} applies to {to}"),
            RelationKind::Characterizes => format!("meta-requirement {from} applies to {to}"),
            RelationKind::Details => format!("{from} adds detail to {to}"),
            RelationKind::Shares => format!("{from} and {to} have a common sub-requirement"),
            RelationKind::Duplicates => format!("{from} and {to} state the same property in the same notation"),
            RelationKind::Explains => format!("{from} and {to} state the same property in different notations"),
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl Serialize for RelationKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.keyword())
    }
}
