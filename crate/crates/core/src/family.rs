use std::fmt;
use std::str::FromStr;

/// The polynomial families attached to `Φ_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Rank,
    Cube,
    MaxCube,
    Degree,
    Indegree,
    Outdegree,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Rank,
        Family::Cube,
        Family::MaxCube,
        Family::Degree,
        Family::Indegree,
        Family::Outdegree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Rank => "rank",
            Family::Cube => "cube",
            Family::MaxCube => "maxcube",
            Family::Degree => "degree",
            Family::Indegree => "indegree",
            Family::Outdegree => "outdegree",
        }
    }

    /// Smallest `n` covered by the closed-form coefficient formula, if any.
    pub fn closed_form_from(self) -> Option<usize> {
        match self {
            Family::Rank | Family::Cube => Some(0),
            Family::MaxCube | Family::Degree | Family::Indegree => Some(3),
            Family::Outdegree => None,
        }
    }

    pub fn has_recurrence(self) -> bool {
        self != Family::Outdegree
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}
