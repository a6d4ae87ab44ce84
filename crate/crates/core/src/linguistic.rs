use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::number::Ivqrofn;

/// Ten-grade verbal scale with a fixed numeric encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum LinguisticTerm {
    /// Certainly low importance.
    Cli,
    /// Very low importance.
    Vli,
    /// Low importance.
    Li,
    /// Below average importance.
    Bai,
    /// Average importance.
    Ai,
    /// Above average importance.
    Aai,
    /// High importance.
    Hi,
    /// Very high importance.
    Vhi,
    /// Certainly high importance.
    Chi,
    /// Exactly equal.
    Ee,
}

impl LinguisticTerm {
    pub const ALL: [Self; 10] = [
        Self::Cli,
        Self::Vli,
        Self::Li,
        Self::Bai,
        Self::Ai,
        Self::Aai,
        Self::Hi,
        Self::Vhi,
        Self::Chi,
        Self::Ee,
    ];

    pub fn code(self) -> &'static str {
        match self {
            Self::Cli => "CLI",
            Self::Vli => "VLI",
            Self::Li => "LI",
            Self::Bai => "BAI",
            Self::Ai => "AI",
            Self::Aai => "AAI",
            Self::Hi => "HI",
            Self::Vhi => "VHI",
            Self::Chi => "CHI",
            Self::Ee => "EE",
        }
    }

    pub fn bounds(self) -> [f64; 4] {
        match self {
            Self::Cli => [0.05, 0.05, 0.90, 0.95],
            Self::Vli => [0.10, 0.20, 0.80, 0.90],
            Self::Li => [0.20, 0.35, 0.65, 0.80],
            Self::Bai => [0.35, 0.45, 0.55, 0.65],
            Self::Ai => [0.45, 0.55, 0.45, 0.55],
            Self::Aai => [0.55, 0.65, 0.35, 0.45],
            Self::Hi => [0.65, 0.80, 0.20, 0.35],
            Self::Vhi => [0.80, 0.90, 0.10, 0.20],
            Self::Chi => [0.90, 0.95, 0.05, 0.05],
            Self::Ee => [0.1965, 0.1965, 0.1965, 0.1965],
        }
    }

    pub fn to_ivqrofn(self) -> Ivqrofn {
        Ivqrofn::try_from(self.bounds()).expect("scale rows are well ordered")
    }
}

impl From<LinguisticTerm> for Ivqrofn {
    fn from(t: LinguisticTerm) -> Self {
        t.to_ivqrofn()
    }
}

impl FromStr for LinguisticTerm {
    type Err = Error;

    /// Accepts the codes case-insensitively; `BA` is read as `BAI`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let code = s.trim().to_ascii_uppercase();
        if code == "BA" {
            return Ok(Self::Bai);
        }
        Self::ALL
            .into_iter()
            .find(|t| t.code() == code)
            .ok_or_else(|| Error::UnknownTerm(s.to_string()))
    }
}

impl TryFrom<String> for LinguisticTerm {
    type Error = Error;
    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<LinguisticTerm> for String {
    fn from(t: LinguisticTerm) -> String {
        t.code().to_string()
    }
}

impl fmt::Display for LinguisticTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}
