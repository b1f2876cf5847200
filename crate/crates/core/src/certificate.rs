//! Verdict records produced by the hypothesis checkers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::json::BigIntJson;

/// Criteria the checkers know about. The serialized names are the ones used
/// in JSON requests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Criterion {
    #[serde(rename = "th1.3")]
    Th13,
    #[serde(rename = "th2.2")]
    Th22,
    #[serde(rename = "cor2.3")]
    Cor23,
    #[serde(rename = "cor2.4")]
    Cor24,
    #[serde(rename = "prop2.6")]
    Prop26,
    #[serde(rename = "prop2.7a")]
    Prop27a,
    #[serde(rename = "prop2.7b")]
    Prop27b,
    #[serde(rename = "prop3.1")]
    Prop31,
    #[serde(rename = "hodge")]
    Hodge,
    #[serde(rename = "hansen")]
    Hansen,
    #[serde(rename = "bertini6.2")]
    Bertini62,
    #[serde(rename = "th7.1")]
    Th71,
    #[serde(rename = "cor7.3")]
    Cor73,
    #[serde(rename = "cor7.4")]
    Cor74,
    #[serde(rename = "cor7.5")]
    Cor75,
    #[serde(rename = "encombrante")]
    Encombrante,
    #[serde(rename = "th8.1")]
    Th81,
    #[serde(rename = "cor8.3")]
    Cor83,
    #[serde(rename = "th8.4")]
    Th84,
}

impl Criterion {
    pub const ALL: [Criterion; 19] = [
        Criterion::Th13,
        Criterion::Th22,
        Criterion::Cor23,
        Criterion::Cor24,
        Criterion::Prop26,
        Criterion::Prop27a,
        Criterion::Prop27b,
        Criterion::Prop31,
        Criterion::Hodge,
        Criterion::Hansen,
        Criterion::Bertini62,
        Criterion::Th71,
        Criterion::Cor73,
        Criterion::Cor74,
        Criterion::Cor75,
        Criterion::Encombrante,
        Criterion::Th81,
        Criterion::Cor83,
        Criterion::Th84,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Criterion::Th13 => "th1.3",
            Criterion::Th22 => "th2.2",
            Criterion::Cor23 => "cor2.3",
            Criterion::Cor24 => "cor2.4",
            Criterion::Prop26 => "prop2.6",
            Criterion::Prop27a => "prop2.7a",
            Criterion::Prop27b => "prop2.7b",
            Criterion::Prop31 => "prop3.1",
            Criterion::Hodge => "hodge",
            Criterion::Hansen => "hansen",
            Criterion::Bertini62 => "bertini6.2",
            Criterion::Th71 => "th7.1",
            Criterion::Cor73 => "cor7.3",
            Criterion::Cor74 => "cor7.4",
            Criterion::Cor75 => "cor7.5",
            Criterion::Encombrante => "encombrante",
            Criterion::Th81 => "th8.1",
            Criterion::Cor83 => "cor8.3",
            Criterion::Th84 => "th8.4",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown criterion {s:?}"))
    }
}

/// Evidence attached to a verdict. Factor indices in `index_set` are 1-based;
/// partition row indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// One inequality `lhs (relation) rhs` attached to a factor subset.
    IndexSet {
        indices: Vec<usize>,
        lhs: i64,
        relation: String,
        rhs: i64,
        satisfied: bool,
    },
    /// A pair `(λ, μ)` of partitions, with the condition it was tested for.
    Pair {
        lambda: Vec<u32>,
        mu: Vec<u32>,
        condition: String,
        satisfied: bool,
    },
    Partition {
        role: String,
        parts: Vec<u32>,
        satisfied: bool,
    },
    MultiDegree {
        role: String,
        m: Vec<u32>,
    },
    /// A violated neighbour inequality `c_m² >= c_{m+e_α-e_β} c_{m-e_α+e_β}`.
    Hodge {
        m: Vec<u32>,
        alpha: usize,
        beta: usize,
        square: BigIntJson,
        product: BigIntJson,
    },
    Descent {
        j: usize,
        partition: Vec<u32>,
        nonzero: bool,
    },
    Quantity {
        name: String,
        value: i64,
    },
    /// Outcome of one reading or branch of a criterion.
    Reading {
        name: String,
        holds: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub criterion: Criterion,
    pub holds: bool,
    pub witnesses: Vec<Witness>,
    pub assumptions: Vec<String>,
    pub reason: String,
}

impl Certificate {
    pub fn new(criterion: Criterion) -> Self {
        Certificate {
            criterion,
            holds: false,
            witnesses: Vec::new(),
            assumptions: Vec::new(),
            reason: String::new(),
        }
    }

    pub fn verdict(mut self, holds: bool, reason: impl Into<String>) -> Self {
        self.holds = holds;
        self.reason = reason.into();
        self
    }

    pub fn assume(mut self, assumption: impl Into<String>) -> Self {
        let a = assumption.into();
        if !self.assumptions.contains(&a) {
            self.assumptions.push(a);
        }
        self
    }

    pub fn witness(&mut self, w: Witness) {
        self.witnesses.push(w);
    }
}
