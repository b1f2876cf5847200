//! Partitions confined to the `(d+1) x (n-d)` rectangle indexing Schubert
//! classes of `G(d, P^n)`.
//!
//! A [`BoxedPartition`] always stores exactly `d+1` parts, trailing zeros
//! included. Parsers accept short forms and pad.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partitions live in different boxes ({0} vs {1})")]
    BoxMismatch(PartitionBox, PartitionBox),
    #[error("parts {0:?} are not non-increasing")]
    NotDecreasing(Vec<u32>),
    #[error("part {part} exceeds the box width {width}")]
    PartTooLarge { part: u32, width: u32 },
    #[error("{given} non-zero parts do not fit in {rows} rows")]
    TooManyParts { given: usize, rows: usize },
    #[error("{j} is not a descent of {partition}")]
    NotADescent { j: usize, partition: BoxedPartition },
    #[error("last part of {0} fills the box width; enlargements are undefined")]
    FullLastRow(BoxedPartition),
    #[error("box has zero columns; its transpose has no rows")]
    DegenerateBox,
    #[error("n = {n} is smaller than d = {d}")]
    InvalidGrassmannian { d: u32, n: u32 },
    #[error("cannot parse {input:?}: {message}")]
    Parse { input: String, message: String },
}

/// The rectangle of a Grassmannian `G(d, P^n)`: `d+1` rows and `w = n-d`
/// columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionBox {
    d: u32,
    w: u32,
}

impl PartitionBox {
    pub fn new(d: u32, w: u32) -> Self {
        PartitionBox { d, w }
    }

    /// Box of `G(d, P^n)`.
    pub fn grassmannian(d: u32, n: u32) -> Result<Self, PartitionError> {
        if n < d {
            return Err(PartitionError::InvalidGrassmannian { d, n });
        }
        Ok(PartitionBox { d, w: n - d })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn width(&self) -> u32 {
        self.w
    }

    pub fn rows(&self) -> usize {
        self.d as usize + 1
    }

    pub fn n(&self) -> u32 {
        self.d + self.w
    }

    /// Number of cells, equal to `dim G(d, P^n)`.
    pub fn cells(&self) -> u32 {
        (self.d + 1) * self.w
    }

    /// Box of the dual Grassmannian `G(n-d-1, P^n*)`: `w` rows, `d+1` columns.
    pub fn transpose(&self) -> Result<Self, PartitionError> {
        if self.w == 0 {
            return Err(PartitionError::DegenerateBox);
        }
        Ok(PartitionBox {
            d: self.w - 1,
            w: self.d + 1,
        })
    }

    pub fn empty(&self) -> BoxedPartition {
        BoxedPartition {
            frame: *self,
            parts: vec![0; self.rows()],
        }
    }

    pub fn full(&self) -> BoxedPartition {
        BoxedPartition {
            frame: *self,
            parts: vec![self.w; self.rows()],
        }
    }

    /// Every partition in the box, optionally restricted to one weight, in
    /// lexicographically descending order.
    pub fn partitions(&self, weight: Option<u32>) -> Vec<BoxedPartition> {
        let mut out = Vec::new();
        let mut parts = Vec::with_capacity(self.rows());
        self.fill(&mut parts, self.w, weight, &mut out);
        out
    }

    fn fill(
        &self,
        parts: &mut Vec<u32>,
        cap: u32,
        remaining: Option<u32>,
        out: &mut Vec<BoxedPartition>,
    ) {
        let left = self.rows() - parts.len();
        if left == 0 {
            if remaining.is_none_or(|r| r == 0) {
                out.push(BoxedPartition {
                    frame: *self,
                    parts: parts.clone(),
                });
            }
            return;
        }
        let hi = remaining.map_or(cap, |r| r.min(cap));
        for p in (0..=hi).rev() {
            if let Some(r) = remaining {
                // the rows below can hold at most p each
                if (r - p) as u64 > p as u64 * (left as u64 - 1) {
                    break;
                }
            }
            parts.push(p);
            self.fill(parts, p, remaining.map(|r| r - p), out);
            parts.pop();
        }
    }
}

impl fmt::Display for PartitionBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={},n={}", self.d, self.n())
    }
}

impl FromStr for PartitionBox {
    type Err = PartitionError;

    /// Parses `d=<int>,n=<int>` (either order).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |message: &str| PartitionError::Parse {
            input: s.to_string(),
            message: message.to_string(),
        };
        let (mut d, mut n) = (None, None);
        for field in s.split(',') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| err("expected key=value pairs"))?;
            let value: u32 = value
                .trim()
                .parse()
                .map_err(|_| err("values must be non-negative integers"))?;
            match key.trim() {
                "d" => d = Some(value),
                "n" => n = Some(value),
                _ => return Err(err("keys must be d and n")),
            }
        }
        match (d, n) {
            (Some(d), Some(n)) => PartitionBox::grassmannian(d, n),
            _ => Err(err("both d and n are required")),
        }
    }
}

/// A partition `w >= parts[0] >= ... >= parts[d] >= 0` in a fixed box.
///
/// `Ord` is the canonical enumeration order (lexicographically descending
/// parts), not the containment order; see [`BoxedPartition::leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxedPartition {
    frame: PartitionBox,
    parts: Vec<u32>,
}

impl BoxedPartition {
    /// Builds a partition, padding `parts` with zeros up to `d+1` entries.
    /// Trailing zeros beyond `d+1` entries are dropped.
    pub fn new(frame: PartitionBox, parts: &[u32]) -> Result<Self, PartitionError> {
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(PartitionError::NotDecreasing(parts.to_vec()));
        }
        let nonzero = parts.iter().take_while(|&&p| p > 0).count();
        if nonzero > frame.rows() {
            return Err(PartitionError::TooManyParts {
                given: nonzero,
                rows: frame.rows(),
            });
        }
        if let Some(&first) = parts.first() {
            if first > frame.w {
                return Err(PartitionError::PartTooLarge {
                    part: first,
                    width: frame.w,
                });
            }
        }
        let mut padded: Vec<u32> = parts.iter().copied().take(frame.rows()).collect();
        padded.resize(frame.rows(), 0);
        Ok(BoxedPartition {
            frame,
            parts: padded,
        })
    }

    /// Parses comma-separated parts such as `"5,2,2,1"`. The empty string and
    /// `"0"` denote the empty partition.
    pub fn parse(frame: PartitionBox, s: &str) -> Result<Self, PartitionError> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = if s.trim().is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| {
                    t.trim().parse::<u32>().map_err(|_| PartitionError::Parse {
                        input: s.to_string(),
                        message: format!("{:?} is not a non-negative integer", t.trim()),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        BoxedPartition::new(frame, &parts)
    }

    pub fn frame(&self) -> PartitionBox {
        self.frame
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i`, with the convention that parts past row `d` are zero.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts[0] == 0
    }

    /// `λ̄_i = w - λ_{d-i}`, the Poincaré dual partner.
    pub fn complement(&self) -> BoxedPartition {
        let w = self.frame.w;
        BoxedPartition {
            frame: self.frame,
            parts: self.parts.iter().rev().map(|&p| w - p).collect(),
        }
    }

    /// Transposed diagram, living in the transposed box.
    pub fn conjugate(&self) -> Result<BoxedPartition, PartitionError> {
        let frame = self.frame.transpose()?;
        let parts = (0..frame.rows() as u32)
            .map(|i| self.parts.iter().filter(|&&p| p > i).count() as u32)
            .collect();
        Ok(BoxedPartition { frame, parts })
    }

    fn same_box(&self, other: &BoxedPartition) -> Result<(), PartitionError> {
        if self.frame != other.frame {
            return Err(PartitionError::BoxMismatch(self.frame, other.frame));
        }
        Ok(())
    }

    /// Containment: `λ_i <= μ_i` for every row.
    pub fn leq(&self, other: &BoxedPartition) -> Result<bool, PartitionError> {
        self.same_box(other)?;
        Ok(self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b))
    }

    /// Strict in every row, zeros included.
    pub fn lt(&self, other: &BoxedPartition) -> Result<bool, PartitionError> {
        self.same_box(other)?;
        Ok(self.parts.iter().zip(&other.parts).all(|(a, b)| a < b))
    }

    /// `λ_i + μ_{d-i} < w` for all rows, i.e. `λ < μ̄`.
    pub fn pair_condition_a(&self, other: &BoxedPartition) -> Result<bool, PartitionError> {
        self.same_box(other)?;
        let w = self.frame.w;
        Ok(self
            .parts
            .iter()
            .zip(other.parts.iter().rev())
            .all(|(a, b)| a + b < w))
    }

    /// `λ_d = μ_d = 0` and `λ_i + μ_{d-i-1} <= w` for `i < d`, i.e.
    /// `λ* < (μ*)‾` in the transposed box.
    pub fn pair_condition_b(&self, other: &BoxedPartition) -> Result<bool, PartitionError> {
        self.same_box(other)?;
        let d = self.frame.d as usize;
        let w = self.frame.w;
        if self.parts[d] != 0 || other.parts[d] != 0 {
            return Ok(false);
        }
        Ok((0..d).all(|i| self.parts[i] + other.parts[d - i - 1] <= w))
    }

    /// Descent set `J(μ) = { j : μ_j > μ_{j+1} }`, with `μ_{d+1} = 0`.
    pub fn descent_set(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&j| self.parts[j] > self.part(j + 1))
            .collect()
    }

    fn check_descent(&self, j: usize) -> Result<(), PartitionError> {
        if j >= self.parts.len() || self.parts[j] <= self.part(j + 1) {
            return Err(PartitionError::NotADescent {
                j,
                partition: self.clone(),
            });
        }
        Ok(())
    }

    /// The enlargement `μ^(j)` attached to a descent `j`.
    ///
    /// If `μ_j < w` the first `j+1` rows are raised to `μ_j + 1`; if
    /// `μ_j = w` the first `j+2` rows are set to `w`. Requires `μ_d < w`.
    pub fn mu_j(&self, j: usize) -> Result<BoxedPartition, PartitionError> {
        self.check_descent(j)?;
        let w = self.frame.w;
        if self.parts[self.frame.d as usize] == w {
            return Err(PartitionError::FullLastRow(self.clone()));
        }
        let mut parts = self.parts.clone();
        if parts[j] < w {
            let v = parts[j] + 1;
            parts[..=j].iter_mut().for_each(|p| *p = v);
        } else {
            // μ_d < w forces j < d here
            parts[..=j + 1].iter_mut().for_each(|p| *p = w);
        }
        Ok(BoxedPartition {
            frame: self.frame,
            parts,
        })
    }

    /// `δ(j)`, unclamped: `|μ^(j)| - |μ| - 1` when `μ_j < w`, and
    /// `w - 1 - μ_{j+1}` when `μ_j = w`.
    pub fn delta_j(&self, j: usize) -> Result<i64, PartitionError> {
        self.check_descent(j)?;
        let w = self.frame.w as i64;
        let mj = self.parts[j] as i64;
        if mj < w {
            let grown: i64 = self.parts[..=j].iter().map(|&p| mj + 1 - p as i64).sum();
            Ok(grown - 1)
        } else {
            Ok(w - 1 - self.part(j + 1) as i64)
        }
    }

    /// `δ(μ) = Σ_{j ∈ J(μ)} max(δ(j), 0)`.
    pub fn delta(&self) -> i64 {
        self.descent_set()
            .into_iter()
            .map(|j| self.delta_j(j).expect("j is a descent").max(0))
            .sum()
    }
}

impl Ord for BoxedPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.frame
            .cmp(&other.frame)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for BoxedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
