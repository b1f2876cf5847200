//! JSON forms of boxes, classes and bi-classes.
//!
//! Coefficients are written as bare JSON integers of any size. Field order in
//! the output structs is the order they are emitted in.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Number, Value};

use crate::kunneth::{KunnethError, MultiDegree, MultiProjClass, ProductSpace};
use crate::partitions::{BoxedPartition, PartitionBox};
use crate::schubert::{BiSchubertClass, SchubertClass, SchubertError};

/// An exact integer that serializes as a JSON number. Strings of digits are
/// accepted on input as well.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigIntJson(pub BigInt);

impl From<BigInt> for BigIntJson {
    fn from(v: BigInt) -> Self {
        BigIntJson(v)
    }
}

impl From<BigIntJson> for BigInt {
    fn from(v: BigIntJson) -> Self {
        v.0
    }
}

impl fmt::Display for BigIntJson {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for BigIntJson {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Number::from_str(&self.0.to_string())
            .map_err(serde::ser::Error::custom)?
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BigIntJson {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let text = match Value::deserialize(d)? {
            Value::Number(n) => n.to_string(),
            Value::String(s) => s,
            other => return Err(D::Error::custom(format!("expected an integer, got {other}"))),
        };
        BigInt::from_str(text.trim())
            .map(BigIntJson)
            .map_err(|_| D::Error::custom(format!("{text:?} is not an exact integer")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoxJson {
    pub d: u32,
    pub n: u32,
}

impl BoxJson {
    pub fn to_box(self) -> Result<PartitionBox, SchubertError> {
        Ok(PartitionBox::grassmannian(self.d, self.n)?)
    }
}

impl From<PartitionBox> for BoxJson {
    fn from(b: PartitionBox) -> Self {
        BoxJson { d: b.d(), n: b.n() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub partition: Vec<u32>,
    pub coeff: BigIntJson,
}

/// `{"box": {"d", "n"}, "terms": [{"partition", "coeff"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassJson {
    #[serde(rename = "box")]
    pub frame: BoxJson,
    pub terms: Vec<TermJson>,
}

impl ClassJson {
    /// Partitions shorter than `d + 1` are padded with zeros.
    pub fn to_class(&self) -> Result<SchubertClass, SchubertError> {
        let frame = self.frame.to_box()?;
        let mut out = SchubertClass::zero(frame);
        for t in &self.terms {
            out.add_term(BoxedPartition::new(frame, &t.partition)?, t.coeff.0.clone())?;
        }
        Ok(out)
    }
}

impl From<&SchubertClass> for ClassJson {
    fn from(c: &SchubertClass) -> Self {
        ClassJson {
            frame: c.frame().into(),
            terms: c
                .terms()
                .map(|(p, k)| TermJson {
                    partition: p.parts().to_vec(),
                    coeff: k.clone().into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiTermJson {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub coeff: BigIntJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BiClassJson {
    #[serde(rename = "box")]
    pub frame: BoxJson,
    pub terms: Vec<BiTermJson>,
}

impl BiClassJson {
    pub fn to_class(&self) -> Result<BiSchubertClass, SchubertError> {
        let frame = self.frame.to_box()?;
        let mut out = BiSchubertClass::zero(frame);
        for t in &self.terms {
            out.add_term(
                BoxedPartition::new(frame, &t.lambda)?,
                BoxedPartition::new(frame, &t.mu)?,
                t.coeff.0.clone(),
            )?;
        }
        Ok(out)
    }
}

impl From<&BiSchubertClass> for BiClassJson {
    fn from(c: &BiSchubertClass) -> Self {
        BiClassJson {
            frame: c.frame().into(),
            terms: c
                .terms()
                .map(|(l, m, k)| BiTermJson {
                    lambda: l.parts().to_vec(),
                    mu: m.parts().to_vec(),
                    coeff: k.clone().into(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub dims: Vec<u32>,
}

impl SpaceJson {
    pub fn to_space(&self) -> Result<ProductSpace, KunnethError> {
        ProductSpace::new(self.dims.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialJson {
    pub m: Vec<u32>,
    pub coeff: BigIntJson,
}

/// `{"space": {"dims"}, "terms": [{"m", "coeff"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiProjJson {
    pub space: SpaceJson,
    pub terms: Vec<MonomialJson>,
}

impl MultiProjJson {
    pub fn to_class(&self) -> Result<MultiProjClass, KunnethError> {
        MultiProjClass::from_terms(
            self.space.to_space()?,
            self.terms
                .iter()
                .map(|t| (MultiDegree(t.m.clone()), t.coeff.0.clone())),
        )
    }
}

impl From<&MultiProjClass> for MultiProjJson {
    fn from(c: &MultiProjClass) -> Self {
        MultiProjJson {
            space: SpaceJson {
                dims: c.space().dims().to_vec(),
            },
            terms: c
                .terms()
                .map(|(m, k)| MonomialJson {
                    m: m.0.clone(),
                    coeff: k.clone().into(),
                })
                .collect(),
        }
    }
}
