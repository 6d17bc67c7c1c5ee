//! Serialized output records. Big integers are always decimal strings.

use equalpow::oracle::{ComponentRange, Representation};
use equalpow::{BigInt, Branch, Exponent, Provenance, Quadruple};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ProvenanceRecord {
    Divisor {
        delta: String,
        r1: String,
        r2: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        branch: Option<String>,
    },
    Generator {
        c1: u64,
    },
    Oracle {
        limit: u32,
        range: String,
    },
}

impl ProvenanceRecord {
    /// Compact single-field form used in CSV output.
    pub fn to_compact(&self) -> String {
        match self {
            Self::Divisor {
                delta,
                r1,
                r2,
                branch,
            } => {
                let mut s = format!("divisor:delta={delta};r1={r1};r2={r2}");
                if let Some(b) = branch {
                    s.push_str(";branch=");
                    s.push_str(b);
                }
                s
            }
            Self::Generator { c1 } => format!("generator:c1={c1}"),
            Self::Oracle { limit, range } => format!("oracle:limit={limit};range={range}"),
        }
    }
}

impl From<&Provenance> for ProvenanceRecord {
    fn from(p: &Provenance) -> Self {
        match p {
            Provenance::Divisor {
                delta,
                r1,
                r2,
                branch,
            } => Self::Divisor {
                delta: delta.to_string(),
                r1: r1.to_string(),
                r2: r2.to_string(),
                branch: branch.map(|b| b.as_str().to_owned()),
            },
            Provenance::Generator { c1 } => Self::Generator { c1: *c1 },
            // an oracle-derived quadruple carries no range of its own
            Provenance::Oracle => Self::Oracle {
                limit: 0,
                range: String::new(),
            },
        }
    }
}

/// One quadruple: keys `n, A, B, C, D, sum, provenance` in that order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadrupleRecord {
    pub n: u32,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    #[serde(rename = "D")]
    pub d: String,
    pub sum: String,
    pub provenance: ProvenanceRecord,
}

impl From<&Quadruple> for QuadrupleRecord {
    fn from(q: &Quadruple) -> Self {
        Self {
            n: q.n.value(),
            a: q.a.to_string(),
            b: q.b.to_string(),
            c: q.c.to_string(),
            d: q.d.to_string(),
            sum: q.sum.to_string(),
            provenance: (&q.provenance).into(),
        }
    }
}

fn parse_big(field: &str, s: &str) -> Result<BigInt, CliError> {
    s.parse()
        .map_err(|_| CliError::Usage(format!("{field}: '{s}' is not a decimal integer")))
}

impl TryFrom<&QuadrupleRecord> for Quadruple {
    type Error = CliError;

    /// Parses and re-verifies the record; the stored sum must match.
    fn try_from(r: &QuadrupleRecord) -> Result<Self, CliError> {
        let n = Exponent::try_from(r.n)?;
        let provenance = match &r.provenance {
            ProvenanceRecord::Divisor {
                delta,
                r1,
                r2,
                branch,
            } => Provenance::Divisor {
                delta: parse_big("delta", delta)?,
                r1: parse_big("r1", r1)?,
                r2: parse_big("r2", r2)?,
                branch: match branch.as_deref() {
                    None => None,
                    Some("plus") => Some(Branch::Plus),
                    Some("minus") => Some(Branch::Minus),
                    Some(other) => return Err(CliError::Usage(format!("unknown branch '{other}'"))),
                },
            },
            ProvenanceRecord::Generator { c1 } => Provenance::Generator { c1: *c1 },
            ProvenanceRecord::Oracle { .. } => Provenance::Oracle,
        };
        let q = Quadruple::new(
            n,
            parse_big("A", &r.a)?,
            parse_big("B", &r.b)?,
            parse_big("C", &r.c)?,
            parse_big("D", &r.d)?,
            provenance,
        )?;
        if q.sum.to_string() != r.sum {
            return Err(CliError::SelfCheck(format!(
                "record sum {} does not match computed {}",
                r.sum, q.sum
            )));
        }
        Ok(q)
    }
}

/// One sum with all of its representations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationRecord {
    pub n: u32,
    pub sum: String,
    pub pairs: Vec<[String; 2]>,
    pub provenance: ProvenanceRecord,
}

impl RepresentationRecord {
    pub fn new(n: Exponent, limit: u32, range: ComponentRange, rep: &Representation) -> Self {
        Self {
            n: n.value(),
            sum: rep.sum.to_string(),
            pairs: rep
                .pairs
                .iter()
                .map(|(x, y)| [x.to_string(), y.to_string()])
                .collect(),
            provenance: ProvenanceRecord::Oracle {
                limit,
                range: range.as_str().to_owned(),
            },
        }
    }

    pub fn to_csv(&self) -> String {
        let pairs: Vec<String> = self.pairs.iter().map(|[x, y]| format!("{x}:{y}")).collect();
        format!("{},{},{},{}", self.n, self.sum, self.pairs.len(), pairs.join(" "))
    }
}

pub const QUADRUPLE_CSV_HEADER: &str = "n,A,B,C,D,sum,provenance";
pub const GENERATOR_CSV_HEADER: &str = "c1,A,B,C,D,sum";
pub const REPRESENTATION_CSV_HEADER: &str = "n,sum,ways,pairs";

impl QuadrupleRecord {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.a,
            self.b,
            self.c,
            self.d,
            self.sum,
            self.provenance.to_compact()
        )
    }

    /// Row in generator-table column order `c1, A, B, C, D, sum`.
    pub fn to_generator_csv(&self, c1: u64) -> String {
        format!("{c1},{},{},{},{},{}", self.a, self.b, self.c, self.d, self.sum)
    }
}
