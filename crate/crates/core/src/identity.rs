use std::fmt;

use crate::coeff::ParamScalar;
use crate::weyl::{GaussianState, WeylOperator};

/// Difference between the two sides of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Operator(WeylOperator),
    State(GaussianState),
    Scalar(ParamScalar),
    /// Residuals of other shapes, already rendered; `None` means zero.
    Rendered(Option<String>),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Operator(o) => o.is_zero(),
            Residual::State(s) => s.is_zero(),
            Residual::Scalar(c) => c.is_zero(),
            Residual::Rendered(r) => r.is_none(),
        }
    }

    pub fn render(&self) -> String {
        match self {
            Residual::Operator(o) => o.render(),
            Residual::State(s) => s.render(),
            Residual::Scalar(c) => c.render(),
            Residual::Rendered(r) => r.clone().unwrap_or_else(|| "0".to_string()),
        }
    }
}

impl From<WeylOperator> for Residual {
    fn from(o: WeylOperator) -> Self {
        Residual::Operator(o)
    }
}

impl From<GaussianState> for Residual {
    fn from(s: GaussianState) -> Self {
        Residual::State(s)
    }
}

impl From<ParamScalar> for Residual {
    fn from(c: ParamScalar) -> Self {
        Residual::Scalar(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Failed => "failed",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One checked identity: `lhs - rhs` is stored as the residual, and the
/// record is verified exactly when that residual vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityRecord {
    pub id: String,
    /// The claimed relation in readable form, e.g. `[H,A+] = 2*lam*A+`.
    pub anchor: String,
    pub residual: Residual,
    /// Extra computed information, such as a relation that was derived rather than checked.
    pub note: Option<String>,
}

impl IdentityRecord {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, residual: impl Into<Residual>) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            residual: residual.into(),
            note: None,
        }
    }

    /// Record for a relation between two operators.
    pub fn operators(
        id: impl Into<String>,
        anchor: impl Into<String>,
        lhs: &WeylOperator,
        rhs: &WeylOperator,
    ) -> Self {
        Self::new(id, anchor, lhs - rhs)
    }

    /// Record for a boolean check that has no algebraic residual.
    pub fn check(id: impl Into<String>, anchor: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        let residual = if ok { None } else { Some(detail()) };
        Self::new(id, anchor, Residual::Rendered(residual))
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn status(&self) -> Status {
        if self.residual.is_zero() {
            Status::Verified
        } else {
            Status::Failed
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status() == Status::Verified
    }
}

/// The records of one suite, in a deterministic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteResult {
    pub suite: String,
    pub records: Vec<IdentityRecord>,
}

impl SuiteResult {
    pub fn new(suite: impl Into<String>, records: Vec<IdentityRecord>) -> Self {
        Self {
            suite: suite.into(),
            records,
        }
    }

    pub fn verified(&self) -> usize {
        self.records.iter().filter(|r| r.is_verified()).count()
    }

    pub fn failed(&self) -> usize {
        self.records.len() - self.verified()
    }

    pub fn all_verified(&self) -> bool {
        self.records.iter().all(IdentityRecord::is_verified)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityRecord> {
        self.records.iter().filter(|r| !r.is_verified())
    }
}
