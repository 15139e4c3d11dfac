//! Verification reports shared by every checker and the command line.

use std::fmt;

use num_rational::BigRational;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

/// Where two sides of an identity first disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// Coefficient of `p^p q^q`.
    PQ { p: i64, q: i64 },
    /// Coefficient of `q^q` in a one-variable identity.
    Q(i64),
    /// Exponent of the factor `(1 - q^n)`.
    Exponent(i64),
    /// Coefficient of `e^v` in a group ring, `v` in simple-root coordinates.
    Weight(Vec<BigRational>),
    /// A labelled numerical comparison; the values are the relative
    /// difference and the tolerance.
    Numeric(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::PQ { p, q } => write!(f, "p^{p} q^{q}"),
            Location::Q(q) => write!(f, "q^{q}"),
            Location::Exponent(n) => write!(f, "exponent of (1 - q^{n})"),
            Location::Weight(v) => {
                write!(f, "e^(")?;
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Location::Numeric(label) => write!(f, "{label}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub location: Location,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

impl Serialize for Discrepancy {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Discrepancy", 3)?;
        st.serialize_field("at", &self.location.to_string())?;
        st.serialize_field("lhs", &self.lhs.to_string())?;
        st.serialize_field("rhs", &self.rhs.to_string())?;
        st.end()
    }
}

/// Outcome of one exact (or numerical) verification.
///
/// `equal` is true exactly when `first_discrepancy` is absent.
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub p_trunc: Option<i64>,
    pub q_trunc: Option<i64>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub equal: bool,
    pub first_discrepancy: Option<Discrepancy>,
    pub notes: Vec<String>,
    pub timings_ms: Vec<(String, f64)>,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>) -> Self {
        IdentityReport {
            name: name.into(),
            params: Vec::new(),
            p_trunc: None,
            q_trunc: None,
            lhs_terms: 0,
            rhs_terms: 0,
            equal: true,
            first_discrepancy: None,
            notes: Vec::new(),
            timings_ms: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Records the first disagreement; later calls are ignored.
    pub fn fail(&mut self, d: Discrepancy) {
        if self.first_discrepancy.is_none() {
            self.first_discrepancy = Some(d);
        }
        self.equal = false;
    }

    pub fn time(&mut self, phase: &str, ms: f64) {
        self.timings_ms.push((phase.to_string(), ms.max(0.0)));
    }

    /// Looks up a parameter by name.
    pub fn get_param(&self, key: &str) -> Option<&str> {
        self.params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

struct Pairs<'a, V>(&'a [(String, V)]);

impl<V: Serialize> Serialize for Pairs<'_, V> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IdentityReport", 10)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("equal", &self.equal)?;
        st.serialize_field("params", &Pairs(&self.params))?;
        st.serialize_field("p_trunc", &self.p_trunc)?;
        st.serialize_field("q_trunc", &self.q_trunc)?;
        st.serialize_field("lhs_terms", &self.lhs_terms)?;
        st.serialize_field("rhs_terms", &self.rhs_terms)?;
        st.serialize_field("first_discrepancy", &self.first_discrepancy)?;
        st.serialize_field("notes", &self.notes)?;
        st.serialize_field("timings_ms", &Pairs(&self.timings_ms))?;
        st.end()
    }
}

/// Milliseconds elapsed since `start`.
pub(crate) fn elapsed_ms(start: std::time::Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}
