//! Structured outcome of one verification run.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// Which identity a report belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdentityId {
    Miki,
    Matiyasevich,
    PanSun3,
    PanSun4,
    Woodcock,
    SunPan,
    Theorem1,
    Lemma1,
    Theorem2,
    GammaMiki,
    CarlitzGf,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Miki,
        IdentityId::Matiyasevich,
        IdentityId::PanSun3,
        IdentityId::PanSun4,
        IdentityId::Woodcock,
        IdentityId::SunPan,
        IdentityId::Theorem1,
        IdentityId::Lemma1,
        IdentityId::Theorem2,
        IdentityId::GammaMiki,
        IdentityId::CarlitzGf,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::Miki => "miki",
            IdentityId::Matiyasevich => "matiyasevich",
            IdentityId::PanSun3 => "pan-sun-3",
            IdentityId::PanSun4 => "pan-sun-4",
            IdentityId::Woodcock => "woodcock",
            IdentityId::SunPan => "sun-pan",
            IdentityId::Theorem1 => "theorem1",
            IdentityId::Lemma1 => "lemma1",
            IdentityId::Theorem2 => "theorem2",
            IdentityId::GammaMiki => "gamma-miki",
            IdentityId::CarlitzGf => "carlitz-gf",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluation mode of a verification run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    ExactNumeric,
    Symbolic,
    Bigfloat,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::ExactNumeric => "exact-numeric",
            Mode::Symbolic => "symbolic",
            Mode::Bigfloat => "bigfloat",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one verification: both sides, their difference, and a verdict.
/// `pass` is true exactly when `difference` renders the canonical zero of its
/// domain (or, in bigfloat mode, when the relative difference is below the
/// run's tolerance).
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub mode: Mode,
    pub parameters: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
    pub pass: bool,
    #[serde(serialize_with = "secs_f64")]
    pub elapsed: Duration,
}

fn secs_f64<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

/// Convenience builder for the parameters map.
pub fn params<I, K, V>(pairs: I) -> BTreeMap<String, String>
where
    I: IntoIterator<Item = (K, V)>,
    K: Into<String>,
    V: ToString,
{
    pairs
        .into_iter()
        .map(|(k, v)| (k.into(), v.to_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_set_is_stable() {
        let r = IdentityReport {
            identity_id: IdentityId::Miki,
            mode: Mode::ExactNumeric,
            parameters: params([("n", 4)]),
            lhs: "1/144".into(),
            rhs: "1/144".into(),
            difference: "0".into(),
            pass: true,
            elapsed: Duration::from_millis(1),
        };
        let json = serde_json::to_string(&r).unwrap();
        let fields = [
            "identity_id", "mode", "parameters", "lhs", "rhs", "difference", "pass", "elapsed",
        ];
        // exactly these fields, in declaration order
        let mut last = 0;
        for f in fields {
            let pos = json.find(&format!("\"{f}\":")).unwrap_or_else(|| panic!("missing {f}"));
            assert!(pos >= last, "field {f} out of order");
            last = pos;
        }
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v.as_object().unwrap().len(), fields.len());
        assert_eq!(v["identity_id"], "miki");
        assert_eq!(v["mode"], "exact-numeric");
    }
}
