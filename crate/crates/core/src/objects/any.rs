use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{CoinFountain, DyckPath, MotzkinPath, ParallelogramPolyomino, StanleyPolyomino};

/// The five object families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Family {
    Stanley,
    Dyck,
    PeaklessMotzkin,
    Fountain,
    Parallelogram,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Stanley,
        Family::Dyck,
        Family::PeaklessMotzkin,
        Family::Fountain,
        Family::Parallelogram,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Stanley => "stanley",
            Family::Dyck => "dyck",
            Family::PeaklessMotzkin => "peaklessMotzkin",
            Family::Fountain => "fountain",
            Family::Parallelogram => "parallelogram",
        }
    }

    /// Decodes one JSON object of this family.
    pub fn parse_json(self, text: &str) -> Result<Object, serde_json::Error> {
        Ok(match self {
            Family::Stanley => Object::Stanley(serde_json::from_str(text)?),
            Family::Dyck => Object::Dyck(serde_json::from_str(text)?),
            Family::PeaklessMotzkin => Object::Motzkin(serde_json::from_str(text)?),
            Family::Fountain => Object::Fountain(serde_json::from_str(text)?),
            Family::Parallelogram => Object::Parallelogram(serde_json::from_str(text)?),
        })
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
            .find(|f| {
                f.name().eq_ignore_ascii_case(s)
                    || (s == "motzkin" && *f == Family::PeaklessMotzkin)
            })
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

/// An object of any family.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Object {
    Stanley(StanleyPolyomino),
    Dyck(DyckPath),
    Motzkin(MotzkinPath),
    Fountain(CoinFountain),
    Parallelogram(ParallelogramPolyomino),
}

impl Object {
    pub fn family(&self) -> Family {
        match self {
            Object::Stanley(_) => Family::Stanley,
            Object::Dyck(_) => Family::Dyck,
            Object::Motzkin(_) => Family::PeaklessMotzkin,
            Object::Fountain(_) => Family::Fountain,
            Object::Parallelogram(_) => Family::Parallelogram,
        }
    }

    pub fn as_stanley(&self) -> Option<&StanleyPolyomino> {
        match self {
            Object::Stanley(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_dyck(&self) -> Option<&DyckPath> {
        match self {
            Object::Dyck(d) => Some(d),
            _ => None,
        }
    }

    pub fn as_motzkin(&self) -> Option<&MotzkinPath> {
        match self {
            Object::Motzkin(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_fountain(&self) -> Option<&CoinFountain> {
        match self {
            Object::Fountain(c) => Some(c),
            _ => None,
        }
    }

    pub fn as_parallelogram(&self) -> Option<&ParallelogramPolyomino> {
        match self {
            Object::Parallelogram(p) => Some(p),
            _ => None,
        }
    }

    /// Looks a statistic up by its record field name.
    pub fn statistic(&self, name: &str) -> Option<usize> {
        match self {
            Object::Stanley(p) => p.stats().get(name),
            Object::Dyck(d) => d.stats().get(name),
            Object::Motzkin(m) => match name {
                "steps" => Some(m.len()),
                "axisSteps" => Some(m.axis_steps()),
                _ => None,
            },
            Object::Fountain(c) => c.stats().get(name),
            Object::Parallelogram(p) => match name {
                "area" => Some(p.area()),
                "colCount" => Some(p.columns().len()),
                _ => None,
            },
        }
    }

    /// Flat statistics record.
    pub fn stats_json(&self) -> Value {
        let v = match self {
            Object::Stanley(p) => serde_json::to_value(p.stats()),
            Object::Dyck(d) => serde_json::to_value(d.stats()),
            Object::Motzkin(m) => serde_json::to_value(m.stats()),
            Object::Fountain(c) => serde_json::to_value(c.stats()),
            Object::Parallelogram(p) => serde_json::to_value(p.stats()),
        };
        v.expect("statistics records always serialize")
    }

    /// Canonical single-line JSON encoding.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("objects always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("polyomino".parse::<Family>().is_err());
    }

    #[test]
    fn statistics_by_name() {
        let p = Object::Stanley(StanleyPolyomino::new([(0, 2), (1, 3)]).unwrap());
        assert_eq!(p.statistic("area"), Some(5));
        assert_eq!(p.statistic("sump"), None);
        let line = p.to_json();
        assert_eq!(Family::Stanley.parse_json(&line).unwrap(), p);
        let d = Family::Dyck.parse_json(r#"{"word":"UUDD"}"#).unwrap();
        assert_eq!(d.statistic("sump"), Some(2));
        assert_eq!(d.stats_json()["firstPeakHeight"], 2);
    }
}
