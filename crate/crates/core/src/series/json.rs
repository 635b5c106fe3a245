use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Coeff, SeriesError, TruncatedSeries, Vars, MAX_VARS};

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    vars: Vec<String>,
    grade: String,
    order: i32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    laurent: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    caps: BTreeMap<String, i32>,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: Vec<i32>,
    c: String,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v = &self.vars;
        let n = v.len();
        SeriesRepr {
            vars: v.names.clone(),
            grade: v.grade_name().to_string(),
            order: self.order,
            laurent: (0..n)
                .filter(|&i| v.laurent[i])
                .map(|i| v.names[i].clone())
                .collect(),
            caps: (0..n)
                .filter_map(|i| v.caps[i].map(|c| (v.names[i].clone(), c)))
                .collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRepr {
                    e: e[..n].to_vec(),
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(deserializer)?;
        from_repr(repr).map_err(serde::de::Error::custom)
    }
}

fn from_repr(repr: SeriesRepr) -> Result<TruncatedSeries, SeriesError> {
    if repr.vars.len() > MAX_VARS {
        return Err(SeriesError::Parse("too many variables".into()));
    }
    let names: Vec<&str> = repr.vars.iter().map(String::as_str).collect();
    let laurent: Vec<&str> = repr.laurent.iter().map(String::as_str).collect();
    let mut vars = Vars::new(&names, &repr.grade)?.with_laurent(&laurent)?;
    for (name, cap) in &repr.caps {
        vars = vars.with_cap(name, *cap)?;
    }
    let vars = vars.shared();
    let mut terms = Vec::with_capacity(repr.terms.len());
    for t in repr.terms {
        if t.e.len() != names.len() {
            return Err(SeriesError::Parse("exponent vector length".into()));
        }
        let mut e = [0; MAX_VARS];
        e[..t.e.len()].copy_from_slice(&t.e);
        for (i, &k) in t.e.iter().enumerate() {
            if k < 0 && !vars.is_laurent(i) {
                return Err(SeriesError::Parse(format!(
                    "negative exponent of {}",
                    names[i]
                )));
            }
        }
        let c = Coeff::from_str(&t.c)
            .map_err(|_| SeriesError::Parse(format!("bad coefficient {:?}", t.c)))?;
        terms.push((e, c));
    }
    Ok(TruncatedSeries::from_terms(&vars, repr.order, terms))
}
