//! Instance specs in JSON:
//! `{"k": 2, "n": 4, "roots": ["-1", "-2", "-3", "-4"]}` or
//! `{"conditions": [{"interval": ["1", "2"], "points": ["3/2^1", "5/3^1"]}, ...]}`.

use serde_json::Value;

use super::report::{InstanceKind, InstanceReport};
use super::{check_positivity_instance, check_secant_instance, SolverOptions};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Endpoint, ProjInterval, Rational};
use crate::flag::Mode;
use crate::schubert::{parse_point_power, PointMultiset, ProjPoint};

#[derive(Clone, Debug, PartialEq)]
pub struct SecantCondition {
    pub interval: ProjInterval,
    pub points: PointMultiset,
}

impl SecantCondition {
    pub fn new(interval: ProjInterval, points: PointMultiset) -> Self {
        SecantCondition { interval, points }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSpec {
    Positivity {
        k: usize,
        n: usize,
        roots: Vec<Rational>,
    },
    Secant {
        k: usize,
        n: usize,
        conditions: Vec<SecantCondition>,
        mode: Mode,
    },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn scalar_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(x) if x.is_i64() || x.is_u64() => Ok(x.to_string()),
        other => Err(bad(format!("expected a rational string, got {other}"))),
    }
}

fn usize_field(obj: &serde_json::Map<String, Value>, key: &str) -> Result<Option<usize>> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_u64()
            .map(|x| Some(x as usize))
            .ok_or_else(|| bad(format!("'{key}' must be a nonnegative integer"))),
    }
}

/// `["a", "b"]` is the closed interval; a string such as `"(0, inf)"` is
/// parsed with its brackets.
fn parse_interval(v: &Value) -> Result<ProjInterval> {
    match v {
        Value::String(s) => ProjInterval::parse(s),
        Value::Array(items) if items.len() == 2 => {
            let end = |v: &Value| -> Result<Endpoint> {
                let t = scalar_text(v)?;
                match t.trim() {
                    "inf" | "+inf" | "-inf" | "∞" => Ok(Endpoint::Infinite),
                    other => parse_rational(other).map(Endpoint::Finite),
                }
            };
            ProjInterval::new(end(&items[0])?, true, end(&items[1])?, true)
        }
        other => Err(bad(format!("bad interval {other}"))),
    }
}

fn parse_condition(v: &Value) -> Result<SecantCondition> {
    let obj = v.as_object().ok_or_else(|| bad("a condition must be an object"))?;
    let interval = parse_interval(obj.get("interval").ok_or_else(|| bad("condition without 'interval'"))?)?;
    let points = obj
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("condition without 'points' list"))?
        .iter()
        .map(|p| parse_point_power(&scalar_text(p)?))
        .collect::<Result<Vec<(ProjPoint, usize)>>>()?;
    Ok(SecantCondition {
        interval,
        points: PointMultiset::new(points)?,
    })
}

impl InstanceSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
        let obj = v.as_object().ok_or_else(|| bad("instance must be a JSON object"))?;
        let k = usize_field(obj, "k")?;
        let n = usize_field(obj, "n")?;
        match (obj.get("roots"), obj.get("conditions")) {
            (Some(_), Some(_)) => Err(bad("give either 'roots' or 'conditions', not both")),
            (Some(roots), None) => {
                let roots = roots
                    .as_array()
                    .ok_or_else(|| bad("'roots' must be a list"))?
                    .iter()
                    .map(|r| parse_rational(&scalar_text(r)?))
                    .collect::<Result<Vec<_>>>()?;
                let (k, n) = match (k, n) {
                    (Some(k), Some(n)) => (k, n),
                    (Some(k), None) if k > 0 && roots.len() % k == 0 => (k, k + roots.len() / k),
                    _ => return Err(bad("a roots instance needs 'k' and 'n'")),
                };
                Ok(InstanceSpec::Positivity { k, n, roots })
            }
            (None, Some(conds)) => {
                let conditions = conds
                    .as_array()
                    .ok_or_else(|| bad("'conditions' must be a list"))?
                    .iter()
                    .map(parse_condition)
                    .collect::<Result<Vec<_>>>()?;
                let first = conditions.first().ok_or_else(|| bad("no conditions"))?;
                let k = k.unwrap_or_else(|| first.points.size());
                let n = match n {
                    Some(n) => n,
                    None if k > 0 && conditions.len() % k == 0 => k + conditions.len() / k,
                    None => return Err(bad("cannot infer 'n' from the conditions")),
                };
                let mode = match obj.get("mode") {
                    None | Some(Value::Null) => Mode::Positive,
                    Some(Value::String(s)) => s.parse()?,
                    Some(other) => return Err(bad(format!("bad mode {other}"))),
                };
                Ok(InstanceSpec::Secant { k, n, conditions, mode })
            }
            (None, None) => Err(bad("instance needs 'roots' or 'conditions'")),
        }
    }

    pub fn kind(&self) -> InstanceKind {
        match self {
            InstanceSpec::Positivity { .. } => InstanceKind::Positivity,
            InstanceSpec::Secant { .. } => InstanceKind::Secant,
        }
    }

    pub fn run(&self, opts: &SolverOptions) -> Result<InstanceReport> {
        match self {
            InstanceSpec::Positivity { k, n, roots } => check_positivity_instance(*k, *n, roots, opts),
            InstanceSpec::Secant { k, n, conditions, mode } => check_secant_instance(*k, *n, conditions, *mode, opts),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{frac, int};

    #[test]
    fn parse_both_forms() {
        let p = InstanceSpec::parse(r#"{"k":2, "n":4, "roots": ["-1","-2","-3","-4"]}"#).unwrap();
        assert_eq!(
            p,
            InstanceSpec::Positivity {
                k: 2,
                n: 4,
                roots: vec![int(-1), int(-2), int(-3), int(-4)]
            }
        );
        let s = InstanceSpec::parse(
            r#"{"conditions": [{"interval": ["1","2"], "points": ["3/2^1", "5/3^1"]},
                {"interval": "(3,4)", "points": ["7/2^2"]},
                {"interval": ["5","6"], "points": ["5", "6"]},
                {"interval": ["7","8"], "points": ["15/2^2"]}]}"#,
        )
        .unwrap();
        let InstanceSpec::Secant { k, n, conditions, mode } = s else { panic!() };
        assert_eq!((k, n, mode), (2, 4, Mode::Positive));
        assert_eq!(conditions[0].points.size(), 2);
        assert!(conditions[0].interval.contains(&frac(3, 2)));
        assert!(conditions[0].interval.contains(&int(1)));
        assert!(!conditions[1].interval.contains(&int(3)));
        assert!(InstanceSpec::parse("{}").is_err());
        assert!(InstanceSpec::parse(r#"{"roots": ["-1"]}"#).is_err());
        assert!(InstanceSpec::parse("not json").is_err());
    }
}
