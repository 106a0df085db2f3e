//! Typed cell values shared by the semantic model and the table engine.
//!
//! Four value types exist: text, integer, datetime and boolean. Datetimes are
//! kept as a plain six-field calendar tuple rather than an epoch offset so that
//! legacy zero dates (`0000-00-00 00:00:00`), which appear in real catalog
//! exports, survive loading and compare predictably (field-wise ordering).

use alloc::string::{String, ToString};
use core::fmt;

/// Column type as declared in a schema map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueType {
    Text,
    Integer,
    DateTime,
    Boolean,
}

impl ValueType {
    pub fn name(self) -> &'static str {
        match self {
            ValueType::Text => "text",
            ValueType::Integer => "integer",
            ValueType::DateTime => "datetime",
            ValueType::Boolean => "boolean",
        }
    }
}

impl fmt::Display for ValueType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Calendar timestamp with no timezone. Ordering is field-wise, which matches
/// chronological order for valid dates and keeps zero dates at the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DateTime {
    pub year: u16,
    pub month: u8,
    pub day: u8,
    pub hour: u8,
    pub minute: u8,
    pub second: u8,
}

impl DateTime {
    pub fn new(year: u16, month: u8, day: u8, hour: u8, minute: u8, second: u8) -> Option<Self> {
        let dt = DateTime { year, month, day, hour, minute, second };
        if year <= 9999 && month <= 12 && day <= 31 && hour <= 23 && minute <= 59 && second <= 59 {
            Some(dt)
        } else {
            None
        }
    }

    /// Parses the accepted datetime spellings:
    ///
    /// * `YYYY-MM-DD HH:MM:SS`
    /// * `YYYY-MM-DD`
    /// * `DD-MM-YYYY` / `DD-MM-YY` (day-first; two-digit years mean 2000-2099)
    /// * `YYYY` (bare year, start of year)
    pub fn parse(raw: &str) -> Option<Self> {
        let raw = raw.trim();
        let (date_part, time_part) = match raw.split_once(' ') {
            Some((d, t)) => (d, Some(t.trim())),
            None => (raw, None),
        };
        let (hour, minute, second) = match time_part {
            Some(t) => {
                let mut it = t.split(':');
                let h = parse_num(it.next()?, 1, 2)?;
                let m = parse_num(it.next()?, 1, 2)?;
                let s = parse_num(it.next()?, 1, 2)?;
                if it.next().is_some() {
                    return None;
                }
                (h as u8, m as u8, s as u8)
            }
            None => (0, 0, 0),
        };

        let fields: alloc::vec::Vec<&str> = date_part.split('-').collect();
        let (year, month, day) = match fields.as_slice() {
            [y] => (parse_num(y, 4, 4)?, 1, 1),
            [a, m, b] => {
                if a.len() == 4 {
                    // ISO year-first
                    (parse_num(a, 4, 4)?, parse_num(m, 1, 2)?, parse_num(b, 1, 2)?)
                } else {
                    // day-first with two- or four-digit year
                    let year = match b.len() {
                        2 => 2000 + parse_num(b, 2, 2)?,
                        4 => parse_num(b, 4, 4)?,
                        _ => return None,
                    };
                    (year, parse_num(m, 1, 2)?, parse_num(a, 1, 2)?)
                }
            }
            _ => return None,
        };
        DateTime::new(year as u16, month as u8, day as u8, hour, minute, second)
    }
}

fn parse_num(s: &str, min_len: usize, max_len: usize) -> Option<u32> {
    if s.len() < min_len || s.len() > max_len || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for DateTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:04}-{:02}-{:02} {:02}:{:02}:{:02}",
            self.year, self.month, self.day, self.hour, self.minute, self.second
        )
    }
}

/// A single typed value. Null is modeled as the absence of a value
/// (`Option<Value>` at the cell level), not as a variant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Text(String),
    Integer(i64),
    DateTime(DateTime),
    Boolean(bool),
}

impl Value {
    pub fn value_type(&self) -> ValueType {
        match self {
            Value::Text(_) => ValueType::Text,
            Value::Integer(_) => ValueType::Integer,
            Value::DateTime(_) => ValueType::DateTime,
            Value::Boolean(_) => ValueType::Boolean,
        }
    }

    /// Parses `raw` as a value of the requested type. Used both for condition
    /// values and for data cells; returns None when the text does not conform.
    pub fn parse_as(raw: &str, ty: ValueType) -> Option<Value> {
        match ty {
            ValueType::Text => Some(Value::Text(raw.to_string())),
            ValueType::Integer => raw.trim().parse::<i64>().ok().map(Value::Integer),
            ValueType::DateTime => DateTime::parse(raw).map(Value::DateTime),
            ValueType::Boolean => match raw.trim().to_lowercase().as_str() {
                "1" | "true" => Some(Value::Boolean(true)),
                "0" | "false" => Some(Value::Boolean(false)),
                _ => None,
            },
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Text(s) => f.write_str(s),
            Value::Integer(n) => write!(f, "{n}"),
            Value::DateTime(dt) => dt.fmt(f),
            Value::Boolean(true) => f.write_str("1"),
            Value::Boolean(false) => f.write_str("0"),
        }
    }
}

/// A table cell; `None` is SQL-style null and matches no predicate.
pub type Cell = Option<Value>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_full_timestamp() {
        let dt = DateTime::parse("2009-10-14 13:05:52").unwrap();
        assert_eq!(dt.to_string(), "2009-10-14 13:05:52");
    }

    #[test]
    fn parses_zero_date() {
        let dt = DateTime::parse("0000-00-00 00:00:00").unwrap();
        assert_eq!(dt.to_string(), "0000-00-00 00:00:00");
    }

    #[test]
    fn parses_day_first_two_digit_year() {
        assert_eq!(DateTime::parse("01-09-08").unwrap().to_string(), "2008-09-01 00:00:00");
        assert_eq!(DateTime::parse("01-09-09").unwrap().to_string(), "2009-09-01 00:00:00");
        assert_eq!(DateTime::parse("14-10-2009").unwrap().to_string(), "2009-10-14 00:00:00");
    }

    #[test]
    fn parses_bare_year() {
        assert_eq!(DateTime::parse("2000").unwrap().to_string(), "2000-01-01 00:00:00");
    }

    #[test]
    fn rejects_garbage() {
        assert!(DateTime::parse("13:05:52").is_none());
        assert!(DateTime::parse("2009-13-01").is_none());
        assert!(DateTime::parse("n/a").is_none());
        assert!(DateTime::parse("01-09-008").is_none());
    }

    #[test]
    fn ordering_is_chronological() {
        let a = DateTime::parse("2008-09-01").unwrap();
        let b = DateTime::parse("2009-09-01").unwrap();
        let zero = DateTime::parse("0000-00-00 00:00:00").unwrap();
        assert!(a < b);
        assert!(zero < a);
    }

    #[test]
    fn value_parsing_respects_type() {
        assert_eq!(Value::parse_as("123", ValueType::Integer), Some(Value::Integer(123)));
        assert_eq!(Value::parse_as("-5", ValueType::Integer), Some(Value::Integer(-5)));
        assert_eq!(Value::parse_as("abc", ValueType::Integer), None);
        assert_eq!(Value::parse_as("TRUE", ValueType::Boolean), Some(Value::Boolean(true)));
        assert_eq!(Value::parse_as("0", ValueType::Boolean), Some(Value::Boolean(false)));
        assert_eq!(Value::parse_as("doc", ValueType::Text), Some(Value::Text("doc".into())));
    }
}
