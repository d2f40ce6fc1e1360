//! Parser for the embedded static tables (`tables.dat`).
//!
//! Format is line-oriented: `TYPE rank : field = integers`, `#` comments.

use std::collections::HashMap;

const RAW: &str = include_str!("tables.dat");

#[derive(Debug, Clone)]
pub(crate) struct Tables {
    entries: HashMap<(char, usize, String), Vec<i64>>,
}

impl Tables {
    fn parse() -> Tables {
        let mut entries = HashMap::new();
        for (lineno, line) in RAW.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (head, values) = line
                .split_once('=')
                .unwrap_or_else(|| panic!("tables.dat line {}: missing '='", lineno + 1));
            let (typ, field) = head
                .split_once(':')
                .unwrap_or_else(|| panic!("tables.dat line {}: missing ':'", lineno + 1));
            let mut it = typ.split_whitespace();
            let family = it.next().and_then(|s| s.chars().next()).unwrap();
            let rank: usize = it.next().unwrap().parse().unwrap();
            let field = field.trim().to_string();
            let values: Vec<i64> = values
                .split_whitespace()
                .map(|v| v.parse().expect("integer in tables.dat"))
                .collect();
            entries.insert((family, rank, field), values);
        }
        Tables { entries }
    }

    pub(crate) fn get(&self, family: char, rank: usize, field: &str) -> Option<&[i64]> {
        self.entries
            .get(&(family, rank, field.to_string()))
            .map(|v| v.as_slice())
    }
}

pub(crate) fn tables() -> &'static Tables {
    use std::sync::OnceLock;
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(Tables::parse)
}
