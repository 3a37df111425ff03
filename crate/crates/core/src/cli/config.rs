//! The run configuration file.
//!
//! One `key = value` setting per line; `#` starts a comment.
//!
//! ```text
//! type = B2                 # named datum, or give the pairing row by row:
//! row = 4 -2
//! row = -2 2
//! varsigma.1 = q^-1         # 1-based index, any nonzero rational function
//! serre_mode = on           # on | off
//! degree_cap = 12
//! cases = all               # all | comma-separated catalog ids
//! case = thm44 i=1 j=2 n=2  # one explicit instance (repeatable)
//! output = report.jsonl     # default: standard output
//! ```
//!
//! Rational functions use the grammar of the printer: integers, `q`, `+ - * /`,
//! juxtaposition, `^` with an integer exponent (`q^-1`, `q^(-2)`) and parentheses.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::cartan::{CartanDatum, IParams, SerreMode};
use crate::error::{Error, Result};
use crate::pbw::DEFAULT_DEGREE_CAP;
use crate::qfield::parse_ratfunc;

use super::catalog::CATALOG_IDS;

/// One requested case: a catalog id with optional `key=value` arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRequest {
    pub id: String,
    pub args: BTreeMap<String, String>,
}

impl CaseRequest {
    pub fn all_of(id: &str) -> Self {
        Self {
            id: id.to_string(),
            args: BTreeMap::new(),
        }
    }

    /// Parses `id key=value ...`.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let mut parts = text.split_whitespace();
        let id = parts.next().ok_or("empty case")?.to_ascii_lowercase();
        if !CATALOG_IDS.contains(&id.as_str()) {
            return Err(format!("unknown case id {id:?}"));
        }
        let mut args = BTreeMap::new();
        for p in parts {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got {p:?}"))?;
            if args.insert(k.to_string(), v.to_string()).is_some() {
                return Err(format!("argument {k:?} given twice"));
            }
        }
        Ok(Self { id, args })
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub datum: CartanDatum,
    pub params: IParams,
    pub degree_cap: usize,
    pub cases: Vec<CaseRequest>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    /// Named datum with default parameters and the full catalog.
    pub fn for_type(name: &str) -> Result<Self> {
        let datum = CartanDatum::of_type(name)?;
        Ok(Self {
            params: IParams::default_for(&datum),
            datum,
            degree_cap: DEFAULT_DEGREE_CAP,
            cases: CATALOG_IDS.iter().map(|id| CaseRequest::all_of(id)).collect(),
            output: None,
        })
    }

    /// Replaces the case list by whole catalog entries (`all` or ids).
    pub fn select_cases(&mut self, list: &str) -> Result<()> {
        self.cases = parse_case_list(list).map_err(Error::Parse)?;
        Ok(())
    }
}

fn parse_case_list(list: &str) -> std::result::Result<Vec<CaseRequest>, String> {
    let list = list.trim();
    if list.eq_ignore_ascii_case("all") {
        return Ok(CATALOG_IDS.iter().map(|id| CaseRequest::all_of(id)).collect());
    }
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(CaseRequest::parse)
        .collect()
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut type_name: Option<(usize, String)> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut first_row_line = 0;
    let mut varsigma: Vec<(usize, usize, String)> = Vec::new();
    let mut mode = SerreMode::On;
    let mut cap = DEFAULT_DEGREE_CAP;
    let mut cases: Vec<CaseRequest> = Vec::new();
    let mut output = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Config { line, msg };
        let content = raw.split('#').next().unwrap().trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, got {content:?}")))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "type" => type_name = Some((line, value.to_string())),
            "row" => {
                if rows.is_empty() {
                    first_row_line = line;
                }
                let row = value
                    .split_whitespace()
                    .map(|x| x.parse::<i64>().map_err(|_| err(format!("bad matrix entry {x:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                rows.push(row);
            }
            "serre_mode" => {
                mode = match value.to_ascii_lowercase().as_str() {
                    "on" => SerreMode::On,
                    "off" => SerreMode::Off,
                    _ => return Err(err(format!("serre_mode must be on or off, got {value:?}"))),
                }
            }
            "degree_cap" => {
                cap = value
                    .parse()
                    .ok()
                    .filter(|&c: &usize| c > 0)
                    .ok_or_else(|| err(format!("degree_cap must be a positive integer, got {value:?}")))?
            }
            "cases" => cases.extend(parse_case_list(value).map_err(err)?),
            "case" => cases.push(CaseRequest::parse(value).map_err(err)?),
            "output" => output = Some(PathBuf::from(value)),
            k if k.starts_with("varsigma.") => {
                let i: usize = k["varsigma.".len()..]
                    .parse()
                    .ok()
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| err(format!("bad parameter index in {k:?}")))?;
                varsigma.push((line, i - 1, value.to_string()));
            }
            _ => return Err(err(format!("unknown key {key:?}"))),
        }
    }

    let datum = match (type_name, rows.is_empty()) {
        (Some((line, _)), false) => {
            return Err(Error::Config {
                line,
                msg: "give either `type` or `row` lines, not both".into(),
            })
        }
        (Some((line, name)), true) => CartanDatum::of_type(&name).map_err(|e| Error::Config {
            line,
            msg: e.to_string(),
        })?,
        (None, false) => CartanDatum::new(rows).map_err(|e| Error::Config {
            line: first_row_line,
            msg: e.to_string(),
        })?,
        (None, true) => {
            return Err(Error::Config {
                line: 0,
                msg: "no Cartan datum: add `type = ...` or `row = ...` lines".into(),
            })
        }
    };

    let mut params = IParams::default_for(&datum).with_serre_mode(mode);
    for (line, i, text) in varsigma {
        let err = |msg: String| Error::Config { line, msg };
        let v = parse_ratfunc(&text).map_err(|e| err(e.to_string()))?;
        params.set_varsigma(i, v).map_err(|e| err(e.to_string()))?;
    }
    if cases.is_empty() {
        cases = CATALOG_IDS.iter().map(|id| CaseRequest::all_of(id)).collect();
    }
    Ok(RunConfig {
        datum,
        params,
        degree_cap: cap,
        cases,
        output,
    })
}
