use std::collections::BTreeMap;

use serde::Serialize;

use super::{
    build_diagram, invariants_two_ways, primitive_pair, verify_compare, verify_complex, verify_coprime, verify_main,
    verify_ranks, FermatCase, FermatError, Tower,
};
use crate::int::Int;
use crate::statement::Statement;

/// Statement keys, in report order.
pub const SUITE_KEYS: [&str; 7] = [
    "cor-1.2",
    "lemma-4.1",
    "cor-4.2",
    "remark-4.3",
    "thm-3.1",
    "cor-3.2",
    "cor-1.4",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suite {
    enabled: Vec<&'static str>,
}

impl Suite {
    pub fn all() -> Self {
        Suite {
            enabled: SUITE_KEYS.to_vec(),
        }
    }

    /// `all` or a single statement key.
    pub fn parse(s: &str) -> Option<Self> {
        if s == "all" {
            return Some(Self::all());
        }
        SUITE_KEYS
            .iter()
            .find(|k| **k == s)
            .map(|k| Suite { enabled: vec![*k] })
    }

    pub fn contains(&self, key: &str) -> bool {
        self.enabled.contains(&key)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub n: usize,
    pub d: usize,
    pub ambient: usize,
    pub rank: Int,
    pub rank_below: Int,
    pub statements: BTreeMap<&'static str, Statement>,
    pub passed: bool,
}

impl CaseReport {
    pub fn failed_statements(&self) -> Vec<&'static str> {
        self.statements
            .iter()
            .filter(|(_, s)| s.pass == Some(false))
            .map(|(k, _)| *k)
            .collect()
    }
}

pub fn verify_case(case: FermatCase, suite: &Suite) -> Result<CaseReport, FermatError> {
    let tower = Tower::new(case.d, case.n)?;
    let mut statements = BTreeMap::new();

    let needs_pair = ["cor-1.2", "cor-4.2"].iter().any(|k| suite.contains(k));
    let pair = needs_pair.then(|| primitive_pair(case, &tower)).transpose()?;
    if let Some(pair) = &pair {
        if suite.contains("cor-1.2") {
            let r = verify_ranks(case, pair);
            statements.insert("cor-1.2", Statement::new(r.passed, &r));
        }
        if suite.contains("cor-4.2") {
            let r = verify_compare(case, pair)?;
            statements.insert("cor-4.2", Statement::new(r.passed, &r));
        }
    }
    if suite.contains("lemma-4.1") {
        let r = invariants_two_ways(case, &tower)?;
        statements.insert("lemma-4.1", Statement::new(r.passed, &r));
    }
    if suite.contains("remark-4.3") {
        let r = verify_coprime(case, &tower);
        statements.insert("remark-4.3", Statement::new(r.passed, &r));
    }
    if suite.contains("thm-3.1") || suite.contains("cor-3.2") {
        let diagram = build_diagram(case, &tower)?;
        let r = verify_main(&diagram)?;
        if suite.contains("thm-3.1") {
            statements.insert("thm-3.1", Statement::new(r.passed, &r));
        }
        if suite.contains("cor-3.2") {
            let st = match &r.prime_dims {
                Some(dims) => Statement::new(dims.passed, dims),
                None => Statement::not_applicable("degree is not prime"),
            };
            statements.insert("cor-3.2", st);
        }
    }
    if suite.contains("cor-1.4") {
        let r = verify_complex(case, &tower)?;
        statements.insert("cor-1.4", Statement::new(r.passed, &r));
    }

    let passed = statements.values().all(|s| s.pass != Some(false));
    Ok(CaseReport {
        n: case.n,
        d: case.d,
        ambient: case.ambient(),
        rank: case.p(case.n as isize),
        rank_below: case.p(case.n as isize - 1),
        statements,
        passed,
    })
}
