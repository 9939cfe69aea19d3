use serde::Serialize;

/// Outcome of one checked statement, with the computed data behind it.
#[derive(Clone, Debug, Serialize)]
pub struct Statement {
    /// `None` when the statement does not apply.
    pub pass: Option<bool>,
    pub detail: serde_json::Value,
}

impl Statement {
    pub fn new<T: Serialize>(pass: bool, detail: &T) -> Self {
        Statement {
            pass: Some(pass),
            detail: serde_json::to_value(detail).expect("report serializes"),
        }
    }

    pub fn not_applicable(reason: &str) -> Self {
        Statement {
            pass: None,
            detail: serde_json::json!({ "reason": reason }),
        }
    }

    pub fn failed(&self) -> bool {
        self.pass == Some(false)
    }
}
