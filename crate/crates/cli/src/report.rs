use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    /// A verification command computed something other than the expected value.
    Mismatch,
    Error,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Mismatch => 1,
            Status::Error => 2,
        }
    }
}

/// The summary every command emits.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Value,
    pub elapsed_ms: u64,
    pub status: Status,
}

/// What a command hands back before timing is attached.
#[derive(Debug)]
pub struct Output {
    pub status: Status,
    pub results: Value,
    /// Human-readable lines for plain mode.
    pub plain: Vec<String>,
    /// Per-check objects, each printed on its own line in JSON mode.
    pub checks: Vec<Value>,
}

impl Output {
    pub fn ok(results: Value, plain: Vec<String>) -> Self {
        Output { status: Status::Ok, results, plain, checks: Vec::new() }
    }
}
