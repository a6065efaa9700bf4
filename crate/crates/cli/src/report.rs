use std::io::Write;
use std::time::Duration;

use minorkit::Error;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

pub enum Failure {
    /// Unreadable or malformed input, or an argument outside the command's domain.
    Input(String),
    /// No available method applies to this input.
    Inapplicable(String),
    Capacity(String),
    /// A certificate failed its own re-check.
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Inapplicable(_) => 3,
            Failure::Capacity(_) => 4,
            Failure::Internal(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            Failure::Input(_) => "input",
            Failure::Inapplicable(_) => "inapplicable",
            Failure::Capacity(_) => "capacity",
            Failure::Internal(_) => "internal",
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Inapplicable(m) | Failure::Capacity(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse { .. } | Error::Format(_) | Error::Domain(_) | Error::InvalidStructure(_) => {
                Failure::Input(msg)
            }
            Error::Capacity { .. } => Failure::Capacity(msg),
            Error::NotCograph(_)
            | Error::NotBipartitePermutation
            | Error::NotAtFree(_)
            | Error::Disconnected
            | Error::Unsupported(_)
            | Error::Precondition(_) => Failure::Inapplicable(msg),
        }
    }
}

pub struct Report {
    pub command: &'static str,
    pub digest: Option<String>,
    pub solver: Option<&'static str>,
    pub result: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let doc = json!({
            "schema": SCHEMA,
            "command": self.command,
            "input_sha256": self.digest,
            "solver": self.solver,
            "result": self.result,
        });
        serde_json::to_string_pretty(&doc).expect("plain JSON values serialize")
    }

    pub fn to_human(&self, elapsed: Duration) -> String {
        let mut out = format!("command: {}\n", self.command);
        if let Some(s) = self.solver {
            out.push_str(&format!("solver: {s}\n"));
        }
        if let Value::Object(map) = &self.result {
            for (k, v) in map {
                match v {
                    Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                    other => out.push_str(&format!("{k}: {other}\n")),
                }
            }
        } else {
            out.push_str(&format!("result: {}\n", self.result));
        }
        out.push_str(&format!("elapsed: {:.3} ms\n", elapsed.as_secs_f64() * 1e3));
        out
    }

    pub fn print(&self, json: bool, elapsed: Duration) {
        if json {
            out(&format!("{}\n", self.to_json()));
        } else {
            out(&self.to_human(elapsed));
        }
    }
}

pub fn print_failure(command: &str, f: &Failure, json: bool) {
    if json {
        let doc = json!({
            "schema": SCHEMA,
            "command": command,
            "error": {"kind": f.kind(), "message": f.message()},
            "exit_code": f.code(),
        });
        out(&format!(
            "{}\n",
            serde_json::to_string_pretty(&doc).expect("plain JSON values serialize")
        ));
    }
    eprintln!("error: {}", f.message());
}

/// Writes to stdout, ignoring a closed pipe.
pub fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush());
}
