//! Suite reports: one line per check, overall pass iff all checks pass.

use serde::Serialize;

#[derive(Serialize)]
pub struct CheckResult {
    pub id: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckResult>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        SuiteReport {
            suite: suite.into(),
            checks,
            pass,
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!(
                "[{}] {}: expected {}, computed {}\n",
                if c.pass { "pass" } else { "FAIL" },
                c.id,
                c.expected,
                c.computed
            ));
        }
        out.push_str(&format!(
            "suite {}: {}\n",
            self.suite,
            if self.pass { "pass" } else { "FAIL" }
        ));
        out
    }
}

/// Collects check results with uniform formatting.
pub struct Checker {
    checks: Vec<CheckResult>,
}

impl Checker {
    pub fn new() -> Self {
        Checker { checks: Vec::new() }
    }

    pub fn eq<T: PartialEq + std::fmt::Display>(&mut self, id: &str, expected: T, computed: T) {
        let pass = expected == computed;
        self.checks.push(CheckResult {
            id: id.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            pass,
        });
    }

    pub fn ok(&mut self, id: &str, condition: bool, detail: &str) {
        self.checks.push(CheckResult {
            id: id.to_string(),
            expected: "true".to_string(),
            computed: format!("{} ({})", condition, detail),
            pass: condition,
        });
    }

    pub fn error(&mut self, id: &str, message: String) {
        self.checks.push(CheckResult {
            id: id.to_string(),
            expected: "no error".to_string(),
            computed: message,
            pass: false,
        });
    }

    pub fn finish(self, suite: &str) -> SuiteReport {
        SuiteReport::new(suite, self.checks)
    }
}
