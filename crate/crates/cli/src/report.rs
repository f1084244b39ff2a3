use std::fmt::Write as _;
use std::hash::Hasher;
use std::time::Duration;

use fnv::FnvHasher;

/// 64-bit FNV-1a hash of a colouring's rcm text.
pub fn digest(text: &str) -> u64 {
    let mut h = FnvHasher::default();
    h.write(text.as_bytes());
    h.finish()
}

/// One key=value line summarising a command run.
#[derive(Clone, Debug, Default)]
pub struct RunReport {
    pub command: &'static str,
    pub parameters: Vec<(&'static str, String)>,
    pub digest: Option<u64>,
    pub outcome: String,
    pub augmentations: Option<usize>,
    pub wall: Duration,
    pub seed: Option<u64>,
}

impl RunReport {
    pub fn new(command: &'static str) -> Self {
        Self { command, ..Self::default() }
    }

    pub fn param(mut self, key: &'static str, value: impl ToString) -> Self {
        self.parameters.push((key, value.to_string()));
        self
    }

    /// The line without the wall time, identical across repeated runs.
    pub fn stable_line(&self) -> String {
        let mut line = format!("command={}", self.command);
        for (k, v) in &self.parameters {
            let _ = write!(line, " {k}={v}");
        }
        if let Some(d) = self.digest {
            let _ = write!(line, " digest={d:016x}");
        }
        let _ = write!(line, " outcome={}", self.outcome);
        if let Some(a) = self.augmentations {
            let _ = write!(line, " augmentations={a}");
        }
        match self.seed {
            Some(s) => {
                let _ = write!(line, " seed={s}");
            }
            None => line.push_str(" seed=none"),
        }
        line
    }

    pub fn line(&self) -> String {
        format!("{} wall_ms={:.3}", self.stable_line(), self.wall.as_secs_f64() * 1e3)
    }
}
