use crate::error::{Error, Result};

/// Digit budget for iterative operations.
///
/// Iterations run at `work_digits` fractional digits; results are reported at
/// `output_digits`. The gap must leave at least `guard_digits` (minimum 5) of slack.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    work_digits: u32,
    output_digits: u32,
    guard_digits: u32,
}

impl PrecisionContext {
    pub const MIN_GUARD_DIGITS: u32 = 5;
    pub const DEFAULT_OUTPUT_DIGITS: u32 = 20;
    pub const DEFAULT_GUARD_DIGITS: u32 = 10;

    /// Context with `work = output + guard`.
    pub fn new(output_digits: u32, guard_digits: u32) -> Result<Self> {
        Self::with_work(output_digits, guard_digits, output_digits + guard_digits)
    }

    pub fn with_work(output_digits: u32, guard_digits: u32, work_digits: u32) -> Result<Self> {
        if guard_digits < Self::MIN_GUARD_DIGITS {
            return Err(Error::Precision(format!(
                "guard digits must be at least {}, got {guard_digits}",
                Self::MIN_GUARD_DIGITS
            )));
        }
        if work_digits < output_digits + guard_digits {
            return Err(Error::Precision(format!(
                "work digits {work_digits} < output {output_digits} + guard {guard_digits}"
            )));
        }
        Ok(Self {
            work_digits,
            output_digits,
            guard_digits,
        })
    }

    /// Default guard digits around the requested output precision.
    pub fn with_output(output_digits: u32) -> Self {
        Self::new(output_digits, Self::DEFAULT_GUARD_DIGITS).expect("default guard is valid")
    }

    pub fn work_digits(&self) -> u32 {
        self.work_digits
    }

    pub fn output_digits(&self) -> u32 {
        self.output_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::with_output(Self::DEFAULT_OUTPUT_DIGITS)
    }
}
