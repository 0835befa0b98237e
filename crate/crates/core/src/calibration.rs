//! Chooses the signature orientation.
//!
//! An orientation is accepted when, under it, the good-node Mullineux
//! recursion agrees with the symbol oracle and with conjugation for `p > n`,
//! and reproduces the one- and two-row closed forms.

use serde::{Deserialize, Serialize};

use crate::branching::Orientation;
use crate::closed_form::TwoRowRange;
use crate::error::Result;
use crate::verify::{run_check, CheckId, LemmaCheck, RunOptions};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationOutcome {
    pub orientation: Orientation,
    pub oracle_failures: usize,
    pub closed_form_failures: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalibrationReport {
    pub n_max: usize,
    pub two_row_range: TwoRowRange,
    pub outcomes: Vec<OrientationOutcome>,
    /// The unique passing orientation, if exactly one passed.
    pub selected: Option<Orientation>,
}

fn failures(id: CheckId, n_max: usize, opts: &RunOptions) -> Result<usize> {
    let check = LemmaCheck {
        n_max,
        ..id.default_check()
    };
    let report = run_check(
        &check,
        &RunOptions {
            cap: usize::MAX,
            ..*opts
        },
    )?;
    Ok(report.counterexamples.len() + report.truncated)
}

pub fn calibrate(n_max: usize, two_row_range: TwoRowRange) -> Result<CalibrationReport> {
    let mut outcomes = Vec::new();
    for orientation in Orientation::ALL {
        let opts = RunOptions {
            orientation,
            two_row_range,
            ..RunOptions::default()
        };
        let oracle_failures = failures(CheckId::MULLX, n_max, &opts)?;
        let closed_form_failures = failures(CheckId::CLOSED, n_max, &opts)?;
        outcomes.push(OrientationOutcome {
            orientation,
            oracle_failures,
            closed_form_failures,
            passed: oracle_failures == 0 && closed_form_failures == 0,
        });
    }
    let passing: Vec<_> = outcomes.iter().filter(|o| o.passed).collect();
    let selected = match passing.as_slice() {
        [only] => Some(only.orientation),
        _ => None,
    };
    Ok(CalibrationReport {
        n_max,
        two_row_range,
        outcomes,
        selected,
    })
}
