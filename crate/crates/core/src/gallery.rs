//! Named examples rebuilt from the constructors and analysed with fixed defaults.

use crate::action::{global_group_action, munn_action};
use crate::analysis::{analyze_action, analyze_groupoid, analyze_snake, AnalyzeOptions, Report};
use crate::bruteforce::DEFAULT_CAP_BITS;
use crate::error::{Error, Result};
use crate::isg::build::{cyclic_group, min_semilattice};
use crate::scalar::Carrier;
use crate::steinberg::build::{cyclic_groupoid, pair_groupoid, unit_groupoid};

pub const NAMES: [&str; 7] =
    ["snake", "pair-groupoid", "z2-translation", "munn-semilattice", "z4-coefficients", "unit-groupoid", "z2-groupoid"];

pub const DEFAULT_WINDOW: usize = 4;

/// Default carrier of each entry.
pub fn default_carrier(name: &str) -> Result<Carrier> {
    Ok(match name {
        "snake" | "pair-groupoid" | "munn-semilattice" | "unit-groupoid" => Carrier::Gf(2),
        "z2-translation" | "z2-groupoid" => Carrier::Gf(3),
        "z4-coefficients" => Carrier::Zmod(4),
        _ => return Err(unknown(name)),
    })
}

fn unknown(name: &str) -> Error {
    Error::Parse(format!("unknown gallery entry `{name}`; available: {}", NAMES.join(", ")))
}

/// `carrier` and `window` override the defaults; `window` only applies to the snake.
pub fn gallery(name: &str, carrier: Option<Carrier>, window: Option<usize>, cap_bits: Option<u32>) -> Result<Report> {
    let opts = AnalyzeOptions {
        carrier: match carrier {
            Some(c) => c,
            None => default_carrier(name)?,
        },
        cap_bits: cap_bits.unwrap_or(DEFAULT_CAP_BITS),
        require_bruteforce: false,
    };
    Ok(match name {
        "snake" => Report::Action(analyze_snake(window.unwrap_or(DEFAULT_WINDOW), opts)?),
        "z2-translation" => {
            let a = global_group_action(&cyclic_group(2), 2, |g, x| (x + g) % 2)?;
            Report::Action(analyze_action(a, opts)?)
        }
        "munn-semilattice" => Report::Action(analyze_action(munn_action(&min_semilattice(3))?, opts)?),
        "pair-groupoid" | "z4-coefficients" => Report::Groupoid(analyze_groupoid(pair_groupoid(2), opts)?),
        "unit-groupoid" => Report::Groupoid(analyze_groupoid(unit_groupoid(2), opts)?),
        "z2-groupoid" => Report::Groupoid(analyze_groupoid(cyclic_groupoid(2), opts)?),
        _ => return Err(unknown(name)),
    })
}
