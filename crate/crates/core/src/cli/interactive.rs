use std::collections::BTreeSet;
use std::io::{self, BufRead, Write};

use crate::rules::{descriptors, RuleId};

/// Asks about every rule in reporting order. Empty answers keep the rule;
/// `n`/`no` drops it.
pub fn select_rules<R: BufRead, W: Write>(mut input: R, mut output: W) -> io::Result<BTreeSet<RuleId>> {
    let mut enabled = BTreeSet::new();
    for d in descriptors() {
        loop {
            write!(output, "Enable {} ({})? [Y/n] ", d.id, d.title)?;
            output.flush()?;
            let mut answer = String::new();
            if input.read_line(&mut answer)? == 0 {
                return Err(io::Error::new(io::ErrorKind::UnexpectedEof, "input closed"));
            }
            match answer.trim().to_ascii_lowercase().as_str() {
                "" | "y" | "yes" => {
                    enabled.insert(d.id);
                    break;
                }
                "n" | "no" => break,
                _ => writeln!(output, "Please answer y or n.")?,
            }
        }
    }
    Ok(enabled)
}
