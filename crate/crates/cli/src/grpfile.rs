//! Group files: a `degree k` line, then one permutation per line in cycle
//! notation. Lines starting with `#` and blank lines are ignored.

use std::fs;
use std::path::Path;

use indgen::perm::parse_permutation;
use indgen::{Budget, PermGroup, Permutation};

use crate::CliError;

pub fn parse_group_text(text: &str, path: &Path) -> Result<(usize, Vec<Permutation>), CliError> {
    let err = |line: usize, message: String| CliError::Format {
        path: path.to_path_buf(),
        line,
        message,
    };
    let mut degree = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match degree {
            None => {
                let value = line
                    .strip_prefix("degree")
                    .filter(|rest| rest.starts_with(char::is_whitespace))
                    .ok_or_else(|| err(i + 1, "expected `degree k`".into()))?;
                let k: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| err(i + 1, format!("bad degree {:?}", value.trim())))?;
                if k == 0 {
                    return Err(err(i + 1, "degree must be positive".into()));
                }
                degree = Some(k);
            }
            Some(k) => gens.push(parse_permutation(line, k).map_err(|e| err(i + 1, e.to_string()))?),
        }
    }
    let degree = degree.ok_or_else(|| err(1, "missing `degree k` line".into()))?;
    Ok((degree, gens))
}

pub fn read_group(path: &Path, budget: &Budget) -> Result<PermGroup, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let (degree, gens) = parse_group_text(&text, path)?;
    Ok(PermGroup::closure(degree, gens, budget)?)
}

pub fn write_group_text(label: &str, group: &PermGroup) -> String {
    let mut out = format!("# {label}\ndegree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&format!("{g}\n"));
    }
    out
}
