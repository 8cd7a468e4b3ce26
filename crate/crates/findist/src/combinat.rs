//! Label encodings and small combinatorial enumerators shared by the
//! family constructions.
//!
//! All index sets in this crate are finite lists of string labels in
//! declaration order. Tagged unions and choice functions are encoded as
//! labels again, so that nested constructions stay representable by the
//! same object types.

use crate::error::{Error, Result};

/// Index labels are plain strings.
pub type Label = String;

/// The reserved bottom sentinel used by exponential shapes.
pub const BOT: &str = "bot";

/// Encoding of a tagged pair `⟨a, b⟩` as a label.
pub fn pair_label(a: &str, b: &str) -> Label {
    format!("({a},{b})")
}

/// Encoding of a tuple (in particular a choice function) as a label.
/// The empty tuple encodes the unique empty choice function as `()`.
pub fn tuple_label<S: AsRef<str>>(parts: &[S]) -> Label {
    let mut out = String::from("(");
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(p.as_ref());
    }
    out.push(')');
    out
}

/// Splits a `(j,i)` pair key at its top-level comma, respecting nested
/// `()`, `[]` and `{}` so that composite labels (e.g. exponential shapes)
/// survive a round trip through the file schemas.
pub fn split_pair_label(key: &str) -> Result<(String, String)> {
    let inner = key
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| Error::MalformedInput(format!("entry key `{key}` is not a `(j,i)` pair")))?;
    let mut depth = 0i32;
    for (pos, ch) in inner.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => {
                return Ok((inner[..pos].to_string(), inner[pos + 1..].to_string()));
            }
            _ => {}
        }
    }
    Err(Error::MalformedInput(format!(
        "entry key `{key}` has no top-level comma"
    )))
}

/// A label is embeddable in pair/tuple keys when its brackets are balanced
/// and it carries no top-level comma.
pub fn label_embeddable(label: &str) -> bool {
    let mut depth = 0i32;
    for ch in label.chars() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            ',' if depth == 0 => return false,
            _ => {}
        }
        if depth < 0 {
            return false;
        }
    }
    depth == 0
}

/// Iterator over all choice functions `Π_k {0..domains[k]}` in
/// lexicographic order with the leftmost coordinate most significant.
///
/// The empty product yields exactly one empty choice; any empty factor
/// yields none.
pub fn choice_functions(domains: &[usize]) -> ChoiceFunctions {
    let empty = domains.iter().any(|&d| d == 0);
    ChoiceFunctions {
        domains: domains.to_vec(),
        current: vec![0; domains.len()],
        done: empty,
    }
}

pub struct ChoiceFunctions {
    domains: Vec<usize>,
    current: Vec<usize>,
    done: bool,
}

impl Iterator for ChoiceFunctions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let item = self.current.clone();
        // Odometer increment, rightmost coordinate fastest.
        let mut k = self.domains.len();
        loop {
            if k == 0 {
                self.done = true;
                break;
            }
            k -= 1;
            self.current[k] += 1;
            if self.current[k] < self.domains[k] {
                break;
            }
            self.current[k] = 0;
        }
        Some(item)
    }
}

/// Number of choice functions, saturating at `u128::MAX`.
pub fn count_choice_functions(domains: &[usize]) -> u128 {
    domains
        .iter()
        .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
        .unwrap_or(u128::MAX)
}
