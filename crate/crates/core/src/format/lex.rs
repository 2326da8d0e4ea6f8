//! Line-level lexing shared by the parser and renderer.

/// A logical line: physical lines joined on trailing `\`, tagged with the
/// 1-based number of its first physical line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LogicalLine {
    pub number: usize,
    pub text: String,
}

pub(crate) fn logical_lines(input: &str) -> Vec<LogicalLine> {
    let mut out: Vec<LogicalLine> = Vec::new();
    let mut pending: Option<LogicalLine> = None;
    let physical = input.split('\n');
    for (i, raw) in physical.enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let number = i + 1;
        let line = match pending.take() {
            Some(mut open) => {
                open.text.push(' ');
                open.text.push_str(raw.trim_start());
                open
            }
            None => LogicalLine {
                number,
                text: raw.to_string(),
            },
        };
        let trimmed = line.text.trim_end();
        if let Some(head) = trimmed.strip_suffix('\\') {
            pending = Some(LogicalLine {
                number: line.number,
                text: head.trim_end().to_string(),
            });
        } else {
            out.push(line);
        }
    }
    if let Some(open) = pending {
        out.push(open);
    }
    // A trailing newline produces one empty final piece; drop it.
    if input.ends_with('\n') {
        if let Some(last) = out.last() {
            if last.text.is_empty() {
                out.pop();
            }
        }
    }
    out
}

/// Cuts a `#` comment: the first `#` outside double quotes that starts the
/// line or follows whitespace.
pub(crate) fn strip_comment(line: &str) -> &str {
    let mut in_quote = false;
    let mut escaped = false;
    let mut after_space = true;
    for (i, c) in line.char_indices() {
        if in_quote {
            if escaped {
                escaped = false;
            } else if c == '\\' {
                escaped = true;
            } else if c == '"' {
                in_quote = false;
            }
        } else if c == '"' {
            in_quote = true;
        } else if c == '#' && after_space {
            return &line[..i];
        }
        after_space = c.is_whitespace();
    }
    line
}

/// Reads a double-quoted string at the start of `s`. Returns the unescaped
/// content and the number of bytes consumed, or an error message with the
/// byte offset it applies to.
pub(crate) fn read_quoted(s: &str) -> Result<(String, usize), (usize, String)> {
    let mut chars = s.char_indices();
    match chars.next() {
        Some((_, '"')) => {}
        _ => return Err((0, "expected `\"`".to_string())),
    }
    let mut out = String::new();
    while let Some((i, c)) = chars.next() {
        match c {
            '"' => return Ok((out, i + 1)),
            '\\' => match chars.next() {
                Some((_, '"')) => out.push('"'),
                Some((_, '\\')) => out.push('\\'),
                Some((_, 'n')) => out.push('\n'),
                Some((_, 't')) => out.push('\t'),
                Some((_, 'r')) => out.push('\r'),
                Some((j, other)) => return Err((j, format!("unknown escape `\\{other}`"))),
                None => return Err((i, "unterminated string".to_string())),
            },
            c => out.push(c),
        }
    }
    Err((0, "unterminated string".to_string()))
}

pub(crate) fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// 1-based character column of byte offset `offset` in `line`.
pub(crate) fn column(line: &str, offset: usize) -> usize {
    line[..offset.min(line.len())].chars().count() + 1
}
